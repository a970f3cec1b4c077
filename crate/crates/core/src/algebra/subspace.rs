use std::fmt;

use num_traits::{One, Zero};

use super::{AlgebraError, Matrix, Rational};

/// Linear subspace of `Q^n`, stored by a basis in reduced column echelon form.
///
/// The echelon basis is unique, so two subspaces are equal exactly when their
/// stored bases are equal entrywise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    /// `ambient × dim`, columns are the canonical basis vectors.
    basis: Matrix,
}

impl Subspace {
    /// The span of arbitrary (possibly dependent) vectors.
    pub fn span(ambient: usize, vectors: &[Vec<Rational>]) -> Result<Self, AlgebraError> {
        if vectors.iter().any(|v| v.len() != ambient) {
            return Err(AlgebraError::DimensionMismatch(format!(
                "spanning vector length differs from ambient dimension {ambient}"
            )));
        }
        if vectors.is_empty() {
            return Ok(Self::zero(ambient));
        }
        let stacked = Matrix::from_rows(vectors)?;
        let (reduced, pivots) = stacked.rref();
        let rows: Vec<Vec<Rational>> = (0..pivots.len()).map(|i| reduced.row(i)).collect();
        Ok(Subspace {
            ambient,
            basis: Matrix::from_columns(ambient, &rows)?,
        })
    }

    /// Column space of a matrix.
    pub fn column_space(m: &Matrix) -> Self {
        Self::span(m.rows(), &m.columns()).expect("columns have the ambient length")
    }

    /// Right null space of a matrix.
    pub fn kernel_of(m: &Matrix) -> Self {
        Self::span(m.cols(), &m.null_space()).expect("null vectors have the ambient length")
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(ambient, 0),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
        }
    }

    /// Kernel of a covector: `{v : (v, η) = 0}`.
    pub fn annihilator(covector: &[Rational]) -> Self {
        let row = Matrix::from_rows(&[covector.to_vec()]).expect("single row");
        Self::kernel_of(&row)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.columns()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        let mut vectors = self.vectors();
        vectors.push(v.to_vec());
        Matrix::from_rows(&vectors).expect("equal lengths").rank() == self.dim()
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, AlgebraError> {
        if self.ambient != other.ambient {
            return Err(AlgebraError::DimensionMismatch(
                "subspaces live in different spaces".into(),
            ));
        }
        let mut vectors = self.vectors();
        vectors.extend(other.vectors());
        Self::span(self.ambient, &vectors)
    }

    /// `self ⊕ other` is the whole ambient space.
    pub fn is_complement_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient
            && self.dim() + other.dim() == self.ambient
            && self.sum(other).is_ok_and(|s| s.dim() == self.ambient)
    }

    /// Image of the subspace under a linear map.
    pub fn image_under(&self, m: &Matrix) -> Result<Subspace, AlgebraError> {
        if m.cols() != self.ambient {
            return Err(AlgebraError::DimensionMismatch(
                "map domain differs from ambient space".into(),
            ));
        }
        let images: Vec<Vec<Rational>> = self.vectors().iter().map(|v| m.mul_vec(v)).collect();
        Self::span(m.rows(), &images)
    }

    /// Orthogonal complement under a diagonal symmetric bilinear form.
    pub fn orthogonal_complement(&self, form: &BilinearForm) -> Result<Subspace, AlgebraError> {
        if form.dim() != self.ambient {
            return Err(AlgebraError::DimensionMismatch(
                "form dimension differs from ambient space".into(),
            ));
        }
        if self.dim() == 0 {
            return Ok(Self::full(self.ambient));
        }
        let gram = &self.basis.transpose() * &form.matrix();
        Ok(Self::kernel_of(&gram))
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .vectors()
            .iter()
            .map(|v| {
                let entries: Vec<String> = v.iter().map(ToString::to_string).collect();
                format!("({})", entries.join(","))
            })
            .collect();
        write!(f, "span{{{}}}", parts.join(", "))
    }
}

/// Diagonal symmetric bilinear form `Σ g_i x_i y_i` on `Q^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearForm {
    diagonal: Vec<Rational>,
}

impl BilinearForm {
    pub fn euclidean(dim: usize) -> Self {
        BilinearForm {
            diagonal: vec![Rational::one(); dim],
        }
    }

    pub fn diagonal(entries: Vec<Rational>) -> Result<Self, AlgebraError> {
        if entries.iter().any(Zero::is_zero) {
            return Err(AlgebraError::SingularMatrix);
        }
        Ok(BilinearForm { diagonal: entries })
    }

    pub fn dim(&self) -> usize {
        self.diagonal.len()
    }

    pub fn matrix(&self) -> Matrix {
        Matrix::diagonal(&self.diagonal)
    }

    pub fn entries(&self) -> &[Rational] {
        &self.diagonal
    }
}

/// The projector with kernel `kernel` and image `image`.
pub fn projector_from_pair(kernel: &Subspace, image: &Subspace) -> Result<Matrix, AlgebraError> {
    let n = image.ambient_dim();
    if kernel.ambient_dim() != n {
        return Err(AlgebraError::DimensionMismatch(
            "kernel and image live in different spaces".into(),
        ));
    }
    if kernel.dim() + image.dim() != n {
        return Err(AlgebraError::DimensionMismatch(format!(
            "dim K + dim L = {} + {} differs from {n}",
            kernel.dim(),
            image.dim()
        )));
    }
    let mut columns = image.vectors();
    columns.extend(kernel.vectors());
    let frame = Matrix::from_columns(n, &columns)?;
    let inverse = frame
        .inverse()
        .ok_or(AlgebraError::ComplementarityViolation)?;
    let keep = image.dim();
    let selector = Matrix::from_fn(n, n, |i, j| {
        if i == j && i < keep {
            Rational::one()
        } else {
            Rational::zero()
        }
    });
    Ok(&(&frame * &selector) * &inverse)
}

/// Splits a projector into `(image, kernel)`.
pub fn image_kernel(p: &Matrix) -> Result<(Subspace, Subspace), AlgebraError> {
    if !p.is_square() {
        return Err(AlgebraError::DimensionMismatch(
            "projector must be square".into(),
        ));
    }
    if !p.is_idempotent() {
        return Err(AlgebraError::NotAProjector);
    }
    Ok((Subspace::column_space(p), Subspace::kernel_of(p)))
}
