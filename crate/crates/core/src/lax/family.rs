use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{
    projector_from_pair, AlgebraError, Matrix, Poly, PolyMatrix, Rational, Subspace,
};
use crate::catalog::{crystal_level, rank_one_projector};
use crate::yb::{LaxMode, Slot, SlotKind, SlotValue};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaxError {
    #[error("the {family} family does not accept {found} slots")]
    UnsupportedSlot { family: String, found: SlotKind },
    #[error("the {0} family needs a parameter on every slot")]
    MissingParameter(String),
    #[error("group action is undefined here: {0}")]
    SingularAction(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A rule `x ↦ A(x, λ; ζ)` with entries polynomial in `ζ`.
pub trait LaxFamily: Send + Sync {
    fn id(&self) -> &str;

    /// The comparison under which the family's refactorization holds.
    fn mode(&self) -> LaxMode;

    /// Highest power of `ζ` in any entry.
    fn degree(&self) -> usize;

    fn matrix(&self, slot: &Slot) -> Result<PolyMatrix, LaxError>;

    /// The parameter of a slot: the attached one by default.
    fn level(&self, slot: &Slot) -> Result<Rational, LaxError> {
        slot.param
            .clone()
            .ok_or_else(|| LaxError::MissingParameter(self.id().to_string()))
    }

    /// Action of the family's group on `X`, for a matrix `g` obtained by
    /// evaluating the family at a number.
    fn act(&self, g: &Matrix, value: &SlotValue) -> Result<SlotValue, LaxError>;
}

fn unsupported(family: &str, value: &SlotValue) -> LaxError {
    LaxError::UnsupportedSlot {
        family: family.to_string(),
        found: value.kind(),
    }
}

/// `[[f, f² + β − ζ], [1, f]]`, determinant `ζ − β`.
pub fn lax_adler(f: &Rational, beta: &Rational) -> PolyMatrix {
    PolyMatrix::from_fn(2, |i, j| match (i, j) {
        (0, 1) => Poly::linear(f * f + beta, -Rational::one()),
        (1, 0) => Poly::one(),
        _ => Poly::constant(f.clone()),
    })
}

/// `(ζ − λ)I + 2λP` for the projector with kernel `K` and image `L`.
pub fn lax_projector(
    kernel: &Subspace,
    image: &Subspace,
    lambda: &Rational,
) -> Result<PolyMatrix, AlgebraError> {
    Ok(lax_projector_matrix(
        &projector_from_pair(kernel, image)?,
        lambda,
    ))
}

pub fn lax_projector_matrix(p: &Matrix, lambda: &Rational) -> PolyMatrix {
    let n = p.rows();
    let constant = &p.scale(&(lambda + lambda)) - &Matrix::identity(n).scale(lambda);
    PolyMatrix::linear(&constant, &Matrix::identity(n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CrystalSide {
    /// `x` on the diagonal, `−1` below it and `−ζ` in the top-right corner.
    A,
    /// `y` on the diagonal, `−1` above it and `−ζ` in the bottom-left corner.
    B,
}

/// The bidiagonal matrices with a corner entry, as printed (these are the
/// inverses of the group elements acting on the crystal).
pub fn lax_crystal(coords: &[Rational], side: CrystalSide) -> PolyMatrix {
    let n = coords.len();
    let minus_one = || Poly::constant(-Rational::one());
    let corner = || Poly::monomial(-Rational::one(), 1);
    PolyMatrix::from_fn(n, |i, j| {
        let diag = if i == j {
            Poly::constant(coords[i].clone())
        } else {
            Poly::zero()
        };
        let (off, corner_at) = match side {
            CrystalSide::A => (i == j + 1, (0, n - 1)),
            CrystalSide::B => (j == i + 1, (n - 1, 0)),
        };
        let mut entry = diag;
        if off {
            entry = &entry + &minus_one();
        }
        if (i, j) == corner_at {
            entry = &entry + &corner();
        }
        entry
    })
}

#[derive(Clone, Copy, Debug, Default)]
pub struct AdlerLax;

impl LaxFamily for AdlerLax {
    fn id(&self) -> &str {
        "adler"
    }

    fn mode(&self) -> LaxMode {
        LaxMode::Strict
    }

    fn degree(&self) -> usize {
        1
    }

    fn matrix(&self, slot: &Slot) -> Result<PolyMatrix, LaxError> {
        let f = slot
            .value
            .as_scalar()
            .ok_or_else(|| unsupported(self.id(), &slot.value))?;
        Ok(lax_adler(f, &self.level(slot)?))
    }

    /// Möbius action on the projective line.
    fn act(&self, g: &Matrix, value: &SlotValue) -> Result<SlotValue, LaxError> {
        let z = value
            .as_scalar()
            .ok_or_else(|| unsupported(self.id(), value))?;
        let num = g.get(0, 0) * z + g.get(0, 1);
        let den = g.get(1, 0) * z + g.get(1, 1);
        if den.is_zero() {
            return Err(LaxError::SingularAction(
                "image is the point at infinity".into(),
            ));
        }
        Ok(SlotValue::Scalar(num / den))
    }
}

/// `(ζ − λ)I + 2λP` on projectors given either as rank-one `(ξ, η)` pairs or
/// as kernel/image pairs.
#[derive(Clone, Copy, Debug, Default)]
pub struct ProjectorLax;

impl ProjectorLax {
    fn projector(&self, value: &SlotValue) -> Result<Matrix, LaxError> {
        match value {
            SlotValue::VectorCovector { vector, covector } => {
                Ok(rank_one_projector(vector, covector)?)
            }
            SlotValue::Projector { kernel, image } => Ok(projector_from_pair(kernel, image)?),
            other => Err(unsupported(self.id(), other)),
        }
    }
}

impl LaxFamily for ProjectorLax {
    fn id(&self) -> &str {
        "projector"
    }

    fn mode(&self) -> LaxMode {
        LaxMode::Strict
    }

    fn degree(&self) -> usize {
        1
    }

    fn matrix(&self, slot: &Slot) -> Result<PolyMatrix, LaxError> {
        Ok(lax_projector_matrix(
            &self.projector(&slot.value)?,
            &self.level(slot)?,
        ))
    }

    /// `ξ ↦ gξ`, `η ↦ gᵀη`; on pairs `L ↦ gL`, `K ↦ g⁻¹K`.
    fn act(&self, g: &Matrix, value: &SlotValue) -> Result<SlotValue, LaxError> {
        match value {
            SlotValue::VectorCovector { vector, covector } => Ok(SlotValue::VectorCovector {
                vector: g.mul_vec(vector),
                covector: g.transpose().mul_vec(covector),
            }),
            SlotValue::Projector { kernel, image } => {
                let inverse = g
                    .inverse()
                    .ok_or_else(|| LaxError::SingularAction("matrix is singular".into()))?;
                Ok(SlotValue::Projector {
                    kernel: kernel.image_under(&inverse)?,
                    image: image.image_under(g)?,
                })
            }
            other => Err(unsupported(self.id(), other)),
        }
    }
}

/// The crystal matrices. The level of a slot is the product of its
/// coordinates. The action goes through the embeddings
/// `z(x) = (1 : x₁ : x₁x₂ : … : x₁⋯x_{n−1})` (side B) and
/// `w(y) = (y₂⋯y_n : … : y_n : 1)` (side A); since the printed matrices are
/// inverses, a point moves by `g⁻¹`.
#[derive(Clone, Copy, Debug)]
pub struct CrystalLax {
    pub side: CrystalSide,
}

impl CrystalLax {
    pub fn new(side: CrystalSide) -> Self {
        CrystalLax { side }
    }
}

fn tuple<'a>(family: &str, value: &'a SlotValue) -> Result<&'a [Rational], LaxError> {
    value.as_tuple().ok_or_else(|| unsupported(family, value))
}

/// `(1, x₁, x₁x₂, …, x₁⋯x_{n−1})`
pub fn crystal_z(x: &[Rational]) -> Vec<Rational> {
    let mut out = Vec::with_capacity(x.len());
    let mut acc = Rational::one();
    for xi in x {
        out.push(acc.clone());
        acc *= xi;
    }
    out
}

/// `(y₂⋯y_n, y₃⋯y_n, …, y_n, 1)`
pub fn crystal_w(y: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::one(); y.len()];
    for j in (0..y.len().saturating_sub(1)).rev() {
        out[j] = &out[j + 1] * &y[j + 1];
    }
    out
}

fn decode_z(z: &[Rational], level: &Rational) -> Result<Vec<Rational>, LaxError> {
    if z.iter().any(Zero::is_zero) {
        return Err(LaxError::SingularAction("image leaves the torus".into()));
    }
    let n = z.len();
    let mut x: Vec<Rational> = (0..n - 1).map(|j| &z[j + 1] / &z[j]).collect();
    x.push(level * &z[0] / &z[n - 1]);
    Ok(x)
}

fn decode_w(w: &[Rational], level: &Rational) -> Result<Vec<Rational>, LaxError> {
    if w.iter().any(Zero::is_zero) {
        return Err(LaxError::SingularAction("image leaves the torus".into()));
    }
    let n = w.len();
    let mut y = vec![level * &w[n - 1] / &w[0]];
    y.extend((1..n).map(|j| &w[j - 1] / &w[j]));
    Ok(y)
}

impl LaxFamily for CrystalLax {
    fn id(&self) -> &str {
        match self.side {
            CrystalSide::A => "crystal-a",
            CrystalSide::B => "crystal-b",
        }
    }

    fn mode(&self) -> LaxMode {
        LaxMode::Strict
    }

    fn degree(&self) -> usize {
        1
    }

    fn matrix(&self, slot: &Slot) -> Result<PolyMatrix, LaxError> {
        Ok(lax_crystal(tuple(self.id(), &slot.value)?, self.side))
    }

    fn level(&self, slot: &Slot) -> Result<Rational, LaxError> {
        Ok(crystal_level(tuple(self.id(), &slot.value)?))
    }

    fn act(&self, g: &Matrix, value: &SlotValue) -> Result<SlotValue, LaxError> {
        let coords = tuple(self.id(), value)?;
        let level = crystal_level(coords);
        let inverse = g
            .inverse()
            .ok_or_else(|| LaxError::SingularAction("matrix is singular".into()))?;
        let out = match self.side {
            CrystalSide::B => decode_z(&inverse.mul_vec(&crystal_z(coords)), &level)?,
            CrystalSide::A => decode_w(&inverse.mul_vec(&crystal_w(coords)), &level)?,
        };
        Ok(SlotValue::Tuple(out))
    }
}
