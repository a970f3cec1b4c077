//! Maps on projectors: rank-one soliton polarizations and the general
//! Grassmannian form acting on kernel/image pairs.

use num_traits::{One, Zero};

use crate::algebra::{projector_from_pair, AlgebraError, BilinearForm, Matrix, Rational, Subspace};
use crate::yb::{MapError, Slot, SlotKind, SlotValue, YangBaxterMap};

use super::adler::param;

fn pairing(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `ξ ⊗ η / (ξ, η)`.
pub fn rank_one_projector(xi: &[Rational], eta: &[Rational]) -> Result<Matrix, AlgebraError> {
    if xi.len() != eta.len() {
        return Err(AlgebraError::DimensionMismatch(
            "vector and covector lengths differ".into(),
        ));
    }
    let p = pairing(xi, eta);
    if p.is_zero() {
        return Err(AlgebraError::NotAProjector);
    }
    Ok(Matrix::outer(xi, eta).scale(&(Rational::one() / p)))
}

/// `(K, L) = (ker η, span ξ)`, the kernel/image pair of the rank-one projector.
pub fn rank_one_pair(
    xi: &[Rational],
    eta: &[Rational],
) -> Result<(Subspace, Subspace), AlgebraError> {
    let image = Subspace::span(xi.len(), &[xi.to_vec()])?;
    Ok((Subspace::annihilator(eta), image))
}

fn vector_covector(s: &Slot) -> Result<(&[Rational], &[Rational]), MapError> {
    s.value
        .as_vector_covector()
        .ok_or(MapError::SlotKindMismatch {
            expected: SlotKind::VectorCovector,
            found: s.value.kind(),
        })
}

fn projector_pair(s: &Slot) -> Result<(&Subspace, &Subspace), MapError> {
    s.value.as_projector().ok_or(MapError::SlotKindMismatch {
        expected: SlotKind::Projector,
        found: s.value.kind(),
    })
}

fn axpy(x: &[Rational], c: &Rational, y: &[Rational]) -> Vec<Rational> {
    x.iter().zip(y).map(|(a, b)| a + c * b).collect()
}

/// Polarization change of two interacting rank-one solitons with velocities
/// `λ₁`, `λ₂`. Slots are `(ξ, η)` pairs, compared through the projector they
/// induce.
#[derive(Clone, Copy, Debug)]
pub struct SolitonRank1 {
    pub dim: usize,
}

impl SolitonRank1 {
    pub fn new(dim: usize) -> Self {
        SolitonRank1 { dim }
    }
}

impl YangBaxterMap for SolitonRank1 {
    fn id(&self) -> &str {
        "soliton-rank1"
    }

    fn slot_kind(&self) -> SlotKind {
        SlotKind::VectorCovector
    }

    fn param_arity(&self) -> usize {
        1
    }

    fn apply_slots(&self, x: &Slot, y: &Slot) -> Result<(SlotValue, SlotValue), MapError> {
        let (l1, l2) = (param(x)?, param(y)?);
        let (xi1, eta1) = vector_covector(x)?;
        let (xi2, eta2) = vector_covector(y)?;
        if [xi1, eta1, xi2, eta2].iter().any(|v| v.len() != self.dim) {
            return Err(AlgebraError::DimensionMismatch(format!(
                "expected vectors of length {}",
                self.dim
            ))
            .into());
        }
        if l1 == l2 {
            return Err(MapError::ParameterCollision("lambda1 = lambda2".into()));
        }
        let p11 = pairing(xi1, eta1);
        let p22 = pairing(xi2, eta2);
        if p11.is_zero() || p22.is_zero() {
            return Err(MapError::SingularInput("(xi, eta) = 0".into()));
        }
        let p12 = pairing(xi1, eta2);
        let p21 = pairing(xi2, eta1);
        let two = Rational::from_integer(2.into());
        let c1 = &two * l2 / ((l1 - l2) * &p22);
        let c2 = &two * l1 / ((l2 - l1) * &p11);
        let new_xi1 = axpy(xi1, &(&c1 * &p12), xi2);
        let new_eta1 = axpy(eta1, &(&c1 * &p21), eta2);
        let new_xi2 = axpy(xi2, &(&c2 * &p21), xi1);
        let new_eta2 = axpy(eta2, &(&c2 * &p12), eta1);
        if pairing(&new_xi1, &new_eta1).is_zero() || pairing(&new_xi2, &new_eta2).is_zero() {
            return Err(MapError::DegenerateOutput("output pairing vanishes".into()));
        }
        Ok((
            SlotValue::VectorCovector {
                vector: new_xi1,
                covector: new_eta1,
            },
            SlotValue::VectorCovector {
                vector: new_xi2,
                covector: new_eta2,
            },
        ))
    }

    fn equivalent(&self, a: &SlotValue, b: &SlotValue) -> bool {
        match (a.as_vector_covector(), b.as_vector_covector()) {
            (Some((x1, e1)), Some((x2, e2))) => {
                match (rank_one_projector(x1, e1), rank_one_projector(x2, e2)) {
                    (Ok(p), Ok(q)) => p == q,
                    _ => a == b,
                }
            }
            _ => a == b,
        }
    }
}

fn check_params(l1: &Rational, l2: &Rational) -> Result<(), MapError> {
    if l1.is_zero() || l2.is_zero() {
        return Err(MapError::SingularInput("zero parameter".into()));
    }
    if l1 == l2 || *l1 == -l2.clone() {
        return Err(MapError::ParameterCollision("lambda1 = ±lambda2".into()));
    }
    Ok(())
}

/// `I + c·P`
fn shifted(p: &Matrix, c: &Rational) -> Matrix {
    &Matrix::identity(p.rows()) + &p.scale(c)
}

fn image_of(m: &Matrix, s: &Subspace) -> Result<Subspace, MapError> {
    let out = s.image_under(m)?;
    if out.dim() != s.dim() {
        return Err(MapError::DegenerateOutput(
            "transformed subspace lost dimension".into(),
        ));
    }
    Ok(out)
}

/// The four transformed subspaces `(K̃₁, L̃₁, K̃₂, L̃₂)`.
fn grassmann_step(
    (l1, l2): (&Rational, &Rational),
    (k1, im1): (&Subspace, &Subspace),
    (k2, im2): (&Subspace, &Subspace),
) -> Result<[Subspace; 4], MapError> {
    check_params(l1, l2)?;
    let p1 = projector_from_pair(k1, im1)?;
    let p2 = projector_from_pair(k2, im2)?;
    let two = Rational::from_integer(2.into());
    let new_k1 = image_of(&shifted(&p2, &(-(&two * l2) / (l1 + l2))), k1)?;
    let new_l2 = image_of(&shifted(&p1, &(&two * l1 / (l2 - l1))), im2)?;
    let new_k2 = image_of(&shifted(&p1, &(-(&two * l1) / (l1 + l2))), k2)?;
    let new_l1 = image_of(&shifted(&p2, &(&two * l2 / (l1 - l2))), im1)?;
    Ok([new_k1, new_l1, new_k2, new_l2])
}

/// The projector map on `(K, L)` pairs in `Q^dim` with `dim L = rank`.
#[derive(Clone, Copy, Debug)]
pub struct GrassmannProjector {
    pub dim: usize,
    pub rank: usize,
}

impl GrassmannProjector {
    pub fn new(dim: usize, rank: usize) -> Self {
        GrassmannProjector { dim, rank }
    }
}

impl YangBaxterMap for GrassmannProjector {
    fn id(&self) -> &str {
        "grassmann"
    }

    fn slot_kind(&self) -> SlotKind {
        SlotKind::Projector
    }

    fn param_arity(&self) -> usize {
        1
    }

    fn apply_slots(&self, x: &Slot, y: &Slot) -> Result<(SlotValue, SlotValue), MapError> {
        let [k1, l1, k2, l2] = grassmann_step(
            (param(x)?, param(y)?),
            projector_pair(x)?,
            projector_pair(y)?,
        )?;
        if !k1.is_complement_of(&l1) || !k2.is_complement_of(&l2) {
            return Err(MapError::DegenerateOutput(
                "transformed pair is not complementary".into(),
            ));
        }
        Ok((
            SlotValue::Projector {
                kernel: k1,
                image: l1,
            },
            SlotValue::Projector {
                kernel: k2,
                image: l2,
            },
        ))
    }
}

/// The restriction to projectors whose kernel is the orthogonal complement
/// of the image under a diagonal bilinear form. Only the images are
/// transformed; kernels are recomputed as complements.
#[derive(Clone, Debug)]
pub struct GrassmannSelfAdjoint {
    pub form: BilinearForm,
}

impl GrassmannSelfAdjoint {
    pub fn new(form: BilinearForm) -> Self {
        GrassmannSelfAdjoint { form }
    }

    /// `(L^⊥, L)`, or `IsotropicSubspace` when they are not complementary.
    pub fn slot_value(&self, image: Subspace) -> Result<SlotValue, MapError> {
        let kernel = image.orthogonal_complement(&self.form)?;
        if !kernel.is_complement_of(&image) {
            return Err(MapError::IsotropicSubspace);
        }
        Ok(SlotValue::Projector { kernel, image })
    }
}

impl YangBaxterMap for GrassmannSelfAdjoint {
    fn id(&self) -> &str {
        "grassmann-selfadjoint"
    }

    fn slot_kind(&self) -> SlotKind {
        SlotKind::Projector
    }

    fn param_arity(&self) -> usize {
        1
    }

    fn apply_slots(&self, x: &Slot, y: &Slot) -> Result<(SlotValue, SlotValue), MapError> {
        let (l1, l2) = (param(x)?, param(y)?);
        let (k1, im1) = projector_pair(x)?;
        let (k2, im2) = projector_pair(y)?;
        for (k, im) in [(k1, im1), (k2, im2)] {
            if *k != im.orthogonal_complement(&self.form)? {
                return Err(MapError::SingularInput(
                    "kernel is not the orthogonal complement of the image".into(),
                ));
            }
        }
        check_params(l1, l2)?;
        let p1 = projector_from_pair(k1, im1)?;
        let p2 = projector_from_pair(k2, im2)?;
        let two = Rational::from_integer(2.into());
        let new_l1 = image_of(&shifted(&p2, &(&two * l2 / (l1 - l2))), im1)?;
        let new_l2 = image_of(&shifted(&p1, &(&two * l1 / (l2 - l1))), im2)?;
        Ok((self.slot_value(new_l1)?, self.slot_value(new_l2)?))
    }
}
