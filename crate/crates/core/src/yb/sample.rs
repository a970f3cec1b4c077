//! Seeded sampling of labeled tuples.
//!
//! Randomness comes from SplitMix64 (state += 0x9E3779B97F4A7C15, then the
//! standard xor-shift-multiply finalizer). A run with seed `s` uses a master
//! generator with initial state `s`; the `k`-th candidate tuple is drawn from
//! a fresh SplitMix64 whose state is the `k`-th output of the master. A
//! rational is drawn as numerator `(u mod (2N+1)) − N` followed by
//! denominator `1 + (u mod D)` with `N`, `D` from [`RationalRange`].

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use thiserror::Error;

use num_traits::Zero;

use crate::algebra::{BilinearForm, Rational, Subspace};

use super::{LabeledTuple, Slot, SlotValue};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SampleError {
    #[error("count must be at least 1")]
    EmptyRequest,
    #[error("tuple length must be at least 2, got {0}")]
    TupleTooShort(usize),
    #[error("gave up after {attempts} attempts with {accepted} admissible samples")]
    ExhaustedRejections { attempts: usize, accepted: usize },
}

pub struct SampleRng(SplitMix64);

impl SampleRng {
    pub fn new(state: u64) -> Self {
        SampleRng(SplitMix64::from_seed(state.to_le_bytes()))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform-by-modulo draw from `0..bound`.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    pub fn rational(&mut self, range: &RationalRange) -> Rational {
        let span = 2 * range.max_abs_numerator + 1;
        let numer = self.below(span) as i64 - range.max_abs_numerator as i64;
        let denom = 1 + self.below(range.max_denominator) as i64;
        crate::algebra::rat(numer, denom)
    }

    pub fn vector(&mut self, len: usize, range: &RationalRange) -> Vec<Rational> {
        (0..len).map(|_| self.rational(range)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RationalRange {
    pub max_abs_numerator: u64,
    pub max_denominator: u64,
}

impl Default for RationalRange {
    fn default() -> Self {
        RationalRange {
            max_abs_numerator: 12,
            max_denominator: 6,
        }
    }
}

/// What a single slot value looks like.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SlotDomain {
    Scalar,
    /// `(ξ, η)` with `(ξ, η) ≠ 0`.
    VectorCovector {
        dim: usize,
    },
    /// `(K, L)` with `dim L = rank` and `K ⊕ L = Q^dim`.
    Projector {
        dim: usize,
        rank: usize,
    },
    /// `(L^⊥, L)` with `dim L = rank`, non-isotropic under `form`.
    SelfAdjointProjector {
        rank: usize,
        form: BilinearForm,
    },
    /// `n`-tuples with no zero coordinate.
    Crystal {
        len: usize,
    },
}

/// Constraint on the parameters of one tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamRule {
    /// Slots carry no parameter.
    None,
    Any,
    Nonzero,
    /// Nonzero and pairwise distinct.
    DistinctNonzero,
    /// Nonzero and `λ_i ≠ ±λ_j` for `i ≠ j`.
    DistinctNonOpposite,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Domain {
    pub slot: SlotDomain,
    pub params: ParamRule,
    pub range: RationalRange,
}

impl Domain {
    pub fn new(slot: SlotDomain, params: ParamRule) -> Self {
        Domain {
            slot,
            params,
            range: RationalRange::default(),
        }
    }

    /// One slot value, or the reason it was rejected.
    pub fn draw_value(&self, rng: &mut SampleRng) -> Result<SlotValue, String> {
        let range = &self.range;
        match &self.slot {
            SlotDomain::Scalar => Ok(SlotValue::Scalar(rng.rational(range))),
            SlotDomain::VectorCovector { dim } => {
                let vector = rng.vector(*dim, range);
                let covector = rng.vector(*dim, range);
                let pairing: Rational = vector.iter().zip(&covector).map(|(a, b)| a * b).sum();
                if pairing.is_zero() {
                    return Err("(xi, eta) = 0".into());
                }
                Ok(SlotValue::VectorCovector { vector, covector })
            }
            SlotDomain::Projector { dim, rank } => {
                let image_vectors: Vec<_> = (0..*rank).map(|_| rng.vector(*dim, range)).collect();
                let kernel_vectors: Vec<_> =
                    (0..dim - rank).map(|_| rng.vector(*dim, range)).collect();
                let image = Subspace::span(*dim, &image_vectors).map_err(|e| e.to_string())?;
                let kernel = Subspace::span(*dim, &kernel_vectors).map_err(|e| e.to_string())?;
                if !kernel.is_complement_of(&image) {
                    return Err("kernel and image are not complementary".into());
                }
                Ok(SlotValue::Projector { kernel, image })
            }
            SlotDomain::SelfAdjointProjector { rank, form } => {
                let dim = form.dim();
                let image_vectors: Vec<_> = (0..*rank).map(|_| rng.vector(dim, range)).collect();
                let image = Subspace::span(dim, &image_vectors).map_err(|e| e.to_string())?;
                if image.dim() != *rank {
                    return Err("spanning vectors are dependent".into());
                }
                let kernel = image
                    .orthogonal_complement(form)
                    .map_err(|e| e.to_string())?;
                if !kernel.is_complement_of(&image) {
                    return Err("image is isotropic".into());
                }
                Ok(SlotValue::Projector { kernel, image })
            }
            SlotDomain::Crystal { len } => {
                let coords = rng.vector(*len, range);
                if coords.iter().any(Zero::is_zero) {
                    return Err("zero coordinate".into());
                }
                Ok(SlotValue::Tuple(coords))
            }
        }
    }

    /// A full tuple of length `n`, or the reason it was rejected.
    pub fn draw_tuple(&self, n: usize, rng: &mut SampleRng) -> Result<LabeledTuple, String> {
        let mut slots = Vec::with_capacity(n);
        for _ in 0..n {
            let value = self.draw_value(rng)?;
            let param = match self.params {
                ParamRule::None => None,
                _ => Some(rng.rational(&self.range)),
            };
            slots.push(Slot::new(value, param));
        }
        self.check_params(&slots)?;
        LabeledTuple::new(slots).map_err(|e| e.to_string())
    }

    fn check_params(&self, slots: &[Slot]) -> Result<(), String> {
        let params: Vec<&Rational> = slots.iter().filter_map(|s| s.param.as_ref()).collect();
        let nonzero = params.iter().all(|p| !p.is_zero());
        let mut distinct = true;
        let mut non_opposite = true;
        for (a, p) in params.iter().enumerate() {
            for q in &params[a + 1..] {
                distinct &= p != q;
                non_opposite &= **p != -(*q).clone();
            }
        }
        let ok = match self.params {
            ParamRule::None | ParamRule::Any => true,
            ParamRule::Nonzero => nonzero,
            ParamRule::DistinctNonzero => nonzero && distinct,
            ParamRule::DistinctNonOpposite => nonzero && distinct && non_opposite,
        };
        if ok {
            Ok(())
        } else {
            Err(format!("parameters violate {:?}", self.params))
        }
    }
}

/// Draws `count` admissible tuples of length `n`. Rejected draws are skipped;
/// more than `50·count + 100` attempts is an error.
pub fn sample(
    domain: &Domain,
    n: usize,
    seed: u64,
    count: usize,
) -> Result<Vec<LabeledTuple>, SampleError> {
    if count == 0 {
        return Err(SampleError::EmptyRequest);
    }
    if n < 2 {
        return Err(SampleError::TupleTooShort(n));
    }
    let cap = 50 * count + 100;
    let mut master = SampleRng::new(seed);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count {
        if attempts == cap {
            return Err(SampleError::ExhaustedRejections {
                attempts,
                accepted: out.len(),
            });
        }
        attempts += 1;
        let mut rng = SampleRng::new(master.next_u64());
        if let Ok(t) = domain.draw_tuple(n, &mut rng) {
            out.push(t);
        }
    }
    Ok(out)
}
