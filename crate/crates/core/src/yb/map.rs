use thiserror::Error;

use crate::algebra::AlgebraError;

use super::{LabeledTuple, Slot, SlotKind, SlotValue};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("singular input: {0}")]
    SingularInput(String),
    #[error("parameter collision: {0}")]
    ParameterCollision(String),
    #[error("degenerate output: {0}")]
    DegenerateOutput(String),
    #[error("subspace meets its own orthogonal complement")]
    IsotropicSubspace,
    #[error("companion fiber is degenerate: {0}")]
    DegenerateFiber(String),
    #[error("expected a {expected} slot, found {found}")]
    SlotKindMismatch { expected: SlotKind, found: SlotKind },
    #[error("map takes {expected} parameter(s) per slot")]
    ParameterArity { expected: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl MapError {
    /// Errors that mark an input as lying outside the generic domain of the
    /// map. Samples hitting them are rejected, not counted as failures.
    pub fn is_domain_rejection(&self) -> bool {
        !matches!(
            self,
            MapError::SlotKindMismatch { .. } | MapError::ParameterArity { .. }
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum YbError {
    #[error("slot index {index} outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("R_ij needs i != j (got {0} twice)")]
    SameIndex(usize),
    #[error("a labeled tuple needs at least two slots, got {0}")]
    TooShort(usize),
    #[error("all slots of a tuple must have the same kind")]
    MixedKinds,
    #[error("R_{i}{j}: {source}")]
    Map {
        i: usize,
        j: usize,
        source: MapError,
    },
    #[error("T_{transfer} step {step} (R_{i}{j}): {source}")]
    TransferStep {
        transfer: usize,
        step: usize,
        i: usize,
        j: usize,
        source: MapError,
    },
}

impl YbError {
    /// The underlying map error, when the failure came from evaluating `R`.
    pub fn map_error(&self) -> Option<&MapError> {
        match self {
            YbError::Map { source, .. } | YbError::TransferStep { source, .. } => Some(source),
            _ => None,
        }
    }

    pub fn is_domain_rejection(&self) -> bool {
        self.map_error().is_some_and(MapError::is_domain_rejection)
    }
}

/// A map `R(λ, μ): X × X → X × X`. Parameters travel with the slots.
pub trait YangBaxterMap: Send + Sync {
    fn id(&self) -> &str;

    fn slot_kind(&self) -> SlotKind;

    /// 0 for maps without parameters, 1 when every slot carries one.
    fn param_arity(&self) -> usize;

    /// `(u, v) = R(λ, μ)(x, y)` where `λ`, `μ` are the parameters of `x`, `y`.
    /// Inputs have already been checked for kind and parameter arity.
    fn apply_slots(&self, x: &Slot, y: &Slot) -> Result<(SlotValue, SlotValue), MapError>;

    /// Equality on `X`. Maps acting on projective data override this.
    fn equivalent(&self, a: &SlotValue, b: &SlotValue) -> bool {
        a == b
    }
}

fn check_slot(map: &dyn YangBaxterMap, s: &Slot) -> Result<(), MapError> {
    let found = s.value.kind();
    if found != map.slot_kind() {
        return Err(MapError::SlotKindMismatch {
            expected: map.slot_kind(),
            found,
        });
    }
    if s.param.is_some() != (map.param_arity() == 1) {
        return Err(MapError::ParameterArity {
            expected: map.param_arity(),
        });
    }
    Ok(())
}

/// `R(λ, μ)(x, y)` with kind and parameter checks.
pub fn apply(
    map: &dyn YangBaxterMap,
    x: &Slot,
    y: &Slot,
) -> Result<(SlotValue, SlotValue), MapError> {
    check_slot(map, x)?;
    check_slot(map, y)?;
    map.apply_slots(x, y)
}

/// `R_ij` on a tuple, 1-based. Writes `f(x_i, x_j)` to slot `i` and
/// `g(x_i, x_j)` to slot `j` for both `i < j` and `i > j`; parameters stay at
/// their positions.
pub fn apply_rij(
    map: &dyn YangBaxterMap,
    i: usize,
    j: usize,
    t: &LabeledTuple,
) -> Result<LabeledTuple, YbError> {
    let n = t.len();
    for index in [i, j] {
        if index == 0 || index > n {
            return Err(YbError::IndexOutOfRange { index, n });
        }
    }
    if i == j {
        return Err(YbError::SameIndex(i));
    }
    let (f, g) =
        apply(map, t.slot(i), t.slot(j)).map_err(|source| YbError::Map { i, j, source })?;
    Ok(t.with_values(i, f, j, g))
}

/// Braid form `S = P∘R`: `(x, y) ↦ (v, u)` where `(u, v) = R(x, y)`. The
/// parameters are exchanged together with the values.
pub fn braid(map: &dyn YangBaxterMap, x: &Slot, y: &Slot) -> Result<(Slot, Slot), MapError> {
    let (u, v) = apply(map, x, y)?;
    Ok((Slot::new(v, y.param.clone()), Slot::new(u, x.param.clone())))
}
