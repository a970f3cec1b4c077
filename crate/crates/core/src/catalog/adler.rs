use num_traits::Zero;

use crate::algebra::Rational;
use crate::yb::{MapError, Slot, SlotKind, SlotValue, YangBaxterMap};

/// `f̃₁ = f₂ − (β₁−β₂)/(f₁+f₂)`, `f̃₂ = f₁ − (β₂−β₁)/(f₁+f₂)`.
pub fn adler(
    beta: (&Rational, &Rational),
    f: (&Rational, &Rational),
) -> Result<(Rational, Rational), MapError> {
    let (b1, b2) = beta;
    let (f1, f2) = f;
    let sum = f1 + f2;
    if sum.is_zero() {
        return Err(MapError::SingularInput("f1 + f2 = 0".into()));
    }
    let shift = (b1 - b2) / &sum;
    Ok((f2 - &shift, f1 + &shift))
}

/// The Adler map on scalars, one parameter `β` per slot.
#[derive(Clone, Copy, Debug, Default)]
pub struct Adler;

impl YangBaxterMap for Adler {
    fn id(&self) -> &str {
        "adler"
    }

    fn slot_kind(&self) -> SlotKind {
        SlotKind::Scalar
    }

    fn param_arity(&self) -> usize {
        1
    }

    fn apply_slots(&self, x: &Slot, y: &Slot) -> Result<(SlotValue, SlotValue), MapError> {
        let (u, v) = adler((param(x)?, param(y)?), (scalar(x)?, scalar(y)?))?;
        Ok((SlotValue::Scalar(u), SlotValue::Scalar(v)))
    }
}

pub(crate) fn scalar(s: &Slot) -> Result<&Rational, MapError> {
    s.value.as_scalar().ok_or(MapError::SlotKindMismatch {
        expected: SlotKind::Scalar,
        found: s.value.kind(),
    })
}

pub(crate) fn param(s: &Slot) -> Result<&Rational, MapError> {
    s.param
        .as_ref()
        .ok_or(MapError::ParameterArity { expected: 1 })
}
