use num_traits::{One, Zero};

use crate::algebra::{AlgebraError, Rational};
use crate::yb::{MapError, Slot, SlotKind, SlotValue, YangBaxterMap};

/// `P_j = Σ_{a=1}^{n} ∏_{k=1}^{a−1} x_{j+k} ∏_{k=a+1}^{n} y_{j+k}` for
/// `j = 1..=n`, indices taken mod `n` in `1..=n`. Returned 0-based.
pub fn crystal_polynomials(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let n = x.len();
    let at = |v: &[Rational], i: usize| v[(i - 1) % n].clone();
    (1..=n)
        .map(|j| {
            (1..=n)
                .map(|a| {
                    let xs = (1..a).fold(Rational::one(), |acc, k| acc * at(x, j + k));
                    (a + 1..=n).fold(xs, |acc, k| acc * at(y, j + k))
                })
                .sum()
        })
        .collect()
}

/// `x̃_j = x_j P_j / P_{j−1}`, `ỹ_j = y_j P_{j−1} / P_j`, with `P_0 = P_n`.
pub fn crystal(x: &[Rational], y: &[Rational]) -> Result<(Vec<Rational>, Vec<Rational>), MapError> {
    if x.len() != y.len() || x.is_empty() {
        return Err(AlgebraError::DimensionMismatch(
            "crystal tuples must have equal positive length".into(),
        )
        .into());
    }
    if x.iter().chain(y).any(Zero::is_zero) {
        return Err(MapError::SingularInput("zero coordinate".into()));
    }
    let p = crystal_polynomials(x, y);
    if p.iter().any(Zero::is_zero) {
        return Err(MapError::SingularInput("P_j = 0".into()));
    }
    let n = x.len();
    let prev = |j: usize| &p[(j + n - 1) % n];
    let new_x = (0..n).map(|j| &x[j] * &p[j] / prev(j)).collect();
    let new_y = (0..n).map(|j| &y[j] * prev(j) / &p[j]).collect();
    Ok((new_x, new_y))
}

/// Product of the coordinates; the level `λ` of a crystal tuple.
pub fn crystal_level(x: &[Rational]) -> Rational {
    x.iter().product()
}

/// The geometric-crystal map on pairs of `len`-tuples. It takes no explicit
/// parameters: the levels `λ = ∏x`, `μ = ∏y` are preserved by the map.
#[derive(Clone, Copy, Debug)]
pub struct Crystal {
    pub len: usize,
}

impl Crystal {
    pub fn new(len: usize) -> Self {
        Crystal { len }
    }
}

impl YangBaxterMap for Crystal {
    fn id(&self) -> &str {
        "crystal"
    }

    fn slot_kind(&self) -> SlotKind {
        SlotKind::Tuple
    }

    fn param_arity(&self) -> usize {
        0
    }

    fn apply_slots(&self, x: &Slot, y: &Slot) -> Result<(SlotValue, SlotValue), MapError> {
        let (Some(x), Some(y)) = (x.value.as_tuple(), y.value.as_tuple()) else {
            return Err(MapError::SlotKindMismatch {
                expected: SlotKind::Tuple,
                found: x.value.kind(),
            });
        };
        if x.len() != self.len || y.len() != self.len {
            return Err(AlgebraError::DimensionMismatch(format!(
                "expected tuples of length {}",
                self.len
            ))
            .into());
        }
        let (u, v) = crystal(x, y)?;
        Ok((SlotValue::Tuple(u), SlotValue::Tuple(v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    #[test]
    fn length_one_is_identity() {
        let (u, v) = crystal(&[int(3)], &[int(5)]).unwrap();
        assert_eq!((u, v), (vec![int(3)], vec![int(5)]));
    }

    #[test]
    fn worked_example() {
        let (u, v) = crystal(&[int(1), int(1)], &[int(2), int(3)]).unwrap();
        assert_eq!(u, vec![rat(3, 4), rat(4, 3)]);
        assert_eq!(v, vec![rat(8, 3), rat(9, 4)]);
    }

    #[test]
    fn levels_preserved() {
        let x = [rat(2, 3), int(-4), rat(5, 2)];
        let y = [int(7), rat(-1, 3), int(2)];
        let (u, v) = crystal(&x, &y).unwrap();
        assert_eq!(crystal_level(&u), crystal_level(&x));
        assert_eq!(crystal_level(&v), crystal_level(&y));
    }

    #[test]
    fn singular_inputs() {
        assert!(matches!(
            crystal(&[int(0), int(1)], &[int(1), int(1)]),
            Err(MapError::SingularInput(_))
        ));
        // P_1 = y_1 + x_2 = 0
        assert!(matches!(
            crystal(&[int(1), int(-2)], &[int(2), int(1)]),
            Err(MapError::SingularInput(_))
        ));
    }
}
