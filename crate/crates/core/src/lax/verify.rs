use std::sync::Arc;

use crate::algebra::{Matrix, Poly, PolyMatrix, Rational};
use crate::yb::{
    apply_rij, transfer_map, LabeledTuple, LaxMode, Outcome, Slot, YangBaxterMap, YbError,
};

use super::family::{
    lax_projector_matrix, AdlerLax, CrystalLax, CrystalSide, LaxError, LaxFamily, ProjectorLax,
};

/// Everything needed to check a map against its Lax matrices: the family
/// used for refactorization and monodromy, and the pair `(A, B)` whose
/// actions reproduce the two outputs of the map.
#[derive(Clone)]
pub struct LaxRepresentation {
    pub family: Arc<dyn LaxFamily>,
    pub a_side: Arc<dyn LaxFamily>,
    pub b_side: Arc<dyn LaxFamily>,
    /// The matrices are the inverses of the group elements, so the
    /// relations are checked with the factor order reversed.
    pub inverse_form: bool,
}

impl LaxRepresentation {
    pub fn adler() -> Self {
        let f: Arc<dyn LaxFamily> = Arc::new(AdlerLax);
        LaxRepresentation {
            family: f.clone(),
            a_side: f.clone(),
            b_side: f,
            inverse_form: false,
        }
    }

    pub fn projector() -> Self {
        let f: Arc<dyn LaxFamily> = Arc::new(ProjectorLax);
        LaxRepresentation {
            family: f.clone(),
            a_side: f.clone(),
            b_side: f,
            inverse_form: false,
        }
    }

    pub fn crystal() -> Self {
        let b: Arc<dyn LaxFamily> = Arc::new(CrystalLax::new(CrystalSide::B));
        LaxRepresentation {
            family: b.clone(),
            a_side: Arc::new(CrystalLax::new(CrystalSide::A)),
            b_side: b,
            inverse_form: true,
        }
    }
}

fn lax_outcome(e: LaxError) -> Outcome {
    match e {
        LaxError::SingularAction(_) | LaxError::Algebra(_) => Outcome::Rejected(e.to_string()),
        _ => Outcome::Fail(e.to_string()),
    }
}

fn yb_step<T>(r: Result<T, YbError>) -> Result<T, Outcome> {
    r.map_err(|e| Outcome::from_error(&e))
}

fn lax_step<T>(r: Result<T, LaxError>) -> Result<T, Outcome> {
    r.map_err(lax_outcome)
}

pub fn matrices_agree(mode: LaxMode, lhs: &PolyMatrix, rhs: &PolyMatrix) -> bool {
    match mode {
        LaxMode::Strict => lhs == rhs,
        LaxMode::Projective => lhs.proportional_to(rhs),
    }
}

/// `L(x)L(y)` against `L(ỹ)L(x̃)`.
pub fn refactorization_holds(
    family: &dyn LaxFamily,
    mode: LaxMode,
    (x, y): (&Slot, &Slot),
    (new_x, new_y): (&Slot, &Slot),
) -> Result<bool, LaxError> {
    let lhs = &family.matrix(x)? * &family.matrix(y)?;
    let rhs = &family.matrix(new_y)? * &family.matrix(new_x)?;
    Ok(matrices_agree(mode, &lhs, &rhs))
}

/// `A(x)A(y) = A(ỹ)A(x̃)` with `(x̃, ỹ) = R(x, y)` on a pair.
pub fn verify_refactorization(
    family: &dyn LaxFamily,
    map: &dyn YangBaxterMap,
    mode: LaxMode,
    t: &LabeledTuple,
) -> Outcome {
    let run = || -> Result<Outcome, Outcome> {
        let out = yb_step(apply_rij(map, 1, 2, t))?;
        let holds = lax_step(refactorization_holds(
            family,
            mode,
            (t.slot(1), t.slot(2)),
            (out.slot(1), out.slot(2)),
        ))?;
        Ok(if holds {
            Outcome::Pass
        } else {
            Outcome::Fail(format!(
                "A(x)A(y) differs from A(y~)A(x~) ({mode}); outputs {out}"
            ))
        })
    };
    run().unwrap_or_else(|o| o)
}

/// The product `first · second`, or `second · first` for inverse-form
/// representations.
fn ordered(rep: &LaxRepresentation, first: PolyMatrix, second: PolyMatrix) -> PolyMatrix {
    if rep.inverse_form {
        &second * &first
    } else {
        &first * &second
    }
}

/// On a triple `(x, y, z)` with `(x₂, y₁) = R(x, y)` and `(y₃, z₂) = R(y, z)`:
///
/// * `A(x)A(y) = A(y₁)A(x₂)`,
/// * `B(z)B(y) = B(y₃)B(z₂)`,
/// * `x₂ = B(y; ζ = λ)[x]` and `y₁ = A(x; ζ = μ)[y]` under the group action.
///
/// Inverse-form representations check the inverted relations.
pub fn verify_lax_from_map(
    rep: &LaxRepresentation,
    map: &dyn YangBaxterMap,
    mode: LaxMode,
    t: &LabeledTuple,
) -> Outcome {
    let run = || -> Result<Outcome, Outcome> {
        if t.len() != 3 {
            return Err(Outcome::Fail(format!(
                "expected a triple, got {} slots",
                t.len()
            )));
        }
        let (x, y, z) = (t.slot(1), t.slot(2), t.slot(3));
        let xy = yb_step(apply_rij(map, 1, 2, t))?;
        let yz = yb_step(apply_rij(map, 2, 3, t))?;
        let (x2, y1) = (xy.slot(1), xy.slot(2));
        let (y3, z2) = (yz.slot(2), yz.slot(3));

        let a = |s: &Slot| lax_step(rep.a_side.matrix(s));
        let b = |s: &Slot| lax_step(rep.b_side.matrix(s));
        if !matrices_agree(
            mode,
            &ordered(rep, a(x)?, a(y)?),
            &ordered(rep, a(y1)?, a(x2)?),
        ) {
            return Ok(Outcome::Fail(format!(
                "A-relation fails ({mode}); R(x,y) = {xy}"
            )));
        }
        if !matrices_agree(
            mode,
            &ordered(rep, b(z)?, b(y)?),
            &ordered(rep, b(y3)?, b(z2)?),
        ) {
            return Ok(Outcome::Fail(format!(
                "B-relation fails ({mode}); R(y,z) = {yz}"
            )));
        }

        let lambda = lax_step(rep.b_side.level(x))?;
        let mu = lax_step(rep.a_side.level(y))?;
        let acted_x = lax_step(rep.b_side.act(&b(y)?.eval(&lambda), &x.value))?;
        let acted_y = lax_step(rep.a_side.act(&a(x)?.eval(&mu), &y.value))?;
        if !map.equivalent(&acted_x, &x2.value) {
            return Ok(Outcome::Fail(format!(
                "B(y)[x] = {acted_x} but R gives {}",
                x2.value
            )));
        }
        if !map.equivalent(&acted_y, &y1.value) {
            return Ok(Outcome::Fail(format!(
                "A(x)[y] = {acted_y} but R gives {}",
                y1.value
            )));
        }
        Ok(Outcome::Pass)
    };
    run().unwrap_or_else(|o| o)
}

/// `M(ζ) = A(x_n) ⋯ A(x₁)`.
pub fn monodromy(family: &dyn LaxFamily, t: &LabeledTuple) -> Result<PolyMatrix, LaxError> {
    let factors = (1..=t.len())
        .rev()
        .map(|k| family.matrix(t.slot(k)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PolyMatrix::product(factors[0].size(), &factors))
}

/// Coefficients of `η^k` in `det(M − ηI)`, for `k = 0..=size`.
pub fn spectrum(family: &dyn LaxFamily, t: &LabeledTuple) -> Result<Vec<Poly>, LaxError> {
    let factors = (1..=t.len())
        .rev()
        .map(|k| family.matrix(t.slot(k)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PolyMatrix::product_char_poly(factors[0].size(), &factors))
}

/// Exact comparison of characteristic polynomials. In projective mode the
/// monodromy is only known up to a scalar `s(ζ)` under which `c_k` scales as
/// `s^{d−k}`, so `c_k^d · det'^{d−k} = c'_k^d · det^{d−k}` is compared.
pub fn spectra_agree(mode: LaxMode, before: &[Poly], after: &[Poly]) -> bool {
    match mode {
        LaxMode::Strict => before == after,
        LaxMode::Projective => {
            let d = before.len() - 1;
            if after.len() != before.len() || before[0].is_zero() || after[0].is_zero() {
                return before == after;
            }
            (1..=d).all(|k| {
                let e = (d - k) as u32;
                &before[k].pow(d as u32) * &after[0].pow(e)
                    == &after[k].pow(d as u32) * &before[0].pow(e)
            })
        }
    }
}

/// Flattened spectral invariants: the `ζ^p` coefficient of every `c_k`,
/// `k < size`, `p ≤ n · degree`. Constant along transfer orbits.
pub fn spectral_invariants(
    family: &dyn LaxFamily,
    t: &LabeledTuple,
) -> Result<Vec<Rational>, LaxError> {
    let cp = spectrum(family, t)?;
    let bound = t.len() * family.degree();
    Ok(cp[..cp.len() - 1]
        .iter()
        .flat_map(|c| (0..=bound).map(|p| c.coeff(p)))
        .collect())
}

/// The spectrum of the monodromy is unchanged by `T_i`.
pub fn check_spectral_invariance(
    family: &dyn LaxFamily,
    map: &dyn YangBaxterMap,
    i: usize,
    mode: LaxMode,
    t: &LabeledTuple,
) -> Outcome {
    let run = || -> Result<Outcome, Outcome> {
        let moved = yb_step(transfer_map(map, i, t))?;
        let before = lax_step(spectrum(family, t))?;
        let after = lax_step(spectrum(family, &moved))?;
        Ok(if spectra_agree(mode, &before, &after) {
            Outcome::Pass
        } else {
            Outcome::Fail(format!("spectrum changes under T_{i} ({mode})"))
        })
    };
    run().unwrap_or_else(|o| o)
}

/// [`check_spectral_invariance`] for every `i`.
pub fn check_spectral_all(
    family: &dyn LaxFamily,
    map: &dyn YangBaxterMap,
    mode: LaxMode,
    t: &LabeledTuple,
) -> Outcome {
    (1..=t.len()).fold(Outcome::Pass, |acc, i| {
        acc.and_then(|| check_spectral_invariance(family, map, i, mode, t))
    })
}

/// `((ζ−λ)I + 2λP)((ζ+λ)I − 2λP) = (ζ² − λ²)I`.
pub fn inverse_property_holds(p: &Matrix, lambda: &Rational) -> bool {
    let left = lax_projector_matrix(p, lambda);
    let right = lax_projector_matrix(p, &-lambda.clone());
    let zeta = Poly::var();
    let scalar = &(&zeta * &zeta) - &Poly::constant(lambda * lambda);
    &left * &right == PolyMatrix::identity(p.rows()).scale(&scalar)
}
