use std::sync::Arc;

use proptest::prelude::*;
use ybmaps::algebra::{int, rat, Moebius, Rational, Subspace};
use ybmaps::catalog::{
    build, crystal, crystal_level, fv_to_negated, Adler, CatalogEntry, Conjugated, Conjugation,
    FMap, FvNegated, MapOptions, QuadForm,
};
use ybmaps::lax::refactorization_holds;
use ybmaps::yb::{
    apply, apply_rij, check_yang_baxter, sample, transfer_map, LabeledTuple, Outcome, Slot,
    SlotValue, YangBaxterMap,
};

fn small() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(p, q)| rat(p, q))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    small().prop_filter("zero", |r| *r != int(0))
}

fn moebius() -> impl Strategy<Value = Moebius> {
    (-3i64..=3, -3i64..=3, -3i64..=3, -3i64..=3).prop_filter_map("singular", |(a, b, c, d)| {
        Moebius::new(int(a), int(b), int(c), int(d)).ok()
    })
}

fn conjugation() -> impl Strategy<Value = Conjugation> {
    (moebius(), moebius(), moebius(), moebius())
        .prop_map(|(x, y, u, v)| Conjugation::new(x, y, u, v))
}

fn entry(id: &str, dim: Option<usize>, rank: Option<usize>) -> CatalogEntry {
    build(
        id,
        &MapOptions {
            dim,
            rank,
            form: None,
        },
    )
    .unwrap()
}

fn tuples(e: &CatalogEntry, n: usize, seed: u64, count: usize) -> Vec<LabeledTuple> {
    sample(&e.domain, n, seed, count).unwrap()
}

#[test]
fn reversed_index_is_conjugate_by_slot_exchange() {
    for e in [
        entry("adler", None, None),
        entry("crystal", Some(3), None),
        entry("grassmann", Some(2), Some(1)),
    ] {
        for t in tuples(&e, 3, 4, 20) {
            for (i, j) in [(1, 2), (1, 3), (2, 3)] {
                let direct = apply_rij(e.map.as_ref(), j, i, &t);
                let via =
                    apply_rij(e.map.as_ref(), i, j, &t.permuted(i, j)).map(|r| r.permuted(i, j));
                assert_eq!(direct.is_ok(), via.is_ok());
                if let (Ok(a), Ok(b)) = (direct, via) {
                    assert_eq!(a, b, "{} R_{j}{i} on {t}", e.descriptor.id);
                }
            }
        }
    }
}

#[test]
fn transfer_maps_keep_parameters() {
    for e in [
        entry("adler", None, None),
        entry("soliton-rank1", Some(3), None),
    ] {
        for t in tuples(&e, 4, 8, 10) {
            for i in 1..=4 {
                if let Ok(moved) = transfer_map(e.map.as_ref(), i, &t) {
                    assert_eq!(moved.params(), t.params());
                }
            }
        }
    }
}

fn yang_baxter_tally(map: &dyn YangBaxterMap, seed: u64) -> (usize, usize) {
    let e = entry("adler", None, None);
    let (mut passed, mut failed) = (0, 0);
    for t in tuples(&e, 3, seed, 60) {
        match check_yang_baxter(map, &t) {
            Outcome::Pass => passed += 1,
            Outcome::Fail(_) => failed += 1,
            Outcome::Rejected(_) => {}
        }
    }
    (passed, failed)
}

#[test]
fn involutive_diagonal_conjugation_keeps_yang_baxter() {
    // z ↦ (z + 2)/(z − 1) squares to the identity, like −z and 1/z.
    let involutions = [
        Moebius::negation(),
        Moebius::inversion(),
        Moebius::new(int(1), int(2), int(1), int(-1)).unwrap(),
    ];
    for m in involutions {
        assert!(m.compose(&m).is_identity());
        let conj = Conjugated::new(
            "adler-conj",
            Arc::new(Adler),
            Conjugation::diagonal(m.clone()),
        );
        let (passed, failed) = yang_baxter_tally(&conj, 21);
        assert_eq!(failed, 0, "{m}");
        assert!(passed >= 50, "{m}: only {passed} admissible samples");
    }
}

#[test]
fn change_of_variables_keeps_yang_baxter() {
    let m = Moebius::new(int(2), int(1), int(1), int(1)).unwrap();
    let sigma = Conjugation::new(m.clone(), m.clone(), m.inverse(), m.inverse());
    let conj = Conjugated::new("adler-conj", Arc::new(Adler), sigma);
    let (passed, failed) = yang_baxter_tally(&conj, 22);
    assert_eq!(failed, 0);
    assert!(passed >= 50);
}

#[test]
fn non_involutive_diagonal_is_not_a_conjugation() {
    // m ∘ R ∘ (m × m) with m² ≠ id is not a change of variables.
    let m = Moebius::new(int(2), int(1), int(1), int(1)).unwrap();
    let conj = Conjugated::new("adler-diag", Arc::new(Adler), Conjugation::diagonal(m));
    let (_, failed) = yang_baxter_tally(&conj, 23);
    assert!(failed > 0);
}

#[test]
fn negating_conjugation_of_fv_breaks_yang_baxter() {
    let conj = Conjugated::new("fv-conj", Arc::new(FMap::new(QuadForm::V)), fv_to_negated());
    let e = entry("f5", None, None);
    let mut failed = 0;
    for t in tuples(&e, 3, 5, 40) {
        let (x, y) = (t.slot(1), t.slot(2));
        if let (Ok(a), Ok(b)) = (apply(&conj, x, y), apply(&FvNegated, x, y)) {
            assert_eq!(a, b);
        }
        if matches!(check_yang_baxter(&conj, &t), Outcome::Fail(_)) {
            failed += 1;
        }
    }
    assert!(failed > 0);
}

#[test]
fn grassmann_refactorization_has_no_small_spurious_solution() {
    let e = entry("grassmann", Some(2), Some(1));
    let family = e.lax.as_ref().unwrap().family.clone();
    let lines: Vec<Subspace> = [
        (1, 0),
        (0, 1),
        (1, 1),
        (1, -1),
        (1, 2),
        (1, -2),
        (2, 1),
        (2, -1),
    ]
    .iter()
    .map(|&(a, b)| Subspace::span(2, &[vec![int(a), int(b)]]).unwrap())
    .collect();
    let mut pairs = Vec::new();
    for k in &lines {
        for l in &lines {
            if k != l {
                pairs.push((k.clone(), l.clone()));
            }
        }
    }
    for t in tuples(&e, 2, 13, 3) {
        let (x, y) = (t.slot(1), t.slot(2));
        let Ok((fx, gy)) = apply(e.map.as_ref(), x, y) else {
            continue;
        };
        let truth = (
            Slot::new(fx.clone(), x.param.clone()),
            Slot::new(gy.clone(), y.param.clone()),
        );
        assert!(refactorization_holds(
            family.as_ref(),
            family.mode(),
            (x, y),
            (&truth.0, &truth.1)
        )
        .unwrap());
        for (k1, l1) in &pairs {
            for (k2, l2) in &pairs {
                let nx = SlotValue::Projector {
                    kernel: k1.clone(),
                    image: l1.clone(),
                };
                let ny = SlotValue::Projector {
                    kernel: k2.clone(),
                    image: l2.clone(),
                };
                if nx == fx && ny == gy {
                    continue;
                }
                let cand = (
                    Slot::new(nx, x.param.clone()),
                    Slot::new(ny, y.param.clone()),
                );
                assert!(
                    !refactorization_holds(
                        family.as_ref(),
                        family.mode(),
                        (x, y),
                        (&cand.0, &cand.1)
                    )
                    .unwrap(),
                    "spurious refactorization for {t}"
                );
            }
        }
    }
}

fn quad_slots(alpha: &Rational, beta: &Rational, x: &Rational, y: &Rational) -> (Slot, Slot) {
    (
        Slot::scalar(x.clone(), alpha.clone()),
        Slot::scalar(y.clone(), beta.clone()),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn crystal_preserves_coordinate_products(
        x in prop::collection::vec(nonzero(), 3),
        y in prop::collection::vec(nonzero(), 3),
    ) {
        if let Ok((u, v)) = crystal(&x, &y) {
            prop_assert_eq!(crystal_level(&u), crystal_level(&x));
            prop_assert_eq!(crystal_level(&v), crystal_level(&y));
        }
    }

    #[test]
    fn companion_recovers_inputs(
        form in prop::sample::select(QuadForm::ALL.to_vec()),
        alpha in small(),
        beta in small(),
        x in small(),
        y in small(),
    ) {
        let Ok(q) = form.coefficients(&alpha, &beta) else { return Ok(()) };
        let Ok((u, v)) = q.apply(&x, &y) else { return Ok(()) };
        prop_assert_eq!(form.apply(&alpha, &beta, &x, &y).unwrap(), (u.clone(), v.clone()));
        if let Ok((y2, u2)) = q.companion(&x, &v) {
            prop_assert_eq!((y2, u2), (y, u));
        }
    }

    #[test]
    fn conjugation_composes(
        s1 in conjugation(),
        s2 in conjugation(),
        x in small(),
        y in small(),
    ) {
        let q = QuadForm::III.coefficients(&int(2), &int(3)).unwrap();
        let twice = q.conjugate(&s1).conjugate(&s2);
        let once = q.conjugate(&s1.then(&s2));
        if let (Ok(a), Ok(b)) = (twice.apply(&x, &y), once.apply(&x, &y)) {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn identity_conjugation_is_trivial(alpha in nonzero(), beta in nonzero(), x in small(), y in small()) {
        let inner = Arc::new(FMap::new(QuadForm::II));
        let conj = Conjugated::new("f2-id", inner.clone(), Conjugation::identity());
        let (sx, sy) = quad_slots(&alpha, &beta, &x, &y);
        prop_assert_eq!(apply(&conj, &sx, &sy).ok(), apply(inner.as_ref(), &sx, &sy).ok());
    }

    #[test]
    fn soliton_outputs_are_rank_one_projectors(seed in any::<u64>()) {
        let e = entry("soliton-rank1", Some(3), None);
        let t = &tuples(&e, 2, seed, 1)[0];
        if let Ok((u, v)) = apply(e.map.as_ref(), t.slot(1), t.slot(2)) {
            for out in [u, v] {
                let (xi, eta) = out.as_vector_covector().unwrap();
                let p = ybmaps::catalog::rank_one_projector(xi, eta).unwrap();
                prop_assert!(p.is_idempotent());
                prop_assert_eq!(p.rank(), 1);
            }
        }
    }
}
