//! Acceptance suite: every criterion runs at exact equality and prints one
//! PASS/FAIL line. The process exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use ybmaps::algebra::{projector_from_pair, Matrix};
use ybmaps::catalog::{
    build, crystal_level, fv_to_adler, rank_one_pair, rank_one_projector, Adler, Conjugated, FMap,
    GrassmannProjector, MapOptions, QuadForm, SolitonRank1,
};
use ybmaps::lax::inverse_property_holds;
use ybmaps::orbit::orbit;
use ybmaps::suite::run_property;
use ybmaps::yb::{
    apply, run_check, CheckReport, Domain, LabeledTuple, MapError, Outcome, ParamRule, Property,
    RunLabel, SampleRun, Slot, SlotDomain, SlotValue,
};

const SEED: u64 = 20240607;

type Verdict = Result<(), String>;
type Criterion = (&'static str, fn() -> Verdict);

fn opts(dim: usize, rank: Option<usize>) -> MapOptions {
    MapOptions {
        dim: Some(dim),
        rank,
        form: None,
    }
}

fn expect_pass(report: CheckReport) -> Verdict {
    if report.pass() {
        Ok(())
    } else {
        let first = report
            .failures
            .first()
            .map(|w| w.detail.clone())
            .unwrap_or_else(|| "no samples".into());
        Err(format!(
            "{} {} n={}: {} of {} failed; first: {}",
            report.map,
            report.property,
            report.n,
            report.failures.len(),
            report.samples_checked,
            first
        ))
    }
}

fn property(
    id: &str,
    options: &MapOptions,
    p: Property,
    n: Option<usize>,
    samples: usize,
) -> Verdict {
    let entry = build(id, options).map_err(|e| e.to_string())?;
    let report = run_property(&entry, p, n, SampleRun::new(SEED, samples), None)
        .map_err(|e| e.to_string())?;
    expect_pass(report)
}

fn custom_check<F>(label: &str, domain: &Domain, n: usize, samples: usize, check: F) -> Verdict
where
    F: Fn(&LabeledTuple) -> Outcome + Sync,
{
    let run = RunLabel {
        property: Property::YangBaxter,
        map: label,
        mode: None,
    };
    let report = run_check(run, domain, n, SampleRun::new(SEED, samples), check)
        .map_err(|e| e.to_string())?;
    expect_pass(report).map_err(|e| format!("{label}: {e}"))
}

fn map_outcome(e: MapError) -> Outcome {
    if e.is_domain_rejection() {
        Outcome::Rejected(e.to_string())
    } else {
        Outcome::Fail(e.to_string())
    }
}

fn criterion_1() -> Verdict {
    let mut runs: Vec<(&str, MapOptions)> = vec![
        ("adler", MapOptions::default()),
        ("soliton-rank1", opts(2, None)),
        ("soliton-rank1", opts(3, None)),
        ("grassmann", opts(4, Some(2))),
        ("crystal", opts(2, None)),
        ("crystal", opts(3, None)),
        ("crystal", opts(4, None)),
    ];
    for form in QuadForm::ALL {
        runs.push((form.id(), MapOptions::default()));
    }
    let start = Instant::now();
    for (id, o) in &runs {
        property(id, o, Property::YangBaxter, None, 100)?;
    }
    let secs = start.elapsed().as_secs_f64();
    if secs > 60.0 {
        return Err(format!("took {secs:.1}s"));
    }
    Ok(())
}

fn criterion_2() -> Verdict {
    let entry = build("fv-negated", &MapOptions::default()).map_err(|e| e.to_string())?;
    let run = || {
        run_property(
            &entry,
            Property::YangBaxter,
            None,
            SampleRun::new(SEED, 100),
            None,
        )
    };
    let first = run().map_err(|e| e.to_string())?;
    let second = run().map_err(|e| e.to_string())?;
    if first.failures.is_empty() {
        return Err("no Yang-Baxter failure found in 100 samples".into());
    }
    if first.failures != second.failures {
        return Err("witnesses differ between identical runs".into());
    }
    // The witness must fail again when re-evaluated on its own.
    let w = &first.failures[0];
    match ybmaps::yb::check_yang_baxter(entry.map.as_ref(), &w.input) {
        Outcome::Fail(_) => Ok(()),
        other => Err(format!("witness re-check gave {other:?}")),
    }
}

fn criterion_3() -> Verdict {
    let conjugated = Conjugated::new(
        "f5-conjugated",
        std::sync::Arc::new(FMap::new(QuadForm::V)),
        fv_to_adler(),
    );
    let domain = Domain::new(SlotDomain::Scalar, ParamRule::Any);
    custom_check("f5 conjugated to adler", &domain, 2, 100, |t| {
        let (x, y) = (t.slot(1), t.slot(2));
        match (apply(&conjugated, x, y), apply(&Adler, x, y)) {
            (Ok(a), Ok(b)) if a == b => Outcome::Pass,
            (Ok(a), Ok(b)) => Outcome::Fail(format!("{a:?} vs {b:?}")),
            (Err(e), _) | (_, Err(e)) => map_outcome(e),
        }
    })
}

fn criterion_4() -> Verdict {
    let mut runs: Vec<(&str, MapOptions)> = vec![
        ("adler", MapOptions::default()),
        ("soliton-rank1", opts(2, None)),
        ("soliton-rank1", opts(3, None)),
        ("grassmann", opts(2, Some(1))),
        ("grassmann", opts(4, Some(2))),
    ];
    for form in QuadForm::ALL {
        runs.push((form.id(), MapOptions::default()));
    }
    for (id, o) in &runs {
        property(id, o, Property::Reversibility, None, 100)?;
    }
    property(
        "soliton-rank1",
        &opts(2, None),
        Property::ExchangeSymmetry,
        None,
        100,
    )?;
    property(
        "soliton-rank1",
        &opts(3, None),
        Property::ExchangeSymmetry,
        None,
        100,
    )
}

fn criterion_5() -> Verdict {
    for id in ["adler", "soliton-rank1"] {
        for n in [3, 4] {
            property(
                id,
                &MapOptions::default(),
                Property::TransferCommutativity,
                Some(n),
                25,
            )?;
            property(
                id,
                &MapOptions::default(),
                Property::TransferProduct,
                Some(n),
                25,
            )?;
        }
    }
    Ok(())
}

fn criterion_6() -> Verdict {
    property(
        "adler",
        &MapOptions::default(),
        Property::Refactorization,
        None,
        50,
    )?;
    property(
        "grassmann",
        &opts(2, Some(1)),
        Property::Refactorization,
        None,
        50,
    )?;
    property(
        "grassmann",
        &opts(4, Some(2)),
        Property::Refactorization,
        None,
        50,
    )?;
    let domain = Domain::new(
        SlotDomain::Projector { dim: 3, rank: 1 },
        ParamRule::Nonzero,
    );
    custom_check("inverse property", &domain, 2, 50, |t| {
        let s = t.slot(1);
        let (k, l) = s.value.as_projector().expect("projector slot");
        match projector_from_pair(k, l) {
            Ok(p) if inverse_property_holds(&p, s.param.as_ref().expect("parameter")) => {
                Outcome::Pass
            }
            Ok(p) => Outcome::Fail(format!("fails for P = {p}")),
            Err(e) => Outcome::Rejected(e.to_string()),
        }
    })
}

fn criterion_7() -> Verdict {
    for n in [3, 4, 5] {
        property(
            "adler",
            &MapOptions::default(),
            Property::Spectral,
            Some(n),
            10,
        )?;
        property(
            "grassmann",
            &opts(2, Some(1)),
            Property::Spectral,
            Some(n),
            10,
        )?;
        property(
            "soliton-rank1",
            &opts(3, None),
            Property::Spectral,
            Some(n),
            10,
        )?;
    }
    let entry = build("adler", &MapOptions::default()).map_err(|e| e.to_string())?;
    let o = orbit(&entry, 3, 1, 50, SEED).map_err(|e| e.to_string())?;
    let first = o
        .initial_invariants
        .clone()
        .ok_or("adler orbit has no invariants")?;
    let all = o.invariants.ok_or("adler orbit has no invariants")?;
    if all.len() != 50 || all.iter().any(|inv| *inv != first) {
        return Err("orbit invariant columns are not constant".into());
    }
    Ok(())
}

fn criterion_8() -> Verdict {
    let soliton = SolitonRank1::new(3);
    let grassmann = GrassmannProjector::new(3, 1);
    let domain = Domain::new(
        SlotDomain::VectorCovector { dim: 3 },
        ParamRule::DistinctNonOpposite,
    );
    custom_check("rank-one equivalence", &domain, 2, 100, |t| {
        let as_pair = |s: &Slot| -> Slot {
            let (xi, eta) = s.value.as_vector_covector().expect("vector-covector slot");
            let (kernel, image) = rank_one_pair(xi, eta).expect("nonzero vectors");
            Slot::new(SlotValue::Projector { kernel, image }, s.param.clone())
        };
        let (x, y) = (t.slot(1), t.slot(2));
        let (sa, sb) = match apply(&soliton, x, y) {
            Ok(r) => r,
            Err(e) => return map_outcome(e),
        };
        let (ga, gb) = match apply(&grassmann, &as_pair(x), &as_pair(y)) {
            Ok(r) => r,
            Err(e) => return map_outcome(e),
        };
        let to_matrix = |v: &SlotValue| -> Matrix {
            match v {
                SlotValue::VectorCovector { vector, covector } => {
                    rank_one_projector(vector, covector).expect("rank one")
                }
                SlotValue::Projector { kernel, image } => {
                    projector_from_pair(kernel, image).expect("complementary")
                }
                _ => unreachable!(),
            }
        };
        if to_matrix(&sa) == to_matrix(&ga) && to_matrix(&sb) == to_matrix(&gb) {
            Outcome::Pass
        } else {
            Outcome::Fail("induced projectors differ".into())
        }
    })
}

fn criterion_9() -> Verdict {
    for len in [2, 3, 4] {
        let entry = build("crystal", &opts(len, None)).map_err(|e| e.to_string())?;
        let map = entry.map.clone();
        custom_check(
            &format!("crystal levels, length {len}"),
            &entry.domain,
            2,
            100,
            |t| {
                let (x, y) = (t.slot(1), t.slot(2));
                match apply(map.as_ref(), x, y) {
                    Ok((u, v)) => {
                        let level =
                            |v: &SlotValue| crystal_level(v.as_tuple().expect("tuple slot"));
                        if level(&u) == level(&x.value) && level(&v) == level(&y.value) {
                            Outcome::Pass
                        } else {
                            Outcome::Fail("coordinate products changed".into())
                        }
                    }
                    Err(e) => map_outcome(e),
                }
            },
        )?;
    }
    for len in [2, 3] {
        property("crystal", &opts(len, None), Property::LaxFromMap, None, 50)?;
    }
    Ok(())
}

fn criterion_10() -> Verdict {
    let domain = Domain::new(SlotDomain::Scalar, ParamRule::Any);
    for form in QuadForm::ALL {
        custom_check(&format!("{} companion", form.id()), &domain, 2, 100, |t| {
            let scalar = |k: usize| t.slot(k).value.as_scalar().expect("scalar").clone();
            let param = |k: usize| t.slot(k).param.clone().expect("parameter");
            let (alpha, beta, x, y) = (param(1), param(2), scalar(1), scalar(2));
            let q = match form.coefficients(&alpha, &beta) {
                Ok(q) => q,
                Err(e) => return Outcome::Rejected(e.to_string()),
            };
            let (u, v) = match form.apply(&alpha, &beta, &x, &y) {
                Ok(r) => r,
                Err(e) => return map_outcome(e),
            };
            match q.companion(&x, &v) {
                Ok((y2, u2)) if y2 == y && u2 == u => Outcome::Pass,
                Ok((y2, u2)) => {
                    Outcome::Fail(format!("companion gave ({y2}, {u2}), expected ({y}, {u})"))
                }
                Err(e) => map_outcome(e),
            }
        })?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("Yang-Baxter suite", criterion_1),
        ("counterexample detection", criterion_2),
        ("conjugation identity", criterion_3),
        ("reversibility", criterion_4),
        ("transfer theorem", criterion_5),
        ("refactorization", criterion_6),
        ("spectral invariance", criterion_7),
        ("rank-1 equivalence", criterion_8),
        ("crystal checks", criterion_9),
        ("companion round-trip", criterion_10),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let ms = start.elapsed().as_millis();
        match verdict {
            Ok(()) => println!("PASS criterion {}: {name} ({ms} ms)", k + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({ms} ms): {e}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
