//! Identity checkers and the seeded, parallel sample runner.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::sample::{Domain, SampleError, SampleRng};
use super::{
    apply_rij, braid, transfer_map, transfer_product, LabeledTuple, Slot, YangBaxterMap, YbError,
};

/// Result of evaluating one property on one sample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    /// The sample left the generic domain somewhere along the way.
    Rejected(String),
}

impl Outcome {
    /// Rejection for domain errors, failure for anything else.
    pub fn from_error(e: &YbError) -> Outcome {
        if e.is_domain_rejection() {
            Outcome::Rejected(e.to_string())
        } else {
            Outcome::Fail(e.to_string())
        }
    }

    /// Keeps the first non-pass outcome.
    pub fn and_then(self, next: impl FnOnce() -> Outcome) -> Outcome {
        match self {
            Outcome::Pass => next(),
            other => other,
        }
    }
}

/// Runs `f`, turning an error into a rejection or failure.
fn eval<T>(r: Result<T, YbError>) -> Result<T, Outcome> {
    r.map_err(|e| Outcome::from_error(&e))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    #[serde(rename = "yb")]
    YangBaxter,
    Reversibility,
    #[serde(rename = "transfer-comm")]
    TransferCommutativity,
    #[serde(rename = "transfer-prod")]
    TransferProduct,
    #[serde(rename = "refactor")]
    Refactorization,
    Spectral,
    LaxFromMap,
    ExchangeSymmetry,
    #[serde(rename = "braid-involution")]
    BraidInvolution,
}

impl Property {
    pub const ALL: [Property; 9] = [
        Property::YangBaxter,
        Property::Reversibility,
        Property::TransferCommutativity,
        Property::TransferProduct,
        Property::Refactorization,
        Property::Spectral,
        Property::LaxFromMap,
        Property::ExchangeSymmetry,
        Property::BraidInvolution,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::YangBaxter => "yb",
            Property::Reversibility => "reversibility",
            Property::TransferCommutativity => "transfer-comm",
            Property::TransferProduct => "transfer-prod",
            Property::Refactorization => "refactor",
            Property::Spectral => "spectral",
            Property::LaxFromMap => "lax-from-map",
            Property::ExchangeSymmetry => "exchange-symmetry",
            Property::BraidInvolution => "braid-involution",
        }
    }

    /// Tuple length the property is evaluated on, when it is fixed.
    pub fn fixed_arity(self) -> Option<usize> {
        match self {
            Property::YangBaxter | Property::LaxFromMap => Some(3),
            Property::Reversibility
            | Property::Refactorization
            | Property::ExchangeSymmetry
            | Property::BraidInvolution => Some(2),
            Property::TransferCommutativity | Property::TransferProduct | Property::Spectral => {
                None
            }
        }
    }

    pub fn needs_lax(self) -> bool {
        matches!(
            self,
            Property::Refactorization | Property::Spectral | Property::LaxFromMap
        )
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown property '{s}'"))
    }
}

/// How Lax identities are compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LaxMode {
    /// Equality of polynomial matrices.
    Strict,
    /// Equality up to a scalar factor that may depend on `ζ`.
    Projective,
}

impl fmt::Display for LaxMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LaxMode::Strict => "strict",
            LaxMode::Projective => "projective",
        })
    }
}

impl FromStr for LaxMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "strict" => Ok(LaxMode::Strict),
            "projective" => Ok(LaxMode::Projective),
            _ => Err(format!(
                "unknown mode '{s}' (expected strict or projective)"
            )),
        }
    }
}

/// A sample on which a property failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub sample_index: usize,
    pub input: LabeledTuple,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub property: Property,
    pub map: String,
    pub n: usize,
    pub samples_attempted: usize,
    pub samples_rejected: usize,
    pub samples_checked: usize,
    pub failures: Vec<Witness>,
    /// Serialized as a decimal string so that 64-bit seeds survive JSON readers.
    #[serde(serialize_with = "seed_as_string")]
    pub seed: u64,
    pub mode: Option<LaxMode>,
    pub elapsed_ms: u64,
}

fn seed_as_string<S: serde::Serializer>(seed: &u64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&seed.to_string())
}

impl CheckReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty() && self.samples_checked > 0
    }
}

/// How many admissible samples to evaluate and with which seed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleRun {
    pub seed: u64,
    pub samples: usize,
}

impl SampleRun {
    pub fn new(seed: u64, samples: usize) -> Self {
        SampleRun { seed, samples }
    }

    /// Candidate draws allowed before giving up.
    pub fn max_attempts(&self) -> usize {
        50 * self.samples + 100
    }
}

/// Labels attached to a report.
#[derive(Clone, Debug)]
pub struct RunLabel<'a> {
    pub property: Property,
    pub map: &'a str,
    pub mode: Option<LaxMode>,
}

/// Draws candidate tuples of length `n` from `domain` and evaluates `check`
/// on each until `run.samples` of them were checked (passed or failed).
///
/// Candidates are evaluated in parallel batches but consumed strictly in
/// index order, so the report does not depend on scheduling.
pub fn run_check<F>(
    label: RunLabel<'_>,
    domain: &Domain,
    n: usize,
    run: SampleRun,
    check: F,
) -> Result<CheckReport, SampleError>
where
    F: Fn(&LabeledTuple) -> Outcome + Sync,
{
    if run.samples == 0 {
        return Err(SampleError::EmptyRequest);
    }
    if n < 2 {
        return Err(SampleError::TupleTooShort(n));
    }
    let start = Instant::now();
    let cap = run.max_attempts();
    let mut master = SampleRng::new(run.seed);
    let mut report = CheckReport {
        property: label.property,
        map: label.map.to_string(),
        n,
        samples_attempted: 0,
        samples_rejected: 0,
        samples_checked: 0,
        failures: Vec::new(),
        seed: run.seed,
        mode: label.mode,
        elapsed_ms: 0,
    };
    let batch = run.samples.clamp(16, 256);
    while report.samples_checked < run.samples && report.samples_attempted < cap {
        let first = report.samples_attempted;
        let size = batch.min(cap - first);
        let seeds: Vec<(usize, u64)> = (first..first + size)
            .map(|k| (k, master.next_u64()))
            .collect();
        let results: Vec<(usize, LabeledTuple, Outcome)> = seeds
            .into_par_iter()
            .filter_map(|(k, s)| {
                let mut rng = SampleRng::new(s);
                domain.draw_tuple(n, &mut rng).ok().map(|t| {
                    let outcome = check(&t);
                    (k, t, outcome)
                })
            })
            .collect();
        let mut results = results.into_iter().peekable();
        for k in first..first + size {
            if report.samples_checked == run.samples {
                break;
            }
            report.samples_attempted += 1;
            match results.next_if(|(index, ..)| *index == k) {
                None => report.samples_rejected += 1,
                Some((_, _, Outcome::Rejected(_))) => report.samples_rejected += 1,
                Some((_, _, Outcome::Pass)) => report.samples_checked += 1,
                Some((_, input, Outcome::Fail(detail))) => {
                    report.samples_checked += 1;
                    report.failures.push(Witness {
                        sample_index: k,
                        input,
                        detail,
                    });
                }
            }
        }
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    if report.samples_checked < run.samples {
        return Err(SampleError::ExhaustedRejections {
            attempts: report.samples_attempted,
            accepted: report.samples_checked,
        });
    }
    Ok(report)
}

/// Slotwise comparison using the map's notion of equality on `X`, with
/// parameters compared exactly.
pub fn tuples_equivalent(map: &dyn YangBaxterMap, a: &LabeledTuple, b: &LabeledTuple) -> bool {
    first_difference(map, a, b).is_none()
}

fn first_difference(map: &dyn YangBaxterMap, a: &LabeledTuple, b: &LabeledTuple) -> Option<usize> {
    if a.len() != b.len() {
        return Some(0);
    }
    (1..=a.len()).find(|&k| {
        let (x, y) = (a.slot(k), b.slot(k));
        x.param != y.param || !map.equivalent(&x.value, &y.value)
    })
}

fn compare(
    map: &dyn YangBaxterMap,
    what: &str,
    left: &LabeledTuple,
    right: &LabeledTuple,
) -> Outcome {
    match first_difference(map, left, right) {
        None => Outcome::Pass,
        Some(k) => Outcome::Fail(format!(
            "{what}: slot {k} differs; left {left}, right {right}"
        )),
    }
}

fn require_len(t: &LabeledTuple, n: usize) -> Result<(), Outcome> {
    if t.len() == n {
        Ok(())
    } else {
        Err(Outcome::Fail(format!(
            "expected a tuple of length {n}, got {}",
            t.len()
        )))
    }
}

fn chain(
    map: &dyn YangBaxterMap,
    t: &LabeledTuple,
    steps: &[(usize, usize)],
) -> Result<LabeledTuple, Outcome> {
    steps
        .iter()
        .try_fold(t.clone(), |acc, &(i, j)| eval(apply_rij(map, i, j, &acc)))
}

/// `R_12 R_13 R_23 = R_23 R_13 R_12` on a triple: the left side applies
/// `R_23` first.
pub fn check_yang_baxter(map: &dyn YangBaxterMap, t: &LabeledTuple) -> Outcome {
    let run = || -> Result<Outcome, Outcome> {
        require_len(t, 3)?;
        let left = chain(map, t, &[(2, 3), (1, 3), (1, 2)])?;
        let right = chain(map, t, &[(1, 2), (1, 3), (2, 3)])?;
        Ok(compare(map, "Yang-Baxter chains", &left, &right))
    };
    run().unwrap_or_else(|o| o)
}

/// `R_21 ∘ R_12 = Id` on a pair.
pub fn check_reversibility(map: &dyn YangBaxterMap, t: &LabeledTuple) -> Outcome {
    let run = || -> Result<Outcome, Outcome> {
        require_len(t, 2)?;
        let back = chain(map, t, &[(1, 2), (2, 1)])?;
        Ok(compare(map, "R21 R", &back, t))
    };
    run().unwrap_or_else(|o| o)
}

/// `R_21 = R_12` on a pair.
pub fn check_exchange_symmetry(map: &dyn YangBaxterMap, t: &LabeledTuple) -> Outcome {
    let run = || -> Result<Outcome, Outcome> {
        require_len(t, 2)?;
        let r12 = chain(map, t, &[(1, 2)])?;
        let r21 = chain(map, t, &[(2, 1)])?;
        Ok(compare(map, "R12 vs R21", &r12, &r21))
    };
    run().unwrap_or_else(|o| o)
}

/// `S ∘ S = Id` for the braid form `S = P∘R`.
pub fn check_braid_involutivity(map: &dyn YangBaxterMap, t: &LabeledTuple) -> Outcome {
    let run = || -> Result<Outcome, Outcome> {
        require_len(t, 2)?;
        let wrap = |r: Result<(Slot, Slot), super::MapError>| {
            r.map_err(|source| Outcome::from_error(&YbError::Map { i: 1, j: 2, source }))
        };
        let (a, b) = wrap(braid(map, t.slot(1), t.slot(2)))?;
        let (c, d) = wrap(braid(map, &a, &b))?;
        let back = LabeledTuple::new(vec![c, d]).map_err(|e| Outcome::Fail(e.to_string()))?;
        Ok(compare(map, "S S", &back, t))
    };
    run().unwrap_or_else(|o| o)
}

/// `T_i T_j = T_j T_i` for one pair of indices.
pub fn check_transfer_commutativity(
    map: &dyn YangBaxterMap,
    i: usize,
    j: usize,
    t: &LabeledTuple,
) -> Outcome {
    let run = || -> Result<Outcome, Outcome> {
        let ij = eval(transfer_map(map, j, t).and_then(|s| transfer_map(map, i, &s)))?;
        let ji = eval(transfer_map(map, i, t).and_then(|s| transfer_map(map, j, &s)))?;
        Ok(compare(
            map,
            &format!("T_{i} T_{j} vs T_{j} T_{i}"),
            &ij,
            &ji,
        ))
    };
    run().unwrap_or_else(|o| o)
}

/// Commutativity for every pair `i < j`. A rejection on any pair rejects the
/// sample.
pub fn check_transfer_commutativity_all(map: &dyn YangBaxterMap, t: &LabeledTuple) -> Outcome {
    let n = t.len();
    let mut outcome = Outcome::Pass;
    for i in 1..=n {
        for j in i + 1..=n {
            outcome = outcome.and_then(|| check_transfer_commutativity(map, i, j, t));
        }
    }
    outcome
}

/// `T_1 T_2 ⋯ T_n = Id`.
pub fn check_transfer_product(map: &dyn YangBaxterMap, t: &LabeledTuple) -> Outcome {
    match transfer_product(map, t) {
        Ok(out) => compare(map, "T_1 ... T_n", &out, t),
        Err(e) => Outcome::from_error(&e),
    }
}
