//! Trajectories of a transfer map `T_i` from a seeded initial tuple.

use std::io::Write;

use thiserror::Error;

use crate::algebra::{format_rational, Rational};
use crate::catalog::CatalogEntry;
use crate::lax::{spectral_invariants, LaxError};
use crate::yb::{sample, transfer_map, LabeledTuple, SampleError, YbError};

#[derive(Debug, Error)]
pub enum OrbitError {
    #[error("steps must be at least 1")]
    NoSteps,
    #[error("transfer index {i} outside 1..={n}")]
    BadIndex { i: usize, n: usize },
    #[error("map '{0}' is not flagged as a reversible Yang-Baxter map")]
    NotYangBaxter(String),
    #[error("step {step}: {source}")]
    Singular { step: usize, source: YbError },
    #[error("step {step}: {source}")]
    Lax { step: usize, source: LaxError },
    #[error(transparent)]
    Sample(#[from] SampleError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

/// The tuple after each step, with its spectral invariants when the map has
/// a Lax family.
#[derive(Clone, Debug)]
pub struct Orbit {
    pub initial: LabeledTuple,
    pub initial_invariants: Option<Vec<Rational>>,
    /// `states[k]` is the tuple after `k + 1` applications of `T_i`.
    pub states: Vec<LabeledTuple>,
    pub invariants: Option<Vec<Vec<Rational>>>,
}

/// Iterates `T_i` `steps` times on the first admissible sample drawn with
/// `seed`.
pub fn orbit(
    entry: &CatalogEntry,
    n: usize,
    i: usize,
    steps: usize,
    seed: u64,
) -> Result<Orbit, OrbitError> {
    if steps == 0 {
        return Err(OrbitError::NoSteps);
    }
    if i == 0 || i > n {
        return Err(OrbitError::BadIndex { i, n });
    }
    let d = &entry.descriptor;
    if d.yang_baxter == Some(false) || d.reversible == Some(false) {
        return Err(OrbitError::NotYangBaxter(d.id.clone()));
    }
    let initial = sample(&entry.domain, n, seed, 1)?.remove(0);
    let family = entry.lax.as_ref().map(|rep| rep.family.clone());
    let invariants_at =
        |t: &LabeledTuple, step: usize| -> Result<Option<Vec<Rational>>, OrbitError> {
            family
                .as_ref()
                .map(|f| spectral_invariants(f.as_ref(), t))
                .transpose()
                .map_err(|source| OrbitError::Lax { step, source })
        };
    let initial_invariants = invariants_at(&initial, 0)?;
    let mut states = Vec::with_capacity(steps);
    let mut invariants = family.as_ref().map(|_| Vec::with_capacity(steps));
    let mut current = initial.clone();
    for step in 1..=steps {
        current = transfer_map(entry.map.as_ref(), i, &current)
            .map_err(|source| OrbitError::Singular { step, source })?;
        if let (Some(list), Some(inv)) = (invariants.as_mut(), invariants_at(&current, step)?) {
            list.push(inv);
        }
        states.push(current.clone());
    }
    Ok(Orbit {
        initial,
        initial_invariants,
        states,
        invariants,
    })
}

impl Orbit {
    /// CSV with header `step,slot,component_name,value,inv_0,…`: one row per
    /// step, slot and component. Steps and slots are 1-based.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), OrbitError> {
        let mut w = csv::Writer::from_writer(out);
        let inv_count = self.initial_invariants.as_ref().map_or(0, Vec::len);
        let mut header: Vec<String> = ["step", "slot", "component_name", "value"]
            .map(String::from)
            .to_vec();
        header.extend((0..inv_count).map(|k| format!("inv_{k}")));
        w.write_record(&header)?;
        for (k, state) in self.states.iter().enumerate() {
            let inv: Vec<String> = self
                .invariants
                .as_ref()
                .map(|all| all[k].iter().map(format_rational).collect())
                .unwrap_or_default();
            for (s, slot) in state.slots().iter().enumerate() {
                for (name, value) in slot.value.components() {
                    let mut row = vec![
                        (k + 1).to_string(),
                        (s + 1).to_string(),
                        name,
                        format_rational(&value),
                    ];
                    row.extend(inv.iter().cloned());
                    w.write_record(&row)?;
                }
            }
        }
        w.flush().map_err(csv::Error::from)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, MapOptions};

    #[test]
    fn swap_orbit_returns() {
        let entry = build("swap", &MapOptions::default()).unwrap();
        let o = orbit(&entry, 3, 1, 3, 11).unwrap();
        assert_eq!(o.states[2], o.initial);
        assert_ne!(o.states[0], o.initial);
        assert!(o.invariants.is_none());
    }

    #[test]
    fn adler_invariants_constant() {
        let entry = build("adler", &MapOptions::default()).unwrap();
        let o = orbit(&entry, 3, 2, 10, 5).unwrap();
        let first = o.initial_invariants.clone().unwrap();
        assert!(o.invariants.unwrap().iter().all(|inv| *inv == first));
    }

    #[test]
    fn config_errors() {
        let entry = build("adler", &MapOptions::default()).unwrap();
        assert!(matches!(
            orbit(&entry, 3, 1, 0, 1),
            Err(OrbitError::NoSteps)
        ));
        assert!(matches!(
            orbit(&entry, 3, 4, 5, 1),
            Err(OrbitError::BadIndex { .. })
        ));
        let bad = build("fv-negated", &MapOptions::default()).unwrap();
        assert!(matches!(
            orbit(&bad, 3, 1, 5, 1),
            Err(OrbitError::NotYangBaxter(_))
        ));
    }

    #[test]
    fn csv_shape() {
        let entry = build("adler", &MapOptions::default()).unwrap();
        let o = orbit(&entry, 3, 1, 4, 2).unwrap();
        let mut buf = Vec::new();
        o.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert!(lines[0].starts_with("step,slot,component_name,value,inv_0"));
        assert_eq!(lines.len(), 1 + 4 * 3);
    }
}
