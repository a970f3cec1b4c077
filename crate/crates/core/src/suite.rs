//! Runs a named property on a catalog entry.

use thiserror::Error;

use crate::catalog::CatalogEntry;
use crate::lax::{check_spectral_all, verify_lax_from_map, verify_refactorization};
use crate::yb::{
    check_braid_involutivity, check_exchange_symmetry, check_reversibility,
    check_transfer_commutativity_all, check_transfer_product, check_yang_baxter, run_check,
    CheckReport, LaxMode, Property, RunLabel, SampleError, SampleRun,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuiteError {
    #[error("map '{map}' has no Lax representation, needed for '{property}'")]
    MissingLax { map: String, property: Property },
    #[error("'{property}' needs tuples of length at least 2, got {n}")]
    TupleTooShort { property: Property, n: usize },
    #[error("strict/projective mode only applies to Lax properties, not '{0}'")]
    ModeNotApplicable(Property),
    #[error(transparent)]
    Sample(#[from] SampleError),
}

/// Tuple length used when the caller does not pick one.
pub const DEFAULT_N: usize = 3;

/// The tuple length a property runs on: fixed for pair and triple
/// properties, `n` (default [`DEFAULT_N`]) for transfer and spectral ones.
pub fn effective_n(property: Property, n: Option<usize>) -> usize {
    property.fixed_arity().unwrap_or(n.unwrap_or(DEFAULT_N))
}

/// Evaluates `property` on `run.samples` admissible samples of `entry`.
///
/// `mode` selects strict or projective comparison for Lax properties and
/// defaults to the family's own mode; it is an error for other properties.
pub fn run_property(
    entry: &CatalogEntry,
    property: Property,
    n: Option<usize>,
    run: SampleRun,
    mode: Option<LaxMode>,
) -> Result<CheckReport, SuiteError> {
    let n = effective_n(property, n);
    if n < 2 {
        return Err(SuiteError::TupleTooShort { property, n });
    }
    let map = entry.map.as_ref();
    let id = entry.descriptor.id.as_str();
    if !property.needs_lax() {
        if mode.is_some() {
            return Err(SuiteError::ModeNotApplicable(property));
        }
        let label = RunLabel {
            property,
            map: id,
            mode: None,
        };
        let domain = &entry.domain;
        let report = match property {
            Property::YangBaxter => run_check(label, domain, n, run, |t| check_yang_baxter(map, t)),
            Property::Reversibility => {
                run_check(label, domain, n, run, |t| check_reversibility(map, t))
            }
            Property::TransferCommutativity => run_check(label, domain, n, run, |t| {
                check_transfer_commutativity_all(map, t)
            }),
            Property::TransferProduct => {
                run_check(label, domain, n, run, |t| check_transfer_product(map, t))
            }
            Property::ExchangeSymmetry => {
                run_check(label, domain, n, run, |t| check_exchange_symmetry(map, t))
            }
            Property::BraidInvolution => {
                run_check(label, domain, n, run, |t| check_braid_involutivity(map, t))
            }
            Property::Refactorization | Property::Spectral | Property::LaxFromMap => unreachable!(),
        }?;
        return Ok(report);
    }
    let rep = entry.lax.as_ref().ok_or_else(|| SuiteError::MissingLax {
        map: id.to_string(),
        property,
    })?;
    let family = rep.family.as_ref();
    let mode = mode.unwrap_or_else(|| family.mode());
    let label = RunLabel {
        property,
        map: id,
        mode: Some(mode),
    };
    let domain = &entry.domain;
    let report = match property {
        Property::Refactorization => run_check(label, domain, n, run, |t| {
            verify_refactorization(family, map, mode, t)
        }),
        Property::Spectral => run_check(label, domain, n, run, |t| {
            check_spectral_all(family, map, mode, t)
        }),
        Property::LaxFromMap => run_check(label, domain, n, run, |t| {
            verify_lax_from_map(rep, map, mode, t)
        }),
        _ => unreachable!(),
    }?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, MapOptions};

    #[test]
    fn adler_yb_passes() {
        let entry = build("adler", &MapOptions::default()).unwrap();
        let report = run_property(
            &entry,
            Property::YangBaxter,
            None,
            SampleRun::new(7, 20),
            None,
        )
        .unwrap();
        assert!(report.pass());
        assert_eq!(report.n, 3);
        assert_eq!(report.mode, None);
    }

    #[test]
    fn lax_property_requires_family() {
        let entry = build("f5", &MapOptions::default()).unwrap();
        let err =
            run_property(&entry, Property::Spectral, None, SampleRun::new(1, 5), None).unwrap_err();
        assert!(matches!(err, SuiteError::MissingLax { .. }));
    }

    #[test]
    fn mode_rejected_for_non_lax_property() {
        let entry = build("adler", &MapOptions::default()).unwrap();
        let err = run_property(
            &entry,
            Property::YangBaxter,
            None,
            SampleRun::new(1, 5),
            Some(LaxMode::Strict),
        );
        assert_eq!(
            err.unwrap_err(),
            SuiteError::ModeNotApplicable(Property::YangBaxter)
        );
    }

    #[test]
    fn lax_mode_is_recorded() {
        let entry = build("adler", &MapOptions::default()).unwrap();
        let report = run_property(
            &entry,
            Property::Refactorization,
            None,
            SampleRun::new(3, 5),
            None,
        )
        .unwrap();
        assert_eq!(report.mode, Some(LaxMode::Strict));
        let report = run_property(
            &entry,
            Property::Refactorization,
            None,
            SampleRun::new(3, 5),
            Some(LaxMode::Projective),
        )
        .unwrap();
        assert_eq!(report.mode, Some(LaxMode::Projective));
        assert!(report.pass());
    }
}
