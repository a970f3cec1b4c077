//! Concrete maps and the registry that names them.

mod adler;
mod crystal;
mod projector;
mod quad;

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{parse_rational, BilinearForm, Poly};
use crate::lax::LaxRepresentation;
use crate::yb::{
    Domain, MapError, ParamRule, Slot, SlotDomain, SlotKind, SlotValue, YangBaxterMap,
};

pub use adler::{adler, Adler};
pub use crystal::{crystal, crystal_level, crystal_polynomials, Crystal};
pub use projector::{
    rank_one_pair, rank_one_projector, GrassmannProjector, GrassmannSelfAdjoint, SolitonRank1,
};
pub use quad::{
    fv_to_adler, fv_to_negated, Conjugated, Conjugation, CustomQuad, FMap, FvNegated, QuadForm,
    QuadrirationalMap, COEFFICIENT_NAMES,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown map '{0}'")]
    UnknownMap(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("coefficient '{0}' is missing")]
    MissingCoefficient(String),
    #[error("polynomial '{0}' has degree above 2")]
    DegreeTooHigh(String),
    #[error("degenerate map: {0}")]
    DegenerateMap(String),
    #[error("invalid option: {0}")]
    InvalidOption(String),
}

/// The swap `(x, y) ↦ (y, x)` on scalars.
#[derive(Clone, Copy, Debug, Default)]
pub struct Swap;

impl YangBaxterMap for Swap {
    fn id(&self) -> &str {
        "swap"
    }
    fn slot_kind(&self) -> SlotKind {
        SlotKind::Scalar
    }
    fn param_arity(&self) -> usize {
        0
    }
    fn apply_slots(&self, x: &Slot, y: &Slot) -> Result<(SlotValue, SlotValue), MapError> {
        Ok((y.value.clone(), x.value.clone()))
    }
}

/// The identity on scalar pairs.
#[derive(Clone, Copy, Debug, Default)]
pub struct Identity;

impl YangBaxterMap for Identity {
    fn id(&self) -> &str {
        "identity"
    }
    fn slot_kind(&self) -> SlotKind {
        SlotKind::Scalar
    }
    fn param_arity(&self) -> usize {
        0
    }
    fn apply_slots(&self, x: &Slot, y: &Slot) -> Result<(SlotValue, SlotValue), MapError> {
        Ok((x.value.clone(), y.value.clone()))
    }
}

/// Static facts about a catalog map. The two flags record what the source
/// asserts (`None` where it says nothing), not what the checkers find.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapDescriptor {
    pub id: String,
    pub description: String,
    pub slot_kind: SlotKind,
    pub yang_baxter: Option<bool>,
    pub reversible: Option<bool>,
    pub parameterized: bool,
    pub constraints: String,
    pub lax_family: Option<String>,
}

/// Size options for maps acting on vectors, subspaces or tuples.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MapOptions {
    /// Ambient dimension (soliton, Grassmannian) or tuple length (crystal).
    pub dim: Option<usize>,
    /// Dimension of the image for Grassmannian maps.
    pub rank: Option<usize>,
    /// Form for the self-adjoint Grassmannian; Euclidean by default.
    pub form: Option<BilinearForm>,
}

/// A ready-to-run map: the rule, where to sample it and its Lax matrices.
#[derive(Clone)]
pub struct CatalogEntry {
    pub descriptor: MapDescriptor,
    pub map: Arc<dyn YangBaxterMap>,
    pub domain: Domain,
    pub lax: Option<LaxRepresentation>,
}

struct Spec {
    id: &'static str,
    description: &'static str,
    slot_kind: SlotKind,
    yang_baxter: Option<bool>,
    reversible: Option<bool>,
    parameterized: bool,
    constraints: &'static str,
    lax_family: Option<&'static str>,
}

const SPECS: &[Spec] = &[
    Spec {
        id: "adler",
        description: "Adler map on scalars",
        slot_kind: SlotKind::Scalar,
        yang_baxter: Some(true),
        reversible: Some(true),
        parameterized: true,
        constraints: "f1 + f2 != 0",
        lax_family: Some("adler"),
    },
    Spec {
        id: "soliton-rank1",
        description: "rank-one soliton polarizations (xi, eta) in Q^dim",
        slot_kind: SlotKind::VectorCovector,
        yang_baxter: Some(true),
        reversible: Some(true),
        parameterized: true,
        constraints: "lambda1 != lambda2; (xi, eta) != 0",
        lax_family: Some("projector"),
    },
    Spec {
        id: "grassmann",
        description: "projector map on kernel/image pairs in Q^dim with image of dimension rank",
        slot_kind: SlotKind::Projector,
        yang_baxter: Some(true),
        reversible: Some(true),
        parameterized: true,
        constraints: "lambda1 != ±lambda2; lambda != 0; K + L = Q^dim",
        lax_family: Some("projector"),
    },
    Spec {
        id: "grassmann-selfadjoint",
        description: "Grassmannian map with kernels the orthogonal complements of the images",
        slot_kind: SlotKind::Projector,
        yang_baxter: Some(true),
        reversible: Some(true),
        parameterized: true,
        constraints: "lambda1 != ±lambda2; lambda != 0; L non-isotropic",
        lax_family: Some("projector"),
    },
    Spec {
        id: "crystal",
        description: "geometric-crystal map on pairs of dim-tuples",
        slot_kind: SlotKind::Tuple,
        yang_baxter: Some(true),
        reversible: None,
        parameterized: false,
        constraints: "coordinates != 0; P_j != 0",
        lax_family: Some("crystal"),
    },
    Spec {
        id: "f1",
        description: "quadrirational normal form I",
        slot_kind: SlotKind::Scalar,
        yang_baxter: Some(true),
        reversible: Some(true),
        parameterized: true,
        constraints: "alpha, beta not in {0, 1}; denominator of P != 0",
        lax_family: None,
    },
    Spec {
        id: "f2",
        description: "quadrirational normal form II",
        slot_kind: SlotKind::Scalar,
        yang_baxter: Some(true),
        reversible: Some(true),
        parameterized: true,
        constraints: "alpha, beta != 0; x != y",
        lax_family: None,
    },
    Spec {
        id: "f3",
        description: "quadrirational normal form III",
        slot_kind: SlotKind::Scalar,
        yang_baxter: Some(true),
        reversible: Some(true),
        parameterized: true,
        constraints: "alpha, beta != 0; x != y",
        lax_family: None,
    },
    Spec {
        id: "f4",
        description: "quadrirational normal form IV",
        slot_kind: SlotKind::Scalar,
        yang_baxter: Some(true),
        reversible: Some(true),
        parameterized: true,
        constraints: "x != y",
        lax_family: None,
    },
    Spec {
        id: "f5",
        description: "quadrirational normal form V",
        slot_kind: SlotKind::Scalar,
        yang_baxter: Some(true),
        reversible: Some(true),
        parameterized: true,
        constraints: "x != y",
        lax_family: None,
    },
    Spec {
        id: "fv-negated",
        description: "form V with x, y negated: u = -y - P, v = -x - P",
        slot_kind: SlotKind::Scalar,
        yang_baxter: Some(false),
        reversible: None,
        parameterized: true,
        constraints: "x != y",
        lax_family: None,
    },
    Spec {
        id: "swap",
        description: "(x, y) -> (y, x)",
        slot_kind: SlotKind::Scalar,
        yang_baxter: Some(true),
        reversible: Some(true),
        parameterized: false,
        constraints: "none",
        lax_family: None,
    },
    Spec {
        id: "identity",
        description: "(x, y) -> (x, y)",
        slot_kind: SlotKind::Scalar,
        yang_baxter: Some(true),
        reversible: Some(true),
        parameterized: false,
        constraints: "none",
        lax_family: None,
    },
];

fn descriptor(spec: &Spec) -> MapDescriptor {
    MapDescriptor {
        id: spec.id.to_string(),
        description: spec.description.to_string(),
        slot_kind: spec.slot_kind,
        yang_baxter: spec.yang_baxter,
        reversible: spec.reversible,
        parameterized: spec.parameterized,
        constraints: spec.constraints.to_string(),
        lax_family: spec.lax_family.map(str::to_string),
    }
}

/// Descriptors of every built-in map.
pub fn descriptors() -> Vec<MapDescriptor> {
    SPECS.iter().map(descriptor).collect()
}

pub fn map_ids() -> Vec<&'static str> {
    SPECS.iter().map(|s| s.id).collect()
}

fn scalar_domain(params: ParamRule) -> Domain {
    Domain::new(SlotDomain::Scalar, params)
}

/// Instantiates a built-in map.
pub fn build(id: &str, options: &MapOptions) -> Result<CatalogEntry, CatalogError> {
    let spec = SPECS
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| CatalogError::UnknownMap(id.to_string()))?;
    let dim = options.dim.unwrap_or(if id == "crystal" { 3 } else { 2 });
    if dim == 0 {
        return Err(CatalogError::InvalidOption("dim must be positive".into()));
    }
    let rank = options.rank.unwrap_or(1);
    let grassmann_rank = || {
        if rank == 0 || rank >= dim {
            Err(CatalogError::InvalidOption(format!(
                "rank must lie in 1..{dim}"
            )))
        } else {
            Ok(rank)
        }
    };
    let (map, domain, lax): (Arc<dyn YangBaxterMap>, Domain, Option<LaxRepresentation>) = match id {
        "adler" => (
            Arc::new(Adler),
            scalar_domain(ParamRule::Any),
            Some(LaxRepresentation::adler()),
        ),
        "soliton-rank1" => (
            Arc::new(SolitonRank1::new(dim)),
            Domain::new(
                SlotDomain::VectorCovector { dim },
                ParamRule::DistinctNonzero,
            ),
            Some(LaxRepresentation::projector()),
        ),
        "grassmann" => {
            let rank = grassmann_rank()?;
            (
                Arc::new(GrassmannProjector::new(dim, rank)),
                Domain::new(
                    SlotDomain::Projector { dim, rank },
                    ParamRule::DistinctNonOpposite,
                ),
                Some(LaxRepresentation::projector()),
            )
        }
        "grassmann-selfadjoint" => {
            let rank = grassmann_rank()?;
            let form = options
                .form
                .clone()
                .unwrap_or_else(|| BilinearForm::euclidean(dim));
            if form.dim() != dim {
                return Err(CatalogError::InvalidOption(
                    "form dimension differs from dim".into(),
                ));
            }
            (
                Arc::new(GrassmannSelfAdjoint::new(form.clone())),
                Domain::new(
                    SlotDomain::SelfAdjointProjector { rank, form },
                    ParamRule::DistinctNonOpposite,
                ),
                Some(LaxRepresentation::projector()),
            )
        }
        "crystal" => (
            Arc::new(Crystal::new(dim)),
            Domain::new(SlotDomain::Crystal { len: dim }, ParamRule::None),
            Some(LaxRepresentation::crystal()),
        ),
        "fv-negated" => (Arc::new(FvNegated), scalar_domain(ParamRule::Any), None),
        "swap" => (Arc::new(Swap), scalar_domain(ParamRule::None), None),
        "identity" => (Arc::new(Identity), scalar_domain(ParamRule::None), None),
        other => {
            let form = QuadForm::ALL
                .into_iter()
                .find(|f| f.id() == other)
                .ok_or_else(|| CatalogError::UnknownMap(other.to_string()))?;
            (
                Arc::new(FMap::new(form)),
                scalar_domain(ParamRule::Any),
                None,
            )
        }
    };
    Ok(CatalogEntry {
        descriptor: descriptor(spec),
        map,
        domain,
        lax,
    })
}

/// A parameter-free custom map from its coefficients.
pub fn custom_entry(name: &str, map: QuadrirationalMap) -> CatalogEntry {
    CatalogEntry {
        descriptor: MapDescriptor {
            id: name.to_string(),
            description: "custom quadrirational map".to_string(),
            slot_kind: SlotKind::Scalar,
            yang_baxter: None,
            reversible: None,
            parameterized: false,
            constraints: "denominators != 0".to_string(),
            lax_family: None,
        },
        map: Arc::new(CustomQuad {
            name: name.to_string(),
            map,
        }),
        domain: scalar_domain(ParamRule::None),
        lax: None,
    }
}

/// Parses a coefficient file.
///
/// Each non-blank line not starting with `#` has the form
/// `name = c2 c1 c0`, where `name` is one of `a b c d A B C D` and the
/// three coefficients (of the square, linear and constant terms) are
/// rationals `p/q` or integers `p`. Everything after `#` on a line is a
/// comment. Each name must appear exactly once. `a`–`d` are polynomials in
/// `y` and `A`–`D` polynomials in `x`, for
/// `u = (a(y)x + b(y))/(c(y)x + d(y))`, `v = (A(x)y + B(x))/(C(x)y + D(x))`.
pub fn parse_coefficients(text: &str) -> Result<QuadrirationalMap, CatalogError> {
    let mut found: BTreeMap<&str, Poly> = BTreeMap::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |message: String| CatalogError::Parse { line, message };
        let (name, rest) = content
            .split_once('=')
            .ok_or_else(|| err("expected 'name = c2 c1 c0'".into()))?;
        let name = name.trim();
        let key = COEFFICIENT_NAMES
            .into_iter()
            .find(|n| *n == name)
            .ok_or_else(|| err(format!("unknown coefficient name '{name}'")))?;
        let values: Vec<&str> = rest.split_whitespace().collect();
        if values.len() != 3 {
            return Err(err(format!(
                "expected 3 coefficients, found {}",
                values.len()
            )));
        }
        let mut coeffs = values
            .iter()
            .map(|v| parse_rational(v).map_err(|e| err(e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        coeffs.reverse();
        if found.insert(key, Poly::from_coeffs(coeffs)).is_some() {
            return Err(err(format!("coefficient '{name}' given twice")));
        }
    }
    let mut take = |name: &str| {
        found
            .remove(name)
            .ok_or_else(|| CatalogError::MissingCoefficient(name.to_string()))
    };
    let u = [take("a")?, take("b")?, take("c")?, take("d")?];
    let v = [take("A")?, take("B")?, take("C")?, take("D")?];
    QuadrirationalMap::new(u, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    #[test]
    fn registry_lists_required_maps() {
        let ids = map_ids();
        for id in [
            "adler",
            "soliton-rank1",
            "grassmann",
            "crystal",
            "f1",
            "f2",
            "f3",
            "f4",
            "f5",
            "fv-negated",
        ] {
            assert!(ids.contains(&id), "{id}");
            assert!(build(id, &MapOptions::default()).is_ok(), "{id}");
        }
        assert!(matches!(
            build("nope", &MapOptions::default()),
            Err(CatalogError::UnknownMap(_))
        ));
    }

    #[test]
    fn bad_rank_rejected() {
        let options = MapOptions {
            dim: Some(3),
            rank: Some(3),
            form: None,
        };
        assert!(matches!(
            build("grassmann", &options),
            Err(CatalogError::InvalidOption(_))
        ));
    }

    #[test]
    fn parse_f5_file() {
        let text = "# F_V with alpha = 2, beta = 1\n\
                    a = 0 1 0\nb = -1 0 1\nc = 0 0 1\nd = 0 -1 0\n\
                    A = 0 -1 0\nB = 1 0 1   # x^2 + 1\nC = 0 0 -1\nD = 0 1 0\n";
        let parsed = parse_coefficients(text).unwrap();
        assert_eq!(parsed, QuadForm::V.coefficients(&int(2), &int(1)).unwrap());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_coefficients("a = 1 2"),
            Err(CatalogError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_coefficients("q = 1 2 3"),
            Err(CatalogError::Parse { .. })
        ));
        assert!(matches!(
            parse_coefficients("a = 0 1 0.5"),
            Err(CatalogError::Parse { .. })
        ));
        assert!(matches!(
            parse_coefficients("a = 0 1 0"),
            Err(CatalogError::MissingCoefficient(_))
        ));
        assert!(matches!(
            parse_coefficients("a = 0 1 0\na = 0 1 0"),
            Err(CatalogError::Parse { line: 2, .. })
        ));
    }
}
