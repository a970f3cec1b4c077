use std::fmt;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::algebra::{format_rational, Rational, Subspace};

use super::YbError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SlotKind {
    Scalar,
    ScalarPair,
    Vector,
    VectorCovector,
    Projector,
    Tuple,
}

impl fmt::Display for SlotKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            SlotKind::Scalar => "scalar",
            SlotKind::ScalarPair => "scalar-pair",
            SlotKind::Vector => "vector",
            SlotKind::VectorCovector => "vector-covector",
            SlotKind::Projector => "projector",
            SlotKind::Tuple => "tuple",
        };
        f.write_str(name)
    }
}

/// An element of the set `X` a map acts on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SlotValue {
    Scalar(Rational),
    ScalarPair(Rational, Rational),
    Vector(Vec<Rational>),
    /// A vector and a covector, standing for the rank-one projector
    /// `ξ ⊗ η / (ξ, η)`.
    VectorCovector {
        vector: Vec<Rational>,
        covector: Vec<Rational>,
    },
    /// A projector given by its kernel and image.
    Projector {
        kernel: Subspace,
        image: Subspace,
    },
    Tuple(Vec<Rational>),
}

impl SlotValue {
    pub fn kind(&self) -> SlotKind {
        match self {
            SlotValue::Scalar(_) => SlotKind::Scalar,
            SlotValue::ScalarPair(..) => SlotKind::ScalarPair,
            SlotValue::Vector(_) => SlotKind::Vector,
            SlotValue::VectorCovector { .. } => SlotKind::VectorCovector,
            SlotValue::Projector { .. } => SlotKind::Projector,
            SlotValue::Tuple(_) => SlotKind::Tuple,
        }
    }

    pub fn as_scalar(&self) -> Option<&Rational> {
        match self {
            SlotValue::Scalar(x) => Some(x),
            _ => None,
        }
    }

    pub fn as_tuple(&self) -> Option<&[Rational]> {
        match self {
            SlotValue::Tuple(x) => Some(x),
            _ => None,
        }
    }

    pub fn as_vector_covector(&self) -> Option<(&[Rational], &[Rational])> {
        match self {
            SlotValue::VectorCovector { vector, covector } => Some((vector, covector)),
            _ => None,
        }
    }

    pub fn as_projector(&self) -> Option<(&Subspace, &Subspace)> {
        match self {
            SlotValue::Projector { kernel, image } => Some((kernel, image)),
            _ => None,
        }
    }

    /// Named rational components, in a fixed order. Indices are 1-based.
    pub fn components(&self) -> Vec<(String, Rational)> {
        fn indexed(prefix: &str, values: &[Rational]) -> Vec<(String, Rational)> {
            values
                .iter()
                .enumerate()
                .map(|(i, v)| (format!("{prefix}[{}]", i + 1), v.clone()))
                .collect()
        }
        fn basis(prefix: &str, s: &Subspace) -> Vec<(String, Rational)> {
            s.vectors()
                .iter()
                .enumerate()
                .flat_map(|(b, v)| indexed(&format!("{prefix}.b{}", b + 1), v))
                .collect()
        }
        match self {
            SlotValue::Scalar(x) => vec![("x".to_string(), x.clone())],
            SlotValue::ScalarPair(a, b) => {
                vec![("x1".to_string(), a.clone()), ("x2".to_string(), b.clone())]
            }
            SlotValue::Vector(v) => indexed("v", v),
            SlotValue::VectorCovector { vector, covector } => {
                let mut out = indexed("xi", vector);
                out.extend(indexed("eta", covector));
                out
            }
            SlotValue::Projector { kernel, image } => {
                let mut out = basis("K", kernel);
                out.extend(basis("L", image));
                out
            }
            SlotValue::Tuple(v) => indexed("x", v),
        }
    }
}

impl fmt::Display for SlotValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components()
            .iter()
            .map(|(name, v)| format!("{name}={v}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// A value together with the parameter that travels with it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Slot {
    pub value: SlotValue,
    pub param: Option<Rational>,
}

impl Slot {
    pub fn new(value: SlotValue, param: Option<Rational>) -> Self {
        Slot { value, param }
    }

    pub fn scalar(x: Rational, param: Rational) -> Self {
        Slot::new(SlotValue::Scalar(x), Some(param))
    }

    pub fn bare(value: SlotValue) -> Self {
        Slot::new(value, None)
    }
}

impl Serialize for Slot {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Components<'a>(&'a SlotValue);

        impl Serialize for Components<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let parts = self.0.components();
                let mut map = serializer.serialize_map(Some(parts.len()))?;
                for (name, v) in &parts {
                    map.serialize_entry(name, &format_rational(v))?;
                }
                map.end()
            }
        }

        let mut map = serializer.serialize_map(Some(3))?;
        map.serialize_entry("kind", &self.value.kind())?;
        map.serialize_entry("param", &self.param.as_ref().map(format_rational))?;
        map.serialize_entry("components", &Components(&self.value))?;
        map.end()
    }
}

/// An element of `X^n` with its parameters, `n ≥ 2`, all slots of one kind.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct LabeledTuple {
    slots: Vec<Slot>,
}

impl LabeledTuple {
    pub fn new(slots: Vec<Slot>) -> Result<Self, YbError> {
        if slots.len() < 2 {
            return Err(YbError::TooShort(slots.len()));
        }
        let kind = slots[0].value.kind();
        if slots.iter().any(|s| s.value.kind() != kind) {
            return Err(YbError::MixedKinds);
        }
        Ok(LabeledTuple { slots })
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    /// 1-based access.
    pub fn slot(&self, index: usize) -> &Slot {
        &self.slots[index - 1]
    }

    pub fn kind(&self) -> SlotKind {
        self.slots[0].value.kind()
    }

    pub fn params(&self) -> Vec<Option<Rational>> {
        self.slots.iter().map(|s| s.param.clone()).collect()
    }

    pub fn into_slots(self) -> Vec<Slot> {
        self.slots
    }

    /// Replaces the values at 1-based positions `i` and `j`, keeping their
    /// parameters in place.
    pub(crate) fn with_values(
        &self,
        i: usize,
        vi: SlotValue,
        j: usize,
        vj: SlotValue,
    ) -> LabeledTuple {
        let mut slots = self.slots.clone();
        slots[i - 1].value = vi;
        slots[j - 1].value = vj;
        LabeledTuple { slots }
    }

    /// Swaps the whole slots (values and parameters) at 1-based `i` and `j`.
    pub fn permuted(&self, i: usize, j: usize) -> LabeledTuple {
        let mut slots = self.slots.clone();
        slots.swap(i - 1, j - 1);
        LabeledTuple { slots }
    }
}

impl fmt::Display for LabeledTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .slots
            .iter()
            .map(|s| match &s.param {
                Some(p) => format!("{} @ {p}", s.value),
                None => s.value.to_string(),
            })
            .collect();
        write!(f, "({})", parts.join("; "))
    }
}
