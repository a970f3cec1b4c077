//! Quadrirational maps `u = (a(y)x + b(y))/(c(y)x + d(y))`,
//! `v = (A(x)y + B(x))/(C(x)y + D(x))` with polynomials of degree at most 2,
//! the normal forms I–V, companion maps and Möbius changes of variables.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::{format_rational, Moebius, Poly, Rational};
use crate::yb::{MapError, Slot, SlotKind, SlotValue, YangBaxterMap};

use super::adler::{param, scalar};
use super::CatalogError;

pub const COEFFICIENT_NAMES: [&str; 8] = ["a", "b", "c", "d", "A", "B", "C", "D"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadrirationalMap {
    /// `a, b, c, d` as polynomials in `y`.
    u: [Poly; 4],
    /// `A, B, C, D` as polynomials in `x`.
    v: [Poly; 4],
}

fn moebius_det(m: &[Poly; 4]) -> Poly {
    &(&m[0] * &m[3]) - &(&m[1] * &m[2])
}

fn eval_fraction(m: &[Poly; 4], t: &Rational, z: &Rational) -> Option<Rational> {
    let num = m[0].eval(t) * z + m[1].eval(t);
    let den = m[2].eval(t) * z + m[3].eval(t);
    (!den.is_zero()).then(|| num / den)
}

/// `S · M · T` for 2×2 matrices stored row-major.
fn sandwich(s: &Moebius, m: [Poly; 4], t: &Moebius) -> [Poly; 4] {
    let mat = |x: &Moebius| {
        let (a, b, c, d) = x.coefficients();
        [a.clone(), b.clone(), c.clone(), d.clone()].map(Poly::constant)
    };
    let mul = |l: &[Poly; 4], r: &[Poly; 4]| -> [Poly; 4] {
        [
            &(&l[0] * &r[0]) + &(&l[1] * &r[2]),
            &(&l[0] * &r[1]) + &(&l[1] * &r[3]),
            &(&l[2] * &r[0]) + &(&l[3] * &r[2]),
            &(&l[2] * &r[1]) + &(&l[3] * &r[3]),
        ]
    };
    mul(&mul(&mat(s), &m), &mat(t))
}

impl QuadrirationalMap {
    /// Checks the degree bound and that neither fraction is identically
    /// constant in its Möbius variable.
    pub fn new(u: [Poly; 4], v: [Poly; 4]) -> Result<Self, CatalogError> {
        for (name, p) in COEFFICIENT_NAMES.iter().zip(u.iter().chain(v.iter())) {
            if p.degree().is_some_and(|d| d > 2) {
                return Err(CatalogError::DegreeTooHigh((*name).to_string()));
            }
        }
        if moebius_det(&u).is_zero() {
            return Err(CatalogError::DegenerateMap("u does not depend on x".into()));
        }
        if moebius_det(&v).is_zero() {
            return Err(CatalogError::DegenerateMap("v does not depend on y".into()));
        }
        Ok(QuadrirationalMap { u, v })
    }

    pub fn u_coefficients(&self) -> &[Poly; 4] {
        &self.u
    }

    pub fn v_coefficients(&self) -> &[Poly; 4] {
        &self.v
    }

    pub fn apply(&self, x: &Rational, y: &Rational) -> Result<(Rational, Rational), MapError> {
        let u = eval_fraction(&self.u, y, x)
            .ok_or_else(|| MapError::SingularInput("u has a pole".into()))?;
        let v = eval_fraction(&self.v, x, y)
            .ok_or_else(|| MapError::SingularInput("v has a pole".into()))?;
        Ok((u, v))
    }

    /// The companion map `(x, v) ↦ (y, u)`.
    pub fn companion(&self, x: &Rational, v: &Rational) -> Result<(Rational, Rational), MapError> {
        let [a, b, c, d] = self.v.clone().map(|p| p.eval(x));
        if (&a * &d - &b * &c).is_zero() {
            return Err(MapError::DegenerateFiber(
                "v does not depend on y at this x".into(),
            ));
        }
        let den = v * &c - &a;
        if den.is_zero() {
            return Err(MapError::DegenerateFiber("no finite y maps to v".into()));
        }
        let y = (&b - v * &d) / den;
        let u = eval_fraction(&self.u, &y, x)
            .ok_or_else(|| MapError::SingularInput("u has a pole".into()))?;
        Ok((y, u))
    }

    /// The map `(x, y) ↦ (σ_u(u), σ_v(v))` with `(u, v)` the image of
    /// `(σ_x(x), σ_y(y))`.
    pub fn conjugate(&self, sigma: &Conjugation) -> QuadrirationalMap {
        let subst = |m: &[Poly; 4], s: &Moebius| {
            let (p, q, r, t) = s.coefficients();
            m.clone().map(|e| e.substitute_moebius(p, q, r, t, 2))
        };
        QuadrirationalMap {
            u: sandwich(&sigma.u, subst(&self.u, &sigma.y), &sigma.x),
            v: sandwich(&sigma.v, subst(&self.v, &sigma.x), &sigma.y),
        }
    }

    /// All eight polynomials in file order.
    pub fn coefficients(&self) -> impl Iterator<Item = (&'static str, &Poly)> {
        COEFFICIENT_NAMES
            .into_iter()
            .zip(self.u.iter().chain(self.v.iter()))
    }
}

impl fmt::Display for QuadrirationalMap {
    /// The coefficient-file form: `name = c2 c1 c0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, p) in self.coefficients() {
            let c: Vec<String> = (0..3).rev().map(|k| format_rational(&p.coeff(k))).collect();
            writeln!(f, "{name} = {}", c.join(" "))?;
        }
        Ok(())
    }
}

/// Four Möbius transformations acting on `x`, `y`, `u`, `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conjugation {
    pub x: Moebius,
    pub y: Moebius,
    pub u: Moebius,
    pub v: Moebius,
}

impl Conjugation {
    pub fn new(x: Moebius, y: Moebius, u: Moebius, v: Moebius) -> Self {
        Conjugation { x, y, u, v }
    }

    pub fn identity() -> Self {
        Self::diagonal(Moebius::identity())
    }

    pub fn diagonal(m: Moebius) -> Self {
        Conjugation::new(m.clone(), m.clone(), m.clone(), m)
    }

    /// `conjugate(conjugate(R, self), outer) = conjugate(R, self.then(outer))`:
    /// input transforms compose as `self ∘ outer`, output transforms as
    /// `outer ∘ self`.
    pub fn then(&self, outer: &Conjugation) -> Conjugation {
        Conjugation {
            x: self.x.compose(&outer.x),
            y: self.y.compose(&outer.y),
            u: outer.u.compose(&self.u),
            v: outer.v.compose(&self.v),
        }
    }
}

/// The five normal forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuadForm {
    I,
    II,
    III,
    IV,
    V,
}

impl QuadForm {
    pub const ALL: [QuadForm; 5] = [
        QuadForm::I,
        QuadForm::II,
        QuadForm::III,
        QuadForm::IV,
        QuadForm::V,
    ];

    pub fn id(self) -> &'static str {
        match self {
            QuadForm::I => "f1",
            QuadForm::II => "f2",
            QuadForm::III => "f3",
            QuadForm::IV => "f4",
            QuadForm::V => "f5",
        }
    }

    /// Constants that make the form degenerate (not birational or with a
    /// division by zero).
    fn admissible(self, alpha: &Rational, beta: &Rational) -> bool {
        match self {
            QuadForm::I => [alpha, beta].iter().all(|c| !c.is_zero() && !c.is_one()),
            QuadForm::II | QuadForm::III => !alpha.is_zero() && !beta.is_zero(),
            QuadForm::IV | QuadForm::V => true,
        }
    }

    /// `(u, v)` from the closed-form expressions.
    pub fn apply(
        self,
        alpha: &Rational,
        beta: &Rational,
        x: &Rational,
        y: &Rational,
    ) -> Result<(Rational, Rational), MapError> {
        if !self.admissible(alpha, beta) {
            return Err(MapError::SingularInput(format!(
                "constants ({alpha}, {beta}) are degenerate for {}",
                self.id()
            )));
        }
        let singular = || MapError::SingularInput("P has a vanishing denominator".into());
        let one = Rational::one();
        let diff = x - y;
        if self != QuadForm::I && diff.is_zero() {
            return Err(singular());
        }
        Ok(match self {
            QuadForm::I => {
                let num = (&one - beta) * x + beta - alpha + (alpha - &one) * y;
                let den =
                    beta * (&one - alpha) * x + (alpha - beta) * y * x + alpha * (beta - &one) * y;
                if den.is_zero() {
                    return Err(singular());
                }
                let p = num / den;
                (alpha * y * &p, beta * x * &p)
            }
            QuadForm::II => {
                let p = (alpha * x - beta * y + beta - alpha) / diff;
                (y / alpha * &p, x / beta * &p)
            }
            QuadForm::III => {
                let p = (alpha * x - beta * y) / diff;
                (y / alpha * &p, x / beta * &p)
            }
            QuadForm::IV => {
                let p = &one + (beta - alpha) / diff;
                (y * &p, x * &p)
            }
            QuadForm::V => {
                let p = (alpha - beta) / diff;
                (y + &p, x + &p)
            }
        })
    }

    /// The same map written in the eight-polynomial form.
    pub fn coefficients(
        self,
        alpha: &Rational,
        beta: &Rational,
    ) -> Result<QuadrirationalMap, CatalogError> {
        let c = |v: Rational| Poly::constant(v);
        let lin = |c1: Rational| Poly::monomial(c1, 1);
        let quad = |c2: Rational, c1: Rational, c0: Rational| Poly::from_coeffs(vec![c0, c1, c2]);
        let (a, b) = (alpha.clone(), beta.clone());
        let zero = Rational::zero;
        let one = Rational::one;
        let (u, v) = match self {
            QuadForm::I => (
                [
                    lin(&a * (one() - &b)),
                    quad(&a * (&a - one()), &a * (&b - &a), zero()),
                    Poly::linear(&b * (one() - &a), &a - &b),
                    lin(&a * (&b - one())),
                ],
                [
                    lin(&b * (&a - one())),
                    quad(&b * (one() - &b), &b * (&b - &a), zero()),
                    Poly::linear(&a * (&b - one()), &a - &b),
                    lin(&b * (one() - &a)),
                ],
            ),
            QuadForm::II => (
                [
                    lin(a.clone()),
                    quad(-b.clone(), &b - &a, zero()),
                    c(a.clone()),
                    lin(-a.clone()),
                ],
                [
                    lin(-b.clone()),
                    quad(a.clone(), &b - &a, zero()),
                    c(-b.clone()),
                    lin(b.clone()),
                ],
            ),
            QuadForm::III => (
                [
                    lin(a.clone()),
                    quad(-b.clone(), zero(), zero()),
                    c(a.clone()),
                    lin(-a.clone()),
                ],
                [
                    lin(-b.clone()),
                    quad(a.clone(), zero(), zero()),
                    c(-b.clone()),
                    lin(b.clone()),
                ],
            ),
            QuadForm::IV => (
                [
                    lin(one()),
                    quad(-one(), &b - &a, zero()),
                    c(one()),
                    lin(-one()),
                ],
                [
                    lin(-one()),
                    quad(one(), &b - &a, zero()),
                    c(-one()),
                    lin(one()),
                ],
            ),
            QuadForm::V => (
                [
                    lin(one()),
                    quad(-one(), zero(), &a - &b),
                    c(one()),
                    lin(-one()),
                ],
                [
                    lin(-one()),
                    quad(one(), zero(), &a - &b),
                    c(-one()),
                    lin(one()),
                ],
            ),
        };
        QuadrirationalMap::new(u, v)
    }
}

/// Normal form `F_{form}` with `α` carried by the first slot and `β` by the
/// second.
#[derive(Clone, Copy, Debug)]
pub struct FMap {
    pub form: QuadForm,
}

impl FMap {
    pub fn new(form: QuadForm) -> Self {
        FMap { form }
    }
}

impl YangBaxterMap for FMap {
    fn id(&self) -> &str {
        self.form.id()
    }

    fn slot_kind(&self) -> SlotKind {
        SlotKind::Scalar
    }

    fn param_arity(&self) -> usize {
        1
    }

    fn apply_slots(&self, x: &Slot, y: &Slot) -> Result<(SlotValue, SlotValue), MapError> {
        let (u, v) = self
            .form
            .apply(param(x)?, param(y)?, scalar(x)?, scalar(y)?)?;
        Ok((SlotValue::Scalar(u), SlotValue::Scalar(v)))
    }
}

/// `F_V` after `x ↦ −x`, `y ↦ −y`: `u = −y − P`, `v = −x − P`,
/// `P = (α − β)/(x − y)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct FvNegated;

impl YangBaxterMap for FvNegated {
    fn id(&self) -> &str {
        "fv-negated"
    }

    fn slot_kind(&self) -> SlotKind {
        SlotKind::Scalar
    }

    fn param_arity(&self) -> usize {
        1
    }

    fn apply_slots(&self, x: &Slot, y: &Slot) -> Result<(SlotValue, SlotValue), MapError> {
        let (alpha, beta) = (param(x)?, param(y)?);
        let (x, y) = (scalar(x)?, scalar(y)?);
        let diff = x - y;
        if diff.is_zero() {
            return Err(MapError::SingularInput("x = y".into()));
        }
        let p = (alpha - beta) / diff;
        Ok((SlotValue::Scalar(-(y + &p)), SlotValue::Scalar(-(x + &p))))
    }
}

/// A quadrirational map with fixed coefficients, e.g. loaded from a file.
#[derive(Clone, Debug)]
pub struct CustomQuad {
    pub name: String,
    pub map: QuadrirationalMap,
}

impl YangBaxterMap for CustomQuad {
    fn id(&self) -> &str {
        &self.name
    }

    fn slot_kind(&self) -> SlotKind {
        SlotKind::Scalar
    }

    fn param_arity(&self) -> usize {
        0
    }

    fn apply_slots(&self, x: &Slot, y: &Slot) -> Result<(SlotValue, SlotValue), MapError> {
        let (u, v) = self.map.apply(scalar(x)?, scalar(y)?)?;
        Ok((SlotValue::Scalar(u), SlotValue::Scalar(v)))
    }
}

/// A scalar map after a change of variables.
#[derive(Clone)]
pub struct Conjugated {
    pub name: String,
    pub inner: Arc<dyn YangBaxterMap>,
    pub sigma: Conjugation,
}

impl Conjugated {
    pub fn new(name: impl Into<String>, inner: Arc<dyn YangBaxterMap>, sigma: Conjugation) -> Self {
        Conjugated {
            name: name.into(),
            inner,
            sigma,
        }
    }
}

fn moebius_affine(m: &Moebius, z: &Rational) -> Result<Rational, MapError> {
    m.apply_affine(z)
        .ok_or_else(|| MapError::SingularInput("change of variables hits a pole".into()))
}

impl YangBaxterMap for Conjugated {
    fn id(&self) -> &str {
        &self.name
    }

    fn slot_kind(&self) -> SlotKind {
        SlotKind::Scalar
    }

    fn param_arity(&self) -> usize {
        self.inner.param_arity()
    }

    fn apply_slots(&self, x: &Slot, y: &Slot) -> Result<(SlotValue, SlotValue), MapError> {
        let sx = Slot::new(
            SlotValue::Scalar(moebius_affine(&self.sigma.x, scalar(x)?)?),
            x.param.clone(),
        );
        let sy = Slot::new(
            SlotValue::Scalar(moebius_affine(&self.sigma.y, scalar(y)?)?),
            y.param.clone(),
        );
        let (u, v) = self.inner.apply_slots(&sx, &sy)?;
        let u = u.as_scalar().ok_or(MapError::SlotKindMismatch {
            expected: SlotKind::Scalar,
            found: u.kind(),
        })?;
        let v = v.as_scalar().ok_or(MapError::SlotKindMismatch {
            expected: SlotKind::Scalar,
            found: v.kind(),
        })?;
        Ok((
            SlotValue::Scalar(moebius_affine(&self.sigma.u, u)?),
            SlotValue::Scalar(moebius_affine(&self.sigma.v, v)?),
        ))
    }
}

/// `(id, −, −, id)`: turns `F_V` into the Adler map.
pub fn fv_to_adler() -> Conjugation {
    Conjugation::new(
        Moebius::identity(),
        Moebius::negation(),
        Moebius::negation(),
        Moebius::identity(),
    )
}

/// `(−, −, id, id)`: turns `F_V` into [`FvNegated`].
pub fn fv_to_negated() -> Conjugation {
    Conjugation::new(
        Moebius::negation(),
        Moebius::negation(),
        Moebius::identity(),
        Moebius::identity(),
    )
}
