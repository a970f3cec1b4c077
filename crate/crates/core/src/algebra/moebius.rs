use std::fmt;

use num_traits::{One, Zero};

use super::{AlgebraError, Matrix, Rational};

/// Point `(p : q)` of the rational projective line. Equality is
/// scale-invariant.
#[derive(Clone, Debug)]
pub struct ProjectivePoint {
    p: Rational,
    q: Rational,
}

impl ProjectivePoint {
    pub fn new(p: Rational, q: Rational) -> Result<Self, AlgebraError> {
        if p.is_zero() && q.is_zero() {
            return Err(AlgebraError::ZeroProjectivePoint);
        }
        Ok(ProjectivePoint { p, q })
    }

    pub fn affine(z: Rational) -> Self {
        ProjectivePoint {
            p: z,
            q: Rational::one(),
        }
    }

    pub fn infinity() -> Self {
        ProjectivePoint {
            p: Rational::one(),
            q: Rational::zero(),
        }
    }

    pub fn coords(&self) -> (&Rational, &Rational) {
        (&self.p, &self.q)
    }

    pub fn is_infinite(&self) -> bool {
        self.q.is_zero()
    }

    pub fn to_affine(&self) -> Option<Rational> {
        (!self.q.is_zero()).then(|| &self.p / &self.q)
    }
}

impl PartialEq for ProjectivePoint {
    fn eq(&self, other: &Self) -> bool {
        &self.p * &other.q == &other.p * &self.q
    }
}

impl Eq for ProjectivePoint {}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{})", self.p, self.q)
    }
}

/// `z ↦ (a·z + b)/(c·z + d)` with `ad − bc ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Moebius {
    a: Rational,
    b: Rational,
    c: Rational,
    d: Rational,
}

impl Moebius {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Result<Self, AlgebraError> {
        if (&a * &d - &b * &c).is_zero() {
            return Err(AlgebraError::SingularMoebius);
        }
        Ok(Moebius { a, b, c, d })
    }

    pub fn identity() -> Self {
        Moebius {
            a: Rational::one(),
            b: Rational::zero(),
            c: Rational::zero(),
            d: Rational::one(),
        }
    }

    /// `z ↦ −z`
    pub fn negation() -> Self {
        Moebius {
            a: -Rational::one(),
            b: Rational::zero(),
            c: Rational::zero(),
            d: Rational::one(),
        }
    }

    /// `z ↦ 1/z`
    pub fn inversion() -> Self {
        Moebius {
            a: Rational::zero(),
            b: Rational::one(),
            c: Rational::one(),
            d: Rational::zero(),
        }
    }

    pub fn coefficients(&self) -> (&Rational, &Rational, &Rational, &Rational) {
        (&self.a, &self.b, &self.c, &self.d)
    }

    pub fn matrix(&self) -> Matrix {
        Matrix::from_rows(&[
            vec![self.a.clone(), self.b.clone()],
            vec![self.c.clone(), self.d.clone()],
        ])
        .expect("2x2")
    }

    pub fn is_identity(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d
    }

    pub fn apply(&self, z: &ProjectivePoint) -> ProjectivePoint {
        ProjectivePoint {
            p: &self.a * &z.p + &self.b * &z.q,
            q: &self.c * &z.p + &self.d * &z.q,
        }
    }

    /// Affine evaluation; `None` at the pole.
    pub fn apply_affine(&self, z: &Rational) -> Option<Rational> {
        self.apply(&ProjectivePoint::affine(z.clone())).to_affine()
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &Moebius) -> Moebius {
        let m = &self.matrix() * &inner.matrix();
        Moebius {
            a: m.get(0, 0).clone(),
            b: m.get(0, 1).clone(),
            c: m.get(1, 0).clone(),
            d: m.get(1, 1).clone(),
        }
    }

    /// Projective inverse (the adjugate matrix).
    pub fn inverse(&self) -> Moebius {
        Moebius {
            a: self.d.clone(),
            b: -self.b.clone(),
            c: -self.c.clone(),
            d: self.a.clone(),
        }
    }
}

impl fmt::Display for Moebius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "z -> ({}*z + {})/({}*z + {})",
            self.a, self.b, self.c, self.d
        )
    }
}
