use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Matrix, Poly, Rational};

/// Square matrix whose entries are polynomials in one indeterminate
/// (the spectral parameter ζ for Lax matrices).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    size: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> Poly) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { size, entries }
    }

    pub fn identity(size: usize) -> Self {
        Self::from_fn(size, |i, j| if i == j { Poly::one() } else { Poly::zero() })
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        assert!(m.is_square(), "polynomial matrices are square");
        Self::from_fn(m.rows(), |i, j| Poly::constant(m.get(i, j).clone()))
    }

    /// `constant + ζ·linear`
    pub fn linear(constant: &Matrix, linear: &Matrix) -> Self {
        assert_eq!(constant.rows(), linear.rows());
        assert!(constant.is_square() && linear.is_square());
        Self::from_fn(constant.rows(), |i, j| {
            Poly::linear(constant.get(i, j).clone(), linear.get(i, j).clone())
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.size + j]
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.entries.iter().filter_map(Poly::degree).max()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    pub fn scale(&self, factor: &Poly) -> PolyMatrix {
        PolyMatrix {
            size: self.size,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    pub fn transpose(&self) -> PolyMatrix {
        Self::from_fn(self.size, |i, j| self.get(j, i).clone())
    }

    pub fn eval(&self, t: &Rational) -> Matrix {
        Matrix::from_fn(self.size, self.size, |i, j| self.get(i, j).eval(t))
    }

    pub fn trace(&self) -> Poly {
        (0..self.size).fold(Poly::zero(), |acc, i| &acc + self.get(i, i))
    }

    /// True when `other = c(ζ)·self` for a nonzero rational function `c`,
    /// tested by cross-multiplying every entry against the first nonzero
    /// entry of `self`.
    pub fn proportional_to(&self, other: &PolyMatrix) -> bool {
        if self.size != other.size {
            return false;
        }
        let Some(k) = self.entries.iter().position(|e| !e.is_zero()) else {
            return other.is_zero();
        };
        let (a0, b0) = (&self.entries[k], &other.entries[k]);
        !b0.is_zero()
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| a * b0 == b * a0)
    }

    /// `factors[0] · factors[1] ⋯`, computed over `Z[ζ]` after clearing the
    /// denominators of each factor so that rationals are reduced only once.
    pub fn product(size: usize, factors: &[PolyMatrix]) -> PolyMatrix {
        let (denom, acc) = int_product(size, factors);
        PolyMatrix {
            size,
            entries: acc
                .into_iter()
                .map(|p| {
                    Poly::from_coeffs(
                        p.into_iter()
                            .map(|x| Rational::new(x, denom.clone()))
                            .collect(),
                    )
                })
                .collect(),
        }
    }

    /// `(D, D·self)` with `D` the least common denominator of all coefficients.
    fn cleared(&self) -> (BigInt, Vec<IntPoly>) {
        let denom = self
            .entries
            .iter()
            .flat_map(|p| p.coeffs().iter().map(|c| c.denom().clone()))
            .fold(BigInt::one(), |acc, d| acc.lcm(&d));
        let ints = self
            .entries
            .iter()
            .map(|p| {
                p.coeffs()
                    .iter()
                    .map(|c| c.numer() * (&denom / c.denom()))
                    .collect()
            })
            .collect();
        (denom, ints)
    }

    /// Coefficients of `η^k`, `k = 0..=size`, in `det(M − ηI)`; each one is a
    /// polynomial in ζ. Denominators are cleared once (`A = D·M` with integer
    /// polynomial entries) and the Faddeev–LeVerrier recursion runs over
    /// `Z[ζ]`, where its divisions by `1..=size` are exact. The coefficients
    /// of `M` are then `c_k(A) / D^{size−k}`.
    pub fn char_poly(&self) -> Vec<Poly> {
        let (denom, a) = self.cleared();
        int_char_poly(self.size, &a, &denom)
    }

    /// Characteristic polynomial of `factors[0] · factors[1] ⋯` without
    /// reducing the product's coefficients to lowest terms first.
    pub fn product_char_poly(size: usize, factors: &[PolyMatrix]) -> Vec<Poly> {
        let (denom, ints) = int_product(size, factors);
        int_char_poly(size, &ints, &denom)
    }

    /// Determinant, read off as the constant term of the characteristic
    /// polynomial.
    pub fn determinant(&self) -> Poly {
        self.char_poly().swap_remove(0)
    }
}

/// `(D, D·∏factors)` over `Z[ζ]`.
fn int_product(size: usize, factors: &[PolyMatrix]) -> (BigInt, Vec<IntPoly>) {
    let mut acc: Vec<IntPoly> = vec![Vec::new(); size * size];
    for i in 0..size {
        acc[i * size + i] = vec![BigInt::one()];
    }
    let mut denom = BigInt::one();
    for f in factors {
        assert_eq!(f.size, size, "polynomial matrix sizes must agree");
        let (d, ints) = f.cleared();
        acc = int_mat_mul(size, &acc, &ints);
        denom *= d;
    }
    (denom, acc)
}

/// Coefficients of `η^k` in `det(M − ηI)` for `M = A / D`.
fn int_char_poly(n: usize, a: &[IntPoly], denom: &BigInt) -> Vec<Poly> {
    // c[k] is the coefficient of η^k in det(ηI − A).
    let mut c: Vec<IntPoly> = vec![Vec::new(); n + 1];
    c[n] = vec![BigInt::one()];
    let mut m_k: Vec<IntPoly> = vec![Vec::new(); n * n];
    for k in 1..=n {
        let mut shifted = int_mat_mul(n, a, &m_k);
        for i in 0..n {
            shifted[i * n + i] = int_add(&shifted[i * n + i], &c[n - k + 1]);
        }
        let product = int_mat_mul(n, a, &shifted);
        let trace = (0..n).fold(Vec::new(), |acc, i| int_add(&acc, &product[i * n + i]));
        let divisor = BigInt::from(k);
        c[n - k] = trace.iter().map(|t| -(t / &divisor)).collect();
        m_k = shifted;
    }
    let sign = if n % 2 == 1 {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    c.into_iter()
        .enumerate()
        .map(|(k, poly)| {
            let scale = denom.pow((n - k) as u32);
            Poly::from_coeffs(
                poly.into_iter()
                    .map(|x| Rational::new(&sign * x, scale.clone()))
                    .collect(),
            )
        })
        .collect()
}

/// Integer polynomial, lowest degree first; may carry trailing zeros.
type IntPoly = Vec<BigInt>;

fn int_add(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.clone();
    for (o, x) in out.iter_mut().zip(short) {
        *o += x;
    }
    out
}

fn int_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn int_mat_mul(n: usize, a: &[IntPoly], b: &[IntPoly]) -> Vec<IntPoly> {
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            out.push((0..n).fold(Vec::new(), |acc, k| {
                int_add(&acc, &int_mul(&a[i * n + k], &b[k * n + j]))
            }));
        }
    }
    out
}

impl Mul for &PolyMatrix {
    type Output = PolyMatrix;

    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.size, rhs.size, "polynomial matrix sizes must agree");
        let n = self.size;
        PolyMatrix::from_fn(n, |i, j| {
            (0..n).fold(Poly::zero(), |acc, k| {
                let (a, b) = (self.get(i, k), rhs.get(k, j));
                if a.is_zero() || b.is_zero() {
                    acc
                } else {
                    &acc + &(a * b)
                }
            })
        })
    }
}

impl Add for &PolyMatrix {
    type Output = PolyMatrix;

    fn add(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.size, rhs.size, "polynomial matrix sizes must agree");
        PolyMatrix {
            size: self.size,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &PolyMatrix {
    type Output = PolyMatrix;

    fn sub(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.size, rhs.size, "polynomial matrix sizes must agree");
        PolyMatrix {
            size: self.size,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.size {
            if i > 0 {
                write!(f, ", ")?;
            }
            let row: Vec<String> = (0..self.size).map(|j| self.get(i, j).to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl From<&Matrix> for PolyMatrix {
    fn from(m: &Matrix) -> Self {
        PolyMatrix::from_matrix(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    fn zeta() -> Poly {
        Poly::var()
    }

    /// Cofactor-expansion determinant of a constant matrix: independent oracle.
    fn cofactor_det(m: &Matrix) -> Rational {
        let n = m.rows();
        if n == 0 {
            return int(1);
        }
        (0..n).fold(Rational::zero(), |acc, j| {
            let minor = Matrix::from_fn(n - 1, n - 1, |r, c| {
                m.get(r + 1, if c < j { c } else { c + 1 }).clone()
            });
            let term = m.get(0, j) * cofactor_det(&minor);
            if j % 2 == 0 {
                acc + term
            } else {
                acc - term
            }
        })
    }

    #[test]
    fn scalar_zeta_matrix() {
        let m = PolyMatrix::identity(2).scale(&zeta());
        let chi = m.char_poly();
        assert_eq!(
            chi,
            vec![
                Poly::monomial(int(1), 2),
                Poly::monomial(int(-2), 1),
                Poly::one()
            ]
        );
    }

    #[test]
    fn odd_size_sign_convention() {
        // det(ζI − ηI) for 3×3 is (ζ − η)³ = ζ³ − 3ζ²η + 3ζη² − η³.
        let m = PolyMatrix::identity(3).scale(&zeta());
        let chi = m.char_poly();
        assert_eq!(chi[0], Poly::monomial(int(1), 3));
        assert_eq!(chi[1], Poly::monomial(int(-3), 2));
        assert_eq!(chi[2], Poly::monomial(int(3), 1));
        assert_eq!(chi[3], Poly::constant(int(-1)));
    }

    #[test]
    fn char_poly_agrees_with_cofactor_oracle_at_a_point() {
        let m = PolyMatrix::from_fn(3, |i, j| {
            Poly::from_coeffs(vec![
                rat(i as i64 + 1, j as i64 + 2),
                int((i * j) as i64 - 1),
                rat(1, 3),
            ])
        });
        let zeta0 = rat(-3, 2);
        let eta0 = rat(5, 7);
        let chi = m.char_poly();
        let via_poly = chi
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (k, c)| {
                acc + c.eval(&zeta0) * eta0.pow(k as i32)
            });
        let shifted = &m.eval(&zeta0) - &Matrix::identity(3).scale(&eta0);
        assert_eq!(via_poly, cofactor_det(&shifted));
    }

    #[test]
    fn proportionality_by_rational_function() {
        let a = PolyMatrix::linear(&Matrix::from_i64(&[&[1, 0], &[2, 3]]), &Matrix::identity(2));
        let factor = Poly::linear(int(1), int(-2));
        assert!(a.proportional_to(&a.scale(&factor)));
        assert!(a.scale(&factor).proportional_to(&a));
        assert!(!a.proportional_to(&PolyMatrix::identity(2)));
    }
}
