use num_traits::{One, Zero};
use proptest::prelude::*;
use ybmaps::algebra::{
    image_kernel, projector_from_pair, rat, Matrix, Moebius, Poly, PolyMatrix, ProjectivePoint,
    Rational, Subspace,
};

fn small() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(p, q)| rat(p, q))
}

fn vector(len: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(small(), len)
}

fn moebius() -> impl Strategy<Value = Moebius> {
    (small(), small(), small(), small())
        .prop_filter_map("singular", |(a, b, c, d)| Moebius::new(a, b, c, d).ok())
}

fn linear_poly_matrix(size: usize) -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec((small(), small()), size * size).prop_map(move |entries| {
        let mut it = entries.into_iter();
        PolyMatrix::from_fn(size, |_, _| {
            let (c0, c1) = it.next().unwrap();
            Poly::linear(c0, c1)
        })
    })
}

/// Determinant by cofactor expansion along the first row.
fn cofactor_det(m: &Matrix) -> Rational {
    let n = m.rows();
    if n == 1 {
        return m.get(0, 0).clone();
    }
    (0..n)
        .map(|j| {
            let minor = Matrix::from_fn(n - 1, n - 1, |r, c| {
                m.get(r + 1, if c < j { c } else { c + 1 }).clone()
            });
            let term = m.get(0, j) * cofactor_det(&minor);
            if j % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

fn eval_char_poly(cp: &[Poly], zeta: &Rational, eta: &Rational) -> Rational {
    cp.iter()
        .enumerate()
        .map(|(k, c)| c.eval(zeta) * eta.pow(k as i32))
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn span_is_canonical_under_column_mixing(v1 in vector(3), v2 in vector(3), c in small()) {
        let mixed = v1.iter().zip(&v2).map(|(a, b)| a + &c * b).collect::<Vec<_>>();
        let s = Subspace::span(3, &[v1.clone(), v2.clone()]).unwrap();
        let t = Subspace::span(3, &[v2, mixed]).unwrap();
        prop_assert_eq!(s, t);
    }

    #[test]
    fn moebius_inverse_undoes(m in moebius(), z in small()) {
        let p = ProjectivePoint::affine(z);
        let back = m.inverse().apply(&m.apply(&p));
        prop_assert_eq!(back.to_affine(), p.to_affine());
    }

    #[test]
    fn moebius_composition_associates(a in moebius(), b in moebius(), c in moebius(), z in small()) {
        let left = a.compose(&b).compose(&c);
        let right = a.compose(&b.compose(&c));
        prop_assert_eq!(&left, &right);
        let p = ProjectivePoint::affine(z);
        prop_assert_eq!(left.apply(&p), a.apply(&b.apply(&c.apply(&p))));
    }

    #[test]
    fn char_poly_matches_cofactor_oracle(m in linear_poly_matrix(3), zeta in small(), eta in small()) {
        let cp = m.char_poly();
        prop_assert_eq!(cp.len(), 4);
        let shifted = m.eval(&zeta);
        let shifted = Matrix::from_fn(3, 3, |i, j| {
            if i == j { shifted.get(i, j) - &eta } else { shifted.get(i, j).clone() }
        });
        prop_assert_eq!(eval_char_poly(&cp, &zeta, &eta), cofactor_det(&shifted));
    }

    #[test]
    fn product_char_poly_matches_explicit_product(
        a in linear_poly_matrix(2),
        b in linear_poly_matrix(2),
        c in linear_poly_matrix(2),
    ) {
        let explicit = &(&a * &b) * &c;
        let factors = [a, b, c];
        prop_assert_eq!(PolyMatrix::product(2, &factors), explicit.clone());
        prop_assert_eq!(PolyMatrix::product_char_poly(2, &factors), explicit.char_poly());
    }

    #[test]
    fn determinant_is_constant_term(m in linear_poly_matrix(3), zeta in small()) {
        prop_assert_eq!(m.determinant().eval(&zeta), cofactor_det(&m.eval(&zeta)));
    }

    #[test]
    fn projector_from_complementary_pair(image in vector(3), k1 in vector(3), k2 in vector(3)) {
        let l = Subspace::span(3, &[image]).unwrap();
        let k = Subspace::span(3, &[k1, k2]).unwrap();
        prop_assume!(k.is_complement_of(&l));
        let p = projector_from_pair(&k, &l).unwrap();
        prop_assert!(p.is_idempotent());
        prop_assert_eq!(p.trace(), Rational::one());
        let (im, ker) = image_kernel(&p).unwrap();
        prop_assert_eq!(im, l);
        prop_assert_eq!(ker, k);
    }
}

#[test]
fn cofactor_oracle_sanity() {
    let m = Matrix::from_i64(&[&[2, 0, 1], &[1, 3, 0], &[0, 1, 4]]);
    assert_eq!(cofactor_det(&m), m.determinant().unwrap());
    assert_eq!(cofactor_det(&m), rat(25, 1));
    assert!(cofactor_det(&Matrix::from_i64(&[&[1, 2], &[2, 4]])).is_zero());
}
