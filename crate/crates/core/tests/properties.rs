use appell_hankel::exact::{Domain, Poly, Rational, Term};
use appell_hankel::hankel::det::{bareiss, cofactor, gauss};
use appell_hankel::hankel::{checkerboard_split, det_matrix, hankel_det_of, Algorithm, Support};
use appell_hankel::orthopoly::{hankel_from_recurrence, monic_ops_from_terms, recurrence_from_terms, functional};
use appell_hankel::sequences::numbers::binomial;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(p, q)| Rational::new(p, q))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(rational(), 0..5).prop_map(Poly::new)
}

fn matrix(n: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    prop::collection::vec(prop::collection::vec(rational(), n), n)
}

fn sized_matrix() -> impl Strategy<Value = Vec<Vec<Rational>>> {
    (0usize..=5).prop_flat_map(matrix)
}

fn moments(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(rational(), 2 * n + 1)
}

fn scalars(v: &[Rational]) -> Vec<Term> {
    v.iter().cloned().map(Term::Scalar).collect()
}

proptest! {
    #[test]
    fn rational_field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(a.checked_div(&b).unwrap() * &b, a);
        }
    }

    #[test]
    fn rational_text_and_json_round_trip(a in rational()) {
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), a);
    }

    #[test]
    fn poly_ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&(&p - &q) + &q, p.clone());
    }

    #[test]
    fn poly_eval_is_a_homomorphism(p in poly(), q in poly(), v in rational()) {
        prop_assert_eq!((&p * &q).eval(&v), p.eval(&v) * q.eval(&v));
        prop_assert_eq!((&p + &q).eval(&v), p.eval(&v) + q.eval(&v));
    }

    #[test]
    fn poly_exact_division_undoes_multiplication(p in poly(), q in poly()) {
        prop_assume!(!q.is_zero());
        prop_assert_eq!((&p * &q).div_exact(&q).unwrap(), p);
    }

    #[test]
    fn poly_json_round_trip(p in poly()) {
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Poly>(&json).unwrap(), p);
    }

    #[test]
    fn term_promotion_keeps_values(a in rational(), p in poly()) {
        let s = Term::Scalar(a.clone());
        prop_assert_eq!(s.clone(), Term::Poly(Poly::constant(a.clone())));
        prop_assert_eq!((s * Term::Poly(p.clone())).to_poly(), p.scale(&a));
    }

    #[test]
    fn engines_agree_on_rational_matrices(m in sized_matrix()) {
        let g = gauss(m.clone()).value;
        let b = bareiss(m.clone()).unwrap().value;
        prop_assert_eq!(&g, &b);
        prop_assert_eq!(g, cofactor(&m));
    }

    #[test]
    fn engines_agree_on_polynomial_matrices(
        m in (1usize..=3).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(poly(), n), n))
    ) {
        prop_assert_eq!(bareiss(m.clone()).unwrap().value, cofactor(&m));
    }

    #[test]
    fn determinant_is_multiplicative(a in matrix(3), b in matrix(3)) {
        let ab: Vec<Vec<Rational>> = (0..3)
            .map(|i| (0..3).map(|j| (0..3).map(|k| &a[i][k] * &b[k][j]).sum()).collect())
            .collect();
        prop_assert_eq!(gauss(ab).value, gauss(a).value * gauss(b).value);
    }

    #[test]
    fn hankel_scaling_law(c in (0usize..=3).prop_flat_map(moments)) {
        let n = (c.len() - 1) / 2;
        let x = Poly::x();
        let scaled: Vec<Term> = c.iter().enumerate().map(|(k, ck)| Term::Poly(x.pow(k as u32).scale(ck))).collect();
        let lhs = hankel_det_of(&scaled).unwrap();
        let rhs = Term::Poly(x.pow((n * (n + 1)) as u32)).times(&hankel_det_of(&scalars(&c)).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hankel_binomial_invariance(c in (0usize..=3).prop_flat_map(moments)) {
        let x = Poly::x();
        let shifted: Vec<Term> = (0..c.len())
            .map(|k| {
                let mut p = Poly::zero();
                for (j, cj) in c.iter().enumerate().take(k + 1) {
                    p = &p + &x.pow((k - j) as u32).scale(&(cj * Rational::from(binomial(k as u64, j as u64))));
                }
                Term::Poly(p)
            })
            .collect();
        prop_assert_eq!(hankel_det_of(&shifted).unwrap(), hankel_det_of(&scalars(&c)).unwrap());
    }

    #[test]
    fn checkerboard_split_matches_elimination(
        c in (0usize..=5).prop_flat_map(moments),
        odd in any::<bool>(),
    ) {
        // zero every moment of the unwanted parity
        let c: Vec<Term> = c
            .into_iter()
            .enumerate()
            .map(|(k, v)| Term::Scalar(if (k % 2 == 1) != odd { Rational::zero() } else { v }))
            .collect();
        let n = (c.len() - 1) / 2;
        let rows: Vec<Vec<Term>> = (0..=n).map(|i| (0..=n).map(|j| c[i + j].clone()).collect()).collect();
        let split = checkerboard_split(&rows).unwrap();
        let plain = det_matrix(&rows, Algorithm::FractionFreeBareiss).unwrap().value;
        if !odd {
            prop_assert_eq!(split.support, Support::Even);
        }
        prop_assert_eq!(split.total, plain);
    }

    #[test]
    fn recurrence_product_reproduces_hankel(c in (1usize..=4).prop_flat_map(|n| moments(n + 1))) {
        let n = (c.len() - 1) / 2 - 1;
        for k in 0..=n {
            let sub: Vec<Vec<Rational>> = (0..=k).map(|i| (0..=k).map(|j| c[i + j].clone()).collect()).collect();
            prop_assume!(!gauss(sub).value.is_zero());
        }
        let coeffs = recurrence_from_terms(&c, n).unwrap();
        let want = hankel_det_of(&scalars(&c[..=2 * n])).unwrap();
        prop_assert_eq!(hankel_from_recurrence(&Term::Scalar(c[0].clone()), &coeffs, n).unwrap(), want);
    }

    #[test]
    fn monic_polys_are_orthogonal(c in (1usize..=3).prop_flat_map(|n| moments(n + 1))) {
        let n = (c.len() - 1) / 2;
        for k in 0..n {
            let sub: Vec<Vec<Rational>> = (0..=k).map(|i| (0..=k).map(|j| c[i + j].clone()).collect()).collect();
            prop_assume!(!gauss(sub).value.is_zero());
        }
        let ops = monic_ops_from_terms(&c, n).unwrap();
        for (m, p) in ops.polys.iter().enumerate() {
            for r in 0..m {
                prop_assert!(functional(&c, p, r).is_zero(), "<y^{} P_{}> != 0", r, m);
            }
        }
    }

    #[test]
    fn factorial_products_convert(n in 0u64..=12, nu in 0u64..=2) {
        let fact = |m: u64| Rational::from(appell_hankel::sequences::numbers::factorial(m));
        let lhs: Rational = (1..=n).map(|l| fact(2 * l + nu)).product();
        let rhs = fact(nu).pow(n as i64)
            * (1..=n)
                .map(|l| Rational::from((2 * l - 1 + nu) * (2 * l + nu)).pow((n + 1 - l) as i64))
                .product::<Rational>();
        prop_assert_eq!(lhs, rhs);
    }
}
