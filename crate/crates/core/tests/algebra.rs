mod common;

use common::*;
use proptest::prelude::*;
use zeropatterns::charpoly::{char_poly, det_bruteforce, poly_product, SquareMatrix};
use zeropatterns::exactalg::{exact_div, gcd, BigRational, MultiPoly, RationalFunction};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn addition_associates(p in poly3(), r in poly3(), s in poly3()) {
        prop_assert_eq!(&(&p + &r) + &s, &p + &(&r + &s));
    }

    #[test]
    fn multiplication_distributes(p in poly3(), r in poly3(), s in poly3()) {
        prop_assert_eq!(&p * &(&r + &s), &(&p * &r) + &(&p * &s));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn exact_div_undoes_multiplication(p in poly3(), r in poly3()) {
        prop_assume!(!r.is_zero());
        prop_assert_eq!(exact_div(&(&p * &r), &r).unwrap(), p);
    }

    #[test]
    fn gcd_divides_and_extracts_common_factor(p in poly3(), r in poly3(), s in poly3()) {
        prop_assume!(!p.is_zero() && !r.is_zero() && !s.is_zero());
        let g = gcd(&p, &r).unwrap();
        prop_assert!(exact_div(&p, &g).is_ok());
        prop_assert!(exact_div(&r, &g).is_ok());
        let gs = gcd(&(&p * &s), &(&r * &s)).unwrap();
        prop_assert_eq!(gs, (&g * &s).monic());
    }

    #[test]
    fn reduction_is_idempotent(p in poly3(), r in poly3()) {
        prop_assume!(!r.is_zero());
        let f = RationalFunction::new(p, r).unwrap();
        prop_assert_eq!(f.reduce(), f.clone());
        prop_assert_eq!(f.reduce().reduce(), f.reduce());
        prop_assert_eq!(f.denom().leading_coeff().cloned(), Some(q(1, 1)));
    }

    #[test]
    fn evaluation_is_multiplicative(p in poly3(), r in poly3(), a in proptest::collection::vec(small_rational(), 3)) {
        let lhs = (&p * &r).evaluate(&a).unwrap();
        prop_assert_eq!(lhs, p.evaluate(&a).unwrap() * r.evaluate(&a).unwrap());
    }
}

fn coeff_trace_det(m: &SquareMatrix<BigRational>) -> (BigRational, BigRational) {
    let n = m.n();
    let d = det_bruteforce(m).unwrap();
    (-m.trace(), if n.is_multiple_of(2) { d } else { -d })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(250))]

    #[test]
    fn char_poly_matches_cofactor_oracle(m in (1usize..=5).prop_flat_map(rational_matrix)) {
        let n = m.n();
        let p = char_poly(&m);
        prop_assert_eq!(&p, &charpoly_oracle(&m));
        let (top, constant) = coeff_trace_det(&m);
        prop_assert_eq!(&p.coeffs()[n - 1], &top);
        prop_assert_eq!(&p.coeffs()[0], &constant);
    }

    #[test]
    fn similarity_by_diagonal_preserves_char_poly(m in rational_matrix(4), d in proptest::collection::vec(nonzero_rational(), 4)) {
        let c = m.conjugate_by_diagonal(&d).unwrap();
        prop_assert_eq!(char_poly(&c), char_poly(&m));
    }

    #[test]
    fn block_rule(a in rational_matrix(3), b in rational_matrix(2)) {
        let whole = SquareMatrix::block_diagonal(&[a.clone(), b.clone()]);
        prop_assert_eq!(char_poly(&whole), poly_product(&[char_poly(&a), char_poly(&b)]).unwrap());
    }

    #[test]
    fn scaling_rule(m in rational_matrix(4), c in nonzero_rational()) {
        let p = char_poly(&m);
        let s = char_poly(&m.scale(&c));
        let n = m.n();
        for k in 0..n {
            let factor = num_traits::Pow::pow(c.clone(), (n - k) as u32);
            prop_assert_eq!(&s.coeffs()[k], &(p.coeffs()[k].clone() * factor));
        }
    }
}

#[test]
fn symbolic_char_poly_specializes() {
    // char_poly over Q[x1..x3] evaluated at a point equals char_poly of the evaluated matrix
    let ctx = ctx3();
    let v = |i| MultiPoly::var(&ctx, i);
    let one = MultiPoly::one(&ctx);
    let m = SquareMatrix::from_rows(vec![
        vec![v(0), one.clone(), MultiPoly::zero(&ctx)],
        vec![MultiPoly::zero(&ctx), v(1), one.clone()],
        vec![v(2), MultiPoly::zero(&ctx), &v(0) * &v(1)],
    ])
    .unwrap();
    let sym = char_poly(&m);
    let point = [q(2, 3), q(-1, 1), q(5, 2)];
    let num = char_poly(&m.map(|e| e.evaluate(&point).unwrap()));
    for (s, n) in sym.coeffs().iter().zip(num.coeffs()) {
        assert_eq!(s.evaluate(&point).unwrap(), *n);
    }
}
