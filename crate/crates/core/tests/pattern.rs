mod common;

use common::*;
use proptest::prelude::*;
use zeropatterns::charpoly::char_poly;
use zeropatterns::exactalg::BigRational;
use zeropatterns::pattern_s::{
    normalize_to_x, phi_symbolic, scale_realization, witness_all_ones_spectrum, PatternError, XParams, ZeroPattern,
};

fn params() -> impl Strategy<Value = XParams<BigRational>> {
    proptest::collection::vec(nonzero_rational(), 8).prop_map(|v| XParams::new(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn symbolic_and_numeric_coefficients_agree(p in params()) {
        let numeric = char_poly(&p.matrix());
        let symbolic = phi_symbolic().evaluate(p.values()).unwrap();
        prop_assert_eq!(numeric.coeffs(), &symbolic[..]);
    }

    #[test]
    fn support_is_always_s(p in params()) {
        let m = p.matrix();
        prop_assert_eq!(ZeroPattern::of_matrix(&m), ZeroPattern::s());
        prop_assert_eq!(m.nonzero_count(), 15);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normalization_undoes_diagonal_conjugation(p in params(), d in proptest::collection::vec(nonzero_rational(), 8)) {
        let m = p.matrix().conjugate_by_diagonal(&d).unwrap();
        let n = normalize_to_x(&m).unwrap();
        prop_assert_eq!(&n.params, &p);
        prop_assert_eq!(n.diagonal.len(), 8);
        prop_assert_eq!(char_poly(&m), char_poly(&p.matrix()));
    }

    #[test]
    fn scaling_composes(p in params(), a in nonzero_rational(), b in nonzero_rational()) {
        let twice = scale_realization(&scale_realization(&p, &a).unwrap(), &b).unwrap();
        prop_assert_eq!(twice, scale_realization(&p, &(a * b)).unwrap());
    }
}

#[test]
fn scaled_witness_realizes_shifted_root() {
    let w = witness_all_ones_spectrum();
    let c = q(-7, 3);
    let p = scale_realization(&w, &c).unwrap();
    let expect = zeropatterns::charpoly::MonicPoly::power_of_linear(&c, 8);
    assert_eq!(char_poly(&p.matrix()), expect);
}

#[test]
fn non_square_chain_is_rejected() {
    let mut m = witness_all_ones_spectrum().matrix();
    m.set(3, 4, q(0, 1));
    assert_eq!(normalize_to_x(&m), Err(PatternError::WrongPattern { missing: 1, extra: 0 }));
}
