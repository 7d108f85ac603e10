mod common;

use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use zeropatterns::blocks::{realize_d, realize_pair};
use zeropatterns::charpoly::{char_poly, poly_product, MonicPoly};
use zeropatterns::exactalg::{BigRational, GaussianRational, Ring};
use zeropatterns::pattern_s::ZeroPattern;

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (small_rational(), small_rational()).prop_map(|(a, b)| GaussianRational::new(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn rational_pairs(l in small_rational(), m in small_rational()) {
        let r = realize_pair(&l, &m);
        prop_assert!(r.entries().iter().all(|e| !e.is_zero_elem()));
        prop_assert_eq!(char_poly(&r.matrix()), MonicPoly::from_roots(&[l.clone(), m.clone()]));
        prop_assert_eq!(realize_pair(&l, &m), r);
    }

    #[test]
    fn gaussian_pairs(l in gaussian(), m in gaussian()) {
        let r = realize_pair(&l, &m);
        prop_assert!(r.entries().iter().all(|e| !e.is_zero_elem()));
        prop_assert_eq!(char_poly(&r.matrix()), MonicPoly::from_roots(&[l, m]));
    }
}

#[test]
fn seven_hundred_values() {
    let mut rng = ChaCha8Rng::seed_from_u64(700);
    let spectrum: Vec<BigRational> = (0..700).map(|_| random_rational(&mut rng, 50, 9)).collect();
    let m = realize_d(&spectrum).unwrap();
    assert_eq!(m.n(), 700);
    assert_eq!(m.nonzero_count(), 1400);
    let pattern = ZeroPattern::of_matrix(&m);
    assert_eq!(pattern, ZeroPattern::full_blocks(350));
    let blocks: Vec<MonicPoly<BigRational>> =
        pattern.diagonal_blocks().iter().map(|&(s, k)| char_poly(&m.block(s, k))).collect();
    assert_eq!(blocks.len(), 350);
    assert_eq!(poly_product(&blocks).unwrap(), MonicPoly::from_roots(&spectrum));
    assert_eq!(realize_d(&spectrum).unwrap(), m);
}
