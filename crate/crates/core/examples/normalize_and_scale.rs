//! Any matrix with pattern S is diagonally similar to some X(x1..x8), and a
//! realization of (t-1)^8 scales to one of (t-c)^8.

use zeropatterns::charpoly::{char_poly, MonicPoly};
use zeropatterns::exactalg::BigRational;
use zeropatterns::pattern_s::{normalize_to_x, scale_realization, witness_all_ones_spectrum};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn main() {
    let w = witness_all_ones_spectrum();
    let d: Vec<BigRational> = (1..=8).map(|k| rat(k, 3)).collect();
    let m = w.matrix().conjugate_by_diagonal(&d).unwrap();
    let n = normalize_to_x(&m).unwrap();
    println!("normalized back to the witness: {}", n.params == w);
    println!("diagonal: {:?}", n.diagonal.iter().map(|v| v.to_string()).collect::<Vec<_>>());

    let c = rat(-5, 2);
    let s = scale_realization(&w, &c).unwrap();
    assert_eq!(char_poly(&s.matrix()), MonicPoly::power_of_linear(&c, 8));
    println!("(t + 5/2)^8 realized with x1 = {}", s.x(1));
}
