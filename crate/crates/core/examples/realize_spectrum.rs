//! Realizes spectra on pattern S over three backends: exact rationals,
//! exact Gaussian rationals and floating point.

use num_complex::Complex64;
use zeropatterns::charpoly::{char_poly, MonicPoly};
use zeropatterns::exactalg::{BigRational, GaussianRational};
use zeropatterns::solver::{psi, realize_spectrum_s};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn main() {
    let sigma: Vec<BigRational> = [-3, -1, 0, 1, 2, 4, 7, 9].iter().map(|&k| rat(k, 2)).collect();
    println!("psi = {}", psi(&sigma).unwrap());
    let p = realize_spectrum_s(&sigma).unwrap();
    for (i, x) in p.values().iter().enumerate() {
        println!("x{} = {x}", i + 1);
    }
    assert_eq!(char_poly(&p.matrix()), MonicPoly::from_roots(&sigma));

    let g = |a, b| GaussianRational::new(rat(a, 1), rat(b, 1));
    let gauss = vec![g(0, 1), g(0, -1), g(2, 1), g(1, 0), g(1, 0), g(1, 0), g(-3, 0), g(0, 5)];
    let p = realize_spectrum_s(&gauss).unwrap();
    assert_eq!(char_poly(&p.matrix()), MonicPoly::from_roots(&gauss));
    println!("gaussian spectrum realized, x1 = {}", p.x(1));

    let float: Vec<Complex64> = (0..8).map(|k| Complex64::from_polar(1.0, k as f64 * 0.7)).collect();
    let p = realize_spectrum_s(&float).unwrap();
    println!("float spectrum realized: {}", char_poly(&p.matrix()).approx_eq(&MonicPoly::from_roots(&float)));
}
