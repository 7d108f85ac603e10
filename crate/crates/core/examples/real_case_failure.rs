//! (t^2 + a t + 1)^4 is a real polynomial that pattern S cannot realize at
//! a = 0. Away from the zeros of pi the construction goes through.

use num_complex::Complex64;
use zeropatterns::exactalg::BigRational;
use zeropatterns::solver::{construction, realize_coeffs, CoeffVector};

fn quartic_power<F: zeropatterns::exactalg::Field>(a: F) -> CoeffVector<F> {
    let one = a.one_like();
    let base = zeropatterns::charpoly::MonicPoly::from_coeffs(vec![one, a]);
    let mut p = base.clone();
    for _ in 0..3 {
        p = p.mul(&base);
    }
    CoeffVector::from_monic(&p).unwrap()
}

fn main() {
    let c = construction().unwrap();
    let zero = BigRational::from_integer(0.into());
    let tau = quartic_power(zero);
    println!("a = 0: pi = {}", c.pi.pi.evaluate(tau.values()).unwrap());
    match realize_coeffs(&tau) {
        Ok(_) => println!("a = 0: realized"),
        Err(e) => println!("a = 0: {e}"),
    }

    let one = BigRational::from_integer(1.into());
    println!("a = 1: realized = {}", realize_coeffs(&quartic_power(one)).is_ok());

    // sign of pi along real a, sampled around the second real zero
    let root = ((15f64.sqrt() - 3.0) / 3.0).sqrt();
    for k in -3..=3 {
        let a = root + k as f64 * 1e-3;
        let v = c.pi.pi.evaluate(quartic_power(Complex64::new(a, 0.0)).values()).unwrap();
        println!("a = {a:.6}: pi = {:+.3e}", v.re);
    }
}
