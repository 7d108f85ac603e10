//! Realizes the spectrum {1, ..., 708} on the 708x708 pattern diag(S, D_700)
//! with 1415 nonzero entries and verifies it blockwise.

use std::time::Instant;
use zeropatterns::assembler::{realize_full, SelectionConfig};
use zeropatterns::exactalg::BigRational;

fn main() {
    let u: Vec<BigRational> = (1..=708).map(|k| BigRational::from_integer(k.into())).collect();
    let start = Instant::now();
    let a = realize_full(&u, &SelectionConfig::default()).expect("708 distinct values are realizable");
    let sigma: Vec<String> = a.selection.sigma.iter().map(|v| v.to_string()).collect();
    println!("branch {:?}, tried {}, sigma = {{{}}}", a.selection.branch, a.selection.tried, sigma.join(", "));
    let r = &a.report;
    println!("{}x{}, {} nonzeros, {} blocks", r.matrix.n(), r.matrix.n(), r.nonzero_count, r.block_polys.len());
    println!("pass: {} ({:.2?})", r.pass, start.elapsed());

    let fives = vec![BigRational::from_integer(5.into()); 708];
    let b = realize_full(&fives, &SelectionConfig::default()).unwrap();
    println!("708 copies of 5: branch {:?}, pass {}", b.selection.branch, b.report.pass);
}
