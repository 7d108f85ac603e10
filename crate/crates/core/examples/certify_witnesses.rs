//! Checks the two rational witnesses on pattern S by computing their
//! characteristic polynomials exactly.

use zeropatterns::charpoly::char_poly;
use zeropatterns::pattern_s::{witness_all_ones_spectrum, witness_nilpotent};

fn main() {
    for (name, w) in [("nilpotent", witness_nilpotent()), ("unipotent", witness_all_ones_spectrum())] {
        let values: Vec<String> = w.values().iter().map(|v| v.to_string()).collect();
        println!("{name}: x = ({})", values.join(", "));
        println!("  det(tI - X) = {}", char_poly(&w.matrix()));
    }
}
