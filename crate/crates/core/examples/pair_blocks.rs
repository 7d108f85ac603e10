//! Full 2x2 blocks: every pair of eigenvalues is realized by a matrix with
//! no zero entry, and D_2m is the block diagonal of such pairs.

use zeropatterns::blocks::{realize_d, realize_pair};
use zeropatterns::charpoly::char_poly;
use zeropatterns::exactalg::{BigRational, GaussianRational};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn main() {
    for (l, m) in [(0, 0), (1, 1), (2, -2), (3, 5)] {
        let r = realize_pair(&rat(l, 1), &rat(m, 1));
        println!("({l}, {m}): [[{}, {}], [{}, {}]]", r.a, r.b, r.c, r.d);
    }
    let i = GaussianRational::new(rat(0, 1), rat(1, 1));
    let r = realize_pair(&i, &-i.clone());
    println!("(i, -i): char poly {}", char_poly(&r.matrix()));

    let spectrum: Vec<BigRational> = (1..=10).map(|k| rat(k % 4, 1)).collect();
    let d = realize_d(&spectrum).unwrap();
    println!("D_10: {} nonzero entries", d.nonzero_count());
}
