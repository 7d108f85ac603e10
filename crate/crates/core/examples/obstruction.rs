//! Builds the symbolic characteristic polynomial of X and shows that
//! phi_7 divides phi_4, so the real polynomial t^8 - t^4 is out of reach.

use zeropatterns::pattern_s::{obstruction_certificate, phi_symbolic};

fn main() {
    let phi = phi_symbolic();
    for i in (0..8).rev() {
        println!("phi_{i}: {} terms", phi.phi(i).num_terms());
    }
    println!("phi_7 = {}", phi.phi(7));
    match obstruction_certificate() {
        Ok(q) => println!("phi_4 = ({q}) * phi_7"),
        Err(e) => println!("certificate failed: {e}"),
    }
}
