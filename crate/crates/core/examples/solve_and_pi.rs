//! Solves phi_i = tau_i for x1..x8 and prints the elimination trace and the
//! polynomial pi whose nonvanishing guarantees a realization.

use zeropatterns::solver::construction;

fn main() {
    let c = construction().expect("the symbolic solve succeeds");
    for step in c.solution.trace() {
        println!("phi_{} = tau_{}  ->  x{}", step.equation, step.equation, step.variable);
    }
    for (i, x) in c.solution.values().iter().enumerate() {
        let (n, d) = (x.numer().num_terms(), x.denom().num_terms());
        println!("x{} = ({n} terms) / ({d} terms)", i + 1);
    }
    println!("pi: {} factors", c.pi.provenance.len());
    println!(
        "pi: {} terms, total degree {}, weighted degree {}",
        c.pi.pi.num_terms(),
        c.pi.pi.total_degree().unwrap_or(0),
        c.pi.vieta_degree()
    );
}
