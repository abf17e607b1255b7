//! Fans and harps: e(P) from the tine lengths, the Σ(n, e) lower bound on
//! La(n, P), and exact ratios La(n, P) / C(n, n/2) for small n.
//!
//! Run with `cargo run --release --example fan_hierarchy`.

use posetlab::lattice::{binomial, sigma};
use posetlab::params::{e_of, la_n, large_intervals, pi_evidence};
use posetlab::{PosetExpr, Result};

fn main() -> Result<()> {
    for text in [
        "fan(2,2)",
        "fan(3,2)",
        "fan(3,3)",
        "fan(3,2,2)",
        "fan(4,3,3)",
        "harp(3,2)",
        "harp(4,3)",
        "harp(5,4,3)",
    ] {
        let p = text.parse::<PosetExpr>()?.elaborate()?;
        let e = e_of(&p, None);
        let large = large_intervals(&p, None).len();
        print!("{text:<12} e = {} ({:?}), {large} large interval(s)", e.value, e.status);
        if p.size() <= 8 {
            let n = 4;
            let la = la_n(&p, n)?;
            let e_val = e.as_usize().unwrap_or(0);
            print!("; La({n}) = {} vs Σ({n},{e_val}) = {}", la.value, sigma(n, e_val));
        }
        println!();
    }

    println!("\nLa(n, P) / C(n, n/2):");
    for text in ["chain(2)", "v(2)", "fan(3,2)", "butterfly"] {
        let p = text.parse::<PosetExpr>()?.elaborate()?;
        let rows = pi_evidence(&p, &[2, 3, 4])?;
        let cells: Vec<String> = rows
            .iter()
            .map(|r| format!("n={}: {}/{} = {}", r.n, r.la.value, binomial(r.n, r.n / 2), r.ratio))
            .collect();
        println!("  {text:<10} {}", cells.join(", "));
    }
    Ok(())
}
