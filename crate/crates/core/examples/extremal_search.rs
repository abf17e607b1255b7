//! Exact maximization over pattern-free families: La(n, P), λ_n(P), and
//! finite-n boundedness checks with size windows.
//!
//! Run with `cargo run --release --example extremal_search`.

use std::time::Instant;

use posetlab::search::{check_bounded, maximize, scan_lower_lbound, BoundVerdict, Objective, SearchProblem};
use posetlab::{Poset, PosetExpr, Rational, Result};

fn main() -> Result<()> {
    let butterfly = Poset::butterfly();
    for n in 2..=4 {
        for objective in [Objective::Cardinality, Objective::LubellWeight] {
            let start = Instant::now();
            let out = maximize(&SearchProblem::new(n, butterfly.clone(), objective))?;
            println!(
                "butterfly, n={n}, {objective:?}: {} (exhausted: {}, {} nodes, {:.2?})\n  witness {}",
                out.best_value,
                out.exhausted,
                out.nodes_explored,
                start.elapsed(),
                out.witness.display()
            );
        }
    }

    // Every maximizer for the harp at n = 4.
    let harp = "harp(4,3)".parse::<PosetExpr>()?.elaborate()?;
    let out = maximize(&SearchProblem::new(4, harp.clone(), Objective::Cardinality).all_maximizers())?;
    println!(
        "\nharp(4,3), n=4: La = {} with {} maximizer(s):",
        out.best_value,
        out.maximizers.len()
    );
    for f in &out.maximizers {
        println!("  {}", f.display());
    }

    // Size windows [m, n - m].
    let two = Rational::integer(2);
    for (n, m) in [(3, 1), (3, 0), (4, 1), (4, 0)] {
        let v = check_bounded(&butterfly, n, m, &two)?;
        let text = match v {
            BoundVerdict::Holds { max, .. } => format!("holds, maximum {max}"),
            BoundVerdict::Violated { value, witness } => format!("violated by {} (value {value})", witness.display()),
        };
        println!("butterfly, n={n}, sizes in [{m}, {}], bound 2: {text}", n - m);
    }

    // Small sets only.
    for row in scan_lower_lbound(&Poset::fan(&[3, 2])?, &Rational::new(4, 5), &[2, 3, 4])? {
        println!("fan(3,2), sizes < 4n/5, n={}: {}", row.n, row.outcome.best_value);
    }
    Ok(())
}
