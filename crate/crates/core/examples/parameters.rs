//! Computes `e(P)` with witnesses for a handful of posets, then the large
//! intervals of a few of them.
//!
//! Run with `cargo run --release --example parameters`.

use std::time::Instant;

use posetlab::params::{e_of, large_intervals, ParamWitness};
use posetlab::{PosetExpr, Result};

fn main() -> Result<()> {
    let exprs = [
        "butterfly",
        "chain(4)",
        "v(3)",
        "fan(3,2)",
        "fan(4,3,3)",
        "diamond(2)",
        "diamond(3)",
        "osum(point, butterfly, point)",
        "wedge(chain(3), chain(2))",
        "osum_i(diamond(3), diamond(3))",
    ];
    for text in exprs {
        let expr: PosetExpr = text.parse()?;
        let p = expr.elaborate()?;
        let start = Instant::now();
        let r = e_of(&p, None);
        print!("e({text}) = {} [{:?}, ceiling n={}]", r.value, r.status, r.search_ceiling);
        if let Some(ParamWitness::Levels { window, embedding }) = &r.witness {
            print!(
                "; {} levels from size {} in B_{}: {}",
                window.k,
                window.s,
                window.n,
                embedding.display()
            );
        }
        println!("  ({:.2?})", start.elapsed());
    }

    for text in ["fan(3,3)", "diamond(3)", "harp(4,3)", "butterfly"] {
        let p = text.parse::<PosetExpr>()?.elaborate()?;
        let large: Vec<String> = large_intervals(&p, None)
            .iter()
            .map(|r| format!("[{}, {}]", p.label(r.lo), p.label(r.hi)))
            .collect();
        println!(
            "large intervals of {text}: {}",
            if large.is_empty() {
                "none".to_string()
            } else {
                large.join(" ")
            }
        );
    }
    Ok(())
}
