//! Builds posets from construction expressions and prints their structure.
//!
//! Run with `cargo run --example construct_posets`.

use posetlab::{Poset, PosetExpr, Result};

fn describe(p: &Poset) -> String {
    let covers: Vec<String> = p
        .covers()
        .iter()
        .map(|&(x, y)| format!("{}<{}", p.label(x), p.label(y)))
        .collect();
    format!("{} elements, height {}; covers {}", p.size(), p.height(), covers.join(" "))
}

fn main() -> Result<()> {
    for text in [
        "butterfly",
        "fan(3,2)",
        "harp(4,3)",
        "diamond(3)",
        "dual(v(3))",
        "osum(point, butterfly, point)",
        "wedge(chain(3), chain(2))",
        "osum_i(diamond(3), diamond(3))",
        "wedge(chain(2), osum_i(diamond(3), harp(4,3)))",
    ] {
        let expr: PosetExpr = text.parse()?;
        let p = expr.elaborate()?;
        println!("{expr}\n  {}", describe(&p));
        println!("  canonical form: {}", expr.canonical_text());
    }

    // Wedge operands commute up to isomorphism.
    let a = "wedge(chain(3), diamond(2))".parse::<PosetExpr>()?.elaborate()?;
    let b = "wedge(diamond(2), chain(3))".parse::<PosetExpr>()?.elaborate()?;
    println!("\nwedge order irrelevant: {}", a.isomorphic(&b));

    // Syntax and argument errors carry a byte offset.
    for bad in ["fan(2,3)", "osum(chain(2), )", "tree(3)"] {
        if let Err(e) = bad.parse::<PosetExpr>() {
            println!("{bad:<18} -> {e}");
        }
    }

    // The large-interval sum refuses to guess.
    let ambiguous: PosetExpr = "osum_i(fan(3,3), chain(2))".parse()?;
    println!("\n{ambiguous}: {}", ambiguous.elaborate().unwrap_err());
    let explicit: PosetExpr = "osum_i(fan(3,3)[0,2], chain(2))".parse()?;
    println!("{explicit}: {}", describe(&explicit.elaborate()?));

    println!(
        "\nJSON: {}",
        serde_json::to_string(&Poset::butterfly()).expect("posets serialize")
    );
    Ok(())
}
