//! Weak-subposet containment in posets, explicit families, and windows of
//! consecutive levels that are never materialized.
//!
//! Run with `cargo run --release --example containment`.

use std::time::Instant;

use posetlab::lattice::{middle_levels, MiddleVariant};
use posetlab::{contains_subposet, family_contains, levels_contain, Family, LevelWindow, Poset, Result};

fn main() -> Result<()> {
    let butterfly = Poset::butterfly();

    // Host posets.
    let b3 = Poset::boolean(3)?;
    match contains_subposet(&b3, &butterfly) {
        Some(e) => println!("butterfly in B_3: {}", e.display()),
        None => println!("butterfly not in B_3"),
    }
    let d3 = Poset::diamond(3)?;
    println!("butterfly in diamond(3): {}", contains_subposet(&d3, &butterfly).is_some());

    // Explicit families.
    let middle = middle_levels(4, 2, MiddleVariant::Low)?;
    println!(
        "butterfly in B(4,2) = {}: {}",
        middle.display(),
        family_contains(&middle, &butterfly).is_some()
    );
    let full = Family::full(3)?;
    if let Some(e) = family_contains(&full, &butterfly) {
        let sets: Vec<String> = e.map.iter().map(|h| h.to_string()).collect();
        println!("butterfly in all of B_3 via {}", sets.join(" "));
    }

    // Level windows in large ground sets.
    let diamond_sum = posetlab::expr::osum_large(&[d3.clone(), d3.clone()], &[None, None])?;
    for (n, k) in [(12, 6), (12, 7), (45, 7)] {
        let w = LevelWindow::new(n, n / 2 - k / 2, k)?;
        let start = Instant::now();
        let found = levels_contain(&w, &diamond_sum);
        println!(
            "D3 ⊕_I D3 in levels {}..{} of B_{n}: {} ({:.2?})",
            w.s,
            w.top(),
            found.map(|e| e.display()).unwrap_or_else(|| "no".into()),
            start.elapsed()
        );
    }
    Ok(())
}
