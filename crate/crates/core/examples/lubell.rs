//! The Lubell function three ways: the closed form, the average number of
//! hits over all maximal chains, and the min / min-max chain partitions.
//!
//! Run with `cargo run --example lubell`.

use posetlab::lattice::{lubell_chain_average, middle_levels, min_max_partition, min_partition, MiddleVariant, PartitionMode};
use posetlab::{lubell, Family, Result};

fn show(name: &str, f: &Family) -> Result<()> {
    println!("{name}: {}", f.display());
    println!("  Lubell value {} (chain average {})", lubell(f), lubell_chain_average(f)?);
    let min = min_partition(f, PartitionMode::Formula)?;
    for (key, block) in &min.blocks {
        println!(
            "  chains first hitting {}: weight {}, average hits {}",
            key.display(),
            block.weight,
            block.average
        );
    }
    println!("  chains missing F: weight {}", min.leftover);
    let mm = min_max_partition(f, PartitionMode::Formula)?;
    println!("  min-max blocks: {}, weighted sum {}", mm.blocks.len(), mm.weighted_sum());
    Ok(())
}

fn main() -> Result<()> {
    show("two middle levels of B_4", &middle_levels(4, 2, MiddleVariant::Low)?)?;
    // The empty set, the full set, and all singletons of B_3.
    show(
        "{} + [3] + singletons",
        &Family::from_lists(3, &[vec![], vec![1, 2, 3], vec![1], vec![2], vec![3]])?,
    )?;
    show(
        "[4], [4] minus odd i, [4] minus non-odd pairs",
        &Family::from_lists(
            4,
            &[
                vec![1, 2, 3, 4],
                vec![2, 3, 4],
                vec![1, 2, 4],
                vec![3, 4],
                vec![2, 3],
                vec![1, 4],
                vec![1, 3],
                vec![1, 2],
            ],
        )?,
    )?;
    Ok(())
}
