//! Families of subsets of `[n]`, middle-level constructions, and exact
//! evaluation of the Lubell function together with its chain-partition
//! decompositions.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bits::{bits, format_set, k_subsets, low_bits, popcount, proper_subset, set_elements};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Largest ground set supported by bitmask sets.
pub const MAX_GROUND: usize = 60;
/// Largest ground set for which full chains are enumerated.
pub const MAX_CHAIN_ENUMERATION: usize = 8;

/// `C(n, k)`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Sort key giving the canonical family order: by size, then numerically.
#[inline]
pub fn set_order_key(set: u64) -> (u32, u64) {
    (popcount(set), set)
}

/// A family of distinct subsets of `[n]`, each a bitmask (bit `i` is element
/// `i + 1`), kept sorted by `(size, value)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Family {
    n: usize,
    sets: Vec<u64>,
}

impl Family {
    pub fn new(n: usize, sets: impl IntoIterator<Item = u64>) -> Result<Family> {
        if n > MAX_GROUND {
            return Err(Error::GroundSetTooLarge { n, limit: MAX_GROUND });
        }
        let ground = low_bits(n);
        let mut sets: Vec<u64> = sets.into_iter().collect();
        if let Some(&bad) = sets.iter().find(|&&s| s & !ground != 0) {
            return Err(Error::SetOutOfRange { set: bad, n });
        }
        sets.sort_unstable_by_key(|&s| set_order_key(s));
        sets.dedup();
        Ok(Family { n, sets })
    }

    pub fn empty(n: usize) -> Result<Family> {
        Family::new(n, [])
    }

    /// Builds a family from 1-based element lists, e.g. `[[1], [1, 2]]`.
    pub fn from_lists(n: usize, lists: &[Vec<usize>]) -> Result<Family> {
        let mut sets = Vec::with_capacity(lists.len());
        for list in lists {
            let mut mask = 0u64;
            for &e in list {
                if e == 0 || e > n {
                    return Err(Error::Format(format!("element {e} is outside [1, {n}]")));
                }
                mask |= 1 << (e - 1);
            }
            sets.push(mask);
        }
        Family::new(n, sets)
    }

    /// The full level `C([n], k)`.
    pub fn level(n: usize, k: usize) -> Result<Family> {
        Family::levels(n, k..=k)
    }

    /// The union of the levels in `range`.
    pub fn levels(n: usize, range: RangeInclusive<usize>) -> Result<Family> {
        let (lo, hi) = range.into_inner();
        Family::new(n, (lo..=hi.min(n)).flat_map(|k| k_subsets(n, k)))
    }

    /// All of `B_n`.
    pub fn full(n: usize) -> Result<Family> {
        Family::levels(n, 0..=n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sets(&self) -> &[u64] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, set: u64) -> bool {
        self.sets
            .binary_search_by_key(&set_order_key(set), |&s| set_order_key(s))
            .is_ok()
    }

    pub fn union(&self, other: &Family) -> Result<Family> {
        Family::new(self.n.max(other.n), self.sets.iter().chain(&other.sets).copied())
    }

    pub fn with(&self, set: u64) -> Result<Family> {
        Family::new(self.n, self.sets.iter().copied().chain([set]))
    }

    /// Number of sets of each size `0..=n`.
    pub fn level_counts(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.n + 1];
        for &s in &self.sets {
            counts[popcount(s) as usize] += 1;
        }
        counts
    }

    /// Image under complementation `F ↦ [n] \ F`.
    pub fn complement(&self) -> Family {
        let ground = low_bits(self.n);
        Family::new(self.n, self.sets.iter().map(|&s| !s & ground)).expect("same ground set")
    }

    /// Sets strictly containing `base`, re-encoded as subsets of `[n] \ base`
    /// (the interval `(base, [n]]` viewed as `B_{n-|base|}`).
    pub fn above(&self, base: u64) -> Family {
        let free: Vec<usize> = bits(low_bits(self.n) & !base).collect();
        let sets = self
            .sets
            .iter()
            .filter(|&&s| proper_subset(base, s))
            .map(|&s| compress(s, &free));
        Family::new(free.len(), sets).expect("compressed sets fit")
    }

    /// Renders as `{{1},{1,2}}`.
    pub fn display(&self) -> String {
        let parts: Vec<String> = self.sets.iter().map(|&s| format_set(s)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

fn compress(set: u64, positions: &[usize]) -> u64 {
    positions
        .iter()
        .enumerate()
        .filter(|&(_, &p)| set & (1 << p) != 0)
        .fold(0u64, |m, (i, _)| m | 1 << i)
}

#[derive(Serialize, Deserialize)]
struct FamilyJson {
    n: usize,
    sets: Vec<Vec<usize>>,
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FamilyJson {
            n: self.n,
            sets: self.sets.iter().map(|&m| set_elements(m)).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Family {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = FamilyJson::deserialize(d)?;
        Family::from_lists(raw.n, &raw.sets).map_err(serde::de::Error::custom)
    }
}

/// Which of the (at most two) middle-level families to build.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MiddleVariant {
    #[default]
    Low,
    High,
}

/// Sizes occupied by the `k` middle levels of `B_n`; empty when `k == 0`.
pub fn middle_level_range(n: usize, k: usize, variant: MiddleVariant) -> Option<RangeInclusive<usize>> {
    if k == 0 || k > n + 1 {
        return None;
    }
    let (a, b) = (n + 1 - k, n + k - 1);
    Some(match variant {
        MiddleVariant::Low => a / 2..=b / 2,
        MiddleVariant::High => a.div_ceil(2)..=b.div_ceil(2),
    })
}

/// `Σ(n, k)`: the number of sets in the `k` middle levels.
pub fn sigma(n: usize, k: usize) -> u128 {
    middle_level_range(n, k, MiddleVariant::Low)
        .map(|r| r.map(|i| binomial(n, i)).sum())
        .unwrap_or(0)
}

/// `B(n, k)`: the union of the `k` middle levels.
pub fn middle_levels(n: usize, k: usize, variant: MiddleVariant) -> Result<Family> {
    match middle_level_range(n, k, variant) {
        Some(r) => Family::levels(n, r),
        None => Family::empty(n),
    }
}

/// The Lubell function `Σ_{F} 1 / C(n, |F|)`, exactly.
pub fn lubell(family: &Family) -> Rational {
    let n = family.n();
    family
        .level_counts()
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c > 0)
        .map(|(k, c)| Rational::new(c, BigInt::from(binomial(n, k))))
        .sum()
}

/// Rearranges `perm` to the next permutation in lexicographic order.
fn next_permutation(perm: &mut [usize]) -> bool {
    let Some(i) = (1..perm.len()).rev().find(|&i| perm[i - 1] < perm[i]) else {
        return false;
    };
    let j = (i..perm.len()).rev().find(|&j| perm[j] > perm[i - 1]).expect("pivot exists");
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Visits every full chain of `B_n` as its sequence of `n + 1` prefix masks.
fn for_each_chain(n: usize, mut visit: impl FnMut(&[u64])) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut prefixes = vec![0u64; n + 1];
    loop {
        for (i, &e) in perm.iter().enumerate() {
            prefixes[i + 1] = prefixes[i] | 1 << e;
        }
        visit(&prefixes);
        if !next_permutation(&mut perm) {
            break;
        }
    }
}

fn membership_table(family: &Family) -> Vec<bool> {
    let mut table = vec![false; 1 << family.n()];
    for &s in family.sets() {
        table[s as usize] = true;
    }
    table
}

fn check_enumerable(n: usize) -> Result<()> {
    if n > MAX_CHAIN_ENUMERATION {
        Err(Error::GroundSetTooLarge {
            n,
            limit: MAX_CHAIN_ENUMERATION,
        })
    } else {
        Ok(())
    }
}

/// The Lubell function computed as the average of `|F ∩ C|` over all `n!`
/// full chains. Independent of [`lubell`]; used as its oracle.
pub fn lubell_chain_average(family: &Family) -> Result<Rational> {
    let n = family.n();
    check_enumerable(n)?;
    let table = membership_table(family);
    let mut hits: u64 = 0;
    for_each_chain(n, |chain| {
        hits += chain.iter().filter(|&&s| table[s as usize]).count() as u64;
    });
    Ok(Rational::new(hits, factorial(n)))
}

/// Identifies a block of full chains: by the first member of `F` met
/// (`Min`), or by the first and last (`MinMax`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BlockKey {
    Min(u64),
    MinMax(u64, u64),
}

impl BlockKey {
    pub fn display(&self) -> String {
        match *self {
            BlockKey::Min(a) => format_set(a),
            BlockKey::MinMax(a, b) => format!("({}, {})", format_set(a), format_set(b)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// Fraction of all full chains in this block.
    pub weight: Rational,
    /// Average of `|F ∩ C|` over chains `C` in this block.
    pub average: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionReport {
    pub blocks: BTreeMap<BlockKey, Block>,
    /// Fraction of full chains that miss the family entirely.
    pub leftover: Rational,
}

impl PartitionReport {
    pub fn total_weight(&self) -> Rational {
        self.blocks.values().map(|b| b.weight.clone()).sum::<Rational>() + self.leftover.clone()
    }

    /// `Σ weight · average`, which equals the Lubell function of the family.
    pub fn weighted_sum(&self) -> Rational {
        self.blocks.values().map(|b| &b.weight * &b.average).sum()
    }
}

/// How a partition is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionMode {
    /// Walk all `n!` chains (`n <= 8`).
    Enumerate,
    /// Closed-form chain counts; any `n`.
    Formula,
}

/// Groups full chains by the minimum of `F ∩ C`.
pub fn min_partition(family: &Family, mode: PartitionMode) -> Result<PartitionReport> {
    match mode {
        PartitionMode::Enumerate => enumerate_partition(family, false),
        PartitionMode::Formula => Ok(formula_min_partition(family)),
    }
}

/// Groups full chains by the minimum and maximum of `F ∩ C`.
pub fn min_max_partition(family: &Family, mode: PartitionMode) -> Result<PartitionReport> {
    match mode {
        PartitionMode::Enumerate => enumerate_partition(family, true),
        PartitionMode::Formula => Ok(formula_min_max_partition(family)),
    }
}

fn enumerate_partition(family: &Family, with_max: bool) -> Result<PartitionReport> {
    let n = family.n();
    check_enumerable(n)?;
    let table = membership_table(family);
    // key -> (chains, total hits)
    let mut acc: BTreeMap<BlockKey, (u64, u64)> = BTreeMap::new();
    let mut missed: u64 = 0;
    for_each_chain(n, |chain| {
        let mut first = None;
        let mut last = None;
        let mut hits = 0u64;
        for &s in chain {
            if table[s as usize] {
                first.get_or_insert(s);
                last = Some(s);
                hits += 1;
            }
        }
        match (first, last) {
            (Some(a), Some(b)) => {
                let key = if with_max { BlockKey::MinMax(a, b) } else { BlockKey::Min(a) };
                let e = acc.entry(key).or_insert((0, 0));
                e.0 += 1;
                e.1 += hits;
            }
            _ => missed += 1,
        }
    });
    let total = factorial(n);
    let blocks = acc
        .into_iter()
        .map(|(k, (chains, hits))| {
            (
                k,
                Block {
                    weight: Rational::new(chains, total.clone()),
                    average: Rational::new(hits, chains),
                },
            )
        })
        .collect();
    Ok(PartitionReport {
        blocks,
        leftover: Rational::new(missed, total),
    })
}

/// For each member `A` (in family order), the number of chains `∅ → A`
/// that meet the family first at `A`.
fn first_hits(family: &Family) -> Vec<BigInt> {
    let sets = family.sets();
    let mut out: Vec<BigInt> = Vec::with_capacity(sets.len());
    for (i, &a) in sets.iter().enumerate() {
        let size_a = popcount(a) as usize;
        let mut count = factorial(size_a);
        // Members strictly below `a` precede it in family order.
        for (j, &g) in sets[..i].iter().enumerate() {
            if proper_subset(g, a) {
                count -= &out[j] * factorial(size_a - popcount(g) as usize);
            }
        }
        out.push(count);
    }
    out
}

/// For each member `B`, the number of chains `B → [n]` that meet the family
/// last at `B`.
fn last_hits(family: &Family) -> Vec<BigInt> {
    let n = family.n();
    let sets = family.sets();
    let mut out = vec![BigInt::zero(); sets.len()];
    for i in (0..sets.len()).rev() {
        let b = sets[i];
        let size_b = popcount(b) as usize;
        let mut count = factorial(n - size_b);
        for (j, &g) in sets.iter().enumerate().skip(i + 1) {
            if proper_subset(b, g) {
                count -= &out[j] * factorial(popcount(g) as usize - size_b);
            }
        }
        out[i] = count;
    }
    out
}

fn leftover_from(blocks: &BTreeMap<BlockKey, Block>) -> Rational {
    Rational::one() - blocks.values().map(|b| b.weight.clone()).sum::<Rational>()
}

fn formula_min_partition(family: &Family) -> PartitionReport {
    let n = family.n();
    let total = factorial(n);
    let first = first_hits(family);
    let mut blocks = BTreeMap::new();
    for (i, &a) in family.sets().iter().enumerate() {
        if first[i].is_zero() {
            continue;
        }
        let rest = n - popcount(a) as usize;
        let weight = Rational::new(&first[i] * factorial(rest), total.clone());
        // Above `a` the chain is a uniform full chain of [a, [n]].
        let average = Rational::one() + lubell(&family.above(a));
        blocks.insert(BlockKey::Min(a), Block { weight, average });
    }
    let leftover = leftover_from(&blocks);
    PartitionReport { blocks, leftover }
}

fn formula_min_max_partition(family: &Family) -> PartitionReport {
    let n = family.n();
    let total = factorial(n);
    let sets = family.sets();
    let first = first_hits(family);
    let last = last_hits(family);
    let mut blocks = BTreeMap::new();
    for (i, &a) in sets.iter().enumerate() {
        if first[i].is_zero() {
            continue;
        }
        for (j, &b) in sets.iter().enumerate().skip(i) {
            if last[j].is_zero() || !(a == b || proper_subset(a, b)) {
                continue;
            }
            let gap = (popcount(b) - popcount(a)) as usize;
            let count = &first[i] * factorial(gap) * &last[j];
            let average = if a == b {
                Rational::one()
            } else {
                let inner: Rational = sets
                    .iter()
                    .filter(|&&g| proper_subset(a, g) && proper_subset(g, b))
                    .map(|&g| Rational::new(1, BigInt::from(binomial(gap, (popcount(g) - popcount(a)) as usize))))
                    .sum();
                Rational::integer(2) + inner
            };
            blocks.insert(
                BlockKey::MinMax(a, b),
                Block {
                    weight: Rational::new(count, total.clone()),
                    average,
                },
            );
        }
    }
    let leftover = leftover_from(&blocks);
    PartitionReport { blocks, leftover }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(n: usize, lists: &[&[usize]]) -> Family {
        let lists: Vec<Vec<usize>> = lists.iter().map(|l| l.to_vec()).collect();
        Family::from_lists(n, &lists).unwrap()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(60, 30), 118264581564861424);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn sigma_values() {
        assert_eq!(sigma(4, 2), 10);
        assert_eq!(sigma(2, 2), 3);
        assert_eq!(sigma(4, 0), 0);
        assert_eq!(sigma(3, 4), 8);
        let m = middle_levels(3, 1, MiddleVariant::Low).unwrap();
        assert_eq!(m.len(), 3);
        assert!(m.sets().iter().all(|&s| popcount(s) == 1));
        let h = middle_levels(3, 1, MiddleVariant::High).unwrap();
        assert!(h.sets().iter().all(|&s| popcount(s) == 2));
    }

    #[test]
    fn sigma_matches_both_variants() {
        for n in 0..=8 {
            for k in 0..=n + 1 {
                let lo = middle_levels(n, k, MiddleVariant::Low).unwrap();
                let hi = middle_levels(n, k, MiddleVariant::High).unwrap();
                assert_eq!(lo.len() as u128, sigma(n, k));
                assert_eq!(hi.len() as u128, sigma(n, k));
            }
        }
    }

    #[test]
    fn family_is_canonical() {
        let f = Family::new(3, [0b110, 0b001, 0b001, 0]).unwrap();
        assert_eq!(f.sets(), &[0, 0b001, 0b110]);
        assert!(f.contains(0b110) && !f.contains(0b111));
        assert!(matches!(Family::new(2, [0b100]), Err(Error::SetOutOfRange { .. })));
    }

    #[test]
    fn lubell_examples() {
        for n in 2..=6 {
            assert_eq!(lubell(&Family::new(n, [0]).unwrap()), Rational::one());
            let mut f = Family::level(n, 1).unwrap();
            f = f.with(0).unwrap().with(low_bits(n)).unwrap();
            assert_eq!(lubell(&f), Rational::integer(3));
        }
        assert_eq!(lubell(&Family::full(3).unwrap()), Rational::integer(4));
    }

    #[test]
    fn v32_witness_value() {
        // [4], [4]\{i} for odd i, [4]\{i,j} unless both odd.
        let full = 0b1111u64;
        let mut sets = vec![full];
        sets.extend([1usize, 3].iter().map(|&i| full & !(1 << (i - 1))));
        for i in 1..=4usize {
            for j in i + 1..=4 {
                if !(i % 2 == 1 && j % 2 == 1) {
                    sets.push(full & !(1 << (i - 1)) & !(1 << (j - 1)));
                }
            }
        }
        let f = Family::new(4, sets).unwrap();
        assert_eq!(f.len(), 8);
        let h = lubell(&f);
        assert_eq!(h, Rational::new(7, 3));
        assert!(h >= Rational::new(9, 4));
    }

    #[test]
    fn chain_average_examples() {
        assert_eq!(lubell_chain_average(&Family::new(3, [0]).unwrap()).unwrap(), Rational::one());
        assert_eq!(
            lubell_chain_average(&Family::new(3, [0b010]).unwrap()).unwrap(),
            Rational::new(1, 3)
        );
        assert!(matches!(
            lubell_chain_average(&Family::empty(9).unwrap()),
            Err(Error::GroundSetTooLarge { .. })
        ));
    }

    #[test]
    fn chain_average_equals_formula_on_all_of_b3() {
        let all: Vec<u64> = (0..8).collect();
        for mask in 0u32..256 {
            let f = Family::new(3, all.iter().copied().filter(|&s| mask & (1 << s) != 0)).unwrap();
            assert_eq!(lubell(&f), lubell_chain_average(&f).unwrap(), "{}", f.display());
        }
    }

    #[test]
    fn partition_examples() {
        let l1 = Family::level(3, 1).unwrap();
        for mode in [PartitionMode::Enumerate, PartitionMode::Formula] {
            let r = min_partition(&l1, mode).unwrap();
            assert_eq!(r.blocks.len(), 3);
            assert!(r.blocks.values().all(|b| b.average == Rational::one()));
            assert_eq!(r.weighted_sum(), Rational::one());
        }

        let e = Family::new(3, [0]).unwrap();
        let r = min_partition(&e, PartitionMode::Formula).unwrap();
        assert_eq!(r.blocks.len(), 1);
        assert_eq!(
            r.blocks[&BlockKey::Min(0)],
            Block {
                weight: Rational::one(),
                average: Rational::one()
            }
        );

        let f = fam(2, &[&[], &[1], &[1, 2]]);
        for mode in [PartitionMode::Enumerate, PartitionMode::Formula] {
            let r = min_partition(&f, mode).unwrap();
            assert_eq!(r.blocks.len(), 1);
            let b = &r.blocks[&BlockKey::Min(0)];
            assert_eq!(b.weight, Rational::one());
            assert_eq!(b.average, Rational::new(5, 2));
        }
    }

    #[test]
    fn formula_partitions_match_enumeration() {
        let all: Vec<u64> = (0..8).collect();
        for mask in 0u32..256 {
            let f = Family::new(3, all.iter().copied().filter(|&s| mask & (1 << s) != 0)).unwrap();
            for with_max in [false, true] {
                let (e, m) = if with_max {
                    (
                        min_max_partition(&f, PartitionMode::Enumerate).unwrap(),
                        min_max_partition(&f, PartitionMode::Formula).unwrap(),
                    )
                } else {
                    (
                        min_partition(&f, PartitionMode::Enumerate).unwrap(),
                        min_partition(&f, PartitionMode::Formula).unwrap(),
                    )
                };
                assert_eq!(e, m, "{} with_max={with_max}", f.display());
                assert_eq!(m.total_weight(), Rational::one());
                assert_eq!(m.weighted_sum(), lubell(&f));
            }
        }
    }

    #[test]
    fn above_reencodes() {
        let f = fam(3, &[&[1], &[1, 2], &[1, 2, 3], &[2]]);
        let up = f.above(0b001);
        assert_eq!(up.n(), 2);
        assert_eq!(up.sets(), &[0b01, 0b11]);
    }

    #[test]
    fn json_shape() {
        let f = fam(2, &[&[], &[1], &[1, 2]]);
        let js = serde_json::to_value(&f).unwrap();
        assert_eq!(js, serde_json::json!({"n": 2, "sets": [[], [1], [1, 2]]}));
        let back: Family = serde_json::from_value(js).unwrap();
        assert_eq!(back, f);
    }
}
