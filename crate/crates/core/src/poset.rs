//! Finite posets stored as transitively closed bit-row relations, the named
//! posets of forbidden-subposet theory, and the construction algebra.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bits::{bits, popcount};
use crate::error::{Error, Result};

/// Largest number of elements a [`Poset`] may have (one machine word per row).
pub const MAX_ELEMENTS: usize = 64;

/// A finite strict partial order on elements `0..size`.
///
/// `above[x]` has bit `y` set iff `x < y`; `below[y]` is the transpose. Both
/// are kept transitively closed, so `lt` is a single bit test.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poset {
    above: Vec<u64>,
    below: Vec<u64>,
    labels: Vec<String>,
}

fn transpose(rows: &[u64]) -> Vec<u64> {
    let mut cols = vec![0u64; rows.len()];
    for (x, &row) in rows.iter().enumerate() {
        for y in bits(row) {
            cols[y] |= 1 << x;
        }
    }
    cols
}

fn check_size(size: usize) -> Result<()> {
    if size > MAX_ELEMENTS {
        Err(Error::TooLarge(size))
    } else {
        Ok(())
    }
}

impl Poset {
    /// Builds the poset generated by `pairs` (each `(x, y)` meaning `x < y`),
    /// taking the transitive closure. Fails if the relation has a cycle.
    pub fn from_relations<I>(size: usize, pairs: I) -> Result<Poset>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_size(size)?;
        let mut above = vec![0u64; size];
        for (x, y) in pairs {
            for idx in [x, y] {
                if idx >= size {
                    return Err(Error::ElementOutOfRange { index: idx, size });
                }
            }
            above[x] |= 1 << y;
        }
        // Warshall on bit rows.
        for k in 0..size {
            let row_k = above[k];
            for row in above.iter_mut() {
                if *row & (1 << k) != 0 {
                    *row |= row_k;
                }
            }
        }
        if let Some(x) = (0..size).find(|&x| above[x] & (1 << x) != 0) {
            return Err(Error::Cyclic(x));
        }
        let labels = (0..size).map(|i| i.to_string()).collect();
        Ok(Poset::from_closed(above, labels))
    }

    fn from_closed(above: Vec<u64>, labels: Vec<String>) -> Poset {
        let below = transpose(&above);
        Poset { above, below, labels }
    }

    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Poset {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() == self.size() {
            self.labels = labels;
        }
        self
    }

    pub fn size(&self) -> usize {
        self.above.len()
    }

    pub fn is_empty(&self) -> bool {
        self.above.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    /// Bitmask of all elements.
    pub fn all(&self) -> u64 {
        if self.size() == 64 {
            u64::MAX
        } else {
            (1u64 << self.size()) - 1
        }
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.above[x] & (1 << y) != 0
    }

    #[inline]
    pub fn le(&self, x: usize, y: usize) -> bool {
        x == y || self.lt(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.le(x, y) || self.lt(y, x)
    }

    /// Elements strictly above `x`.
    #[inline]
    pub fn above(&self, x: usize) -> u64 {
        self.above[x]
    }

    /// Elements strictly below `x`.
    #[inline]
    pub fn below(&self, x: usize) -> u64 {
        self.below[x]
    }

    /// The filter `{q : q >= x}`.
    pub fn up_set(&self, x: usize) -> u64 {
        self.above[x] | (1 << x)
    }

    /// The ideal `{q : q <= x}`.
    pub fn down_set(&self, x: usize) -> u64 {
        self.below[x] | (1 << x)
    }

    pub fn minimal(&self) -> u64 {
        (0..self.size()).filter(|&x| self.below[x] == 0).fold(0, |m, x| m | 1 << x)
    }

    pub fn maximal(&self) -> u64 {
        (0..self.size()).filter(|&x| self.above[x] == 0).fold(0, |m, x| m | 1 << x)
    }

    /// The element below every other element, if any.
    pub fn hat0(&self) -> Option<usize> {
        (0..self.size()).find(|&x| self.up_set(x) == self.all())
    }

    /// The element above every other element, if any.
    pub fn hat1(&self) -> Option<usize> {
        (0..self.size()).find(|&x| self.down_set(x) == self.all())
    }

    pub fn has_hat0(&self) -> bool {
        self.hat0().is_some()
    }

    pub fn has_hat1(&self) -> bool {
        self.hat1().is_some()
    }

    /// Cover pairs `(x, y)` (`x < y` with nothing strictly between), in
    /// lexicographic order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.size() {
            for y in bits(self.above[x]) {
                if self.above[x] & self.below[y] == 0 {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// A linear extension: sorting by strict down-set size works because
    /// `x < y` forces `below(x) ⊊ below(y)`.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.size()).collect();
        order.sort_by_key(|&x| (popcount(self.below[x]), x));
        order
    }

    /// For each element, the number of elements in a longest chain ending at it.
    pub fn depths(&self) -> Vec<usize> {
        let mut depth = vec![1usize; self.size()];
        for x in self.linear_extension() {
            depth[x] = 1 + bits(self.below[x]).map(|y| depth[y]).max().unwrap_or(0);
        }
        depth
    }

    /// For each element, the number of elements in a longest chain starting at it.
    pub fn rises(&self) -> Vec<usize> {
        let mut rise = vec![1usize; self.size()];
        for x in self.linear_extension().into_iter().rev() {
            rise[x] = 1 + bits(self.above[x]).map(|y| rise[y]).max().unwrap_or(0);
        }
        rise
    }

    /// Cardinality of a longest chain.
    pub fn height(&self) -> usize {
        self.depths().into_iter().max().unwrap_or(0)
    }

    /// Subposet induced on the elements of `mask`, with the map from new
    /// indices to old ones.
    pub fn induced(&self, mask: u64) -> (Poset, Vec<usize>) {
        let keep: Vec<usize> = bits(mask & self.all()).collect();
        let mut pos = [usize::MAX; 64];
        for (i, &x) in keep.iter().enumerate() {
            pos[x] = i;
        }
        let above = keep
            .iter()
            .map(|&x| bits(self.above[x] & mask).fold(0u64, |m, y| m | 1 << pos[y]))
            .collect();
        let labels = keep.iter().map(|&x| self.labels[x].clone()).collect();
        (Poset::from_closed(above, labels), keep)
    }

    /// The closed interval `[a, b]`, with the map back into `self`.
    pub fn interval(&self, a: usize, b: usize) -> Result<(Poset, Vec<usize>)> {
        for idx in [a, b] {
            if idx >= self.size() {
                return Err(Error::ElementOutOfRange {
                    index: idx,
                    size: self.size(),
                });
            }
        }
        if !self.le(a, b) {
            return Err(Error::NotComparable(a, b));
        }
        Ok(self.induced(self.up_set(a) & self.down_set(b)))
    }

    // ----- named posets -------------------------------------------------

    pub fn point() -> Poset {
        Poset::from_closed(vec![0], vec!["p".into()])
    }

    /// The path `a1 < a2 < ... < ak`.
    pub fn chain(k: usize) -> Result<Poset> {
        check_size(k)?;
        let above = (0..k).map(|i| mask_range(i + 1, k)).collect();
        let labels = (1..=k).map(|i| format!("a{i}")).collect();
        Ok(Poset::from_closed(above, labels))
    }

    /// The `k`-element antichain.
    pub fn antichain(k: usize) -> Result<Poset> {
        check_size(k)?;
        let labels = (1..=k).map(|i| format!("x{i}")).collect();
        Ok(Poset::from_closed(vec![0; k], labels))
    }

    /// `A < B1, ..., Br`.
    pub fn vee(r: usize) -> Result<Poset> {
        Poset::fan(&vec![2; r])
    }

    /// The wedge of chains of the given lengths: their minima are identified.
    /// Lengths are taken as given; ordering rules are enforced by the DSL.
    pub fn fan(lengths: &[usize]) -> Result<Poset> {
        if lengths.is_empty() || lengths.iter().any(|&l| l < 2) {
            return Err(Error::InvalidArgument {
                builder: "fan",
                reason: "needs at least one tine, each of length >= 2".into(),
            });
        }
        let size = 1 + lengths.iter().map(|l| l - 1).sum::<usize>();
        check_size(size)?;
        let mut pairs = Vec::new();
        let mut labels = vec!["A".to_string()];
        for (t, &len) in lengths.iter().enumerate() {
            let mut prev = 0;
            for j in 1..len {
                let x = labels.len();
                labels.push(format!("T{}.{}", t + 1, j));
                pairs.push((prev, x));
                prev = x;
            }
        }
        Ok(Poset::from_relations(size, pairs)?.with_labels(labels))
    }

    /// Chains of the given lengths with both their minima and maxima
    /// identified.
    pub fn harp(lengths: &[usize]) -> Result<Poset> {
        if lengths.is_empty() || lengths.iter().any(|&l| l < 2) {
            return Err(Error::InvalidArgument {
                builder: "harp",
                reason: "needs at least one string, each of length >= 2".into(),
            });
        }
        let size = 2 + lengths.iter().map(|l| l - 2).sum::<usize>();
        check_size(size)?;
        let top = 1;
        let mut pairs = vec![(0, top)];
        let mut labels = vec!["A".to_string(), "Z".to_string()];
        for (t, &len) in lengths.iter().enumerate() {
            let mut prev = 0;
            for j in 1..len - 1 {
                let x = labels.len();
                labels.push(format!("T{}.{}", t + 1, j));
                pairs.push((prev, x));
                prev = x;
            }
            pairs.push((prev, top));
        }
        Ok(Poset::from_relations(size, pairs)?.with_labels(labels))
    }

    /// `1 ⊕ k ⊕ 1`: `A < B1, ..., Bk < C`.
    pub fn diamond(k: usize) -> Result<Poset> {
        if k == 0 {
            return Err(Error::InvalidArgument {
                builder: "diamond",
                reason: "k must be at least 1".into(),
            });
        }
        check_size(k + 2)?;
        let c = k + 1;
        let mut pairs = vec![(0, c)];
        for b in 1..=k {
            pairs.push((0, b));
            pairs.push((b, c));
        }
        let mut labels = vec!["A".to_string()];
        labels.extend((1..=k).map(|i| format!("B{i}")));
        labels.push("C".into());
        Ok(Poset::from_relations(k + 2, pairs)?.with_labels(labels))
    }

    /// `A1, A2 < B1, B2`.
    pub fn butterfly() -> Poset {
        Poset::from_relations(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
            .expect("butterfly is a valid order")
            .with_labels(["A1", "A2", "B1", "B2"])
    }

    /// The Boolean lattice on `[n]`; element `i` is the subset with bitmask `i`.
    pub fn boolean(n: usize) -> Result<Poset> {
        if n > 6 {
            return Err(Error::TooLarge(1 << n.min(20)));
        }
        let size = 1usize << n;
        let above = (0..size as u64)
            .map(|a| {
                (0..size as u64)
                    .filter(|&b| a != b && a & !b == 0)
                    .fold(0u64, |m, b| m | 1 << b)
            })
            .collect();
        let labels = (0..size as u64)
            .map(|a| {
                let elems: Vec<String> = bits(a).map(|i| (i + 1).to_string()).collect();
                format!("{{{}}}", elems.join(","))
            })
            .collect();
        Ok(Poset::from_closed(above, labels))
    }

    // ----- operators ----------------------------------------------------

    /// Reverses the order.
    pub fn dual(&self) -> Poset {
        Poset {
            above: self.below.clone(),
            below: self.above.clone(),
            labels: self.labels.clone(),
        }
    }

    /// `self ⊕ other`: every element of `self` below every element of `other`.
    pub fn ordinal_sum(&self, other: &Poset) -> Result<Poset> {
        Poset::ordinal_sum_all(&[self.clone(), other.clone()])
    }

    pub fn ordinal_sum_all(parts: &[Poset]) -> Result<Poset> {
        let size: usize = parts.iter().map(Poset::size).sum();
        check_size(size)?;
        let mut above = Vec::with_capacity(size);
        let mut labels = Vec::with_capacity(size);
        let mut offset = 0;
        for (i, part) in parts.iter().enumerate() {
            let later = mask_range(offset + part.size(), size);
            for x in 0..part.size() {
                above.push((part.above[x] << offset) | later);
                labels.push(format!("{}.{}", i + 1, part.labels[x]));
            }
            offset += part.size();
        }
        Ok(Poset::from_closed(above, labels))
    }

    /// The wedge: the minimum elements of all operands are identified and no
    /// other relations are added.
    pub fn wedge(parts: &[Poset]) -> Result<Poset> {
        let mut bottoms = Vec::with_capacity(parts.len());
        for (i, p) in parts.iter().enumerate() {
            bottoms.push(p.hat0().ok_or(Error::WedgeNoBottom(i))?);
        }
        let size = 1 + parts.iter().map(|p| p.size() - 1).sum::<usize>();
        check_size(size)?;
        let mut pairs = Vec::new();
        let mut labels = vec!["0".to_string()];
        for (i, (p, &bot)) in parts.iter().zip(&bottoms).enumerate() {
            let mut map = vec![0usize; p.size()];
            for x in (0..p.size()).filter(|&x| x != bot) {
                map[x] = labels.len();
                labels.push(format!("{}.{}", i + 1, p.labels[x]));
            }
            for x in 0..p.size() {
                for y in bits(p.above[x]) {
                    pairs.push((map[x], map[y]));
                }
            }
        }
        Ok(Poset::from_relations(size, pairs)?.with_labels(labels))
    }

    /// Glues `parts` in sequence, identifying element `joins[i].0` of
    /// `parts[i]` with element `joins[i].1` of `parts[i + 1]`, then closes
    /// transitively.
    pub fn glue(parts: &[Poset], joins: &[(usize, usize)]) -> Result<Poset> {
        assert_eq!(joins.len() + 1, parts.len().max(1), "one join per adjacent pair");
        let size = parts.iter().map(Poset::size).sum::<usize>() + 1 - parts.len().max(1);
        check_size(size)?;
        let mut pairs = Vec::new();
        let mut labels: Vec<String> = Vec::new();
        let mut carried: Option<usize> = None;
        for (i, p) in parts.iter().enumerate() {
            let mut map = vec![usize::MAX; p.size()];
            if i > 0 {
                let lo = joins[i - 1].1;
                if lo >= p.size() {
                    return Err(Error::ElementOutOfRange {
                        index: lo,
                        size: p.size(),
                    });
                }
                map[lo] = carried.expect("previous part set the join");
            }
            for x in 0..p.size() {
                if map[x] == usize::MAX {
                    map[x] = labels.len();
                    labels.push(format!("{}.{}", i + 1, p.labels[x]));
                }
            }
            for x in 0..p.size() {
                for y in bits(p.above[x]) {
                    pairs.push((map[x], map[y]));
                }
            }
            if i + 1 < parts.len() {
                let hi = joins[i].0;
                if hi >= p.size() {
                    return Err(Error::ElementOutOfRange {
                        index: hi,
                        size: p.size(),
                    });
                }
                carried = Some(map[hi]);
            }
        }
        Ok(Poset::from_relations(size, pairs)?.with_labels(labels))
    }

    // ----- isomorphism --------------------------------------------------

    /// Per-element invariants preserved by any order-isomorphism.
    pub fn element_signatures(&self) -> Vec<ElementSignature> {
        let depths = self.depths();
        let rises = self.rises();
        let covers = self.covers();
        let mut up_covers = vec![0u32; self.size()];
        let mut down_covers = vec![0u32; self.size()];
        for &(x, y) in &covers {
            up_covers[x] += 1;
            down_covers[y] += 1;
        }
        (0..self.size())
            .map(|x| ElementSignature {
                depth: depths[x] as u32,
                rise: rises[x] as u32,
                down: popcount(self.below[x]),
                up: popcount(self.above[x]),
                down_covers: down_covers[x],
                up_covers: up_covers[x],
            })
            .collect()
    }

    /// Sorted multiset of element signatures; equal for isomorphic posets.
    pub fn signature(&self) -> Vec<ElementSignature> {
        let mut sig = self.element_signatures();
        sig.sort_unstable();
        sig
    }

    /// An order-isomorphism `self -> other` as a map of element indices.
    pub fn isomorphism(&self, other: &Poset) -> Option<Vec<usize>> {
        if self.size() != other.size() {
            return None;
        }
        let sa = self.element_signatures();
        let sb = other.element_signatures();
        let mut sorted_a = sa.clone();
        let mut sorted_b = sb.clone();
        sorted_a.sort_unstable();
        sorted_b.sort_unstable();
        if sorted_a != sorted_b {
            return None;
        }
        let order = self.linear_extension();
        let mut map = vec![usize::MAX; self.size()];
        let mut used = 0u64;
        if iso_extend(self, other, &sa, &sb, &order, 0, &mut map, &mut used) {
            Some(map)
        } else {
            None
        }
    }

    pub fn isomorphic(&self, other: &Poset) -> bool {
        self.isomorphism(other).is_some()
    }

    /// True when the stored relation is irreflexive, antisymmetric and
    /// transitive, and `below` is the transpose of `above`.
    pub fn is_valid_order(&self) -> bool {
        let n = self.size();
        (0..n).all(|x| {
            self.above[x] & (1 << x) == 0
                && bits(self.above[x]).all(|y| self.above[y] & (1 << x) == 0 && self.above[y] & !self.above[x] == 0)
        }) && transpose(&self.above) == self.below
    }
}

fn iso_extend(
    a: &Poset,
    b: &Poset,
    sa: &[ElementSignature],
    sb: &[ElementSignature],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut u64,
) -> bool {
    let Some(&x) = order.get(depth) else {
        return true;
    };
    for y in 0..b.size() {
        if *used & (1 << y) != 0 || sa[x] != sb[y] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&v| {
            let w = map[v];
            a.lt(v, x) == b.lt(w, y) && a.lt(x, v) == b.lt(y, w)
        });
        if !consistent {
            continue;
        }
        map[x] = y;
        *used |= 1 << y;
        if iso_extend(a, b, sa, sb, order, depth + 1, map, used) {
            return true;
        }
        *used &= !(1 << y);
        map[x] = usize::MAX;
    }
    false
}

/// Invariants of a single element, ordered for canonical sorting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementSignature {
    pub depth: u32,
    pub rise: u32,
    pub down: u32,
    pub up: u32,
    pub down_covers: u32,
    pub up_covers: u32,
}

fn mask_range(lo: usize, hi: usize) -> u64 {
    let upto = |k: usize| if k >= 64 { u64::MAX } else { (1u64 << k) - 1 };
    upto(hi) & !upto(lo)
}

#[derive(Serialize, Deserialize)]
struct PosetJson {
    size: usize,
    covers: Vec<[usize; 2]>,
    labels: Vec<String>,
}

impl Serialize for Poset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PosetJson {
            size: self.size(),
            covers: self.covers().into_iter().map(|(x, y)| [x, y]).collect(),
            labels: self.labels.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poset {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PosetJson::deserialize(d)?;
        let p = Poset::from_relations(raw.size, raw.covers.iter().map(|c| (c[0], c[1]))).map_err(serde::de::Error::custom)?;
        Ok(if raw.labels.is_empty() { p } else { p.with_labels(raw.labels) })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_is_total() {
        let c = Poset::chain(3).unwrap();
        assert_eq!(c.size(), 3);
        assert!(c.lt(0, 1) && c.lt(1, 2) && c.lt(0, 2));
        assert_eq!(c.height(), 3);
        assert_eq!(c.covers(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn butterfly_relations() {
        let b = Poset::butterfly();
        assert_eq!(b.size(), 4);
        for a in 0..2 {
            for t in 2..4 {
                assert!(b.lt(a, t));
            }
        }
        assert!(!b.comparable(0, 1));
        assert!(!b.comparable(2, 3));
        assert_eq!(b.height(), 2);
        assert!(!b.has_hat0() && !b.has_hat1());
    }

    #[test]
    fn fan_three_two_is_j() {
        let j = Poset::fan(&[3, 2]).unwrap();
        assert_eq!(j.size(), 4);
        // A1 < A2 < A3, A1 < B
        assert!(j.lt(0, 1) && j.lt(1, 2) && j.lt(0, 3));
        assert!(!j.comparable(3, 1) && !j.comparable(3, 2));
        assert_eq!(j.hat0(), Some(0));
    }

    #[test]
    fn diamond_shape() {
        let d = Poset::diamond(2).unwrap();
        assert_eq!(d.size(), 4);
        assert!(d.lt(0, 1) && d.lt(0, 2) && d.lt(1, 3) && d.lt(2, 3));
        assert!(!d.comparable(1, 2));
        assert_eq!(Poset::diamond(5).unwrap().height(), 3);
    }

    #[test]
    fn harp_sizes() {
        let h = Poset::harp(&[4, 3]).unwrap();
        assert_eq!(h.size(), 5);
        assert_eq!(h.height(), 4);
        assert_eq!(h.hat0(), Some(0));
        assert_eq!(h.hat1(), Some(1));
    }

    #[test]
    fn dual_reverses() {
        let v = Poset::vee(2).unwrap();
        let lambda = v.dual();
        assert_eq!(lambda.hat1(), Some(0));
        assert!(!v.isomorphic(&lambda));
        assert!(v.dual().dual() == v);
        let j = Poset::fan(&[3, 2]).unwrap().dual();
        assert!(j.lt(2, 1) && j.lt(1, 0) && j.lt(3, 0));
    }

    #[test]
    fn ordinal_sums() {
        let p = Poset::point();
        assert!(p.ordinal_sum(&p).unwrap().isomorphic(&Poset::chain(2).unwrap()));
        let d3 = Poset::ordinal_sum_all(&[p.clone(), Poset::antichain(3).unwrap(), p.clone()]).unwrap();
        assert!(d3.isomorphic(&Poset::diamond(3).unwrap()));
        let obo = Poset::ordinal_sum_all(&[p.clone(), Poset::butterfly(), p]).unwrap();
        assert_eq!(obo.size(), 6);
        assert_eq!(obo.height(), 4);
        assert!(obo.has_hat0() && obo.has_hat1());
    }

    #[test]
    fn wedges() {
        let c2 = Poset::chain(2).unwrap();
        let w = Poset::wedge(&[c2.clone(), c2.clone()]).unwrap();
        assert!(w.isomorphic(&Poset::vee(2).unwrap()));
        let w3 = Poset::wedge(&[c2.clone(), c2.clone(), c2.clone()]).unwrap();
        assert!(w3.isomorphic(&Poset::vee(3).unwrap()));
        let f = Poset::wedge(&[Poset::chain(4).unwrap(), Poset::chain(3).unwrap(), Poset::chain(3).unwrap()]).unwrap();
        assert!(f.isomorphic(&Poset::fan(&[4, 3, 3]).unwrap()));
        let mixed = Poset::wedge(&[c2, Poset::diamond(3).unwrap()]).unwrap();
        assert_eq!(mixed.size(), 6);
        assert_eq!(mixed.hat0(), Some(0));
        assert_eq!(
            Poset::wedge(&[Poset::chain(2).unwrap(), Poset::butterfly()]),
            Err(Error::WedgeNoBottom(1))
        );
    }

    #[test]
    fn glue_chains() {
        let c2 = Poset::chain(2).unwrap();
        let g = Poset::glue(&[c2.clone(), c2], &[(1, 0)]).unwrap();
        assert!(g.isomorphic(&Poset::chain(3).unwrap()));
    }

    #[test]
    fn interval_of_boolean_is_boolean() {
        let b3 = Poset::boolean(3).unwrap();
        let (iv, map) = b3.interval(0, 0b011).unwrap();
        assert!(iv.isomorphic(&Poset::boolean(2).unwrap()));
        assert_eq!(map, vec![0, 1, 2, 3]);
        assert_eq!(b3.interval(0b001, 0b010), Err(Error::NotComparable(1, 2)));
    }

    #[test]
    fn isomorphism_examples() {
        let a = Poset::chain(2).unwrap().ordinal_sum(&Poset::point()).unwrap();
        assert!(a.isomorphic(&Poset::chain(3).unwrap()));
        let v = Poset::vee(2).unwrap();
        assert!(!v.isomorphic(&v.dual()));
        let perm = Poset::from_relations(3, [(2, 0), (2, 1)]).unwrap();
        let m = v.isomorphism(&perm).unwrap();
        assert_eq!(m[0], 2);
    }

    #[test]
    fn rejects_cycles_and_overflow() {
        assert_eq!(Poset::from_relations(2, [(0, 1), (1, 0)]), Err(Error::Cyclic(0)));
        assert!(matches!(Poset::chain(65), Err(Error::TooLarge(65))));
        assert!(matches!(Poset::fan(&[1]), Err(Error::InvalidArgument { .. })));
    }

    #[test]
    fn json_uses_covers() {
        let d = Poset::diamond(2).unwrap();
        let js = serde_json::to_value(&d).unwrap();
        assert_eq!(js["size"], 4);
        assert_eq!(js["covers"], serde_json::json!([[0, 1], [0, 2], [1, 3], [2, 3]]));
        let back: Poset = serde_json::from_value(js).unwrap();
        assert_eq!(back, d);
    }
}
