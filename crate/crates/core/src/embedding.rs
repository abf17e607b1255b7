//! Weak-subposet containment: an injection from the pattern into the host
//! such that `u < v` in the pattern implies `f(u) < f(v)` in the host.
//!
//! Hosts are posets, explicit set families ordered by strict inclusion, or
//! windows of consecutive levels of `B_n` that are never materialized.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bits::{bits, format_set, low_bits, popcount, proper_subset, set_elements};
use crate::error::{Error, Result};
use crate::lattice::{binomial, Family};
use crate::poset::Poset;

/// Where a pattern element landed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HostHandle {
    /// Element index in a host poset or family.
    Index(usize),
    /// A subset of the ground set.
    Set(u64),
}

impl fmt::Display for HostHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HostHandle::Index(i) => write!(f, "{i}"),
            HostHandle::Set(s) => f.write_str(&format_set(*s)),
        }
    }
}

/// A witness embedding: `map[u]` is the image of pattern element `u`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Embedding {
    pub map: Vec<HostHandle>,
}

impl Embedding {
    /// Images as sets, when every handle is a set.
    pub fn sets(&self) -> Option<Vec<u64>> {
        self.map
            .iter()
            .map(|h| match h {
                HostHandle::Set(s) => Some(*s),
                HostHandle::Index(_) => None,
            })
            .collect()
    }

    /// Re-indexes the pattern side through `perm` (`perm[u]` is the element
    /// of this embedding's pattern that corresponds to `u`).
    pub fn pulled_back(&self, perm: &[usize]) -> Embedding {
        Embedding {
            map: perm.iter().map(|&v| self.map[v]).collect(),
        }
    }

    pub fn display(&self) -> String {
        let parts: Vec<String> = self.map.iter().enumerate().map(|(u, h)| format!("{u}->{h}")).collect();
        parts.join(" ")
    }
}

impl Serialize for Embedding {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.map.len()))?;
        for (u, h) in self.map.iter().enumerate() {
            let key = u.to_string();
            match h {
                HostHandle::Index(i) => m.serialize_entry(&key, i)?,
                HostHandle::Set(set) => m.serialize_entry(&key, &set_elements(*set))?,
            }
        }
        m.end()
    }
}

impl<'de> Deserialize<'de> for Embedding {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Index(usize),
            Set(Vec<usize>),
        }

        struct EmbeddingVisitor;

        impl<'de> Visitor<'de> for EmbeddingVisitor {
            type Value = Embedding;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from pattern index to host handle")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> std::result::Result<Embedding, A::Error> {
                let mut entries = BTreeMap::new();
                while let Some((k, v)) = access.next_entry::<String, Raw>()? {
                    let idx: usize = k.parse().map_err(de::Error::custom)?;
                    let handle = match v {
                        Raw::Index(i) => HostHandle::Index(i),
                        Raw::Set(elems) => {
                            let mut mask = 0u64;
                            for e in elems {
                                if e == 0 || e > 64 {
                                    return Err(de::Error::custom(format!("element {e} out of range")));
                                }
                                mask |= 1 << (e - 1);
                            }
                            HostHandle::Set(mask)
                        }
                    };
                    entries.insert(idx, handle);
                }
                if entries.keys().enumerate().any(|(i, &k)| i != k) {
                    return Err(de::Error::custom("pattern indices must be 0..p"));
                }
                Ok(Embedding {
                    map: entries.into_values().collect(),
                })
            }
        }

        d.deserialize_map(EmbeddingVisitor)
    }
}

/// A host order the matcher can search.
trait Host {
    fn len(&self) -> usize;
    fn lt(&self, a: usize, b: usize) -> bool;
    /// Host elements in an order compatible with `lt`.
    fn topo_order(&self) -> Vec<usize>;
}

impl Host for Poset {
    fn len(&self) -> usize {
        self.size()
    }

    fn lt(&self, a: usize, b: usize) -> bool {
        Poset::lt(self, a, b)
    }

    fn topo_order(&self) -> Vec<usize> {
        self.linear_extension()
    }
}

struct SetHost<'a> {
    sets: &'a [u64],
}

impl Host for SetHost<'_> {
    fn len(&self) -> usize {
        self.sets.len()
    }

    fn lt(&self, a: usize, b: usize) -> bool {
        proper_subset(self.sets[a], self.sets[b])
    }

    fn topo_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.sets.len()).collect();
        order.sort_by_key(|&i| popcount(self.sets[i]));
        order
    }
}

/// Counts an element must dominate to host a pattern element.
#[derive(Clone, Copy, Debug, Default)]
struct Profile {
    down: u32,
    up: u32,
    depth: u32,
    rise: u32,
}

impl Profile {
    fn covers(&self, need: &Profile) -> bool {
        self.down >= need.down && self.up >= need.up && self.depth >= need.depth && self.rise >= need.rise
    }
}

fn pattern_profiles(p: &Poset) -> Vec<Profile> {
    let depths = p.depths();
    let rises = p.rises();
    (0..p.size())
        .map(|x| Profile {
            down: popcount(p.below(x)),
            up: popcount(p.above(x)),
            depth: depths[x] as u32,
            rise: rises[x] as u32,
        })
        .collect()
}

fn host_profiles<H: Host>(host: &H) -> Vec<Profile> {
    let n = host.len();
    let mut prof = vec![Profile::default(); n];
    let order = host.topo_order();
    for (i, &a) in order.iter().enumerate() {
        let mut depth = 0;
        let mut down = 0;
        for &b in &order[..i] {
            if host.lt(b, a) {
                down += 1;
                depth = depth.max(prof[b].depth);
            }
        }
        prof[a].depth = depth + 1;
        prof[a].down = down;
    }
    for (i, &a) in order.iter().enumerate().rev() {
        let mut rise = 0;
        let mut up = 0;
        for &b in &order[i + 1..] {
            if host.lt(a, b) {
                up += 1;
                rise = rise.max(prof[b].rise);
            }
        }
        prof[a].rise = rise + 1;
        prof[a].up = up;
    }
    prof
}

/// Pattern placement order: a linear extension that keeps following chains,
/// so each element's predecessors are placed before it.
fn placement_order(p: &Poset) -> Vec<usize> {
    let rises = p.rises();
    let mut placed = 0u64;
    let mut order = Vec::with_capacity(p.size());
    while order.len() < p.size() {
        let next = (0..p.size())
            .filter(|&u| placed & (1 << u) == 0 && p.below(u) & !placed == 0)
            .max_by_key(|&u| (popcount(p.below(u)), rises[u], std::cmp::Reverse(u)))
            .expect("a poset always has an available element");
        placed |= 1 << next;
        order.push(next);
    }
    order
}

struct Matcher<'a, H: Host> {
    host: &'a H,
    pattern: &'a Poset,
    order: Vec<usize>,
    need: Vec<Profile>,
    have: Vec<Profile>,
    map: Vec<usize>,
    used: Vec<bool>,
    pinned: Option<(usize, usize)>,
}

impl<'a, H: Host> Matcher<'a, H> {
    fn new(host: &'a H, pattern: &'a Poset) -> Self {
        Matcher {
            host,
            pattern,
            order: placement_order(pattern),
            need: pattern_profiles(pattern),
            have: host_profiles(host),
            map: vec![usize::MAX; pattern.size()],
            used: vec![false; host.len()],
            pinned: None,
        }
    }

    fn fits(&self, u: usize, h: usize) -> bool {
        !self.used[h] && self.have[h].covers(&self.need[u]) && bits(self.pattern.below(u)).all(|v| self.host.lt(self.map[v], h))
    }

    fn extend(&mut self, i: usize) -> bool {
        let Some(&u) = self.order.get(i) else {
            return true;
        };
        let candidates: Vec<usize> = match self.pinned {
            Some((pu, ph)) if pu == u => vec![ph],
            Some((_, ph)) => (0..self.host.len()).filter(|&h| h != ph).collect(),
            None => (0..self.host.len()).collect(),
        };
        for h in candidates {
            if !self.fits(u, h) {
                continue;
            }
            self.map[u] = h;
            self.used[h] = true;
            if self.extend(i + 1) {
                return true;
            }
            self.used[h] = false;
            self.map[u] = usize::MAX;
        }
        false
    }

    fn run(mut self) -> Option<Vec<usize>> {
        if self.pattern.size() > self.host.len() {
            return None;
        }
        self.extend(0).then_some(self.map)
    }

    /// Only embeddings whose image contains host element `h`.
    fn run_through(mut self, h: usize) -> Option<Vec<usize>> {
        if self.pattern.size() > self.host.len() {
            return None;
        }
        for u in 0..self.pattern.size() {
            if !self.have[h].covers(&self.need[u]) {
                continue;
            }
            self.pinned = Some((u, h));
            if self.extend(0) {
                return Some(self.map);
            }
            self.map.iter_mut().for_each(|m| *m = usize::MAX);
            self.used.iter_mut().for_each(|b| *b = false);
        }
        None
    }
}

/// Finds a copy of `pattern` inside the poset `host`.
pub fn contains_subposet(host: &Poset, pattern: &Poset) -> Option<Embedding> {
    Matcher::new(host, pattern).run().map(|m| Embedding {
        map: m.into_iter().map(HostHandle::Index).collect(),
    })
}

fn set_embedding(sets: &[u64], m: Vec<usize>) -> Embedding {
    Embedding {
        map: m.into_iter().map(|i| HostHandle::Set(sets[i])).collect(),
    }
}

/// Finds a copy of `pattern` in `family` ordered by inclusion.
pub fn family_contains(family: &Family, pattern: &Poset) -> Option<Embedding> {
    sets_contain(family.sets(), pattern)
}

/// As [`family_contains`] on a raw slice of distinct sets.
pub fn sets_contain(sets: &[u64], pattern: &Poset) -> Option<Embedding> {
    let host = SetHost { sets };
    Matcher::new(&host, pattern).run().map(|m| set_embedding(sets, m))
}

/// Incremental test: given that `sets` is pattern-free, does adding
/// `new_set` create a copy? Only embeddings using `new_set` are explored.
pub fn contains_with_new_set(sets: &[u64], new_set: u64, pattern: &Poset) -> Option<Embedding> {
    let mut all = Vec::with_capacity(sets.len() + 1);
    all.extend_from_slice(sets);
    if !all.contains(&new_set) {
        all.push(new_set);
    }
    let idx = all.iter().position(|&s| s == new_set).expect("just inserted");
    let host = SetHost { sets: &all };
    Matcher::new(&host, pattern).run_through(idx).map(|m| set_embedding(&all, m))
}

/// Consecutive levels `s, ..., s + k - 1` of `B_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LevelWindow {
    pub n: usize,
    pub s: usize,
    pub k: usize,
}

impl LevelWindow {
    pub fn new(n: usize, s: usize, k: usize) -> Result<LevelWindow> {
        if k == 0 || s + k - 1 > n || n > crate::lattice::MAX_GROUND {
            return Err(Error::InvalidWindow { n, s, k });
        }
        Ok(LevelWindow { n, s, k })
    }

    /// Largest set size in the window.
    pub fn top(&self) -> usize {
        self.s + self.k - 1
    }

    /// The window as an explicit family (small `n` only).
    pub fn family(&self) -> Result<Family> {
        Family::levels(self.n, self.s..=self.top())
    }
}

/// Decides whether the window family contains `pattern`.
///
/// Images are chosen one pattern element at a time. Sets already placed cut
/// the ground set into atoms (classes of elements with equal membership);
/// any permutation fixing every atom fixes the partial embedding, so a new
/// set is determined up to symmetry by how many elements it takes from each
/// atom, and only one representative per count vector is tried.
pub fn levels_contain(window: &LevelWindow, pattern: &Poset) -> Option<Embedding> {
    if pattern.height() > window.k {
        return None;
    }
    let mut search = WindowSearch::new(window, pattern);
    let atoms: Vec<u64> = if window.n == 0 { Vec::new() } else { vec![low_bits(window.n)] };
    search.place(0, &atoms).then(|| Embedding {
        map: search.sets.iter().map(|&s| HostHandle::Set(s)).collect(),
    })
}

struct WindowSearch<'a> {
    pattern: &'a Poset,
    order: Vec<usize>,
    depth: Vec<usize>,
    rise: Vec<usize>,
    up: Vec<u128>,
    n: usize,
    bottom: usize,
    top: usize,
    sets: Vec<u64>,
    placed: Vec<usize>,
}

impl<'a> WindowSearch<'a> {
    fn new(w: &LevelWindow, pattern: &'a Poset) -> Self {
        WindowSearch {
            pattern,
            order: placement_order(pattern),
            depth: pattern.depths(),
            rise: pattern.rises(),
            up: (0..pattern.size()).map(|u| popcount(pattern.above(u)) as u128).collect(),
            n: w.n,
            bottom: w.s,
            top: w.top(),
            sets: vec![0; pattern.size()],
            placed: Vec::with_capacity(pattern.size()),
        }
    }

    fn place(&mut self, i: usize, atoms: &[u64]) -> bool {
        let Some(&u) = self.order.get(i) else {
            return true;
        };
        let preds = self.pattern.below(u);
        let must = bits(preds).fold(0u64, |m, v| m | self.sets[v]);
        let must_size = popcount(must) as usize;
        let mut lo = (self.bottom + self.depth[u] - 1).max(must_size);
        if let Some(biggest) = bits(preds).map(|v| popcount(self.sets[v]) as usize).max() {
            lo = lo.max(biggest + 1);
        }
        let Some(hi) = (self.top + 1).checked_sub(self.rise[u]) else {
            return false;
        };
        if lo > hi {
            return false;
        }
        let free: Vec<u64> = atoms.iter().copied().filter(|&a| a & must == 0).collect();
        let capacity: usize = free.iter().map(|&a| popcount(a) as usize).sum();
        for size in lo..=hi {
            let extra = size - must_size;
            if extra > capacity {
                break;
            }
            if self.choose(i, u, atoms, &free, 0, extra, must) {
                return true;
            }
        }
        false
    }

    /// Distributes `remaining` elements over `free[j..]`, taking the lowest
    /// elements of each atom.
    #[allow(clippy::too_many_arguments)]
    fn choose(&mut self, i: usize, u: usize, atoms: &[u64], free: &[u64], j: usize, remaining: usize, acc: u64) -> bool {
        if remaining == 0 {
            return self.try_set(i, u, atoms, acc);
        }
        let Some(&atom) = free.get(j) else {
            return false;
        };
        let later: usize = free[j + 1..].iter().map(|&a| popcount(a) as usize).sum();
        let size = popcount(atom) as usize;
        let min_take = remaining.saturating_sub(later);
        let max_take = remaining.min(size);
        for take in (min_take..=max_take).rev() {
            let picked = bits(atom).take(take).fold(0u64, |m, b| m | 1 << b);
            if self.choose(i, u, atoms, free, j + 1, remaining - take, acc | picked) {
                return true;
            }
        }
        false
    }

    fn try_set(&mut self, i: usize, u: usize, atoms: &[u64], set: u64) -> bool {
        if self.placed.iter().any(|&w| self.sets[w] == set) {
            return false;
        }
        // Enough supersets inside the window for everything above `u`.
        let size = popcount(set) as usize;
        if self.up[u] > 0 {
            let room: u128 = (1..=self.top - size).map(|j| binomial(self.n - size, j)).sum();
            if room < self.up[u] {
                return false;
            }
        }
        let mut refined = Vec::with_capacity(atoms.len() * 2);
        for &a in atoms {
            for part in [a & set, a & !set] {
                if part != 0 {
                    refined.push(part);
                }
            }
        }
        self.sets[u] = set;
        self.placed.push(u);
        if self.place(i + 1, &refined) {
            return true;
        }
        self.placed.pop();
        false
    }
}
