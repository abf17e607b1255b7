//! Branch-and-bound maximization over pattern-free families of `B_n`.
//!
//! Candidates are visited in a fixed order (largest levels first, then by
//! popcount and value); each node branches on including or excluding the next
//! candidate. The bound is the constraint-free sum of the remaining weights,
//! and an include is rejected as soon as it completes a copy of the pattern.

use std::time::{Duration, Instant};

use num_integer::Integer;
use serde::Serialize;

use crate::bits::{k_subsets, low_bits, popcount};
use crate::embedding::contains_with_new_set;
use crate::error::{Error, Result};
use crate::lattice::{binomial, Family};
use crate::poset::Poset;
use crate::rational::Rational;

/// Largest ground set the search accepts (candidates are materialized).
pub const MAX_SEARCH_N: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Objective {
    /// `|F|`, giving `La(n, P)`.
    Cardinality,
    /// The Lubell function, giving `λ_n(P)`.
    LubellWeight,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: 100_000_000,
            max_time: Duration::from_secs(300),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchProblem {
    pub n: usize,
    pub pattern: Poset,
    pub objective: Objective,
    /// Allowed set sizes, inclusive.
    pub window: (usize, usize),
    /// Sets that may not be used.
    pub exclude: Vec<u64>,
    pub budget: Budget,
    /// Collect every maximizer instead of stopping at the first.
    pub all_maximizers: bool,
    /// Stop as soon as a family strictly above this value is found.
    pub stop_when_above: Option<Rational>,
}

impl SearchProblem {
    pub fn new(n: usize, pattern: Poset, objective: Objective) -> SearchProblem {
        SearchProblem {
            n,
            pattern,
            objective,
            window: (0, n),
            exclude: Vec::new(),
            budget: Budget::default(),
            all_maximizers: false,
            stop_when_above: None,
        }
    }

    pub fn window(mut self, lo: usize, hi: usize) -> Self {
        self.window = (lo, hi);
        self
    }

    pub fn exclude(mut self, sets: impl IntoIterator<Item = u64>) -> Self {
        self.exclude.extend(sets);
        self
    }

    pub fn budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    pub fn all_maximizers(mut self) -> Self {
        self.all_maximizers = true;
        self
    }

    pub fn stop_when_above(mut self, value: Rational) -> Self {
        self.stop_when_above = Some(value);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    pub best_value: Rational,
    pub witness: Family,
    /// Every maximizer in (popcount, value) lexicographic order; only filled
    /// when requested.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub maximizers: Vec<Family>,
    /// True iff the whole tree was explored, so `best_value` is the maximum.
    pub exhausted: bool,
    pub nodes_explored: u64,
}

struct Dfs<'a> {
    pattern: &'a Poset,
    cands: Vec<u64>,
    weight: Vec<u128>,
    suffix: Vec<u128>,
    root_symmetry: bool,
    all: bool,
    stop_above: Option<u128>,
    current: Vec<u64>,
    value: u128,
    best: u128,
    best_sets: Vec<u64>,
    maximizers: Vec<Vec<u64>>,
    nodes: u64,
    max_nodes: u64,
    deadline: Instant,
    aborted: bool,
}

impl Dfs<'_> {
    fn run(&mut self, i: usize) {
        if self.aborted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.max_nodes || (self.nodes & 0xfff == 0 && Instant::now() >= self.deadline) {
            self.aborted = true;
            return;
        }
        if self.value > self.best {
            self.best = self.value;
            self.best_sets = self.current.clone();
            if self.all {
                self.maximizers.clear();
            }
            if self.stop_above.is_some_and(|t| self.best > t) {
                self.aborted = true;
                return;
            }
        }
        let reach = self.value + self.suffix[i];
        if reach < self.best || (!self.all && reach == self.best) {
            return;
        }
        if i == self.cands.len() {
            if self.all && self.value == self.best {
                self.maximizers.push(self.current.clone());
            }
            return;
        }
        let s = self.cands[i];
        let canonical = !self.root_symmetry || !self.current.is_empty() || s == low_bits(popcount(s) as usize);
        if canonical && contains_with_new_set(&self.current, s, self.pattern).is_none() {
            self.current.push(s);
            self.value += self.weight[i];
            self.run(i + 1);
            self.value -= self.weight[i];
            self.current.pop();
        }
        self.run(i + 1);
    }
}

/// Maximizes the objective over pattern-free families inside the window.
pub fn maximize(problem: &SearchProblem) -> Result<SearchOutcome> {
    let n = problem.n;
    let (lo, hi) = problem.window;
    if n > MAX_SEARCH_N {
        return Err(Error::GroundSetTooLarge { n, limit: MAX_SEARCH_N });
    }
    if lo > hi || hi > n {
        return Err(Error::InvalidSearchWindow { n, lo, hi });
    }
    let full = low_bits(n);
    if let Some(&bad) = problem.exclude.iter().find(|&&s| s & !full != 0) {
        return Err(Error::SetOutOfRange { set: bad, n });
    }
    let mut excluded = problem.exclude.clone();
    excluded.sort_unstable();
    excluded.dedup();

    // Candidates: bigger levels first (middle outward), then popcount, value.
    let mut cands: Vec<u64> = (lo..=hi)
        .flat_map(|k| k_subsets(n, k))
        .filter(|s| excluded.binary_search(s).is_err())
        .collect();
    cands.sort_by_key(|&s| {
        let k = popcount(s) as usize;
        (std::cmp::Reverse(binomial(n, k)), k, s)
    });

    let scale = match problem.objective {
        Objective::Cardinality => 1u128,
        Objective::LubellWeight => (lo..=hi).fold(1u128, |acc, k| acc.lcm(&binomial(n, k))),
    };
    let weight: Vec<u128> = cands
        .iter()
        .map(|&s| match problem.objective {
            Objective::Cardinality => 1,
            Objective::LubellWeight => scale / binomial(n, popcount(s) as usize),
        })
        .collect();
    let mut suffix = vec![0u128; cands.len() + 1];
    for i in (0..cands.len()).rev() {
        suffix[i] = suffix[i + 1] + weight[i];
    }

    // Every permutation of [n] preserves the constraints when the
    // exclusions are whole levels, so the first included set may be taken
    // to be the smallest set of its level.
    let exclusions_symmetric = (0..=n).all(|k| {
        let c = excluded.iter().filter(|&&s| popcount(s) as usize == k).count() as u128;
        c == 0 || c == binomial(n, k)
    });
    let stop_above = problem.stop_when_above.as_ref().map(|t| {
        // Largest integer v with v / scale <= t.
        let scaled = t.as_big() * num_bigint::BigInt::from(scale);
        let floor = scaled.floor().to_integer();
        u128::try_from(floor.max(num_bigint::BigInt::from(0))).unwrap_or(u128::MAX)
    });

    let mut dfs = Dfs {
        pattern: &problem.pattern,
        cands,
        weight,
        suffix,
        root_symmetry: exclusions_symmetric && !problem.all_maximizers,
        all: problem.all_maximizers,
        stop_above,
        current: Vec::new(),
        value: 0,
        best: 0,
        best_sets: Vec::new(),
        maximizers: Vec::new(),
        nodes: 0,
        max_nodes: problem.budget.max_nodes,
        deadline: Instant::now() + problem.budget.max_time,
        aborted: false,
    };
    dfs.run(0);

    let to_family = |sets: &[u64]| Family::new(n, sets.iter().copied());
    let mut maximizers = if problem.all_maximizers {
        dfs.maximizers.iter().map(|m| to_family(m)).collect::<Result<Vec<_>>>()?
    } else {
        Vec::new()
    };
    maximizers.sort_by_key(family_order);
    let witness = match maximizers.first() {
        Some(first) => first.clone(),
        None => to_family(&dfs.best_sets)?,
    };
    Ok(SearchOutcome {
        best_value: Rational::new(dfs.best, scale),
        witness,
        maximizers,
        exhausted: !dfs.aborted,
        nodes_explored: dfs.nodes,
    })
}

fn family_order(f: &Family) -> Vec<(u32, u64)> {
    f.sets().iter().map(|&s| (popcount(s), s)).collect()
}

/// Verdict of a finite-`n` boundedness check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum BoundVerdict {
    /// Every pattern-free family in the window has Lubell value at most the
    /// bound; `max` is the exact maximum.
    Holds { max: Rational, nodes_explored: u64 },
    /// A pattern-free family in the window beats the bound; `witness` has
    /// the largest Lubell value found.
    Violated { value: Rational, witness: Family },
}

/// Does every pattern-free family of sets with sizes in `[m, n - m]` have
/// Lubell value at most `bound`? A verdict about this `n` only.
pub fn check_bounded(pattern: &Poset, n: usize, m: usize, bound: &Rational) -> Result<BoundVerdict> {
    check_bounded_with(pattern, n, m, bound, Budget::default())
}

pub fn check_bounded_with(pattern: &Poset, n: usize, m: usize, bound: &Rational, budget: Budget) -> Result<BoundVerdict> {
    if 2 * m > n {
        return Err(Error::InvalidSearchWindow {
            n,
            lo: m,
            hi: n.saturating_sub(m),
        });
    }
    let problem = SearchProblem::new(n, pattern.clone(), Objective::LubellWeight)
        .window(m, n - m)
        .budget(budget);
    let out = maximize(&problem)?;
    if &out.best_value > bound {
        Ok(BoundVerdict::Violated {
            value: out.best_value,
            witness: out.witness,
        })
    } else if out.exhausted {
        Ok(BoundVerdict::Holds {
            max: out.best_value,
            nodes_explored: out.nodes_explored,
        })
    } else {
        Err(Error::Inconclusive)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub n: usize,
    /// Largest admissible set size (sizes are `< beta * n`).
    pub max_size: usize,
    pub outcome: SearchOutcome,
}

/// For each `n`, the maximum Lubell value of a pattern-free family whose
/// sets all have fewer than `beta * n` elements.
pub fn scan_lower_lbound(pattern: &Poset, beta: &Rational, ns: &[usize]) -> Result<Vec<ScanRow>> {
    scan_lower_lbound_with(pattern, beta, ns, Budget::default())
}

pub fn scan_lower_lbound_with(pattern: &Poset, beta: &Rational, ns: &[usize], budget: Budget) -> Result<Vec<ScanRow>> {
    ns.iter()
        .map(|&n| {
            // Largest k with k < beta * n, i.e. k * q < p * n.
            let limit = beta.as_big() * num_bigint::BigInt::from(n);
            let k = (limit.ceil().to_integer() - 1u32).min(num_bigint::BigInt::from(n));
            let max_size = usize::try_from(k).map_err(|_| Error::InvalidSearchWindow { n, lo: 0, hi: 0 })?;
            let problem = SearchProblem::new(n, pattern.clone(), Objective::LubellWeight)
                .window(0, max_size)
                .budget(budget);
            Ok(ScanRow {
                n,
                max_size,
                outcome: maximize(&problem)?,
            })
        })
        .collect()
}
