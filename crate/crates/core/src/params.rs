//! Poset parameters: `e(P)`, large intervals, `La(n, P)`, `λ_n(P)` and the
//! finite-`n` evidence around them.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use crate::bits::bits;
use crate::embedding::{levels_contain, Embedding, LevelWindow};
use crate::error::{Error, Result};
use crate::lattice::{binomial, sigma, Family};
use crate::poset::{ElementSignature, Poset};
use crate::rational::Rational;
use crate::search::{maximize, Budget, Objective, SearchProblem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Status {
    Exact,
    /// The true value may be larger; only `n <= search_ceiling` was examined.
    LowerBoundOnly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ParamWitness {
    /// A copy of the pattern in `window`, showing one more level is too many.
    Levels {
        window: LevelWindow,
        embedding: Embedding,
    },
    Family(Family),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamResult {
    pub value: Rational,
    pub status: Status,
    pub witness: Option<ParamWitness>,
    /// Largest ground-set size examined.
    pub search_ceiling: usize,
}

impl ParamResult {
    pub fn is_exact(&self) -> bool {
        self.status == Status::Exact
    }

    /// The value as an integer, when it is one.
    pub fn as_usize(&self) -> Option<usize> {
        if self.value.is_integer() {
            usize::try_from(self.value.numer()).ok()
        } else {
            None
        }
    }
}

/// Ground-set ceiling used by [`e_of`] when none is given.
pub fn default_ceiling(p: &Poset) -> usize {
    (p.size() * p.height()).clamp(1, crate::lattice::MAX_GROUND)
}

type MemoKey = (Vec<ElementSignature>, usize);
type Memo = HashMap<MemoKey, Vec<(Poset, ParamResult)>>;

fn memo() -> &'static Mutex<Memo> {
    static MEMO: OnceLock<Mutex<Memo>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

fn memo_lookup(p: &Poset, key: &MemoKey) -> Option<ParamResult> {
    let table = memo().lock().unwrap_or_else(|e| e.into_inner());
    table.get(key)?.iter().find_map(|(q, res)| {
        let iso = p.isomorphism(q)?;
        let mut res = res.clone();
        if let Some(ParamWitness::Levels { embedding, .. }) = &mut res.witness {
            *embedding = embedding.pulled_back(&iso);
        }
        Some(res)
    })
}

/// Is some window of `levels` consecutive levels of `B_n` host to `p`?
fn window_at(p: &Poset, n: usize, levels: usize) -> Option<(LevelWindow, Embedding)> {
    if levels > n + 1 {
        return None;
    }
    let last = n + 1 - levels;
    // Middle windows first: they have the most room.
    let mut starts: Vec<usize> = (0..=last).collect();
    starts.sort_by_key(|&s| (2 * s).abs_diff(last));
    starts.into_iter().find_map(|s| {
        let w = LevelWindow::new(n, s, levels).ok()?;
        levels_contain(&w, p).map(|e| (w, e))
    })
}

/// `e(P)`: the largest `k` such that every `k` consecutive levels of every
/// `B_n` are `P`-free.
///
/// Starting from `k = h(P) - 1` (which always works), `k + 1` levels are
/// tried at `n = n_max`; a window containing `P` there means `e(P) = k`, and
/// the least such `n` supplies the witness. Freedom of a window also holds
/// for every smaller `n`, since `B_n` windows embed into `B_{n+1}` ones. If
/// even `n_max + 1` levels stay free the result is a lower bound.
pub fn e_of(pattern: &Poset, n_max: Option<usize>) -> ParamResult {
    let n_max = n_max
        .unwrap_or_else(|| default_ceiling(pattern))
        .min(crate::lattice::MAX_GROUND);
    if pattern.is_empty() {
        return ParamResult {
            value: Rational::zero(),
            status: Status::Exact,
            witness: None,
            search_ceiling: 0,
        };
    }
    let key = (pattern.signature(), n_max);
    if let Some(hit) = memo_lookup(pattern, &key) {
        return hit;
    }
    let result = compute_e(pattern, n_max);
    memo()
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .entry(key)
        .or_default()
        .push((pattern.clone(), result.clone()));
    result
}

fn compute_e(p: &Poset, n_max: usize) -> ParamResult {
    let mut k = p.height() - 1;
    loop {
        let levels = k + 1;
        if levels > n_max + 1 {
            return ParamResult {
                value: Rational::integer(k as u64),
                status: Status::LowerBoundOnly,
                witness: None,
                search_ceiling: n_max,
            };
        }
        if let Some(found) = window_at(p, n_max, levels) {
            // Containment is monotone in n: binary search the least n.
            let (mut lo, mut hi, mut best) = (levels - 1, n_max, found);
            while lo < hi {
                let mid = lo + (hi - lo) / 2;
                match window_at(p, mid, levels) {
                    Some(f) => {
                        hi = mid;
                        best = f;
                    }
                    None => lo = mid + 1,
                }
            }
            let (window, embedding) = best;
            return ParamResult {
                value: Rational::integer(k as u64),
                status: Status::Exact,
                witness: Some(ParamWitness::Levels { window, embedding }),
                search_ceiling: n_max,
            };
        }
        k += 1;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalRecord {
    pub lo: usize,
    pub hi: usize,
    pub e_of_interval: usize,
    pub status: Status,
    pub is_large: bool,
}

/// `e` of every interval `[a, b]` with `a <= b`, flagging the maximal ones
/// that attain `e(P)`. Each interval uses `n_max` or its own default ceiling.
pub fn interval_table(p: &Poset, n_max: Option<usize>) -> Vec<IntervalRecord> {
    let e_p = e_of(p, n_max).as_usize().unwrap_or(0);
    let mut records: Vec<IntervalRecord> = Vec::new();
    for a in 0..p.size() {
        for b in bits(p.up_set(a)) {
            let (sub, _) = p.interval(a, b).expect("comparable by construction");
            let r = e_of(&sub, n_max);
            records.push(IntervalRecord {
                lo: a,
                hi: b,
                e_of_interval: r.as_usize().unwrap_or(0),
                status: r.status,
                is_large: false,
            });
        }
    }
    let attaining: Vec<(usize, usize)> = records
        .iter()
        .filter(|r| r.e_of_interval == e_p)
        .map(|r| (r.lo, r.hi))
        .collect();
    for r in &mut records {
        if r.e_of_interval == e_p {
            let inside = |&(c, d): &(usize, usize)| (c, d) != (r.lo, r.hi) && p.le(c, r.lo) && p.le(r.hi, d);
            r.is_large = !attaining.iter().any(inside);
        }
    }
    records
}

/// The large intervals of `p`: maximal intervals `I` with `e(I) = e(P)`.
pub fn large_intervals(p: &Poset, n_max: Option<usize>) -> Vec<IntervalRecord> {
    interval_table(p, n_max).into_iter().filter(|r| r.is_large).collect()
}

/// Runs the exact search behind [`la_n`] and [`lambda_n`] with an explicit
/// budget. The status is `Exact` iff the search tree was exhausted.
pub fn optimum(pattern: &Poset, n: usize, objective: Objective, all: bool, budget: Budget) -> Result<(ParamResult, Vec<Family>)> {
    let mut problem = SearchProblem::new(n, pattern.clone(), objective).budget(budget);
    if all {
        problem = problem.all_maximizers();
    }
    let out = maximize(&problem)?;
    Ok((
        ParamResult {
            value: out.best_value,
            status: if out.exhausted {
                Status::Exact
            } else {
                Status::LowerBoundOnly
            },
            witness: Some(ParamWitness::Family(out.witness)),
            search_ceiling: n,
        },
        out.maximizers,
    ))
}

/// `La(n, P)`: the largest size of a `P`-free family in `B_n`.
pub fn la_n(pattern: &Poset, n: usize) -> Result<ParamResult> {
    optimum(pattern, n, Objective::Cardinality, false, Budget::default()).map(|r| r.0)
}

/// `La(n, P)` together with every maximizing family.
pub fn la_n_all(pattern: &Poset, n: usize) -> Result<(ParamResult, Vec<Family>)> {
    optimum(pattern, n, Objective::Cardinality, true, Budget::default())
}

/// `λ_n(P)`: the largest Lubell value of a `P`-free family in `B_n`.
pub fn lambda_n(pattern: &Poset, n: usize) -> Result<ParamResult> {
    optimum(pattern, n, Objective::LubellWeight, false, Budget::default()).map(|r| r.0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdditivityReport {
    pub e_total: ParamResult,
    pub e_lower: ParamResult,
    pub e_upper: ParamResult,
    /// `e(P) = e(P1) + e(P2)` on the computed values.
    pub additive: bool,
    /// All three values are exact, so `additive` is a definitive answer.
    pub definitive: bool,
    #[serde(skip)]
    pub glued: Poset,
}

/// Glues `upper` onto `lower` by identifying `join_point` (an element of
/// `lower`) with the minimum of `upper`, and compares `e` of the result with
/// the sum of the parts.
///
/// Requires `join_point` maximal in `lower` and either the top of a large
/// interval of `lower` or its maximum, and `upper` to have a minimum.
pub fn additivity_check(lower: &Poset, upper: &Poset, join_point: usize, n_max: Option<usize>) -> Result<AdditivityReport> {
    if join_point >= lower.size() {
        return Err(Error::ElementOutOfRange {
            index: join_point,
            size: lower.size(),
        });
    }
    if lower.maximal() >> join_point & 1 == 0 {
        return Err(Error::HypothesisUnmet(format!(
            "element {join_point} is not maximal in the lower part"
        )));
    }
    let Some(bottom) = upper.hat0() else {
        return Err(Error::HypothesisUnmet("the upper part has no minimum".into()));
    };
    let is_top = lower.hat1() == Some(join_point);
    if !is_top && !large_intervals(lower, n_max).iter().any(|r| r.hi == join_point) {
        return Err(Error::HypothesisUnmet(format!(
            "element {join_point} is neither the maximum nor the top of a large interval of the lower part"
        )));
    }
    let glued = Poset::glue(&[lower.clone(), upper.clone()], &[(join_point, bottom)])?;
    let e_total = e_of(&glued, n_max);
    let e_lower = e_of(lower, n_max);
    let e_upper = e_of(upper, n_max);
    let additive = e_total.value == e_lower.value.clone() + e_upper.value.clone();
    let definitive = e_total.is_exact() && e_lower.is_exact() && e_upper.is_exact();
    Ok(AdditivityReport {
        e_total,
        e_lower,
        e_upper,
        additive,
        definitive,
        glued,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PiRow {
    pub n: usize,
    pub la: ParamResult,
    /// `La(n, P) / C(n, floor(n/2))`.
    pub ratio: Rational,
}

/// Exact finite-`n` ratios `La(n, P) / C(n, ⌊n/2⌋)`; no limit is claimed.
pub fn pi_evidence(pattern: &Poset, ns: &[usize]) -> Result<Vec<PiRow>> {
    ns.iter()
        .map(|&n| {
            let la = la_n(pattern, n)?;
            let ratio = la.value.clone() / Rational::integer(binomial(n, n / 2));
            Ok(PiRow { n, la, ratio })
        })
        .collect()
}

/// `Σ(n, e(P))`, the size of the `e` middle levels, which are `P`-free.
pub fn sigma_lower_bound(pattern: &Poset, n: usize) -> Option<u128> {
    let e = e_of(pattern, None).as_usize()?;
    Some(sigma(n, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::sets_contain;

    fn e(p: &Poset) -> (usize, Status) {
        let r = e_of(p, None);
        (r.as_usize().unwrap(), r.status)
    }

    #[test]
    fn e_of_small_posets() {
        assert_eq!(e(&Poset::butterfly()), (2, Status::Exact));
        for k in 2..=5 {
            assert_eq!(e(&Poset::chain(k).unwrap()), (k - 1, Status::Exact));
        }
        assert_eq!(e(&Poset::vee(2).unwrap()), (1, Status::Exact));
        assert_eq!(e(&Poset::diamond(2).unwrap()), (2, Status::Exact));
        assert_eq!(e(&Poset::point()), (0, Status::Exact));
    }

    #[test]
    fn witnesses_are_genuine() {
        let p = Poset::butterfly();
        let r = e_of(&p, None);
        let Some(ParamWitness::Levels { window, embedding }) = r.witness else {
            panic!()
        };
        assert_eq!(window.k, 3);
        let sets = embedding.sets().unwrap();
        for (u, &su) in sets.iter().enumerate() {
            let size = su.count_ones() as usize;
            assert!(size >= window.s && size <= window.top());
            for v in 0..p.size() {
                if p.lt(u, v) {
                    assert!(su & !sets[v] == 0 && su != sets[v]);
                }
            }
        }
        // The least n: the butterfly needs two bottoms and two tops.
        assert_eq!(window.n, 3);
    }

    #[test]
    fn memo_remaps_witnesses() {
        let a = Poset::from_relations(3, [(0, 2), (1, 2)]).unwrap();
        let b = Poset::from_relations(3, [(1, 0), (2, 0)]).unwrap();
        let ra = e_of(&a, Some(6));
        let rb = e_of(&b, Some(6));
        assert_eq!(ra.value, rb.value);
        let Some(ParamWitness::Levels { embedding, .. }) = rb.witness else {
            panic!()
        };
        let sets = embedding.sets().unwrap();
        assert!(sets[1] & !sets[0] == 0 && sets[1] != sets[0]);
        assert!(sets[2] & !sets[0] == 0 && sets[2] != sets[0]);
    }

    #[test]
    fn lower_bound_when_ceiling_too_small() {
        let r = e_of(&Poset::diamond(3).unwrap(), Some(2));
        assert_eq!(r.status, Status::LowerBoundOnly);
        assert_eq!(r.value, Rational::integer(3));
    }

    #[test]
    fn large_interval_examples() {
        assert!(large_intervals(&Poset::butterfly(), None).is_empty());
        let d3 = Poset::diamond(3).unwrap();
        let large = large_intervals(&d3, None);
        assert_eq!(large.len(), 1);
        assert_eq!((large[0].lo, large[0].hi), (d3.hat0().unwrap(), d3.hat1().unwrap()));
        assert_eq!(large_intervals(&Poset::fan(&[3, 3]).unwrap(), None).len(), 2);
    }

    #[test]
    fn la_and_lambda() {
        let b = Poset::butterfly();
        assert_eq!(la_n(&b, 2).unwrap().value, Rational::integer(4));
        assert_eq!(lambda_n(&b, 2).unwrap().value, Rational::integer(3));
        let (r, all) = la_n_all(&Poset::fan(&[3, 2]).unwrap(), 2).unwrap();
        assert_eq!(r.value, Rational::integer(3));
        assert!(all.contains(&Family::from_lists(2, &[vec![], vec![1], vec![1, 2]]).unwrap()));
        assert!(all.contains(&Family::levels(2, 1..=2).unwrap()));
        for f in &all {
            assert!(sets_contain(f.sets(), &Poset::fan(&[3, 2]).unwrap()).is_none());
        }
    }

    #[test]
    fn additivity_on_chains() {
        let c2 = Poset::chain(2).unwrap();
        let rep = additivity_check(&c2, &c2, 1, None).unwrap();
        assert!(rep.additive && rep.definitive);
        assert_eq!(rep.e_total.value, Rational::integer(2));
        assert!(matches!(additivity_check(&c2, &c2, 0, None), Err(Error::HypothesisUnmet(_))));
        assert!(matches!(
            additivity_check(&c2, &Poset::antichain(2).unwrap(), 1, None),
            Err(Error::HypothesisUnmet(_))
        ));
        // The butterfly has no large interval and no maximum.
        assert!(matches!(
            additivity_check(&Poset::butterfly(), &c2, 2, None),
            Err(Error::HypothesisUnmet(_))
        ));
    }

    #[test]
    fn pi_ratios_for_sperner() {
        let rows = pi_evidence(&Poset::chain(2).unwrap(), &[2, 3, 4]).unwrap();
        assert!(rows.iter().all(|r| r.ratio == Rational::one()));
    }
}
