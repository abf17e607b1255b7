//! Construction expressions: builders for the named posets combined with
//! dual, ordinal sum, wedge, and the large-interval sum `⊕_I`.

use crate::error::{Error, Result};
use crate::params::{self, IntervalRecord};
use crate::poset::Poset;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PosetExpr {
    Chain(usize),
    Antichain(usize),
    /// `V_r`: one element below `r` others.
    Vee(usize),
    Fan(Vec<usize>),
    Harp(Vec<usize>),
    Diamond(usize),
    Butterfly,
    Point,
    Boolean(usize),
    Dual(Box<PosetExpr>),
    Osum(Vec<PosetExpr>),
    Wedge(Vec<PosetExpr>),
    /// `P1 ⊕_I P2 ⊕_I ...`, optionally with explicit interval endpoints.
    OsumLarge(Vec<LargeOperand>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LargeOperand {
    pub expr: PosetExpr,
    /// Endpoints `(bottom, top)` of the interval to glue through, as element
    /// indices of the elaborated operand. `None` means "the large interval".
    pub interval: Option<(usize, usize)>,
}

impl LargeOperand {
    pub fn new(expr: PosetExpr) -> LargeOperand {
        LargeOperand { expr, interval: None }
    }
}

fn invalid(builder: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidArgument {
        builder,
        reason: reason.into(),
    }
}

impl PosetExpr {
    /// A harp whose string lengths are strictly decreasing and at least 3.
    pub fn harp_distinct(lengths: Vec<usize>) -> Result<PosetExpr> {
        if lengths.is_empty() || lengths.last().is_some_and(|&l| l < 3) || lengths.windows(2).any(|w| w[0] <= w[1]) {
            return Err(invalid("harp", "certified harps need l1 > ... > lk >= 3"));
        }
        Ok(PosetExpr::Harp(lengths))
    }

    /// Checks the arguments of this node (not its children).
    pub fn validate_node(&self) -> Result<()> {
        match self {
            PosetExpr::Chain(0) => Err(invalid("chain", "length must be at least 1")),
            PosetExpr::Antichain(0) => Err(invalid("antichain", "size must be at least 1")),
            PosetExpr::Vee(0) => Err(invalid("v", "needs at least one upper element")),
            PosetExpr::Diamond(0) => Err(invalid("diamond", "k must be at least 1")),
            PosetExpr::Boolean(n) if *n > 6 => Err(invalid("boolean", "n must be at most 6 (64 elements)")),
            PosetExpr::Fan(ls) => {
                if ls.is_empty() {
                    Err(invalid("fan", "needs at least one tine"))
                } else if ls.iter().any(|&l| l < 2) {
                    Err(invalid("fan", "tines must have length at least 2"))
                } else if ls.windows(2).any(|w| w[0] < w[1]) {
                    Err(invalid("fan", "tines must be non-increasing"))
                } else {
                    Ok(())
                }
            }
            PosetExpr::Harp(ls) => {
                if ls.is_empty() {
                    Err(invalid("harp", "needs at least one string"))
                } else if ls.iter().any(|&l| l < 2) {
                    Err(invalid("harp", "strings must have length at least 2"))
                } else {
                    Ok(())
                }
            }
            PosetExpr::Osum(v) | PosetExpr::Wedge(v) if v.is_empty() => Err(invalid("operator", "needs at least one operand")),
            PosetExpr::OsumLarge(v) if v.is_empty() => Err(invalid("osum_i", "needs at least one operand")),
            _ => Ok(()),
        }
    }

    /// Builds the poset this expression denotes.
    pub fn elaborate(&self) -> Result<Poset> {
        self.validate_node()?;
        match self {
            PosetExpr::Chain(k) => Poset::chain(*k),
            PosetExpr::Antichain(k) => Poset::antichain(*k),
            PosetExpr::Vee(r) => Poset::vee(*r),
            PosetExpr::Fan(ls) => Poset::fan(ls),
            PosetExpr::Harp(ls) => Poset::harp(ls),
            PosetExpr::Diamond(k) => Poset::diamond(*k),
            PosetExpr::Butterfly => Ok(Poset::butterfly()),
            PosetExpr::Point => Ok(Poset::point()),
            PosetExpr::Boolean(n) => Poset::boolean(*n),
            PosetExpr::Dual(e) => Ok(e.elaborate()?.dual()),
            PosetExpr::Osum(parts) => {
                let parts = parts.iter().map(PosetExpr::elaborate).collect::<Result<Vec<_>>>()?;
                Poset::ordinal_sum_all(&parts)
            }
            PosetExpr::Wedge(parts) => {
                let parts = parts.iter().map(PosetExpr::elaborate).collect::<Result<Vec<_>>>()?;
                Poset::wedge(&parts)
            }
            PosetExpr::OsumLarge(ops) => {
                let parts = ops.iter().map(|o| o.expr.elaborate()).collect::<Result<Vec<_>>>()?;
                let explicit: Vec<_> = ops.iter().map(|o| o.interval).collect();
                osum_large(&parts, &explicit)
            }
        }
    }
}

/// Glues `parts` through large intervals: the top of the interval chosen in
/// `parts[i]` is identified with the bottom of the one in `parts[i + 1]`.
///
/// Without explicit endpoints an operand must have a large interval, and all
/// of its large intervals must agree on the endpoints actually used (the top
/// for the first operand, the bottom for the last, both in between).
pub fn osum_large(parts: &[Poset], explicit: &[Option<(usize, usize)>]) -> Result<Poset> {
    let k = parts.len();
    let mut ends = Vec::with_capacity(k);
    for (i, p) in parts.iter().enumerate() {
        let chosen = match explicit.get(i).copied().flatten() {
            Some((a, b)) => {
                p.interval(a, b)?;
                (a, b)
            }
            None => {
                let large: Vec<IntervalRecord> = params::large_intervals(p, None);
                if large.is_empty() {
                    return Err(Error::NoLargeInterval(i));
                }
                let relevant = |r: &IntervalRecord| match (i == 0, i + 1 == k) {
                    (true, true) => (0, 0),
                    (true, false) => (0, r.hi),
                    (false, true) => (r.lo, 0),
                    (false, false) => (r.lo, r.hi),
                };
                let mut keys: Vec<_> = large.iter().map(relevant).collect();
                keys.sort_unstable();
                keys.dedup();
                if keys.len() > 1 {
                    return Err(Error::LargeIntervalAmbiguous {
                        operand: i,
                        count: large.len(),
                    });
                }
                (large[0].lo, large[0].hi)
            }
        };
        ends.push(chosen);
    }
    let joins: Vec<(usize, usize)> = ends.windows(2).map(|w| (w[0].1, w[1].0)).collect();
    Poset::glue(parts, &joins)
}
