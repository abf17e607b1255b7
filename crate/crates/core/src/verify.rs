//! Built-in verification suites: expected-vs-computed tables for the
//! reference values the toolkit must reproduce.

use std::fmt::Display;

use serde::Serialize;

use crate::embedding::sets_contain;
use crate::error::{Error, Result};
use crate::lattice::{
    binomial, lubell, lubell_chain_average, middle_levels, min_max_partition, min_partition, Family, MiddleVariant, PartitionMode,
};
use crate::params::{additivity_check, e_of, la_n, la_n_all, lambda_n};
use crate::poset::Poset;
use crate::rational::Rational;
use crate::search::{check_bounded, maximize, BoundVerdict, Objective, SearchProblem};
use crate::PosetExpr;

pub const SUITES: [&str; 5] = ["paper-core", "oracles", "constructions", "properties", "all"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.pass).count()
    }
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn eq(&mut self, name: impl Into<String>, expected: impl Display, computed: impl Display) {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        self.0.push(Check {
            name: name.into(),
            pass: expected == computed,
            expected,
            computed,
        });
    }

    fn holds(&mut self, name: impl Into<String>, ok: bool, detail: impl Display) {
        self.0.push(Check {
            name: name.into(),
            expected: "true".into(),
            computed: if ok { "true".into() } else { format!("false ({detail})") },
            pass: ok,
        });
    }
}

fn poset(text: &str) -> Result<Poset> {
    text.parse::<PosetExpr>()?.elaborate()
}

fn exact(r: &crate::params::ParamResult) -> String {
    if r.is_exact() {
        r.value.to_string()
    } else {
        format!(">= {} (lower bound)", r.value)
    }
}

fn verdict(v: &Result<BoundVerdict>) -> String {
    match v {
        Ok(BoundVerdict::Holds { .. }) => "holds".into(),
        Ok(BoundVerdict::Violated { value, .. }) => format!("violated at {value}"),
        Err(e) => format!("error: {e}"),
    }
}

/// Runs one suite by name (see [`SUITES`]).
pub fn run_suite(name: &str) -> Result<SuiteReport> {
    let mut c = Checks::default();
    match name {
        "paper-core" => paper_core(&mut c)?,
        "oracles" => oracles(&mut c)?,
        "constructions" => constructions(&mut c)?,
        "properties" => properties(&mut c)?,
        "all" => {
            paper_core(&mut c)?;
            oracles(&mut c)?;
            constructions(&mut c)?;
            properties(&mut c)?;
        }
        other => {
            return Err(Error::InvalidArgument {
                builder: "verify",
                reason: format!("unknown suite `{other}`; expected one of {}", SUITES.join(", ")),
            })
        }
    }
    Ok(SuiteReport {
        suite: name.to_string(),
        checks: c.0,
    })
}

fn paper_core(c: &mut Checks) -> Result<()> {
    let mut e_cases: Vec<(String, usize)> = vec![("butterfly".into(), 2)];
    e_cases.extend((2..=5).map(|k| (format!("chain({k})"), k - 1)));
    e_cases.extend((1..=3).map(|r| (format!("v({r})"), 1)));
    e_cases.extend([
        ("fan(3,2)".into(), 2),
        ("fan(4,3,3)".into(), 3),
        ("diamond(2)".into(), 2),
        ("diamond(3)".into(), 3),
        ("osum(point, butterfly, point)".into(), 4),
        ("osum_i(diamond(3), diamond(3))".into(), 6),
        ("wedge(chain(3), chain(2))".into(), 2),
    ]);
    for (text, want) in &e_cases {
        c.eq(format!("e({text})"), want, exact(&e_of(&poset(text)?, None)));
    }

    let b = Poset::butterfly();
    for n in 2..=4 {
        c.eq(format!("lambda_{n}(butterfly)"), 3, exact(&lambda_n(&b, n)?));
    }
    c.eq("La(2, butterfly)", 4, exact(&la_n(&b, 2)?));
    c.eq("La(4, butterfly)", 10, exact(&la_n(&b, 4)?));
    let b42 = middle_levels(4, 2, MiddleVariant::Low)?;
    c.holds(
        "B(4,2) is butterfly-free",
        sets_contain(b42.sets(), &b).is_none(),
        "copy found",
    );
    let free_ten = Family::from_lists(4, &[vec![1], vec![2], vec![1, 3, 4], vec![2, 3, 4]])?.union(&Family::level(4, 2)?)?;
    c.holds(
        "{1},{2},{1,3,4},{2,3,4} + C([4],2) is butterfly-free",
        sets_contain(free_ten.sets(), &b).is_none(),
        "copy found",
    );

    let two = Rational::integer(2);
    for n in 3..=4 {
        c.eq(
            format!("butterfly, n={n}, m=1, bound 2"),
            "holds",
            verdict(&check_bounded(&b, n, 1, &two)),
        );
        c.eq(
            format!("butterfly, n={n}, m=0, bound 2"),
            "violated at 3",
            verdict(&check_bounded(&b, n, 0, &two)),
        );
    }
    let j = poset("fan(3,2)")?;
    let (la, all) = la_n_all(&j, 2)?;
    c.eq("La(2, fan(3,2))", 3, exact(&la));
    let chain = Family::from_lists(2, &[vec![], vec![1], vec![1, 2]])?;
    c.holds(
        "{}, {1}, {1,2} maximizes for fan(3,2) at n=2",
        all.contains(&chain),
        "not among maximizers",
    );

    let harp = poset("harp(4,3)")?;
    for n in 3..=4 {
        c.eq(
            format!("harp(4,3), n={n}, m=0, bound 3"),
            "holds",
            verdict(&check_bounded(&harp, n, 0, &Rational::integer(3))),
        );
    }
    let (la, all) = la_n_all(&harp, 4)?;
    c.eq("La(4, harp(4,3))", 14, exact(&la));
    let b43 = middle_levels(4, 3, MiddleVariant::Low)?;
    c.holds(
        "B(4,3) is the unique maximizer for harp(4,3) at n=4",
        all == vec![b43.clone()],
        format!("{} maximizers", all.len()),
    );

    let f322 = poset("fan(3,2,2)")?;
    let fam = Family::level(4, 2)?.union(&Family::level(4, 3)?)?.with(0b1111)?;
    c.holds(
        "C([4],2) + C([4],3) + {[4]} is fan(3,2,2)-free",
        sets_contain(fam.sets(), &f322).is_none(),
        "copy found",
    );
    c.eq("Lubell value of that family", 3, lubell(&fam));
    c.eq(
        "fan(3,2,2), n=4, m=1, bound 2",
        "holds",
        verdict(&check_bounded(&f322, 4, 1, &two)),
    );

    // [4], [4] minus an odd element, [4] minus a pair that is not both odd.
    let v32 = Family::from_lists(
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
    )?;
    c.eq("Lubell value of the V(3,2) family", "7/3", lubell(&v32));
    c.holds(
        "the V(3,2) family is fan(3,2)-free",
        sets_contain(v32.sets(), &j).is_none(),
        "copy found",
    );
    Ok(())
}

/// Deterministic spread of families of `B_n`: masks stepped by a large odd
/// stride, so every subset of the ground-set lattice shows up.
fn sample_families(n: usize, count: u64) -> Vec<Family> {
    let width = 1u32 << n;
    let modulus = if width >= 64 { u64::MAX } else { (1u64 << width) - 1 };
    (0..count)
        .map(|i| {
            let mask = i.wrapping_mul(0x9E37_79B9_7F4A_7C15) & modulus;
            Family::new(n, (0..width as u64).filter(|s| mask >> s & 1 == 1)).expect("sets are in range")
        })
        .collect()
}

fn oracles(c: &mut Checks) -> Result<()> {
    let mut chain_avg = 0;
    let mut partitions = 0;
    let mut formula = 0;
    let mut total = 0;
    let families: Vec<Family> = (0u64..256)
        .map(|m| Family::new(3, (0..8).filter(|s| m >> s & 1 == 1)))
        .chain(sample_families(4, 300).into_iter().map(Ok))
        .collect::<Result<_>>()?;
    for f in &families {
        total += 1;
        let h = lubell(f);
        if lubell_chain_average(f)? == h {
            chain_avg += 1;
        }
        let mut ok = true;
        let mut same = true;
        for part in [min_partition, min_max_partition] {
            let a = part(f, PartitionMode::Enumerate)?;
            let b = part(f, PartitionMode::Formula)?;
            ok &= a.total_weight() == Rational::one() && a.weighted_sum() == h;
            same &= a == b;
        }
        partitions += ok as usize;
        formula += same as usize;
    }
    c.eq(
        "chain average equals Lubell value (all of B3 + 300 families of B4)",
        total,
        chain_avg,
    );
    c.eq("partition weights sum to 1 and reproduce the Lubell value", total, partitions);
    c.eq("closed-form partitions equal enumerated ones", total, formula);
    Ok(())
}

fn constructions(c: &mut Checks) -> Result<()> {
    let c2 = Poset::chain(2)?;
    let rep = additivity_check(&c2, &c2, 1, None)?;
    c.holds(
        "e(chain(2) glued on chain(2)) = 1 + 1",
        rep.additive && rep.definitive,
        rep.e_total.value,
    );
    let d3 = Poset::diamond(3)?;
    let top = d3.hat1().expect("diamonds have a top");
    let rep = additivity_check(&d3, &d3, top, None)?;
    c.holds("e(D3 glued on D3) = 3 + 3", rep.additive && rep.definitive, rep.e_total.value);
    let h = poset("harp(4,3)")?;
    let rep = additivity_check(&h, &d3, h.hat1().expect("harps have a top"), None)?;
    c.holds(
        "e(harp(4,3) glued on D3) = 3 + 3",
        rep.additive && rep.definitive,
        rep.e_total.value,
    );
    c.holds(
        "additivity rejects a non-maximal join point",
        matches!(additivity_check(&c2, &c2, 0, None), Err(Error::HypothesisUnmet(_))),
        "accepted",
    );
    for (text, want) in [("wedge(chain(3), chain(2))", 2), ("wedge(chain(4), chain(3), chain(2))", 3)] {
        c.eq(format!("e({text})"), want, exact(&e_of(&poset(text)?, None)));
    }
    let e_b = e_of(&Poset::butterfly(), None).value;
    let e_pad = e_of(&poset("osum(point, butterfly, point)")?, None).value;
    c.holds(
        "e(1 + butterfly + 1) >= e(butterfly) + 2",
        e_pad >= e_b + Rational::integer(2),
        "too small",
    );
    Ok(())
}

fn properties(c: &mut Checks) -> Result<()> {
    let patterns = [
        "butterfly",
        "fan(3,2)",
        "v(2)",
        "diamond(2)",
        "harp(3,2)",
        "osum(antichain(2), chain(2))",
    ];
    for text in patterns {
        let p = poset(text)?;
        let d = p.dual();
        c.eq(
            format!("e(dual({text})) = e({text})"),
            e_of(&p, None).value,
            e_of(&d, None).value,
        );
        for n in 2..=3 {
            c.eq(
                format!("La({n}, dual({text})) = La({n}, {text})"),
                la_n(&p, n)?.value,
                la_n(&d, n)?.value,
            );
        }
    }
    let mut above_bound = 0;
    let families = sample_families(5, 500);
    for f in &families {
        let bound = Rational::new(f.len() as u64, binomial(5, 2));
        above_bound += (lubell(f) >= bound) as usize;
    }
    c.eq(
        "Lubell value >= |F| / C(n, n/2) on 500 families of B5",
        families.len(),
        above_bound,
    );
    let c2 = Poset::chain(2)?;
    for n in 2..=4 {
        let out = maximize(&SearchProblem::new(n, c2.clone(), Objective::Cardinality))?;
        c.eq(format!("Sperner: La({n}, chain(2))"), binomial(n, n / 2), out.best_value);
    }
    Ok(())
}
