//! One brute-force verifier per lemma. Instance spaces are split across
//! rayon workers and the per-instance outcomes merged in index order, so a
//! report depends only on the parameters and the seed.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::generate::{random_homogeneous, random_l3};
use super::{enumerate, nmk_describe, nmk_formula_bits, MAX_BITS};
use crate::error::{Error, Result};
use crate::estimation::{check_estimation, inflate, inflate_by_clauses, inflate_psn_bound, DecreasingMap, EstimationVerdict, GreatestBelow};
use crate::fundamental::{fs, reaches, Reach};
use crate::hardy::{
    at_most_large, extend_to_exactly_large, hardy_accelerated, hardy_value, ks_trace, largeness, split_point, Carrier, FinSet,
    Largeness, Outcome, DEFAULT_BUDGET,
};
use crate::ordinal::{tow_nat, tower_index, Ordinal};
use crate::ramsey::{
    check_homogeneity, color_zero_size_bound, estimating_function, ks_descent_floor, last_difference, lk_conclusion, split_color,
    subsets, Coloring, Homogeneity, KsColoring, LkConclusion, TupleColoring,
};
use crate::syntax::parse_ordinal;

pub const DEFAULT_SEED: u64 = 20_080_229;

pub const LEMMA_IDS: [&str; 14] = [
    "fund-below",
    "fund-reach",
    "count-nmk",
    "hardy-mono",
    "hardy-tower",
    "natsum-split",
    "go-max",
    "psn-F",
    "psn-F-go",
    "estimation",
    "l3-cases",
    "lk-hom",
    "ks-psn",
    "rk-mech",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum Verdict {
    Pass,
    Fail { counterexample: String },
    Skipped { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub lemma_id: String,
    pub params: BTreeMap<String, String>,
    pub seed: u64,
    pub instances: u64,
    #[serde(flatten)]
    pub verdict: Verdict,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Runs the verifier for `lemma_id`. Parameters are `key=value` strings;
/// missing ones take defaults, and the effective set is echoed in the
/// report.
pub fn verify(lemma_id: &str, params: &BTreeMap<String, String>, seed: Option<u64>) -> Result<VerifyReport> {
    let mut p = Params { given: params.clone(), used: BTreeMap::new() };
    let seed = seed.unwrap_or(DEFAULT_SEED);
    let tally = match lemma_id {
        "fund-below" => fund_below(&mut p)?,
        "fund-reach" => fund_reach(&mut p)?,
        "count-nmk" => count_nmk(&mut p)?,
        "hardy-mono" => hardy_mono(&mut p)?,
        "hardy-tower" => hardy_tower(&mut p)?,
        "natsum-split" => natsum_split(&mut p)?,
        "go-max" => go_max(&mut p)?,
        "psn-F" => psn_f(&mut p)?,
        "psn-F-go" => psn_f_go(&mut p)?,
        "estimation" => estimation(&mut p, seed)?,
        "l3-cases" => l3_cases(&mut p, seed)?,
        "lk-hom" => lk_hom(&mut p, seed)?,
        "ks-psn" => ks_psn(&mut p)?,
        "rk-mech" => rk_mech(&mut p)?,
        other => return Err(Error::UnknownLemma(other.to_string())),
    };
    p.finish()?;
    Ok(VerifyReport {
        lemma_id: lemma_id.to_string(),
        params: p.used,
        seed,
        instances: tally.instances,
        verdict: tally.verdict(),
    })
}

struct Params {
    given: BTreeMap<String, String>,
    used: BTreeMap<String, String>,
}

impl Params {
    fn raw(&mut self, key: &str, default: &str) -> String {
        let v = self.given.remove(key).unwrap_or_else(|| default.to_string());
        self.used.insert(key.to_string(), v.clone());
        v
    }

    fn num(&mut self, key: &str, default: u64) -> Result<u64> {
        let v = self.raw(key, &default.to_string());
        v.trim().parse().map_err(|_| Error::BadParam(format!("{key}={v}")))
    }

    fn optional(&mut self, key: &str) -> Option<String> {
        let v = self.given.remove(key)?;
        self.used.insert(key.to_string(), v.clone());
        Some(v)
    }

    fn int(&mut self, key: &str, default: i32) -> Result<i32> {
        let v = self.raw(key, &default.to_string());
        v.trim().parse().map_err(|_| Error::BadParam(format!("{key}={v}")))
    }

    fn ordinal(&mut self, key: &str, default: &str) -> Result<Ordinal> {
        parse_ordinal(&self.raw(key, default))
    }

    /// A comma-separated list of ordinals (empty allowed).
    fn ordinals(&mut self, key: &str, default: &str) -> Result<Vec<Ordinal>> {
        let v = self.raw(key, default);
        v.split(',').map(str::trim).filter(|s| !s.is_empty()).map(parse_ordinal).collect()
    }

    /// `lo..hi` (inclusive) or a comma-separated list of naturals.
    fn nums(&mut self, key: &str, default: &str) -> Result<Vec<u64>> {
        let v = self.raw(key, default);
        let bad = || Error::BadParam(format!("{key}={v}"));
        if let Some((lo, hi)) = v.split_once("..") {
            let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
            let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
            return Ok((lo..=hi).collect());
        }
        v.split(',').map(|s| s.trim().parse().map_err(|_| bad())).collect()
    }

    fn finish(&self) -> Result<()> {
        match self.given.keys().next() {
            Some(k) => Err(Error::BadParam(format!("unknown parameter `{k}`"))),
            None => Ok(()),
        }
    }
}

enum Check {
    Ok,
    Fail(String),
    Undecided(String),
}

/// Per-instance outcomes merged associatively; the reported failure is the
/// one with the smallest instance index.
#[derive(Default)]
struct Tally {
    instances: u64,
    fail: Option<(usize, String)>,
    undecided: u64,
    first_undecided: Option<(usize, String)>,
    skipped: Option<String>,
}

fn first(a: Option<(usize, String)>, b: Option<(usize, String)>) -> Option<(usize, String)> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if x.0 <= y.0 { x } else { y }),
        (x, y) => x.or(y),
    }
}

impl Tally {
    fn skipped(reason: String) -> Self {
        Tally { skipped: Some(reason), ..Tally::default() }
    }

    fn one(index: usize, count: u64, check: Check) -> Self {
        let mut t = Tally { instances: count, ..Tally::default() };
        match check {
            Check::Ok => {}
            Check::Fail(msg) => t.fail = Some((index, msg)),
            Check::Undecided(msg) => {
                t.undecided = 1;
                t.first_undecided = Some((index, msg));
            }
        }
        t
    }

    fn merge(self, other: Tally) -> Tally {
        Tally {
            instances: self.instances + other.instances,
            fail: first(self.fail, other.fail),
            undecided: self.undecided + other.undecided,
            first_undecided: first(self.first_undecided, other.first_undecided),
            skipped: self.skipped.or(other.skipped),
        }
    }

    fn verdict(&self) -> Verdict {
        if let Some((_, msg)) = &self.fail {
            return Verdict::Fail { counterexample: msg.clone() };
        }
        if let Some(reason) = &self.skipped {
            return Verdict::Skipped { reason: reason.clone() };
        }
        if let Some((_, msg)) = &self.first_undecided {
            return Verdict::Skipped { reason: format!("{} instance(s) undecided, first: {msg}", self.undecided) };
        }
        Verdict::Pass
    }
}

/// Runs `f` on every item in parallel. `f` returns how many lemma
/// instances the item covered and the outcome. Budget errors count as
/// undecided, any other error as a failure.
fn run_all<T: Sync>(items: &[T], f: impl Fn(usize, &T) -> Result<(u64, Check)> + Sync) -> Tally {
    items
        .par_iter()
        .enumerate()
        .map(|(i, item)| match f(i, item) {
            Ok((n, c)) => Tally::one(i, n, c),
            Err(Error::Budget(b)) => Tally::one(i, 1, Check::Undecided(format!("step budget {b} exhausted"))),
            Err(e) => Tally::one(i, 1, Check::Fail(format!("error: {e}"))),
        })
        .reduce(Tally::default, Tally::merge)
}

fn all_ok(checks: impl IntoIterator<Item = Check>) -> Check {
    let mut undecided = None;
    for c in checks {
        match c {
            Check::Fail(m) => return Check::Fail(m),
            Check::Undecided(m) => undecided = undecided.or(Some(m)),
            Check::Ok => {}
        }
    }
    undecided.map_or(Check::Ok, Check::Undecided)
}

fn fail_if(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Check::Fail(msg())
    } else {
        Check::Ok
    }
}

fn universe(p: &mut Params, bound: &str, psn: u64) -> Result<Vec<Ordinal>> {
    let bound = p.ordinal("bound", bound)?;
    let psn_cap = p.num("psn_cap", psn)?;
    enumerate(&bound, psn_cap)
}

/// Universe plus extra ordinals, deduplicated.
fn universe_with_extra(p: &mut Params, extra: &str) -> Result<Vec<Ordinal>> {
    let mut u = universe(p, "e0", 2)?;
    u.extend(p.ordinals("extra", extra)?);
    u.sort();
    u.dedup();
    Ok(u)
}

fn fund_below(p: &mut Params) -> Result<Tally> {
    let u = universe(p, "w^3+1", 3)?;
    let ns = p.nums("n", "2..4")?;
    let items: Vec<(&Ordinal, u64)> =
        u.iter().filter(|b| b.is_limit()).flat_map(|b| ns.iter().map(move |&n| (b, n))).collect();
    Ok(run_all(&items, |_, &(beta, n)| {
        let step = fs(beta, n)?;
        let below: Vec<&Ordinal> = u.iter().filter(|a| *a < beta && a.psn() < n).collect();
        let bad = below.iter().find(|a| ***a >= step);
        Ok((below.len() as u64, fail_if(bad.is_some(), || format!("alpha={} beta={beta} n={n}: {beta}[{n}] = {step}", bad.unwrap()))))
    }))
}

fn fund_reach(p: &mut Params) -> Result<Tally> {
    let u = universe(p, "w^3+1", 3)?;
    let ns = p.nums("n", "2..3")?;
    let budget = p.num("budget", 1_000_000)?;
    let items: Vec<(&Ordinal, u64)> =
        u.iter().filter(|b| !b.is_zero()).flat_map(|b| ns.iter().map(move |&n| (b, n))).collect();
    Ok(run_all(&items, |_, &(beta, n)| {
        let chain = match reaches(beta, &Ordinal::ZERO, n, budget)? {
            Reach::Yes(c) => c,
            Reach::No => return Ok((1, Check::Fail(format!("{beta} does not step down to 0 at {n}")))),
            Reach::BudgetExceeded(_) => return Err(Error::Budget(budget)),
        };
        let below: Vec<&Ordinal> = u.iter().filter(|a| *a < beta && a.psn() < n).collect();
        let missed = below.iter().find(|a| !chain.steps.contains(a));
        Ok((below.len() as u64, fail_if(missed.is_some(), || format!("{beta} =>_{n} {} fails", missed.unwrap()))))
    }))
}

fn count_nmk(p: &mut Params) -> Result<Tally> {
    let a = p.num("a", 2)?;
    let k = p.num("k", 1)? as u32;
    let m = p.int("m", 0)?;
    let cap = p.num("cap", super::DEFAULT_CAP as u64)?;
    // A claimed count to test instead of the closed form.
    let claimed = match p.optional("expect") {
        Some(v) => Some(v.trim().parse::<BigUint>().map_err(|_| Error::BadParam(format!("expect={v}")))?),
        None => None,
    };
    let predicted = nmk_formula_bits(a, k, m, MAX_BITS)?;
    match &predicted {
        Some(n) if *n <= BigUint::from(cap) => {}
        _ => {
            return Ok(Tally::skipped(format!("predicted {} exceeds cap {cap}", nmk_describe(a, k, m)?)));
        }
    }
    let predicted = claimed.unwrap_or(predicted.expect("checked above"));
    let bound = Ordinal::tower(k, m)?;
    let got = super::enum_psn_bounded(&super::Universe::new(bound.clone(), a).with_cap(cap as usize))?;
    let n = BigUint::from(got.len());
    Ok(Tally::one(
        0,
        got.len() as u64,
        fail_if(n != predicted, || format!("enumerated {n} ordinals below {bound} with psn <= {a}, expected {predicted}")),
    ))
}

fn hardy_mono(p: &mut Params) -> Result<Tally> {
    let u = universe(p, "w^2+1", 3)?;
    let xs = p.nums("x", "1..4")?;
    let budget = p.num("budget", DEFAULT_BUDGET)?;
    let items: Vec<(&Ordinal, u64)> = u.iter().flat_map(|a| xs.iter().map(move |&x| (a, x))).collect();
    let h = |a: &Ordinal, x: u64| -> Result<u64> {
        match hardy_value(a, x, Carrier::Successor, budget)? {
            Outcome::Value(v) => Ok(v),
            _ => Err(Error::Budget(budget)),
        }
    };
    Ok(run_all(&items, |_, &(alpha, x)| {
        let (here, there) = (h(alpha, x)?, h(alpha, x + 1)?);
        if here >= there {
            return Ok((1, Check::Fail(format!("h_{alpha}({x}) = {here} >= h_{alpha}({}) = {there}", x + 1))));
        }
        // Stepping down at index x can only lower h(x).
        let chain = match reaches(alpha, &Ordinal::ZERO, x, budget)? {
            Reach::Yes(c) => c,
            _ => return Err(Error::Budget(budget)),
        };
        for beta in &chain.steps {
            let v = h(beta, x)?;
            if v > here {
                return Ok((1, Check::Fail(format!("{alpha} =>_{x} {beta} but h_{beta}({x}) = {v} > {here}"))));
            }
        }
        Ok((1 + chain.steps.len() as u64, Check::Ok))
    }))
}

/// `tow_a` iterated `m` times on `x + 1`.
fn iterated_tower(a: u64, m: u64, x: u64) -> Result<Option<BigUint>> {
    let mut v = BigUint::from(x + 1);
    for _ in 0..m {
        match tow_nat(a as u32, &v, MAX_BITS)? {
            Some(t) => v = t,
            None => return Ok(None),
        }
    }
    Ok(Some(v))
}

fn hardy_tower(p: &mut Params) -> Result<Tally> {
    let a = p.num("a", 1)?;
    let m = p.num("m", 1)?;
    let xs = p.nums("x", "1..6")?;
    let budget = p.num("budget", 100_000)?;
    let alpha = Ordinal::omega_pow(&Ordinal::nat(2)).mul(&Ordinal::nat(2 * a * m));
    Ok(run_all(&xs, |_, &x| {
        let rhs = iterated_tower(a, m, x)?;
        // Full stepping first; a budget overrun still certifies h >= x + steps.
        let lhs_floor = match hardy_value(&alpha, x, Carrier::Successor, budget)? {
            Outcome::Value(v) => BigUint::from(v),
            Outcome::BudgetExceeded(s) => match hardy_accelerated(&alpha, x, MAX_BITS)? {
                Some(v) => v,
                None => BigUint::from(x + s),
            },
            Outcome::Undefined => unreachable!("the plain successor is total"),
        };
        Ok((
            1,
            match rhs {
                Some(r) if lhs_floor >= r => Check::Ok,
                Some(r) => Check::Fail(format!("h_{alpha}({x}) = {lhs_floor} < {r}")),
                None => Check::Undecided(format!("tower bound for x={x} exceeds {MAX_BITS} bits")),
            },
        ))
    }))
}

fn natsum_split(p: &mut Params) -> Result<Tally> {
    let ords = p.ordinals("ordinals", "1,2,3,w,w+1,w*2")?;
    let mins = p.nums("min", "2,3,4")?;
    let budget = p.num("budget", DEFAULT_BUDGET)?;
    let mut items = Vec::new();
    for a in &ords {
        for b in &ords {
            for &x in &mins {
                items.push((a, b, x));
            }
        }
    }
    Ok(run_all(&items, |_, &(alpha, beta, x)| {
        let sum = beta.natural_sum(alpha);
        let start = FinSet::new(vec![x])?;
        let set = start.union(&extend_to_exactly_large(&start, &sum, budget)?);
        if largeness(&set, &sum)? != Largeness::ExactlyLarge {
            return Ok((1, Check::Fail(format!("{set} is not exactly ({sum})-large"))));
        }
        let u = split_point(&set, alpha, beta)?;
        let low = set.between(0, u).expect("u is in the set");
        let high = set.between(u, u64::MAX).expect("u is in the set");
        let (l, h) = (largeness(&low, alpha)?, largeness(&high, beta)?);
        Ok((
            1,
            fail_if(!l.is_large() || !h.is_large(), || {
                format!("A={set}, alpha={alpha}, beta={beta}: u={u} gives {low} {l:?} and {high} {h:?}")
            }),
        ))
    }))
}

fn go_max(p: &mut Params) -> Result<Tally> {
    let u = universe_with_extra(p, "e0,e0^2,e0*2,w^3")?;
    let as_ = p.nums("a", "1,2")?;
    let items: Vec<(&Ordinal, u64)> =
        u.iter().filter(|x| !x.is_zero()).flat_map(|x| as_.iter().map(move |&a| (x, a))).collect();
    Ok(run_all(&items, |_, &(alpha, a)| {
        let go = GreatestBelow::new().get(a, alpha)?;
        let below = enumerate(alpha, a)?;
        let want = below.last().expect("0 is always below");
        Ok((below.len() as u64, fail_if(go != *want, || format!("GO({a}, {alpha}) = {go}, greatest is {want}"))))
    }))
}

fn psn_f(p: &mut Params) -> Result<Tally> {
    let u = universe_with_extra(p, "e0,e0*2+w,e0^2*2,e0^e0")?;
    Ok(run_all(&u, |_, alpha| {
        let f = inflate(alpha);
        let g = inflate_by_clauses(alpha);
        if f != g {
            return Ok((1, Check::Fail(format!("F({alpha}): formula {f}, clauses {g}"))));
        }
        if alpha.is_zero() {
            return Ok((1, fail_if(!f.is_zero(), || format!("F(0) = {f}"))));
        }
        let bound = inflate_psn_bound(alpha.psn(), alpha.base_level(), MAX_BITS)?;
        Ok((1, psn_within(&f, bound, || format!("psn(F({alpha})) = psn({f})"))))
    }))
}

fn psn_within(x: &Ordinal, bound: Option<BigUint>, what: impl FnOnce() -> String) -> Check {
    match bound {
        None => Check::Ok,
        Some(b) => fail_if(BigUint::from(x.psn()) > b, || format!("{} = {} exceeds {b}", what(), x.psn())),
    }
}

fn psn_f_go(p: &mut Params) -> Result<Tally> {
    let u = universe_with_extra(p, "e0,e0^2,e0*2,e0*2+w,e0^2*2,e0^e0")?;
    let as_ = p.nums("a", "1,2")?;
    let items: Vec<(&Ordinal, u64)> =
        u.iter().filter(|x| !x.is_zero()).flat_map(|x| as_.iter().map(move |&a| (x, a))).collect();
    Ok(run_all(&items, |_, &(alpha, a)| {
        let go = GreatestBelow::new().get(a, alpha)?;
        let f = inflate(&go);
        let bound = inflate_psn_bound(a, alpha.base_level(), MAX_BITS)?;
        Ok((1, psn_within(&f, bound, || format!("alpha={alpha}, a={a}: psn(F(GO)) = psn({f})"))))
    }))
}

/// Every strictly decreasing labelling of `set` (ascending) by values from
/// `pool` (descending) with `psn(G(x)) <= x`.
fn labellings(set: &[u64], pool: &[Ordinal]) -> Vec<Vec<Ordinal>> {
    fn go(set: &[u64], pool: &[Ordinal], from: usize, acc: &mut Vec<Ordinal>, out: &mut Vec<Vec<Ordinal>>) {
        let Some((&x, rest)) = set.split_first() else {
            out.push(acc.clone());
            return;
        };
        for i in from..pool.len() {
            if pool[i].psn() <= x {
                acc.push(pool[i].clone());
                go(rest, pool, i + 1, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(set, pool, 0, &mut Vec::new(), &mut out);
    out
}

fn estimation_check(set: &FinSet, values: Vec<Ordinal>, alpha: &Ordinal) -> Result<Check> {
    let g = DecreasingMap::new(set.clone(), values)?;
    Ok(match check_estimation(set, &g, &Ordinal::ZERO, alpha)? {
        EstimationVerdict::Pass { .. } => Check::Ok,
        EstimationVerdict::Fail { checked, bound, largeness } => Check::Fail(format!(
            "A={set}, G={:?}, alpha={alpha}: {checked} is {largeness:?} for {bound}+1",
            g.values.iter().map(|v| v.to_string()).collect::<Vec<_>>()
        )),
        EstimationVerdict::HypothesisViolation { reason } => Check::Fail(format!("generated labelling invalid: {reason}")),
    })
}

fn estimation(p: &mut Params, seed: u64) -> Result<Tally> {
    let range = p.nums("range", "2..9")?;
    let max_size = p.num("max_size", 3)? as usize;
    let alphas = p.ordinals("alphas", "w,w*2")?;
    let samples = p.num("samples", 10_000)?;
    let sizes = p.nums("sizes", "4,5")?;
    let random_range = p.nums("random_range", "2..12")?;
    let random_alphas = p.ordinals("random_alphas", "w^2,w^2*2")?;

    let top = range.iter().copied().max().unwrap_or(0);
    let mut sets = Vec::new();
    for size in 1..=max_size.min(range.len()) {
        for idx in subsets(range.len(), size) {
            sets.push(idx.iter().map(|&i| range[i]).collect::<Vec<u64>>());
        }
    }
    let mut exhaustive = Tally::default();
    for alpha in &alphas {
        let mut pool = enumerate(&alpha.succ(), top)?;
        pool.reverse();
        exhaustive = exhaustive.merge(run_all(&sets, |_, elems| {
            let set = FinSet::ascending(elems.clone())?;
            let all = labellings(elems, &pool);
            let mut checks = Vec::with_capacity(all.len());
            for values in all.iter().cloned() {
                checks.push(estimation_check(&set, values, alpha)?);
            }
            Ok((all.len() as u64, all_ok(checks)))
        }));
    }

    let rtop = random_range.iter().copied().max().unwrap_or(0);
    let pools = random_alphas
        .iter()
        .map(|a| {
            let mut pool = enumerate(&a.succ(), rtop)?;
            pool.reverse();
            Ok(pool)
        })
        .collect::<Result<Vec<_>>>()?;
    let idx: Vec<u64> = (0..samples).collect();
    let random = run_all(&idx, |_, &i| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(i);
        let which = rng.gen_range(0..random_alphas.len());
        let (alpha, pool) = (&random_alphas[which], &pools[which]);
        let size = *sizes.choose(&mut rng).expect("sizes nonempty") as usize;
        let mut elems: Vec<u64> = random_range.choose_multiple(&mut rng, size).copied().collect();
        elems.sort_unstable();
        let set = FinSet::ascending(elems.clone())?;
        for _ in 0..100 {
            if let Some(values) = random_labelling(&elems, pool, &mut rng) {
                return Ok((1, estimation_check(&set, values, alpha)?));
            }
        }
        Ok((1, Check::Undecided(format!("no labelling found for {set}"))))
    });
    Ok(exhaustive.merge(random))
}

/// A random strictly decreasing labelling, biased towards large values so
/// that the checked sets are as large as the lemma allows.
fn random_labelling<R: Rng>(set: &[u64], pool: &[Ordinal], rng: &mut R) -> Option<Vec<Ordinal>> {
    let mut out = Vec::with_capacity(set.len());
    let mut from = 0;
    for &x in set {
        let admissible: Vec<usize> = (from..pool.len()).filter(|&i| pool[i].psn() <= x).collect();
        let &i = if rng.gen_bool(0.5) { admissible.first()? } else { admissible.choose(rng)? };
        out.push(pool[i].clone());
        from = i + 1;
    }
    Some(out)
}

fn lengths(p: &mut Params, default: &str) -> Result<Vec<usize>> {
    Ok(p.nums("len", default)?.into_iter().map(|x| x as usize).collect())
}

fn l3_cases(p: &mut Params, seed: u64) -> Result<Tally> {
    let samples = p.num("samples", 1000)?;
    let m = p.int("m", 0)?;
    let lens = lengths(p, "3..7")?;
    let idx: Vec<u64> = (0..samples).collect();
    Ok(run_all(&idx, |_, &i| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(i);
        let color = i % 3;
        let r = *lens.choose(&mut rng).expect("lengths nonempty");
        let Some(gamma) = random_l3(m, color, r, &mut rng) else {
            return Ok((1, Check::Undecided(format!("pool too small for {r} elements"))));
        };
        let shown = || gamma.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ");
        match check_homogeneity(&TupleColoring { m, k: 3 }, &gamma)? {
            Homogeneity::Homogeneous(c) if c == color => {}
            _ => return Ok((1, Check::Fail(format!("generated set [{}] is not {color}-homogeneous", shown())))),
        }
        let check = match color {
            0 => {
                let s = tower_index(&gamma[0], m)?;
                let a = gamma[0].psn();
                match (a + 1 >= u64::from(s)).then(|| color_zero_size_bound(s, a, m, MAX_BITS)).transpose()?.flatten() {
                    Some(b) => fail_if(BigUint::from(gamma.len()) > b, || format!("[{}] exceeds the size bound {b}", shown())),
                    None => Check::Ok,
                }
            }
            c => {
                let theta = estimating_function(m, &gamma, c)?;
                let domain_ok = if c == 1 { theta.domain == gamma } else { theta.domain[..] == gamma[..gamma.len() - 1] };
                let limit = if c == 1 { Ordinal::eps(m) } else { Ordinal::tower(tower_index(&gamma[0], m)? - 1, m)? };
                match theta.violation() {
                    Some(v) => Check::Fail(format!("[{}]: {v}", shown())),
                    None => fail_if(!domain_ok || theta.bound != limit, || format!("[{}]: wrong domain or bound", shown())),
                }
            }
        };
        Ok((1, check))
    }))
}

fn lds(m: i32, s: &[Ordinal]) -> Result<Vec<Ordinal>> {
    s.windows(2).map(|w| last_difference(m, &w[0], &w[1])).collect()
}

/// The recursive structure of a `k`-homogeneous set: the head part is a
/// triple color on all but the last `k - 3` elements, and the rest is the
/// color of the (suitably ordered) last-difference sequence.
fn coherence(m: i32, k: usize, gamma: &[Ordinal], color: u64) -> Result<Check> {
    let (head, rest) = split_color(k, color);
    let inner = &gamma[..gamma.len() - (k - 3)];
    if check_homogeneity(&TupleColoring { m, k: 3 }, inner)? != Homogeneity::Homogeneous(head) {
        return Ok(Check::Fail(format!("first {} elements are not {head}-homogeneous for triples", inner.len())));
    }
    if head == 1 {
        return Ok(fail_if(rest != 0, || format!("equal last differences but recursive color {rest}")));
    }
    let mut deltas = lds(m, inner)?;
    if head == 0 {
        deltas.reverse();
    }
    if deltas.windows(2).any(|w| w[0] <= w[1]) {
        return Ok(Check::Fail("last differences are not monotone".into()));
    }
    if deltas.len() < k - 1 {
        return Ok(Check::Ok);
    }
    let got = check_homogeneity(&TupleColoring { m, k: k - 1 }, &deltas)?;
    Ok(fail_if(got != Homogeneity::Homogeneous(rest), || format!("last differences give {got:?}, expected color {rest}")))
}

fn lk_hom(p: &mut Params, seed: u64) -> Result<Tally> {
    let ks = p.nums("k", "4,5")?;
    let samples = p.num("samples", 300)?;
    let m = p.int("m", 0)?;
    let extra = p.num("extra_len", 3)? as usize;
    let items: Vec<(usize, u64)> = ks.iter().flat_map(|&k| (0..samples).map(move |i| (k as usize, i))).collect();
    Ok(run_all(&items, |_, &(k, i)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (k as u64) << 32);
        rng.set_stream(i);
        let r = k + rng.gen_range(0..=extra);
        let Some(gamma) = random_homogeneous(m, k, r, &mut rng) else {
            return Ok((1, Check::Undecided(format!("pool too small for {r} elements"))));
        };
        let shown = || gamma.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ");
        let color = match check_homogeneity(&TupleColoring { m, k }, &gamma)? {
            Homogeneity::Homogeneous(c) => c,
            w => return Ok((1, Check::Fail(format!("generated set [{}] is not homogeneous: {w:?}", shown())))),
        };
        if let Check::Fail(msg) = coherence(m, k, &gamma, color)? {
            return Ok((1, Check::Fail(format!("k={k} [{}]: {msg}", shown()))));
        }
        // The lemma's conclusion, under its hypotheses on the top element.
        let fits = gamma[0] < Ordinal::tower(k as u32 - 1, m)? && gamma[0].psn() + 2 >= k as u64;
        if !fits {
            return Ok((1, Check::Ok));
        }
        let conclusion = lk_conclusion(m, k, &gamma, MAX_BITS)?;
        Ok((1, fail_if_some(conclusion.violation(m, k, &gamma), |v| format!("k={k} [{}]: {v}", shown()))))
    }))
}

fn fail_if_some(v: Option<String>, f: impl FnOnce(String) -> String) -> Check {
    v.map_or(Check::Ok, |v| Check::Fail(f(v)))
}

fn nonempty_subsets(range: &[u64]) -> Vec<FinSet> {
    (1u64..1 << range.len())
        .map(|mask| {
            let v = range.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x).collect();
            FinSet::ascending(v).expect("nonempty ascending")
        })
        .collect()
}

fn ks_psn(p: &mut Params) -> Result<Tally> {
    let mus = universe(p, "w*3+1", 2)?;
    let range = p.nums("range", "2..9")?;
    let budget = p.num("budget", DEFAULT_BUDGET)?;
    let sets = nonempty_subsets(&range);
    let items: Vec<(&Ordinal, &FinSet)> =
        mus.iter().flat_map(|mu| sets.iter().map(move |s| (mu, s))).filter(|(mu, s)| mu.psn() <= s.min()).collect();
    Ok(run_all(&items, |_, &(mu, set)| {
        // Hypothesis: A without its maximum is mu-small.
        if let Some(rest) = set.between(0, set.max() - 1) {
            if largeness(&rest, mu)?.is_large() {
                return Ok((0, Check::Ok));
            }
        }
        let trace = ks_trace(mu, set, budget)?;
        if let Some((x, v)) = trace.iter().find(|(x, v)| v.psn() > *x) {
            return Ok((1, Check::Fail(format!("KS^{set}({mu}; {x}) = {v} has psn {}", v.psn()))));
        }
        let exact = largeness(set, mu)? == Largeness::ExactlyLarge;
        let zero_at = trace.iter().position(|(_, v)| v.is_zero());
        let hits_at_max = zero_at == Some(trace.len() - 1);
        Ok((
            1,
            fail_if(exact != hits_at_max, || format!("A={set}, mu={mu}: exactly large {exact}, trace reaches 0 at {zero_at:?}")),
        ))
    }))
}

fn rk_mech(p: &mut Params) -> Result<Tally> {
    let m = p.int("m", 0)?;
    let k = p.num("k", 3)? as usize;
    let lo = p.num("lo", 4)?;
    let hi = p.num("hi", 12)?;
    let budget = p.num("budget", 1_000_000)?;
    if k < 3 || lo < k as u64 || lo <= 3 || hi < lo {
        return Err(Error::BadParam(format!("needs k >= 3, lo >= k, lo > 3 and hi >= lo (k={k}, lo={lo}, hi={hi})")));
    }
    let mu = Ordinal::tower(k as u32 - 1, m)?;
    if m >= 0 {
        // Every set starts its descent at an index >= lo.
        let floor = ks_descent_floor(lo, MAX_BITS)?;
        if floor.as_ref().is_none_or(|f| *f > BigUint::from(budget)) {
            let shown = match floor {
                Some(f) if f.bits() <= 64 => f.to_string(),
                _ => nmk_describe(lo - 1, lo as u32 - 1, -1)?,
            };
            return Ok(Tally::skipped(format!(
                "KS descent from {mu} at index {lo} needs at least {shown} limit steps, budget is {budget}"
            )));
        }
    }
    let range: Vec<u64> = (lo..=hi).collect();
    let cap = Ordinal::tower(k as u32 - 2, m)?;
    let sets: Vec<FinSet> = nonempty_subsets(&range).into_iter().filter(|s| s.len() >= k).collect();
    Ok(run_all(&sets, |_, set| {
        if !at_most_large(set, &cap)? {
            return Ok((0, Check::Ok));
        }
        let coloring = KsColoring::with_mu(m, k, &mu, set.clone(), budget)?;
        let elems = set.elements();
        let images: Vec<Ordinal> = elems.iter().map(|&x| coloring.image(x).expect("traced").clone()).collect();
        if let Some((x, v)) = elems.iter().zip(&images).find(|(x, v)| v.psn() > **x) {
            return Ok((1, Check::Fail(format!("A={set}: KS image {v} of {x} has large psn"))));
        }
        // Colors of all k-subsets once; a subset D is homogeneous if all
        // its k-subsets agree.
        let n = elems.len();
        let mut colors = std::collections::HashMap::new();
        for idx in subsets(n, k) {
            let tuple: Vec<u64> = idx.iter().map(|&i| elems[i]).collect();
            colors.insert(idx, coloring.color(&tuple)?);
        }
        let mut count = 0;
        for mask in 1u64..1 << n {
            let pick: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            if pick.len() < k {
                continue;
            }
            let mut seen = None;
            let homogeneous = subsets(pick.len(), k).all(|sub| {
                let c = colors[&sub.iter().map(|&j| pick[j]).collect::<Vec<_>>()];
                *seen.get_or_insert(c) == c
            });
            if !homogeneous {
                continue;
            }
            count += 1;
            let d: Vec<u64> = pick.iter().map(|&i| elems[i]).collect();
            let gamma: Vec<Ordinal> = pick.iter().map(|&i| images[i].clone()).collect();
            let c = seen.expect("at least one tuple");
            if check_homogeneity(&TupleColoring { m, k }, &gamma)? != Homogeneity::Homogeneous(c) {
                return Ok((count, Check::Fail(format!("A={set}, D={d:?}: image is not {c}-homogeneous"))));
            }
            match lk_conclusion(m, k, &gamma, MAX_BITS)? {
                LkConclusion::Estimating(theta) => {
                    let dprime = FinSet::ascending(d[..theta.domain.len()].to_vec())?;
                    if let Check::Fail(msg) = estimation_check(&dprime, theta.values.clone(), &Ordinal::eps(m))? {
                        return Ok((count, Check::Fail(format!("A={set}, D={d:?}: {msg}"))));
                    }
                }
                bound @ LkConclusion::SizeBound { .. } => {
                    if let Some(v) = bound.violation(m, k, &gamma) {
                        return Ok((count, Check::Fail(format!("A={set}, D={d:?}: {v}"))));
                    }
                }
            }
        }
        Ok((count, Check::Ok))
    }))
}
