//! The Hardy hierarchy, largeness of finite sets and Ketonen–Solovay stepping.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{precondition, Error, Result};
use crate::fundamental::fs;
use crate::ordinal::Ordinal;

/// Default cap on Hardy/KS steps.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// A finite, strictly ascending, nonempty set of naturals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FinSet(Vec<u64>);

impl FinSet {
    pub fn new(mut elems: Vec<u64>) -> Result<Self> {
        elems.sort_unstable();
        elems.dedup();
        if elems.is_empty() {
            return Err(precondition("a set must have at least one element"));
        }
        Ok(FinSet(elems))
    }

    /// Like [`FinSet::new`] but rejects unsorted or repeated input.
    pub fn ascending(elems: Vec<u64>) -> Result<Self> {
        if elems.windows(2).any(|w| w[0] >= w[1]) {
            return Err(precondition("set elements must be strictly ascending"));
        }
        FinSet::new(elems)
    }

    pub fn range(lo: u64, hi: u64) -> Result<Self> {
        FinSet::new((lo..=hi).collect())
    }

    pub fn elements(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn min(&self) -> u64 {
        self.0[0]
    }

    pub fn max(&self) -> u64 {
        *self.0.last().expect("nonempty")
    }

    pub fn contains(&self, x: u64) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    /// The least element greater than `x`.
    pub fn next_after(&self, x: u64) -> Option<u64> {
        let i = self.0.partition_point(|&e| e <= x);
        self.0.get(i).copied()
    }

    /// Elements in `[lo, hi]`, or `None` if that is empty.
    pub fn between(&self, lo: u64, hi: u64) -> Option<FinSet> {
        let v: Vec<u64> = self.0.iter().copied().filter(|&e| lo <= e && e <= hi).collect();
        (!v.is_empty()).then_some(FinSet(v))
    }

    pub fn union(&self, other: &FinSet) -> FinSet {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        FinSet::new(v).expect("nonempty")
    }
}

impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Parses `2,3,4` (braces optional, whitespace ignored).
impl FromStr for FinSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('{').trim_end_matches('}');
        let elems = body
            .split(',')
            .map(|p| p.trim().parse::<u64>().map_err(|_| Error::BadParam(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        FinSet::ascending(elems)
    }
}

#[derive(Debug, Clone, Copy)]
pub enum Carrier<'a> {
    /// `h(x) = x + 1`.
    Successor,
    /// `h(x)` = the next element of the set.
    Set(&'a FinSet),
}

impl Carrier<'_> {
    fn next(&self, x: u64) -> Option<u64> {
        match self {
            Carrier::Successor => x.checked_add(1),
            Carrier::Set(a) => a.next_after(x),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    LimitStep,
    SuccessorStep,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    pub ordinal: Ordinal,
    pub position: u64,
    pub kind: StepKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "outcome", content = "value")]
pub enum Outcome {
    Value(u64),
    Undefined,
    /// Successor steps taken before the budget ran out; each moves the
    /// position up by at least one, so the true value exceeds `x` by at
    /// least this much.
    BudgetExceeded(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HardyTrace {
    pub entries: Vec<TraceEntry>,
    pub outcome: Outcome,
}

/// Shared stepping loop. `next` is the successor function of the carrier.
fn run(
    alpha: &Ordinal,
    x: u64,
    next: impl Fn(u64) -> Option<u64>,
    budget: u64,
    mut record: Option<&mut Vec<TraceEntry>>,
) -> Result<Outcome> {
    let mut cur = alpha.clone();
    let mut pos = x;
    let mut steps = 0u64;
    let mut succ_steps = 0u64;
    while !cur.is_zero() {
        if steps >= budget {
            return Ok(Outcome::BudgetExceeded(succ_steps));
        }
        steps += 1;
        let kind = match cur.pred() {
            Some(p) => {
                let Some(n) = next(pos) else {
                    return Ok(Outcome::Undefined);
                };
                cur = p;
                pos = n;
                succ_steps += 1;
                StepKind::SuccessorStep
            }
            None => {
                cur = fs(&cur, pos)?;
                StepKind::LimitStep
            }
        };
        if let Some(r) = record.as_deref_mut() {
            r.push(TraceEntry { ordinal: cur.clone(), position: pos, kind });
        }
    }
    Ok(Outcome::Value(pos))
}

fn check_start(x: u64, carrier: Carrier<'_>) -> Result<()> {
    if x == 0 {
        return Err(precondition("Hardy argument must be positive"));
    }
    if let Carrier::Set(a) = carrier {
        if !a.contains(x) {
            return Err(precondition(format!("{x} is not an element of {a}")));
        }
    }
    Ok(())
}

/// `h_alpha(x)` with a full step trace.
pub fn hardy_eval(alpha: &Ordinal, x: u64, carrier: Carrier<'_>, budget: u64) -> Result<HardyTrace> {
    check_start(x, carrier)?;
    let mut entries = Vec::new();
    let outcome = run(alpha, x, |p| carrier.next(p), budget, Some(&mut entries))?;
    Ok(HardyTrace { entries, outcome })
}

/// `h_alpha(x)` without recording the trace.
pub fn hardy_value(alpha: &Ordinal, x: u64, carrier: Carrier<'_>, budget: u64) -> Result<Outcome> {
    check_start(x, carrier)?;
    run(alpha, x, |p| carrier.next(p), budget, None)
}

/// `h_alpha(x)` for `alpha < omega^omega` over the plain successor, using
/// `h_{beta + omega*c}(x) = h_beta(2^c * x)` and batched finite tails so
/// that values far beyond any step budget stay computable. `None` when the
/// position would need more than `max_bits` bits.
pub fn hardy_accelerated(alpha: &Ordinal, x: u64, max_bits: u64) -> Result<Option<BigUint>> {
    if x == 0 {
        return Err(precondition("Hardy argument must be positive"));
    }
    // coefs[j] is the coefficient of omega^j.
    let mut coefs: Vec<BigUint> = Vec::new();
    for t in alpha.omega_view() {
        let j = t
            .exp
            .as_finite()
            .ok_or_else(|| precondition("accelerated evaluation needs an ordinal below w^w"))?;
        let j = j as usize;
        if coefs.len() <= j {
            coefs.resize(j + 1, BigUint::zero());
        }
        coefs[j] = BigUint::from(t.coef);
    }
    let mut pos = BigUint::from(x);
    while let Some(j) = coefs.iter().position(|c| !c.is_zero()) {
        match j {
            0 => {
                pos += std::mem::take(&mut coefs[0]);
            }
            1 => {
                let c = std::mem::take(&mut coefs[1]);
                let shift = match c.to_u64() {
                    Some(s) if pos.bits().saturating_add(s) <= max_bits => s,
                    _ => return Ok(None),
                };
                pos <<= shift;
            }
            _ => {
                // omega^j[pos] = omega^{j-1} * pos
                coefs[j] -= 1u32;
                coefs[j - 1] += &pos;
            }
        }
        if pos.bits() > max_bits {
            return Ok(None);
        }
    }
    Ok(Some(pos))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "largeness", content = "value")]
pub enum Largeness {
    Small,
    ExactlyLarge,
    ProperlyLarge(u64),
}

impl Largeness {
    pub fn is_large(self) -> bool {
        self != Largeness::Small
    }
}

/// Classifies `A` against `alpha` by evaluating `h^A_alpha(min A)`.
pub fn largeness(a: &FinSet, alpha: &Ordinal) -> Result<Largeness> {
    match run(alpha, a.min(), |p| a.next_after(p), DEFAULT_BUDGET, None)? {
        Outcome::Undefined => Ok(Largeness::Small),
        Outcome::Value(v) if v == a.max() => Ok(Largeness::ExactlyLarge),
        Outcome::Value(v) => Ok(Largeness::ProperlyLarge(v)),
        Outcome::BudgetExceeded(_) => Err(Error::Budget(DEFAULT_BUDGET)),
    }
}

/// "At most `alpha`-large": not `(alpha + 1)`-large.
pub fn at_most_large(a: &FinSet, alpha: &Ordinal) -> Result<bool> {
    Ok(largeness(a, &alpha.succ())? == Largeness::Small)
}

/// Ketonen–Solovay stepping: for each element, descend through limits using
/// that element as index, record the nonlimit reached, then step past it.
pub fn ks_trace(mu: &Ordinal, a: &FinSet, budget: u64) -> Result<Vec<(u64, Ordinal)>> {
    let mut cur = mu.clone();
    let mut steps = 0u64;
    let mut out = Vec::with_capacity(a.len());
    for &x in a.elements() {
        while cur.is_limit() {
            if steps >= budget {
                return Err(Error::Budget(budget));
            }
            steps += 1;
            cur = fs(&cur, x)?;
        }
        out.push((x, cur.clone()));
        if let Some(p) = cur.pred() {
            cur = p;
        }
    }
    Ok(out)
}

/// The canonical witness `u = h^A_alpha(min A)` splitting a
/// `(beta (+) alpha)`-large set into an `alpha`-large lower part and a
/// `beta`-large upper part.
pub fn split_point(a: &FinSet, alpha: &Ordinal, beta: &Ordinal) -> Result<u64> {
    let mu = beta.natural_sum(alpha);
    if !largeness(a, &mu)?.is_large() {
        return Err(precondition(format!("{a} is not ({mu})-large")));
    }
    match run(alpha, a.min(), |p| a.next_after(p), DEFAULT_BUDGET, None)? {
        Outcome::Value(u) => Ok(u),
        Outcome::Undefined => Err(precondition(format!("{a} is not ({alpha})-large"))),
        Outcome::BudgetExceeded(_) => Err(Error::Budget(DEFAULT_BUDGET)),
    }
}

/// For an `alpha`-small `B`, the set `C` of consecutive naturals above
/// `max B` making `B ∪ C` exactly `alpha`-large.
pub fn extend_to_exactly_large(b: &FinSet, alpha: &Ordinal, budget: u64) -> Result<FinSet> {
    if largeness(b, alpha)?.is_large() {
        return Err(precondition(format!("{b} is already ({alpha})-large")));
    }
    let top = b.max();
    let next = |p: u64| if p < top { b.next_after(p) } else { p.checked_add(1) };
    match run(alpha, b.min(), next, budget, None)? {
        Outcome::Value(v) => FinSet::range(top + 1, v),
        Outcome::Undefined => unreachable!("the extended carrier is unbounded"),
        Outcome::BudgetExceeded(_) => Err(Error::Budget(budget)),
    }
}
