//! Partitions of ordinal tuples by last differences, and their pullback to
//! sets of naturals through Ketonen–Solovay stepping.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{precondition, Error, Result};
use crate::hardy::{ks_trace, FinSet};
use crate::ordinal::{tow_nat, tower_index, Ordinal};

/// Coefficient of `eps_m^delta` in `alpha` written to base `eps_m`.
pub fn coefficient_at(m: i32, alpha: &Ordinal, delta: &Ordinal) -> Result<Ordinal> {
    Ok(alpha
        .to_base(m)?
        .into_iter()
        .find(|t| t.exp == *delta)
        .map_or(Ordinal::ZERO, |t| t.coef))
}

/// Greatest exponent at which the base-`eps_m` coefficients differ.
pub fn last_difference(m: i32, alpha: &Ordinal, beta: &Ordinal) -> Result<Ordinal> {
    if alpha == beta {
        return Err(precondition("last difference of equal ordinals is undefined"));
    }
    let (xs, ys) = (alpha.to_base(m)?, beta.to_base(m)?);
    let mut i = 0;
    loop {
        match (xs.get(i), ys.get(i)) {
            (Some(x), Some(y)) if x == y => i += 1,
            (Some(x), Some(y)) => return Ok(x.exp.clone().max(y.exp.clone())),
            (Some(t), None) | (None, Some(t)) => return Ok(t.exp.clone()),
            (None, None) => unreachable!("distinct ordinals have distinct expansions"),
        }
    }
}

fn check_descending(tuple: &[Ordinal]) -> Result<()> {
    if tuple.windows(2).any(|w| w[0] <= w[1]) {
        return Err(precondition("ordinal tuples must be strictly descending"));
    }
    Ok(())
}

/// Colors a descending triple by comparing its two last differences:
/// 0 if increasing, 1 if equal, 2 if decreasing.
pub fn triple_color(m: i32, a: &Ordinal, b: &Ordinal, c: &Ordinal) -> Result<u64> {
    check_descending(&[a.clone(), b.clone(), c.clone()])?;
    let (first, second) = (last_difference(m, a, b)?, last_difference(m, b, c)?);
    Ok(match first.cmp(&second) {
        std::cmp::Ordering::Less => 0,
        std::cmp::Ordering::Equal => 1,
        std::cmp::Ordering::Greater => 2,
    })
}

/// Number of colors used on `k`-tuples: `3^(k-2)`.
pub fn color_count(k: usize) -> u64 {
    3u64.pow(k as u32 - 2)
}

/// Colors a descending `k`-tuple with `3^(k-2)` colors. The pair made of the
/// triple color of the first three entries and the recursive color of the
/// last-difference sequence is encoded as `head * 3^(k-3) + rest`.
pub fn tuple_color(m: i32, tuple: &[Ordinal]) -> Result<u64> {
    let k = tuple.len();
    if k < 3 {
        return Err(precondition("tuples must have at least three entries"));
    }
    check_descending(tuple)?;
    let head = triple_color(m, &tuple[0], &tuple[1], &tuple[2])?;
    if k == 3 {
        return Ok(head);
    }
    let mut diffs = tuple
        .windows(2)
        .map(|w| last_difference(m, &w[0], &w[1]))
        .collect::<Result<Vec<_>>>()?;
    let rest = if diffs.windows(2).all(|w| w[0] > w[1]) {
        tuple_color(m, &diffs)?
    } else if diffs.windows(2).all(|w| w[0] < w[1]) {
        diffs.reverse();
        tuple_color(m, &diffs)?
    } else {
        0
    };
    Ok(head * color_count(k - 1) + rest)
}

/// Splits an encoded color into its triple part and its recursive part.
pub fn split_color(k: usize, color: u64) -> (u64, u64) {
    let base = color_count(k - 1);
    (color / base, color % base)
}

pub trait Coloring {
    type Item: Clone + fmt::Debug;
    fn k(&self) -> usize;
    fn color(&self, tuple: &[Self::Item]) -> Result<u64>;
}

/// Colors descending ordinal `k`-tuples with [`tuple_color`].
#[derive(Debug, Clone, Copy)]
pub struct TupleColoring {
    pub m: i32,
    pub k: usize,
}

impl Coloring for TupleColoring {
    type Item = Ordinal;

    fn k(&self) -> usize {
        self.k
    }

    fn color(&self, tuple: &[Ordinal]) -> Result<u64> {
        if tuple.len() != self.k {
            return Err(precondition(format!("expected a {}-tuple", self.k)));
        }
        tuple_color(self.m, tuple)
    }
}

/// Colors ascending `k`-tuples from a set by mapping each element to its
/// Ketonen–Solovay ordinal for `tow_{k-1}(eps_m)` and coloring the images.
#[derive(Debug, Clone)]
pub struct KsColoring {
    pub inner: TupleColoring,
    pub set: FinSet,
    images: HashMap<u64, Ordinal>,
}

impl KsColoring {
    pub fn new(m: i32, k: usize, set: FinSet, budget: u64) -> Result<Self> {
        if k < 3 || m < 0 {
            return Err(precondition("needs k >= 3 and m >= 0"));
        }
        if set.min() < k as u64 || set.min() <= 3 {
            return Err(precondition("needs min A >= k and min A > 3"));
        }
        let mu = Ordinal::tower(k as u32 - 1, m)?;
        Self::with_mu(m, k, &mu, set, budget)
    }

    /// Same mechanics with an arbitrary starting point below `eps_{m+1}`;
    /// `m = -1` gives small, fully traceable instances.
    pub fn with_mu(m: i32, k: usize, mu: &Ordinal, set: FinSet, budget: u64) -> Result<Self> {
        if k < 3 || m < -1 {
            return Err(precondition("needs k >= 3 and m >= -1"));
        }
        if *mu >= Ordinal::eps(m + 1) {
            return Err(precondition(format!("{mu} is not below eps_{}", m + 1)));
        }
        if set.min() < k as u64 {
            return Err(precondition("needs min A >= k"));
        }
        let images = ks_trace(mu, &set, budget)?.into_iter().collect();
        Ok(KsColoring { inner: TupleColoring { m, k }, set, images })
    }

    pub fn image(&self, x: u64) -> Option<&Ordinal> {
        self.images.get(&x)
    }
}

impl Coloring for KsColoring {
    type Item = u64;

    fn k(&self) -> usize {
        self.inner.k
    }

    fn color(&self, tuple: &[u64]) -> Result<u64> {
        if tuple.windows(2).any(|w| w[0] >= w[1]) {
            return Err(precondition("set tuples must be strictly ascending"));
        }
        let images = tuple
            .iter()
            .map(|x| {
                self.image(*x)
                    .cloned()
                    .ok_or_else(|| precondition(format!("{x} is not in {}", self.set)))
            })
            .collect::<Result<Vec<_>>>()?;
        self.inner.color(&images)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Homogeneity<T> {
    Homogeneous(u64),
    Witness { first: (Vec<T>, u64), second: (Vec<T>, u64) },
}

/// Lexicographic `k`-subsets of `0..n`.
pub fn subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = (k <= n).then(|| (0..k).collect());
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let next = {
            let c = cur.as_mut().unwrap();
            match (0..k).rev().find(|&i| c[i] < n - k + i) {
                Some(i) => {
                    c[i] += 1;
                    for j in i + 1..k {
                        c[j] = c[j - 1] + 1;
                    }
                    true
                }
                None => false,
            }
        };
        if !next {
            cur = None;
        }
        Some(out)
    })
}

/// Colors every `k`-subset of `s` (in the colorer's order) and reports the
/// first disagreement.
pub fn check_homogeneity<C: Coloring>(colorer: &C, s: &[C::Item]) -> Result<Homogeneity<C::Item>> {
    let k = colorer.k();
    if s.len() < k {
        return Err(precondition(format!("need at least {k} elements")));
    }
    let mut first: Option<(Vec<C::Item>, u64)> = None;
    for idx in subsets(s.len(), k) {
        let tuple: Vec<C::Item> = idx.iter().map(|&i| s[i].clone()).collect();
        let c = colorer.color(&tuple)?;
        match &first {
            None => first = Some((tuple, c)),
            Some((_, c0)) if *c0 == c => {}
            Some(f) => return Ok(Homogeneity::Witness { first: f.clone(), second: (tuple, c) }),
        }
    }
    Ok(Homogeneity::Homogeneous(first.expect("at least one subset").1))
}

/// A strictly increasing, pseudonorm-nonincreasing map from a descending
/// list of ordinals into the ordinals below `bound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EstimatingFn {
    pub domain: Vec<Ordinal>,
    pub values: Vec<Ordinal>,
    pub bound: Ordinal,
}

impl EstimatingFn {
    /// The first broken invariant, if any.
    pub fn violation(&self) -> Option<String> {
        for (g, v) in self.domain.iter().zip(&self.values) {
            if v.psn() > g.psn() {
                return Some(format!("psn({v}) exceeds psn({g})"));
            }
            if *v >= self.bound {
                return Some(format!("{v} is not below {}", self.bound));
            }
        }
        self.values
            .windows(2)
            .position(|w| w[0] <= w[1])
            .map(|i| format!("not strictly increasing at {}", self.domain[i + 1]))
    }
}

/// The estimating function for a set homogeneous under [`triple_color`]:
/// color 1 reads the coefficients at the shared last difference, color 2
/// maps each element to its last difference with the next one.
pub fn estimating_function(m: i32, gamma: &[Ordinal], color: u64) -> Result<EstimatingFn> {
    if gamma.len() < 2 {
        return Err(precondition("need at least two ordinals"));
    }
    check_descending(gamma)?;
    if gamma.len() >= 3 {
        match check_homogeneity(&TupleColoring { m, k: 3 }, gamma)? {
            Homogeneity::Homogeneous(c) if c == color => {}
            Homogeneity::Homogeneous(c) => {
                return Err(precondition(format!("set is homogeneous in color {c}, not {color}")))
            }
            Homogeneity::Witness { .. } => return Err(precondition("set is not homogeneous")),
        }
    }
    match color {
        1 => {
            let delta = last_difference(m, &gamma[0], &gamma[1])?;
            let values = gamma
                .iter()
                .map(|g| coefficient_at(m, g, &delta))
                .collect::<Result<Vec<_>>>()?;
            Ok(EstimatingFn { domain: gamma.to_vec(), values, bound: Ordinal::eps(m) })
        }
        2 => {
            let s = tower_index(&gamma[0], m)?;
            if s < 2 {
                return Err(precondition("the largest element must be at least eps_m"));
            }
            let values = gamma
                .windows(2)
                .map(|w| last_difference(m, &w[0], &w[1]))
                .collect::<Result<Vec<_>>>()?;
            let domain = gamma[..gamma.len() - 1].to_vec();
            Ok(EstimatingFn { domain, values, bound: Ordinal::tower(s - 1, m)? })
        }
        0 => Err(precondition("no estimating function exists for color 0")),
        c => Err(Error::BadParam(format!("color {c}"))),
    }
}

/// Size bound for a color-0 homogeneous set whose maximum lies below
/// `tow_s(eps_m)` with pseudonorm `a >= s - 1`:
/// `tow_{s-1}(tow_a^(m+1)(a + 1)) + 1`. `None` when beyond `max_bits`.
pub fn color_zero_size_bound(s: u32, a: u64, m: i32, max_bits: u64) -> Result<Option<BigUint>> {
    if s < 2 || a == 0 || m < 0 {
        return Err(precondition("needs s >= 2, a >= 1 and m >= 0"));
    }
    let height = u32::try_from(a).map_err(|_| precondition("tower height too large"))?;
    let mut x = BigUint::from(a + 1);
    for _ in 0..=m {
        match tow_nat(height, &x, max_bits)? {
            Some(v) => x = v,
            None => return Ok(None),
        }
    }
    Ok(tow_nat(s - 1, &x, max_bits)?.map(|v| v + 1u32))
}

/// What the partition lemma guarantees for a set homogeneous under
/// [`tuple_color`]: an estimating function on a prefix, or a size bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LkConclusion {
    Estimating(EstimatingFn),
    /// `size <= bound`; `bound` is `None` when it does not fit in the bit cap
    /// (and then holds trivially).
    SizeBound { size: usize, bound: Option<BigUint> },
}

impl LkConclusion {
    /// The first broken guarantee for a `k`-homogeneous `gamma`, if any.
    pub fn violation(&self, m: i32, k: usize, gamma: &[Ordinal]) -> Option<String> {
        match self {
            LkConclusion::Estimating(theta) => {
                let need = gamma.len().saturating_sub((k - 2) * (k - 1) / 2);
                if theta.domain.len() < need || theta.domain[..] != gamma[..theta.domain.len()] {
                    return Some(format!("estimating domain does not cover the first {need} elements"));
                }
                if theta.values.iter().any(|v| *v >= Ordinal::eps(m)) {
                    return Some(format!("estimating values not below eps_{m}"));
                }
                theta.violation()
            }
            LkConclusion::SizeBound { size, bound: Some(b) } if BigUint::from(*size) > *b => {
                Some(format!("{size} elements exceed the bound {b}"))
            }
            LkConclusion::SizeBound { .. } => None,
        }
    }
}

/// `tow_{k-2}(tow_a^(m+1)(a + 1)) + k - 2` with `a = psn(max gamma)`.
fn lk_size_bound(m: i32, k: usize, top: &Ordinal, max_bits: u64) -> Result<Option<BigUint>> {
    let a = top.psn().max(1);
    let height = u32::try_from(a).map_err(|_| precondition("tower height too large"))?;
    let mut x = BigUint::from(a + 1);
    for _ in 0..=m {
        match tow_nat(height, &x, max_bits)? {
            Some(v) => x = v,
            None => return Ok(None),
        }
    }
    Ok(tow_nat(k as u32 - 2, &x, max_bits)?.map(|v| v + (k - 2)))
}

/// Builds the conclusion of the partition lemma for a descending `gamma`
/// homogeneous under `k`-tuple coloring, following its recursive proof:
/// the triple part picks the case, and in the decreasing case the
/// last-difference sequence is treated as a `(k-1)`-homogeneous set.
/// Fails if `gamma` or a derived set is not homogeneous.
pub fn lk_conclusion(m: i32, k: usize, gamma: &[Ordinal], max_bits: u64) -> Result<LkConclusion> {
    if k < 3 {
        return Err(precondition("needs k >= 3"));
    }
    let color = match check_homogeneity(&TupleColoring { m, k }, gamma)? {
        Homogeneity::Homogeneous(c) => c,
        Homogeneity::Witness { .. } => {
            return Err(precondition(format!("set is not homogeneous for {k}-tuples")))
        }
    };
    let (head, _) = if k == 3 { (color, 0) } else { split_color(k, color) };
    let size_bound = || -> Result<LkConclusion> {
        Ok(LkConclusion::SizeBound {
            size: gamma.len(),
            bound: lk_size_bound(m, k, &gamma[0], max_bits)?,
        })
    };
    let inner = &gamma[..gamma.len() - (k - 3)];
    match head {
        0 => size_bound(),
        1 => Ok(LkConclusion::Estimating(estimating_function(m, inner, 1)?)),
        _ if k == 3 => Ok(LkConclusion::Estimating(estimating_function(m, inner, 2)?)),
        _ => {
            let deltas = inner
                .windows(2)
                .map(|w| last_difference(m, &w[0], &w[1]))
                .collect::<Result<Vec<_>>>()?;
            if deltas.len() < k - 1 {
                return size_bound();
            }
            match lk_conclusion(m, k - 1, &deltas, max_bits)? {
                LkConclusion::Estimating(theta) => {
                    let n = theta.domain.len();
                    Ok(LkConclusion::Estimating(EstimatingFn {
                        domain: gamma[..n].to_vec(),
                        values: theta.values,
                        bound: theta.bound,
                    }))
                }
                LkConclusion::SizeBound { .. } => size_bound(),
            }
        }
    }
}

/// A floor on the number of limit steps before the Ketonen–Solovay descent
/// from `tow_j(eps_m)` (`m >= 0`) at index `x >= 2` first reaches a
/// nonlimit. The descent eventually carries `eps_0[x] = tow_x(w)` as its
/// last summand, whose pure limit descent takes one step per element of
/// the `[x]`-chain from `tow_{x-1}(w)` to 0; that chain visits every
/// ordinal below `tow_{x-1}(w)` with pseudonorm below `x`, of which there
/// are `tow_{x-1}(x)`.
pub fn ks_descent_floor(x: u64, max_bits: u64) -> Result<Option<BigUint>> {
    if x < 2 {
        return Err(precondition("needs an index of at least 2"));
    }
    let height = u32::try_from(x - 1).map_err(|_| precondition("index too large"))?;
    tow_nat(height, &BigUint::from(x), max_bits)
}

/// `rho + sum eps_m^{e_i} * c_i` for strictly decreasing `e_i`, all below
/// the smallest exponent of `rho`.
pub fn polynomial(m: i32, rho: &Ordinal, terms: &[(Ordinal, Ordinal)]) -> Ordinal {
    let tail = Ordinal::normalize(
        &terms.iter().map(|(e, c)| (m, e.clone(), c.clone())).collect::<Vec<_>>(),
    )
    .expect("level is valid");
    rho.add(&tail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_ordinal;

    fn p(s: &str) -> Ordinal {
        parse_ordinal(s).unwrap()
    }

    fn ps(s: &[&str]) -> Vec<Ordinal> {
        s.iter().map(|x| p(x)).collect()
    }

    #[test]
    fn coefficients_and_differences() {
        let a = p("e0^2*3 + e0*5");
        assert_eq!(coefficient_at(0, &a, &p("1")).unwrap(), p("5"));
        assert_eq!(coefficient_at(0, &a, &p("0")).unwrap(), p("0"));
        assert_eq!(coefficient_at(0, &p("w^w"), &p("0")).unwrap(), p("w^w"));
        assert_eq!(last_difference(0, &a, &p("e0^2*3 + 7")).unwrap(), p("1"));
        assert_eq!(last_difference(0, &p("e0*3"), &p("e0*2")).unwrap(), p("1"));
        assert!(last_difference(0, &p("w^2"), &p("w^2")).is_err());
        assert!(coefficient_at(0, &p("e1"), &p("1")).is_err());
    }

    #[test]
    fn triple_colors() {
        assert_eq!(triple_color(0, &p("e0*3"), &p("e0*2"), &p("e0")).unwrap(), 1);
        assert_eq!(triple_color(0, &p("e0*3"), &p("e0*2+1"), &p("e0*2")).unwrap(), 2);
        let t = ps(&["e0^2+e0*2+1", "e0^2+e0*2", "e0^2+e0"]);
        assert_eq!(triple_color(0, &t[0], &t[1], &t[2]).unwrap(), 0);
        assert!(triple_color(0, &t[2], &t[1], &t[0]).is_err());
    }

    #[test]
    fn tuple_colors() {
        let t = ps(&["e0^3", "e0^2", "e0", "1"]);
        assert_eq!(tuple_color(0, &t).unwrap(), 7);
        assert_eq!(split_color(4, 7), (2, 1));
        // Last differences 1, 0, 1 are not monotone.
        let t = ps(&["e0*2", "e0+1", "e0", "1"]);
        assert_eq!(split_color(4, tuple_color(0, &t).unwrap()).1, 0);
        assert!(tuple_color(0, &ps(&["e0", "1"])).is_err());
    }

    #[test]
    fn homogeneity() {
        let c3 = TupleColoring { m: 0, k: 3 };
        let g = ps(&["e0*3", "e0*2", "e0"]);
        assert_eq!(check_homogeneity(&c3, &g).unwrap(), Homogeneity::Homogeneous(1));
        let g = ps(&["e0^3", "e0^2", "e0", "1"]);
        assert_eq!(check_homogeneity(&c3, &g).unwrap(), Homogeneity::Homogeneous(2));
        assert!(check_homogeneity(&c3, &g[..2]).is_err());
        let g = ps(&["e0*3", "e0*2+1", "e0*2", "e0"]);
        assert!(matches!(check_homogeneity(&c3, &g).unwrap(), Homogeneity::Witness { .. }));
        assert_eq!(subsets(4, 2).count(), 6);
        assert_eq!(subsets(2, 3).count(), 0);
    }

    #[test]
    fn estimating_functions() {
        let f = estimating_function(0, &ps(&["e0*3", "e0*2", "e0"]), 1).unwrap();
        assert_eq!(f.values, ps(&["3", "2", "1"]));
        assert_eq!(f.bound, p("e0"));
        assert_eq!(f.violation(), None);
        let f = estimating_function(0, &ps(&["e0^3", "e0^2", "e0", "1"]), 2).unwrap();
        assert_eq!(f.domain, ps(&["e0^3", "e0^2", "e0"]));
        assert_eq!(f.values, ps(&["3", "2", "1"]));
        assert_eq!(f.bound, p("e0"));
        assert!(estimating_function(0, &ps(&["e0*3", "e0*2", "e0"]), 0).is_err());
        assert!(estimating_function(0, &ps(&["e0*3", "e0*2", "e0"]), 2).is_err());
    }

    #[test]
    fn color_zero_bound() {
        assert_eq!(color_zero_size_bound(2, 2, 0, 64).unwrap(), Some(BigUint::from(28u32)));
        assert_eq!(color_zero_size_bound(3, 2, 0, 64).unwrap(), None);
    }

    #[test]
    fn lk_conclusions() {
        let deltas = ps(&["w*4", "w*3", "w*2", "w", "1"]);
        let gamma: Vec<Ordinal> = (0..deltas.len())
            .map(|i| {
                let terms: Vec<(Ordinal, Ordinal)> =
                    deltas[i..].iter().map(|d| (d.clone(), Ordinal::ONE)).collect();
                polynomial(0, &Ordinal::ZERO, &terms)
            })
            .collect();
        assert_eq!(check_homogeneity(&TupleColoring { m: 0, k: 4 }, &gamma).unwrap(), Homogeneity::Homogeneous(7));
        match lk_conclusion(0, 4, &gamma, 64).unwrap() {
            LkConclusion::Estimating(theta) => {
                assert_eq!(theta.values, ps(&["w*4", "w*3", "w*2"]));
                assert_eq!(theta.domain, gamma[..3].to_vec());
            }
            other => panic!("{other:?}"),
        }
        let c = lk_conclusion(0, 4, &gamma, 64).unwrap();
        assert_eq!(c.violation(0, 4, &gamma), None);

        let zero = ps(&["e0^2+e0*2+1", "e0^2+e0*2", "e0^2"]);
        let c = lk_conclusion(0, 3, &zero, 64).unwrap();
        assert_eq!(c, LkConclusion::SizeBound { size: 3, bound: Some(BigUint::from(28u32)) });
        assert!(lk_conclusion(0, 3, &ps(&["e0*3", "e0*2+1", "e0*2", "e0"]), 64).is_err());
    }

    #[test]
    fn ks_floor_is_a_floor() {
        for x in [2u64, 3] {
            let floor = ks_descent_floor(x, 64).unwrap().unwrap();
            let mut cur = Ordinal::eps(0);
            let mut steps = 0u64;
            while cur.is_limit() {
                cur = crate::fundamental::fs(&cur, x).unwrap();
                steps += 1;
            }
            assert!(BigUint::from(steps) >= floor, "x = {x}: {steps} < {floor}");
        }
        assert_eq!(ks_descent_floor(4, 1024).unwrap().unwrap(), BigUint::from(4u32).pow(256u32));
    }

    #[test]
    fn ks_coloring() {
        // Starting at eps0^eps0 the descent at index 4 already passes through
        // a tower of four omegas; it cannot finish in any reasonable budget.
        assert!(matches!(
            KsColoring::new(0, 3, FinSet::range(4, 7).unwrap(), 300),
            Err(Error::Budget(_))
        ));
        let a = FinSet::range(4, 7).unwrap();
        let c = KsColoring::with_mu(-1, 3, &Ordinal::tower(2, -1).unwrap(), a, 1_000_000).unwrap();
        let imgs: Vec<Ordinal> = (4..=7).map(|x| c.image(x).unwrap().clone()).collect();
        assert!(imgs.windows(2).all(|w| w[0] > w[1]));
        let direct = tuple_color(0, &imgs[..3]).unwrap();
        assert_eq!(c.color(&[4, 5, 6]).unwrap(), direct);
        assert!(c.color(&[4, 4, 6]).is_err());
        assert!(KsColoring::new(0, 3, FinSet::range(3, 6).unwrap(), 10).is_err());
    }
}
