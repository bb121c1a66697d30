//! Brute-force enumeration of pseudonorm-bounded ordinals, the closed-form
//! count it is checked against, and the lemma-verification harness.

mod generate;
mod verify;

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::error::{precondition, Error, Result};
use crate::ordinal::{tow_nat, tower_index, Ordinal};

pub use generate::{random_homogeneous, random_l3, random_small};
pub use verify::{verify, Verdict, VerifyReport, LEMMA_IDS};

/// Default cap on the number of ordinals an enumeration may produce.
pub const DEFAULT_CAP: usize = 1_000_000;

/// Bit cap for closed-form tower arithmetic.
pub const MAX_BITS: u64 = 1 << 16;

/// `{alpha < bound : psn(alpha) <= psn_cap}`, refused beyond `cap` elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe {
    pub bound: Ordinal,
    pub psn_cap: u64,
    pub cap: usize,
}

impl Universe {
    pub fn new(bound: Ordinal, psn_cap: u64) -> Self {
        Universe { bound, psn_cap, cap: DEFAULT_CAP }
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    /// `(k, m)` when the bound is `tow_k(eps_m)`.
    pub fn tower_shape(&self) -> Option<(u32, i32)> {
        let m = self.bound.base_level();
        if self.bound.is_finite() {
            return None;
        }
        let k = tower_index(&self.bound, m).ok()? - 1;
        (k >= 1 && Ordinal::tower(k, m).ok()? == self.bound).then_some((k, m))
    }
}

/// Enumerates a universe in ascending order.
///
/// Ordinals at or above `eps_m` (the bound's base) are generated as
/// coefficient sequences over previously enumerated exponent sets, pruned
/// by the bound and by the pseudonorm, which never drops when a normal form
/// is extended by a smaller term.
pub fn enum_psn_bounded(u: &Universe) -> Result<Vec<Ordinal>> {
    if let Some((k, m)) = u.tower_shape() {
        if u.psn_cap >= 1 {
            let predicted = nmk_formula_bits(u.psn_cap, k, m, MAX_BITS)?;
            if predicted.is_none_or(|n| n > BigUint::from(u.cap)) {
                return Err(Error::CapExceeded { cap: u.cap });
            }
        }
    }
    let mut e = Enumerator { a: u.psn_cap, cap: u.cap, produced: 0, eps_memo: HashMap::new() };
    let mut out = e.below(&u.bound)?;
    out.retain(|x| x.psn() <= u.psn_cap);
    out.sort();
    out.dedup();
    Ok(out)
}

/// Shorthand for [`enum_psn_bounded`] with the default cap.
pub fn enumerate(bound: &Ordinal, psn_cap: u64) -> Result<Vec<Ordinal>> {
    enum_psn_bounded(&Universe::new(bound.clone(), psn_cap))
}

struct Enumerator {
    a: u64,
    cap: usize,
    produced: usize,
    eps_memo: HashMap<i32, Vec<Ordinal>>,
}

impl Enumerator {
    fn tick(&mut self) -> Result<()> {
        self.produced += 1;
        if self.produced > self.cap {
            return Err(Error::CapExceeded { cap: self.cap });
        }
        Ok(())
    }

    /// Everything below `eps_m` with pseudonorm at most `a`.
    fn below_eps(&mut self, m: i32) -> Result<Vec<Ordinal>> {
        if let Some(v) = self.eps_memo.get(&m) {
            return Ok(v.clone());
        }
        let v = if m == -1 || self.a < 2 {
            (0..=self.a).map(Ordinal::nat).collect()
        } else {
            // Height at most a keeps everything below tow_a(eps_{m-1}).
            let h = u32::try_from(self.a).map_err(|_| precondition("pseudonorm cap too large"))?;
            self.below(&Ordinal::tower(h, m - 1)?)?
        };
        self.eps_memo.insert(m, v.clone());
        Ok(v)
    }

    fn below(&mut self, bound: &Ordinal) -> Result<Vec<Ordinal>> {
        if let Some(n) = bound.as_finite() {
            return Ok((0..n.min(self.a + 1)).map(Ordinal::nat).collect());
        }
        let m = bound.base_level();
        let mut out = self.below_eps(m)?;
        for _ in &out {
            self.tick()?;
        }
        if self.a < 2 {
            // Every infinite ordinal has pseudonorm at least 2.
            return Ok(out);
        }
        // Leading exponents stay below tow_{a-1}(eps_m) and at most the
        // bound's own leading exponent.
        let h = u32::try_from(self.a - 1).map_err(|_| precondition("pseudonorm cap too large"))?;
        let exp_bound = bound.leading_exp().succ().min(Ordinal::tower(h, m)?);
        let mut exps = self.below(&exp_bound)?;
        exps.sort_by(|x, y| y.cmp(x));
        let coefs: Vec<Ordinal> = self.below_eps(m)?.into_iter().filter(|c| !c.is_zero()).collect();
        let start = exps.iter().take_while(|e| !e.is_zero()).count();
        let mut frame = Frame { m, bound, exps: &exps, coefs: &coefs, out: &mut out };
        for j in 0..start {
            frame.extend(self, &Ordinal::ZERO, j)?;
        }
        Ok(out)
    }
}

struct Frame<'a> {
    m: i32,
    bound: &'a Ordinal,
    exps: &'a [Ordinal],
    coefs: &'a [Ordinal],
    out: &'a mut Vec<Ordinal>,
}

impl Frame<'_> {
    /// Appends `eps_m^{exps[j]} * c` to `prefix` for every admissible `c`
    /// and recurses into the smaller exponents.
    fn extend(&mut self, e: &mut Enumerator, prefix: &Ordinal, j: usize) -> Result<()> {
        let power = Ordinal::eps_pow(self.m, &self.exps[j]);
        for c in self.coefs {
            let next = prefix.add(&power.mul(c));
            if next >= *self.bound {
                break;
            }
            if next.psn() > e.a {
                continue;
            }
            e.tick()?;
            self.out.push(next.clone());
            for i in j + 1..self.exps.len() {
                self.extend(e, &next, i)?;
            }
        }
        Ok(())
    }
}

/// The closed-form count of `{alpha < tow_k(eps_m) : psn(alpha) <= a}`:
/// `tow_k` applied to `tow_a` iterated `m + 1` times on `a + 1`, with
/// `k > a` clamped to `a`. `m = -1` means base omega.
pub fn nmk_formula(a: u64, k: u32, m: i32) -> Result<BigUint> {
    nmk_formula_bits(a, k, m, MAX_BITS)?
        .ok_or_else(|| precondition(format!("count for a={a}, k={k}, m={m} is beyond {MAX_BITS} bits")))
}

/// [`nmk_formula`], or `None` beyond `max_bits`.
pub fn nmk_formula_bits(a: u64, k: u32, m: i32, max_bits: u64) -> Result<Option<BigUint>> {
    Ok(nmk_steps(a, k, m, max_bits)?.map(|(x, last)| last.map_or(x, |(_, _, v)| v)))
}

/// Human-readable form of the count, preferring `base^exp` when the value
/// itself is too large to print usefully.
pub fn nmk_describe(a: u64, k: u32, m: i32) -> Result<String> {
    match nmk_steps(a, k, m, MAX_BITS)? {
        Some((v, _)) if v.bits() <= 64 => Ok(v.to_string()),
        Some((_, Some((base, exp, _)))) => Ok(format!("{base}^{exp}")),
        Some((v, None)) => Ok(v.to_string()),
        None => Ok(format!("more than 2^{MAX_BITS}")),
    }
}

type Steps = (BigUint, Option<(BigUint, BigUint, BigUint)>);

/// Applies the towers of the closed form one by one. Returns the value and
/// the last nontrivial application `tow_n(x) = x^{tow_{n-1}(x)}` as
/// `(x, tow_{n-1}(x), value)`.
fn nmk_steps(a: u64, k: u32, m: i32, max_bits: u64) -> Result<Option<Steps>> {
    if a == 0 || k == 0 || m < -1 {
        return Err(precondition("needs a >= 1, k >= 1 and m >= -1"));
    }
    let height = u32::try_from(a).map_err(|_| precondition("pseudonorm too large"))?;
    let k = k.min(height);
    let mut heights = vec![height; (m + 1) as usize];
    heights.push(k);
    let mut x = BigUint::from(a + 1);
    let mut last = None;
    for n in heights {
        if n < 2 {
            continue;
        }
        let Some(exp) = tow_nat(n - 1, &x, max_bits)? else { return Ok(None) };
        let Some(v) = tow_nat(n, &x, max_bits)? else { return Ok(None) };
        last = Some((x.clone(), exp, v.clone()));
        x = v;
    }
    Ok(Some((x, last)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_ordinal;

    fn p(s: &str) -> Ordinal {
        parse_ordinal(s).unwrap()
    }

    #[test]
    fn small_universes() {
        assert_eq!(enumerate(&Ordinal::eps(0), 1).unwrap(), vec![p("0"), p("1")]);
        let u = enumerate(&Ordinal::eps(0), 2).unwrap();
        assert_eq!(u.len(), 27);
        assert_eq!(u.last().unwrap(), &p("w^2*2 + w*2 + 2"));
        assert_eq!(enumerate(&p("w^3"), 3).unwrap().len(), 64);
        assert_eq!(enumerate(&Ordinal::eps(1), 1).unwrap().len(), 2);
        assert!(u.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn closed_form() {
        assert_eq!(nmk_formula(1, 1, 0).unwrap(), BigUint::from(2u32));
        assert_eq!(nmk_formula(2, 1, 0).unwrap(), BigUint::from(27u32));
        assert_eq!(nmk_formula(2, 2, 0).unwrap(), BigUint::from(27u32).pow(27u32));
        assert_eq!(nmk_formula(2, 5, 0).unwrap(), nmk_formula(2, 2, 0).unwrap());
        assert_eq!(nmk_formula(3, 2, -1).unwrap(), BigUint::from(256u32));
        assert_eq!(nmk_describe(3, 1, 0).unwrap(), "4^256");
        assert_eq!(nmk_describe(2, 1, 0).unwrap(), "27");
    }

    #[test]
    fn towers_are_refused_by_prediction() {
        let u = Universe::new(Ordinal::tower(2, 0).unwrap(), 2);
        assert_eq!(u.tower_shape(), Some((2, 0)));
        assert_eq!(enum_psn_bounded(&u), Err(Error::CapExceeded { cap: DEFAULT_CAP }));
        let u = Universe::new(p("w^w"), 3).with_cap(10);
        assert!(matches!(enum_psn_bounded(&u), Err(Error::CapExceeded { cap: 10 })));
    }

    #[test]
    fn counts_match_the_closed_form() {
        for (a, k, m) in [(1u64, 1u32, 0i32), (2, 1, 0), (1, 1, 1), (1, 2, 0), (2, 1, -1), (2, 2, -1), (3, 2, -1)] {
            let bound = Ordinal::tower(k, m).unwrap();
            let n = enumerate(&bound, a).unwrap().len();
            assert_eq!(BigUint::from(n), nmk_formula(a, k, m).unwrap(), "a={a} k={k} m={m}");
        }
    }
}
