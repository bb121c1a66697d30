//! Ordinals below epsilon_omega in leveled normal form.
//!
//! An ordinal `a >= omega` with `eps_m <= a < eps_{m+1}` is stored as
//! `eps_m^{e_0} * c_0 + ... + eps_m^{e_s} * c_s` with strictly decreasing
//! exponents and coefficients `0 < c_i < eps_m`. Level `-1` stands for base
//! omega, whose coefficients are naturals. Finite ordinals are stored
//! directly. The representation is canonical, so structural equality is
//! ordinal equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Ordinal {
    Fin(u64),
    Lev(Arc<Leveled>),
}

/// Canonical leveled sum. Invariants: `terms` is nonempty, the leading
/// exponent is positive, exponents strictly decrease and every exponent has
/// base level `<= level`, every coefficient is nonzero with base level
/// `< level` (a natural when `level == -1`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Leveled {
    level: i32,
    terms: Vec<Term>,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub exp: Ordinal,
    pub coef: Ordinal,
}

impl Term {
    pub fn new(exp: Ordinal, coef: Ordinal) -> Self {
        Term { exp, coef }
    }
}

/// A base-omega monomial `omega^exp * coef` with a natural coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OmegaTerm {
    pub exp: Ordinal,
    pub coef: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Kind {
    Zero,
    Successor(Ordinal),
    Limit,
}

fn checked(v: Option<u64>) -> u64 {
    v.expect("natural coefficient overflowed u64")
}

impl Ordinal {
    pub const ZERO: Ordinal = Ordinal::Fin(0);
    pub const ONE: Ordinal = Ordinal::Fin(1);

    pub fn nat(n: u64) -> Self {
        Ordinal::Fin(n)
    }

    pub fn omega() -> Self {
        Ordinal::from_terms(-1, vec![Term::new(Ordinal::ONE, Ordinal::ONE)])
    }

    /// `eps_m`, with `eps(-1) == omega`.
    pub fn eps(m: i32) -> Self {
        assert!(m >= -1, "epsilon index below -1");
        Ordinal::from_terms(m, vec![Term::new(Ordinal::ONE, Ordinal::ONE)])
    }

    /// Builds an ordinal from terms already known to be in normal form to
    /// base `eps_level`, lowering the level when the sum is below `eps_level`.
    pub(crate) fn from_terms(level: i32, terms: Vec<Term>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| w[0].exp > w[1].exp && !w[1].coef.is_zero()));
        match terms.first() {
            None => Ordinal::ZERO,
            Some(t) if t.exp.is_zero() => t.coef.clone(),
            Some(_) => Ordinal::Lev(Arc::new(Leveled { level, terms })),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Ordinal::Fin(0))
    }

    pub fn as_finite(&self) -> Option<u64> {
        match self {
            Ordinal::Fin(n) => Some(*n),
            Ordinal::Lev(_) => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.as_finite().is_some()
    }

    /// `l(a) - 1`: the canonical base level. Finite ordinals sit at `-1`.
    pub fn base_level(&self) -> i32 {
        match self {
            Ordinal::Fin(_) => -1,
            Ordinal::Lev(l) => l.level,
        }
    }

    /// Terms of the canonical normal form. A finite `n > 0` yields `[(0, n)]`.
    pub fn terms(&self) -> Vec<Term> {
        match self {
            Ordinal::Fin(0) => Vec::new(),
            Ordinal::Fin(n) => vec![Term::new(Ordinal::ZERO, Ordinal::Fin(*n))],
            Ordinal::Lev(l) => l.terms.clone(),
        }
    }

    fn term_slice(&self) -> Option<&[Term]> {
        match self {
            Ordinal::Lev(l) => Some(&l.terms),
            Ordinal::Fin(_) => None,
        }
    }

    /// The leading exponent in canonical form (0 for finite ordinals).
    pub fn leading_exp(&self) -> Ordinal {
        match self {
            Ordinal::Fin(_) => Ordinal::ZERO,
            Ordinal::Lev(l) => l.terms[0].exp.clone(),
        }
    }

    /// Is this exactly `eps_m` (or omega for `m == -1`)?
    pub fn epsilon_index(&self) -> Option<i32> {
        let l = match self {
            Ordinal::Lev(l) => l,
            Ordinal::Fin(_) => return None,
        };
        match l.terms.as_slice() {
            [t] if t.exp == Ordinal::ONE && t.coef == Ordinal::ONE => Some(l.level),
            _ => None,
        }
    }

    pub fn classify(&self) -> Kind {
        match self.pred() {
            Some(p) => Kind::Successor(p),
            None if self.is_zero() => Kind::Zero,
            None => Kind::Limit,
        }
    }

    pub fn is_limit(&self) -> bool {
        matches!(self.classify(), Kind::Limit)
    }

    pub fn is_successor(&self) -> bool {
        matches!(self.classify(), Kind::Successor(_))
    }

    /// Predecessor of a successor ordinal, `None` for zero and limits.
    pub fn pred(&self) -> Option<Ordinal> {
        match self {
            Ordinal::Fin(0) => None,
            Ordinal::Fin(n) => Some(Ordinal::Fin(n - 1)),
            Ordinal::Lev(l) => {
                let last = l.terms.last().expect("nonempty");
                if !last.exp.is_zero() {
                    return None;
                }
                let c = last.coef.pred()?;
                let mut terms = l.terms[..l.terms.len() - 1].to_vec();
                if !c.is_zero() {
                    terms.push(Term::new(Ordinal::ZERO, c));
                }
                Some(Ordinal::from_terms(l.level, terms))
            }
        }
    }

    pub fn succ(&self) -> Ordinal {
        self.add(&Ordinal::ONE)
    }

    /// Normal form to base `eps_m` for `m >= l(a) - 1`.
    pub fn to_base(&self, m: i32) -> Result<Vec<Term>> {
        if m < -1 {
            return Err(Error::BadLevel(m));
        }
        let own = self.base_level();
        match m.cmp(&own) {
            Ordering::Less => Err(Error::BaseTooSmall {
                ordinal: self.clone(),
                base: m,
                needed: own,
            }),
            Ordering::Equal => Ok(self.terms()),
            Ordering::Greater if self.is_zero() => Ok(Vec::new()),
            Ordering::Greater => Ok(vec![Term::new(Ordinal::ZERO, self.clone())]),
        }
    }

    fn base_terms(&self, m: i32) -> Vec<Term> {
        self.to_base(m).expect("base level checked by caller")
    }

    /// Ordinal addition.
    pub fn add(&self, other: &Ordinal) -> Ordinal {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        if let (Ordinal::Fin(a), Ordinal::Fin(b)) = (self, other) {
            return Ordinal::Fin(checked(a.checked_add(*b)));
        }
        let level = self.base_level().max(other.base_level());
        let left = self.base_terms(level);
        let right = other.base_terms(level);
        let head = &right[0];
        let mut terms: Vec<Term> = Vec::with_capacity(left.len() + right.len());
        let mut rest = right.iter();
        for t in &left {
            match t.exp.cmp(&head.exp) {
                Ordering::Greater => terms.push(t.clone()),
                Ordering::Equal => {
                    terms.push(Term::new(t.exp.clone(), t.coef.add(&head.coef)));
                    rest.next();
                    break;
                }
                Ordering::Less => break,
            }
        }
        terms.extend(rest.cloned());
        Ordinal::from_terms(level, terms)
    }

    /// Ordinal multiplication.
    pub fn mul(&self, other: &Ordinal) -> Ordinal {
        if self.is_zero() || other.is_zero() {
            return Ordinal::ZERO;
        }
        if let (Ordinal::Fin(a), Ordinal::Fin(b)) = (self, other) {
            return Ordinal::Fin(checked(a.checked_mul(*b)));
        }
        let level = self.base_level().max(other.base_level());
        let left = self.base_terms(level);
        let right = other.base_terms(level);
        let lead_exp = &left[0].exp;
        let lead_coef = &left[0].coef;
        let mut acc = Ordinal::ZERO;
        for t in &right {
            let piece = if t.exp.is_zero() {
                // a * c for c < eps_level: eps^{a0} * (xi0 * c), plus the
                // tail of a when c is a successor.
                let mut terms = vec![Term::new(lead_exp.clone(), lead_coef.mul(&t.coef))];
                if t.coef.is_successor() {
                    terms.extend(left[1..].iter().cloned());
                }
                Ordinal::from_terms(level, terms)
            } else {
                Ordinal::from_terms(
                    level,
                    vec![Term::new(lead_exp.add(&t.exp), t.coef.clone())],
                )
            };
            acc = acc.add(&piece);
        }
        acc
    }

    /// Natural (Hessenberg) sum, merged level by level.
    pub fn natural_sum(&self, other: &Ordinal) -> Ordinal {
        if let (Ordinal::Fin(a), Ordinal::Fin(b)) = (self, other) {
            return Ordinal::Fin(checked(a.checked_add(*b)));
        }
        let level = self.base_level().max(other.base_level());
        let left = self.base_terms(level);
        let right = other.base_terms(level);
        let mut terms = Vec::with_capacity(left.len() + right.len());
        let (mut i, mut j) = (0, 0);
        while i < left.len() || j < right.len() {
            let ord = match (left.get(i), right.get(j)) {
                (Some(a), Some(b)) => a.exp.cmp(&b.exp),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    terms.push(left[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    terms.push(right[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let coef = left[i].coef.natural_sum(&right[j].coef);
                    terms.push(Term::new(left[i].exp.clone(), coef));
                    i += 1;
                    j += 1;
                }
            }
        }
        Ordinal::from_terms(level, terms)
    }

    /// `omega^x`.
    pub fn omega_pow(x: &Ordinal) -> Ordinal {
        if x.is_zero() {
            return Ordinal::ONE;
        }
        let level = x.base_level();
        if level == -1 {
            return Ordinal::from_terms(-1, vec![Term::new(x.clone(), Ordinal::ONE)]);
        }
        // x = eps_L * y + z with z < eps_L, so omega^x = eps_L^y * omega^z.
        let mut quotient = Vec::new();
        let mut remainder = Ordinal::ZERO;
        for t in x.base_terms(level) {
            if t.exp.is_zero() {
                remainder = t.coef;
            } else {
                let e = match t.exp {
                    Ordinal::Fin(n) => Ordinal::Fin(n - 1),
                    inf => inf,
                };
                quotient.push(Term::new(e, t.coef));
            }
        }
        let y = Ordinal::from_terms(level, quotient);
        Ordinal::from_terms(level, vec![Term::new(y, Ordinal::omega_pow(&remainder))])
    }

    /// `eps_m^x`; `m == -1` means `omega^x`.
    pub fn eps_pow(m: i32, x: &Ordinal) -> Ordinal {
        assert!(m >= -1, "epsilon index below -1");
        if x.is_zero() {
            return Ordinal::ONE;
        }
        if x.base_level() <= m {
            Ordinal::from_terms(m, vec![Term::new(x.clone(), Ordinal::ONE)])
        } else {
            Ordinal::omega_pow(&Ordinal::eps(m).mul(x))
        }
    }

    /// Sum of `eps_{m_i}^{e_i} * c_i` in the given order.
    pub fn normalize(parts: &[(i32, Ordinal, Ordinal)]) -> Result<Ordinal> {
        let mut acc = Ordinal::ZERO;
        for (m, e, c) in parts {
            if *m < -1 {
                return Err(Error::BadLevel(*m));
            }
            acc = acc.add(&Ordinal::eps_pow(*m, e).mul(c));
        }
        Ok(acc)
    }

    /// `(l(a), h(a))`.
    pub fn level_and_height(&self) -> Result<(u32, u32)> {
        if self.is_zero() {
            return Err(Error::Zero { what: "level and height" });
        }
        let m = self.base_level();
        Ok(((m + 1) as u32, tower_height(self, m)))
    }

    /// Pseudonorm: the largest natural in the hereditary normal form, joined
    /// with the height.
    pub fn psn(&self) -> u64 {
        match self {
            Ordinal::Fin(n) => *n,
            Ordinal::Lev(l) => {
                let mut best = u64::from(tower_height(self, l.level));
                for t in &l.terms {
                    best = best.max(t.exp.psn()).max(t.coef.psn());
                }
                best
            }
        }
    }

    /// Base-omega Cantor expansion with natural coefficients.
    pub fn omega_view(&self) -> Vec<OmegaTerm> {
        match self {
            Ordinal::Fin(0) => Vec::new(),
            Ordinal::Fin(n) => vec![OmegaTerm { exp: Ordinal::ZERO, coef: *n }],
            Ordinal::Lev(l) if l.level == -1 => l
                .terms
                .iter()
                .map(|t| OmegaTerm {
                    exp: t.exp.clone(),
                    coef: t.coef.as_finite().expect("omega-level coefficient"),
                })
                .collect(),
            Ordinal::Lev(l) => {
                let base = Ordinal::eps(l.level);
                let mut out = Vec::new();
                for t in &l.terms {
                    let shift = base.mul(&t.exp);
                    for inner in t.coef.omega_view() {
                        out.push(OmegaTerm {
                            exp: shift.add(&inner.exp),
                            coef: inner.coef,
                        });
                    }
                }
                out
            }
        }
    }

    pub fn from_omega_view(terms: &[OmegaTerm]) -> Ordinal {
        terms.iter().fold(Ordinal::ZERO, |acc, t| {
            acc.add(&Ordinal::omega_pow(&t.exp).mul(&Ordinal::Fin(t.coef)))
        })
    }

    /// `tow_n(eps_m)` with `eps_{-1} = omega`.
    pub fn tower(n: u32, m: i32) -> Result<Ordinal> {
        if n == 0 {
            return Err(Error::TowerHeight);
        }
        if m < -1 {
            return Err(Error::BadLevel(m));
        }
        let base = Ordinal::eps(m);
        let mut t = base.clone();
        for _ in 1..n {
            t = Ordinal::eps_pow(m, &t);
        }
        Ok(t)
    }
}

/// `min { n >= 1 : x < tow_n(eps_m) }` for `x < eps_{m+1}`.
fn tower_height(x: &Ordinal, m: i32) -> u32 {
    let mut h = 1;
    let mut cur = x.clone();
    while cur.base_level() == m && !cur.is_finite() {
        h += 1;
        cur = cur.leading_exp();
    }
    h
}

/// Minimal `s >= 1` with `x < tow_s(eps_m)`; `x` must satisfy `l(x) <= m + 1`.
pub fn tower_index(x: &Ordinal, m: i32) -> Result<u32> {
    if x.base_level() > m {
        return Err(Error::BaseTooSmall {
            ordinal: x.clone(),
            base: m,
            needed: x.base_level(),
        });
    }
    Ok(tower_height(x, m))
}

/// `tow_n(x)` on naturals; `None` when the result would exceed `max_bits`.
pub fn tow_nat(n: u32, x: &BigUint, max_bits: u64) -> Result<Option<BigUint>> {
    if n == 0 {
        return Err(Error::TowerHeight);
    }
    if n > 1 && x < &BigUint::from(2u32) {
        return Err(crate::error::precondition("tower base must be at least 2"));
    }
    let mut t = x.clone();
    for _ in 1..n {
        let exp = match t.to_u64() {
            Some(e) => e,
            None => return Ok(None),
        };
        if (x.bits() - 1).saturating_mul(exp) > max_bits {
            return Ok(None);
        }
        t = num_traits::pow::pow(x.clone(), exp as usize);
    }
    Ok(Some(t))
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Ordinal::Fin(a), Ordinal::Fin(b)) => a.cmp(b),
            (Ordinal::Fin(_), Ordinal::Lev(_)) => Ordering::Less,
            (Ordinal::Lev(_), Ordinal::Fin(_)) => Ordering::Greater,
            (Ordinal::Lev(a), Ordinal::Lev(b)) => {
                if Arc::ptr_eq(a, b) {
                    return Ordering::Equal;
                }
                a.level.cmp(&b.level).then_with(|| {
                    for (x, y) in a.terms.iter().zip(&b.terms) {
                        let o = x.exp.cmp(&y.exp).then_with(|| x.coef.cmp(&y.coef));
                        if o != Ordering::Equal {
                            return o;
                        }
                    }
                    a.terms.len().cmp(&b.terms.len())
                })
            }
        }
    }
}

impl Add for &Ordinal {
    type Output = Ordinal;
    fn add(self, rhs: &Ordinal) -> Ordinal {
        Ordinal::add(self, rhs)
    }
}

impl Mul for &Ordinal {
    type Output = Ordinal;
    fn mul(self, rhs: &Ordinal) -> Ordinal {
        Ordinal::mul(self, rhs)
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::Fin(n)
    }
}

impl Ordinal {
    pub(crate) fn leveled_terms(&self) -> Option<(i32, &[Term])> {
        self.term_slice().map(|t| (self.base_level(), t))
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::syntax::render(self, crate::syntax::Style::Ascii))
    }
}

/// Serialized as its canonical ASCII rendering.
impl serde::Serialize for Ordinal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Debug for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ordinal({})", self)
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.exp, self.coef)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w() -> Ordinal {
        Ordinal::omega()
    }
    fn n(k: u64) -> Ordinal {
        Ordinal::nat(k)
    }
    fn wp(e: u64) -> Ordinal {
        Ordinal::omega_pow(&n(e))
    }
    fn e0() -> Ordinal {
        Ordinal::eps(0)
    }

    #[test]
    fn normalize_examples() {
        let ww = Ordinal::omega_pow(&w());
        let a = Ordinal::normalize(&[(0, n(0), ww.clone())]).unwrap();
        assert_eq!(a, ww);
        assert_eq!(a.base_level(), -1);
        let b = Ordinal::normalize(&[(-1, n(1), n(2)), (-1, n(1), n(1))]).unwrap();
        assert_eq!(b, w().mul(&n(3)));
        let c = Ordinal::normalize(&[(-1, n(0), n(5)), (-1, n(1), n(1))]).unwrap();
        assert_eq!(c, w());
        assert_eq!(
            Ordinal::normalize(&[(-2, n(0), n(1))]),
            Err(Error::BadLevel(-2))
        );
    }

    #[test]
    fn compare_examples() {
        assert!(Ordinal::omega_pow(&w()) < e0());
        let e0sq = Ordinal::eps_pow(0, &n(2));
        assert!(e0sq.mul(&n(2)) > e0sq.add(&e0()));
        assert_eq!(w().mul(&n(3)).cmp(&w().mul(&n(3))), Ordering::Equal);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(n(0).classify(), Kind::Zero);
        assert_eq!(w().add(&n(5)).classify(), Kind::Successor(w().add(&n(4))));
        assert_eq!(e0().mul(&n(2)).classify(), Kind::Limit);
    }

    #[test]
    fn add_examples() {
        assert_eq!(w().add(&wp(2)), wp(2));
        assert_eq!(wp(2).add(&w()).terms().len(), 2);
        let s = e0().add(&n(1));
        assert!(s > e0());
        assert_eq!(s.pred(), Some(e0()));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(w().add(&n(1)).mul(&w()), wp(2));
        assert_eq!(w().mul(&n(2)), w().add(&w()));
        let p = e0().mul(&w());
        let (lvl, terms) = p.leveled_terms().unwrap();
        assert_eq!(lvl, 0);
        assert_eq!(terms, &[Term::new(n(1), w())]);
        // (w+1)*2 = w*2 + 1
        assert_eq!(w().add(&n(1)).mul(&n(2)), w().mul(&n(2)).add(&n(1)));
    }

    #[test]
    fn natural_sum_examples() {
        let a = w().add(&n(1));
        assert_eq!(a.natural_sum(&w()), w().mul(&n(2)).add(&n(1)));
        assert_eq!(a.natural_sum(&n(0)), a);
        assert_eq!(e0().natural_sum(&e0()), e0().mul(&n(2)));
        // omega + 1 (+) omega differs from ordinal sum
        assert_eq!(a.add(&w()), w().mul(&n(2)));
    }

    #[test]
    fn level_and_height_examples() {
        assert_eq!(w().level_and_height().unwrap(), (0, 2));
        assert_eq!(Ordinal::omega_pow(&w()).level_and_height().unwrap(), (0, 3));
        assert_eq!(Ordinal::eps_pow(0, &e0()).level_and_height().unwrap(), (1, 3));
        assert_eq!(n(3).level_and_height().unwrap(), (0, 1));
        assert!(n(0).level_and_height().is_err());
    }

    #[test]
    fn psn_examples() {
        assert_eq!(n(0).psn(), 0);
        assert_eq!(wp(3).add(&w().mul(&n(3))).psn(), 3);
        assert_eq!(Ordinal::tower(2, 0).unwrap().psn(), 3);
        assert_eq!(Ordinal::eps_pow(0, &e0()), Ordinal::tower(2, 0).unwrap());
    }

    #[test]
    fn tow_examples() {
        assert_eq!(Ordinal::tower(2, -1).unwrap(), Ordinal::omega_pow(&w()));
        let t = |k, x: u64| tow_nat(k, &BigUint::from(x), 1 << 20).unwrap().unwrap();
        assert_eq!(t(3, 2), BigUint::from(16u32));
        assert_eq!(t(2, 3), BigUint::from(27u32));
        assert_eq!(t(1, 9), BigUint::from(9u32));
        assert!(tow_nat(0, &BigUint::from(2u32), 64).is_err());
        assert!(Ordinal::tower(0, 0).is_err());
        assert_eq!(tow_nat(4, &BigUint::from(4u32), 1 << 16).unwrap(), None);
    }

    #[test]
    fn to_base_examples() {
        let ww = Ordinal::omega_pow(&w());
        assert_eq!(ww.to_base(0).unwrap(), vec![Term::new(n(0), ww.clone())]);
        let a = e0().mul(&n(2)).add(&w());
        assert_eq!(
            a.to_base(0).unwrap(),
            vec![Term::new(n(1), n(2)), Term::new(n(0), w())]
        );
        let b = w().mul(&n(3)).add(&n(2));
        assert_eq!(
            b.to_base(-1).unwrap(),
            vec![Term::new(n(1), n(3)), Term::new(n(0), n(2))]
        );
        assert!(e0().to_base(-1).is_err());
    }

    #[test]
    fn omega_view_examples() {
        let a = Ordinal::eps_pow(0, &n(2)).mul(&n(3));
        assert_eq!(
            a.omega_view(),
            vec![OmegaTerm { exp: e0().mul(&n(2)), coef: 3 }]
        );
        let b = wp(2).mul(&n(2)).add(&w()).add(&n(5));
        let exps: Vec<_> = b.omega_view().into_iter().map(|t| (t.exp, t.coef)).collect();
        assert_eq!(exps, vec![(n(2), 2), (n(1), 1), (n(0), 5)]);
        let c = e0().mul(&n(2)).add(&w());
        assert_eq!(
            c.omega_view(),
            vec![
                OmegaTerm { exp: e0(), coef: 2 },
                OmegaTerm { exp: n(1), coef: 1 }
            ]
        );
        assert_eq!(Ordinal::from_omega_view(&c.omega_view()), c);
    }

    #[test]
    fn epsilon_fixpoints() {
        assert_eq!(Ordinal::omega_pow(&e0()), e0());
        assert_eq!(Ordinal::eps_pow(0, &Ordinal::eps(1)), Ordinal::eps(1));
        assert_eq!(w().mul(&e0()), e0());
        assert_eq!(Ordinal::eps_pow(-1, &Ordinal::eps(2)), Ordinal::eps(2));
        // eps_0^(eps_1 + 1) = eps_1 * eps_0
        let x = Ordinal::eps_pow(0, &Ordinal::eps(1).add(&n(1)));
        assert_eq!(x, Ordinal::eps(1).mul(&e0()));
    }
}
