//! Greatest ordinals below a bound with small pseudonorm, the inflation
//! function `F`, and the estimation lemma.

use std::collections::HashMap;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{precondition, Result};
use crate::hardy::{largeness, FinSet, Largeness};
use crate::ordinal::{tow_nat, OmegaTerm, Ordinal};

/// Memo table for [`greatest_below`], keyed on `(a, alpha)`.
#[derive(Debug, Default)]
pub struct GreatestBelow {
    memo: HashMap<(u64, Ordinal), Ordinal>,
}

impl GreatestBelow {
    pub fn new() -> Self {
        Self::default()
    }

    /// The greatest ordinal below `alpha` whose pseudonorm is at most `a`.
    pub fn get(&mut self, a: u64, alpha: &Ordinal) -> Result<Ordinal> {
        if a == 0 || alpha.is_zero() {
            return Err(precondition("needs a > 0 and alpha > 0"));
        }
        if let Some(v) = self.memo.get(&(a, alpha.clone())) {
            return Ok(v.clone());
        }
        let v = self.compute(a, alpha)?;
        self.memo.insert((a, alpha.clone()), v.clone());
        Ok(v)
    }

    fn compute(&mut self, a: u64, alpha: &Ordinal) -> Result<Ordinal> {
        if let Some(n) = alpha.as_finite() {
            // Unfolded successor clause.
            return Ok(Ordinal::nat((n - 1).min(a)));
        }
        // Every infinite ordinal has psn >= 2, so nothing infinite qualifies;
        // the power clauses below would otherwise produce omega + 1.
        if a == 1 {
            return Ok(Ordinal::ONE);
        }
        if let Some(p) = alpha.pred() {
            let mut cur = p;
            loop {
                if cur.psn() <= a {
                    return Ok(cur);
                }
                match cur.pred() {
                    Some(q) => cur = q,
                    None => return self.get(a, &cur),
                }
            }
        }
        let (m, terms) = alpha.leveled_terms().expect("infinite limit");
        if let Some(m) = alpha.epsilon_index() {
            if m == -1 {
                return Ok(Ordinal::nat(a));
            }
            let tower = Ordinal::tower(a as u32, m - 1)?;
            return self.get(a, &tower);
        }
        let (last, prefix) = terms.split_last().expect("nonempty");
        let (nu, psi) = (&last.exp, &last.coef);
        let power = Ordinal::eps_pow(m, nu);
        let tail = power.mul(psi);
        if prefix.is_empty() {
            if *psi == Ordinal::ONE {
                return self.power_clause(a, m, nu);
            }
            if psi.is_limit() {
                return if nu.psn() <= a {
                    Ok(power.mul(&self.get(a, psi)?).add(&self.get(a, &power)?))
                } else {
                    self.power_clause(a, m, nu)
                };
            }
        }
        let xi = Ordinal::from_terms(m, prefix.to_vec());
        match psi.pred() {
            // alpha = xi' + eps_m^nu with xi' = xi + eps_m^nu * phi; a single
            // term with successor coefficient also lands here.
            Some(phi) => {
                let xi1 = xi.add(&power.mul(&phi));
                if xi1.psn() <= a {
                    Ok(xi1.add(&self.get(a, &power)?))
                } else {
                    self.get(a, &xi1)
                }
            }
            None => {
                if xi.psn() <= a {
                    Ok(xi.add(&self.get(a, &tail)?))
                } else {
                    self.get(a, &xi)
                }
            }
        }
    }

    /// `eps_m^nu` with `nu > 1`.
    fn power_clause(&mut self, a: u64, m: i32, nu: &Ordinal) -> Result<Ordinal> {
        let g = self.get(a, nu)?;
        let lead = Ordinal::eps_pow(m, &g);
        let coef = self.get(a, &Ordinal::eps(m))?;
        Ok(lead.mul(&coef).add(&self.get(a, &lead)?))
    }
}

/// One-shot [`GreatestBelow::get`].
pub fn greatest_below(a: u64, alpha: &Ordinal) -> Result<Ordinal> {
    GreatestBelow::new().get(a, alpha)
}

/// `F` by its explicit base-omega formula: infinite-exponent terms doubled,
/// finite-exponent coefficients replaced by suffix sums, plus the number of
/// infinite-exponent monomials.
pub fn inflate(alpha: &Ordinal) -> Ordinal {
    let view = alpha.omega_view();
    let (infinite, finite): (Vec<&OmegaTerm>, Vec<&OmegaTerm>) =
        view.iter().partition(|t| !t.exp.is_finite());
    let mut out: Vec<OmegaTerm> = infinite
        .iter()
        .map(|t| OmegaTerm { exp: t.exp.clone(), coef: 2 * t.coef })
        .collect();
    let count: u64 = infinite.iter().map(|t| t.coef).sum();
    if let Some(top) = finite.first().and_then(|t| t.exp.as_finite()) {
        let mut sum = 0;
        for j in (0..=top).rev() {
            sum += finite
                .iter()
                .find(|t| t.exp.as_finite() == Some(j))
                .map_or(0, |t| t.coef);
            out.push(OmegaTerm { exp: Ordinal::nat(j), coef: sum });
        }
    }
    Ordinal::from_omega_view(&out).add(&Ordinal::nat(count))
}

/// `F` by its defining clauses, splitting off the last base-omega monomial
/// (always a `>>` split). Used to cross-check [`inflate`].
pub fn inflate_by_clauses(alpha: &Ordinal) -> Ordinal {
    if alpha.is_zero() {
        return Ordinal::ZERO;
    }
    if let Some(p) = alpha.pred() {
        return inflate_by_clauses(&p).succ();
    }
    let mut view = alpha.omega_view();
    let last = view.pop().expect("nonzero");
    let mono = Ordinal::omega_pow(&last.exp);
    let single = match last.exp.as_finite() {
        Some(n) => (0..=n).rev().fold(Ordinal::ZERO, |acc, j| {
            acc.add(&Ordinal::omega_pow(&Ordinal::nat(j)))
        }),
        None => mono.mul(&Ordinal::nat(2)).succ(),
    };
    if last.coef > 1 {
        view.push(OmegaTerm { exp: last.exp, coef: last.coef - 1 });
    }
    if view.is_empty() {
        return single;
    }
    inflate_by_clauses(&Ordinal::from_omega_view(&view)).natural_sum(&single)
}

/// `beta >> alpha`: the last base-omega exponent of `beta` is at least the
/// first one of `alpha` (vacuous when either is zero).
pub fn much_greater(beta: &Ordinal, alpha: &Ordinal) -> bool {
    match (beta.omega_view().last(), alpha.omega_view().first()) {
        (Some(b), Some(a)) => b.exp >= a.exp,
        _ => true,
    }
}

/// `2 * tow_a^(m+2)(a + 1)`, the pseudonorm bound for `F(alpha)` when
/// `psn(alpha) = a` and `l(alpha) - 1 = m`. `None` if it exceeds `max_bits`.
pub fn inflate_psn_bound(a: u64, m: i32, max_bits: u64) -> Result<Option<BigUint>> {
    if a == 0 {
        return Err(precondition("pseudonorm bound needs a > 0"));
    }
    if m < -1 {
        return Err(crate::error::Error::BadLevel(m));
    }
    let height = u32::try_from(a).map_err(|_| precondition("tower height too large"))?;
    let mut x = BigUint::from(a + 1);
    for _ in 0..(m + 2) {
        match tow_nat(height, &x, max_bits)? {
            Some(v) => x = v,
            None => return Ok(None),
        }
    }
    Ok(Some(x * 2u32))
}

/// A labelling of a finite set by ordinals, meant to be strictly
/// decreasing with `psn(G(x)) <= x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecreasingMap {
    pub domain: FinSet,
    pub values: Vec<Ordinal>,
}

impl DecreasingMap {
    pub fn new(domain: FinSet, values: Vec<Ordinal>) -> Result<Self> {
        if domain.len() != values.len() {
            return Err(precondition("one value per domain element is required"));
        }
        Ok(DecreasingMap { domain, values })
    }

    pub fn get(&self, x: u64) -> Option<&Ordinal> {
        let i = self.domain.elements().binary_search(&x).ok()?;
        Some(&self.values[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &Ordinal)> {
        self.domain.elements().iter().copied().zip(&self.values)
    }

    /// The first broken invariant, if any.
    pub fn violation(&self) -> Option<String> {
        for (x, v) in self.iter() {
            if v.psn() > x {
                return Some(format!("psn({v}) = {} exceeds {x}", v.psn()));
            }
        }
        self.values
            .windows(2)
            .position(|w| w[0] <= w[1])
            .map(|i| format!("not strictly decreasing at {}", self.domain.elements()[i + 1]))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum EstimationVerdict {
    /// The checked set is `(F(alpha) + 1)`-small. `checked` is `None` when no
    /// element is labelled `>= beta`, which makes the claim vacuous.
    Pass { checked: Option<FinSet>, bound: Ordinal },
    /// The checked set is `(F(alpha) + 1)`-large: a counterexample.
    Fail { checked: FinSet, bound: Ordinal, largeness: Largeness },
    HypothesisViolation { reason: String },
}

impl EstimationVerdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, EstimationVerdict::Pass { .. })
    }
}

/// Checks one instance of the estimation lemma: with `w` the largest
/// element labelled `>= beta`, `{x in A : x <= w}` is at most
/// `F(alpha)`-large. `beta = 0` is the plain lemma.
pub fn check_estimation(
    a: &FinSet,
    g: &DecreasingMap,
    beta: &Ordinal,
    alpha: &Ordinal,
) -> Result<EstimationVerdict> {
    let violation = |reason: String| Ok(EstimationVerdict::HypothesisViolation { reason });
    if g.domain != *a {
        return violation("labelling is not defined on exactly the set".into());
    }
    if a.min() == 0 || (!beta.is_zero() && a.min() <= 1) {
        return violation(format!("min {a} is too small"));
    }
    if !much_greater(beta, alpha) {
        return violation(format!("{beta} >> {alpha} fails"));
    }
    if let Some(reason) = g.violation() {
        return violation(reason);
    }
    let top = beta.add(alpha);
    if let Some((x, v)) = g.iter().find(|(_, v)| **v > top) {
        return violation(format!("label {v} of {x} exceeds {top}"));
    }
    let bound = inflate(alpha);
    let w = g.iter().filter(|(_, v)| *v >= beta).map(|(x, _)| x).max();
    let Some(w) = w else {
        return Ok(EstimationVerdict::Pass { checked: None, bound });
    };
    let checked = a.between(0, w).expect("w is an element");
    let l = largeness(&checked, &bound.succ())?;
    Ok(if l.is_large() {
        EstimationVerdict::Fail { checked, bound, largeness: l }
    } else {
        EstimationVerdict::Pass { checked: Some(checked), bound }
    })
}
