//! Fundamental sequences and the step-down relation.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ordinal::Ordinal;

/// `lam[n]` for a limit `lam`.
pub fn fs(lam: &Ordinal, n: u64) -> Result<Ordinal> {
    if n == 0 {
        return Err(Error::ZeroIndex);
    }
    let Some((m, terms)) = lam.leveled_terms() else {
        return Err(Error::NotLimit(lam.clone()));
    };
    let (last, prefix) = terms.split_last().expect("leveled terms are nonempty");
    if !prefix.is_empty() || last.exp.is_zero() {
        // Additive tail: only the last summand moves. A last term with zero
        // exponent is a coefficient below eps_m and must itself be a limit.
        let tail = if last.exp.is_zero() {
            last.coef.clone()
        } else {
            Ordinal::from_terms(m, vec![last.clone()])
        };
        if !tail.is_limit() {
            return Err(Error::NotLimit(lam.clone()));
        }
        let head = Ordinal::from_terms(m, prefix.to_vec());
        return Ok(head.add(&fs(&tail, n)?));
    }
    monomial(m, &last.exp, &last.coef, n)
}

/// `(eps_m^e * c)[n]` with `e > 0`.
fn monomial(m: i32, e: &Ordinal, c: &Ordinal, n: u64) -> Result<Ordinal> {
    if *c == Ordinal::ONE {
        return Ok(match e.pred() {
            Some(p) => Ordinal::eps_pow(m, &p).mul(&eps_step(m, n)),
            None => Ordinal::eps_pow(m, &fs(e, n)?),
        });
    }
    let power = Ordinal::eps_pow(m, e);
    Ok(match c.pred() {
        Some(p) => power.mul(&p).add(&monomial(m, e, &Ordinal::ONE, n)?),
        None => power.mul(&fs(c, n)?),
    })
}

/// `eps_m[n]`, with `omega[n] = n`.
fn eps_step(m: i32, n: u64) -> Ordinal {
    if m == -1 {
        return Ordinal::nat(n);
    }
    let height = u32::try_from(n).expect("fundamental sequence index fits a tower height");
    Ordinal::tower(height, m - 1).expect("height and level are valid")
}

/// One `[n]`-step: the fundamental sequence at limits, the predecessor at
/// successors.
pub fn step_down(a: &Ordinal, n: u64) -> Result<Ordinal> {
    if a.is_zero() {
        return Err(Error::Zero { what: "step_down" });
    }
    match a.pred() {
        Some(p) => Ok(p),
        None => fs(a, n),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Chain {
    pub start: Ordinal,
    pub index: u64,
    pub steps: Vec<Ordinal>,
}

impl Chain {
    pub fn last(&self) -> &Ordinal {
        self.steps.last().unwrap_or(&self.start)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reach {
    Yes(Chain),
    No,
    BudgetExceeded(Chain),
}

/// Does `beta =>_n alpha` hold? Walks the deterministic chain from `beta`
/// and stops as soon as it drops below `alpha`.
pub fn reaches(beta: &Ordinal, alpha: &Ordinal, n: u64, budget: u64) -> Result<Reach> {
    if n == 0 {
        return Err(Error::ZeroIndex);
    }
    let mut chain = Chain { start: beta.clone(), index: n, steps: Vec::new() };
    let mut cur = beta.clone();
    loop {
        if cur == *alpha {
            return Ok(Reach::Yes(chain));
        }
        if cur < *alpha || cur.is_zero() {
            return Ok(Reach::No);
        }
        if chain.steps.len() as u64 >= budget {
            return Ok(Reach::BudgetExceeded(chain));
        }
        cur = step_down(&cur, n)?;
        chain.steps.push(cur.clone());
    }
}
