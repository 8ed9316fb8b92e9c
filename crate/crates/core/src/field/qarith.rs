//! Gaussian q-integers, q-factorials and q-binomial coefficients.

use super::FieldElement;
use crate::error::{Error, Result};

/// (n)_q = 1 + q + … + q^{n-1}.
pub fn q_integer(n: u64, q: &FieldElement) -> FieldElement {
    let mut acc = q.ctx().zero();
    let mut pw = q.ctx().one();
    for _ in 0..n {
        acc += &pw;
        pw *= q;
    }
    acc
}

/// (n)!_q = (1)_q (2)_q … (n)_q.
pub fn q_factorial(n: u64, q: &FieldElement) -> FieldElement {
    (1..=n).fold(q.ctx().one(), |acc, k| acc * q_integer(k, q))
}

/// All coefficients (n choose m)_q for m in 0..=n, by the q-Pascal rule
/// C(n, m) = q^m C(n-1, m) + C(n-1, m-1).
pub fn q_binomial_row(n: u64, q: &FieldElement) -> Result<Vec<FieldElement>> {
    if q.is_zero() {
        return Err(Error::ZeroQ);
    }
    let ctx = q.ctx();
    let mut powers = vec![ctx.one()];
    for m in 1..=n as usize {
        let next = &powers[m - 1] * q;
        powers.push(next);
    }
    let mut row = vec![ctx.one()];
    for k in 1..=n as usize {
        let mut next = Vec::with_capacity(k + 1);
        next.push(ctx.one());
        for m in 1..k {
            next.push(&powers[m] * &row[m] + &row[m - 1]);
        }
        next.push(ctx.one());
        row = next;
    }
    Ok(row)
}

/// (n choose m)_q.
pub fn q_binomial(n: u64, m: u64, q: &FieldElement) -> Result<FieldElement> {
    if m > n {
        return Err(Error::BinomialRange { n, m });
    }
    Ok(q_binomial_row(n, q)?.swap_remove(m as usize))
}

/// Whether (n choose m)_q = 0 for every 0 < m < n, checked coefficient by
/// coefficient.
pub fn gaussian_vanishing(n: u64, q: &FieldElement) -> Result<bool> {
    let row = q_binomial_row(n, q)?;
    Ok(n >= 1 && row[1..n as usize].iter().all(FieldElement::is_zero))
}

/// The root-of-unity characterization of [`gaussian_vanishing`] for n ≥ 2:
/// in characteristic 0, q has order exactly n; in characteristic p, writing
/// n = N p^r with p ∤ N, q has order exactly N.
pub fn gaussian_vanishing_closed_form(n: u64, q: &FieldElement) -> Result<bool> {
    if q.is_zero() {
        return Err(Error::ZeroQ);
    }
    let p = q.ctx().characteristic();
    let mut target = n;
    if p != 0 {
        while target.is_multiple_of(p) {
            target /= p;
        }
    }
    Ok(q.root_of_unity_order() == Some(target))
}
