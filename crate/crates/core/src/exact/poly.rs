//! Dense polynomials over the integers, lowest degree first.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub(crate) fn trim(p: &mut Vec<BigInt>) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Quotient and remainder of `a / b` for monic `b`.
pub fn divmod_monic(a: &[BigInt], b: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
    let db = b.len() - 1;
    assert!(b[db].is_one(), "divisor must be monic");
    let mut rem = a.to_vec();
    trim(&mut rem);
    if rem.len() <= db {
        return (vec![BigInt::zero()], rem);
    }
    let mut quot = vec![BigInt::zero(); rem.len() - db];
    for i in (db..rem.len()).rev() {
        let c = std::mem::take(&mut rem[i]);
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(db) {
            rem[i - db + j] -= &c * bj;
        }
        quot[i - db] = c;
    }
    rem.truncate(db.max(1));
    trim(&mut quot);
    (quot, rem)
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division; `None` if `b` does not divide `a` over the rationals
/// with integer quotient. `b` need not be monic but its leading coefficient
/// must divide every step.
pub fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut b = b.to_vec();
    trim(&mut b);
    let db = b.len() - 1;
    let lead = b[db].clone();
    assert!(!lead.is_zero(), "division by the zero polynomial");
    let mut rem = a.to_vec();
    trim(&mut rem);
    if rem.len() <= db {
        return rem.iter().all(Zero::is_zero).then(|| vec![BigInt::zero()]);
    }
    let mut quot = vec![BigInt::zero(); rem.len() - db];
    for i in (db..rem.len()).rev() {
        if rem[i].is_zero() {
            continue;
        }
        if !(&rem[i] % &lead).is_zero() {
            return None;
        }
        let c = &rem[i] / &lead;
        for (j, bj) in b.iter().enumerate() {
            rem[i - db + j] -= &c * bj;
        }
        quot[i - db] = c;
    }
    rem.iter().all(Zero::is_zero).then_some(quot)
}

/// Evaluate at a float point (Horner).
pub fn eval_f64(p: &[BigInt], x: f64) -> f64 {
    use num_traits::ToPrimitive;
    p.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
}
