//! The kernel `K(a*, a) = g_q(a* − a)·q^{t−1}` on `(Z/qZ)^t`, where `g_q(b)`
//! is `gcd(b₁, …, b_t, q)`. It is diagonal in the characters, and its
//! eigenvalues are all positive, which is what makes count tables
//! recoverable from hyperplane sums.

use num_integer::Integer;

use super::{all_words, Word};
use crate::exact::totient;
use crate::graph::DEFAULT_DENSE_LIMIT;
use crate::{Error, Result};

fn g_q(b: &Word, q: usize) -> usize {
    b.digits().iter().fold(q, |g, &x| g.gcd(&(x as usize)))
}

/// Kernel of order `q^t`, rows and columns in vertex-index order.
pub fn radon_kernel(t: usize, q: usize) -> Result<Vec<Vec<u64>>> {
    let size = u32::try_from(t).ok().and_then(|t| q.checked_pow(t)).filter(|&s| s <= DEFAULT_DENSE_LIMIT);
    let size = size.ok_or(Error::SizeLimit {
        what: "kernel",
        size: (q as u128).saturating_pow(t as u32),
        limit: DEFAULT_DENSE_LIMIT as u128,
    })?;
    if t == 0 || q < 2 {
        return Err(Error::InvalidArgument("kernel needs t >= 1 and q >= 2".into()));
    }
    let scale = q.pow(t as u32 - 1) as u64;
    let words = all_words(t, q);
    debug_assert_eq!(words.len(), size);
    Ok(words.iter().map(|a_star| words.iter().map(|a| g_q(&a_star.sub(a, q), q) as u64 * scale).collect()).collect())
}

/// `q^{t−1} Σ_{q' | g_q(y)} φ(q/q')·q'^t`, the kernel eigenvalue on `χ_y`.
pub fn radon_kernel_eigenvalue(y: &Word, q: usize) -> u64 {
    let t = y.len() as u32;
    let g = g_q(y, q);
    let sum: u64 = (1..=g).filter(|d| g.is_multiple_of(*d)).map(|d| totient(q / d) as u64 * (d as u64).pow(t)).sum();
    (q as u64).pow(t.saturating_sub(1)) * sum
}
