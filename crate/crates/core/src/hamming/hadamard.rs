//! Hadamard matrices and minimum-size `Φ_[2]`-designs of `H(4ℓ−1, 2)`.

use std::fmt;
use std::str::FromStr;

use super::{is_phi_design, WeightSet, Word};
use crate::graph::Certificate;
use crate::{Error, Result};

/// A square `±1` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HadamardMatrix {
    rows: Vec<Vec<i8>>,
}

impl HadamardMatrix {
    /// Square `±1` entries are required; orthogonality is not.
    pub fn new(rows: Vec<Vec<i8>>) -> Result<Self> {
        let m = rows.len();
        if m == 0 || rows.iter().any(|r| r.len() != m) {
            return Err(Error::InvalidArgument("matrix must be square and nonempty".into()));
        }
        if rows.iter().flatten().any(|&x| x != 1 && x != -1) {
            return Err(Error::InvalidArgument("entries must be 1 or -1".into()));
        }
        Ok(HadamardMatrix { rows })
    }

    /// Sylvester matrix of order `2^k`.
    pub fn sylvester(k: usize) -> Self {
        let mut rows = vec![vec![1i8]];
        for _ in 0..k {
            let top: Vec<Vec<i8>> = rows.iter().map(|r| r.iter().chain(r).copied().collect()).collect();
            let bottom: Vec<Vec<i8>> =
                rows.iter().map(|r| r.iter().copied().chain(r.iter().map(|x| -x)).collect()).collect();
            rows = top.into_iter().chain(bottom).collect();
        }
        HadamardMatrix { rows }
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i8>] {
        &self.rows
    }

    /// `H Hᵀ = m I`.
    pub fn is_hadamard(&self) -> bool {
        let m = self.order() as i64;
        self.rows.iter().enumerate().all(|(i, a)| {
            self.rows.iter().enumerate().all(|(j, b)| {
                let dot: i64 = a.iter().zip(b).map(|(&x, &y)| (x * y) as i64).sum();
                dot == if i == j { m } else { 0 }
            })
        })
    }
}

impl FromStr for HadamardMatrix {
    type Err = Error;

    /// Whitespace-separated `1`/`-1` entries, one row per line.
    fn from_str(s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (i, line) in s.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|tok| match tok {
                    "1" | "+1" | "+" => Ok(1),
                    "-1" | "-" => Ok(-1),
                    other => Err(Error::Parse { line: i + 1, msg: format!("bad entry {other:?}") }),
                })
                .collect::<Result<Vec<i8>>>()?;
            rows.push(row);
        }
        HadamardMatrix::new(rows)
    }
}

impl fmt::Display for HadamardMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = r.iter().map(|x| format!("{x:>2}")).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

fn pair_weights(n: usize) -> Result<WeightSet> {
    WeightSet::upto(n, 2)
}

/// Rows are the words with `0 ↦ 1`, `1 ↦ −1`, followed by a `1`.
pub fn design_to_hadamard(d: &[Word], n: usize) -> Result<HadamardMatrix> {
    if n < 3 || !(n + 1).is_multiple_of(4) {
        return Err(Error::precondition(format!("n = {n} is not of the form 4l-1")));
    }
    if d.len() != n + 1 {
        return Err(Error::precondition(format!("design has {} words, expected {}", d.len(), n + 1)));
    }
    let cert = is_phi_design(d, &pair_weights(n)?, n, 2)?;
    if !cert.verdict() {
        return Err(Error::precondition(format!(
            "not a design on weights 1,2 (witness {})",
            cert.counterexample().unwrap_or("?")
        )));
    }
    let rows = d.iter().map(|w| w.digits().iter().map(|&b| if b == 0 { 1 } else { -1 }).chain([1]).collect()).collect();
    let h = HadamardMatrix::new(rows)?;
    if !h.is_hadamard() {
        return Err(Error::precondition("rows are not orthogonal"));
    }
    Ok(h)
}

/// Negate columns so row 0 is all ones, drop it, map `1 ↦ 0`, `−1 ↦ 1`, and
/// read the columns as words.
pub fn hadamard_to_design(h: &HadamardMatrix) -> Result<Vec<Word>> {
    let m = h.order();
    if m < 4 || !m.is_multiple_of(4) {
        return Err(Error::precondition(format!("order {m} is not a positive multiple of 4")));
    }
    if !h.is_hadamard() {
        return Err(Error::precondition("matrix is not Hadamard"));
    }
    let signs = &h.rows()[0];
    let design: Vec<Word> = (0..m)
        .map(|col| Word::new(h.rows()[1..].iter().map(|r| if r[col] * signs[col] == 1 { 0 } else { 1 }).collect()))
        .collect();
    let n = m - 1;
    if !is_phi_design(&design, &pair_weights(n)?, n, 2)?.verdict() {
        return Err(Error::precondition("converted words fail the design check"));
    }
    Ok(design)
}

/// Size facts for a `Φ_[2]`-design of `H(n, 2)`: `|D| > n` and `4 | |D|`,
/// with the zero-count identities behind the first bound.
pub fn size_bound_check(d: &[Word], n: usize) -> Result<Certificate> {
    let mut cert = is_phi_design(d, &pair_weights(n.max(2))?, n, 2)?;
    if !cert.verdict() {
        return Ok(cert);
    }
    let size = d.len();
    cert.push_fact("size exceeds n", size > n, format!("{size} > {n}"));
    cert.push_fact("divisible by 4", size.is_multiple_of(4), format!("{size} mod 4 = {}", size % 4));
    if !size.is_multiple_of(4) || n < 2 {
        return Ok(cert);
    }
    let l = (size / 4) as i128;
    let n_i = n as i128;
    let origin = &d[0];
    let z: Vec<i128> = d[1..].iter().map(|v| (n - v.sub(origin, 2).weight()) as i128).collect();
    let sum: i128 = z.iter().sum();
    let sum_sq: i128 = z.iter().map(|x| x * x).sum();
    let expect_sum = n_i * (2 * l - 1);
    let expect_sq = n_i * (n_i - 1) * (l - 1) + n_i * (2 * l - 1);
    cert.push_fact("zero count sum", sum == expect_sum, format!("{sum} = {expect_sum}"));
    cert.push_fact("zero count square sum", sum_sq == expect_sq, format!("{sum_sq} = {expect_sq}"));
    let lhs = sum_sq * (4 * l - 1);
    cert.push_fact("cauchy-schwarz", lhs >= sum * sum, format!("{lhs} >= {}", sum * sum));
    if n + 1 == size {
        let z0 = 2 * l - 1;
        cert.push_fact("equal zero counts", z.iter().all(|&x| x == z0), format!("all {z0}"));
    }
    Ok(cert)
}
