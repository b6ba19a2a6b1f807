//! Orthogonal arrays and the hyperplane averaging condition.

use super::{all_words, from_indices, is_phi_design, WeightSet, Word};
use crate::report::{exhaustive_equivalence, EquivalenceReport};
use crate::util::combinations;
use crate::Result;

/// `f_{D,I}`: how often each pattern on the coordinates `I` occurs in `D`.
/// `counts` is indexed by the base-`q` value of the pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub coords: Vec<usize>,
    pub q: usize,
    pub counts: Vec<u64>,
}

impl CountTable {
    pub fn get(&self, pattern: &Word) -> u64 {
        self.counts[pattern.index(self.q)]
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.counts.windows(2).all(|w| w[0] == w[1])
    }
}

/// Coordinates are 0-based.
pub fn count_table(d: &[Word], coords: &[usize], q: usize) -> CountTable {
    let mut counts = vec![0u64; q.pow(coords.len() as u32)];
    for x in d {
        counts[x.restrict(coords).index(q)] += 1;
    }
    CountTable { coords: coords.to_vec(), q, counts }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OaVerdict {
    pub holds: bool,
    /// `λ = |D| / q^t` when `D` is an orthogonal array.
    pub index: Option<u64>,
}

/// Whether `D` is an orthogonal array of strength `t`.
pub fn oa_check(d: &[Word], t: usize, n: usize, q: usize) -> OaVerdict {
    assert!((1..=n).contains(&t), "strength must lie in 1..=n");
    let fail = OaVerdict { holds: false, index: None };
    if d.is_empty() {
        return fail;
    }
    for coords in combinations(n, t) {
        if !count_table(d, &coords, q).is_constant() {
            return fail;
        }
    }
    OaVerdict { holds: true, index: Some(d.len() as u64 / q.pow(t as u32) as u64) }
}

/// Every nonempty hyperplane `{a : b·a = c}` of `(Z/qZ)^t` sees average
/// count exactly `|D|/q^t`, for every coordinate set of size `t`.
pub fn hyperplane_average_check(d: &[Word], n: usize, q: usize, t: usize) -> bool {
    assert!(t <= n, "t exceeds n");
    if d.is_empty() {
        return false;
    }
    let patterns = all_words(t, q);
    let qt = q.pow(t as u32) as u64;
    let total = d.len() as u64;
    combinations(n, t).into_iter().all(|coords| {
        let table = count_table(d, &coords, q);
        patterns.iter().filter(|b| b.weight() > 0).all(|b| {
            let mut sums = vec![0u64; q];
            let mut sizes = vec![0u64; q];
            for a in &patterns {
                let c = b.dot(a, q);
                sums[c] += table.get(a);
                sizes[c] += 1;
            }
            (0..q).all(|c| sizes[c] == 0 || sums[c] * qt == total * sizes[c])
        })
    })
}

/// Exhaustive three-way agreement of [`oa_check`], [`is_phi_design`] on
/// `Φ_[t]`, and [`hyperplane_average_check`] over all nonempty subsets.
pub fn oa_design_equivalence(n: usize, q: usize, t: usize, budget: u64) -> Result<EquivalenceReport> {
    let size = q.pow(n as u32);
    let weights = WeightSet::upto(n, t)?;
    exhaustive_equivalence(&format!("orthogonal array vs design H({n},{q}) t={t}"), size, budget, |s| {
        let d = from_indices(s, n, q);
        let phi = is_phi_design(&d, &weights, n, q).map(|c| c.verdict()).unwrap_or(false);
        vec![
            ("orthogonal_array".into(), oa_check(&d, t, n, q).holds),
            ("design".into(), phi),
            ("hyperplanes".into(), hyperplane_average_check(&d, n, q, t)),
        ]
    })
}

/// `q^t` divides `|D|`.
pub fn divisibility_check(size: usize, t: usize, q: usize) -> bool {
    u32::try_from(t).ok().and_then(|t| q.checked_pow(t)).is_some_and(|m| size.is_multiple_of(m))
}
