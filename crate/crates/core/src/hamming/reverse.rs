//! Designs for the reverse Laplacian order: subcubes, and the random-walk
//! order on even hypercubes.

use super::{build_hamming, from_indices, is_phi_design, to_indices, PhiTester, WeightSet, Word};
use crate::graph::Certificate;
use crate::report::MinimalAudit;
use crate::search::{enumerate_minimal, union_closure_audit, SearchProblem};
use crate::{Error, Result};

/// `{x : x|_I = a}` with 0-based coordinates `I`; averages `Φ_{t+1..n}`.
pub fn subcube(n: usize, q: usize, coords: &[usize], pattern: &Word) -> Result<Vec<Word>> {
    if coords.len() != pattern.len() || coords.len() > n {
        return Err(Error::InvalidArgument("coordinate set and pattern lengths differ".into()));
    }
    pattern.check(coords.len(), q)?;
    let mut sorted = coords.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != coords.len() || sorted.last().is_some_and(|&i| i >= n) {
        return Err(Error::InvalidArgument("coordinates must be distinct and below n".into()));
    }
    Ok(super::all_words(n, q).into_iter().filter(|x| x.restrict(coords) == *pattern).collect())
}

/// The `qn` sets `D_{i,a}` fixing one coordinate, ordered by `(i, a)`.
pub fn fixed_coordinate_sets(n: usize, q: usize) -> Vec<Vec<Word>> {
    (0..n)
        .flat_map(|i| (0..q).map(move |a| subcube(n, q, &[i], &Word::new(vec![a as u8])).expect("valid subcube")))
        .collect()
}

/// Every `Φ_{2..n}`-design by exhaustive enumeration; checks that the
/// minimal ones are exactly the sets `D_{i,a}` and that every design is a
/// union of them.
pub fn minimal_reverse_enumeration(n: usize, q: usize, budget: u64) -> Result<MinimalAudit> {
    if n < 2 {
        return Err(Error::InvalidArgument("need n >= 2".into()));
    }
    let tester = PhiTester::new(n, q, WeightSet::above(n, 1)?)?;
    let problem = SearchProblem::new(&tester).budget(budget);
    let max_size = q.pow(n as u32);
    let result = enumerate_minimal(&problem, max_size)?;
    let mut expected: Vec<Vec<usize>> = fixed_coordinate_sets(n, q).iter().map(|d| to_indices(d, q)).collect();
    expected.sort();
    let render = |m: &Vec<usize>| from_indices(m, n, q).iter().map(ToString::to_string).collect();
    Ok(MinimalAudit {
        problem: format!("H({n},{q}) weights 2..{n}"),
        max_size,
        designs_found: result.all.len(),
        matches_expected: result.minimal == expected,
        unions_of_minimal: union_closure_audit(&result.minimal, &result.all),
        minimal: result.minimal.iter().map(render).collect(),
        nodes_expanded: result.nodes_expanded,
    })
}

/// Weights `{1..n} \ {n/2}`: every eigenspace except the middle one.
pub fn random_walk_weights(n: usize) -> Result<WeightSet> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::InvalidArgument(format!("n = {n} must be even and positive")));
    }
    WeightSet::new(n, (1..=n).filter(|&w| w != n / 2))
}

/// Exact extremal check on `H(n, 2)` for even `n`: `D` averages all but the
/// middle eigenspace, `m = n|D|/2^n` is a positive integer, and every vertex
/// has exactly `m` neighbours in `D`.
pub fn random_walk_extremal_check(n: usize, d: &[Word]) -> Result<Certificate> {
    let weights = random_walk_weights(n)?;
    let mut cert = is_phi_design(d, &weights, n, 2)?;
    let g = build_hamming(n, 2)?;
    let total = 1usize << n;
    let numerator = n * d.len();
    let integral = numerator.is_multiple_of(total);
    cert.push_fact("hypercube divisibility", integral, format!("2^{n} | {numerator}"));
    if !integral {
        return Ok(cert);
    }
    let m = numerator / total;
    cert.push_note("m", m.to_string());
    let mut member = vec![false; total];
    for v in to_indices(d, 2) {
        member[v] = true;
    }
    let bad = (0..total).find(|&v| g.neighbors(v).iter().filter(|&&u| member[u]).count() != m);
    let detail = match bad {
        None => format!("every vertex has {m} neighbours in D"),
        Some(v) => format!("vertex {} differs", Word::from_index(v, n, 2)),
    };
    cert.push_fact("constant neighbour count", m > 0 && bad.is_none(), detail);
    Ok(cert)
}
