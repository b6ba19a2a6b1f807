//! Johnson graphs `J(n, k)`: `k`-subsets of `{1..n}` adjacent when they share
//! `k − 1` elements.
//!
//! Vertices are ordered by colex rank. The Laplacian eigenvalues
//! `λ_t = t(n + 1 − t)`, `t = 0..k`, are distinct when `k ≤ n/2`, so the
//! Lagrange projectors of the graph itself decide `Φ_S`-designs exactly, and
//! `Φ_{[t]}`-designs are the combinatorial `t`-designs.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use crate::graph::{
    dense_spectrum, eigenspace_residual, is_design_by_projectors, Certificate, Family, Graph, MatrixKind,
    ProjectorTester, SpectrumSketch,
};
use crate::report::{exhaustive_equivalence, EquivalenceReport, MinimalAudit};
use crate::search::{enumerate_minimal, union_closure_audit, SearchProblem};
use crate::util::{binomial, combinations};
use crate::{Error, Result};

/// Largest vertex count `build_johnson` accepts.
pub const DEFAULT_VERTEX_LIMIT: usize = 1 << 16;

/// A sorted subset of `{1..n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KSubset(Vec<usize>);

impl KSubset {
    pub fn new(mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        if members.first() == Some(&0) {
            return Err(Error::InvalidArgument("subset members start at 1".into()));
        }
        if members.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(format!("repeated member in {members:?}")));
        }
        Ok(KSubset(members))
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn is_superset_of(&self, t: &KSubset) -> bool {
        t.0.iter().all(|x| self.contains(*x))
    }

    pub fn check(&self, n: usize, k: usize) -> Result<()> {
        if self.len() != k || self.0.last().is_some_and(|&x| x > n) {
            return Err(Error::InvalidArgument(format!("{self} is not a {k}-subset of 1..={n}")));
        }
        Ok(())
    }

    pub fn complement(&self, n: usize) -> KSubset {
        KSubset((1..=n).filter(|x| !self.contains(*x)).collect())
    }

    /// `Σ C(s_i − 1, i)` over positions `i = 1..k`.
    pub fn colex_rank(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &s)| binomial(s - 1, i + 1) as usize).sum()
    }

    pub fn colex_unrank(mut rank: usize, k: usize) -> KSubset {
        let mut members = vec![0; k];
        for i in (1..=k).rev() {
            let mut c = i - 1;
            while binomial(c + 1, i) as usize <= rank {
                c += 1;
            }
            rank -= binomial(c, i) as usize;
            members[i - 1] = c + 1;
        }
        KSubset(members)
    }

    /// Digits `1..9` written together, e.g. `"134"`.
    pub fn parse_compact(s: &str) -> Result<Self> {
        let members = s
            .trim()
            .chars()
            .map(|c| match c.to_digit(10) {
                Some(d) if d > 0 => Ok(d as usize),
                _ => Err(Error::InvalidArgument(format!("bad element {c:?} in {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        KSubset::new(members)
    }
}

impl fmt::Display for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for KSubset {
    type Err = Error;

    /// Comma-separated elements, e.g. `"1,3,4"`.
    fn from_str(s: &str) -> Result<Self> {
        let members = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::InvalidArgument(format!("bad element {p:?}"))))
            .collect::<Result<Vec<_>>>()?;
        KSubset::new(members)
    }
}

/// Parse several subsets written compactly.
pub fn compact_subsets(list: &[&str]) -> Result<Vec<KSubset>> {
    list.iter().map(|s| KSubset::parse_compact(s)).collect()
}

/// All `k`-subsets of `{1..n}` in colex order.
pub fn all_subsets(n: usize, k: usize) -> Vec<KSubset> {
    let count = binomial(n, k) as usize;
    (0..count).map(|r| KSubset::colex_unrank(r, k)).collect()
}

fn check_params(n: usize, k: usize) -> Result<()> {
    if k == 0 || 2 * k > n {
        return Err(Error::precondition(format!("J({n},{k}) needs 1 <= k <= n/2")));
    }
    Ok(())
}

pub fn build_johnson(n: usize, k: usize) -> Result<Graph> {
    check_params(n, k)?;
    let count = binomial(n, k);
    if count > DEFAULT_VERTEX_LIMIT as u128 {
        return Err(Error::SizeLimit { what: "Johnson graph", size: count, limit: DEFAULT_VERTEX_LIMIT as u128 });
    }
    let neighbors = all_subsets(n, k)
        .iter()
        .map(|s| {
            let mut list = Vec::with_capacity(k * (n - k));
            for (i, _) in s.0.iter().enumerate() {
                for b in (1..=n).filter(|b| !s.contains(*b)) {
                    let mut m = s.0.clone();
                    m[i] = b;
                    m.sort_unstable();
                    list.push(KSubset(m).colex_rank());
                }
            }
            list.sort_unstable();
            list
        })
        .collect();
    Ok(Graph::from_sorted_neighbors(neighbors, Family::Johnson { n, k }))
}

/// `(t, λ_t, μ_t)` for `t = 0..k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JohnsonSpectrum {
    pub n: usize,
    pub k: usize,
    pub entries: Vec<(usize, u64, u64)>,
}

impl JohnsonSpectrum {
    /// Laplacian sketch; index `t` is the eigenspace `Φ_t`.
    pub fn sketch(&self) -> Result<SpectrumSketch> {
        SpectrumSketch::new(
            self.entries.iter().map(|&(_, l, m)| (BigRational::from_integer(l.into()), m as usize)).collect(),
            MatrixKind::Laplacian,
        )
    }
}

pub fn johnson_spectrum(n: usize, k: usize) -> Result<JohnsonSpectrum> {
    check_params(n, k)?;
    let entries = (0..=k)
        .map(|t| {
            let mu = binomial(n, t) - if t == 0 { 0 } else { binomial(n, t - 1) };
            (t, (t * (n + 1 - t)) as u64, mu as u64)
        })
        .collect();
    Ok(JohnsonSpectrum { n, k, entries })
}

/// Adjacency eigenvalue `(k − t)(n − k − t) − t` on `Φ_t`.
pub fn eberlein_e1(n: usize, k: usize, t: usize) -> i64 {
    let (n, k, t) = (n as i64, k as i64, t as i64);
    (k - t) * (n - k - t) - t
}

fn to_indices(n: usize, k: usize, d: &[KSubset]) -> Result<Vec<usize>> {
    d.iter()
        .map(|s| {
            s.check(n, k)?;
            Ok(s.colex_rank())
        })
        .collect()
}

/// Exact `Φ_S`-design test, `S ⊆ {1..k}`. For `k > n/2` the subsets are
/// complemented and tested on `J(n, n − k)`; the certificate notes this.
pub fn is_phi_design_johnson(n: usize, k: usize, d: &[KSubset], s: &[usize]) -> Result<Certificate> {
    if d.is_empty() {
        return Err(Error::EmptyDesign);
    }
    if k > n || k == 0 {
        return Err(Error::InvalidArgument(format!("no {k}-subsets of 1..={n} to test")));
    }
    let (kk, subsets, complemented) = if 2 * k > n {
        for x in d {
            x.check(n, k)?;
        }
        (n - k, d.iter().map(|x| x.complement(n)).collect::<Vec<_>>(), true)
    } else {
        (k, d.to_vec(), false)
    };
    if let Some(&t) = s.iter().find(|&&t| t == 0 || t > kk) {
        return Err(Error::InvalidArgument(format!("eigenspace {t} not in 1..={kk}")));
    }
    let g = build_johnson(n, kk)?;
    let sketch = johnson_spectrum(n, kk)?.sketch()?;
    let idx = to_indices(n, kk, &subsets)?;
    let mut cert = is_design_by_projectors(&g, &sketch, s, &idx)?;
    if complemented {
        cert.push_note("relabel", format!("J({n},{k}) tested as J({n},{kk}) by complementing every subset"));
    }
    Ok(cert)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockVerdict {
    pub holds: bool,
    pub lambda: Option<u64>,
}

/// Whether every `t`-subset of `{1..n}` lies in the same number `λ` of
/// members of `D`.
pub fn block_design_check(n: usize, k: usize, d: &[KSubset], t: usize) -> BlockVerdict {
    assert!(t <= k, "t exceeds k");
    let mut counts = vec![0u64; binomial(n, t) as usize];
    for s in d {
        for pos in combinations(k, t) {
            let sub = KSubset(pos.iter().map(|&i| s.0[i]).collect());
            counts[sub.colex_rank()] += 1;
        }
    }
    let first = counts[0];
    if counts.iter().all(|&c| c == first) && !d.is_empty() {
        BlockVerdict { holds: true, lambda: Some(first) }
    } else {
        BlockVerdict { holds: false, lambda: None }
    }
}

/// Exhaustive agreement of [`block_design_check`], [`is_phi_design_johnson`]
/// on `Φ_[t]`, and float averaging of the dense eigenspaces at `1e-8`.
pub fn johnson_equivalence(n: usize, k: usize, t: usize, budget: u64) -> Result<EquivalenceReport> {
    if t == 0 || t > k {
        return Err(Error::InvalidArgument(format!("t = {t} not in 1..={k}")));
    }
    let g = build_johnson(n, k)?;
    let dense = dense_spectrum(&g, MatrixKind::Laplacian)?;
    let clusters = dense.clusters();
    if clusters.len() != k + 1 {
        return Err(Error::precondition(format!("expected {} eigenspaces, found {}", k + 1, clusters.len())));
    }
    let subsets = all_subsets(n, k);
    let selected: Vec<usize> = (1..=t).collect();
    exhaustive_equivalence(&format!("t-design vs design J({n},{k}) t={t}"), g.n(), budget, |idx| {
        let d: Vec<KSubset> = idx.iter().map(|&i| subsets[i].clone()).collect();
        let exact = is_phi_design_johnson(n, k, &d, &selected).map(|c| c.verdict()).unwrap_or(false);
        let float = selected.iter().all(|&l| {
            let basis = dense.cluster_vectors(&clusters[l]);
            eigenspace_residual(&basis, idx, g.n()).is_ok_and(|r| r <= 1e-8)
        });
        vec![
            ("block_design".into(), block_design_check(n, k, &d, t).holds),
            ("design".into(), exact),
            ("float".into(), float),
        ]
    })
}

/// `D_T = {S : T ⊆ S}`; averages `Φ_ℓ` for every `ℓ > |T|`.
pub fn star(n: usize, k: usize, t_set: &KSubset) -> Result<Vec<KSubset>> {
    if t_set.len() > k || t_set.0.last().is_some_and(|&x| x > n) {
        return Err(Error::InvalidArgument(format!("{t_set} cannot lie in a {k}-subset of 1..={n}")));
    }
    Ok(all_subsets(n, k).into_iter().filter(|s| s.is_superset_of(t_set)).collect())
}

/// `B_t(S, T) = 1` iff `T ⊆ S`; rows are `k`-subsets and columns
/// `t`-subsets, both in colex order.
pub fn incidence_b(n: usize, k: usize, t: usize) -> Vec<Vec<u8>> {
    assert!(t <= k && k <= n, "need t <= k <= n");
    let cols = all_subsets(n, t);
    all_subsets(n, k).iter().map(|s| cols.iter().map(|c| u8::from(s.is_superset_of(c))).collect()).collect()
}

/// Exact incremental tester for `Φ_S` on `J(n, k)`.
pub fn johnson_tester(n: usize, k: usize, s: &[usize]) -> Result<ProjectorTester> {
    let g = build_johnson(n, k)?;
    let sketch = johnson_spectrum(n, k)?.sketch()?;
    let list: Vec<String> = s.iter().map(ToString::to_string).collect();
    ProjectorTester::new(g, sketch, s, format!("J({n},{k}) eigenspaces {{{}}}", list.join(",")))
}

/// All `Φ_{2..k}`-designs of `J(n, k)`; checks the minimal ones are the `n`
/// stars `D_i` and their complements, and every design is a union of them.
pub fn minimal_reverse_enumeration_johnson(n: usize, k: usize, budget: u64) -> Result<MinimalAudit> {
    if k < 2 {
        return Err(Error::InvalidArgument("need k >= 2".into()));
    }
    let selected: Vec<usize> = (2..=k).collect();
    let tester = johnson_tester(n, k, &selected)?;
    let size = tester.graph().n();
    let result = enumerate_minimal(&SearchProblem::new(&tester).budget(budget), size)?;
    let mut expected = Vec::new();
    for i in 1..=n {
        let d: Vec<usize> = star(n, k, &KSubset(vec![i]))?.iter().map(KSubset::colex_rank).collect();
        let mut sorted = d.clone();
        sorted.sort_unstable();
        expected.push((0..size).filter(|v| sorted.binary_search(v).is_err()).collect::<Vec<_>>());
        expected.push(sorted);
    }
    expected.sort();
    expected.dedup();
    let render = |m: &Vec<usize>| m.iter().map(|&r| format!("{{{}}}", KSubset::colex_unrank(r, k))).collect();
    Ok(MinimalAudit {
        problem: format!("J({n},{k}) eigenspaces 2..{k}"),
        max_size: size,
        designs_found: result.all.len(),
        matches_expected: result.minimal == expected,
        unions_of_minimal: union_closure_audit(&result.minimal, &result.all),
        minimal: result.minimal.iter().map(render).collect(),
        nodes_expanded: result.nodes_expanded,
    })
}
