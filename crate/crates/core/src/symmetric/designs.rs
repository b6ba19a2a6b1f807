//! Designs in normal Cayley graphs on `S_n`.
//!
//! `D` averages `Φ_p` exactly when `Σ_{σ∈D} ρ_p(σ) = 0`. For an orthogonal
//! representation the squared Frobenius norm of that sum is the integer
//! Gram sum `Σ_{σ,τ∈D} χ_p(σ⁻¹τ)`, so every `Φ_p` question is decided by
//! character values alone.

use std::collections::{BTreeSet, HashMap};

use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    all_perms, alternating_group, from_ranks, generate_group, partitions, to_ranks, CharTable, Partition, Perm,
};
use crate::graph::{Certificate, Family, Graph, Residual};
use crate::report::{Discrepancy, MinimalAudit};
use crate::search::{enumerate_designs, enumerate_minimal, union_closure_audit, DesignTester, SearchProblem};
use crate::util::factorial;
use crate::{Error, Result};

/// Largest degree for which the pairwise quotient table is precomputed.
pub const MAX_TESTER_N: usize = 6;

fn check_classes(n: usize, classes: &[Partition]) -> Result<()> {
    if classes.is_empty() {
        return Err(Error::InvalidArgument("empty connection set".into()));
    }
    for c in classes {
        if c.n() != n {
            return Err(Error::InvalidArgument(format!("{c} is not a cycle type of S_{n}")));
        }
        if c.first_part() == 1 {
            return Err(Error::InvalidArgument("the identity cannot be in the connection set".into()));
        }
    }
    Ok(())
}

/// `Cay(S_n, X)` with `X` the union of the given conjugacy classes; edges
/// `(g, gx)`.
pub fn cayley_graph(n: usize, classes: &[Partition]) -> Result<Graph> {
    check_classes(n, classes)?;
    let all = all_perms(n)?;
    let wanted: BTreeSet<&Partition> = classes.iter().collect();
    let x: Vec<&Perm> = all.iter().filter(|p| wanted.contains(&p.cycle_type())).collect();
    let neighbors = all
        .iter()
        .map(|g| {
            let mut list: Vec<usize> = x.iter().map(|s| g.compose(s).rank()).collect();
            list.sort_unstable();
            list
        })
        .collect();
    let mut sorted: Vec<Partition> = wanted.into_iter().cloned().collect();
    sorted.sort_by(|a, b| b.cmp(a));
    let family = Family::Cayley { n, classes: sorted.iter().map(|c| c.parts().to_vec()).collect() };
    Ok(Graph::from_sorted_neighbors(neighbors, family))
}

/// Adjacency eigenvalue `Σ_{x∈X} χ_p(x) / d_p` on `Φ_p`.
pub fn cayley_eigenvalue(table: &CharTable, p: &Partition, classes: &[Partition]) -> BigRational {
    let num: i128 = classes.iter().map(|c| c.class_size() as i128 * table.value(p, c) as i128).sum();
    BigRational::new(num.into(), (table.dimension(p) as i128).into())
}

/// Laplacian eigenvalue `|X| − Σ_{x∈X} χ_p(x)/d_p` on `Φ_p`.
pub fn cayley_laplacian_eigenvalue(table: &CharTable, p: &Partition, classes: &[Partition]) -> BigRational {
    let degree: u128 = classes.iter().map(Partition::class_size).sum();
    BigRational::from_integer((degree as i128).into()) - cayley_eigenvalue(table, p, classes)
}

/// `½ Σ_i p_i (p_i − 2i + 1)`, the transposition graph's adjacency
/// eigenvalue on `Φ_p`.
pub fn transposition_adjacency_eigenvalue(p: &Partition) -> i64 {
    let s: i64 = p.parts().iter().enumerate().map(|(i, &x)| x as i64 * (x as i64 - 2 * (i as i64 + 1) + 1)).sum();
    s / 2
}

fn validate_perms(d: &[Perm]) -> Result<usize> {
    let n = d.first().map(Perm::n).ok_or(Error::EmptyDesign)?;
    let mut seen = BTreeSet::new();
    for p in d {
        if p.n() != n {
            return Err(Error::DimensionMismatch { expected: n, got: p.n() });
        }
        if !seen.insert(p) {
            return Err(Error::InvalidArgument(format!("{p} repeated in design")));
        }
    }
    Ok(n)
}

/// `Σ_{σ,τ∈D} χ_p(σ⁻¹τ)` for each `p`, from one pass over ordered pairs.
pub fn gram_sums(table: &CharTable, d: &[Perm], ps: &[Partition]) -> Result<Vec<i128>> {
    let n = validate_perms(d)?;
    if n != table.n() {
        return Err(Error::DimensionMismatch { expected: table.n(), got: n });
    }
    let mut counts: HashMap<Partition, i128> = HashMap::new();
    let inverses: Vec<Perm> = d.iter().map(Perm::inverse).collect();
    for si in &inverses {
        for tau in d {
            *counts.entry(si.compose(tau).cycle_type()).or_default() += 1;
        }
    }
    Ok(ps.iter().map(|p| counts.iter().map(|(c, k)| k * table.value(p, c) as i128).sum()).collect())
}

/// Exact test that `D` averages every `Φ_p` for `p` in `ps`. Each residual
/// is the Gram sum, a nonnegative integer that vanishes exactly when `D`
/// averages `Φ_p`.
pub fn averages_phi_p(table: &CharTable, d: &[Perm], ps: &[Partition]) -> Result<Certificate> {
    let grams = gram_sums(table, d, ps)?;
    let list: Vec<String> = ps.iter().map(ToString::to_string).collect();
    let mut cert = Certificate::new(format!("S_{} irreducibles {}", table.n(), list.join(" "))).with_size(d.len());
    for (p, g) in ps.iter().zip(grams) {
        cert.push_residual(Residual::exact(format!("gram {p}"), g == 0, g.to_string()));
        if g < 0 {
            cert.push_fact("gram nonnegative", false, format!("{p}: {g}"));
        }
        if g != 0 && cert.counterexample().is_none() {
            cert.set_counterexample(format!("p={p}"));
        }
    }
    Ok(cert)
}

/// Injective `t`-tuples of `0..n` in lexicographic order, and their index.
fn tuples(n: usize, t: usize) -> (Vec<Vec<u8>>, HashMap<Vec<u8>, usize>) {
    fn rec(n: usize, t: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == t {
            out.push(cur.clone());
            return;
        }
        for x in 0..n as u8 {
            if !cur.contains(&x) {
                cur.push(x);
                rec(n, t, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, t, &mut Vec::new(), &mut out);
    let index = out.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
    (out, index)
}

/// Whether `D` is `t`-wise uniform: for all injective tuples `i`, `j`,
/// `#{σ ∈ D : σ(i) = j}·n! = |D|·(n−t)!`.
pub fn t_wise_uniform_check(d: &[Perm], t: usize) -> Result<bool> {
    let n = validate_perms(d)?;
    if t == 0 || t > n {
        return Err(Error::InvalidArgument(format!("t = {t} not in 1..={n}")));
    }
    let (list, index) = tuples(n, t);
    let m = list.len();
    let mut counts = vec![0u128; m * m];
    for sigma in d {
        for (a, tup) in list.iter().enumerate() {
            let img: Vec<u8> = tup.iter().map(|&x| sigma.image(x as usize) as u8).collect();
            counts[a * m + index[&img]] += 1;
        }
    }
    let lhs_scale = factorial(n);
    let rhs = d.len() as u128 * factorial(n - t);
    Ok(counts.iter().all(|&c| c * lhs_scale == rhs))
}

/// Nontrivial partitions with first part at least `n − t`.
pub fn first_part_partitions(n: usize, t: usize) -> Vec<Partition> {
    partitions(n).into_iter().filter(|p| !p.is_trivial() && p.first_part() + t >= n).collect()
}

/// Nontrivial partitions with first part below `n − t`: the eigenspaces
/// averaged by cosets of the pointwise stabilizer of `t` points.
pub fn coset_averaged_partitions(n: usize, t: usize) -> Vec<Partition> {
    partitions(n).into_iter().filter(|p| !p.is_trivial() && p.first_part() + t < n).collect()
}

/// `σ·S·σ'` where `S` is the symmetric group on `{1..n−t}` fixing the last
/// `t` points; size `(n−t)!`. Every such coset averages `Φ_p` for all `p`
/// with `p₁ < n − t`.
pub fn symmetric_coset(n: usize, t: usize, sigma: &Perm, sigma2: &Perm) -> Result<Vec<Perm>> {
    if t >= n {
        return Err(Error::InvalidArgument(format!("need t < n, got t = {t}, n = {n}")));
    }
    if sigma.n() != n || sigma2.n() != n {
        return Err(Error::DimensionMismatch { expected: n, got: sigma.n().min(sigma2.n()) });
    }
    let m = n - t;
    let inner = all_perms(m)?;
    let mut out: Vec<Perm> = inner
        .iter()
        .map(|pi| {
            let images: Vec<usize> = (0..n).map(|i| if i < m { pi.image(i) } else { i }).collect();
            sigma.compose(&Perm::from_images(images).expect("extension is a permutation")).compose(sigma2)
        })
        .collect();
    out.sort_by_key(Perm::rank);
    Ok(out)
}

/// Explicit partitions `p`, `q` with `p₁ > q₁` but Laplacian `λ_p ≥ λ_q` on
/// the transposition graph: `(m+1, 1^m)`, `(m, m, 1)` for `n = 2m + 1` and
/// `(m+1, 1^{m+1})`, `(m, m, 2)` for `n = 2m + 2`.
pub fn order_conflict_witness(n: usize) -> Result<(Partition, Partition)> {
    if n < 6 {
        return Err(Error::InvalidArgument(format!("no conflict is claimed for n = {n} < 6")));
    }
    let (p, q) = if n % 2 == 1 {
        let m = (n - 1) / 2;
        let mut p = vec![m + 1];
        p.extend(std::iter::repeat_n(1, m));
        (p, vec![m, m, 1])
    } else {
        let m = (n - 2) / 2;
        let mut p = vec![m + 1];
        p.extend(std::iter::repeat_n(1, m + 1));
        (p, vec![m, m, 2])
    };
    let (p, q) = (Partition::new(p)?, Partition::new(q)?);
    let degree = (n * (n - 1) / 2) as i64;
    let (lp, lq) = (degree - transposition_adjacency_eigenvalue(&p), degree - transposition_adjacency_eigenvalue(&q));
    if p.first_part() <= q.first_part() || lp < lq {
        return Err(Error::precondition(format!("{p} and {q} do not conflict: {lp} < {lq}")));
    }
    Ok((p, q))
}

/// Left translations `σ ↦ gσ` as vertex permutations of the rank order.
/// They preserve Gram sums and `t`-wise uniformity.
pub fn left_translations(n: usize) -> Result<Vec<Vec<usize>>> {
    let all = all_perms(n)?;
    Ok(all.iter().map(|g| all.iter().map(|s| g.compose(s).rank()).collect()).collect())
}

fn quotient_classes(n: usize, table: &CharTable) -> Result<(Vec<Perm>, Vec<u8>)> {
    if n > MAX_TESTER_N {
        return Err(Error::SizeLimit { what: "tester degree", size: n as u128, limit: MAX_TESTER_N as u128 });
    }
    let all = all_perms(n)?;
    let size = all.len();
    let inverses: Vec<Perm> = all.iter().map(Perm::inverse).collect();
    let mut quot = vec![0u8; size * size];
    for (u, ui) in inverses.iter().enumerate() {
        for (v, pv) in all.iter().enumerate() {
            quot[u * size + v] = table.index_of(&ui.compose(pv).cycle_type()).expect("cycle type") as u8;
        }
    }
    Ok((all, quot))
}

/// Incremental Gram-sum tester: `G(D ∪ {τ}) = G(D) + 2Σ_{σ∈D} χ(σ⁻¹τ) + d_p`.
///
/// A partial subset with `r` vertices still to come is pruned once
/// `G > r²·d_p`: the remaining matrix sum has norm at most `r·√d_p`.
#[derive(Clone, Debug)]
pub struct GramTester {
    n: usize,
    table: CharTable,
    selected: Vec<Partition>,
    chi: Vec<Vec<i64>>,
    dims: Vec<i64>,
    size: usize,
    quot: Vec<u8>,
}

impl GramTester {
    pub fn new(table: CharTable, selected: Vec<Partition>) -> Result<Self> {
        let n = table.n();
        let (all, quot) = quotient_classes(n, &table)?;
        for p in &selected {
            if table.index_of(p).is_none() {
                return Err(Error::InvalidArgument(format!("{p} is not a partition of {n}")));
            }
        }
        let chi = selected.iter().map(|p| table.row(p).to_vec()).collect();
        let dims = selected.iter().map(|p| table.dimension(p)).collect();
        Ok(GramTester { n, table, selected, chi, dims, size: all.len(), quot })
    }

    pub fn selected(&self) -> &[Partition] {
        &self.selected
    }
}

impl DesignTester for GramTester {
    type State = (Vec<u16>, Vec<i64>);

    fn vertex_count(&self) -> usize {
        self.size
    }

    fn describe(&self) -> String {
        let list: Vec<String> = self.selected.iter().map(ToString::to_string).collect();
        format!("S_{} irreducibles {}", self.n, list.join(" "))
    }

    fn empty_state(&self) -> Self::State {
        (Vec::new(), vec![0; self.selected.len()])
    }

    fn push(&self, state: &mut Self::State, v: usize) {
        let (members, grams) = state;
        for (s, g) in grams.iter_mut().enumerate() {
            let chi = &self.chi[s];
            let cross: i64 = members.iter().map(|&u| chi[self.quot[u as usize * self.size + v] as usize]).sum();
            *g += 2 * cross + self.dims[s];
        }
        members.push(v as u16);
    }

    fn accepts(&self, state: &Self::State, _size: usize) -> bool {
        state.1.iter().all(|&g| g == 0)
    }

    fn feasible(&self, state: &Self::State, _size: usize, remaining: usize) -> bool {
        let r2 = (remaining * remaining) as i64;
        state.1.iter().zip(&self.dims).all(|(&g, &d)| g <= r2 * d)
    }

    fn certify(&self, subset: &[usize]) -> Result<Certificate> {
        averages_phi_p(&self.table, &from_ranks(subset, self.n), &self.selected)
    }
}

/// Incremental `t`-wise uniformity tester. The state counts, for each pair
/// of injective tuples `(i, j)`, the members sending `i` to `j`; each added
/// permutation raises every count by at most one.
#[derive(Clone, Debug)]
pub struct TwiseTester {
    n: usize,
    t: usize,
    tuples: usize,
    /// `image[σ * tuples + a]` is the index of `σ(tuple a)`.
    image: Vec<u32>,
    size: usize,
}

impl TwiseTester {
    pub fn new(n: usize, t: usize) -> Result<Self> {
        if n > MAX_TESTER_N || t == 0 || t > n {
            return Err(Error::InvalidArgument(format!("t-wise tester needs 1 <= t <= n <= {MAX_TESTER_N}")));
        }
        let all = all_perms(n)?;
        let (list, index) = tuples(n, t);
        let mut image = Vec::with_capacity(all.len() * list.len());
        for sigma in &all {
            for tup in &list {
                let img: Vec<u8> = tup.iter().map(|&x| sigma.image(x as usize) as u8).collect();
                image.push(index[&img] as u32);
            }
        }
        Ok(TwiseTester { n, t, tuples: list.len(), image, size: all.len() })
    }
}

impl DesignTester for TwiseTester {
    type State = Vec<u16>;

    fn vertex_count(&self) -> usize {
        self.size
    }

    fn describe(&self) -> String {
        format!("S_{} {}-wise uniform", self.n, self.t)
    }

    fn empty_state(&self) -> Vec<u16> {
        vec![0; self.tuples * self.tuples]
    }

    fn push(&self, state: &mut Vec<u16>, v: usize) {
        for a in 0..self.tuples {
            state[a * self.tuples + self.image[v * self.tuples + a] as usize] += 1;
        }
    }

    fn accepts(&self, state: &Vec<u16>, size: usize) -> bool {
        size.is_multiple_of(self.tuples) && state.iter().all(|&c| c as usize * self.tuples == size)
    }

    fn feasible(&self, state: &Vec<u16>, _size: usize, remaining: usize) -> bool {
        let (lo, hi) = state.iter().fold((u16::MAX, 0), |(lo, hi), &c| (lo.min(c), hi.max(c)));
        (hi - lo) as usize <= remaining
    }

    fn certify(&self, subset: &[usize]) -> Result<Certificate> {
        let d = from_ranks(subset, self.n);
        let mut cert = Certificate::new(self.describe()).with_size(d.len());
        let ok = t_wise_uniform_check(&d, self.t)?;
        cert.push_fact("uniform", ok, format!("{} tuples", self.tuples));
        Ok(cert)
    }
}

/// Outcome of comparing `t`-wise uniformity with averaging every `Φ_p`,
/// `p₁ ≥ n − t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstPartReport {
    pub n: usize,
    pub t: usize,
    pub method: &'static str,
    pub subsets_checked: u64,
    /// Proper designs found (ranks), excluding all of `S_n`.
    pub designs: Vec<Vec<usize>>,
    pub discrepancy: Option<Discrepancy>,
}

impl FirstPartReport {
    pub fn holds(&self) -> bool {
        self.discrepancy.is_none()
    }

    pub fn render(&self) -> String {
        let mut out = format!(
            "first part equivalence\nproblem: S_{} t={}\nmethod: {}\nsubsets_checked: {}\nproper_designs: {}\n",
            self.n,
            self.t,
            self.method,
            self.subsets_checked,
            self.designs.len()
        );
        if self.designs.len() <= 16 {
            for d in &self.designs {
                let ps: Vec<String> = from_ranks(d, self.n).iter().map(ToString::to_string).collect();
                out.push_str(&format!("design: {}\n", ps.join(" ")));
            }
        }
        match &self.discrepancy {
            None => out.push_str("discrepancy: none\n"),
            Some(d) => {
                let ps: Vec<String> = from_ranks(&d.subset, self.n).iter().map(ToString::to_string).collect();
                let vs: Vec<String> = d.verdicts.iter().map(|(k, v)| format!("{k}={v}")).collect();
                out.push_str(&format!("discrepancy: {{{}}} {}\n", ps.join(" "), vs.join(" ")));
            }
        }
        out.push_str(&format!("holds: {}\nend", self.holds()));
        out
    }
}

fn both_verdicts(table: &CharTable, d: &[Perm], t: usize, ps: &[Partition]) -> Result<Vec<(String, bool)>> {
    Ok(vec![
        ("t_uniform".into(), t_wise_uniform_check(d, t)?),
        ("first_part_design".into(), averages_phi_p(table, d, ps)?.verdict()),
    ])
}

/// `t`-wise uniform ⇔ averages every `Φ_p` with `p₁ ≥ n − t`.
///
/// `n ≤ 3`: every nonempty subset. `n = 4`: all designs of size at most 12
/// are enumerated with each tester and compared; larger designs are
/// complements of these since `S_n` itself is a design. `n ∈ {5, 6}`: a
/// seeded sample of `samples` random subsets together with named
/// positives (transitive groups) and negatives (one member replaced).
pub fn first_part_design_equivalence(
    n: usize,
    t: usize,
    budget: u64,
    samples: usize,
    seed: u64,
) -> Result<FirstPartReport> {
    if t == 0 || t > n {
        return Err(Error::InvalidArgument(format!("t = {t} not in 1..={n}")));
    }
    let table = super::character_table(n)?;
    let ps = first_part_partitions(n, t);
    let order = factorial(n) as usize;
    let mut report = FirstPartReport { n, t, method: "", subsets_checked: 0, designs: Vec::new(), discrepancy: None };
    match n {
        1..=3 => {
            report.method = "exhaustive";
            let all = all_perms(n)?;
            for mask in 1u64..(1 << order) {
                let ranks = crate::util::mask_to_subset(mask, order);
                let d: Vec<Perm> = ranks.iter().map(|&r| all[r].clone()).collect();
                let verdicts = both_verdicts(&table, &d, t, &ps)?;
                report.subsets_checked += 1;
                if verdicts[0].1 != verdicts[1].1 {
                    report.discrepancy = Some(Discrepancy { subset: ranks, verdicts });
                    return Ok(report);
                }
                if verdicts[0].1 && ranks.len() < order {
                    report.designs.push(ranks);
                }
            }
        }
        4 => {
            report.method = "enumeration up to size 12 with complements";
            let half = order / 2;
            let uniform = TwiseTester::new(n, t)?;
            let gram = GramTester::new(table.clone(), ps.clone())?;
            let a = enumerate_designs(&SearchProblem::new(&uniform).budget(budget), half)?;
            let b = enumerate_designs(&SearchProblem::new(&gram).budget(budget), half)?;
            report.subsets_checked = a.nodes_expanded + b.nodes_expanded;
            let sa: BTreeSet<Vec<usize>> = a.designs.into_iter().collect();
            let sb: BTreeSet<Vec<usize>> = b.designs.into_iter().collect();
            if let Some(x) = sa.symmetric_difference(&sb).next() {
                let verdicts = vec![("t_uniform".into(), sa.contains(x)), ("first_part_design".into(), sb.contains(x))];
                report.discrepancy = Some(Discrepancy { subset: x.clone(), verdicts });
                return Ok(report);
            }
            let mut designs = sa.clone();
            for d in &sa {
                if d.len() < half {
                    designs.insert((0..order).filter(|v| d.binary_search(v).is_err()).collect());
                }
            }
            report.designs = designs.into_iter().collect();
            report.designs.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        }
        5 | 6 => {
            report.method = "sampled";
            let all = all_perms(n)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut cases: Vec<Vec<Perm>> = named_positives(n)?;
            let negatives: Vec<Vec<Perm>> = cases
                .iter()
                .filter(|d| d.len() < order)
                .map(|d| {
                    let mut d = d.clone();
                    let outside = all.iter().find(|p| !d.contains(p)).expect("proper subset").clone();
                    d[0] = outside;
                    d
                })
                .collect();
            cases.extend(negatives);
            for _ in 0..samples {
                let size = rng.gen_range(1..=order);
                let mut d: Vec<Perm> = all.choose_multiple(&mut rng, size).cloned().collect();
                d.sort_by_key(Perm::rank);
                cases.push(d);
            }
            for d in cases {
                let verdicts = both_verdicts(&table, &d, t, &ps)?;
                report.subsets_checked += 1;
                let ranks = to_ranks(&d);
                if verdicts[0].1 != verdicts[1].1 {
                    report.discrepancy = Some(Discrepancy { subset: ranks, verdicts });
                    return Ok(report);
                }
                if verdicts[0].1 && ranks.len() < order {
                    report.designs.push(ranks);
                }
            }
            report.designs.sort();
            report.designs.dedup();
        }
        _ => return Err(Error::SizeLimit { what: "first part equivalence degree", size: n as u128, limit: 6 }),
    }
    Ok(report)
}

/// Cyclic, affine, projective and alternating groups of degree `n`.
fn named_positives(n: usize) -> Result<Vec<Vec<Perm>>> {
    let cycle: Vec<usize> = (1..=n).collect();
    let mut out = vec![generate_group(&[Perm::from_cycles(n, &[cycle])?])?, alternating_group(n)?];
    if n == 5 {
        // x ↦ x + 1 and x ↦ 2x on Z/5, points 1..5 for 0..4.
        let shift = Perm::from_images((0..5).map(|x| (x + 1) % 5).collect())?;
        let scale = Perm::from_images((0..5).map(|x| (2 * x) % 5).collect())?;
        out.push(generate_group(&[shift, scale])?);
    }
    if n == 6 {
        // PGL(2,5) on the projective line: points 0..4 and ∞ = 5.
        let shift = Perm::from_images(vec![1, 2, 3, 4, 0, 5])?;
        let scale = Perm::from_images(vec![0, 2, 4, 1, 3, 5])?;
        let inv = Perm::from_images(vec![5, 4, 2, 3, 1, 0])?;
        out.push(generate_group(&[shift, scale, inv])?);
    }
    Ok(out)
}

/// Inclusion-minimal designs averaging every `Φ_p` with `p₁ < n − 1`, up to
/// size `n!/2` (all sizes for `n ≤ 3`); checked against the `n²` cosets
/// `{σ : σ(i) = j}` and for union closure.
pub fn birkhoff_minimal_enumeration(n: usize, budget: u64) -> Result<MinimalAudit> {
    if !(2..=4).contains(&n) {
        return Err(Error::InvalidArgument(format!("birkhoff enumeration supports 2 <= n <= 4, got {n}")));
    }
    let table = super::character_table(n)?;
    let tester = GramTester::new(table, coset_averaged_partitions(n, 1))?;
    let order = factorial(n) as usize;
    let max_size = if n <= 3 { order } else { order / 2 };
    let result = enumerate_minimal(&SearchProblem::new(&tester).budget(budget), max_size)?;
    let all = all_perms(n)?;
    let mut expected: Vec<Vec<usize>> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| all.iter().filter(|p| p.image(i) == j).map(Perm::rank).collect())
        .collect();
    expected.sort();
    let render = |m: &Vec<usize>| from_ranks(m, n).iter().map(ToString::to_string).collect();
    Ok(MinimalAudit {
        problem: format!("S_{n} irreducibles with first part < {}", n - 1),
        max_size,
        designs_found: result.all.len(),
        matches_expected: result.minimal == expected,
        unions_of_minimal: union_closure_audit(&result.minimal, &result.all),
        minimal: result.minimal.iter().map(render).collect(),
        nodes_expanded: result.nodes_expanded,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::graph::{dense_spectrum, eigenspace_residual, MatrixKind};
    use crate::symmetric::{character_table, part, perms};

    fn a4() -> Vec<Perm> {
        alternating_group(4).unwrap()
    }

    #[test]
    fn s3_cayley_graphs() {
        let t = cayley_graph(3, &[part(&[2, 1])]).unwrap();
        assert_eq!((t.n(), t.regular_degree()), (6, Some(3)));
        assert!(t.is_connected());
        let d = cayley_graph(3, &[part(&[3])]).unwrap();
        assert_eq!(d.regular_degree(), Some(2));
        assert!(!d.is_connected());
        assert_eq!(cayley_graph(4, &[part(&[2, 1, 1])]).unwrap().regular_degree(), Some(6));
        assert!(cayley_graph(3, &[part(&[1, 1, 1])]).is_err());
    }

    #[test]
    fn table_one_eigenvalues() {
        let table = character_table(3).unwrap();
        let ps = [part(&[3]), part(&[2, 1]), part(&[1, 1, 1])];
        let lt: Vec<BigRational> =
            ps.iter().map(|p| cayley_laplacian_eigenvalue(&table, p, &[part(&[2, 1])])).collect();
        let ld: Vec<BigRational> = ps.iter().map(|p| cayley_laplacian_eigenvalue(&table, p, &[part(&[3])])).collect();
        assert_eq!(lt, vec![rat(0), rat(3), rat(6)]);
        assert_eq!(ld, vec![rat(0), rat(3), rat(0)]);
        assert_eq!(cayley_eigenvalue(&table, &part(&[2, 1]), &[part(&[2, 1])]), rat(0));
    }

    #[test]
    fn cayley_eigenvalues_match_dense_spectrum() {
        for (n, classes) in
            [(3, vec![part(&[2, 1])]), (4, vec![part(&[2, 1, 1])]), (4, vec![part(&[3, 1]), part(&[4])])]
        {
            let table = character_table(n).unwrap();
            let g = cayley_graph(n, &classes).unwrap();
            let mut expected: Vec<f64> = Vec::new();
            for p in table.partitions() {
                let l = cayley_laplacian_eigenvalue(&table, p, &classes);
                let v = num_traits::ToPrimitive::to_f64(&l).unwrap();
                expected.extend(std::iter::repeat_n(v, (p.dimension() * p.dimension()) as usize));
            }
            expected.sort_by(f64::total_cmp);
            let dense = dense_spectrum(&g, MatrixKind::Laplacian).unwrap();
            for (a, b) in dense.values.iter().zip(&expected) {
                assert!((a - b).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn content_formula_matches_characters() {
        for n in 2..=8 {
            let table = character_table(n).unwrap();
            let tr = Partition::new([vec![2], vec![1; n - 2]].concat()).unwrap();
            for p in table.partitions() {
                assert_eq!(cayley_eigenvalue(&table, p, std::slice::from_ref(&tr)), rat(transposition_adjacency_eigenvalue(p)));
            }
            assert_eq!(transposition_adjacency_eigenvalue(&Partition::new(vec![n]).unwrap()), (n * (n - 1) / 2) as i64);
        }
        assert_eq!(transposition_adjacency_eigenvalue(&part(&[4, 1, 1, 1])), 0);
        assert_eq!(transposition_adjacency_eigenvalue(&part(&[3, 3, 1])), 1);
    }

    #[test]
    fn gram_examples() {
        let t4 = character_table(4).unwrap();
        let s4 = all_perms(4).unwrap();
        let nontrivial: Vec<Partition> = partitions(4).into_iter().skip(1).collect();
        assert!(averages_phi_p(&t4, &s4, &nontrivial).unwrap().verdict());
        assert!(averages_phi_p(&t4, &a4(), &[part(&[2, 1, 1])]).unwrap().verdict());
        assert!(!averages_phi_p(&t4, &a4(), &[part(&[1, 1, 1, 1])]).unwrap().verdict());
        let averaged: Vec<Partition> = nontrivial
            .iter()
            .filter(|p| averages_phi_p(&t4, &a4(), &[(*p).clone()]).unwrap().verdict())
            .cloned()
            .collect();
        assert_eq!(averaged, vec![part(&[3, 1]), part(&[2, 2]), part(&[2, 1, 1])]);
        assert!(averages_phi_p(&t4, &[], &nontrivial).is_err());
    }

    #[test]
    fn uniform_examples() {
        let c = perms(4, &["e", "(1234)", "(13)(24)", "(1432)"]).unwrap();
        let v = perms(4, &["e", "(12)(34)", "(13)(24)", "(14)(23)"]).unwrap();
        let vc = perms(4, &["e", "(12)(34)", "(13)(24)", "(14)(23)", "(12)", "(234)", "(1324)", "(143)"]).unwrap();
        let twelve = Perm::parse("(12)", 4).unwrap();
        let mut built: Vec<Perm> = v.clone();
        built.extend(c.iter().map(|x| twelve.compose(x)));
        assert_eq!(to_ranks(&built), to_ranks(&vc));
        for d in [&c, &v, &vc] {
            assert!(t_wise_uniform_check(d, 1).unwrap());
            assert!(!t_wise_uniform_check(d, 2).unwrap());
        }
        assert!(t_wise_uniform_check(&a4(), 2).unwrap());
        assert!(!t_wise_uniform_check(&a4(), 3).unwrap());
    }

    #[test]
    fn laplacian_order_designs_of_size_twelve() {
        let t4 = character_table(4).unwrap();
        let first = perms(
            4,
            &[
                "e", "(14)", "(24)", "(34)", "(123)", "(1243)", "(1423)", "(1234)", "(132)", "(1324)", "(1342)",
                "(1432)",
            ],
        )
        .unwrap();
        let second = perms(
            4,
            &[
                "e", "(1243)", "(14)(23)", "(1342)", "(12)", "(143)", "(1324)", "(234)", "(13)", "(243)", "(1234)",
                "(142)",
            ],
        )
        .unwrap();
        for d in [first, second] {
            assert!(averages_phi_p(&t4, &d, &[part(&[3, 1]), part(&[2, 2])]).unwrap().verdict());
            assert!(!averages_phi_p(&t4, &d, &[part(&[2, 1, 1])]).unwrap().verdict());
            assert!(t_wise_uniform_check(&d, 1).unwrap() && !t_wise_uniform_check(&d, 2).unwrap());
        }
    }

    #[test]
    fn gram_is_nonnegative() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let tables: Vec<CharTable> = (2..=5).map(|n| character_table(n).unwrap()).collect();
        for _ in 0..2000 {
            let n = rng.gen_range(2..=5);
            let table = &tables[n - 2];
            let all = all_perms(n).unwrap();
            let size = rng.gen_range(1..=all.len());
            let d: Vec<Perm> = all.choose_multiple(&mut rng, size).cloned().collect();
            let p = table.partitions().choose(&mut rng).unwrap().clone();
            assert!(gram_sums(table, &d, &[p]).unwrap()[0] >= 0);
        }
    }

    #[test]
    fn gram_matches_float_eigenspaces() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in [3, 4] {
            let table = character_table(n).unwrap();
            let tr = Partition::new([vec![2], vec![1; n - 2]].concat()).unwrap();
            let g = cayley_graph(n, std::slice::from_ref(&tr)).unwrap();
            let dense = dense_spectrum(&g, MatrixKind::Laplacian).unwrap();
            let clusters = dense.clusters();
            let all = all_perms(n).unwrap();
            let order = all.len();
            let subsets: Vec<Vec<usize>> = if n == 3 {
                (1u64..1 << order).map(|m| crate::util::mask_to_subset(m, order)).collect()
            } else {
                (0..3000)
                    .map(|_| {
                        let size = rng.gen_range(1..=order);
                        let mut s: Vec<usize> =
                            (0..order).collect::<Vec<_>>().choose_multiple(&mut rng, size).copied().collect();
                        s.sort_unstable();
                        s
                    })
                    .chain([to_ranks(&a4())])
                    .collect()
            };
            for p in table.partitions().iter().filter(|p| !p.is_trivial()) {
                let lambda =
                    num_traits::ToPrimitive::to_f64(&cayley_laplacian_eigenvalue(&table, p, std::slice::from_ref(&tr))).unwrap();
                let cluster = clusters.iter().find(|r| (dense.cluster_value(r) - lambda).abs() < 1e-6).unwrap();
                assert_eq!(cluster.len() as u128, p.dimension().pow(2));
                let basis = dense.cluster_vectors(cluster);
                for s in &subsets {
                    let exact = gram_sums(&table, &from_ranks(s, n), std::slice::from_ref(p)).unwrap()[0] == 0;
                    let float = eigenspace_residual(&basis, s, order).unwrap() <= 1e-8;
                    assert_eq!(exact, float, "n={n} p={p} subset {s:?}");
                }
            }
        }
    }

    #[test]
    fn testers_agree_with_direct_checks() {
        let t4 = character_table(4).unwrap();
        let ps = first_part_partitions(4, 2);
        let gram = GramTester::new(t4.clone(), ps.clone()).unwrap();
        let uni = TwiseTester::new(4, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut samples: Vec<Vec<usize>> = vec![to_ranks(&a4())];
        for _ in 0..300 {
            let size = rng.gen_range(1..=24);
            let mut s: Vec<usize> = (0..24).collect::<Vec<_>>().choose_multiple(&mut rng, size).copied().collect();
            s.sort_unstable();
            samples.push(s);
        }
        for s in samples {
            let d = from_ranks(&s, 4);
            assert_eq!(gram.is_design(&s), averages_phi_p(&t4, &d, &ps).unwrap().verdict());
            assert_eq!(uni.is_design(&s), t_wise_uniform_check(&d, 2).unwrap());
        }
    }

    #[test]
    fn first_part_equivalence_small() {
        for t in 1..=3 {
            let r = first_part_design_equivalence(3, t, 1 << 24, 0, 0).unwrap();
            assert!(r.holds(), "{}", r.render());
            assert_eq!(r.subsets_checked, 63);
        }
        let r = first_part_design_equivalence(4, 2, 1 << 26, 0, 0).unwrap();
        assert!(r.holds(), "{}", r.render());
        let odd: Vec<usize> = (0..24).filter(|v| !to_ranks(&a4()).contains(v)).collect();
        assert_eq!(r.designs, vec![to_ranks(&a4()), odd]);
        let r = first_part_design_equivalence(4, 3, 1 << 26, 0, 0).unwrap();
        assert!(r.holds() && r.designs.is_empty(), "{}", r.render());
    }

    #[test]
    fn first_part_equivalence_sampled() {
        for (n, t) in [(5, 1), (5, 2), (6, 3)] {
            let r = first_part_design_equivalence(n, t, 0, 40, 5).unwrap();
            assert!(r.holds(), "{}", r.render());
            assert!(!r.designs.is_empty());
        }
    }

    #[test]
    fn order_conflicts() {
        let (p, q) = order_conflict_witness(7).unwrap();
        assert_eq!((p.clone(), q.clone()), (part(&[4, 1, 1, 1]), part(&[3, 3, 1])));
        assert_eq!((transposition_adjacency_eigenvalue(&p), transposition_adjacency_eigenvalue(&q)), (0, 1));
        let (p, q) = order_conflict_witness(6).unwrap();
        assert_eq!((p.clone(), q.clone()), (part(&[3, 1, 1, 1]), part(&[2, 2, 2])));
        assert_eq!(transposition_adjacency_eigenvalue(&p), -3);
        assert_eq!(transposition_adjacency_eigenvalue(&q), -3);
        assert_eq!(order_conflict_witness(8).unwrap(), (part(&[4, 1, 1, 1, 1]), part(&[3, 3, 2])));
        for n in 6..=12 {
            order_conflict_witness(n).unwrap();
        }
        assert!(order_conflict_witness(5).is_err());
    }

    #[test]
    fn s6_single_class_graphs_clump() {
        let table = character_table(6).unwrap();
        let classes: Vec<&Partition> = table.partitions().iter().filter(|c| c.first_part() > 1).collect();
        assert_eq!(classes.len(), 10);
        for c in classes {
            let values: BTreeSet<BigRational> =
                table.partitions().iter().map(|p| cayley_laplacian_eigenvalue(&table, p, std::slice::from_ref(c))).collect();
            assert!(values.len() < 11, "class {c} separates all irreducibles");
        }
    }

    #[test]
    fn cosets_average_reverse_first_part() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 2..=5 {
            let table = character_table(n).unwrap();
            let all = all_perms(n).unwrap();
            for t in 0..n {
                let ps = coset_averaged_partitions(n, t);
                for _ in 0..3 {
                    let (a, b) = (all.choose(&mut rng).unwrap(), all.choose(&mut rng).unwrap());
                    let d = symmetric_coset(n, t, a, b).unwrap();
                    assert_eq!(d.len() as u128, factorial(n - t));
                    if !ps.is_empty() {
                        assert!(averages_phi_p(&table, &d, &ps).unwrap().verdict(), "n={n} t={t}");
                    }
                }
            }
        }
        // n = 5, t = 2: the coset of S_3 averages (1^5), (2,1,1,1) and (2,2,1).
        assert_eq!(
            coset_averaged_partitions(5, 2),
            vec![part(&[2, 2, 1]), part(&[2, 1, 1, 1]), part(&[1, 1, 1, 1, 1])]
        );
        // n = 3, t = 1: a coset of S_2 averages the sign character.
        let d = symmetric_coset(3, 1, &Perm::identity(3), &Perm::identity(3)).unwrap();
        assert!(averages_phi_p(&character_table(3).unwrap(), &d, &[part(&[1, 1, 1])]).unwrap().verdict());
    }

    #[test]
    fn two_element_subgroup_does_not_average_first_part_below_three() {
        // {e, (12)} in S_5 is isomorphic to S_2 but fails Φ_(2,1,1,1).
        let table = character_table(5).unwrap();
        let d = perms(5, &["e", "(12)"]).unwrap();
        assert!(averages_phi_p(&table, &d, &[part(&[1, 1, 1, 1, 1])]).unwrap().verdict());
        assert!(!averages_phi_p(&table, &d, &[part(&[2, 1, 1, 1])]).unwrap().verdict());
        assert_eq!(table.value(&part(&[2, 1, 1, 1]), &part(&[2, 1, 1, 1])), -2);
    }

    #[test]
    fn birkhoff_minimal_designs() {
        let r = birkhoff_minimal_enumeration(3, 1 << 24).unwrap();
        assert!(r.holds(), "{}", r.render());
        assert_eq!(r.minimal.len(), 9);
        let r = birkhoff_minimal_enumeration(4, 1 << 26).unwrap();
        assert!(r.holds(), "{}", r.render());
        assert_eq!(r.minimal.len(), 16);
        assert!(r.minimal.iter().all(|m| m.len() == 6));
    }
}
