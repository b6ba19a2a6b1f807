//! The Mycielskian `M(G)` and its adjacency eigenvectors.
//!
//! Vertices of `M(G)` are laid out as `[V | V′ | u]`: vertex `i` of `G`,
//! then its copy `n + i`, then the central vertex `2n`. In block form the
//! adjacency matrix is `[[A, A, 0], [A, 0, 𝟙], [0, 𝟙ᵀ, 0]]`.
//!
//! For `d`-regular `G` every eigenvector `x ⊥ 𝟙` of `A` with eigenvalue `μ`
//! lifts to `[x | −φ̄x | 0]` (eigenvalue `φμ`) and `[x | −φx | 0]`
//! (eigenvalue `φ̄μ`), with `φ, φ̄` the roots of `x² − x − 1`. The other
//! three eigenvalues are the roots of `t³ − dt² − (n + d²)t + dn`. This
//! module works with adjacency eigenvectors throughout; since `M(G)` is not
//! regular, averaging is tested in the mean form.
//!
//! Base eigenvalues in `Q[√5]` are found exactly and their eigenspaces get a
//! rational (or `Q[√5]`) basis, so lifts are verified exactly. Any other
//! eigenvalue falls back to the float eigenbasis.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::exact::linalg::nullspace;
use crate::exact::poly::div_exact;
use crate::exact::{golden_ratio, QuadSurd};
use crate::graph::{
    average_gap, characteristic_polynomial, dense_spectrum, eigenspace_residual, Certificate, DenseSpectrum, Family,
    Graph, MatrixKind, Residual, DEFAULT_TOL,
};
use crate::report::{exhaustive_equivalence, EquivalenceReport};
use crate::util::{combinations, mask_to_subset, subset_count};
use crate::{Error, Result};

/// A graph together with its Mycielskian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MycielskiGraph {
    pub base: Graph,
    pub graph: Graph,
}

impl MycielskiGraph {
    pub fn base_n(&self) -> usize {
        self.base.n()
    }

    /// The central vertex `u`.
    pub fn u_index(&self) -> usize {
        2 * self.base.n()
    }

    /// Index of the copy `v′` of base vertex `v`.
    pub fn prime(&self, v: usize) -> usize {
        self.base.n() + v
    }

    /// Entry-for-entry comparison with the block form of the adjacency
    /// matrix.
    pub fn matches_block_form(&self) -> bool {
        let n = self.base.n();
        let a = self.base.adjacency_matrix();
        let m = self.graph.adjacency_matrix();
        (0..2 * n + 1).all(|i| {
            (0..2 * n + 1).all(|j| {
                let expected = match (i / n.max(1), j / n.max(1)) {
                    _ if i == 2 * n || j == 2 * n => u8::from((i == 2 * n) != (j == 2 * n) && i.min(j) >= n),
                    (0, 0) | (0, 1) | (1, 0) => a[i % n][j % n],
                    _ => 0,
                };
                m[i][j] == expected
            })
        })
    }
}

pub fn mycielskian(g: &Graph) -> MycielskiGraph {
    let n = g.n();
    let mut edges = Vec::with_capacity(3 * g.edge_count() + n);
    for (i, j) in g.edges() {
        edges.extend([(i, j), (n + i, j), (i, n + j)]);
    }
    edges.extend((0..n).map(|j| (2 * n, n + j)));
    let graph = Graph::from_edges_unchecked_connectivity(2 * n + 1, &edges, Family::Mycielskian { base_n: n })
        .expect("Mycielskian of a simple graph is simple");
    MycielskiGraph { base: g.clone(), graph }
}

/// An adjacency eigenpair, exact over `Q[√5]` where possible.
#[derive(Clone, Debug, PartialEq)]
pub enum Eigenpair {
    Exact { value: QuadSurd, vector: Vec<QuadSurd> },
    Float { value: f64, vector: Vec<f64> },
}

impl Eigenpair {
    pub fn is_exact(&self) -> bool {
        matches!(self, Eigenpair::Exact { .. })
    }

    pub fn value_f64(&self) -> f64 {
        match self {
            Eigenpair::Exact { value, .. } => value.to_f64(),
            Eigenpair::Float { value, .. } => *value,
        }
    }

    pub fn vector_f64(&self) -> Vec<f64> {
        match self {
            Eigenpair::Exact { vector, .. } => vector.iter().map(QuadSurd::to_f64).collect(),
            Eigenpair::Float { vector, .. } => vector.clone(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Eigenpair::Exact { vector, .. } => vector.len(),
            Eigenpair::Float { vector, .. } => vector.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn value_string(&self) -> String {
        match self {
            Eigenpair::Exact { value, .. } => value.to_string(),
            Eigenpair::Float { value, .. } => format!("{value:.10}"),
        }
    }

    /// Whether the entries over `d` sum to zero (exactly, or within `tol`
    /// relative to the vector's norm).
    pub fn sums_to_zero_on(&self, d: &[usize]) -> bool {
        match self {
            Eigenpair::Exact { vector, .. } => {
                d.iter().fold(QuadSurd::zero(), |acc, &v| acc + vector[v].clone()).is_zero()
            }
            Eigenpair::Float { vector, .. } => {
                let norm = vector.iter().map(|x| x * x).sum::<f64>().sqrt().max(1.0);
                d.iter().map(|&v| vector[v]).sum::<f64>().abs() <= DEFAULT_TOL * norm
            }
        }
    }

    /// `A w − λ w`, exactly or as a float norm.
    pub fn residual(&self, g: &Graph, label: impl Into<String>) -> Result<Residual> {
        match self {
            Eigenpair::Exact { value, vector } => {
                let aw = g.adjacency_apply(vector)?;
                let bad = aw.iter().zip(vector).position(|(x, y)| *x != value * y);
                let detail = match bad {
                    None => "0".to_string(),
                    Some(i) => format!("entry {} off by {}", i + 1, &aw[i] - &(value * &vector[i])),
                };
                Ok(Residual::exact(label, bad.is_none(), detail))
            }
            Eigenpair::Float { value, vector } => {
                let aw = g.apply_f64(MatrixKind::Adjacency, vector);
                let r = aw.iter().zip(vector).map(|(x, y)| (x - value * y).powi(2)).sum::<f64>().sqrt();
                Ok(Residual::float(label, r, DEFAULT_TOL))
            }
        }
    }
}

fn require_regular(g: &Graph) -> Result<usize> {
    match g.regular_degree() {
        Some(d) if d > 0 && g.is_connected() => Ok(d),
        Some(_) => Err(Error::precondition("base graph must be connected with at least one edge")),
        None => Err(Error::precondition("base graph is not regular")),
    }
}

/// Adjacency eigenpairs of a connected regular graph, eigenvalues
/// descending (the constant vector first). Eigenvalues in `Q[√5]` are
/// detected by dividing the characteristic polynomial by each candidate
/// minimal polynomial, and their eigenspaces get the canonical nullspace
/// basis of `A − λI`; remaining eigenspaces use the float eigenbasis.
pub fn base_eigenpairs(g: &Graph) -> Result<Vec<Eigenpair>> {
    let d = require_regular(g)? as i64;
    let n = g.n();
    let charpoly = characteristic_polynomial(g, MatrixKind::Adjacency);
    let half = BigRational::new(1.into(), 2.into());
    let mut exact: Vec<QuadSurd> = Vec::new();
    // λ = (a + b√5)/2 with a ≡ b (mod 2) and both conjugates in [−d, d].
    let b_max = (2.0 * d as f64 / 5f64.sqrt()).floor() as i64;
    for b in 0..=b_max {
        for a in -2 * d..=2 * d {
            if (a - b).rem_euclid(2) != 0 || a.abs() as f64 + b as f64 * 5f64.sqrt() > 2.0 * d as f64 + 1e-9 {
                continue;
            }
            let factor: Vec<BigInt> = if b == 0 {
                vec![BigInt::from(-a / 2), BigInt::from(1)]
            } else {
                vec![BigInt::from((a * a - 5 * b * b) / 4), BigInt::from(-a), BigInt::from(1)]
            };
            if div_exact(&charpoly, &factor).is_none() {
                continue;
            }
            let ra = BigRational::from_integer(a.into()) * &half;
            let rb = BigRational::from_integer(b.into()) * &half;
            exact.push(QuadSurd::new(ra.clone(), rb.clone()));
            if b > 0 {
                exact.push(QuadSurd::new(ra, -rb));
            }
        }
    }
    let mut groups: Vec<(f64, Vec<Eigenpair>)> = Vec::new();
    let adjacency = g.adjacency_matrix();
    let mut covered = 0;
    for lambda in exact {
        let m: Vec<Vec<QuadSurd>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let a = QuadSurd::from_integer(adjacency[i][j] as i64);
                        if i == j {
                            a - lambda.clone()
                        } else {
                            a
                        }
                    })
                    .collect()
            })
            .collect();
        let basis = nullspace(&m);
        covered += basis.len();
        let pairs = basis.into_iter().map(|vector| Eigenpair::Exact { value: lambda.clone(), vector }).collect();
        groups.push((lambda.to_f64(), pairs));
    }
    if covered < n {
        let dense = dense_spectrum(g, MatrixKind::Adjacency)?;
        for r in dense.clusters() {
            let value = dense.cluster_value(&r);
            if groups.iter().any(|(v, _)| (v - value).abs() < 1e-6) {
                continue;
            }
            let pairs =
                dense.cluster_vectors(&r).into_iter().map(|v| Eigenpair::Float { value, vector: v.to_vec() }).collect();
            groups.push((value, pairs));
        }
    }
    groups.sort_by(|x, y| y.0.total_cmp(&x.0));
    Ok(groups.into_iter().flat_map(|(_, p)| p).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LiftVariant {
    /// `[x | −φ̄x | 0]`, eigenvalue `φμ`.
    Golden,
    /// `[x | −φx | 0]`, eigenvalue `φ̄μ`.
    Conjugate,
}

impl fmt::Display for LiftVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LiftVariant::Golden => "golden",
            LiftVariant::Conjugate => "conjugate",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LiftedEigenpair {
    /// Position of the base pair in the list passed to [`lift_eigenpairs`].
    pub base_index: usize,
    pub mu: f64,
    pub variant: LiftVariant,
    pub pair: Eigenpair,
}

/// Lift base eigenpairs (each orthogonal to `𝟙`) to `M(G)`, in Mycielskian
/// order: base eigenvalues ascending, and for each base vector the golden
/// lift before the conjugate one.
pub fn lift_eigenpairs(g: &Graph, base_pairs: &[Eigenpair]) -> Result<Vec<LiftedEigenpair>> {
    require_regular(g)?;
    let n = g.n();
    let all: Vec<usize> = (0..n).collect();
    let (phi, phibar) = golden_ratio();
    let mut order: Vec<usize> = (0..base_pairs.len()).collect();
    order.sort_by(|&i, &j| base_pairs[i].value_f64().total_cmp(&base_pairs[j].value_f64()).then(i.cmp(&j)));
    let mut out = Vec::with_capacity(2 * base_pairs.len());
    for i in order {
        let x = &base_pairs[i];
        if x.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: x.len() });
        }
        if !x.sums_to_zero_on(&all) {
            return Err(Error::precondition(format!(
                "base eigenvector {} is not orthogonal to the all-ones vector",
                i + 1
            )));
        }
        for variant in [LiftVariant::Golden, LiftVariant::Conjugate] {
            let (scale, other) = match variant {
                LiftVariant::Golden => (&phi, &phibar),
                LiftVariant::Conjugate => (&phibar, &phi),
            };
            let pair = match x {
                Eigenpair::Exact { value, vector } => {
                    let mut w = vector.clone();
                    w.extend(vector.iter().map(|v| -(other * v)));
                    w.push(QuadSurd::zero());
                    Eigenpair::Exact { value: scale * value, vector: w }
                }
                Eigenpair::Float { value, vector } => {
                    let (s, o) = (scale.to_f64(), other.to_f64());
                    let mut w = vector.clone();
                    w.extend(vector.iter().map(|v| -o * v));
                    w.push(0.0);
                    Eigenpair::Float { value: s * value, vector: w }
                }
            };
            out.push(LiftedEigenpair { base_index: i, mu: x.value_f64(), variant, pair });
        }
    }
    Ok(out)
}

/// Lifts of every nontrivial base eigenpair, in Mycielskian order.
pub fn mycielski_lifts(g: &Graph) -> Result<Vec<LiftedEigenpair>> {
    let base = base_eigenpairs(g)?;
    lift_eigenpairs(g, &base[1..])
}

/// `(1, −d, −(n + d²), dn)`, highest degree first.
pub fn cubic_coefficients(n: usize, d: usize) -> [i64; 4] {
    let (n, d) = (n as i64, d as i64);
    [1, -d, -(n + d * d), d * n]
}

/// The three real roots of the cubic, ascending.
pub fn cubic_roots(n: usize, d: usize) -> [f64; 3] {
    let [_, a, b, c] = cubic_coefficients(n, d).map(|x| x as f64);
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    let r = 2.0 * (-p / 3.0).sqrt();
    let theta = (3.0 * q / (p * r)).clamp(-1.0, 1.0).acos() / 3.0;
    let mut roots = [0, 1, 2].map(|k| r * (theta - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos() - a / 3.0);
    for t in &mut roots {
        for _ in 0..3 {
            let f = ((*t + a) * *t + b) * *t + c;
            let df = (3.0 * *t + 2.0 * a) * *t + b;
            if df.abs() > 1e-12 {
                *t -= f / df;
            }
        }
    }
    roots.sort_by(f64::total_cmp);
    roots
}

/// Eigenvector `[dt/(t−d)·𝟙 | t·𝟙 | n]` of `M(G)` for a cubic root `t`,
/// normalised to unit length.
pub fn cubic_eigenvector(n: usize, d: usize, t: f64) -> Vec<f64> {
    let (nf, df) = (n as f64, d as f64);
    let mut w = vec![df * t / (t - df); n];
    w.extend(std::iter::repeat_n(t, n));
    w.push(nf);
    let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
    w.iter().map(|x| x / norm).collect()
}

/// Largest gap between the predicted spectrum of `M(G)` (lifted values
/// plus cubic roots) and its dense numeric spectrum.
pub fn spectrum_completeness_gap(g: &Graph) -> Result<f64> {
    let d = require_regular(g)?;
    let mut predicted: Vec<f64> = mycielski_lifts(g)?.iter().map(|l| l.pair.value_f64()).collect();
    predicted.extend(cubic_roots(g.n(), d));
    predicted.sort_by(f64::total_cmp);
    let dense = dense_spectrum(&mycielskian(g).graph, MatrixKind::Adjacency)?;
    Ok(predicted.iter().zip(&dense.values).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max))
}

fn poly_string(c: &[i64]) -> String {
    let deg = c.len() - 1;
    let mut out = String::new();
    for (i, &x) in c.iter().enumerate() {
        let p = deg - i;
        if x == 0 {
            continue;
        }
        let sign = if x < 0 { "-" } else { "+" };
        if out.is_empty() {
            if x < 0 {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        let m = x.unsigned_abs();
        let coeff = if m == 1 && p > 0 { String::new() } else { m.to_string() };
        out.push_str(&match p {
            0 => coeff,
            1 => format!("{coeff}t"),
            _ => format!("{coeff}t^{p}"),
        });
    }
    out
}

/// `{u}` averages the `2n − 2` lifted eigenvectors: each is verified to be
/// an eigenvector, to vanish at `u`, and to have equal means on `{u}` and
/// on all of `M(G)`. The cubic and its roots are recorded, and the
/// predicted spectrum is compared with the dense one.
pub fn central_vertex_check(g: &Graph) -> Result<Certificate> {
    let d = require_regular(g)?;
    let n = g.n();
    let m = mycielskian(g);
    let u = m.u_index();
    let lifts = mycielski_lifts(g)?;
    let mut cert = Certificate::new("{u}").with_size(1);
    let mut averaged = 0;
    let mut vanish = true;
    for (k, l) in lifts.iter().enumerate() {
        let label = format!("lift {} {} mu={:.6}", k + 1, l.variant, l.mu);
        let r = l.pair.residual(&m.graph, format!("{label} eigenvector"))?;
        let eigen_ok = r.passes();
        cert.push_residual(r);
        let avg = match &l.pair {
            Eigenpair::Exact { vector, .. } => {
                vanish &= vector[u].is_zero();
                let total = vector.iter().fold(QuadSurd::zero(), |acc, x| acc + x.clone());
                let scale = QuadSurd::from_integer((2 * n + 1) as i64);
                let gap = &(&vector[u] * &scale) - &total;
                Residual::exact(format!("{label} average"), gap.is_zero(), gap.to_string())
            }
            Eigenpair::Float { vector, .. } => {
                vanish &= vector[u].abs() <= DEFAULT_TOL;
                Residual::float(format!("{label} average"), average_gap(vector, &[u]).abs(), DEFAULT_TOL)
            }
        };
        if eigen_ok && avg.passes() {
            averaged += 1;
        }
        cert.push_residual(avg);
    }
    cert.push_fact("vanish at central vertex", vanish, format!("{} lifted eigenvectors", lifts.len()));
    cert.push_fact("averaged count", averaged == 2 * n - 2, format!("{averaged} of {} eigenvectors", 2 * n + 1));
    let gap = spectrum_completeness_gap(g)?;
    cert.push_fact("spectrum completeness", gap <= DEFAULT_TOL, format!("max gap {gap:.3e}"));
    cert.push_note("averaged", format!("{averaged} of {}", 2 * n + 1));
    cert.push_note("cubic", poly_string(&cubic_coefficients(n, d)));
    let roots: Vec<String> = cubic_roots(n, d).iter().map(|t| format!("{t:.10}")).collect();
    cert.push_note("exceptional eigenvalues", roots.join(" "));
    Ok(cert)
}

/// Split of a Mycielskian design into its parts in `V` and `V′`, each read
/// as a subset of `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Restriction {
    pub in_v: Vec<usize>,
    pub in_v_prime: Vec<usize>,
    /// `Σ_{v ∈ D∩V} x(v) = 0`.
    pub v_averages: bool,
    /// `Σ_{v′ ∈ D∩V′} x(v) = 0`.
    pub v_prime_averages: bool,
}

impl Restriction {
    /// Both parts empty, as for `D = {u}`; the statement says nothing.
    pub fn vacuous(&self) -> bool {
        self.in_v.is_empty() && self.in_v_prime.is_empty()
    }

    pub fn holds(&self) -> bool {
        self.v_averages && self.v_prime_averages
    }
}

/// Given `D` averaging both lifts of the base eigenvector `x`, check that
/// `D ∩ V` and `D ∩ V′` both average `x` in `G`. The precondition is
/// verified and its failure is an error.
pub fn restrict_design(m: &MycielskiGraph, d: &[usize], x: &Eigenpair) -> Result<Restriction> {
    m.graph.validate_design(d)?;
    let lifts = lift_eigenpairs(&m.base, std::slice::from_ref(x))?;
    if let Some(l) = lifts.iter().find(|l| !l.pair.sums_to_zero_on(d)) {
        return Err(Error::precondition(format!("design does not average the {} lift", l.variant)));
    }
    let n = m.base_n();
    let in_v: Vec<usize> = d.iter().copied().filter(|&v| v < n).collect();
    let in_v_prime: Vec<usize> = d.iter().filter(|&&v| v >= n && v < 2 * n).map(|&v| v - n).collect();
    Ok(Restriction {
        v_averages: x.sums_to_zero_on(&in_v),
        v_prime_averages: x.sums_to_zero_on(&in_v_prime),
        in_v,
        in_v_prime,
    })
}

/// Exhaustive audit of designs averaging the first `2n − 2` eigenvectors
/// in Mycielskian order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SizeAudit {
    pub base_n: usize,
    pub subsets_checked: u64,
    /// Subsets averaging every lifted eigenvector.
    pub designs: u64,
    /// Those of size below `n`.
    pub below_n: Vec<Vec<usize>>,
    /// Those also averaging at least one cubic eigenvector.
    pub beyond: Vec<Vec<usize>>,
    /// Every subset averaging one cubic eigenvector averages all three.
    pub cubic_closure: bool,
    /// Float and exact verdicts on the lifts agreed on every subset.
    pub exact_agrees: bool,
}

impl SizeAudit {
    pub fn holds(&self) -> bool {
        let n = self.base_n;
        let full: Vec<usize> = (0..2 * n + 1).collect();
        self.below_n == vec![vec![2 * n]] && self.beyond == vec![full] && self.cubic_closure && self.exact_agrees
    }

    pub fn render(&self) -> String {
        let fmt_sets = |sets: &[Vec<usize>]| -> String {
            sets.iter()
                .map(|s| format!("{{{}}}", s.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(",")))
                .collect::<Vec<_>>()
                .join(" ")
        };
        format!(
            "size_audit\nbase_n: {}\nsubsets_checked: {}\ndesigns: {}\nbelow_n: {}\nbeyond: {}\ncubic_closure: {}\nexact_agrees: {}\nholds: {}\nend",
            self.base_n,
            self.subsets_checked,
            self.designs,
            fmt_sets(&self.below_n),
            fmt_sets(&self.beyond),
            self.cubic_closure,
            self.exact_agrees,
            self.holds()
        )
    }
}

pub fn design_size_audit(g: &Graph, budget: u64) -> Result<SizeAudit> {
    let d = require_regular(g)?;
    let n = g.n();
    let size = 2 * n + 1;
    let total = subset_count(size);
    if total > budget as u128 || size >= 64 {
        return Err(Error::BudgetExceeded { budget, needed: total.min(u64::MAX as u128) as u64 });
    }
    let lifts = mycielski_lifts(g)?;
    let lift_f64: Vec<Vec<f64>> = lifts.iter().map(|l| l.pair.vector_f64()).collect();
    let cubic: Vec<Vec<f64>> = cubic_roots(n, d).iter().map(|&t| cubic_eigenvector(n, d, t)).collect();
    struct Outcome {
        subset: Vec<usize>,
        lifts: bool,
        cubic: [bool; 3],
        agree: bool,
    }
    let outcomes: Vec<Outcome> = (1..=total as u64)
        .into_par_iter()
        .map(|mask| {
            let subset = mask_to_subset(mask, size);
            let float = lift_f64.iter().all(|w| average_gap(w, &subset).abs() <= DEFAULT_TOL);
            let exact = lifts.iter().all(|l| l.pair.sums_to_zero_on(&subset));
            let cubic = [0, 1, 2].map(|k| average_gap(&cubic[k], &subset).abs() <= DEFAULT_TOL);
            Outcome { subset, lifts: exact, cubic, agree: float == exact }
        })
        .collect();
    let mut audit = SizeAudit {
        base_n: n,
        subsets_checked: total as u64,
        designs: 0,
        below_n: Vec::new(),
        beyond: Vec::new(),
        cubic_closure: true,
        exact_agrees: true,
    };
    for o in outcomes {
        audit.exact_agrees &= o.agree;
        audit.cubic_closure &= o.cubic.iter().all(|&c| c == o.cubic[0]);
        if !o.lifts {
            continue;
        }
        audit.designs += 1;
        if o.subset.len() < n {
            audit.below_n.push(o.subset.clone());
        }
        if o.cubic.iter().any(|&c| c) {
            audit.beyond.push(o.subset);
        }
    }
    Ok(audit)
}

/// An irreducible factor of the characteristic polynomial and its roots.
#[derive(Clone, Debug, PartialEq)]
pub struct MinimalPolynomial {
    /// Integer coefficients, lowest degree first.
    pub coeffs: Vec<BigInt>,
    /// Roots ascending, matched to eigenvalue clusters.
    pub roots: Vec<f64>,
}

fn cluster_of(dense: &DenseSpectrum, alpha: f64) -> Result<usize> {
    dense
        .clusters()
        .iter()
        .position(|r| (dense.cluster_value(r) - alpha).abs() < 1e-6)
        .ok_or_else(|| Error::InvalidArgument(format!("{alpha} is not an adjacency eigenvalue")))
}

/// Minimal polynomial of the adjacency eigenvalue `α`: the lowest-degree
/// product of `(x − β)` over distinct eigenvalues `β` (including `α`) with
/// integer coefficients dividing the characteristic polynomial exactly.
pub fn minimal_polynomial(g: &Graph, alpha: f64) -> Result<MinimalPolynomial> {
    let dense = dense_spectrum(g, MatrixKind::Adjacency)?;
    let clusters = dense.clusters();
    let values: Vec<f64> = clusters.iter().map(|r| dense.cluster_value(r)).collect();
    let home = cluster_of(&dense, alpha)?;
    let others: Vec<usize> = (0..values.len()).filter(|&i| i != home).collect();
    let charpoly = characteristic_polynomial(g, MatrixKind::Adjacency);
    for k in 0..=others.len() {
        for pick in combinations(others.len(), k) {
            let mut roots: Vec<f64> = pick.iter().map(|&i| values[others[i]]).collect();
            roots.push(values[home]);
            let mut coeffs = vec![1.0];
            for &r in &roots {
                let mut next = vec![0.0; coeffs.len() + 1];
                for (i, c) in coeffs.iter().enumerate() {
                    next[i + 1] += c;
                    next[i] -= r * c;
                }
                coeffs = next;
            }
            if coeffs.iter().any(|c| (c - c.round()).abs() > 1e-6 * c.abs().max(1.0)) {
                continue;
            }
            let ints: Vec<BigInt> = coeffs.iter().map(|c| BigInt::from(c.round() as i64)).collect();
            if div_exact(&charpoly, &ints).is_some() {
                roots.sort_by(f64::total_cmp);
                return Ok(MinimalPolynomial { coeffs: ints, roots });
            }
        }
    }
    unreachable!("the product over all distinct eigenvalues divides the characteristic polynomial")
}

/// If `D` averages the `α`-eigenspace then it averages the eigenspace of
/// every conjugate of `α`. Returns the truth of that implication.
pub fn conjugate_closure_check(g: &Graph, alpha: f64, d: &[usize]) -> Result<bool> {
    let verdicts = conjugate_verdicts(g, alpha)?;
    let v = verdicts(d)?;
    Ok(!v[0].1 || v.iter().all(|x| x.1))
}

type VerdictFn = Box<dyn Fn(&[usize]) -> Result<Vec<(String, bool)>> + Sync>;

fn conjugate_verdicts(g: &Graph, alpha: f64) -> Result<VerdictFn> {
    let mp = minimal_polynomial(g, alpha)?;
    if mp.coeffs.len() == 2 {
        return Err(Error::precondition(format!("{alpha} is rational; use the exact test")));
    }
    let dense = dense_spectrum(g, MatrixKind::Adjacency)?;
    let clusters = dense.clusters();
    let home = cluster_of(&dense, alpha)?;
    let mut order = vec![home];
    for &r in &mp.roots {
        let c = cluster_of(&dense, r)?;
        if c != home {
            order.push(c);
        }
    }
    let bases: Vec<(String, Vec<Vec<f64>>)> = order
        .iter()
        .map(|&c| {
            let r = &clusters[c];
            (format!("{:.6}", dense.cluster_value(r)), dense.cluster_vectors(r).iter().map(|v| v.to_vec()).collect())
        })
        .collect();
    let n = g.n();
    Ok(Box::new(move |d: &[usize]| {
        bases
            .iter()
            .map(|(label, basis)| {
                let refs: Vec<&[f64]> = basis.iter().map(Vec::as_slice).collect();
                Ok((label.clone(), eigenspace_residual(&refs, d, n)? <= DEFAULT_TOL))
            })
            .collect()
    }))
}

/// Exhaustive form: every nonempty subset averages either all of the
/// conjugate eigenspaces of `α` or none of them.
pub fn conjugate_closure_audit(g: &Graph, alpha: f64, budget: u64) -> Result<EquivalenceReport> {
    let verdicts = conjugate_verdicts(g, alpha)?;
    exhaustive_equivalence(&format!("conjugates of {alpha:.6}"), g.n(), budget, |d| {
        verdicts(d).expect("subsets are valid")
    })
}

/// Plain-text spectrum of `M(G)`: lifted eigenvalues exactly where the base
/// data is exact, cubic roots numerically.
pub fn spectrum_report(g: &Graph) -> Result<String> {
    let d = require_regular(g)?;
    let n = g.n();
    let mut out = format!("mycielski_spectrum\nbase_n: {n}\ndegree: {d}\n");
    for l in mycielski_lifts(g)? {
        let kind = if l.pair.is_exact() { "exact" } else { "float" };
        out.push_str(&format!(
            "lift: base={} variant={} mu={:.10} value={} ({kind})\n",
            l.base_index + 2,
            l.variant,
            l.mu,
            l.pair.value_string()
        ));
    }
    out.push_str(&format!("cubic: {}\n", poly_string(&cubic_coefficients(n, d))));
    for t in cubic_roots(n, d) {
        out.push_str(&format!("cubic_root: {t:.10}\n"));
    }
    out.push_str("end");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{are_isomorphic, complete, cycle, path, petersen};
    use crate::hamming::build_hamming;
    use std::f64::consts::PI;

    fn corpus() -> Vec<(String, Graph)> {
        let mut out: Vec<(String, Graph)> = (3..=12).map(|k| (format!("C_{k}"), cycle(k).unwrap())).collect();
        out.extend((2..=6).map(|k| (format!("K_{k}"), complete(k).unwrap())));
        out.push(("Petersen".into(), petersen()));
        out.push(("Q_3".into(), build_hamming(3, 2).unwrap()));
        out.push(("K_3,3".into(), complete_bipartite(3, 3)));
        out
    }

    fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges: Vec<_> = (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j))).collect();
        Graph::from_edges(a + b, &edges, Family::Generic).unwrap()
    }

    #[test]
    fn construction() {
        for (name, g) in corpus().into_iter().chain([("P_4".to_string(), path(4).unwrap())]) {
            let m = mycielskian(&g);
            assert_eq!(m.graph.n(), 2 * g.n() + 1, "{name}");
            assert_eq!(m.graph.edge_count(), 3 * g.edge_count() + g.n(), "{name}");
            assert_eq!(m.graph.degree(m.u_index()), g.n());
            assert!(m.matches_block_form(), "{name}");
            if g.is_triangle_free() {
                assert!(m.graph.is_triangle_free(), "{name}");
            }
        }
    }

    #[test]
    fn small_examples() {
        let c5 = mycielskian(&complete(2).unwrap());
        assert!(are_isomorphic(&c5.graph, &cycle(5).unwrap()));
        let grotzsch = mycielskian(&cycle(5).unwrap()).graph;
        assert_eq!((grotzsch.n(), grotzsch.edge_count()), (11, 20));
        assert!(grotzsch.is_triangle_free());
        let mut degrees: Vec<usize> = (0..11).map(|v| grotzsch.degree(v)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, [3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 5]);
    }

    #[test]
    fn base_eigenpairs_are_exact_in_q_sqrt5() {
        // C_5: 2cos(2πk/5) = (−1 ± √5)/2, all in Q[√5].
        let pairs = base_eigenpairs(&cycle(5).unwrap()).unwrap();
        assert_eq!(pairs.len(), 5);
        assert!(pairs.iter().all(Eigenpair::is_exact));
        let mut expected: Vec<f64> = (0..5).map(|k| 2.0 * (2.0 * PI * k as f64 / 5.0).cos()).collect();
        expected.sort_by(|a, b| b.total_cmp(a));
        for (p, e) in pairs.iter().zip(&expected) {
            assert!((p.value_f64() - e).abs() < 1e-12);
        }
        for (name, g) in corpus() {
            let pairs = base_eigenpairs(&g).unwrap();
            assert_eq!(pairs.len(), g.n(), "{name}");
            for p in &pairs {
                assert!(p.residual(&g, "x").unwrap().passes(), "{name}");
            }
        }
        // C_7 has cubic irrational eigenvalues and falls back to floats.
        let pairs = base_eigenpairs(&cycle(7).unwrap()).unwrap();
        assert_eq!(pairs.iter().filter(|p| p.is_exact()).count(), 1);
        assert!(base_eigenpairs(&path(4).unwrap()).is_err());
    }

    #[test]
    fn lifts_are_exact_eigenvectors() {
        for (name, g) in corpus() {
            let m = mycielskian(&g);
            let lifts = mycielski_lifts(&g).unwrap();
            assert_eq!(lifts.len(), 2 * g.n() - 2, "{name}");
            for l in &lifts {
                let r = l.pair.residual(&m.graph, "w").unwrap();
                assert!(r.passes(), "{name}: {r:?}");
                if g.n() <= 6 || name == "Petersen" {
                    assert!(l.pair.is_exact(), "{name}");
                }
            }
            let mus: Vec<f64> = lifts.iter().map(|l| l.mu).collect();
            assert!(mus.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn lift_values() {
        // C_4 with μ = 0 and x = (1,−1,1,−1).
        let x = Eigenpair::Exact {
            value: QuadSurd::from_integer(0),
            vector: [1, -1, 1, -1].map(QuadSurd::from_integer).to_vec(),
        };
        let c4 = cycle(4).unwrap();
        let lifts = lift_eigenpairs(&c4, std::slice::from_ref(&x)).unwrap();
        assert!(lifts.iter().all(|l| l.pair.value_f64() == 0.0));
        // K_3: μ = −1 twice, lifted to −φ and −φ̄.
        let lifts = mycielski_lifts(&complete(3).unwrap()).unwrap();
        let (phi, phibar) = golden_ratio();
        let minus_one = QuadSurd::from_integer(-1);
        let values: Vec<QuadSurd> = lifts
            .iter()
            .map(|l| match &l.pair {
                Eigenpair::Exact { value, .. } => value.clone(),
                Eigenpair::Float { .. } => panic!("K_3 lifts are exact"),
            })
            .collect();
        assert_eq!(values, vec![&phi * &minus_one, &phibar * &minus_one, &phi * &minus_one, &phibar * &minus_one]);
        let dense = dense_spectrum(&mycielskian(&complete(3).unwrap()).graph, MatrixKind::Adjacency).unwrap();
        let golden = (1.0 + 5f64.sqrt()) / 2.0;
        assert_eq!(dense.values.iter().filter(|v| (*v + golden).abs() < 1e-9).count(), 2);
        assert_eq!(dense.values.iter().filter(|v| (*v - (golden - 1.0)).abs() < 1e-9).count(), 2);
        assert!(lift_eigenpairs(
            &c4,
            &[Eigenpair::Exact { value: QuadSurd::from_integer(2), vector: vec![QuadSurd::from_integer(1); 4] }]
        )
        .is_err());
    }

    #[test]
    fn cubic() {
        assert_eq!(cubic_coefficients(5, 2), [1, -2, -9, 10]);
        assert_eq!(poly_string(&cubic_coefficients(5, 2)), "t^3 - 2t^2 - 9t + 10");
        assert_eq!(cubic_coefficients(2, 1), [1, -1, -3, 2]);
        let c5: Vec<f64> = (0..5).map(|k| 2.0 * (2.0 * PI * k as f64 / 5.0).cos()).collect();
        for t in cubic_roots(2, 1) {
            assert!(c5.iter().any(|e| (e - t).abs() < 1e-10), "{t}");
        }
        for (n, d) in [(5, 2), (3, 2), (10, 3), (12, 2), (4, 3)] {
            let roots = cubic_roots(n, d);
            assert!((roots.iter().sum::<f64>() - d as f64).abs() < 1e-9);
            let [_, a, b, c] = cubic_coefficients(n, d).map(|x| x as f64);
            for t in roots {
                assert!((((t + a) * t + b) * t + c).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn cubic_eigenvectors() {
        for (name, g) in corpus() {
            let (n, d) = (g.n(), g.regular_degree().unwrap());
            let m = mycielskian(&g).graph;
            for t in cubic_roots(n, d) {
                let w = cubic_eigenvector(n, d, t);
                let aw = m.apply_f64(MatrixKind::Adjacency, &w);
                let r = aw.iter().zip(&w).map(|(x, y)| (x - t * y).abs()).fold(0.0, f64::max);
                assert!(r < 1e-9, "{name}");
            }
        }
    }

    #[test]
    fn spectrum_completeness() {
        for (name, g) in corpus() {
            let gap = spectrum_completeness_gap(&g).unwrap();
            assert!(gap <= 1e-8, "{name}: {gap}");
        }
    }

    #[test]
    fn central_vertex() {
        for (g, averaged) in [(cycle(5).unwrap(), "8 of 11"), (complete(3).unwrap(), "4 of 7")] {
            let c = central_vertex_check(&g).unwrap();
            assert!(c.verdict(), "{}", c.render());
            assert_eq!(c.note("averaged"), Some(averaged));
        }
        for (name, g) in corpus() {
            let c = central_vertex_check(&g).unwrap();
            assert!(c.verdict(), "{name}: {}", c.render());
            assert_eq!(c.note("averaged").unwrap(), format!("{} of {}", 2 * g.n() - 2, 2 * g.n() + 1));
        }
        assert_eq!(central_vertex_check(&cycle(5).unwrap()).unwrap().note("cubic"), Some("t^3 - 2t^2 - 9t + 10"));
        assert!(central_vertex_check(&path(3).unwrap()).is_err());
    }

    #[test]
    fn central_vertex_count_from_dense_basis() {
        // Independent of the lift formula: in each dense eigenspace E of
        // M(G), {u} averages a subspace of dimension dim E − rank(f) with
        // f(w) = w(u) − mean(w).
        for (g, expected) in [(cycle(5).unwrap(), 8), (complete(3).unwrap(), 4), (petersen(), 18)] {
            let m = mycielskian(&g);
            let size = m.graph.n();
            let dense = dense_spectrum(&m.graph, MatrixKind::Adjacency).unwrap();
            let mut averaged = 0;
            for r in dense.clusters() {
                let f_zero = dense.cluster_vectors(&r).iter().all(|w| average_gap(w, &[m.u_index()]).abs() < 1e-9);
                averaged += if f_zero { r.len() } else { r.len() - 1 };
            }
            assert_eq!(averaged, expected, "{size}");
        }
    }

    #[test]
    fn restriction() {
        let c4 = cycle(4).unwrap();
        let m = mycielskian(&c4);
        let x = Eigenpair::Exact {
            value: QuadSurd::from_integer(0),
            vector: [1, -1, 1, -1].map(QuadSurd::from_integer).to_vec(),
        };
        let full: Vec<usize> = (0..8).collect();
        let r = restrict_design(&m, &full, &x).unwrap();
        assert!(r.holds() && !r.vacuous());
        assert_eq!(r.in_v, vec![0, 1, 2, 3]);
        let r = restrict_design(&m, &[8], &x).unwrap();
        assert!(r.vacuous() && r.holds());
        // Averaging both lifts forces both halves to sum to zero against x.
        let mut checked = 0;
        for mask in 1u64..(1 << 9) {
            let d = mask_to_subset(mask, 9);
            if let Ok(r) = restrict_design(&m, &d, &x) {
                assert!(r.holds(), "{d:?}");
                checked += 1;
            }
        }
        assert!(checked > 2);
        assert!(restrict_design(&m, &[0], &x).is_err());
    }

    #[test]
    fn restriction_with_surd_eigenvector() {
        let c5 = cycle(5).unwrap();
        let m = mycielskian(&c5);
        let base = base_eigenpairs(&c5).unwrap();
        for x in &base[1..] {
            for mask in 1u64..(1 << 11) {
                let d = mask_to_subset(mask, 11);
                if let Ok(r) = restrict_design(&m, &d, x) {
                    assert!(r.holds());
                }
            }
        }
    }

    #[test]
    fn size_audit() {
        for g in [complete(3).unwrap(), cycle(4).unwrap()] {
            let a = design_size_audit(&g, 1 << 20).unwrap();
            assert!(a.holds(), "{}", a.render());
        }
        assert!(design_size_audit(&cycle(4).unwrap(), 100).unwrap_err().is_budget());
    }

    #[test]
    fn conjugate_closure() {
        let c5 = cycle(5).unwrap();
        let alpha = 2.0 * (2.0 * PI / 5.0).cos();
        let mp = minimal_polynomial(&c5, alpha).unwrap();
        assert_eq!(mp.coeffs, [-1, 1, 1].map(BigInt::from).to_vec());
        let report = conjugate_closure_audit(&c5, alpha, 1 << 10).unwrap();
        assert!(report.holds(), "{}", report.render());
        assert_eq!(report.subsets_checked, 31);
        assert!(conjugate_closure_check(&c5, alpha, &[0, 1, 2, 3, 4]).unwrap());
        assert!(conjugate_closure_check(&c5, 2.0, &[0]).is_err());

        let mk3 = mycielskian(&complete(3).unwrap()).graph;
        let roots = cubic_roots(3, 2);
        let mp = minimal_polynomial(&mk3, roots[0]).unwrap();
        assert_eq!(mp.coeffs, [6, -7, -2, 1].map(BigInt::from).to_vec());
        for t in roots {
            let report = conjugate_closure_audit(&mk3, t, 1 << 10).unwrap();
            assert!(report.holds(), "{}", report.render());
            assert_eq!(report.subsets_checked, 127);
        }
    }

    #[test]
    fn report_text() {
        let s = spectrum_report(&complete(2).unwrap()).unwrap();
        assert!(s.starts_with("mycielski_spectrum\nbase_n: 2\n"));
        assert!(s.contains("cubic: t^3 - t^2 - 3t + 2"));
        assert!(s.ends_with("end"));
    }
}
