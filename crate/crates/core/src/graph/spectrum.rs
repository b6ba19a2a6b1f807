//! Exact spectra with Lagrange projectors, and a dense float fallback.

use std::ops::Range;

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::{validate_subset, Certificate, Graph, Residual};
use crate::{Error, Result};

/// Largest graph the dense eigensolver accepts by default.
pub const DEFAULT_DENSE_LIMIT: usize = 2048;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    Laplacian,
    Adjacency,
}

impl MatrixKind {
    pub fn name(self) -> &'static str {
        match self {
            MatrixKind::Laplacian => "laplacian",
            MatrixKind::Adjacency => "adjacency",
        }
    }
}

/// Distinct exact eigenvalues with multiplicities, strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumSketch {
    eigenvalues: Vec<(BigRational, usize)>,
    source: MatrixKind,
}

impl SpectrumSketch {
    pub fn new(eigenvalues: Vec<(BigRational, usize)>, source: MatrixKind) -> Result<Self> {
        for w in eigenvalues.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(Error::RepeatedEigenvalue(format!("{} then {}", w[0].0, w[1].0)));
            }
        }
        if eigenvalues.iter().any(|(_, m)| *m == 0) {
            return Err(Error::InvalidArgument("eigenvalue multiplicity must be positive".into()));
        }
        Ok(SpectrumSketch { eigenvalues, source })
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn eigenvalue(&self, l: usize) -> &BigRational {
        &self.eigenvalues[l].0
    }

    pub fn multiplicity(&self, l: usize) -> usize {
        self.eigenvalues[l].1
    }

    pub fn entries(&self) -> &[(BigRational, usize)] {
        &self.eigenvalues
    }

    pub fn source(&self) -> MatrixKind {
        self.source
    }

    pub fn total_multiplicity(&self) -> usize {
        self.eigenvalues.iter().map(|(_, m)| m).sum()
    }

    pub fn index_of(&self, theta: &BigRational) -> Option<usize> {
        self.eigenvalues.iter().position(|(t, _)| t == theta)
    }

    fn check_graph(&self, g: &Graph) -> Result<()> {
        if self.total_multiplicity() != g.n() {
            return Err(Error::DimensionMismatch { expected: g.n(), got: self.total_multiplicity() });
        }
        Ok(())
    }

    /// Exact audit: every projector annihilates the other eigenspaces (so the
    /// listed values contain the whole spectrum) and has trace equal to the
    /// stated multiplicity.
    pub fn verify_against(&self, g: &Graph) -> Result<()> {
        self.check_graph(g)?;
        let n = g.n();
        for l in 0..self.len() {
            let mut trace = BigRational::zero();
            for i in 0..n {
                let mut e = vec![BigRational::zero(); n];
                e[i] = BigRational::one();
                let p = lagrange_eigenspace_project(g, self, l, &e)?;
                let mp = apply(g, self.source, &p)?;
                if mp.iter().zip(&p).any(|(a, b)| *a != b * self.eigenvalue(l)) {
                    return Err(Error::precondition(format!(
                        "projector {l} image is not an eigenvector for {}",
                        self.eigenvalue(l)
                    )));
                }
                trace += &p[i];
            }
            if trace != BigRational::from_integer(self.multiplicity(l).into()) {
                return Err(Error::precondition(format!(
                    "eigenvalue {} has multiplicity {trace}, not {}",
                    self.eigenvalue(l),
                    self.multiplicity(l)
                )));
            }
        }
        Ok(())
    }
}

fn apply(g: &Graph, kind: MatrixKind, v: &[BigRational]) -> Result<Vec<BigRational>> {
    match kind {
        MatrixKind::Laplacian => g.laplacian_apply(v),
        MatrixKind::Adjacency => g.adjacency_apply(v),
    }
}

/// `P_ℓ v` with `P_ℓ = Π_{m≠ℓ} (M − θ_m I)/(θ_ℓ − θ_m)`.
pub fn lagrange_eigenspace_project(
    g: &Graph,
    spectrum: &SpectrumSketch,
    l: usize,
    v: &[BigRational],
) -> Result<Vec<BigRational>> {
    spectrum.check_graph(g)?;
    if v.len() != g.n() {
        return Err(Error::DimensionMismatch { expected: g.n(), got: v.len() });
    }
    if l >= spectrum.len() {
        return Err(Error::InvalidArgument(format!("eigenspace index {l} out of range")));
    }
    let theta_l = spectrum.eigenvalue(l);
    let mut w = v.to_vec();
    for m in 0..spectrum.len() {
        if m == l {
            continue;
        }
        let theta_m = spectrum.eigenvalue(m);
        let scale = (theta_l - theta_m).recip();
        let mw = apply(g, spectrum.source, &w)?;
        w = mw.into_iter().zip(&w).map(|(a, b)| (a - b * theta_m) * &scale).collect();
    }
    Ok(w)
}

/// Exact design test: `P_ℓ 𝟙_D = 0` for every `ℓ ∈ S`.
pub fn is_design_by_projectors(g: &Graph, spectrum: &SpectrumSketch, s: &[usize], d: &[usize]) -> Result<Certificate> {
    g.validate_design(d)?;
    let n = g.n();
    let mut indicator = vec![BigRational::zero(); n];
    for &v in d {
        indicator[v] = BigRational::one();
    }
    let mut cert =
        Certificate::new(format!("{} eigenspaces {}", spectrum.source.name(), describe_indices(spectrum, s)))
            .with_size(d.len());
    for &l in s {
        let p = lagrange_eigenspace_project(g, spectrum, l, &indicator)?;
        let nonzero: Vec<usize> = (0..n).filter(|&i| !p[i].is_zero()).collect();
        let label = format!("eigenvalue {}", spectrum.eigenvalue(l));
        if nonzero.is_empty() {
            cert.push_residual(Residual::exact(label, true, "P1_D = 0"));
        } else {
            let first = nonzero[0];
            let value = format!("{} nonzero entries, first at vertex {} = {}", nonzero.len(), first + 1, p[first]);
            cert.push_residual(Residual::exact(label.clone(), false, value));
            if cert.counterexample().is_none() {
                cert.set_counterexample(label);
            }
        }
    }
    Ok(cert)
}

fn describe_indices(spectrum: &SpectrumSketch, s: &[usize]) -> String {
    let parts: Vec<String> = s
        .iter()
        .map(|&l| match l < spectrum.len() {
            true => spectrum.eigenvalue(l).to_string(),
            false => format!("#{l}"),
        })
        .collect();
    format!("{{{}}}", parts.join(","))
}

/// Integer projector numerators `N_ℓ e_v` for every vertex, so that the
/// projection of an indicator vector is a sum of precomputed columns. Used
/// by exhaustive enumerations and incremental search.
#[derive(Clone, Debug)]
pub struct ProjectorSystem {
    n: usize,
    selected: Vec<usize>,
    /// `columns[s][v]` is the numerator of `P_{selected[s]} e_v`.
    columns: Vec<Vec<Vec<i64>>>,
}

impl ProjectorSystem {
    pub fn new(g: &Graph, spectrum: &SpectrumSketch, selected: &[usize]) -> Result<Self> {
        spectrum.check_graph(g)?;
        let n = g.n();
        let mut columns = Vec::with_capacity(selected.len());
        for &l in selected {
            if l >= spectrum.len() {
                return Err(Error::InvalidArgument(format!("eigenspace index {l} out of range")));
            }
            let mut per_vertex = Vec::with_capacity(n);
            for v in 0..n {
                let mut w = vec![BigInt::zero(); n];
                w[v] = BigInt::one();
                for m in 0..spectrum.len() {
                    if m == l {
                        continue;
                    }
                    let theta = spectrum.eigenvalue(m);
                    let (a, b) = (theta.numer(), theta.denom());
                    let mw = int_apply(g, spectrum.source, &w);
                    w = mw.iter().zip(&w).map(|(x, y)| b * x - a * y).collect();
                }
                let col = w
                    .iter()
                    .map(|x| x.to_i64())
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| Error::precondition("projector numerator exceeds 64 bits"))?;
                per_vertex.push(col);
            }
            columns.push(per_vertex);
        }
        Ok(ProjectorSystem { n, selected: selected.to_vec(), columns })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn selected(&self) -> &[usize] {
        &self.selected
    }

    /// Zeroed accumulator for [`ProjectorSystem::add_vertex`].
    pub fn empty_state(&self) -> Vec<i128> {
        vec![0; self.selected.len() * self.n]
    }

    pub fn add_vertex(&self, state: &mut [i128], v: usize) {
        for (s, cols) in self.columns.iter().enumerate() {
            let block = &mut state[s * self.n..(s + 1) * self.n];
            for (acc, &c) in block.iter_mut().zip(&cols[v]) {
                *acc += c as i128;
            }
        }
    }

    pub fn state_vanishes(&self, state: &[i128]) -> bool {
        state.iter().all(|&x| x == 0)
    }

    /// Whether `P_ℓ 𝟙_D = 0` for each selected `ℓ`, in order.
    pub fn vanishing(&self, d: &[usize]) -> Vec<bool> {
        let mut state = self.empty_state();
        for &v in d {
            self.add_vertex(&mut state, v);
        }
        state.chunks(self.n).map(|c| c.iter().all(|&x| x == 0)).collect()
    }

    pub fn is_design(&self, d: &[usize]) -> bool {
        self.vanishing(d).into_iter().all(|b| b)
    }
}

fn int_apply(g: &Graph, kind: MatrixKind, v: &[BigInt]) -> Vec<BigInt> {
    (0..g.n())
        .map(|u| {
            let s = g.neighbors(u).iter().fold(BigInt::zero(), |acc, &w| acc + &v[w]);
            match kind {
                MatrixKind::Adjacency => s,
                MatrixKind::Laplacian => &v[u] * BigInt::from(g.degree(u)) - s,
            }
        })
        .collect()
}

/// Float eigenpairs, eigenvalues ascending, `vectors[i]` unit-norm.
#[derive(Clone, Debug)]
pub struct DenseSpectrum {
    pub kind: MatrixKind,
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
}

impl DenseSpectrum {
    /// Index ranges of numerically equal eigenvalues.
    pub fn clusters(&self) -> Vec<Range<usize>> {
        eigenspace_clusters(&self.values, 1e-7)
    }

    pub fn cluster_vectors(&self, r: &Range<usize>) -> Vec<&[f64]> {
        self.vectors[r.clone()].iter().map(Vec::as_slice).collect()
    }

    pub fn cluster_value(&self, r: &Range<usize>) -> f64 {
        self.values[r.clone()].iter().sum::<f64>() / r.len() as f64
    }
}

/// Group consecutive sorted values whose gap is below `tol` (relative to
/// magnitude once it exceeds 1).
pub fn eigenspace_clusters(values: &[f64], tol: f64) -> Vec<Range<usize>> {
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..=values.len() {
        let split = i == values.len() || values[i] - values[i - 1] > tol * values[i].abs().max(1.0);
        if split {
            out.push(start..i);
            start = i;
        }
    }
    out
}

/// Full symmetric eigendecomposition with the default size limit.
pub fn dense_spectrum(g: &Graph, kind: MatrixKind) -> Result<DenseSpectrum> {
    dense_spectrum_with_limit(g, kind, DEFAULT_DENSE_LIMIT)
}

/// Full symmetric eigendecomposition. Within each numerically repeated
/// eigenvalue the basis is replaced by a canonical one (Gram–Schmidt on the
/// eigenspace projector's columns in vertex order, first nonzero entry
/// positive), so the output does not depend on solver internals.
pub fn dense_spectrum_with_limit(g: &Graph, kind: MatrixKind, limit: usize) -> Result<DenseSpectrum> {
    let n = g.n();
    if n > limit {
        return Err(Error::SizeLimit { what: "dense eigenproblem", size: n as u128, limit: limit as u128 });
    }
    let m = DMatrix::from_fn(n, n, |i, j| {
        let a = if g.has_edge(i, j) { 1.0 } else { 0.0 };
        match kind {
            MatrixKind::Adjacency => a,
            MatrixKind::Laplacian if i == j => g.degree(i) as f64,
            MatrixKind::Laplacian => -a,
        }
    });
    let eig = SymmetricEigen::new(m);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let raw: Vec<Vec<f64>> = order.iter().map(|&i| eig.eigenvectors.column(i).iter().copied().collect()).collect();
    let mut vectors = Vec::with_capacity(n);
    for r in eigenspace_clusters(&values, 1e-7) {
        vectors.extend(canonical_basis(&raw[r], n));
    }
    Ok(DenseSpectrum { kind, values, vectors })
}

fn canonical_basis(basis: &[Vec<f64>], n: usize) -> Vec<Vec<f64>> {
    let m = basis.len();
    let mut out: Vec<Vec<f64>> = Vec::with_capacity(m);
    for i in 0..n {
        if out.len() == m {
            break;
        }
        // column i of the projector V Vᵀ
        let mut w: Vec<f64> = (0..n).map(|r| basis.iter().map(|v| v[r] * v[i]).sum()).collect();
        for u in &out {
            let dot: f64 = u.iter().zip(&w).map(|(a, b)| a * b).sum();
            for (x, y) in w.iter_mut().zip(u) {
                *x -= dot * y;
            }
        }
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-6 {
            w.iter_mut().for_each(|x| *x /= norm);
            out.push(w);
        }
    }
    for v in &mut out {
        if let Some(first) = v.iter().find(|x| x.abs() > 1e-9).copied() {
            if first < 0.0 {
                v.iter_mut().for_each(|x| *x = -*x);
            }
        }
    }
    out
}

/// Basis-free averaging residual of an eigenspace given an orthonormal
/// basis: the norm of the projection of `𝟙_D/|D| − 𝟙/n`.
pub fn eigenspace_residual(basis: &[&[f64]], d: &[usize], n: usize) -> Result<f64> {
    validate_subset(n, d)?;
    let s: f64 = basis
        .iter()
        .map(|phi| {
            let g = super::average_gap(phi, d);
            g * g
        })
        .sum();
    Ok(s.sqrt())
}

/// Float test on whole eigenspaces of a dense spectrum. `s` indexes
/// [`DenseSpectrum::clusters`], so index 0 is the smallest eigenvalue.
pub fn is_design_float(dense: &DenseSpectrum, s: &[usize], d: &[usize], tol: f64) -> Result<Certificate> {
    let n = dense.values.len();
    validate_subset(n, d)?;
    let clusters = dense.clusters();
    let mut cert = Certificate::new(format!("{} eigenspaces {:?} (float)", dense.kind.name(), s)).with_size(d.len());
    for &l in s {
        let r = clusters.get(l).ok_or_else(|| Error::InvalidArgument(format!("eigenspace index {l} out of range")))?;
        let label = format!("eigenvalue {:.9}", dense.cluster_value(r));
        let residual = eigenspace_residual(&dense.cluster_vectors(r), d, n)?;
        let res = Residual::float(label.clone(), residual, tol);
        if !res.passes() && cert.counterexample().is_none() {
            cert.set_counterexample(label);
        }
        cert.push_residual(res);
    }
    Ok(cert)
}

/// Exact sketch for a graph whose eigenvalues are all integers: the dense
/// eigenvalues are rounded and the result is confirmed with
/// [`SpectrumSketch::verify_against`]. `None` if either step fails.
pub fn integer_sketch(g: &Graph, kind: MatrixKind) -> Result<Option<SpectrumSketch>> {
    let dense = dense_spectrum(g, kind)?;
    let mut entries: Vec<(BigRational, usize)> = Vec::new();
    for r in dense.clusters() {
        let v = dense.cluster_value(&r);
        if (v - v.round()).abs() > 1e-6 {
            return Ok(None);
        }
        entries.push((BigRational::from_integer(BigInt::from(v.round() as i64)), r.len()));
    }
    let Ok(sketch) = SpectrumSketch::new(entries, kind) else { return Ok(None) };
    Ok(sketch.verify_against(g).is_ok().then_some(sketch))
}

/// Characteristic polynomial `det(xI − M)`, lowest degree first, by the
/// Faddeev–LeVerrier recursion in exact rationals.
pub fn characteristic_polynomial(g: &Graph, kind: MatrixKind) -> Vec<BigInt> {
    let n = g.n();
    let mat: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let a: i64 = if g.has_edge(i, j) { 1 } else { 0 };
                    let x = match kind {
                        MatrixKind::Adjacency => a,
                        MatrixKind::Laplacian if i == j => g.degree(i) as i64,
                        MatrixKind::Laplacian => -a,
                    };
                    BigRational::from_integer(x.into())
                })
                .collect()
        })
        .collect();
    let matmul = |a: &Vec<Vec<BigRational>>, b: &Vec<Vec<BigRational>>| -> Vec<Vec<BigRational>> {
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).fold(BigRational::zero(), |acc, k| acc + &a[i][k] * &b[k][j])).collect())
            .collect()
    };
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut mk = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        for (i, row) in mk.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        let amk = matmul(&mat, &mk);
        let trace = (0..n).fold(BigRational::zero(), |acc, i| acc + &amk[i][i]);
        coeffs[n - k] = -trace / BigRational::from_integer(BigInt::from(k));
        mk = amk;
    }
    coeffs
        .into_iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::graph::{complete, cycle, path, petersen};

    fn sketch(pairs: &[(i64, usize)], kind: MatrixKind) -> SpectrumSketch {
        SpectrumSketch::new(pairs.iter().map(|&(v, m)| (rat(v), m)).collect(), kind).unwrap()
    }

    #[test]
    fn sketch_rejects_repeats() {
        let r = SpectrumSketch::new(vec![(rat(0), 1), (rat(0), 1)], MatrixKind::Laplacian);
        assert!(matches!(r, Err(Error::RepeatedEigenvalue(_))));
    }

    #[test]
    fn petersen_sketch_verifies() {
        let g = petersen();
        sketch(&[(0, 1), (2, 5), (5, 4)], MatrixKind::Laplacian).verify_against(&g).unwrap();
        sketch(&[(-2, 4), (1, 5), (3, 1)], MatrixKind::Adjacency).verify_against(&g).unwrap();
        assert!(sketch(&[(0, 1), (2, 4), (5, 5)], MatrixKind::Laplacian).verify_against(&g).is_err());
        assert!(sketch(&[(0, 1), (3, 5), (5, 4)], MatrixKind::Laplacian).verify_against(&g).is_err());
    }

    #[test]
    fn ones_lies_in_trivial_eigenspace() {
        let g = cycle(4).unwrap();
        let sp = sketch(&[(0, 1), (2, 2), (4, 1)], MatrixKind::Laplacian);
        let ones = vec![rat(1); 4];
        assert_eq!(lagrange_eigenspace_project(&g, &sp, 0, &ones).unwrap(), ones);
        for l in 1..3 {
            assert!(lagrange_eigenspace_project(&g, &sp, l, &ones).unwrap().iter().all(Zero::is_zero));
        }
        let alt = vec![rat(1), rat(-1), rat(1), rat(-1)];
        assert_eq!(lagrange_eigenspace_project(&g, &sp, 2, &alt).unwrap(), alt);
    }

    #[test]
    fn dense_small_spectra() {
        let k2 = dense_spectrum(&path(2).unwrap(), MatrixKind::Laplacian).unwrap();
        assert!((k2.values[0]).abs() < 1e-12 && (k2.values[1] - 2.0).abs() < 1e-12);
        let c4 = dense_spectrum(&cycle(4).unwrap(), MatrixKind::Laplacian).unwrap();
        for (v, e) in c4.values.iter().zip([0.0, 2.0, 2.0, 4.0]) {
            assert!((v - e).abs() < 1e-9);
        }
        assert_eq!(c4.clusters(), vec![0..1, 1..3, 3..4]);
        assert!(dense_spectrum_with_limit(&cycle(4).unwrap(), MatrixKind::Laplacian, 3).is_err());
    }

    #[test]
    fn dense_vectors_are_orthonormal_eigenvectors() {
        let g = petersen();
        let ds = dense_spectrum(&g, MatrixKind::Adjacency).unwrap();
        for (i, v) in ds.vectors.iter().enumerate() {
            let mv = g.apply_f64(MatrixKind::Adjacency, v);
            for (a, b) in mv.iter().zip(v) {
                assert!((a - ds.values[i] * b).abs() < 1e-9);
            }
            for w in &ds.vectors[..i] {
                let dot: f64 = v.iter().zip(w).map(|(a, b)| a * b).sum();
                assert!(dot.abs() < 1e-9);
            }
            let first = v.iter().find(|x| x.abs() > 1e-9).unwrap();
            assert!(*first > 0.0);
        }
    }

    #[test]
    fn characteristic_polynomials() {
        let c = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        // K_3 adjacency: (x-2)(x+1)^2 = x^3 - 3x - 2
        assert_eq!(characteristic_polynomial(&complete(3).unwrap(), MatrixKind::Adjacency), c(&[-2, -3, 0, 1]));
        // C_5 adjacency: (x-2)(x^2+x-1)^2
        assert_eq!(characteristic_polynomial(&cycle(5).unwrap(), MatrixKind::Adjacency), c(&[-2, 5, 0, -5, 0, 1]));
    }

    #[test]
    fn projector_system_matches_rational_projection() {
        let g = petersen();
        let sp = sketch(&[(0, 1), (2, 5), (5, 4)], MatrixKind::Laplacian);
        let sys = ProjectorSystem::new(&g, &sp, &[1, 2]).unwrap();
        for mask in 1u32..(1 << 10) {
            let d: Vec<usize> = (0..10).filter(|i| mask >> i & 1 == 1).collect();
            let cert = is_design_by_projectors(&g, &sp, &[1, 2], &d).unwrap();
            let fast = sys.vanishing(&d);
            let slow: Vec<bool> = cert.residuals().iter().map(Residual::passes).collect();
            assert_eq!(fast, slow);
        }
    }

    #[test]
    fn integer_sketches() {
        let s = integer_sketch(&petersen(), MatrixKind::Laplacian).unwrap().unwrap();
        assert_eq!(s, sketch(&[(0, 1), (2, 5), (5, 4)], MatrixKind::Laplacian));
        assert!(integer_sketch(&cycle(5).unwrap(), MatrixKind::Laplacian).unwrap().is_none());
        assert!(integer_sketch(&cycle(6).unwrap(), MatrixKind::Adjacency).unwrap().is_some());
    }

    #[test]
    fn float_certificates_agree_with_projectors() {
        let g = cycle(6).unwrap();
        let exact = integer_sketch(&g, MatrixKind::Laplacian).unwrap().unwrap();
        let dense = dense_spectrum(&g, MatrixKind::Laplacian).unwrap();
        for mask in 1u64..64 {
            let d = crate::util::mask_to_subset(mask, 6);
            for l in 1..exact.len() {
                let a = is_design_by_projectors(&g, &exact, &[l], &d).unwrap().verdict();
                let b = is_design_float(&dense, &[l], &d, 1e-8).unwrap().verdict();
                assert_eq!(a, b, "{d:?} {l}");
            }
        }
        let c = is_design_float(&dense, &[3], &[0], 1e-8).unwrap();
        assert!(!c.verdict() && c.counterexample().is_some());
        assert!(is_design_float(&dense, &[9], &[0], 1e-8).is_err());
    }
}
