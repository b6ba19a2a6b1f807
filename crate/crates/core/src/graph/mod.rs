//! Undirected simple graphs, matrix application, and the averaging tests.

mod certificate;
mod spectrum;
mod tester;

pub use certificate::{Certificate, Fact, Residual};
pub use spectrum::{
    characteristic_polynomial, dense_spectrum, dense_spectrum_with_limit, eigenspace_clusters, eigenspace_residual,
    integer_sketch, is_design_by_projectors, is_design_float, lagrange_eigenspace_project, DenseSpectrum, MatrixKind,
    ProjectorSystem, SpectrumSketch, DEFAULT_DENSE_LIMIT,
};
pub use tester::ProjectorTester;

use std::collections::VecDeque;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::{Error, Result};

/// Default tolerance for float averaging tests.
pub const DEFAULT_TOL: f64 = 1e-8;

/// Structural origin of a graph, carried so exact tests can be selected.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Generic,
    Hamming {
        n: usize,
        q: usize,
    },
    Johnson {
        n: usize,
        k: usize,
    },
    /// Connection set given as a list of cycle types (each a partition of `n`).
    Cayley {
        n: usize,
        classes: Vec<Vec<usize>>,
    },
    Mycielskian {
        base_n: usize,
    },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Generic => f.write_str("generic"),
            Family::Hamming { n, q } => write!(f, "hamming {n} {q}"),
            Family::Johnson { n, k } => write!(f, "johnson {n} {k}"),
            Family::Cayley { n, classes } => {
                let cs: Vec<String> =
                    classes.iter().map(|c| c.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")).collect();
                write!(f, "cayley {n} {}", cs.join(";"))
            }
            Family::Mycielskian { base_n } => write!(f, "mycielskian {base_n}"),
        }
    }
}

/// An undirected simple graph on vertices `0..n` with sorted neighbor lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    neighbors: Vec<Vec<usize>>,
    family: Family,
}

impl Graph {
    /// Build from an edge list, rejecting loops, repeated edges, out-of-range
    /// endpoints and disconnected graphs.
    pub fn from_edges(n: usize, edges: &[(usize, usize)], family: Family) -> Result<Self> {
        let g = Self::from_edges_unchecked_connectivity(n, edges, family)?;
        if !g.is_connected() {
            return Err(Error::InvalidGraph("graph is disconnected".into()));
        }
        Ok(g)
    }

    /// As [`Graph::from_edges`] but permits several components. Normal Cayley
    /// graphs whose connection set lies in the alternating group are the one
    /// place this is needed.
    pub fn from_edges_unchecked_connectivity(n: usize, edges: &[(usize, usize)], family: Family) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("graph needs at least one vertex".into()));
        }
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u},{v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for (u, list) in neighbors.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidGraph(format!("repeated edge at vertex {u}")));
            }
        }
        Ok(Graph { neighbors, family })
    }

    pub(crate) fn from_sorted_neighbors(neighbors: Vec<Vec<usize>>, family: Family) -> Self {
        debug_assert!(neighbors.iter().all(|l| l.windows(2).all(|w| w[0] < w[1])));
        Graph { neighbors, family }
    }

    pub fn n(&self) -> usize {
        self.neighbors.len()
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn with_family(mut self, family: Family) -> Self {
        self.family = family;
        self
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors[u].binary_search(&v).is_ok()
    }

    /// Common degree, if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        self.neighbors.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.neighbors.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.neighbors[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == n
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().iter().all(|&(u, v)| {
            let (a, b) = (&self.neighbors[u], &self.neighbors[v]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return false,
                }
            }
            true
        })
    }

    /// Dense 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        let n = self.n();
        let mut m = vec![vec![0u8; n]; n];
        for (u, list) in self.neighbors.iter().enumerate() {
            for &v in list {
                m[u][v] = 1;
            }
        }
        m
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), got: len });
        }
        Ok(())
    }

    /// `A v` over any additive scalar.
    pub fn adjacency_apply<T>(&self, v: &[T]) -> Result<Vec<T>>
    where
        T: Clone + Zero + std::ops::Add<Output = T>,
    {
        self.check_len(v.len())?;
        Ok(self.neighbors.iter().map(|list| list.iter().fold(T::zero(), |acc, &w| acc + v[w].clone())).collect())
    }

    /// `L v = (D − A) v`, exactly.
    pub fn laplacian_apply(&self, v: &[BigRational]) -> Result<Vec<BigRational>> {
        self.check_len(v.len())?;
        Ok(self
            .neighbors
            .iter()
            .enumerate()
            .map(|(u, list)| {
                let mut acc = &v[u] * BigRational::from_integer(list.len().into());
                for &w in list {
                    acc -= &v[w];
                }
                acc
            })
            .collect())
    }

    /// Apply the chosen matrix to a float vector.
    pub fn apply_f64(&self, kind: MatrixKind, v: &[f64]) -> Vec<f64> {
        self.neighbors
            .iter()
            .enumerate()
            .map(|(u, list)| {
                let s: f64 = list.iter().map(|&w| v[w]).sum();
                match kind {
                    MatrixKind::Adjacency => s,
                    MatrixKind::Laplacian => list.len() as f64 * v[u] - s,
                }
            })
            .collect()
    }

    /// Vertex ids must be in range and distinct; the design must be nonempty.
    pub fn validate_design(&self, d: &[usize]) -> Result<()> {
        validate_subset(self.n(), d)
    }
}

pub(crate) fn validate_subset(n: usize, d: &[usize]) -> Result<()> {
    if d.is_empty() {
        return Err(Error::EmptyDesign);
    }
    let mut seen = vec![false; n];
    for &v in d {
        if v >= n {
            return Err(Error::InvalidArgument(format!("vertex {} out of range 1..={n}", v + 1)));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidArgument(format!("vertex {} repeated in design", v + 1)));
        }
    }
    Ok(())
}

/// Whether `D` averages `φ`: `|mean_D φ − mean_V φ| ≤ tol`.
pub fn averages(g: &Graph, phi: &[f64], d: &[usize], tol: f64) -> Result<bool> {
    g.check_len(phi.len())?;
    g.validate_design(d)?;
    Ok(average_gap(phi, d).abs() <= tol)
}

/// `mean_D φ − mean_V φ`.
pub fn average_gap(phi: &[f64], d: &[usize]) -> f64 {
    let mean_d = d.iter().map(|&v| phi[v]).sum::<f64>() / d.len() as f64;
    let mean_v = phi.iter().sum::<f64>() / phi.len() as f64;
    mean_d - mean_v
}

/// Exact zero-sum test for eigenvectors orthogonal to the all-ones vector.
pub fn averages_sum_zero<T>(phi: &[T], d: &[usize]) -> bool
where
    T: Clone + Zero + std::ops::Add<Output = T>,
{
    d.iter().fold(T::zero(), |acc, &v| acc + phi[v].clone()).is_zero()
}

/// Cycle `C_n`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument("a cycle needs at least 3 vertices".into()));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges, Family::Generic)
}

/// Path `P_n`.
pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges, Family::Generic)
}

/// Complete graph `K_n`.
pub fn complete(n: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..n {
        edges.extend((u + 1..n).map(|v| (u, v)));
    }
    Graph::from_edges(n, &edges, Family::Generic)
}

/// The Petersen graph.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges, Family::Generic).expect("petersen graph is valid")
}

/// Backtracking isomorphism test for small graphs.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.n();
    if n != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(g: &Graph, h: &Graph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if v == g.n() {
            return true;
        }
        for w in 0..h.n() {
            if used[w] || g.degree(v) != h.degree(w) {
                continue;
            }
            if (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], w)) {
                map[v] = w;
                used[w] = true;
                if extend(g, h, v + 1, map, used) {
                    return true;
                }
                used[w] = false;
            }
        }
        false
    }
    extend(g, h, 0, &mut map, &mut used)
}
