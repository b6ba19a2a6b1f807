//! Hamming graphs `H(n, q)` and their exact character eigenbasis.
//!
//! Vertices are words in `(Z/qZ)^n`; vertex index is the base-`q` value of
//! the digit string read with the first digit most significant, so `011` in
//! `H(3,2)` is vertex 3. The character `χ_y(x) = ω^{y·x}` is a Laplacian
//! eigenvector with eigenvalue `q·|y|`, and `D` is a `Φ_S`-design exactly when
//! the character sum over `D` vanishes for every `y` with `|y| ∈ S`.

mod hadamard;
mod oa;
mod radon;
mod reverse;

pub use hadamard::{design_to_hadamard, hadamard_to_design, size_bound_check, HadamardMatrix};
pub use oa::{
    count_table, divisibility_check, hyperplane_average_check, oa_check, oa_design_equivalence, CountTable, OaVerdict,
};
pub use radon::{radon_kernel, radon_kernel_eigenvalue};
pub use reverse::{
    fixed_coordinate_sets, minimal_reverse_enumeration, random_walk_extremal_check, random_walk_weights, subcube,
};

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::exact::{cyclo_from_power_sums, CyclotomicInt, CyclotomicRing};
use crate::graph::{Certificate, Family, Graph, Residual};
use crate::search::DesignTester;
use crate::{Error, Result};

/// Largest vertex count `build_hamming` accepts by default.
pub const DEFAULT_VERTEX_LIMIT: usize = 1 << 20;

/// A word of `(Z/qZ)^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(digits: Vec<u8>) -> Self {
        Word(digits)
    }

    pub fn zero(n: usize) -> Self {
        Word(vec![0; n])
    }

    pub fn digits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&d| d != 0).count()
    }

    /// `y·x mod q`.
    pub fn dot(&self, other: &Word, q: usize) -> usize {
        assert_eq!(self.len(), other.len(), "words of different lengths");
        self.0.iter().zip(&other.0).map(|(&a, &b)| a as usize * b as usize).sum::<usize>() % q
    }

    pub fn check(&self, n: usize, q: usize) -> Result<()> {
        if self.len() != n {
            return Err(Error::InvalidArgument(format!("word {self} has length {}, expected {n}", self.len())));
        }
        if self.0.iter().any(|&d| d as usize >= q) {
            return Err(Error::InvalidArgument(format!("word {self} has a digit >= {q}")));
        }
        Ok(())
    }

    pub fn index(&self, q: usize) -> usize {
        self.0.iter().fold(0, |acc, &d| acc * q + d as usize)
    }

    pub fn from_index(mut index: usize, n: usize, q: usize) -> Self {
        let mut digits = vec![0u8; n];
        for d in digits.iter_mut().rev() {
            *d = (index % q) as u8;
            index /= q;
        }
        Word(digits)
    }

    /// Digit-wise sum mod `q`.
    pub fn add(&self, other: &Word, q: usize) -> Word {
        Word(self.0.iter().zip(&other.0).map(|(&a, &b)| ((a as usize + b as usize) % q) as u8).collect())
    }

    /// Digit-wise difference mod `q`.
    pub fn sub(&self, other: &Word, q: usize) -> Word {
        Word(self.0.iter().zip(&other.0).map(|(&a, &b)| ((a as usize + q - b as usize) % q) as u8).collect())
    }

    pub fn restrict(&self, coords: &[usize]) -> Word {
        Word(coords.iter().map(|&i| self.0[i]).collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.0 {
            let c = std::char::from_digit(d as u32, 36).unwrap_or('?');
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::InvalidArgument("empty word".into()));
        }
        s.chars()
            .map(|c| {
                c.to_digit(36)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::InvalidArgument(format!("bad digit {c:?} in word {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

/// Parse several words.
pub fn words(list: &[&str]) -> Result<Vec<Word>> {
    list.iter().map(|s| s.parse()).collect()
}

/// Hamming weights selecting the eigenspaces `Φ_S`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightSet(BTreeSet<usize>);

impl WeightSet {
    pub fn new(n: usize, weights: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = weights.into_iter().collect();
        if set.contains(&0) {
            return Err(Error::InvalidArgument("weight 0 (the constant eigenvector) is not selectable".into()));
        }
        if let Some(&w) = set.iter().find(|&&w| w > n) {
            return Err(Error::InvalidArgument(format!("weight {w} exceeds n = {n}")));
        }
        Ok(WeightSet(set))
    }

    /// `{1, …, t}`.
    pub fn upto(n: usize, t: usize) -> Result<Self> {
        Self::new(n, 1..=t)
    }

    /// `{t+1, …, n}`, the first `n − t` eigenspaces in reverse order.
    pub fn above(n: usize, t: usize) -> Result<Self> {
        Self::new(n, t + 1..=n)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, w: usize) -> bool {
        self.0.contains(&w)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for WeightSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

fn vertex_count(n: usize, q: usize) -> Option<usize> {
    u32::try_from(n).ok().and_then(|n| q.checked_pow(n))
}

/// `H(n, q)` with the default vertex limit.
pub fn build_hamming(n: usize, q: usize) -> Result<Graph> {
    build_hamming_with_limit(n, q, DEFAULT_VERTEX_LIMIT)
}

pub fn build_hamming_with_limit(n: usize, q: usize, limit: usize) -> Result<Graph> {
    if n == 0 || q < 2 {
        return Err(Error::InvalidArgument("H(n,q) needs n >= 1 and q >= 2".into()));
    }
    let size = vertex_count(n, q).filter(|&s| s <= limit).ok_or(Error::SizeLimit {
        what: "Hamming graph",
        size: (q as u128).saturating_pow(n as u32),
        limit: limit as u128,
    })?;
    let neighbors = (0..size)
        .map(|v| {
            let mut list = Vec::with_capacity(n * (q - 1));
            let mut place = 1;
            for _ in 0..n {
                let digit = (v / place) % q;
                for other in 0..q {
                    if other != digit {
                        list.push(v - digit * place + other * place);
                    }
                }
                place *= q;
            }
            list.sort_unstable();
            list
        })
        .collect();
    Ok(Graph::from_sorted_neighbors(neighbors, Family::Hamming { n, q }))
}

/// Every word of length `n`, in index order.
pub fn all_words(n: usize, q: usize) -> Vec<Word> {
    let size = vertex_count(n, q).expect("vertex count overflows");
    (0..size).map(|i| Word::from_index(i, n, q)).collect()
}

/// Words of weight in `weights`, by weight then index.
pub fn words_by_weight(n: usize, q: usize, weights: &WeightSet) -> Vec<Word> {
    let all = all_words(n, q);
    weights.iter().flat_map(|w| all.iter().filter(move |y| y.weight() == w).cloned()).collect()
}

/// `Σ_{x∈D} ω^{y·x}`, exactly. `D` may contain repeats (counted with
/// multiplicity).
pub fn character_sum(d: &[Word], y: &Word, q: usize) -> CyclotomicInt {
    let mut counts = vec![0i64; q];
    for x in d {
        counts[y.dot(x, q)] += 1;
    }
    cyclo_from_power_sums(q, &counts)
}

fn validate_words(d: &[Word], n: usize, q: usize) -> Result<()> {
    if d.is_empty() {
        return Err(Error::EmptyDesign);
    }
    let mut seen = BTreeSet::new();
    for x in d {
        x.check(n, q)?;
        if !seen.insert(x) {
            return Err(Error::InvalidArgument(format!("word {x} repeated in design")));
        }
    }
    Ok(())
}

/// Exact `Φ_S`-design test on `H(n, q)`. Characters are checked by weight
/// and stop at the first nonvanishing sum, which becomes the witness.
pub fn is_phi_design(d: &[Word], s: &WeightSet, n: usize, q: usize) -> Result<Certificate> {
    validate_words(d, n, q)?;
    let ring = CyclotomicRing::new(q);
    let mut cert = Certificate::new(format!("H({n},{q}) weights {s}")).with_size(d.len());
    let all = all_words(n, q);
    let mut weights = s.iter();
    for w in weights.by_ref() {
        let mut checked = 0usize;
        for y in all.iter().filter(|y| y.weight() == w) {
            let mut counts = vec![0i64; q];
            for x in d {
                counts[y.dot(x, q)] += 1;
            }
            if !ring.vanishes(&counts) {
                let value = ring.reduce_counts(&counts);
                cert.push_residual(Residual::exact(format!("weight {w} chi_{y}"), false, value.to_string()));
                cert.set_counterexample(format!("y={y}"));
                let rest: Vec<String> = weights.map(|w| w.to_string()).collect();
                if !rest.is_empty() {
                    cert.push_note("unchecked weights", rest.join(","));
                }
                return Ok(cert);
            }
            checked += 1;
        }
        cert.push_residual(Residual::exact(format!("weight {w}"), true, format!("0 ({checked} characters)")));
    }
    Ok(cert)
}

/// Character-sum test allowing repeated words (a multiset design).
pub fn multiset_averages(d: &[Word], s: &WeightSet, n: usize, q: usize) -> bool {
    let ring = CyclotomicRing::new(q);
    all_words(n, q).iter().filter(|y| s.contains(y.weight())).all(|y| {
        let mut counts = vec![0i64; q];
        for x in d {
            counts[y.dot(x, q)] += 1;
        }
        ring.vanishes(&counts)
    })
}

/// Vertex-index form of a word list.
pub fn to_indices(d: &[Word], q: usize) -> Vec<usize> {
    let mut v: Vec<usize> = d.iter().map(|w| w.index(q)).collect();
    v.sort_unstable();
    v
}

pub fn from_indices(d: &[usize], n: usize, q: usize) -> Vec<Word> {
    d.iter().map(|&i| Word::from_index(i, n, q)).collect()
}

/// Incremental `Φ_S` tester over vertex indices, for enumeration and search.
///
/// The state holds the bucket counts of `y·x mod q` for every selected `y`.
/// Partial subsets are pruned when some character sum already has modulus
/// larger than the number of vertices still to be added, since each further
/// term has modulus one.
#[derive(Clone, Debug)]
pub struct PhiTester {
    n: usize,
    q: usize,
    weights: WeightSet,
    /// `dots[k * size + x]` is `y_k · x mod q`.
    dots: Vec<u8>,
    ys: usize,
    size: usize,
    ring: CyclotomicRing,
    cos: Vec<f64>,
    sin: Vec<f64>,
}

impl PhiTester {
    pub fn new(n: usize, q: usize, weights: WeightSet) -> Result<Self> {
        let size = vertex_count(n, q)
            .filter(|&s| s <= DEFAULT_VERTEX_LIMIT)
            .ok_or_else(|| Error::InvalidArgument("Hamming space too large".into()))?;
        let ys = words_by_weight(n, q, &weights);
        let all = all_words(n, q);
        let mut dots = Vec::with_capacity(ys.len() * size);
        for y in &ys {
            dots.extend(all.iter().map(|x| y.dot(x, q) as u8));
        }
        let angle = |j: usize| std::f64::consts::TAU * j as f64 / q as f64;
        Ok(PhiTester {
            n,
            q,
            weights,
            dots,
            ys: ys.len(),
            size,
            ring: CyclotomicRing::new(q),
            cos: (0..q).map(|j| angle(j).cos()).collect(),
            sin: (0..q).map(|j| angle(j).sin()).collect(),
        })
    }

    pub fn weights(&self) -> &WeightSet {
        &self.weights
    }

    fn modulus_exceeds(&self, counts: &[i64], bound: usize) -> bool {
        if self.q == 2 {
            return (counts[0] - counts[1]).unsigned_abs() as usize > bound;
        }
        let re: f64 = counts.iter().zip(&self.cos).map(|(&c, x)| c as f64 * x).sum();
        let im: f64 = counts.iter().zip(&self.sin).map(|(&c, x)| c as f64 * x).sum();
        re.hypot(im) > bound as f64 + 1e-9
    }
}

impl DesignTester for PhiTester {
    type State = Vec<i64>;

    fn vertex_count(&self) -> usize {
        self.size
    }

    fn describe(&self) -> String {
        format!("H({},{}) weights {}", self.n, self.q, self.weights)
    }

    fn empty_state(&self) -> Vec<i64> {
        vec![0; self.ys * self.q]
    }

    fn push(&self, state: &mut Vec<i64>, v: usize) {
        for k in 0..self.ys {
            state[k * self.q + self.dots[k * self.size + v] as usize] += 1;
        }
    }

    fn accepts(&self, state: &Vec<i64>, _size: usize) -> bool {
        state.chunks(self.q).all(|c| self.ring.vanishes(c))
    }

    fn feasible(&self, state: &Vec<i64>, _size: usize, remaining: usize) -> bool {
        !state.chunks(self.q).any(|c| self.modulus_exceeds(c, remaining))
    }

    fn certify(&self, subset: &[usize]) -> Result<Certificate> {
        is_phi_design(&from_indices(subset, self.n, self.q), &self.weights, self.n, self.q)
    }
}

/// The translations `x ↦ x + a` as vertex permutations; they preserve every
/// `Φ_S`, so they are valid symmetry for [`PhiTester`] searches.
pub fn translation_group(n: usize, q: usize) -> Vec<Vec<usize>> {
    let all = all_words(n, q);
    all.iter().map(|a| all.iter().map(|x| x.add(a, q).index(q)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{dense_spectrum, MatrixKind};
    use proptest::prelude::*;

    fn cube_d1() -> Vec<Word> {
        words(&["000", "111"]).unwrap()
    }

    fn cube_d2() -> Vec<Word> {
        words(&["000", "011", "101", "110"]).unwrap()
    }

    #[test]
    fn word_index_round_trip() {
        let w: Word = "011".parse().unwrap();
        assert_eq!(w.index(2), 3);
        assert_eq!(Word::from_index(3, 3, 2), w);
        assert_eq!(Word::from_index(7, 2, 3).to_string(), "21");
        assert_eq!(w.weight(), 2);
    }

    #[test]
    fn builds_expected_graphs() {
        let k2 = build_hamming(1, 2).unwrap();
        assert_eq!((k2.n(), k2.edge_count()), (2, 1));
        let h23 = build_hamming(2, 3).unwrap();
        assert_eq!((h23.n(), h23.regular_degree()), (9, Some(4)));
        let cube = build_hamming(3, 2).unwrap();
        assert_eq!((cube.n(), cube.regular_degree()), (8, Some(3)));
        assert!(cube.is_connected());
        assert!(cube.has_edge(0, 1) && cube.has_edge(0, 4) && !cube.has_edge(0, 3));
        assert!(build_hamming_with_limit(10, 2, 1000).is_err());
    }

    #[test]
    fn cube_examples() {
        let d1 = cube_d1();
        let d2 = cube_d2();
        assert!(is_phi_design(&d1, &WeightSet::upto(3, 1).unwrap(), 3, 2).unwrap().verdict());
        assert!(is_phi_design(&d2, &WeightSet::upto(3, 2).unwrap(), 3, 2).unwrap().verdict());
        let neg = is_phi_design(&d1, &WeightSet::upto(3, 2).unwrap(), 3, 2).unwrap();
        assert!(!neg.verdict());
        let witness: Word = neg.counterexample().unwrap().trim_start_matches("y=").parse().unwrap();
        assert_eq!(witness.weight(), 2);
        assert!(matches!(is_phi_design(&[], &WeightSet::upto(3, 1).unwrap(), 3, 2), Err(Error::EmptyDesign)));
    }

    #[test]
    fn character_sum_examples() {
        let all = all_words(2, 3);
        assert!(character_sum(&all, &"12".parse().unwrap(), 3).is_zero());
        assert!(character_sum(&cube_d2(), &"110".parse().unwrap(), 2).is_zero());
        let s = character_sum(&cube_d1(), &"011".parse().unwrap(), 2);
        assert_eq!(s.to_string(), "2");
        assert!(!character_sum(&cube_d2(), &"111".parse().unwrap(), 2).is_zero());
    }

    #[test]
    fn characters_are_laplacian_eigenvectors() {
        for (n, q) in [(3, 2), (2, 3), (2, 4)] {
            let g = build_hamming(n, q).unwrap();
            for y in all_words(n, q) {
                let (re, im): (Vec<f64>, Vec<f64>) = all_words(n, q)
                    .iter()
                    .map(|x| {
                        let a = std::f64::consts::TAU * y.dot(x, q) as f64 / q as f64;
                        (a.cos(), a.sin())
                    })
                    .unzip();
                let lambda = (q * y.weight()) as f64;
                for part in [re, im] {
                    let lv = g.apply_f64(MatrixKind::Laplacian, &part);
                    for (a, b) in lv.iter().zip(&part) {
                        assert!((a - lambda * b).abs() < 1e-9);
                    }
                }
            }
        }
    }

    #[test]
    fn cube_dense_spectrum_matches_formula() {
        let ds = dense_spectrum(&build_hamming(3, 2).unwrap(), MatrixKind::Laplacian).unwrap();
        for (v, e) in ds.values.iter().zip([0.0, 2.0, 2.0, 2.0, 4.0, 4.0, 4.0, 6.0]) {
            assert!((v - e).abs() < 1e-9);
        }
    }

    #[test]
    fn tester_matches_certificate_exhaustively() {
        let t = PhiTester::new(2, 3, WeightSet::upto(2, 1).unwrap()).unwrap();
        for mask in 1u64..(1 << 9) {
            let d = crate::util::mask_to_subset(mask, 9);
            assert_eq!(t.is_design(&d), t.certify(&d).unwrap().verdict());
        }
    }

    proptest! {
        #[test]
        fn character_sum_matches_float(
            (n, q, d, y) in (1usize..=4, 2usize..=5).prop_flat_map(|(n, q)| {
                let size = q.pow(n as u32);
                (
                    Just(n),
                    Just(q),
                    proptest::collection::vec(0..size, 1..8),
                    0..size,
                )
            })
        ) {
            let d: Vec<Word> = d.into_iter().map(|i| Word::from_index(i, n, q)).collect();
            let y = Word::from_index(y, n, q);
            let exact = character_sum(&d, &y, q);
            let (mut re, mut im) = (0.0, 0.0);
            for x in &d {
                let a = std::f64::consts::TAU * y.dot(x, q) as f64 / q as f64;
                re += a.cos();
                im += a.sin();
            }
            let (er, ei) = exact.to_complex();
            prop_assert!((er - re).abs() < 1e-9 && (ei - im).abs() < 1e-9);
        }
    }
}
