//! The symmetric group `S_n`: permutations, partitions, integer character
//! tables, normal Cayley graphs, and designs decided by character Gram sums.
//!
//! Composition is `(στ)(i) = σ(τ(i))`, so `στ` applies `τ` first. Cycle
//! notation is parsed and printed with the same convention. Vertices of a
//! Cayley graph are permutations in lexicographic order of one-line
//! notation, so the identity is vertex 0.

mod characters;
mod designs;

pub use characters::{character_table, CharTable};
pub use designs::{
    averages_phi_p, birkhoff_minimal_enumeration, cayley_eigenvalue, cayley_graph, cayley_laplacian_eigenvalue,
    coset_averaged_partitions, first_part_design_equivalence, first_part_partitions, gram_sums, left_translations,
    order_conflict_witness, symmetric_coset, t_wise_uniform_check, transposition_adjacency_eigenvalue, FirstPartReport,
    GramTester, TwiseTester,
};

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::util::factorial;
use crate::{Error, Result};

/// Largest `n` for which `S_n` is enumerated.
pub const MAX_ENUMERATED_N: usize = 8;

/// A permutation of `{1..n}`, stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u8).collect())
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidArgument(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Perm(images.into_iter().map(|x| x as u8).collect()))
    }

    /// Disjoint or overlapping cycles in `1..=n`, composed right to left.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut p = Perm::identity(n);
        for c in cycles.iter().rev() {
            let mut images: Vec<usize> = (0..n).collect();
            let mut seen = BTreeSet::new();
            for (i, &x) in c.iter().enumerate() {
                if x == 0 || x > n || !seen.insert(x) {
                    return Err(Error::InvalidArgument(format!("bad cycle {c:?} for n = {n}")));
                }
                images[x - 1] = c[(i + 1) % c.len()] - 1;
            }
            p = Perm::from_images(images)?.compose(&p);
        }
        Ok(p)
    }

    /// Cycle notation (`(1 2 3)(4 5)`, `(123)`, `e`, `()`) or one-line
    /// notation of length `n` (`23145`).
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let s = s.trim();
        if s == "e" || s == "()" || s.is_empty() {
            return Ok(Perm::identity(n));
        }
        if !s.starts_with('(') {
            let digits: Vec<usize> = if s.contains(',') || s.contains(' ') {
                s.split([',', ' ']).filter(|t| !t.is_empty()).map(parse_point).collect::<Result<_>>()?
            } else {
                s.chars().map(|c| parse_point(&c.to_string())).collect::<Result<_>>()?
            };
            if digits.len() != n {
                return Err(Error::InvalidArgument(format!("one-line permutation {s:?} does not have length {n}")));
            }
            return Perm::from_images(digits.into_iter().map(|d| d - 1).collect());
        }
        let mut cycles = Vec::new();
        for chunk in s.split(')') {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                continue;
            }
            let body = chunk
                .strip_prefix('(')
                .ok_or_else(|| Error::InvalidArgument(format!("bad cycle notation {s:?}")))?
                .trim();
            let points: Vec<usize> = if body.contains([' ', ',']) {
                body.split([' ', ',']).filter(|t| !t.is_empty()).map(parse_point).collect::<Result<_>>()?
            } else {
                body.chars().map(|c| parse_point(&c.to_string())).collect::<Result<_>>()?
            };
            cycles.push(points);
        }
        Perm::from_cycles(n, &cycles)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `σ(i)` for 0-based `i`.
    pub fn image(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n(), "permutations of different degree");
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.n()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm(inv)
    }

    /// Cycles in 0-based points, each starting at its smallest point,
    /// ordered by that point; fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut c = vec![start];
            seen[start] = true;
            let mut x = self.image(start);
            while x != start {
                seen[x] = true;
                c.push(x);
                x = self.image(x);
            }
            out.push(c);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        let mut parts: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// Lexicographic rank of the one-line notation (Lehmer code).
    pub fn rank(&self) -> usize {
        let n = self.n();
        let mut rank = 0;
        for i in 0..n {
            let smaller = self.0[i + 1..].iter().filter(|&&x| x < self.0[i]).count();
            rank = rank * (n - i) + smaller;
        }
        rank
    }

    pub fn unrank(mut rank: usize, n: usize) -> Perm {
        let mut digits = vec![0; n];
        for i in (0..n).rev() {
            let base = n - i;
            digits[i] = rank % base;
            rank /= base;
        }
        let mut pool: Vec<u8> = (0..n as u8).collect();
        Perm(digits.into_iter().map(|d| pool.remove(d)).collect())
    }

    /// One-line notation, 1-based (`2314`; comma separated when `n > 9`).
    pub fn one_line(&self) -> String {
        let pts: Vec<String> = self.0.iter().map(|&x| (x + 1).to_string()).collect();
        if self.n() > 9 {
            pts.join(",")
        } else {
            pts.concat()
        }
    }
}

fn parse_point(s: &str) -> Result<usize> {
    match s.trim().parse::<usize>() {
        Ok(x) if x > 0 => Ok(x),
        _ => Err(Error::InvalidArgument(format!("bad point {s:?}"))),
    }
}

impl fmt::Display for Perm {
    /// Cycle notation without fixed points; `e` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<Vec<usize>> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return f.write_str("e");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

/// Parse several permutations of degree `n`.
pub fn perms(n: usize, list: &[&str]) -> Result<Vec<Perm>> {
    list.iter().map(|s| Perm::parse(s, n)).collect()
}

/// Every permutation of degree `n` in rank order.
pub fn all_perms(n: usize) -> Result<Vec<Perm>> {
    if n == 0 || n > MAX_ENUMERATED_N {
        return Err(Error::SizeLimit {
            what: "symmetric group degree",
            size: n as u128,
            limit: MAX_ENUMERATED_N as u128,
        });
    }
    Ok((0..factorial(n) as usize).map(|r| Perm::unrank(r, n)).collect())
}

/// The even permutations.
pub fn alternating_group(n: usize) -> Result<Vec<Perm>> {
    Ok(all_perms(n)?.into_iter().filter(Perm::is_even).collect())
}

/// Closure of `generators` under composition, sorted by rank.
pub fn generate_group(generators: &[Perm]) -> Result<Vec<Perm>> {
    let n = generators.first().map(Perm::n).ok_or_else(|| Error::InvalidArgument("no generators".into()))?;
    let mut seen = BTreeSet::from([Perm::identity(n)]);
    let mut queue = VecDeque::from([Perm::identity(n)]);
    while let Some(p) = queue.pop_front() {
        for g in generators {
            let q = g.compose(&p);
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    let mut out: Vec<Perm> = seen.into_iter().collect();
    out.sort_by_key(Perm::rank);
    Ok(out)
}

/// Sorted vertex indices (ranks) of a permutation list.
pub fn to_ranks(d: &[Perm]) -> Vec<usize> {
    let mut v: Vec<usize> = d.iter().map(Perm::rank).collect();
    v.sort_unstable();
    v
}

pub fn from_ranks(d: &[usize], n: usize) -> Vec<Perm> {
    d.iter().map(|&r| Perm::unrank(r, n)).collect()
}

/// A partition of `n`, parts weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidArgument("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn first_part(&self) -> usize {
        self.0[0]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.0.len() == 1
    }

    pub fn conjugate(&self) -> Partition {
        Partition((0..self.0[0]).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// `d_p` by the hook length formula.
    pub fn dimension(&self) -> u128 {
        let conj = self.conjugate();
        let hooks: u128 = self
            .0
            .iter()
            .enumerate()
            .flat_map(|(i, &row)| {
                let conj = &conj;
                (0..row).map(move |j| ((row - j) + (conj.0[j] - i) - 1) as u128)
            })
            .product();
        factorial(self.n()) / hooks
    }

    /// Size of the conjugacy class with this cycle type.
    pub fn class_size(&self) -> u128 {
        let mut z: u128 = 1;
        let mut i = 0;
        while i < self.0.len() {
            let part = self.0[i];
            let m = self.0[i..].iter().take_while(|&&p| p == part).count();
            z *= (part as u128).pow(m as u32) * factorial(m);
            i += m;
        }
        factorial(self.n()) / z
    }

    /// A permutation with this cycle type, cycles on consecutive points.
    pub fn representative(&self) -> Perm {
        let mut start = 1;
        let cycles: Vec<Vec<usize>> = self
            .0
            .iter()
            .map(|&len| {
                let c = (start..start + len).collect();
                start += len;
                c
            })
            .collect();
        Perm::from_cycles(self.n(), &cycles).expect("valid cycles")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma list such as `3,1` or `(3,1)`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = body
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::InvalidArgument(format!("bad part {p:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Shorthand for tests and examples: `part(&[3, 1])`.
pub fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition")
}

/// Partitions of `n` in decreasing lexicographic order, `(n)` first.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            rec(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_convention() {
        let a = Perm::parse("(1 2)", 3).unwrap();
        let b = Perm::parse("(2 3)", 3).unwrap();
        // (12)(23): 3 -> 2 -> 1, so 3 ↦ 1.
        let ab = a.compose(&b);
        assert_eq!(ab.image(2), 0);
        assert_eq!(ab.to_string(), "(1 2 3)");
        assert_eq!(Perm::parse("(12)(23)", 3).unwrap(), ab);
        assert_eq!(ab.compose(&ab.inverse()), Perm::identity(3));
    }

    #[test]
    fn parsing_forms() {
        let p = Perm::parse("(1 2 3)(4 5)", 5).unwrap();
        assert_eq!(p.one_line(), "23154");
        assert_eq!(Perm::parse("23154", 5).unwrap(), p);
        assert_eq!(p.to_string(), "(1 2 3)(4 5)");
        assert_eq!(Perm::parse("e", 4).unwrap(), Perm::identity(4));
        assert_eq!(p.cycle_type(), part(&[3, 2]));
        assert!(Perm::parse("(1 1)", 3).is_err());
        assert!(Perm::parse("2314", 3).is_err());
    }

    #[test]
    fn ranks() {
        let all = all_perms(4).unwrap();
        assert_eq!(all[0], Perm::identity(4));
        for (r, p) in all.iter().enumerate() {
            assert_eq!(p.rank(), r);
        }
        assert!(all.windows(2).all(|w| w[0].one_line() < w[1].one_line()));
    }

    #[test]
    fn partition_facts() {
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(9).len(), 30);
        assert_eq!(partitions(3), vec![part(&[3]), part(&[2, 1]), part(&[1, 1, 1])]);
        assert_eq!(part(&[2, 1]).dimension(), 2);
        assert_eq!(part(&[3, 1]).dimension(), 3);
        assert_eq!(part(&[2, 2]).dimension(), 2);
        assert_eq!(part(&[3, 2, 1]).dimension(), 16);
        assert_eq!(part(&[3, 1]).conjugate(), part(&[2, 1, 1]));
        for n in 1..=7 {
            let sum: u128 = partitions(n).iter().map(|p| p.dimension().pow(2)).sum();
            assert_eq!(sum, factorial(n));
            let classes: u128 = partitions(n).iter().map(Partition::class_size).sum();
            assert_eq!(classes, factorial(n));
            for p in partitions(n) {
                assert_eq!(p.representative().cycle_type(), p);
            }
        }
        assert_eq!("3,1".parse::<Partition>().unwrap(), part(&[3, 1]));
    }

    #[test]
    fn groups() {
        assert_eq!(alternating_group(4).unwrap().len(), 12);
        let c = generate_group(&[Perm::parse("(1234)", 4).unwrap()]).unwrap();
        let mut expected = perms(4, &["e", "(1234)", "(13)(24)", "(1432)"]).unwrap();
        expected.sort_by_key(Perm::rank);
        assert_eq!(c, expected);
    }
}
