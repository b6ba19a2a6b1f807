//! Exhaustive smallest-design and minimal-design search over any exact
//! design tester.
//!
//! Subsets are explored depth first in lexicographic order of vertex index.
//! Work is split across rayon workers by the first element of the subset and
//! merged in order, so results and node counts do not depend on the number
//! of workers. Budgets count node expansions (one per subset visited).

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::graph::Certificate;
use crate::{Error, Result};

/// Exact predicate over vertex subsets with an incremental accumulator.
///
/// `feasible` may reject a partial subset when no completion by at most
/// `remaining` further vertices can be a design; it must be monotone in
/// `remaining` and must never reject a state that can still be completed.
pub trait DesignTester: Sync {
    type State: Clone + Send;

    fn vertex_count(&self) -> usize;
    fn describe(&self) -> String;
    fn empty_state(&self) -> Self::State;
    fn push(&self, state: &mut Self::State, v: usize);
    fn accepts(&self, state: &Self::State, size: usize) -> bool;
    fn certify(&self, subset: &[usize]) -> Result<Certificate>;

    fn feasible(&self, _state: &Self::State, _size: usize, _remaining: usize) -> bool {
        true
    }

    fn is_design(&self, subset: &[usize]) -> bool {
        let mut s = self.empty_state();
        for &v in subset {
            self.push(&mut s, v);
        }
        !subset.is_empty() && self.accepts(&s, subset.len())
    }
}

/// Sound size restrictions: admissible sizes are multiples of `modulus`
/// strictly greater than `greater_than`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SizeHints {
    pub modulus: Option<usize>,
    pub greater_than: Option<usize>,
}

impl SizeHints {
    pub fn allows(&self, size: usize) -> bool {
        self.modulus.is_none_or(|m| size.is_multiple_of(m)) && self.greater_than.is_none_or(|b| size > b)
    }

    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        if let Some(m) = self.modulus {
            parts.push(format!("mod {m}"));
        }
        if let Some(b) = self.greater_than {
            parts.push(format!(">{b}"));
        }
        if parts.is_empty() {
            "none".into()
        } else {
            parts.join(", ")
        }
    }
}

/// A group of vertex permutations preserving the tester's verdicts.
#[derive(Clone, Debug)]
pub struct Symmetry {
    group: Vec<Vec<usize>>,
    orbit_rep: Vec<usize>,
}

impl Symmetry {
    /// `group` should list every element (closure is not computed).
    pub fn new(n: usize, group: Vec<Vec<usize>>) -> Result<Self> {
        for g in &group {
            let mut seen = vec![false; n];
            if g.len() != n || g.iter().any(|&v| v >= n || std::mem::replace(&mut seen[v], true)) {
                return Err(Error::InvalidArgument("symmetry element is not a vertex permutation".into()));
            }
        }
        let mut orbit_rep: Vec<usize> = (0..n).collect();
        loop {
            let mut changed = false;
            for v in 0..n {
                for g in &group {
                    let m = orbit_rep[v].min(orbit_rep[g[v]]);
                    if orbit_rep[v] != m || orbit_rep[g[v]] != m {
                        orbit_rep[v] = m;
                        orbit_rep[g[v]] = m;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        Ok(Symmetry { group, orbit_rep })
    }

    pub fn group_size(&self) -> usize {
        self.group.len()
    }

    /// Lexicographically smallest sorted image of `subset`.
    pub fn canonical(&self, subset: &[usize]) -> Vec<usize> {
        let mut best = subset.to_vec();
        best.sort_unstable();
        for g in &self.group {
            let mut img: Vec<usize> = subset.iter().map(|&v| g[v]).collect();
            img.sort_unstable();
            if img < best {
                best = img;
            }
        }
        best
    }

    fn allowed_first(&self, v: usize) -> bool {
        self.orbit_rep[v] == v
    }

    fn allowed_after(&self, first: usize, v: usize) -> bool {
        self.orbit_rep[v] >= first
    }
}

/// What to search and how.
pub struct SearchProblem<'a, T: DesignTester> {
    pub tester: &'a T,
    pub hints: SizeHints,
    pub budget: u64,
    pub symmetry: Option<Symmetry>,
    pub seeds: Vec<Vec<usize>>,
    pub workers: usize,
    pub prune: bool,
}

/// Default node budget.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

impl<'a, T: DesignTester> SearchProblem<'a, T> {
    pub fn new(tester: &'a T) -> Self {
        SearchProblem {
            tester,
            hints: SizeHints::default(),
            budget: DEFAULT_BUDGET,
            symmetry: None,
            seeds: Vec::new(),
            workers: 0,
            prune: true,
        }
    }

    pub fn hints(mut self, hints: SizeHints) -> Self {
        self.hints = hints;
        self
    }

    pub fn budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn symmetry(mut self, symmetry: Symmetry) -> Self {
        self.symmetry = Some(symmetry);
        self
    }

    pub fn seed(mut self, subset: Vec<usize>) -> Self {
        self.seeds.push(subset);
        self
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn unpruned(mut self) -> Self {
        self.prune = false;
        self
    }

    fn pool(&self) -> Result<rayon::ThreadPool> {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("cannot start worker pool: {e}")))
    }
}

/// A design found by search.
#[derive(Clone, Debug)]
pub struct Found {
    pub subset: Vec<usize>,
    pub certificate: Certificate,
}

#[derive(Clone, Debug, Default)]
pub struct SearchResult {
    pub found: Vec<Found>,
    /// Every admissible size up to the reported one was fully covered.
    pub exhausted: bool,
    pub budget_exceeded: bool,
    pub nodes_expanded: u64,
    pub sizes_tried: Vec<usize>,
    pub sizes_skipped: Vec<usize>,
    /// Seeds with their verification outcome.
    pub seeds: Vec<(Vec<usize>, bool)>,
}

impl SearchResult {
    pub fn smallest_size(&self) -> Option<usize> {
        self.found.first().map(|f| f.subset.len())
    }

    pub fn summary(&self, description: &str) -> String {
        let list = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        let mut out = String::new();
        out.push_str("search\n");
        out.push_str(&format!("problem: {description}\n"));
        out.push_str(&format!("sizes_tried: {}\n", list(&self.sizes_tried)));
        out.push_str(&format!("sizes_skipped: {}\n", list(&self.sizes_skipped)));
        out.push_str(&format!("found: {}\n", self.found.len()));
        match self.smallest_size() {
            Some(s) => out.push_str(&format!("smallest_size: {s}\n")),
            None => out.push_str("smallest_size: none\n"),
        }
        for (seed, ok) in &self.seeds {
            let ids: Vec<usize> = seed.iter().map(|v| v + 1).collect();
            out.push_str(&format!("seed[{}]: {ok}\n", list(&ids)));
        }
        out.push_str(&format!("exhausted: {}\n", self.exhausted));
        out.push_str(&format!("budget_exceeded: {}\n", self.budget_exceeded));
        out.push_str(&format!("nodes_expanded: {}\n", self.nodes_expanded));
        out.push_str("end");
        out
    }
}

struct Walk<'a, T: DesignTester> {
    tester: &'a T,
    target: Option<usize>,
    max_size: usize,
    hints: SizeHints,
    allowed: Vec<usize>,
    cap: u64,
    prune: bool,
    nodes: u64,
    over_budget: bool,
    designs: Vec<Vec<usize>>,
}

impl<T: DesignTester> Walk<'_, T> {
    /// Extend `subset` with candidates from `allowed[from..]`.
    fn descend(&mut self, subset: &mut Vec<usize>, state: &T::State, from: usize) {
        let size = subset.len();
        let limit = self.target.unwrap_or(self.max_size);
        if size == limit {
            return;
        }
        for i in from..self.allowed.len() {
            if self.over_budget {
                return;
            }
            if let Some(t) = self.target {
                if self.allowed.len() - i < t - size {
                    return;
                }
            }
            self.nodes += 1;
            if self.nodes > self.cap {
                self.over_budget = true;
                return;
            }
            let v = self.allowed[i];
            let mut next = state.clone();
            self.tester.push(&mut next, v);
            subset.push(v);
            self.visit(subset, &next, i + 1);
            subset.pop();
        }
    }

    fn visit(&mut self, subset: &mut Vec<usize>, state: &T::State, from: usize) {
        let size = subset.len();
        let limit = self.target.unwrap_or(self.max_size);
        let remaining = limit - size;
        if self.prune && !self.tester.feasible(state, size, remaining) {
            return;
        }
        let record = match self.target {
            Some(t) => size == t,
            None => self.hints.allows(size),
        };
        if record && self.tester.accepts(state, size) {
            self.designs.push(subset.clone());
        }
        self.descend(subset, state, from);
    }
}

struct Level {
    designs: Vec<Vec<usize>>,
    nodes: u64,
    over_budget: bool,
}

fn run_level<T: DesignTester>(
    problem: &SearchProblem<'_, T>,
    target: Option<usize>,
    max_size: usize,
    cap: u64,
) -> Result<Level> {
    let n = problem.tester.vertex_count();
    let sym = problem.symmetry.as_ref();
    let firsts: Vec<usize> = (0..n).filter(|&v| sym.is_none_or(|s| s.allowed_first(v))).collect();
    let branch = |first: usize| -> (Vec<Vec<usize>>, u64, bool) {
        let allowed: Vec<usize> = (first + 1..n).filter(|&v| sym.is_none_or(|s| s.allowed_after(first, v))).collect();
        let mut walk = Walk {
            tester: problem.tester,
            target,
            max_size,
            hints: problem.hints,
            allowed,
            cap: cap.saturating_sub(1),
            prune: problem.prune,
            nodes: 0,
            over_budget: false,
            designs: Vec::new(),
        };
        if let Some(t) = target {
            if walk.allowed.len() + 1 < t {
                return (Vec::new(), 0, false);
            }
        }
        let mut state = problem.tester.empty_state();
        problem.tester.push(&mut state, first);
        let mut subset = vec![first];
        walk.visit(&mut subset, &state, 0);
        (walk.designs, walk.nodes + 1, walk.over_budget)
    };
    let results: Vec<_> = problem.pool()?.install(|| firsts.par_iter().map(|&f| branch(f)).collect());
    let mut level = Level { designs: Vec::new(), nodes: 0, over_budget: false };
    for (designs, nodes, over) in results {
        level.designs.extend(designs);
        level.nodes = level.nodes.saturating_add(nodes);
        level.over_budget |= over;
    }
    if level.nodes > cap {
        level.over_budget = true;
    }
    Ok(level)
}

fn certify_all<T: DesignTester>(tester: &T, subsets: Vec<Vec<usize>>) -> Result<Vec<Found>> {
    subsets
        .into_iter()
        .map(|subset| {
            let certificate = tester.certify(&subset)?;
            Ok(Found { subset, certificate })
        })
        .collect()
}

/// Smallest designs of size at most `max_size`: sizes are tried in
/// increasing order (skipping those the hints exclude) and every design of
/// the first size with any design is returned.
pub fn search_smallest<T: DesignTester>(problem: &SearchProblem<'_, T>, max_size: usize) -> Result<SearchResult> {
    if problem.budget == 0 {
        return Err(Error::InvalidArgument("search budget must be positive".into()));
    }
    let tester = problem.tester;
    let mut result = SearchResult { exhausted: true, ..Default::default() };
    for seed in &problem.seeds {
        let mut s = seed.clone();
        s.sort_unstable();
        result.seeds.push((s.clone(), tester.is_design(&s)));
    }
    let n = tester.vertex_count();
    for size in 1..=max_size.min(n) {
        if !problem.hints.allows(size) {
            result.sizes_skipped.push(size);
            continue;
        }
        result.sizes_tried.push(size);
        let remaining = problem.budget - result.nodes_expanded;
        let level = run_level(problem, Some(size), max_size, remaining)?;
        result.nodes_expanded += level.nodes.min(remaining);
        let mut designs = level.designs;
        if let Some(sym) = &problem.symmetry {
            let set: BTreeSet<Vec<usize>> = designs.iter().map(|d| sym.canonical(d)).collect();
            designs = set.into_iter().collect();
        }
        if level.over_budget {
            result.exhausted = false;
            result.budget_exceeded = true;
            result.found = certify_all(tester, designs)?;
            return Ok(result);
        }
        if !designs.is_empty() {
            result.found = certify_all(tester, designs)?;
            return Ok(result);
        }
    }
    Ok(result)
}

/// All designs of size at most `max_size`, sorted by size then
/// lexicographically.
#[derive(Clone, Debug, Default)]
pub struct Enumeration {
    pub designs: Vec<Vec<usize>>,
    pub nodes_expanded: u64,
}

pub fn enumerate_designs<T: DesignTester>(problem: &SearchProblem<'_, T>, max_size: usize) -> Result<Enumeration> {
    let level = run_level(problem, None, max_size.min(problem.tester.vertex_count()), problem.budget)?;
    if level.over_budget {
        return Err(Error::BudgetExceeded { budget: problem.budget, needed: level.nodes });
    }
    let mut designs = level.designs;
    designs.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(Enumeration { designs, nodes_expanded: level.nodes })
}

/// Inclusion-minimal designs together with every design found.
#[derive(Clone, Debug, Default)]
pub struct MinimalResult {
    pub minimal: Vec<Vec<usize>>,
    pub all: Vec<Vec<usize>>,
    pub nodes_expanded: u64,
}

pub fn enumerate_minimal<T: DesignTester>(problem: &SearchProblem<'_, T>, max_size: usize) -> Result<MinimalResult> {
    let all = enumerate_designs(problem, max_size)?;
    let minimal = minimal_elements(&all.designs);
    Ok(MinimalResult { minimal, all: all.designs, nodes_expanded: all.nodes_expanded })
}

/// Inclusion-minimal members of a family of sorted subsets.
pub fn minimal_elements(family: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut sorted: Vec<&Vec<usize>> = family.iter().collect();
    sorted.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let mut minimal: Vec<Vec<usize>> = Vec::new();
    for d in sorted {
        if !minimal.iter().any(|m| is_subset(m, d)) {
            minimal.push(d.clone());
        }
    }
    minimal.sort();
    minimal
}

/// `a ⊆ b` for sorted vectors.
pub fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut it = b.iter();
    a.iter().all(|x| it.by_ref().any(|y| y == x))
}

/// Every design in `all_found` equals the union of the minimal designs it
/// contains.
pub fn union_closure_audit(minimals: &[Vec<usize>], all_found: &[Vec<usize>]) -> bool {
    all_found.iter().all(|d| {
        let mut cover = BTreeSet::new();
        for m in minimals.iter().filter(|m| is_subset(m, d)) {
            cover.extend(m.iter().copied());
        }
        cover.into_iter().eq(d.iter().copied())
    })
}
