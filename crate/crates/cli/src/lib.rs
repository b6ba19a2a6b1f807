//! The `gdesign` command line: generators, verifiers, converters, search and
//! named reproduction cases.
//!
//! Exit codes: 0 verdict true or success, 1 verdict false, 2 usage or input
//! error, 3 budget exceeded.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use gdesign::graph::{
    complete, cycle, dense_spectrum, integer_sketch, is_design_float, path, petersen, Certificate, Family, Graph,
    MatrixKind, ProjectorTester, DEFAULT_TOL,
};
use gdesign::hamming::{
    build_hamming, design_to_hadamard, from_indices, hadamard_to_design, is_phi_design, oa_check, size_bound_check,
    translation_group, HadamardMatrix, PhiTester, WeightSet, Word,
};
use gdesign::io::{read_design, read_graph, read_items, write_graph};
use gdesign::johnson::{
    block_design_check, build_johnson, is_phi_design_johnson, johnson_spectrum, johnson_tester, KSubset,
};
use gdesign::mycielski::{mycielskian, spectrum_report};
use gdesign::repro::{run_case_seeded, CASES, REPRO_SEED};
use gdesign::search::{search_smallest, DesignTester, SearchProblem, SizeHints, Symmetry, DEFAULT_BUDGET};
use gdesign::symmetric::{
    averages_phi_p, cayley_graph, cayley_laplacian_eigenvalue, character_table, first_part_partitions,
    left_translations, t_wise_uniform_check, CharTable, GramTester, Partition, Perm,
};
use gdesign::util::binomial;
use gdesign::Error;

/// Environment variable overriding the default search budget.
pub const BUDGET_ENV: &str = "GDESIGN_BUDGET";

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "gdesign", version, about = "Exact graphical design verification and search")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Write a graph file for a named family.
    Gen(GenArgs),
    /// Print the Laplacian spectrum of a graph file.
    Spectrum(GraphArg),
    /// Test whether a vertex subset averages a set of eigenspaces.
    Verify(VerifyArgs),
    /// Test whether a set of words is an orthogonal array.
    Oa(OaArgs),
    /// Test whether a set of k-subsets is a t-design.
    Blockdesign(BlockArgs),
    /// Test whether a set of permutations is t-wise uniform.
    Twise(TwiseArgs),
    /// Convert between Hadamard matrices and strength-2 designs of H(n,2).
    Hadamard(HadamardArgs),
    /// Write the Mycielskian of a graph, or its lifted spectrum.
    Mycielskify(MycielskifyArgs),
    /// Search for the smallest designs of a graph file.
    Search(SearchArgs),
    /// Replay a named reproduction case.
    Repro(ReproArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    Hamming,
    Johnson,
    Cayley,
    Cycle,
    Path,
    Complete,
    Petersen,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Cayley connection set as cycle types, e.g. "2,1,1;4".
    #[arg(long)]
    classes: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct GraphArg {
    #[arg(long)]
    graph: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Order {
    /// Smallest nonzero Laplacian eigenvalues first.
    Laplacian,
    /// Largest Laplacian eigenvalues first.
    Reverse,
    /// Irreducibles of S_n by first part, largest first.
    FirstPart,
}

#[derive(Args, Debug)]
struct Selection {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, value_enum, default_value = "laplacian")]
    order: Order,
    /// Number of eigenspaces (or first-part steps) to average.
    #[arg(long)]
    upto: usize,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    sel: Selection,
    /// Vertex ids, one per line, 1-based.
    #[arg(long)]
    design: PathBuf,
    /// Tolerance on the float path.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
}

#[derive(Args, Debug)]
struct OaArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    q: usize,
    #[arg(long)]
    t: usize,
    /// Words, one per line, e.g. `011`.
    #[arg(long)]
    design: PathBuf,
}

#[derive(Args, Debug)]
struct BlockArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    t: usize,
    /// Blocks, one per line, as `1,2,4` or `124`.
    #[arg(long)]
    design: PathBuf,
}

#[derive(Args, Debug)]
struct TwiseArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    t: usize,
    /// Permutations in cycle notation, one per line, e.g. `(12)(34)`.
    #[arg(long)]
    design: PathBuf,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct HadamardArgs {
    /// Hadamard matrix file to convert into a design.
    #[arg(long)]
    to_design: Option<PathBuf>,
    /// Design file (words) to convert into a Hadamard matrix.
    #[arg(long)]
    from_design: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct MycielskifyArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Print the lifted spectrum instead of the graph.
    #[arg(long)]
    spectrum: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[command(flatten)]
    sel: Selection,
    #[arg(long)]
    max_size: usize,
    /// Node budget; overrides the environment variable.
    #[arg(long)]
    budget: Option<u64>,
    /// Only sizes divisible by this.
    #[arg(long)]
    modulus: Option<usize>,
    /// Only sizes strictly greater than this.
    #[arg(long)]
    greater_than: Option<usize>,
    /// Report one design per orbit of the family's translation group.
    #[arg(long)]
    symmetry: bool,
    /// A design to verify alongside the search (vertex ids).
    #[arg(long)]
    seed_design: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

#[derive(Args, Debug)]
struct ReproArgs {
    #[arg(long, required_unless_present = "list")]
    case: Option<String>,
    #[arg(long)]
    list: bool,
    #[arg(long, default_value_t = 0)]
    workers: usize,
    #[arg(long, default_value_t = REPRO_SEED)]
    seed: u64,
}

/// Failure that ends an invocation with a nonzero exit code.
#[derive(Debug)]
enum Fail {
    Usage(String),
    Budget(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Fail::Budget(e.to_string()),
            _ => Fail::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Fail {
    fn from(e: std::io::Error) -> Self {
        Fail::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<i32, Fail>;

fn usage(msg: impl Into<String>) -> Fail {
    Fail::Usage(msg.into())
}

/// Run one invocation. `args` excludes the program name.
pub fn run<S: AsRef<str>>(args: &[S], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let argv = std::iter::once("gdesign").chain(args.iter().map(AsRef::as_ref));
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_TRUE };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.verb {
        Verb::Gen(a) => gen(a, out),
        Verb::Spectrum(a) => spectrum(a, out),
        Verb::Verify(a) => verify(a, out),
        Verb::Oa(a) => oa(a, out),
        Verb::Blockdesign(a) => blockdesign(a, out),
        Verb::Twise(a) => twise(a, out),
        Verb::Hadamard(a) => hadamard(a, out),
        Verb::Mycielskify(a) => mycielskify(a, out),
        Verb::Search(a) => search(a, out),
        Verb::Repro(a) => repro(a, out),
    };
    match result {
        Ok(code) => code,
        Err(Fail::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        Err(Fail::Budget(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_BUDGET
        }
    }
}

fn read_file(p: &Path) -> std::result::Result<String, Fail> {
    std::fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display())))
}

fn load_graph(p: &Path) -> std::result::Result<Graph, Fail> {
    read_graph(&read_file(p)?).map_err(|e| usage(format!("{}: {e}", p.display())))
}

fn emit(text: &str, dest: Option<&Path>, out: &mut dyn Write) -> std::result::Result<(), Fail> {
    match dest {
        Some(p) => std::fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

fn verdict_code(holds: bool) -> i32 {
    if holds {
        EXIT_TRUE
    } else {
        EXIT_FALSE
    }
}

fn need(v: Option<usize>, flag: &str, family: &str) -> std::result::Result<usize, Fail> {
    v.ok_or_else(|| usage(format!("--{flag} is required for {family}")))
}

fn parse_classes(n: usize, text: &str) -> std::result::Result<Vec<Partition>, Fail> {
    let classes = text.split(';').map(|c| c.parse::<Partition>()).collect::<gdesign::Result<Vec<_>>>()?;
    if classes.iter().any(|c| c.n() != n) {
        return Err(usage(format!("every class in {text:?} must be a partition of {n}")));
    }
    Ok(classes)
}

fn gen(a: GenArgs, out: &mut dyn Write) -> Outcome {
    let name = format!("{:?}", a.family).to_lowercase();
    let g = match a.family {
        FamilyName::Hamming => build_hamming(need(a.n, "n", &name)?, need(a.q, "q", &name)?)?,
        FamilyName::Johnson => build_johnson(need(a.n, "n", &name)?, need(a.k, "k", &name)?)?,
        FamilyName::Cayley => {
            let n = need(a.n, "n", &name)?;
            let classes = a.classes.as_deref().ok_or_else(|| usage("--classes is required for cayley"))?;
            cayley_graph(n, &parse_classes(n, classes)?)?
        }
        FamilyName::Cycle => cycle(need(a.n, "n", &name)?)?,
        FamilyName::Path => path(need(a.n, "n", &name)?)?,
        FamilyName::Complete => complete(need(a.n, "n", &name)?)?,
        FamilyName::Petersen => petersen(),
    };
    emit(&write_graph(&g), a.out.as_deref(), out)?;
    Ok(EXIT_TRUE)
}

/// Nontrivial partitions of `n` grouped by Laplacian eigenvalue, ascending.
fn cayley_groups(table: &CharTable, classes: &[Partition]) -> Vec<(BigRational, Vec<Partition>)> {
    let mut groups: Vec<(BigRational, Vec<Partition>)> = Vec::new();
    let mut parts: Vec<(BigRational, Partition)> = table
        .partitions()
        .iter()
        .filter(|p| !p.is_trivial())
        .map(|p| (cayley_laplacian_eigenvalue(table, p, classes), p.clone()))
        .collect();
    parts.sort();
    for (l, p) in parts {
        match groups.last_mut() {
            Some((m, ps)) if *m == l => ps.push(p),
            _ => groups.push((l, vec![p])),
        }
    }
    groups
}

fn cayley_params(family: &Family) -> Option<(usize, Vec<Partition>)> {
    match family {
        Family::Cayley { n, classes } => {
            Some((*n, classes.iter().map(|c| Partition::new(c.clone()).expect("validated on read")).collect()))
        }
        _ => None,
    }
}

fn spectrum(a: GraphArg, out: &mut dyn Write) -> Outcome {
    let g = load_graph(&a.graph)?;
    let mut lines = vec!["spectrum".to_string(), format!("graph: {}", g.family()), "matrix: laplacian".to_string()];
    let mut exact: Vec<(String, u128)> = Vec::new();
    match g.family() {
        Family::Hamming { n, q } => {
            for w in 0..=*n {
                exact.push(((q * w).to_string(), binomial(*n, w) * ((*q as u128) - 1).pow(w as u32)));
            }
        }
        Family::Johnson { n, k } => {
            for (_, l, m) in johnson_spectrum(*n, (*k).min(n - k))?.entries {
                exact.push((l.to_string(), m as u128));
            }
        }
        f @ Family::Cayley { .. } => {
            let (n, classes) = cayley_params(f).expect("cayley family");
            let table = character_table(n)?;
            exact.push(("0".into(), 1));
            for (l, ps) in cayley_groups(&table, &classes) {
                let m: u128 = ps.iter().map(|p| p.dimension().pow(2)).sum();
                match exact.iter_mut().find(|e| e.0 == l.to_string()) {
                    Some(e) => e.1 += m,
                    None => exact.push((l.to_string(), m)),
                }
            }
        }
        _ => {
            if let Some(s) = integer_sketch(&g, MatrixKind::Laplacian)? {
                exact.extend(s.entries().iter().map(|(l, m)| (l.to_string(), *m as u128)));
            }
        }
    }
    if exact.is_empty() {
        lines.push("method: float".into());
        let dense = dense_spectrum(&g, MatrixKind::Laplacian)?;
        for r in dense.clusters() {
            lines.push(format!("eigenvalue: {:.9} multiplicity: {}", dense.cluster_value(&r), r.len()));
        }
    } else {
        lines.push("method: exact".into());
        for (l, m) in exact {
            lines.push(format!("eigenvalue: {l} multiplicity: {m}"));
        }
    }
    lines.push("end".into());
    writeln!(out, "{}", lines.join("\n"))?;
    Ok(EXIT_TRUE)
}

/// Which eigenspaces an order and count select, as indices `1..=total`
/// (index 0 being the constant eigenspace).
fn take(order: Order, upto: usize, total: usize) -> std::result::Result<Vec<usize>, Fail> {
    if upto == 0 || upto > total {
        return Err(usage(format!("--upto must lie in 1..={total}")));
    }
    Ok(match order {
        Order::Laplacian => (1..=upto).collect(),
        Order::Reverse => (total + 1 - upto..=total).collect(),
        Order::FirstPart => return Err(usage("--order first-part needs a Cayley graph of S_n")),
    })
}

fn cayley_selection(g: &Graph, order: Order, upto: usize) -> std::result::Result<(CharTable, Vec<Partition>), Fail> {
    let (n, classes) = cayley_params(g.family()).expect("cayley family");
    let table = character_table(n)?;
    let ps = match order {
        Order::FirstPart => {
            if upto == 0 || upto >= n {
                return Err(usage(format!("--upto must lie in 1..={}", n - 1)));
            }
            first_part_partitions(n, upto)
        }
        _ => {
            let groups = cayley_groups(&table, &classes);
            take(order, upto, groups.len())?.into_iter().flat_map(|i| groups[i - 1].1.clone()).collect()
        }
    };
    Ok((table, ps))
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> Outcome {
    let g = load_graph(&a.sel.graph)?;
    let ids = read_design(&read_file(&a.design)?, g.n())?;
    let (order, upto) = (a.sel.order, a.sel.upto);
    let cert: Certificate = match g.family().clone() {
        Family::Hamming { n, q } => {
            let weights = WeightSet::new(n, take(order, upto, n)?)?;
            is_phi_design(&from_indices(&ids, n, q), &weights, n, q)?
        }
        Family::Johnson { n, k } => {
            let s = take(order, upto, k.min(n - k))?;
            let d: Vec<KSubset> = ids.iter().map(|&v| KSubset::colex_unrank(v, k)).collect();
            is_phi_design_johnson(n, k, &d, &s)?
        }
        Family::Cayley { n, .. } => {
            let (table, ps) = cayley_selection(&g, order, upto)?;
            let d: Vec<Perm> = ids.iter().map(|&v| Perm::unrank(v, n)).collect();
            averages_phi_p(&table, &d, &ps)?
        }
        _ => {
            let dense = dense_spectrum(&g, MatrixKind::Laplacian)?;
            let s = take(order, upto, dense.clusters().len() - 1)?;
            is_design_float(&dense, &s, &ids, a.tol)?
        }
    };
    writeln!(out, "verify\ngraph: {}\n{}", g.family(), cert.render())?;
    Ok(verdict_code(cert.verdict()))
}

fn words_file(p: &Path, n: usize, q: usize) -> std::result::Result<Vec<Word>, Fail> {
    Ok(read_items(&read_file(p)?, |s| {
        let w: Word = s.parse()?;
        w.check(n, q)?;
        Ok(w)
    })?)
}

fn oa(a: OaArgs, out: &mut dyn Write) -> Outcome {
    if a.q < 2 || a.t == 0 || a.t > a.n {
        return Err(usage("need q >= 2 and 1 <= t <= n"));
    }
    let d = words_file(&a.design, a.n, a.q)?;
    let v = oa_check(&d, a.t, a.n, a.q);
    let index = v.index.map_or("-".to_string(), |i| i.to_string());
    writeln!(
        out,
        "orthogonal_array\nn: {}\nq: {}\nt: {}\nsize: {}\nholds: {}\nindex: {index}\nend",
        a.n,
        a.q,
        a.t,
        d.len(),
        v.holds
    )?;
    Ok(verdict_code(v.holds))
}

fn blockdesign(a: BlockArgs, out: &mut dyn Write) -> Outcome {
    if a.t == 0 || a.t > a.k || a.k > a.n {
        return Err(usage("need 1 <= t <= k <= n"));
    }
    let d = read_items(&read_file(&a.design)?, |s| {
        let b = if s.contains(',') { s.parse::<KSubset>()? } else { KSubset::parse_compact(s)? };
        b.check(a.n, a.k)?;
        Ok(b)
    })?;
    let v = block_design_check(a.n, a.k, &d, a.t);
    let lambda = v.lambda.map_or("-".to_string(), |l| l.to_string());
    writeln!(
        out,
        "block_design\nn: {}\nk: {}\nt: {}\nblocks: {}\nholds: {}\nlambda: {lambda}\nend",
        a.n,
        a.k,
        a.t,
        d.len(),
        v.holds
    )?;
    Ok(verdict_code(v.holds))
}

fn twise(a: TwiseArgs, out: &mut dyn Write) -> Outcome {
    if a.t == 0 || a.t > a.n {
        return Err(usage("need 1 <= t <= n"));
    }
    let d = read_items(&read_file(&a.design)?, |s| Perm::parse(s, a.n))?;
    let holds = t_wise_uniform_check(&d, a.t)?;
    writeln!(out, "t_wise_uniform\nn: {}\nt: {}\nsize: {}\nholds: {holds}\nend", a.n, a.t, d.len())?;
    Ok(verdict_code(holds))
}

fn hadamard(a: HadamardArgs, out: &mut dyn Write) -> Outcome {
    if let Some(p) = a.to_design {
        let h: HadamardMatrix = read_file(&p)?.parse()?;
        let d = hadamard_to_design(&h)?;
        let cert = size_bound_check(&d, h.order() - 1)?;
        writeln!(out, "# design of H({},2) from a Hadamard matrix of order {}", h.order() - 1, h.order())?;
        for w in &d {
            writeln!(out, "{w}")?;
        }
        for line in cert.render().lines() {
            writeln!(out, "# {line}")?;
        }
        return Ok(verdict_code(cert.verdict()));
    }
    let p = a.from_design.expect("clap requires one of the two flags");
    let text = read_file(&p)?;
    let first: Word =
        read_items(&text, |s| s.parse::<Word>())?.into_iter().next().ok_or_else(|| usage("design file is empty"))?;
    let n = first.len();
    let d = words_file(&p, n, 2)?;
    let h = design_to_hadamard(&d, n)?;
    writeln!(out, "{h}")?;
    Ok(verdict_code(h.is_hadamard()))
}

fn mycielskify(a: MycielskifyArgs, out: &mut dyn Write) -> Outcome {
    let g = load_graph(&a.graph)?;
    let text = if a.spectrum { spectrum_report(&g)? + "\n" } else { write_graph(&mycielskian(&g).graph) };
    emit(&text, a.out.as_deref(), out)?;
    Ok(EXIT_TRUE)
}

fn budget(flag: Option<u64>) -> std::result::Result<u64, Fail> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| usage(format!("{BUDGET_ENV}={v:?} is not a node count"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn search(a: SearchArgs, out: &mut dyn Write) -> Outcome {
    let g = load_graph(&a.sel.graph)?;
    let budget = budget(a.budget)?;
    if budget == 0 {
        return Err(usage("budget must be positive"));
    }
    let seed = match &a.seed_design {
        Some(p) => Some(read_design(&read_file(p)?, g.n())?),
        None => None,
    };
    let (order, upto) = (a.sel.order, a.sel.upto);
    let ctx = SearchCtx { args: &a, budget, seed, n: g.n() };
    match g.family().clone() {
        Family::Hamming { n, q } => {
            let tester = PhiTester::new(n, q, WeightSet::new(n, take(order, upto, n)?)?)?;
            ctx.run(&tester, || Ok(translation_group(n, q)), out)
        }
        Family::Johnson { n, k } if 2 * k <= n => {
            let tester = johnson_tester(n, k, &take(order, upto, k)?)?;
            ctx.run(&tester, || Err(usage("--symmetry is available for Hamming and Cayley graphs")), out)
        }
        Family::Cayley { n, .. } => {
            let (table, ps) = cayley_selection(&g, order, upto)?;
            let tester = GramTester::new(table, ps)?;
            ctx.run(&tester, || Ok(left_translations(n)?), out)
        }
        _ => {
            let sketch = integer_sketch(&g, MatrixKind::Laplacian)?
                .ok_or_else(|| usage("no exact tester: the Laplacian spectrum is not integral"))?;
            let s = take(order, upto, sketch.len() - 1)?;
            let desc = format!("{} Laplacian eigenspaces {s:?}", g.family());
            let tester = ProjectorTester::new(g, sketch, &s, desc)?;
            ctx.run(&tester, || Err(usage("--symmetry is available for Hamming and Cayley graphs")), out)
        }
    }
}

struct SearchCtx<'a> {
    args: &'a SearchArgs,
    budget: u64,
    seed: Option<Vec<usize>>,
    n: usize,
}

impl SearchCtx<'_> {
    fn run<T: DesignTester>(
        &self,
        tester: &T,
        group: impl FnOnce() -> std::result::Result<Vec<Vec<usize>>, Fail>,
        out: &mut dyn Write,
    ) -> Outcome {
        let mut problem = SearchProblem::new(tester)
            .budget(self.budget)
            .workers(self.args.workers)
            .hints(SizeHints { modulus: self.args.modulus, greater_than: self.args.greater_than });
        if self.args.symmetry {
            problem = problem.symmetry(Symmetry::new(self.n, group()?)?);
        }
        if let Some(s) = &self.seed {
            problem = problem.seed(s.clone());
        }
        let r = search_smallest(&problem, self.args.max_size)?;
        for f in &r.found {
            let ids: Vec<String> = f.subset.iter().map(|v| (v + 1).to_string()).collect();
            writeln!(out, "design: {}\n{}", ids.join(" "), f.certificate.render())?;
        }
        writeln!(out, "{}", r.summary(&tester.describe()))?;
        Ok(if r.budget_exceeded { EXIT_BUDGET } else { verdict_code(!r.found.is_empty()) })
    }
}

fn repro(a: ReproArgs, out: &mut dyn Write) -> Outcome {
    if a.list {
        for c in CASES {
            let crit = c.criterion.map_or("-".to_string(), |k| k.to_string());
            writeln!(out, "{}\tcriterion {crit}\t{}", c.name, c.summary)?;
        }
        return Ok(EXIT_TRUE);
    }
    let name = a.case.expect("clap requires --case without --list");
    let workers = if a.workers == 0 { available_threads() } else { a.workers };
    let o = run_case_seeded(&name, workers, a.seed)?;
    writeln!(out, "{}", o.render())?;
    Ok(verdict_code(o.passed()))
}

fn available_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}
