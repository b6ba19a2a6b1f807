//! Text formats: graph files, design files and family headers.
//!
//! A graph file has a header line `p <n> <m>` followed by `m` lines
//! `e <u> <v>` with 1-based endpoints. Lines starting with `c` are comments,
//! except `c family <name> <params…>`, which records the structured origin
//! of the graph so exact tests can be chosen. The header is checked by
//! rebuilding the family graph and comparing edge sets.
//!
//! A design file lists one item per line. Blank lines and lines starting
//! with `#` or `c ` are skipped.

use crate::graph::{Family, Graph};
use crate::hamming::build_hamming;
use crate::johnson::build_johnson;
use crate::mycielski::mycielskian;
use crate::symmetric::{cayley_graph, Partition};
use crate::{Error, Result};

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    if *g.family() != Family::Generic {
        out.push_str(&format!("c family {}\n", g.family()));
    }
    let edges = g.edges();
    out.push_str(&format!("p {} {}\n", g.n(), edges.len()));
    for (u, v) in edges {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

fn parse_usize(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?
        .parse()
        .map_err(|_| Error::parse(line, format!("bad {what}")))
}

/// Parse the parameters after `c family`.
pub fn parse_family(text: &str) -> Result<Family> {
    let toks: Vec<&str> = text.split_whitespace().collect();
    let num = |i: usize, what: &str| -> Result<usize> {
        toks.get(i)
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::InvalidArgument(format!("family {text:?}: bad {what}")))
    };
    let family = match toks.first().copied() {
        Some("generic") => Family::Generic,
        Some("hamming") => Family::Hamming { n: num(1, "n")?, q: num(2, "q")? },
        Some("johnson") => Family::Johnson { n: num(1, "n")?, k: num(2, "k")? },
        Some("mycielskian") => Family::Mycielskian { base_n: num(1, "base size")? },
        Some("cayley") => {
            let n = num(1, "n")?;
            let classes = toks
                .get(2)
                .ok_or_else(|| Error::InvalidArgument(format!("family {text:?}: missing classes")))?
                .split(';')
                .map(|c| c.parse::<Partition>().map(|p| p.parts().to_vec()))
                .collect::<Result<Vec<_>>>()?;
            Family::Cayley { n, classes }
        }
        _ => return Err(Error::InvalidArgument(format!("unknown family {text:?}"))),
    };
    if toks.len() > family_arity(&family) {
        return Err(Error::InvalidArgument(format!("family {text:?}: trailing tokens")));
    }
    Ok(family)
}

fn family_arity(f: &Family) -> usize {
    match f {
        Family::Generic => 1,
        Family::Mycielskian { .. } => 2,
        _ => 3,
    }
}

/// The graph a family header describes. For a Mycielskian the base is read
/// off the first `base_n` vertices of `g`.
pub fn rebuild_family(family: &Family, g: &Graph) -> Result<Option<Graph>> {
    Ok(match family {
        Family::Generic => None,
        Family::Hamming { n, q } => Some(build_hamming(*n, *q)?),
        Family::Johnson { n, k } => Some(build_johnson(*n, *k)?),
        Family::Cayley { n, classes } => {
            let classes = classes.iter().map(|c| Partition::new(c.clone())).collect::<Result<Vec<_>>>()?;
            Some(cayley_graph(*n, &classes)?)
        }
        Family::Mycielskian { base_n } => {
            if g.n() != 2 * base_n + 1 {
                return Err(Error::InvalidArgument(format!(
                    "a Mycielskian of {base_n} vertices has {} vertices",
                    2 * base_n + 1
                )));
            }
            let edges: Vec<(usize, usize)> =
                g.edges().into_iter().filter(|&(u, v)| u < *base_n && v < *base_n).collect();
            let base = Graph::from_edges_unchecked_connectivity(*base_n, &edges, Family::Generic)?;
            Some(mycielskian(&base).graph)
        }
    })
}

pub fn read_graph(text: &str) -> Result<Graph> {
    let mut family = Family::Generic;
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut toks = line.split_whitespace();
        match toks.next() {
            Some("c") => {
                if toks.next() == Some("family") {
                    let rest: Vec<&str> = toks.collect();
                    family = parse_family(&rest.join(" ")).map_err(|e| Error::parse(line_no, e.to_string()))?;
                }
            }
            Some("p") => {
                if header.is_some() {
                    return Err(Error::parse(line_no, "second p line"));
                }
                header = Some((
                    parse_usize(toks.next(), line_no, "vertex count")?,
                    parse_usize(toks.next(), line_no, "edge count")?,
                ));
            }
            Some("e") => {
                let Some((n, _)) = header else {
                    return Err(Error::parse(line_no, "edge before p line"));
                };
                let u = parse_usize(toks.next(), line_no, "endpoint")?;
                let v = parse_usize(toks.next(), line_no, "endpoint")?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(Error::parse(line_no, format!("endpoint out of range 1..={n}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => return Err(Error::parse(line_no, format!("unknown line type {other:?}"))),
            None => {}
        }
    }
    let (n, m) = header.ok_or_else(|| Error::parse(0, "missing p line"))?;
    if edges.len() != m {
        return Err(Error::parse(0, format!("p line declares {m} edges, found {}", edges.len())));
    }
    let g = match family {
        Family::Cayley { .. } => Graph::from_edges_unchecked_connectivity(n, &edges, family.clone())?,
        _ => Graph::from_edges(n, &edges, family.clone())?,
    };
    if let Some(expected) = rebuild_family(&family, &g)? {
        if expected.n() != g.n() || expected.edges() != g.edges() {
            return Err(Error::parse(0, format!("graph does not match its family header ({family})")));
        }
    }
    Ok(g)
}

/// Non-comment lines with their 1-based line numbers.
pub fn design_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#') && *l != "c" && !l.starts_with("c "))
        .collect()
}

/// Vertex ids, 1-based in the file, 0-based in the result.
pub fn read_design(text: &str, n: usize) -> Result<Vec<usize>> {
    design_lines(text)
        .into_iter()
        .map(|(line, tok)| match tok.parse::<usize>() {
            Ok(v) if v >= 1 && v <= n => Ok(v - 1),
            Ok(_) => Err(Error::parse(line, format!("vertex {tok} out of range 1..={n}"))),
            Err(_) => Err(Error::parse(line, format!("bad vertex id {tok:?}"))),
        })
        .collect()
}

/// Parse each design line with `f`, attaching line numbers to errors.
pub fn read_items<T>(text: &str, f: impl Fn(&str) -> Result<T>) -> Result<Vec<T>> {
    design_lines(text).into_iter().map(|(line, tok)| f(tok).map_err(|e| Error::parse(line, e.to_string()))).collect()
}

pub fn write_design(d: &[usize]) -> String {
    d.iter().map(|v| format!("{}\n", v + 1)).collect()
}
