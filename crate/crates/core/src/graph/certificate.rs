//! Machine-checkable verdict records with a stable text rendering.

use std::fmt;

/// Per-eigenspace outcome of a design test.
#[derive(Clone, Debug, PartialEq)]
pub enum Residual {
    /// Exact residual; `value` is its printed form.
    Exact { label: String, zero: bool, value: String },
    /// Float residual magnitude compared against `tol`.
    Float { label: String, magnitude: f64, tol: f64 },
}

impl Residual {
    pub fn exact(label: impl Into<String>, zero: bool, value: impl Into<String>) -> Self {
        Residual::Exact { label: label.into(), zero, value: value.into() }
    }

    pub fn float(label: impl Into<String>, magnitude: f64, tol: f64) -> Self {
        Residual::Float { label: label.into(), magnitude, tol }
    }

    pub fn passes(&self) -> bool {
        match self {
            Residual::Exact { zero, .. } => *zero,
            Residual::Float { magnitude, tol, .. } => *magnitude <= *tol,
        }
    }
}

/// A named auxiliary check (divisibility, neighbor counts, size bounds).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fact {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

/// Verdict record. The verdict is derived: it holds exactly when every
/// residual passes and every fact holds.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Certificate {
    selector: String,
    design_size: Option<usize>,
    residuals: Vec<Residual>,
    facts: Vec<Fact>,
    notes: Vec<(String, String)>,
    counterexample: Option<String>,
}

impl Certificate {
    pub fn new(selector: impl Into<String>) -> Self {
        Certificate { selector: selector.into(), ..Default::default() }
    }

    pub fn with_size(mut self, size: usize) -> Self {
        self.design_size = Some(size);
        self
    }

    pub fn push_residual(&mut self, r: Residual) {
        self.residuals.push(r);
    }

    pub fn push_fact(&mut self, name: impl Into<String>, holds: bool, detail: impl Into<String>) {
        self.facts.push(Fact { name: name.into(), holds, detail: detail.into() });
    }

    pub fn push_note(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.notes.push((key.into(), value.into()));
    }

    pub fn set_counterexample(&mut self, witness: impl Into<String>) {
        self.counterexample = Some(witness.into());
    }

    /// Append another certificate's residuals, facts and notes.
    pub fn absorb(&mut self, other: Certificate) {
        self.residuals.extend(other.residuals);
        self.facts.extend(other.facts);
        self.notes.extend(other.notes);
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample;
        }
    }

    pub fn verdict(&self) -> bool {
        self.residuals.iter().all(Residual::passes) && self.facts.iter().all(|f| f.holds)
    }

    pub fn selector(&self) -> &str {
        &self.selector
    }

    pub fn design_size(&self) -> Option<usize> {
        self.design_size
    }

    pub fn residuals(&self) -> &[Residual] {
        &self.residuals
    }

    pub fn facts(&self) -> &[Fact] {
        &self.facts
    }

    pub fn fact(&self, name: &str) -> Option<&Fact> {
        self.facts.iter().find(|f| f.name == name)
    }

    pub fn notes(&self) -> &[(String, String)] {
        &self.notes
    }

    pub fn note(&self, key: &str) -> Option<&str> {
        self.notes.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn counterexample(&self) -> Option<&str> {
        self.counterexample.as_deref()
    }

    /// Stable key/value rendering.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "certificate")?;
        writeln!(f, "selector: {}", self.selector)?;
        writeln!(f, "verdict: {}", self.verdict())?;
        match self.design_size {
            Some(s) => writeln!(f, "size: {s}")?,
            None => writeln!(f, "size: -")?,
        }
        for r in &self.residuals {
            match r {
                Residual::Exact { label, zero, value } => {
                    let state = if *zero { "zero" } else { "nonzero" };
                    writeln!(f, "residual[{label}]: exact {state} {value}")?
                }
                Residual::Float { label, magnitude, tol } => {
                    let state = if r.passes() { "ok" } else { "fail" };
                    writeln!(f, "residual[{label}]: float {magnitude:.3e} tol {tol:.1e} {state}")?
                }
            }
        }
        for fact in &self.facts {
            writeln!(f, "fact[{}]: {} {}", fact.name, fact.holds, fact.detail)?;
        }
        for (k, v) in &self.notes {
            writeln!(f, "note[{k}]: {v}")?;
        }
        writeln!(f, "counterexample: {}", self.counterexample.as_deref().unwrap_or("none"))?;
        write!(f, "end")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_follows_components() {
        let mut c = Certificate::new("test").with_size(2);
        assert!(c.verdict());
        c.push_residual(Residual::exact("a", true, "0"));
        c.push_residual(Residual::float("b", 1e-12, 1e-8));
        assert!(c.verdict());
        c.push_fact("bound", false, "3 > 4");
        assert!(!c.verdict());
    }

    #[test]
    fn rendering_is_stable() {
        let mut c = Certificate::new("H(3,2) weights {1}").with_size(2);
        c.push_residual(Residual::exact("weight 1", true, "0"));
        c.push_residual(Residual::float("basis 0", 0.0, 1e-8));
        c.push_fact("divisible", true, "2 = 2 * 1");
        c.push_note("order", "laplacian");
        let expected = "certificate\nselector: H(3,2) weights {1}\nverdict: true\nsize: 2\n\
residual[weight 1]: exact zero 0\nresidual[basis 0]: float 0.000e0 tol 1.0e-8 ok\n\
fact[divisible]: true 2 = 2 * 1\nnote[order]: laplacian\ncounterexample: none\nend";
        assert_eq!(c.render(), expected);
    }
}
