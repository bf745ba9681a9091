use std::fmt;

use num_rational::BigRational;

/// Identities the verifiers know how to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theorem {
    /// `(-1)^n χ(-k)` counts pairs (coloring, intercompatible acyclic
    /// orientation) on acyclic mixed graphs.
    WeakReciprocity,
    /// `(-1)^n χ̂(-k)` counts pairs (coloring, compatible acyclic orientation).
    StrongReciprocity,
    /// `Ω_ω(-k) = (-1)^n Ω_ω̄(k)`.
    StanleyOrder,
    /// Strong reciprocity specialised to graphs without arcs.
    StanleyGraph,
    /// `χ_G = χ_{G-e} - χ_{G/e}`.
    EdgeDeletionContraction,
    /// `χ_G + χ_{G_a} = χ_{G-a} + χ_{G/a}`.
    ArcReversal,
    /// A strongly connected digraph has `χ = k`.
    StrongComponent,
    /// Contracting a strongly connected arc subgraph keeps `χ`.
    SccContraction,
    /// `χ_G = Σ φ_{G_i}` over orientations of an acyclic mixed graph.
    PhiSum,
    /// Source-peeling labelings turn `φ` and the intercompatible count into
    /// order polynomials.
    OrientationLabeling,
}

impl Theorem {
    pub const ALL: [Theorem; 10] = [
        Theorem::WeakReciprocity,
        Theorem::StrongReciprocity,
        Theorem::StanleyOrder,
        Theorem::StanleyGraph,
        Theorem::EdgeDeletionContraction,
        Theorem::ArcReversal,
        Theorem::StrongComponent,
        Theorem::SccContraction,
        Theorem::PhiSum,
        Theorem::OrientationLabeling,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::WeakReciprocity => "weak-reciprocity",
            Theorem::StrongReciprocity => "strong-reciprocity",
            Theorem::StanleyOrder => "stanley-order",
            Theorem::StanleyGraph => "stanley-graph",
            Theorem::EdgeDeletionContraction => "edge-deletion-contraction",
            Theorem::ArcReversal => "arc-reversal",
            Theorem::StrongComponent => "strong-component",
            Theorem::SccContraction => "scc-contraction",
            Theorem::PhiSum => "phi-sum",
            Theorem::OrientationLabeling => "orientation-labeling",
        }
    }

    /// Accepts [`Theorem::name`] plus the short forms `weak` and `strong`.
    pub fn from_name(s: &str) -> Option<Theorem> {
        match s {
            "weak" => Some(Theorem::WeakReciprocity),
            "strong" => Some(Theorem::StrongReciprocity),
            _ => Theorem::ALL.into_iter().find(|t| t.name() == s),
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub k: i64,
    pub lhs: BigRational,
    pub rhs: BigRational,
    pub pass: bool,
}

impl Row {
    pub fn new(k: i64, lhs: BigRational, rhs: BigRational) -> Row {
        let pass = lhs == rhs;
        Row { k, lhs, rhs, pass }
    }
}

/// Per-k ledger of both sides of an identity. `verdict` is the conjunction of
/// the row verdicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub subject: String,
    pub theorem: Theorem,
    pub rows: Vec<Row>,
    pub verdict: bool,
}

impl VerificationReport {
    /// Panics if `rows` is empty.
    pub fn new(subject: impl Into<String>, theorem: Theorem, rows: Vec<Row>) -> Self {
        assert!(!rows.is_empty(), "a verification report needs at least one row");
        let verdict = rows.iter().all(|r| r.pass);
        VerificationReport {
            subject: subject.into(),
            theorem,
            rows,
            verdict,
        }
    }

    pub fn failing_rows(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| !r.pass)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} on {}", self.theorem, self.subject)?;
        writeln!(f, "{:>4}  {:>12}  {:>12}  result", "k", "lhs", "rhs")?;
        for r in &self.rows {
            writeln!(
                f,
                "{:>4}  {:>12}  {:>12}  {}",
                r.k,
                r.lhs.to_string(),
                r.rhs.to_string(),
                if r.pass { "pass" } else { "FAIL" }
            )?;
        }
        write!(f, "verdict: {}", if self.verdict { "PASS" } else { "FAIL" })
    }
}
