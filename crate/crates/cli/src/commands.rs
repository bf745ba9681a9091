//! Command handlers. Each returns the text to print and the exit code, so the
//! binary only has to route arguments and write the result.

use std::fs;
use std::io::Read;
use std::path::Path;

use chromix::chromatic::{
    exhaustive_verify, verify_strong_reciprocity, verify_weak_reciprocity, Summary,
};
use chromix::enumeration::count_intercompatible;
use chromix::graph::{is_acyclic_orientation, orientations};
use chromix::poset::{order_polynomial, verify_order_reciprocity};
use chromix::{
    strong_chromatic_polynomial, weak_chromatic_polynomial, MixedGraph, OmegaLabeling, Polynomial,
    Theorem, VerificationReport,
};
use num_rational::BigRational;
use serde_json::{json, Value};
use thiserror::Error;

use crate::parse::{parse_dot_subset, parse_lines, parse_poset, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Every variant maps to exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{0}")]
    Refused(#[from] chromix::Error),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output {
            text,
            code: EXIT_OK,
        }
    }

    fn verdict(text: String, pass: bool) -> Self {
        Output {
            text,
            code: if pass { EXIT_OK } else { EXIT_FAILED },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Lines,
    Dot,
}

impl Format {
    /// `.dot` and `.gv` files are DOT; everything else, stdin included, is
    /// the line format.
    pub fn detect(path: &str) -> Format {
        match Path::new(path).extension().and_then(|e| e.to_str()) {
            Some("dot" | "gv") => Format::Dot,
            _ => Format::Lines,
        }
    }
}

/// Reads `path`, or standard input when `path` is `-`.
pub fn read_input(path: &str) -> Result<String, CliError> {
    let io = |source| CliError::Io {
        path: path.to_string(),
        source,
    };
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io)
    }
}

pub fn load_graph(path: &str, format: Option<Format>) -> Result<MixedGraph, CliError> {
    let text = read_input(path)?;
    let parsed = match format.unwrap_or_else(|| Format::detect(path)) {
        Format::Lines => parse_lines(&text),
        Format::Dot => parse_dot_subset(&text),
    };
    parsed.map_err(|source| CliError::Parse {
        path: path.to_string(),
        source,
    })
}

pub fn load_poset(path: &str) -> Result<OmegaLabeling, CliError> {
    parse_poset(&read_input(path)?).map_err(|source| CliError::Parse {
        path: path.to_string(),
        source,
    })
}

/// `"num/den"`, also for integers.
pub fn ratio(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn coefficients(p: &Polynomial) -> Value {
    p.coefficients().iter().map(ratio).collect()
}

fn report_json(r: &VerificationReport) -> Value {
    json!({
        "subject": r.subject,
        "theorem": r.theorem.name(),
        "rows": rows_json(r),
        "verdict": r.verdict,
    })
}

fn rows_json(r: &VerificationReport) -> Value {
    r.rows
        .iter()
        .map(|row| {
            json!({
                "k": row.k,
                "lhs": ratio(&row.lhs),
                "rhs": ratio(&row.rhs),
                "pass": row.pass,
            })
        })
        .collect()
}

fn pretty(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("json value");
    s.push('\n');
    s
}

fn chromatic(g: &MixedGraph, strong: bool) -> Polynomial {
    if strong {
        strong_chromatic_polynomial(g)
    } else {
        weak_chromatic_polynomial(g)
    }
}

/// The polynomial on its own line, then values for `k = 1..=|V|+1`.
pub fn cmd_poly(g: &MixedGraph, input: &str, strong: bool, as_json: bool) -> Output {
    let p = chromatic(g, strong);
    let values: Vec<(i64, BigRational)> = (1..=g.vertex_count() as i64 + 1)
        .map(|k| (k, p.evaluate(k)))
        .collect();
    if as_json {
        return Output::ok(pretty(json!({
            "command": "poly",
            "input": input,
            "polynomial": coefficients(&p),
            "values": values.iter().map(|(k, v)| json!([k, ratio(v)])).collect::<Vec<_>>(),
        })));
    }
    let mut text = format!("{p}\n");
    text.push_str(&format!("{:>4}  value\n", "k"));
    for (k, v) in values {
        text.push_str(&format!("{k:>4}  {v}\n"));
    }
    Output::ok(text)
}

/// `χ(k)`, followed by `(-1)^|V| χ(k)` when `signed` is set.
pub fn cmd_eval(g: &MixedGraph, k: i64, strong: bool, signed: bool) -> Output {
    let v = chromatic(g, strong).evaluate(k);
    let mut text = format!("{v}\n");
    if signed {
        let s = if g.vertex_count().is_multiple_of(2) { v } else { -v };
        text.push_str(&format!("{s}\n"));
    }
    Output::ok(text)
}

/// One row per orientation, with the intercompatible count when `k` is given.
pub fn cmd_orientations(
    g: &MixedGraph,
    acyclic_only: bool,
    k: Option<i64>,
) -> Result<Output, CliError> {
    let mut rows = Vec::new();
    for (i, o) in orientations(g).iter().enumerate() {
        let acyclic = is_acyclic_orientation(o);
        if acyclic_only && !acyclic {
            continue;
        }
        let count = k.map(|k| count_intercompatible(g, o, k)).transpose()?;
        rows.push((i, o.to_string(), acyclic, count));
    }
    let width = rows.iter().map(|r| r.1.len()).max().unwrap_or(0).max("orientation".len());
    let mut text = format!("{:>4}  {:<width$}  acyclic", "#", "orientation");
    if let Some(k) = k {
        text.push_str(&format!("  intercompatible(k={k})"));
    }
    text.push('\n');
    for (i, o, acyclic, count) in rows {
        text.push_str(&format!(
            "{i:>4}  {o:<width$}  {:<7}",
            if acyclic { "yes" } else { "no" }
        ));
        if let Some(c) = count {
            text.push_str(&format!("  {c}"));
        }
        text.push('\n');
    }
    Ok(Output::ok(text))
}

fn report_output(command: &str, input: &str, r: &VerificationReport, as_json: bool) -> Output {
    let text = if as_json {
        pretty(json!({
            "command": command,
            "input": input,
            "rows": rows_json(r),
            "verdict": r.verdict,
        }))
    } else {
        format!("{r}\n")
    };
    Output::verdict(text, r.verdict)
}

/// Weak mode refuses graphs that are not acyclic mixed unless `force` is set.
pub fn cmd_reciprocity(
    g: &MixedGraph,
    input: &str,
    kmax: i64,
    strong: bool,
    force: bool,
    as_json: bool,
) -> Result<Output, CliError> {
    let r = if strong {
        verify_strong_reciprocity(g, kmax)?
    } else {
        verify_weak_reciprocity(g, kmax, force)?
    };
    Ok(report_output("reciprocity", input, &r, as_json))
}

/// `Ω_ω`, `Ω_ω̄` and the reciprocity table for `k = 1..=kmax`.
pub fn cmd_order_poly(
    w: &OmegaLabeling,
    input: &str,
    kmax: i64,
    as_json: bool,
) -> Result<Output, CliError> {
    let omega = order_polynomial(w)?;
    let complement = order_polynomial(&w.complementary())?;
    let r = verify_order_reciprocity(w, kmax)?;
    let text = if as_json {
        pretty(json!({
            "command": "order-poly",
            "input": input,
            "polynomial": {
                "omega": coefficients(&omega),
                "complement": coefficients(&complement),
            },
            "rows": rows_json(&r),
            "verdict": r.verdict,
        }))
    } else {
        format!("omega: {omega}\ncomplement: {complement}\n{r}\n")
    };
    Ok(Output::verdict(text, r.verdict))
}

pub fn cmd_verify(n: usize, kmax: i64, theorem: Theorem, as_json: bool) -> Result<Output, CliError> {
    let s: Summary = exhaustive_verify(n, kmax, theorem)?;
    let text = if as_json {
        pretty(json!({
            "command": "verify",
            "input": { "n": n, "kmax": kmax, "theorem": theorem.name() },
            "summary": {
                "universe": s.universe,
                "subjects": s.subjects,
                "instances": s.instances,
                "passed": s.passed,
            },
            "verdict": s.ok(),
            "failures": s.failures.iter().map(report_json).collect::<Vec<_>>(),
        }))
    } else {
        let mut text = format!(
            "{} n={} kmax={}\nuniverse: {}\nchecked subjects: {}\ninstances: {}\npassed: {}\nfailures: {}\n",
            theorem,
            n,
            kmax,
            s.universe,
            s.subjects,
            s.instances,
            s.passed,
            s.failures.len()
        );
        for f in &s.failures {
            text.push_str(&format!("\n{f}\n"));
        }
        text
    };
    Ok(Output::verdict(text, s.ok()))
}
