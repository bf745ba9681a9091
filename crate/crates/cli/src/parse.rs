//! Readers for the graph line format, the DOT subset and the poset format.

use std::fmt;

use chromix::{MixedGraph, OmegaLabeling, Poset, VertexId};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}, column {column}: unsupported DOT feature: {feature}")]
    Unsupported {
        line: usize,
        column: usize,
        feature: String,
    },
    #[error("{0}")]
    Poset(#[from] chromix::Error),
}

fn line_error(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Line {
        line,
        message: message.into(),
    }
}

/// Splits off a `#` comment and returns the whitespace-separated words.
fn words(raw: &str) -> Vec<&str> {
    let body = raw.split_once('#').map_or(raw, |(b, _)| b);
    body.split_whitespace().collect()
}

/// `vertex <tok>`, `edge <tok> <tok>`, `arc <tok> <tok>` (tail first), blank
/// lines and `#` comments. Endpoints are declared on first use.
pub fn parse_lines(text: &str) -> Result<MixedGraph, ParseError> {
    let mut g = MixedGraph::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        match words(raw).as_slice() {
            [] => {}
            ["vertex", v] => {
                g.add_vertex(*v);
            }
            ["edge", a, b] => {
                if a == b {
                    return Err(line_error(line, format!("self-loop edge on {a}")));
                }
                g.add_edge(*a, *b);
            }
            ["arc", a, b] => {
                if a == b {
                    return Err(line_error(line, format!("self-loop arc on {a}")));
                }
                g.add_arc(*a, *b);
            }
            [d @ ("vertex" | "edge" | "arc"), ..] => {
                let want = if *d == "vertex" { 1 } else { 2 };
                return Err(line_error(line, format!("`{d}` takes {want} token(s)")));
            }
            [other, ..] => return Err(line_error(line, format!("unknown directive `{other}`"))),
        }
    }
    Ok(g)
}

/// Canonical line form: vertices in order, then edges, then arcs.
pub fn render_lines(g: &MixedGraph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        out.push_str(&format!("vertex {v}\n"));
    }
    for e in g.edges() {
        let (a, b) = e.endpoints();
        out.push_str(&format!("edge {a} {b}\n"));
    }
    for a in g.arcs() {
        out.push_str(&format!("arc {} {}\n", a.tail, a.head));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Open,
    Close,
    Semi,
    Undirected,
    Directed,
    Other(char),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Open => f.write_str("`{`"),
            Tok::Close => f.write_str("`}`"),
            Tok::Semi => f.write_str("`;`"),
            Tok::Undirected => f.write_str("`--`"),
            Tok::Directed => f.write_str("`->`"),
            Tok::Other(c) => write!(f, "`{c}`"),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Vec<Spanned> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let chars: Vec<char> = raw.chars().collect();
        let mut j = 0;
        while j < chars.len() {
            let c = chars[j];
            let column = j + 1;
            let at = |tok| Spanned { tok, line, column };
            if c.is_whitespace() {
                j += 1;
            } else if c == '#' || (c == '/' && chars.get(j + 1) == Some(&'/')) {
                break;
            } else if c.is_alphanumeric() || c == '_' {
                let start = j;
                while j < chars.len() && (chars[j].is_alphanumeric() || chars[j] == '_') {
                    j += 1;
                }
                out.push(at(Tok::Ident(chars[start..j].iter().collect())));
            } else if c == '-' && chars.get(j + 1) == Some(&'-') {
                out.push(at(Tok::Undirected));
                j += 2;
            } else if c == '-' && chars.get(j + 1) == Some(&'>') {
                out.push(at(Tok::Directed));
                j += 2;
            } else {
                out.push(at(match c {
                    '{' => Tok::Open,
                    '}' => Tok::Close,
                    ';' => Tok::Semi,
                    other => Tok::Other(other),
                }));
                j += 1;
            }
        }
    }
    out
}

fn unsupported(t: &Spanned, feature: &str) -> ParseError {
    ParseError::Unsupported {
        line: t.line,
        column: t.column,
        feature: feature.into(),
    }
}

fn syntax(t: &Spanned, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line: t.line,
        column: t.column,
        message: message.into(),
    }
}

/// Classifies a token that has no place in the subset.
fn reject(t: &Spanned) -> ParseError {
    match &t.tok {
        Tok::Other('[') => unsupported(t, "attribute list"),
        Tok::Other('=') => unsupported(t, "attribute assignment"),
        Tok::Other(':') => unsupported(t, "port"),
        Tok::Other('"') => unsupported(t, "quoted identifier"),
        Tok::Open => unsupported(t, "anonymous subgraph"),
        Tok::Ident(s) if s == "subgraph" => unsupported(t, "subgraph"),
        Tok::Ident(s) if s == "strict" => unsupported(t, "strict graph"),
        Tok::Ident(s) if s == "node" || s == "edge" || s == "graph" => {
            unsupported(t, "default attribute statement")
        }
        other => syntax(t, format!("unexpected {other}")),
    }
}

/// `graph <id>? { ... }` or `digraph <id>? { ... }` containing node
/// statements `a;`, edges `a -- b;` and arcs `a -> b;`. Edge chains such as
/// `a -- b -> c` are allowed and semicolons are optional.
pub fn parse_dot_subset(text: &str) -> Result<MixedGraph, ParseError> {
    let toks = tokenize(text);
    let eof = || ParseError::Syntax {
        line: text.lines().count().max(1),
        column: 1,
        message: "unexpected end of input".into(),
    };
    let mut it = toks.iter().peekable();
    let head = it.next().ok_or_else(eof)?;
    match &head.tok {
        Tok::Ident(s) if s == "graph" || s == "digraph" => {}
        _ => {
            return Err(match reject(head) {
                ParseError::Syntax { .. } => syntax(head, "expected `graph` or `digraph`"),
                e => e,
            })
        }
    }
    if let Some(t) = it.peek() {
        if let Tok::Ident(_) = t.tok {
            it.next();
        }
    }
    let open = it.next().ok_or_else(eof)?;
    if open.tok != Tok::Open {
        return Err(syntax(open, format!("expected `{{`, found {}", open.tok)));
    }
    let mut g = MixedGraph::new();
    loop {
        let t = it.next().ok_or_else(eof)?;
        let first = match &t.tok {
            Tok::Close => break,
            Tok::Semi => continue,
            Tok::Ident(s) if !matches!(s.as_str(), "subgraph" | "strict" | "node" | "edge" | "graph") => s.clone(),
            _ => return Err(reject(t)),
        };
        g.add_vertex(first.as_str());
        let mut prev = first;
        while let Some(op) = it.peek() {
            let directed = match op.tok {
                Tok::Undirected => false,
                Tok::Directed => true,
                _ => break,
            };
            let op = it.next().expect("peeked");
            let t = it.next().ok_or_else(eof)?;
            let next = match &t.tok {
                Tok::Ident(s) => s.clone(),
                _ => return Err(reject(t)),
            };
            if next == prev {
                return Err(syntax(op, format!("self-loop on {next}")));
            }
            if directed {
                g.add_arc(prev.as_str(), next.as_str());
            } else {
                g.add_edge(prev.as_str(), next.as_str());
            }
            prev = next;
        }
        if let Some(t) = it.peek() {
            match t.tok {
                Tok::Semi | Tok::Close | Tok::Ident(_) => {}
                _ => return Err(reject(t)),
            }
        }
    }
    if let Some(t) = it.next() {
        return Err(syntax(t, format!("trailing {} after graph body", t.tok)));
    }
    Ok(g)
}

/// `elem <tok>`, `rel <a> <b>` (a precedes b, closed transitively) and
/// optional `label <tok> <int>` lines. Without labels the natural labeling is
/// used.
pub fn parse_poset(text: &str) -> Result<OmegaLabeling, ParseError> {
    let mut elements: Vec<VertexId> = Vec::new();
    let mut rels = Vec::new();
    let mut labels = Vec::new();
    let declare = |v: &str, elements: &mut Vec<VertexId>| {
        let v = VertexId::from(v);
        if !elements.contains(&v) {
            elements.push(v.clone());
        }
        v
    };
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        match words(raw).as_slice() {
            [] => {}
            ["elem", v] => {
                declare(v, &mut elements);
            }
            ["rel", a, b] => {
                let a = declare(a, &mut elements);
                let b = declare(b, &mut elements);
                rels.push((a, b));
            }
            ["label", v, l] => {
                let l: usize = l
                    .parse()
                    .map_err(|_| line_error(line, format!("label `{l}` is not a positive integer")))?;
                labels.push((declare(v, &mut elements), l));
            }
            [d @ ("elem" | "rel" | "label"), ..] => {
                let want = if *d == "elem" { 1 } else { 2 };
                return Err(line_error(line, format!("`{d}` takes {want} argument(s)")));
            }
            [other, ..] => return Err(line_error(line, format!("unknown directive `{other}`"))),
        }
    }
    let poset = Poset::from_relations(elements, &rels)?;
    if labels.is_empty() {
        Ok(chromix::poset::natural_labeling(&poset))
    } else {
        Ok(OmegaLabeling::from_pairs(poset, &labels)?)
    }
}
