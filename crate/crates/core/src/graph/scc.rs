use super::{MixedGraph, VertexId};
use crate::error::{Error, Result};

/// Tarjan's algorithm over the arcs of an edgeless graph.
///
/// Members of each component are sorted by token and components are ordered
/// by their smallest token.
pub fn strongly_connected_components(g: &MixedGraph) -> Result<Vec<Vec<VertexId>>> {
    if !g.edges().is_empty() {
        return Err(Error::HasEdges(g.edges().len()));
    }
    let ig = g.indexed();
    let mut out = vec![Vec::new(); ig.n];
    for &(t, h) in &ig.arcs {
        out[t].push(h);
    }
    let mut comps: Vec<Vec<VertexId>> = tarjan(&out)
        .into_iter()
        .map(|c| {
            let mut c: Vec<VertexId> = c.into_iter().map(|i| g.vertices()[i].clone()).collect();
            c.sort();
            c
        })
        .collect();
    comps.sort();
    Ok(comps)
}

/// A digraph (no edges) in which every vertex reaches every other. The
/// one-vertex graph qualifies; the empty graph does not.
pub fn is_strongly_connected(g: &MixedGraph) -> bool {
    g.vertex_count() > 0
        && matches!(strongly_connected_components(g), Ok(c) if c.len() == 1)
}

struct Tarjan<'a> {
    out: &'a [Vec<usize>],
    index: Vec<Option<usize>>,
    low: Vec<usize>,
    on_stack: Vec<bool>,
    stack: Vec<usize>,
    next: usize,
    comps: Vec<Vec<usize>>,
}

fn tarjan(out: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = out.len();
    let mut t = Tarjan {
        out,
        index: vec![None; n],
        low: vec![0; n],
        on_stack: vec![false; n],
        stack: Vec::new(),
        next: 0,
        comps: Vec::new(),
    };
    for v in 0..n {
        if t.index[v].is_none() {
            t.visit(v);
        }
    }
    t.comps
}

impl Tarjan<'_> {
    fn visit(&mut self, v: usize) {
        self.index[v] = Some(self.next);
        self.low[v] = self.next;
        self.next += 1;
        self.stack.push(v);
        self.on_stack[v] = true;
        for &w in &self.out[v] {
            match self.index[w] {
                None => {
                    self.visit(w);
                    self.low[v] = self.low[v].min(self.low[w]);
                }
                Some(iw) if self.on_stack[w] => self.low[v] = self.low[v].min(iw),
                Some(_) => {}
            }
        }
        if Some(self.low[v]) == self.index[v] {
            let mut comp = Vec::new();
            loop {
                let w = self.stack.pop().expect("component root is on the stack");
                self.on_stack[w] = false;
                comp.push(w);
                if w == v {
                    break;
                }
            }
            self.comps.push(comp);
        }
    }
}
