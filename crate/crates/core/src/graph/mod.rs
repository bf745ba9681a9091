//! Mixed graphs: a vertex list plus a set of undirected edges and a set of
//! directed arcs.
//!
//! Edges and arcs have set semantics. Opposite arcs `u->v` and `v->u` are
//! distinct members, and an edge `uv` may coexist with an arc on the same
//! endpoints. A loop edge `{v,v}` is kept wherever it appears, since it makes
//! every coloring improper. A loop arc `v->v` imposes `c(v) <= c(v)` and is
//! dropped as soon as it would be created.

mod orientation;
mod scc;

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

pub use orientation::{
    is_acyclic_mixed, is_acyclic_orientation, orientations, DirectedPair, Orientation, Origin,
};
pub use scc::{is_strongly_connected, strongly_connected_components};

/// A vertex token, as read from input.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(token: impl Into<String>) -> Self {
        VertexId(token.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl From<&str> for VertexId {
    fn from(s: &str) -> Self {
        VertexId(s.to_owned())
    }
}

impl From<String> for VertexId {
    fn from(s: String) -> Self {
        VertexId(s)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// An undirected edge, stored with its endpoints in token order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    lo: VertexId,
    hi: VertexId,
}

impl Edge {
    pub fn new(a: impl Into<VertexId>, b: impl Into<VertexId>) -> Self {
        let (a, b) = (a.into(), b.into());
        if a <= b {
            Edge { lo: a, hi: b }
        } else {
            Edge { lo: b, hi: a }
        }
    }

    /// Endpoints, smaller token first.
    pub fn endpoints(&self) -> (&VertexId, &VertexId) {
        (&self.lo, &self.hi)
    }

    pub fn is_loop(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        &self.lo == v || &self.hi == v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

/// A directed arc `tail -> head`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub tail: VertexId,
    pub head: VertexId,
}

impl Arc {
    pub fn new(tail: impl Into<VertexId>, head: impl Into<VertexId>) -> Self {
        Arc {
            tail: tail.into(),
            head: head.into(),
        }
    }

    pub fn reversed(&self) -> Arc {
        Arc {
            tail: self.head.clone(),
            head: self.tail.clone(),
        }
    }

    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.tail, self.head)
    }
}

/// Either kind of graph element, as accepted by [`MixedGraph::contract`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Element {
    Edge(Edge),
    Arc(Arc),
}

impl From<Edge> for Element {
    fn from(e: Edge) -> Self {
        Element::Edge(e)
    }
}

impl From<Arc> for Element {
    fn from(a: Arc) -> Self {
        Element::Arc(a)
    }
}

/// A vertex set together with some edges and arcs among those vertices.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Subgraph {
    pub vertices: BTreeSet<VertexId>,
    pub edges: BTreeSet<Edge>,
    pub arcs: BTreeSet<Arc>,
}

impl Subgraph {
    /// The subgraph spanned by `vertices` using every arc of `g` between them.
    /// Edges are left out.
    pub fn induced_arcs<I, V>(g: &MixedGraph, vertices: I) -> Subgraph
    where
        I: IntoIterator<Item = V>,
        V: Into<VertexId>,
    {
        let vertices: BTreeSet<VertexId> = vertices.into_iter().map(Into::into).collect();
        let arcs = g
            .arcs
            .iter()
            .filter(|a| vertices.contains(&a.tail) && vertices.contains(&a.head))
            .cloned()
            .collect();
        Subgraph {
            vertices,
            edges: BTreeSet::new(),
            arcs,
        }
    }
}

/// Result of [`MixedGraph::reverse_arc`]. `collapsed` is set when the
/// reversed arc was already present, so the arc set shrank by one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reversal {
    pub graph: MixedGraph,
    pub collapsed: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct MixedGraph {
    vertices: Vec<VertexId>,
    edges: BTreeSet<Edge>,
    arcs: BTreeSet<Arc>,
}

impl MixedGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices<I, V>(vertices: I) -> Self
    where
        I: IntoIterator<Item = V>,
        V: Into<VertexId>,
    {
        let mut g = Self::new();
        for v in vertices {
            g.add_vertex(v);
        }
        g
    }

    /// Builds a graph from explicit parts, checking that every endpoint is a
    /// declared vertex. Loop arcs are dropped.
    pub fn from_parts<V, E, A>(vertices: V, edges: E, arcs: A) -> Result<Self>
    where
        V: IntoIterator<Item = VertexId>,
        E: IntoIterator<Item = Edge>,
        A: IntoIterator<Item = Arc>,
    {
        let mut g = Self::with_vertices(vertices);
        for e in edges {
            for v in [&e.lo, &e.hi] {
                if !g.contains_vertex(v) {
                    return Err(Error::MissingVertex(v.clone()));
                }
            }
            g.edges.insert(e);
        }
        for a in arcs {
            for v in [&a.tail, &a.head] {
                if !g.contains_vertex(v) {
                    return Err(Error::MissingVertex(v.clone()));
                }
            }
            if !a.is_loop() {
                g.arcs.insert(a);
            }
        }
        Ok(g)
    }

    /// Declares a vertex; returns false if it was already present.
    pub fn add_vertex(&mut self, v: impl Into<VertexId>) -> bool {
        let v = v.into();
        if self.contains_vertex(&v) {
            false
        } else {
            self.vertices.push(v);
            true
        }
    }

    /// Adds edge `ab`, declaring missing endpoints.
    pub fn add_edge(&mut self, a: impl Into<VertexId>, b: impl Into<VertexId>) -> bool {
        let e = Edge::new(a, b);
        self.add_vertex(e.lo.clone());
        self.add_vertex(e.hi.clone());
        self.edges.insert(e)
    }

    /// Adds arc `tail -> head`, declaring missing endpoints. A loop arc only
    /// declares its vertex.
    pub fn add_arc(&mut self, tail: impl Into<VertexId>, head: impl Into<VertexId>) -> bool {
        let a = Arc::new(tail, head);
        self.add_vertex(a.tail.clone());
        self.add_vertex(a.head.clone());
        if a.is_loop() {
            return false;
        }
        self.arcs.insert(a)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn arcs(&self) -> &BTreeSet<Arc> {
        &self.arcs
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains_vertex(&self, v: &VertexId) -> bool {
        self.vertices.contains(v)
    }

    pub fn index_of(&self, v: &VertexId) -> Option<usize> {
        self.vertices.iter().position(|x| x == v)
    }

    pub fn has_loop_edge(&self) -> bool {
        self.edges.iter().any(Edge::is_loop)
    }

    pub fn is_pure_graph(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn is_pure_digraph(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn delete_edge(&self, e: &Edge) -> Result<MixedGraph> {
        let mut g = self.clone();
        if !g.edges.remove(e) {
            return Err(Error::MissingEdge(e.clone()));
        }
        Ok(g)
    }

    pub fn delete_arc(&self, a: &Arc) -> Result<MixedGraph> {
        let mut g = self.clone();
        if !g.arcs.remove(a) {
            return Err(Error::MissingArc(a.clone()));
        }
        Ok(g)
    }

    /// Removes `x` and identifies its endpoints. The merged vertex takes the
    /// smaller token and the position of that token in the vertex list.
    pub fn contract(&self, x: &Element) -> Result<MixedGraph> {
        let mut g = self.clone();
        let group: BTreeSet<VertexId> = match x {
            Element::Edge(e) => {
                if !g.edges.remove(e) {
                    return Err(Error::MissingEdge(e.clone()));
                }
                [e.lo.clone(), e.hi.clone()].into()
            }
            Element::Arc(a) => {
                if !g.arcs.remove(a) {
                    return Err(Error::MissingArc(a.clone()));
                }
                [a.tail.clone(), a.head.clone()].into()
            }
        };
        Ok(g.identify(&group))
    }

    /// Removes the edges and arcs of `s` and identifies all of its vertices.
    pub fn contract_subgraph(&self, s: &Subgraph) -> Result<MixedGraph> {
        self.check_subgraph(s)?;
        let mut g = self.clone();
        for e in &s.edges {
            g.edges.remove(e);
        }
        for a in &s.arcs {
            g.arcs.remove(a);
        }
        Ok(g.identify(&s.vertices))
    }

    pub(crate) fn check_subgraph(&self, s: &Subgraph) -> Result<()> {
        if s.vertices.is_empty() {
            return Err(Error::NotASubgraph("empty vertex set".into()));
        }
        if let Some(v) = s.vertices.iter().find(|v| !self.contains_vertex(v)) {
            return Err(Error::NotASubgraph(format!("vertex {v} is not in the graph")));
        }
        for e in &s.edges {
            if !self.edges.contains(e) {
                return Err(Error::NotASubgraph(format!("edge {e} is not in the graph")));
            }
            if !s.vertices.contains(&e.lo) || !s.vertices.contains(&e.hi) {
                return Err(Error::NotASubgraph(format!("edge {e} leaves the vertex set")));
            }
        }
        for a in &s.arcs {
            if !self.arcs.contains(a) {
                return Err(Error::NotASubgraph(format!("arc {a} is not in the graph")));
            }
            if !s.vertices.contains(&a.tail) || !s.vertices.contains(&a.head) {
                return Err(Error::NotASubgraph(format!("arc {a} leaves the vertex set")));
            }
        }
        Ok(())
    }

    fn identify(self, group: &BTreeSet<VertexId>) -> MixedGraph {
        let Some(keep) = group.first() else {
            return self;
        };
        if group.len() == 1 {
            return self;
        }
        let rename = |v: &VertexId| -> VertexId {
            if group.contains(v) {
                keep.clone()
            } else {
                v.clone()
            }
        };
        let vertices = self
            .vertices
            .iter()
            .filter(|v| *v == keep || !group.contains(*v))
            .cloned()
            .collect();
        let edges = self
            .edges
            .iter()
            .map(|e| Edge::new(rename(&e.lo), rename(&e.hi)))
            .collect();
        let arcs = self
            .arcs
            .iter()
            .map(|a| Arc::new(rename(&a.tail), rename(&a.head)))
            .filter(|a| !a.is_loop())
            .collect();
        MixedGraph {
            vertices,
            edges,
            arcs,
        }
    }

    pub fn reverse_arc(&self, a: &Arc) -> Result<Reversal> {
        let mut g = self.clone();
        if !g.arcs.remove(a) {
            return Err(Error::MissingArc(a.clone()));
        }
        let collapsed = !g.arcs.insert(a.reversed());
        Ok(Reversal {
            graph: g,
            collapsed,
        })
    }

    /// Replaces every arc `u->v` with the pair `{edge uv, arc u->v}`. Weak
    /// colorings of the result are exactly strong colorings of `self`.
    pub fn strong_to_weak(&self) -> MixedGraph {
        let mut g = self.clone();
        for a in &self.arcs {
            g.edges.insert(Edge::new(a.tail.clone(), a.head.clone()));
        }
        g
    }

    /// The arcs-only part of the graph on the same vertex list.
    pub fn arc_part(&self) -> MixedGraph {
        MixedGraph {
            vertices: self.vertices.clone(),
            edges: BTreeSet::new(),
            arcs: self.arcs.clone(),
        }
    }

    pub(crate) fn indexed(&self) -> IndexedGraph {
        let idx = |v: &VertexId| self.index_of(v).expect("endpoint is a declared vertex");
        IndexedGraph {
            n: self.vertices.len(),
            edges: self.edges.iter().map(|e| (idx(&e.lo), idx(&e.hi))).collect(),
            arcs: self.arcs.iter().map(|a| (idx(&a.tail), idx(&a.head))).collect(),
        }
    }
}

impl fmt::Display for MixedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |items: Vec<String>| items.join(", ");
        write!(
            f,
            "V={{{}}} E={{{}}} A={{{}}}",
            join(self.vertices.iter().map(ToString::to_string).collect()),
            join(self.edges.iter().map(ToString::to_string).collect()),
            join(self.arcs.iter().map(ToString::to_string).collect()),
        )
    }
}

/// Index-based view used by the counting code. Indices follow vertex order;
/// edge and arc lists follow canonical order.
#[derive(Debug, Clone)]
pub(crate) struct IndexedGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub arcs: Vec<(usize, usize)>,
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::MixedGraph;

    /// Edge uv with arcs v->w and w->u.
    pub fn mixed_triangle() -> MixedGraph {
        let mut g = MixedGraph::with_vertices(["u", "v", "w"]);
        g.add_edge("u", "v");
        g.add_arc("v", "w");
        g.add_arc("w", "u");
        g
    }

    pub fn triangle() -> MixedGraph {
        let mut g = MixedGraph::new();
        g.add_edge("a", "b");
        g.add_edge("b", "c");
        g.add_edge("a", "c");
        g
    }

    pub fn single_edge() -> MixedGraph {
        let mut g = MixedGraph::new();
        g.add_edge("u", "v");
        g
    }

    pub fn single_arc() -> MixedGraph {
        let mut g = MixedGraph::new();
        g.add_arc("u", "v");
        g
    }

    pub fn two_cycle() -> MixedGraph {
        let mut g = MixedGraph::new();
        g.add_arc("u", "v");
        g.add_arc("v", "u");
        g
    }

    /// Edge uv plus arc v->w.
    pub fn edge_then_arc() -> MixedGraph {
        let mut g = MixedGraph::new();
        g.add_edge("u", "v");
        g.add_arc("v", "w");
        g
    }
}
