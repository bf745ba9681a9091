use std::fmt;

use super::{Edge, IndexedGraph, MixedGraph, VertexId};

/// Whether a directed pair of an orientation came from an arc of the base
/// graph or from orienting one of its edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Origin {
    Edge,
    Arc,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DirectedPair {
    pub tail: VertexId,
    pub head: VertexId,
    pub origin: Origin,
}

/// A direction for every edge of `base`. Arcs keep their direction.
///
/// Edge `i` (in canonical edge order) is oriented from its smaller token to
/// its larger one unless bit `i` of `flips` is set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orientation<'g> {
    base: &'g MixedGraph,
    flips: Vec<bool>,
}

impl<'g> Orientation<'g> {
    /// Orientation selected by the low `|E|` bits of `mask`.
    pub fn from_mask(base: &'g MixedGraph, mask: u64) -> Self {
        let flips = (0..base.edges().len()).map(|i| mask >> i & 1 == 1).collect();
        Orientation { base, flips }
    }

    /// Orientation from an explicit `(tail, head)` choice per edge. Returns
    /// `None` unless every edge gets exactly one direction made of its own
    /// endpoints.
    pub fn from_directions(
        base: &'g MixedGraph,
        directions: &[(VertexId, VertexId)],
    ) -> Option<Self> {
        if directions.len() != base.edges().len() {
            return None;
        }
        let mut flips = vec![None; base.edges().len()];
        for (tail, head) in directions {
            let e = Edge::new(tail.clone(), head.clone());
            let i = base.edges().iter().position(|x| *x == e)?;
            if flips[i].is_some() {
                return None;
            }
            flips[i] = Some(e.lo != *tail);
        }
        Some(Orientation {
            base,
            flips: flips.into_iter().collect::<Option<_>>()?,
        })
    }

    pub fn base(&self) -> &'g MixedGraph {
        self.base
    }

    /// `(tail, head)` for each edge, in canonical edge order.
    pub fn directions(&self) -> Vec<(VertexId, VertexId)> {
        self.base
            .edges()
            .iter()
            .zip(&self.flips)
            .map(|(e, &flip)| {
                if flip {
                    (e.hi.clone(), e.lo.clone())
                } else {
                    (e.lo.clone(), e.hi.clone())
                }
            })
            .collect()
    }

    /// Arc-born pairs first, then the oriented edges.
    pub fn directed_pairs(&self) -> Vec<DirectedPair> {
        let arcs = self.base.arcs().iter().map(|a| DirectedPair {
            tail: a.tail.clone(),
            head: a.head.clone(),
            origin: Origin::Arc,
        });
        let edges = self.directions().into_iter().map(|(tail, head)| DirectedPair {
            tail,
            head,
            origin: Origin::Edge,
        });
        arcs.chain(edges).collect()
    }

    /// Index form of the directed pairs: `(tail, head, origin)`.
    pub(crate) fn indexed_pairs(&self) -> Vec<(usize, usize, Origin)> {
        let ig = self.base.indexed();
        indexed_pairs(&ig, &self.flips)
    }

    /// Same vertices and arcs, with each edge direction reversed.
    pub fn reverse_edges(&self) -> Orientation<'g> {
        Orientation {
            base: self.base,
            flips: self.flips.iter().map(|f| !f).collect(),
        }
    }
}

impl fmt::Display for Orientation<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .directed_pairs()
            .iter()
            .map(|p| match p.origin {
                Origin::Arc => format!("{}=>{}", p.tail, p.head),
                Origin::Edge => format!("{}->{}", p.tail, p.head),
            })
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

fn indexed_pairs(ig: &IndexedGraph, flips: &[bool]) -> Vec<(usize, usize, Origin)> {
    let arcs = ig.arcs.iter().map(|&(t, h)| (t, h, Origin::Arc));
    let edges = ig
        .edges
        .iter()
        .zip(flips)
        .map(|(&(a, b), &flip)| if flip { (b, a, Origin::Edge) } else { (a, b, Origin::Edge) });
    arcs.chain(edges).collect()
}

/// All `2^|E|` orientations, in binary-counter order over the canonical edge
/// order.
pub fn orientations(g: &MixedGraph) -> Vec<Orientation<'_>> {
    let m = g.edges().len();
    assert!(m < 64, "too many edges to enumerate orientations ({m})");
    (0..1u64 << m).map(|mask| Orientation::from_mask(g, mask)).collect()
}

pub fn is_acyclic_orientation(o: &Orientation<'_>) -> bool {
    let pairs = o.indexed_pairs();
    directed_acyclic(o.base.vertex_count(), pairs.iter().map(|&(t, h, _)| (t, h)))
}

/// Reference test: every orientation is acyclic.
pub fn is_acyclic_mixed(g: &MixedGraph) -> bool {
    let ig = g.indexed();
    let m = ig.edges.len();
    assert!(m < 64, "too many edges to enumerate orientations ({m})");
    (0..1u64 << m).all(|mask| {
        let flips: Vec<bool> = (0..m).map(|i| mask >> i & 1 == 1).collect();
        let pairs = indexed_pairs(&ig, &flips);
        directed_acyclic(ig.n, pairs.iter().map(|&(t, h, _)| (t, h)))
    })
}

/// Kahn's algorithm. A loop pair leaves its vertex with positive in-degree,
/// so it counts as a cycle.
pub(crate) fn directed_acyclic(n: usize, pairs: impl Iterator<Item = (usize, usize)>) -> bool {
    let mut out = vec![Vec::new(); n];
    let mut indeg = vec![0usize; n];
    for (t, h) in pairs {
        out[t].push(h);
        indeg[h] += 1;
    }
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = stack.pop() {
        seen += 1;
        for &h in &out[v] {
            indeg[h] -= 1;
            if indeg[h] == 0 {
                stack.push(h);
            }
        }
    }
    seen == n
}
