//! Brute-force counting oracles and the small-graph generator.
//!
//! Everything here enumerates colorings directly, with pruning in vertex
//! order, so the counts can be trusted as witnesses for the polynomial
//! engines.

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{
    is_acyclic_mixed, is_acyclic_orientation, orientations, MixedGraph, Orientation, Origin,
};

/// Default limit on vertices for brute-force counting.
pub const DEFAULT_ORACLE_BOUND: usize = 8;

/// Default limit on `n` for [`enumerate_mixed_graphs`].
pub const DEFAULT_GENERATOR_BOUND: usize = 5;

pub const ORACLE_BOUND_ENV: &str = "CHROMIX_ORACLE_BOUND";

/// Vertex bound for brute-force counting, overridable through
/// `CHROMIX_ORACLE_BOUND`.
pub fn oracle_bound() -> usize {
    std::env::var(ORACLE_BOUND_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_ORACLE_BOUND)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Relation {
    /// `x[a] <= x[b]`
    Le,
    /// `x[a] < x[b]`
    Lt,
    /// `x[a] != x[b]`
    Ne,
}

impl Relation {
    fn holds(self, a: u32, b: u32) -> bool {
        match self {
            Relation::Le => a <= b,
            Relation::Lt => a < b,
            Relation::Ne => a != b,
        }
    }
}

/// Binary constraints over `n` variables ranging in `1..=k`.
#[derive(Debug, Clone)]
pub(crate) struct Constraints {
    n: usize,
    // constraints indexed by the later of their two variables
    by_last: Vec<Vec<(usize, usize, Relation)>>,
}

impl Constraints {
    pub fn new(n: usize) -> Self {
        Constraints {
            n,
            by_last: vec![Vec::new(); n],
        }
    }

    pub fn push(&mut self, a: usize, b: usize, rel: Relation) {
        self.by_last[a.max(b)].push((a, b, rel));
    }

    /// Counts solutions with every variable in `1..=k`.
    pub fn count(&self, k: u32) -> u64 {
        let mut x = vec![0u32; self.n];
        self.count_from(0, k, &mut x)
    }

    fn count_from(&self, i: usize, k: u32, x: &mut [u32]) -> u64 {
        if i == self.n {
            return 1;
        }
        let mut total = 0;
        for c in 1..=k {
            x[i] = c;
            if self.by_last[i]
                .iter()
                .all(|&(a, b, rel)| rel.holds(x[a], x[b]))
            {
                total += self.count_from(i + 1, k, x);
            }
        }
        total
    }
}

pub(crate) fn check_k(k: i64) -> Result<u32> {
    if k < 1 {
        return Err(Error::InvalidColorCount(k));
    }
    u32::try_from(k).map_err(|_| Error::InvalidColorCount(k))
}

pub(crate) fn check_oracle_size(n: usize) -> Result<()> {
    let bound = oracle_bound();
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "brute-force subject",
            size: n,
            bound,
        });
    }
    Ok(())
}

fn check_base(g: &MixedGraph, o: &Orientation<'_>) -> Result<()> {
    if o.base() != g {
        return Err(Error::OrientationMismatch);
    }
    Ok(())
}

/// A k-coloring, stored in the vertex order of the graph it colors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    pub k: u32,
    pub colors: Vec<u32>,
}

impl Coloring {
    /// All `k^n` colorings of `n` vertices in lexicographic order.
    pub fn all(n: usize, k: u32) -> impl Iterator<Item = Coloring> {
        let total = (k as u64).pow(n as u32);
        (0..total).map(move |mut code| {
            let mut colors = vec![0; n];
            for c in colors.iter_mut().rev() {
                *c = (code % k as u64) as u32 + 1;
                code /= k as u64;
            }
            Coloring { k, colors }
        })
    }

    pub fn is_weak_proper(&self, g: &MixedGraph) -> bool {
        let ig = g.indexed();
        let c = &self.colors;
        ig.edges.iter().all(|&(a, b)| c[a] != c[b]) && ig.arcs.iter().all(|&(t, h)| c[t] <= c[h])
    }

    pub fn is_strong_proper(&self, g: &MixedGraph) -> bool {
        let ig = g.indexed();
        let c = &self.colors;
        ig.edges.iter().all(|&(a, b)| c[a] != c[b]) && ig.arcs.iter().all(|&(t, h)| c[t] < c[h])
    }

    pub fn is_compatible(&self, o: &Orientation<'_>) -> bool {
        let c = &self.colors;
        o.indexed_pairs().iter().all(|&(t, h, _)| c[t] <= c[h])
    }

    /// Weak along edge-born pairs, strict along arc-born pairs.
    pub fn is_intercompatible(&self, o: &Orientation<'_>) -> bool {
        let c = &self.colors;
        o.indexed_pairs().iter().all(|&(t, h, origin)| match origin {
            Origin::Edge => c[t] <= c[h],
            Origin::Arc => c[t] < c[h],
        })
    }
}

fn orientation_constraints(
    o: &Orientation<'_>,
    edge_rel: Relation,
    arc_rel: Relation,
) -> Constraints {
    let mut cs = Constraints::new(o.base().vertex_count());
    for (t, h, origin) in o.indexed_pairs() {
        let rel = match origin {
            Origin::Edge => edge_rel,
            Origin::Arc => arc_rel,
        };
        cs.push(t, h, rel);
    }
    cs
}

pub(crate) fn weak_constraints(g: &MixedGraph, arc_rel: Relation) -> Constraints {
    let ig = g.indexed();
    let mut cs = Constraints::new(ig.n);
    for &(a, b) in &ig.edges {
        cs.push(a, b, Relation::Ne);
    }
    for &(t, h) in &ig.arcs {
        cs.push(t, h, arc_rel);
    }
    cs
}

/// Colorings with `c(u) != c(v)` on edges and `c(u) <= c(v)` on arcs.
pub fn count_weak_colorings(g: &MixedGraph, k: i64) -> Result<u64> {
    let k = check_k(k)?;
    check_oracle_size(g.vertex_count())?;
    Ok(weak_constraints(g, Relation::Le).count(k))
}

/// Colorings with `c(u) != c(v)` on edges and `c(u) < c(v)` on arcs.
pub fn count_strong_colorings(g: &MixedGraph, k: i64) -> Result<u64> {
    let k = check_k(k)?;
    check_oracle_size(g.vertex_count())?;
    Ok(weak_constraints(g, Relation::Lt).count(k))
}

pub fn count_compatible(g: &MixedGraph, o: &Orientation<'_>, k: i64) -> Result<u64> {
    check_base(g, o)?;
    let k = check_k(k)?;
    check_oracle_size(g.vertex_count())?;
    Ok(orientation_constraints(o, Relation::Le, Relation::Le).count(k))
}

/// When an edge-born and an arc-born pair coincide both constraints apply,
/// so the pair is effectively strict.
pub fn count_intercompatible(g: &MixedGraph, o: &Orientation<'_>, k: i64) -> Result<u64> {
    check_base(g, o)?;
    let k = check_k(k)?;
    check_oracle_size(g.vertex_count())?;
    Ok(orientation_constraints(o, Relation::Le, Relation::Lt).count(k))
}

/// Weak proper colorings of the orientation that are also weak proper
/// colorings of `g`: `<=` along arc-born pairs, `<` along edge-born pairs.
pub fn count_phi(g: &MixedGraph, o: &Orientation<'_>, k: i64) -> Result<u64> {
    check_base(g, o)?;
    let k = check_k(k)?;
    check_oracle_size(g.vertex_count())?;
    Ok(orientation_constraints(o, Relation::Lt, Relation::Le).count(k))
}

/// Pairs (k-coloring, intercompatible acyclic orientation).
pub fn reciprocity_rhs_weak(g: &MixedGraph, k: i64) -> Result<u64> {
    check_k(k)?;
    let mut total = 0;
    for o in orientations(g).iter().filter(|o| is_acyclic_orientation(o)) {
        total += count_intercompatible(g, o, k)?;
    }
    Ok(total)
}

/// Pairs (k-coloring, compatible acyclic orientation).
pub fn reciprocity_rhs_strong(g: &MixedGraph, k: i64) -> Result<u64> {
    check_k(k)?;
    let mut total = 0;
    for o in orientations(g).iter().filter(|o| is_acyclic_orientation(o)) {
        total += count_compatible(g, o, k)?;
    }
    Ok(total)
}

pub fn count_acyclic_orientations(g: &MixedGraph) -> u64 {
    orientations(g)
        .iter()
        .filter(|o| is_acyclic_orientation(o))
        .count() as u64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphFilter {
    All,
    AcyclicMixed,
    /// No arcs.
    PureGraph,
    /// No edges.
    PureDigraph,
}

impl GraphFilter {
    pub fn accepts(self, g: &MixedGraph) -> bool {
        match self {
            GraphFilter::All => true,
            GraphFilter::AcyclicMixed => is_acyclic_mixed(g),
            GraphFilter::PureGraph => g.is_pure_graph(),
            GraphFilter::PureDigraph => g.is_pure_digraph(),
        }
    }
}

fn generator_vertices(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("v{i}")).collect()
}

fn pair_list(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

fn build(names: &[String], pairs: &[(usize, usize)], symbols: impl Iterator<Item = u8>) -> MixedGraph {
    let mut g = MixedGraph::with_vertices(names.iter().map(String::as_str));
    for (&(i, j), s) in pairs.iter().zip(symbols) {
        let (a, b) = (names[i].as_str(), names[j].as_str());
        match s {
            1 => {
                g.add_edge(a, b);
            }
            2 => {
                g.add_arc(a, b);
            }
            3 => {
                g.add_arc(b, a);
            }
            _ => {}
        }
    }
    g
}

/// Every labeled mixed graph on `v1..vn` with one symbol per vertex pair
/// (none, edge, arc forward, arc backward), filtered. The pair `(v1,v2)` is
/// the least significant base-4 digit of the enumeration counter.
pub fn enumerate_mixed_graphs(
    n: usize,
    filter: GraphFilter,
) -> Result<impl Iterator<Item = MixedGraph>> {
    enumerate_mixed_graphs_bounded(n, filter, DEFAULT_GENERATOR_BOUND)
}

pub fn enumerate_mixed_graphs_bounded(
    n: usize,
    filter: GraphFilter,
    bound: usize,
) -> Result<impl Iterator<Item = MixedGraph>> {
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "generated graph",
            size: n,
            bound,
        });
    }
    let names = generator_vertices(n);
    let pairs = pair_list(n);
    let total = 4u64.pow(pairs.len() as u32);
    Ok((0..total).filter_map(move |code| {
        let digits = (0..pairs.len()).map(move |i| (code >> (2 * i) & 3) as u8);
        let g = build(&names, &pairs, digits);
        filter.accepts(&g).then_some(g)
    }))
}

/// A uniformly random member of the `n`-vertex universe of
/// [`enumerate_mixed_graphs`].
pub fn random_mixed_graph<R: Rng + ?Sized>(n: usize, rng: &mut R) -> MixedGraph {
    let names = generator_vertices(n);
    let pairs = pair_list(n);
    let symbols: Vec<u8> = (0..pairs.len()).map(|_| rng.gen_range(0..4)).collect();
    build(&names, &pairs, symbols.into_iter())
}
