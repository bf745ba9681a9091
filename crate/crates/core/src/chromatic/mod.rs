//! Weak and strong chromatic polynomials of mixed graphs.
//!
//! The engine removes edges by deletion–contraction
//! (`χ_G = χ_{G-e} - χ_{G/e}`), contracts every strongly connected component
//! of the remaining digraph (each one is forced to a single color), and counts
//! the resulting acyclic digraph through multichains of order ideals.

mod ideals;
mod verify;

use std::collections::HashMap;

use crate::enumeration::{check_oracle_size, count_weak_colorings};
use crate::error::Result;
use crate::graph::{strongly_connected_components, Element, MixedGraph, Subgraph};
use crate::polynomial::{rational, Polynomial};

pub use verify::{
    check_arc_reversal, check_edge_deletion_contraction, check_scc_contraction,
    check_strong_component, exhaustive_verify, verify_phi_sum, verify_stanley_graph,
    verify_strong_reciprocity, verify_weak_reciprocity, Summary, EXHAUSTIVE_BOUND,
};

/// Deletion–contraction with memoization on the exact labeled graph.
#[derive(Debug, Default)]
pub struct WeakEngine {
    memo: HashMap<MixedGraph, Polynomial>,
}

/// Recursion measure, compared lexicographically.
fn measure(g: &MixedGraph) -> (usize, usize) {
    (g.edges().len(), g.vertex_count())
}

impl WeakEngine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn polynomial(&mut self, g: &MixedGraph) -> Polynomial {
        if let Some(p) = self.memo.get(g) {
            return p.clone();
        }
        let p = self.compute(g);
        self.memo.insert(g.clone(), p.clone());
        p
    }

    fn step(&mut self, from: &MixedGraph, to: &MixedGraph) -> Polynomial {
        assert!(
            measure(to) < measure(from),
            "recursion measure did not decrease: {from} -> {to}"
        );
        self.polynomial(to)
    }

    fn compute(&mut self, g: &MixedGraph) -> Polynomial {
        if g.has_loop_edge() {
            return Polynomial::zero();
        }
        if let Some(e) = g.edges().first() {
            let deleted = g.delete_edge(e).expect("edge of g");
            let contracted = g.contract(&Element::Edge(e.clone())).expect("edge of g");
            return self.step(g, &deleted) - self.step(g, &contracted);
        }
        let comps = strongly_connected_components(g).expect("edgeless graph");
        if comps.iter().any(|c| c.len() > 1) {
            let mut h = g.clone();
            for c in comps.into_iter().filter(|c| c.len() > 1) {
                let s = Subgraph::induced_arcs(&h, c);
                h = h.contract_subgraph(&s).expect("component of g");
            }
            return self.step(g, &h);
        }
        ideals::acyclic_digraph_polynomial(g)
    }
}

/// `χ_G(k)`: colorings with `c(u) != c(v)` on edges and `c(u) <= c(v)` on
/// arcs.
pub fn weak_chromatic_polynomial(g: &MixedGraph) -> Polynomial {
    WeakEngine::new().polynomial(g)
}

/// `χ̂_G(k)`, computed as the weak polynomial of the graph with an edge added
/// alongside every arc.
pub fn strong_chromatic_polynomial(g: &MixedGraph) -> Polynomial {
    weak_chromatic_polynomial(&g.strong_to_weak())
}

/// Interpolation of brute-force weak counts on `k = 1..=n+1`, resampled at
/// `n+2`.
pub fn weak_chromatic_via_oracle(g: &MixedGraph) -> Result<Polynomial> {
    check_oracle_size(g.vertex_count())?;
    Polynomial::from_samples(g.vertex_count(), |k| {
        Ok(rational(count_weak_colorings(g, k)? as i64))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{count_strong_colorings, enumerate_mixed_graphs, GraphFilter};
    use crate::graph::fixtures::*;
    use crate::graph::{is_strongly_connected, Edge};
    use num_rational::BigRational;

    fn poly(s: &[(i64, i64)]) -> Polynomial {
        Polynomial::from_coefficients(
            s.iter()
                .map(|&(n, d)| BigRational::new(n.into(), d.into()))
                .collect(),
        )
    }

    #[test]
    fn mixed_triangle_polynomial() {
        let g = mixed_triangle();
        let p = weak_chromatic_polynomial(&g);
        assert_eq!(p, poly(&[(0, 1), (-2, 3), (1, 2), (1, 6)]));
        assert_eq!(p, weak_chromatic_via_oracle(&g).unwrap());
        for (k, v) in [(1, 0), (2, 2), (3, 7), (4, 16)] {
            assert_eq!(p.evaluate(k), rational(v));
        }
    }

    #[test]
    fn mixed_triangle_parts() {
        let g = mixed_triangle();
        let e = Edge::new("u", "v");
        let contracted = g.contract(&e.clone().into()).unwrap();
        assert_eq!(weak_chromatic_polynomial(&contracted), Polynomial::k());
        // k(k+1)(k+2)/6
        let deleted = g.delete_edge(&e).unwrap();
        assert_eq!(
            weak_chromatic_polynomial(&deleted),
            poly(&[(0, 1), (1, 3), (1, 2), (1, 6)])
        );
    }

    #[test]
    fn small_polynomials() {
        assert_eq!(weak_chromatic_polynomial(&two_cycle()), Polynomial::k());
        assert_eq!(
            weak_chromatic_polynomial(&single_arc()),
            poly(&[(0, 1), (1, 2), (1, 2)])
        );
        assert_eq!(
            weak_chromatic_polynomial(&MixedGraph::with_vertices(["x"])),
            Polynomial::k()
        );
        assert_eq!(
            weak_chromatic_via_oracle(&MixedGraph::with_vertices(["a", "b", "c"])).unwrap(),
            Polynomial::monomial(rational(1), 3)
        );
        assert_eq!(weak_chromatic_via_oracle(&MixedGraph::with_vertices(["x"])).unwrap(), Polynomial::k());
    }

    #[test]
    fn strong_polynomials() {
        assert_eq!(
            strong_chromatic_polynomial(&single_arc()),
            poly(&[(0, 1), (-1, 2), (1, 2)])
        );
        assert_eq!(
            strong_chromatic_polynomial(&single_edge()),
            Polynomial::from_integers(&[0, -1, 1])
        );
        assert!(strong_chromatic_polynomial(&two_cycle()).is_zero());
    }

    #[test]
    fn weak_pure_edge() {
        assert_eq!(
            weak_chromatic_polynomial(&single_edge()),
            Polynomial::from_integers(&[0, -1, 1])
        );
    }

    #[test]
    fn loop_edge_gives_zero() {
        let g = MixedGraph::from_parts(["x".into()], [Edge::new("x", "x")], []).unwrap();
        assert!(weak_chromatic_polynomial(&g).is_zero());
        assert!(weak_chromatic_via_oracle(&g).unwrap().is_zero());
    }

    #[test]
    fn edge_with_parallel_arc() {
        let mut g = MixedGraph::new();
        g.add_edge("u", "v");
        g.add_arc("u", "v");
        let p = weak_chromatic_polynomial(&g);
        for k in 1..=5 {
            assert_eq!(p.evaluate(k), rational(count_strong_colorings(&single_arc(), k).unwrap() as i64));
        }
    }

    #[test]
    fn engine_matches_oracle_on_three_vertices() {
        for g in enumerate_mixed_graphs(3, GraphFilter::All).unwrap() {
            assert_eq!(weak_chromatic_polynomial(&g), weak_chromatic_via_oracle(&g).unwrap(), "{g}");
            let strong = strong_chromatic_polynomial(&g);
            for k in 1..=4 {
                assert_eq!(strong.evaluate(k), rational(count_strong_colorings(&g, k).unwrap() as i64));
            }
        }
    }

    #[test]
    fn strongly_connected_digraphs_give_k() {
        for n in 1..=4 {
            for g in enumerate_mixed_graphs(n, GraphFilter::PureDigraph).unwrap() {
                if is_strongly_connected(&g) {
                    assert_eq!(weak_chromatic_polynomial(&g), Polynomial::k(), "{g}");
                }
            }
        }
    }

    #[test]
    fn memo_is_keyed_by_graph() {
        let mut engine = WeakEngine::new();
        let a = engine.polynomial(&mixed_triangle());
        let b = engine.polynomial(&mixed_triangle());
        assert_eq!(a, b);
        let mut g = single_arc();
        g.add_arc("v", "w");
        assert_eq!(engine.polynomial(&g), weak_chromatic_via_oracle(&g).unwrap());
    }
}
