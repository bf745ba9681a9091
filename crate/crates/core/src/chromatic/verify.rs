//! Verifiers for the deletion–contraction identities and the reciprocity
//! theorems, plus an exhaustive driver over the small-graph universe.
//!
//! Polynomial identities are checked on polynomials interpolated from
//! brute-force counts, so they do not lean on the engine they justify. Each
//! side has degree at most `|V|`, and the rows sample `k = 0..=|V|+1`, so the
//! rows agree exactly when the two polynomials are equal.

use rayon::prelude::*;

use super::{strong_chromatic_polynomial, weak_chromatic_polynomial, weak_chromatic_via_oracle};
use crate::enumeration::{
    check_k, count_acyclic_orientations, count_phi, enumerate_mixed_graphs, reciprocity_rhs_strong,
    reciprocity_rhs_weak, GraphFilter,
};
use crate::error::{Error, Result};
use crate::graph::{
    is_acyclic_mixed, is_strongly_connected, orientations, strongly_connected_components, Arc,
    Edge, Element, MixedGraph, Subgraph,
};
use crate::polynomial::{rational, Polynomial};
use crate::poset::{
    all_labelings, enumerate_posets, verify_orientation_labeling, verify_order_reciprocity,
};
use crate::report::{Row, Theorem, VerificationReport};

/// Largest `n` accepted by [`exhaustive_verify`].
pub const EXHAUSTIVE_BOUND: usize = 4;

fn sign(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn identity_report(
    g: &MixedGraph,
    theorem: Theorem,
    lhs: &Polynomial,
    rhs: &Polynomial,
) -> VerificationReport {
    let top = g.vertex_count() as i64 + 1;
    let rows = (0..=top)
        .map(|k| Row::new(k, lhs.evaluate(k), rhs.evaluate(k)))
        .collect();
    VerificationReport::new(g.to_string(), theorem, rows)
}

/// `χ_G = χ_{G-e} - χ_{G/e}`.
pub fn check_edge_deletion_contraction(g: &MixedGraph, e: &Edge) -> Result<VerificationReport> {
    let deleted = g.delete_edge(e)?;
    let contracted = g.contract(&Element::Edge(e.clone()))?;
    let lhs = weak_chromatic_via_oracle(g)?;
    let rhs = weak_chromatic_via_oracle(&deleted)? - weak_chromatic_via_oracle(&contracted)?;
    Ok(identity_report(g, Theorem::EdgeDeletionContraction, &lhs, &rhs))
}

/// `χ_G + χ_{G_a} = χ_{G-a} + χ_{G/a}`, where `G_a` reverses `a`.
pub fn check_arc_reversal(g: &MixedGraph, a: &Arc) -> Result<VerificationReport> {
    let reversed = g.reverse_arc(a)?.graph;
    let deleted = g.delete_arc(a)?;
    let contracted = g.contract(&Element::Arc(a.clone()))?;
    let lhs = weak_chromatic_via_oracle(g)? + weak_chromatic_via_oracle(&reversed)?;
    let rhs = weak_chromatic_via_oracle(&deleted)? + weak_chromatic_via_oracle(&contracted)?;
    Ok(identity_report(g, Theorem::ArcReversal, &lhs, &rhs))
}

/// A strongly connected digraph has `χ = k`.
pub fn check_strong_component(g: &MixedGraph) -> Result<VerificationReport> {
    if !g.edges().is_empty() {
        return Err(Error::HasEdges(g.edges().len()));
    }
    if !is_strongly_connected(g) {
        return Err(Error::NotStronglyConnected);
    }
    let lhs = weak_chromatic_via_oracle(g)?;
    Ok(identity_report(g, Theorem::StrongComponent, &lhs, &Polynomial::k()))
}

/// `χ_G = χ_{G/S}` for a strongly connected arc subgraph `S`.
pub fn check_scc_contraction(g: &MixedGraph, s: &Subgraph) -> Result<VerificationReport> {
    if !s.edges.is_empty() {
        return Err(Error::HasEdges(s.edges.len()));
    }
    g.check_subgraph(s)?;
    let inner = MixedGraph::from_parts(s.vertices.iter().cloned(), [], s.arcs.iter().cloned())?;
    if !is_strongly_connected(&inner) {
        return Err(Error::NotStronglyConnected);
    }
    let contracted = g.contract_subgraph(s)?;
    let lhs = weak_chromatic_via_oracle(g)?;
    let rhs = weak_chromatic_via_oracle(&contracted)?;
    Ok(identity_report(g, Theorem::SccContraction, &lhs, &rhs))
}

/// Rows compare `(-1)^n χ(-k)` with the number of pairs (coloring,
/// intercompatible acyclic orientation) for `k = 1..=kmax`.
///
/// Refuses graphs that are not acyclic mixed unless `force` is set, in which
/// case the rows show how the identity breaks.
pub fn verify_weak_reciprocity(
    g: &MixedGraph,
    kmax: i64,
    force: bool,
) -> Result<VerificationReport> {
    check_k(kmax)?;
    if !force && !is_acyclic_mixed(g) {
        return Err(Error::NotAcyclicMixed);
    }
    let chi = weak_chromatic_polynomial(g);
    let s = rational(sign(g.vertex_count()));
    let rows = (1..=kmax)
        .map(|k| {
            Ok(Row::new(
                k,
                &s * chi.evaluate(-k),
                rational(reciprocity_rhs_weak(g, k)? as i64),
            ))
        })
        .collect::<Result<_>>()?;
    Ok(VerificationReport::new(g.to_string(), Theorem::WeakReciprocity, rows))
}

/// Rows compare `(-1)^n χ̂(-k)` with the number of pairs (coloring,
/// compatible acyclic orientation).
pub fn verify_strong_reciprocity(g: &MixedGraph, kmax: i64) -> Result<VerificationReport> {
    check_k(kmax)?;
    let chi = strong_chromatic_polynomial(g);
    let s = rational(sign(g.vertex_count()));
    let rows = (1..=kmax)
        .map(|k| {
            Ok(Row::new(
                k,
                &s * chi.evaluate(-k),
                rational(reciprocity_rhs_strong(g, k)? as i64),
            ))
        })
        .collect::<Result<_>>()?;
    Ok(VerificationReport::new(g.to_string(), Theorem::StrongReciprocity, rows))
}

/// Graphs without arcs. Rows `1..=kmax` compare `(-1)^n χ(-k)` with the
/// pair count; a final `k = 1` row compares `(-1)^n χ(-1)` with the number of
/// acyclic orientations counted directly.
pub fn verify_stanley_graph(g: &MixedGraph, kmax: i64) -> Result<VerificationReport> {
    check_k(kmax)?;
    if !g.arcs().is_empty() {
        return Err(Error::HasArcs(g.arcs().len()));
    }
    let chi = weak_chromatic_polynomial(g);
    let s = rational(sign(g.vertex_count()));
    let mut rows = (1..=kmax)
        .map(|k| {
            Ok(Row::new(
                k,
                &s * chi.evaluate(-k),
                rational(reciprocity_rhs_strong(g, k)? as i64),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    rows.push(Row::new(
        1,
        &s * chi.evaluate(-1),
        rational(count_acyclic_orientations(g) as i64),
    ));
    Ok(VerificationReport::new(g.to_string(), Theorem::StanleyGraph, rows))
}

/// `χ_G(k) = Σ φ_{G_i}(k)` over all orientations of an acyclic mixed graph.
pub fn verify_phi_sum(g: &MixedGraph, kmax: i64) -> Result<VerificationReport> {
    check_k(kmax)?;
    if !is_acyclic_mixed(g) {
        return Err(Error::NotAcyclicMixed);
    }
    let chi = weak_chromatic_polynomial(g);
    let os = orientations(g);
    let rows = (1..=kmax)
        .map(|k| {
            let total = os
                .iter()
                .map(|o| count_phi(g, o, k))
                .sum::<Result<u64>>()?;
            Ok(Row::new(k, chi.evaluate(k), rational(total as i64)))
        })
        .collect::<Result<_>>()?;
    Ok(VerificationReport::new(g.to_string(), Theorem::PhiSum, rows))
}

/// Outcome of [`exhaustive_verify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summary {
    pub theorem: Theorem,
    pub n: usize,
    pub kmax: i64,
    /// Size of the unfiltered universe (graphs, or posets for
    /// [`Theorem::StanleyOrder`]).
    pub universe: usize,
    /// Members of the universe with at least one instance to check.
    pub subjects: usize,
    /// Reports produced; a graph yields one per edge, arc or component where
    /// the identity is instantiated that way.
    pub instances: usize,
    pub passed: usize,
    /// Failing reports, sorted by subject.
    pub failures: Vec<VerificationReport>,
}

impl Summary {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

fn graph_filter(theorem: Theorem) -> GraphFilter {
    match theorem {
        Theorem::WeakReciprocity | Theorem::PhiSum | Theorem::OrientationLabeling => {
            GraphFilter::AcyclicMixed
        }
        Theorem::StanleyGraph => GraphFilter::PureGraph,
        Theorem::StrongComponent => GraphFilter::PureDigraph,
        _ => GraphFilter::All,
    }
}

fn graph_instances(theorem: Theorem, g: &MixedGraph, kmax: i64) -> Result<Vec<VerificationReport>> {
    Ok(match theorem {
        Theorem::WeakReciprocity => vec![verify_weak_reciprocity(g, kmax, false)?],
        Theorem::StrongReciprocity => vec![verify_strong_reciprocity(g, kmax)?],
        Theorem::StanleyGraph => vec![verify_stanley_graph(g, kmax)?],
        Theorem::PhiSum => vec![verify_phi_sum(g, kmax)?],
        Theorem::OrientationLabeling => vec![verify_orientation_labeling(g, kmax)?],
        Theorem::EdgeDeletionContraction => g
            .edges()
            .iter()
            .map(|e| check_edge_deletion_contraction(g, e))
            .collect::<Result<_>>()?,
        Theorem::ArcReversal => g
            .arcs()
            .iter()
            .map(|a| check_arc_reversal(g, a))
            .collect::<Result<_>>()?,
        Theorem::StrongComponent => {
            if is_strongly_connected(g) {
                vec![check_strong_component(g)?]
            } else {
                vec![]
            }
        }
        Theorem::SccContraction => strongly_connected_components(&g.arc_part())?
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| check_scc_contraction(g, &Subgraph::induced_arcs(g, c)))
            .collect::<Result<_>>()?,
        Theorem::StanleyOrder => unreachable!("posets are handled separately"),
    })
}

/// Runs one verifier over every labeled instance with `n` vertices (or
/// elements), in parallel. The summary does not depend on scheduling.
pub fn exhaustive_verify(n: usize, kmax: i64, theorem: Theorem) -> Result<Summary> {
    check_k(kmax)?;
    if n > EXHAUSTIVE_BOUND {
        return Err(Error::BoundExceeded {
            what: "exhaustive sweep",
            size: n,
            bound: EXHAUSTIVE_BOUND,
        });
    }
    let (universe, per_subject): (usize, Vec<Vec<VerificationReport>>) =
        if theorem == Theorem::StanleyOrder {
            let posets = enumerate_posets(n)?;
            let reports = posets
                .par_iter()
                .map(|p| {
                    all_labelings(p)
                        .iter()
                        .map(|w| verify_order_reciprocity(w, kmax))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            (posets.len(), reports)
        } else {
            let all: Vec<MixedGraph> = enumerate_mixed_graphs(n, GraphFilter::All)?.collect();
            let filter = graph_filter(theorem);
            let reports = all
                .par_iter()
                .filter(|g| filter.accepts(g))
                .map(|g| graph_instances(theorem, g, kmax))
                .collect::<Result<Vec<_>>>()?;
            (all.len(), reports)
        };
    let subjects = per_subject.iter().filter(|r| !r.is_empty()).count();
    let reports: Vec<VerificationReport> = per_subject.into_iter().flatten().collect();
    let instances = reports.len();
    let mut failures: Vec<VerificationReport> =
        reports.into_iter().filter(|r| !r.verdict).collect();
    failures.sort_by(|a, b| a.subject.cmp(&b.subject));
    Ok(Summary {
        theorem,
        n,
        kmax,
        universe,
        subjects,
        instances,
        passed: instances - failures.len(),
        failures,
    })
}
