//! Weak chromatic polynomials of acyclic digraphs via order ideals.
//!
//! A weak coloring `c: V -> [k]` of an acyclic digraph is an order-preserving
//! map on the poset its arcs generate. Such maps correspond to multichains
//! `I_1 ⊆ I_2 ⊆ ... ⊆ I_{k-1}` of order ideals, where `I_j = {v : c(v) <= j}`.
//! With `N_1(I) = 1` and `N_{j+1}(I) = Σ_{J ⊆ I} N_j(J)` over ideals `J`, the
//! number of colorings is `N_k(V)`.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;

use crate::graph::MixedGraph;
use crate::polynomial::Polynomial;

/// Down-closed vertex sets, stored as bitmasks, with an index lookup.
struct IdealLattice {
    ideals: Vec<u64>,
    index: HashMap<u64, usize>,
    /// Vertices in a topological order of the arcs.
    topo: Vec<usize>,
}

impl IdealLattice {
    fn new(n: usize, preds: &[u64], topo: Vec<usize>) -> Self {
        let mut ideals = vec![0u64];
        let mut index = HashMap::from([(0u64, 0usize)]);
        let mut next = 0;
        while next < ideals.len() {
            let ideal = ideals[next];
            next += 1;
            for v in 0..n {
                let bit = 1u64 << v;
                if ideal & bit == 0 && preds[v] & !ideal == 0 {
                    let grown = ideal | bit;
                    if let std::collections::hash_map::Entry::Vacant(e) = index.entry(grown) {
                        e.insert(ideals.len());
                        ideals.push(grown);
                    }
                }
            }
        }
        IdealLattice {
            ideals,
            index,
            topo,
        }
    }

    /// `F(I) = Σ_{J ⊆ I} f(J)` over ideals `J`.
    ///
    /// Subset zeta transform restricted to the ideal family. Processing
    /// vertices in topological order makes every skipped set (one that is not
    /// an ideal) contribute zero, so only ideals need storage.
    fn zeta(&self, f: &mut [BigUint]) {
        for &x in &self.topo {
            let bit = 1u64 << x;
            for (i, &ideal) in self.ideals.iter().enumerate() {
                if ideal & bit != 0 {
                    if let Some(&j) = self.index.get(&(ideal & !bit)) {
                        let add = f[j].clone();
                        f[i] += add;
                    }
                }
            }
        }
    }
}

fn topological_order(n: usize, arcs: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut indeg = vec![0usize; n];
    let mut out = vec![Vec::new(); n];
    for &(t, h) in arcs {
        out[t].push(h);
        indeg[h] += 1;
    }
    let mut ready: Vec<usize> = (0..n).rev().filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = ready.pop() {
        order.push(v);
        for &h in &out[v] {
            indeg[h] -= 1;
            if indeg[h] == 0 {
                ready.push(h);
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// Number of weak colorings of an acyclic digraph for each `k` in `1..=kmax`.
///
/// Panics if `g` has edges or a directed cycle, or more than 64 vertices.
pub(crate) fn multichain_counts(g: &MixedGraph, kmax: usize) -> Vec<BigUint> {
    assert!(g.edges().is_empty(), "multichain counting needs an edgeless graph");
    let ig = g.indexed();
    let n = ig.n;
    assert!(n <= 64, "too many vertices for bitmask ideals ({n})");
    let topo = topological_order(n, &ig.arcs).expect("acyclic digraph");
    let mut preds = vec![0u64; n];
    for &(t, h) in &ig.arcs {
        preds[h] |= 1 << t;
    }
    let lattice = IdealLattice::new(n, &preds, topo);
    let full = lattice.index[&if n == 64 { u64::MAX } else { (1u64 << n) - 1 }];
    let mut chains = vec![BigUint::one(); lattice.ideals.len()];
    let mut counts = Vec::with_capacity(kmax);
    for k in 1..=kmax {
        if k > 1 {
            lattice.zeta(&mut chains);
        }
        counts.push(chains[full].clone());
    }
    counts
}

/// Interpolates the multichain counts on `k = 1..=n+1` and confirms the
/// result at `k = n+2`.
pub(crate) fn acyclic_digraph_polynomial(g: &MixedGraph) -> Polynomial {
    let n = g.vertex_count();
    let counts = multichain_counts(g, n + 2);
    Polynomial::from_samples(n, |k| {
        let c = &counts[k as usize - 1];
        Ok(BigRational::from_integer(c.clone().into()))
    })
    .unwrap_or_else(|e| panic!("multichain counts of {g} are not polynomial: {e}"))
}
