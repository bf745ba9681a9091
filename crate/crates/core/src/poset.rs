//! Finite posets, ω-labelings and order polynomials.

use std::collections::{BTreeSet, HashSet};

use itertools::Itertools;

use crate::enumeration::{
    check_k, check_oracle_size, count_intercompatible, count_phi, Constraints, Relation,
};
use crate::error::{Error, Result};
use crate::graph::{
    is_acyclic_mixed, is_acyclic_orientation, orientations, MixedGraph, Orientation, Origin,
    VertexId,
};
use crate::polynomial::{rational, Polynomial};
use crate::report::{Row, Theorem, VerificationReport};

/// A partial order stored as a full relation matrix: `leq[i][j]` means
/// element `i` precedes or equals element `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    elements: Vec<VertexId>,
    leq: Vec<Vec<bool>>,
}

impl Poset {
    /// Checks reflexivity, antisymmetry and transitivity of `leq`.
    pub fn new(elements: Vec<VertexId>, leq: Vec<Vec<bool>>) -> Result<Self> {
        let n = elements.len();
        if elements.iter().collect::<HashSet<_>>().len() != n {
            return Err(Error::PosetAxiom("duplicate element".into()));
        }
        if leq.len() != n || leq.iter().any(|row| row.len() != n) {
            return Err(Error::PosetAxiom("relation matrix is not square".into()));
        }
        for i in 0..n {
            if !leq[i][i] {
                return Err(Error::PosetAxiom(format!(
                    "not reflexive at {}",
                    elements[i]
                )));
            }
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(Error::PosetAxiom(format!(
                        "not antisymmetric: {} and {} precede each other",
                        elements[i], elements[j]
                    )));
                }
                for l in 0..n {
                    if leq[i][j] && leq[j][l] && !leq[i][l] {
                        return Err(Error::PosetAxiom(format!(
                            "not transitive: {} <= {} <= {}",
                            elements[i], elements[j], elements[l]
                        )));
                    }
                }
            }
        }
        Ok(Poset { elements, leq })
    }

    /// Reflexive-transitive closure of `relations`, then the axiom checks.
    pub fn from_relations(
        elements: Vec<VertexId>,
        relations: &[(VertexId, VertexId)],
    ) -> Result<Self> {
        let n = elements.len();
        let idx = |v: &VertexId| {
            elements
                .iter()
                .position(|x| x == v)
                .ok_or_else(|| Error::PosetAxiom(format!("unknown element {v}")))
        };
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (a, b) in relations {
            leq[idx(a)?][idx(b)?] = true;
        }
        for m in 0..n {
            for i in 0..n {
                if leq[i][m] {
                    for j in 0..n {
                        if leq[m][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        Self::new(elements, leq)
    }

    pub fn antichain(elements: Vec<VertexId>) -> Result<Self> {
        Self::from_relations(elements, &[])
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[VertexId] {
        &self.elements
    }

    pub fn index_of(&self, v: &VertexId) -> Option<usize> {
        self.elements.iter().position(|x| x == v)
    }

    /// `i ⪯ j` by index.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    /// Number of elements in a longest chain.
    pub fn height(&self) -> usize {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        // elements with fewer predecessors first is a linear extension
        order.sort_by_key(|&j| (0..n).filter(|&i| self.leq[i][j]).count());
        let mut best = vec![1usize; n];
        for (pos, &j) in order.iter().enumerate() {
            for &i in &order[..pos] {
                if self.leq[i][j] {
                    best[j] = best[j].max(best[i] + 1);
                }
            }
        }
        best.into_iter().max().unwrap_or(0)
    }
}

/// A bijection from the poset's elements onto `1..=n`, stored by element
/// index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OmegaLabeling {
    poset: Poset,
    labels: Vec<usize>,
}

impl OmegaLabeling {
    pub fn new(poset: Poset, labels: Vec<usize>) -> Result<Self> {
        let n = poset.len();
        if labels.len() != n {
            return Err(Error::InvalidLabeling(format!(
                "{} labels for {} elements",
                labels.len(),
                n
            )));
        }
        let distinct: BTreeSet<usize> = labels.iter().copied().collect();
        if distinct.len() != n || labels.iter().any(|&l| l == 0 || l > n) {
            return Err(Error::InvalidLabeling(format!(
                "labels must be a permutation of 1..={n}"
            )));
        }
        Ok(OmegaLabeling { poset, labels })
    }

    /// Labels given per element token; every element must be labeled once.
    pub fn from_pairs(poset: Poset, pairs: &[(VertexId, usize)]) -> Result<Self> {
        let mut labels = vec![None; poset.len()];
        for (v, l) in pairs {
            let i = poset
                .index_of(v)
                .ok_or_else(|| Error::InvalidLabeling(format!("unknown element {v}")))?;
            if labels[i].replace(*l).is_some() {
                return Err(Error::InvalidLabeling(format!("{v} labeled twice")));
            }
        }
        let labels = labels
            .into_iter()
            .enumerate()
            .map(|(i, l)| {
                l.ok_or_else(|| {
                    Error::InvalidLabeling(format!("{} has no label", poset.elements()[i]))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(poset, labels)
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label_of(&self, v: &VertexId) -> Option<usize> {
        self.poset.index_of(v).map(|i| self.labels[i])
    }

    /// `n + 1 - ω(v)`.
    pub fn complementary(&self) -> OmegaLabeling {
        let n = self.labels.len();
        OmegaLabeling {
            poset: self.poset.clone(),
            labels: self.labels.iter().map(|l| n + 1 - l).collect(),
        }
    }

    /// Respects the order: `u ⪯ v` implies `ω(u) <= ω(v)`.
    pub fn is_natural(&self) -> bool {
        let n = self.labels.len();
        (0..n).all(|i| (0..n).all(|j| !self.poset.leq(i, j) || self.labels[i] <= self.labels[j]))
    }

    fn constraints(&self) -> Constraints {
        let n = self.poset.len();
        let mut cs = Constraints::new(n);
        for i in 0..n {
            for j in 0..n {
                if i != j && self.poset.leq(i, j) {
                    let rel = if self.labels[i] < self.labels[j] {
                        Relation::Le
                    } else {
                        Relation::Lt
                    };
                    cs.push(i, j, rel);
                }
            }
        }
        cs
    }
}

/// `Ω_{P,ω}(k)` by direct count: maps `x: P -> [k]` with `x_u <= x_v` when
/// `u ⪯ v` and `ω(u) < ω(v)`, and `x_u < x_v` when `u ⪯ v` and
/// `ω(u) > ω(v)`.
pub fn order_value(w: &OmegaLabeling, k: i64) -> Result<u64> {
    let k = check_k(k)?;
    check_oracle_size(w.poset.len())?;
    Ok(w.constraints().count(k))
}

/// `Ω_{P,ω}(k)` for `k = 1..=kmax`, level by level.
///
/// The sets `{v : x_v <= c}` of a counted map form a chain of order ideals
/// `I_1 ⊆ ... ⊆ I_k = P`, and a level `I_c \ I_{c-1}` may not contain a pair
/// `u ≺ v` with `ω(u) > ω(v)`. With `N_1(I) = [I is a valid level]` and
/// `N_{c+1}(I) = Σ N_c(J)` over ideals `J ⊆ I` with `I \ J` a valid level,
/// `Ω(k) = N_k(P)`.
fn order_counts(w: &OmegaLabeling, kmax: usize) -> Result<Vec<u64>> {
    const BOUND: usize = 63;
    let p = &w.poset;
    let n = p.len();
    if n > BOUND {
        return Err(Error::BoundExceeded {
            what: "poset for level counting",
            size: n,
            bound: BOUND,
        });
    }
    let mut preds = vec![0u64; n];
    let mut strict = vec![0u64; n];
    for u in 0..n {
        for v in 0..n {
            if u != v && p.leq(u, v) {
                preds[v] |= 1 << u;
                if w.labels[u] > w.labels[v] {
                    strict[v] |= 1 << u;
                }
            }
        }
    }
    let mut ideals = vec![0u64];
    let mut next = 0;
    while next < ideals.len() {
        let ideal = ideals[next];
        next += 1;
        for v in 0..n {
            let grown = ideal | 1 << v;
            if grown != ideal && preds[v] & !ideal == 0 && !ideals.contains(&grown) {
                ideals.push(grown);
            }
        }
    }
    let valid = |level: u64| (0..n).all(|v| level >> v & 1 == 0 || strict[v] & level == 0);
    // steps[i]: ideals J ⊆ ideals[i] whose difference is a valid level
    let steps: Vec<Vec<usize>> = ideals
        .iter()
        .map(|&big| {
            (0..ideals.len())
                .filter(|&j| ideals[j] & !big == 0 && valid(big & !ideals[j]))
                .collect()
        })
        .collect();
    let full = ideals.iter().position(|&i| i.count_ones() as usize == n).expect("P is an ideal");
    let mut chains: Vec<u64> = ideals.iter().map(|&i| valid(i) as u64).collect();
    let mut counts = Vec::with_capacity(kmax);
    for k in 1..=kmax {
        if k > 1 {
            chains = steps
                .iter()
                .map(|js| js.iter().map(|&j| chains[j]).sum())
                .collect();
        }
        counts.push(chains[full]);
    }
    Ok(counts)
}

/// Level counts on `k = 1..=n+1`, interpolated, with a resample at `n+2`.
pub fn order_polynomial(w: &OmegaLabeling) -> Result<Polynomial> {
    let n = w.poset.len();
    let counts = order_counts(w, n + 2)?;
    Polynomial::from_samples(n, |k| Ok(rational(counts[k as usize - 1] as i64)))
}

/// Repeatedly labels the first remaining minimal element in input order.
pub fn natural_labeling(p: &Poset) -> OmegaLabeling {
    let n = p.len();
    let mut labels = vec![0; n];
    let mut removed = vec![false; n];
    for next in 1..=n {
        let v = (0..n)
            .find(|&j| !removed[j] && (0..n).all(|i| i == j || removed[i] || !p.leq(i, j)))
            .expect("a finite poset has a minimal element");
        removed[v] = true;
        labels[v] = next;
    }
    OmegaLabeling {
        poset: p.clone(),
        labels,
    }
}

/// Elements are the base graph's vertices; `u ⪯ v` for each directed pair
/// `u -> v`, closed reflexively and transitively.
pub fn poset_from_orientation(o: &Orientation<'_>) -> Result<Poset> {
    if !is_acyclic_orientation(o) {
        return Err(Error::CyclicOrientation);
    }
    let pairs: Vec<(VertexId, VertexId)> = o
        .directed_pairs()
        .into_iter()
        .map(|p| (p.tail, p.head))
        .collect();
    Poset::from_relations(o.base().vertices().to_vec(), &pairs)
}

/// Labels the poset of `o` by peeling sources off the orientation obtained
/// from `o` by reversing its edge-born pairs (arcs keep their direction).
///
/// A source has every remaining incident pair pointing away from it; ties go
/// to the smallest token. The result satisfies `ω(u) < ω(v)` for every arc
/// `u -> v` and `ω(u) > ω(v)` for every edge oriented `u -> v` in `o`.
pub fn source_peeling_labeling(g: &MixedGraph, o: &Orientation<'_>) -> Result<OmegaLabeling> {
    if o.base() != g {
        return Err(Error::OrientationMismatch);
    }
    let poset = poset_from_orientation(o)?;
    let n = g.vertex_count();
    let reversed: Vec<(usize, usize)> = o
        .indexed_pairs()
        .into_iter()
        .map(|(t, h, origin)| match origin {
            Origin::Arc => (t, h),
            Origin::Edge => (h, t),
        })
        .collect();
    let mut removed = vec![false; n];
    let mut labels = vec![0; n];
    for next in 1..=n {
        let source = (0..n)
            .filter(|&v| !removed[v])
            .filter(|&v| !reversed.iter().any(|&(t, h)| h == v && !removed[t]))
            .min_by(|&a, &b| g.vertices()[a].cmp(&g.vertices()[b]))
            .ok_or(Error::CycleDetected)?;
        removed[source] = true;
        labels[source] = next;
    }
    OmegaLabeling::new(poset, labels)
}

/// For every orientation and `k = 1..=kmax`, two rows: `Ω_ω(k)` against
/// `φ(k)`, then `Ω_ω̄(k)` against the intercompatible count.
pub fn verify_orientation_labeling(g: &MixedGraph, kmax: i64) -> Result<VerificationReport> {
    check_k(kmax)?;
    if !is_acyclic_mixed(g) {
        return Err(Error::NotAcyclicMixed);
    }
    let mut rows = Vec::new();
    for o in orientations(g) {
        let w = source_peeling_labeling(g, &o)?;
        let omega = order_polynomial(&w)?;
        let omega_bar = order_polynomial(&w.complementary())?;
        for k in 1..=kmax {
            rows.push(Row::new(
                k,
                omega.evaluate(k),
                rational(count_phi(g, &o, k)? as i64),
            ));
            rows.push(Row::new(
                k,
                omega_bar.evaluate(k),
                rational(count_intercompatible(g, &o, k)? as i64),
            ));
        }
    }
    Ok(VerificationReport::new(
        g.to_string(),
        Theorem::OrientationLabeling,
        rows,
    ))
}

/// Rows compare `Ω_ω(-k)` with `(-1)^n Ω_ω̄(k)`.
pub fn verify_order_reciprocity(w: &OmegaLabeling, kmax: i64) -> Result<VerificationReport> {
    check_k(kmax)?;
    let omega = order_polynomial(w)?;
    let omega_bar = order_polynomial(&w.complementary())?;
    let sign = if w.poset.len().is_multiple_of(2) { 1 } else { -1 };
    let rows = (1..=kmax)
        .map(|k| Row::new(k, omega.evaluate(-k), omega_bar.evaluate(k) * rational(sign)))
        .collect();
    Ok(VerificationReport::new(
        describe_labeling(w),
        Theorem::StanleyOrder,
        rows,
    ))
}

pub fn describe_labeling(w: &OmegaLabeling) -> String {
    let p = &w.poset;
    let n = p.len();
    let rels = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j && p.leq(i, j))
        .map(|(i, j)| format!("{}<={}", p.elements[i], p.elements[j]))
        .join(", ");
    let labels = (0..n)
        .map(|i| format!("{}:{}", p.elements[i], w.labels[i]))
        .join(", ");
    format!("P={{{rels}}} ω={{{labels}}}")
}

/// All labeled posets on `p1..pn`, as closures of labeled DAGs with
/// duplicates removed.
pub fn enumerate_posets(n: usize) -> Result<Vec<Poset>> {
    const BOUND: usize = 5;
    if n > BOUND {
        return Err(Error::BoundExceeded {
            what: "enumerated poset",
            size: n,
            bound: BOUND,
        });
    }
    let names: Vec<VertexId> = (1..=n).map(|i| VertexId::new(format!("p{i}"))).collect();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    // one of three symbols per pair (none, i->j, j->i); cyclic choices fail
    // the antisymmetry check after closure and are skipped
    for code in 0..3u64.pow(pairs.len() as u32) {
        let mut c = code;
        let mut rels = Vec::new();
        for &(i, j) in &pairs {
            match c % 3 {
                1 => rels.push((names[i].clone(), names[j].clone())),
                2 => rels.push((names[j].clone(), names[i].clone())),
                _ => {}
            }
            c /= 3;
        }
        if let Ok(p) = Poset::from_relations(names.clone(), &rels) {
            if seen.insert(p.leq.clone()) {
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// All `n!` labelings of `p`.
pub fn all_labelings(p: &Poset) -> Vec<OmegaLabeling> {
    let n = p.len();
    (1..=n)
        .permutations(n)
        .map(|labels| OmegaLabeling {
            poset: p.clone(),
            labels,
        })
        .collect()
}
