use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use super::{enumerate_trivalent, AlgebraError, Bound, GraphVector};
use crate::graph::{CanonicalGraph, Presentation};
use crate::rational::Q;

/// IHX relations in one degree together with a reduced row-echelon basis.
/// Each basis row has coefficient 1 on its pivot (its largest graph) and 0
/// on every other row's pivot.
#[derive(Clone, Debug)]
pub struct RelationSet {
    k: usize,
    relations: Vec<GraphVector>,
    rows: Vec<(CanonicalGraph, GraphVector)>,
}

impl RelationSet {
    pub fn from_relations(k: usize, relations: Vec<GraphVector>) -> Self {
        let mut rows: Vec<(CanonicalGraph, GraphVector)> = Vec::new();
        for r in &relations {
            let v = reduce_rows(&rows, r.clone());
            let Some((pivot, c)) = v.terms().next_back().map(|(g, c)| (g.clone(), c.clone())) else {
                continue;
            };
            let v = v.scale(&(Q::one() / c));
            for (_, row) in rows.iter_mut() {
                let c = row.coeff(&pivot);
                if !c.is_zero() {
                    *row = &*row - &v.scale(&c);
                }
            }
            rows.push((pivot, v));
        }
        rows.sort_by(|a, b| a.0.cmp(&b.0));
        Self { k, relations, rows }
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    /// The generating relations, deduplicated, each scaled so that its
    /// largest graph has coefficient ±1.
    pub fn relations(&self) -> &[GraphVector] {
        &self.relations
    }

    pub fn basis(&self) -> impl Iterator<Item = &GraphVector> {
        self.rows.iter().map(|(_, r)| r)
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Normal form of `v` modulo the relation span.
    pub fn reduce(&self, v: &GraphVector) -> Result<GraphVector, AlgebraError> {
        let n = 2 * self.k;
        if let Some(bad) = v.terms().find(|(g, _)| !g.is_trivalent() || g.vertex_count() != n) {
            return Err(AlgebraError::DegreeMismatch {
                expected: n,
                found: format!("{} vertices, {} univalent", bad.0.vertex_count(), bad.0.univalent_count()),
            });
        }
        Ok(reduce_rows(&self.rows, v.clone()))
    }
}

fn reduce_rows(rows: &[(CanonicalGraph, GraphVector)], mut v: GraphVector) -> GraphVector {
    for (pivot, row) in rows {
        let c = v.coeff(pivot);
        if !c.is_zero() {
            v = &v - &row.scale(&c);
        }
    }
    v
}

/// Contracts every edge of every trivalent graph on `2k` vertices and
/// records the sum of the three expansions of the resulting 4-valent vertex.
///
/// With reference orientations the contracted vertex `v` sits at the slot of
/// the lower endpoint `x`. An expansion puts `x'` at that slot and `y'`
/// immediately after it, joins them by the edge `x' → y'`, and otherwise
/// keeps every edge direction. All three terms then carry coefficient +1.
pub fn ihx_relations(k: usize, bound: &Bound) -> Result<RelationSet, AlgebraError> {
    bound.check(k)?;
    let mut seen = BTreeSet::new();
    let mut relations = Vec::new();
    for g in enumerate_trivalent(k, bound)? {
        let p = g.graph.reference();
        for e in 0..p.edges().len() {
            let r = expansions(&p, e);
            let Some(last) = r.terms().next_back().map(|(_, c)| c.clone()) else {
                continue;
            };
            let r = r.scale(&(Q::one() / last.abs()));
            if seen.insert(normalized_key(&r)) {
                relations.push(r);
            }
        }
    }
    Ok(RelationSet::from_relations(k, relations))
}

// Relations r and −r are the same relation.
fn normalized_key(r: &GraphVector) -> Vec<(CanonicalGraph, Q)> {
    let flip = r.terms().next_back().is_some_and(|(_, c)| c < &Q::zero());
    r.terms().map(|(g, c)| (g.clone(), if flip { -c.clone() } else { c.clone() })).collect()
}

fn expansions(p: &Presentation, e: usize) -> GraphVector {
    let (x, y) = p.edges()[e];
    let n = p.vertex_count();
    let mut index = vec![0; n];
    let mut next = 0;
    let (mut xp, mut yp) = (0, 0);
    for (u, slot) in index.iter_mut().enumerate() {
        if u == y {
            continue;
        }
        if u == x {
            xp = next;
            yp = next + 1;
            next += 2;
        } else {
            *slot = next;
            next += 1;
        }
    }
    // Flags at the merged vertex: (edge, end) for every other edge end at x or y.
    let mut flags = Vec::with_capacity(4);
    for (f, &(t, h)) in p.edges().iter().enumerate() {
        if f == e {
            continue;
        }
        if t == x || t == y {
            flags.push((f, 0));
        }
        if h == x || h == y {
            flags.push((f, 1));
        }
    }
    debug_assert_eq!(flags.len(), 4);
    let mut out = GraphVector::zero();
    for partner in 1..4 {
        let on_x = |flag: (usize, u8)| flag == flags[0] || flag == flags[partner];
        let mut edges = Vec::with_capacity(p.edges().len());
        let mut degenerate = false;
        for (f, &(t, h)) in p.edges().iter().enumerate() {
            if f == e {
                continue;
            }
            let end = |v: usize, side: u8| {
                if v == x || v == y {
                    if on_x((f, side)) {
                        xp
                    } else {
                        yp
                    }
                } else {
                    index[v]
                }
            };
            let (a, b) = (end(t, 0), end(h, 1));
            degenerate |= a == b;
            edges.push((a, b));
        }
        if degenerate {
            continue;
        }
        edges.push((xp, yp));
        let term = Presentation::from_parts_unchecked(vec![3; n], edges);
        out.add_presentation(&term, Q::one());
    }
    out
}

/// `#(nonzero canonical graphs) − rank(relations)` in degree `k`.
pub fn dimension(k: usize, bound: &Bound) -> Result<usize, AlgebraError> {
    bound.check(k)?;
    let nonzero = enumerate_trivalent(k, bound)?.iter().filter(|g| !g.is_zero()).count();
    if k == 0 {
        return Ok(nonzero);
    }
    Ok(nonzero - ihx_relations(k, bound)?.rank())
}
