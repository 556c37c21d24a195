//! Formal ℚ-linear combinations of oriented graphs, their product and
//! coproduct, and reduction modulo the IHX relation.

mod enumerate;
mod ihx;
mod text;

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::{CanonicalGraph, GraphError, OrientedGraph, Presentation, Sign};
use crate::rational::{permutation_parity, Q};

pub use enumerate::enumerate_trivalent;
pub use ihx::{dimension, ihx_relations, RelationSet};
pub use text::{parse_graph_vector, parse_graph_vectors, write_graph_vectors};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("BoundExceeded: degree {k} is above the configured bound {max_k}")]
    BoundExceeded { k: usize, max_k: usize },
    #[error("DegreeMismatch: expected trivalent graphs with {expected} vertices, found {found}")]
    DegreeMismatch { expected: usize, found: String },
    #[error("OddLegCount: a graph with {0} univalent vertices cannot be paired up")]
    OddLegCount(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Upper bound on the degree `k` (graphs on `2k` trivalent vertices) for
/// enumeration-backed operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bound {
    pub max_k: usize,
}

impl Default for Bound {
    fn default() -> Self {
        Self { max_k: 3 }
    }
}

impl Bound {
    pub fn new(max_k: usize) -> Self {
        Self { max_k }
    }

    pub fn check(&self, k: usize) -> Result<(), AlgebraError> {
        if k > self.max_k {
            Err(AlgebraError::BoundExceeded { k, max_k: self.max_k })
        } else {
            Ok(())
        }
    }
}

/// A finite ℚ-combination of canonical oriented graphs. Coefficients refer
/// to the reference orientation of each canonical graph; zero coefficients
/// and AS-zero graphs are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GraphVector {
    terms: BTreeMap<CanonicalGraph, Q>,
}

impl GraphVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The empty graph with coefficient 1.
    pub fn one() -> Self {
        Self::from_oriented(&OrientedGraph::empty())
    }

    pub fn from_oriented(g: &OrientedGraph) -> Self {
        let mut v = Self::zero();
        v.add_oriented(g, Q::one());
        v
    }

    pub fn from_presentation(p: &Presentation) -> Self {
        Self::from_oriented(&p.canonical())
    }

    /// Adds `coeff · g`; a presentation with sign −1 negates the coefficient
    /// and an AS-zero graph contributes nothing.
    pub fn add_oriented(&mut self, g: &OrientedGraph, coeff: Q) {
        if let Some(s) = g.sign.sign() {
            let c = if s == Sign::Minus { -coeff } else { coeff };
            self.add_term(g.graph.clone(), c);
        }
    }

    pub fn add_presentation(&mut self, p: &Presentation, coeff: Q) {
        self.add_oriented(&p.canonical(), coeff);
    }

    pub(crate) fn add_term(&mut self, g: CanonicalGraph, coeff: Q) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(g);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, g: &CanonicalGraph) -> Q {
        self.terms.get(g).cloned().unwrap_or_else(Q::zero)
    }

    /// Terms in canonical-graph order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&CanonicalGraph, &Q)> {
        self.terms.iter()
    }

    pub fn scale(&self, q: &Q) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(g, c)| (g.clone(), c * q)).collect() }
    }

    /// Bilinear extension of disjoint union.
    pub fn product(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let u = a.reference().disjoint_union(&b.reference()).canonical();
                out.add_oriented(&u, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.product(self))
    }

    /// Drops every graph with a univalent vertex.
    pub fn trivalent_part(&self) -> Self {
        self.filter(|g| g.is_trivalent())
    }

    pub fn filter(&self, keep: impl Fn(&CanonicalGraph) -> bool) -> Self {
        Self { terms: self.terms.iter().filter(|(g, _)| keep(g)).map(|(g, c)| (g.clone(), c.clone())).collect() }
    }

    /// Sum over ordered splittings of the labelled connected components of
    /// every graph into two sub-unions (either side may be empty).
    pub fn coproduct(&self) -> CoproductTerms {
        let mut out = CoproductTerms::default();
        for (g, c) in &self.terms {
            let comps = g.components();
            let n = g.vertex_count();
            let reference = g.reference();
            for mask in 0u64..(1u64 << comps.len()) {
                let mut left = Vec::new();
                let mut right = Vec::new();
                for (i, comp) in comps.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        left.extend_from_slice(comp);
                    } else {
                        right.extend_from_slice(comp);
                    }
                }
                left.sort_unstable();
                right.sort_unstable();
                let mut perm = vec![0; n];
                for (pos, &v) in left.iter().chain(&right).enumerate() {
                    perm[v] = pos;
                }
                let split = Sign::from_parity(permutation_parity(&perm));
                let a = reference.restrict(&left).canonical();
                let b = reference.restrict(&right).canonical();
                if let (Some(sa), Some(sb)) = (a.sign.sign(), b.sign.sign()) {
                    let coeff = if split * sa * sb == Sign::Minus { -c.clone() } else { c.clone() };
                    out.add((a.graph, b.graph), coeff);
                }
            }
        }
        out
    }

    /// `Some(n)` when every term has `n` trivalent vertices and no legs.
    pub fn trivalent_vertex_count(&self) -> Option<usize> {
        let mut counts = self.terms.keys().map(|g| g.is_trivalent().then(|| g.vertex_count()));
        let first = counts.next()??;
        counts.all(|c| c == Some(first)).then_some(first)
    }
}

impl Add for &GraphVector {
    type Output = GraphVector;
    fn add(self, rhs: &GraphVector) -> GraphVector {
        let mut out = self.clone();
        for (g, c) in &rhs.terms {
            out.add_term(g.clone(), c.clone());
        }
        out
    }
}

impl Sub for &GraphVector {
    type Output = GraphVector;
    fn sub(self, rhs: &GraphVector) -> GraphVector {
        self + &(-rhs)
    }
}

impl Neg for &GraphVector {
    type Output = GraphVector;
    fn neg(self) -> GraphVector {
        self.scale(&-Q::one())
    }
}

impl FromIterator<(OrientedGraph, Q)> for GraphVector {
    fn from_iter<I: IntoIterator<Item = (OrientedGraph, Q)>>(iter: I) -> Self {
        let mut v = Self::zero();
        for (g, c) in iter {
            v.add_oriented(&g, c);
        }
        v
    }
}

/// Single graph combination helper: `coeff · g` for canonical oriented `g`.
pub fn term(g: &OrientedGraph, coeff: Q) -> GraphVector {
    let mut v = GraphVector::zero();
    v.add_oriented(g, coeff);
    v
}

/// Element of `GraphVector ⊗ GraphVector`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoproductTerms {
    terms: BTreeMap<(CanonicalGraph, CanonicalGraph), Q>,
}

impl CoproductTerms {
    pub fn add(&mut self, key: (CanonicalGraph, CanonicalGraph), coeff: Q) {
        if coeff.is_zero() {
            return;
        }
        let c = self.terms.entry(key.clone()).or_insert_with(Q::zero);
        *c += coeff;
        if c.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coeff(&self, left: &CanonicalGraph, right: &CanonicalGraph) -> Q {
        self.terms.get(&(left.clone(), right.clone())).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(CanonicalGraph, CanonicalGraph), &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
    pub fn product(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &other.terms {
                let left = a.reference().disjoint_union(&c.reference()).canonical();
                let right = b.reference().disjoint_union(&d.reference()).canonical();
                if let (Some(sl), Some(sr)) = (left.sign.sign(), right.sign.sign()) {
                    let coeff = x * y;
                    let coeff = if sl * sr == Sign::Minus { -coeff } else { coeff };
                    out.add((left.graph, right.graph), coeff);
                }
            }
        }
        out
    }
}
