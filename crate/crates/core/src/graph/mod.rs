//! Oriented unitrivalent multigraphs.
//!
//! An orientation is held either as a [`VertexEdgeOrder`] (an ordering of all
//! vertices plus a direction on every edge, with `sgn π = (-1)^n` equivalence)
//! or as a [`VertexCyclic`] (a cyclic order of the three flags at every
//! trivalent vertex). Univalent vertices own a single flag and carry no data.
//! Internally everything runs on [`Presentation`]s: graphs whose vertex order
//! is the index order and whose edges are stored `tail → head`.

mod canon;
mod orient;
mod text;
mod weld;

use std::fmt;
use std::ops::{Mul, Neg};

use thiserror::Error;

pub use canon::{disjoint_union, is_isomorphic};
pub use orient::{convert_orientation, cyclic_to_vertex_edge, vertex_edge_to_cyclic};
pub use text::{parse_graph, write_graph, write_oriented, ParseError};
pub(crate) use text::{parse_graph_tokens, Tokens};
pub(crate) use weld::Gluing;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("SelfLoop: edge {edge} joins vertex {vertex} to itself")]
    SelfLoop { edge: usize, vertex: usize },
    #[error("ValenceMismatch: vertex {vertex} declared valence {declared} but has {found} edge ends")]
    ValenceMismatch { vertex: usize, declared: u8, found: usize },
    #[error("BadIndex: vertex index {index} out of range (vertex count {count})")]
    BadIndex { index: usize, count: usize },
    #[error("BadValence: vertex {vertex} has valence {valence}, expected 1 or 3")]
    BadValence { vertex: usize, valence: u8 },
    #[error("OddWheel: wheels need an even positive number of spokes, got {0}")]
    OddWheel(usize),
    #[error("InvalidOrientation: {0}")]
    InvalidOrientation(String),
    #[error("VertexFreeLoop: gluing closed up a component with no vertices")]
    VertexFreeLoop,
}

impl GraphError {
    /// Short machine-readable name of the error variant.
    pub fn name(&self) -> &'static str {
        match self {
            GraphError::SelfLoop { .. } => "SelfLoop",
            GraphError::ValenceMismatch { .. } => "ValenceMismatch",
            GraphError::BadIndex { .. } => "BadIndex",
            GraphError::BadValence { .. } => "BadValence",
            GraphError::OddWheel(_) => "OddWheel",
            GraphError::InvalidOrientation(_) => "InvalidOrientation",
            GraphError::VertexFreeLoop => "VertexFreeLoop",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Self {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self != rhs)
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// Sign of an oriented graph relative to its canonical reference orientation.
/// `Zero` marks graphs admitting an orientation-reversing automorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SignState {
    Plus,
    Minus,
    Zero,
}

impl SignState {
    pub fn sign(self) -> Option<Sign> {
        match self {
            SignState::Plus => Some(Sign::Plus),
            SignState::Minus => Some(Sign::Minus),
            SignState::Zero => None,
        }
    }

    pub fn to_i64(self) -> i64 {
        self.sign().map_or(0, Sign::to_i64)
    }
}

impl From<Sign> for SignState {
    fn from(s: Sign) -> Self {
        match s {
            Sign::Plus => SignState::Plus,
            Sign::Minus => SignState::Minus,
        }
    }
}

impl Mul<Sign> for SignState {
    type Output = SignState;
    fn mul(self, rhs: Sign) -> SignState {
        self.sign().map_or(SignState::Zero, |s| (s * rhs).into())
    }
}

impl fmt::Display for SignState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign() {
            Some(s) => s.fmt(f),
            None => f.write_str("0"),
        }
    }
}

/// One end of an edge: `vertex = edges[edge][end]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flag {
    pub edge: usize,
    pub end: u8,
}

impl Flag {
    pub fn new(edge: usize, end: u8) -> Self {
        Self { edge, end }
    }
}

/// A multigraph whose vertices have valence 1 or 3 and which has no
/// self-loops.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnitrivalentGraph {
    valences: Vec<u8>,
    edges: Vec<[usize; 2]>,
}

/// Validates and builds a graph. Parallel edges are kept.
pub fn make_graph(
    vertex_count: usize,
    valences: &[u8],
    edges: &[(usize, usize)],
) -> Result<UnitrivalentGraph, GraphError> {
    if valences.len() != vertex_count {
        return Err(GraphError::BadIndex { index: valences.len(), count: vertex_count });
    }
    for (vertex, &valence) in valences.iter().enumerate() {
        if valence != 1 && valence != 3 {
            return Err(GraphError::BadValence { vertex, valence });
        }
    }
    let mut incidence = vec![0usize; vertex_count];
    for (edge, &(a, b)) in edges.iter().enumerate() {
        for v in [a, b] {
            if v >= vertex_count {
                return Err(GraphError::BadIndex { index: v, count: vertex_count });
            }
        }
        if a == b {
            return Err(GraphError::SelfLoop { edge, vertex: a });
        }
        incidence[a] += 1;
        incidence[b] += 1;
    }
    for (vertex, (&declared, &found)) in valences.iter().zip(&incidence).enumerate() {
        if declared as usize != found {
            return Err(GraphError::ValenceMismatch { vertex, declared, found });
        }
    }
    Ok(UnitrivalentGraph { valences: valences.to_vec(), edges: edges.iter().map(|&(a, b)| [a, b]).collect() })
}

impl UnitrivalentGraph {
    pub fn empty() -> Self {
        Self { valences: Vec::new(), edges: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.valences.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn valences(&self) -> &[u8] {
        &self.valences
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn flag_vertex(&self, flag: Flag) -> usize {
        self.edges[flag.edge][flag.end as usize]
    }

    /// Flags at every vertex, each list sorted by `(edge, end)`.
    pub fn flags_by_vertex(&self) -> Vec<Vec<Flag>> {
        let mut out = vec![Vec::new(); self.vertex_count()];
        for (e, &[a, b]) in self.edges.iter().enumerate() {
            out[a].push(Flag::new(e, 0));
            out[b].push(Flag::new(e, 1));
        }
        out
    }

    pub fn univalent_count(&self) -> usize {
        self.valences.iter().filter(|&&v| v == 1).count()
    }

    pub fn is_trivalent(&self) -> bool {
        self.univalent_count() == 0
    }
}

/// Orientation as a vertex order plus edge directions. Edge `e = [a, b]` runs
/// `a → b` unless `reversed[e]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexEdgeOrder {
    pub vertex_order: Vec<usize>,
    pub reversed: Vec<bool>,
}

impl VertexEdgeOrder {
    /// Identity vertex order, every edge directed from its lower to its higher
    /// endpoint.
    pub fn reference(g: &UnitrivalentGraph) -> Self {
        Self { vertex_order: (0..g.vertex_count()).collect(), reversed: g.edges.iter().map(|&[a, b]| a > b).collect() }
    }

    /// Identity vertex order, every edge directed as stored.
    pub fn as_stored(g: &UnitrivalentGraph) -> Self {
        Self { vertex_order: (0..g.vertex_count()).collect(), reversed: vec![false; g.edge_count()] }
    }
}

/// Orientation as cyclic flag orders at the trivalent vertices; `None` at
/// univalent vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexCyclic {
    pub cycles: Vec<Option<[Flag; 3]>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    VertexEdge(VertexEdgeOrder),
    Cyclic(VertexCyclic),
}

/// An oriented graph with identity vertex order and every edge stored
/// `tail → head`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    valences: Vec<u8>,
    edges: Vec<(usize, usize)>,
}

impl Presentation {
    pub fn new(valences: Vec<u8>, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let g = make_graph(valences.len(), &valences, &edges)?;
        Ok(Self::from_graph_as_stored(&g))
    }

    pub(crate) fn from_parts_unchecked(valences: Vec<u8>, edges: Vec<(usize, usize)>) -> Self {
        Self { valences, edges }
    }

    fn from_graph_as_stored(g: &UnitrivalentGraph) -> Self {
        Self { valences: g.valences.clone(), edges: g.edges.iter().map(|&[a, b]| (a, b)).collect() }
    }

    /// Relabels vertices by their position in the order and applies the edge
    /// directions.
    pub fn from_oriented(g: &UnitrivalentGraph, o: &VertexEdgeOrder) -> Result<Self, GraphError> {
        orient::validate_vertex_edge(g, o)?;
        let mut position = vec![0; g.vertex_count()];
        for (p, &v) in o.vertex_order.iter().enumerate() {
            position[v] = p;
        }
        let mut valences = vec![0; g.vertex_count()];
        for (v, &val) in g.valences.iter().enumerate() {
            valences[position[v]] = val;
        }
        let edges = g
            .edges
            .iter()
            .zip(&o.reversed)
            .map(|(&[a, b], &rev)| {
                let (t, h) = if rev { (b, a) } else { (a, b) };
                (position[t], position[h])
            })
            .collect();
        Ok(Self { valences, edges })
    }

    pub fn empty() -> Self {
        Self { valences: Vec::new(), edges: Vec::new() }
    }

    pub fn valences(&self) -> &[u8] {
        &self.valences
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.valences.len()
    }

    pub fn graph(&self) -> UnitrivalentGraph {
        UnitrivalentGraph { valences: self.valences.clone(), edges: self.edges.iter().map(|&(a, b)| [a, b]).collect() }
    }

    pub fn orientation(&self) -> VertexEdgeOrder {
        VertexEdgeOrder { vertex_order: (0..self.vertex_count()).collect(), reversed: vec![false; self.edges.len()] }
    }

    /// Same graph with the direction of edge `e` flipped (the negative
    /// orientation).
    pub fn reverse_edge(&self, e: usize) -> Self {
        let mut out = self.clone();
        let (t, h) = out.edges[e];
        out.edges[e] = (h, t);
        out
    }

    /// Relabels vertex `v` as `perm[v]`; the vertex order stays the index
    /// order, so the orientation changes by `sgn(perm)`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let mut valences = vec![0; self.vertex_count()];
        for (v, &val) in self.valences.iter().enumerate() {
            valences[perm[v]] = val;
        }
        let edges = self.edges.iter().map(|&(t, h)| (perm[t], perm[h])).collect();
        Self { valences, edges }
    }

    /// Vertex order + concatenation; the orientation is the product one.
    pub fn disjoint_union(&self, other: &Presentation) -> Self {
        let shift = self.vertex_count();
        let mut valences = self.valences.clone();
        valences.extend_from_slice(&other.valences);
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(t, h)| (t + shift, h + shift)));
        Self { valences, edges }
    }

    /// The induced subgraph on `vertices` (a union of components), in
    /// that vertex order.
    pub(crate) fn restrict(&self, vertices: &[usize]) -> Self {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let valences = vertices.iter().map(|&v| self.valences[v]).collect();
        let edges =
            self.edges.iter().filter(|(t, _)| index[*t] != usize::MAX).map(|&(t, h)| (index[t], index[h])).collect();
        Self { valences, edges }
    }

    pub fn is_trivalent(&self) -> bool {
        self.valences.iter().all(|&v| v == 3)
    }

    pub fn univalent_count(&self) -> usize {
        self.valences.iter().filter(|&&v| v == 1).count()
    }

    pub fn canonical(&self) -> OrientedGraph {
        canon::canonicalize(self)
    }
}

/// A graph in canonical labeling: edges stored `(a, b)` with `a < b`, sorted.
/// Its reference orientation is the identity vertex order with every edge
/// directed low → high.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalGraph {
    valences: Vec<u8>,
    edges: Vec<(usize, usize)>,
}

impl CanonicalGraph {
    pub fn empty() -> Self {
        Self { valences: Vec::new(), edges: Vec::new() }
    }

    pub fn valences(&self) -> &[u8] {
        &self.valences
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.valences.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn univalent_count(&self) -> usize {
        self.valences.iter().filter(|&&v| v == 1).count()
    }

    pub fn trivalent_count(&self) -> usize {
        self.vertex_count() - self.univalent_count()
    }

    pub fn is_trivalent(&self) -> bool {
        self.univalent_count() == 0
    }

    pub fn reference(&self) -> Presentation {
        Presentation { valences: self.valences.clone(), edges: self.edges.clone() }
    }

    pub fn graph(&self) -> UnitrivalentGraph {
        self.reference().graph()
    }

    /// Connected components as vertex sets, each sorted, ordered by least
    /// vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], v: usize) -> usize {
            let mut r = v;
            while parent[r] != r {
                r = parent[r];
            }
            let mut v = v;
            while parent[v] != r {
                let next = parent[v];
                parent[v] = r;
                v = next;
            }
            r
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut comps: Vec<Vec<usize>> = Vec::new();
        let mut index_of_root = vec![usize::MAX; n];
        for v in 0..n {
            let r = find(&mut parent, v);
            if index_of_root[r] == usize::MAX {
                index_of_root[r] = comps.len();
                comps.push(Vec::new());
            }
            comps[index_of_root[r]].push(v);
        }
        comps
    }

    pub(crate) fn from_parts_unchecked(valences: Vec<u8>, edges: Vec<(usize, usize)>) -> Self {
        Self { valences, edges }
    }
}

/// A canonical graph together with the sign of the orientation relative to the
/// reference orientation of the canonical labeling.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrientedGraph {
    pub graph: CanonicalGraph,
    pub sign: SignState,
}

impl OrientedGraph {
    pub fn empty() -> Self {
        Self { graph: CanonicalGraph::empty(), sign: SignState::Plus }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == SignState::Zero
    }
}

/// Validates `(g, orientation)` and returns its canonical form.
pub fn canonical_form(g: &UnitrivalentGraph, orientation: &Orientation) -> Result<OrientedGraph, GraphError> {
    let (ve, sign) = match orientation {
        Orientation::VertexEdge(ve) => (ve.clone(), Sign::Plus),
        Orientation::Cyclic(c) => cyclic_to_vertex_edge(g, c)?,
    };
    let mut out = Presentation::from_oriented(g, &ve)?.canonical();
    out.sign = out.sign * sign;
    Ok(out)
}

/// The Θ graph: two trivalent vertices joined by three edges, all directed
/// `0 → 1`.
pub fn theta() -> Presentation {
    Presentation::from_parts_unchecked(vec![3, 3], vec![(0, 1); 3])
}

/// The line ℓ: one edge between two univalent vertices.
pub fn line() -> Presentation {
    Presentation::from_parts_unchecked(vec![1, 1], vec![(0, 1)])
}

/// The planar `n`-wheel as a graph with cyclic orientation. Hub vertices are
/// `0..n`, spoke ends `n..2n`; hub edge `i` is `[i, i+1 mod n]`, spoke `n + i`
/// is `[i, n + i]`. Each hub vertex is ordered (incoming hub, outgoing hub,
/// spoke).
pub fn wheel_planar(n: usize) -> Result<(UnitrivalentGraph, VertexCyclic), GraphError> {
    if n == 0 || n % 2 == 1 {
        return Err(GraphError::OddWheel(n));
    }
    let mut valences = vec![3u8; n];
    valences.extend(std::iter::repeat_n(1u8, n));
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n).map(|i| (i, n + i)));
    let g = make_graph(2 * n, &valences, &edges)?;
    let mut cycles = vec![None; 2 * n];
    for (i, cycle) in cycles.iter_mut().enumerate().take(n) {
        let incoming = Flag::new((i + n - 1) % n, 1);
        let outgoing = Flag::new(i, 0);
        let spoke = Flag::new(n + i, 0);
        *cycle = Some([incoming, outgoing, spoke]);
    }
    Ok((g, VertexCyclic { cycles }))
}

/// The `n`-wheel `w_n` with its planar orientation.
pub fn wheel(n: usize) -> Result<Presentation, GraphError> {
    let (g, cyclic) = wheel_planar(n)?;
    let (ve, sign) = cyclic_to_vertex_edge(&g, &cyclic)?;
    let p = Presentation::from_oriented(&g, &ve)?;
    Ok(match sign {
        Sign::Plus => p,
        Sign::Minus => p.reverse_edge(0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_and_line_construct() {
        let t = make_graph(2, &[3, 3], &[(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(t.edge_count(), 3);
        let l = make_graph(2, &[1, 1], &[(0, 1)]).unwrap();
        assert_eq!(l.univalent_count(), 2);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(make_graph(1, &[1], &[(0, 0)]).unwrap_err().name(), "SelfLoop");
        assert_eq!(make_graph(2, &[3, 3], &[(0, 1)]).unwrap_err().name(), "ValenceMismatch");
        assert_eq!(make_graph(2, &[1, 1], &[(0, 2)]).unwrap_err().name(), "BadIndex");
        assert_eq!(make_graph(2, &[2, 2], &[(0, 1), (0, 1)]).unwrap_err().name(), "BadValence");
    }

    #[test]
    fn wheels() {
        let w2 = wheel(2).unwrap();
        assert_eq!(w2.vertex_count(), 4);
        assert_eq!(w2.valences(), &[3, 3, 1, 1]);
        let hub: Vec<_> = w2.edges().iter().filter(|(a, b)| a.max(b) < &2).collect();
        assert_eq!(hub.len(), 2);
        let w4 = wheel(4).unwrap();
        assert_eq!(w4.vertex_count(), 8);
        assert_eq!(w4.edges().len(), 8);
        assert_eq!(wheel(3).unwrap_err(), GraphError::OddWheel(3));
        assert_eq!(wheel(0).unwrap_err(), GraphError::OddWheel(0));
    }

    #[test]
    fn components_of_disjoint_union() {
        let g = theta().disjoint_union(&line()).canonical();
        let comps = g.graph.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps.iter().map(Vec::len).sum::<usize>(), 4);
    }
}
