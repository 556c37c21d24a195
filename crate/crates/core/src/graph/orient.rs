//! Conversion between the two orientation representations.
//!
//! The flags of a graph span a space whose top exterior power `det F` splits
//! two ways: over edges as `⊗ det F(e)` (two-forms commute, so edge order is
//! irrelevant and one direction per edge suffices), and over vertices as
//! `det V ⊗ ⊗ det F(v)` (every vertex has an odd number of flags, so
//! reordering vertices costs `sgn π`). A vertex-edge orientation `(o, d)`
//! corresponds to the cyclic data `ω_v` with `ω_{o(1)} ∧ … ∧ ω_{o(N)}`
//! equal to `∧_e (tail_e ∧ head_e)`.

use super::{Flag, GraphError, Orientation, Sign, UnitrivalentGraph, VertexCyclic, VertexEdgeOrder};
use crate::rational::permutation_parity;

pub(crate) fn validate_vertex_edge(g: &UnitrivalentGraph, o: &VertexEdgeOrder) -> Result<(), GraphError> {
    let n = g.vertex_count();
    if o.vertex_order.len() != n {
        return Err(GraphError::InvalidOrientation(format!(
            "vertex order has {} entries for {n} vertices",
            o.vertex_order.len()
        )));
    }
    let mut seen = vec![false; n];
    for &v in &o.vertex_order {
        if v >= n || seen[v] {
            return Err(GraphError::InvalidOrientation(format!("vertex order is not a permutation (entry {v})")));
        }
        seen[v] = true;
    }
    if o.reversed.len() != g.edge_count() {
        return Err(GraphError::InvalidOrientation(format!(
            "{} edge directions for {} edges",
            o.reversed.len(),
            g.edge_count()
        )));
    }
    Ok(())
}

fn validate_cyclic(g: &UnitrivalentGraph, c: &VertexCyclic) -> Result<(), GraphError> {
    if c.cycles.len() != g.vertex_count() {
        return Err(GraphError::InvalidOrientation(format!(
            "{} cyclic entries for {} vertices",
            c.cycles.len(),
            g.vertex_count()
        )));
    }
    for (v, (cycle, mut flags)) in c.cycles.iter().zip(g.flags_by_vertex()).enumerate() {
        match (g.valences()[v], cycle) {
            (1, None) => {}
            (3, Some(triple)) => {
                let mut given = triple.to_vec();
                given.sort();
                flags.sort();
                if given != flags {
                    return Err(GraphError::InvalidOrientation(format!(
                        "cyclic order at vertex {v} does not list its three flags"
                    )));
                }
            }
            _ => {
                return Err(GraphError::InvalidOrientation(format!(
                    "vertex {v}: cyclic data must be present exactly at trivalent vertices"
                )))
            }
        }
    }
    Ok(())
}

fn flag_id(f: Flag) -> usize {
    2 * f.edge + f.end as usize
}

/// `ve ≅ sign · cyclic`, where `per_vertex[v]` lists the flags of `v` in the
/// chosen order.
fn relative_sign(g: &UnitrivalentGraph, ve: &VertexEdgeOrder, per_vertex: &[Vec<Flag>]) -> Sign {
    let mut target_pos = vec![0usize; 2 * g.edge_count()];
    let mut pos = 0;
    for &v in &ve.vertex_order {
        for &f in &per_vertex[v] {
            target_pos[flag_id(f)] = pos;
            pos += 1;
        }
    }
    let seq: Vec<usize> = ve
        .reversed
        .iter()
        .enumerate()
        .flat_map(|(e, &rev)| {
            let (t, h) = if rev { (1, 0) } else { (0, 1) };
            [target_pos[2 * e + t], target_pos[2 * e + h]]
        })
        .collect();
    Sign::from_parity(permutation_parity(&seq))
}

fn cycles_as_lists(g: &UnitrivalentGraph, c: &VertexCyclic) -> Vec<Vec<Flag>> {
    c.cycles
        .iter()
        .zip(g.flags_by_vertex())
        .map(|(cycle, flags)| match cycle {
            Some(t) => t.to_vec(),
            None => flags,
        })
        .collect()
}

/// The cyclic orientation equal to the reference vertex-edge orientation.
/// Flags are listed in `(edge, end)` order at every vertex except possibly
/// the first trivalent one, which absorbs the sign. Graphs without trivalent
/// vertices have a single cyclic orientation, and the reference may be its
/// negative.
pub(crate) fn reference_cyclic(g: &UnitrivalentGraph) -> VertexCyclic {
    let mut lists = g.flags_by_vertex();
    let r = relative_sign(g, &VertexEdgeOrder::reference(g), &lists);
    if r == Sign::Minus {
        if let Some(v) = g.valences().iter().position(|&val| val == 3) {
            lists[v].swap(1, 2);
        }
    }
    let cycles = lists.into_iter().zip(g.valences()).map(|(l, &val)| (val == 3).then(|| [l[0], l[1], l[2]])).collect();
    VertexCyclic { cycles }
}

/// Returns `(c, s)` with `ve ≅ s · c`; `c` is the reference cyclic orientation.
pub fn vertex_edge_to_cyclic(g: &UnitrivalentGraph, ve: &VertexEdgeOrder) -> Result<(VertexCyclic, Sign), GraphError> {
    validate_vertex_edge(g, ve)?;
    let c = reference_cyclic(g);
    let s = relative_sign(g, ve, &cycles_as_lists(g, &c));
    Ok((c, s))
}

/// Returns `(ve, s)` with `c ≅ s · ve`; `ve` is the reference vertex-edge
/// orientation.
pub fn cyclic_to_vertex_edge(g: &UnitrivalentGraph, c: &VertexCyclic) -> Result<(VertexEdgeOrder, Sign), GraphError> {
    validate_cyclic(g, c)?;
    let ve = VertexEdgeOrder::reference(g);
    let s = relative_sign(g, &ve, &cycles_as_lists(g, c));
    Ok((ve, s))
}

/// Converts to the other representation; `orientation ≅ sign · result`.
pub fn convert_orientation(
    g: &UnitrivalentGraph,
    orientation: &Orientation,
) -> Result<(Orientation, Sign), GraphError> {
    match orientation {
        Orientation::VertexEdge(ve) => vertex_edge_to_cyclic(g, ve).map(|(c, s)| (Orientation::Cyclic(c), s)),
        Orientation::Cyclic(c) => cyclic_to_vertex_edge(g, c).map(|(ve, s)| (Orientation::VertexEdge(ve), s)),
    }
}

#[cfg(test)]
mod tests {
    use super::super::make_graph;
    use super::*;

    fn theta() -> UnitrivalentGraph {
        make_graph(2, &[3, 3], &[(0, 1), (0, 1), (0, 1)]).unwrap()
    }

    #[test]
    fn theta_reference_is_plus() {
        let g = theta();
        let (c, s) = vertex_edge_to_cyclic(&g, &VertexEdgeOrder::reference(&g)).unwrap();
        assert_eq!(s, Sign::Plus);
        // Sorted flags at vertex 0 give -1 (three inversions), so vertex 0
        // is flipped.
        assert_eq!(c.cycles[0].unwrap(), [Flag::new(0, 0), Flag::new(2, 0), Flag::new(1, 0)]);
    }

    #[test]
    fn theta_swapped_order_all_reversed_is_plus() {
        let g = theta();
        let ve = VertexEdgeOrder { vertex_order: vec![1, 0], reversed: vec![true; 3] };
        let (_, s) = vertex_edge_to_cyclic(&g, &ve).unwrap();
        assert_eq!(s, Sign::Plus);
    }

    #[test]
    fn single_reversal_is_minus() {
        let g = theta();
        let ve = VertexEdgeOrder { vertex_order: vec![0, 1], reversed: vec![false, true, false] };
        let (_, s) = vertex_edge_to_cyclic(&g, &ve).unwrap();
        assert_eq!(s, Sign::Minus);
    }

    #[test]
    fn round_trip_cyclic() {
        let g = theta();
        let ve = VertexEdgeOrder { vertex_order: vec![1, 0], reversed: vec![false, true, true] };
        let (c, s1) = vertex_edge_to_cyclic(&g, &ve).unwrap();
        let (back, s2) = cyclic_to_vertex_edge(&g, &c).unwrap();
        assert_eq!(back, VertexEdgeOrder::reference(&g));
        // ve = s1 c = s1 s2 ref; ve differs from ref by one transposition and
        // two reversals.
        assert_eq!(s1 * s2, Sign::Minus);
        let (c2, s3) = vertex_edge_to_cyclic(&g, &back).unwrap();
        assert_eq!((c2, s3), (c, Sign::Plus));
    }

    #[test]
    fn flipping_a_vertex_negates() {
        let g = theta();
        let (mut c, _) = vertex_edge_to_cyclic(&g, &VertexEdgeOrder::reference(&g)).unwrap();
        let t = c.cycles[1].as_mut().unwrap();
        t.swap(0, 1);
        let (_, s) = cyclic_to_vertex_edge(&g, &c).unwrap();
        assert_eq!(s, Sign::Minus);
    }

    #[test]
    fn rejects_bad_orientations() {
        let g = theta();
        let bad = VertexEdgeOrder { vertex_order: vec![0, 0], reversed: vec![false; 3] };
        assert!(vertex_edge_to_cyclic(&g, &bad).is_err());
        let bad_c = VertexCyclic { cycles: vec![Some([Flag::new(0, 0); 3]), None] };
        assert!(cyclic_to_vertex_edge(&g, &bad_c).is_err());
    }
}
