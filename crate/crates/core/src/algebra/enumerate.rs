use std::collections::BTreeMap;

use super::{AlgebraError, Bound};
use crate::graph::{CanonicalGraph, OrientedGraph, Presentation, SignState};

/// All loop-free trivalent graphs on `2k` vertices up to isomorphism, in
/// canonical-key order. Graphs with an orientation-reversing automorphism
/// come back with sign `Zero`.
pub fn enumerate_trivalent(k: usize, bound: &Bound) -> Result<Vec<OrientedGraph>, AlgebraError> {
    bound.check(k)?;
    let n = 2 * k;
    let mut found: BTreeMap<CanonicalGraph, SignState> = BTreeMap::new();
    let mut residual = vec![3u8; n];
    let mut edges = Vec::with_capacity(3 * k);
    fill(&mut residual, &mut edges, 0, &mut |edges| {
        let p = Presentation::from_parts_unchecked(vec![3; n], edges.to_vec());
        let og = p.canonical();
        found.entry(og.graph).or_insert(og.sign);
    });
    Ok(found
        .into_iter()
        .map(|(graph, sign)| {
            let sign = if sign == SignState::Zero { SignState::Zero } else { SignState::Plus };
            OrientedGraph { graph, sign }
        })
        .collect())
}

// Edges are produced in non-decreasing (tail, head) order, which makes each
// labelled multigraph appear exactly once.
fn fill(
    residual: &mut [u8],
    edges: &mut Vec<(usize, usize)>,
    min_head: usize,
    emit: &mut impl FnMut(&[(usize, usize)]),
) {
    let Some(i) = residual.iter().position(|&r| r > 0) else {
        emit(edges);
        return;
    };
    let start = if edges.last().is_some_and(|&(t, _)| t == i) { min_head } else { i + 1 };
    let spare: u32 = residual[i + 1..].iter().map(|&r| r as u32).sum();
    if spare < residual[i] as u32 {
        return;
    }
    for j in start.max(i + 1)..residual.len() {
        if residual[j] == 0 {
            continue;
        }
        residual[i] -= 1;
        residual[j] -= 1;
        edges.push((i, j));
        fill(residual, edges, j, emit);
        edges.pop();
        residual[i] += 1;
        residual[j] += 1;
    }
}
