//! Canonical labeling by exhaustive search over colour-respecting
//! relabelings, with the orientation sign tracked along the way.

use std::cmp::Ordering;

use super::{CanonicalGraph, OrientedGraph, Presentation, Sign, SignState};
use crate::rational::permutation_parity;

fn refine_colors(valences: &[u8], mult: &[Vec<u8>]) -> Vec<usize> {
    let n = valences.len();
    let mut color: Vec<usize> = valences.iter().map(|&v| v as usize).collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<(usize, u8)>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<(usize, u8)> =
                    (0..n).filter(|&u| mult[v][u] > 0).map(|u| (color[u], mult[v][u])).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        color = sigs.iter().map(|s| distinct.binary_search(s).expect("signature present")).collect();
        if distinct.len() == classes {
            return color;
        }
        classes = distinct.len();
    }
}

struct Search<'a> {
    mult: &'a [Vec<u8>],
    color: &'a [usize],
    slot_color: Vec<usize>,
    lab: Vec<usize>,
    used: Vec<bool>,
    current: Vec<u8>,
    best: Option<Vec<u8>>,
    minimizers: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn run(&mut self, depth: usize) {
        let n = self.slot_color.len();
        if depth == n {
            let ord = match &self.best {
                None => Ordering::Less,
                Some(b) => self.current.as_slice().cmp(b.as_slice()),
            };
            match ord {
                Ordering::Less => {
                    self.best = Some(self.current.clone());
                    self.minimizers.clear();
                    self.minimizers.push(self.lab.clone());
                }
                Ordering::Equal => self.minimizers.push(self.lab.clone()),
                Ordering::Greater => {}
            }
            return;
        }
        let want = self.slot_color[depth];
        for v in 0..n {
            if self.used[v] || self.color[v] != want {
                continue;
            }
            let mark = self.current.len();
            for i in 0..depth {
                self.current.push(self.mult[self.lab[i]][v]);
            }
            let worse = self.best.as_ref().is_some_and(|b| self.current.as_slice() > &b[..self.current.len()]);
            if !worse {
                self.lab.push(v);
                self.used[v] = true;
                self.run(depth + 1);
                self.used[v] = false;
                self.lab.pop();
            }
            self.current.truncate(mark);
        }
    }
}

fn components(p: &Presentation) -> Vec<Vec<usize>> {
    let n = p.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], v: usize) -> usize {
        let mut r = v;
        while parent[r] != r {
            r = parent[r];
        }
        parent[v] = r;
        r
    }
    for &(a, b) in p.edges() {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra.max(rb)] = ra.min(rb);
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        if slot[r] == usize::MAX {
            slot[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[r]].push(v);
    }
    groups
}

/// Components are labelled separately and laid out in sorted order. Every
/// component has an even number of vertices (`3t + u` is even), so moving
/// whole components never changes the orientation.
pub(super) fn canonicalize(p: &Presentation) -> OrientedGraph {
    let comps = components(p);
    if comps.len() <= 1 {
        return canonicalize_connected(p);
    }
    let mut position = vec![0; p.vertex_count()];
    for (pos, &v) in comps.iter().flatten().enumerate() {
        position[v] = pos;
    }
    let mut sign = SignState::from(Sign::from_parity(permutation_parity(&position)));
    let mut parts: Vec<CanonicalGraph> = Vec::with_capacity(comps.len());
    for comp in &comps {
        let c = canonicalize_connected(&p.restrict(comp));
        sign = mul_states(sign, c.sign);
        parts.push(c.graph);
    }
    parts.sort();
    let mut valences = Vec::with_capacity(p.vertex_count());
    let mut edges = Vec::with_capacity(p.edges().len());
    for c in &parts {
        let shift = valences.len();
        valences.extend_from_slice(c.valences());
        edges.extend(c.edges().iter().map(|&(a, b)| (a + shift, b + shift)));
    }
    OrientedGraph { graph: CanonicalGraph::from_parts_unchecked(valences, edges), sign }
}

fn canonicalize_connected(p: &Presentation) -> OrientedGraph {
    let n = p.vertex_count();
    if n == 0 {
        return OrientedGraph::empty();
    }
    let mut mult = vec![vec![0u8; n]; n];
    for &(a, b) in p.edges() {
        mult[a][b] += 1;
        mult[b][a] += 1;
    }
    let color = refine_colors(p.valences(), &mult);
    let mut slot_color = color.clone();
    slot_color.sort_unstable();
    let mut search = Search {
        mult: &mult,
        color: &color,
        slot_color,
        lab: Vec::with_capacity(n),
        used: vec![false; n],
        current: Vec::with_capacity(n * n / 2),
        best: None,
        minimizers: Vec::new(),
    };
    search.run(0);

    let mut signs = search.minimizers.iter().map(|lab| {
        let mut q = vec![0; n];
        for (pos, &v) in lab.iter().enumerate() {
            q[v] = pos;
        }
        let reversals = p.edges().iter().filter(|&&(t, h)| q[t] > q[h]).count();
        Sign::from_parity(permutation_parity(&q) ^ (reversals % 2 == 1))
    });
    let first = signs.next().expect("at least one labeling");
    let sign = if signs.any(|s| s != first) { SignState::Zero } else { first.into() };

    let lab = &search.minimizers[0];
    let mut q = vec![0; n];
    for (pos, &v) in lab.iter().enumerate() {
        q[v] = pos;
    }
    let valences = lab.iter().map(|&v| p.valences()[v]).collect();
    let mut edges: Vec<(usize, usize)> = p.edges().iter().map(|&(t, h)| (q[t].min(q[h]), q[t].max(q[h]))).collect();
    edges.sort_unstable();
    OrientedGraph { graph: CanonicalGraph::from_parts_unchecked(valences, edges), sign }
}

pub(crate) fn mul_states(a: SignState, b: SignState) -> SignState {
    match b.sign() {
        Some(s) => a * s,
        None => SignState::Zero,
    }
}

/// Relative sign of two oriented graphs with isomorphic underlying graphs,
/// `None` when the graphs differ.
pub fn is_isomorphic(a: &OrientedGraph, b: &OrientedGraph) -> Option<SignState> {
    (a.graph == b.graph).then(|| mul_states(a.sign, b.sign))
}

/// Disjoint union with concatenated vertex order.
pub fn disjoint_union(a: &OrientedGraph, b: &OrientedGraph) -> OrientedGraph {
    let mut out = a.graph.reference().disjoint_union(&b.graph.reference()).canonical();
    out.sign = mul_states(mul_states(out.sign, a.sign), b.sign);
    out
}
