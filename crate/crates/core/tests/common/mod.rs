#![allow(dead_code)]

use graphgenus::algebra::enumerate_trivalent;
use graphgenus::graph::{line, theta, wheel};
use graphgenus::{Bound, Presentation, Sign};
use proptest::prelude::*;

/// Small graphs of every kind the crate deals with.
pub fn pool() -> Vec<Presentation> {
    let mut out = vec![
        theta(),
        line(),
        wheel(2).unwrap(),
        wheel(4).unwrap(),
        theta().disjoint_union(&theta()),
        wheel(2).unwrap().disjoint_union(&line()),
        line().disjoint_union(&theta()).disjoint_union(&line()),
        theta().disjoint_union(&wheel(2).unwrap()).disjoint_union(&theta()),
        Presentation::new(vec![3, 1, 1, 1], vec![(0, 1), (0, 2), (0, 3)]).unwrap(),
        Presentation::new(vec![1, 3, 3, 1], vec![(0, 1), (1, 2), (1, 2), (2, 3)]).unwrap(),
    ];
    for k in 1..=3 {
        out.extend(enumerate_trivalent(k, &Bound::default()).unwrap().iter().map(|g| g.graph.reference()));
    }
    out
}

pub fn parity(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    let mut odd = false;
    for s in 0..perm.len() {
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len > 0 && len % 2 == 0 {
            odd = !odd;
        }
    }
    odd
}

/// A pool graph with a random relabelling and random edge reversals.
pub fn scrambled() -> impl Strategy<Value = (Presentation, Vec<usize>, Vec<bool>)> {
    let pool = pool();
    (0..pool.len()).prop_flat_map(move |i| {
        let p = pool[i].clone();
        let n = p.vertex_count();
        let e = p.edges().len();
        (Just(p), Just((0..n).collect::<Vec<_>>()).prop_shuffle(), proptest::collection::vec(any::<bool>(), e))
    })
}

pub fn apply(p: &Presentation, perm: &[usize], flips: &[bool]) -> (Presentation, Sign) {
    let mut q = p.relabel(perm);
    let mut s = Sign::from_parity(parity(perm));
    for (e, &f) in flips.iter().enumerate() {
        if f {
            q = q.reverse_edge(e);
            s = -s;
        }
    }
    (q, s)
}
