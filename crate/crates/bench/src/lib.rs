//! Inputs shared by the benchmarks.

use graphgenus::algebra::enumerate_trivalent;
use graphgenus::graph::{line, theta, wheel};
use graphgenus::{Bound, Presentation};

/// Graphs of increasing size and symmetry.
pub fn canonicalize_inputs() -> Vec<(&'static str, Presentation)> {
    let k4 = enumerate_trivalent(2, &Bound::default())
        .unwrap()
        .into_iter()
        .map(|g| g.graph.reference())
        .find(|p| p.edges().windows(2).all(|w| w[0] != w[1]))
        .expect("K4");
    let theta3 = theta().disjoint_union(&theta()).disjoint_union(&theta());
    vec![
        ("theta", theta()),
        ("k4", k4),
        ("w6", wheel(6).unwrap()),
        ("theta^3", theta3),
        ("w4+2 lines", wheel(4).unwrap().disjoint_union(&line()).disjoint_union(&line())),
    ]
}
