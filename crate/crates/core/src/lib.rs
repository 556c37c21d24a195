//! Exact combinatorics of oriented trivalent graph homology, wheels and the
//! Wheeling element, multiplicative sequences, and the scalar identities
//! relating the curvature norm of an irreducible hyperkähler manifold to
//! its `√Â` genus.
//!
//! All arithmetic is exact over ℚ; powers of π are carried symbolically by
//! [`PiRational`].
//!
//! ```
//! use graphgenus::{wheeling, Bound};
//!
//! let report = wheeling::wheeling_check(1, &Bound::default()).unwrap();
//! assert!(report.pass() && report.exact_before_reduction);
//! ```

pub mod algebra;
pub mod genus;
pub mod graph;
pub mod hk;
pub mod lie;
mod pi;
mod rational;
pub mod wheeling;

pub use algebra::{Bound, CoproductTerms, GraphVector, RelationSet};
pub use genus::{ChernData, ChernPolynomial, PowerSeries, PowerSumPolynomial};
pub use graph::{
    CanonicalGraph, Flag, GraphError, Orientation, OrientedGraph, Presentation, Sign, SignState, UnitrivalentGraph,
    VertexCyclic, VertexEdgeOrder,
};
pub use pi::PiRational;
pub use rational::{parse_rational, Q};
