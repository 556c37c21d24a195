use graphgenus::algebra::{dimension, enumerate_trivalent, ihx_relations};
use graphgenus::graph::{theta, vertex_edge_to_cyclic};
use graphgenus::lie::{rank, MetricLieAlgebra};
use graphgenus::{Bound, GraphVector, Presentation, Sign, Q};
use num_bigint::BigInt;
use num_traits::Zero;

/// Plain nested loops over one index per flag.
fn brute_force(l: &MetricLieAlgebra, p: &Presentation) -> Q {
    let g = p.graph();
    let (cyclic, sign) = vertex_edge_to_cyclic(&g, &p.orientation()).unwrap();
    let e = g.edge_count();
    let d = l.dim();
    let flags = 2 * e;
    let mut idx = vec![0usize; flags];
    let mut total = Q::zero();
    loop {
        let mut term = Q::from_integer(BigInt::from(1));
        for c in cyclic.cycles.iter().flatten() {
            let at = |f: &graphgenus::Flag| idx[2 * f.edge + f.end as usize];
            term *= l.lowered(at(&c[0]), at(&c[1]), at(&c[2]));
            if term.is_zero() {
                break;
            }
        }
        if !term.is_zero() {
            for j in 0..e {
                term *= l.inverse_form(idx[2 * j], idx[2 * j + 1]);
            }
            total += term;
        }
        let mut pos = 0;
        loop {
            if pos == flags {
                return if sign == Sign::Minus { -total } else { total };
            }
            idx[pos] += 1;
            if idx[pos] < d {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

fn algebras() -> Vec<MetricLieAlgebra> {
    vec![MetricLieAlgebra::abelian(2), MetricLieAlgebra::sl2(), MetricLieAlgebra::gl(2), MetricLieAlgebra::gl(3)]
}

#[test]
fn engine_matches_brute_force() {
    let t = theta();
    for l in [MetricLieAlgebra::sl2(), MetricLieAlgebra::gl(2), MetricLieAlgebra::abelian(3)] {
        assert_eq!(l.weight(&t).unwrap(), brute_force(&l, &t), "{}", l.name());
    }
    let sl2 = MetricLieAlgebra::sl2();
    for g in enumerate_trivalent(2, &Bound::default()).unwrap() {
        let p = g.graph.reference();
        assert_eq!(sl2.weight(&p).unwrap(), brute_force(&sl2, &p));
        let r = p.reverse_edge(2).relabel(&[1, 3, 0, 2]);
        assert_eq!(sl2.weight(&r).unwrap(), brute_force(&sl2, &r));
    }
}

#[test]
fn theta_is_not_killed_by_gl2() {
    let gl2 = MetricLieAlgebra::gl(2);
    let w = gl2.weight(&theta()).unwrap();
    assert_eq!(w, brute_force(&gl2, &theta()));
    assert_eq!(w, Q::from_integer(BigInt::from(12)));
    assert!(MetricLieAlgebra::abelian(4).weight(&theta()).unwrap().is_zero());
    assert_eq!(dimension(1, &Bound::default()).unwrap(), 1);
}

#[test]
fn weights_respect_orientation() {
    let l = MetricLieAlgebra::gl(2);
    for g in enumerate_trivalent(2, &Bound::default()).unwrap() {
        let p = g.graph.reference();
        let w = l.weight(&p).unwrap();
        assert_eq!(l.weight(&p.reverse_edge(0)).unwrap(), -w.clone());
        // relabelling by a transposition is also a reversal
        assert_eq!(l.weight(&p.relabel(&[1, 0, 2, 3])).unwrap(), -w.clone());
        let r = p.reverse_edge(0);
        assert_eq!(l.weight_vector(&GraphVector::from_presentation(&r)).unwrap(), l.weight(&r).unwrap());
    }
    assert!(l.weight_vector(&GraphVector::zero()).unwrap().is_zero());
}

#[test]
fn weights_are_multiplicative() {
    for l in algebras() {
        let t = theta();
        let t2 = t.disjoint_union(&t);
        let w = l.weight(&t).unwrap();
        assert_eq!(l.weight(&t2).unwrap(), &w * &w);
        for g in enumerate_trivalent(2, &Bound::default()).unwrap() {
            let p = g.graph.reference();
            assert_eq!(l.weight(&t.disjoint_union(&p)).unwrap(), &w * l.weight(&p).unwrap());
        }
    }
}

#[test]
fn rescaling_the_form() {
    // f picks up t at every vertex and the inverse form 1/t on every edge
    let t = Q::from_integer(BigInt::from(3));
    let l = MetricLieAlgebra::sl2();
    let s = l.rescaled(&t).unwrap();
    for k in 1..=2 {
        for g in enumerate_trivalent(k, &Bound::default()).unwrap() {
            let p = g.graph.reference();
            let want = l.weight(&p).unwrap() / num_traits::pow(t.clone(), k);
            assert_eq!(s.weight(&p).unwrap(), want);
        }
    }
}

fn annihilates(k: usize) {
    let rel = ihx_relations(k, &Bound::default()).unwrap();
    for l in algebras() {
        for r in rel.relations() {
            assert!(l.weight_vector(r).unwrap().is_zero(), "{} on {r}", l.name());
        }
    }
}

#[test]
fn relations_are_annihilated_up_to_degree_two() {
    annihilates(1);
    annihilates(2);
}

#[test]
fn relations_are_annihilated_in_degree_three() {
    annihilates(3);
}

#[test]
fn reduce_preserves_weights() {
    let rel = ihx_relations(2, &Bound::default()).unwrap();
    let gs = enumerate_trivalent(2, &Bound::default()).unwrap();
    let mut v = GraphVector::zero();
    for (i, g) in gs.iter().enumerate() {
        v.add_oriented(g, Q::new(BigInt::from(i as i64 + 1), BigInt::from(7)));
    }
    let r = rel.reduce(&v).unwrap();
    for l in algebras() {
        assert_eq!(l.weight_vector(&v).unwrap(), l.weight_vector(&r).unwrap());
    }
}

#[test]
fn oracle_rank_bounds_dimension() {
    for k in 0..=3 {
        let gs: Vec<_> =
            enumerate_trivalent(k, &Bound::default()).unwrap().into_iter().filter(|g| !g.is_zero()).collect();
        let rows: Vec<Vec<Q>> =
            algebras().iter().map(|l| gs.iter().map(|g| l.weight(&g.graph.reference()).unwrap()).collect()).collect();
        let dim = dimension(k, &Bound::default()).unwrap();
        assert!(rank(&rows) <= dim, "k={k}");
        if k == 2 {
            assert_eq!(rank(&rows), 2);
        }
    }
}
