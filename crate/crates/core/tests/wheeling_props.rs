mod common;

use common::{apply, scrambled};
use graphgenus::graph::{line, theta, wheel};
use graphgenus::wheeling::{glue_basis, glue_hat, lines, pair_basis, pair_spokes, wheeling_check, WheelingError};
use graphgenus::{Bound, GraphVector, Presentation, Sign, Q};
use num_traits::One;
use proptest::prelude::*;

fn signed(s: Sign) -> Q {
    if s == Sign::Minus {
        -Q::one()
    } else {
        Q::one()
    }
}

fn glue(c: &Presentation, g: &Presentation) -> Result<GraphVector, WheelingError> {
    let mut out = GraphVector::zero();
    glue_basis(c, g, &Q::one(), &mut out)?;
    Ok(out)
}

fn pair(p: &Presentation) -> Result<GraphVector, WheelingError> {
    let mut out = GraphVector::zero();
    pair_basis(p, &Q::one(), &mut out)?;
    Ok(out)
}

fn targets() -> Vec<Presentation> {
    vec![line(), line().disjoint_union(&line()), wheel(2).unwrap(), theta().disjoint_union(&line())]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn gluing_respects_orientation((c, perm, flips) in scrambled(), t in 0usize..4) {
        let g = &targets()[t];
        let (c2, s) = apply(&c, &perm, &flips);
        // welding line components end to end leaves a free loop either way
        prop_assert_eq!(glue(&c2, g).map(|v| v.scale(&signed(s))), glue(&c, g));
    }

    #[test]
    fn gluing_respects_target_orientation((g, perm, flips) in scrambled()) {
        let c = wheel(2).unwrap();
        let (g2, s) = apply(&g, &perm, &flips);
        prop_assert_eq!(glue(&c, &g2).map(|v| v.scale(&signed(s))), glue(&c, &g));
    }

    #[test]
    fn gluing_uses_up_legs((c, _, _) in scrambled(), t in 0usize..4) {
        let g = &targets()[t];
        let Ok(out) = glue(&c, g) else { return Ok(()) };
        let left = g.univalent_count() as isize - c.univalent_count() as isize;
        for (h, _) in out.terms() {
            prop_assert_eq!(h.univalent_count() as isize, left);
        }
    }

    #[test]
    fn pairing_respects_orientation((p, perm, flips) in scrambled()) {
        prop_assume!(p.univalent_count() % 2 == 0);
        let (q, s) = apply(&p, &perm, &flips);
        prop_assert_eq!(pair(&q).map(|v| v.scale(&signed(s))), pair(&p));
        let Ok(a) = pair(&p) else { return Ok(()) };
        for (h, _) in a.terms() {
            prop_assert!(h.is_trivalent());
        }
    }
}

#[test]
fn wheel_on_lines_is_scaled_pairing() {
    // ŵ_{2k}(ℓ^k) = 2^k k! S(w_{2k})
    for (k, factor) in [(1, 2), (2, 8), (3, 48)] {
        let w = GraphVector::from_presentation(&wheel(2 * k).unwrap());
        let lhs = glue_hat(&w, &lines(k)).unwrap();
        let rhs = pair_spokes(&w).unwrap().scale(&Q::from_integer(factor.into()));
        assert_eq!(lhs, rhs, "k = {k}");
    }
}

#[test]
fn gluing_into_nothing_vanishes() {
    let w = GraphVector::from_presentation(&wheel(4).unwrap());
    assert!(glue_hat(&w, &lines(1)).unwrap().is_zero());
}

#[test]
fn wheeling_holds_through_degree_three() {
    let b = Bound::default();
    for k in 1..=3 {
        let r = wheeling_check(k, &b).unwrap();
        assert!(r.pass(), "k = {k}: {r}");
        assert_eq!(r.exact_before_reduction, k == 1);
    }
}
