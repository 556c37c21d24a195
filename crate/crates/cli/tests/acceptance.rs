//! End-to-end acceptance checks. Run with `cargo test --test acceptance`;
//! prints one line per criterion and exits nonzero if any of them fails.

mod common;

use std::time::{Duration, Instant};

use graphgenus::algebra::{dimension, enumerate_trivalent, ihx_relations};
use graphgenus::genus::{power_sums_to_chern, ChernPolynomial, Genus};
use graphgenus::graph::{theta, wheel};
use graphgenus::hk::{
    analyze, b_theta_from_c_theta, b_theta_k, c_theta, curvature_norm, curvature_norm_via_b_theta, sqrt_ahat_number,
    ManifoldData, NormValue, Status,
};
use graphgenus::lie::MetricLieAlgebra;
use graphgenus::wheeling::{b_coefficients, bridge_identity, glue_hat, lines, omega, pair_spokes, wheeling_check};
use graphgenus::{Bound, GraphVector, PiRational, PowerSeries, Presentation, SignState, Q};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

type Outcome = Result<(), String>;
type Criterion = (&'static str, Option<Duration>, Box<dyn FnOnce(&mut StdRng) -> Outcome>);

fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

fn int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn vector(p: &Presentation) -> GraphVector {
    GraphVector::from_presentation(p)
}

fn omega_coefficients() -> Outcome {
    let om = omega(2, &Bound::default()).map_err(|e| e.to_string())?;
    let w2 = vector(&wheel(2).unwrap());
    let w4 = vector(&wheel(4).unwrap());
    let inner = &w2.product(&w2) - &w4.scale(&q(4, 5));
    let want = &(&GraphVector::one() + &w2.scale(&q(1, 48))) + &inner.scale(&q(1, 2 * 48 * 48));
    ensure(om.vector == want, || format!("omega(2) = {om}"))?;
    let b = b_coefficients(2);
    ensure(b == vec![q(1, 48), q(-1, 5760)], || format!("b = {b:?}"))?;
    // b_{2n} from (1/2) log(sinh(x/2)/(x/2))
    let series = PowerSeries::sinh_over_x(6).compose_scale(&q(1, 2)).log().unwrap().scale(&q(1, 2));
    ensure(series.coeff(2) == b[0] && series.coeff(4) == b[1], || format!("series {series}"))?;
    // exp(b2 w2 + b4 w4) = 1 + b2 w2 + b2^2/2 w2^2 + b4 w4
    let coeffs = om.partition_coefficients();
    let lookup = |parts: &[usize]| coeffs.iter().find(|(p, _)| p.as_slice() == parts).map(|(_, c)| c.clone());
    ensure(lookup(&[1]) == Some(b[0].clone()), || "w2 coefficient".into())?;
    ensure(lookup(&[1, 1]) == Some(&b[0] * &b[0] / int(2)), || "w2^2 coefficient".into())?;
    ensure(lookup(&[2]) == Some(b[1].clone()), || "w4 coefficient".into())
}

fn wheeling_degree_one() -> Outcome {
    let r = wheeling_check(1, &Bound::default()).map_err(|e| e.to_string())?;
    let want = vector(&theta()).scale(&q(1, 24));
    ensure(r.lhs == want, || format!("trivalent part is\n{}", r.lhs))?;
    ensure(r.exact_before_reduction, || "needed IHX reduction".into())
}

fn wheeling_degree_two() -> Outcome {
    let r = wheeling_check(2, &Bound::default()).map_err(|e| e.to_string())?;
    ensure(r.pass(), || r.to_string())
}

fn sum_to(g: Genus, k: usize) -> ChernPolynomial {
    (0..=k).fold(ChernPolynomial::zero(), |acc, j| acc.add(&g.polynomial(j)))
}

fn genus_table() -> Outcome {
    let c2 = ChernPolynomial::var(2);
    let c4 = ChernPolynomial::var(4);
    let a1 = Genus::AHat.polynomial(1);
    ensure(a1 == c2.scale(&q(1, 12)), || format!("Ahat_1 = {a1}"))?;
    let a2 = Genus::AHat.polynomial(2);
    let want = c2.mul(&c2).scale(&int(3)).sub(&c4).scale(&q(1, 720));
    ensure(a2 == want, || format!("Ahat_2 = {a2}"))?;
    for k in 0..=3 {
        let (t, a) = (Genus::Todd.polynomial(k), Genus::AHat.polynomial(k));
        ensure(t == a, || format!("degree {k}: Td = {t}, Ahat = {a}"))?;
    }
    for k in 0..=2 {
        let root = sum_to(Genus::SqrtAHat, k);
        let sq = root.mul_truncated(&root, 2 * k).homogeneous(2 * k);
        let a = Genus::AHat.polynomial(k);
        ensure(sq == a, || format!("degree {k}: (sqrt Ahat)^2 = {sq}, Ahat = {a}"))?;
    }
    Ok(())
}

fn bridge() -> Outcome {
    for k in 1..=2 {
        let b = bridge_identity(k, &Bound::default()).map_err(|e| e.to_string())?;
        ensure(b.holds(), || format!("k = {k}: {b:?}"))?;
        let chern = power_sums_to_chern(&b.series_side);
        let want = Genus::SqrtAHat.polynomial_with_odd(k);
        ensure(chern == want, || format!("k = {k}: {chern} vs {want}"))?;
    }
    Ok(())
}

fn k3(vol: PiRational) -> ManifoldData {
    ManifoldData::new(1, [(vec![2], int(24))], vol, None, true).unwrap()
}

fn k3_suite() -> Outcome {
    for vol in [PiRational::one(), PiRational::new(q(3, 2), 2), PiRational::new(int(7), 0)] {
        let d = k3(vol.clone());
        let r = analyze(&d);
        ensure(r.sqrt_ahat == int(1) && r.ahat == int(2), || format!("sqrt_ahat {} ahat {}", r.sqrt_ahat, r.ahat))?;
        ensure(b_theta_k(&d) == int(48), || "b_theta".into())?;
        let norm = curvature_norm(&d).map_err(|e| e.to_string())?;
        ensure(norm == NormValue::Exact(PiRational::new(int(192), 2)), || format!("||R||^2 = {norm}"))?;
        let c = c_theta(&d).map_err(|e| e.to_string())?;
        let want_c = PiRational::new(int(96), 2) / vol.clone();
        ensure(c == NormValue::Exact(want_c), || format!("c_theta = {c}"))?;
        let b = b_theta_from_c_theta(&c, &d);
        ensure(b == Some(PiRational::rational(int(48))), || format!("loop gives {b:?}"))?;
        ensure(r.pass(), || r.render_text(false))?;
    }
    Ok(())
}

fn status(d: &ManifoldData, key: &str) -> Option<Status> {
    analyze(d).verdicts.into_iter().find(|v| v.key == key).map(|v| v.status)
}

fn k2(c2sq: Q, c4: Q, vol: PiRational) -> Result<ManifoldData, String> {
    ManifoldData::new(2, [(vec![2, 2], c2sq), (vec![4], c4)], vol, None, true).map_err(|e| e.to_string())
}

fn k2_suite(rng: &mut StdRng) -> Outcome {
    let a1sq = Genus::AHat.polynomial(1).pow(2);
    let rhs = Genus::AHat.polynomial(2).scale(&q(1, 2)).sub(&a1sq.scale(&q(1, 8)));
    ensure(Genus::SqrtAHat.polynomial(2) == rhs, || "sqrt(Ahat)_2 != Ahat_2/2 - Ahat_1^2/8".into())?;
    for _ in 0..100 {
        // Ahat[M] = (3 c2^2 - c4)/720 = 3
        let c2sq = Q::new(BigInt::from(rng.gen_range(1..=2_000_000i64)), BigInt::from(rng.gen_range(1..=400i64)));
        let c4 = &c2sq * int(3) - int(2160);
        let d = k2(c2sq.clone(), c4.clone(), PiRational::one())?;
        let a1 = &c2sq / int(144);
        ensure(sqrt_ahat_number(&d) == q(3, 2) - &a1 / int(8), || format!("sqrt(Ahat) at c2^2 = {c2sq}"))?;
        let (x, y) = (status(&d, "ahat1_sq_lt_12"), status(&d, "euler_lt_3024"));
        ensure(x == y && x.is_some(), || format!("c2^2 = {c2sq}, c4 = {c4}: {x:?} vs {y:?}"))?;
        ensure(status(&d, "inequalities_agree") == Some(Status::Pass), || "inequalities_agree".into())?;
    }
    Ok(())
}

fn rel_close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-12 * a.abs().max(b.abs())
}

fn random_volume(rng: &mut StdRng) -> PiRational {
    PiRational::new(q(rng.gen_range(1..=1000), rng.gen_range(1..=100)), rng.gen_range(0..=4))
}

fn two_route_norm(rng: &mut StdRng) -> Outcome {
    for _ in 0..100 {
        let c2 = q(rng.gen_range(1..=10_000), rng.gen_range(1..=50));
        let d = ManifoldData::new(1, [(vec![2], c2)], random_volume(rng), None, true).unwrap();
        let (a, b) = (curvature_norm(&d).unwrap(), curvature_norm_via_b_theta(&d).unwrap());
        ensure(a.is_exact() && a == b, || format!("k = 1: {a} vs {b}"))?;
    }
    let mut n = 0;
    while n < 100 {
        let c2sq = int(rng.gen_range(1..=20_000));
        let c4 = int(rng.gen_range(1..=20_000));
        let d = k2(c2sq, c4, random_volume(rng))?;
        if !sqrt_ahat_number(&d).is_positive() {
            continue;
        }
        n += 1;
        let (a, b) = (curvature_norm(&d).unwrap(), curvature_norm_via_b_theta(&d).unwrap());
        ensure(rel_close(a.to_f64(), b.to_f64()), || format!("k = 2: {a} vs {b}"))?;
    }
    Ok(())
}

fn oracle_annihilation() -> Outcome {
    let bound = Bound::default();
    for lie in [MetricLieAlgebra::gl(2), MetricLieAlgebra::gl(3)] {
        for k in 1..=2 {
            let rels = ihx_relations(k, &bound).map_err(|e| e.to_string())?;
            for r in rels.relations() {
                let w = lie.weight_vector(r).map_err(|e| e.to_string())?;
                ensure(w.is_zero(), || format!("{} gives {w} on\n{r}", lie.name()))?;
            }
        }
    }
    let w = MetricLieAlgebra::gl(2).weight(&theta()).map_err(|e| e.to_string())?;
    ensure(!w.is_zero(), || "gl(2) weight of theta vanishes".into())?;
    let dim = dimension(1, &bound).map_err(|e| e.to_string())?;
    ensure(dim == 1, || format!("dimension(1) = {dim}"))
}

/// A random unitrivalent multigraph on at most 8 vertices without self-loops.
fn random_graph(rng: &mut StdRng) -> Presentation {
    loop {
        let n = rng.gen_range(2..=8usize);
        let valences: Vec<u8> = (0..n).map(|_| if rng.gen_bool(0.6) { 3 } else { 1 }).collect();
        let mut ends: Vec<usize> =
            valences.iter().enumerate().flat_map(|(v, &d)| std::iter::repeat_n(v, d as usize)).collect();
        if ends.len() % 2 == 1 {
            continue;
        }
        ends.shuffle(rng);
        let edges: Vec<(usize, usize)> = ends.chunks(2).map(|c| (c[0], c[1])).collect();
        if let Ok(p) = Presentation::new(valences, edges) {
            return p;
        }
    }
}

fn parity(perm: &[usize]) -> bool {
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
        if len % 2 == 0 && len > 0 {
            odd = !odd;
        }
    }
    odd
}

fn negated(s: SignState) -> SignState {
    match s {
        SignState::Plus => SignState::Minus,
        SignState::Minus => SignState::Plus,
        SignState::Zero => SignState::Zero,
    }
}

fn sign_laws(rng: &mut StdRng) -> Outcome {
    let mut graphs: Vec<Presentation> =
        enumerate_trivalent(4, &Bound::new(4)).unwrap().iter().map(|g| g.graph.reference()).collect();
    graphs.push(wheel(4).unwrap());
    for _ in 0..1000 {
        let p = if rng.gen_bool(0.2) { graphs.choose(rng).unwrap().clone() } else { random_graph(rng) };
        let n = p.vertex_count();
        let base = p.canonical();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        let mut q = p.relabel(&perm);
        let mut flip = parity(&perm);
        for e in 0..p.edges().len() {
            if rng.gen_bool(0.5) {
                q = q.reverse_edge(e);
                flip = !flip;
            }
        }
        let c = q.canonical();
        let want = if flip { negated(base.sign) } else { base.sign };
        ensure(c.graph == base.graph && c.sign == want, || format!("re-presentation of {p:?}"))?;
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n - 1));
        let b = if b >= a { b + 1 } else { b };
        let mut t: Vec<usize> = (0..n).collect();
        t.swap(a, b);
        let swapped = p.relabel(&t).canonical();
        ensure(swapped.graph == base.graph && swapped.sign == negated(base.sign), || {
            format!("transposition of {p:?}")
        })?;
        let e = rng.gen_range(0..p.edges().len());
        let rev = p.reverse_edge(e).canonical();
        ensure(rev.graph == base.graph && rev.sign == negated(base.sign), || format!("reversal of {p:?}"))?;
    }
    Ok(())
}

fn wheel_on_lines() -> Outcome {
    for (k, factor) in [(1usize, 2i64), (2, 8), (3, 48)] {
        let w = vector(&wheel(2 * k).unwrap());
        let lhs = glue_hat(&w, &lines(k)).map_err(|e| e.to_string())?;
        let rhs = pair_spokes(&w).map_err(|e| e.to_string())?.scale(&int(factor));
        ensure(lhs == rhs && !lhs.is_zero(), || format!("k = {k}"))?;
    }
    Ok(())
}

fn golden_files() -> Outcome {
    let errors: Vec<String> = common::cases().iter().filter_map(|c| common::check(c).err()).collect();
    ensure(errors.is_empty(), || errors.join("\n"))
}

fn main() {
    let mut rng = StdRng::seed_from_u64(0x5eed_2026);
    let secs = Duration::from_secs;
    let criteria: Vec<Criterion> = vec![
        ("omega coefficients and b series", Some(secs(1)), Box::new(|_| omega_coefficients())),
        ("wheeling k=1 without reduction", Some(secs(1)), Box::new(|_| wheeling_degree_one())),
        ("wheeling k=2 modulo IHX", Some(secs(300)), Box::new(|_| wheeling_degree_two())),
        ("genus table", Some(secs(10)), Box::new(|_| genus_table())),
        ("bridge identity in degrees 4 and 8", Some(secs(10)), Box::new(|_| bridge())),
        ("K3 constants and c_theta loop", None, Box::new(|_| k3_suite())),
        ("k=2 sqrt(Ahat) and inequalities", Some(secs(5)), Box::new(k2_suite)),
        ("two-route curvature norm", None, Box::new(two_route_norm)),
        ("gl(2), gl(3) annihilate IHX", Some(secs(120)), Box::new(|_| oracle_annihilation())),
        ("sign laws on 1000 re-presentations", None, Box::new(sign_laws)),
        ("wheels on lines equal scaled pairings", Some(secs(60)), Box::new(|_| wheel_on_lines())),
        ("CLI golden files", None, Box::new(|_| golden_files())),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let mut result = check(&mut rng);
        let took = start.elapsed();
        if let (Ok(()), Some(limit)) = (&result, limit) {
            if took > limit {
                result = Err(format!("took {took:.2?}, limit {limit:?}"));
            }
        }
        let verdict = if result.is_ok() { "pass" } else { "FAIL" };
        println!("criterion {:>2} {verdict} {:>9.3}s  {name}", i + 1, took.as_secs_f64());
        if let Err(msg) = result {
            failed += 1;
            for line in msg.lines() {
                println!("    {line}");
            }
        }
    }
    println!("{} of 12 criteria pass", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
