//! The wheeling element Ω, the gluing operator Ĉ, the spoke-pairing sum S
//! and the degree-k wheeling check.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{ihx_relations, AlgebraError, Bound, GraphVector};
use crate::genus::{chern_to_power_sums, partitions, Genus, PowerSeries, PowerSumPolynomial};
use crate::graph::{line, theta, wheel, CanonicalGraph, Gluing, GraphError, Presentation, Sign};
use crate::pi::PiRational;
use crate::rational::{factorial, Q};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WheelingError {
    #[error("OddLegCount: a graph with {0} univalent vertices cannot be paired up")]
    OddLegCount(usize),
    #[error("BadPartition: {0}")]
    BadPartition(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `b₂, b₄, …, b_{2n}`: the even Taylor coefficients of
/// `(1/2) log(sinh(x/2)/(x/2))`.
pub fn b_coefficients(n_max: usize) -> Vec<Q> {
    let half = Q::new(BigInt::one(), BigInt::from(2));
    let log = PowerSeries::sinh_over_x(2 * n_max + 2).compose_scale(&half).log().expect("constant term 1").scale(&half);
    (1..=n_max).map(|n| log.coeff(2 * n)).collect()
}

/// Disjoint union of the wheels `w_{2λ₁} ⊔ … ⊔ w_{2λ_m}` in that order.
pub fn wheel_product(parts: &[usize]) -> Presentation {
    parts.iter().fold(Presentation::empty(), |acc, &n| acc.disjoint_union(&wheel(2 * n).expect("even wheel")))
}

/// `Ω = exp_∪(Σ b₂ₙ w₂ₙ)` through degree `k`, where `w₂ₙ` has degree `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaTruncation {
    pub k: usize,
    pub b: Vec<Q>,
    pub vector: GraphVector,
}

impl OmegaTruncation {
    /// Coefficient of `w_{2λ₁} ⊔ … ⊔ w_{2λ_m}` (in its concatenation
    /// orientation) for every partition `λ` of every degree up to `k`.
    pub fn partition_coefficients(&self) -> Vec<(Vec<usize>, Q)> {
        let mut out = Vec::new();
        for n in 0..=self.k {
            for parts in partitions(n) {
                let og = wheel_product(&parts).canonical();
                let c = match og.sign.sign() {
                    Some(Sign::Plus) => self.vector.coeff(&og.graph),
                    Some(Sign::Minus) => -self.vector.coeff(&og.graph),
                    None => Q::zero(),
                };
                out.push((parts, c));
            }
        }
        out
    }
}

impl fmt::Display for OmegaTruncation {
    /// `1 + (1/48)w2 + (1/4608)w2^2 + (-1/5760)w4`, grouped by degree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (parts, c) in self.partition_coefficients() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if parts.is_empty() {
                write!(f, "{c}")?;
                continue;
            }
            if !c.is_one() {
                write!(f, "({c})")?;
            }
            let mut i = 0;
            while i < parts.len() {
                let j = parts[i..].iter().take_while(|&&p| p == parts[i]).count();
                write!(f, "w{}", 2 * parts[i])?;
                if j > 1 {
                    write!(f, "^{j}")?;
                }
                i += j;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn spoke_degree(g: &CanonicalGraph) -> usize {
    g.trivalent_count() / 2
}

/// Product truncated to total degree `k`, with degree counted as half the
/// number of trivalent vertices.
fn product_truncated(a: &GraphVector, b: &GraphVector, k: usize) -> GraphVector {
    let mut out = GraphVector::zero();
    for (x, cx) in a.terms() {
        for (y, cy) in b.terms() {
            if spoke_degree(x) + spoke_degree(y) > k {
                continue;
            }
            let u = x.reference().disjoint_union(&y.reference()).canonical();
            out.add_oriented(&u, cx * cy);
        }
    }
    out
}

pub fn omega(k: usize, bound: &Bound) -> Result<OmegaTruncation, WheelingError> {
    bound.check(k)?;
    let b = b_coefficients(k);
    let mut x = GraphVector::zero();
    for (n, bn) in b.iter().enumerate() {
        x.add_presentation(&wheel(2 * (n + 1))?, bn.clone());
    }
    let mut total = GraphVector::one();
    let mut power = GraphVector::one();
    for m in 1..=k {
        power = product_truncated(&power, &x, k).scale(&Q::new(BigInt::one(), BigInt::from(m)));
        total = &total + &power;
    }
    Ok(OmegaTruncation { k, b, vector: total })
}

fn legs(p: &Presentation) -> Vec<usize> {
    (0..p.vertex_count()).filter(|&v| p.valences()[v] == 1).collect()
}

fn finish_into(out: &mut GraphVector, g: Gluing, coeff: &Q) {
    let (p, s) = g.finish();
    let c = if s == Sign::Minus { -coeff.clone() } else { coeff.clone() };
    out.add_presentation(&p, c);
}

/// `Ĉ(Γ)`: every way of welding all legs of `C` to distinct legs of `Γ`.
pub fn glue_hat(c: &GraphVector, g: &GraphVector) -> Result<GraphVector, WheelingError> {
    let mut out = GraphVector::zero();
    for (cg, cc) in c.terms() {
        for (gg, gc) in g.terms() {
            let coeff = cc * gc;
            glue_basis(&cg.reference(), &gg.reference(), &coeff, &mut out)?;
        }
    }
    Ok(out)
}

/// `Ĉ(Γ)` for single presentations, added into `out` with weight `coeff`.
pub fn glue_basis(c: &Presentation, g: &Presentation, coeff: &Q, out: &mut GraphVector) -> Result<(), WheelingError> {
    let shift = c.vertex_count();
    let union = c.disjoint_union(g);
    let from = legs(c);
    let to: Vec<usize> = legs(g).into_iter().map(|v| v + shift).collect();
    if from.len() > to.len() {
        return Ok(());
    }
    let mut used = vec![false; to.len()];
    let mut chosen = Vec::with_capacity(from.len());
    injections(&union, &from, &to, &mut used, &mut chosen, coeff, out)
}

fn injections(
    union: &Presentation,
    from: &[usize],
    to: &[usize],
    used: &mut [bool],
    chosen: &mut Vec<usize>,
    coeff: &Q,
    out: &mut GraphVector,
) -> Result<(), WheelingError> {
    if chosen.len() == from.len() {
        let mut g = Gluing::new(union);
        for (&u, &j) in from.iter().zip(chosen.iter()) {
            if !g.weld(u, to[j])? {
                return Ok(());
            }
        }
        finish_into(out, g, coeff);
        return Ok(());
    }
    for j in 0..to.len() {
        if used[j] {
            continue;
        }
        used[j] = true;
        chosen.push(j);
        injections(union, from, to, used, chosen, coeff, out)?;
        chosen.pop();
        used[j] = false;
    }
    Ok(())
}

/// `S(C)`: the sum over perfect matchings of the legs, welding each pair.
pub fn pair_spokes(c: &GraphVector) -> Result<GraphVector, WheelingError> {
    let mut out = GraphVector::zero();
    for (g, coeff) in c.terms() {
        pair_basis(&g.reference(), coeff, &mut out)?;
    }
    Ok(out)
}

pub fn pair_basis(p: &Presentation, coeff: &Q, out: &mut GraphVector) -> Result<(), WheelingError> {
    let l = legs(p);
    if l.len() % 2 == 1 {
        return Err(WheelingError::OddLegCount(l.len()));
    }
    let mut pairs = Vec::with_capacity(l.len() / 2);
    matchings(p, &l, &mut pairs, coeff, out)
}

fn matchings(
    p: &Presentation,
    rest: &[usize],
    pairs: &mut Vec<(usize, usize)>,
    coeff: &Q,
    out: &mut GraphVector,
) -> Result<(), WheelingError> {
    if rest.is_empty() {
        let mut g = Gluing::new(p);
        for &(u, w) in pairs.iter() {
            if !g.weld(u, w)? {
                return Ok(());
            }
        }
        finish_into(out, g, coeff);
        return Ok(());
    }
    let first = rest[0];
    for i in 1..rest.len() {
        pairs.push((first, rest[i]));
        let remaining: Vec<usize> =
            rest[1..].iter().enumerate().filter(|&(j, _)| j + 1 != i).map(|(_, &v)| v).collect();
        matchings(p, &remaining, pairs, coeff, out)?;
        pairs.pop();
    }
    Ok(())
}

/// `ℓ^k` as a vector.
pub fn lines(k: usize) -> GraphVector {
    GraphVector::from_presentation(&(0..k).fold(Presentation::empty(), |acc, _| acc.disjoint_union(&line())))
}

#[derive(Clone, Debug)]
pub struct WheelingReport {
    pub k: usize,
    /// Trivalent part of `Ω̂(ℓ^k)`.
    pub lhs: GraphVector,
    /// `(Θ/24)^k`.
    pub rhs: GraphVector,
    pub difference: GraphVector,
    pub residual: GraphVector,
    pub exact_before_reduction: bool,
}

impl WheelingReport {
    pub fn pass(&self) -> bool {
        self.residual.is_zero()
    }
}

impl fmt::Display for WheelingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exact_before_reduction {
            writeln!(f, "PASS (exact, no reduction needed)")
        } else if self.pass() {
            writeln!(f, "PASS (after IHX reduction)")
        } else {
            write!(f, "FAIL residual=\n{}", self.residual)
        }
    }
}

/// Checks that the trivalent part of `Ω̂(ℓ^k)` equals `(Θ/24)^k` modulo IHX.
pub fn wheeling_check(k: usize, bound: &Bound) -> Result<WheelingReport, WheelingError> {
    bound.check(k)?;
    let om = omega(k, bound)?;
    // only wheel products with exactly 2k spokes can use up every leg of ℓ^k
    let full = om.vector.filter(|g| g.univalent_count() == 2 * k);
    let lhs = glue_hat(&full, &lines(k))?.trivalent_part();
    let rhs = GraphVector::from_presentation(&theta()).scale(&Q::new(BigInt::one(), BigInt::from(24))).pow(k);
    let difference = &lhs - &rhs;
    let exact_before_reduction = difference.is_zero();
    let residual =
        if exact_before_reduction { difference.clone() } else { ihx_relations(k, bound)?.reduce(&difference)? };
    Ok(WheelingReport { k, lhs, rhs, difference, residual, exact_before_reduction })
}

/// The declared Rozansky-Witten value of `S(w_{2k₁} ⊔ … ⊔ w_{2k_m})`: the
/// coefficient `(−1)^m / ((8π²)^k k!)` and the monomial `s_{2k₁}⋯s_{2k_m}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharWeight {
    pub coeff: PiRational,
    pub monomial: Vec<usize>,
}

pub fn wheel_char_weight(parts: &[usize]) -> Result<CharWeight, WheelingError> {
    if parts.contains(&0) {
        return Err(WheelingError::BadPartition("parts must be positive".into()));
    }
    let k: usize = parts.iter().sum();
    let m = parts.len();
    let denom = BigInt::from(8).pow(k as u32) * factorial(k);
    let num = if m.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    let mut monomial: Vec<usize> = parts.iter().map(|&p| 2 * p).collect();
    monomial.sort_unstable();
    Ok(CharWeight { coeff: PiRational::new(Q::new(num, denom), -2 * k as i32), monomial })
}

/// Both sides of the identity linking Ω to the √Â genus, in power sums.
#[derive(Clone, Debug)]
pub struct BridgeCheck {
    pub k: usize,
    /// `(8π²)^k k! · Σ_λ Ω_λ · weight(λ)`.
    pub wheel_side: PowerSumPolynomial,
    /// Root-degree `2k` part of `exp(−Σ b₂ₙ s₂ₙ)`.
    pub series_side: PowerSumPolynomial,
    /// The √Â genus polynomial rewritten in power sums.
    pub genus_side: PowerSumPolynomial,
}

impl BridgeCheck {
    pub fn holds(&self) -> bool {
        self.wheel_side == self.series_side && self.series_side == self.genus_side
    }
}

pub fn bridge_identity(k: usize, bound: &Bound) -> Result<BridgeCheck, WheelingError> {
    let om = omega(k, bound)?;
    let scale = PiRational::new(Q::from_integer(BigInt::from(8).pow(k as u32) * factorial(k)), 2 * k as i32);
    let mut wheel_side = PowerSumPolynomial::zero();
    for (parts, c) in om.partition_coefficients() {
        if parts.iter().sum::<usize>() != k {
            continue;
        }
        let w = wheel_char_weight(&parts)?;
        let factor = w.coeff * scale.clone();
        debug_assert_eq!(factor.pi_power(), 0);
        wheel_side = wheel_side.add(&PowerSumPolynomial::monomial(w.monomial, c * factor.coeff()));
    }
    let mut exponent = PowerSumPolynomial::zero();
    for (n, bn) in om.b.iter().enumerate() {
        exponent = exponent.add(&PowerSumPolynomial::var(2 * (n + 1)).scale(&-bn.clone()));
    }
    let series_side = exponent.exp_truncated(2 * k).homogeneous(2 * k);
    let genus_side = chern_to_power_sums(&Genus::SqrtAHat.polynomial_with_odd(k)).homogeneous(2 * k);
    Ok(BridgeCheck { k, wheel_side, series_side, genus_side })
}
