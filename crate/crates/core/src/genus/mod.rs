//! Power series, genus polynomials in Chern and Pontryagin classes, and
//! Newton's identities.

mod poly;
mod series;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::rational::Q;

pub use poly::{
    monomial_name, parse_monomial, Basis, Chern, ChernPolynomial, Monomial, Poly, Pontryagin, PontryaginPolynomial,
    PowerSum, PowerSumPolynomial,
};
pub use series::PowerSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenusError {
    #[error("BadConstantTerm: {0}")]
    BadConstantTerm(String),
    #[error("OrderMismatch: series known to orders {left} and {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("OrderTooSmall: need {needed} series terms, have {found}")]
    OrderTooSmall { needed: usize, found: usize },
    #[error("DegreeMismatch: expected root degree {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("MissingMonomial: no value given for {0}")]
    MissingMonomial(String),
    #[error("OddChernClass: {0} involves an odd Chern class")]
    OddChernClass(String),
    #[error("UnknownSeries: `{0}` (expected ahat, todd or sqrt-ahat)")]
    UnknownSeries(String),
    #[error("BadMonomial: cannot read `{0}`")]
    BadMonomial(String),
}

/// Series length used for genus computations up to degree `k`.
pub fn default_order(k: usize) -> usize {
    2 * k + 2
}

/// `s_1, …, s_n` in Chern classes:
/// `s_n = Σ_{i<n} (−1)^{i−1} c_i s_{n−i} + (−1)^{n−1} n c_n`.
pub fn power_sums_in_chern(n: usize) -> Vec<ChernPolynomial> {
    let mut s: Vec<ChernPolynomial> = vec![ChernPolynomial::zero()];
    for m in 1..=n {
        let mut t = ChernPolynomial::var(m).scale(&sign_int(m - 1, m as i64));
        for i in 1..m {
            t = t.add(&ChernPolynomial::var(i).mul(&s[m - i]).scale(&sign_int(i - 1, 1)));
        }
        s.push(t);
    }
    s.remove(0);
    s
}

/// `c_1, …, c_n` in power sums: `c_n = (1/n) Σ_{i=1}^{n} (−1)^{i−1} c_{n−i} s_i`.
pub fn chern_in_power_sums(n: usize) -> Vec<PowerSumPolynomial> {
    let mut c: Vec<PowerSumPolynomial> = vec![PowerSumPolynomial::one()];
    for m in 1..=n {
        let mut t = PowerSumPolynomial::zero();
        for i in 1..=m {
            t = t.add(&c[m - i].mul(&PowerSumPolynomial::var(i)).scale(&sign_int(i - 1, 1)));
        }
        c.push(t.scale(&Q::new(BigInt::one(), BigInt::from(m))));
    }
    c.remove(0);
    c
}

fn sign_int(parity: usize, v: i64) -> Q {
    Q::from_integer(BigInt::from(if parity.is_multiple_of(2) { v } else { -v }))
}

fn max_index<B: Basis>(p: &Poly<B>) -> usize {
    p.terms().flat_map(|(m, _)| m.iter().copied()).max().unwrap_or(0)
}

pub fn power_sums_to_chern(p: &PowerSumPolynomial) -> ChernPolynomial {
    let s = power_sums_in_chern(max_index(p));
    p.substitute(|i| s[i - 1].clone())
}

pub fn chern_to_power_sums(p: &ChernPolynomial) -> PowerSumPolynomial {
    let c = chern_in_power_sums(max_index(p));
    p.substitute(|i| c[i - 1].clone())
}

/// Sets every odd Chern class to zero.
pub fn drop_odd_chern(p: &ChernPolynomial) -> ChernPolynomial {
    p.filter(|m| m.iter().all(|i| i % 2 == 0))
}

/// `p_0, …, p_k` with `Σ p_j = ∏(1 + x_i²)`:
/// `p_j = (−1)^j Σ_{a+b=2j} (−1)^a c_a c_b`.
pub fn pontryagin_from_chern(k: usize) -> Vec<ChernPolynomial> {
    let c = |i: usize| if i == 0 { ChernPolynomial::one() } else { ChernPolynomial::var(i) };
    (0..=k)
        .map(|j| {
            let mut t = ChernPolynomial::zero();
            for a in 0..=2 * j {
                t = t.add(&c(a).mul(&c(2 * j - a)).scale(&sign_int(a, 1)));
            }
            t.scale(&sign_int(j, 1))
        })
        .collect()
}

pub fn pontryagin_to_chern(p: &PontryaginPolynomial) -> ChernPolynomial {
    let table = pontryagin_from_chern(max_index(p));
    p.substitute(|j| table[j].clone())
}

/// `∏_i Q(x_i)` written in elementary symmetric functions of the roots,
/// all root degrees up to `max_degree`.
fn multiplicative_sequence(q: &PowerSeries, max_degree: usize) -> Result<ChernPolynomial, GenusError> {
    if q.order() <= max_degree {
        return Err(GenusError::OrderTooSmall { needed: max_degree + 1, found: q.order() });
    }
    let log = q.log()?;
    let mut sums = PowerSumPolynomial::zero();
    for n in 1..=max_degree {
        sums = sums.add(&PowerSumPolynomial::var(n).scale(&log.coeff(n)));
    }
    Ok(power_sums_to_chern(&sums.exp_truncated(max_degree)))
}

/// Root-degree `2k` component of the multiplicative sequence of `q` in
/// Chern classes, optionally with the odd classes set to zero.
pub fn genus_polynomial(q: &PowerSeries, k: usize, odd_chern_zero: bool) -> Result<ChernPolynomial, GenusError> {
    let p = multiplicative_sequence(q, 2 * k)?.homogeneous(2 * k);
    Ok(if odd_chern_zero { drop_odd_chern(&p) } else { p })
}

/// Degree-`k` component of the multiplicative sequence of a series in
/// `z = x²`, written in Pontryagin classes.
pub fn pontryagin_genus(qz: &PowerSeries, k: usize) -> Result<PontryaginPolynomial, GenusError> {
    let e = multiplicative_sequence(qz, k)?.homogeneous(k);
    let mut out = PontryaginPolynomial::zero();
    for (m, c) in e.terms() {
        out = out.add(&PontryaginPolynomial::monomial(m.clone(), c.clone()));
    }
    Ok(out)
}

/// The genera with a built-in characteristic series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Genus {
    AHat,
    Todd,
    SqrtAHat,
}

impl Genus {
    pub fn parse(name: &str) -> Result<Self, GenusError> {
        match name {
            "ahat" | "a-hat" => Ok(Self::AHat),
            "todd" => Ok(Self::Todd),
            "sqrt-ahat" | "sqrt_ahat" => Ok(Self::SqrtAHat),
            other => Err(GenusError::UnknownSeries(other.to_string())),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::AHat => "ahat",
            Self::Todd => "todd",
            Self::SqrtAHat => "sqrt-ahat",
        }
    }

    /// The characteristic series in a Chern root `x`.
    pub fn series(self, order: usize) -> PowerSeries {
        let half = Q::new(BigInt::one(), BigInt::from(2));
        let ahat = || PowerSeries::sinh_over_x(order).compose_scale(&half).inverse().expect("constant term 1");
        match self {
            Self::AHat => ahat(),
            // x/(1 − e^{−x}) = 1/((1 − e^{−x})/x)
            Self::Todd => {
                PowerSeries::expm1_over_x(order).compose_scale(&-Q::one()).inverse().expect("constant term 1")
            }
            Self::SqrtAHat => ahat().sqrt().expect("constant term 1"),
        }
    }

    /// Root-degree `2k` polynomial; odd Chern classes are set to zero.
    pub fn polynomial(self, k: usize) -> ChernPolynomial {
        genus_polynomial(&self.series(default_order(k)), k, true).expect("built-in series are valid")
    }

    pub fn polynomial_with_odd(self, k: usize) -> ChernPolynomial {
        genus_polynomial(&self.series(default_order(k)), k, false).expect("built-in series are valid")
    }
}

impl fmt::Display for Genus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Partitions of `n` into parts, each non-decreasing.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in min..=n {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 1, &mut Vec::new(), &mut out);
    out
}

/// Characteristic numbers of a manifold of complex dimension `2k` with
/// vanishing odd Chern classes: one value per top-degree monomial in even
/// Chern classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernData {
    k: usize,
    values: BTreeMap<Monomial, Q>,
}

impl ChernData {
    pub fn new(k: usize, values: impl IntoIterator<Item = (Monomial, Q)>) -> Result<Self, GenusError> {
        let mut map = BTreeMap::new();
        for (mut m, v) in values {
            m.sort_unstable();
            let name = monomial_name::<Chern>(&m);
            if m.iter().any(|i| i % 2 == 1) {
                return Err(GenusError::OddChernClass(name));
            }
            let d = ChernPolynomial::degree_of(&m);
            if d != 2 * k {
                return Err(GenusError::DegreeMismatch { expected: 2 * k, found: d });
            }
            map.insert(m, v);
        }
        Ok(Self { k, values: map })
    }

    /// Parses `name = value` pairs such as `("c2^2", "828")`.
    pub fn from_named<'a>(k: usize, pairs: impl IntoIterator<Item = (&'a str, Q)>) -> Result<Self, GenusError> {
        let mut values = Vec::new();
        for (name, v) in pairs {
            let m = parse_monomial::<Chern>(name).ok_or_else(|| GenusError::BadMonomial(name.to_string()))?;
            values.push((m, v));
        }
        Self::new(k, values)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn value(&self, m: &[usize]) -> Option<&Q> {
        self.values.get(m)
    }

    pub fn values(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.values.iter()
    }

    /// Every top-degree monomial in even Chern classes.
    pub fn required_monomials(k: usize) -> Vec<Monomial> {
        let mut ms: Vec<Monomial> = partitions(k).into_iter().map(|p| p.into_iter().map(|i| 2 * i).collect()).collect();
        ms.sort();
        ms
    }

    pub fn missing(&self) -> Vec<Monomial> {
        Self::required_monomials(self.k).into_iter().filter(|m| !self.values.contains_key(m)).collect()
    }
}

/// Pairs a top-degree polynomial with the fundamental class. Monomials with
/// an odd Chern class contribute zero.
pub fn evaluate(p: &ChernPolynomial, d: &ChernData) -> Result<Q, GenusError> {
    let mut total = Q::zero();
    for (m, c) in p.terms() {
        let deg = ChernPolynomial::degree_of(m);
        if deg != 2 * d.k {
            return Err(GenusError::DegreeMismatch { expected: 2 * d.k, found: deg });
        }
        if m.iter().any(|i| i % 2 == 1) {
            continue;
        }
        let v = d.value(m).ok_or_else(|| GenusError::MissingMonomial(monomial_name::<Chern>(m)))?;
        total += c * v;
    }
    Ok(total)
}
