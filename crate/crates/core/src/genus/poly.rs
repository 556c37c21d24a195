use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::Q;

/// Names and weights of the generators of a polynomial ring.
pub trait Basis: Clone + fmt::Debug + PartialEq + Eq {
    const PREFIX: &'static str;
    /// Degree of generator `i` counted in Chern roots.
    fn weight(i: usize) -> usize;
}

/// Chern classes `c_i` of root degree `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chern;
/// Power sums `s_i` of the Chern roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSum;
/// Pontryagin classes `p_j`, root degree `2j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pontryagin;

impl Basis for Chern {
    const PREFIX: &'static str = "c";
    fn weight(i: usize) -> usize {
        i
    }
}

impl Basis for PowerSum {
    const PREFIX: &'static str = "s";
    fn weight(i: usize) -> usize {
        i
    }
}

impl Basis for Pontryagin {
    const PREFIX: &'static str = "p";
    fn weight(i: usize) -> usize {
        2 * i
    }
}

/// A monomial as its non-decreasing sequence of generator indices,
/// e.g. `[2, 2, 4]` is `c2^2 c4`.
pub type Monomial = Vec<usize>;

/// Polynomial over ℚ in the generators of `B`, graded by root degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<B: Basis> {
    terms: BTreeMap<Monomial, Q>,
    basis: PhantomData<B>,
}

pub type ChernPolynomial = Poly<Chern>;
pub type PowerSumPolynomial = Poly<PowerSum>;
pub type PontryaginPolynomial = Poly<Pontryagin>;

impl<B: Basis> Default for Poly<B> {
    fn default() -> Self {
        Self { terms: BTreeMap::new(), basis: PhantomData }
    }
}

impl<B: Basis> Poly<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(q: Q) -> Self {
        Self::monomial(Vec::new(), q)
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn var(i: usize) -> Self {
        Self::monomial(vec![i], Q::one())
    }

    pub fn monomial(mut m: Monomial, q: Q) -> Self {
        m.sort_unstable();
        let mut p = Self::zero();
        p.add_term(m, q);
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, q: Q) {
        if q.is_zero() {
            return;
        }
        let c = self.terms.entry(m.clone()).or_insert_with(Q::zero);
        *c += q;
        if c.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &[usize]) -> Q {
        let mut m = m.to_vec();
        m.sort_unstable();
        self.terms.get(&m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_of(m: &[usize]) -> usize {
        m.iter().map(|&i| B::weight(i)).sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, q: &Q) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * q);
        }
        out
    }

    /// Product with every term of root degree above `max_degree` dropped.
    pub fn mul_truncated(&self, other: &Self, max_degree: usize) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            let da = Self::degree_of(a);
            for (b, y) in &other.terms {
                if da + Self::degree_of(b) > max_degree {
                    continue;
                }
                let mut m = a.clone();
                m.extend_from_slice(b);
                m.sort_unstable();
                out.add_term(m, x * y);
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_truncated(other, usize::MAX)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Component of root degree `d`.
    pub fn homogeneous(&self, d: usize) -> Self {
        self.filter(|m| Self::degree_of(m) == d)
    }

    pub fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> Self {
        Self {
            terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
            basis: PhantomData,
        }
    }

    /// Largest root degree of a term, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| Self::degree_of(m)).max()
    }

    /// `exp(self)` up to root degree `max_degree`; `self` must have no
    /// constant term.
    pub fn exp_truncated(&self, max_degree: usize) -> Self {
        debug_assert!(self.coeff(&[]).is_zero());
        let mut out = Self::one();
        let mut power = Self::one();
        for m in 1..=max_degree {
            power = power.mul_truncated(self, max_degree).scale(&Q::new(BigInt::one(), BigInt::from(m)));
            if power.is_zero() {
                break;
            }
            out = out.add(&power);
        }
        out
    }

    /// Replaces generator `i` by `images(i)`.
    pub fn substitute<C: Basis>(&self, images: impl Fn(usize) -> Poly<C>) -> Poly<C> {
        let mut out = Poly::<C>::zero();
        for (m, c) in &self.terms {
            let mut t = Poly::<C>::constant(c.clone());
            for &i in m {
                t = t.mul(&images(i));
            }
            out = out.add(&t);
        }
        out
    }
}

impl<B: Basis> fmt::Display for Poly<B> {
    /// Terms in lexicographic order of their index sequences, e.g.
    /// `(7/5760)c2^2 + (-1/1440)c4`. A coefficient of 1 is left out;
    /// constants print bare; the zero polynomial prints `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            if m.is_empty() {
                write!(f, "{c}")?;
                continue;
            }
            if !c.is_one() {
                write!(f, "({c})")?;
            }
            write!(f, "{}", monomial_name::<B>(m))?;
        }
        Ok(())
    }
}

/// `c2^2c4` style name of a monomial.
pub fn monomial_name<B: Basis>(m: &[usize]) -> String {
    let mut out = String::new();
    let mut i = 0;
    while i < m.len() {
        let j = m[i..].iter().take_while(|&&x| x == m[i]).count();
        out.push_str(B::PREFIX);
        out.push_str(&m[i].to_string());
        if j > 1 {
            out.push('^');
            out.push_str(&j.to_string());
        }
        i += j;
    }
    out
}

/// Parses names like `c2^2`, `c2^2c4`, `c2*c4` or `c2c2`.
pub fn parse_monomial<B: Basis>(s: &str) -> Option<Monomial> {
    let mut m = Vec::new();
    let s = s.trim();
    let mut rest = s;
    if rest.is_empty() {
        return None;
    }
    while !rest.is_empty() {
        rest = rest.strip_prefix('*').unwrap_or(rest);
        rest = rest.strip_prefix(B::PREFIX)?;
        let digits = rest.chars().take_while(|c| c.is_ascii_digit()).count();
        let idx: usize = rest[..digits].parse().ok()?;
        if idx == 0 {
            return None;
        }
        rest = &rest[digits..];
        let mut e = 1;
        if let Some(r) = rest.strip_prefix('^') {
            let d = r.chars().take_while(|c| c.is_ascii_digit()).count();
            e = r[..d].parse().ok()?;
            rest = &r[d..];
        }
        m.extend(std::iter::repeat_n(idx, e));
    }
    m.sort_unstable();
    Some(m)
}
