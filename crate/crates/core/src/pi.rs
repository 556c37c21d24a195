use std::fmt;
use std::ops::{Div, Mul, Neg};

use num_bigint::{BigInt, Sign as BigSign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::Q;

/// An exact value `coeff · π^pi_power`.
///
/// Zero is normalized to `pi_power = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PiRational {
    coeff: Q,
    pi_power: i32,
}

impl PiRational {
    pub fn new(coeff: Q, pi_power: i32) -> Self {
        let pi_power = if coeff.is_zero() { 0 } else { pi_power };
        Self { coeff, pi_power }
    }

    pub fn rational(coeff: Q) -> Self {
        Self::new(coeff, 0)
    }

    pub fn one() -> Self {
        Self::rational(Q::one())
    }

    pub fn coeff(&self) -> &Q {
        &self.coeff
    }

    pub fn pi_power(&self) -> i32 {
        self.pi_power
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.coeff.is_positive()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = out * self.clone();
        }
        out
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::new(self.coeff.recip(), -self.pi_power))
    }

    /// Sum of two values carrying the same power of π.
    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(other.clone());
        }
        if other.is_zero() {
            return Some(self.clone());
        }
        (self.pi_power == other.pi_power).then(|| Self::new(&self.coeff + &other.coeff, self.pi_power))
    }

    /// Exact `n`-th root, when both the rational part is a perfect `n`-th
    /// power and `n` divides the π exponent. Negative values have no root here.
    pub fn exact_root(&self, n: u32) -> Option<Self> {
        if n == 0 || self.coeff.is_negative() || self.pi_power % n as i32 != 0 {
            return None;
        }
        let num = exact_int_root(self.coeff.numer(), n)?;
        let den = exact_int_root(self.coeff.denom(), n)?;
        Some(Self::new(Q::new(num, den), self.pi_power / n as i32))
    }

    pub fn to_f64(&self) -> f64 {
        let c = self.coeff.to_f64().unwrap_or(f64::NAN);
        c * std::f64::consts::PI.powi(self.pi_power)
    }

    /// Parses `q`, `q*pi^n`, `pi^n`, `q*pi`, `pi`.
    pub fn parse(s: &str) -> Option<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (coeff_part, pi_part) = match s.find("pi") {
            Some(idx) => {
                let head = s[..idx].trim_end_matches('*');
                (head.to_string(), Some(s[idx + 2..].to_string()))
            }
            None => (s.clone(), None),
        };
        let coeff = match coeff_part.as_str() {
            "" => Q::one(),
            "-" => -Q::one(),
            c => crate::rational::parse_rational(c)?,
        };
        let pi_power = match pi_part.as_deref() {
            None => 0,
            Some("") => 1,
            Some(p) => p.strip_prefix('^')?.parse().ok()?,
        };
        Some(Self::new(coeff, pi_power))
    }
}

pub(crate) fn exact_int_root(n: &BigInt, k: u32) -> Option<BigInt> {
    if n.sign() == BigSign::Minus {
        return None;
    }
    let r = n.nth_root(k);
    (num_traits::pow(r.clone(), k as usize) == *n).then_some(r)
}

impl Mul for PiRational {
    type Output = PiRational;
    fn mul(self, rhs: Self) -> Self {
        Self::new(self.coeff * rhs.coeff, self.pi_power + rhs.pi_power)
    }
}

impl Mul<Q> for PiRational {
    type Output = PiRational;
    fn mul(self, rhs: Q) -> Self {
        Self::new(self.coeff * rhs, self.pi_power)
    }
}

impl Div for PiRational {
    type Output = PiRational;
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero(), "division by zero");
        Self::new(self.coeff / rhs.coeff, self.pi_power - rhs.pi_power)
    }
}

impl Neg for PiRational {
    type Output = PiRational;
    fn neg(self) -> Self {
        Self::new(-self.coeff, self.pi_power)
    }
}

impl From<Q> for PiRational {
    fn from(q: Q) -> Self {
        Self::rational(q)
    }
}

impl fmt::Display for PiRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pi_power == 0 {
            return write!(f, "{}", self.coeff);
        }
        let pi = if self.pi_power == 1 { "pi".to_string() } else { format!("pi^{}", self.pi_power) };
        if self.coeff.is_one() {
            write!(f, "{pi}")
        } else if (-self.coeff.clone()).is_one() {
            write!(f, "-{pi}")
        } else {
            write!(f, "{}*{pi}", self.coeff)
        }
    }
}
