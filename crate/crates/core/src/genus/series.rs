use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::GenusError;
use crate::rational::{factorial, Q};

/// A one-variable series known modulo `x^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Q>,
}

impl PowerSeries {
    /// Pads or truncates `coeffs` to exactly `order` terms.
    pub fn new(mut coeffs: Vec<Q>, order: usize) -> Self {
        coeffs.resize(order, Q::zero());
        Self { coeffs }
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![Q::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.coeffs.get(i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    fn same_order(&self, other: &Self) -> Result<usize, GenusError> {
        if self.order() != other.order() {
            return Err(GenusError::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(self.order())
    }

    fn require_constant(&self, want: &Q, op: &str) -> Result<(), GenusError> {
        if &self.coeff(0) != want {
            return Err(GenusError::BadConstantTerm(format!(
                "{op} needs constant term {want}, found {}",
                self.coeff(0)
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, GenusError> {
        let n = self.same_order(other)?;
        Ok(Self { coeffs: (0..n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect() })
    }

    pub fn scale(&self, q: &Q) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, GenusError> {
        let n = self.same_order(other)?;
        let mut out = vec![Q::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(Self { coeffs: out })
    }

    pub fn inverse(&self) -> Result<Self, GenusError> {
        let a0 = self.coeff(0);
        if a0.is_zero() {
            return Err(GenusError::BadConstantTerm("inverse needs a nonzero constant term".into()));
        }
        let n = self.order();
        let mut out: Vec<Q> = Vec::with_capacity(n);
        for i in 0..n {
            let mut s = if i == 0 { Q::one() } else { Q::zero() };
            for j in 1..=i {
                s -= &self.coeffs[j] * &out[i - j];
            }
            out.push(s / &a0);
        }
        Ok(Self { coeffs: out })
    }

    pub fn derivative_times_x(&self) -> Self {
        Self { coeffs: self.coeffs.iter().enumerate().map(|(i, c)| c * Q::from_integer(BigInt::from(i))).collect() }
    }

    /// `log` of a series with constant term 1, via `x L' = x F'/F`.
    pub fn log(&self) -> Result<Self, GenusError> {
        self.require_constant(&Q::one(), "log")?;
        let q = self.derivative_times_x().mul(&self.inverse()?)?;
        let coeffs = q
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i == 0 { Q::zero() } else { c / Q::from_integer(BigInt::from(i)) })
            .collect();
        Ok(Self { coeffs })
    }

    /// `exp` of a series with constant term 0, via `x E' = (x L') E`.
    pub fn exp(&self) -> Result<Self, GenusError> {
        self.require_constant(&Q::zero(), "exp")?;
        let n = self.order();
        let dl = self.derivative_times_x();
        let mut out: Vec<Q> = Vec::with_capacity(n);
        for i in 0..n {
            if i == 0 {
                out.push(Q::one());
                continue;
            }
            let mut s = Q::zero();
            for j in 1..=i {
                s += &dl.coeffs[j] * &out[i - j];
            }
            out.push(s / Q::from_integer(BigInt::from(i)));
        }
        Ok(Self { coeffs: out })
    }

    /// Square root with constant term 1.
    pub fn sqrt(&self) -> Result<Self, GenusError> {
        self.pow_rational(&Q::new(1.into(), 2.into()))
    }

    /// `F^t` for constant term 1, as `exp(t log F)`.
    pub fn pow_rational(&self, t: &Q) -> Result<Self, GenusError> {
        self.require_constant(&Q::one(), "a fractional power")?;
        self.log()?.scale(t).exp()
    }

    /// `F(x) ↦ F(q x)`.
    pub fn compose_scale(&self, q: &Q) -> Self {
        let mut p = Q::one();
        let mut coeffs = Vec::with_capacity(self.order());
        for c in &self.coeffs {
            coeffs.push(c * &p);
            p *= q;
        }
        Self { coeffs }
    }

    /// `sinh(x)/x`.
    pub fn sinh_over_x(order: usize) -> Self {
        let coeffs =
            (0..order).map(|i| if i % 2 == 1 { Q::zero() } else { Q::new(BigInt::one(), factorial(i + 1)) }).collect();
        Self { coeffs }
    }

    /// `(e^x - 1)/x`.
    pub fn expm1_over_x(order: usize) -> Self {
        Self { coeffs: (0..order).map(|i| Q::new(BigInt::one(), factorial(i + 1))).collect() }
    }

    /// Re-reads an even series in `x` as a series in `z = x²`.
    pub fn even_in_square(&self) -> Result<Self, GenusError> {
        if self.coeffs.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
            return Err(GenusError::BadConstantTerm("series is not even".into()));
        }
        let order = self.order().div_ceil(2);
        Ok(Self { coeffs: self.coeffs.iter().step_by(2).take(order).cloned().collect() })
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order())
    }
}
