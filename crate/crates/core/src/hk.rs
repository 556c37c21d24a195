//! Scalar identities for compact hyperkähler manifolds of real dimension
//! `4k`: the curvature norm from `√Â[M]`, the Θ^k characteristic number, the
//! constant c_Θ, and the standard checks on Chern numbers.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::genus::{evaluate, monomial_name, Chern, ChernData, ChernPolynomial, Genus, GenusError, Monomial};
use crate::pi::{exact_int_root, PiRational};
use crate::rational::{factorial, Q};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HkError {
    #[error(transparent)]
    Genus(#[from] GenusError),
    #[error("NonpositiveSqrtAhat: sqrt(Ahat)[M] = {0} is not positive, so no curvature norm satisfies the identity")]
    NonpositiveSqrtAhat(Q),
    #[error("MissingNorm: no ||R||^2 was given and none can be computed")]
    MissingNorm,
    #[error("NonpositiveVolume: the volume must be positive")]
    NonpositiveVolume,
    #[error("NonpositiveNorm: ||R||^2 must be positive")]
    NonpositiveNorm,
    #[error("BadDimension: k must be at least 1, got {0}")]
    BadDimension(usize),
}

/// A real number `coeff · (radicand · π^radicand_pi)^(1/index)`, or an exact
/// value when no root remains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormValue {
    Exact(PiRational),
    Surd { coeff: PiRational, radicand: BigInt, radicand_pi: i32, index: u32 },
}

// Trial divisors used to pull perfect powers out of a radicand.
const TRIAL_LIMIT: u64 = 100_000;

impl NormValue {
    /// Principal `k`-th root of a positive value.
    pub fn root(x: &PiRational, k: u32) -> Self {
        assert!(x.is_positive() && k >= 1);
        if let Some(r) = x.exact_root(k) {
            return Self::Exact(r);
        }
        let kk = k as i32;
        let outer_pi = x.pi_power().div_euclid(kk);
        let radicand_pi = x.pi_power().rem_euclid(kk);
        // p/q = (p q^{k-1}) / q^k
        let q = x.coeff().denom().clone();
        let mut rest = x.coeff().numer() * num_traits::pow(q.clone(), k as usize - 1);
        let mut outside = BigInt::one();
        let mut d = 2u64;
        while d <= TRIAL_LIMIT {
            let dk = num_traits::pow(BigInt::from(d), k as usize);
            if dk > rest {
                break;
            }
            while rest.is_multiple_of(&dk) {
                rest /= &dk;
                outside *= d;
            }
            d += 1;
        }
        if let Some(r) = exact_int_root(&rest, k) {
            outside *= r;
            rest = BigInt::one();
        }
        let coeff = PiRational::new(Q::new(outside, q), outer_pi);
        if rest.is_one() && radicand_pi == 0 {
            return Self::Exact(coeff);
        }
        Self::Surd { coeff, radicand: rest, radicand_pi, index: k }
    }

    pub fn scale(&self, s: &PiRational) -> Self {
        match self {
            Self::Exact(x) => Self::Exact(x.clone() * s.clone()),
            Self::Surd { coeff, radicand, radicand_pi, index } => Self::Surd {
                coeff: coeff.clone() * s.clone(),
                radicand: radicand.clone(),
                radicand_pi: *radicand_pi,
                index: *index,
            },
        }
    }

    /// `self^e` when it has no remaining root.
    pub fn pow_exact(&self, e: u32) -> Option<PiRational> {
        match self {
            Self::Exact(x) => Some(x.pow(e)),
            Self::Surd { coeff, radicand, radicand_pi, index } => {
                if !e.is_multiple_of(*index) {
                    return None;
                }
                let inner = PiRational::new(Q::from_integer(radicand.clone()), *radicand_pi);
                Some(coeff.pow(e) * inner.pow(e / index))
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Self::Exact(x) => x.to_f64(),
            Self::Surd { coeff, radicand, radicand_pi, index } => {
                let r = radicand.to_f64().unwrap_or(f64::NAN) * std::f64::consts::PI.powi(*radicand_pi);
                coeff.to_f64() * r.powf(1.0 / *index as f64)
            }
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Self::Exact(_))
    }

    pub fn render(&self, float: bool) -> String {
        if float {
            format_float(self.to_f64())
        } else {
            self.to_string()
        }
    }
}

impl fmt::Display for NormValue {
    /// `240*2^(1/2)*pi^2`; a radicand carrying π prints as `(3*pi)^(1/2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Exact(x) => write!(f, "{x}"),
            Self::Surd { coeff, radicand, radicand_pi, index } => {
                let c = coeff.coeff();
                let mut parts = Vec::new();
                if c == &-Q::one() {
                    write!(f, "-")?;
                } else if !c.is_one() {
                    parts.push(c.to_string());
                }
                let rad = match *radicand_pi {
                    0 => radicand.to_string(),
                    1 if radicand.is_one() => "pi".to_string(),
                    1 => format!("({radicand}*pi)"),
                    p if radicand.is_one() => format!("(pi^{p})"),
                    p => format!("({radicand}*pi^{p})"),
                };
                parts.push(format!("{rad}^(1/{index})"));
                match coeff.pi_power() {
                    0 => {}
                    1 => parts.push("pi".into()),
                    p => parts.push(format!("pi^{p}")),
                }
                write!(f, "{}", parts.join("*"))
            }
        }
    }
}

pub fn format_float(x: f64) -> String {
    format!("{x:.12e}")
}

pub fn render_q(q: &Q, float: bool) -> String {
    if float {
        format_float(q.to_f64().unwrap_or(f64::NAN))
    } else {
        q.to_string()
    }
}

pub fn render_pi(x: &PiRational, float: bool) -> String {
    if float {
        format_float(x.to_f64())
    } else {
        x.to_string()
    }
}

/// Input data for one manifold.
#[derive(Clone, Debug)]
pub struct ManifoldData {
    pub k: usize,
    pub chern: ChernData,
    /// Supplied values of monomials containing an odd Chern class, when nonzero.
    pub odd: BTreeMap<Monomial, Q>,
    pub volume: PiRational,
    pub norm_r_sq: Option<PiRational>,
    pub irreducible: bool,
}

impl ManifoldData {
    pub fn new(
        k: usize,
        monomials: impl IntoIterator<Item = (Monomial, Q)>,
        volume: PiRational,
        norm_r_sq: Option<PiRational>,
        irreducible: bool,
    ) -> Result<Self, HkError> {
        if k == 0 {
            return Err(HkError::BadDimension(k));
        }
        if !volume.is_positive() {
            return Err(HkError::NonpositiveVolume);
        }
        if norm_r_sq.as_ref().is_some_and(|n| !n.is_positive()) {
            return Err(HkError::NonpositiveNorm);
        }
        let mut even = Vec::new();
        let mut odd = BTreeMap::new();
        for (mut m, v) in monomials {
            m.sort_unstable();
            let d = ChernPolynomial::degree_of(&m);
            if d != 2 * k {
                return Err(GenusError::DegreeMismatch { expected: 2 * k, found: d }.into());
            }
            if m.iter().any(|i| i % 2 == 1) {
                if !v.is_zero() {
                    odd.insert(m, v);
                }
            } else {
                even.push((m, v));
            }
        }
        let chern = ChernData::new(k, even)?;
        if let Some(m) = chern.missing().first() {
            return Err(GenusError::MissingMonomial(monomial_name::<Chern>(m)).into());
        }
        Ok(Self { k, chern, odd, volume, norm_r_sq, irreducible })
    }

    fn number(&self, g: Genus) -> Q {
        evaluate(&g.polynomial(self.k), &self.chern).expect("data is complete")
    }
}

pub fn sqrt_ahat_number(d: &ManifoldData) -> Q {
    d.number(Genus::SqrtAHat)
}

pub fn ahat_number(d: &ManifoldData) -> Q {
    d.number(Genus::AHat)
}

pub fn todd_number(d: &ManifoldData) -> Q {
    d.number(Genus::Todd)
}

/// `χ(M) = c_{2k}[M]`.
pub fn euler_number(d: &ManifoldData) -> Q {
    d.chern.value(&[2 * d.k]).cloned().expect("data is complete")
}

/// `b_{Θ^k}(M) = 48^k k! √Â[M]`.
pub fn b_theta_k(d: &ManifoldData) -> Q {
    Q::from_integer(BigInt::from(48).pow(d.k as u32) * factorial(d.k)) * sqrt_ahat_number(d)
}

fn positive_sqrt_ahat(d: &ManifoldData) -> Result<Q, HkError> {
    let s = sqrt_ahat_number(d);
    if !s.is_positive() {
        return Err(HkError::NonpositiveSqrtAhat(s));
    }
    Ok(s)
}

/// `‖R‖² = 192π²k (vol^{k−1} √Â[M])^{1/k}`.
pub fn curvature_norm(d: &ManifoldData) -> Result<NormValue, HkError> {
    let s = positive_sqrt_ahat(d)?;
    let k = d.k as u32;
    let radicand = d.volume.pow(k - 1) * PiRational::rational(s);
    let front = PiRational::new(Q::from_integer(BigInt::from(192 * d.k)), 2);
    Ok(NormValue::root(&radicand, k).scale(&front))
}

/// The same norm from `b_{Θ^k} = k!/(4π²k)^k · ‖R‖^{2k} / vol^{k−1}`.
pub fn curvature_norm_via_b_theta(d: &ManifoldData) -> Result<NormValue, HkError> {
    positive_sqrt_ahat(d)?;
    let k = d.k as u32;
    let four_pi_sq_k = PiRational::new(Q::from_integer(BigInt::from(4 * d.k)), 2);
    let power = PiRational::rational(b_theta_k(d))
        * d.volume.pow(k - 1)
        * four_pi_sq_k.pow(k)
        * PiRational::rational(Q::new(BigInt::one(), factorial(d.k)));
    Ok(NormValue::root(&power, k))
}

/// `c_Θ = ‖R‖² / (2k vol)`, from the given norm or else the computed one.
pub fn c_theta(d: &ManifoldData) -> Result<NormValue, HkError> {
    let norm = match &d.norm_r_sq {
        Some(n) => NormValue::Exact(n.clone()),
        None => curvature_norm(d).map_err(|_| HkError::MissingNorm)?,
    };
    let vol_inv = d.volume.recip().ok_or(HkError::NonpositiveVolume)?;
    Ok(norm.scale(&(vol_inv * PiRational::rational(Q::new(BigInt::one(), BigInt::from(2 * d.k))))))
}

/// `b_{Θ^k} = k!/(2π²)^k c_Θ^k vol`, exact when `c_Θ^k` is.
pub fn b_theta_from_c_theta(c: &NormValue, d: &ManifoldData) -> Option<PiRational> {
    let k = d.k as u32;
    let ck = c.pow_exact(k)?;
    let two_pi_sq = PiRational::new(Q::from_integer(BigInt::from(2)), 2);
    Some(PiRational::rational(Q::from_integer(factorial(d.k))) * two_pi_sq.recip()?.pow(k) * ck * d.volume.clone())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Info,
    NotAsserted,
    NotApplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Pass => "pass",
            Self::Fail => "fail",
            Self::Info => "info",
            Self::NotAsserted => "not-asserted",
            Self::NotApplicable => "n/a",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub key: &'static str,
    pub status: Status,
    pub description: String,
}

#[derive(Clone, Debug)]
pub struct AnalysisReport {
    pub k: usize,
    pub sqrt_ahat: Q,
    pub ahat: Q,
    pub todd: Q,
    pub euler: Q,
    pub b_theta_k: Q,
    pub norm_r_sq: Option<NormValue>,
    pub norm_r_sq_given: Option<PiRational>,
    pub c_theta: Option<NormValue>,
    pub verdicts: Vec<Verdict>,
}

fn verdict(key: &'static str, ok: bool, description: String) -> Verdict {
    Verdict { key, status: if ok { Status::Pass } else { Status::Fail }, description }
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-12 * a.abs().max(b.abs())
}

pub fn analyze(d: &ManifoldData) -> AnalysisReport {
    let k = d.k;
    let kq = Q::from_integer(BigInt::from(k));
    let sqrt_ahat = sqrt_ahat_number(d);
    let ahat = ahat_number(d);
    let todd = todd_number(d);
    let euler = euler_number(d);
    let mut verdicts = Vec::new();

    let odd_names: Vec<String> = d.odd.keys().map(|m| monomial_name::<Chern>(m)).collect();
    verdicts.push(verdict(
        "odd_chern_vanish",
        odd_names.is_empty(),
        if odd_names.is_empty() {
            "odd Chern numbers vanish".into()
        } else {
            format!("nonzero odd Chern numbers: {}", odd_names.join(", "))
        },
    ));
    let target = &kq + Q::one();
    verdicts.push(verdict(
        "ahat_equals_k_plus_1",
        ahat == target && todd == ahat,
        format!("Ahat[M] = Td[M] = {ahat}, expected k+1 = {target}"),
    ));
    verdicts.push(verdict(
        "sqrt_ahat_positive",
        sqrt_ahat.is_positive(),
        format!("sqrt(Ahat)[M] = {sqrt_ahat} must be positive"),
    ));
    if k == 2 {
        let a1 = evaluate(&Genus::AHat.polynomial(1).pow(2), &d.chern).expect("data is complete");
        let a1_ok = a1 < Q::from_integer(12.into());
        let chi_ok = euler < Q::from_integer(3024.into());
        verdicts.push(verdict("ahat1_sq_lt_12", a1_ok, format!("Ahat_1^2[M] = {a1} < 12")));
        verdicts.push(verdict("euler_lt_3024", chi_ok, format!("chi(M) = {euler} < 3024")));
        verdicts.push(if ahat == target {
            verdict(
                "inequalities_agree",
                a1_ok == chi_ok,
                "with Ahat[M] = 3 the two inequalities are equivalent".into(),
            )
        } else {
            Verdict {
                key: "inequalities_agree",
                status: Status::NotApplicable,
                description: "equivalence needs Ahat[M] = 3".into(),
            }
        });
        let le = euler <= Q::from_integer(324.into());
        verdicts.push(Verdict {
            key: "beauville_euler_le_324",
            status: Status::Info,
            description: format!(
                "chi(M) = {euler} {} the known sharp bound 324",
                if le { "is within" } else { "exceeds" }
            ),
        });
    }

    let (norm_r_sq, c_theta_value) = if d.irreducible {
        let norm = curvature_norm(d).ok();
        if let Some(n) = &norm {
            let other = curvature_norm_via_b_theta(d).expect("positive sqrt(Ahat)");
            let same = if n.is_exact() && other.is_exact() { n == &other } else { close(n.to_f64(), other.to_f64()) };
            verdicts.push(verdict(
                "norm_routes_agree",
                same,
                "||R||^2 from sqrt(Ahat)[M] matches the value from b_theta_k".into(),
            ));
        }
        if let (Some(n), Some(g)) = (&norm, &d.norm_r_sq) {
            let same = match n {
                NormValue::Exact(x) => x == g,
                _ => close(n.to_f64(), g.to_f64()),
            };
            verdicts.push(verdict("norm_matches_given", same, format!("computed ||R||^2 = {n}, given {g}")));
        }
        let c = c_theta(d).ok();
        if let Some(c) = &c {
            if let Some(b) = b_theta_from_c_theta(c, d) {
                verdicts.push(verdict(
                    "c_theta_closes",
                    b == PiRational::rational(b_theta_k(d)),
                    format!("k!/(2pi^2)^k c_theta^k vol = {b}"),
                ));
            }
        }
        (norm, c)
    } else {
        verdicts.push(Verdict {
            key: "curvature_identities",
            status: Status::NotAsserted,
            description: "the manifold is not irreducible, so the curvature identities are not asserted".into(),
        });
        (None, None)
    };

    AnalysisReport {
        k,
        sqrt_ahat,
        ahat,
        todd,
        euler,
        b_theta_k: b_theta_k(d),
        norm_r_sq,
        norm_r_sq_given: d.norm_r_sq.clone(),
        c_theta: c_theta_value,
        verdicts,
    }
}

impl AnalysisReport {
    pub fn pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.status != Status::Fail)
    }

    fn values(&self, float: bool) -> Vec<(&'static str, String)> {
        let mut out = vec![
            ("k", self.k.to_string()),
            ("sqrt_ahat", render_q(&self.sqrt_ahat, float)),
            ("ahat", render_q(&self.ahat, float)),
            ("todd", render_q(&self.todd, float)),
            ("euler", render_q(&self.euler, float)),
            ("b_theta_k", render_q(&self.b_theta_k, float)),
        ];
        if let Some(n) = &self.norm_r_sq {
            out.push(("norm_R_sq", n.render(float)));
        }
        if let Some(g) = &self.norm_r_sq_given {
            out.push(("norm_R_sq_given", render_pi(g, float)));
        }
        if let Some(c) = &self.c_theta {
            out.push(("c_theta", c.render(float)));
        }
        out
    }

    /// Aligned `name value` lines followed by one line per check.
    pub fn render_text(&self, float: bool) -> String {
        let mut s = format!("hyperkahler analysis, k = {} (real dimension {})\n", self.k, 4 * self.k);
        for (key, v) in self.values(float).into_iter().skip(1) {
            s.push_str(&format!("  {key:<16}{v}\n"));
        }
        s.push_str("checks\n");
        for v in &self.verdicts {
            s.push_str(&format!("  [{}] {}: {}\n", v.status, v.key, v.description));
        }
        s.push_str(if self.pass() { "result: pass\n" } else { "result: fail\n" });
        s
    }

    /// `key = "value"` lines; check statuses appear under `verdicts.<key>`.
    pub fn render_kv(&self, float: bool) -> String {
        let mut s = String::new();
        for (key, v) in self.values(float) {
            if key == "k" {
                s.push_str(&format!("k = {v}\n"));
            } else {
                s.push_str(&format!("{key} = \"{v}\"\n"));
            }
        }
        for v in &self.verdicts {
            s.push_str(&format!("verdicts.{} = \"{}\"\n", v.key, v.status));
        }
        s
    }
}
