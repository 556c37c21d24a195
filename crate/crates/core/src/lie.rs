//! Weight systems of metric Lie algebras on trivalent graphs.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::GraphVector;
use crate::graph::{vertex_edge_to_cyclic, Presentation, Sign};
use crate::rational::{int, Q};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("UnknownName: no built-in Lie algebra called `{0}`")]
    UnknownName(String),
    #[error("NotTrivalent: weight systems only evaluate graphs without univalent vertices")]
    NotTrivalent,
    #[error("InvalidAlgebra: {0}")]
    InvalidAlgebra(String),
}

/// A Lie algebra with an invariant nondegenerate symmetric form, stored as
/// the lowered structure tensor `f_abc = B([e_a, e_b], e_c)` and the inverse
/// of the form.
#[derive(Clone, Debug)]
pub struct MetricLieAlgebra {
    name: String,
    dim: usize,
    bracket: Vec<Q>,
    form: Vec<Q>,
    lowered: Vec<Q>,
    inverse: Vec<Q>,
    // nonzero entries of `lowered`
    entries: Vec<([usize; 3], Q)>,
}

impl MetricLieAlgebra {
    /// `bracket[(a*d + b)*d + c]` is the coefficient of `e_c` in `[e_a, e_b]`;
    /// `form[a*d + b]` is `B(e_a, e_b)`.
    pub fn new(name: &str, dim: usize, bracket: Vec<Q>, form: Vec<Q>) -> Result<Self, LieError> {
        let d = dim;
        if bracket.len() != d * d * d || form.len() != d * d {
            return Err(LieError::InvalidAlgebra("table sizes do not match the dimension".into()));
        }
        let c = |a: usize, b: usize, e: usize| &bracket[(a * d + b) * d + e];
        for a in 0..d {
            for b in 0..d {
                if form[a * d + b] != form[b * d + a] {
                    return Err(LieError::InvalidAlgebra("form is not symmetric".into()));
                }
                for e in 0..d {
                    if c(a, b, e) != &-c(b, a, e).clone() {
                        return Err(LieError::InvalidAlgebra("bracket is not antisymmetric".into()));
                    }
                }
            }
        }
        // Jacobi: [[a,b],e] + [[b,e],a] + [[e,a],b] = 0
        for a in 0..d {
            for b in 0..d {
                for e in 0..d {
                    for out in 0..d {
                        let mut s = Q::zero();
                        for m in 0..d {
                            s += c(a, b, m) * c(m, e, out);
                            s += c(b, e, m) * c(m, a, out);
                            s += c(e, a, m) * c(m, b, out);
                        }
                        if !s.is_zero() {
                            return Err(LieError::InvalidAlgebra("Jacobi identity fails".into()));
                        }
                    }
                }
            }
        }
        let mut lowered = vec![Q::zero(); d * d * d];
        for a in 0..d {
            for b in 0..d {
                for e in 0..d {
                    let mut s = Q::zero();
                    for m in 0..d {
                        s += c(a, b, m) * &form[m * d + e];
                    }
                    lowered[(a * d + b) * d + e] = s;
                }
            }
        }
        // invariance of the form makes the lowered tensor totally antisymmetric
        for a in 0..d {
            for b in 0..d {
                for e in 0..d {
                    if lowered[(a * d + b) * d + e] != lowered[(b * d + e) * d + a] {
                        return Err(LieError::InvalidAlgebra("form is not invariant".into()));
                    }
                }
            }
        }
        let inverse = invert(d, &form).ok_or_else(|| LieError::InvalidAlgebra("form is degenerate".into()))?;
        let entries = (0..d * d * d)
            .filter(|&i| !lowered[i].is_zero())
            .map(|i| ([i / (d * d), i / d % d, i % d], lowered[i].clone()))
            .collect();
        Ok(Self { name: name.to_string(), dim, bracket, form, lowered, inverse, entries })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bracket(&self, a: usize, b: usize, c: usize) -> &Q {
        &self.bracket[(a * self.dim + b) * self.dim + c]
    }

    pub fn form(&self, a: usize, b: usize) -> &Q {
        &self.form[a * self.dim + b]
    }

    pub fn lowered(&self, a: usize, b: usize, c: usize) -> &Q {
        &self.lowered[(a * self.dim + b) * self.dim + c]
    }

    pub fn inverse_form(&self, a: usize, b: usize) -> &Q {
        &self.inverse[a * self.dim + b]
    }

    /// Same algebra with the form multiplied by `t`.
    pub fn rescaled(&self, t: &Q) -> Result<Self, LieError> {
        let form = self.form.iter().map(|x| x * t).collect();
        Self::new(&self.name, self.dim, self.bracket.clone(), form)
    }

    /// The abelian algebra of dimension `d` with the identity form.
    pub fn abelian(d: usize) -> Self {
        let mut form = vec![Q::zero(); d * d];
        for i in 0..d {
            form[i * d + i] = Q::one();
        }
        Self::new(&format!("abelian({d})"), d, vec![Q::zero(); d * d * d], form).expect("abelian algebra is valid")
    }

    /// Basis `e, f, h` with the trace form of the defining representation.
    pub fn sl2() -> Self {
        let d = 3;
        let mut bracket = vec![Q::zero(); 27];
        let mut set = |a: usize, b: usize, c: usize, v: i64| {
            bracket[(a * d + b) * d + c] = int(v);
            bracket[(b * d + a) * d + c] = int(-v);
        };
        // [h,e] = 2e, [h,f] = -2f, [e,f] = h
        set(2, 0, 0, 2);
        set(2, 1, 1, -2);
        set(0, 1, 2, 1);
        let mut form = vec![Q::zero(); 9];
        form[1] = Q::one();
        form[3] = Q::one();
        form[8] = int(2);
        Self::new("sl2", d, bracket, form).expect("sl2 is valid")
    }

    /// Matrix units `E_ij` (index `i*n + j`) with the trace form.
    pub fn gl(n: usize) -> Self {
        let d = n * n;
        let mut bracket = vec![Q::zero(); d * d * d];
        let mut form = vec![Q::zero(); d * d];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let a = i * n + j;
                        let b = k * n + l;
                        // [E_ij, E_kl] = δ_jk E_il − δ_li E_kj
                        if j == k {
                            bracket[(a * d + b) * d + i * n + l] += Q::one();
                        }
                        if l == i {
                            bracket[(a * d + b) * d + k * n + j] -= Q::one();
                        }
                        if j == k && i == l {
                            form[a * d + b] = Q::one();
                        }
                    }
                }
            }
        }
        Self::new(&format!("gl({n})"), d, bracket, form).expect("gl(n) is valid")
    }

    /// Accepts `abelian(d)`, `abelianD`, `sl2`, `gl(N)` and `glN`.
    pub fn builtin(name: &str) -> Result<Self, LieError> {
        let s: String = name.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_lowercase();
        let arg = |prefix: &str| -> Option<usize> {
            let rest = s.strip_prefix(prefix)?;
            let rest = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(rest);
            rest.parse().ok()
        };
        if s == "sl2" || s == "sl(2)" {
            return Ok(Self::sl2());
        }
        if let Some(d) = arg("abelian") {
            if (1..=16).contains(&d) {
                return Ok(Self::abelian(d));
            }
        }
        if let Some(n) = arg("gl") {
            if (1..=4).contains(&n) {
                return Ok(Self::gl(n));
            }
        }
        Err(LieError::UnknownName(name.to_string()))
    }

    /// Contracts one lowered structure tensor per vertex, read in the cyclic
    /// order of its flags, with the inverse form along every edge.
    pub fn weight(&self, p: &Presentation) -> Result<Q, LieError> {
        if !p.is_trivalent() {
            return Err(LieError::NotTrivalent);
        }
        let g = p.graph();
        let (cyclic, sign) =
            vertex_edge_to_cyclic(&g, &p.orientation()).map_err(|e| LieError::InvalidAlgebra(e.to_string()))?;
        let flags: Vec<[(usize, u8); 3]> = cyclic
            .cycles
            .iter()
            .map(|c| {
                let c = c.expect("trivalent vertex carries a cycle");
                [(c[0].edge, c[0].end), (c[1].edge, c[1].end), (c[2].edge, c[2].end)]
            })
            .collect();
        let mut labels = vec![[usize::MAX; 2]; g.edge_count()];
        let total = self.contract(&flags, 0, &mut labels);
        Ok(if sign == Sign::Minus { -total } else { total })
    }

    fn contract(&self, flags: &[[(usize, u8); 3]], v: usize, labels: &mut [[usize; 2]]) -> Q {
        if v == flags.len() {
            return Q::one();
        }
        let mut total = Q::zero();
        'entries: for (idx, val) in &self.entries {
            let mut factor = val.clone();
            for (slot, &(e, end)) in flags[v].iter().enumerate() {
                let other = labels[e][1 - end as usize];
                if other != usize::MAX {
                    let (t, h) = if end == 0 { (idx[slot], other) } else { (other, idx[slot]) };
                    let w = self.inverse_form(t, h);
                    if w.is_zero() {
                        continue 'entries;
                    }
                    factor *= w;
                }
            }
            for (slot, &(e, end)) in flags[v].iter().enumerate() {
                labels[e][end as usize] = idx[slot];
            }
            total += factor * self.contract(flags, v + 1, labels);
            for &(e, end) in &flags[v] {
                labels[e][end as usize] = usize::MAX;
            }
        }
        total
    }

    /// Linear extension over the reference presentations of `v`.
    pub fn weight_vector(&self, v: &GraphVector) -> Result<Q, LieError> {
        let mut total = Q::zero();
        for (g, c) in v.terms() {
            total += c * self.weight(&g.reference())?;
        }
        Ok(total)
    }
}

fn invert(d: usize, m: &[Q]) -> Option<Vec<Q>> {
    let mut a: Vec<Vec<Q>> = (0..d)
        .map(|i| {
            let mut row = m[i * d..(i + 1) * d].to_vec();
            row.extend((0..d).map(|j| if i == j { Q::one() } else { Q::zero() }));
            row
        })
        .collect();
    for col in 0..d {
        let piv = (col..d).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let inv = Q::one() / &a[col][col];
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        let pivot = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= &f * p;
                }
            }
        }
    }
    Some(a.into_iter().flat_map(|row| row[d..].to_vec()).collect())
}

/// Rank over ℚ of a matrix given by rows.
pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = &row[c] / &pivot[c];
                for (x, p) in row[c..cols].iter_mut().zip(&pivot[c..cols]) {
                    *x -= &f * p;
                }
            }
        }
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::theta;

    #[test]
    fn builtins_validate() {
        assert_eq!(MetricLieAlgebra::builtin("gl(2)").unwrap().dim(), 4);
        assert_eq!(MetricLieAlgebra::builtin("gl3").unwrap().dim(), 9);
        assert_eq!(MetricLieAlgebra::builtin("abelian(3)").unwrap().dim(), 3);
        assert_eq!(MetricLieAlgebra::builtin("sl2").unwrap().dim(), 3);
        assert!(matches!(MetricLieAlgebra::builtin("e8"), Err(LieError::UnknownName(_))));
    }

    #[test]
    fn reject_non_jacobi() {
        // [e0,e1] = e2, [e2,e0] = e2, [e1,e2] = e1 is antisymmetric but not Lie
        let mut bracket = vec![Q::zero(); 27];
        let mut set = |a: usize, b: usize, c: usize| {
            bracket[(a * 3 + b) * 3 + c] = Q::one();
            bracket[(b * 3 + a) * 3 + c] = -Q::one();
        };
        set(0, 1, 2);
        set(2, 0, 2);
        set(1, 2, 1);
        let mut form = vec![Q::zero(); 9];
        for i in 0..3 {
            form[i * 3 + i] = Q::one();
        }
        assert!(MetricLieAlgebra::new("x", 3, bracket, form).is_err());
    }

    #[test]
    fn theta_values() {
        let t = theta();
        assert_eq!(MetricLieAlgebra::abelian(3).weight(&t).unwrap(), Q::zero());
        assert!(!MetricLieAlgebra::gl(2).weight(&t).unwrap().is_zero());
        let w = MetricLieAlgebra::sl2().weight(&t).unwrap();
        assert_eq!(MetricLieAlgebra::sl2().weight(&t.reverse_edge(1)).unwrap(), -w);
    }

    #[test]
    fn legs_rejected() {
        assert_eq!(MetricLieAlgebra::sl2().weight(&crate::graph::line()), Err(LieError::NotTrivalent));
    }

    #[test]
    fn ihx_relations_are_annihilated() {
        use crate::algebra::{ihx_relations, Bound};
        let algebras = [MetricLieAlgebra::sl2(), MetricLieAlgebra::gl(2), MetricLieAlgebra::gl(3)];
        for k in 1..=2 {
            let r = ihx_relations(k, &Bound::default()).unwrap();
            for rel in r.relations() {
                for l in &algebras {
                    assert_eq!(l.weight_vector(rel).unwrap(), Q::zero(), "{} on\n{rel}", l.name());
                }
            }
        }
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(rank(&[vec![int(1), int(2)], vec![int(2), int(4)]]), 1);
        assert_eq!(rank(&[vec![int(1), int(0)], vec![int(0), int(4)]]), 2);
        assert_eq!(rank(&[]), 0);
    }
}
