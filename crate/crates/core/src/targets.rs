//! Target algebras for partial actions, with the predicates the
//! classification needs: centers, central elements and nilpotency.
//!
//! Infinite-dimensional targets are replaced by finite quotients: the
//! polynomial algebra `k[z]` becomes `k[z]/(z^m)`. Centrality and nilpotency of
//! the chosen `w` survive the truncation.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cyclotomic::CycNum;
use crate::hopf::{FinAlgebra, HopfError};
use crate::linalg::{self, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TargetError {
    #[error("size parameter must be at least 1, got {0}")]
    TooSmall(u32),
    #[error("cannot parse target spec `{0}` (expected field, matrix:m, truncpoly:m or group:m)")]
    BadSpec(String),
    #[error("cannot parse element `{expr}`: {reason}")]
    BadElement { expr: String, reason: String },
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

/// A finite-dimensional algebra used as the target of an action.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TargetAlgebra {
    pub alg: FinAlgebra,
    /// Declared by the constructor, never computed: true when the only
    /// idempotents are 0 and 1.
    pub trivial_idempotents: bool,
    pub description: String,
}

impl TargetAlgebra {
    pub fn new(alg: FinAlgebra, trivial_idempotents: bool, description: impl Into<String>) -> Self {
        TargetAlgebra {
            alg,
            trivial_idempotents,
            description: description.into(),
        }
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn conductor(&self) -> u32 {
        self.alg.conductor()
    }

    pub fn embed(&self, conductor: u32) -> Result<Self, TargetError> {
        Ok(TargetAlgebra {
            alg: self.alg.embed(conductor)?,
            trivial_idempotents: self.trivial_idempotents,
            description: self.description.clone(),
        })
    }

    pub fn one(&self) -> &Vector {
        self.alg.unit()
    }

    pub fn basis(&self, i: usize) -> Vector {
        self.alg.basis(i)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.alg.labels().iter().position(|l| l == label)
    }

    pub fn element(&self, label: &str) -> Option<Vector> {
        self.index_of(label).map(|i| self.basis(i))
    }
}

fn rational(conductor: u32, v: i64) -> CycNum {
    CycNum::from_int(conductor, v)
}

/// The base field `k`.
pub fn field_target() -> TargetAlgebra {
    let alg = FinAlgebra::from_products(1, vec!["1".into()], vec![CycNum::one(1)], |_, _| vec![CycNum::one(1)])
        .expect("one-dimensional table");
    TargetAlgebra::new(alg, true, "base field")
}

/// `M_m(k)` with matrix units `e{i}{j}`, 1-based, at index `(i−1)m + (j−1)`.
pub fn matrix_target(m: u32) -> Result<TargetAlgebra, TargetError> {
    if m < 1 {
        return Err(TargetError::TooSmall(m));
    }
    let m = m as usize;
    let d = m * m;
    let labels = (0..d).map(|k| format!("e{}{}", k / m + 1, k % m + 1)).collect();
    let mut unit = linalg::zero_vector(d, 1);
    for i in 0..m {
        unit[i * m + i] = CycNum::one(1);
    }
    let alg = FinAlgebra::from_products(1, labels, unit, |a, b| {
        let mut v = linalg::zero_vector(d, 1);
        let (i, j) = (a / m, a % m);
        let (k, l) = (b / m, b % m);
        if j == k {
            v[i * m + l] = CycNum::one(1);
        }
        v
    })?;
    Ok(TargetAlgebra::new(alg, m == 1, format!("{m}x{m} matrices")))
}

/// `k[z]/(z^m)` with basis `1, z, z^2, …`.
pub fn trunc_poly_target(m: u32) -> Result<TargetAlgebra, TargetError> {
    if m < 1 {
        return Err(TargetError::TooSmall(m));
    }
    let d = m as usize;
    let labels = (0..d).map(power_label("z")).collect();
    let alg = FinAlgebra::from_products(1, labels, linalg::basis_vector(d, 0, 1), |a, b| {
        let mut v = linalg::zero_vector(d, 1);
        if a + b < d {
            v[a + b] = rational(1, 1);
        }
        v
    })?;
    Ok(TargetAlgebra::new(alg, true, format!("k[z]/(z^{m})")))
}

/// The group algebra `kC_m` with basis `1, g, g^2, …`.
pub fn group_target(m: u32) -> Result<TargetAlgebra, TargetError> {
    if m < 1 {
        return Err(TargetError::TooSmall(m));
    }
    let d = m as usize;
    let labels = (0..d).map(power_label("g")).collect();
    let alg = FinAlgebra::from_products(1, labels, linalg::basis_vector(d, 0, 1), |a, b| {
        linalg::basis_vector(d, (a + b) % d, 1)
    })?;
    Ok(TargetAlgebra::new(alg, m == 1, format!("group algebra of C{m}")))
}

fn power_label(var: &'static str) -> impl Fn(usize) -> String {
    move |k| match k {
        0 => "1".to_string(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    }
}

/// A named target constructor, as written on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TargetSpec {
    Field,
    Matrix(u32),
    TruncPoly(u32),
    Group(u32),
}

impl TargetSpec {
    pub fn build(&self) -> Result<TargetAlgebra, TargetError> {
        match *self {
            TargetSpec::Field => Ok(field_target()),
            TargetSpec::Matrix(m) => matrix_target(m),
            TargetSpec::TruncPoly(m) => trunc_poly_target(m),
            TargetSpec::Group(m) => group_target(m),
        }
    }
}

impl FromStr for TargetSpec {
    type Err = TargetError;

    fn from_str(s: &str) -> Result<Self, TargetError> {
        let bad = || TargetError::BadSpec(s.to_string());
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n, Some(a.parse::<u32>().map_err(|_| bad())?)),
            None => (s, None),
        };
        match (name, arg) {
            ("field", None) => Ok(TargetSpec::Field),
            ("matrix", Some(m)) => Ok(TargetSpec::Matrix(m)),
            ("truncpoly", Some(m)) => Ok(TargetSpec::TruncPoly(m)),
            ("group", Some(m)) => Ok(TargetSpec::Group(m)),
            _ => Err(bad()),
        }
    }
}

impl std::fmt::Display for TargetSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TargetSpec::Field => write!(f, "field"),
            TargetSpec::Matrix(m) => write!(f, "matrix:{m}"),
            TargetSpec::TruncPoly(m) => write!(f, "truncpoly:{m}"),
            TargetSpec::Group(m) => write!(f, "group:{m}"),
        }
    }
}

/// Exact basis of `Z(A)`, the kernel of `z ↦ (z e_i − e_i z)_i`.
pub fn center(a: &FinAlgebra) -> Vec<Vector> {
    let d = a.dim();
    let c = a.conductor();
    let mut rows = Vec::with_capacity(d * d);
    for i in 0..d {
        let ei = a.basis(i);
        // column z of the commutator with e_i
        let cols: Vec<Vector> = (0..d)
            .map(|z| {
                let ez = a.basis(z);
                linalg::sub(&a.mul(&ez, &ei), &a.mul(&ei, &ez))
            })
            .collect();
        for k in 0..d {
            rows.push(cols.iter().map(|col| col[k].clone()).collect());
        }
    }
    rows.retain(|r: &Vector| !linalg::is_zero_vector(r));
    linalg::kernel(&rows, d, c)
}

/// Whether `v` lies in the span of [`center`].
pub fn is_central(a: &FinAlgebra, v: &[CycNum]) -> bool {
    let basis = center(a);
    let r = linalg::rank(&basis);
    let mut with_v = basis;
    with_v.push(v.to_vec());
    linalg::rank(&with_v) == r
}

/// Least `k ≤ cap` with `v^k = 0`.
pub fn nilpotency_order(a: &FinAlgebra, v: &[CycNum], cap: u32) -> Option<u32> {
    let mut p = a.unit().clone();
    for k in 1..=cap {
        p = a.mul(&p, v);
        if linalg::is_zero_vector(&p) {
            return Some(k);
        }
    }
    None
}

/// Parses a linear combination of basis labels such as `q*z + 1/2*e12 - 3`.
///
/// Each term is a product of factors: an integer or fraction, `q` or `q^k`,
/// and at most one basis label. A term without a label multiplies the unit.
pub fn parse_element(expr: &str, a: &FinAlgebra, q: Option<&CycNum>) -> Result<Vector, TargetError> {
    let bad = |reason: &str| TargetError::BadElement {
        expr: expr.to_string(),
        reason: reason.to_string(),
    };
    let c = a.conductor();
    let compact: String = expr.chars().filter(|ch| !ch.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad("empty expression"));
    }
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    for ch in compact.chars() {
        let splits = (ch == '+' || ch == '-') && !matches!(current.chars().last(), Some('^') | Some('/') | Some('*'));
        if splits {
            if !current.is_empty() {
                terms.push((negative, std::mem::take(&mut current)));
            } else if !terms.is_empty() || negative {
                return Err(bad("dangling sign"));
            }
            negative = ch == '-';
        } else {
            current.push(ch);
        }
    }
    if current.is_empty() {
        return Err(bad("dangling sign"));
    }
    terms.push((negative, current));

    let mut out = a.zero();
    for (neg, term) in terms {
        let mut coeff = CycNum::from_int(c, if neg { -1 } else { 1 });
        let mut basis: Option<usize> = None;
        for factor in term.split('*') {
            if let Some(idx) = a.labels().iter().position(|l| l == factor) {
                if factor.parse::<i64>().is_err() {
                    if basis.replace(idx).is_some() {
                        return Err(bad("more than one basis label in a term"));
                    }
                    continue;
                }
            }
            if factor == "q" || factor.starts_with("q^") {
                let q = q.ok_or_else(|| bad("q is not available here"))?;
                let k: i64 = if factor == "q" {
                    1
                } else {
                    factor[2..].parse().map_err(|_| bad("bad exponent of q"))?
                };
                coeff = &coeff * &q.pow(k).map_err(|e| bad(&e.to_string()))?;
                continue;
            }
            let r = parse_rational(factor).ok_or_else(|| bad(&format!("unknown factor `{factor}`")))?;
            coeff = coeff.scale(&r);
        }
        match basis {
            Some(i) => out[i] += &coeff,
            None => linalg::axpy(&mut out, &coeff, a.unit()),
        }
    }
    Ok(out)
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.parse().ok()?;
            if d == BigInt::from(0) {
                return None;
            }
            Some(BigRational::new(n.parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors_and_flags() {
        let f = field_target();
        assert_eq!(f.dim(), 1);
        assert!(f.trivial_idempotents);
        let m = matrix_target(2).unwrap();
        assert!(!m.trivial_idempotents);
        let e11 = m.element("e11").unwrap();
        assert_eq!(m.alg.mul(&e11, &e11), e11);
        assert!(trunc_poly_target(3).unwrap().trivial_idempotents);
        assert!(!group_target(2).unwrap().trivial_idempotents);
        assert!(matrix_target(0).is_err());
        for t in [field_target(), m, trunc_poly_target(3).unwrap(), group_target(3).unwrap()] {
            assert!(t.alg.check_associative().holds);
            assert!(t.alg.check_unit().holds);
        }
    }

    #[test]
    fn centers() {
        let m = matrix_target(2).unwrap();
        let z = center(&m.alg);
        assert_eq!(z.len(), 1);
        // the kernel vector is a multiple of the identity
        let v = &z[0];
        assert!(v[1].is_zero() && v[2].is_zero());
        assert_eq!(v[0], v[3]);
        assert!(is_central(&m.alg, m.one()));
        assert!(!is_central(&m.alg, &m.element("e12").unwrap()));
        let t = trunc_poly_target(3).unwrap();
        assert_eq!(center(&t.alg).len(), 3);
        assert_eq!(center(&field_target().alg).len(), 1);
    }

    #[test]
    fn center_is_closed_under_products() {
        for t in [matrix_target(3).unwrap(), group_target(4).unwrap(), trunc_poly_target(4).unwrap()] {
            let z = center(&t.alg);
            for a in &z {
                for b in &z {
                    assert!(is_central(&t.alg, &t.alg.mul(a, b)));
                }
            }
        }
    }

    #[test]
    fn nilpotency() {
        let m = matrix_target(2).unwrap();
        assert_eq!(nilpotency_order(&m.alg, &m.element("e12").unwrap(), 5), Some(2));
        assert_eq!(nilpotency_order(&m.alg, m.one(), 5), None);
        let t = trunc_poly_target(4).unwrap();
        assert_eq!(nilpotency_order(&t.alg, &t.element("z").unwrap(), 10), Some(4));
    }

    #[test]
    fn specs() {
        assert_eq!("field".parse::<TargetSpec>().unwrap(), TargetSpec::Field);
        assert_eq!("matrix:2".parse::<TargetSpec>().unwrap(), TargetSpec::Matrix(2));
        assert_eq!("truncpoly:3".parse::<TargetSpec>().unwrap().to_string(), "truncpoly:3");
        assert!("matrix".parse::<TargetSpec>().is_err());
        assert!("cube:3".parse::<TargetSpec>().is_err());
    }

    #[test]
    fn element_expressions() {
        let m = matrix_target(2).unwrap().embed(3).unwrap();
        let q = CycNum::zeta(3);
        let v = parse_element("q*e12 + 1/2*e21 - 2", &m.alg, Some(&q)).unwrap();
        assert_eq!(v[1], q);
        assert_eq!(v[2], CycNum::from_frac(3, 1, 2));
        assert_eq!(v[0], CycNum::from_int(3, -2));
        assert_eq!(v[3], CycNum::from_int(3, -2));
        let t = trunc_poly_target(3).unwrap();
        let v = parse_element("-z^2 + z", &t.alg, None).unwrap();
        assert_eq!(v, vec![CycNum::zero(1), CycNum::one(1), CycNum::from_int(1, -1)]);
        assert!(parse_element("q*z", &t.alg, None).is_err());
        assert!(parse_element("z*z", &t.alg, None).is_err());
        assert!(parse_element("y", &t.alg, None).is_err());
        let w = parse_element("q^-1*z", &t.embed(4).unwrap().alg, Some(&CycNum::zeta(4))).unwrap();
        assert_eq!(w[1], CycNum::zeta(4).pow(3).unwrap());
    }
}
