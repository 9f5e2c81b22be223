//! Exact arithmetic in the cyclotomic field Q(ζₙ).
//!
//! An element is stored as its coordinate vector in the power basis
//! `1, ζ, …, ζ^{φ(n)-1}`, with rational coefficients. Products are reduced
//! modulo the n-th cyclotomic polynomial Φₙ, so every element has exactly one
//! representation and `==` is field equality.
//!
//! Elements of different conductors never mix: the checked operations return
//! [`CycError::ConductorMismatch`] and the operator overloads panic. Use
//! [`CycNum::embed`] to move an element into a larger field explicitly.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub use num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycError {
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u32, u32),
    #[error("division by zero in Q(zeta_{0})")]
    DivisionByZero(u32),
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("coefficient vector has length {got}, expected phi({conductor}) = {expected}")]
    BadLength {
        conductor: u32,
        got: usize,
        expected: usize,
    },
    #[error("exponent {t} is not coprime to {n}")]
    NotCoprime { n: u32, t: i64 },
    #[error("cannot embed Q(zeta_{from}) into Q(zeta_{to})")]
    NoEmbedding { from: u32, to: u32 },
    #[error("malformed rational {0:?}")]
    BadRational(String),
}

/// Euler's totient.
pub fn euler_phi(n: u32) -> usize {
    let mut n = n as u64;
    let mut result = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Exact quotient of integer polynomials (coefficients low to high) by a monic divisor.
fn div_exact_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    debug_assert!(den[dn].is_one());
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "division was not exact");
    quot
}

/// Φₙ with integer coefficients, lowest degree first.
///
/// Computed as `(xⁿ − 1) / ∏_{d | n, d < n} Φ_d` by exact division.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic_polynomial requires n >= 1");
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d < n {
            num = div_exact_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

/// Reduction data for one conductor: `x^e mod Φₙ` for every `0 <= e < n`.
#[derive(Debug)]
struct Reducer {
    phi: usize,
    powers: Vec<Vec<BigInt>>,
}

impl Reducer {
    fn new(n: u32) -> Self {
        let poly = cyclotomic_polynomial(n);
        let phi = poly.len() - 1;
        let mut current = vec![BigInt::zero(); phi];
        current[0] = BigInt::one();
        let mut powers = Vec::with_capacity(n as usize);
        for _ in 0..n {
            powers.push(current.clone());
            // multiply by x; the overflow coefficient is folded back with the monic Φₙ
            let top = current[phi - 1].clone();
            let mut next = vec![BigInt::zero(); phi];
            for i in 1..phi {
                next[i] = current[i - 1].clone();
            }
            if !top.is_zero() {
                for i in 0..phi {
                    next[i] -= &top * &poly[i];
                }
            }
            current = next;
        }
        Reducer { phi, powers }
    }

    fn add_power_scaled(&self, coeffs: &mut [BigRational], e: usize, c: &BigRational) {
        let row = &self.powers[e % self.powers.len()];
        for (dst, r) in coeffs.iter_mut().zip(row) {
            if !r.is_zero() {
                *dst += c * BigRational::from_integer(r.clone());
            }
        }
    }
}

fn reducer(n: u32) -> Arc<Reducer> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Reducer>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(r) = cache.read().expect("reducer cache poisoned").get(&n) {
        return r.clone();
    }
    let r = Arc::new(Reducer::new(n));
    cache
        .write()
        .expect("reducer cache poisoned")
        .entry(n)
        .or_insert(r)
        .clone()
}

/// An element of Q(ζₙ).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycNum {
    conductor: u32,
    coeffs: Vec<BigRational>,
}

impl CycNum {
    pub fn zero(conductor: u32) -> Self {
        assert!(conductor >= 1, "conductor must be positive");
        CycNum {
            conductor,
            coeffs: vec![BigRational::zero(); euler_phi(conductor)],
        }
    }

    pub fn one(conductor: u32) -> Self {
        Self::from_rational(conductor, BigRational::one())
    }

    pub fn from_rational(conductor: u32, r: BigRational) -> Self {
        let mut z = Self::zero(conductor);
        z.coeffs[0] = r;
        z
    }

    pub fn from_int(conductor: u32, i: i64) -> Self {
        Self::from_rational(conductor, BigRational::from_integer(BigInt::from(i)))
    }

    pub fn from_frac(conductor: u32, num: i64, den: i64) -> Self {
        Self::from_rational(
            conductor,
            BigRational::new(BigInt::from(num), BigInt::from(den)),
        )
    }

    /// Builds an element from its power-basis coordinates; the length must be φ(n).
    pub fn from_coeffs(conductor: u32, coeffs: Vec<BigRational>) -> Result<Self, CycError> {
        if conductor == 0 {
            return Err(CycError::ZeroConductor);
        }
        let expected = euler_phi(conductor);
        if coeffs.len() != expected {
            return Err(CycError::BadLength {
                conductor,
                got: coeffs.len(),
                expected,
            });
        }
        Ok(CycNum { conductor, coeffs })
    }

    /// Evaluates a rational polynomial (low to high) at ζₙ.
    pub fn from_poly(conductor: u32, poly: &[BigRational]) -> Self {
        let r = reducer(conductor);
        let phi = r.phi;
        let mut coeffs = vec![BigRational::zero(); phi];
        for (k, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            r.add_power_scaled(&mut coeffs, k, c);
        }
        CycNum { conductor, coeffs }
    }

    /// ζₙ^k for any integer k.
    pub fn zeta_pow(conductor: u32, k: i64) -> Self {
        let e = k.rem_euclid(conductor as i64) as usize;
        let r = reducer(conductor);
        let mut coeffs = vec![BigRational::zero(); r.phi];
        r.add_power_scaled(&mut coeffs, e, &BigRational::one());
        CycNum { conductor, coeffs }
    }

    pub fn zeta(conductor: u32) -> Self {
        Self::zeta_pow(conductor, 1)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn check(&self, other: &Self) -> Result<(), CycError> {
        if self.conductor == other.conductor {
            Ok(())
        } else {
            Err(CycError::ConductorMismatch(self.conductor, other.conductor))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, CycError> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycNum {
            conductor: self.conductor,
            coeffs,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, CycError> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycNum {
            conductor: self.conductor,
            coeffs,
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, CycError> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.conductor));
        }
        if let Some(r) = self.as_rational() {
            return Ok(other.scale(r));
        }
        if let Some(r) = other.as_rational() {
            return Ok(self.scale(r));
        }
        let red = reducer(self.conductor);
        let phi = red.phi;
        let mut prod = vec![BigRational::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut coeffs: Vec<BigRational> = prod.drain(..phi).collect();
        for (k, c) in prod.iter().enumerate() {
            if !c.is_zero() {
                red.add_power_scaled(&mut coeffs, phi + k, c);
            }
        }
        Ok(CycNum {
            conductor: self.conductor,
            coeffs,
        })
    }

    /// Multiplies every coordinate by a rational.
    pub fn scale(&self, r: &BigRational) -> Self {
        CycNum {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φₙ.
    pub fn inv(&self) -> Result<Self, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero(self.conductor));
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(self.conductor, r.recip()));
        }
        let modulus: Vec<BigRational> = cyclotomic_polynomial(self.conductor)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        let (g, s) = poly_ext_gcd(&trim(self.coeffs.clone()), &modulus);
        // g is a nonzero constant since Φₙ is irreducible
        debug_assert_eq!(g.len(), 1);
        let c = g[0].recip();
        let s: Vec<BigRational> = s.into_iter().map(|x| x * &c).collect();
        Ok(Self::from_poly(self.conductor, &s))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, CycError> {
        self.check(other)?;
        self.checked_mul(&other.inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self, CycError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut result = Self::one(self.conductor);
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &b;
            }
            k >>= 1;
            if k > 0 {
                b = &b * &b;
            }
        }
        Ok(result)
    }

    /// Moves this element into Q(ζₘ). Requires n | m, except that rational
    /// elements embed into every conductor.
    pub fn embed(&self, target: u32) -> Result<Self, CycError> {
        if target == self.conductor {
            return Ok(self.clone());
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(target, r.clone()));
        }
        if target == 0 || target % self.conductor != 0 {
            return Err(CycError::NoEmbedding {
                from: self.conductor,
                to: target,
            });
        }
        let step = (target / self.conductor) as usize;
        let mut poly = vec![BigRational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * step] = c.clone();
        }
        Ok(Self::from_poly(target, &poly))
    }

    /// Complex numerical value, for display and sanity checks only.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        let (mut re, mut im) = (0.0, 0.0);
        for (k, c) in self.coeffs.iter().enumerate() {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let ang = 2.0 * std::f64::consts::PI * k as f64 / n;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let b = trim(b.to_vec());
    let mut rem = trim(a.to_vec());
    let db = b.len() - 1;
    if rem.len() < b.len() {
        return (vec![BigRational::zero()], rem);
    }
    let lead_inv = b[db].recip();
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (i, bi) in b.iter().enumerate() {
            rem[k + i] -= &c * bi;
        }
        quot[k] = c;
    }
    rem.truncate(db.max(1));
    (trim(quot), trim(rem))
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn is_zero_poly(p: &[BigRational]) -> bool {
    p.iter().all(Zero::is_zero)
}

/// Returns `(g, s)` with `s·a ≡ g (mod m)`.
fn poly_ext_gcd(a: &[BigRational], m: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let (mut r0, mut r1) = (a.to_vec(), m.to_vec());
    let (mut s0, mut s1) = (vec![BigRational::one()], vec![BigRational::zero()]);
    while !is_zero_poly(&r1) {
        let (q, r) = poly_divrem(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    (r0, s0)
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", abs)?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{}*", abs)?;
                    }
                    if k == 1 {
                        write!(f, "z{}", self.conductor)?;
                    } else {
                        write!(f, "z{}^{}", self.conductor, k)?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<'a> $tr<&'a CycNum> for &'a CycNum {
            type Output = CycNum;
            fn $m(self, rhs: &'a CycNum) -> CycNum {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: &'a CycNum) -> CycNum {
                (&self).$m(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        self.check(rhs).unwrap_or_else(|e| panic!("{e}"));
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl SubAssign<&CycNum> for CycNum {
    fn sub_assign(&mut self, rhs: &CycNum) {
        self.check(rhs).unwrap_or_else(|e| panic!("{e}"));
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl MulAssign<&CycNum> for CycNum {
    fn mul_assign(&mut self, rhs: &CycNum) {
        *self = &*self * rhs;
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            conductor: self.conductor,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -(self.clone())
    }
}

/// A primitive n-th root of unity ζₙᵗ with gcd(t, n) = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootOfUnity {
    conductor: u32,
    exponent: u32,
}

impl RootOfUnity {
    pub fn new(conductor: u32, exponent: i64) -> Result<Self, CycError> {
        if conductor == 0 {
            return Err(CycError::ZeroConductor);
        }
        let t = exponent.rem_euclid(conductor as i64);
        if (t as u64).gcd(&(conductor as u64)) != 1 {
            return Err(CycError::NotCoprime {
                n: conductor,
                t: exponent,
            });
        }
        Ok(RootOfUnity {
            conductor,
            exponent: t as u32,
        })
    }

    /// Every primitive n-th root, ordered by exponent.
    pub fn all_primitive(conductor: u32) -> Vec<Self> {
        (0..conductor as i64)
            .filter_map(|t| Self::new(conductor, t).ok())
            .collect()
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn value(&self) -> CycNum {
        CycNum::zeta_pow(self.conductor, self.exponent as i64)
    }

    /// q^k for any integer k, without going through inversion.
    pub fn pow(&self, k: i64) -> CycNum {
        CycNum::zeta_pow(
            self.conductor,
            (self.exponent as i64 * k).rem_euclid(self.conductor as i64),
        )
    }

    pub fn inverse(&self) -> Self {
        RootOfUnity {
            conductor: self.conductor,
            exponent: (self.conductor - self.exponent) % self.conductor,
        }
    }
}

/// True iff qⁿ = 1 and qᵐ ≠ 1 for 0 < m < n.
pub fn is_primitive_root(q: &CycNum, n: u32) -> bool {
    if q.is_zero() || n == 0 {
        return false;
    }
    let mut p = q.clone();
    for _ in 1..n {
        if p.is_one() {
            return false;
        }
        p = &p * q;
    }
    p.is_one()
}

#[derive(Serialize, Deserialize)]
struct CycNumRepr {
    conductor: u32,
    coeffs: Vec<[String; 2]>,
}

pub(crate) fn rational_to_strings(r: &BigRational) -> [String; 2] {
    [r.numer().to_str_radix(10), r.denom().to_str_radix(10)]
}

pub(crate) fn rational_from_strings(s: &[String; 2]) -> Result<BigRational, CycError> {
    let num: BigInt = s[0]
        .parse()
        .map_err(|_| CycError::BadRational(s[0].clone()))?;
    let den: BigInt = s[1]
        .parse()
        .map_err(|_| CycError::BadRational(s[1].clone()))?;
    if den.is_zero() {
        return Err(CycError::BadRational(format!("{}/{}", s[0], s[1])));
    }
    Ok(BigRational::new(num, den))
}

impl Serialize for CycNum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        CycNumRepr {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(rational_to_strings).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CycNum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = CycNumRepr::deserialize(deserializer)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(rational_from_strings)
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        CycNum::from_coeffs(repr.conductor, coeffs).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Schoolbook long division of x^n - 1 by the product of smaller Φ_d,
    /// written independently of `div_exact_monic`.
    fn long_division_oracle(n: usize, factors: &[Vec<i64>]) -> Vec<i64> {
        let mut den = vec![1i64];
        for f in factors {
            let mut out = vec![0i64; den.len() + f.len() - 1];
            for (i, a) in den.iter().enumerate() {
                for (j, b) in f.iter().enumerate() {
                    out[i + j] += a * b;
                }
            }
            den = out;
        }
        let mut rem = vec![0i64; n + 1];
        rem[0] = -1;
        rem[n] = 1;
        let dd = den.len() - 1;
        let mut q = vec![0i64; n + 1 - dd];
        for k in (0..q.len()).rev() {
            let c = rem[k + dd] / den[dd];
            q[k] = c;
            for (i, d) in den.iter().enumerate() {
                rem[k + i] -= c * d;
            }
        }
        assert!(rem.iter().all(|&r| r == 0));
        q
    }

    #[test]
    fn cyclotomic_small_cases() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        let phi2 = long_division_oracle(2, &[vec![-1, 1]]);
        assert_eq!(phi2, vec![1, 1]);
        let phi4 = long_division_oracle(4, &[vec![-1, 1], phi2.clone()]);
        assert_eq!(phi4, vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(4), ints(&phi4));
        let phi3 = long_division_oracle(3, &[vec![-1, 1]]);
        assert_eq!(phi3, vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(3), ints(&phi3));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
        for n in 1..=30 {
            assert_eq!(cyclotomic_polynomial(n).len() - 1, euler_phi(n));
        }
    }

    #[test]
    fn zeta4_squared_is_minus_one() {
        let z = CycNum::zeta(4);
        assert_eq!(&z * &z, CycNum::from_int(4, -1));
    }

    #[test]
    fn additive_identity() {
        let a = CycNum::zeta_pow(5, 3) + CycNum::from_frac(5, 2, 7);
        assert_eq!(&a + &CycNum::zero(5), a);
    }

    #[test]
    fn inverse_of_one_plus_zeta3() {
        let a = CycNum::one(3) + CycNum::zeta(3);
        let inv = a.inv().unwrap();
        // 1 + ζ₃ = -ζ₃², so the inverse is -ζ₃
        assert_eq!(inv, -CycNum::zeta(3));
        assert!((&a * &inv).is_one());
    }

    #[test]
    fn zeta_power_wraps() {
        for n in 1..=12u32 {
            let z = CycNum::zeta(n);
            assert!(z.pow(n as i64).unwrap().is_one());
            assert_eq!(CycNum::zeta_pow(n, -1), z.inv().unwrap());
        }
    }

    #[test]
    fn primitive_roots() {
        assert!(is_primitive_root(&CycNum::zeta(4), 4));
        assert!(!is_primitive_root(&CycNum::zeta_pow(4, 2), 4));
        let z6 = CycNum::zeta(6);
        assert!(!is_primitive_root(&z6, 3));
        assert!(is_primitive_root(&(&z6 * &z6), 3));
        for n in 2..=12 {
            for r in RootOfUnity::all_primitive(n) {
                assert!(is_primitive_root(&r.value(), n));
            }
            assert_eq!(RootOfUnity::all_primitive(n).len(), euler_phi(n));
        }
    }

    #[test]
    fn mismatched_conductors_rejected() {
        let a = CycNum::one(3);
        let b = CycNum::one(4);
        assert_eq!(
            a.checked_add(&b),
            Err(CycError::ConductorMismatch(3, 4))
        );
        assert!(CycNum::zero(5).inv().is_err());
        assert!(RootOfUnity::new(6, 2).is_err());
    }

    #[test]
    fn embedding_respects_products() {
        let a = CycNum::zeta(3) + CycNum::from_frac(3, 1, 2);
        let b = CycNum::zeta_pow(3, 2) - CycNum::from_int(3, 4);
        let ab = (&a * &b).embed(12).unwrap();
        assert_eq!(ab, &a.embed(12).unwrap() * &b.embed(12).unwrap());
        assert!(CycNum::zeta(4).embed(6).is_err());
        assert_eq!(CycNum::from_int(2, -1).embed(5).unwrap(), CycNum::from_int(5, -1));
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let a = CycNum::zeta(5).scale(&BigRational::new(BigInt::from(-3), BigInt::from(8)))
            + CycNum::from_int(5, 123456789012345678);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(
            s,
            r#"{"conductor":5,"coeffs":[["123456789012345678","1"],["-3","8"],["0","1"],["0","1"]]}"#
        );
        let back: CycNum = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
        assert!(serde_json::from_str::<CycNum>(r#"{"conductor":5,"coeffs":[["1","1"]]}"#).is_err());
    }
}
