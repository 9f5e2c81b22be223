//! q-numbers, q-factorials and Gaussian binomials, plus exact verification of
//! the q-identities the Taft constructions rely on.
//!
//! The Pascal-type recursion
//! `(n m)_q = (n-1 m-1)_q + q^m (n-1 m)_q` is the definition of record. The
//! factorial quotient is only an identity under `(n-1)_q! ≠ 0`, which fails at
//! roots of unity, so it is checked rather than used.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cyclotomic::{is_primitive_root, CycNum, RootOfUnity};

/// Evaluator for q-combinatorics at a fixed nonzero `q`, with a per-instance
/// memo table for binomials. Not shared between threads.
#[derive(Debug, Clone)]
pub struct QCalc {
    q: CycNum,
    q_inv: CycNum,
    binom: HashMap<(i64, i64), CycNum>,
}

impl QCalc {
    pub fn new(q: CycNum) -> Self {
        assert!(!q.is_zero(), "q must be nonzero");
        let q_inv = q.inv().expect("nonzero");
        QCalc {
            q,
            q_inv,
            binom: HashMap::new(),
        }
    }

    pub fn q(&self) -> &CycNum {
        &self.q
    }

    pub fn conductor(&self) -> u32 {
        self.q.conductor()
    }

    /// q^k for any integer k.
    pub fn pow(&self, k: i64) -> CycNum {
        if k >= 0 {
            self.q.pow(k).expect("nonnegative power")
        } else {
            self.q_inv.pow(-k).expect("nonnegative power")
        }
    }

    /// Evaluator at q⁻¹.
    pub fn inverse(&self) -> QCalc {
        QCalc::new(self.q_inv.clone())
    }

    pub fn number(&self, n: i64) -> CycNum {
        q_number(n, &self.q)
    }

    pub fn factorial(&self, n: i64) -> CycNum {
        q_factorial(n, &self.q)
    }

    /// Memoized `(n m)_q`.
    pub fn binomial(&mut self, n: i64, m: i64) -> CycNum {
        if m < 0 || m > n || n < 0 {
            return CycNum::zero(self.conductor());
        }
        if m == 0 || m == n {
            return CycNum::one(self.conductor());
        }
        if let Some(v) = self.binom.get(&(n, m)) {
            return v.clone();
        }
        let v = self.binomial(n - 1, m - 1) + self.pow(m) * self.binomial(n - 1, m);
        self.binom.insert((n, m), v.clone());
        v
    }
}

/// `(n)_q = Σ_{ℓ<n} q^ℓ`, with `(0)_q = 0`.
pub fn q_number(n: i64, q: &CycNum) -> CycNum {
    assert!(n >= 0, "q_number requires n >= 0");
    let mut acc = CycNum::zero(q.conductor());
    let mut p = CycNum::one(q.conductor());
    for _ in 0..n {
        acc += &p;
        p = &p * q;
    }
    acc
}

/// `(n)_q! = (n)_q (n-1)_q!`, with `(0)_q! = 1`.
pub fn q_factorial(n: i64, q: &CycNum) -> CycNum {
    assert!(n >= 0, "q_factorial requires n >= 0");
    (1..=n).fold(CycNum::one(q.conductor()), |acc, k| acc * q_number(k, q))
}

/// `(n m)_q` by the recursion, building Pascal rows without a memo table.
pub fn q_binomial(n: i64, m: i64, q: &CycNum) -> CycNum {
    let c = q.conductor();
    if n < 0 || m < 0 || m > n {
        return CycNum::zero(c);
    }
    let powers: Vec<CycNum> = {
        let mut v = Vec::with_capacity(n as usize + 1);
        let mut p = CycNum::one(c);
        for _ in 0..=n {
            v.push(p.clone());
            p = &p * q;
        }
        v
    };
    let mut row = vec![CycNum::one(c)];
    for r in 1..=n as usize {
        let mut next = vec![CycNum::zero(c); r + 1];
        for k in 0..=r {
            let left = if k >= 1 { row[k - 1].clone() } else { CycNum::zero(c) };
            let right = if k < r { &powers[k] * &row[k] } else { CycNum::zero(c) };
            next[k] = left + right;
        }
        row = next;
    }
    row[m as usize].clone()
}

/// `(n)_q! / ((n-m)_q! (m)_q!)`, or `None` when a denominator vanishes.
pub fn q_binomial_factorial_form(n: i64, m: i64, q: &CycNum) -> Option<CycNum> {
    if m < 0 || m > n {
        return Some(CycNum::zero(q.conductor()));
    }
    let den = q_factorial(n - m, q) * q_factorial(m, q);
    let den_inv = den.inv().ok()?;
    Some(q_factorial(n, q) * den_inv)
}

/// Ordinary binomial coefficient; zero outside `0 <= m <= n`.
pub fn binomial(n: i64, m: i64) -> BigInt {
    if n < 0 || m < 0 || m > n {
        return BigInt::zero();
    }
    let m = m.min(n - m);
    let mut acc = BigInt::one();
    for i in 0..m {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Names of the checkable identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IdentityTag {
    FactorialForm,
    Radford,
    AltSum,
    Inversion,
    PascalVariant,
    ProdQbinom,
    SumShift,
    TripleSum,
    StarSym,
    ActionOfAction,
    QNUnity,
    SymN,
    #[serde(rename = "R_L_1")]
    RL1,
    #[serde(rename = "R_L_2")]
    RL2,
    #[serde(rename = "R_L_3")]
    RL3,
}

impl IdentityTag {
    pub const ALL: [IdentityTag; 15] = [
        IdentityTag::FactorialForm,
        IdentityTag::Radford,
        IdentityTag::AltSum,
        IdentityTag::Inversion,
        IdentityTag::PascalVariant,
        IdentityTag::ProdQbinom,
        IdentityTag::SumShift,
        IdentityTag::TripleSum,
        IdentityTag::StarSym,
        IdentityTag::ActionOfAction,
        IdentityTag::QNUnity,
        IdentityTag::SymN,
        IdentityTag::RL1,
        IdentityTag::RL2,
        IdentityTag::RL3,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            IdentityTag::FactorialForm => "FACTORIAL_FORM",
            IdentityTag::Radford => "RADFORD",
            IdentityTag::AltSum => "ALT_SUM",
            IdentityTag::Inversion => "INVERSION",
            IdentityTag::PascalVariant => "PASCAL_VARIANT",
            IdentityTag::ProdQbinom => "PROD_QBINOM",
            IdentityTag::SumShift => "SUM_SHIFT",
            IdentityTag::TripleSum => "TRIPLE_SUM",
            IdentityTag::StarSym => "STAR_SYM",
            IdentityTag::ActionOfAction => "ACTION_OF_ACTION",
            IdentityTag::QNUnity => "Q_N_UNITY",
            IdentityTag::SymN => "SYM_N",
            IdentityTag::RL1 => "R_L_1",
            IdentityTag::RL2 => "R_L_2",
            IdentityTag::RL3 => "R_L_3",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|t| t.name().eq_ignore_ascii_case(s))
    }
}

/// One instance of an identity, with its integer parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Identity {
    /// `(n m)_q = (n)_q! / ((n-m)_q! (m)_q!)` for `0 < m < n`, `(n-1)_q! ≠ 0`.
    FactorialForm { n: i64, m: i64 },
    /// `(n m)_q = (n_R m_R)_q · C(n_D, m_D)` for q of order N, `k = k_D N + k_R`.
    Radford { n: i64, m: i64 },
    /// `Σ_{k≤m} (-1)^k (m k)_q q^{k(k+1)/2 - km} = 0`, `m ≥ 1`.
    AltSum { m: i64 },
    /// `(n m)_q = q^{m(n-m)} (n m)_{q⁻¹}`.
    Inversion { n: i64, m: i64 },
    /// `(n m)_q = (n-1 m)_q + q^{n-m} (n-1 m-1)_q`.
    PascalVariant { n: i64, m: i64 },
    /// `(j k)(j-k i-k) = (j i)(i k)`, `k ≤ j`.
    ProdQbinom { i: i64, j: i64, k: i64 },
    /// `Σ_{ℓ≤j} (-1)^ℓ q^{sℓ+ℓ(ℓ+1)/2} (j ℓ)(j+t-ℓ j+s) = (t s)`.
    SumShift { j: i64, s: i64, t: i64 },
    /// `q^{s(i-j)} Σ_{ℓ≤j} (j ℓ)(j+t-ℓ i+s-ℓ)(ℓ i)(-1)^{i-ℓ} q^{(i-ℓ)(i-ℓ+1)/2} = (j i)(t s)`.
    TripleSum { i: i64, j: i64, s: i64, t: i64 },
    /// `(1 - q^{t-ℓ})(t ℓ) + q^{ℓ+1}(t ℓ+1) = (t ℓ+1)`, `0 ≤ ℓ < t`, `(t-1)_q! ≠ 0`.
    StarSym { t: i64, l: i64 },
    /// `Σ_{s≤m} (-1)^{m-s} q^{s(s+1)/2 - sm}(m s)(s+t ℓ) = q^{m(m+1)/2 + m(t-ℓ)}(t ℓ-m)`.
    ActionOfAction { m: i64, t: i64, l: i64 },
    /// `(-1)^i q^{i(i+1)/2} (n-1 i)_q = 1` for `q ≠ 1`, `qⁿ = 1`, `0 ≤ i < n`.
    QNUnity { n: i64, i: i64 },
    /// `(-1)^ℓ q^{tℓ - ℓ(ℓ-1)/2} (n+ℓ-t-1 ℓ) = (t ℓ)`, q primitive of order n, `ℓ ≤ t < n`.
    SymN { n: i64, t: i64, l: i64 },
    /// First summation identity for q primitive of order n, `k,ℓ,t < n`, `n ≤ t+ℓ`, `m < t`.
    #[serde(rename = "R_L_1")]
    RL1 { n: i64, k: i64, l: i64, t: i64, m: i64 },
    /// Second summation identity, `ℓ ≤ k < n`.
    #[serde(rename = "R_L_2")]
    RL2 { n: i64, k: i64, l: i64 },
    /// Third summation identity, `ℓ ≤ k < n`, `ℓ ≤ m < n`.
    #[serde(rename = "R_L_3")]
    RL3 { n: i64, k: i64, l: i64, m: i64 },
}

impl Identity {
    pub fn tag(&self) -> IdentityTag {
        match self {
            Identity::FactorialForm { .. } => IdentityTag::FactorialForm,
            Identity::Radford { .. } => IdentityTag::Radford,
            Identity::AltSum { .. } => IdentityTag::AltSum,
            Identity::Inversion { .. } => IdentityTag::Inversion,
            Identity::PascalVariant { .. } => IdentityTag::PascalVariant,
            Identity::ProdQbinom { .. } => IdentityTag::ProdQbinom,
            Identity::SumShift { .. } => IdentityTag::SumShift,
            Identity::TripleSum { .. } => IdentityTag::TripleSum,
            Identity::StarSym { .. } => IdentityTag::StarSym,
            Identity::ActionOfAction { .. } => IdentityTag::ActionOfAction,
            Identity::QNUnity { .. } => IdentityTag::QNUnity,
            Identity::SymN { .. } => IdentityTag::SymN,
            Identity::RL1 { .. } => IdentityTag::RL1,
            Identity::RL2 { .. } => IdentityTag::RL2,
            Identity::RL3 { .. } => IdentityTag::RL3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("{tag:?} precondition violated: {condition}")]
    Precondition {
        tag: IdentityTag,
        condition: &'static str,
    },
}

/// Both sides of a checked identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityOutcome {
    pub identity: Identity,
    pub holds: bool,
    pub lhs: CycNum,
    pub rhs: CycNum,
}

/// The value of q together with the cached data identities need.
#[derive(Debug, Clone)]
pub struct IdentityContext {
    calc: QCalc,
    calc_inv: QCalc,
    order: Option<u32>,
}

impl IdentityContext {
    pub fn new(q: CycNum) -> Self {
        let order = multiplicative_order(&q);
        let calc = QCalc::new(q);
        let calc_inv = calc.inverse();
        IdentityContext {
            calc,
            calc_inv,
            order,
        }
    }

    pub fn from_root(root: &RootOfUnity) -> Self {
        Self::new(root.value())
    }

    pub fn q(&self) -> &CycNum {
        self.calc.q()
    }

    /// Multiplicative order of q, if q is a root of unity.
    pub fn order(&self) -> Option<u32> {
        self.order
    }

    fn b(&mut self, n: i64, m: i64) -> CycNum {
        self.calc.binomial(n, m)
    }

    fn p(&self, k: i64) -> CycNum {
        self.calc.pow(k)
    }

    fn sign(&self, k: i64) -> CycNum {
        CycNum::from_int(self.calc.conductor(), if k.rem_euclid(2) == 0 { 1 } else { -1 })
    }

    fn zero(&self) -> CycNum {
        CycNum::zero(self.calc.conductor())
    }

    fn one(&self) -> CycNum {
        CycNum::one(self.calc.conductor())
    }
}

/// Multiplicative order of a root of unity in Q(ζₙ); such an order divides 2n.
fn multiplicative_order(q: &CycNum) -> Option<u32> {
    let bound = 2 * q.conductor();
    let mut p = q.clone();
    for k in 1..=bound {
        if p.is_one() {
            return Some(k);
        }
        p = &p * q;
    }
    None
}

fn require(ok: bool, tag: IdentityTag, condition: &'static str) -> Result<(), IdentityError> {
    if ok {
        Ok(())
    } else {
        Err(IdentityError::Precondition { tag, condition })
    }
}

fn require_primitive(ctx: &IdentityContext, n: i64, tag: IdentityTag) -> Result<(), IdentityError> {
    require(
        n >= 1 && is_primitive_root(ctx.q(), n as u32),
        tag,
        "q must be a primitive n-th root of unity",
    )
}

/// Evaluates both sides of an identity exactly.
pub fn identity_check(id: &Identity, ctx: &mut IdentityContext) -> Result<IdentityOutcome, IdentityError> {
    let tag = id.tag();
    let (lhs, rhs) = match *id {
        Identity::FactorialForm { n, m } => {
            require(n >= 1 && 0 < m && m < n, tag, "0 < m < n")?;
            require(
                !ctx.calc.factorial(n - 1).is_zero(),
                tag,
                "(n-1)_q! != 0",
            )?;
            let rhs = q_binomial_factorial_form(n, m, ctx.q()).expect("denominators nonzero");
            (ctx.b(n, m), rhs)
        }
        Identity::Radford { n, m } => {
            let order = ctx.order.ok_or(IdentityError::Precondition {
                tag,
                condition: "q must be a root of unity",
            })? as i64;
            require(0 <= m && m <= n, tag, "0 <= m <= n")?;
            let (nd, nr) = (n / order, n % order);
            let (md, mr) = (m / order, m % order);
            let ordinary = CycNum::from_rational(
                ctx.calc.conductor(),
                num_rational::BigRational::from_integer(binomial(nd, md)),
            );
            (ctx.b(n, m), ctx.b(nr, mr) * ordinary)
        }
        Identity::AltSum { m } => {
            require(m >= 1, tag, "m >= 1")?;
            let mut acc = ctx.zero();
            for k in 0..=m {
                acc += &(ctx.sign(k) * ctx.b(m, k) * ctx.p(k * (k + 1) / 2 - k * m));
            }
            (acc, ctx.zero())
        }
        Identity::Inversion { n, m } => {
            require(n >= 0, tag, "n >= 0")?;
            let rhs = ctx.p(m * (n - m)) * ctx.calc_inv.binomial(n, m);
            (ctx.b(n, m), rhs)
        }
        Identity::PascalVariant { n, m } => {
            require(n >= 1 && 0 <= m && m <= n, tag, "n >= 1 and 0 <= m <= n")?;
            let rhs = ctx.b(n - 1, m) + ctx.p(n - m) * ctx.b(n - 1, m - 1);
            (ctx.b(n, m), rhs)
        }
        Identity::ProdQbinom { i, j, k } => {
            require(i >= 0 && j >= 0 && k >= 0, tag, "i, j, k >= 0")?;
            require(k <= j, tag, "k <= j")?;
            (ctx.b(j, k) * ctx.b(j - k, i - k), ctx.b(j, i) * ctx.b(i, k))
        }
        Identity::SumShift { j, s, t } => {
            require(j >= 0 && s >= 0 && t >= 0, tag, "j, s, t >= 0")?;
            let mut acc = ctx.zero();
            for l in 0..=j {
                let term = ctx.sign(l)
                    * ctx.p(s * l + l * (l + 1) / 2)
                    * ctx.b(j, l)
                    * ctx.b(j + t - l, j + s);
                acc += &term;
            }
            (acc, ctx.b(t, s))
        }
        Identity::TripleSum { i, j, s, t } => {
            require(i >= 0 && j >= 0 && s >= 0 && t >= 0, tag, "i, j, s, t >= 0")?;
            let mut acc = ctx.zero();
            for l in 0..=j {
                let d = i - l;
                let term = ctx.b(j, l)
                    * ctx.b(j + t - l, i + s - l)
                    * ctx.b(l, i)
                    * ctx.sign(d)
                    * ctx.p(d * (d + 1) / 2);
                acc += &term;
            }
            (ctx.p(s * (i - j)) * acc, ctx.b(j, i) * ctx.b(t, s))
        }
        Identity::StarSym { t, l } => {
            require(0 <= l && l < t, tag, "0 <= l < t")?;
            require(
                !ctx.calc.factorial(t - 1).is_zero(),
                tag,
                "(t-1)_q! != 0",
            )?;
            let lhs = (ctx.one() - ctx.p(t - l)) * ctx.b(t, l) + ctx.p(l + 1) * ctx.b(t, l + 1);
            (lhs, ctx.b(t, l + 1))
        }
        Identity::ActionOfAction { m, t, l } => {
            require(m >= 0 && t >= 0 && l >= 0, tag, "m, t, l >= 0")?;
            let mut acc = ctx.zero();
            for s in 0..=m {
                let term = ctx.sign(m - s)
                    * ctx.p(s * (s + 1) / 2 - s * m)
                    * ctx.b(m, s)
                    * ctx.b(s + t, l);
                acc += &term;
            }
            (acc, ctx.p(m * (m + 1) / 2 + m * (t - l)) * ctx.b(t, l - m))
        }
        Identity::QNUnity { n, i } => {
            require(n >= 1, tag, "n >= 1")?;
            require(!ctx.q().is_one(), tag, "q != 1")?;
            require(ctx.p(n).is_one(), tag, "q^n = 1")?;
            require(0 <= i && i < n, tag, "0 <= i < n")?;
            (ctx.sign(i) * ctx.p(i * (i + 1) / 2) * ctx.b(n - 1, i), ctx.one())
        }
        Identity::SymN { n, t, l } => {
            require_primitive(ctx, n, tag)?;
            require(0 <= l && l <= t && t < n, tag, "0 <= l <= t < n")?;
            let lhs = ctx.sign(l) * ctx.p(t * l - l * (l - 1) / 2) * ctx.b(n + l - t - 1, l);
            (lhs, ctx.b(t, l))
        }
        Identity::RL1 { n, k, l, t, m } => {
            require_primitive(ctx, n, tag)?;
            require(
                (0..n).contains(&k) && (0..n).contains(&l) && (0..n).contains(&t),
                tag,
                "k, l, t < n",
            )?;
            require(n <= t + l, tag, "n <= t + l")?;
            require(0 <= m && m < t, tag, "0 <= m < t")?;
            let mut acc = ctx.zero();
            for s in 0..=m {
                let term = ctx.sign(s)
                    * ctx.p(s * (s + 1) / 2 - s * m)
                    * ctx.b(t, m - s)
                    * ctx.b(s, t + l - n);
                acc += &term;
            }
            let rhs = ctx.sign(m) * ctx.p(-m * (m - 1) / 2 - t * (t + l - m)) * ctx.b(m - t + n, l);
            (acc, rhs)
        }
        Identity::RL2 { n, k, l } => {
            require_primitive(ctx, n, tag)?;
            require((0..n).contains(&k) && (0..n).contains(&l), tag, "k, l < n")?;
            require(l <= k, tag, "l <= k")?;
            let mut acc = ctx.zero();
            for s in 0..=l {
                let term = ctx.sign(s) * ctx.p(s * (s + 1) / 2 - s * (l - k)) * ctx.b(n + l - k, s);
                acc += &term;
            }
            (acc, ctx.b(k, l))
        }
        Identity::RL3 { n, k, l, m } => {
            require_primitive(ctx, n, tag)?;
            require((0..n).contains(&k) && (0..n).contains(&l), tag, "k, l < n")?;
            require(l <= k, tag, "l <= k")?;
            require(l <= m && m < n, tag, "l <= m < n")?;
            let mut acc = ctx.zero();
            for s in 0..=m {
                let term = ctx.sign(s)
                    * ctx.p(s * (s + 1) / 2 - s * (l - k))
                    * ctx.b(n + m - k, s)
                    * ctx.b(n + m - s, n + l - s);
                acc += &term;
            }
            (acc, ctx.b(k, l))
        }
    };
    Ok(IdentityOutcome {
        identity: *id,
        holds: lhs == rhs,
        lhs,
        rhs,
    })
}

/// Every parameter tuple of `tag` checked at a primitive root of order `order`.
///
/// Indices whose identity is stated for all q range over `0..=order` (twice
/// that for two-parameter identities, so wrap-around at the root is covered);
/// root-of-unity identities range over their full stated domain. Tuples that
/// violate a hypothesis which depends on q, such as `(t-1)_q! ≠ 0`, are
/// returned too and filtered by [`identity_check`]'s precondition error.
pub fn parameter_grid(tag: IdentityTag, order: u32) -> Vec<Identity> {
    let n = order as i64;
    let wide = 0..=2 * n;
    let narrow = 0..=n;
    let below = 0..n;
    let mut out = Vec::new();
    match tag {
        IdentityTag::FactorialForm => {
            for a in 1..=2 * n {
                for m in 1..a {
                    out.push(Identity::FactorialForm { n: a, m });
                }
            }
        }
        IdentityTag::Radford => {
            for a in 0..=3 * n {
                for m in 0..=a {
                    out.push(Identity::Radford { n: a, m });
                }
            }
        }
        IdentityTag::AltSum => out.extend((1..=2 * n).map(|m| Identity::AltSum { m })),
        IdentityTag::Inversion => {
            for a in wide.clone() {
                for m in 0..=a {
                    out.push(Identity::Inversion { n: a, m });
                }
            }
        }
        IdentityTag::PascalVariant => {
            for a in 1..=2 * n {
                for m in 0..=a {
                    out.push(Identity::PascalVariant { n: a, m });
                }
            }
        }
        IdentityTag::ProdQbinom => {
            for i in narrow.clone() {
                for j in narrow.clone() {
                    for k in 0..=j {
                        out.push(Identity::ProdQbinom { i, j, k });
                    }
                }
            }
        }
        IdentityTag::SumShift => {
            for j in narrow.clone() {
                for s in narrow.clone() {
                    for t in narrow.clone() {
                        out.push(Identity::SumShift { j, s, t });
                    }
                }
            }
        }
        IdentityTag::TripleSum => {
            for i in narrow.clone() {
                for j in narrow.clone() {
                    for s in narrow.clone() {
                        for t in narrow.clone() {
                            out.push(Identity::TripleSum { i, j, s, t });
                        }
                    }
                }
            }
        }
        IdentityTag::StarSym => {
            for t in 1..=2 * n {
                for l in 0..t {
                    out.push(Identity::StarSym { t, l });
                }
            }
        }
        IdentityTag::ActionOfAction => {
            for m in narrow.clone() {
                for t in narrow.clone() {
                    for l in narrow.clone() {
                        out.push(Identity::ActionOfAction { m, t, l });
                    }
                }
            }
        }
        IdentityTag::QNUnity => out.extend(below.clone().map(|i| Identity::QNUnity { n, i })),
        IdentityTag::SymN => {
            for t in below.clone() {
                for l in 0..=t {
                    out.push(Identity::SymN { n, t, l });
                }
            }
        }
        IdentityTag::RL1 => {
            for k in below.clone() {
                for l in below.clone() {
                    for t in below.clone() {
                        if n <= t + l {
                            for m in 0..t {
                                out.push(Identity::RL1 { n, k, l, t, m });
                            }
                        }
                    }
                }
            }
        }
        IdentityTag::RL2 => {
            for k in below.clone() {
                for l in 0..=k {
                    out.push(Identity::RL2 { n, k, l });
                }
            }
        }
        IdentityTag::RL3 => {
            for k in below.clone() {
                for l in 0..=k {
                    for m in l..n {
                        out.push(Identity::RL3 { n, k, l, m });
                    }
                }
            }
        }
    }
    out
}

/// A failed identity instance, located by the root it was evaluated at.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityFailure {
    pub order: u32,
    pub q_power: u32,
    pub outcome: IdentityOutcome,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct GridReport {
    pub checked: usize,
    /// Tuples whose q-dependent hypothesis fails at the chosen root.
    pub skipped: usize,
    pub per_tag: Vec<(IdentityTag, usize)>,
    pub failures: Vec<IdentityFailure>,
}

impl GridReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks every tag in `tags` over its grid, for every order in
/// `n_min..=n_max` and every primitive root of that order.
pub fn verify_grid(n_min: u32, n_max: u32, tags: &[IdentityTag]) -> GridReport {
    let mut report = GridReport::default();
    let mut per_tag: HashMap<IdentityTag, usize> = HashMap::new();
    for order in n_min..=n_max {
        for root in RootOfUnity::all_primitive(order) {
            let mut ctx = IdentityContext::from_root(&root);
            for &tag in tags {
                for id in parameter_grid(tag, order) {
                    match identity_check(&id, &mut ctx) {
                        Ok(outcome) => {
                            report.checked += 1;
                            *per_tag.entry(tag).or_default() += 1;
                            if !outcome.holds {
                                report.failures.push(IdentityFailure {
                                    order,
                                    q_power: root.exponent(),
                                    outcome,
                                });
                            }
                        }
                        Err(IdentityError::Precondition { .. }) => report.skipped += 1,
                    }
                }
            }
        }
    }
    report.per_tag = tags
        .iter()
        .map(|t| (*t, per_tag.get(t).copied().unwrap_or(0)))
        .collect();
    report
}
