//! Finite-dimensional algebras and Hopf algebras as structure constants.
//!
//! Everything is stored extensionally on a fixed basis: products of basis
//! pairs, coproducts and counits of basis elements, and the antipode matrix.
//! Verifying an axiom on basis elements is complete, since every axiom is
//! multilinear in its arguments.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cyclotomic::{CycError, CycNum, RootOfUnity};
use crate::linalg::{self, LinAlgError, LinMap, Vector};
use crate::qcomb::{q_binomial, q_factorial};
use crate::rewrite::{Letter, LetterKind, Presentation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error(transparent)]
    Cyc(#[from] CycError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error("q = z{conductor}^{exponent} is not a primitive root of order {n}")]
    NotPrimitive { n: u32, conductor: u32, exponent: u32 },
    #[error("parameter n = {n} must be at least {min}")]
    TooSmall { n: u32, min: u32 },
    #[error("structure fails the {0} axiom")]
    AxiomFailed(&'static str),
    #[error("malformed structure data: {0}")]
    Malformed(String),
}

/// Sparse element of `V ⊗ W` over basis pairs.
pub type Tensor2 = BTreeMap<(usize, usize), CycNum>;
type Tensor3 = BTreeMap<(usize, usize, usize), CycNum>;

fn accumulate<K: Ord>(map: &mut BTreeMap<K, CycNum>, key: K, c: CycNum) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

/// Result of one exhaustive check: the first failing basis tuple, if any.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

impl AxiomCheck {
    pub fn from_witness(witness: Option<Vec<usize>>) -> Self {
        AxiomCheck {
            holds: witness.is_none(),
            witness,
        }
    }

    pub fn pass() -> Self {
        Self::from_witness(None)
    }
}

/// Runs `f` over `0..n` in parallel and returns the lowest-index failure.
fn first_failure<F>(n: usize, f: F) -> Option<Vec<usize>>
where
    F: Fn(usize) -> Option<Vec<usize>> + Sync + Send,
{
    (0..n).into_par_iter().find_map_first(f)
}

/// A finite-dimensional unital algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinAlgebra {
    conductor: u32,
    labels: Vec<String>,
    /// `mult[i * dim + j]` is `e_i e_j` as sparse `(k, c)` terms.
    mult: Vec<Vec<(usize, CycNum)>>,
    unit: Vector,
}

impl FinAlgebra {
    /// Builds an algebra from dense products of basis pairs.
    pub fn from_products<F>(conductor: u32, labels: Vec<String>, unit: Vector, mut product: F) -> Result<Self, HopfError>
    where
        F: FnMut(usize, usize) -> Vector,
    {
        let dim = labels.len();
        if unit.len() != dim {
            return Err(HopfError::Malformed(format!("unit has length {}, expected {dim}", unit.len())));
        }
        let mut mult = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = product(i, j);
                if v.len() != dim {
                    return Err(HopfError::Malformed(format!("product e{i}e{j} has wrong length")));
                }
                mult.push(linalg::support(&v).map(|(k, c)| (k, c.clone())).collect());
            }
        }
        Self::from_sparse(conductor, labels, mult, unit)
    }

    pub fn from_sparse(
        conductor: u32,
        labels: Vec<String>,
        mult: Vec<Vec<(usize, CycNum)>>,
        unit: Vector,
    ) -> Result<Self, HopfError> {
        let dim = labels.len();
        if dim == 0 {
            return Err(HopfError::Malformed("algebra of dimension 0".into()));
        }
        if mult.len() != dim * dim || unit.len() != dim {
            return Err(HopfError::Malformed("table sizes disagree with the basis".into()));
        }
        let all = mult.iter().flatten().map(|(k, c)| (*k, c)).chain(unit.iter().enumerate());
        for (k, c) in all {
            if k >= dim {
                return Err(HopfError::Malformed(format!("basis index {k} out of range")));
            }
            if c.conductor() != conductor {
                return Err(CycError::ConductorMismatch(c.conductor(), conductor).into());
            }
        }
        Ok(FinAlgebra {
            conductor,
            labels,
            mult,
            unit,
        })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn basis(&self, i: usize) -> Vector {
        linalg::basis_vector(self.dim(), i, self.conductor)
    }

    pub fn zero(&self) -> Vector {
        linalg::zero_vector(self.dim(), self.conductor)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, CycNum)] {
        &self.mult[i * self.dim() + j]
    }

    pub fn mul(&self, a: &[CycNum], b: &[CycNum]) -> Vector {
        let mut out = self.zero();
        for (i, ca) in linalg::support(a) {
            for (j, cb) in linalg::support(b) {
                let cab = ca * cb;
                for (k, c) in self.basis_product(i, j) {
                    out[*k] += &(&cab * c);
                }
            }
        }
        out
    }

    /// Product of any number of factors, left to right.
    pub fn mul_all(&self, factors: &[&[CycNum]]) -> Vector {
        factors
            .iter()
            .fold(self.unit.clone(), |acc, f| self.mul(&acc, f))
    }

    pub fn pow(&self, a: &[CycNum], k: u32) -> Vector {
        (0..k).fold(self.unit.clone(), |acc, _| self.mul(&acc, a))
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..d).all(|j| self.mul(&self.basis(i), &self.basis(j)) == self.mul(&self.basis(j), &self.basis(i))))
    }

    pub fn check_associative(&self) -> AxiomCheck {
        let d = self.dim();
        AxiomCheck::from_witness(first_failure(d, |i| {
            let ei = self.basis(i);
            for j in 0..d {
                let eij = self.mul(&ei, &self.basis(j));
                for k in 0..d {
                    let ek = self.basis(k);
                    let left = self.mul(&eij, &ek);
                    let right = self.mul(&ei, &self.mul(&self.basis(j), &ek));
                    if left != right {
                        return Some(vec![i, j, k]);
                    }
                }
            }
            None
        }))
    }

    pub fn check_unit(&self) -> AxiomCheck {
        let witness = (0..self.dim()).find(|&i| {
            let e = self.basis(i);
            self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e
        });
        AxiomCheck::from_witness(witness.map(|i| vec![i]))
    }

    /// Moves all structure constants into Q(ζ_target).
    pub fn embed(&self, target: u32) -> Result<Self, HopfError> {
        if target == self.conductor {
            return Ok(self.clone());
        }
        let mult = self
            .mult
            .iter()
            .map(|terms| terms.iter().map(|(k, c)| Ok((*k, c.embed(target)?))).collect::<Result<Vec<_>, CycError>>())
            .collect::<Result<Vec<_>, _>>()?;
        let unit = embed_vector(&self.unit, target)?;
        Ok(FinAlgebra {
            conductor: target,
            labels: self.labels.clone(),
            mult,
            unit,
        })
    }

    /// Elementwise product on `A ⊗ B` for algebras `self` and `other`.
    pub fn tensor_mul(&self, other: &FinAlgebra, x: &Tensor2, y: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::new();
        for ((a1, b1), c1) in x {
            for ((a2, b2), c2) in y {
                let c12 = c1 * c2;
                for (ka, ca) in self.basis_product(*a1, *a2) {
                    let cc = &c12 * ca;
                    for (kb, cb) in other.basis_product(*b1, *b2) {
                        accumulate(&mut out, (*ka, *kb), &cc * cb);
                    }
                }
            }
        }
        out
    }
}

pub(crate) fn embed_vector(v: &[CycNum], target: u32) -> Result<Vector, CycError> {
    v.iter().map(|c| c.embed(target)).collect()
}

/// Which family a Hopf algebra was built from; informational only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum HopfKind {
    Taft { n: u32, q_power: u32 },
    Nichols { n: u32 },
    Group { n: u32 },
    Dual { of: Box<HopfKind> },
    Custom,
}

/// A bialgebra with optional antipode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfData {
    alg: FinAlgebra,
    /// `comult[k]` is `Δ(e_k)` as sparse `(left, right, c)` terms.
    comult: Vec<Vec<(usize, usize, CycNum)>>,
    counit: Vector,
    antipode: Option<LinMap>,
    kind: HopfKind,
}

impl HopfData {
    pub fn new(
        alg: FinAlgebra,
        comult: Vec<Vec<(usize, usize, CycNum)>>,
        counit: Vector,
        antipode: Option<LinMap>,
        kind: HopfKind,
    ) -> Result<Self, HopfError> {
        let d = alg.dim();
        if comult.len() != d || counit.len() != d {
            return Err(HopfError::Malformed("coalgebra tables disagree with the basis".into()));
        }
        if comult.iter().flatten().any(|(l, r, _)| *l >= d || *r >= d) {
            return Err(HopfError::Malformed("coproduct index out of range".into()));
        }
        let c = alg.conductor();
        let conductors = comult
            .iter()
            .flatten()
            .map(|(_, _, x)| x.conductor())
            .chain(counit.iter().map(CycNum::conductor));
        for k in conductors {
            if k != c {
                return Err(CycError::ConductorMismatch(k, c).into());
            }
        }
        if let Some(s) = &antipode {
            if s.src_dim() != d || s.dst_dim() != d {
                return Err(HopfError::Malformed("antipode has wrong shape".into()));
            }
        }
        Ok(HopfData {
            alg,
            comult,
            counit,
            antipode,
            kind,
        })
    }

    pub fn alg(&self) -> &FinAlgebra {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn conductor(&self) -> u32 {
        self.alg.conductor()
    }

    pub fn kind(&self) -> &HopfKind {
        &self.kind
    }

    pub fn labels(&self) -> &[String] {
        self.alg.labels()
    }

    pub fn counit(&self) -> &Vector {
        &self.counit
    }

    pub fn antipode(&self) -> Option<&LinMap> {
        self.antipode.as_ref()
    }

    pub fn comult_basis(&self, k: usize) -> &[(usize, usize, CycNum)] {
        &self.comult[k]
    }

    pub fn comult(&self, v: &[CycNum]) -> Tensor2 {
        let mut out = Tensor2::new();
        for (k, ck) in linalg::support(v) {
            for (l, r, c) in &self.comult[k] {
                accumulate(&mut out, (*l, *r), ck * c);
            }
        }
        out
    }

    pub fn counit_of(&self, v: &[CycNum]) -> CycNum {
        v.iter()
            .zip(&self.counit)
            .fold(CycNum::zero(self.conductor()), |acc, (a, b)| acc + a * b)
    }

    /// Index of a label in the basis.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels().iter().position(|l| l == label)
    }

    pub fn with_kind(mut self, kind: HopfKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn embed(&self, target: u32) -> Result<Self, HopfError> {
        if target == self.conductor() {
            return Ok(self.clone());
        }
        let comult = self
            .comult
            .iter()
            .map(|t| t.iter().map(|(l, r, c)| Ok((*l, *r, c.embed(target)?))).collect::<Result<Vec<_>, CycError>>())
            .collect::<Result<Vec<_>, _>>()?;
        let antipode = match &self.antipode {
            Some(s) => {
                let rows = s.rows().iter().map(|r| embed_vector(r, target)).collect::<Result<Vec<_>, _>>()?;
                Some(LinMap::from_rows(s.src_dim(), rows)?)
            }
            None => None,
        };
        Ok(HopfData {
            alg: self.alg.embed(target)?,
            comult,
            counit: embed_vector(&self.counit, target)?,
            antipode,
            kind: self.kind.clone(),
        })
    }

    /// Builds a Hopf algebra from a skew-commutation presentation and the
    /// images of the generators, extending Δ and ε multiplicatively and S
    /// anti-multiplicatively.
    fn from_presentation(
        p: &Presentation,
        gen_comult: &[Tensor2],
        gen_counit: &[CycNum],
        gen_antipode: &[Vector],
        kind: HopfKind,
    ) -> Result<Self, HopfError> {
        let c = p.conductor();
        let d = p.dim();
        let labels: Vec<String> = (0..d).map(|i| p.label(&p.exponents_of(i))).collect();
        let unit = linalg::basis_vector(d, 0, c);
        let alg = FinAlgebra::from_products(c, labels, unit, |i, j| {
            let mut v = linalg::zero_vector(d, c);
            if let Some((coeff, k)) = p.multiply(i, j) {
                v[k] = coeff;
            }
            v
        })?;
        let mut comult = Vec::with_capacity(d);
        let mut counit = Vec::with_capacity(d);
        let mut s_cols = Vec::with_capacity(d);
        for k in 0..d {
            let word = p.word_of(&p.exponents_of(k));
            let mut delta: Tensor2 = [((0, 0), CycNum::one(c))].into_iter().collect();
            let mut eps = CycNum::one(c);
            let mut s = alg.unit().clone();
            for &l in &word {
                delta = alg.tensor_mul(&alg, &delta, &gen_comult[l]);
                eps = &eps * &gen_counit[l];
                s = alg.mul(&gen_antipode[l], &s);
            }
            comult.push(delta.into_iter().map(|((a, b), x)| (a, b, x)).collect());
            counit.push(eps);
            s_cols.push(s);
        }
        let antipode = LinMap::from_columns(d, &s_cols, c)?;
        HopfData::new(alg, comult, counit, Some(antipode), kind)
    }
}

fn single(d: usize, k: usize, c: CycNum) -> Vector {
    let cond = c.conductor();
    let mut v = linalg::zero_vector(d, cond);
    v[k] = c;
    v
}

/// `Tₙ(q)`: basis `g^i x^j` at index `i·n + j`, with `gⁿ = 1`, `xⁿ = 0`,
/// `xg = q gx`, `Δ(x) = x⊗1 + g⊗x`, `S(x) = −g^{n−1}x`.
pub fn taft_algebra(n: u32, q: &RootOfUnity) -> Result<HopfData, HopfError> {
    if n < 2 {
        return Err(HopfError::TooSmall { n, min: 2 });
    }
    if q.conductor() != n {
        return Err(HopfError::NotPrimitive {
            n,
            conductor: q.conductor(),
            exponent: q.exponent(),
        });
    }
    let c = n;
    let mut p = Presentation::new(
        c,
        vec![
            Letter { name: "g".into(), kind: LetterKind::Cyclic(n) },
            Letter { name: "x".into(), kind: LetterKind::Nilpotent(n) },
        ],
    );
    p.set_swap(1, 0, q.value());
    let g = p.index_of(&[1, 0]);
    let x = p.index_of(&[0, 1]);
    let one = CycNum::one(c);
    let gen_comult = vec![
        [((g, g), one.clone())].into_iter().collect(),
        [((x, 0), one.clone()), ((g, x), one.clone())].into_iter().collect(),
    ];
    let gen_counit = vec![one.clone(), CycNum::zero(c)];
    let d = p.dim();
    let gen_antipode = vec![
        single(d, p.index_of(&[n - 1, 0]), one.clone()),
        single(d, p.index_of(&[n - 1, 1]), -one),
    ];
    HopfData::from_presentation(
        &p,
        &gen_comult,
        &gen_counit,
        &gen_antipode,
        HopfKind::Taft { n, q_power: q.exponent() },
    )
}

/// The closed form `Δ(g^i x^j) = Σ_ℓ (j ℓ)_q g^{i+ℓ}x^{j−ℓ} ⊗ g^i x^ℓ`.
pub fn taft_comult_closed_form(n: u32, q: &RootOfUnity, i: u32, j: u32) -> Tensor2 {
    let qv = q.value();
    let mut out = Tensor2::new();
    for l in 0..=j {
        let c = q_binomial(j as i64, l as i64, &qv);
        let left = (((i + l) % n) * n + (j - l)) as usize;
        let right = (i * n + l) as usize;
        accumulate(&mut out, (left, right), c);
    }
    out
}

/// `H_{2ⁿ}` over Q: letters `g, x₁, …, x_{n−1}`, binary-tuple basis order.
pub fn nichols_algebra(n: u32) -> Result<HopfData, HopfError> {
    if n < 2 {
        return Err(HopfError::TooSmall { n, min: 2 });
    }
    let c = 1;
    let mut letters = vec![Letter { name: "g".into(), kind: LetterKind::Cyclic(2) }];
    letters.extend((1..n).map(|i| Letter {
        name: format!("x{i}"),
        kind: LetterKind::Nilpotent(2),
    }));
    let mut p = Presentation::new(c, letters);
    let minus = CycNum::from_int(c, -1);
    for b in 1..n as usize {
        for a in 0..b {
            p.set_swap(b, a, minus.clone());
        }
    }
    let k = n as usize;
    let mono = |set: &[usize]| {
        let mut e = vec![0u32; k];
        for &s in set {
            e[s] = 1;
        }
        p.index_of(&e)
    };
    let one = CycNum::one(c);
    let g = mono(&[0]);
    let d = p.dim();
    let mut gen_comult: Vec<Tensor2> = vec![[((g, g), one.clone())].into_iter().collect()];
    let mut gen_counit = vec![one.clone()];
    let mut gen_antipode = vec![single(d, g, one.clone())];
    for i in 1..k {
        let x = mono(&[i]);
        gen_comult.push([((x, 0), one.clone()), ((g, x), one.clone())].into_iter().collect());
        gen_counit.push(CycNum::zero(c));
        gen_antipode.push(single(d, mono(&[0, i]), minus.clone()));
    }
    HopfData::from_presentation(&p, &gen_comult, &gen_counit, &gen_antipode, HopfKind::Nichols { n })
}

/// The group algebra `kCₙ` over Q with basis `g^i`.
pub fn group_algebra(n: u32) -> Result<HopfData, HopfError> {
    if n < 1 {
        return Err(HopfError::TooSmall { n, min: 1 });
    }
    let c = 1;
    let p = Presentation::new(c, vec![Letter { name: "g".into(), kind: LetterKind::Cyclic(n) }]);
    let (_, g) = p.normal_order(&[0]).expect("cyclic letters never vanish");
    let (_, g_inv) = p.normal_order(&vec![0; (n - 1) as usize]).expect("cyclic letters never vanish");
    let one = CycNum::one(c);
    let gen_comult = vec![[((g, g), one.clone())].into_iter().collect()];
    HopfData::from_presentation(
        &p,
        &gen_comult,
        &[one.clone()],
        &[single(p.dim(), g_inv, one)],
        HopfKind::Group { n },
    )
}

/// Per-axiom verdicts of [`check_hopf_axioms`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfReport {
    pub associativity: AxiomCheck,
    pub unit: AxiomCheck,
    pub coassociativity: AxiomCheck,
    pub counit: AxiomCheck,
    /// `Δ(e_i e_j) = Δ(e_i)Δ(e_j)` and `Δ(1) = 1⊗1`.
    pub comult_multiplicative: AxiomCheck,
    /// `ε(e_i e_j) = ε(e_i)ε(e_j)` and `ε(1) = 1`.
    pub counit_multiplicative: AxiomCheck,
    /// `m(S⊗id)Δ = uε = m(id⊗S)Δ`; `None` when no antipode is stored.
    pub antipode: Option<AxiomCheck>,
}

impl HopfReport {
    pub fn is_bialgebra(&self) -> bool {
        [
            &self.associativity,
            &self.unit,
            &self.coassociativity,
            &self.counit,
            &self.comult_multiplicative,
            &self.counit_multiplicative,
        ]
        .iter()
        .all(|c| c.holds)
    }

    pub fn passed(&self) -> bool {
        self.is_bialgebra() && self.antipode.as_ref().is_some_and(|a| a.holds)
    }

    /// Name of the first failing axiom.
    pub fn first_failure(&self) -> Option<&'static str> {
        let named = [
            ("associativity", &self.associativity),
            ("unit", &self.unit),
            ("coassociativity", &self.coassociativity),
            ("counit", &self.counit),
            ("comultiplicativity", &self.comult_multiplicative),
            ("counit multiplicativity", &self.counit_multiplicative),
        ];
        named
            .iter()
            .find(|(_, c)| !c.holds)
            .map(|(n, _)| *n)
            .or_else(|| match &self.antipode {
                Some(a) if !a.holds => Some("antipode"),
                None => Some("antipode"),
                _ => None,
            })
    }
}

pub fn check_hopf_axioms(h: &HopfData) -> HopfReport {
    let d = h.dim();
    let c = h.conductor();
    let alg = h.alg();

    let coassociativity = AxiomCheck::from_witness(first_failure(d, |k| {
        let mut left = Tensor3::new();
        let mut right = Tensor3::new();
        for (l, r, x) in h.comult_basis(k) {
            for (ll, lr, y) in h.comult_basis(*l) {
                accumulate(&mut left, (*ll, *lr, *r), x * y);
            }
            for (rl, rr, y) in h.comult_basis(*r) {
                accumulate(&mut right, (*l, *rl, *rr), x * y);
            }
        }
        (left != right).then(|| vec![k])
    }));

    let counit = AxiomCheck::from_witness(first_failure(d, |k| {
        let mut left = linalg::zero_vector(d, c);
        let mut right = linalg::zero_vector(d, c);
        for (l, r, x) in h.comult_basis(k) {
            right[*l] += &(x * &h.counit[*r]);
            left[*r] += &(x * &h.counit[*l]);
        }
        let e = alg.basis(k);
        (left != e || right != e).then(|| vec![k])
    }));

    let unit_delta = h.comult(alg.unit());
    let one_one: Tensor2 = linalg::support(alg.unit())
        .flat_map(|(a, ca)| linalg::support(alg.unit()).map(move |(b, cb)| ((a, b), ca * cb)))
        .collect();
    let comult_multiplicative = if unit_delta != one_one {
        AxiomCheck::from_witness(Some(vec![]))
    } else {
        AxiomCheck::from_witness(first_failure(d, |i| {
            let di = h.comult(&alg.basis(i));
            for j in 0..d {
                let dj = h.comult(&alg.basis(j));
                let prod = alg.mul(&alg.basis(i), &alg.basis(j));
                if h.comult(&prod) != alg.tensor_mul(alg, &di, &dj) {
                    return Some(vec![i, j]);
                }
            }
            None
        }))
    };

    let counit_multiplicative = if !h.counit_of(alg.unit()).is_one() {
        AxiomCheck::from_witness(Some(vec![]))
    } else {
        let w = (0..d).find_map(|i| {
            (0..d)
                .find(|&j| {
                    let prod = alg.mul(&alg.basis(i), &alg.basis(j));
                    h.counit_of(&prod) != &h.counit[i] * &h.counit[j]
                })
                .map(|j| vec![i, j])
        });
        AxiomCheck::from_witness(w)
    };

    let antipode = h.antipode().map(|s| {
        let cols: Vec<Vector> = (0..d).map(|k| s.column(k)).collect();
        AxiomCheck::from_witness(first_failure(d, |k| {
            let mut left = linalg::zero_vector(d, c);
            let mut right = linalg::zero_vector(d, c);
            for (l, r, x) in h.comult_basis(k) {
                let sl_r = alg.mul(&cols[*l], &alg.basis(*r));
                linalg::axpy(&mut left, x, &sl_r);
                let l_sr = alg.mul(&alg.basis(*l), &cols[*r]);
                linalg::axpy(&mut right, x, &l_sr);
            }
            let expected = linalg::scaled(&h.counit[k], alg.unit());
            (left != expected || right != expected).then(|| vec![k])
        }))
    });

    HopfReport {
        associativity: alg.check_associative(),
        unit: alg.check_unit(),
        coassociativity,
        counit,
        comult_multiplicative,
        counit_multiplicative,
        antipode,
    }
}

fn dual_label(l: &str) -> String {
    if l.chars().count() == 1 {
        format!("{l}*")
    } else {
        format!("({l})*")
    }
}

/// `H*` on the dual basis, without checking that `H` is a bialgebra.
pub fn dual_unchecked(h: &HopfData) -> HopfData {
    let d = h.dim();
    let c = h.conductor();
    // e_a* e_b* = Σ_c [coefficient of e_a⊗e_b in Δ(e_c)] e_c*
    let mut mult: Vec<Vec<(usize, CycNum)>> = vec![Vec::new(); d * d];
    for k in 0..d {
        for (l, r, x) in h.comult_basis(k) {
            mult[l * d + r].push((k, x.clone()));
        }
    }
    for terms in &mut mult {
        terms.sort_by_key(|(k, _)| *k);
    }
    // Δ(e_k*) = Σ [coefficient of e_k in e_a e_b] e_a*⊗e_b*
    let mut comult: Vec<Vec<(usize, usize, CycNum)>> = vec![Vec::new(); d];
    for a in 0..d {
        for b in 0..d {
            for (k, x) in h.alg().basis_product(a, b) {
                comult[*k].push((a, b, x.clone()));
            }
        }
    }
    let labels = h.labels().iter().map(|l| dual_label(l)).collect();
    let alg = FinAlgebra::from_sparse(c, labels, mult, h.counit.clone()).expect("transposed tables are well formed");
    let counit = h.alg().unit().clone();
    HopfData {
        alg,
        comult,
        counit,
        antipode: h.antipode().map(LinMap::transpose),
        kind: HopfKind::Dual {
            of: Box::new(h.kind.clone()),
        },
    }
}

/// The dual Hopf algebra; refuses inputs that fail the axioms.
pub fn dual_hopf(h: &HopfData) -> Result<HopfData, HopfError> {
    let report = check_hopf_axioms(h);
    if let Some(axiom) = report.first_failure() {
        return Err(HopfError::AxiomFailed(axiom));
    }
    Ok(dual_unchecked(h))
}

/// Equality of all structure constants, ignoring labels and kind.
pub fn same_structure(a: &HopfData, b: &HopfData) -> bool {
    a.alg.mult == b.alg.mult
        && a.alg.unit == b.alg.unit
        && a.counit == b.counit
        && a.antipode == b.antipode
        && (0..a.dim().max(b.dim())).all(|k| a.comult(&a.alg.basis(k)) == b.comult(&b.alg.basis(k)))
}

/// Checks `f(e_i e_j) = f(e_i) f(e_j)` on basis pairs and `f(1) = 1`.
pub fn is_algebra_map(f: &LinMap, src: &FinAlgebra, dst: &FinAlgebra) -> AxiomCheck {
    if f.apply(src.unit()) != *dst.unit() {
        return AxiomCheck::from_witness(Some(vec![]));
    }
    let d = src.dim();
    let images: Vec<Vector> = (0..d).map(|i| f.column(i)).collect();
    AxiomCheck::from_witness(first_failure(d, |i| {
        (0..d)
            .find(|&j| f.apply(&src.mul(&src.basis(i), &src.basis(j))) != dst.mul(&images[i], &images[j]))
            .map(|j| vec![i, j])
    }))
}

/// Checks `(f⊗f)Δ = Δf` and `εf = ε` on basis elements.
pub fn is_coalgebra_map(f: &LinMap, src: &HopfData, dst: &HopfData) -> AxiomCheck {
    let d = src.dim();
    let images: Vec<Vector> = (0..d).map(|i| f.column(i)).collect();
    AxiomCheck::from_witness(first_failure(d, |k| {
        if dst.counit_of(&images[k]) != src.counit[k] {
            return Some(vec![k]);
        }
        let mut pushed = Tensor2::new();
        for (l, r, x) in src.comult_basis(k) {
            for (a, ca) in linalg::support(&images[*l]) {
                for (b, cb) in linalg::support(&images[*r]) {
                    accumulate(&mut pushed, (a, b), &(x * ca) * cb);
                }
            }
        }
        (pushed != dst.comult(&images[k])).then(|| vec![k])
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapReport {
    pub algebra: AxiomCheck,
    pub coalgebra: AxiomCheck,
    /// `S_dst ∘ f = f ∘ S_src`, when both antipodes exist.
    pub antipode: Option<bool>,
}

impl MapReport {
    pub fn is_bialgebra_map(&self) -> bool {
        self.algebra.holds && self.coalgebra.holds
    }

    pub fn is_hopf_map(&self) -> bool {
        self.is_bialgebra_map() && self.antipode != Some(false)
    }
}

pub fn check_hopf_map(f: &LinMap, src: &HopfData, dst: &HopfData) -> MapReport {
    let antipode = match (src.antipode(), dst.antipode()) {
        (Some(s), Some(t)) => Some(t.compose(f).ok() == f.compose(s).ok()),
        _ => None,
    };
    MapReport {
        algebra: is_algebra_map(f, src.alg(), dst.alg()),
        coalgebra: is_coalgebra_map(f, src, dst),
        antipode,
    }
}

/// `ψ: Tₙ(q) → Tₙ(q)*`, `ψ(g^i x^j) = Σ_k (j)_q! q^{−i(k+j)−jk−j(j−1)/2} (g^k x^j)*`.
pub fn taft_selfdual_psi(n: u32, q: &RootOfUnity) -> Result<LinMap, HopfError> {
    check_taft_params(n, q)?;
    let qv = q.value();
    let d = (n * n) as usize;
    let nn = n as i64;
    let cols: Vec<Vector> = (0..nn)
        .flat_map(|i| (0..nn).map(move |j| (i, j)))
        .map(|(i, j)| {
            let fact = q_factorial(j, &qv);
            let mut col = linalg::zero_vector(d, n);
            for k in 0..nn {
                let e = -i * (k + j) - j * k - j * (j - 1) / 2;
                col[(k * nn + j) as usize] = &fact * &q.pow(e);
            }
            col
        })
        .collect();
    Ok(LinMap::from_columns(d, &cols, n)?)
}

/// `φ: Tₙ(q)* → Tₙ(q)`, `φ((g^i x^j)*) = (1/n)((j)_q!)^{−1} q^{ij+j(j−1)/2} Σ_k q^{k(i+j)} g^k x^j`.
pub fn taft_selfdual_phi(n: u32, q: &RootOfUnity) -> Result<LinMap, HopfError> {
    check_taft_params(n, q)?;
    let qv = q.value();
    let d = (n * n) as usize;
    let nn = n as i64;
    let inv_n = CycNum::from_frac(n, 1, nn);
    let mut cols = Vec::with_capacity(d);
    for i in 0..nn {
        for j in 0..nn {
            let pre = &(&inv_n * &q_factorial(j, &qv).inv()?) * &q.pow(i * j + j * (j - 1) / 2);
            let mut col = linalg::zero_vector(d, n);
            for k in 0..nn {
                col[(k * nn + j) as usize] = &pre * &q.pow(k * (i + j));
            }
            cols.push(col);
        }
    }
    Ok(LinMap::from_columns(d, &cols, n)?)
}

fn check_taft_params(n: u32, q: &RootOfUnity) -> Result<(), HopfError> {
    if n < 2 {
        return Err(HopfError::TooSmall { n, min: 2 });
    }
    if q.conductor() != n {
        return Err(HopfError::NotPrimitive {
            n,
            conductor: q.conductor(),
            exponent: q.exponent(),
        });
    }
    Ok(())
}

/// `ψ: H_{2ⁿ} → H_{2ⁿ}*` with `ψ(g) = 1* − g*`, `ψ(xᵢ) = xᵢ* − (gxᵢ)*`,
/// extended multiplicatively.
pub fn nichols_selfdual_psi(n: u32) -> Result<LinMap, HopfError> {
    let h = nichols_algebra(n)?;
    let dual = dual_unchecked(&h);
    let d = h.dim();
    let c = h.conductor();
    let k = n as usize;
    let idx = |set: &[usize]| -> usize {
        let mut e = vec![0usize; k];
        for &s in set {
            e[s] = 1;
        }
        e.iter().fold(0, |acc, b| acc * 2 + b)
    };
    let one = CycNum::one(c);
    let minus = CycNum::from_int(c, -1);
    let mut gen_images = vec![{
        let mut v = linalg::zero_vector(d, c);
        v[idx(&[])] = one.clone();
        v[idx(&[0])] = minus.clone();
        v
    }];
    for i in 1..k {
        let mut v = linalg::zero_vector(d, c);
        v[idx(&[i])] = one.clone();
        v[idx(&[0, i])] = minus.clone();
        gen_images.push(v);
    }
    let cols: Vec<Vector> = (0..d)
        .map(|m| {
            // bits of m from most significant: g, x1, ..., x_{n-1}
            (0..k)
                .filter(|&b| (m >> (k - 1 - b)) & 1 == 1)
                .fold(dual.alg().unit().clone(), |acc, b| dual.alg().mul(&acc, &gen_images[b]))
        })
        .collect();
    Ok(LinMap::from_columns(d, &cols, c)?)
}

/// `π: Tₙ(q) → kCₙ`, `π(g^i x^j) = δ_{j,0} g^i`.
pub fn projection_pi(n: u32) -> LinMap {
    let d = (n * n) as usize;
    let cols: Vec<Vector> = (0..d)
        .map(|k| {
            let (i, j) = (k / n as usize, k % n as usize);
            let mut v = linalg::zero_vector(n as usize, n);
            if j == 0 {
                v[i] = CycNum::one(n);
            }
            v
        })
        .collect();
    LinMap::from_columns(n as usize, &cols, n).expect("columns have length n")
}

/// Basis monomials `e_k` with a scalar multiple `c·e_k` group-like,
/// returned as `(k, c)`.
pub fn monomial_group_likes(h: &HopfData) -> Vec<(usize, CycNum)> {
    (0..h.dim())
        .filter_map(|k| match h.comult_basis(k) {
            [(l, r, lambda)] if *l == k && *r == k => lambda.inv().ok().map(|c| (k, c)),
            _ => None,
        })
        .collect()
}

/// Basis of `{v : Δ(v) ∈ span{e_i ⊗ e_i}}`, which contains every group-like.
pub fn diagonal_comult_space(h: &HopfData) -> Vec<Vector> {
    let d = h.dim();
    let c = h.conductor();
    let mut equations: BTreeMap<(usize, usize), Vector> = BTreeMap::new();
    for k in 0..d {
        for (l, r, x) in h.comult_basis(k) {
            if l != r {
                equations
                    .entry((*l, *r))
                    .or_insert_with(|| linalg::zero_vector(d, c))[k] += x;
            }
        }
    }
    let rows: Vec<Vector> = equations.into_values().collect();
    linalg::kernel(&rows, d, c)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct FinAlgebraRepr {
    dim: usize,
    labels: Vec<String>,
    conductor: u32,
    mult: Vec<(usize, usize, usize, CycNum)>,
    unit: Vec<CycNum>,
}

impl From<&FinAlgebra> for FinAlgebraRepr {
    fn from(a: &FinAlgebra) -> Self {
        let d = a.dim();
        let mult = (0..d)
            .flat_map(|i| (0..d).map(move |j| (i, j)))
            .flat_map(|(i, j)| a.basis_product(i, j).iter().map(move |(k, c)| (i, j, *k, c.clone())))
            .collect();
        FinAlgebraRepr {
            dim: d,
            labels: a.labels.clone(),
            conductor: a.conductor,
            mult,
            unit: a.unit.clone(),
        }
    }
}

impl TryFrom<FinAlgebraRepr> for FinAlgebra {
    type Error = HopfError;

    fn try_from(r: FinAlgebraRepr) -> Result<Self, HopfError> {
        if r.labels.len() != r.dim {
            return Err(HopfError::Malformed("labels disagree with dim".into()));
        }
        let d = r.dim;
        let mut mult = vec![Vec::new(); d * d];
        for (i, j, k, c) in r.mult {
            if i >= d || j >= d || k >= d {
                return Err(HopfError::Malformed("product index out of range".into()));
            }
            mult[i * d + j].push((k, c));
        }
        for terms in &mut mult {
            terms.sort_by_key(|(k, _)| *k);
            if terms.windows(2).any(|w| w[0].0 == w[1].0) {
                return Err(HopfError::Malformed("repeated product entry".into()));
            }
        }
        FinAlgebra::from_sparse(r.conductor, r.labels, mult, r.unit)
    }
}

impl Serialize for FinAlgebra {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        FinAlgebraRepr::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for FinAlgebra {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = FinAlgebraRepr::deserialize(d)?;
        FinAlgebra::try_from(r).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct HopfRepr {
    dim: usize,
    labels: Vec<String>,
    conductor: u32,
    kind: HopfKind,
    mult: Vec<(usize, usize, usize, CycNum)>,
    unit: Vec<CycNum>,
    comult: Vec<(usize, usize, usize, CycNum)>,
    counit: Vec<CycNum>,
    antipode: Option<Vec<(usize, usize, CycNum)>>,
}

impl Serialize for HopfData {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let a = FinAlgebraRepr::from(&self.alg);
        let comult = self
            .comult
            .iter()
            .enumerate()
            .flat_map(|(k, t)| t.iter().map(move |(l, r, c)| (k, *l, *r, c.clone())))
            .collect();
        let antipode = self.antipode.as_ref().map(|m| {
            m.rows()
                .iter()
                .enumerate()
                .flat_map(|(i, row)| linalg::support(row).map(move |(j, c)| (i, j, c.clone())))
                .collect()
        });
        HopfRepr {
            dim: a.dim,
            labels: a.labels,
            conductor: a.conductor,
            kind: self.kind.clone(),
            mult: a.mult,
            unit: a.unit,
            comult,
            counit: self.counit.clone(),
            antipode,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HopfData {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let r = HopfRepr::deserialize(de)?;
        let d = r.dim;
        let c = r.conductor;
        let alg = FinAlgebra::try_from(FinAlgebraRepr {
            dim: d,
            labels: r.labels,
            conductor: c,
            mult: r.mult,
            unit: r.unit,
        })
        .map_err(D::Error::custom)?;
        let mut comult = vec![Vec::new(); d];
        for (k, l, rr, x) in r.comult {
            if k >= d {
                return Err(D::Error::custom("coproduct index out of range"));
            }
            comult[k].push((l, rr, x));
        }
        let antipode = match r.antipode {
            Some(entries) => {
                let mut m = LinMap::zero(d, d, c).rows().to_vec();
                for (i, j, x) in entries {
                    if i >= d || j >= d {
                        return Err(D::Error::custom("antipode index out of range"));
                    }
                    m[i][j] = x;
                }
                Some(LinMap::from_rows(d, m).map_err(D::Error::custom)?)
            }
            None => None,
        };
        HopfData::new(alg, comult, r.counit, antipode, r.kind).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn root(n: u32, t: i64) -> RootOfUnity {
        RootOfUnity::new(n, t).unwrap()
    }

    #[test]
    fn sweedler_structure() {
        let h = taft_algebra(2, &root(2, 1)).unwrap();
        assert_eq!(h.labels(), ["1", "x", "g", "gx"]);
        let x = h.index_of("x").unwrap();
        let g = h.index_of("g").unwrap();
        let gx = h.index_of("gx").unwrap();
        let one = CycNum::one(2);
        let mut expected = Tensor2::new();
        expected.insert((x, 0), one.clone());
        expected.insert((g, x), one.clone());
        assert_eq!(h.comult(&h.alg().basis(x)), expected);
        assert_eq!(h.antipode().unwrap().column(x), single(4, gx, -one));
    }

    #[test]
    fn taft_dimension_and_relation() {
        for n in 2..=4 {
            let h = taft_algebra(n, &root(n, 1)).unwrap();
            assert_eq!(h.dim(), (n * n) as usize);
        }
        let h = taft_algebra(3, &root(3, 1)).unwrap();
        let a = h.alg();
        let g = a.basis(h.index_of("g").unwrap());
        let x = a.basis(h.index_of("x").unwrap());
        let gx = a.mul(&g, &x);
        assert_eq!(a.mul(&x, &g), linalg::scaled(&CycNum::zeta(3), &gx));
    }

    #[test]
    fn taft_comult_matches_closed_form() {
        for n in 2..=5 {
            for q in RootOfUnity::all_primitive(n) {
                let h = taft_algebra(n, &q).unwrap();
                for i in 0..n {
                    for j in 0..n {
                        let k = (i * n + j) as usize;
                        assert_eq!(h.comult(&h.alg().basis(k)), taft_comult_closed_form(n, &q, i, j));
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(taft_algebra(1, &root(1, 1)), Err(HopfError::TooSmall { .. })));
        assert!(matches!(taft_algebra(4, &root(2, 1)), Err(HopfError::NotPrimitive { .. })));
        assert!(nichols_algebra(1).is_err());
    }

    #[test]
    fn nichols_two_is_sweedler() {
        let h = nichols_algebra(2).unwrap().embed(2).unwrap();
        let t = taft_algebra(2, &root(2, 1)).unwrap();
        // Nichols labels x1 where Taft writes x
        assert!(same_structure(&h, &t));
    }

    #[test]
    fn nichols_product_coproduct() {
        let h = nichols_algebra(3).unwrap();
        assert_eq!(h.dim(), 8);
        let x1x2 = h.index_of("x1x2").unwrap();
        let terms = h.comult_basis(x1x2);
        assert_eq!(terms.len(), 4);
        // Δ(x₁)Δ(x₂) = x₁x₂⊗1 + x₁g⊗x₂ + gx₂⊗x₁ + g²⊗x₁x₂, and x₁g = −gx₁
        let idx = |s: &str| h.index_of(s).unwrap();
        let one = CycNum::one(1);
        let expected: Tensor2 = [
            ((idx("x1x2"), idx("1")), one.clone()),
            ((idx("gx1"), idx("x2")), -one.clone()),
            ((idx("gx2"), idx("x1")), one.clone()),
            ((idx("1"), idx("x1x2")), one.clone()),
        ]
        .into_iter()
        .collect();
        assert_eq!(h.comult(&h.alg().basis(x1x2)), expected);
    }

    #[test]
    fn axioms_pass_and_catch_flipped_antipode() {
        assert!(check_hopf_axioms(&taft_algebra(4, &root(4, 1)).unwrap()).passed());
        assert!(check_hopf_axioms(&group_algebra(5).unwrap()).passed());
        assert!(check_hopf_axioms(&group_algebra(1).unwrap()).passed());
        assert!(check_hopf_axioms(&nichols_algebra(3).unwrap()).passed());

        let h = taft_algebra(3, &root(3, 1)).unwrap();
        let x = h.index_of("x").unwrap();
        let s = h.antipode().unwrap();
        let mut rows = s.rows().to_vec();
        for row in rows.iter_mut() {
            row[x] = -&row[x];
        }
        let broken = HopfData::new(
            h.alg().clone(),
            h.comult.clone(),
            h.counit.clone(),
            Some(LinMap::from_rows(9, rows).unwrap()),
            HopfKind::Custom,
        )
        .unwrap();
        let report = check_hopf_axioms(&broken);
        assert!(report.is_bialgebra());
        assert_eq!(report.antipode.unwrap().witness, Some(vec![x]));
    }

    #[test]
    fn duals() {
        let h = taft_algebra(3, &root(3, 2)).unwrap();
        let d = dual_hopf(&h).unwrap();
        assert!(check_hopf_axioms(&d).passed());
        assert!(same_structure(&dual_hopf(&d).unwrap(), &h));

        let g = group_algebra(4).unwrap();
        let gd = dual_hopf(&g).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let prod = gd.alg().mul(&gd.alg().basis(i), &gd.alg().basis(j));
                let expected = if i == j { gd.alg().basis(i) } else { gd.alg().zero() };
                assert_eq!(prod, expected);
            }
        }
        assert_eq!(gd.labels()[1], "g*");
    }

    #[test]
    fn taft_self_duality() {
        for n in 2..=4 {
            for q in RootOfUnity::all_primitive(n) {
                let h = taft_algebra(n, &q).unwrap();
                let d = dual_hopf(&h).unwrap();
                let psi = taft_selfdual_psi(n, &q).unwrap();
                let phi = taft_selfdual_phi(n, &q).unwrap();
                assert!(phi.compose(&psi).unwrap().is_identity());
                assert!(check_hopf_map(&psi, &h, &d).is_hopf_map());
                assert!(check_hopf_map(&phi, &d, &h).is_hopf_map());
            }
        }
    }

    #[test]
    fn psi_of_one_is_sum_of_group_duals() {
        let n = 3;
        let q = root(n, 1);
        let psi = taft_selfdual_psi(n, &q).unwrap();
        let mut expected = linalg::zero_vector(9, 3);
        for k in 0..3 {
            expected[k * 3] = CycNum::one(3);
        }
        assert_eq!(psi.column(0), expected);
    }

    #[test]
    fn nichols_self_duality() {
        for n in 2..=4 {
            let h = nichols_algebra(n).unwrap();
            let d = dual_hopf(&h).unwrap();
            let psi = nichols_selfdual_psi(n).unwrap();
            assert!(!psi.determinant().unwrap().is_zero());
            assert!(check_hopf_map(&psi, &h, &d).is_hopf_map());
            let half = CycNum::from_frac(1, 1, 2);
            let a = h.alg();
            let image = |v: Vector| psi.apply(&v);
            let one_plus_g = linalg::add(&a.basis(0), &a.basis(h.index_of("g").unwrap()));
            assert_eq!(image(linalg::scaled(&half, &one_plus_g)), d.alg().basis(0));
            for i in 1..n {
                let xi = a.basis(h.index_of(&format!("x{i}")).unwrap());
                let gxi_idx = h.index_of(&format!("gx{i}")).unwrap();
                let gxi = a.basis(gxi_idx);
                let xi_idx = h.index_of(&format!("x{i}")).unwrap();
                assert_eq!(image(linalg::scaled(&half, &linalg::sub(&xi, &gxi))), d.alg().basis(xi_idx));
                let minus_half = -&half;
                assert_eq!(image(linalg::scaled(&minus_half, &linalg::add(&xi, &gxi))), d.alg().basis(gxi_idx));
            }
        }
    }

    #[test]
    fn projection_is_algebra_map() {
        for n in 2..=4 {
            let q = root(n, 1);
            let h = taft_algebra(n, &q).unwrap();
            let g = group_algebra(n).unwrap().embed(n).unwrap();
            let pi = projection_pi(n);
            assert!(is_algebra_map(&pi, h.alg(), g.alg()).holds);
            assert!(check_hopf_map(&pi, &h, &g).is_hopf_map());
        }
        let pi = projection_pi(3);
        let g2x = 2 * 3 + 1;
        assert!(linalg::is_zero_vector(&pi.column(g2x)));
        assert_eq!(pi.column(6), single(3, 2, CycNum::one(3)));
    }

    #[test]
    fn group_likes() {
        let h = taft_algebra(4, &root(4, 3)).unwrap();
        let found: Vec<usize> = monomial_group_likes(&h).into_iter().map(|(k, _)| k).collect();
        assert_eq!(found, vec![0, 4, 8, 12]);
        assert_eq!(diagonal_comult_space(&h).len(), 4);
        let nh = nichols_algebra(4).unwrap();
        let found: Vec<String> = monomial_group_likes(&nh)
            .into_iter()
            .map(|(k, _)| nh.labels()[k].clone())
            .collect();
        assert_eq!(found, ["1", "g"]);
        assert_eq!(diagonal_comult_space(&nh).len(), 2);
    }

    #[test]
    fn json_round_trip() {
        let h = taft_algebra(3, &root(3, 1)).unwrap();
        let s = serde_json::to_string(&h).unwrap();
        let back: HopfData = serde_json::from_str(&s).unwrap();
        assert_eq!(back, h);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }
}
