//! Partial actions `H ⊗ A → A` stored as full basis tables, the exhaustive
//! axiom checker, and the constructive families for Taft and Nichols
//! algebras.
//!
//! Every axiom is multilinear in `h, k, a, b`, so checking it on basis tuples
//! decides it.

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cyclotomic::{CycError, CycNum, RootOfUnity};
use crate::hopf::{group_algebra, HopfData, HopfError, HopfKind};
use crate::linalg::{self, LinMap, Vector};
use crate::qcomb::QCalc;
use crate::targets::{is_central, TargetAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("table shape: {0}")]
    Shape(String),
    #[error("conductor mismatch: Hopf algebra over Q(z{hopf}), target over Q(z{target})")]
    Conductor { hopf: u32, target: u32 },
    #[error("expected a {expected} algebra")]
    WrongHopf { expected: &'static str },
    #[error("precondition violated: {0}")]
    Precondition(#[from] Precondition),
    #[error("(PA.1) fails, so the table is not a partial action")]
    Pa1Fails,
    #[error("g·1_A = 1_A but h·1_A ≠ ε(h)1_A at basis element {h}")]
    GlobalityViolated { h: usize },
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Cyc(#[from] CycError),
}

/// The named hypotheses of the constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
pub enum Precondition {
    #[error("the restriction to kC_n is not a partial group action ({0})")]
    PartialGroupAction(String),
    #[error("g·1_A must be 0")]
    GOneNonzero,
    #[error("w^n must be central")]
    WPowerNotCentral,
    #[error("g^{i}·w must equal q^-{i}(g^{i}·1_A)w")]
    Twist { i: u32 },
    #[error("w_{index} must be central")]
    NonCentral { index: usize },
    #[error("expected {expected} elements w_i, got {got}")]
    WrongCount { expected: usize, got: usize },
    #[error("g^i·1_A must vanish for 1 <= i < n")]
    NotFieldCase,
}

/// A bilinear map `H ⊗ A → A` given by `rows[h][a] = e_h · e_a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionTable {
    hopf: Arc<HopfData>,
    target: Arc<TargetAlgebra>,
    rows: Vec<Vec<Vector>>,
}

impl ActionTable {
    pub fn new(hopf: Arc<HopfData>, target: Arc<TargetAlgebra>, rows: Vec<Vec<Vector>>) -> Result<Self, ActionError> {
        if hopf.conductor() != target.conductor() {
            return Err(ActionError::Conductor {
                hopf: hopf.conductor(),
                target: target.conductor(),
            });
        }
        let (dh, da) = (hopf.dim(), target.dim());
        if rows.len() != dh || rows.iter().any(|r| r.len() != da || r.iter().any(|v| v.len() != da)) {
            return Err(ActionError::Shape(format!("expected {dh} rows of {da} vectors of length {da}")));
        }
        let c = target.conductor();
        if rows.iter().flatten().flatten().any(|x| x.conductor() != c) {
            return Err(CycError::ConductorMismatch(c, c).into());
        }
        Ok(ActionTable { hopf, target, rows })
    }

    /// Builds the table from a rule `(h, a) ↦ e_h · e_a`.
    pub fn from_fn<F>(hopf: Arc<HopfData>, target: Arc<TargetAlgebra>, f: F) -> Result<Self, ActionError>
    where
        F: Fn(usize, usize) -> Vector,
    {
        let rows = (0..hopf.dim()).map(|h| (0..target.dim()).map(|a| f(h, a)).collect()).collect();
        Self::new(hopf, target, rows)
    }

    /// `h · a = ε(h) a`.
    pub fn trivial(hopf: Arc<HopfData>, target: Arc<TargetAlgebra>) -> Result<Self, ActionError> {
        let counit = hopf.counit().clone();
        let t = target.clone();
        Self::from_fn(hopf, target, move |h, a| linalg::scaled(&counit[h], &t.basis(a)))
    }

    pub fn hopf(&self) -> &Arc<HopfData> {
        &self.hopf
    }

    pub fn target(&self) -> &Arc<TargetAlgebra> {
        &self.target
    }

    pub fn rows(&self) -> &[Vec<Vector>] {
        &self.rows
    }

    pub fn entry(&self, h: usize, a: usize) -> &Vector {
        &self.rows[h][a]
    }

    /// A copy with one coordinate of one entry replaced.
    pub fn with_coefficient(&self, h: usize, a: usize, k: usize, value: CycNum) -> Self {
        let mut rows = self.rows.clone();
        rows[h][a][k] = value;
        ActionTable {
            hopf: self.hopf.clone(),
            target: self.target.clone(),
            rows,
        }
    }

    /// `e_h · a` for an arbitrary vector `a`.
    pub fn act_basis(&self, h: usize, a: &[CycNum]) -> Vector {
        let mut out = self.target.alg.zero();
        for (j, c) in linalg::support(a) {
            linalg::axpy(&mut out, c, &self.rows[h][j]);
        }
        out
    }

    /// `h · a` for arbitrary vectors.
    pub fn act(&self, h: &[CycNum], a: &[CycNum]) -> Vector {
        let mut out = self.target.alg.zero();
        for (i, c) in linalg::support(h) {
            linalg::axpy(&mut out, c, &self.act_basis(i, a));
        }
        out
    }

    /// `e_h · 1_A`.
    pub fn on_one(&self, h: usize) -> Vector {
        self.act_basis(h, self.target.one())
    }

    /// The map `a ↦ e_h · a`.
    pub fn row_map(&self, h: usize) -> LinMap {
        LinMap::from_columns(self.target.dim(), &self.rows[h], self.target.conductor()).expect("rows have target length")
    }
}

/// Which axiom a counterexample violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Axiom {
    #[serde(rename = "PA.1")]
    Pa1,
    #[serde(rename = "PA.2")]
    Pa2,
    #[serde(rename = "PA.3")]
    Pa3,
    #[serde(rename = "PA.2'")]
    Pa2Prime,
    #[serde(rename = "PA.S")]
    PaS,
}

/// A basis tuple where an axiom fails, with both sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub axiom: Axiom,
    pub h: Option<usize>,
    pub k: Option<usize>,
    pub a: Option<usize>,
    pub b: Option<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub pa1: bool,
    pub pa2: bool,
    pub pa3: bool,
    pub pa2prime: bool,
    pub pas: bool,
    /// `h · 1_A = ε(h) 1_A` for every basis `h`.
    pub global: bool,
    /// First basis `h` breaking globality.
    pub global_witness: Option<usize>,
    pub first_counterexample: Option<Counterexample>,
    /// The first counterexample of each failing axiom, in axiom order.
    pub counterexamples: Vec<Counterexample>,
}

impl AxiomReport {
    pub fn is_partial_action(&self) -> bool {
        self.pa1 && self.pa2 && self.pa3
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_partial_action() && self.pas
    }
}

/// Precomputed products `(e_r e_k) · e_a` used by PA.3, PA.S and PA.2′.
struct ProductActions {
    dim_h: usize,
    /// index `(r * dim_h + k) * dim_a + a`
    values: Vec<Vector>,
    dim_a: usize,
}

impl ProductActions {
    fn new(act: &ActionTable) -> Self {
        let h = act.hopf();
        let dh = h.dim();
        let da = act.target().dim();
        let values = (0..dh * dh)
            .into_par_iter()
            .flat_map_iter(|rk| {
                let (r, k) = (rk / dh, rk % dh);
                let prod = h.alg().basis_product(r, k);
                (0..da)
                    .map(|a| {
                        let mut out = act.target().alg.zero();
                        for (m, c) in prod {
                            linalg::axpy(&mut out, c, &act.rows[*m][a]);
                        }
                        out
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        ProductActions { dim_h: dh, values, dim_a: da }
    }

    fn get(&self, r: usize, k: usize, a: usize) -> &Vector {
        &self.values[(r * self.dim_h + k) * self.dim_a + a]
    }
}

fn ce(axiom: Axiom, h: Option<usize>, k: Option<usize>, a: Option<usize>, b: Option<usize>, lhs: Vector, rhs: Vector) -> Counterexample {
    Counterexample { axiom, h, k, a, b, lhs, rhs }
}

/// Exhaustively checks (PA.1), (PA.2), (PA.3), (PA.2′) and (PA.S) on basis
/// tuples, plus globality.
pub fn check_partial_action(act: &ActionTable) -> AxiomReport {
    let hopf = act.hopf();
    let alg = &act.target().alg;
    let dh = hopf.dim();
    let da = alg.dim();
    let ones: Vec<Vector> = (0..dh).map(|h| act.on_one(h)).collect();
    let prods = ProductActions::new(act);

    let pa1 = {
        let unit = hopf.alg().unit();
        (0..da).find_map(|a| {
            let e = alg.basis(a);
            let lhs = act.act(unit, &e);
            (lhs != e).then(|| ce(Axiom::Pa1, None, None, Some(a), None, lhs, e))
        })
    };

    let pa2 = (0..dh).into_par_iter().find_map_first(|h| {
        for a in 0..da {
            for b in 0..da {
                let lhs = act.act_basis(h, &alg.mul(&alg.basis(a), &alg.basis(b)));
                let mut rhs = alg.zero();
                for (l, r, c) in hopf.comult_basis(h) {
                    linalg::axpy(&mut rhs, c, &alg.mul(&act.rows[*l][a], &act.rows[*r][b]));
                }
                if lhs != rhs {
                    return Some(ce(Axiom::Pa2, Some(h), None, Some(a), Some(b), lhs, rhs));
                }
            }
        }
        None
    });

    // h·(k·a) against (h₁·1)(h₂k·a) and, mirrored, (h₁k·a)(h₂·1)
    let (pa3, pas): (Vec<_>, Vec<_>) = (0..dh)
        .into_par_iter()
        .map(|h| {
            let mut f3 = None;
            let mut fs = None;
            'outer: for k in 0..dh {
                for a in 0..da {
                    let lhs = act.act_basis(h, &act.rows[k][a]);
                    if f3.is_none() {
                        let mut rhs = alg.zero();
                        for (l, r, c) in hopf.comult_basis(h) {
                            linalg::axpy(&mut rhs, c, &alg.mul(&ones[*l], prods.get(*r, k, a)));
                        }
                        if lhs != rhs {
                            f3 = Some(ce(Axiom::Pa3, Some(h), Some(k), Some(a), None, lhs.clone(), rhs));
                        }
                    }
                    if fs.is_none() {
                        let mut rhs = alg.zero();
                        for (l, r, c) in hopf.comult_basis(h) {
                            linalg::axpy(&mut rhs, c, &alg.mul(prods.get(*l, k, a), &ones[*r]));
                        }
                        if lhs != rhs {
                            fs = Some(ce(Axiom::PaS, Some(h), Some(k), Some(a), None, lhs, rhs));
                        }
                    }
                    if f3.is_some() && fs.is_some() {
                        break 'outer;
                    }
                }
            }
            (f3, fs)
        })
        .unzip();
    let pa3 = pa3.into_iter().flatten().next();
    let pas = pas.into_iter().flatten().next();

    let pa2prime = (0..dh).into_par_iter().find_map_first(|h| {
        for k in 0..dh {
            for a in 0..da {
                let ea = alg.basis(a);
                for b in 0..da {
                    let lhs = act.act_basis(h, &alg.mul(&ea, &act.rows[k][b]));
                    let mut rhs = alg.zero();
                    for (l, r, c) in hopf.comult_basis(h) {
                        linalg::axpy(&mut rhs, c, &alg.mul(&act.rows[*l][a], prods.get(*r, k, b)));
                    }
                    if lhs != rhs {
                        return Some(ce(Axiom::Pa2Prime, Some(h), Some(k), Some(a), Some(b), lhs, rhs));
                    }
                }
            }
        }
        None
    });

    let global_witness = (0..dh).find(|&h| ones[h] != linalg::scaled(&hopf.counit()[h], act.target().one()));

    let counterexamples: Vec<Counterexample> = [pa1.clone(), pa2.clone(), pa3.clone(), pa2prime.clone(), pas.clone()]
        .into_iter()
        .flatten()
        .collect();
    AxiomReport {
        pa1: pa1.is_none(),
        pa2: pa2.is_none(),
        pa3: pa3.is_none(),
        pa2prime: pa2prime.is_none(),
        pas: pas.is_none(),
        global: global_witness.is_none(),
        global_witness,
        first_counterexample: counterexamples.first().cloned(),
        counterexamples,
    }
}

/// A candidate partial action of `Cₙ = ⟨g⟩` on `A`, one matrix per `g^i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialCnAction {
    n: u32,
    target: Arc<TargetAlgebra>,
    gi_action: Vec<LinMap>,
}

impl PartialCnAction {
    pub fn new(n: u32, target: Arc<TargetAlgebra>, gi_action: Vec<LinMap>) -> Result<Self, ActionError> {
        let d = target.dim();
        if n < 1 || gi_action.len() != n as usize {
            return Err(ActionError::Shape(format!("expected {n} matrices")));
        }
        for m in &gi_action {
            let ok = m.src_dim() == d && m.dst_dim() == d && m.rows().len() == d && m.rows().iter().all(|r| r.len() == d);
            if !ok {
                return Err(ActionError::Shape(format!("each matrix must be {d}x{d}")));
            }
        }
        Ok(PartialCnAction { n, target, gi_action })
    }

    /// `g^0` acts as the identity and every other `g^i` as zero.
    pub fn degenerate(n: u32, target: Arc<TargetAlgebra>) -> Self {
        let d = target.dim();
        let c = target.conductor();
        let gi = (0..n)
            .map(|i| if i == 0 { LinMap::identity(d, c) } else { LinMap::zero(d, d, c) })
            .collect();
        PartialCnAction { n, target, gi_action: gi }
    }

    /// `g^{md}` acts as `α^m` and the other powers as zero, for `d | n` and
    /// an automorphism `α` with `α^{n/d} = id`.
    pub fn from_subgroup(n: u32, d: u32, alpha: &LinMap, target: Arc<TargetAlgebra>) -> Result<Self, ActionError> {
        if d == 0 || n % d != 0 {
            return Err(ActionError::Shape(format!("{d} does not divide {n}")));
        }
        let dim = target.dim();
        let c = target.conductor();
        let mut power = LinMap::identity(dim, c);
        let mut gi = vec![LinMap::zero(dim, dim, c); n as usize];
        for m in 0..n / d {
            gi[(m * d) as usize] = power.clone();
            power = alpha.compose(&power).map_err(|e| ActionError::Shape(e.to_string()))?;
        }
        Self::new(n, target, gi)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn target(&self) -> &Arc<TargetAlgebra> {
        &self.target
    }

    /// The matrix of `a ↦ g^i · a`, with `i` taken mod n.
    pub fn matrix(&self, i: i64) -> &LinMap {
        &self.gi_action[i.rem_euclid(self.n as i64) as usize]
    }

    pub fn act(&self, i: i64, a: &[CycNum]) -> Vector {
        self.matrix(i).apply(a)
    }

    pub fn on_one(&self, i: i64) -> Vector {
        self.act(i, self.target.one())
    }

    /// The same data as a table over `kCₙ`.
    pub fn as_table(&self) -> Result<ActionTable, ActionError> {
        let c = self.target.conductor();
        let h = Arc::new(group_algebra(self.n)?.embed(c)?);
        let t = self.target.clone();
        ActionTable::from_fn(h, self.target.clone(), |i, a| self.act(i as i64, &t.basis(a)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupActionReport {
    pub axioms: AxiomReport,
    /// Every `g^i · 1_A` is idempotent.
    pub idempotent_units: bool,
    /// `(g^i·1_A) a (g^i·1_A) = (g^i·1_A) a` on every basis `a`.
    pub sandwich: bool,
    /// `(g^i·1_A)(g^{i+1}·1_A) = 0` for all `i`, checked when `g·1_A = 0`.
    pub consecutive_orthogonal: Option<bool>,
    /// `g^i · a` lies in `D_i = (g^i·1_A)A` for every basis `a`.
    pub domains: bool,
    /// First failed extra check, as `(name, i, a)`.
    pub failure: Option<(String, u32, Option<usize>)>,
}

impl GroupActionReport {
    pub fn passed(&self) -> bool {
        self.axioms.is_symmetric()
            && self.idempotent_units
            && self.sandwich
            && self.consecutive_orthogonal != Some(false)
            && self.domains
    }
}

/// Checks the partial action axioms over `kCₙ` and the consequences for the
/// idempotents `g^i · 1_A`.
pub fn check_partial_group_action(pca: &PartialCnAction) -> Result<GroupActionReport, ActionError> {
    let axioms = check_partial_action(&pca.as_table()?);
    let alg = &pca.target.alg;
    let n = pca.n as i64;
    let mut failure: Option<(String, u32, Option<usize>)> = None;
    let mut note = |name: &str, i: i64, a: Option<usize>| {
        if failure.is_none() {
            failure = Some((name.to_string(), i as u32, a));
        }
    };
    let mut idempotent_units = true;
    let mut sandwich = true;
    let mut domains = true;
    for i in 0..n {
        let e = pca.on_one(i);
        if alg.mul(&e, &e) != e {
            idempotent_units = false;
            note("idempotent", i, None);
        }
        for a in 0..alg.dim() {
            let ea = alg.basis(a);
            let ex = alg.mul(&e, &ea);
            if alg.mul(&ex, &e) != ex {
                sandwich = false;
                note("sandwich", i, Some(a));
            }
            let image = pca.act(i, &ea);
            if alg.mul(&e, &image) != image {
                domains = false;
                note("domain", i, Some(a));
            }
        }
    }
    let consecutive_orthogonal = linalg::is_zero_vector(&pca.on_one(1)).then(|| {
        (0..n).all(|i| {
            let ok = linalg::is_zero_vector(&alg.mul(&pca.on_one(i), &pca.on_one(i + 1)));
            if !ok {
                note("consecutive", i, None);
            }
            ok
        })
    });
    Ok(GroupActionReport {
        axioms,
        idempotent_units,
        sandwich,
        consecutive_orthogonal,
        domains,
        failure,
    })
}

/// Order `n` and root `q` of a Taft algebra.
pub fn taft_parameters(h: &HopfData) -> Result<(u32, RootOfUnity), ActionError> {
    match h.kind() {
        HopfKind::Taft { n, q_power } => Ok((*n, RootOfUnity::new(*n, *q_power as i64)?)),
        _ => Err(ActionError::WrongHopf { expected: "Taft" }),
    }
}

fn taft_index(n: u32, i: i64, j: u32) -> usize {
    (i.rem_euclid(n as i64) as u32 * n + j) as usize
}

/// The table `g^i x^j · a = q^{−ij} Σ_k (−1)^k q^{−k(k−1)/2} (j k)_{q⁻¹} w^{j−k} (g^{i+k}·a) w^k`,
/// built without checking any hypothesis.
pub fn taft_formula_table(hopf: Arc<HopfData>, pca: &PartialCnAction, w: &[CycNum]) -> Result<ActionTable, ActionError> {
    let (n, q) = taft_parameters(&hopf)?;
    let target = pca.target.clone();
    if pca.n != n {
        return Err(ActionError::Shape(format!("partial C{} action used with T{n}", pca.n)));
    }
    if w.len() != target.dim() {
        return Err(ActionError::Shape("w has the wrong length".into()));
    }
    let alg = &target.alg;
    let powers: Vec<Vector> = (0..n).map(|k| alg.pow(w, k)).collect();
    let mut qinv = QCalc::new(q.inverse().value());
    let mut rows = vec![Vec::new(); (n * n) as usize];
    for i in 0..n as i64 {
        for j in 0..n {
            let coeffs: Vec<CycNum> = (0..=j)
                .map(|k| {
                    let k = k as i64;
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    let e = -i * j as i64 - k * (k - 1) / 2;
                    CycNum::from_int(n, sign) * q.pow(e) * qinv.binomial(j as i64, k)
                })
                .collect();
            let row: Vec<Vector> = (0..target.dim())
                .map(|a| {
                    let ea = alg.basis(a);
                    let mut out = alg.zero();
                    for k in 0..=j {
                        let mid = pca.act(i + k as i64, &ea);
                        let term = alg.mul_all(&[&powers[(j - k) as usize], &mid, &powers[k as usize]]);
                        linalg::axpy(&mut out, &coeffs[k as usize], &term);
                    }
                    out
                })
                .collect();
            rows[taft_index(n, i, j)] = row;
        }
    }
    ActionTable::new(hopf, target, rows)
}

/// Checks the hypotheses shared by the Taft action and coaction
/// constructions, in order, returning the first violated one.
pub fn check_taft_hypotheses(n: u32, q: &RootOfUnity, pca: &PartialCnAction, w: &[CycNum]) -> Result<(), ActionError> {
    let report = check_partial_group_action(pca)?;
    if !report.passed() {
        let why = report
            .failure
            .map(|(name, i, _)| format!("{name} at g^{i}"))
            .or_else(|| report.axioms.first_counterexample.map(|c| format!("{:?}", c.axiom)))
            .unwrap_or_else(|| "axioms".into());
        return Err(Precondition::PartialGroupAction(why).into());
    }
    if !linalg::is_zero_vector(&pca.on_one(1)) {
        return Err(Precondition::GOneNonzero.into());
    }
    let alg = &pca.target.alg;
    if !is_central(alg, &alg.pow(w, n)) {
        return Err(Precondition::WPowerNotCentral.into());
    }
    for i in 0..n {
        let lhs = pca.act(i as i64, w);
        let rhs = linalg::scaled(&q.pow(-(i as i64)), &alg.mul(&pca.on_one(i as i64), w));
        if lhs != rhs {
            return Err(Precondition::Twist { i }.into());
        }
    }
    Ok(())
}

/// The partial action of `Tₙ(q)` determined by a partial `Cₙ` action with
/// `g·1_A = 0` and an element `w`; refuses inputs outside the hypotheses.
pub fn construct_taft_action(hopf: Arc<HopfData>, pca: &PartialCnAction, w: &[CycNum]) -> Result<ActionTable, ActionError> {
    let (n, q) = taft_parameters(&hopf)?;
    if pca.n != n {
        return Err(ActionError::Shape(format!("partial C{} action used with T{n}", pca.n)));
    }
    if w.len() != pca.target.dim() {
        return Err(ActionError::Shape("w has the wrong length".into()));
    }
    check_taft_hypotheses(n, &q, pca, w)?;
    taft_formula_table(hopf, pca, w)
}

/// The restriction of a Taft table to the group-likes `g^i`.
pub fn restrict_to_group(act: &ActionTable) -> Result<PartialCnAction, ActionError> {
    let (n, _) = taft_parameters(act.hopf())?;
    let target = act.target().clone();
    let gi = (0..n as i64).map(|i| act.row_map(taft_index(n, i, 0))).collect();
    PartialCnAction::new(n, target, gi)
}

/// `x · 1_A` of a Taft table.
pub fn x_on_one(act: &ActionTable) -> Result<Vector, ActionError> {
    let (n, _) = taft_parameters(act.hopf())?;
    Ok(act.on_one(taft_index(n, 0, 1)))
}

/// A stored row that differs from the recomputed one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowMismatch {
    pub i: u32,
    pub j: u32,
    pub a: usize,
    pub stored: Vector,
    pub recomputed: Vector,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Derivation {
    pub w: Vector,
    pub reconstructs: bool,
    pub mismatch: Option<RowMismatch>,
    /// `(x·1_A)^n ∈ Z(A)`
    pub w_power_central: bool,
    /// `g^i·(x·1_A) = q^{−i}(g^i·1_A)(x·1_A)` for all `i`
    pub twist_holds: bool,
    pub twist_failure: Option<u32>,
}

impl Derivation {
    pub fn passed(&self) -> bool {
        self.reconstructs && self.w_power_central && self.twist_holds
    }
}

/// Recomputes every row of a Taft table from its restriction to `kCₙ` and
/// `w = x·1_A`, and checks the two consequences that must hold when
/// `g·1_A = 0`.
pub fn derive_action_formula(act: &ActionTable) -> Result<Derivation, ActionError> {
    let (n, q) = taft_parameters(act.hopf())?;
    let pca = restrict_to_group(act)?;
    if !linalg::is_zero_vector(&pca.on_one(1)) {
        return Err(Precondition::GOneNonzero.into());
    }
    let w = x_on_one(act)?;
    let rebuilt = taft_formula_table(act.hopf().clone(), &pca, &w)?;
    let mut mismatch = None;
    'search: for i in 0..n {
        for j in 0..n {
            let h = taft_index(n, i as i64, j);
            for a in 0..act.target().dim() {
                if act.rows[h][a] != rebuilt.rows[h][a] {
                    mismatch = Some(RowMismatch {
                        i,
                        j,
                        a,
                        stored: act.rows[h][a].clone(),
                        recomputed: rebuilt.rows[h][a].clone(),
                    });
                    break 'search;
                }
            }
        }
    }
    let alg = &act.target().alg;
    let w_power_central = is_central(alg, &alg.pow(&w, n));
    let twist_failure = (0..n).find(|&i| {
        let lhs = pca.act(i as i64, &w);
        let rhs = linalg::scaled(&q.pow(-(i as i64)), &alg.mul(&pca.on_one(i as i64), &w));
        lhs != rhs
    });
    Ok(Derivation {
        w,
        reconstructs: mismatch.is_none(),
        mismatch,
        w_power_central,
        twist_holds: twist_failure.is_none(),
        twist_failure,
    })
}

/// Compares a Taft table with `g^{n−i}x^j·a = (−1)^i q^{i(i+1)/2} (j i)_q w^{j−i} a w^i`,
/// valid when `g^i·1_A = δ_{i,0} 1_A`. Returns the first differing `(i, j, a)`.
pub fn closed_form_mismatch(act: &ActionTable) -> Result<Option<(u32, u32, usize)>, ActionError> {
    let (n, q) = taft_parameters(act.hopf())?;
    let alg = &act.target().alg;
    for i in 1..n {
        if !linalg::is_zero_vector(&act.on_one(taft_index(n, i as i64, 0))) {
            return Err(Precondition::NotFieldCase.into());
        }
    }
    let w = x_on_one(act)?;
    let mut calc = QCalc::new(q.value());
    for i in 0..n {
        for j in 0..n {
            let h = taft_index(n, n as i64 - i as i64, j);
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let coeff = CycNum::from_int(n, sign) * q.pow((i * (i + 1) / 2) as i64) * calc.binomial(j as i64, i as i64);
            for a in 0..alg.dim() {
                let expected = if i > j {
                    alg.zero()
                } else {
                    let left = alg.pow(&w, j - i);
                    let right = alg.pow(&w, i);
                    linalg::scaled(&coeff, &alg.mul_all(&[&left, &alg.basis(a), &right]))
                };
                if act.rows[h][a] != expected {
                    return Ok(Some((i, j, a)));
                }
            }
        }
    }
    Ok(None)
}

/// Checks `(g^i·w)^ℓ = q^{−iℓ}(g^i·1_A)w^ℓ` for `1 ≤ ℓ < n` and
/// `g^i·(w^ℓ(g^j·a)w^k) = q^{−i(ℓ+k)}(g^i·1_A)w^ℓ(g^{i+j}·a)w^k` for
/// `ℓ, k < n` and basis `a`. Returns the first failing `(i, j, ℓ, k, a)`,
/// with `j` and `a` omitted for the first identity.
pub fn power_identity_failure(
    pca: &PartialCnAction,
    q: &RootOfUnity,
    w: &[CycNum],
) -> Option<(u32, Option<u32>, u32, Option<u32>, Option<usize>)> {
    let alg = &pca.target.alg;
    let n = pca.n;
    let powers: Vec<Vector> = (0..n).map(|k| alg.pow(w, k)).collect();
    for i in 0..n {
        let gw = pca.act(i as i64, w);
        let e = pca.on_one(i as i64);
        for l in 1..n {
            let rhs = linalg::scaled(&q.pow(-((i * l) as i64)), &alg.mul(&e, &powers[l as usize]));
            if alg.pow(&gw, l) != rhs {
                return Some((i, None, l, None, None));
            }
        }
    }
    for i in 0..n as i64 {
        let e = pca.on_one(i);
        for j in 0..n as i64 {
            for a in 0..alg.dim() {
                let inner = pca.act(j, &alg.basis(a));
                let outer = pca.act(i + j, &alg.basis(a));
                for l in 0..n {
                    for k in 0..n {
                        let (wl, wk) = (&powers[l as usize], &powers[k as usize]);
                        let lhs = pca.act(i, &alg.mul_all(&[wl, &inner, wk]));
                        let coeff = q.pow(-i * (l + k) as i64);
                        let rhs = linalg::scaled(&coeff, &alg.mul_all(&[&e, wl, &outer, wk]));
                        if lhs != rhs {
                            return Some((i as u32, Some(j as u32), l, Some(k), Some(a)));
                        }
                    }
                }
            }
        }
    }
    None
}

/// When some `g^i` with `2 ≤ i < n` acts as the identity, whether `x·1_A = 0`.
pub fn identity_power_forces_zero(act: &ActionTable) -> Result<Option<bool>, ActionError> {
    let (n, _) = taft_parameters(act.hopf())?;
    let t = act.target();
    let acts_as_identity = (2..n).any(|i| {
        let h = taft_index(n, i as i64, 0);
        (0..t.dim()).all(|a| act.rows[h][a] == t.basis(a))
    });
    if !acts_as_identity {
        return Ok(None);
    }
    Ok(Some(linalg::is_zero_vector(&x_on_one(act)?)))
}

/// `(j₀; j₁, …)` exponent bits of a Nichols basis index.
fn nichols_bits(n: u32, m: usize) -> Vec<bool> {
    (0..n as usize).map(|b| (m >> (n as usize - 1 - b)) & 1 == 1).collect()
}

/// The partial action of `H_{2ⁿ}` with `g·a = 0`, `xᵢ·a = gxᵢ·a = wᵢa` and
/// products of two or more `x`'s acting as zero. Each `wᵢ` must be central.
pub fn construct_nichols_action(hopf: Arc<HopfData>, target: Arc<TargetAlgebra>, w: &[Vector]) -> Result<ActionTable, ActionError> {
    let n = match hopf.kind() {
        HopfKind::Nichols { n } => *n,
        _ => return Err(ActionError::WrongHopf { expected: "Nichols" }),
    };
    if w.len() != (n - 1) as usize {
        return Err(Precondition::WrongCount {
            expected: (n - 1) as usize,
            got: w.len(),
        }
        .into());
    }
    for (i, wi) in w.iter().enumerate() {
        if wi.len() != target.dim() {
            return Err(ActionError::Shape("w has the wrong length".into()));
        }
        if !is_central(&target.alg, wi) {
            return Err(Precondition::NonCentral { index: i + 1 }.into());
        }
    }
    let t = target.clone();
    ActionTable::from_fn(hopf, target, move |m, a| {
        let bits = nichols_bits(n, m);
        let xs: Vec<usize> = (1..n as usize).filter(|&b| bits[b]).collect();
        let ea = t.basis(a);
        match xs.as_slice() {
            [] if !bits[0] => ea,
            [i] => t.alg.mul(&w[i - 1], &ea),
            _ => t.alg.zero(),
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Dichotomy {
    Global,
    Degenerate,
    OutsideHypotheses,
}

/// Classifies a table by `g · 1_A`; asserts globality when it equals `1_A`.
pub fn globality_dichotomy(act: &ActionTable) -> Result<Dichotomy, ActionError> {
    let g = act
        .hopf()
        .index_of("g")
        .ok_or(ActionError::WrongHopf { expected: "Taft or Nichols" })?;
    let t = act.target();
    let unit = act.hopf().alg().unit();
    if (0..t.dim()).any(|a| act.act(unit, &t.basis(a)) != t.basis(a)) {
        return Err(ActionError::Pa1Fails);
    }
    let g1 = act.on_one(g);
    if g1 == *t.one() {
        let counit = act.hopf().counit();
        if let Some(h) = (0..act.hopf().dim()).find(|&h| act.on_one(h) != linalg::scaled(&counit[h], t.one())) {
            return Err(ActionError::GlobalityViolated { h });
        }
        Ok(Dichotomy::Global)
    } else if linalg::is_zero_vector(&g1) {
        Ok(Dichotomy::Degenerate)
    } else {
        Ok(Dichotomy::OutsideHypotheses)
    }
}

#[derive(Serialize, Deserialize)]
struct ActionRepr {
    hopf: HopfData,
    target: TargetAlgebra,
    rows: Vec<Vec<Vector>>,
}

impl Serialize for ActionTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ActionRepr {
            hopf: (*self.hopf).clone(),
            target: (*self.target).clone(),
            rows: self.rows.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ActionTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = ActionRepr::deserialize(d)?;
        ActionTable::new(Arc::new(r.hopf), Arc::new(r.target), r.rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{nichols_algebra, taft_algebra};
    use crate::targets::{field_target, matrix_target, trunc_poly_target};

    fn taft(n: u32, t: i64) -> Arc<HopfData> {
        Arc::new(taft_algebra(n, &RootOfUnity::new(n, t).unwrap()).unwrap())
    }

    fn on(target: TargetAlgebra, c: u32) -> Arc<TargetAlgebra> {
        Arc::new(target.embed(c).unwrap())
    }

    #[test]
    fn trivial_action_is_global() {
        let h = taft(3, 1);
        let t = on(matrix_target(2).unwrap(), 3);
        let act = ActionTable::trivial(h, t).unwrap();
        let r = check_partial_action(&act);
        assert!(r.is_symmetric() && r.pa2prime && r.global);
        assert_eq!(globality_dichotomy(&act).unwrap(), Dichotomy::Global);
    }

    #[test]
    fn sweedler_on_field() {
        let h = taft(2, 1);
        let t = on(field_target(), 2);
        let w = vec![CycNum::from_int(2, 5)];
        let act = construct_taft_action(h, &PartialCnAction::degenerate(2, t), &w).unwrap();
        // λ(1) = 1, λ(g) = 0, λ(x) = λ(gx) = w
        let values: Vec<CycNum> = (0..4).map(|k| act.entry(k, 0)[0].clone()).collect();
        assert_eq!(values, vec![CycNum::one(2), w[0].clone(), CycNum::zero(2), w[0].clone()]);
        assert!(check_partial_action(&act).is_symmetric());
        assert_eq!(globality_dichotomy(&act).unwrap(), Dichotomy::Degenerate);
    }

    #[test]
    fn mutated_row_breaks_pa2() {
        let h = taft(2, 1);
        let t = on(matrix_target(2).unwrap(), 2);
        let w = t.element("e12").unwrap();
        let act = construct_taft_action(h, &PartialCnAction::degenerate(2, t.clone()), &w).unwrap();
        assert!(check_partial_action(&act).is_symmetric());
        // gx·a redefined as wa
        let gx = act.hopf().index_of("gx").unwrap();
        let mut rows = act.rows().to_vec();
        for a in 0..4 {
            rows[gx][a] = t.alg.mul(&w, &t.basis(a));
        }
        let bad = ActionTable::new(act.hopf().clone(), t, rows).unwrap();
        let r = check_partial_action(&bad);
        assert!(!r.pa2);
        let c = r.counterexamples.iter().find(|c| c.axiom == Axiom::Pa2).unwrap();
        assert_ne!(c.lhs, c.rhs);
        assert_eq!(c.h, Some(gx));
        assert!(!r.pa2prime);
    }

    #[test]
    fn taft_three_row() {
        for t_exp in [1, 2] {
            let h = taft(3, t_exp);
            let q = RootOfUnity::new(3, t_exp).unwrap().value();
            let t = on(trunc_poly_target(3).unwrap(), 3);
            let w = t.element("z").unwrap();
            let act = construct_taft_action(h.clone(), &PartialCnAction::degenerate(3, t.clone()), &w).unwrap();
            let g2x = h.index_of("g^2x").unwrap();
            for a in 0..3 {
                let expected = linalg::scaled(&-&q, &t.alg.mul(&t.basis(a), &w));
                assert_eq!(act.entry(g2x, a), &expected);
            }
            assert!(check_partial_action(&act).is_symmetric());
            assert!(derive_action_formula(&act).unwrap().passed());
            assert_eq!(closed_form_mismatch(&act).unwrap(), None);
        }
    }

    #[test]
    fn preconditions_refuse() {
        let h = taft(2, 1);
        let t = on(matrix_target(2).unwrap(), 2);
        let e11 = t.element("e11").unwrap();
        let err = construct_taft_action(h.clone(), &PartialCnAction::degenerate(2, t.clone()), &e11).unwrap_err();
        assert_eq!(err, ActionError::Precondition(Precondition::WPowerNotCentral));
        let global = PartialCnAction::new(
            2,
            t.clone(),
            vec![LinMap::identity(4, 2), LinMap::identity(4, 2)],
        )
        .unwrap();
        let err = construct_taft_action(h, &global, &t.alg.zero()).unwrap_err();
        assert_eq!(err, ActionError::Precondition(Precondition::GOneNonzero));
    }

    #[test]
    fn group_level_checks() {
        let t = on(matrix_target(2).unwrap(), 2);
        let mut conj = LinMap::identity(4, 2).rows().to_vec();
        // conjugation by diag(1, −1) negates e12 and e21
        conj[1][1] = CycNum::from_int(2, -1);
        conj[2][2] = CycNum::from_int(2, -1);
        let alpha = LinMap::from_rows(4, conj).unwrap();
        let pca = PartialCnAction::from_subgroup(2, 1, &alpha, t.clone()).unwrap();
        let r = check_partial_group_action(&pca).unwrap();
        assert!(r.passed() && r.axioms.global);

        let degenerate = check_partial_group_action(&PartialCnAction::degenerate(3, t.clone())).unwrap();
        assert!(degenerate.passed());
        assert_eq!(degenerate.consecutive_orthogonal, Some(true));

        let t4 = on(trunc_poly_target(2).unwrap(), 4);
        let sub = PartialCnAction::from_subgroup(4, 2, &LinMap::identity(2, 4), t4).unwrap();
        assert!(check_partial_group_action(&sub).unwrap().passed());
    }

    #[test]
    fn nichols_actions() {
        let h = Arc::new(nichols_algebra(3).unwrap());
        let f = Arc::new(field_target());
        let w = vec![vec![CycNum::from_int(1, 2)], vec![CycNum::from_frac(1, -1, 3)]];
        let act = construct_nichols_action(h.clone(), f, &w).unwrap();
        let at = |l: &str| act.entry(h.index_of(l).unwrap(), 0)[0].clone();
        assert!(at("x1x2").is_zero() && at("gx1x2").is_zero() && at("g").is_zero());
        assert_eq!(at("gx2"), w[1][0]);
        assert!(check_partial_action(&act).is_symmetric());

        let t = Arc::new(trunc_poly_target(2).unwrap());
        let z = t.element("z").unwrap();
        let act = construct_nichols_action(h.clone(), t.clone(), &[z, t.alg.zero()]).unwrap();
        assert!(check_partial_action(&act).is_symmetric());

        let m = Arc::new(matrix_target(2).unwrap());
        let e12 = m.element("e12").unwrap();
        let err = construct_nichols_action(h, m.clone(), &[e12, m.alg.zero()]).unwrap_err();
        assert_eq!(err, ActionError::Precondition(Precondition::NonCentral { index: 1 }));
    }

    #[test]
    fn h4_table_on_truncated_polynomials() {
        let h = taft(2, 1);
        let t = on(trunc_poly_target(3).unwrap(), 2);
        let w = t.element("z").unwrap();
        let act = construct_taft_action(h.clone(), &PartialCnAction::degenerate(2, t.clone()), &w).unwrap();
        for a in 0..3 {
            let ea = t.basis(a);
            assert_eq!(act.entry(0, a), &ea);
            assert!(linalg::is_zero_vector(act.entry(h.index_of("g").unwrap(), a)));
            assert_eq!(act.entry(h.index_of("x").unwrap(), a), &t.alg.mul(&w, &ea));
            assert_eq!(act.entry(h.index_of("gx").unwrap(), a), &t.alg.mul(&ea, &w));
        }
        let r = check_partial_action(&act);
        assert!(r.is_symmetric() && r.pa2prime && !r.global);
        assert!(derive_action_formula(&act).unwrap().passed());
    }

    #[test]
    fn perturbed_row_is_located() {
        let h = taft(3, 1);
        let t = on(trunc_poly_target(2).unwrap(), 3);
        let w = t.element("z").unwrap();
        let act = construct_taft_action(h.clone(), &PartialCnAction::degenerate(3, t), &w).unwrap();
        let gx2 = h.index_of("gx^2").unwrap();
        let old = act.entry(gx2, 0)[1].clone();
        let bad = act.with_coefficient(gx2, 0, 1, old + CycNum::one(3));
        let d = derive_action_formula(&bad).unwrap();
        let m = d.mismatch.unwrap();
        assert_eq!((m.i, m.j, m.a), (1, 2, 0));
        assert_ne!(m.stored, m.recomputed);
    }

    #[test]
    fn t4_identity_square_forces_zero() {
        let h = taft(4, 1);
        let q = RootOfUnity::new(4, 1).unwrap();
        let t = on(trunc_poly_target(3).unwrap(), 4);
        let pca = PartialCnAction::from_subgroup(4, 2, &LinMap::identity(3, 4), t.clone()).unwrap();
        let z = t.element("z").unwrap();
        let err = construct_taft_action(h.clone(), &pca, &z).unwrap_err();
        assert_eq!(err, ActionError::Precondition(Precondition::Twist { i: 2 }));
        let act = construct_taft_action(h.clone(), &pca, &t.alg.zero()).unwrap();
        for i in 0..4 {
            for j in 1..4 {
                let row = taft_index(4, i, j);
                assert!((0..3).all(|a| linalg::is_zero_vector(act.entry(row, a))));
            }
        }
        assert_eq!(identity_power_forces_zero(&act).unwrap(), Some(true));
        assert!(check_partial_action(&act).is_symmetric());
        assert_eq!(power_identity_failure(&pca, &q, &t.alg.zero()), None);
        assert_eq!(closed_form_mismatch(&act).unwrap_err(), ActionError::Precondition(Precondition::NotFieldCase));
    }

    #[test]
    fn split_idempotent_is_outside_hypotheses() {
        let one = r#"{"conductor":1,"coeffs":[["1","1"]]}"#;
        let json = format!(
            r#"{{"alg":{{"dim":2,"labels":["e1","e2"],"conductor":1,"mult":[[0,0,0,{one}],[1,1,1,{one}]],"unit":[{one},{one}]}},"trivial_idempotents":false,"description":"k x k"}}"#
        );
        let kk: TargetAlgebra = serde_json::from_str(&json).unwrap();
        let t = on(kk, 2);
        let h = taft(2, 1);
        let w = CycNum::from_int(2, 3);
        // globally trivial on the first factor, λ_w on the second
        let t2 = t.clone();
        let hh = h.clone();
        let act = ActionTable::from_fn(h, t, move |k, a| {
            let ea = t2.basis(a);
            match (hh.labels()[k].as_str(), a) {
                ("1", _) => ea,
                ("g", 0) => ea,
                ("x" | "gx", 1) => linalg::scaled(&w, &ea),
                _ => t2.alg.zero(),
            }
        })
        .unwrap();
        assert!(check_partial_action(&act).is_symmetric());
        assert_eq!(globality_dichotomy(&act).unwrap(), Dichotomy::OutsideHypotheses);
    }

    #[test]
    fn power_identities_on_constructed_instances() {
        for n in 2..=4u32 {
            for t_exp in (1..n as i64).filter(|t| num_integer::gcd(*t, n as i64) == 1) {
                let q = RootOfUnity::new(n, t_exp).unwrap();
                let t = on(trunc_poly_target(3).unwrap(), n);
                let z = t.element("z").unwrap();
                let pca = PartialCnAction::degenerate(n, t);
                assert_eq!(power_identity_failure(&pca, &q, &z), None);
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let h = taft(2, 1);
        let t = on(trunc_poly_target(2).unwrap(), 2);
        let act = ActionTable::trivial(h, t).unwrap();
        let s = serde_json::to_string(&act).unwrap();
        let back: ActionTable = serde_json::from_str(&s).unwrap();
        assert_eq!(back, act);
    }
}
