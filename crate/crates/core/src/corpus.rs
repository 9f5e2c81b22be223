//! Worked examples: the printed action and coaction tables of `H₄`, `T₃(q)`,
//! `T₄(ω)` and `H_{2ⁿ}`, transcribed literally and compared coefficient by
//! coefficient with the output of the general constructors.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cyclotomic::{CycNum, RootOfUnity};
use crate::hopf::{nichols_algebra, taft_algebra, HopfData};
use crate::linalg::{self, LinMap, Vector};
use crate::paction::{
    check_partial_action, construct_nichols_action, construct_taft_action, derive_action_formula, ActionError, ActionTable,
    AxiomReport, PartialCnAction,
};
use crate::pcoaction::{
    check_partial_coaction, coaction_from_action, construct_nichols_coaction, construct_taft_coaction, CoactionReport,
    CoactionTable,
};
use crate::targets::{TargetAlgebra, TargetSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Example {
    H4,
    T3,
    T4,
    H4Coaction,
    T3Coaction,
    T4Coaction,
    Nichols(u32),
    NicholsCoaction(u32),
}

impl Example {
    pub const NAMES: [&'static str; 8] = [
        "h4",
        "t3",
        "t4",
        "h4-coaction",
        "t3-coaction",
        "t4-coaction",
        "nichols:N",
        "nichols-coaction:N",
    ];
}

impl FromStr for Example {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let nichols = |rest: &str| -> Result<u32, String> {
            let n: u32 = rest.parse().map_err(|_| format!("bad Nichols order in {s:?}"))?;
            if n < 2 {
                return Err(format!("Nichols order must be at least 2, got {n}"));
            }
            Ok(n)
        };
        match s {
            "h4" => Ok(Example::H4),
            "t3" => Ok(Example::T3),
            "t4" => Ok(Example::T4),
            "h4-coaction" => Ok(Example::H4Coaction),
            "t3-coaction" => Ok(Example::T3Coaction),
            "t4-coaction" => Ok(Example::T4Coaction),
            _ => {
                if let Some(rest) = s.strip_prefix("nichols-coaction:") {
                    Ok(Example::NicholsCoaction(nichols(rest)?))
                } else if let Some(rest) = s.strip_prefix("nichols:") {
                    Ok(Example::Nichols(nichols(rest)?))
                } else {
                    Err(format!("unknown example {s:?}; expected one of {}", Example::NAMES.join(", ")))
                }
            }
        }
    }
}

impl fmt::Display for Example {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Example::H4 => write!(f, "h4"),
            Example::T3 => write!(f, "t3"),
            Example::T4 => write!(f, "t4"),
            Example::H4Coaction => write!(f, "h4-coaction"),
            Example::T3Coaction => write!(f, "t3-coaction"),
            Example::T4Coaction => write!(f, "t4-coaction"),
            Example::Nichols(n) => write!(f, "nichols:{n}"),
            Example::NicholsCoaction(n) => write!(f, "nichols-coaction:{n}"),
        }
    }
}

/// The partial `C₄` action underlying a `T₄(ω)` example.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum T4Case {
    /// `g^i·a = δ_{i,0} a`
    Degenerate,
    /// `g²` acts by the parity involution, the odd powers by zero.
    Twisted,
    /// `g²` acts as the identity, the odd powers by zero.
    Identity,
}

impl FromStr for T4Case {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "degenerate" => Ok(T4Case::Degenerate),
            "twisted" => Ok(T4Case::Twisted),
            "identity" => Ok(T4Case::Identity),
            _ => Err(format!("unknown T4 case {s:?}; expected degenerate, twisted or identity")),
        }
    }
}

/// The automorphism multiplying each basis element by `±1` according to its
/// degree: `z^k ↦ (−1)^k z^k`, `e_{ij} ↦ (−1)^{i+j} e_{ij}`, `g^k ↦ (−1)^k g^k`
/// (even `m` only); the identity on the field.
pub fn parity_involution(spec: &TargetSpec, conductor: u32) -> Result<LinMap, ActionError> {
    let signs: Vec<i64> = match *spec {
        TargetSpec::Field => vec![1],
        TargetSpec::TruncPoly(m) => (0..m).map(|k| if k % 2 == 0 { 1 } else { -1 }).collect(),
        TargetSpec::Matrix(m) => (0..m * m).map(|k| if (k / m + k % m) % 2 == 0 { 1 } else { -1 }).collect(),
        TargetSpec::Group(m) if m % 2 == 0 => (0..m).map(|k| if k % 2 == 0 { 1 } else { -1 }).collect(),
        TargetSpec::Group(_) => return Err(ActionError::Shape("the parity involution needs an even group order".into())),
    };
    let d = signs.len();
    let cols: Vec<Vector> = signs
        .iter()
        .enumerate()
        .map(|(k, &s)| {
            let mut v = linalg::zero_vector(d, conductor);
            v[k] = CycNum::from_int(conductor, s);
            v
        })
        .collect();
    LinMap::from_columns(d, &cols, conductor).map_err(|e| ActionError::Shape(e.to_string()))
}

/// The inputs for one example run.
#[derive(Debug, Clone)]
pub struct ExampleConfig {
    pub example: Example,
    pub spec: TargetSpec,
    /// The base target over `Q`; embedded into `Q(ζₙ)` as required.
    pub target: TargetAlgebra,
    /// Elements written in the target's labels, possibly using `q`.
    pub w: Vec<String>,
    /// The exponent `t` of `q = ζₙ^t`; for `h4` it is ignored.
    pub q_power: u32,
    pub t4_case: T4Case,
}

impl ExampleConfig {
    pub fn new(example: Example, spec: TargetSpec) -> Result<Self, ActionError> {
        let target = spec.build().map_err(|e| ActionError::Shape(e.to_string()))?;
        Ok(ExampleConfig {
            example,
            spec,
            target,
            w: Vec::new(),
            q_power: 1,
            t4_case: T4Case::Degenerate,
        })
    }

    pub fn with_w(mut self, w: &[&str]) -> Self {
        self.w = w.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn with_q_power(mut self, t: u32) -> Self {
        self.q_power = t;
        self
    }

    pub fn with_t4_case(mut self, case: T4Case) -> Self {
        self.t4_case = case;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Artifact {
    Action { table: ActionTable, report: AxiomReport },
    Coaction { table: CoactionTable, report: CoactionReport },
}

impl Artifact {
    pub fn passes_checker(&self) -> bool {
        match self {
            Artifact::Action { report, .. } => report.is_symmetric(),
            Artifact::Coaction { report, .. } => report.counital && report.symmetric,
        }
    }
}

/// One printed display and whether it agrees with the constructor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisplayCheck {
    pub display: String,
    pub matches: bool,
    /// Whether a mismatch is the expected outcome, for displays recorded as misprints.
    pub expected_mismatch: bool,
    pub note: Option<String>,
}

impl DisplayCheck {
    fn new(display: &str, matches: bool) -> Self {
        DisplayCheck {
            display: display.to_string(),
            matches,
            expected_mismatch: false,
            note: None,
        }
    }

    fn misprint(display: &str, matches: bool, note: &str) -> Self {
        DisplayCheck {
            display: display.to_string(),
            matches,
            expected_mismatch: true,
            note: Some(note.to_string()),
        }
    }

    pub fn as_expected(&self) -> bool {
        self.matches != self.expected_mismatch
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleReport {
    pub example: String,
    pub target: String,
    pub w: Vec<String>,
    pub artifact: Artifact,
    pub displays: Vec<DisplayCheck>,
}

impl ExampleReport {
    pub fn passed(&self) -> bool {
        self.artifact.passes_checker() && self.displays.iter().all(DisplayCheck::as_expected)
    }
}

/// Evaluation context for transcribing displays over a fixed target.
struct Ctx {
    target: Arc<TargetAlgebra>,
    q: CycNum,
}

impl Ctx {
    fn mul(&self, factors: &[&Vector]) -> Vector {
        let refs: Vec<&[CycNum]> = factors.iter().map(|v| v.as_slice()).collect();
        self.target.alg.mul_all(&refs)
    }

    fn c(&self, x: i64) -> CycNum {
        CycNum::from_int(self.target.conductor(), x)
    }

    fn frac(&self, a: i64, b: i64) -> CycNum {
        CycNum::from_frac(self.target.conductor(), a, b)
    }

    fn zero(&self) -> Vector {
        self.target.alg.zero()
    }
}

fn sum(terms: &[(CycNum, Vector)], zero: Vector) -> Vector {
    let mut out = zero;
    for (c, v) in terms {
        linalg::axpy(&mut out, c, v);
    }
    out
}

/// A vector on `H` from `(label, coefficient)` pairs.
fn hvec(h: &HopfData, terms: &[(&str, CycNum)]) -> Vector {
    let mut v = h.alg().zero();
    for (label, c) in terms {
        let k = h.index_of(label).unwrap_or_else(|| panic!("no basis element {label}"));
        v[k] += c;
    }
    v
}

/// `ρ(e_a) = Σ left_t(e_a) ⊗ h_t`.
fn coaction_from_display(hopf: Arc<HopfData>, target: Arc<TargetAlgebra>, terms: &[(Box<dyn Fn(&Vector) -> Vector + '_>, Vector)]) -> Result<CoactionTable, ActionError> {
    let t = target.clone();
    CoactionTable::from_components(hopf, target, |a, h| {
        let ea = t.basis(a);
        let mut out = t.alg.zero();
        for (left, hv) in terms {
            if !hv[h].is_zero() {
                linalg::axpy(&mut out, &hv[h], &left(&ea));
            }
        }
        out
    })
}

fn parse_ws(cfg: &ExampleConfig, target: &TargetAlgebra, q: &CycNum, count: usize) -> Result<Vec<Vector>, ActionError> {
    let exprs: Vec<String> = if cfg.w.is_empty() {
        vec!["0".to_string(); count]
    } else {
        cfg.w.clone()
    };
    if exprs.len() != count {
        return Err(ActionError::Shape(format!("expected {count} values of w, got {}", exprs.len())));
    }
    exprs
        .iter()
        .map(|e| crate::targets::parse_element(e, &target.alg, Some(q)).map_err(|err| ActionError::Shape(err.to_string())))
        .collect()
}

/// `H₄`: `1·a = a`, `g·a = 0`, `x·a = wa`, `gx·a = aw`.
pub fn h4_action_display(hopf: Arc<HopfData>, target: Arc<TargetAlgebra>, w: &Vector) -> Result<ActionTable, ActionError> {
    let t = target.clone();
    let h = hopf.clone();
    ActionTable::from_fn(hopf, target, move |k, a| {
        let ea = t.basis(a);
        match h.labels()[k].as_str() {
            "1" => ea,
            "x" => t.alg.mul(w, &ea),
            "gx" => t.alg.mul(&ea, w),
            _ => t.alg.zero(),
        }
    })
}

/// `T₃(q)`: `g·a = g²·a = 0`, `x·a = wa`, `gx·a = 0`, `g²x·a = −q aw`,
/// `x²·a = w²a`, `gx²·a = aw²`, `g²x²·a = waw`.
pub fn t3_action_display(hopf: Arc<HopfData>, target: Arc<TargetAlgebra>, q: &CycNum, w: &Vector) -> Result<ActionTable, ActionError> {
    let ctx = Ctx { target: target.clone(), q: q.clone() };
    let h = hopf.clone();
    ActionTable::from_fn(hopf, target, move |k, a| {
        let ea = ctx.target.basis(a);
        let w2 = ctx.mul(&[w, w]);
        match h.labels()[k].as_str() {
            "1" => ea,
            "x" => ctx.mul(&[w, &ea]),
            "g^2x" => linalg::scaled(&-&ctx.q, &ctx.mul(&[&ea, w])),
            "x^2" => ctx.mul(&[&w2, &ea]),
            "gx^2" => ctx.mul(&[&ea, &w2]),
            "g^2x^2" => ctx.mul(&[w, &ea, w]),
            _ => ctx.zero(),
        }
    })
}

/// The sixteen rows of the general `T₄(ω)` display, with `b = g²·a` taken
/// from the partial `C₄` action.
pub fn t4_action_display(hopf: Arc<HopfData>, pca: &PartialCnAction, q: &CycNum, w: &Vector) -> Result<ActionTable, ActionError> {
    let target = pca.target().clone();
    let ctx = Ctx { target: target.clone(), q: q.clone() };
    let h = hopf.clone();
    ActionTable::from_fn(hopf, target, move |k, a| {
        let ea = ctx.target.basis(a);
        let b = pca.act(2, &ea);
        let w2 = ctx.mul(&[w, w]);
        let w3 = ctx.mul(&[&w2, w]);
        let one = ctx.c(1);
        let mq = -&ctx.q;
        let one_mq = &one + &mq;
        let neg = ctx.c(-1);
        let z = ctx.zero();
        match h.labels()[k].as_str() {
            "1" => ea,
            "g^2" => b,
            "x" => ctx.mul(&[w, &ea]),
            "gx" => linalg::scaled(&ctx.q, &ctx.mul(&[&b, w])),
            "g^2x" => linalg::scaled(&neg, &ctx.mul(&[w, &b])),
            "g^3x" => linalg::scaled(&mq, &ctx.mul(&[&ea, w])),
            "x^2" => sum(&[(one.clone(), ctx.mul(&[&w2, &ea])), (mq.clone(), ctx.mul(&[&b, &w2]))], z),
            "gx^2" => linalg::scaled(&one_mq, &ctx.mul(&[w, &b, w])),
            "g^2x^2" => sum(&[(one.clone(), ctx.mul(&[&w2, &b])), (mq.clone(), ctx.mul(&[&ea, &w2]))], z),
            "g^3x^2" => linalg::scaled(&one_mq, &ctx.mul(&[w, &ea, w])),
            "x^3" => sum(&[(one.clone(), ctx.mul(&[&w3, &ea])), (neg.clone(), ctx.mul(&[w, &b, &w2]))], z),
            "gx^3" => sum(&[(neg.clone(), ctx.mul(&[&w2, &b, w])), (one.clone(), ctx.mul(&[&ea, &w3]))], z),
            "g^2x^3" => sum(&[(neg.clone(), ctx.mul(&[&w3, &b])), (one.clone(), ctx.mul(&[w, &ea, &w2]))], z),
            "g^3x^3" => sum(&[(one.clone(), ctx.mul(&[&w2, &ea, w])), (neg.clone(), ctx.mul(&[&b, &w3]))], z),
            _ => z,
        }
    })
}

/// `H_{2ⁿ}`: `g·a = 0`, `xᵢ·a = gxᵢ·a = wᵢa`, longer words act by zero.
pub fn nichols_action_display(hopf: Arc<HopfData>, target: Arc<TargetAlgebra>, w: &[Vector]) -> Result<ActionTable, ActionError> {
    let t = target.clone();
    let h = hopf.clone();
    ActionTable::from_fn(hopf, target, move |k, a| {
        let ea = t.basis(a);
        let label = h.labels()[k].as_str();
        if label == "1" {
            return ea;
        }
        let word = label.strip_prefix('g').unwrap_or(label);
        match word.strip_prefix('x').and_then(|i| i.parse::<usize>().ok()) {
            Some(i) => t.alg.mul(&w[i - 1], &ea),
            None => t.alg.zero(),
        }
    })
}

/// `ρ(a) = a⊗(1+g)/2 + wa⊗(x−gx)/2 − aw⊗(x+gx)/2`.
pub fn h4_coaction_display(hopf: Arc<HopfData>, target: Arc<TargetAlgebra>, w: &Vector) -> Result<CoactionTable, ActionError> {
    let ctx = Ctx { target: target.clone(), q: CycNum::from_int(2, -1) };
    let half = ctx.frac(1, 2);
    let mhalf = ctx.frac(-1, 2);
    let terms: Vec<(Box<dyn Fn(&Vector) -> Vector>, Vector)> = vec![
        (Box::new(|a: &Vector| a.clone()), hvec(&hopf, &[("1", half.clone()), ("g", half.clone())])),
        (Box::new(|a: &Vector| ctx.mul(&[w, a])), hvec(&hopf, &[("x", half.clone()), ("gx", mhalf.clone())])),
        (Box::new(|a: &Vector| ctx.mul(&[a, w])), hvec(&hopf, &[("x", mhalf.clone()), ("gx", mhalf.clone())])),
    ];
    coaction_from_display(hopf.clone(), target.clone(), &terms)
}

/// `ρ(a) = a⊗(1+g)/2 − aw⊗gx`, for central `w`.
pub fn h4_central_coaction_display(hopf: Arc<HopfData>, target: Arc<TargetAlgebra>, w: &Vector) -> Result<CoactionTable, ActionError> {
    let ctx = Ctx { target: target.clone(), q: CycNum::from_int(2, -1) };
    let half = ctx.frac(1, 2);
    let terms: Vec<(Box<dyn Fn(&Vector) -> Vector>, Vector)> = vec![
        (Box::new(|a: &Vector| a.clone()), hvec(&hopf, &[("1", half.clone()), ("g", half.clone())])),
        (Box::new(|a: &Vector| ctx.mul(&[a, w])), hvec(&hopf, &[("gx", ctx.c(-1))])),
    ];
    coaction_from_display(hopf.clone(), target.clone(), &terms)
}

/// The six-term `T₃(q)` coaction display.
pub fn t3_coaction_display(hopf: Arc<HopfData>, target: Arc<TargetAlgebra>, q: &CycNum, w: &Vector) -> Result<CoactionTable, ActionError> {
    let ctx = Ctx { target: target.clone(), q: q.clone() };
    let q2 = q * q;
    let third = ctx.frac(1, 3);
    let mthird = ctx.frac(-1, 3);
    let w2 = ctx.mul(&[w, w]);
    let h = &hopf;
    let terms: Vec<(Box<dyn Fn(&Vector) -> Vector>, Vector)> = vec![
        (
            Box::new(|a: &Vector| a.clone()),
            hvec(h, &[("1", third.clone()), ("g", third.clone()), ("g^2", third.clone())]),
        ),
        (
            Box::new(|a: &Vector| ctx.mul(&[w, a])),
            hvec(h, &[("x", third.clone()), ("gx", &third * q), ("g^2x", &third * &q2)]),
        ),
        (
            Box::new(|a: &Vector| ctx.mul(&[a, w])),
            hvec(h, &[("x", mthird.clone()), ("gx", mthird.clone()), ("g^2x", mthird.clone())]),
        ),
        (
            Box::new(|a: &Vector| ctx.mul(&[&w2, a])),
            hvec(
                h,
                &[("x^2", &mthird * &q2), ("gx^2", &(&mthird * &q2) * &q2), ("g^2x^2", &(&mthird * &q2) * q)],
            ),
        ),
        (
            Box::new(|a: &Vector| ctx.mul(&[a, &w2])),
            hvec(h, &[("x^2", &mthird * q), ("gx^2", &mthird * q), ("g^2x^2", &mthird * q)]),
        ),
        (
            Box::new(|a: &Vector| ctx.mul(&[w, a, w])),
            hvec(h, &[("x^2", mthird.clone()), ("gx^2", &mthird * q), ("g^2x^2", &mthird * &q2)]),
        ),
    ];
    coaction_from_display(hopf.clone(), target.clone(), &terms)
}

/// The `T₃(q)` display for central `w`, read with `w²a` as the coefficient of
/// `gx²`: `a⊗(1+g+g²)/3 + wa⊗((q−1)gx + (q²−1)g²x)/3 − w²a⊗qgx²`.
pub fn t3_central_coaction_display(hopf: Arc<HopfData>, target: Arc<TargetAlgebra>, q: &CycNum, w: &Vector, power_of_w: u32) -> Result<CoactionTable, ActionError> {
    let ctx = Ctx { target: target.clone(), q: q.clone() };
    let q2 = q * q;
    let one = ctx.c(1);
    let third = ctx.frac(1, 3);
    let wk = target.alg.pow(w, power_of_w);
    let h = &hopf;
    let terms: Vec<(Box<dyn Fn(&Vector) -> Vector>, Vector)> = vec![
        (
            Box::new(|a: &Vector| a.clone()),
            hvec(h, &[("1", third.clone()), ("g", third.clone()), ("g^2", third.clone())]),
        ),
        (
            Box::new(|a: &Vector| ctx.mul(&[w, a])),
            hvec(h, &[("gx", &third * &(q - &one)), ("g^2x", &third * &(&q2 - &one))]),
        ),
        (Box::new(|a: &Vector| ctx.mul(&[&wk, a])), hvec(h, &[("gx^2", -q)])),
    ];
    coaction_from_display(hopf.clone(), target.clone(), &terms)
}

/// `ρ(1) = 1 ⊗ z_w` with `z_w = (1+g+g²)/3 + ((q−1)w gx + (q²−1)w g²x − 3q w² gx²)/3`.
pub fn t3_field_coaction_display(hopf: Arc<HopfData>, target: Arc<TargetAlgebra>, q: &CycNum, w: &CycNum) -> Result<CoactionTable, ActionError> {
    let c = target.conductor();
    let third = CycNum::from_frac(c, 1, 3);
    let one = CycNum::one(c);
    let q2 = q * q;
    let z = hvec(
        &hopf,
        &[
            ("1", third.clone()),
            ("g", third.clone()),
            ("g^2", third.clone()),
            ("gx", &(&third * &(q - &one)) * w),
            ("g^2x", &(&third * &(&q2 - &one)) * w),
            ("gx^2", &(&CycNum::from_int(c, -1) * q) * &(w * w)),
        ],
    );
    let terms: Vec<(Box<dyn Fn(&Vector) -> Vector>, Vector)> = vec![(Box::new(|a: &Vector| a.clone()), z)];
    coaction_from_display(hopf.clone(), target.clone(), &terms)
}

/// `ρ(a) = a ⊗ (1+g²)/2`.
pub fn t4_coaction_display(hopf: Arc<HopfData>, target: Arc<TargetAlgebra>) -> Result<CoactionTable, ActionError> {
    let half = CycNum::from_frac(target.conductor(), 1, 2);
    let terms: Vec<(Box<dyn Fn(&Vector) -> Vector>, Vector)> =
        vec![(Box::new(|a: &Vector| a.clone()), hvec(&hopf, &[("1", half.clone()), ("g^2", half.clone())]))];
    coaction_from_display(hopf.clone(), target.clone(), &terms)
}

/// `ρ(a) = a ⊗ e − Σᵢ wᵢa ⊗ gxᵢ` for a chosen group-algebra part `e`.
fn nichols_coaction_with(hopf: Arc<HopfData>, target: Arc<TargetAlgebra>, e: Vector, w: &[Vector]) -> Result<CoactionTable, ActionError> {
    let c = target.conductor();
    let mut terms: Vec<(Box<dyn Fn(&Vector) -> Vector + '_>, Vector)> = vec![(Box::new(|a: &Vector| a.clone()), e)];
    for (i, wi) in w.iter().enumerate() {
        let t = target.clone();
        terms.push((
            Box::new(move |a: &Vector| t.alg.mul(wi, a)),
            hvec(&hopf, &[(&format!("gx{}", i + 1), CycNum::from_int(c, -1))]),
        ));
    }
    coaction_from_display(hopf.clone(), target.clone(), &terms)
}

/// `ρ(a) = a⊗(1+g)/2 − Σᵢ wᵢa ⊗ gxᵢ`.
pub fn nichols_coaction_display(hopf: Arc<HopfData>, target: Arc<TargetAlgebra>, w: &[Vector]) -> Result<CoactionTable, ActionError> {
    let half = CycNum::from_frac(target.conductor(), 1, 2);
    let e = hvec(&hopf, &[("1", half.clone()), ("g", half)]);
    nichols_coaction_with(hopf, target, e, w)
}

/// The `n = 3` display as printed, with `a ⊗ (1+g+g²)/3` and `g² = 1`.
pub fn nichols3_printed_coaction(hopf: Arc<HopfData>, target: Arc<TargetAlgebra>, w: &[Vector]) -> Result<CoactionTable, ActionError> {
    let c = target.conductor();
    let e = hvec(&hopf, &[("1", CycNum::from_frac(c, 2, 3)), ("g", CycNum::from_frac(c, 1, 3))]);
    nichols_coaction_with(hopf, target, e, w)
}

fn taft_pca(cfg: &ExampleConfig, n: u32, target: &Arc<TargetAlgebra>) -> Result<PartialCnAction, ActionError> {
    let c = target.conductor();
    match (n, cfg.t4_case) {
        (4, T4Case::Twisted) => PartialCnAction::from_subgroup(4, 2, &parity_involution(&cfg.spec, c)?, target.clone()),
        (4, T4Case::Identity) => PartialCnAction::from_subgroup(4, 2, &LinMap::identity(target.dim(), c), target.clone()),
        _ => Ok(PartialCnAction::degenerate(n, target.clone())),
    }
}

/// Builds the example with the general constructors, checks it, and compares
/// it with each printed display that applies to the chosen target.
pub fn run_example(cfg: &ExampleConfig) -> Result<ExampleReport, ActionError> {
    let (n, nichols_order) = match cfg.example {
        Example::H4 | Example::H4Coaction => (2, None),
        Example::T3 | Example::T3Coaction => (3, None),
        Example::T4 | Example::T4Coaction => (4, None),
        Example::Nichols(k) | Example::NicholsCoaction(k) => (1, Some(k)),
    };
    let mut displays = Vec::new();
    let artifact = if let Some(k) = nichols_order {
        let hopf = Arc::new(nichols_algebra(k)?);
        let target = Arc::new(cfg.target.clone());
        let q = CycNum::one(1);
        let w = parse_ws(cfg, &target, &q, (k - 1) as usize)?;
        let act = construct_nichols_action(hopf.clone(), target.clone(), &w)?;
        if cfg.example == Example::Nichols(k) {
            let display = nichols_action_display(hopf.clone(), target.clone(), &w)?;
            displays.push(DisplayCheck::new("g·a = 0, xᵢ·a = gxᵢ·a = wᵢa, longer words act by 0", display == act));
            let report = check_partial_action(&act);
            Artifact::Action { table: act, report }
        } else {
            let co = construct_nichols_coaction(hopf.clone(), target.clone(), &w)?;
            displays.push(DisplayCheck::new(
                "ρ(a) = Σ (h·a) ⊗ ψ⁻¹(h*)",
                coaction_from_action(&act)? == co,
            ));
            let display = nichols_coaction_display(hopf.clone(), target.clone(), &w)?;
            displays.push(DisplayCheck::new("ρ(a) = a⊗(1+g)/2 − Σ wᵢa⊗gxᵢ", display == co));
            if k == 3 {
                let printed = nichols3_printed_coaction(hopf.clone(), target.clone(), &w)?;
                displays.push(DisplayCheck::misprint(
                    "ρ(a) = a⊗(1+g+g²)/3 − w₁a⊗gx₁ − w₂a⊗gx₂",
                    printed == co,
                    "printed with (1+g+g²)/3; since g² = 1 this is (2+g)/3 and disagrees with the general family (1+g)/2",
                ));
            }
            let report = check_partial_coaction(&co)?;
            Artifact::Coaction { table: co, report }
        }
    } else {
        let root = RootOfUnity::new(n, if n == 2 { 1 } else { cfg.q_power as i64 })?;
        let q = root.value();
        let hopf = Arc::new(taft_algebra(n, &root)?);
        let target = Arc::new(cfg.target.embed(n).map_err(|e| ActionError::Shape(e.to_string()))?);
        let w = parse_ws(cfg, &target, &q, 1)?.remove(0);
        let pca = taft_pca(cfg, n, &target)?;
        let act = construct_taft_action(hopf.clone(), &pca, &w)?;
        displays.push(DisplayCheck::new(
            "rows recomputed from g^i·a and w = x·1_A",
            derive_action_formula(&act)?.passed(),
        ));
        let commutative = target.alg.is_commutative();
        match cfg.example {
            Example::H4 => {
                displays.push(DisplayCheck::new("g·a = 0, x·a = wa, gx·a = aw", h4_action_display(hopf.clone(), target.clone(), &w)? == act));
            }
            Example::T3 => {
                displays.push(DisplayCheck::new(
                    "x·a = wa, gx·a = 0, g²x·a = −qaw, x²·a = w²a, gx²·a = aw², g²x²·a = waw",
                    t3_action_display(hopf.clone(), target.clone(), &q, &w)? == act,
                ));
            }
            Example::T4 => {
                displays.push(DisplayCheck::new("general T4 table in terms of g²·a", t4_action_display(hopf.clone(), &pca, &q, &w)? == act));
            }
            _ => {}
        }
        if matches!(cfg.example, Example::H4 | Example::T3 | Example::T4) {
            let report = check_partial_action(&act);
            Artifact::Action { table: act, report }
        } else {
            let co = construct_taft_coaction(hopf.clone(), &pca, &w)?;
            displays.push(DisplayCheck::new("ρ(a) = Σ (h·a) ⊗ φ(h*)", coaction_from_action(&act)? == co));
            match cfg.example {
                Example::H4Coaction => {
                    displays.push(DisplayCheck::new(
                        "ρ(a) = a⊗(1+g)/2 + wa⊗(x−gx)/2 − aw⊗(x+gx)/2",
                        h4_coaction_display(hopf.clone(), target.clone(), &w)? == co,
                    ));
                    if commutative {
                        displays.push(DisplayCheck::new(
                            "ρ(a) = a⊗(1+g)/2 − aw⊗gx",
                            h4_central_coaction_display(hopf.clone(), target.clone(), &w)? == co,
                        ));
                    }
                }
                Example::T3Coaction => {
                    displays.push(DisplayCheck::new(
                        "six-term T3 coaction",
                        t3_coaction_display(hopf.clone(), target.clone(), &q, &w)? == co,
                    ));
                    if commutative {
                        displays.push(DisplayCheck::new(
                            "central-w T3 coaction, with w²a ⊗ qgx²",
                            t3_central_coaction_display(hopf.clone(), target.clone(), &q, &w, 2)? == co,
                        ));
                        let as_printed = t3_central_coaction_display(hopf.clone(), target.clone(), &q, &w, 1)? == co;
                        let w2 = target.alg.pow(&w, 2);
                        // the printed wa and the intended w²a agree only when w = w²
                        if w2 != w {
                            displays.push(DisplayCheck::misprint(
                                "central-w T3 coaction as printed, with wa ⊗ qgx²",
                                as_printed,
                                "the x² part of the six-term display collapses to −w²a⊗qgx² for central w, not −wa⊗qgx²",
                            ));
                        }
                    }
                    if target.dim() == 1 {
                        displays.push(DisplayCheck::new(
                            "ρ(1) = 1⊗z_w",
                            t3_field_coaction_display(hopf.clone(), target.clone(), &q, &w[0])? == co,
                        ));
                    }
                }
                Example::T4Coaction => {
                    if cfg.t4_case == T4Case::Identity {
                        displays.push(DisplayCheck::new("ρ(a) = a⊗(1+g²)/2", t4_coaction_display(hopf.clone(), target.clone())? == co));
                    }
                }
                _ => {}
            }
            let report = check_partial_coaction(&co)?;
            Artifact::Coaction { table: co, report }
        }
    };
    Ok(ExampleReport {
        example: cfg.example.to_string(),
        target: cfg.spec.to_string(),
        w: cfg.w.clone(),
        artifact,
        displays,
    })
}

/// One `(pca, w)` input of the classification menu.
#[derive(Debug, Clone)]
pub struct MenuEntry {
    pub spec: TargetSpec,
    pub target: Arc<TargetAlgebra>,
    pub pca_name: String,
    pub pca: PartialCnAction,
    pub w_expr: String,
    pub w: Vector,
}

impl MenuEntry {
    pub fn describe(&self) -> String {
        format!("{} / {} / w = {}", self.spec, self.pca_name, self.w_expr)
    }
}

/// `z^k ↦ c^k z^k` on `k[z]/(z^m)`.
fn scaling_automorphism(m: u32, c: &CycNum) -> Result<LinMap, ActionError> {
    let d = m as usize;
    let cond = c.conductor();
    let cols: Vec<Vector> = (0..d)
        .map(|k| {
            let mut v = linalg::zero_vector(d, cond);
            v[k] = c.pow(k as i64).expect("roots of unity are invertible");
            v
        })
        .collect();
    LinMap::from_columns(d, &cols, cond).map_err(|e| ActionError::Shape(e.to_string()))
}

/// Conjugation by `diag(1, c)` on `M₂(k)`: `e₁₂ ↦ c⁻¹e₁₂`, `e₂₁ ↦ c e₂₁`.
fn diagonal_conjugation(c: &CycNum) -> Result<LinMap, ActionError> {
    let cond = c.conductor();
    let inv = c.inv()?;
    let diag = [CycNum::one(cond), inv, c.clone(), CycNum::one(cond)];
    let cols: Vec<Vector> = diag
        .iter()
        .enumerate()
        .map(|(k, x)| {
            let mut v = linalg::zero_vector(4, cond);
            v[k] = x.clone();
            v
        })
        .collect();
    LinMap::from_columns(4, &cols, cond).map_err(|e| ActionError::Shape(e.to_string()))
}

fn entry(spec: TargetSpec, target: &Arc<TargetAlgebra>, pca_name: &str, pca: &PartialCnAction, w_expr: &str, q: &CycNum) -> Result<MenuEntry, ActionError> {
    let w = crate::targets::parse_element(w_expr, &target.alg, Some(q)).map_err(|e| ActionError::Shape(e.to_string()))?;
    Ok(MenuEntry {
        spec,
        target: target.clone(),
        pca_name: pca_name.to_string(),
        pca: pca.clone(),
        w_expr: w_expr.to_string(),
        w,
    })
}

/// The admissible inputs for `Tₙ(q)`, `q = ζₙ^t`, over the field, `k[z]/(z^m)`
/// for `m ∈ 2..4` and `M₂(k)`:
///
/// - field: degenerate, `w ∈ {0, 1, −1/2, q}`;
/// - `k[z]/(z^m)`: degenerate, `w ∈ {0, z, 1+z, q z^{m−1}}`; for each divisor
///   `2 ≤ d < n`, `g^d` acting as the identity with `w = 0`, and `g^d` acting by
///   `z ↦ q^{−d}z` with `w ∈ {z, 2z}`;
/// - `M₂(k)`: degenerate, `w ∈ {e12, e11 + q e22, 1}`; for each divisor
///   `2 ≤ d < n`, `g^d` acting by conjugation with `diag(1, q^d)` and `w = e12`.
pub fn admissible_menu(n: u32, t: u32) -> Result<Vec<MenuEntry>, ActionError> {
    let q = RootOfUnity::new(n, t as i64)?.value();
    let mut out = Vec::new();
    let divisors: Vec<u32> = (2..n).filter(|d| n % d == 0).collect();
    let field = Arc::new(crate::targets::field_target().embed(n).map_err(|e| ActionError::Shape(e.to_string()))?);
    let deg = PartialCnAction::degenerate(n, field.clone());
    for w in ["0", "1", "-1/2", "q"] {
        out.push(entry(TargetSpec::Field, &field, "degenerate", &deg, w, &q)?);
    }
    for m in 2..=4 {
        let spec = TargetSpec::TruncPoly(m);
        let target = Arc::new(spec.build().and_then(|t| t.embed(n)).map_err(|e| ActionError::Shape(e.to_string()))?);
        let deg = PartialCnAction::degenerate(n, target.clone());
        let top = if m == 2 { "q*z".to_string() } else { format!("q*z^{}", m - 1) };
        for w in ["0", "z", "1 + z", top.as_str()] {
            out.push(entry(spec, &target, "degenerate", &deg, w, &q)?);
        }
        for &d in &divisors {
            let id = PartialCnAction::from_subgroup(n, d, &LinMap::identity(m as usize, n), target.clone())?;
            out.push(entry(spec, &target, &format!("g^{d} acts as identity"), &id, "0", &q)?);
            let alpha = scaling_automorphism(m, &q.pow(-(d as i64))?)?;
            let tw = PartialCnAction::from_subgroup(n, d, &alpha, target.clone())?;
            for w in ["z", "2*z"] {
                out.push(entry(spec, &target, &format!("g^{d} acts by z -> q^-{d} z"), &tw, w, &q)?);
            }
        }
    }
    let spec = TargetSpec::Matrix(2);
    let target = Arc::new(spec.build().and_then(|t| t.embed(n)).map_err(|e| ActionError::Shape(e.to_string()))?);
    let deg = PartialCnAction::degenerate(n, target.clone());
    for w in ["e12", "e11 + q*e22", "1"] {
        out.push(entry(spec, &target, "degenerate", &deg, w, &q)?);
    }
    for &d in &divisors {
        let alpha = diagonal_conjugation(&q.pow(d as i64)?)?;
        let tw = PartialCnAction::from_subgroup(n, d, &alpha, target.clone())?;
        out.push(entry(spec, &target, &format!("g^{d} acts by conjugation with diag(1, q^{d})"), &tw, "e12", &q)?);
    }
    Ok(out)
}

/// Inputs violating one hypothesis each: `w = e11` on `M₂(k)` (`wⁿ` not
/// central), and for each divisor `2 ≤ d < n`, `w = z + z²` under
/// `z ↦ q^{−d}z` and `w = z` under `g^d` acting as the identity (twist fails).
pub fn rejected_menu(n: u32, t: u32) -> Result<Vec<MenuEntry>, ActionError> {
    let q = RootOfUnity::new(n, t as i64)?.value();
    let mut out = Vec::new();
    let spec = TargetSpec::Matrix(2);
    let target = Arc::new(spec.build().and_then(|t| t.embed(n)).map_err(|e| ActionError::Shape(e.to_string()))?);
    out.push(entry(spec, &target, "degenerate", &PartialCnAction::degenerate(n, target.clone()), "e11", &q)?);
    let spec = TargetSpec::TruncPoly(3);
    let target = Arc::new(spec.build().and_then(|t| t.embed(n)).map_err(|e| ActionError::Shape(e.to_string()))?);
    for d in (2..n).filter(|d| n % d == 0) {
        let alpha = scaling_automorphism(3, &q.pow(-(d as i64))?)?;
        let tw = PartialCnAction::from_subgroup(n, d, &alpha, target.clone())?;
        out.push(entry(spec, &target, &format!("g^{d} acts by z -> q^-{d} z"), &tw, "z + z^2", &q)?);
        let id = PartialCnAction::from_subgroup(n, d, &LinMap::identity(3, n), target.clone())?;
        out.push(entry(spec, &target, &format!("g^{d} acts as identity"), &id, "z", &q)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(ex: &str, spec: &str, w: &[&str]) -> ExampleReport {
        let cfg = ExampleConfig::new(ex.parse().unwrap(), spec.parse().unwrap()).unwrap().with_w(w);
        run_example(&cfg).unwrap()
    }

    #[test]
    fn names_round_trip() {
        for s in ["h4", "t3", "t4", "h4-coaction", "t3-coaction", "t4-coaction", "nichols:3", "nichols-coaction:2"] {
            assert_eq!(s.parse::<Example>().unwrap().to_string(), s);
        }
        assert!("nichols:1".parse::<Example>().is_err());
        assert!("t5".parse::<Example>().is_err());
    }

    #[test]
    fn h4_examples() {
        let r = run("h4", "truncpoly:3", &["z"]);
        assert!(r.passed(), "{:?}", r.displays);
        let r = run("h4-coaction", "matrix:2", &["e12"]);
        assert!(r.passed(), "{:?}", r.displays);
    }

    #[test]
    fn t3_noncommutative_display() {
        // w³ = 0 is central while w² ≠ 0, so every term of the display is visible
        for t in [1, 2] {
            let cfg = ExampleConfig::new(Example::T3, TargetSpec::Matrix(3)).unwrap().with_w(&["e12 + e23"]).with_q_power(t);
            assert!(run_example(&cfg).unwrap().passed());
            let cfg = ExampleConfig::new(Example::T3Coaction, TargetSpec::Matrix(3)).unwrap().with_w(&["e12 + e23"]).with_q_power(t);
            let r = run_example(&cfg).unwrap();
            assert!(r.passed(), "{:?}", r.displays);
        }
    }

    #[test]
    fn t4_cases() {
        let cases = [
            (TargetSpec::TruncPoly(3), "z", T4Case::Degenerate),
            (TargetSpec::TruncPoly(3), "z", T4Case::Twisted),
            (TargetSpec::Matrix(2), "e12", T4Case::Twisted),
            (TargetSpec::Matrix(2), "0", T4Case::Identity),
            (TargetSpec::Field, "5/7", T4Case::Degenerate),
        ];
        for (spec, w, case) in cases {
            for t in [1, 3] {
                for ex in [Example::T4, Example::T4Coaction] {
                    let cfg = ExampleConfig::new(ex, spec).unwrap().with_w(&[w]).with_q_power(t).with_t4_case(case);
                    let r = run_example(&cfg).unwrap();
                    assert!(r.passed(), "{spec} {w} {case:?} {t}: {:?}", r.displays);
                }
            }
        }
    }

    #[test]
    fn t3_central_and_field_displays() {
        let r = run("t3-coaction", "truncpoly:3", &["z"]);
        assert!(r.passed(), "{:?}", r.displays);
        assert!(r.displays.iter().any(|d| d.expected_mismatch && !d.matches));
        let r = run("t3-coaction", "field", &["3/2"]);
        assert!(r.passed(), "{:?}", r.displays);
    }

    #[test]
    fn menu_for_t4() {
        let h = Arc::new(taft_algebra(4, &RootOfUnity::new(4, 1).unwrap()).unwrap());
        let good = admissible_menu(4, 1).unwrap();
        assert!(good.len() > 20);
        for e in &good {
            let act = construct_taft_action(h.clone(), &e.pca, &e.w).unwrap_or_else(|err| panic!("{}: {err}", e.describe()));
            assert!(check_partial_action(&act).is_symmetric(), "{}", e.describe());
        }
        for e in rejected_menu(4, 1).unwrap() {
            assert!(construct_taft_action(h.clone(), &e.pca, &e.w).is_err(), "{}", e.describe());
            let raw = crate::paction::taft_formula_table(h.clone(), &e.pca, &e.w).unwrap();
            assert!(!check_partial_action(&raw).is_partial_action(), "{}", e.describe());
        }
    }

    #[test]
    fn nichols3_misprint_is_flagged() {
        let r = run("nichols-coaction:3", "field", &["2", "-1/3"]);
        assert!(r.passed());
        let m = r.displays.iter().find(|d| d.expected_mismatch).unwrap();
        assert!(!m.matches);
    }
}
