//! Partial coactions `ρ: A → A ⊗ H`, duality with partial actions, and the
//! constructive coaction families for Taft and Nichols algebras.
//!
//! Coaction axioms are checked through the dual action `f·a = f(a¹)a⁰` of
//! `H*`, which is a partial action exactly when `ρ` is a partial coaction.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cyclotomic::CycNum;
use crate::hopf::{dual_unchecked, nichols_selfdual_psi, taft_selfdual_phi, HopfData, HopfKind};
use crate::linalg::{self, LinMap, Vector};
use crate::paction::{check_partial_action, check_taft_hypotheses, taft_parameters, ActionError, ActionTable, AxiomReport, PartialCnAction, Precondition};
use crate::qcomb::{q_factorial, QCalc};
use crate::targets::{is_central, TargetAlgebra};

/// One term `c · e_{a'} ⊗ e_h`.
pub type Term = (usize, usize, CycNum);

/// `rho[a]` lists the nonzero terms of `ρ(e_a)`, sorted by `(a', h)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoactionTable {
    hopf: Arc<HopfData>,
    target: Arc<TargetAlgebra>,
    rho: Vec<Vec<Term>>,
}

fn normalize(terms: impl IntoIterator<Item = Term>) -> Vec<Term> {
    let mut acc: BTreeMap<(usize, usize), CycNum> = BTreeMap::new();
    for (a, h, c) in terms {
        let slot = acc.entry((a, h)).or_insert_with(|| CycNum::zero(c.conductor()));
        *slot += &c;
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|((a, h), c)| (a, h, c)).collect()
}

impl CoactionTable {
    pub fn new(hopf: Arc<HopfData>, target: Arc<TargetAlgebra>, rho: Vec<Vec<Term>>) -> Result<Self, ActionError> {
        if hopf.conductor() != target.conductor() {
            return Err(ActionError::Conductor {
                hopf: hopf.conductor(),
                target: target.conductor(),
            });
        }
        let (dh, da) = (hopf.dim(), target.dim());
        if rho.len() != da {
            return Err(ActionError::Shape(format!("expected {da} coaction images")));
        }
        let c = target.conductor();
        for (a, h, x) in rho.iter().flatten() {
            if *a >= da || *h >= dh || x.conductor() != c {
                return Err(ActionError::Shape(format!("term ({a}, {h}) out of range or over the wrong field")));
            }
        }
        let rho = rho.into_iter().map(normalize).collect();
        Ok(CoactionTable { hopf, target, rho })
    }

    /// Builds `ρ(e_a) = Σ_h v_{a,h} ⊗ e_h` from the rule `(a, h) ↦ v_{a,h} ∈ A`.
    pub fn from_components<F>(hopf: Arc<HopfData>, target: Arc<TargetAlgebra>, f: F) -> Result<Self, ActionError>
    where
        F: Fn(usize, usize) -> Vector,
    {
        let rho = (0..target.dim())
            .map(|a| {
                (0..hopf.dim())
                    .flat_map(|h| {
                        f(a, h)
                            .into_iter()
                            .enumerate()
                            .filter(|(_, c)| !c.is_zero())
                            .map(move |(k, c)| (k, h, c))
                    })
                    .collect()
            })
            .collect();
        Self::new(hopf, target, rho)
    }

    pub fn hopf(&self) -> &Arc<HopfData> {
        &self.hopf
    }

    pub fn target(&self) -> &Arc<TargetAlgebra> {
        &self.target
    }

    pub fn rho(&self, a: usize) -> &[Term] {
        &self.rho[a]
    }

    /// The `A`-coefficient of `e_h` in `ρ(e_a)`.
    pub fn component(&self, a: usize, h: usize) -> Vector {
        let mut out = self.target.alg.zero();
        for (k, hh, c) in &self.rho[a] {
            if *hh == h {
                out[*k] += c;
            }
        }
        out
    }

    /// `(id ⊗ f)ρ(v)` for a functional `f` on `H` given by its values on the
    /// basis and an arbitrary `v ∈ A`.
    pub fn evaluate(&self, f: &[CycNum], v: &[CycNum]) -> Vector {
        let mut out = self.target.alg.zero();
        for (a, ca) in linalg::support(v) {
            for (k, h, c) in &self.rho[a] {
                out[*k] += &(&(ca * c) * &f[*h]);
            }
        }
        out
    }

    /// `(id ⊗ ε)ρ = id` on every basis element.
    pub fn is_counital(&self) -> bool {
        let eps = self.hopf.counit().clone();
        (0..self.target.dim()).all(|a| self.evaluate(&eps, &self.target.basis(a)) == self.target.basis(a))
    }
}

/// `ρ(a) = Σᵢ (hᵢ·a) ⊗ hᵢ*` over the dual basis of `H*`.
pub fn dualize_action(act: &ActionTable) -> Result<CoactionTable, ActionError> {
    let dual = Arc::new(dual_unchecked(act.hopf()));
    CoactionTable::from_components(dual, act.target().clone(), |a, h| act.entry(h, a).clone())
}

/// `hᵢ*·a = hᵢ*(a¹)a⁰`, a table over `H*`.
pub fn dualize_coaction(co: &CoactionTable) -> Result<ActionTable, ActionError> {
    let dual = Arc::new(dual_unchecked(co.hopf()));
    ActionTable::from_fn(dual, co.target().clone(), |h, a| co.component(a, h))
}

/// `(id ⊗ f)ρ` for a linear map `f` from `co.hopf()` to `hopf`.
pub fn transport(co: &CoactionTable, f: &LinMap, hopf: Arc<HopfData>) -> Result<CoactionTable, ActionError> {
    if f.src_dim() != co.hopf().dim() || f.dst_dim() != hopf.dim() {
        return Err(ActionError::Shape("transport map has the wrong shape".into()));
    }
    let columns: Vec<Vector> = (0..f.src_dim()).map(|j| f.column(j)).collect();
    let rho = co
        .rho
        .iter()
        .map(|terms| {
            terms
                .iter()
                .flat_map(|(a, h, c)| {
                    linalg::support(&columns[*h])
                        .map(|(k, x)| (*a, k, c * x))
                        .collect::<Vec<_>>()
                })
                .collect()
        })
        .collect();
    CoactionTable::new(hopf, co.target().clone(), rho)
}

/// The coaction of the self-dual algebra itself: `ρ(a) = Σ (h·a) ⊗ φ(h*)`
/// with `φ = ψ⁻¹` the Taft or Nichols identification `H* ≅ H`.
pub fn coaction_from_action(act: &ActionTable) -> Result<CoactionTable, ActionError> {
    let hopf = act.hopf().clone();
    let phi = match hopf.kind() {
        HopfKind::Taft { .. } => {
            let (n, q) = taft_parameters(&hopf)?;
            taft_selfdual_phi(n, &q)?
        }
        HopfKind::Nichols { n } => nichols_selfdual_psi(*n)?
            .inverse()
            .map_err(|e| ActionError::Shape(e.to_string()))?,
        _ => return Err(ActionError::WrongHopf { expected: "Taft or Nichols" }),
    };
    transport(&dualize_action(act)?, &phi, hopf)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoactionReport {
    /// `(id ⊗ ε)ρ = id`
    pub counital: bool,
    /// Verdicts of the dual action of `H*`.
    pub axioms: AxiomReport,
    pub symmetric: bool,
}

impl CoactionReport {
    pub fn is_partial_coaction(&self) -> bool {
        self.axioms.is_partial_action()
    }
}

pub fn check_partial_coaction(co: &CoactionTable) -> Result<CoactionReport, ActionError> {
    let axioms = check_partial_action(&dualize_coaction(co)?);
    Ok(CoactionReport {
        counital: co.is_counital(),
        symmetric: axioms.is_symmetric(),
        axioms,
    })
}

/// `φ((g^i x^j)*) = (1/n)((j)_q!)^{−1} q^{ij+j(j−1)/2} Σ_ℓ q^{ℓ(i+j)} g^ℓ x^j`
/// as a coefficient vector on `Tₙ(q)`.
fn phi_image(n: u32, q: &crate::cyclotomic::RootOfUnity, i: i64, j: i64) -> Result<Vector, ActionError> {
    let nn = n as i64;
    let pre = CycNum::from_frac(n, 1, nn) * q_factorial(j, &q.value()).inv()? * q.pow(i * j + j * (j - 1) / 2);
    let mut v = linalg::zero_vector((n * n) as usize, n);
    for l in 0..nn {
        v[(l * nn + j) as usize] = &pre * &q.pow(l * (i + j));
    }
    Ok(v)
}

/// The partial coaction
/// `ρ(a) = Σ_{i,j} Σ_{k≤j} q^{−ij}(−1)^k q^{−k(k−1)/2} (j k)_{q⁻¹} w^{j−k}(Σ_t q^{−(i+k)t} σ_t(a)) w^k ⊗ φ((g^i x^j)*)`,
/// where `σ_t(a) = (g^t)*(a¹)a⁰` is the `kCₙ` coaction dual to `pca`,
/// recovered by `σ_t(a) = (1/n) Σ_m q^{mt} (g^m·a)`.
pub fn construct_taft_coaction(hopf: Arc<HopfData>, pca: &PartialCnAction, w: &[CycNum]) -> Result<CoactionTable, ActionError> {
    let (n, q) = taft_parameters(&hopf)?;
    if pca.n() != n {
        return Err(ActionError::Shape(format!("partial C{} action used with T{n}", pca.n())));
    }
    let target = pca.target().clone();
    if w.len() != target.dim() {
        return Err(ActionError::Shape("w has the wrong length".into()));
    }
    check_taft_hypotheses(n, &q, pca, w)?;
    let alg = &target.alg;
    let nn = n as i64;
    let inv_n = CycNum::from_frac(n, 1, nn);
    let powers: Vec<Vector> = (0..n).map(|k| alg.pow(w, k)).collect();
    let mut qinv = QCalc::new(q.inverse().value());
    let phis: Vec<Vec<Vector>> = (0..nn)
        .map(|i| (0..nn).map(|j| phi_image(n, &q, i, j)).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()?;
    let mut rho = Vec::with_capacity(target.dim());
    for a in 0..target.dim() {
        let ea = target.basis(a);
        let images: Vec<Vector> = (0..nn).map(|m| pca.act(m, &ea)).collect();
        let sigma: Vec<Vector> = (0..nn)
            .map(|t| {
                let mut s = alg.zero();
                for m in 0..nn {
                    linalg::axpy(&mut s, &(&inv_n * &q.pow(m * t)), &images[m as usize]);
                }
                s
            })
            .collect();
        let mut terms: Vec<Term> = Vec::new();
        for i in 0..nn {
            for j in 0..nn {
                let mut left = alg.zero();
                for k in 0..=j {
                    let mut group_part = alg.zero();
                    for t in 0..nn {
                        linalg::axpy(&mut group_part, &q.pow(-(i + k) * t), &sigma[t as usize]);
                    }
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    let coeff = CycNum::from_int(n, sign) * q.pow(-i * j - k * (k - 1) / 2) * qinv.binomial(j, k);
                    let prod = alg.mul_all(&[&powers[(j - k) as usize], &group_part, &powers[k as usize]]);
                    linalg::axpy(&mut left, &coeff, &prod);
                }
                for (ka, ca) in linalg::support(&left) {
                    for (kh, ch) in linalg::support(&phis[i as usize][j as usize]) {
                        terms.push((ka, kh, ca * ch));
                    }
                }
            }
        }
        rho.push(terms);
    }
    CoactionTable::new(hopf, target, rho)
}

/// The coaction for `g^i·1_A = δ_{i,0}1_A`:
/// `ρ(a) = Σ_{i,j} (−1)^i q^{i(i+1)/2} (j i)_q w^{j−i} a w^i ⊗ (1/n)((j)_q!)^{−1} q^{−ij+j(j−1)/2} Σ_k q^{k(j−i)} g^k x^j`.
pub fn field_case_taft_coaction(hopf: Arc<HopfData>, target: Arc<TargetAlgebra>, w: &[CycNum]) -> Result<CoactionTable, ActionError> {
    let (n, q) = taft_parameters(&hopf)?;
    let alg = &target.alg;
    if !is_central(alg, &alg.pow(w, n)) {
        return Err(Precondition::WPowerNotCentral.into());
    }
    let nn = n as i64;
    let mut calc = QCalc::new(q.value());
    let mut rho = Vec::with_capacity(target.dim());
    for a in 0..target.dim() {
        let ea = target.basis(a);
        let mut terms = Vec::new();
        for j in 0..nn {
            let pre = CycNum::from_frac(n, 1, nn) * q_factorial(j, &q.value()).inv()?;
            for i in 0..=j {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                let coeff = CycNum::from_int(n, sign) * q.pow(i * (i + 1) / 2) * calc.binomial(j, i);
                let left = alg.mul_all(&[&alg.pow(w, (j - i) as u32), &ea, &alg.pow(w, i as u32)]);
                for k in 0..nn {
                    let hc = &pre * &q.pow(-i * j + j * (j - 1) / 2 + k * (j - i));
                    for (ka, ca) in linalg::support(&left) {
                        terms.push((ka, (k * nn + j) as usize, &(ca * &coeff) * &hc));
                    }
                }
            }
        }
        rho.push(terms);
    }
    CoactionTable::new(hopf, target, rho)
}

/// `ρ(a) = a ⊗ (1+g)/2 − Σᵢ wᵢa ⊗ gxᵢ`, for central `wᵢ`.
pub fn construct_nichols_coaction(hopf: Arc<HopfData>, target: Arc<TargetAlgebra>, w: &[Vector]) -> Result<CoactionTable, ActionError> {
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
    let c = target.conductor();
    let half = CycNum::from_frac(c, 1, 2);
    let one = hopf.index_of("1").expect("unit label");
    let g = hopf.index_of("g").expect("group-like label");
    let gx: Vec<usize> = (1..n).map(|i| hopf.index_of(&format!("gx{i}")).expect("Nichols labels")).collect();
    let t = target.clone();
    CoactionTable::from_components(hopf, target, move |a, h| {
        let ea = t.basis(a);
        if h == one || h == g {
            linalg::scaled(&half, &ea)
        } else if let Some(i) = gx.iter().position(|&k| k == h) {
            linalg::scaled(&CycNum::from_int(c, -1), &t.alg.mul(&w[i], &ea))
        } else {
            t.alg.zero()
        }
    })
}

/// `A_i = Σ_r q^{−ir}(g^r)*(1¹)1⁰` for `0 ≤ i < n`, from a coaction of `Tₙ(q)`.
pub fn taft_idempotents(co: &CoactionTable) -> Result<Vec<Vector>, ActionError> {
    let (n, q) = taft_parameters(co.hopf())?;
    let one = co.target().one();
    let nn = n as i64;
    Ok((0..nn)
        .map(|i| {
            let mut f = linalg::zero_vector((n * n) as usize, n);
            for r in 0..nn {
                f[(r * nn) as usize] = q.pow(-i * r);
            }
            co.evaluate(&f, one)
        })
        .collect())
}

/// `w = Σ_k q^{−k}(g^k x)*(1¹)1⁰`, from a coaction of `Tₙ(q)`.
pub fn taft_w(co: &CoactionTable) -> Result<Vector, ActionError> {
    let (n, q) = taft_parameters(co.hopf())?;
    let nn = n as i64;
    let mut f = linalg::zero_vector((n * n) as usize, n);
    for k in 0..nn {
        f[(k * nn + 1) as usize] = q.pow(-k);
    }
    Ok(co.evaluate(&f, co.target().one()))
}

/// `A₁ = (1* − g*)(1¹)1⁰` and `wᵢ = (xᵢ* − (gxᵢ)*)(1¹)1⁰`, from a coaction of
/// `H_{2ⁿ}`.
pub fn nichols_parts(co: &CoactionTable) -> Result<(Vector, Vec<Vector>), ActionError> {
    let h = co.hopf();
    let n = match h.kind() {
        HopfKind::Nichols { n } => *n,
        _ => return Err(ActionError::WrongHopf { expected: "Nichols" }),
    };
    let c = h.conductor();
    let pair = |plus: &str, minus: &str| {
        let mut f = linalg::zero_vector(h.dim(), c);
        f[h.index_of(plus).expect("label")] = CycNum::one(c);
        f[h.index_of(minus).expect("label")] = CycNum::from_int(c, -1);
        co.evaluate(&f, co.target().one())
    };
    let a1 = pair("1", "g");
    let ws = (1..n).map(|i| pair(&format!("x{i}"), &format!("gx{i}"))).collect();
    Ok((a1, ws))
}

#[derive(Serialize, Deserialize)]
struct CoactionRepr {
    hopf: HopfData,
    target: TargetAlgebra,
    rho: Vec<Vec<Term>>,
}

impl Serialize for CoactionTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CoactionRepr {
            hopf: (*self.hopf).clone(),
            target: (*self.target).clone(),
            rho: self.rho.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CoactionTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = CoactionRepr::deserialize(d)?;
        CoactionTable::new(Arc::new(r.hopf), Arc::new(r.target), r.rho).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::RootOfUnity;
    use crate::hopf::{nichols_algebra, same_structure, taft_algebra};
    use crate::paction::{construct_nichols_action, construct_taft_action};
    use crate::targets::{field_target, trunc_poly_target};

    fn taft(n: u32, t: i64) -> Arc<HopfData> {
        Arc::new(taft_algebra(n, &RootOfUnity::new(n, t).unwrap()).unwrap())
    }

    #[test]
    fn trivial_action_gives_global_coaction() {
        let h = taft(3, 1);
        let t = Arc::new(trunc_poly_target(2).unwrap().embed(3).unwrap());
        let act = ActionTable::trivial(h, t.clone()).unwrap();
        let co = coaction_from_action(&act).unwrap();
        for a in 0..2 {
            assert_eq!(co.rho(a), &[(a, 0, CycNum::one(3))]);
        }
        let r = check_partial_coaction(&co).unwrap();
        assert!(r.counital && r.symmetric && r.axioms.global);
    }

    #[test]
    fn sweedler_field_coaction() {
        let h = taft(2, 1);
        let t = Arc::new(field_target().embed(2).unwrap());
        let w = vec![CycNum::from_frac(2, 3, 5)];
        let pca = PartialCnAction::degenerate(2, t.clone());
        let co = construct_taft_coaction(h.clone(), &pca, &w).unwrap();
        // z_w = (1+g)/2 − w gx
        let half = CycNum::from_frac(2, 1, 2);
        let expected = vec![(0, 0, half.clone()), (0, 2, half), (0, 3, -&w[0])];
        assert_eq!(co.rho(0), expected.as_slice());
        let via_dual = coaction_from_action(&construct_taft_action(h.clone(), &pca, &w).unwrap()).unwrap();
        assert_eq!(co, via_dual);
        assert_eq!(field_case_taft_coaction(h, t, &w).unwrap(), co);
        assert!(check_partial_coaction(&co).unwrap().symmetric);
    }

    #[test]
    fn round_trip_through_the_dual() {
        let h = taft(3, 2);
        let t = Arc::new(trunc_poly_target(3).unwrap().embed(3).unwrap());
        let w = t.element("z").unwrap();
        let act = construct_taft_action(h, &PartialCnAction::degenerate(3, t), &w).unwrap();
        let back = dualize_coaction(&dualize_action(&act).unwrap()).unwrap();
        assert_eq!(back.rows(), act.rows());
        assert!(same_structure(back.hopf(), act.hopf()));
    }

    #[test]
    fn idempotent_and_w_extraction() {
        for (n, t_exp) in [(3, 1), (4, 3)] {
            let h = taft(n, t_exp);
            let t = Arc::new(trunc_poly_target(2).unwrap().embed(n).unwrap());
            let w = t.element("z").unwrap();
            let pca = PartialCnAction::degenerate(n, t.clone());
            let co = construct_taft_coaction(h, &pca, &w).unwrap();
            let parts = taft_idempotents(&co).unwrap();
            for (i, p) in parts.iter().enumerate() {
                assert_eq!(p, &pca.on_one(i as i64));
            }
            assert_eq!(taft_w(&co).unwrap(), w);
        }
    }

    #[test]
    fn counital_failure_is_reported() {
        let h = taft(2, 1);
        let t = Arc::new(field_target().embed(2).unwrap());
        let co = CoactionTable::new(h, t, vec![vec![(0, 0, CycNum::from_int(2, 2))]]).unwrap();
        let r = check_partial_coaction(&co).unwrap();
        assert!(!r.counital && !r.axioms.pa1);
    }

    #[test]
    fn nichols_coaction_matches_dual_of_action() {
        let h = Arc::new(nichols_algebra(3).unwrap());
        let t = Arc::new(trunc_poly_target(2).unwrap());
        let w = vec![t.element("z").unwrap(), linalg::scaled(&CycNum::from_int(1, 2), t.one())];
        let co = construct_nichols_coaction(h.clone(), t.clone(), &w).unwrap();
        let act = construct_nichols_action(h, t, &w).unwrap();
        assert_eq!(coaction_from_action(&act).unwrap(), co);
        let (a1, ws) = nichols_parts(&co).unwrap();
        assert!(linalg::is_zero_vector(&a1));
        assert_eq!(ws, w);
        assert!(check_partial_coaction(&co).unwrap().symmetric);
    }

    #[test]
    fn json_round_trip() {
        let h = Arc::new(nichols_algebra(2).unwrap());
        let t = Arc::new(field_target());
        let co = construct_nichols_coaction(h, t, &[vec![CycNum::from_int(1, 4)]]).unwrap();
        let s = serde_json::to_string(&co).unwrap();
        assert_eq!(serde_json::from_str::<CoactionTable>(&s).unwrap(), co);
    }
}
