//! Single-coefficient mutation testing of the axiom checker.
//!
//! A mutant adds a constant to one coordinate of one table entry. Whether the
//! mutant is still a partial action is decided by an oracle that does not use
//! the checker: for `g·1_A = 1_A` a mutant is a partial action exactly when it
//! is a module algebra, and for `g·1_A = 0` exactly when it matches the
//! classification formula built from its own `g^i` rows and `x·1_A`. Mutants
//! whose `g·1_A` is some other idempotent are left unclassified.

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::CycNum;
use crate::hopf::HopfKind;
use crate::linalg::{self, Vector};
use crate::paction::{
    check_partial_action, check_taft_hypotheses, construct_nichols_action, restrict_to_group, taft_formula_table, taft_parameters,
    x_on_one, ActionTable, Counterexample,
};
use crate::targets::is_central;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mutant {
    pub h: usize,
    pub a: usize,
    pub coordinate: usize,
    pub delta: CycNum,
}

impl Mutant {
    pub fn apply(&self, act: &ActionTable) -> ActionTable {
        let old = &act.entry(self.h, self.a)[self.coordinate];
        act.with_coefficient(self.h, self.a, self.coordinate, old + &self.delta)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relevance {
    /// The oracle says the mutant is not a partial action.
    Relevant,
    /// The oracle says the mutant is still a partial action.
    Equivalent,
    /// The oracle has no verdict.
    Unclassified,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MutantOutcome {
    pub mutant: Mutant,
    pub relevance: Relevance,
    pub killed: bool,
    pub counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MutationReport {
    pub total: usize,
    pub relevant: usize,
    pub killed_relevant: usize,
    pub equivalent: usize,
    pub unclassified: usize,
    /// Relevant mutants the checker accepted.
    pub survivors: Vec<MutantOutcome>,
    /// Equivalent mutants the checker rejected.
    pub false_alarms: Vec<MutantOutcome>,
}

impl MutationReport {
    pub fn passed(&self) -> bool {
        self.survivors.is_empty() && self.false_alarms.is_empty()
    }

    pub fn kill_rate(&self) -> f64 {
        if self.relevant == 0 {
            1.0
        } else {
            self.killed_relevant as f64 / self.relevant as f64
        }
    }
}

/// Perturbations `k/d` for `k ∈ ±1..±6`, `d ∈ {1,2,3}`, and when the
/// conductor `c` exceeds 2 also `ζ_c`, `ζ_c²` and `1 + ζ_c`.
pub fn delta_menu(c: u32) -> Vec<CycNum> {
    let mut out: Vec<CycNum> = Vec::new();
    for k in (1..=6).flat_map(|k| [k, -k]) {
        for d in 1..=3 {
            let v = CycNum::from_frac(c, k, d);
            if !out.contains(&v) {
                out.push(v);
            }
        }
    }
    if c > 2 {
        let z = CycNum::zeta(c);
        out.push(&z * &z);
        out.push(&z + &CycNum::one(c));
        out.push(z);
    }
    out
}

/// `count` distinct mutants drawn with a seeded generator, or all of them if
/// there are fewer.
pub fn sample_mutants(act: &ActionTable, count: usize, seed: u64) -> Vec<Mutant> {
    let c = act.target().conductor();
    let deltas = delta_menu(c);
    let (dh, da) = (act.hopf().dim(), act.target().dim());
    let space = dh * da * da * deltas.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picks = index::sample(&mut rng, space, count.min(space)).into_vec();
    picks.sort_unstable();
    picks
        .into_iter()
        .map(|p| {
            let (rest, d) = (p / deltas.len(), p % deltas.len());
            let (rest, coordinate) = (rest / da, rest % da);
            let (h, a) = (rest / da, rest % da);
            Mutant {
                h,
                a,
                coordinate,
                delta: deltas[d].clone(),
            }
        })
        .collect()
}

/// Whether the table is a module algebra: `1·a = a`, `h·1 = ε(h)1`,
/// `h·(ab) = Σ(h₁·a)(h₂·b)` and `h·(k·a) = (hk)·a`.
pub fn is_module_algebra(act: &ActionTable) -> bool {
    let h = act.hopf();
    let t = act.target();
    let alg = &t.alg;
    let (dh, da) = (h.dim(), t.dim());
    let unit = h.alg().unit();
    if (0..da).any(|a| act.act(unit, &t.basis(a)) != t.basis(a)) {
        return false;
    }
    if (0..dh).any(|x| act.on_one(x) != linalg::scaled(&h.counit()[x], t.one())) {
        return false;
    }
    for x in 0..dh {
        for a in 0..da {
            for b in 0..da {
                let lhs = act.act_basis(x, &alg.mul(&t.basis(a), &t.basis(b)));
                let mut rhs = alg.zero();
                for (l, r, c) in h.comult_basis(x) {
                    linalg::axpy(&mut rhs, c, &alg.mul(act.entry(*l, a), act.entry(*r, b)));
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    for x in 0..dh {
        for y in 0..dh {
            let xy = h.alg().mul(&h.alg().basis(x), &h.alg().basis(y));
            for a in 0..da {
                if act.act_basis(x, act.entry(y, a)) != act.act(&xy, &t.basis(a)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether rows `0..n` define a partial action of `Cₙ`, from the group form
/// of the axioms: `1·a = a`, `g^i·(ab) = (g^i·a)(g^i·b)` and
/// `g^i·(g^j·a) = (g^i·1)(g^{i+j}·a)`.
pub fn is_partial_group_action(n: usize, row: impl Fn(usize, &[CycNum]) -> Vector, act: &ActionTable) -> bool {
    let t = act.target();
    let alg = &t.alg;
    let da = t.dim();
    if (0..da).any(|a| row(0, &t.basis(a)) != t.basis(a)) {
        return false;
    }
    for i in 0..n {
        let e = row(i, t.one());
        for a in 0..da {
            let ga = row(i, &t.basis(a));
            for b in 0..da {
                if row(i, &alg.mul(&t.basis(a), &t.basis(b))) != alg.mul(&ga, &row(i, &t.basis(b))) {
                    return false;
                }
            }
            for j in 0..n {
                let lhs = row(i, &row(j, &t.basis(a)));
                let rhs = alg.mul(&e, &row((i + j) % n, &t.basis(a)));
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

fn verdict(b: bool) -> Relevance {
    if b {
        Relevance::Equivalent
    } else {
        Relevance::Relevant
    }
}

/// The oracle verdict for one table.
pub fn classify(act: &ActionTable) -> Relevance {
    let hopf = act.hopf();
    let t = act.target();
    let alg = &t.alg;
    if let HopfKind::Group { n } = hopf.kind() {
        let n = *n as usize;
        return verdict(is_partial_group_action(n, |i, v| act.act_basis(i, v), act));
    }
    let Some(g) = hopf.index_of("g") else {
        return Relevance::Unclassified;
    };
    let g1 = act.on_one(g);
    if alg.mul(&g1, &g1) != g1 {
        // g·1_A is idempotent in any partial action
        return Relevance::Relevant;
    }
    if g1 == *t.one() {
        return verdict(is_module_algebra(act));
    }
    if !linalg::is_zero_vector(&g1) {
        return Relevance::Unclassified;
    }
    match hopf.kind() {
        HopfKind::Taft { .. } => {
            let Ok((n, q)) = taft_parameters(hopf) else {
                return Relevance::Unclassified;
            };
            let (Ok(pca), Ok(w)) = (restrict_to_group(act), x_on_one(act)) else {
                return Relevance::Unclassified;
            };
            let row = |i: usize, v: &[CycNum]| pca.act(i as i64, v);
            if !is_partial_group_action(n as usize, row, act) {
                return Relevance::Relevant;
            }
            if check_taft_hypotheses(n, &q, &pca, &w).is_err() {
                return Relevance::Relevant;
            }
            match taft_formula_table(hopf.clone(), &pca, &w) {
                Ok(rebuilt) => verdict(rebuilt.rows() == act.rows()),
                Err(_) => Relevance::Unclassified,
            }
        }
        HopfKind::Nichols { n } => {
            let ws: Vec<Vector> = (1..*n)
                .map(|i| act.on_one(hopf.index_of(&format!("x{i}")).expect("Nichols labels")))
                .collect();
            if ws.iter().any(|w| !is_central(alg, w)) {
                return Relevance::Unclassified;
            }
            match construct_nichols_action(hopf.clone(), t.clone(), &ws) {
                Ok(rebuilt) => verdict(rebuilt.rows() == act.rows()),
                Err(_) => Relevance::Unclassified,
            }
        }
        _ => Relevance::Unclassified,
    }
}

/// Runs the oracle and the checker on each sampled mutant.
pub fn run_mutation_suite(act: &ActionTable, count: usize, seed: u64) -> MutationReport {
    let mut report = MutationReport {
        total: 0,
        relevant: 0,
        killed_relevant: 0,
        equivalent: 0,
        unclassified: 0,
        survivors: Vec::new(),
        false_alarms: Vec::new(),
    };
    for mutant in sample_mutants(act, count, seed) {
        let mutated = mutant.apply(act);
        let relevance = classify(&mutated);
        let axioms = check_partial_action(&mutated);
        let killed = !axioms.is_partial_action();
        let counterexample = axioms.first_counterexample.filter(|c| c.lhs != c.rhs);
        let outcome = MutantOutcome {
            mutant,
            relevance,
            killed: killed && counterexample.is_some(),
            counterexample,
        };
        report.total += 1;
        match relevance {
            Relevance::Relevant => {
                report.relevant += 1;
                if outcome.killed {
                    report.killed_relevant += 1;
                } else {
                    report.survivors.push(outcome);
                }
            }
            Relevance::Equivalent => {
                report.equivalent += 1;
                if killed {
                    report.false_alarms.push(outcome);
                }
            }
            Relevance::Unclassified => report.unclassified += 1,
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::cyclotomic::RootOfUnity;
    use crate::hopf::{group_algebra, taft_algebra};
    use crate::paction::{construct_taft_action, PartialCnAction};
    use crate::targets::{field_target, trunc_poly_target};

    #[test]
    fn sampling_is_deterministic_and_distinct() {
        let h = Arc::new(taft_algebra(2, &RootOfUnity::new(2, 1).unwrap()).unwrap());
        let t = Arc::new(trunc_poly_target(2).unwrap().embed(2).unwrap());
        let act = ActionTable::trivial(h, t).unwrap();
        let a = sample_mutants(&act, 60, 7);
        assert_eq!(a, sample_mutants(&act, 60, 7));
        assert_eq!(a.len(), 60);
        for (i, m) in a.iter().enumerate() {
            assert!(!a[..i].contains(m));
        }
    }

    #[test]
    fn sweedler_field_mutants_are_all_killed() {
        let h = Arc::new(taft_algebra(2, &RootOfUnity::new(2, 1).unwrap()).unwrap());
        let t = Arc::new(field_target().embed(2).unwrap());
        let w = vec![CycNum::from_int(2, 3)];
        let act = construct_taft_action(h, &PartialCnAction::degenerate(2, t), &w).unwrap();
        let r = run_mutation_suite(&act, 1000, 1);
        assert_eq!(r.total, 4 * delta_menu(2).len());
        assert!(r.passed(), "{r:?}");
        assert!(r.relevant > 0);
    }

    #[test]
    fn group_mutants() {
        let h = Arc::new(group_algebra(2).unwrap());
        let t = Arc::new(field_target());
        let act = ActionTable::trivial(h, t).unwrap();
        // g·1 = 1 - 1 = 0 is again a partial action of C₂ on k
        let m = Mutant { h: 1, a: 0, coordinate: 0, delta: CycNum::from_int(1, -1) };
        assert_eq!(classify(&m.apply(&act)), Relevance::Equivalent);
        let r = run_mutation_suite(&act, 100, 3);
        assert!(r.passed() && r.equivalent == 1);
    }
}
