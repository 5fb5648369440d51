//! Sphericity criterion and the active-root apparatus: the partition of
//! active roots by `c_φ = 1` weights, the `π`-map and the subordinate relation.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{rank, rat, Rational};
use crate::rootsys::RootSystem;
use crate::subgroup::SubgroupData;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ViolationKind {
    CodimTooLarge,
    DependentWeights,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub weights: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SphericityVerdict {
    pub spherical: bool,
    pub violations: Vec<Violation>,
}

/// All `c_φ ≤ 1`, and the weights with `c_φ = 1` are linearly independent
/// over `Q`.
pub fn check_spherical(sub: &SubgroupData) -> SphericityVerdict {
    let mut violations = Vec::new();
    let big: Vec<Vec<i64>> = sub
        .weight_table()
        .iter()
        .filter(|c| c.codim > 1)
        .map(|c| c.phi.clone())
        .collect();
    if !big.is_empty() {
        violations.push(Violation { kind: ViolationKind::CodimTooLarge, weights: big });
    }
    let ones: Vec<Vec<i64>> = sub
        .weight_table()
        .iter()
        .filter(|c| c.codim == 1)
        .map(|c| c.phi.clone())
        .collect();
    let rows: Vec<Vec<Rational>> = ones.iter().map(|phi| phi.iter().map(|&x| rat(x)).collect()).collect();
    // a zero weight (possible when d = 0) is dependent on its own
    let independent = if sub.d() == 0 { ones.is_empty() } else { rank(&rows) == ones.len() };
    if !independent {
        violations.push(Violation { kind: ViolationKind::DependentWeights, weights: ones });
    }
    SphericityVerdict { spherical: violations.is_empty(), violations }
}

/// Active roots grouped by the weights `φ_1 < … < φ_m` with `c_φ = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActiveRootTable {
    pub phi: Vec<Vec<i64>>,
    /// `Ψ_j` as positive root indices, ascending.
    pub psi: Vec<Vec<usize>>,
    /// `ξ_j` coefficients aligned with `psi[j]`, scaled so the first is 1.
    pub xi: Vec<Vec<Rational>>,
    /// Activity flag per positive root.
    pub active: Vec<bool>,
    /// `π(α)` as a simple root index, per positive root (active ones only).
    pub pi: Vec<Option<usize>>,
    /// Pairs `(β, α)` of active roots with `β` subordinate to `α`.
    pub subordinate: Vec<(usize, usize)>,
}

impl ActiveRootTable {
    pub fn m(&self) -> usize {
        self.phi.len()
    }

    /// Index `j` with `α ∈ Ψ_j`.
    pub fn class_of(&self, positive_idx: usize) -> Option<usize> {
        self.psi.iter().position(|p| p.contains(&positive_idx))
    }

    pub fn active_roots(&self) -> impl Iterator<Item = usize> + '_ {
        self.active.iter().enumerate().filter(|(_, &a)| a).map(|(i, _)| i)
    }

    /// `ξ_j(e_α)` for `α ∈ Ψ_j`, zero otherwise.
    pub fn xi_coeff(&self, j: usize, positive_idx: usize) -> Rational {
        self.psi[j]
            .iter()
            .position(|&r| r == positive_idx)
            .map_or_else(Rational::zero, |k| self.xi[j][k].clone())
    }
}

pub fn active_roots(sub: &SubgroupData) -> Result<ActiveRootTable> {
    let verdict = check_spherical(sub);
    if !verdict.spherical {
        return Err(Error::NotSpherical(format!("{:?}", verdict.violations)));
    }
    let rs = sub.algebra().root_system();
    let mut phi = Vec::new();
    let mut psi = Vec::new();
    let mut xi = Vec::new();
    let mut active = vec![false; rs.num_positive()];
    for class in sub.weight_table().iter().filter(|c| c.codim == 1) {
        // rank one: all rows are proportional, take the first nonzero one
        let row = class
            .functionals
            .iter()
            .find(|r| r.iter().any(|x| !x.is_zero()))
            .expect("codim one class has a functional");
        let mut roots = Vec::new();
        let mut coeffs = Vec::new();
        for (&r, a) in class.roots.iter().zip(row) {
            if !a.is_zero() {
                roots.push(r);
                coeffs.push(a.clone());
                active[r] = true;
            }
        }
        let lead = coeffs[0].clone();
        phi.push(class.phi.clone());
        psi.push(roots);
        xi.push(coeffs.into_iter().map(|a| a / &lead).collect());
    }

    let mut pi = vec![None; rs.num_positive()];
    for (idx, slot) in pi.iter_mut().enumerate() {
        if active[idx] {
            *slot = Some(pi_map(rs, &active, idx)?);
        }
    }
    let mut sub_pairs = Vec::new();
    for a in (0..rs.num_positive()).filter(|&i| active[i]) {
        for b in (0..rs.num_positive()).filter(|&i| active[i]) {
            if subordinate(rs, b, a) {
                sub_pairs.push((b, a));
            }
        }
    }
    Ok(ActiveRootTable { phi, psi, xi, active, pi, subordinate: sub_pairs })
}

/// Ordered decompositions `α = β + γ` over positive roots.
pub fn decompositions(rs: &RootSystem, alpha_idx: usize) -> Vec<(usize, usize)> {
    let alpha = &rs.positive_roots()[alpha_idx];
    (0..rs.num_positive())
        .filter_map(|b| {
            let rest = alpha.sub(&rs.positive_roots()[b]);
            rs.positive_index(&rest).map(|c| (b, c))
        })
        .collect()
}

/// The unique `γ ∈ Supp α` such that in every decomposition `α = α₁ + α₂`
/// a summand is active iff it does not contain `γ` in its support. Found by
/// testing every candidate.
pub fn pi_map(rs: &RootSystem, active: &[bool], alpha_idx: usize) -> Result<usize> {
    let alpha = &rs.positive_roots()[alpha_idx];
    let decomps = decompositions(rs, alpha_idx);
    let candidates: Vec<usize> = alpha
        .support()
        .into_iter()
        .filter(|&g| {
            decomps.iter().all(|&(b, c)| {
                let ok = |r: usize| active[r] == !rs.positive_roots()[r].support().contains(&g);
                ok(b) && ok(c)
            })
        })
        .collect();
    match candidates.as_slice() {
        [g] => Ok(*g),
        [] => Err(Error::NoValidCandidate(alpha.to_string())),
        _ => Err(Error::MultipleCandidates { root: alpha.to_string(), candidates }),
    }
}

/// `β` is subordinate to `α` iff `α - β ∈ Δ₊`.
pub fn subordinate(rs: &RootSystem, beta_idx: usize, alpha_idx: usize) -> bool {
    let diff = rs.positive_roots()[alpha_idx].sub(&rs.positive_roots()[beta_idx]);
    rs.is_positive_root(&diff)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub cases: usize,
    pub violations: Vec<String>,
}

impl AxiomCheck {
    fn new(name: &'static str) -> Self {
        Self { name, cases: 0, violations: Vec::new() }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.violations.push(witness());
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn is_clean(&self) -> bool {
        self.checks.iter().all(AxiomCheck::passed)
    }

    pub fn into_result(self) -> Result<Self> {
        match self.checks.iter().find_map(|c| c.violations.first().map(|v| format!("{}: {v}", c.name))) {
            Some(w) => Err(Error::AxiomViolation(w)),
            None => Ok(self),
        }
    }
}

/// Exhaustively checks the structural properties of active roots on this
/// instance.
pub fn verify_active_axioms(sub: &SubgroupData, table: &ActiveRootTable) -> AxiomReport {
    let g = sub.algebra();
    let rs = g.root_system();
    let roots = rs.positive_roots();
    let name = |i: usize| roots[i].to_string();

    let mut one_active = AxiomCheck::new("exactly-one-active");
    for a in table.active_roots() {
        for (b, c) in decompositions(rs, a) {
            if b < c {
                one_active.record(table.active[b] != table.active[c], || {
                    format!("{} = {} + {}", name(a), name(b), name(c))
                });
            }
        }
    }

    let mut pi_support = AxiomCheck::new("pi-in-support");
    for a in table.active_roots() {
        let p = table.pi[a];
        pi_support.record(p.is_some_and(|p| roots[a].support().contains(&p)), || name(a));
    }

    let mut shift = AxiomCheck::new("shift-inclusion");
    for (i, psi_i) in table.psi.iter().enumerate() {
        for (j, psi_j) in table.psi.iter().enumerate() {
            for &a in psi_i {
                for &b in psi_j {
                    if a == b {
                        continue;
                    }
                    let gamma = roots[b].sub(&roots[a]);
                    if !rs.is_positive_root(&gamma) {
                        continue;
                    }
                    let holds = psi_i.iter().all(|&x| {
                        rs.positive_index(&roots[x].add(&gamma)).is_some_and(|y| psi_j.contains(&y))
                    });
                    shift.record(holds, || format!("Psi_{} + ({gamma}) not in Psi_{}", i + 1, j + 1));
                }
            }
        }
    }

    let mut no_diff = AxiomCheck::new("no-root-difference");
    for (i, psi_i) in table.psi.iter().enumerate() {
        for (k, &a) in psi_i.iter().enumerate() {
            for &b in &psi_i[k + 1..] {
                no_diff.record(!rs.is_root(&roots[a].sub(&roots[b])), || {
                    format!("{} - {} is a root (Psi_{})", name(a), name(b), i + 1)
                });
            }
        }
    }

    let mut xi_compat = AxiomCheck::new("xi-compatibility");
    for (i, psi_i) in table.psi.iter().enumerate() {
        for (j, psi_j) in table.psi.iter().enumerate() {
            for gamma_idx in 0..rs.num_positive() {
                let gamma = &roots[gamma_idx];
                let shifted: Option<Vec<usize>> = psi_i
                    .iter()
                    .map(|&x| rs.positive_index(&roots[x].add(gamma)).filter(|y| psi_j.contains(y)))
                    .collect();
                let Some(shifted) = shifted else { continue };
                // ξ_i(e_x) = c ξ_j([e_x, e_γ]) = c N_{x,γ} ξ_j(e_{x+γ})
                let mut c: Option<Rational> = None;
                let mut ok = true;
                for (k, (&x, &y)) in psi_i.iter().zip(&shifted).enumerate() {
                    let rhs = rat(g.structure_constant(&roots[x], gamma)) * table.xi_coeff(j, y);
                    if rhs.is_zero() {
                        ok = false;
                        break;
                    }
                    let ratio = table.xi[i][k].clone() / rhs;
                    match &c {
                        None => c = Some(ratio),
                        Some(c0) if *c0 != ratio => ok = false,
                        _ => {}
                    }
                }
                xi_compat.record(ok, || format!("Psi_{} + ({gamma}) -> Psi_{}", i + 1, j + 1));
            }
        }
    }

    let mut pi_compat = AxiomCheck::new("pi-compatibility");
    let actives: Vec<usize> = table.active_roots().collect();
    for (k, &a) in actives.iter().enumerate() {
        for &b in &actives[k + 1..] {
            if sub.root_weight(a) != sub.root_weight(b) {
                continue;
            }
            let (pa, pb) = (table.pi[a].unwrap_or(usize::MAX), table.pi[b].unwrap_or(usize::MAX));
            let sa = roots[a].support();
            let sb = roots[b].support();
            let common = |p: usize| sa.contains(&p) && sb.contains(&p);
            pi_compat.record(pa == pb || (!common(pa) && !common(pb)), || {
                format!("pi({}) = a{}, pi({}) = a{}", name(a), pa + 1, name(b), pb + 1)
            });
        }
    }

    AxiomReport { checks: vec![one_active, pi_support, shift, no_diff, xi_compat, pi_compat] }
}

/// `Σ_{γ ∈ π(Ψ_j)} ω_γ` as integer coordinates.
pub(crate) fn lambda_coords(n: usize, table: &ActiveRootTable, j: usize) -> Vec<i64> {
    let mut c = vec![0; n];
    for &r in &table.psi[j] {
        if let Some(p) = table.pi[r] {
            c[p] = 1;
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::ChevalleyAlgebra;
    use crate::rootsys::{Component, Root};
    use crate::subgroup::{ConstraintGroup, NilradicalSpec, TorusRestriction};
    use std::sync::Arc;

    fn algebra(spec: &str) -> Arc<ChevalleyAlgebra> {
        let comps: Vec<Component> = spec.split_whitespace().map(|s| s.parse().unwrap()).collect();
        Arc::new(ChevalleyAlgebra::new(crate::rootsys::RootSystem::new(&comps).unwrap()))
    }

    fn sp4_borel() -> SubgroupData {
        let tau = TorusRestriction::new(3, vec![vec![1, 1, 1], vec![0, 1, 0]]).unwrap();
        let nil = NilradicalSpec::new(vec![
            ConstraintGroup::new(vec![(Root(vec![1, 0, 0]), rat(1)), (Root(vec![0, 0, 1]), rat(1))]),
            ConstraintGroup::new(vec![(Root(vec![1, 1, 0]), rat(1)), (Root(vec![0, 1, 1]), rat(-1))]),
        ]);
        SubgroupData::validate(algebra("A3"), tau, nil).unwrap()
    }

    fn tu_prime(spec: &str) -> SubgroupData {
        let g = algebra(spec);
        let n = g.root_system().rank();
        let groups = (0..n).map(|i| ConstraintGroup::remove(g.root_system().simple_root(i).clone())).collect();
        SubgroupData::validate(g, TorusRestriction::identity(n), NilradicalSpec::new(groups)).unwrap()
    }

    #[test]
    fn borel_is_spherical_with_no_active_roots() {
        let sub = SubgroupData::validate(algebra("A2"), TorusRestriction::identity(2), NilradicalSpec::full()).unwrap();
        let v = check_spherical(&sub);
        assert!(v.spherical);
        let t = active_roots(&sub).unwrap();
        assert_eq!(t.m(), 0);
        assert_eq!(t.active_roots().count(), 0);
    }

    #[test]
    fn sp4_borel_table() {
        let sub = sp4_borel();
        assert!(check_spherical(&sub).spherical);
        let t = active_roots(&sub).unwrap();
        assert_eq!(t.m(), 2);
        assert_eq!(t.phi, vec![vec![1, -1], vec![1, 1]]);
        assert_eq!(t.psi, vec![vec![0, 2], vec![3, 4]]);
        assert_eq!(t.pi[0], Some(0));
        assert_eq!(t.pi[2], Some(2));
        assert_eq!(t.pi[3], Some(1));
        assert_eq!(t.pi[4], Some(1));
        let rs = sub.algebra().root_system();
        assert!(subordinate(rs, 0, 3));
        assert!(!subordinate(rs, 0, 0));
        assert!(!subordinate(rs, 0, 2));
        assert!(t.subordinate.contains(&(0, 3)));
        assert!(t.subordinate.contains(&(2, 4)));
        let report = verify_active_axioms(&sub, &t);
        assert!(report.is_clean(), "{report:?}");
        let shift = report.checks.iter().find(|c| c.name == "shift-inclusion").unwrap();
        assert!(shift.cases > 0);
    }

    #[test]
    fn tu_prime_active_roots_are_simple() {
        for spec in ["A2", "A3", "B2", "G2"] {
            let sub = tu_prime(spec);
            let t = active_roots(&sub).unwrap();
            let n = sub.rank();
            assert_eq!(t.m(), n);
            assert_eq!(t.active_roots().collect::<Vec<_>>(), (0..n).collect::<Vec<_>>());
            for i in 0..n {
                assert_eq!(t.pi[i], Some(i));
            }
            assert!(verify_active_axioms(&sub, &t).is_clean());
        }
    }

    #[test]
    fn trivial_sl2_is_not_spherical() {
        let g = algebra("A1");
        let sub = SubgroupData::validate(
            g,
            TorusRestriction::trivial(1),
            NilradicalSpec::new(vec![ConstraintGroup::remove(Root(vec![1]))]),
        )
        .unwrap();
        let v = check_spherical(&sub);
        assert!(!v.spherical);
        assert_eq!(v.violations[0].kind, ViolationKind::DependentWeights);
        assert!(matches!(active_roots(&sub), Err(Error::NotSpherical(_))));
    }

    #[test]
    fn codim_two_rejected() {
        let g = algebra("A2");
        let nil = NilradicalSpec::new(vec![
            ConstraintGroup::remove(Root(vec![1, 0])),
            ConstraintGroup::remove(Root(vec![0, 1])),
        ]);
        let sub = SubgroupData::validate(g, TorusRestriction::new(2, vec![vec![1, 1]]).unwrap(), nil);
        // τ(α1) = τ(α2) = 1 under this torus
        let sub = sub.unwrap();
        let v = check_spherical(&sub);
        assert!(!v.spherical);
        assert!(v.violations.iter().any(|x| x.kind == ViolationKind::CodimTooLarge));
    }

    #[test]
    fn dependent_weights_rejected() {
        // S = T in A2 but both simple roots and a1+a2 removed → three c=1 weights in Z^2
        let g = algebra("A2");
        let nil = NilradicalSpec::new(vec![
            ConstraintGroup::remove(Root(vec![1, 0])),
            ConstraintGroup::remove(Root(vec![0, 1])),
            ConstraintGroup::remove(Root(vec![1, 1])),
        ]);
        let sub = SubgroupData::validate(g, TorusRestriction::identity(2), nil).unwrap();
        let v = check_spherical(&sub);
        assert_eq!(v.violations, vec![Violation {
            kind: ViolationKind::DependentWeights,
            weights: vec![vec![-1, 2], vec![1, 1], vec![2, -1]],
        }]);
    }

    #[test]
    fn pi_of_simple_root_is_itself() {
        let sub = tu_prime("A3");
        let t = active_roots(&sub).unwrap();
        let rs = sub.algebra().root_system();
        for i in 0..3 {
            assert_eq!(pi_map(rs, &t.active, i).unwrap(), i);
        }
    }
}
