//! Semi-invariant multiplicities `dim V(λ)_χ^(H)`, the explicit vectors
//! `w_j`, and brute-force enumeration of the extended weight semigroup.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::module::{build_irrep, HighestWeightModule};
use super::realization::MatrixRealization;
use crate::analysis::ActiveRootTable;
use crate::error::{Error, Result};
use crate::linalg::{add_entry, axpy, sparse_kernel, Rational, SparseVec};
use crate::rootsys::Weight;
use crate::semigroup::SemigroupGenerators;
use crate::subgroup::SubgroupData;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct MultiplicityRecord {
    pub lambda: Vec<i64>,
    pub lambda_dual: Vec<i64>,
    pub chi: Vec<i64>,
    pub dim: usize,
}

impl MultiplicityRecord {
    /// The semigroup element `(λ*, χ)` this record witnesses.
    pub fn pair(&self) -> (Vec<i64>, Vec<i64>) {
        (self.lambda_dual.clone(), self.chi.clone())
    }
}

fn same_algebra(module: &HighestWeightModule, sub: &SubgroupData) -> Result<()> {
    if module.algebra().id() != sub.algebra().id() {
        return Err(Error::AlgebraMismatch);
    }
    Ok(())
}

/// Basis of the `H`-semi-invariants of `S`-weight `χ`.
pub fn semi_invariants(module: &HighestWeightModule, sub: &SubgroupData, chi: &[i64]) -> Result<Vec<SparseVec>> {
    same_algebra(module, sub)?;
    let cols: Vec<usize> =
        (0..module.dim()).filter(|&k| sub.tau().restrict_ints(&module.weights()[k]) == chi).collect();
    Ok(kernel_of_n(module, sub, &cols))
}

/// Kernel of all of `n` on the span of the given basis vectors.
fn kernel_of_n(module: &HighestWeightModule, sub: &SubgroupData, cols: &[usize]) -> Vec<SparseVec> {
    let dim = module.dim();
    let images: Vec<SparseVec> = cols
        .iter()
        .map(|&c| {
            let mut stacked = SparseVec::new();
            for (x_idx, x) in sub.n_basis().iter().enumerate() {
                let mut img = SparseVec::new();
                for (&op, a) in x.coeffs() {
                    axpy(&mut img, a, &module.matrix(op)[c]);
                }
                for (k, v) in img {
                    add_entry(&mut stacked, x_idx * dim + k, v);
                }
            }
            stacked
        })
        .collect();
    sparse_kernel(&images)
        .into_iter()
        .map(|v| v.into_iter().map(|(k, x)| (cols[k], x)).collect())
        .collect()
}

pub fn semi_invariant_dim(module: &HighestWeightModule, sub: &SubgroupData, chi: &[i64]) -> Result<MultiplicityRecord> {
    let dim = semi_invariants(module, sub, chi)?.len();
    record(module, sub, chi.to_vec(), dim)
}

fn record(module: &HighestWeightModule, sub: &SubgroupData, chi: Vec<i64>, dim: usize) -> Result<MultiplicityRecord> {
    let rs = sub.algebra().root_system();
    let dual = rs.dual_weight(&Weight::from_ints(module.lambda()))?;
    Ok(MultiplicityRecord {
        lambda: module.lambda().to_vec(),
        lambda_dual: dual.to_ints().expect("integral"),
        chi,
        dim,
    })
}

/// All `χ` with a nonzero semi-invariant in this module.
pub fn module_records(module: &HighestWeightModule, sub: &SubgroupData) -> Result<Vec<MultiplicityRecord>> {
    same_algebra(module, sub)?;
    let mut by_chi: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
    for (k, mu) in module.weights().iter().enumerate() {
        by_chi.entry(sub.tau().restrict_ints(mu)).or_default().push(k);
    }
    let mut out = Vec::new();
    for (chi, cols) in by_chi {
        let dim = kernel_of_n(module, sub, &cols).len();
        if dim > 0 {
            out.push(record(module, sub, chi, dim)?);
        }
    }
    Ok(out)
}

/// Every record with `dim ≥ 1` over dominant `λ` of level at most `bound`,
/// ordered by `(λ*, χ)`.
pub fn enumerate_semigroup(
    sub: &SubgroupData,
    real: &MatrixRealization,
    bound: u32,
    cap: u64,
) -> Result<Vec<MultiplicityRecord>> {
    if real.algebra().id() != sub.algebra().id() {
        return Err(Error::AlgebraMismatch);
    }
    let lambdas = sub.algebra().root_system().dominant_weights_up_to(bound);
    let per: Vec<Vec<MultiplicityRecord>> = lambdas
        .par_iter()
        .map(|l| module_records(&build_irrep(real, l, cap)?, sub))
        .collect::<Result<_>>()?;
    let mut out: Vec<MultiplicityRecord> = per.into_iter().flatten().collect();
    out.sort_by(|a, b| (&a.lambda_dual, &a.chi).cmp(&(&b.lambda_dual, &b.chi)));
    Ok(out)
}

/// Pairs generated by `gens` whose first component has level at most `bound`.
pub fn generated_pairs(gens: &SemigroupGenerators, bound: u32) -> BTreeSet<(Vec<i64>, Vec<i64>)> {
    gens.enumerate(bound).into_iter().map(|(_, w, c)| (w, c)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemigroupComparison {
    pub oracle_count: usize,
    pub generated_count: usize,
    /// Found by the oracle but not generated.
    pub extra: Vec<(Vec<i64>, Vec<i64>)>,
    /// Generated but not found by the oracle.
    pub missing: Vec<(Vec<i64>, Vec<i64>)>,
    pub max_multiplicity: usize,
}

impl SemigroupComparison {
    pub fn matches(&self) -> bool {
        self.extra.is_empty() && self.missing.is_empty()
    }

    pub fn multiplicity_free(&self) -> bool {
        self.max_multiplicity <= 1
    }
}

pub fn compare_semigroup(records: &[MultiplicityRecord], gens: &SemigroupGenerators, bound: u32) -> SemigroupComparison {
    let oracle: BTreeSet<(Vec<i64>, Vec<i64>)> = records.iter().map(MultiplicityRecord::pair).collect();
    let generated = generated_pairs(gens, bound);
    SemigroupComparison {
        oracle_count: oracle.len(),
        generated_count: generated.len(),
        extra: oracle.difference(&generated).cloned().collect(),
        missing: generated.difference(&oracle).cloned().collect(),
        max_multiplicity: records.iter().map(|r| r.dim).max().unwrap_or(0),
    }
}

/// `w_j = Σ_k a_k / λ_j(h_{β_k}) e_{-β_k} v_{λ_j}` over `β_k ∈ Ψ_j`.
pub fn w_vector(module: &HighestWeightModule, sub: &SubgroupData, table: &ActiveRootTable, j: usize) -> Result<SparseVec> {
    same_algebra(module, sub)?;
    if j >= table.m() {
        return Err(Error::IndexOutOfRange { index: j, len: table.m() });
    }
    let g = sub.algebra();
    let rs = g.root_system();
    let n = rs.rank();
    let lambda = crate::analysis::lambda_coords(n, table, j);
    if module.lambda() != lambda.as_slice() {
        return Err(Error::ModuleMismatch {
            expected: Weight::from_ints(&lambda).to_string(),
            got: Weight::from_ints(module.lambda()).to_string(),
        });
    }
    let lw = Weight::from_ints(&lambda);
    let v = module.highest_vector();
    let mut w = SparseVec::new();
    for (&beta, a) in table.psi[j].iter().zip(&table.xi[j]) {
        let p = rs.pairing(&lw, &rs.positive_roots()[beta])?;
        if p <= Rational::zero() {
            return Err(Error::Internal(format!(
                "pairing of {lw} with {} is not positive",
                rs.positive_roots()[beta]
            )));
        }
        let img = module.act_basis(rs.num_positive() + beta, &v);
        axpy(&mut w, &(a / p), &img);
    }
    Ok(w)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WVectorCheck {
    pub j: usize,
    pub lambda: Vec<i64>,
    pub chi: Vec<i64>,
    pub nonzero: bool,
    pub annihilated: bool,
    pub weight_matches: bool,
}

impl WVectorCheck {
    pub fn passed(&self) -> bool {
        self.nonzero && self.annihilated && self.weight_matches
    }
}

/// Builds `V(λ_j)`, forms `w_j` and checks it is a nonzero `n`-invariant of
/// `S`-weight `τ(λ_j) - φ_j`.
pub fn check_w_vector(
    real: &MatrixRealization,
    sub: &SubgroupData,
    table: &ActiveRootTable,
    j: usize,
    cap: u64,
) -> Result<WVectorCheck> {
    if j >= table.m() {
        return Err(Error::IndexOutOfRange { index: j, len: table.m() });
    }
    let lambda = crate::analysis::lambda_coords(sub.rank(), table, j);
    let module = build_irrep(real, &lambda, cap)?;
    let w = w_vector(&module, sub, table, j)?;
    let chi: Vec<i64> =
        sub.tau().restrict_ints(&lambda).iter().zip(&table.phi[j]).map(|(a, b)| a - b).collect();
    let mut annihilated = true;
    for x in sub.n_basis() {
        if !module.act(x, &w)?.is_empty() {
            annihilated = false;
        }
    }
    let weight_matches = w.keys().all(|&k| sub.tau().restrict_ints(&module.weights()[k]) == chi);
    Ok(WVectorCheck { j, lambda, chi, nonzero: !w.is_empty(), annihilated, weight_matches })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::ChevalleyAlgebra;
    use crate::linalg::rat;
    use crate::oracle::module::DEFAULT_DIM_CAP;
    use crate::rootsys::{Component, Root, RootSystem};
    use crate::semigroup::compute;
    use crate::subgroup::{ConstraintGroup, NilradicalSpec, TorusRestriction};
    use std::sync::Arc;

    fn algebra(spec: &str) -> Arc<ChevalleyAlgebra> {
        let c: Component = spec.parse().unwrap();
        Arc::new(ChevalleyAlgebra::new(RootSystem::new(&[c]).unwrap()))
    }

    fn sl2_torus() -> SubgroupData {
        SubgroupData::validate(
            algebra("A1"),
            TorusRestriction::identity(1),
            NilradicalSpec::new(vec![ConstraintGroup::remove(Root(vec![1]))]),
        )
        .unwrap()
    }

    #[test]
    fn sl2_weight_spaces() {
        let sub = sl2_torus();
        let real = MatrixRealization::new(sub.algebra().clone()).unwrap();
        for k in 0..4i64 {
            let m = build_irrep(&real, &[k], DEFAULT_DIM_CAP).unwrap();
            for chi in -k - 1..=k + 1 {
                let d = semi_invariant_dim(&m, &sub, &[chi]).unwrap().dim;
                let expect = usize::from(chi.abs() <= k && (k - chi) % 2 == 0);
                assert_eq!(d, expect, "k={k} chi={chi}");
            }
        }
    }

    #[test]
    fn sl2_enumeration_matches_generators() {
        let sub = sl2_torus();
        let real = MatrixRealization::new(sub.algebra().clone()).unwrap();
        let recs = enumerate_semigroup(&sub, &real, 3, DEFAULT_DIM_CAP).unwrap();
        let (table, gens) = compute(&sub).unwrap();
        let cmp = compare_semigroup(&recs, &gens, 3);
        assert!(cmp.matches(), "{cmp:?}");
        assert_eq!(cmp.oracle_count, 1 + 2 + 3 + 4);
        let w = check_w_vector(&real, &sub, &table, 0, DEFAULT_DIM_CAP).unwrap();
        assert!(w.passed());
        assert_eq!(w.chi, vec![-1]);
    }

    #[test]
    fn borel_records_only_highest_vectors() {
        let sub = SubgroupData::validate(algebra("A1"), TorusRestriction::identity(1), NilradicalSpec::full()).unwrap();
        let real = MatrixRealization::new(sub.algebra().clone()).unwrap();
        let recs = enumerate_semigroup(&sub, &real, 2, DEFAULT_DIM_CAP).unwrap();
        let pairs: Vec<_> = recs.iter().map(|r| r.pair()).collect();
        assert_eq!(pairs, vec![(vec![0], vec![0]), (vec![1], vec![1]), (vec![2], vec![2])]);
    }

    #[test]
    fn algebra_mismatch() {
        let sub = sl2_torus();
        let other = MatrixRealization::new(algebra("A1")).unwrap();
        let m = build_irrep(&other, &[1], DEFAULT_DIM_CAP).unwrap();
        assert_eq!(semi_invariant_dim(&m, &sub, &[1]), Err(Error::AlgebraMismatch));
    }

    #[test]
    fn sp4_borel_w_vectors() {
        let tau = TorusRestriction::new(3, vec![vec![1, 1, 1], vec![0, 1, 0]]).unwrap();
        let nil = NilradicalSpec::new(vec![
            ConstraintGroup::new(vec![(Root(vec![1, 0, 0]), rat(1)), (Root(vec![0, 0, 1]), rat(1))]),
            ConstraintGroup::new(vec![(Root(vec![1, 1, 0]), rat(1)), (Root(vec![0, 1, 1]), rat(-1))]),
        ]);
        let sub = SubgroupData::validate(algebra("A3"), tau, nil).unwrap();
        let real = MatrixRealization::new(sub.algebra().clone()).unwrap();
        let (table, _) = compute(&sub).unwrap();
        let w1 = check_w_vector(&real, &sub, &table, 0, DEFAULT_DIM_CAP).unwrap();
        assert!(w1.passed(), "{w1:?}");
        assert_eq!(w1.chi, vec![1, 1]);
        let w2 = check_w_vector(&real, &sub, &table, 1, DEFAULT_DIM_CAP).unwrap();
        assert!(w2.passed(), "{w2:?}");
        assert_eq!(w2.chi, vec![0, 0]);
        assert!(matches!(
            check_w_vector(&real, &sub, &table, 2, DEFAULT_DIM_CAP),
            Err(Error::IndexOutOfRange { index: 2, len: 2 })
        ));
        let m = build_irrep(&real, &[0, 1, 0], DEFAULT_DIM_CAP).unwrap();
        assert_eq!(semi_invariant_dim(&m, &sub, &[0, 0]).unwrap().dim, 1);
    }
}
