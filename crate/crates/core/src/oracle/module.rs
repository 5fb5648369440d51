//! Irreducible modules `V(λ)` as cyclic spans inside tensor products of
//! fundamental carriers.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use super::realization::{apply, Carrier, MatrixRealization, SparseMatrix};
use crate::chevalley::{AlgebraElement, ChevalleyAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{add_entry, axpy, rat, Rational, SparseEchelon, SparseVec};
use crate::rootsys::Weight;

pub const DEFAULT_DIM_CAP: u64 = 20_000;

/// Tensor product `⊗ carriers[k]`, vectors keyed by mixed-radix index.
struct Tensor<'a> {
    factors: Vec<&'a Carrier>,
    strides: Vec<usize>,
}

impl<'a> Tensor<'a> {
    fn new(factors: Vec<&'a Carrier>) -> Result<Self> {
        let mut strides = Vec::with_capacity(factors.len());
        let mut s: usize = 1;
        for c in &factors {
            strides.push(s);
            s = s.checked_mul(c.dim).ok_or(Error::DimensionCap { predicted: u64::MAX, cap: u64::MAX })?;
        }
        Ok(Self { factors, strides })
    }

    fn digit(&self, key: usize, f: usize) -> usize {
        (key / self.strides[f]) % self.factors[f].dim
    }

    fn highest(&self) -> SparseVec {
        let mut v = SparseVec::new();
        let mut acc: Vec<(usize, Rational)> = vec![(0, rat(1))];
        for (f, c) in self.factors.iter().enumerate() {
            acc = acc
                .iter()
                .flat_map(|(k, x)| c.highest.iter().map(move |(&d, y)| (k + d * self.strides[f], x * y)))
                .collect();
        }
        for (k, x) in acc {
            add_entry(&mut v, k, x);
        }
        v
    }

    /// Action of the algebra basis element `op` by the Leibniz rule.
    fn act(&self, op: usize, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&key, x) in v {
            for (f, c) in self.factors.iter().enumerate() {
                let d = self.digit(key, f);
                for (&r, y) in &c.ops[op][d] {
                    add_entry(&mut out, key - d * self.strides[f] + r * self.strides[f], x * y);
                }
            }
        }
        out
    }
}

/// `V(λ)` with the action of every Chevalley basis element in module
/// coordinates.
#[derive(Clone, Debug)]
pub struct HighestWeightModule {
    algebra: Arc<ChevalleyAlgebra>,
    lambda: Vec<i64>,
    weights: Vec<Vec<i64>>,
    /// `action[op]` is the matrix of the algebra basis element `op`.
    action: Vec<SparseMatrix>,
    highest: usize,
}

pub fn build_irrep(real: &MatrixRealization, lambda: &[i64], cap: u64) -> Result<HighestWeightModule> {
    let g = real.algebra();
    let rs = g.root_system();
    let n = rs.rank();
    if lambda.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: lambda.len() });
    }
    let lw = Weight::from_ints(lambda);
    let predicted = rs.weyl_dimension(&lw)?.to_integer().to_u64().unwrap_or(u64::MAX);
    if predicted > cap {
        return Err(Error::DimensionCap { predicted, cap });
    }

    let factors: Vec<&Carrier> = lambda
        .iter()
        .enumerate()
        .flat_map(|(i, &c)| std::iter::repeat_n(real.fundamental(i), c as usize))
        .collect();
    let tensor = Tensor::new(factors)?;
    let np = rs.num_positive();
    let alpha: Vec<Vec<i64>> = rs.cartan().to_vec();

    // breadth-first closure under the simple lowering operators, one layer per depth
    let mut spaces: BTreeMap<Vec<i64>, SparseEchelon> = BTreeMap::new();
    let mut order: Vec<Vec<i64>> = vec![lambda.to_vec()];
    let mut top = SparseEchelon::new();
    top.insert(&tensor.highest());
    spaces.insert(lambda.to_vec(), top);
    let mut layer = vec![lambda.to_vec()];
    let mut total = 1u64;
    while !layer.is_empty() {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for mu in &layer {
            let rows: Vec<SparseVec> = spaces[mu].rows().cloned().collect();
            for i in 0..n {
                let nu: Vec<i64> = mu.iter().zip(&alpha[i]).map(|(a, b)| a - b).collect();
                for r in &rows {
                    let v = tensor.act(np + i, r);
                    if v.is_empty() {
                        continue;
                    }
                    let space = spaces.entry(nu.clone()).or_insert_with(|| {
                        next.push(nu.clone());
                        SparseEchelon::new()
                    });
                    if space.insert(&v) {
                        total += 1;
                        if total > predicted {
                            return Err(Error::Internal(format!("cyclic span exceeds the predicted dimension {predicted}")));
                        }
                    }
                }
            }
        }
        next.sort_by(|a, b| b.cmp(a));
        order.extend(next.iter().cloned());
        layer = next;
    }
    if total != predicted {
        return Err(Error::Internal(format!("cyclic span has dimension {total}, expected {predicted}")));
    }

    let mut weights = Vec::new();
    let mut vectors = Vec::new();
    let mut offset: HashMap<Vec<i64>, usize> = HashMap::new();
    for mu in &order {
        offset.insert(mu.clone(), vectors.len());
        for r in spaces[mu].rows() {
            weights.push(mu.clone());
            vectors.push(r.clone());
        }
    }

    let op_shift: Vec<Vec<i64>> = (0..g.dim())
        .map(|op| match g.root_of(op) {
            Some(r) => rs.root_to_weight_ints(&r),
            None => vec![0; n],
        })
        .collect();
    let action: Vec<SparseMatrix> = (0..g.dim())
        .into_par_iter()
        .map(|op| {
            vectors
                .iter()
                .zip(&weights)
                .map(|(v, mu)| {
                    let img = tensor.act(op, v);
                    if img.is_empty() {
                        return Ok(SparseVec::new());
                    }
                    let target: Vec<i64> = mu.iter().zip(&op_shift[op]).map(|(a, b)| a + b).collect();
                    let coords = spaces
                        .get(&target)
                        .and_then(|s| s.coords(&img))
                        .ok_or_else(|| Error::Internal("cyclic span is not a submodule".into()))?;
                    let base = offset[&target];
                    Ok(coords
                        .into_iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(k, x)| (base + k, x))
                        .collect())
                })
                .collect::<Result<SparseMatrix>>()
        })
        .collect::<Result<Vec<_>>>()?;

    let module = HighestWeightModule { algebra: g.clone(), lambda: lambda.to_vec(), weights, action, highest: 0 };
    module.check_highest()?;
    Ok(module)
}

impl HighestWeightModule {
    pub fn algebra(&self) -> &Arc<ChevalleyAlgebra> {
        &self.algebra
    }

    pub fn lambda(&self) -> &[i64] {
        &self.lambda
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// Weight of each basis vector.
    pub fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    pub fn highest_vector(&self) -> SparseVec {
        let mut v = SparseVec::new();
        v.insert(self.highest, rat(1));
        v
    }

    pub fn matrix(&self, op: usize) -> &SparseMatrix {
        &self.action[op]
    }

    pub fn act_basis(&self, op: usize, v: &SparseVec) -> SparseVec {
        apply(&self.action[op], v)
    }

    pub fn act(&self, x: &AlgebraElement, v: &SparseVec) -> Result<SparseVec> {
        if x.algebra_id() != self.algebra.id() {
            return Err(Error::AlgebraMismatch);
        }
        let mut out = SparseVec::new();
        for (&op, c) in x.coeffs() {
            axpy(&mut out, c, &self.act_basis(op, v));
        }
        Ok(out)
    }

    /// `v_λ` is killed by every raising operator and has weight `λ`.
    fn check_highest(&self) -> Result<()> {
        let rs = self.algebra.root_system();
        let v = self.highest_vector();
        for op in 0..rs.num_positive() {
            if !self.act_basis(op, &v).is_empty() {
                return Err(Error::Internal(format!("highest vector not killed by {}", self.algebra.label(op))));
            }
        }
        for i in 0..rs.rank() {
            let mut expect = SparseVec::new();
            add_entry(&mut expect, self.highest, rat(self.lambda[i]));
            if self.act_basis(self.algebra.h_index(i), &v) != expect {
                return Err(Error::Internal("highest vector has the wrong weight".into()));
            }
        }
        Ok(())
    }

    /// Checks `ρ([x, y]) = ρ(x)ρ(y) - ρ(y)ρ(x)` for all basis pairs and
    /// returns the number of pairs checked.
    pub fn check_representation(&self) -> Result<usize> {
        let g = &self.algebra;
        let dim = g.dim();
        (0..dim)
            .into_par_iter()
            .map(|i| {
                for j in i + 1..dim {
                    let bracket = g.basis_bracket(i, j);
                    for col in 0..self.dim() {
                        let mut lhs = SparseVec::new();
                        for (&k, c) in &bracket {
                            axpy(&mut lhs, c, &self.action[k][col]);
                        }
                        let mut rhs = apply(&self.action[i], &self.action[j][col]);
                        axpy(&mut rhs, &rat(-1), &apply(&self.action[j], &self.action[i][col]));
                        if lhs != rhs {
                            return Err(Error::Internal(format!(
                                "representation property fails on [{}, {}]",
                                g.label(i),
                                g.label(j)
                            )));
                        }
                    }
                }
                Ok(dim - i - 1)
            })
            .sum::<Result<usize>>()
    }

    /// Checks `e_α(e_{-β} v_λ) = [e_α, e_{-β}] v_λ` for positive root indices.
    pub fn lowering_identity_holds(&self, alpha: usize, beta: usize) -> bool {
        let g = &self.algebra;
        let np = g.root_system().num_positive();
        let v = self.highest_vector();
        let lhs = self.act_basis(alpha, &self.act_basis(np + beta, &v));
        let mut rhs = SparseVec::new();
        for (&k, c) in &g.basis_bracket(alpha, np + beta) {
            axpy(&mut rhs, c, &self.act_basis(k, &v));
        }
        lhs == rhs
    }
}
