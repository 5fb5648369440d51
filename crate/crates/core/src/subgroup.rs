//! Connected solvable subgroups `H = S ⋉ N` standardly embedded in `B`.
//!
//! `S` is given by the character restriction `τ : X(T) → X(S) ≅ Z^d` as an
//! integer `d × n` matrix acting on fundamental-weight coordinates. `n` is
//! given by linear constraints on root vectors: each constraint group is a
//! functional `Σ a_k x_k` on one `S`-weight component of `u`, and a vector of
//! that component lies in `n` iff every functional on the component
//! vanishes. Roots that appear in no group lie in `n` entirely.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::chevalley::{AlgebraElement, ChevalleyAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{kernel, rank, rat, smith_invariants, Rational, SparseVec};
use crate::rootsys::{Root, Weight};

/// The restriction map `τ` as a `d × n` integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusRestriction {
    n: usize,
    matrix: Vec<Vec<i64>>,
}

impl TorusRestriction {
    /// Checks the shape and that `τ` is onto `Z^d`.
    pub fn new(n: usize, matrix: Vec<Vec<i64>>) -> Result<Self> {
        for row in &matrix {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: row.len() });
            }
        }
        let inv = smith_invariants(&matrix);
        if inv.len() != matrix.len() || inv.iter().any(|&f| f != 1) {
            return Err(Error::NonSurjectiveTau(inv));
        }
        Ok(Self { n, matrix })
    }

    /// `S = T`.
    pub fn identity(n: usize) -> Self {
        let matrix = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        Self { n, matrix }
    }

    /// `S = {e}`.
    pub fn trivial(n: usize) -> Self {
        Self { n, matrix: Vec::new() }
    }

    pub fn d(&self) -> usize {
        self.matrix.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn restrict_ints(&self, coords: &[i64]) -> Vec<i64> {
        self.matrix
            .iter()
            .map(|row| row.iter().zip(coords).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn restrict(&self, lambda: &Weight) -> Result<Vec<i64>> {
        let ints = lambda
            .to_ints()
            .ok_or_else(|| Error::NonIntegralWeight(lambda.to_string()))?;
        if ints.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: ints.len() });
        }
        Ok(self.restrict_ints(&ints))
    }
}

/// One functional `Σ a_k x_{β_k}` on an `S`-weight component of `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintGroup {
    pub terms: Vec<(Root, Rational)>,
}

impl ConstraintGroup {
    pub fn new(terms: Vec<(Root, Rational)>) -> Self {
        Self { terms }
    }

    /// Single-root group: removes `g_α` from `n`.
    pub fn remove(root: Root) -> Self {
        Self { terms: vec![(root, rat(1))] }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NilradicalSpec {
    pub groups: Vec<ConstraintGroup>,
}

impl NilradicalSpec {
    /// `n = u`.
    pub fn full() -> Self {
        Self::default()
    }

    pub fn new(groups: Vec<ConstraintGroup>) -> Self {
        Self { groups }
    }
}

/// One `S`-weight component `u_φ` and its constraints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightClass {
    pub phi: Vec<i64>,
    /// Positive root indices with `τ(α) = φ`, ascending.
    pub roots: Vec<usize>,
    /// Functionals on this component, one row per constraint group,
    /// coordinates aligned with `roots`.
    pub functionals: Vec<Vec<Rational>>,
    /// `c_φ = codim n_φ in u_φ`.
    pub codim: usize,
}

impl WeightClass {
    pub fn dim_u(&self) -> usize {
        self.roots.len()
    }

    pub fn dim_n(&self) -> usize {
        self.roots.len() - self.codim
    }
}

/// Validated `(s, n)` with its weight table.
#[derive(Clone, Debug)]
pub struct SubgroupData {
    algebra: Arc<ChevalleyAlgebra>,
    tau: TorusRestriction,
    nilradical: NilradicalSpec,
    classes: Vec<WeightClass>,
    class_of: Vec<usize>,
    n_basis: Vec<AlgebraElement>,
}

impl SubgroupData {
    pub fn validate(
        algebra: Arc<ChevalleyAlgebra>,
        tau: TorusRestriction,
        nilradical: NilradicalSpec,
    ) -> Result<Self> {
        let rs = algebra.root_system();
        let n = rs.rank();
        if tau.n() != n {
            return Err(Error::DimensionMismatch { expected: n, got: tau.n() });
        }
        // re-check surjectivity in case the struct was deserialized
        let tau = TorusRestriction::new(n, tau.matrix.clone())?;

        let phi_of = |idx: usize| tau.restrict_ints(&rs.root_to_weight_ints(&rs.positive_roots()[idx]));

        let mut seen = HashSet::new();
        let mut group_idx = Vec::new();
        for g in &nilradical.groups {
            let mut idxs = Vec::new();
            for (root, a) in &g.terms {
                if root.coords().len() != n {
                    return Err(Error::DimensionMismatch { expected: n, got: root.coords().len() });
                }
                let idx = rs
                    .positive_index(root)
                    .ok_or_else(|| Error::NotPositiveRoot(root.to_string()))?;
                if a.is_zero() {
                    return Err(Error::ZeroCoefficient(root.to_string()));
                }
                if !seen.insert(idx) {
                    return Err(Error::DuplicateRoot(root.to_string()));
                }
                idxs.push(idx);
            }
            if let Some(&first) = idxs.first() {
                let phi0 = phi_of(first);
                if let Some(&other) = idxs.iter().find(|&&i| phi_of(i) != phi0) {
                    return Err(Error::MixedWeightConstraint {
                        first: rs.positive_roots()[first].to_string(),
                        second: rs.positive_roots()[other].to_string(),
                    });
                }
            }
            group_idx.push(idxs);
        }

        let mut by_phi: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
        for idx in 0..rs.num_positive() {
            by_phi.entry(phi_of(idx)).or_default().push(idx);
        }
        let mut classes: Vec<WeightClass> = by_phi
            .into_iter()
            .map(|(phi, roots)| WeightClass { phi, roots, functionals: Vec::new(), codim: 0 })
            .collect();
        let mut class_of = vec![0; rs.num_positive()];
        for (c, class) in classes.iter().enumerate() {
            for &r in &class.roots {
                class_of[r] = c;
            }
        }
        for (g, idxs) in nilradical.groups.iter().zip(&group_idx) {
            let Some(&first) = idxs.first() else { continue };
            let class = &mut classes[class_of[first]];
            let mut row = vec![Rational::zero(); class.roots.len()];
            for ((_, a), idx) in g.terms.iter().zip(idxs) {
                let pos = class.roots.iter().position(|r| r == idx).unwrap();
                row[pos] = a.clone();
            }
            class.functionals.push(row);
        }
        for class in classes.iter_mut() {
            class.codim = rank(&class.functionals);
        }

        let mut n_basis = Vec::new();
        for class in &classes {
            for v in kernel(&class.functionals, class.roots.len()) {
                let coeffs: SparseVec = class
                    .roots
                    .iter()
                    .zip(v)
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(&r, x)| (r, x))
                    .collect();
                n_basis.push(algebra.element(coeffs));
            }
        }

        let sub = SubgroupData { algebra, tau, nilradical, classes, class_of, n_basis };
        for (i, x) in sub.n_basis.iter().enumerate() {
            for y in &sub.n_basis[i + 1..] {
                let z = sub.algebra.bracket(x, y)?;
                if !sub.contains_in_n(&z) {
                    return Err(Error::NotSubalgebra {
                        left: sub.algebra.format_element(x),
                        right: sub.algebra.format_element(y),
                    });
                }
            }
        }
        Ok(sub)
    }

    pub fn algebra(&self) -> &Arc<ChevalleyAlgebra> {
        &self.algebra
    }

    pub fn tau(&self) -> &TorusRestriction {
        &self.tau
    }

    pub fn nilradical(&self) -> &NilradicalSpec {
        &self.nilradical
    }

    pub fn rank(&self) -> usize {
        self.algebra.root_system().rank()
    }

    pub fn d(&self) -> usize {
        self.tau.d()
    }

    /// Weight classes in lexicographic order of `φ`.
    pub fn weight_table(&self) -> &[WeightClass] {
        &self.classes
    }

    pub fn class_of_root(&self, positive_idx: usize) -> &WeightClass {
        &self.classes[self.class_of[positive_idx]]
    }

    /// `τ(α)` for a positive root index.
    pub fn root_weight(&self, positive_idx: usize) -> &[i64] {
        &self.class_of_root(positive_idx).phi
    }

    /// `τ` of an arbitrary root-lattice vector.
    pub fn restrict_root(&self, r: &Root) -> Vec<i64> {
        let rs = self.algebra.root_system();
        self.tau.restrict_ints(&rs.root_to_weight_ints(r))
    }

    /// Basis of `n`: full root vectors plus kernels of the constraint functionals.
    pub fn n_basis(&self) -> &[AlgebraElement] {
        &self.n_basis
    }

    /// Basis of `s`: the cocharacters `Σ_i M_{k,i} h_i`.
    pub fn s_basis(&self) -> Vec<AlgebraElement> {
        self.tau
            .matrix()
            .iter()
            .map(|row| {
                let coeffs: SparseVec = row
                    .iter()
                    .enumerate()
                    .filter(|(_, &m)| m != 0)
                    .map(|(i, &m)| (self.algebra.h_index(i), rat(m)))
                    .collect();
                self.algebra.element(coeffs)
            })
            .collect()
    }

    /// `dim h = d + dim n`.
    pub fn dim(&self) -> usize {
        self.d() + self.n_basis.len()
    }

    /// Whether `g_α ⊆ n` for a positive root index.
    pub fn root_in_n(&self, positive_idx: usize) -> bool {
        let class = self.class_of_root(positive_idx);
        let pos = class.roots.iter().position(|&r| r == positive_idx).unwrap();
        class.functionals.iter().all(|row| row[pos].is_zero())
    }

    /// Membership of an algebra element in `n`.
    pub fn contains_in_n(&self, x: &AlgebraElement) -> bool {
        let np = self.algebra.root_system().num_positive();
        if x.coeffs().keys().any(|&k| k >= np) {
            return false;
        }
        self.classes.iter().all(|class| {
            class.functionals.iter().all(|row| {
                let s: Rational = row
                    .iter()
                    .zip(&class.roots)
                    .map(|(a, &r)| a * x.coeff(r))
                    .sum();
                s.is_zero()
            })
        })
    }
}

impl fmt::Display for SubgroupData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H = S x N with dim S = {}, dim N = {}", self.d(), self.n_basis.len())
    }
}
