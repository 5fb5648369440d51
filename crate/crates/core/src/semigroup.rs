//! Free generators of the extended weight semigroup and decomposition of
//! pairs `(λ, χ)` over them.

use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::analysis::{active_roots, lambda_coords, ActiveRootTable};
use crate::error::Result;
use crate::linalg::{rank, rat, solve, Rational};
use crate::rootsys::Weight;
use crate::subgroup::SubgroupData;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GeneratorKind {
    /// `(ω_i*, τ(ω_i))`, 0-based `i`.
    Torus(usize),
    /// `(λ_j*, τ(λ_j) - φ_j)`, 0-based `j`.
    Active(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub kind: GeneratorKind,
    /// Fundamental-weight coordinates of the first component.
    pub weight: Vec<i64>,
    pub character: Vec<i64>,
}

impl Generator {
    fn vector(&self) -> Vec<Rational> {
        self.weight.iter().chain(&self.character).map(|&x| rat(x)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupGenerators {
    pub n: usize,
    pub d: usize,
    pub generators: Vec<Generator>,
    /// `λ_1, …, λ_m` in fundamental-weight coordinates.
    pub lambda: Vec<Vec<i64>>,
}

pub fn lambda_weights(n: usize, table: &ActiveRootTable) -> Vec<Vec<i64>> {
    (0..table.m()).map(|j| lambda_coords(n, table, j)).collect()
}

fn dual_ints(sub: &SubgroupData, coords: &[i64]) -> Result<Vec<i64>> {
    let w = sub.algebra().root_system().dual_weight(&Weight::from_ints(coords))?;
    Ok(w.to_ints().expect("dual of an integral weight is integral"))
}

pub fn generators(sub: &SubgroupData, table: &ActiveRootTable) -> Result<SemigroupGenerators> {
    let n = sub.rank();
    let d = sub.d();
    let mut gens = Vec::with_capacity(n + table.m());
    for i in 0..n {
        let mut w = vec![0; n];
        w[i] = 1;
        gens.push(Generator {
            kind: GeneratorKind::Torus(i),
            weight: dual_ints(sub, &w)?,
            character: sub.tau().restrict_ints(&w),
        });
    }
    let lambda = lambda_weights(n, table);
    for (j, l) in lambda.iter().enumerate() {
        let chi: Vec<i64> = sub.tau().restrict_ints(l).iter().zip(&table.phi[j]).map(|(a, b)| a - b).collect();
        gens.push(Generator { kind: GeneratorKind::Active(j), weight: dual_ints(sub, l)?, character: chi });
    }
    Ok(SemigroupGenerators { n, d, generators: gens, lambda })
}

/// Sphericity check, active roots and generators in one step.
pub fn compute(sub: &SubgroupData) -> Result<(ActiveRootTable, SemigroupGenerators)> {
    let table = active_roots(sub)?;
    let gens = generators(sub, &table)?;
    Ok((table, gens))
}

impl SemigroupGenerators {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn m(&self) -> usize {
        self.generators.len() - self.n
    }

    /// Rank of the generators as vectors in `Q^n ⊕ Q^d`.
    pub fn rank(&self) -> usize {
        rank(&self.generators.iter().map(Generator::vector).collect::<Vec<_>>())
    }

    pub fn is_free(&self) -> bool {
        self.rank() == self.len()
    }

    /// Generators with zero character.
    pub fn chi_zero(&self) -> impl Iterator<Item = &Generator> {
        self.generators.iter().filter(|g| g.character.iter().all(|&x| x == 0))
    }

    /// The pair `Σ c_g g`.
    pub fn combine(&self, coeffs: &[u64]) -> (Vec<i64>, Vec<i64>) {
        let mut w = vec![0i64; self.n];
        let mut c = vec![0i64; self.d];
        for (g, &k) in self.generators.iter().zip(coeffs) {
            let k = k as i64;
            w.iter_mut().zip(&g.weight).for_each(|(a, b)| *a += k * b);
            c.iter_mut().zip(&g.character).for_each(|(a, b)| *a += k * b);
        }
        (w, c)
    }

    /// The unique nonnegative integer combination of generators equal to
    /// `(weight, character)`, if one exists.
    pub fn decompose(&self, weight: &[i64], character: &[i64]) -> Option<Vec<u64>> {
        if weight.len() != self.n || character.len() != self.d {
            return None;
        }
        if self.generators.is_empty() {
            return (weight.iter().chain(character).all(|&x| x == 0)).then(Vec::new);
        }
        let k = self.generators.len();
        let vecs: Vec<Vec<Rational>> = self.generators.iter().map(Generator::vector).collect();
        let rows = self.n + self.d;
        let a: Vec<Vec<Rational>> = (0..rows).map(|r| (0..k).map(|g| vecs[g][r].clone()).collect()).collect();
        let b: Vec<Rational> = weight.iter().chain(character).map(|&x| rat(x)).collect();
        let x = solve(&a, &b)?;
        x.iter()
            .map(|q| {
                (q.denom().is_one() && !q.is_negative()).then(|| q.numer().to_u64()).flatten()
            })
            .collect()
    }

    /// All combinations whose first component has level at most `level`,
    /// as `(coefficients, weight, character)`, sorted by weight then character.
    pub fn enumerate(&self, level: u32) -> Vec<(Vec<u64>, Vec<i64>, Vec<i64>)> {
        let levels: Vec<i64> = self.generators.iter().map(|g| g.weight.iter().sum()).collect();
        let mut out = Vec::new();
        let mut coeffs = vec![0u64; self.generators.len()];
        self.enumerate_rec(0, level as i64, &levels, &mut coeffs, &mut out);
        out.sort_by(|a, b| (&a.1, &a.2).cmp(&(&b.1, &b.2)));
        out
    }

    fn enumerate_rec(
        &self,
        pos: usize,
        budget: i64,
        levels: &[i64],
        coeffs: &mut Vec<u64>,
        out: &mut Vec<(Vec<u64>, Vec<i64>, Vec<i64>)>,
    ) {
        if pos == coeffs.len() {
            let (w, c) = self.combine(coeffs);
            out.push((coeffs.clone(), w, c));
            return;
        }
        // zero-level generators only occur for n = 0, so cap them at one
        let max = if levels[pos] == 0 { 1 } else { budget / levels[pos] };
        for k in 0..=max {
            coeffs[pos] = k as u64;
            self.enumerate_rec(pos + 1, budget - k * levels[pos], levels, coeffs, out);
        }
        coeffs[pos] = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::ChevalleyAlgebra;
    use crate::rootsys::{Component, Root, RootSystem};
    use crate::subgroup::{ConstraintGroup, NilradicalSpec, TorusRestriction};
    use std::sync::Arc;

    fn algebra(spec: &str) -> Arc<ChevalleyAlgebra> {
        let comps: Vec<Component> = spec.split_whitespace().map(|s| s.parse().unwrap()).collect();
        Arc::new(ChevalleyAlgebra::new(RootSystem::new(&comps).unwrap()))
    }

    fn sp4_borel() -> SubgroupData {
        let tau = TorusRestriction::new(3, vec![vec![1, 1, 1], vec![0, 1, 0]]).unwrap();
        let nil = NilradicalSpec::new(vec![
            ConstraintGroup::new(vec![(Root(vec![1, 0, 0]), rat(1)), (Root(vec![0, 0, 1]), rat(1))]),
            ConstraintGroup::new(vec![(Root(vec![1, 1, 0]), rat(1)), (Root(vec![0, 1, 1]), rat(-1))]),
        ]);
        SubgroupData::validate(algebra("A3"), tau, nil).unwrap()
    }

    fn g(kind: GeneratorKind, weight: &[i64], character: &[i64]) -> Generator {
        Generator { kind, weight: weight.to_vec(), character: character.to_vec() }
    }

    #[test]
    fn sp4_borel_generators() {
        let (_, gens) = compute(&sp4_borel()).unwrap();
        assert_eq!(gens.lambda, vec![vec![1, 0, 1], vec![0, 1, 0]]);
        let chi1 = [1, 0];
        let chi2 = [1, 1];
        assert_eq!(gens.generators, vec![
            g(GeneratorKind::Torus(0), &[0, 0, 1], &chi1),
            g(GeneratorKind::Torus(1), &[0, 1, 0], &chi2),
            g(GeneratorKind::Torus(2), &[1, 0, 0], &chi1),
            g(GeneratorKind::Active(0), &[1, 0, 1], &chi2),
            g(GeneratorKind::Active(1), &[0, 1, 0], &[0, 0]),
        ]);
        assert!(gens.is_free());
        assert_eq!(gens.decompose(&[0, 1, 0], &[0, 0]), Some(vec![0, 0, 0, 0, 1]));
        assert_eq!(gens.chi_zero().count(), 1);
    }

    #[test]
    fn borel_generators_are_fundamental() {
        let sub = SubgroupData::validate(algebra("B2"), TorusRestriction::identity(2), NilradicalSpec::full()).unwrap();
        let (t, gens) = compute(&sub).unwrap();
        assert_eq!(t.m(), 0);
        assert_eq!(gens.generators, vec![
            g(GeneratorKind::Torus(0), &[1, 0], &[1, 0]),
            g(GeneratorKind::Torus(1), &[0, 1], &[0, 1]),
        ]);
    }

    #[test]
    fn sl2_torus() {
        let sub = SubgroupData::validate(
            algebra("A1"),
            TorusRestriction::identity(1),
            NilradicalSpec::new(vec![ConstraintGroup::remove(Root(vec![1]))]),
        )
        .unwrap();
        let (_, gens) = compute(&sub).unwrap();
        assert_eq!(gens.generators, vec![
            g(GeneratorKind::Torus(0), &[1], &[1]),
            g(GeneratorKind::Active(0), &[1], &[-1]),
        ]);
        assert_eq!(gens.decompose(&[2], &[0]), Some(vec![1, 1]));
        assert_eq!(gens.decompose(&[1], &[0]), None);
        assert_eq!(gens.decompose(&[0], &[0]), Some(vec![0, 0]));
        assert_eq!(gens.decompose(&[1], &[3]), None);
    }

    #[test]
    fn enumerate_roundtrip() {
        let (_, gens) = compute(&sp4_borel()).unwrap();
        let all = gens.enumerate(3);
        assert!(all.iter().any(|(c, _, _)| c.iter().all(|&x| x == 0)));
        for (c, w, ch) in &all {
            assert!(w.iter().sum::<i64>() <= 3);
            assert_eq!(gens.decompose(w, ch).as_ref(), Some(c));
        }
    }
}
