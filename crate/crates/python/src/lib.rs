//! Python bindings: `import solvsph`.

use std::sync::Arc;

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use solvsph_core::analysis::{active_roots, check_spherical, verify_active_axioms};
use solvsph_core::config::{JobConfig, Term};
use solvsph_core::oracle::{enumerate_semigroup, open_orbit_check, MatrixRealization};
use solvsph_core::presets::{preset, PRESETS};
use solvsph_core::report::{run_check, run_semigroup, run_verify};
use solvsph_core::rootsys::{Component, RootSystem, Weight};
use solvsph_core::semigroup::{generators, SemigroupGenerators};
use solvsph_core::subgroup::SubgroupData;

create_exception!(solvsph, SolvsphError, PyException);

fn err(e: solvsph_core::Error) -> PyErr {
    SolvsphError::new_err(e.to_string())
}

type Record = (Vec<i64>, Vec<i64>, usize);

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize")
}

/// Root system of a semisimple group, e.g. `RootSystem("A1 B2")`.
#[pyclass(frozen, name = "RootSystem")]
struct PyRootSystem {
    inner: RootSystem,
}

fn parse_group(spec: &str) -> Result<Vec<Component>, solvsph_core::Error> {
    spec.split(|c: char| c.is_whitespace() || c == 'x' || c == ',').filter(|t| !t.is_empty()).map(str::parse).collect()
}

#[pymethods]
impl PyRootSystem {
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        let comps = parse_group(spec).map_err(err)?;
        Ok(Self { inner: RootSystem::new(&comps).map_err(err)? })
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    fn cartan(&self) -> Vec<Vec<i64>> {
        self.inner.cartan().to_vec()
    }

    /// Positive roots over the simple roots, simple roots first.
    fn positive_roots(&self) -> Vec<Vec<i64>> {
        self.inner.positive_roots().iter().map(|r| r.coords().to_vec()).collect()
    }

    fn weyl_dimension(&self, weight: Vec<i64>) -> PyResult<String> {
        Ok(self.inner.weyl_dimension(&Weight::from_ints(&weight)).map_err(err)?.to_string())
    }

    /// `λ* = -w₀λ`.
    fn dual_weight(&self, weight: Vec<i64>) -> PyResult<Vec<i64>> {
        let w = self.inner.dual_weight(&Weight::from_ints(&weight)).map_err(err)?;
        Ok(w.to_ints().expect("integral"))
    }
}

/// A validated solvable subgroup `H = S ⋉ N`.
#[pyclass(frozen)]
struct Subgroup {
    config: JobConfig,
    sub: SubgroupData,
}

impl Subgroup {
    fn from_config(config: JobConfig) -> PyResult<Self> {
        let sub = config.build().map_err(err)?;
        Ok(Self { config, sub })
    }

    fn semigroup(&self) -> PyResult<SemigroupGenerators> {
        let t = active_roots(&self.sub).map_err(err)?;
        generators(&self.sub, &t).map_err(err)
    }
}

#[pymethods]
impl Subgroup {
    /// `group` like `"A3"`, `torus` the rows of the restriction matrix and
    /// `nilradical` a list of constraint groups of `(root, "p/q")` terms.
    #[new]
    #[pyo3(signature = (group, torus, nilradical=Vec::new()))]
    fn new(group: &str, torus: Vec<Vec<i64>>, nilradical: Vec<Vec<(Vec<i64>, String)>>) -> PyResult<Self> {
        let group = parse_group(group).map_err(err)?.iter().map(|c| c.to_string()).collect();
        let nilradical = nilradical
            .into_iter()
            .map(|g| g.into_iter().map(|(root, coeff)| Term { root, coeff }).collect())
            .collect();
        Self::from_config(JobConfig { group, torus, nilradical, options: Default::default() })
    }

    #[staticmethod]
    fn preset(name: &str) -> PyResult<Self> {
        Self::from_config(preset(name).map_err(err)?)
    }

    /// Parses the line format or JSON.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Self::from_config(JobConfig::load(text).map_err(err)?)
    }

    fn to_text(&self) -> String {
        self.config.to_text()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.sub.rank()
    }

    #[getter]
    fn d(&self) -> usize {
        self.sub.d()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.sub.dim()
    }

    /// `(φ, codim)` for every weight class.
    fn weight_table(&self) -> Vec<(Vec<i64>, usize)> {
        self.sub.weight_table().iter().map(|c| (c.phi.clone(), c.codim)).collect()
    }

    fn is_spherical(&self) -> bool {
        check_spherical(&self.sub).spherical
    }

    /// `Ψ_j` as lists of root coordinate vectors.
    fn active_roots(&self) -> PyResult<Vec<Vec<Vec<i64>>>> {
        let t = active_roots(&self.sub).map_err(err)?;
        let rs = self.sub.algebra().root_system();
        Ok(t.psi.iter().map(|p| p.iter().map(|&r| rs.positive_roots()[r].coords().to_vec()).collect()).collect())
    }

    /// `(root, π(root))` with `π` a 0-based simple root index.
    fn pi(&self) -> PyResult<Vec<(Vec<i64>, usize)>> {
        let t = active_roots(&self.sub).map_err(err)?;
        let rs = self.sub.algebra().root_system();
        Ok(t.active_roots().map(|r| (rs.positive_roots()[r].coords().to_vec(), t.pi[r].expect("active"))).collect())
    }

    fn axioms_clean(&self) -> PyResult<bool> {
        let t = active_roots(&self.sub).map_err(err)?;
        Ok(verify_active_axioms(&self.sub, &t).is_clean())
    }

    /// Free generators as `(weight, character)` pairs.
    fn generators(&self) -> PyResult<Vec<(Vec<i64>, Vec<i64>)>> {
        Ok(self.semigroup()?.generators.into_iter().map(|g| (g.weight, g.character)).collect())
    }

    fn lambda_weights(&self) -> PyResult<Vec<Vec<i64>>> {
        Ok(self.semigroup()?.lambda)
    }

    fn decompose(&self, weight: Vec<i64>, character: Vec<i64>) -> PyResult<Option<Vec<u64>>> {
        Ok(self.semigroup()?.decompose(&weight, &character))
    }

    #[pyo3(signature = (trials=200, coefficient_range=3, seed=0))]
    fn open_orbit(&self, trials: usize, coefficient_range: i64, seed: u64) -> bool {
        let mut rng = StdRng::seed_from_u64(seed);
        open_orbit_check(&self.sub, trials, coefficient_range, &mut rng).open
    }

    /// `(λ*, χ, dim)` for every nonzero semi-invariant space up to `height`.
    #[pyo3(signature = (height, dim_cap=20000))]
    fn oracle_records(&self, py: Python<'_>, height: u32, dim_cap: u64) -> PyResult<Vec<Record>> {
        let algebra = Arc::clone(self.sub.algebra());
        let sub = &self.sub;
        let records = py
            .detach(|| {
                let real = MatrixRealization::new(algebra)?;
                enumerate_semigroup(sub, &real, height, dim_cap)
            })
            .map_err(err)?;
        Ok(records.into_iter().map(|r| (r.lambda_dual, r.chi, r.dim)).collect())
    }

    fn check_json(&self) -> PyResult<String> {
        Ok(json(&run_check(&self.config).map_err(err)?))
    }

    fn semigroup_json(&self) -> PyResult<String> {
        Ok(json(&run_semigroup(&self.config).map_err(err)?))
    }

    #[pyo3(signature = (height=None, trials=None, seed=None))]
    fn verify_json(&self, py: Python<'_>, height: Option<u32>, trials: Option<usize>, seed: Option<u64>) -> PyResult<String> {
        let mut cfg = self.config.clone();
        cfg.options.height_bound = height.unwrap_or(cfg.options.height_bound);
        cfg.options.trials = trials.unwrap_or(cfg.options.trials);
        cfg.options.seed = seed.unwrap_or(cfg.options.seed);
        let r = py.detach(|| run_verify(&cfg)).map_err(err)?;
        Ok(json(&r))
    }

    fn __repr__(&self) -> String {
        format!("Subgroup({}, d={}, dim={})", self.config.group.join(" "), self.sub.d(), self.sub.dim())
    }
}

#[pyfunction]
fn preset_names() -> Vec<&'static str> {
    PRESETS.iter().map(|p| p.name).collect()
}

#[pymodule]
fn solvsph(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRootSystem>()?;
    m.add_class::<Subgroup>()?;
    m.add_function(wrap_pyfunction!(preset_names, m)?)?;
    m.add("SolvsphError", m.py().get_type::<SolvsphError>())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_separators() {
        let a = parse_group("A1xB2").unwrap();
        assert_eq!(a, parse_group("A1, B2").unwrap());
        assert_eq!(a, parse_group(" A1  B2 ").unwrap());
        assert_eq!(a.len(), 2);
        assert!(parse_group("Q7").is_err());
    }
}
