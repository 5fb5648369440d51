//! Machine-readable reports for the `check`, `semigroup` and `verify` jobs.

use std::fmt;

use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::Serialize;

use crate::analysis::{active_roots, check_spherical, verify_active_axioms, AxiomReport, SphericityVerdict};
use crate::config::JobConfig;
use crate::error::{Error, Result};
use crate::linalg::fmt_rational;
use crate::oracle::{
    build_irrep, check_w_vector, compare_semigroup, enumerate_semigroup, open_orbit_check, MatrixRealization,
    MultiplicityRecord, OrbitReport, SemigroupComparison, WVectorCheck,
};
use crate::rootsys::Weight;
use crate::semigroup::{generators, GeneratorKind, SemigroupGenerators};
use crate::subgroup::SubgroupData;

pub const SCHEMA: u32 = 1;

/// 0 for success, 1 for a negative verdict, 2 for bad input.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::NotSpherical(_) => 1,
        _ => 2,
    }
}

pub fn format_character(chi: &[i64]) -> String {
    if chi.iter().all(|&x| x == 0) {
        "0".into()
    } else {
        format!("({})", chi.iter().map(i64::to_string).collect::<Vec<_>>().join(", "))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WeightClassReport {
    pub phi: Vec<i64>,
    pub roots: Vec<String>,
    pub dim_u: usize,
    pub dim_n: usize,
    pub codim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct PiEntry {
    pub root: String,
    pub pi: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ActiveReport {
    pub m: usize,
    pub phi: Vec<Vec<i64>>,
    pub psi: Vec<Vec<String>>,
    pub xi: Vec<Vec<String>>,
    pub pi: Vec<PiEntry>,
    pub subordinate: Vec<(String, String)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub schema: u32,
    pub config: JobConfig,
    pub algebra: String,
    pub dim_h: usize,
    pub weight_table: Vec<WeightClassReport>,
    pub verdict: SphericityVerdict,
    pub active: Option<ActiveReport>,
    pub axioms: Option<AxiomReport>,
}

impl CheckReport {
    pub fn exit_code(&self) -> i32 {
        let clean = self.axioms.as_ref().is_some_and(AxiomReport::is_clean);
        if self.verdict.spherical && clean {
            0
        } else {
            1
        }
    }
}

pub fn run_check(cfg: &JobConfig) -> Result<CheckReport> {
    let sub = cfg.build()?;
    let g = sub.algebra();
    let rs = g.root_system();
    let name = |i: usize| rs.positive_roots()[i].to_string();
    let weight_table = sub
        .weight_table()
        .iter()
        .map(|c| WeightClassReport {
            phi: c.phi.clone(),
            roots: c.roots.iter().map(|&r| name(r)).collect(),
            dim_u: c.dim_u(),
            dim_n: c.dim_n(),
            codim: c.codim,
        })
        .collect();
    let verdict = check_spherical(&sub);
    let (active, axioms) = if verdict.spherical {
        let t = active_roots(&sub)?;
        let axioms = verify_active_axioms(&sub, &t);
        let report = ActiveReport {
            m: t.m(),
            phi: t.phi.clone(),
            psi: t.psi.iter().map(|p| p.iter().map(|&r| name(r)).collect()).collect(),
            xi: t.xi.iter().map(|x| x.iter().map(fmt_rational).collect()).collect(),
            pi: t
                .active_roots()
                .map(|r| PiEntry { root: name(r), pi: format!("a{}", t.pi[r].map_or(0, |p| p + 1)) })
                .collect(),
            subordinate: t.subordinate.iter().map(|&(b, a)| (name(b), name(a))).collect(),
        };
        (Some(report), Some(axioms))
    } else {
        (None, None)
    };
    Ok(CheckReport {
        schema: SCHEMA,
        config: cfg.clone(),
        algebra: g.to_string(),
        dim_h: sub.dim(),
        weight_table,
        verdict,
        active,
        axioms,
    })
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}; dim h = {}", self.algebra, self.dim_h)?;
        writeln!(f, "weight table:")?;
        for c in &self.weight_table {
            writeln!(
                f,
                "  phi = {:<12} c = {}  dim u = {}  dim n = {}  roots: {}",
                format_character(&c.phi),
                c.codim,
                c.dim_u,
                c.dim_n,
                c.roots.join(", ")
            )?;
        }
        if self.verdict.spherical {
            writeln!(f, "spherical: yes")?;
        } else {
            writeln!(f, "spherical: no")?;
            for v in &self.verdict.violations {
                let ws: Vec<String> = v.weights.iter().map(|w| format_character(w)).collect();
                writeln!(f, "  {:?}: {}", v.kind, ws.join(", "))?;
            }
        }
        if let Some(a) = &self.active {
            writeln!(f, "active roots (m = {}):", a.m)?;
            for (j, (psi, xi)) in a.psi.iter().zip(&a.xi).enumerate() {
                writeln!(
                    f,
                    "  Psi_{} (phi = {}): {}  xi = [{}]",
                    j + 1,
                    format_character(&a.phi[j]),
                    psi.join(", "),
                    xi.join(", ")
                )?;
            }
            for p in &a.pi {
                writeln!(f, "  pi({}) = {}", p.root, p.pi)?;
            }
        }
        if let Some(ax) = &self.axioms {
            writeln!(f, "axioms:")?;
            for c in &ax.checks {
                let status = if c.passed() { "ok" } else { "FAILED" };
                writeln!(f, "  {:<20} {status} ({} cases)", c.name, c.cases)?;
                for v in &c.violations {
                    writeln!(f, "    {v}")?;
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorReport {
    pub kind: String,
    pub weight: Vec<i64>,
    pub character: Vec<i64>,
    pub pretty: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SemigroupReport {
    pub schema: u32,
    pub config: JobConfig,
    pub n: usize,
    pub d: usize,
    pub m: usize,
    pub rank: usize,
    pub free: bool,
    pub lambda: Vec<String>,
    pub generators: Vec<GeneratorReport>,
    /// Indices of the generators with zero character.
    pub chi_zero: Vec<usize>,
}

fn generator_reports(gens: &SemigroupGenerators) -> Vec<GeneratorReport> {
    gens.generators
        .iter()
        .map(|g| GeneratorReport {
            kind: match g.kind {
                GeneratorKind::Torus(i) => format!("torus {}", i + 1),
                GeneratorKind::Active(j) => format!("active {}", j + 1),
            },
            weight: g.weight.clone(),
            character: g.character.clone(),
            pretty: format!("({}, {})", Weight::from_ints(&g.weight), format_character(&g.character)),
        })
        .collect()
}

pub fn semigroup_of(sub: &SubgroupData) -> Result<SemigroupGenerators> {
    let t = active_roots(sub)?;
    generators(sub, &t)
}

pub fn run_semigroup(cfg: &JobConfig) -> Result<SemigroupReport> {
    let sub = cfg.build()?;
    let gens = semigroup_of(&sub)?;
    Ok(SemigroupReport {
        schema: SCHEMA,
        config: cfg.clone(),
        n: gens.n,
        d: gens.d,
        m: gens.m(),
        rank: gens.rank(),
        free: gens.is_free(),
        lambda: gens.lambda.iter().map(|l| Weight::from_ints(l).to_string()).collect(),
        generators: generator_reports(&gens),
        chi_zero: gens
            .generators
            .iter()
            .enumerate()
            .filter(|(_, g)| g.character.iter().all(|&x| x == 0))
            .map(|(i, _)| i)
            .collect(),
    })
}

impl fmt::Display for SemigroupReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n = {}, d = {}, m = {}, rank = {} ({})", self.n, self.d, self.m, self.rank, if self.free { "free" } else { "NOT free" })?;
        for (j, l) in self.lambda.iter().enumerate() {
            writeln!(f, "lambda_{} = {l}", j + 1)?;
        }
        writeln!(f, "generators:")?;
        for g in &self.generators {
            writeln!(f, "  {:<10} {}", g.kind, g.pretty)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Criterion {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub config: JobConfig,
    pub height_bound: u32,
    pub criteria: Vec<Criterion>,
    pub comparison: SemigroupComparison,
    pub records: Vec<MultiplicityRecord>,
    pub w_vectors: Vec<WVectorCheck>,
    pub orbit: OrbitReport,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.criteria.iter().all(|c| c.passed)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }
}

pub fn run_verify(cfg: &JobConfig) -> Result<VerifyReport> {
    let opts = &cfg.options;
    let sub = cfg.build()?;
    let table = active_roots(&sub)?;
    let gens = generators(&sub, &table)?;
    let real = MatrixRealization::new(sub.algebra().clone())?;
    let mut criteria = Vec::new();

    let axioms = verify_active_axioms(&sub, &table);
    criteria.push(Criterion {
        name: "active-root axioms".into(),
        passed: axioms.is_clean(),
        cases: axioms.checks.iter().map(|c| c.cases).sum(),
        detail: axioms
            .checks
            .iter()
            .filter(|c| !c.passed())
            .map(|c| format!("{}: {}", c.name, c.violations.join("; ")))
            .collect::<Vec<_>>()
            .join(" | "),
    });

    criteria.push(Criterion {
        name: "generators free".into(),
        passed: gens.is_free() && gens.len() == sub.rank() + table.m(),
        cases: gens.len(),
        detail: format!("rank {} of {}", gens.rank(), gens.len()),
    });

    let records = enumerate_semigroup(&sub, &real, opts.height_bound, opts.dim_cap)?;
    let comparison = compare_semigroup(&records, &gens, opts.height_bound);
    criteria.push(Criterion {
        name: "semigroup equals oracle".into(),
        passed: comparison.matches(),
        cases: comparison.oracle_count,
        detail: format!("{} extra, {} missing", comparison.extra.len(), comparison.missing.len()),
    });
    criteria.push(Criterion {
        name: "multiplicity free".into(),
        passed: comparison.multiplicity_free(),
        cases: records.len(),
        detail: format!("max multiplicity {}", comparison.max_multiplicity),
    });

    let w_vectors = (0..table.m())
        .map(|j| check_w_vector(&real, &sub, &table, j, opts.dim_cap))
        .collect::<Result<Vec<_>>>()?;
    criteria.push(Criterion {
        name: "w vectors".into(),
        passed: w_vectors.iter().all(WVectorCheck::passed),
        cases: w_vectors.len(),
        detail: w_vectors.iter().filter(|w| !w.passed()).map(|w| format!("j = {}", w.j + 1)).collect::<Vec<_>>().join(", "),
    });

    // representation property and the lowering identity on the fundamental modules and every V(λ_j)
    let mut lambdas: Vec<Vec<i64>> = (0..sub.rank())
        .map(|i| {
            let mut w = vec![0; sub.rank()];
            w[i] = 1;
            w
        })
        .collect();
    lambdas.extend(gens.lambda.iter().cloned());
    lambdas.sort();
    lambdas.dedup();
    let np = sub.algebra().root_system().num_positive();
    let (mut pairs, mut lowering, mut failures) = (0, 0, Vec::new());
    for l in &lambdas {
        let m = build_irrep(&real, l, opts.dim_cap)?;
        match m.check_representation() {
            Ok(k) => pairs += k,
            Err(e) => failures.push(e.to_string()),
        }
        for a in 0..np {
            for b in 0..np {
                lowering += 1;
                if !m.lowering_identity_holds(a, b) {
                    failures.push(format!("lowering identity fails in V({})", Weight::from_ints(l)));
                }
            }
        }
    }
    criteria.push(Criterion {
        name: "module checks".into(),
        passed: failures.is_empty(),
        cases: pairs + lowering,
        detail: failures.join("; "),
    });

    let mut rng = StdRng::seed_from_u64(opts.seed);
    let orbit = open_orbit_check(&sub, opts.trials, opts.coefficient_range, &mut rng);
    criteria.push(Criterion {
        name: "open orbit".into(),
        passed: orbit.open,
        cases: orbit.trials_used,
        detail: format!("best rank {} of {}", orbit.best_rank, orbit.target),
    });

    Ok(VerifyReport {
        schema: SCHEMA,
        config: cfg.clone(),
        height_bound: opts.height_bound,
        criteria,
        comparison,
        records,
        w_vectors,
        orbit,
    })
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "height bound {}", self.height_bound)?;
        for c in &self.criteria {
            let status = if c.passed { "PASS" } else { "FAIL" };
            write!(f, "{status} {:<26} ({} cases)", c.name, c.cases)?;
            if !c.detail.is_empty() {
                write!(f, "  {}", c.detail)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::preset;

    #[test]
    fn check_reports() {
        let r = run_check(&preset("sl4-sp4borel").unwrap()).unwrap();
        assert_eq!(r.exit_code(), 0);
        assert_eq!(r.active.as_ref().unwrap().m, 2);
        let r = run_check(&preset("sl2-trivial").unwrap()).unwrap();
        assert_eq!(r.exit_code(), 1);
        assert!(r.to_string().contains("spherical: no"));
    }

    #[test]
    fn semigroup_report_pretty() {
        let r = run_semigroup(&preset("sl4-sp4borel").unwrap()).unwrap();
        let pretty: Vec<&str> = r.generators.iter().map(|g| g.pretty.as_str()).collect();
        assert_eq!(pretty, ["(w3, (1, 0))", "(w2, (1, 1))", "(w1, (1, 0))", "(w1 + w3, (1, 1))", "(w2, 0)"]);
        assert_eq!(r.chi_zero, vec![4]);
        let err = run_semigroup(&preset("sl2-trivial").unwrap()).unwrap_err();
        assert_eq!(exit_code(&err), 1);
    }

    #[test]
    fn json_is_deterministic() {
        let cfg = preset("tu-prime").unwrap();
        let a = serde_json::to_string(&run_check(&cfg).unwrap()).unwrap();
        let b = serde_json::to_string(&run_check(&cfg).unwrap()).unwrap();
        assert_eq!(a, b);
        assert_eq!(JobConfig::from_json(&a).unwrap(), cfg);
    }

    #[test]
    fn verify_sl2_torus() {
        let mut cfg = preset("sl2-torus").unwrap();
        cfg.options.height_bound = 3;
        let r = run_verify(&cfg).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.comparison.oracle_count, 10);
    }
}
