//! Randomized open-orbit test: `B` has an open orbit on `G/H` iff
//! `b + Ad(g) h = g` for some `g`, checked in the adjoint representation.

use rand::Rng;
use serde::Serialize;

use crate::chevalley::ChevalleyAlgebra;
use crate::linalg::{add_entry, axpy, rat, Rational, SparseEchelon, SparseVec};
use crate::subgroup::SubgroupData;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub open: bool,
    pub trials_used: usize,
    /// Largest rank of `Ad(g) h` modulo `b` seen over all trials.
    pub best_rank: usize,
    /// `dim g - dim b`.
    pub target: usize,
}

fn ad(g: &ChevalleyAlgebra, x: &SparseVec, v: &SparseVec) -> SparseVec {
    let mut out = SparseVec::new();
    for (&i, a) in x {
        for (&j, b) in v {
            axpy(&mut out, &(a * b), &g.basis_bracket(i, j));
        }
    }
    out
}

/// `exp(ad x) v` for nilpotent `x`; the series terminates.
fn exp_ad(g: &ChevalleyAlgebra, x: &SparseVec, v: &SparseVec) -> SparseVec {
    let mut out = v.clone();
    let mut term = v.clone();
    let mut k = 1i64;
    loop {
        term = ad(g, x, &term);
        if term.is_empty() {
            return out;
        }
        let inv = rat(k).recip();
        term = term.into_iter().map(|(i, c)| (i, c * &inv)).collect();
        axpy(&mut out, &rat(1), &term);
        k += 1;
    }
}

fn random_nilpotent<R: Rng + ?Sized>(rng: &mut R, range: i64, indices: std::ops::Range<usize>) -> SparseVec {
    let mut x = SparseVec::new();
    for i in indices {
        add_entry(&mut x, i, rat(rng.gen_range(-range..=range)));
    }
    x
}

/// Tries `trials` random `g = u⁻ t u` and reports whether one of them puts
/// `Ad(g) h` transversal to `b`. A positive answer proves sphericity.
pub fn open_orbit_check<R: Rng + ?Sized>(sub: &SubgroupData, trials: usize, range: i64, rng: &mut R) -> OrbitReport {
    let g = sub.algebra();
    let rs = g.root_system();
    let np = rs.num_positive();
    let range = range.max(1);
    let h: Vec<SparseVec> = sub.s_basis().iter().chain(sub.n_basis()).map(|x| x.coeffs().clone()).collect();
    let mut best = 0;
    for trial in 0..trials {
        let upper = random_nilpotent(rng, range, 0..np);
        let lower = random_nilpotent(rng, range, np..2 * np);
        let torus: Vec<Rational> = (0..rs.rank())
            .map(|_| {
                let mut c = 0;
                while c == 0 {
                    c = rng.gen_range(-range..=range);
                }
                rat(c)
            })
            .collect();
        let mut quotient = SparseEchelon::new();
        for v in &h {
            let v = exp_ad(g, &upper, v);
            let v: SparseVec = v
                .into_iter()
                .map(|(i, c)| match g.root_of(i) {
                    Some(r) => {
                        let mut f = rat(1);
                        for (t, &k) in torus.iter().zip(r.coords()) {
                            f *= if k >= 0 { t.pow(k as i32) } else { t.recip().pow((-k) as i32) };
                        }
                        (i, c * f)
                    }
                    None => (i, c),
                })
                .collect();
            let v = exp_ad(g, &lower, &v);
            let projected: SparseVec = v.into_iter().filter(|(i, _)| (np..2 * np).contains(i)).collect();
            quotient.insert(&projected);
        }
        best = best.max(quotient.len());
        if quotient.len() == np {
            return OrbitReport { open: true, trials_used: trial + 1, best_rank: best, target: np };
        }
    }
    OrbitReport { open: false, trials_used: trials, best_rank: best, target: np }
}
