//! Random valid configurations for fuzzing.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::analysis::check_spherical;
use crate::config::{JobConfig, Options, Term};
use crate::linalg::smith_invariants;
use crate::rootsys::{Component, RootSystem};
use crate::subgroup::SubgroupData;

/// Groups of rank at most three.
pub const SMALL_GROUPS: &[&[&str]] = &[
    &["A1"],
    &["A2"],
    &["B2"],
    &["C2"],
    &["G2"],
    &["A1", "A1"],
    &["A3"],
    &["B3"],
    &["C3"],
    &["A1", "A2"],
    &["A1", "B2"],
    &["A1", "A1", "A1"],
];

fn random_torus<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<Vec<i64>> {
    let d = rng.gen_range(0..=n);
    loop {
        let m: Vec<Vec<i64>> = (0..d).map(|_| (0..n).map(|_| rng.gen_range(-1..=2)).collect()).collect();
        let inv = smith_invariants(&m);
        if inv.len() == d && inv.iter().all(|&x| x == 1) {
            return m;
        }
    }
}

/// One attempt: random torus, then for each `S`-weight class a random
/// number of constraint functionals. `None` when the result is not a
/// subalgebra.
fn attempt<R: Rng + ?Sized>(rng: &mut R, groups: &[&[&str]], max_rank: usize) -> Option<(JobConfig, SubgroupData)> {
    let candidates: Vec<&&[&str]> =
        groups.iter().filter(|g| g.iter().map(|s| s.parse::<Component>().unwrap().rank).sum::<usize>() <= max_rank).collect();
    let group: Vec<String> = candidates.choose(rng)?.iter().map(|s| s.to_string()).collect();
    let comps: Vec<Component> = group.iter().map(|s| s.parse().unwrap()).collect();
    let rs = RootSystem::new(&comps).ok()?;
    let n = rs.rank();
    let torus = random_torus(rng, n);
    let mut classes: std::collections::BTreeMap<Vec<i64>, Vec<usize>> = Default::default();
    for (i, r) in rs.positive_roots().iter().enumerate() {
        let w = rs.root_to_weight_ints(r);
        let phi: Vec<i64> = torus.iter().map(|row| row.iter().zip(&w).map(|(a, b)| a * b).sum()).collect();
        classes.entry(phi).or_default().push(i);
    }
    let mut nilradical = Vec::new();
    let mut used = std::collections::HashSet::new();
    for roots in classes.values() {
        let k = match rng.gen_range(0..10) {
            0..=5 => 0,
            6..=8 => 1,
            _ => 2,
        };
        for _ in 0..k {
            let free: Vec<usize> = roots.iter().copied().filter(|r| !used.contains(r)).collect();
            if free.is_empty() {
                break;
            }
            let size = rng.gen_range(1..=free.len().min(3));
            let chosen: Vec<usize> = free.choose_multiple(rng, size).copied().collect();
            let terms = chosen
                .iter()
                .map(|&r| {
                    used.insert(r);
                    let c = *[-2i64, -1, 1, 2].choose(rng).unwrap();
                    Term { root: rs.positive_roots()[r].coords().to_vec(), coeff: c.to_string() }
                })
                .collect();
            nilradical.push(terms);
        }
    }
    let cfg = JobConfig { group, torus, nilradical, options: Options::default() };
    let sub = cfg.build().ok()?;
    Some((cfg, sub))
}

/// A random valid configuration over a group of rank at most `max_rank`.
pub fn random_config<R: Rng + ?Sized>(rng: &mut R, max_rank: usize) -> (JobConfig, SubgroupData) {
    loop {
        if let Some(found) = attempt(rng, SMALL_GROUPS, max_rank) {
            return found;
        }
    }
}

/// A random valid configuration that passes the sphericity criterion.
pub fn random_spherical_config<R: Rng + ?Sized>(rng: &mut R, max_rank: usize) -> (JobConfig, SubgroupData) {
    loop {
        let (cfg, sub) = random_config(rng, max_rank);
        if check_spherical(&sub).spherical {
            return (cfg, sub);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn samples_are_valid_and_varied() {
        let mut rng = StdRng::seed_from_u64(3);
        let mut spherical = 0;
        let mut groups = std::collections::BTreeSet::new();
        for _ in 0..60 {
            let (cfg, sub) = random_config(&mut rng, 3);
            assert!(sub.rank() <= 3);
            groups.insert(cfg.group.join(" "));
            spherical += usize::from(check_spherical(&sub).spherical);
        }
        assert!(groups.len() > 4);
        assert!(spherical > 0 && spherical < 60);
    }
}
