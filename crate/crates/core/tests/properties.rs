use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use solvsph_core::analysis::{active_roots, check_spherical, verify_active_axioms};
use solvsph_core::chevalley::ChevalleyAlgebra;
use solvsph_core::config::JobConfig;
use solvsph_core::linalg::{fmt_rational, parse_rational, rat};
use solvsph_core::rootsys::{Component, Root, RootSystem, Weight};
use solvsph_core::sample::{random_config, random_spherical_config};
use solvsph_core::semigroup::compute;

const GROUPS: &[&str] = &["A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3", "D4", "G2", "F4"];

fn root_system(spec: &str) -> RootSystem {
    let c: Component = spec.parse().unwrap();
    RootSystem::new(&[c]).unwrap()
}

fn group() -> impl Strategy<Value = &'static str> {
    prop::sample::select(GROUPS)
}

fn dominant(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(0i64..4, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pairing_is_linear(g in group(), a in prop::collection::vec(-3i64..4, 4), b in prop::collection::vec(-3i64..4, 4), k in 0usize..24) {
        let rs = root_system(g);
        let n = rs.rank();
        let (a, b) = (Weight::from_ints(&a[..n]), Weight::from_ints(&b[..n]));
        let mu = &rs.positive_roots()[k % rs.num_positive()];
        let lhs = rs.pairing(&a.add(&b), mu).unwrap();
        prop_assert_eq!(lhs, rs.pairing(&a, mu).unwrap() + rs.pairing(&b, mu).unwrap());
    }

    #[test]
    fn dual_weight_is_an_involution(g in group(), w in dominant(4)) {
        let rs = root_system(g);
        let lambda = Weight::from_ints(&w[..rs.rank()]);
        let dual = rs.dual_weight(&lambda).unwrap();
        prop_assert!(dual.is_dominant());
        prop_assert_eq!(rs.dual_weight(&dual).unwrap(), lambda.clone());
        prop_assert_eq!(rs.weyl_dimension(&dual).unwrap(), rs.weyl_dimension(&lambda).unwrap());
    }

    #[test]
    fn weyl_dimension_is_a_positive_integer(g in group(), w in dominant(4)) {
        let rs = root_system(g);
        let d = rs.weyl_dimension(&Weight::from_ints(&w[..rs.rank()])).unwrap();
        prop_assert!(d.is_integer() && d >= rat(1));
    }

    #[test]
    fn simple_reflections_permute_roots(g in group(), k in 0usize..24, i in 0usize..4) {
        let rs = root_system(g);
        let i = i % rs.rank();
        let alpha = &rs.positive_roots()[k % rs.num_positive()];
        let c = rs.root_pairing(alpha, rs.simple_root(i)).unwrap();
        prop_assert!(c.is_integer());
        let image = alpha.sub(&rs.simple_root(i).scale(i64::try_from(c.to_integer()).unwrap()));
        prop_assert!(rs.is_root(&image));
    }

    #[test]
    fn structure_constants(g in group(), a in 0usize..48, b in 0usize..48) {
        let rs = root_system(g);
        let np = rs.num_positive();
        let pick = |k: usize| -> Root {
            let r = rs.positive_roots()[k % np].clone();
            if (k / np) % 2 == 1 { r.neg() } else { r }
        };
        let (alpha, beta) = (pick(a), pick(b));
        let alg = ChevalleyAlgebra::new(rs.clone());
        let n = alg.structure_constant(&alpha, &beta);
        prop_assert_eq!(n, -alg.structure_constant(&beta, &alpha));
        let sum = alpha.add(&beta);
        prop_assert_eq!(n == 0, !rs.is_root(&sum));
    }

    #[test]
    fn restriction_is_additive(seed in any::<u64>(), a in prop::collection::vec(-3i64..4, 3), b in prop::collection::vec(-3i64..4, 3)) {
        let (_, sub) = random_config(&mut StdRng::seed_from_u64(seed), 3);
        let n = sub.rank();
        let tau = sub.tau();
        let sum: Vec<i64> = a[..n].iter().zip(&b[..n]).map(|(x, y)| x + y).collect();
        let lhs = tau.restrict_ints(&sum);
        let rhs: Vec<i64> = tau.restrict_ints(&a[..n]).iter().zip(tau.restrict_ints(&b[..n])).map(|(x, y)| x + y).collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn config_round_trips(seed in any::<u64>()) {
        let (cfg, _) = random_config(&mut StdRng::seed_from_u64(seed), 3);
        prop_assert_eq!(JobConfig::parse(&cfg.to_text()).unwrap(), cfg.clone());
        prop_assert_eq!(JobConfig::from_json(&cfg.to_json()).unwrap(), cfg);
    }

    #[test]
    fn rescaling_constraints_changes_nothing(seed in any::<u64>(), p in 1i64..5, q in 1i64..5, neg in any::<bool>()) {
        let (cfg, sub) = random_spherical_config(&mut StdRng::seed_from_u64(seed), 3);
        let factor = rat(if neg { -p } else { p }) / rat(q);
        let mut scaled = cfg.clone();
        for group in &mut scaled.nilradical {
            for t in group.iter_mut() {
                t.coeff = fmt_rational(&(parse_rational(&t.coeff).unwrap() * &factor));
            }
        }
        let scaled_sub = scaled.build().unwrap();
        let table = |s: &solvsph_core::subgroup::SubgroupData| -> Vec<(Vec<i64>, usize)> {
            s.weight_table().iter().map(|c| (c.phi.clone(), c.codim)).collect()
        };
        prop_assert_eq!(table(&sub), table(&scaled_sub));
        let (t1, g1) = compute(&sub).unwrap();
        let (t2, g2) = compute(&scaled_sub).unwrap();
        prop_assert_eq!(&t1.psi, &t2.psi);
        prop_assert_eq!(&t1.pi, &t2.pi);
        let pairs = |g: &solvsph_core::semigroup::SemigroupGenerators| -> Vec<(Vec<i64>, Vec<i64>)> {
            g.generators.iter().map(|x| (x.weight.clone(), x.character.clone())).collect()
        };
        prop_assert_eq!(pairs(&g1), pairs(&g2));
    }

    #[test]
    fn generators_are_free_dominant_and_indecomposable(seed in any::<u64>()) {
        let (_, sub) = random_spherical_config(&mut StdRng::seed_from_u64(seed), 3);
        let (_, g) = compute(&sub).unwrap();
        prop_assert!(g.is_free());
        for (k, x) in g.generators.iter().enumerate() {
            prop_assert!(x.weight.iter().all(|&c| c >= 0));
            let mut unit = vec![0u64; g.len()];
            unit[k] = 1;
            prop_assert_eq!(g.decompose(&x.weight, &x.character), Some(unit));
        }
    }

    #[test]
    fn decomposition_round_trips(seed in any::<u64>(), coeffs in prop::collection::vec(0u64..3, 8)) {
        let (_, sub) = random_spherical_config(&mut StdRng::seed_from_u64(seed), 3);
        let (_, g) = compute(&sub).unwrap();
        let c = &coeffs[..g.len().min(coeffs.len())];
        let mut full = c.to_vec();
        full.resize(g.len(), 0);
        let (w, chi) = g.combine(&full);
        prop_assert_eq!(g.decompose(&w, &chi), Some(full));
    }

    #[test]
    fn axioms_hold_on_spherical_configs(seed in any::<u64>()) {
        let (cfg, sub) = random_spherical_config(&mut StdRng::seed_from_u64(seed), 3);
        prop_assert!(check_spherical(&sub).spherical);
        let t = active_roots(&sub).unwrap();
        let report = verify_active_axioms(&sub, &t);
        prop_assert!(report.is_clean(), "{}\n{:?}", cfg.to_text(), report);
    }
}
