//! Bundled example configurations. Presets marked as parameterized accept a
//! group suffix, e.g. `borel:B3` or `tu-prime:A1xA2`.

use crate::config::{JobConfig, Options, Term};
use crate::error::{Error, Result};
use crate::rootsys::{Component, RootSystem};
use crate::subgroup::TorusRestriction;

pub struct PresetInfo {
    pub name: &'static str,
    pub parameterized: bool,
    pub description: &'static str,
}

pub const PRESETS: &[PresetInfo] = &[
    PresetInfo { name: "borel", parameterized: true, description: "S = T and n = u (default group A2)" },
    PresetInfo {
        name: "maximal-unipotent",
        parameterized: true,
        description: "trivial torus and n = u (default group A2)",
    },
    PresetInfo {
        name: "tu-prime",
        parameterized: true,
        description: "S = T, n spanned by the non-simple positive roots (default group A2)",
    },
    PresetInfo {
        name: "sl4-sp4borel",
        parameterized: false,
        description: "rank-two torus in A3 with two one-dimensional constraint groups",
    },
    PresetInfo { name: "sl2-torus", parameterized: false, description: "maximal torus of A1" },
    PresetInfo { name: "sl2-trivial", parameterized: false, description: "trivial subgroup of A1 (not spherical)" },
];

fn term(root: &[i64], coeff: i64) -> Term {
    Term { root: root.to_vec(), coeff: coeff.to_string() }
}

pub fn preset(spec: &str) -> Result<JobConfig> {
    let (name, group) = match spec.split_once(':') {
        Some((n, g)) => (n.trim(), Some(g.trim())),
        None => (spec.trim(), None),
    };
    let info = PRESETS.iter().find(|p| p.name == name).ok_or_else(|| Error::UnknownPreset(spec.to_string()))?;
    if group.is_some() && !info.parameterized {
        return Err(Error::UnknownPreset(format!("{spec} ({name} takes no group)")));
    }
    let group: Vec<String> = group
        .unwrap_or("A2")
        .split(|c: char| c == 'x' || c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(str::to_string)
        .collect();
    let comps: Vec<Component> = group.iter().map(|s| s.parse()).collect::<Result<_>>()?;
    let rs = RootSystem::new(&comps)?;
    let n = rs.rank();
    let identity = TorusRestriction::identity(n).matrix().to_vec();
    let options = Options::default();
    let cfg = match name {
        "borel" => JobConfig { group, torus: identity, nilradical: Vec::new(), options },
        "maximal-unipotent" => JobConfig { group, torus: Vec::new(), nilradical: Vec::new(), options },
        "tu-prime" => JobConfig {
            group,
            torus: identity,
            nilradical: rs.simple_roots().iter().map(|r| vec![term(r.coords(), 1)]).collect(),
            options,
        },
        "sl4-sp4borel" => JobConfig {
            group: vec!["A3".into()],
            torus: vec![vec![1, 1, 1], vec![0, 1, 0]],
            nilradical: vec![
                vec![term(&[1, 0, 0], 1), term(&[0, 0, 1], 1)],
                vec![term(&[1, 1, 0], 1), term(&[0, 1, 1], -1)],
            ],
            options,
        },
        "sl2-torus" => JobConfig { group: vec!["A1".into()], torus: vec![vec![1]], nilradical: vec![vec![term(&[1], 1)]], options },
        "sl2-trivial" => JobConfig { group: vec!["A1".into()], torus: Vec::new(), nilradical: vec![vec![term(&[1], 1)]], options },
        _ => unreachable!("preset table and constructor agree"),
    };
    Ok(cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_preset_validates() {
        for p in PRESETS {
            let cfg = preset(p.name).unwrap();
            cfg.build().unwrap();
            assert_eq!(JobConfig::parse(&cfg.to_text()).unwrap(), cfg);
        }
    }

    #[test]
    fn parameterized() {
        let cfg = preset("tu-prime:A1xA2").unwrap();
        assert_eq!(cfg.group, vec!["A1", "A2"]);
        assert_eq!(cfg.nilradical.len(), 3);
        cfg.build().unwrap();
        assert!(preset("sl2-torus:A2").is_err());
        assert!(matches!(preset("nope"), Err(Error::UnknownPreset(_))));
        assert!(preset("borel:Z9").is_err());
    }
}
