//! Job configuration: a line-oriented text format and its JSON form.
//!
//! ```text
//! [group]
//! A3
//! [torus]
//! 1 1 1
//! 0 1 0
//! [nilradical]
//! 1 0 0 : 1 ; 0 0 1 : 1
//! 1 1 0 : 1 ; 0 1 1 : -1
//! [options]
//! height_bound = 2
//! ```
//!
//! `[torus]` holds the rows of the restriction matrix, or the keyword
//! `identity` (also the default when the section is absent) or `trivial`
//! (an empty section means the same). Each `[nilradical]` line is one
//! constraint group of `root : coefficient` terms separated by `;`; an empty
//! section means `n = u`.

use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::chevalley::ChevalleyAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{fmt_rational, parse_rational};
use crate::oracle::DEFAULT_DIM_CAP;
use crate::rootsys::{Component, Root, RootSystem};
use crate::subgroup::{ConstraintGroup, NilradicalSpec, SubgroupData, TorusRestriction};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Options {
    pub height_bound: u32,
    pub dim_cap: u64,
    pub trials: usize,
    pub coefficient_range: i64,
    pub seed: u64,
    pub format: OutputFormat,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            height_bound: 4,
            dim_cap: DEFAULT_DIM_CAP,
            trials: 200,
            coefficient_range: 3,
            seed: 0,
            format: OutputFormat::Text,
        }
    }
}

/// One constraint term: a positive root over the simple roots and a
/// rational coefficient written `p` or `p/q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub root: Vec<i64>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobConfig {
    pub group: Vec<String>,
    pub torus: Vec<Vec<i64>>,
    pub nilradical: Vec<Vec<Term>>,
    #[serde(default)]
    pub options: Options,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::ConfigParse { line, message: message.into() }
}

#[derive(PartialEq)]
enum Section {
    None,
    Group,
    Torus,
    Nilradical,
    Options,
}

impl JobConfig {
    pub fn components(&self) -> Result<Vec<Component>> {
        self.group.iter().map(|s| s.parse()).collect()
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(self.components()?.iter().map(|c| c.rank).sum())
    }

    pub fn algebra(&self) -> Result<Arc<ChevalleyAlgebra>> {
        Ok(Arc::new(ChevalleyAlgebra::new(RootSystem::new(&self.components()?)?)))
    }

    pub fn nilradical_spec(&self) -> Result<NilradicalSpec> {
        let groups = self
            .nilradical
            .iter()
            .map(|g| {
                g.iter()
                    .map(|t| {
                        let q = parse_rational(&t.coeff)
                            .ok_or_else(|| Error::ConfigParse { line: 0, message: format!("bad rational {}", t.coeff) })?;
                        Ok((Root(t.root.clone()), q))
                    })
                    .collect::<Result<Vec<_>>>()
                    .map(ConstraintGroup::new)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(NilradicalSpec::new(groups))
    }

    /// Validated subgroup data over a fresh algebra.
    pub fn build(&self) -> Result<SubgroupData> {
        self.build_with(self.algebra()?)
    }

    pub fn build_with(&self, algebra: Arc<ChevalleyAlgebra>) -> Result<SubgroupData> {
        let n = algebra.root_system().rank();
        let tau = TorusRestriction::new(n, self.torus.clone())?;
        SubgroupData::validate(algebra, tau, self.nilradical_spec()?)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut section = Section::None;
        let mut group = Vec::new();
        let mut group_line = 0;
        let mut torus_rows: Vec<(usize, Vec<i64>)> = Vec::new();
        let mut torus_keyword: Option<(usize, String)> = None;
        let mut torus_seen = false;
        let mut nil: Vec<(usize, Vec<Term>)> = Vec::new();
        let mut options = Options::default();

        for (k, raw) in text.lines().enumerate() {
            let ln = k + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if line.starts_with('[') {
                section = match line {
                    "[group]" => Section::Group,
                    "[torus]" => {
                        torus_seen = true;
                        Section::Torus
                    }
                    "[nilradical]" => Section::Nilradical,
                    "[options]" => Section::Options,
                    _ => return Err(parse_err(ln, format!("unknown section {line}"))),
                };
                continue;
            }
            match section {
                Section::None => return Err(parse_err(ln, "content before the first section")),
                Section::Group => {
                    for tok in line.split(|c: char| c.is_whitespace() || c == 'x' || c == ',').filter(|t| !t.is_empty()) {
                        tok.parse::<Component>().map_err(|e| parse_err(ln, e.to_string()))?;
                        group.push(tok.to_string());
                    }
                    group_line = ln;
                }
                Section::Torus => {
                    if line == "identity" || line == "trivial" {
                        if torus_keyword.is_some() || !torus_rows.is_empty() {
                            return Err(parse_err(ln, "torus keyword must be the only entry"));
                        }
                        torus_keyword = Some((ln, line.to_string()));
                        continue;
                    }
                    if torus_keyword.is_some() {
                        return Err(parse_err(ln, "torus keyword must be the only entry"));
                    }
                    let row = line
                        .split_whitespace()
                        .map(|t| t.parse::<i64>().map_err(|_| parse_err(ln, format!("bad integer {t}"))))
                        .collect::<Result<Vec<_>>>()?;
                    torus_rows.push((ln, row));
                }
                Section::Nilradical => {
                    let terms = line
                        .split(';')
                        .map(|term| {
                            let (root, coeff) =
                                term.split_once(':').ok_or_else(|| parse_err(ln, "expected `root : coefficient`"))?;
                            let root = root
                                .split_whitespace()
                                .map(|t| t.parse::<i64>().map_err(|_| parse_err(ln, format!("bad integer {t}"))))
                                .collect::<Result<Vec<_>>>()?;
                            let q = parse_rational(coeff)
                                .ok_or_else(|| parse_err(ln, format!("bad rational {}", coeff.trim())))?;
                            Ok(Term { root, coeff: fmt_rational(&q) })
                        })
                        .collect::<Result<Vec<_>>>()?;
                    nil.push((ln, terms));
                }
                Section::Options => {
                    let (key, value) = line.split_once('=').ok_or_else(|| parse_err(ln, "expected `key = value`"))?;
                    options.set(key.trim(), value.trim()).map_err(|m| parse_err(ln, m))?;
                }
            }
        }

        if group.is_empty() {
            return Err(parse_err(group_line, "missing [group]"));
        }
        let comps: Vec<Component> = group.iter().map(|s| s.parse().unwrap()).collect();
        RootSystem::new(&comps).map_err(|e| parse_err(group_line, e.to_string()))?;
        let n: usize = comps.iter().map(|c| c.rank).sum();
        let torus = match (&torus_keyword, torus_seen) {
            (Some((_, k)), _) if k == "trivial" => Vec::new(),
            (Some(_), _) | (None, false) => TorusRestriction::identity(n).matrix().to_vec(),
            (None, true) => {
                for (ln, row) in &torus_rows {
                    if row.len() != n {
                        return Err(parse_err(*ln, format!("torus row has {} entries, expected {n}", row.len())));
                    }
                }
                torus_rows.into_iter().map(|(_, r)| r).collect()
            }
        };
        for (ln, terms) in &nil {
            for t in terms {
                if t.root.len() != n {
                    return Err(parse_err(*ln, format!("root has {} coefficients, expected {n}", t.root.len())));
                }
            }
        }
        Ok(JobConfig { group, torus, nilradical: nil.into_iter().map(|(_, g)| g).collect(), options })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "[group]\n{}", self.group.join(" ")).unwrap();
        s.push_str("[torus]\n");
        if self.torus.is_empty() {
            s.push_str("trivial\n");
        }
        for row in &self.torus {
            writeln!(s, "{}", join(row)).unwrap();
        }
        s.push_str("[nilradical]\n");
        for g in &self.nilradical {
            let terms: Vec<String> = g.iter().map(|t| format!("{} : {}", join(&t.root), t.coeff)).collect();
            writeln!(s, "{}", terms.join(" ; ")).unwrap();
        }
        let o = &self.options;
        writeln!(
            s,
            "[options]\nheight_bound = {}\ndim_cap = {}\ntrials = {}\ncoefficient_range = {}\nseed = {}\nformat = {}",
            o.height_bound,
            o.dim_cap,
            o.trials,
            o.coefficient_range,
            o.seed,
            match o.format {
                OutputFormat::Text => "text",
                OutputFormat::Json => "json",
            }
        )
        .unwrap();
        s
    }

    /// Accepts a bare JSON config or any JSON object with a `config` field.
    pub fn from_json(text: &str) -> Result<Self> {
        let v: serde_json::Value = serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
        let inner = v.get("config").cloned().unwrap_or(v);
        serde_json::from_value(inner).map_err(|e| parse_err(0, e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    /// Parses JSON when the text starts with `{`, the line format otherwise.
    pub fn load(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::from_json(text)
        } else {
            Self::parse(text)
        }
    }
}

impl Options {
    pub fn set(&mut self, key: &str, value: &str) -> std::result::Result<(), String> {
        let bad = || format!("bad value {value} for {key}");
        match key {
            "height_bound" => self.height_bound = value.parse().map_err(|_| bad())?,
            "dim_cap" => self.dim_cap = value.parse().map_err(|_| bad())?,
            "trials" => self.trials = value.parse().map_err(|_| bad())?,
            "coefficient_range" => self.coefficient_range = value.parse().map_err(|_| bad())?,
            "seed" => self.seed = value.parse().map_err(|_| bad())?,
            "format" => {
                self.format = match value {
                    "text" => OutputFormat::Text,
                    "json" => OutputFormat::Json,
                    _ => return Err(bad()),
                }
            }
            _ => return Err(format!("unknown option {key}")),
        }
        Ok(())
    }
}

fn join(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}
