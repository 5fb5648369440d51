//! Explicit matrix carriers of the fundamental modules for `A_1`–`A_4` and
//! `C_2`.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::Zero;

use crate::chevalley::ChevalleyAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{add_entry, axpy, rat, sparse_kernel, to_i64, Rational, SparseVec};
use crate::rootsys::SimpleType;

/// Column-sparse square matrix: `cols[j]` is the image of the `j`-th basis vector.
pub type SparseMatrix = Vec<SparseVec>;

pub fn apply(m: &SparseMatrix, v: &SparseVec) -> SparseVec {
    let mut out = SparseVec::new();
    for (&j, c) in v {
        axpy(&mut out, c, &m[j]);
    }
    out
}

fn commutator(a: &SparseMatrix, b: &SparseMatrix) -> SparseMatrix {
    (0..a.len())
        .map(|j| {
            let mut out = apply(a, &b[j]);
            axpy(&mut out, &rat(-1), &apply(b, &a[j]));
            out
        })
        .collect()
}

fn scaled(m: &SparseMatrix, f: &Rational) -> SparseMatrix {
    m.iter()
        .map(|col| col.iter().map(|(&k, x)| (k, x * f)).collect())
        .collect()
}

fn unit(dim: usize, entries: &[(usize, usize, i64)]) -> SparseMatrix {
    let mut m = vec![SparseVec::new(); dim];
    for &(r, c, x) in entries {
        add_entry(&mut m[c], r, rat(x));
    }
    m
}

/// A finite-dimensional module given by one matrix per algebra basis element
/// on a weight basis.
#[derive(Clone, Debug)]
pub struct Carrier {
    pub dim: usize,
    /// Indexed by algebra basis position.
    pub ops: Vec<SparseMatrix>,
    /// Weight of each basis vector in fundamental-weight coordinates.
    pub weights: Vec<Vec<i64>>,
    pub highest: SparseVec,
    pub highest_weight: Vec<i64>,
}

impl Carrier {
    /// Checks `ρ([x, y]) = [ρ(x), ρ(y)]` on all basis pairs.
    pub fn check_representation(&self, g: &ChevalleyAlgebra) -> Result<usize> {
        let mut pairs = 0;
        for i in 0..g.dim() {
            for j in i + 1..g.dim() {
                let mut lhs = vec![SparseVec::new(); self.dim];
                for (&k, c) in &g.basis_bracket(i, j) {
                    for (col, img) in lhs.iter_mut().zip(&self.ops[k]) {
                        axpy(col, c, img);
                    }
                }
                if lhs != commutator(&self.ops[i], &self.ops[j]) {
                    return Err(Error::Internal(format!(
                        "representation property fails on [{}, {}]",
                        g.label(i),
                        g.label(j)
                    )));
                }
                pairs += 1;
            }
        }
        Ok(pairs)
    }
}

#[derive(Clone, Debug)]
pub struct MatrixRealization {
    algebra: Arc<ChevalleyAlgebra>,
    natural: Carrier,
    fundamentals: Vec<Carrier>,
}

impl MatrixRealization {
    pub fn new(algebra: Arc<ChevalleyAlgebra>) -> Result<Self> {
        let comps = algebra.root_system().components();
        let (kind, rank) = match comps {
            [c] => (c.kind, c.rank),
            _ => return Err(Error::UnsupportedType(describe(&algebra))),
        };
        // nonzero entries (row, column, value) of each simple e_i on the natural module
        type Entries = Vec<Vec<(usize, usize, i64)>>;
        let (dim, simple_e): (usize, Entries) = match (kind, rank) {
            (SimpleType::A, 1..=4) => (rank + 1, (0..rank).map(|i| vec![(i, i + 1, 1)]).collect()),
            (SimpleType::C, 2) => (4, vec![vec![(0, 1, 1), (2, 3, -1)], vec![(1, 2, 1)]]),
            _ => return Err(Error::UnsupportedType(describe(&algebra))),
        };
        let e: Vec<SparseMatrix> = simple_e.iter().map(|es| unit(dim, es)).collect();
        let f: Vec<SparseMatrix> = simple_e
            .iter()
            .map(|es| unit(dim, &es.iter().map(|&(r, c, x)| (c, r, x)).collect::<Vec<_>>()))
            .collect();
        let natural = carrier_from_simple(&algebra, dim, &e, &f)?;
        let highest_weights = (0..rank).map(|i| {
            let mut w = vec![0; rank];
            w[i] = 1;
            w
        });
        let fundamentals = highest_weights
            .enumerate()
            .map(|(i, w)| {
                // ω_i is carried by Λ^i of the natural module in both families
                let c = exterior_power(&natural, i + 1, &w)?;
                c.check_representation(&algebra)?;
                Ok(c)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { algebra, natural, fundamentals })
    }

    pub fn algebra(&self) -> &Arc<ChevalleyAlgebra> {
        &self.algebra
    }

    pub fn natural(&self) -> &Carrier {
        &self.natural
    }

    /// Carrier whose highest weight is `ω_i`.
    pub fn fundamental(&self, i: usize) -> &Carrier {
        &self.fundamentals[i]
    }
}

fn describe(g: &ChevalleyAlgebra) -> String {
    g.root_system().components().iter().map(|c| c.to_string()).collect::<Vec<_>>().join("x")
}

/// Extends simple `e_i`, `f_i` matrices to the whole Chevalley basis through
/// extraspecial pairs and checks the result is a representation.
fn carrier_from_simple(
    g: &ChevalleyAlgebra,
    dim: usize,
    e: &[SparseMatrix],
    f: &[SparseMatrix],
) -> Result<Carrier> {
    let rs = g.root_system();
    let np = rs.num_positive();
    let n = rs.rank();
    let mut ops: Vec<SparseMatrix> = vec![Vec::new(); g.dim()];
    ops[..n].clone_from_slice(e);
    ops[np..np + n].clone_from_slice(f);
    for xi in n..np {
        let (a, b) = g.extraspecial_pair(xi).ok_or_else(|| Error::Internal("missing extraspecial pair".into()))?;
        let (ra, rb) = (&rs.positive_roots()[a], &rs.positive_roots()[b]);
        let npos = rat(g.structure_constant(ra, rb));
        let nneg = rat(g.structure_constant(&ra.neg(), &rb.neg()));
        ops[xi] = scaled(&commutator(&ops[a], &ops[b]), &npos.recip());
        ops[np + xi] = scaled(&commutator(&ops[np + a], &ops[np + b]), &nneg.recip());
    }
    for i in 0..n {
        ops[2 * np + i] = commutator(&e[i], &f[i]);
    }
    let weights = diagonal_weights(&ops[2 * np..], dim)?;
    let c = Carrier { dim, ops, weights, highest: SparseVec::new(), highest_weight: Vec::new() };
    c.check_representation(g)?;
    let mut hw = vec![0; n];
    hw[0] = 1;
    find_highest(c, &hw)
}

fn diagonal_weights(h: &[SparseMatrix], dim: usize) -> Result<Vec<Vec<i64>>> {
    (0..dim)
        .map(|j| {
            h.iter()
                .map(|m| {
                    let col = &m[j];
                    if col.keys().any(|&k| k != j) {
                        return Err(Error::Internal("Cartan action is not diagonal".into()));
                    }
                    let x = col.get(&j).cloned().unwrap_or_else(Rational::zero);
                    to_i64(&x).ok_or_else(|| Error::Internal("non-integral weight".into()))
                })
                .collect()
        })
        .collect()
}

/// `Λ^k` of a carrier, on the basis of increasing `k`-subsets.
fn exterior_power(base: &Carrier, k: usize, hw: &[i64]) -> Result<Carrier> {
    let subsets = combinations(base.dim, k);
    let index: HashMap<&[usize], usize> = subsets.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
    let dim = subsets.len();
    let ops = base
        .ops
        .iter()
        .map(|m| {
            subsets
                .iter()
                .map(|s| {
                    let mut out = SparseVec::new();
                    for (p, &src) in s.iter().enumerate() {
                        for (&dst, x) in &m[src] {
                            if dst != src && s.contains(&dst) {
                                continue;
                            }
                            let mut t = s.clone();
                            t[p] = dst;
                            let between = s
                                .iter()
                                .filter(|&&u| u != src && u > src.min(dst) && u < src.max(dst))
                                .count();
                            t.sort_unstable();
                            let sign = if between % 2 == 0 { x.clone() } else { -x.clone() };
                            add_entry(&mut out, index[t.as_slice()], sign);
                        }
                    }
                    out
                })
                .collect()
        })
        .collect();
    let weights = subsets
        .iter()
        .map(|s| {
            let mut w = vec![0; hw.len()];
            for &j in s {
                w.iter_mut().zip(&base.weights[j]).for_each(|(a, b)| *a += b);
            }
            w
        })
        .collect();
    find_highest(Carrier { dim, ops, weights, highest: SparseVec::new(), highest_weight: Vec::new() }, hw)
}

/// Locates the unique vector of weight `hw` killed by all simple raising operators.
fn find_highest(mut c: Carrier, hw: &[i64]) -> Result<Carrier> {
    let n = hw.len();
    let span: Vec<usize> = (0..c.dim).filter(|&j| c.weights[j] == hw).collect();
    let cols: Vec<SparseVec> = span
        .iter()
        .map(|&j| {
            let mut out = SparseVec::new();
            for i in 0..n {
                for (&k, x) in &c.ops[i][j] {
                    add_entry(&mut out, i * c.dim + k, x.clone());
                }
            }
            out
        })
        .collect();
    let ker = sparse_kernel(&cols);
    if ker.len() != 1 {
        return Err(Error::Internal(format!("highest weight space of dimension {}", ker.len())));
    }
    c.highest = ker[0].iter().map(|(&k, x)| (span[k], x.clone())).collect();
    c.highest_weight = hw.to_vec();
    Ok(c)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
