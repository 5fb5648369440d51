//! The Lie algebra `g` in a Chevalley basis `{e_α, h_{α_i}}` with exact
//! integer structure constants.
//!
//! Sign convention: every extraspecial pair `(α_i, ξ - α_i)` (with `α_i` the
//! lowest-index simple root such that `ξ - α_i` is a positive root) gets
//! `N = +(p + 1)`. All other constants follow from the standard relations
//! between Chevalley structure constants, together with
//! `N_{-α,-β} = -N_{α,β}` and `[e_α, e_{-α}] = h_α`.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{add_entry, axpy, fmt_rational, rat, to_i64, Rational, SparseVec};
use crate::rootsys::{Root, RootSystem};

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// Basis layout: `0..N` are `e_α` for positive roots, `N..2N` are `e_{-α}`,
/// and `2N..2N+n` are `h_{α_i}`.
#[derive(Clone, Debug)]
pub struct ChevalleyAlgebra {
    id: u64,
    rs: RootSystem,
    /// `N_{a,b}` indexed by root basis positions `0..2N`.
    constants: Vec<Vec<i64>>,
    /// `h_α` in the basis `h_{α_i}` for each root basis position.
    coroots: Vec<Vec<i64>>,
    extraspecial: Vec<Option<(usize, usize)>>,
    /// eigenvalue `<α | α_i>` of `h_i` on each root basis position
    root_eigen: Vec<Vec<i64>>,
}

/// Sparse element of the algebra over the Chevalley basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    algebra: u64,
    coeffs: SparseVec,
}

impl AlgebraElement {
    pub fn algebra_id(&self) -> u64 {
        self.algebra
    }

    pub fn coeffs(&self) -> &SparseVec {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, idx: usize) -> Rational {
        self.coeffs.get(&idx).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, f: &Rational) -> AlgebraElement {
        let mut coeffs = SparseVec::new();
        axpy(&mut coeffs, f, &self.coeffs);
        AlgebraElement { algebra: self.algebra, coeffs }
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        if self.algebra != other.algebra {
            return Err(Error::AlgebraMismatch);
        }
        let mut coeffs = self.coeffs.clone();
        axpy(&mut coeffs, &rat(1), &other.coeffs);
        Ok(AlgebraElement { algebra: self.algebra, coeffs })
    }
}

impl ChevalleyAlgebra {
    pub fn new(rs: RootSystem) -> Self {
        let np = rs.num_positive();
        let n = rs.rank();

        let signed = |pos: usize| -> Root {
            if pos < np {
                rs.positive_roots()[pos].clone()
            } else {
                rs.positive_roots()[pos - np].neg()
            }
        };
        let locate = |r: &Root| -> Option<usize> {
            if let Some(i) = rs.positive_index(r) {
                Some(i)
            } else {
                rs.positive_index(&r.neg()).map(|i| i + np)
            }
        };

        let mut positive_pairs: HashMap<(usize, usize), i64> = HashMap::new();
        let mut extraspecial = vec![None; np];
        for xi_idx in n..np {
            let xi = rs.positive_roots()[xi_idx].clone();
            let mut special = Vec::new();
            for a in 0..xi_idx {
                let rest = xi.sub(&rs.positive_roots()[a]);
                if let Some(b) = rs.positive_index(&rest) {
                    if a < b {
                        special.push((a, b));
                    }
                }
            }
            let (a0, b0) = special[0];
            extraspecial[xi_idx] = Some((a0, b0));
            let alpha0 = &rs.positive_roots()[a0];
            let beta0 = &rs.positive_roots()[b0];
            let mut p = 0;
            while rs.is_root(&beta0.sub(&alpha0.scale(p + 1))) {
                p += 1;
            }
            let n0 = p + 1;
            positive_pairs.insert((a0, b0), n0);
            positive_pairs.insert((b0, a0), -n0);

            for &(a, b) in &special[1..] {
                let alpha = &rs.positive_roots()[a];
                let beta = &rs.positive_roots()[b];
                let nr = |x: &Root, y: &Root| general_constant(&rs, &positive_pairs, x, y);
                let mut val = Rational::zero();
                let t1 = nr(beta, &alpha0.neg()) * nr(alpha, &beta0.neg());
                if !t1.is_zero() {
                    let d = beta.sub(alpha0);
                    val += t1 / rs.inner(&d, &d);
                }
                let t2 = nr(&alpha0.neg(), alpha) * nr(beta, &beta0.neg());
                if !t2.is_zero() {
                    let d = alpha.sub(alpha0);
                    val += t2 / rs.inner(&d, &d);
                }
                val = val * rs.inner(&xi, &xi) / rat(n0);
                let v = to_i64(&val).expect("structure constants are integers");
                positive_pairs.insert((a, b), v);
                positive_pairs.insert((b, a), -v);
            }
        }

        let mut constants = vec![vec![0i64; 2 * np]; 2 * np];
        for (i, row) in constants.iter_mut().enumerate() {
            for (j, c) in row.iter_mut().enumerate() {
                let (a, b) = (signed(i), signed(j));
                if locate(&a.add(&b)).is_some() {
                    let v = general_constant(&rs, &positive_pairs, &a, &b);
                    *c = to_i64(&v).expect("structure constants are integers");
                }
            }
        }

        let coroots = (0..2 * np)
            .map(|i| {
                let a = signed(i);
                let norm = rs.inner(&a, &a);
                a.coords()
                    .iter()
                    .enumerate()
                    .map(|(k, &c)| {
                        let simple = rs.simple_root(k);
                        to_i64(&(rat(c) * rs.inner(simple, simple) / &norm))
                            .expect("coroot coefficients are integers")
                    })
                    .collect()
            })
            .collect();
        let root_eigen = (0..2 * np)
            .map(|i| {
                let a = signed(i);
                (0..n)
                    .map(|k| to_i64(&rs.root_pairing(&a, rs.simple_root(k)).unwrap()).unwrap())
                    .collect()
            })
            .collect();

        ChevalleyAlgebra {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            rs,
            constants,
            coroots,
            extraspecial,
            root_eigen,
        }
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn dim(&self) -> usize {
        2 * self.rs.num_positive() + self.rs.rank()
    }

    pub fn num_roots(&self) -> usize {
        2 * self.rs.num_positive()
    }

    /// Basis position of `e_α` for a (positive or negative) root.
    pub fn e_index(&self, r: &Root) -> Option<usize> {
        let np = self.rs.num_positive();
        if let Some(i) = self.rs.positive_index(r) {
            Some(i)
        } else {
            self.rs.positive_index(&r.neg()).map(|i| i + np)
        }
    }

    pub fn h_index(&self, i: usize) -> usize {
        self.num_roots() + i
    }

    /// The root of a root basis position, `None` for Cartan elements.
    pub fn root_of(&self, idx: usize) -> Option<Root> {
        let np = self.rs.num_positive();
        if idx < np {
            Some(self.rs.positive_roots()[idx].clone())
        } else if idx < 2 * np {
            Some(self.rs.positive_roots()[idx - np].neg())
        } else {
            None
        }
    }

    pub fn label(&self, idx: usize) -> String {
        match self.root_of(idx) {
            Some(r) => format!("e({r})"),
            None => format!("h{}", idx - self.num_roots() + 1),
        }
    }

    /// `N_{α,β}`; zero when `α + β` is not a root.
    pub fn structure_constant(&self, a: &Root, b: &Root) -> i64 {
        match (self.e_index(a), self.e_index(b)) {
            (Some(i), Some(j)) => self.constants[i][j],
            _ => 0,
        }
    }

    /// Extraspecial pair `(simple index, positive root index)` of a
    /// non-simple positive root.
    pub fn extraspecial_pair(&self, positive_idx: usize) -> Option<(usize, usize)> {
        self.extraspecial.get(positive_idx).copied().flatten()
    }

    /// `h_α` for the root at a root basis position, over `h_{α_i}`.
    pub fn coroot(&self, idx: usize) -> &[i64] {
        &self.coroots[idx]
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement { algebra: self.id, coeffs: SparseVec::new() }
    }

    pub fn basis(&self, idx: usize) -> AlgebraElement {
        let mut coeffs = SparseVec::new();
        coeffs.insert(idx, rat(1));
        AlgebraElement { algebra: self.id, coeffs }
    }

    pub fn element(&self, coeffs: SparseVec) -> AlgebraElement {
        let coeffs = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        AlgebraElement { algebra: self.id, coeffs }
    }

    pub fn e(&self, r: &Root) -> Option<AlgebraElement> {
        self.e_index(r).map(|i| self.basis(i))
    }

    pub fn h(&self, i: usize) -> AlgebraElement {
        self.basis(self.h_index(i))
    }

    /// Bracket of two basis vectors as a sparse coefficient vector.
    pub fn basis_bracket(&self, i: usize, j: usize) -> SparseVec {
        let nr = self.num_roots();
        let mut out = SparseVec::new();
        match (i < nr, j < nr) {
            (true, true) => {
                let (a, b) = (self.root_of(i).unwrap(), self.root_of(j).unwrap());
                let s = a.add(&b);
                if s.is_zero() {
                    for (k, &c) in self.coroots[i].iter().enumerate() {
                        add_entry(&mut out, nr + k, rat(c));
                    }
                } else if let Some(t) = self.e_index(&s) {
                    add_entry(&mut out, t, rat(self.constants[i][j]));
                }
            }
            (false, true) => add_entry(&mut out, j, rat(self.root_eigen[j][i - nr])),
            (true, false) => add_entry(&mut out, i, rat(-self.root_eigen[i][j - nr])),
            (false, false) => {}
        }
        out
    }

    pub fn bracket(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        if x.algebra != self.id || y.algebra != self.id {
            return Err(Error::AlgebraMismatch);
        }
        let mut coeffs = SparseVec::new();
        for (&i, a) in &x.coeffs {
            for (&j, b) in &y.coeffs {
                axpy(&mut coeffs, &(a * b), &self.basis_bracket(i, j));
            }
        }
        Ok(AlgebraElement { algebra: self.id, coeffs })
    }

    /// Jacobi sum `[[x,y],z] + [[y,z],x] + [[z,x],y]` on basis vectors.
    pub fn jacobi_defect(&self, i: usize, j: usize, k: usize) -> Result<AlgebraElement> {
        let (x, y, z) = (self.basis(i), self.basis(j), self.basis(k));
        let t1 = self.bracket(&self.bracket(&x, &y)?, &z)?;
        let t2 = self.bracket(&self.bracket(&y, &z)?, &x)?;
        let t3 = self.bracket(&self.bracket(&z, &x)?, &y)?;
        t1.add(&t2)?.add(&t3)
    }

    pub fn format_element(&self, x: &AlgebraElement) -> String {
        if x.is_zero() {
            return "0".into();
        }
        x.coeffs
            .iter()
            .map(|(&i, c)| format!("{}*{}", fmt_rational(c), self.label(i)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for ChevalleyAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self.rs.components().iter().map(|c| c.to_string()).collect();
        write!(f, "Chevalley algebra of type {} (dim {})", comps.join("x"), self.dim())
    }
}

/// `N_{a,b}` for arbitrary roots from the table of positive pairs.
fn general_constant(
    rs: &RootSystem,
    positive_pairs: &HashMap<(usize, usize), i64>,
    a: &Root,
    b: &Root,
) -> Rational {
    let s = a.add(b);
    if s.is_zero() || !rs.is_root(&s) {
        return Rational::zero();
    }
    let same_sign = |x: &Root, y: &Root| -> Rational {
        if x.is_positive() {
            let i = rs.positive_index(x).unwrap();
            let j = rs.positive_index(y).unwrap();
            rat(positive_pairs[&(i, j)])
        } else {
            let i = rs.positive_index(&x.neg()).unwrap();
            let j = rs.positive_index(&y.neg()).unwrap();
            rat(-positive_pairs[&(i, j)])
        }
    };
    if a.is_positive() == b.is_positive() {
        return same_sign(a, b);
    }
    // a + b + c = 0 gives N_ab/(c,c) = N_bc/(a,a) = N_ca/(b,b)
    let c = s.neg();
    let norm = |r: &Root| rs.inner(r, r);
    if b.is_positive() == c.is_positive() {
        norm(&c) / norm(a) * same_sign(b, &c)
    } else {
        norm(&c) / norm(b) * same_sign(&c, a)
    }
}
