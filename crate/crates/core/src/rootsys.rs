//! Root systems, weights and the Weyl pairing of a simply connected
//! semisimple group.
//!
//! Roots are stored in the simple-root basis and weights in the
//! fundamental-weight basis, so `<ω_i | α_j> = δ_ij` is a coordinate readoff.
//! Simple roots follow Bourbaki numbering inside each simple component.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{fmt_rational, rat, ratio, to_i64, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SimpleType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl SimpleType {
    pub fn admits(self, rank: usize) -> bool {
        match self {
            SimpleType::A => rank >= 1,
            SimpleType::B | SimpleType::C => rank >= 2,
            SimpleType::D => rank >= 3,
            SimpleType::E => (6..=8).contains(&rank),
            SimpleType::F => rank == 4,
            SimpleType::G => rank == 2,
        }
    }

    /// `|Δ₊|` for the simple type of the given rank.
    pub fn positive_root_count(self, rank: usize) -> usize {
        match (self, rank) {
            (SimpleType::A, n) => n * (n + 1) / 2,
            (SimpleType::B | SimpleType::C, n) => n * n,
            (SimpleType::D, n) => n * (n - 1),
            (SimpleType::E, 6) => 36,
            (SimpleType::E, 7) => 63,
            (SimpleType::E, 8) => 120,
            (SimpleType::F, _) => 24,
            (SimpleType::G, _) => 6,
            _ => 0,
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            SimpleType::A => 'A',
            SimpleType::B => 'B',
            SimpleType::C => 'C',
            SimpleType::D => 'D',
            SimpleType::E => 'E',
            SimpleType::F => 'F',
            SimpleType::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(SimpleType::A),
            "B" => Ok(SimpleType::B),
            "C" => Ok(SimpleType::C),
            "D" => Ok(SimpleType::D),
            "E" => Ok(SimpleType::E),
            "F" => Ok(SimpleType::F),
            "G" => Ok(SimpleType::G),
            other => Err(Error::InvalidType { kind: other.to_string(), rank: 0 }),
        }
    }
}

/// One simple factor `(type, rank)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Component {
    pub kind: SimpleType,
    pub rank: usize,
}

impl Component {
    pub fn new(kind: SimpleType, rank: usize) -> Self {
        Self { kind, rank }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind, self.rank)
    }
}

impl FromStr for Component {
    type Err = Error;

    /// Accepts `A3`, `a3` or `A 3`.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut chars = s.chars();
        let kind = chars
            .next()
            .ok_or_else(|| Error::InvalidType { kind: String::new(), rank: 0 })?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidType { kind: s.clone(), rank: 0 })?;
        let kind: SimpleType = kind.to_string().parse()?;
        Ok(Component { kind, rank })
    }
}

/// A vector in the root lattice, in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&k| k == 0)
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&k| k >= 0)
    }

    /// `Supp α`: indices of the simple roots with positive coefficient.
    pub fn support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, &k)| k > 0).map(|(i, _)| i).collect()
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|k| -k).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Root {
        Root(self.0.iter().map(|x| k * x).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &k) in self.0.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let sign = if k < 0 { "-" } else if first { "" } else { "+" };
            let mag = k.abs();
            if mag == 1 {
                write!(f, "{sign}a{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}a{}", i + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A weight `Σ c_i ω_i` in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<Rational>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![Rational::zero(); n])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| rat(c)).collect())
    }

    pub fn fundamental(n: usize, i: usize) -> Self {
        let mut w = Self::zero(n);
        w.0[i] = Rational::one();
        w
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0.iter().map(to_i64).collect()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &Rational) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    /// Sum of coordinates; the height bound used by the oracle.
    pub fn level(&self) -> Rational {
        self.0.iter().sum()
    }
}

impl fmt::Display for Weight {
    /// Pretty form `w1 + 2w3`, `0` for the zero weight.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if first { "" } else { " + " };
            let sign = if c.is_negative() && !first { " - " } else { sign };
            let mag = c.abs();
            if mag.is_one() {
                write!(f, "{sign}w{}", i + 1)?;
            } else {
                write!(f, "{sign}{}w{}", fmt_rational(&mag), i + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Combinatorial model of `G`: Cartan data, positive roots and the
/// invariant inner product.
#[derive(Clone, Debug)]
pub struct RootSystem {
    components: Vec<Component>,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    gram: Vec<Vec<Rational>>,
    positive: Vec<Root>,
    norms: Vec<Rational>,
    index: HashMap<Vec<i64>, usize>,
}

/// Squared lengths of the simple roots and the Dynkin bonds of one component.
fn dynkin(kind: SimpleType, n: usize) -> (Vec<Rational>, Vec<(usize, usize)>) {
    let chain: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    match kind {
        SimpleType::A => (vec![rat(2); n], chain),
        SimpleType::B => {
            let mut l = vec![rat(2); n];
            l[n - 1] = rat(1);
            (l, chain)
        }
        SimpleType::C => {
            let mut l = vec![rat(1); n];
            l[n - 1] = rat(2);
            (l, chain)
        }
        SimpleType::D => {
            let mut edges: Vec<_> = (0..n - 2).map(|i| (i, i + 1)).collect();
            edges.push((n - 3, n - 1));
            (vec![rat(2); n], edges)
        }
        SimpleType::E => {
            let mut edges = vec![(0, 2), (1, 3)];
            edges.extend((2..n - 1).map(|i| (i, i + 1)));
            (vec![rat(2); n], edges)
        }
        SimpleType::F => (vec![rat(2), rat(2), rat(1), rat(1)], chain),
        SimpleType::G => (vec![rat(1), rat(3)], chain),
    }
}

impl RootSystem {
    /// Builds the root system of the product of the given simple factors.
    pub fn new(spec: &[Component]) -> Result<Self> {
        for c in spec {
            if !c.kind.admits(c.rank) {
                return Err(Error::InvalidType { kind: c.kind.to_string(), rank: c.rank });
            }
        }
        let rank: usize = spec.iter().map(|c| c.rank).sum();
        let mut gram = vec![vec![Rational::zero(); rank]; rank];
        let mut offset = 0;
        for c in spec {
            let (lengths, edges) = dynkin(c.kind, c.rank);
            for (i, l) in lengths.iter().enumerate() {
                gram[offset + i][offset + i] = l.clone();
            }
            for (i, j) in edges {
                // (α_i, α_j) = -max(|α_i|², |α_j|²) / 2 for bonded nodes
                let m = std::cmp::max(&lengths[i], &lengths[j]).clone();
                let v = -m * ratio(1, 2);
                gram[offset + i][offset + j] = v.clone();
                gram[offset + j][offset + i] = v;
            }
            offset += c.rank;
        }
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        let a = rat(2) * &gram[i][j] / &gram[j][j];
                        to_i64(&a).expect("Cartan entries are integers")
                    })
                    .collect()
            })
            .collect();

        let positive = generate_positive_roots(&cartan);
        let mut rs = RootSystem {
            components: spec.to_vec(),
            rank,
            cartan,
            gram,
            positive,
            norms: Vec::new(),
            index: HashMap::new(),
        };
        rs.norms = rs.positive.iter().map(|r| rs.inner(r, r)).collect();
        rs.index = rs.positive.iter().enumerate().map(|(i, r)| (r.0.clone(), i)).collect();
        Ok(rs)
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `cartan[i][j] = <α_i | α_j> = 2(α_i, α_j)/(α_j, α_j)`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots ordered by height, then lexicographically descending,
    /// so the first `rank` entries are `α_1, …, α_n`.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.positive[..self.rank]
    }

    pub fn simple_root(&self, i: usize) -> &Root {
        &self.positive[i]
    }

    /// Squared lengths `(α, α)` of the positive roots, in order.
    pub fn norms(&self) -> &[Rational] {
        &self.norms
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn positive_index(&self, r: &Root) -> Option<usize> {
        self.index.get(&r.0).copied()
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.index.contains_key(&r.0) || self.index.contains_key(&r.neg().0)
    }

    pub fn is_positive_root(&self, r: &Root) -> bool {
        self.index.contains_key(&r.0)
    }

    /// Invariant inner product of two root-lattice vectors.
    pub fn inner(&self, a: &Root, b: &Root) -> Rational {
        let mut s = Rational::zero();
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                if y != 0 && !self.gram[i][j].is_zero() {
                    s += rat(x * y) * &self.gram[i][j];
                }
            }
        }
        s
    }

    /// `<β | α>` for root-lattice vectors, integer whenever `α` is a root.
    pub fn root_pairing(&self, beta: &Root, alpha: &Root) -> Result<Rational> {
        if alpha.is_zero() {
            return Err(Error::ZeroRoot);
        }
        Ok(rat(2) * self.inner(beta, alpha) / self.inner(alpha, alpha))
    }

    /// Fundamental-weight coordinates of a root-lattice vector.
    pub fn root_to_weight(&self, r: &Root) -> Weight {
        let mut w = vec![Rational::zero(); self.rank];
        for (i, &k) in r.0.iter().enumerate() {
            if k != 0 {
                for (j, wj) in w.iter_mut().enumerate() {
                    *wj += rat(k * self.cartan[i][j]);
                }
            }
        }
        Weight(w)
    }

    /// Integer fundamental-weight coordinates of a root-lattice vector.
    pub fn root_to_weight_ints(&self, r: &Root) -> Vec<i64> {
        (0..self.rank)
            .map(|j| r.0.iter().enumerate().map(|(i, &k)| k * self.cartan[i][j]).sum())
            .collect()
    }

    /// `<λ | μ> = 2(λ, μ)/(μ, μ)`, which equals `λ(h_μ)` for a root `μ`.
    pub fn pairing(&self, lambda: &Weight, mu: &Root) -> Result<Rational> {
        if mu.is_zero() {
            return Err(Error::ZeroRoot);
        }
        // (ω_i, α_j) = δ_ij (α_j, α_j) / 2
        let num: Rational = lambda
            .0
            .iter()
            .zip(&mu.0)
            .enumerate()
            .filter(|(_, (_, &k))| k != 0)
            .map(|(j, (c, &k))| c * rat(k) * &self.gram[j][j])
            .sum();
        Ok(num / self.inner(mu, mu))
    }

    pub fn support(&self, alpha: &Root) -> Vec<usize> {
        alpha.support()
    }

    /// Simple reflection `s_i` on a weight.
    pub fn reflect(&self, w: &Weight, i: usize) -> Weight {
        let c = w.0[i].clone();
        Weight(
            w.0.iter()
                .enumerate()
                .map(|(j, x)| x - &c * rat(self.cartan[i][j]))
                .collect(),
        )
    }

    /// `λ* = -w₀λ`, the highest weight of the dual module.
    pub fn dual_weight(&self, lambda: &Weight) -> Result<Weight> {
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        let mut mu = Weight(lambda.0.iter().map(|c| -c).collect());
        // the dominant element of the W-orbit of -λ is -w₀λ
        while let Some(i) = mu.0.iter().position(|c| c.is_negative()) {
            mu = self.reflect(&mu, i);
        }
        Ok(mu)
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![Rational::one(); self.rank])
    }

    /// Weyl dimension formula `Π <λ+ρ|α> / <ρ|α>` over positive roots.
    pub fn weyl_dimension(&self, lambda: &Weight) -> Result<Rational> {
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        let shifted = lambda.add(&self.rho());
        let rho = self.rho();
        let mut d = Rational::one();
        for a in &self.positive {
            d *= self.pairing(&shifted, a)? / self.pairing(&rho, a)?;
        }
        Ok(d)
    }

    /// Dominant integral weights with coordinate sum at most `level`.
    pub fn dominant_weights_up_to(&self, level: u32) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        let mut cur = vec![0i64; self.rank];
        fn rec(i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
            if i == cur.len() {
                out.push(cur.clone());
                return;
            }
            for c in 0..=left {
                cur[i] = c;
                rec(i + 1, left - c, cur, out);
            }
            cur[i] = 0;
        }
        rec(0, level as i64, &mut cur, &mut out);
        out.sort_by_key(|w| (w.iter().sum::<i64>(), std::cmp::Reverse(w.clone())));
        out
    }
}

/// Closure of the simple roots under root strings.
fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Root> {
    let n = cartan.len();
    let mut all: Vec<Root> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            Root(v)
        })
        .collect();
    let mut known: std::collections::HashSet<Vec<i64>> = all.iter().map(|r| r.0.clone()).collect();
    let mut layer: Vec<Root> = all.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                if beta.0.iter().enumerate().all(|(j, &k)| k == i64::from(j == i)) {
                    continue;
                }
                // p: how far the α_i-string extends below β
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down.0[i] -= 1;
                    if known.contains(&down.0) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pair: i64 = (0..n).map(|j| beta.0[j] * cartan[j][i]).sum();
                let q = p - pair;
                if q > 0 {
                    let mut up = beta.clone();
                    up.0[i] += 1;
                    if known.insert(up.0.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0)));
    all
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(spec: &str) -> RootSystem {
        let comps: Vec<Component> = spec.split_whitespace().map(|s| s.parse().unwrap()).collect();
        RootSystem::new(&comps).unwrap()
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(rs("A2").num_positive(), 3);
        assert_eq!(rs("C2").num_positive(), 4);
        assert_eq!(rs("A3").num_positive(), 6);
        for spec in ["A1", "A4", "B2", "B3", "C3", "D4", "D5", "E6", "E7", "E8", "F4", "G2"] {
            let c: Component = spec.parse().unwrap();
            assert_eq!(rs(spec).num_positive(), c.kind.positive_root_count(c.rank), "{spec}");
        }
        assert_eq!(rs("A1 A2").num_positive(), 4);
    }

    #[test]
    fn invalid_types_rejected() {
        for (k, r) in [(SimpleType::B, 1), (SimpleType::D, 2), (SimpleType::E, 5), (SimpleType::G, 3), (SimpleType::A, 0)] {
            assert!(matches!(
                RootSystem::new(&[Component::new(k, r)]),
                Err(Error::InvalidType { .. })
            ));
        }
    }

    #[test]
    fn cartan_shape() {
        for spec in ["A3", "B3", "C3", "D4", "F4", "G2", "E6"] {
            let r = rs(spec);
            for i in 0..r.rank() {
                for j in 0..r.rank() {
                    if i == j {
                        assert_eq!(r.cartan()[i][j], 2);
                    } else {
                        assert!(r.cartan()[i][j] <= 0);
                    }
                }
            }
        }
        // Bourbaki B2: α2 short
        assert_eq!(rs("B2").cartan(), &[vec![2, -2], vec![-1, 2]]);
        assert_eq!(rs("C2").cartan(), &[vec![2, -1], vec![-2, 2]]);
        assert_eq!(rs("G2").cartan(), &[vec![2, -1], vec![-3, 2]]);
    }

    #[test]
    fn simple_roots_come_first() {
        let r = rs("A3");
        assert_eq!(r.simple_roots(), &[Root(vec![1, 0, 0]), Root(vec![0, 1, 0]), Root(vec![0, 0, 1])]);
        assert_eq!(r.positive_roots().last().unwrap(), &Root(vec![1, 1, 1]));
    }

    #[test]
    fn pairing_examples() {
        let r = rs("A2");
        for i in 0..2 {
            for j in 0..2 {
                let p = r.pairing(&Weight::fundamental(2, i), r.simple_root(j)).unwrap();
                assert_eq!(p, rat(i64::from(i == j)));
            }
        }
        for a in r.positive_roots() {
            assert_eq!(r.pairing(&r.root_to_weight(a), a).unwrap(), rat(2));
        }
        let a1 = r.root_to_weight(r.simple_root(0));
        assert_eq!(r.pairing(&a1, r.simple_root(1)).unwrap(), rat(-1));
        assert_eq!(r.pairing(&a1, &Root(vec![0, 0])), Err(Error::ZeroRoot));
    }

    #[test]
    fn support_examples() {
        assert_eq!(Root(vec![1]).support(), vec![0]);
        assert_eq!(Root(vec![1, 1, 0]).support(), vec![0, 1]);
        assert_eq!(Root(vec![1, 1]).support(), vec![0, 1]);
    }

    #[test]
    fn dual_weight_examples() {
        let a1 = rs("A1");
        assert_eq!(a1.dual_weight(&Weight::from_ints(&[1])).unwrap(), Weight::from_ints(&[1]));
        let a3 = rs("A3");
        assert_eq!(
            a3.dual_weight(&Weight::from_ints(&[1, 0, 0])).unwrap(),
            Weight::from_ints(&[0, 0, 1])
        );
        let c2 = rs("C2");
        assert_eq!(c2.dual_weight(&Weight::from_ints(&[1, 0])).unwrap(), Weight::from_ints(&[1, 0]));
        let e6 = rs("E6");
        assert_eq!(
            e6.dual_weight(&Weight::from_ints(&[1, 0, 0, 0, 0, 0])).unwrap(),
            Weight::from_ints(&[0, 0, 0, 0, 0, 1])
        );
        assert!(matches!(
            a3.dual_weight(&Weight::from_ints(&[1, -1, 0])),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn reflections_preserve_roots() {
        for spec in ["A3", "B3", "C3", "D4", "G2", "F4", "A1 B2"] {
            let r = rs(spec);
            for a in r.positive_roots() {
                for b in r.positive_roots() {
                    let k = to_i64(&r.root_pairing(b, a).unwrap()).unwrap();
                    let img = b.sub(&a.scale(k));
                    assert!(r.is_root(&img), "{spec}: s_{a}({b}) = {img}");
                }
            }
        }
    }

    #[test]
    fn weyl_dimensions() {
        let a1 = rs("A1");
        assert_eq!(a1.weyl_dimension(&Weight::from_ints(&[2])).unwrap(), rat(3));
        let a3 = rs("A3");
        assert_eq!(a3.weyl_dimension(&Weight::from_ints(&[0, 1, 0])).unwrap(), rat(6));
        assert_eq!(a3.weyl_dimension(&Weight::from_ints(&[1, 0, 1])).unwrap(), rat(15));
        let c2 = rs("C2");
        assert_eq!(c2.weyl_dimension(&Weight::from_ints(&[0, 1])).unwrap(), rat(5));
        assert_eq!(c2.weyl_dimension(&Weight::from_ints(&[1, 0])).unwrap(), rat(4));
        let e8 = rs("E8");
        // adjoint representation of E8 is V(ω8)
        assert_eq!(e8.weyl_dimension(&Weight::from_ints(&[0, 0, 0, 0, 0, 0, 0, 1])).unwrap(), rat(248));
    }

    #[test]
    fn dominant_enumeration() {
        let r = rs("A2");
        let ws = r.dominant_weights_up_to(2);
        assert_eq!(ws.len(), 6);
        assert_eq!(ws[0], vec![0, 0]);
        assert_eq!(ws[1], vec![1, 0]);
    }

    #[test]
    fn display_forms() {
        assert_eq!(Weight::from_ints(&[1, 0, 1]).to_string(), "w1 + w3");
        assert_eq!(Weight::from_ints(&[0, 0]).to_string(), "0");
        assert_eq!(Weight::from_ints(&[2, -1]).to_string(), "2w1 - w2");
        assert_eq!(Root(vec![1, 1, 0]).to_string(), "a1+a2");
    }
}
