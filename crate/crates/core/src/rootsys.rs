//! Root systems of the simple Lie algebras in exact ambient coordinates.
//!
//! Realizations follow the Bourbaki tables: `A_n` lives in `n + 1` ambient
//! dimensions, `B_n`, `C_n`, `D_n` in `n`, `G_2` in 3 and `F_4`, `E_6`, `E_7`,
//! `E_8` in the standard 4 and 8 dimensional coordinates. One relabelling
//! applies: for `E_7` nodes 1 and 7 are exchanged, so `ω1` is the minuscule
//! 56-dimensional weight.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{self, Q};

/// A point of `t*` in ambient rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct WeightVector(Vec<Q>);

impl WeightVector {
    pub fn new(coords: Vec<Q>) -> Self {
        Self(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        Self(vec![Q::zero(); dim])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&c| Q::from_integer(c)).collect())
    }

    /// Builds a vector whose coordinates are `numerators[i] / denom`.
    pub fn from_fractions(numerators: &[i64], denom: i64) -> Self {
        Self(numerators.iter().map(|&c| Q::new(c, denom)).collect())
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = Q::one();
        v
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &Self) -> Q {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm2(&self) -> Q {
        self.dot(self)
    }

    pub fn scale(&self, s: Q) -> Self {
        Self(self.0.iter().map(|c| c * s).collect())
    }

    /// Concatenates blocks into a vector of a composite Cartan dual.
    pub fn concat<'a>(parts: impl IntoIterator<Item = &'a WeightVector>) -> Self {
        Self(parts.into_iter().flat_map(|p| p.0.iter().copied()).collect())
    }

    /// Places `self` into block position `offset` of a vector of length `total`.
    pub fn embed(&self, offset: usize, total: usize) -> Self {
        let mut out = Self::zeros(total);
        out.0[offset..offset + self.dim()].copy_from_slice(&self.0);
        out
    }

    pub fn slice(&self, offset: usize, len: usize) -> Self {
        Self(self.0[offset..offset + len].to_vec())
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for WeightVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|c| c.to_string()))
    }
}

impl Add for &WeightVector {
    type Output = WeightVector;
    fn add(self, rhs: &WeightVector) -> WeightVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        WeightVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &WeightVector {
    type Output = WeightVector;
    fn sub(self, rhs: &WeightVector) -> WeightVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        WeightVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &WeightVector {
    type Output = WeightVector;
    fn neg(self) -> WeightVector {
        WeightVector(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&WeightVector> for Q {
    type Output = WeightVector;
    fn mul(self, rhs: &WeightVector) -> WeightVector {
        rhs.scale(self)
    }
}

/// `2⟨λ,α⟩/⟨α,α⟩`.
pub fn coroot_pairing(lambda: &WeightVector, alpha: &WeightVector) -> Result<Q> {
    if lambda.dim() != alpha.dim() {
        return Err(Error::DimensionMismatch {
            expected: alpha.dim(),
            got: lambda.dim(),
        });
    }
    let n = alpha.norm2();
    if n.is_zero() {
        return Err(Error::ZeroRoot);
    }
    Ok(Q::from_integer(2) * lambda.dot(alpha) / n)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, serde::Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn is_valid_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

/// Parses a type name such as `"B6"` or `"E7"`.
pub fn parse_type(s: &str) -> Result<(Family, usize)> {
    let s = s.trim();
    let mut chars = s.chars();
    let fam: Family = chars
        .next()
        .ok_or_else(|| Error::Parse("empty type name".into()))?
        .to_string()
        .parse()?;
    let rank: usize = chars
        .as_str()
        .parse()
        .map_err(|_| Error::Parse(format!("bad rank in type '{s}'")))?;
    Ok((fam, rank))
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    ambient_dim: usize,
    simple_roots: Vec<WeightVector>,
    simple_coroots: Vec<WeightVector>,
    positive_roots: Vec<WeightVector>,
    roots: Vec<WeightVector>,
    root_set: HashSet<WeightVector>,
    fundamental_weights: Vec<WeightVector>,
    weyl_vector: WeightVector,
    cartan: Vec<Vec<i64>>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family && self.rank == other.rank
    }
}

impl Eq for RootSystem {}

fn simple_roots_for(family: Family, rank: usize) -> (usize, Vec<WeightVector>) {
    let n = rank;
    let diff = |dim: usize, i: usize, j: usize| {
        let mut v = WeightVector::zeros(dim);
        v.0[i] = Q::one();
        v.0[j] = -Q::one();
        v
    };
    match family {
        Family::A => (n + 1, (0..n).map(|i| diff(n + 1, i, i + 1)).collect()),
        Family::B | Family::C | Family::D => {
            let mut s: Vec<_> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            let last = match family {
                Family::B => WeightVector::unit(n, n - 1),
                Family::C => WeightVector::unit(n, n - 1).scale(Q::from_integer(2)),
                _ => &WeightVector::unit(n, n - 2) + &WeightVector::unit(n, n - 1),
            };
            s.push(last);
            (n, s)
        }
        Family::G => (
            3,
            vec![
                WeightVector::from_ints(&[1, -1, 0]),
                WeightVector::from_ints(&[-2, 1, 1]),
            ],
        ),
        Family::F => (
            4,
            vec![
                WeightVector::from_ints(&[0, 1, -1, 0]),
                WeightVector::from_ints(&[0, 0, 1, -1]),
                WeightVector::from_ints(&[0, 0, 0, 1]),
                WeightVector::from_fractions(&[1, -1, -1, -1], 2),
            ],
        ),
        Family::E => {
            let mut e8 = vec![
                WeightVector::from_fractions(&[1, -1, -1, -1, -1, -1, -1, 1], 2),
                WeightVector::from_ints(&[1, 1, 0, 0, 0, 0, 0, 0]),
            ];
            e8.extend((0..6).map(|i| diff(8, i + 1, i)));
            e8.truncate(n);
            if n == 7 {
                e8.swap(0, 6);
            }
            (8, e8)
        }
    }
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if !family.is_valid_rank(rank) {
            return Err(Error::InvalidType { family, rank });
        }
        let (ambient_dim, simple_roots) = simple_roots_for(family, rank);
        let two = Q::from_integer(2);
        let simple_coroots: Vec<WeightVector> = simple_roots.iter().map(|a| a.scale(two / a.norm2())).collect();
        let cartan: Vec<Vec<i64>> = simple_roots
            .iter()
            .map(|ai| {
                simple_coroots
                    .iter()
                    .map(|cj| {
                        let v = ai.dot(cj);
                        assert!(v.is_integer(), "non-integral Cartan entry");
                        v.to_integer()
                    })
                    .collect()
            })
            .collect();
        let cartan_q: Vec<Vec<Q>> = cartan
            .iter()
            .map(|r| r.iter().map(|&x| Q::from_integer(x)).collect())
            .collect();
        let inv = linalg::inverse(&cartan_q).expect("Cartan matrix is invertible");
        let fundamental_weights: Vec<WeightVector> = inv
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&simple_roots)
                    .fold(WeightVector::zeros(ambient_dim), |acc, (c, a)| &acc + &a.scale(*c))
            })
            .collect();

        let mut rs = RootSystem {
            family,
            rank,
            ambient_dim,
            simple_roots,
            simple_coroots,
            positive_roots: Vec::new(),
            roots: Vec::new(),
            root_set: HashSet::new(),
            fundamental_weights,
            weyl_vector: WeightVector::zeros(ambient_dim),
            cartan,
        };

        let mut all = BTreeSet::new();
        for a in &rs.simple_roots {
            all.extend(rs.weyl_orbit(a));
        }
        let mut positive: Vec<WeightVector> = all
            .iter()
            .filter(|r| rs.simple_root_coords(r).iter().all(|c| !c.is_negative()))
            .cloned()
            .collect();
        positive.sort_by(|a, b| rs.height(a).cmp(&rs.height(b)).then_with(|| b.cmp(a)));
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(|r| -r));
        let half = Q::new(1, 2);
        rs.weyl_vector = positive
            .iter()
            .fold(WeightVector::zeros(ambient_dim), |acc, r| &acc + r)
            .scale(half);
        rs.root_set = roots.iter().cloned().collect();
        rs.positive_roots = positive;
        rs.roots = roots;
        Ok(rs)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    pub fn simple_roots(&self) -> &[WeightVector] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[WeightVector] {
        &self.simple_coroots
    }

    /// Positive roots ordered by height, then descending lexicographically.
    pub fn positive_roots(&self) -> &[WeightVector] {
        &self.positive_roots
    }

    /// Positive roots followed by their negatives.
    pub fn roots(&self) -> &[WeightVector] {
        &self.roots
    }

    pub fn is_root(&self, v: &WeightVector) -> bool {
        self.root_set.contains(v)
    }

    pub fn fundamental_weights(&self) -> &[WeightVector] {
        &self.fundamental_weights
    }

    pub fn weyl_vector(&self) -> &WeightVector {
        &self.weyl_vector
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Expansion coefficients of `v` in the simple roots (assumes `v` in their span).
    pub fn simple_root_coords(&self, v: &WeightVector) -> Vec<Q> {
        self.fundamental_weights
            .iter()
            .zip(&self.simple_roots)
            .map(|(w, a)| Q::from_integer(2) * v.dot(w) / a.norm2())
            .collect()
    }

    /// Sum of the simple-root coefficients.
    pub fn height(&self, v: &WeightVector) -> Q {
        self.simple_root_coords(v).into_iter().sum()
    }

    /// Pairings `⟨v, α_i^∨⟩` with the simple coroots.
    pub fn dynkin_labels(&self, v: &WeightVector) -> Vec<Q> {
        self.simple_coroots.iter().map(|c| v.dot(c)).collect()
    }

    pub fn is_dominant(&self, v: &WeightVector) -> bool {
        self.dynkin_labels(v).iter().all(|x| !x.is_negative())
    }

    pub fn is_integral(&self, v: &WeightVector) -> bool {
        self.dynkin_labels(v).iter().all(|x| x.is_integer())
    }

    /// `Σ labels[i] ω_i`.
    pub fn weight_from_labels(&self, labels: &[i64]) -> Result<WeightVector> {
        if labels.len() != self.rank {
            return Err(Error::LabelCount {
                expected: self.rank,
                got: labels.len(),
            });
        }
        Ok(labels
            .iter()
            .zip(&self.fundamental_weights)
            .fold(WeightVector::zeros(self.ambient_dim), |acc, (&c, w)| {
                &acc + &w.scale(Q::from_integer(c))
            }))
    }

    /// Reflection in the `i`-th simple root.
    pub fn simple_reflection(&self, v: &WeightVector, i: usize) -> WeightVector {
        let p = v.dot(&self.simple_coroots[i]);
        if p.is_zero() {
            return v.clone();
        }
        v - &self.simple_roots[i].scale(p)
    }

    /// Reflection in an arbitrary nonzero vector.
    pub fn reflect(v: &WeightVector, alpha: &WeightVector) -> Result<WeightVector> {
        let p = coroot_pairing(v, alpha)?;
        Ok(v - &alpha.scale(p))
    }

    /// Orbit under the Weyl group, by breadth-first closure under simple reflections.
    pub fn weyl_orbit(&self, v: &WeightVector) -> BTreeSet<WeightVector> {
        let mut seen = HashSet::new();
        seen.insert(v.clone());
        let mut queue = VecDeque::from([v.clone()]);
        while let Some(w) = queue.pop_front() {
            for i in 0..self.rank {
                let r = self.simple_reflection(&w, i);
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        seen.into_iter().collect()
    }

    pub fn dominant_representative(&self, v: &WeightVector) -> WeightVector {
        let mut w = v.clone();
        while let Some(i) = (0..self.rank).find(|&i| w.dot(&self.simple_coroots[i]).is_negative()) {
            w = self.simple_reflection(&w, i);
        }
        w
    }

    /// Permutations of the nodes that preserve the Cartan matrix.
    pub fn diagram_automorphisms(&self) -> Vec<Vec<usize>> {
        fn extend(c: &[Vec<i64>], perm: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
            let k = perm.len();
            let n = c.len();
            if k == n {
                out.push(perm.clone());
                return;
            }
            for cand in 0..n {
                if used[cand] {
                    continue;
                }
                let ok = (0..k).all(|j| c[k][j] == c[cand][perm[j]] && c[j][k] == c[perm[j]][cand])
                    && c[k][k] == c[cand][cand];
                if ok {
                    used[cand] = true;
                    perm.push(cand);
                    extend(c, perm, used, out);
                    perm.pop();
                    used[cand] = false;
                }
            }
        }
        let mut out = Vec::new();
        extend(&self.cartan, &mut Vec::new(), &mut vec![false; self.rank], &mut out);
        out
    }

    /// Number of roots of each type, used as a table-driven check.
    pub fn classical_root_count(family: Family, rank: usize) -> Option<usize> {
        if !family.is_valid_rank(rank) {
            return None;
        }
        let n = rank;
        Some(match family {
            Family::A => n * (n + 1),
            Family::B | Family::C => 2 * n * n,
            Family::D => 2 * n * (n - 1),
            Family::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Family::F => 48,
            Family::G => 12,
        })
    }

    /// Standard Cartan matrix from the Dynkin diagram, in this crate's node order.
    pub fn standard_cartan(family: Family, rank: usize) -> Option<Vec<Vec<i64>>> {
        if !family.is_valid_rank(rank) {
            return None;
        }
        let n = rank;
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, cij: i64, cji: i64| {
            c[i][j] = cij;
            c[j][i] = cji;
        };
        match family {
            Family::A => (0..n - 1).for_each(|i| link(i, i + 1, -1, -1)),
            Family::B => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                // α_{n-1} long, α_n short
                link(n - 2, n - 1, -2, -1);
            }
            Family::C => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 2, n - 1, -1, -2);
            }
            Family::D => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 3, n - 1, -1, -1);
            }
            Family::G => link(0, 1, -1, -3),
            Family::F => {
                link(0, 1, -1, -1);
                link(1, 2, -2, -1);
                link(2, 3, -1, -1);
            }
            Family::E => {
                // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
                let mut edges = vec![(0, 2), (1, 3), (2, 3)];
                edges.extend((3..n - 1).map(|i| (i, i + 1)));
                for (i, j) in edges {
                    link(i, j, -1, -1);
                }
                if n == 7 {
                    c.swap(0, 6);
                    for row in c.iter_mut() {
                        row.swap(0, 6);
                    }
                }
            }
        }
        Some(c)
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Builds the standard realization of a simple root system.
pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    RootSystem::new(family, rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_types(max_rank: usize) -> Vec<(Family, usize)> {
        Family::ALL
            .iter()
            .flat_map(|&f| (1..=max_rank).filter(move |&n| f.is_valid_rank(n)).map(move |n| (f, n)))
            .collect()
    }

    #[test]
    fn a1_has_two_roots() {
        let rs = build_root_system(Family::A, 1).unwrap();
        assert_eq!(rs.ambient_dim(), 2);
        let roots: BTreeSet<_> = rs.roots().iter().cloned().collect();
        let expected: BTreeSet<_> = [WeightVector::from_ints(&[1, -1]), WeightVector::from_ints(&[-1, 1])]
            .into_iter()
            .collect();
        assert_eq!(roots, expected);
    }

    #[test]
    fn b2_and_g2_counts() {
        assert_eq!(build_root_system(Family::B, 2).unwrap().roots().len(), 8);
        let g2 = build_root_system(Family::G, 2).unwrap();
        assert_eq!(g2.roots().len(), 12);
        assert_eq!(g2.positive_roots().len(), 6);
    }

    #[test]
    fn invalid_types_rejected() {
        for (f, n) in [
            (Family::A, 0),
            (Family::B, 1),
            (Family::C, 1),
            (Family::D, 2),
            (Family::E, 5),
            (Family::E, 9),
            (Family::F, 3),
            (Family::G, 3),
        ] {
            let err = build_root_system(f, n).unwrap_err();
            assert!(err.to_string().contains("valid types"), "{err}");
        }
    }

    #[test]
    fn counts_and_cartan_matrices_match_tables() {
        for (f, n) in all_types(8) {
            let rs = build_root_system(f, n).unwrap();
            assert_eq!(Some(rs.roots().len()), RootSystem::classical_root_count(f, n), "{f}{n}");
            assert_eq!(rs.positive_roots().len() * 2, rs.roots().len());
            assert_eq!(
                rs.cartan_matrix(),
                RootSystem::standard_cartan(f, n).unwrap().as_slice(),
                "{f}{n}"
            );
        }
    }

    #[test]
    fn roots_are_closed_under_reflections() {
        for (f, n) in all_types(6) {
            let rs = build_root_system(f, n).unwrap();
            let set: HashSet<_> = rs.roots().iter().cloned().collect();
            for a in rs.roots() {
                for b in rs.roots() {
                    let r = RootSystem::reflect(b, a).unwrap();
                    assert!(set.contains(&r), "{f}{n}: s_{a}({b}) = {r}");
                }
            }
        }
    }

    #[test]
    fn positive_roots_are_nonnegative_integer_combinations() {
        for (f, n) in all_types(8) {
            let rs = build_root_system(f, n).unwrap();
            for r in rs.positive_roots() {
                for c in rs.simple_root_coords(r) {
                    assert!(c.is_integer() && !c.is_negative(), "{f}{n}: {r}");
                }
            }
            let pos: HashSet<_> = rs.positive_roots().iter().collect();
            for r in rs.positive_roots() {
                assert!(!pos.contains(&-r));
            }
        }
    }

    #[test]
    fn weyl_vector_pairs_to_one_with_simple_roots() {
        for (f, n) in all_types(8) {
            let rs = build_root_system(f, n).unwrap();
            for a in rs.simple_roots() {
                assert_eq!(coroot_pairing(rs.weyl_vector(), a).unwrap(), Q::one(), "{f}{n}");
            }
        }
    }

    #[test]
    fn fundamental_weights_are_dual_to_simple_coroots() {
        for (f, n) in all_types(8) {
            let rs = build_root_system(f, n).unwrap();
            for (i, w) in rs.fundamental_weights().iter().enumerate() {
                for (j, a) in rs.simple_roots().iter().enumerate() {
                    let expect = if i == j { Q::one() } else { Q::zero() };
                    assert_eq!(coroot_pairing(w, a).unwrap(), expect);
                }
            }
        }
    }

    #[test]
    fn coroot_pairing_examples() {
        let a = WeightVector::from_ints(&[1, -1, 0]);
        assert_eq!(coroot_pairing(&a, &a).unwrap(), Q::from_integer(2));
        let a1 = build_root_system(Family::A, 1).unwrap();
        assert_eq!(
            coroot_pairing(&a1.fundamental_weights()[0], &a1.simple_roots()[0]).unwrap(),
            Q::one()
        );
        let c3 = build_root_system(Family::C, 3).unwrap();
        let w3 = &c3.fundamental_weights()[2];
        assert_eq!(w3, &WeightVector::from_ints(&[1, 1, 1]));
        assert_eq!(
            coroot_pairing(w3, &WeightVector::from_ints(&[2, 0, 0])).unwrap(),
            Q::one()
        );
        assert_eq!(coroot_pairing(w3, &WeightVector::zeros(3)), Err(Error::ZeroRoot));
    }

    #[test]
    fn orbit_examples() {
        let b2 = build_root_system(Family::B, 2).unwrap();
        assert_eq!(b2.weyl_orbit(&WeightVector::zeros(2)).len(), 1);
        let orbit = b2.weyl_orbit(&WeightVector::from_ints(&[1, 0]));
        let expected: BTreeSet<_> = [[1, 0], [-1, 0], [0, 1], [0, -1]]
            .iter()
            .map(|c| WeightVector::from_ints(c))
            .collect();
        assert_eq!(orbit, expected);
        let a2 = build_root_system(Family::A, 2).unwrap();
        assert_eq!(a2.weyl_orbit(&a2.fundamental_weights()[0]).len(), 3);
    }

    #[test]
    fn orbits_contain_one_dominant_element() {
        let d4 = build_root_system(Family::D, 4).unwrap();
        let v = d4.weight_from_labels(&[1, 0, 1, 0]).unwrap();
        let orbit = d4.weyl_orbit(&v);
        assert_eq!(orbit.iter().filter(|w| d4.is_dominant(w)).count(), 1);
        for w in &orbit {
            for i in 0..d4.rank() {
                assert!(orbit.contains(&d4.simple_reflection(w, i)));
            }
        }
    }

    #[test]
    fn dominant_representative_examples() {
        let b2 = build_root_system(Family::B, 2).unwrap();
        assert_eq!(
            b2.dominant_representative(&WeightVector::from_ints(&[-1, 0])),
            WeightVector::from_ints(&[1, 0])
        );
        let a1 = build_root_system(Family::A, 1).unwrap();
        let w = a1.weight_from_labels(&[3]).unwrap();
        assert_eq!(a1.dominant_representative(&-&w), w);
        assert_eq!(a1.dominant_representative(&w), w);
    }

    #[test]
    fn e7_omega1_is_minuscule() {
        let e7 = build_root_system(Family::E, 7).unwrap();
        let w1 = &e7.fundamental_weights()[0];
        assert_eq!(e7.weyl_orbit(w1).len(), 56);
    }

    #[test]
    fn diagram_automorphism_counts() {
        let cases = [
            (Family::A, 1, 1),
            (Family::A, 4, 2),
            (Family::B, 3, 1),
            (Family::D, 4, 6),
            (Family::D, 5, 2),
            (Family::E, 6, 2),
            (Family::E, 7, 1),
        ];
        for (f, n, count) in cases {
            let rs = build_root_system(f, n).unwrap();
            assert_eq!(rs.diagram_automorphisms().len(), count, "{f}{n}");
        }
    }

    #[test]
    fn parse_type_names() {
        assert_eq!(parse_type("B6").unwrap(), (Family::B, 6));
        assert_eq!(parse_type("e7").unwrap(), (Family::E, 7));
        assert!(parse_type("X3").is_err());
        assert!(parse_type("B").is_err());
    }
}
