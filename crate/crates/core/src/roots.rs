//! Root systems of split semisimple Lie algebras in exact integer arithmetic.
//!
//! Roots are stored in the simple-root basis, weights in the fundamental-weight
//! basis. Node indices in the public API are 1-based, matching Dynkin-diagram
//! conventions; the coefficient vectors themselves are ordinary 0-based `Vec`s.
//!
//! The Cartan matrix convention is `C[i][j] = <alpha_j, alpha_i^vee>`, so that
//! column `i` of `C` holds the weight coordinates of the simple root `alpha_i`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Cartan–Killing family letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }

    fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 4,
        }
    }
}

/// A family letter together with a rank, e.g. `A4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if rank < family.min_rank() {
            return Err(Error::InvalidRank {
                family: family.letter(),
                rank,
            });
        }
        Ok(CartanType { family, rank })
    }

    pub fn a(rank: usize) -> Result<Self> {
        Self::new(Family::A, rank)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next() {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            _ => return Err(Error::UnsupportedType(s.to_string())),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::UnsupportedType(s.to_string()));
        }
        let rank = digits
            .parse::<usize>()
            .map_err(|_| Error::UnsupportedType(s.to_string()))?;
        CartanType::new(family, rank)
    }
}

macro_rules! coeff_vector {
    ($name:ident) => {
        impl $name {
            pub fn new(coeffs: Vec<i64>) -> Self {
                $name(coeffs)
            }

            pub fn zero(len: usize) -> Self {
                $name(vec![0; len])
            }

            pub fn coeffs(&self) -> &[i64] {
                &self.0
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn into_inner(self) -> Vec<i64> {
                self.0
            }

            /// Coefficient at a 1-based node index.
            pub fn at(&self, node: usize) -> i64 {
                self.0[node - 1]
            }

            pub fn checked_add(&self, other: &Self) -> Result<Self> {
                check_len(self.len(), other.len())?;
                self.0
                    .iter()
                    .zip(&other.0)
                    .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
                    .collect::<Result<Vec<_>>>()
                    .map($name)
            }

            pub fn checked_sub(&self, other: &Self) -> Result<Self> {
                check_len(self.len(), other.len())?;
                self.0
                    .iter()
                    .zip(&other.0)
                    .map(|(a, b)| a.checked_sub(*b).ok_or(Error::Overflow))
                    .collect::<Result<Vec<_>>>()
                    .map($name)
            }

            pub fn checked_scale(&self, k: i64) -> Result<Self> {
                self.0
                    .iter()
                    .map(|a| a.checked_mul(k).ok_or(Error::Overflow))
                    .collect::<Result<Vec<_>>>()
                    .map($name)
            }
        }

        impl Index<usize> for $name {
            type Output = i64;

            fn index(&self, i: usize) -> &i64 {
                &self.0[i]
            }
        }

        impl From<Vec<i64>> for $name {
            fn from(v: Vec<i64>) -> Self {
                $name(v)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                for (k, c) in self.0.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    };
}

/// A root in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(Vec<i64>);

/// A weight in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

coeff_vector!(Root);
coeff_vector!(Weight);

impl Root {
    /// The simple root `alpha_node` of a rank `rank` system.
    pub fn simple(rank: usize, node: usize) -> Self {
        let mut v = vec![0; rank];
        v[node - 1] = 1;
        Root(v)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && self.0.iter().any(|&c| c < 0)
    }

    pub fn negated(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    /// 1-based nodes with nonzero coefficient.
    pub fn support(&self) -> BTreeSet<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, _)| k + 1)
            .collect()
    }
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::LengthMismatch { expected, found });
    }
    Ok(())
}

/// Cartan matrix, positive roots and the squared root lengths needed to form coroots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    /// `(alpha_i, alpha_i)` normalised so the shortest simple root has length 1 or 2.
    norms: Vec<i64>,
    positive: Vec<Root>,
    positive_set: BTreeSet<Root>,
    rho: Weight,
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Self {
        let (cartan, norms) = cartan_data(cartan_type);
        let positive = enumerate_positive_roots(&cartan);
        let positive_set = positive.iter().cloned().collect();
        let rank = cartan_type.rank;
        RootSystem {
            cartan_type,
            cartan,
            norms,
            positive,
            positive_set,
            rho: Weight(vec![1; rank]),
        }
    }

    /// Build from a family letter and rank.
    pub fn build(family: Family, rank: usize) -> Result<Self> {
        Ok(Self::new(CartanType::new(family, rank)?))
    }

    /// `A_rank`.
    pub fn type_a(rank: usize) -> Result<Self> {
        Self::build(Family::A, rank)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn is_type_a(&self) -> bool {
        self.cartan_type.family == Family::A
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots sorted by height, then with `alpha_1`-heavy roots first.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// Positive roots followed by their negatives.
    pub fn roots(&self) -> impl Iterator<Item = Root> + '_ {
        self.positive
            .iter()
            .cloned()
            .chain(self.positive.iter().map(Root::negated))
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// Dimension of the Lie algebra.
    pub fn dim(&self) -> usize {
        self.rank() + 2 * self.positive.len()
    }

    pub fn is_root(&self, root: &Root) -> bool {
        if root.len() != self.rank() {
            return false;
        }
        if root.is_positive() {
            self.positive_set.contains(root)
        } else if root.is_negative() {
            self.positive_set.contains(&root.negated())
        } else {
            false
        }
    }

    pub fn check_node(&self, node: usize) -> Result<()> {
        if node == 0 || node > self.rank() {
            return Err(Error::NodeOutOfRange {
                index: node,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    /// Weight coordinates of a root: `w[j] = sum_i root[i] * C[j][i]`.
    pub fn root_to_weight(&self, root: &Root) -> Result<Weight> {
        check_len(self.rank(), root.len())?;
        let r = self.rank();
        let mut out = vec![0i64; r];
        for (j, slot) in out.iter_mut().enumerate() {
            let mut acc: i64 = 0;
            for i in 0..r {
                let term = root[i]
                    .checked_mul(self.cartan[j][i])
                    .ok_or(Error::Overflow)?;
                acc = acc.checked_add(term).ok_or(Error::Overflow)?;
            }
            *slot = acc;
        }
        Ok(Weight(out))
    }

    /// Simple reflection `s_node(w) = w - w[node] * alpha_node`.
    pub fn reflect(&self, node: usize, w: &Weight) -> Result<Weight> {
        self.check_node(node)?;
        check_len(self.rank(), w.len())?;
        let k = w.at(node);
        if k == 0 {
            return Ok(w.clone());
        }
        let alpha = self.simple_root_weight(node);
        w.checked_sub(&alpha.checked_scale(k)?)
    }

    /// Simple reflection acting on a root in root coordinates.
    pub fn reflect_root(&self, node: usize, root: &Root) -> Result<Root> {
        self.check_node(node)?;
        check_len(self.rank(), root.len())?;
        let row = &self.cartan[node - 1];
        let mut k: i64 = 0;
        for (c, b) in row.iter().zip(root.coeffs()) {
            k = k
                .checked_add(c.checked_mul(*b).ok_or(Error::Overflow)?)
                .ok_or(Error::Overflow)?;
        }
        let mut out = root.clone();
        out.0[node - 1] = out.0[node - 1].checked_sub(k).ok_or(Error::Overflow)?;
        Ok(out)
    }

    fn simple_root_weight(&self, node: usize) -> Weight {
        Weight(self.cartan.iter().map(|row| row[node - 1]).collect())
    }

    /// The pairing `<w, beta^vee>` of a weight with the coroot of a root.
    pub fn pairing(&self, w: &Weight, beta: &Root) -> Result<i64> {
        check_len(self.rank(), w.len())?;
        if !self.is_root(beta) {
            return Err(Error::NotARoot(beta.to_string()));
        }
        let r = self.rank();
        // <w, beta^vee> = 2 (w, beta) / (beta, beta), both sides scaled by 2.
        let mut num: i64 = 0;
        for i in 0..r {
            let t = beta[i]
                .checked_mul(w[i])
                .and_then(|x| x.checked_mul(self.norms[i]))
                .ok_or(Error::Overflow)?;
            num = num.checked_add(t).ok_or(Error::Overflow)?;
        }
        let mut den: i64 = 0;
        for i in 0..r {
            for j in 0..r {
                den += beta[i] * beta[j] * self.cartan[i][j] * self.norms[i];
            }
        }
        let num2 = num.checked_mul(2).ok_or(Error::Overflow)?;
        if den == 0 || num2 % den != 0 {
            return Err(Error::Internal(format!(
                "non-integral coroot pairing of {w} with {beta}"
            )));
        }
        Ok(num2 / den)
    }

    /// Reflection `s_beta(w) = w - <w, beta^vee> beta`.
    pub fn reflect_in_root(&self, beta: &Root, w: &Weight) -> Result<Weight> {
        let k = self.pairing(w, beta)?;
        w.checked_sub(&self.root_to_weight(beta)?.checked_scale(k)?)
    }
}

fn cartan_data(t: CartanType) -> (Vec<Vec<i64>>, Vec<i64>) {
    let r = t.rank;
    let mut c = vec![vec![0i64; r]; r];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let chain_end = if t.family == Family::D { r - 1 } else { r };
    for i in 0..chain_end.saturating_sub(1) {
        c[i][i + 1] = -1;
        c[i + 1][i] = -1;
    }
    let mut norms = vec![2i64; r];
    match t.family {
        Family::A => {}
        Family::B => {
            // alpha_r short
            c[r - 1][r - 2] = -2;
            norms[r - 1] = 1;
        }
        Family::C => {
            // alpha_r long
            c[r - 2][r - 1] = -2;
            norms = vec![1; r];
            norms[r - 1] = 2;
        }
        Family::D => {
            // fork: alpha_{r-2} joined to both alpha_{r-1} and alpha_r
            c[r - 3][r - 1] = -1;
            c[r - 1][r - 3] = -1;
        }
    }
    (c, norms)
}

/// Closure of the simple roots under adding simple roots, using root strings.
fn enumerate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Root> {
    let r = cartan.len();
    let mut known: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut level: Vec<Vec<i64>> = (1..=r).map(|k| Root::simple(r, k).0).collect();
    known.extend(level.iter().cloned());
    let mut all = level.clone();
    while !level.is_empty() {
        let mut next = BTreeSet::new();
        for beta in &level {
            for i in 0..r {
                // p: how far the alpha_i-string extends below beta
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pair: i64 = (0..r).map(|k| beta[k] * cartan[i][k]).sum();
                let q = p - pair;
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !known.contains(&up) {
                        next.insert(up);
                    }
                }
            }
        }
        known.extend(next.iter().cloned());
        level = next.into_iter().collect();
        all.extend(level.iter().cloned());
    }
    let mut roots: Vec<Root> = all.into_iter().map(Root).collect();
    roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0)));
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a(r: usize) -> RootSystem {
        RootSystem::type_a(r).unwrap()
    }

    #[test]
    fn a1_is_trivial() {
        let rs = a(1);
        assert_eq!(rs.positive_roots().len(), 1);
        assert_eq!(rs.cartan(), &[vec![2]]);
    }

    /// Independent enumeration: positive roots of A_r are e_a - e_b, a < b,
    /// i.e. contiguous runs of ones.
    fn brute_force_a_roots(r: usize) -> BTreeSet<Root> {
        let mut out = BTreeSet::new();
        for a in 0..r {
            for b in a..r {
                let mut v = vec![0; r];
                for slot in &mut v[a..=b] {
                    *slot = 1;
                }
                out.insert(Root(v));
            }
        }
        out
    }

    #[test]
    fn a_root_counts_match_contiguous_runs() {
        for r in 1..=8 {
            let rs = a(r);
            assert_eq!(rs.positive_roots().len(), r * (r + 1) / 2);
            let got: BTreeSet<Root> = rs.positive_roots().iter().cloned().collect();
            assert_eq!(got, brute_force_a_roots(r), "A{r}");
        }
        assert_eq!(a(4).positive_roots().len(), 10);
    }

    #[test]
    fn highest_root_of_a3() {
        assert!(a(3).is_root(&Root::new(vec![1, 1, 1])));
    }

    #[test]
    fn classical_root_counts() {
        // |Phi+| = r^2 for B and C, r(r-1) for D.
        for r in 2..=6 {
            assert_eq!(
                RootSystem::build(Family::B, r)
                    .unwrap()
                    .positive_roots()
                    .len(),
                r * r
            );
            assert_eq!(
                RootSystem::build(Family::C, r)
                    .unwrap()
                    .positive_roots()
                    .len(),
                r * r
            );
        }
        for r in 4..=7 {
            assert_eq!(
                RootSystem::build(Family::D, r)
                    .unwrap()
                    .positive_roots()
                    .len(),
                r * (r - 1)
            );
        }
        // B2 long/short: highest root alpha1 + 2 alpha2
        assert!(RootSystem::build(Family::B, 2)
            .unwrap()
            .is_root(&Root::new(vec![1, 2])));
        assert!(RootSystem::build(Family::C, 2)
            .unwrap()
            .is_root(&Root::new(vec![2, 1])));
    }

    #[test]
    fn bad_types_are_rejected() {
        assert!(matches!(
            RootSystem::type_a(0),
            Err(Error::InvalidRank { .. })
        ));
        assert!(matches!(
            "E6".parse::<CartanType>(),
            Err(Error::UnsupportedType(_))
        ));
        assert!(matches!(
            "D3".parse::<CartanType>(),
            Err(Error::InvalidRank { .. })
        ));
        assert_eq!("A4".parse::<CartanType>().unwrap().to_string(), "A4");
    }

    #[test]
    fn root_to_weight_reads_cartan_rows() {
        let rs = a(4);
        assert_eq!(
            rs.root_to_weight(&Root::simple(4, 2)).unwrap(),
            Weight(vec![-1, 2, -1, 0])
        );
        assert_eq!(
            rs.root_to_weight(&Root::simple(4, 4)).unwrap(),
            Weight(vec![0, 0, -1, 2])
        );
        assert_eq!(
            a(3).root_to_weight(&Root::new(vec![1, 1, 1])).unwrap(),
            Weight(vec![1, 0, 1])
        );
        assert!(matches!(
            rs.root_to_weight(&Root::new(vec![1, 0])),
            Err(Error::LengthMismatch {
                expected: 4,
                found: 2
            })
        ));
    }

    #[test]
    fn reflect_examples() {
        let rs = a(4);
        let w = Weight(vec![-1, 2, 1, 1]);
        let s = rs.reflect(2, &w).unwrap();
        assert_eq!(s, Weight(vec![1, -2, 3, 1]));
        assert_eq!(rs.reflect(2, &s).unwrap(), w);
        let fixed = Weight(vec![5, 0, -3, 2]);
        assert_eq!(rs.reflect(2, &fixed).unwrap(), fixed);
        assert_eq!(a(1).reflect(1, &Weight(vec![3])).unwrap(), Weight(vec![-3]));
        assert!(matches!(
            rs.reflect(5, &w),
            Err(Error::NodeOutOfRange { .. })
        ));
        assert!(matches!(
            rs.reflect(0, &w),
            Err(Error::NodeOutOfRange { .. })
        ));
    }

    #[test]
    fn overflow_is_an_error() {
        let rs = a(2);
        let w = Weight(vec![i64::MAX, 0]);
        assert_eq!(rs.reflect(1, &w), Err(Error::Overflow));
    }

    #[test]
    fn pairing_examples() {
        let rs = a(4);
        assert_eq!(
            rs.pairing(&Weight(vec![-1, 2, 1, 1]), &Root::simple(4, 2))
                .unwrap(),
            2
        );
        assert_eq!(
            rs.pairing(&Weight(vec![1, -2, 3, 1]), &Root::new(vec![0, 1, 1, 0]))
                .unwrap(),
            1
        );
        assert_eq!(
            rs.pairing(&Weight(vec![7, 0, -2, 1]), &Root::simple(4, 2))
                .unwrap(),
            0
        );
        assert!(matches!(
            rs.pairing(&Weight(vec![0, 0, 0, 0]), &Root::new(vec![1, 0, 1, 0])),
            Err(Error::NotARoot(_))
        ));
    }

    #[test]
    fn pairing_of_a_root_with_itself_is_two() {
        let mut systems = vec![];
        for r in 1..=6 {
            systems.push(a(r));
        }
        for r in 2..=5 {
            systems.push(RootSystem::build(Family::B, r).unwrap());
            systems.push(RootSystem::build(Family::C, r).unwrap());
        }
        systems.push(RootSystem::build(Family::D, 5).unwrap());
        for rs in &systems {
            for beta in rs.roots() {
                let w = rs.root_to_weight(&beta).unwrap();
                assert_eq!(
                    rs.pairing(&w, &beta).unwrap(),
                    2,
                    "{} {beta}",
                    rs.cartan_type()
                );
            }
        }
    }

    #[test]
    fn root_reflections_permute_roots() {
        let rs = RootSystem::build(Family::B, 3).unwrap();
        for beta in rs.roots() {
            for i in 1..=3 {
                assert!(rs.is_root(&rs.reflect_root(i, &beta).unwrap()));
            }
        }
    }

    #[test]
    fn type_a_pairing_is_support_sum() {
        let rs = a(5);
        let w = Weight(vec![3, -1, 4, -1, 5]);
        for beta in rs.positive_roots() {
            let expected: i64 = beta.support().iter().map(|&k| w.at(k)).sum();
            assert_eq!(rs.pairing(&w, beta).unwrap(), expected);
        }
    }

    proptest! {
        #[test]
        fn reflection_is_an_involution(
            r in 1usize..=6,
            node_seed in 0usize..64,
            coeffs in prop::collection::vec(-50i64..50, 6),
        ) {
            let rs = a(r);
            let node = node_seed % r + 1;
            let w = Weight(coeffs[..r].to_vec());
            let once = rs.reflect(node, &w).unwrap();
            prop_assert_eq!(rs.reflect(node, &once).unwrap(), w.clone());
            let diff = w.checked_sub(&once).unwrap();
            let alpha = rs.root_to_weight(&Root::simple(r, node)).unwrap();
            prop_assert_eq!(diff, alpha.checked_scale(w.at(node)).unwrap());
        }
    }
}
