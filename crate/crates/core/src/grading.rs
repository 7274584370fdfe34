//! The bigrading of a semisimple Lie algebra induced by a nested pair of
//! parabolic subalgebras `q ⊂ p ⊂ g`.
//!
//! A standard parabolic is encoded by a set of crossed simple-root nodes
//! `Σ`. The `Σ`-height of a root is the sum of its coefficients over `Σ`, and
//! `p`, `q` correspond to sets `Σ_p ⊆ Σ_q`. A root of `Σ_p`-height `i'` and
//! `Σ_q`-height `i' + i''` lives in bidegree `(i', i'')`; the Cartan subalgebra
//! lives in `(0, 0)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Neg};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots::{Root, RootSystem};

/// A set of 1-based Dynkin nodes.
pub type NodeSet = BTreeSet<usize>;

/// Parse a comma-separated list of 1-based nodes, e.g. `"1,4"`. The empty
/// string is the empty set.
pub fn parse_node_set(text: &str) -> Result<NodeSet> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(NodeSet::new());
    }
    let mut out = NodeSet::new();
    for part in text.split(',') {
        let node: usize = part
            .trim()
            .parse()
            .map_err(|_| Error::InvalidPair(format!("`{part}` is not a node index")))?;
        if !out.insert(node) {
            return Err(Error::InvalidPair(format!("node {node} listed twice")));
        }
    }
    Ok(out)
}

pub(crate) fn fmt_nodes(nodes: &NodeSet) -> String {
    let parts: Vec<String> = nodes.iter().map(|n| n.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Sum of the root's coefficients over the nodes in `sigma`.
pub fn sigma_height(root: &Root, sigma: &NodeSet) -> i64 {
    sigma.iter().filter_map(|&n| root.coeffs().get(n - 1)).sum()
}

/// Nested parabolics `q ⊂ p`, given by crossed nodes `sigma_p ⊆ sigma_q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicPair {
    rs: RootSystem,
    sigma_q: NodeSet,
    sigma_p: NodeSet,
}

impl ParabolicPair {
    pub fn new(rs: RootSystem, sigma_q: NodeSet, sigma_p: NodeSet) -> Result<Self> {
        for &n in sigma_q.iter().chain(&sigma_p) {
            rs.check_node(n)?;
        }
        if !sigma_p.is_subset(&sigma_q) {
            return Err(Error::InvalidPair(format!(
                "sigma_p = {} is not contained in sigma_q = {}",
                fmt_nodes(&sigma_p),
                fmt_nodes(&sigma_q)
            )));
        }
        Ok(ParabolicPair {
            rs,
            sigma_q,
            sigma_p,
        })
    }

    /// Convenience constructor from node slices.
    pub fn from_nodes(rs: RootSystem, sigma_q: &[usize], sigma_p: &[usize]) -> Result<Self> {
        Self::new(
            rs,
            sigma_q.iter().copied().collect(),
            sigma_p.iter().copied().collect(),
        )
    }

    /// `A_{n+1}` with `Σ_q = {1, n+1}`, `Σ_p = {1}`: Legendrean contact structures
    /// in dimension `2n+1`.
    pub fn legendrean(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPair("legendrean(n) needs n >= 1".into()));
        }
        Self::from_nodes(RootSystem::type_a(n + 1)?, &[1, n + 1], &[1])
    }

    /// `A_{n+1}` with `Σ_q = {1, 2}`, `Σ_p = {1}`: generalized path geometries in
    /// dimension `2n+1`.
    pub fn path_geometry(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPair("path-geometry(n) needs n >= 1".into()));
        }
        Self::from_nodes(RootSystem::type_a(n + 1)?, &[1, 2], &[1])
    }

    /// Every nested pair `Σ_p ⊆ Σ_q` on the given root system.
    pub fn all_pairs(rs: &RootSystem) -> Vec<ParabolicPair> {
        let r = rs.rank();
        let mut out = Vec::new();
        // each node is uncrossed, crossed for q only, or crossed for both
        let total = 3usize.pow(r as u32);
        for code in 0..total {
            let mut c = code;
            let mut sq = NodeSet::new();
            let mut sp = NodeSet::new();
            for node in 1..=r {
                match c % 3 {
                    1 => {
                        sq.insert(node);
                    }
                    2 => {
                        sq.insert(node);
                        sp.insert(node);
                    }
                    _ => {}
                }
                c /= 3;
            }
            out.push(ParabolicPair {
                rs: rs.clone(),
                sigma_q: sq,
                sigma_p: sp,
            });
        }
        out
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn sigma_q(&self) -> &NodeSet {
        &self.sigma_q
    }

    pub fn sigma_p(&self) -> &NodeSet {
        &self.sigma_p
    }

    /// `Σ_q \ Σ_p`, the crossed nodes of the complementary parabolic `p̃` with
    /// `q = p ∩ p̃`.
    pub fn relative_nodes(&self) -> NodeSet {
        self.sigma_q.difference(&self.sigma_p).copied().collect()
    }

    /// The pair `q ⊂ p̃` obtained by swapping in the complementary parabolic.
    pub fn complementary(&self) -> ParabolicPair {
        ParabolicPair {
            rs: self.rs.clone(),
            sigma_q: self.sigma_q.clone(),
            sigma_p: self.relative_nodes(),
        }
    }

    pub fn bidegree_of(&self, root: &Root) -> Bidegree {
        let hp = sigma_height(root, &self.sigma_p);
        let hq = sigma_height(root, &self.sigma_q);
        Bidegree::new(hp, hq - hp)
    }
}

impl fmt::Display for ParabolicPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} sigma_q={} sigma_p={}",
            self.rs.cartan_type(),
            fmt_nodes(&self.sigma_q),
            fmt_nodes(&self.sigma_p)
        )
    }
}

/// Bidegree `(i', i'')`. Ordered lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(i64, i64)", into = "(i64, i64)")]
pub struct Bidegree {
    pub i_prime: i64,
    pub i_dprime: i64,
}

impl Bidegree {
    pub const ZERO: Bidegree = Bidegree {
        i_prime: 0,
        i_dprime: 0,
    };

    pub const fn new(i_prime: i64, i_dprime: i64) -> Self {
        Bidegree { i_prime, i_dprime }
    }

    /// `Σ_q`-height, `i' + i''`.
    pub fn total(self) -> i64 {
        self.i_prime + self.i_dprime
    }

    /// Both indices share a sign (zero counts as either).
    pub fn is_sign_coherent(self) -> bool {
        !(self.i_prime > 0 && self.i_dprime < 0 || self.i_prime < 0 && self.i_dprime > 0)
    }

    /// Lies in `q = ⊕_{i', i'' ≥ 0}`.
    pub fn in_q(self) -> bool {
        self.i_prime >= 0 && self.i_dprime >= 0
    }

    /// Lies in `p = ⊕_{i' ≥ 0}`.
    pub fn in_p(self) -> bool {
        self.i_prime >= 0
    }

    /// Lies in the range of `p/q`, i.e. `(0, i'')` with `i'' < 0`.
    pub fn is_relative_tangent(self) -> bool {
        self.i_prime == 0 && self.i_dprime < 0
    }
}

impl From<(i64, i64)> for Bidegree {
    fn from((a, b): (i64, i64)) -> Self {
        Bidegree::new(a, b)
    }
}

impl From<Bidegree> for (i64, i64) {
    fn from(d: Bidegree) -> Self {
        (d.i_prime, d.i_dprime)
    }
}

impl Add for Bidegree {
    type Output = Bidegree;

    fn add(self, rhs: Bidegree) -> Bidegree {
        Bidegree::new(self.i_prime + rhs.i_prime, self.i_dprime + rhs.i_dprime)
    }
}

impl Neg for Bidegree {
    type Output = Bidegree;

    fn neg(self) -> Bidegree {
        Bidegree::new(-self.i_prime, -self.i_dprime)
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i_prime, self.i_dprime)
    }
}

/// The component `g_(i',i'')`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BigradedComponent {
    pub degree: Bidegree,
    pub roots: Vec<Root>,
    pub includes_cartan: bool,
    pub dim: usize,
}

/// Nonzero components of the bigrading, keyed by bidegree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bigrading {
    pair: ParabolicPair,
    components: BTreeMap<Bidegree, BigradedComponent>,
}

/// Sort every signed root into its bidegree.
pub fn bigrade(pair: &ParabolicPair) -> Bigrading {
    let rs = pair.root_system();
    let mut components: BTreeMap<Bidegree, BigradedComponent> = BTreeMap::new();
    components.insert(
        Bidegree::ZERO,
        BigradedComponent {
            degree: Bidegree::ZERO,
            roots: Vec::new(),
            includes_cartan: true,
            dim: rs.rank(),
        },
    );
    for root in rs.roots() {
        let degree = pair.bidegree_of(&root);
        let comp = components
            .entry(degree)
            .or_insert_with(|| BigradedComponent {
                degree,
                roots: Vec::new(),
                includes_cartan: false,
                dim: 0,
            });
        comp.roots.push(root);
        comp.dim += 1;
    }
    Bigrading {
        pair: pair.clone(),
        components,
    }
}

impl Bigrading {
    pub fn pair(&self) -> &ParabolicPair {
        &self.pair
    }

    pub fn components(&self) -> &BTreeMap<Bidegree, BigradedComponent> {
        &self.components
    }

    pub fn component(&self, d: Bidegree) -> Option<&BigradedComponent> {
        self.components.get(&d)
    }

    /// Dimension of `g_(i',i'')`, zero if absent.
    pub fn dim(&self, d: Bidegree) -> usize {
        self.components.get(&d).map_or(0, |c| c.dim)
    }

    pub fn degrees(&self) -> impl Iterator<Item = Bidegree> + '_ {
        self.components.keys().copied()
    }

    pub fn total_dim(&self) -> usize {
        self.components.values().map(|c| c.dim).sum()
    }

    /// Sum of dimensions of components whose bidegree satisfies `pred`.
    pub fn dim_where(&self, pred: impl Fn(Bidegree) -> bool) -> usize {
        self.components
            .values()
            .filter(|c| pred(c.degree))
            .map(|c| c.dim)
            .sum()
    }

    /// Smallest and largest first index present.
    pub fn i_prime_bounds(&self) -> (i64, i64) {
        let lo = self.components.keys().map(|d| d.i_prime).min().unwrap_or(0);
        let hi = self.components.keys().map(|d| d.i_prime).max().unwrap_or(0);
        (lo, hi)
    }
}

/// One basis element of `g` as seen by the combinatorial bracket check.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum RootOrCartan {
    Root(Root),
    Cartan,
}

impl fmt::Display for RootOrCartan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootOrCartan::Root(r) => write!(f, "{r}"),
            RootOrCartan::Cartan => write!(f, "h"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AdditivityViolation {
    /// The bracket lands in a component other than the one of summed bidegree.
    WrongComponent {
        left: RootOrCartan,
        right: RootOrCartan,
        expected: Bidegree,
        found: Bidegree,
    },
    /// A root of the system is missing from every component.
    MissingRoot(Root),
    /// A bracket that must vanish by the mixed-sign rule does not.
    MixedSignBracket { left: Root, right: Root },
}

impl fmt::Display for AdditivityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdditivityViolation::WrongComponent {
                left,
                right,
                expected,
                found,
            } => write!(f, "[{left}, {right}] lies in {found}, expected {expected}"),
            AdditivityViolation::MissingRoot(r) => write!(f, "root {r} has no component"),
            AdditivityViolation::MixedSignBracket { left, right } => {
                write!(f, "[{left}, {right}] should vanish by sign")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AdditivityReport {
    pub pairs_checked: usize,
    pub violations: Vec<AdditivityViolation>,
}

impl AdditivityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check the bracket compatibility of the bigrading on root level: `α + β`
/// (when a root, or `0` when `β = -α`) must sit in bidegree
/// `deg α + deg β`, and no root may arise from `g_(0,i'') × g_(i',0)` with
/// `i'`, `i''` of opposite sign.
pub fn verify_bracket_additivity(bg: &Bigrading) -> AdditivityReport {
    let mut report = AdditivityReport::default();
    let rs = bg.pair().root_system();
    let index: BTreeMap<&Root, Bidegree> = bg
        .components
        .values()
        .flat_map(|c| c.roots.iter().map(move |r| (r, c.degree)))
        .collect();

    for (&alpha, &da) in &index {
        // [h, e_alpha] is a multiple of e_alpha, so it stays in deg alpha
        report.pairs_checked += 1;
        if pair_degree(bg, alpha) != da {
            report.violations.push(AdditivityViolation::WrongComponent {
                left: RootOrCartan::Cartan,
                right: RootOrCartan::Root(alpha.clone()),
                expected: da,
                found: pair_degree(bg, alpha),
            });
        }
        for (&beta, &db) in &index {
            report.pairs_checked += 1;
            let expected = da + db;
            let sum = alpha.checked_add(beta).expect("root coefficients are tiny");
            if sum.coeffs().iter().all(|&c| c == 0) {
                if expected != Bidegree::ZERO
                    || !bg
                        .component(Bidegree::ZERO)
                        .is_some_and(|c| c.includes_cartan)
                {
                    report.violations.push(AdditivityViolation::WrongComponent {
                        left: RootOrCartan::Root(alpha.clone()),
                        right: RootOrCartan::Root(beta.clone()),
                        expected,
                        found: Bidegree::ZERO,
                    });
                }
                continue;
            }
            if !rs.is_root(&sum) {
                continue;
            }
            let Some(&found) = index.get(&sum) else {
                report
                    .violations
                    .push(AdditivityViolation::MissingRoot(sum));
                continue;
            };
            if found != expected {
                report.violations.push(AdditivityViolation::WrongComponent {
                    left: RootOrCartan::Root(alpha.clone()),
                    right: RootOrCartan::Root(beta.clone()),
                    expected,
                    found,
                });
            }
            let mixed = da.i_prime == 0
                && db.i_dprime == 0
                && ((db.i_prime > 0 && da.i_dprime < 0) || (db.i_prime < 0 && da.i_dprime > 0));
            if mixed {
                report
                    .violations
                    .push(AdditivityViolation::MixedSignBracket {
                        left: alpha.clone(),
                        right: beta.clone(),
                    });
            }
        }
    }
    report
}

fn pair_degree(bg: &Bigrading, root: &Root) -> Bidegree {
    bg.pair().bidegree_of(root)
}

/// The subalgebras described by sign conditions on bidegrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Subalgebra {
    P,
    PPlus,
    P0,
    Q,
    QPlus,
    Q0,
}

impl Subalgebra {
    pub const ALL: [Subalgebra; 6] = [
        Subalgebra::P,
        Subalgebra::PPlus,
        Subalgebra::P0,
        Subalgebra::Q,
        Subalgebra::QPlus,
        Subalgebra::Q0,
    ];

    pub fn contains(self, d: Bidegree) -> bool {
        match self {
            Subalgebra::P => d.i_prime >= 0,
            Subalgebra::PPlus => d.i_prime > 0,
            Subalgebra::P0 => d.i_prime == 0,
            Subalgebra::Q => d.i_prime >= 0 && d.i_dprime >= 0,
            Subalgebra::QPlus => d.total() > 0,
            Subalgebra::Q0 => d == Bidegree::ZERO,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Subalgebra::P => "p",
            Subalgebra::PPlus => "p_plus",
            Subalgebra::P0 => "p_0",
            Subalgebra::Q => "q",
            Subalgebra::QPlus => "q_plus",
            Subalgebra::Q0 => "q_0",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubalgebraInfo {
    pub bidegrees: Vec<Bidegree>,
    pub dim: usize,
}

/// Bidegree support and dimension of each of `p, p_+, p_0, q, q_+, q_0`.
pub fn subalgebra_profile(bg: &Bigrading) -> BTreeMap<Subalgebra, SubalgebraInfo> {
    Subalgebra::ALL
        .iter()
        .map(|&s| {
            let bidegrees: Vec<Bidegree> = bg.degrees().filter(|&d| s.contains(d)).collect();
            let dim = bidegrees.iter().map(|&d| bg.dim(d)).sum();
            (s, SubalgebraInfo { bidegrees, dim })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(r: usize, sq: &[usize], sp: &[usize]) -> ParabolicPair {
        ParabolicPair::from_nodes(RootSystem::type_a(r).unwrap(), sq, sp).unwrap()
    }

    #[test]
    fn sigma_height_examples() {
        let s1: NodeSet = [1].into();
        let s12: NodeSet = [1, 2].into();
        let a12 = Root::new(vec![1, 1, 0, 0]);
        assert_eq!(sigma_height(&a12, &s1), 1);
        assert_eq!(sigma_height(&a12, &s12), 2);
        assert_eq!(sigma_height(&Root::new(vec![-1, -1, -1, -1]), &s12), -2);
    }

    #[test]
    fn invalid_pairs() {
        let rs = RootSystem::type_a(4).unwrap();
        assert!(matches!(
            ParabolicPair::from_nodes(rs.clone(), &[1], &[1, 2]),
            Err(Error::InvalidPair(_))
        ));
        assert!(matches!(
            ParabolicPair::from_nodes(rs, &[5], &[]),
            Err(Error::NodeOutOfRange { .. })
        ));
        assert!(parse_node_set("1,1").is_err());
        assert!(parse_node_set("a").is_err());
        assert_eq!(parse_node_set("").unwrap(), NodeSet::new());
        assert_eq!(parse_node_set(" 1, 4 ").unwrap(), NodeSet::from([1, 4]));
    }

    #[test]
    fn legendrean_support_and_dims() {
        for n in 1..=5 {
            let bg = bigrade(&ParabolicPair::legendrean(n).unwrap());
            let support: BTreeSet<Bidegree> = bg.degrees().collect();
            let expected: BTreeSet<Bidegree> =
                [(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)]
                    .into_iter()
                    .map(Bidegree::from)
                    .collect();
            assert_eq!(support, expected);
            assert_eq!(bg.dim(Bidegree::new(-1, 0)), n);
            assert_eq!(bg.dim(Bidegree::new(0, -1)), n);
            assert_eq!(bg.dim(Bidegree::new(-1, -1)), 1);
        }
    }

    #[test]
    fn path_geometry_dims() {
        for n in 1..=5 {
            let bg = bigrade(&ParabolicPair::path_geometry(n).unwrap());
            assert_eq!(bg.dim(Bidegree::new(-1, 0)), 1);
            assert_eq!(bg.dim(Bidegree::new(0, -1)), n);
            assert_eq!(bg.dim(Bidegree::new(-1, -1)), n);
        }
    }

    #[test]
    fn equal_crossings_collapse_second_index() {
        for i in 1..=4 {
            let bg = bigrade(&pair(4, &[i], &[i]));
            assert!(bg.degrees().all(|d| d.i_dprime == 0));
        }
    }

    #[test]
    fn partition_and_duality() {
        for r in 1..=5 {
            let rs = RootSystem::type_a(r).unwrap();
            for p in ParabolicPair::all_pairs(&rs) {
                let bg = bigrade(&p);
                assert_eq!(bg.total_dim(), r * r + 2 * r);
                let rootcount: usize = bg.components().values().map(|c| c.roots.len()).sum();
                assert_eq!(rootcount, 2 * rs.positive_roots().len());
                for (d, c) in bg.components() {
                    assert!(d.is_sign_coherent(), "{p}: {d}");
                    assert_eq!(c.dim, c.roots.len() + if c.includes_cartan { r } else { 0 });
                    assert_eq!(bg.dim(-*d), c.dim, "{p}: {d}");
                    for root in &c.roots {
                        assert_eq!(sigma_height(root, p.sigma_p()), d.i_prime);
                        assert_eq!(sigma_height(root, p.sigma_q()), d.total());
                    }
                }
            }
        }
    }

    #[test]
    fn additivity_small_cases() {
        let bg = bigrade(&ParabolicPair::legendrean(3).unwrap());
        let rep = verify_bracket_additivity(&bg);
        assert!(rep.passed(), "{:?}", rep.violations);
        let bg = bigrade(&ParabolicPair::path_geometry(3).unwrap());
        assert!(verify_bracket_additivity(&bg).passed());
        let trivial = bigrade(&pair(4, &[], &[]));
        assert_eq!(trivial.components().len(), 1);
        assert!(verify_bracket_additivity(&trivial).passed());
    }

    #[test]
    fn additivity_detects_a_corrupted_grading() {
        let mut bg = bigrade(&ParabolicPair::path_geometry(2).unwrap());
        // move one root into the wrong bidegree
        let d = Bidegree::new(-1, -1);
        let stolen = bg.components.get_mut(&d).unwrap().roots.pop().unwrap();
        bg.components.get_mut(&d).unwrap().dim -= 1;
        let wrong = bg.components.get_mut(&Bidegree::new(-1, 0)).unwrap();
        wrong.roots.push(stolen);
        wrong.dim += 1;
        assert!(!verify_bracket_additivity(&bg).passed());
    }

    #[test]
    fn additivity_exhaustive_up_to_rank_six() {
        for r in 1..=6 {
            let rs = RootSystem::type_a(r).unwrap();
            for p in ParabolicPair::all_pairs(&rs) {
                let rep = verify_bracket_additivity(&bigrade(&p));
                assert!(rep.passed(), "{p}: {:?}", rep.violations.first());
            }
        }
    }

    #[test]
    fn profile_examples() {
        let bg = bigrade(&ParabolicPair::legendrean(3).unwrap());
        let prof = subalgebra_profile(&bg);
        assert_eq!(prof[&Subalgebra::Q].dim, 24 - 7);
        assert_eq!(prof[&Subalgebra::Q0].bidegrees, vec![Bidegree::ZERO]);

        let bg = bigrade(&ParabolicPair::path_geometry(3).unwrap());
        assert_eq!(subalgebra_profile(&bg)[&Subalgebra::PPlus].dim, 4);

        let bg = bigrade(&pair(4, &[2, 3], &[2, 3]));
        let prof = subalgebra_profile(&bg);
        assert_eq!(prof[&Subalgebra::Q], prof[&Subalgebra::P]);
        assert_eq!(prof[&Subalgebra::QPlus], prof[&Subalgebra::PPlus]);
    }

    #[test]
    fn profile_levi_splittings() {
        for r in 1..=5 {
            for p in ParabolicPair::all_pairs(&RootSystem::type_a(r).unwrap()) {
                let prof = subalgebra_profile(&bigrade(&p));
                let dim = |s| prof[&s].dim;
                assert_eq!(
                    dim(Subalgebra::P),
                    dim(Subalgebra::P0) + dim(Subalgebra::PPlus)
                );
                assert_eq!(
                    dim(Subalgebra::Q),
                    dim(Subalgebra::Q0) + dim(Subalgebra::QPlus)
                );
                assert!(dim(Subalgebra::Q) <= dim(Subalgebra::P));
            }
        }
    }

    #[test]
    fn complementary_pair_swaps_relative_nodes() {
        let p = ParabolicPair::path_geometry(3).unwrap();
        let c = p.complementary();
        assert_eq!(c.sigma_p(), &NodeSet::from([2]));
        assert_eq!(c.sigma_q(), p.sigma_q());
    }
}
