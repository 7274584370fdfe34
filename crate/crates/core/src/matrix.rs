//! Brute-force model of `sl(m)` by integer matrices, used to cross-check the
//! root-level bigrading.
//!
//! The crossed nodes of `Σ_q` cut `{1..m}` into consecutive blocks; the node
//! `k` separates row/column `k` from `k+1`. An entry in block `(R, C)` with
//! `R < C` corresponds to positive roots whose `Σ_q`-height is `C - R` and whose
//! `Σ_p`-height is the number of `Σ_p` boundaries between the two blocks. None
//! of this goes through [`RootSystem`](crate::roots::RootSystem).

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::grading::{Bidegree, Bigrading, ParabolicPair};

/// Block decomposition of `m × m` matrices with the bidegree of each block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockStructure {
    pub block_sizes: Vec<usize>,
    /// `bidegree_of_block[R][C]`.
    pub bidegree_of_block: Vec<Vec<Bidegree>>,
    block_of_index: Vec<usize>,
}

pub fn block_structure_from_pair(pair: &ParabolicPair) -> Result<BlockStructure> {
    let rs = pair.root_system();
    if !rs.is_type_a() {
        return Err(Error::RequiresTypeA(rs.cartan_type().to_string()));
    }
    let m = rs.rank() + 1;
    let cuts: Vec<usize> = pair.sigma_q().iter().copied().collect();
    let mut block_sizes = Vec::with_capacity(cuts.len() + 1);
    let mut prev = 0;
    for &c in cuts.iter().chain(std::iter::once(&m)) {
        block_sizes.push(c - prev);
        prev = c;
    }
    let mut block_of_index = Vec::with_capacity(m);
    for (b, &size) in block_sizes.iter().enumerate() {
        block_of_index.extend(std::iter::repeat_n(b, size));
    }
    let crosses_p: Vec<bool> = cuts.iter().map(|c| pair.sigma_p().contains(c)).collect();
    let nb = block_sizes.len();
    let mut bidegree_of_block = vec![vec![Bidegree::ZERO; nb]; nb];
    for (r, row) in bidegree_of_block.iter_mut().enumerate() {
        for (c, slot) in row.iter_mut().enumerate() {
            let (lo, hi) = (r.min(c), r.max(c));
            let q_height = (hi - lo) as i64;
            let p_height = crosses_p[lo..hi].iter().filter(|&&x| x).count() as i64;
            let d = Bidegree::new(p_height, q_height - p_height);
            *slot = if r <= c { d } else { -d };
        }
    }
    Ok(BlockStructure {
        block_sizes,
        bidegree_of_block,
        block_of_index,
    })
}

impl BlockStructure {
    /// Matrix size `m`.
    pub fn size(&self) -> usize {
        self.block_of_index.len()
    }

    /// Bidegree of matrix entry `(row, col)` (0-based).
    pub fn entry_bidegree(&self, row: usize, col: usize) -> Bidegree {
        self.bidegree_of_block[self.block_of_index[row]][self.block_of_index[col]]
    }

    pub fn bidegree(&self, x: BasisElement) -> Bidegree {
        match x {
            BasisElement::Unit { row, col } => self.entry_bidegree(row, col),
            BasisElement::Cartan { .. } => Bidegree::ZERO,
        }
    }

    /// The standard basis of `sl(m)`: off-diagonal units, then `E_kk - E_k+1,k+1`.
    pub fn basis(&self) -> Vec<BasisElement> {
        let m = self.size();
        let mut out = Vec::with_capacity(m * m - 1);
        for row in 0..m {
            for col in 0..m {
                if row != col {
                    out.push(BasisElement::Unit { row, col });
                }
            }
        }
        out.extend((0..m - 1).map(|k| BasisElement::Cartan { k }));
        out
    }

    /// Count basis elements per bidegree.
    pub fn block_dims(&self) -> BTreeMap<Bidegree, usize> {
        let mut dims = BTreeMap::new();
        for x in self.basis() {
            *dims.entry(self.bidegree(x)).or_insert(0) += 1;
        }
        dims
    }

    /// Render the block pattern, one row of blocks per line.
    pub fn render(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .bidegree_of_block
            .iter()
            .map(|row| row.iter().map(|d| d.to_string()).collect())
            .collect();
        let width = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(0);
        cells
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| format!("{s:>width$}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// A basis element of `sl(m)`; indices are 0-based matrix positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisElement {
    Unit { row: usize, col: usize },
    Cartan { k: usize },
}

impl BasisElement {
    pub fn matrix(self) -> SparseMatrix {
        let mut m = SparseMatrix::default();
        match self {
            BasisElement::Unit { row, col } => m.add(row, col, 1),
            BasisElement::Cartan { k } => {
                m.add(k, k, 1);
                m.add(k + 1, k + 1, -1);
            }
        }
        m
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisElement::Unit { row, col } => write!(f, "E{},{}", row + 1, col + 1),
            BasisElement::Cartan { k } => write!(f, "H{}", k + 1),
        }
    }
}

/// Integer matrix stored by nonzero entries.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    entries: BTreeMap<(usize, usize), i64>,
}

impl SparseMatrix {
    fn add(&mut self, row: usize, col: usize, v: i64) {
        let e = self.entries.entry((row, col)).or_insert(0);
        *e += v;
        if *e == 0 {
            self.entries.remove(&(row, col));
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), i64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn trace(&self) -> i64 {
        self.entries
            .iter()
            .filter(|((r, c), _)| r == c)
            .map(|(_, v)| v)
            .sum()
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut out = SparseMatrix::default();
        for (&(a, b), &x) in &self.entries {
            for (&(c, d), &y) in &other.entries {
                if b == c {
                    out.add(a, d, x * y);
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut out = self.clone();
        for (&(r, c), &v) in &other.entries {
            out.add(r, c, -v);
        }
        out
    }

    pub fn plus(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut out = self.clone();
        for (&(r, c), &v) in &other.entries {
            out.add(r, c, v);
        }
        out
    }

    /// `XY - YX`.
    pub fn commutator(&self, other: &SparseMatrix) -> SparseMatrix {
        self.mul(other).sub(&other.mul(self))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AuditViolation {
    /// A nonzero entry of `[X, Y]` sits in a block of the wrong bidegree.
    Bracket {
        x: BasisElement,
        y: BasisElement,
        entry: (usize, usize),
        expected: Bidegree,
        found: Bidegree,
    },
    /// The summed bidegree is not a component of the root-level bigrading.
    MissingComponent {
        x: BasisElement,
        y: BasisElement,
        degree: Bidegree,
    },
    /// Block-derived and root-derived dimensions disagree.
    Dimension {
        degree: Bidegree,
        from_blocks: usize,
        from_roots: usize,
    },
    /// `[p_+, g^(i',*)]` leaves `g^(i'+1,*)`.
    NotRaising {
        x: BasisElement,
        y: BasisElement,
        entry: (usize, usize),
        found: Bidegree,
    },
}

impl fmt::Display for AuditViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AuditViolation::Bracket {
                x,
                y,
                entry,
                expected,
                found,
            } => write!(
                f,
                "[{x},{y}] has entry ({},{}) in {found}, expected {expected}",
                entry.0 + 1,
                entry.1 + 1
            ),
            AuditViolation::MissingComponent { x, y, degree } => {
                write!(f, "[{x},{y}] is nonzero but g_{degree} is absent")
            }
            AuditViolation::Dimension {
                degree,
                from_blocks,
                from_roots,
            } => write!(
                f,
                "dim g_{degree}: {from_blocks} from blocks, {from_roots} from roots"
            ),
            AuditViolation::NotRaising { x, y, entry, found } => write!(
                f,
                "[{x},{y}] has entry ({},{}) in {found}",
                entry.0 + 1,
                entry.1 + 1
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AuditReport {
    pub pairs_checked: usize,
    pub violations: Vec<AuditViolation>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Evaluate `[X, Y]` for every ordered pair of basis elements and check that
/// each nonzero block lies in bidegree `deg X + deg Y`, then compare block
/// dimensions with the component dimensions of `bg`.
pub fn commutator_audit(bs: &BlockStructure, bg: &Bigrading) -> AuditReport {
    let mut report = AuditReport::default();
    let basis = bs.basis();
    let mats: Vec<SparseMatrix> = basis.iter().map(|x| x.matrix()).collect();
    for (i, &x) in basis.iter().enumerate() {
        for (j, &y) in basis.iter().enumerate() {
            report.pairs_checked += 1;
            let bracket = mats[i].commutator(&mats[j]);
            if bracket.is_zero() {
                continue;
            }
            let expected = bs.bidegree(x) + bs.bidegree(y);
            if bg.component(expected).is_none() {
                report.violations.push(AuditViolation::MissingComponent {
                    x,
                    y,
                    degree: expected,
                });
            }
            for ((r, c), _) in bracket.entries() {
                let found = bs.entry_bidegree(r, c);
                if found != expected {
                    report.violations.push(AuditViolation::Bracket {
                        x,
                        y,
                        entry: (r, c),
                        expected,
                        found,
                    });
                }
            }
        }
    }
    let blocks = bs.block_dims();
    let degrees: std::collections::BTreeSet<Bidegree> =
        blocks.keys().copied().chain(bg.degrees()).collect();
    for d in degrees {
        let from_blocks = blocks.get(&d).copied().unwrap_or(0);
        let from_roots = bg.dim(d);
        if from_blocks != from_roots {
            report.violations.push(AuditViolation::Dimension {
                degree: d,
                from_blocks,
                from_roots,
            });
        }
    }
    report
}

/// Check `[p_+, g^(i',*)] ⊂ g^(i'+1,*)` by explicit commutators.
pub fn p_plus_action_audit(bs: &BlockStructure, i_prime: i64) -> AuditReport {
    let mut report = AuditReport::default();
    let basis = bs.basis();
    let p_plus: Vec<BasisElement> = basis
        .iter()
        .copied()
        .filter(|&x| bs.bidegree(x).i_prime > 0)
        .collect();
    let filtered: Vec<BasisElement> = basis
        .iter()
        .copied()
        .filter(|&y| bs.bidegree(y).i_prime >= i_prime)
        .collect();
    for &x in &p_plus {
        let mx = x.matrix();
        for &y in &filtered {
            report.pairs_checked += 1;
            let bracket = mx.commutator(&y.matrix());
            for ((r, c), _) in bracket.entries() {
                let found = bs.entry_bidegree(r, c);
                if found.i_prime < i_prime + 1 {
                    report.violations.push(AuditViolation::NotRaising {
                        x,
                        y,
                        entry: (r, c),
                        found,
                    });
                }
            }
        }
    }
    report
}

/// `[X,[Y,Z]] + [Y,[Z,X]] + [Z,[X,Y]]`.
pub fn jacobiator(x: &SparseMatrix, y: &SparseMatrix, z: &SparseMatrix) -> SparseMatrix {
    x.commutator(&y.commutator(z))
        .plus(&y.commutator(&z.commutator(x)))
        .plus(&z.commutator(&x.commutator(y)))
}
