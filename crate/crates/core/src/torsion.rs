//! Algebraic conditions on the torsion of a geometry of type `(G, Q)`.
//!
//! The torsion is recorded only through its support: a list of components
//! `τ: g_(in1) × g_(in2) → g_(out)` between bidegrees of `g/q`. Components whose
//! output lies in `q` are curvature rather than torsion and are ignored by all
//! checks.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grading::{Bidegree, Bigrading, ParabolicPair};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TorsionComponent {
    pub in1: Bidegree,
    pub in2: Bidegree,
    pub out: Bidegree,
    pub tag: String,
}

impl TorsionComponent {
    /// Inputs are stored in increasing order.
    pub fn new(
        in1: Bidegree,
        in2: Bidegree,
        out: Bidegree,
        tag: impl Into<String>,
    ) -> Result<Self> {
        let c = TorsionComponent {
            in1: in1.min(in2),
            in2: in1.max(in2),
            out,
            tag: tag.into(),
        };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        for d in [self.in1, self.in2] {
            if d.in_q() {
                return Err(Error::InvalidTorsion(format!(
                    "input {d} of {} lies in q",
                    self.tag
                )));
            }
        }
        Ok(())
    }

    pub fn is_torsion(&self) -> bool {
        !self.out.in_q()
    }

    fn inputs(&self) -> [(Bidegree, Bidegree); 2] {
        [(self.in1, self.in2), (self.in2, self.in1)]
    }
}

impl fmt::Display for TorsionComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} x {} -> {}",
            self.tag, self.in1, self.in2, self.out
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionSupport {
    pub geometry: String,
    pub components: Vec<TorsionComponent>,
    /// Whether the full curvature is asserted to vanish on `T_ρM × T_ρM`.
    /// Not decidable from the torsion support; catalogs set it, custom
    /// supports may leave it unset.
    #[serde(default)]
    pub curvature_vanishes_on_relative: Option<bool>,
}

impl TorsionSupport {
    pub fn new(geometry: impl Into<String>, components: Vec<TorsionComponent>) -> Result<Self> {
        let ts = TorsionSupport {
            geometry: geometry.into(),
            components,
            curvature_vanishes_on_relative: None,
        };
        ts.validate()?;
        Ok(ts)
    }

    pub fn empty(geometry: impl Into<String>) -> Self {
        TorsionSupport {
            geometry: geometry.into(),
            components: Vec::new(),
            curvature_vanishes_on_relative: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.components
            .iter()
            .try_for_each(TorsionComponent::validate)
    }

    /// Additionally require every bidegree to occur in `bg`.
    pub fn validate_against(&self, bg: &Bigrading) -> Result<()> {
        self.validate()?;
        for c in &self.components {
            for d in [c.in1, c.in2, c.out] {
                if bg.component(d).is_none() {
                    return Err(Error::InvalidTorsion(format!(
                        "{} uses bidegree {d}, which does not occur for {}",
                        c.tag,
                        bg.pair()
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let mut ts: TorsionSupport = serde_json::from_str(text).map_err(|e| Error::Parse {
            text: "torsion support".into(),
            reason: e.to_string(),
        })?;
        for c in &mut ts.components {
            if c.in2 < c.in1 {
                std::mem::swap(&mut c.in1, &mut c.in2);
            }
        }
        ts.validate()?;
        Ok(ts)
    }

    pub fn without(&self, tag: &str) -> Self {
        let mut ts = self.clone();
        ts.components.retain(|c| c.tag != tag);
        ts
    }

    fn torsion(&self) -> impl Iterator<Item = &TorsionComponent> {
        self.components.iter().filter(|c| c.is_torsion())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorsionVerdict {
    pub ok: bool,
    pub violators: Vec<TorsionComponent>,
}

impl TorsionVerdict {
    fn from_violators(mut violators: Vec<TorsionComponent>) -> Self {
        violators.sort();
        violators.dedup();
        TorsionVerdict {
            ok: violators.is_empty(),
            violators,
        }
    }
}

/// `T_ρM` is involutive iff `τ(T_ρM, T_ρM) ⊂ T_ρM`.
pub fn involutivity_check(ts: &TorsionSupport) -> TorsionVerdict {
    TorsionVerdict::from_violators(
        ts.torsion()
            .filter(|c| {
                c.in1.is_relative_tangent() && c.in2.is_relative_tangent() && c.out.i_prime < 0
            })
            .cloned()
            .collect(),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strictness {
    /// `τ(T_ρM, T^{i'}_P M) ⊂ T^{i'}_P M`
    NonStrict,
    /// `τ(T_ρM, T^{i'}_P M) ⊂ T^{i'+1}_P M`
    Strict,
}

/// Check `τ(T_ρM, T^{i'}_P M) ⊂ T^{i'}_P M` (or `T^{i'+1}_P M` when strict).
pub fn filtration_preservation_check(
    ts: &TorsionSupport,
    i_prime: i64,
    strictness: Strictness,
) -> Result<TorsionVerdict> {
    let bound = match strictness {
        Strictness::NonStrict if i_prime <= 0 => i_prime,
        Strictness::Strict if i_prime < 0 => i_prime + 1,
        _ => {
            return Err(Error::InvalidTorsion(format!(
                "filtration index {i_prime} out of range for {strictness:?} check"
            )))
        }
    };
    let violators = ts
        .torsion()
        .filter(|c| {
            c.inputs().iter().any(|(rel, other)| {
                rel.is_relative_tangent() && other.i_prime >= i_prime && c.out.i_prime < bound
            })
        })
        .cloned()
        .collect();
    Ok(TorsionVerdict::from_violators(violators))
}

/// Hypotheses for a local leaf space of `T_ρM` carrying an induced geometry:
/// `part1` asks for the non-strict condition for all `i' ≤ 0`, `part2` for the
/// strict one for all `i' < 0` together with involutivity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeafSpaceVerdict {
    pub part1: bool,
    pub part2: bool,
    pub involutive: bool,
    pub violators: Vec<TorsionComponent>,
}

pub fn leaf_space_check(ts: &TorsionSupport, bg: &Bigrading) -> LeafSpaceVerdict {
    let lo = bg.i_prime_bounds().0.min(0);
    let lo = ts
        .components
        .iter()
        .flat_map(|c| [c.in1.i_prime, c.in2.i_prime, c.out.i_prime])
        .fold(lo, i64::min);
    let mut violators = Vec::new();
    let mut part1 = true;
    for ip in lo..=0 {
        let v = filtration_preservation_check(ts, ip, Strictness::NonStrict)
            .expect("index within range");
        part1 &= v.ok;
        violators.extend(v.violators);
    }
    let mut strict = true;
    for ip in lo..0 {
        let v =
            filtration_preservation_check(ts, ip, Strictness::Strict).expect("index within range");
        strict &= v.ok;
        violators.extend(v.violators);
    }
    let inv = involutivity_check(ts);
    violators.extend(inv.violators);
    violators.sort();
    violators.dedup();
    LeafSpaceVerdict {
        part1,
        part2: strict && inv.ok,
        involutive: inv.ok,
        violators,
    }
}

pub const LAMBDA2_E_F: &str = "Λ²E*⊗F";
pub const LAMBDA2_F_E: &str = "Λ²F*⊗E";

/// Built-in supports for the two worked geometries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Catalog {
    Legendrean(usize),
    PathGeometry(usize),
}

impl Catalog {
    pub fn pair(self) -> Result<ParabolicPair> {
        match self {
            Catalog::Legendrean(n) => ParabolicPair::legendrean(n),
            Catalog::PathGeometry(n) => ParabolicPair::path_geometry(n),
        }
    }

    /// Harmonic-curvature support. For Legendrean contact structures
    /// `involutive_f` drops the component obstructing involutivity of `F`.
    pub fn support(self, involutive_f: bool) -> Result<TorsionSupport> {
        let b = Bidegree::new;
        let mut ts = match self {
            Catalog::Legendrean(n) => {
                ParabolicPair::legendrean(n)?;
                let mut ts = TorsionSupport::new(
                    format!("legendrean({n})"),
                    vec![
                        TorsionComponent::new(b(-1, 0), b(-1, 0), b(0, -1), LAMBDA2_E_F)?,
                        TorsionComponent::new(b(0, -1), b(0, -1), b(-1, 0), LAMBDA2_F_E)?,
                        TorsionComponent::new(b(-1, 0), b(0, -1), b(0, 0), "E*⊗F*⊗L(E,E)")?,
                    ],
                )?;
                if involutive_f {
                    ts = ts.without(LAMBDA2_F_E);
                }
                ts.curvature_vanishes_on_relative = Some(involutive_f);
                ts
            }
            Catalog::PathGeometry(n) => {
                ParabolicPair::path_geometry(n)?;
                let mut ts = TorsionSupport::new(
                    format!("path-geometry({n})"),
                    vec![
                        TorsionComponent::new(b(-1, 0), b(-1, -1), b(0, -1), "E*⊗(TM/H)*⊗V")?,
                        TorsionComponent::new(b(0, -1), b(-1, -1), b(0, 0), "V*⊗(TM/H)*⊗L(V,V)")?,
                    ],
                )?;
                ts.curvature_vanishes_on_relative = Some(true);
                ts
            }
        };
        ts.components.sort();
        Ok(ts)
    }
}

impl FromStr for Catalog {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownCatalog(s.to_string());
        let s = s.trim();
        let open = s.find('(').ok_or_else(unknown)?;
        let inner = s[open + 1..].strip_suffix(')').ok_or_else(unknown)?;
        let n: usize = inner.trim().parse().map_err(|_| unknown())?;
        match &s[..open] {
            "legendrean" => Ok(Catalog::Legendrean(n)),
            "path-geometry" => Ok(Catalog::PathGeometry(n)),
            _ => Err(unknown()),
        }
    }
}

impl fmt::Display for Catalog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Catalog::Legendrean(n) => write!(f, "legendrean({n})"),
            Catalog::PathGeometry(n) => write!(f, "path-geometry({n})"),
        }
    }
}
