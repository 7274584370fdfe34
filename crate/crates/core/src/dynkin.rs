//! Crossed Dynkin diagram labels in a plain ASCII form.
//!
//! ```text
//! label := TYPE RANK '[' mark (',' mark)* ']' '(' int (',' int)* ')'
//! mark  := 'x' | 'o'
//! ```
//!
//! `A4[x,x,o,o](-2,1,0,0)` is the representation of the parabolic with nodes 1
//! and 2 crossed whose highest weight is `-2ω₁ + ω₂`. Parsing does not check
//! dominance; see [`validate_label`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grading::{fmt_nodes, NodeSet, ParabolicPair};
use crate::roots::{CartanType, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DynkinLabel {
    pub cartan_type: CartanType,
    pub crossed: NodeSet,
    pub coeffs: Weight,
}

impl DynkinLabel {
    pub fn new(cartan_type: CartanType, crossed: NodeSet, coeffs: Weight) -> Result<Self> {
        let rank = cartan_type.rank;
        if coeffs.len() != rank {
            return Err(Error::LengthMismatch {
                expected: rank,
                found: coeffs.len(),
            });
        }
        if let Some(&bad) = crossed.iter().find(|&&n| n == 0 || n > rank) {
            return Err(Error::NodeOutOfRange { index: bad, rank });
        }
        Ok(DynkinLabel {
            cartan_type,
            crossed,
            coeffs,
        })
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    /// Coefficients over uncrossed nodes, in node order.
    pub fn uncrossed_coeffs(&self) -> Vec<i64> {
        (1..=self.rank())
            .filter(|n| !self.crossed.contains(n))
            .map(|n| self.coeffs.at(n))
            .collect()
    }

    /// Uncrossed nodes carrying a negative coefficient.
    pub fn negative_uncrossed(&self) -> Vec<usize> {
        (1..=self.rank())
            .filter(|n| !self.crossed.contains(n) && self.coeffs.at(*n) < 0)
            .collect()
    }
}

/// Parse the ASCII label grammar.
pub fn parse_label(text: &str) -> Result<DynkinLabel> {
    let fail = |reason: &str| Error::Parse {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let s = text.trim();
    let open = s.find('[').ok_or_else(|| fail("missing `[`"))?;
    let cartan_type: CartanType = s[..open].parse().map_err(|e: Error| fail(&e.to_string()))?;
    let rest = &s[open + 1..];
    let close = rest.find(']').ok_or_else(|| fail("missing `]`"))?;
    let marks = &rest[..close];
    let rest = &rest[close + 1..];
    let weights = rest
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| fail("coefficients must follow as `(..)`"))?;

    let mut crossed = NodeSet::new();
    let mut n_marks = 0;
    for (k, m) in marks.split(',').enumerate() {
        match m.trim() {
            "x" => {
                crossed.insert(k + 1);
            }
            "o" => {}
            other => return Err(fail(&format!("node marker `{other}` is not x or o"))),
        }
        n_marks += 1;
    }
    if n_marks != cartan_type.rank {
        return Err(fail(&format!(
            "{} node markers for rank {}",
            n_marks, cartan_type.rank
        )));
    }
    let coeffs = weights
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<i64>()
                .map_err(|_| fail(&format!("`{}` is not an integer", c.trim())))
        })
        .collect::<Result<Vec<_>>>()?;
    if coeffs.len() != cartan_type.rank {
        return Err(fail(&format!(
            "{} coefficients for rank {}",
            coeffs.len(),
            cartan_type.rank
        )));
    }
    DynkinLabel::new(cartan_type, crossed, Weight::new(coeffs))
}

/// Canonical text form; inverse of [`parse_label`].
pub fn print_label(label: &DynkinLabel) -> String {
    label.to_string()
}

impl fmt::Display for DynkinLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let marks: Vec<&str> = (1..=self.rank())
            .map(|n| if self.crossed.contains(&n) { "x" } else { "o" })
            .collect();
        write!(
            f,
            "{}[{}]{}",
            self.cartan_type,
            marks.join(","),
            self.coeffs
        )
    }
}

impl FromStr for DynkinLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_label(s)
    }
}

impl Serialize for DynkinLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DynkinLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_label(&text).map_err(serde::de::Error::custom)
    }
}

/// Whether a label describes a representation of `P` or of `Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Role {
    P,
    Q,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum LabelVerdict {
    Valid,
    /// Uncrossed nodes with negative coefficients.
    Invalid {
        negative_nodes: Vec<usize>,
    },
}

impl LabelVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, LabelVerdict::Valid)
    }
}

/// Dominance check: a label is an irreducible `P`- (or `Q`-) representation
/// when its crossed nodes are `Σ_p` (or `Σ_q`) and every uncrossed
/// coefficient is nonnegative.
pub fn validate_label(
    label: &DynkinLabel,
    role: Role,
    pair: &ParabolicPair,
) -> Result<LabelVerdict> {
    let pair_type = pair.root_system().cartan_type();
    if label.cartan_type != pair_type {
        return Err(Error::LabelMismatch(format!(
            "label type {} but pair type {pair_type}",
            label.cartan_type
        )));
    }
    let expected = match role {
        Role::P => pair.sigma_p(),
        Role::Q => pair.sigma_q(),
    };
    if &label.crossed != expected {
        return Err(Error::LabelMismatch(format!(
            "{role:?}-label must cross {}, {label} crosses {}",
            fmt_nodes(expected),
            fmt_nodes(&label.crossed)
        )));
    }
    let negative_nodes = label.negative_uncrossed();
    Ok(if negative_nodes.is_empty() {
        LabelVerdict::Valid
    } else {
        LabelVerdict::Invalid { negative_nodes }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{Family, RootSystem};
    use proptest::prelude::*;

    #[test]
    fn parse_examples() {
        let l = parse_label("A4[x,x,o,o](-2,1,0,0)").unwrap();
        assert_eq!(l.crossed, NodeSet::from([1, 2]));
        assert_eq!(l.coeffs, Weight::new(vec![-2, 1, 0, 0]));

        let l = parse_label("A4[x,o,o,o](-3,0,1,0)").unwrap();
        assert_eq!(l.crossed, NodeSet::from([1]));
        assert_eq!(l.coeffs, Weight::new(vec![-3, 0, 1, 0]));

        let l = parse_label("A1[x](0)").unwrap();
        assert_eq!(l.crossed, NodeSet::from([1]));
        assert_eq!(l.coeffs, Weight::new(vec![0]));
    }

    #[test]
    fn parse_errors() {
        for bad in [
            "A4[x,x,o](-2,1,0,0)",
            "A4[x,x,o,o](-2,1,0)",
            "A4[x,y,o,o](0,0,0,0)",
            "A4[x,x,o,o]",
            "A4(x,x,o,o)(0,0,0,0)",
            "E6[x,o,o,o,o,o](0,0,0,0,0,0)",
            "A0[](0)",
            "A2[x,o](1,z)",
            "A2[x,o](1,2",
            "",
        ] {
            assert!(
                matches!(parse_label(bad), Err(Error::Parse { .. })),
                "{bad}"
            );
        }
    }

    #[test]
    fn print_examples() {
        for text in ["A4[x,x,o,o](-2,1,0,0)", "A4[x,o,o,o](-3,0,1,0)", "A1[x](0)"] {
            assert_eq!(print_label(&parse_label(text).unwrap()), text);
        }
        let ty = CartanType::a(4).unwrap();
        let l =
            DynkinLabel::new(ty, NodeSet::from([1, 2]), Weight::new(vec![0, -3, 2, 0])).unwrap();
        assert_eq!(print_label(&l), "A4[x,x,o,o](0,-3,2,0)");
        let l = DynkinLabel::new(ty, NodeSet::from([1, 2]), Weight::zero(4)).unwrap();
        assert_eq!(print_label(&l), "A4[x,x,o,o](0,0,0,0)");
    }

    #[test]
    fn whitespace_is_canonicalised() {
        let l = parse_label(" A3[ x , o , o ]( 1, -2 ,3 ) ").unwrap();
        assert_eq!(l.to_string(), "A3[x,o,o](1,-2,3)");
    }

    #[test]
    fn out_of_range_nodes_rejected_by_constructor() {
        let ty = CartanType::a(2).unwrap();
        assert!(matches!(
            DynkinLabel::new(ty, NodeSet::from([3]), Weight::zero(2)),
            Err(Error::NodeOutOfRange { .. })
        ));
    }

    #[test]
    fn validate_examples() {
        let path = ParabolicPair::path_geometry(3).unwrap();
        let l = parse_label("A4[x,o,o,o](-2,1,0,0)").unwrap();
        assert_eq!(
            validate_label(&l, Role::P, &path).unwrap(),
            LabelVerdict::Valid
        );

        let l = parse_label("A4[x,o,o,o](0,-1,0,0)").unwrap();
        assert_eq!(
            validate_label(&l, Role::P, &path).unwrap(),
            LabelVerdict::Invalid {
                negative_nodes: vec![2]
            }
        );

        let l = parse_label("A4[x,x,o,o](2,-5,1,0)").unwrap();
        assert!(validate_label(&l, Role::Q, &path).unwrap().is_valid());
        assert!(matches!(
            validate_label(&l, Role::P, &path),
            Err(Error::LabelMismatch(_))
        ));

        let b = ParabolicPair::from_nodes(RootSystem::build(Family::B, 4).unwrap(), &[1], &[1])
            .unwrap();
        let l = parse_label("A4[x,o,o,o](0,0,0,0)").unwrap();
        assert!(matches!(
            validate_label(&l, Role::P, &b),
            Err(Error::LabelMismatch(_))
        ));
    }

    fn arb_label() -> impl Strategy<Value = DynkinLabel> {
        (
            1usize..=8,
            prop::sample::select(vec![Family::A, Family::B, Family::C, Family::D]),
        )
            .prop_flat_map(|(r, fam)| {
                let r = match fam {
                    Family::A => r,
                    Family::B | Family::C => r.max(2),
                    Family::D => r.max(4),
                };
                (
                    Just(CartanType::new(fam, r).unwrap()),
                    prop::collection::vec(any::<bool>(), r),
                    prop::collection::vec(-1000i64..1000, r),
                )
            })
            .prop_map(|(ty, marks, coeffs)| {
                let crossed = marks
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x)
                    .map(|(k, _)| k + 1)
                    .collect();
                DynkinLabel::new(ty, crossed, Weight::new(coeffs)).unwrap()
            })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(label in arb_label()) {
            let text = print_label(&label);
            let back = parse_label(&text).unwrap();
            prop_assert_eq!(&back, &label);
            prop_assert_eq!(print_label(&back), text);
        }

        #[test]
        fn validation_is_dominance(label in arb_label()) {
            let rs = RootSystem::new(label.cartan_type);
            let pair = ParabolicPair::new(rs, label.crossed.clone(), label.crossed.clone()).unwrap();
            let verdict = validate_label(&label, Role::P, &pair).unwrap();
            let dominant = label.uncrossed_coeffs().iter().all(|&c| c >= 0);
            prop_assert_eq!(verdict.is_valid(), dominant);
        }
    }
}
