//! Exact root-system combinatorics for a nested pair of standard parabolic
//! subalgebras `q ⊂ p` of a complex semisimple Lie algebra `g`.
//!
//! Starting from a Cartan type and two sets of crossed nodes the crate computes
//! the bigrading of `g`, the `P`-invariant filtration and its subquotient
//! modules, ranks of the tangent-bundle subquotients on a geometry of type
//! `(G, Q)`, algebraic torsion conditions, and the shape of relative BGG
//! sequences. Type `A` additionally has an explicit matrix model used as an
//! independent check.
//!
//! ```
//! use relbgg::{bigrade, Bidegree, ParabolicPair};
//!
//! let pair = ParabolicPair::path_geometry(3)?;
//! let bg = bigrade(&pair);
//! assert_eq!(bg.dim(Bidegree::new(-1, 0)), 1);
//! assert_eq!(bg.dim(Bidegree::new(-1, -1)), 3);
//! # Ok::<(), relbgg::Error>(())
//! ```

pub mod bgg;
pub mod dynkin;
pub mod error;
pub mod filtration;
pub mod grading;
pub mod matrix;
pub mod roots;
pub mod torsion;

pub use bgg::{
    affine_act, operator_order, relative_bgg_sequence, relative_hasse, BggSequence, HasseDiagram,
    WeylWord,
};
pub use dynkin::{parse_label, print_label, validate_label, DynkinLabel, LabelVerdict, Role};
pub use error::{Error, Result};
pub use filtration::{filtration, tangent_ranks, FiltrationReport, RankReport};
pub use grading::{
    bigrade, parse_node_set, subalgebra_profile, verify_bracket_additivity, Bidegree, Bigrading,
    NodeSet, ParabolicPair, Subalgebra,
};
pub use matrix::{
    block_structure_from_pair, commutator_audit, p_plus_action_audit, BlockStructure,
};
pub use roots::{CartanType, Family, Root, RootSystem, Weight};
pub use torsion::{
    filtration_preservation_check, involutivity_check, leaf_space_check, Catalog, LeafSpaceVerdict,
    Strictness, TorsionComponent, TorsionSupport, TorsionVerdict,
};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/roots.md")]
    mod roots {}
    #[doc = include_str!("../../../book/src/bigrading.md")]
    mod bigrading {}
    #[doc = include_str!("../../../book/src/filtration.md")]
    mod filtration {}
    #[doc = include_str!("../../../book/src/matrix-model.md")]
    mod matrix_model {}
    #[doc = include_str!("../../../book/src/dynkin-labels.md")]
    mod dynkin_labels {}
    #[doc = include_str!("../../../book/src/relative-bgg.md")]
    mod relative_bgg {}
    #[doc = include_str!("../../../book/src/torsion.md")]
    mod torsion {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
