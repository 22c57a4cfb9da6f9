//! Maximal chord diagrams: labelled and unlabelled enumeration.
//!
//! A chord diagram with `n` chords is a fixed-point-free involution on the
//! points `0..2n` of a circle. A diagram is *maximal* when it has a single
//! face walk, which forces `n = 2g` for genus `g`. This crate counts maximal
//! diagrams up to rotation (`d_star`), up to the full dihedral group
//! (`d_circle`), and those fixed by a reflection through points (`d_vertical`)
//! or through arc midpoints (`d_parallel`). The reflection-fixed diagrams are
//! put in bijection with rooted one-vertex one-face maps on orientable and
//! non-orientable surfaces, represented as [`SignedMatching`]s.
//!
//! Every closed form is cross-checked against a brute-force enumerator in
//! [`oracle`].

pub mod bijection;
pub mod cli;
pub mod counting;
pub mod diagram;
mod error;
pub mod oracle;

pub use bijection::{GluingReport, SignedMatching};
pub use counting::CountBig;
pub use diagram::{ChordDiagram, FaceWalkDecomposition, SymmetryElement, SymmetryKind};
pub use error::{Error, Result};
