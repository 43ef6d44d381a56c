//! Catalan shape families and explicit bijections between them.
//!
//! Five families are modeled: right-swept trees, diagonal staircase
//! tilings, non-crossing arc diagrams, and the classical binary and planar
//! trees. Any size-n member of the first three is built by a unique
//! sequence of four constructors; recording that sequence as a
//! [`terms::Term`] and replaying it elsewhere gives the recursive
//! bijection [`alpha::alpha`]. A second, rule-based bijection between
//! trees and tilings lives in [`beta`], and [`verify::run_suite`] checks
//! every counting identity and bijectivity claim exhaustively at small
//! sizes.

pub mod alpha;
pub mod beta;
pub mod classical;
pub mod codec;
pub mod error;
pub mod model;
pub mod terms;
pub mod verify;

pub use error::Error;
pub use model::{
    ArcTree, BinaryTree, Family, PlanarTree, Rect, RightSweptTree, Shape, StaircaseTiling,
};
pub use terms::Term;
