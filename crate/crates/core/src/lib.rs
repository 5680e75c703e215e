//! Symbolic calculus for worms: iterated consistency statements over a
//! transfinite hierarchy of provability operators.
//!
//! A worm is a finite sequence of ordinals, written outermost entry first;
//! the empty worm is the trivially true statement. The crate decides the
//! consistency orderings between worms at every ordinal level, computes the
//! order type of a worm inside each ordering, evaluates hyperexponentials
//! and hyperlogarithms, and produces the full consistency sequence of a worm
//! as a finitely supported step function.
//!
//! All ordinals are notations below Gamma_0 in Veblen normal form, so every
//! computation here is exact symbolic manipulation; nothing is approximated.

pub mod compare;
mod error;
pub mod hyper;
pub mod oracle;
pub mod ordertype;
pub mod ordinal;
pub mod sequences;
pub mod textio;
pub mod worm;

pub use compare::{compare_worms, equiv, lt_at, OrderRelation};
pub use error::Error;
pub use hyper::{hyperexp, hyperexp_via_worms, hyperlog};
pub use ordertype::{order_type, order_type_at, worm_of};
pub use ordinal::{left_sub, Ordinal, OrdinalClass, OrdinalKind, VeblenTerm};
pub use sequences::{consistency_sequence, Step, StepFunction};
pub use textio::{parse_ordinal, parse_worm, print_ordinal, print_worm, ParseError};
pub use worm::Worm;
