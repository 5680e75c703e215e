//! Deciding the consistency orderings between worms.
//!
//! `A < B` at level 0 means `B` proves the 0-consistency of `A`; at level
//! `xi` it means `B` proves the `xi`-consistency of `A`. Level 0 is linear
//! up to provable equivalence and is decided purely syntactically here,
//! without computing order types. Higher levels are preorders decided by
//! reduction to level-0 data on heads and remainders.

use std::cmp::Ordering;

use crate::ordertype::order_type_at;
use crate::ordinal::Ordinal;
use crate::worm::Worm;

/// Outcome of comparing two worms in the base consistency ordering.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrderRelation {
    Lt,
    Eq,
    Gt,
}

impl OrderRelation {
    pub fn reverse(self) -> OrderRelation {
        match self {
            OrderRelation::Lt => OrderRelation::Gt,
            OrderRelation::Eq => OrderRelation::Eq,
            OrderRelation::Gt => OrderRelation::Lt,
        }
    }
}

impl From<Ordering> for OrderRelation {
    fn from(o: Ordering) -> OrderRelation {
        match o {
            Ordering::Less => OrderRelation::Lt,
            Ordering::Equal => OrderRelation::Eq,
            Ordering::Greater => OrderRelation::Gt,
        }
    }
}

impl std::fmt::Display for OrderRelation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            OrderRelation::Lt => "LT",
            OrderRelation::Eq => "EQ",
            OrderRelation::Gt => "GT",
        })
    }
}

/// Strict base-level order `a < b`, by syntactic reduction:
///
/// * the empty worm is strictly below every other worm;
/// * a shared positive lower bound on all entries can be subtracted
///   entry-wise without changing the relation;
/// * `0 . b'` is the immediate successor of `b'`, so `a < 0 . b'` iff
///   `a <= b'`;
/// * a worm whose entries never reach 0 is a limit from below, so
///   `0 . a' < b` iff `a' < b` for such `b`;
/// * otherwise split both sides at the first 0: `a < b` iff `a` is below
///   `b`'s remainder outright, or `a`'s remainder is below `b` and `a`'s
///   head is below `b`'s head.
///
/// Each rule shrinks the combined multiset of entries (or the total
/// length), so the recursion terminates.
fn lt0(a: &Worm, b: &Worm) -> bool {
    if b.is_empty() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    let min = a.entries().iter().chain(b.entries()).min().unwrap();
    if !min.is_zero() {
        let min = min.clone();
        return lt0(&a.shift_down(&min).unwrap(), &b.shift_down(&min).unwrap());
    }
    let one = Ordinal::one();
    if b.entries()[0].is_zero() {
        let b_rest = Worm::new(b.entries()[1..].to_vec());
        return !lt0(&b_rest, a);
    }
    if a.entries()[0].is_zero() {
        let a_rest = Worm::new(a.entries()[1..].to_vec());
        return lt0(&a_rest, b);
    }
    let (a_head, a_rem) = a.decompose(&one);
    let (b_head, b_rem) = b.decompose(&one);
    lt0(a, &b_rem) || (lt0(&a_rem, b) && lt0(&a_head, &b_head))
}

/// Compares two worms in the base consistency ordering, which is linear up
/// to provable equivalence.
pub fn compare_worms(a: &Worm, b: &Worm) -> OrderRelation {
    if lt0(a, b) {
        OrderRelation::Lt
    } else if lt0(b, a) {
        OrderRelation::Gt
    } else {
        OrderRelation::Eq
    }
}

/// Provable equivalence: neither worm is strictly below the other.
pub fn equiv(a: &Worm, b: &Worm) -> bool {
    compare_worms(a, b) == OrderRelation::Eq
}

/// Strict order `a < b` at level `level`: `b` proves the
/// `level`-consistency of `a`.
///
/// Decided by comparing the order types of the level heads and checking
/// that `b` proves `a`'s remainder. The remainder starts with an entry
/// strictly below `level`, so the recursion descends along a strictly
/// decreasing level and terminates.
pub fn lt_at(a: &Worm, b: &Worm, level: &Ordinal) -> bool {
    if order_type_at(a, level) >= order_type_at(b, level) {
        return false;
    }
    let rem = a.remainder(level);
    match rem.entries().split_first() {
        None => true,
        Some((first, rest)) => {
            debug_assert!(first < level);
            lt_at(&Worm::new(rest.to_vec()), b, first)
        }
    }
}
