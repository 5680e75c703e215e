//! Order types of worms inside the consistency orderings.
//!
//! The base ordering on worms modulo equivalence is a well order of type
//! Gamma_0 (restricted here to the notation system), and [`order_type`] is
//! the isomorphism: it sends a worm to the ordinal describing its position.
//! [`worm_of`] is a right inverse picking a canonical representative, and
//! [`order_type_at`] positions a worm inside the level-`xi` ordering by
//! looking only at its level head.

use crate::hyper::hyperexp;
use crate::ordinal::Ordinal;
use crate::worm::Worm;

/// Position of `a` in the base consistency ordering.
///
/// The empty worm sits at 0. A worm whose entries all exceed 0 is a shifted
/// copy of a smaller ordering, handled by the hyperexponential of its
/// downshift. Otherwise the part after the first 0 is a strictly weaker
/// statement lexicographically dominated by the head, giving
/// `o(head . 0 . tail) = o(tail) + 1 + o(head)`.
pub fn order_type(a: &Worm) -> Ordinal {
    let Some(min) = a.min_entry() else {
        return Ordinal::zero();
    };
    if !min.is_zero() {
        let min = min.clone();
        return hyperexp(&min, &order_type(&a.shift_down(&min).unwrap()));
    }
    let (head, rem) = a.decompose(&Ordinal::one());
    // rem starts with the first 0 of a.
    let tail = Worm::new(rem.entries()[1..].to_vec());
    &order_type(&tail).succ() + &order_type(&head)
}

/// Position of `a` in the level-`level` consistency ordering: the order
/// type of the downshifted level head.
pub fn order_type_at(a: &Worm, level: &Ordinal) -> Ordinal {
    let head = a.head(level);
    order_type(&head.shift_down(level).unwrap())
}

/// The canonical worm of base order type `alpha`: all entries of the
/// result are built so that `order_type(worm_of(alpha)) = alpha`.
///
/// The recursion peels the last normal-form term `t` of `alpha`. A term
/// `w^b` contributes an upshifted copy of `worm_of(b)`; a term with Veblen
/// index `a >= 1` is a fixed point of `w^-` and contributes a copy of
/// `worm_of(1 + b)` shifted up by `w^a`, which realizes the `a`-th entry of
/// the fixed-point enumeration. The rest of `alpha` follows after a 0.
pub fn worm_of(alpha: &Ordinal) -> Worm {
    let terms = alpha.terms();
    let Some(t) = terms.last() else {
        return Worm::top();
    };
    let rest = Ordinal::from_terms(terms[..terms.len() - 1].to_vec());
    let (shift, inner) = if t.index().is_zero() {
        (Ordinal::one(), worm_of(t.arg()))
    } else {
        let shift = Ordinal::veblen(&Ordinal::zero(), t.index());
        (shift, worm_of(&(&Ordinal::one() + t.arg())))
    };
    inner
        .shift_up(&shift)
        .concat(&Worm::single(Ordinal::zero()))
        .concat(&worm_of(&rest))
}
