//! Hyperexponentials and hyperlogarithms.
//!
//! The hyperexponential family `e^xi` iterates the map `a -> -1 + w^a`
//! transfinitely: `e^0` is the identity, `e^(xi+zeta) = e^xi . e^zeta`,
//! with continuity conditions pinning down limit stages. The family of
//! hyperlogarithms `l^xi` is its pointwise left adjoint and satisfies the
//! co-composition law `l^(xi+zeta) = l^zeta . l^xi`; `l^1` reads off the
//! last exponent of the normal form.

use crate::ordertype::{order_type, order_type_at, worm_of};
use crate::ordinal::{left_sub, Ordinal};

/// `e^level(alpha)` in closed form.
///
/// Writing `level = w^x1 + ... + w^xn` in normal form, the value for
/// `alpha > 0` is `phi(x1, phi(x2, ... phi(xn, a)))` where `a` is `alpha`
/// for successor levels and `-1 + alpha` for limit levels; both 0 and a
/// level of 0 are fixed immediately. The limit-level adjustment makes each
/// stage continuous: approaching from below enumerates fixed points
/// starting at index 0, not 1.
pub fn hyperexp(level: &Ordinal, alpha: &Ordinal) -> Ordinal {
    if alpha.is_zero() || level.is_zero() {
        return alpha.clone();
    }
    let mut acc = if level.is_limit() {
        left_sub(&Ordinal::one(), alpha).unwrap()
    } else {
        alpha.clone()
    };
    for exponent in level.cnf_exponents().iter().rev() {
        acc = Ordinal::veblen(exponent, &acc);
    }
    acc
}

/// `e^level(alpha)` computed through the worm calculus instead of the
/// closed form: the order type of the canonical worm of type `alpha`
/// shifted up by `level`. Kept as an independent route for cross-checks.
pub fn hyperexp_via_worms(level: &Ordinal, alpha: &Ordinal) -> Ordinal {
    order_type(&worm_of(alpha).shift_up(level))
}

/// `l^level(alpha)`: the level-`level` order type of any worm whose base
/// order type is `alpha`. This is the left adjoint of [`hyperexp`]:
/// `l^xi(e^xi(a)) = a`, and `a < e^xi(b)` forces `l^xi(a) < b`.
pub fn hyperlog(level: &Ordinal, alpha: &Ordinal) -> Ordinal {
    order_type_at(&worm_of(alpha), level)
}
