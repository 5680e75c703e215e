//! Ordinal notations below Gamma_0.
//!
//! An [`Ordinal`] is a weakly decreasing sum of Veblen terms `phi(a, b)`.
//! `phi(0, b)` denotes `w^b`, so `phi(0, 0)` is 1 and finite ordinals are
//! sums of copies of it; `phi(a, b)` for `a >= 1` enumerates the common
//! fixed points of all `phi(c, -)` with `c < a`. Every ordinal below
//! Gamma_0 has exactly one such normal form, which makes structural
//! equality coincide with ordinal equality.

use std::cmp::Ordering;

use crate::error::Error;

/// A single Veblen term `phi(index, arg)`.
///
/// Normal form requires that `arg` is not itself a one-term ordinal whose
/// index exceeds `index` (such an argument would be a fixed point and the
/// outer `phi` would collapse onto it). Terms are built through
/// [`Ordinal::veblen`], which performs that collapse.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VeblenTerm {
    index: Ordinal,
    arg: Ordinal,
}

impl VeblenTerm {
    pub fn index(&self) -> &Ordinal {
        &self.index
    }

    pub fn arg(&self) -> &Ordinal {
        &self.arg
    }

    /// The term as a one-term ordinal.
    pub fn to_ordinal(&self) -> Ordinal {
        Ordinal {
            terms: vec![self.clone()],
        }
    }

    /// The exponent `e` with `w^e` equal to this term. Terms with index
    /// at least 1 are fixed points of `w^-`, hence their own exponent.
    pub fn exponent(&self) -> Ordinal {
        if self.index.is_zero() {
            self.arg.clone()
        } else {
            self.to_ordinal()
        }
    }

    fn is_one(&self) -> bool {
        self.index.is_zero() && self.arg.is_zero()
    }
}

/// An ordinal below Gamma_0 in Veblen normal form.
///
/// Invariants: the term sequence is weakly decreasing, and every term is
/// normal in the sense of [`VeblenTerm`]. The empty sum is 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ordinal {
    terms: Vec<VeblenTerm>,
}

/// Zero / successor / limit.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrdinalKind {
    Zero,
    Successor,
    Limit,
}

/// The result of [`Ordinal::classify`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrdinalClass {
    pub kind: OrdinalKind,
    /// Additively indecomposable: nonzero and closed under addition of
    /// smaller ordinals, i.e. exactly one normal-form term.
    pub indecomposable: bool,
    /// The exponents of the Cantor normal form `w^e1 + ... + w^en`.
    pub cnf_exponents: Vec<Ordinal>,
}

impl Ordinal {
    pub fn zero() -> Ordinal {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Ordinal {
        Ordinal::nat(1)
    }

    pub fn omega() -> Ordinal {
        Ordinal::veblen(&Ordinal::zero(), &Ordinal::one())
    }

    /// The finite ordinal `n`, a sum of `n` copies of `phi(0, 0)`.
    pub fn nat(n: u64) -> Ordinal {
        let one = VeblenTerm {
            index: Ordinal::zero(),
            arg: Ordinal::zero(),
        };
        Ordinal {
            terms: vec![one; n as usize],
        }
    }

    /// `phi(index, arg)`, collapsing onto `arg` when `arg` is already a
    /// fixed point of the function being applied.
    pub fn veblen(index: &Ordinal, arg: &Ordinal) -> Ordinal {
        if let [t] = arg.terms.as_slice() {
            if t.index > *index {
                return arg.clone();
            }
        }
        Ordinal {
            terms: vec![VeblenTerm {
                index: index.clone(),
                arg: arg.clone(),
            }],
        }
    }

    pub fn terms(&self) -> &[VeblenTerm] {
        &self.terms
    }

    /// Rebuilds an ordinal from terms already known to form a weakly
    /// decreasing normal sequence, e.g. a prefix of an existing ordinal.
    pub(crate) fn from_terms(terms: Vec<VeblenTerm>) -> Ordinal {
        let x = Ordinal { terms };
        debug_assert!(x.is_normal_form());
        x
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(n)` when the ordinal is the finite ordinal `n`.
    pub fn as_nat(&self) -> Option<u64> {
        if self.terms.iter().all(|t| t.is_one()) {
            Some(self.terms.len() as u64)
        } else {
            None
        }
    }

    pub fn succ(&self) -> Ordinal {
        self + &Ordinal::one()
    }

    /// Ordinal sum. Trailing terms of `self` smaller than the leading term
    /// of `rhs` are absorbed.
    pub fn add(&self, rhs: &Ordinal) -> Ordinal {
        let Some(lead) = rhs.terms.first() else {
            return self.clone();
        };
        let keep = self
            .terms
            .iter()
            .take_while(|t| term_cmp(t, lead) != Ordering::Less)
            .count();
        let mut terms = Vec::with_capacity(keep + rhs.terms.len());
        terms.extend_from_slice(&self.terms[..keep]);
        terms.extend_from_slice(&rhs.terms);
        Ordinal { terms }
    }

    /// Ordinal product, distributing over the right factor's normal form.
    pub fn mul(&self, rhs: &Ordinal) -> Ordinal {
        if self.is_zero() || rhs.is_zero() {
            return Ordinal::zero();
        }
        let lead_exp = self.terms[0].exponent();
        let mut acc = Ordinal::zero();
        let mut i = 0;
        while i < rhs.terms.len() {
            let t = &rhs.terms[i];
            let mut run = 1;
            while i + run < rhs.terms.len() && rhs.terms[i + run] == *t {
                run += 1;
            }
            i += run;
            if t.is_one() {
                acc = acc.add(&self.mul_nat(run as u64));
            } else {
                // self * w^e = w^(lead_exp + e) for e >= 1, repeated `run` times.
                let term = Ordinal::veblen(&Ordinal::zero(), &lead_exp.add(&t.exponent()));
                let mut piece = term.clone();
                for _ in 1..run {
                    piece = piece.add(&term);
                }
                acc = acc.add(&piece);
            }
        }
        acc
    }

    fn mul_nat(&self, n: u64) -> Ordinal {
        if n == 0 || self.is_zero() {
            return Ordinal::zero();
        }
        let lead = &self.terms[0];
        let lead_run = self.terms.iter().take_while(|t| *t == lead).count();
        // x * n repeats the leading run n - 1 extra times; the tail of x
        // survives only in the final copy.
        let mut terms = Vec::with_capacity(self.terms.len() + lead_run * (n as usize - 1));
        for _ in 1..n {
            terms.extend_from_slice(&self.terms[..lead_run]);
        }
        terms.extend_from_slice(&self.terms);
        Ordinal { terms }
    }

    /// Last exponent of the Cantor normal form; 0 for the ordinal 0.
    ///
    /// Fixed points of this map are exactly 0 and the one-term ordinals
    /// with index at least 1.
    pub fn last_exponent(&self) -> Ordinal {
        match self.terms.last() {
            None => Ordinal::zero(),
            Some(t) => t.exponent(),
        }
    }

    pub fn kind(&self) -> OrdinalKind {
        match self.terms.last() {
            None => OrdinalKind::Zero,
            Some(t) if t.is_one() => OrdinalKind::Successor,
            Some(_) => OrdinalKind::Limit,
        }
    }

    pub fn is_limit(&self) -> bool {
        self.kind() == OrdinalKind::Limit
    }

    pub fn is_indecomposable(&self) -> bool {
        self.terms.len() == 1
    }

    /// Exponents of the Cantor normal form, weakly decreasing.
    pub fn cnf_exponents(&self) -> Vec<Ordinal> {
        self.terms.iter().map(VeblenTerm::exponent).collect()
    }

    pub fn classify(&self) -> OrdinalClass {
        OrdinalClass {
            kind: self.kind(),
            indecomposable: self.is_indecomposable(),
            cnf_exponents: self.cnf_exponents(),
        }
    }

    /// Structural validity: weakly decreasing terms, all of them normal.
    /// Every public constructor maintains this; the checker exists so tests
    /// can assert closure.
    pub fn is_normal_form(&self) -> bool {
        self.terms
            .windows(2)
            .all(|w| term_cmp(&w[0], &w[1]) != Ordering::Less)
            && self.terms.iter().all(term_is_normal)
    }
}

fn term_is_normal(t: &VeblenTerm) -> bool {
    if !t.index.is_normal_form() || !t.arg.is_normal_form() {
        return false;
    }
    match t.arg.terms.as_slice() {
        [u] => u.index <= t.index,
        _ => true,
    }
}

/// The unique `e` with `x + e = y`, written `-x + y`. Defined when `x <= y`.
pub fn left_sub(x: &Ordinal, y: &Ordinal) -> Result<Ordinal, Error> {
    let mut i = 0;
    while i < x.terms.len() && i < y.terms.len() && x.terms[i] == y.terms[i] {
        i += 1;
    }
    let rest = |j: usize| Ordinal {
        terms: y.terms[j..].to_vec(),
    };
    if i == x.terms.len() {
        // x is a prefix sum of y; the remaining terms are the difference.
        return Ok(rest(i));
    }
    if i < y.terms.len() && term_cmp(&x.terms[i], &y.terms[i]) == Ordering::Less {
        // From the first divergence on, the whole tail of x is absorbed.
        return Ok(rest(i));
    }
    Err(Error::LeftSubUndefined {
        x: x.clone(),
        y: y.clone(),
    })
}

/// Compare a Veblen term with a whole ordinal, both taken as values.
fn cmp_ordinal_vs_term(x: &Ordinal, t: &VeblenTerm) -> Ordering {
    let Some(first) = x.terms.first() else {
        return Ordering::Less;
    };
    match term_cmp(first, t) {
        // A sum led by a strictly smaller indecomposable stays below t.
        Ordering::Less => Ordering::Less,
        Ordering::Greater => Ordering::Greater,
        Ordering::Equal => {
            if x.terms.len() == 1 {
                Ordering::Equal
            } else {
                Ordering::Greater
            }
        }
    }
}

/// The standard comparison of Veblen terms: the side with the smaller index
/// is compared by its argument against the other side's value.
fn term_cmp(s: &VeblenTerm, t: &VeblenTerm) -> Ordering {
    match s.index.cmp(&t.index) {
        Ordering::Equal => s.arg.cmp(&t.arg),
        Ordering::Less => cmp_ordinal_vs_term(&s.arg, t),
        Ordering::Greater => cmp_ordinal_vs_term(&t.arg, s).reverse(),
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Ordinal) -> Ordering {
        let mut i = 0;
        loop {
            match (self.terms.get(i), other.terms.get(i)) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(s), Some(t)) => match term_cmp(s, t) {
                    Ordering::Equal => i += 1,
                    neq => return neq,
                },
            }
        }
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Ordinal) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::ops::Add for &Ordinal {
    type Output = Ordinal;
    fn add(self, rhs: &Ordinal) -> Ordinal {
        Ordinal::add(self, rhs)
    }
}

impl std::ops::Mul for &Ordinal {
    type Output = Ordinal;
    fn mul(self, rhs: &Ordinal) -> Ordinal {
        Ordinal::mul(self, rhs)
    }
}
