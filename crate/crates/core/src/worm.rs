//! Worms: finite sequences of ordinals, outermost entry first.
//!
//! `[a, b, c]` abbreviates the statement "a-consistency of (b-consistency
//! of (c-consistency of truth))". The empty worm is truth itself. Entry
//! order matters: `[1, 0]` and `[0, 1]` are different worms with different
//! order types.

use crate::error::Error;
use crate::ordinal::Ordinal;

/// A worm. Structural equality is sequence equality, which is finer than
/// provable equivalence; see [`crate::compare::equiv`] for the latter.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Worm {
    entries: Vec<Ordinal>,
}

impl Worm {
    /// The empty worm.
    pub fn top() -> Worm {
        Worm {
            entries: Vec::new(),
        }
    }

    pub fn new(entries: Vec<Ordinal>) -> Worm {
        Worm { entries }
    }

    /// The one-entry worm `[a]`.
    pub fn single(a: Ordinal) -> Worm {
        Worm { entries: vec![a] }
    }

    pub fn entries(&self) -> &[Ordinal] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn first(&self) -> Option<&Ordinal> {
        self.entries.first()
    }

    pub fn min_entry(&self) -> Option<&Ordinal> {
        self.entries.iter().min()
    }

    /// Whether every entry is at least `level`.
    pub fn all_at_least(&self, level: &Ordinal) -> bool {
        self.entries.iter().all(|e| e >= level)
    }

    /// Splits into the longest prefix with entries at least `level` (the
    /// head) and the rest (the remainder).
    pub fn decompose(&self, level: &Ordinal) -> (Worm, Worm) {
        let cut = self.entries.iter().take_while(|e| *e >= level).count();
        (
            Worm {
                entries: self.entries[..cut].to_vec(),
            },
            Worm {
                entries: self.entries[cut..].to_vec(),
            },
        )
    }

    pub fn head(&self, level: &Ordinal) -> Worm {
        self.decompose(level).0
    }

    pub fn remainder(&self, level: &Ordinal) -> Worm {
        self.decompose(level).1
    }

    /// Everything after the first 0 entry; empty when there is none. The
    /// level-1 remainder is either empty or `0 . body`.
    pub fn body(&self) -> Worm {
        match self.entries.iter().position(Ordinal::is_zero) {
            None => Worm::top(),
            Some(i) => Worm {
                entries: self.entries[i + 1..].to_vec(),
            },
        }
    }

    pub fn concat(&self, other: &Worm) -> Worm {
        let mut entries = Vec::with_capacity(self.len() + other.len());
        entries.extend_from_slice(&self.entries);
        entries.extend_from_slice(&other.entries);
        Worm { entries }
    }

    /// Adds `level` on the left of every entry.
    pub fn shift_up(&self, level: &Ordinal) -> Worm {
        Worm {
            entries: self.entries.iter().map(|e| level + e).collect(),
        }
    }

    /// Removes `level` from the left of every entry. Defined only when
    /// every entry is at least `level`.
    pub fn shift_down(&self, level: &Ordinal) -> Result<Worm, Error> {
        let mut entries = Vec::with_capacity(self.len());
        for e in &self.entries {
            match crate::ordinal::left_sub(level, e) {
                Ok(d) => entries.push(d),
                Err(_) => {
                    return Err(Error::ShiftDownUndefined {
                        level: level.clone(),
                        entry: e.clone(),
                        worm: self.clone(),
                    })
                }
            }
        }
        Ok(Worm { entries })
    }

    /// The `n`-th element of the fundamental sequence of a limit worm of
    /// the shape `1B` with `B` free of zero entries: the 0th element is
    /// `B`, and each later element is `B . 0 . previous`.
    pub fn fundamental_sequence(&self, n: usize) -> Result<Worm, Error> {
        let shape_err = || Error::FundamentalSequenceShape { worm: self.clone() };
        let Some((first, rest)) = self.entries.split_first() else {
            return Err(shape_err());
        };
        if *first != Ordinal::one() || rest.iter().any(|e| e < &Ordinal::one()) {
            return Err(shape_err());
        }
        let b = Worm {
            entries: rest.to_vec(),
        };
        let mut approx = b.clone();
        for _ in 0..n {
            approx = b.concat(&Worm::single(Ordinal::zero())).concat(&approx);
        }
        Ok(approx)
    }
}

impl From<Vec<Ordinal>> for Worm {
    fn from(entries: Vec<Ordinal>) -> Worm {
        Worm { entries }
    }
}
