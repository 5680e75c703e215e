//! Brute-force enumeration and cross-checking.
//!
//! Everything here exists to catch bugs in the calculus: worms are
//! enumerated exhaustively over small alphabets and every claimed law is
//! checked against every pair (and triple, for transitivity). The checks
//! intentionally compute the same facts through independent routes, e.g.
//! the syntactic worm comparison against ordinal comparison of order
//! types.

use std::fmt;

use serde_json::json;

use crate::compare::{compare_worms, equiv, OrderRelation};
use crate::error::Error;
use crate::ordertype::order_type;
use crate::ordinal::Ordinal;
use crate::worm::Worm;

/// Hard cap on enumeration length; `|alphabet|^len` grows fast.
pub const MAX_ENUM_LEN: usize = 8;

/// Hard cap on [`rank_table`] size.
pub const MAX_RANK: usize = 20;

/// All worms of length at most `max_len` over the given entry alphabet,
/// shortest first, entries ordered by the sorted alphabet.
pub fn enumerate_worms(max_len: usize, alphabet: &[Ordinal]) -> Result<Vec<Worm>, Error> {
    if max_len > MAX_ENUM_LEN {
        return Err(Error::LengthGuard {
            requested: max_len,
            limit: MAX_ENUM_LEN,
        });
    }
    if alphabet.is_empty() {
        return Err(Error::EmptyAlphabet);
    }
    let mut letters = alphabet.to_vec();
    letters.sort();
    letters.dedup();
    let mut out = vec![Worm::top()];
    let mut layer = vec![Worm::top()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * letters.len());
        for w in &layer {
            for l in &letters {
                next.push(w.concat(&Worm::single(l.clone())));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    Ok(out)
}

/// The first `n` positions of the base ordering realized by zero-runs:
/// the worm of `k` zeros has order type `k`.
pub fn rank_table(n: usize) -> Result<Vec<(Worm, Ordinal)>, Error> {
    if n > MAX_RANK {
        return Err(Error::LengthGuard {
            requested: n,
            limit: MAX_RANK,
        });
    }
    Ok((0..=n)
        .map(|k| (Worm::new(vec![Ordinal::zero(); k]), Ordinal::nat(k as u64)))
        .collect())
}

/// Result of [`exhaustive_cross_check`].
#[derive(Clone, Debug)]
pub struct CrossCheckReport {
    pub pass: bool,
    pub worms: usize,
    pub ordered_pairs: usize,
    pub triples: usize,
    pub failures: usize,
    pub first_counterexample: Option<String>,
}

impl CrossCheckReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "pass": self.pass,
            "worms": self.worms,
            "ordered_pairs": self.ordered_pairs,
            "triples": self.triples,
            "failures": self.failures,
            "first_counterexample": self.first_counterexample,
        })
    }
}

impl fmt::Display for CrossCheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "pass: {}", self.pass)?;
        writeln!(f, "worms: {}", self.worms)?;
        writeln!(f, "ordered pairs: {}", self.ordered_pairs)?;
        writeln!(f, "triples: {}", self.triples)?;
        write!(f, "failures: {}", self.failures)?;
        if let Some(ce) = &self.first_counterexample {
            write!(f, "\nfirst counterexample: {ce}")?;
        }
        Ok(())
    }
}

/// Enumerates all worms up to `max_len` over `alphabet` and checks, over
/// every ordered pair: consistency of the syntactic comparison under
/// argument swap, agreement with comparison of order types, the
/// concatenation law `o(A.0.B) = o(B) + 1 + o(A)`, and the equivalence of
/// a worm with its head-body decomposition; over every triple:
/// transitivity of the syntactic order.
pub fn exhaustive_cross_check(
    max_len: usize,
    alphabet: &[Ordinal],
) -> Result<CrossCheckReport, Error> {
    let worms = enumerate_worms(max_len, alphabet)?;
    let n = worms.len();
    let types: Vec<Ordinal> = worms.iter().map(order_type).collect();

    let mut failures = 0usize;
    let mut first: Option<String> = None;
    let record = |failures: &mut usize, first: &mut Option<String>, msg: String| {
        *failures += 1;
        if first.is_none() {
            *first = Some(msg);
        }
    };

    let zero = Worm::single(Ordinal::zero());
    let mut rel = vec![OrderRelation::Eq; n * n];
    for i in 0..n {
        for j in 0..n {
            rel[i * n + j] = compare_worms(&worms[i], &worms[j]);
        }
    }

    for i in 0..n {
        let a = &worms[i];
        // Head-body decomposition is an equivalence.
        if !a.is_empty() {
            let split = a.head(&Ordinal::one()).concat(&zero).concat(&a.body());
            if !equiv(a, &split) {
                record(
                    &mut failures,
                    &mut first,
                    format!("{a} is not equivalent to its decomposition {split}"),
                );
            }
        }
        for j in 0..n {
            let b = &worms[j];
            let r = rel[i * n + j];
            // Swap consistency (with reflexivity at i = j).
            if r != rel[j * n + i].reverse() {
                record(
                    &mut failures,
                    &mut first,
                    format!("comparison of {a} and {b} is not antisymmetric"),
                );
            }
            // Syntactic route vs order-type route.
            if r != types[i].cmp(&types[j]).into() {
                record(
                    &mut failures,
                    &mut first,
                    format!(
                        "{a} vs {b}: syntactic {r}, order types {} vs {}",
                        types[i], types[j]
                    ),
                );
            }
            // Concatenation law.
            let joined = order_type(&a.concat(&zero).concat(b));
            let expected = &types[j].succ() + &types[i];
            if joined != expected {
                record(
                    &mut failures,
                    &mut first,
                    format!("o({a}.0.{b}) = {joined}, expected {expected}"),
                );
            }
        }
    }

    // Transitivity of <= (and of < through it) over all triples.
    let mut triples = 0usize;
    for i in 0..n {
        for j in 0..n {
            if rel[i * n + j] == OrderRelation::Gt {
                triples += n;
                continue;
            }
            for k in 0..n {
                triples += 1;
                if rel[j * n + k] != OrderRelation::Gt && rel[i * n + k] == OrderRelation::Gt {
                    record(
                        &mut failures,
                        &mut first,
                        format!(
                            "transitivity fails on {}, {}, {}",
                            worms[i], worms[j], worms[k]
                        ),
                    );
                }
            }
        }
    }

    Ok(CrossCheckReport {
        pass: failures == 0,
        worms: n,
        ordered_pairs: n * n,
        triples,
        failures,
        first_counterexample: first,
    })
}

/// Deterministic sample of ordinals used by calibration tests: a seed set
/// closed under one application of addition and one of the Veblen
/// constructor, first occurrence kept, capped at 200 entries.
pub fn ordinal_grid() -> Vec<Ordinal> {
    let w = Ordinal::omega();
    let seeds = vec![
        Ordinal::zero(),
        Ordinal::one(),
        Ordinal::nat(2),
        Ordinal::nat(3),
        w.clone(),
        w.succ(),
        &w + &w,
        &w * &w,
        Ordinal::veblen(&Ordinal::zero(), &w),
        Ordinal::veblen(&Ordinal::one(), &Ordinal::zero()),
        Ordinal::veblen(&Ordinal::one(), &Ordinal::one()),
        Ordinal::veblen(&Ordinal::nat(2), &Ordinal::zero()),
    ];
    let mut out = Vec::with_capacity(200);
    let push = |x: Ordinal, out: &mut Vec<Ordinal>| {
        if out.len() < 200 && !out.contains(&x) {
            out.push(x);
        }
    };
    for s in &seeds {
        push(s.clone(), &mut out);
    }
    for x in &seeds {
        for y in &seeds {
            push(x + y, &mut out);
        }
    }
    for x in &seeds {
        for y in &seeds {
            push(Ordinal::veblen(x, y), &mut out);
        }
    }
    out
}
