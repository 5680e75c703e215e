//! Consistency sequences: the full family of order types of one worm.
//!
//! For a fixed worm `A`, the map `xi -> order_type_at(A, xi)` is weakly
//! decreasing, changes value only finitely often, and is 0 strictly above
//! the first entry of `A`. [`consistency_sequence`] computes it exactly as
//! a [`StepFunction`]. The family is `l`-exact: the value at `xi` is the
//! `xi`-th hyperlogarithm of the value at 0, and it is the only weakly
//! decreasing family with that property, which [`StepFunction::is_ell_exact`]
//! verifies pointwise on a finite probe set.

use std::collections::BTreeSet;

use serde_json::json;

use crate::error::Error;
use crate::hyper::hyperlog;
use crate::ordertype::{order_type, order_type_at};
use crate::ordinal::Ordinal;
use crate::textio::print_ordinal;
use crate::worm::Worm;

/// One step of a step function: the function takes `value` on the interval
/// from `start` up to (not including) the next step's start.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Step {
    pub start: Ordinal,
    pub value: Ordinal,
}

/// A finitely supported, eventually-zero function on the ordinals given by
/// its change points.
///
/// Structural invariants, enforced on construction: at least one step,
/// starts strictly increasing beginning at 0, and final value 0. Canonical
/// sequences produced by [`consistency_sequence`] additionally have
/// strictly decreasing values; [`StepFunction::is_ell_exact`] treats a
/// violation of that as inexactness rather than rejecting the input, so
/// that corrupted sequences can be examined.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StepFunction {
    steps: Vec<Step>,
}

impl StepFunction {
    pub fn new(steps: Vec<Step>) -> Result<StepFunction, Error> {
        let malformed = |reason: &str| Error::MalformedStepFunction {
            reason: reason.to_string(),
        };
        let Some(first) = steps.first() else {
            return Err(malformed("no steps"));
        };
        if !first.start.is_zero() {
            return Err(malformed("first start must be 0"));
        }
        if !steps.windows(2).all(|w| w[0].start < w[1].start) {
            return Err(malformed("starts must increase strictly"));
        }
        if !steps.last().unwrap().value.is_zero() {
            return Err(malformed("final value must be 0"));
        }
        Ok(StepFunction { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// The value at `point`: the value of the last step starting at or
    /// before it.
    pub fn eval_at(&self, point: &Ordinal) -> &Ordinal {
        let idx = self.steps.partition_point(|s| s.start <= *point);
        // idx >= 1 because the first start is 0.
        &self.steps[idx - 1].value
    }

    /// Whether this is the `l`-exact family generated by its own value at
    /// 0, i.e. `eval_at(xi) = hyperlog(xi, eval_at(0))` everywhere.
    ///
    /// Checked on a finite probe set: every change point, every change
    /// point's successor, and the limit partial sums of each change point
    /// (the points where a hyperlogarithm of the initial value can change
    /// inside a gap). A function with non-decreasing values somewhere is
    /// never `l`-exact and yields `false` directly.
    pub fn is_ell_exact(&self) -> bool {
        if !self.steps.windows(2).all(|w| w[0].value > w[1].value) {
            return false;
        }
        let initial = &self.steps[0].value;
        let last_start = &self.steps.last().unwrap().start;
        let mut probes: BTreeSet<Ordinal> = BTreeSet::new();
        for s in &self.steps {
            probes.insert(s.start.clone());
            probes.insert(s.start.succ());
            for p in limit_partial_sums(&s.start) {
                probes.insert(p);
            }
        }
        probes.insert(last_start.succ());
        probes
            .iter()
            .all(|xi| self.eval_at(xi) == &hyperlog(xi, initial))
    }

    /// The steps as a JSON array of `{"start", "value"}` objects with
    /// canonical grammar strings.
    pub fn to_json(&self) -> serde_json::Value {
        json!(self
            .steps
            .iter()
            .map(|s| json!({
                "start": print_ordinal(&s.start),
                "value": print_ordinal(&s.value),
            }))
            .collect::<Vec<_>>())
    }
}

/// The partial sums of the normal form of `x` that are limit ordinals.
/// These are the only points where entry-wise left subtraction of a level
/// from `x` changes value at a limit.
fn limit_partial_sums(x: &Ordinal) -> Vec<Ordinal> {
    let mut sums = Vec::new();
    let terms = x.terms();
    for i in 0..terms.len() {
        if terms[i].to_ordinal() == Ordinal::one() {
            // Once the unit terms start, all further partial sums are
            // successors.
            break;
        }
        sums.push(Ordinal::from_terms(terms[..=i].to_vec()));
    }
    sums
}

/// All candidate levels where the consistency sequence of `a` can change
/// value at a limit: limit partial sums of each entry.
fn limit_breakpoints(a: &Worm) -> BTreeSet<Ordinal> {
    let mut points = BTreeSet::new();
    for e in a.entries() {
        points.extend(limit_partial_sums(e));
    }
    points
}

/// The full consistency sequence of `a` as a step function.
///
/// Successor steps follow the last-exponent law: the value at `xi + 1` is
/// the last exponent of the value at `xi`. When the value reaches a fixed
/// point of that law, the next change can only happen at a limit level,
/// which must be one of the finitely many limit breakpoints of `a`; the
/// driver jumps to the next candidate and evaluates there directly. Every
/// emitted value is recomputed from scratch as `order_type_at(a, start)`
/// and the function aborts on any mismatch or if candidates run out, so a
/// wrong sequence can never be returned quietly.
pub fn consistency_sequence(a: &Worm) -> Result<StepFunction, Error> {
    let breakpoints = limit_breakpoints(a);
    let mut steps = vec![Step {
        start: Ordinal::zero(),
        value: order_type(a),
    }];
    loop {
        let Step {
            start: level,
            value,
        } = steps.last().unwrap().clone();
        if value.is_zero() {
            break;
        }
        let dropped = value.last_exponent();
        if dropped < value {
            steps.push(Step {
                start: level.succ(),
                value: dropped,
            });
            continue;
        }
        // The value is a fixed point of the last-exponent map; scan the
        // limit breakpoints above the current level for the next drop.
        let mut found = None;
        for candidate in breakpoints.range(level.succ()..) {
            let there = order_type_at(a, candidate);
            if there < value {
                found = Some(Step {
                    start: candidate.clone(),
                    value: there,
                });
                break;
            }
        }
        match found {
            Some(step) => steps.push(step),
            None => {
                return Err(Error::SequenceStalled {
                    worm: a.clone(),
                    level,
                    value,
                })
            }
        }
    }
    for s in &steps {
        let recomputed = order_type_at(a, &s.start);
        if recomputed != s.value {
            return Err(Error::SequenceMismatch {
                worm: a.clone(),
                level: s.start.clone(),
                emitted: s.value.clone(),
                recomputed,
            });
        }
    }
    StepFunction::new(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyper::hyperexp;

    fn w() -> Ordinal {
        Ordinal::omega()
    }

    fn seq_of(entries: Vec<Ordinal>) -> Vec<(Ordinal, Ordinal)> {
        consistency_sequence(&Worm::new(entries))
            .unwrap()
            .steps()
            .iter()
            .map(|s| (s.start.clone(), s.value.clone()))
            .collect()
    }

    #[test]
    fn sequence_of_the_simplest_worms() {
        assert_eq!(seq_of(vec![]), vec![(Ordinal::zero(), Ordinal::zero())]);
        assert_eq!(
            seq_of(vec![Ordinal::zero()]),
            vec![
                (Ordinal::zero(), Ordinal::one()),
                (Ordinal::one(), Ordinal::zero()),
            ]
        );
    }

    #[test]
    fn sequence_crosses_a_limit_level() {
        let eps0 = Ordinal::veblen(&Ordinal::one(), &Ordinal::zero());
        assert_eq!(
            seq_of(vec![w()]),
            vec![
                (Ordinal::zero(), eps0),
                (w(), Ordinal::one()),
                (w().succ(), Ordinal::zero()),
            ]
        );
    }

    #[test]
    fn sequence_of_the_running_example() {
        let wpow = |b: &Ordinal| Ordinal::veblen(&Ordinal::zero(), b);
        let expected = vec![
            (Ordinal::zero(), &wpow(&wpow(&w())) + &wpow(&w())),
            (Ordinal::one(), w()),
            (Ordinal::nat(2), Ordinal::one()),
            (Ordinal::nat(3), Ordinal::zero()),
        ];
        assert_eq!(
            seq_of(vec![
                Ordinal::nat(2),
                Ordinal::one(),
                Ordinal::zero(),
                Ordinal::nat(3)
            ]),
            expected
        );
    }

    #[test]
    fn eval_between_change_points() {
        let s = consistency_sequence(&Worm::single(w())).unwrap();
        let eps0 = Ordinal::veblen(&Ordinal::one(), &Ordinal::zero());
        assert_eq!(s.eval_at(&Ordinal::zero()), &eps0);
        assert_eq!(s.eval_at(&Ordinal::nat(5)), &eps0);
        assert_eq!(s.eval_at(&w()), &Ordinal::one());
        assert_eq!(s.eval_at(&(&w() + &w())), &Ordinal::zero());
    }

    #[test]
    fn sequences_are_ell_exact_and_corruption_is_caught() {
        for entries in [
            vec![],
            vec![Ordinal::zero()],
            vec![w()],
            vec![
                Ordinal::nat(2),
                Ordinal::one(),
                Ordinal::zero(),
                Ordinal::nat(3),
            ],
            vec![&w() + &Ordinal::one(), w()],
        ] {
            let s = consistency_sequence(&Worm::new(entries)).unwrap();
            assert!(s.is_ell_exact(), "{s:?}");
        }
        let good = consistency_sequence(&Worm::single(w())).unwrap();
        let mut corrupted = good.steps().to_vec();
        corrupted[1].value = w();
        let corrupted = StepFunction::new(corrupted).unwrap();
        assert!(!corrupted.is_ell_exact());
    }

    #[test]
    fn vanishing_point_is_just_above_the_first_entry() {
        for entries in [
            vec![Ordinal::one()],
            vec![w(), Ordinal::zero(), w()],
            vec![&w() + &Ordinal::one(), Ordinal::nat(2)],
        ] {
            let a = Worm::new(entries);
            let first = a.first().unwrap().clone();
            let s = consistency_sequence(&a).unwrap();
            assert_ne!(s.eval_at(&first), &Ordinal::zero());
            assert_eq!(s.eval_at(&first.succ()), &Ordinal::zero());
            assert_eq!(s.steps().last().unwrap().start, first.succ());
        }
    }

    #[test]
    fn successor_steps_follow_the_last_exponent_law() {
        let a = Worm::new(vec![&w() + &Ordinal::one(), w(), Ordinal::one()]);
        let s = consistency_sequence(&a).unwrap();
        for step in s.steps() {
            let next = order_type_at(&a, &step.start.succ());
            assert_eq!(next, step.value.last_exponent());
        }
    }

    #[test]
    fn limit_recovery_from_stabilized_values() {
        // Below a limit change point, the stabilized value is the
        // hyperexponential of the value at the limit.
        let a = Worm::new(vec![&(&w() + &w()) + &Ordinal::one(), w()]);
        let s = consistency_sequence(&a).unwrap();
        let steps = s.steps();
        for i in 1..steps.len() {
            let lam = &steps[i].start;
            if !lam.is_limit() {
                continue;
            }
            let theta = &steps[i - 1].start;
            let gap = crate::ordinal::left_sub(theta, lam).unwrap();
            assert_eq!(
                steps[i - 1].value,
                hyperexp(&gap, &steps[i].value),
                "at {lam}"
            );
        }
    }

    #[test]
    fn step_function_construction_guards() {
        let ok = StepFunction::new(vec![
            Step {
                start: Ordinal::zero(),
                value: Ordinal::one(),
            },
            Step {
                start: Ordinal::one(),
                value: Ordinal::zero(),
            },
        ]);
        assert!(ok.is_ok());
        assert!(StepFunction::new(vec![]).is_err());
        assert!(StepFunction::new(vec![Step {
            start: Ordinal::one(),
            value: Ordinal::zero(),
        }])
        .is_err());
        assert!(StepFunction::new(vec![
            Step {
                start: Ordinal::zero(),
                value: Ordinal::one(),
            },
            Step {
                start: Ordinal::zero(),
                value: Ordinal::zero(),
            },
        ])
        .is_err());
        assert!(StepFunction::new(vec![Step {
            start: Ordinal::zero(),
            value: Ordinal::one(),
        }])
        .is_err());
    }
}
