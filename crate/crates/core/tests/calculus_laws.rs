//! Deterministic cross-module checks on enumerated worms and the fixed
//! ordinal grid. Everything here is exhaustive over its stated range, so a
//! failure pinpoints a law, not a random seed.

use wormcalc::{
    compare_worms, consistency_sequence, equiv, hyperexp, hyperlog, lt_at, oracle, order_type,
    order_type_at, worm_of, OrderRelation, Ordinal, Worm,
};

fn w() -> Ordinal {
    Ordinal::omega()
}

fn levels() -> Vec<Ordinal> {
    vec![
        Ordinal::zero(),
        Ordinal::one(),
        Ordinal::nat(2),
        w(),
        w().succ(),
        &w() * &w(),
    ]
}

#[test]
fn fundamental_sequence_order_types_climb_by_omega() {
    // o of the n-th approximation to [1, 1] is w * (n + 1)
    let a = Worm::new(vec![Ordinal::one(), Ordinal::one()]);
    for n in 0..=6 {
        let stage = a.fundamental_sequence(n).unwrap();
        let expected = &w() * &Ordinal::nat(n as u64 + 1);
        assert_eq!(order_type(&stage), expected, "stage {n}");
    }
}

#[test]
fn hyperexp_at_omega_powers_is_a_veblen_function() {
    // e^(w^g)(x) = phi_g(-1 + x) for x >= 1, and 0 at 0
    let gammas = [Ordinal::one(), Ordinal::nat(2), Ordinal::nat(3), w()];
    for gamma in &gammas {
        let level = Ordinal::veblen(&Ordinal::zero(), gamma);
        assert!(hyperexp(&level, &Ordinal::zero()).is_zero());
        for x in oracle::ordinal_grid().into_iter().take(40) {
            if x.is_zero() {
                continue;
            }
            let expected =
                Ordinal::veblen(gamma, &wormcalc::left_sub(&Ordinal::one(), &x).unwrap());
            assert_eq!(hyperexp(&level, &x), expected, "gamma {gamma}, x {x}");
        }
    }
}

#[test]
fn hyperexp_at_one_is_the_decremented_omega_power() {
    for x in oracle::ordinal_grid().into_iter().take(40) {
        let tower = Ordinal::veblen(&Ordinal::zero(), &x);
        let expected = wormcalc::left_sub(&Ordinal::one(), &tower).unwrap();
        assert_eq!(hyperexp(&Ordinal::one(), &x), expected, "x {x}");
    }
}

#[test]
fn hyperlog_at_one_is_the_last_exponent() {
    for x in oracle::ordinal_grid() {
        assert_eq!(hyperlog(&Ordinal::one(), &x), x.last_exponent(), "x {x}");
    }
}

#[test]
fn shifting_a_worm_hyperexponentiates_its_order_type() {
    // o(a "up" A) = e^a(o(A)) for every worm, not just canonical ones
    let worms =
        oracle::enumerate_worms(3, &[Ordinal::zero(), Ordinal::one(), Ordinal::nat(2)]).unwrap();
    for a in &worms {
        let base = order_type(a);
        for alpha in &levels() {
            assert_eq!(
                order_type(&a.shift_up(alpha)),
                hyperexp(alpha, &base),
                "worm {a}, shift {alpha}"
            );
        }
    }
}

#[test]
fn level_zero_order_agrees_with_the_linear_comparison() {
    let worms = oracle::enumerate_worms(4, &[Ordinal::zero(), Ordinal::one()]).unwrap();
    let zero = Ordinal::zero();
    for a in &worms {
        for b in &worms {
            let lt = compare_worms(a, b) == OrderRelation::Lt;
            assert_eq!(lt_at(a, b, &zero), lt, "{a} vs {b}");
        }
    }
}

#[test]
fn canonical_worms_are_equivalent_to_their_sources() {
    let worms =
        oracle::enumerate_worms(3, &[Ordinal::zero(), Ordinal::one(), Ordinal::nat(2)]).unwrap();
    for a in &worms {
        assert!(equiv(&worm_of(&order_type(a)), a), "worm {a}");
    }
}

#[test]
fn sequences_of_enumerated_worms_are_exact_everywhere() {
    let worms =
        oracle::enumerate_worms(3, &[Ordinal::zero(), Ordinal::one(), Ordinal::nat(2)]).unwrap();
    for a in &worms {
        let seq = consistency_sequence(a).unwrap();
        assert!(seq.is_ell_exact(), "worm {a}");
        for probe in levels() {
            assert_eq!(
                seq.eval_at(&probe),
                &order_type_at(a, &probe),
                "worm {a} at {probe}"
            );
        }
    }
}

#[test]
fn step_function_json_is_canonical() {
    let seq = consistency_sequence(&Worm::single(w())).unwrap();
    assert_eq!(
        seq.to_json().to_string(),
        r#"[{"start":"0","value":"phi(1,0)"},{"start":"w","value":"1"},{"start":"w + 1","value":"0"}]"#
    );
}
