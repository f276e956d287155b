//! Acceptance suite: one line per criterion, nonzero exit on any failure.
//!
//! Criterion 4 asserts, verbatim, that the clone closure of
//! `{0, 1/2, join, dpar}` does not contain the minimum. That assertion is
//! false: `d(x # y, d(h,0)) # d(x # 0, d(h, d(y,0)))` is the minimum, as
//! three independent routes confirm (the closure, the explicit term, and
//! cell-by-cell evaluation). The criterion is still run as stated and
//! reported honestly; the `meet-definability-discrepancy` selftest check
//! documents the witness.

mod common;

use rmlogic::clone::{bin_table, closure, meet_witness, refute_meet_shapes, Gen};
use rmlogic::formula::synthesize;
use rmlogic::selftest;
use rmlogic::semantics::{
    compactness_core, entails, entails_via_meet, entails_via_reduction, is_tautology,
    post_tautology, reduce_post_to_rm, Theory,
};
use rmlogic::trit::Trit;

use common::{
    random_compatible_theory, random_entailed_goal, random_post_formula, random_table, rng,
};

struct Criterion {
    number: usize,
    name: &'static str,
    pass: bool,
    detail: String,
}

fn from_check(number: usize, name: &'static str, check: selftest::Check) -> Criterion {
    Criterion {
        number,
        name,
        pass: check.pass,
        detail: check.detail,
    }
}

fn criterion_4() -> Criterion {
    let c = closure(&[Gen::Zero, Gen::Half, Gen::Join, Gen::Dpar]);
    let min_absent = !c.contains_binary(&bin_table(Trit::meet));
    let shapes_refuted = refute_meet_shapes();
    let witness_is_min = Trit::ALL
        .iter()
        .all(|x| Trit::ALL.iter().all(|y| meet_witness(*x, *y) == x.meet(*y)));
    let detail = if min_absent {
        format!("min absent from the fixpoint; shapes refuted: {shapes_refuted}")
    } else {
        format!(
            "min IS in the fixpoint: x & y = d(x # y, d(h,0)) # d(x # 0, d(h, d(y,0))) \
             (witness verified on all 9 cells: {witness_is_min}); \
             the two unary-composition shapes are refuted ({shapes_refuted}) but do not cover \
             compositions with binary subterms; see the meet-definability-discrepancy selftest \
             check. The stated criterion is therefore unattainable and reported as a failure."
        )
    };
    Criterion {
        number: 4,
        name: "nondefinability of min from {0, 1/2, join, dpar}",
        pass: min_absent && shapes_refuted,
        detail,
    }
}

fn criterion_5() -> Criterion {
    let exhaustive = selftest::check_consequence_agreement_m1();
    if !exhaustive.pass {
        return from_check(5, "consequence agreement", exhaustive);
    }
    let mut r = rng(501);
    for i in 0..10_000 {
        let (ta, tb) = (random_table(&mut r, 2), random_table(&mut r, 2));
        let (fa, fb) = (synthesize(&ta).unwrap(), synthesize(&tb).unwrap());
        let direct = entails(&Theory::new([fa.clone()]), &fb).unwrap().holds;
        let via_meet = entails_via_meet(&Theory::new([fa.clone()]), &fb)
            .unwrap()
            .holds;
        let via_reduction = entails_via_reduction(&fa, &fb).unwrap();
        let pointwise = ta.below(&tb);
        if !(direct == via_meet && via_meet == via_reduction && via_reduction == pointwise) {
            return Criterion {
                number: 5,
                name: "consequence agreement",
                pass: false,
                detail: format!(
                    "disagreement at random pair {i}: {} vs {}",
                    ta.values_string(),
                    tb.values_string()
                ),
            };
        }
    }
    Criterion {
        number: 5,
        name: "consequence agreement",
        pass: true,
        detail: format!(
            "{}; plus 10000 random pairs at m=2, zero disagreements",
            exhaustive.detail
        ),
    }
}

fn criterion_7() -> Criterion {
    let exhaustive = selftest::check_conp_reduction();
    if !exhaustive.pass {
        return from_check(7, "Post-tautology reduction", exhaustive);
    }
    let mut r = rng(701);
    for i in 0..1_000 {
        let p = random_post_formula(&mut r, 2, 12);
        let direct = post_tautology(&p).unwrap();
        let reduced = is_tautology(&reduce_post_to_rm(&p)).unwrap();
        if direct != reduced {
            return Criterion {
                number: 7,
                name: "Post-tautology reduction",
                pass: false,
                detail: format!("random formula {i} disagrees"),
            };
        }
    }
    Criterion {
        number: 7,
        name: "Post-tautology reduction",
        pass: true,
        detail: format!(
            "{}; plus 1000 random formulas of size <= 12",
            exhaustive.detail
        ),
    }
}

fn criterion_9() -> Criterion {
    let mut r = rng(901);
    for i in 0..1_000 {
        let m = 1 + (i % 2);
        let (theory, tables) = random_compatible_theory(&mut r, m, 20);
        let goal = random_entailed_goal(&mut r, m, &tables);
        let full = entails(&theory, &goal).unwrap();
        if !full.holds {
            return Criterion {
                number: 9,
                name: "finite-core extraction",
                pass: false,
                detail: format!("case {i}: the generator failed to produce an entailed goal"),
            };
        }
        let core = match compactness_core(&theory, &goal) {
            Ok(c) => c,
            Err(e) => {
                return Criterion {
                    number: 9,
                    name: "finite-core extraction",
                    pass: false,
                    detail: format!("case {i}: extraction failed: {e}"),
                }
            }
        };
        let subset = core
            .formulas()
            .iter()
            .all(|f| theory.formulas().contains(f));
        let still_entails = entails(&core, &goal).unwrap().holds;
        if !(subset && still_entails) {
            return Criterion {
                number: 9,
                name: "finite-core extraction",
                pass: false,
                detail: format!("case {i}: subset={subset}, entails={still_entails}"),
            };
        }
    }
    Criterion {
        number: 9,
        name: "finite-core extraction",
        pass: true,
        detail: "1000 random entailing theories (|T| <= 20, m <= 2); every core is a subset and still entails"
            .into(),
    }
}

fn main() {
    let criteria = vec![
        from_check(1, "printed-table fidelity", selftest::check_table_fidelity()),
        from_check(2, "equation suite", selftest::check_equation_suite()),
        from_check(
            3,
            "join closed-form discrepancy report",
            selftest::check_eq3_discrepancy(),
        ),
        criterion_4(),
        criterion_5(),
        from_check(6, "order coincidence", selftest::check_order_coincidence()),
        criterion_7(),
        from_check(
            8,
            "representation counts",
            selftest::check_representation_counts(),
        ),
        criterion_9(),
        from_check(
            10,
            "inconsistency-tolerance suite",
            selftest::check_satz_suite(),
        ),
        from_check(11, "axiom suite", selftest::check_axiom_suite()),
    ];
    let mut failures = 0;
    for c in &criteria {
        let status = if c.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2}: {}: {} ({})",
            c.number, c.name, status, c.detail
        );
        if !c.pass {
            failures += 1;
        }
    }
    if failures > 0 {
        println!(
            "acceptance: {failures} of {} criteria failed",
            criteria.len()
        );
        std::process::exit(1);
    }
    println!("acceptance: all {} criteria passed", criteria.len());
}
