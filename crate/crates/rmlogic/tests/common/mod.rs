//! Shared random generators for the integration and acceptance suites.
//! Everything is seeded, so failures reproduce exactly.
#![allow(dead_code)] // each suite uses its own subset

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use rmlogic::formula::{Formula, PostFormula};
use rmlogic::semantics::{pow3, Theory, TruthTable};
use rmlogic::trit::Trit;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_trit(rng: &mut ChaCha8Rng) -> Trit {
    Trit::from_index(rng.gen_range(0..3)).unwrap()
}

pub fn random_table(rng: &mut ChaCha8Rng, m: usize) -> TruthTable {
    let values: Vec<Trit> = (0..pow3(m)).map(|_| random_trit(rng)).collect();
    TruthTable::from_fn(m, |i| values[i])
}

/// Random core formula over `X1..Xm` with roughly `size` nodes.
pub fn random_formula(rng: &mut ChaCha8Rng, m: usize, size: usize) -> Formula {
    if size <= 1 {
        return match rng.gen_range(0..3) {
            0 => Formula::Zero,
            1 => Formula::Half,
            _ => Formula::var(rng.gen_range(1..=m as u32)),
        };
    }
    let left = rng.gen_range(1..size);
    let l = random_formula(rng, m, left);
    let r = random_formula(rng, m, size - 1 - left.min(size - 2));
    match rng.gen_range(0..3) {
        0 => l.join(r),
        1 => l.dpar(r),
        _ => l.meet(r),
    }
}

/// Random Post-signature formula with roughly `size` nodes.
pub fn random_post_formula(rng: &mut ChaCha8Rng, m: usize, size: usize) -> PostFormula {
    if size <= 1 {
        return match rng.gen_range(0..4) {
            0 => PostFormula::Zero,
            1 => PostFormula::Half,
            2 => PostFormula::One,
            _ => PostFormula::var(rng.gen_range(1..=m as u32)),
        };
    }
    match rng.gen_range(0..4) {
        0 => random_post_formula(rng, m, size - 1).neg(),
        1 => random_post_formula(rng, m, size - 1).nabla(),
        op => {
            let left = rng.gen_range(1..size);
            let l = random_post_formula(rng, m, left);
            let r = random_post_formula(rng, m, (size - 1).saturating_sub(left).max(1));
            if op == 2 {
                l.vee(r)
            } else {
                l.meet(r)
            }
        }
    }
}

/// A compatible theory of up to `max_len` formulas: per valuation the
/// premises all stay in {0, 1/2} or all in {1/2, 1}, so no pair can clash.
pub fn random_compatible_theory(
    rng: &mut ChaCha8Rng,
    m: usize,
    max_len: usize,
) -> (Theory, Vec<TruthTable>) {
    let len = pow3(m);
    let upper: Vec<bool> = (0..len).map(|_| rng.gen_bool(0.5)).collect();
    let k = rng.gen_range(1..=max_len);
    let mut tables = Vec::with_capacity(k);
    for _ in 0..k {
        let t = TruthTable::from_fn(m, |i| {
            if rng.gen_bool(0.4) {
                Trit::Half
            } else if upper[i] {
                Trit::One
            } else {
                Trit::Zero
            }
        });
        tables.push(t);
    }
    let theory = Theory::new(
        tables
            .iter()
            .map(|t| rmlogic::formula::synthesize(t).expect("m >= 1")),
    );
    (theory, tables)
}

/// A goal the theory entails: at every valuation the goal is either 1/2
/// or copies the value of some premise.
pub fn random_entailed_goal(
    rng: &mut ChaCha8Rng,
    m: usize,
    premise_tables: &[TruthTable],
) -> Formula {
    let t = TruthTable::from_fn(m, |i| {
        let candidates: Vec<Trit> = premise_tables
            .iter()
            .map(|p| p.get(i))
            .filter(|v| *v != Trit::Half)
            .collect();
        if candidates.is_empty() || rng.gen_bool(0.5) {
            Trit::Half
        } else {
            candidates[rng.gen_range(0..candidates.len())]
        }
    });
    rmlogic::formula::synthesize(&t).expect("m >= 1")
}
