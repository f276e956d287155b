//! Deterministic enumeration of formulas by node count, used by the
//! exhaustive sweeps and the smallest-first witness searches.

use alloc::vec::Vec;

use crate::formula::{Formula, PostFormula};

/// All core-connective formulas over `X1..Xm` with at most `max_size`
/// nodes, ordered by size, then by connective (`#`, `d`, `&`), then by
/// operand order. Leaves come in the order `0`, `h`, `X1..Xm`.
pub fn rm_formulas(m: usize, max_size: usize) -> Vec<Formula> {
    let mut by_size: Vec<Vec<Formula>> = Vec::with_capacity(max_size + 1);
    by_size.push(Vec::new()); // size 0 is empty
    for size in 1..=max_size {
        let mut here = Vec::new();
        if size == 1 {
            here.push(Formula::Zero);
            here.push(Formula::Half);
            for i in 1..=m as u32 {
                here.push(Formula::var(i));
            }
        } else {
            for lsize in 1..size - 1 {
                let rsize = size - 1 - lsize;
                for op in 0..3 {
                    for l in &by_size[lsize] {
                        for r in &by_size[rsize] {
                            here.push(match op {
                                0 => l.clone().join(r.clone()),
                                1 => l.clone().dpar(r.clone()),
                                _ => l.clone().meet(r.clone()),
                            });
                        }
                    }
                }
            }
        }
        by_size.push(here);
    }
    by_size.into_iter().flatten().collect()
}

/// All Post-signature formulas over `X1..Xm` with at most `max_size`
/// nodes. Leaves in the order `0`, `h`, `1`, `X1..Xm`; unary `!`, `N`
/// before binary `|`, `&`.
pub fn post_formulas(m: usize, max_size: usize) -> Vec<PostFormula> {
    let mut by_size: Vec<Vec<PostFormula>> = Vec::with_capacity(max_size + 1);
    by_size.push(Vec::new());
    for size in 1..=max_size {
        let mut here = Vec::new();
        if size == 1 {
            here.push(PostFormula::Zero);
            here.push(PostFormula::Half);
            here.push(PostFormula::One);
            for i in 1..=m as u32 {
                here.push(PostFormula::var(i));
            }
        } else {
            for a in &by_size[size - 1] {
                here.push(a.clone().neg());
            }
            for a in &by_size[size - 1] {
                here.push(a.clone().nabla());
            }
            for lsize in 1..size - 1 {
                let rsize = size - 1 - lsize;
                for op in 0..2 {
                    for l in &by_size[lsize] {
                        for r in &by_size[rsize] {
                            here.push(match op {
                                0 => l.clone().vee(r.clone()),
                                _ => l.clone().meet(r.clone()),
                            });
                        }
                    }
                }
            }
        }
        by_size.push(here);
    }
    by_size.into_iter().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_are_respected_and_counts_are_stable() {
        let fs = rm_formulas(1, 3);
        assert!(fs.iter().all(|f| f.size() <= 3));
        // 3 leaves + 3 connectives * 3 * 3 pairs.
        assert_eq!(fs.len(), 3 + 27);

        let ps = post_formulas(2, 3);
        assert!(ps.iter().all(|p| p.size() <= 3));
        // 5 leaves, 2*5 unary of size 2, then size 3: 2*10 unary-of-unary
        // + 2 binary * 5 * 5.
        assert_eq!(ps.len(), 5 + 10 + 20 + 50);
    }

    #[test]
    fn enumeration_is_deterministic() {
        assert_eq!(rm_formulas(2, 5), rm_formulas(2, 5));
        assert_eq!(post_formulas(1, 4), post_formulas(1, 4));
    }
}
