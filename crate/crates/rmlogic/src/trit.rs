//! The three-element carrier `{0, 1/2, 1}` and its pointwise operations.
//!
//! Every operation is a lookup table, so each law about them can be (and is)
//! checked by exhausting the 9 or 27 argument combinations. The derived
//! numeric readings (`min`, `max`, `1 - x`) appear only in tests, as an
//! independent oracle against the tables.

use core::fmt;

/// An element of the three-valued domain: `Zero`, `Half`, `One`.
///
/// The derived `Ord` gives the indexing enumeration `Zero < Half < One`
/// (numeric reading 0 < 1/2 < 1). This is the order used for truth-table
/// indexing; the logical order of the algebra is [`Trit::below`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Trit {
    Zero,
    Half,
    One,
}

use Trit::{Half, One, Zero};

impl Trit {
    /// All three values in indexing order.
    pub const ALL: [Trit; 3] = [Zero, Half, One];

    /// Indexing position: 0, 1, 2.
    pub fn index(self) -> usize {
        match self {
            Zero => 0,
            Half => 1,
            One => 2,
        }
    }

    pub fn from_index(i: usize) -> Option<Trit> {
        match i {
            0 => Some(Zero),
            1 => Some(Half),
            2 => Some(One),
            _ => None,
        }
    }

    /// Textual symbol: `0`, `h`, `1`.
    pub fn symbol(self) -> char {
        match self {
            Zero => '0',
            Half => 'h',
            One => '1',
        }
    }

    pub fn from_symbol(c: char) -> Option<Trit> {
        match c {
            '0' => Some(Zero),
            'h' => Some(Half),
            '1' => Some(One),
            _ => None,
        }
    }

    /// The join: smallest face of the 1-cube containing both arguments.
    pub fn join(self, other: Trit) -> Trit {
        match (self, other) {
            (Zero, Zero) => Zero,
            (One, One) => One,
            _ => Half,
        }
    }

    /// The total antipodal operation.
    pub fn dpar(self, other: Trit) -> Trit {
        // Row = self, column = other.
        const TABLE: [[Trit; 3]; 3] = [
            [Zero, Half, Zero],
            [One, Half, Zero],
            [One, Half, One],
        ];
        TABLE[self.index()][other.index()]
    }

    /// Lattice meet (numerically `min`).
    pub fn meet(self, other: Trit) -> Trit {
        const TABLE: [[Trit; 3]; 3] = [
            [Zero, Zero, Zero],
            [Zero, Half, Half],
            [Zero, Half, One],
        ];
        TABLE[self.index()][other.index()]
    }

    /// Lattice join of the Post signature (numerically `max`).
    pub fn vee(self, other: Trit) -> Trit {
        const TABLE: [[Trit; 3]; 3] = [
            [Zero, Half, One],
            [Half, Half, One],
            [One, One, One],
        ];
        TABLE[self.index()][other.index()]
    }

    /// Involutive negation (numerically `1 - x`).
    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> Trit {
        match self {
            Zero => One,
            Half => Half,
            One => Zero,
        }
    }

    /// Remotest possibility (numerically `min(1, 2x)`).
    pub fn nabla(self) -> Trit {
        match self {
            Zero => Zero,
            _ => One,
        }
    }

    /// Nearest possibility (numerically `max(0, 2x - 1)`).
    pub fn delta(self) -> Trit {
        match self {
            One => One,
            _ => Zero,
        }
    }

    /// The unary map `0 -> 0`, `1/2 -> 1`, `1 -> 1/2` of the coNP reduction.
    pub fn flip(self) -> Trit {
        match self {
            Zero => Zero,
            Half => One,
            One => Half,
        }
    }

    /// Partial intersection of faces; `None` exactly when `{x, y} = {0, 1}`.
    pub fn meet_partial(self, other: Trit) -> Option<Trit> {
        match (self, other) {
            (Zero, One) | (One, Zero) => None,
            (Zero, _) | (_, Zero) => Some(Zero),
            (One, _) | (_, One) => Some(One),
            (Half, Half) => Some(Half),
        }
    }

    /// Face-inclusion order: `x` is below `y` iff `x.join(y) == y`.
    pub fn below(self, other: Trit) -> bool {
        self.join(other) == other
    }

    /// De Luca-Termini sharpening order on constants:
    /// `x <= y <= neg(y)` or `x >= y >= neg(y)` under the numeric reading.
    pub fn sharper(self, other: Trit) -> bool {
        let (x, y, ny) = (self.index(), other.index(), other.neg().index());
        (x <= y && y <= ny) || (x >= y && y >= ny)
    }
}

impl fmt::Display for Trit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Numeric oracle for the derived operations.
    fn num(t: Trit) -> f64 {
        match t {
            Zero => 0.0,
            Half => 0.5,
            One => 1.0,
        }
    }

    fn from_num(x: f64) -> Trit {
        if x == 0.0 {
            Zero
        } else if x == 0.5 {
            Half
        } else {
            assert_eq!(x, 1.0);
            One
        }
    }

    #[test]
    fn join_table_cells() {
        // The printed table, row = x, column = y.
        let expected = [
            [Zero, Half, Half],
            [Half, Half, Half],
            [Half, Half, One],
        ];
        for x in Trit::ALL {
            for y in Trit::ALL {
                assert_eq!(x.join(y), expected[x.index()][y.index()]);
            }
        }
        assert_eq!(Zero.join(One), Half);
    }

    #[test]
    fn dpar_table_cells() {
        let expected = [
            [Zero, Half, Zero],
            [One, Half, Zero],
            [One, Half, One],
        ];
        for x in Trit::ALL {
            for y in Trit::ALL {
                assert_eq!(x.dpar(y), expected[x.index()][y.index()]);
            }
        }
        assert_eq!(Half.dpar(Zero), One);
        for x in Trit::ALL {
            assert_eq!(x.dpar(Half), Half);
        }
    }

    #[test]
    fn meet_partial_table_cells() {
        assert_eq!(Zero.meet_partial(Zero), Some(Zero));
        assert_eq!(Zero.meet_partial(Half), Some(Zero));
        assert_eq!(Half.meet_partial(Half), Some(Half));
        assert_eq!(Half.meet_partial(One), Some(One));
        assert_eq!(One.meet_partial(One), Some(One));
        assert_eq!(Zero.meet_partial(One), None);
        assert_eq!(One.meet_partial(Zero), None);
        for x in Trit::ALL {
            for y in Trit::ALL {
                assert_eq!(x.meet_partial(y), y.meet_partial(x));
            }
        }
    }

    #[test]
    fn derived_ops_match_numeric_oracle() {
        for x in Trit::ALL {
            assert_eq!(x.neg(), from_num(1.0 - num(x)));
            assert_eq!(x.nabla(), from_num(f64::min(1.0, 2.0 * num(x))));
            assert_eq!(x.delta(), from_num(f64::max(0.0, 2.0 * num(x) - 1.0)));
            for y in Trit::ALL {
                assert_eq!(x.meet(y), from_num(num(x).min(num(y))));
                assert_eq!(x.vee(y), from_num(num(x).max(num(y))));
            }
        }
        assert_eq!(One.neg(), Zero);
        assert_eq!(Half.neg(), Half);
        assert_eq!(Half.delta(), Zero);
    }

    #[test]
    fn flip_stated_values_and_definition() {
        assert_eq!(Zero.flip(), Zero);
        assert_eq!(Half.flip(), One);
        assert_eq!(One.flip(), Half);
        // flip(x) = dpar(x, 0) join dpar(dpar(0, x), 0)
        for x in Trit::ALL {
            assert_eq!(x.flip(), x.dpar(Zero).join(Zero.dpar(x).dpar(Zero)));
        }
    }

    #[test]
    fn definitional_identities() {
        for x in Trit::ALL {
            assert_eq!(x.neg(), Half.dpar(x));
            assert_eq!(x.nabla(), x.dpar(Zero));
            assert_eq!(x.delta(), x.dpar(Half.dpar(Zero)));
            assert_eq!(x.neg().neg(), x);
            assert_eq!(x.nabla().nabla(), x.nabla());
            assert_eq!(x.delta().delta(), x.delta());
            assert_eq!(x.delta(), x.neg().nabla().neg());
        }
    }

    #[test]
    fn join_is_a_semilattice_with_absorbing_half() {
        for x in Trit::ALL {
            assert_eq!(x.join(x), x);
            for y in Trit::ALL {
                assert_eq!(x.join(y), y.join(x));
                for z in Trit::ALL {
                    assert_eq!(x.join(y).join(z), x.join(y.join(z)));
                    assert_eq!(x.meet(y).meet(z), x.meet(y.meet(z)));
                }
                assert_eq!(x.meet(y), y.meet(x));
            }
            assert_eq!(x.meet(x), x);
            assert_eq!(x.join(Half), Half);
        }
    }

    #[test]
    fn dpar_from_post_operations() {
        // dpar(x,y) = (1/2 & Nabla y & Nabla !y) | (Delta x & Delta y)
        //             | (Nabla x & Delta !y)
        for x in Trit::ALL {
            for y in Trit::ALL {
                let first = Half.meet(y.nabla()).meet(y.neg().nabla());
                let second = x.delta().meet(y.delta());
                let third = x.nabla().meet(y.neg().delta());
                assert_eq!(x.dpar(y), first.vee(second).vee(third));
            }
        }
    }

    #[test]
    fn no_dual_conjunction() {
        for x in Trit::ALL {
            for y in Trit::ALL {
                assert_eq!(x.neg().join(y.neg()), x.join(y).neg());
            }
        }
    }

    #[test]
    fn below_is_a_partial_order_with_half_on_top() {
        for x in Trit::ALL {
            assert!(x.below(x));
            assert!(x.below(Half));
            for y in Trit::ALL {
                if x.below(y) && y.below(x) {
                    assert_eq!(x, y);
                }
                for z in Trit::ALL {
                    if x.below(y) && y.below(z) {
                        assert!(x.below(z));
                    }
                }
            }
        }
        // 0 and 1 are minimal.
        for x in Trit::ALL {
            assert_eq!(x.below(Zero), x == Zero);
            assert_eq!(x.below(One), x == One);
        }
        assert!(Zero.below(Half));
        assert!(!Half.below(Zero));
        assert!(One.below(Half));
    }

    #[test]
    fn sharper_agrees_with_below() {
        for x in Trit::ALL {
            assert!(x.sharper(x));
            for y in Trit::ALL {
                assert_eq!(x.sharper(y), x.below(y));
            }
        }
    }

    #[test]
    fn meet_partial_is_the_order_meet() {
        for x in Trit::ALL {
            for y in Trit::ALL {
                let lower: Vec<Trit> = Trit::ALL
                    .into_iter()
                    .filter(|c| c.below(x) && c.below(y))
                    .collect();
                match x.meet_partial(y) {
                    None => assert!(lower.is_empty()),
                    Some(m) => {
                        assert!(lower.contains(&m));
                        for c in lower {
                            assert!(c.below(m));
                        }
                    }
                }
            }
        }
    }
}
