//! Clone closure over the three-element domain at arity <= 2.
//!
//! A clone member of arity <= 2 is any table denoted by a term in at most
//! two variables over the generators; since every generator has arity <= 2,
//! every subterm of such a term is again a term in those variables, so the
//! unary and binary fragments close under the worklist rules below and
//! membership queries within the bound are exact.

use alloc::vec;
use alloc::vec::Vec;

use crate::trit::Trit;

/// Unary table indexed by argument.
pub type UnTable = [Trit; 3];
/// Binary table, row-major `x * 3 + y`.
pub type BinTable = [Trit; 9];

/// Generator operations accepted by the closure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gen {
    Zero,
    Half,
    One,
    Join,
    Dpar,
    Meet,
    Vee,
    Neg,
    Nabla,
    Delta,
    Flip,
}

impl Gen {
    pub fn from_name(name: &str) -> Option<Gen> {
        Some(match name {
            "0" | "zero" => Gen::Zero,
            "h" | "half" | "1/2" => Gen::Half,
            "1" | "one" => Gen::One,
            "join" => Gen::Join,
            "dpar" => Gen::Dpar,
            "meet" => Gen::Meet,
            "vee" => Gen::Vee,
            "neg" => Gen::Neg,
            "nabla" => Gen::Nabla,
            "delta" => Gen::Delta,
            "flip" => Gen::Flip,
            _ => return None,
        })
    }
}

fn un_code(t: &UnTable) -> usize {
    t[0].index() * 9 + t[1].index() * 3 + t[2].index()
}

fn bin_code(t: &BinTable) -> usize {
    t.iter().fold(0, |acc, v| acc * 3 + v.index())
}

pub fn un_table(f: impl Fn(Trit) -> Trit) -> UnTable {
    [f(Trit::Zero), f(Trit::Half), f(Trit::One)]
}

pub fn bin_table(f: impl Fn(Trit, Trit) -> Trit) -> BinTable {
    let mut t = [Trit::Zero; 9];
    for x in Trit::ALL {
        for y in Trit::ALL {
            t[x.index() * 3 + y.index()] = f(x, y);
        }
    }
    t
}

/// The unary and binary members of the clone generated by a set of
/// constants and operations of arity <= 2.
pub struct CloneClosure {
    unary: Vec<UnTable>,
    binary: Vec<BinTable>,
    unary_present: [bool; 27],
    binary_present: Vec<bool>,
}

impl CloneClosure {
    pub fn contains_unary(&self, t: &UnTable) -> bool {
        self.unary_present[un_code(t)]
    }

    pub fn contains_binary(&self, t: &BinTable) -> bool {
        self.binary_present[bin_code(t)]
    }

    pub fn unary_count(&self) -> usize {
        self.unary.len()
    }

    pub fn binary_count(&self) -> usize {
        self.binary.len()
    }
}

/// Fixpoint closure: projections and generator constants seed the two
/// fragments; unary generators post-compose, binary generators combine any
/// two members of the same fragment.
pub fn closure(gens: &[Gen]) -> CloneClosure {
    let mut const_gens: Vec<Trit> = Vec::new();
    let mut un_gens: Vec<UnTable> = Vec::new();
    let mut bin_gens: Vec<BinTable> = Vec::new();
    for g in gens {
        match g {
            Gen::Zero => const_gens.push(Trit::Zero),
            Gen::Half => const_gens.push(Trit::Half),
            Gen::One => const_gens.push(Trit::One),
            Gen::Neg => un_gens.push(un_table(Trit::neg)),
            Gen::Nabla => un_gens.push(un_table(Trit::nabla)),
            Gen::Delta => un_gens.push(un_table(Trit::delta)),
            Gen::Flip => un_gens.push(un_table(Trit::flip)),
            Gen::Join => bin_gens.push(bin_table(Trit::join)),
            Gen::Dpar => bin_gens.push(bin_table(Trit::dpar)),
            Gen::Meet => bin_gens.push(bin_table(Trit::meet)),
            Gen::Vee => bin_gens.push(bin_table(Trit::vee)),
        }
    }

    // Unary fragment.
    let mut unary: Vec<UnTable> = Vec::new();
    let mut unary_present = [false; 27];
    let push_un = |t: UnTable, unary: &mut Vec<UnTable>, present: &mut [bool; 27]| {
        let c = un_code(&t);
        if !present[c] {
            present[c] = true;
            unary.push(t);
        }
    };
    push_un(un_table(|x| x), &mut unary, &mut unary_present);
    for c in &const_gens {
        push_un([*c; 3], &mut unary, &mut unary_present);
    }
    let mut i = 0;
    while i < unary.len() {
        let x = unary[i];
        for u in &un_gens {
            push_un(
                [u[x[0].index()], u[x[1].index()], u[x[2].index()]],
                &mut unary,
                &mut unary_present,
            );
        }
        for j in 0..=i {
            let y = unary[j];
            for f in &bin_gens {
                let app = |a: UnTable, b: UnTable| -> UnTable {
                    [
                        f[a[0].index() * 3 + b[0].index()],
                        f[a[1].index() * 3 + b[1].index()],
                        f[a[2].index() * 3 + b[2].index()],
                    ]
                };
                push_un(app(x, y), &mut unary, &mut unary_present);
                push_un(app(y, x), &mut unary, &mut unary_present);
            }
        }
        i += 1;
    }

    // Binary fragment.
    let mut binary: Vec<BinTable> = Vec::new();
    let mut binary_present = vec![false; 19683];
    let push_bin = |t: BinTable, binary: &mut Vec<BinTable>, present: &mut Vec<bool>| {
        let c = bin_code(&t);
        if !present[c] {
            present[c] = true;
            binary.push(t);
        }
    };
    push_bin(bin_table(|x, _| x), &mut binary, &mut binary_present);
    push_bin(bin_table(|_, y| y), &mut binary, &mut binary_present);
    for c in &const_gens {
        push_bin([*c; 9], &mut binary, &mut binary_present);
    }
    let mut i = 0;
    while i < binary.len() {
        let x = binary[i];
        for u in &un_gens {
            let mut t = [Trit::Zero; 9];
            for k in 0..9 {
                t[k] = u[x[k].index()];
            }
            push_bin(t, &mut binary, &mut binary_present);
        }
        for j in 0..=i {
            let y = binary[j];
            for f in &bin_gens {
                let app = |a: &BinTable, b: &BinTable| -> BinTable {
                    let mut t = [Trit::Zero; 9];
                    for k in 0..9 {
                        t[k] = f[a[k].index() * 3 + b[k].index()];
                    }
                    t
                };
                push_bin(app(&x, &y), &mut binary, &mut binary_present);
                push_bin(app(&y, &x), &mut binary, &mut binary_present);
            }
        }
        i += 1;
    }

    CloneClosure {
        unary,
        binary,
        unary_present,
        binary_present,
    }
}

/// A membership query: a named unary or binary table.
pub enum Query {
    Unary(UnTable),
    Binary(BinTable),
}

impl Query {
    pub fn from_name(name: &str) -> Option<Query> {
        Some(match name {
            "join" => Query::Binary(bin_table(Trit::join)),
            "dpar" => Query::Binary(bin_table(Trit::dpar)),
            "meet" => Query::Binary(bin_table(Trit::meet)),
            "vee" => Query::Binary(bin_table(Trit::vee)),
            "neg" => Query::Unary(un_table(Trit::neg)),
            "nabla" => Query::Unary(un_table(Trit::nabla)),
            "delta" => Query::Unary(un_table(Trit::delta)),
            "flip" => Query::Unary(un_table(Trit::flip)),
            "id" => Query::Unary(un_table(|x| x)),
            "p1" => Query::Binary(bin_table(|x, _| x)),
            "p2" => Query::Binary(bin_table(|_, y| y)),
            "0" | "zero" => Query::Unary([Trit::Zero; 3]),
            "h" | "half" | "1/2" => Query::Unary([Trit::Half; 3]),
            "1" | "one" => Query::Unary([Trit::One; 3]),
            _ => return None,
        })
    }
}

impl CloneClosure {
    pub fn contains(&self, q: &Query) -> bool {
        match q {
            Query::Unary(t) => self.contains_unary(t),
            Query::Binary(t) => self.contains_binary(t),
        }
    }
}

/// A closed form for the lattice meet over `{0, 1/2, join, dpar}` alone:
///
/// ```text
/// x & y  =  d(x # y, d(h,0)) # d(x # 0, d(h, d(y,0)))
/// ```
///
/// The first argument of the outer join is 1 exactly when both inputs are
/// 1, the second is 1 exactly when both are nonzero, and joining the two
/// indicators rebuilds the minimum. Its existence contradicts the
/// claimed nondefinability of the meet, whose usual argument only excludes the two
/// unary-composition shapes checked by [`refute_meet_shapes`].
pub fn meet_witness(x: Trit, y: Trit) -> Trit {
    let one = Trit::Half.dpar(Trit::Zero);
    let both_one = x.join(y).dpar(one);
    let both_nonzero = x.join(Trit::Zero).dpar(Trit::Half.dpar(y.dpar(Trit::Zero)));
    both_one.join(both_nonzero)
}

/// Refutes by enumeration the two shapes a definition of the lattice meet
/// from `{0, 1/2, join, dpar}` could take with unary pieces:
/// `meet(x,y) = f(x).join(g(y))` and `meet(x,y) = dpar(f(x), g(y))`.
/// Returns true when, for every pair `(f, g)` of unary functions, each
/// shape differs from the meet at some cell.
pub fn refute_meet_shapes() -> bool {
    let mut all_un: Vec<UnTable> = Vec::with_capacity(27);
    for code in 0..27 {
        all_un.push([
            Trit::from_index(code / 9).unwrap(),
            Trit::from_index(code / 3 % 3).unwrap(),
            Trit::from_index(code % 3).unwrap(),
        ]);
    }
    let differs = |composite: &dyn Fn(Trit, Trit) -> Trit| -> bool {
        Trit::ALL
            .iter()
            .any(|x| Trit::ALL.iter().any(|y| composite(*x, *y) != x.meet(*y)))
    };
    for f in &all_un {
        for g in &all_un {
            let join_shape = |x: Trit, y: Trit| f[x.index()].join(g[y.index()]);
            let dpar_shape = |x: Trit, y: Trit| f[x.index()].dpar(g[y.index()]);
            if !differs(&join_shape) || !differs(&dpar_shape) {
                return false;
            }
        }
    }
    true
}
