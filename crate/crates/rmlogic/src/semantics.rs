//! Valuations, packed truth tables, and the consequence relation.
//!
//! A truth table of arity `m` is the function `{0,1/2,1}^m -> {0,1/2,1}`
//! determined by a formula. Tables are stored as two bit planes of length
//! `3^m` ("is-zero" and "is-one"); the pointwise operations are bitwise
//! formulas over the planes, so exhaustive sweeps stay cheap.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::formula::{Formula, PostFormula};
use crate::trit::Trit;

/// Largest supported arity; `3^14` valuation indices still fit comfortably
/// in memory, anything bigger is rejected up front.
pub const MAX_ARITY: usize = 14;

/// `3^m` for table sizing.
pub fn pow3(m: usize) -> usize {
    3usize.pow(m as u32)
}

/// Errors from evaluation and the consequence procedures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SemanticsError {
    /// A variable's index exceeds the valuation arity.
    VarBeyondArity { name: String, index: u32, arity: usize },
    ArityTooLarge { arity: usize },
    /// The premises clash, for an operation that requires a compatible set.
    IncompatiblePremises(ClashWitness),
    PreconditionViolated(&'static str),
}

impl fmt::Display for SemanticsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemanticsError::VarBeyondArity { name, index, arity } => write!(
                f,
                "variable {name} has index {index}, beyond arity {arity}"
            ),
            SemanticsError::ArityTooLarge { arity } => {
                write!(f, "arity {arity} exceeds the supported maximum {MAX_ARITY}")
            }
            SemanticsError::IncompatiblePremises(w) => write!(
                f,
                "premises {} and {} clash at valuation {}",
                w.i, w.j, w.valuation
            ),
            SemanticsError::PreconditionViolated(what) => {
                write!(f, "precondition violated: {what}")
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Valuations
// ---------------------------------------------------------------------------

/// An assignment of a trit to each of `X1..Xm`.
///
/// Valuations are numbered `0..3^m`: the index is the base-3 reading of the
/// digit sequence with `X1` most significant and the digit map
/// `0 -> 0`, `1/2 -> 1`, `1 -> 2`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Valuation {
    digits: Vec<Trit>,
}

impl Valuation {
    pub fn from_digits(digits: Vec<Trit>) -> Valuation {
        Valuation { digits }
    }

    pub fn from_index(m: usize, index: usize) -> Valuation {
        debug_assert!(index < pow3(m));
        let mut digits = vec![Trit::Zero; m];
        let mut rest = index;
        for i in (0..m).rev() {
            digits[i] = Trit::from_index(rest % 3).unwrap();
            rest /= 3;
        }
        Valuation { digits }
    }

    pub fn arity(&self) -> usize {
        self.digits.len()
    }

    pub fn index(&self) -> usize {
        self.digits
            .iter()
            .fold(0, |acc, d| acc * 3 + d.index())
    }

    /// Digit of the 1-based variable `X<index>`.
    pub fn digit(&self, var_index: u32) -> Option<Trit> {
        if var_index == 0 {
            return None;
        }
        self.digits.get(var_index as usize - 1).copied()
    }

    pub fn digits(&self) -> &[Trit] {
        &self.digits
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Truth tables
// ---------------------------------------------------------------------------

/// A total function `{0,1/2,1}^m -> {0,1/2,1}` as two packed bit planes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruthTable {
    arity: usize,
    len: usize,
    zeros: Vec<u64>,
    ones: Vec<u64>,
}

fn blocks(len: usize) -> usize {
    len.div_ceil(64)
}

impl TruthTable {
    pub fn constant(m: usize, value: Trit) -> TruthTable {
        let len = pow3(m);
        let mut t = TruthTable {
            arity: m,
            len,
            zeros: vec![0; blocks(len)],
            ones: vec![0; blocks(len)],
        };
        match value {
            Trit::Zero => {
                for w in &mut t.zeros {
                    *w = u64::MAX;
                }
            }
            Trit::One => {
                for w in &mut t.ones {
                    *w = u64::MAX;
                }
            }
            Trit::Half => {}
        }
        t.mask_tail();
        t
    }

    pub fn from_fn(m: usize, mut value: impl FnMut(usize) -> Trit) -> TruthTable {
        let len = pow3(m);
        let mut t = TruthTable {
            arity: m,
            len,
            zeros: vec![0; blocks(len)],
            ones: vec![0; blocks(len)],
        };
        for i in 0..len {
            t.set(i, value(i));
        }
        t
    }

    /// The coordinate function of the 1-based variable `X<var_index>`.
    pub fn coordinate(m: usize, var_index: u32) -> TruthTable {
        debug_assert!(var_index >= 1 && var_index as usize <= m);
        let weight = pow3(m - var_index as usize);
        TruthTable::from_fn(m, |i| Trit::from_index((i / weight) % 3).unwrap())
    }

    /// Parses a value string over `{0,h,1}`; the length must be a power
    /// of three, which determines the arity.
    pub fn from_symbols(s: &str) -> Result<TruthTable, String> {
        let n = s.chars().count();
        let mut m = 0;
        while pow3(m) < n {
            m += 1;
            if m > MAX_ARITY {
                return Err(String::from("table length exceeds the supported arity"));
            }
        }
        if pow3(m) != n {
            return Err(String::from("table length must be a power of 3"));
        }
        let mut values = Vec::with_capacity(n);
        for (i, c) in s.chars().enumerate() {
            match Trit::from_symbol(c) {
                Some(t) => values.push(t),
                None => return Err(alloc::format!("bad trit symbol `{c}` at position {i}")),
            }
        }
        Ok(TruthTable::from_fn(m, |i| values[i]))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> Trit {
        debug_assert!(i < self.len);
        let (w, b) = (i / 64, i % 64);
        if self.zeros[w] >> b & 1 == 1 {
            Trit::Zero
        } else if self.ones[w] >> b & 1 == 1 {
            Trit::One
        } else {
            Trit::Half
        }
    }

    pub fn set(&mut self, i: usize, value: Trit) {
        debug_assert!(i < self.len);
        let (w, b) = (i / 64, i % 64);
        self.zeros[w] &= !(1u64 << b);
        self.ones[w] &= !(1u64 << b);
        match value {
            Trit::Zero => self.zeros[w] |= 1 << b,
            Trit::One => self.ones[w] |= 1 << b,
            Trit::Half => {}
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Trit> + '_ {
        (0..self.len).map(|i| self.get(i))
    }

    pub fn values_string(&self) -> String {
        self.iter().map(Trit::symbol).collect()
    }

    fn mask_tail(&mut self) {
        let used = self.len % 64;
        if used != 0 {
            let mask = (1u64 << used) - 1;
            *self.zeros.last_mut().unwrap() &= mask;
            *self.ones.last_mut().unwrap() &= mask;
        }
    }

    fn zip(&self, other: &TruthTable, f: impl Fn(u64, u64, u64, u64) -> (u64, u64)) -> TruthTable {
        assert_eq!(self.arity, other.arity, "truth-table arity mismatch");
        let mut out = TruthTable {
            arity: self.arity,
            len: self.len,
            zeros: vec![0; self.zeros.len()],
            ones: vec![0; self.ones.len()],
        };
        for w in 0..self.zeros.len() {
            let (z, o) = f(self.zeros[w], self.ones[w], other.zeros[w], other.ones[w]);
            out.zeros[w] = z;
            out.ones[w] = o;
        }
        out.mask_tail();
        out
    }

    pub fn join(&self, other: &TruthTable) -> TruthTable {
        self.zip(other, |za, oa, zb, ob| (za & zb, oa & ob))
    }

    pub fn dpar(&self, other: &TruthTable) -> TruthTable {
        self.zip(other, |za, oa, zb, ob| {
            ((ob & !oa) | (za & zb), (zb & !za) | (oa & ob))
        })
    }

    pub fn meet(&self, other: &TruthTable) -> TruthTable {
        self.zip(other, |za, oa, zb, ob| (za | zb, oa & ob))
    }

    pub fn vee(&self, other: &TruthTable) -> TruthTable {
        self.zip(other, |za, oa, zb, ob| (za & zb, oa | ob))
    }

    pub fn neg(&self) -> TruthTable {
        let mut out = self.clone();
        core::mem::swap(&mut out.zeros, &mut out.ones);
        out
    }

    pub fn nabla(&self) -> TruthTable {
        let mut out = self.clone();
        for w in 0..out.zeros.len() {
            out.ones[w] = !out.zeros[w];
        }
        out.mask_tail();
        out
    }

    pub fn delta(&self) -> TruthTable {
        let mut out = self.clone();
        for w in 0..out.zeros.len() {
            out.zeros[w] = !out.ones[w];
        }
        out.mask_tail();
        out
    }

    pub fn flip(&self) -> TruthTable {
        let mut out = self.clone();
        for w in 0..out.zeros.len() {
            out.ones[w] = !(self.zeros[w] | self.ones[w]);
        }
        out.mask_tail();
        out
    }

    /// Pointwise partial intersection; `None` if any point clashes.
    pub fn meet_partial(&self, other: &TruthTable) -> Option<TruthTable> {
        assert_eq!(self.arity, other.arity, "truth-table arity mismatch");
        for w in 0..self.zeros.len() {
            if (self.zeros[w] & other.ones[w]) | (self.ones[w] & other.zeros[w]) != 0 {
                return None;
            }
        }
        Some(self.zip(other, |za, oa, zb, ob| (za | zb, oa | ob)))
    }

    /// Pointwise inclusion: every entry of `self` is below the matching
    /// entry of `other`.
    pub fn below(&self, other: &TruthTable) -> bool {
        assert_eq!(self.arity, other.arity, "truth-table arity mismatch");
        for w in 0..self.zeros.len() {
            let viol = (other.zeros[w] & !self.zeros[w]) | (other.ones[w] & !self.ones[w]);
            if viol != 0 {
                return false;
            }
        }
        true
    }

    pub fn is_constant_half(&self) -> bool {
        self.zeros.iter().all(|w| *w == 0) && self.ones.iter().all(|w| *w == 0)
    }

    pub fn is_constant_one(&self) -> bool {
        let mut probe = self.clone();
        for w in 0..probe.ones.len() {
            probe.ones[w] = !self.ones[w];
        }
        probe.mask_tail();
        probe.ones.iter().all(|w| *w == 0)
    }

    /// Indices where the value is not `1/2`, i.e. where the boxed
    /// consequence condition needs a covering premise.
    pub fn non_half_indices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for i in 0..self.len {
            if self.get(i) != Trit::Half {
                out.push(i);
            }
        }
        out
    }

    /// Indices where the value is `1/2`.
    pub fn half_indices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for i in 0..self.len {
            if self.get(i) == Trit::Half {
                out.push(i);
            }
        }
        out
    }
}

fn first_set_bit(words: &[u64]) -> Option<usize> {
    for (w, word) in words.iter().enumerate() {
        if *word != 0 {
            return Some(w * 64 + word.trailing_zeros() as usize);
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

fn check_arity(f: &Formula, m: usize) -> Result<(), SemanticsError> {
    if m > MAX_ARITY {
        return Err(SemanticsError::ArityTooLarge { arity: m });
    }
    if let Some(v) = f.vars().into_iter().find(|v| v.index as usize > m) {
        return Err(SemanticsError::VarBeyondArity {
            name: v.name,
            index: v.index,
            arity: m,
        });
    }
    Ok(())
}

/// Evaluates a formula at one valuation.
pub fn eval(f: &Formula, v: &Valuation) -> Result<Trit, SemanticsError> {
    check_arity(f, v.arity())?;
    Ok(eval_unchecked(f, v))
}

fn eval_unchecked(f: &Formula, v: &Valuation) -> Trit {
    match f {
        Formula::Zero => Trit::Zero,
        Formula::Half => Trit::Half,
        Formula::One => Trit::One,
        Formula::Var(x) => v.digit(x.index).expect("arity checked"),
        Formula::Join(l, r) => eval_unchecked(l, v).join(eval_unchecked(r, v)),
        Formula::Dpar(l, r) => eval_unchecked(l, v).dpar(eval_unchecked(r, v)),
        Formula::Meet(l, r) => eval_unchecked(l, v).meet(eval_unchecked(r, v)),
        Formula::Neg(a) => eval_unchecked(a, v).neg(),
        Formula::Nabla(a) => eval_unchecked(a, v).nabla(),
        Formula::Delta(a) => eval_unchecked(a, v).delta(),
        Formula::Vee(l, r) => eval_unchecked(l, v).vee(eval_unchecked(r, v)),
        Formula::Flip(a) => eval_unchecked(a, v).flip(),
        Formula::Arrow(l, r) => {
            let a = eval_unchecked(l, v);
            let b = eval_unchecked(r, v);
            let j1 = b.join(a.neg().nabla());
            let j2 = b.join(a.nabla().neg());
            j1.meet(j2).meet(j1.neg()).meet(j2.neg())
        }
    }
}

/// Tabulates a formula over all `3^m` valuations.
pub fn table(f: &Formula, m: usize) -> Result<TruthTable, SemanticsError> {
    check_arity(f, m)?;
    Ok(table_unchecked(f, m))
}

fn table_unchecked(f: &Formula, m: usize) -> TruthTable {
    match f {
        Formula::Zero => TruthTable::constant(m, Trit::Zero),
        Formula::Half => TruthTable::constant(m, Trit::Half),
        Formula::One => TruthTable::constant(m, Trit::One),
        Formula::Var(x) => TruthTable::coordinate(m, x.index),
        Formula::Join(l, r) => table_unchecked(l, m).join(&table_unchecked(r, m)),
        Formula::Dpar(l, r) => table_unchecked(l, m).dpar(&table_unchecked(r, m)),
        Formula::Meet(l, r) => table_unchecked(l, m).meet(&table_unchecked(r, m)),
        Formula::Neg(a) => table_unchecked(a, m).neg(),
        Formula::Nabla(a) => table_unchecked(a, m).nabla(),
        Formula::Delta(a) => table_unchecked(a, m).delta(),
        Formula::Vee(l, r) => table_unchecked(l, m).vee(&table_unchecked(r, m)),
        Formula::Flip(a) => table_unchecked(a, m).flip(),
        Formula::Arrow(l, r) => {
            let a = table_unchecked(l, m);
            let b = table_unchecked(r, m);
            let j1 = b.join(&a.neg().nabla());
            let j2 = b.join(&a.nabla().neg());
            j1.meet(&j2).meet(&j1.neg()).meet(&j2.neg())
        }
    }
}

/// Evaluates a Post-signature formula at one valuation.
pub fn post_eval(p: &PostFormula, v: &Valuation) -> Result<Trit, SemanticsError> {
    if let Some(x) = p.vars().into_iter().find(|x| x.index as usize > v.arity()) {
        return Err(SemanticsError::VarBeyondArity {
            name: x.name,
            index: x.index,
            arity: v.arity(),
        });
    }
    Ok(post_eval_unchecked(p, v))
}

fn post_eval_unchecked(p: &PostFormula, v: &Valuation) -> Trit {
    match p {
        PostFormula::Zero => Trit::Zero,
        PostFormula::Half => Trit::Half,
        PostFormula::One => Trit::One,
        PostFormula::Var(x) => v.digit(x.index).expect("arity checked"),
        PostFormula::Neg(a) => post_eval_unchecked(a, v).neg(),
        PostFormula::Nabla(a) => post_eval_unchecked(a, v).nabla(),
        PostFormula::Vee(l, r) => post_eval_unchecked(l, v).vee(post_eval_unchecked(r, v)),
        PostFormula::Meet(l, r) => post_eval_unchecked(l, v).meet(post_eval_unchecked(r, v)),
    }
}

/// Tabulates a Post-signature formula.
pub fn post_table(p: &PostFormula, m: usize) -> Result<TruthTable, SemanticsError> {
    if m > MAX_ARITY {
        return Err(SemanticsError::ArityTooLarge { arity: m });
    }
    if let Some(x) = p.vars().into_iter().find(|x| x.index as usize > m) {
        return Err(SemanticsError::VarBeyondArity {
            name: x.name,
            index: x.index,
            arity: m,
        });
    }
    Ok(post_table_unchecked(p, m))
}

fn post_table_unchecked(p: &PostFormula, m: usize) -> TruthTable {
    match p {
        PostFormula::Zero => TruthTable::constant(m, Trit::Zero),
        PostFormula::Half => TruthTable::constant(m, Trit::Half),
        PostFormula::One => TruthTable::constant(m, Trit::One),
        PostFormula::Var(x) => TruthTable::coordinate(m, x.index),
        PostFormula::Neg(a) => post_table_unchecked(a, m).neg(),
        PostFormula::Nabla(a) => post_table_unchecked(a, m).nabla(),
        PostFormula::Vee(l, r) => post_table_unchecked(l, m).vee(&post_table_unchecked(r, m)),
        PostFormula::Meet(l, r) => post_table_unchecked(l, m).meet(&post_table_unchecked(r, m)),
    }
}

/// Tables are equal at the given arity.
pub fn equivalent(f: &Formula, g: &Formula, m: usize) -> Result<bool, SemanticsError> {
    Ok(table(f, m)? == table(g, m)?)
}

/// A tautology has the constantly-`1/2` table over its own variables.
pub fn is_tautology(f: &Formula) -> Result<bool, SemanticsError> {
    let m = f.max_var_index() as usize;
    Ok(table(f, m)?.is_constant_half())
}

/// Every entry of the Post table is `1`.
pub fn post_tautology(p: &PostFormula) -> Result<bool, SemanticsError> {
    let m = p.max_var_index() as usize;
    Ok(post_table(p, m)?.is_constant_one())
}

// ---------------------------------------------------------------------------
// Theories, compatibility, entailment
// ---------------------------------------------------------------------------

/// A finite premise set: duplicates removed by AST equality, first-occurrence
/// order preserved so that witnesses are deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Theory {
    formulas: Vec<Formula>,
}

impl Theory {
    pub fn new(formulas: impl IntoIterator<Item = Formula>) -> Theory {
        let mut out = Vec::new();
        for f in formulas {
            if !out.contains(&f) {
                out.push(f);
            }
        }
        Theory { formulas: out }
    }

    pub fn formulas(&self) -> &[Formula] {
        &self.formulas
    }

    pub fn len(&self) -> usize {
        self.formulas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.formulas.is_empty()
    }

    /// Smallest arity accommodating every premise variable.
    pub fn arity(&self) -> usize {
        self.formulas
            .iter()
            .map(|f| f.max_var_index() as usize)
            .max()
            .unwrap_or(0)
    }
}

/// Which reading of "incompatible premise set" to apply.
///
/// `Clash` is the adopted reading: some valuation gives two premises the
/// value pair `{0, 1}`. `Literal` is the verbatim `t1(v) = 1 - t2(v)`
/// condition, which additionally fires when a premise takes value `1/2`
/// (then `t = 1 - t` with `t1 = t2`), making even `{1/2}` incompatible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum IncompatRule {
    #[default]
    Clash,
    Literal,
}

/// Where and between which premises a clash happens.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClashWitness {
    pub valuation: Valuation,
    /// Positions in the theory's formula list.
    pub i: usize,
    pub j: usize,
    pub values: (Trit, Trit),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Compatibility {
    Compatible,
    Incompatible(ClashWitness),
}

impl Compatibility {
    pub fn is_compatible(&self) -> bool {
        matches!(self, Compatibility::Compatible)
    }
}

fn premise_tables(t: &Theory, m: usize) -> Result<Vec<TruthTable>, SemanticsError> {
    t.formulas().iter().map(|f| table(f, m)).collect()
}

/// Decides compatibility at the theory's own arity (adopted reading).
pub fn compatibility(t: &Theory) -> Result<Compatibility, SemanticsError> {
    compatibility_at(t, t.arity(), IncompatRule::Clash)
}

/// Decides compatibility at an explicit arity, returning the
/// lexicographically least witness `(v, i, j)`.
pub fn compatibility_at(
    t: &Theory,
    m: usize,
    rule: IncompatRule,
) -> Result<Compatibility, SemanticsError> {
    let tables = premise_tables(t, m)?;
    let mut best: Option<(usize, usize, usize)> = None;
    for i in 0..tables.len() {
        let j_start = match rule {
            IncompatRule::Clash => i + 1,
            IncompatRule::Literal => i,
        };
        for j in j_start..tables.len() {
            let (a, b) = (&tables[i], &tables[j]);
            let mut clash = vec![0u64; a.zeros.len()];
            for (w, slot) in clash.iter_mut().enumerate() {
                *slot = (a.zeros[w] & b.ones[w]) | (a.ones[w] & b.zeros[w]);
                if rule == IncompatRule::Literal {
                    // 1/2 = 1 - 1/2: a point where both take value 1/2
                    // also satisfies the verbatim condition.
                    let ha = !a.zeros[w] & !a.ones[w];
                    let hb = !b.zeros[w] & !b.ones[w];
                    *slot |= ha & hb;
                }
            }
            // Mask tail bits introduced by the negations above.
            let used = a.len % 64;
            if used != 0 {
                *clash.last_mut().unwrap() &= (1u64 << used) - 1;
            }
            if let Some(bit) = first_set_bit(&clash) {
                if best.is_none_or(|b0| (bit, i, j) < b0) {
                    best = Some((bit, i, j));
                }
            }
        }
    }
    Ok(match best {
        None => Compatibility::Compatible,
        Some((idx, i, j)) => {
            let valuation = Valuation::from_index(m, idx);
            let values = (tables[i].get(idx), tables[j].get(idx));
            Compatibility::Incompatible(ClashWitness {
                valuation,
                i,
                j,
                values,
            })
        }
    })
}

/// Why a consequence verdict holds or fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Least valuation where the boxed condition fails.
    Counterexample(Valuation),
    /// Premise clash that triggers explosion.
    Clash(ClashWitness),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Compatible,
    Incompatible,
}

/// Outcome of a consequence query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub mode: Mode,
    pub witness: Option<Witness>,
}

/// The consequence relation at the natural arity of `t` and `goal`.
pub fn entails(t: &Theory, goal: &Formula) -> Result<Verdict, SemanticsError> {
    let m = t.arity().max(goal.max_var_index() as usize);
    entails_at(t, goal, m, IncompatRule::Clash)
}

/// The consequence relation: explosion on incompatible premises, otherwise
/// the boxed condition "every valuation is covered by some premise or by
/// the constant 1/2".
pub fn entails_at(
    t: &Theory,
    goal: &Formula,
    m: usize,
    rule: IncompatRule,
) -> Result<Verdict, SemanticsError> {
    let goal_table = table(goal, m)?;
    match compatibility_at(t, m, rule)? {
        Compatibility::Incompatible(w) => Ok(Verdict {
            holds: true,
            mode: Mode::Incompatible,
            witness: Some(Witness::Clash(w)),
        }),
        Compatibility::Compatible => {
            let tables = premise_tables(t, m)?;
            let blocks = goal_table.zeros.len();
            let mut covered_zero = vec![0u64; blocks];
            let mut covered_one = vec![0u64; blocks];
            for p in &tables {
                for w in 0..blocks {
                    covered_zero[w] |= p.zeros[w] & goal_table.zeros[w];
                    covered_one[w] |= p.ones[w] & goal_table.ones[w];
                }
            }
            let mut fail = vec![0u64; blocks];
            for w in 0..blocks {
                fail[w] = (goal_table.zeros[w] & !covered_zero[w])
                    | (goal_table.ones[w] & !covered_one[w]);
            }
            match first_set_bit(&fail) {
                None => Ok(Verdict {
                    holds: true,
                    mode: Mode::Compatible,
                    witness: None,
                }),
                Some(idx) => Ok(Verdict {
                    holds: false,
                    mode: Mode::Compatible,
                    witness: Some(Witness::Counterexample(Valuation::from_index(m, idx))),
                }),
            }
        }
    }
}

/// Consequence via the fold of the partial intersection: the premises'
/// pointwise meet must be absorbed by the goal under join. Rejects
/// incompatible premise sets.
pub fn entails_via_meet(t: &Theory, goal: &Formula) -> Result<Verdict, SemanticsError> {
    let m = t.arity().max(goal.max_var_index() as usize);
    entails_via_meet_at(t, goal, m, IncompatRule::Clash)
}

pub fn entails_via_meet_at(
    t: &Theory,
    goal: &Formula,
    m: usize,
    rule: IncompatRule,
) -> Result<Verdict, SemanticsError> {
    if let Compatibility::Incompatible(w) = compatibility_at(t, m, rule)? {
        return Err(SemanticsError::IncompatiblePremises(w));
    }
    let goal_table = table(goal, m)?;
    let mut fold = TruthTable::constant(m, Trit::Half);
    for p in premise_tables(t, m)? {
        fold = fold
            .meet_partial(&p)
            .ok_or(SemanticsError::PreconditionViolated(
                "meet fold undefined on a compatible theory",
            ))?;
    }
    let joined = fold.join(&goal_table);
    if joined == goal_table {
        Ok(Verdict {
            holds: true,
            mode: Mode::Compatible,
            witness: None,
        })
    } else {
        let mut diff = vec![0u64; goal_table.zeros.len()];
        for (w, slot) in diff.iter_mut().enumerate() {
            *slot = (joined.zeros[w] ^ goal_table.zeros[w])
                | (joined.ones[w] ^ goal_table.ones[w]);
        }
        let idx = first_set_bit(&diff).expect("tables differ");
        Ok(Verdict {
            holds: false,
            mode: Mode::Compatible,
            witness: Some(Witness::Counterexample(Valuation::from_index(m, idx))),
        })
    }
}

/// The single formula whose table is the pointwise partial intersection of
/// the two (compatible) premises.
pub fn meet_formula(t1: &Formula, t2: &Formula) -> Result<Formula, SemanticsError> {
    let m = (t1.max_var_index().max(t2.max_var_index())) as usize;
    let pair = Theory::new([t1.clone(), t2.clone()]);
    if let Compatibility::Incompatible(w) = compatibility_at(&pair, m, IncompatRule::Clash)? {
        return Err(SemanticsError::IncompatiblePremises(w));
    }
    // !N(!t1 & !t2) | (h & N(t1 & !t1) & N(t2 & !t2))
    let left = t1
        .clone()
        .neg()
        .meet(t2.clone().neg())
        .nabla()
        .neg();
    let right = Formula::Half
        .meet(t1.clone().meet(t1.clone().neg()).nabla())
        .meet(t2.clone().meet(t2.clone().neg()).nabla());
    Ok(left.vee(right))
}

/// Consequence between single formulas via the tautology reduction.
pub fn entails_via_reduction(a: &Formula, b: &Formula) -> Result<bool, SemanticsError> {
    is_tautology(&a.clone().arrow(b.clone()))
}

/// Translates a Post formula and applies the flip so that Post tautology
/// becomes tautology here.
pub fn reduce_post_to_rm(p: &PostFormula) -> Formula {
    let b = p.to_rm();
    b.clone()
        .dpar(Formula::Zero)
        .join(Formula::Zero.dpar(b).dpar(Formula::Zero))
}

/// Extracts a finite entailing core by the covering argument: every
/// valuation where the goal is not `1/2` picks its least covering premise.
pub fn compactness_core(t: &Theory, goal: &Formula) -> Result<Theory, SemanticsError> {
    let m = t.arity().max(goal.max_var_index() as usize);
    if let Compatibility::Incompatible(w) = compatibility_at(t, m, IncompatRule::Clash)? {
        return Err(SemanticsError::IncompatiblePremises(w));
    }
    let verdict = entails_at(t, goal, m, IncompatRule::Clash)?;
    if !verdict.holds {
        return Err(SemanticsError::PreconditionViolated(
            "the premises do not entail the goal",
        ));
    }
    let goal_table = table(goal, m)?;
    let tables = premise_tables(t, m)?;
    let mut chosen = vec![false; tables.len()];
    for idx in goal_table.non_half_indices() {
        let want = goal_table.get(idx);
        let covering = tables
            .iter()
            .position(|p| p.get(idx) == want)
            .expect("entailment holds, so a cover exists");
        chosen[covering] = true;
    }
    Ok(Theory::new(
        t.formulas()
            .iter()
            .zip(&chosen)
            .filter(|(_, keep)| **keep)
            .map(|(f, _)| f.clone()),
    ))
}

/// Finds, smallest formulas first, a triple `(a, b, g)` with
/// `{a} |= g`, `{a & b}` compatible, and `{a & b} |/= g`.
pub fn nonmonotonicity_witness(
    m: usize,
) -> Result<(Formula, Formula, Formula), SemanticsError> {
    if m == 0 {
        return Err(SemanticsError::PreconditionViolated(
            "nonmonotonicity needs at least one variable",
        ));
    }
    let pool = crate::enumerate::rm_formulas(m.min(2), 3);
    let max_total = pool.iter().map(|f| f.size()).max().unwrap_or(1) * 3;
    for total in 3..=max_total {
        for a in &pool {
            for b in &pool {
                for g in &pool {
                    if a.size() + b.size() + g.size() != total {
                        continue;
                    }
                    if is_witness_triple(a, b, g, m)? {
                        return Ok((a.clone(), b.clone(), g.clone()));
                    }
                }
            }
        }
    }
    Err(SemanticsError::PreconditionViolated(
        "no nonmonotonicity witness found in the search space",
    ))
}

fn is_witness_triple(
    a: &Formula,
    b: &Formula,
    g: &Formula,
    m: usize,
) -> Result<bool, SemanticsError> {
    let single = Theory::new([a.clone()]);
    if !entails_at(&single, g, m, IncompatRule::Clash)?.holds {
        return Ok(false);
    }
    let conj = Theory::new([a.clone().meet(b.clone())]);
    if !compatibility_at(&conj, m, IncompatRule::Clash)?.is_compatible() {
        return Ok(false);
    }
    Ok(!entails_at(&conj, g, m, IncompatRule::Clash)?.holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    fn tbl(src: &str, m: usize) -> TruthTable {
        table(&parse(src).unwrap(), m).unwrap()
    }

    #[test]
    fn valuation_index_round_trip() {
        for m in 0..=3 {
            for idx in 0..pow3(m) {
                let v = Valuation::from_index(m, idx);
                assert_eq!(v.index(), idx);
                assert_eq!(v.arity(), m);
            }
        }
        // X1 is most significant: index 5 at m=2 is (X1=h, X2=1).
        let v = Valuation::from_index(2, 5);
        assert_eq!(v.digit(1), Some(Trit::Half));
        assert_eq!(v.digit(2), Some(Trit::One));
    }

    #[test]
    fn plane_ops_match_trit_ops() {
        let a = TruthTable::coordinate(2, 1);
        let b = TruthTable::coordinate(2, 2);
        for i in 0..9 {
            let (x, y) = (a.get(i), b.get(i));
            assert_eq!(a.join(&b).get(i), x.join(y));
            assert_eq!(a.dpar(&b).get(i), x.dpar(y));
            assert_eq!(a.meet(&b).get(i), x.meet(y));
            assert_eq!(a.vee(&b).get(i), x.vee(y));
            assert_eq!(a.neg().get(i), x.neg());
            assert_eq!(a.nabla().get(i), x.nabla());
            assert_eq!(a.delta().get(i), x.delta());
            assert_eq!(a.flip().get(i), x.flip());
        }
        let mp = a.meet_partial(&b);
        assert!(mp.is_none(), "coordinates clash at (0,1)");
    }

    #[test]
    fn table_examples() {
        assert_eq!(tbl("X1", 1).values_string(), "0h1");
        assert_eq!(tbl("N X1", 1).values_string(), "011");
        assert_eq!(tbl("X1 # !X1", 1).values_string(), "hhh");
        assert_eq!(tbl("X1 # 0", 1).values_string(), "0hh");
    }

    #[test]
    fn eval_examples() {
        let one = parse("d(h,0)").unwrap();
        assert_eq!(eval(&one, &Valuation::from_digits(vec![])).unwrap(), Trit::One);
        let f = parse("X1 # !X1").unwrap();
        assert_eq!(
            eval(&f, &Valuation::from_digits(vec![Trit::One])).unwrap(),
            Trit::Half
        );
        let x = parse("X1").unwrap();
        assert_eq!(
            eval(&x, &Valuation::from_digits(vec![Trit::Half])).unwrap(),
            Trit::Half
        );
    }

    #[test]
    fn eval_arity_error() {
        let f = parse("X2").unwrap();
        let err = eval(&f, &Valuation::from_digits(vec![Trit::Zero])).unwrap_err();
        assert!(matches!(err, SemanticsError::VarBeyondArity { index: 2, .. }));
    }

    #[test]
    fn tautology_examples() {
        assert!(is_tautology(&parse("h").unwrap()).unwrap());
        assert!(is_tautology(&parse("X1 # !X1").unwrap()).unwrap());
        assert!(!is_tautology(&parse("X1").unwrap()).unwrap());
    }

    #[test]
    fn equivalence_examples() {
        let prs = |s| parse(s).unwrap();
        assert!(equivalent(&prs("T X1"), &prs("!N !X1"), 1).unwrap());
        assert!(equivalent(&prs("!X1 # !X2"), &prs("!(X1 # X2)"), 2).unwrap());
        assert!(!equivalent(&prs("X1"), &prs("X2"), 2).unwrap());
    }

    #[test]
    fn compatibility_examples() {
        let prs = |s| parse(s).unwrap();
        let t = Theory::new([prs("X1"), prs("!X1")]);
        match compatibility(&t).unwrap() {
            Compatibility::Incompatible(w) => {
                assert_eq!(w.valuation.index(), 0);
                assert_eq!((w.i, w.j), (0, 1));
                assert_eq!(w.values, (Trit::Zero, Trit::One));
            }
            c => panic!("expected a clash, got {c:?}"),
        }
        let taut = Theory::new([prs("X1 # !X1"), prs("!(X1 # !X1)")]);
        assert!(compatibility(&taut).unwrap().is_compatible());
        let h = Theory::new([prs("h"), prs("X1")]);
        assert!(compatibility(&h).unwrap().is_compatible());
    }

    #[test]
    fn strict_incompatibility_admits_self_clash_at_half() {
        let t = Theory::new([parse("h").unwrap()]);
        assert!(compatibility_at(&t, 0, IncompatRule::Clash)
            .unwrap()
            .is_compatible());
        match compatibility_at(&t, 0, IncompatRule::Literal).unwrap() {
            Compatibility::Incompatible(w) => assert_eq!((w.i, w.j), (0, 0)),
            c => panic!("literal rule should fire on the constant 1/2, got {c:?}"),
        }
    }

    #[test]
    fn entails_examples() {
        let prs = |s| parse(s).unwrap();
        let v = entails(&Theory::new([prs("X1")]), &prs("X1 # 0")).unwrap();
        assert!(v.holds);

        let v = entails(&Theory::new([prs("X1 # 0")]), &prs("X1")).unwrap();
        assert!(!v.holds);
        match v.witness {
            Some(Witness::Counterexample(w)) => assert_eq!(w.digits(), &[Trit::One]),
            w => panic!("expected counterexample, got {w:?}"),
        }

        let v = entails(&Theory::new([prs("0")]), &prs("X1")).unwrap();
        assert!(!v.holds);
        match v.witness {
            Some(Witness::Counterexample(w)) => assert_eq!(w.digits(), &[Trit::One]),
            w => panic!("expected counterexample, got {w:?}"),
        }

        // Explosion.
        let v = entails(&Theory::new([prs("X1"), prs("!X1")]), &prs("X2")).unwrap();
        assert!(v.holds);
        assert_eq!(v.mode, Mode::Incompatible);
    }

    #[test]
    fn empty_theory_reduces_to_tautology() {
        let prs = |s| parse(s).unwrap();
        for s in ["h", "X1 # !X1", "X1", "0"] {
            let f = prs(s);
            assert_eq!(
                entails(&Theory::default(), &f).unwrap().holds,
                is_tautology(&f).unwrap()
            );
        }
    }

    #[test]
    fn entails_via_meet_examples() {
        let prs = |s| parse(s).unwrap();
        assert!(entails_via_meet(&Theory::new([prs("X1")]), &prs("X1 # 0"))
            .unwrap()
            .holds);
        // Delta X1 table "001", X1 "0h1", pointwise meet "001"; absorbed.
        assert!(
            entails_via_meet(&Theory::new([prs("T X1"), prs("X1")]), &prs("X1"))
                .unwrap()
                .holds
        );
        assert!(!entails_via_meet(&Theory::new([prs("X1")]), &prs("!X1"))
            .unwrap()
            .holds);
        // Incompatible input is rejected.
        let err = entails_via_meet(&Theory::new([prs("X1"), prs("!X1")]), &prs("X2"));
        assert!(matches!(err, Err(SemanticsError::IncompatiblePremises(_))));
    }

    #[test]
    fn meet_formula_examples() {
        let prs = |s: &str| parse(s).unwrap();
        let cases = [
            ("X1", "X1", "0h1"),
            ("T X1", "X1", "001"),
            ("h", "X1", "0h1"),
        ];
        for (a, b, want) in cases {
            let w = meet_formula(&prs(a), &prs(b)).unwrap();
            assert_eq!(table(&w, 1).unwrap().values_string(), want);
        }
        assert!(meet_formula(&prs("X1"), &prs("!X1")).is_err());
    }

    #[test]
    fn reduction_examples() {
        let prs = |s| parse(s).unwrap();
        assert!(entails_via_reduction(&prs("X1"), &prs("X1 # 0")).unwrap());
        assert!(!entails_via_reduction(&prs("X1 # 0"), &prs("X1")).unwrap());
        assert!(entails_via_reduction(&prs("h"), &prs("X1 # !X1")).unwrap());
    }

    #[test]
    fn post_reduction_examples() {
        let post = |s: &str| PostFormula::try_from(&parse(s).unwrap()).unwrap();
        let cases = [("N X1 | !N X1", true), ("X1 | !X1", false), ("1", true)];
        for (src, want) in cases {
            let p = post(src);
            assert_eq!(post_tautology(&p).unwrap(), want, "{src}");
            let reduced = reduce_post_to_rm(&p);
            assert_eq!(is_tautology(&reduced).unwrap(), want, "{src}");
        }
    }

    #[test]
    fn distinct_variables_are_incompatible() {
        // At the valuation (X1=0, X2=1) the pair takes the clash values
        // {0, 1}, so {X1, X2} is an incompatible premise set. A
        // consequence of the definition worth pinning down: it makes the
        // duplicate-premise example below need a compatible premise pair.
        let prs = |s: &str| parse(s).unwrap();
        let t = Theory::new([prs("X1"), prs("X2")]);
        match compatibility(&t).unwrap() {
            Compatibility::Incompatible(w) => {
                assert_eq!(w.valuation.digits(), &[Trit::Zero, Trit::One]);
            }
            c => panic!("expected a clash, got {c:?}"),
        }
    }

    #[test]
    fn compactness_examples() {
        let prs = |s: &str| parse(s).unwrap();
        // Duplicates collapse and the greedy cover keeps only the premise
        // that covers the non-1/2 points.
        let t = Theory::new([prs("X1"), prs("X1 # 0"), prs("X1")]);
        let core = compactness_core(&t, &prs("X1 # 0")).unwrap();
        assert_eq!(core.formulas(), &[prs("X1")]);
        assert!(entails(&core, &prs("X1 # 0")).unwrap().holds);

        // Incompatible premises are rejected, per the precondition.
        let t = Theory::new([prs("X1"), prs("X2"), prs("X1")]);
        assert!(matches!(
            compactness_core(&t, &prs("X1 # 0")),
            Err(SemanticsError::IncompatiblePremises(_))
        ));

        let t = Theory::new([prs("h"), prs("X1")]);
        let core = compactness_core(&t, &prs("X1")).unwrap();
        assert_eq!(core.formulas(), &[prs("X1")]);

        let core = compactness_core(&Theory::default(), &prs("X1 # !X1")).unwrap();
        assert!(core.is_empty());

        let bad = compactness_core(&Theory::new([prs("X1 # 0")]), &prs("X1"));
        assert!(matches!(
            bad,
            Err(SemanticsError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn nonmonotonicity_witness_self_checks() {
        let (a, b, g) = nonmonotonicity_witness(1).unwrap();
        assert!(is_witness_triple(&a, &b, &g, 1).unwrap());
        // The textbook triple is also valid, just not the smallest.
        let prs = |s: &str| parse(s).unwrap();
        assert!(is_witness_triple(&prs("X1"), &prs("!X1"), &prs("X1"), 1).unwrap());
        // Brute force: the conjoined premise stops entailing the goal.
        assert!(!entails(&Theory::new([prs("X1 & !X1")]), &prs("X1"))
            .unwrap()
            .holds);
    }

    #[test]
    fn variable_extension_stability() {
        let prs = |s: &str| parse(s).unwrap();
        let t = Theory::new([prs("X1")]);
        let goals = [prs("X1 # 0"), prs("!X1"), prs("h")];
        for g in &goals {
            let base = entails(&t, g).unwrap().holds;
            for m in 1..=4 {
                assert_eq!(
                    entails_at(&t, g, m, IncompatRule::Clash).unwrap().holds,
                    base
                );
            }
        }
    }
}
