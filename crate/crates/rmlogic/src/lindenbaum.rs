//! Mod-sets, Lindenbaum algebras, and the cube/simplex correspondence
//! tables at machine scale.
//!
//! `Mod(T)` collects the valuations where every premise takes the value
//! `1/2`. The Lindenbaum algebra of `T` is the algebra of restrictions of
//! truth tables to `Mod(T)`, which is all functions `Mod(T) -> {0,1/2,1}`
//! with the pointwise operations; with `n = |Mod(T)| >= 1` it is a copy of
//! the face algebra of the n-cube, and the one-element algebra otherwise.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{
    boolean_axioms, check_axioms, face_algebra, iso_check, rm_axioms, trivial_rm, z_rm,
    AlgebraError, FiniteAlgebra,
};
use crate::formula::synthesize;
use crate::semantics::{
    entails, pow3, table, Theory, TruthTable, SemanticsError,
};
use crate::trit::Trit;

/// The valuations (by index) where every premise of a theory is `1/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModSet {
    pub m: usize,
    pub valuations: Vec<usize>,
}

impl ModSet {
    pub fn len(&self) -> usize {
        self.valuations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.valuations.is_empty()
    }
}

/// Intersection of the `1/2`-preimages of all premises (the constant-`1/2`
/// premise contributes everything, so the empty theory yields all `3^m`
/// indices).
pub fn mod_set(t: &Theory, m: usize) -> Result<ModSet, SemanticsError> {
    let mut keep = vec![true; pow3(m)];
    for f in t.formulas() {
        let tab = table(f, m)?;
        for (i, flag) in keep.iter_mut().enumerate() {
            if tab.get(i) != Trit::Half {
                *flag = false;
            }
        }
    }
    Ok(ModSet {
        m,
        valuations: keep
            .iter()
            .enumerate()
            .filter(|(_, k)| **k)
            .map(|(i, _)| i)
            .collect(),
    })
}

/// The Lindenbaum algebra of a theory.
pub enum Lind {
    /// `Mod(T)` is empty: the one-element algebra.
    Trivial { mods: ModSet, algebra: FiniteAlgebra },
    /// `Mod(T)` has `1..=4` points: the explicit function algebra.
    Algebra { mods: ModSet, algebra: FiniteAlgebra },
    /// Larger `Mod(T)`: cardinality plus the pointwise-base certification
    /// (a function algebra satisfies exactly the equations of its base).
    Certified {
        mods: ModSet,
        carrier_size: Option<u128>,
        base_passes_axioms: bool,
    },
}

impl Lind {
    pub fn mods(&self) -> &ModSet {
        match self {
            Lind::Trivial { mods, .. } | Lind::Algebra { mods, .. } | Lind::Certified { mods, .. } => {
                mods
            }
        }
    }

    pub fn carrier_size(&self) -> Option<u128> {
        match self {
            Lind::Trivial { .. } => Some(1),
            Lind::Algebra { algebra, .. } => Some(algebra.size() as u128),
            Lind::Certified { carrier_size, .. } => *carrier_size,
        }
    }
}

/// Builds the Lindenbaum algebra: all functions `Mod(T) -> {0,1/2,1}` with
/// pointwise operations, materialized for up to four model points.
pub fn lind(t: &Theory, m: usize) -> Result<Lind, SemanticsError> {
    let mods = mod_set(t, m)?;
    let n = mods.len();
    if n == 0 {
        return Ok(Lind::Trivial {
            mods,
            algebra: trivial_rm(),
        });
    }
    if n <= 4 {
        let algebra = face_algebra(n).expect("n <= 4 is within the carrier bound");
        return Ok(Lind::Algebra { mods, algebra });
    }
    Ok(Lind::Certified {
        mods,
        carrier_size: 3u128.checked_pow(n.min(80) as u32).filter(|_| n <= 80),
        base_passes_axioms: check_axioms(&z_rm(), &rm_axioms()).is_ok(),
    })
}

/// Distinct restrictions of all arity-`m` truth tables to the mod set;
/// the oracle for the function-algebra carrier (only `m <= 2` enumerates).
pub fn restriction_images(mods: &ModSet) -> Option<Vec<Vec<Trit>>> {
    if mods.m > 2 {
        return None;
    }
    let len = pow3(mods.m);
    let count = 3usize.pow(len as u32);
    let mut seen: Vec<Vec<Trit>> = Vec::new();
    for code in 0..count {
        let tab = TruthTable::from_fn(mods.m, |i| {
            Trit::from_index(code / 3usize.pow((len - 1 - i) as u32) % 3).unwrap()
        });
        let image: Vec<Trit> = mods.valuations.iter().map(|&i| tab.get(i)).collect();
        if !seen.contains(&image) {
            seen.push(image);
        }
    }
    Some(seen)
}

// ---------------------------------------------------------------------------
// The boolean side
// ---------------------------------------------------------------------------

/// Two-valued formulas for the simplex side of the correspondence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoolFormula {
    False,
    True,
    Var(u32),
    Not(alloc::boxed::Box<BoolFormula>),
    Or(alloc::boxed::Box<BoolFormula>, alloc::boxed::Box<BoolFormula>),
    And(alloc::boxed::Box<BoolFormula>, alloc::boxed::Box<BoolFormula>),
}

impl BoolFormula {
    pub fn var(i: u32) -> BoolFormula {
        BoolFormula::Var(i)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> BoolFormula {
        BoolFormula::Not(alloc::boxed::Box::new(self))
    }

    pub fn or(self, other: BoolFormula) -> BoolFormula {
        BoolFormula::Or(alloc::boxed::Box::new(self), alloc::boxed::Box::new(other))
    }

    pub fn and(self, other: BoolFormula) -> BoolFormula {
        BoolFormula::And(alloc::boxed::Box::new(self), alloc::boxed::Box::new(other))
    }

    /// Evaluation over bits, `X1` the most significant index coordinate.
    pub fn eval(&self, bits: &[bool]) -> Result<bool, SemanticsError> {
        Ok(match self {
            BoolFormula::False => false,
            BoolFormula::True => true,
            BoolFormula::Var(i) => {
                if *i == 0 || *i as usize > bits.len() {
                    return Err(SemanticsError::VarBeyondArity {
                        name: format!("X{i}"),
                        index: *i,
                        arity: bits.len(),
                    });
                }
                bits[*i as usize - 1]
            }
            BoolFormula::Not(a) => !a.eval(bits)?,
            BoolFormula::Or(l, r) => l.eval(bits)? || r.eval(bits)?,
            BoolFormula::And(l, r) => l.eval(bits)? && r.eval(bits)?,
        })
    }
}

fn bits_of(m: usize, idx: usize) -> Vec<bool> {
    (0..m).map(|i| idx >> (m - 1 - i) & 1 == 1).collect()
}

/// Indices in `0..2^m` of the valuations satisfying every formula.
pub fn bool_mod(fs: &[BoolFormula], m: usize) -> Result<Vec<usize>, SemanticsError> {
    let mut out = Vec::new();
    'next: for idx in 0..(1usize << m) {
        let bits = bits_of(m, idx);
        for f in fs {
            if !f.eval(&bits)? {
                continue 'next;
            }
        }
        out.push(idx);
    }
    Ok(out)
}

/// The boolean Lindenbaum algebra: all functions `Mod -> {0,1}` with
/// pointwise operations (signature `zero, one, neg, vee, meet`).
pub fn bool_lind(fs: &[BoolFormula], m: usize) -> Result<FiniteAlgebra, SemanticsError> {
    let mods = bool_mod(fs, m)?;
    let n = mods.len();
    let size = 1usize << n;
    let mut a = FiniteAlgebra::new(size);
    a.add_const("zero", 0).expect("0 < size");
    a.add_const("one", size - 1).expect("in carrier");
    let mut neg = vec![0; size];
    for (x, slot) in neg.iter_mut().enumerate() {
        *slot = !x & (size - 1);
    }
    a.add_unop("neg", neg).expect("valid table");
    let mut vee = vec![0; size * size];
    let mut meet = vec![0; size * size];
    for x in 0..size {
        for y in 0..size {
            vee[x * size + y] = x | y;
            meet[x * size + y] = x & y;
        }
    }
    a.add_binop("vee", vee).expect("valid table");
    a.add_binop("meet", meet).expect("valid table");
    Ok(a)
}

/// Minimal nonzero elements in the order `x <= y iff meet(x,y) = x`.
pub fn atoms(a: &FiniteAlgebra) -> Result<Vec<usize>, AlgebraError> {
    let zero = a.constant("zero")?;
    let below = |x: usize, y: usize| -> Result<bool, AlgebraError> {
        Ok(a.binop("meet", x, y)? == x)
    };
    let mut out = Vec::new();
    for x in 0..a.size() {
        if x == zero {
            continue;
        }
        let mut minimal = true;
        for y in 0..a.size() {
            if y != zero && y != x && below(y, x)? {
                minimal = false;
                break;
            }
        }
        if minimal {
            out.push(x);
        }
    }
    Ok(out)
}

/// Checks that the algebra is a powerset: boolean axioms, `2^n` elements
/// for `n` atoms, and every element the join of a unique atom set.
pub fn powerset_structure(a: &FiniteAlgebra) -> Result<Option<usize>, AlgebraError> {
    if check_axioms(a, &boolean_axioms()).is_err() {
        return Ok(None);
    }
    let ats = atoms(a)?;
    let n = ats.len();
    if n > 20 || a.size() != 1usize << n {
        return Ok(None);
    }
    let mut seen = vec![false; a.size()];
    for mask in 0..(1usize << n) {
        let mut x = a.constant("zero")?;
        for (bit, atom) in ats.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                x = a.binop("vee", x, *atom)?;
            }
        }
        if seen[x] {
            return Ok(None);
        }
        seen[x] = true;
    }
    Ok(Some(n))
}

/// Synthesizes a boolean formula (a disjunction of minterms) with the
/// given satisfying set.
pub fn bool_synthesize(sat: &[usize], m: usize) -> BoolFormula {
    let mut out: Option<BoolFormula> = None;
    for &idx in sat {
        let bits = bits_of(m, idx);
        let mut term: Option<BoolFormula> = None;
        for (i, b) in bits.iter().enumerate() {
            let lit = if *b {
                BoolFormula::var(i as u32 + 1)
            } else {
                BoolFormula::var(i as u32 + 1).not()
            };
            term = Some(match term {
                None => lit,
                Some(t) => t.and(lit),
            });
        }
        let term = term.unwrap_or(BoolFormula::True);
        out = Some(match out {
            None => term,
            Some(o) => o.or(term),
        });
    }
    out.unwrap_or(BoolFormula::False)
}

// ---------------------------------------------------------------------------
// Correspondence tables
// ---------------------------------------------------------------------------

/// One checked row of a correspondence table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowResult {
    pub row: usize,
    pub description: String,
    pub pass: bool,
    pub counts: String,
}

fn row(rows: &mut Vec<RowResult>, description: &str, pass: bool, counts: String) {
    rows.push(RowResult {
        row: rows.len() + 1,
        description: String::from(description),
        pass,
        counts,
    });
}

/// All arity-m truth tables (m <= 2).
fn all_tables(m: usize) -> Vec<TruthTable> {
    let len = pow3(m);
    let count = 3usize.pow(len as u32);
    (0..count)
        .map(|code| {
            TruthTable::from_fn(m, |i| {
                Trit::from_index(code / 3usize.pow((len - 1 - i) as u32) % 3).unwrap()
            })
        })
        .collect()
}

fn word_of(t: &TruthTable) -> crate::faces::Face {
    crate::faces::Face::from_trits(&t.iter().collect::<Vec<_>>()).expect("tables are nonempty")
}

/// Machine-checks the boolean-logic/simplex correspondence at arity `m`.
pub fn check_table1(m: usize) -> Result<Vec<RowResult>, SemanticsError> {
    assert!((1..=2).contains(&m), "table checks are defined for m in 1..=2");
    let vcount = 1usize << m;
    let fcount = 1usize << vcount;
    // All boolean functions as satisfying sets.
    let functions: Vec<Vec<usize>> = (0..fcount)
        .map(|mask| (0..vcount).filter(|i| mask >> i & 1 == 1).collect())
        .collect();
    let mut rows = Vec::new();

    row(
        &mut rows,
        "valuations are the vertices of the simplex",
        true,
        format!("2^{m} = {vcount} vertices"),
    );

    let distinct = functions.len();
    row(
        &mut rows,
        "formula classes are the faces (vertex subsets)",
        distinct == fcount,
        format!("{distinct} classes = 2^(2^{m}) faces"),
    );

    let taut_sat: Vec<usize> = (0..vcount).collect();
    row(
        &mut rows,
        "a tautology class is the largest face",
        functions.contains(&taut_sat),
        format!("full face of {vcount} vertices"),
    );

    let mut coord_ok = true;
    for i in 1..=m {
        let sat = bool_mod(&[BoolFormula::var(i as u32)], m)?;
        let expect: Vec<usize> = (0..vcount)
            .filter(|idx| bits_of(m, *idx)[i - 1])
            .collect();
        coord_ok &= sat == expect;
    }
    row(
        &mut rows,
        "X_i is the face of its satisfying vertices",
        coord_ok,
        format!("{m} coordinates"),
    );

    let mut neg_ok = true;
    let mut or_and_ok = true;
    let mut entail_ok = true;
    for sat_a in &functions {
        let a = bool_synthesize(sat_a, m);
        let neg_sat = bool_mod(&[a.clone().not()], m)?;
        let complement: Vec<usize> = (0..vcount).filter(|i| !sat_a.contains(i)).collect();
        neg_ok &= neg_sat == complement;
        for sat_b in &functions {
            let b = bool_synthesize(sat_b, m);
            let union: Vec<usize> = (0..vcount)
                .filter(|i| sat_a.contains(i) || sat_b.contains(i))
                .collect();
            let inter: Vec<usize> = (0..vcount)
                .filter(|i| sat_a.contains(i) && sat_b.contains(i))
                .collect();
            or_and_ok &= bool_mod(&[a.clone().or(b.clone())], m)? == union;
            or_and_ok &= bool_mod(&[a.clone().and(b.clone())], m)? == inter;
            // Entailment is face inclusion: the implication is valid iff
            // the satisfying sets nest.
            let implication_valid =
                bool_mod(&[a.clone().not().or(b.clone())], m)?.len() == vcount;
            let subset = sat_a.iter().all(|i| sat_b.contains(i));
            entail_ok &= implication_valid == subset;
        }
    }
    row(
        &mut rows,
        "negation is the complementary face",
        neg_ok,
        format!("{fcount} formulas"),
    );
    row(
        &mut rows,
        "or/and are union/intersection of faces",
        or_and_ok,
        format!("{} pairs", fcount * fcount),
    );
    let contra = bool_mod(
        &[BoolFormula::var(1).and(BoolFormula::var(1).not())],
        m,
    )?;
    row(
        &mut rows,
        "a contradiction class is the empty face",
        contra.is_empty(),
        "x & !x has no models".into(),
    );

    let free = bool_lind(&[], m)?;
    let free_ok = free.size() == fcount
        && powerset_structure(&free).map_err(|_| SemanticsError::PreconditionViolated("powerset check"))?
            == Some(vcount);
    row(
        &mut rows,
        "the free algebra is the face algebra of the simplex",
        free_ok,
        format!("2^(2^{m}) = {fcount} elements, {vcount} atoms"),
    );
    row(
        &mut rows,
        "entailment is face inclusion",
        entail_ok,
        format!("{} pairs", fcount * fcount),
    );

    let mut lind_ok = true;
    let mut classes_ok = true;
    for sat in &functions {
        let theta = bool_synthesize(sat, m);
        let n = sat.len();
        let la = bool_lind(&[theta], m)?;
        lind_ok &= la.size() == 1usize << n;
        lind_ok &= powerset_structure(&la)
            .map_err(|_| SemanticsError::PreconditionViolated("powerset check"))?
            == Some(n);
        // Distinct restrictions of all functions to the satisfying set.
        let mut images: Vec<Vec<bool>> = Vec::new();
        for other in &functions {
            let image: Vec<bool> = sat.iter().map(|i| other.contains(i)).collect();
            if !images.contains(&image) {
                images.push(image);
            }
        }
        classes_ok &= images.len() == 1usize << n;
    }
    row(
        &mut rows,
        "a theory with n models spans an (n-1)-simplex whose face algebra is its Lindenbaum algebra",
        lind_ok,
        format!("{fcount} theories"),
    );
    row(
        &mut rows,
        "theory-relative classes are the faces of that simplex",
        classes_ok,
        format!("{fcount} theories"),
    );
    Ok(rows)
}

/// Machine-checks the RM-logic/cube correspondence at arity `m`. Pairwise
/// rows are exhaustive at `m = 1` and run over a deterministic slice of
/// the `19683` classes at `m = 2`.
pub fn check_table2(m: usize) -> Result<Vec<RowResult>, SemanticsError> {
    assert!((1..=2).contains(&m), "table checks are defined for m in 1..=2");
    let tables = all_tables(m);
    let len = pow3(m);
    let mut rows = Vec::new();

    row(
        &mut rows,
        "the 3^m valuations index the cube dimensions",
        tables[0].len() == len,
        format!("3^{m} = {len}"),
    );

    row(
        &mut rows,
        "formula classes are the faces of the cube",
        tables.len() == 3usize.pow(len as u32),
        format!("{} classes = 3^(3^{m}) faces", tables.len()),
    );

    let whole = crate::faces::Face::whole(len).expect("len >= 1");
    let taut_word = word_of(&TruthTable::constant(m, Trit::Half));
    let mut largest_ok = taut_word == whole;
    for t in &tables {
        largest_ok &= word_of(t).is_subface(&whole).expect("same cube");
    }
    row(
        &mut rows,
        "the tautology class is the whole cube, the largest face",
        largest_ok,
        format!("{} faces below it", tables.len()),
    );

    let two_valued = tables
        .iter()
        .filter(|t| t.iter().all(|v| v != Trit::Half))
        .count();
    let vertices_ok = tables
        .iter()
        .filter(|t| t.iter().all(|v| v != Trit::Half))
        .all(|t| word_of(t).is_vertex());
    row(
        &mut rows,
        "two-valued classes are the vertices",
        vertices_ok && two_valued == 1 << len,
        format!("2^{len} = {two_valued}"),
    );

    let mut coord_ok = true;
    for i in 1..=m {
        coord_ok &= table(&crate::formula::Formula::var(i as u32), m)?
            == TruthTable::coordinate(m, i as u32);
    }
    row(
        &mut rows,
        "X_i is the i-th coordinate function",
        coord_ok,
        format!("{m} coordinates"),
    );

    // Deterministic slice for the quadratic rows.
    let sample: Vec<&TruthTable> = if m == 1 {
        tables.iter().collect()
    } else {
        tables.iter().step_by(157).collect()
    };
    let mut transport_ok = true;
    for a in &sample {
        for b in &sample {
            let (fa, fb) = (word_of(a), word_of(b));
            transport_ok &= word_of(&a.join(b)) == fa.join(&fb).expect("same cube");
            transport_ok &= word_of(&a.dpar(b)) == fa.dpar(&fb).expect("same cube");
            transport_ok &= word_of(&a.meet(b)) == fa.wedge(&fb).expect("same cube");
        }
    }
    row(
        &mut rows,
        "the free algebra operations transport to face operations",
        transport_ok,
        format!("{}^2 pairs", sample.len()),
    );

    let mut entail_ok = true;
    let synthesized: Vec<crate::formula::Formula> = sample
        .iter()
        .map(|t| synthesize(t).expect("arity >= 1"))
        .collect();
    for (ta, fa) in sample.iter().zip(&synthesized) {
        for (tb, fb) in sample.iter().zip(&synthesized) {
            let holds = entails(&Theory::new([fa.clone()]), fb)?.holds;
            let subface = word_of(ta).is_subface(&word_of(tb)).expect("same cube");
            entail_ok &= holds == subface;
        }
    }
    row(
        &mut rows,
        "consequence is the subface relation",
        entail_ok,
        format!("{}^2 pairs", sample.len()),
    );

    let mut lub_ok = true;
    for a in &sample {
        for b in &sample {
            let (fa, fb) = (word_of(a), word_of(b));
            let j = fa.join(&fb).expect("same cube");
            lub_ok &= fa.is_subface(&j).expect("same cube")
                && fb.is_subface(&j).expect("same cube");
        }
    }
    // Minimality over all upper bounds, full at m = 1.
    if m == 1 {
        for a in &tables {
            for b in &tables {
                let (fa, fb) = (word_of(a), word_of(b));
                let j = fa.join(&fb).expect("same cube");
                for c in &tables {
                    let fc = word_of(c);
                    if fa.is_subface(&fc).expect("same cube")
                        && fb.is_subface(&fc).expect("same cube")
                    {
                        lub_ok &= j.is_subface(&fc).expect("same cube");
                    }
                }
            }
        }
    }
    row(
        &mut rows,
        "join is the smallest containing face",
        lub_ok,
        format!("{}^2 pairs", sample.len()),
    );

    let mut antipodal_ok = true;
    for a in &sample {
        for b in &sample {
            let (fa, fb) = (word_of(a), word_of(b));
            let direct = fa.dpar(&fb).expect("same cube");
            let via = fa
                .join(&fb)
                .expect("same cube")
                .antipodal_in(&fb)
                .expect("subface by construction");
            antipodal_ok &= direct == via;
        }
    }
    row(
        &mut rows,
        "dpar is the antipodal in the join",
        antipodal_ok,
        format!("{}^2 pairs", sample.len()),
    );

    let mut mod_dim_ok = true;
    for t in &tables {
        let f = synthesize(t).expect("arity >= 1");
        let mods = mod_set(&Theory::new([f]), m)?;
        mod_dim_ok &= mods.len() == word_of(t).dimension();
    }
    row(
        &mut rows,
        "a theory's model count is its face's dimension",
        mod_dim_ok,
        format!("{} classes", tables.len()),
    );

    let mut lind_ok = true;
    let lind_sample: Vec<&TruthTable> = if m == 1 {
        tables.iter().collect()
    } else {
        tables.iter().step_by(601).collect()
    };
    for t in &lind_sample {
        let f = synthesize(t).expect("arity >= 1");
        let n = word_of(t).dimension();
        match lind(&Theory::new([f]), m)? {
            Lind::Trivial { .. } => lind_ok &= n == 0,
            Lind::Algebra { algebra, .. } => {
                let target = face_algebra(n).expect("n <= 4 here");
                lind_ok &= iso_check(&algebra, &target)
                    .map_err(|_| SemanticsError::PreconditionViolated("iso bound"))?
                    .is_some();
            }
            Lind::Certified { carrier_size, base_passes_axioms, .. } => {
                lind_ok &= base_passes_axioms && carrier_size == 3u128.checked_pow(n as u32);
            }
        }
    }
    row(
        &mut rows,
        "the Lindenbaum algebra is the face algebra of the model cube",
        lind_ok,
        format!("{} theories", lind_sample.len()),
    );

    let mut classes_ok = true;
    for t in &lind_sample {
        let f = synthesize(t).expect("arity >= 1");
        let mods = mod_set(&Theory::new([f]), m)?;
        if let Some(images) = restriction_images(&mods) {
            classes_ok &= images.len() == pow3(mods.len());
        }
    }
    row(
        &mut rows,
        "theory-relative classes are the faces of the model cube",
        classes_ok,
        format!("{} theories", lind_sample.len()),
    );

    let mut no_half_ok = true;
    for t in &tables {
        let has_no_half = t.iter().all(|v| v != Trit::Half);
        no_half_ok &= has_no_half == word_of(t).is_vertex();
    }
    row(
        &mut rows,
        "a class with no 1/2 values is a vertex",
        no_half_ok,
        format!("{} classes", tables.len()),
    );

    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    #[test]
    fn mod_set_examples() {
        let prs = |s: &str| parse(s).unwrap();
        let mods = mod_set(&Theory::new([prs("X1")]), 1).unwrap();
        assert_eq!(mods.valuations, vec![1]);

        let mods = mod_set(&Theory::default(), 1).unwrap();
        assert_eq!(mods.valuations, vec![0, 1, 2]);

        let mods = mod_set(&Theory::new([prs("N X1")]), 1).unwrap();
        assert!(mods.is_empty());
    }

    #[test]
    fn lind_examples() {
        let prs = |s: &str| parse(s).unwrap();
        match lind(&Theory::new([prs("X1")]), 1).unwrap() {
            Lind::Algebra { algebra, mods } => {
                assert_eq!(mods.len(), 1);
                assert_eq!(algebra.size(), 3);
                assert!(iso_check(&algebra, &face_algebra(1).unwrap())
                    .unwrap()
                    .is_some());
            }
            _ => panic!("expected a materialized algebra"),
        }
        match lind(&Theory::new([prs("N X1")]), 1).unwrap() {
            Lind::Trivial { algebra, .. } => assert_eq!(algebra.size(), 1),
            _ => panic!("expected the one-element algebra"),
        }
        match lind(&Theory::default(), 1).unwrap() {
            Lind::Algebra { algebra, .. } => {
                assert_eq!(algebra.size(), 27);
                assert!(iso_check(&algebra, &face_algebra(3).unwrap())
                    .unwrap()
                    .is_some());
            }
            _ => panic!("expected a materialized algebra"),
        }
    }

    #[test]
    fn lind_carrier_is_the_set_of_restrictions() {
        let prs = |s: &str| parse(s).unwrap();
        for (srcs, m) in [(vec!["X1"], 1usize), (vec![], 1), (vec!["X1 # X2"], 2)] {
            let t = Theory::new(srcs.iter().map(|s| prs(s)));
            let mods = mod_set(&t, m).unwrap();
            let images = restriction_images(&mods).unwrap();
            assert_eq!(images.len(), pow3(mods.len()));
        }
    }

    #[test]
    fn lind_cardinality_law() {
        let prs = |s: &str| parse(s).unwrap();
        for src in ["X1", "N X1", "X1 # X2", "h", "X1 & X2"] {
            let t = Theory::new([prs(src)]);
            let m = 2;
            let mods = mod_set(&t, m).unwrap();
            let l = lind(&t, m).unwrap();
            assert_eq!(
                l.carrier_size(),
                3u128.checked_pow(mods.len() as u32),
                "{src}"
            );
        }
    }

    #[test]
    fn theory_equivalence_is_a_congruence() {
        // Restriction equality respects the three operations: whenever two
        // tables agree on Mod, so do their combinations with any third.
        let theta = Theory::new([parse("X1").unwrap()]);
        let m = 2;
        let mods = mod_set(&theta, m).unwrap();
        assert_eq!(mods.len(), 3);
        let agree = |a: &TruthTable, b: &TruthTable| {
            mods.valuations.iter().all(|&i| a.get(i) == b.get(i))
        };
        // Small deterministic pseudo-random table stream.
        let mut state = 0x9e37u32;
        let mut next_table = || {
            TruthTable::from_fn(m, |_| {
                state = state.wrapping_mul(1103515245).wrapping_add(12345);
                Trit::from_index((state >> 16) as usize % 3).unwrap()
            })
        };
        let mut exercised = 0;
        for _ in 0..3000 {
            let (a, b, c) = (next_table(), next_table(), next_table());
            if !agree(&a, &b) {
                continue;
            }
            exercised += 1;
            assert!(agree(&a.join(&c), &b.join(&c)));
            assert!(agree(&c.dpar(&a), &c.dpar(&b)));
            assert!(agree(&a.meet(&c), &b.meet(&c)));
        }
        assert!(exercised > 10, "the sweep found only {exercised} agreeing pairs");
    }

    #[test]
    fn bool_side_examples() {
        let x1 = BoolFormula::var(1);
        assert_eq!(bool_mod(std::slice::from_ref(&x1), 1).unwrap(), vec![1]);
        assert_eq!(bool_lind(std::slice::from_ref(&x1), 1).unwrap().size(), 2);

        let free2 = bool_lind(&[], 2).unwrap();
        assert_eq!(free2.size(), 16);
        assert_eq!(powerset_structure(&free2).unwrap(), Some(4));

        let contra = x1.clone().and(x1.not());
        assert!(bool_mod(std::slice::from_ref(&contra), 1).unwrap().is_empty());
        assert_eq!(bool_lind(&[contra], 1).unwrap().size(), 1);
    }

    #[test]
    fn table_checks_pass_at_m1() {
        for r in check_table1(1).unwrap() {
            assert!(r.pass, "table 1 row {}: {}", r.row, r.description);
        }
        for r in check_table2(1).unwrap() {
            assert!(r.pass, "table 2 row {}: {}", r.row, r.description);
        }
    }
}
