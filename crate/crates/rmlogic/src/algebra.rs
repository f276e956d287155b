//! Finite algebras with named operation tables: axiom checking, the
//! interderivation of the RM and Post signatures, isomorphism search, and
//! free algebras at machine scale.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::formula::{eq4_post_term, post_join_term, PostFormula};
use crate::semantics::TruthTable;
use crate::trit::Trit;

/// Carrier bound for the isomorphism backtracking.
pub const ISO_BOUND: usize = 81;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    BadTable(String),
    MissingOperation { name: String },
    SignatureMismatch(String),
    CarrierTooLarge { size: usize, bound: usize },
    AxiomFailure(AxiomFailure),
    ArityTooLarge { arity: usize },
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::BadTable(what) => write!(f, "bad operation table: {what}"),
            AlgebraError::MissingOperation { name } => {
                write!(f, "the algebra has no operation `{name}`")
            }
            AlgebraError::SignatureMismatch(what) => write!(f, "signature mismatch: {what}"),
            AlgebraError::CarrierTooLarge { size, bound } => {
                write!(f, "carrier size {size} exceeds the bound {bound}")
            }
            AlgebraError::AxiomFailure(w) => write!(f, "{w}"),
            AlgebraError::ArityTooLarge { arity } => {
                write!(f, "free algebra arity {arity} is too large (max 2)")
            }
        }
    }
}

/// First failing equation with the witnessing assignment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomFailure {
    pub equation: String,
    pub assignment: Vec<usize>,
    pub lhs: usize,
    pub rhs: usize,
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "equation `{}` fails at assignment {:?}: {} != {}",
            self.equation, self.assignment, self.lhs, self.rhs
        )
    }
}

/// An explicit finite algebra: a carrier `0..size` with named constants and
/// total unary/binary operation tables (binary tables row-major).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    size: usize,
    consts: BTreeMap<String, usize>,
    unops: BTreeMap<String, Vec<usize>>,
    binops: BTreeMap<String, Vec<usize>>,
}

impl FiniteAlgebra {
    pub fn new(size: usize) -> FiniteAlgebra {
        FiniteAlgebra {
            size,
            consts: BTreeMap::new(),
            unops: BTreeMap::new(),
            binops: BTreeMap::new(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn add_const(&mut self, name: &str, value: usize) -> Result<(), AlgebraError> {
        if value >= self.size {
            return Err(AlgebraError::BadTable(format!(
                "constant `{name}` = {value} outside the carrier"
            )));
        }
        self.consts.insert(name.to_string(), value);
        Ok(())
    }

    pub fn add_unop(&mut self, name: &str, table: Vec<usize>) -> Result<(), AlgebraError> {
        if table.len() != self.size || table.iter().any(|v| *v >= self.size) {
            return Err(AlgebraError::BadTable(format!("unop `{name}`")));
        }
        self.unops.insert(name.to_string(), table);
        Ok(())
    }

    pub fn add_binop(&mut self, name: &str, table: Vec<usize>) -> Result<(), AlgebraError> {
        if table.len() != self.size * self.size || table.iter().any(|v| *v >= self.size) {
            return Err(AlgebraError::BadTable(format!("binop `{name}`")));
        }
        self.binops.insert(name.to_string(), table);
        Ok(())
    }

    pub fn constant(&self, name: &str) -> Result<usize, AlgebraError> {
        self.consts
            .get(name)
            .copied()
            .ok_or_else(|| AlgebraError::MissingOperation {
                name: name.to_string(),
            })
    }

    pub fn unop(&self, name: &str, x: usize) -> Result<usize, AlgebraError> {
        self.unops
            .get(name)
            .map(|t| t[x])
            .ok_or_else(|| AlgebraError::MissingOperation {
                name: name.to_string(),
            })
    }

    pub fn binop(&self, name: &str, x: usize, y: usize) -> Result<usize, AlgebraError> {
        self.binops
            .get(name)
            .map(|t| t[x * self.size + y])
            .ok_or_else(|| AlgebraError::MissingOperation {
                name: name.to_string(),
            })
    }

    pub fn consts(&self) -> impl Iterator<Item = (&str, usize)> {
        self.consts.iter().map(|(n, v)| (n.as_str(), *v))
    }

    pub fn unops(&self) -> impl Iterator<Item = (&str, &[usize])> {
        self.unops.iter().map(|(n, t)| (n.as_str(), t.as_slice()))
    }

    pub fn binops(&self) -> impl Iterator<Item = (&str, &[usize])> {
        self.binops.iter().map(|(n, t)| (n.as_str(), t.as_slice()))
    }

    /// Overwrites one cell of a binary table (fault injection in tests).
    pub fn set_binop_entry(
        &mut self,
        name: &str,
        x: usize,
        y: usize,
        value: usize,
    ) -> Result<(), AlgebraError> {
        let size = self.size;
        let table = self
            .binops
            .get_mut(name)
            .ok_or_else(|| AlgebraError::MissingOperation {
                name: name.to_string(),
            })?;
        if x >= size || y >= size || value >= size {
            return Err(AlgebraError::BadTable("entry outside the carrier".into()));
        }
        table[x * size + y] = value;
        Ok(())
    }

    fn signature(&self) -> (Vec<&str>, Vec<&str>, Vec<&str>) {
        (
            self.consts.keys().map(String::as_str).collect(),
            self.unops.keys().map(String::as_str).collect(),
            self.binops.keys().map(String::as_str).collect(),
        )
    }

    /// Direct product: coordinatewise operations over matching signatures.
    pub fn product(&self, other: &FiniteAlgebra) -> Result<FiniteAlgebra, AlgebraError> {
        if self.signature() != other.signature() {
            return Err(AlgebraError::SignatureMismatch(
                "product factors differ".into(),
            ));
        }
        let size = self.size * other.size;
        let pair = |i: usize, j: usize| i * other.size + j;
        let mut out = FiniteAlgebra::new(size);
        for (name, v) in &self.consts {
            out.add_const(name, pair(*v, other.consts[name]))?;
        }
        for (name, t) in &self.unops {
            let u = &other.unops[name];
            let mut table = vec![0; size];
            for i in 0..self.size {
                for j in 0..other.size {
                    table[pair(i, j)] = pair(t[i], u[j]);
                }
            }
            out.add_unop(name, table)?;
        }
        for (name, t) in &self.binops {
            let u = &other.binops[name];
            let mut table = vec![0; size * size];
            for i1 in 0..self.size {
                for j1 in 0..other.size {
                    for i2 in 0..self.size {
                        for j2 in 0..other.size {
                            table[pair(i1, j1) * size + pair(i2, j2)] = pair(
                                t[i1 * self.size + i2],
                                u[j1 * other.size + j2],
                            );
                        }
                    }
                }
            }
            out.add_binop(name, table)?;
        }
        Ok(out)
    }
}

// ---------------------------------------------------------------------------
// Terms and axiom sets
// ---------------------------------------------------------------------------

/// A term over a named signature, with 0-based variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Var(usize),
    Const(String),
    App1(String, Box<Term>),
    App2(String, Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(i: usize) -> Term {
        Term::Var(i)
    }

    pub fn cst(name: &str) -> Term {
        Term::Const(name.to_string())
    }

    pub fn op1(name: &str, a: Term) -> Term {
        Term::App1(name.to_string(), Box::new(a))
    }

    pub fn op2(name: &str, l: Term, r: Term) -> Term {
        Term::App2(name.to_string(), Box::new(l), Box::new(r))
    }

    pub fn eval(&self, a: &FiniteAlgebra, asg: &[usize]) -> Result<usize, AlgebraError> {
        match self {
            Term::Var(i) => Ok(asg[*i]),
            Term::Const(name) => a.constant(name),
            Term::App1(name, t) => a.unop(name, t.eval(a, asg)?),
            Term::App2(name, l, r) => a.binop(name, l.eval(a, asg)?, r.eval(a, asg)?),
        }
    }

    pub fn var_count(&self) -> usize {
        match self {
            Term::Var(i) => i + 1,
            Term::Const(_) => 0,
            Term::App1(_, t) => t.var_count(),
            Term::App2(_, l, r) => l.var_count().max(r.var_count()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    pub name: String,
    pub lhs: Term,
    pub rhs: Term,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomSet {
    pub name: String,
    pub equations: Vec<Equation>,
}

impl AxiomSet {
    fn push(&mut self, name: &str, lhs: Term, rhs: Term) {
        self.equations.push(Equation {
            name: name.to_string(),
            lhs,
            rhs,
        });
    }
}

/// Exhaustively checks every equation over every assignment; the first
/// failure in equation order, then lexicographic assignment order, is
/// reported with its witness.
pub fn check_axioms(a: &FiniteAlgebra, s: &AxiomSet) -> Result<(), AlgebraError> {
    for eq in &s.equations {
        let nvars = eq.lhs.var_count().max(eq.rhs.var_count());
        let mut asg = vec![0usize; nvars];
        let mut done = false;
        while !done {
            let lhs = eq.lhs.eval(a, &asg)?;
            let rhs = eq.rhs.eval(a, &asg)?;
            if lhs != rhs {
                return Err(AlgebraError::AxiomFailure(AxiomFailure {
                    equation: eq.name.clone(),
                    assignment: asg.clone(),
                    lhs,
                    rhs,
                }));
            }
            // Advance lexicographically, rightmost variable fastest.
            done = true;
            for pos in (0..nvars).rev() {
                asg[pos] += 1;
                if asg[pos] < a.size {
                    done = false;
                    break;
                }
                asg[pos] = 0;
            }
        }
    }
    Ok(())
}

fn kleene_equations(set: &mut AxiomSet) {
    let (x, y, z) = (Term::var(0), Term::var(1), Term::var(2));
    let v = |l, r| Term::op2("vee", l, r);
    let m = |l, r| Term::op2("meet", l, r);
    let n = |t| Term::op1("neg", t);
    set.push("vee-commutative", v(x.clone(), y.clone()), v(y.clone(), x.clone()));
    set.push(
        "vee-associative",
        v(v(x.clone(), y.clone()), z.clone()),
        v(x.clone(), v(y.clone(), z.clone())),
    );
    set.push("meet-commutative", m(x.clone(), y.clone()), m(y.clone(), x.clone()));
    set.push(
        "meet-associative",
        m(m(x.clone(), y.clone()), z.clone()),
        m(x.clone(), m(y.clone(), z.clone())),
    );
    set.push(
        "absorption-vee",
        v(x.clone(), m(x.clone(), y.clone())),
        x.clone(),
    );
    set.push(
        "absorption-meet",
        m(x.clone(), v(x.clone(), y.clone())),
        x.clone(),
    );
    set.push(
        "distributivity",
        m(x.clone(), v(y.clone(), z.clone())),
        v(m(x.clone(), y.clone()), m(x.clone(), z.clone())),
    );
    set.push("zero-is-least", v(x.clone(), Term::cst("zero")), x.clone());
    set.push("one-is-greatest", m(x.clone(), Term::cst("one")), x.clone());
    set.push("neg-involutive", n(n(x.clone())), x.clone());
    set.push(
        "de-morgan",
        n(v(x.clone(), y.clone())),
        m(n(x.clone()), n(y.clone())),
    );
    // x & !x <= y | !y, as the equation (x & !x) & (y | !y) = x & !x.
    set.push(
        "kleene-inequality",
        m(m(x.clone(), n(x.clone())), v(y.clone(), n(y.clone()))),
        m(x.clone(), n(x)),
    );
}

/// Distributive lattice with least/greatest elements, involutive De Morgan
/// negation, and the Kleene inequality.
pub fn kleene_axioms() -> AxiomSet {
    let mut set = AxiomSet {
        name: "kleene".into(),
        equations: Vec::new(),
    };
    kleene_equations(&mut set);
    set
}

/// Kleene axioms plus the center `1/2 = !1/2` and the two possibility laws
/// `!x & N x = !x & x` and `!x | N x = 1`.
pub fn post_axioms() -> AxiomSet {
    let mut set = kleene_axioms();
    set.name = "post".into();
    let x = Term::var(0);
    let n = |t| Term::op1("neg", t);
    let nab = |t| Term::op1("nabla", t);
    set.push("center", n(Term::cst("half")), Term::cst("half"));
    set.push(
        "nabla-meet",
        Term::op2("meet", n(x.clone()), nab(x.clone())),
        Term::op2("meet", n(x.clone()), x.clone()),
    );
    set.push(
        "nabla-vee",
        Term::op2("vee", n(x.clone()), nab(x)),
        Term::cst("one"),
    );
    set
}

/// Rewrites a Post-signature term over `{zero, half, one, neg, nabla, vee,
/// meet}` into the RM signature `{zero, half, join, dpar, meet}`:
/// `one -> dpar(half, zero)`, `neg a -> dpar(half, a)`,
/// `nabla a -> dpar(a, zero)`, `vee(a,b) -> neg(meet(neg a, neg b))`
/// expanded.
pub fn post_term_to_rm(t: &Term) -> Term {
    let dp = |l, r| Term::op2("dpar", l, r);
    match t {
        Term::Var(i) => Term::Var(*i),
        Term::Const(name) => match name.as_str() {
            "one" => dp(Term::cst("half"), Term::cst("zero")),
            _ => Term::Const(name.clone()),
        },
        Term::App1(name, a) => {
            let a = post_term_to_rm(a);
            match name.as_str() {
                "neg" => dp(Term::cst("half"), a),
                "nabla" => dp(a, Term::cst("zero")),
                other => Term::App1(other.to_string(), Box::new(a)),
            }
        }
        Term::App2(name, l, r) => {
            let l = post_term_to_rm(l);
            let r = post_term_to_rm(r);
            match name.as_str() {
                "vee" => {
                    let nl = dp(Term::cst("half"), l);
                    let nr = dp(Term::cst("half"), r);
                    dp(Term::cst("half"), Term::op2("meet", nl, nr))
                }
                other => Term::App2(other.to_string(), Box::new(l), Box::new(r)),
            }
        }
    }
}

/// Reads a Post formula as a term over the Post signature, variables
/// shifted to 0-based.
pub fn post_formula_term(p: &PostFormula) -> Term {
    match p {
        PostFormula::Zero => Term::cst("zero"),
        PostFormula::Half => Term::cst("half"),
        PostFormula::One => Term::cst("one"),
        PostFormula::Var(v) => Term::Var((v.index - 1) as usize),
        PostFormula::Neg(a) => Term::op1("neg", post_formula_term(a)),
        PostFormula::Nabla(a) => Term::op1("nabla", post_formula_term(a)),
        PostFormula::Vee(l, r) => Term::op2("vee", post_formula_term(l), post_formula_term(r)),
        PostFormula::Meet(l, r) => Term::op2("meet", post_formula_term(l), post_formula_term(r)),
    }
}

/// The finite equational base for the RM signature: every Post axiom
/// translated through [`post_term_to_rm`], plus the two glue equations
/// pinning `join` to its synthesized Post term and `dpar` to its closed
/// form.
pub fn rm_axioms() -> AxiomSet {
    let mut set = AxiomSet {
        name: "rm".into(),
        equations: Vec::new(),
    };
    for eq in post_axioms().equations {
        set.push(
            &format!("rm-{}", eq.name),
            post_term_to_rm(&eq.lhs),
            post_term_to_rm(&eq.rhs),
        );
    }
    let join_term = post_term_to_rm(&post_formula_term(&post_join_term()));
    set.push(
        "join-glue",
        Term::op2("join", Term::var(0), Term::var(1)),
        join_term,
    );
    let dpar_term = post_term_to_rm(&post_formula_term(&eq4_post_term(
        PostFormula::var(1),
        PostFormula::var(2),
    )));
    set.push(
        "dpar-glue",
        Term::op2("dpar", Term::var(0), Term::var(1)),
        dpar_term,
    );
    set
}

/// Complemented distributive lattice: the boolean-algebra base used on the
/// simplex side.
pub fn boolean_axioms() -> AxiomSet {
    let mut set = kleene_axioms();
    set.name = "boolean".into();
    let x = Term::var(0);
    let n = |t| Term::op1("neg", t);
    set.push(
        "complement-meet",
        Term::op2("meet", x.clone(), n(x.clone())),
        Term::cst("zero"),
    );
    set.push(
        "complement-vee",
        Term::op2("vee", x.clone(), n(x)),
        Term::cst("one"),
    );
    set
}

// ---------------------------------------------------------------------------
// Standard algebras
// ---------------------------------------------------------------------------

/// The three-element RM algebra: carrier indexed `0 -> 0`, `1 -> 1/2`,
/// `2 -> 1`.
pub fn z_rm() -> FiniteAlgebra {
    let mut a = FiniteAlgebra::new(3);
    a.add_const("zero", 0).unwrap();
    a.add_const("half", 1).unwrap();
    let bin = |f: fn(Trit, Trit) -> Trit| -> Vec<usize> {
        let mut t = Vec::with_capacity(9);
        for x in Trit::ALL {
            for y in Trit::ALL {
                t.push(f(x, y).index());
            }
        }
        t
    };
    a.add_binop("join", bin(Trit::join)).unwrap();
    a.add_binop("dpar", bin(Trit::dpar)).unwrap();
    a.add_binop("meet", bin(Trit::meet)).unwrap();
    a
}

/// The three-element Post algebra.
pub fn z_post() -> FiniteAlgebra {
    let mut a = FiniteAlgebra::new(3);
    a.add_const("zero", 0).unwrap();
    a.add_const("half", 1).unwrap();
    a.add_const("one", 2).unwrap();
    let un = |f: fn(Trit) -> Trit| -> Vec<usize> {
        Trit::ALL.iter().map(|x| f(*x).index()).collect()
    };
    let bin = |f: fn(Trit, Trit) -> Trit| -> Vec<usize> {
        let mut t = Vec::with_capacity(9);
        for x in Trit::ALL {
            for y in Trit::ALL {
                t.push(f(x, y).index());
            }
        }
        t
    };
    a.add_unop("neg", un(Trit::neg)).unwrap();
    a.add_unop("nabla", un(Trit::nabla)).unwrap();
    a.add_binop("vee", bin(Trit::vee)).unwrap();
    a.add_binop("meet", bin(Trit::meet)).unwrap();
    a
}

/// The one-element RM algebra (`0 = 1/2 = 1`).
pub fn trivial_rm() -> FiniteAlgebra {
    let mut a = FiniteAlgebra::new(1);
    a.add_const("zero", 0).unwrap();
    a.add_const("half", 0).unwrap();
    a.add_binop("join", vec![0]).unwrap();
    a.add_binop("dpar", vec![0]).unwrap();
    a.add_binop("meet", vec![0]).unwrap();
    a
}

/// The RM algebra of nonempty faces of the n-cube, carrier = words over
/// `{0,h,1}` in base-3 order, operations pointwise.
pub fn face_algebra(n: usize) -> Result<FiniteAlgebra, AlgebraError> {
    if n == 0 || 3usize.pow(n as u32) > 729 {
        return Err(AlgebraError::CarrierTooLarge {
            size: if n == 0 { 0 } else { 3usize.pow(n as u32) },
            bound: 729,
        });
    }
    let size = 3usize.pow(n as u32);
    let digit = |idx: usize, i: usize| -> Trit {
        Trit::from_index(idx / 3usize.pow((n - 1 - i) as u32) % 3).unwrap()
    };
    let index_of = |word: &[Trit]| -> usize { word.iter().fold(0, |acc, t| acc * 3 + t.index()) };
    let mut a = FiniteAlgebra::new(size);
    a.add_const("zero", 0)?;
    a.add_const("half", index_of(&vec![Trit::Half; n]))?;
    let mut pointwise = |name: &str, f: fn(Trit, Trit) -> Trit| -> Result<(), AlgebraError> {
        let mut table = vec![0; size * size];
        for x in 0..size {
            for y in 0..size {
                let word: Vec<Trit> = (0..n).map(|i| f(digit(x, i), digit(y, i))).collect();
                table[x * size + y] = index_of(&word);
            }
        }
        a.add_binop(name, table)
    };
    pointwise("join", Trit::join)?;
    pointwise("dpar", Trit::dpar)?;
    pointwise("meet", Trit::meet)?;
    Ok(a)
}

// ---------------------------------------------------------------------------
// Interderivation
// ---------------------------------------------------------------------------

/// From an RM algebra (which must pass the RM base) to its Post companion:
/// `1 = dpar(half, zero)`, `neg x = dpar(half, x)`, `nabla x = dpar(x,
/// zero)`, `vee(x,y) = neg(meet(neg x, neg y))`.
pub fn derive_post(a: &FiniteAlgebra) -> Result<FiniteAlgebra, AlgebraError> {
    check_axioms(a, &rm_axioms())?;
    let size = a.size();
    let half = a.constant("half")?;
    let zero = a.constant("zero")?;
    let one = a.binop("dpar", half, zero)?;
    let mut neg = vec![0; size];
    let mut nabla = vec![0; size];
    for x in 0..size {
        neg[x] = a.binop("dpar", half, x)?;
        nabla[x] = a.binop("dpar", x, zero)?;
    }
    let mut vee = vec![0; size * size];
    for x in 0..size {
        for y in 0..size {
            vee[x * size + y] = neg[a.binop("meet", neg[x], neg[y])?];
        }
    }
    let mut out = FiniteAlgebra::new(size);
    out.add_const("zero", zero)?;
    out.add_const("half", half)?;
    out.add_const("one", one)?;
    out.add_unop("neg", neg)?;
    out.add_unop("nabla", nabla)?;
    out.add_binop("vee", vee)?;
    out.add_binop("meet", a.binops().find(|(n, _)| *n == "meet").unwrap().1.to_vec())?;
    Ok(out)
}

/// From a Post algebra (which must pass the Post axioms) to its RM
/// companion: `dpar` by its closed form, `join` by the synthesized Post
/// term.
pub fn derive_rm(a: &FiniteAlgebra) -> Result<FiniteAlgebra, AlgebraError> {
    check_axioms(a, &post_axioms())?;
    let size = a.size();
    let dpar_term = post_formula_term(&eq4_post_term(PostFormula::var(1), PostFormula::var(2)));
    let join_term = post_formula_term(&post_join_term());
    let mut dpar = vec![0; size * size];
    let mut join = vec![0; size * size];
    for x in 0..size {
        for y in 0..size {
            dpar[x * size + y] = dpar_term.eval(a, &[x, y])?;
            join[x * size + y] = join_term.eval(a, &[x, y])?;
        }
    }
    let mut out = FiniteAlgebra::new(size);
    out.add_const("zero", a.constant("zero")?)?;
    out.add_const("half", a.constant("half")?)?;
    out.add_binop("join", join)?;
    out.add_binop("dpar", dpar)?;
    out.add_binop("meet", a.binops().find(|(n, _)| *n == "meet").unwrap().1.to_vec())?;
    Ok(out)
}

// ---------------------------------------------------------------------------
// Isomorphism search
// ---------------------------------------------------------------------------

#[derive(Clone)]
struct IsoState {
    map: Vec<Option<usize>>,
    inv: Vec<Option<usize>>,
    mapped: Vec<usize>,
}

impl IsoState {
    fn assign(&mut self, x: usize, y: usize, queue: &mut Vec<usize>) -> bool {
        match (self.map[x], self.inv[y]) {
            (Some(y0), _) => y0 == y,
            (None, Some(_)) => false,
            (None, None) => {
                self.map[x] = Some(y);
                self.inv[y] = Some(x);
                self.mapped.push(x);
                queue.push(x);
                true
            }
        }
    }
}

fn iso_propagate(a: &FiniteAlgebra, b: &FiniteAlgebra, st: &mut IsoState, queue: &mut Vec<usize>) -> bool {
    while let Some(x) = queue.pop() {
        let y = st.map[x].unwrap();
        for (name, ta) in a.unops() {
            let tb = b.unops().find(|(n, _)| *n == name).unwrap().1;
            if !st.assign(ta[x], tb[y], queue) {
                return false;
            }
        }
        let others: Vec<usize> = st.mapped.clone();
        for (name, ta) in a.binops() {
            let tb = b.binops().find(|(n, _)| *n == name).unwrap().1;
            for &z in &others {
                let w = st.map[z].unwrap();
                if !st.assign(ta[x * a.size() + z], tb[y * b.size() + w], queue) {
                    return false;
                }
                if !st.assign(ta[z * a.size() + x], tb[w * b.size() + y], queue) {
                    return false;
                }
            }
        }
    }
    true
}

fn iso_search(a: &FiniteAlgebra, b: &FiniteAlgebra, st: IsoState) -> Option<Vec<usize>> {
    let first_free = st.map.iter().position(Option::is_none);
    let x = match first_free {
        None => return Some(st.map.iter().map(|y| y.unwrap()).collect()),
        Some(x) => x,
    };
    for y in 0..b.size() {
        if st.inv[y].is_some() {
            continue;
        }
        let mut next = st.clone();
        let mut queue = Vec::new();
        if next.assign(x, y, &mut queue) && iso_propagate(a, b, &mut next, &mut queue) {
            if let Some(found) = iso_search(a, b, next) {
                return Some(found);
            }
        }
    }
    None
}

/// Searches for an isomorphism by constraint-propagating backtracking.
/// `Ok(None)` is a certified absence within the full search space.
pub fn iso_check(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Result<Option<Vec<usize>>, AlgebraError> {
    if a.size() > ISO_BOUND || b.size() > ISO_BOUND {
        return Err(AlgebraError::CarrierTooLarge {
            size: a.size().max(b.size()),
            bound: ISO_BOUND,
        });
    }
    if a.signature() != b.signature() {
        return Err(AlgebraError::SignatureMismatch(
            "isomorphism requires identical operation names".into(),
        ));
    }
    if a.size() != b.size() {
        return Ok(None);
    }
    let mut st = IsoState {
        map: vec![None; a.size()],
        inv: vec![None; b.size()],
        mapped: Vec::new(),
    };
    let mut queue = Vec::new();
    for (name, va) in a.consts() {
        let vb = b.constant(name)?;
        if !st.assign(va, vb, &mut queue) {
            return Ok(None);
        }
    }
    if !iso_propagate(a, b, &mut st, &mut queue) {
        return Ok(None);
    }
    let found = iso_search(a, b, st);
    if let Some(map) = &found {
        debug_assert!(validate_iso(a, b, map));
    }
    Ok(found)
}

/// Independent check that `map` is a bijective homomorphism.
pub fn validate_iso(a: &FiniteAlgebra, b: &FiniteAlgebra, map: &[usize]) -> bool {
    if a.size() != b.size() || map.len() != a.size() {
        return false;
    }
    let mut seen = vec![false; b.size()];
    for &y in map {
        if y >= b.size() || seen[y] {
            return false;
        }
        seen[y] = true;
    }
    for (name, v) in a.consts() {
        match b.constant(name) {
            Ok(w) if map[v] == w => {}
            _ => return false,
        }
    }
    for (name, t) in a.unops() {
        for x in 0..a.size() {
            match b.unop(name, map[x]) {
                Ok(w) if map[t[x]] == w => {}
                _ => return false,
            }
        }
    }
    for (name, t) in a.binops() {
        for x in 0..a.size() {
            for y in 0..a.size() {
                match b.binop(name, map[x], map[y]) {
                    Ok(w) if map[t[x * a.size() + y]] == w => {}
                    _ => return false,
                }
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Free algebras
// ---------------------------------------------------------------------------

/// The free algebra on `m` generators: all truth tables of arity `m` with
/// pointwise operations, generated by the coordinate tables.
pub struct FreeRm {
    pub m: usize,
    pub carrier: Vec<TruthTable>,
}

/// Builds the free algebra carrier for `m <= 2` (`3^(3^m)` truth tables).
pub fn free_rm(m: usize) -> Result<FreeRm, AlgebraError> {
    if m > 2 {
        return Err(AlgebraError::ArityTooLarge { arity: m });
    }
    let len = 3usize.pow(m as u32);
    let count = 3usize.pow(len as u32);
    let mut carrier = Vec::with_capacity(count);
    for code in 0..count {
        carrier.push(TruthTable::from_fn(m, |i| {
            Trit::from_index(code / 3usize.pow((len - 1 - i) as u32) % 3).unwrap()
        }));
    }
    Ok(FreeRm { m, carrier })
}

impl FreeRm {
    pub fn size(&self) -> usize {
        self.carrier.len()
    }

    fn code(&self, t: &TruthTable) -> usize {
        t.iter().fold(0, |acc, v| acc * 3 + v.index())
    }

    /// Closure size of the given generators together with the constants
    /// `0` and `1/2` under the pointwise operations.
    pub fn generated_from(&self, gens: &[TruthTable]) -> usize {
        let mut present = vec![false; self.carrier.len()];
        let mut list: Vec<TruthTable> = Vec::new();
        let add = |t: TruthTable, list: &mut Vec<TruthTable>, present: &mut Vec<bool>| {
            let c = t.iter().fold(0, |acc, v| acc * 3 + v.index());
            if !present[c] {
                present[c] = true;
                list.push(t);
            }
        };
        add(TruthTable::constant(self.m, Trit::Zero), &mut list, &mut present);
        add(TruthTable::constant(self.m, Trit::Half), &mut list, &mut present);
        for g in gens {
            add(g.clone(), &mut list, &mut present);
        }
        let mut i = 0;
        while i < list.len() {
            for j in 0..=i {
                let (x, y) = (&list[i], &list[j]);
                for t in [
                    x.join(y),
                    y.join(x),
                    x.dpar(y),
                    y.dpar(x),
                    x.meet(y),
                    y.meet(x),
                ] {
                    add(t, &mut list, &mut present);
                }
            }
            i += 1;
        }
        list.len()
    }

    /// Materializes the operation tables; only for carriers within the
    /// isomorphism bound (`m <= 1`).
    pub fn algebra(&self) -> Option<FiniteAlgebra> {
        if self.size() > ISO_BOUND {
            return None;
        }
        let size = self.size();
        let mut a = FiniteAlgebra::new(size);
        a.add_const("zero", self.code(&TruthTable::constant(self.m, Trit::Zero)))
            .ok()?;
        a.add_const("half", self.code(&TruthTable::constant(self.m, Trit::Half)))
            .ok()?;
        let mut op = |name: &str, f: fn(&TruthTable, &TruthTable) -> TruthTable| {
            let mut table = vec![0; size * size];
            for (x, tx) in self.carrier.iter().enumerate() {
                for (y, ty) in self.carrier.iter().enumerate() {
                    table[x * size + y] = self.code(&f(tx, ty));
                }
            }
            a.add_binop(name, table).ok()
        };
        op("join", |x, y| x.join(y))?;
        op("dpar", |x, y| x.dpar(y))?;
        op("meet", |x, y| x.meet(y))?;
        Some(a)
    }
}
