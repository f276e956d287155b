//! Formula ASTs over the core connectives `{0, 1/2, join, dpar, meet}` with
//! sugared derived connectives, the Post-signature formula type, the
//! signature translations between the two, and truth-table synthesis.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::semantics::TruthTable;
use crate::trit::Trit;

/// A propositional variable. Canonical variables are `X1, X2, ...` whose
/// index is the numeric suffix; arbitrary identifiers are admitted and get
/// the smallest free index in first-occurrence order (see [`crate::parse`]).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub name: String,
    /// 1-based valuation coordinate.
    pub index: u32,
}

impl Var {
    pub fn canonical(index: u32) -> Var {
        debug_assert!(index >= 1);
        Var {
            name: format!("X{index}"),
            index,
        }
    }
}

/// Abstract syntax over the core connectives plus sugar nodes.
///
/// `Zero`, `Half`, `Var`, `Join`, `Dpar`, `Meet` are core; everything else
/// desugars into them via [`Formula::desugar`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Zero,
    Half,
    One,
    Var(Var),
    Join(Box<Formula>, Box<Formula>),
    Dpar(Box<Formula>, Box<Formula>),
    Meet(Box<Formula>, Box<Formula>),
    Neg(Box<Formula>),
    Nabla(Box<Formula>),
    Delta(Box<Formula>),
    Vee(Box<Formula>, Box<Formula>),
    Flip(Box<Formula>),
    Arrow(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn var(index: u32) -> Formula {
        Formula::Var(Var::canonical(index))
    }

    pub fn join(self, other: Formula) -> Formula {
        Formula::Join(Box::new(self), Box::new(other))
    }

    pub fn dpar(self, other: Formula) -> Formula {
        Formula::Dpar(Box::new(self), Box::new(other))
    }

    pub fn meet(self, other: Formula) -> Formula {
        Formula::Meet(Box::new(self), Box::new(other))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> Formula {
        Formula::Neg(Box::new(self))
    }

    pub fn nabla(self) -> Formula {
        Formula::Nabla(Box::new(self))
    }

    pub fn delta(self) -> Formula {
        Formula::Delta(Box::new(self))
    }

    pub fn vee(self, other: Formula) -> Formula {
        Formula::Vee(Box::new(self), Box::new(other))
    }

    pub fn flip(self) -> Formula {
        Formula::Flip(Box::new(self))
    }

    pub fn arrow(self, other: Formula) -> Formula {
        Formula::Arrow(Box::new(self), Box::new(other))
    }

    /// Node count.
    pub fn size(&self) -> usize {
        match self {
            Formula::Zero | Formula::Half | Formula::One | Formula::Var(_) => 1,
            Formula::Neg(a) | Formula::Nabla(a) | Formula::Delta(a) | Formula::Flip(a) => {
                1 + a.size()
            }
            Formula::Join(l, r)
            | Formula::Dpar(l, r)
            | Formula::Meet(l, r)
            | Formula::Vee(l, r)
            | Formula::Arrow(l, r) => 1 + l.size() + r.size(),
        }
    }

    /// Largest variable index occurring, 0 for closed formulas.
    pub fn max_var_index(&self) -> u32 {
        match self {
            Formula::Zero | Formula::Half | Formula::One => 0,
            Formula::Var(v) => v.index,
            Formula::Neg(a) | Formula::Nabla(a) | Formula::Delta(a) | Formula::Flip(a) => {
                a.max_var_index()
            }
            Formula::Join(l, r)
            | Formula::Dpar(l, r)
            | Formula::Meet(l, r)
            | Formula::Vee(l, r)
            | Formula::Arrow(l, r) => l.max_var_index().max(r.max_var_index()),
        }
    }

    /// All variables, deduplicated, in first-occurrence order.
    pub fn vars(&self) -> Vec<Var> {
        fn walk(f: &Formula, out: &mut Vec<Var>) {
            match f {
                Formula::Zero | Formula::Half | Formula::One => {}
                Formula::Var(v) => {
                    if !out.contains(v) {
                        out.push(v.clone());
                    }
                }
                Formula::Neg(a) | Formula::Nabla(a) | Formula::Delta(a) | Formula::Flip(a) => {
                    walk(a, out)
                }
                Formula::Join(l, r)
                | Formula::Dpar(l, r)
                | Formula::Meet(l, r)
                | Formula::Vee(l, r)
                | Formula::Arrow(l, r) => {
                    walk(l, out);
                    walk(r, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    pub fn is_core(&self) -> bool {
        match self {
            Formula::Zero | Formula::Half | Formula::Var(_) => true,
            Formula::Join(l, r) | Formula::Dpar(l, r) | Formula::Meet(l, r) => {
                l.is_core() && r.is_core()
            }
            _ => false,
        }
    }

    /// Rewrites every sugar node into the core connectives:
    ///
    /// - `1 -> d(h,0)`
    /// - `!a -> d(h,a)`
    /// - `N a -> d(a,0)`
    /// - `T a -> !N !a`, expanded
    /// - `a | b -> !(!a & !b)`, expanded
    /// - `F a -> d(a,0) # d(d(0,a),0)`
    /// - `a ~> b -> (b # N!a) & (b # !N a) & !(b # N!a) & !(b # !N a)`,
    ///   expanded
    pub fn desugar(&self) -> Formula {
        match self {
            Formula::Zero => Formula::Zero,
            Formula::Half => Formula::Half,
            Formula::Var(v) => Formula::Var(v.clone()),
            Formula::Join(l, r) => l.desugar().join(r.desugar()),
            Formula::Dpar(l, r) => l.desugar().dpar(r.desugar()),
            Formula::Meet(l, r) => l.desugar().meet(r.desugar()),
            Formula::One => Formula::Half.dpar(Formula::Zero),
            Formula::Neg(a) => Formula::Half.dpar(a.desugar()),
            Formula::Nabla(a) => a.desugar().dpar(Formula::Zero),
            Formula::Delta(a) => {
                let a = a.as_ref().clone();
                a.neg().nabla().neg().desugar()
            }
            Formula::Vee(l, r) => {
                let (l, r) = (l.as_ref().clone(), r.as_ref().clone());
                l.neg().meet(r.neg()).neg().desugar()
            }
            Formula::Flip(a) => {
                let a = a.desugar();
                a.clone()
                    .dpar(Formula::Zero)
                    .join(Formula::Zero.dpar(a).dpar(Formula::Zero))
            }
            Formula::Arrow(l, r) => {
                let (a, b) = (l.as_ref().clone(), r.as_ref().clone());
                let j1 = b.clone().join(a.clone().neg().nabla());
                let j2 = b.join(a.nabla().neg());
                j1.clone()
                    .meet(j2.clone())
                    .meet(j1.neg())
                    .meet(j2.neg())
                    .desugar()
            }
        }
    }

    /// Rewrites recognizable core patterns back into sugar, bottom-up, to a
    /// fixed point at each node. `render(f, Sugared)` prints this normal
    /// presentation.
    pub fn resugar(&self) -> Formula {
        let node = match self {
            Formula::Zero | Formula::Half | Formula::One | Formula::Var(_) => self.clone(),
            Formula::Join(l, r) => l.resugar().join(r.resugar()),
            Formula::Dpar(l, r) => l.resugar().dpar(r.resugar()),
            Formula::Meet(l, r) => l.resugar().meet(r.resugar()),
            Formula::Neg(a) => a.resugar().neg(),
            Formula::Nabla(a) => a.resugar().nabla(),
            Formula::Delta(a) => a.resugar().delta(),
            Formula::Vee(l, r) => l.resugar().vee(r.resugar()),
            Formula::Flip(a) => a.resugar().flip(),
            Formula::Arrow(l, r) => l.resugar().arrow(r.resugar()),
        };
        let mut current = node;
        while let Some(next) = sugar_step(&current) {
            current = next;
        }
        current
    }
}

/// One top-level resugaring rewrite, if any applies. Children are assumed
/// to be already resugared.
fn sugar_step(f: &Formula) -> Option<Formula> {
    match f {
        Formula::Dpar(l, r) => match (l.as_ref(), r.as_ref()) {
            (Formula::Half, Formula::Zero) => Some(Formula::One),
            (Formula::Half, a) => Some(a.clone().neg()),
            (a, Formula::Zero) => Some(a.clone().nabla()),
            _ => None,
        },
        Formula::Neg(inner) => match inner.as_ref() {
            // !N !a  ->  T a
            Formula::Nabla(n) => match n.as_ref() {
                Formula::Neg(a) => Some(a.as_ref().clone().delta()),
                _ => None,
            },
            // !(!a & !b)  ->  a | b
            Formula::Meet(l, r) => match (l.as_ref(), r.as_ref()) {
                (Formula::Neg(a), Formula::Neg(b)) => {
                    Some(a.as_ref().clone().vee(b.as_ref().clone()))
                }
                _ => None,
            },
            _ => None,
        },
        // N a # N d(0,a)  ->  F a   (the flip expansion after its two
        // dpar components have been resugared to Nabla)
        Formula::Join(l, r) => match (l.as_ref(), r.as_ref()) {
            (Formula::Nabla(a), Formula::Nabla(inner)) => match inner.as_ref() {
                Formula::Dpar(z, a2)
                    if z.as_ref() == &Formula::Zero && a2.as_ref() == a.as_ref() =>
                {
                    Some(a.as_ref().clone().flip())
                }
                _ => None,
            },
            _ => None,
        },
        // ((j1 & j2) & !j1) & !j2 with j1 = b # N!a, j2 = b # !N a  ->  a ~> b
        Formula::Meet(outer_l, outer_r) => {
            let nj2 = match outer_r.as_ref() {
                Formula::Neg(x) => x.as_ref(),
                _ => return None,
            };
            let (mid, nj1) = match outer_l.as_ref() {
                Formula::Meet(m, n) => match n.as_ref() {
                    Formula::Neg(x) => (m.as_ref(), x.as_ref()),
                    _ => return None,
                },
                _ => return None,
            };
            let (j1, j2) = match mid {
                Formula::Meet(a, b) => (a.as_ref(), b.as_ref()),
                _ => return None,
            };
            if j1 != nj1 || j2 != nj2 {
                return None;
            }
            let (b1, a1) = match j1 {
                Formula::Join(b, n) => match n.as_ref() {
                    Formula::Nabla(na) => match na.as_ref() {
                        Formula::Neg(a) => (b.as_ref(), a.as_ref()),
                        _ => return None,
                    },
                    _ => return None,
                },
                _ => return None,
            };
            let (b2, a2) = match j2 {
                Formula::Join(b, n) => match n.as_ref() {
                    Formula::Neg(nn) => match nn.as_ref() {
                        Formula::Nabla(a) => (b.as_ref(), a.as_ref()),
                        _ => return None,
                    },
                    _ => return None,
                },
                _ => return None,
            };
            if b1 == b2 && a1 == a2 {
                Some(a1.clone().arrow(b1.clone()))
            } else {
                None
            }
        }
        _ => None,
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::parse::render(self, crate::parse::RenderStyle::Core))
    }
}

// ---------------------------------------------------------------------------
// Post-signature formulas
// ---------------------------------------------------------------------------

/// A formula over the Post signature `{0, 1/2, 1, neg, nabla, vee, meet}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PostFormula {
    Zero,
    Half,
    One,
    Var(Var),
    Neg(Box<PostFormula>),
    Nabla(Box<PostFormula>),
    Vee(Box<PostFormula>, Box<PostFormula>),
    Meet(Box<PostFormula>, Box<PostFormula>),
}

impl PostFormula {
    pub fn var(index: u32) -> PostFormula {
        PostFormula::Var(Var::canonical(index))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> PostFormula {
        PostFormula::Neg(Box::new(self))
    }

    pub fn nabla(self) -> PostFormula {
        PostFormula::Nabla(Box::new(self))
    }

    pub fn vee(self, other: PostFormula) -> PostFormula {
        PostFormula::Vee(Box::new(self), Box::new(other))
    }

    pub fn meet(self, other: PostFormula) -> PostFormula {
        PostFormula::Meet(Box::new(self), Box::new(other))
    }

    /// Derived nearest-possibility `T a = !N !a`.
    pub fn delta(self) -> PostFormula {
        self.neg().nabla().neg()
    }

    pub fn size(&self) -> usize {
        match self {
            PostFormula::Zero | PostFormula::Half | PostFormula::One | PostFormula::Var(_) => 1,
            PostFormula::Neg(a) | PostFormula::Nabla(a) => 1 + a.size(),
            PostFormula::Vee(l, r) | PostFormula::Meet(l, r) => 1 + l.size() + r.size(),
        }
    }

    pub fn max_var_index(&self) -> u32 {
        match self {
            PostFormula::Zero | PostFormula::Half | PostFormula::One => 0,
            PostFormula::Var(v) => v.index,
            PostFormula::Neg(a) | PostFormula::Nabla(a) => a.max_var_index(),
            PostFormula::Vee(l, r) | PostFormula::Meet(l, r) => {
                l.max_var_index().max(r.max_var_index())
            }
        }
    }

    pub fn vars(&self) -> Vec<Var> {
        self.to_formula_verbatim().vars()
    }

    /// Structural substitution of the interdefinitions:
    /// `1 -> d(h,0)`, `!a -> d(h,a)`, `N a -> d(a,0)`,
    /// `a | b -> d(h, d(h,a) & d(h,b))`. The result is a core formula with
    /// the same table.
    pub fn to_rm(&self) -> Formula {
        match self {
            PostFormula::Zero => Formula::Zero,
            PostFormula::Half => Formula::Half,
            PostFormula::One => Formula::Half.dpar(Formula::Zero),
            PostFormula::Var(v) => Formula::Var(v.clone()),
            PostFormula::Neg(a) => Formula::Half.dpar(a.to_rm()),
            PostFormula::Nabla(a) => a.to_rm().dpar(Formula::Zero),
            PostFormula::Vee(l, r) => {
                let nl = Formula::Half.dpar(l.to_rm());
                let nr = Formula::Half.dpar(r.to_rm());
                Formula::Half.dpar(nl.meet(nr))
            }
            PostFormula::Meet(l, r) => l.to_rm().meet(r.to_rm()),
        }
    }

    /// The same tree re-read over the sugared RM connectives, with no
    /// substitution (used for rendering with the shared grammar).
    pub fn to_formula_verbatim(&self) -> Formula {
        match self {
            PostFormula::Zero => Formula::Zero,
            PostFormula::Half => Formula::Half,
            PostFormula::One => Formula::One,
            PostFormula::Var(v) => Formula::Var(v.clone()),
            PostFormula::Neg(a) => a.to_formula_verbatim().neg(),
            PostFormula::Nabla(a) => a.to_formula_verbatim().nabla(),
            PostFormula::Vee(l, r) => l.to_formula_verbatim().vee(r.to_formula_verbatim()),
            PostFormula::Meet(l, r) => l.to_formula_verbatim().meet(r.to_formula_verbatim()),
        }
    }

    /// Replaces `X<i>` by `args[i-1]`.
    pub fn subst(&self, args: &[PostFormula]) -> PostFormula {
        match self {
            PostFormula::Zero | PostFormula::Half | PostFormula::One => self.clone(),
            PostFormula::Var(v) => args[(v.index - 1) as usize].clone(),
            PostFormula::Neg(a) => a.subst(args).neg(),
            PostFormula::Nabla(a) => a.subst(args).nabla(),
            PostFormula::Vee(l, r) => l.subst(args).vee(r.subst(args)),
            PostFormula::Meet(l, r) => l.subst(args).meet(r.subst(args)),
        }
    }
}

/// Conversion of a formula over the shared grammar into the Post signature.
/// Fails on the connectives Post logic does not have (`#`, `d(,)`, `F`, `~>`);
/// `T` is admitted as the derived `!N !`.
impl TryFrom<&Formula> for PostFormula {
    type Error = NotPostSignature;

    fn try_from(f: &Formula) -> Result<PostFormula, NotPostSignature> {
        match f {
            Formula::Zero => Ok(PostFormula::Zero),
            Formula::Half => Ok(PostFormula::Half),
            Formula::One => Ok(PostFormula::One),
            Formula::Var(v) => Ok(PostFormula::Var(v.clone())),
            Formula::Neg(a) => Ok(PostFormula::try_from(a.as_ref())?.neg()),
            Formula::Nabla(a) => Ok(PostFormula::try_from(a.as_ref())?.nabla()),
            Formula::Delta(a) => Ok(PostFormula::try_from(a.as_ref())?.delta()),
            Formula::Vee(l, r) => {
                Ok(PostFormula::try_from(l.as_ref())?.vee(PostFormula::try_from(r.as_ref())?))
            }
            Formula::Meet(l, r) => {
                Ok(PostFormula::try_from(l.as_ref())?.meet(PostFormula::try_from(r.as_ref())?))
            }
            Formula::Join(..) | Formula::Dpar(..) | Formula::Flip(_) | Formula::Arrow(..) => {
                Err(NotPostSignature {
                    connective: match f {
                        Formula::Join(..) => "#",
                        Formula::Dpar(..) => "d(,)",
                        Formula::Flip(_) => "F",
                        _ => "~>",
                    },
                })
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotPostSignature {
    pub connective: &'static str,
}

impl fmt::Display for NotPostSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "connective `{}` is not in the Post signature",
            self.connective
        )
    }
}

// ---------------------------------------------------------------------------
// RM -> Post translation
// ---------------------------------------------------------------------------

/// Post term with the same table as the join, synthesized from the join
/// table as a disjunctive normal form over value indicators (the printed
/// closed form for the join is wrong; see [`eq3_literal`]).
pub fn post_join_term() -> PostFormula {
    post_dnf_term(&TruthTable::from_fn(2, |i| {
        let x = Trit::from_index(i / 3).unwrap();
        let y = Trit::from_index(i % 3).unwrap();
        x.join(y)
    }))
}

/// Post-signature value indicator: a `{0,1}`-valued term that is `1` exactly
/// where its argument takes the given value.
fn post_indicator(arg: PostFormula, value: Trit) -> PostFormula {
    match value {
        Trit::Zero => arg.neg().delta(),
        Trit::One => arg.delta(),
        Trit::Half => arg.clone().nabla().meet(arg.neg().nabla()),
    }
}

/// Disjunctive normal form in the Post signature for an arbitrary table:
/// one conjunct of indicators per valuation, `& 1/2` for the half-valued
/// entries, zero-valued entries omitted (empty disjunction is `0`).
pub fn post_dnf_term(t: &TruthTable) -> PostFormula {
    let m = t.arity();
    let mut disjuncts: Vec<PostFormula> = Vec::new();
    for idx in 0..t.len() {
        let value = t.get(idx);
        if value == Trit::Zero {
            continue;
        }
        let v = crate::semantics::Valuation::from_index(m, idx);
        let mut chi: Option<PostFormula> = None;
        for i in 1..=m as u32 {
            let ind = post_indicator(PostFormula::var(i), v.digit(i).unwrap());
            chi = Some(match chi {
                None => ind,
                Some(c) => c.meet(ind),
            });
        }
        let chi = chi.expect("arity >= 1");
        disjuncts.push(match value {
            Trit::One => chi,
            Trit::Half => chi.meet(PostFormula::Half),
            Trit::Zero => unreachable!(),
        });
    }
    disjuncts
        .into_iter()
        .reduce(PostFormula::vee)
        .unwrap_or(PostFormula::Zero)
}

/// Translates a formula into the Post signature with the same table:
/// `meet`, constants and variables pass through, `dpar` becomes its
/// closed form over the Post operations, and `join` becomes the
/// synthesized DNF term.
pub fn to_post(f: &Formula) -> PostFormula {
    to_post_core(&f.desugar())
}

fn to_post_core(f: &Formula) -> PostFormula {
    match f {
        Formula::Zero => PostFormula::Zero,
        Formula::Half => PostFormula::Half,
        Formula::Var(v) => PostFormula::Var(v.clone()),
        Formula::Meet(l, r) => to_post_core(l).meet(to_post_core(r)),
        Formula::Dpar(l, r) => eq4_post_term(to_post_core(l), to_post_core(r)),
        Formula::Join(l, r) => post_join_term().subst(&[to_post_core(l), to_post_core(r)]),
        _ => unreachable!("desugared formulas are core"),
    }
}

/// The closed form of `dpar` over the Post operations:
/// `(1/2 & N y & N !y) | (T x & T y) | (N x & T !y)`.
pub fn eq4_post_term(x: PostFormula, y: PostFormula) -> PostFormula {
    let first = PostFormula::Half
        .meet(y.clone().nabla())
        .meet(y.clone().neg().nabla());
    let second = x.clone().delta().meet(y.clone().delta());
    let third = x.nabla().meet(y.neg().delta());
    first.vee(second).vee(third)
}

/// The join's printed closed form, verbatim:
/// `(!N X2 & N X2 & h) | (T X2 & (h | T X1)) | d(0, X2)` with `x = X1`,
/// `y = X2`. Its table does **not** match the join table (the mismatch is
/// reported by the selftest, not repaired).
pub fn eq3_literal() -> Formula {
    let x = Formula::var(1);
    let y = Formula::var(2);
    let first = y
        .clone()
        .nabla()
        .neg()
        .meet(y.clone().nabla())
        .meet(Formula::Half);
    let second = y.clone().delta().meet(Formula::Half.vee(x.delta()));
    let third = Formula::Zero.dpar(y);
    first.vee(second).vee(third)
}

// ---------------------------------------------------------------------------
// Synthesis
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SynthesisError {
    ArityZero,
}

impl fmt::Display for SynthesisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SynthesisError::ArityZero => {
                write!(f, "cannot synthesize an arity-0 table; use a constant")
            }
        }
    }
}

fn indicator(var: u32, value: Trit) -> Formula {
    let x = Formula::var(var);
    match value {
        Trit::Zero => x.neg().delta(),
        Trit::One => x.delta(),
        Trit::Half => x.clone().nabla().meet(x.neg().nabla()),
    }
}

/// Builds a formula with exactly the given table, as a disjunctive normal
/// form over per-coordinate value indicators: for each valuation `v`,
/// `chi_v` is the conjunction of indicators, and the result joins the
/// `chi_v` (for value 1) and `chi_v & 1/2` (for value 1/2) disjuncts.
pub fn synthesize(t: &TruthTable) -> Result<Formula, SynthesisError> {
    let m = t.arity();
    if m == 0 {
        return Err(SynthesisError::ArityZero);
    }
    let mut disjuncts: Vec<Formula> = Vec::new();
    for idx in 0..t.len() {
        let value = t.get(idx);
        if value == Trit::Zero {
            continue;
        }
        let v = crate::semantics::Valuation::from_index(m, idx);
        let mut chi: Option<Formula> = None;
        for i in 1..=m as u32 {
            let ind = indicator(i, v.digit(i).unwrap());
            chi = Some(match chi {
                None => ind,
                Some(c) => c.meet(ind),
            });
        }
        let chi = chi.expect("arity >= 1");
        disjuncts.push(match value {
            Trit::One => chi,
            Trit::Half => chi.meet(Formula::Half),
            Trit::Zero => unreachable!(),
        });
    }
    Ok(disjuncts
        .into_iter()
        .reduce(Formula::vee)
        .unwrap_or(Formula::Zero))
}
