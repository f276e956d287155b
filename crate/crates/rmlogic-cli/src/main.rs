//! Batch command-line front end for the cubic-logic library.
//!
//! Exit codes: 0 = holds/true/pass, 1 = does-not-hold/false,
//! 2 = usage or input error, 3 = internal invariant violation.

mod formats;
mod json;

use std::fs;
use std::process::exit;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use rmlogic::algebra::{
    check_axioms, face_algebra, iso_check, kleene_axioms, post_axioms, rm_axioms, trivial_rm,
    z_post, z_rm, AlgebraError, AxiomSet, FiniteAlgebra,
};
use rmlogic::clone::{closure, Gen, Query};
use rmlogic::faces::Face;
use rmlogic::formula::{synthesize, to_post, Formula, PostFormula};
use rmlogic::lindenbaum::{check_table1, check_table2, lind, mod_set, Lind, RowResult};
use rmlogic::parse::{parse_many, render, RenderStyle, VarTable};
use rmlogic::selftest;
use rmlogic::semantics::{
    compatibility_at, entails_at, entails_via_meet_at, entails_via_reduction, eval, is_tautology,
    post_tautology, reduce_post_to_rm, table, Compatibility, IncompatRule, Mode, SemanticsError,
    Theory, TruthTable, Valuation, Verdict, Witness,
};
use rmlogic::trit::Trit;

const EXIT_FALSE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "rmlogic",
    version,
    about = "Three-valued cubic logic: evaluation, consequence checking, face geometry, and finite-algebra tools"
)]
struct Cli {
    /// Emit JSON instead of plain text
    #[arg(long, global = true)]
    json: bool,
    /// Override the valuation arity (must cover every variable in use)
    #[arg(long, global = true)]
    arity: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Meet,
    Reduction,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Signature {
    Kleene,
    Post,
    Rm,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TargetSig {
    Post,
    Rm,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Builtin {
    ZRm,
    ZPost,
    F1,
    F2,
    F3,
    F4,
    Trivial,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a formula at one valuation (a word over 0/h/1 for X1..Xm)
    Eval {
        #[arg(short = 'f', long = "formula")]
        formula: String,
        #[arg(short = 'v', long = "valuation")]
        valuation: String,
    },
    /// Print the full truth table of a formula
    Table {
        #[arg(short = 'f', long = "formula")]
        formula: String,
        #[arg(short = 'm')]
        m: Option<usize>,
    },
    /// Is the formula a tautology (constantly 1/2)?
    Taut {
        #[arg(short = 'f', long = "formula")]
        formula: String,
    },
    /// Do two formulas have the same table?
    Equiv {
        #[arg(short = 'f')]
        f: String,
        #[arg(short = 'g')]
        g: String,
    },
    /// Is a premise set compatible?
    Compat {
        #[arg(short = 't', long = "premise", num_args = 1..)]
        premises: Vec<String>,
        /// Use the verbatim reading, under which a 1/2-valued premise
        /// clashes with itself
        #[arg(long)]
        strict_incompat: bool,
    },
    /// Does the premise set entail the goal?
    Entails {
        #[arg(short = 't', long = "premise", num_args = 1..)]
        premises: Vec<String>,
        #[arg(short = 'f', long = "goal")]
        goal: String,
        #[arg(long, value_enum, default_value = "direct")]
        method: Method,
        #[arg(long)]
        strict_incompat: bool,
    },
    /// Translate a formula between the cubic and Post signatures
    Translate {
        #[arg(long, value_enum)]
        to: TargetSig,
        #[arg(short = 'f', long = "formula")]
        formula: String,
    },
    /// Synthesize a formula with a given table
    Synth {
        /// The table as a string of 3^m symbols over 0/h/1
        #[arg(long = "table", conflicts_with = "table_file")]
        table: Option<String>,
        /// Read the table from a file in the `m=<arity>` text format
        #[arg(long = "table-file")]
        table_file: Option<String>,
    },
    /// Reduce a Post formula to a tautology question here
    ReducePost {
        #[arg(short = 'f', long = "formula")]
        formula: String,
    },
    /// Operations on faces of the n-cube, given as words over 0/h/1
    #[command(subcommand)]
    Faces(FaceCmd),
    /// Check an algebra file against an axiom set
    Axioms {
        #[arg(long, value_enum)]
        set: Signature,
        #[arg(long)]
        algebra: String,
    },
    /// Clone-membership query at arity <= 2
    Clone {
        /// Comma-separated generators: 0, h, 1, join, dpar, meet, vee,
        /// neg, nabla, delta, flip
        #[arg(long)]
        generators: String,
        /// Named operation to look for (also: id, p1, p2)
        #[arg(long)]
        query: String,
    },
    /// The Lindenbaum algebra of a premise set
    Lind {
        #[arg(short = 't', long = "premise", num_args = 0..)]
        premises: Vec<String>,
        #[arg(short = 'm')]
        m: Option<usize>,
    },
    /// Machine-check one of the two correspondence tables
    Tables {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        check: u8,
        #[arg(short = 'm')]
        m: Option<usize>,
    },
    /// Print a builtin algebra in the exchange format
    DumpAlgebra {
        #[arg(long, value_enum)]
        which: Builtin,
    },
    /// One formula whose table is the pointwise intersection of two
    /// compatible premises
    MeetFormula {
        #[arg(short = 'f')]
        f: String,
        #[arg(short = 'g')]
        g: String,
    },
    /// Extract a finite entailing core from a compatible premise set
    Compactness {
        #[arg(short = 't', long = "premise", num_args = 1..)]
        premises: Vec<String>,
        #[arg(short = 'f', long = "goal")]
        goal: String,
    },
    /// Search for a nonmonotonicity witness (a, b, g) with {a} |= g but
    /// {a & b} |/= g
    Nonmono {
        #[arg(short = 'm', default_value = "1")]
        m: usize,
    },
    /// Run every exhaustive invariant sweep
    Selftest,
}

#[derive(Subcommand)]
enum FaceCmd {
    /// Smallest face containing both
    Join { a: String, b: String },
    /// Intersection, if the faces meet
    Meet { a: String, b: String },
    /// Reflection of the subface A through the center of B
    Antipodal { b: String, a: String },
    /// Is A a subface of B?
    Subface { a: String, b: String },
    /// Vertex farthest from the origin
    Farthest { a: String },
    /// Total antipodal operation (pointwise)
    Dpar { a: String, b: String },
    /// Lattice meet via the three-face intersection
    Wedge { a: String, b: String },
    /// Do the faces have a common subface?
    Compatible { a: String, b: String },
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: msg.into(),
    }
}

fn internal(msg: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INTERNAL,
        message: msg.into(),
    }
}

impl From<SemanticsError> for Failure {
    fn from(e: SemanticsError) -> Failure {
        usage(e.to_string())
    }
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Failure {
        usage(e.to_string())
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => exit(code as i32),
        Err(f) => {
            eprintln!("error: {}", f.message);
            exit(f.code as i32)
        }
    }
}

fn parse_formulas(texts: &[String]) -> Result<(Vec<Formula>, VarTable), Failure> {
    let refs: Vec<&str> = texts.iter().map(String::as_str).collect();
    parse_many(&refs).map_err(|e| {
        usage(if texts.len() > 1 {
            format!("in formula {}: {e}", e.input + 1)
        } else {
            e.to_string()
        })
    })
}

fn parse_valuation(s: &str) -> Result<Valuation, Failure> {
    let mut digits = Vec::new();
    for (i, c) in s.chars().enumerate() {
        match Trit::from_symbol(c) {
            Some(t) => digits.push(t),
            None => {
                return Err(usage(format!(
                    "bad trit `{c}` at position {i} of the valuation"
                )))
            }
        }
    }
    Ok(Valuation::from_digits(digits))
}

fn parse_face(s: &str) -> Result<Face, Failure> {
    Face::from_word(s).map_err(|e| usage(e.to_string()))
}

fn rule_of(strict: bool) -> IncompatRule {
    if strict {
        IncompatRule::Literal
    } else {
        IncompatRule::Clash
    }
}

fn print_verdict(v: &Verdict, vars: &VarTable, as_json: bool) -> u8 {
    if as_json {
        println!("{}", json::verdict(v));
    } else {
        println!("holds: {}", v.holds);
        match &v.witness {
            Some(Witness::Counterexample(w)) => {
                println!("witness: {}", describe_valuation(w, vars));
            }
            Some(Witness::Clash(c)) => {
                println!(
                    "explosion: premises {} and {} take the values ({},{}) at {}",
                    c.i,
                    c.j,
                    c.values.0,
                    c.values.1,
                    describe_valuation(&c.valuation, vars)
                );
            }
            None => {}
        }
    }
    u8::from(!v.holds)
}

fn describe_valuation(v: &Valuation, vars: &VarTable) -> String {
    if v.arity() == 0 {
        return "the empty valuation".to_string();
    }
    let name_of = |i: u32| {
        vars.entries()
            .find(|(k, _)| *k == i)
            .map(|(_, n)| n.to_string())
            .unwrap_or_else(|| format!("X{i}"))
    };
    (1..=v.arity() as u32)
        .map(|i| format!("{}={}", name_of(i), v.digit(i).unwrap()))
        .collect::<Vec<_>>()
        .join(", ")
}

fn axiom_set(sig: Signature) -> AxiomSet {
    match sig {
        Signature::Kleene => kleene_axioms(),
        Signature::Post => post_axioms(),
        Signature::Rm => rm_axioms(),
    }
}

fn builtin_algebra(which: Builtin) -> Result<FiniteAlgebra, Failure> {
    Ok(match which {
        Builtin::ZRm => z_rm(),
        Builtin::ZPost => z_post(),
        Builtin::F1 => face_algebra(1)?,
        Builtin::F2 => face_algebra(2)?,
        Builtin::F3 => face_algebra(3)?,
        Builtin::F4 => face_algebra(4)?,
        Builtin::Trivial => trivial_rm(),
    })
}

fn print_rows(rows: &[RowResult], as_json: bool) -> u8 {
    if as_json {
        let items: Vec<serde_json::Value> = rows
            .iter()
            .map(|r| {
                json!({
                    "row": r.row,
                    "description": r.description,
                    "pass": r.pass,
                    "counts": r.counts,
                })
            })
            .collect();
        println!("{}", json!({ "rows": items }));
    } else {
        for r in rows {
            println!(
                "row {}: {}: {} ({})",
                r.row,
                r.description,
                if r.pass { "PASS" } else { "FAIL" },
                r.counts
            );
        }
    }
    if rows.iter().all(|r| r.pass) {
        0
    } else {
        EXIT_INTERNAL
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let as_json = cli.json;
    let global_arity = cli.arity;
    match cli.cmd {
        Cmd::Eval { formula, valuation } => {
            let (fs, vars) = parse_formulas(&[formula])?;
            let v = parse_valuation(&valuation)?;
            let value = eval(&fs[0], &v)?;
            if as_json {
                println!(
                    "{}",
                    json!({
                        "formula": json::formula(&fs[0]),
                        "vars": json::var_table(&vars),
                        "valuation": json::valuation(&v),
                        "value": json::trit(value),
                    })
                );
            } else {
                println!("{value}");
            }
            Ok(0)
        }
        Cmd::Table { formula, m } => {
            let (fs, vars) = parse_formulas(&[formula])?;
            let natural = fs[0].max_var_index() as usize;
            let m = m.or(global_arity).unwrap_or(natural);
            let t = table(&fs[0], m)?;
            if as_json {
                println!(
                    "{}",
                    json!({
                        "formula": json::formula(&fs[0]),
                        "vars": json::var_table(&vars),
                        "m": m,
                        "table": t.values_string(),
                    })
                );
            } else {
                print!("{}", formats::render_table(&t));
            }
            Ok(0)
        }
        Cmd::Taut { formula } => {
            let (fs, vars) = parse_formulas(&[formula])?;
            let result = is_tautology(&fs[0])?;
            if as_json {
                println!(
                    "{}",
                    json!({
                        "formula": json::formula(&fs[0]),
                        "vars": json::var_table(&vars),
                        "tautology": result,
                    })
                );
            } else {
                println!("tautology: {result}");
            }
            Ok(u8::from(!result))
        }
        Cmd::Equiv { f, g } => {
            let (fs, vars) = parse_formulas(&[f, g])?;
            let natural = fs[0].max_var_index().max(fs[1].max_var_index()) as usize;
            let m = global_arity.unwrap_or(natural);
            let result = rmlogic::semantics::equivalent(&fs[0], &fs[1], m)?;
            if as_json {
                println!(
                    "{}",
                    json!({
                        "f": json::formula(&fs[0]),
                        "g": json::formula(&fs[1]),
                        "vars": json::var_table(&vars),
                        "equivalent": result,
                    })
                );
            } else {
                println!("equivalent: {result}");
            }
            Ok(u8::from(!result))
        }
        Cmd::Compat {
            premises,
            strict_incompat,
        } => {
            let (fs, vars) = parse_formulas(&premises)?;
            let theory = Theory::new(fs);
            let m = global_arity.unwrap_or(theory.arity());
            let compat = compatibility_at(&theory, m, rule_of(strict_incompat))?;
            match compat {
                Compatibility::Compatible => {
                    if as_json {
                        println!("{}", json!({ "mode": "compatible", "witness": null }));
                    } else {
                        println!("compatible");
                    }
                    Ok(0)
                }
                Compatibility::Incompatible(w) => {
                    if as_json {
                        println!(
                            "{}",
                            json!({
                                "mode": "incompatible",
                                "witness": {
                                    "valuation": json::valuation(&w.valuation),
                                    "premises": [w.i, w.j],
                                },
                            })
                        );
                    } else {
                        println!(
                            "incompatible: premises {} and {} take the values ({},{}) at {}",
                            w.i,
                            w.j,
                            w.values.0,
                            w.values.1,
                            describe_valuation(&w.valuation, &vars)
                        );
                    }
                    Ok(EXIT_FALSE)
                }
            }
        }
        Cmd::Entails {
            premises,
            goal,
            method,
            strict_incompat,
        } => {
            let mut texts = premises.clone();
            texts.push(goal);
            let (mut fs, vars) = parse_formulas(&texts)?;
            let goal = fs.pop().expect("goal present");
            let theory = Theory::new(fs);
            let natural = theory.arity().max(goal.max_var_index() as usize);
            let m = global_arity.unwrap_or(natural);
            let rule = rule_of(strict_incompat);
            let verdict = match method {
                Method::Direct => entails_at(&theory, &goal, m, rule)?,
                Method::Meet => {
                    entails_via_meet_at(&theory, &goal, m, rule).map_err(|e| match e {
                        SemanticsError::IncompatiblePremises(_) => usage(format!(
                            "the meet method rejects incompatible premises: {e}"
                        )),
                        other => other.into(),
                    })?
                }
                Method::Reduction => {
                    if theory.len() != 1 {
                        return Err(usage(
                            "the reduction method needs exactly one premise".to_string(),
                        ));
                    }
                    if let Compatibility::Incompatible(w) = compatibility_at(&theory, m, rule)? {
                        return Err(usage(format!(
                            "the reduction method rejects incompatible premises: {}",
                            SemanticsError::IncompatiblePremises(w)
                        )));
                    }
                    let holds = entails_via_reduction(&theory.formulas()[0], &goal)?;
                    Verdict {
                        holds,
                        mode: Mode::Compatible,
                        witness: None,
                    }
                }
            };
            Ok(print_verdict(&verdict, &vars, as_json))
        }
        Cmd::Translate { to, formula } => {
            let (fs, vars) = parse_formulas(&[formula])?;
            let (rendered, ast) = match to {
                TargetSig::Rm => {
                    let p = PostFormula::try_from(&fs[0])
                        .map_err(|e| usage(format!("not a Post formula: {e}")))?;
                    let rm = p.to_rm();
                    (render(&rm, RenderStyle::Core), json::formula(&rm))
                }
                TargetSig::Post => {
                    let p = to_post(&fs[0]);
                    let view = p.to_formula_verbatim();
                    (render(&view, RenderStyle::Core), json::formula(&view))
                }
            };
            if as_json {
                println!(
                    "{}",
                    json!({
                        "input": json::formula(&fs[0]),
                        "vars": json::var_table(&vars),
                        "formula": ast,
                    })
                );
            } else {
                println!("{rendered}");
            }
            Ok(0)
        }
        Cmd::Synth { table: values, table_file } => {
            let t = match (values, table_file) {
                (Some(s), None) => TruthTable::from_symbols(s.trim()).map_err(usage)?,
                (None, Some(path)) => {
                    let text = fs::read_to_string(&path)
                        .map_err(|e| usage(format!("cannot read `{path}`: {e}")))?;
                    formats::parse_table(&text).map_err(usage)?
                }
                _ => return Err(usage("provide exactly one of --table or --table-file".to_string())),
            };
            let f = synthesize(&t).map_err(|e| usage(e.to_string()))?;
            let check = table(&f, t.arity())?;
            if check != t {
                return Err(internal(
                    "synthesized formula has the wrong table".to_string(),
                ));
            }
            if as_json {
                println!(
                    "{}",
                    json!({
                        "table": t.values_string(),
                        "m": t.arity(),
                        "formula": json::formula(&f),
                        "rendered": render(&f, RenderStyle::Sugared),
                    })
                );
            } else {
                println!("{}", render(&f, RenderStyle::Sugared));
            }
            Ok(0)
        }
        Cmd::ReducePost { formula } => {
            let (fs, _) = parse_formulas(&[formula])?;
            let p = PostFormula::try_from(&fs[0])
                .map_err(|e| usage(format!("not a Post formula: {e}")))?;
            let reduced = reduce_post_to_rm(&p);
            let post_taut = post_tautology(&p)?;
            let rm_taut = is_tautology(&reduced)?;
            if post_taut != rm_taut {
                return Err(internal(
                    "the tautology reduction disagreed with the direct check".to_string(),
                ));
            }
            if as_json {
                println!(
                    "{}",
                    json!({
                        "formula": json::formula(&reduced),
                        "rendered": render(&reduced, RenderStyle::Core),
                        "post_tautology": post_taut,
                        "rm_tautology": rm_taut,
                    })
                );
            } else {
                println!("{}", render(&reduced, RenderStyle::Core));
                println!("post_tautology: {post_taut}");
                println!("rm_tautology: {rm_taut}");
            }
            Ok(u8::from(!post_taut))
        }
        Cmd::Faces(cmd) => run_faces(cmd, as_json),
        Cmd::Axioms { set, algebra } => {
            let text = fs::read_to_string(&algebra)
                .map_err(|e| usage(format!("cannot read `{algebra}`: {e}")))?;
            let a = formats::parse_algebra(&text).map_err(usage)?;
            match check_axioms(&a, &axiom_set(set)) {
                Ok(()) => {
                    if as_json {
                        println!("{}", json!({ "pass": true }));
                    } else {
                        println!("pass");
                    }
                    Ok(0)
                }
                Err(AlgebraError::AxiomFailure(w)) => {
                    if as_json {
                        println!(
                            "{}",
                            json!({
                                "pass": false,
                                "equation": w.equation,
                                "assignment": w.assignment,
                                "lhs": w.lhs,
                                "rhs": w.rhs,
                            })
                        );
                    } else {
                        println!("fail: {w}");
                    }
                    Ok(EXIT_FALSE)
                }
                Err(other) => Err(other.into()),
            }
        }
        Cmd::Clone { generators, query } => {
            let mut gens = Vec::new();
            for name in generators
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
            {
                gens.push(
                    Gen::from_name(name)
                        .ok_or_else(|| usage(format!("unknown generator `{name}`")))?,
                );
            }
            let q = Query::from_name(query.trim())
                .ok_or_else(|| usage(format!("unknown query `{}`", query.trim())))?;
            let c = closure(&gens);
            let member = c.contains(&q);
            if as_json {
                println!(
                    "{}",
                    json!({
                        "member": member,
                        "unary_count": c.unary_count(),
                        "binary_count": c.binary_count(),
                    })
                );
            } else {
                println!("member: {member}");
                println!(
                    "closure: {} unary, {} binary members",
                    c.unary_count(),
                    c.binary_count()
                );
            }
            Ok(u8::from(!member))
        }
        Cmd::Lind { premises, m } => {
            let (fs, _) = parse_formulas(&premises)?;
            let theory = Theory::new(fs);
            let m = m.or(global_arity).unwrap_or(theory.arity());
            let mods = mod_set(&theory, m)?;
            let result = lind(&theory, m)?;
            let (status, verified) = match &result {
                Lind::Trivial { .. } => ("trivial one-element algebra".to_string(), true),
                Lind::Algebra { algebra, .. } => {
                    let n = mods.len();
                    let target = face_algebra(n)?;
                    let ok = iso_check(algebra, &target)?.is_some();
                    (
                        format!("isomorphic to the face algebra of the {n}-cube"),
                        ok,
                    )
                }
                Lind::Certified {
                    base_passes_axioms, ..
                } => (
                    "certified by cardinality and the pointwise base (no isomorphism search)"
                        .to_string(),
                    *base_passes_axioms,
                ),
            };
            if !verified {
                return Err(internal(
                    "the Lindenbaum algebra failed its certification".to_string(),
                ));
            }
            let carrier = result
                .carrier_size()
                .map(|n| n.to_string())
                .unwrap_or_else(|| format!("3^{}", mods.len()));
            if as_json {
                println!(
                    "{}",
                    json!({
                        "m": m,
                        "mod": { "m": mods.m, "valuations": mods.valuations },
                        "mod_size": mods.len(),
                        "carrier_size": carrier,
                        "status": status,
                    })
                );
            } else {
                println!(
                    "mod: {} of {} valuations {:?}",
                    mods.len(),
                    rmlogic::semantics::pow3(m),
                    mods.valuations
                );
                println!("carrier: {carrier}");
                println!("algebra: {status}");
            }
            Ok(0)
        }
        Cmd::Tables { check, m } => {
            let m = m.or(global_arity).unwrap_or(1);
            if !(1..=2).contains(&m) {
                return Err(usage("table checks support m = 1 or 2".to_string()));
            }
            let rows = if check == 1 {
                check_table1(m)?
            } else {
                check_table2(m)?
            };
            Ok(print_rows(&rows, as_json))
        }
        Cmd::DumpAlgebra { which } => {
            print!("{}", formats::render_algebra(&builtin_algebra(which)?));
            Ok(0)
        }
        Cmd::MeetFormula { f, g } => {
            let (fs, _) = parse_formulas(&[f, g])?;
            let omega = rmlogic::semantics::meet_formula(&fs[0], &fs[1]).map_err(|e| match e {
                SemanticsError::IncompatiblePremises(_) => {
                    usage(format!("the premises must be compatible: {e}"))
                }
                other => other.into(),
            })?;
            let m = omega.max_var_index() as usize;
            let t = table(&omega, m)?;
            if as_json {
                println!(
                    "{}",
                    json!({
                        "formula": json::formula(&omega),
                        "rendered": render(&omega, RenderStyle::Sugared),
                        "m": m,
                        "table": t.values_string(),
                    })
                );
            } else {
                println!("{}", render(&omega, RenderStyle::Sugared));
                print!("{}", formats::render_table(&t));
            }
            Ok(0)
        }
        Cmd::Compactness { premises, goal } => {
            let mut texts = premises.clone();
            texts.push(goal);
            let (mut fs, _) = parse_formulas(&texts)?;
            let goal = fs.pop().expect("goal present");
            let theory = Theory::new(fs);
            let core = rmlogic::semantics::compactness_core(&theory, &goal)?;
            if as_json {
                let kept: Vec<serde_json::Value> =
                    core.formulas().iter().map(json::formula).collect();
                println!(
                    "{}",
                    json!({
                        "core_size": core.len(),
                        "core": kept,
                    })
                );
            } else {
                println!("core: {} of {} premises", core.len(), theory.len());
                for f in core.formulas() {
                    println!("{}", render(f, RenderStyle::Core));
                }
            }
            Ok(0)
        }
        Cmd::Nonmono { m } => {
            let (a, b, g) = rmlogic::semantics::nonmonotonicity_witness(m)?;
            if as_json {
                println!(
                    "{}",
                    json!({
                        "alpha": json::formula(&a),
                        "beta": json::formula(&b),
                        "gamma": json::formula(&g),
                    })
                );
            } else {
                println!("alpha: {}", render(&a, RenderStyle::Core));
                println!("beta: {}", render(&b, RenderStyle::Core));
                println!("gamma: {}", render(&g, RenderStyle::Core));
            }
            Ok(0)
        }
        Cmd::Selftest => {
            let checks = selftest::run_all();
            if as_json {
                let items: Vec<serde_json::Value> = checks
                    .iter()
                    .map(|c| json!({ "name": c.name, "pass": c.pass, "detail": c.detail }))
                    .collect();
                println!("{}", json!({ "checks": items }));
            } else {
                for c in &checks {
                    println!(
                        "check {}: {} ({})",
                        c.name,
                        if c.pass { "PASS" } else { "FAIL" },
                        c.detail
                    );
                }
            }
            if checks.iter().all(|c| c.pass) {
                Ok(0)
            } else {
                Ok(EXIT_INTERNAL)
            }
        }
    }
}

fn run_faces(cmd: FaceCmd, as_json: bool) -> Result<u8, Failure> {
    let face_out = |f: &Face, as_json: bool| {
        if as_json {
            println!("{}", json::face(f));
        } else {
            println!("{f}");
        }
    };
    match cmd {
        FaceCmd::Join { a, b } => {
            let f = parse_face(&a)?
                .join(&parse_face(&b)?)
                .map_err(|e| usage(e.to_string()))?;
            face_out(&f, as_json);
            Ok(0)
        }
        FaceCmd::Meet { a, b } => {
            match parse_face(&a)?
                .intersect(&parse_face(&b)?)
                .map_err(|e| usage(e.to_string()))?
            {
                Some(f) => {
                    face_out(&f, as_json);
                    Ok(0)
                }
                None => {
                    if as_json {
                        println!("{}", json!({ "undefined": true }));
                    } else {
                        println!("undefined");
                    }
                    Ok(EXIT_FALSE)
                }
            }
        }
        FaceCmd::Antipodal { b, a } => {
            let f = parse_face(&b)?
                .antipodal_in(&parse_face(&a)?)
                .map_err(|e| usage(e.to_string()))?;
            face_out(&f, as_json);
            Ok(0)
        }
        FaceCmd::Subface { a, b } => {
            let result = parse_face(&a)?
                .is_subface(&parse_face(&b)?)
                .map_err(|e| usage(e.to_string()))?;
            if as_json {
                println!("{}", json!({ "subface": result }));
            } else {
                println!("{result}");
            }
            Ok(u8::from(!result))
        }
        FaceCmd::Farthest { a } => {
            let v = parse_face(&a)?.farthest_vertex();
            if as_json {
                println!("{}", json!({ "vertex": json::vertex(&v) }));
            } else {
                println!("{v}");
            }
            Ok(0)
        }
        FaceCmd::Dpar { a, b } => {
            let f = parse_face(&a)?
                .dpar(&parse_face(&b)?)
                .map_err(|e| usage(e.to_string()))?;
            face_out(&f, as_json);
            Ok(0)
        }
        FaceCmd::Wedge { a, b } => {
            let f = parse_face(&a)?
                .wedge(&parse_face(&b)?)
                .map_err(|e| match e {
                    rmlogic::faces::FaceError::Internal(msg) => internal(msg.to_string()),
                    other => usage(other.to_string()),
                })?;
            face_out(&f, as_json);
            Ok(0)
        }
        FaceCmd::Compatible { a, b } => {
            let result = parse_face(&a)?
                .compatible(&parse_face(&b)?)
                .map_err(|e| usage(e.to_string()))?;
            if as_json {
                println!("{}", json!({ "compatible": result }));
            } else {
                println!("{result}");
            }
            Ok(u8::from(!result))
        }
    }
}
