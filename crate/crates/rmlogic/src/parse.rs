//! Text grammar for formulas, shared by the RM and Post signatures.
//!
//! ```text
//! formula := or ( "~>" or )*
//! or      := join ( "|" join )*
//! join    := and ( "#" and )*
//! and     := unary ( "&" unary )*
//! unary   := ("!" | "N" | "T" | "F") unary | atom
//! atom    := "0" | "h" | "1/2" | "1" | ident | "(" formula ")"
//!          | "d(" formula "," formula ")"
//! ```
//!
//! All binary operators are left-associative; the prefixes bind tightest.
//! `#` is the cubic join, `&` the lattice meet, `d(a,b)` the antipodal
//! operation, `!` negation, `N` / `T` the two possibility operators, `F`
//! the flip, `|` the lattice join, `~>` the derived implication.
//!
//! Identifiers `X1, X2, ...` are canonical variables whose index is the
//! numeric suffix. Any other identifier is admitted and indexed by first
//! occurrence, taking the smallest index not claimed by a canonical
//! variable anywhere in the same batch of inputs.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::formula::{Formula, Var};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Which input of the batch (0 for single-formula parses).
    pub input: usize,
    /// Byte offset in that input.
    pub pos: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnknownToken(char),
    Unexpected {
        found: String,
        expected: Vec<&'static str>,
    },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::UnknownToken(c) => {
                write!(f, "unknown token `{c}` at byte {}", self.pos)
            }
            ParseErrorKind::Unexpected { found, expected } => {
                write!(f, "syntax error at byte {}: expected ", self.pos)?;
                for (i, e) in expected.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{e}")?;
                }
                write!(f, "; found {found}")
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Variable table
// ---------------------------------------------------------------------------

/// Name-to-index interning shared across the formulas of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VarTable {
    by_name: BTreeMap<String, u32>,
    by_index: BTreeMap<u32, String>,
}

fn canonical_index(name: &str) -> Option<u32> {
    let digits = name.strip_prefix('X')?;
    if digits.is_empty() || digits.starts_with('0') || !digits.bytes().all(|b| b.is_ascii_digit())
    {
        return None;
    }
    digits.parse().ok()
}

impl VarTable {
    pub fn new() -> VarTable {
        VarTable::default()
    }

    fn reserve_canonical(&mut self, name: &str) {
        if let Some(i) = canonical_index(name) {
            self.by_name.insert(name.to_owned(), i);
            self.by_index.insert(i, name.to_owned());
        }
    }

    fn intern(&mut self, name: &str) -> Var {
        if let Some(&i) = self.by_name.get(name) {
            return Var {
                name: name.to_owned(),
                index: i,
            };
        }
        let mut i = 1u32;
        while self.by_index.contains_key(&i) {
            i += 1;
        }
        self.by_name.insert(name.to_owned(), i);
        self.by_index.insert(i, name.to_owned());
        Var {
            name: name.to_owned(),
            index: i,
        }
    }

    /// `(index, name)` pairs in index order.
    pub fn entries(&self) -> impl Iterator<Item = (u32, &str)> {
        self.by_index.iter().map(|(i, n)| (*i, n.as_str()))
    }

    pub fn is_empty(&self) -> bool {
        self.by_index.is_empty()
    }
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Zero,
    Half,
    One,
    Ident(String),
    D,
    Bang,
    NablaOp,
    DeltaOp,
    FlipOp,
    Amp,
    Hash,
    Pipe,
    ArrowOp,
    LParen,
    RParen,
    Comma,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Zero => "`0`".into(),
            Tok::Half => "`h`".into(),
            Tok::One => "`1`".into(),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::D => "`d`".into(),
            Tok::Bang => "`!`".into(),
            Tok::NablaOp => "`N`".into(),
            Tok::DeltaOp => "`T`".into(),
            Tok::FlipOp => "`F`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Hash => "`#`".into(),
            Tok::Pipe => "`|`".into(),
            Tok::ArrowOp => "`~>`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn lex(input: usize, text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '0' => {
                toks.push((Tok::Zero, i));
                i += 1;
            }
            '1' => {
                if bytes[i..].starts_with(b"1/2") {
                    toks.push((Tok::Half, i));
                    i += 3;
                } else {
                    toks.push((Tok::One, i));
                    i += 1;
                }
            }
            '!' => {
                toks.push((Tok::Bang, i));
                i += 1;
            }
            '&' => {
                toks.push((Tok::Amp, i));
                i += 1;
            }
            '#' => {
                toks.push((Tok::Hash, i));
                i += 1;
            }
            '|' => {
                toks.push((Tok::Pipe, i));
                i += 1;
            }
            '~' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    toks.push((Tok::ArrowOp, i));
                    i += 2;
                } else {
                    return Err(ParseError {
                        input,
                        pos: i,
                        kind: ParseErrorKind::UnknownToken('~'),
                    });
                }
            }
            '(' => {
                toks.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, i));
                i += 1;
            }
            ',' => {
                toks.push((Tok::Comma, i));
                i += 1;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                let word = &text[start..i];
                let tok = match word {
                    "h" => Tok::Half,
                    "d" => Tok::D,
                    "N" => Tok::NablaOp,
                    "T" => Tok::DeltaOp,
                    "F" => Tok::FlipOp,
                    _ => Tok::Ident(word.to_string()),
                };
                toks.push((tok, start));
            }
            other => {
                return Err(ParseError {
                    input,
                    pos: i,
                    kind: ParseErrorKind::UnknownToken(other),
                })
            }
        }
    }
    toks.push((Tok::Eof, bytes.len()));
    Ok(toks)
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

struct Parser<'a> {
    input: usize,
    toks: Vec<(Tok, usize)>,
    at: usize,
    vars: &'a mut VarTable,
}

const ATOM_EXPECTED: &[&str] = &["`0`", "`h`", "`1`", "identifier", "`(`", "`d(`"];

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, expected: &[&'static str]) -> ParseError {
        ParseError {
            input: self.input,
            pos: self.pos(),
            kind: ParseErrorKind::Unexpected {
                found: self.peek().describe(),
                expected: expected.to_vec(),
            },
        }
    }

    fn expect(&mut self, tok: Tok, expected: &'static str) -> Result<(), ParseError> {
        if self.peek() == &tok {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(&[expected]))
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.or()?;
        while self.peek() == &Tok::ArrowOp {
            self.bump();
            acc = acc.arrow(self.or()?);
        }
        Ok(acc)
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.join()?;
        while self.peek() == &Tok::Pipe {
            self.bump();
            acc = acc.vee(self.join()?);
        }
        Ok(acc)
    }

    fn join(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.and()?;
        while self.peek() == &Tok::Hash {
            self.bump();
            acc = acc.join(self.and()?);
        }
        Ok(acc)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.unary()?;
        while self.peek() == &Tok::Amp {
            self.bump();
            acc = acc.meet(self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Tok::Bang => {
                self.bump();
                Ok(self.unary()?.neg())
            }
            Tok::NablaOp => {
                self.bump();
                Ok(self.unary()?.nabla())
            }
            Tok::DeltaOp => {
                self.bump();
                Ok(self.unary()?.delta())
            }
            Tok::FlipOp => {
                self.bump();
                Ok(self.unary()?.flip())
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::Zero => {
                self.bump();
                Ok(Formula::Zero)
            }
            Tok::Half => {
                self.bump();
                Ok(Formula::Half)
            }
            Tok::One => {
                self.bump();
                Ok(Formula::One)
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Formula::Var(self.vars.intern(&name)))
            }
            Tok::LParen => {
                self.bump();
                let f = self.formula()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(f)
            }
            Tok::D => {
                self.bump();
                self.expect(Tok::LParen, "`(`")?;
                let l = self.formula()?;
                self.expect(Tok::Comma, "`,`")?;
                let r = self.formula()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(l.dpar(r))
            }
            _ => Err(self.unexpected(ATOM_EXPECTED)),
        }
    }
}

/// Parses a batch of formulas sharing one variable table. Canonical `X<k>`
/// names are reserved across the whole batch before other identifiers are
/// assigned indices.
pub fn parse_many(texts: &[&str]) -> Result<(Vec<Formula>, VarTable), ParseError> {
    let mut streams = Vec::with_capacity(texts.len());
    for (input, text) in texts.iter().enumerate() {
        streams.push(lex(input, text)?);
    }
    let mut vars = VarTable::new();
    for stream in &streams {
        for (tok, _) in stream {
            if let Tok::Ident(name) = tok {
                vars.reserve_canonical(name);
            }
        }
    }
    let mut formulas = Vec::with_capacity(texts.len());
    for (input, toks) in streams.into_iter().enumerate() {
        let mut p = Parser {
            input,
            toks,
            at: 0,
            vars: &mut vars,
        };
        let f = p.formula()?;
        if p.peek() != &Tok::Eof {
            return Err(p.unexpected(&["end of input", "a binary operator"]));
        }
        formulas.push(f);
    }
    Ok((formulas, vars))
}

/// Parses a single formula with a fresh variable table.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    parse_many(&[text]).map(|(mut fs, _)| fs.pop().unwrap())
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

/// `Core` prints the tree verbatim (`parse . render` is the identity);
/// `Sugared` prints the resugared normal presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderStyle {
    Core,
    Sugared,
}

// Binding strength, loosest first. Left children render at the parent
// level, right children one tighter, so left-associative chains print
// without parentheses and re-parse to the same tree.
fn level(f: &Formula) -> u8 {
    match f {
        Formula::Arrow(..) => 1,
        Formula::Vee(..) => 2,
        Formula::Join(..) => 3,
        Formula::Meet(..) => 4,
        Formula::Neg(_) | Formula::Nabla(_) | Formula::Delta(_) | Formula::Flip(_) => 5,
        _ => 6,
    }
}

fn render_at(f: &Formula, min_level: u8, out: &mut String) {
    let this = level(f);
    let parens = this < min_level;
    if parens {
        out.push('(');
    }
    match f {
        Formula::Zero => out.push('0'),
        Formula::Half => out.push('h'),
        Formula::One => out.push('1'),
        Formula::Var(v) => out.push_str(&v.name),
        Formula::Dpar(l, r) => {
            out.push_str("d(");
            render_at(l, 0, out);
            out.push(',');
            render_at(r, 0, out);
            out.push(')');
        }
        Formula::Join(l, r) => {
            render_at(l, this, out);
            out.push_str(" # ");
            render_at(r, this + 1, out);
        }
        Formula::Meet(l, r) => {
            render_at(l, this, out);
            out.push_str(" & ");
            render_at(r, this + 1, out);
        }
        Formula::Vee(l, r) => {
            render_at(l, this, out);
            out.push_str(" | ");
            render_at(r, this + 1, out);
        }
        Formula::Arrow(l, r) => {
            render_at(l, this, out);
            out.push_str(" ~> ");
            render_at(r, this + 1, out);
        }
        Formula::Neg(a) => {
            out.push('!');
            render_at(a, this, out);
        }
        Formula::Nabla(a) => {
            out.push_str("N ");
            render_at(a, this, out);
        }
        Formula::Delta(a) => {
            out.push_str("T ");
            render_at(a, this, out);
        }
        Formula::Flip(a) => {
            out.push_str("F ");
            render_at(a, this, out);
        }
    }
    if parens {
        out.push(')');
    }
}

pub fn render(f: &Formula, style: RenderStyle) -> String {
    let mut out = String::new();
    match style {
        RenderStyle::Core => render_at(f, 0, &mut out),
        RenderStyle::Sugared => render_at(&f.resugar(), 0, &mut out),
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse("d(h,X1)").unwrap(),
            Formula::Half.dpar(Formula::var(1))
        );
        assert_eq!(
            parse("X1 # !X1").unwrap(),
            Formula::var(1).join(Formula::var(1).neg())
        );
        assert_eq!(
            parse("X1 & X2 # X3").unwrap(),
            Formula::var(1).meet(Formula::var(2)).join(Formula::var(3))
        );
        assert_eq!(parse("1/2").unwrap(), Formula::Half);
        assert_eq!(parse("N X1").unwrap(), Formula::var(1).nabla());
    }

    #[test]
    fn precedence_layers() {
        // ~> is loosest, then |, then #, then &, then prefixes.
        assert_eq!(
            parse("X1 | X2 # X3 & !X4").unwrap(),
            Formula::var(1).vee(
                Formula::var(2).join(Formula::var(3).meet(Formula::var(4).neg()))
            )
        );
        assert_eq!(
            parse("X1 ~> X2 ~> X3").unwrap(),
            Formula::var(1).arrow(Formula::var(2)).arrow(Formula::var(3))
        );
        assert_eq!(
            parse("X1 # X2 # X3").unwrap(),
            Formula::var(1).join(Formula::var(2)).join(Formula::var(3))
        );
    }

    #[test]
    fn arbitrary_identifiers_get_free_indices() {
        let (fs, vars) = parse_many(&["foo & X2", "bar # X1"]).unwrap();
        let entries: Vec<(u32, String)> =
            vars.entries().map(|(i, n)| (i, n.to_string())).collect();
        assert_eq!(
            entries,
            alloc::vec![
                (1, "X1".to_string()),
                (2, "X2".to_string()),
                (3, "foo".to_string()),
                (4, "bar".to_string())
            ]
        );
        match &fs[0] {
            Formula::Meet(l, _) => match l.as_ref() {
                Formula::Var(v) => assert_eq!((v.name.as_str(), v.index), ("foo", 3)),
                other => panic!("expected var, got {other:?}"),
            },
            other => panic!("expected meet, got {other:?}"),
        }
    }

    #[test]
    fn error_reporting() {
        let err = parse("X1 # ").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::Unexpected { .. }));
        assert_eq!(err.pos, 5);

        let err = parse("X1 $ X2").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnknownToken('$'));
        assert_eq!(err.pos, 3);

        let err = parse("d(h X1)").unwrap_err();
        match err.kind {
            ParseErrorKind::Unexpected { expected, .. } => {
                assert_eq!(expected, alloc::vec!["`,`"])
            }
            k => panic!("expected syntax error, got {k:?}"),
        }
    }

    #[test]
    fn render_examples() {
        assert_eq!(
            render(&Formula::Half.dpar(Formula::Zero), RenderStyle::Core),
            "d(h,0)"
        );
        assert_eq!(
            render(&Formula::var(1).neg().desugar(), RenderStyle::Core),
            "d(h,X1)"
        );
        assert_eq!(render(&Formula::One, RenderStyle::Sugared), "1");
        assert_eq!(
            render(&Formula::Half.dpar(Formula::var(1)), RenderStyle::Sugared),
            "!X1"
        );
    }

    #[test]
    fn core_render_round_trips_structurally() {
        let samples = [
            "X1 # (X2 # X3)",
            "!(X1 & X2) | T X3",
            "d(X1 # X2, h) ~> F X1",
            "N !X1 & (0 # 1)",
        ];
        for src in samples {
            let f = parse(src).unwrap();
            let printed = render(&f, RenderStyle::Core);
            assert_eq!(parse(&printed).unwrap(), f, "{src} -> {printed}");
        }
    }

    #[test]
    fn render_parse_render_is_a_fixed_point() {
        for src in ["d(h,X1)", "X1 # d(X1,0)", "!N X1 ~> (X2 | 1)"] {
            for style in [RenderStyle::Core, RenderStyle::Sugared] {
                let f = parse(src).unwrap();
                let once = render(&f, style);
                let twice = render(&parse(&once).unwrap(), style);
                assert_eq!(once, twice, "{src}");
            }
        }
    }
}
