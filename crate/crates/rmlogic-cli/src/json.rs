//! JSON views of the library types.
//!
//! AST schema: nested `{"op": <name>, "args": [...]}` objects with
//! `{"var": "X1"}` and `{"const": "0"|"h"|"1"}` leaves. Verdict schema:
//! `{"holds": bool, "mode": "compatible"|"incompatible",
//!   "witness": {"valuation": ["0","h",...], "premises": [i, ...]} | null}`.

use serde_json::{json, Value};

use rmlogic::faces::{Face, Vertex};
use rmlogic::formula::Formula;
#[cfg(test)]
use rmlogic::formula::Var;
use rmlogic::parse::VarTable;
use rmlogic::semantics::{Mode, Valuation, Verdict, Witness};
use rmlogic::trit::Trit;

pub fn trit(t: Trit) -> Value {
    json!(t.symbol().to_string())
}

pub fn formula(f: &Formula) -> Value {
    let op = |name: &str, args: Vec<Value>| json!({ "op": name, "args": args });
    match f {
        Formula::Zero => json!({ "const": "0" }),
        Formula::Half => json!({ "const": "h" }),
        Formula::One => json!({ "const": "1" }),
        Formula::Var(v) => json!({ "var": v.name }),
        Formula::Join(l, r) => op("join", vec![formula(l), formula(r)]),
        Formula::Dpar(l, r) => op("dpar", vec![formula(l), formula(r)]),
        Formula::Meet(l, r) => op("meet", vec![formula(l), formula(r)]),
        Formula::Neg(a) => op("neg", vec![formula(a)]),
        Formula::Nabla(a) => op("nabla", vec![formula(a)]),
        Formula::Delta(a) => op("delta", vec![formula(a)]),
        Formula::Vee(l, r) => op("vee", vec![formula(l), formula(r)]),
        Formula::Flip(a) => op("flip", vec![formula(a)]),
        Formula::Arrow(l, r) => op("arrow", vec![formula(l), formula(r)]),
    }
}

/// Rebuilds a formula from the AST schema; variable indices are resolved
/// against the given table. Exercised by the schema round-trip tests.
#[cfg(test)]
pub fn formula_from_json(v: &Value, vars: &VarTable) -> Result<Formula, String> {
    if let Some(c) = v.get("const").and_then(Value::as_str) {
        return match c {
            "0" => Ok(Formula::Zero),
            "h" => Ok(Formula::Half),
            "1" => Ok(Formula::One),
            other => Err(format!("bad constant `{other}`")),
        };
    }
    if let Some(name) = v.get("var").and_then(Value::as_str) {
        let index = vars
            .entries()
            .find(|(_, n)| *n == name)
            .map(|(i, _)| i)
            .ok_or_else(|| format!("unknown variable `{name}`"))?;
        return Ok(Formula::Var(Var {
            name: name.to_string(),
            index,
        }));
    }
    let op = v
        .get("op")
        .and_then(Value::as_str)
        .ok_or("expected an op, var or const node")?;
    let args = v
        .get("args")
        .and_then(Value::as_array)
        .ok_or("missing args")?;
    let arg = |i: usize| -> Result<Formula, String> {
        formula_from_json(args.get(i).ok_or("missing argument")?, vars)
    };
    match (op, args.len()) {
        ("join", 2) => Ok(arg(0)?.join(arg(1)?)),
        ("dpar", 2) => Ok(arg(0)?.dpar(arg(1)?)),
        ("meet", 2) => Ok(arg(0)?.meet(arg(1)?)),
        ("vee", 2) => Ok(arg(0)?.vee(arg(1)?)),
        ("arrow", 2) => Ok(arg(0)?.arrow(arg(1)?)),
        ("neg", 1) => Ok(arg(0)?.neg()),
        ("nabla", 1) => Ok(arg(0)?.nabla()),
        ("delta", 1) => Ok(arg(0)?.delta()),
        ("flip", 1) => Ok(arg(0)?.flip()),
        (other, n) => Err(format!("bad node `{other}` with {n} arguments")),
    }
}

pub fn var_table(vars: &VarTable) -> Value {
    let mut map = serde_json::Map::new();
    for (i, name) in vars.entries() {
        map.insert(name.to_string(), json!(i));
    }
    Value::Object(map)
}

pub fn valuation(v: &Valuation) -> Value {
    Value::Array(v.digits().iter().map(|t| trit(*t)).collect())
}

pub fn verdict(v: &Verdict) -> Value {
    let witness = match &v.witness {
        None => Value::Null,
        Some(Witness::Counterexample(w)) => json!({
            "valuation": valuation(w),
            "premises": [],
        }),
        Some(Witness::Clash(c)) => json!({
            "valuation": valuation(&c.valuation),
            "premises": [c.i, c.j],
        }),
    };
    json!({
        "holds": v.holds,
        "mode": match v.mode {
            Mode::Compatible => "compatible",
            Mode::Incompatible => "incompatible",
        },
        "witness": witness,
    })
}

pub fn face(f: &Face) -> Value {
    json!({
        "n": f.n(),
        "A0": f.a0(),
        "A1": f.a1(),
        "word": f.word_string(),
    })
}

#[cfg(test)]
pub fn face_from_json(v: &Value) -> Result<Face, String> {
    let word = v
        .get("word")
        .and_then(Value::as_str)
        .ok_or("missing word")?;
    Face::from_word(word).map_err(|e| e.to_string())
}

pub fn vertex(v: &Vertex) -> Value {
    Value::Array(
        v.coords
            .iter()
            .map(|c| json!(u8::from(*c)))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use rmlogic::parse::{parse_many, render, RenderStyle};

    #[test]
    fn ast_schema_round_trips() {
        for src in [
            "X1 # !X1",
            "d(h, X1 & X2) ~> F X3",
            "T X1 | N (X2 # 1)",
            "0",
        ] {
            let (fs, vars) = parse_many(&[src]).unwrap();
            let encoded = formula(&fs[0]);
            let decoded = formula_from_json(&encoded, &vars).unwrap();
            assert_eq!(decoded, fs[0], "{src}");
            assert_eq!(
                render(&decoded, RenderStyle::Core),
                render(&fs[0], RenderStyle::Core)
            );
        }
    }

    #[test]
    fn face_schema_round_trips() {
        for word in ["0h1h", "h", "010", "hhhh"] {
            let f = Face::from_word(word).unwrap();
            let back = face_from_json(&face(&f)).unwrap();
            assert_eq!(back, f);
        }
    }

    #[test]
    fn verdict_schema_shape() {
        let v = Verdict {
            holds: false,
            mode: Mode::Compatible,
            witness: Some(Witness::Counterexample(Valuation::from_digits(vec![
                Trit::One,
            ]))),
        };
        let j = verdict(&v);
        assert_eq!(j["holds"], serde_json::json!(false));
        assert_eq!(j["mode"], serde_json::json!("compatible"));
        assert_eq!(j["witness"]["valuation"], serde_json::json!(["1"]));
        assert_eq!(j["witness"]["premises"], serde_json::json!([]));
    }
}
