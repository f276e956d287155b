//! Text file formats: finite algebras and truth tables.

use rmlogic::algebra::FiniteAlgebra;
use rmlogic::semantics::TruthTable;

/// Renders an algebra in the exchange format:
///
/// ```text
/// carrier: 3
/// const zero = 0
/// unop neg: 2 1 0
/// binop join: 0 1 1 1 1 1 1 1 2
/// ```
///
/// Binary tables are row-major over the carrier indices.
pub fn render_algebra(a: &FiniteAlgebra) -> String {
    let mut out = format!("carrier: {}\n", a.size());
    for (name, v) in a.consts() {
        out += &format!("const {name} = {v}\n");
    }
    for (name, t) in a.unops() {
        out += &format!(
            "unop {name}: {}\n",
            t.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        );
    }
    for (name, t) in a.binops() {
        out += &format!(
            "binop {name}: {}\n",
            t.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        );
    }
    out
}

pub fn parse_algebra(text: &str) -> Result<FiniteAlgebra, String> {
    let mut algebra: Option<FiniteAlgebra> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let at = |msg: &str| format!("line {}: {msg}", lineno + 1);
        if let Some(rest) = line.strip_prefix("carrier:") {
            let size: usize = rest
                .trim()
                .parse()
                .map_err(|_| at("carrier size must be an integer"))?;
            if size == 0 {
                return Err(at("the carrier must be nonempty"));
            }
            if algebra.is_some() {
                return Err(at("duplicate carrier line"));
            }
            algebra = Some(FiniteAlgebra::new(size));
            continue;
        }
        let a = algebra
            .as_mut()
            .ok_or_else(|| at("the carrier line must come first"))?;
        if let Some(rest) = line.strip_prefix("const ") {
            let (name, value) = rest
                .split_once('=')
                .ok_or_else(|| at("expected `const <name> = <index>`"))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| at("constant value must be an integer"))?;
            a.add_const(name.trim(), value)
                .map_err(|e| at(&e.to_string()))?;
        } else if let Some(rest) = line.strip_prefix("unop ") {
            let (name, entries) = rest
                .split_once(':')
                .ok_or_else(|| at("expected `unop <name>: entries`"))?;
            let table = parse_entries(entries).map_err(|e| at(&e))?;
            a.add_unop(name.trim(), table)
                .map_err(|e| at(&e.to_string()))?;
        } else if let Some(rest) = line.strip_prefix("binop ") {
            let (name, entries) = rest
                .split_once(':')
                .ok_or_else(|| at("expected `binop <name>: entries`"))?;
            let table = parse_entries(entries).map_err(|e| at(&e))?;
            a.add_binop(name.trim(), table)
                .map_err(|e| at(&e.to_string()))?;
        } else {
            return Err(at("unrecognized line"));
        }
    }
    algebra.ok_or_else(|| "empty algebra file".to_string())
}

fn parse_entries(s: &str) -> Result<Vec<usize>, String> {
    s.split_whitespace()
        .map(|w| {
            w.parse()
                .map_err(|_| format!("bad table entry `{w}`"))
        })
        .collect()
}

/// The truth-table text format: `m=<arity>` then one line of `3^m`
/// symbols over `{0,h,1}` in valuation-index order.
pub fn render_table(t: &TruthTable) -> String {
    format!("m={}\n{}\n", t.arity(), t.values_string())
}

pub fn parse_table(text: &str) -> Result<TruthTable, String> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or("empty table file")?;
    let m: usize = header
        .trim()
        .strip_prefix("m=")
        .ok_or("expected a `m=<arity>` header")?
        .parse()
        .map_err(|_| "bad arity in the header".to_string())?;
    let values = lines.next().ok_or("missing the value line")?.trim();
    let table = TruthTable::from_symbols(values)?;
    if table.arity() != m {
        return Err(format!(
            "header says m={m} but the value line has 3^{} entries",
            table.arity()
        ));
    }
    Ok(table)
}
