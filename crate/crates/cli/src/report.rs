//! Text and JSON renderings of command results. Text output is
//! deterministic; only the JSON form carries timings.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use resproj::optimize::SpotCheck;
use resproj::projection::LevelComparison;
use resproj::selftest::SuiteReport;
use resproj::{
    EquivalenceReport, FactorSet, IsolatingInterval, Polynomial, ProjectionTrace, SylvesterMatrix,
    TriangularSystem, Variable, VariableOrder,
};
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub struct Report {
    command: &'static str,
    vars: Vec<String>,
    inputs: Vec<String>,
    verdict: String,
    fields: Map<String, Value>,
    text: String,
    pub timings_ms: BTreeMap<String, f64>,
}

impl Report {
    fn new(command: &'static str, order: Option<&VariableOrder>, inputs: Vec<String>) -> Self {
        Report {
            command,
            vars: order.map(|o| o.names().to_vec()).unwrap_or_default(),
            inputs,
            verdict: "ok".into(),
            fields: Map::new(),
            text: String::new(),
            timings_ms: BTreeMap::new(),
        }
    }

    fn set(&mut self, key: &str, value: Value) {
        self.fields.insert(key.into(), value);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut doc = Map::new();
                doc.insert("command".into(), json!(self.command));
                doc.insert("vars".into(), json!(self.vars));
                doc.insert("inputs".into(), json!(self.inputs));
                doc.extend(self.fields.clone());
                doc.insert("verdict".into(), json!(self.verdict));
                doc.insert("timings_ms".into(), json!(self.timings_ms));
                let mut out =
                    serde_json::to_string_pretty(&Value::Object(doc)).expect("JSON values always serialize");
                out.push('\n');
                out
            }
        }
    }
}

pub fn error_json(message: &str, code: u8) -> String {
    json!({ "verdict": "error", "error": message, "exit_code": code }).to_string()
}

fn degrees(p: &Polynomial) -> Vec<i64> {
    p.order().variables().map(|v| p.degree(&v)).collect()
}

fn factor_list(set: &FactorSet) -> Value {
    json!(set.iter().map(ToString::to_string).collect::<Vec<_>>())
}

fn degree_list(set: &FactorSet) -> Value {
    json!(set.iter().map(degrees).collect::<Vec<_>>())
}

fn write_members(text: &mut String, set: &FactorSet) {
    if set.is_empty() {
        text.push_str("  (no non-constant factors)\n");
    }
    for m in set {
        let d: Vec<String> = degrees(m).iter().map(ToString::to_string).collect();
        let _ = writeln!(text, "  {m}    degrees ({})", d.join(", "));
    }
}

pub fn resultant(
    order: &Arc<VariableOrder>,
    inputs: Vec<String>,
    x: &Variable,
    r: &Polynomial,
    matrix: Option<&SylvesterMatrix<resproj::BigInt>>,
) -> Report {
    let mut rep = Report::new("resultant", Some(order), inputs);
    rep.set("variable", json!(x.name()));
    rep.set("resultant", json!(r.to_string()));
    if let Some(m) = matrix {
        let rows: Vec<Vec<String>> = m
            .rows()
            .iter()
            .map(|row| row.iter().map(ToString::to_string).collect())
            .collect();
        rep.set("sylvester_matrix", json!(rows));
        let _ = writeln!(rep.text, "Sylvester matrix ({0}x{0}):", m.size());
        let _ = write!(rep.text, "{m}");
    }
    let _ = writeln!(rep.text, "Res(f, g, {x}) = {r}");
    rep
}

pub fn discriminant(order: &Arc<VariableOrder>, inputs: Vec<String>, x: &Variable, d: &Polynomial) -> Report {
    let mut rep = Report::new("discriminant", Some(order), inputs);
    rep.set("variable", json!(x.name()));
    rep.set("discriminant", json!(d.to_string()));
    let _ = writeln!(rep.text, "Dis(f, {x}) = {d}");
    rep
}

pub fn trace(inputs: Vec<String>, t: &ProjectionTrace) -> Report {
    let command = match t.operator {
        resproj::Operator::Brown => "proj",
        resproj::Operator::Yang => "resp",
    };
    let mut rep = Report::new(command, Some(&t.order), inputs);
    rep.set("operator", json!(t.operator.name()));
    rep.set(
        "base",
        json!({ "factors": factor_list(&t.base), "degrees": degree_list(&t.base) }),
    );
    let levels: Vec<Value> = t
        .levels
        .iter()
        .map(|l| {
            json!({
                "variable": l.variable.name(),
                "factors": factor_list(&l.factors),
                "degrees": degree_list(&l.factors),
            })
        })
        .collect();
    rep.set("levels", json!(levels));

    let _ = writeln!(rep.text, "operator: {}", t.operator);
    let _ = writeln!(rep.text, "order: {}", t.order);
    let _ = writeln!(rep.text, "level 0 (input basis):");
    write_members(&mut rep.text, &t.base);
    for (j, l) in t.levels.iter().enumerate() {
        let _ = writeln!(rep.text, "level {} (eliminated {}):", j + 1, l.variable);
        write_members(&mut rep.text, &l.factors);
    }
    rep
}

fn level_json(l: &LevelComparison) -> Value {
    json!({
        "variable": l.variable.name(),
        "equal": l.matches(),
        "brown": factor_list(&l.brown),
        "yang": factor_list(&l.yang),
        "brown_refined": factor_list(&l.brown_refined),
        "yang_refined": factor_list(&l.yang_refined),
        "brown_product": l.brown_product().to_string(),
        "yang_product": l.yang_product().to_string(),
        "only_brown": l.only_brown().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "only_yang": l.only_yang().iter().map(ToString::to_string).collect::<Vec<_>>(),
    })
}

pub fn comparison(inputs: Vec<String>, r: &EquivalenceReport) -> Report {
    let mut rep = Report::new("compare", Some(&r.brown.order), inputs);
    rep.set(
        "levels",
        json!(r.levels.iter().map(level_json).collect::<Vec<_>>()),
    );
    let n = r.levels.len();
    for (j, l) in r.levels.iter().enumerate() {
        let status = if l.matches() { "equal" } else { "DIFFERENT" };
        let _ = writeln!(rep.text, "level {} (eliminated {}): {status}", j + 1, l.variable);
        let _ = writeln!(rep.text, "  brown:   {}", l.brown);
        let _ = writeln!(rep.text, "  resp:    {}", l.yang);
        let _ = writeln!(rep.text, "  refined: {}", l.brown_refined);
        if !l.matches() {
            let _ = writeln!(rep.text, "  resp refined: {}", l.yang_refined);
            let _ = writeln!(rep.text, "  only brown: {}", join(l.only_brown()));
            let _ = writeln!(rep.text, "  only resp:  {}", join(l.only_yang()));
            let _ = writeln!(rep.text, "  brown product: {}", l.brown_product());
            let _ = writeln!(rep.text, "  resp product:  {}", l.yang_product());
        }
    }
    if r.equal {
        rep.verdict = "equal".into();
        let _ = writeln!(rep.text, "EQUAL at all {n} levels");
    } else {
        rep.verdict = "different".into();
        let _ = writeln!(
            rep.text,
            "DIFFERENT at {} of {n} levels",
            r.per_level_diffs().len()
        );
    }
    rep
}

fn join(items: Vec<&Polynomial>) -> String {
    if items.is_empty() {
        return "-".into();
    }
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn chain(inputs: Vec<String>, sys: &TriangularSystem) -> Report {
    let mut rep = Report::new("chain", Some(&sys.order), inputs);
    let equations: Vec<Value> = sys
        .equations
        .iter()
        .enumerate()
        .map(|(j, g)| {
            json!({
                "eliminated": sys.eliminated[..j].iter().map(|v| v.name()).collect::<Vec<_>>(),
                "equation": g.to_string(),
            })
        })
        .collect();
    rep.set("levels", json!(equations));
    for (j, g) in sys.equations.iter().enumerate() {
        if j == 0 {
            let _ = writeln!(rep.text, "g0 = {g}");
        } else {
            let _ = writeln!(
                rep.text,
                "g{j} = ResP(g{}, {}) = {g}",
                j - 1,
                sys.eliminated[j - 1]
            );
        }
    }
    if sys.last().is_constant() && sys.equations.len() > 1 {
        let _ = writeln!(rep.text, "chain ended at a constant");
    }
    rep
}

fn interval_json(r: &IsolatingInterval) -> Value {
    json!({
        "lo": r.lo.to_string(),
        "hi": r.hi.to_string(),
        "exact": r.exact_root.as_ref().map(ToString::to_string),
        "approx": r.midpoint_f64(),
    })
}

pub fn optimum(
    order: &Arc<VariableOrder>,
    inputs: Vec<String>,
    equation: &Polynomial,
    candidates: &[IsolatingInterval],
    spot: Option<&SpotCheck>,
    radius: f64,
    steps: usize,
) -> Report {
    let mut rep = Report::new("optimize", Some(order), inputs);
    rep.set("optimum_equation", json!(equation.to_string()));
    rep.set(
        "candidates",
        json!(candidates.iter().map(interval_json).collect::<Vec<_>>()),
    );
    rep.set("candidate_note", json!("necessary condition only"));
    let _ = writeln!(rep.text, "optimum equation: {equation} = 0");
    if candidates.is_empty() {
        let _ = writeln!(rep.text, "no real candidates");
    }
    for c in candidates {
        let _ = writeln!(rep.text, "{c}  CANDIDATE (necessary condition only)");
    }
    if let Some(s) = spot {
        rep.set(
            "spot_check",
            json!({ "heuristic": true, "radius": radius, "steps": steps, "value": s.value, "point": s.point }),
        );
        let point: Vec<String> = s.point.iter().map(|v| format!("{v:.6}")).collect();
        let _ = writeln!(
            rep.text,
            "HEURISTIC grid minimum over [-{radius}, {radius}]^{} ({steps} points per axis): {:.6} at ({})",
            order.arity(),
            s.value,
            point.join(", ")
        );
    }
    rep
}

pub fn selftest(seed: u64, trials: u64, results: &[(SuiteReport, f64)]) -> Report {
    let mut rep = Report::new("selftest", None, Vec::new());
    rep.set("seed", json!(seed));
    rep.set("trials", json!(trials));
    let suites: Vec<Value> = results
        .iter()
        .map(|(r, _)| {
            json!({
                "suite": r.suite.name(),
                "trials": r.trials,
                "passed": r.passed,
                "failures": r.failures.iter().map(|(t, m)| json!({ "trial": t, "detail": m })).collect::<Vec<_>>(),
            })
        })
        .collect();
    rep.set("suites", json!(suites));
    for (r, ms) in results {
        rep.timings_ms
            .insert(r.suite.name().into(), (ms * 1e3).round() / 1e3);
    }
    let _ = writeln!(rep.text, "seed {seed}, {trials} trials per suite");
    for (r, _) in results {
        let status = if r.ok() { "PASS" } else { "FAIL" };
        let _ = writeln!(
            rep.text,
            "{status} {:18} {}/{}",
            r.suite.name(),
            r.passed,
            r.trials
        );
        for (t, m) in &r.failures {
            let _ = writeln!(rep.text, "  trial {t}: {m}");
        }
    }
    let ok = results.iter().all(|(r, _)| r.ok());
    rep.verdict = if ok { "pass" } else { "fail" }.into();
    let _ = writeln!(
        rep.text,
        "{}",
        if ok {
            "all suites passed"
        } else {
            "SOME SUITES FAILED"
        }
    );
    rep
}
