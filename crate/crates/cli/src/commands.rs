//! Command bodies. Each returns the echoed inputs and the outputs, or the
//! library error that ends the run.

use std::io::Read;

use rayon::prelude::*;
use serde_json::{json, Value};

use segre::canonical::{canonical_pair, standard_pair};
use segre::classify::{classify, is_regular};
use segre::kernel::rational::{self, Rational};
use segre::likelihood::{conjecture_search, ml_degrees, verify_symbol};
use segre::pencil::{Pencil, PencilJson};
use segre::reciprocal::{reciprocal_degree, reciprocal_ideal};
use segre::selftest::{self, Scope};
use segre::strata::{build_poset, cayley_count, enumerate_segre};
use segre::symbol::SegreSymbol;
use segre::tables::table;
use segre::{Error, Result};

use crate::report::{exit_code, Status, EXIT_OK};

/// What a command produced: echoed inputs, outputs, a text rendering, and
/// the exit code (nonzero only for partial failures such as a batch item).
pub struct Outcome {
    pub inputs: Value,
    pub outputs: Value,
    pub text: String,
    pub code: i32,
}

impl Outcome {
    fn ok(inputs: Value, outputs: Value, text: String) -> Self {
        Self { inputs, outputs, text, code: EXIT_OK }
    }
}

pub fn read_input(path: &str) -> Result<String> {
    let mut buf = String::new();
    if path == "-" {
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
    } else {
        buf = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
    }
    Ok(buf)
}

fn parse_pencil(v: &Value) -> Result<Pencil> {
    let raw: PencilJson =
        serde_json::from_value(v.clone()).map_err(|e| Error::Parse(format!("pencil JSON: {e}")))?;
    Pencil::from_json(&raw)
}

pub fn parse_symbol(s: &str) -> Result<SegreSymbol> {
    s.parse()
}

pub fn parse_rationals(list: &str) -> Result<Vec<Rational>> {
    list.split(',').map(|t| rational::parse(t.trim())).collect()
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report types serialize")
}

fn classify_one(l: &Pencil) -> Result<Value> {
    if !is_regular(l) {
        return Err(Error::SingularPencil);
    }
    let c = classify(l)?;
    let degrees = ml_degrees(&c.symbol);
    let d = reciprocal_degree(&c.symbol);
    Ok(json!({
        "symbol": c.symbol.to_string(),
        "n": l.n(),
        "regular": true,
        "r": c.symbol.r(),
        "d": d,
        "invariant_factors": c.factors.d.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "minor_gcds": c.factors.big_d.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "classes": to_value(&c.classes),
        "degrees": { "deg": d, "mld": degrees.mld, "rmld": degrees.rmld },
    }))
}

fn classify_text(out: &Value) -> String {
    format!(
        "{}  r={} d={}  degrees ({},{},{})",
        out["symbol"].as_str().unwrap_or_default(),
        out["r"],
        out["d"],
        out["degrees"]["deg"],
        out["degrees"]["mld"],
        out["degrees"]["rmld"]
    )
}

/// A single pencil object, or an array of them processed in parallel with
/// the output order matching the input order.
pub fn cmd_classify(path: &str) -> Result<Outcome> {
    let text = read_input(path)?;
    let value: Value =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("pencil JSON: {e}")))?;
    match value {
        Value::Array(items) => {
            let results: Vec<(Value, Result<Value>)> = items
                .par_iter()
                .map(|item| match parse_pencil(item) {
                    Ok(l) => (to_value(&l.to_json()), classify_one(&l)),
                    Err(e) => (item.clone(), Err(e)),
                })
                .collect();
            let code = results
                .iter()
                .find_map(|(_, r)| r.as_ref().err().map(exit_code))
                .unwrap_or(EXIT_OK);
            let inputs = Value::Array(results.iter().map(|(i, _)| i.clone()).collect());
            let mut lines = Vec::new();
            let outputs = results
                .iter()
                .enumerate()
                .map(|(k, (_, r))| match r {
                    Ok(v) => {
                        lines.push(format!("{k}: {}", classify_text(v)));
                        json!({ "index": k, "status": Status::Ok, "result": v })
                    }
                    Err(e) => {
                        lines.push(format!("{k}: error: {e}"));
                        json!({ "index": k, "status": Status::from_error(e), "result": Value::Null })
                    }
                })
                .collect();
            Ok(Outcome { inputs, outputs: Value::Array(outputs), text: lines.join("\n"), code })
        }
        single => {
            let l = parse_pencil(&single)?;
            let out = classify_one(&l)?;
            let text = classify_text(&out);
            Ok(Outcome::ok(to_value(&l.to_json()), out, text))
        }
    }
}

pub fn cmd_canonical(symbol: &str, eigenvalues: Option<&str>) -> Result<Outcome> {
    let s = parse_symbol(symbol)?;
    let pair = match eigenvalues {
        Some(list) => canonical_pair(&s, &parse_rationals(list)?)?,
        None => standard_pair(&s),
    };
    let eig: Vec<String> = {
        let mut seen: Vec<String> = Vec::new();
        for (a, _) in &pair.blocks {
            if !seen.contains(&a.to_string()) {
                seen.push(a.to_string());
            }
        }
        seen
    };
    let pencil = to_value(&pair.pencil().to_json());
    let text = serde_json::to_string(&pencil).expect("json");
    Ok(Outcome::ok(
        json!({ "symbol": s.to_string(), "eigenvalues": eig }),
        json!({
            "pencil": pencil,
            "blocks": pair.blocks.iter().map(|(a, e)| json!([a.to_string(), e])).collect::<Vec<_>>(),
        }),
        text,
    ))
}

pub fn cmd_reciprocal(
    symbol: Option<&str>,
    eigenvalues: Option<&str>,
    path: Option<&str>,
) -> Result<Outcome> {
    let (pencil, inputs) = match (symbol, path) {
        (Some(sym), None) => {
            let s = parse_symbol(sym)?;
            let pair = match eigenvalues {
                Some(list) => canonical_pair(&s, &parse_rationals(list)?)?,
                None => standard_pair(&s),
            };
            (pair.pencil(), json!({ "symbol": s.to_string(), "eigenvalues": eigenvalues }))
        }
        (None, Some(p)) => {
            let value: Value = serde_json::from_str(&read_input(p)?)
                .map_err(|e| Error::Parse(format!("pencil JSON: {e}")))?;
            let l = parse_pencil(&value)?;
            let echo = to_value(&l.to_json());
            (l, json!({ "pencil": echo }))
        }
        _ => return Err(Error::Parse("give exactly one of --symbol or a pencil path".into())),
    };
    let ideal = reciprocal_ideal(&pencil)?;
    let report = ideal.to_report();
    let mut text = format!("degree {}\nlinear forms:\n", report.degree);
    for f in &report.linear_text {
        text.push_str(&format!("  {f}\n"));
    }
    text.push_str("quadrics:\n");
    for q in &report.quadric_text {
        text.push_str(&format!("  {q}\n"));
    }
    Ok(Outcome::ok(inputs, to_value(&report), text.trim_end().to_string()))
}

pub fn cmd_mldeg(symbol: &str, verify: bool, seed: u64, draws: usize) -> Result<Outcome> {
    let s = parse_symbol(symbol)?;
    let m = ml_degrees(&s);
    let deg = reciprocal_degree(&s);
    if !verify {
        let text = format!("{s}: mld {} rmld {} deg {deg}", m.mld, m.rmld);
        return Ok(Outcome::ok(
            json!({ "symbol": s.to_string(), "verify": false }),
            json!({ "symbol": s.to_string(), "mld": m.mld, "rmld": m.rmld, "deg": deg }),
            text,
        ));
    }
    let rep = verify_symbol(&s, seed, draws)?;
    let text = format!(
        "{s}: formula ({}, {}) oracle ({}, {}) agreement {}",
        rep.mld, rep.rmld, rep.oracle_mld, rep.oracle_rmld, rep.agreement
    );
    Ok(Outcome::ok(
        json!({ "symbol": s.to_string(), "verify": true, "seed": seed, "draws": draws }),
        to_value(&rep),
        text,
    ))
}

pub fn cmd_conjecture(n: usize, trials: usize, seed: u64, inject: &[String]) -> Result<Outcome> {
    let injected = inject.iter().map(|s| parse_rationals(s)).collect::<Result<Vec<_>>>()?;
    if let Some(bad) = injected.iter().find(|v| v.len() != n) {
        return Err(Error::ArityMismatch { expected: n, got: bad.len() });
    }
    let rep = conjecture_search(n, trials, seed, &injected)?;
    let text = match (&rep.found, &rep.best) {
        (Some(t), _) => format!("n={n}: {} real critical points for s = ({})", t.real, t.s.join(", ")),
        (None, Some(b)) => format!(
            "n={n}: target {} not reached in {} trials; best {} real",
            rep.target, rep.trials_run, b.real
        ),
        (None, None) => format!("n={n}: no trial completed"),
    };
    Ok(Outcome::ok(
        json!({ "n": n, "trials": trials, "seed": seed, "inject": inject }),
        to_value(&rep),
        text,
    ))
}

pub fn cmd_poset(n: usize, dot: Option<&str>) -> Result<Outcome> {
    let p = build_poset(n)?;
    let rendered = p.to_dot();
    let mut outputs = p.to_json();
    if let Some(path) = dot {
        std::fs::write(path, &rendered).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
        outputs["dot_path"] = json!(path);
    }
    Ok(Outcome::ok(json!({ "n": n, "dot": dot }), outputs, rendered.trim_end().to_string()))
}

pub fn cmd_table(n: usize) -> Result<Outcome> {
    let rows = table(n)?;
    let text = rows.iter().map(|r| r.to_text()).collect::<Vec<_>>().join("\n");
    Ok(Outcome::ok(json!({ "n": n }), to_value(&rows), text))
}

pub fn cmd_count(n: usize) -> Result<Outcome> {
    let symbols = enumerate_segre(n)?;
    let series = cayley_count(n);
    let names: Vec<String> = symbols.iter().map(|s| s.to_string()).collect();
    let text = format!("S({n}) = {series}; enumerated {}\n{}", names.len(), names.join("\n"));
    Ok(Outcome::ok(
        json!({ "n": n }),
        json!({ "n": n, "cayley": series.to_string(), "enumerated": names.len(), "symbols": names }),
        text,
    ))
}

pub fn cmd_selftest(scope: Scope) -> Result<Outcome> {
    let results = selftest::run(scope);
    let text = results.iter().map(|r| r.line()).collect::<Vec<_>>().join("\n");
    let outputs = to_value(&results);
    selftest::verdict(&results)?;
    Ok(Outcome::ok(json!({ "scope": scope }), outputs, text))
}
