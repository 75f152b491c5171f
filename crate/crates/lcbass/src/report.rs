//! JSON reports and their text renderings. Objects are `serde_json::Map`,
//! which keeps keys sorted, so serialization is byte-stable. Text output
//! is produced from the JSON only.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use lcbass_core::cech::{LcProfile, SupportProfile};
use lcbass_core::harness::{Check, Tally, TheoremReport, Witness};
use lcbass_core::homolog::{BassTable, HypothesisReport};
use lcbass_core::sr::{SquareFreeIdeal, VarSet};
use serde_json::{json, Value};

pub const SCHEMA_VERSION: u64 = 1;

fn set(s: VarSet) -> Value {
    json!(s.to_one_based())
}

pub fn ideal_json(i: &SquareFreeIdeal) -> Value {
    json!({
        "nvars": i.nvars(),
        "vars": i.names(),
        "gens": i.gens().iter().map(|g| g.to_one_based()).collect::<Vec<_>>(),
        "render": i.render(),
    })
}

pub fn hypotheses_json(h: &HypothesisReport) -> Value {
    json!({
        "n": h.n,
        "height": h.height,
        "codim": h.codim_gap,
        "dim": h.dim,
        "depth": h.depth,
        "pdim": h.pdim,
        "pure": h.pure,
        "cm": h.cm,
        "s2": h.s2,
        "minimal_primes": h.minimal_primes.iter().map(|&s| set(s)).collect::<Vec<_>>(),
    })
}

/// Wraps a payload with its kind and schema version.
pub fn envelope(kind: &str, mut body: serde_json::Map<String, Value>) -> Value {
    body.insert("kind".into(), json!(kind));
    body.insert("schema_version".into(), json!(SCHEMA_VERSION));
    Value::Object(body)
}

fn object(v: Value) -> serde_json::Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("built with json!({{..}})"),
    }
}

pub fn info(i: &SquareFreeIdeal, h: &HypothesisReport, nonvanishing: &[usize]) -> Value {
    envelope(
        "info",
        object(json!({
            "ideal": ideal_json(i),
            "hypotheses": hypotheses_json(h),
            "lc_nonvanishing": nonvanishing,
        })),
    )
}

pub fn bass(t: &BassTable) -> Value {
    let cells: Vec<Value> = t
        .cells
        .iter()
        .map(|c| json!({"sigma": set(c.sigma), "i": c.i, "p": c.p, "value": c.value, "source": c.source.tag()}))
        .collect();
    envelope(
        "bass",
        object(json!({"ideal": ideal_json(&t.ideal), "cells": cells})),
    )
}

fn witness(w: &Witness) -> Value {
    json!({
        "quantity": w.quantity.as_str(),
        "sigma": set(w.sigma),
        "i": w.i,
        "p": w.p,
        "expected": {"op": w.expected.op(), "value": w.expected.value()},
        "got": w.got,
        "holds": w.holds(),
    })
}

fn check(c: &Check) -> Value {
    json!({
        "name": c.name,
        "verdict": c.verdict.as_str(),
        "hypotheses_satisfied": c.hypotheses_satisfied,
        "skip_reason": c.skip_reason,
        "assumptions": c.assumptions,
        "cells_checked": c.cells_checked,
        "witnesses": c.witnesses.iter().map(witness).collect::<Vec<_>>(),
    })
}

fn tally(t: Tally) -> Value {
    json!({"pass": t.pass, "fail": t.fail, "skipped": t.skipped})
}

/// One ideal's theorem report, without the envelope.
pub fn theorem(r: &TheoremReport) -> Value {
    json!({
        "ideal": ideal_json(&r.ideal),
        "hypotheses": hypotheses_json(&r.hypotheses),
        "lc_nonvanishing": r.lc_nonvanishing,
        "checks": r.checks.iter().map(check).collect::<Vec<_>>(),
        "summary": tally(r.tally()),
    })
}

pub fn verify(r: &TheoremReport) -> Value {
    envelope("verify", object(theorem(r)))
}

/// Reports for a corpus run, with totals and per-check counts.
pub fn verify_corpus(constraints: Value, reports: &[Value]) -> Value {
    let mut total = Tally::default();
    let mut per_check: BTreeMap<String, Tally> = BTreeMap::new();
    for r in reports {
        for c in r["checks"].as_array().into_iter().flatten() {
            let v = match c["verdict"].as_str() {
                Some("pass") => lcbass_core::harness::Verdict::Pass,
                Some("fail") => lcbass_core::harness::Verdict::Fail,
                _ => lcbass_core::harness::Verdict::Skipped,
            };
            total.add(v);
            per_check
                .entry(c["name"].as_str().unwrap_or_default().to_string())
                .or_default()
                .add(v);
        }
    }
    let per_check: serde_json::Map<String, Value> =
        per_check.into_iter().map(|(k, t)| (k, tally(t))).collect();
    envelope(
        "verify-corpus",
        object(json!({
            "corpus": constraints,
            "ideals": reports.len(),
            "reports": reports,
            "per_check": per_check,
            "summary": tally(total),
        })),
    )
}

pub fn lc_profile(i: &SquareFreeIdeal, p: &LcProfile) -> Value {
    let dims: serde_json::Map<String, Value> = p
        .dims
        .iter()
        .map(|(k, cells)| {
            let cells: Vec<Value> = cells
                .iter()
                .map(|&(s, d)| json!({"pattern": set(s), "dim": d}))
                .collect();
            (k.to_string(), Value::Array(cells))
        })
        .collect();
    envelope(
        "lc",
        object(
            json!({"ideal": ideal_json(i), "nonvanishing": p.nonvanishing(), "strand_dims": dims}),
        ),
    )
}

pub fn lc_dim(i: &SquareFreeIdeal, k: usize, pattern: VarSet, dim: usize) -> Value {
    envelope(
        "lc-dim",
        object(json!({"ideal": ideal_json(i), "i": k, "pattern": set(pattern), "dim": dim})),
    )
}

pub fn lc_support(i: &SquareFreeIdeal, s: &SupportProfile, only: Option<usize>) -> Value {
    let mut per: serde_json::Map<String, Value> = serde_json::Map::new();
    for (&k, sets) in &s.supports {
        if only.is_some_and(|o| o != k) {
            continue;
        }
        per.insert(
            k.to_string(),
            json!({"dim": s.dim(k), "primes": sets.iter().map(|&x| set(x)).collect::<Vec<_>>()}),
        );
    }
    if let Some(k) = only {
        per.entry(k.to_string())
            .or_insert_with(|| json!({"dim": null, "primes": []}));
    }
    envelope(
        "lc-support",
        object(json!({"ideal": ideal_json(i), "support": per})),
    )
}

/// Deterministic serialization with a trailing newline.
pub fn to_bytes(v: &Value) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(v).expect("values serialize");
    out.push(b'\n');
    out
}

fn list(v: &Value) -> String {
    let items: Vec<String> = v
        .as_array()
        .into_iter()
        .flatten()
        .map(|x| x.to_string())
        .collect();
    format!("{{{}}}", items.join(","))
}

fn sets(v: &Value) -> String {
    let items: Vec<String> = v.as_array().into_iter().flatten().map(list).collect();
    items.join(" ")
}

fn yes(v: &Value) -> &'static str {
    if v.as_bool().unwrap_or(false) {
        "yes"
    } else {
        "no"
    }
}

/// Human-readable rendering of any report produced above.
pub fn render_text(v: &Value) -> String {
    let mut s = String::new();
    let ideal = &v["ideal"];
    if let Some(r) = ideal["render"].as_str() {
        let _ = writeln!(s, "ideal {} in {} variables", r, ideal["nvars"]);
    }
    match v["kind"].as_str().unwrap_or_default() {
        "info" => {
            render_hypotheses(&mut s, &v["hypotheses"]);
            let _ = writeln!(
                s,
                "H^i_I(R) nonzero for i in {}",
                list(&v["lc_nonvanishing"])
            );
        }
        "bass" => {
            let _ = writeln!(
                s,
                "{:<20} {:>3} {:>3} {:>6}  source",
                "sigma", "i", "p", "mu"
            );
            for c in v["cells"].as_array().into_iter().flatten() {
                let _ = writeln!(
                    s,
                    "{:<20} {:>3} {:>3} {:>6}  {}",
                    list(&c["sigma"]),
                    c["i"].to_string(),
                    c["p"].to_string(),
                    c["value"].to_string(),
                    c["source"].as_str().unwrap_or_default()
                );
            }
        }
        "verify" => render_theorem(&mut s, v),
        "verify-corpus" => {
            let _ = writeln!(s, "corpus {} ({} ideals)", v["corpus"], v["ideals"]);
            for r in v["reports"].as_array().into_iter().flatten() {
                if r["summary"]["fail"].as_u64().unwrap_or(0) > 0 {
                    let _ = writeln!(
                        s,
                        "ideal {}",
                        r["ideal"]["render"].as_str().unwrap_or_default()
                    );
                    render_theorem(&mut s, r);
                }
            }
            if let Some(per) = v["per_check"].as_object() {
                for (name, t) in per {
                    let _ = writeln!(s, "  {name:<32} {}", counts(t));
                }
            }
        }
        "lc" => {
            let _ = writeln!(s, "H^i_I(R) nonzero for i in {}", list(&v["nonvanishing"]));
            if let Some(dims) = v["strand_dims"].as_object() {
                for (k, cells) in dims {
                    for c in cells.as_array().into_iter().flatten() {
                        let _ = writeln!(
                            s,
                            "  H^{k} strand {}: dim {}",
                            list(&c["pattern"]),
                            c["dim"]
                        );
                    }
                }
            }
        }
        "lc-dim" => {
            let _ = writeln!(
                s,
                "dim H^{}_I(R) on negative pattern {} = {}",
                v["i"],
                list(&v["pattern"]),
                v["dim"]
            );
        }
        "lc-support" => {
            if let Some(per) = v["support"].as_object() {
                for (k, e) in per {
                    let dim = if e["dim"].is_null() {
                        "empty".to_string()
                    } else {
                        e["dim"].to_string()
                    };
                    let _ = writeln!(
                        s,
                        "Supp H^{k}: dim {dim}; graded primes {}",
                        sets(&e["primes"])
                    );
                }
            }
        }
        _ => {}
    }
    if v["kind"] == "verify" || v["kind"] == "verify-corpus" {
        let _ = writeln!(s, "summary: {}", counts(&v["summary"]));
    }
    s
}

fn counts(t: &Value) -> String {
    format!(
        "{} passed, {} failed, {} skipped",
        t["pass"], t["fail"], t["skipped"]
    )
}

fn render_hypotheses(s: &mut String, h: &Value) {
    let _ = writeln!(
        s,
        "n = {}, height d = {}, n - d = {}",
        h["n"], h["height"], h["codim"]
    );
    let _ = writeln!(
        s,
        "dim R/I = {}, depth R/I = {}, pdim R/I = {}",
        h["dim"], h["depth"], h["pdim"]
    );
    let _ = writeln!(
        s,
        "pure: {}, Cohen-Macaulay: {}, S2: {}",
        yes(&h["pure"]),
        yes(&h["cm"]),
        yes(&h["s2"])
    );
    let _ = writeln!(s, "minimal primes: {}", sets(&h["minimal_primes"]));
}

fn render_theorem(s: &mut String, r: &Value) {
    for c in r["checks"].as_array().into_iter().flatten() {
        let verdict = c["verdict"].as_str().unwrap_or_default();
        let _ = write!(
            s,
            "  [{verdict:<7}] {}",
            c["name"].as_str().unwrap_or_default()
        );
        if let Some(why) = c["skip_reason"].as_str() {
            let _ = write!(s, " ({why})");
        } else {
            let _ = write!(s, " ({} cells)", c["cells_checked"]);
        }
        let _ = writeln!(s);
        for w in c["witnesses"].as_array().into_iter().flatten() {
            let _ = writeln!(
                s,
                "      {} {} i={} p={}: got {}, expected {} {}{}",
                w["quantity"].as_str().unwrap_or_default(),
                list(&w["sigma"]),
                w["i"],
                w["p"],
                w["got"],
                w["expected"]["op"].as_str().unwrap_or_default(),
                w["expected"]["value"],
                if w["holds"].as_bool().unwrap_or(false) {
                    ""
                } else {
                    "  <-- violated"
                },
            );
        }
        for a in c["assumptions"].as_array().into_iter().flatten() {
            let _ = writeln!(s, "      assumes: {}", a.as_str().unwrap_or_default());
        }
    }
}
