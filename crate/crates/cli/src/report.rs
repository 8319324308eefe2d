//! Run reports: one structured record per invocation.
//!
//! The machine form is JSON with a fixed field set
//! `{command, inputs, result, verdict, witnesses, timing_ms, seed}`; given
//! the same inputs and seed it is byte-identical except for `timing_ms`.
//! The human form is plain text, and for ideal-valued commands it is
//! exactly the two-line ideal file format so the output parses back.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use monoideal::decomp::PrimeIdeal;
use monoideal::{MonomialIdeal, VarContext};

/// Identifies one input by path and content hash.
#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn new(path: impl Into<String>, bytes: &[u8]) -> Self {
        InputDigest { path: path.into(), sha256: sha256_hex(bytes) }
    }
}

/// The full record of one command run.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub result: Value,
    pub verdict: Option<String>,
    pub witnesses: Vec<Value>,
    pub timing_ms: u64,
    pub seed: Option<u64>,
}

/// What a command handler produces; the caller wraps it into a
/// [`RunReport`] with the command echo and timing attached.
#[derive(Debug)]
pub struct Payload {
    pub inputs: Vec<InputDigest>,
    pub result: Value,
    pub verdict: Option<String>,
    pub witnesses: Vec<Value>,
    pub human: String,
    /// 0 when every requested check passed, 1 on a failed check, 3 when a
    /// budget refusal is the only reason nothing was verified.
    pub exit_code: u8,
    pub seed: Option<u64>,
}

impl Payload {
    /// A payload for a command whose only product is an ideal.
    pub fn ideal(ctx: &VarContext, ideal: &MonomialIdeal, inputs: Vec<InputDigest>) -> Payload {
        let (result, human) = ideal_result(ctx, ideal);
        Payload {
            inputs,
            result,
            verdict: None,
            witnesses: Vec::new(),
            human,
            exit_code: 0,
            seed: None,
        }
    }
}

/// Hex SHA-256 of a byte string.
pub fn sha256_hex(bytes: &[u8]) -> String {
    use std::fmt::Write;
    let digest = Sha256::digest(bytes);
    let mut out = String::with_capacity(64);
    for b in digest {
        write!(out, "{b:02x}").expect("writing to a String");
    }
    out
}

/// JSON payload and round-trippable human text for an ideal.
pub fn ideal_result(ctx: &VarContext, ideal: &MonomialIdeal) -> (Value, String) {
    let vars = ctx.names().join(" ");
    let body = ctx.format_ideal(ideal);
    let human = format!("vars {vars}\nideal {body}\n");
    (serde_json::json!({ "vars": vars, "ideal": body }), human)
}

/// Bracketed prime rendering, e.g. `[x1,x3,x7]`.
pub fn format_prime(ctx: &VarContext, p: &PrimeIdeal) -> String {
    let names: Vec<&str> = p.vars().iter().map(|&i| ctx.name(i)).collect();
    format!("[{}]", names.join(","))
}

/// A prime as a JSON array of variable names.
pub fn prime_json(ctx: &VarContext, p: &PrimeIdeal) -> Value {
    Value::Array(p.vars().iter().map(|&i| Value::String(ctx.name(i).to_string())).collect())
}

/// Serializes the report as pretty JSON with a trailing newline.
pub fn to_json(report: &RunReport) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("report serializes");
    text.push('\n');
    text
}
