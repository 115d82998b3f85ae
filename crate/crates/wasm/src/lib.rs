//! Browser bindings. Each export returns a JSON string; errors become JS
//! exceptions carrying the library's message.
//!
//! The `*_json` functions are plain Rust so they can be tested natively.

use serde_json::json;
use wasm_bindgen::prelude::*;

use trigsum::arith::{int, pow, PiScaled};
use trigsum::error::{Error, Result};
use trigsum::oracle::{check_exact_vs_numeric, eval_pi_scaled, raw_trig_sum, SumKind};
use trigsum::sums::{cc_sum, dowker, gardner_fisher, ts_sum};
use trigsum::tables::{display_row, latex_row, table_row, TableKind};

const MAX_INDEX: u32 = 40;
const MAX_DIGITS: u32 = 400;
const MAX_TERMS: u64 = 5000;

fn bounded(name: &str, value: u64, lo: u64, hi: u64) -> Result<()> {
    if value < lo || value > hi {
        return Err(Error::OutOfRange(format!(
            "{name} must be between {lo} and {hi}"
        )));
    }
    Ok(())
}

/// One row of the cosecant, Gardner-Fisher or Dowker table.
pub fn table_row_json(kind: &str, k: u32) -> Result<String> {
    let kind: TableKind = kind.parse()?;
    let lo = if kind == TableKind::Cosecant { 0 } else { 1 };
    bounded("index", k as u64, lo, MAX_INDEX as u64)?;
    let row = table_row(kind, k);
    Ok(json!({
        "index": k,
        "text": display_row(kind, &row),
        "latex": latex_row(kind, &row),
        "row": row,
    })
    .to_string())
}

/// Exact value of a sum at one modulus, with a decimal expansion.
pub fn sum_value_json(
    family: &str,
    m: u64,
    v: u32,
    w: u32,
    ell: u32,
    digits: u32,
) -> Result<String> {
    bounded("m", m, 1, MAX_TERMS)?;
    bounded("digits", digits as u64, 1, MAX_DIGITS as u64)?;
    let exact = match family {
        "gf" => {
            bounded("v", v as u64, 1, MAX_INDEX as u64)?;
            gardner_fisher(m, v)
        }
        "dowker" => {
            bounded("v", v as u64, 1, MAX_INDEX as u64)?;
            PiScaled::rational(dowker(m, v))
        }
        "cc" => PiScaled::rational(cc_sum(m, v, w, ell)?),
        "ts" => PiScaled::rational(ts_sum(m, v, w)?),
        other => return Err(Error::Parse(format!("unknown family {other:?}"))),
    };
    let decimal = eval_pi_scaled(&exact, digits).to_decimal(digits);
    Ok(json!({ "exact": exact.to_string(), "decimal": decimal }).to_string())
}

/// Direct summation of `csc^(2v)(k pi / (ell m))` over `k = 1..m-1`,
/// compared with the closed form for `ell = 1` or `2`.
pub fn oracle_json(m: u64, v: u32, ell: u32, digits: u32) -> Result<String> {
    bounded("m", m, 2, MAX_TERMS)?;
    bounded("v", v as u64, 1, MAX_INDEX as u64)?;
    bounded("digits", digits as u64, 15, MAX_DIGITS as u64)?;
    let exact = match ell {
        1 => PiScaled::rational(dowker(m, v)),
        2 => &gardner_fisher(m, v) * &PiScaled::new(pow(&int(2 * m), 2 * v), -2 * v as i64),
        other => return Err(Error::UnsupportedEll(other)),
    };
    let raw = raw_trig_sum(m, v, 0, ell, SumKind::CscOnly, digits)?;
    let verdict = check_exact_vs_numeric(&exact, &raw, digits);
    Ok(json!({ "closed_form": exact.to_string(), "verdict": verdict }).to_string())
}

fn js(r: Result<String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen(js_name = tableRow)]
pub fn table_row_js(kind: &str, k: u32) -> Result<String, JsError> {
    js(table_row_json(kind, k))
}

#[wasm_bindgen(js_name = sumValue)]
pub fn sum_value_js(
    family: &str,
    m: u32,
    v: u32,
    w: u32,
    ell: u32,
    digits: u32,
) -> Result<String, JsError> {
    js(sum_value_json(family, m as u64, v, w, ell, digits))
}

#[wasm_bindgen(js_name = oracle)]
pub fn oracle_js(m: u32, v: u32, ell: u32, digits: u32) -> Result<String, JsError> {
    js(oracle_json(m as u64, v, ell, digits))
}
