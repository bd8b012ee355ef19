//! WebAssembly bindings used by `www/index.html`. Each export takes a backend
//! string such as `grassmann:4` and a matrix literal, and returns text or JSON.

use nilcayley::backend::BackendSpec;
use nilcayley::dettheory::DetTheory;
use nilcayley::expr::parse_matrix;
use nilcayley::identities::{check_ch, sample_matrices, Params};
use nilcayley::ringcore::SampleSpec;
use nilcayley::{with_ring, Error, Ring};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Trials accepted by [`verify_ch`] in the browser.
pub const MAX_TRIALS: usize = 50;

fn backend(spec: &str) -> Result<nilcayley::backend::Backend, Error> {
    let spec: BackendSpec = spec.parse()?;
    if matches!(spec, BackendSpec::Json { .. }) {
        return Err(Error::Precondition("file backends are not available in the browser".into()));
    }
    spec.build()
}

pub fn sdet_text(spec: &str, matrix: &str) -> Result<String, Error> {
    let b = backend(spec)?;
    with_ring!(&b, r => {
        let a = parse_matrix(matrix, r, None)?;
        Ok(r.render(&DetTheory::new(r).sdet(&a)?))
    })
}

pub fn char_poly_json(spec: &str, matrix: &str, k: Option<usize>) -> Result<String, Error> {
    let parsed: BackendSpec = spec.parse()?;
    let k = k
        .or(parsed.lie_index())
        .ok_or_else(|| Error::Precondition(format!("choose k: the Lie nilpotency index of {parsed} is not known")))?;
    let b = backend(spec)?;
    with_ring!(&b, r => {
        let a = parse_matrix(matrix, r, None)?;
        let cp = DetTheory::new(r).char_poly(&a, k)?;
        let coeffs: Vec<String> = cp.coefficients.iter().map(|c| r.render(c)).collect();
        Ok(json!({ "n": cp.n, "k": cp.k, "degree": cp.degree(), "coefficients": coeffs }).to_string())
    })
}

pub fn verify_ch_json(spec: &str, n: usize, k: usize, seed: u64, trials: usize) -> Result<String, Error> {
    if trials == 0 || trials > MAX_TRIALS {
        return Err(Error::Precondition(format!("trials must be between 1 and {MAX_TRIALS}")));
    }
    let b = backend(spec)?;
    let report = with_ring!(&b, r => {
        let ms = sample_matrices(r, n, trials, &SampleSpec::new(seed));
        let params = Params { n: Some(n), k: Some(k), seed: Some(seed), trials: Some(trials), ..Params::default() };
        check_ch(&DetTheory::new(r), &ms, k, &[], params)
    })?;
    Ok(serde_json::to_string_pretty(&report).expect("reports serialize"))
}

fn js(r: Result<String, Error>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e.to_string()))
}

/// Symmetric determinant of a square matrix over the given backend.
#[wasm_bindgen]
pub fn sdet(backend: &str, matrix: &str) -> Result<String, JsValue> {
    js(sdet_text(backend, matrix))
}

/// Right characteristic polynomial coefficients as JSON. `k` defaults to the
/// backend's Lie nilpotency index when it is known.
#[wasm_bindgen]
pub fn char_poly(backend: &str, matrix: &str, k: Option<u32>) -> Result<String, JsValue> {
    js(char_poly_json(backend, matrix, k.map(|k| k as usize)))
}

/// Right Cayley-Hamilton check on random matrices; returns the JSON report.
#[wasm_bindgen]
pub fn verify_ch(backend: &str, n: u32, k: u32, seed: u32, trials: u32) -> Result<String, JsValue> {
    js(verify_ch_json(backend, n as usize, k as usize, seed as u64, trials as usize))
}
