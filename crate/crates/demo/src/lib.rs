//! Browser bindings. Every export takes text and returns a JSON string; on
//! bad input the object has a single `error` field.

use rhstab_core::hodograph::{emit, sample_curve, winding_increment, PlotFormat};
use rhstab_core::lorenz::{analyze, LorenzParams};
use rhstab_core::methods::crosscheck;
use rhstab_core::report;
use rhstab_core::text::{parse_polynomial, ParsedPolynomial};
use rhstab_core::{Error, Rat};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

const PLOT_POINTS: usize = 800;

fn finish(r: Result<Value, Error>) -> String {
    r.unwrap_or_else(|e| json!({ "error": e.to_string() })).to_string()
}

/// `{ "svg": ..., "winding": {...} }` for the curve `i^-n p(iw)`.
#[wasm_bindgen]
pub fn hodograph(coeffs: &str) -> String {
    finish((|| {
        let p = parse_polynomial(coeffs)?.to_complex();
        let w = winding_increment(&p)?;
        let svg = emit(&sample_curve(&p, PLOT_POINTS)?, PlotFormat::Svg)?;
        Ok(json!({ "svg": svg, "winding": report::winding(&w) }))
    })())
}

/// Root counts from all five methods.
#[wasm_bindgen(js_name = crosscheck)]
pub fn crosscheck_json(coeffs: &str) -> String {
    finish((|| Ok(report::crosscheck(&crosscheck(&parse_polynomial(coeffs)?.to_complex())?)))())
}

fn scalar(s: &str) -> Result<Rat, Error> {
    match parse_polynomial(s)? {
        ParsedPolynomial::Real(p) if p.degree() == Some(0) => Ok(p.coeffs()[0].clone()),
        _ => Err(Error::MalformedToken { position: 1, token: s.to_string() }),
    }
}

#[wasm_bindgen]
pub fn lorenz(sigma: &str, r: &str, b: &str) -> String {
    finish((|| {
        let params = LorenzParams::new(scalar(sigma)?, scalar(r)?, scalar(b)?)?;
        Ok(report::lorenz(&analyze(&params)?))
    })())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn exports() {
        let h = parse(hodograph("32 12 46 21 16 7 1"));
        assert_eq!(h["winding"]["delta_over_pi"], "-2");
        assert!(h["svg"].as_str().unwrap().starts_with("<svg"));
        assert!(parse(hodograph("1 0 1"))["error"].is_string());

        let c = parse(crosscheck_json("1 1 1 2"));
        assert_eq!(c["agree"], true);
        assert!(parse(crosscheck_json("1 /"))["error"].is_string());

        assert_eq!(parse(lorenz("10", "28", "8/3"))["r_star"], "470/19");
        assert!(parse(lorenz("10", "0", "1"))["error"].is_string());
        assert!(parse(lorenz("10", "1 2", "1"))["error"].is_string());
    }
}
