//! JSON views of the analyses. Every number is an exact string, `"p"` or
//! `"p/q"`; polynomials are arrays of such strings, highest power first.

use serde_json::{json, Map, Value};

use crate::hankel::HankelSummary;
use crate::hodograph::WindingSummary;
use crate::hurwitz::HurwitzReport;
use crate::lorenz::{LorenzAnalysis, Threshold};
use crate::methods::{CrossCheck, Method, MethodOutcome};
use crate::poly::{ComplexPolynomial, Polynomial, Rat, RationalFunction};
use crate::roots::{AxisRoots, RootDistribution};
use crate::routh::StabilityClass;
use crate::stieltjes::CfSummary;
use crate::text::{format_complex, format_rat};

pub fn rat(x: &Rat) -> Value {
    Value::String(format_rat(x))
}

pub fn int(x: impl ToString) -> Value {
    Value::String(x.to_string())
}

pub fn rats(xs: &[Rat]) -> Value {
    Value::Array(xs.iter().map(rat).collect())
}

pub fn poly(p: &Polynomial) -> Value {
    rats(p.coeffs())
}

/// Complex coefficients as `"a+bi"` tokens.
pub fn complex_poly(p: &ComplexPolynomial) -> Value {
    Value::Array(
        format_complex(p)
            .split(' ')
            .map(|t| Value::String(t.to_string()))
            .collect(),
    )
}

pub fn rational(r: &RationalFunction) -> Value {
    json!({ "num": poly(r.num()), "den": poly(r.den()) })
}

pub fn axis(a: &AxisRoots) -> Value {
    let mut m = Map::new();
    m.insert("count".into(), int(a.count()));
    m.insert("description".into(), Value::String(a.to_string()));
    match a {
        AxisRoots::ConjugatePair { omega_squared } => {
            m.insert("omega_squared".into(), rat(omega_squared));
        }
        AxisRoots::Real { factor, .. } => {
            m.insert("factor".into(), poly(factor));
        }
        _ => {}
    }
    Value::Object(m)
}

pub fn distribution(d: &RootDistribution) -> Value {
    json!({
        "n_minus": int(d.n_minus),
        "n_plus": int(d.n_plus),
        "axis": axis(&d.axis),
    })
}

pub fn stability(c: &StabilityClass) -> Value {
    json!({
        "stable": c.kind == crate::routh::StabilityKind::Stable,
        "verdict": c.kind.to_string(),
        "h": rats(&c.routh.h),
        "completed": c.routh.completed,
        "negated": c.negated,
        "distribution": distribution(&c.distribution),
    })
}

pub fn hurwitz(r: &HurwitzReport, dist: Option<&RootDistribution>) -> Value {
    json!({
        "minors": rats(&r.minors),
        "stable": r.stable,
        "quotient_sequence": r.quotient_sequence.as_deref().map(rats),
        "distribution": dist.map(distribution),
    })
}

pub fn hankel(h: &HankelSummary) -> Value {
    json!({
        "ratio": rational(&h.ratio),
        "polynomial_part": poly(&h.markov.polynomial_part),
        "markov": rats(&h.markov.s),
        "minors": rats(&h.minors),
        "shifted_minors": rats(&h.shifted_minors),
        "rank": int(h.report.rank),
        "signature": int(h.report.signature),
        "proper": h.proper,
    })
}

pub fn cf(c: &CfSummary) -> Value {
    json!({
        "ratio": rational(&c.ratio),
        "quotients": Value::Array(c.cf.terms.iter().map(poly).collect()),
        "index": int(c.index),
        "proper": c.proper,
    })
}

pub fn winding(w: &WindingSummary) -> Value {
    json!({
        "delta_over_pi": int(w.delta_over_pi),
        "crossing_indices": Value::Array(w.crossing_indices.iter().map(int).collect()),
    })
}

pub fn threshold(t: &Threshold) -> Value {
    match t {
        Threshold::Finite(r) => rat(r),
        Threshold::Infinite => Value::String("infinite".into()),
    }
}

pub fn lorenz(a: &LorenzAnalysis) -> Value {
    let points: Vec<Value> = a
        .fixed_points
        .iter()
        .map(|p| {
            json!({
                "sign": int(p.sign),
                "x_squared": rat(&p.x_squared),
                "z": rat(&p.z),
                "display": p.to_string(),
            })
        })
        .collect();
    json!({
        "params": {
            "sigma": rat(&a.params.sigma),
            "r": rat(&a.params.r),
            "b": rat(&a.params.b),
        },
        "fixed_points": points,
        "origin": {
            "char_poly": poly(&a.origin.char_poly),
            "linear_factor": poly(&a.origin.linear_factor),
            "quadratic_factor": poly(&a.origin.quadratic_factor),
            "verdict": stability(&a.origin.verdict),
            "quadratic_verdict": stability(&a.origin.quadratic_verdict),
        },
        "nonzero": a.nonzero.as_ref().map(|n| json!({
            "char_poly": poly(&n.char_poly),
            "verdict": stability(&n.verdict),
        })),
        "r_star": threshold(&a.r_star),
    })
}

pub fn crosscheck(c: &CrossCheck) -> Value {
    let methods: Vec<Value> = c
        .results
        .iter()
        .map(|r| {
            let mut m = Map::new();
            m.insert("method".into(), Value::String(r.method.name().into()));
            match &r.outcome {
                MethodOutcome::Distribution(d) => {
                    m.insert("distribution".into(), distribution(d));
                }
                MethodOutcome::NotApplicable(why) => {
                    m.insert("not_applicable".into(), Value::String(why.clone()));
                }
            }
            if r.method == Method::Routh {
                m.insert("fallback".into(), Value::Bool(r.fallback));
            }
            Value::Object(m)
        })
        .collect();
    json!({ "agree": c.agree, "methods": methods })
}
