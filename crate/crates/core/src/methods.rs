//! One entry point per root-distribution method, and a cross-check that runs
//! all five.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hankel::half_plane_split_hankel;
use crate::hurwitz::distribution_from_minors;
use crate::poly::ComplexPolynomial;
use crate::roots::RootDistribution;
use crate::routh::{classify, StabilityKind};
use crate::stieltjes::half_plane_split_cf;
use crate::sturm::half_plane_split;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Routh,
    Hurwitz,
    Sturm,
    Hankel,
    Cf,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Routh,
        Method::Hurwitz,
        Method::Sturm,
        Method::Hankel,
        Method::Cf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Routh => "routh",
            Method::Hurwitz => "hurwitz",
            Method::Sturm => "sturm",
            Method::Hankel => "hankel",
            Method::Cf => "cf",
        }
    }

    /// Whether complex coefficients are accepted.
    pub fn handles_complex(self) -> bool {
        matches!(self, Method::Sturm | Method::Hankel | Method::Cf)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method {s:?}"))
    }
}

/// Root distribution of `p` by one method. Routh and Hurwitz need real
/// coefficients; Hurwitz refuses inputs with a vanishing minor.
pub fn distribution(p: &ComplexPolynomial, method: Method) -> Result<RootDistribution> {
    match p.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(_) => {}
    }
    let real = || p.to_real().ok_or(Error::ComplexCoefficients);
    match method {
        Method::Routh => Ok(classify(&real()?)?.distribution),
        Method::Hurwitz => distribution_from_minors(&real()?),
        Method::Sturm => Ok(half_plane_split(p)?.to_distribution()),
        Method::Hankel => Ok(half_plane_split_hankel(p)?.to_distribution()),
        Method::Cf => Ok(half_plane_split_cf(p)?.to_distribution()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MethodOutcome {
    Distribution(RootDistribution),
    /// The method does not apply to this input; the reason is attached.
    NotApplicable(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MethodResult {
    pub method: Method,
    pub outcome: MethodOutcome,
    /// Routh only: the scheme stopped early and the distribution came from
    /// the Sturm route.
    pub fallback: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub results: Vec<MethodResult>,
    /// All applicable methods report the same `(n_minus, n_plus, axis)`.
    pub agree: bool,
}

impl CrossCheck {
    /// The common counts, when the methods agree.
    pub fn consensus(&self) -> Option<(usize, usize, usize)> {
        if !self.agree {
            return None;
        }
        self.results.iter().find_map(|r| match &r.outcome {
            MethodOutcome::Distribution(d) => Some(d.counts()),
            MethodOutcome::NotApplicable(_) => None,
        })
    }
}

pub fn crosscheck(p: &ComplexPolynomial) -> Result<CrossCheck> {
    // input errors surface once, through the always-applicable method
    distribution(p, Method::Sturm)?;
    let results: Vec<MethodResult> = Method::ALL
        .into_iter()
        .map(|method| {
            let fallback = method == Method::Routh
                && p.to_real()
                    .and_then(|q| classify(&q).ok())
                    .is_some_and(|c| c.kind == StabilityKind::Inconclusive);
            let outcome = match distribution(p, method) {
                Ok(d) => MethodOutcome::Distribution(d),
                Err(e) => MethodOutcome::NotApplicable(e.to_string()),
            };
            MethodResult {
                method,
                outcome,
                fallback,
            }
        })
        .collect();
    let mut counts = results.iter().filter_map(|r| match &r.outcome {
        MethodOutcome::Distribution(d) => Some(d.counts()),
        MethodOutcome::NotApplicable(_) => None,
    });
    let first = counts.next();
    let agree = counts.all(|c| Some(c) == first);
    Ok(CrossCheck { results, agree })
}
