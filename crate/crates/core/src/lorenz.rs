//! Linear stability of the Lorenz system
//!
//! ```text
//! x' = sigma (y - x),  y' = r x - y - x z,  z' = x y - b z
//! ```
//!
//! at its fixed points, with exact rational parameters.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Rat};
use crate::routh::{classify, StabilityClass};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LorenzParams {
    pub sigma: Rat,
    pub r: Rat,
    pub b: Rat,
}

impl LorenzParams {
    pub fn new(sigma: Rat, r: Rat, b: Rat) -> Result<Self> {
        if !(sigma.is_positive() && r.is_positive() && b.is_positive()) {
            return Err(Error::NonPositiveParameter);
        }
        Ok(LorenzParams { sigma, r, b })
    }
}

/// `x = y = sign * sqrt(x_squared)`, `z` exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPoint {
    pub sign: i8,
    pub x_squared: Rat,
    pub z: Rat,
}

impl fmt::Display for FixedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            0 => write!(f, "(0, 0, 0)"),
            s => {
                let pm = if s > 0 { "" } else { "-" };
                write!(
                    f,
                    "({pm}sqrt({x}), {pm}sqrt({x}), {z})",
                    x = self.x_squared,
                    z = self.z
                )
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Threshold {
    Finite(Rat),
    Infinite,
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Threshold::Finite(r) => write!(f, "{r}"),
            Threshold::Infinite => write!(f, "infinite"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OriginAnalysis {
    /// `(l + b)(l^2 + (sigma + 1) l + sigma (1 - r))`.
    pub char_poly: Polynomial,
    pub linear_factor: Polynomial,
    pub quadratic_factor: Polynomial,
    pub verdict: StabilityClass,
    pub quadratic_verdict: StabilityClass,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonzeroAnalysis {
    /// Shared by both nonzero fixed points.
    pub char_poly: Polynomial,
    pub verdict: StabilityClass,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LorenzAnalysis {
    pub params: LorenzParams,
    pub fixed_points: Vec<FixedPoint>,
    pub origin: OriginAnalysis,
    /// Present iff `r > 1`.
    pub nonzero: Option<NonzeroAnalysis>,
    pub r_star: Threshold,
}

/// `det(l I - J)` at a fixed point with `x = y` and `x^2 = x_squared`:
/// `(l+s)(l+1)(l+b) + s x^2 + s (z - r)(l + b) + x^2 (l + s)`.
pub fn characteristic_polynomial(params: &LorenzParams, x_squared: &Rat, z: &Rat) -> Polynomial {
    let LorenzParams { sigma, r, b } = params;
    let lin = |c: &Rat| Polynomial::new(vec![Rat::one(), c.clone()]);
    let cubic = &(&lin(sigma) * &lin(&Rat::one())) * &lin(b);
    let c = Polynomial::constant(sigma * x_squared);
    let d = lin(b).scale(&(sigma * (z - r)));
    let e = lin(sigma).scale(x_squared);
    &(&(&cubic + &c) + &d) + &e
}

/// `sigma (sigma + b + 3) / (sigma - b - 1)` when `sigma > b + 1`.
pub fn r_star(params: &LorenzParams) -> Threshold {
    let LorenzParams { sigma, b, .. } = params;
    let gap = sigma - b - Rat::one();
    if gap.is_positive() {
        Threshold::Finite(sigma * (sigma + b + Rat::from_integer(3.into())) / gap)
    } else {
        Threshold::Infinite
    }
}

pub fn analyze(params: &LorenzParams) -> Result<LorenzAnalysis> {
    let params = LorenzParams::new(params.sigma.clone(), params.r.clone(), params.b.clone())?;
    let LorenzParams { sigma, r, b } = &params;
    let one = Rat::one();

    let linear_factor = Polynomial::new(vec![one.clone(), b.clone()]);
    let quadratic_factor =
        Polynomial::new(vec![one.clone(), sigma + &one, sigma * (&one - r)]);
    let char_poly = characteristic_polynomial(&params, &Rat::zero(), &Rat::zero());
    debug_assert_eq!(char_poly, &linear_factor * &quadratic_factor);
    let origin = OriginAnalysis {
        verdict: classify(&char_poly)?,
        quadratic_verdict: classify(&quadratic_factor)?,
        char_poly,
        linear_factor,
        quadratic_factor,
    };

    let mut fixed_points = vec![FixedPoint {
        sign: 0,
        x_squared: Rat::zero(),
        z: Rat::zero(),
    }];
    let nonzero = if r > &one {
        let x_squared = b * (r - &one);
        let z = r - &one;
        for sign in [1, -1] {
            fixed_points.push(FixedPoint {
                sign,
                x_squared: x_squared.clone(),
                z: z.clone(),
            });
        }
        let char_poly = characteristic_polynomial(&params, &x_squared, &z);
        Some(NonzeroAnalysis {
            verdict: classify(&char_poly)?,
            char_poly,
        })
    } else {
        None
    };

    Ok(LorenzAnalysis {
        r_star: r_star(&params),
        params,
        fixed_points,
        origin,
        nonzero,
    })
}
