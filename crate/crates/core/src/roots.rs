//! Root distribution relative to the imaginary axis.

use std::fmt;

use crate::poly::{Polynomial, Rat};

/// Imaginary-axis roots found by a method.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxisRoots {
    None,
    /// One simple root at 0.
    SimpleZero,
    /// Simple roots at `±iw` with `w^2 = omega_squared`.
    ConjugatePair { omega_squared: Rat },
    /// One double root at 0.
    DoubleZero,
    /// General case: the roots are `iw` for the real roots `w` of `factor`,
    /// `count` of them with multiplicity. `factor` may also carry nonreal
    /// roots, which belong to off-axis roots of the polynomial.
    Real { factor: Polynomial, count: usize },
}

impl AxisRoots {
    pub fn count(&self) -> usize {
        match self {
            AxisRoots::None => 0,
            AxisRoots::SimpleZero => 1,
            AxisRoots::ConjugatePair { .. } | AxisRoots::DoubleZero => 2,
            AxisRoots::Real { count, .. } => *count,
        }
    }
}

impl fmt::Display for AxisRoots {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxisRoots::None => write!(f, "none"),
            AxisRoots::SimpleZero => write!(f, "simple root at 0"),
            AxisRoots::ConjugatePair { omega_squared } => {
                write!(f, "pair ±iw with w^2 = {omega_squared}")
            }
            AxisRoots::DoubleZero => write!(f, "double root at 0"),
            AxisRoots::Real { count: 0, .. } => write!(f, "none"),
            AxisRoots::Real { factor, count } => write!(
                f,
                "{count} root(s) iw, w a real root of {}",
                factor.display_in("w")
            ),
        }
    }
}

/// `n_minus` roots with negative real part, `n_plus` with positive real part,
/// and the imaginary-axis roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDistribution {
    pub n_minus: usize,
    pub n_plus: usize,
    pub axis: AxisRoots,
}

impl RootDistribution {
    /// `(n_minus, n_plus, axis roots with multiplicity)`, the part every
    /// method must agree on.
    pub fn counts(&self) -> (usize, usize, usize) {
        (self.n_minus, self.n_plus, self.axis.count())
    }

    pub fn degree(&self) -> usize {
        self.n_minus + self.n_plus + self.axis.count()
    }

    pub fn is_stable(&self) -> bool {
        self.n_plus == 0 && self.axis.count() == 0
    }
}

impl fmt::Display for RootDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n- = {}, n+ = {}, axis: {}",
            self.n_minus, self.n_plus, self.axis
        )
    }
}
