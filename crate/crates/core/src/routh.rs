//! The Routh scheme over exact rationals and the case analysis that reads
//! root locations off its leading coefficients `h_0..h_n`.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Rat};
use crate::roots::{AxisRoots, RootDistribution};
use crate::sturm::{half_plane_split_real, sign_changes};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RouthOutcome {
    /// The routine's return value: every `h_1..h_{n-2}` was nonzero.
    pub completed: bool,
    /// `h_0..h_n`; trailing entries may be zero.
    pub h: Vec<Rat>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StabilityKind {
    Stable,
    UnstableOffAxis,
    SimpleZeroRoot,
    ConjugatePairOnAxis,
    DoubleZeroRoot,
    /// The scheme stopped early; the distribution comes from the Sturm route.
    Inconclusive,
}

impl fmt::Display for StabilityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StabilityKind::Stable => "stable",
            StabilityKind::UnstableOffAxis => "unstable, no roots on the imaginary axis",
            StabilityKind::SimpleZeroRoot => "one simple root on the imaginary axis at 0",
            StabilityKind::ConjugatePairOnAxis => "two simple roots on the imaginary axis",
            StabilityKind::DoubleZeroRoot => "one double root on the imaginary axis at 0",
            StabilityKind::Inconclusive => "inconclusive Routh scheme (Sturm fallback)",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityClass {
    pub kind: StabilityKind,
    pub distribution: RootDistribution,
    pub routh: RouthOutcome,
    /// The input had a negative leading coefficient and was negated first.
    pub negated: bool,
}

fn prepared(p: &Polynomial) -> Result<(Polynomial, bool)> {
    match p.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::ConstantPolynomial),
        Some(_) => Ok(p.with_positive_leading()),
    }
}

/// Runs the Routh routine on `a_0..a_n` in place.
///
/// ```text
/// k := 1
/// while k < n-1 and h[k] != 0:
///     c := h[k-1] / h[k];  k := k+1;  j := k
///     repeat h[j] := h[j] - c*h[j+1];  j := j+2  until j >= n
/// completed := (k = n-1)
/// ```
///
/// `h[n]` is never written. For `n = 1` the loop bound makes `k = n-1`
/// unreachable; the two-term chain `a_0 w, a_1` is regular, so the scheme is
/// reported as completed there.
pub fn routh_array(p: &Polynomial) -> Result<RouthOutcome> {
    let (p, _) = prepared(p)?;
    let n = p.deg0();
    let mut h = p.coeffs().to_vec();
    let mut k = 1;
    while k + 1 < n && !h[k].is_zero() {
        let c = &h[k - 1] / &h[k];
        k += 1;
        let mut j = k;
        loop {
            let t = &c * &h[j + 1];
            h[j] -= t;
            j += 2;
            if j >= n {
                break;
            }
        }
    }
    Ok(RouthOutcome {
        completed: k + 1 >= n,
        h,
    })
}

/// Classifies root locations from the Routh array.
pub fn classify(p: &Polynomial) -> Result<StabilityClass> {
    let (q, negated) = prepared(p)?;
    let routh = routh_array(&q)?;
    let n = q.deg0();
    let h = &routh.h;
    let dist = |n_plus: usize, axis: AxisRoots| RootDistribution {
        n_minus: n - n_plus - axis.count(),
        n_plus,
        axis,
    };
    let (kind, distribution) = if !routh.completed {
        let split = half_plane_split_real(&q)?;
        (StabilityKind::Inconclusive, split.to_distribution())
    } else {
        let last = &h[n];
        let second_last = &h[n - 1];
        if !second_last.is_zero() {
            if !last.is_zero() {
                // (a) regular chain
                let v = sign_changes(h);
                let kind = if v == 0 {
                    StabilityKind::Stable
                } else {
                    StabilityKind::UnstableOffAxis
                };
                (kind, dist(v, AxisRoots::None))
            } else {
                // (b) d(w) = w
                let v = sign_changes(&h[..n]);
                (StabilityKind::SimpleZeroRoot, dist(v, AxisRoots::SimpleZero))
            }
        } else {
            // n >= 2 here: for n = 1, h_{n-1} = a_0 > 0
            let v = sign_changes(&h[..n - 1]);
            let guard = &h[n - 2] * last;
            if guard.is_negative() {
                // (c) d(w) = w^2 - h_n/h_{n-2} has no real roots
                (StabilityKind::UnstableOffAxis, dist(v + 1, AxisRoots::None))
            } else if guard.is_positive() {
                // (d) d(w) = w^2 - w0^2
                let omega_squared = last / &h[n - 2];
                (
                    StabilityKind::ConjugatePairOnAxis,
                    dist(v, AxisRoots::ConjugatePair { omega_squared }),
                )
            } else {
                // (e) d(w) = w^2
                (StabilityKind::DoubleZeroRoot, dist(v, AxisRoots::DoubleZero))
            }
        }
    };
    Ok(StabilityClass {
        kind,
        distribution,
        routh,
        negated,
    })
}

/// Stable iff the scheme completes with all `h_k` strictly positive.
pub fn is_stable(p: &Polynomial) -> Result<bool> {
    let r = routh_array(p)?;
    Ok(r.completed && r.h.iter().all(Signed::is_positive))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ratio};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn array_examples() {
        let r = routh_array(&p(&[1, 2, 3, 1])).unwrap();
        assert!(r.completed);
        assert_eq!(r.h, vec![rat(1), rat(2), ratio(5, 2), rat(1)]);
        let r = routh_array(&p(&[1, 1, 1, 1])).unwrap();
        assert!(r.completed);
        assert_eq!(r.h, vec![rat(1), rat(1), rat(0), rat(1)]);
        // quartic with a_1 = 0 stops at once
        let r = routh_array(&p(&[1, 0, 2, 0, 1])).unwrap();
        assert!(!r.completed);
        assert_eq!(r.h, vec![rat(1), rat(0), rat(2), rat(0), rat(1)]);
    }

    #[test]
    fn quadratic_with_zero_middle_coefficient() {
        // for n = 2 the loop body never runs, so the routine reports
        // completion and case (d) recovers the pair +-i
        let r = routh_array(&p(&[1, 0, 1])).unwrap();
        assert!(r.completed);
        let c = classify(&p(&[1, 0, 1])).unwrap();
        assert_eq!(c.kind, StabilityKind::ConjugatePairOnAxis);
        assert_eq!(c.distribution.axis, AxisRoots::ConjugatePair { omega_squared: rat(1) });
        let c = classify(&p(&[1, 0, -1])).unwrap();
        assert_eq!(c.kind, StabilityKind::UnstableOffAxis);
        assert_eq!(c.distribution.counts(), (1, 1, 0));
    }

    #[test]
    fn last_entry_is_untouched() {
        for coeffs in [[3, 1, 4, 1, 5, 9], [2, 7, 1, 8, 2, 8]] {
            let r = routh_array(&p(&coeffs)).unwrap();
            assert_eq!(r.h[0], rat(coeffs[0]));
            assert_eq!(r.h[5], rat(coeffs[5]));
        }
    }

    #[test]
    fn classify_examples() {
        let c = classify(&p(&[1, 2, 3, 1])).unwrap();
        assert_eq!(c.kind, StabilityKind::Stable);
        assert_eq!(c.distribution.counts(), (3, 0, 0));
        let c = classify(&p(&[1, 1, 1, 1])).unwrap();
        assert_eq!(c.kind, StabilityKind::ConjugatePairOnAxis);
        assert_eq!(c.distribution.counts(), (1, 0, 2));
        assert_eq!(c.distribution.axis, AxisRoots::ConjugatePair { omega_squared: rat(1) });
        let c = classify(&p(&[1, 1, 0])).unwrap();
        assert_eq!(c.kind, StabilityKind::SimpleZeroRoot);
        assert_eq!(c.distribution.counts(), (1, 0, 1));
        // z^3 + z^2 = z^2 (z + 1)
        let c = classify(&p(&[1, 1, 0, 0])).unwrap();
        assert_eq!(c.kind, StabilityKind::DoubleZeroRoot);
        assert_eq!(c.distribution.counts(), (1, 0, 2));
        let c = classify(&p(&[1, 0])).unwrap();
        assert_eq!(c.kind, StabilityKind::SimpleZeroRoot);
    }

    #[test]
    fn inconclusive_falls_back_to_sturm() {
        // (z^2 + 1)^2 (z + 2)
        let f = &p(&[1, 0, 2, 0, 1]) * &p(&[1, 2]);
        let c = classify(&f).unwrap();
        assert!(!c.routh.completed);
        assert_eq!(c.kind, StabilityKind::Inconclusive);
        assert_eq!(c.distribution.counts(), (1, 0, 4));
    }

    #[test]
    fn stability_examples() {
        assert!(is_stable(&p(&[1, 1, 1])).unwrap());
        assert!(!is_stable(&p(&[1, 1, 1, 2])).unwrap());
        assert!(is_stable(&p(&[1, 1])).unwrap());
        assert!(!is_stable(&p(&[1, -1])).unwrap());
        // negative leading coefficient is normalized
        let c = classify(&p(&[-1, -2, -3, -1])).unwrap();
        assert!(c.negated);
        assert_eq!(c.kind, StabilityKind::Stable);
        assert_eq!(routh_array(&p(&[5])), Err(Error::ConstantPolynomial));
    }
}
