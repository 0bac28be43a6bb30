//! Hurwitz matrix, its leading principal minors, and the criteria built on
//! them (Hurwitz, sign variations of minor quotients, Liénard–Chipart), plus
//! the interleaved determinants `∇_{2k}` of a pair of polynomials.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{determinant, leading_principal_minors, Matrix};
use crate::poly::{Polynomial, Rat};
use crate::roots::{AxisRoots, RootDistribution};
use crate::sturm::sign_changes;

/// `n x n` matrix with entry `(i, j)` (1-based) equal to `a_{2j-i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HurwitzMatrix {
    pub entries: Matrix,
}

impl HurwitzMatrix {
    pub fn order(&self) -> usize {
        self.entries.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HurwitzReport {
    /// `η_1..η_n`.
    pub minors: Vec<Rat>,
    pub stable: bool,
    /// `a_0, η_1, η_2/η_1, ..., η_n/η_{n-1}`, present when no minor vanishes.
    pub quotient_sequence: Option<Vec<Rat>>,
}

/// `∇_2, ∇_4, ..., ∇_{2n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResultantMinors {
    pub values: Vec<Rat>,
}

fn normalized(p: &Polynomial) -> Result<Polynomial> {
    match p.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::ConstantPolynomial),
        Some(_) => Ok(p.with_positive_leading().0),
    }
}

pub fn hurwitz_matrix(p: &Polynomial) -> Result<HurwitzMatrix> {
    let p = normalized(p)?;
    let n = p.deg0();
    let entries = (1..=n as i64)
        .map(|i| {
            (1..=n as i64)
                .map(|j| {
                    let idx = 2 * j - i;
                    if idx < 0 {
                        Rat::zero()
                    } else {
                        p.a(idx as usize)
                    }
                })
                .collect()
        })
        .collect();
    Ok(HurwitzMatrix { entries })
}

/// Minors of the Hurwitz matrix of `p`, negated first if its leading
/// coefficient is negative.
pub fn leading_minors(p: &Polynomial) -> Result<HurwitzReport> {
    let p = normalized(p)?;
    let h = hurwitz_matrix(&p)?;
    let minors = leading_principal_minors(&h.entries);
    let stable = minors.iter().all(Signed::is_positive);
    let quotient_sequence = minors.iter().all(|m| !m.is_zero()).then(|| {
        let mut seq = vec![p.a(0), minors[0].clone()];
        seq.extend(minors.windows(2).map(|w| &w[1] / &w[0]));
        seq
    });
    Ok(HurwitzReport {
        minors,
        stable,
        quotient_sequence,
    })
}

/// Stable iff `η_k > 0` for every `k`.
pub fn hurwitz_stable(p: &Polynomial) -> Result<bool> {
    leading_minors(p).map(|r| r.stable)
}

/// `n_plus` is the number of sign variations in
/// `a_0, η_1, η_2/η_1, ..., η_n/η_{n-1}`, `n_minus` the number of retentions.
/// Refused when a minor vanishes.
pub fn distribution_from_minors(p: &Polynomial) -> Result<RootDistribution> {
    let report = leading_minors(p)?;
    let Some(seq) = report.quotient_sequence else {
        let index = report.minors.iter().position(Zero::is_zero).unwrap_or(0) + 1;
        return Err(Error::SomeMinorZero { index });
    };
    let n = seq.len() - 1;
    let v = sign_changes(&seq);
    Ok(RootDistribution {
        n_minus: n - v,
        n_plus: v,
        axis: AxisRoots::None,
    })
}

/// Positive coefficients plus `η_{n-1}, η_{n-3}, ... > 0`.
pub fn lienard_chipart(p: &Polynomial) -> Result<bool> {
    let p = normalized(p)?;
    if !p.coeffs().iter().all(Signed::is_positive) {
        return Ok(false);
    }
    let n = p.deg0();
    let minors = leading_minors(&p)?.minors;
    Ok((1..n)
        .rev()
        .step_by(2)
        .all(|k| minors[k - 1].is_positive()))
}

/// Interleaved `2k x 2k` determinants of Eq. (83) type for `num/den` with
/// `deg num <= deg den = n`, `k = 1..=n`:
///
/// ```text
/// | c_0 c_1 ... c_{2k-1} |
/// | b_0 b_1 ... b_{2k-1} |
/// |  0  c_0 ... c_{2k-2} |
/// |  0  b_0 ... b_{2k-2} |
/// |        ...           |
/// ```
///
/// with `c_j = b_j = 0` beyond `n`. The pair is used as given, not reduced.
pub fn resultant_minors(num: &Polynomial, den: &Polynomial) -> Result<ResultantMinors> {
    let n = den.degree().ok_or(Error::DivisionByZeroPolynomial)?;
    if num.degree().is_some_and(|d| d > n) {
        return Err(Error::Precondition("resultant minors need deg num <= deg den"));
    }
    let c = den.coeffs();
    let b: Vec<Rat> = (0..=n).map(|j| num.coeff_of_power(n - j)).collect();
    let at = |v: &[Rat], j: i64| -> Rat {
        if j < 0 || j as usize > n {
            Rat::zero()
        } else {
            v[j as usize].clone()
        }
    };
    let values = (1..=n)
        .map(|k| {
            let size = 2 * k;
            let m: Matrix = (0..size)
                .map(|row| {
                    let shift = (row / 2) as i64;
                    let src: &[Rat] = if row % 2 == 0 { c } else { &b };
                    (0..size as i64).map(|j| at(src, j - shift)).collect()
                })
                .collect();
            determinant(&m)
        })
        .collect();
    Ok(ResultantMinors { values })
}
