//! Markov parameters, Hankel forms and their inertia, Newton sums and the
//! Borchardt–Jacobi count of real roots versus conjugate pairs.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{leading_principal_minors, Matrix};
use crate::poly::{ComplexPolynomial, Polynomial, Rat, RationalFunction};
use crate::sturm::{assemble_split, real_roots_with_multiplicity_by, HalfPlaneSplit};

/// Laurent coefficients at infinity:
/// `R = polynomial_part + s_0/z + s_1/z^2 + ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkovSequence {
    pub s: Vec<Rat>,
    /// Its constant term is `s_{-1}`.
    pub polynomial_part: Polynomial,
}

impl MarkovSequence {
    pub fn s_minus_one(&self) -> Rat {
        self.polynomial_part.constant_term()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HankelReport {
    pub rank: usize,
    pub signature: i64,
    pub pos: usize,
    pub neg: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootTypeCount {
    pub distinct_real: usize,
    pub distinct_conjugate_pairs: usize,
}

/// Markov parameters `s_0..s_{count-1}` from the triangular system
/// `b_j = sum_{i<=j} c_{j-i} s_{i-1}`.
pub fn markov_parameters(r: &RationalFunction, count: usize) -> MarkovSequence {
    let (polynomial_part, proper) = r.split_polynomial_part();
    let den = proper.den().coeffs();
    let n = den.len() - 1;
    // b_1..b_n: numerator coefficients of z^{n-1}..z^0
    let b = |j: usize| -> Rat {
        if j == 0 || j > n {
            Rat::zero()
        } else {
            proper.num().coeff_of_power(n - j)
        }
    };
    let c = |m: usize| -> Rat {
        if m > n {
            Rat::zero()
        } else {
            den[m].clone()
        }
    };
    let mut s: Vec<Rat> = Vec::with_capacity(count);
    for j in 1..=count {
        let mut acc = b(j);
        for i in 1..j {
            acc -= c(j - i) * &s[i - 1];
        }
        s.push(acc / &den[0]);
    }
    MarkovSequence { s, polynomial_part }
}

/// The `n x n` matrix `[s_{i+j+shift}]`.
pub fn hankel_matrix(s: &[Rat], n: usize, shift: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| s[i + j + shift].clone()).collect())
        .collect()
}

/// Inertia of a symmetric matrix by congruence. A zero diagonal with a
/// nonzero off-diagonal entry `a_ij` is first fixed by adding row and column
/// `j` to row and column `i`, which puts `2 a_ij` on the diagonal.
pub fn symmetric_inertia(m: &[Vec<Rat>]) -> HankelReport {
    let mut a: Matrix = m.to_vec();
    let mut active: Vec<usize> = (0..a.len()).collect();
    let (mut pos, mut neg) = (0, 0);
    while !active.is_empty() {
        let pivot = match active.iter().copied().find(|&i| !a[i][i].is_zero()) {
            Some(i) => i,
            None => {
                let pair = active.iter().copied().find_map(|i| {
                    active
                        .iter()
                        .copied()
                        .find(|&j| !a[i][j].is_zero())
                        .map(|j| (i, j))
                });
                let Some((i, j)) = pair else { break };
                for k in 0..a.len() {
                    let v = a[j][k].clone();
                    a[i][k] += v;
                }
                for k in 0..a.len() {
                    let v = a[k][j].clone();
                    a[k][i] += v;
                }
                i
            }
        };
        let d = a[pivot][pivot].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        active.retain(|&k| k != pivot);
        for &k in &active {
            if a[k][pivot].is_zero() {
                continue;
            }
            let f = &a[k][pivot] / &d;
            for &l in &active {
                let t = &f * &a[pivot][l];
                a[k][l] -= t;
            }
            a[k][pivot] = Rat::zero();
        }
        for &k in &active {
            a[pivot][k] = Rat::zero();
        }
    }
    HankelReport {
        rank: pos + neg,
        signature: pos as i64 - neg as i64,
        pos,
        neg,
    }
}

/// Rank and signature of `[s_{i+j}]_{i,j<n}`.
pub fn hankel_rank_signature(s: &MarkovSequence, n: usize) -> Result<HankelReport> {
    if n > 0 && s.s.len() < 2 * n - 1 {
        return Err(Error::Precondition("need at least 2n-1 Markov parameters"));
    }
    Ok(symmetric_inertia(&hankel_matrix(&s.s, n, 0)))
}

/// Leading principal minors of `[s_{i+j}]` (`shift = 0`) or `[s_{i+j+1}]`
/// (`shift = 1`), sizes `1..=n`.
pub fn hankel_minors(s: &MarkovSequence, n: usize, shift: usize) -> Result<Vec<Rat>> {
    if n > 0 && s.s.len() < 2 * n - 1 + shift {
        return Err(Error::Precondition("not enough Markov parameters"));
    }
    Ok(leading_principal_minors(&hankel_matrix(&s.s, n, shift)))
}

/// `num/den` with `deg num < deg den = n` maps the upper half-plane into
/// itself iff the `n` leading Hankel minors are all positive.
pub fn is_proper_via_hankel(num: &Polynomial, den: &Polynomial) -> Result<bool> {
    let n = den.degree().ok_or(Error::DivisionByZeroPolynomial)?;
    if n == 0 || num.degree().is_some_and(|d| d >= n) {
        return Err(Error::Precondition("properness needs deg num < deg den"));
    }
    if num.is_zero() || !num.gcd_monic(den)?.is_constant() {
        return Err(Error::Reducible);
    }
    let r = RationalFunction::new(num.clone(), den.clone())?;
    let s = markov_parameters(&r, 2 * n - 1);
    Ok(hankel_minors(&s, n, 0)?.iter().all(Signed::is_positive))
}

/// Power sums `s_j = sum λ^j` over the roots with multiplicity, as the
/// Markov parameters of `f'/f`.
pub fn newton_sums(f: &Polynomial, count: usize) -> Result<MarkovSequence> {
    match f.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::ConstantPolynomial),
        Some(_) => {
            let r = RationalFunction::new(f.derivative(), f.clone())?;
            Ok(markov_parameters(&r, count))
        }
    }
}

/// Distinct real roots and distinct conjugate pairs from the inertia of the
/// `n x n` Newton-sum Hankel matrix: a real root adds a positive square, a
/// pair adds one positive and one negative square.
pub fn borchardt_jacobi(f: &Polynomial) -> Result<RootTypeCount> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let s = newton_sums(f, 2 * n - 1)?;
    let h = hankel_rank_signature(&s, n)?;
    Ok(RootTypeCount {
        distinct_real: h.pos - h.neg,
        distinct_conjugate_pairs: h.neg,
    })
}

/// Line index of a reduced fraction as a Hankel signature.
pub fn hankel_index(r: &RationalFunction) -> i64 {
    let n = r.den().deg0();
    if n == 0 {
        return 0;
    }
    let s = markov_parameters(r, 2 * n - 1);
    symmetric_inertia(&hankel_matrix(&s.s, n, 0)).signature
}

fn distinct_real_bj(f: &Polynomial) -> usize {
    if f.is_constant() {
        0
    } else {
        borchardt_jacobi(f).expect("nonconstant").distinct_real
    }
}

/// Half-plane split with every index and root count taken from Hankel
/// signatures.
pub fn half_plane_split_hankel(p: &ComplexPolynomial) -> Result<HalfPlaneSplit> {
    if p.degree().is_none() {
        return Err(Error::ZeroPolynomial);
    }
    let split = p.imaginary_axis_split()?;
    Ok(assemble_split(&split, hankel_index, |g| {
        real_roots_with_multiplicity_by(g, distinct_real_bj)
    }))
}

/// Markov parameters and Hankel minors of the reduced split ratio `f1/f0`
/// of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelSummary {
    pub ratio: RationalFunction,
    pub markov: MarkovSequence,
    /// `det [s_{i+j}]_{i,j<k}`, `k = 1..=n`.
    pub minors: Vec<Rat>,
    /// `det [s_{i+j+1}]_{i,j<k}`, `k = 1..=n`.
    pub shifted_minors: Vec<Rat>,
    pub report: HankelReport,
    /// All `minors` positive and `n = deg p`.
    pub proper: bool,
}

pub fn hankel_summary(p: &ComplexPolynomial) -> Result<HankelSummary> {
    let deg = match p.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(d) => d,
    };
    let ratio = p.imaginary_axis_split()?.ratio();
    let n = ratio.den().deg0();
    let markov = markov_parameters(&ratio, 2 * n);
    let minors = hankel_minors(&markov, n, 0)?;
    let shifted_minors = hankel_minors(&markov, n, 1)?;
    let report = hankel_rank_signature(&markov, n)?;
    let proper = n == deg && minors.iter().all(Signed::is_positive);
    Ok(HankelSummary {
        ratio,
        markov,
        minors,
        shifted_minors,
        report,
        proper,
    })
}

/// Newton identity residual `a_0 s_k + a_1 s_{k-1} + ... + a_{k-1} s_1 + k a_k` for `1 <= k <= n`.
pub fn newton_identity_residual(f: &Polynomial, s: &[Rat], k: usize) -> Rat {
    let mut acc = Rat::from_integer(k.into()) * f.a(k);
    for i in 0..k {
        acc += f.a(i) * &s[k - i];
    }
    acc
}
