//! Exact rational scalars and dense univariate polynomials.
//!
//! Coefficients are stored in descending degree order, `a_0` first, so
//! `a_0 z^n + a_1 z^{n-1} + ... + a_n` is `[a_0, a_1, ..., a_n]`. The zero
//! polynomial is the empty sequence; its degree is reported as `None`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rat = BigRational;

/// Gaussian rational used for complex coefficients.
pub type CRat = Complex<Rat>;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Sign of a rational as -1, 0 or 1.
pub fn sign(x: &Rat) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

pub fn to_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        if x.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Dense real polynomial over the rationals.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rat>,
}

impl Polynomial {
    /// Builds a polynomial from descending coefficients, stripping leading zeros.
    pub fn new(coeffs: Vec<Rat>) -> Self {
        let first = coeffs.iter().position(|c| !c.is_zero());
        match first {
            Some(0) => Polynomial { coeffs },
            Some(i) => Polynomial {
                coeffs: coeffs[i..].to_vec(),
            },
            None => Polynomial::zero(),
        }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[0] = c;
        Self::new(coeffs)
    }

    /// The monic linear factor `x - r`.
    pub fn linear_root(r: &Rat) -> Self {
        Self::new(vec![Rat::one(), -r.clone()])
    }

    /// Builds from ascending coefficients (`c_0 + c_1 x + ...`).
    pub fn from_ascending(mut coeffs: Vec<Rat>) -> Self {
        coeffs.reverse();
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0. Only for callers that
    /// have already excluded the zero polynomial or do not care.
    pub fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    /// Descending coefficients `a_0, ..., a_n`.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.first()
    }

    /// Coefficient of `x^power`, zero when out of range.
    pub fn coeff_of_power(&self, power: usize) -> Rat {
        match self.degree() {
            Some(n) if power <= n => self.coeffs[n - power].clone(),
            _ => Rat::zero(),
        }
    }

    /// `a_k` in the descending convention, zero when `k > n`.
    pub fn a(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    /// Ascending coefficient vector `c_0, c_1, ..., c_n`.
    pub fn ascending(&self) -> Vec<Rat> {
        self.coeffs.iter().rev().cloned().collect()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().fold(0.0, |acc, c| acc * x + to_f64(c))
    }

    pub fn derivative(&self) -> Self {
        let n = match self.degree() {
            Some(n) if n > 0 => n,
            _ => return Polynomial::zero(),
        };
        Polynomial::new(
            self.coeffs[..n]
                .iter()
                .enumerate()
                .map(|(i, c)| c * rat((n - i) as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => Polynomial::zero(),
        }
    }

    /// Negates when the leading coefficient is negative. Root locations are
    /// unaffected.
    pub fn with_positive_leading(&self) -> (Self, bool) {
        match self.leading() {
            Some(lc) if lc.is_negative() => (-self, true),
            _ => (self.clone(), false),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Polynomial::one(), |acc, _| &acc * self)
    }

    /// `p(q(x))`
    pub fn compose(&self, q: &Polynomial) -> Self {
        self.coeffs
            .iter()
            .fold(Polynomial::zero(), |acc, c| &(&acc * q) + &Polynomial::constant(c.clone()))
    }

    /// Long division `self = d * q + r` with `deg r < deg d`.
    pub fn divmod(&self, d: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let dn = d.degree().ok_or(Error::DivisionByZeroPolynomial)?;
        let n = match self.degree() {
            Some(n) if n >= dn => n,
            _ => return Ok((Polynomial::zero(), self.clone())),
        };
        let lc_inv = d.coeffs[0].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); n - dn + 1];
        for i in 0..=(n - dn) {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] * &lc_inv;
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] = &rem[i + j] - &q * dc;
            }
            quot[i] = q;
        }
        let r = Polynomial::new(rem[n - dn + 1..].to_vec());
        Ok((Polynomial::new(quot), r))
    }

    pub fn rem(&self, d: &Polynomial) -> Result<Polynomial> {
        self.divmod(d).map(|(_, r)| r)
    }

    /// Exact quotient; panics in debug builds when the remainder is nonzero.
    pub fn div_exact(&self, d: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.divmod(d)?;
        debug_assert!(r.is_zero(), "inexact polynomial division");
        Ok(q)
    }

    /// Monic gcd by the Euclidean remainder sequence.
    pub fn gcd_monic(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothInputsZero);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            // keep remainders monic so coefficient growth stays bounded
            b = r.monic();
        }
        Ok(a.monic())
    }

    /// `x^n p(1/x)`; requires a nonzero constant term.
    pub fn reverse(&self) -> Result<Polynomial> {
        if self.is_zero() || self.constant_term().is_zero() {
            return Err(Error::ConstantTermZero);
        }
        Ok(Polynomial::new(self.coeffs.iter().rev().cloned().collect()))
    }

    /// Cauchy bound `1 + max_k |a_k / a_0|`; every root has smaller modulus.
    pub fn cauchy_root_bound(&self) -> Result<Rat> {
        match self.degree() {
            None => Err(Error::ZeroPolynomial),
            Some(0) => Err(Error::ConstantPolynomial),
            Some(_) => {
                let lc = &self.coeffs[0];
                let m = self.coeffs[1..]
                    .iter()
                    .map(|c| (c / lc).abs())
                    .max()
                    .unwrap_or_else(Rat::zero);
                Ok(Rat::one() + m)
            }
        }
    }

    /// `p(z) = g0(z^2) + z g1(z^2)`.
    pub fn even_odd_split(&self) -> Result<EvenOddSplit> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let asc = self.ascending();
        let even = asc.iter().step_by(2).cloned().collect();
        let odd = asc.iter().skip(1).step_by(2).cloned().collect();
        Ok(EvenOddSplit {
            g0: Polynomial::from_ascending(even),
            g1: Polynomial::from_ascending(odd),
        })
    }

    /// Real polynomial viewed as a complex one.
    pub fn to_complex(&self) -> ComplexPolynomial {
        ComplexPolynomial::new(
            self.coeffs
                .iter()
                .map(|c| Complex::new(c.clone(), Rat::zero()))
                .collect(),
        )
    }

    /// Imaginary-axis split of a real polynomial; see
    /// [`ComplexPolynomial::imaginary_axis_split`].
    pub fn imaginary_axis_split(&self) -> Result<ImaginaryAxisSplit> {
        self.to_complex().imaginary_axis_split()
    }

    /// Writes the polynomial in `var`, e.g. `z^3 + 2z^2 - 1/2`.
    pub fn display_in<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        PolyDisplay { p: self, var }
    }
}

struct PolyDisplay<'a> {
    p: &'a Polynomial,
    var: &'a str,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = match self.p.degree() {
            None => return write!(f, "0"),
            Some(n) => n,
        };
        let mut first = true;
        for (i, c) in self.p.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = n - i;
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let abs = c.abs();
            let show_coeff = power == 0 || !abs.is_one();
            if show_coeff {
                if abs.is_integer() || power == 0 {
                    write!(f, "{abs}")?;
                } else {
                    write!(f, "({abs})")?;
                }
            }
            match power {
                0 => {}
                1 => write!(f, "{}", self.var)?,
                _ => write!(f, "{}^{}", self.var, power)?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in("z"))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (a, b) = (self.ascending(), rhs.ascending());
        let len = a.len().max(b.len());
        let sum = (0..len)
            .map(|i| {
                let x = a.get(i).cloned().unwrap_or_else(Rat::zero);
                match b.get(i) {
                    Some(y) => x + y,
                    None => x,
                }
            })
            .collect();
        Polynomial::from_ascending(sum)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// `p(z) = g0(z^2) + z g1(z^2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenOddSplit {
    pub g0: Polynomial,
    pub g1: Polynomial,
}

/// The real pair with `i^{-n} p(i w) = f0(w) - i f1(w)` and `deg f1 < deg f0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImaginaryAxisSplit {
    pub f0: Polynomial,
    pub f1: Polynomial,
}

impl ImaginaryAxisSplit {
    /// `gcd(f0, f1)`; its real roots are exactly the `w` with `p(iw) = 0`.
    pub fn axis_gcd(&self) -> Polynomial {
        self.f0
            .gcd_monic(&self.f1)
            .expect("f0 is nonzero by construction")
    }

    pub fn ratio(&self) -> RationalFunction {
        RationalFunction::new(self.f1.clone(), self.f0.clone())
            .expect("f0 is nonzero by construction")
    }
}

/// Dense polynomial with Gaussian-rational coefficients, descending order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ComplexPolynomial {
    coeffs: Vec<CRat>,
}

impl ComplexPolynomial {
    pub fn new(coeffs: Vec<CRat>) -> Self {
        let first = coeffs.iter().position(|c| !c.is_zero());
        match first {
            Some(i) => ComplexPolynomial {
                coeffs: coeffs[i..].to_vec(),
            },
            None => ComplexPolynomial { coeffs: Vec::new() },
        }
    }

    pub fn coeffs(&self) -> &[CRat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(|c| c.im.is_zero())
    }

    /// The real polynomial, when every imaginary part vanishes.
    pub fn to_real(&self) -> Option<Polynomial> {
        self.is_real()
            .then(|| Polynomial::new(self.coeffs.iter().map(|c| c.re.clone()).collect()))
    }

    pub fn eval(&self, z: &CRat) -> CRat {
        self.coeffs
            .iter()
            .fold(Complex::new(Rat::zero(), Rat::zero()), |acc, c| acc * z + c)
    }

    /// Divides through by a leading coefficient that is not a positive real,
    /// so that `a_0 > 0` as the half-plane formulas assume. Real input with a
    /// negative leading coefficient is negated instead.
    pub fn normalized(&self) -> Result<ComplexPolynomial> {
        let lc = self.coeffs.first().ok_or(Error::ZeroPolynomial)?;
        if lc.im.is_zero() && lc.re.is_positive() {
            return Ok(self.clone());
        }
        if lc.im.is_zero() {
            return Ok(ComplexPolynomial::new(
                self.coeffs.iter().map(|c| -c).collect(),
            ));
        }
        let inv = lc.inv();
        Ok(ComplexPolynomial::new(
            self.coeffs.iter().map(|c| c * &inv).collect(),
        ))
    }

    /// Splits `i^{-n} p(i w) = f0(w) - i f1(w)` into real polynomials.
    ///
    /// The coefficient of `w^{n-k}` is `a_k i^{-k}`; for real input this gives
    /// `f0 = a_0 w^n - a_2 w^{n-2} + ...` and `f1 = a_1 w^{n-1} - a_3 w^{n-3} + ...`.
    pub fn imaginary_axis_split(&self) -> Result<ImaginaryAxisSplit> {
        let p = self.normalized()?;
        let mut f0 = Vec::with_capacity(p.coeffs.len());
        let mut f1 = Vec::with_capacity(p.coeffs.len());
        for (k, a) in p.coeffs.iter().enumerate() {
            // a * i^{-k}
            let rotated = match k % 4 {
                0 => a.clone(),
                1 => Complex::new(a.im.clone(), -a.re.clone()),
                2 => -a.clone(),
                _ => Complex::new(-a.im.clone(), a.re.clone()),
            };
            f0.push(rotated.re);
            f1.push(-rotated.im);
        }
        Ok(ImaginaryAxisSplit {
            f0: Polynomial::new(f0),
            f1: Polynomial::new(f1),
        })
    }
}

impl From<&Polynomial> for ComplexPolynomial {
    fn from(p: &Polynomial) -> Self {
        p.to_complex()
    }
}

/// `num / den` in lowest terms with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZeroPolynomial);
        }
        if num.is_zero() {
            return Ok(RationalFunction {
                num,
                den: Polynomial::one(),
            });
        }
        let g = num.gcd_monic(&den)?;
        let num = num.div_exact(&g)?;
        let den = den.div_exact(&g)?;
        let lc = den.leading().expect("nonzero").recip();
        Ok(RationalFunction {
            num: num.scale(&lc),
            den: den.scale(&lc),
        })
    }

    pub fn polynomial(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        Self::polynomial(Polynomial::constant(c))
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// `deg num < deg den`, i.e. the function vanishes at infinity.
    pub fn is_strictly_proper(&self) -> bool {
        match self.num.degree() {
            None => true,
            Some(d) => d < self.den.deg0(),
        }
    }

    /// Splits into polynomial part and a remainder vanishing at infinity.
    pub fn split_polynomial_part(&self) -> (Polynomial, RationalFunction) {
        let (q, r) = self.num.divmod(&self.den).expect("den is nonzero");
        (
            q,
            RationalFunction {
                num: r,
                den: self.den.clone(),
            },
        )
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn add_constant(&self, c: &Rat) -> Self {
        RationalFunction::new(&self.num + &self.den.scale(c), self.den.clone())
            .expect("den is nonzero")
    }

    /// `1 / R`, undefined for `R = 0`.
    pub fn recip(&self) -> Result<Self> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn derivative(&self) -> Self {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RationalFunction::new(num, &self.den * &self.den).expect("den is nonzero")
    }

    /// Evaluates away from poles; `None` at a pole.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num.display_in("w"))
        } else {
            write!(f, "({}) / ({})", self.num.display_in("w"), self.den.display_in("w"))
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}
