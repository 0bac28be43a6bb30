//! Plain-text polynomial format: whitespace-separated coefficients in
//! descending degree order. Each token is an integer, a fraction `p/q`, or a
//! Gaussian rational `a+bi` (`3i`, `-i`, `1/2-3/4i`).

use std::fmt::Write;

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{CRat, ComplexPolynomial, Polynomial, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedPolynomial {
    Real(Polynomial),
    Complex(ComplexPolynomial),
}

impl ParsedPolynomial {
    pub fn to_complex(&self) -> ComplexPolynomial {
        match self {
            ParsedPolynomial::Real(p) => p.to_complex(),
            ParsedPolynomial::Complex(p) => p.clone(),
        }
    }

    pub fn as_real(&self) -> Option<&Polynomial> {
        match self {
            ParsedPolynomial::Real(p) => Some(p),
            ParsedPolynomial::Complex(_) => None,
        }
    }

    pub fn degree(&self) -> Option<usize> {
        match self {
            ParsedPolynomial::Real(p) => p.degree(),
            ParsedPolynomial::Complex(p) => p.degree(),
        }
    }
}

fn parse_rat(s: &str) -> Option<Rat> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let valid = |t: &str, signed: bool| {
        let digits = if signed {
            t.strip_prefix(['-', '+']).unwrap_or(t)
        } else {
            t
        };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(n, true) || !valid(d, false) {
        return None;
    }
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rat::new(n, d))
}

fn parse_token(tok: &str) -> Option<CRat> {
    let Some(body) = tok.strip_suffix('i') else {
        return parse_rat(tok).map(|r| Complex::new(r, Rat::zero()));
    };
    // split "a+b" / "a-b" at the last sign that is not the first character
    let split = body
        .char_indices()
        .skip(1)
        .filter(|&(_, c)| c == '+' || c == '-')
        .map(|(i, _)| i)
        .last();
    let (re, im) = match split {
        Some(i) => (parse_rat(&body[..i])?, &body[i..]),
        None => (Rat::zero(), body),
    };
    let im = match im {
        "" | "+" => Rat::one(),
        "-" => -Rat::one(),
        s => parse_rat(s)?,
    };
    Some(Complex::new(re, im))
}

/// Parses the shared polynomial text format. The result is complex only
/// when some coefficient has a nonzero imaginary part.
pub fn parse_polynomial(text: &str) -> Result<ParsedPolynomial> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.is_empty() {
        return Err(Error::EmptyInput);
    }
    let coeffs = tokens
        .iter()
        .enumerate()
        .map(|(i, t)| {
            parse_token(t).ok_or_else(|| Error::MalformedToken {
                position: i + 1,
                token: t.to_string(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    if coeffs[0].is_zero() {
        return Err(Error::LeadingCoefficientZero);
    }
    if coeffs.iter().all(|c| c.im.is_zero()) {
        Ok(ParsedPolynomial::Real(Polynomial::new(
            coeffs.into_iter().map(|c| c.re).collect(),
        )))
    } else {
        Ok(ParsedPolynomial::Complex(ComplexPolynomial::new(coeffs)))
    }
}

/// Parses and requires real coefficients.
pub fn parse_real(text: &str) -> Result<Polynomial> {
    match parse_polynomial(text)? {
        ParsedPolynomial::Real(p) => Ok(p),
        ParsedPolynomial::Complex(_) => Err(Error::ComplexCoefficients),
    }
}

pub fn format_rat(x: &Rat) -> String {
    x.to_string()
}

fn format_crat(c: &CRat) -> String {
    if c.im.is_zero() {
        return format_rat(&c.re);
    }
    let mut s = String::new();
    if !c.re.is_zero() {
        s.push_str(&format_rat(&c.re));
        if c.im.is_positive() {
            s.push('+');
        }
    }
    if c.im.is_one() {
        s.push('i');
    } else if (-&c.im).is_one() {
        s.push_str("-i");
    } else {
        let _ = write!(s, "{}i", format_rat(&c.im));
    }
    s
}

pub fn format_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.coeffs().iter().map(format_rat).collect::<Vec<_>>().join(" ")
}

pub fn format_complex(p: &ComplexPolynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.coeffs().iter().map(format_crat).collect::<Vec<_>>().join(" ")
}

pub fn format_parsed(p: &ParsedPolynomial) -> String {
    match p {
        ParsedPolynomial::Real(p) => format_polynomial(p),
        ParsedPolynomial::Complex(p) => format_complex(p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ratio};
    use proptest::prelude::*;

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse_polynomial("1 2 3 1").unwrap(),
            ParsedPolynomial::Real(Polynomial::from_ints(&[1, 2, 3, 1]))
        );
        assert_eq!(
            parse_polynomial("1/2 0 -3/4").unwrap(),
            ParsedPolynomial::Real(Polynomial::new(vec![ratio(1, 2), rat(0), ratio(-3, 4)]))
        );
        assert_eq!(parse_polynomial("0 1 1"), Err(Error::LeadingCoefficientZero));
        assert_eq!(parse_polynomial("  "), Err(Error::EmptyInput));
        assert_eq!(
            parse_polynomial("1 x 2"),
            Err(Error::MalformedToken {
                position: 2,
                token: "x".into()
            })
        );
        assert!(parse_polynomial("1 2/0").is_err());
        assert!(parse_polynomial("1 --2").is_err());
    }

    #[test]
    fn parse_complex_tokens() {
        let parsed = parse_polynomial("1 1/2-3/4i -i 2i 3+i").unwrap();
        let ParsedPolynomial::Complex(p) = parsed else {
            panic!("expected complex")
        };
        let c = p.coeffs();
        assert_eq!(c[1], Complex::new(ratio(1, 2), ratio(-3, 4)));
        assert_eq!(c[2], Complex::new(rat(0), rat(-1)));
        assert_eq!(c[3], Complex::new(rat(0), rat(2)));
        assert_eq!(c[4], Complex::new(rat(3), rat(1)));
        // purely real complex tokens collapse to a real polynomial
        assert!(matches!(
            parse_polynomial("1 2+0i").unwrap(),
            ParsedPolynomial::Real(_)
        ));
    }

    proptest! {
        #[test]
        fn format_parse_round_trip(
            coeffs in prop::collection::vec(((-50i64..50, 1i64..9), (-5i64..5, 1i64..4)), 1..8),
            complex in any::<bool>(),
        ) {
            let mut cs: Vec<CRat> = coeffs
                .into_iter()
                .map(|((a, b), (c, d))| Complex::new(ratio(a, b), if complex { ratio(c, d) } else { rat(0) }))
                .collect();
            if cs[0].is_zero() {
                cs[0] = Complex::new(rat(1), rat(0));
            }
            let parsed = parse_polynomial(&format_complex(&ComplexPolynomial::new(cs))).unwrap();
            let again = parse_polynomial(&format_parsed(&parsed)).unwrap();
            prop_assert_eq!(again, parsed);
        }
    }
}
