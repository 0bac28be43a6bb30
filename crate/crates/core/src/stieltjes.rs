//! Stieltjes continued fractions, the index formula they carry, partial
//! fractions over simple rational poles, the Hermite–Biehler test and
//! fractional-linear changes of variable.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::hankel::borchardt_jacobi;
use crate::poly::{ComplexPolynomial, Polynomial, Rat, RationalFunction};
use crate::sturm::{
    assemble_split, cauchy_index_line, index_at_infinity, log_derivative,
    real_roots_with_multiplicity_by, HalfPlaneSplit, SturmChain,
};

/// `R = 1/(d_1 - 1/(d_2 - ... - 1/d_m))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuedFraction {
    pub terms: Vec<Polynomial>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFractions {
    pub poles: Vec<Rat>,
    pub residues: Vec<Rat>,
}

impl PartialFractions {
    /// `sum residue_k / (z - pole_k)` as one fraction.
    pub fn to_rational(&self) -> RationalFunction {
        let mut num = Polynomial::zero();
        let mut den = Polynomial::one();
        for (w, a) in self.poles.iter().zip(&self.residues) {
            let lin = Polynomial::linear_root(w);
            num = &(&num * &lin) + &den.scale(a);
            den = &den * &lin;
        }
        RationalFunction::new(num, den).expect("den is nonzero")
    }
}

/// `w -> (alpha w + beta) / (gamma w + delta)` with determinant one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mobius {
    alpha: Rat,
    beta: Rat,
    gamma: Rat,
    delta: Rat,
}

impl Mobius {
    pub fn new(alpha: Rat, beta: Rat, gamma: Rat, delta: Rat) -> Result<Self> {
        let det = &alpha * &delta - &beta * &gamma;
        if !det.is_one() {
            return Err(Error::NotUnimodular(det.to_string()));
        }
        Ok(Mobius {
            alpha,
            beta,
            gamma,
            delta,
        })
    }

    pub fn identity() -> Self {
        Mobius::new(Rat::one(), Rat::zero(), Rat::zero(), Rat::one()).expect("det 1")
    }

    /// `w -> w + d`.
    pub fn shift(d: Rat) -> Self {
        Mobius::new(Rat::one(), d, Rat::zero(), Rat::one()).expect("det 1")
    }

    /// `w -> -1/w`.
    pub fn inversion() -> Self {
        Mobius::new(Rat::zero(), -Rat::one(), Rat::one(), Rat::zero()).expect("det 1")
    }

    pub fn entries(&self) -> [&Rat; 4] {
        [&self.alpha, &self.beta, &self.gamma, &self.delta]
    }
}

/// Quotients of the sign-flipped Euclidean algorithm on `(den, num)`.
pub fn cf_expand(r: &RationalFunction) -> Result<ContinuedFraction> {
    if !r.is_strictly_proper() {
        return Err(Error::Precondition("continued fraction needs deg num < deg den"));
    }
    if r.is_zero() {
        return Ok(ContinuedFraction { terms: Vec::new() });
    }
    let chain = SturmChain::new(r.den(), r.num())?;
    Ok(ContinuedFraction {
        terms: chain.quotients(),
    })
}

/// Rebuilds `R` from the back: `R_m = 0`, `R_{k-1} = 1/(d_k - R_k)`.
pub fn reconstruct(cf: &ContinuedFraction) -> RationalFunction {
    let mut acc = RationalFunction::polynomial(Polynomial::zero());
    for d in cf.terms.iter().rev() {
        let (num, den) = (acc.num().clone(), acc.den().clone());
        let inner = RationalFunction::new(&(d * &den) - &num, den).expect("den is nonzero");
        acc = inner.recip().expect("d_k - R_k is nonzero at infinity");
    }
    acc
}

/// `-sum Ind_inf(d_k)`: each odd-degree quotient contributes the sign of its
/// leading coefficient.
pub fn index_from_cf(cf: &ContinuedFraction) -> i64 {
    -cf.terms
        .iter()
        .map(|d| index_at_infinity(&RationalFunction::polynomial(d.clone())))
        .sum::<i64>()
}

/// Every quotient linear with positive slope, and `deg den` of them.
pub fn is_proper_via_cf(r: &RationalFunction) -> Result<bool> {
    let cf = cf_expand(r)?;
    Ok(cf.terms.len() == r.den().deg0()
        && cf
            .terms
            .iter()
            .all(|d| d.degree() == Some(1) && d.coeffs()[0].is_positive()))
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            out.push(n / d);
        }
        d += 1;
    }
    out
}

/// Distinct rational roots of `f` when it splits into distinct rational
/// linear factors; `None` otherwise.
pub fn rational_roots(f: &Polynomial) -> Option<Vec<Rat>> {
    let n = f.degree()?;
    if !f.gcd_monic(&f.derivative()).ok()?.is_constant() {
        return None;
    }
    let mut roots = BTreeSet::new();
    let mut g = f.clone();
    if g.constant_term().is_zero() {
        roots.insert(Rat::zero());
        g = g.div_exact(&Polynomial::from_ints(&[1, 0])).ok()?;
    }
    if g.degree()? > 0 {
        let lcm = g
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = g
            .coeffs()
            .iter()
            .map(|c| (c * Rat::from_integer(lcm.clone())).to_integer())
            .collect();
        const LIMIT: u64 = 1_000_000_000_000;
        let lead = ints[0].abs().to_u64().filter(|&v| v <= LIMIT)?;
        let tail = ints.last()?.abs().to_u64().filter(|&v| v <= LIMIT)?;
        for p in divisors(tail) {
            for q in divisors(lead) {
                for s in [1i64, -1] {
                    let cand = Rat::new(BigInt::from(s) * BigInt::from(p), BigInt::from(q));
                    if g.eval(&cand).is_zero() {
                        roots.insert(cand);
                    }
                }
            }
        }
    }
    (roots.len() == n).then(|| roots.into_iter().collect())
}

/// `R = sum alpha_k / (z - w_k)` for a strictly proper `R` whose
/// denominator has distinct rational roots; `alpha_k = num(w_k)/den'(w_k)`.
pub fn partial_fractions_simple(r: &RationalFunction) -> Result<PartialFractions> {
    if !r.is_strictly_proper() {
        return Err(Error::Precondition("partial fractions need deg num < deg den"));
    }
    let poles = rational_roots(r.den()).ok_or(Error::UnsupportedDenominator)?;
    let dd = r.den().derivative();
    let residues = poles.iter().map(|w| r.num().eval(w) / dd.eval(w)).collect();
    Ok(PartialFractions { poles, residues })
}

/// Stability through the split pair: `f0` has `n` real simple roots, `f1`
/// has `n - 1`, they interlace (line index of `f1/f0` equals `n`), and
/// `f1' f0 - f0' f1 < 0` at a point beyond every root of `f0 f1`.
pub fn hermite_biehler(p: &Polynomial) -> Result<bool> {
    let n = match p.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(n) => n,
    };
    let (p, _) = p.with_positive_leading();
    let split = p.imaginary_axis_split()?;
    let (f0, f1) = (&split.f0, &split.f1);
    if borchardt_jacobi(f0)?.distinct_real != n {
        return Ok(false);
    }
    if f1.degree() != Some(n - 1) {
        return Ok(false);
    }
    if n >= 2 && borchardt_jacobi(f1)?.distinct_real != n - 1 {
        return Ok(false);
    }
    if cauchy_index_line(&split.ratio()) != n as i64 {
        return Ok(false);
    }
    let w = (f0 * f1).cauchy_root_bound()? + Rat::one();
    let wronskian = f1.derivative().eval(&w) * f0.eval(&w) - f0.derivative().eval(&w) * f1.eval(&w);
    Ok(wronskian.is_negative())
}

/// `(alpha num + beta den) / (gamma num + delta den)`.
pub fn mobius_apply(m: &Mobius, r: &RationalFunction) -> Result<RationalFunction> {
    if r.is_constant() {
        return Err(Error::DegenerateImage);
    }
    let num = &r.num().scale(&m.alpha) + &r.den().scale(&m.beta);
    let den = &r.num().scale(&m.gamma) + &r.den().scale(&m.delta);
    RationalFunction::new(num, den)
}

/// Continued fraction of the reduced split ratio `f1/f0` of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfSummary {
    pub ratio: RationalFunction,
    pub cf: ContinuedFraction,
    pub index: i64,
    /// Every quotient linear with positive slope, `deg p` of them.
    pub proper: bool,
}

pub fn cf_summary(p: &ComplexPolynomial) -> Result<CfSummary> {
    let deg = match p.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(d) => d,
    };
    let ratio = p.imaginary_axis_split()?.ratio();
    let cf = cf_expand(&ratio)?;
    let index = index_from_cf(&cf);
    let proper = ratio.den().deg0() == deg && is_proper_via_cf(&ratio)?;
    Ok(CfSummary {
        ratio,
        cf,
        index,
        proper,
    })
}

/// Line index of a strictly proper fraction from its continued fraction.
pub fn cf_index(r: &RationalFunction) -> i64 {
    index_from_cf(&cf_expand(r).expect("strictly proper"))
}

fn distinct_real_cf(f: &Polynomial) -> usize {
    if f.is_constant() {
        0
    } else {
        cf_index(&log_derivative(f)) as usize
    }
}

/// Half-plane split with indices and root counts read off continued
/// fractions.
pub fn half_plane_split_cf(p: &ComplexPolynomial) -> Result<HalfPlaneSplit> {
    if p.degree().is_none() {
        return Err(Error::ZeroPolynomial);
    }
    let split = p.imaginary_axis_split()?;
    Ok(assemble_split(&split, cf_index, |g| {
        real_roots_with_multiplicity_by(g, distinct_real_cf)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hankel::is_proper_via_hankel;
    use crate::poly::{rat, ratio};
    use crate::routh;
    use crate::sturm::{half_plane_split, projective_index};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(p(num), p(den)).unwrap()
    }

    fn lin(c: Rat) -> Polynomial {
        Polynomial::new(vec![c, Rat::zero()])
    }

    #[test]
    fn expansion_examples() {
        let cf = cf_expand(&rf(&[2, 0, -1], &[1, 0, -3, 0])).unwrap();
        assert_eq!(cf.terms, vec![lin(ratio(1, 2)), lin(ratio(4, 5)), lin(ratio(5, 2))]);
        assert_eq!(index_from_cf(&cf), 3);
        assert_eq!(cf_expand(&rf(&[1], &[1, 0])).unwrap().terms, vec![p(&[1, 0])]);
        let cf = cf_expand(&rf(&[1], &[1, 0, 1])).unwrap();
        assert_eq!(cf.terms, vec![p(&[1, 0, 1])]);
        assert_eq!(index_from_cf(&cf), 0);
        assert_eq!(index_from_cf(&ContinuedFraction { terms: vec![p(&[-1, 0])] }), -1);
        assert!(cf_expand(&rf(&[1, 0], &[1, 1])).is_err());
    }

    #[test]
    fn properness_examples() {
        assert!(is_proper_via_cf(&rf(&[2, 0, -1], &[1, 0, -3, 0])).unwrap());
        assert!(!is_proper_via_cf(&rf(&[1], &[1, 0, 1])).unwrap());
        let r = rf(&[1, 0, -1], &[1, 0, 0, 0]);
        assert!(!is_proper_via_cf(&r).unwrap());
        // near 0, R ~ -1/w^3 jumps from +inf to -inf
        assert_eq!(cauchy_index_line(&r), -1);
    }

    #[test]
    fn partial_fraction_examples() {
        let pf = partial_fractions_simple(&rf(&[1], &[1, 0, -1])).unwrap();
        assert_eq!(pf.poles, vec![rat(-1), rat(1)]);
        assert_eq!(pf.residues, vec![ratio(-1, 2), ratio(1, 2)]);
        let f = p(&[1, -3, 2]);
        let pf = partial_fractions_simple(&log_derivative(&f)).unwrap();
        assert_eq!(pf.poles, vec![rat(1), rat(2)]);
        assert_eq!(pf.residues, vec![rat(1), rat(1)]);
        let r = rf(&[2, 0], &[1, 0, -4]);
        let pf = partial_fractions_simple(&r).unwrap();
        assert_eq!(pf.poles, vec![rat(-2), rat(2)]);
        assert_eq!(pf.residues, vec![rat(1), rat(1)]);
        assert_eq!(pf.to_rational(), r);
        // non-rational, repeated
        assert_eq!(partial_fractions_simple(&rf(&[1], &[1, 0, -2])), Err(Error::UnsupportedDenominator));
        assert_eq!(partial_fractions_simple(&rf(&[1], &[1, -2, 1])), Err(Error::UnsupportedDenominator));
        // rational non-integer roots
        let den = &p(&[2, -1]) * &p(&[3, 2]);
        let pf = partial_fractions_simple(&RationalFunction::new(p(&[1]), den).unwrap()).unwrap();
        assert_eq!(pf.poles, vec![ratio(-2, 3), ratio(1, 2)]);
    }

    #[test]
    fn hermite_biehler_examples() {
        assert!(hermite_biehler(&p(&[1, 2, 3, 1])).unwrap());
        assert!(!hermite_biehler(&p(&[1, 1, 1, 1])).unwrap());
        assert!(hermite_biehler(&p(&[1, 1])).unwrap());
        assert!(!hermite_biehler(&p(&[1, -1])).unwrap());
        assert!(!hermite_biehler(&p(&[1, 1, 1, 2])).unwrap());
    }

    #[test]
    fn mobius_examples() {
        let r = rf(&[1, 2], &[1, 0, -3]);
        assert_eq!(mobius_apply(&Mobius::identity(), &r).unwrap(), r);
        let inv = mobius_apply(&Mobius::inversion(), &r).unwrap();
        assert_eq!(inv, RationalFunction::new(-p(&[1, 0, -3]), p(&[1, 2])).unwrap());
        assert_eq!(projective_index(&inv), projective_index(&r));
        let shifted = mobius_apply(&Mobius::shift(rat(5)), &r).unwrap();
        assert_eq!(shifted.den(), r.den());
        assert!(Mobius::new(rat(2), rat(0), rat(0), rat(1)).is_err());
        assert_eq!(
            mobius_apply(&Mobius::identity(), &RationalFunction::constant(rat(3))),
            Err(Error::DegenerateImage)
        );
    }

    #[test]
    fn residues_positive_for_stable_split() {
        // (z+1)(z+4)(z+2)^2 and friends have f0 with rational roots
        for f in [p(&[1, 5, 4]), &p(&[1, 5, 4]) * &p(&[1, 4, 4]), &p(&[1, 1]) * &p(&[1, 5, 4])] {
            assert!(routh::is_stable(&f).unwrap());
            let split = f.imaginary_axis_split().unwrap();
            match partial_fractions_simple(&split.ratio()) {
                Ok(pf) => assert!(pf.residues.iter().all(Signed::is_positive), "{f}"),
                Err(e) => assert_eq!(e, Error::UnsupportedDenominator),
            }
        }
        let split = p(&[1, 5, 4]).imaginary_axis_split().unwrap();
        let pf = partial_fractions_simple(&split.ratio()).unwrap();
        assert_eq!(pf.poles, vec![rat(-2), rat(2)]);
    }

    fn small_poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(-5i64..=5, 1..=max_deg + 1).prop_map(|mut v| {
            if v[0] == 0 {
                v[0] = 1;
            }
            Polynomial::from_ints(&v)
        })
    }

    fn proper_fraction() -> impl Strategy<Value = RationalFunction> {
        (small_poly(7), small_poly(8)).prop_filter_map("needs deg num < deg den", |(a, b)| {
            let (num, den) = if a.deg0() < b.deg0() { (a, b) } else { (b, a) };
            if num.deg0() >= den.deg0() {
                return None;
            }
            Some(RationalFunction::new(num, den).unwrap())
        })
    }

    fn mobius() -> impl Strategy<Value = Mobius> {
        (1i64..=4, -4i64..=4, -4i64..=4, any::<bool>()).prop_map(|(a, b, c, flip)| {
            let (a, b, c) = (rat(a), rat(b), rat(c));
            let d = (Rat::one() + &b * &c) / &a;
            if flip {
                Mobius::new(d, c, b, a).unwrap()
            } else {
                Mobius::new(a, b, c, d).unwrap()
            }
        })
    }

    fn stable_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((1i64..=6, 1i64..=6, any::<bool>()), 1..=4).prop_map(|fs| {
            fs.into_iter().fold(Polynomial::one(), |acc, (b, c, quad)| {
                let f = if quad { p(&[1, b, c]) } else { p(&[1, b]) };
                &acc * &f
            })
        })
    }

    proptest! {
        #[test]
        fn round_trip(r in proper_fraction()) {
            let cf = cf_expand(&r).unwrap();
            prop_assert_eq!(reconstruct(&cf), r.clone());
            let total: usize = cf.terms.iter().map(|d| d.deg0()).sum();
            prop_assert_eq!(total, r.den().deg0());
        }

        #[test]
        fn index_formula(r in proper_fraction()) {
            prop_assert_eq!(index_from_cf(&cf_expand(&r).unwrap()), projective_index(&r));
        }

        #[test]
        fn properness_tests_agree(r in proper_fraction()) {
            prop_assume!(!r.is_zero());
            let n = r.den().deg0() as i64;
            let by_index = cauchy_index_line(&r) == n;
            prop_assert_eq!(is_proper_via_cf(&r).unwrap(), by_index);
            prop_assert_eq!(is_proper_via_hankel(r.num(), r.den()).unwrap(), by_index);
        }

        #[test]
        fn projective_invariance(r in proper_fraction(), m in mobius(), c in -5i64..=5) {
            prop_assume!(!r.is_constant());
            let idx = projective_index(&r);
            prop_assert_eq!(projective_index(&mobius_apply(&m, &r).unwrap()), idx);
            prop_assert_eq!(projective_index(&r.add_constant(&rat(c))), idx);
            prop_assert_eq!(projective_index(&r.recip().unwrap().neg()), idx);
        }

        #[test]
        fn hermite_biehler_matches_routh(f in small_poly(7)) {
            prop_assume!(f.deg0() >= 1);
            prop_assert_eq!(hermite_biehler(&f).unwrap(), routh::is_stable(&f).unwrap());
        }

        #[test]
        fn stable_split_quotients_are_odd_monomials(f in stable_poly()) {
            prop_assert!(routh::is_stable(&f).unwrap());
            let cf = cf_expand(&f.imaginary_axis_split().unwrap().ratio()).unwrap();
            for d in &cf.terms {
                prop_assert_eq!(d.degree(), Some(1));
                prop_assert!(d.coeffs()[1].is_zero() && d.coeffs()[0].is_positive());
            }
        }

        #[test]
        fn cf_split_matches_sturm(f in small_poly(7)) {
            prop_assume!(f.deg0() >= 1);
            let q = f.to_complex();
            prop_assert_eq!(half_plane_split_cf(&q).unwrap(), half_plane_split(&q).unwrap());
        }
    }
}
