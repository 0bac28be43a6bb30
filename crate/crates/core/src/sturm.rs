//! Sturm chains, Cauchy indices and the half-plane root split.
//!
//! A chain is built from a pair `(f0, f1)` by the Euclidean algorithm with
//! the remainder's sign flipped, `f_{k-1} = d_k f_k - f_{k+1}`. The Cauchy
//! index of `f1/f0` on `(a, b)` is `V(a+0) - V(b-0)`, where `V` counts sign
//! changes along the chain. One-sided limits are exact: the sign of `f` just
//! right of `a` is the sign of the first derivative of `f` not vanishing at
//! `a`.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{sign, ComplexPolynomial, ImaginaryAxisSplit, Polynomial, Rat, RationalFunction};
use crate::roots::{AxisRoots, RootDistribution};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    polys: Vec<Polynomial>,
    leading: Vec<Rat>,
}

impl SturmChain {
    /// Runs `f_{k-1} = d_k f_k - f_{k+1}` until the remainder vanishes.
    pub fn new(f0: &Polynomial, f1: &Polynomial) -> Result<Self> {
        let n0 = f0.degree().ok_or(Error::ZeroPolynomial)?;
        if let Some(n1) = f1.degree() {
            if n1 >= n0 {
                return Err(Error::Precondition("Sturm chain needs deg f1 < deg f0"));
            }
        }
        let mut polys = vec![f0.clone()];
        if !f1.is_zero() {
            polys.push(f1.clone());
            loop {
                let k = polys.len() - 1;
                let r = polys[k - 1].rem(&polys[k])?;
                if r.is_zero() {
                    break;
                }
                polys.push(-r);
            }
        }
        let leading = polys
            .iter()
            .map(|p| p.leading().cloned().expect("chain members are nonzero"))
            .collect();
        Ok(SturmChain { polys, leading })
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    /// Leading coefficients `h_0, h_1, ...` of the chain members.
    pub fn leading(&self) -> &[Rat] {
        &self.leading
    }

    /// The last member, a constant multiple of `gcd(f0, f1)`.
    pub fn last(&self) -> &Polynomial {
        self.polys.last().expect("chain is nonempty")
    }

    /// Partial quotients `d_k` with `f_{k-1} = d_k f_k - f_{k+1}`.
    pub fn quotients(&self) -> Vec<Polynomial> {
        self.polys
            .windows(2)
            .map(|w| w[0].divmod(&w[1]).expect("nonzero").0)
            .collect()
    }

    /// `deg f_k = n - k` for every `k = 0..=n`.
    pub fn is_regular(&self) -> bool {
        let n = self.polys[0].deg0();
        self.polys.len() == n + 1
            && self
                .polys
                .iter()
                .enumerate()
                .all(|(k, p)| p.degree() == Some(n - k))
    }

    fn variations(&self, signs: impl Iterator<Item = i32>) -> usize {
        sign_changes_of_signs(signs)
    }

    /// `V(x+0)`.
    pub fn variations_right_of(&self, x: &Rat) -> usize {
        self.variations(self.polys.iter().map(|p| sign_right_of(p, x)))
    }

    /// `V(x-0)`.
    pub fn variations_left_of(&self, x: &Rat) -> usize {
        self.variations(self.polys.iter().map(|p| sign_left_of(p, x)))
    }

    /// `V(+inf)`, from the signs of the leading terms.
    pub fn variations_at_pos_inf(&self) -> usize {
        self.variations(self.leading.iter().map(sign))
    }

    /// `V(-inf)`.
    pub fn variations_at_neg_inf(&self) -> usize {
        self.variations(self.polys.iter().zip(&self.leading).map(|(p, h)| {
            let s = sign(h);
            if p.deg0() % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }
}

/// Number of sign changes, skipping zeros.
pub fn sign_changes(values: &[Rat]) -> usize {
    sign_changes_of_signs(values.iter().map(sign))
}

fn sign_changes_of_signs(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Sign of `f` on `(x, x + eps)` for small `eps`.
pub fn sign_right_of(f: &Polynomial, x: &Rat) -> i32 {
    let mut g = f.clone();
    while !g.is_zero() {
        let s = sign(&g.eval(x));
        if s != 0 {
            return s;
        }
        g = g.derivative();
    }
    0
}

/// Sign of `f` on `(x - eps, x)` for small `eps`.
pub fn sign_left_of(f: &Polynomial, x: &Rat) -> i32 {
    let mut g = f.clone();
    let mut order = 0;
    while !g.is_zero() {
        let s = sign(&g.eval(x));
        if s != 0 {
            return if order % 2 == 0 { s } else { -s };
        }
        g = g.derivative();
        order += 1;
    }
    0
}

/// The finite-pole part of `R`: same poles, vanishing at infinity.
fn proper_part(r: &RationalFunction) -> RationalFunction {
    r.split_polynomial_part().1
}

/// Cauchy index of `R` on the open interval `(a, b)`.
pub fn cauchy_index_interval(r: &RationalFunction, a: &Rat, b: &Rat) -> Result<i64> {
    if a >= b {
        return Err(Error::Precondition("interval needs a < b"));
    }
    for x in [a, b] {
        if r.den().eval(x).is_zero() {
            return Err(Error::BoundaryPole(x.to_string()));
        }
    }
    let proper = proper_part(r);
    let chain = SturmChain::new(proper.den(), proper.num())?;
    Ok(chain.variations_right_of(a) as i64 - chain.variations_left_of(b) as i64)
}

/// Cauchy index of `R` over the whole real line.
pub fn cauchy_index_line(r: &RationalFunction) -> i64 {
    let proper = proper_part(r);
    let chain = SturmChain::new(proper.den(), proper.num()).expect("denominator is nonzero");
    chain.variations_at_neg_inf() as i64 - chain.variations_at_pos_inf() as i64
}

/// `n - 2 v(h_0, ..., h_n)` for a regular chain; `None` otherwise.
pub fn regular_chain_index(chain: &SturmChain) -> Option<i64> {
    chain.is_regular().then(|| {
        let n = chain.polys()[0].deg0() as i64;
        n - 2 * sign_changes(chain.leading()) as i64
    })
}

/// Index of `R` at the point at infinity: nonzero only for a pole of odd
/// order there, where it is `-sign` of the leading ratio.
pub fn index_at_infinity(r: &RationalFunction) -> i64 {
    let (Some(dn), Some(dd)) = (r.num().degree(), r.den().degree()) else {
        return 0;
    };
    if dn <= dd || (dn - dd) % 2 == 0 {
        return 0;
    }
    let c = r.num().leading().expect("nonzero") / r.den().leading().expect("nonzero");
    -(sign(&c) as i64)
}

/// Index on the projective line: line index plus index at infinity.
pub fn projective_index(r: &RationalFunction) -> i64 {
    cauchy_index_line(r) + index_at_infinity(r)
}

/// Logarithmic derivative `f'/f`.
pub fn log_derivative(f: &Polynomial) -> RationalFunction {
    RationalFunction::new(f.derivative(), f.clone()).expect("f is nonzero")
}

/// Number of distinct real roots, as the line index of `f'/f`.
pub fn distinct_real_roots(f: &Polynomial) -> usize {
    if f.is_constant() {
        return 0;
    }
    cauchy_index_line(&log_derivative(f)) as usize
}

/// Distinct roots of `f` in `(a, b)`; the endpoints must not be roots.
pub fn distinct_roots_in(f: &Polynomial, a: &Rat, b: &Rat) -> Result<usize> {
    if f.is_constant() {
        return Ok(0);
    }
    cauchy_index_interval(&log_derivative(f), a, b).map(|i| i as usize)
}

/// Real roots counted with multiplicity, given a counter of distinct real
/// roots. Peels `g_{j+1} = gcd(g_j, g_j')`: a root of multiplicity `m`
/// survives in `g_1..g_m`.
pub fn real_roots_with_multiplicity_by(
    g: &Polynomial,
    distinct: impl Fn(&Polynomial) -> usize,
) -> usize {
    let mut total = 0;
    let mut cur = g.clone();
    while !cur.is_constant() {
        total += distinct(&cur);
        cur = cur.gcd_monic(&cur.derivative()).expect("nonzero");
    }
    total
}

pub fn real_roots_with_multiplicity(g: &Polynomial) -> usize {
    real_roots_with_multiplicity_by(g, distinct_real_roots)
}

/// Disjoint open intervals with rational endpoints, each holding exactly one
/// distinct real root of `f`, in increasing order.
pub fn isolate_real_roots(f: &Polynomial) -> Vec<(Rat, Rat)> {
    if f.is_constant() {
        return Vec::new();
    }
    let sqfree = f.div_exact(&f.gcd_monic(&f.derivative()).expect("nonzero")).expect("divides");
    let chain = SturmChain::new(&sqfree, &sqfree.derivative()).expect("nonzero");
    let count = |a: &Rat, b: &Rat| chain.variations_right_of(a) - chain.variations_right_of(b);
    let bound = sqfree.cauchy_root_bound().expect("degree >= 1");
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((a, b)) = stack.pop() {
        match count(&a, &b) {
            0 => {}
            1 => out.push((a, b)),
            _ => {
                let width = &b - &a;
                let mid = (2..)
                    .map(|j: i64| &a + &width / Rat::from_integer(j.into()))
                    .find(|m| !sqfree.eval(m).is_zero())
                    .expect("finitely many roots");
                stack.push((a, mid.clone()));
                stack.push((mid, b));
            }
        }
    }
    out.sort();
    out
}

/// Half-plane root counts plus the imaginary-axis gcd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfPlaneSplit {
    pub n_minus: usize,
    pub n_plus: usize,
    /// Monic `gcd(f0, f1)`; its real roots `w` give the axis roots `iw`.
    pub imaginary_axis_gcd: Polynomial,
    /// Imaginary-axis roots with multiplicity.
    pub axis_root_count: usize,
}

impl HalfPlaneSplit {
    pub fn to_distribution(&self) -> RootDistribution {
        RootDistribution {
            n_minus: self.n_minus,
            n_plus: self.n_plus,
            axis: describe_axis(&self.imaginary_axis_gcd, self.axis_root_count),
        }
    }
}

/// Names the common shapes of the axis factor.
pub(crate) fn describe_axis(g: &Polynomial, count: usize) -> AxisRoots {
    if count == 0 {
        return AxisRoots::None;
    }
    let c = g.coeffs();
    match (g.degree(), count) {
        (Some(1), 1) if c[1].is_zero() => AxisRoots::SimpleZero,
        (Some(2), 2) if c[1].is_zero() && c[2].is_zero() => AxisRoots::DoubleZero,
        (Some(2), 2) if c[1].is_zero() && c[2].is_negative() => AxisRoots::ConjugatePair {
            omega_squared: -c[2].clone(),
        },
        _ => AxisRoots::Real {
            factor: g.clone(),
            count,
        },
    }
}

/// Index-to-count bookkeeping shared by every index-based method.
///
/// With `g = gcd(f0, f1)` of degree `l`, the reduced pair describes a
/// polynomial of degree `n - l` without axis roots, whose index gives
/// `n_minus - n_plus`. Real roots of `g` are axis roots; its nonreal roots
/// come in conjugate pairs `w, conj(w)` that map to `iw` and `i conj(w)`, one
/// root on each side of the axis.
pub(crate) fn assemble_split(
    split: &ImaginaryAxisSplit,
    index_of: impl Fn(&RationalFunction) -> i64,
    real_roots_of: impl Fn(&Polynomial) -> usize,
) -> HalfPlaneSplit {
    let n = split.f0.deg0();
    let g = split.axis_gcd();
    let l = g.deg0();
    let reduced = split.ratio();
    let index = index_of(&reduced);
    let m = (n - l) as i64;
    debug_assert!((m + index) % 2 == 0 && index.abs() <= m);
    let axis = real_roots_of(&g);
    let pairs = (l - axis) / 2;
    HalfPlaneSplit {
        n_minus: ((m + index) / 2) as usize + pairs,
        n_plus: ((m - index) / 2) as usize + pairs,
        imaginary_axis_gcd: g,
        axis_root_count: axis,
    }
}

/// Root counts of `p` left of, right of and on the imaginary axis, from the
/// Cauchy index of `f1/f0`.
pub fn half_plane_split(p: &ComplexPolynomial) -> Result<HalfPlaneSplit> {
    if p.degree().is_none() {
        return Err(Error::ZeroPolynomial);
    }
    let split = p.imaginary_axis_split()?;
    Ok(assemble_split(
        &split,
        cauchy_index_line,
        real_roots_with_multiplicity,
    ))
}

/// Convenience for real input.
pub fn half_plane_split_real(p: &Polynomial) -> Result<HalfPlaneSplit> {
    half_plane_split(&p.to_complex())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ratio};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(p(num), p(den)).unwrap()
    }

    #[test]
    fn chain_examples() {
        let chain = SturmChain::new(&p(&[1, 0, -3, 0]), &p(&[2, 0, -1])).unwrap();
        assert_eq!(chain.leading(), &[rat(1), rat(2), ratio(5, 2), rat(1)]);
        assert!(chain.is_regular());
        let chain = SturmChain::new(&p(&[1, 0, -1]), &Polynomial::zero()).unwrap();
        assert_eq!(chain.polys(), &[p(&[1, 0, -1])]);
        let f = p(&[1, -3, 2]);
        let chain = SturmChain::new(&f, &f.derivative()).unwrap();
        assert_eq!(chain.polys().len(), 3);
        assert!(chain.last().is_constant());
    }

    #[test]
    fn chain_satisfies_recurrence() {
        let chain = SturmChain::new(&p(&[1, 0, -7, 0, 3, 0]), &p(&[2, 0, 5, 0, -1])).unwrap();
        let q = chain.quotients();
        for k in 1..chain.polys().len() - 1 {
            let lhs = &chain.polys()[k - 1];
            let rhs = &(&q[k - 1] * &chain.polys()[k]) - &chain.polys()[k + 1];
            assert_eq!(lhs, &rhs);
        }
    }

    #[test]
    fn sign_change_examples() {
        assert_eq!(sign_changes(&[rat(1), rat(2), ratio(5, 2), rat(1)]), 0);
        assert_eq!(sign_changes(&[rat(1), rat(1), rat(-1), rat(2)]), 2);
        assert_eq!(sign_changes(&[rat(0), rat(0)]), 0);
    }

    #[test]
    fn one_sided_signs() {
        // x^2 at 0: positive on both sides; x^3: negative on the left
        assert_eq!(sign_right_of(&p(&[1, 0, 0]), &rat(0)), 1);
        assert_eq!(sign_left_of(&p(&[1, 0, 0]), &rat(0)), 1);
        assert_eq!(sign_left_of(&p(&[1, 0, 0, 0]), &rat(0)), -1);
        assert_eq!(sign_right_of(&p(&[-1, 1]), &rat(1)), -1);
    }

    #[test]
    fn interval_index_examples() {
        assert_eq!(cauchy_index_interval(&rf(&[1], &[1, 0]), &rat(-1), &rat(1)).unwrap(), 1);
        let f = p(&[1, -3, 2]);
        assert_eq!(
            cauchy_index_interval(&log_derivative(&f), &rat(0), &rat(3)).unwrap(),
            2
        );
        assert_eq!(cauchy_index_interval(&rf(&[1], &[1, 0, 0]), &rat(-1), &rat(1)).unwrap(), 0);
        assert!(matches!(
            cauchy_index_interval(&rf(&[1], &[1, 0]), &rat(0), &rat(1)),
            Err(Error::BoundaryPole(_))
        ));
        assert!(cauchy_index_interval(&rf(&[1], &[1, 0]), &rat(1), &rat(1)).is_err());
    }

    #[test]
    fn line_index_examples() {
        assert_eq!(cauchy_index_line(&rf(&[2, 0, -1], &[1, 0, -3, 0])), 3);
        assert_eq!(cauchy_index_line(&rf(&[1], &[1, 0])), 1);
        assert_eq!(cauchy_index_line(&rf(&[1, 0], &[1, 0, 1])), 0);
        let chain = SturmChain::new(&p(&[1, 0, -3, 0]), &p(&[2, 0, -1])).unwrap();
        assert_eq!(regular_chain_index(&chain), Some(3));
    }

    #[test]
    fn infinity_index_examples() {
        let poly = |c: &[i64]| RationalFunction::polynomial(p(c));
        assert_eq!(index_at_infinity(&poly(&[1, 0])), -1);
        assert_eq!(index_at_infinity(&poly(&[1, 0, 0])), 0);
        assert_eq!(index_at_infinity(&rf(&[1], &[1, 0])), 0);
        assert_eq!(projective_index(&poly(&[1, 0])), -1);
        assert_eq!(projective_index(&rf(&[-1], &[1, 0])), -1);
        assert_eq!(projective_index(&RationalFunction::constant(rat(4))), 0);
    }

    #[test]
    fn half_plane_examples() {
        let s = half_plane_split_real(&p(&[1, 2, 3, 1])).unwrap();
        assert_eq!((s.n_minus, s.n_plus, s.axis_root_count), (3, 0, 0));
        // (z^2 + 1)(z + 1)
        let s = half_plane_split_real(&p(&[1, 1, 1, 1])).unwrap();
        assert_eq!((s.n_minus, s.n_plus, s.axis_root_count), (1, 0, 2));
        assert_eq!(s.imaginary_axis_gcd, p(&[1, 0, -1]));
        assert_eq!(
            s.to_distribution().axis,
            AxisRoots::ConjugatePair { omega_squared: rat(1) }
        );
        let s = half_plane_split_real(&p(&[1, -1])).unwrap();
        assert_eq!((s.n_minus, s.n_plus, s.axis_root_count), (0, 1, 0));
    }

    #[test]
    fn axis_multiplicities_and_offaxis_gcd_roots() {
        // z^3 (z^2 + 4)^2 (z - 1)
        let f = &(&p(&[1, 0, 0, 0]) * &p(&[1, 0, 4]).pow(2)) * &p(&[1, -1]);
        let s = half_plane_split_real(&f).unwrap();
        assert_eq!((s.n_minus, s.n_plus, s.axis_root_count), (0, 1, 7));
        // (z^2 - 1)(z^2 + 2z + 5)(z^2 - 2z + 5): the gcd of the split pair
        // carries nonreal roots that are off-axis roots of p
        let f = &(&p(&[1, 0, -1]) * &p(&[1, 2, 5])) * &p(&[1, -2, 5]);
        let s = half_plane_split_real(&f).unwrap();
        assert_eq!((s.n_minus, s.n_plus, s.axis_root_count), (3, 3, 0));
        assert!(s.imaginary_axis_gcd.degree().unwrap() >= 2);
    }

    #[test]
    fn isolation_examples() {
        let f = &(&p(&[1, -1]) * &p(&[1, -2])) * &p(&[1, 0, -2]);
        let iv = isolate_real_roots(&(&f * &p(&[1, -1])));
        assert_eq!(iv.len(), 4);
        for (a, b) in &iv {
            assert_eq!(distinct_roots_in(&f, a, b).unwrap(), 1);
        }
        assert!(isolate_real_roots(&p(&[1, 0, 1])).is_empty());
    }

    fn rat_strategy() -> impl Strategy<Value = Rat> {
        (-6i64..=6, 1i64..=3).prop_map(|(n, d)| ratio(n, d))
    }

    proptest! {
        #[test]
        fn log_derivative_counts_distinct_roots(
            roots in prop::collection::vec(-5i64..=5, 1..6),
            extra in prop::collection::vec((1i64..4, -3i64..3), 0..2),
        ) {
            let mut f = Polynomial::one();
            for r in &roots {
                f = &f * &p(&[1, -r]);
            }
            for (a, b) in &extra {
                f = &f * &p(&[1, 2 * b, b * b + a * a]);
            }
            let mut distinct = roots.clone();
            distinct.sort();
            distinct.dedup();
            let a = ratio(-11, 2);
            let b = ratio(11, 2);
            prop_assert_eq!(distinct_roots_in(&f, &a, &b).unwrap(), distinct.len());
            prop_assert_eq!(distinct_real_roots(&f), distinct.len());
            prop_assert_eq!(real_roots_with_multiplicity(&f), roots.len());
        }

        #[test]
        fn shift_invariance(num in prop::collection::vec(-4i64..=4, 1..4),
                            den in prop::collection::vec(-4i64..=4, 2..6),
                            c in rat_strategy()) {
            prop_assume!(den[0] != 0);
            let r = rf(&num, &den);
            prop_assert_eq!(projective_index(&r.add_constant(&c)), projective_index(&r));
        }

        #[test]
        fn polar_invariance(num in prop::collection::vec(-4i64..=4, 1..5),
                            den in prop::collection::vec(-4i64..=4, 1..6)) {
            prop_assume!(den[0] != 0);
            let r = rf(&num, &den);
            prop_assume!(!r.is_zero());
            let polar = r.recip().unwrap().neg();
            prop_assert_eq!(projective_index(&polar), projective_index(&r));
        }

        #[test]
        fn regular_chains_match_endpoint_limits(num in prop::collection::vec(-5i64..=5, 1..6),
                                                den in prop::collection::vec(-5i64..=5, 2..7)) {
            prop_assume!(den[0] != 0 && num.len() < den.len());
            let (f0, f1) = (p(&den), p(&num));
            prop_assume!(f1.degree().is_none_or(|d| d < f0.degree().unwrap()));
            let chain = SturmChain::new(&f0, &f1).unwrap();
            if let Some(idx) = regular_chain_index(&chain) {
                let direct = chain.variations_at_neg_inf() as i64 - chain.variations_at_pos_inf() as i64;
                prop_assert_eq!(idx, direct);
            }
        }
    }
}
