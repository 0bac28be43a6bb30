//! The curve `w -> i^{-n} p(iw)`: exact winding from crossing indices, and a
//! floating-point sampler with CSV/SVG output for plotting.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::poly::{to_f64, ComplexPolynomial, Polynomial};
use crate::sturm::{cauchy_index_interval, isolate_real_roots, real_roots_with_multiplicity};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HodographSample {
    pub omega: f64,
    pub re: f64,
    pub im: f64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindingSummary {
    /// Total argument increment over `pi`.
    pub delta_over_pi: i64,
    /// `±1` for each crossing of the imaginary axis, in increasing `w`.
    pub crossing_indices: Vec<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlotFormat {
    Csv,
    Svg,
}

/// Exact argument increment. Each real pole of the reduced `f1/f0` with a
/// sign change contributes its local Cauchy index, found on an isolating
/// interval.
pub fn winding_increment(p: &ComplexPolynomial) -> Result<WindingSummary> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let split = p.imaginary_axis_split()?;
    let g = split.axis_gcd();
    if real_roots_with_multiplicity(&g) > 0 {
        return Err(Error::AxisRootPresent(g));
    }
    let r = split.ratio();
    let mut crossing_indices = Vec::new();
    for (a, b) in isolate_real_roots(r.den()) {
        let i = cauchy_index_interval(&r, &a, &b)?;
        if i != 0 {
            crossing_indices.push(i);
        }
    }
    Ok(WindingSummary {
        delta_over_pi: crossing_indices.iter().sum(),
        crossing_indices,
    })
}

fn sample_range(f0: &Polynomial) -> f64 {
    match f0.cauchy_root_bound() {
        Ok(b) => 2.0 * to_f64(&b),
        Err(_) => 2.0,
    }
}

/// Warp steepness: `w = B tan(THETA t) / tan(THETA)` for `t` in `[-1, 1]`.
const THETA: f64 = 1.3;

/// `points` samples of the curve for `w` in `[-B, B]`, `B` twice the Cauchy
/// bound of `f0`, denser near the origin.
pub fn sample_curve(p: &ComplexPolynomial, points: usize) -> Result<Vec<HodographSample>> {
    if points < 2 {
        return Err(Error::Precondition("sampling needs at least 2 points"));
    }
    let split = p.imaginary_axis_split()?;
    let bound = sample_range(&split.f0);
    let scale = bound / THETA.tan();
    Ok((0..points)
        .map(|k| {
            let t = -1.0 + 2.0 * k as f64 / (points - 1) as f64;
            let omega = scale * (THETA * t).tan();
            HodographSample {
                omega,
                re: split.f0.eval_f64(omega),
                im: -split.f1.eval_f64(omega),
            }
        })
        .collect())
}

/// Argument along the samples, unwrapped to be continuous.
pub fn unwrapped_argument(samples: &[HodographSample]) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::with_capacity(samples.len());
    for s in samples {
        let a = s.im.atan2(s.re);
        let v = match out.last() {
            None => a,
            Some(&prev) => {
                let mut d = a - prev.rem_euclid(2.0 * std::f64::consts::PI);
                d = (d + std::f64::consts::PI).rem_euclid(2.0 * std::f64::consts::PI)
                    - std::f64::consts::PI;
                prev + d
            }
        };
        out.push(v);
    }
    out
}

/// 12 significant digits, shortest form; exponent notation outside
/// `[1e-6, 1e15)`.
fn num12(x: f64) -> String {
    let rounded: f64 = format!("{x:.11e}").parse().expect("float round trip");
    if rounded == 0.0 {
        return "0".to_string();
    }
    let mag = rounded.abs();
    if (1e-6..1e15).contains(&mag) {
        rounded.to_string()
    } else {
        format!("{rounded:e}")
    }
}

pub fn emit(samples: &[HodographSample], format: PlotFormat) -> Result<String> {
    if samples.is_empty() {
        return Err(Error::EmptySamples);
    }
    Ok(match format {
        PlotFormat::Csv => emit_csv(samples),
        PlotFormat::Svg => emit_svg(samples),
    })
}

fn emit_csv(samples: &[HodographSample]) -> String {
    let mut out = String::from("omega,re,im\n");
    for s in samples {
        let _ = writeln!(out, "{},{},{}", num12(s.omega), num12(s.re), num12(s.im));
    }
    out
}

const SIZE: f64 = 800.0;
const MARGIN: f64 = 20.0;

fn emit_svg(samples: &[HodographSample]) -> String {
    let finite = samples.iter().filter(|s| s.re.is_finite() && s.im.is_finite());
    let (mut x0, mut x1, mut y0, mut y1) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for s in finite.clone() {
        x0 = x0.min(s.re);
        x1 = x1.max(s.re);
        y0 = y0.min(s.im);
        y1 = y1.max(s.im);
    }
    let span = |lo: f64, hi: f64| if hi > lo { hi - lo } else { 1.0 };
    let sx = (SIZE - 2.0 * MARGIN) / span(x0, x1);
    let sy = (SIZE - 2.0 * MARGIN) / span(y0, y1);
    let px = |x: f64| MARGIN + (x - x0) * sx;
    let py = |y: f64| SIZE - MARGIN - (y - y0) * sy;
    let mut pts = String::new();
    for s in finite {
        let _ = write!(pts, "{:.2},{:.2} ", px(s.re), py(s.im));
    }
    let (ox, oy) = (px(0.0), py(0.0));
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="800" height="800" viewBox="0 0 800 800">"#
    );
    let _ = writeln!(out, r#"<rect width="800" height="800" fill="white"/>"#);
    let _ = writeln!(
        out,
        r##"<line x1="0" y1="{oy:.2}" x2="800" y2="{oy:.2}" stroke="#999" stroke-width="1"/>"##
    );
    let _ = writeln!(
        out,
        r##"<line x1="{ox:.2}" y1="0" x2="{ox:.2}" y2="800" stroke="#999" stroke-width="1"/>"##
    );
    let _ = writeln!(
        out,
        r##"<polyline fill="none" stroke="#1f5fbf" stroke-width="1.5" points="{}"/>"##,
        pts.trim_end()
    );
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, CRat};
    use crate::sturm::half_plane_split;
    use num_complex::Complex;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> ComplexPolynomial {
        Polynomial::from_ints(c).to_complex()
    }

    #[test]
    fn winding_examples() {
        assert_eq!(winding_increment(&p(&[1, 2, 3, 1])).unwrap().delta_over_pi, 3);
        assert_eq!(winding_increment(&p(&[1, -1])).unwrap().delta_over_pi, -1);
        let w = winding_increment(&p(&[1, 1, 1, 2])).unwrap();
        assert_eq!(w.delta_over_pi, -1);
        assert_eq!(w.crossing_indices.iter().sum::<i64>(), -1);
        match winding_increment(&p(&[1, 1, 1, 1])) {
            Err(Error::AxisRootPresent(g)) => assert_eq!(g, Polynomial::from_ints(&[1, 0, -1])),
            other => panic!("expected axis root error, got {other:?}"),
        }
        assert_eq!(winding_increment(&ComplexPolynomial::new(vec![])), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn problem_polynomial_winding() {
        let w = winding_increment(&p(&[32, 12, 46, 21, 16, 7, 1])).unwrap();
        let s = half_plane_split(&p(&[32, 12, 46, 21, 16, 7, 1])).unwrap();
        assert_eq!(w.delta_over_pi, s.n_minus as i64 - s.n_plus as i64);
    }

    #[test]
    fn sampler_examples() {
        let s = sample_curve(&p(&[1, 0]), 11).unwrap();
        assert_eq!(s.len(), 11);
        assert!(s.iter().all(|x| x.im == 0.0 && x.re == x.omega));
        assert!(sample_curve(&p(&[1, 0]), 1).is_err());
        let first = s.first().unwrap().omega;
        let last = s.last().unwrap().omega;
        // Cauchy bound of w is 1, so the range is [-2, 2]
        assert!((first + 2.0).abs() < 1e-12 && (last - 2.0).abs() < 1e-12);
    }

    #[test]
    fn stable_quadratic_argument_is_monotone() {
        let s = sample_curve(&p(&[1, 1, 1]), 500).unwrap();
        let arg = unwrapped_argument(&s);
        assert!(arg.windows(2).all(|w| w[1] >= w[0] - 1e-9));
    }

    #[test]
    fn csv_and_svg() {
        let samples = vec![
            HodographSample { omega: 0.0, re: 1.0, im: 0.0 },
            HodographSample { omega: 1.0 / 3.0, re: -2.5, im: 1e-20 },
            HodographSample { omega: 1.0, re: 123456789.123, im: -0.0 },
        ];
        let csv = emit(&samples, PlotFormat::Csv).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[0], "omega,re,im");
        assert_eq!(lines[1], "0,1,0");
        assert_eq!(lines[2], "0.333333333333,-2.5,1e-20");
        assert_eq!(lines[3], "1,123456789.123,0");
        let svg = emit(&samples, PlotFormat::Svg).unwrap();
        assert_eq!(svg.matches("<polyline").count(), 1);
        assert!(svg.contains(r#"viewBox="0 0 800 800""#));
        assert_eq!(emit(&[], PlotFormat::Csv), Err(Error::EmptySamples));
    }

    fn cpoly() -> impl Strategy<Value = ComplexPolynomial> {
        prop::collection::vec((-4i64..=4, -4i64..=4), 2..=7).prop_map(|v| {
            let mut c: Vec<CRat> = v.into_iter().map(|(a, b)| Complex::new(rat(a), rat(b))).collect();
            if c[0] == Complex::new(rat(0), rat(0)) {
                c[0] = Complex::new(rat(1), rat(0));
            }
            ComplexPolynomial::new(c)
        })
    }

    fn stable_real() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((1i64..=5, 1i64..=5, any::<bool>()), 1..=3).prop_map(|fs| {
            fs.into_iter().fold(Polynomial::one(), |acc, (b, c, quad)| {
                let f = if quad { Polynomial::from_ints(&[1, b, c]) } else { Polynomial::from_ints(&[1, b]) };
                &acc * &f
            })
        })
    }

    proptest! {
        #[test]
        fn winding_matches_half_plane_split(q in cpoly()) {
            let s = half_plane_split(&q).unwrap();
            match winding_increment(&q) {
                Ok(w) => {
                    prop_assert_eq!(s.axis_root_count, 0);
                    prop_assert_eq!(w.delta_over_pi, s.n_minus as i64 - s.n_plus as i64);
                    prop_assert!(w.delta_over_pi.unsigned_abs() as usize <= q.degree().unwrap());
                    prop_assert!(w.crossing_indices.iter().all(|&i| i == 1 || i == -1));
                }
                Err(Error::AxisRootPresent(_)) => prop_assert!(s.axis_root_count > 0),
                Err(e) => prop_assert!(false, "unexpected error {e}"),
            }
        }

        #[test]
        fn crossing_parity(q in cpoly()) {
            if let Ok(w) = winding_increment(&q) {
                let split = q.imaginary_axis_split().unwrap();
                prop_assert_eq!(w.crossing_indices.len() % 2, split.f0.deg0() % 2);
            }
        }

        #[test]
        fn stable_argument_is_monotone(f in stable_real()) {
            let s = sample_curve(&f.to_complex(), 400).unwrap();
            let arg = unwrapped_argument(&s);
            for w in arg.windows(2) {
                prop_assert!(w[1] >= w[0] - 1e-9);
            }
        }
    }
}
