//! Exact determinants over the rationals.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::poly::Rat;

pub type Matrix = Vec<Vec<Rat>>;

/// Determinant by Gaussian elimination with row swaps.
pub fn determinant(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    let mut a: Matrix = m.to_vec();
    let mut det = Rat::one();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Rat::zero();
        };
        if piv != k {
            a.swap(piv, k);
            det = -det;
        }
        let pivot = a[k][k].clone();
        det *= &pivot;
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
        }
    }
    det
}

/// Determinant by Laplace expansion along rows, memoised on the set of
/// remaining columns.
pub fn cofactor_determinant(m: &[Vec<Rat>]) -> Rat {
    fn go(m: &[Vec<Rat>], row: usize, cols: u64, memo: &mut HashMap<u64, Rat>) -> Rat {
        if row == m.len() {
            return Rat::one();
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let mut acc = Rat::zero();
        let mut parity = false;
        for j in 0..m.len() {
            if cols & (1 << j) == 0 {
                continue;
            }
            if !m[row][j].is_zero() {
                let minor = go(m, row + 1, cols & !(1 << j), memo);
                let term = &m[row][j] * minor;
                if parity {
                    acc -= term;
                } else {
                    acc += term;
                }
            }
            parity = !parity;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    let n = m.len();
    assert!(n < 64, "cofactor expansion limited to 63x63");
    go(m, 0, (1u64 << n) - 1, &mut HashMap::new())
}

fn leading_block(m: &[Vec<Rat>], k: usize) -> Matrix {
    m[..k].iter().map(|row| row[..k].to_vec()).collect()
}

/// All leading principal minors `det M[..k, ..k]`, `k = 1..=n`.
///
/// Fraction-free (Bareiss) elimination without pivoting yields every leading
/// minor as a pivot. Once a pivot vanishes the elimination cannot continue,
/// and the remaining minors come from cofactor expansion.
pub fn leading_principal_minors(m: &[Vec<Rat>]) -> Vec<Rat> {
    let n = m.len();
    let mut a: Matrix = m.to_vec();
    let mut minors = Vec::with_capacity(n);
    let mut prev = Rat::one();
    for k in 0..n {
        let pivot = a[k][k].clone();
        minors.push(pivot.clone());
        if pivot.is_zero() {
            for size in k + 2..=n {
                minors.push(cofactor_determinant(&leading_block(m, size)));
            }
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&pivot * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = pivot;
    }
    minors
}
