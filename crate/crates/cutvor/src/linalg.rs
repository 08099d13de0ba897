//! Fraction-free (Bareiss) elimination over exact rationals.

use num_traits::Zero;

use crate::rational::{common_denominator, Rational};

/// Determinant of a square integer matrix.
pub fn bareiss_determinant(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(p) => {
                    m.swap(k, p);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Row-echelon data of an augmented integer system.
struct Echelon {
    rows: Vec<Vec<i128>>,
    pivots: Vec<usize>,
}

fn eliminate(mut m: Vec<Vec<i128>>, cols: usize) -> Echelon {
    let width = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    let mut prev = 1i128;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..m.len() {
            let factor = m[i][c];
            for j in c + 1..width {
                m[i][j] = (m[r][c] * m[i][j] - factor * m[r][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    Echelon { rows: m, pivots }
}

fn integer_rows(a: &[Vec<Rational>], b: Option<&[Rational]>) -> Vec<Vec<i128>> {
    a.iter()
        .enumerate()
        .map(|(i, row)| {
            let mut full: Vec<Rational> = row.clone();
            if let Some(b) = b {
                full.push(b[i]);
            }
            let q = common_denominator(&full);
            full.iter().map(|x| (x * q).to_integer()).collect()
        })
        .collect()
}

pub fn rank(a: &[Vec<Rational>]) -> usize {
    if a.is_empty() {
        return 0;
    }
    let cols = a[0].len();
    eliminate(integer_rows(a, None), cols).pivots.len()
}

/// Some solution of `a x = b` (free variables set to zero) together with the
/// rank of `a`, or `None` if the system is inconsistent.
pub fn solve(a: &[Vec<Rational>], b: &[Rational], cols: usize) -> Option<(Vec<Rational>, usize)> {
    assert_eq!(a.len(), b.len());
    if a.is_empty() {
        return Some((vec![Rational::zero(); cols], 0));
    }
    let ech = eliminate(integer_rows(a, Some(b)), cols);
    let r = ech.pivots.len();
    if ech.rows[r..].iter().any(|row| row[cols] != 0) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for k in (0..r).rev() {
        let c = ech.pivots[k];
        let row = &ech.rows[k];
        let mut acc = Rational::from_integer(row[cols]);
        for j in c + 1..cols {
            if row[j] != 0 {
                acc -= x[j] * row[j];
            }
        }
        x[c] = acc / row[c];
    }
    Some((x, r))
}
