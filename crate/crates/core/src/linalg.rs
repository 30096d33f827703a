//! Exact solution of small integer linear systems by fraction-free
//! (Bareiss) elimination.
//!
//! The system is first attempted with checked `i128` arithmetic and redone
//! with big integers only if an intermediate value overflows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::score::Rational;

trait ExactInt: Clone {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// `a * b - c * d`
    fn cross(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self>;
    fn div_exact(&self, d: &Self) -> Option<Self>;
    fn into_big(self) -> BigInt;
}

impl ExactInt for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }

    fn is_zero(&self) -> bool {
        *self == 0
    }

    fn cross(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self> {
        a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)
    }

    fn div_exact(&self, d: &Self) -> Option<Self> {
        debug_assert_eq!(self % d, 0, "Bareiss division must be exact");
        self.checked_div(*d)
    }

    fn into_big(self) -> BigInt {
        BigInt::from(self)
    }
}

impl ExactInt for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn cross(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self> {
        Some(a * b - c * d)
    }

    fn div_exact(&self, d: &Self) -> Option<Self> {
        debug_assert!(self.is_multiple_of(d), "Bareiss division must be exact");
        Some(self / d)
    }

    fn into_big(self) -> BigInt {
        self
    }
}

/// Returns `(y, det)` with `x = y / det`, or `None` on overflow. `Err(())`
/// signals a singular matrix.
fn bareiss<T: ExactInt>(matrix: &[Vec<i64>], rhs: &[i64]) -> Option<Result<(Vec<T>, T), ()>> {
    let n = rhs.len();
    let mut a: Vec<Vec<T>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, &b)| row.iter().chain(std::iter::once(&b)).map(|&x| T::from_i64(x)).collect())
        .collect();
    let mut prev = T::from_i64(1);
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => a.swap(k, r),
                None => return Some(Err(())),
            }
        }
        for i in k + 1..n {
            for j in k + 1..=n {
                let v = T::cross(&a[i][j], &a[k][k], &a[i][k], &a[k][j])?;
                a[i][j] = v.div_exact(&prev)?;
            }
            a[i][k] = T::from_i64(0);
        }
        prev = a[k][k].clone();
    }
    let det = prev;
    let mut y: Vec<T> = vec![T::from_i64(0); n];
    for i in (0..n).rev() {
        let mut acc = T::cross(&det, &a[i][n], &T::from_i64(0), &T::from_i64(0))?;
        for j in i + 1..n {
            acc = T::cross(&acc, &T::from_i64(1), &a[i][j], &y[j])?;
        }
        y[i] = acc.div_exact(&a[i][i])?;
    }
    Some(Ok((y, det)))
}

/// Solves `matrix * x = rhs` exactly. Returns `None` for singular systems.
pub(crate) fn solve_exact(matrix: &[Vec<i64>], rhs: &[i64]) -> Option<Vec<Rational>> {
    fn finish<T: ExactInt>((y, det): (Vec<T>, T)) -> Vec<Rational> {
        let det = det.into_big();
        y.into_iter()
            .map(|v| Rational::new(v.into_big(), det.clone()))
            .collect()
    }
    if rhs.is_empty() {
        return Some(Vec::new());
    }
    match bareiss::<i128>(matrix, rhs) {
        Some(Ok(sol)) => Some(finish(sol)),
        Some(Err(())) => None,
        None => bareiss::<BigInt>(matrix, rhs)
            .expect("big integers do not overflow")
            .ok()
            .map(finish),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::score::{int, ratio};

    #[test]
    fn solves_small_system() {
        // 2x + y = 5, x + 3y = 10  ->  x = 1, y = 3
        let x = solve_exact(&[vec![2, 1], vec![1, 3]], &[5, 10]).unwrap();
        assert_eq!(x, vec![int(1), int(3)]);
    }

    #[test]
    fn pivots_past_zero() {
        // y = 2, x = 1/3
        let x = solve_exact(&[vec![0, 1], vec![3, 0]], &[2, 1]).unwrap();
        assert_eq!(x, vec![ratio(1, 3), int(2)]);
    }

    #[test]
    fn singular_is_none() {
        assert!(solve_exact(&[vec![1, 2], vec![2, 4]], &[1, 2]).is_none());
    }

    #[test]
    fn big_fallback_matches() {
        // Large diagonal entries push the Bareiss minors past i128.
        let n = 24;
        let m: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { 1_000_000_007 } else { (i * 31 + j * 17) as i64 % 1000 }).collect())
            .collect();
        let b: Vec<i64> = (0..n as i64).collect();
        let x = solve_exact(&m, &b).unwrap();
        for i in 0..n {
            let lhs: Rational = (0..n).map(|j| int(m[i][j] as usize) * &x[j]).sum();
            assert_eq!(lhs, int(b[i] as usize));
        }
    }
}
