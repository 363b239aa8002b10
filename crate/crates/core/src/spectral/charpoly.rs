//! Exact characteristic polynomials.
//!
//! The production route evaluates `det(kI - M)` at `k = 0..=n` with
//! fraction-free Bareiss elimination (machine `i128` with overflow checks,
//! falling back to big integers) and interpolates through Newton's forward
//! differences. Faddeev–LeVerrier is kept as an independent second route.

use alloc::vec;
use alloc::vec::Vec;

use ethnum::I256;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{IntPolynomial, IntSymMatrix};

/// Monic `det(xI - M)`.
pub fn char_poly(m: &IntSymMatrix) -> IntPolynomial {
    let n = m.dim();
    let values: Vec<BigInt> = (0..=n)
        .map(|k| shifted_determinant(m, k as i64))
        .collect();
    interpolate_consecutive(values)
}

/// `det(kI - M)`
fn shifted_determinant(m: &IntSymMatrix, k: i64) -> BigInt {
    let n = m.dim();
    let mut a = Vec::with_capacity(n * n);
    for (i, row) in m.rows().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            let diag = if i == j { k } else { 0 };
            a.push(i128::from(diag - x));
        }
    }
    match bareiss_i128(&mut a, n) {
        Some(d) => BigInt::from(d),
        // untouched: the bound check runs before any elimination
        None => bareiss_big(a.into_iter().map(BigInt::from).collect(), n),
    }
}

/// Exact determinant of a square matrix given row-major.
///
/// # Panics
/// If `entries.len() != n * n`.
pub fn determinant(entries: &[i64], n: usize) -> BigInt {
    assert_eq!(entries.len(), n * n, "matrix must be n x n");
    let mut a: Vec<i128> = entries.iter().map(|&x| i128::from(x)).collect();
    match bareiss_i128(&mut a, n) {
        Some(d) => BigInt::from(d),
        None => bareiss_big(entries.iter().map(|&x| BigInt::from(x)).collect(), n),
    }
}

/// Every entry Bareiss ever stores is a minor of the input, so a Hadamard
/// bound (product of row norms, each at least 1) below 2^126 means the whole
/// elimination fits in `i128`. Cross products may still need 256 bits.
fn fits_i128(a: &[i128], n: usize) -> bool {
    let mut bound = 1.0f64;
    for row in a.chunks(n.max(1)) {
        let Some(norm2) = row
            .iter()
            .try_fold(0u128, |acc, x| acc.checked_add(x.unsigned_abs().checked_mul(x.unsigned_abs())?))
        else {
            return false;
        };
        bound *= (norm2 as f64).max(1.0);
    }
    // squared bound against 2^250, slack covers float rounding
    bound < 2f64.powi(250)
}

/// `None` when the entries might not fit in `i128`.
fn bareiss_i128(a: &mut [i128], n: usize) -> Option<i128> {
    if n == 0 {
        return Some(1);
    }
    if !fits_i128(a, n) {
        return None;
    }
    let mut sign = 1i128;
    let mut prev = ExactDivisor::new(1);
    // widest live entry, which decides how wide the cross products get
    let mut widest = a.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0);
    for k in 0..n - 1 {
        if a[k * n + k] == 0 {
            let Some(r) = (k + 1..n).find(|&r| a[r * n + k] != 0) else {
                return Some(0);
            };
            for j in 0..n {
                a.swap(k * n + j, r * n + j);
            }
            sign = -sign;
        }
        let pivot = a[k * n + k];
        let mut next_widest = 0u128;
        if widest < 1 << 31 {
            let (pivot, inverse) = (pivot as i64, prev.inverse as i64);
            // a shift of 64 or more means the divisor exceeds every dividend, all zero
            let shift = prev.shift.min(63);
            for i in k + 1..n {
                let lead = a[i * n + k] as i64;
                for j in k + 1..n {
                    let x = a[i * n + j] as i64 * pivot - lead * a[k * n + j] as i64;
                    let q = (x >> shift).wrapping_mul(inverse);
                    next_widest = next_widest.max(u128::from(q.unsigned_abs()));
                    a[i * n + j] = i128::from(q);
                }
            }
        } else {
            let narrow = widest < 1 << 62;
            for i in k + 1..n {
                let lead = a[i * n + k];
                for j in k + 1..n {
                    let (p, q) = (a[i * n + j], a[k * n + j]);
                    let v = if narrow {
                        prev.divide(p * pivot - lead * q)
                    } else {
                        match p.checked_mul(pivot).zip(lead.checked_mul(q)).and_then(|(x, y)| x.checked_sub(y)) {
                            Some(x) => prev.divide(x),
                            None => prev.divide_wide(I256::from(p) * I256::from(pivot) - I256::from(lead) * I256::from(q)),
                        }
                    };
                    next_widest = next_widest.max(v.unsigned_abs());
                    a[i * n + j] = v;
                }
            }
        }
        widest = next_widest;
        prev = ExactDivisor::new(pivot);
    }
    Some(a[n * n - 1] * sign)
}

/// Division by a fixed nonzero `d` that is known to be exact: shift out the
/// power of two, then multiply by the inverse of the odd part mod 2^128.
struct ExactDivisor {
    #[cfg(debug_assertions)]
    d: i128,
    shift: u32,
    inverse: i128,
}

impl ExactDivisor {
    fn new(d: i128) -> Self {
        debug_assert!(d != 0);
        let shift = d.trailing_zeros();
        let odd = d >> shift;
        // Newton: each step doubles the number of correct low bits (3 to start)
        let mut inverse = odd;
        for _ in 0..6 {
            inverse = inverse.wrapping_mul(2i128.wrapping_sub(odd.wrapping_mul(inverse)));
        }
        ExactDivisor {
            #[cfg(debug_assertions)]
            d,
            shift,
            inverse,
        }
    }

    /// The quotient must fit in `i128`.
    #[inline]
    fn divide(&self, x: i128) -> i128 {
        let q = (x >> self.shift).wrapping_mul(self.inverse);
        #[cfg(debug_assertions)]
        debug_assert_eq!(q.wrapping_mul(self.d), x, "inexact Bareiss division");
        q
    }

    #[inline]
    fn divide_wide(&self, x: I256) -> i128 {
        // only the low 128 bits of the shifted dividend matter
        let q = (x >> self.shift).as_i128().wrapping_mul(self.inverse);
        #[cfg(debug_assertions)]
        debug_assert_eq!(I256::from(q) * I256::from(self.d), x, "inexact Bareiss division");
        q
    }
}

fn bareiss_big(mut a: Vec<BigInt>, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                a.swap(k * n + j, r * n + j);
            }
            negate = !negate;
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            let lead = a[i * n + k].clone();
            for j in k + 1..n {
                let x = &a[i * n + j] * &pivot - &lead * &a[k * n + j];
                a[i * n + j] = x / &prev;
            }
        }
        prev = pivot;
    }
    let d = a.pop().unwrap();
    if negate {
        -d
    } else {
        d
    }
}

/// The unique polynomial of degree `< values.len()` through `(k, values[k])`.
/// Integer coefficients are assumed (true for characteristic polynomials of
/// integer matrices), so every divided difference divides exactly.
fn interpolate_consecutive(values: Vec<BigInt>) -> IntPolynomial {
    let small: Option<Vec<i128>> = values.iter().map(|v| i128::try_from(v).ok()).collect();
    if let Some(c) = small.and_then(interpolate_i128) {
        return IntPolynomial::new(c.into_iter().map(BigInt::from).collect());
    }
    interpolate_big(values)
}

/// `None` on overflow.
fn interpolate_i128(mut d: Vec<i128>) -> Option<Vec<i128>> {
    let n = d.len();
    for j in 1..n {
        for i in (j..n).rev() {
            d[i] = d[i].checked_sub(d[i - 1])?;
        }
    }
    let mut factorial = 1i128;
    for (j, v) in d.iter_mut().enumerate().skip(1) {
        factorial = factorial.checked_mul(j as i128)?;
        debug_assert_eq!(*v % factorial, 0, "non-integral Newton coefficient");
        *v /= factorial;
    }
    // nested Newton form a_0 + x(a_1 + (x-1)(a_2 + ...)), expanded by Horner
    let mut acc = vec![0i128; n];
    for j in (0..n).rev() {
        let r = j as i128;
        for i in (1..n).rev() {
            acc[i] = acc[i - 1].checked_sub(r.checked_mul(acc[i])?)?;
        }
        acc[0] = d[j].checked_sub(r.checked_mul(acc[0])?)?;
    }
    Some(acc)
}

fn interpolate_big(mut d: Vec<BigInt>) -> IntPolynomial {
    let n = d.len();
    for j in 1..n {
        for i in (j..n).rev() {
            let prev = d[i - 1].clone();
            d[i] -= prev;
        }
    }
    let mut factorial = BigInt::one();
    for (j, v) in d.iter_mut().enumerate().skip(1) {
        factorial *= j;
        let (q, r) = v.div_rem(&factorial);
        debug_assert!(r.is_zero(), "non-integral Newton coefficient");
        *v = q;
    }
    let mut acc = vec![BigInt::zero(); n];
    for j in (0..n).rev() {
        for i in (1..n).rev() {
            let shifted = &acc[i - 1] - &acc[i] * j;
            acc[i] = shifted;
        }
        acc[0] = &d[j] - &acc[0] * j;
    }
    IntPolynomial::new(acc)
}

/// Faddeev–LeVerrier recursion over the integers; every division by `k` is
/// exact because the coefficients are integers.
pub fn char_poly_faddeev_leverrier(m: &IntSymMatrix) -> IntPolynomial {
    let n = m.dim();
    let a: Vec<BigInt> = m.rows().flatten().map(|&x| BigInt::from(x)).collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut mk = vec![BigInt::zero(); n * n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for l in 0..n {
                if a[i * n + l].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !mk[l * n + j].is_zero() {
                        next[i * n + j] += &a[i * n + l] * &mk[l * n + j];
                    }
                }
            }
            next[i * n + i] += &coeffs[n - k + 1];
        }
        mk = next;
        let mut tr = BigInt::zero();
        for i in 0..n {
            for l in 0..n {
                tr += &a[i * n + l] * &mk[l * n + i];
            }
        }
        coeffs[n - k] = -(tr / BigInt::from(k));
    }
    IntPolynomial::new(coeffs)
}
