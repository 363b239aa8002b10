use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Polynomial with big-integer coefficients, stored lowest degree first
/// without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `x - r`
    pub fn linear(r: i64) -> Self {
        Self::from_i64(&[-r, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Multiplicity of 0 as a root (index of the lowest nonzero coefficient).
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }

    /// `p(x) / x^k`, or `None` when `x^k` does not divide `p`.
    pub fn div_x_pow(&self, k: usize) -> Option<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(self.coeffs.iter().skip(k).cloned().collect()))
    }

    pub fn mul_x_pow(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    /// `p(x + a)`
    pub fn shift(&self, a: &BigInt) -> Self {
        // Horner in the basis (x + a)
        let mut acc: Vec<BigInt> = Vec::with_capacity(self.coeffs.len());
        for c in self.coeffs.iter().rev() {
            // acc <- acc * (x + a) + c
            let mut next = vec![BigInt::zero(); acc.len() + 1];
            for (i, v) in acc.iter().enumerate() {
                next[i + 1] += v;
                next[i] += v * a;
            }
            next[0] += c;
            acc = next;
        }
        Self::new(acc)
    }

    /// `p(-x)`
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Power sums `[p_0, ..., p_kmax]` of the roots of a monic polynomial,
    /// via Newton's identities (`p_0` is the degree).
    ///
    /// # Panics
    /// If the polynomial is not monic.
    pub fn power_sums(&self, kmax: usize) -> Vec<BigInt> {
        assert!(self.is_monic(), "power sums need a monic polynomial");
        let n = self.degree();
        let e = self.elementary_symmetric();
        let e_at = |i: usize| if i <= n { e[i].clone() } else { BigInt::zero() };
        let mut p = Vec::with_capacity(kmax + 1);
        p.push(BigInt::from(n));
        for k in 1..=kmax {
            let mut s = e_at(k) * BigInt::from(k);
            if k % 2 == 0 {
                s = -s;
            }
            for i in 1..k {
                let term = e_at(i) * &p[k - i];
                if i % 2 == 1 {
                    s += term;
                } else {
                    s -= term;
                }
            }
            p.push(s);
        }
        p
    }

    /// `[e_0, ..., e_n]` with `p(x) = Σ (-1)^k e_k x^(n-k)`.
    fn elementary_symmetric(&self) -> Vec<BigInt> {
        let n = self.degree();
        (0..=n)
            .map(|k| {
                let c = self.coeff(n - k);
                if k % 2 == 1 {
                    -c
                } else {
                    c
                }
            })
            .collect()
    }

    /// The monic degree-`n` polynomial whose roots have power sums
    /// `sums[1..=n]`; `None` if the sums are not those of an integer
    /// polynomial.
    pub fn from_power_sums(n: usize, sums: &[BigInt]) -> Option<Self> {
        if sums.len() <= n {
            return None;
        }
        let mut e = vec![BigInt::one()];
        for k in 1..=n {
            let mut s = BigInt::zero();
            for i in 1..=k {
                let term = &e[k - i] * &sums[i];
                if i % 2 == 1 {
                    s += term;
                } else {
                    s -= term;
                }
            }
            let (q, r) = s.div_rem(&BigInt::from(k));
            if !r.is_zero() {
                return None;
            }
            e.push(q);
        }
        let coeffs = (0..=n)
            .map(|i| {
                let k = n - i;
                if k % 2 == 1 {
                    -&e[k]
                } else {
                    e[k].clone()
                }
            })
            .collect();
        Some(Self::new(coeffs))
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn display() {
        assert_eq!(IntPolynomial::from_i64(&[0, 9, -6, 1]).to_string(), "x^3 - 6x^2 + 9x");
        assert_eq!(IntPolynomial::from_i64(&[-2, -3, 0, 1]).to_string(), "x^3 - 3x - 2");
        assert_eq!(IntPolynomial::default().to_string(), "0");
        assert_eq!(IntPolynomial::from_i64(&[1]).to_string(), "1");
    }

    #[test]
    fn shift_and_reflect() {
        // (x - 1)^2 shifted by 1 is x^2
        let p = IntPolynomial::from_i64(&[1, -2, 1]);
        assert_eq!(p.shift(&BigInt::one()), IntPolynomial::from_i64(&[0, 0, 1]));
        assert_eq!(
            IntPolynomial::from_i64(&[1, 2, 3, 4]).reflect(),
            IntPolynomial::from_i64(&[1, -2, 3, -4])
        );
    }

    #[test]
    fn newton_round_trip() {
        // roots 0, 3, 3
        let p = IntPolynomial::from_i64(&[0, 9, -6, 1]);
        let sums = p.power_sums(5);
        let expect: Vec<BigInt> = [3, 6, 18, 54, 162, 486].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(sums, expect);
        assert_eq!(IntPolynomial::from_power_sums(3, &sums), Some(p));
    }

    #[test]
    fn products() {
        let p = &IntPolynomial::linear(2) * &IntPolynomial::linear(-1);
        assert_eq!(p, IntPolynomial::from_i64(&[-2, -1, 1]));
        assert_eq!(p.eval(&BigInt::from(2)), BigInt::zero());
        assert_eq!(IntPolynomial::from_i64(&[0, 0, 5]).zero_root_multiplicity(), 2);
        assert_eq!(IntPolynomial::from_i64(&[0, 0, 5]).div_x_pow(2), Some(IntPolynomial::from_i64(&[5])));
        assert_eq!(IntPolynomial::from_i64(&[1, 5]).div_x_pow(1), None);
    }
}
