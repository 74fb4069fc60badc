//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// `coeffs[i]` is the coefficient of `x^i`. The zero polynomial has no
/// coefficients, and no other polynomial ends in a zero coefficient.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>) -> Self {
        let mut p = IntPoly {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.normalize();
        p
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new([c.into()])
    }

    /// The monomial `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPoly { coeffs }
    }

    pub fn x() -> Self {
        Self::monomial(1)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest degree with a nonzero coefficient. For a domination polynomial
    /// this is the domination number.
    pub fn min_degree_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn power(&self, mut k: u32) -> Self {
        let mut result = IntPoly::one();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `(1 + x)^t - 1`, the domination polynomial of `K_t`.
    pub fn binomial_shift(t: usize) -> Self {
        let mut coeffs = Vec::with_capacity(t + 1);
        let mut c = BigInt::one();
        coeffs.push(BigInt::zero());
        for i in 1..=t {
            c = c * (t + 1 - i) / i;
            coeffs.push(c.clone());
        }
        IntPoly::new(coeffs)
    }

    /// `self(inner(x))`, by Horner's rule over the coefficients of `self`.
    pub fn compose(&self, inner: &IntPoly) -> Self {
        self.coeffs.iter().rev().fold(IntPoly::zero(), |acc, c| {
            &(&acc * inner) + &IntPoly::constant(c.clone())
        })
    }

    pub fn evaluate(&self, v: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * v + c)
    }

    /// Sum of the coefficients.
    pub fn evaluate_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Coefficients as decimal strings, ascending degree.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// Ascending degree, zero terms omitted, unit coefficients dropped on powers
/// of `x`: `4x^2 + 4x^3 + x^4`, `-1 + x^4`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if i == 0 || !magnitude.is_one() {
                write!(f, "{magnitude}")?;
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

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        IntPoly::new(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &-rhs
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl std::iter::Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for IntPoly {
    fn product<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::one(), |a, b| &a * &b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::new(c.iter().copied())
    }

    #[test]
    fn canonical_zero() {
        assert!(p(&[0, 0, 0]).is_zero());
        assert_eq!(p(&[0]), IntPoly::zero());
        assert_eq!(p(&[1, 2, 0]).coeffs().len(), 2);
        assert_eq!((&p(&[1, 2]) - &p(&[1, 2])).coeffs().len(), 0);
        assert_eq!(IntPoly::zero().degree(), None);
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(
            &IntPoly::monomial(2) * &IntPoly::monomial(3),
            IntPoly::monomial(5)
        );
        let q = p(&[0, 2, 1]);
        assert_eq!(&q * &q, p(&[0, 0, 4, 4, 1]));
        assert_eq!(q.power(2), p(&[0, 0, 4, 4, 1]));
        assert_eq!(&q + &IntPoly::zero(), q);
        assert_eq!(IntPoly::x().power(3), IntPoly::monomial(3));
        assert_eq!(p(&[1, 1]).power(2), p(&[1, 2, 1]));
        assert_eq!(q.power(0), IntPoly::one());
    }

    #[test]
    fn binomial_shift_values() {
        assert!(IntPoly::binomial_shift(0).is_zero());
        assert_eq!(IntPoly::binomial_shift(3), p(&[0, 3, 3, 1]));
        assert_eq!(
            IntPoly::binomial_shift(4).evaluate_at_one(),
            BigInt::from(15)
        );
        assert_eq!(
            IntPoly::binomial_shift(5).evaluate(&BigInt::one()),
            BigInt::from(31)
        );
        // 2^64 - 1 does not fit an i64
        let big = IntPoly::binomial_shift(64).evaluate_at_one();
        assert_eq!(big, (BigInt::one() << 64) - 1);
        for n in 1..10 {
            assert_eq!(IntPoly::binomial_shift(n).min_degree_nonzero(), Some(1));
        }
    }

    #[test]
    fn composition_examples() {
        let y2_2y = p(&[0, 2, 1]);
        assert_eq!(y2_2y.compose(&IntPoly::x()), y2_2y);
        assert_eq!(y2_2y.compose(&p(&[0, 2, 1])), IntPoly::binomial_shift(4));
        assert_eq!(
            IntPoly::monomial(2).compose(&p(&[-1, 0, 1])),
            p(&[1, 0, -2, 0, 1])
        );
        assert_eq!(y2_2y.compose(&p(&[-1, 0, 1])), p(&[-1, 0, 0, 0, 1]));
    }

    #[test]
    fn evaluation_and_min_degree() {
        let d_p4 = p(&[0, 0, 4, 4, 1]);
        assert_eq!(d_p4.evaluate(&BigInt::one()), BigInt::from(9));
        assert_eq!(p(&[7, 1, 1]).evaluate(&BigInt::zero()), BigInt::from(7));
        assert_eq!(d_p4.min_degree_nonzero(), Some(2));
        assert_eq!(IntPoly::zero().min_degree_nonzero(), None);
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[0, 0, 4, 4, 1]).to_string(), "4x^2 + 4x^3 + x^4");
        assert_eq!(p(&[-1, 0, 0, 0, 1]).to_string(), "-1 + x^4");
        assert_eq!(p(&[1, 0, -2, 0, 1]).to_string(), "1 - 2x^2 + x^4");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(p(&[1]).to_string(), "1");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(p(&[0, 1, 0, -1]).to_string(), "x - x^3");
        assert_eq!(p(&[0, 5, 10]).to_decimal_strings(), vec!["0", "5", "10"]);
    }
}
