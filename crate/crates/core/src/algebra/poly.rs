//! Polynomials in the central element `c` with exact rational coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num::{BigInt, BigRational, One, Signed, Zero};

/// A polynomial `Σ aₖ cᵏ`; trailing zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly(Vec<BigRational>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(q: BigRational) -> Self {
        Poly::monomial(q, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Poly::constant(BigRational::from_integer(BigInt::from(n)))
    }

    /// `q · cᵏ`.
    pub fn monomial(q: BigRational, k: usize) -> Self {
        if q.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = q;
        Poly(coeffs)
    }

    /// `cᵏ`.
    pub fn c_pow(k: usize) -> Self {
        Poly::monomial(BigRational::one(), k)
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = Poly(coeffs);
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.0.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    /// Drops every term of degree `≥ order`.
    pub fn truncate(&self, order: usize) -> Poly {
        Poly::from_coeffs(self.0.iter().take(order).cloned().collect())
    }

    /// Multiplies by `cᵏ`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.0.iter().cloned());
        Poly(coeffs)
    }

    /// Division by `c`; `None` unless the constant term vanishes.
    pub fn div_c(&self) -> Option<Poly> {
        match self.0.first() {
            None => Some(Poly::zero()),
            Some(a) if a.is_zero() => Some(Poly(self.0[1..].to_vec())),
            Some(_) => None,
        }
    }

    pub fn scale(&self, q: &BigRational) -> Poly {
        if q.is_zero() {
            return Poly::zero();
        }
        Poly(self.0.iter().map(|a| a * q).collect())
    }

    /// Product truncated below `order`, skipping the work on dropped terms.
    pub fn mul_trunc(&self, other: &Poly, order: usize) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let len = (self.0.len() + other.0.len() - 1).min(order);
        let mut out = vec![BigRational::zero(); len];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        if self.0.len() < rhs.0.len() {
            self.0.resize(rhs.0.len(), BigRational::zero());
        }
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
        self.trim();
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        if self.0.len() < rhs.0.len() {
            self.0.resize(rhs.0.len(), BigRational::zero());
        }
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
        self.trim();
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        self.mul_trunc(rhs, usize::MAX)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let negative = a.is_negative();
            let magnitude = a.abs();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let unit = magnitude.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{magnitude}")?,
                (_, false) => write!(f, "{magnitude}")?,
                _ => {}
            }
            match k {
                0 => {}
                1 => f.write_str("c")?,
                _ => write!(f, "c^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let p = &Poly::from_int(1) + &Poly::c_pow(1);
        let q = &Poly::from_int(1) - &Poly::c_pow(1);
        assert_eq!(&p * &q, &Poly::from_int(1) - &Poly::c_pow(2));
        assert_eq!(
            (&p * &p).truncate(2),
            &Poly::from_int(1) + &Poly::c_pow(1).scale(&BigRational::from_integer(2.into()))
        );
        assert_eq!(p.mul_trunc(&p, 2), (&p * &p).truncate(2));
        assert!((&p - &p).is_zero());
        assert_eq!((&p - &p).degree(), None);
    }

    #[test]
    fn division_by_c() {
        let p = Poly::c_pow(2);
        assert_eq!(p.div_c(), Some(Poly::c_pow(1)));
        assert_eq!(Poly::one().div_c(), None);
        assert_eq!(Poly::zero().div_c(), Some(Poly::zero()));
        assert_eq!(Poly::c_pow(1).shift(2), Poly::c_pow(3));
    }

    #[test]
    fn display() {
        let p = &(&Poly::from_int(2) - &Poly::c_pow(1)) + &Poly::c_pow(3);
        assert_eq!(p.to_string(), "2 - c + c^3");
        assert_eq!((-&Poly::c_pow(1)).to_string(), "-c");
        assert_eq!(Poly::zero().to_string(), "0");
    }
}
