//! Dense univariate polynomials over exact coefficient rings, canonicalized
//! with no trailing zero coefficients so equality is structural.

use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Clone + Zero> Poly<T> {
    /// Canonicalizes by trimming trailing zeros; the zero polynomial has an
    /// empty coefficient list.
    pub fn new(mut coeffs: Vec<T>) -> Poly<T> {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly<T> {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Poly<T> {
        Poly::new(vec![c])
    }

    /// Coefficients low-to-high.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Poly<T>) -> Poly<T>
    where
        T: std::ops::Add<Output = T>,
    {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Poly<T>) -> Poly<T>
    where
        T: std::ops::Sub<Output = T>,
    {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Poly<T>) -> Poly<T>
    where
        T: std::ops::Mul<Output = T> + std::ops::Add<Output = T>,
    {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, by: &T) -> Poly<T>
    where
        T: std::ops::Mul<Output = T>,
    {
        Poly::new(self.coeffs.iter().map(|c| c.clone() * by.clone()).collect())
    }

    /// Evaluation by Horner's rule.
    pub fn eval(&self, x: &T) -> T
    where
        T: std::ops::Mul<Output = T> + std::ops::Add<Output = T>,
    {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn map<U: Clone + Zero>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Clone + Zero + One> Poly<T> {
    pub fn one() -> Poly<T> {
        Poly::new(vec![T::one()])
    }

    /// The monomial `x` (degree 1, unit coefficient).
    pub fn x() -> Poly<T> {
        Poly::new(vec![T::zero(), T::one()])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(cs: &[i64]) -> Poly<BigInt> {
        Poly::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn canonical_form_trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]); // 1 + x
        assert_eq!(a.mul(&a), p(&[1, 2, 1]));
        assert_eq!(a.sub(&a), Poly::zero());
        assert_eq!(a.add(&p(&[0, -1])), p(&[1]));
        assert_eq!(p(&[2, 3]).eval(&BigInt::from(10)), BigInt::from(32));
    }
}
