//! Truncated formal power series in x whose coefficients are polynomials in
//! t over exact rationals, used to verify the differential and functional
//! equations satisfied by the exponential generating functions of the
//! proper-vertex polynomials. All arithmetic is exact; there is no rounding
//! tolerance anywhere in this module.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::enumerate::Family;
use crate::error::{Error, Result};
use crate::identity::{big_factorial, poly_closed};
use crate::poly::Poly;

pub type TPoly = Poly<BigRational>;

/// Truncated power series in x up to and including order N; coefficient i is
/// a polynomial in t over rationals. Binary operations require matching
/// truncation orders and never consult coefficients beyond them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesX {
    coeffs: Vec<TPoly>, // length order + 1
}

impl SeriesX {
    pub fn new(coeffs: Vec<TPoly>) -> SeriesX {
        assert!(!coeffs.is_empty(), "a series carries at least order 0");
        SeriesX { coeffs }
    }

    pub fn zero(order: usize) -> SeriesX {
        SeriesX {
            coeffs: vec![Poly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> SeriesX {
        let mut s = SeriesX::zero(order);
        s.coeffs[0] = Poly::one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &TPoly {
        &self.coeffs[i]
    }

    pub fn truncate(&self, order: usize) -> SeriesX {
        assert!(order <= self.order());
        SeriesX {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    fn check_order(&self, other: &SeriesX) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &SeriesX) -> Result<SeriesX> {
        self.check_order(other)?;
        Ok(SeriesX {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &SeriesX) -> Result<SeriesX> {
        self.check_order(other)?;
        Ok(SeriesX {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.sub(b))
                .collect(),
        })
    }

    pub fn mul(&self, other: &SeriesX) -> Result<SeriesX> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = vec![Poly::zero(); n + 1];
        for i in 0..=n {
            for j in 0..=n - i {
                out[i + j] = out[i + j].add(&self.coeffs[i].mul(&other.coeffs[j]));
            }
        }
        Ok(SeriesX { coeffs: out })
    }

    /// Nonnegative integer power by repeated multiplication.
    pub fn pow_int(&self, m: usize) -> SeriesX {
        let mut out = SeriesX::one(self.order());
        for _ in 0..m {
            out = out.mul(self).expect("orders match");
        }
        out
    }

    /// Formal derivative d/dx; the result has order one less.
    pub fn derivative(&self) -> SeriesX {
        assert!(self.order() >= 1, "derivative needs order >= 1");
        SeriesX {
            coeffs: (1..=self.order())
                .map(|i| {
                    self.coeffs[i].scale(&BigRational::from_integer(BigInt::from(i)))
                })
                .collect(),
        }
    }

    /// Multiplication by x at fixed order: the top coefficient falls off.
    pub fn mul_x(&self) -> SeriesX {
        let mut coeffs = vec![Poly::zero()];
        coeffs.extend_from_slice(&self.coeffs[..self.order()]);
        SeriesX { coeffs }
    }

    pub fn scale(&self, by: &TPoly) -> SeriesX {
        SeriesX {
            coeffs: self.coeffs.iter().map(|c| c.mul(by)).collect(),
        }
    }

    /// Multiplicative inverse; requires constant term 1.
    pub fn recip(&self) -> Result<SeriesX> {
        if self.coeffs[0] != Poly::one() {
            return Err(Error::InvalidStructure(
                "series reciprocal requires unit constant term".into(),
            ));
        }
        let n = self.order();
        let mut inv = vec![Poly::zero(); n + 1];
        inv[0] = Poly::one();
        for i in 1..=n {
            let mut acc = Poly::zero();
            for j in 1..=i {
                acc = acc.add(&self.coeffs[j].mul(&inv[i - j]));
            }
            inv[i] = Poly::zero().sub(&acc);
        }
        Ok(SeriesX { coeffs: inv })
    }
}

/// Outcome of an equation check: pass, or the first x-order at which the two
/// sides disagree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    FailAt(usize),
}

impl CheckOutcome {
    pub fn passed(self) -> bool {
        self == CheckOutcome::Pass
    }
}

fn first_difference(a: &SeriesX, b: &SeriesX) -> CheckOutcome {
    for i in 0..=a.order() {
        if a.coeff(i) != b.coeff(i) {
            return CheckOutcome::FailAt(i);
        }
    }
    CheckOutcome::Pass
}

fn series_family(family: Family) -> Result<()> {
    match family {
        Family::Binary | Family::Kary | Family::Forest | Family::PlaneForest => Ok(()),
        other => Err(Error::UnsupportedFamily(format!(
            "{} has no exponential generating function here",
            other.name()
        ))),
    }
}

/// Exponential generating function of the family's proper-vertex
/// polynomials, truncated at `order`: coefficient n is the degree-n
/// polynomial divided by n!.
pub fn build_series(family: Family, order: usize, k: Option<usize>) -> Result<SeriesX> {
    series_family(family)?;
    let coeffs = (0..=order)
        .map(|n| {
            let p = poly_closed(family, n, k)?;
            let inv_fact = BigRational::new(BigInt::one(), big_factorial(n));
            Ok(p.map(|c| BigRational::from_integer(c.clone())).scale(&inv_fact))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SeriesX::new(coeffs))
}

/// Verifies the family's differential equation coefficientwise, symbolically
/// in t, up to order N-1.
pub fn check_ode(family: Family, order: usize, k: Option<usize>) -> Result<CheckOutcome> {
    series_family(family)?;
    if order < 2 {
        return Err(Error::InvalidStructure("ode check needs order >= 2".into()));
    }
    let t = TPoly::x();
    let s = build_series(family, order, k)?;
    let ds = s.derivative(); // order N-1
    let s1 = s.truncate(order - 1);
    let rhs = match family {
        Family::Binary | Family::Kary => {
            // A' = k x A^(k-1) A' + t A^k
            let k = family.arity(k)?;
            let k_rat = Poly::constant(BigRational::from_integer(BigInt::from(k)));
            s1.pow_int(k - 1)
                .mul(&ds)?
                .mul_x()
                .scale(&k_rat)
                .add(&s1.pow_int(k).scale(&t))?
        }
        Family::Forest => {
            // F' = x F F' + t F^2
            s1.mul(&ds)?.mul_x().add(&s1.pow_int(2).scale(&t))?
        }
        Family::PlaneForest => {
            // P' = x P^2 P' + t P^3
            s1.pow_int(2)
                .mul(&ds)?
                .mul_x()
                .add(&s1.pow_int(3).scale(&t))?
        }
        _ => unreachable!(),
    };
    Ok(first_difference(&ds, &rhs))
}

/// Verifies the family's functional equation at an integer specialization
/// t = t0, in the cross-multiplied integer-exponent form. The base exponent
/// d (kt-t-k, t-1, or 2t-1) must be nonzero; degenerate values are rejected.
pub fn check_functional(
    family: Family,
    order: usize,
    t0: i64,
    k: Option<usize>,
) -> Result<CheckOutcome> {
    series_family(family)?;
    let (d, expr) = match family {
        Family::Binary | Family::Kary => {
            let k = family.arity(k)? as i64;
            (k * t0 - t0 - k, "kt - t - k")
        }
        Family::Forest => (t0 - 1, "t - 1"),
        Family::PlaneForest => (2 * t0 - 1, "2t - 1"),
        _ => unreachable!(),
    };
    if d == 0 {
        return Err(Error::degenerate(t0, expr));
    }
    let t0_rat = BigRational::from_integer(BigInt::from(t0));
    let s = build_series(family, order, k)?
        .scale(&Poly::one())
        .coeffs
        .iter()
        .map(|p| Poly::constant(p.eval(&t0_rat)))
        .collect::<Vec<_>>();
    let s = SeriesX::new(s);
    let base_power = match family {
        Family::Binary | Family::Kary => s.pow_int(family.arity(k)? - 1),
        Family::Forest => s.clone(),
        Family::PlaneForest => s.pow_int(2),
        _ => unreachable!(),
    };
    let d_poly = Poly::constant(BigRational::from_integer(BigInt::from(d)));
    let base = SeriesX::one(order).add(&base_power.mul_x().scale(&d_poly))?;
    // S^d = base^t0, with negative exponents moved to the other side
    let (d_pos, d_neg) = (d.max(0) as usize, (-d).max(0) as usize);
    let (t_pos, t_neg) = (t0.max(0) as usize, (-t0).max(0) as usize);
    let lhs = s.pow_int(d_pos).mul(&base.pow_int(t_neg))?;
    let rhs = s.pow_int(d_neg).mul(&base.pow_int(t_pos))?;
    Ok(first_difference(&lhs, &rhs))
}
