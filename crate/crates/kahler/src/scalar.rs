//! Coefficient backends for multivector arithmetic.
//!
//! Two backends implement the same [`Scalar`] contract: exact complex
//! rationals for proof-by-computation, and complex doubles for field
//! calculus. Exact comparisons ignore the tolerance argument; float
//! comparisons use it.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use std::fmt::Debug;

/// Complex double-precision coefficient.
pub type Cf64 = Complex<f64>;
/// Complex rational coefficient (exact backend).
pub type CRat = Complex<BigRational>;

/// Complex coefficient contract shared by the exact and float backends.
pub trait Scalar: Clone + PartialEq + Debug + Send + Sync + 'static {
    /// True when arithmetic is exact and equality is decidable.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    /// The imaginary unit.
    fn i() -> Self;
    fn from_int(n: i64) -> Self;
    /// `p/q`; panics when `q == 0`.
    fn from_ratio(p: i64, q: i64) -> Self;
    /// Build a real value from decimal digit strings: integer part plus
    /// either fractional digits or a denominator (arbitrary length).
    /// Returns `None` on a zero denominator or unparseable digits.
    fn from_digits(int: &str, frac: Option<&str>, den: Option<&str>) -> Option<Self>;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Field division; caller guarantees `rhs != 0`.
    fn div(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Complex conjugate.
    fn conj(&self) -> Self;
    /// Real part, as a real scalar.
    fn re(&self) -> Self;
    /// Imaginary part, as a real scalar.
    fn im(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// Complex modulus as `f64`, for norms and report values.
    fn abs(&self) -> f64;
    fn to_c64(&self) -> Cf64;
    /// Exact backend: `==`. Float backend: modulus of the difference `<= tol`.
    fn approx_eq(&self, rhs: &Self, tol: f64) -> bool;
    /// Random real coefficient: uniform on [-1,1] (float) or p/q with
    /// |p|,|q| <= 16 (exact).
    fn random_real<R: Rng + ?Sized>(rng: &mut R) -> Self;
    fn random_complex<R: Rng + ?Sized>(rng: &mut R) -> Self;
    /// Render in the multivector literal grammar: a real number or `(re,im)`.
    fn format_coeff(&self) -> String;
}

fn fmt_f64(v: f64) -> String {
    // `{}` on f64 prints the shortest decimal that round-trips and never
    // uses exponent notation, which the literal grammar does not allow.
    format!("{}", v)
}

impl Scalar for Cf64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        Complex::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex::new(1.0, 0.0)
    }
    fn i() -> Self {
        Complex::new(0.0, 1.0)
    }
    fn from_int(n: i64) -> Self {
        Complex::new(n as f64, 0.0)
    }
    fn from_ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Complex::new(p as f64 / q as f64, 0.0)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        Complex::conj(self)
    }
    fn re(&self) -> Self {
        Complex::new(self.re, 0.0)
    }
    fn im(&self) -> Self {
        Complex::new(self.im, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn abs(&self) -> f64 {
        self.norm()
    }
    fn to_c64(&self) -> Cf64 {
        *self
    }
    fn approx_eq(&self, rhs: &Self, tol: f64) -> bool {
        (self - rhs).norm() <= tol
    }
    fn random_real<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Complex::new(rng.gen_range(-1.0..=1.0), 0.0)
    }
    fn random_complex<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Complex::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0))
    }
    fn format_coeff(&self) -> String {
        if self.im == 0.0 {
            fmt_f64(self.re)
        } else {
            format!("({},{})", fmt_f64(self.re), fmt_f64(self.im))
        }
    }
}

fn big_ratio(p: i64, q: i64) -> BigRational {
    assert!(q != 0, "zero denominator");
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn fmt_rat(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Scalar for CRat {
    const EXACT: bool = true;

    fn zero() -> Self {
        Complex::new(BigRational::zero(), BigRational::zero())
    }
    fn one() -> Self {
        Complex::new(BigRational::one(), BigRational::zero())
    }
    fn i() -> Self {
        Complex::new(BigRational::zero(), BigRational::one())
    }
    fn from_int(n: i64) -> Self {
        Complex::new(big_ratio(n, 1), BigRational::zero())
    }
    fn from_ratio(p: i64, q: i64) -> Self {
        Complex::new(big_ratio(p, q), BigRational::zero())
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }
    fn re(&self) -> Self {
        Complex::new(self.re.clone(), BigRational::zero())
    }
    fn im(&self) -> Self {
        Complex::new(self.im.clone(), BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn abs(&self) -> f64 {
        let re = self.re.to_f64().unwrap_or(f64::NAN);
        let im = self.im.to_f64().unwrap_or(f64::NAN);
        re.hypot(im)
    }
    fn to_c64(&self) -> Cf64 {
        Complex::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
    fn approx_eq(&self, rhs: &Self, _tol: f64) -> bool {
        self == rhs
    }
    fn random_real<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let p = rng.gen_range(-16i64..=16);
        let q = rng.gen_range(1i64..=16);
        Self::from_ratio(p, q)
    }
    fn random_complex<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let re = Self::random_real(rng);
        let im = Self::random_real(rng);
        re.add(&Self::i().mul(&im))
    }
    fn format_coeff(&self) -> String {
        if self.im.is_zero() {
            fmt_rat(&self.re)
        } else {
            format!("({},{})", fmt_rat(&self.re), fmt_rat(&self.im))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_ratio_arithmetic_has_no_rounding() {
        let third = CRat::from_ratio(1, 3);
        let sum = third.add(&third).add(&third);
        assert_eq!(sum, CRat::one());
    }

    #[test]
    fn float_third_does_round() {
        let third = Cf64::from_ratio(1, 3);
        let sum = third.add(&third).add(&third);
        assert!(sum.approx_eq(&Cf64::one(), 1e-12));
    }

    #[test]
    fn conj_and_parts() {
        let z = Cf64::new(2.0, -3.0);
        assert_eq!(z.conj(), Cf64::new(2.0, 3.0));
        assert_eq!(z.re(), Cf64::new(2.0, 0.0));
        assert_eq!(z.im(), Cf64::new(-3.0, 0.0));
    }

    #[test]
    fn coeff_formatting() {
        assert_eq!(CRat::from_ratio(1, 4).format_coeff(), "1/4");
        assert_eq!(CRat::from_int(-2).format_coeff(), "-2");
        assert_eq!(Cf64::new(0.5, 0.0).format_coeff(), "0.5");
        assert_eq!(Cf64::new(0.0, 1.0).format_coeff(), "(0,1)");
    }
}
