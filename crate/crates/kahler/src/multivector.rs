//! Nonhomogeneous complex exterior forms on R^{1,3} and their products.
//!
//! A [`MultiVector`] stores one coefficient per basis blade, so the
//! tensor components with ascending indices coincide with the stored
//! blade coefficients (the 1/k! of the alternating-sum convention is
//! absorbed). The central product follows the three rewriting rules
//! e^mu e^nu = e^mu^e^nu + g^{mu nu}, extended bilinearly; the Hodge
//! star and conjugations act gradewise.

use crate::blade::{tables, BladeIndex, BLADE_COUNT, DIM};
use crate::error::AlgebraError;
use crate::scalar::Scalar;
use rand::Rng;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A complex exterior form: 16 blade coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct MultiVector<S: Scalar> {
    coeffs: [S; 16],
}

impl<S: Scalar> MultiVector<S> {
    pub fn zero() -> Self {
        Self {
            coeffs: std::array::from_fn(|_| S::zero()),
        }
    }

    pub fn one() -> Self {
        Self::basis(BladeIndex::SCALAR)
    }

    /// The volume form e^0^e^1^e^2^e^3.
    pub fn volume() -> Self {
        Self::basis(BladeIndex::VOLUME)
    }

    pub fn basis(b: BladeIndex) -> Self {
        let mut mv = Self::zero();
        mv.coeffs[b.mask() as usize] = S::one();
        mv
    }

    /// The basis covector e^mu.
    pub fn e(mu: usize) -> Self {
        Self::basis(BladeIndex::covector(mu))
    }

    pub fn scalar(s: S) -> Self {
        let mut mv = Self::zero();
        mv.coeffs[0] = s;
        mv
    }

    pub fn from_int(n: i64) -> Self {
        Self::scalar(S::from_int(n))
    }

    pub fn from_terms(terms: &[(BladeIndex, S)]) -> Self {
        let mut mv = Self::zero();
        for (b, c) in terms {
            mv.coeffs[b.mask() as usize] = mv.coeffs[b.mask() as usize].add(c);
        }
        mv
    }

    pub fn coeff(&self, b: BladeIndex) -> &S {
        &self.coeffs[b.mask() as usize]
    }

    pub fn set(&mut self, b: BladeIndex, c: S) {
        self.coeffs[b.mask() as usize] = c;
    }

    pub fn coeffs(&self) -> &[S; 16] {
        &self.coeffs
    }

    pub fn map_coeffs(&self, f: impl Fn(&S) -> S) -> Self {
        Self {
            coeffs: std::array::from_fn(|i| f(&self.coeffs[i])),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map_coeffs(|x| x.mul(c))
    }

    /// Multiply by the imaginary unit.
    pub fn mul_i(&self) -> Self {
        self.scale(&S::i())
    }

    pub fn add_mv(&self, rhs: &Self) -> Self {
        Self {
            coeffs: std::array::from_fn(|i| self.coeffs[i].add(&rhs.coeffs[i])),
        }
    }

    pub fn sub_mv(&self, rhs: &Self) -> Self {
        Self {
            coeffs: std::array::from_fn(|i| self.coeffs[i].sub(&rhs.coeffs[i])),
        }
    }

    pub fn neg_mv(&self) -> Self {
        self.map_coeffs(|x| x.neg())
    }

    /// Central (Clifford) product.
    pub fn central(&self, rhs: &Self) -> Self {
        let t = tables();
        let mut out = Self::zero();
        for a in 0..BLADE_COUNT {
            if self.coeffs[a].is_zero() {
                continue;
            }
            for b in 0..BLADE_COUNT {
                if rhs.coeffs[b].is_zero() {
                    continue;
                }
                let sign = t.central[a][b];
                let c = a ^ b;
                let prod = self.coeffs[a].mul(&rhs.coeffs[b]);
                let term = if sign == 1 { prod } else { prod.neg() };
                out.coeffs[c] = out.coeffs[c].add(&term);
            }
        }
        out
    }

    /// Exterior product.
    pub fn wedge(&self, rhs: &Self) -> Self {
        let t = tables();
        let mut out = Self::zero();
        for a in 0..BLADE_COUNT {
            if self.coeffs[a].is_zero() {
                continue;
            }
            for b in 0..BLADE_COUNT {
                if rhs.coeffs[b].is_zero() {
                    continue;
                }
                let sign = t.wedge[a][b];
                if sign == 0 {
                    continue;
                }
                let c = a | b;
                let prod = self.coeffs[a].mul(&rhs.coeffs[b]);
                let term = if sign == 1 { prod } else { prod.neg() };
                out.coeffs[c] = out.coeffs[c].add(&term);
            }
        }
        out
    }

    /// Hodge star, extended linearly from the gradewise definition;
    /// satisfies star(star(U)) = (-1)^{k+1} U on grade k.
    pub fn star(&self) -> Self {
        let t = tables();
        let mut out = Self::zero();
        for a in 0..BLADE_COUNT {
            if self.coeffs[a].is_zero() {
                continue;
            }
            let (comp, sign) = t.hodge[a];
            let term = if sign == 1 {
                self.coeffs[a].clone()
            } else {
                self.coeffs[a].neg()
            };
            out.coeffs[comp as usize] = out.coeffs[comp as usize].add(&term);
        }
        out
    }

    /// Componentwise complex conjugation (bar).
    pub fn conj(&self) -> Self {
        self.map_coeffs(|x| x.conj())
    }

    /// The conjugation U* = (-1)^{k(k-1)/2} bar(U), an antiautomorphism of
    /// the central product.
    pub fn star_conj(&self) -> Self {
        let t = tables();
        let mut out = Self::zero();
        for a in 0..BLADE_COUNT {
            let grade = (a as u8).count_ones() as usize;
            let c = self.coeffs[a].conj();
            out.coeffs[a] = if t.star_conj_grade_sign[grade] == 1 {
                c
            } else {
                c.neg()
            };
        }
        out
    }

    /// Hermitian conjugation U^dagger = H U* H for a grade-1 H with H^2 = 1.
    pub fn dagger(&self, h: &Self) -> Result<Self, AlgebraError> {
        let sq = h.central(h);
        if !sq.approx_eq(&Self::one(), if S::EXACT { 0.0 } else { 1e-12 }) {
            return Err(AlgebraError::InvalidHermitizer {
                residual: sq.sub_mv(&Self::one()).norm_sup(),
            });
        }
        Ok(self.dagger_unchecked(h))
    }

    /// As [`Self::dagger`] but trusting H^2 = 1 (e.g. H from a validated
    /// generator set).
    pub fn dagger_unchecked(&self, h: &Self) -> Self {
        h.central(&self.star_conj()).central(h)
    }

    /// Trace: the scalar-blade coefficient. Linear, with Tr(UV - VU) = 0.
    pub fn trace(&self) -> S {
        self.coeffs[0].clone()
    }

    /// Projection onto grade k; rejects k > 4.
    pub fn grade_project(&self, k: usize) -> Result<Self, AlgebraError> {
        if k > DIM {
            return Err(AlgebraError::GradeOutOfRange { grade: k });
        }
        let mut out = Self::zero();
        for a in 0..BLADE_COUNT {
            if (a as u8).count_ones() as usize == k {
                out.coeffs[a] = self.coeffs[a].clone();
            }
        }
        Ok(out)
    }

    /// Grades 0, 2, 4.
    pub fn even(&self) -> Self {
        let mut out = Self::zero();
        for a in 0..BLADE_COUNT {
            if (a as u8).count_ones() % 2 == 0 {
                out.coeffs[a] = self.coeffs[a].clone();
            }
        }
        out
    }

    /// Grades 1, 3.
    pub fn odd(&self) -> Self {
        self.sub_mv(&self.even())
    }

    /// Grades present with a coefficient above `tol` in modulus.
    pub fn grades_present(&self, tol: f64) -> Vec<usize> {
        let mut present = [false; DIM + 1];
        for a in 0..BLADE_COUNT {
            if self.coeffs[a].abs() > tol {
                present[(a as u8).count_ones() as usize] = true;
            }
        }
        (0..=DIM).filter(|&k| present[k]).collect()
    }

    /// Sup norm over blade coefficients (complex modulus).
    pub fn norm_sup(&self) -> f64 {
        self.coeffs.iter().map(|c| c.abs()).fold(0.0, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Membership in Lambda rather than its complexification.
    pub fn is_real(&self, tol: f64) -> bool {
        self.coeffs
            .iter()
            .all(|c| if S::EXACT { c.im().is_zero() } else { c.im().abs() <= tol })
    }

    pub fn approx_eq(&self, rhs: &Self, tol: f64) -> bool {
        self.coeffs
            .iter()
            .zip(rhs.coeffs.iter())
            .all(|(a, b)| a.approx_eq(b, tol))
    }

    pub fn to_c64(&self) -> MultiVector<crate::scalar::Cf64> {
        MultiVector {
            coeffs: std::array::from_fn(|i| self.coeffs[i].to_c64()),
        }
    }

    /// Uniform random form with complex coefficients on every blade.
    pub fn random_complex<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self {
            coeffs: std::array::from_fn(|_| S::random_complex(rng)),
        }
    }

    /// Uniform random form with real coefficients on every blade.
    pub fn random_real<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self {
            coeffs: std::array::from_fn(|_| S::random_real(rng)),
        }
    }

    /// Random real form of homogeneous grade k.
    pub fn random_real_grade<R: Rng + ?Sized>(rng: &mut R, k: usize) -> Self {
        let mut mv = Self::zero();
        for b in BladeIndex::all() {
            if b.grade() == k {
                mv.set(b, S::random_real(rng));
            }
        }
        mv
    }

    /// Random real even form.
    pub fn random_real_even<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self::random_real(rng).even()
    }
}

impl<S: Scalar> Default for MultiVector<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> Add for &MultiVector<S> {
    type Output = MultiVector<S>;
    fn add(self, rhs: Self) -> MultiVector<S> {
        self.add_mv(rhs)
    }
}

impl<S: Scalar> Sub for &MultiVector<S> {
    type Output = MultiVector<S>;
    fn sub(self, rhs: Self) -> MultiVector<S> {
        self.sub_mv(rhs)
    }
}

impl<S: Scalar> Neg for &MultiVector<S> {
    type Output = MultiVector<S>;
    fn neg(self) -> MultiVector<S> {
        self.neg_mv()
    }
}

/// `*` is the central product.
impl<S: Scalar> Mul for &MultiVector<S> {
    type Output = MultiVector<S>;
    fn mul(self, rhs: Self) -> MultiVector<S> {
        self.central(rhs)
    }
}

impl<S: Scalar> fmt::Display for MultiVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::parse::format_multivector(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{CRat, Cf64};

    type Mq = MultiVector<CRat>;

    #[test]
    fn wedge_basis_cases() {
        let e1 = Mq::e(1);
        let e2 = Mq::e(2);
        let e12 = Mq::basis(BladeIndex::from_indices(&[1, 2]).unwrap());
        assert_eq!(e1.wedge(&e2), e12);
        assert_eq!(e2.wedge(&e1), e12.neg_mv());
        // grade overflow vanishes
        assert!(Mq::volume().wedge(&Mq::e(0)).is_zero());
    }

    #[test]
    fn central_product_examples() {
        let e0 = Mq::e(0);
        assert_eq!(e0.central(&e0), Mq::one());
        let e1 = Mq::e(1);
        let e2 = Mq::e(2);
        let e12 = Mq::basis(BladeIndex::from_indices(&[1, 2]).unwrap());
        assert_eq!(e1.central(&e2), e12);
        let e01 = Mq::basis(BladeIndex::from_indices(&[0, 1]).unwrap());
        assert_eq!(e01.central(&e01), Mq::one());
    }

    #[test]
    fn hodge_examples() {
        assert_eq!(Mq::one().star(), Mq::volume());
        assert_eq!(Mq::volume().star(), Mq::one().neg_mv());
        let e123 = Mq::basis(BladeIndex::from_indices(&[1, 2, 3]).unwrap());
        assert_eq!(Mq::e(0).star(), e123);
    }

    #[test]
    fn star_conj_examples() {
        assert_eq!(Mq::e(0).star_conj(), Mq::e(0));
        let e12 = Mq::basis(BladeIndex::from_indices(&[1, 2]).unwrap());
        assert_eq!(e12.star_conj(), e12.neg_mv());
        let i1 = Mq::one().mul_i();
        assert_eq!(i1.star_conj(), i1.neg_mv());
    }

    #[test]
    fn dagger_examples() {
        let h = Mq::e(0);
        assert_eq!(Mq::e(0).dagger(&h).unwrap(), Mq::e(0));
        assert_eq!(Mq::e(1).dagger(&h).unwrap(), Mq::e(1).neg_mv());
        // H with H^2 != 1 is rejected
        assert!(Mq::e(1).dagger(&Mq::e(1)).is_err());
    }

    #[test]
    fn grade_project_examples() {
        let u = Mq::one().add_mv(&Mq::e(0));
        assert_eq!(u.grade_project(0).unwrap(), Mq::one());
        assert_eq!(u.grade_project(1).unwrap(), Mq::e(0));
        assert!(u.grade_project(5).is_err());
        // idempotent, and the grades sum back
        let mut sum = Mq::zero();
        for k in 0..=4 {
            let g = u.grade_project(k).unwrap();
            assert_eq!(g.grade_project(k).unwrap(), g);
            sum = sum.add_mv(&g);
        }
        assert_eq!(sum, u);
    }

    #[test]
    fn trace_examples() {
        assert_eq!(Mq::one().trace(), CRat::one());
        let e12 = Mq::basis(BladeIndex::from_indices(&[1, 2]).unwrap());
        assert!(e12.trace().is_zero());
    }

    #[test]
    fn float_real_check_uses_tolerance() {
        let mut u = MultiVector::<Cf64>::e(2);
        u.set(BladeIndex::SCALAR, Cf64::new(0.0, 1e-15));
        assert!(u.is_real(1e-12));
        assert!(!u.is_real(1e-16));
    }
}
