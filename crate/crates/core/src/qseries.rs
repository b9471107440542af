//! Truncated q-expansions with exact coefficients.

use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{common_denominator, int, vec_zero, Rational};

/// A q-expansion `sum a_m q^m` known exactly for every `m <= prec`.
///
/// The coefficient vector always has length `prec + 1`. Binary operations
/// truncate to the smaller precision of their operands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QSeries {
    coeffs: Vec<Rational>,
}

impl QSeries {
    /// Builds a series from its coefficients; `prec = coeffs.len() - 1`.
    ///
    /// Panics on an empty vector: a series carries at least its constant term.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a q-series needs at least one coefficient");
        QSeries { coeffs }
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Self::new(coeffs.into_iter().map(int).collect())
    }

    pub fn zero(prec: usize) -> Self {
        QSeries { coeffs: vec_zero(prec + 1) }
    }

    pub fn one(prec: usize) -> Self {
        Self::constant(Rational::one(), prec)
    }

    pub fn constant(c: Rational, prec: usize) -> Self {
        let mut s = Self::zero(prec);
        s.coeffs[0] = c;
        s
    }

    /// `c * q^m`, zero if `m > prec`.
    pub fn monomial(c: Rational, m: usize, prec: usize) -> Self {
        let mut s = Self::zero(prec);
        if m <= prec {
            s.coeffs[m] = c;
        }
        s
    }

    pub fn prec(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `q^m`. Panics past the precision.
    pub fn coeff(&self, m: usize) -> &Rational {
        &self.coeffs[m]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, prec: usize) -> Self {
        let prec = prec.min(self.prec());
        QSeries { coeffs: self.coeffs[..=prec].to_vec() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// `D = q d/dq`: the coefficient of `q^m` is multiplied by `m`.
    pub fn derivative(&self) -> Self {
        self.derivative_pow(1)
    }

    /// `D^r`, multiplying the coefficient of `q^m` by `m^r`.
    pub fn derivative_pow(&self, r: u32) -> Self {
        if r == 0 {
            return self.clone();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(m, a)| {
                if a.is_zero() {
                    a.clone()
                } else {
                    a * Rational::from_integer(num_traits::pow(BigInt::from(m), r as usize))
                }
            })
            .collect();
        QSeries { coeffs }
    }

    /// Divides by the first nonzero coefficient, returning the normalized
    /// series together with that coefficient.
    pub fn normalize(&self) -> Result<(QSeries, Rational)> {
        let lead = self.valuation().ok_or(Error::ZeroSeries)?;
        let c = self.coeffs[lead].clone();
        Ok((self.scale(&c.recip()), c))
    }

    /// `self^e` at the precision of `self`.
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = QSeries::one(self.prec());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Rescales to integers: returns `(ints, den)` with `a_m = ints[m] / den`.
    fn integer_scaled(&self) -> (Vec<BigInt>, BigInt) {
        let den = common_denominator(&self.coeffs);
        let ints = self
            .coeffs
            .iter()
            .map(|a| {
                if a.denom() == &den {
                    a.numer().clone()
                } else {
                    a.numer() * (&den / a.denom())
                }
            })
            .collect();
        (ints, den)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect();
        QSeries { coeffs }
    }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

/// Truncated Cauchy product. Coefficients are cleared to integers first so
/// the quadratic inner loop runs on `BigInt`; the result is identical to the
/// rational schoolbook product.
impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        let prec = self.prec().min(rhs.prec());
        let (a, da) = self.integer_scaled();
        let (b, db) = rhs.integer_scaled();
        let den = da * db;
        let a_support: Vec<usize> = (0..=prec).filter(|&i| !a[i].is_zero()).collect();
        let mut out = Vec::with_capacity(prec + 1);
        for m in 0..=prec {
            let mut acc = BigInt::zero();
            for &i in a_support.iter().take_while(|&&i| i <= m) {
                let bj = &b[m - i];
                if !bj.is_zero() {
                    acc += &a[i] * bj;
                }
            }
            out.push(Rational::new(acc, den.clone()));
        }
        QSeries { coeffs: out }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for QSeries {
            type Output = QSeries;
            fn $method(self, rhs: QSeries) -> QSeries {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// A q-series carrying the weight of the form it represents, and an optional
/// bound on its depth when it is quasimodular.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedSeries {
    pub series: QSeries,
    pub weight: u32,
    pub depth: Option<usize>,
}

impl GradedSeries {
    pub fn new(series: QSeries, weight: u32) -> Self {
        GradedSeries { series, weight, depth: None }
    }

    pub fn with_depth(series: QSeries, weight: u32, depth: usize) -> Self {
        GradedSeries { series, weight, depth: Some(depth) }
    }

    pub fn prec(&self) -> usize {
        self.series.prec()
    }

    pub fn coeff(&self, m: usize) -> &Rational {
        self.series.coeff(m)
    }

    /// `D` raises the weight by two and the depth by at most one.
    pub fn derivative(&self) -> Self {
        self.derivative_pow(1)
    }

    pub fn derivative_pow(&self, r: u32) -> Self {
        GradedSeries {
            series: self.series.derivative_pow(r),
            weight: self.weight + 2 * r,
            depth: self.depth.map(|p| p + r as usize),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        GradedSeries { series: self.series.scale(c), ..self.clone() }
    }

    pub fn truncate(&self, prec: usize) -> Self {
        GradedSeries { series: self.series.truncate(prec), ..self.clone() }
    }

    /// Product; weights and depths add.
    pub fn mul(&self, other: &GradedSeries) -> GradedSeries {
        GradedSeries {
            series: &self.series * &other.series,
            weight: self.weight + other.weight,
            depth: match (self.depth, other.depth) {
                (Some(a), Some(b)) => Some(a + b),
                _ => None,
            },
        }
    }
}
