//! Hecke operators and the eigenform test.
//!
//! On a weight-`k` q-expansion `sum a_m q^m`,
//!
//! ```text
//! (T_n f) = sum_m b_m q^m,   b_m = sum_{d | gcd(m, n)} d^(k-1) a_(mn/d^2)
//! ```
//!
//! which is the q-expansion of the slash-operator average over
//! `z -> (nz + bd)/d^2`. Only the weight enters, so the same formula acts on
//! quasimodular forms. For a nearly holomorphic form the `Y^r` component
//! behaves like a form of weight `k - 2r` scaled by `n^r`.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{divisors, gcd, rpow, Rational};
use crate::nearly::YPolyForm;
use crate::qseries::{GradedSeries, QSeries};

/// Default number of Hecke operators checked by the eigenform test.
pub const DEFAULT_BOUND: u64 = 10;
/// Default comparison window: coefficients `0..=window` are compared.
pub const DEFAULT_WINDOW: usize = 12;

/// Output of [`hecke`]: the image and, when `prec < n`, a note that only the
/// constant term survived.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeImage {
    pub form: GradedSeries,
    pub truncated: bool,
}

fn check_n(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::NonPositive { what: "Hecke index" })
    } else {
        Ok(())
    }
}

/// `n^scale_exp * T_n` with weight parameter `weight` on a bare q-series.
/// The result has precision `floor(prec / n)`.
fn hecke_series(f: &QSeries, weight: i64, n: u64, scale_exp: u32) -> QSeries {
    let prec = f.prec() / n as usize;
    let divs = divisors(n);
    let powers: Vec<Rational> = divs.iter().map(|&d| rpow(d as i64, weight - 1)).collect();
    let scale = rpow(n as i64, scale_exp as i64);
    let coeffs = (0..=prec)
        .map(|m| {
            let g = gcd(m as u64, n);
            let mut acc = Rational::zero();
            for (d, p) in divs.iter().zip(&powers) {
                if g % d != 0 {
                    continue;
                }
                let idx = (m as u64 * n / (d * d)) as usize;
                let a = f.coeff(idx);
                if !a.is_zero() {
                    acc += p * a;
                }
            }
            if scale_exp > 0 {
                acc *= &scale;
            }
            acc
        })
        .collect();
    QSeries::new(coeffs)
}

/// `T_n` on a weight-tagged series. Weight and depth tag are unchanged.
pub fn hecke(f: &GradedSeries, n: u64) -> Result<HeckeImage> {
    check_n(n)?;
    let series = hecke_series(&f.series, f.weight as i64, n, 0);
    Ok(HeckeImage {
        form: GradedSeries { series, ..f.clone() },
        truncated: f.prec() < n as usize,
    })
}

/// `T_n` on a Y-polynomial: component `r` is mapped by
/// `n^r * T_n^{(weight - 2r)}`.
pub fn hecke_nearly(f: &YPolyForm, n: u64) -> Result<YPolyForm> {
    check_n(n)?;
    let k = f.weight() as i64;
    let comps = f
        .components()
        .iter()
        .enumerate()
        .map(|(r, c)| hecke_series(c, k - 2 * r as i64, n, r as u32))
        .collect();
    Ok(YPolyForm::new(comps, f.weight()))
}

/// A coefficient where `T_n f` and `lambda_n f` disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub n: u64,
    /// Power of `Y` (always 0 for holomorphic input).
    pub component: usize,
    pub exponent: usize,
    /// `lambda_n` times the coefficient of `f`.
    pub expected: Rational,
    /// The coefficient of `T_n f`.
    pub actual: Rational,
}

/// Outcome of [`eigenform_test`].
///
/// A positive verdict only means `T_n f = lambda_n f` on the compared
/// window for every `n <= tested_bound`; it is a necessary condition for
/// being an eigenform, not a proof.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenReport {
    pub is_eigen_up_to_bound: bool,
    pub tested_bound: u64,
    pub window: usize,
    pub eigenvalues: Vec<(u64, Rational)>,
    pub first_violation: Option<Violation>,
    pub precision_used: usize,
    /// Precision of each `T_n f`, i.e. `floor(prec / n)`.
    pub hecke_precisions: Vec<(u64, usize)>,
}

impl EigenReport {
    pub fn eigenvalue(&self, n: u64) -> Option<&Rational> {
        self.eigenvalues.iter().find(|(m, _)| *m == n).map(|(_, l)| l)
    }
}

/// Tests `T_n f = lambda_n f` for `n = 1..=bound` on coefficients `0..=window`.
///
/// `lambda_n` is read off the first nonzero coefficient of `f`; every other
/// coefficient in the window (including the constant term) must agree with it.
pub fn eigenform_test(f: &GradedSeries, bound: u64, window: usize) -> Result<EigenReport> {
    eigenform_test_nearly(&YPolyForm::holomorphic(f), bound, window)
}

/// [`eigenform_test`] for nearly holomorphic forms; all `Y`-components are
/// compared against one eigenvalue.
pub fn eigenform_test_nearly(f: &YPolyForm, bound: u64, window: usize) -> Result<EigenReport> {
    check_n(bound)?;
    let needed = bound as usize * window;
    if f.prec() < needed {
        return Err(Error::InsufficientPrecision { needed, available: f.prec() });
    }
    let (lead_r, lead_m) = f
        .components()
        .iter()
        .enumerate()
        .find_map(|(r, c)| c.coeffs()[..=window].iter().position(|a| !a.is_zero()).map(|m| (r, m)))
        .ok_or(Error::ZeroSeries)?;
    let lead = f.components()[lead_r].coeff(lead_m).clone();

    let mut report = EigenReport {
        is_eigen_up_to_bound: true,
        tested_bound: bound,
        window,
        eigenvalues: Vec::new(),
        first_violation: None,
        precision_used: f.prec(),
        hecke_precisions: Vec::new(),
    };
    for n in 1..=bound {
        let image = hecke_nearly(f, n)?;
        report.hecke_precisions.push((n, image.prec()));
        let lambda = image.component(lead_r).coeff(lead_m) / &lead;
        let depth = f.depth().max(image.depth());
        for r in 0..=depth {
            let src = f.component(r);
            let img = image.component(r);
            for m in 0..=window {
                let expected = &lambda * src.coeff(m);
                if img.coeff(m) != &expected {
                    report.is_eigen_up_to_bound = false;
                    report.first_violation = Some(Violation {
                        n,
                        component: r,
                        exponent: m,
                        expected,
                        actual: img.coeff(m).clone(),
                    });
                    return Ok(report);
                }
            }
        }
        report.eigenvalues.push((n, lambda));
    }
    Ok(report)
}

/// Defects of the normalized-eigenform relations `a_6 = a_2 a_3` and
/// `a_4 = a_2^2 - 2^(k-1)` for `f` scaled so that `a_1 = 1`.
///
/// Both are zero for a Hecke eigenform of weight `k` with `a_1 != 0`.
pub fn normalized_relation_defects(f: &GradedSeries) -> Result<(Rational, Rational)> {
    if f.prec() < 6 {
        return Err(Error::InsufficientPrecision { needed: 6, available: f.prec() });
    }
    let a1 = f.coeff(1);
    if a1.is_zero() {
        return Err(Error::ZeroSeries);
    }
    let a = |m: usize| f.coeff(m) / a1;
    let six = a(6) - a(2) * a(3);
    let four = a(4) - (a(2) * a(2) - rpow(2, f.weight as i64 - 1));
    Ok((six, four))
}

/// `lambda_n = sigma_{k-1}(n)` helper used by tests and reports.
pub fn eisenstein_eigenvalue(k: u32, n: u64) -> Rational {
    Rational::from_integer(crate::exactmath::sigma(k - 1, n).expect("n >= 1"))
}
