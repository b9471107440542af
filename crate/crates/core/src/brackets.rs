//! Rankin-Cohen brackets of level-one forms.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::exactmath::{binomial, Rational};
use crate::qseries::{GradedSeries, QSeries};

/// `[g, h]_m = sum_{r+s=m} (-1)^r C(m+k1-1, s) C(m+k2-1, r) D^r g D^s h`,
/// of weight `k1 + k2 + 2m`.
pub fn rankin_cohen(g: &GradedSeries, h: &GradedSeries, m: u32) -> GradedSeries {
    let (k1, k2) = (g.weight as u64, h.weight as u64);
    let m64 = m as u64;
    let prec = g.prec().min(h.prec());
    let g_derivs: Vec<QSeries> = (0..=m).map(|r| g.series.derivative_pow(r).truncate(prec)).collect();
    let h_derivs: Vec<QSeries> = (0..=m).map(|s| h.series.derivative_pow(s).truncate(prec)).collect();

    let mut acc = QSeries::zero(prec);
    for r in 0..=m {
        let s = m - r;
        let mut c = binomial(m64 + k1 - 1, s as i64) * binomial(m64 + k2 - 1, r as i64);
        if c.is_zero() {
            continue;
        }
        if r % 2 == 1 {
            c = -c;
        }
        let term = &g_derivs[r as usize] * &h_derivs[s as usize];
        acc = &acc + &term.scale(&Rational::from_integer(c));
    }
    GradedSeries::with_depth(acc, g.weight + h.weight + 2 * m, 0)
}
