//! Separation of normalized cusp eigenforms of different weights by their
//! first few coefficients.
//!
//! Two cuspidal eigenforms of different weights on `Gamma_0(N)` differ at
//! some `n <= 4 (log N + 1)^2`. At level one the bound is 4.

use alloc::format;
use alloc::vec::Vec;

use super::{CheckRecord, VerificationReport, Witness};
use crate::error::{Error, Result};
use crate::exactmath::{int, Rational};
use crate::forms::{cusp_delta, eisenstein, CUSP_WEIGHTS};

/// `4 (log N + 1)^2` at `N = 1`.
pub const LEVEL_ONE_SEPARATION_BOUND: usize = 4;

/// First `n <= bound` with `a_n(Delta_k) != a_n(Delta_12)`.
pub fn separating_index(k: u32, bound: usize) -> Result<Option<(usize, Rational, Rational)>> {
    let d12 = cusp_delta(12, bound)?;
    let dk = cusp_delta(k, bound)?;
    Ok((1..=bound).find(|&n| dk.coeff(n) != d12.coeff(n)).map(|n| (n, dk.coeff(n).clone(), d12.coeff(n).clone())))
}

/// Coefficients forced on a normalized cusp form `f` of any weight by
/// `E2 f` being an eigenform: `(n-1) a_n = sum_{i=1}^{n-1} e_i a_(n-i)`,
/// with `e_i` the coefficients of `E2` and `a_1 = 1`.
pub fn forced_coefficients(upto: usize) -> Vec<Rational> {
    let e2 = eisenstein(2, upto).expect("weight 2").series;
    let mut a = alloc::vec![int(0), int(1)];
    for n in 2..=upto {
        let mut acc = int(0);
        for i in 1..n {
            acc += e2.coeff(i) * &a[n - i];
        }
        a.push(acc / int(n as i64 - 1));
    }
    a.truncate(upto + 1);
    a
}

/// Checks every `Delta_k` with `k <= max_weight`, `k != 12`, against
/// `Delta_12` within the level-one bound, and that the coefficients forced
/// by `E2 f` being an eigenform are those of `Delta_12`.
pub fn ghitza_check(max_weight: u32) -> Result<VerificationReport> {
    if max_weight > 26 {
        return Err(Error::OutOfRange(format!("max weight {} exceeds 26", max_weight)));
    }
    let mut report = VerificationReport::new("ghitza");
    let bound = LEVEL_ONE_SEPARATION_BOUND;
    for k in CUSP_WEIGHTS.into_iter().filter(|&k| k != 12 && k <= max_weight) {
        let sep = separating_index(k, bound)?;
        let mut w = Witness::new().with("k", k).with("bound", bound);
        if let Some((n, ak, a12)) = &sep {
            w = w.with("n", *n).with("a_n(Delta_k)", ak).with("a_n(Delta_12)", a12);
        }
        report.push(CheckRecord::new(
            format!("ghitza:Delta{}-vs-Delta12", k),
            "cusp eigenforms of different weights differ at some n <= 4(log N + 1)^2",
            sep.is_some(),
            w,
        ));
    }

    let forced = forced_coefficients(4);
    let d12 = cusp_delta(12, 4)?;
    let expected = [int(-24), int(252), int(-1472)];
    let ok = forced[2..] == expected && d12.series.coeffs()[2..] == expected;
    report.push(CheckRecord::new(
        "ghitza:forced-coefficients",
        "E2 f eigen forces a_2 = -24, a_3 = 252, a_4 = -1472",
        ok,
        Witness::new().with("forced", forced[1..].to_vec()),
    ));
    Ok(report)
}
