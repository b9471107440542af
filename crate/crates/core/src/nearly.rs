//! Nearly holomorphic forms as polynomials in `Y = 1/(pi * Im z)`.
//!
//! With this scaling every operator of interest has rational coefficients:
//!
//! * `E2* = E2 - 3Y`
//! * `D(Y) = Y^2 / 4`
//! * `delta_k F = D F - (k/4) Y F`
//!
//! Under `z -> (nz + bd)/d^2` the variable transforms as `Y -> (d^2/n) Y`,
//! which is what [`crate::hecke::hecke_nearly`] uses per component.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{int, solve_linear, Rational};
use crate::forms::{eisenstein, modular_basis};
use crate::qseries::{GradedSeries, QSeries};

/// Label recorded alongside serialized forms.
pub const Y_CONVENTION: &str = "Y=1/(pi*Im z)";

/// `sum_r Y^r f_r` with holomorphic q-series components, of a given weight.
///
/// Trailing zero components are dropped, so the top component is nonzero
/// unless the form has depth 0. All components share one precision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YPolyForm {
    components: Vec<QSeries>,
    weight: u32,
}

impl YPolyForm {
    pub fn new(components: Vec<QSeries>, weight: u32) -> Self {
        assert!(!components.is_empty(), "a Y-polynomial needs a constant component");
        let prec = components.iter().map(QSeries::prec).min().unwrap();
        let mut components: Vec<QSeries> = components.into_iter().map(|c| c.truncate(prec)).collect();
        while components.len() > 1 && components.last().is_some_and(QSeries::is_zero) {
            components.pop();
        }
        YPolyForm { components, weight }
    }

    pub fn holomorphic(f: &GradedSeries) -> Self {
        YPolyForm { components: alloc::vec![f.series.clone()], weight: f.weight }
    }

    pub fn zero(weight: u32, prec: usize) -> Self {
        Self::new(alloc::vec![QSeries::zero(prec)], weight)
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn depth(&self) -> usize {
        self.components.len() - 1
    }

    pub fn prec(&self) -> usize {
        self.components[0].prec()
    }

    pub fn components(&self) -> &[QSeries] {
        &self.components
    }

    /// Coefficient series of `Y^r` (zero past the depth).
    pub fn component(&self, r: usize) -> QSeries {
        self.components.get(r).cloned().unwrap_or_else(|| QSeries::zero(self.prec()))
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(QSeries::is_zero)
    }

    /// Nonzero forms should satisfy `depth <= weight / 2`; returns the
    /// offending `(depth, weight)` otherwise.
    pub fn depth_warning(&self) -> Option<(usize, u32)> {
        (!self.is_zero() && 2 * self.depth() > self.weight as usize).then_some((self.depth(), self.weight))
    }

    fn combine(&self, other: &Self, op: impl Fn(&QSeries, &QSeries) -> QSeries) -> Self {
        let len = self.components.len().max(other.components.len());
        let comps = (0..len).map(|r| op(&self.component(r), &other.component(r))).collect();
        Self::new(comps, self.weight)
    }

    /// Sum; the weight of `self` is kept.
    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.components.iter().map(|f| f.scale(c)).collect(), self.weight)
    }

    /// Product as polynomials in `Y`; weights add.
    pub fn mul(&self, other: &Self) -> Self {
        let prec = self.prec().min(other.prec());
        let mut comps: Vec<QSeries> = (0..self.components.len() + other.components.len() - 1)
            .map(|_| QSeries::zero(prec))
            .collect();
        for (i, a) in self.components.iter().enumerate() {
            for (j, b) in other.components.iter().enumerate() {
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                comps[i + j] = &comps[i + j] + &(a * b);
            }
        }
        Self::new(comps, self.weight + other.weight)
    }

    /// `D = q d/dq` extended to `Y` by `D(Y) = Y^2/4`. Raises weight by 2.
    pub fn derivative(&self) -> Self {
        let prec = self.prec();
        let mut comps: Vec<QSeries> = (0..=self.components.len()).map(|_| QSeries::zero(prec)).collect();
        for (r, f) in self.components.iter().enumerate() {
            comps[r] = &comps[r] + &f.derivative();
            if r > 0 {
                let c = Rational::new((r as i64).into(), 4.into());
                comps[r + 1] = &comps[r + 1] + &f.scale(&c);
            }
        }
        Self::new(comps, self.weight + 2)
    }

    /// Multiplies by `Y` (no weight change).
    fn shift_y(&self) -> Self {
        let mut comps = Vec::with_capacity(self.components.len() + 1);
        comps.push(QSeries::zero(self.prec()));
        comps.extend(self.components.iter().cloned());
        Self::new(comps, self.weight)
    }
}

/// Maass-Shimura operator `delta_k F = D F - (k/4) Y F`, of weight `k + 2`.
pub fn maass_shimura(f: &YPolyForm) -> YPolyForm {
    let k = f.weight as i64;
    let correction = f.shift_y().scale(&Rational::new(k.into(), 4.into()));
    f.derivative().sub(&correction)
}

/// `E2* = E2 - 3Y`, weight 2 and depth 1.
pub fn e2_star(prec: usize) -> YPolyForm {
    let e2 = eisenstein(2, prec).expect("weight 2").series;
    YPolyForm::new(alloc::vec![e2, QSeries::constant(int(-3), prec)], 2)
}

/// The `Y^0` component, which is a quasimodular form of the same weight.
pub fn constant_term(f: &YPolyForm) -> GradedSeries {
    GradedSeries::with_depth(f.components[0].clone(), f.weight, f.depth())
}

/// Extra rows beyond the number of unknowns in a decomposition solve.
pub const DECOMPOSITION_MARGIN: usize = 10;

/// Writes a quasimodular `f` of weight `k` as `sum_{r <= p} D^r(f_r)` with
/// `f_r` in `M_{k-2r}`, requiring `p < k/2`.
///
/// All `D^r(E4^a E6^b)` are stacked into one linear system over the full
/// precision window. Returns `Ok(None)` when the system is inconsistent,
/// i.e. `f` does not have depth at most `p`.
pub fn quasimodular_decompose(f: &GradedSeries, p: usize) -> Result<Option<Vec<(usize, GradedSeries)>>> {
    let k = f.weight;
    if k % 2 != 0 {
        return Err(Error::BadWeight(k as i64, 2));
    }
    if 2 * p >= k as usize {
        return Err(Error::DepthTooLarge { depth: p, weight: k });
    }
    let prec = f.prec();
    let blocks: Vec<(usize, Vec<GradedSeries>)> =
        (0..=p).map(|r| (r, modular_basis(k - 2 * r as u32, prec))).collect();
    let columns: Vec<QSeries> = blocks
        .iter()
        .flat_map(|(r, basis)| basis.iter().map(move |b| b.series.derivative_pow(*r as u32)))
        .collect();
    if columns.is_empty() {
        return Ok(if f.series.is_zero() { Some(zero_parts(&blocks, k, prec)) } else { None });
    }
    let needed = columns.len() + DECOMPOSITION_MARGIN;
    if prec + 1 < needed {
        return Err(Error::InsufficientPrecision { needed: needed - 1, available: prec });
    }
    let rows: Vec<Vec<Rational>> =
        (0..=prec).map(|m| columns.iter().map(|c| c.coeff(m).clone()).collect()).collect();
    let Some(coords) = solve_linear(&rows, f.series.coeffs())? else {
        return Ok(None);
    };

    let mut coords = coords.into_iter();
    let parts = blocks
        .iter()
        .map(|(r, basis)| {
            let mut acc = QSeries::zero(prec);
            for b in basis {
                let c = coords.next().expect("one coordinate per column");
                if !c.is_zero() {
                    acc = &acc + &b.series.scale(&c);
                }
            }
            (*r, GradedSeries::with_depth(acc, k - 2 * *r as u32, 0))
        })
        .collect();
    Ok(Some(parts))
}

fn zero_parts(blocks: &[(usize, Vec<GradedSeries>)], k: u32, prec: usize) -> Vec<(usize, GradedSeries)> {
    blocks
        .iter()
        .map(|(r, _)| (*r, GradedSeries::with_depth(QSeries::zero(prec), k - 2 * *r as u32, 0)))
        .collect()
}

/// `sum_r D^r(f_r)`, the inverse of [`quasimodular_decompose`].
pub fn reassemble(parts: &[(usize, GradedSeries)], prec: usize) -> QSeries {
    parts.iter().fold(QSeries::zero(prec), |acc, (r, f)| &acc + &f.series.derivative_pow(*r as u32))
}
