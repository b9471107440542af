//! Level-one forms: Eisenstein series, monomial bases of `M_k`, the
//! normalized cusp forms `Delta_k`, polynomials in `E2, E4, E6`, and exact
//! membership tests for `M_k`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{bernoulli, int, sigma, solve_linear, Rational};
use crate::qseries::{GradedSeries, QSeries};

/// Extra rows beyond `dim M_k` required before a membership verdict is given.
pub const MEMBERSHIP_MARGIN: usize = 10;

/// Weights with a one-dimensional cusp space.
pub const CUSP_WEIGHTS: [u32; 6] = [12, 16, 18, 20, 22, 26];

/// `E_k = 1 - (2k/B_k) sum sigma_{k-1}(m) q^m` for even `k >= 2`.
pub fn eisenstein(k: u32, prec: usize) -> Result<GradedSeries> {
    if k < 2 || k % 2 != 0 {
        return Err(Error::BadWeight(k as i64, 2));
    }
    let factor = -(int(2 * k as i64) / bernoulli(k)?);
    let mut coeffs = Vec::with_capacity(prec + 1);
    coeffs.push(Rational::one());
    for m in 1..=prec as u64 {
        coeffs.push(&factor * Rational::from_integer(sigma(k - 1, m)?));
    }
    let depth = if k == 2 { 1 } else { 0 };
    Ok(GradedSeries::with_depth(QSeries::new(coeffs), k, depth))
}

/// Exponent pairs `(a, b)` with `4a + 6b = k`, `a` descending.
pub fn monomial_exponents(k: u32) -> Vec<(u32, u32)> {
    if k % 2 != 0 {
        return Vec::new();
    }
    (0..=k / 4)
        .rev()
        .filter_map(|a| {
            let rest = k - 4 * a;
            (rest % 6 == 0).then_some((a, rest / 6))
        })
        .collect()
}

/// `dim M_k`, counted as the number of monomials `E4^a E6^b` of weight `k`.
pub fn dim_modular(k: u32) -> usize {
    monomial_exponents(k).len()
}

/// `dim S_k` for even `k >= 4` (zero otherwise).
pub fn dim_cusp(k: u32) -> usize {
    if k < 4 || k % 2 != 0 {
        0
    } else {
        dim_modular(k) - 1
    }
}

/// The products `E4^a E6^b` spanning `M_k`, in order of descending `a`.
pub fn monomial_basis(k: u32, prec: usize) -> Result<Vec<GradedSeries>> {
    if k < 4 || k % 2 != 0 {
        return Err(Error::BadWeight(k as i64, 4));
    }
    Ok(modular_basis(k, prec))
}

/// Like [`monomial_basis`] but total on even weights: `M_0 = C`, `M_2 = 0`.
pub(crate) fn modular_basis(k: u32, prec: usize) -> Vec<GradedSeries> {
    let exps = monomial_exponents(k);
    if exps.is_empty() {
        return Vec::new();
    }
    let e4 = eisenstein(4, prec).expect("weight 4").series;
    let e6 = eisenstein(6, prec).expect("weight 6").series;
    let max_a = exps[0].0;
    let max_b = exps.last().map_or(0, |e| e.1);
    let e4_pows = powers(&e4, max_a);
    let e6_pows = powers(&e6, max_b);
    exps.iter()
        .map(|&(a, b)| {
            let s = &e4_pows[a as usize] * &e6_pows[b as usize];
            GradedSeries::with_depth(s, k, 0)
        })
        .collect()
}

fn powers(f: &QSeries, max: u32) -> Vec<QSeries> {
    let mut out = Vec::with_capacity(max as usize + 1);
    out.push(QSeries::one(f.prec()));
    for i in 1..=max as usize {
        let next = &out[i - 1] * f;
        out.push(next);
    }
    out
}

/// The normalized cusp form `Delta_k` for `k` in [`CUSP_WEIGHTS`].
///
/// Found by solving for the combination of the monomial basis with constant
/// term 0 and `q`-coefficient 1. No product identity is used.
pub fn cusp_delta(k: u32, prec: usize) -> Result<GradedSeries> {
    if !CUSP_WEIGHTS.contains(&k) {
        return Err(Error::NotCuspWeight(k));
    }
    if prec < 1 {
        return Err(Error::InsufficientPrecision { needed: 1, available: prec });
    }
    let basis = modular_basis(k, prec);
    let coords = delta_coordinates(&basis)?;
    Ok(combine(&basis, &coords, k, prec))
}

/// Coordinates of `Delta_k` in the monomial basis.
pub(crate) fn delta_coordinates(basis: &[GradedSeries]) -> Result<Vec<Rational>> {
    let rows: Vec<Vec<Rational>> = (0..2)
        .map(|m| basis.iter().map(|b| b.coeff(m).clone()).collect())
        .collect();
    let coords = solve_linear(&rows, &[Rational::zero(), Rational::one()])?
        .expect("constant and linear coefficients of E4^a E6^b are independent");
    Ok(coords)
}

fn combine(basis: &[GradedSeries], coords: &[Rational], k: u32, prec: usize) -> GradedSeries {
    let mut acc = QSeries::zero(prec);
    for (b, c) in basis.iter().zip(coords) {
        if !c.is_zero() {
            acc = &acc + &b.series.scale(c);
        }
    }
    GradedSeries::with_depth(acc, k, 0)
}

/// Exact coordinates of `f` in `monomial_basis(k)`, or `None` when no
/// combination matches every available coefficient.
///
/// The whole precision window is used. At least `dim M_k + margin`
/// coefficients are required; anything less is an error rather than a
/// verdict.
pub fn is_modular_member(f: &QSeries, k: u32, margin: usize) -> Result<Option<Vec<Rational>>> {
    if k % 2 != 0 {
        return Err(Error::BadWeight(k as i64, 0));
    }
    let dim = dim_modular(k);
    if dim == 0 {
        return if f.is_zero() { Ok(Some(Vec::new())) } else { Err(Error::EmptySpace(k)) };
    }
    let needed = dim + margin;
    if f.prec() + 1 < needed {
        return Err(Error::InsufficientPrecision { needed: needed - 1, available: f.prec() });
    }
    let basis = modular_basis(k, f.prec());
    let rows: Vec<Vec<Rational>> = (0..=f.prec())
        .map(|m| basis.iter().map(|b| b.coeff(m).clone()).collect())
        .collect();
    solve_linear(&rows, f.coeffs())
}

/// One of the three generators of the quasimodular ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    E2,
    E4,
    E6,
}

impl Generator {
    pub fn weight(self) -> u32 {
        match self {
            Generator::E2 => 2,
            Generator::E4 => 4,
            Generator::E6 => 6,
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// Exponents of `(E2, E4, E6)` in a monomial.
pub type Exponents = [u32; 3];

fn monomial_weight(e: &Exponents) -> u32 {
    2 * e[0] + 4 * e[1] + 6 * e[2]
}

/// A polynomial in `E2, E4, E6` with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GenPoly {
    terms: BTreeMap<Exponents, Rational>,
}

impl GenPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, [0, 0, 0])
    }

    pub fn generator(g: Generator) -> Self {
        let mut e = [0; 3];
        e[g.index()] = 1;
        Self::term(Rational::one(), e)
    }

    pub fn term(c: Rational, exponents: Exponents) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponents, c);
        }
        GenPoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: Exponents, c: Rational) {
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &GenPoly) -> GenPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> GenPoly {
        GenPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn sub(&self, other: &GenPoly) -> GenPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> GenPoly {
        let mut out = GenPoly::zero();
        for (e, a) in &self.terms {
            out.add_term(*e, a * c);
        }
        out
    }

    pub fn mul(&self, other: &GenPoly) -> GenPoly {
        let mut out = GenPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]];
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> GenPoly {
        let mut acc = GenPoly::constant(Rational::one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Largest power of `E2` among the nonzero terms.
    pub fn depth(&self) -> usize {
        self.terms.keys().map(|e| e[0] as usize).max().unwrap_or(0)
    }

    /// Common weight of all monomials. The zero polynomial has weight 0.
    ///
    /// On failure the error lists every monomial whose weight differs from
    /// the largest weight present.
    pub fn homogeneous_weight(&self) -> Result<u32> {
        let Some(top) = self.terms.keys().map(monomial_weight).max() else {
            return Ok(0);
        };
        let offending: Vec<String> = self
            .terms
            .keys()
            .filter(|e| monomial_weight(e) != top)
            .map(|e| format!("{} (weight {})", MonomialDisplay(e), monomial_weight(e)))
            .collect();
        if offending.is_empty() {
            Ok(top)
        } else {
            Err(Error::NonHomogeneous(offending))
        }
    }
}

struct MonomialDisplay<'a>(&'a Exponents);

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, e) in ["E2", "E4", "E6"].iter().zip(self.0) {
            if *e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if *e == 1 {
                f.write_str(name)?;
            } else {
                write!(f, "{}^{}", name, e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Display for GenPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({})*{}", c, MonomialDisplay(e))?;
        }
        Ok(())
    }
}

/// Evaluates `p` on the q-expansions of `E2, E4, E6`.
pub fn eval_generator_poly(p: &GenPoly, prec: usize) -> QSeries {
    let mut max = [0u32; 3];
    for e in p.terms.keys() {
        for i in 0..3 {
            max[i] = max[i].max(e[i]);
        }
    }
    let gens = [2, 4, 6].map(|k| eisenstein(k, prec).expect("even weight").series);
    let pows: Vec<Vec<QSeries>> = (0..3).map(|i| powers(&gens[i], max[i])).collect();
    let mut acc = QSeries::zero(prec);
    for (e, c) in &p.terms {
        let mono = &(&pows[0][e[0] as usize] * &pows[1][e[1] as usize]) * &pows[2][e[2] as usize];
        acc = &acc + &mono.scale(c);
    }
    acc
}

/// Evaluates a weight-homogeneous `p`, tagging the weight and the depth
/// (highest power of `E2`).
pub fn eval_generator_poly_graded(p: &GenPoly, prec: usize) -> Result<GradedSeries> {
    let weight = p.homogeneous_weight()?;
    Ok(GradedSeries::with_depth(eval_generator_poly(p, prec), weight, p.depth()))
}

/// Named forms of the level-one catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FormName {
    E2,
    E4,
    E6,
    E8,
    E10,
    E14,
    Delta12,
    Delta16,
    Delta18,
    Delta20,
    Delta22,
    Delta26,
}

impl FormName {
    pub const ALL: [FormName; 12] = [
        FormName::E2,
        FormName::E4,
        FormName::E6,
        FormName::E8,
        FormName::E10,
        FormName::E14,
        FormName::Delta12,
        FormName::Delta16,
        FormName::Delta18,
        FormName::Delta20,
        FormName::Delta22,
        FormName::Delta26,
    ];

    pub fn weight(self) -> u32 {
        use FormName::*;
        match self {
            E2 => 2,
            E4 => 4,
            E6 => 6,
            E8 => 8,
            E10 => 10,
            E14 => 14,
            Delta12 => 12,
            Delta16 => 16,
            Delta18 => 18,
            Delta20 => 20,
            Delta22 => 22,
            Delta26 => 26,
        }
    }

    pub fn is_cusp(self) -> bool {
        self >= FormName::Delta12
    }

    /// Everything but `E2` is a genuine modular form.
    pub fn is_modular(self) -> bool {
        self != FormName::E2
    }

    pub fn as_str(self) -> &'static str {
        use FormName::*;
        match self {
            E2 => "E2",
            E4 => "E4",
            E6 => "E6",
            E8 => "E8",
            E10 => "E10",
            E14 => "E14",
            Delta12 => "Delta12",
            Delta16 => "Delta16",
            Delta18 => "Delta18",
            Delta20 => "Delta20",
            Delta22 => "Delta22",
            Delta26 => "Delta26",
        }
    }

    pub fn build(self, prec: usize) -> GradedSeries {
        if self.is_cusp() {
            cusp_delta(self.weight(), prec).expect("catalog cusp weight")
        } else {
            eisenstein(self.weight(), prec).expect("catalog Eisenstein weight")
        }
    }
}

impl fmt::Display for FormName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FormName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FormName::ALL
            .into_iter()
            .find(|n| n.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownForm(s.to_string()))
    }
}

/// Every catalog form expanded to a common precision.
#[derive(Debug, Clone)]
pub struct Catalog {
    prec: usize,
    forms: Vec<(FormName, GradedSeries)>,
}

impl Catalog {
    pub fn new(prec: usize) -> Self {
        let forms = FormName::ALL.into_iter().map(|n| (n, n.build(prec))).collect();
        Catalog { prec, forms }
    }

    pub fn prec(&self) -> usize {
        self.prec
    }

    pub fn get(&self, name: FormName) -> &GradedSeries {
        &self.forms[name as usize].1
    }

    pub fn iter(&self) -> impl Iterator<Item = (FormName, &GradedSeries)> {
        self.forms.iter().map(|(n, f)| (*n, f))
    }
}
