//! Exhaustive scans for eigenform products `(D^r f)(D^s g)` and eigenform
//! Rankin-Cohen brackets over the level-one catalog.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{eigen_witness, CheckRecord, Factor, VerificationReport, Witness};
use crate::brackets::rankin_cohen;
use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::forms::{dim_cusp, is_modular_member, Catalog, FormName, MEMBERSHIP_MARGIN};
use crate::hecke::{eigenform_test, EigenReport, DEFAULT_BOUND, DEFAULT_WINDOW};
use crate::qseries::GradedSeries;

use FormName::*;

/// The sixteen products of two modular eigenforms that are again eigenforms,
/// with the form they equal.
pub const MODULAR_PRODUCT_IDENTITIES: [(FormName, FormName, FormName); 16] = [
    (E4, E4, E8),
    (E4, E6, E10),
    (E6, E8, E14),
    (E4, E10, E14),
    (E4, Delta12, Delta16),
    (E6, Delta12, Delta18),
    (E4, Delta16, Delta20),
    (E8, Delta12, Delta20),
    (E4, Delta18, Delta22),
    (E6, Delta16, Delta22),
    (E10, Delta12, Delta22),
    (E4, Delta22, Delta26),
    (E6, Delta20, Delta26),
    (E8, Delta18, Delta26),
    (E10, Delta16, Delta26),
    (E14, Delta12, Delta26),
];

/// Products involving a derivative or `E2` that are eigenforms:
/// `D(E4) E4 = D(E8)/2` and `E2 Delta12 = D(Delta12)`.
pub const QUASIMODULAR_PRODUCT_HITS: [(Factor, Factor); 2] = [
    (Factor::new(E4, 0), Factor::new(E4, 1)),
    (Factor::new(E2, 0), Factor::new(Delta12, 0)),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_weight: u32,
    /// Largest derivative order `R` (products) or bracket index `M` (brackets).
    pub max_deriv: u32,
    pub bound: u64,
    pub window: usize,
    pub prec: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_weight: 26,
            max_deriv: 1,
            bound: DEFAULT_BOUND,
            window: DEFAULT_WINDOW,
            prec: super::SUITE_PREC,
        }
    }
}

fn normalize_pair(a: Factor, b: Factor) -> (Factor, Factor) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Unordered products the classification predicts to be eigenforms,
/// restricted to the given weight and derivative ranges.
pub fn expected_product_hits(max_weight: u32, max_deriv: u32) -> Vec<(Factor, Factor)> {
    let mut out: Vec<(Factor, Factor)> = MODULAR_PRODUCT_IDENTITIES
        .iter()
        .map(|&(a, b, _)| normalize_pair(Factor::new(a, 0), Factor::new(b, 0)))
        .chain(QUASIMODULAR_PRODUCT_HITS.iter().map(|&(a, b)| normalize_pair(a, b)))
        .filter(|(a, b)| a.weight() + b.weight() <= max_weight && a.deriv.max(b.deriv) <= max_deriv)
        .collect();
    out.sort();
    out
}

/// `product = scalar * D^t(target)` for some catalog form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identification {
    pub scalar: Rational,
    pub target: Factor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductHit {
    pub left: Factor,
    pub right: Factor,
    pub weight: u32,
    /// Constant and `q` coefficients of the product.
    pub leading: (Rational, Rational),
    pub eigen: EigenReport,
    pub identified_as: Option<Identification>,
}

#[derive(Debug, Clone)]
pub struct ProductSearch {
    pub hits: Vec<ProductHit>,
    pub candidates: usize,
    /// Candidates whose eigenform test could not be run.
    pub errors: Vec<(Factor, Factor, Error)>,
    pub report: VerificationReport,
}

impl ProductSearch {
    pub fn hit_pairs(&self) -> Vec<(Factor, Factor)> {
        self.hits.iter().map(|h| (h.left, h.right)).collect()
    }
}

fn factors(catalog: &Catalog, names: &[FormName], max_deriv: u32) -> Vec<(Factor, GradedSeries)> {
    let mut out = Vec::new();
    for &name in names {
        let base = catalog.get(name);
        for r in 0..=max_deriv {
            out.push((Factor::new(name, r), base.derivative_pow(r)));
        }
    }
    out
}

/// Looks for `f = c * D^t(g)` with `g` in the catalog.
pub fn identify(catalog: &Catalog, f: &GradedSeries) -> Option<Identification> {
    let lead = f.series.valuation()?;
    for (name, g) in catalog.iter() {
        if g.weight > f.weight || (f.weight - g.weight) % 2 != 0 {
            continue;
        }
        let t = (f.weight - g.weight) / 2;
        let target = g.derivative_pow(t).truncate(f.prec());
        let denom = target.coeff(lead);
        if denom.is_zero() || target.series.valuation() != Some(lead) {
            continue;
        }
        let scalar = f.coeff(lead) / denom;
        if target.series.scale(&scalar) == f.series.truncate(target.prec()) {
            return Some(Identification { scalar, target: Factor::new(name, t) });
        }
    }
    None
}

fn check_ranges(cfg: &SearchConfig, max_deriv_limit: u32) -> Result<()> {
    if cfg.max_weight > 26 {
        return Err(Error::OutOfRange(format!("max weight {} exceeds the catalog range 26", cfg.max_weight)));
    }
    if cfg.max_deriv > max_deriv_limit {
        return Err(Error::OutOfRange(format!(
            "derivative/bracket order {} exceeds {}",
            cfg.max_deriv, max_deriv_limit
        )));
    }
    Ok(())
}

/// Runs the eigenform test on every unordered product `(D^r f)(D^s g)` of
/// catalog forms with `r, s <= max_deriv` and total weight `<= max_weight`.
///
/// The report has one record per candidate, passing when the verdict matches
/// the classification, plus a summary record comparing the hit set.
pub fn product_search(cfg: &SearchConfig) -> Result<ProductSearch> {
    check_ranges(cfg, 3)?;
    let catalog = Catalog::new(cfg.prec);
    let facs = factors(&catalog, &FormName::ALL, cfg.max_deriv);
    let expected = expected_product_hits(cfg.max_weight, cfg.max_deriv);
    let mut report = VerificationReport::new("products");
    let mut hits = Vec::new();
    let mut errors = Vec::new();
    let mut candidates = 0;

    for (i, (fa, a)) in facs.iter().enumerate() {
        for (fb, b) in &facs[i..] {
            let weight = fa.weight() + fb.weight();
            if weight > cfg.max_weight {
                continue;
            }
            candidates += 1;
            let product = a.mul(b);
            let id = format!("product:{}*{}", fa, fb);
            let predicted = expected.contains(&(*fa, *fb));
            match eigenform_test(&product, cfg.bound, cfg.window) {
                Ok(eigen) => {
                    let is_eigen = eigen.is_eigen_up_to_bound;
                    let mut w = eigen_witness(&eigen).with("weight", weight).with("predicted", predicted);
                    if is_eigen {
                        let identified_as = identify(&catalog, &product);
                        if let Some(ident) = &identified_as {
                            w = w.with("equals", format!("({})*{}", ident.scalar, ident.target));
                        }
                        hits.push(ProductHit {
                            left: *fa,
                            right: *fb,
                            weight,
                            leading: (product.coeff(0).clone(), product.coeff(1).clone()),
                            eigen,
                            identified_as,
                        });
                    }
                    report.push(CheckRecord::new(
                        id,
                        "(D^r f)(D^s g) is an eigenform only for the listed products",
                        is_eigen == predicted,
                        w,
                    ));
                }
                Err(e) => {
                    report.push(CheckRecord::new(
                        id,
                        "(D^r f)(D^s g) is an eigenform only for the listed products",
                        false,
                        Witness::new().with("error", e.to_string()),
                    ));
                    errors.push((*fa, *fb, e));
                }
            }
        }
    }

    let found: Vec<(Factor, Factor)> = hits.iter().map(|h| (h.left, h.right)).collect();
    let missing: Vec<_> = expected.iter().filter(|p| !found.contains(p)).map(|(a, b)| format!("{}*{}", a, b)).collect();
    let extra: Vec<_> = found.iter().filter(|p| !expected.contains(p)).map(|(a, b)| format!("{}*{}", a, b)).collect();
    report.push(CheckRecord::new(
        "products:hit-set",
        "eigenform products = modular list + D(E4)E4 = D(E8)/2 + E2 Delta12 = D(Delta12)",
        missing.is_empty() && extra.is_empty(),
        Witness::new()
            .with("candidates", candidates)
            .with("hits", found.len())
            .with("expected", expected.len())
            .with("missing", missing)
            .with("extra", extra),
    ));

    // A nonzero eigenform with vanishing constant term has a_1 != 0.
    let bad: Vec<_> = hits
        .iter()
        .filter(|h| h.leading.0.is_zero() && h.leading.1.is_zero())
        .map(|h| format!("{}*{}", h.left, h.right))
        .collect();
    report.push(CheckRecord::new(
        "products:cusp-hits-have-a1",
        "eigenform with a_0 = 0 has a_1 != 0",
        bad.is_empty(),
        Witness::new().with("offending", bad),
    ));

    // Each modular identity's right-hand side is what the hit equals.
    for &(a, b, target) in MODULAR_PRODUCT_IDENTITIES.iter() {
        let (fa, fb) = normalize_pair(Factor::new(a, 0), Factor::new(b, 0));
        if fa.weight() + fb.weight() > cfg.max_weight {
            continue;
        }
        let Some(hit) = hits.iter().find(|h| h.left == fa && h.right == fb) else { continue };
        let ok = hit
            .identified_as
            .as_ref()
            .is_some_and(|i| i.target == Factor::new(target, 0) && i.scalar == Rational::from_integer(1.into()));
        report.push(CheckRecord::new(
            format!("products:identify:{}*{}", fa, fb),
            format!("{}*{} = {}", a, b, target),
            ok,
            Witness::new().with("target", target.as_str()),
        ));
    }

    Ok(ProductSearch { hits, candidates, errors, report })
}

/// Where an eigenform bracket lives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Landing {
    EisensteinLine,
    OneDimensionalCuspSpace,
    Other,
}

impl Landing {
    pub fn as_str(self) -> &'static str {
        match self {
            Landing::EisensteinLine => "Eisenstein line",
            Landing::OneDimensionalCuspSpace => "one-dimensional cusp space",
            Landing::Other => "other",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketHit {
    pub g: FormName,
    pub h: FormName,
    pub m: u32,
    pub weight: u32,
    pub coordinates: Vec<Rational>,
    pub landing: Landing,
}

#[derive(Debug, Clone)]
pub struct BracketSearch {
    pub hits: Vec<BracketHit>,
    /// Brackets that vanish identically (excluded from hits).
    pub zeros: Vec<(FormName, FormName, u32)>,
    pub candidates: usize,
    pub report: VerificationReport,
}

/// Runs the eigenform test on `[g, h]_m` for unordered pairs of modular
/// catalog forms and `m <= max_deriv`, total weight `<= max_weight`.
///
/// Besides the eigenform verdicts the report checks, per candidate, that the
/// bracket lies in `M_k` (and is cuspidal for `m >= 1`) and that swapping the
/// arguments multiplies it by `(-1)^m`.
pub fn bracket_search(cfg: &SearchConfig) -> Result<BracketSearch> {
    check_ranges(cfg, 4)?;
    let catalog = Catalog::new(cfg.prec);
    let names: Vec<FormName> = FormName::ALL.into_iter().filter(|n| n.is_modular()).collect();
    let mut report = VerificationReport::new("brackets");
    let mut hits = Vec::new();
    let mut zeros = Vec::new();
    let mut candidates = 0;

    for (i, &gn) in names.iter().enumerate() {
        for &hn in &names[i..] {
            let (g, h) = (catalog.get(gn), catalog.get(hn));
            for m in 0..=cfg.max_deriv {
                let weight = g.weight + h.weight + 2 * m;
                if weight > cfg.max_weight {
                    continue;
                }
                candidates += 1;
                let tag = format!("{},{},{}", gn, hn, m);
                let bracket = rankin_cohen(g, h, m);

                let swapped = rankin_cohen(h, g, m);
                let sign = if m % 2 == 0 { 1 } else { -1 };
                let symmetric = swapped.series == bracket.series.scale(&Rational::from_integer(sign.into()));
                report.push(CheckRecord::new(
                    format!("bracket:symmetry:{}", tag),
                    "[g,h]_m = (-1)^m [h,g]_m",
                    symmetric,
                    Witness::new().with("m", m),
                ));

                let membership = is_modular_member(&bracket.series, weight, MEMBERSHIP_MARGIN);
                let cusp_ok = m == 0 || bracket.coeff(0).is_zero();
                let coordinates = match &membership {
                    Ok(Some(c)) => Some(c.clone()),
                    _ => None,
                };
                let mut w = Witness::new().with("weight", weight).with("constant_term", bracket.coeff(0));
                match &membership {
                    Ok(Some(c)) => w = w.with("coordinates", c.clone()),
                    Ok(None) => w = w.with("coordinates", "not a member"),
                    Err(e) => w = w.with("error", e.to_string()),
                }
                report.push(CheckRecord::new(
                    format!("bracket:modular:{}", tag),
                    "[g,h]_m lies in M_{k1+k2+2m}, cuspidal for m >= 1",
                    coordinates.is_some() && cusp_ok,
                    w,
                ));

                if bracket.series.is_zero() {
                    zeros.push((gn, hn, m));
                    continue;
                }
                let eigen = eigenform_test(&bracket, cfg.bound, cfg.window)?;
                if !eigen.is_eigen_up_to_bound {
                    continue;
                }
                let landing = if !bracket.coeff(0).is_zero() {
                    let e = catalog.iter().find(|(n, f)| !n.is_cusp() && f.weight == weight);
                    let on_line = e.is_some_and(|(_, e)| {
                        e.series.scale(bracket.coeff(0)) == bracket.series
                    });
                    if on_line { Landing::EisensteinLine } else { Landing::Other }
                } else if dim_cusp(weight) == 1 {
                    Landing::OneDimensionalCuspSpace
                } else {
                    Landing::Other
                };
                report.push(CheckRecord::new(
                    format!("bracket:hit:{}", tag),
                    "eigenform brackets lie on the Eisenstein line or in a one-dimensional S_k",
                    landing != Landing::Other,
                    eigen_witness(&eigen).with("landing", landing.as_str()).with("weight", weight),
                ));
                hits.push(BracketHit {
                    g: gn,
                    h: hn,
                    m,
                    weight,
                    coordinates: coordinates.unwrap_or_default(),
                    landing,
                });
            }
        }
    }

    // [g,h]_0 = gh, so the m = 0 hits are exactly the modular product cases.
    let zero_slice: Vec<(FormName, FormName)> = hits.iter().filter(|h| h.m == 0).map(|h| (h.g, h.h)).collect();
    let mut expected: Vec<(FormName, FormName)> = MODULAR_PRODUCT_IDENTITIES
        .iter()
        .filter(|(a, b, _)| a.weight() + b.weight() <= cfg.max_weight)
        .map(|&(a, b, _)| if a <= b { (a, b) } else { (b, a) })
        .collect();
    expected.sort();
    let mut got = zero_slice.clone();
    got.sort();
    report.push(CheckRecord::new(
        "bracket:m0-slice",
        "[g,h]_0 = gh reproduces the modular product cases",
        got == expected,
        Witness::new().with("hits", got.len()).with("expected", expected.len()),
    ));

    Ok(BracketSearch { hits, zeros, candidates, report })
}
