//! Identities between catalog forms and eigenform verdicts on specific
//! products.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::Zero;

use super::search::MODULAR_PRODUCT_IDENTITIES;
use super::{eigen_witness, series_check, CheckRecord, VerificationReport, Witness, SUITE_PREC};
use crate::error::{Error, Result};
use crate::exactmath::{int, rpow, sigma, Rational};
use crate::forms::{is_modular_member, Catalog, FormName, MEMBERSHIP_MARGIN};
use crate::hecke::{
    eigenform_test, eigenform_test_nearly, eisenstein_eigenvalue, normalized_relation_defects, EigenReport,
    DEFAULT_BOUND, DEFAULT_WINDOW,
};
use crate::nearly::{e2_star, maass_shimura, YPolyForm};
use crate::qseries::GradedSeries;

use FormName::*;

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn eigen_record(id: &str, anchor: &str, report: Result<EigenReport>, expect_eigen: bool) -> CheckRecord {
    match report {
        Ok(rep) => {
            let pass = rep.is_eigen_up_to_bound == expect_eigen;
            CheckRecord::new(id, anchor, pass, eigen_witness(&rep).with("expected_eigen", expect_eigen))
        }
        Err(e) => CheckRecord::new(id, anchor, false, Witness::new().with("error", e.to_string())),
    }
}

fn eigenvalue_record(id: &str, anchor: &str, report: &Result<EigenReport>, expected: &[(u64, Rational)]) -> CheckRecord {
    let Ok(rep) = report else {
        return CheckRecord::new(id, anchor, false, Witness::new().with("error", "eigenform test failed to run"));
    };
    let bad = expected.iter().find(|(n, l)| rep.eigenvalue(*n) != Some(l));
    let mut w = Witness::new().with("checked", expected.len());
    if let Some((n, l)) = bad {
        w = w.with("n", *n).with("expected", l).with(
            "actual",
            rep.eigenvalue(*n).map_or_else(|| "missing".into(), super::Value::from),
        );
    }
    CheckRecord::new(id, anchor, rep.is_eigen_up_to_bound && bad.is_none(), w)
}

/// Runs the identity suite at precision `prec >= 128`.
pub fn identity_suite(prec: usize) -> Result<VerificationReport> {
    if prec < SUITE_PREC {
        return Err(Error::InsufficientPrecision { needed: SUITE_PREC, available: prec });
    }
    let cat = Catalog::new(prec);
    let get = |n: FormName| cat.get(n);
    let (b, w) = (DEFAULT_BOUND, DEFAULT_WINDOW);
    let mut rep = VerificationReport::new("identities");

    for &(a, bb, target) in MODULAR_PRODUCT_IDENTITIES.iter() {
        let anchor = format!("{}*{} = {}", a, bb, target);
        let id = format!("identity:{}*{}={}", a, bb, target);
        rep.push(series_check(&id, &anchor, &get(a).mul(get(bb)).series, &get(target).series));
    }

    let e2 = get(E2);
    let e4 = get(E4);
    let e6 = get(E6);
    let e8 = get(E8);
    let d12 = get(Delta12);

    rep.push(series_check(
        "identity:DE4*E4=DE8/2",
        "(DE4)E4 = 1/2 DE8",
        &e4.derivative().mul(e4).series,
        &e8.derivative().series.scale(&rat(1, 2)),
    ));
    rep.push(series_check(
        "identity:DE2",
        "DE2 = (E2^2 - E4)/12",
        &e2.derivative().series,
        &(&e2.mul(e2).series - &e4.series).scale(&rat(1, 12)),
    ));
    rep.push(series_check(
        "identity:DE4",
        "DE4 = (E2 E4 - E6)/3",
        &e4.derivative().series,
        &(&e2.mul(e4).series - &e6.series).scale(&rat(1, 3)),
    ));
    rep.push(series_check(
        "identity:DE6",
        "DE6 = (E2 E6 - E4^2)/2",
        &e6.derivative().series,
        &(&e2.mul(e6).series - &e4.mul(e4).series).scale(&rat(1, 2)),
    ));
    rep.push(series_check("identity:DDelta12", "D Delta12 = E2 Delta12", &d12.derivative().series, &e2.mul(d12).series));

    let delta_y = YPolyForm::holomorphic(d12);
    let lhs = maass_shimura(&delta_y);
    let rhs = e2_star(prec).mul(&delta_y);
    rep.push(CheckRecord::new(
        "identity:delta12-Delta12",
        "delta_12(Delta12) = E2* Delta12",
        lhs == rhs,
        Witness::new().with("depth", lhs.depth()).with("weight", lhs.weight()),
    ));

    // delta_k f - (k/12) E2* f = D f - (k/12) E2 f lies in M_{k+2}.
    for (name, f) in cat.iter().filter(|(n, _)| n.is_modular()) {
        let fy = YPolyForm::holomorphic(f);
        let c = rat(f.weight as i64, 12);
        let g = maass_shimura(&fy).sub(&e2_star(prec).mul(&fy).scale(&c));
        let holo = &f.series.derivative() - &e2.mul(f).series.scale(&c);
        let member = is_modular_member(&g.component(0), f.weight + 2, MEMBERSHIP_MARGIN);
        let ok = g.depth() == 0 && g.component(0) == holo && matches!(member, Ok(Some(_)));
        let mut wit = Witness::new().with("depth", g.depth());
        if let Ok(Some(c)) = &member {
            wit = wit.with("coordinates", c.clone());
        }
        rep.push(CheckRecord::new(
            format!("identity:serre-derivative:{}", name),
            "delta_k f - (k/12) E2* f = Df - (k/12) E2 f in M_{k+2}",
            ok,
            wit,
        ));
    }

    // Eigenvalues of Delta12 and the Eisenstein series.
    let d12_rep = eigenform_test(d12, b, w);
    rep.push(eigenvalue_record(
        "hecke:Delta12",
        "lambda_2 = -24, lambda_3 = 252, lambda_4 = -1472 for Delta12",
        &d12_rep,
        &[(2, int(-24)), (3, int(252)), (4, int(-1472))],
    ));
    for name in [E2, E4, E6, E8, E10, E14] {
        let k = name.weight();
        let expected: Vec<(u64, Rational)> = (1..=b).map(|n| (n, eisenstein_eigenvalue(k, n))).collect();
        rep.push(eigenvalue_record(
            &format!("hecke:{}", name),
            "T_n E_k = sigma_{k-1}(n) E_k",
            &eigenform_test(get(name), b, w),
            &expected,
        ));
    }

    // Eigenvalue shift under D^m.
    if let Ok(base) = &d12_rep {
        for m in 1..=2u32 {
            let expected: Vec<(u64, Rational)> =
                base.eigenvalues.iter().map(|(n, l)| (*n, l * rpow(*n as i64, m as i64))).collect();
            rep.push(eigenvalue_record(
                &format!("hecke:D^{}Delta12", m),
                "D^m f has eigenvalue n^m lambda_n",
                &eigenform_test(&d12.derivative_pow(m), b, w),
                &expected,
            ));
        }
    }

    // Eigenform verdicts.
    for name in [E4, E6, E8, E10, E14, Delta16, Delta18, Delta20, Delta22, Delta26] {
        rep.push(eigen_record(
            &format!("eigen:{}", name),
            "catalog forms are eigenforms",
            eigenform_test(get(name), b, w),
            true,
        ));
    }
    rep.push(eigen_record("eigen:E2", "E2 is an eigenform", eigenform_test(e2, b, w), true));
    rep.push(eigen_record(
        "eigen:E2*Delta12",
        "E2 f is an eigenform iff f = Delta12",
        eigenform_test(&e2.mul(d12), b, w),
        true,
    ));
    let star = e2_star(prec);
    let star_rep = eigenform_test_nearly(&star, b, w);
    let star_ok = star_rep
        .as_ref()
        .is_ok_and(|r| (1..=b).all(|n| r.eigenvalue(n) == Some(&eisenstein_eigenvalue(2, n))));
    let mut star_rec = eigen_record("eigen:E2*", "E2* is an eigenform", star_rep, true);
    star_rec.pass &= star_ok;
    rep.push(star_rec);
    rep.push(eigen_record(
        "eigen:delta12-Delta12",
        "E2* f is an eigenform iff f = Delta12",
        eigenform_test_nearly(&lhs, b, w),
        true,
    ));
    rep.push(eigen_record(
        "eigen:E2^2",
        "E2^2 is not an eigenform",
        eigenform_test(&e2.mul(e2), b, w),
        false,
    ));

    // E2 E_k is not an eigenform; the witness includes the a_4 / a_6 defects.
    for name in [E4, E6, E8, E10, E14] {
        let p = e2.mul(get(name));
        let mut rec = eigen_record(
            &format!("eigen:E2*{}", name),
            "E2 f is an eigenform iff f = Delta12",
            eigenform_test(&p, b, w),
            false,
        );
        if let (Ok((d6, d4)), Some(wit)) = (normalized_relation_defects(&p), rec.witness.take()) {
            rec.witness = Some(wit.with("a4_relation_defect", d4).with("a6_relation_defect", d6));
        }
        rep.push(rec);
    }
    for name in [Delta16, Delta18, Delta20, Delta22, Delta26] {
        rep.push(eigen_record(
            &format!("eigen:E2*{}", name),
            "E2 f is an eigenform iff f = Delta12",
            eigenform_test(&e2.mul(get(name)), b, w),
            false,
        ));
    }

    // DE2 and E4 are eigenforms of weight 4 with different eigenvalues.
    let de2 = eigenform_test(&e2.derivative(), b, w);
    let e4_rep = eigenform_test(e4, b, w);
    let differ = match (&de2, &e4_rep) {
        (Ok(x), Ok(y)) => x.is_eigen_up_to_bound && y.is_eigen_up_to_bound && x.eigenvalue(2) != y.eigenvalue(2),
        _ => false,
    };
    rep.push(CheckRecord::new(
        "eigen:DE2-vs-E4",
        "DE2 and E4 are eigenforms with different eigenvalues",
        differ,
        Witness::new()
            .with("lambda2_DE2", de2.ok().and_then(|r| r.eigenvalue(2).cloned()).unwrap_or_else(Rational::zero))
            .with("lambda2_E4", e4_rep.ok().and_then(|r| r.eigenvalue(2).cloned()).unwrap_or_else(Rational::zero)),
    ));

    // D E_k - (k/12) E2 E_k = alpha E_{k+2} would force n sigma_{k-1}(n) = sigma_{k+1}(n).
    for k in [4u32, 6, 8, 10, 14] {
        let n = 2u64;
        let lhs = sigma(k - 1, n).unwrap() * n;
        let rhs = sigma(k + 1, n).unwrap();
        rep.push(CheckRecord::new(
            format!("identity:sigma-shift:k{}", k),
            "n sigma_{k-1}(n) != sigma_{k+1}(n)",
            lhs != rhs,
            Witness::new().with("n", n).with("lhs", lhs).with("rhs", rhs),
        ));
    }

    Ok(rep)
}

/// Convenience for tests: the eigen report of a catalog product.
pub fn product_report(cat: &Catalog, a: FormName, b: FormName) -> Result<EigenReport> {
    let p: GradedSeries = cat.get(a).mul(cat.get(b));
    eigenform_test(&p, DEFAULT_BOUND, DEFAULT_WINDOW)
}
