//! Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.
//!
//! Run with `cargo test -p modforms --test acceptance`. The process exits
//! nonzero if any criterion fails.

mod common;

use std::time::Instant;

use common::*;
use modforms::forms::{dim_cusp, MEMBERSHIP_MARGIN};
use modforms::hecke::{DEFAULT_BOUND, DEFAULT_WINDOW};
use modforms::nearly::reassemble;
use modforms::verify::diophantine::{eq3_residual, eq4_value, quadratic_value, scan, two_k_over_bernoulli};
use modforms::verify::ghitza::separating_index;
use modforms::verify::search::{bracket_search, product_search, SearchConfig};
use modforms::verify::{diophantine_suite, ghitza_check, identity_suite, DiophantineEquation, Factor, SUITE_PREC};
use modforms::{
    eigenform_test, eigenform_test_nearly, e2_star, eval_generator_poly_graded, hecke, is_modular_member,
    maass_shimura, quasimodular_decompose, rankin_cohen, Catalog, EigenReport, FormName, GenPoly, GradedSeries,
    YPolyForm,
};
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use FormName::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ok<T, E: std::fmt::Debug>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| format!("{:?}", e))
}

const PREC: usize = SUITE_PREC;
const B: u64 = DEFAULT_BOUND;
const M: usize = DEFAULT_WINDOW;

/// The products of two modular eigenforms that are eigenforms, as
/// `(f, g, f*g)`.
const MODULAR_IDENTITIES: [(FormName, FormName, FormName); 16] = [
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

fn catalog_matches_oracles(cat: &Catalog) -> Result<(), String> {
    for (name, f) in cat.iter() {
        let c = f.series.coeffs();
        if name.is_cusp() {
            if name == Delta12 {
                ensure!(c == eta_delta(PREC).as_slice(), "Delta12 differs from the eta product");
            }
            ensure!(c[0].is_zero() && c[1] == q(1), "{} is not normalized", name);
            ensure!(
                ok(is_modular_member(&f.series, name.weight(), MEMBERSHIP_MARGIN))?.is_some(),
                "{} is not in M_{}",
                name,
                name.weight()
            );
        } else {
            ensure!(c == eisenstein_naive(name.weight(), PREC).as_slice(), "{} differs from its sigma expansion", name);
        }
    }
    Ok(())
}

fn criterion_1() -> Outcome {
    let cat = Catalog::new(PREC);
    catalog_matches_oracles(&cat)?;
    for (a, b, c) in MODULAR_IDENTITIES {
        let lib = cat.get(a).mul(cat.get(b));
        let naive = naive_mul(cat.get(a).series.coeffs(), cat.get(b).series.coeffs());
        ensure!(lib.series.coeffs() == naive.as_slice(), "{}*{}: product disagrees with schoolbook product", a, b);
        ensure!(lib.series == cat.get(c).series, "{}*{} != {}", a, b, c);
    }
    let e4 = cat.get(E4).series.coeffs();
    let lhs = naive_mul(&naive_derivative(e4), e4);
    let rhs: Vec<Q> = naive_derivative(cat.get(E8).series.coeffs()).iter().map(|x| x * frac(1, 2)).collect();
    let diff: Vec<Q> = lhs.iter().zip(&rhs).map(|(x, y)| x - y).collect();
    ensure!(diff.len() == PREC + 1 && diff.iter().all(|x| x.is_zero()), "(DE4)E4 - DE8/2 is not zero");
    let suite = ok(identity_suite(PREC))?;
    ensure!(suite.all_passed(), "identity suite has {} failing checks", suite.failed());
    Ok(format!(
        "16 modular identities and (DE4)E4 = DE8/2 exact through q^{}; identity suite {}/{} checks",
        PREC,
        suite.passed(),
        suite.checks.len()
    ))
}

/// Brute-force re-check of a report: every compared coefficient of
/// `T_n f` against `lambda_n f` for each `Y`-component.
fn recheck_report(f: &YPolyForm, rep: &EigenReport) -> Result<(), String> {
    let k = f.weight() as i64;
    let comps = f.components();
    let (lr, lm) = comps
        .iter()
        .enumerate()
        .find_map(|(r, c)| c.coeffs()[..=M].iter().position(|a| !a.is_zero()).map(|m| (r, m)))
        .ok_or("zero form")?;
    let lead = comps[lr].coeff(lm).clone();
    let scale = |r: usize, n: u64| q(n as i64).pow(r as i32);
    for n in 1..=rep.tested_bound {
        let lambda = naive_hecke_coeff(comps[lr].coeffs(), k - 2 * lr as i64, n, lm) * scale(lr, n) / &lead;
        for (r, comp) in comps.iter().enumerate() {
            for m in 0..=M {
                let actual = naive_hecke_coeff(comp.coeffs(), k - 2 * r as i64, n, m) * scale(r, n);
                let expected = &lambda * comp.coeff(m);
                if actual != expected {
                    let v = rep.first_violation.as_ref().ok_or("oracle found a violation the report missed")?;
                    ensure!(
                        (v.n, v.component, v.exponent) == (n, r, m) && v.actual == actual && v.expected == expected,
                        "reported violation {:?} differs from brute force (n={}, r={}, m={})",
                        v,
                        n,
                        r,
                        m
                    );
                    return Ok(());
                }
            }
        }
        ensure!(rep.eigenvalue(n) == Some(&lambda), "eigenvalue for n={} differs from brute force", n);
    }
    ensure!(rep.first_violation.is_none() && rep.is_eigen_up_to_bound, "report claims a violation brute force misses");
    Ok(())
}

fn criterion_2() -> Outcome {
    let cat = Catalog::new(PREC);
    let f = |n: FormName| cat.get(n).clone();
    let mut eigen: Vec<(String, YPolyForm)> = FormName::ALL
        .into_iter()
        .map(|n| (n.to_string(), YPolyForm::holomorphic(&f(n))))
        .collect();
    eigen.push(("E2*".into(), e2_star(PREC)));
    eigen.push(("E2*Delta12".into(), YPolyForm::holomorphic(&f(E2).mul(&f(Delta12)))));
    eigen.push(("delta12(Delta12)".into(), maass_shimura(&YPolyForm::holomorphic(&f(Delta12)))));

    let products = [
        (E2, E2),
        (E2, E4),
        (E2, E6),
        (E2, E8),
        (E2, E10),
        (E2, E14),
        (E4, E8),
        (Delta12, Delta12),
        (E4, Delta20),
    ];
    let not_eigen: Vec<(String, YPolyForm)> = products
        .iter()
        .map(|&(a, b)| (format!("{}*{}", a, b), YPolyForm::holomorphic(&f(a).mul(&f(b)))))
        .collect();

    for (name, form) in &eigen {
        let rep = ok(eigenform_test_nearly(form, B, M))?;
        ensure!(rep.is_eigen_up_to_bound, "{} rejected: {:?}", name, rep.first_violation);
        recheck_report(form, &rep).map_err(|e| format!("{}: {}", name, e))?;
    }
    for (name, form) in &not_eigen {
        let rep = ok(eigenform_test_nearly(form, B, M))?;
        ensure!(!rep.is_eigen_up_to_bound, "{} accepted", name);
        ensure!(rep.first_violation.is_some(), "{} rejected without a witness", name);
        recheck_report(form, &rep).map_err(|e| format!("{}: {}", name, e))?;
    }
    Ok(format!(
        "{} forms pass, {} products fail with brute-force-confirmed witnesses (B={}, M={})",
        eigen.len(),
        not_eigen.len(),
        B,
        M
    ))
}

fn criterion_3() -> Outcome {
    let cat = Catalog::new(PREC);
    let rep = ok(eigenform_test(cat.get(Delta12), B, M))?;
    for (n, tau) in [(2, -24), (3, 252), (4, -1472)] {
        ensure!(rep.eigenvalue(n) == Some(&q(tau)), "lambda_{}(Delta12) = {:?}", n, rep.eigenvalue(n));
    }
    for k in [4u32, 6, 8, 10, 14] {
        let name = FormName::ALL.into_iter().find(|x| x.weight() == k && !x.is_cusp()).unwrap();
        let rep = ok(eigenform_test(cat.get(name), B, M))?;
        for n in 1..=B {
            let want = Q::from_integer(sigma_naive(k - 1, n));
            ensure!(rep.eigenvalue(n) == Some(&want), "lambda_{}(E{}) != sigma_{}({})", n, k, k - 1, n);
        }
    }
    Ok("lambda_2,3,4(Delta12) = -24, 252, -1472; lambda_n(E_k) = sigma_(k-1)(n) for n <= 10".into())
}

fn criterion_4() -> Outcome {
    let cat = Catalog::new(PREC);
    let base = ok(eigenform_test(cat.get(Delta12), B, M))?;
    for m in 1..=2u32 {
        let f = cat.get(Delta12).derivative_pow(m);
        let rep = ok(eigenform_test(&f, B, M))?;
        ensure!(rep.is_eigen_up_to_bound, "D^{} Delta12 rejected", m);
        for n in 1..=B {
            let want = q(n as i64).pow(m as i32) * base.eigenvalue(n).unwrap();
            ensure!(rep.eigenvalue(n) == Some(&want), "lambda_{}(D^{} Delta12) != n^{} tau({})", n, m, m, n);
        }
    }
    Ok("lambda_n(D^m Delta12) = n^m tau(n) for m = 1, 2 and n <= 10".into())
}

fn criterion_5() -> Outcome {
    let search = ok(product_search(&SearchConfig::default()))?;
    ensure!(search.errors.is_empty(), "{} candidates errored", search.errors.len());
    let pair = |a: Factor, b: Factor| if a <= b { (a, b) } else { (b, a) };
    let mut expected: Vec<(Factor, Factor)> = MODULAR_IDENTITIES
        .iter()
        .map(|&(a, b, _)| pair(Factor::new(a, 0), Factor::new(b, 0)))
        .collect();
    expected.push(pair(Factor::new(E4, 1), Factor::new(E4, 0)));
    expected.push(pair(Factor::new(E2, 0), Factor::new(Delta12, 0)));
    expected.sort();
    let mut found: Vec<(Factor, Factor)> = search.hit_pairs().into_iter().map(|(a, b)| pair(a, b)).collect();
    found.sort();
    ensure!(found == expected, "hit set differs: found {:?}", found);

    for hit in &search.hits {
        let id = hit.identified_as.as_ref().ok_or(format!("{} * {} not identified", hit.left, hit.right))?;
        let want = if let Some(&(_, _, c)) = MODULAR_IDENTITIES
            .iter()
            .find(|&&(a, b, _)| pair(Factor::new(a, 0), Factor::new(b, 0)) == pair(hit.left, hit.right))
        {
            (q(1), Factor::new(c, 0))
        } else if hit.left.name == E4 {
            (frac(1, 2), Factor::new(E8, 1))
        } else {
            (q(1), Factor::new(Delta12, 1))
        };
        ensure!((id.scalar.clone(), id.target) == want, "{} * {} identified as {:?}", hit.left, hit.right, id);
    }
    ensure!(search.report.all_passed(), "product report has {} failing checks", search.report.failed());
    let modular = found.iter().filter(|(a, b)| a.deriv == 0 && b.deriv == 0 && a.name != E2).count();
    Ok(format!(
        "{} candidates, {} hits: {} modular, (DE4)E4 = DE8/2, E2*Delta12 = D(Delta12); nothing else",
        search.candidates,
        found.len(),
        modular
    ))
}

fn criterion_6() -> Outcome {
    let ks: Vec<u32> = (2..=40).step_by(2).collect();
    let ss: Vec<u32> = (1..=40).collect();
    ensure!(scan(DiophantineEquation::Eq3, &ks, &ss).is_empty(), "eq3 has solutions");
    ensure!(scan(DiophantineEquation::Eq4, &ks, &ss).is_empty(), "eq4 has solutions");
    let rs: Vec<u32> = (1..=64).collect();
    ensure!(scan(DiophantineEquation::Eq7, &[4], &rs).is_empty(), "eq7 has solutions");

    // Series oracle: E2 (D^s E_k) normalized, relations on a_4 and a_6.
    let prec = 6;
    let e2 = eisenstein_naive(2, prec);
    for &k in &ks {
        let ek = eisenstein_naive(k, prec);
        let mut d = ek.clone();
        for s in 1..=40u32 {
            d = naive_derivative(&d);
            let f = naive_mul(&e2, &d);
            let a: Vec<Q> = f.iter().map(|x| x / &f[1]).collect();
            let w = 2 + k + 2 * s;
            let a4_defect = &a[4] - (&a[2] * &a[2] - q(2).pow(w as i32 - 1));
            let a6_defect = &a[6] - &a[2] * &a[3];
            ensure!(!a4_defect.is_zero(), "E2 D^{} E{} satisfies the a_4 relation", s, k);
            ensure!(!a6_defect.is_zero(), "E2 D^{} E{} satisfies the a_6 relation", s, k);
            ensure!(!eq3_residual(k, s).is_zero() && !eq4_value(k, s).is_zero(), "closed form vanishes at k={} s={}", k, s);
        }
    }

    // 2k/B_k is an integer exactly for these k (k >= 4, k <= 40).
    let bern = bernoulli_table(40);
    let integral: Vec<u32> =
        (4..=40).step_by(2).filter(|&k| is_integer(&(q(2 * k as i64) / &bern[k as usize]))).collect();
    ensure!(integral == [4, 6, 8, 10, 14], "integral 2k/B_k at {:?}", integral);

    // Series oracle for (-1/24)(D^r E2) E_k: the b_4 relation fails, and its
    // defect is minus the quadratic evaluated at 2k/B_k.
    let rs40: Vec<u32> = (1..=40).collect();
    let quad_ks: Vec<u32> = (4..=40).step_by(2).collect();
    ensure!(scan(DiophantineEquation::Quadratic, &quad_ks, &rs40).is_empty(), "quadratic has admissible roots");
    let p4 = 4;
    let e2 = eisenstein_naive(2, p4);
    for &k in &integral {
        let ek = eisenstein_naive(k, p4);
        let mut d = e2.clone();
        let top = if k == 4 { 64 } else { 40 };
        for r in 1..=top {
            d = naive_derivative(&d);
            let g: Vec<Q> = naive_mul(&d, &ek).iter().map(|x| x * frac(-1, 24)).collect();
            ensure!(g[1] == q(1), "normalization off at k={} r={}", k, r);
            let w = 2 + 2 * r + k;
            let defect = &g[4] - (&g[2] * &g[2] - q(2).pow(w as i32 - 1));
            ensure!(!defect.is_zero(), "(D^{} E2) E{} satisfies the b_4 relation", r, k);
            ensure!(
                defect == -quadratic_value(k, r, &two_k_over_bernoulli(k)),
                "quadratic does not match the series at k={} r={}",
                k,
                r
            );
        }
    }
    let suite = diophantine_suite();
    ensure!(suite.all_passed(), "diophantine suite has {} failing checks", suite.failed());
    Ok("eq3, eq4 empty (even k <= 40, s <= 40); eq7 empty (r <= 64); 2k/B_k integral only at k = 4,6,8,10,14; no admissible r <= 40".into())
}

fn criterion_7() -> Outcome {
    let d12 = eta_delta(4);
    let e = |k| eisenstein_naive(k, 4);
    let oracle = [(16, e(4)), (18, e(6)), (20, e(8)), (22, e(10)), (26, e(14))];
    let mut seen = Vec::new();
    for (k, ek) in oracle {
        let dk = naive_mul(&ek, &d12);
        let n = (1..=4).find(|&n| dk[n] != d12[n]).ok_or(format!("Delta{} agrees with Delta12 through q^4", k))?;
        let (lib_n, _, _) = ok(separating_index(k, 4))?.ok_or(format!("no separation reported for Delta{}", k))?;
        ensure!(lib_n == n, "Delta{}: library index {} vs oracle {}", k, lib_n, n);
        seen.push(format!("Delta{}@{}", k, n));
    }
    ensure!(ok(ghitza_check(26))?.all_passed(), "ghitza report fails");
    Ok(format!("first differing index within 4: {}", seen.join(", ")))
}

fn random_poly(rng: &mut StdRng) -> (GenPoly, u32, usize) {
    loop {
        let k = 2 * rng.gen_range(2..=10u32);
        let monos: Vec<[u32; 3]> = (0..=k / 2)
            .flat_map(|a| (0..=k / 4).flat_map(move |b| (0..=k / 6).map(move |c| [a, b, c])))
            .filter(|[a, b, c]| 2 * a + 4 * b + 6 * c == k && 2 * a < k)
            .collect();
        let mut poly = GenPoly::zero();
        for _ in 0..rng.gen_range(1..=4) {
            let e = monos[rng.gen_range(0..monos.len())];
            let c = frac(rng.gen_range(-12..=12), rng.gen_range(1..=6));
            poly = poly.add(&GenPoly::term(c, e));
        }
        if poly.is_zero() {
            continue;
        }
        let depth = poly.depth();
        return (poly, k, depth);
    }
}

fn monomial_oracle(e: &[u32; 3], prec: usize) -> Vec<Q> {
    let mut acc = vec![q(0); prec + 1];
    acc[0] = q(1);
    for (g, &n) in [2u32, 4, 6].iter().zip(e) {
        let s = eisenstein_naive(*g, prec);
        for _ in 0..n {
            acc = naive_mul(&acc, &s);
        }
    }
    acc
}

fn criterion_8() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0008);
    let check_prec = 24;
    for i in 0..20 {
        let (poly, k, p) = random_poly(&mut rng);
        ensure!(2 * p < k as usize, "sample {} has depth {} at weight {}", i, p, k);
        let f = ok(eval_generator_poly_graded(&poly, PREC))?;
        ensure!(f.weight == k, "sample {}: weight {} != {}", i, f.weight, k);

        let mut want = vec![q(0); check_prec + 1];
        for (e, c) in poly.terms() {
            for (w, x) in want.iter_mut().zip(monomial_oracle(e, check_prec)) {
                *w += c * x;
            }
        }
        ensure!(&f.series.coeffs()[..=check_prec] == want.as_slice(), "sample {}: {} evaluates wrongly", i, poly);

        let parts = ok(quasimodular_decompose(&f, p))?.ok_or(format!("sample {}: {} did not decompose", i, poly))?;
        ensure!(reassemble(&parts, f.prec()) == f.series, "sample {}: {} does not reassemble", i, poly);
        for (r, part) in &parts {
            ensure!(part.weight == k - 2 * *r as u32, "sample {}: part {} has weight {}", i, r, part.weight);
            ensure!(
                part.series.is_zero() || ok(is_modular_member(&part.series, part.weight, MEMBERSHIP_MARGIN))?.is_some(),
                "sample {}: part {} is not modular",
                i,
                r
            );
        }
    }
    Ok("20 seeded random polynomials (weight <= 20, depth < k/2) decompose and reassemble exactly".into())
}

fn bracket_oracle(g: &GradedSeries, h: &GradedSeries, m: u32, prec: usize) -> Vec<Q> {
    let binom = |n: u32, r: u32| -> Q {
        if r > n {
            return q(0);
        }
        (0..r).fold(q(1), |acc, i| acc * q((n - i) as i64) / q((i + 1) as i64))
    };
    let gc = &g.series.coeffs()[..=prec];
    let hc = &h.series.coeffs()[..=prec];
    let mut out = vec![q(0); prec + 1];
    for r in 0..=m {
        let s = m - r;
        let mut dg = gc.to_vec();
        for _ in 0..r {
            dg = naive_derivative(&dg);
        }
        let mut dh = hc.to_vec();
        for _ in 0..s {
            dh = naive_derivative(&dh);
        }
        let c = binom(m + g.weight - 1, s) * binom(m + h.weight - 1, r) * if r % 2 == 0 { q(1) } else { q(-1) };
        for (o, x) in out.iter_mut().zip(naive_mul(&dg, &dh)) {
            *o += &c * x;
        }
    }
    out
}

fn criterion_9() -> Outcome {
    let cat = Catalog::new(PREC);
    let modular: Vec<FormName> = FormName::ALL.into_iter().filter(|n| n.is_modular()).collect();
    let oracle_prec = 20;
    let mut count = 0;
    for &a in &modular {
        for &b in &modular {
            let (g, h) = (cat.get(a), cat.get(b));
            for m in 0..=4u32 {
                let k = g.weight + h.weight + 2 * m;
                if k > 26 {
                    continue;
                }
                count += 1;
                let br = rankin_cohen(g, h, m);
                ensure!(br.weight == k, "[{},{}]_{} has weight {}", a, b, m, br.weight);
                ensure!(
                    br.series.coeffs()[..=oracle_prec] == bracket_oracle(g, h, m, oracle_prec)[..],
                    "[{},{}]_{} differs from the oracle",
                    a,
                    b,
                    m
                );
                if m == 0 {
                    ensure!(br.series == g.mul(h).series, "[{},{}]_0 != product", a, b);
                } else {
                    ensure!(br.coeff(0).is_zero(), "[{},{}]_{} has a constant term", a, b, m);
                }
                let swapped = rankin_cohen(h, g, m);
                let sign = if m % 2 == 0 { q(1) } else { q(-1) };
                ensure!(swapped.series == br.series.scale(&sign), "[{},{}]_{} symmetry fails", a, b, m);
                let coords = ok(is_modular_member(&br.series, k, MEMBERSHIP_MARGIN))?;
                ensure!(coords.is_some(), "[{},{}]_{} is not in M_{}", a, b, m, k);
                if m >= 1 && dim_cusp(k) == 0 {
                    ensure!(br.series.is_zero(), "[{},{}]_{} nonzero with S_{} = 0", a, b, m, k);
                }
            }
        }
    }
    let b = rankin_cohen(cat.get(E4), cat.get(E6), 1);
    ensure!(b.series == cat.get(Delta12).series.scale(&q(-3456)), "[E4,E6]_1 != -3456 Delta12");
    let search = ok(bracket_search(&SearchConfig { max_deriv: 4, ..SearchConfig::default() }))?;
    ensure!(search.report.all_passed(), "bracket report has {} failing checks", search.report.failed());
    Ok(format!("{} ordered brackets checked; [E4,E6]_1 = -3456 Delta12", count))
}

fn coprime(a: u64, b: u64) -> bool {
    (1..=a.min(b)).rev().find(|d| a % d == 0 && b % d == 0) == Some(1)
}

fn criterion_10() -> Outcome {
    let prec = 360;
    let cat = Catalog::new(prec);
    let t = |f: &GradedSeries, n: u64| -> Result<GradedSeries, String> { Ok(ok(hecke(f, n))?.form) };
    let same = |a: &GradedSeries, b: &GradedSeries| {
        let p = a.prec().min(b.prec());
        a.series.truncate(p) == b.series.truncate(p)
    };
    let mut relations = 0;
    for (name, f) in cat.iter() {
        let k = f.weight as i64;
        for n in 1..=10 {
            ensure!(
                t(f, n)?.series.coeffs() == naive_hecke(f.series.coeffs(), k, n).as_slice(),
                "T_{} {} differs from the divisor-sum oracle",
                n,
                name
            );
        }
        for m in 2..=6u64 {
            for n in (m + 1)..=6 {
                if !coprime(m, n) {
                    continue;
                }
                let mn = t(&t(f, n)?, m)?;
                let nm = t(&t(f, m)?, n)?;
                let direct = t(f, m * n)?;
                ensure!(mn.prec() >= 8, "precision too low for T_{}T_{}", m, n);
                ensure!(same(&mn, &direct) && same(&nm, &direct), "T_{}T_{} != T_{} on {}", m, n, m * n, name);
                relations += 1;
            }
        }
        for p in [2u64, 3] {
            for r in 1..=2u32 {
                let pr = p.pow(r);
                let lhs = t(&t(f, pr)?, p)?;
                let up = t(f, pr * p)?;
                let down = t(f, pr / p)?;
                let pk = q(p as i64).pow(k as i32 - 1);
                let prec = lhs.prec().min(up.prec()).min(down.prec());
                ensure!(prec >= 8, "precision too low for p={} r={}", p, r);
                let rhs = &up.series.truncate(prec) + &down.series.truncate(prec).scale(&pk);
                ensure!(lhs.series.truncate(prec) == rhs, "T_{} T_{}^{} recursion fails on {}", p, p, r, name);
                relations += 1;
            }
        }
    }
    Ok(format!("{} multiplicativity and prime-power relations on 12 catalog forms, T_n matches oracle for n <= 10", relations))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("identity suite", criterion_1),
        ("eigenform classification", criterion_2),
        ("Hecke eigenvalues", criterion_3),
        ("D-shift law", criterion_4),
        ("product search K=26 R=1 B=10", criterion_5),
        ("Diophantine scans", criterion_6),
        ("level-one separation", criterion_7),
        ("decomposition roundtrip", criterion_8),
        ("bracket properties", criterion_9),
        ("Hecke multiplicativity", criterion_10),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let ms = t.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {} ({} ms): {}", i + 1, title, ms, detail),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {} ({} ms): {}", i + 1, title, ms, why);
            }
        }
    }
    println!(
        "acceptance: {} passed, {} failed, {:.1} s",
        criteria.len() - failed,
        failed,
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
