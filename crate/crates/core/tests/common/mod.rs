//! Slow, independent reimplementations used as oracles by the integration
//! tests. Nothing here calls into the library's arithmetic.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// `sum_{d | n} d^j` by trial division over every `d <= n`.
pub fn sigma_naive(j: u32, n: u64) -> BigInt {
    (1..=n).filter(|d| n % d == 0).map(|d| BigInt::from(d).pow(j)).sum()
}

fn binom(n: usize, r: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..r {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `B_0..=B_n` from `sum_{j<=m} C(m+1, j) B_j = 0`, so `B_1 = -1/2`.
pub fn bernoulli_table(n: usize) -> Vec<Q> {
    let mut b = vec![q(1)];
    for m in 1..=n {
        let mut acc = Q::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += Q::from_integer(binom(m + 1, j)) * bj;
        }
        b.push(-acc / Q::from_integer(BigInt::from(m + 1)));
    }
    b
}

/// `1 - (2k/B_k) sum sigma_{k-1}(m) q^m` through `q^prec`.
pub fn eisenstein_naive(k: u32, prec: usize) -> Vec<Q> {
    let bk = bernoulli_table(k as usize)[k as usize].clone();
    let c = q(2 * k as i64) / bk;
    let mut out = vec![q(1)];
    for m in 1..=prec {
        out.push(-&c * Q::from_integer(sigma_naive(k - 1, m as u64)));
    }
    out
}

/// `q prod (1 - q^n)^24` through `q^prec`.
pub fn eta_delta(prec: usize) -> Vec<Q> {
    let mut p = vec![BigInt::zero(); prec + 1];
    p[0] = BigInt::one();
    for n in 1..=prec {
        for _ in 0..24 {
            for i in (n..=prec).rev() {
                let t = p[i - n].clone();
                p[i] -= t;
            }
        }
    }
    let mut out = vec![Q::zero(); prec + 1];
    for i in 1..=prec {
        out[i] = Q::from_integer(p[i - 1].clone());
    }
    out
}

/// Schoolbook product truncated to the shorter length.
pub fn naive_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    let len = a.len().min(b.len());
    (0..len)
        .map(|m| (0..=m).map(|i| &a[i] * &b[m - i]).fold(Q::zero(), |x, y| x + y))
        .collect()
}

pub fn naive_derivative(a: &[Q]) -> Vec<Q> {
    a.iter().enumerate().map(|(m, c)| c * q(m as i64)).collect()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Coefficient of `q^m` in `T_n` of a weight-`k` expansion `a`:
/// `sum_{d | (m, n)} d^(k-1) a_(mn/d^2)`. Negative `k - 1` is allowed.
pub fn naive_hecke_coeff(a: &[Q], k: i64, n: u64, m: usize) -> Q {
    let g = gcd(m as u64, n);
    let mut acc = Q::zero();
    for d in 1..=n {
        if n % d != 0 || g % d != 0 {
            continue;
        }
        let e = k - 1;
        let pw = if e >= 0 {
            Q::from_integer(BigInt::from(d).pow(e as u32))
        } else {
            Q::new(BigInt::one(), BigInt::from(d).pow((-e) as u32))
        };
        acc += pw * &a[(m as u64 * n / (d * d)) as usize];
    }
    acc
}

/// Full `T_n` image through `floor((a.len() - 1) / n)`.
pub fn naive_hecke(a: &[Q], k: i64, n: u64) -> Vec<Q> {
    let prec = (a.len() - 1) / n as usize;
    (0..=prec).map(|m| naive_hecke_coeff(a, k, n, m)).collect()
}

pub fn is_integer(x: &Q) -> bool {
    x.denom().is_one()
}

pub fn abs(x: &Q) -> Q {
    x.abs()
}
