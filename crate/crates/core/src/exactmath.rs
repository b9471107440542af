//! Exact arithmetic: big rationals, Bernoulli numbers, divisor sums,
//! binomials and a dense rational linear solver.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Renders `r` as `"num/den"`. The denominator is always written, so
/// integers come out as `"240/1"`.
pub fn fraction_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `base^exp` for any integer exponent. Panics on `0^negative`.
pub fn rpow(base: i64, exp: i64) -> Rational {
    let b = BigInt::from(base);
    if exp >= 0 {
        Rational::from_integer(num_traits::pow(b, exp as usize))
    } else {
        assert!(base != 0, "zero to a negative power");
        Rational::new(BigInt::one(), num_traits::pow(b, (-exp) as usize))
    }
}

/// Bernoulli number `B_k` for even `k >= 2`, with `B_2 = 1/6`, `B_4 = -1/30`.
///
/// Computed with the Akiyama-Tanigawa transform. Odd indices are rejected
/// since the only odd one the forms need (`B_1`) depends on convention.
pub fn bernoulli(k: u32) -> Result<Rational> {
    if k < 2 || k % 2 != 0 {
        return Err(Error::BadWeight(k as i64, 2));
    }
    let n = k as usize;
    let mut row: Vec<Rational> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        row.push(Rational::new(BigInt::one(), BigInt::from(m + 1)));
        for j in (1..=m).rev() {
            let diff = &row[j - 1] - &row[j];
            row[j - 1] = diff * int(j as i64);
        }
    }
    Ok(row.swap_remove(0))
}

/// Divisor power sum `sigma_j(n) = sum_{d | n} d^j`.
pub fn sigma(j: u32, n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::NonPositive { what: "sigma argument" });
    }
    let mut total = BigInt::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            total += num_traits::pow(BigInt::from(d), j as usize);
            let e = n / d;
            if e != d {
                total += num_traits::pow(BigInt::from(e), j as usize);
            }
        }
        d += 1;
    }
    Ok(total)
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// Binomial coefficient, zero when `r < 0` or `r > n`.
pub fn binomial(n: u64, r: i64) -> BigInt {
    if r < 0 || r as u64 > n {
        return BigInt::zero();
    }
    let r = core::cmp::min(r as u64, n - r as u64);
    let mut acc = BigInt::one();
    for i in 0..r {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Non-negative integer square root when `n` is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let root = n.sqrt();
    if &(&root * &root) == n {
        Some(root)
    } else {
        None
    }
}

/// Solves `matrix * x = rhs` exactly.
///
/// Returns `Ok(None)` when the system is inconsistent. When the solution
/// space has positive dimension, free variables are set to zero. Pivots are
/// chosen as the first nonzero entry in each column.
pub fn solve_linear(matrix: &[Vec<Rational>], rhs: &[Rational]) -> Result<Option<Vec<Rational>>> {
    let rows = matrix.len();
    if rows == 0 {
        return Err(Error::DimensionMismatch("matrix has no rows".into()));
    }
    if rhs.len() != rows {
        return Err(Error::DimensionMismatch(format!(
            "{} rows but right-hand side of length {}",
            rows,
            rhs.len()
        )));
    }
    let cols = matrix[0].len();
    if let Some(bad) = matrix.iter().position(|row| row.len() != cols) {
        return Err(Error::DimensionMismatch(format!(
            "row {} has length {}, expected {}",
            bad,
            matrix[bad].len(),
            cols
        )));
    }

    // Augmented matrix, last column is the right-hand side.
    let mut aug: Vec<Vec<Rational>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();

    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut next_row = 0;
    for col in 0..cols {
        if next_row == rows {
            break;
        }
        let Some(p) = (next_row..rows).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(next_row, p);
        let inv = aug[next_row][col].recip();
        for entry in aug[next_row][col..].iter_mut() {
            *entry *= &inv;
        }
        let pivot_row = aug[next_row].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r == next_row || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (entry, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *entry -= &factor * p;
            }
        }
        pivots.push((next_row, col));
        next_row += 1;
    }

    if aug[next_row..].iter().any(|row| !row[cols].is_zero()) {
        return Ok(None);
    }
    let mut x = vec_zero(cols);
    for (r, c) in pivots {
        x[c] = aug[r][cols].clone();
    }
    Ok(Some(x))
}

pub(crate) fn vec_zero(n: usize) -> Vec<Rational> {
    (0..n).map(|_| Rational::zero()).collect()
}

/// Least common multiple of the denominators in `values` (1 for an empty slice).
pub(crate) fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| num_integer::lcm(acc, v.denom().clone()))
}
