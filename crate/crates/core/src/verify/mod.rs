//! Reproducible verification reports: identities between catalog forms,
//! eigenform classification searches, Diophantine scans and the
//! low-coefficient separation of cusp eigenforms.
//!
//! Every check records its inputs as a witness so that a failure can be
//! re-derived by hand.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::forms::FormName;
use crate::hecke::EigenReport;
use crate::qseries::QSeries;

pub mod diophantine;
pub mod ghitza;
pub mod identities;
pub mod search;

pub use diophantine::{diophantine_suite, DiophantineEquation};
pub use ghitza::ghitza_check;
pub use identities::identity_suite;
pub use search::{bracket_search, product_search, SearchConfig};

/// Minimum precision accepted by the identity suite.
pub const SUITE_PREC: usize = 128;

/// Structured witness data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Int(BigInt),
    Rat(Rational),
    Text(String),
    Bool(bool),
    List(Vec<Value>),
    Map(Witness),
}

macro_rules! value_from_int {
    ($($t:ty),*) => {$(
        impl From<$t> for Value {
            fn from(v: $t) -> Value {
                Value::Int(BigInt::from(v))
            }
        }
    )*};
}
value_from_int!(i64, u64, u32, usize);

impl From<BigInt> for Value {
    fn from(v: BigInt) -> Value {
        Value::Int(v)
    }
}

impl From<Rational> for Value {
    fn from(v: Rational) -> Value {
        Value::Rat(v)
    }
}

impl From<&Rational> for Value {
    fn from(v: &Rational) -> Value {
        Value::Rat(v.clone())
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Value {
        Value::Text(v.to_string())
    }
}

impl From<String> for Value {
    fn from(v: String) -> Value {
        Value::Text(v)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Value {
        Value::Bool(v)
    }
}

impl From<Witness> for Value {
    fn from(v: Witness) -> Value {
        Value::Map(v)
    }
}

impl<T: Into<Value>> From<Vec<T>> for Value {
    fn from(v: Vec<T>) -> Value {
        Value::List(v.into_iter().map(Into::into).collect())
    }
}

/// Ordered key/value witness attached to a check.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Witness(pub Vec<(String, Value)>);

impl Witness {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.0.push((key.to_string(), value.into()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.0.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }
}

/// One verified claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRecord {
    pub id: String,
    /// The mathematical statement being checked.
    pub anchor: String,
    pub pass: bool,
    pub witness: Option<Witness>,
}

impl CheckRecord {
    pub fn new(id: impl Into<String>, anchor: impl Into<String>, pass: bool, witness: Witness) -> Self {
        CheckRecord { id: id.into(), anchor: anchor.into(), pass, witness: Some(witness) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport { suite: suite.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, check: CheckRecord) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn find(&self, id: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.id == id)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Identities,
    Products,
    Brackets,
    Diophantine,
    Ghitza,
    All,
}

impl Suite {
    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Products => "products",
            Suite::Brackets => "brackets",
            Suite::Diophantine => "diophantine",
            Suite::Ghitza => "ghitza",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        [Suite::Identities, Suite::Products, Suite::Brackets, Suite::Diophantine, Suite::Ghitza, Suite::All]
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| Error::OutOfRange(alloc::format!("unknown suite `{}`", s)))
    }
}

/// Runs a suite with the default search configuration at precision `prec`.
pub fn run_suite(suite: Suite, prec: usize) -> Result<VerificationReport> {
    let cfg = SearchConfig { prec, ..SearchConfig::default() };
    Ok(match suite {
        Suite::Identities => identity_suite(prec)?,
        Suite::Products => product_search(&cfg)?.report,
        Suite::Brackets => bracket_search(&SearchConfig { max_deriv: 4, ..cfg })?.report,
        Suite::Diophantine => diophantine_suite(),
        Suite::Ghitza => ghitza_check(26)?,
        Suite::All => {
            let mut all = VerificationReport::new("all");
            for s in [Suite::Identities, Suite::Products, Suite::Brackets, Suite::Diophantine, Suite::Ghitza] {
                all.extend(run_suite(s, prec)?);
            }
            all
        }
    })
}

/// First exponent where two series differ, over their common precision.
pub fn first_difference(a: &QSeries, b: &QSeries) -> Option<usize> {
    let prec = a.prec().min(b.prec());
    (0..=prec).find(|&m| a.coeff(m) != b.coeff(m))
}

/// Checks `lhs == rhs` coefficientwise.
pub(crate) fn series_check(id: &str, anchor: &str, lhs: &QSeries, rhs: &QSeries) -> CheckRecord {
    match first_difference(lhs, rhs) {
        None => CheckRecord::new(
            id,
            anchor,
            true,
            Witness::new().with("coefficients_compared", lhs.prec().min(rhs.prec()) + 1),
        ),
        Some(m) => CheckRecord::new(
            id,
            anchor,
            false,
            Witness::new().with("exponent", m).with("lhs", lhs.coeff(m)).with("rhs", rhs.coeff(m)),
        ),
    }
}

/// Witness summarizing an eigenform test.
pub(crate) fn eigen_witness(report: &EigenReport) -> Witness {
    let mut w = Witness::new()
        .with("bound", report.tested_bound)
        .with("window", report.window)
        .with("precision", report.precision_used)
        .with("eigen", report.is_eigen_up_to_bound);
    if let Some(v) = &report.first_violation {
        w = w.with(
            "violation",
            Witness::new()
                .with("n", v.n)
                .with("component", v.component)
                .with("exponent", v.exponent)
                .with("expected", &v.expected)
                .with("actual", &v.actual),
        );
    } else {
        let lambdas: Vec<Value> = report.eigenvalues.iter().map(|(_, l)| Value::from(l)).collect();
        w = w.with("eigenvalues", lambdas);
    }
    w
}

/// A catalog form with `D` applied `deriv` times.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Factor {
    pub name: FormName,
    pub deriv: u32,
}

impl Factor {
    pub const fn new(name: FormName, deriv: u32) -> Self {
        Factor { name, deriv }
    }

    pub fn weight(self) -> u32 {
        self.name.weight() + 2 * self.deriv
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.deriv {
            0 => write!(f, "{}", self.name),
            1 => write!(f, "D({})", self.name),
            r => write!(f, "D^{}({})", r, self.name),
        }
    }
}
