//! Exact q-expansion arithmetic for modular forms on SL2(Z).
//!
//! Everything here works over arbitrary-precision rationals: Eisenstein
//! series and the normalized cusp forms of one-dimensional cusp spaces,
//! Hecke operators on holomorphic and nearly holomorphic forms, the
//! Maass-Shimura operator, Rankin-Cohen brackets and the quasimodular
//! decomposition into derivatives of modular forms. The [`verify`] module
//! builds reproducible reports on top of those pieces.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod brackets;
pub mod error;
pub mod exactmath;
pub mod expr;
pub mod forms;
pub mod hecke;
pub mod nearly;
pub mod qseries;
pub mod verify;

pub use brackets::rankin_cohen;
pub use error::{Error, Result};
pub use expr::parse_poly;
pub use exactmath::{bernoulli, binomial, fraction_string, sigma, solve_linear, Rational};
pub use forms::{
    cusp_delta, eisenstein, eval_generator_poly, eval_generator_poly_graded, is_modular_member,
    monomial_basis, Catalog, FormName, GenPoly, Generator,
};
pub use hecke::{eigenform_test, eigenform_test_nearly, hecke, hecke_nearly, EigenReport, Violation};
pub use nearly::{constant_term, e2_star, maass_shimura, quasimodular_decompose, YPolyForm};
pub use qseries::{GradedSeries, QSeries};
