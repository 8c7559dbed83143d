//! Bivariate generating functions in `x` and `q`: truncated series, closed
//! forms with their expansion, and the operators used on them.

pub mod closed_form;
pub mod golden;
pub mod operators;
pub mod parse;
pub mod series;

pub use closed_form::{BiPoly, Binomial, ClosedForm, Monomial};
pub use operators::{
    f_direct, f_product, g_series, h_series, nonneg_check, pt_prime, q_slice, series_equal, x_section, Window,
};
pub use parse::FormLibrary;
pub use series::{QSeries, XSeries};
