//! Exact arithmetic over `Z[v^±1, s^±1]` and its localization at the
//! factors `s^k - s^-k`.

mod format;
mod laurent;
mod scalar;

pub use format::{parse_latex, parse_plain, parse_poly, render_json, render_latex, render_plain, ParseError};
pub use laurent::{Exponent, LaurentPoly};
pub use scalar::{DenomFactor, SkeinScalar};

/// `delta = (v^-1 - v) / (s - s^-1)`.
pub fn delta() -> SkeinScalar {
    SkeinScalar::delta()
}
