//! The analytic route: Wilson coefficients, the `R` matrix series and JUE correlators.

pub mod coeffs;
pub mod correlators;
pub mod hypergeom;
pub mod rseries;

use std::fmt;
use std::str::FromStr;

pub use coeffs::{a_hypergeometric, a_wilson, b_hypergeometric, b_wilson, coeff, coeff_value, Kind, WilsonCoeffs};
pub use correlators::{
    connected_correlator, connected_slots, correlator, mixed_connected, moment, two_point_via_series, CorrelatorQuery,
    Slot,
};
pub use hypergeom::{gamma_ratio, hyp4f3_terminating, pochhammer, pochhammer_inv, wilson_eval};
pub use rseries::{lax_matrices, lax_residue, lax_residue_check, r_series, Mat2, MatrixSeries2x2, Point};

use crate::error::Error;

/// Positive powers `tr X^k` or negative powers `tr X^-k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "pos",
            Sign::Negative => "neg",
        })
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "pos" | "positive" | "+" => Ok(Sign::Positive),
            "neg" | "negative" | "-" => Ok(Sign::Negative),
            _ => Err(Error::Invalid(format!("sign must be pos or neg, got {s:?}"))),
        }
    }
}
