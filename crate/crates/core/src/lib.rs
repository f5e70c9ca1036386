//! Evaluation and verification of finite trigonometric sums of the form
//! `Σ cos(2πmj/d)·cotⁿ(π(j/d + b))` and their sine, cosecant, tangent and
//! product relatives.
//!
//! Three independent routes are provided and are expected to agree:
//! closed forms ([`closed_form`]), direct summation ([`oracle`]) and local
//! Laurent-series residue computation ([`residue`]).

pub mod closed_form;
pub mod coefficients;
pub mod error;
pub mod multiindex;
pub mod oracle;
pub mod residue;
pub mod summation;
pub mod trig;
pub mod verify;

pub use closed_form::{evaluate, validate_params, EvalPath, Family, SumSpec, SumValue};
pub use coefficients::{apostol_a, bernoulli, cot_coeff, csc_coeff, CoefficientTable, Rational};
pub use error::{Error, Result};
pub use oracle::direct_sum;
pub use residue::{sum_via_residues, IntegrandDescriptor, LaurentSeries};
pub use verify::{PathSet, VerificationReport};
