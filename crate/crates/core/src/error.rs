use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("order too large: index {index} exceeds coefficient cap {cap}")]
    OrderTooLarge { index: usize, cap: usize },

    #[error("degenerate Apostol parameter: |t - 1| = {distance:e} is within tolerance of the pole at t = 1")]
    DegenerateApostol { distance: f64 },

    #[error("parameter on singular set: {0}")]
    SingularParameter(String),

    #[error("m must be odd for this family (got m = {0})")]
    EvenM(u32),

    #[error("m out of range: need 0 < m < d (got m = {m}, d = {d})")]
    MOutOfRange { m: u32, d: u32 },

    #[error("invalid power n = {n}: {reason}")]
    InvalidPower { n: u32, reason: &'static str },

    #[error("missing second shift b2 for a triple-product family")]
    MissingSecondShift,

    #[error("non-finite shift parameter")]
    NonFiniteShift,

    #[error("imaginary residual too large: |Im| = {imag:e} against |Re| = {real:e}")]
    ImaginaryResidual { real: f64, imag: f64 },

    #[error("singular term at j = {index}: argument within {distance:e} rad of a pole")]
    SingularTerm { index: u32, distance: f64 },

    #[error("non-invertible series: leading coefficient magnitude {0:e}")]
    NonInvertibleSeries(f64),

    #[error("{family} is not supported by the {path} path")]
    UnsupportedFamily {
        family: &'static str,
        path: &'static str,
    },
}

impl Error {
    /// True for errors caused by the caller's parameters rather than by the
    /// numerics.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::OrderTooLarge { .. }
                | Error::SingularParameter(_)
                | Error::EvenM(_)
                | Error::MOutOfRange { .. }
                | Error::InvalidPower { .. }
                | Error::MissingSecondShift
                | Error::NonFiniteShift
                | Error::UnsupportedFamily { .. }
        )
    }
}
