use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("table must have at least one row, got max_row = {0}")]
    EmptyTable(usize),

    #[error("row {row} is outside the built table (max_row = {max_row})")]
    RowOutOfRange { row: usize, max_row: usize },

    #[error("order r = {0} is outside the domain of this formula (need r >= 1)")]
    OrderTooSmall(usize),

    #[error("order r = {r} exceeds the supported maximum {max}")]
    OrderTooLarge { r: usize, max: usize },

    #[error("Hurwitz zeta shift must be positive, got {0}")]
    NonPositiveShift(String),

    #[error("x = -1 is a pole of the polylogarithm closed form")]
    Pole,

    #[error("series argument must satisfy |x| < 1, got {0}")]
    OutsideDiskOfConvergence(String),

    #[error("exponent n must lie strictly between 0 and 1, got {0}")]
    MellinExponentOutOfRange(String),

    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    #[error(
        "quadrature did not converge: estimate {estimate:e}, error estimate {est_error:e} \
         after {evaluations} evaluations"
    )]
    NonConvergence {
        estimate: f64,
        est_error: f64,
        evaluations: usize,
    },
}
