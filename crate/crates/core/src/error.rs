use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("{what} index {value} out of range {min}..={max}")]
    IndexOutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },
    #[error("permutation {0:?} is not a bijection of {{1,2,3}}")]
    NotBijective([u8; 3]),
    #[error("phase {re}{im:+}j has modulus {modulus}, expected 1")]
    NonUnitPhase { re: f64, im: f64, modulus: f64 },
    #[error("phase must be finite and nonzero")]
    DegeneratePhase,
    #[error("reconstruction residual {residual:e} exceeds {tolerance:e}")]
    DecomposeResidual { residual: f64, tolerance: f64 },
    #[error("generator set is linearly dependent (pivot {pivot:e} below {threshold:e})")]
    DegenerateSet { pivot: f64, threshold: f64 },
    #[error("singular linear system (pivot {pivot:e})")]
    Singular { pivot: f64 },
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_range(what: &'static str, value: i64, min: i64, max: i64) -> Result<()> {
    if (min..=max).contains(&value) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange {
            what,
            value,
            min,
            max,
        })
    }
}
