//! The envelope every command prints, and the mapping from library errors
//! to process exit codes.

use serde::Serialize;
use serde_json::Value;

use segre::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_SINGULAR: i32 = 2;
pub const EXIT_NON_GENERIC: i32 = 3;
pub const EXIT_SELFTEST: i32 = 4;

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error { kind: String, message: String },
}

impl Status {
    pub fn from_error(e: &Error) -> Self {
        Status::Error { kind: kind(e).to_string(), message: e.to_string() }
    }
}

/// Field order is part of the output format; JSON maps inside `inputs` and
/// `outputs` are key-sorted, so identical runs print identical bytes.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub outputs: Value,
    pub status: Status,
}

pub fn kind(e: &Error) -> &'static str {
    match e {
        Error::ZeroPolynomial => "ZeroPolynomial",
        Error::NotSquarefree => "NotSquarefree",
        Error::NotSquare { .. } => "NotSquare",
        Error::DegenerateInput(_) => "DegenerateInput",
        Error::SingularPencil => "SingularPencil",
        Error::IrrationalEigenvalues => "IrrationalEigenvalues",
        Error::DuplicateEigenvalues => "DuplicateEigenvalues",
        Error::ArityMismatch { .. } => "ArityMismatch",
        Error::NonGenericData(_) => "NonGenericData",
        Error::CommonComponent => "CommonComponent",
        Error::UnsupportedDimension(_) => "UnsupportedDimension",
        Error::DimensionMismatch(..) => "DimensionMismatch",
        Error::Parse(_) => "ParseError",
        Error::InvalidPencil(_) => "InvalidPencil",
        Error::Internal(_) => "Internal",
        Error::SelfTestFailure(_) => "SelfTestFailure",
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SingularPencil => EXIT_SINGULAR,
        Error::NonGenericData(_) | Error::CommonComponent => EXIT_NON_GENERIC,
        Error::SelfTestFailure(_) => EXIT_SELFTEST,
        _ => EXIT_USAGE,
    }
}
