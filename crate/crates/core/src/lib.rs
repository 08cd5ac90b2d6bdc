pub mod error;
pub mod exact;
pub mod fourier;
pub mod liealg;
pub mod realize;
pub mod report;
pub mod suite;
pub mod verma;
pub mod weyl;

pub use error::{Error, Result};
pub use report::{CheckRecord, Report};
