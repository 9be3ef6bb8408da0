//! Batch driver for the exact identity checks: manifests in, verdicts out.

pub mod catalog;
pub mod error;
pub mod manifest;
pub mod report;
pub mod runner;

pub use error::CliError;
pub use manifest::{load, Problem};
pub use report::Report;
pub use runner::{run, RunOptions};

/// Manifests shipped with the binary.
pub const FIXTURES: &[(&str, &str)] = &[
    ("sl2", include_str!("../fixtures/sl2.json")),
    ("clebsch-sl2", include_str!("../fixtures/clebsch-sl2.json")),
    ("gl2-double", include_str!("../fixtures/gl2-double.json")),
    ("gmu", include_str!("../fixtures/gmu.json")),
];

pub fn fixture(name: &str) -> Result<&'static str, CliError> {
    FIXTURES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t).ok_or_else(|| CliError::UnknownFixture(name.to_string()))
}
