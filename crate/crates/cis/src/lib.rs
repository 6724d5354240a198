//! Scans, theorem verification, report formats, graph files and the
//! command line, on top of `cis-core`.

pub mod cli;
pub mod input;
pub mod report;
pub mod scan;
pub mod verify;

pub use input::{crosscheck_catalog, read_graphs, CatalogDiff, InputError};
pub use report::{to_json, to_json_without_metadata};
pub use scan::{extremal_scan, extremes, profile_catalog, Extremes, Profiled, ScanReport};
pub use verify::{
    verify_theorems, ClaimResult, ClaimStatus, Counterexample, VerificationReport, VerifyCaps,
};
