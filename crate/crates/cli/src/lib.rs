//! Harness around `mccoy-core`: ring loading, the `build` / `check` /
//! `paper-verify` / `search` commands, and JSON or markdown reports.
//!
//! Exit codes: 0 all pass, 1 assertion or expectation failure, 2 usage or
//! parse error, 3 capacity.

pub mod commands;
pub mod config;
pub mod load;
pub mod markdown;
pub mod report;
pub mod search;
pub mod suite;

pub use commands::{cmd_build, cmd_check, cmd_paper_verify, cmd_search, BuildSummary};
pub use config::{Format, RunConfig};
pub use load::{load_ring, LoadedRing};
pub use report::{CheckRecord, EntryReport, Report, RingSummary, Rollup, Status, SCHEMA_VERSION};
pub use suite::{entry_keys, traceability, TraceRow};

use mccoy_core::Error;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

/// Exit code for a core error.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_capacity() {
        EXIT_CAPACITY
    } else {
        EXIT_USAGE
    }
}

/// Runs `f` on a dedicated pool of `workers` threads.
pub fn with_workers<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> mccoy_core::Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::usage(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(f))
}
