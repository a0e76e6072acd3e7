//! Library surface of the command-line tool: file formats, reports, and the
//! subcommand implementations, reusable from integration tests.

pub mod commands;
pub mod formats;
pub mod paper;
pub mod report;

/// Seed resolution: explicit flag, then the TILTLAB_SEED environment
/// variable, then the engine default.
pub fn resolve_seed(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("TILTLAB_SEED")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(tiltlab::modcat::DEFAULT_SEED)
}
