//! Sweeps and verification reports over the q-zeta approximants.

pub mod report;
pub mod suites;
pub mod sweep;

pub use report::{Claim, Depth, RunConfig, Status, Summary, VerificationReport};
pub use suites::{run, Config, Suite};
pub use sweep::{sweep, SweepRow};

/// Parses one base `p >= 2`.
pub fn parse_base(s: &str) -> Result<u64, String> {
    let p: u64 = s.trim().parse().map_err(|_| format!("`{s}` is not a nonnegative integer"))?;
    if p < 2 {
        return Err(format!("p must be at least 2, got {p}"));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bases() {
        assert_eq!(parse_base(" 3"), Ok(3));
        assert!(parse_base("1").is_err());
        assert!(parse_base("x").is_err());
    }
}
