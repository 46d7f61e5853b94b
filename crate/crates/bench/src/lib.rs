//! Fixtures shared by the benchmarks.

use jue_core::Partition;

/// Parses a partition literal.
pub fn part(s: &str) -> Partition {
    s.parse().expect("literal partition")
}
