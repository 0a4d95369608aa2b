//! Tools for t-dominating graphs.
//!
//! A vertex `u` t-dominates `v` when at most `t` vertices other than `u`, `v`
//! are adjacent to `v` and not to `u`; a graph is t-dominating when every pair
//! has one member t-dominating the other. 0-dominating graphs are exactly the
//! threshold graphs. This crate repairs any t-dominating graph into a
//! threshold graph with local difference at most `646t⁴`, through a split-graph
//! reduction and a 0/1 matrix repair, and ships the brute-force oracles,
//! generators and companion constructions used to check those bounds.

pub mod counterexample;
pub mod domination;
pub mod eh;
mod error;
pub mod format;
pub mod generate;
pub mod graph;
pub mod induced;
pub mod matrix;
pub mod oracle;
pub mod pipeline;
pub mod recognize;

use std::str::FromStr;

use serde::Serialize;

pub use error::{Error, Result};
pub use graph::{local_difference, Graph};
pub use matrix::{matrix_local_difference, BinaryMatrix};

/// How much self-checking an operation performs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verify {
    /// Skip postcondition checks.
    Off,
    /// Check the operation's own end-to-end contract.
    #[default]
    Post,
    /// Also re-check every intermediate stage.
    Full,
}

impl Verify {
    /// Level handed to sub-stages of a composed operation.
    pub fn stage(self) -> Verify {
        match self {
            Verify::Full => Verify::Full,
            Verify::Post | Verify::Off => Verify::Off,
        }
    }
}

impl FromStr for Verify {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "off" => Ok(Verify::Off),
            "post" => Ok(Verify::Post),
            "full" => Ok(Verify::Full),
            other => Err(Error::Input(format!("unknown verify level {other:?}"))),
        }
    }
}
