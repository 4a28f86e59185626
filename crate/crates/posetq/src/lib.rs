//! Queue layouts of partial orders.
//!
//! This crate builds finite posets, certifies their width via Dilworth
//! chain partitions, analyses rainbows and queue partitions of cover-graph
//! layouts under linear extensions, and solves small instances for the
//! exact queue-number. It also generates the reinforcement and lifted
//! poset families whose queue-number grows quadratically in the width,
//! together with machine checks of the bounds they certify.
//!
//! Entry points:
//! - [`poset`]: the core poset type with closure, reduction, duals,
//!   width certificates, and linear-extension streams.
//! - [`layout`]: rainbows, minimum queue partitions, the universal
//!   Heath-Pemmaraju assignment, and the exact queue-number solver.
//! - [`construct`]: parametric family generators (`build_r`, `build_p`,
//!   antichains with realizers, complete-bipartite posets, the planar
//!   matched construction, and the two lifting operations).
//! - [`verify`]: machine checks producing [`VerificationReport`]s.
//! - [`mod@file`]: the on-disk poset document format.
//!
//! The `examples/` directory shows one runnable program per capability;
//! the `posetq` binary exposes the same operations as subcommands.

pub mod cli;
pub mod construct;
pub mod dot;
mod error;
pub mod file;
mod lis;
pub mod layout;
pub mod poset;
pub mod rng;
pub mod verify;

pub use error::{Error, Result};
pub use verify::VerificationReport;
