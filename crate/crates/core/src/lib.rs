// SPDX-License-Identifier: Apache-2.0

//! Exact symbolic construction of BRST complexes for W-algebras attached to
//! small Lie superalgebras, with verification of the closed formulas for their
//! Virasoro and current elements.

pub mod arith;
pub mod brst;
pub mod calculus;
pub mod catalog;
pub mod lie;

/// Environment variable naming the worker count.
pub const WORKERS_ENV: &str = "WBRST_WORKERS";

/// Sizes the global worker pool. Returns `false` if it was already built.
#[cfg(feature = "parallel")]
pub fn configure_workers(n: usize) -> bool {
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().is_ok()
}

/// Sequential build: there is no pool to size.
#[cfg(not(feature = "parallel"))]
pub fn configure_workers(_n: usize) -> bool {
    true
}
