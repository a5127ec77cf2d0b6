//! The `qplane` command-line tool: exact computations, verification suites
//! and Clebsch–Gordan tables over `Q(q, u, v)`.

pub mod app;
pub mod expr;
pub mod render;
pub mod suites;

pub use app::{run, EXIT_FAIL, EXIT_OK, EXIT_USAGE};
