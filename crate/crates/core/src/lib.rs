//! Exact measurement of how well a distribution over the `n!` orderings of a
//! sequence minimizes swap distance on the permutohedron.
//!
//! The crate is organized bottom-up:
//!
//! - [`permutation`] and [`permutohedron`]: orderings, swap (Kendall tau)
//!   distance and the adjacent-transposition graph.
//! - [`distribution`]: exact probability vectors over the vertices, the
//!   Simpson and dominance indices and ranked probabilities.
//! - [`optimality`]: average swap distance, its random baselines and
//!   extremes, the optimality score and analytic bounds.
//! - [`structure`]: contiguity, adjacency, radiation, `/` and `∧`
//!   structures, and Hasse diagrams of induced orders.
//! - [`stats`]: chance models, Poisson binomial tests, the exact Wilcoxon
//!   signed-rank test and ensemble aggregation.
//! - [`qap`]: a Koopmans–Beckmann quadratic assignment engine with its
//!   linear arrangement and compression specializations.
//! - [`io`]: CSV ingestion, table/JSON reports and DOT export.
//!
//! All core quantities are exact rationals; floating point only appears
//! when values are rendered.

pub mod distribution;
pub mod enumerate;
pub mod error;
pub mod io;
pub mod optimality;
pub mod permutation;
pub mod permutohedron;
pub mod qap;
pub mod rational;
pub mod stats;
pub mod structure;

pub use distribution::{OrderDistribution, RankedProbs};
pub use error::{Error, Result};
pub use optimality::{analyze, AnalyzeOptions, MinimizerSet, Omega, SwapReport};
pub use permutation::{swap_distance, Alphabet, Permutation};
pub use permutohedron::Permutohedron;
pub use rational::Rational;
pub use structure::{HasseDiagram, StructureFlags};
