//! Chance models and exact tests for ensembles of distributions.

pub mod chance;
pub mod ensemble;
pub mod poisson_binomial;
pub mod wilcoxon;

pub use chance::{
    contiguity_product, p_contiguous_given_m, p_contiguous_numeric, p_optimal_given_m,
    pi_optimal_numeric,
};
pub use ensemble::{run_ensemble, EnsembleResult, TrialRecord, WilcoxonOutcome};
pub use poisson_binomial::{poisson_binomial_pmf, poisson_binomial_right_tail};
pub use wilcoxon::{wilcoxon_signed_rank, Alternative, WilcoxonResult};
