//! Flat model: gamma matrices of signature `(r, s)` acting on spinor-valued
//! polynomials, with `x = Σ γ_a X^a`, `y = Σ ε_a γ_a ∂_a` and
//! `h = X^a ∂_a + d/2`. All arithmetic is over the Gaussian rationals.

mod gamma;
mod gauss;
mod kernel;
mod linalg;
mod spinor;
pub mod suites;

pub use gamma::{build_gammas, GammaSet, Signature};
pub use gauss::GaussRat;
pub use kernel::{
    basic_null_vector, kernel_lemma_report, mixed_signatures, null_kernel_analysis, random_null_vector,
    KernelAnalysis,
};
pub use linalg::{span_rank, Mat};
pub use spinor::{apply_ops, gen_op, is_tangential, random_vector, reduce_mod_q, AmbientOps, Op, PolySpinor};
pub use suites::{cross_module_oracle, verify_flat_relations, verify_flat_suite, DEFAULT_SIGNATURES};
