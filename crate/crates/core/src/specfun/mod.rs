//! Scalar special functions: log Γ, ψ, Pochhammer symbols, ₂F₁ and Chebyshev T_n.

mod chebyshev;
mod gamma;
mod hyp2f1;

pub use chebyshev::{chebyshev_t, cos_form_f};
pub use gamma::{digamma, gamma, log_gamma, nonpositive_integer, pochhammer, rgamma};
pub use hyp2f1::{
    gauss_2f1, gauss_2f1_log_case, hyp2f1, hyp2f1_one_minus, CutSide, HyperParams, Region, LOG_CASE_THRESHOLD,
    MAX_TERMS,
};
