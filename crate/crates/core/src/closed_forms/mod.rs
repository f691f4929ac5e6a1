//! Closed-form evaluators for the families whose elementary divisors or
//! Jantzen layers are known in closed form.

mod hook;
mod large_prime;
mod lemfund;
mod schaper;
mod two_column;
mod two_row;

pub use hook::{hook_forms, hook_group, hook_layers, hook_order, hook_polytabloid, hook_trigonal_basis, HookForms};
pub use large_prime::{large_prime_analyze, LargePrimeCase, LargePrimeReport};
pub use lemfund::{lemfund_verify, lemfund_verify_matrix, LemFundViolation, TrigonalBases};
pub use schaper::{rectangular_scale, schaper_family, SchaperFamily};
pub use two_column::{
    angle_polytabloid, angle_rho_plus, angle_tableau, lem22_order, two_column_22_group, two_column_22_structure, two_column_entry,
};
pub use two_row::{
    contains_base_p, f2_closed_form, f2_sum, two_row_context, two_row_decomposition, two_row_ediv,
    two_row_ediv_large_prime, two_row_rank, TwoRowContext,
};
