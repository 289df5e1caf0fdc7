//! Both sides of the hook formulas, in exact arithmetic.

pub mod bar;
pub mod hook;
pub mod naruse;
pub mod series;

pub use bar::{
    bar_formula_check, bar_hook, bar_window_lower_bound, bar_window_sum, tagawa_identity_check, BarReport, TagawaReport,
};
pub use hook::{
    f_lms, f_lms_closed, f_lmst, f_lmst_closed, h_ml, h_st, hook_formula_check, path_sum, FlmsReport, FlmstReport,
    HookReport,
};
pub use naruse::{naruse_rhs, verify_naruse, NaruseReport};
pub use series::{
    cyl_partial_sum, cyl_tail_estimate, periodic_tail_estimate, shift_invariance_check, verify_bar_bound,
    verify_conjecture, verify_until, CylSums, Method, PartialSum, ShiftReport, Verdict, VerificationReport, Work,
};
