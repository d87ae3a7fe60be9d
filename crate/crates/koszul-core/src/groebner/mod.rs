//! Groebner machinery over the exact polynomial core: ideal and module bases,
//! normal forms, syzygies, annihilators, Fitting ideals, exterior powers,
//! Hilbert series, and filtration-graded dimension tables.

pub mod hilbert;
pub mod ideal;
pub mod module;
pub mod ops;

pub use hilbert::{
    filtered_dims_truncated, graded_dims_truncated, hilbert_series, initial_lowest_ideal,
    HilbertError, HilbertSeries,
};
pub use ideal::{
    colon_ideal, exact_div, ideal_gb, ideal_intersection, ideal_intersection_many, ideal_member,
    ideals_equal, is_unit_ideal, nf_poly, radical_membership_witness,
};
pub use module::{
    module_gb, svec_add, svec_is_zero, svec_lead, svec_mul_poly, svec_mul_term, svec_nf,
    svec_reduces_to_zero, svec_scale, svec_sub, svec_zero, syzygies, SVec, TaggedGB,
};
pub use ops::{
    ann_cokernel, det_poly, exterior_power, fitting_ideal, minimize_presentation, minors,
    subquotient, FpModule,
};
