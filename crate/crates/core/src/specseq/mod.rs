//! Bigraded pages of the two spectral sequences converging to the Borel
//! cohomology of the free loop space: the Serre spectral sequence of
//! `LX -> LX_hT -> BT` through `E_3`, and the `E_1` page of the energy
//! filtration, with the cross-checks between them.

pub mod morse;
pub mod page;
pub mod serre;
pub mod structural;

pub use morse::{
    free_generator_table, morse_closed_form, morse_e1, morse_e1_with, morse_three_term_form,
    thom_shift, ColumnKind, MorseColumn, MorseE1Catalog, MorseGenerator,
};
pub use page::{BigradedPage, PageEntry};
pub use serre::{
    e3_closed_form, image_series, index_series_identities, serre_collapse_check, serre_d2,
    serre_e2, serre_e3, serre_report, E3Generator, E3Monomial, E3Presentation, SerreReport,
};
pub use structural::{
    collapse_gap, e1_equals_abutment, structural_checks, structural_checks_with,
    structural_cutoff, StructuralCheck, StructuralReport,
};
