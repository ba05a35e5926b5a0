//! Enumeration and counting of monotone Boolean functions (MBFs) and of their
//! equivalence classes under renaming of variables, organised by profile.

pub mod bits;
pub mod enumerate;
pub mod error;
pub mod estimate;
pub mod math;
pub mod oracle;
pub mod profile;
pub mod store;
pub mod symmetry;
pub mod truthtable;
pub mod verify;

pub use error::{Error, Result};
pub use profile::{generate_profiles, shadow_bound, Profile};
pub use symmetry::{
    apply_permutation, canonical_form, is_asymmetric, ClassRecord, VariablePermutation,
};
pub use truthtable::{MinimalTermSet, TruthTable};
