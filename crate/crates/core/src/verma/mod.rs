//! Virasoro highest-weight modules.

pub mod character;
pub mod gram;
pub mod module;
pub mod partition;
pub mod weights;

pub use character::{character, character_from_data};
pub use gram::{
    contravariant_form, dual_basis, first_singular_level, gram_matrix, singular_vector, GramMatrix,
};
pub use module::{act_mode, HWModuleDescriptor, PBWVector, QuotientRelation};
pub use partition::Partition;
pub use weights::{central_charge_from_t, h_r1_c1, h_r1_c25, h_rs};
