//! Exact symbolic engine for Virasoro modules at central charge 25 (and 1, and
//! generic values): Verma modules and Gram forms, intertwining-operator pairings,
//! the BPZ rigidity computation, sl2-type fusion and the braided category C(-1, sl2).

pub mod bpz;
pub mod category;
pub mod correlator;
pub mod error;
pub mod fusion;
pub mod scalar;
pub mod suite;
pub mod verma;

pub use error::{Error, Result};
