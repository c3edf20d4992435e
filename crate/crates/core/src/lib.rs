//! Finite strict 2-groups, crossed modules and relative Rota–Baxter
//! operators on them, with exhaustive verifiers and search engines.

pub mod error;
pub mod fingroup;
pub mod fixtures;
pub mod io;
pub mod liealg;
pub mod mutation;
pub mod rrb;
pub mod search;
pub mod theorems;
pub mod twogroup;
pub mod xhom;
pub mod xmod;
pub mod ybe;

pub use error::{Error, Result};
