//! Root-system combinatorics for the absolute-continuity classification of
//! convolution powers of orbital measures on exceptional symmetric spaces.

pub mod cache;
pub mod catalog;
pub mod classify;
pub mod criteria;
pub mod error;
pub mod linalg;
pub mod root_system;
pub mod rootset;
pub mod subsystem;
pub mod vector;
pub mod weyl;

pub use error::{Error, Result};
pub use root_system::{Family, LieType, MultiplicityPattern, RootSystem};
pub use rootset::RootSet;
pub use vector::ExactVector;
pub use weyl::{Limits, Session};
