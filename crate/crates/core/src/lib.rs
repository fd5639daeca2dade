pub mod abelian;
pub mod catalog;
pub mod central;
pub mod constructors;
pub mod error;
pub mod group;
pub mod holomorph;

pub use error::{Error, Result};
pub use group::{FiniteGroup, Homomorphism, Subgroup};
