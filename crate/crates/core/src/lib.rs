//! Local action diagrams and the groups acting on trees that they encode.

pub mod census;
pub mod deltatree;
pub mod diagram;
pub mod error;
pub mod orient;
pub mod perm;
pub mod quotient;
pub mod registry;
pub mod sgraph;

pub use error::{Error, Result};
