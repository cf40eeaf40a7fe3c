//! Core groups of classical and virtual link diagrams.

pub mod abelian;
pub mod diagram;
pub mod enumeration;
pub mod error;
pub mod groups;
pub mod presentation;
pub mod verify;

pub use error::{Error, Result};
