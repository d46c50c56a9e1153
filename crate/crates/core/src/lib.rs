//! Subdivided labelled Cayley graphs of finite groups and the rewriting
//! systems read off from them.

pub mod caps;
pub mod error;
pub mod graph;
pub mod group;
pub mod letter;
pub mod nabla;
pub mod rewriting;
pub mod verify;

pub use error::{Error, Result};
