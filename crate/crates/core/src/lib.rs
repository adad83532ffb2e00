pub mod classify;
pub mod cli;
pub mod cohomology;
pub mod error;
pub mod graph;
pub mod hessenberg;
pub mod patterns;
pub mod perm;
pub mod roots;
pub mod verify;

pub use error::{Error, Result};
