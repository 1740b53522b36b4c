pub mod cli;
pub mod error;
pub mod group;
pub mod mapping;
pub mod perm;
pub mod report;
pub mod verify;
pub mod surface;
pub mod symplectic;
