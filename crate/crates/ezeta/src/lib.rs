//! On-disk cache, table file format, parallel table builds and the `ezeta`
//! command-line front end over [`ezeta_core`].

pub mod build;
pub mod cache;
pub mod cli;
pub mod format;

pub use ezeta_core as core;
