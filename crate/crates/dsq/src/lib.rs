//! Searches for Laplacian-cospectral mates and the verification suites
//! built on `dsq-core`, plus the file formats they read and write.

pub mod corpus;
pub mod fingerprint;
pub mod search;
pub mod spec;
pub mod stream;
pub mod suites;
