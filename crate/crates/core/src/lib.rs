//! Tverberg partitions with prescribed signs of the affine coefficients.
//!
//! A Tverberg partition of `n = (r-1)(d+1)+1` points in `R^d` splits them into
//! `r` parts whose convex hulls share a point. Writing that point as an affine
//! combination of each part gives one coefficient per input point; this crate
//! finds partitions where the negative coefficients land on a chosen subset,
//! either constructively (tensor lift plus colourful Carathéodory pivoting) or
//! by exhaustive search. All arithmetic is exact.

pub mod batch;
pub mod cli;
pub mod colored;
pub mod error;
pub mod exact;
pub mod instances;
pub mod io;
pub mod lp;
pub mod minnorm;
pub mod sarkaria;
pub mod search;
pub mod tverberg;

pub use error::{Error, Result};
pub use exact::{parse_rat, RMat, RVec, Rat};
pub use tverberg::{full_size, AffineCertificate, Intersection, Partition, PointConfig};
