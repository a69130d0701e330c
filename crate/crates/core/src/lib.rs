//! Exact algebra for F_qR-skew cyclic codes, where R = F_q + uF_q with u² = u.
//!
//! The crate is `no_std` (it needs `alloc`). It covers:
//!
//! - [`gf`]: table-driven GF(p^m) arithmetic and Frobenius automorphisms,
//! - [`skewpoly`]: the skew polynomial ring F_q[x;Θ] with right division,
//! - [`rring`]: the ring R in idempotent (CRT) coordinates,
//! - [`lincode`]: linear codes as matrices, duals and exact minimum distance,
//! - [`fqr`]: mixed-alphabet codes, the σ-shift, module spans and Gray images,
//! - [`quantum`]: dual-containment certificates and CSS parameters,
//! - [`search`]: right-divisor enumeration and candidate evaluation.
//!
//! IO, file formats, parallel drivers and the command line live in the
//! `skewcode` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod error;
pub mod exec;
pub mod fqr;
pub mod gf;
pub mod lincode;
pub mod quantum;
pub mod rring;
pub mod search;
pub mod skewpoly;

pub use crate::error::{Error, Result};
pub use crate::exec::{Executor, Sequential};
pub use crate::fqr::{CodeSpec, Generators, GrayCoords, GrayMatrix, MixedWord};
pub use crate::gf::{Fe, GaloisField};
pub use crate::lincode::{DistanceOptions, DistanceStrategy, GeneratorMatrix};
pub use crate::quantum::{Comparison, DualContainCertificate, QuantumParams, Route};
pub use crate::rring::{RElement, RingR};
pub use crate::skewpoly::{SkewPoly, SkewRing};
