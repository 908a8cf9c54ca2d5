//! Walecki tournaments: construction from signatures, per-arc triangle
//! census, automorphism and isomorphism search, and exhaustive sweeps over
//! signature space.

pub mod census;
pub mod error;
pub mod signature;
pub mod symmetry;
pub mod tournament;
pub mod triangles;
pub mod verify;

pub use error::{Error, Result};
pub use signature::Signature;
pub use tournament::{build_tournament, Arc, Tournament, Vertex};
