//! Quantum Bruhat graphs, quantum alcove paths, and the generating functions
//! `C_u^w` built from them, in exact integer arithmetic.
//!
//! The pieces, bottom up:
//!
//! * [`lattice`]: root data for the simple types.
//! * [`weyl`]: the finite Weyl group.
//! * [`affine`]: the extended affine Weyl group and β-sequences.
//! * [`qbg`]: the quantum Bruhat graph and independent edge criteria.
//! * [`paths`]: enumeration of quantum alcove paths.
//! * [`poly`] and [`genfun`]: Laurent polynomials and `C_u^w`.
//! * [`macdonald`]: specializations, characters and dimensions.
//! * [`verify`]: the identity suites behind `alcove verify`.

pub mod error;
pub mod lattice;
pub mod weyl;
pub mod affine;
pub mod qbg;
pub mod paths;
pub mod poly;
pub mod genfun;
pub mod macdonald;
pub mod verify;

pub use error::{Error, Result};
pub use lattice::{Coroot, Family, Root, RootDatum, Weight};
pub use weyl::{WeylElt, WeylGroup};
pub use affine::{AffineCoroot, ExtAffineElt};
pub use qbg::{EdgeKind, QuantumBruhatGraph};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/root-data.md")]
    mod root_data {}
    #[doc = include_str!("../../../book/src/affine.md")]
    mod affine {}
    #[doc = include_str!("../../../book/src/qbg.md")]
    mod qbg {}
    #[doc = include_str!("../../../book/src/paths.md")]
    mod paths {}
    #[doc = include_str!("../../../book/src/characters.md")]
    mod characters {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
