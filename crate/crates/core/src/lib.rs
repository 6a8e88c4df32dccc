//! Exact toolkit for bound quiver algebras over prime fields: subspace
//! calculus, path algebras with relations, module homomorphisms, MeatAxe
//! composition factors, quiver Grassmannian point enumeration, and the
//! constructions realizing projective varieties as quiver Grassmannians and
//! as Auslander varieties.

pub mod error;
pub mod ffla;
pub mod grass;
pub mod io;
pub mod meataxe;
pub mod polyvar;
pub mod modrep;
pub mod pipelines;
pub mod qalg;

pub use error::{Error, Result};
