//! Quivers with length-homogeneous relations, their bound path algebras,
//! and algebras given by structure constants.

mod bound;
mod families;
mod quiver;
mod sc;
mod standard;

pub use bound::{build_bound_algebra, BoundAlgebra, DEFAULT_MAX_PATH_LEN};
pub use families::{beilinson_algebra, beilinson_ba, beilinson_cb, local_rsz_algebra};
pub use quiver::{Arrow, Path, Quiver, Relation};
pub use sc::ScAlgebra;
pub use standard::{standard_module, StandardKind};
