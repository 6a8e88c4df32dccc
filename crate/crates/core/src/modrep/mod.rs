//! Modules over bound quiver algebras and structure-constant algebras:
//! Hom spaces, endomorphism algebras, factor-through maps, socle and
//! radical, quotients, decomposition and the radical of the category.

mod decompose;
mod hom;
mod module;
mod rep;
mod scmod;
mod structure;

pub use decompose::{decompose, hom_radical, Decomposition};
pub use hom::{
    controlling_summand, end_algebra, hom_module, hom_module_on, hom_space, hom_through, EndAlgebra,
    HomSpace,
};
pub use module::{
    direct_sum_all, generated_submodule, is_module_map, is_submodule, quotient_module, submodule,
    DirectSum, Module, Quotient, Submodule,
};
pub use rep::Representation;
pub use scmod::ScModule;
pub use structure::{
    dual_module, is_local_rsz, radical_layers, radical_series, socle_and_radical, socle_radical_top,
    SocRadTop,
};

#[cfg(test)]
mod tests;
