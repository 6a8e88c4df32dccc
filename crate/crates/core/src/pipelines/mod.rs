//! End-to-end constructions: varieties as quiver Grassmannians, the
//! controlled embedding, and Auslander varieties.

mod auslander;
mod controlled;
mod realize;
mod twogen;

pub use auslander::{auslander_pipeline, AuslanderReport, INDEPENDENT_CHECK_MAX_DIM};
pub use controlled::{control_algebra, controlled_embed, controlled_map, verify_controlled, ControlledReport};
pub use realize::{realize_variety, verify_realization, RealizationInstance, RealizationReport, REALIZATION_DIMS};
pub use twogen::{TwoGenModule, TwoGenPresentation, WordPoly};

#[cfg(test)]
mod tests;
