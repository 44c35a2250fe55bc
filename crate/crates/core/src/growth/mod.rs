//! Random environment, last-passage dynamic programming, Young-diagram
//! growth dynamics and the TASEP particle view.

mod batch;
mod current;
mod diagram;
mod passage;
mod tasep;
mod weights;

pub use batch::{monte_carlo_batch, SampleBatch};
pub use current::{current_y, CurrentSampler};
pub use diagram::{diagram_at, grow_step, YoungDiagramState};
pub use passage::{last_passage, passage_star, PassageGrid};
pub use tasep::{tasep_decode, tasep_encode, tasep_step_discrete, TasepConfig};
pub use weights::{sample_weights, WeightField, WeightKind};
