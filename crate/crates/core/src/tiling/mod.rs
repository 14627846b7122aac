//! Constructive tiling: greedy starts, the `K_r → K_{r+1}` augmentation,
//! blow-up flattening and the fractional iteration built from them.

mod augment;
mod flatten;
mod fracmat;
mod greedy;

pub use augment::{
    augment_from, augment_step, augment_to_target, AugmentParams, AugmentRun, AugmentTrace, PoolSizes, StepKind,
    StepOutcome, StopReason,
};
pub use flatten::{flatten_in_blowup, tiling_to_fractional};
pub use fracmat::{fracmat_iterate, FracmatOptions, FracmatReport, FracmatStop};
pub use greedy::greedy_tiling;
