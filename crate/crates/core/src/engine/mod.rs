//! Validation, analysis and solving.

mod analysis;
mod power;
mod sampling;
mod solve;
mod spectral;
mod verify;

pub use analysis::{analyze, analyze_with, AnalysisReport, EigenRecord};
pub use power::{solve_power, solve_power_with};
pub use sampling::{sample_self_map, SampleReport};
pub use solve::{default_degree, lift_chain, solve, solve_with, ComponentInfo, Mode, SchroederSolution};
pub use spectral::{detect_resonance, validate_map, validate_map_with, SpectralData};
pub use verify::{component_rank, verify, Failure, VerifyReport};
