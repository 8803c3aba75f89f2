//! Instantaneously trained corner-classification networks over real, complex
//! and quaternion input alphabets.
//!
//! * [`algebra`]: exact integer quaternions and the 16-symbol alphabet.
//! * [`encoding`]: unary, quaternary and quaternion coordinate codewords.
//! * [`network`]: single-pass training and inference.
//! * [`patterns`]: pattern grids, pattern files and seeded sampling.
//! * [`experiments`]: classification runs, sweeps and CSV export.
//!
//! With the default `parallel` feature, grid classification and sweeps run on
//! rayon. Results are identical with the feature off.

pub mod algebra;
pub mod encoding;
pub mod error;
pub mod exec;
pub mod experiments;
pub mod network;
pub mod patterns;

pub use algebra::{Quaternion, Symbol};
pub use encoding::{Codeword, Scheme};
pub use error::{Error, Result};
pub use exec::Execution;
pub use experiments::{Pattern, RunResult, SweepTable};
pub use network::{TrainedNetwork, TrainingSample};
pub use patterns::{PatternGrid, SplitMix64};
