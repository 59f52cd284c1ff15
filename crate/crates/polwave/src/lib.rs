//! Polarized wave transport in random media.
//!
//! The library propagates the second-order statistics of transverse-electric
//! and transverse-magnetic (TE/TM) plane-wave amplitudes through a random
//! medium with weak permittivity fluctuations. Everything is expressed in
//! scaled (dimensionless) units: transverse slowness vectors `kappa` live in
//! the unit disk, range `z` is measured in reference lengths, and the medium
//! statistics enter through the power spectral density of the fluctuations.
//!
//! The main pieces are:
//!
//! - [`medium`]: autocorrelation and spectral densities of the fluctuations,
//! - [`geometry`]: wave-vector kinematics and the TE/TM coupling matrices,
//! - [`source`]: initial mode amplitudes and coherence matrices,
//! - [`kernel`]: the complex scattering kernel `Q`, loss matrix `S`, and
//!   scattering mean free paths,
//! - [`transport`]: range evolution of the coherence matrix with Stokes and
//!   depolarization diagnostics,
//! - [`hflimit`]: the high-frequency (paraxial) limit of the dynamics,
//! - [`rtbridge`]: cross-checks against radiative-transport identities,
//! - [`mcoracle`]: Monte Carlo integration of the pre-limit amplitude
//!   equations for verification of the moment predictions,
//! - [`cli`]: configuration parsing and run orchestration.

pub mod cli;
pub mod error;
pub mod geometry;
pub mod grid;
pub mod hflimit;
pub mod kernel;
pub mod mat2;
pub mod mcoracle;
pub mod medium;
pub mod quad;
pub mod rtbridge;
pub mod source;
pub mod special;
pub mod transport;

pub use error::{Error, Result};
pub use geometry::TransverseWaveVector;
pub use grid::DirectionGrid;
pub use mat2::{CMat2, CVec2, Mat2, Vec2};
pub use medium::SpectralMedium;
