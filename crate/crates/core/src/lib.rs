//! Statistical characterization of noisy quantum computation over an exact
//! density-matrix simulator.
//!
//! The crate is organized around four questions about a noisy quantum program:
//!
//! * **accuracy** — how far is the noisy output from the ideal one, measured
//!   through the Hellinger distance between outcome distributions or the
//!   error in a computed observable;
//! * **reproducibility** — across execution instances with a randomly drawn
//!   channel parameter, how often does the observable error stay within
//!   tolerance;
//! * **reliability** — do the device metrics extracted from calibration
//!   snapshots stay stationary across execution windows;
//! * **stability** — how much does the expected output drift when the
//!   channel-parameter distribution itself moves over time.
//!
//! Underneath sits [`quantum`], an exact Kraus-channel simulator for small
//! registers, and [`dist`], the probability machinery (Hellinger distances,
//! exponential/beta models, adaptive quadrature) used both as primary
//! implementation and as the brute-force oracle in the test suites.

pub mod accuracy;
pub mod dist;
pub mod error;
pub mod quantum;
pub mod reliability;
pub mod reproducibility;
pub mod rng;
pub mod stability;

mod linalg;

pub use error::{Error, Result};

pub use dist::discrete::{bhattacharyya, hellinger_discrete, DiscreteDistribution};
pub use dist::models::{hellinger_exponential, BetaModel, ExponentialModel};
pub use dist::quadrature::{integrate, Bounds, QuadratureResult, QuadratureSpec};
pub use quantum::channel::{depolarizing, lift_single_qubit_channel, QuantumChannel};
pub use quantum::measure::{expectation, measure_distribution, sample_counts};
pub use quantum::observable::Observable;
pub use quantum::state::DensityMatrix;
pub use quantum::unitary::UnitaryMatrix;
