//! A laboratory for dynamic matching markets with one easy-to-match agent
//! type and `p` mutually incompatible hard-to-match types.
//!
//! The market model: agents arrive by a Poisson process with rate `m`,
//! draw a type (easy with probability `1 - p*lambda`, each hard type with
//! probability `lambda`), and carry an independent Exp(1) criticality
//! clock. Compatibility between admissible pairs (easy-easy, easy-hard,
//! same-hard) is an independent Bernoulli(`alpha`) draw; distinct hard
//! types are never compatible. The density parameter is `d = alpha * m`.
//!
//! Two matching policies are supported, both prioritizing hard partners
//! over easy partners:
//!
//! * **Greedy** — try to match each agent at arrival; critical agents
//!   perish.
//! * **Patient** — let agents wait; try to match at criticality, and
//!   perish on failure.
//!
//! The crate provides three coupled views of this market plus a study
//! harness:
//!
//! * [`probs`] — exact matching/perishing probability algebra for a pool
//!   snapshot (works for real-valued pool sizes so the same formulas
//!   drive the mean-field equations),
//! * [`sim`] — an exact event-driven simulation with conservation
//!   accounting, lazy or persistent edge sampling, and reproducible
//!   seeded streams,
//! * [`ode`] — the mean-field vector fields, an adaptive Runge-Kutta
//!   integrator, stationary-point solvers and asymptotic predictors,
//! * [`experiments`] — seeded parameter sweeps comparing the two engines,
//!   with CSV/JSON export and verdict flags (loss-ratio monotonicity,
//!   `e^{d/2}` plateau, phase-transition witness).

pub mod error;
pub mod experiments;
pub mod ode;
pub mod params;
pub mod pool;
pub mod probs;
pub mod report;
pub mod rng;
pub mod sim;

pub use error::Error;
pub use params::MarketParams;
pub use pool::PoolState;
pub use report::LossReport;
pub use sim::{Policy, TieBreak};
