//! Desk-scale physics-informed imitative reinforcement learning for
//! closed-loop 2D driving.
//!
//! The crate is organized around a synthetic scenario generator with
//! scripted experts ([`scenario`]), a kinematic bicycle world model
//! ([`dynamics`], [`simulator`]), shaped rewards ([`rewards`]), replay
//! buffers with hindsight return relabeling and hybrid experience
//! sampling ([`replay`]), a small f64 reverse-mode tensor core
//! ([`nncore`]), the decision-transformer policy ([`policy`]), the
//! port-Hamiltonian refinement network ([`phnn`]), the two-stage
//! training loop ([`trainer`]) and closed-loop evaluation ([`metrics`]).

pub mod agents;
pub mod config;
pub mod dynamics;
pub mod geom;
pub mod metrics;
pub mod nncore;
pub mod phnn;
pub mod policy;
pub mod replay;
pub mod rewards;
pub mod scenario;
pub mod simulator;
pub mod trainer;
