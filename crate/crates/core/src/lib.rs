//! Classical and Klein–Gordon dynamics of a charged scalar in two
//! counter-propagating circularly polarised plane waves.
//!
//! Natural units with the particle mass set to one throughout.

pub mod relkin;
pub mod specfun;
pub mod quad;
pub mod ode;
pub mod classical;
pub mod quantum;
pub mod emission;
pub mod cli;
