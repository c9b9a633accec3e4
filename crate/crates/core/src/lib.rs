//! Exact computations around the variety of conics on an adjoint variety.
//!
//! The crate is split along the mathematics:
//!
//! * [`rootcore`] builds root data in Onishchik–Vinberg numbering, Weyl group
//!   actions, coset orbits and double coset counts.
//! * [`symdata`] holds the Satake diagrams of the symmetric subgroups `G^σ`,
//!   restricted root systems, colors and anticanonical coefficients.
//! * [`lunavust`] is the colored cone and colored fan machinery.
//! * [`conicatlas`] assembles the Chow and Hilbert fans for every adjoint `G`.
//! * [`chevalley`] is a Chevalley basis with exact structure constants.
//!
//! All arithmetic is exact; rationals are [`Q`].

pub mod chevalley;
pub mod conicatlas;
pub mod lunavust;
pub mod notation;
pub mod reference;
pub mod qmath;
pub mod rootcore;
pub mod symdata;
pub mod verify;

pub use qmath::Q;
