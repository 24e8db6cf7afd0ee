//! Finite automata recognizing the reduced words of a Coxeter system.
//!
//! The crate is layered bottom-up:
//!
//! - [`field`]: exact arithmetic in `Q(2cos(pi/N))` with decidable sign.
//! - [`coxeter`]: Coxeter systems, roots, elements and the weak order.
//! - [`smallroots`]: n-small roots, dominance, cone membership.
//! - [`garside`]: joins, Garside shadows, projections, low elements.
//! - [`automata`]: shadow and canonical automata, minimization, morphisms.
//! - [`conjectures`]: statistics rows and per-instance conjecture checks.
//! - [`render`]: rank-three SVG pictures of small roots.
//!
//! With the default `parallel` feature, data-parallel loops run on rayon;
//! [`par::Exec`] selects the strategy per call.

pub mod automata;
pub mod conjectures;
pub mod coxeter;
pub mod error;
pub mod field;
pub mod garside;
pub mod par;
pub mod render;
pub mod smallroots;

pub use coxeter::{parse_coxeter_system, CoxeterMatrix, CoxeterSystem, Element, Gen, GenSet, RootId};
pub use error::{Error, Result};
