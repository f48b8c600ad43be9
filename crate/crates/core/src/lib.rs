//! Realizations and strong rigidity of labelled quadrangular pyramids.
//!
//! * [`geom`]: the pyramid data model, standard position, base classification
//!   and congruence.
//! * [`dof`]: freedom/relation counts from a face vector.
//! * [`solver`]: enumeration of the convex pyramids with eight prescribed
//!   edge lengths.
//! * [`rigidity`]: rigidity matrix diagnostics and continuation of flexes.

pub mod dof;
pub mod error;
pub mod geom;
pub mod rigidity;
pub mod sample;
pub mod solver;

pub use error::{DofError, GeomError, RigidityError, SolverError};
pub use geom::{BaseClass, BaseQuad, CongruenceTolerance, Edge, EdgeLengthSet, Realization};
