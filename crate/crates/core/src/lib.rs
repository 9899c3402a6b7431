//! Executable linear algebra for the long exact sequence of a smooth
//! S3-action.
//!
//! Given finite simplicial models of an action's orbit data — the orbit
//! space with the image of its singular set, and the circle-fixed subset
//! with the involution induced on it — the crate assembles the associated
//! Gysin-type long exact sequence, computes the exotic antisymmetric term,
//! and solves for unknown cohomology dimensions using nothing but exactness.
//!
//! Everything is computed over the rationals with exact arithmetic:
//!
//! * [`exactla`] — dense rational matrices with rank, kernel and eigenspace
//!   computations;
//! * [`complexes`] — simplicial complexes, pairs, cohomology with
//!   representatives, induced maps, the long exact sequence of a pair, and
//!   the graded Künneth product;
//! * [`equivariant`] — involutions, the symmetric/antisymmetric splitting
//!   of cohomology, and orbit complexes of regular actions;
//! * [`lesolve`] — exactness checking for explicit sequences and feasible
//!   dimension enumeration for sequences with unknowns;
//! * [`gysin`] — the sequence assembler, duality-obstruction report, and
//!   canned example fixtures;
//! * [`formats`] — the text file formats consumed by the CLI.

pub mod complexes;
pub mod equivariant;
pub mod exactla;
pub mod formats;
pub mod gysin;
pub mod lesolve;
