//! Exact construction of minuscule representations from lattice polytopes.
//!
//! A vertex set Ψ and a simple system Δ of integer vectors determine
//! operators `E_a`, `F_a`, `H_a` on the space with basis indexed by Ψ. When
//! the pair passes the minuscule axioms ([`system::validate_system`]) those
//! operators satisfy the defining relations of the derived Kac–Moody algebra
//! of the Cartan matrix of Δ, which [`ops`] checks as exact operator
//! identities.
//!
//! Layout:
//!
//! * [`vector`], [`system`], [`cartan`]: lattice arithmetic, the axioms, and
//!   Cartan matrices with Dynkin-type recognition.
//! * [`ops`]: sparse rational operators and the relation checkers.
//! * [`catalog`]: the polytope constructions, restriction and slicing.
//! * [`weyl`]: reflections, orbits on vertices and on pairs, edge roots.
//! * [`analysis`]: weights, extreme vectors, irreducibility certificates,
//!   crystal graph and weight poset.
//! * [`geometry`]: the 27/56-line incidence dictionary on the Hesse polytope.
//! * [`json`]: the JSON system file format.
//!
//! Heavy loops take an [`Execution`] mode; see [`exec`].

pub mod analysis;
pub mod cartan;
pub mod catalog;
pub mod error;
pub mod exec;
pub mod geometry;
pub mod json;
pub mod linalg;
pub mod ops;
pub mod system;
pub mod vector;
pub mod weyl;

pub use cartan::{cartan_matrix, classify_cartan, CartanMatrix, Series, TypeLabel};
pub use error::{Error, Result};
pub use exec::Execution;
pub use system::{c_value, validate_system, CValue, MinusculeSystem, SimpleSystem, ValidationReport};
pub use vector::IntVector;
