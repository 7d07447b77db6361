//! Exact constructions on finite posets and lattice polytopes: order and
//! chain polytopes, the symmetric hulls `Γ` and `Ω`, Ehrhart polynomials,
//! reflexivity and normality checks, and toric Gröbner bases for the rings
//! of these polytopes.

pub mod cli;
pub mod constructions;
pub mod ehrhart;
pub mod error;
pub mod fixtures;
pub mod groebner;
pub mod io;
pub mod linalg;
pub mod polytope;
pub mod poset;
pub mod reflexive;
pub mod worked_examples;

pub use constructions::{chain_polytope, gamma, omega, order_polytope, PosetPolytope};
pub use ehrhart::{EhrhartPolynomial, Exact};
pub use error::{Error, Result};
pub use groebner::{BinomialSystem, Family};
pub use polytope::{FVector, Facet, LatticePolytope, Point};
pub use poset::{IndexSet, Poset};
pub use reflexive::{AnalysisReport, NormalityCertificate};
