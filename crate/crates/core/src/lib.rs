//! Exact structure theory for finite-dimensional left Leibniz algebras.
//!
//! A left Leibniz algebra satisfies `x(yz) = (xy)z + y(xz)`: every left
//! multiplication is a derivation. This crate computes central series,
//! centers, normalizers, normal closures and quotients for algebras given by
//! structure constants over Q or GF(p); derives the Frattini subalgebra,
//! maximal subalgebras, Cartan subalgebra and ideal lattice data of cyclic
//! (one-generated) algebras in closed form from the factorization of the
//! characteristic polynomial of `L_a`; and checks those closed forms and a
//! family of nilpotency theorems against exhaustive enumeration over small
//! prime fields.

pub mod algebra;
pub mod cli;
pub mod cyclic;
pub mod error;
pub mod field;
pub mod format;
pub mod linalg;
pub mod poly;
pub mod verify;

pub use algebra::{LeibnizAlgebra, Nilpotency, SeriesKind, SeriesReport, Side};
pub use cyclic::CyclicSpec;
pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use linalg::{Matrix, Subspace, Vector};
pub use poly::{Factorization, Polynomial};
