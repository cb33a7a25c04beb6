//! Exact computer algebra for odd symmetric function theory.
//!
//! The crate provides, over exact integer scalars:
//!
//! - [`scalar`]: the ring `Z[q,q^-1][pi]/(pi^2-1)` of graded superdimensions,
//!   with the (q,pi)-integers, binomials, trinomials and multinomials.
//! - [`partition`] / [`perm`]: partitions, tableaux and type-A permutation
//!   combinatorics, including all sign statistics (N, NE, dN, dE, ...).
//! - [`osym`]: the ring OSym of odd symmetric functions in its h-, e- and
//!   Schur bases, with coproducts, bilinear forms, the psi/gamma/star
//!   symmetries, odd Kostka and odd Littlewood-Richardson numbers.
//! - [`opol`] / [`onh`]: odd polynomials, the signed symmetric group action,
//!   odd Demazure operators, odd Schubert polynomials and the odd Schur
//!   polynomial projector.
//! - [`rell`] / [`oh`]: the base ring R_ell (largest supercommutative quotient
//!   of OSym_ell) and the equivariant odd Grassmannian cohomology algebras
//!   OH_n^ell with their trace and the psi/delta/alpha maps.
//! - [`bimod`] / [`chain`]: the rank-one odd Grassmannian bimodules V_n, U_n,
//!   the adjunction data ev/coev (both adjunctions), the crossing, and the
//!   nil-Hecke actions on tensor chains.
//! - [`rouquier`]: the singular Rouquier complex, its differentials and exact
//!   homology over the ground field.
//! - [`uqpi`]: the integral module V(-ell) over covering quantum sl2 with
//!   divided powers and the reflection operator T.
//! - [`verify`]: the machine-checkable identity suites exposed by the CLI.

pub mod scalar;
pub mod partition;
pub mod perm;
pub mod rng;
pub mod linalg;
pub mod osym;
pub mod opol;
pub mod onh;
pub mod rell;
pub mod oh;
pub mod bimod;
pub mod chain;
pub mod rouquier;
pub mod uqpi;
pub mod verify;

pub use partition::Partition;
pub use scalar::GPScalar;
