//! Exact computational workbench for the piece-by-piece bookkeeping of
//! semiorthogonal decompositions attached to `S_n`-invariant projective
//! hypersurfaces and to quotients by products of cyclic groups.
//!
//! Everything is computed over exact fields (arbitrary-precision rationals,
//! cyclotomic extensions); there is no floating point anywhere. The main
//! entry points are:
//!
//! * [`decompose::decompose_projective_space`] — the piece list for
//!   `D[P^{n-1}/S_n]`, one weighted projective stack per partition of `n`;
//! * [`decompose::decompose_invariant_hypersurface`] — the piece list for
//!   `D[X_f/S_n]` where `f` is a symmetric homogeneous polynomial with
//!   smooth projective vanishing locus, including the cubic normal-form
//!   classifier with verified parametrization certificates;
//! * [`cyclic`] — decompositions for curve quotients and for the diagonal
//!   `mu_{d_1} x ... x mu_{d_k}` actions on affine and projective space;
//! * [`ledger`] — an independent orbifold Euler-characteristic oracle
//!   (commuting-pair enumeration over joint eigenspaces) used to cross-check
//!   every rank total the decompositions produce.

pub mod cyclic;
pub mod cyclotomic;
pub mod decompose;
pub mod field;
pub mod genericity;
pub mod groebner;
pub mod ledger;
pub mod parse;
pub mod partitions;
pub mod poly;
pub mod report;
pub mod symmetrize;
