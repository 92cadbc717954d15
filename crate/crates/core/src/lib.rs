//! Spectra of a two-dimensional harmonic oscillator with a linear field
//! term, confined to an impenetrable circular box.
//!
//! The dimensionless Hamiltonian `H = -∇²/2 + r²/2 + λ r cos φ` with
//! `ψ(r0, φ) = 0` is solved by the linear variational method over polynomial
//! or Gaussian-weighted bases, split into even/odd angular parity sectors.
//! Perturbation expansions in λ, Bessel-zero reference spectra for the
//! shrinking box, and the separable limit for the growing box round out the
//! toolkit. Arbitrary-precision arithmetic (GMP/MPFR via `rug`) carries the
//! solves to tens of significant digits.

pub mod assembly;
pub mod basis;
pub mod eigensolver;
pub mod error;
pub mod linalg;
pub mod model;
pub mod perturbation;
pub mod reference;
pub mod scalar;
pub mod tables;

pub use assembly::{assemble, MatrixKind, MatrixSet};
pub use basis::{enumerate, BasisIndex, BasisKind, BasisSpec};
pub use eigensolver::{
    convergence_study, default_order, solve_generalized, spectrum, MergedSpectrum,
    SectorReduction, Spectrum,
};
pub use error::{Error, Result};
pub use model::{
    large_box_energy, nondimensionalize, LevelLabel, ModelParams, Parity, PhysicalInputs,
};
pub use perturbation::{pt2_sum_over_states, pt_eval, pt_limit_table, rs_expansion, PtExpansion};
pub use reference::{bessel_j, bessel_zero, pib_energy, BesselZeroTable};
pub use scalar::{Real, ScalarPolicy};
