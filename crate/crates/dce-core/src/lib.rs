//! Numerical core for photon-pair emission from spatio-temporally modulated
//! atomic arrays (dynamical Casimir effect with synthetic phases).
//!
//! A monolayer (or thin stack) of atoms whose polarizability is modulated at
//! frequency Ω emits entangled photon pairs out of the vacuum. Imprinting a
//! position-dependent phase on the modulation steers the emission:
//!
//! * a **linear** phase β·r gives every pair an in-plane momentum kick β
//!   ([`linear`]: partner kinematics, emission regions, angular densities,
//!   finite-array lobes, spectral and total rates);
//! * a **spinning** phase ℓφ gives every pair a total angular momentum ℓ
//!   ([`spinning`]: vector-Bessel amplitudes, angular-momentum spectra,
//!   total rates for a modulated disk).
//!
//! Supporting layers: unit conversions and normalizations ([`params`]),
//! polarization bases and the pair coupling W̃ ([`polarization`]), array
//! form factors ([`array_factor`]), Bessel functions and vector-Bessel
//! modes ([`bessel`], [`bessel_modes`]), finite-radius Bessel-product
//! integrals ([`radial`]), Gauss–Legendre quadrature ([`quadrature`]), and
//! SI-unit scenario estimates ([`estimates`]).
//!
//! Internally everything is dimensionless with c = 1 and Ω = 1; rates are
//! reported in the normalizations r₀ and Γ₀ of [`params`]. Total rates count
//! photon pairs.

pub mod array_factor;
pub mod bessel;
pub mod bessel_modes;
pub mod error;
pub mod estimates;
pub mod linear;
pub mod params;
pub mod polarization;
pub mod quadrature;
pub mod radial;
pub mod spinning;
pub mod vec3;

pub use error::{DceError, Result};
