//! Forward and inverse scattering for the half-line Schrodinger operator
//!
//! Everything in this crate concerns the operator `-y'' + q(x) y` on `[0, inf)`
//! with a Dirichlet condition at the origin and a real potential `q` supported
//! on `[0, 1]`. The crate covers both directions of the problem:
//!
//! * **forward**: integrate the equation, evaluate the Jost function
//!   `psi(k)`, the scattering matrix `S(k) = psi(-k)/psi(k)`, the phase shift,
//!   bound states and norming constants ([`ode`], [`scattering`]);
//! * **spectral data**: Dirichlet and mixed eigenvalues of the unit-interval
//!   restriction, and the monotone phase parameterization `p_n` that merges the
//!   two families into a single sequence ([`spectra`], [`phase`]);
//! * **inverse**: closed-form determinant reconstruction of `q` from finitely
//!   many perturbed `p_n` ([`recover`]), addition of a bound state by a
//!   dressing transform ([`dressing`]), and Newton inversion of the
//!   discretized scattering map ([`smap`]).
//!
//! Potentials are piecewise-linear grid functions on `[0, 1]` ([`potential`]),
//! extended by zero to the right. All integrators are fixed-step classical
//! RK4, so every result in the crate is bit-reproducible for a given
//! configuration.

pub mod dressing;
pub mod ode;
pub mod phase;
pub mod potential;
pub mod recover;
pub mod scattering;
pub mod smap;
pub mod spectra;

pub(crate) mod util;

pub use num_complex::Complex64;

// The guide chapters double as doc-tests so their snippets stay compilable.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/potentials.md")]
    mod potentials {}
    #[doc = include_str!("../../../book/src/forward.md")]
    mod forward {}
    #[doc = include_str!("../../../book/src/spectra.md")]
    mod spectra {}
    #[doc = include_str!("../../../book/src/reconstruction.md")]
    mod reconstruction {}
    #[doc = include_str!("../../../book/src/dressing.md")]
    mod dressing {}
    #[doc = include_str!("../../../book/src/discrete-map.md")]
    mod discrete_map {}
}
