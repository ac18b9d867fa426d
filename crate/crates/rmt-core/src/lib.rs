//! Spectral statistics of random matrices.
//!
//! This crate provides the numerical machinery for studying eigenvalue
//! statistics of classical random-matrix ensembles, entirely free of external
//! numerical libraries:
//!
//! * seedable samplers for Wigner, GOE, GUE, Wishart, and β-tridiagonal
//!   ensembles ([`ensembles`]);
//! * a dense symmetric/Hermitian eigensolver built on Householder
//!   tridiagonalization and implicit-shift QL iteration ([`linalg`]);
//! * empirical spectral statistics: moments, Stieltjes transforms and their
//!   inversion, variance scaling, edge statistics, and spacings
//!   ([`spectral`]);
//! * closed-form limit laws: the semicircle and Marchenko–Pastur
//!   distributions ([`laws`]);
//! * moment combinatorics: Dyck paths, Catalan numbers, and exact trace
//!   moments ([`combinatorics`]);
//! * Hermite functions, the Airy function, and the Christoffel–Darboux /
//!   sine / Airy kernels ([`orthopoly`]);
//! * Fredholm determinants, gap counts, correlation functions, and the
//!   Tracy–Widom β=2 distribution ([`determinantal`]);
//! * Dyson Brownian motion and the Ornstein–Uhlenbeck entry process
//!   ([`dyson`]);
//! * RSK correspondence, longest increasing subsequences, and last-passage
//!   percolation ([`rsk`]).
//!
//! The crate is `no_std`-compatible (requires `alloc`); enable the default
//! `std` feature for use in ordinary binaries.

#![cfg_attr(all(not(feature = "std"), not(test)), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod combinatorics;
pub mod determinantal;
pub mod dyson;
pub mod ensembles;
pub mod laws;
pub mod linalg;
pub mod orthopoly;
pub mod quad;
pub mod rng;
pub mod rsk;
pub mod spectral;

mod float;

pub use linalg::{Convention, HermitianMatrix, SpectralSample, SymmetricMatrix, TridiagonalSymmetric};
pub use rng::RngState;

/// Re-export of the complex-number crate used in public signatures
/// (e.g. [`spectral::stieltjes_transform`]).
pub use num_complex;
