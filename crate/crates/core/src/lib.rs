//! Klein-Fock-Gordon particles on a finite interval: boundary-condition
//! families, Feshbach-Villars dynamics and energy observables.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
#![allow(unused_imports)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bc;
pub mod error;
pub mod evolution;
pub mod model;
pub mod observables;
pub mod operator;

pub use error::Error;
pub use num_complex::Complex64;

pub type Result<T> = core::result::Result<T, Error>;
