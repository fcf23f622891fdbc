//! Finite group tables, conjugacy-class products, class-size spectra and
//! twisted-commutator widths.
//!
//! Everything here is a pure function of in-memory data; file formats,
//! caching and the command line live in the companion `classcover` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bitset;
pub mod cover;
pub mod density;
pub mod error;
pub mod filterbase;
pub mod fp;
pub mod group;
pub mod perm;
pub mod poly;
pub mod matgrp;
pub mod spec;
pub mod spectrum;
pub mod widths;

pub use bitset::ElementSet;
pub use error::{CoreError, Result};
pub use group::{build_group, BuildOptions, Elem, GroupTable};
pub use spec::GroupSpec;
