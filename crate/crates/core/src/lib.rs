//! Certified slope-length and volume bounds for Dehn fillings of fully
//! augmented links, together with the lattice, nerve and horoball-pattern
//! combinatorics those bounds rest on.

pub mod certifier;
pub mod cli;
pub mod cusp;
pub mod exact;
pub mod formats;
pub mod horoball;
pub mod interval;
pub mod lattice;
pub mod nerve;
