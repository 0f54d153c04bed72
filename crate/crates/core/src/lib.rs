//! Finite-group laboratory for strong-boundedness constructions.
//!
//! * [`group`] and [`series`]: multiplication tables, subgroup closures, central series.
//! * [`monomial`]: word maps `Gᵏ → G`, homogeneity, and the `f(a,b) = b` witness construction.
//! * [`boolean`]: closure operators on families of subsets of a finite set.
//! * [`product`]: finite powers `Gⁿ`, lifted monomials, Cayley diameters, balls, exhaustion.
//! * [`cli`]: catalog ingestion, JSON reports and property suites behind the `sbgroups` binary.

pub mod boolean;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod group;
pub mod monomial;
pub mod product;
pub mod series;

pub use error::{Error, Result};
pub use group::{Elem, ElementSet, FiniteGroup};
