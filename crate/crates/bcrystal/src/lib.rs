//! A polyhedral model of the crystal `B(∞)` for the finite types `A_n`,
//! `B_n` and `D_n`.
//!
//! Elements are lattice points: finitely supported tuples of nonnegative
//! integers `b_{s,t}` cut out by explicit linear inequalities. On top of the
//! lattice the crate builds:
//!
//! - both crystal structures (the usual operators `ẽ_i`, `f̃_i` and their
//!   star twins `ẽ_i*`, `f̃_i*`), computed from tableaux of local linear
//!   forms ([`bicrystal`], [`tableaux`]);
//! - the sliding diamond rule, a planar second route to the same linear
//!   forms ([`diamond`]);
//! - the extended crystal of integer-indexed families with the operators
//!   `Ê_{(i,k)}`, `F̂_{(i,k)}` ([`extended`]);
//! - the type-A bijection between PBW exponent data and lattice coordinates
//!   ([`pbw`]);
//! - enumeration, a Kostant-partition counting oracle, and executable
//!   verification suites for the structural properties ([`verify`]);
//! - crystal-graph slices with DOT/JSON export ([`graph`]).
//!
//! ```
//! use bcrystal::{CartanType, CrystalElement};
//! use bcrystal::bicrystal::{epsilon, epsilon_star, f, e};
//!
//! let a3: CartanType = "A3".parse().unwrap();
//! let b = CrystalElement::from_tuple(a3, &[2, 4, 0, 5, 1, 3]).unwrap();
//! assert!(b.is_member());
//! assert_eq!(epsilon(&b, 1), 2);
//! assert_eq!(epsilon_star(&b, 3), 4);
//! assert_eq!(f(&b, 1, false).to_tuple(), [2, 4, 0, 5, 1, 4]);
//! assert_eq!(e(&b, 2, true), None);
//! ```
//!
//! The `examples/` directory holds one runnable program per capability; the
//! thin `bcrystal` binary exposes the same operations as subcommands.

pub mod bicrystal;
pub mod cartan;
pub mod diamond;
mod error;
pub mod extended;
pub mod graph;
pub mod lattice;
pub mod pbw;
pub mod tableaux;
pub mod verify;

pub use cartan::{CartanType, Family, IndexDomain, RootInterval, WeightVector};
pub use error::{Error, Result};
pub use extended::ExtendedElement;
pub use lattice::{BoxedForm, BoxedLabel, CrystalElement};
pub use pbw::PbwDatum;
pub use tableaux::Partition;
