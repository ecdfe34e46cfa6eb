//! Exact computation of Schur, stable Grothendieck and canonical stable
//! Grothendieck polynomials in finitely many variables, together with their
//! Murnaghan-Nakayama expansions and a harness that checks every expansion
//! against brute-force polynomial arithmetic.

pub mod cli;
pub mod error;
pub mod grothendieck;
pub mod mnrule;
pub mod polyring;
pub mod shapes;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use mnrule::{Expansion, ExpansionMode};
pub use polyring::{Monomial, Poly};
pub use shapes::{Cell, Partition, SkewShape};
pub use tableaux::{HookEntry, HookValuedTableau};
