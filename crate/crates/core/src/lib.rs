//! Exact computation of the linearity defect of graded modules over
//! polynomial rings, with Rees-algebra tools for the asymptotic behaviour of
//! `lind(I^n M)`, `lind(I^n M / I^(n+1) M)` and `lind(M / I^n M)`.

pub mod asymptotics;
pub mod budget;
pub mod error;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod linalg;
pub mod linearity;
pub mod module;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod resolution;
pub mod ring;
pub mod submodule;
pub mod tor;

pub use error::{Error, Result};
pub use module::Module;
pub use parse::parse_polynomial;
pub use field::{Field, PrimeField, Rationals};
pub use resolution::{BettiTable, ModuleMap, Resolution};
pub use ring::{Bidegree, FreeElement, FreeModule, Polynomial, Ring};
pub use submodule::Submodule;
