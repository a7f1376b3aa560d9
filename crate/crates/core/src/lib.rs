//! Relation systems of integer tuples and the Diophantine machinery around
//! the sets `B_n(K)`.
//!
//! A tuple `x` of `K^n` belongs to `B_n(K)` when every `y` in `K^n` that
//! satisfies all the unit (`x_i = 1`), additive (`x_i + x_j = x_k`) and
//! multiplicative (`x_i * x_j = x_k`) relations of `x` has `y_1 = x_1`.
//!
//! - [`tuple`] and [`order`]: tuples, domains, assignments and the shell order.
//! - [`relations`]: extracting and checking relation systems.
//! - [`crt`]: integers `a, b` with `a * x = (2b - 1)(3b - 1)` for nonzero `x`.
//! - [`solver`]: propagation-driven bounded search for counterexamples.
//! - [`dioph`]: the sum-of-squares polynomial whose zeros are counterexamples.
//! - [`equations`]: the quartic equations and the built-in example tuples.
//! - [`cli`]: the command-line front end.

pub mod cli;
pub mod crt;
pub mod dioph;
pub mod equations;
pub mod error;
pub mod order;
pub mod relations;
pub mod solver;
pub mod tuple;

pub use error::{Error, Result};
pub use order::{enumerate_tuples, shell_compare};
pub use relations::{extract, extract_display, satisfies, subset, Relation, RelationSystem};
pub use tuple::{Assignment, DomainKind, IntTuple, Var};
