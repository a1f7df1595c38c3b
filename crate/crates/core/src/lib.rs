//! Structure constants of the small quantum cohomology ring of the
//! Grassmannian `Gr(l, l + k)`.
//!
//! The ring `Λ(l, k) = Z[q, σ_1, …, σ_k] / (Y_{l+1}, …, Y_{n-1}, Y_n + (-1)^k q)`
//! has the Schubert classes `σ_ν`, `ν ⊂ l×k`, as a `Z[q]`-basis. This crate
//! computes products in that basis:
//!
//! * [`rim`]: rim `n`-hooks, `n`-cores and the shapes `ν[m]`;
//! * [`tableau`]: skew tableaux, classical Littlewood-Richardson and Kostka
//!   numbers, and the proper-tableau counts giving quantum Kostka numbers;
//! * [`ring`]: [`QClass`] arithmetic, rim-hook reduction of `σ_λ`, quantum
//!   Littlewood-Richardson coefficients, quantum Pieri rules and the duality
//!   `Λ(l, k) ≅ Λ(k, l)`;
//! * [`oracle`]: slow, independent recomputations used to cross-check the
//!   above (polynomial Schur expansion, column-class closed form, and the
//!   Giambelli/Pieri product).
//!
//! Everything is `no_std` with `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod error;
pub mod oracle;
pub mod partition;
pub mod rim;
pub mod ring;
pub mod tableau;

pub use error::{Error, Result};
pub use partition::{GrassmannContext, Partition};
pub use rim::{CoreResult, RimStatus};
pub use ring::QClass;
pub use tableau::{ContentVector, Orientation, SkewShape, SkewTableau};
