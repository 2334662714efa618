//! Exact formal characters, Littlewood-Richardson coefficients and
//! character-family rigidity checks for simple Lie algebras of type `A_l`.
//!
//! * [`weight`]: ε-coordinate weights, Weyl orbits, dominance, saturated sets.
//! * [`ring`]: the invariant ring `Z[Λ]^W` in the orbit-sum basis.
//! * [`oracle`]: Freudenthal multiplicities, Weyl dimensions and tensor
//!   product decompositions.
//! * [`rigidity`]: candidate families, structure constants, reconstruction
//!   and the condition checks.
//! * [`format`] and [`cli`]: documents and the `charrig` command line.
//!
//! All arithmetic is exact.

pub mod cli;
pub mod format;
pub mod oracle;
pub mod rigidity;
pub mod ring;
pub mod weight;

pub use oracle::{freudenthal_character, weyl_dim, CharacterTable, StructureRow};
pub use rigidity::{CharacterFamily, StructureConstantTable, StructureOracle};
pub use ring::{orbit_sum, CharElement, Coeff};
pub use weight::{DominantWeight, Rank, Weight};
