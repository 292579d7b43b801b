//! Exact constructions over finite categories: category algebras, skew
//! category algebras, twisted tensor products, and the Turull and Puig
//! inductions along functors that are injective on objects and surjective
//! on morphisms.

pub mod algstruct;
pub mod constructions;
pub mod fincat;
pub mod fixtures;
pub mod induction;
pub mod linalg;
pub mod report;
