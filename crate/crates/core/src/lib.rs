//! Finite groups as explicit operation tables.
//!
//! The crate builds groups from Cayley tables ([`FiniteGroup`]), works with
//! subgroups, cosets and quotients, checks homomorphisms, forms direct
//! products, and factors any finite abelian group into cyclic groups of prime
//! power order together with an explicit isomorphism. A separate checker
//! confirms that the factor orders of isomorphic products agree up to
//! permutation.
//!
//! ```
//! use fingroup::{abelian_factorization, cyclic_group};
//!
//! let z12 = cyclic_group(12).unwrap();
//! let f = abelian_factorization(&z12).unwrap();
//! assert_eq!(f.orders(), vec![4, 3]);
//! ```

pub mod abelian;
pub mod builder;
pub mod cli;
pub mod corpus;
pub mod element;
pub mod error;
pub mod format;
pub mod group;
pub mod maps;
pub mod numtheory;
pub mod pgroup;
pub mod products;
pub mod subgroup;
pub mod uniqueness;

pub use abelian::{abelian_factorization, AbelianFactorization};
pub use builder::Builder;
pub use element::Element;
pub use error::{AxiomViolation, Error, Result};
pub use group::{cyclic_group, symmetric_group, validate_group, FiniteGroup};
pub use maps::{classify, homomorphism_check, Classification, GroupMap, HomWitness};
pub use products::direct_product;
pub use subgroup::Subgroup;
