//! Finite posets, the chain-poset operator `P -> P[k]`, and exact checks of
//! rank symmetry, unimodality, log-concavity, normality and the strong
//! Sperner property.
//!
//! ```
//! use posetlab_core::{catalog, chain_poset, analysis};
//!
//! let b2k2 = chain_poset(&catalog::boolean(2), 2).unwrap();
//! assert_eq!(b2k2.whitney().unwrap().counts(), &[1, 2, 3, 2, 1]);
//! assert!(analysis::is_normal(&b2k2).unwrap());
//! ```

mod bits;

pub mod analysis;
pub mod catalog;
pub mod chains;
pub mod error;
pub mod flow;
pub mod iso;
pub mod poset;
pub mod random;
pub mod whitney;

pub use catalog::FamilySpec;
pub use chains::{chain_poset, multichain_rank, ChainPoset, Multichain};
pub use error::{FlowError, PosetError, Result};
pub use iso::{find_isomorphism, is_isomorphic};
pub use poset::{product, singleton, ElementId, Poset, PosetJson, RankData, Subset};
pub use whitney::WhitneyProfile;
