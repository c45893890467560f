//! Shared inputs for the criterion benches.

use posetlab_core::{catalog, chain_poset, Poset};

/// `B_n[k]`, the heaviest family the verification suite touches.
pub fn boolean_chains(n: usize, k: usize) -> Poset {
    chain_poset(&catalog::boolean(n), k).expect("k >= 1").into_poset()
}

/// `I_n[k]`.
pub fn isotropic_chains(n: usize, k: usize) -> Poset {
    chain_poset(&catalog::isotropic(n), k).expect("k >= 1").into_poset()
}

/// `T_k^n`, isomorphic to `B_n[k]`.
pub fn total_power(k: usize, n: usize) -> Poset {
    let t = catalog::total(k);
    (0..n).fold(posetlab_core::singleton(), |acc, _| posetlab_core::product(&acc, &t))
}
