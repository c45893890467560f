//! Named posets: total orders, Boolean algebras, isotropic-flag posets and
//! their multi-mark generalization, and two small counterexamples.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{PosetError, Result};
use crate::poset::Poset;

/// A named family member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    /// `T_k = {0 < 1 < ... < k}`.
    Total { k: usize },
    Boolean { n: usize },
    Isotropic { n: usize },
    IsotropicGeneral { n: usize, m: usize },
    /// Rank-symmetric poset whose 2-chain poset is not.
    ExampleSym,
    /// Rank-unimodal poset whose 2-chain poset is not.
    ExampleUni,
}

impl FamilySpec {
    pub fn build(&self) -> Result<Poset> {
        match *self {
            FamilySpec::Total { k } => Ok(total(k)),
            FamilySpec::Boolean { n } => Ok(boolean(n)),
            FamilySpec::Isotropic { n } => Ok(isotropic(n)),
            FamilySpec::IsotropicGeneral { n, m } => isotropic_general(n, m),
            FamilySpec::ExampleSym => Ok(example_sym()),
            FamilySpec::ExampleUni => Ok(example_uni()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Total { k } => write!(f, "T({k})"),
            FamilySpec::Boolean { n } => write!(f, "B({n})"),
            FamilySpec::Isotropic { n } => write!(f, "I({n})"),
            FamilySpec::IsotropicGeneral { n, m } => write!(f, "I({n},{m})"),
            FamilySpec::ExampleSym => write!(f, "ex1"),
            FamilySpec::ExampleUni => write!(f, "ex2"),
        }
    }
}

pub fn total(k: usize) -> Poset {
    let labels = (0..=k).map(|i| i.to_string()).collect();
    let covers: Vec<_> = (0..k).map(|i| (i, i + 1)).collect();
    Poset::from_cover_ids(labels, &covers).expect("total order is valid")
}

pub fn boolean(n: usize) -> Poset {
    marked_subsets(n, 1)
}

pub fn isotropic(n: usize) -> Poset {
    marked_subsets(n, 2)
}

/// Subsets of `m` disjoint copies of `{1..n}` that use each index at most
/// once. `m = 1` gives the Boolean algebra, `m = 2` the isotropic-flag poset.
pub fn isotropic_general(n: usize, m: usize) -> Result<Poset> {
    if m == 0 {
        return Err(PosetError::ZeroMarkClasses);
    }
    Ok(marked_subsets(n, m))
}

/// Label of index `i` carrying mark class `c` (1-based): `i`, `i′`, `i″`,
/// `i‴`, then `i^(p)` for `p` primes.
pub fn mark_label(i: usize, class: usize) -> String {
    match class - 1 {
        0 => format!("{i}"),
        1 => format!("{i}′"),
        2 => format!("{i}″"),
        3 => format!("{i}‴"),
        p => format!("{i}^({p})"),
    }
}

/// Elements are tuples `t ∈ {0..m}^n` (0 = index absent, c = index present
/// with mark class c), enumerated in mixed-radix order with coordinate 1
/// least significant. Covers add a single marked index.
fn marked_subsets(n: usize, m: usize) -> Poset {
    let base = m + 1;
    let size = base.pow(n as u32);
    let digits = |mut id: usize| {
        let mut t = vec![0usize; n];
        for d in t.iter_mut() {
            *d = id % base;
            id /= base;
        }
        t
    };
    let labels = (0..size)
        .map(|id| {
            let t = digits(id);
            let members: Vec<String> = t
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(i, &c)| mark_label(i + 1, c))
                .collect();
            if members.is_empty() {
                "∅".to_string()
            } else {
                format!("{{{}}}", members.join(","))
            }
        })
        .collect();
    let mut covers = Vec::new();
    for id in 0..size {
        let t = digits(id);
        let mut place = 1;
        for &d in &t {
            if d == 0 {
                for c in 1..=m {
                    covers.push((id, id + c * place));
                }
            }
            place *= base;
        }
    }
    Poset::from_cover_ids(labels, &covers).expect("marked subsets form a poset")
}

pub fn example_sym() -> Poset {
    Poset::from_covers(
        ["A", "B", "C", "D", "E", "F", "G"],
        &[("C", "A"), ("D", "A"), ("D", "B"), ("E", "B"), ("F", "C"), ("F", "D"), ("G", "E")],
    )
    .expect("valid diagram")
}

pub fn example_uni() -> Poset {
    Poset::from_covers(
        ["A", "B", "C", "D", "E", "F"],
        &[("B", "A"), ("C", "A"), ("D", "B"), ("E", "C"), ("F", "D"), ("F", "E")],
    )
    .expect("valid diagram")
}
