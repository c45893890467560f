//! The chain-poset operator `P -> P[k]`.
//!
//! Elements of `P[k]` are multichains `x_1 <= x_2 <= ... <= x_k` of `P`,
//! ordered coordinatewise. Covers are produced directly: `y ⋖ x` in `P[k]`
//! exactly when the tuples agree in every coordinate but one, where
//! `y_j ⋖ x_j` in `P`.

use std::collections::HashMap;
use std::fmt;
use std::ops::Deref;

use crate::bits::BitMatrix;
use crate::error::{PosetError, Result};
use crate::poset::{ElementId, Poset};

/// A nondecreasing tuple of base-poset element ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multichain(Vec<ElementId>);

impl Multichain {
    /// Validates that `ids` is nondecreasing in `base`.
    pub fn new(base: &Poset, ids: Vec<ElementId>) -> Result<Multichain> {
        if ids.is_empty() {
            return Err(PosetError::ZeroChainLength);
        }
        for &x in &ids {
            if x >= base.len() {
                return Err(PosetError::InvalidElement { id: x, size: base.len() });
            }
        }
        if ids.windows(2).any(|w| !base.le(w[0], w[1])) {
            return Err(PosetError::NotAMultichain(ids));
        }
        Ok(Multichain(ids))
    }

    pub fn ids(&self) -> &[ElementId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The chain's label, built from base labels: concatenated (`CA` for
    /// `C <= A`) when every base label is a single symbol with optional
    /// primes, otherwise joined with `≤`.
    pub fn label(&self, base: &Poset) -> String {
        let compact = base.labels().iter().all(|l| is_atomic_label(l));
        let parts = self.0.iter().map(|&x| base.label(x));
        if compact {
            parts.collect()
        } else {
            parts.collect::<Vec<_>>().join("≤")
        }
    }
}

fn is_atomic_label(l: &str) -> bool {
    let mut chars = l.chars();
    match chars.next() {
        Some(c) if c.is_alphanumeric() || c == '∅' => chars.all(|c| matches!(c, '′' | '″' | '‴' | '\'')),
        _ => false,
    }
}

/// `P[k]` together with the map from its element ids back to multichains.
#[derive(Debug, Clone)]
pub struct ChainPoset {
    poset: Poset,
    chains: Vec<Multichain>,
    k: usize,
}

impl ChainPoset {
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn into_poset(self) -> Poset {
        self.poset
    }

    pub fn chains(&self) -> &[Multichain] {
        &self.chains
    }

    pub fn chain(&self, id: ElementId) -> &Multichain {
        &self.chains[id]
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

impl Deref for ChainPoset {
    type Target = Poset;

    fn deref(&self) -> &Poset {
        &self.poset
    }
}

impl fmt::Display for Multichain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(" <= "))
    }
}

/// All `k`-multichains of `base` in lexicographic order of id tuples.
pub fn multichains(base: &Poset, k: usize) -> Result<Vec<Multichain>> {
    if k == 0 {
        return Err(PosetError::ZeroChainLength);
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    for x in 0..base.len() {
        current.push(x);
        extend(base, k, &mut current, &mut out);
        current.pop();
    }
    Ok(out)
}

fn extend(base: &Poset, k: usize, current: &mut Vec<ElementId>, out: &mut Vec<Multichain>) {
    if current.len() == k {
        out.push(Multichain(current.clone()));
        return;
    }
    let last = *current.last().expect("nonempty prefix");
    // `above` yields ids ascending, which keeps the output lexicographic.
    for y in base.above(last) {
        current.push(y);
        extend(base, k, current, out);
        current.pop();
    }
}

/// Builds `P[k]`.
pub fn chain_poset(base: &Poset, k: usize) -> Result<ChainPoset> {
    let chains = multichains(base, k)?;
    let index: HashMap<&[ElementId], ElementId> =
        chains.iter().enumerate().map(|(i, c)| (c.ids(), i)).collect();

    let mut covers = Vec::new();
    let mut probe = Vec::with_capacity(k);
    for (xi, x) in chains.iter().enumerate() {
        let x = x.ids();
        for j in 0..k {
            for &yj in base.lower_covers(x[j]) {
                // yj < x[j] <= x[j+1] always; only the left neighbour can break it.
                if j > 0 && !base.le(x[j - 1], yj) {
                    continue;
                }
                probe.clear();
                probe.extend_from_slice(x);
                probe[j] = yj;
                let yi = index[probe.as_slice()];
                covers.push((yi, xi));
            }
        }
    }

    let m = chains.len();
    let mut upset = BitMatrix::new(m);
    for (a, ca) in chains.iter().enumerate() {
        for (b, cb) in chains.iter().enumerate() {
            if ca.ids().iter().zip(cb.ids()).all(|(&p, &q)| base.le(p, q)) {
                upset.set(a, b);
            }
        }
    }

    let labels = chains.iter().map(|c| c.label(base)).collect::<Vec<_>>();
    let labels = if has_duplicates(&labels) {
        chains.iter().map(|c| Multichain(c.ids().to_vec()).to_string()).collect()
    } else {
        labels
    };
    let poset = Poset::from_parts(labels, covers, upset);
    Ok(ChainPoset { poset, chains, k })
}

fn has_duplicates(labels: &[String]) -> bool {
    let mut seen = std::collections::HashSet::with_capacity(labels.len());
    labels.iter().any(|l| !seen.insert(l.as_str()))
}

/// Covers of `P[k]` obtained straight from the coordinatewise order by
/// transitive reduction, without the one-coordinate rule. Ids follow the
/// same lexicographic enumeration as [`chain_poset`].
pub fn covers_from_order_definition(base: &Poset, k: usize) -> Result<Vec<(ElementId, ElementId)>> {
    let chains = multichains(base, k)?;
    let labels = (0..chains.len()).map(|i| i.to_string()).collect();
    let p = Poset::from_order(labels, |a, b| {
        chains[a].ids().iter().zip(chains[b].ids()).all(|(&x, &y)| base.le(x, y))
    })?;
    Ok(p.covers().to_vec())
}

/// `Σ ρ(x_i)` for a multichain of a graded poset.
pub fn multichain_rank(base: &Poset, chain: &Multichain) -> Result<usize> {
    let ranks = base.rank_data().ok_or(PosetError::NotGraded)?.ranks();
    chain
        .ids()
        .iter()
        .map(|&x| {
            ranks
                .get(x)
                .copied()
                .ok_or(PosetError::InvalidElement { id: x, size: base.len() })
        })
        .sum()
}
