//! Normalized matching: `|A| / |P_i| <= |∇A| / |P_{i+1}|` for every level
//! `i` and every `A ⊆ P_i`, compared by cross-multiplication.
//!
//! The flow check builds, for each pair of consecutive levels, the network
//! `s -> a` (capacity `|P_{i+1}|`) for `a ∈ P_i`, `a -> b` (effectively
//! infinite) for each cover `b ⋗ a`, and `b -> t` (capacity `|P_i|`). The
//! condition holds on that pair iff the max flow saturates every source arc,
//! i.e. equals `|P_i| |P_{i+1}|`. Otherwise the source side of a minimum cut
//! is a violating `A`.

use serde::{Deserialize, Serialize};

use crate::error::{PosetError, Result};
use crate::flow::{max_flow, FlowNetwork};
use crate::poset::{ElementId, Poset, Subset};

pub const EXHAUSTIVE_LEVEL_LIMIT: usize = 20;

/// A set `A ⊆ P_level` with `|A| |P_{level+1}| > |∇A| |P_level|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalityWitness {
    pub level: usize,
    pub subset: Vec<ElementId>,
    pub shadow: Vec<ElementId>,
}

impl NormalityWitness {
    /// Recomputes levels and the shadow from `p` and rechecks the inequality.
    pub fn validate(&self, p: &Poset) -> bool {
        let Ok(levels) = p.levels() else {
            return false;
        };
        if self.level + 1 >= levels.len() || self.subset.is_empty() {
            return false;
        }
        let lower = &levels[self.level];
        if !self.subset.iter().all(|x| lower.binary_search(x).is_ok()) {
            return false;
        }
        let a: Subset = self.subset.iter().copied().collect();
        if a.len() != self.subset.len() {
            return false;
        }
        let Ok(shadow) = p.nabla(&a) else {
            return false;
        };
        shadow.to_vec() == self.shadow
            && violates(a.len(), shadow.len(), lower.len(), levels[self.level + 1].len())
    }
}

fn violates(a: usize, shadow: usize, low: usize, high: usize) -> bool {
    (a as u128) * (high as u128) > (shadow as u128) * (low as u128)
}

pub fn normality_violation(p: &Poset) -> Result<Option<NormalityWitness>> {
    let levels = p.levels()?;
    for i in 0..levels.len().saturating_sub(1) {
        if let Some(w) = level_pair_violation(p, &levels, i) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn level_pair_violation(p: &Poset, levels: &[Vec<ElementId>], i: usize) -> Option<NormalityWitness> {
    let (lower, upper) = (&levels[i], &levels[i + 1]);
    let (nl, nu) = (lower.len() as i64, upper.len() as i64);
    let infinite = nl * nu + 1;
    // Node layout: 0 = source, 1 = sink, then lower level, then upper level.
    let mut net = FlowNetwork::new(2 + lower.len() + upper.len(), 0, 1).expect("valid terminals");
    let upper_pos = |b: ElementId| upper.binary_search(&b).ok();
    for (ai, &a) in lower.iter().enumerate() {
        net.add_arc(0, 2 + ai, nu, 0).expect("valid arc");
        for &b in p.upper_covers(a) {
            let bi = upper_pos(b).expect("covers of a graded poset go up one level");
            net.add_arc(2 + ai, 2 + lower.len() + bi, infinite, 0).expect("valid arc");
        }
    }
    for bi in 0..upper.len() {
        net.add_arc(2 + lower.len() + bi, 1, nl, 0).expect("valid arc");
    }
    let flow = max_flow(&net);
    if flow.value == nl * nu {
        return None;
    }
    let subset: Vec<ElementId> = lower
        .iter()
        .enumerate()
        .filter(|&(ai, _)| flow.source_side[2 + ai])
        .map(|(_, &a)| a)
        .collect();
    let shadow = p.nabla(&subset.iter().copied().collect()).expect("ids from this poset").to_vec();
    Some(NormalityWitness { level: i, subset, shadow })
}

pub fn is_normal(p: &Poset) -> Result<bool> {
    Ok(normality_violation(p)?.is_none())
}

/// The same condition by enumerating every subset of every level.
pub fn normality_violation_exhaustive(p: &Poset) -> Result<Option<NormalityWitness>> {
    let levels = p.levels()?;
    for (level, l) in levels.iter().enumerate() {
        if l.len() > EXHAUSTIVE_LEVEL_LIMIT {
            return Err(PosetError::LevelTooLarge { level, size: l.len(), limit: EXHAUSTIVE_LEVEL_LIMIT });
        }
    }
    for i in 0..levels.len().saturating_sub(1) {
        let (lower, upper) = (&levels[i], &levels[i + 1]);
        let neighbours: Vec<u32> = lower
            .iter()
            .map(|&a| {
                upper
                    .iter()
                    .enumerate()
                    .filter(|&(_, &b)| p.upper_covers(a).contains(&b))
                    .fold(0u32, |m, (bi, _)| m | 1 << bi)
            })
            .collect();
        let mut shadow = vec![0u32; 1 << lower.len()];
        for mask in 1usize..shadow.len() {
            let low = mask.trailing_zeros() as usize;
            shadow[mask] = shadow[mask & (mask - 1)] | neighbours[low];
            let a = mask.count_ones() as usize;
            let s = shadow[mask].count_ones() as usize;
            if violates(a, s, lower.len(), upper.len()) {
                let subset = (0..lower.len()).filter(|&x| mask >> x & 1 == 1).map(|x| lower[x]).collect();
                let sh = (0..upper.len()).filter(|&y| shadow[mask] >> y & 1 == 1).map(|y| upper[y]).collect();
                return Ok(Some(NormalityWitness { level: i, subset, shadow: sh }));
            }
        }
    }
    Ok(None)
}

pub fn is_normal_exhaustive(p: &Poset) -> Result<bool> {
    Ok(normality_violation_exhaustive(p)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::total;
    use crate::chains::chain_poset;

    /// Levels {a, b} and {t1, t2, t3}; only t3 covers b.
    fn lopsided() -> Poset {
        Poset::from_covers(
            ["a", "b", "t1", "t2", "t3"],
            &[("a", "t1"), ("a", "t2"), ("a", "t3"), ("b", "t3")],
        )
        .unwrap()
    }

    #[test]
    fn lopsided_fails_with_witness_b() {
        let p = lopsided();
        let w = normality_violation(&p).unwrap().unwrap();
        assert_eq!(w.subset, vec![1]);
        assert_eq!(w.shadow, vec![4]);
        assert!(w.validate(&p));
        assert!(!is_normal_exhaustive(&p).unwrap());
    }

    #[test]
    fn isolated_element_is_not_graded() {
        let p = Poset::from_covers(["a", "b", "t1", "t2"], &[("a", "t1"), ("a", "t2")]).unwrap();
        assert!(matches!(is_normal(&p), Err(PosetError::NotGraded)));
        assert!(matches!(is_normal_exhaustive(&p), Err(PosetError::NotGraded)));
    }

    #[test]
    fn chains_are_normal() {
        for k in 0..5 {
            assert!(is_normal(&total(k)).unwrap());
        }
    }

    #[test]
    fn large_level_rejected_by_exhaustive() {
        let labels: Vec<String> = (0..21).map(|i| format!("x{i}")).collect();
        let p = Poset::from_cover_ids(labels, &[]).unwrap();
        assert!(matches!(is_normal_exhaustive(&p), Err(PosetError::LevelTooLarge { size: 21, .. })));
        assert!(is_normal(&p).unwrap());
    }

    #[test]
    fn tampered_witness_rejected() {
        let p = chain_poset(&total(1), 2).unwrap().into_poset();
        let w = NormalityWitness { level: 0, subset: vec![0], shadow: vec![1] };
        assert!(!w.validate(&p));
    }
}
