//! Maximum `j`-families (largest unions of `j` antichains) and the strong
//! Sperner property.
//!
//! `d_j(P)` is computed through the chain-partition dual: the minimum over
//! chain partitions of `Σ min(|C|, j)`. Every element is split into
//! `in -> out` (capacity 1, cost -1); `u_out -> v_in` joins comparable
//! `u < v`; each unit of flow entering from the source pays `j`, so a unit
//! of flow is a chain `C` of cost `j - |C|`. Elements left uncovered are
//! singleton chains. Then `d_j = |P| + min cost` over all flow values.
//!
//! The antichains themselves come from optimal node potentials: with
//! `a_v = π(v_in)` and `b_v = π(v_out)`, the sets
//! `A_θ = { v : b_v < θ <= a_v }` for `θ = 1..=j` are antichains whose union
//! has exactly `d_j` elements.

use serde::{Deserialize, Serialize};

use crate::error::{PosetError, Result};
use crate::flow::{min_cost_flow_best, residual_potentials, FlowNetwork};
use crate::poset::{ElementId, Poset};

pub const BRUTEFORCE_LIMIT: usize = 16;

/// A maximum union of `j` antichains, given as `j` disjoint antichains
/// (some possibly empty).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JFamily {
    pub j: usize,
    pub size: u64,
    pub antichains: Vec<Vec<ElementId>>,
}

impl JFamily {
    /// Checks that the antichains are disjoint antichains of `p`, that there
    /// are at most `j` of them and that their sizes add up to `size`.
    pub fn is_valid_for(&self, p: &Poset) -> bool {
        valid_family(p, self.j, &self.antichains) && self.antichains.iter().map(Vec::len).sum::<usize>() as u64 == self.size
    }
}

fn valid_family(p: &Poset, j: usize, antichains: &[Vec<ElementId>]) -> bool {
    if antichains.len() > j {
        return false;
    }
    let mut seen = vec![false; p.len()];
    for chain in antichains {
        for (i, &x) in chain.iter().enumerate() {
            if x >= p.len() || std::mem::replace(&mut seen[x], true) {
                return false;
            }
            if chain[..i].iter().any(|&y| p.comparable(x, y)) {
                return false;
            }
        }
    }
    true
}

/// A union of `j` antichains strictly larger than the `j` largest levels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpernerWitness {
    pub j: usize,
    pub bound: u64,
    pub antichains: Vec<Vec<ElementId>>,
}

impl SpernerWitness {
    pub fn validate(&self, p: &Poset) -> bool {
        let Ok(profile) = p.whitney() else {
            return false;
        };
        let size: usize = self.antichains.iter().map(Vec::len).sum();
        self.j >= 1
            && profile.top_sum(self.j) == self.bound
            && valid_family(p, self.j, &self.antichains)
            && size as u64 > self.bound
    }
}

pub fn max_j_family(p: &Poset, j: usize) -> Result<JFamily> {
    if j == 0 {
        return Err(PosetError::ZeroAntichainCount);
    }
    let n = p.len();
    let (source, sink) = (0, 1);
    let inp = |v: usize| 2 + 2 * v;
    let out = |v: usize| 3 + 2 * v;
    let wide = n.max(1) as i64;
    let mut net = FlowNetwork::new(2 + 2 * n, source, sink).expect("valid terminals");
    for v in 0..n {
        net.add_arc(source, inp(v), wide, j as i64).expect("valid arc");
        net.add_arc(inp(v), out(v), 1, -1).expect("valid arc");
        net.add_arc(out(v), sink, wide, 0).expect("valid arc");
        for w in p.above(v) {
            if w != v {
                net.add_arc(out(v), inp(w), wide, 0).expect("valid arc");
            }
        }
    }
    let best = min_cost_flow_best(&net).expect("comparability network is acyclic");
    let size = (n as i64 + best.cost) as u64;

    let pi = residual_potentials(&net, &best.arc_flow, true).expect("min-cost flow is optimal");
    let mut antichains = vec![Vec::new(); j];
    for v in 0..n {
        let (a, b) = (pi[inp(v)], pi[out(v)]);
        // Smallest integer θ in (b, a] ∩ [1, j].
        let theta = (b + 1).max(1);
        if theta <= a && theta <= j as i64 {
            antichains[theta as usize - 1].push(v);
        }
    }
    let family = JFamily { j, size, antichains };
    debug_assert!(family.is_valid_for(p), "potential-derived family is inconsistent");
    Ok(family)
}

/// Largest `|S|` over subsets `S` whose longest chain has at most `j`
/// elements, by enumerating every subset.
pub fn max_j_family_bruteforce(p: &Poset, j: usize) -> Result<u64> {
    if j == 0 {
        return Err(PosetError::ZeroAntichainCount);
    }
    let longest = longest_chain_by_subset(p)?;
    Ok(longest
        .iter()
        .enumerate()
        .filter(|&(_, &l)| l as usize <= j)
        .map(|(s, _)| s.count_ones() as u64)
        .max()
        .unwrap_or(0))
}

/// `longest[S]` = number of elements in a longest chain inside `S`.
fn longest_chain_by_subset(p: &Poset) -> Result<Vec<u8>> {
    let n = p.len();
    if n > BRUTEFORCE_LIMIT {
        return Err(PosetError::PosetTooLarge { size: n, limit: BRUTEFORCE_LIMIT });
    }
    // Reindex along a linear extension so the highest set bit of any mask
    // is a maximal element of that subset.
    let mut order: Vec<ElementId> = (0..n).collect();
    order.sort_by_key(|&x| (p.heights()[x], x));
    let below: Vec<usize> = order
        .iter()
        .map(|&x| {
            order
                .iter()
                .enumerate()
                .filter(|&(_, &y)| p.lt(y, x))
                .fold(0usize, |m, (i, _)| m | 1 << i)
        })
        .collect();
    let mut longest = vec![0u8; 1 << n];
    for s in 1usize..longest.len() {
        let top = usize::BITS as usize - 1 - s.leading_zeros() as usize;
        let without = longest[s & !(1 << top)];
        let through = 1 + longest[s & below[top]];
        longest[s] = without.max(through);
    }
    Ok(longest)
}

pub fn strong_sperner_violation(p: &Poset) -> Result<Option<SpernerWitness>> {
    let profile = p.whitney()?;
    for j in 1..=profile.len() {
        let bound = profile.top_sum(j);
        let family = max_j_family(p, j)?;
        debug_assert!(family.size >= bound, "levels are antichains");
        if family.size > bound {
            return Ok(Some(SpernerWitness { j, bound, antichains: family.antichains }));
        }
    }
    Ok(None)
}

pub fn is_strongly_sperner(p: &Poset) -> Result<bool> {
    Ok(strong_sperner_violation(p)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{boolean, total};

    #[test]
    fn chain_has_singleton_antichains() {
        let f = max_j_family(&total(3), 1).unwrap();
        assert_eq!(f.size, 1);
        assert!(f.is_valid_for(&total(3)));
        for j in 4..7 {
            assert_eq!(max_j_family(&total(3), j).unwrap().size, 4);
        }
    }

    #[test]
    fn boolean_three_width() {
        let b3 = boolean(3);
        assert_eq!(max_j_family(&b3, 1).unwrap().size, 3);
        assert_eq!(max_j_family_bruteforce(&b3, 1).unwrap(), 3);
        assert_eq!(max_j_family(&b3, 2).unwrap().size, 6);
        assert!(is_strongly_sperner(&b3).unwrap());
    }

    #[test]
    fn lopsided_two_level_not_sperner() {
        let p = Poset::from_covers(
            ["a1", "a2", "a3", "b1", "b2", "b3"],
            &[("a1", "b1"), ("a1", "b2"), ("a1", "b3"), ("a2", "b1"), ("a3", "b1")],
        )
        .unwrap();
        assert_eq!(max_j_family_bruteforce(&p, 1).unwrap(), 4);
        let w = strong_sperner_violation(&p).unwrap().unwrap();
        assert_eq!((w.j, w.bound), (1, 3));
        assert!(w.validate(&p));
        let mut flat: Vec<_> = w.antichains.concat();
        flat.sort();
        assert_eq!(flat, vec![1, 2, 4, 5]);
    }

    #[test]
    fn zero_j_and_large_oracle_input_rejected() {
        assert!(matches!(max_j_family(&total(2), 0), Err(PosetError::ZeroAntichainCount)));
        assert!(matches!(max_j_family_bruteforce(&total(2), 0), Err(PosetError::ZeroAntichainCount)));
        assert!(matches!(max_j_family_bruteforce(&total(16), 1), Err(PosetError::PosetTooLarge { .. })));
    }

    #[test]
    fn empty_poset() {
        let e = Poset::from_cover_ids(Vec::new(), &[]).unwrap();
        assert_eq!(max_j_family(&e, 2).unwrap().size, 0);
        assert_eq!(max_j_family_bruteforce(&e, 2).unwrap(), 0);
        assert!(is_strongly_sperner(&e).unwrap());
    }
}
