#![allow(dead_code)]

use posetlab_core::Poset;
use proptest::prelude::*;

/// Random poset on up to `max_n` elements from a list of `i < j` pairs.
pub fn arb_poset(max_n: usize) -> impl Strategy<Value = Poset> {
    (0..=max_n)
        .prop_flat_map(|n| {
            let pairs = if n < 2 {
                Just(Vec::new()).boxed()
            } else {
                proptest::collection::vec((0..n, 0..n), 0..2 * n).boxed()
            };
            (Just(n), pairs)
        })
        .prop_map(|(n, pairs)| {
            let labels = (0..n).map(|i| format!("p{i}")).collect();
            let pairs: Vec<_> = pairs
                .into_iter()
                .filter(|(a, b)| a != b)
                .map(|(a, b)| (a.min(b), a.max(b)))
                .collect();
            Poset::from_cover_ids(labels, &pairs).unwrap()
        })
}

/// Every permutation of `0..n`, by Heap's algorithm.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        heap(k - 1, a, out);
        for i in 0..k - 1 {
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
            heap(k - 1, a, out);
        }
    }
    let mut out = Vec::new();
    heap(n, &mut (0..n).collect(), &mut out);
    out
}

/// Isomorphism by trying every bijection.
pub fn iso_exhaustive(p: &Poset, q: &Poset) -> bool {
    if p.len() != q.len() {
        return false;
    }
    let n = p.len();
    permutations(n)
        .iter()
        .any(|f| (0..n).all(|a| (0..n).all(|b| p.le(a, b) == q.le(f[a], f[b]))))
}

/// Largest antichain by enumerating all subsets.
pub fn width_bruteforce(p: &Poset) -> usize {
    let n = p.len();
    (0u32..1 << n)
        .filter(|&m| {
            (0..n).all(|a| (0..n).all(|b| a == b || m >> a & 1 == 0 || m >> b & 1 == 0 || !p.comparable(a, b)))
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Minimum s-t cut by enumerating every source side.
pub fn min_cut_bruteforce(nodes: usize, s: usize, t: usize, arcs: &[(usize, usize, i64)]) -> i64 {
    (0u32..1 << nodes)
        .filter(|&m| m >> s & 1 == 1 && m >> t & 1 == 0)
        .map(|m| {
            arcs.iter()
                .filter(|&&(u, v, _)| m >> u & 1 == 1 && m >> v & 1 == 0)
                .map(|&(_, _, c)| c)
                .sum()
        })
        .min()
        .unwrap()
}
