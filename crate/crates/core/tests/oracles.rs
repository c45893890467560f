//! Expected values computed by independent enumeration, then compared with
//! the library.

mod common;

use common::{iso_exhaustive, min_cut_bruteforce, width_bruteforce};
use posetlab_core::analysis::{max_j_family, max_j_family_bruteforce, strong_sperner_violation};
use posetlab_core::catalog::{boolean, isotropic, total};
use posetlab_core::flow::{max_flow, FlowNetwork};
use posetlab_core::{chain_poset, product, Poset};

fn network(nodes: usize, s: usize, t: usize, arcs: &[(usize, usize, i64)]) -> FlowNetwork {
    let mut net = FlowNetwork::new(nodes, s, t).unwrap();
    for &(u, v, c) in arcs {
        net.add_arc(u, v, c, 0).unwrap();
    }
    net
}

#[test]
fn diamond_networks_match_cut_enumeration() {
    // s=0, a=1, b=2, t=3.
    let plain = [(0, 1, 3), (0, 2, 2), (1, 3, 2), (2, 3, 3)];
    let cut = min_cut_bruteforce(4, 0, 3, &plain);
    assert_eq!(cut, 4);
    assert_eq!(max_flow(&network(4, 0, 3, &plain)).value, cut);

    let crossed = [(0, 1, 3), (0, 2, 2), (1, 3, 2), (2, 3, 3), (1, 2, 1)];
    let cut = min_cut_bruteforce(4, 0, 3, &crossed);
    assert_eq!(cut, 5);
    assert_eq!(max_flow(&network(4, 0, 3, &crossed)).value, cut);
}

#[test]
fn random_networks_match_cut_enumeration() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let nodes = rng.gen_range(2..=7);
        let mut arcs = Vec::new();
        for u in 0..nodes {
            for v in 0..nodes {
                if u != v && v != 0 && u != nodes - 1 && rng.gen_bool(0.4) {
                    arcs.push((u, v, rng.gen_range(0..6)));
                }
            }
        }
        let expected = min_cut_bruteforce(nodes, 0, nodes - 1, &arcs);
        let mf = max_flow(&network(nodes, 0, nodes - 1, &arcs));
        assert_eq!(mf.value, expected);
        // The reported source side is itself a minimum cut.
        let side: i64 = arcs
            .iter()
            .filter(|&&(u, v, _)| mf.source_side[u] && !mf.source_side[v])
            .map(|&(_, _, c)| c)
            .sum();
        assert_eq!(side, expected);
    }
}

#[test]
fn product_of_isotropic_ones_profile() {
    // Subsets of {1,2,1',2'} (bits 0..4 = 1,2,1',2') avoiding {i,i'}.
    let mut by_size = [0u64; 5];
    for m in 0u32..16 {
        if m & 0b0101 == 0b0101 || m & 0b1010 == 0b1010 {
            continue;
        }
        by_size[m.count_ones() as usize] += 1;
    }
    assert_eq!(&by_size[..3], &[1, 4, 4]);
    assert_eq!(by_size[3..], [0, 0]);
    let i1 = isotropic(1);
    assert_eq!(product(&i1, &i1).whitney().unwrap().counts(), &by_size[..3]);
    assert_eq!(isotropic(2).whitney().unwrap().counts(), &by_size[..3]);
}

#[test]
fn boolean_two_chain_two_profile() {
    // Pairs S ⊆ T of subsets of {1,2}, graded by |S| + |T|.
    let mut by_rank = [0u64; 5];
    for s in 0u32..4 {
        for t in 0u32..4 {
            if s & t == s {
                by_rank[(s.count_ones() + t.count_ones()) as usize] += 1;
            }
        }
    }
    assert_eq!(by_rank, [1, 2, 3, 2, 1]);
    let cp = chain_poset(&boolean(2), 2).unwrap();
    assert_eq!(cp.len(), 9);
    assert_eq!(cp.whitney().unwrap().counts(), &by_rank);
}

#[test]
fn isotropic_sizes() {
    for n in 0..=5 {
        assert_eq!(isotropic(n).len(), 3usize.pow(n as u32));
    }
}

#[test]
fn boolean_three_width() {
    let b3 = boolean(3);
    let w = width_bruteforce(&b3);
    assert_eq!(w, 3);
    assert_eq!(max_j_family(&b3, 1).unwrap().size, w as u64);
    for j in 1..=3 {
        assert_eq!(max_j_family(&b3, j).unwrap().size, max_j_family_bruteforce(&b3, j).unwrap());
    }
}

#[test]
fn lopsided_two_level_width() {
    let p = Poset::from_covers(
        ["a1", "a2", "a3", "b1", "b2", "b3"],
        &[("a1", "b1"), ("a1", "b2"), ("a1", "b3"), ("a2", "b1"), ("a3", "b1")],
    )
    .unwrap();
    assert_eq!(width_bruteforce(&p), 4);
    let w = strong_sperner_violation(&p).unwrap().unwrap();
    assert_eq!(w.antichains.iter().map(Vec::len).sum::<usize>(), 4);
}

#[test]
fn chain_sizes_on_total_orders() {
    fn binom(n: u64, k: u64) -> u64 {
        (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
    }
    for m in 0..=5 {
        for k in 1..=4 {
            let cp = chain_poset(&total(m), k).unwrap();
            assert_eq!(cp.len() as u64, binom((m + k) as u64, k as u64), "m={m} k={k}");
        }
    }
}

#[test]
fn small_isomorphism_verdicts_match_bijection_search() {
    let t1 = total(1);
    assert!(iso_exhaustive(&product(&t1, &t1), &boolean(2)));
    assert!(iso_exhaustive(&chain_poset(&t1, 3).unwrap(), &total(3)));
    assert!(!iso_exhaustive(&boolean(2), &total(3)));
}
