//! Flow-based checkers against their enumeration oracles, witness soundness,
//! and consistency with the cited product/Sperner theorems.

mod common;

use common::arb_poset;
use posetlab_core::analysis::*;
use posetlab_core::catalog::{boolean, example_sym, example_uni, isotropic, isotropic_general, total};
use posetlab_core::random::random_graded_poset;
use posetlab_core::{chain_poset, product, Poset};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small_catalog() -> Vec<(String, Poset)> {
    let mut out = vec![
        ("ex1".to_string(), example_sym()),
        ("ex2".to_string(), example_uni()),
    ];
    for n in 0..=3 {
        out.push((format!("B({n})"), boolean(n)));
    }
    for n in 0..=2 {
        out.push((format!("I({n})"), isotropic(n)));
    }
    for m in 0..=6 {
        out.push((format!("T({m})"), total(m)));
    }
    for k in 1..=6 {
        out.push((format!("I(1)[{k}]"), chain_poset(&isotropic(1), k).unwrap().into_poset()));
    }
    out.push(("B(2)[2]".into(), chain_poset(&boolean(2), 2).unwrap().into_poset()));
    out.push(("I(1,3)".into(), isotropic_general(1, 3).unwrap()));
    out
}

#[test]
fn oracles_agree_on_catalog() {
    for (name, p) in small_catalog() {
        assert!(p.len() <= 16, "{name}");
        assert_eq!(is_normal(&p).unwrap(), is_normal_exhaustive(&p).unwrap(), "{name}");
        for j in 1..=4 {
            let fam = max_j_family(&p, j).unwrap();
            assert!(fam.is_valid_for(&p), "{name} j={j}");
            assert_eq!(fam.size, max_j_family_bruteforce(&p, j).unwrap(), "{name} j={j}");
        }
    }
}

#[test]
fn oracles_agree_on_random_graded_posets() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let (mut normal, mut abnormal) = (0, 0);
    for _ in 0..300 {
        let p = random_graded_poset(&mut rng, 12);
        let flow = normality_violation(&p).unwrap();
        let brute = is_normal_exhaustive(&p).unwrap();
        assert_eq!(flow.is_none(), brute);
        if let Some(w) = flow {
            assert!(w.validate(&p));
            abnormal += 1;
        } else {
            normal += 1;
        }
        for j in 1..=4 {
            assert_eq!(max_j_family(&p, j).unwrap().size, max_j_family_bruteforce(&p, j).unwrap());
        }
    }
    // The generator must exercise both verdicts.
    assert!(normal > 20 && abnormal > 20, "normal={normal} abnormal={abnormal}");
}

#[test]
fn expected_verdicts() {
    assert!(is_normal(&chain_poset(&isotropic(1), 3).unwrap()).unwrap());
    assert!(is_strongly_sperner(&chain_poset(&boolean(3), 2).unwrap()).unwrap());
    assert!(is_strongly_sperner(&chain_poset(&isotropic(2), 2).unwrap()).unwrap());
    let b22 = chain_poset(&boolean(2), 2).unwrap();
    assert!(is_rank_log_concave(&b22).unwrap());
    assert_eq!(rank_polynomial(&b22).unwrap(), poly_pow(&[1, 1, 1], 2));
    assert_eq!(is_normal(&b22).unwrap(), is_normal_exhaustive(&b22).unwrap());
}

#[test]
fn normal_and_log_concave_closed_under_products() {
    let pool: Vec<Poset> = small_catalog()
        .into_iter()
        .map(|(_, p)| p)
        .filter(|p| p.len() <= 30 && is_normal(p).unwrap() && is_rank_log_concave(p).unwrap())
        .collect();
    assert!(pool.len() >= 10);
    for (i, p) in pool.iter().enumerate() {
        for q in &pool[i..] {
            let pq = product(p, q);
            assert!(is_normal(&pq).unwrap());
            assert!(is_rank_log_concave(&pq).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn j_family_matches_bruteforce(p in arb_poset(10), j in 1usize..=4) {
        let fam = max_j_family(&p, j).unwrap();
        prop_assert!(fam.is_valid_for(&p));
        prop_assert_eq!(fam.size, max_j_family_bruteforce(&p, j).unwrap());
    }

    #[test]
    fn report_witnesses_revalidate(seed in any::<u64>()) {
        let p = random_graded_poset(&mut ChaCha8Rng::seed_from_u64(seed), 12);
        let report = PropertyReport::analyze(&p);
        prop_assert!(report.witnesses_valid(&p));
        let json = serde_json::to_string(&report).unwrap();
        let back: PropertyReport = serde_json::from_str(&json).unwrap();
        prop_assert!(back.witnesses_valid(&p));
        // Cited implications, checked rather than assumed.
        if report.normal.holds() {
            prop_assert!(report.strongly_sperner.holds());
        }
        if report.rank_log_concave.holds() {
            prop_assert!(report.rank_unimodal.holds());
        }
    }

    #[test]
    fn j_family_monotone_and_above_levels(seed in any::<u64>()) {
        let p = random_graded_poset(&mut ChaCha8Rng::seed_from_u64(seed), 12);
        let w = p.whitney().unwrap();
        let mut last = 0;
        for j in 1..=w.len() + 1 {
            let d = max_j_family(&p, j).unwrap().size;
            prop_assert!(d >= last);
            prop_assert!(d >= w.top_sum(j));
            last = d;
        }
        prop_assert_eq!(last, p.len() as u64);
    }
}

#[test]
fn ungraded_report_reads_not_graded() {
    let p = Poset::from_covers(["a", "b", "t1", "t2"], &[("a", "t1"), ("a", "t2")]).unwrap();
    let r = PropertyReport::analyze(&p);
    assert!(!r.graded);
    assert_eq!(r.normal, Outcome::NotGraded);
    assert!(r.witnesses_valid(&p));
    let json = serde_json::to_value(&r).unwrap();
    assert_eq!(json["normal"]["verdict"], "not_graded");
}
