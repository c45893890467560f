//! The fixed verification suite behind `verify-paper`.
//!
//! Criteria run concurrently; results come back in criterion order. The
//! posets shared by several criteria are built and analysed once.

use std::fmt::Write;
use std::sync::OnceLock;

use posetlab_core::analysis::{
    is_normal, is_normal_exhaustive, max_j_family, max_j_family_bruteforce, poly_pow, PropertyReport,
};
use posetlab_core::catalog::{boolean, example_sym, example_uni, isotropic, isotropic_general, total};
use posetlab_core::chains::covers_from_order_definition;
use posetlab_core::random::{random_graded_poset, random_poset};
use posetlab_core::{chain_poset, is_isomorphic, multichain_rank, product, singleton, Poset};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::commands::{self, Property, EXIT_FALSE, EXIT_OK};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionResult {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Check = fn() -> Result<String, String>;

pub const CRITERIA: [(&str, Check); 9] = [
    ("chain posets are graded with additive rank", gradedness),
    ("counterexample profiles", counterexamples),
    ("isomorphism lemmas", isomorphisms),
    ("B(n)[k] and I(n)[k] main theorems", main_theorems),
    ("I(n,m)[k] generalization", generalization),
    ("flow checkers match exhaustive oracles", oracle_equivalence),
    ("one-coordinate cover rule", cover_rule),
    ("cited implications and product closure", implications),
    ("command-line behaviour", cli_behaviour),
];

pub const SEED: u64 = 0x5eed;

/// Runs one criterion, 1-based. A panic counts as a failure.
pub fn run(id: usize) -> CriterionResult {
    let (title, check) = CRITERIA[id - 1];
    let outcome = std::panic::catch_unwind(check).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CriterionResult { id, title, passed, detail }
}

pub fn run_all() -> Vec<CriterionResult> {
    std::thread::scope(|s| {
        let handles: Vec<_> = (1..=CRITERIA.len()).map(|id| s.spawn(move || run(id))).collect();
        handles.into_iter().map(|h| h.join().expect("criterion thread")).collect()
    })
}

pub fn render(results: &[CriterionResult]) -> String {
    let width = results.iter().map(|r| r.title.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in results {
        let verdict = if r.passed { "PASS" } else { "FAIL" };
        writeln!(out, "{:>2}  {verdict}  {:<width$}  {}", r.id, r.title, r.detail).unwrap();
    }
    let passed = results.iter().filter(|r| r.passed).count();
    writeln!(out, "{passed}/{} criteria passed", results.len()).unwrap();
    out
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn power(p: &Poset, n: usize) -> Poset {
    (0..n).fold(singleton(), |acc, _| product(&acc, p))
}

fn bases() -> Vec<(String, Poset)> {
    let mut out = Vec::new();
    for m in 0..=4 {
        out.push((format!("T({m})"), total(m)));
    }
    for n in 0..=4 {
        out.push((format!("B({n})"), boolean(n)));
    }
    for n in 0..=3 {
        out.push((format!("I({n})"), isotropic(n)));
    }
    for n in 0..=2 {
        out.push((format!("I({n},3)"), isotropic_general(n, 3).expect("m > 0")));
    }
    out.push(("ex1".into(), example_sym()));
    out.push(("ex2".into(), example_uni()));
    out
}

pub struct Entry {
    pub name: String,
    pub poset: Poset,
    pub report: PropertyReport,
}

/// Catalog bases, their chain posets for k <= 3, and I(n,m)[k] for n <= 2,
/// m <= 3, each with its property report.
pub fn corpus() -> &'static [Entry] {
    static CORPUS: OnceLock<Vec<Entry>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut named: Vec<(String, Poset)> = Vec::new();
        let mut with_chains = |name: String, p: Poset| {
            for k in 2..=3 {
                named.push((format!("{name}[{k}]"), chain_poset(&p, k).expect("k > 0").into_poset()));
            }
            named.push((name, p));
        };
        for (name, p) in bases() {
            with_chains(name, p);
        }
        for n in 0..=2 {
            for m in [1, 2] {
                with_chains(format!("I({n},{m})"), isotropic_general(n, m).expect("m > 0"));
            }
        }
        analyze_all(named)
    })
}

fn analyze_all(named: Vec<(String, Poset)>) -> Vec<Entry> {
    let workers = std::thread::available_parallelism().map_or(4, |n| n.get()).min(named.len()).max(1);
    let mut indexed: Vec<(usize, String, Poset)> = named.into_iter().enumerate().map(|(i, (n, p))| (i, n, p)).collect();
    // Deal the largest posets out first so workers finish together.
    indexed.sort_by_key(|(_, _, p)| std::cmp::Reverse(p.len()));
    let mut buckets: Vec<Vec<(usize, String, Poset)>> = (0..workers).map(|_| Vec::new()).collect();
    for (i, item) in indexed.into_iter().enumerate() {
        buckets[i % workers].push(item);
    }
    let mut out: Vec<(usize, Entry)> = std::thread::scope(|s| {
        let handles: Vec<_> = buckets
            .into_iter()
            .map(|bucket| {
                s.spawn(move || {
                    bucket
                        .into_iter()
                        .map(|(i, name, poset)| {
                            let report = PropertyReport::analyze(&poset);
                            (i, Entry { name, poset, report })
                        })
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("analysis worker")).collect()
    });
    out.sort_by_key(|(i, _)| *i);
    out.into_iter().map(|(_, e)| e).collect()
}

fn entry(name: &str) -> &'static Entry {
    corpus().iter().find(|e| e.name == name).unwrap_or_else(|| panic!("{name} missing from corpus"))
}

fn gradedness() -> Result<String, String> {
    let mut checked = 0;
    for (name, base) in bases() {
        let n = base.max_rank().ok_or_else(|| format!("{name} is not graded"))?;
        for k in 1..=3 {
            let cp = chain_poset(&base, k).map_err(|e| e.to_string())?;
            ensure(cp.is_graded(), || format!("{name}[{k}] is not graded"))?;
            ensure(cp.max_rank() == Some(k * n), || format!("{name}[{k}] has max rank {:?}, expected {}", cp.max_rank(), k * n))?;
            for (id, chain) in cp.chains().iter().enumerate() {
                let expected = multichain_rank(&base, chain).map_err(|e| e.to_string())?;
                ensure(cp.rank(id) == Some(expected), || {
                    format!("{name}[{k}]: rank of {} is {:?}, expected {expected}", cp.label(id), cp.rank(id))
                })?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} chain posets"))
}

fn counterexamples() -> Result<String, String> {
    let cases: [(&str, &[u64]); 4] = [
        ("ex1", &[2, 3, 2]),
        ("ex1[2]", &[2, 3, 6, 4, 2]),
        ("ex2", &[1, 2, 2, 1]),
        ("ex2[2]", &[1, 2, 4, 3, 4, 2, 1]),
    ];
    for (name, expected) in cases {
        let w = entry(name).poset.whitney().map_err(|e| e.to_string())?;
        ensure(w.counts() == expected, || format!("{name} has profile {w}"))?;
    }
    let r = |name| &entry(name).report;
    ensure(r("ex1").rank_symmetric.holds(), || "ex1 should be rank-symmetric".into())?;
    ensure(!r("ex1[2]").rank_symmetric.holds(), || "ex1[2] should not be rank-symmetric".into())?;
    ensure(r("ex2").rank_unimodal.holds(), || "ex2 should be rank-unimodal".into())?;
    ensure(!r("ex2[2]").rank_unimodal.holds(), || "ex2[2] should not be rank-unimodal".into())?;
    ensure(!r("ex2[2]").rank_log_concave.holds(), || "ex2[2] should not be rank-log concave".into())?;
    Ok("(2,3,2) (2,3,6,4,2) (1,2,2,1) (1,2,4,3,4,2,1)".into())
}

fn isomorphisms() -> Result<String, String> {
    let mut count = 0;
    let mut iso = |name: String, a: &Poset, b: &Poset| {
        count += 1;
        ensure(is_isomorphic(a, b), || format!("{name} failed"))
    };
    let t1 = total(1);
    for n in 0..=4 {
        iso(format!("B({n}) ~ T(1)^{n}"), &boolean(n), &power(&t1, n))?;
    }
    for k in 1..=6 {
        iso(format!("T(1)[{k}] ~ T({k})"), &chain_poset(&t1, k).unwrap(), &total(k))?;
    }
    for n in 0..=3 {
        iso(format!("I({n}) ~ I(1)^{n}"), &isotropic(n), &power(&isotropic(1), n))?;
    }
    for n in 0..=3 {
        for k in 1..=3 {
            iso(format!("B({n})[{k}] ~ T({k})^{n}"), &chain_poset(&boolean(n), k).unwrap(), &power(&total(k), n))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for i in 0..50 {
        let (np, nq) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let (dp, dq) = (rng.gen_range(0.1..0.8), rng.gen_range(0.1..0.8));
        let (p, q) = (random_poset(&mut rng, np, dp), random_poset(&mut rng, nq, dq));
        let k = rng.gen_range(1..=3);
        let left = chain_poset(&product(&p, &q), k).unwrap();
        let right = product(&chain_poset(&p, k).unwrap(), &chain_poset(&q, k).unwrap());
        iso(format!("random pair {i}: (P*Q)[{k}] ~ P[{k}]*Q[{k}]"), &left, &right)?;
    }
    Ok(format!("{count} isomorphisms"))
}

fn main_theorems() -> Result<String, String> {
    let mut checked = 0;
    for (family, max_n) in [("B", 4), ("I", 3)] {
        for n in 0..=max_n {
            for k in 1..=3usize {
                let name = if k == 1 { format!("{family}({n})") } else { format!("{family}({n})[{k}]") };
                let e = entry(&name);
                let (size, factor) = if family == "B" {
                    ((k + 1).pow(n as u32), vec![1; k + 1])
                } else {
                    ((2 * k + 1).pow(n as u32), std::iter::once(1).chain(std::iter::repeat_n(2, k)).collect())
                };
                ensure(e.poset.len() == size, || format!("|{name}| = {}, expected {size}", e.poset.len()))?;
                let w = e.poset.whitney().map_err(|err| err.to_string())?;
                let expected = poly_pow(&factor, n);
                ensure(w.counts() == expected.as_slice(), || format!("{name} has profile {w}, expected {expected:?}"))?;
                let r = &e.report;
                ensure(r.normal.holds(), || format!("{name} is not normal"))?;
                ensure(r.rank_log_concave.holds(), || format!("{name} is not rank-log concave"))?;
                ensure(r.strongly_sperner.holds(), || format!("{name} is not strongly Sperner"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} posets normal, log-concave, strongly Sperner"))
}

fn generalization() -> Result<String, String> {
    let mut checked = 0;
    for n in 0..=2 {
        for m in 1..=3 {
            for k in 1..=3 {
                let name = if k == 1 { format!("I({n},{m})") } else { format!("I({n},{m})[{k}]") };
                let r = &entry(&name).report;
                ensure(r.normal.holds(), || format!("{name} is not normal"))?;
                ensure(r.rank_log_concave.holds(), || format!("{name} is not rank-log concave"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} posets normal and log-concave"))
}

fn random_graded() -> &'static [Poset] {
    static POSETS: OnceLock<Vec<Poset>> = OnceLock::new();
    POSETS.get_or_init(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
        (0..200).map(|_| random_graded_poset(&mut rng, 12)).collect()
    })
}

fn oracle_equivalence() -> Result<String, String> {
    let catalog = corpus().iter().filter(|e| e.poset.len() <= 14).map(|e| (e.name.clone(), &e.poset));
    let random = random_graded().iter().enumerate().map(|(i, p)| (format!("random graded #{i}"), p));
    let mut checked = 0;
    for (name, p) in catalog.chain(random) {
        let (flow, brute) = (is_normal(p), is_normal_exhaustive(p));
        ensure(flow.as_ref().ok() == brute.as_ref().ok(), || format!("{name}: normality {flow:?} vs {brute:?}"))?;
        for j in 1..=4 {
            let flow = max_j_family(p, j).map_err(|e| e.to_string())?;
            let brute = max_j_family_bruteforce(p, j).map_err(|e| e.to_string())?;
            ensure(flow.is_valid_for(p) && flow.size == brute, || {
                format!("{name}: d_{j} = {} by flow, {brute} by enumeration", flow.size)
            })?;
        }
        checked += 1;
    }
    Ok(format!("{checked} posets, 0 disagreements"))
}

fn cover_rule() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 2);
    for i in 0..100 {
        let n = rng.gen_range(1..=6);
        let density = rng.gen_range(0.1..0.8);
        let p = random_poset(&mut rng, n, density);
        let k = rng.gen_range(1..=3);
        let mut rule = chain_poset(&p, k).unwrap().covers().to_vec();
        let mut order = covers_from_order_definition(&p, k).unwrap();
        rule.sort_unstable();
        order.sort_unstable();
        ensure(rule == order, || format!("random poset {i} with k = {k}: cover sets differ"))?;
    }
    Ok("100 posets, 0 disagreements".into())
}

fn implications() -> Result<String, String> {
    let random: Vec<Entry> = random_graded()
        .iter()
        .enumerate()
        .map(|(i, p)| Entry { name: format!("random graded #{i}"), poset: p.clone(), report: PropertyReport::analyze(p) })
        .collect();
    let mut checked = 0;
    for e in corpus().iter().chain(&random) {
        let r = &e.report;
        ensure(!r.normal.holds() || r.strongly_sperner.holds(), || format!("{} is normal but not strongly Sperner", e.name))?;
        ensure(!r.rank_log_concave.holds() || r.rank_unimodal.holds(), || {
            format!("{} is log-concave but not unimodal", e.name)
        })?;
        checked += 1;
    }
    let good: Vec<&Entry> = corpus()
        .iter()
        .filter(|e| e.poset.len() <= 12 && e.report.normal.holds() && e.report.rank_log_concave.holds())
        .collect();
    let mut products = Vec::new();
    for (i, a) in good.iter().enumerate() {
        for b in &good[i..] {
            if a.poset.len() * b.poset.len() <= 60 {
                products.push((format!("{} * {}", a.name, b.name), product(&a.poset, &b.poset)));
            }
        }
    }
    let count = products.len();
    for e in analyze_all(products) {
        ensure(e.report.normal.holds(), || format!("{} is not normal", e.name))?;
        ensure(e.report.rank_log_concave.holds(), || format!("{} is not rank-log concave", e.name))?;
    }
    Ok(format!("{checked} posets, {count} products, 0 violations"))
}

fn cli_behaviour() -> Result<String, String> {
    let out = commands::check("ex2[2]", Property::Unimodal);
    ensure(out.code == EXIT_FALSE, || format!("check exited {}", out.code))?;
    ensure(out.stdout.contains("(2,3,4)"), || format!("check printed {:?}", out.stdout))?;
    let out = commands::dot("T(1)[3]", None);
    ensure(out.code == EXIT_OK, || format!("dot exited {}", out.code))?;
    let nodes = out.stdout.matches("[label=").count();
    let edges = out.stdout.matches(" -> ").count();
    ensure(nodes == 4 && edges == 3, || format!("dot emitted {nodes} nodes and {edges} edges"))?;
    Ok("check exits 1 with (2,3,4); dot has 4 nodes, 3 edges".into())
}
