//! Acceptance run. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails or runs over its time limit.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cis::{extremal_scan, verify_theorems, ClaimStatus, VerifyCaps};
use cis_core::counting::articulation_points;
use cis_core::formulas::{closed_form_total, Measure};
use cis_core::{
    canonical_form, count_by_deletion, count_containing, count_containing_pair, count_profile,
    emit_graph6, enumerate_cis, generate, parse_graph6, AnchorQuery, BigUint, CanonicalCode,
    FamilySpec, Graph, GraphClass,
};
use rand::Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, Option<u64>, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn graph(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    Graph::from_edges(n, edges).unwrap()
}

fn cycle_edges(offset: usize, len: usize) -> Vec<(usize, usize)> {
    (0..len)
        .map(|i| (offset + i, offset + (i + 1) % len))
        .collect()
}

fn path_edges(offset: usize, len: usize) -> Vec<(usize, usize)> {
    (1..len).map(|i| (offset + i - 1, offset + i)).collect()
}

fn clique_edges(offset: usize, len: usize) -> Vec<(usize, usize)> {
    (0..len)
        .flat_map(|i| (i + 1..len).map(move |j| (offset + i, offset + j)))
        .collect()
}

fn closed_form_families() -> Check {
    let mut specs = Vec::new();
    for n in 1..=14 {
        specs.extend([
            FamilySpec::Edgeless { n },
            FamilySpec::Path { n },
            FamilySpec::Star { n },
            FamilySpec::Complete { n },
        ]);
        if n >= 3 {
            specs.extend([FamilySpec::Cycle { n }, FamilySpec::QGraph { n }]);
            specs.extend((3..=n).map(|p| FamilySpec::Tadpole { p, q: n - p }));
        }
        if n >= 4 {
            specs.push(FamilySpec::Banner { n });
        }
    }
    for spec in &specs {
        let g = spec.construct().map_err(|e| format!("{spec}: {e}"))?;
        let counted = count_profile(&g).total().clone();
        let formula = closed_form_total(spec).map_err(|e| format!("{spec}: {e}"))?;
        ensure(counted == formula, || {
            format!("{spec}: counted {counted}, closed form {formula}")
        })?;
        // the naive oracle as a third opinion
        let naive = big(common::naive_cis(&g).len() as u64);
        ensure(naive == formula, || {
            format!("{spec}: naive {naive}, closed form {formula}")
        })?;
    }
    Ok(format!("{} family members of order 1..=14", specs.len()))
}

fn paper_constants() -> Check {
    let star5 = [(0, 1), (0, 2), (0, 3), (0, 4)];
    let star6 = [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)];
    let cases: Vec<(&str, Graph, u64)> = vec![
        ("C3", graph(3, cycle_edges(0, 3)), 7),
        ("C4", graph(4, cycle_edges(0, 4)), 13),
        ("C5", graph(5, cycle_edges(0, 5)), 21),
        (
            "B5",
            graph(5, cycle_edges(0, 4).into_iter().chain([(0, 4)])),
            21,
        ),
        ("Q5", graph(5, star5.into_iter().chain([(1, 2)])), 21),
        ("Q6", graph(6, star6.into_iter().chain([(1, 2)])), 38),
        (
            "G3,2",
            graph(5, cycle_edges(0, 3).into_iter().chain([(0, 3), (3, 4)])),
            18,
        ),
    ];
    for (name, g, want) in &cases {
        let got = count_profile(g).total().clone();
        ensure(got == big(*want), || {
            format!("N({name}) = {got}, expected {want}")
        })?;
    }
    let families = [
        (FamilySpec::Cycle { n: 3 }, 7),
        (FamilySpec::Cycle { n: 4 }, 13),
        (FamilySpec::Cycle { n: 5 }, 21),
        (FamilySpec::Banner { n: 5 }, 21),
        (FamilySpec::QGraph { n: 5 }, 21),
        (FamilySpec::QGraph { n: 6 }, 38),
        (FamilySpec::Tadpole { p: 3, q: 2 }, 18),
    ];
    for (spec, want) in families {
        let got = closed_form_total(&spec).map_err(|e| e.to_string())?;
        ensure(got == big(want), || {
            format!("closed form {spec} = {got}, expected {want}")
        })?;
    }
    Ok(format!("{} constants", cases.len()))
}

fn unicyclic_sizes() -> Check {
    let want = [1, 2, 5, 13, 33, 89, 240];
    let got: Vec<usize> = (3..=9)
        .map(|n| generate(GraphClass::Unicyclic, n).map(|c| c.len()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    ensure(got == want, || format!("sizes {got:?}, expected {want:?}"))?;
    Ok(format!("{got:?}"))
}

fn theorem_suite() -> Check {
    let caps = VerifyCaps {
        all: 6,
        connected: 7,
        trees: 9,
        rooted: 8,
        unicyclic: 9,
        components_order: 7,
        components_max_r: 3,
    };
    let report = verify_theorems(&caps);
    let bad: Vec<String> = report
        .claims
        .iter()
        .filter(|c| c.status != ClaimStatus::Pass)
        .map(|c| format!("{} {:?} {:?}", c.id, c.status, c.counterexamples.first()))
        .collect();
    ensure(bad.is_empty(), || bad.join("; "))?;
    for id in [
        "connected-order-k-min",
        "connected-order-k-max",
        "unicyclic-min-total",
        "unicyclic-max-total",
        "components-min-total",
        "components-max-total",
    ] {
        ensure(report.claim(id).is_some(), || format!("claim {id} missing"))?;
    }
    ensure(report.all_passed, || "report not marked as passed".into())?;
    let checks: u64 = report.claims.iter().map(|c| c.checks).sum();
    Ok(format!("{} claims, {checks} checks", report.claims.len()))
}

fn check_oracle(g: &Graph) -> Result<(), String> {
    let n = g.order();
    let naive = common::naive_cis(g);
    let profile = count_profile(g);
    let per: Vec<BigUint> = common::naive_profile(g).into_iter().map(big).collect();
    ensure(profile.per_order() == per, || {
        format!("profile mismatch for {}", emit_graph6(g))
    })?;
    let streamed: Vec<u64> = enumerate_cis(g, &AnchorQuery::ALL)
        .map_err(|e| e.to_string())?
        .map(|s| s.bits())
        .collect();
    let unique: BTreeSet<u64> = streamed.iter().copied().collect();
    ensure(unique.len() == streamed.len(), || {
        format!("repeated set for {}", emit_graph6(g))
    })?;
    ensure(unique == naive.iter().copied().collect(), || {
        format!("stream mismatch for {}", emit_graph6(g))
    })?;
    ensure(count_by_deletion(g) == *profile.total(), || {
        format!("deletion mismatch for {}", emit_graph6(g))
    })?;
    if n >= 2 && g.is_connected() {
        let cut = articulation_points(g).len();
        ensure(*profile.of_order(n - 1) == big((n - cut) as u64), || {
            format!("N_(n-1) identity fails for {}", emit_graph6(g))
        })?;
    }
    Ok(())
}

fn oracle_equivalence() -> Check {
    let mut graphs = 0;
    for n in 1..=7 {
        for g in generate(GraphClass::All, n).map_err(|e| e.to_string())? {
            check_oracle(&g)?;
            graphs += 1;
        }
    }
    let mut rng = common::rng(0xacce);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=12);
        let p = rng.gen_range(0.05..0.95);
        check_oracle(&common::random_graph(&mut rng, n, p))?;
        graphs += 1;
    }
    Ok(format!("{graphs} graphs"))
}

fn rooted_sweep() -> Check {
    let mut rooted = 0;
    for n in 1..=8usize {
        for t in generate(GraphClass::Tree, n).map_err(|e| e.to_string())? {
            let sets = common::naive_cis(&t);
            let is_path = (0..n).all(|v| t.degree(v) <= 2);
            let code = emit_graph6(&t);
            for root in 0..n {
                rooted += 1;
                let count = count_containing(&t, root).map_err(|e| e.to_string())?;
                let naive = sets.iter().filter(|&&m| m >> root & 1 == 1).count() as u64;
                ensure(count == big(naive), || {
                    format!("{code} root {root}: {count} vs naive {naive}")
                })?;
                let star_center = t.degree(root) == n - 1;
                ensure(naive >= n as u64 && naive <= 1 << (n - 1), || {
                    format!("{code} root {root}: {naive} out of bounds")
                })?;
                ensure(
                    (naive == n as u64) == (is_path && t.degree(root) <= 1),
                    || format!("{code} root {root}: lower equality case wrong"),
                )?;
                ensure((naive == 1 << (n - 1)) == star_center, || {
                    format!("{code} root {root}: upper equality case wrong")
                })?;
                for leaf in (0..n).filter(|&l| l != root && t.degree(l) == 1) {
                    let pair = count_containing_pair(&t, root, leaf).map_err(|e| e.to_string())?;
                    let naive = sets
                        .iter()
                        .filter(|&&m| m >> root & 1 == 1 && m >> leaf & 1 == 1)
                        .count() as u64;
                    ensure(pair == big(naive), || {
                        format!("{code} root {root} leaf {leaf}: pair count mismatch")
                    })?;
                    ensure(naive <= 1 << (n - 2), || {
                        format!("{code} root {root} leaf {leaf}: {naive} over bound")
                    })?;
                    ensure((naive == 1 << (n - 2)) == star_center, || {
                        format!("{code} root {root} leaf {leaf}: equality case wrong")
                    })?;
                }
            }
        }
    }
    Ok(format!("{rooted} rooted trees"))
}

fn component_scans() -> Check {
    let mut scans = 0;
    for n in 2..=7usize {
        for r in [2usize, 3].into_iter().filter(|&r| r <= n) {
            let report = extremal_scan(GraphClass::Components(r), n, Measure::Total)
                .map_err(|e| e.to_string())?;
            let parts: Vec<usize> = (0..r).map(|i| n / r + usize::from(i < n % r)).collect();
            let min_value: u64 = parts.iter().map(|&m| (m * (m + 1) / 2) as u64).sum();
            let mut edges = Vec::new();
            let mut offset = 0;
            for &m in &parts {
                edges.extend(path_edges(offset, m));
                offset += m;
            }
            let minimizer = canonical_form(&graph(n, edges)).unwrap();
            let big_part = n - r + 1;
            let max_value = (r as u64 - 1) + (1u64 << big_part) - 1;
            let maximizer = canonical_form(&graph(n, clique_edges(r - 1, big_part))).unwrap();
            let expect = |what: &str,
                          value: &BigUint,
                          codes: &[CanonicalCode],
                          v: u64,
                          c: &CanonicalCode| {
                ensure(*value == big(v) && codes == std::slice::from_ref(c), || {
                    format!("n={n} r={r} {what}: {value} {codes:?}, expected {v} [{c}]")
                })
            };
            expect(
                "min",
                &report.min_value,
                &report.minimizers,
                min_value,
                &minimizer,
            )?;
            expect(
                "max",
                &report.max_value,
                &report.maximizers,
                max_value,
                &maximizer,
            )?;
            scans += 1;
        }
    }
    Ok(format!("{scans} scans"))
}

fn round_trip(g: &Graph) -> Result<(), String> {
    let text = emit_graph6(g);
    let back = parse_graph6(&text).map_err(|e| format!("{text}: {e}"))?;
    ensure(back == *g, || {
        format!("{text} did not parse back to the same graph")
    })?;
    ensure(emit_graph6(&back) == text, || {
        format!("{text} re-encoded differently")
    })
}

fn graph6_round_trip() -> Check {
    let mut sizes = Vec::new();
    for n in 1..=7 {
        let level = generate(GraphClass::All, n).map_err(|e| e.to_string())?;
        level.iter().try_for_each(round_trip)?;
        sizes.push(level.len());
    }
    // all graphs of order 8, as connected graphs plus each component count
    let mut eight = generate(GraphClass::Connected, 8).map_err(|e| e.to_string())?;
    for r in 2..=8 {
        eight.extend(generate(GraphClass::Components(r), 8).map_err(|e| e.to_string())?);
    }
    eight.iter().try_for_each(round_trip)?;
    sizes.push(eight.len());
    ensure(sizes == [1, 2, 4, 11, 34, 156, 1044, 12346], || {
        format!("catalog sizes {sizes:?}")
    })?;
    let mut rng = common::rng(0x6a6);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=64);
        let p = rng.gen_range(0.0..1.0);
        round_trip(&common::random_graph(&mut rng, n, p))?;
    }
    Ok(format!(
        "{} catalog graphs and 10000 random graphs",
        sizes.iter().sum::<usize>()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (
            "closed forms match enumeration",
            Some(60),
            closed_form_families,
        ),
        ("paper constants", None, paper_constants),
        ("unicyclic catalog sizes", Some(60), unicyclic_sizes),
        ("theorem suite", Some(600), theorem_suite),
        ("oracle equivalence", Some(300), oracle_equivalence),
        ("rooted-tree bounds", None, rooted_sweep),
        ("r-component extremes", None, component_scans),
        ("graph6 round trip", None, graph6_round_trip),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = match (result, limit) {
            (Ok(_), Some(secs)) if elapsed > Duration::from_secs(secs) => {
                Err(format!("took {:.1}s, limit {secs}s", elapsed.as_secs_f64()))
            }
            (r, _) => r,
        };
        match result {
            Ok(detail) => println!(
                "PASS criterion {} {name}: {detail} ({:.2}s)",
                i + 1,
                elapsed.as_secs_f64()
            ),
            Err(why) => {
                failed += 1;
                println!(
                    "FAIL criterion {} {name}: {why} ({:.2}s)",
                    i + 1,
                    elapsed.as_secs_f64()
                );
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
