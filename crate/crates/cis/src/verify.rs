//! Verification harness for the extremal claims. Each claim sweeps complete catalogs and
//! reports pass, fail with counterexamples, or skipped when its cap is out
//! of reach.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use cis_core::counting::{articulation_points, non_cut_vertex_count};
use cis_core::formulas::{
    bound_value, closed_form_total, expected_extremizers, BoundSpec, Extremizer, Measure, Objective,
};
use cis_core::{
    canonical_form, count_containing, count_containing_pair, rooted_subtree_count, BigUint,
    CanonicalCode, FamilySpec, Graph, GraphClass,
};
use serde::Serialize;

use crate::report::Metadata;
use crate::scan::{extremes, profile_catalog, Profiled};

/// Unicyclic graphs per order, starting at order 3.
pub const UNICYCLIC_COUNTS: [usize; 9] = [1, 2, 5, 13, 33, 89, 240, 657, 1806];

/// Largest order swept per claim family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyCaps {
    pub all: usize,
    pub connected: usize,
    pub trees: usize,
    pub rooted: usize,
    pub unicyclic: usize,
    pub components_order: usize,
    pub components_max_r: usize,
}

impl Default for VerifyCaps {
    fn default() -> Self {
        VerifyCaps {
            all: 7,
            connected: 8,
            trees: 10,
            rooted: 9,
            unicyclic: 11,
            components_order: 8,
            components_max_r: 3,
        }
    }
}

impl VerifyCaps {
    /// Names and values of caps that exceed the catalog limits.
    pub fn over_limit(&self) -> Vec<(&'static str, usize, usize)> {
        [
            ("all", self.all, GraphClass::All.cap()),
            ("connected", self.connected, GraphClass::Connected.cap()),
            ("trees", self.trees, GraphClass::Tree.cap()),
            ("rooted", self.rooted, GraphClass::Tree.cap()),
            ("unicyclic", self.unicyclic, GraphClass::Unicyclic.cap()),
            (
                "components_order",
                self.components_order,
                GraphClass::Components(1).cap(),
            ),
        ]
        .into_iter()
        .filter(|&(_, cap, limit)| cap > limit)
        .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Pass,
    Fail,
    Skipped,
}

impl ClaimStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ClaimStatus::Pass => "pass",
            ClaimStatus::Fail => "fail",
            ClaimStatus::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub params: BTreeMap<&'static str, usize>,
    pub codes: Vec<String>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimResult {
    pub id: &'static str,
    pub statement: &'static str,
    pub sweep: String,
    pub checks: u64,
    pub status: ClaimStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skip_reason: Option<String>,
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub all_passed: bool,
    pub caps: VerifyCaps,
    pub claims: Vec<ClaimResult>,
    pub metadata: Metadata,
}

impl VerificationReport {
    pub fn claim(&self, id: &str) -> Option<&ClaimResult> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClaimResult> {
        self.claims.iter().filter(|c| c.status != ClaimStatus::Pass)
    }
}

/// Profiled catalogs, built once per `(class, order)` and shared by claims.
#[derive(Default)]
struct Catalogs {
    levels: BTreeMap<(GraphClass, usize), Vec<Profiled>>,
}

impl Catalogs {
    fn get(&mut self, class: GraphClass, n: usize) -> Result<&[Profiled], String> {
        match self.levels.entry((class, n)) {
            Entry::Occupied(e) => Ok(e.into_mut()),
            Entry::Vacant(e) => {
                let level =
                    profile_catalog(class, n).map_err(|e| format!("catalog {class} n={n}: {e}"))?;
                Ok(e.insert(level))
            }
        }
    }
}

type Params<'a> = &'a [(&'static str, usize)];

struct Claim {
    result: ClaimResult,
}

impl Claim {
    /// A claim over `class` graphs of orders `lo..=cap`.
    fn start(
        id: &'static str,
        statement: &'static str,
        class: GraphClass,
        lo: usize,
        cap: usize,
    ) -> Self {
        let mut claim = Claim::with_sweep(id, statement, format!("{class} n={lo}..={cap}"));
        claim.skip_unless_in_range(class, lo, cap);
        claim
    }

    fn with_sweep(id: &'static str, statement: &'static str, sweep: String) -> Self {
        Claim {
            result: ClaimResult {
                id,
                statement,
                sweep,
                checks: 0,
                status: ClaimStatus::Pass,
                skip_reason: None,
                counterexamples: Vec::new(),
            },
        }
    }

    fn skip_unless_in_range(&mut self, class: GraphClass, lo: usize, cap: usize) {
        let limit = class.cap();
        if cap > limit {
            self.result.skip_reason = Some(format!(
                "cap {cap} exceeds the {class} catalog limit {limit}"
            ));
        } else if cap < lo {
            self.result.skip_reason = Some(format!("empty sweep: cap {cap} is below order {lo}"));
        }
    }

    fn active(&self) -> bool {
        self.result.skip_reason.is_none()
    }

    fn fail(&mut self, params: Params, codes: Vec<String>, detail: String) {
        self.result.counterexamples.push(Counterexample {
            params: params.iter().copied().collect(),
            codes,
            detail,
        });
    }

    fn check(
        &mut self,
        ok: bool,
        params: Params,
        codes: impl FnOnce() -> Vec<String>,
        detail: impl FnOnce() -> String,
    ) {
        self.result.checks += 1;
        if !ok {
            self.fail(params, codes(), detail());
        }
    }

    fn catalog<'c>(
        &mut self,
        cats: &'c mut Catalogs,
        class: GraphClass,
        n: usize,
    ) -> Option<&'c [Profiled]> {
        match cats.get(class, n) {
            Ok(level) => Some(level),
            Err(e) => {
                self.fail(&[("n", n)], Vec::new(), e);
                None
            }
        }
    }

    fn value(
        &mut self,
        params: Params,
        what: &str,
        found: &BigUint,
        want: &BigUint,
        codes: &[CanonicalCode],
    ) {
        self.check(
            found == want,
            params,
            || strings(codes),
            || format!("{what} is {found}, expected {want}"),
        );
    }

    /// Exact set equality of canonical codes against the predicted
    /// extremizers.
    fn set(
        &mut self,
        params: Params,
        what: &str,
        found: &[CanonicalCode],
        expected: cis_core::Result<Vec<Extremizer>>,
    ) {
        let expected = match expected.and_then(|e| codes_of(&e)) {
            Ok(e) => e,
            Err(e) => {
                self.result.checks += 1;
                self.fail(
                    params,
                    strings(found),
                    format!("no prediction for {what}: {e}"),
                );
                return;
            }
        };
        let found: BTreeSet<CanonicalCode> = found.iter().cloned().collect();
        self.check(
            found == expected,
            params,
            || {
                found
                    .symmetric_difference(&expected)
                    .map(ToString::to_string)
                    .collect()
            },
            || {
                format!(
                    "{what} {:?}, expected {:?}",
                    strings_of(&found),
                    strings_of(&expected)
                )
            },
        );
    }

    fn finish(mut self) -> ClaimResult {
        self.result.status = if self.result.skip_reason.is_some() {
            ClaimStatus::Skipped
        } else if self.result.counterexamples.is_empty() {
            ClaimStatus::Pass
        } else {
            ClaimStatus::Fail
        };
        self.result
    }
}

fn strings(codes: &[CanonicalCode]) -> Vec<String> {
    codes.iter().map(ToString::to_string).collect()
}

fn strings_of(codes: &BTreeSet<CanonicalCode>) -> Vec<String> {
    codes.iter().map(ToString::to_string).collect()
}

fn codes_of(extremizers: &[Extremizer]) -> cis_core::Result<BTreeSet<CanonicalCode>> {
    extremizers
        .iter()
        .map(|e| canonical_form(&e.graph()?))
        .collect()
}

fn bound(b: BoundSpec) -> BigUint {
    bound_value(&b).expect("sweeps stay inside bound ranges")
}

fn closed(spec: FamilySpec) -> BigUint {
    closed_form_total(&spec).expect("sweeps stay inside family ranges")
}

fn graph_total_bounds(cats: &mut Catalogs, caps: &VerifyCaps) -> ClaimResult {
    let mut c = Claim::start(
        "graph-total-bounds",
        "a graph of order n has between n and 2^n - 1 connected induced subgraphs; only E_n and K_n attain the bounds",
        GraphClass::All,
        1,
        caps.all,
    );
    if c.active() {
        for n in 1..=caps.all {
            let Some(level) = c.catalog(cats, GraphClass::All, n) else {
                continue;
            };
            let ex = extremes(level, Measure::Total).expect("nonempty catalog");
            let p = &[("n", n)];
            c.value(
                p,
                "minimum",
                &ex.min,
                &bound(BoundSpec::MinTotalGraph { n }),
                &ex.minimizers,
            );
            c.set(
                p,
                "minimizers",
                &ex.minimizers,
                expected_extremizers(GraphClass::All, n, Objective::TOTAL_MIN),
            );
            c.value(
                p,
                "maximum",
                &ex.max,
                &bound(BoundSpec::MaxTotalGraph { n }),
                &ex.maximizers,
            );
            c.set(
                p,
                "maximizers",
                &ex.maximizers,
                expected_extremizers(GraphClass::All, n, Objective::TOTAL_MAX),
            );
        }
    }
    c.finish()
}

fn tree_total_extremes(cats: &mut Catalogs, caps: &VerifyCaps) -> ClaimResult {
    let mut c = Claim::start(
        "tree-total-extremes",
        "among trees of order n the path has the fewest subtrees and the star the most, uniquely",
        GraphClass::Tree,
        1,
        caps.trees,
    );
    if c.active() {
        for n in 1..=caps.trees {
            let Some(level) = c.catalog(cats, GraphClass::Tree, n) else {
                continue;
            };
            let ex = extremes(level, Measure::Total).expect("nonempty catalog");
            let p = &[("n", n)];
            c.value(
                p,
                "minimum",
                &ex.min,
                &closed(FamilySpec::Path { n }),
                &ex.minimizers,
            );
            c.set(
                p,
                "minimizers",
                &ex.minimizers,
                expected_extremizers(GraphClass::Tree, n, Objective::TOTAL_MIN),
            );
            c.value(
                p,
                "maximum",
                &ex.max,
                &closed(FamilySpec::Star { n }),
                &ex.maximizers,
            );
            c.set(
                p,
                "maximizers",
                &ex.maximizers,
                expected_extremizers(GraphClass::Tree, n, Objective::TOTAL_MAX),
            );
        }
    }
    c.finish()
}

fn tree_order_k_min(cats: &mut Catalogs, caps: &VerifyCaps) -> ClaimResult {
    let mut c = Claim::start(
        "tree-order-k-min",
        "for 2 < k < n the path uniquely minimizes the number of k-vertex subtrees among trees of order n",
        GraphClass::Tree,
        4,
        caps.trees,
    );
    if c.active() {
        for n in 4..=caps.trees {
            let Some(level) = c.catalog(cats, GraphClass::Tree, n) else {
                continue;
            };
            for k in 3..n {
                let ex = extremes(level, Measure::Order(k)).expect("nonempty catalog");
                let p = &[("n", n), ("k", k)];
                c.value(
                    p,
                    "minimum",
                    &ex.min,
                    &bound(BoundSpec::MinNkConnected { n, k }),
                    &ex.minimizers,
                );
                c.set(
                    p,
                    "minimizers",
                    &ex.minimizers,
                    expected_extremizers(GraphClass::Tree, n, Objective::order_min(k)),
                );
            }
        }
    }
    c.finish()
}

fn connected_order_k_min(cats: &mut Catalogs, caps: &VerifyCaps) -> ClaimResult {
    let mut c = Claim::start(
        "connected-order-k-min",
        "a connected graph of order n has at least n - k + 1 connected induced subgraphs of order k, and for 2 < k < n only the path attains it",
        GraphClass::Connected,
        1,
        caps.connected,
    );
    if c.active() {
        for n in 1..=caps.connected {
            let Some(level) = c.catalog(cats, GraphClass::Connected, n) else {
                continue;
            };
            for k in 1..=n {
                let ex = extremes(level, Measure::Order(k)).expect("nonempty catalog");
                let p = &[("n", n), ("k", k)];
                c.value(
                    p,
                    "minimum",
                    &ex.min,
                    &bound(BoundSpec::MinNkConnected { n, k }),
                    &ex.minimizers,
                );
                if 2 < k && k < n {
                    let expected =
                        expected_extremizers(GraphClass::Connected, n, Objective::order_min(k));
                    c.set(p, "minimizers", &ex.minimizers, expected);
                }
            }
        }
    }
    c.finish()
}

fn connected_total_extremes(cats: &mut Catalogs, caps: &VerifyCaps) -> ClaimResult {
    let mut c = Claim::start(
        "connected-total-extremes",
        "among connected graphs of order n the path uniquely minimizes the total count at C(n+1, 2) and K_n uniquely maximizes it",
        GraphClass::Connected,
        1,
        caps.connected,
    );
    if c.active() {
        let mut previous: Option<BigUint> = None;
        for n in 1..=caps.connected {
            let Some(level) = c.catalog(cats, GraphClass::Connected, n) else {
                continue;
            };
            let ex = extremes(level, Measure::Total).expect("nonempty catalog");
            let p = &[("n", n)];
            let objective = |o| expected_extremizers(GraphClass::Connected, n, o);
            c.value(
                p,
                "minimum",
                &ex.min,
                &closed(FamilySpec::Path { n }),
                &ex.minimizers,
            );
            c.set(
                p,
                "minimizers",
                &ex.minimizers,
                objective(Objective::TOTAL_MIN),
            );
            c.value(
                p,
                "maximum",
                &ex.max,
                &closed(FamilySpec::Complete { n }),
                &ex.maximizers,
            );
            c.set(
                p,
                "maximizers",
                &ex.maximizers,
                objective(Objective::TOTAL_MAX),
            );
            if let Some(prev) = previous.take() {
                let min = ex.min.clone();
                c.check(prev <= min, p, Vec::new, || {
                    format!("minimum fell from {prev} to {min}")
                });
            }
            previous = Some(ex.min);
        }
    }
    c.finish()
}

fn connected_order_k_max(cats: &mut Catalogs, caps: &VerifyCaps) -> ClaimResult {
    let mut c = Claim::start(
        "connected-order-k-max",
        "for 3 <= k <= n a connected graph of order n has at most C(n, k) connected induced subgraphs of order k, attained by K_n minus any matching; for k = 3 these are the only maximizers",
        GraphClass::Connected,
        3,
        caps.connected,
    );
    if c.active() {
        for n in 3..=caps.connected {
            let Some(level) = c.catalog(cats, GraphClass::Connected, n) else {
                continue;
            };
            let matchings: Vec<Extremizer> = (0..=n / 2)
                .map(|l| Extremizer::Family(FamilySpec::CompleteMinusMatching { n, l }))
                .collect();
            let matching_codes = codes_of(&matchings).expect("small family members canonicalize");
            for k in 3..=n {
                let ex = extremes(level, Measure::Order(k)).expect("nonempty catalog");
                let p = &[("n", n), ("k", k)];
                c.value(
                    p,
                    "maximum",
                    &ex.max,
                    &bound(BoundSpec::MaxNkConnected { n, k }),
                    &ex.maximizers,
                );
                let found: BTreeSet<&CanonicalCode> = ex.maximizers.iter().collect();
                let missing: Vec<String> = matching_codes
                    .iter()
                    .filter(|m| !found.contains(m))
                    .map(ToString::to_string)
                    .collect();
                let ok = missing.is_empty();
                c.check(
                    ok,
                    p,
                    || missing,
                    || "K_n minus a matching is not a maximizer".to_string(),
                );
                if k == 3 {
                    let expected =
                        expected_extremizers(GraphClass::Connected, n, Objective::order_max(3));
                    c.set(p, "maximizers", &ex.maximizers, expected);
                }
            }
        }
    }
    c.finish()
}

fn non_cut_vertex_identity(cats: &mut Catalogs, caps: &VerifyCaps) -> ClaimResult {
    let mut c = Claim::start(
        "non-cut-vertex-identity",
        "in a connected graph of order n, the connected induced subgraphs of order n - 1 correspond to the non-cut vertices",
        GraphClass::Connected,
        2,
        caps.connected,
    );
    if c.active() {
        for n in 2..=caps.connected {
            let Some(level) = c.catalog(cats, GraphClass::Connected, n) else {
                continue;
            };
            for entry in level {
                let cut = articulation_points(&entry.graph).len();
                let want = BigUint::from(n - cut);
                let got = entry.profile.of_order(n - 1);
                let p = &[("n", n)];
                let codes = || vec![entry.code.to_string()];
                c.check(got == &want, p, codes, || {
                    format!("N_(n-1) = {got}, n - cut vertices = {want}")
                });
                let direct = non_cut_vertex_count(&entry.graph).map(BigUint::from);
                c.check(direct.as_ref() == Ok(&want), p, codes, || {
                    format!("non-cut count {direct:?}, expected {want}")
                });
            }
        }
    }
    c.finish()
}

fn unicyclic_catalog_sizes(cats: &mut Catalogs, caps: &VerifyCaps) -> ClaimResult {
    let mut c = Claim::start(
        "unicyclic-catalog-sizes",
        "the number of unicyclic graphs of order 3, 4, 5, ... is 1, 2, 5, 13, 33, 89, 240, 657, 1806",
        GraphClass::Unicyclic,
        3,
        caps.unicyclic,
    );
    if c.active() {
        for n in 3..=caps.unicyclic {
            let Some(level) = c.catalog(cats, GraphClass::Unicyclic, n) else {
                continue;
            };
            let (got, want) = (level.len(), UNICYCLIC_COUNTS[n - 3]);
            c.check(got == want, &[("n", n)], Vec::new, || {
                format!("{got} graphs, expected {want}")
            });
        }
    }
    c.finish()
}

fn unicyclic_total(cats: &mut Catalogs, caps: &VerifyCaps, max: bool) -> ClaimResult {
    let mut c = if max {
        Claim::start(
            "unicyclic-max-total",
            "a unicyclic graph of order n > 5 has at most n + 2^(n-1) connected induced subgraphs with equality only for Q_n; the maximizers are C_4 at n = 4 and C_5, B_5, Q_5 at n = 5",
            GraphClass::Unicyclic,
            3,
            caps.unicyclic,
        )
    } else {
        Claim::start(
            "unicyclic-min-total",
            "a unicyclic graph of order n has at least (n^2 + 3n - 4) / 2 connected induced subgraphs with equality only for the tadpole G_{3,n-3}",
            GraphClass::Unicyclic,
            3,
            caps.unicyclic,
        )
    };
    if c.active() {
        for n in 3..=caps.unicyclic {
            let Some(level) = c.catalog(cats, GraphClass::Unicyclic, n) else {
                continue;
            };
            let ex = extremes(level, Measure::Total).expect("nonempty catalog");
            let p = &[("n", n)];
            if max {
                c.value(
                    p,
                    "maximum",
                    &ex.max,
                    &bound(BoundSpec::MaxTotalUnicyclic { n }),
                    &ex.maximizers,
                );
                let expected = expected_extremizers(GraphClass::Unicyclic, n, Objective::TOTAL_MAX);
                c.set(p, "maximizers", &ex.maximizers, expected);
            } else {
                c.value(
                    p,
                    "minimum",
                    &ex.min,
                    &bound(BoundSpec::MinTotalUnicyclic { n }),
                    &ex.minimizers,
                );
                let expected = expected_extremizers(GraphClass::Unicyclic, n, Objective::TOTAL_MIN);
                c.set(p, "minimizers", &ex.minimizers, expected);
            }
        }
    }
    c.finish()
}

fn is_path(t: &Graph) -> bool {
    (0..t.order()).all(|v| t.degree(v) <= 2)
}

#[derive(Clone, Copy)]
enum RootedKind {
    Min,
    Max,
    MaxLeaf,
}

fn rooted(cats: &mut Catalogs, caps: &VerifyCaps, kind: RootedKind) -> ClaimResult {
    let (id, statement, lo) = match kind {
        RootedKind::Min => (
            "rooted-min-subtrees",
            "a rooted tree of order n has at least n subtrees containing the root, with equality only for a path rooted at an end",
            1,
        ),
        RootedKind::Max => (
            "rooted-max-subtrees",
            "a rooted tree of order n has at most 2^(n-1) subtrees containing the root, with equality only for a star rooted at its center",
            1,
        ),
        RootedKind::MaxLeaf => (
            "rooted-max-leaf-subtrees",
            "for a leaf l other than the root, at most 2^(n-2) subtrees contain both, with equality only for a star rooted at its center",
            2,
        ),
    };
    let mut c = Claim::start(id, statement, GraphClass::Tree, lo, caps.rooted);
    c.result.sweep = format!("rooted trees n={lo}..={}, every root and leaf", caps.rooted);
    if !c.active() {
        return c.finish();
    }
    for n in lo..=caps.rooted {
        let Some(level) = c.catalog(cats, GraphClass::Tree, n) else {
            continue;
        };
        let mut attained: Option<BigUint> = None;
        for entry in level {
            let t = &entry.graph;
            let codes = || vec![entry.code.to_string()];
            for root in 0..n {
                let p = &[("n", n), ("root", root)];
                let star_center = t.degree(root) + 1 == n;
                let values: Vec<(BigUint, Option<usize>)> = match kind {
                    RootedKind::Min | RootedKind::Max => {
                        let count = count_containing(t, root).expect("root in range");
                        if let RootedKind::Min = kind {
                            let dp = rooted_subtree_count(t, root);
                            c.check(dp.as_ref() == Ok(&count), p, codes, || {
                                format!("subtree recursion gives {dp:?}, enumeration {count}")
                            });
                        }
                        vec![(count, None)]
                    }
                    RootedKind::MaxLeaf => t
                        .leaves()
                        .iter()
                        .filter(|&l| l != root)
                        .map(|l| {
                            (
                                count_containing_pair(t, root, l).expect("distinct vertices"),
                                Some(l),
                            )
                        })
                        .collect(),
                };
                for (value, leaf) in values {
                    let (limit, extremal, predicted, holds) = match kind {
                        RootedKind::Min => {
                            let b = bound(BoundSpec::MinRootedSubtrees { n });
                            (
                                b.clone(),
                                value == b,
                                is_path(t) && t.degree(root) <= 1,
                                value >= b,
                            )
                        }
                        RootedKind::Max => {
                            let b = bound(BoundSpec::MaxRootedSubtrees { n });
                            (b.clone(), value == b, star_center, value <= b)
                        }
                        RootedKind::MaxLeaf => {
                            let b = bound(BoundSpec::MaxRootedLeafSubtrees { n });
                            (b.clone(), value == b, star_center, value <= b)
                        }
                    };
                    let leaf_param: Vec<(&'static str, usize)> =
                        p.iter().copied().chain(leaf.map(|l| ("leaf", l))).collect();
                    c.check(holds, &leaf_param, codes, || {
                        format!("count {value} violates the bound {limit}")
                    });
                    c.check(extremal == predicted, &leaf_param, codes, || {
                        format!("count {value}, bound {limit}: equality {extremal}, predicted {predicted}")
                    });
                    let better = match (&attained, kind) {
                        (None, _) => true,
                        (Some(a), RootedKind::Min) => value < *a,
                        (Some(a), _) => value > *a,
                    };
                    if better {
                        attained = Some(value);
                    }
                }
            }
        }
        let want = match kind {
            RootedKind::Min => bound(BoundSpec::MinRootedSubtrees { n }),
            RootedKind::Max => bound(BoundSpec::MaxRootedSubtrees { n }),
            RootedKind::MaxLeaf => bound(BoundSpec::MaxRootedLeafSubtrees { n }),
        };
        c.check(
            attained.as_ref() == Some(&want),
            &[("n", n)],
            Vec::new,
            || format!("extreme over all rooted trees is {attained:?}, bound {want}"),
        );
    }
    c.finish()
}

fn components(cats: &mut Catalogs, caps: &VerifyCaps, max: bool) -> ClaimResult {
    let (id, statement) = if max {
        (
            "components-max-total",
            "among graphs of order n with r components, r - 1 isolated vertices plus K_(n-r+1) uniquely maximize the total count",
        )
    } else {
        (
            "components-min-total",
            "among graphs of order n with r components, r paths of near-equal orders uniquely minimize the total count",
        )
    };
    let (cap_n, cap_r) = (caps.components_order, caps.components_max_r);
    let mut c = Claim::with_sweep(
        id,
        statement,
        format!("components_r n=1..={cap_n}, r=1..={cap_r}"),
    );
    c.skip_unless_in_range(GraphClass::Components(1), 1, cap_n);
    if cap_r < 1 && c.active() {
        c.result.skip_reason = Some("empty sweep: no component count".to_string());
    }
    if c.active() {
        for n in 1..=cap_n {
            for r in 1..=cap_r.min(n) {
                let class = GraphClass::Components(r);
                let Some(level) = c.catalog(cats, class, n) else {
                    continue;
                };
                let ex = extremes(level, Measure::Total).expect("nonempty catalog");
                let p = &[("n", n), ("r", r)];
                if max {
                    c.value(
                        p,
                        "maximum",
                        &ex.max,
                        &bound(BoundSpec::MaxTotalRComponents { n, r }),
                        &ex.maximizers,
                    );
                    c.set(
                        p,
                        "maximizers",
                        &ex.maximizers,
                        expected_extremizers(class, n, Objective::TOTAL_MAX),
                    );
                } else {
                    c.value(
                        p,
                        "minimum",
                        &ex.min,
                        &bound(BoundSpec::MinTotalRComponents { n, r }),
                        &ex.minimizers,
                    );
                    c.set(
                        p,
                        "minimizers",
                        &ex.minimizers,
                        expected_extremizers(class, n, Objective::TOTAL_MIN),
                    );
                }
            }
        }
    }
    c.finish()
}

/// Runs every claim. Never errors: problems show up as failed or skipped
/// claims.
pub fn verify_theorems(caps: &VerifyCaps) -> VerificationReport {
    let start = Instant::now();
    let mut cats = Catalogs::default();
    let claims = vec![
        graph_total_bounds(&mut cats, caps),
        tree_total_extremes(&mut cats, caps),
        tree_order_k_min(&mut cats, caps),
        connected_order_k_min(&mut cats, caps),
        connected_total_extremes(&mut cats, caps),
        connected_order_k_max(&mut cats, caps),
        non_cut_vertex_identity(&mut cats, caps),
        unicyclic_catalog_sizes(&mut cats, caps),
        unicyclic_total(&mut cats, caps, false),
        unicyclic_total(&mut cats, caps, true),
        rooted(&mut cats, caps, RootedKind::Min),
        rooted(&mut cats, caps, RootedKind::Max),
        rooted(&mut cats, caps, RootedKind::MaxLeaf),
        components(&mut cats, caps, false),
        components(&mut cats, caps, true),
    ];
    let all_passed = claims.iter().all(|c| c.status == ClaimStatus::Pass);
    VerificationReport {
        all_passed,
        caps: *caps,
        claims,
        metadata: Metadata::since(start),
    }
}
