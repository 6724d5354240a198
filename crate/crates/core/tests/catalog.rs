mod common;

use std::collections::{BTreeMap, BTreeSet};

use cis_core::atlas::{canonical_graph, generate_up_to};
use cis_core::{
    canonical_form, emit_graph6, generate, is_isomorphic, parse_graph6, FamilySpec, Graph,
    GraphClass,
};
use common::*;

#[test]
fn canonical_form_agrees_with_brute_force_isomorphism() {
    for n in 1..=5 {
        let graphs: Vec<Graph> = all_labeled(n).collect();
        let mut by_brute: BTreeMap<Vec<bool>, BTreeSet<String>> = BTreeMap::new();
        for g in &graphs {
            by_brute
                .entry(brute_canonical(g))
                .or_default()
                .insert(canonical_form(g).unwrap().into_string());
        }
        // each brute-force class maps to one code, and distinct classes to
        // distinct codes
        let codes: BTreeSet<&String> = by_brute.values().flat_map(|s| s.iter()).collect();
        assert!(by_brute.values().all(|s| s.len() == 1), "n={n}");
        assert_eq!(codes.len(), by_brute.len(), "n={n}");
    }
}

#[test]
fn canonical_form_is_relabeling_invariant() {
    let mut rng = rng(2024);
    for i in 0..2000 {
        let n = 1 + i % 12;
        let g = random_graph(&mut rng, n, [0.2, 0.5, 0.7][i % 3]);
        let perm = random_permutation(&mut rng, n);
        let h = g.permute(&perm);
        assert_eq!(
            canonical_form(&g).unwrap(),
            canonical_form(&h).unwrap(),
            "{g:?}"
        );
        assert!(is_isomorphic(&g, &h).unwrap());
        let c = canonical_graph(&g).unwrap();
        assert_eq!(emit_graph6(&c), canonical_form(&g).unwrap().as_str());
    }
}

#[test]
fn canonical_form_separates_random_pairs() {
    let mut rng = rng(7);
    for i in 0..400 {
        let n = 2 + i % 6;
        let g = random_graph(&mut rng, n, 0.5);
        let h = random_graph(&mut rng, n, 0.5);
        assert_eq!(
            is_isomorphic(&g, &h).unwrap(),
            brute_isomorphic(&g, &h),
            "{g:?} {h:?}"
        );
    }
}

/// Labeled graphs of the class, deduplicated by brute-force canonical form.
fn brute_classes(class: GraphClass, n: usize) -> usize {
    all_labeled(n)
        .filter(|g| class.contains(g))
        .map(|g| brute_canonical(&g))
        .collect::<BTreeSet<_>>()
        .len()
}

#[test]
fn generation_matches_filtered_labeled_graphs() {
    for n in 1..=6 {
        for class in [
            GraphClass::All,
            GraphClass::Connected,
            GraphClass::Tree,
            GraphClass::Unicyclic,
            GraphClass::Components(2),
            GraphClass::Components(3),
        ] {
            let generated = generate(class, n).unwrap();
            assert_eq!(generated.len(), brute_classes(class, n), "{class} n={n}");
        }
    }
}

#[test]
fn generation_matches_filtered_labeled_graphs_at_seven() {
    // 2^21 labeled graphs, deduplicated with the canonical form already
    // checked against brute force above.
    let mut by_class: BTreeMap<usize, BTreeSet<String>> = BTreeMap::new();
    let mut all = BTreeSet::new();
    for g in all_labeled(7) {
        let code = canonical_form(&g).unwrap().into_string();
        let r = g.connected_components().len();
        by_class.entry(r).or_default().insert(code.clone());
        all.insert(code);
    }
    let codes = |class, n| -> BTreeSet<String> {
        generate(class, n)
            .unwrap()
            .iter()
            .map(emit_graph6)
            .collect()
    };
    assert_eq!(codes(GraphClass::All, 7), all);
    for (r, set) in by_class {
        let class = if r == 1 {
            GraphClass::Connected
        } else {
            GraphClass::Components(r)
        };
        assert_eq!(codes(class, 7), set, "r={r}");
    }
}

#[test]
fn class_predicates_hold_and_no_duplicates() {
    for class in [
        GraphClass::Tree,
        GraphClass::Unicyclic,
        GraphClass::Connected,
        GraphClass::All,
    ] {
        for (i, level) in generate_up_to(class, class.cap().min(8))
            .unwrap()
            .iter()
            .enumerate()
        {
            let n = i + 1;
            let mut seen = BTreeSet::new();
            for g in level {
                assert_eq!(g.order(), n);
                assert!(class.contains(g), "{class} {g:?}");
                assert!(seen.insert(emit_graph6(g)));
            }
            let sorted: Vec<String> = level.iter().map(emit_graph6).collect();
            assert!(sorted.windows(2).all(|w| w[0] < w[1]), "sorted by code");
        }
    }
}

#[test]
fn reference_catalog_sizes() {
    let sizes = |class, n| -> Vec<usize> {
        generate_up_to(class, n)
            .unwrap()
            .iter()
            .map(Vec::len)
            .collect()
    };
    assert_eq!(
        sizes(GraphClass::Tree, 11),
        [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235]
    );
    assert_eq!(
        sizes(GraphClass::Unicyclic, 11)[2..],
        [1, 2, 5, 13, 33, 89, 240, 657, 1806]
    );
    assert_eq!(sizes(GraphClass::Connected, 7), [1, 1, 2, 6, 21, 112, 853]);
    assert_eq!(sizes(GraphClass::All, 7), [1, 2, 4, 11, 34, 156, 1044]);
}

#[test]
fn unicyclic_order_five_is_the_five_pictured_graphs() {
    let got: BTreeSet<String> = generate(GraphClass::Unicyclic, 5)
        .unwrap()
        .iter()
        .map(emit_graph6)
        .collect();
    let triangle_two_pendants =
        Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)]).unwrap();
    let want: BTreeSet<String> = [
        FamilySpec::Cycle { n: 5 }.construct().unwrap(),
        FamilySpec::Banner { n: 5 }.construct().unwrap(),
        FamilySpec::QGraph { n: 5 }.construct().unwrap(),
        FamilySpec::Tadpole { p: 3, q: 2 }.construct().unwrap(),
        triangle_two_pendants,
    ]
    .iter()
    .map(|g| canonical_form(g).unwrap().into_string())
    .collect();
    assert_eq!(got, want);
}

#[test]
fn small_catalogs() {
    assert_eq!(
        generate(GraphClass::Tree, 1).unwrap(),
        [Graph::edgeless(1).unwrap()]
    );
    assert_eq!(generate(GraphClass::Connected, 4).unwrap().len(), 6);
    for g in generate(GraphClass::Connected, 4).unwrap() {
        assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
    }
}
