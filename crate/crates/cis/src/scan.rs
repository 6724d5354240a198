//! Exhaustive extremal scans over generated catalogs.

use std::time::{Duration, Instant};

use cis_core::formulas::Measure;
use cis_core::{
    canonical_form, count_profile, generate, BigUint, CanonicalCode, CountProfile, Graph,
    GraphClass,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::report::{as_display, as_display_seq, Metadata};

/// A catalog graph with its canonical code and count profile.
#[derive(Clone, Debug)]
pub struct Profiled {
    pub graph: Graph,
    pub code: CanonicalCode,
    pub profile: CountProfile,
}

impl Profiled {
    /// Value of `measure` for this graph. Panics when `k` is outside `1..=n`.
    pub fn value(&self, measure: Measure) -> &BigUint {
        match measure {
            Measure::Total => self.profile.total(),
            Measure::Order(k) => self.profile.of_order(k),
        }
    }
}

/// Generates the catalog and counts every member on the rayon pool. The
/// result keeps the catalog order.
pub fn profile_catalog(class: GraphClass, n: usize) -> cis_core::Result<Vec<Profiled>> {
    let graphs = generate(class, n)?;
    graphs
        .into_par_iter()
        .map(|graph| {
            let code = canonical_form(&graph)?;
            let profile = count_profile(&graph);
            Ok(Profiled {
                graph,
                code,
                profile,
            })
        })
        .collect()
}

/// Minimum and maximum of one measure with every graph attaining each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extremes {
    pub min: BigUint,
    pub minimizers: Vec<CanonicalCode>,
    pub max: BigUint,
    pub maximizers: Vec<CanonicalCode>,
}

/// Partial result for a slice of the catalog; merging is associative and
/// commutative, so any split gives the same answer.
#[derive(Clone, Debug)]
struct Side {
    value: BigUint,
    codes: Vec<CanonicalCode>,
}

fn merge(a: Side, b: Side, keep_smaller: bool) -> Side {
    use std::cmp::Ordering::*;
    match (a.value.cmp(&b.value), keep_smaller) {
        (Equal, _) => {
            let mut codes = a.codes;
            codes.extend(b.codes);
            codes.sort();
            Side {
                value: a.value,
                codes,
            }
        }
        (Less, true) | (Greater, false) => a,
        _ => b,
    }
}

/// `None` for an empty catalog.
pub fn extremes(entries: &[Profiled], measure: Measure) -> Option<Extremes> {
    let leaf = |p: &Profiled| Side {
        value: p.value(measure).clone(),
        codes: vec![p.code.clone()],
    };
    let min = entries
        .par_iter()
        .map(leaf)
        .reduce_with(|a, b| merge(a, b, true))?;
    let max = entries
        .par_iter()
        .map(leaf)
        .reduce_with(|a, b| merge(a, b, false))?;
    Some(Extremes {
        min: min.value,
        minimizers: min.codes,
        max: max.value,
        maximizers: max.codes,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    #[serde(serialize_with = "as_display")]
    pub class: GraphClass,
    pub order: usize,
    #[serde(serialize_with = "as_display")]
    pub objective: Measure,
    #[serde(serialize_with = "as_display")]
    pub min_value: BigUint,
    #[serde(serialize_with = "as_display")]
    pub max_value: BigUint,
    #[serde(serialize_with = "as_display_seq")]
    pub minimizers: Vec<CanonicalCode>,
    #[serde(serialize_with = "as_display_seq")]
    pub maximizers: Vec<CanonicalCode>,
    pub graphs_scanned: usize,
    pub metadata: Metadata,
}

impl ScanReport {
    pub fn elapsed(&self) -> Duration {
        self.metadata.elapsed
    }
}

/// Exact minimum and maximum of `measure` over every `class` graph of
/// order `n`.
pub fn extremal_scan(
    class: GraphClass,
    n: usize,
    measure: Measure,
) -> cis_core::Result<ScanReport> {
    let start = Instant::now();
    if let Measure::Order(k) = measure {
        if k < 1 || k > n {
            return Err(cis_core::Error::ParameterOutOfRange(format!(
                "order_{k} needs 1 <= k <= n (n={n})"
            )));
        }
    }
    let entries = profile_catalog(class, n)?;
    let ex = extremes(&entries, measure).ok_or_else(|| {
        cis_core::Error::ParameterOutOfRange(format!("no {class} graphs of order {n}"))
    })?;
    Ok(ScanReport {
        class,
        order: n,
        objective: measure,
        min_value: ex.min,
        max_value: ex.max,
        minimizers: ex.minimizers,
        maximizers: ex.maximizers,
        graphs_scanned: entries.len(),
        metadata: Metadata::since(start),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_is_order_independent() {
        let entries = profile_catalog(GraphClass::Connected, 5).unwrap();
        let mut reversed = entries.clone();
        reversed.reverse();
        for m in [Measure::Total, Measure::Order(3)] {
            assert_eq!(extremes(&entries, m), extremes(&reversed, m));
        }
    }

    #[test]
    fn empty_catalog_is_an_error() {
        assert!(extremal_scan(GraphClass::Unicyclic, 2, Measure::Total).is_err());
        assert!(extremal_scan(GraphClass::Tree, 4, Measure::Order(5)).is_err());
        assert!(extremal_scan(GraphClass::All, 8, Measure::Total).is_err());
    }
}
