//! Closed-form counts for the named families and the extremal bounds, as
//! exact integer arithmetic with no graph construction.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_integer::binomial as big_binomial;
use num_traits::One;

use crate::atlas::GraphClass;
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::graph::{disjoint_union, Graph};

/// `C(n, k)` exactly; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    big_binomial(BigUint::from(n), BigUint::from(k))
}

fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

fn big(n: usize) -> BigUint {
    BigUint::from(n)
}

/// Total number of connected induced subgraphs of a family member.
pub fn closed_form_total(spec: &FamilySpec) -> Result<BigUint> {
    spec.validate()?;
    Ok(match *spec {
        FamilySpec::Edgeless { n } => big(n),
        FamilySpec::Path { n } => binomial(n + 1, 2),
        FamilySpec::Cycle { n } => big(n * n - n + 1),
        FamilySpec::Star { n } => big(n - 1) + pow2(n - 1),
        FamilySpec::Complete { n } => pow2(n) - 1u32,
        FamilySpec::Tadpole { p, q } => {
            // (q+1)(p^2-p+2) is even since p^2 - p is.
            binomial(p, 2) + binomial(q + 1, 2) + big((q + 1) * (p * p - p + 2) / 2)
        }
        FamilySpec::Banner { n } => big(n + 2) + big(7) * pow2(n - 4),
        FamilySpec::QGraph { n } => big(n) + pow2(n - 1),
        FamilySpec::CompleteMinusMatching { .. } => {
            return Err(Error::NoClosedForm(spec.tag().name()))
        }
    })
}

/// The bound families, each with its parameter shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundSpec {
    /// Fewest connected induced subgraphs over all graphs of order `n`.
    MinTotalGraph {
        n: usize,
    },
    MaxTotalGraph {
        n: usize,
    },
    /// Fewest `k`-vertex connected induced subgraphs over connected graphs.
    MinNkConnected {
        n: usize,
        k: usize,
    },
    /// Most `k`-vertex connected induced subgraphs over connected graphs,
    /// `3 <= k <= n`.
    MaxNkConnected {
        n: usize,
        k: usize,
    },
    MinTotalUnicyclic {
        n: usize,
    },
    /// Exact maximum over unicyclic graphs, including the small orders
    /// where the maximizer is not `Q_n`.
    MaxTotalUnicyclic {
        n: usize,
    },
    /// Fewest root-containing subtrees of a rooted tree of order `n`.
    MinRootedSubtrees {
        n: usize,
    },
    MaxRootedSubtrees {
        n: usize,
    },
    /// Most subtrees containing both the root and a given leaf.
    MaxRootedLeafSubtrees {
        n: usize,
    },
    MinTotalRComponents {
        n: usize,
        r: usize,
    },
    MaxTotalRComponents {
        n: usize,
        r: usize,
    },
}

/// Bound identifiers without parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundId {
    MinTotalGraph,
    MaxTotalGraph,
    MinNkConnected,
    MaxNkConnected,
    MinTotalUnicyclic,
    MaxTotalUnicyclic,
    MinRootedSubtrees,
    MaxRootedSubtrees,
    MaxRootedLeafSubtrees,
    MinTotalRComponents,
    MaxTotalRComponents,
}

impl BoundId {
    pub const ALL: [BoundId; 11] = [
        BoundId::MinTotalGraph,
        BoundId::MaxTotalGraph,
        BoundId::MinNkConnected,
        BoundId::MaxNkConnected,
        BoundId::MinTotalUnicyclic,
        BoundId::MaxTotalUnicyclic,
        BoundId::MinRootedSubtrees,
        BoundId::MaxRootedSubtrees,
        BoundId::MaxRootedLeafSubtrees,
        BoundId::MinTotalRComponents,
        BoundId::MaxTotalRComponents,
    ];

    pub const fn name(self) -> &'static str {
        match self {
            BoundId::MinTotalGraph => "min_total_graph",
            BoundId::MaxTotalGraph => "max_total_graph",
            BoundId::MinNkConnected => "min_Nk_connected",
            BoundId::MaxNkConnected => "max_Nk_connected",
            BoundId::MinTotalUnicyclic => "min_total_unicyclic",
            BoundId::MaxTotalUnicyclic => "max_total_unicyclic",
            BoundId::MinRootedSubtrees => "min_rooted_subtrees",
            BoundId::MaxRootedSubtrees => "max_rooted_subtrees",
            BoundId::MaxRootedLeafSubtrees => "max_rooted_leaf_subtrees",
            BoundId::MinTotalRComponents => "min_total_r_components",
            BoundId::MaxTotalRComponents => "max_total_r_components",
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    /// Accepts the canonical names; `nk` in lower case is accepted too.
    fn from_str(s: &str) -> Result<Self> {
        BoundId::ALL
            .into_iter()
            .find(|b| b.name() == s || b.name().to_ascii_lowercase() == s)
            .ok_or_else(|| Error::ParameterOutOfRange(format!("unknown bound {s:?}")))
    }
}

impl BoundSpec {
    pub fn id(&self) -> BoundId {
        match self {
            BoundSpec::MinTotalGraph { .. } => BoundId::MinTotalGraph,
            BoundSpec::MaxTotalGraph { .. } => BoundId::MaxTotalGraph,
            BoundSpec::MinNkConnected { .. } => BoundId::MinNkConnected,
            BoundSpec::MaxNkConnected { .. } => BoundId::MaxNkConnected,
            BoundSpec::MinTotalUnicyclic { .. } => BoundId::MinTotalUnicyclic,
            BoundSpec::MaxTotalUnicyclic { .. } => BoundId::MaxTotalUnicyclic,
            BoundSpec::MinRootedSubtrees { .. } => BoundId::MinRootedSubtrees,
            BoundSpec::MaxRootedSubtrees { .. } => BoundId::MaxRootedSubtrees,
            BoundSpec::MaxRootedLeafSubtrees { .. } => BoundId::MaxRootedLeafSubtrees,
            BoundSpec::MinTotalRComponents { .. } => BoundId::MinTotalRComponents,
            BoundSpec::MaxTotalRComponents { .. } => BoundId::MaxTotalRComponents,
        }
    }

    /// Assembles a spec from an id and loose parameters (`k` or `r` as the
    /// bound requires).
    pub fn from_parts(id: BoundId, n: usize, k: Option<usize>, r: Option<usize>) -> Result<Self> {
        let need = |v: Option<usize>, name: &str| {
            v.ok_or_else(|| Error::ParameterOutOfRange(format!("{id} needs parameter {name}")))
        };
        let spec = match id {
            BoundId::MinTotalGraph => BoundSpec::MinTotalGraph { n },
            BoundId::MaxTotalGraph => BoundSpec::MaxTotalGraph { n },
            BoundId::MinNkConnected => BoundSpec::MinNkConnected {
                n,
                k: need(k, "k")?,
            },
            BoundId::MaxNkConnected => BoundSpec::MaxNkConnected {
                n,
                k: need(k, "k")?,
            },
            BoundId::MinTotalUnicyclic => BoundSpec::MinTotalUnicyclic { n },
            BoundId::MaxTotalUnicyclic => BoundSpec::MaxTotalUnicyclic { n },
            BoundId::MinRootedSubtrees => BoundSpec::MinRootedSubtrees { n },
            BoundId::MaxRootedSubtrees => BoundSpec::MaxRootedSubtrees { n },
            BoundId::MaxRootedLeafSubtrees => BoundSpec::MaxRootedLeafSubtrees { n },
            BoundId::MinTotalRComponents => BoundSpec::MinTotalRComponents {
                n,
                r: need(r, "r")?,
            },
            BoundId::MaxTotalRComponents => BoundSpec::MaxTotalRComponents {
                n,
                r: need(r, "r")?,
            },
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |why: String| Err(Error::ParameterOutOfRange(why));
        match *self {
            BoundSpec::MinTotalGraph { n }
            | BoundSpec::MaxTotalGraph { n }
            | BoundSpec::MinRootedSubtrees { n }
            | BoundSpec::MaxRootedSubtrees { n }
                if n < 1 =>
            {
                fail(format!("{} requires n >= 1", self.id()))
            }
            BoundSpec::MaxRootedLeafSubtrees { n } if n < 2 => {
                fail(format!("{} requires n >= 2", self.id()))
            }
            BoundSpec::MinTotalUnicyclic { n } | BoundSpec::MaxTotalUnicyclic { n } if n < 3 => {
                fail(format!("{} requires n >= 3", self.id()))
            }
            BoundSpec::MinNkConnected { n, k } if k < 1 || k > n => fail(format!(
                "{} requires 1 <= k <= n (got n={n}, k={k})",
                self.id()
            )),
            BoundSpec::MaxNkConnected { n, k } if k < 3 || k > n => fail(format!(
                "{} requires 3 <= k <= n (got n={n}, k={k})",
                self.id()
            )),
            BoundSpec::MinTotalRComponents { n, r } | BoundSpec::MaxTotalRComponents { n, r }
                if r < 1 || r > n =>
            {
                fail(format!(
                    "{} requires 1 <= r <= n (got n={n}, r={r})",
                    self.id()
                ))
            }
            _ => Ok(()),
        }
    }
}

/// Value of the bound. For `max_total_unicyclic` this is `n + 2^(n-1)`
/// except at `n = 4`, where the cycle's 13 beats `Q_4`.
pub fn bound_value(b: &BoundSpec) -> Result<BigUint> {
    b.validate()?;
    Ok(match *b {
        BoundSpec::MinTotalGraph { n } => big(n),
        BoundSpec::MaxTotalGraph { n } => pow2(n) - 1u32,
        BoundSpec::MinNkConnected { n, k } => big(n - k + 1),
        BoundSpec::MaxNkConnected { n, k } => binomial(n, k),
        BoundSpec::MinTotalUnicyclic { n } => big((n * n + 3 * n - 4) / 2),
        BoundSpec::MaxTotalUnicyclic { n } => match n {
            4 => closed_form_total(&FamilySpec::Cycle { n: 4 })?,
            _ => big(n) + pow2(n - 1),
        },
        BoundSpec::MinRootedSubtrees { n } => big(n),
        BoundSpec::MaxRootedSubtrees { n } => pow2(n - 1),
        BoundSpec::MaxRootedLeafSubtrees { n } => pow2(n - 2),
        BoundSpec::MinTotalRComponents { n, r } => near_equal_parts(n, r)
            .into_iter()
            .map(|part| binomial(part + 1, 2))
            .sum(),
        BoundSpec::MaxTotalRComponents { n, r } => big(r - 1) + pow2(n - r + 1) - 1u32,
    })
}

/// `n` split into `r` parts differing by at most one, larger parts first:
/// `ceil(n/r)` repeated `n mod r` times, then `floor(n/r)`.
pub fn near_equal_parts(n: usize, r: usize) -> Vec<usize> {
    assert!(r >= 1, "at least one part");
    let (q, rem) = (n / r, n % r);
    (0..r).map(|i| if i < rem { q + 1 } else { q }).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Measure {
    /// `N(G)`.
    Total,
    /// `N_k(G)`.
    Order(usize),
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Measure::Total => f.write_str("total"),
            Measure::Order(k) => write!(f, "order_{k}"),
        }
    }
}

impl FromStr for Measure {
    type Err = Error;

    /// `total` or `order_<k>`.
    fn from_str(s: &str) -> Result<Self> {
        if s == "total" {
            return Ok(Measure::Total);
        }
        s.strip_prefix("order_")
            .and_then(|k| k.parse().ok())
            .map(Measure::Order)
            .ok_or_else(|| Error::ParameterOutOfRange(format!("unknown measure {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Extremum {
    Min,
    Max,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Objective {
    pub measure: Measure,
    pub extremum: Extremum,
}

impl Objective {
    pub const TOTAL_MIN: Objective = Objective {
        measure: Measure::Total,
        extremum: Extremum::Min,
    };
    pub const TOTAL_MAX: Objective = Objective {
        measure: Measure::Total,
        extremum: Extremum::Max,
    };

    pub fn order_min(k: usize) -> Self {
        Objective {
            measure: Measure::Order(k),
            extremum: Extremum::Min,
        }
    }

    pub fn order_max(k: usize) -> Self {
        Objective {
            measure: Measure::Order(k),
            extremum: Extremum::Max,
        }
    }
}

impl fmt::Display for Objective {
    /// `total_min`, `order_3_max`, ...
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ext = match self.extremum {
            Extremum::Min => "min",
            Extremum::Max => "max",
        };
        write!(f, "{}_{ext}", self.measure)
    }
}

/// A predicted extremal graph: a single family member or a disjoint union
/// of family members.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Extremizer {
    Family(FamilySpec),
    Union(Vec<FamilySpec>),
}

impl Extremizer {
    pub fn graph(&self) -> Result<Graph> {
        match self {
            Extremizer::Family(spec) => spec.construct(),
            Extremizer::Union(parts) => {
                let graphs = parts
                    .iter()
                    .map(FamilySpec::construct)
                    .collect::<Result<Vec<_>>>()?;
                disjoint_union(&graphs)
            }
        }
    }
}

impl fmt::Display for Extremizer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extremizer::Family(spec) => write!(f, "{spec}"),
            Extremizer::Union(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

/// The complete set of extremal graphs for `(class, n, objective)` where
/// it is known. Members may be isomorphic to each other at small `n` (for
/// example `P_3` and `S_3`); compare by canonical form.
pub fn expected_extremizers(
    class: GraphClass,
    n: usize,
    objective: Objective,
) -> Result<Vec<Extremizer>> {
    use Extremum::{Max, Min};
    use Measure::{Order, Total};
    let fam = |s: FamilySpec| alloc::vec![Extremizer::Family(s)];
    let uncharacterized = || {
        Err(Error::Uncharacterized(format!(
            "{objective} over {class} graphs of order {n}"
        )))
    };
    if n < 1 {
        return Err(Error::ParameterOutOfRange(
            "order must be at least 1".into(),
        ));
    }
    match class {
        GraphClass::All => match (objective.measure, objective.extremum) {
            (Total, Min) => Ok(fam(FamilySpec::Edgeless { n })),
            (Total, Max) => Ok(fam(FamilySpec::Complete { n })),
            _ => uncharacterized(),
        },
        GraphClass::Tree => match (objective.measure, objective.extremum) {
            (Total, Min) => Ok(fam(FamilySpec::Path { n })),
            (Total, Max) => Ok(fam(FamilySpec::Star { n })),
            (Order(k), Min) if 2 < k && k < n => Ok(fam(FamilySpec::Path { n })),
            _ => uncharacterized(),
        },
        GraphClass::Connected => match (objective.measure, objective.extremum) {
            (Total, Min) => Ok(fam(FamilySpec::Path { n })),
            (Total, Max) => Ok(fam(FamilySpec::Complete { n })),
            (Order(k), Min) if 2 < k && k < n => Ok(fam(FamilySpec::Path { n })),
            // N_3 = C(n,3) forces every triple to span two edges, so the
            // complement is a matching.
            (Order(3), Max) if n >= 3 => Ok((0..=n / 2)
                .map(|l| Extremizer::Family(FamilySpec::CompleteMinusMatching { n, l }))
                .collect()),
            _ => uncharacterized(),
        },
        GraphClass::Unicyclic => {
            if n < 3 {
                return Err(Error::ParameterOutOfRange(format!(
                    "unicyclic graphs need n >= 3 (got {n})"
                )));
            }
            match (objective.measure, objective.extremum) {
                (Total, Min) => Ok(fam(FamilySpec::Tadpole { p: 3, q: n - 3 })),
                (Total, Max) => Ok(match n {
                    3 | 4 => fam(FamilySpec::Cycle { n }),
                    5 => alloc::vec![
                        Extremizer::Family(FamilySpec::Cycle { n: 5 }),
                        Extremizer::Family(FamilySpec::Banner { n: 5 }),
                        Extremizer::Family(FamilySpec::QGraph { n: 5 }),
                    ],
                    _ => fam(FamilySpec::QGraph { n }),
                }),
                _ => uncharacterized(),
            }
        }
        GraphClass::Components(r) => {
            if r < 1 || r > n {
                return Err(Error::ParameterOutOfRange(format!(
                    "component count r={r} outside 1..={n}"
                )));
            }
            match (objective.measure, objective.extremum) {
                (Total, Min) => Ok(alloc::vec![Extremizer::Union(
                    near_equal_parts(n, r)
                        .into_iter()
                        .map(|m| FamilySpec::Path { n: m })
                        .collect()
                )]),
                (Total, Max) => {
                    let mut parts = Vec::new();
                    if r > 1 {
                        parts.push(FamilySpec::Edgeless { n: r - 1 });
                    }
                    parts.push(FamilySpec::Complete { n: n - r + 1 });
                    Ok(alloc::vec![Extremizer::Union(parts)])
                }
                _ => uncharacterized(),
            }
        }
    }
}
