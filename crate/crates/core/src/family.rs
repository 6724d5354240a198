//! Named graph families with fixed labelings.
//!
//! Labelings are part of the public contract:
//!
//! | family | labeling |
//! |---|---|
//! | path `P_n` | `0-1-..-(n-1)`, vertex 0 is an end |
//! | cycle `C_n` | `0-1-..-(n-1)-0` |
//! | star `S_n` | center 0, leaves `1..n` |
//! | tadpole `G_{p,q}` | cycle `0..p`, tail `0-p-(p+1)-..-(p+q-1)`; 0 is the junction |
//! | banner `B_n` | 4-cycle `0-1-2-3-0`, pendants `4..n` on hub 0 |
//! | `Q_n` | star with center 0 plus the edge `1-2` |
//! | `K_n` minus `l` matching edges | removes `(0,1), (2,3), .., (2l-2, 2l-1)` |

use alloc::format;
use alloc::string::String;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilySpec {
    Edgeless {
        n: usize,
    },
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Star {
        n: usize,
    },
    Complete {
        n: usize,
    },
    /// Cycle `C_p` with a pendant path of `q` further vertices.
    Tadpole {
        p: usize,
        q: usize,
    },
    /// `C_4` with `n - 4` pendant edges at one vertex.
    Banner {
        n: usize,
    },
    /// Star `S_n` with one edge between two leaves.
    QGraph {
        n: usize,
    },
    /// `K_n` with `l` pairwise disjoint edges removed.
    CompleteMinusMatching {
        n: usize,
        l: usize,
    },
}

/// Family tags, as used on the command line and in reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyTag {
    Edgeless,
    Path,
    Cycle,
    Star,
    Complete,
    Tadpole,
    Banner,
    QGraph,
    CompleteMinusMatching,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 9] = [
        FamilyTag::Edgeless,
        FamilyTag::Path,
        FamilyTag::Cycle,
        FamilyTag::Star,
        FamilyTag::Complete,
        FamilyTag::Tadpole,
        FamilyTag::Banner,
        FamilyTag::QGraph,
        FamilyTag::CompleteMinusMatching,
    ];

    pub const fn name(self) -> &'static str {
        match self {
            FamilyTag::Edgeless => "edgeless",
            FamilyTag::Path => "path",
            FamilyTag::Cycle => "cycle",
            FamilyTag::Star => "star",
            FamilyTag::Complete => "complete",
            FamilyTag::Tadpole => "tadpole",
            FamilyTag::Banner => "banner",
            FamilyTag::QGraph => "q_graph",
            FamilyTag::CompleteMinusMatching => "complete_minus_matching",
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::ParameterOutOfRange(format!("unknown family {s:?}")))
    }
}

impl FamilySpec {
    pub const fn tag(&self) -> FamilyTag {
        match self {
            FamilySpec::Edgeless { .. } => FamilyTag::Edgeless,
            FamilySpec::Path { .. } => FamilyTag::Path,
            FamilySpec::Cycle { .. } => FamilyTag::Cycle,
            FamilySpec::Star { .. } => FamilyTag::Star,
            FamilySpec::Complete { .. } => FamilyTag::Complete,
            FamilySpec::Tadpole { .. } => FamilyTag::Tadpole,
            FamilySpec::Banner { .. } => FamilyTag::Banner,
            FamilySpec::QGraph { .. } => FamilyTag::QGraph,
            FamilySpec::CompleteMinusMatching { .. } => FamilyTag::CompleteMinusMatching,
        }
    }

    /// Builds a spec from a tag and the loose parameters the CLI collects.
    /// `n` is used by every family except the tadpole, which takes `p` and
    /// `q`; the matching size `l` defaults to 0.
    pub fn from_parts(
        tag: FamilyTag,
        n: Option<usize>,
        p: Option<usize>,
        q: Option<usize>,
        l: Option<usize>,
    ) -> Result<Self> {
        let need = |v: Option<usize>, name: &str| {
            v.ok_or_else(|| Error::ParameterOutOfRange(format!("{tag} needs parameter {name}")))
        };
        let spec = match tag {
            FamilyTag::Edgeless => FamilySpec::Edgeless { n: need(n, "n")? },
            FamilyTag::Path => FamilySpec::Path { n: need(n, "n")? },
            FamilyTag::Cycle => FamilySpec::Cycle { n: need(n, "n")? },
            FamilyTag::Star => FamilySpec::Star { n: need(n, "n")? },
            FamilyTag::Complete => FamilySpec::Complete { n: need(n, "n")? },
            FamilyTag::Tadpole => FamilySpec::Tadpole {
                p: need(p, "p")?,
                q: need(q, "q")?,
            },
            FamilyTag::Banner => FamilySpec::Banner { n: need(n, "n")? },
            FamilyTag::QGraph => FamilySpec::QGraph { n: need(n, "n")? },
            FamilyTag::CompleteMinusMatching => FamilySpec::CompleteMinusMatching {
                n: need(n, "n")?,
                l: l.unwrap_or(0),
            },
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Number of vertices of the family member.
    pub const fn order(&self) -> usize {
        match *self {
            FamilySpec::Edgeless { n }
            | FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Star { n }
            | FamilySpec::Complete { n }
            | FamilySpec::Banner { n }
            | FamilySpec::QGraph { n }
            | FamilySpec::CompleteMinusMatching { n, .. } => n,
            FamilySpec::Tadpole { p, q } => p + q,
        }
    }

    /// Checks the parameter ranges of the family. Does not check the order
    /// against [`crate::MAX_ORDER`]; closed forms are defined beyond it.
    pub fn validate(&self) -> Result<()> {
        let fail = |why: String| Err(Error::ParameterOutOfRange(why));
        match *self {
            FamilySpec::Edgeless { n }
            | FamilySpec::Path { n }
            | FamilySpec::Star { n }
            | FamilySpec::Complete { n }
                if n < 1 =>
            {
                fail(format!("{} requires n >= 1 (got {n})", self.tag()))
            }
            FamilySpec::Cycle { n } | FamilySpec::QGraph { n } if n < 3 => {
                fail(format!("{} requires n >= 3 (got {n})", self.tag()))
            }
            FamilySpec::Banner { n } if n < 4 => fail(format!("banner requires n >= 4 (got {n})")),
            FamilySpec::Tadpole { p, .. } if p < 3 => {
                fail(format!("tadpole requires p >= 3 (got {p})"))
            }
            FamilySpec::CompleteMinusMatching { n, .. } if n < 3 => {
                fail(format!("complete_minus_matching requires n >= 3 (got {n})"))
            }
            FamilySpec::CompleteMinusMatching { n, l } if l > n / 2 => fail(format!(
                "complete_minus_matching requires l <= n/2 (got n={n}, l={l})"
            )),
            _ => Ok(()),
        }
    }

    /// The family member with the documented labeling.
    pub fn construct(&self) -> Result<Graph> {
        self.validate()?;
        let n = self.order();
        let mut b = GraphBuilder::new(n)?;
        match *self {
            FamilySpec::Edgeless { .. } => {}
            FamilySpec::Path { .. } => {
                for v in 1..n {
                    b.add_edge(v - 1, v)?;
                }
            }
            FamilySpec::Cycle { .. } => {
                for v in 0..n {
                    b.add_edge(v, (v + 1) % n)?;
                }
            }
            FamilySpec::Star { .. } => {
                for v in 1..n {
                    b.add_edge(0, v)?;
                }
            }
            FamilySpec::Complete { .. } => {
                for u in 0..n {
                    for v in u + 1..n {
                        b.add_edge(u, v)?;
                    }
                }
            }
            FamilySpec::Tadpole { p, q } => {
                for v in 0..p {
                    b.add_edge(v, (v + 1) % p)?;
                }
                let mut prev = 0;
                for v in p..p + q {
                    b.add_edge(prev, v)?;
                    prev = v;
                }
            }
            FamilySpec::Banner { .. } => {
                for v in 0..4 {
                    b.add_edge(v, (v + 1) % 4)?;
                }
                for v in 4..n {
                    b.add_edge(0, v)?;
                }
            }
            FamilySpec::QGraph { .. } => {
                for v in 1..n {
                    b.add_edge(0, v)?;
                }
                b.add_edge(1, 2)?;
            }
            FamilySpec::CompleteMinusMatching { l, .. } => {
                for u in 0..n {
                    for v in u + 1..n {
                        if !(v == u + 1 && u % 2 == 0 && u < 2 * l) {
                            b.add_edge(u, v)?;
                        }
                    }
                }
            }
        }
        Ok(b.build())
    }
}

impl fmt::Display for FamilySpec {
    /// `path(6)`, `tadpole(3,2)`, `complete_minus_matching(8,2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Tadpole { p, q } => write!(f, "tadpole({p},{q})"),
            FamilySpec::CompleteMinusMatching { n, l } => {
                write!(f, "complete_minus_matching({n},{l})")
            }
            _ => write!(f, "{}({})", self.tag(), self.order()),
        }
    }
}
