//! Reading graphs from files: one graph6 string or edge list per line.
//! Blank lines and lines starting with `#` are skipped.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use cis_core::{
    canonical_form, generate, parse_edge_list, parse_graph6, CanonicalCode, Graph, GraphClass,
};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: {source}")]
    Parse {
        path: String,
        line: usize,
        #[source]
        source: cis_core::Error,
    },
    #[error("{path}: expected one graph, found {count}")]
    NotSingle { path: String, count: usize },
}

/// Parses one line; a `;` marks the edge-list form, anything else is graph6.
pub fn parse_line(line: &str) -> cis_core::Result<Graph> {
    if line.contains(';') {
        parse_edge_list(line)
    } else {
        parse_graph6(line)
    }
}

pub fn parse_graphs(text: &str, path: &str) -> Result<Vec<Graph>, InputError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(parse_line(line).map_err(|source| InputError::Parse {
            path: path.to_string(),
            line: i + 1,
            source,
        })?);
    }
    Ok(out)
}

pub fn read_graphs(path: &Path) -> Result<Vec<Graph>, InputError> {
    let shown = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| InputError::Io {
        path: shown.clone(),
        source,
    })?;
    parse_graphs(&text, &shown)
}

/// Exactly one graph from the file.
pub fn read_single_graph(path: &Path) -> Result<Graph, InputError> {
    let mut graphs = read_graphs(path)?;
    match graphs.len() {
        1 => Ok(graphs.remove(0)),
        count => Err(InputError::NotSingle {
            path: path.display().to_string(),
            count,
        }),
    }
}

/// Differences between the generated catalog and an external list.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CatalogDiff {
    /// In the generated catalog but absent from the external list.
    pub missing: Vec<CanonicalCode>,
    /// In the external list but not generated; includes graphs outside the class.
    pub extra: Vec<CanonicalCode>,
    /// External entries isomorphic to an earlier entry.
    pub duplicates: Vec<CanonicalCode>,
}

impl CatalogDiff {
    pub fn is_empty(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty() && self.duplicates.is_empty()
    }
}

/// Compares `generate(class, n)` with externally produced graphs, up to
/// isomorphism.
pub fn crosscheck_catalog(
    class: GraphClass,
    n: usize,
    external: &[Graph],
) -> cis_core::Result<CatalogDiff> {
    let ours: BTreeSet<CanonicalCode> = generate(class, n)?
        .iter()
        .map(canonical_form)
        .collect::<cis_core::Result<_>>()?;
    let mut theirs = BTreeSet::new();
    let mut diff = CatalogDiff::default();
    for g in external {
        let code = canonical_form(g)?;
        if !theirs.insert(code.clone()) {
            diff.duplicates.push(code);
        }
    }
    diff.missing = ours.difference(&theirs).cloned().collect();
    diff.extra = theirs.difference(&ours).cloned().collect();
    Ok(diff)
}
