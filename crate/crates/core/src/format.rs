//! JSON documents for spaces and the persisted diagonal table.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::chain::{Chain, Tensor};
use crate::error::{Error, Result};
use crate::ring::{format_scalar, parse_scalar, Ring};
use crate::simplex::Simplex;
use crate::simplicial::{freely_add_degeneracies, DeltaComplex, SimplicialSet};
use crate::steenrod::DiagonalTable;

pub const DEFAULT_TRUNCATION: usize = 5;

fn default_truncation() -> usize {
    DEFAULT_TRUNCATION
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DocumentKind {
    /// Faces only; degeneracies are added freely.
    Delta,
    /// Faces and degeneracies, listed through the truncation.
    Simplicial,
}

/// A space as stored on disk.
///
/// `cells[m][i]` lists the face indices `d_0, …, d_m` of cell `i` in dimension `m`.
/// Delta documents may give `facets` as vertex lists instead. Simplicial documents add
/// `degeneracies[m][i]`, the indices of `s_0, …, s_m`, empty in the top dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDocument {
    pub name: String,
    pub kind: DocumentKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(default = "default_truncation")]
    pub truncation_dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basepoint: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cells: Option<Vec<Vec<Vec<usize>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub facets: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degeneracies: Option<Vec<Vec<Vec<usize>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub finite: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_labels: Option<Vec<String>>,
}

/// A validated space.
#[derive(Clone, Debug)]
pub struct LoadedSpace {
    pub name: String,
    pub kind: DocumentKind,
    /// The delta complex underlying a delta document.
    pub delta: Option<DeltaComplex>,
    /// The simplicial set itself, `𝔡(Y)` for a delta document.
    pub set: SimplicialSet,
    pub vertex_labels: Option<Vec<String>>,
}

impl ComplexDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        Ok(fs::write(path, self.to_json()? + "\n")?)
    }

    /// A delta document for an existing delta complex.
    pub fn from_delta(name: impl Into<String>, y: &DeltaComplex, truncation_dim: usize) -> Self {
        ComplexDocument {
            name: name.into(),
            kind: DocumentKind::Delta,
            description: None,
            truncation_dim,
            basepoint: None,
            cells: Some(y.face_table().to_vec()),
            facets: None,
            degeneracies: None,
            finite: None,
            vertex_labels: None,
        }
    }

    /// Validates and builds the space, optionally overriding the truncation.
    pub fn build(&self, truncation: Option<usize>) -> Result<LoadedSpace> {
        let truncation = truncation.unwrap_or(self.truncation_dim);
        let named = |e: Error| match e {
            Error::Invalid(m) if !m.starts_with(&self.name) => Error::Invalid(format!("{}: {m}", self.name)),
            other => other,
        };
        let (delta, set) = match self.kind {
            DocumentKind::Delta => {
                if self.degeneracies.is_some() {
                    return Err(Error::Format(format!("{}: delta documents carry no degeneracies", self.name)));
                }
                let y = match (&self.cells, &self.facets) {
                    (Some(cells), None) => DeltaComplex::new(cells.clone()).map_err(named)?,
                    (None, Some(facets)) => DeltaComplex::from_facets(facets).map_err(named)?.0,
                    _ => return Err(Error::Format(format!("{}: give exactly one of `cells` and `facets`", self.name))),
                };
                let set = freely_add_degeneracies(&y, truncation, self.name.clone()).with_basepoint(self.basepoint)?;
                (Some(y), set)
            }
            DocumentKind::Simplicial => {
                let (Some(cells), Some(degeneracies)) = (&self.cells, &self.degeneracies) else {
                    return Err(Error::Format(format!("{}: simplicial documents need `cells` and `degeneracies`", self.name)));
                };
                let listed = cells.len().saturating_sub(1);
                if truncation > listed {
                    return Err(Error::Precondition(format!("{}: cells are listed only through dimension {listed}", self.name)));
                }
                let cut = |t: &Vec<Vec<Vec<usize>>>| -> Vec<Vec<Vec<usize>>> {
                    let mut t: Vec<_> = t[..=truncation].to_vec();
                    t[truncation].iter_mut().for_each(Vec::clear);
                    t
                };
                let faces = cells[..=truncation].to_vec();
                let degs = if truncation == listed { degeneracies.clone() } else { cut(degeneracies) };
                let probe = SimplicialSet::new(self.name.clone(), faces.clone(), degs.clone(), self.basepoint, false)?;
                let finite = self.finite.unwrap_or_else(|| probe.nondegenerate(truncation).next().is_none());
                (None, SimplicialSet::new(self.name.clone(), faces, degs, self.basepoint, finite)?)
            }
        };
        if let Some(labels) = &self.vertex_labels {
            if labels.len() != set.count(0) {
                return Err(Error::Format(format!("{}: {} vertex labels for {} vertices", self.name, labels.len(), set.count(0))));
            }
        }
        Ok(LoadedSpace { name: self.name.clone(), kind: self.kind, delta, set, vertex_labels: self.vertex_labels.clone() })
    }
}

/// Bumped whenever the meaning of stored entries changes; older files are ignored.
pub const CACHE_SCHEMA_VERSION: u32 = 1;

pub const CACHE_FILE_NAME: &str = "xi-table.json";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct CacheEntry {
    n: usize,
    k: usize,
    terms: Vec<(Simplex, Simplex, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct CacheFile {
    schema_version: u32,
    entries: Vec<CacheEntry>,
}

pub fn table_to_json(table: &DiagonalTable) -> Result<String> {
    let entries = table
        .snapshot()
        .into_iter()
        .map(|((n, k), c)| CacheEntry { n, k, terms: c.iter().map(|(Tensor(a, b), x)| (a.clone(), b.clone(), format_scalar(x))).collect() })
        .collect();
    Ok(serde_json::to_string(&CacheFile { schema_version: CACHE_SCHEMA_VERSION, entries })?)
}

/// Reads a table; a file from another schema version yields an empty table.
pub fn table_from_json(text: &str) -> Result<DiagonalTable> {
    let file: CacheFile = serde_json::from_str(text)?;
    let table = DiagonalTable::new();
    if file.schema_version != CACHE_SCHEMA_VERSION {
        return Ok(table);
    }
    for e in file.entries {
        let mut c = Chain::zero(Ring::Integers);
        for (a, b, x) in e.terms {
            if !a.is_face_of_standard(e.k) || !b.is_face_of_standard(e.k) {
                return Err(Error::Format(format!("cache entry ({}, {}) has a term outside Δ^{}", e.n, e.k, e.k)));
            }
            c.add_term(Tensor(a, b), parse_scalar(&x)?);
        }
        table.insert(e.n, e.k, c);
    }
    Ok(table)
}

/// Loads `dir/xi-table.json` if present, else an empty table.
pub fn load_table(dir: &Path) -> Result<DiagonalTable> {
    let path = dir.join(CACHE_FILE_NAME);
    if !path.exists() {
        return Ok(DiagonalTable::new());
    }
    table_from_json(&fs::read_to_string(path)?)
}

pub fn save_table(table: &DiagonalTable, dir: &Path) -> Result<()> {
    fs::create_dir_all(dir)?;
    Ok(fs::write(dir.join(CACHE_FILE_NAME), table_to_json(table)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corrupted_face_table_names_the_cell() {
        let doc = ComplexDocument::from_json(r#"{"name":"bad","kind":"delta","cells":[[[],[]],[[1,0]],[[0,0,0]]]}"#).unwrap();
        let err = doc.build(None).unwrap_err().to_string();
        assert!(err.contains("bad"), "{err}");
        assert!(err.contains("dimension 2"), "{err}");
    }

    #[test]
    fn table_round_trip() {
        let t = DiagonalTable::new();
        t.get(2, 3);
        let back = table_from_json(&table_to_json(&t).unwrap()).unwrap();
        assert_eq!(back.snapshot(), t.snapshot());
    }

    #[test]
    fn stale_schema_is_ignored() {
        let back = table_from_json(r#"{"schema_version":0,"entries":[{"n":0,"k":0,"terms":[[[0],[0],"1"]]}]}"#).unwrap();
        assert!(back.is_empty());
    }
}
