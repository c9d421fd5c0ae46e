//! The shipped test spaces, compiled into the crate.

use crate::error::{Error, Result};
use crate::format::{ComplexDocument, LoadedSpace};
use crate::simplicial::{freely_add_degeneracies, DeltaComplex, SimplicialSet};

macro_rules! corpus_file {
    ($name:literal) => {
        ($name, include_str!(concat!("../corpus/", $name, ".json")))
    };
}

pub const FILES: &[(&str, &str)] = &[
    corpus_file!("boundary_delta3"),
    corpus_file!("circle3"),
    corpus_file!("torus7"),
    corpus_file!("rp2_6"),
    corpus_file!("rp2_cross"),
    corpus_file!("klein9"),
    corpus_file!("rp4_cross"),
    corpus_file!("circle1"),
    corpus_file!("torus1"),
    corpus_file!("klein1"),
    corpus_file!("rp2_one_vertex"),
    corpus_file!("sphere2_min"),
];

/// Entries that are slow at the default truncation.
pub const SLOW: &[&str] = &["rp4_cross"];

/// One-vertex spaces with a basepoint, for the pointed constructions.
pub const REDUCED: &[&str] = &["circle1", "torus1", "klein1", "rp2_one_vertex"];

/// A shipped simplicial set that is not degeneracy-free.
pub const COUNTEREXAMPLE: &str = "sphere2_min";

pub fn names() -> impl Iterator<Item = &'static str> {
    FILES.iter().map(|(n, _)| *n)
}

pub fn document(name: &str) -> Result<ComplexDocument> {
    let (_, text) = FILES.iter().find(|(n, _)| *n == name).ok_or_else(|| Error::Invalid(format!("no corpus entry `{name}`")))?;
    ComplexDocument::from_json(text)
}

pub fn load(name: &str, truncation: Option<usize>) -> Result<LoadedSpace> {
    document(name)?.build(truncation)
}

/// `𝔡(Δ^k)` through `truncation`.
pub fn standard_simplex(k: usize, truncation: usize) -> SimplicialSet {
    freely_add_degeneracies(&DeltaComplex::standard_simplex(k), truncation, format!("Δ^{k}"))
}

pub fn point(truncation: usize) -> SimplicialSet {
    freely_add_degeneracies(&DeltaComplex::point(), truncation, "point").with_basepoint(Some(0)).expect("the point has a vertex")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_loads() {
        for name in names() {
            let t = if SLOW.contains(&name) { Some(4) } else { None };
            let s = load(name, t.or(if name == COUNTEREXAMPLE { Some(3) } else { None })).unwrap();
            assert_eq!(s.name, name);
        }
    }

    #[test]
    fn reduced_entries_are_reduced() {
        for name in REDUCED {
            let s = load(name, Some(3)).unwrap().set;
            assert!(s.is_reduced() && s.basepoint() == Some(0), "{name}");
        }
    }
}
