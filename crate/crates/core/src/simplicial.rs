//! Delta complexes, truncated simplicial sets and the passage between them.
//!
//! A [`SimplicialSet`] stores every cell up to its truncation, degenerate or not, with
//! explicit face and degeneracy tables. [`freely_add_degeneracies`] builds one from a
//! [`DeltaComplex`]; [`forget_degeneracies`] goes the other way.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::chain::{Chain, Graded};
use crate::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::simplex::Simplex;

/// A surjection `[m] → [n]` in canonical form `s_{i_1} ⋯ s_{i_j}` with `i_1 > ⋯ > i_j`.
///
/// The indices are exactly the positions `p` where the surjection repeats a value.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Surjection {
    source: usize,
    word: Vec<usize>,
}

impl Surjection {
    pub fn identity(n: usize) -> Self {
        Surjection { source: n, word: Vec::new() }
    }

    pub fn from_word(source: usize, word: Vec<usize>) -> Result<Self> {
        if word.windows(2).any(|w| w[0] <= w[1]) || word.iter().any(|&i| i >= source) || word.len() > source {
            return Err(Error::Invalid(format!("{word:?} is not a canonical degeneracy word on [{source}]")));
        }
        Ok(Surjection { source, word })
    }

    /// From the list of values of a monotone surjection `[m] → [n]`.
    pub fn from_map(map: &[usize]) -> Result<Self> {
        if map.first() != Some(&0) || map.windows(2).any(|w| w[1] != w[0] && w[1] != w[0] + 1) {
            return Err(Error::Invalid(format!("{map:?} is not a monotone surjection")));
        }
        let word = (0..map.len() - 1).rev().filter(|&p| map[p] == map[p + 1]).collect();
        Ok(Surjection { source: map.len() - 1, word })
    }

    pub fn to_map(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.source + 1);
        let mut v = 0;
        out.push(0);
        for p in 0..self.source {
            if !self.word.contains(&p) {
                v += 1;
            }
            out.push(v);
        }
        out
    }

    pub fn source_dim(&self) -> usize {
        self.source
    }

    pub fn target_dim(&self) -> usize {
        self.source - self.word.len()
    }

    /// Degeneracy indices, outermost first.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// All surjections `[m] → [n]`.
    pub fn all(m: usize, n: usize) -> Vec<Surjection> {
        if n > m {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        fn rec(start: usize, m: usize, left: usize, chosen: &mut Vec<usize>, out: &mut Vec<Surjection>) {
            if left == 0 {
                out.push(Surjection { source: m, word: chosen.iter().rev().copied().collect() });
                return;
            }
            for p in start..m {
                chosen.push(p);
                rec(p + 1, m, left - 1, chosen, out);
                chosen.pop();
            }
        }
        rec(0, m, m - n, &mut chosen, &mut out);
        out
    }
}

impl fmt::Display for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "id");
        }
        for i in &self.word {
            write!(f, "s{i}")?;
        }
        Ok(())
    }
}

/// Factors a monotone map, given by its values, as a surjection onto its image
/// followed by the inclusion of the image.
pub fn epi_mono(map: &[usize]) -> (Surjection, Vec<usize>) {
    let mut image: Vec<usize> = map.to_vec();
    image.dedup();
    let word = (0..map.len() - 1).rev().filter(|&p| map[p] == map[p + 1]).collect();
    (Surjection { source: map.len() - 1, word }, image)
}

/// A cell of a presented space: dimension and index within that dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CellId {
    pub dim: usize,
    pub index: usize,
}

impl CellId {
    pub fn new(dim: usize, index: usize) -> Self {
        CellId { dim, index }
    }
}

impl Graded for CellId {
    fn degree(&self) -> usize {
        self.dim
    }
}

impl fmt::Display for CellId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c{}.{}", self.dim, self.index)
    }
}

/// Face and degeneracy operators on some kind of cell.
pub trait Simplicial: Sync {
    type Cell: Clone + Ord + Hash + fmt::Debug + Graded + Send + Sync;

    fn face(&self, x: &Self::Cell, i: usize) -> Self::Cell;

    /// `None` when the result would lie beyond the known truncation.
    fn degeneracy(&self, x: &Self::Cell, i: usize) -> Option<Self::Cell>;

    fn is_degenerate(&self, x: &Self::Cell) -> bool {
        let n = x.degree();
        (0..n).any(|i| self.degeneracy(&self.face(x, i), i).as_ref() == Some(x))
    }

    /// `θ^*(x)` for the monotone map `θ` with values `vertices` in `[dim x]`.
    fn restrict(&self, x: &Self::Cell, vertices: &[usize]) -> Option<Self::Cell> {
        let (surj, image) = epi_mono(vertices);
        let mut y = x.clone();
        for j in (0..=x.degree()).rev() {
            if image.binary_search(&j).is_err() {
                y = self.face(&y, j);
            }
        }
        for &i in surj.word().iter().rev() {
            y = self.degeneracy(&y, i)?;
        }
        Some(y)
    }
}

/// Standard simplices and their degeneracies, as vertex lists.
#[derive(Clone, Copy, Debug, Default)]
pub struct VertexLists;

impl Simplicial for VertexLists {
    type Cell = Simplex;

    fn face(&self, x: &Simplex, i: usize) -> Simplex {
        x.face(i)
    }

    fn degeneracy(&self, x: &Simplex, i: usize) -> Option<Simplex> {
        Some(x.degeneracy(i))
    }

    fn is_degenerate(&self, x: &Simplex) -> bool {
        x.is_degenerate()
    }

    fn restrict(&self, x: &Simplex, vertices: &[usize]) -> Option<Simplex> {
        Some(Simplex(vertices.iter().map(|&v| x.0[v]).collect()))
    }
}

/// A finite semi-simplicial set: cells in each dimension with face indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaComplex {
    faces: Vec<Vec<Vec<usize>>>,
}

impl DeltaComplex {
    /// Validates face counts, index ranges and `d_i d_j = d_{j-1} d_i` for `i < j`.
    pub fn new(faces: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        for (m, level) in faces.iter().enumerate() {
            for (idx, fs) in level.iter().enumerate() {
                let expected = if m == 0 { 0 } else { m + 1 };
                if fs.len() != expected {
                    return Err(Error::Invalid(format!("dimension {m}, cell {idx}: expected {expected} faces, found {}", fs.len())));
                }
                if m > 0 && fs.iter().any(|&f| f >= faces[m - 1].len()) {
                    return Err(Error::Invalid(format!("dimension {m}, cell {idx}: face index out of range")));
                }
            }
        }
        for m in 2..faces.len() {
            for (idx, fs) in faces[m].iter().enumerate() {
                for j in 1..=m {
                    for i in 0..j {
                        let lhs = faces[m - 1][fs[j]][i];
                        let rhs = faces[m - 1][fs[i]][j - 1];
                        if lhs != rhs {
                            return Err(Error::Invalid(format!(
                                "dimension {m}, cell {idx}: d_{i} d_{j} and d_{} d_{i} disagree",
                                j - 1
                            )));
                        }
                    }
                }
            }
        }
        let mut faces = faces;
        while faces.last().is_some_and(Vec::is_empty) {
            faces.pop();
        }
        Ok(DeltaComplex { faces })
    }

    /// The complex of all faces of the given vertex sets, each ordered increasingly.
    /// Returns the complex and the vertex list of every cell.
    pub fn from_facets(facets: &[Vec<u32>]) -> Result<(Self, Vec<Vec<Simplex>>)> {
        let mut by_dim: Vec<BTreeSet<Vec<u32>>> = Vec::new();
        for facet in facets {
            let mut f = facet.clone();
            f.sort_unstable();
            f.dedup();
            if f.len() != facet.len() || f.is_empty() {
                return Err(Error::Invalid(format!("facet {facet:?} repeats a vertex or is empty")));
            }
            let k = f.len();
            for mask in 1u64..(1u64 << k) {
                let sub: Vec<u32> = (0..k).filter(|b| mask >> b & 1 == 1).map(|b| f[b]).collect();
                let d = sub.len() - 1;
                if by_dim.len() <= d {
                    by_dim.resize_with(d + 1, BTreeSet::new);
                }
                by_dim[d].insert(sub);
            }
        }
        let lists: Vec<Vec<Simplex>> = by_dim.iter().map(|s| s.iter().cloned().map(Simplex).collect()).collect();
        let position: Vec<BTreeMap<&Simplex, usize>> =
            lists.iter().map(|l| l.iter().enumerate().map(|(i, s)| (s, i)).collect()).collect();
        let faces = lists
            .iter()
            .enumerate()
            .map(|(m, l)| {
                l.iter()
                    .map(|s| if m == 0 { Vec::new() } else { (0..=m).map(|i| position[m - 1][&s.face(i)]).collect() })
                    .collect()
            })
            .collect();
        Ok((DeltaComplex::new(faces)?, lists))
    }

    pub fn standard_simplex(k: usize) -> Self {
        Self::from_facets(&[(0..=k as u32).collect()]).expect("standard simplex").0
    }

    pub fn point() -> Self {
        DeltaComplex { faces: vec![vec![Vec::new()]] }
    }

    /// Top dimension; zero for the empty complex.
    pub fn dim(&self) -> usize {
        self.faces.len().saturating_sub(1)
    }

    pub fn count(&self, m: usize) -> usize {
        self.faces.get(m).map_or(0, Vec::len)
    }

    pub fn counts(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn face_table(&self) -> &[Vec<Vec<usize>>] {
        &self.faces
    }

    pub fn face(&self, x: CellId, i: usize) -> CellId {
        CellId::new(x.dim - 1, self.faces[x.dim][x.index][i])
    }

    pub fn cells(&self, m: usize) -> impl Iterator<Item = CellId> + '_ {
        (0..self.count(m)).map(move |i| CellId::new(m, i))
    }

    /// The face spanned by a strictly increasing list of vertex slots.
    pub fn iterated_face(&self, x: CellId, vertices: &[usize]) -> CellId {
        let mut y = x;
        for j in (0..=x.dim).rev() {
            if vertices.binary_search(&j).is_err() {
                y = self.face(y, j);
            }
        }
        y
    }

    /// Chains on all cells with the alternating face boundary; complete.
    pub fn chains(&self, ring: Ring) -> ChainComplex<CellId> {
        let mut basis: Vec<Vec<CellId>> = (0..self.faces.len()).map(|m| self.cells(m).collect()).collect();
        basis.push(Vec::new());
        ChainComplex::new(ring, basis, true, |&x| {
            Chain::from_terms(ring, (0..=x.dim).map(|i| (self.face(x, i), ring.sign(i))))
        })
        .expect("faces are cells")
    }
}

/// A simplicial set known through dimension `truncation`.
#[derive(Clone, Debug)]
pub struct SimplicialSet {
    name: String,
    faces: Vec<Vec<Vec<usize>>>,
    degeneracies: Vec<Vec<Vec<usize>>>,
    basepoint: Option<usize>,
    finite: bool,
    degenerate: Vec<Vec<bool>>,
}

impl SimplicialSet {
    /// Validates the tables against the simplicial identities, naming the first bad cell.
    ///
    /// `finite` asserts that every nondegenerate cell is listed.
    pub fn new(
        name: impl Into<String>,
        faces: Vec<Vec<Vec<usize>>>,
        degeneracies: Vec<Vec<Vec<usize>>>,
        basepoint: Option<usize>,
        finite: bool,
    ) -> Result<Self> {
        let name = name.into();
        if faces.is_empty() || faces.len() != degeneracies.len() {
            return Err(Error::Invalid(format!("{name}: face and degeneracy tables must cover the same dimensions")));
        }
        let top = faces.len() - 1;
        let count = |m: usize| faces[m].len();
        let bad = |m: usize, idx: usize, what: String| Error::Invalid(format!("{name}: dimension {m}, cell {idx}: {what}"));
        for m in 0..=top {
            if degeneracies[m].len() != count(m) {
                return Err(bad(m, 0, "degeneracy table has the wrong number of cells".into()));
            }
            for idx in 0..count(m) {
                let fs = &faces[m][idx];
                let expected = if m == 0 { 0 } else { m + 1 };
                if fs.len() != expected {
                    return Err(bad(m, idx, format!("expected {expected} faces, found {}", fs.len())));
                }
                if m > 0 && fs.iter().any(|&f| f >= count(m - 1)) {
                    return Err(bad(m, idx, "face index out of range".into()));
                }
                let ss = &degeneracies[m][idx];
                let expected = if m == top { 0 } else { m + 1 };
                if ss.len() != expected {
                    return Err(bad(m, idx, format!("expected {expected} degeneracies, found {}", ss.len())));
                }
                if m < top && ss.iter().any(|&s| s >= count(m + 1)) {
                    return Err(bad(m, idx, "degeneracy index out of range".into()));
                }
            }
        }
        let d = |m: usize, x: usize, i: usize| faces[m][x][i];
        let s = |m: usize, x: usize, i: usize| degeneracies[m][x][i];
        for m in 0..=top {
            for x in 0..count(m) {
                if m >= 2 {
                    for j in 1..=m {
                        for i in 0..j {
                            if d(m - 1, d(m, x, j), i) != d(m - 1, d(m, x, i), j - 1) {
                                return Err(bad(m, x, format!("d_{i} d_{j} and d_{} d_{i} disagree", j - 1)));
                            }
                        }
                    }
                }
                if m < top {
                    for j in 0..=m {
                        let y = s(m, x, j);
                        for i in 0..=m + 1 {
                            let lhs = d(m + 1, y, i);
                            let rhs = if i < j {
                                s(m - 1, d(m, x, i), j - 1)
                            } else if i == j || i == j + 1 {
                                x
                            } else {
                                s(m - 1, d(m, x, i - 1), j)
                            };
                            if lhs != rhs {
                                return Err(bad(m, x, format!("d_{i} s_{j} violates the simplicial identities")));
                            }
                        }
                    }
                }
                if m + 2 <= top {
                    for j in 0..=m {
                        for i in 0..=j {
                            if s(m + 1, s(m, x, j), i) != s(m + 1, s(m, x, i), j + 1) {
                                return Err(bad(m, x, format!("s_{i} s_{j} and s_{} s_{i} disagree", j + 1)));
                            }
                        }
                    }
                }
            }
        }
        if let Some(b) = basepoint {
            if b >= count(0) {
                return Err(Error::Invalid(format!("{name}: basepoint {b} is not a vertex")));
            }
        }
        let degenerate = (0..=top)
            .map(|m| {
                (0..count(m))
                    .map(|x| m > 0 && (0..m).any(|i| s(m - 1, d(m, x, i), i) == x))
                    .collect()
            })
            .collect();
        Ok(SimplicialSet { name, faces, degeneracies, basepoint, finite, degenerate })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn truncation(&self) -> usize {
        self.faces.len() - 1
    }

    pub fn is_finite(&self) -> bool {
        self.finite
    }

    pub fn basepoint(&self) -> Option<usize> {
        self.basepoint
    }

    pub fn with_basepoint(mut self, basepoint: Option<usize>) -> Result<Self> {
        if basepoint.is_some_and(|b| b >= self.count(0)) {
            return Err(Error::Invalid(format!("{}: basepoint is not a vertex", self.name)));
        }
        self.basepoint = basepoint;
        Ok(self)
    }

    pub fn is_reduced(&self) -> bool {
        self.count(0) == 1
    }

    pub fn count(&self, m: usize) -> usize {
        self.faces.get(m).map_or(0, Vec::len)
    }

    pub fn counts(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn cells(&self, m: usize) -> impl Iterator<Item = CellId> + '_ {
        (0..self.count(m)).map(move |i| CellId::new(m, i))
    }

    pub fn face_table(&self) -> &[Vec<Vec<usize>>] {
        &self.faces
    }

    pub fn degeneracy_table(&self) -> &[Vec<Vec<usize>>] {
        &self.degeneracies
    }

    pub fn nondegenerate(&self, m: usize) -> impl Iterator<Item = CellId> + '_ {
        self.cells(m).filter(move |x| !self.degenerate[m][x.index])
    }

    pub fn nondegenerate_counts(&self) -> Vec<usize> {
        (0..=self.truncation()).map(|m| self.nondegenerate(m).count()).collect()
    }

    /// The basepoint and its iterated degeneracies `s_0^m v`, one per dimension.
    pub fn basepoint_cells(&self) -> Option<Vec<CellId>> {
        let b = self.basepoint?;
        let mut out = vec![CellId::new(0, b)];
        for m in 0..self.truncation() {
            let prev = out[m];
            out.push(CellId::new(m + 1, self.degeneracies[m][prev.index][0]));
        }
        Some(out)
    }

    pub fn is_basepoint_cell(&self, x: CellId) -> bool {
        self.basepoint_cells().is_some_and(|b| b[x.dim] == x)
    }

    /// Eilenberg-Zilber normal form: `x = σ^*(y)` with `y` nondegenerate.
    pub fn normal_form(&self, x: CellId) -> (CellId, Surjection) {
        let mut word = Vec::new();
        let mut y = x;
        while let Some(i) = (0..y.dim).rev().find(|&i| self.degeneracy(&self.face(&y, i), i) == Some(y)) {
            word.push(i);
            y = self.face(&y, i);
        }
        (y, Surjection { source: x.dim, word })
    }

    /// Chains on all cells, known through the truncation.
    pub fn unnormalized_chains(&self, ring: Ring) -> ChainComplex<CellId> {
        let basis = (0..=self.truncation()).map(|m| self.cells(m).collect()).collect();
        ChainComplex::new(ring, basis, false, |x| self.alternating_boundary(ring, *x, |_| true)).expect("faces are cells")
    }

    /// Chains modulo degenerate cells, with nondegenerate cells as basis.
    pub fn normalized_chains(&self, ring: Ring) -> ChainComplex<CellId> {
        let mut basis: Vec<Vec<CellId>> = (0..=self.truncation()).map(|m| self.nondegenerate(m).collect()).collect();
        if self.finite {
            basis.push(Vec::new());
        }
        ChainComplex::new(ring, basis, self.finite, |x| self.alternating_boundary(ring, *x, |y| !self.degenerate[y.dim][y.index]))
            .expect("faces are cells")
    }

    /// Chains relative to the basepoint: basepoint cells are dropped.
    pub fn pointed_unnormalized_chains(&self, ring: Ring) -> Result<ChainComplex<CellId>> {
        let base = self.basepoint_cells().ok_or_else(|| Error::Precondition(format!("{} has no basepoint", self.name)))?;
        let basis = (0..=self.truncation()).map(|m| self.cells(m).filter(|x| *x != base[m]).collect()).collect();
        ChainComplex::new(ring, basis, false, |x| self.alternating_boundary(ring, *x, |y| base[y.dim] != y))
    }

    fn alternating_boundary(&self, ring: Ring, x: CellId, keep: impl Fn(CellId) -> bool) -> Chain<CellId> {
        let mut out = Chain::zero(ring);
        if x.dim > 0 {
            for i in 0..=x.dim {
                let y = self.face(&x, i);
                if keep(y) {
                    out.add_term(y, ring.sign(i));
                }
            }
        }
        out
    }
}

impl Simplicial for SimplicialSet {
    type Cell = CellId;

    fn face(&self, x: &CellId, i: usize) -> CellId {
        CellId::new(x.dim - 1, self.faces[x.dim][x.index][i])
    }

    fn degeneracy(&self, x: &CellId, i: usize) -> Option<CellId> {
        self.degeneracies[x.dim].get(x.index).and_then(|s| s.get(i)).map(|&y| CellId::new(x.dim + 1, y))
    }

    fn is_degenerate(&self, x: &CellId) -> bool {
        self.degenerate[x.dim][x.index]
    }
}

/// `𝔡(Y)`: formally adds degeneracies to a delta complex, through dimension `truncation`.
///
/// Cell `(σ, y)` with `σ: [m] → [n]` a surjection and `y` an `n`-cell of `Y` is listed
/// in dimension `m`, ordered by `(n, y, σ)`.
pub fn freely_add_degeneracies(y: &DeltaComplex, truncation: usize, name: impl Into<String>) -> SimplicialSet {
    let (cells, position) = formal_degeneracies(y, truncation);
    let mut faces = Vec::with_capacity(truncation + 1);
    let mut degeneracies = Vec::with_capacity(truncation + 1);
    for (m, level) in cells.iter().enumerate() {
        let mut f_level = Vec::with_capacity(level.len());
        let mut s_level = Vec::with_capacity(level.len());
        for (surj, cell) in level {
            let map = surj.to_map();
            let fs = if m == 0 {
                Vec::new()
            } else {
                (0..=m)
                    .map(|i| {
                        let mut g = map.clone();
                        g.remove(i);
                        let (tau, image) = epi_mono(&g);
                        let z = y.iterated_face(*cell, &image);
                        position[m - 1][&(tau, z)]
                    })
                    .collect()
            };
            let ss = if m == truncation {
                Vec::new()
            } else {
                (0..=m)
                    .map(|i| {
                        let mut g = map.clone();
                        g.insert(i, map[i]);
                        let tau = Surjection::from_map(&g).expect("still a surjection");
                        position[m + 1][&(tau, *cell)]
                    })
                    .collect()
            };
            f_level.push(fs);
            s_level.push(ss);
        }
        faces.push(f_level);
        degeneracies.push(s_level);
    }
    SimplicialSet::new(name, faces, degeneracies, None, truncation >= y.dim()).expect("formal degeneracies satisfy the identities")
}

type FormalCells = (Vec<Vec<(Surjection, CellId)>>, Vec<BTreeMap<(Surjection, CellId), usize>>);

fn formal_degeneracies(y: &DeltaComplex, truncation: usize) -> FormalCells {
    let mut cells = Vec::with_capacity(truncation + 1);
    let mut position = Vec::with_capacity(truncation + 1);
    for m in 0..=truncation {
        let mut level = Vec::new();
        for n in 0..=m.min(y.dim()) {
            let surjections = Surjection::all(m, n);
            for c in y.cells(n) {
                for s in &surjections {
                    level.push((s.clone(), c));
                }
            }
        }
        position.push(level.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect());
        cells.push(level);
    }
    (cells, position)
}

/// `𝔣(X)`: all cells through the truncation, keeping only faces.
pub fn forget_degeneracies(x: &SimplicialSet) -> DeltaComplex {
    DeltaComplex::new(x.faces.clone()).expect("faces of a simplicial set satisfy the face identities")
}

/// The nondegenerate cells with all their iterated faces, as a delta complex.
#[derive(Clone, Debug)]
pub struct Core {
    pub complex: DeltaComplex,
    /// Index in `X` of each core cell, per dimension.
    pub inclusion: Vec<Vec<usize>>,
}

pub fn core(x: &SimplicialSet) -> Core {
    let top = x.truncation();
    let mut keep: Vec<BTreeSet<usize>> = (0..=top).map(|m| x.nondegenerate(m).map(|c| c.index).collect()).collect();
    for m in (1..=top).rev() {
        let faces: Vec<usize> = keep[m].iter().flat_map(|&c| x.faces[m][c].iter().copied()).collect();
        keep[m - 1].extend(faces);
    }
    let inclusion: Vec<Vec<usize>> = keep.iter().map(|s| s.iter().copied().collect()).collect();
    let position: Vec<BTreeMap<usize, usize>> =
        inclusion.iter().map(|l| l.iter().enumerate().map(|(i, &c)| (c, i)).collect()).collect();
    let faces = inclusion
        .iter()
        .enumerate()
        .map(|(m, l)| l.iter().map(|&c| x.faces[m][c].iter().map(|f| position[m - 1][f]).collect()).collect())
        .collect();
    Core { complex: DeltaComplex::new(faces).expect("faces of a simplicial set satisfy the face identities"), inclusion }
}

/// Per dimension, the image in `X` of each cell of `𝔡(Core X)` under the canonical map.
pub fn canonical_map(x: &SimplicialSet) -> Vec<Vec<CellId>> {
    let c = core(x);
    let (cells, _) = formal_degeneracies(&c.complex, x.truncation());
    cells
        .iter()
        .map(|level| {
            level
                .iter()
                .map(|(surj, y)| {
                    let mut z = CellId::new(y.dim, c.inclusion[y.dim][y.index]);
                    for &i in surj.word().iter().rev() {
                        z = x.degeneracy(&z, i).expect("within the truncation");
                    }
                    z
                })
                .collect()
        })
        .collect()
}

/// Whether `𝔡(Core X) → X` is bijective in every known dimension.
pub fn is_degeneracy_free(x: &SimplicialSet) -> bool {
    canonical_map(x).iter().enumerate().all(|(m, images)| {
        let distinct: BTreeSet<&CellId> = images.iter().collect();
        distinct.len() == images.len() && images.len() == x.count(m)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surjection_round_trip() {
        for m in 0..5 {
            for n in 0..=m {
                for s in Surjection::all(m, n) {
                    let map = s.to_map();
                    assert_eq!(*map.last().unwrap(), n);
                    assert_eq!(Surjection::from_map(&map).unwrap(), s);
                }
            }
        }
        assert_eq!(Surjection::all(4, 2).len(), 6);
    }

    #[test]
    fn word_acts_like_the_map() {
        let s = Surjection::from_word(3, vec![2, 0]).unwrap();
        assert_eq!(s.to_map(), vec![0, 0, 1, 1]);
        let x = Simplex(vec![5, 7]);
        let mut y = x.clone();
        for &i in s.word().iter().rev() {
            y = y.degeneracy(i);
        }
        assert_eq!(y, Simplex(vec![5, 5, 7, 7]));
    }

    #[test]
    fn delta_one_as_simplicial_set() {
        let x = freely_add_degeneracies(&DeltaComplex::standard_simplex(1), 4, "d1");
        assert_eq!(x.counts(), vec![2, 3, 4, 5, 6]);
        assert_eq!(x.nondegenerate_counts(), vec![2, 1, 0, 0, 0]);
        assert!(is_degeneracy_free(&x));
        assert_eq!(forget_degeneracies(&x).count(2), 4);
    }

    #[test]
    fn corrupted_faces_are_named() {
        let err = DeltaComplex::new(vec![vec![vec![], vec![]], vec![vec![1, 0]], vec![vec![0, 0, 0]]]).unwrap_err();
        assert!(err.to_string().contains("dimension 2, cell 0"), "{err}");
    }

    #[test]
    fn normal_form_recovers_degeneracies() {
        let x = freely_add_degeneracies(&DeltaComplex::standard_simplex(2), 4, "d2");
        for m in 0..=4 {
            for c in x.cells(m) {
                let (y, s) = x.normal_form(c);
                assert!(!x.is_degenerate(&y));
                let mut z = y;
                for &i in s.word().iter().rev() {
                    z = x.degeneracy(&z, i).unwrap();
                }
                assert_eq!(z, c);
            }
        }
    }
}
