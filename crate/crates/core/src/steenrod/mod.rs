//! The equivariant diagonal `ξ: RS₂ ⊗ C → C ⊗ C` and what is built from it.
//!
//! On `Δ^k` the diagonal is produced by the recursion
//! `ξ(A ⊗ s^k) = Φ(ξ(∂A ⊗ s^k) + (-1)^{|A|} ξ(A ⊗ ∂s^k))` with the contraction `Φ` of
//! `C(Δ^k) ⊗ C(Δ^k)`, starting from Alexander-Whitney at level 0. Faces of `s^k` are
//! handled by relabelling the `Δ^{k-1}` answer, and on a general space by pulling back
//! along the characteristic map of each cell.

pub mod cup;
pub mod prime3;

use std::collections::HashMap;
use std::sync::Arc;

use parking_lot::RwLock;

use crate::bar::{BarElement, Coproduct};
use crate::chain::{koszul_swap, Chain, Graded, Tensor};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::ring::{Ring, Scalar};
use crate::simplex::Simplex;
use crate::simplicial::{Simplicial, VertexLists};

/// A chain in `C ⊗ C`.
pub type Diagonal<C> = Chain<Tensor<C, C>>;

const Z: Ring = Ring::Integers;

/// `φ_k` on a face of `Δ^k`: appends the vertex `k` with sign `(-1)^{t+1}`, or gives zero
/// when the face already ends at `k`.
pub fn phi(k: usize, face: &Simplex) -> Result<Chain<Simplex>> {
    if !face.is_face_of_standard(k) {
        return Err(Error::NotAFace(format!("{face} in Δ^{k}")));
    }
    if face.last() as usize == k {
        return Ok(Chain::zero(Z));
    }
    let mut v = face.0.clone();
    v.push(k as u32);
    Ok(Chain::term(Z, Simplex(v), Z.sign(face.dim() + 1)))
}

/// `Φ = φ_k ⊗ 1 + ι_k ε ⊗ φ_k` on `C(Δ^k) ⊗ C(Δ^k)`.
pub fn big_phi(k: usize, x: &Diagonal<Simplex>) -> Result<Diagonal<Simplex>> {
    let mut out = Chain::zero(Z);
    for (Tensor(a, b), c) in x.iter() {
        for (pa, s) in phi(k, a)?.iter() {
            out.add_term(Tensor(pa.clone(), b.clone()), Z.mul(c, s));
        }
        if a.dim() == 0 {
            for (pb, s) in phi(k, b)?.iter() {
                out.add_term(Tensor(Simplex::vertex(k as u32), pb.clone()), Z.mul(c, s));
            }
        }
    }
    Ok(out)
}

/// Alexander-Whitney: `[v_0..v_n] ↦ Σ_i [v_0..v_i] ⊗ [v_i..v_n]`.
pub fn aw(s: &Simplex) -> Diagonal<Simplex> {
    let v = s.vertices();
    Chain::from_terms(Z, (0..v.len()).map(|i| (Tensor(Simplex(v[..=i].to_vec()), Simplex(v[i..].to_vec())), Z.one())))
}

/// Memoized values `ξ(e_n ⊗ [0..k])`, keyed by `(n, k)`. Entries are written once.
#[derive(Debug, Default)]
pub struct DiagonalTable {
    entries: RwLock<HashMap<(usize, usize), Arc<Diagonal<Simplex>>>>,
}

impl DiagonalTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.entries.read().len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.read().is_empty()
    }

    pub fn contains(&self, n: usize, k: usize) -> bool {
        self.entries.read().contains_key(&(n, k))
    }

    /// All stored entries, sorted by key.
    pub fn snapshot(&self) -> Vec<((usize, usize), Arc<Diagonal<Simplex>>)> {
        let mut v: Vec<_> = self.entries.read().iter().map(|(k, c)| (*k, c.clone())).collect();
        v.sort_by_key(|(k, _)| *k);
        v
    }

    /// Stores an entry computed elsewhere, such as a cache file. An existing entry wins.
    pub fn insert(&self, n: usize, k: usize, value: Diagonal<Simplex>) -> Arc<Diagonal<Simplex>> {
        self.entries.write().entry((n, k)).or_insert_with(|| Arc::new(value)).clone()
    }

    /// `ξ(e_n ⊗ [0..k])`.
    pub fn get(&self, n: usize, k: usize) -> Arc<Diagonal<Simplex>> {
        if let Some(c) = self.entries.read().get(&(n, k)) {
            return c.clone();
        }
        let value = self.compute(n, k);
        self.insert(n, k, value)
    }

    fn compute(&self, n: usize, k: usize) -> Diagonal<Simplex> {
        if n == 0 {
            return aw(&Simplex::standard(k));
        }
        if n > k {
            return Chain::zero(Z);
        }
        let lower = self.get(n - 1, k);
        // ξ(∂e_n ⊗ s^k) = ξ(e_{n-1} ⊗ s^k) + (-1)^n T·ξ(e_{n-1} ⊗ s^k)
        let mut r = (*lower).clone();
        r.add_scaled(&koszul_swap(&lower), &Z.sign(n));
        let previous = self.get(n, k - 1);
        for i in 0..=k {
            let labels: Vec<u32> = (0..=k as u32).filter(|&v| v != i as u32).collect();
            let sign = Z.sign(n + i);
            for (Tensor(a, b), c) in previous.iter() {
                r.add_term(Tensor(a.relabel(&labels), b.relabel(&labels)), Z.mul(c, &sign));
            }
        }
        big_phi(k, &r).expect("recursion stays inside Δ^k")
    }

    /// Fills every entry with `n ≤ max_level`, `k ≤ max_k`, one anti-diagonal at a time.
    pub fn precompute(&self, max_level: usize, max_k: usize, exec: Exec) {
        for s in 0..=max_level + max_k {
            let keys: Vec<(usize, usize)> =
                (0..=max_level.min(s)).map(|n| (n, s - n)).filter(|&(_, k)| k <= max_k).collect();
            let values = exec.map(&keys, |&(n, k)| (n, k, self.compute_or_get(n, k)));
            for (n, k, v) in values {
                self.insert(n, k, v);
            }
        }
    }

    fn compute_or_get(&self, n: usize, k: usize) -> Diagonal<Simplex> {
        match self.entries.read().get(&(n, k)) {
            Some(c) => (**c).clone(),
            None => self.compute(n, k),
        }
    }
}

/// `ξ(b ⊗ [0..k])` for a bar generator `b`, using `ξ(T·e_n ⊗ x) = T·ξ(e_n ⊗ x)`.
pub fn xi_standard(b: BarElement, k: usize, table: &DiagonalTable) -> Diagonal<Simplex> {
    let entry = table.get(b.level, k);
    if b.twisted {
        koszul_swap(&entry)
    } else {
        (*entry).clone()
    }
}

/// `ξ(b ⊗ x)` for one cell: the standard answer pulled back along `x: Δ^k → X`.
pub fn xi_cell<S: Simplicial>(space: &S, b: BarElement, x: &S::Cell, table: &DiagonalTable) -> Diagonal<S::Cell> {
    let k = x.degree();
    let standard = xi_standard(b, k, table);
    let slots = |s: &Simplex| -> Vec<usize> { s.vertices().iter().map(|&v| v as usize).collect() };
    let mut out = Chain::zero(Z);
    for (Tensor(l, r), c) in standard.iter() {
        let left = space.restrict(x, &slots(l)).expect("faces exist in every truncation");
        let right = space.restrict(x, &slots(r)).expect("faces exist in every truncation");
        out.add_term(Tensor(left, right), c.clone());
    }
    out
}

/// `ξ(b ⊗ x)` extended linearly over a chain, cell by cell under `exec`.
pub fn xi_space<S: Simplicial>(space: &S, b: BarElement, x: &Chain<S::Cell>, table: &DiagonalTable, exec: Exec) -> Diagonal<S::Cell> {
    let terms: Vec<(&S::Cell, &Scalar)> = x.iter().collect();
    let ring = x.ring();
    let parts = exec.map(&terms, |(cell, c)| xi_cell(space, b, cell, table).change_ring(ring).scale(c));
    let mut out = Chain::zero(ring);
    for p in &parts {
        out += p;
    }
    out
}

/// `ξ(b ⊗ s)` for a weakly increasing vertex list `s`, viewed as a simplex of `Δ^N`.
pub fn xi_simplex(b: BarElement, s: &Simplex, table: &DiagonalTable) -> Result<Diagonal<Simplex>> {
    if !s.is_weakly_increasing() {
        return Err(Error::NotOrdered(s.to_string()));
    }
    Ok(xi_cell(&VertexLists, b, s, table))
}

/// Drops every term with a degenerate factor, landing in normalized chains.
pub fn normalize_diagonal<S: Simplicial>(space: &S, x: &Diagonal<S::Cell>) -> Diagonal<S::Cell> {
    x.filter(|Tensor(l, r)| !space.is_degenerate(l) && !space.is_degenerate(r))
}

/// The coefficient `η_k` of `[0..k] ⊗ [0..k]` in `ξ(e_k ⊗ [0..k])`.
pub fn top_coefficient(k: usize, table: &DiagonalTable) -> Scalar {
    let s = Simplex::standard(k);
    table.get(k, k).coeff(&Tensor(s.clone(), s))
}

/// The diagonal of a space as a family of coproducts, optionally normalized.
pub struct SpaceDiagonal<'a, S> {
    pub space: &'a S,
    pub table: &'a DiagonalTable,
    pub ring: Ring,
    pub normalized: bool,
}

impl<S: Simplicial> Coproduct for SpaceDiagonal<'_, S> {
    type Cell = S::Cell;

    fn ring(&self) -> Ring {
        self.ring
    }

    fn coproduct(&self, b: BarElement, x: &S::Cell) -> Diagonal<S::Cell> {
        let d = xi_cell(self.space, b, x, self.table).change_ring(self.ring);
        if self.normalized {
            normalize_diagonal(self.space, &d)
        } else {
            d
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[u32]) -> Simplex {
        Simplex(v.to_vec())
    }

    #[test]
    fn phi_values() {
        assert_eq!(phi(2, &s(&[0, 1])).unwrap(), Chain::basis(Z, s(&[0, 1, 2])));
        assert!(phi(2, &s(&[0, 2])).unwrap().is_zero());
        assert_eq!(phi(2, &s(&[0])).unwrap(), Chain::term(Z, s(&[0, 2]), Z.from_int(-1)));
        assert!(matches!(phi(1, &s(&[0, 2])), Err(Error::NotAFace(_))));
    }

    #[test]
    fn big_phi_example() {
        let x = Chain::basis(Z, Tensor(s(&[0, 1]), s(&[1, 2])));
        assert_eq!(big_phi(2, &x).unwrap(), Chain::basis(Z, Tensor(s(&[0, 1, 2]), s(&[1, 2]))));
    }

    #[test]
    fn level_zero_is_alexander_whitney() {
        let t = DiagonalTable::new();
        assert_eq!(*t.get(0, 2), aw(&Simplex::standard(2)));
        assert_eq!(t.get(0, 2).len(), 3);
    }

    #[test]
    fn vanishing_above_dimension() {
        let t = DiagonalTable::new();
        assert!(t.get(3, 2).is_zero());
    }

    #[test]
    fn precompute_matches_lazy() {
        let a = DiagonalTable::new();
        a.precompute(4, 5, Exec::Parallel);
        let b = DiagonalTable::new();
        for n in 0..=4 {
            for k in 0..=5 {
                assert_eq!(a.get(n, k), b.get(n, k));
            }
        }
    }

    #[test]
    fn unordered_vertices_rejected() {
        let t = DiagonalTable::new();
        assert!(matches!(xi_simplex(BarElement::e(1), &s(&[1, 0]), &t), Err(Error::NotOrdered(_))));
    }
}
