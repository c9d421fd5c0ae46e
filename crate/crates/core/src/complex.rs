//! Free chain complexes of finite rank in each degree.

use std::collections::BTreeMap;

use num::Zero;

use crate::chain::{Chain, Graded, Tensor};
use crate::error::{Error, Result};
use crate::ring::{Ring, Scalar};

/// A free chain complex known in degrees `0..=truncation`.
///
/// A complete complex is zero above its truncation, so homology is defined in every degree.
#[derive(Clone, Debug)]
pub struct ChainComplex<B: Ord> {
    ring: Ring,
    basis: Vec<Vec<B>>,
    position: BTreeMap<B, usize>,
    boundary: BTreeMap<B, Chain<B>>,
    complete: bool,
}

impl<B: Ord + Clone + Graded> ChainComplex<B> {
    /// Builds a complex from ordered bases and a boundary on basis elements.
    ///
    /// Fails if a boundary term is not a basis element one degree down.
    pub fn new<F>(ring: Ring, basis: Vec<Vec<B>>, complete: bool, mut boundary: F) -> Result<Self>
    where
        F: FnMut(&B) -> Chain<B>,
    {
        let mut position = BTreeMap::new();
        for (n, level) in basis.iter().enumerate() {
            for (i, b) in level.iter().enumerate() {
                if b.degree() != n {
                    return Err(Error::Degree(format!("basis element listed in degree {n} has degree {}", b.degree())));
                }
                if position.insert(b.clone(), i).is_some() {
                    return Err(Error::Invalid(format!("repeated basis element in degree {n}")));
                }
            }
        }
        let mut table = BTreeMap::new();
        for level in basis.iter().skip(1) {
            for b in level {
                let d = boundary(b).change_ring(ring);
                if d.basis_elements().any(|t| !position.contains_key(t)) {
                    return Err(Error::Invalid(format!("boundary of a degree-{} element leaves the complex", b.degree())));
                }
                if !d.is_zero() {
                    table.insert(b.clone(), d);
                }
            }
        }
        Ok(ChainComplex { ring, basis, position, boundary: table, complete })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// Highest degree with known basis.
    pub fn truncation(&self) -> usize {
        self.basis.len().saturating_sub(1)
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn rank(&self, n: usize) -> usize {
        self.basis.get(n).map_or(0, Vec::len)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.basis.iter().map(Vec::len).collect()
    }

    pub fn basis(&self, n: usize) -> &[B] {
        self.basis.get(n).map_or(&[], Vec::as_slice)
    }

    pub fn contains(&self, b: &B) -> bool {
        self.position.contains_key(b)
    }

    /// Index of `b` within its degree.
    pub fn position(&self, b: &B) -> Option<usize> {
        self.position.get(b).copied()
    }

    /// Whether degree `n` is known, either listed or above the top of a complete complex.
    pub fn knows_degree(&self, n: usize) -> bool {
        n < self.basis.len() || self.complete
    }

    pub fn boundary_of(&self, b: &B) -> Chain<B> {
        self.boundary.get(b).cloned().unwrap_or_else(|| Chain::zero(self.ring))
    }

    pub fn boundary(&self, x: &Chain<B>) -> Chain<B> {
        x.map_linear(|b| self.boundary_of(b))
    }

    /// Checks `∂∘∂ = 0` on every basis element, returning the first offending degree.
    pub fn check_d_squared(&self) -> std::result::Result<(), usize> {
        for (n, level) in self.basis.iter().enumerate().skip(2) {
            if level.iter().any(|b| !self.boundary(&self.boundary_of(b)).is_zero()) {
                return Err(n);
            }
        }
        Ok(())
    }

    /// Coordinates of a degree-`n` chain in the ordered basis.
    pub fn vector(&self, n: usize, x: &Chain<B>) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.rank(n)];
        for (b, c) in x.iter() {
            let i = self.position(b).expect("chain term outside the complex");
            v[i] = c.clone();
        }
        v
    }

    pub fn chain_from_vector(&self, n: usize, v: &[Scalar]) -> Chain<B> {
        Chain::from_terms(self.ring, self.basis(n).iter().cloned().zip(v.iter().cloned()))
    }

    /// Matrix of `∂: C_n → C_{n-1}` with rows indexed by `C_{n-1}`.
    pub fn boundary_matrix(&self, n: usize) -> Vec<Vec<Scalar>> {
        let rows = if n == 0 { 0 } else { self.rank(n - 1) };
        let mut m = vec![vec![Scalar::zero(); self.rank(n)]; rows];
        if n == 0 {
            return m;
        }
        for (j, b) in self.basis(n).iter().enumerate() {
            for (t, c) in self.boundary_of(b).iter() {
                m[self.position(t).expect("checked at construction")][j] = c.clone();
            }
        }
        m
    }

    /// Same bases and same boundaries.
    pub fn same_as(&self, other: &ChainComplex<B>) -> bool {
        self.ring == other.ring && self.basis == other.basis && self.boundary == other.boundary
    }
}

/// The tensor product complex through degree `max_degree`, with
/// `∂(a⊗b) = ∂a⊗b + (-1)^{|a|} a⊗∂b`.
pub fn tensor_complex<A, B>(
    x: &ChainComplex<A>,
    y: &ChainComplex<B>,
    max_degree: usize,
) -> Result<ChainComplex<Tensor<A, B>>>
where
    A: Ord + Clone + Graded,
    B: Ord + Clone + Graded,
{
    let ring = x.ring();
    let top = max_degree.min(x.truncation().min(y.truncation()));
    let basis: Vec<Vec<Tensor<A, B>>> = (0..=top)
        .map(|n| {
            (0..=n)
                .flat_map(|p| {
                    x.basis(p)
                        .iter()
                        .flat_map(move |a| y.basis(n - p).iter().map(move |b| Tensor(a.clone(), b.clone())))
                })
                .collect()
        })
        .collect();
    ChainComplex::new(ring, basis, x.is_complete() && y.is_complete(), |Tensor(a, b)| {
        tensor_boundary(ring, a, b, |t| x.boundary_of(t), |t| y.boundary_of(t))
    })
}

/// `∂(a⊗b)` for given factor boundaries.
pub fn tensor_boundary<A, B, FA, FB>(ring: Ring, a: &A, b: &B, da: FA, db: FB) -> Chain<Tensor<A, B>>
where
    A: Ord + Clone + Graded,
    B: Ord + Clone + Graded,
    FA: Fn(&A) -> Chain<A>,
    FB: Fn(&B) -> Chain<B>,
{
    let mut out = Chain::zero(ring);
    for (t, c) in da(a).iter() {
        out.add_term(Tensor(t.clone(), b.clone()), c.clone());
    }
    let sign = ring.sign(a.degree());
    for (t, c) in db(b).iter() {
        out.add_term(Tensor(a.clone(), t.clone()), ring.mul(&sign, c));
    }
    out
}
