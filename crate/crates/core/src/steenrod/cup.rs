//! Cochains, cup-`i` products and Steenrod squares.
//!
//! `(u ⌣_i v)(σ) = (u ⊗ v)(ξ(e_i ⊗ σ))`, where `(u ⊗ v)(a ⊗ b) = (-1)^{|v||a|} u(a) v(b)`.

use std::collections::BTreeMap;

use crate::bar::BarElement;
use crate::chain::{Chain, Graded, Tensor};
use crate::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::homology::cohomology;
use crate::ring::{Ring, Scalar};
use crate::simplicial::Simplicial;

use super::{normalize_diagonal, xi_cell, DiagonalTable};

/// A cochain of one degree: values on basis cells, zero where absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain<B: Ord> {
    ring: Ring,
    degree: usize,
    values: BTreeMap<B, Scalar>,
}

impl<B: Ord + Clone + Graded> Cochain<B> {
    pub fn zero(ring: Ring, degree: usize) -> Self {
        Cochain { ring, degree, values: BTreeMap::new() }
    }

    /// The dual of a basis cell.
    pub fn dual(ring: Ring, b: B) -> Self {
        let mut c = Self::zero(ring, b.degree());
        c.set(b, ring.one());
        c
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn set(&mut self, b: B, value: Scalar) {
        let value = self.ring.canon(value);
        if value == self.ring.zero() {
            self.values.remove(&b);
        } else {
            self.values.insert(b, value);
        }
    }

    pub fn value(&self, b: &B) -> Scalar {
        self.values.get(b).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = (&B, &Scalar)> {
        self.values.iter()
    }

    pub fn evaluate(&self, x: &Chain<B>) -> Scalar {
        x.iter().fold(self.ring.zero(), |acc, (b, c)| self.ring.add(&acc, &self.ring.mul(c, &self.value(b))))
    }

    pub fn from_vector(complex: &ChainComplex<B>, degree: usize, v: &[Scalar]) -> Self {
        let mut c = Self::zero(complex.ring(), degree);
        for (b, x) in complex.basis(degree).iter().zip(v) {
            c.set(b.clone(), x.clone());
        }
        c
    }

    pub fn to_vector(&self, complex: &ChainComplex<B>) -> Vec<Scalar> {
        complex.basis(self.degree).iter().map(|b| self.value(b)).collect()
    }

    /// `δu = u ∘ ∂`.
    pub fn coboundary(&self, complex: &ChainComplex<B>) -> Result<Self> {
        if !complex.knows_degree(self.degree + 1) {
            return Err(Error::Precondition(format!("degree {} is beyond the truncation", self.degree + 1)));
        }
        let mut out = Self::zero(self.ring, self.degree + 1);
        for b in complex.basis(self.degree + 1) {
            out.set(b.clone(), self.evaluate(&complex.boundary_of(b)));
        }
        Ok(out)
    }

    pub fn is_cocycle(&self, complex: &ChainComplex<B>) -> Result<bool> {
        Ok(self.coboundary(complex)?.is_zero())
    }
}

/// The data shared by cup-`i` computations on one space.
pub struct CupContext<'a, S: Simplicial> {
    pub space: &'a S,
    /// Normalized chains of `space`, defining the cochain bases.
    pub complex: &'a ChainComplex<S::Cell>,
    pub table: &'a DiagonalTable,
    pub exec: Exec,
}

impl<S: Simplicial> CupContext<'_, S> {
    pub fn ring(&self) -> Ring {
        self.complex.ring()
    }

    /// `u ⌣_i v`, of degree `p + q - i`.
    pub fn cup_i(&self, u: &Cochain<S::Cell>, v: &Cochain<S::Cell>, i: usize) -> Result<Cochain<S::Cell>> {
        let ring = self.ring();
        if u.ring != ring || v.ring != ring {
            return Err(Error::Ring("cochains and complex use different rings".into()));
        }
        let (p, q) = (u.degree, v.degree);
        let n = (p + q).checked_sub(i).ok_or_else(|| Error::Degree(format!("cup_{i} of degrees {p} and {q}")))?;
        if !self.complex.knows_degree(n) {
            return Err(Error::Precondition(format!("degree {n} is beyond the truncation")));
        }
        let cells = self.complex.basis(n);
        let values = self.exec.map(cells, |sigma| {
            let d = normalize_diagonal(self.space, &xi_cell(self.space, BarElement::e(i), sigma, self.table));
            d.iter()
                .filter(|(Tensor(a, b), _)| a.degree() == p && b.degree() == q)
                .fold(ring.zero(), |acc, (Tensor(a, b), c)| {
                    let term = ring.mul(&ring.mul(&ring.sign(q * p), &ring.coerce(c)), &ring.mul(&u.value(a), &v.value(b)));
                    ring.add(&acc, &term)
                })
        });
        let mut out = Cochain::zero(ring, n);
        for (sigma, x) in cells.iter().zip(values) {
            out.set(sigma.clone(), x);
        }
        Ok(out)
    }

    /// A cocycle representing `Sq^i[u] = [u ⌣_{p-i} u]`; zero when `i > p`.
    pub fn steenrod_square(&self, i: usize, u: &Cochain<S::Cell>) -> Result<Cochain<S::Cell>> {
        if self.ring() != Ring::PrimeField(2) {
            return Err(Error::Ring(format!("Steenrod squares need F2 coefficients, not {}", self.ring())));
        }
        if !u.is_cocycle(self.complex)? {
            return Err(Error::NotCocycle(format!("degree {} cochain", u.degree)));
        }
        match u.degree.checked_sub(i) {
            Some(j) => self.cup_i(u, u, j),
            None => Ok(Cochain::zero(self.ring(), u.degree + i)),
        }
    }

    /// The matrix of `Sq^i: H^p → H^{p+i}` on the chosen cohomology bases; column `c`
    /// holds the image of generator `c`.
    pub fn sq_matrix(&self, i: usize, p: usize) -> Result<SqMatrix> {
        let source = cohomology(self.complex, p)?;
        let target = cohomology(self.complex, p + i)?;
        let mut columns = Vec::with_capacity(source.dimension());
        for g in &source.data.generators {
            let u = Cochain::from_vector(self.complex, p, g);
            let sq = self.steenrod_square(i, &u)?;
            columns.push(target.data.coordinates(&sq.to_vector(self.complex))?);
        }
        Ok(SqMatrix { i, p, rows: target.dimension(), columns })
    }
}

/// `Sq^i: H^p → H^{p+i}` in coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqMatrix {
    pub i: usize,
    pub p: usize,
    pub rows: usize,
    pub columns: Vec<Vec<Scalar>>,
}

impl SqMatrix {
    pub fn is_zero(&self) -> bool {
        self.columns.iter().flatten().all(|x| *x == Ring::PrimeField(2).zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.columns.len()
            && self.columns.iter().enumerate().all(|(c, col)| {
                col.iter().enumerate().all(|(r, x)| *x == if r == c { Ring::PrimeField(2).one() } else { Ring::PrimeField(2).zero() })
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{freely_add_degeneracies, DeltaComplex};

    fn front_back_pairing(ring: Ring) -> Scalar {
        let x = freely_add_degeneracies(&DeltaComplex::standard_simplex(2), 3, "Δ²");
        let complex = x.normalized_chains(ring);
        let table = DiagonalTable::new();
        let ctx = CupContext { space: &x, complex: &complex, table: &table, exec: Exec::Sequential };
        let edge = |v: [u32; 2]| {
            complex.basis(1).iter().copied().find(|e| {
                let ends: Vec<u32> = (0..2).map(|j| x.face(e, 1 - j).index as u32).collect();
                ends == v
            })
        };
        let (a, b) = (edge([0, 1]).unwrap(), edge([1, 2]).unwrap());
        let w = ctx.cup_i(&Cochain::dual(ring, a), &Cochain::dual(ring, b), 0).unwrap();
        w.value(&complex.basis(2)[0])
    }

    #[test]
    fn cup_zero_on_the_two_simplex() {
        assert_eq!(front_back_pairing(Ring::PrimeField(2)), Ring::PrimeField(2).one());
        assert_eq!(front_back_pairing(Ring::Rationals), Ring::Rationals.from_int(-1));
    }
}
