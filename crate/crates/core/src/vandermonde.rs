//! Linear independence of truncated diagonal vectors `e(c) = (1, c, c⊗c, …)`.
//!
//! Symmetrizing `c^{⊗j}` gives the `j`-th power of the linear form `f(c)` in the
//! polynomial ring on the basis, so the vectors `e(c_1), …, e(c_t)` span a Vandermonde
//! system in the values `f(c_i)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::Rng;

use crate::chain::{Chain, Graded, TensorN};
use crate::error::{Error, Result};
use crate::linalg;
use crate::ring::{format_scalar, Ring, Scalar};

/// A polynomial in commuting variables `x_0, x_1, …`, keyed by exponent vectors
/// without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    ring: Ring,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

fn trim(mut e: Vec<u32>) -> Vec<u32> {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

impl Poly {
    pub fn zero(ring: Ring) -> Self {
        Poly { ring, terms: BTreeMap::new() }
    }

    pub fn constant(ring: Ring, c: Scalar) -> Self {
        let mut p = Self::zero(ring);
        p.add_term(Vec::new(), c);
        p
    }

    pub fn variable(ring: Ring, i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        let mut p = Self::zero(ring);
        p.add_term(e, ring.one());
        p
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: Scalar) {
        let e = trim(exponents);
        let sum = self.ring.add(self.terms.get(&e).unwrap_or(&self.ring.zero()), &c);
        if sum == self.ring.zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Scalar)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&self.ring.neg(&self.ring.one())))
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        let mut out = Self::zero(self.ring);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), self.ring.mul(x, c));
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Self::zero(self.ring);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let n = a.len().max(b.len());
                let e = (0..n).map(|i| a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0)).collect();
                out.add_term(e, self.ring.mul(x, y));
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Poly {
        (0..k).fold(Self::constant(self.ring, self.ring.one()), |acc, _| acc.mul(self))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let vars: Vec<String> =
                    e.iter().enumerate().filter(|(_, &k)| k > 0).map(|(i, &k)| if k == 1 { format!("x{i}") } else { format!("x{i}^{k}") }).collect();
                if vars.is_empty() {
                    format_scalar(c)
                } else {
                    format!("{}·{}", format_scalar(c), vars.join(""))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `(1, c, c⊗c, …, c^{⊗(t-1)})`; the unit is the empty tensor.
#[derive(Clone, Debug)]
pub struct TruncatedDiagonalVector<B: Ord> {
    pub components: Vec<Chain<TensorN<B>>>,
}

impl<B: Ord + Clone + Graded> TruncatedDiagonalVector<B> {
    pub fn new(c: &Chain<B>, t: usize) -> Self {
        let ring = c.ring();
        let mut components = vec![Chain::basis(ring, TensorN(Vec::new()))];
        for _ in 1..t {
            let last = components.last().expect("nonempty");
            let mut next = Chain::zero(ring);
            for (TensorN(fs), x) in last.iter() {
                for (b, y) in c.iter() {
                    let mut g = fs.clone();
                    g.push(b.clone());
                    next.add_term(TensorN(g), ring.mul(x, y));
                }
            }
            components.push(next);
        }
        TruncatedDiagonalVector { components }
    }

    /// Sorts tensor factors into commutative monomials; `index` numbers the basis.
    pub fn symmetrize(&self, index: &BTreeMap<B, usize>) -> Vec<Poly> {
        self.components
            .iter()
            .map(|comp| {
                let mut p = Poly::zero(comp.ring());
                for (TensorN(fs), x) in comp.iter() {
                    let mut e = vec![0u32; index.len()];
                    for b in fs {
                        e[index[b]] += 1;
                    }
                    p.add_term(e, x.clone());
                }
                p
            })
            .collect()
    }
}

/// The linear form `f(c) = Σ c_b x_b`.
pub fn linear_form<B: Ord + Clone + Graded>(c: &Chain<B>, index: &BTreeMap<B, usize>) -> Poly {
    let mut p = Poly::zero(c.ring());
    for (b, x) in c.iter() {
        p = p.add(&Poly::variable(c.ring(), index[b]).scale(x));
    }
    p
}

fn basis_index<B: Ord + Clone + Graded>(cs: &[Chain<B>]) -> BTreeMap<B, usize> {
    let all: BTreeSet<B> = cs.iter().flat_map(|c| c.basis_elements().cloned()).collect();
    all.into_iter().enumerate().map(|(i, b)| (b, i)).collect()
}

fn check_inputs<B: Ord + Clone + Graded>(cs: &[Chain<B>], ring: Ring) -> Result<()> {
    if cs.is_empty() {
        return Err(Error::Precondition("need at least one chain".into()));
    }
    if cs.iter().any(|c| c.ring() != ring) {
        return Err(Error::Ring(format!("chains must be over {ring}")));
    }
    if cs.iter().any(Chain::is_zero) {
        return Err(Error::Precondition("zero chain in the tuple".into()));
    }
    let degree = cs[0].degree();
    if cs.iter().any(|c| c.degree() != degree) {
        return Err(Error::Degree("chains of different degrees".into()));
    }
    for (i, a) in cs.iter().enumerate() {
        if cs[..i].contains(a) {
            return Err(Error::Precondition(format!("chain {} repeats an earlier one", i + 1)));
        }
    }
    Ok(())
}

/// Whether `e(c_1), …, e(c_t)`, truncated at tensor power `t - 1` and symmetrized, are
/// linearly independent over `ring`, which must be a field.
pub fn vandermonde_independence<B: Ord + Clone + Graded>(cs: &[Chain<B>], ring: Ring) -> Result<bool> {
    if !ring.is_field() {
        return Err(Error::Ring(format!("{ring} is not a field")));
    }
    check_inputs(cs, ring)?;
    let t = cs.len();
    let index = basis_index(cs);
    let rows: Vec<Vec<Poly>> = cs.iter().map(|c| TruncatedDiagonalVector::new(c, t).symmetrize(&index)).collect();
    let monomials: BTreeSet<(usize, Vec<u32>)> =
        rows.iter().flat_map(|r| r.iter().enumerate().flat_map(|(j, p)| p.terms().map(move |(e, _)| (j, e.clone())))).collect();
    let matrix: Vec<Vec<Scalar>> = rows
        .iter()
        .map(|r| monomials.iter().map(|(j, e)| r[*j].terms.get(e).cloned().unwrap_or_else(|| ring.zero())).collect())
        .collect();
    Ok(linalg::rank(ring, &matrix, monomials.len()) == t)
}

/// `det M` for `M_{ji} = f(c_i)^j`, expanded symbolically, next to the product
/// `Π_{i<j} (f(c_i) - f(c_j))`.
pub fn vandermonde_determinant<B: Ord + Clone + Graded>(cs: &[Chain<B>], ring: Ring) -> Result<(Poly, Poly)> {
    check_inputs(cs, ring)?;
    let t = cs.len();
    let index = basis_index(cs);
    let f: Vec<Poly> = cs.iter().map(|c| linear_form(c, &index)).collect();
    let m: Vec<Vec<Poly>> = (0..t).map(|j| f.iter().map(|fi| fi.pow(j)).collect()).collect();
    let det = determinant(ring, &m);
    let mut product = Poly::constant(ring, ring.one());
    for i in 0..t {
        for j in i + 1..t {
            product = product.mul(&f[i].sub(&f[j]));
        }
    }
    Ok((det, product))
}

/// Leibniz expansion by cofactors along the first row.
fn determinant(ring: Ring, m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::constant(ring, ring.one());
    }
    let mut out = Poly::zero(ring);
    for (col, entry) in m[0].iter().enumerate() {
        let minor: Vec<Vec<Poly>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|(c, _)| *c != col).map(|(_, p)| p.clone()).collect()).collect();
        out = out.add(&entry.mul(&determinant(ring, &minor)).scale(&ring.sign(col)));
    }
    out
}

/// `t` distinct nonzero chains supported on `basis`, each with at most `support`
/// nonzero coefficients drawn from `-3..=3` and reduced into `ring`.
pub fn random_distinct_chains<B: Ord + Clone + Graded, R: Rng>(rng: &mut R, ring: Ring, basis: &[B], t: usize, support: usize) -> Vec<Chain<B>> {
    let mut out: Vec<Chain<B>> = Vec::with_capacity(t);
    while out.len() < t {
        let k = rng.gen_range(1..=support.min(basis.len()));
        let c = Chain::from_terms(ring, (0..k).map(|_| (basis[rng.gen_range(0..basis.len())].clone(), ring.from_int(rng.gen_range(-3..=3)))));
        if !c.is_zero() && !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex::Simplex;

    fn edge(a: u32, b: u32) -> Simplex {
        Simplex(vec![a, b])
    }

    #[test]
    fn symmetrized_powers_are_powers_of_the_linear_form() {
        let q = Ring::Rationals;
        let c = Chain::from_terms(q, [(edge(0, 1), q.from_int(2)), (edge(1, 2), q.from_int(-1))]);
        let index = basis_index(std::slice::from_ref(&c));
        let sym = TruncatedDiagonalVector::new(&c, 4).symmetrize(&index);
        let f = linear_form(&c, &index);
        for (j, p) in sym.iter().enumerate() {
            assert_eq!(*p, f.pow(j));
        }
    }

    #[test]
    fn single_nonzero_chain_is_independent() {
        let q = Ring::Rationals;
        assert!(vandermonde_independence(&[Chain::basis(q, edge(0, 1))], q).unwrap());
    }

    #[test]
    fn duplicates_are_a_precondition_error() {
        let q = Ring::Rationals;
        let c = Chain::basis(q, edge(0, 1));
        assert!(matches!(vandermonde_independence(&[c.clone(), c], q), Err(Error::Precondition(_))));
    }

    #[test]
    fn two_by_two_determinant() {
        let q = Ring::Rationals;
        let cs = [Chain::basis(q, edge(0, 1)), Chain::basis(q, edge(1, 2))];
        let (det, product) = vandermonde_determinant(&cs, q).unwrap();
        assert_eq!(det, product.scale(&q.from_int(-1)));
    }
}
