//! The bar resolution `RS₂` of the trivial `S₂`-module, permutations with block
//! composition, and iterated coproducts built from operad compositions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::chain::{koszul_swap, Chain, Graded, Tensor, TensorN};
use crate::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::ring::Ring;

/// A free generator `g·e_n` of `RS₂`, `g ∈ {1, T}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BarElement {
    pub twisted: bool,
    pub level: usize,
}

impl BarElement {
    pub fn e(level: usize) -> Self {
        BarElement { twisted: false, level }
    }

    pub fn te(level: usize) -> Self {
        BarElement { twisted: true, level }
    }

    /// `T·self`.
    pub fn twist(self) -> Self {
        BarElement { twisted: !self.twisted, level: self.level }
    }
}

impl Graded for BarElement {
    fn degree(&self) -> usize {
        self.level
    }
}

impl fmt::Display for BarElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twisted {
            write!(f, "T·e{}", self.level)
        } else {
            write!(f, "e{}", self.level)
        }
    }
}

/// `∂(g·e_k) = g·e_{k-1} + (-1)^k gT·e_{k-1}`, and `∂e_0 = 0`.
pub fn bar_boundary(ring: Ring, b: BarElement) -> Chain<BarElement> {
    let mut out = Chain::zero(ring);
    if b.level > 0 {
        let lower = BarElement { twisted: b.twisted, level: b.level - 1 };
        out.add_term(lower, ring.one());
        out.add_term(lower.twist(), ring.sign(b.level));
    }
    out
}

/// `RS₂` through level `max_level`.
pub fn bar_resolution(ring: Ring, max_level: usize) -> ChainComplex<BarElement> {
    let basis = (0..=max_level).map(|n| vec![BarElement::e(n), BarElement::te(n)]).collect();
    ChainComplex::new(ring, basis, false, |b| bar_boundary(ring, *b)).expect("bar boundary stays in the resolution")
}

/// The action of `g ∈ S₂` on `C ⊗ C`: identity or the Koszul swap.
pub fn twist_act<A: Ord + Clone + Graded>(twisted: bool, c: &Chain<Tensor<A, A>>) -> Chain<Tensor<A, A>> {
    if twisted {
        koszul_swap(c)
    } else {
        c.clone()
    }
}

/// A permutation of `{0, …, n-1}`, stored as its list of images.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Invalid(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation(images))
    }

    /// From images written `1..=n`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::Invalid("one-based images cannot contain 0".into()));
        }
        Self::new(images.iter().map(|i| i - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.arity() != other.arity() {
            return Err(Error::Invalid("composing permutations of different arity".into()));
        }
        Ok(Permutation(other.0.iter().map(|&i| self.0[i]).collect()))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.arity()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    /// `(-1)` to the number of inversions.
    pub fn is_odd(&self) -> bool {
        let n = self.arity();
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| self.0[i] > self.0[j]).count() % 2 == 1
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().enumerate().map(|(i, j)| format!("{}↦{}", i + 1, j + 1)).collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Operadic composition in the associative-permutation operad:
/// `σ(θ_1, …, θ_n) = T_{(|θ_1|,…,|θ_n|)}(σ) ∘ (θ_1 ⊕ ⋯ ⊕ θ_n)`,
/// where `T(σ)` moves block `i` to block position `σ(i)` keeping its internal order.
pub fn block_compose(sigma: &Permutation, thetas: &[Permutation]) -> Result<Permutation> {
    if sigma.arity() != thetas.len() {
        return Err(Error::Invalid(format!("σ has arity {} but {} blocks were given", sigma.arity(), thetas.len())));
    }
    let sizes: Vec<usize> = thetas.iter().map(Permutation::arity).collect();
    let mut block_of_slot = vec![0; sizes.len()];
    for (i, &s) in sigma.0.iter().enumerate() {
        block_of_slot[s] = i;
    }
    let mut new_offset = vec![0; sizes.len()];
    let mut acc = 0;
    for &b in &block_of_slot {
        new_offset[b] = acc;
        acc += sizes[b];
    }
    let mut images = Vec::with_capacity(acc);
    for (b, theta) in thetas.iter().enumerate() {
        for r in 0..theta.arity() {
            images.push(new_offset[b] + theta.apply(r));
        }
    }
    Permutation::new(images)
}

/// Coproducts `Δ_b: C → C ⊗ C` of degree `b.level`, indexed by bar generators.
pub trait Coproduct {
    type Cell: Ord + Clone + Graded;

    fn ring(&self) -> Ring;

    fn coproduct(&self, b: BarElement, x: &Self::Cell) -> Chain<Tensor<Self::Cell, Self::Cell>>;
}

/// A composite coproduct: start with `base`, then for each step `(slot, y)` apply
/// `Δ_y` to the tensor factor at `slot` (zero-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recipe {
    pub base: BarElement,
    pub steps: Vec<(usize, BarElement)>,
}

impl Recipe {
    /// `y ∘_1 y ∘_1 ⋯ ∘_1 y` with `k - 1` copies, giving a `k`-fold coproduct.
    pub fn first_slot_iterate(y: BarElement, k: usize) -> Self {
        Recipe { base: y, steps: vec![(0, y); k.saturating_sub(2)] }
    }

    pub fn arity(&self) -> usize {
        self.steps.len() + 2
    }
}

/// `Δ_recipe(x)` with Koszul signs for passing `Δ_y` across earlier factors.
pub fn iterated_coproduct<C: Coproduct>(c: &C, recipe: &Recipe, x: &Chain<C::Cell>) -> Result<Chain<TensorN<C::Cell>>> {
    let ring = c.ring();
    let mut current: Chain<TensorN<C::Cell>> =
        x.map_linear(|a| c.coproduct(recipe.base, a).map_terms(|Tensor(l, r)| Some((TensorN(vec![l.clone(), r.clone()]), ring.one()))));
    for (step, &(slot, y)) in recipe.steps.iter().enumerate() {
        if slot >= step + 2 {
            return Err(Error::Invalid(format!("slot {slot} does not exist at step {step}")));
        }
        let mut next = Chain::zero(ring);
        for (TensorN(fs), coeff) in current.iter() {
            let before: usize = fs[..slot].iter().map(Graded::degree).sum();
            let sign = ring.sign(y.level * before);
            for (Tensor(l, r), d) in c.coproduct(y, &fs[slot]).iter() {
                let mut factors = fs[..slot].to_vec();
                factors.push(l.clone());
                factors.push(r.clone());
                factors.extend_from_slice(&fs[slot + 1..]);
                next.add_term(TensorN(factors), ring.mul(&ring.mul(coeff, d), &sign));
            }
        }
        current = next;
    }
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_of_e1() {
        let z = Ring::Integers;
        let d = bar_boundary(z, BarElement::e(1));
        assert_eq!(d, Chain::from_terms(z, [(BarElement::e(0), z.one()), (BarElement::te(0), z.from_int(-1))]));
        assert!(bar_boundary(z, BarElement::e(0)).is_zero());
    }

    #[test]
    fn resolution_is_a_complex() {
        assert_eq!(bar_resolution(Ring::Integers, 8).check_d_squared(), Ok(()));
    }

    #[test]
    fn block_composition_example() {
        let swap = Permutation::from_one_based(&[2, 1]).unwrap();
        let id1 = Permutation::identity(1);
        let r = block_compose(&swap, &[id1.clone(), Permutation::identity(2)]).unwrap();
        assert_eq!(r, Permutation::from_one_based(&[3, 1, 2]).unwrap());
        assert_eq!(block_compose(&swap, &[id1.clone(), id1]).unwrap(), swap);
    }

    #[test]
    fn block_composition_with_identity() {
        let theta = Permutation::from_one_based(&[2, 3, 1]).unwrap();
        let id = Permutation::identity(1);
        assert_eq!(block_compose(&id, std::slice::from_ref(&theta)).unwrap(), theta);
        assert_eq!(block_compose(&theta, &[id.clone(), id.clone(), id]).unwrap(), theta);
    }
}
