//! Finite formal linear combinations of basis elements.
//!
//! A [`Chain`] is kept canonical: terms sorted by basis order, no zero coefficients,
//! every coefficient reduced for the chain's ring. Structural equality is therefore
//! chain equality.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num::{One, Signed, Zero};

use crate::ring::{format_scalar, Ring, Scalar};

/// A basis element with a homological degree.
pub trait Graded {
    fn degree(&self) -> usize;
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Chain<B: Ord> {
    ring: Ring,
    terms: BTreeMap<B, Scalar>,
}

impl<B: Ord + Clone + Graded> Chain<B> {
    pub fn zero(ring: Ring) -> Self {
        Chain { ring, terms: BTreeMap::new() }
    }

    pub fn basis(ring: Ring, b: B) -> Self {
        Self::term(ring, b, ring.one())
    }

    pub fn term(ring: Ring, b: B, c: Scalar) -> Self {
        let mut out = Self::zero(ring);
        out.add_term(b, c);
        out
    }

    pub fn from_terms(ring: Ring, terms: impl IntoIterator<Item = (B, Scalar)>) -> Self {
        let mut out = Self::zero(ring);
        for (b, c) in terms {
            out.add_term(b, c);
        }
        out
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// Degree of the terms, `None` for the zero chain.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next().map(Graded::degree)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, B, Scalar> {
        self.terms.iter()
    }

    pub fn basis_elements(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    pub fn coeff(&self, b: &B) -> Scalar {
        self.terms.get(b).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Adds `c·b`. Panics if `b` has a different degree from the existing terms.
    pub fn add_term(&mut self, b: B, c: Scalar) {
        let c = self.ring.canon(c);
        if c.is_zero() {
            return;
        }
        if let Some(d) = self.degree() {
            assert_eq!(d, b.degree(), "adding terms of different degrees");
        }
        match self.terms.entry(b) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                let s = self.ring.add(e.get(), &c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// `self += c·other`.
    pub fn add_scaled(&mut self, other: &Chain<B>, c: &Scalar) {
        for (b, x) in other.iter() {
            self.add_term(b.clone(), self.ring.mul(x, c));
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.ring);
        out.add_scaled(self, c);
        out
    }

    /// Extends `f` linearly.
    pub fn map_linear<B2, F>(&self, mut f: F) -> Chain<B2>
    where
        B2: Ord + Clone + Graded,
        F: FnMut(&B) -> Chain<B2>,
    {
        let mut out = Chain::zero(self.ring);
        for (b, c) in self.iter() {
            out.add_scaled(&f(b), c);
        }
        out
    }

    /// Sends each basis element to a signed basis element, or drops it.
    pub fn map_terms<B2, F>(&self, mut f: F) -> Chain<B2>
    where
        B2: Ord + Clone + Graded,
        F: FnMut(&B) -> Option<(B2, Scalar)>,
    {
        let mut out = Chain::zero(self.ring);
        for (b, c) in self.iter() {
            if let Some((b2, s)) = f(b) {
                out.add_term(b2, self.ring.mul(c, &s));
            }
        }
        out
    }

    pub fn filter(&self, mut keep: impl FnMut(&B) -> bool) -> Self {
        Chain {
            ring: self.ring,
            terms: self.terms.iter().filter(|(b, _)| keep(b)).map(|(b, c)| (b.clone(), c.clone())).collect(),
        }
    }

    /// Reinterprets an integral chain over another ring.
    pub fn change_ring(&self, ring: Ring) -> Self {
        Chain::from_terms(ring, self.iter().map(|(b, c)| (b.clone(), c.clone())))
    }

    /// Largest absolute coefficient, zero for the zero chain.
    pub fn max_abs_coeff(&self) -> Scalar {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_else(Scalar::zero)
    }
}

impl<B: Ord + Clone + Graded> AddAssign<&Chain<B>> for Chain<B> {
    fn add_assign(&mut self, rhs: &Chain<B>) {
        self.add_scaled(rhs, &Scalar::one());
    }
}

impl<B: Ord + Clone + Graded> SubAssign<&Chain<B>> for Chain<B> {
    fn sub_assign(&mut self, rhs: &Chain<B>) {
        self.add_scaled(rhs, &-Scalar::one());
    }
}

impl<B: Ord + Clone + Graded> Add for &Chain<B> {
    type Output = Chain<B>;
    fn add(self, rhs: &Chain<B>) -> Chain<B> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<B: Ord + Clone + Graded> Sub for &Chain<B> {
    type Output = Chain<B>;
    fn sub(self, rhs: &Chain<B>) -> Chain<B> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<B: Ord + Clone + Graded> Add for Chain<B> {
    type Output = Chain<B>;
    fn add(mut self, rhs: Chain<B>) -> Chain<B> {
        self += &rhs;
        self
    }
}

impl<B: Ord + Clone + Graded> Sub for Chain<B> {
    type Output = Chain<B>;
    fn sub(mut self, rhs: Chain<B>) -> Chain<B> {
        self -= &rhs;
        self
    }
}

impl<B: Ord + Clone + Graded> Neg for &Chain<B> {
    type Output = Chain<B>;
    fn neg(self) -> Chain<B> {
        self.scale(&-Scalar::one())
    }
}

impl<B: Ord + Clone + Graded> Neg for Chain<B> {
    type Output = Chain<B>;
    fn neg(self) -> Chain<B> {
        -&self
    }
}

impl<B: Ord + Clone + Graded + fmt::Display> fmt::Display for Chain<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !mag.is_one() {
                write!(f, "{}·", format_scalar(&mag))?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// Elementary tensor `a ⊗ b`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tensor<A, B>(pub A, pub B);

impl<A: Graded, B: Graded> Graded for Tensor<A, B> {
    fn degree(&self) -> usize {
        self.0.degree() + self.1.degree()
    }
}

impl<A: fmt::Display, B: fmt::Display> fmt::Display for Tensor<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊗{}", self.0, self.1)
    }
}

/// Elementary tensor with any number of factors.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TensorN<A>(pub Vec<A>);

impl<A: Graded> Graded for TensorN<A> {
    fn degree(&self) -> usize {
        self.0.iter().map(Graded::degree).sum()
    }
}

impl<A: fmt::Display> fmt::Display for TensorN<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "⊗")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Bilinear tensor product of chains. No sign is introduced.
pub fn tensor<A, B>(x: &Chain<A>, y: &Chain<B>) -> Chain<Tensor<A, B>>
where
    A: Ord + Clone + Graded,
    B: Ord + Clone + Graded,
{
    let ring = x.ring();
    let mut out = Chain::zero(ring);
    for (a, c) in x.iter() {
        for (b, d) in y.iter() {
            out.add_term(Tensor(a.clone(), b.clone()), ring.mul(c, d));
        }
    }
    out
}

/// The Koszul swap `a⊗b ↦ (-1)^{|a||b|} b⊗a`.
pub fn koszul_swap<A>(x: &Chain<Tensor<A, A>>) -> Chain<Tensor<A, A>>
where
    A: Ord + Clone + Graded,
{
    let ring = x.ring();
    x.map_terms(|Tensor(a, b)| Some((Tensor(b.clone(), a.clone()), ring.sign(a.degree() * b.degree()))))
}

/// Permutes tensor factors with the Koszul sign. Factor `i` moves to position `perm[i]`.
pub fn permute_factors<A>(x: &Chain<TensorN<A>>, perm: &[usize]) -> Chain<TensorN<A>>
where
    A: Ord + Clone + Graded,
{
    let ring = x.ring();
    x.map_terms(|TensorN(fs)| {
        assert_eq!(fs.len(), perm.len(), "permutation arity");
        let mut out: Vec<Option<A>> = vec![None; fs.len()];
        let mut exponent = 0;
        for i in 0..fs.len() {
            for j in i + 1..fs.len() {
                if perm[i] > perm[j] {
                    exponent += fs[i].degree() * fs[j].degree();
                }
            }
            out[perm[i]] = Some(fs[i].clone());
        }
        let factors = out.into_iter().map(|a| a.expect("perm is a bijection")).collect();
        Some((TensorN(factors), ring.sign(exponent)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
    struct G(&'static str, usize);

    impl Graded for G {
        fn degree(&self) -> usize {
            self.1
        }
    }

    impl fmt::Display for G {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "{}", self.0)
        }
    }

    #[test]
    fn cancellation_removes_terms() {
        let z = Ring::Integers;
        let a = Chain::basis(z, G("a", 1));
        let sum = &a + &(-&a);
        assert!(sum.is_zero());
        assert_eq!(sum, Chain::zero(z));
    }

    #[test]
    fn characteristic_two_cancels() {
        let f2 = Ring::PrimeField(2);
        let a = Chain::basis(f2, G("a", 0));
        assert!((&a + &a).is_zero());
    }

    #[test]
    fn display_order_and_signs() {
        let z = Ring::Integers;
        let c = Chain::from_terms(z, [(G("b", 1), z.from_int(-2)), (G("a", 1), z.from_int(1))]);
        assert_eq!(c.to_string(), "a - 2·b");
    }

    #[test]
    fn swap_sign() {
        let z = Ring::Integers;
        let x = Chain::basis(z, Tensor(G("a", 1), G("b", 1)));
        assert_eq!(koszul_swap(&x), Chain::term(z, Tensor(G("b", 1), G("a", 1)), z.from_int(-1)));
        assert_eq!(koszul_swap(&koszul_swap(&x)), x);
    }

    #[test]
    #[should_panic(expected = "different degrees")]
    fn mixed_degrees_rejected() {
        let z = Ring::Integers;
        let mut c = Chain::basis(z, G("a", 1));
        c.add_term(G("b", 2), z.one());
    }
}
