//! Graded linear maps between free chain complexes.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::chain::{Chain, Graded, Tensor};
use crate::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::ring::{Ring, Scalar};

/// A linear map of fixed degree, stored by its values on the source basis.
///
/// Basis elements whose image would land in an unknown degree of the target carry no entry.
#[derive(Clone, Debug)]
pub struct GradedMap<A: Ord, B: Ord> {
    degree: isize,
    source: Arc<ChainComplex<A>>,
    target: Arc<ChainComplex<B>>,
    action: BTreeMap<A, Chain<B>>,
}

fn parity(d: isize) -> usize {
    d.unsigned_abs() % 2
}

impl<A, B> GradedMap<A, B>
where
    A: Ord + Clone + Graded,
    B: Ord + Clone + Graded,
{
    pub fn from_fn<F>(source: Arc<ChainComplex<A>>, target: Arc<ChainComplex<B>>, degree: isize, mut f: F) -> Result<Self>
    where
        F: FnMut(&A) -> Chain<B>,
    {
        let ring = target.ring();
        let mut action = BTreeMap::new();
        for n in 0..=source.truncation() {
            let m = n as isize + degree;
            if m < 0 || !target.knows_degree(m as usize) {
                continue;
            }
            for a in source.basis(n) {
                let image = f(a).change_ring(ring);
                if image.basis_elements().any(|b| !target.contains(b)) {
                    return Err(Error::Invalid(format!("image of a degree-{n} basis element leaves the target")));
                }
                if let Some(d) = image.degree() {
                    if d as isize != m {
                        return Err(Error::Degree(format!("map of degree {degree} sent degree {n} to degree {d}")));
                    }
                }
                action.insert(a.clone(), image);
            }
        }
        Ok(GradedMap { degree, source, target, action })
    }

    pub fn zero(source: Arc<ChainComplex<A>>, target: Arc<ChainComplex<B>>, degree: isize) -> Self {
        let ring = target.ring();
        Self::from_fn(source, target, degree, |_| Chain::zero(ring)).expect("zero map is well formed")
    }

    pub fn degree(&self) -> isize {
        self.degree
    }

    pub fn ring(&self) -> Ring {
        self.target.ring()
    }

    pub fn source(&self) -> &Arc<ChainComplex<A>> {
        &self.source
    }

    pub fn target(&self) -> &Arc<ChainComplex<B>> {
        &self.target
    }

    /// Basis elements on which the map is defined.
    pub fn domain(&self) -> impl Iterator<Item = &A> {
        self.action.keys()
    }

    pub fn is_defined_on(&self, a: &A) -> bool {
        self.action.contains_key(a)
    }

    pub fn apply_basis(&self, a: &A) -> Chain<B> {
        self.action.get(a).cloned().unwrap_or_else(|| Chain::zero(self.ring()))
    }

    pub fn apply(&self, x: &Chain<A>) -> Chain<B> {
        x.map_linear(|a| self.apply_basis(a))
    }

    /// `g ∘ f`, of degree `deg f + deg g`.
    pub fn then<C>(&self, g: &GradedMap<B, C>) -> Result<GradedMap<A, C>>
    where
        C: Ord + Clone + Graded,
    {
        if !Arc::ptr_eq(&self.target, &g.source) && !self.target.same_as(&g.source) {
            return Err(Error::Invalid("composing maps whose complexes do not match".into()));
        }
        let mut action = BTreeMap::new();
        for (a, fa) in &self.action {
            let fully_defined = fa.basis_elements().all(|b| g.is_defined_on(b));
            let target_degree = a.degree() as isize + self.degree + g.degree;
            if fully_defined && target_degree >= 0 && g.target.knows_degree(target_degree as usize) {
                action.insert(a.clone(), g.apply(fa));
            }
        }
        Ok(GradedMap { degree: self.degree + g.degree, source: self.source.clone(), target: g.target.clone(), action })
    }

    /// `∂f = f∘∂ - (-1)^{deg f} ∂∘f`.
    pub fn hom_differential(&self) -> GradedMap<A, B> {
        let ring = self.ring();
        let sign = ring.sign(parity(self.degree));
        let mut action = BTreeMap::new();
        for (a, fa) in &self.action {
            let da = self.source.boundary_of(a);
            if !da.basis_elements().all(|t| self.is_defined_on(t)) {
                continue;
            }
            let mut out = self.apply(&da);
            out.add_scaled(&self.target.boundary(fa), &ring.neg(&sign));
            action.insert(a.clone(), out);
        }
        GradedMap { degree: self.degree - 1, source: self.source.clone(), target: self.target.clone(), action }
    }

    pub fn is_zero(&self) -> bool {
        self.action.values().all(Chain::is_zero)
    }

    pub fn is_chain_map(&self) -> bool {
        self.hom_differential().is_zero()
    }

    /// `self + c·other` on the common domain.
    pub fn add_scaled(&self, other: &GradedMap<A, B>, c: &Scalar) -> Result<GradedMap<A, B>> {
        if self.degree != other.degree {
            return Err(Error::Degree(format!("adding maps of degrees {} and {}", self.degree, other.degree)));
        }
        let mut action = BTreeMap::new();
        for (a, fa) in &self.action {
            if let Some(ga) = other.action.get(a) {
                let mut s = fa.clone();
                s.add_scaled(ga, c);
                action.insert(a.clone(), s);
            }
        }
        Ok(GradedMap { degree: self.degree, source: self.source.clone(), target: self.target.clone(), action })
    }

    pub fn sub(&self, other: &GradedMap<A, B>) -> Result<GradedMap<A, B>> {
        let ring = self.ring();
        self.add_scaled(other, &ring.neg(&ring.one()))
    }

    /// Same degree and the same value on every basis element where both are defined,
    /// with both defined on the same basis elements.
    pub fn agrees_with(&self, other: &GradedMap<A, B>) -> bool {
        self.degree == other.degree && self.action == other.action
    }
}

impl<A> GradedMap<A, A>
where
    A: Ord + Clone + Graded,
{
    pub fn identity(c: Arc<ChainComplex<A>>) -> Self {
        let ring = c.ring();
        Self::from_fn(c.clone(), c, 0, |a| Chain::basis(ring, a.clone())).expect("identity is well formed")
    }
}

/// `(f⊗g)(x)` with the Koszul rule `(f⊗g)(a⊗b) = (-1)^{deg g·|a|} f(a)⊗g(b)`.
///
/// Fails if a term of `x` is not built from basis elements of the two sources.
pub fn tensor_map_apply<A1, A2, B1, B2>(
    f: &GradedMap<A1, A2>,
    g: &GradedMap<B1, B2>,
    x: &Chain<Tensor<A1, B1>>,
) -> Result<Chain<Tensor<A2, B2>>>
where
    A1: Ord + Clone + Graded,
    A2: Ord + Clone + Graded,
    B1: Ord + Clone + Graded,
    B2: Ord + Clone + Graded,
{
    let ring = f.ring();
    let mut out = Chain::zero(ring);
    for (Tensor(a, b), c) in x.iter() {
        if !f.source.contains(a) || !g.source.contains(b) {
            return Err(Error::Degree("tensor factor outside the source complexes".into()));
        }
        let sign = ring.sign(parity(g.degree) * a.degree());
        let coeff = ring.mul(c, &sign);
        for (fa, s) in f.apply_basis(a).iter() {
            for (gb, t) in g.apply_basis(b).iter() {
                out.add_term(Tensor(fa.clone(), gb.clone()), ring.mul(&coeff, &ring.mul(s, t)));
            }
        }
    }
    Ok(out)
}

/// `f⊗g` as a map between tensor complexes.
pub fn tensor_maps<A1, A2, B1, B2>(
    f: &GradedMap<A1, A2>,
    g: &GradedMap<B1, B2>,
    source: Arc<ChainComplex<Tensor<A1, B1>>>,
    target: Arc<ChainComplex<Tensor<A2, B2>>>,
) -> Result<GradedMap<Tensor<A1, B1>, Tensor<A2, B2>>>
where
    A1: Ord + Clone + Graded,
    A2: Ord + Clone + Graded,
    B1: Ord + Clone + Graded,
    B2: Ord + Clone + Graded,
{
    let ring = f.ring();
    let mut failure = None;
    let map = GradedMap::from_fn(source, target, f.degree + g.degree, |t| {
        tensor_map_apply(f, g, &Chain::basis(ring, t.clone())).unwrap_or_else(|e| {
            failure = Some(e);
            Chain::zero(ring)
        })
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(map),
    }
}
