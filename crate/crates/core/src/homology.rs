//! Homology and cohomology of free chain complexes.

use std::fmt;

use crate::chain::{Chain, Graded};
use crate::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::linalg::{self, diagonalize, mat_mul, mat_vec, Domain, Mat};
use crate::ring::{format_scalar, Ring, Scalar};
use crate::with_domain;

/// A subquotient `ker(out) / im(in)` of a free module with a chosen presentation.
///
/// `generators` are vectors in the ambient basis; the first `torsion.len()` have the
/// listed finite orders, the rest are free.
#[derive(Clone, Debug)]
pub struct Subquotient {
    pub ring: Ring,
    pub torsion: Vec<Scalar>,
    pub free_rank: usize,
    pub generators: Vec<Vec<Scalar>>,
    kernel_coords: Vec<Vec<Scalar>>,
    change: Vec<Vec<Scalar>>,
    skip: usize,
}

impl Subquotient {
    /// `out: F → G` and `inc: H → F`, given as row-major matrices, with `out ∘ inc = 0`.
    pub fn compute(ring: Ring, ambient: usize, out: &[Vec<Scalar>], inc: &[Vec<Scalar>], inc_cols: usize) -> Result<Self> {
        with_domain!(ring, d => subquotient_in(d, ring, ambient, out, inc, inc_cols))
    }

    /// Total number of generators.
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Coordinates of a kernel element in terms of `generators`. Torsion coordinates are
    /// reduced modulo their order. The input is assumed to lie in the kernel.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        with_domain!(self.ring, d => {
            let kc: Mat<_> = self.kernel_coords.iter().map(|r| r.iter().map(|x| d.from_scalar(x)).collect()).collect();
            let ch: Mat<_> = self.change.iter().map(|r| r.iter().map(|x| d.from_scalar(x)).collect()).collect();
            let vv: Vec<_> = v.iter().map(|x| d.from_scalar(x)).collect();
            let y = mat_vec(d, &kc, &vv);
            let z = mat_vec(d, &ch, &y);
            let mut out = Vec::with_capacity(self.len());
            for (i, x) in z.iter().enumerate().skip(self.skip) {
                let k = i - self.skip;
                if k < self.torsion.len() {
                    let order = d.from_scalar(&self.torsion[k]);
                    out.push(d.to_scalar(&d.div_rem(x, &order).1));
                } else {
                    out.push(d.to_scalar(x));
                }
            }
            Ok(out)
        })
    }
}

fn subquotient_in<D: Domain>(
    d: &D,
    ring: Ring,
    ambient: usize,
    out: &[Vec<Scalar>],
    inc: &[Vec<Scalar>],
    inc_cols: usize,
) -> Result<Subquotient> {
    let conv = |m: &[Vec<Scalar>]| -> Mat<D::E> { m.iter().map(|r| r.iter().map(|x| d.from_scalar(x)).collect()).collect() };
    let out_m = conv(out);
    let inc_m = conv(inc);
    let dg = diagonalize(d, &out_m, ambient);
    let r = dg.rank();
    let k = ambient - r;
    // rows r.. of Q^{-1} give coordinates on the kernel basis (columns r.. of Q)
    let kernel_coords: Mat<D::E> = dg.q_inv[r..].to_vec();
    let kernel_basis: Mat<D::E> = (r..ambient).map(|j| dg.q.iter().map(|row| row[j].clone()).collect()).collect();
    let image = mat_mul(d, &kernel_coords, &inc_m, ambient, inc_cols);
    // the image must lie in the kernel
    if inc_cols > 0 && !out_m.is_empty() {
        let composite = mat_mul(d, &out_m, &inc_m, ambient, inc_cols);
        if composite.iter().flatten().any(|x| !d.is_zero(x)) {
            return Err(Error::Invalid("boundary squared is not zero".into()));
        }
    }
    let dg2 = diagonalize(d, &image, inc_cols);
    let skip = dg2.diagonal.iter().take_while(|x| d.is_unit(x)).count();
    let torsion: Vec<Scalar> = dg2.diagonal[skip..].iter().map(|x| d.to_scalar(x)).collect();
    let free_rank = k - dg2.rank();
    // generators in the ambient basis: kernel_basis^T · P2^{-1}, column by column
    let generators = (skip..k)
        .map(|i| {
            (0..ambient)
                .map(|a| (0..k).fold(d.zero(), |acc, j| d.add(&acc, &d.mul(&kernel_basis[j][a], &dg2.p_inv[j][i]))))
                .map(|x| d.to_scalar(&x))
                .collect()
        })
        .collect();
    let back = |m: &Mat<D::E>| -> Vec<Vec<Scalar>> { m.iter().map(|r| r.iter().map(|x| d.to_scalar(x)).collect()).collect() };
    Ok(Subquotient {
        ring,
        torsion,
        free_rank,
        generators,
        kernel_coords: back(&kernel_coords),
        change: back(&dg2.p),
        skip,
    })
}

/// `H_n(C)` with cycle representatives.
#[derive(Clone, Debug)]
pub struct HomologyGroup<B: Ord> {
    pub degree: usize,
    pub data: Subquotient,
    pub representatives: Vec<Chain<B>>,
}

impl<B: Ord + Clone + Graded> HomologyGroup<B> {
    pub fn free_rank(&self) -> usize {
        self.data.free_rank
    }

    pub fn torsion(&self) -> &[Scalar] {
        &self.data.torsion
    }

    /// Coordinates of a cycle on the representatives.
    pub fn coordinates(&self, complex: &ChainComplex<B>, cycle: &Chain<B>) -> Result<Vec<Scalar>> {
        if !complex.boundary(cycle).is_zero() {
            return Err(Error::Precondition("not a cycle".into()));
        }
        self.data.coordinates(&complex.vector(self.degree, cycle))
    }
}

impl<B: Ord> fmt::Display for HomologyGroup<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_group(f, self.data.ring, self.data.free_rank, &self.data.torsion)
    }
}

fn write_group(f: &mut fmt::Formatter<'_>, ring: Ring, free: usize, torsion: &[Scalar]) -> fmt::Result {
    let mut parts = Vec::new();
    if free > 0 {
        parts.push(if free == 1 { ring.to_string() } else { format!("{ring}^{free}") });
    }
    for t in torsion {
        parts.push(format!("{ring}/{}", format_scalar(t)));
    }
    if parts.is_empty() {
        write!(f, "0")
    } else {
        write!(f, "{}", parts.join(" + "))
    }
}

fn check_known<B: Ord + Clone + Graded>(c: &ChainComplex<B>, n: usize) -> Result<()> {
    if c.knows_degree(n + 1) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("degree {n} needs degree {} which is beyond the truncation {}", n + 1, c.truncation())))
    }
}

/// `H_n` over the complex's ring: Smith normal form over Z, elimination over a field.
pub fn homology<B: Ord + Clone + Graded>(c: &ChainComplex<B>, n: usize) -> Result<HomologyGroup<B>> {
    check_known(c, n)?;
    let data = Subquotient::compute(c.ring(), c.rank(n), &c.boundary_matrix(n), &c.boundary_matrix(n + 1), c.rank(n + 1))?;
    let representatives = data.generators.iter().map(|v| c.chain_from_vector(n, v)).collect();
    Ok(HomologyGroup { degree: n, data, representatives })
}

/// `H^n = ker δ^n / im δ^{n-1}` for cochains valued in the ring, cochains written as
/// vectors on the degree-`n` basis.
#[derive(Clone, Debug)]
pub struct CohomologyGroup {
    pub degree: usize,
    pub data: Subquotient,
}

impl CohomologyGroup {
    pub fn dimension(&self) -> usize {
        self.data.len()
    }
}

impl fmt::Display for CohomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_group(f, self.data.ring, self.data.free_rank, &self.data.torsion)
    }
}

pub fn cohomology<B: Ord + Clone + Graded>(c: &ChainComplex<B>, n: usize) -> Result<CohomologyGroup> {
    check_known(c, n)?;
    let delta_out = linalg::transpose(&c.boundary_matrix(n + 1), c.rank(n + 1));
    let delta_in = linalg::transpose(&c.boundary_matrix(n), c.rank(n));
    let in_cols = if n == 0 { 0 } else { c.rank(n - 1) };
    let data = Subquotient::compute(c.ring(), c.rank(n), &delta_out, &delta_in, in_cols)?;
    Ok(CohomologyGroup { degree: n, data })
}

/// Ranks and torsion of `H_n` for all computable degrees up to `max_degree`.
pub fn homology_summary<B: Ord + Clone + Graded>(c: &ChainComplex<B>, max_degree: usize) -> Result<Vec<(usize, Vec<Scalar>)>> {
    (0..=max_degree)
        .take_while(|&n| c.knows_degree(n + 1))
        .map(|n| homology(c, n).map(|h| (h.free_rank(), h.torsion().to_vec())))
        .collect()
}

/// Reduced homology ranks: drops one free summand in degree 0.
pub fn reduce_summary(mut s: Vec<(usize, Vec<Scalar>)>) -> Vec<(usize, Vec<Scalar>)> {
    if let Some(first) = s.first_mut() {
        first.0 = first.0.saturating_sub(1);
    }
    s
}
