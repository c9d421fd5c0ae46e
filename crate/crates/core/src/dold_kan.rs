//! Truncated Dold-Kan machinery: simplicial abelian groups given on free bases, their
//! Moore and normalized complexes, the functor `Γ`, the free simplicial abelian groups
//! `RX` and `R̃X`, the Hurewicz map and `γ_X`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::chain::{Chain, Graded};
use crate::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::graded_map::GradedMap;
use crate::linalg;
use crate::ring::{format_scalar, Ring, Scalar};
use crate::simplicial::{epi_mono, CellId, Simplicial, SimplicialSet, Surjection};

/// A degreewise free simplicial module through a truncation, with faces and
/// degeneracies given on basis elements. Degeneracies leave the top level undefined.
#[derive(Clone, Debug)]
pub struct SimplicialAbelianGroup<B: Ord> {
    ring: Ring,
    basis: Vec<Vec<B>>,
    faces: BTreeMap<B, Vec<Chain<B>>>,
    degeneracies: BTreeMap<B, Vec<Chain<B>>>,
}

impl<B: Ord + Clone + Graded + fmt::Display> SimplicialAbelianGroup<B> {
    /// Builds the object and checks every simplicial identity that stays inside the truncation.
    pub fn new<F, G>(ring: Ring, basis: Vec<Vec<B>>, mut face: F, mut degeneracy: G) -> Result<Self>
    where
        F: FnMut(&B, usize) -> Chain<B>,
        G: FnMut(&B, usize) -> Chain<B>,
    {
        let top = basis.len().saturating_sub(1);
        let mut faces = BTreeMap::new();
        let mut degeneracies = BTreeMap::new();
        for (m, level) in basis.iter().enumerate() {
            for b in level {
                if b.degree() != m {
                    return Err(Error::Degree(format!("{b} listed in level {m}")));
                }
                if m > 0 {
                    faces.insert(b.clone(), (0..=m).map(|i| face(b, i).change_ring(ring)).collect());
                }
                if m < top {
                    degeneracies.insert(b.clone(), (0..=m).map(|i| degeneracy(b, i).change_ring(ring)).collect());
                }
            }
        }
        let a = SimplicialAbelianGroup { ring, basis, faces, degeneracies };
        a.check_identities()?;
        Ok(a)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn truncation(&self) -> usize {
        self.basis.len().saturating_sub(1)
    }

    pub fn basis(&self, m: usize) -> &[B] {
        self.basis.get(m).map_or(&[], Vec::as_slice)
    }

    pub fn rank(&self, m: usize) -> usize {
        self.basis(m).len()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.basis.iter().map(Vec::len).collect()
    }

    pub fn face_of(&self, b: &B, i: usize) -> Chain<B> {
        self.faces[b][i].clone()
    }

    pub fn face(&self, x: &Chain<B>, i: usize) -> Chain<B> {
        x.map_linear(|b| self.face_of(b, i))
    }

    /// `s_i x`; `None` at the top level.
    pub fn degeneracy(&self, x: &Chain<B>, i: usize) -> Option<Chain<B>> {
        let mut out = Chain::zero(self.ring);
        for (b, c) in x.iter() {
            out.add_scaled(self.degeneracies.get(b)?.get(i)?, c);
        }
        Some(out)
    }

    fn vector(&self, m: usize, x: &Chain<B>) -> Vec<Scalar> {
        self.basis(m).iter().map(|b| x.coeff(b)).collect()
    }

    fn check_identities(&self) -> Result<()> {
        let fail = |what: &str, b: &B| Err(Error::Invalid(format!("simplicial identity {what} fails on {b}")));
        let top = self.truncation();
        let members: BTreeSet<&B> = self.basis.iter().flatten().collect();
        for m in 0..=top {
            for b in self.basis(m) {
                if let Some(bad) = self.misplaced(&members, m, b) {
                    return fail(bad, b);
                }
                let x = Chain::basis(self.ring, b.clone());
                if m >= 2 {
                    for j in 0..=m {
                        for i in 0..j {
                            if self.face(&self.face(&x, j), i) != self.face(&self.face(&x, i), j - 1) {
                                return fail(&format!("d{i}d{j} = d{}d{i}", j - 1), b);
                            }
                        }
                    }
                }
                if m < top {
                    for j in 0..=m {
                        let sj = self.degeneracy(&x, j).expect("below the top level");
                        for i in 0..=m + 1 {
                            let lhs = self.face(&sj, i);
                            let rhs = if i < j {
                                self.degeneracy(&self.face(&x, i), j - 1)
                            } else if i == j || i == j + 1 {
                                Some(x.clone())
                            } else {
                                self.degeneracy(&self.face(&x, i - 1), j)
                            };
                            if rhs.is_some_and(|r| r != lhs) {
                                return fail(&format!("d{i}s{j}"), b);
                            }
                        }
                    }
                }
                if m + 2 <= top {
                    for j in 0..=m {
                        for i in 0..=j {
                            let lhs = self.degeneracy(&self.degeneracy(&x, j).expect("defined"), i).expect("defined");
                            let rhs = self.degeneracy(&self.degeneracy(&x, i).expect("defined"), j + 1).expect("defined");
                            if lhs != rhs {
                                return fail(&format!("s{i}s{j} = s{}s{i}", j + 1), b);
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn misplaced(&self, members: &BTreeSet<&B>, m: usize, b: &B) -> Option<&'static str> {
        let off = |c: &Chain<B>, level: usize| c.basis_elements().any(|t| t.degree() != level || !members.contains(t));
        if m > 0 && self.faces[b].iter().any(|c| off(c, m - 1)) {
            return Some("faces land one level down");
        }
        if self.degeneracies.get(b).is_some_and(|ds| ds.iter().any(|c| off(c, m + 1))) {
            return Some("degeneracies land one level up");
        }
        None
    }

    /// Matrix of `d_i: A_m → A_{m-1}`, rows indexed by level `m - 1`.
    pub fn face_matrix(&self, m: usize, i: usize) -> Vec<Vec<Scalar>> {
        let cols: Vec<Vec<Scalar>> = self.basis(m).iter().map(|b| self.vector(m - 1, &self.face_of(b, i))).collect();
        linalg::transpose(&cols, self.rank(m - 1))
    }
}

/// The Moore complex: level `n` in degree `n`, `∂ = Σ (-1)^i d_i`.
pub fn moore_complex<B: Ord + Clone + Graded + fmt::Display>(a: &SimplicialAbelianGroup<B>) -> ChainComplex<B> {
    let ring = a.ring;
    ChainComplex::new(ring, a.basis.clone(), false, |b| {
        let mut out = Chain::zero(ring);
        for i in 0..=b.degree() {
            out.add_scaled(&a.face_of(b, i), &ring.sign(i));
        }
        out
    })
    .expect("faces land one level down")
}

/// `NA_n = ⋂_{i<n} ker d_i` with `∂ = (-1)^n d_n`, and the inclusion of each generator.
#[derive(Clone, Debug)]
pub struct Normalized<B: Ord> {
    pub complex: ChainComplex<CellId>,
    pub inclusion: Vec<Vec<Chain<B>>>,
}

pub fn normalized<B: Ord + Clone + Graded + fmt::Display>(a: &SimplicialAbelianGroup<B>) -> Result<Normalized<B>> {
    let ring = a.ring;
    let mut kernels: Vec<Vec<Vec<Scalar>>> = Vec::new();
    for n in 0..=a.truncation() {
        let k = if n == 0 {
            (0..a.rank(0)).map(|j| (0..a.rank(0)).map(|r| if r == j { ring.one() } else { ring.zero() }).collect()).collect()
        } else {
            let stacked: Vec<Vec<Scalar>> = (0..n).flat_map(|i| a.face_matrix(n, i)).collect();
            linalg::kernel(ring, &stacked, a.rank(n))
        };
        kernels.push(k);
    }
    let inclusion: Vec<Vec<Chain<B>>> = kernels
        .iter()
        .enumerate()
        .map(|(n, ks)| ks.iter().map(|v| Chain::from_terms(ring, a.basis(n).iter().cloned().zip(v.iter().cloned()))).collect())
        .collect();
    let basis: Vec<Vec<CellId>> = kernels.iter().enumerate().map(|(n, ks)| (0..ks.len()).map(|i| CellId::new(n, i)).collect()).collect();
    let mut failure = None;
    let complex = ChainComplex::new(ring, basis, false, |g| {
        let n = g.dim;
        let image = a.face(&inclusion[n][g.index], n).scale(&ring.sign(n));
        let columns = linalg::transpose(&kernels[n - 1], a.rank(n - 1));
        match linalg::solve(ring, &columns, kernels[n - 1].len(), &a.vector(n - 1, &image)) {
            Some(x) => Chain::from_terms(ring, x.into_iter().enumerate().map(|(i, c)| (CellId::new(n - 1, i), c))),
            None => {
                failure = Some(n);
                Chain::zero(ring)
            }
        }
    })?;
    if let Some(n) = failure {
        return Err(Error::Invalid(format!("(-1)^n d_n does not preserve the normalized subgroup in degree {n}")));
    }
    Ok(Normalized { complex, inclusion })
}

/// A generator `(σ, c)` of `Γ(C)_m`: a surjection `σ: [m] ↠ [n]` and a basis element of `C_n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GammaCell<B> {
    pub surjection: Surjection,
    pub cell: B,
}

impl<B> Graded for GammaCell<B> {
    fn degree(&self) -> usize {
        self.surjection.source_dim()
    }
}

impl<B: fmt::Display> fmt::Display for GammaCell<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·{}", self.surjection, self.cell)
    }
}

/// `θ^*(σ, c)` for a monotone `θ` given by its values: factor `σθ = δτ`; the result is
/// `(τ, c)` when `δ` is the identity, `(τ, (-1)^n ∂c)` when `δ` is the last coface,
/// and zero otherwise.
fn gamma_act<B: Ord + Clone + Graded>(c: &ChainComplex<B>, x: &GammaCell<B>, theta: &[usize]) -> Chain<GammaCell<B>> {
    let ring = c.ring();
    let sigma = x.surjection.to_map();
    let composite: Vec<usize> = theta.iter().map(|&j| sigma[j]).collect();
    let (tau, image) = epi_mono(&composite);
    let n = x.surjection.target_dim();
    let covers = |len: usize| image.len() == len && image.iter().enumerate().all(|(i, &v)| i == v);
    if covers(n + 1) {
        Chain::basis(ring, GammaCell { surjection: tau, cell: x.cell.clone() })
    } else if n > 0 && covers(n) {
        c.boundary_of(&x.cell)
            .scale(&ring.sign(n))
            .map_terms(|y| Some((GammaCell { surjection: tau.clone(), cell: y.clone() }, ring.one())))
    } else {
        Chain::zero(ring)
    }
}

/// `Γ(C)` through `truncation`, with the identity summand listed first in each level.
pub fn gamma<B: Ord + Clone + Graded + fmt::Display>(c: &ChainComplex<B>, truncation: usize) -> Result<SimplicialAbelianGroup<GammaCell<B>>> {
    if !c.knows_degree(truncation) {
        return Err(Error::Precondition(format!("Γ through level {truncation} needs C through degree {truncation}")));
    }
    let basis: Vec<Vec<GammaCell<B>>> = (0..=truncation)
        .map(|m| {
            (0..=m)
                .rev()
                .flat_map(|n| Surjection::all(m, n).into_iter().flat_map(move |s| c.basis(n).iter().map(move |b| GammaCell { surjection: s.clone(), cell: b.clone() })))
                .collect()
        })
        .collect();
    SimplicialAbelianGroup::new(
        c.ring(),
        basis,
        |x, i| {
            let theta: Vec<usize> = (0..x.degree()).map(|j| if j < i { j } else { j + 1 }).collect();
            gamma_act(c, x, &theta)
        },
        |x, i| {
            let theta: Vec<usize> = (0..=x.degree() + 1).map(|j| if j <= i { j } else { j - 1 }).collect();
            gamma_act(c, x, &theta)
        },
    )
}

/// `NΓC ≅ C`: the identity summand of `Γ(C)_n` is exactly `⋂_{i<n} ker d_i`, and
/// `(-1)^n d_n (id, c) = (id, ∂c)`.
pub fn check_normalized_gamma<B: Ord + Clone + Graded + fmt::Display>(c: &ChainComplex<B>, truncation: usize) -> Result<bool> {
    let g = gamma(c, truncation)?;
    let ring = c.ring();
    let id_cell = |n: usize, b: &B| GammaCell { surjection: Surjection::identity(n), cell: b.clone() };
    for n in 0..=truncation {
        if n > 0 {
            let stacked: Vec<Vec<Scalar>> = (0..n).flat_map(|i| g.face_matrix(n, i)).collect();
            let kernel = linalg::kernel(ring, &stacked, g.rank(n));
            if kernel.len() != c.rank(n) {
                return Ok(false);
            }
            let outside = c.rank(n)..g.rank(n);
            if kernel.iter().any(|v| outside.clone().any(|j| v[j] != ring.zero())) {
                return Ok(false);
            }
        }
        for b in c.basis(n) {
            let x = Chain::basis(ring, id_cell(n, b));
            if (0..n).any(|i| !g.face(&x, i).is_zero()) {
                return Ok(false);
            }
            if n > 0 {
                let d = g.face(&x, n).scale(&ring.sign(n));
                let expected = c.boundary_of(b).map_terms(|y| Some((id_cell(n - 1, y), ring.one())));
                if d != expected {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Whether `(f, v) ↦ f^*(v)` is an isomorphism of simplicial modules `Γ(NA) → A`
/// through the truncation.
pub fn check_gamma_of_normalized<B: Ord + Clone + Graded + fmt::Display>(a: &SimplicialAbelianGroup<B>) -> Result<bool> {
    let ring = a.ring;
    let n = normalized(a)?;
    let g = gamma(&n.complex, a.truncation())?;
    let phi = |x: &GammaCell<CellId>| -> Chain<B> {
        let mut y = n.inclusion[x.cell.dim][x.cell.index].clone();
        for &i in x.surjection.word().iter().rev() {
            y = a.degeneracy(&y, i).expect("inside the truncation");
        }
        y
    };
    let phi_chain = |x: &Chain<GammaCell<CellId>>| x.map_linear(phi);
    for m in 0..=a.truncation() {
        if g.rank(m) != a.rank(m) {
            return Ok(false);
        }
        let columns: Vec<Vec<Scalar>> = g.basis(m).iter().map(|x| a.vector(m, &phi(x))).collect();
        if !linalg::is_invertible(ring, &linalg::transpose(&columns, a.rank(m)), g.rank(m)) {
            return Ok(false);
        }
        for x in g.basis(m) {
            let xc = Chain::basis(ring, x.clone());
            if m > 0 && (0..=m).any(|i| phi_chain(&g.face(&xc, i)) != a.face(&phi(x), i)) {
                return Ok(false);
            }
            if m < a.truncation() && (0..=m).any(|i| g.degeneracy(&xc, i).map(|y| phi_chain(&y)) != a.degeneracy(&phi(x), i)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `RX`: the free module on the cells of `x` in each level.
pub fn free_simplicial_abelian(x: &SimplicialSet, ring: Ring) -> SimplicialAbelianGroup<CellId> {
    let basis = (0..=x.truncation()).map(|m| x.cells(m).collect()).collect();
    SimplicialAbelianGroup::new(
        ring,
        basis,
        |b, i| Chain::basis(ring, x.face(b, i)),
        |b, i| Chain::basis(ring, x.degeneracy(b, i).expect("below the top level")),
    )
    .expect("simplicial identities were validated on the set")
}

fn require_reduced(x: &SimplicialSet) -> Result<Vec<CellId>> {
    let base = x.basepoint_cells().ok_or_else(|| Error::Precondition(format!("{} has no basepoint", x.name())))?;
    if !x.is_reduced() {
        return Err(Error::Precondition(format!("{} is not reduced", x.name())));
    }
    Ok(base)
}

/// `R̃X = RX / R*`: basepoint cells are dropped and faces landing on them vanish.
pub fn reduced_free_simplicial_abelian(x: &SimplicialSet, ring: Ring) -> Result<SimplicialAbelianGroup<CellId>> {
    let base = require_reduced(x)?;
    let keep = |c: CellId| if base[c.dim] == c { Chain::zero(ring) } else { Chain::basis(ring, c) };
    let basis = (0..=x.truncation()).map(|m| x.cells(m).filter(|c| *c != base[m]).collect()).collect();
    SimplicialAbelianGroup::new(ring, basis, |b, i| keep(x.face(b, i)), |b, i| keep(x.degeneracy(b, i).expect("below the top level")))
}

/// A simplex of `R̃X`: a linear combination of non-basepoint cells of one dimension.
/// The empty combination is the basepoint.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RSimplex {
    pub dim: usize,
    pub combo: Vec<(CellId, Scalar)>,
}

impl RSimplex {
    pub fn from_chain(dim: usize, c: &Chain<CellId>) -> Self {
        RSimplex { dim, combo: c.iter().map(|(b, x)| (*b, x.clone())).collect() }
    }

    pub fn to_chain(&self, ring: Ring) -> Chain<CellId> {
        Chain::from_terms(ring, self.combo.iter().cloned())
    }

    pub fn is_basepoint(&self) -> bool {
        self.combo.is_empty()
    }
}

impl Graded for RSimplex {
    fn degree(&self) -> usize {
        self.dim
    }
}

impl fmt::Display for RSimplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.combo.is_empty() {
            return write!(f, "*{}", self.dim);
        }
        let parts: Vec<String> = self.combo.iter().map(|(c, x)| format!("{}{c}", format_scalar(x))).collect();
        write!(f, "({})", parts.join("+"))
    }
}

/// `R̃X` as a simplicial set whose simplices are combinations.
pub struct ReducedFree<'a> {
    x: &'a SimplicialSet,
    ring: Ring,
    base: Vec<CellId>,
}

impl<'a> ReducedFree<'a> {
    pub fn new(x: &'a SimplicialSet, ring: Ring) -> Result<Self> {
        Ok(ReducedFree { x, ring, base: require_reduced(x)? })
    }

    pub fn space(&self) -> &SimplicialSet {
        self.x
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    fn push(&self, y: &RSimplex, dim: usize, op: impl Fn(&CellId) -> Option<CellId>) -> Option<RSimplex> {
        let mut out = Chain::zero(self.ring);
        for (c, a) in &y.combo {
            let z = op(c)?;
            if self.base[z.dim] != z {
                out.add_term(z, a.clone());
            }
        }
        Some(RSimplex::from_chain(dim, &out))
    }

    /// `h(c) = 1·c`, which is the basepoint for basepoint cells.
    pub fn hurewicz(&self, c: CellId) -> RSimplex {
        let chain = if self.base[c.dim] == c { Chain::zero(self.ring) } else { Chain::basis(self.ring, c) };
        RSimplex::from_chain(c.dim, &chain)
    }

    /// `h` extended to chains.
    pub fn hurewicz_chain(&self, x: &Chain<CellId>) -> Chain<RSimplex> {
        x.map_terms(|c| Some((self.hurewicz(*c), self.ring.one())))
    }

    /// `γ_X` on one generator: the combination itself.
    pub fn gamma_x(&self, y: &RSimplex) -> Chain<CellId> {
        y.to_chain(self.ring)
    }

    fn image_basis(&self, truncation: usize, keep: impl Fn(&CellId) -> bool) -> Vec<Vec<RSimplex>> {
        (0..=truncation.min(self.x.truncation()))
            .map(|m| self.x.cells(m).filter(|c| *c != self.base[m] && keep(c)).map(|c| self.hurewicz(c)).collect())
            .collect()
    }

    fn image_complex(&self, truncation: usize, normalized: bool) -> ChainComplex<RSimplex> {
        let basis = self.image_basis(truncation, |c| !normalized || !self.x.is_degenerate(c));
        let ring = self.ring;
        ChainComplex::new(ring, basis, false, |y| {
            let mut out = Chain::zero(ring);
            for i in 0..=y.dim {
                let f = self.face(y, i);
                if !f.is_basepoint() && !(normalized && self.is_degenerate(&f)) {
                    out.add_term(f, ring.sign(i));
                }
            }
            out
        })
        .expect("faces of images are images")
    }

    /// `C(h): C̃(X) → C̃(R̃X)` on unnormalized chains relative to the basepoints, landing
    /// in the subcomplex spanned by the image of `h`.
    pub fn hurewicz_unnormalized(&self, truncation: usize) -> Result<GradedMap<CellId, RSimplex>> {
        let source = Arc::new(self.x.pointed_unnormalized_chains(self.ring)?);
        let target = Arc::new(self.image_complex(truncation, false));
        GradedMap::from_fn(source, target, 0, |c| self.hurewicz_chain(&Chain::basis(self.ring, *c)))
    }

    /// `N(h): N(X) → N(R̃X)` modulo the basepoint, which kills degree 0.
    pub fn hurewicz_chain_map(&self, truncation: usize) -> Result<GradedMap<CellId, RSimplex>> {
        let source = Arc::new(self.x.normalized_chains(self.ring));
        let target = Arc::new(self.image_complex(truncation, true));
        GradedMap::from_fn(source, target, 0, |c| self.hurewicz_chain(&Chain::basis(self.ring, *c)).filter(|y| !y.is_basepoint()))
    }

    /// `γ_X: C̃(R̃X) → C̃(X)` on the image subcomplex.
    pub fn gamma_x_map(&self, truncation: usize) -> Result<GradedMap<RSimplex, CellId>> {
        let source = Arc::new(self.image_complex(truncation, false));
        let target = Arc::new(self.x.pointed_unnormalized_chains(self.ring)?);
        GradedMap::from_fn(source, target, 0, |y| self.gamma_x(y))
    }
}

impl Simplicial for ReducedFree<'_> {
    type Cell = RSimplex;

    fn face(&self, y: &RSimplex, i: usize) -> RSimplex {
        self.push(y, y.dim - 1, |c| Some(self.x.face(c, i))).expect("faces always exist")
    }

    fn degeneracy(&self, y: &RSimplex, i: usize) -> Option<RSimplex> {
        if y.dim >= self.x.truncation() {
            return None;
        }
        self.push(y, y.dim + 1, |c| self.x.degeneracy(c, i))
    }
}

/// A random bounded complex over `ring`: ranks at most `max_rank` in degrees
/// `0..=max_degree`, integer entries in `-2..=2` before imposing `∂² = 0`.
pub fn random_complex<R: Rng>(rng: &mut R, ring: Ring, max_rank: usize, max_degree: usize) -> ChainComplex<CellId> {
    let ranks: Vec<usize> = (0..=max_degree).map(|_| rng.gen_range(0..=max_rank)).collect();
    let mut matrices: Vec<Vec<Vec<Scalar>>> = vec![Vec::new()];
    for n in 1..=max_degree {
        let (rows, cols) = (ranks[n - 1], ranks[n]);
        let columns: Vec<Vec<Scalar>> = if n == 1 {
            (0..cols).map(|_| (0..rows).map(|_| ring.from_int(rng.gen_range(-2..=2))).collect()).collect()
        } else {
            let kernel = linalg::kernel(ring, &matrices[n - 1], rows);
            (0..cols)
                .map(|_| {
                    let mut v = vec![ring.zero(); rows];
                    for k in &kernel {
                        let a = ring.from_int(rng.gen_range(-2..=2));
                        for (vi, ki) in v.iter_mut().zip(k) {
                            *vi = ring.add(vi, &ring.mul(&a, ki));
                        }
                    }
                    v
                })
                .collect()
        };
        matrices.push(linalg::transpose(&columns, rows));
    }
    let mut basis: Vec<Vec<CellId>> = ranks.iter().enumerate().map(|(n, &r)| (0..r).map(|i| CellId::new(n, i)).collect()).collect();
    basis.push(Vec::new());
    ChainComplex::new(ring, basis, true, |b| {
        Chain::from_terms(ring, (0..ranks[b.dim - 1]).map(|r| (CellId::new(b.dim - 1, r), matrices[b.dim][r][b.index].clone())))
    })
    .expect("random boundaries stay in the complex")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn concentrated(n: usize) -> ChainComplex<CellId> {
        let basis = (0..=n + 1).map(|m| if m == n { vec![CellId::new(n, 0)] } else { Vec::new() }).collect();
        ChainComplex::new(Ring::Integers, basis, true, |_| Chain::zero(Ring::Integers)).unwrap()
    }

    #[test]
    fn gamma_of_degree_zero_is_constant() {
        let g = gamma(&concentrated(0), 4).unwrap();
        assert_eq!(g.ranks(), vec![1; 5]);
    }

    #[test]
    fn gamma_of_degree_one_counts_surjections() {
        let g = gamma(&concentrated(1), 3).unwrap();
        assert_eq!(g.ranks(), vec![0, 1, 2, 3]);
    }
}
