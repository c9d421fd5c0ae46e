//! The verification suite: named checks with machine-readable outcomes.
//!
//! Each check returns pass/fail, a one-line summary and, on failure, the first
//! counterexample printed canonically.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bar::{bar_boundary, BarElement};
use crate::chain::{koszul_swap, Chain, Tensor};
use crate::complex::tensor_boundary;
use crate::corpus;
use crate::dold_kan::{
    check_gamma_of_normalized, check_normalized_gamma, free_simplicial_abelian, gamma, moore_complex, random_complex,
    reduced_free_simplicial_abelian, ReducedFree,
};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::format::{table_from_json, table_to_json, DocumentKind};
use crate::graded_map::GradedMap;
use crate::homology::homology;
use crate::ring::{Ring, Scalar};
use crate::simplex::Simplex;
use crate::simplicial::{is_degeneracy_free, CellId, Simplicial, SimplicialSet};
use crate::steenrod::cup::{Cochain, CupContext};
use crate::steenrod::prime3::check_prime3;
use crate::steenrod::{top_coefficient, xi_cell, xi_simplex, xi_standard, Diagonal, DiagonalTable};
use crate::vandermonde::{random_distinct_chains, vandermonde_determinant, vandermonde_independence};

const Z: Ring = Ring::Integers;
const F2: Ring = Ring::PrimeField(2);

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Run only these checks.
    pub only: Option<Vec<String>>,
    /// Largest standard simplex in the diagonal sweeps.
    pub max_k: usize,
    /// Largest bar level in the diagonal sweeps.
    pub max_level: usize,
    pub exec: Exec,
    /// Include corpus entries listed as slow.
    pub slow: bool,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { only: None, max_k: 5, max_level: 4, exec: Exec::default(), slow: false, seed: 0x5eed }
    }
}

/// What a single check found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub passed: bool,
    pub detail: String,
    pub counterexample: Option<String>,
}

impl Outcome {
    fn pass(detail: impl Into<String>) -> Self {
        Outcome { passed: true, detail: detail.into(), counterexample: None }
    }

    fn fail(detail: impl Into<String>, counterexample: impl Into<String>) -> Self {
        Outcome { passed: false, detail: detail.into(), counterexample: Some(counterexample.into()) }
    }

    /// Passes when no counterexample was found among `checked` cases.
    fn from_search(what: &str, checked: usize, mut bad: Vec<String>) -> Self {
        if bad.is_empty() {
            Outcome::pass(format!("{what}: {checked} cases"))
        } else {
            let n = bad.len();
            Outcome::fail(format!("{what}: {n} of {checked} cases fail"), bad.swap_remove(0))
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub counterexample: Option<String>,
    pub millis: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub results: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| !r.passed)
    }
}

type CheckFn = fn(&SuiteConfig, &DiagonalTable) -> Result<Outcome>;

/// Every named check with a short description.
pub const CHECKS: &[(&str, &str, CheckFn)] = &[
    ("golden-aw", "level-0 diagonal of small simplices", |_, t| Ok(golden_aw(t))),
    ("golden-cup1-level", "printed level-1 diagonal of the 2-simplex", |_, t| Ok(golden_cup1_level(t))),
    ("golden-degenerate", "printed level-1 diagonal of degenerate 2-simplices", |_, t| Ok(golden_degenerate(t))),
    ("top-sign", "top coefficient equals (-1)^{k(k-1)/2}", |c, t| Ok(top_sign(t, c.max_k.max(6)))),
    ("top-diagonal", "ξ(e_k⊗σ) is a unit multiple of σ⊗σ", |c, t| top_diagonal(t, c.max_k.max(6), c.slow)),
    ("chain-map", "ξ commutes with the differentials", |c, t| Ok(chain_map(t, c.max_level, c.max_k, c.exec))),
    ("equivariance", "ξ(T·A⊗σ) = T·ξ(A⊗σ)", |c, t| Ok(equivariance(t, c.max_level, c.max_k, c.exec))),
    ("vanishing", "ξ(e_i⊗Δ^j) = 0 for i > j", |c, t| Ok(vanishing(t, c.max_k))),
    ("naturality", "relabelling commutes with ξ", |c, t| Ok(naturality(t, c.max_level, c.max_k))),
    ("morphism", "characteristic maps commute with ξ", |c, t| morphism(t, c.slow)),
    ("prime3", "mod-3 identity on faces of Δ^k", |c, t| Ok(prime3(t, c.max_k.min(4)))),
    ("cup0-aw", "cup_0 is the front-face/back-face product", |c, t| cup0_aw(t, c.slow, c.exec)),
    ("sq0-identity", "Sq^0 is the identity", |c, t| sq0_identity(t, c.slow, c.exec)),
    ("sq1-bockstein", "Sq^1 is the mod-2 Bockstein", |c, t| sq1_bockstein(t, c.slow, c.exec)),
    ("sq1-projective", "Sq^1: H^1 → H^2 is nonzero on projective planes", |_, t| sq1_projective(t)),
    ("sq-rp4", "Sq^1 and Sq^2 on projective 4-space", |_, t| sq_rp4(t)),
    ("dold-kan-round-trip", "NΓC ≅ C and ΓNA ≅ A on random complexes", |c, _| dold_kan_round_trip(c.seed, 50)),
    ("moore-pointed", "Moore complex of R̃X is the pointed chain complex", |_, _| moore_pointed()),
    ("moore-homology", "homology of R̃X is reduced homology", |_, _| moore_homology()),
    ("gamma-normalized", "Γ(NA) ≅ A for A = RX", |_, _| gamma_normalized()),
    ("hurewicz-identity", "γ_X ∘ C(h) is the identity", |_, _| hurewicz_identity(4)),
    ("hurewicz-morphism", "h commutes with ξ", |_, t| hurewicz_morphism(t, 3)),
    ("vandermonde", "truncated diagonal vectors are independent", |c, _| vandermonde(c.seed, 200)),
    ("vandermonde-determinant", "determinant equals the printed product", |_, _| vandermonde_det()),
    ("degeneracy-free", "𝔡(Y) is degeneracy-free, the counterexample is not", |_, _| degeneracy_free()),
    ("cache-round-trip", "table serialization is lossless", |c, t| cache_round_trip(t, c.max_level, c.max_k)),
];

/// Runs the selected checks, in parallel under `config.exec`.
pub fn run_suite(config: &SuiteConfig, table: &DiagonalTable) -> Result<SuiteReport> {
    if let Some(only) = &config.only {
        if let Some(unknown) = only.iter().find(|n| !CHECKS.iter().any(|(c, _, _)| c == n)) {
            return Err(Error::Invalid(format!("no check named `{unknown}`")));
        }
    }
    let selected: Vec<&(&str, &str, CheckFn)> =
        CHECKS.iter().filter(|(n, _, _)| config.only.as_ref().is_none_or(|o| o.iter().any(|x| x == n))).collect();
    let results = config.exec.map(&selected, |(name, _, f)| {
        let start = Instant::now();
        let outcome = f(config, table).unwrap_or_else(|e| Outcome::fail(format!("error: {e}"), e.to_string()));
        CheckResult {
            name: name.to_string(),
            passed: outcome.passed,
            detail: outcome.detail,
            counterexample: outcome.counterexample,
            millis: start.elapsed().as_millis(),
        }
    });
    Ok(SuiteReport { results })
}

fn s(v: &[u32]) -> Simplex {
    Simplex(v.to_vec())
}

fn diagonal(terms: &[(&[u32], &[u32], i64)]) -> Diagonal<Simplex> {
    Chain::from_terms(Z, terms.iter().map(|(a, b, c)| (Tensor(s(a), s(b)), Z.from_int(*c))))
}

fn compare_golden(label: &str, computed: &Diagonal<Simplex>, expected: &Diagonal<Simplex>) -> Option<String> {
    (computed != expected).then(|| format!("{label}: computed {computed}, expected {expected}"))
}

fn golden(cases: Vec<(String, Diagonal<Simplex>, Diagonal<Simplex>)>) -> Outcome {
    let n = cases.len();
    let bad: Vec<String> = cases.iter().filter_map(|(l, c, e)| compare_golden(l, c, e)).collect();
    Outcome::from_search("golden values", n, bad)
}

fn xi(b: BarElement, v: &[u32], t: &DiagonalTable) -> Diagonal<Simplex> {
    xi_simplex(b, &s(v), t).expect("ordered vertex list")
}

pub fn golden_aw(t: &DiagonalTable) -> Outcome {
    golden(vec![
        ("ξ(e0⊗[0])".into(), xi(BarElement::e(0), &[0], t), diagonal(&[(&[0], &[0], 1)])),
        ("ξ(e0⊗[0,1])".into(), xi(BarElement::e(0), &[0, 1], t), diagonal(&[(&[0], &[0, 1], 1), (&[0, 1], &[1], 1)])),
        (
            "ξ(e0⊗[0,1,2])".into(),
            xi(BarElement::e(0), &[0, 1, 2], t),
            diagonal(&[(&[0, 1, 2], &[2], 1), (&[0, 1], &[1, 2], 1), (&[0], &[0, 1, 2], 1)]),
        ),
    ])
}

/// The printed level-1 diagonal of `Δ²`.
pub fn printed_cup1_level() -> Diagonal<Simplex> {
    diagonal(&[(&[0, 1, 2], &[1, 2], 1), (&[0, 2], &[0, 1, 2], -1), (&[0, 1, 2], &[0, 1], -1)])
}

/// The printed level-1 diagonals of `[0,0,1]` and `[0,1,1]`, before normalization.
pub fn printed_degenerate() -> [Diagonal<Simplex>; 2] {
    [
        diagonal(&[(&[0, 0, 1], &[0, 1], 1), (&[0, 1], &[0, 0, 1], -1), (&[0, 0, 1], &[0, 0], -1)]),
        diagonal(&[(&[0, 1, 1], &[1, 1], 1), (&[0, 1], &[0, 1, 1], -1), (&[0, 1, 1], &[1, 1], -1)]),
    ]
}

pub fn golden_cup1_level(t: &DiagonalTable) -> Outcome {
    golden(vec![("ξ(e1⊗[0,1,2])".into(), xi(BarElement::e(1), &[0, 1, 2], t), printed_cup1_level())])
}

pub fn golden_degenerate(t: &DiagonalTable) -> Outcome {
    let [d0, d1] = printed_degenerate();
    golden(vec![
        ("ξ(e1⊗[0,0,1])".into(), xi(BarElement::e(1), &[0, 0, 1], t), d0),
        ("ξ(e1⊗[0,1,1])".into(), xi(BarElement::e(1), &[0, 1, 1], t), d1),
    ])
}

pub fn top_sign(t: &DiagonalTable, max_k: usize) -> Outcome {
    let bad = (0..=max_k)
        .filter_map(|k| {
            let eta = top_coefficient(k, t);
            let expected = Z.sign(k * k.saturating_sub(1) / 2);
            (eta != expected).then(|| format!("k = {k}: coefficient {eta}, expected {expected}"))
        })
        .collect();
    Outcome::from_search("top coefficients", max_k + 1, bad)
}

fn top_diagonal(t: &DiagonalTable, max_k: usize, slow: bool) -> Result<Outcome> {
    let mut bad = Vec::new();
    let mut checked = 0;
    for k in 0..=max_k {
        let eta = top_coefficient(k, t);
        let top = Simplex::standard(k);
        if (eta != Z.one() && eta != Z.sign(1)) || xi_standard(BarElement::e(k), k, t) != Chain::term(Z, Tensor(top.clone(), top), eta.clone()) {
            bad.push(format!("ξ(e{k}⊗Δ^{k}) = {}", xi_standard(BarElement::e(k), k, t)));
        }
        if k >= 2 && eta != Z.mul(&Z.sign(k - 1), &top_coefficient(k - 1, t)) {
            bad.push(format!("top coefficients at {} and {k} break the recurrence", k - 1));
        }
        checked += 1;
    }
    for x in corpus_sets(slow, None)? {
        for k in 0..=x.truncation().min(3) {
            let eta = top_coefficient(k, t);
            for c in x.nondegenerate(k) {
                checked += 1;
                if xi_cell(&x, BarElement::e(k), &c, t) != Chain::term(Z, Tensor(c, c), eta.clone()) {
                    bad.push(format!("{}: ξ(e{k}⊗{c}) is not a multiple of {c}⊗{c}", x.name()));
                }
            }
        }
    }
    Ok(Outcome::from_search("top diagonals", checked, bad))
}

fn diagonal_boundary(d: &Diagonal<Simplex>) -> Diagonal<Simplex> {
    let mut out = Chain::zero(Z);
    for (Tensor(a, b), c) in d.iter() {
        out.add_scaled(&tensor_boundary(Z, a, b, |x| x.boundary(Z), |x| x.boundary(Z)), c);
    }
    out
}

fn bar_cases(max_level: usize, max_k: usize) -> Vec<(BarElement, usize)> {
    (0..=max_level).flat_map(|n| [BarElement::e(n), BarElement::te(n)]).flat_map(|b| (0..=max_k).map(move |k| (b, k))).collect()
}

pub fn chain_map(t: &DiagonalTable, max_level: usize, max_k: usize, exec: Exec) -> Outcome {
    let cases = bar_cases(max_level, max_k);
    let bad: Vec<String> = exec
        .map(&cases, |&(b, k)| {
            let lhs = diagonal_boundary(&xi_standard(b, k, t));
            let mut rhs = Chain::zero(Z);
            for (b2, c) in bar_boundary(Z, b).iter() {
                rhs.add_scaled(&xi_standard(*b2, k, t), c);
            }
            for (face, c) in Simplex::standard(k).boundary(Z).iter() {
                rhs.add_scaled(&xi_simplex(b, face, t).expect("faces are ordered"), &Z.mul(c, &Z.sign(b.level)));
            }
            (lhs != rhs).then(|| format!("{b} on Δ^{k}: ∂ξ - ξ∂ = {}", &lhs - &rhs))
        })
        .into_iter()
        .flatten()
        .collect();
    Outcome::from_search("chain-map identity", cases.len(), bad)
}

pub fn equivariance(t: &DiagonalTable, max_level: usize, max_k: usize, exec: Exec) -> Outcome {
    let simplices: Vec<Simplex> = (0..=max_k).flat_map(|d| Simplex::weakly_increasing(max_k, d)).collect();
    let cases: Vec<(usize, &Simplex)> = (0..=max_level).flat_map(|n| simplices.iter().map(move |x| (n, x))).collect();
    let bad: Vec<String> = exec
        .map(&cases, |&(n, x)| {
            let plain = xi_simplex(BarElement::e(n), x, t).expect("ordered");
            let twisted = xi_simplex(BarElement::te(n), x, t).expect("ordered");
            (twisted != koszul_swap(&plain) || koszul_swap(&twisted) != plain).then(|| format!("T·e{n} on {x}: {twisted} vs {plain}"))
        })
        .into_iter()
        .flatten()
        .collect();
    Outcome::from_search("equivariance", cases.len(), bad)
}

pub fn vanishing(t: &DiagonalTable, max_k: usize) -> Outcome {
    let cases: Vec<(usize, usize)> = (0..=max_k).flat_map(|j| (j + 1..=j + 3).map(move |i| (i, j))).collect();
    let bad = cases
        .iter()
        .filter(|&&(i, j)| !xi_standard(BarElement::e(i), j, t).is_zero() || !xi_standard(BarElement::te(i), j, t).is_zero())
        .map(|(i, j)| format!("ξ(e{i}⊗Δ^{j}) = {}", xi_standard(BarElement::e(*i), *j, t)))
        .collect();
    Outcome::from_search("vanishing", cases.len(), bad)
}

pub fn naturality(t: &DiagonalTable, max_level: usize, max_k: usize) -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for l in 0..=max_k {
        for d in 0..=l + 1 {
            for x in Simplex::weakly_increasing(l, d) {
                for b in (0..=max_level.min(d)).map(BarElement::e) {
                    checked += 1;
                    let pushed = xi_standard(b, d, t).map_terms(|Tensor(a, c)| Some((Tensor(a.relabel(&x.0), c.relabel(&x.0)), Z.one())));
                    let restricted = xi_simplex(b, &x, t).expect("ordered");
                    if pushed != restricted {
                        bad.push(format!("{b} along {x}: {pushed} vs {restricted}"));
                    }
                }
            }
        }
    }
    Outcome::from_search("naturality", checked, bad)
}

/// Loads corpus spaces as simplicial sets, slow entries only when asked.
fn corpus_sets(slow: bool, truncation: Option<usize>) -> Result<Vec<SimplicialSet>> {
    corpus::names()
        .filter(|n| slow || !corpus::SLOW.contains(n))
        .map(|n| {
            let doc = corpus::document(n)?;
            let t = match doc.kind {
                DocumentKind::Simplicial => truncation.map(|t| t.min(doc.truncation_dim)),
                DocumentKind::Delta => truncation,
            };
            Ok(doc.build(t)?.set)
        })
        .collect()
}

/// `(χ ⊗ χ) ∘ ξ_Δ = ξ_X ∘ χ` for the characteristic map `χ` of every nondegenerate cell.
fn morphism(t: &DiagonalTable, slow: bool) -> Result<Outcome> {
    let mut bad = Vec::new();
    let mut checked = 0;
    for x in corpus_sets(slow, Some(4))? {
        for k in 0..=x.truncation().min(3) {
            for cell in x.nondegenerate(k) {
                for d in 0..=(k + 1).min(x.truncation()) {
                    for v in Simplex::weakly_increasing(k, d) {
                        let slots: Vec<usize> = v.0.iter().map(|&i| i as usize).collect();
                        let Some(image) = x.restrict(&cell, &slots) else { continue };
                        for n in 0..=d {
                            checked += 1;
                            let chi = |a: &Simplex| x.restrict(&cell, &a.0.iter().map(|&i| i as usize).collect::<Vec<_>>());
                            let lhs = xi_simplex(BarElement::e(n), &v, t)
                                .expect("ordered")
                                .map_terms(|Tensor(a, b)| Some((Tensor(chi(a)?, chi(b)?), Z.one())));
                            let rhs = xi_cell(&x, BarElement::e(n), &image, t);
                            if lhs != rhs {
                                bad.push(format!("{}: e{n} along {v} of {cell}", x.name()));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(Outcome::from_search("characteristic maps", checked, bad))
}

pub fn prime3(t: &DiagonalTable, max_k: usize) -> Outcome {
    let reports: Vec<_> = (0..=max_k).map(|k| check_prime3(k, t)).collect();
    let checked = reports.iter().map(|r| r.checked).sum();
    let opposite: usize = reports.iter().map(|r| r.opposite_sign_failures.len()).sum();
    let bad: Vec<String> = reports.iter().flat_map(|r| r.failures.iter().map(move |x| format!("Δ^{}: {x}", r.k))).collect();
    let mut o = Outcome::from_search("faces", checked, bad);
    o.detail = format!("{}; the opposite sign fails on {opposite}", o.detail);
    o
}

/// Front `p`-face and back `q`-face of a cell.
fn front_back<S: Simplicial>(x: &S, c: &S::Cell, p: usize, q: usize) -> (S::Cell, S::Cell) {
    let front: Vec<usize> = (0..=p).collect();
    let back: Vec<usize> = (p..=p + q).collect();
    (x.restrict(c, &front).expect("faces exist"), x.restrict(c, &back).expect("faces exist"))
}

/// `(-1)^{pq} u(front σ) v(back σ)`, the front/back product with the evaluation sign.
pub fn classical_cup<S: Simplicial>(x: &S, complex: &crate::complex::ChainComplex<S::Cell>, u: &Cochain<S::Cell>, v: &Cochain<S::Cell>) -> Cochain<S::Cell> {
    let ring = complex.ring();
    let (p, q) = (u.degree(), v.degree());
    let mut out = Cochain::zero(ring, p + q);
    for c in complex.basis(p + q) {
        let (a, b) = front_back(x, c, p, q);
        out.set(c.clone(), ring.mul(&ring.sign(p * q), &ring.mul(&u.value(&a), &v.value(&b))));
    }
    out
}

fn cup0_aw(t: &DiagonalTable, slow: bool, exec: Exec) -> Result<Outcome> {
    let mut bad = Vec::new();
    let mut checked = 0;
    for x in corpus_sets(slow, Some(3))? {
        for ring in [F2, Ring::Rationals] {
            let complex = x.normalized_chains(ring);
            let ctx = CupContext { space: &x, complex: &complex, table: t, exec };
            let top = complex.truncation().min(2);
            for p in 0..=top {
                for q in 0..=top - p {
                    for a in complex.basis(p) {
                        for b in complex.basis(q) {
                            checked += 1;
                            let (u, v) = (Cochain::dual(ring, *a), Cochain::dual(ring, *b));
                            if ctx.cup_i(&u, &v, 0)? != classical_cup(&x, &complex, &u, &v) {
                                bad.push(format!("{} over {ring}: dual {a} ⌣ dual {b}", x.name()));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(Outcome::from_search("cup products", checked, bad))
}

fn top_degree(x: &SimplicialSet) -> usize {
    (0..=x.truncation()).rev().find(|&m| x.nondegenerate(m).next().is_some()).unwrap_or(0)
}

fn sq0_identity(t: &DiagonalTable, slow: bool, exec: Exec) -> Result<Outcome> {
    let mut bad = Vec::new();
    let mut checked = 0;
    for x in corpus_sets(slow, None)? {
        let complex = x.normalized_chains(F2);
        let ctx = CupContext { space: &x, complex: &complex, table: t, exec };
        for p in 0..=top_degree(&x) {
            checked += 1;
            if !ctx.sq_matrix(0, p)?.is_identity() {
                bad.push(format!("{}: Sq^0 on H^{p}", x.name()));
            }
        }
    }
    Ok(Outcome::from_search("Sq^0", checked, bad))
}

/// The mod-2 Bockstein of a mod-2 cocycle, through the integral coboundary of its 0/1 lift.
pub fn bockstein(x: &SimplicialSet, u: &Cochain<CellId>) -> Result<Cochain<CellId>> {
    let integral = x.normalized_chains(Z);
    let mut lift = Cochain::zero(Z, u.degree());
    for (c, v) in u.support() {
        lift.set(*c, v.clone());
    }
    let d = lift.coboundary(&integral)?;
    let mut out = Cochain::zero(F2, u.degree() + 1);
    for (c, v) in d.support() {
        if !v.is_integer() || v.to_integer() % 2 != num::BigInt::from(0) {
            return Err(Error::NotCocycle(format!("degree {} cochain is not a mod-2 cocycle", u.degree())));
        }
        out.set(*c, Scalar::from_integer(v.to_integer() / 2));
    }
    Ok(out)
}

/// Matrix columns, one per cohomology generator.
pub type Columns = Vec<Vec<Scalar>>;

/// Columns of `Sq^1` and of the Bockstein on the generators of `H^p(X; F₂)`.
pub fn sq1_against_bockstein(x: &SimplicialSet, p: usize, t: &DiagonalTable, exec: Exec) -> Result<(Columns, Columns)> {
    let complex = x.normalized_chains(F2);
    let ctx = CupContext { space: x, complex: &complex, table: t, exec };
    let sq = ctx.sq_matrix(1, p)?;
    let target = crate::homology::cohomology(&complex, p + 1)?;
    let source = crate::homology::cohomology(&complex, p)?;
    let oracle = source
        .data
        .generators
        .iter()
        .map(|g| target.data.coordinates(&bockstein(x, &Cochain::from_vector(&complex, p, g))?.to_vector(&complex)))
        .collect::<Result<Vec<_>>>()?;
    Ok((sq.columns, oracle))
}

fn sq1_bockstein(t: &DiagonalTable, slow: bool, exec: Exec) -> Result<Outcome> {
    let mut bad = Vec::new();
    let mut checked = 0;
    for x in corpus_sets(slow, None)? {
        for p in 0..top_degree(&x) {
            checked += 1;
            let (sq, oracle) = sq1_against_bockstein(&x, p, t, exec)?;
            if sq != oracle {
                bad.push(format!("{}: H^{p}", x.name()));
            }
        }
    }
    Ok(Outcome::from_search("Sq^1 against the Bockstein", checked, bad))
}

fn sq1_projective(t: &DiagonalTable) -> Result<Outcome> {
    let mut bad = Vec::new();
    let names = ["rp2_6", "rp2_cross", "rp2_one_vertex"];
    for name in names {
        let x = corpus::load(name, None)?.set;
        let complex = x.normalized_chains(F2);
        let ctx = CupContext { space: &x, complex: &complex, table: t, exec: Exec::Sequential };
        if ctx.sq_matrix(1, 1)?.is_zero() {
            bad.push(format!("{name}: Sq^1 vanishes on H^1"));
        }
    }
    Ok(Outcome::from_search("Sq^1 on H^1", names.len(), bad))
}

/// `[u ⌣ u]` through the front/back product, on the generators of `H^p(X; F₂)`.
pub fn cup_square_oracle(x: &SimplicialSet, p: usize) -> Result<Columns> {
    let complex = x.normalized_chains(F2);
    let source = crate::homology::cohomology(&complex, p)?;
    let target = crate::homology::cohomology(&complex, 2 * p)?;
    source
        .data
        .generators
        .iter()
        .map(|g| {
            let u = Cochain::from_vector(&complex, p, g);
            target.data.coordinates(&classical_cup(x, &complex, &u, &u).to_vector(&complex))
        })
        .collect()
}

fn sq_rp4(t: &DiagonalTable) -> Result<Outcome> {
    let x = corpus::load("rp4_cross", Some(4))?.set;
    let complex = x.normalized_chains(F2);
    let ctx = CupContext { space: &x, complex: &complex, table: t, exec: Exec::default() };
    let sq1 = ctx.sq_matrix(1, 1)?;
    let sq2 = ctx.sq_matrix(2, 2)?;
    let (_, bockstein) = sq1_against_bockstein(&x, 1, t, Exec::default())?;
    let square = cup_square_oracle(&x, 2)?;
    let mut bad = Vec::new();
    if sq1.is_zero() || sq1.columns != bockstein {
        bad.push(format!("Sq^1: H^1 → H^2 is {:?}, Bockstein {:?}", sq1.columns, bockstein));
    }
    if sq2.is_zero() || sq2.columns != square {
        bad.push(format!("Sq^2: H^2 → H^4 is {:?}, cup square {:?}", sq2.columns, square));
    }
    Ok(Outcome::from_search("squares on projective 4-space", 2, bad))
}

pub fn dold_kan_round_trip(seed: u64, count: usize) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = Vec::new();
    for i in 0..count {
        let c = random_complex(&mut rng, Z, 3, 3);
        if !check_normalized_gamma(&c, 3)? {
            bad.push(format!("complex {i}: NΓC ≇ C, ranks {:?}", c.ranks()));
        } else if !check_gamma_of_normalized(&gamma(&c, 3)?)? {
            bad.push(format!("complex {i}: ΓNA ≇ A, ranks {:?}", c.ranks()));
        }
    }
    Ok(Outcome::from_search("random complexes", count, bad))
}

fn pointed_sets(truncation: usize) -> Result<Vec<SimplicialSet>> {
    corpus::REDUCED
        .iter()
        .chain([corpus::COUNTEREXAMPLE].iter())
        .map(|n| corpus::load(n, Some(if *n == corpus::COUNTEREXAMPLE { truncation.min(3) } else { truncation })).map(|l| l.set))
        .collect()
}

fn moore_pointed() -> Result<Outcome> {
    let sets = pointed_sets(5)?;
    let bad = sets
        .iter()
        .map(|x| Ok((x, moore_complex(&reduced_free_simplicial_abelian(x, Z)?).same_as(&x.pointed_unnormalized_chains(Z)?))))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|(_, ok)| !ok)
        .map(|(x, _)| x.name().to_string())
        .collect();
    Ok(Outcome::from_search("pointed spaces", sets.len(), bad))
}

fn moore_homology() -> Result<Outcome> {
    let mut bad = Vec::new();
    let mut checked = 0;
    for x in pointed_sets(5)? {
        let moore = moore_complex(&reduced_free_simplicial_abelian(&x, Z)?);
        let normalized = x.normalized_chains(Z);
        for i in 0..=3.min(moore.truncation() - 1) {
            checked += 1;
            let h = homology(&moore, i)?;
            let o = homology(&normalized, i)?;
            let free = if i == 0 { o.free_rank() - 1 } else { o.free_rank() };
            if h.free_rank() != free || h.torsion() != o.torsion() {
                bad.push(format!("{}: H_{i} is {h}, reduced oracle {o} minus one free summand in degree 0", x.name()));
            }
        }
    }
    Ok(Outcome::from_search("homology groups", checked, bad))
}

fn gamma_normalized() -> Result<Outcome> {
    let sets = pointed_sets(3)?;
    let mut bad = Vec::new();
    for x in &sets {
        if !check_gamma_of_normalized(&free_simplicial_abelian(x, Z))? {
            bad.push(x.name().to_string());
        }
    }
    Ok(Outcome::from_search("free simplicial abelian groups", sets.len(), bad))
}

pub fn hurewicz_identity(truncation: usize) -> Result<Outcome> {
    let mut bad = Vec::new();
    let names = corpus::REDUCED;
    for name in names {
        let x = corpus::load(name, Some(truncation))?.set;
        let r = ReducedFree::new(&x, Z)?;
        let composite = r.hurewicz_unnormalized(truncation)?.then(&r.gamma_x_map(truncation)?)?;
        let id = GradedMap::identity(composite.source().clone());
        if !composite.agrees_with(&id) {
            bad.push(name.to_string());
        }
    }
    Ok(Outcome::from_search("degeneracy-free pointed spaces", names.len(), bad))
}

pub fn hurewicz_morphism(t: &DiagonalTable, truncation: usize) -> Result<Outcome> {
    let mut bad = Vec::new();
    let mut checked = 0;
    for x in pointed_sets(truncation)? {
        let r = ReducedFree::new(&x, Z)?;
        for m in 0..=x.truncation() {
            for c in x.cells(m) {
                for b in (0..=m).flat_map(|n| [BarElement::e(n), BarElement::te(n)]) {
                    checked += 1;
                    let lhs = xi_cell(&x, b, &c, t).map_terms(|Tensor(a, d)| Some((Tensor(r.hurewicz(*a), r.hurewicz(*d)), Z.one())));
                    let rhs = xi_cell(&r, b, &r.hurewicz(c), t);
                    if lhs != rhs {
                        bad.push(format!("{}: {b} on {c}", x.name()));
                    }
                }
            }
        }
    }
    Ok(Outcome::from_search("cells", checked, bad))
}

pub fn vandermonde(seed: u64, draws: usize) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = Simplex::faces_of_standard(5, 1);
    let mut bad = Vec::new();
    for ring in [Ring::Rationals, Ring::PrimeField(5)] {
        for _ in 0..draws {
            let t = rng.gen_range(1..=5);
            let cs = random_distinct_chains(&mut rng, ring, &edges, t, 3);
            if !vandermonde_independence(&cs, ring)? {
                let shown: Vec<String> = cs.iter().map(|c| format!("({c})")).collect();
                bad.push(format!("over {ring}: {}", shown.join(", ")));
            }
        }
    }
    Ok(Outcome::from_search("random tuples", 2 * draws, bad))
}

fn vandermonde_det() -> Result<Outcome> {
    let q = Ring::Rationals;
    let cs: Vec<Chain<Simplex>> = [[0, 1], [1, 2], [0, 2]].iter().map(|v| Chain::basis(q, s(v))).collect();
    let (det, product) = vandermonde_determinant(&cs, q)?;
    if det == product {
        Ok(Outcome::pass(format!("det = {det}")))
    } else {
        let relation = if det == product.scale(&q.from_int(-1)) { "det = -Π" } else { "det ≠ ±Π" };
        Ok(Outcome::fail(format!("{relation} at t = 3"), format!("det = {det}; Π = {product}")))
    }
}

fn degeneracy_free() -> Result<Outcome> {
    let mut bad = Vec::new();
    let mut checked = 0;
    for name in corpus::names() {
        let loaded = corpus::load(name, Some(if name == corpus::COUNTEREXAMPLE { 3 } else { 4 }))?;
        let expected = loaded.delta.is_some();
        checked += 1;
        if is_degeneracy_free(&loaded.set) != expected {
            bad.push(format!("{name}: expected {expected}"));
        }
    }
    for k in 0..=5 {
        checked += 1;
        if !is_degeneracy_free(&corpus::standard_simplex(k, 5)) {
            bad.push(format!("Δ^{k}"));
        }
    }
    Ok(Outcome::from_search("spaces", checked, bad))
}

fn cache_round_trip(t: &DiagonalTable, max_level: usize, max_k: usize) -> Result<Outcome> {
    t.precompute(max_level, max_k, Exec::Sequential);
    let back = table_from_json(&table_to_json(t)?)?;
    let (a, b) = (t.snapshot(), back.snapshot());
    if a == b {
        Ok(Outcome::pass(format!("{} entries", a.len())))
    } else {
        Ok(Outcome::fail("entries differ after a round trip", format!("{} entries before, {} after", a.len(), b.len())))
    }
}

/// `ξ` on a vertex list through the standard-simplex table; the CLI's `diag` entry point.
pub fn diag_of_vertices(n: usize, v: &Simplex, t: &DiagonalTable) -> Result<Diagonal<Simplex>> {
    xi_simplex(BarElement::e(n), v, t)
}

/// `ξ(e_n ⊗ x)` for a cell of a loaded space.
pub fn diag_of_cell(n: usize, x: &SimplicialSet, c: CellId, t: &DiagonalTable) -> Result<Diagonal<CellId>> {
    if c.dim > x.truncation() || c.index >= x.count(c.dim) {
        return Err(Error::Precondition(format!("{c} is not a cell of {}", x.name())));
    }
    Ok(xi_cell(x, BarElement::e(n), &c, t))
}
