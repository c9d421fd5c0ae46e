//! Exact dense linear algebra over Z, Q and F_p.
//!
//! Everything goes through one diagonalization routine. Over Z it produces the Smith
//! normal form; over a field the diagonal is all ones up to the rank.

use std::fmt::Debug;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

use crate::ring::{Ring, Scalar};

/// A Euclidean domain with a concrete element type.
pub trait Domain {
    type E: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    /// `a = q·b + r` with `r` smaller than `b`, or zero.
    fn div_rem(&self, a: &Self::E, b: &Self::E) -> (Self::E, Self::E);
    /// Euclidean size used to choose pivots.
    fn size(&self, a: &Self::E) -> BigInt;
    fn is_unit(&self, a: &Self::E) -> bool;
    /// A unit `u` with `u·a` in canonical form.
    fn canonical_unit(&self, a: &Self::E) -> Self::E;
    fn from_scalar(&self, x: &Scalar) -> Self::E;
    fn to_scalar(&self, a: &Self::E) -> Scalar;

    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E {
        self.add(a, &self.neg(b))
    }
}

pub struct Integers;
pub struct Rationals;
pub struct Fp(pub u64);

impl Domain for Integers {
    type E = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn div_rem(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        a.div_mod_floor(b)
    }
    fn size(&self, a: &BigInt) -> BigInt {
        a.abs()
    }
    fn is_unit(&self, a: &BigInt) -> bool {
        a.abs().is_one()
    }
    fn canonical_unit(&self, a: &BigInt) -> BigInt {
        if a.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }
    fn from_scalar(&self, x: &Scalar) -> BigInt {
        assert!(x.is_integer(), "non-integral entry over Z");
        x.numer().clone()
    }
    fn to_scalar(&self, a: &BigInt) -> Scalar {
        BigRational::from_integer(a.clone())
    }
}

impl Domain for Rationals {
    type E = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn div_rem(&self, a: &BigRational, b: &BigRational) -> (BigRational, BigRational) {
        (a / b, BigRational::zero())
    }
    fn size(&self, a: &BigRational) -> BigInt {
        if a.is_zero() {
            BigInt::zero()
        } else {
            BigInt::one()
        }
    }
    fn is_unit(&self, a: &BigRational) -> bool {
        !a.is_zero()
    }
    fn canonical_unit(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn from_scalar(&self, x: &Scalar) -> BigRational {
        x.clone()
    }
    fn to_scalar(&self, a: &BigRational) -> Scalar {
        a.clone()
    }
}

impl Fp {
    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        a %= self.0;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * a % self.0;
            }
            a = a * a % self.0;
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.0), "inverting zero in F_p");
        self.pow(a, self.0 - 2)
    }
}

impl Domain for Fp {
    type E = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.0
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.0
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.0 - a) % self.0
    }
    fn div_rem(&self, a: &u64, b: &u64) -> (u64, u64) {
        (a * self.inv(*b) % self.0, 0)
    }
    fn size(&self, a: &u64) -> BigInt {
        BigInt::from(u8::from(*a != 0))
    }
    fn is_unit(&self, a: &u64) -> bool {
        *a != 0
    }
    fn canonical_unit(&self, a: &u64) -> u64 {
        self.inv(*a)
    }
    fn from_scalar(&self, x: &Scalar) -> u64 {
        let r = Ring::PrimeField(self.0 as u32).canon(x.clone());
        Ring::PrimeField(self.0 as u32).residue(&r).expect("canonical residue")
    }
    fn to_scalar(&self, a: &u64) -> Scalar {
        BigRational::from_integer(BigInt::from(*a))
    }
}

pub type Mat<E> = Vec<Vec<E>>;

fn identity<D: Domain>(d: &D, n: usize) -> Mat<D::E> {
    (0..n).map(|i| (0..n).map(|j| if i == j { d.one() } else { d.zero() }).collect()).collect()
}

/// `P·A·Q = diag(d_0, …, d_{r-1}, 0, …)` with `P`, `Q` invertible and `d_i | d_{i+1}`.
#[derive(Clone, Debug)]
pub struct Diagonalization<E> {
    pub rows: usize,
    pub cols: usize,
    pub diagonal: Vec<E>,
    pub p: Mat<E>,
    pub p_inv: Mat<E>,
    pub q: Mat<E>,
    pub q_inv: Mat<E>,
}

impl<E> Diagonalization<E> {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }
}

struct Work<'a, D: Domain> {
    d: &'a D,
    a: Mat<D::E>,
    p: Mat<D::E>,
    p_inv: Mat<D::E>,
    q: Mat<D::E>,
    q_inv: Mat<D::E>,
}

impl<D: Domain> Work<'_, D> {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        self.p.swap(i, j);
        for row in &mut self.p_inv {
            row.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in &mut self.a {
            row.swap(i, j);
        }
        for row in &mut self.q {
            row.swap(i, j);
        }
        self.q_inv.swap(i, j);
    }

    /// row_i -= c·row_t
    fn row_op(&mut self, i: usize, t: usize, c: &D::E) {
        let d = self.d;
        for m in [&mut self.a, &mut self.p] {
            let src = m[t].clone();
            for (x, y) in m[i].iter_mut().zip(&src) {
                *x = d.sub(x, &d.mul(c, y));
            }
        }
        for row in &mut self.p_inv {
            row[t] = d.add(&row[t], &d.mul(c, &row[i]));
        }
    }

    /// col_j -= c·col_t
    fn col_op(&mut self, j: usize, t: usize, c: &D::E) {
        let d = self.d;
        for m in [&mut self.a, &mut self.q] {
            for row in m.iter_mut() {
                row[j] = d.sub(&row[j], &d.mul(c, &row[t]));
            }
        }
        let src = self.q_inv[j].clone();
        for (x, y) in self.q_inv[t].iter_mut().zip(&src) {
            *x = d.add(x, &d.mul(c, y));
        }
    }

    fn scale_row(&mut self, i: usize, u: &D::E) {
        let d = self.d;
        for m in [&mut self.a, &mut self.p] {
            for x in m[i].iter_mut() {
                *x = d.mul(x, u);
            }
        }
        let u_inv = d.div_rem(&d.one(), u).0;
        for row in &mut self.p_inv {
            row[i] = d.mul(&row[i], &u_inv);
        }
    }
}

/// Diagonalizes `a` by invertible row and column operations.
pub fn diagonalize<D: Domain>(d: &D, a: &Mat<D::E>, cols: usize) -> Diagonalization<D::E> {
    let rows = a.len();
    let mut w = Work { d, a: a.clone(), p: identity(d, rows), p_inv: identity(d, rows), q: identity(d, cols), q_inv: identity(d, cols) };
    let mut diagonal = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(BigInt, usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !d.is_zero(&w.a[i][j]) {
                        let s = d.size(&w.a[i][j]);
                        if best.as_ref().is_none_or(|(b, _, _)| s < *b) {
                            best = Some((s, i, j));
                        }
                    }
                }
            }
            let Some((_, i, j)) = best else {
                return Diagonalization { rows, cols, diagonal, p: w.p, p_inv: w.p_inv, q: w.q, q_inv: w.q_inv };
            };
            w.swap_rows(t, i);
            w.swap_cols(t, j);
            let mut clean = true;
            for i in t + 1..rows {
                if !d.is_zero(&w.a[i][t]) {
                    let (c, r) = d.div_rem(&w.a[i][t], &w.a[t][t]);
                    w.row_op(i, t, &c);
                    clean &= d.is_zero(&r);
                }
            }
            for j in t + 1..cols {
                if !d.is_zero(&w.a[t][j]) {
                    let (c, r) = d.div_rem(&w.a[t][j], &w.a[t][t]);
                    w.col_op(j, t, &c);
                    clean &= d.is_zero(&r);
                }
            }
            if !clean {
                continue;
            }
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !d.is_zero(&d.div_rem(&w.a[i][j], &w.a[t][t]).1)));
            if let Some(i) = offender {
                // pull the non-divisible row up and try again with a smaller pivot
                let one = d.neg(&d.one());
                w.row_op(t, i, &one);
                continue;
            }
            break;
        }
        let u = d.canonical_unit(&w.a[t][t]);
        w.scale_row(t, &u);
        diagonal.push(w.a[t][t].clone());
    }
    Diagonalization { rows, cols, diagonal, p: w.p, p_inv: w.p_inv, q: w.q, q_inv: w.q_inv }
}

pub fn mat_mul<D: Domain>(d: &D, a: &Mat<D::E>, b: &Mat<D::E>, inner: usize, cols: usize) -> Mat<D::E> {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(d.zero(), |acc, k| d.add(&acc, &d.mul(&row[k], &b[k][j]))))
                .collect()
        })
        .collect()
}

pub fn mat_vec<D: Domain>(d: &D, a: &Mat<D::E>, v: &[D::E]) -> Vec<D::E> {
    a.iter().map(|row| row.iter().zip(v).fold(d.zero(), |acc, (x, y)| d.add(&acc, &d.mul(x, y)))).collect()
}

/// Solves `A·x = b`, if possible.
pub fn solve_in<D: Domain>(d: &D, a: &Mat<D::E>, cols: usize, b: &[D::E]) -> Option<Vec<D::E>> {
    let dg = diagonalize(d, a, cols);
    let pb = mat_vec(d, &dg.p, b);
    let mut y = vec![d.zero(); cols];
    for (i, x) in pb.iter().enumerate() {
        if i < dg.rank() {
            let (quot, rem) = d.div_rem(x, &dg.diagonal[i]);
            if !d.is_zero(&rem) {
                return None;
            }
            y[i] = quot;
        } else if !d.is_zero(x) {
            return None;
        }
    }
    Some(mat_vec(d, &dg.q, &y))
}

/// A basis of the kernel; over Z a basis of the kernel lattice.
pub fn kernel_in<D: Domain>(d: &D, a: &Mat<D::E>, cols: usize) -> Vec<Vec<D::E>> {
    let dg = diagonalize(d, a, cols);
    (dg.rank()..cols).map(|j| dg.q.iter().map(|row| row[j].clone()).collect()).collect()
}

fn to_domain<D: Domain>(d: &D, m: &[Vec<Scalar>]) -> Mat<D::E> {
    m.iter().map(|row| row.iter().map(|x| d.from_scalar(x)).collect()).collect()
}

fn from_domain<D: Domain>(d: &D, m: &Mat<D::E>) -> Vec<Vec<Scalar>> {
    m.iter().map(|row| row.iter().map(|x| d.to_scalar(x)).collect()).collect()
}

/// Dispatches a computation generic over [`Domain`] on a ring.
#[macro_export]
macro_rules! with_domain {
    ($ring:expr, $d:ident => $body:expr) => {
        match $ring {
            $crate::ring::Ring::Integers => {
                let $d = &$crate::linalg::Integers;
                $body
            }
            $crate::ring::Ring::Rationals => {
                let $d = &$crate::linalg::Rationals;
                $body
            }
            $crate::ring::Ring::PrimeField(p) => {
                let $d = &$crate::linalg::Fp(p as u64);
                $body
            }
        }
    };
}

pub fn rank(ring: Ring, m: &[Vec<Scalar>], cols: usize) -> usize {
    with_domain!(ring, d => diagonalize(d, &to_domain(d, m), cols).rank())
}

/// Kernel basis over the ring (a lattice basis over Z).
pub fn kernel(ring: Ring, m: &[Vec<Scalar>], cols: usize) -> Vec<Vec<Scalar>> {
    with_domain!(ring, d => {
        let k = kernel_in(d, &to_domain(d, m), cols);
        from_domain(d, &k)
    })
}

pub fn solve(ring: Ring, m: &[Vec<Scalar>], cols: usize, b: &[Scalar]) -> Option<Vec<Scalar>> {
    with_domain!(ring, d => {
        let bb: Vec<_> = b.iter().map(|x| d.from_scalar(x)).collect();
        solve_in(d, &to_domain(d, m), cols, &bb).map(|x| x.iter().map(|e| d.to_scalar(e)).collect())
    })
}

/// Square and invertible over the ring (unimodular over Z).
pub fn is_invertible(ring: Ring, m: &[Vec<Scalar>], cols: usize) -> bool {
    if m.len() != cols {
        return false;
    }
    with_domain!(ring, d => {
        let dg = diagonalize(d, &to_domain(d, m), cols);
        dg.rank() == cols && dg.diagonal.iter().all(|x| d.is_unit(x))
    })
}

/// Nonzero invariant factors over Z; over a field, `rank` ones.
pub fn invariant_factors(ring: Ring, m: &[Vec<Scalar>], cols: usize) -> Vec<Scalar> {
    with_domain!(ring, d => {
        let dg = diagonalize(d, &to_domain(d, m), cols);
        dg.diagonal.iter().map(|x| d.to_scalar(x)).collect()
    })
}

pub fn transpose(m: &[Vec<Scalar>], cols: usize) -> Vec<Vec<Scalar>> {
    (0..cols).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(rows: &[&[i64]]) -> Mat<BigInt> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn check_factorization(a: &Mat<BigInt>, cols: usize) -> Diagonalization<BigInt> {
        let d = Integers;
        let dg = diagonalize(&d, a, cols);
        let rows = a.len();
        let paq = mat_mul(&d, &mat_mul(&d, &dg.p, a, rows, cols), &dg.q, cols, cols);
        for (i, row) in paq.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                let expected = if i == j && i < dg.rank() { dg.diagonal[i].clone() } else { BigInt::zero() };
                assert_eq!(*x, expected);
            }
        }
        assert_eq!(mat_mul(&d, &dg.p, &dg.p_inv, rows, rows), identity(&d, rows));
        assert_eq!(mat_mul(&d, &dg.q, &dg.q_inv, cols, cols), identity(&d, cols));
        for w in dg.diagonal.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        dg
    }

    #[test]
    fn smith_of_small_matrices() {
        let dg = check_factorization(&z(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]), 3);
        assert_eq!(dg.diagonal, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        let dg = check_factorization(&z(&[&[2, 0], &[0, 3]]), 2);
        assert_eq!(dg.diagonal, vec![BigInt::from(1), BigInt::from(6)]);
        let dg = check_factorization(&z(&[&[0, 0, 0]]), 3);
        assert_eq!(dg.rank(), 0);
    }

    #[test]
    fn kernel_over_integers_is_saturated() {
        let k = kernel_in(&Integers, &z(&[&[2, 4]]), 2);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        assert_eq!(BigInt::from(2) * &v[0] + BigInt::from(4) * &v[1], BigInt::zero());
        assert!(v[0].gcd(&v[1]).is_one());
    }

    #[test]
    fn solve_detects_integrality() {
        let a = z(&[&[2]]);
        assert_eq!(solve_in(&Integers, &a, 1, &[BigInt::from(4)]), Some(vec![BigInt::from(2)]));
        assert_eq!(solve_in(&Integers, &a, 1, &[BigInt::from(3)]), None);
        let f3 = Fp(3);
        assert_eq!(solve_in(&f3, &vec![vec![2u64]], 1, &[1]), Some(vec![2]));
    }

    #[test]
    fn rank_depends_on_characteristic() {
        let m: Vec<Vec<Scalar>> = vec![
            vec![Ring::Integers.from_int(1), Ring::Integers.from_int(1)],
            vec![Ring::Integers.from_int(1), Ring::Integers.from_int(-1)],
        ];
        assert_eq!(rank(Ring::Rationals, &m, 2), 2);
        assert_eq!(rank(Ring::PrimeField(2), &m, 2), 1);
        assert!(!is_invertible(Ring::Integers, &m, 2));
        assert!(is_invertible(Ring::PrimeField(3), &m, 2));
    }
}
