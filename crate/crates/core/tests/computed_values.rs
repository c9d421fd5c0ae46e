//! Values produced by the implemented conventions where printed values differ.

use steenrod_core::bar::BarElement;
use steenrod_core::chain::{Chain, Tensor};
use steenrod_core::ring::Ring;
use steenrod_core::simplex::Simplex;
use steenrod_core::simplicial::{is_degeneracy_free, SimplicialSet};
use steenrod_core::steenrod::{normalize_diagonal, top_coefficient, xi_cell, xi_simplex, Diagonal, DiagonalTable};
use steenrod_core::suite::{printed_cup1_level, printed_degenerate};
use steenrod_core::vandermonde::vandermonde_determinant;
use steenrod_core::corpus;

const Z: Ring = Ring::Integers;

fn s(v: &[u32]) -> Simplex {
    Simplex(v.to_vec())
}

fn diagonal(terms: &[(&[u32], &[u32], i64)]) -> Diagonal<Simplex> {
    Chain::from_terms(Z, terms.iter().map(|(a, b, c)| (Tensor(s(a), s(b)), Z.from_int(*c))))
}

#[test]
fn level_one_diagonal_of_the_two_simplex() {
    let t = DiagonalTable::new();
    let computed = xi_simplex(BarElement::e(1), &s(&[0, 1, 2]), &t).unwrap();
    assert_eq!(computed, diagonal(&[(&[0, 1, 2], &[1, 2], 1), (&[0, 2], &[0, 1, 2], -1), (&[0, 1, 2], &[0, 1], 1)]));
    assert_eq!(computed.to_string(), "[0,1,2]⊗[0,1] + [0,1,2]⊗[1,2] - [0,2]⊗[0,1,2]");
}

#[test]
fn printed_level_one_diagonal_differs_in_one_sign() {
    let t = DiagonalTable::new();
    let computed = xi_simplex(BarElement::e(1), &s(&[0, 1, 2]), &t).unwrap();
    let difference = &computed - &printed_cup1_level();
    assert_eq!(difference, diagonal(&[(&[0, 1, 2], &[0, 1], 2)]));
}

#[test]
fn level_one_diagonals_of_degenerate_simplices() {
    let t = DiagonalTable::new();
    let d0 = xi_simplex(BarElement::e(1), &s(&[0, 0, 1]), &t).unwrap();
    let d1 = xi_simplex(BarElement::e(1), &s(&[0, 1, 1]), &t).unwrap();
    assert_eq!(d0, diagonal(&[(&[0, 0, 1], &[0, 1], 1), (&[0, 1], &[0, 0, 1], -1), (&[0, 0, 1], &[0, 0], 1)]));
    assert_eq!(d1, diagonal(&[(&[0, 1, 1], &[1, 1], 1), (&[0, 1], &[0, 1, 1], -1), (&[0, 1, 1], &[0, 1], 1)]));
    let [p0, p1] = printed_degenerate();
    assert_ne!(d0, p0);
    assert_ne!(d1, p1);
}

#[test]
fn degenerate_diagonals_vanish_after_normalization() {
    let x: SimplicialSet = corpus::standard_simplex(1, 3);
    let t = DiagonalTable::new();
    for c in x.cells(2) {
        assert!(normalize_diagonal(&x, &xi_cell(&x, BarElement::e(1), &c, &t)).is_zero(), "{c}");
    }
}

#[test]
fn top_coefficients() {
    let t = DiagonalTable::new();
    let eta: Vec<i64> = (0..=7).map(|k| if top_coefficient(k, &t) == Z.one() { 1 } else { -1 }).collect();
    assert_eq!(eta, [1, -1, 1, 1, -1, -1, 1, 1]);
    for (k, &e) in eta.iter().enumerate().skip(1) {
        let printed = if (k * (k - 1) / 2) % 2 == 0 { 1 } else { -1 };
        assert_eq!(e, -printed, "k = {k}");
    }
}

#[test]
fn vandermonde_determinant_sign() {
    let q = Ring::Rationals;
    for t in 2..=4 {
        let cs: Vec<Chain<Simplex>> = Simplex::faces_of_standard(4, 1).into_iter().take(t).map(|e| Chain::basis(q, e)).collect();
        let (det, product) = vandermonde_determinant(&cs, q).unwrap();
        assert_eq!(det, product.scale(&q.sign(t * (t - 1) / 2)), "t = {t}");
    }
}

#[test]
fn standard_simplices_are_degeneracy_free() {
    for k in 0..=5 {
        assert!(is_degeneracy_free(&corpus::standard_simplex(k, 5)));
    }
    assert!(!is_degeneracy_free(&corpus::load(corpus::COUNTEREXAMPLE, Some(3)).unwrap().set));
}
