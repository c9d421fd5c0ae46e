//! The mod-3 identity `∂{(1 ⊗ Δ) ∘ Δ₂} = (1 - ρ)(1 ⊗ Δ) ∘ Δ` on standard simplices.
//!
//! `Δ = ξ(e_0 ⊗ -)`, `Δ₂ = ξ(e_1 ⊗ -)`, `ρ` moves the last of three factors to the
//! front with its Koszul sign, and `∂` is the differential of maps, so the left side is
//! `∂F + F∂` for `F = (1 ⊗ Δ) ∘ Δ₂` of degree 1.

use crate::bar::BarElement;
use crate::chain::{permute_factors, Chain, Graded, Tensor, TensorN};
use crate::ring::Ring;
use crate::simplex::Simplex;

use super::{aw, xi_simplex, DiagonalTable};

const Z: Ring = Ring::Integers;

/// `ρ`: factor `i` goes to position `ROTATE[i]`.
const ROTATE: [usize; 3] = [1, 2, 0];

/// The outcome of checking both sign conventions on every face of `Δ^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prime3Report {
    pub k: usize,
    pub checked: usize,
    /// Faces where `∂F ≠ (1 - ρ)(1 ⊗ Δ)Δ`.
    pub failures: Vec<Simplex>,
    /// Faces where `∂F ≠ (ρ - 1)(1 ⊗ Δ)Δ`.
    pub opposite_sign_failures: Vec<Simplex>,
}

impl Prime3Report {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

fn one_tensor_aw(x: &Chain<Tensor<Simplex, Simplex>>) -> Chain<TensorN<Simplex>> {
    let mut out = Chain::zero(Z);
    for (Tensor(a, b), c) in x.iter() {
        for (Tensor(b1, b2), d) in aw(b).iter() {
            out.add_term(TensorN(vec![a.clone(), b1.clone(), b2.clone()]), Z.mul(c, d));
        }
    }
    out
}

fn boundary3(x: &Chain<TensorN<Simplex>>) -> Chain<TensorN<Simplex>> {
    let mut out = Chain::zero(Z);
    for (TensorN(fs), c) in x.iter() {
        let mut before = 0;
        for slot in 0..fs.len() {
            for (f, d) in fs[slot].boundary(Z).iter() {
                let mut g = fs.clone();
                g[slot] = f.clone();
                out.add_term(TensorN(g), Z.mul(&Z.mul(c, d), &Z.sign(before)));
            }
            before += fs[slot].degree();
        }
    }
    out
}

/// `F(x) = (1 ⊗ Δ)(Δ₂ x)`.
fn f_map(x: &Simplex, table: &DiagonalTable) -> Chain<TensorN<Simplex>> {
    one_tensor_aw(&xi_simplex(BarElement::e(1), x, table).expect("faces of Δ^k are ordered"))
}

/// Evaluates both sides on every face of `Δ^k`.
pub fn check_prime3(k: usize, table: &DiagonalTable) -> Prime3Report {
    let mut report = Prime3Report { k, checked: 0, failures: Vec::new(), opposite_sign_failures: Vec::new() };
    for n in 0..=k {
        for x in Simplex::faces_of_standard(k, n) {
            let mut lhs = boundary3(&f_map(&x, table));
            for (y, c) in x.boundary(Z).iter() {
                lhs.add_scaled(&f_map(y, table), c);
            }
            let base = one_tensor_aw(&aw(&x));
            let rotated = permute_factors(&base, &ROTATE);
            if lhs != &base - &rotated {
                report.failures.push(x.clone());
            }
            if lhs != &rotated - &base {
                report.opposite_sign_failures.push(x.clone());
            }
            report.checked += 1;
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_is_trivial() {
        let t = DiagonalTable::new();
        let r = check_prime3(0, &t);
        assert!(r.holds());
        assert_eq!(r.checked, 1);
    }

    #[test]
    fn holds_on_small_simplices() {
        let t = DiagonalTable::new();
        for k in 1..=3 {
            assert!(check_prime3(k, &t).holds(), "k = {k}");
        }
    }
}
