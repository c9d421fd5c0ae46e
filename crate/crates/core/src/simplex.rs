//! Simplices given by vertex lists.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::chain::{Chain, Graded};
use crate::error::Error;
use crate::ring::Ring;

/// A simplex as its list of vertex labels. Repeated adjacent vertices mean degenerate.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Simplex(pub Vec<u32>);

impl Simplex {
    /// The top simplex `[0, 1, …, k]` of `Δ^k`.
    pub fn standard(k: usize) -> Self {
        Simplex((0..=k as u32).collect())
    }

    pub fn vertex(v: u32) -> Self {
        Simplex(vec![v])
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn last(&self) -> u32 {
        *self.0.last().expect("simplices are nonempty")
    }

    /// `d_i`: deletes the `i`-th vertex.
    pub fn face(&self, i: usize) -> Simplex {
        let mut v = self.0.clone();
        v.remove(i);
        Simplex(v)
    }

    /// `s_i`: repeats the `i`-th vertex.
    pub fn degeneracy(&self, i: usize) -> Simplex {
        let mut v = self.0.clone();
        v.insert(i, self.0[i]);
        Simplex(v)
    }

    pub fn is_degenerate(&self) -> bool {
        self.0.windows(2).any(|w| w[0] == w[1])
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
    }

    /// Whether this is a face (sub-list) of `[0..k]`.
    pub fn is_face_of_standard(&self, k: usize) -> bool {
        self.is_strictly_increasing() && self.last() as usize <= k
    }

    /// Composes with a labelling of slots: vertex `v` becomes `labels[v]`.
    pub fn relabel(&self, labels: &[u32]) -> Simplex {
        Simplex(self.0.iter().map(|&v| labels[v as usize]).collect())
    }

    /// Alternating sum of faces, zero in dimension 0.
    pub fn boundary(&self, ring: Ring) -> Chain<Simplex> {
        let mut out = Chain::zero(ring);
        if self.dim() > 0 {
            for i in 0..=self.dim() {
                out.add_term(self.face(i), ring.sign(i));
            }
        }
        out
    }

    /// All faces of `[0..k]` in dimension `n`, in lexicographic order.
    pub fn faces_of_standard(k: usize, n: usize) -> Vec<Simplex> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n + 1);
        fn rec(start: u32, k: u32, left: usize, current: &mut Vec<u32>, out: &mut Vec<Simplex>) {
            if left == 0 {
                out.push(Simplex(current.clone()));
                return;
            }
            for v in start..=k {
                current.push(v);
                rec(v + 1, k, left - 1, current, out);
                current.pop();
            }
        }
        if n <= k {
            rec(0, k as u32, n + 1, &mut current, &mut out);
        }
        out
    }

    /// All weakly increasing vertex lists of dimension `n` with values in `0..=k`.
    pub fn weakly_increasing(k: usize, n: usize) -> Vec<Simplex> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n + 1);
        fn rec(start: u32, k: u32, left: usize, current: &mut Vec<u32>, out: &mut Vec<Simplex>) {
            if left == 0 {
                out.push(Simplex(current.clone()));
                return;
            }
            for v in start..=k {
                current.push(v);
                rec(v, k, left - 1, current, out);
                current.pop();
            }
        }
        rec(0, k as u32, n + 1, &mut current, &mut out);
        out
    }
}

impl Graded for Simplex {
    fn degree(&self) -> usize {
        self.dim()
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Simplex {
    type Err = Error;

    /// Accepts `0,1,2` or `[0,1,2]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let v = inner
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Format(format!("bad vertex list `{s}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        if v.is_empty() {
            return Err(Error::Format("empty vertex list".into()));
        }
        Ok(Simplex(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn faces_and_degeneracies() {
        let s = Simplex::standard(2);
        assert_eq!(s.face(1), Simplex(vec![0, 2]));
        assert_eq!(s.degeneracy(1), Simplex(vec![0, 1, 1, 2]));
        assert!(s.degeneracy(0).is_degenerate());
        assert_eq!("0,0,1".parse::<Simplex>().unwrap(), Simplex(vec![0, 0, 1]));
    }

    #[test]
    fn boundary_squares_to_zero() {
        let z = Ring::Integers;
        let s = Simplex::standard(3);
        assert!(s.boundary(z).map_linear(|t| t.boundary(z)).is_zero());
    }

    #[test]
    fn enumerations() {
        assert_eq!(Simplex::faces_of_standard(3, 1).len(), 6);
        assert_eq!(Simplex::weakly_increasing(1, 2).len(), 4);
    }
}
