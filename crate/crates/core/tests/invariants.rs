use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use steenrod_core::bar::{bar_boundary, block_compose, BarElement, Permutation};
use steenrod_core::chain::{koszul_swap, permute_factors, Chain, Tensor, TensorN};
use steenrod_core::complex::tensor_boundary;
use steenrod_core::dold_kan::{check_gamma_of_normalized, check_normalized_gamma, gamma, random_complex};
use steenrod_core::ring::Ring;
use steenrod_core::simplex::Simplex;
use steenrod_core::simplicial::{epi_mono, Surjection};
use steenrod_core::steenrod::{aw, xi_simplex, xi_standard, Diagonal, DiagonalTable};
use steenrod_core::vandermonde::{random_distinct_chains, vandermonde_independence};

const Z: Ring = Ring::Integers;

fn ring() -> impl Strategy<Value = Ring> {
    prop_oneof![Just(Ring::Integers), Just(Ring::Rationals), Just(Ring::PrimeField(2)), Just(Ring::PrimeField(3))]
}

fn vertices(max_vertex: u32, max_len: usize) -> impl Strategy<Value = Simplex> {
    prop::collection::vec(0..=max_vertex, 1..=max_len).prop_map(|mut v| {
        v.sort_unstable();
        Simplex(v)
    })
}

fn chain(ring: Ring) -> impl Strategy<Value = Chain<Simplex>> {
    let triangle = prop::collection::vec(0u32..=4, 3).prop_map(|mut v| {
        v.sort_unstable();
        Simplex(v)
    });
    prop::collection::vec((triangle, -5i64..=5), 0..6)
        .prop_map(move |terms| Chain::from_terms(ring, terms.into_iter().map(|(s, c)| (s, ring.from_int(c)))))
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::new(v).unwrap())
}

fn monotone_surjection() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(any::<bool>(), 0..7).prop_map(|steps| {
        let mut map = vec![0];
        for up in steps {
            let last = *map.last().unwrap();
            map.push(if up { last + 1 } else { last });
        }
        map
    })
}

fn boundary_of_diagonal(d: &Diagonal<Simplex>) -> Diagonal<Simplex> {
    let mut out = Chain::zero(d.ring());
    for (Tensor(a, b), c) in d.iter() {
        out.add_scaled(&tensor_boundary(d.ring(), a, b, |x| x.boundary(d.ring()), |x| x.boundary(d.ring())), c);
    }
    out
}

fn left_aw(d: &Diagonal<Simplex>) -> Chain<TensorN<Simplex>> {
    let mut out = Chain::zero(d.ring());
    for (Tensor(a, b), c) in d.iter() {
        for (Tensor(x, y), e) in aw(a).iter() {
            out.add_term(TensorN(vec![x.clone(), y.clone(), b.clone()]), d.ring().mul(c, e));
        }
    }
    out
}

fn right_aw(d: &Diagonal<Simplex>) -> Chain<TensorN<Simplex>> {
    let mut out = Chain::zero(d.ring());
    for (Tensor(a, b), c) in d.iter() {
        for (Tensor(x, y), e) in aw(b).iter() {
            out.add_term(TensorN(vec![a.clone(), x.clone(), y.clone()]), d.ring().mul(c, e));
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn chain_addition_is_an_abelian_group((r, x, y) in ring().prop_flat_map(|r| (Just(r), chain(r), chain(r)))) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert!((&x + &(-&x)).is_zero());
        prop_assert_eq!(x.scale(&r.from_int(2)), &x + &x);
    }

    #[test]
    fn simplex_boundary_squares_to_zero(s in vertices(6, 6), r in ring()) {
        let d = s.boundary(r);
        let mut dd = Chain::zero(r);
        for (f, c) in d.iter() {
            dd.add_scaled(&f.boundary(r), c);
        }
        prop_assert!(dd.is_zero());
    }

    #[test]
    fn tensor_boundary_squares_to_zero(a in vertices(4, 4), b in vertices(4, 4)) {
        let d = tensor_boundary(Z, &a, &b, |x| x.boundary(Z), |x| x.boundary(Z));
        prop_assert!(boundary_of_diagonal(&d).is_zero());
    }

    #[test]
    fn bar_boundary_squares_to_zero(level in 0usize..10, twisted in any::<bool>(), r in ring()) {
        let b = BarElement { twisted, level };
        let mut dd = Chain::zero(r);
        for (x, c) in bar_boundary(r, b).iter() {
            dd.add_scaled(&bar_boundary(r, *x), c);
        }
        prop_assert!(dd.is_zero());
    }

    #[test]
    fn koszul_swap_is_an_involution(a in vertices(4, 4), b in vertices(4, 4), c in -3i64..=3) {
        let x = Chain::term(Z, Tensor(a, b), Z.from_int(c));
        prop_assert_eq!(koszul_swap(&koszul_swap(&x)), x);
    }

    #[test]
    fn factor_permutations_compose(
        fs in prop::collection::vec(vertices(3, 3), 3),
        p in permutation(3),
        q in permutation(3),
    ) {
        let x = Chain::basis(Z, TensorN(fs));
        let composite: Vec<usize> = p.images().iter().map(|&i| q.apply(i)).collect();
        prop_assert_eq!(permute_factors(&permute_factors(&x, p.images()), q.images()), permute_factors(&x, &composite));
    }

    #[test]
    fn permutation_inverse(p in (1usize..7).prop_flat_map(permutation)) {
        prop_assert_eq!(p.compose(&p.inverse()).unwrap(), Permutation::identity(p.arity()));
    }

    #[test]
    fn block_composition_is_associative(
        sigma in permutation(2),
        (t1, t2) in (1usize..4, 1usize..4).prop_flat_map(|(a, b)| (permutation(a), permutation(b))),
        psi_sizes in prop::collection::vec(1usize..3, 6),
        seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let psis: Vec<Permutation> = psi_sizes[..t1.arity() + t2.arity()]
            .iter()
            .map(|&n| {
                let mut v: Vec<usize> = (0..n).collect();
                rand::seq::SliceRandom::shuffle(v.as_mut_slice(), &mut rng);
                Permutation::new(v).unwrap()
            })
            .collect();
        let left = block_compose(&block_compose(&sigma, &[t1.clone(), t2.clone()]).unwrap(), &psis).unwrap();
        let (p1, p2) = psis.split_at(t1.arity());
        let inner = [block_compose(&t1, p1).unwrap(), block_compose(&t2, p2).unwrap()];
        prop_assert_eq!(left, block_compose(&sigma, &inner).unwrap());
    }

    #[test]
    fn block_composition_has_units(p in (1usize..6).prop_flat_map(permutation)) {
        let ones = vec![Permutation::identity(1); p.arity()];
        prop_assert_eq!(block_compose(&p, &ones).unwrap(), p.clone());
        prop_assert_eq!(block_compose(&Permutation::identity(1), std::slice::from_ref(&p)).unwrap(), p);
    }

    #[test]
    fn surjection_round_trip(map in monotone_surjection()) {
        let s = Surjection::from_map(&map).unwrap();
        prop_assert_eq!(s.to_map(), map.clone());
        let (epi, image) = epi_mono(&map);
        prop_assert_eq!(epi, s);
        prop_assert_eq!(image.len(), map.last().unwrap() + 1);
    }

    #[test]
    fn alexander_whitney_is_coassociative(k in 0usize..6) {
        let d = aw(&Simplex::standard(k));
        prop_assert_eq!(left_aw(&d), right_aw(&d));
    }

    #[test]
    fn diagonal_is_a_chain_map(level in 0usize..4, twisted in any::<bool>(), s in vertices(5, 5)) {
        let t = DiagonalTable::new();
        let b = BarElement { twisted, level };
        let lhs = boundary_of_diagonal(&xi_simplex(b, &s, &t).unwrap());
        let mut rhs = Chain::zero(Z);
        for (b2, c) in bar_boundary(Z, b).iter() {
            rhs.add_scaled(&xi_simplex(*b2, &s, &t).unwrap(), c);
        }
        for (f, c) in s.boundary(Z).iter() {
            rhs.add_scaled(&xi_simplex(b, f, &t).unwrap(), &Z.mul(c, &Z.sign(level)));
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn diagonal_is_equivariant(level in 0usize..4, s in vertices(5, 5)) {
        let t = DiagonalTable::new();
        let plain = xi_simplex(BarElement::e(level), &s, &t).unwrap();
        prop_assert_eq!(xi_simplex(BarElement::te(level), &s, &t).unwrap(), koszul_swap(&plain));
    }

    #[test]
    fn diagonal_is_natural(level in 0usize..4, s in vertices(4, 4), labels in prop::collection::vec(0u32..8, 5)) {
        let mut labels = labels;
        labels.sort_unstable();
        let t = DiagonalTable::new();
        let b = BarElement::e(level);
        let pushed = xi_simplex(b, &s, &t).unwrap().map_terms(|Tensor(x, y)| Some((Tensor(x.relabel(&labels), y.relabel(&labels)), Z.one())));
        prop_assert_eq!(pushed, xi_simplex(b, &s.relabel(&labels), &t).unwrap());
    }

    #[test]
    fn diagonal_vanishes_above_the_dimension(k in 0usize..5, extra in 1usize..4) {
        prop_assert!(xi_standard(BarElement::e(k + extra), k, &DiagonalTable::new()).is_zero());
    }

    #[test]
    fn random_complexes_square_to_zero(seed in any::<u64>()) {
        let c = random_complex(&mut ChaCha8Rng::seed_from_u64(seed), Z, 3, 3);
        prop_assert!(c.check_d_squared().is_ok());
    }

    #[test]
    fn vandermonde_vectors_are_independent(seed in any::<u64>(), t in 1usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let edges = Simplex::faces_of_standard(5, 1);
        for r in [Ring::Rationals, Ring::PrimeField(5)] {
            let cs = random_distinct_chains(&mut rng, r, &edges, t, 3);
            prop_assert!(vandermonde_independence(&cs, r).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn dold_kan_round_trips(seed in any::<u64>()) {
        let c = random_complex(&mut ChaCha8Rng::seed_from_u64(seed), Z, 3, 3);
        prop_assert!(check_normalized_gamma(&c, 3).unwrap());
        prop_assert!(check_gamma_of_normalized(&gamma(&c, 3).unwrap()).unwrap());
    }
}
