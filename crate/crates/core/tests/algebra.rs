use adjoint_powers::partitions::{enumerate_partitions, enumerate_standard_tableaux, factorial};
use adjoint_powers::symmetric_group::{
    essential_idempotent_constant, young_symmetrizer, GroupAlgebraElement, Permutation,
};
use adjoint_powers::walled_brauer::{
    b_idempotent, contraction_diagram, enumerate_diagrams, has_forbidden_pair, permutation_to_diagram,
    DiagramAlgebraElement, WalledDiagram,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_diagram(rng: &mut ChaCha8Rng, k: usize) -> WalledDiagram {
    let mut images: Vec<usize> = (0..2 * k).collect();
    images.shuffle(rng);
    permutation_to_diagram(&Permutation::from_images(images).unwrap()).unwrap()
}

fn random_element(rng: &mut ChaCha8Rng, k: usize, n: u64) -> DiagramAlgebraElement {
    let mut x = DiagramAlgebraElement::zero(k, n);
    for _ in 0..3 {
        let c = BigRational::new(BigInt::from(rng.gen_range(-5..=5)), BigInt::from(rng.gen_range(1..=3)));
        x = x.add(&DiagramAlgebraElement::from_diagram(random_diagram(rng, k), n).scale(&c)).unwrap();
    }
    x
}

#[test]
fn diagram_multiplication_is_associative() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for k in [2, 3] {
        for _ in 0..100 {
            let (x, y, z) =
                (random_element(&mut rng, k, 5), random_element(&mut rng, k, 5), random_element(&mut rng, k, 5));
            let left = x.multiply(&y).unwrap().multiply(&z).unwrap();
            let right = x.multiply(&y.multiply(&z).unwrap()).unwrap();
            assert_eq!(left, right);
        }
    }
}

#[test]
fn contractions_commute_and_b_kills_them() {
    for k in 1..=3 {
        let n = 7;
        let b = b_idempotent(k, n).unwrap();
        for i in 1..=k {
            let ci = DiagramAlgebraElement::from_diagram(contraction_diagram(k, i).unwrap(), n);
            assert!(b.multiply(&ci).unwrap().is_zero());
            assert!(ci.multiply(&b).unwrap().is_zero());
            for j in 1..=k {
                let cj = DiagramAlgebraElement::from_diagram(contraction_diagram(k, j).unwrap(), n);
                assert_eq!(ci.multiply(&cj).unwrap(), cj.multiply(&ci).unwrap());
            }
        }
    }
}

fn forbidden_in_row(d: &WalledDiagram, top: bool) -> bool {
    use adjoint_powers::walled_brauer::Vertex;
    let k = d.k();
    (1..=k).any(|i| {
        if top {
            d.partner_of(Vertex::top(i)) == Vertex::top(k + i)
        } else {
            d.partner_of(Vertex::bottom(i)) == Vertex::bottom(k + i)
        }
    })
}

#[test]
fn b_kills_forbidden_pairs() {
    for k in 1..=3 {
        let n = 6;
        let b = b_idempotent(k, n).unwrap();
        for d in enumerate_diagrams(k) {
            let x = DiagramAlgebraElement::from_diagram(d.clone(), n);
            if forbidden_in_row(&d, true) {
                assert!(b.multiply(&x).unwrap().is_zero(), "{d}");
            }
            if forbidden_in_row(&d, false) {
                assert!(x.multiply(&b).unwrap().is_zero(), "{d}");
            }
            assert_eq!(has_forbidden_pair(&d), forbidden_in_row(&d, true) || forbidden_in_row(&d, false));
        }
    }
}

#[test]
fn young_constants_up_to_four() {
    for r in 0..=4 {
        let entries: Vec<usize> = (1..=r).collect();
        for shape in enumerate_partitions(r) {
            let expected = BigRational::new(BigInt::from(factorial(r)), BigInt::from(shape.num_standard_tableaux()));
            for t in enumerate_standard_tableaux(&shape, &entries).unwrap() {
                let y = young_symmetrizer(&t, r.max(1)).unwrap();
                assert_eq!(y.mul(&y), y.scale(&expected), "{t}");
            }
        }
    }
}

#[test]
fn young_constants_random_at_five() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let shapes = enumerate_partitions(5);
    let entries: Vec<usize> = (1..=5).collect();
    for _ in 0..20 {
        let shape = shapes.choose(&mut rng).unwrap();
        let t = enumerate_standard_tableaux(shape, &entries).unwrap().choose(&mut rng).unwrap().clone();
        let expected = BigRational::new(BigInt::from(120), BigInt::from(shape.num_standard_tableaux()));
        assert_eq!(essential_idempotent_constant(&t, 5).unwrap(), expected, "{t}");
    }
}

fn perm(k: usize) -> impl Strategy<Value = Permutation> {
    Just((0..k).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Permutation::from_images(v).unwrap())
}

fn element(k: usize) -> impl Strategy<Value = GroupAlgebraElement> {
    proptest::collection::vec((perm(k), -4i64..=4), 1..4).prop_map(move |terms| {
        GroupAlgebraElement::from_terms(
            k,
            terms.into_iter().map(|(p, c)| (p, BigRational::from_integer(BigInt::from(c)))),
        )
    })
}

proptest! {
    #[test]
    fn sign_is_multiplicative((a, b) in (1usize..=7).prop_flat_map(|k| (perm(k), perm(k)))) {
        prop_assert_eq!((&a * &b).sign(), a.sign() * b.sign());
    }

    #[test]
    fn group_algebra_associative((x, y, z) in (1usize..=5).prop_flat_map(|k| (element(k), element(k), element(k)))) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }

    #[test]
    fn inverse_cancels(p in (1usize..=8).prop_flat_map(perm)) {
        prop_assert!((&p * &p.inverse()).is_identity());
    }
}
