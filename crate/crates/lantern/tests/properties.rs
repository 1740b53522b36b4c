//! Property suites for the algebraic invariants. Each suite runs at least
//! a thousand cases from a pinned RNG seed so failures are reproducible.

use lantern::mapping::{evaluate, MappingClassShadow, SymbolTable, Word};
use lantern::perm::Permutation;
use lantern::report::{generators_from_json, generators_to_json};
use lantern::surface::{build_surface, solve_registry, Theorem};
use lantern::symplectic::{
    is_symplectic, pairing, transvection, HomologyVector, Int, SympMatrix,
};
use proptest::prelude::*;
use proptest::test_runner::Config;

const CASES: u32 = 1024;

fn cfg() -> Config {
    Config {
        cases: CASES,
        rng_algorithm: proptest::test_runner::RngAlgorithm::ChaCha,
        rng_seed: proptest::test_runner::RngSeed::Fixed(0x6c61_6e74),
        ..Config::default()
    }
}

fn vector_strategy(genus: usize) -> impl Strategy<Value = HomologyVector> {
    proptest::collection::vec(-3i64..=3, 2 * genus).prop_map(move |entries| {
        HomologyVector::from_entries(entries.into_iter().map(Int::from).collect())
            .expect("even length")
    })
}

fn nonzero_vector(genus: usize) -> impl Strategy<Value = HomologyVector> {
    vector_strategy(genus).prop_filter("nonzero", |v| !v.is_zero())
}

/// A symplectic matrix built as a short product of transvections.
fn symplectic_strategy(genus: usize) -> impl Strategy<Value = SympMatrix> {
    proptest::collection::vec(nonzero_vector(genus), 1..=4).prop_map(move |cs| {
        let mut m = SympMatrix::identity(genus);
        for c in cs {
            m = m.mul(&transvection(&c).expect("nonzero class"));
        }
        m
    })
}

proptest! {
    #![proptest_config(cfg())]

    /// Twists transform naturally: conjugating a twist by any symplectic
    /// map gives the twist about the image class.
    #[test]
    fn transvection_conjugation_law(
        m in symplectic_strategy(3),
        c in nonzero_vector(3),
    ) {
        let t = transvection(&c).unwrap();
        let lhs = m.mul(&t).mul(&m.inverse());
        let rhs = transvection(&m.apply(&c)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    /// Twists about classes with zero algebraic intersection commute.
    /// The second class is built as ⟨u,w⟩·z − ⟨u,z⟩·w, which pairs to zero
    /// with u for any w and z.
    #[test]
    fn disjoint_twists_commute(
        u in nonzero_vector(4),
        w in vector_strategy(4),
        z in vector_strategy(4),
    ) {
        let v = z.scale(&pairing(&u, &w).unwrap())
            .sub(&w.scale(&pairing(&u, &z).unwrap()));
        prop_assume!(!v.is_zero());
        prop_assert_eq!(pairing(&u, &v).unwrap(), Int::from(0));
        let tu = transvection(&u).unwrap();
        let tv = transvection(&v).unwrap();
        prop_assert_eq!(tu.mul(&tv), tv.mul(&tu));
    }

    /// Products of transvections stay in the symplectic group, and the
    /// twist matrix has infinite order witnessed through small powers.
    #[test]
    fn transvection_products_are_symplectic(m in symplectic_strategy(3)) {
        prop_assert!(is_symplectic(&m));
        prop_assert!(is_symplectic(&m.inverse()));
        prop_assert!(m.mul(&m.inverse()).is_identity());
    }

    /// Word evaluation is a homomorphism: evaluating a concatenation equals
    /// composing the evaluations, and inverse exponents cancel.
    #[test]
    fn evaluation_is_a_homomorphism(
        exps in proptest::collection::vec((0usize..3, -3i64..=3), 0..8),
        split in 0usize..8,
    ) {
        let genus = 3;
        let punctures = 4;
        let mut table = SymbolTable::new(genus, punctures);
        let names = ["s0", "s1", "s2"];
        table.bind("s0", MappingClassShadow::twist(
            &HomologyVector::basis_x(genus, 1), punctures).unwrap());
        table.bind("s1", MappingClassShadow::twist(
            &HomologyVector::basis_y(genus, 2), punctures).unwrap());
        table.bind("s2", MappingClassShadow {
            matrix: SympMatrix::identity(genus),
            perm: Permutation::from_images(vec![1, 0, 2, 3]).unwrap(),
        });
        let factors: Vec<(&str, i64)> =
            exps.iter().map(|&(i, e)| (names[i], e)).collect();
        let cut = split.min(factors.len());
        let w1 = Word::new(&factors[..cut]);
        let w2 = Word::new(&factors[cut..]);
        let whole = evaluate(&w1.concat(&w2), &table).unwrap();
        let parts = evaluate(&w1, &table).unwrap()
            .compose(&evaluate(&w2, &table).unwrap());
        prop_assert_eq!(whole.matrix, parts.matrix);
        prop_assert_eq!(whole.perm, parts.perm);

        // inverse word cancels
        let inv_factors: Vec<(&str, i64)> =
            factors.iter().rev().map(|&(n, e)| (n, -e)).collect();
        let w = Word::new(&factors);
        let winv = Word::new(&inv_factors);
        let round = evaluate(&w.concat(&winv), &table).unwrap();
        prop_assert!(round.matrix.is_identity());
        prop_assert!(round.perm.is_identity());
    }

    /// The pairing is antisymmetric and bilinear in its first slot.
    #[test]
    fn pairing_is_antisymmetric_and_linear(
        u in vector_strategy(3),
        v in vector_strategy(3),
        w in vector_strategy(3),
        a in -3i64..=3,
        b in -3i64..=3,
    ) {
        prop_assert_eq!(
            pairing(&u, &v).unwrap(),
            -pairing(&v, &u).unwrap()
        );
        let (a, b) = (Int::from(a), Int::from(b));
        let lin = u.scale(&a).add(&v.scale(&b));
        prop_assert_eq!(
            pairing(&lin, &w).unwrap(),
            a * pairing(&u, &w).unwrap() + b * pairing(&v, &w).unwrap()
        );
    }

    /// Permutation composition against direct image application.
    #[test]
    fn permutation_composition_agrees_pointwise(
        np in 0usize..720,
        nq in 0usize..720,
    ) {
        let p = nth_permutation(6, np);
        let q = nth_permutation(6, nq);
        let pq = p.compose(&q);
        for i in 1..=6 {
            prop_assert_eq!(pq.apply(i), p.apply(q.apply(i)));
        }
        prop_assert!(p.compose(&p.inverse()).is_identity());
    }
}

fn nth_permutation(degree: usize, mut n: usize) -> Permutation {
    let mut pool: Vec<usize> = (0..degree).collect();
    let mut images = Vec::with_capacity(degree);
    for k in (1..=degree).rev() {
        let fact: usize = (1..k).product::<usize>().max(1);
        let idx = (n / fact) % k;
        n %= fact;
        images.push(pool.remove(idx));
    }
    Permutation::from_images(images).unwrap()
}

/// Serialization round trips: a solved generator set survives JSON.
#[test]
fn generator_sets_round_trip_through_json() {
    for (genus, punctures, theorem, seeds) in [
        (5usize, 5usize, Theorem::T7, [1u64, 2, 9]),
        (7, 5, Theorem::T8, [1, 3, 7]),
    ] {
        let surface = build_surface(genus, punctures).unwrap();
        for seed in seeds {
            let (registry, lantern_classes) = solve_registry(&surface, seed).unwrap();
            let gens = lantern::mapping::build_generator_set(
                &surface, &registry, &lantern_classes, theorem, seed,
            )
            .unwrap();
            let json = generators_to_json(&gens);
            let back = generators_from_json(&json).unwrap();
            assert_eq!(back.names, gens.names);
            assert_eq!(back.shadows, gens.shadows);
            assert_eq!(back.seed, gens.seed);
        }
    }
}
