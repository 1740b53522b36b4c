//! Verify the structural twist identities: the gamma twist factors into a
//! product of involution words, and conjugating by the handle shift
//! advances every twist family by one index.

use lantern::mapping::build_generator_set;
use lantern::surface::{build_surface, solve_registry, Theorem};
use lantern::verify::{verify_eq5_eq6, verify_eq7};

fn main() {
    for (genus, theorem) in [(5usize, Theorem::T7), (7, Theorem::T8)] {
        let surface = build_surface(genus, 5).expect("surface");
        let (registry, lantern_classes) = solve_registry(&surface, 1).expect("registry");
        let gens = build_generator_set(&surface, &registry, &lantern_classes, theorem, 1)
            .expect("generator set");
        let twist_product = verify_eq5_eq6(&gens, &lantern_classes, &registry);
        println!(
            "genus {genus}: {} -> {:?}",
            twist_product.anchor, twist_product.status
        );
        let shift = verify_eq7(&gens, &registry);
        println!("genus {genus}: {} -> {:?}", shift.anchor, shift.status);
    }
    println!();
    println!("the involution-word factorization is the same for every solver seed:");
    let surface = build_surface(5, 5).expect("surface");
    for seed in [1u64, 4, 9] {
        let (registry, lantern_classes) = solve_registry(&surface, seed).expect("registry");
        let gens = build_generator_set(&surface, &registry, &lantern_classes, Theorem::T7, seed)
            .expect("generator set");
        let check = verify_eq5_eq6(&gens, &lantern_classes, &registry);
        println!("  seed {seed}: {:?}", check.status);
    }
}
