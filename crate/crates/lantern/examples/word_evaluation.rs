//! Evaluate words in the involution generators and named twists.
//!
//! The symbol table binds the generator set members plus transvection
//! shadows for every registry curve, so relations can be written down as
//! plain words and evaluated against the homology representation.

use lantern::mapping::{build_generator_set, evaluate, standard_table, Word};
use lantern::surface::{build_surface, solve_registry, Theorem};

fn main() {
    let surface = build_surface(5, 5).expect("surface");
    let (registry, lantern_classes) = solve_registry(&surface, 1).expect("registry");
    let gens = build_generator_set(&surface, &registry, &lantern_classes, Theorem::T7, 1)
        .expect("generator set");
    let table = standard_table(&gens, &registry, &lantern_classes).expect("symbol table");

    println!("bound symbols:");
    let names: Vec<&String> = table.names().collect();
    for chunk in names.chunks(8) {
        println!("  {}", chunk.iter().map(|s| s.as_str()).collect::<Vec<_>>().join(" "));
    }

    // each generator is an involution, so its square evaluates to the identity
    let square = Word::new(&[("rho1", 1), ("rho1", 1)]);
    let m = evaluate(&square, &table).expect("evaluation");
    println!("rho1^2 is the identity: {}", m.matrix.is_identity() && m.perm.is_identity());

    // commutator of twists about classes with zero pairing
    let comm = Word::new(&[
        ("T_alpha_1", 1),
        ("T_alpha_2", 1),
        ("T_alpha_1", -1),
        ("T_alpha_2", -1),
    ]);
    let m = evaluate(&comm, &table).expect("evaluation");
    println!("[T_alpha_1, T_alpha_2] is the identity: {}", m.matrix.is_identity());

    // conjugating a twist by the shift advances its index
    let conj = Word::new(&[("R", 1), ("T_alpha_1", 1), ("R", -1)]);
    let lhs = evaluate(&conj, &table).expect("evaluation");
    let rhs = evaluate(&Word::new(&[("T_alpha_2", 1)]), &table).expect("evaluation");
    println!("R T_alpha_1 R^-1 = T_alpha_2: {}", lhs.matrix == rhs.matrix);
}
