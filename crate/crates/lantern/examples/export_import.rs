//! Round-trip a generator set through the on-disk JSON format.
//!
//! The import path re-validates everything: schema and basis identifiers,
//! matrix shape and integrality, the symplectic and involution predicates,
//! puncture permutations, and finally a deterministic rebuild from the
//! stored seed that must reproduce the file byte for byte.

use lantern::mapping::build_generator_set;
use lantern::report::{export_generators, generators_to_json, import_generators};
use lantern::surface::{build_surface, solve_registry, Theorem};

fn main() {
    let surface = build_surface(5, 5).expect("surface");
    let (registry, lantern_classes) = solve_registry(&surface, 1).expect("registry");
    let gens = build_generator_set(&surface, &registry, &lantern_classes, Theorem::T7, 1)
        .expect("generator set");

    let dir = std::env::temp_dir();
    let path = dir.join("lantern-generators.json");
    export_generators(&gens, &path).expect("export");
    println!("wrote {}", path.display());

    let back = import_generators(&path).expect("import");
    assert_eq!(back.names, gens.names);
    assert_eq!(back.shadows, gens.shadows);
    println!("round trip preserved all {} members", back.names.len());

    // tampering is detected: flip one matrix entry and watch the import fail
    let mut value = generators_to_json(&gens);
    value["members"][0]["matrix"][1] = serde_json::json!("5");
    let err = lantern::report::generators_from_json(&value).unwrap_err();
    println!("tampered file rejected: {err}");
}
