//! Check the seven-twist lantern identity on the homology shadow.
//!
//! Builds a toy instance from standard basis classes, then a batch of
//! random instances, and finally shows that a corrupted instance is
//! rejected with a concrete witness.

use lantern::symplectic::HomologyVector;
use lantern::surface::LanternClasses;
use lantern::verify::{
    corrupt_lantern_instance, random_lantern_instance, verify_lantern,
    verify_lantern_rewrite,
};

fn main() {
    let x = |i| HomologyVector::basis_x(3, i);
    let toy = LanternClasses {
        a1: x(1),
        a2: x(2),
        a3: x(3),
        a4: x(1).add(&x(2)).add(&x(3)).neg(),
        y1: x(1).add(&x(2)),
        y2: x(2).add(&x(3)),
        y3: x(1).add(&x(3)),
        signs: [1, 1, 1, 1],
    };
    let check = verify_lantern(&toy);
    println!("toy instance: {:?} — {}", check.status, check.anchor);
    let rewrite = verify_lantern_rewrite(&toy);
    println!("rewritten form: {:?} — {}", rewrite.status, rewrite.anchor);

    let mut passed = 0;
    for seed in 0..50u64 {
        let inst = random_lantern_instance(5, seed).expect("instance");
        if verify_lantern(&inst).passed() && verify_lantern_rewrite(&inst).passed() {
            passed += 1;
        }
    }
    println!("random instances at genus 5: {passed}/50 passed");

    let bad = corrupt_lantern_instance(&random_lantern_instance(5, 99).unwrap());
    let caught = verify_lantern(&bad);
    println!("corrupted instance: {:?}", caught.status);
    for w in &caught.witness {
        println!("  witness {} ({}): [{}]", w.name, w.kind, w.entries.join(", "));
    }
}
