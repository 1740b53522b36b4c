//! The three puncture involutions generate the full symmetric group, while
//! the first two alone only reach a subgroup of order 2(b-1).

use lantern::group::{factorial, PermGroup};
use lantern::surface::puncture_involutions;

fn main() {
    for b in 2..=9usize {
        let pi = puncture_involutions(b);
        let full = PermGroup::new(vec![pi.r1.clone(), pi.r2.clone(), pi.r3.clone()])
            .unwrap();
        print!("b = {b}: |<r1,r2,r3>| = {} (b! = {})", full.order(), factorial(b));
        if b >= 4 {
            let two = PermGroup::new(vec![pi.r1.clone(), pi.r2.clone()]).unwrap();
            print!(", |<r1,r2>| = {} (2(b-1) = {})", two.order(), 2 * (b - 1));
        }
        println!();
        println!("  r3·r1 = {} (forward cycle)", pi.r3.compose(&pi.r1));
        println!("  r3·r2 = {} (end swap)", pi.r3.compose(&pi.r2));
    }
}
