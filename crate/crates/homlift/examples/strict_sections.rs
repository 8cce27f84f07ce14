//! Upgrading a homotopy lift to a strict one.
//!
//! For a strictly commuting square the pipeline can do better than a lift up
//! to homotopy: when `chi` is trivial it produces a map `theta : B -> X`
//! with `theta . i = h` and `alpha . theta = f` on the nose. This example
//! plants strict lifts, forgets them, and recovers strict lifts from the
//! obstruction; it also shows the obstructed outcome.
//!
//! ```text
//! cargo run --example strict_sections
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use homlift::obstruction::{section_strict_lift, SectionOutcome};
use homlift::oracle::{random_chain_map, random_cofibration, random_complex};
use homlift::{ChainComplex, ChainMap, Field};

fn main() {
    let field = Field::f2();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for round in 0..8 {
        let i = random_cofibration(&mut rng, field, 3, 2).expect("cofibration samples");
        let x = random_complex(&mut rng, field, 3, 2);
        let y = random_complex(&mut rng, field, 3, 2);
        let alpha = random_chain_map(&mut rng, &x, &y);
        let theta0 = random_chain_map(&mut rng, i.target(), &x);
        let h = theta0.compose(&i).unwrap();
        let f = alpha.compose(&theta0).unwrap();
        match section_strict_lift(&i, &h, &alpha, &f).expect("pipeline runs") {
            SectionOutcome::Lift { theta, .. } => {
                assert_eq!(theta.compose(&i).unwrap(), h);
                assert_eq!(alpha.compose(&theta).unwrap(), f);
                println!("round {round}: strict lift recovered (need not equal the planted one)");
            }
            SectionOutcome::NontrivialChi => unreachable!("a lift was planted"),
            SectionOutcome::TrivialChiNoStrictLift => unreachable!("a strict lift exists"),
        }
    }

    // The obstructed case: nothing maps onto the sphere from the zero
    // complex.
    let zero = ChainComplex::zero(field);
    let sphere = ChainComplex::sphere(field, 0);
    let outcome = section_strict_lift(
        &ChainMap::zero(zero.clone(), sphere.clone()),
        &ChainMap::zero(zero.clone(), zero.clone()),
        &ChainMap::zero(zero.clone(), sphere.clone()),
        &ChainMap::identity(&sphere),
    )
    .expect("pipeline runs");
    match outcome {
        SectionOutcome::NontrivialChi => println!("sphere section: NONTRIVIAL chi, no lift"),
        _ => unreachable!("the sphere section is obstructed"),
    }
}
