//! The cartesian gap map is a weak equivalence in this category.
//!
//! For a cospan `(alpha : X -> Y, beta : X -> Z)` the homotopy pushout
//! `M(alpha, beta)` and the pullback `P(alpha, beta)` over it are compared
//! by the gap map `X -> P(alpha, beta)`. Bounded complexes over a field form
//! a stable model category, so the gap map is always a quasi-isomorphism;
//! this example checks that on a batch of random cospans and prints the
//! shapes involved.
//!
//! ```text
//! cargo run --example gap_map_stability
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use homlift::constructions::gap_map;
use homlift::oracle::{random_chain_map, random_complex};
use homlift::Field;

fn main() {
    let field = Field::f2();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut checked = 0;
    for round in 0..25 {
        let x = random_complex(&mut rng, field, 3, 2);
        let y = random_complex(&mut rng, field, 3, 2);
        let z = random_complex(&mut rng, field, 3, 2);
        let alpha = random_chain_map(&mut rng, &x, &y);
        let beta = random_chain_map(&mut rng, &x, &z);
        let gm = gap_map(&alpha, &beta).expect("gap construction succeeds");
        assert!(gm.gap.is_quasi_iso(), "round {round}");
        checked += 1;
        if round < 3 {
            println!(
                "cospan {round}: X dim {:2}, M(alpha,beta) dim {:2}, P(alpha,beta) dim {:2}, gap map is a weak equivalence",
                x.total_dim(),
                gm.pushout_m.object.total_dim(),
                gm.pullback_p.object.total_dim()
            );
        }
    }
    println!("{checked}/25 random cospans: cartesian gap map is a quasi-isomorphism");
}
