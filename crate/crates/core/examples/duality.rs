// SPDX-License-Identifier: Apache-2.0

//! Dual codes under the mixed inner product, and how dimensions add up.
//!
//!     cargo run --example duality

use chainmix::code::inner_product;
use chainmix::{Ambient, ChainRingSpec, MixedCode};

fn main() -> chainmix::Result<()> {
    let amb = Ambient::new(ChainRingSpec::new(2, 3, 2)?, 3, 2);
    let codes = [
        ("weakly-free", vec![vec![1, 2, 3, 1, 0], vec![0, 0, 4, 0, 1]]),
        ("theta-row in R-block", vec![vec![2, 0, 0, 0, 0]]),
        ("diagonal", vec![vec![1, 1, 1, 1, 1]]),
    ];
    for (name, rows) in codes {
        let c = MixedCode::from_rows(amb, &rows)?;
        let d = c.dual().reduced();
        println!("{name}: C type {}, dual type {}", c.code_type(), d.code_type());
        println!(
            "  dim C + dim C^perp = {} + {} = {} (ambient {})",
            c.dimension(),
            d.dimension(),
            c.dimension() + d.dimension(),
            amb.dimension()
        );
        println!("  double dual is C: {}", d.dual().same_code(&c)?);
        let orthogonal = c
            .generators()
            .iter()
            .all(|x| d.generators().iter().all(|y| inner_product(x, y).map(|v| v.value() == 0).unwrap_or(false)));
        println!("  generators pairwise orthogonal: {orthogonal}");
        for row in d.generators() {
            println!("    {row}");
        }
    }
    Ok(())
}
