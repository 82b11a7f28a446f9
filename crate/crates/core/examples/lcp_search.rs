// SPDX-License-Identifier: Apache-2.0

//! Seeded random search for LCP pairs with a large security parameter.
//!
//!     cargo run --release --example lcp_search -- [SEED]

use chainmix::lcp::lcp_search;
use chainmix::ChainRingSpec;

fn main() -> chainmix::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let spec = ChainRingSpec::new(3, 2, 1)?;
    let found = lcp_search(spec, 3, 2, 400, seed)?;
    println!("{spec} (3,2), seed {seed}: {} distinct LCP pairs", found.len());
    for cand in found.iter().take(3) {
        println!("\nsecurity {:?}", cand.security);
        println!("C {}", cand.c.code_type());
        for g in cand.c.generators() {
            println!("  {g}");
        }
        println!("D {}", cand.d.code_type());
        for g in cand.d.generators() {
            println!("  {g}");
        }
    }
    Ok(())
}
