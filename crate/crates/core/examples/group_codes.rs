// SPDX-License-Identifier: Apache-2.0

//! Ideals of Z4[C2] x Z2[C3]: every one splits into a product, and every
//! LCP pair (C, D) has D^perp permutation-equivalent to C.
//!
//!     cargo run --example group_codes

use chainmix::group::{enumerate_ideals, split_separable, verify_equivalence_theorem, GroupSpec};
use chainmix::lcp::is_lcp;
use chainmix::ChainRingSpec;

fn main() -> chainmix::Result<()> {
    let spec = ChainRingSpec::new(2, 2, 1)?;
    let (h, k) = (GroupSpec::cyclic(2)?, GroupSpec::cyclic(3)?);
    let ideals = enumerate_ideals(spec, &h, &k, 1 << 12)?;
    println!("{} ideals", ideals.len());
    for c in &ideals {
        let (c1, c2) = split_separable(c, &h, &k)?;
        println!("  {:<18} = {} x {}", c.code_type().to_string(), c1.dimension(), c2.dimension());
    }

    println!("\nLCP pairs:");
    for c in &ideals {
        for d in &ideals {
            if is_lcp(c, d)?.is_lcp {
                let w = verify_equivalence_theorem(c, d, &h, &k, 1_000)?;
                println!("  dims ({}, {}) witness {:?}", c.dimension(), d.dimension(), w);
            }
        }
    }
    Ok(())
}
