// SPDX-License-Identifier: Apache-2.0

//! Cross-check the fast paths against brute-force enumeration.
//!
//!     cargo run --release --example oracle_checks -- [INSTANCES]

use chainmix::oracle::{ring_map_report, verify_ambient};
use chainmix::{Ambient, ChainRingSpec};

fn main() -> chainmix::Result<()> {
    let instances = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(50);
    let mut failures = 0;
    for (p, s, r, alpha, beta) in [(2, 2, 1, 2, 2), (2, 3, 1, 2, 1), (5, 2, 1, 1, 1)] {
        let spec = ChainRingSpec::new(p, s, r)?;
        let mut reports = vec![ring_map_report(spec)];
        reports.extend(verify_ambient(Ambient::new(spec, alpha, beta), instances, 7)?);
        for rep in reports {
            failures += rep.failures;
            println!("{rep}");
        }
    }
    if failures > 0 {
        std::process::exit(1);
    }
    Ok(())
}
