// SPDX-License-Identifier: Apache-2.0

//! Deciding linear complementary pairs by lifting a stacked generator
//! matrix, and the security parameter of a pair.
//!
//!     cargo run --example lcp_decision

use chainmix::lcp::{is_lcp, security_parameter};
use chainmix::oracle::oracle_direct_sum;
use chainmix::{Ambient, ChainRingSpec, MixedCode};

fn main() -> chainmix::Result<()> {
    let amb = Ambient::new(ChainRingSpec::new(2, 2, 1)?, 2, 1);
    let pairs = [
        (vec![vec![1, 1, 0]], vec![vec![0, 1, 0], vec![0, 0, 1]]),
        (vec![vec![1, 1, 0]], vec![vec![1, 3, 0], vec![0, 0, 1]]),
        (vec![vec![1, 0, 1], vec![0, 2, 1]], vec![vec![0, 1, 0]]),
        (vec![vec![2, 2, 1]], vec![vec![1, 0, 1], vec![0, 1, 1]]),
    ];
    for (a, b) in pairs {
        let c = MixedCode::from_rows(amb, &a)?;
        let d = MixedCode::from_rows(amb, &b)?;
        let v = is_lcp(&c, &d)?;
        print!("C {} / D {}: {}", c.code_type(), d.code_type(), v.reason);
        print!(" (direct sum by enumeration: {})", oracle_direct_sum(&c, &d, 1 << 12)?);
        if v.is_lcp {
            let sec = security_parameter(&c, &d, 1 << 12)?;
            print!(", security {}", sec.map_or("undefined".into(), |d| d.to_string()));
        }
        println!();
    }
    Ok(())
}
