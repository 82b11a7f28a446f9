// SPDX-License-Identifier: Apache-2.0

//! The scalar maps between Z_{p^s} and Z_{p^r}, shown on Z8 and Z4.
//!
//!     cargo run --example ring_maps

use chainmix::ChainRingSpec;

fn main() -> chainmix::Result<()> {
    let spec = ChainRingSpec::new(2, 3, 2)?;
    let teich: Vec<u64> = spec.teichmuller_set().iter().map(|t| t.value()).collect();
    println!("{spec}: Teichmuller set {teich:?}");

    println!("  x  digits   pi(x)");
    for x in 0..8 {
        let e = spec.full(x);
        let digits: Vec<u64> = spec.gamma_digits(e).iter().map(|d| d.value()).collect();
        println!("{x:>3}  {digits:?}  {}", spec.pi(e)?.value());
    }

    println!("\n  u  iota(u)  chi(u)  psi(chi(u))");
    for u in 0..4 {
        let e = spec.quotient(u);
        let chi = spec.chi(e)?;
        println!("{u:>3}  {:>7}  {:>6}  {:>11}", spec.iota(e)?.value(), chi.value(), spec.psi(chi)?.value());
    }

    // psi is only defined on multiples of p^(s-r)
    match spec.psi(spec.full(3)) {
        Err(e) => println!("\npsi(3): {e}"),
        Ok(v) => println!("\npsi(3) = {}", v.value()),
    }
    Ok(())
}
