// SPDX-License-Identifier: Apache-2.0

#![allow(dead_code)]

use std::collections::HashSet;

use chainmix::lcp::{random_code, random_weakly_free};
use chainmix::{Ambient, ChainRingSpec, MixedCode};
use rand::Rng;

/// `(p, s, r, max α, max β)` for the desk-scale ambients.
pub const SPECS: [(u64, u32, u32, usize, usize); 3] = [(2, 2, 1, 3, 2), (2, 3, 2, 2, 2), (3, 2, 1, 2, 2)];

pub fn spec(p: u64, s: u32, r: u32) -> ChainRingSpec {
    ChainRingSpec::new(p, s, r).unwrap()
}

/// A random ambient with `1 ≤ α + β`, within the given caps.
pub fn random_ambient<R: Rng>(rng: &mut R, (p, s, r, amax, bmax): (u64, u32, u32, usize, usize)) -> Ambient {
    loop {
        let alpha = rng.random_range(0..=amax);
        let beta = rng.random_range(0..=bmax);
        if alpha + beta > 0 {
            return Ambient::new(spec(p, s, r), alpha, beta);
        }
    }
}

pub fn random_wf<R: Rng>(rng: &mut R, amb: Ambient) -> MixedCode {
    let mu = rng.random_range(0..=amb.alpha);
    let rho = rng.random_range(0..=amb.beta);
    random_weakly_free(rng, amb, mu, rho)
}

/// Complementary-type partner of `c` when possible.
pub fn random_partner<R: Rng>(rng: &mut R, c: &MixedCode) -> MixedCode {
    let amb = c.ambient();
    let t = c.code_type();
    if t.is_weakly_free() && rng.random_bool(0.7) {
        random_weakly_free(rng, amb, amb.alpha - t.mu, amb.beta - t.rho)
    } else {
        random_wf(rng, amb)
    }
}

pub fn random_any<R: Rng>(rng: &mut R, amb: Ambient) -> MixedCode {
    let rows = rng.random_range(0..=amb.len() + 1);
    random_code(rng, amb, rows)
}

pub fn words(c: &MixedCode) -> HashSet<Vec<u64>> {
    c.codewords(1 << 22).unwrap().iter().map(|v| v.flat()).collect()
}
