// SPDX-License-Identifier: Apache-2.0

//! Linear complementary pairs: `C ∩ D = {0}` and `C + D` is the ambient.
//!
//! The decision stacks the standard rows of `C` over those of `D`, lifts the
//! R̄-block with `ι` and asks for a square matrix that is invertible over `R`
//! together with `dim C + dim D = sα + rβ`.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::code::{iota_vec, Ambient, MixedCode, MixedVector, DEFAULT_ENUMERATION_BUDGET};
use crate::error::{Error, Result};
use crate::matrix::{is_nonsingular, RingMatrix};
use crate::ring::{ChainRingSpec, Level};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LcpReason {
    NonsquareStack,
    SingularIotaG,
    /// Unreachable in practice: a nonsingular square lift forces
    /// complementary weakly-free types, hence matching dimensions. Kept so
    /// the verdict checks both conditions independently.
    DimensionMismatch,
    Ok,
}

impl fmt::Display for LcpReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LcpReason::NonsquareStack => "nonsquare_stack",
            LcpReason::SingularIotaG => "singular_iota_G",
            LcpReason::DimensionMismatch => "dimension_mismatch",
            LcpReason::Ok => "ok",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcpVerdict {
    pub is_lcp: bool,
    pub reason: LcpReason,
    pub stacked_dim: u64,
    pub ambient_dim: u64,
}

impl LcpVerdict {
    fn new(reason: LcpReason, stacked_dim: u64, ambient_dim: u64) -> Self {
        LcpVerdict {
            is_lcp: reason == LcpReason::Ok,
            reason,
            stacked_dim,
            ambient_dim,
        }
    }
}

fn same_ambient(c: &MixedCode, d: &MixedCode) -> Result<Ambient> {
    if c.ambient() != d.ambient() {
        return Err(Error::Shape("LCP pair over different ambients".into()));
    }
    Ok(c.ambient())
}

pub fn is_lcp(c: &MixedCode, d: &MixedCode) -> Result<LcpVerdict> {
    let ambient = same_ambient(c, d)?;
    let rows_c = c.standard_generator_matrix().rows;
    let rows_d = d.standard_generator_matrix().rows;
    let stacked_dim = c.dimension() + d.dimension();
    let ambient_dim = ambient.dimension();

    let stacked: Vec<Vec<u64>> = rows_c.iter().chain(&rows_d).map(iota_vec).collect();
    if stacked.len() != ambient.len() {
        return Ok(LcpVerdict::new(LcpReason::NonsquareStack, stacked_dim, ambient_dim));
    }
    let g = RingMatrix::from_raw_rows(ambient.spec, Level::Full, ambient.len(), stacked);
    if !is_nonsingular(&g)? {
        return Ok(LcpVerdict::new(LcpReason::SingularIotaG, stacked_dim, ambient_dim));
    }
    if stacked_dim != ambient_dim {
        return Ok(LcpVerdict::new(LcpReason::DimensionMismatch, stacked_dim, ambient_dim));
    }
    Ok(LcpVerdict::new(LcpReason::Ok, stacked_dim, ambient_dim))
}

/// `min{d(C), d(D⊥)}`, skipping whichever code is zero. `None` only when
/// both are zero.
pub fn security_parameter(c: &MixedCode, d: &MixedCode, budget: u64) -> Result<Option<usize>> {
    if !is_lcp(c, d)?.is_lcp {
        return Err(Error::NotLcp);
    }
    let dc = c.min_distance(budget)?;
    let dd = d.dual().min_distance(budget)?;
    Ok(match (dc, dd) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    })
}

/// A random weakly-free code with `μ` free rows and `ρ` rows carrying
/// `θ^{s-r}`: the blocks of
///
/// ```text
/// ( I_μ  A          | 0    B̄ )
/// ( 0    θ^{s-r} C  | I_ρ  D̄ )
/// ```
///
/// are filled uniformly and the columns of each block shuffled.
pub fn random_weakly_free<R: Rng>(rng: &mut R, ambient: Ambient, mu: usize, rho: usize) -> MixedCode {
    let Ambient { spec, alpha, beta } = ambient;
    assert!(mu <= alpha && rho <= beta, "type ({mu}, {rho}) does not fit ({alpha}, {beta})");
    let full = spec.modulus(Level::Full);
    let quot = spec.modulus(Level::Quotient);
    let theta_gap = spec.theta_gap();

    let mut rows = Vec::with_capacity(mu + rho);
    for i in 0..mu {
        let mut r = vec![0u64; alpha];
        let mut rb = vec![0u64; beta];
        r[i] = 1 % full;
        for x in &mut r[mu..] {
            *x = rng.random_range(0..full);
        }
        for x in &mut rb[rho..] {
            *x = rng.random_range(0..quot);
        }
        rows.push((r, rb));
    }
    for i in 0..rho {
        let mut r = vec![0u64; alpha];
        let mut rb = vec![0u64; beta];
        for x in &mut r[mu..] {
            *x = rng.random_range(0..quot) * theta_gap % full;
        }
        rb[i] = 1 % quot;
        for x in &mut rb[rho..] {
            *x = rng.random_range(0..quot);
        }
        rows.push((r, rb));
    }

    let mut perm_r: Vec<usize> = (0..alpha).collect();
    let mut perm_rbar: Vec<usize> = (0..beta).collect();
    perm_r.shuffle(rng);
    perm_rbar.shuffle(rng);
    let gens = rows
        .into_iter()
        .map(|(r, rb)| MixedVector::from_raw(ambient, r, rb).permute(&perm_r, &perm_rbar))
        .collect();
    MixedCode::new(ambient, gens).expect("rows built over the ambient")
}

/// A code spanned by `rows` uniformly random vectors; no structure implied.
pub fn random_code<R: Rng>(rng: &mut R, ambient: Ambient, rows: usize) -> MixedCode {
    let full = ambient.spec.modulus(Level::Full);
    let quot = ambient.spec.modulus(Level::Quotient);
    let gens = (0..rows)
        .map(|_| {
            let r = (0..ambient.alpha).map(|_| rng.random_range(0..full)).collect();
            let rb = (0..ambient.beta).map(|_| rng.random_range(0..quot)).collect();
            MixedVector::from_raw(ambient, r, rb)
        })
        .collect();
    MixedCode::new(ambient, gens).expect("rows built over the ambient")
}

#[derive(Debug, Clone)]
pub struct LcpCandidate {
    pub c: MixedCode,
    pub d: MixedCode,
    pub security: Option<usize>,
}

fn sort_key(code: &MixedCode) -> Vec<u64> {
    code.generators().iter().flat_map(|v| v.flat()).collect()
}

/// Draws `budget` random pairs of complementary weakly-free types, keeps
/// the distinct LCP pairs, and orders them by security parameter
/// (descending), then `dim C`, then generator rows.
///
/// Candidates are drawn sequentially from the seed and evaluated in
/// parallel, so the result depends only on the arguments.
pub fn lcp_search(spec: ChainRingSpec, alpha: usize, beta: usize, budget: usize, seed: u64) -> Result<Vec<LcpCandidate>> {
    let ambient = Ambient::new(spec, alpha, beta);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let drawn: Vec<(MixedCode, MixedCode)> = (0..budget)
        .map(|_| {
            let mu = rng.random_range(0..=alpha);
            let rho = rng.random_range(0..=beta);
            let c = random_weakly_free(&mut rng, ambient, mu, rho);
            let d = random_weakly_free(&mut rng, ambient, alpha - mu, beta - rho);
            (c.reduced(), d.reduced())
        })
        .collect();

    let evaluated: Vec<Option<LcpCandidate>> = drawn
        .into_par_iter()
        .map(|(c, d)| -> Result<Option<LcpCandidate>> {
            if !is_lcp(&c, &d)?.is_lcp {
                return Ok(None);
            }
            let security = security_parameter(&c, &d, DEFAULT_ENUMERATION_BUDGET)?;
            Ok(Some(LcpCandidate { c, d, security }))
        })
        .collect::<Result<_>>()?;

    let mut found: Vec<(Vec<u64>, Vec<u64>, LcpCandidate)> = evaluated
        .into_iter()
        .flatten()
        .map(|cand| (sort_key(&cand.c), sort_key(&cand.d), cand))
        .collect();
    found.sort_by(|a, b| {
        b.2.security
            .cmp(&a.2.security)
            .then_with(|| a.2.c.dimension().cmp(&b.2.c.dimension()))
            .then_with(|| a.0.cmp(&b.0))
            .then_with(|| a.1.cmp(&b.1))
    });
    found.dedup_by(|a, b| a.0 == b.0 && a.1 == b.1);
    Ok(found.into_iter().map(|(_, _, cand)| cand).collect())
}
