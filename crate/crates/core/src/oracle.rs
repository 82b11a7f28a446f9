// SPDX-License-Identifier: Apache-2.0

//! Brute-force reference implementations.
//!
//! Everything here is written from the definitions using only ring
//! arithmetic: spans are closed by repeated addition of scalar multiples,
//! duals scan the whole ambient space. Nothing calls the row-reduction
//! path, so agreement with it is evidence rather than tautology.

use std::collections::HashSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::code::{Ambient, MixedCode, MixedVector};
use crate::error::{Error, Result};
use crate::lcp::{is_lcp, random_code, random_weakly_free};
use crate::ring::{add_mod, mul_mod, ChainRingSpec, Level};

/// Largest ambient the dual oracle will scan.
pub const ORACLE_AMBIENT_LIMIT: u64 = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub checked: String,
    pub instances: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl OracleReport {
    pub fn new(checked: &str) -> Self {
        OracleReport {
            checked: checked.to_string(),
            instances: 0,
            failures: 0,
            first_failure: None,
        }
    }

    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} instances, {} failures", self.checked, self.instances, self.failures)?;
        if let Some(ex) = &self.first_failure {
            write!(f, " (first: {ex})")?;
        }
        Ok(())
    }
}

fn ambient_size(ambient: Ambient, limit: u64) -> Result<u64> {
    let size = ambient.size();
    if size > limit as u128 {
        return Err(Error::EnumerationBudget { needed: size, budget: limit });
    }
    Ok(size as u64)
}

/// `a ∗ v + w` straight from the module action.
fn axpy(spec: ChainRingSpec, alpha: usize, a: u64, v: &[u64], w: &[u64]) -> Vec<u64> {
    let full = spec.modulus(Level::Full);
    let quot = spec.modulus(Level::Quotient);
    let abar = a % quot;
    v.iter()
        .zip(w)
        .enumerate()
        .map(|(i, (&x, &y))| {
            if i < alpha {
                add_mod(mul_mod(a, x, full), y, full)
            } else {
                add_mod(mul_mod(abar, x, quot), y, quot)
            }
        })
        .collect()
}

/// All codewords of `C` as flat residue vectors.
pub fn oracle_span(c: &MixedCode, limit: u64) -> Result<HashSet<Vec<u64>>> {
    let ambient = c.ambient();
    let spec = ambient.spec;
    let full = spec.modulus(Level::Full);
    let mut span: HashSet<Vec<u64>> = HashSet::from([vec![0; ambient.len()]]);
    for g in c.generators() {
        let g = g.flat();
        let mut next = HashSet::new();
        for w in &span {
            for a in 0..full {
                next.insert(axpy(spec, ambient.alpha, a, &g, w));
            }
            if next.len() as u64 > limit {
                return Err(Error::EnumerationBudget {
                    needed: next.len() as u128,
                    budget: limit,
                });
            }
        }
        span = next;
    }
    Ok(span)
}

/// `⟨u, v⟩_R + χ(⟨ū, v̄⟩_R̄)` on flat vectors.
pub fn oracle_inner(spec: ChainRingSpec, alpha: usize, u: &[u64], v: &[u64]) -> u64 {
    let full = spec.modulus(Level::Full);
    let quot = spec.modulus(Level::Quotient);
    let mut left = 0;
    let mut right = 0;
    for (i, (&x, &y)) in u.iter().zip(v).enumerate() {
        if i < alpha {
            left = add_mod(left, mul_mod(x, y, full), full);
        } else {
            right = add_mod(right, mul_mod(x, y, quot), quot);
        }
    }
    let chi = spec.chi(spec.quotient(right as i64)).expect("quotient level").value();
    add_mod(left, chi, full)
}

fn ambient_vector(ambient: Ambient, mut index: u64) -> Vec<u64> {
    let full = ambient.spec.modulus(Level::Full);
    let quot = ambient.spec.modulus(Level::Quotient);
    let mut out = vec![0; ambient.len()];
    for (i, slot) in out.iter_mut().enumerate().rev() {
        let m = if i < ambient.alpha { full } else { quot };
        *slot = index % m;
        index /= m;
    }
    out
}

fn ambient_index(ambient: Ambient, v: &[u64]) -> u64 {
    let full = ambient.spec.modulus(Level::Full);
    let quot = ambient.spec.modulus(Level::Quotient);
    v.iter().enumerate().fold(0, |acc, (i, &x)| {
        let m = if i < ambient.alpha { full } else { quot };
        acc * m + x
    })
}

/// Every vector of the ambient orthogonal to all of `C`. Testing against
/// the generators suffices because the form is biadditive and
/// `[a ∗ u, v] = a [u, v]`.
pub fn oracle_dual_codewords(c: &MixedCode) -> Result<HashSet<Vec<u64>>> {
    let ambient = c.ambient();
    let size = ambient_size(ambient, ORACLE_AMBIENT_LIMIT)?;
    let gens: Vec<Vec<u64>> = c.generators().iter().map(|g| g.flat()).collect();
    Ok((0..size)
        .map(|i| ambient_vector(ambient, i))
        .filter(|v| gens.iter().all(|g| oracle_inner(ambient.spec, ambient.alpha, g, v) == 0))
        .collect())
}

/// The dual as a code, with a greedy generating set drawn from the scan.
pub fn oracle_dual(c: &MixedCode) -> Result<MixedCode> {
    let ambient = c.ambient();
    let mut words: Vec<Vec<u64>> = oracle_dual_codewords(c)?.into_iter().collect();
    words.sort();
    let mut gens: Vec<MixedVector> = Vec::new();
    let mut span: HashSet<Vec<u64>> = HashSet::from([vec![0; ambient.len()]]);
    for w in words {
        if span.contains(&w) {
            continue;
        }
        let v = MixedVector::from_raw(ambient, w[..ambient.alpha].to_vec(), w[ambient.alpha..].to_vec());
        gens.push(v);
        span = oracle_span(&MixedCode::new(ambient, gens.clone())?, ORACLE_AMBIENT_LIMIT)?;
    }
    MixedCode::new(ambient, gens)
}

/// Whether `(c, d) ↦ c + d` is a bijection `C × D → R^α × R̄^β`.
pub fn oracle_direct_sum(c: &MixedCode, d: &MixedCode, limit: u64) -> Result<bool> {
    let ambient = c.ambient();
    if d.ambient() != ambient {
        return Err(Error::Shape("direct sum over different ambients".into()));
    }
    let size = ambient_size(ambient, limit)?;
    let sc = oracle_span(c, limit)?;
    let sd = oracle_span(d, limit)?;
    if (sc.len() as u128) * (sd.len() as u128) != size as u128 {
        return Ok(false);
    }
    let full = ambient.spec.modulus(Level::Full);
    let quot = ambient.spec.modulus(Level::Quotient);
    let mut hit = vec![false; size as usize];
    for x in &sc {
        for y in &sd {
            let sum: Vec<u64> = x
                .iter()
                .zip(y)
                .enumerate()
                .map(|(i, (&a, &b))| add_mod(a, b, if i < ambient.alpha { full } else { quot }))
                .collect();
            let idx = ambient_index(ambient, &sum) as usize;
            if hit[idx] {
                return Ok(false);
            }
            hit[idx] = true;
        }
    }
    Ok(true)
}

/// Exhaustive checks of the scalar maps for one ring pair.
pub fn ring_map_report(spec: ChainRingSpec) -> OracleReport {
    let mut report = OracleReport::new(&format!("ring maps over {spec}"));
    let p = spec.p();
    let full = spec.modulus(Level::Full);
    let quot = spec.modulus(Level::Quotient);
    let shift = p.pow(spec.gap());
    for u in 0..quot {
        let ubar = spec.quotient(u as i64);
        let back = spec.pi(spec.iota(ubar).unwrap()).unwrap();
        report.record(back == ubar, || format!("pi(iota({u})) = {}", back.value()));
        let chi = spec.chi(ubar).unwrap();
        let psi = spec.psi(chi).unwrap();
        report.record(psi == ubar, || format!("psi(chi({u})) = {}", psi.value()));
    }
    for x in 0..full {
        let xe = spec.full(x as i64);
        let lhs = mul_mod(shift, spec.iota(spec.pi(xe).unwrap()).unwrap().value(), full);
        let rhs = mul_mod(shift, x, full);
        report.record(lhs == rhs, || format!("p^(s-r) iota(pi({x})) = {lhs}, p^(s-r) x = {rhs}"));

        let digits = spec.gamma_digits(xe);
        let mut acc = 0;
        let mut pw = 1 % full;
        for d in &digits {
            acc = add_mod(acc, mul_mod(d.value(), pw, full), full);
            pw = mul_mod(pw, p, full);
        }
        let teich: HashSet<u64> = spec.teichmuller_set().iter().map(|t| t.value()).collect();
        let in_set = digits.iter().all(|d| teich.contains(&d.value()));
        report.record(acc == x && in_set, || format!("digits of {x} reconstruct {acc}"));
    }
    for u in 0..full {
        for v in 0..full {
            let (ue, ve) = (spec.full(u as i64), spec.full(v as i64));
            let lhs = spec.chi(spec.pi(spec.mul(ue, ve).unwrap()).unwrap()).unwrap();
            let rhs = mul_mod(
                spec.chi(spec.pi(ue).unwrap()).unwrap().value(),
                spec.iota(spec.pi(ve).unwrap()).unwrap().value(),
                full,
            );
            report.record(lhs.value() == rhs, || format!("product rule at ({u}, {v})"));
        }
    }
    report
}

/// Seeded comparison of the fast paths with the oracles over one ambient.
pub fn verify_ambient(ambient: Ambient, instances: usize, seed: u64) -> Result<Vec<OracleReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tag = format!("{} ({},{})", ambient.spec, ambient.alpha, ambient.beta);
    let mut span_report = OracleReport::new(&format!("standard form span {tag}"));
    let mut dual_report = OracleReport::new(&format!("dual vs oracle dual {tag}"));
    let mut lcp_report = OracleReport::new(&format!("lcp decision vs direct sum {tag}"));
    let limit = ORACLE_AMBIENT_LIMIT;

    for i in 0..instances {
        let c = if i % 2 == 0 {
            let mu = rng.random_range(0..=ambient.alpha);
            let rho = rng.random_range(0..=ambient.beta);
            random_weakly_free(&mut rng, ambient, mu, rho)
        } else {
            let rows = rng.random_range(0..=ambient.len());
            random_code(&mut rng, ambient, rows)
        };
        let describe = |c: &MixedCode| {
            c.generators().iter().map(|g| format!("[{g}]")).collect::<Vec<_>>().join(" ")
        };

        let fast: HashSet<Vec<u64>> = c.codewords(limit)?.iter().map(|v| v.flat()).collect();
        let slow = oracle_span(&c, limit)?;
        span_report.record(fast == slow, || describe(&c));

        let fast_dual: HashSet<Vec<u64>> = c.dual().codewords(limit)?.iter().map(|v| v.flat()).collect();
        let slow_dual = oracle_dual_codewords(&c)?;
        dual_report.record(fast_dual == slow_dual, || describe(&c));

        let mu = rng.random_range(0..=ambient.alpha);
        let rho = rng.random_range(0..=ambient.beta);
        let d = if rng.random_bool(0.5) {
            random_weakly_free(&mut rng, ambient, mu, rho)
        } else {
            let t = c.code_type();
            random_weakly_free(&mut rng, ambient, ambient.alpha - t.mu.min(ambient.alpha), ambient.beta - t.rho.min(ambient.beta))
        };
        let fast_lcp = is_lcp(&c, &d)?.is_lcp;
        let slow_lcp = oracle_direct_sum(&c, &d, limit)?;
        lcp_report.record(fast_lcp == slow_lcp, || format!("{} ; {}", describe(&c), describe(&d)));
    }
    Ok(vec![span_report, dual_report, lcp_report])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4(alpha: usize, beta: usize) -> Ambient {
        Ambient::new(ChainRingSpec::new(2, 2, 1).unwrap(), alpha, beta)
    }

    fn code(amb: Ambient, rows: &[&[i64]]) -> MixedCode {
        MixedCode::from_rows(amb, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn span_of_trivial_codes() {
        let amb = z4(1, 2);
        assert_eq!(oracle_span(&MixedCode::zero(amb), 1 << 10).unwrap().len(), 1);
        assert_eq!(oracle_span(&MixedCode::whole(amb), 1 << 10).unwrap().len(), 16);
    }

    #[test]
    fn dual_of_trivial_codes() {
        let amb = z4(1, 2);
        assert_eq!(oracle_dual_codewords(&MixedCode::zero(amb)).unwrap().len(), 16);
        assert_eq!(oracle_dual_codewords(&MixedCode::whole(amb)).unwrap().len(), 1);
        let d = oracle_dual(&MixedCode::zero(amb)).unwrap();
        assert_eq!(oracle_span(&d, 1 << 10).unwrap().len(), 16);
    }

    #[test]
    fn direct_sum_examples() {
        let amb = z4(2, 0);
        let c = code(amb, &[&[1, 1]]);
        assert!(oracle_direct_sum(&MixedCode::whole(amb), &MixedCode::zero(amb), 1 << 10).unwrap());
        assert!(!oracle_direct_sum(&c, &c, 1 << 10).unwrap());
        assert!(oracle_direct_sum(&c, &code(amb, &[&[0, 1]]), 1 << 10).unwrap());
        assert!(!oracle_direct_sum(&c, &code(amb, &[&[1, 3]]), 1 << 10).unwrap());
        let zero = MixedCode::zero(amb);
        assert!(!oracle_direct_sum(&zero, &zero, 1 << 10).unwrap());
    }

    #[test]
    fn ring_maps_hold() {
        for (p, s, r) in [(2, 2, 1), (2, 3, 2), (3, 2, 1), (5, 3, 1)] {
            let report = ring_map_report(ChainRingSpec::new(p, s, r).unwrap());
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn oracle_inner_matches_examples() {
        let spec = ChainRingSpec::new(2, 3, 2).unwrap();
        assert_eq!(oracle_inner(spec, 4, &[0, 6, 6, 0, 1, 0, 0], &[0, 1, 0, 0, 1, 2, 0]), 0);
        assert_eq!(oracle_inner(spec, 4, &[1, 0, 0, 0, 0, 0, 0], &[1, 0, 0, 0, 0, 0, 0]), 1);
    }

    #[test]
    fn budget_is_reported() {
        let amb = Ambient::new(ChainRingSpec::new(2, 3, 2).unwrap(), 8, 0);
        assert!(matches!(oracle_dual_codewords(&MixedCode::zero(amb)), Err(Error::EnumerationBudget { .. })));
    }
}
