// SPDX-License-Identifier: Apache-2.0

//! Group codes: mixed codes that are ideals of `R[H] × R̄[K]`.
//!
//! A group-ring element is its coefficient vector under a fixed ordering of
//! the group, so `R[H] × R̄[K]` and `R^α × R̄^β` share one representation.
//! Elements of a finite abelian group `C_{n_1} × … × C_{n_t}` are indexed by
//! their exponent tuples read in mixed radix, first factor most significant;
//! index 0 is the identity.

use std::collections::{BTreeMap, HashSet};

use itertools::Itertools;

use crate::code::{Ambient, MixedCode, MixedVector};
use crate::error::{Error, Result};
use crate::lcp::is_lcp;
use crate::ring::ChainRingSpec;

/// Default cap on `α!·β!` for the permutation search.
pub const DEFAULT_PERMUTATION_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    factors: Vec<usize>,
    order: usize,
}

impl GroupSpec {
    /// The direct product of cyclic groups of the given orders. An empty
    /// list gives the trivial group.
    pub fn new(factors: &[usize]) -> Result<Self> {
        if let Some(&bad) = factors.iter().find(|&&n| n < 2) {
            return Err(Error::InvalidSpec(format!("cyclic factor of order {bad}")));
        }
        let order = factors
            .iter()
            .try_fold(1usize, |acc, &n| acc.checked_mul(n))
            .ok_or_else(|| Error::InvalidSpec("group order overflows".into()))?;
        Ok(GroupSpec {
            factors: factors.to_vec(),
            order,
        })
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        GroupSpec::new(&[n])
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn check(&self, index: usize) -> Result<()> {
        if index < self.order {
            Ok(())
        } else {
            Err(Error::GroupIndex {
                index,
                order: self.order,
            })
        }
    }

    fn exponents(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for (slot, &n) in out.iter_mut().zip(&self.factors).rev() {
            *slot = index % n;
            index /= n;
        }
        out
    }

    fn index(&self, exps: &[usize]) -> usize {
        exps.iter().zip(&self.factors).fold(0, |acc, (&e, &n)| acc * n + e % n)
    }

    /// Index of the product `a·b`.
    pub fn mul(&self, a: usize, b: usize) -> Result<usize> {
        self.check(a)?;
        self.check(b)?;
        let ea = self.exponents(a);
        let eb = self.exponents(b);
        let sum: Vec<usize> = ea.iter().zip(&eb).map(|(x, y)| x + y).collect();
        Ok(self.index(&sum))
    }

    /// One generator per cyclic factor, in factor order.
    pub fn generators(&self) -> Vec<usize> {
        (0..self.factors.len())
            .map(|j| {
                let mut e = vec![0; self.factors.len()];
                e[j] = 1;
                self.index(&e)
            })
            .collect()
    }

    /// `g ↦ h·g` as a table.
    fn translation(&self, h: usize) -> Vec<usize> {
        (0..self.order).map(|g| self.mul(h, g).expect("indices in range")).collect()
    }
}

fn check_shape(ambient: Ambient, h: &GroupSpec, k: &GroupSpec) -> Result<()> {
    if ambient.alpha != h.order || ambient.beta != k.order {
        return Err(Error::Shape(format!(
            "groups of order ({}, {}) for ambient ({}, {})",
            h.order, k.order, ambient.alpha, ambient.beta
        )));
    }
    Ok(())
}

/// Multiplication by the monomial `(h, k)`: the coefficient at `g` moves to
/// `h·g` in the R-block and likewise with `k` in the R̄-block.
pub fn shift_action(v: &MixedVector, h_index: usize, k_index: usize, h: &GroupSpec, k: &GroupSpec) -> Result<MixedVector> {
    check_shape(v.ambient(), h, k)?;
    h.check(h_index)?;
    k.check(k_index)?;
    let th = h.translation(h_index);
    let tk = k.translation(k_index);
    let mut r_part = vec![0; h.order];
    let mut rbar_part = vec![0; k.order];
    for (g, &x) in v.r_part().iter().enumerate() {
        r_part[th[g]] = x;
    }
    for (g, &x) in v.rbar_part().iter().enumerate() {
        rbar_part[tk[g]] = x;
    }
    Ok(MixedVector::from_raw(v.ambient(), r_part, rbar_part))
}

/// The ring elements whose multiples generate every ideal operation:
/// `(h, 1)` for generators `h` of `H`, `(1, k)` for generators `k` of `K`,
/// and the idempotent `(1, 0)`.
fn ideal_actions(v: &MixedVector, h: &GroupSpec, k: &GroupSpec) -> Vec<MixedVector> {
    let mut out: Vec<MixedVector> = h
        .generators()
        .into_iter()
        .map(|g| shift_action(v, g, 0, h, k).expect("shape checked"))
        .collect();
    out.extend(
        k.generators()
            .into_iter()
            .map(|g| shift_action(v, 0, g, h, k).expect("shape checked")),
    );
    out.push(v.r_projection());
    out
}

/// Whether `C` is an ideal of `R[H] × R̄[K]`.
///
/// Closure under the two families of shifts is not enough on its own: the
/// product ring also contains `(1, 0)`, and e.g. `⟨(1,1 | 1,1)⟩` over
/// `Z4[C2] × Z2[C2]` is shift-invariant but does not contain `(1,1 | 0,0)`.
pub fn is_group_code(c: &MixedCode, h: &GroupSpec, k: &GroupSpec) -> Result<bool> {
    check_shape(c.ambient(), h, k)?;
    for v in c.reduced().generators() {
        for w in ideal_actions(v, h, k) {
            if !c.contains(&w)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The smallest ideal containing `gens`.
pub fn ideal_generated(ambient: Ambient, gens: &[MixedVector], h: &GroupSpec, k: &GroupSpec) -> Result<MixedCode> {
    check_shape(ambient, h, k)?;
    let mut code = MixedCode::new(ambient, gens.to_vec())?;
    let mut pending: Vec<MixedVector> = gens.to_vec();
    while let Some(v) = pending.pop() {
        for w in ideal_actions(&v, h, k) {
            if !code.contains(&w)? {
                code = code.sum(&MixedCode::new(ambient, vec![w.clone()])?)?.reduced();
                pending.push(w);
            }
        }
    }
    Ok(code.reduced())
}

/// Splits a group code into its R-block and R̄-block codes and checks that
/// `C` is their product.
pub fn split_separable(c: &MixedCode, h: &GroupSpec, k: &GroupSpec) -> Result<(MixedCode, MixedCode)> {
    if !is_group_code(c, h, k)? {
        return Err(Error::NotGroupCode);
    }
    let c1 = c.r_component().reduced();
    let c2 = c.rbar_component().reduced();
    let product = MixedCode::product(&c1, &c2)?;
    if product.dimension() != c.dimension() || !product.is_subcode_of(c)? {
        return Err(Error::SplitFailed(format!(
            "dim C = {}, dim C1 x C2 = {}",
            c.dimension(),
            product.dimension()
        )));
    }
    Ok((c1, c2))
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// For an LCP pair of group codes, searches for block permutations `σ`
/// with `σ(D⊥) = C`, where `(σv)_j = v_{σ(j)}` in each block. Returns the
/// lexicographically first witness.
pub fn verify_equivalence_theorem(
    c: &MixedCode,
    d: &MixedCode,
    h: &GroupSpec,
    k: &GroupSpec,
    budget: u64,
) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    if !is_group_code(c, h, k)? || !is_group_code(d, h, k)? {
        return Err(Error::NotGroupCode);
    }
    if !is_lcp(c, d)?.is_lcp {
        return Err(Error::NotLcp);
    }
    let ambient = c.ambient();
    let needed = factorial(ambient.alpha).saturating_mul(factorial(ambient.beta));
    if needed > budget as u128 {
        return Err(Error::EnumerationBudget { needed, budget });
    }

    let target = d.dual().reduced();
    if target.dimension() != c.dimension() {
        return Ok(None);
    }
    let enum_budget = crate::code::DEFAULT_ENUMERATION_BUDGET;
    if let (Ok(a), Ok(b)) = (target.weight_distribution(enum_budget), c.weight_distribution(enum_budget)) {
        if a != b {
            return Ok(None);
        }
    }

    let perms_r: Vec<Vec<usize>> = (0..ambient.alpha).permutations(ambient.alpha).collect();
    let perms_rbar: Vec<Vec<usize>> = (0..ambient.beta).permutations(ambient.beta).collect();
    for (pr, pb) in perms_r.iter().cartesian_product(&perms_rbar) {
        let mut ok = true;
        for v in target.generators() {
            if !c.contains(&v.permute(pr, pb))? {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(Some((pr.clone(), pb.clone())));
        }
    }
    Ok(None)
}

/// Every ideal of `R[H] × R̄[K]`, ordered by dimension and then codewords.
///
/// Ideals are sums of principal ideals, so this closes the set of principal
/// ideals under pairwise sums. Codewords are listed, so the ambient must fit
/// `budget`.
pub fn enumerate_ideals(spec: ChainRingSpec, h: &GroupSpec, k: &GroupSpec, budget: u64) -> Result<Vec<MixedCode>> {
    let ambient = Ambient::new(spec, h.order, k.order);
    let whole = MixedCode::whole(ambient);
    let key = |c: &MixedCode| -> Result<Vec<Vec<u64>>> {
        let mut words: Vec<Vec<u64>> = c.codewords(budget)?.iter().map(|v| v.flat()).collect();
        words.sort();
        Ok(words)
    };

    let mut seen: HashSet<Vec<Vec<u64>>> = HashSet::new();
    let mut ideals: Vec<MixedCode> = Vec::new();
    for v in whole.codewords(budget)? {
        let ideal = ideal_generated(ambient, &[v], h, k)?;
        if seen.insert(key(&ideal)?) {
            ideals.push(ideal);
        }
    }
    let principal = ideals.clone();
    let mut frontier = ideals.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for b in &principal {
                let s = a.sum(b)?.reduced();
                if seen.insert(key(&s)?) {
                    next.push(s.clone());
                    ideals.push(s);
                }
            }
        }
        frontier = next;
    }

    let mut keyed: BTreeMap<(u64, Vec<Vec<u64>>), MixedCode> = BTreeMap::new();
    for c in ideals {
        keyed.insert((c.dimension(), key(&c)?), c);
    }
    Ok(keyed.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4z2(alpha: usize, beta: usize) -> Ambient {
        Ambient::new(ChainRingSpec::new(2, 2, 1).unwrap(), alpha, beta)
    }

    fn v(amb: Ambient, flat: &[i64]) -> MixedVector {
        MixedVector::from_flat(amb, flat).unwrap()
    }

    #[test]
    fn group_indexing() {
        let g = GroupSpec::new(&[2, 3]).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.generators(), vec![3, 1]);
        assert_eq!(g.mul(3, 3).unwrap(), 0);
        assert_eq!(g.mul(1, 2).unwrap(), 0);
        assert_eq!(g.mul(4, 5).unwrap(), 0);
        assert_eq!(g.mul(4, 4).unwrap(), 2);
        assert!(g.mul(6, 0).is_err());
        assert!(GroupSpec::new(&[1]).is_err());
        assert_eq!(GroupSpec::new(&[]).unwrap().order(), 1);
    }

    #[test]
    fn shift_examples() {
        let c2 = GroupSpec::cyclic(2).unwrap();
        let amb = z4z2(2, 2);
        let x = v(amb, &[1, 3, 0, 1]);
        assert_eq!(shift_action(&x, 1, 0, &c2, &c2).unwrap(), v(amb, &[3, 1, 0, 1]));
        assert_eq!(shift_action(&x, 0, 0, &c2, &c2).unwrap(), x);
        assert_eq!(shift_action(&x, 0, 1, &c2, &c2).unwrap(), v(amb, &[1, 3, 1, 0]));

        let c4 = GroupSpec::cyclic(4).unwrap();
        let trivial = GroupSpec::new(&[]).unwrap();
        let amb = Ambient::new(ChainRingSpec::new(2, 3, 2).unwrap(), 4, 1);
        let y = v(amb, &[1, 2, 3, 4, 0]);
        assert_eq!(shift_action(&y, 1, 0, &c4, &trivial).unwrap(), v(amb, &[4, 1, 2, 3, 0]));
        assert!(shift_action(&y, 4, 0, &c4, &trivial).is_err());
    }

    #[test]
    fn group_code_examples() {
        let c2 = GroupSpec::cyclic(2).unwrap();
        let amb = z4z2(2, 2);
        assert!(is_group_code(&MixedCode::whole(amb), &c2, &c2).unwrap());
        let fixed = MixedCode::new(amb, vec![v(amb, &[1, 1, 0, 0])]).unwrap();
        assert!(is_group_code(&fixed, &c2, &c2).unwrap());
        let unit = MixedCode::new(amb, vec![v(amb, &[1, 0, 0, 0])]).unwrap();
        assert!(!is_group_code(&unit, &c2, &c2).unwrap());
        // shift-invariant, yet not closed under (1, 0)
        let diagonal = MixedCode::new(amb, vec![v(amb, &[1, 1, 1, 1])]).unwrap();
        assert!(!is_group_code(&diagonal, &c2, &c2).unwrap());
    }

    #[test]
    fn closure_examples() {
        let c2 = GroupSpec::cyclic(2).unwrap();
        let amb = z4z2(2, 2);
        let c = ideal_generated(amb, &[v(amb, &[1, 1, 0, 0])], &c2, &c2).unwrap();
        assert_eq!(c.dimension(), 2);
        assert_eq!(c.codewords(64).unwrap().len(), 4);
        assert_eq!(ideal_generated(amb, &[], &c2, &c2).unwrap().dimension(), 0);
        let left = ideal_generated(amb, &[v(amb, &[1, 0, 0, 0])], &c2, &c2).unwrap();
        let expected = MixedCode::new(amb, vec![v(amb, &[1, 0, 0, 0]), v(amb, &[0, 1, 0, 0])]).unwrap();
        assert!(left.same_code(&expected).unwrap());
    }

    #[test]
    fn split_examples() {
        let c2 = GroupSpec::cyclic(2).unwrap();
        let amb = z4z2(2, 2);
        let (a, b) = split_separable(&MixedCode::whole(amb), &c2, &c2).unwrap();
        assert_eq!((a.dimension(), b.dimension()), (4, 2));
        let c = ideal_generated(amb, &[v(amb, &[1, 1, 0, 0])], &c2, &c2).unwrap();
        let (a, b) = split_separable(&c, &c2, &c2).unwrap();
        assert_eq!((a.dimension(), b.dimension()), (2, 0));
        let (a, b) = split_separable(&MixedCode::zero(amb), &c2, &c2).unwrap();
        assert_eq!((a.dimension(), b.dimension()), (0, 0));
        let unit = MixedCode::new(amb, vec![v(amb, &[1, 0, 0, 0])]).unwrap();
        assert_eq!(split_separable(&unit, &c2, &c2).unwrap_err(), Error::NotGroupCode);
    }

    #[test]
    fn equivalence_on_trivial_and_non_lcp_pairs() {
        let c2 = GroupSpec::cyclic(2).unwrap();
        let amb = z4z2(2, 2);
        let whole = MixedCode::whole(amb);
        let zero = MixedCode::zero(amb);
        let w = verify_equivalence_theorem(&whole, &zero, &c2, &c2, DEFAULT_PERMUTATION_BUDGET).unwrap();
        assert_eq!(w, Some((vec![0, 1], vec![0, 1])));
        assert_eq!(
            verify_equivalence_theorem(&whole, &whole, &c2, &c2, DEFAULT_PERMUTATION_BUDGET),
            Err(Error::NotLcp)
        );
    }

    #[test]
    fn ideals_of_small_product_ring() {
        let c2 = GroupSpec::cyclic(2).unwrap();
        let spec = ChainRingSpec::new(2, 2, 1).unwrap();
        let ideals = enumerate_ideals(spec, &c2, &c2, 1 << 10).unwrap();
        // three ideals of F2[C2] on the R̄ side
        assert_eq!(ideals.len() % 3, 0);
        assert_eq!(ideals.first().unwrap().dimension(), 0);
        assert_eq!(ideals.last().unwrap().dimension(), 6);
        for c in &ideals {
            assert!(is_group_code(c, &c2, &c2).unwrap());
            assert!(c.is_separable());
        }
    }
}
