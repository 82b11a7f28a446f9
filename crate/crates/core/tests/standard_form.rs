// SPDX-License-Identifier: Apache-2.0

mod common;

use std::collections::HashSet;

use chainmix::matrix::{is_nonsingular, right_kernel, row_reduce_standard};
use chainmix::oracle::oracle_span;
use chainmix::{Ambient, ChainRingSpec, Level, MixedCode, RingMatrix};
use common::{spec, words};
use proptest::prelude::*;

fn matrix_strategy(spec: ChainRingSpec, max_rows: usize, max_cols: usize) -> impl Strategy<Value = RingMatrix> {
    let m = spec.modulus(Level::Full) as i64;
    (0..=max_rows, 1..=max_cols).prop_flat_map(move |(rows, cols)| {
        prop::collection::vec(prop::collection::vec(0..m, cols), rows)
            .prop_map(move |data| RingMatrix::from_rows(spec, Level::Full, cols, &data).unwrap())
    })
}

fn span_of(m: &RingMatrix) -> HashSet<Vec<u64>> {
    let amb = Ambient::new(m.spec(), m.cols(), 0);
    let rows: Vec<Vec<i64>> = m.row_vecs().iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
    oracle_span(&MixedCode::from_rows(amb, &rows).unwrap(), 1 << 20).unwrap()
}

fn valuation(spec: ChainRingSpec, x: u64) -> u32 {
    spec.valuation(spec.full(x as i64))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn reduction_preserves_span_and_has_staircase_shape(m in matrix_strategy(spec(2, 3, 2), 5, 4)) {
        let form = row_reduce_standard(&m, None).unwrap();
        prop_assert_eq!(span_of(&form.matrix), span_of(&m));
        let stair = form.staircase();
        let spec = m.spec();
        for (i, pivot) in form.pivots.iter().enumerate() {
            // pivot is exactly p^v, column below and above is cleared modulo p^v
            prop_assert_eq!(stair.row(i)[i], spec.p().pow(pivot.valuation));
            for k in 0..stair.rows() {
                if k != i {
                    prop_assert!(stair.row(k)[i] < spec.p().pow(pivot.valuation) || stair.row(k)[i] == 0);
                }
                if k > i {
                    prop_assert_eq!(stair.row(k)[i], 0);
                }
            }
            prop_assert!(stair.row(i).iter().all(|&x| valuation(spec, x) >= pivot.valuation));
        }
        let ks_sum: usize = form.type_ks.iter().sum();
        prop_assert_eq!(ks_sum, form.pivots.len());
        prop_assert_eq!(span_of(&m).len() as u64, spec.p().pow(form.dimension() as u32));
    }

    #[test]
    fn kernel_is_exact_annihilator(m in matrix_strategy(spec(3, 2, 1), 3, 3)) {
        let k = right_kernel(&m).unwrap();
        let prod = m.mul(&k.transpose()).unwrap();
        prop_assert!(prod.entries().iter().all(|&x| x == 0));
        // |row space| · |kernel| = |R^n|
        let n = m.cols() as u32;
        let total = 9u64.pow(n);
        prop_assert_eq!(span_of(&m).len() as u64 * span_of(&k).len() as u64, total);
    }

    #[test]
    fn nonsingular_iff_row_space_is_everything(m in matrix_strategy(spec(2, 2, 1), 3, 3)) {
        if m.rows() == m.cols() {
            let full = 4usize.pow(m.cols() as u32);
            prop_assert_eq!(is_nonsingular(&m).unwrap(), span_of(&m).len() == full);
        } else {
            prop_assert!(is_nonsingular(&m).is_err());
        }
    }

    #[test]
    fn solve_decides_membership(m in matrix_strategy(spec(2, 3, 1), 3, 3), probe in prop::collection::vec(0u64..8, 3)) {
        let form = row_reduce_standard(&m, None).unwrap();
        let probe = &probe[..m.cols()];
        prop_assert_eq!(form.contains(probe), span_of(&m).contains(probe));
    }
}

#[test]
fn mixed_standard_form_spans_the_code_over_z8z4() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    let mut checked = 0;
    while checked < 150 {
        let amb = Ambient::new(spec(2, 3, 2), rng.random_range(0..=3), rng.random_range(0..=3));
        let c = common::random_any(&mut rng, amb);
        if c.dimension() > 12 {
            continue;
        }
        let form = c.standard_generator_matrix();
        let reduced = MixedCode::new(amb, form.rows.clone()).unwrap();
        assert_eq!(words(&reduced), oracle_span(&c, 1 << 20).unwrap());
        // the staircase is the same code with block columns permuted
        let (pr, pb) = form.block_permutations();
        let permuted: HashSet<Vec<u64>> = c
            .codewords(1 << 20)
            .unwrap()
            .iter()
            .map(|v| v.permute(&pr, &pb).flat())
            .collect();
        let stair = MixedCode::new(amb, form.staircase_rows()).unwrap();
        assert_eq!(words(&stair), permuted);
        assert_eq!(form.code_type.dimension(), c.dimension());
        checked += 1;
    }
}

#[test]
fn type_is_a_code_invariant() {
    use rand::SeedableRng;
    use rand::seq::SliceRandom;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    let amb = Ambient::new(spec(2, 3, 1), 3, 2);
    for _ in 0..100 {
        let c = common::random_any(&mut rng, amb);
        let mut gens = c.generators().to_vec();
        gens.shuffle(&mut rng);
        // add a redundant combination
        if gens.len() >= 2 {
            let extra = gens[0].add(&gens[1].scale(3)).unwrap();
            gens.push(extra);
        }
        let d = MixedCode::new(amb, gens).unwrap();
        assert_eq!(c.code_type(), d.code_type());
        assert!(c.same_code(&d).unwrap());
    }
}
