// SPDX-License-Identifier: Apache-2.0

//! Dense matrices over `Z_{p^s}` (or `Z_{p^r}`), θ-adic row reduction to a
//! staircase standard form, nonsingularity and kernels.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{add_mod, mul_mod, neg_mod, ChainRingSpec, Level, RingElement};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingMatrix {
    spec: ChainRingSpec,
    level: Level,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl RingMatrix {
    /// Builds a matrix from row-major residues, reducing every entry.
    pub fn new(
        spec: ChainRingSpec,
        level: Level,
        rows: usize,
        cols: usize,
        entries: Vec<u64>,
    ) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        let m = spec.modulus(level);
        let entries = entries.into_iter().map(|e| e % m).collect();
        Ok(RingMatrix {
            spec,
            level,
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from signed integer rows, all of length `cols`.
    pub fn from_rows(spec: ChainRingSpec, level: Level, cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Shape(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            entries.extend(row.iter().map(|&v| spec.element(level, v).value()));
        }
        RingMatrix::new(spec, level, rows.len(), cols, entries)
    }

    pub(crate) fn from_raw_rows(spec: ChainRingSpec, level: Level, cols: usize, rows: Vec<Vec<u64>>) -> Self {
        let n = rows.len();
        let entries: Vec<u64> = rows.into_iter().flatten().collect();
        debug_assert_eq!(entries.len(), n * cols);
        RingMatrix {
            spec,
            level,
            rows: n,
            cols,
            entries,
        }
    }

    pub fn zero(spec: ChainRingSpec, level: Level, rows: usize, cols: usize) -> Self {
        RingMatrix {
            spec,
            level,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(spec: ChainRingSpec, level: Level, n: usize) -> Self {
        let mut m = RingMatrix::zero(spec, level, n, n);
        for i in 0..n {
            m.entries[i * n + i] = 1 % spec.modulus(level);
        }
        m
    }

    pub fn spec(&self) -> ChainRingSpec {
        self.spec
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u64 {
        self.spec.modulus(self.level)
    }

    pub fn get(&self, i: usize, j: usize) -> RingElement {
        self.spec.raw(self.level, self.entries[i * self.cols + j])
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn transpose(&self) -> RingMatrix {
        let mut out = RingMatrix::zero(self.spec, self.level, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j * self.rows + i] = self.entries[i * self.cols + j];
            }
        }
        out
    }

    pub fn mul(&self, other: &RingMatrix) -> Result<RingMatrix> {
        if self.cols != other.rows || self.level != other.level || self.spec != other.spec {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let m = self.modulus();
        let mut out = RingMatrix::zero(self.spec, self.level, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entries[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.entries[idx] = add_mod(out.entries[idx], mul_mod(a, other.entries[k * other.cols + j], m), m);
                }
            }
        }
        Ok(out)
    }

    /// Reorders columns: column `j` of the result is column `perm[j]` of `self`.
    pub fn permute_columns(&self, perm: &[usize]) -> RingMatrix {
        assert_eq!(perm.len(), self.cols, "permutation length");
        let rows = (0..self.rows)
            .map(|i| perm.iter().map(|&c| self.entries[i * self.cols + c]).collect())
            .collect();
        RingMatrix::from_raw_rows(self.spec, self.level, self.cols, rows)
    }

    fn row_valuation(&self, row: &[u64]) -> u32 {
        row.iter()
            .map(|&e| self.spec.valuation_raw(self.level, e))
            .min()
            .unwrap_or(self.spec.nilpotency(self.level))
    }
}

impl fmt::Display for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// One pivot of a reduced matrix: row `row` has `p^valuation` in column `col`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Pivot {
    pub col: usize,
    pub valuation: u32,
}

/// A staircase generator matrix.
///
/// `matrix` is expressed in the original column order and has one row per
/// pivot; `permutation` lists the original columns in staircase order, so
/// `matrix.permute_columns(&permutation)` is the block upper-triangular
/// shape with identity-like blocks `p^t I` on the diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardForm {
    pub matrix: RingMatrix,
    pub permutation: Vec<usize>,
    pub type_ks: Vec<usize>,
    pub block_split: Option<(usize, usize)>,
    pub pivots: Vec<Pivot>,
}

impl StandardForm {
    /// The reduced matrix with its columns in staircase order.
    pub fn staircase(&self) -> RingMatrix {
        self.matrix.permute_columns(&self.permutation)
    }

    /// `log_p` of the size of the row span.
    pub fn dimension(&self) -> u64 {
        let top = self.matrix.spec().nilpotency(self.matrix.level()) as u64;
        self.pivots.iter().map(|p| top - p.valuation as u64).sum()
    }

    /// Solves `target = Σ λ_i row_i` by back-substitution along the
    /// staircase, returning the coefficients when `target` lies in the span.
    pub fn solve(&self, target: &[u64]) -> Option<Vec<u64>> {
        let spec = self.matrix.spec();
        let m = self.matrix.modulus();
        let mut residual: Vec<u64> = target.iter().map(|&x| x % m).collect();
        let mut coeffs = Vec::with_capacity(self.pivots.len());
        for (i, pivot) in self.pivots.iter().enumerate() {
            let step = spec.p().pow(pivot.valuation);
            let x = residual[pivot.col];
            if x % step != 0 {
                return None;
            }
            let lambda = x / step;
            if lambda != 0 {
                let row = self.matrix.row(i);
                for (r, &g) in residual.iter_mut().zip(row) {
                    *r = add_mod(*r, neg_mod(mul_mod(lambda, g, m), m), m);
                }
            }
            coeffs.push(lambda);
        }
        if residual.iter().all(|&x| x == 0) {
            Some(coeffs)
        } else {
            None
        }
    }

    pub fn contains(&self, target: &[u64]) -> bool {
        self.solve(target).is_some()
    }

    /// Number of distinct multipliers for each row; combinations with
    /// coefficients below these bounds enumerate the span exactly once.
    pub fn coefficient_ranges(&self) -> Vec<u64> {
        let spec = self.matrix.spec();
        let top = spec.nilpotency(self.matrix.level());
        self.pivots
            .iter()
            .map(|p| spec.p().pow(top - p.valuation))
            .collect()
    }
}

/// Row-reduces `m` into staircase standard form.
///
/// Valuations `v = 0, 1, ...` are processed in order. At each stage the
/// topmost unprocessed row of valuation `v` is chosen and, within it, the
/// leftmost column attaining `v`; the row is scaled so the pivot becomes
/// exactly `p^v`, and the pivot column is cleared in every other row
/// (reduced below `p^v` in rows already processed).
///
/// With `block_split = Some((alpha, beta))` the last `beta` columns must lie
/// in `θ^{s-r} R`. Pivots of valuation `v >= s - r` are then taken in those
/// columns whenever some row attains `v` there.
pub fn row_reduce_standard(m: &RingMatrix, block_split: Option<(usize, usize)>) -> Result<StandardForm> {
    let spec = m.spec();
    let level = m.level();
    let q = m.modulus();
    let top = spec.nilpotency(level);
    let p = spec.p();
    let n = m.cols();

    let gap = if let Some((alpha, beta)) = block_split {
        if alpha + beta != n {
            return Err(Error::Shape(format!("block split ({alpha}, {beta}) for {n} columns")));
        }
        if level != Level::Full {
            return Err(Error::Shape("block split requires a matrix over R".into()));
        }
        for i in 0..m.rows() {
            for c in alpha..n {
                if spec.valuation_raw(level, m.row(i)[c]) < spec.gap() {
                    return Err(Error::BlockValuation { row: i, col: c });
                }
            }
        }
        Some((alpha, spec.gap()))
    } else {
        None
    };

    let mut work = m.row_vecs();
    let mut processed = vec![false; work.len()];
    // (row index, pivot) in processing order
    let mut chosen: Vec<(usize, Pivot)> = Vec::new();
    let val = |x: u64| spec.valuation_raw(level, x);

    for v in 0..top {
        loop {
            let attains = |row: &[u64], range: std::ops::Range<usize>| range.into_iter().find(|&c| val(row[c]) == v);
            let mut pick = None;
            if let Some((alpha, g)) = gap {
                if v >= g {
                    pick = (0..work.len())
                        .filter(|&i| !processed[i])
                        .find_map(|i| attains(&work[i], alpha..n).map(|c| (i, c)));
                }
            }
            if pick.is_none() {
                pick = (0..work.len())
                    .filter(|&i| !processed[i])
                    .find_map(|i| attains(&work[i], 0..n).map(|c| (i, c)));
            }
            let Some((i, c)) = pick else { break };

            let step = p.pow(v);
            let unit = work[i][c] / step;
            let inv = spec.inverse_raw(level, unit)?;
            for e in work[i].iter_mut() {
                *e = mul_mod(*e, inv, q);
            }
            debug_assert_eq!(work[i][c], step % q);

            let pivot_row = work[i].clone();
            for (k, row) in work.iter_mut().enumerate() {
                if k == i || row[c] == 0 {
                    continue;
                }
                let factor = row[c] / step;
                if factor == 0 {
                    continue;
                }
                for (e, &g) in row.iter_mut().zip(&pivot_row) {
                    *e = add_mod(*e, neg_mod(mul_mod(factor, g, q), q), q);
                }
            }
            processed[i] = true;
            chosen.push((i, Pivot { col: c, valuation: v }));
        }
    }

    chosen.sort_by_key(|&(_, piv)| (piv.valuation, piv.col));
    let pivots: Vec<Pivot> = chosen.iter().map(|&(_, piv)| piv).collect();
    let rows: Vec<Vec<u64>> = chosen.iter().map(|&(i, _)| work[i].clone()).collect();
    let matrix = RingMatrix::from_raw_rows(spec, level, n, rows);

    let mut type_ks = vec![0usize; top as usize];
    for piv in &pivots {
        type_ks[piv.valuation as usize] += 1;
    }

    let is_pivot = {
        let mut flags = vec![false; n];
        for piv in &pivots {
            flags[piv.col] = true;
        }
        flags
    };
    let blocks: Vec<std::ops::Range<usize>> = match block_split {
        Some((alpha, _)) => vec![0..alpha, alpha..n],
        None => vec![0..n],
    };
    let mut permutation = Vec::with_capacity(n);
    for block in blocks {
        permutation.extend(pivots.iter().map(|piv| piv.col).filter(|c| block.contains(c)));
        permutation.extend(block.filter(|&c| !is_pivot[c]));
    }

    debug_assert!(pivots.iter().all(|piv| {
        let row = matrix.row(pivots.iter().position(|x| x == piv).unwrap());
        m.row_valuation(row) == piv.valuation
    }));

    Ok(StandardForm {
        matrix,
        permutation,
        type_ks,
        block_split,
        pivots,
    })
}

/// True iff `det(m)` is a unit, decided by elimination over `F_p`.
pub fn is_nonsingular(m: &RingMatrix) -> Result<bool> {
    if m.rows() != m.cols() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let p = m.spec().p();
    let n = m.rows();
    let mut a: Vec<Vec<u64>> = m.row_vecs().into_iter().map(|r| r.into_iter().map(|x| x % p).collect()).collect();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&i| a[i][col] != 0) else {
            return Ok(false);
        };
        a.swap(col, piv);
        let inv = m.spec().inverse_raw(Level::Full, a[col][col]).map(|x| x % p)?;
        for e in a[col].iter_mut() {
            *e = mul_mod(*e, inv, p);
        }
        let pivot_row = a[col].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == col || row[col] == 0 {
                continue;
            }
            let f = row[col];
            for (e, &g) in row.iter_mut().zip(&pivot_row) {
                *e = add_mod(*e, neg_mod(mul_mod(f, g, p), p), p);
            }
        }
    }
    Ok(true)
}

/// Generators of `{x : m · xᵀ = 0}`.
///
/// From the staircase of `m`, every free column contributes one generator
/// and every pivot of valuation `v > 0` contributes the torsion generator
/// `p^{L-v} e_pivot`, each completed by back-substitution.
pub fn right_kernel(m: &RingMatrix) -> Result<RingMatrix> {
    let form = row_reduce_standard(m, None)?;
    Ok(kernel_from_form(&form))
}

pub(crate) fn kernel_from_form(form: &StandardForm) -> RingMatrix {
    let spec = form.matrix.spec();
    let level = form.matrix.level();
    let q = form.matrix.modulus();
    let top = spec.nilpotency(level);
    let n = form.matrix.cols();
    let p = spec.p();

    // rows divided through by their pivot power
    let reduced: Vec<Vec<u64>> = form
        .pivots
        .iter()
        .enumerate()
        .map(|(i, piv)| {
            let step = p.pow(piv.valuation);
            form.matrix.row(i).iter().map(|&e| e / step).collect()
        })
        .collect();

    let mut is_pivot = vec![false; n];
    for piv in &form.pivots {
        is_pivot[piv.col] = true;
    }

    let back_substitute = |x: &mut Vec<u64>, upto: usize| {
        for i in (0..upto).rev() {
            let c = form.pivots[i].col;
            let mut acc = 0u64;
            for (j, &coef) in reduced[i].iter().enumerate() {
                if j != c && coef != 0 && x[j] != 0 {
                    acc = add_mod(acc, mul_mod(coef, x[j], q), q);
                }
            }
            x[c] = neg_mod(acc, q);
        }
    };

    let mut gens: Vec<Vec<u64>> = Vec::new();
    for f in (0..n).filter(|&c| !is_pivot[c]) {
        let mut x = vec![0u64; n];
        x[f] = 1 % q;
        back_substitute(&mut x, form.pivots.len());
        gens.push(x);
    }
    for (i, piv) in form.pivots.iter().enumerate() {
        if piv.valuation == 0 {
            continue;
        }
        let mut x = vec![0u64; n];
        x[piv.col] = p.pow(top - piv.valuation);
        back_substitute(&mut x, i);
        gens.push(x);
    }
    RingMatrix::from_raw_rows(spec, level, n, gens)
}
