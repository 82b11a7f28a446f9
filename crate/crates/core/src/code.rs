// SPDX-License-Identifier: Apache-2.0

//! Mixed-alphabet vectors and codes in `R^α × R̄^β`.
//!
//! A code is stored by (possibly redundant) generator rows. Structural
//! questions go through `χ`: `C` is a submodule of `R^α × R̄^β` exactly when
//! `χ(C)` is a submodule of `R^{α+β}` contained in `R^α × θ^{s-r} R^β`, and
//! standard forms, membership, enumeration and duals are all computed on
//! that image.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::{kernel_from_form, row_reduce_standard, RingMatrix, StandardForm};
use crate::ring::{add_mod, mul_mod, neg_mod, ChainRingSpec, Level, RingElement};

/// Default cap on `p^dim` for any operation that lists codewords.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 1 << 20;

/// The ambient module `R^α × R̄^β`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ambient {
    pub spec: ChainRingSpec,
    pub alpha: usize,
    pub beta: usize,
}

impl Ambient {
    pub fn new(spec: ChainRingSpec, alpha: usize, beta: usize) -> Self {
        Ambient { spec, alpha, beta }
    }

    pub fn len(&self) -> usize {
        self.alpha + self.beta
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `sα + rβ`, the dimension of the whole ambient space.
    pub fn dimension(&self) -> u64 {
        self.spec.s() as u64 * self.alpha as u64 + self.spec.r() as u64 * self.beta as u64
    }

    /// Number of vectors, `p^{sα+rβ}`, saturating.
    pub fn size(&self) -> u128 {
        (self.spec.p() as u128).saturating_pow(self.dimension().min(u32::MAX as u64) as u32)
    }

    pub fn zero(&self) -> MixedVector {
        MixedVector {
            ambient: *self,
            r_part: vec![0; self.alpha],
            rbar_part: vec![0; self.beta],
        }
    }

    /// The `i`-th unit vector over all `α + β` coordinates.
    pub fn unit(&self, i: usize) -> MixedVector {
        let mut v = self.zero();
        if i < self.alpha {
            v.r_part[i] = 1 % self.spec.modulus(Level::Full);
        } else {
            v.rbar_part[i - self.alpha] = 1 % self.spec.modulus(Level::Quotient);
        }
        v
    }

    fn check(&self, other: &Ambient) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::Shape(format!(
                "ambient mismatch: {} ({}, {}) vs {} ({}, {})",
                self.spec, self.alpha, self.beta, other.spec, other.alpha, other.beta
            )))
        }
    }

    fn block_split(&self) -> Option<(usize, usize)> {
        Some((self.alpha, self.beta))
    }
}

/// An element `(u | ū)` of `R^α × R̄^β`, stored as canonical residues.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MixedVector {
    ambient: Ambient,
    r_part: Vec<u64>,
    rbar_part: Vec<u64>,
}

impl PartialOrd for Ambient {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ambient {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let key = |a: &Ambient| (a.spec.p(), a.spec.s(), a.spec.r(), a.alpha, a.beta);
        key(self).cmp(&key(other))
    }
}

impl MixedVector {
    /// Builds a vector from signed integers, reducing the R-part mod `p^s`
    /// and the R̄-part mod `p^r`.
    pub fn new(ambient: Ambient, r_part: &[i64], rbar_part: &[i64]) -> Result<Self> {
        if r_part.len() != ambient.alpha || rbar_part.len() != ambient.beta {
            return Err(Error::Shape(format!(
                "vector blocks ({}, {}) for ambient ({}, {})",
                r_part.len(),
                rbar_part.len(),
                ambient.alpha,
                ambient.beta
            )));
        }
        let spec = ambient.spec;
        Ok(MixedVector {
            ambient,
            r_part: r_part.iter().map(|&x| spec.full(x).value()).collect(),
            rbar_part: rbar_part.iter().map(|&x| spec.quotient(x).value()).collect(),
        })
    }

    /// Splits a flat row of `α + β` integers into the two blocks.
    pub fn from_flat(ambient: Ambient, row: &[i64]) -> Result<Self> {
        if row.len() != ambient.len() {
            return Err(Error::Shape(format!(
                "row of length {} for ambient of length {}",
                row.len(),
                ambient.len()
            )));
        }
        MixedVector::new(ambient, &row[..ambient.alpha], &row[ambient.alpha..])
    }

    pub(crate) fn from_raw(ambient: Ambient, r_part: Vec<u64>, rbar_part: Vec<u64>) -> Self {
        let spec = ambient.spec;
        let full = spec.modulus(Level::Full);
        let quot = spec.modulus(Level::Quotient);
        MixedVector {
            ambient,
            r_part: r_part.into_iter().map(|x| x % full).collect(),
            rbar_part: rbar_part.into_iter().map(|x| x % quot).collect(),
        }
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn r_part(&self) -> &[u64] {
        &self.r_part
    }

    pub fn rbar_part(&self) -> &[u64] {
        &self.rbar_part
    }

    pub fn r_elements(&self) -> Vec<RingElement> {
        let spec = self.ambient.spec;
        self.r_part.iter().map(|&x| spec.raw(Level::Full, x)).collect()
    }

    pub fn rbar_elements(&self) -> Vec<RingElement> {
        let spec = self.ambient.spec;
        self.rbar_part.iter().map(|&x| spec.raw(Level::Quotient, x)).collect()
    }

    /// Concatenated residues, R-block first.
    pub fn flat(&self) -> Vec<u64> {
        self.r_part.iter().chain(&self.rbar_part).copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.r_part.iter().chain(&self.rbar_part).all(|&x| x == 0)
    }

    /// Hamming weight, counting nonzero coordinates in both blocks alike.
    pub fn weight(&self) -> usize {
        self.r_part.iter().chain(&self.rbar_part).filter(|&&x| x != 0).count()
    }

    pub fn add(&self, other: &MixedVector) -> Result<MixedVector> {
        self.ambient.check(&other.ambient)?;
        let spec = self.ambient.spec;
        let (full, quot) = (spec.modulus(Level::Full), spec.modulus(Level::Quotient));
        Ok(MixedVector {
            ambient: self.ambient,
            r_part: self.r_part.iter().zip(&other.r_part).map(|(&a, &b)| add_mod(a, b, full)).collect(),
            rbar_part: self
                .rbar_part
                .iter()
                .zip(&other.rbar_part)
                .map(|(&a, &b)| add_mod(a, b, quot))
                .collect(),
        })
    }

    pub fn neg(&self) -> MixedVector {
        let spec = self.ambient.spec;
        let (full, quot) = (spec.modulus(Level::Full), spec.modulus(Level::Quotient));
        MixedVector {
            ambient: self.ambient,
            r_part: self.r_part.iter().map(|&a| neg_mod(a, full)).collect(),
            rbar_part: self.rbar_part.iter().map(|&a| neg_mod(a, quot)).collect(),
        }
    }

    pub fn sub(&self, other: &MixedVector) -> Result<MixedVector> {
        self.add(&other.neg())
    }

    /// The action `a ∗ (u | ū) = (a u | π(a) ū)`.
    pub fn scale(&self, a: u64) -> MixedVector {
        let spec = self.ambient.spec;
        let (full, quot) = (spec.modulus(Level::Full), spec.modulus(Level::Quotient));
        let a = a % full;
        let abar = spec.pi_raw(a);
        MixedVector {
            ambient: self.ambient,
            r_part: self.r_part.iter().map(|&x| mul_mod(a, x, full)).collect(),
            rbar_part: self.rbar_part.iter().map(|&x| mul_mod(abar, x, quot)).collect(),
        }
    }

    /// Reorders each block: entry `j` of the R-block becomes entry
    /// `perm_r[j]` of `self`, likewise for the R̄-block.
    pub fn permute(&self, perm_r: &[usize], perm_rbar: &[usize]) -> MixedVector {
        MixedVector {
            ambient: self.ambient,
            r_part: perm_r.iter().map(|&i| self.r_part[i]).collect(),
            rbar_part: perm_rbar.iter().map(|&i| self.rbar_part[i]).collect(),
        }
    }

    /// Keeps the R-block and zeroes the R̄-block.
    pub fn r_projection(&self) -> MixedVector {
        MixedVector {
            ambient: self.ambient,
            r_part: self.r_part.clone(),
            rbar_part: vec![0; self.rbar_part.len()],
        }
    }

    /// Keeps the R̄-block and zeroes the R-block.
    pub fn rbar_projection(&self) -> MixedVector {
        MixedVector {
            ambient: self.ambient,
            r_part: vec![0; self.r_part.len()],
            rbar_part: self.rbar_part.clone(),
        }
    }
}

impl fmt::Display for MixedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[u64]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        match (self.r_part.is_empty(), self.rbar_part.is_empty()) {
            (false, false) => write!(f, "{} | {}", join(&self.r_part), join(&self.rbar_part)),
            (true, false) => write!(f, "| {}", join(&self.rbar_part)),
            (false, true) => write!(f, "{} |", join(&self.r_part)),
            (true, true) => write!(f, "|"),
        }
    }
}

/// `a ∗ v`.
pub fn scalar_action(a: RingElement, v: &MixedVector) -> Result<MixedVector> {
    if a.level() != Level::Full {
        return Err(Error::MixedLevel);
    }
    Ok(v.scale(a.value()))
}

/// `χ` on vectors: the R-block is copied, each R̄ entry goes to `p^{s-r} ι(ū)`.
pub fn chi_vec(v: &MixedVector) -> Vec<u64> {
    let spec = v.ambient.spec;
    v.r_part
        .iter()
        .copied()
        .chain(v.rbar_part.iter().map(|&x| spec.chi_raw(x)))
        .collect()
}

/// `ψ`, inverse of [`chi_vec`] on `R^α × θ^{s-r} R^β`.
pub fn psi_vec(w: &[u64], ambient: Ambient) -> Result<MixedVector> {
    let spec = ambient.spec;
    if w.len() != ambient.len() {
        return Err(Error::Shape(format!("vector of length {} for ambient {}", w.len(), ambient.len())));
    }
    let full = spec.modulus(Level::Full);
    let rbar = w[ambient.alpha..]
        .iter()
        .map(|&y| spec.psi_raw(y))
        .collect::<Result<Vec<_>>>()?;
    Ok(MixedVector {
        ambient,
        r_part: w[..ambient.alpha].iter().map(|&x| x % full).collect(),
        rbar_part: rbar,
    })
}

/// `ι` on vectors: the R̄ entries are lifted by the Teichmüller embedding.
pub fn iota_vec(v: &MixedVector) -> Vec<u64> {
    let spec = v.ambient.spec;
    v.r_part
        .iter()
        .copied()
        .chain(v.rbar_part.iter().map(|&x| spec.iota_raw(x)))
        .collect()
}

/// `φ : R^{α+β} -> R^α × R̄^β`, reducing the last `β` entries mod `p^r`.
pub fn varphi_vec(w: &[u64], ambient: Ambient) -> Result<MixedVector> {
    if w.len() != ambient.len() {
        return Err(Error::Shape(format!("vector of length {} for ambient {}", w.len(), ambient.len())));
    }
    let spec = ambient.spec;
    Ok(MixedVector::from_raw(
        ambient,
        w[..ambient.alpha].to_vec(),
        w[ambient.alpha..].iter().map(|&x| spec.pi_raw(x)).collect(),
    ))
}

/// `[u, v] = ⟨u, v⟩_R + χ(⟨ū, v̄⟩_R̄)`, evaluated as `⟨ι(u), χ(v)⟩_R`.
pub fn inner_product(u: &MixedVector, v: &MixedVector) -> Result<RingElement> {
    u.ambient.check(&v.ambient)?;
    let spec = u.ambient.spec;
    Ok(spec.raw(Level::Full, dot(spec, &iota_vec(u), &chi_vec(v))))
}

/// `⟨a, b⟩` over `R` on residue vectors.
pub fn dot(spec: ChainRingSpec, a: &[u64], b: &[u64]) -> u64 {
    let m = spec.modulus(Level::Full);
    a.iter().zip(b).fold(0, |acc, (&x, &y)| add_mod(acc, mul_mod(x, y, m), m))
}

/// The type `(α, β; k_0, ..., k_{s-r-1} | k_{s-r}, ..., k_{s-1})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CodeType {
    pub alpha: usize,
    pub beta: usize,
    pub gap: usize,
    pub ks: Vec<usize>,
    pub mu: usize,
    pub rho: usize,
    /// Pivots of valuation at least `s - r` that had to sit in the R-block
    /// because no R̄ coordinate attains their valuation. Zero exactly when
    /// the code has the mixed staircase shape with `μ ≤ α`, `ρ ≤ β`.
    pub misplaced: usize,
}

impl CodeType {
    /// `Σ (s - t) k_t`.
    pub fn dimension(&self) -> u64 {
        let s = self.ks.len();
        self.ks.iter().enumerate().map(|(t, &k)| ((s - t) * k) as u64).sum()
    }

    pub fn is_weakly_free(&self) -> bool {
        self.misplaced == 0
            && self
                .ks
                .iter()
                .enumerate()
                .all(|(t, &k)| k == 0 || t == 0 || t == self.gap)
    }
}

impl fmt::Display for CodeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[usize]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
        let (left, right) = self.ks.split_at(self.gap.min(self.ks.len()));
        if left.is_empty() {
            write!(f, "({},{}; | {})", self.alpha, self.beta, join(right))
        } else {
            write!(f, "({},{}; {} | {})", self.alpha, self.beta, join(left), join(right))
        }
    }
}

/// Standard generator matrix of a mixed code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedStandardForm {
    /// Reduction of `χ(C)` with block split `(α, β)`.
    pub chi_form: StandardForm,
    /// `ψ` of the reduced rows, in original coordinates.
    pub rows: Vec<MixedVector>,
    pub code_type: CodeType,
}

impl MixedStandardForm {
    /// The mixed rows with columns in staircase order (each block permuted
    /// within itself).
    pub fn staircase_rows(&self) -> Vec<MixedVector> {
        let (perm_r, perm_rbar) = self.block_permutations();
        self.rows.iter().map(|v| v.permute(&perm_r, &perm_rbar)).collect()
    }

    /// The block-respecting column permutation split into its two blocks,
    /// the second one re-indexed from zero.
    pub fn block_permutations(&self) -> (Vec<usize>, Vec<usize>) {
        let alpha = self.code_type.alpha;
        let perm = &self.chi_form.permutation;
        (
            perm[..alpha].to_vec(),
            perm[alpha..].iter().map(|&c| c - alpha).collect(),
        )
    }
}

/// An R-submodule of `R^α × R̄^β`, given by generators.
#[derive(Debug, Clone)]
pub struct MixedCode {
    ambient: Ambient,
    generators: Vec<MixedVector>,
}

impl MixedCode {
    pub fn new(ambient: Ambient, generators: Vec<MixedVector>) -> Result<Self> {
        for g in &generators {
            ambient.check(&g.ambient)?;
        }
        Ok(MixedCode { ambient, generators })
    }

    /// Builds a code from flat integer rows of length `α + β`.
    pub fn from_rows(ambient: Ambient, rows: &[Vec<i64>]) -> Result<Self> {
        let gens = rows
            .iter()
            .map(|r| MixedVector::from_flat(ambient, r))
            .collect::<Result<Vec<_>>>()?;
        Ok(MixedCode {
            ambient,
            generators: gens,
        })
    }

    pub fn zero(ambient: Ambient) -> Self {
        MixedCode {
            ambient,
            generators: Vec::new(),
        }
    }

    pub fn whole(ambient: Ambient) -> Self {
        MixedCode {
            ambient,
            generators: (0..ambient.len()).map(|i| ambient.unit(i)).collect(),
        }
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn spec(&self) -> ChainRingSpec {
        self.ambient.spec
    }

    pub fn generators(&self) -> &[MixedVector] {
        &self.generators
    }

    /// The `χ`-image of the generators as a matrix over `R`.
    pub fn chi_matrix(&self) -> RingMatrix {
        RingMatrix::from_raw_rows(
            self.ambient.spec,
            Level::Full,
            self.ambient.len(),
            self.generators.iter().map(chi_vec).collect(),
        )
    }

    fn chi_form(&self) -> StandardForm {
        row_reduce_standard(&self.chi_matrix(), self.ambient.block_split())
            .expect("chi image always lies in R^alpha x theta^(s-r) R^beta")
    }

    pub fn standard_generator_matrix(&self) -> MixedStandardForm {
        let chi_form = self.chi_form();
        let rows = (0..chi_form.matrix.rows())
            .map(|i| psi_vec(chi_form.matrix.row(i), self.ambient).expect("rows stay in the chi image"))
            .collect();
        let gap = self.ambient.spec.gap() as usize;
        let ks = chi_form.type_ks.clone();
        let misplaced = chi_form
            .pivots
            .iter()
            .filter(|p| p.valuation as usize >= gap && p.col < self.ambient.alpha)
            .count();
        let code_type = CodeType {
            alpha: self.ambient.alpha,
            beta: self.ambient.beta,
            gap,
            mu: ks[..gap].iter().sum(),
            rho: ks[gap..].iter().sum(),
            ks,
            misplaced,
        };
        MixedStandardForm {
            chi_form,
            rows,
            code_type,
        }
    }

    pub fn code_type(&self) -> CodeType {
        self.standard_generator_matrix().code_type
    }

    /// `log_p |C|`.
    pub fn dimension(&self) -> u64 {
        self.chi_form().dimension()
    }

    /// The same code generated by its standard rows.
    pub fn reduced(&self) -> MixedCode {
        MixedCode {
            ambient: self.ambient,
            generators: self.standard_generator_matrix().rows,
        }
    }

    pub fn is_weakly_free(&self) -> bool {
        self.code_type().is_weakly_free()
    }

    pub fn is_free(&self) -> bool {
        let t = self.code_type();
        t.is_weakly_free() && t.rho == 0
    }

    /// The R-block projection as a code with `β = 0`.
    pub fn r_component(&self) -> MixedCode {
        let amb = Ambient::new(self.ambient.spec, self.ambient.alpha, 0);
        MixedCode {
            ambient: amb,
            generators: self
                .generators
                .iter()
                .map(|g| MixedVector::from_raw(amb, g.r_part.clone(), Vec::new()))
                .collect(),
        }
    }

    /// The R̄-block projection as a code with `α = 0`.
    pub fn rbar_component(&self) -> MixedCode {
        let amb = Ambient::new(self.ambient.spec, 0, self.ambient.beta);
        MixedCode {
            ambient: amb,
            generators: self
                .generators
                .iter()
                .map(|g| MixedVector::from_raw(amb, Vec::new(), g.rbar_part.clone()))
                .collect(),
        }
    }

    /// `C_1 × C̄_2` for codes over the two blocks.
    pub fn product(c1: &MixedCode, c2: &MixedCode) -> Result<MixedCode> {
        if c1.ambient.beta != 0 || c2.ambient.alpha != 0 || c1.ambient.spec != c2.ambient.spec {
            return Err(Error::Shape("product expects an R-code and an R̄-code".into()));
        }
        let amb = Ambient::new(c1.ambient.spec, c1.ambient.alpha, c2.ambient.beta);
        let gens = c1
            .generators
            .iter()
            .map(|g| MixedVector::from_raw(amb, g.r_part.clone(), vec![0; amb.beta]))
            .chain(
                c2.generators
                    .iter()
                    .map(|g| MixedVector::from_raw(amb, vec![0; amb.alpha], g.rbar_part.clone())),
            )
            .collect();
        Ok(MixedCode {
            ambient: amb,
            generators: gens,
        })
    }

    /// Whether `C` equals the product of its two block projections.
    pub fn is_separable(&self) -> bool {
        let product = MixedCode::product(&self.r_component(), &self.rbar_component())
            .expect("components share the spec");
        product.dimension() == self.dimension()
    }

    pub fn contains(&self, v: &MixedVector) -> Result<bool> {
        self.ambient.check(&v.ambient)?;
        Ok(self.chi_form().contains(&chi_vec(v)))
    }

    fn contains_all(&self, vs: &[MixedVector]) -> bool {
        let form = self.chi_form();
        vs.iter().all(|v| form.contains(&chi_vec(v)))
    }

    /// Code equality by mutual containment of generators.
    pub fn same_code(&self, other: &MixedCode) -> Result<bool> {
        self.ambient.check(&other.ambient)?;
        Ok(self.contains_all(&other.generators) && other.contains_all(&self.generators))
    }

    pub fn is_subcode_of(&self, other: &MixedCode) -> Result<bool> {
        self.ambient.check(&other.ambient)?;
        Ok(other.contains_all(&self.generators))
    }

    pub fn sum(&self, other: &MixedCode) -> Result<MixedCode> {
        self.ambient.check(&other.ambient)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ok(MixedCode {
            ambient: self.ambient,
            generators: gens,
        })
    }

    /// `C ∩ D = (C⊥ + D⊥)⊥`.
    pub fn intersection(&self, other: &MixedCode) -> Result<MixedCode> {
        Ok(self.dual().sum(&other.dual())?.dual())
    }

    /// `C ∩ D` by listing `C` and testing membership in `D`.
    pub fn intersection_enumerated(&self, other: &MixedCode, budget: u64) -> Result<MixedCode> {
        self.ambient.check(&other.ambient)?;
        let mut gens: Vec<MixedVector> = Vec::new();
        let other_form = other.chi_form();
        let mut acc = MixedCode::zero(self.ambient);
        let mut acc_form = acc.chi_form();
        for v in self.codewords(budget)? {
            if other_form.contains(&chi_vec(&v)) && !acc_form.contains(&chi_vec(&v)) {
                gens.push(v);
                acc = MixedCode {
                    ambient: self.ambient,
                    generators: gens.clone(),
                };
                acc_form = acc.chi_form();
            }
        }
        Ok(acc)
    }

    /// `C⊥ = φ(χ(C)⊥)`.
    pub fn dual(&self) -> MixedCode {
        let kernel = kernel_from_form(&self.chi_form());
        let gens = (0..kernel.rows())
            .map(|i| varphi_vec(kernel.row(i), self.ambient).expect("kernel rows have ambient length"))
            .collect();
        MixedCode {
            ambient: self.ambient,
            generators: gens,
        }
    }

    /// The closed-form parity-check matrix of a weakly-free code, as mixed
    /// rows in original coordinates:
    ///
    /// ```text
    /// ( -G11ᵀ           I  | -Ḡ21ᵀ  0 )
    /// ( -θ^{s-r} G12ᵀ   0  | -Ḡ22ᵀ  I ) (U⁻¹)ᵀ
    /// ```
    ///
    /// where the standard form is `(I G11 | 0 Ḡ12 ; 0 θ^{s-r}G21 | I Ḡ22) U`.
    pub fn parity_check_weakly_free(&self) -> Result<Vec<MixedVector>> {
        let form = self.standard_generator_matrix();
        let t = &form.code_type;
        if !t.is_weakly_free() {
            return Err(Error::NotWeaklyFree(t.to_string()));
        }
        let spec = self.ambient.spec;
        let (alpha, beta, mu, rho) = (t.alpha, t.beta, t.mu, t.rho);
        let full = spec.modulus(Level::Full);
        let quot = spec.modulus(Level::Quotient);
        let theta_gap = spec.theta_gap();
        let (perm_r, perm_rbar) = form.block_permutations();

        // χ-level staircase: rows 0..mu have unit pivots, rows mu.. have θ^{s-r} pivots
        let stair = form.chi_form.staircase();
        let entry = |i: usize, j: usize| stair.row(i)[j];

        let mut out = Vec::with_capacity(alpha - mu + beta - rho);
        for j in 0..alpha - mu {
            let mut r_part = vec![0u64; alpha];
            let mut rbar_part = vec![0u64; beta];
            for i in 0..mu {
                r_part[i] = neg_mod(entry(i, mu + j), full);
            }
            r_part[mu + j] = 1 % full;
            for i in 0..rho {
                let g21 = entry(mu + i, mu + j) / theta_gap;
                rbar_part[i] = neg_mod(g21 % quot, quot);
            }
            out.push((r_part, rbar_part));
        }
        for j in 0..beta - rho {
            let mut r_part = vec![0u64; alpha];
            let mut rbar_part = vec![0u64; beta];
            for i in 0..mu {
                // already θ^{s-r} ι(Ḡ12) at the χ level
                r_part[i] = neg_mod(entry(i, alpha + rho + j), full);
            }
            for i in 0..rho {
                let g22 = spec.psi_raw(entry(mu + i, alpha + rho + j)).expect("chi image");
                rbar_part[i] = neg_mod(g22, quot);
            }
            rbar_part[rho + j] = 1 % quot;
            out.push((r_part, rbar_part));
        }

        // undo the staircase column order
        Ok(out
            .into_iter()
            .map(|(rp, rb)| {
                let mut r_part = vec![0u64; alpha];
                let mut rbar_part = vec![0u64; beta];
                for (j, &c) in perm_r.iter().enumerate() {
                    r_part[c] = rp[j];
                }
                for (j, &c) in perm_rbar.iter().enumerate() {
                    rbar_part[c] = rb[j];
                }
                MixedVector::from_raw(self.ambient, r_part, rbar_part)
            })
            .collect())
    }

    fn check_budget(&self, form: &StandardForm, budget: u64) -> Result<()> {
        let needed = (self.ambient.spec.p() as u128).saturating_pow(form.dimension() as u32);
        if needed > budget as u128 {
            return Err(Error::EnumerationBudget { needed, budget });
        }
        Ok(())
    }

    /// Visits every codeword of `χ(C)` exactly once.
    pub(crate) fn for_each_chi_codeword<F: FnMut(&[u64])>(&self, budget: u64, mut visit: F) -> Result<()> {
        let form = self.chi_form();
        self.check_budget(&form, budget)?;
        let m = self.ambient.spec.modulus(Level::Full);
        let ranges = form.coefficient_ranges();
        let rows: Vec<&[u64]> = (0..form.matrix.rows()).map(|i| form.matrix.row(i)).collect();
        let mut counter = vec![0u64; rows.len()];
        let mut word = vec![0u64; self.ambient.len()];
        loop {
            visit(&word);
            // mixed-radix increment, updating the word incrementally
            let mut i = 0;
            loop {
                if i == rows.len() {
                    return Ok(());
                }
                counter[i] += 1;
                if counter[i] < ranges[i] {
                    for (w, &g) in word.iter_mut().zip(rows[i]) {
                        *w = add_mod(*w, g, m);
                    }
                    break;
                }
                // wrap: subtract (range - 1) copies
                let back = ranges[i] - 1;
                for (w, &g) in word.iter_mut().zip(rows[i]) {
                    *w = add_mod(*w, neg_mod(mul_mod(back, g, m), m), m);
                }
                counter[i] = 0;
                i += 1;
            }
        }
    }

    /// Every codeword, in a deterministic order. Fails beyond `budget`
    /// codewords.
    pub fn codewords(&self, budget: u64) -> Result<Vec<MixedVector>> {
        let mut out = Vec::new();
        let ambient = self.ambient;
        self.for_each_chi_codeword(budget, |w| {
            out.push(psi_vec(w, ambient).expect("codewords of chi(C) lie in the chi image"));
        })?;
        Ok(out)
    }

    pub fn codeword_set(&self, budget: u64) -> Result<HashSet<MixedVector>> {
        Ok(self.codewords(budget)?.into_iter().collect())
    }

    /// Minimum Hamming weight over nonzero codewords; `None` for the zero
    /// code.
    pub fn min_distance(&self, budget: u64) -> Result<Option<usize>> {
        let mut best: Option<usize> = None;
        self.for_each_chi_codeword(budget, |w| {
            let wt = w.iter().filter(|&&x| x != 0).count();
            if wt > 0 && best.is_none_or(|b| wt < b) {
                best = Some(wt);
            }
        })?;
        Ok(best)
    }

    /// Count of codewords of each Hamming weight `0..=α+β`.
    pub fn weight_distribution(&self, budget: u64) -> Result<Vec<u64>> {
        let mut dist = vec![0u64; self.ambient.len() + 1];
        self.for_each_chi_codeword(budget, |w| {
            dist[w.iter().filter(|&&x| x != 0).count()] += 1;
        })?;
        Ok(dist)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z8z4(alpha: usize, beta: usize) -> Ambient {
        Ambient::new(ChainRingSpec::new(2, 3, 2).unwrap(), alpha, beta)
    }

    fn v(amb: Ambient, flat: &[i64]) -> MixedVector {
        MixedVector::from_flat(amb, flat).unwrap()
    }

    #[test]
    fn scalar_action_examples() {
        let amb = z8z4(4, 3);
        let spec = amb.spec;
        let x = v(amb, &[1, 0, 3, 2, 1, 2, 3]);
        assert_eq!(scalar_action(spec.full(1), &x).unwrap(), x);
        assert_eq!(scalar_action(spec.full(2), &x).unwrap(), v(amb, &[2, 0, 6, 4, 2, 0, 2]));
        let y = v(amb, &[0, 0, 0, 0, 1, 1, 1]);
        assert!(scalar_action(spec.full(4), &y).unwrap().is_zero());
        assert!(scalar_action(spec.quotient(1), &y).is_err());
    }

    #[test]
    fn chi_psi_examples() {
        let amb = z8z4(4, 3);
        assert_eq!(chi_vec(&v(amb, &[7, 6, 5, 4, 1, 2, 3])), vec![7, 6, 5, 4, 2, 4, 6]);
        assert_eq!(chi_vec(&amb.zero()), vec![0; 7]);
        assert_eq!(chi_vec(&v(amb, &[0, 0, 0, 0, 3, 0, 0])), vec![0, 0, 0, 0, 6, 0, 0]);
        assert_eq!(psi_vec(&[7, 6, 5, 4, 2, 4, 6], amb).unwrap(), v(amb, &[7, 6, 5, 4, 1, 2, 3]));
        assert_eq!(psi_vec(&[0; 7], amb).unwrap(), amb.zero());
        assert_eq!(psi_vec(&[0, 0, 0, 0, 0, 0, 3], amb), Err(Error::NotInChiImage(3)));
    }

    #[test]
    fn iota_varphi_examples() {
        let amb = z8z4(4, 3);
        assert_eq!(iota_vec(&v(amb, &[0, 0, 0, 0, 3, 0, 0])), vec![0, 0, 0, 0, 3, 0, 0]);
        assert_eq!(varphi_vec(&[1, 2, 3, 4, 5, 6, 7], amb).unwrap(), v(amb, &[1, 2, 3, 4, 1, 2, 3]));
        assert_eq!(iota_vec(&amb.zero()), vec![0; 7]);
    }

    #[test]
    fn inner_product_examples() {
        let amb = z8z4(4, 3);
        let ip = |a: &[i64], b: &[i64]| inner_product(&v(amb, a), &v(amb, b)).unwrap().value();
        assert_eq!(ip(&[1, 0, 3, 2, 0, 0, 0], &[6, 0, 0, 1, 0, 0, 0]), 0);
        assert_eq!(ip(&[0, 6, 6, 0, 1, 0, 0], &[0, 1, 0, 0, 1, 2, 0]), 0);
        assert_eq!(ip(&[1, 0, 0, 0, 0, 0, 0], &[1, 0, 0, 0, 0, 0, 0]), 1);
        let other = z8z4(3, 4);
        assert!(inner_product(&amb.zero(), &other.zero()).is_err());
    }

    #[test]
    fn type_display_uses_block_bar() {
        let t = CodeType {
            alpha: 4,
            beta: 3,
            gap: 1,
            ks: vec![1, 3, 0],
            mu: 1,
            rho: 3,
            misplaced: 0,
        };
        assert_eq!(t.to_string(), "(4,3; 1 | 3, 0)");
        assert_eq!(t.dimension(), 9);
    }

    fn worked_example(amb: Ambient) -> MixedCode {
        MixedCode::from_rows(
            amb,
            &[
                vec![7, 6, 5, 4, 1, 2, 3],
                vec![6, 4, 0, 2, 2, 0, 1],
                vec![4, 4, 2, 4, 0, 1, 2],
                vec![2, 6, 6, 2, 1, 0, 1],
            ],
        )
        .unwrap()
    }

    #[test]
    fn worked_example_standard_form() {
        let amb = z8z4(4, 3);
        let c = worked_example(amb);
        let form = c.standard_generator_matrix();
        assert_eq!(form.code_type.to_string(), "(4,3; 1 | 3, 0)");
        let expected: Vec<MixedVector> = [
            [1, 0, 3, 6, 0, 0, 0],
            [0, 6, 6, 0, 1, 0, 0],
            [0, 4, 2, 0, 0, 1, 0],
            [0, 0, 2, 6, 0, 0, 1],
        ]
        .iter()
        .map(|r| v(amb, r))
        .collect();
        assert_eq!(form.rows, expected);
        assert!(c.is_weakly_free());
        assert_eq!(c.dimension(), 9);
        assert_eq!(c.codewords(1 << 10).unwrap().len(), 512);
        assert!(c.reduced().same_code(&c).unwrap());
        let dual = c.dual();
        assert_eq!(dual.code_type().to_string(), "(4,3; 3 | 0, 0)");
        let h = MixedCode::new(amb, c.parity_check_weakly_free().unwrap()).unwrap();
        assert!(h.same_code(&dual).unwrap());
    }

    #[test]
    fn ambient_and_zero_codes() {
        let amb = z8z4(4, 3);
        let whole = MixedCode::whole(amb);
        let t = whole.code_type();
        assert_eq!(t.ks, vec![4, 3, 0]);
        assert_eq!(t.to_string(), "(4,3; 4 | 3, 0)");
        assert_eq!(whole.dimension(), 18);
        assert!(whole.is_weakly_free());
        assert!(!whole.is_free());
        assert!(whole.is_separable());

        let zero = MixedCode::zero(amb);
        assert_eq!(zero.code_type().ks, vec![0, 0, 0]);
        assert_eq!(zero.dimension(), 0);
        assert_eq!(zero.codewords(16).unwrap(), vec![amb.zero()]);

        let free_amb = z8z4(3, 0);
        assert!(MixedCode::whole(free_amb).is_free());
    }

    #[test]
    fn non_separable_diagonal() {
        let amb = z8z4(1, 1);
        let c = MixedCode::from_rows(amb, &[vec![1, 1]]).unwrap();
        assert_eq!(c.dimension(), 3);
        assert!(!c.is_separable());
    }

    #[test]
    fn duals_of_trivial_codes() {
        let amb = z8z4(2, 2);
        assert_eq!(MixedCode::whole(amb).dual().dimension(), 0);
        assert!(MixedCode::zero(amb).dual().same_code(&MixedCode::whole(amb)).unwrap());
    }

    #[test]
    fn small_ambient_enumeration() {
        let amb = Ambient::new(ChainRingSpec::new(2, 2, 1).unwrap(), 1, 1);
        assert_eq!(MixedCode::whole(amb).codewords(64).unwrap().len(), 8);
        assert_eq!(MixedCode::whole(amb).min_distance(64).unwrap(), Some(1));
        assert_eq!(MixedCode::zero(amb).min_distance(64).unwrap(), None);
    }

    #[test]
    fn budget_is_enforced() {
        let amb = z8z4(4, 3);
        let err = MixedCode::whole(amb).codewords(1 << 10).unwrap_err();
        assert_eq!(
            err,
            Error::EnumerationBudget {
                needed: 1 << 18,
                budget: 1 << 10
            }
        );
    }

    #[test]
    fn parity_check_rejects_non_weakly_free() {
        // type (0, 1, 0): a θ-multiple row inside the R-block of Z8
        let amb = z8z4(2, 1);
        let c = MixedCode::from_rows(amb, &[vec![2, 0, 0]]).unwrap();
        assert!(matches!(c.parity_check_weakly_free(), Err(Error::NotWeaklyFree(_))));
    }

    #[test]
    fn parity_check_of_whole_space_is_empty() {
        let amb = z8z4(2, 2);
        assert!(MixedCode::whole(amb).parity_check_weakly_free().unwrap().is_empty());
    }

    #[test]
    fn parity_check_of_free_identity_code() {
        // G = (I_2 | 0) inside R^3 x R̄^1: dual is spanned by the complement units
        let amb = z8z4(3, 1);
        let c = MixedCode::from_rows(amb, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0]]).unwrap();
        let h = c.parity_check_weakly_free().unwrap();
        assert_eq!(h, vec![v(amb, &[0, 0, 1, 0]), v(amb, &[0, 0, 0, 1])]);
    }

    #[test]
    fn intersection_over_z4() {
        let amb = Ambient::new(ChainRingSpec::new(2, 2, 1).unwrap(), 2, 0);
        let c = MixedCode::from_rows(amb, &[vec![1, 1]]).unwrap();
        let d = MixedCode::from_rows(amb, &[vec![1, 3]]).unwrap();
        let meet = c.intersection(&d).unwrap();
        let expected = MixedCode::from_rows(amb, &[vec![2, 2]]).unwrap();
        assert!(meet.same_code(&expected).unwrap());
        assert_eq!(meet.dimension(), 1);
        assert_eq!(c.sum(&d).unwrap().dimension(), 3);
        assert!(c.intersection_enumerated(&d, 64).unwrap().same_code(&expected).unwrap());
    }

    #[test]
    fn sum_and_intersection_with_self() {
        let amb = z8z4(2, 1);
        let c = MixedCode::from_rows(amb, &[vec![1, 2, 1], vec![0, 4, 1]]).unwrap();
        assert!(c.sum(&c).unwrap().same_code(&c).unwrap());
        assert!(c.intersection(&c).unwrap().same_code(&c).unwrap());
        assert_eq!(MixedCode::whole(amb).min_distance(1 << 12).unwrap(), Some(1));
    }
}
