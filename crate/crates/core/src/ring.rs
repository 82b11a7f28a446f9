// SPDX-License-Identifier: Apache-2.0

//! Arithmetic in the chain ring `R = Z_{p^s}` and its quotient `R̄ = Z_{p^r}`.
//!
//! The maximal ideal of `R` is generated by `θ = p`. Every element has a
//! unique expansion `x = γ_0(x) + γ_1(x) p + ... + γ_{s-1}(x) p^{s-1}` with
//! digits in the Teichmüller set `Γ(R) = {x : x^p = x}`. The scalar maps
//! between the two rings are
//!
//! * `π : R -> R̄`, reduction mod `p^r`,
//! * `ι : R̄ -> R`, lift the Teichmüller digits of `R̄` into `Γ(R)`,
//! * `χ : R̄ -> p^{s-r} R`, `u ↦ p^{s-r} ι(u)`,
//! * `ψ : p^{s-r} R -> R̄`, the inverse of `χ`.

use std::fmt;

use crate::error::{Error, Result};

const MAX_PRIME: u64 = 1 << 16;

/// Which of the two rings an element lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Level {
    /// `R = Z_{p^s}`.
    Full,
    /// `R̄ = Z_{p^r}`.
    Quotient,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// The triple `(p, s, r)` fixing `R = Z_{p^s}` and `R̄ = Z_{p^r}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ChainRingSpec {
    p: u64,
    s: u32,
    r: u32,
    full_modulus: u64,
    quotient_modulus: u64,
}

/// A canonical residue tagged with its ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElement {
    value: u64,
    level: Level,
}

impl RingElement {
    pub fn value(self) -> u64 {
        self.value
    }

    pub fn level(self) -> Level {
        self.level
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + b as u128) % m as u128) as u64
}

pub(crate) fn neg_mod(a: u64, m: u64) -> u64 {
    let a = a % m;
    if a == 0 {
        0
    } else {
        m - a
    }
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

impl ChainRingSpec {
    pub fn new(p: u64, s: u32, r: u32) -> Result<Self> {
        if p > MAX_PRIME {
            return Err(Error::InvalidSpec(format!("p = {p} exceeds 2^16")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidSpec(format!("p = {p} is not prime")));
        }
        if s == 0 {
            return Err(Error::InvalidSpec("s must be at least 1".into()));
        }
        if r == 0 || r > s {
            return Err(Error::InvalidSpec(format!("r = {r} must satisfy 1 <= r <= s = {s}")));
        }
        let full_modulus = p
            .checked_pow(s)
            .ok_or_else(|| Error::InvalidSpec(format!("{p}^{s} does not fit in 64 bits")))?;
        Ok(ChainRingSpec {
            p,
            s,
            r,
            full_modulus,
            quotient_modulus: p.pow(r),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// `s - r`, the exponent of `θ` in the image of `χ`.
    pub fn gap(&self) -> u32 {
        self.s - self.r
    }

    pub fn modulus(&self, level: Level) -> u64 {
        match level {
            Level::Full => self.full_modulus,
            Level::Quotient => self.quotient_modulus,
        }
    }

    /// Nilpotency index of `θ` in the given ring: `s` for `R`, `r` for `R̄`.
    pub fn nilpotency(&self, level: Level) -> u32 {
        match level {
            Level::Full => self.s,
            Level::Quotient => self.r,
        }
    }

    /// Builds an element, reducing any integer (negative included) to its
    /// canonical residue.
    pub fn element(&self, level: Level, value: i64) -> RingElement {
        let m = self.modulus(level) as i128;
        let v = (value as i128).rem_euclid(m) as u64;
        RingElement { value: v, level }
    }

    pub fn full(&self, value: i64) -> RingElement {
        self.element(Level::Full, value)
    }

    pub fn quotient(&self, value: i64) -> RingElement {
        self.element(Level::Quotient, value)
    }

    pub(crate) fn raw(&self, level: Level, value: u64) -> RingElement {
        RingElement {
            value: value % self.modulus(level),
            level,
        }
    }

    pub fn arith(&self, a: RingElement, b: RingElement, op: ArithOp) -> Result<RingElement> {
        if a.level != b.level {
            return Err(Error::MixedLevel);
        }
        let m = self.modulus(a.level);
        let value = match op {
            ArithOp::Add => add_mod(a.value, b.value, m),
            ArithOp::Sub => add_mod(a.value, neg_mod(b.value, m), m),
            ArithOp::Mul => mul_mod(a.value, b.value, m),
        };
        Ok(RingElement { value, level: a.level })
    }

    pub fn add(&self, a: RingElement, b: RingElement) -> Result<RingElement> {
        self.arith(a, b, ArithOp::Add)
    }

    pub fn sub(&self, a: RingElement, b: RingElement) -> Result<RingElement> {
        self.arith(a, b, ArithOp::Sub)
    }

    pub fn mul(&self, a: RingElement, b: RingElement) -> Result<RingElement> {
        self.arith(a, b, ArithOp::Mul)
    }

    /// Largest `t` with `p^t | x`; the nilpotency index for zero.
    pub fn valuation(&self, x: RingElement) -> u32 {
        self.valuation_raw(x.level, x.value)
    }

    pub(crate) fn valuation_raw(&self, level: Level, value: u64) -> u32 {
        let cap = self.nilpotency(level);
        let mut v = value % self.modulus(level);
        if v == 0 {
            return cap;
        }
        let mut t = 0;
        while v % self.p == 0 {
            v /= self.p;
            t += 1;
        }
        t
    }

    pub fn unit_inverse(&self, x: RingElement) -> Result<RingElement> {
        let value = self.inverse_raw(x.level, x.value)?;
        Ok(RingElement { value, level: x.level })
    }

    pub(crate) fn inverse_raw(&self, level: Level, value: u64) -> Result<u64> {
        let m = self.modulus(level);
        let a = value % m;
        if a % self.p == 0 {
            return Err(Error::NotAUnit(a));
        }
        if m == 1 {
            return Ok(0);
        }
        // extended Euclid on signed 128-bit integers
        let (mut old_r, mut r) = (a as i128, m as i128);
        let (mut old_s, mut s) = (1i128, 0i128);
        while r != 0 {
            let q = old_r / r;
            (old_r, r) = (r, old_r - q * r);
            (old_s, s) = (s, old_s - q * s);
        }
        Ok(old_s.rem_euclid(m as i128) as u64)
    }

    /// Teichmüller representative in the given ring of the residue class
    /// `x mod p`: the unique `y ≡ x (mod p)` with `y^p = y`.
    pub(crate) fn teichmuller_raw(&self, level: Level, x: u64) -> u64 {
        let m = self.modulus(level);
        let mut y = x % self.p;
        for _ in 1..self.nilpotency(level) {
            y = pow_mod(y, self.p, m);
        }
        y
    }

    /// The Teichmüller set `Γ(R)`, sorted by residue.
    pub fn teichmuller_set(&self) -> Vec<RingElement> {
        let mut set: Vec<RingElement> = (0..self.p)
            .map(|a| self.raw(Level::Full, self.teichmuller_raw(Level::Full, a)))
            .collect();
        set.sort();
        set
    }

    /// Residues mod `p` of the Teichmüller digits of `x` in its own ring.
    fn residue_digits(&self, level: Level, x: u64) -> Vec<u64> {
        let m = self.modulus(level);
        let mut y = x % m;
        let mut digits = Vec::with_capacity(self.nilpotency(level) as usize);
        for _ in 0..self.nilpotency(level) {
            let c = y % self.p;
            let d = self.teichmuller_raw(level, c);
            digits.push(c);
            y = add_mod(y, neg_mod(d, m), m) / self.p;
        }
        digits
    }

    /// The digits `γ_0(x), ..., γ_{L-1}(x)` of `x`, each in the Teichmüller
    /// set of `x`'s ring, with `x = Σ γ_t(x) p^t`.
    pub fn gamma_digits(&self, x: RingElement) -> Vec<RingElement> {
        self.residue_digits(x.level, x.value)
            .into_iter()
            .map(|c| self.raw(x.level, self.teichmuller_raw(x.level, c)))
            .collect()
    }

    fn expect(&self, x: RingElement, level: Level) -> Result<()> {
        if x.level == level {
            Ok(())
        } else {
            Err(Error::MixedLevel)
        }
    }

    pub fn pi(&self, x: RingElement) -> Result<RingElement> {
        self.expect(x, Level::Full)?;
        Ok(self.raw(Level::Quotient, self.pi_raw(x.value)))
    }

    pub fn iota(&self, x: RingElement) -> Result<RingElement> {
        self.expect(x, Level::Quotient)?;
        Ok(self.raw(Level::Full, self.iota_raw(x.value)))
    }

    pub fn chi(&self, x: RingElement) -> Result<RingElement> {
        self.expect(x, Level::Quotient)?;
        Ok(self.raw(Level::Full, self.chi_raw(x.value)))
    }

    pub fn psi(&self, y: RingElement) -> Result<RingElement> {
        self.expect(y, Level::Full)?;
        Ok(self.raw(Level::Quotient, self.psi_raw(y.value)?))
    }

    pub(crate) fn pi_raw(&self, x: u64) -> u64 {
        x % self.quotient_modulus
    }

    pub(crate) fn iota_raw(&self, x: u64) -> u64 {
        let m = self.full_modulus;
        let mut acc = 0u64;
        let mut scale = 1u64;
        for c in self.residue_digits(Level::Quotient, x) {
            let lifted = self.teichmuller_raw(Level::Full, c);
            acc = add_mod(acc, mul_mod(lifted, scale, m), m);
            scale = mul_mod(scale, self.p, m);
        }
        acc
    }

    pub(crate) fn theta_gap(&self) -> u64 {
        self.p.pow(self.gap())
    }

    pub(crate) fn chi_raw(&self, x: u64) -> u64 {
        mul_mod(self.theta_gap(), self.iota_raw(x), self.full_modulus)
    }

    pub(crate) fn psi_raw(&self, y: u64) -> Result<u64> {
        let y = y % self.full_modulus;
        let t = self.theta_gap();
        if y % t != 0 {
            return Err(Error::NotInChiImage(y));
        }
        Ok(self.pi_raw(y / t))
    }
}

impl fmt::Display for ChainRingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z{}Z{}", self.full_modulus, self.quotient_modulus)
    }
}
