//! Constructive form of the identity `a * x = (2b - 1)(3b - 1)`.
//!
//! Every nonzero `x` factors as `(2y - 1) * 2^m`. Choosing `b` with
//! `b = y (mod |2y - 1|)` makes `2y - 1` divide `2b - 1`; choosing
//! `b = (2^(2m+1) + 1) / 3 (mod 2^m)` makes `2^m` divide `3b - 1`. The two
//! moduli are coprime, so one `b` does both, and `a` is the exact quotient.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `x = odd_part * 2^m` with `odd_part = 2y - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub m: u64,
    pub odd_part: BigInt,
    pub y: BigInt,
}

/// Everything needed to re-check the identity for one `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrtCertificate {
    pub x: BigInt,
    pub m: u64,
    pub odd_part: BigInt,
    pub y: BigInt,
    pub z: BigInt,
    pub b: BigInt,
    pub a: BigInt,
}

pub fn decompose(x: &BigInt) -> Result<Decomposition> {
    if x.is_zero() {
        return Err(Error::ZeroInput);
    }
    let m = x.trailing_zeros().expect("nonzero has a lowest set bit");
    let odd_part = x >> m;
    let y = (&odd_part + 1) >> 1u32;
    Ok(Decomposition { m, odd_part, y })
}

fn pow2(e: u64) -> BigInt {
    BigInt::one() << e
}

/// `(2^(2m+1) + 1) / 3`, always exact since `2^(odd) = -1 (mod 3)`.
pub fn third_of_odd_power(m: u64) -> BigInt {
    (pow2(2 * m + 1) + 1u32) / 3u32
}

/// The residue in `[0, m1 * m2)` congruent to `r1 mod m1` and `r2 mod m2`.
///
/// Requires positive, coprime moduli; returns `None` otherwise.
pub fn solve_two_moduli(r1: &BigInt, m1: &BigInt, r2: &BigInt, m2: &BigInt) -> Option<BigInt> {
    if !m1.is_positive() || !m2.is_positive() {
        return None;
    }
    let eg = m1.extended_gcd(m2);
    if !eg.gcd.is_one() {
        return None;
    }
    // m1 * inv = 1 (mod m2)
    let inv = eg.x.mod_floor(m2);
    let base = r1.mod_floor(m1);
    let lift = ((r2 - &base) * inv).mod_floor(m2);
    Some(base + m1 * lift)
}

/// Build `(a, b)` for nonzero `x`, with `b` the least non-negative CRT residue.
pub fn lemma_pair(x: &BigInt) -> Result<CrtCertificate> {
    let Decomposition { m, odd_part, y } = decompose(x)?;
    let z = third_of_odd_power(m);
    let b = solve_two_moduli(&y, &odd_part.abs(), &z, &pow2(m))
        .expect("odd modulus and power of two are coprime");
    let product: BigInt = (&b * 2 - 1) * (&b * 3 - 1);
    let (a, rem) = product.div_rem(x);
    debug_assert!(rem.is_zero(), "construction guarantees exact division");
    Ok(CrtCertificate {
        x: x.clone(),
        m,
        odd_part,
        y,
        z,
        b,
        a,
    })
}

/// Re-check every field of the certificate from scratch.
pub fn verify_certificate(c: &CrtCertificate) -> bool {
    if c.x.is_zero() || c.odd_part.is_even() {
        return false;
    }
    let two_m = pow2(c.m);
    let two_b_minus: BigInt = &c.b * 2 - 1;
    let three_b_minus: BigInt = &c.b * 3 - 1;
    c.x == &c.odd_part * &two_m
        && &c.y * 2 - 1 == c.odd_part
        && &c.z * 3 == pow2(2 * c.m + 1) + 1
        && two_b_minus.is_multiple_of(&c.odd_part)
        && three_b_minus.is_multiple_of(&two_m)
        && &c.a * &c.x == &two_b_minus * &three_b_minus
        && !c.b.is_negative()
        && c.b < c.odd_part.abs() * two_m
}

impl fmt::Display for CrtCertificate {
    /// `key: value` lines in the order x, m, odd_part, y, z, b, a.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "x: {}", self.x)?;
        writeln!(f, "m: {}", self.m)?;
        writeln!(f, "odd_part: {}", self.odd_part)?;
        writeln!(f, "y: {}", self.y)?;
        writeln!(f, "z: {}", self.z)?;
        writeln!(f, "b: {}", self.b)?;
        writeln!(f, "a: {}", self.a)
    }
}
