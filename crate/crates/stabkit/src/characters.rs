//! Symmetric-group characters by the Murnaghan–Nakayama rule.
//!
//! Shapes are handled as beta-sets packed into a `u128`: a partition with
//! parts `λ_1 ≥ … ≥ λ_l` becomes the bit set `{λ_i + l − i}`. Removing a
//! border strip of length `k` moves one bead from `b` to a free `b − k`; the
//! strip's height is the number of beads strictly in between. Beads that
//! end up at position 0 correspond to zero parts and are shifted out, so each
//! shape has exactly one mask.

use dashmap::DashMap;
use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Largest degree whose shapes fit in a `u128` beta-set.
pub const MAX_DEGREE: u32 = 127;

pub type Mask = u128;

pub(crate) fn to_mask(lambda: &Partition) -> Result<Mask> {
    if lambda.size() > MAX_DEGREE {
        return Err(Error::Limit(format!(
            "degree {} exceeds {MAX_DEGREE}",
            lambda.size()
        )));
    }
    let l = lambda.len() as u32;
    let mut m: Mask = 0;
    for (i, &p) in lambda.parts().iter().enumerate() {
        m |= 1 << (p + l - 1 - i as u32);
    }
    Ok(m)
}

#[cfg(test)]
pub(crate) fn from_mask(mut m: Mask) -> Partition {
    let mut parts = Vec::new();
    let mut beads_below = 0u32;
    let mut pos = 0u32;
    while m != 0 {
        if m & 1 == 1 {
            if pos > beads_below {
                parts.push(pos - beads_below);
            }
            beads_below += 1;
        }
        m >>= 1;
        pos += 1;
    }
    parts.reverse();
    Partition::from_sorted(parts)
}

#[inline]
fn normalize(m: Mask) -> Mask {
    m >> m.trailing_ones()
}

/// Calls `f(new_mask, sign)` for every border strip of length `k`.
#[inline]
pub(crate) fn for_each_strip(m: Mask, k: u32, mut f: impl FnMut(Mask, i32)) {
    let mut beads = m;
    while beads != 0 {
        let b = 127 - beads.leading_zeros();
        beads &= !(1u128 << b);
        if b < k {
            break;
        }
        let t = b - k;
        if m & (1u128 << t) != 0 {
            continue;
        }
        // beads strictly between t and b
        let between = (m >> (t + 1)) & ((1u128 << (k - 1)) - 1);
        let sign = if between.count_ones().is_multiple_of(2) {
            1
        } else {
            -1
        };
        f(normalize((m & !(1u128 << b)) | (1u128 << t)), sign);
    }
}

/// Centralizer order `z(ρ) = ∏ i^{m_i} m_i!`.
pub fn z_order(rho: &Partition) -> BigUint {
    let mut z = BigUint::one();
    for (i, &m) in rho.multiplicities().iter().enumerate().skip(1) {
        for j in 1..=m as u64 {
            z *= j * i as u64;
        }
    }
    z
}

/// `(−1)^{n − ℓ(ρ)}`.
pub fn class_sign(rho: &Partition) -> i32 {
    if (rho.size() as usize - rho.len()).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn check_sizes(lambda: &Partition, rho: &Partition) -> Result<()> {
    if lambda.size() != rho.size() {
        return Err(Error::Domain(format!(
            "character of shape {lambda} (size {}) on class {rho} (size {})",
            lambda.size(),
            rho.size()
        )));
    }
    Ok(())
}

fn mn_plain(m: Mask, rho: &[u32]) -> i128 {
    match rho.split_first() {
        None => 1,
        Some((&k, rest)) => {
            let mut acc = 0i128;
            for_each_strip(m, k, |m2, s| {
                let v = mn_plain(m2, rest);
                acc = acc.checked_add(s as i128 * v).expect("character overflow");
            });
            acc
        }
    }
}

/// `χ_λ(ρ)` without memoization.
pub fn character(lambda: &Partition, rho: &Partition) -> Result<BigInt> {
    check_sizes(lambda, rho)?;
    Ok(BigInt::from(mn_plain(to_mask(lambda)?, rho.parts())))
}

/// Memo table for `(shape, remaining cycle type)` pairs. Safe to share
/// between threads; racing inserts write the same value.
#[derive(Default)]
pub struct CharacterCache {
    memo: DashMap<(Mask, Vec<u32>), i128>,
}

impl CharacterCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    pub fn clear(&self) {
        self.memo.clear();
    }

    pub fn character(&self, lambda: &Partition, rho: &Partition) -> Result<BigInt> {
        check_sizes(lambda, rho)?;
        Ok(BigInt::from(self.eval(to_mask(lambda)?, rho.parts())))
    }

    /// Same as [`character`](Self::character) with an `i128` result.
    pub fn character_i128(&self, lambda: &Partition, rho: &Partition) -> Result<i128> {
        check_sizes(lambda, rho)?;
        Ok(self.eval(to_mask(lambda)?, rho.parts()))
    }

    fn eval(&self, m: Mask, rho: &[u32]) -> i128 {
        if rho.len() <= 1 {
            return mn_plain(m, rho);
        }
        let key = (m, rho.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return *v;
        }
        let (&k, rest) = rho.split_first().unwrap();
        let mut acc = 0i128;
        for_each_strip(m, k, |m2, s| {
            let v = self.eval(m2, rest);
            acc = acc.checked_add(s as i128 * v).expect("character overflow");
        });
        self.memo.insert(key, acc);
        acc
    }
}
