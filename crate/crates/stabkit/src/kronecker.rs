//! Kronecker coefficients `g_{α,β,γ} = Σ_ρ χ_α(ρ) χ_β(ρ) χ_γ(ρ) / z(ρ)`.
//!
//! The class sum is organised as a depth-first walk over cycle types, parts
//! taken largest first. Each node holds, for each of the three shapes, the
//! signed combination of beta-sets left after stripping the parts chosen so
//! far; a leaf's three combinations are the three character values. Prefixes
//! are shared between classes, and a subtree is abandoned as soon as one
//! combination cancels to nothing, which is where most classes with a zero
//! character value disappear.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::characters::{for_each_strip, to_mask, Mask};
use crate::error::{Error, Result};
use crate::partitions::{factorial, Partition};

type Combo = Vec<(Mask, i128)>;

fn strip_combo(c: &Combo, k: u32) -> Combo {
    let mut out: Combo = Vec::with_capacity(c.len() * 2);
    for &(m, coeff) in c {
        for_each_strip(m, k, |m2, s| out.push((m2, s as i128 * coeff)));
    }
    out.sort_unstable_by_key(|e| e.0);
    let mut merged: Combo = Vec::with_capacity(out.len());
    for (m, v) in out {
        match merged.last_mut() {
            Some(last) if last.0 == m => {
                last.1 = last
                    .1
                    .checked_add(v)
                    .expect("Kronecker coefficient overflow")
            }
            _ => merged.push((m, v)),
        }
    }
    merged.retain(|e| e.1 != 0);
    merged
}

struct Walk {
    n: u32,
    n_fact: BigUint,
}

impl Walk {
    /// `Σ_leaves (n!/z(ρ)) χχχ` below this node.
    fn visit(&self, combos: &[Combo; 3], rem: u32, max: u32, rho: &mut Vec<u32>) -> BigInt {
        if rem == 0 {
            let prod = combos
                .iter()
                .map(|c| BigInt::from(c[0].1))
                .fold(BigInt::from(1), |a, b| a * b);
            let z = crate::characters::z_order(&Partition::from_sorted(rho.clone()));
            return prod * BigInt::from(&self.n_fact / z);
        }
        let mut acc = BigInt::zero();
        for k in (1..=rem.min(max)).rev() {
            let next = [
                strip_combo(&combos[0], k),
                strip_combo(&combos[1], k),
                strip_combo(&combos[2], k),
            ];
            if next.iter().any(|c| c.is_empty()) {
                continue;
            }
            rho.push(k);
            acc += self.visit(&next, rem - k, k, rho);
            rho.pop();
        }
        acc
    }
}

fn check_equal_sizes(a: &Partition, b: &Partition, c: &Partition) -> Result<u32> {
    let n = a.size();
    if b.size() != n || c.size() != n {
        return Err(Error::Domain(format!(
            "Kronecker triple with sizes {}, {}, {}",
            a.size(),
            b.size(),
            c.size()
        )));
    }
    Ok(n)
}

/// Multiplicity of `M_γ` in `M_α ⊗ M_β`.
pub fn kron(alpha: &Partition, beta: &Partition, gamma: &Partition) -> Result<BigUint> {
    let n = check_equal_sizes(alpha, beta, gamma)?;
    if n == 0 {
        return Ok(BigUint::from(1u32));
    }
    let combos = [
        vec![(to_mask(alpha)?, 1i128)],
        vec![(to_mask(beta)?, 1i128)],
        vec![(to_mask(gamma)?, 1i128)],
    ];
    let walk = Walk {
        n,
        n_fact: factorial(n),
    };
    // Split on the largest part; each branch is independent.
    let total: BigInt = (1..=n)
        .into_par_iter()
        .map(|k| {
            let next = [
                strip_combo(&combos[0], k),
                strip_combo(&combos[1], k),
                strip_combo(&combos[2], k),
            ];
            if next.iter().any(|c| c.is_empty()) {
                return BigInt::zero();
            }
            let mut rho = vec![k];
            walk.visit(&next, n - k, k, &mut rho)
        })
        .reduce(BigInt::zero, |a, b| a + b);
    let (q, r) = total.div_rem(&BigInt::from(walk.n_fact.clone()));
    if !r.is_zero() || q.is_negative() {
        return Err(Error::Consistency(format!(
            "class sum for ({alpha}, {beta}, {gamma}) is {total}/{}! — not a non-negative integer",
            walk.n
        )));
    }
    Ok(q.magnitude().clone())
}

/// Convenience wrapper for small cases.
pub fn kron_u64(alpha: &Partition, beta: &Partition, gamma: &Partition) -> Result<u64> {
    let v = kron(alpha, beta, gamma)?;
    v.to_u64()
        .ok_or_else(|| Error::Limit(format!("Kronecker coefficient {v} exceeds u64")))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeOutcome {
    /// `g_{dα,dβ,dγ} = 1` for every probed `d`.
    pub holds: bool,
    /// First failing `d` and the value found there.
    pub witness: Option<(u32, BigUint)>,
}

/// Checks `g_{dα,dβ,dγ} = 1` for `d = 1..=horizon`. A finite sample, not a
/// proof of weak stability.
pub fn weak_stability_probe(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    horizon: u32,
) -> Result<ProbeOutcome> {
    check_equal_sizes(alpha, beta, gamma)?;
    for d in 1..=horizon {
        let v = kron(&alpha.scale(d), &beta.scale(d), &gamma.scale(d))?;
        if v != BigUint::from(1u32) {
            return Ok(ProbeOutcome {
                holds: false,
                witness: Some((d, v)),
            });
        }
    }
    Ok(ProbeOutcome {
        holds: true,
        witness: None,
    })
}
