//! Tensor-product multiplicities for the hyperoctahedral group
//! `(ℤ/2)^n ⋊ S_n`, whose irreducibles are indexed by double partitions.
//!
//! Write `V = V⁺ ⊕ V⁻` for each of the two factors. Then
//! `V⁺ = V₁⁺⊗V₂⁺ ⊕ V₁⁻⊗V₂⁻` and `V⁻ = V₁⁺⊗V₂⁻ ⊕ V₁⁻⊗V₂⁺`, and the
//! multiplicity follows from expanding Schur functors of direct sums (LR)
//! and of tensor products (Kronecker):
//!
//! ```text
//! c = Σ_δ lr(δ₁,δ₂,γ⁺) lr(δ₃,δ₄,γ⁻)
//!       Σ g(δ₁,a,b) g(δ₂,c,d) g(δ₃,a',d') g(δ₄,c',b')
//!         lr(a,a',α⁺) lr(c,c',α⁻) lr(b,b',β⁺) lr(d,d',β⁻)
//! ```
//!
//! with `δ₁` on `V₁⁺⊗V₂⁺`, `δ₂` on `V₁⁻⊗V₂⁻`, `δ₃` on `V₁⁺⊗V₂⁻` and `δ₄`
//! on `V₁⁻⊗V₂⁺`. The inner sum is a closed chain
//! `a → b → b' → c' → c → d → d' → a' → a`, evaluated as the trace of a
//! product of eight small matrices.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::kronecker::kron;
use crate::lr::lr;
use crate::partitions::{partitions_of, DoublePartition, Partition};

pub const MAX_HYPEROCT_SIZE: u32 = 12;

type Matrix = Vec<Vec<u128>>;

fn matmul(x: &Matrix, y: &Matrix) -> Matrix {
    let cols = y.first().map_or(0, Vec::len);
    x.iter()
        .map(|row| {
            (0..cols)
                .map(|j| row.iter().zip(y).map(|(a, yr)| a * yr[j]).sum())
                .collect()
        })
        .collect()
}

fn trace(x: &Matrix) -> u128 {
    (0..x.len()).map(|i| x[i][i]).sum()
}

#[derive(Default)]
struct KronTable(HashMap<(Partition, Partition, Partition), u128>);

impl KronTable {
    fn get(&mut self, a: &Partition, b: &Partition, c: &Partition) -> Result<u128> {
        let key = (a.clone(), b.clone(), c.clone());
        if let Some(&v) = self.0.get(&key) {
            return Ok(v);
        }
        let v = kron(a, b, c)?
            .to_u128()
            .ok_or_else(|| Error::Limit("Kronecker coefficient exceeds u128".into()))?;
        self.0.insert(key, v);
        Ok(v)
    }

    /// `M[x][y] = g(δ, x, y)` (`flip` gives `g(δ, y, x)`, same value).
    fn matrix(
        &mut self,
        delta: &Partition,
        rows: &[Partition],
        cols: &[Partition],
    ) -> Result<Matrix> {
        rows.iter()
            .map(|x| cols.iter().map(|y| self.get(delta, x, y)).collect())
            .collect()
    }
}

/// `M[x][y] = lr(x, y, outer)` or `lr(y, x, outer)` when `swap`.
fn lr_matrix(rows: &[Partition], cols: &[Partition], outer: &Partition, swap: bool) -> Matrix {
    rows.iter()
        .map(|x| {
            cols.iter()
                .map(|y| if swap { lr(y, x, outer) } else { lr(x, y, outer) } as u128)
                .collect()
        })
        .collect()
}

/// `c^{γ±}_{α±,β±}`.
pub fn hyperoct_coeff(
    alpha: &DoublePartition,
    beta: &DoublePartition,
    gamma: &DoublePartition,
) -> Result<u64> {
    let n = alpha.size();
    if beta.size() != n || gamma.size() != n {
        return Ok(0);
    }
    if n > MAX_HYPEROCT_SIZE {
        return Err(Error::Limit(format!(
            "hyperoctahedral degree {n} exceeds {MAX_HYPEROCT_SIZE}"
        )));
    }
    let (ap, am) = (alpha.plus.size() as i64, alpha.minus.size() as i64);
    let (bp, bm) = (beta.plus.size() as i64, beta.minus.size() as i64);
    let (gp, gm) = (gamma.plus.size() as i64, gamma.minus.size() as i64);

    let mut kt = KronTable::default();
    let mut total: u128 = 0;
    for s1 in 0..=ap.min(bp).min(gp) {
        let (s2, s3, s4) = (gp - s1, ap - s1, bp - s1);
        if s2 < 0 || s3 < 0 || s4 < 0 || s2 + s4 != am || s2 + s3 != bm || s3 + s4 != gm {
            continue;
        }
        let [p1, p2, p3, p4] = [s1, s2, s3, s4].map(|s| partitions_of(s as u32));

        // chain order: a(p1) b(p1) b'(p4) c'(p4) c(p2) d(p2) d'(p3) a'(p3)
        let l_beta_plus = lr_matrix(&p1, &p4, &beta.plus, false); // b → b'
        let l_alpha_minus = lr_matrix(&p4, &p2, &alpha.minus, true); // c' → c
        let l_beta_minus = lr_matrix(&p2, &p3, &beta.minus, false); // d → d'
        let l_alpha_plus = lr_matrix(&p3, &p1, &alpha.plus, true); // a' → a

        for d1 in &p1 {
            for d2 in &p2 {
                let outer_plus = lr(d1, d2, &gamma.plus) as u128;
                if outer_plus == 0 {
                    continue;
                }
                for d3 in &p3 {
                    for d4 in &p4 {
                        let outer_minus = lr(d3, d4, &gamma.minus) as u128;
                        if outer_minus == 0 {
                            continue;
                        }
                        let g1 = kt.matrix(d1, &p1, &p1)?; // a → b
                        let g4 = kt.matrix(d4, &p4, &p4)?; // b' → c' : g(δ₄,c',b')
                        let g2 = kt.matrix(d2, &p2, &p2)?; // c → d
                        let g3 = kt.matrix(d3, &p3, &p3)?; // d' → a' : g(δ₃,a',d')
                        let mut m = matmul(&g1, &l_beta_plus);
                        for next in [&g4, &l_alpha_minus, &g2, &l_beta_minus, &g3, &l_alpha_plus] {
                            m = matmul(&m, next);
                        }
                        total += outer_plus * outer_minus * trace(&m);
                    }
                }
            }
        }
    }
    total
        .to_u64()
        .ok_or_else(|| Error::Limit("hyperoctahedral coefficient exceeds u64".into()))
}

/// `dim M_{α±} = C(n, |α⁺|) · f^{α⁺} · f^{α⁻}`.
pub fn dim_wreath(alpha: &DoublePartition) -> BigUint {
    let n = alpha.size() as u64;
    let k = alpha.plus.size() as u64;
    let mut binom = BigUint::from(1u32);
    for i in 0..k {
        binom = binom * (n - i) / (i + 1);
    }
    binom * alpha.plus.dim_sn() * alpha.minus.dim_sn()
}
