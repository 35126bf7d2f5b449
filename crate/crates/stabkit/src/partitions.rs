//! Integer partitions and pairs of partitions.
//!
//! Text form: comma-separated parts, `k^m` repeats `k` m times, `-` (or the
//! empty string) is the empty partition.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// never stored, so equality is mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!(
                "parts must be weakly decreasing, found {} before {}",
                w[0], w[1]
            )));
        }
        if parts.contains(&0) {
            return Err(Error::Domain("zero part inside a partition".into()));
        }
        Ok(Partition(parts))
    }

    /// Caller guarantees the invariant.
    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition(parts)
    }

    pub fn single(n: u32) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition(vec![n])
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "-" || text == "∅" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for raw in text.split(',') {
            let token = raw.trim();
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b.trim(), Some(e.trim())),
                None => (token, None),
            };
            let k: u32 = base
                .parse()
                .map_err(|_| Error::parse(token, "part is not a non-negative integer"))?;
            if k == 0 {
                return Err(Error::parse(token, "parts must be positive"));
            }
            let m: usize = match exp {
                Some(e) => e
                    .parse()
                    .map_err(|_| Error::parse(token, "malformed exponent"))?,
                None => 1,
            };
            if m == 0 {
                return Err(Error::parse(token, "exponent must be positive"));
            }
            if let Some(&prev) = parts.last() {
                if prev < k {
                    return Err(Error::parse(token, "parts must be weakly decreasing"));
                }
            }
            parts.extend(std::iter::repeat_n(k, m));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_i` for 1-based `i`, zero past the end.
    pub fn part_at(&self, i: usize) -> Result<u32> {
        if i == 0 {
            return Err(Error::Domain("part index is 1-based".into()));
        }
        Ok(self.at(i))
    }

    /// Unchecked 1-based access; `i = 0` reads as 0 too.
    #[inline]
    pub fn at(&self, i: usize) -> u32 {
        if i == 0 {
            0
        } else {
            self.0.get(i - 1).copied().unwrap_or(0)
        }
    }

    /// `λ + d·α`, partwise with zero padding.
    pub fn add_scaled(&self, d: u32, alpha: &Partition) -> Partition {
        let n = self.len().max(alpha.len());
        let parts = (1..=n).map(|i| self.at(i) + d * alpha.at(i)).collect();
        Partition(parts)
    }

    /// `d·λ`.
    pub fn scale(&self, d: u32) -> Partition {
        Partition::empty().add_scaled(d, self)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.at(1) as usize;
        let parts = (1..=first)
            .map(|j| self.0.iter().filter(|&&p| p as usize >= j).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Whether the Young diagram of `other` fits inside this one.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Number of standard Young tableaux (hook length formula).
    pub fn dim_sn(&self) -> BigUint {
        let n = self.size();
        let conj = self.conjugate();
        let mut hooks = BigUint::one();
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row as usize {
                let arm = row as usize - j - 1;
                let leg = conj.0[j] as usize - i - 1;
                hooks *= (arm + leg + 1) as u64;
            }
        }
        factorial(n) / hooks
    }

    /// Dimension of the Schur functor `𝕊^λ` applied to an `n`-dimensional
    /// space (Weyl's formula); zero when `ℓ(λ) > n`.
    pub fn dim_gl(&self, n: usize) -> BigUint {
        if self.len() > n {
            return BigUint::zero();
        }
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for i in 1..=n {
            for j in (i + 1)..=n {
                let li = self.at(i) as u64 + (n - i) as u64;
                let lj = self.at(j) as u64 + (n - j) as u64;
                num *= li - lj;
                den *= (j - i) as u64;
            }
        }
        num / den
    }

    /// Multiplicities `m_k` indexed by part value (index 0 unused).
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m = vec![0u32; self.at(1) as usize + 1];
        for &p in &self.0 {
            m[p as usize] += 1;
        }
        m
    }
}

pub fn factorial(n: u32) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let k = self.0[i];
            let run = self.0[i..].iter().take_while(|&&p| p == k).count();
            let pieces: Vec<String> = if run >= 3 {
                vec![format!("{k}^{run}")]
            } else {
                vec![k.to_string(); run]
            };
            for piece in pieces {
                if !first {
                    f.write_str(",")?;
                }
                f.write_str(&piece)?;
                first = false;
            }
            i += run;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::parse(s)
    }
}

impl TryFrom<String> for Partition {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        Partition::parse(&s)
    }
}

impl From<Partition> for String {
    fn from(p: Partition) -> String {
        p.to_string()
    }
}

/// All partitions of `n`, in reverse-lexicographic order: `(n)` first,
/// `(1^n)` last.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for k in (1..=rem.min(max)).rev() {
            cur.push(k);
            rec(rem - k, k, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// Partitions of `n` with at most `max_len` parts, same order.
pub fn partitions_of_len(n: u32, max_len: usize) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(|p| p.len() <= max_len)
        .collect()
}

/// An ordered pair `(plus, minus)`; text form `plus;minus`, e.g. `2;2` or
/// `1;-`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DoublePartition {
    pub plus: Partition,
    pub minus: Partition,
}

impl DoublePartition {
    pub fn new(plus: Partition, minus: Partition) -> Self {
        DoublePartition { plus, minus }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let (p, m) = text
            .split_once(';')
            .ok_or_else(|| Error::parse(text.trim(), "double partition needs `plus;minus`"))?;
        Ok(DoublePartition {
            plus: Partition::parse(p)?,
            minus: Partition::parse(m)?,
        })
    }

    pub fn size(&self) -> u32 {
        self.plus.size() + self.minus.size()
    }

    pub fn scale(&self, d: u32) -> Self {
        DoublePartition {
            plus: self.plus.scale(d),
            minus: self.minus.scale(d),
        }
    }

    /// All double partitions of total size `n`.
    pub fn all_of_size(n: u32) -> Vec<DoublePartition> {
        let mut out = Vec::new();
        for k in (0..=n).rev() {
            for p in partitions_of(k) {
                for m in partitions_of(n - k) {
                    out.push(DoublePartition::new(p.clone(), m));
                }
            }
        }
        out
    }
}

impl fmt::Display for DoublePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", self.plus, self.minus)
    }
}

impl FromStr for DoublePartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        DoublePartition::parse(s)
    }
}

/// Splits `a / b / c` into three trimmed pieces.
pub fn split_triple(text: &str) -> Result<[&str; 3]> {
    let pieces: Vec<&str> = text.split('/').map(str::trim).collect();
    match pieces.as_slice() {
        [a, b, c] => Ok([a, b, c]),
        _ => Err(Error::parse(
            text,
            format!("expected three '/'-separated items, found {}", pieces.len()),
        )),
    }
}

pub fn parse_triple(text: &str) -> Result<[Partition; 3]> {
    let [a, b, c] = split_triple(text)?;
    Ok([
        Partition::parse(a)?,
        Partition::parse(b)?,
        Partition::parse(c)?,
    ])
}

pub fn parse_double_triple(text: &str) -> Result<[DoublePartition; 3]> {
    let [a, b, c] = split_triple(text)?;
    Ok([
        DoublePartition::parse(a)?,
        DoublePartition::parse(b)?,
        DoublePartition::parse(c)?,
    ])
}
