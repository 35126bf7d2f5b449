//! Brute-force oracles shared by the integration tests. None of them go
//! through border strips, lattice words or power sums: characters come from
//! permutation modules and Kostka numbers, Schur polynomials from explicit
//! tableau enumeration.
#![allow(dead_code)]

pub mod suites;

use std::collections::HashMap;

use stabkit::partitions::{partitions_of, DoublePartition};
use stabkit::Partition;

pub fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

/// All permutations of `0..n` (one-line notation).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub fn cycle_type(sigma: &[usize]) -> Partition {
    let mut seen = vec![false; sigma.len()];
    let mut parts = Vec::new();
    for i in 0..sigma.len() {
        let mut len = 0;
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            j = sigma[j];
            len += 1;
        }
        if len > 0 {
            parts.push(len);
        }
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).unwrap()
}

/// Contents of all semistandard tableaux of `shape` over letters `0..m`,
/// as per-letter counts. Rows weakly increase, columns strictly increase.
pub fn ssyt_contents(shape: &Partition, m: usize) -> Vec<Vec<u32>> {
    let rows: Vec<usize> = shape.parts().iter().map(|&x| x as usize).collect();
    let cells: Vec<(usize, usize)> = rows
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = rows.iter().map(|&l| vec![0; l]).collect();
    let mut out = Vec::new();
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        m: usize,
        out: &mut Vec<Vec<u32>>,
    ) {
        if k == cells.len() {
            let mut c = vec![0u32; m];
            for row in grid.iter() {
                for &x in row {
                    c[x] += 1;
                }
            }
            out.push(c);
            return;
        }
        let (r, col) = cells[k];
        let lo_row = if col > 0 { grid[r][col - 1] } else { 0 };
        let lo_col = if r > 0 { grid[r - 1][col] + 1 } else { 0 };
        for x in lo_row.max(lo_col)..m {
            grid[r][col] = x;
            rec(k + 1, cells, grid, m, out);
        }
    }
    rec(0, &cells, &mut grid, m, &mut out);
    out
}

pub fn kostka(lambda: &Partition, mu: &Partition) -> u64 {
    let target: Vec<u32> = mu.parts().to_vec();
    ssyt_contents(lambda, mu.len())
        .into_iter()
        .filter(|c| *c == target)
        .count() as u64
}

/// Standard Young tableaux count by brute force (content `1^n`).
pub fn syt_count(lambda: &Partition) -> u64 {
    kostka(
        lambda,
        &Partition::new(vec![1; lambda.size() as usize]).unwrap(),
    )
}

/// Permutation character of the Young module `M^μ` at `σ`: the number of
/// words of content μ fixed by σ.
pub fn perm_character(mu: &Partition, sigma: &[usize]) -> i64 {
    let n = sigma.len();
    let l = mu.len();
    let mut count = 0i64;
    let mut word = vec![0usize; n];
    fn rec(i: usize, word: &mut Vec<usize>, left: &mut Vec<u32>, sigma: &[usize], count: &mut i64) {
        if i == word.len() {
            if (0..word.len()).all(|j| word[sigma[j]] == word[j]) {
                *count += 1;
            }
            return;
        }
        for b in 0..left.len() {
            if left[b] > 0 {
                left[b] -= 1;
                word[i] = b;
                rec(i + 1, word, left, sigma, count);
                left[b] += 1;
            }
        }
    }
    let mut left = mu.parts().to_vec();
    debug_assert_eq!(left.len(), l);
    rec(0, &mut word, &mut left, sigma, &mut count);
    count
}

/// Full character table of `S_n` from permutation modules, by peeling off
/// Kostka numbers: `π^μ = Σ_λ K_{λμ} χ^λ` is unitriangular.
pub struct SnTable {
    pub n: usize,
    pub shapes: Vec<Partition>,
    pub perms: Vec<Vec<usize>>,
    /// `values[shape][perm]`.
    pub values: Vec<Vec<i64>>,
}

impl SnTable {
    pub fn new(n: usize) -> Self {
        let shapes = partitions_of(n as u32);
        let perms = permutations(n);
        let mut values: Vec<Vec<i64>> = Vec::new();
        for (i, mu) in shapes.iter().enumerate() {
            let mut chi: Vec<i64> = perms.iter().map(|s| perm_character(mu, s)).collect();
            for j in 0..i {
                let k = kostka(&shapes[j], mu) as i64;
                for (x, y) in chi.iter_mut().zip(&values[j]) {
                    *x -= k * y;
                }
            }
            values.push(chi);
        }
        SnTable {
            n,
            shapes,
            perms,
            values,
        }
    }

    pub fn index(&self, lambda: &Partition) -> usize {
        self.shapes.iter().position(|s| s == lambda).unwrap()
    }

    pub fn chi(&self, lambda: &Partition, sigma: &[usize]) -> i64 {
        let j = self.perms.iter().position(|s| s == sigma).unwrap();
        self.values[self.index(lambda)][j]
    }
}

/// `g_{αβγ} = (1/n!) Σ_σ χ^α(σ) χ^β(σ) χ^γ(σ)` over every group element.
pub fn kron_oracle(t: &SnTable, a: &Partition, b: &Partition, c: &Partition) -> u64 {
    let (ia, ib, ic) = (t.index(a), t.index(b), t.index(c));
    let s: i64 = (0..t.perms.len())
        .map(|j| t.values[ia][j] * t.values[ib][j] * t.values[ic][j])
        .sum();
    assert_eq!(s % t.perms.len() as i64, 0);
    (s / t.perms.len() as i64) as u64
}

// ---------------------------------------------------------------------------
// Polynomials in N variables as exponent-vector maps.

pub type Poly = HashMap<Vec<u32>, i64>;

/// `s_λ(x_1, …, x_N)` by tableau enumeration.
pub fn schur_poly(lambda: &Partition, nvars: usize) -> Poly {
    let mut f = Poly::new();
    for c in ssyt_contents(lambda, nvars) {
        *f.entry(c).or_insert(0) += 1;
    }
    f
}

pub fn poly_mul(f: &Poly, g: &Poly) -> Poly {
    let mut h = Poly::new();
    for (a, x) in f {
        for (b, y) in g {
            let e: Vec<u32> = a.iter().zip(b).map(|(i, j)| i + j).collect();
            *h.entry(e).or_insert(0) += x * y;
        }
    }
    h
}

/// Coefficient of `s_ν` in a symmetric polynomial `f` in `N ≥ ℓ(ν)`
/// variables: `[x^{ν+δ}] (a_δ · f)`.
pub fn schur_coeff(f: &Poly, nu: &Partition, nvars: usize) -> i64 {
    if nu.len() > nvars {
        return 0;
    }
    let target: Vec<i64> = (0..nvars)
        .map(|i| nu.at(i + 1) as i64 + (nvars - 1 - i) as i64)
        .collect();
    let mut total = 0;
    for w in permutations(nvars) {
        let sign = perm_sign(&w);
        let e: Option<Vec<u32>> = (0..nvars)
            .map(|i| {
                let v = target[i] - (nvars - 1 - w[i]) as i64;
                (v >= 0).then_some(v as u32)
            })
            .collect();
        if let Some(e) = e {
            total += sign * f.get(&e).copied().unwrap_or(0);
        }
    }
    total
}

pub fn perm_sign(w: &[usize]) -> i64 {
    let inv = (0..w.len())
        .flat_map(|i| (i + 1..w.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| w[i] > w[j])
        .count();
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// LR coefficient via `s_λ s_μ` in `ℓ(ν)` variables.
pub fn lr_oracle(l: &Partition, m: &Partition, n: &Partition) -> u64 {
    if l.size() + m.size() != n.size() {
        return 0;
    }
    let nv = n.len().max(1);
    let f = poly_mul(&schur_poly(l, nv), &schur_poly(m, nv));
    schur_coeff(&f, n, nv) as u64
}

/// Plethysm coefficient: the torus weights of `S^μ(C^N)` are the contents
/// of μ-tableaux; `s_λ` evaluated on them is the character of `S^λ(S^μ C^N)`.
pub fn plethysm_oracle(l: &Partition, m: &Partition, n: &Partition) -> u64 {
    if l.size() * m.size() != n.size() {
        return 0;
    }
    let nv = n.len().max(1);
    let weights = ssyt_contents(m, nv);
    let mut f = Poly::new();
    for c in ssyt_contents(l, weights.len()) {
        let mut e = vec![0u32; nv];
        for (k, &cnt) in c.iter().enumerate() {
            for (x, w) in e.iter_mut().zip(&weights[k]) {
                *x += cnt * w;
            }
        }
        *f.entry(e).or_insert(0) += 1;
    }
    schur_coeff(&f, n, nv) as u64
}

// ---------------------------------------------------------------------------
// Hyperoctahedral group as signed permutations.

/// `i ↦ (perm[i], signs[i])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signed {
    pub perm: Vec<usize>,
    pub neg: Vec<bool>,
}

impl Signed {
    pub fn all(n: usize) -> Vec<Signed> {
        let mut out = Vec::new();
        for perm in permutations(n) {
            for mask in 0..(1u32 << n) {
                out.push(Signed {
                    perm: perm.clone(),
                    neg: (0..n).map(|i| mask >> i & 1 == 1).collect(),
                });
            }
        }
        out
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Signed) -> Signed {
        let n = self.perm.len();
        Signed {
            perm: (0..n).map(|i| self.perm[other.perm[i]]).collect(),
            neg: (0..n)
                .map(|i| other.neg[i] ^ self.neg[other.perm[i]])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Signed {
        let n = self.perm.len();
        let mut perm = vec![0; n];
        let mut neg = vec![false; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            neg[self.perm[i]] = self.neg[i];
        }
        Signed { perm, neg }
    }
}

/// Irreducible characters of `W_n`: `χ^{(α,β)} = Ind(χ^α ⊠ (χ^β·ε))` from
/// `W_k × W_{n−k}`, with `ε` the product of signs on the second block.
pub struct WreathTable {
    pub n: usize,
    pub elements: Vec<Signed>,
    pub labels: Vec<DoublePartition>,
    pub values: Vec<Vec<i64>>,
}

impl WreathTable {
    pub fn new(n: usize) -> Self {
        let elements = Signed::all(n);
        let sn: Vec<SnTable> = (0..=n).map(SnTable::new).collect();
        let labels = DoublePartition::all_of_size(n as u32);
        let values = labels
            .iter()
            .map(|dp| {
                let k = dp.plus.size() as usize;
                let h_order = (1i64 << n) * fact(k) * fact(n - k);
                elements
                    .iter()
                    .map(|g| {
                        let mut s = 0i64;
                        for x in &elements {
                            let h = x.compose(g).compose(&x.inverse());
                            if let Some(v) = block_value(&h, k, dp, &sn) {
                                s += v;
                            }
                        }
                        assert_eq!(s % h_order, 0);
                        s / h_order
                    })
                    .collect()
            })
            .collect();
        WreathTable {
            n,
            elements,
            labels,
            values,
        }
    }

    pub fn coeff(&self, a: &DoublePartition, b: &DoublePartition, c: &DoublePartition) -> u64 {
        let idx = |d: &DoublePartition| self.labels.iter().position(|x| x == d).unwrap();
        let (ia, ib, ic) = (idx(a), idx(b), idx(c));
        let s: i64 = (0..self.elements.len())
            .map(|j| self.values[ia][j] * self.values[ib][j] * self.values[ic][j])
            .sum();
        assert_eq!(s % self.elements.len() as i64, 0);
        (s / self.elements.len() as i64) as u64
    }

    pub fn dim(&self, a: &DoublePartition) -> i64 {
        let i = self.labels.iter().position(|x| x == a).unwrap();
        // identity is the first element: identity perm, no signs
        self.values[i][0]
    }
}

fn fact(n: usize) -> i64 {
    (1..=n as i64).product()
}

/// Inflated character of the Young subgroup `W_k × W_{n−k}` at `h`, or
/// `None` when `h` does not preserve the blocks.
fn block_value(h: &Signed, k: usize, dp: &DoublePartition, sn: &[SnTable]) -> Option<i64> {
    let n = h.perm.len();
    if (0..k).any(|i| h.perm[i] >= k) {
        return None;
    }
    let first: Vec<usize> = h.perm[..k].to_vec();
    let second: Vec<usize> = h.perm[k..].iter().map(|&x| x - k).collect();
    let eps = if h.neg[k..].iter().filter(|&&b| b).count() % 2 == 0 {
        1
    } else {
        -1
    };
    let a = if k == 0 {
        1
    } else {
        sn[k].chi(&dp.plus, &first)
    };
    let b = if n == k {
        1
    } else {
        sn[n - k].chi(&dp.minus, &second)
    };
    Some(a * b * eps)
}
