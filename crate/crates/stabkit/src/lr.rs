//! Littlewood–Richardson coefficients by counting LR fillings.

use std::collections::BTreeMap;

use crate::partitions::Partition;

/// Number of LR tableaux of shape `ν/λ` and content `μ`. Returns 0 for
/// incompatible sizes or shapes.
pub fn lr(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() + mu.size() != nu.size() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    // cells in reading order: rows top to bottom, each right to left
    let mut cells = Vec::new();
    for r in 0..nu.len() {
        let lo = lambda.at(r + 1) as usize;
        let hi = nu.at(r + 1) as usize;
        for c in (lo..hi).rev() {
            cells.push((r, c));
        }
    }
    let width = nu.at(1) as usize;
    let mut grid = vec![vec![0u32; width]; nu.len()];
    let mut count = vec![0u32; mu.len() + 1];
    fill(0, &cells, lambda, mu, &mut grid, &mut count)
}

fn fill(
    idx: usize,
    cells: &[(usize, usize)],
    lambda: &Partition,
    mu: &Partition,
    grid: &mut [Vec<u32>],
    count: &mut [u32],
) -> u64 {
    let Some(&(r, c)) = cells.get(idx) else {
        return 1;
    };
    // row weakly increasing left to right: bounded by the right neighbour
    let mut hi = mu.len() as u32;
    if c + 1 < grid[r].len() && grid[r][c + 1] != 0 {
        hi = hi.min(grid[r][c + 1]);
    }
    // columns strictly increasing downward
    let lo = if r > 0 && c >= lambda.at(r) as usize {
        grid[r - 1][c] + 1
    } else {
        1
    };
    let mut total = 0;
    for v in lo..=hi {
        let vi = v as usize;
        if count[vi] >= mu.at(vi) {
            continue;
        }
        if v > 1 && count[vi] >= count[vi - 1] {
            continue;
        }
        count[vi] += 1;
        grid[r][c] = v;
        total += fill(idx + 1, cells, lambda, mu, grid, count);
        grid[r][c] = 0;
        count[vi] -= 1;
    }
    total
}

/// `s_λ · s_μ = Σ_ν c^ν_{λμ} s_ν`, built by adding the letters of `μ` to
/// `λ` one value at a time as horizontal strips and keeping the fillings
/// whose reading word is a lattice word.
pub fn schur_product_expand(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    // letters[r] lists the letters placed in row r, left to right
    let rows = lambda.len() + mu.len();
    let mut shape: Vec<u32> = (1..=rows).map(|i| lambda.at(i)).collect();
    let mut letters: Vec<Vec<u32>> = vec![Vec::new(); rows];
    add_letter(1, mu, &mut shape, &mut letters, &mut out);
    out
}

fn add_letter(
    v: u32,
    mu: &Partition,
    shape: &mut Vec<u32>,
    letters: &mut Vec<Vec<u32>>,
    out: &mut BTreeMap<Partition, u64>,
) {
    if v as usize > mu.len() {
        if is_lattice(letters) {
            let nu = Partition::new(shape.clone()).expect("strip additions keep a partition");
            *out.entry(nu).or_insert(0) += 1;
        }
        return;
    }
    let old = shape.clone();
    let mut adds = vec![0u32; shape.len()];
    strips(0, mu.at(v as usize), &old, &mut adds, &mut |adds| {
        for (r, &a) in adds.iter().enumerate() {
            shape[r] += a;
            letters[r].extend(std::iter::repeat_n(v, a as usize));
        }
        // letters are added in increasing order, so prefixes can be checked early
        if is_lattice(letters) {
            add_letter(v + 1, mu, shape, letters, out);
        }
        for (r, &a) in adds.iter().enumerate() {
            shape[r] -= a;
            let len = letters[r].len();
            letters[r].truncate(len - a as usize);
        }
    });
}

/// Horizontal strips of `k` boxes added to `shape`: row `r` may grow up to
/// the old length of row `r − 1`.
fn strips(r: usize, k: u32, shape: &[u32], adds: &mut [u32], f: &mut dyn FnMut(&[u32])) {
    if k == 0 {
        f(adds);
        return;
    }
    if r >= shape.len() {
        return;
    }
    let cap = if r == 0 {
        k
    } else {
        (shape[r - 1] - shape[r]).min(k)
    };
    for a in (0..=cap).rev() {
        adds[r] = a;
        strips(r + 1, k - a, shape, adds, f);
    }
    adds[r] = 0;
}

fn is_lattice(letters: &[Vec<u32>]) -> bool {
    let mut count: Vec<u32> = Vec::new();
    for row in letters {
        for &v in row.iter().rev() {
            let vi = v as usize;
            if count.len() <= vi {
                count.resize(vi + 1, 0);
            }
            count[vi] += 1;
            if vi > 1 && count[vi] > count[vi - 1] {
                return false;
            }
        }
    }
    true
}
