//! Exhaustive checks shared by the granular test targets and the
//! acceptance harness. Each function panics on the first violation.

use num_bigint::{BigInt, BigUint};

use super::*;
use stabkit::characters::{character, z_order};
use stabkit::gitbounds::{bound_d1, bound_hyperoct, Family, TripleQuery};
use stabkit::hyperoctahedral::{dim_wreath, hyperoct_coeff};
use stabkit::kronecker::{kron, kron_u64};
use stabkit::lr::{lr, schur_product_expand};
use stabkit::partitions::{factorial, partitions_of, DoublePartition};
use stabkit::plethysm::plethysm_coeff;
use stabkit::Partition;

pub fn column_orthogonality() {
    for n in 0..=9u32 {
        let ps = partitions_of(n);
        for r in &ps {
            for s in &ps {
                let sum: BigInt = ps
                    .iter()
                    .map(|l| character(l, r).unwrap() * character(l, s).unwrap())
                    .sum();
                let want = if r == s {
                    BigInt::from(z_order(r))
                } else {
                    BigInt::from(0)
                };
                assert_eq!(sum, want, "{r} {s}");
            }
        }
    }
}

pub fn kron_one_row_and_one_column() {
    for n in 1..=7u32 {
        let ps = partitions_of(n);
        let row = Partition::single(n);
        let col = row.conjugate();
        for b in &ps {
            for c in &ps {
                assert_eq!(kron(&row, b, c).unwrap(), BigUint::from((b == c) as u8));
                assert_eq!(
                    kron(&col, b, c).unwrap(),
                    BigUint::from((*b == c.conjugate()) as u8)
                );
            }
        }
    }
}

pub fn kron_dimension_consistency() {
    for n in 1..=7u32 {
        let ps = partitions_of(n);
        for a in &ps {
            for b in &ps {
                let s: BigUint = ps.iter().map(|c| kron(a, b, c).unwrap() * c.dim_sn()).sum();
                assert_eq!(s, a.dim_sn() * b.dim_sn());
            }
        }
    }
}

pub fn lr_dimension_consistency_and_symmetry() {
    for total in 0..=6u32 {
        for k in 0..=total {
            for l in partitions_of(k) {
                for m in partitions_of(total - k) {
                    let mut s = BigUint::from(0u32);
                    for n in partitions_of(total) {
                        let c = lr(&l, &m, &n);
                        assert_eq!(c, lr(&m, &l, &n));
                        s += n.dim_sn() * c;
                    }
                    let binom = factorial(total) / (factorial(k) * factorial(total - k));
                    assert_eq!(s, binom * l.dim_sn() * m.dim_sn(), "{l} {m}");
                }
            }
        }
    }
}

pub fn plethysm_dimension_consistency() {
    let nvars = 3;
    for a in 1..=8u32 {
        for b in 1..=8 / a {
            for l in partitions_of(a) {
                for m in partitions_of(b) {
                    let inner = m.dim_gl(nvars);
                    let inner: usize = inner.try_into().unwrap();
                    let s: BigUint = partitions_of(a * b)
                        .iter()
                        .map(|n| plethysm_coeff(&l, &m, n).unwrap() * n.dim_gl(nvars))
                        .sum();
                    assert_eq!(s, l.dim_gl(inner), "{l}[{m}]");
                }
            }
        }
    }
}

pub fn hyperoct_dimension_consistency_and_symmetry() {
    for n in 1..=4u32 {
        let labels = DoublePartition::all_of_size(n);
        for a in &labels {
            for b in &labels {
                let mut s = BigUint::from(0u32);
                for c in &labels {
                    let v = hyperoct_coeff(a, b, c).unwrap();
                    assert_eq!(v, hyperoct_coeff(b, a, c).unwrap());
                    s += dim_wreath(c) * v;
                }
                assert_eq!(s, dim_wreath(a) * dim_wreath(b), "{a} {b}");
            }
        }
    }
}

pub fn plethysm_scaled_and_one_row() {
    for size in 1..=4u32 {
        for m in partitions_of(size) {
            for d in 1..=3u32 {
                let row = Partition::single(d);
                assert_eq!(
                    plethysm_coeff(&row, &m, &m.scale(d)).unwrap(),
                    BigUint::from(1u32)
                );
                if m.len() >= 2 {
                    let target = Partition::single(d * size);
                    assert_eq!(
                        plethysm_coeff(&row, &m, &target).unwrap(),
                        BigUint::from(0u32)
                    );
                }
            }
        }
    }
}

pub fn lr_into_one_row() {
    for d in 1..=5u32 {
        let target = Partition::single(2 * d);
        for l in partitions_of(d) {
            for m in partitions_of(d) {
                let want = (l.len() == 1 && m.len() == 1) as u64;
                assert_eq!(lr(&l, &m, &target), want);
            }
        }
    }
}

pub fn hyperoct_scaled_two_two() {
    let base = DoublePartition::parse("2;2").unwrap();
    for d in 1..=3 {
        let x = base.scale(d);
        assert_eq!(hyperoct_coeff(&x, &x, &x).unwrap(), 1);
    }
}

pub fn hyperoct_reduces_to_kron() {
    for n in 1..=4u32 {
        for a in partitions_of(n) {
            for b in partitions_of(n) {
                for c in partitions_of(n) {
                    let lift = |x: &Partition| DoublePartition::new(x.clone(), Partition::empty());
                    let h = hyperoct_coeff(&lift(&a), &lift(&b), &lift(&c)).unwrap();
                    assert_eq!(BigUint::from(h), kron(&a, &b, &c).unwrap());
                }
            }
        }
    }
}

pub fn hyperoct_bound_reduces_to_d1() {
    for n in 4..=8u32 {
        for l in partitions_of(n).into_iter().filter(|x| x.len() >= 2) {
            for m in partitions_of(n).into_iter().filter(|x| x.len() >= 2) {
                for nu in partitions_of(n) {
                    let q = TripleQuery::new(l.clone(), m.clone(), nu.clone(), Family::Murnaghan)
                        .unwrap();
                    let lift = |x: &Partition| DoublePartition::new(x.clone(), Partition::empty());
                    assert_eq!(
                        bound_hyperoct(&lift(&l), &lift(&m), &lift(&nu)).unwrap(),
                        bound_d1(&q, false).unwrap()
                    );
                }
            }
        }
    }
}

pub fn dim_sn_squares_sum_to_factorial() {
    for n in 0..=8u32 {
        let s: BigUint = partitions_of(n).iter().map(|l| l.dim_sn().pow(2)).sum();
        assert_eq!(s, factorial(n));
        for l in partitions_of(n) {
            assert_eq!(l.dim_sn(), BigUint::from(syt_count(&l)));
        }
    }
}

pub fn sn_oracle_is_a_character_table() {
    // dimensions from brute-force SYT counts, and row orthogonality
    for n in 1..=5 {
        let t = SnTable::new(n);
        for (i, l) in t.shapes.iter().enumerate() {
            assert_eq!(t.values[i][0], syt_count(l) as i64, "{l}");
            for j in 0..t.shapes.len() {
                let s: i64 = (0..t.perms.len())
                    .map(|k| t.values[i][k] * t.values[j][k])
                    .sum();
                assert_eq!(s, if i == j { t.perms.len() as i64 } else { 0 });
            }
        }
    }
}

pub fn kron_matches_tensor_oracle() {
    for n in 1..=4 {
        let t = SnTable::new(n);
        for a in &t.shapes {
            for b in &t.shapes {
                for c in &t.shapes {
                    assert_eq!(
                        kron_u64(a, b, c).unwrap(),
                        kron_oracle(&t, a, b, c),
                        "{a} {b} {c}"
                    );
                }
            }
        }
    }
}

pub fn lr_matches_polynomial_oracle() {
    for total in 0..=6 {
        for k in 0..=total {
            for l in partitions_of(k) {
                for m in partitions_of(total - k) {
                    let expanded = schur_product_expand(&l, &m);
                    for n in partitions_of(total) {
                        let want = lr_oracle(&l, &m, &n);
                        assert_eq!(lr(&l, &m, &n), want, "{l} {m} {n}");
                        assert_eq!(expanded.get(&n).copied().unwrap_or(0), want);
                    }
                }
            }
        }
    }
}

pub fn lr_pieri() {
    // s_λ · h_k: horizontal strips
    for a in 0..=5 {
        for l in partitions_of(a) {
            for k in 0..=3 {
                for n in partitions_of(a + k) {
                    let strip = n.contains(&l) && (1..=n.len()).all(|i| n.at(i + 1) <= l.at(i));
                    assert_eq!(
                        lr(&l, &stabkit::Partition::new(vec![k]).unwrap(), &n),
                        strip as u64,
                        "{l} {k} {n}"
                    );
                }
            }
        }
    }
}

pub fn plethysm_matches_weight_oracle() {
    for a in 1..=6 {
        for b in 1..=6 / a {
            for l in partitions_of(a) {
                for m in partitions_of(b) {
                    for n in partitions_of(a * b) {
                        let got = plethysm_coeff(&l, &m, &n).unwrap();
                        assert_eq!(got, plethysm_oracle(&l, &m, &n).into(), "{l}[{m}] at {n}");
                    }
                }
            }
        }
    }
}

pub fn hyperoct_matches_wreath_oracle() {
    for n in 1..=3 {
        let w = WreathTable::new(n);
        let labels = DoublePartition::all_of_size(n as u32);
        for a in &labels {
            assert_eq!(
                w.dim(a),
                stabkit::hyperoctahedral::dim_wreath(a).try_into().unwrap()
            );
            for b in &labels {
                for c in &labels {
                    assert_eq!(
                        hyperoct_coeff(a, b, c).unwrap(),
                        w.coeff(a, b, c),
                        "{a} {b} {c}"
                    );
                }
            }
        }
    }
}

pub fn kron_s3_symmetry() {
    for n in 1..=6u32 {
        let ps = partitions_of(n);
        for a in &ps {
            for b in &ps {
                for c in &ps {
                    let g = kron(a, b, c).unwrap();
                    for [x, y, z] in [[a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]] {
                        assert_eq!(kron(x, y, z).unwrap(), g, "{a} {b} {c}");
                    }
                }
            }
        }
    }
}
