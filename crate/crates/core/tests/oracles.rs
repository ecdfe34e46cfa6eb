//! Exhaustive comparisons of the fast shape and tableau routines against
//! brute-force definitions.

use std::collections::BTreeSet;

use grothmn::shapes::{enumerate_mn_outer, enumerate_ribbon_outer, partitions_between};
use grothmn::tableaux::{enumerate_ssyt, enumerate_svt};
use grothmn::{Partition, SkewShape};
use num_bigint::BigInt;
use num_rational::BigRational;

fn rect(rows: usize, cols: usize) -> Partition {
    Partition::new(vec![cols; rows]).unwrap()
}

fn skews_in_box(rows: usize, cols: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    for outer in Partition::in_box(rows, cols) {
        for inner in partitions_between(&Partition::empty(), &outer) {
            out.push(SkewShape::new(outer.clone(), inner).unwrap());
        }
    }
    out
}

#[test]
fn max_nw_ribbon_matches_oracle_in_4x4_box() {
    let mut checked = 0;
    for s in skews_in_box(4, 4) {
        if s.is_empty() || !s.is_connected() {
            continue;
        }
        assert_eq!(s.max_nw_ribbon_size().unwrap(), s.max_nw_ribbon_size_oracle().unwrap(), "{s:?}");
        checked += 1;
    }
    assert!(checked > 1000, "{checked}");
}

#[test]
fn connectivity_matches_flood_fill_in_4x4_box() {
    for s in skews_in_box(4, 4) {
        assert_eq!(s.is_connected(), s.is_connected_flood(), "{s:?}");
    }
}

#[test]
fn ribbons_span_size_plus_one_rows_and_columns() {
    for s in skews_in_box(5, 5) {
        if s.is_ribbon() {
            assert_eq!(s.rows_occupied() + s.cols_occupied(), s.size() + 1, "{s:?}");
            assert_eq!(s.height().unwrap(), s.rows_occupied() - 1);
        }
    }
}

/// `nu` between `lambda` and the `n x (lambda_1 + k)` rectangle satisfying
/// the side conditions, checked cell by cell.
fn mn_outer_brute(lambda: &Partition, k: usize, n: usize) -> BTreeSet<Partition> {
    partitions_between(lambda, &rect(n, lambda.part(1) + k))
        .into_iter()
        .filter(|nu| {
            let s = SkewShape::new(nu.clone(), lambda.clone()).unwrap();
            !s.is_empty()
                && s.is_connected_flood()
                && s.cols_occupied() <= k
                && s.max_nw_ribbon_size_oracle().unwrap() >= k
        })
        .collect()
}

#[test]
fn mn_outer_enumeration_matches_brute_force() {
    for n in 1..=3 {
        for lambda in Partition::in_box(n, 3) {
            for k in 1..=4 {
                let fast: Vec<Partition> = enumerate_mn_outer(&lambda, k, n).unwrap();
                let sorted: Vec<Partition> = {
                    let mut v = fast.clone();
                    v.sort();
                    v
                };
                assert_eq!(fast, sorted, "not in graded order for {lambda} k={k}");
                let fast: BTreeSet<Partition> = fast.into_iter().collect();
                assert_eq!(fast, mn_outer_brute(&lambda, k, n), "lambda={lambda} k={k} n={n}");
            }
        }
    }
}

#[test]
fn ribbon_enumeration_matches_brute_force() {
    for n in 1..=4 {
        for lambda in Partition::in_box(n, 3) {
            for k in 1..=4 {
                let fast: BTreeSet<Partition> = enumerate_ribbon_outer(&lambda, k, n).unwrap().into_iter().collect();
                let brute: BTreeSet<Partition> = partitions_between(&lambda, &rect(n, lambda.part(1) + k))
                    .into_iter()
                    .filter(|nu| {
                        let s = SkewShape::new(nu.clone(), lambda.clone()).unwrap();
                        let cells = s.cells();
                        let no_square = cells.iter().all(|c| {
                            !(s.contains_cell(grothmn::Cell::new(c.row + 1, c.col))
                                && s.contains_cell(grothmn::Cell::new(c.row, c.col + 1))
                                && s.contains_cell(grothmn::Cell::new(c.row + 1, c.col + 1)))
                        });
                        s.size() == k && s.is_connected_flood() && no_square
                    })
                    .collect();
                assert_eq!(fast, brute, "lambda={lambda} k={k} n={n}");
            }
        }
    }
}

/// `prod (n + c(u)) / h(u)` over the boxes of `lambda`.
fn hook_content(lambda: &Partition, n: usize) -> BigInt {
    let parts = lambda.parts();
    let conj = |j: usize| parts.iter().filter(|&&p| p > j).count();
    let mut acc = BigRational::from_integer(1.into());
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row {
            let content = n as i64 + j as i64 - i as i64;
            let hook = (row - j) + (conj(j) - i) - 1;
            acc *= BigRational::new(content.into(), (hook as i64).into());
        }
    }
    assert!(acc.is_integer());
    acc.to_integer()
}

#[test]
fn ssyt_counts_match_hook_content_formula() {
    for n in 1..=4 {
        for lambda in Partition::in_box(4, 4) {
            if lambda.size() > 7 {
                continue;
            }
            let count = enumerate_ssyt(&lambda, n).count();
            assert_eq!(BigInt::from(count), hook_content(&lambda, n), "lambda={lambda} n={n}");
        }
    }
}

#[test]
fn single_box_set_valued_count() {
    for n in 1..=6 {
        assert_eq!(enumerate_svt(&Partition::new(vec![1]).unwrap(), n).count(), (1 << n) - 1);
    }
}
