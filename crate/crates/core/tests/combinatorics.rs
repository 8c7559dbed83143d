use num_bigint::BigInt;
use num_integer::Integer;
use qcatalan::combinatorics::*;
use qcatalan::qseries::{q_catalan, rational_q_catalan};
use std::collections::HashSet;

const BOUNCE_N3: &str = include_str!("data/bounce_n3.txt");
const MAJ_N3: &str = include_str!("data/maj_n3.txt");

fn at_one(p: &qcatalan::LaurentPoly) -> BigInt {
    p.terms().map(|(_, c)| c.clone()).sum()
}

/// Ballot-style count of lattice paths staying weakly above y = nx/m,
/// by dynamic programming over lattice points.
fn count_paths(m: u32, n: u32) -> u64 {
    let (m, n) = (m as usize, n as usize);
    let mut ways = vec![vec![0u64; m + 1]; n + 1];
    ways[0][0] = 1;
    for y in 0..=n {
        for x in 0..=m {
            if (y == 0 && x == 0) || y * m < n * x {
                continue;
            }
            let from_below = if y > 0 { ways[y - 1][x] } else { 0 };
            let from_left = if x > 0 { ways[y][x - 1] } else { 0 };
            ways[y][x] = from_below + from_left;
        }
    }
    ways[n][m]
}

#[test]
fn both_statistics_give_the_q_catalan_polynomial() {
    for n in 1..=8 {
        let c = q_catalan(n);
        assert_eq!(statistic_polynomial(n, Statistic::Maj).unwrap(), c, "maj, n = {n}");
        assert_eq!(statistic_polynomial(n, Statistic::CoareaPlusBounce).unwrap(), c, "n = {n}");
    }
}

#[test]
fn figure_tables_match_golden_files() {
    assert_eq!(bounce_table(3).unwrap(), BOUNCE_N3);
    assert_eq!(maj_table(3).unwrap(), MAJ_N3);
}

#[test]
fn path_counts_match_catalan_at_one() {
    for m in 1..=12u32 {
        for n in 1..=12u32 {
            if m.gcd(&n) != 1 {
                continue;
            }
            let paths = enumerate_paths(m, n).unwrap();
            let expect = at_one(&rational_q_catalan(m, n).unwrap());
            assert_eq!(BigInt::from(paths.len()), expect, "({m}, {n})");
            assert_eq!(paths.len() as u64, count_paths(m, n), "({m}, {n})");
        }
    }
}

#[test]
fn area_is_bounded_and_attains_the_maximum() {
    for m in 1..=10u32 {
        for n in 1..=10u32 {
            if m.gcd(&n) != 1 {
                continue;
            }
            let max = ((m - 1) * (n - 1) / 2) as u64;
            let areas: Vec<u64> = enumerate_paths(m, n).unwrap().iter().map(area).collect();
            assert_eq!(areas.iter().copied().max(), Some(max), "({m}, {n})");
            assert!(areas.contains(&0));
        }
    }
}

#[test]
fn area_polynomial_counts_paths() {
    for (m, n) in [(3, 5), (4, 7), (5, 6), (2, 9)] {
        let a = area_polynomial(m, n).unwrap();
        assert_eq!(at_one(&a), BigInt::from(count_paths(m, n)), "({m}, {n})");
    }
}

#[test]
fn square_paths_biject_onto_tableaux() {
    for n in 1..=7u32 {
        let paths = enumerate_paths(n, n).unwrap();
        let tableaux: HashSet<(Vec<u32>, Vec<u32>)> = paths
            .iter()
            .map(|d| {
                let t = path_to_syt(d).unwrap();
                (t.row1().to_vec(), t.row2().to_vec())
            })
            .collect();
        assert_eq!(tableaux.len(), paths.len());
        assert_eq!(BigInt::from(paths.len()), at_one(&q_catalan(n)));
    }
}

#[test]
fn four_step_table_has_fourteen_columns() {
    let table = bounce_table(4).unwrap();
    let first = table.lines().next().unwrap();
    assert_eq!(first.split('\t').count(), 14 + 1);
}

#[test]
fn malformed_tableaux_are_rejected() {
    assert!(TwoRowSyt::new(vec![1, 2], vec![3]).is_err());
    assert!(TwoRowSyt::new(vec![2, 1], vec![3, 4]).is_err());
    assert!(TwoRowSyt::new(vec![1, 3], vec![2, 4]).is_ok());
    assert!(TwoRowSyt::new(vec![1, 4], vec![2, 3]).is_err());
    assert!(DyckPath::parse("ENEN").is_err());
}
