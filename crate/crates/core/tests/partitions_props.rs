mod common;

use common::*;
use tropcrit::critical::seeded_rng;
use tropcrit::partitions::{is_rapidly_increasing, near_index, solve_tree};
use tropcrit::rational::int;
use tropcrit::{RationalVector, SetPartition};

#[test]
fn random_pairs_follow_the_classification() {
    let mut rng = seeded_rng(11);
    for n in 3..=8 {
        let stats = check_partition_pairs(&mut rng, n, 200).unwrap();
        assert!(stats.trees > 0, "n={n}: {stats:?}");
        assert!(stats.cyclic_witnessed > 0, "n={n}: {stats:?}");
        assert!(stats.forests > 0, "n={n}: {stats:?}");
    }
}

#[test]
fn omega_inequalities() {
    for n in 1..=6 {
        check_omega(n).unwrap();
    }
}

#[test]
fn nearness_orders_values() {
    let w = RationalVector::powers_of_ten(5);
    assert!(is_rapidly_increasing(&w));
    // Samples are increasing, so their near indices must never decrease.
    let near: Vec<usize> = (-200i64..=12000)
        .filter_map(|v| near_index(&w, &int(v)))
        .collect();
    assert!(near.windows(2).all(|p| p[0] <= p[1]));
    assert_eq!(near.first(), Some(&1));
    assert_eq!(near.last(), Some(&5));
}

#[test]
fn figure_pair_paths() {
    let lambda = SetPartition::from_digit_blocks("6|59|2|013478").unwrap();
    let mu = SetPartition::from_digit_blocks("9|8|7|46|3|125").unwrap();
    let w = RationalVector::powers_of_ten(9);
    let sol = solve_tree(&lambda, &mu, &w).unwrap();
    let x6 = lambda.block_index(6).unwrap();
    assert_eq!(sol.x_paths[x6].to_string(), "w6 - w4");
    let y9 = mu.block_index(9).unwrap();
    assert_eq!(sol.y_paths[y9].to_string(), "w9 - w5 + w1");
}
