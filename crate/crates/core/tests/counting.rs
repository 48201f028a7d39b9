mod oracle;

use std::collections::HashSet;

use polycomp::bellcore::{
    hoggatt_lind_count, invert_transform, partial_bell, weighted_count, weighted_count_k,
};
use polycomp::closedform::{count_family, count_pd, count_pd_k};
use polycomp::compgen::{enum_colored, enum_family, enum_weighted};
use polycomp::{Count, FamilyId, FamilyKind, WeightSeq};

fn c(v: u128) -> Count {
    Count::from(v)
}

fn one_two(len: usize) -> (WeightSeq, Vec<u128>) {
    let raw: Vec<u128> = (1..=len).map(|n| u128::from(n <= 2)).collect();
    let w = WeightSeq::new(raw.iter().map(|&x| c(x)).collect()).unwrap();
    (w, raw)
}

#[test]
fn one_two_compositions_match_brute_force() {
    let (w, raw) = one_two(8);
    // five into three parts from {1,2}
    let brute = oracle::brute_weighted(&raw, 5, Some(3));
    assert_eq!(brute, 3);
    assert_eq!(weighted_count_k(&w, 5, 3).unwrap(), c(brute));
    // four into two parts: (2,2) alone
    let brute = oracle::brute_weighted(&raw, 4, Some(2));
    assert_eq!(brute, 1);
    assert_eq!(hoggatt_lind_count(&w, 4, 2).unwrap(), c(brute));
    // Fibonacci
    let brute: Vec<Count> = (1..=6)
        .map(|n| c(oracle::brute_weighted(&raw, n, None)))
        .collect();
    assert_eq!(brute, [1u128, 2, 3, 5, 8, 13].map(c).to_vec());
    assert_eq!(invert_transform(&w, 6).unwrap(), brute);
    assert_eq!(enum_weighted(&w, 5).unwrap().count(), 8);
}

#[test]
fn all_ones_is_power_of_two() {
    let w = WeightSeq::ones(6).unwrap();
    let brute = oracle::brute_weighted(&[1; 6], 6, None);
    assert_eq!(brute, 32);
    assert_eq!(weighted_count(&w, 6).unwrap(), c(brute));
}

#[test]
fn triangular_prefix_small_values() {
    let raw = oracle::polytopic(2, 3);
    let w = WeightSeq::polytopic(2, 3).unwrap();
    let brute: Vec<Count> = (1..=3)
        .map(|n| c(oracle::brute_weighted(&raw, n, None)))
        .collect();
    assert_eq!(brute, [1u128, 4, 13].map(c).to_vec());
    assert_eq!(invert_transform(&w, 3).unwrap(), brute);
}

#[test]
fn bell_theorem_matches_brute_force_for_random_weights() {
    let raw: Vec<u128> = vec![2, 0, 5, 1, 3, 0, 7, 4, 1, 2];
    let w = WeightSeq::new(raw.iter().map(|&x| c(x)).collect()).unwrap();
    for n in 1..=10 {
        for k in 1..=n {
            let brute = oracle::brute_weighted(&raw, n, Some(k));
            assert_eq!(weighted_count_k(&w, n, k).unwrap(), c(brute), "n={n} k={k}");
            assert_eq!(
                hoggatt_lind_count(&w, n, k).unwrap(),
                c(brute),
                "n={n} k={k}"
            );
        }
        assert_eq!(
            invert_transform(&w, n).unwrap()[n - 1],
            c(oracle::brute_weighted(&raw, n, None))
        );
    }
}

#[test]
fn n_color_compositions_of_three() {
    let brute = oracle::brute_weighted(&oracle::polytopic(1, 3), 3, None);
    assert_eq!(brute, 8);
    assert_eq!(count_pd(3, 1).unwrap(), c(brute));
}

#[test]
fn closed_form_per_part_matches_brute_force() {
    for d in 1..=4 {
        let raw = oracle::polytopic(d, 12);
        for nu in 1..=12 {
            for k in 1..=nu {
                let brute = oracle::brute_weighted(&raw, nu, Some(k));
                assert_eq!(
                    count_pd_k(nu, d, k).unwrap(),
                    c(brute),
                    "nu={nu} d={d} k={k}"
                );
            }
        }
    }
}

#[test]
fn families_match_brute_force() {
    for m in 2..=6 {
        for n in 1..=18 {
            for kind in FamilyKind::ALL {
                let f = FamilyId::new(kind, m).unwrap();
                let brute = oracle::brute_family(n, |p| f.allows(p));
                assert_eq!(
                    count_family(f, n).unwrap(),
                    c(brute.len() as u128),
                    "{f} n={n}"
                );
                let listed: Vec<Vec<usize>> =
                    enum_family(f, n).unwrap().map(|x| x.into_parts()).collect();
                assert_eq!(listed, brute, "{f} n={n}");
            }
        }
    }
}

#[test]
fn membership_is_spelled_out() {
    // parts allowed for m = 3, spelled independently of FamilyId::allows
    let ones: Vec<_> = oracle::brute_family(4, |p| p == 1 || p == 3);
    assert_eq!(ones, vec![vec![1, 1, 1, 1], vec![1, 3], vec![3, 1]]);
    let listed: Vec<_> = enum_family(FamilyId::ones_and(3).unwrap(), 4)
        .unwrap()
        .map(|x| x.into_parts())
        .collect();
    assert_eq!(listed, ones);
    let odd = oracle::brute_family(9, |p| p % 3 == 1);
    assert_eq!(odd.len(), 13);
    let big = oracle::brute_family(11, |p| p >= 3);
    assert_eq!(big.len(), 13);
}

#[test]
fn colored_stream_length_and_distinctness() {
    for nu in 1..=7 {
        for d in 1..=4 {
            let items: Vec<_> = enum_colored(nu, d, None).unwrap().collect();
            let brute = oracle::brute_weighted(&oracle::polytopic(d, nu), nu, None);
            assert_eq!(items.len() as u128, brute, "nu={nu} d={d}");
            assert_eq!(items.iter().collect::<HashSet<_>>().len(), items.len());
            for a in &items {
                assert_eq!(a.nu(), nu);
                for p in a.parts() {
                    assert!(
                        p.color >= 1 && u128::from(p.color) <= oracle::pascal(p.size + d - 1, d)
                    );
                }
            }
        }
    }
    assert_eq!(
        Count::from(enum_colored(4, 3, None).unwrap().count()),
        count_pd(4, 3).unwrap()
    );
}

#[test]
fn lah_numbers_from_the_recurrence() {
    // B_{n,k}(1!, 2!, …) = n!/k! · C(n-1, k-1); independent u128 arithmetic
    let fact: Vec<u128> = (0..=20u128)
        .scan(1u128, |acc, i| {
            if i > 0 {
                *acc *= i;
            }
            Some(*acc)
        })
        .collect();
    let x: Vec<Count> = (1..=20).map(|j| c(fact[j])).collect();
    for n in 1..=20 {
        for k in 1..=n {
            let lah = fact[n] / fact[k] * oracle::pascal(n - 1, k - 1);
            assert_eq!(partial_bell(n, k, &x).unwrap(), c(lah));
        }
    }
}

#[test]
fn even_fibonacci_specialization() {
    let fib = oracle::fibonacci(40);
    for nu in 1..=20 {
        assert_eq!(count_pd(nu, 1).unwrap(), c(fib[2 * nu]));
    }
}

#[test]
fn large_values_stay_exact() {
    // P_200(3) has well over 64 bits; compare the two independent routes
    let closed = count_pd(200, 3).unwrap();
    let w = WeightSeq::polytopic(3, 200).unwrap();
    assert_eq!(invert_transform(&w, 200).unwrap()[199], closed);
    assert!(closed.bits() > 200);
}

#[test]
fn shared_caches_under_concurrent_use() {
    let expected: Vec<Count> = (1..=40).map(|nu| count_pd(nu, 3).unwrap()).collect();
    let handles: Vec<_> = (0..8)
        .map(|t| {
            std::thread::spawn(move || {
                let w = WeightSeq::polytopic(3, 40).unwrap();
                // different threads walk the tables in different orders
                let order: Vec<usize> = if t % 2 == 0 {
                    (1..=40).collect()
                } else {
                    (1..=40).rev().collect()
                };
                order
                    .into_iter()
                    .map(|nu| {
                        (
                            nu,
                            weighted_count(&w, nu).unwrap(),
                            count_pd(nu, 3).unwrap(),
                        )
                    })
                    .collect::<Vec<_>>()
            })
        })
        .collect();
    for h in handles {
        for (nu, bell, closed) in h.join().unwrap() {
            assert_eq!(bell, expected[nu - 1]);
            assert_eq!(closed, expected[nu - 1]);
        }
    }
}
