//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library's counting or enumeration code.

#![allow(dead_code)]

/// Every composition of `n`, via the `2^(n-1)` cut masks.
pub fn all_compositions(n: usize) -> Vec<Vec<usize>> {
    assert!((1..=24).contains(&n));
    let mut out = Vec::with_capacity(1 << (n - 1));
    for mask in 0u32..(1 << (n - 1)) {
        let mut parts = Vec::new();
        let mut run = 1;
        for i in 0..n - 1 {
            if mask & (1 << i) != 0 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        out.push(parts);
    }
    out
}

/// `C(n, k)` by Pascal's triangle in `u128`.
pub fn pascal(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut row = vec![1u128];
    for i in 1..=n {
        let mut next = vec![1u128; i + 1];
        for j in 1..i {
            next[j] = row[j - 1] + row[j];
        }
        row = next;
    }
    row[k]
}

/// Number of `w`-color compositions of `n` (with `k` parts, if given),
/// summing `Π w_{part}` over all compositions. `w[0]` is `w_1`.
pub fn brute_weighted(w: &[u128], n: usize, k: Option<usize>) -> u128 {
    all_compositions(n)
        .into_iter()
        .filter(|c| k.is_none_or(|k| c.len() == k))
        .map(|c| c.iter().map(|&p| w[p - 1]).product::<u128>())
        .sum()
}

/// Simplicial polytopic weights `C(n+d-1, d)` for `n = 1..=len`.
pub fn polytopic(d: usize, len: usize) -> Vec<u128> {
    (1..=len).map(|n| pascal(n + d - 1, d)).collect()
}

/// Compositions of `n` all of whose parts satisfy `allowed`, sorted.
pub fn brute_family(n: usize, allowed: impl Fn(usize) -> bool) -> Vec<Vec<usize>> {
    let mut v: Vec<_> = all_compositions(n)
        .into_iter()
        .filter(|c| c.iter().all(|&p| allowed(p)))
        .collect();
    v.sort();
    v
}

/// Fibonacci numbers `F_0 = 0, F_1 = 1, …` up to index `max`.
pub fn fibonacci(max: usize) -> Vec<u128> {
    let mut f = vec![0u128, 1];
    while f.len() <= max {
        let n = f.len();
        f.push(f[n - 1] + f[n - 2]);
    }
    f
}
