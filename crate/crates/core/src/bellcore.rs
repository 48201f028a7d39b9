//! Partial Bell polynomials, the invert transform and weighted-composition
//! counts.
//!
//! The number of `w`-color compositions of `n` with exactly `k` parts is
//! `(k!/n!)·B_{n,k}(1!w_1, 2!w_2, …)`. The Bell values come from the
//! recurrence
//!
//! ```text
//! B_{n,k} = (1/k) Σ_j C(n, j) · x_j · B_{n-j,k-1},   B_{0,0} = 1
//! ```
//!
//! which is polynomial in `n`. [`hoggatt_lind_count`] sums over partitions
//! directly and [`invert_transform`] runs the generating-function
//! convolution; both exist so the Bell path can be checked against them.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::arith::{binomial_u, exact_div, factorial, Count};
use crate::error::{Error, Result};

/// Finite prefix `(w_1, …, w_N)` of a color-multiplicity sequence.
///
/// Lookups past `N` are errors; the sequence is never zero-extended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSeq {
    weights: Vec<Count>,
}

impl WeightSeq {
    pub fn new(weights: Vec<Count>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::input("weight sequence must have at least one entry"));
        }
        Ok(WeightSeq { weights })
    }

    pub fn from_u64(weights: &[u64]) -> Result<Self> {
        Self::new(weights.iter().map(|&w| Count::from(w)).collect())
    }

    /// Builds `(f(1), …, f(len))`.
    pub fn from_fn(len: usize, f: impl Fn(usize) -> Count) -> Result<Self> {
        Self::new((1..=len).map(f).collect())
    }

    /// Every part size gets exactly one color.
    pub fn ones(len: usize) -> Result<Self> {
        Self::from_fn(len, |_| Count::one())
    }

    /// Simplicial `d`-polytopic numbers `C(n+d-1, d)`.
    pub fn polytopic(d: usize, len: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::domain("polytopic dimension d must be at least 1"));
        }
        Self::from_fn(len, |n| binomial_u((n + d - 1) as u64, d as u64))
    }

    /// One color for each size accepted by `allowed`, none otherwise.
    pub fn indicator(len: usize, allowed: impl Fn(usize) -> bool) -> Result<Self> {
        Self::from_fn(len, |n| {
            if allowed(n) {
                Count::one()
            } else {
                Count::zero()
            }
        })
    }

    /// `N`, the number of stored entries.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// `w_n` for `1 ≤ n ≤ N`.
    pub fn get(&self, n: usize) -> Result<&Count> {
        if n == 0 || n > self.weights.len() {
            return Err(Error::input(format!(
                "weight index {n} outside the supplied prefix 1..={}",
                self.weights.len()
            )));
        }
        Ok(&self.weights[n - 1])
    }

    /// Entries in order, `w_1` first.
    pub fn as_slice(&self) -> &[Count] {
        &self.weights
    }

    fn require(&self, n: usize) -> Result<()> {
        if n > self.weights.len() {
            return Err(Error::input(format!(
                "need weights up to w_{n}, only {} supplied",
                self.weights.len()
            )));
        }
        Ok(())
    }

    /// `(1!w_1, 2!w_2, …, len!·w_len)`.
    fn bell_arguments(&self, len: usize) -> Vec<Count> {
        self.weights[..len]
            .iter()
            .enumerate()
            .map(|(i, w)| factorial(i + 1) * w)
            .collect()
    }
}

impl fmt::Display for WeightSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.weights.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

/// Parses a comma- or whitespace-separated list such as `1,3,6`.
impl FromStr for WeightSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let weights = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<Count>()
                    .map_err(|_| Error::input(format!("invalid weight {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(weights)
    }
}

/// Rows `B_{·,j}` for `j = 0..=k_max`; row `j` is filled for `n' ≤ top(j)`.
///
/// Callers guarantee `x` covers every index the rows touch, i.e.
/// `x.len() ≥ max_j (top(j) - j + 1)`.
fn bell_rows(k_max: usize, x: &[Count], top: impl Fn(usize) -> usize) -> Result<Vec<Vec<Count>>> {
    let mut rows: Vec<Vec<Count>> = Vec::with_capacity(k_max + 1);
    let mut base = vec![Count::zero(); top(0) + 1];
    base[0] = Count::one();
    rows.push(base);

    for k in 1..=k_max {
        let hi = top(k);
        let prev = &rows[k - 1];
        let mut row = vec![Count::zero(); hi + 1];
        let divisor = Count::from(k);
        for n in k..=hi {
            let mut acc = Count::zero();
            // B_{n-j,k-1} vanishes once n - j < k - 1
            for j in 1..=n + 1 - k {
                let rest = &prev[n - j];
                if rest.is_zero() || x[j - 1].is_zero() {
                    continue;
                }
                acc += binomial_u(n as u64, j as u64) * &x[j - 1] * rest;
            }
            row[n] = exact_div(&acc, &divisor, &format!("B_{{{n},{k}}} recurrence"))?;
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Partial exponential Bell polynomial `B_{n,k}(x_1, x_2, …)`, where
/// `x[0]` holds `x_1`.
pub fn partial_bell(n: usize, k: usize, x: &[Count]) -> Result<Count> {
    if k == 0 || k > n {
        return Err(Error::domain(format!(
            "partial_bell needs 1 <= k <= n, got n={n}, k={k}"
        )));
    }
    let needed = n - k + 1;
    if x.len() < needed {
        return Err(Error::input(format!(
            "B_{{{n},{k}}} needs x_1..x_{needed}, only {} supplied",
            x.len()
        )));
    }
    let rows = bell_rows(k, x, |j| n - k + j)?;
    Ok(rows[k][n].clone())
}

/// `B_{n,k}` for every `k = 1..=n` at once; element `k-1` holds `B_{n,k}`.
pub fn partial_bell_row(n: usize, x: &[Count]) -> Result<Vec<Count>> {
    if n == 0 {
        return Err(Error::domain("partial_bell_row needs n >= 1"));
    }
    if x.len() < n {
        return Err(Error::input(format!(
            "B_{{{n},·}} needs x_1..x_{n}, only {} supplied",
            x.len()
        )));
    }
    let rows = bell_rows(n, x, |_| n)?;
    Ok(rows
        .into_iter()
        .skip(1)
        .map(|mut r| r.swap_remove(n))
        .collect())
}

fn check_nk(w: &WeightSeq, n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::domain(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    w.require(n)
}

/// Number of `w`-color compositions of `n` with exactly `k` parts,
/// `(k!/n!)·B_{n,k}(1!w_1, 2!w_2, …)`.
pub fn weighted_count_k(w: &WeightSeq, n: usize, k: usize) -> Result<Count> {
    check_nk(w, n, k)?;
    let x = w.bell_arguments(n - k + 1);
    let bell = partial_bell(n, k, &x)?;
    exact_div(&(bell * factorial(k)), &factorial(n), "k!/n! scaling")
}

/// Per-part-count breakdown; element `k-1` is [`weighted_count_k`]`(w, n, k)`.
pub fn weighted_count_by_parts(w: &WeightSeq, n: usize) -> Result<Vec<Count>> {
    if n == 0 {
        return Err(Error::domain("n must be at least 1"));
    }
    w.require(n)?;
    let x = w.bell_arguments(n);
    let n_fact = factorial(n);
    partial_bell_row(n, &x)?
        .into_iter()
        .enumerate()
        .map(|(i, b)| exact_div(&(b * factorial(i + 1)), &n_fact, "k!/n! scaling"))
        .collect()
}

/// Total number of `w`-color compositions of `n`.
pub fn weighted_count(w: &WeightSeq, n: usize) -> Result<Count> {
    Ok(weighted_count_by_parts(w, n)?.into_iter().sum())
}

/// `(W_1, …, W_{n_max})` from `W_n = w_n + Σ_{i<n} w_i·W_{n-i}`, the
/// coefficient form of `1 + W(t) = 1 / (1 - w(t))`.
pub fn invert_transform(w: &WeightSeq, n_max: usize) -> Result<Vec<Count>> {
    w.require(n_max)?;
    let ws = w.as_slice();
    let mut out: Vec<Count> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut acc = ws[n - 1].clone();
        for i in 1..n {
            acc += &ws[i - 1] * &out[n - i - 1];
        }
        out.push(acc);
    }
    Ok(out)
}

/// `c_{n,k}(w)`: sum of `k!/(k_1!⋯k_n!) · w_1^{k_1}⋯w_n^{k_n}` over every
/// partition of `n` into exactly `k` parts, `k_j` being the multiplicity of `j`.
pub fn hoggatt_lind_count(w: &WeightSeq, n: usize, k: usize) -> Result<Count> {
    check_nk(w, n, k)?;
    let mut mult = vec![0usize; n + 1];
    let mut total = Count::zero();
    let k_fact = factorial(k);
    let mut failure = None;
    for_each_partition(n, k, n, &mut mult, &mut |mult| {
        if failure.is_some() {
            return;
        }
        let mut weight = Count::one();
        let mut denom = Count::one();
        for (size, &m) in mult.iter().enumerate().skip(1) {
            if m == 0 {
                continue;
            }
            weight *= num_traits::pow(w.weights[size - 1].clone(), m);
            denom *= factorial(m);
        }
        match exact_div(&k_fact, &denom, "multinomial coefficient") {
            Ok(multinomial) => total += multinomial * weight,
            Err(e) => failure = Some(e),
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(total),
    }
}

/// Visits each partition of `remaining` into exactly `parts` parts of size at
/// most `max_part`, reporting multiplicities indexed by part size.
fn for_each_partition(
    remaining: usize,
    parts: usize,
    max_part: usize,
    mult: &mut [usize],
    visit: &mut dyn FnMut(&[usize]),
) {
    if parts == 0 {
        if remaining == 0 {
            visit(mult);
        }
        return;
    }
    if remaining < parts || remaining > parts * max_part {
        return;
    }
    let largest = max_part.min(remaining - (parts - 1));
    for size in (1..=largest).rev() {
        mult[size] += 1;
        for_each_partition(remaining - size, parts - 1, size, mult, visit);
        mult[size] -= 1;
    }
}
