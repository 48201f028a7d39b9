//! Cross-check harness.
//!
//! Each check pits two or more independent routes against each other
//! (closed forms, Bell recurrences, the invert-transform convolution,
//! partition sums, exhaustive enumeration, and the bijections) over a
//! parameter grid. Grids are walked in increasing order and the first
//! failing tuple is kept, so a reported counterexample is the smallest one
//! in walk order. Failures are collected, never thrown.

use std::collections::HashSet;
use std::fmt;
use std::time::{Duration, Instant};

use itertools::Itertools;
use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::arith::Count;
use crate::bellcore::{
    hoggatt_lind_count, invert_transform, weighted_count, weighted_count_by_parts,
    weighted_count_k, WeightSeq,
};
use crate::closedform::{
    count_family, count_pd, count_pd_by_parts, count_pd_k, FamilyId, FamilyKind,
};
use crate::codec::{
    from_binary, ones_as_parts, rank_word, to_binary, unrank_word, zeros_as_parts, BinaryWord,
    FamilyMap,
};
use crate::compgen::{enum_colored, enum_family, enum_weighted};
use crate::composition::ColoredComposition;
use crate::error::Result;

/// Colored enumeration is checked for `nu` up to this bound.
pub const COLORED_ENUM_NU_MAX: usize = 9;
/// ... and `d` up to this bound.
pub const COLORED_ENUM_D_MAX: usize = 4;
/// Family enumeration is checked for `n` up to this bound.
pub const FAMILY_ENUM_N_MAX: usize = 20;
/// ... and `m` up to this bound.
pub const FAMILY_ENUM_M_MAX: usize = 6;
/// `w`-color enumeration is checked for `n` up to this bound.
pub const WEIGHTED_ENUM_N_MAX: usize = 8;

/// Outcome of one named check over its grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub range: String,
    pub cases: u64,
    pub passed: bool,
    pub counterexample: Option<String>,
}

/// The common value of the four counts at one `(nu, d)` cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommonValue {
    pub nu: usize,
    pub d: usize,
    #[serde(serialize_with = "as_decimal")]
    pub value: Count,
}

fn as_decimal<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn as_secs<S: Serializer>(v: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(v.as_secs_f64())
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct CheckReport {
    pub checks: Vec<CheckOutcome>,
    pub common_values: Vec<CommonValue>,
    #[serde(rename = "elapsed_secs", serialize_with = "as_secs")]
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Common value recorded for `(nu, d)`, if any.
    pub fn common_value(&self, nu: usize, d: usize) -> Option<&Count> {
        self.common_values
            .iter()
            .find(|c| c.nu == nu && c.d == d)
            .map(|c| &c.value)
    }

    /// Appends `other`. Checks keep their names, so merged reports compare
    /// equal regardless of the order they were produced in once sorted.
    pub fn merge(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
        self.common_values.extend(other.common_values);
        self.elapsed += other.elapsed;
    }

    /// Sorts checks by name and common values by `(nu, d)`.
    pub fn normalize(&mut self) {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
        self.common_values.sort_by_key(|c| (c.nu, c.d));
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            write!(
                f,
                "{status} {:<34} {:<28} {:>9} cases",
                c.name, c.range, c.cases
            )?;
            if let Some(cx) = &c.counterexample {
                write!(f, "\n     first counterexample: {cx}")?;
            }
            writeln!(f)?;
        }
        if !self.common_values.is_empty() {
            writeln!(f, "common values (nu, d) -> P_nu(d):")?;
            for cv in &self.common_values {
                writeln!(f, "  ({}, {}) -> {}", cv.nu, cv.d, cv.value)?;
            }
        }
        let failed = self.failures().count();
        if failed == 0 {
            write!(f, "all {} checks passed", self.checks.len())?;
        } else {
            write!(f, "{failed} of {} checks FAILED", self.checks.len())?;
        }
        write!(f, " in {:.3}s", self.elapsed.as_secs_f64())
    }
}

/// Accumulates one named check.
struct Check {
    name: &'static str,
    range: String,
    cases: u64,
    failure: Option<String>,
}

impl Check {
    fn new(name: &'static str, range: String) -> Self {
        Check {
            name,
            range,
            cases: 0,
            failure: None,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }

    /// Records a case whose evaluation may itself fail.
    fn record_with(
        &mut self,
        params: impl Fn() -> String,
        case: impl FnOnce() -> Result<Option<String>>,
    ) {
        match case() {
            Ok(None) => self.record(true, String::new),
            Ok(Some(msg)) => self.record(false, || format!("{}: {msg}", params())),
            Err(e) => self.record(false, || format!("{}: {e}", params())),
        }
    }

    fn finish(self) -> CheckOutcome {
        CheckOutcome {
            name: self.name.to_string(),
            range: self.range,
            cases: self.cases,
            passed: self.failure.is_none(),
            counterexample: self.failure,
        }
    }
}

fn mismatch<T: PartialEq + fmt::Display>(pairs: &[(&str, &T)]) -> Option<String> {
    let first = pairs[0].1;
    if pairs.iter().all(|(_, v)| *v == first) {
        None
    } else {
        Some(pairs.iter().map(|(n, v)| format!("{n}={v}")).join(", "))
    }
}

fn timed(f: impl FnOnce(&mut CheckReport)) -> CheckReport {
    let start = Instant::now();
    let mut report = CheckReport::default();
    f(&mut report);
    report.elapsed = start.elapsed();
    report
}

/// `P_nu(d)` equals the sizes of the three restricted families at
/// `(d+1)nu - 1`, `(d+1)nu` and `(d+1)nu + d`, all by closed forms.
pub fn check_four_way(nu_max: usize, d_max: usize) -> CheckReport {
    timed(|report| {
        let mut check = Check::new("four_way_identity", format!("nu<={nu_max}, d<={d_max}"));
        for nu in 1..=nu_max {
            for d in 1..=d_max {
                let mut common = None;
                check.record_with(
                    || format!("nu={nu}, d={d}"),
                    || {
                        let pd = count_pd(nu, d)?;
                        let ones = count_family(FamilyId::ones_and(d + 1)?, (d + 1) * nu - 1)?;
                        let modm = count_family(FamilyId::one_mod(d + 1)?, (d + 1) * nu)?;
                        let ge = count_family(FamilyId::at_least(d + 1)?, (d + 1) * nu + d)?;
                        let bad =
                            mismatch(&[("P", &pd), ("ones", &ones), ("mod", &modm), ("ge", &ge)]);
                        if bad.is_none() {
                            common = Some(pd);
                        }
                        Ok(bad)
                    },
                );
                if let Some(value) = common {
                    report.common_values.push(CommonValue { nu, d, value });
                }
            }
        }
        report.checks.push(check.finish());
    })
}

/// `(k!/nu!)·B_{nu,k}(1!p_1(d), 2!p_2(d), …) = C(nu+dk-1, nu-k)`, the Bell
/// side by recurrence; plus the invert transform of `p(d)` against `P_nu(d)`.
pub fn check_bell_identity(nu_max: usize, d_max: usize) -> CheckReport {
    timed(|report| {
        let mut bell = Check::new(
            "bell_vs_closed_form",
            format!("nu<={nu_max}, k<=nu, d<={d_max}"),
        );
        let mut invert = Check::new(
            "invert_transform_vs_closed_form",
            format!("nu<={nu_max}, d<={d_max}"),
        );
        for d in 1..=d_max {
            let w = match WeightSeq::polytopic(d, nu_max) {
                Ok(w) => w,
                Err(e) => {
                    bell.record(false, || format!("d={d}: {e}"));
                    continue;
                }
            };
            for nu in 1..=nu_max {
                for k in 1..=nu {
                    bell.record_with(
                        || format!("nu={nu}, k={k}, d={d}"),
                        || {
                            let closed = count_pd_k(nu, d, k)?;
                            let via_bell = weighted_count_k(&w, nu, k)?;
                            Ok(mismatch(&[("closed", &closed), ("bell", &via_bell)]))
                        },
                    );
                }
            }
            match invert_transform(&w, nu_max) {
                Ok(seq) => {
                    for (i, v) in seq.iter().enumerate() {
                        let nu = i + 1;
                        invert.record_with(
                            || format!("nu={nu}, d={d}"),
                            || Ok(mismatch(&[("closed", &count_pd(nu, d)?), ("invert", v)])),
                        );
                    }
                }
                Err(e) => invert.record(false, || format!("d={d}: {e}")),
            }
        }
        report.checks.push(bell.finish());
        report.checks.push(invert.finish());
    })
}

/// Closed-form family sizes against exhaustive enumeration.
pub fn check_family_enumeration(n_max: usize, m_max: usize) -> CheckReport {
    timed(|report| {
        let mut check = Check::new(
            "family_enumeration_vs_closed_form",
            format!("n<={n_max}, 2<=m<={m_max}"),
        );
        for kind in FamilyKind::ALL {
            for m in 2..=m_max {
                for n in 1..=n_max {
                    check.record_with(
                        || format!("family={kind}, m={m}, n={n}"),
                        || {
                            let f = FamilyId::new(kind, m)?;
                            let listed = Count::from(enum_family(f, n)?.count());
                            Ok(mismatch(&[
                                ("closed", &count_family(f, n)?),
                                ("listed", &listed),
                            ]))
                        },
                    );
                }
            }
        }
        report.checks.push(check.finish());
    })
}

/// `|A_k(nu)|` by enumeration against `C(nu+dk-1, nu-k)`, and no duplicates.
pub fn check_colored_enumeration(nu_max: usize, d_max: usize) -> CheckReport {
    timed(|report| {
        let mut check = Check::new(
            "colored_enumeration_vs_closed_form",
            format!("nu<={nu_max}, k<=nu, d<={d_max}"),
        );
        for nu in 1..=nu_max {
            for d in 1..=d_max {
                for k in 1..=nu {
                    check.record_with(
                        || format!("nu={nu}, d={d}, k={k}"),
                        || {
                            let mut seen = HashSet::new();
                            for a in enum_colored(nu, d, Some(k))? {
                                if a.nu() != nu || a.k() != k || !seen.insert(a.clone()) {
                                    return Ok(Some(format!("bad or repeated element {a}")));
                                }
                            }
                            let listed = Count::from(seen.len());
                            Ok(mismatch(&[
                                ("closed", &count_pd_k(nu, d, k)?),
                                ("listed", &listed),
                            ]))
                        },
                    );
                }
            }
        }
        report.checks.push(check.finish());
    })
}

/// The weight suite used for the general colored-composition checks:
/// all-ones, `(1,1,0,…)`, and `p(1)`, `p(2)`, `p(3)`.
pub fn weight_suite(len: usize) -> Result<Vec<(String, WeightSeq)>> {
    Ok(vec![
        ("ones".to_string(), WeightSeq::ones(len)?),
        (
            "one_two".to_string(),
            WeightSeq::indicator(len, |n| n <= 2)?,
        ),
        ("p(1)".to_string(), WeightSeq::polytopic(1, len)?),
        ("p(2)".to_string(), WeightSeq::polytopic(2, len)?),
        ("p(3)".to_string(), WeightSeq::polytopic(3, len)?),
    ])
}

/// Bell-recurrence counts against the partition sum and the invert
/// transform over [`weight_suite`]; enumeration joins in for small `n`.
pub fn check_weighted_oracles(n_max: usize) -> CheckReport {
    timed(|report| {
        let mut by_parts = Check::new(
            "bell_vs_partition_sum",
            format!("n<={n_max}, k<=n, 5 weight sequences"),
        );
        let mut totals = Check::new(
            "bell_vs_invert_transform",
            format!("n<={n_max}, 5 weight sequences"),
        );
        let enum_max = n_max.min(WEIGHTED_ENUM_N_MAX);
        let mut listed = Check::new(
            "bell_vs_weighted_enumeration",
            format!("n<={enum_max}, 5 weight sequences"),
        );
        let suite = match weight_suite(n_max.max(1)) {
            Ok(s) => s,
            Err(e) => {
                totals.record(false, || e.to_string());
                report.checks.push(totals.finish());
                return;
            }
        };
        for (name, w) in &suite {
            let inverted = invert_transform(w, n_max);
            for n in 1..=n_max {
                for k in 1..=n {
                    by_parts.record_with(
                        || format!("w={name}, n={n}, k={k}"),
                        || {
                            let bell = weighted_count_k(w, n, k)?;
                            let sum = hoggatt_lind_count(w, n, k)?;
                            Ok(mismatch(&[("bell", &bell), ("partition_sum", &sum)]))
                        },
                    );
                }
                totals.record_with(
                    || format!("w={name}, n={n}"),
                    || {
                        let bell = weighted_count(w, n)?;
                        let inv = &inverted.as_ref().map_err(Clone::clone)?[n - 1];
                        Ok(mismatch(&[("bell", &bell), ("invert", inv)]))
                    },
                );
                if n <= enum_max {
                    listed.record_with(
                        || format!("w={name}, n={n}"),
                        || {
                            let bell = weighted_count(w, n)?;
                            let items: Vec<_> = enum_weighted(w, n)?.collect();
                            let distinct = items.iter().collect::<HashSet<_>>().len();
                            if distinct != items.len() {
                                return Ok(Some("repeated element".into()));
                            }
                            Ok(mismatch(&[
                                ("bell", &bell),
                                ("listed", &Count::from(items.len())),
                            ]))
                        },
                    );
                }
            }
        }
        report.checks.push(by_parts.finish());
        report.checks.push(totals.finish());
        report.checks.push(listed.finish());
    })
}

/// `count_pd(nu, 1) = F_{2nu}`, Fibonacci numbers by their own recurrence.
pub fn check_even_fibonacci(nu_max: usize) -> CheckReport {
    timed(|report| {
        let mut check = Check::new("even_fibonacci_at_d1", format!("nu<={nu_max}"));
        let mut fib = vec![Count::from(0u32), Count::from(1u32)];
        while fib.len() <= 2 * nu_max {
            let next = &fib[fib.len() - 1] + &fib[fib.len() - 2];
            fib.push(next);
        }
        for nu in 1..=nu_max {
            check.record_with(
                || format!("nu={nu}"),
                || {
                    Ok(mismatch(&[
                        ("P", &count_pd(nu, 1)?),
                        ("F_2nu", &fib[2 * nu]),
                    ]))
                },
            );
        }
        report.checks.push(check.finish());
    })
}

/// Rank codec: for every `(n, d)` all ranks give distinct words with `d`
/// ones, `rank_word` inverts `unrank_word`, and word values increase with
/// the rank.
pub fn check_rank_codec(n_max: usize, d_max: usize) -> CheckReport {
    timed(|report| {
        let mut bij = Check::new(
            "rank_codec_bijective",
            format!("n<={n_max}, d<=min(n,{d_max})"),
        );
        let mut order = Check::new("rank_codec_order", format!("n<={n_max}, d<=min(n,{d_max})"));
        for n in 1..=n_max {
            for d in 1..=d_max.min(n) {
                let params = || format!("n={n}, d={d}");
                let total = match crate::arith::binomial_u64(n as u64, d as u64) {
                    Some(t) => t,
                    None => {
                        bij.record(false, || format!("{}: C(n,d) too large", params()));
                        continue;
                    }
                };
                let mut seen = HashSet::with_capacity(total as usize);
                let mut previous: Option<BinaryWord> = None;
                let mut ordered = true;
                bij.record_with(params, || {
                    for m in 1..=total {
                        let w = unrank_word(m, n, d)?;
                        if w.len() != n || w.count_ones() != d {
                            return Ok(Some(format!("rank {m} gave {w}")));
                        }
                        let back = rank_word(&w, d)?;
                        if back != m {
                            return Ok(Some(format!("rank {m} -> {w} -> {back}")));
                        }
                        if let Some(p) = &previous {
                            ordered &= p.value() < w.value();
                        }
                        previous = Some(w.clone());
                        if !seen.insert(w) {
                            return Ok(Some(format!("rank {m} repeats a word")));
                        }
                    }
                    Ok(None)
                });
                order.record(ordered, || format!("{}: values not increasing", params()));
            }
        }
        report.checks.push(bij.finish());
        report.checks.push(order.finish());
    })
}

/// `T` maps `A_k(nu)` onto the words of length `nu+dk-1` with `(d+1)k-1`
/// ones, and `from_binary` inverts it.
pub fn check_binary_map(nu_max: usize, d_max: usize) -> CheckReport {
    timed(|report| {
        let mut check = Check::new(
            "binary_map_bijective",
            format!("nu<={nu_max}, k<=nu, d<={d_max}"),
        );
        for nu in 1..=nu_max {
            for d in 1..=d_max {
                for k in 1..=nu {
                    check.record_with(
                        || format!("nu={nu}, d={d}, k={k}"),
                        || {
                            let len = nu + d * k - 1;
                            let ones = (d + 1) * k - 1;
                            let mut image = HashSet::new();
                            for a in enum_colored(nu, d, Some(k))? {
                                let beta = to_binary(&a)?;
                                let back = from_binary(&beta, d)?;
                                if back != a {
                                    return Ok(Some(format!("{a} -> {beta} -> {back}")));
                                }
                                image.insert(beta);
                            }
                            // target set built from position subsets, independent of the codec
                            let target: HashSet<BinaryWord> = (0..len)
                                .combinations(ones)
                                .map(|labels| BinaryWord::with_ones_at(len, labels))
                                .collect();
                            if image != target {
                                return Ok(Some(format!(
                                    "image has {} words, target has {}",
                                    image.len(),
                                    target.len()
                                )));
                            }
                            Ok(None)
                        },
                    );
                }
            }
        }
        report.checks.push(check.finish());
    })
}

/// Each family map sends all of `A_{p(d)}(nu)` onto its target family
/// (compared with exhaustive enumeration), and both compositions of map and
/// inverse are identities.
pub fn check_family_maps(nu_max: usize, d_max: usize) -> CheckReport {
    timed(|report| {
        for map in FamilyMap::ALL {
            let name = match map {
                FamilyMap::Ones => "map_ones_image_and_inverse",
                FamilyMap::Mod => "map_mod_image_and_inverse",
                FamilyMap::Ge => "map_ge_image_and_inverse",
            };
            let mut check = Check::new(name, format!("nu<={nu_max}, d<={d_max}"));
            for nu in 1..=nu_max {
                for d in 1..=d_max {
                    check.record_with(
                        || format!("nu={nu}, d={d}"),
                        || {
                            let mut image = HashSet::new();
                            for a in enum_colored(nu, d, None)? {
                                let c = map.apply(&a)?;
                                let back = map.invert(&c, d)?;
                                if back != a {
                                    return Ok(Some(format!("{a} -> {c} -> {back}")));
                                }
                                if !image.insert(c.clone()) {
                                    return Ok(Some(format!("{c} hit twice")));
                                }
                            }
                            let family = map.family(d);
                            let total = map.target_total(nu, d);
                            let mut target = 0usize;
                            for c in enum_family(family, total)? {
                                target += 1;
                                if !image.contains(&c) {
                                    return Ok(Some(format!("{c} in {family} has no preimage")));
                                }
                                let a = map.invert(&c, d)?;
                                let again = map.apply(&a)?;
                                if again != c {
                                    return Ok(Some(format!("{c} -> {a} -> {again}")));
                                }
                            }
                            if target != image.len() {
                                return Ok(Some(format!(
                                    "image {} vs family {target}",
                                    image.len()
                                )));
                            }
                            Ok(None)
                        },
                    );
                }
            }
            report.checks.push(check.finish());
        }
    })
}

/// Every counting identity over the grid. Enumeration-backed checks are
/// clipped to the `*_ENUM_*` bounds; their range strings say so.
pub fn check_counts(nu_max: usize, d_max: usize) -> CheckReport {
    let start = Instant::now();
    let mut report = check_four_way(nu_max, d_max);
    report.merge(check_bell_identity(nu_max, d_max));
    report.merge(check_even_fibonacci(nu_max));
    report.merge(check_weighted_oracles(nu_max));
    report.merge(check_colored_enumeration(
        nu_max.min(COLORED_ENUM_NU_MAX),
        d_max.min(COLORED_ENUM_D_MAX),
    ));
    report.merge(check_family_enumeration(
        ((d_max + 1) * nu_max + d_max).min(FAMILY_ENUM_N_MAX),
        (d_max + 1).min(FAMILY_ENUM_M_MAX),
    ));
    report.elapsed = start.elapsed();
    report
}

/// Every bijection over the grid: the rank codec on all segment lengths
/// that occur, `T`, and the three family maps.
pub fn check_bijections(nu_max: usize, d_max: usize) -> CheckReport {
    let start = Instant::now();
    let mut report = check_rank_codec(nu_max + d_max - 1, d_max);
    report.merge(check_binary_map(nu_max, d_max));
    report.merge(check_family_maps(nu_max, d_max));
    report.elapsed = start.elapsed();
    report
}

/// One transcribed row of the `nu = 3, d = 2` correspondence tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GoldenRow {
    pub colored: &'static str,
    pub word: &'static str,
    pub ones_image: &'static str,
    pub zeros_as_parts: &'static str,
    pub mod_image: &'static str,
    pub ones_as_parts: &'static str,
    pub ge_image: &'static str,
}

const fn row(
    colored: &'static str,
    word: &'static str,
    ones_image: &'static str,
    zeros_as_parts: &'static str,
    mod_image: &'static str,
    ones_as_parts: &'static str,
    ge_image: &'static str,
) -> GoldenRow {
    GoldenRow {
        colored,
        word,
        ones_image,
        zeros_as_parts,
        mod_image,
        ones_as_parts,
        ge_image,
    }
}

/// The thirteen triangular-colored compositions of 3, their words, and
/// their images in `C_{1,3}(8)`, `C_{≡1(3)}(9)` and `C_{≥3}(11)`.
pub const GOLDEN_NU3_D2: [GoldenRow; 13] = [
    row(
        "3^1",
        "0011",
        "3,3,1,1",
        "00000001010",
        "7,1,1",
        "1110111011111",
        "3,3,5",
    ),
    row(
        "3^2",
        "0101",
        "3,1,3,1",
        "00001000010",
        "4,4,1",
        "1110111101111",
        "3,4,4",
    ),
    row(
        "3^3",
        "0110",
        "3,1,1,3",
        "00001010000",
        "4,1,4",
        "1110111110111",
        "3,5,3",
    ),
    row(
        "3^4",
        "1001",
        "1,3,3,1",
        "01000000010",
        "1,7,1",
        "1111011101111",
        "4,3,4",
    ),
    row(
        "3^5",
        "1010",
        "1,3,1,3",
        "01000010000",
        "1,4,4",
        "1111011110111",
        "4,4,3",
    ),
    // the published ones-table repeats (3,3,1,1) here; 1100 reads as (1,1,3,3)
    row(
        "3^6",
        "1100",
        "1,1,3,3",
        "01010000000",
        "1,1,7",
        "1111101110111",
        "5,3,3",
    ),
    row(
        "2^1,1^1",
        "011111",
        "3,1,1,1,1,1",
        "00001010101010",
        "4,1,1,1,1,1",
        "111011111111",
        "3,8",
    ),
    row(
        "2^2,1^1",
        "101111",
        "1,3,1,1,1,1",
        "01000010101010",
        "1,4,1,1,1,1",
        "111101111111",
        "4,7",
    ),
    row(
        "2^3,1^1",
        "110111",
        "1,1,3,1,1,1",
        "01010000101010",
        "1,1,4,1,1,1",
        "111110111111",
        "5,6",
    ),
    row(
        "1^1,2^1",
        "111011",
        "1,1,1,3,1,1",
        "01010100001010",
        "1,1,1,4,1,1",
        "111111011111",
        "6,5",
    ),
    row(
        "1^1,2^2",
        "111101",
        "1,1,1,1,3,1",
        "01010101000010",
        "1,1,1,1,4,1",
        "111111101111",
        "7,4",
    ),
    row(
        "1^1,2^3",
        "111110",
        "1,1,1,1,1,3",
        "01010101010000",
        "1,1,1,1,1,4",
        "111111110111",
        "8,3",
    ),
    row(
        "1^1,1^1,1^1",
        "11111111",
        "1,1,1,1,1,1,1,1",
        "01010101010101010",
        "1,1,1,1,1,1,1,1,1",
        "11111111111",
        "11",
    ),
];

/// Triangular-colored compositions of 1 and 2 with their words.
pub const GOLDEN_SMALL_D2: [(&str, &str); 5] = [
    ("1^1", "11"),
    ("2^1", "011"),
    ("2^2", "101"),
    ("2^3", "110"),
    ("1^1,1^1", "11111"),
];

/// Regenerates the `nu = 3, d = 2` tables and compares every column with
/// the transcribed rows, character for character.
pub fn golden_tables() -> CheckReport {
    timed(|report| {
        let d = 2;
        let mut words = Check::new("golden_binary_words", "nu<=3, d=2".into());
        let mut ones = Check::new("golden_ones_table", "C_{1,3}(8)".into());
        let mut modm = Check::new("golden_mod_table", "C_{=1 mod 3}(9)".into());
        let mut ge = Check::new("golden_ge_table", "C_{>=3}(11)".into());

        for (colored, word) in GOLDEN_SMALL_D2 {
            words.record_with(
                || format!("row {colored}"),
                || {
                    let a = ColoredComposition::parse(colored, d)?;
                    let got = to_binary(&a)?.to_string();
                    let back = from_binary(&word.parse()?, d)?.to_string();
                    Ok(
                        mismatch(&[("table", &word.to_string()), ("generated", &got)]).or_else(
                            || mismatch(&[("table", &colored.to_string()), ("decoded", &back)]),
                        ),
                    )
                },
            );
        }

        let generated: Vec<ColoredComposition> = match enum_colored(3, d, None) {
            Ok(it) => it.collect(),
            Err(e) => {
                words.record(false, || e.to_string());
                Vec::new()
            }
        };
        words.record(generated.len() == GOLDEN_NU3_D2.len(), || {
            format!(
                "generated {} rows, table has {}",
                generated.len(),
                GOLDEN_NU3_D2.len()
            )
        });

        for (i, golden) in GOLDEN_NU3_D2.iter().enumerate() {
            let params = || format!("row {} ({})", i + 1, golden.colored);
            let Some(a) = generated.get(i) else {
                break;
            };
            words.record_with(params, || {
                let beta = to_binary(a)?;
                Ok(mismatch(&[
                    ("table", &golden.colored.to_string()),
                    ("generated", &a.to_string()),
                ])
                .or_else(|| {
                    mismatch(&[
                        ("table", &golden.word.to_string()),
                        ("generated", &beta.to_string()),
                    ])
                }))
            });
            ones.record_with(params, || {
                let img = FamilyMap::Ones.apply(a)?.to_string();
                Ok(mismatch(&[
                    ("table", &golden.ones_image.to_string()),
                    ("generated", &img),
                ]))
            });
            modm.record_with(params, || {
                let beta = to_binary(a)?;
                let runs = zeros_as_parts(&beta, d);
                let img = FamilyMap::Mod.apply(a)?.to_string();
                Ok(mismatch(&[
                    ("table", &golden.zeros_as_parts.to_string()),
                    ("generated", &runs),
                ])
                .or_else(|| {
                    mismatch(&[
                        ("table", &golden.mod_image.to_string()),
                        ("generated", &img),
                    ])
                }))
            });
            ge.record_with(params, || {
                let beta = to_binary(a)?;
                let runs = ones_as_parts(&beta, d);
                let img = FamilyMap::Ge.apply(a)?.to_string();
                Ok(mismatch(&[
                    ("table", &golden.ones_as_parts.to_string()),
                    ("generated", &runs),
                ])
                .or_else(|| {
                    mismatch(&[("table", &golden.ge_image.to_string()), ("generated", &img)])
                }))
            });
        }

        for c in [words, ones, modm, ge] {
            report.checks.push(c.finish());
        }
    })
}

/// Golden tables, then [`check_counts`], then [`check_bijections`].
pub fn verify_all(nu_max: usize, d_max: usize) -> CheckReport {
    let start = Instant::now();
    let mut report = golden_tables();
    report.merge(check_counts(nu_max, d_max));
    report.merge(check_bijections(nu_max, d_max));
    report.elapsed = start.elapsed();
    report
}

/// Per-`k` counts of `p(d)`-color compositions by both routes, used by
/// callers that want to display the breakdown next to the check.
pub fn by_parts_both_ways(nu: usize, d: usize) -> Result<(Vec<Count>, Vec<Count>)> {
    let closed = count_pd_by_parts(nu, d)?;
    let bell = weighted_count_by_parts(&WeightSeq::polytopic(d, nu)?, nu)?;
    Ok((closed, bell))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_tables_reproduce() {
        let report = golden_tables();
        assert!(report.passed(), "{report}");
        assert_eq!(report.check("golden_ones_table").unwrap().cases, 13);
        assert_eq!(
            report.check("golden_binary_words").unwrap().cases,
            5 + 1 + 13
        );
    }

    #[test]
    fn counts_small_grid() {
        let report = check_counts(3, 2);
        assert!(report.passed(), "{report}");
        assert_eq!(report.common_value(3, 2), Some(&Count::from(13u32)));
        let r = check_counts(1, 1);
        assert!(r.passed(), "{r}");
        assert_eq!(r.common_value(1, 1), Some(&Count::from(1u32)));
    }

    #[test]
    fn bijections_small_grid() {
        assert!(check_bijections(3, 2).passed());
        assert!(check_bijections(1, 1).passed());
    }

    #[test]
    fn failing_case_keeps_first_counterexample() {
        let mut c = Check::new("demo", "x".into());
        c.record(true, String::new);
        c.record(false, || "first".into());
        c.record(false, || "second".into());
        let out = c.finish();
        assert!(!out.passed);
        assert_eq!(out.cases, 3);
        assert_eq!(out.counterexample.as_deref(), Some("first"));
    }

    #[test]
    fn report_formats() {
        let report = check_four_way(2, 1);
        let text = report.to_string();
        assert!(text.contains("PASS four_way_identity"));
        let json: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(json["checks"][0]["name"], "four_way_identity");
        assert_eq!(json["common_values"][1]["value"], "3");
        assert!(json["elapsed_secs"].is_number());
    }

    #[test]
    fn merge_is_order_independent_after_normalize() {
        let mut a = check_four_way(2, 2);
        a.merge(check_even_fibonacci(4));
        let mut b = check_even_fibonacci(4);
        b.merge(check_four_way(2, 2));
        a.normalize();
        b.normalize();
        assert_eq!(a.checks, b.checks);
        assert_eq!(a.common_values, b.common_values);
    }

    #[test]
    fn both_routes_agree_per_part_count() {
        let (closed, bell) = by_parts_both_ways(3, 2).unwrap();
        assert_eq!(closed, bell);
        assert_eq!(closed, [6u32, 6, 1].map(Count::from).to_vec());
    }
}
