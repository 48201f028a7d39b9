//! Closed-form counts for `p(d)`-color compositions and for the three
//! restricted composition families.
//!
//! Every sum is evaluated for all `n ≥ 1`. With `C(a, b) = 0` outside
//! `0 ≤ b ≤ a` the formulas stay correct below `n = m`.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::arith::{binomial, Count};
use crate::error::{Error, Result};

/// The three restricted families, parameterised by `m` in [`FamilyId`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    /// Parts of size 1 or `m` only.
    OnesAndM,
    /// Every part congruent to 1 modulo `m`.
    OneModM,
    /// No part smaller than `m`.
    AtLeastM,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 3] = [
        FamilyKind::OnesAndM,
        FamilyKind::OneModM,
        FamilyKind::AtLeastM,
    ];

    /// Short tag used on the command line.
    pub fn tag(self) -> &'static str {
        match self {
            FamilyKind::OnesAndM => "ones",
            FamilyKind::OneModM => "mod",
            FamilyKind::AtLeastM => "ge",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ones" => Ok(FamilyKind::OnesAndM),
            "mod" => Ok(FamilyKind::OneModM),
            "ge" => Ok(FamilyKind::AtLeastM),
            other => Err(Error::input(format!(
                "unknown family {other:?}, expected ones, mod or ge"
            ))),
        }
    }
}

/// A restricted family together with its modulus `m ≥ 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyId {
    kind: FamilyKind,
    m: usize,
}

impl FamilyId {
    pub fn new(kind: FamilyKind, m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::domain(format!(
                "family parameter m must be >= 2, got {m}"
            )));
        }
        Ok(FamilyId { kind, m })
    }

    pub fn ones_and(m: usize) -> Result<Self> {
        Self::new(FamilyKind::OnesAndM, m)
    }

    pub fn one_mod(m: usize) -> Result<Self> {
        Self::new(FamilyKind::OneModM, m)
    }

    pub fn at_least(m: usize) -> Result<Self> {
        Self::new(FamilyKind::AtLeastM, m)
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Whether a single part of this size is admissible.
    pub fn allows(&self, part: usize) -> bool {
        match self.kind {
            FamilyKind::OnesAndM => part == 1 || part == self.m,
            FamilyKind::OneModM => part % self.m == 1 % self.m,
            FamilyKind::AtLeastM => part >= self.m,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FamilyKind::OnesAndM => write!(f, "C_{{1,{}}}", self.m),
            FamilyKind::OneModM => write!(f, "C_{{=1 mod {}}}", self.m),
            FamilyKind::AtLeastM => write!(f, "C_{{>={}}}", self.m),
        }
    }
}

fn check_positive(name: &str, v: usize) -> Result<i64> {
    if v == 0 {
        return Err(Error::domain(format!("{name} must be at least 1")));
    }
    i64::try_from(v).map_err(|_| Error::domain(format!("{name} = {v} is too large")))
}

/// `p(d)`-color compositions of `nu` with exactly `k` parts:
/// `C(nu + d·k - 1, nu - k)`, zero when `k > nu`.
pub fn count_pd_k(nu: usize, d: usize, k: usize) -> Result<Count> {
    let nu = check_positive("nu", nu)?;
    let d = check_positive("d", d)?;
    let k = check_positive("k", k)?;
    if k > nu {
        return Ok(Count::zero());
    }
    Ok(binomial(nu + d * k - 1, nu - k))
}

/// `P_nu(d)`, all `p(d)`-color compositions of `nu`.
pub fn count_pd(nu: usize, d: usize) -> Result<Count> {
    count_pd_by_parts(nu, d).map(|v| v.into_iter().sum())
}

/// `count_pd_k(nu, d, k)` for `k = 1..=nu`.
pub fn count_pd_by_parts(nu: usize, d: usize) -> Result<Vec<Count>> {
    check_positive("nu", nu)?;
    (1..=nu).map(|k| count_pd_k(nu, d, k)).collect()
}

/// Closed-form size of the family `f` at `n`.
pub fn count_family(f: FamilyId, n: usize) -> Result<Count> {
    let n = check_positive("n", n)?;
    let m = f.m as i64;
    let mut total = Count::zero();
    match f.kind {
        FamilyKind::OnesAndM => {
            for j in 0..=n / m {
                total += binomial(n - (m - 1) * j, j);
            }
        }
        FamilyKind::OneModM => {
            for j in 0..=n / m {
                total += binomial(n - (m - 1) * j - 1, j);
            }
        }
        FamilyKind::AtLeastM => {
            for k in 1..=(n - 1) / (m - 1) {
                total += binomial(n - (m - 1) * k - 1, k - 1);
            }
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: u64) -> Count {
        Count::from(v)
    }

    #[test]
    fn triangular_colored_counts() {
        assert_eq!(count_pd_k(3, 2, 1).unwrap(), c(6));
        assert_eq!(count_pd_k(3, 2, 2).unwrap(), c(6));
        assert_eq!(count_pd_k(3, 2, 3).unwrap(), c(1));
        assert_eq!(count_pd(3, 2).unwrap(), c(13));
    }

    #[test]
    fn all_unit_parts_have_one_coloring() {
        for nu in 1..=10 {
            for d in 1..=6 {
                assert_eq!(count_pd_k(nu, d, nu).unwrap(), c(1));
            }
        }
    }

    #[test]
    fn small_cases() {
        for d in 1..=8 {
            assert_eq!(count_pd(1, d).unwrap(), c(1));
        }
        // n-color compositions of 3: 3 + 2·2 + 1
        assert_eq!(count_pd(3, 1).unwrap(), c(8));
        assert_eq!(count_pd_k(2, 3, 5).unwrap(), c(0));
    }

    #[test]
    fn family_counts_at_thirteen() {
        assert_eq!(
            count_family(FamilyId::ones_and(3).unwrap(), 8).unwrap(),
            c(13)
        );
        assert_eq!(
            count_family(FamilyId::one_mod(3).unwrap(), 9).unwrap(),
            c(13)
        );
        assert_eq!(
            count_family(FamilyId::at_least(3).unwrap(), 11).unwrap(),
            c(13)
        );
        assert_eq!(
            count_family(FamilyId::at_least(3).unwrap(), 2).unwrap(),
            c(0)
        );
    }

    #[test]
    fn families_below_m() {
        // (1), (1,1), (1,1,1) and nothing else fits for m = 5
        for n in 1..5 {
            assert_eq!(
                count_family(FamilyId::ones_and(5).unwrap(), n).unwrap(),
                c(1)
            );
            assert_eq!(
                count_family(FamilyId::one_mod(5).unwrap(), n).unwrap(),
                c(1)
            );
            assert_eq!(
                count_family(FamilyId::at_least(5).unwrap(), n).unwrap(),
                c(0)
            );
        }
    }

    #[test]
    fn domain_errors() {
        assert!(FamilyId::ones_and(1).is_err());
        assert!(count_pd(0, 2).is_err());
        assert!(count_pd(2, 0).is_err());
        assert!(count_family(FamilyId::at_least(2).unwrap(), 0).is_err());
    }

    #[test]
    fn membership() {
        let f = FamilyId::one_mod(3).unwrap();
        assert!(f.allows(1) && f.allows(4) && f.allows(7));
        assert!(!f.allows(3) && !f.allows(2));
        let g = FamilyId::ones_and(4).unwrap();
        assert!(g.allows(1) && g.allows(4) && !g.allows(2) && !g.allows(5));
        assert!("ge".parse::<FamilyKind>().is_ok());
        assert!("odd".parse::<FamilyKind>().is_err());
    }
}
