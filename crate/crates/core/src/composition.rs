//! Plain and colored compositions with their text forms.
//!
//! Plain compositions print as `3,1,3,1`; colored ones as `size^color`
//! tokens, e.g. `2^3,1^1`. Whitespace around tokens is ignored.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::arith::binomial_u64;
use crate::error::{Error, Result};

/// An ordered, nonempty list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::input("a composition needs at least one part"));
        }
        if let Some(i) = parts.iter().position(|&p| p == 0) {
            return Err(Error::input(format!("part {} is zero", i + 1)));
        }
        Ok(Composition { parts })
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(!parts.is_empty() && parts.iter().all(|&p| p > 0));
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(str::trim)
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::input(format!("invalid part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

/// One part `size^color`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ColoredPart {
    pub size: usize,
    pub color: u64,
}

impl ColoredPart {
    pub fn new(size: usize, color: u64) -> Self {
        ColoredPart { size, color }
    }
}

impl fmt::Display for ColoredPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.size, self.color)
    }
}

impl FromStr for ColoredPart {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (size, color) = t
            .split_once('^')
            .ok_or_else(|| Error::input(format!("expected size^color, got {t:?}")))?;
        let size = size
            .trim()
            .parse()
            .map_err(|_| Error::input(format!("invalid part size in {t:?}")))?;
        let color = color
            .trim()
            .parse()
            .map_err(|_| Error::input(format!("invalid color in {t:?}")))?;
        Ok(ColoredPart { size, color })
    }
}

/// Number of colors a part of `size` carries when colored by `p(d)`,
/// i.e. `C(size + d - 1, d)`. `None` if it exceeds `u64`.
pub fn color_bound(size: usize, d: usize) -> Option<u64> {
    binomial_u64((size + d - 1) as u64, d as u64)
}

/// A `p(d)`-color composition: each part of size `n` carries a color in
/// `1..=C(n+d-1, d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredComposition {
    d: usize,
    parts: Vec<ColoredPart>,
}

impl ColoredComposition {
    pub fn new(d: usize, parts: Vec<ColoredPart>) -> Result<Self> {
        if d == 0 {
            return Err(Error::domain("dimension d must be at least 1"));
        }
        if parts.is_empty() {
            return Err(Error::input(
                "a colored composition needs at least one part",
            ));
        }
        for (i, p) in parts.iter().enumerate() {
            if p.size == 0 {
                return Err(Error::input(format!("part {} has size zero", i + 1)));
            }
            // an unrepresentable bound admits every u64 color
            let bound = color_bound(p.size, d).unwrap_or(u64::MAX);
            if p.color == 0 || p.color > bound {
                return Err(Error::input(format!(
                    "part {} ({p}) needs a color in 1..={bound} for d={d}",
                    i + 1
                )));
            }
        }
        Ok(ColoredComposition { d, parts })
    }

    pub(crate) fn from_parts_unchecked(d: usize, parts: Vec<ColoredPart>) -> Self {
        ColoredComposition { d, parts }
    }

    /// Parses `size^color` tokens separated by commas.
    pub fn parse(s: &str, d: usize) -> Result<Self> {
        let parts = s
            .split(',')
            .map(str::parse)
            .collect::<Result<Vec<ColoredPart>>>()?;
        Self::new(d, parts)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn parts(&self) -> &[ColoredPart] {
        &self.parts
    }

    /// The composed integer.
    pub fn nu(&self) -> usize {
        self.parts.iter().map(|p| p.size).sum()
    }

    /// Number of parts.
    pub fn k(&self) -> usize {
        self.parts.len()
    }

    /// The underlying uncolored composition.
    pub fn sizes(&self) -> Composition {
        Composition::from_parts_unchecked(self.parts.iter().map(|p| p.size).collect())
    }
}

impl fmt::Display for ColoredComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_round_trip() {
        let c: Composition = "3, 1,3 ,1".parse().unwrap();
        assert_eq!(c.parts(), &[3, 1, 3, 1]);
        assert_eq!(c.total(), 8);
        assert_eq!(c.to_string(), "3,1,3,1");
        assert!("".parse::<Composition>().is_err());
        assert!("1,0".parse::<Composition>().is_err());
        assert!("1,,2".parse::<Composition>().is_err());
    }

    #[test]
    fn colored_round_trip() {
        let a = ColoredComposition::parse("2^3, 1^1", 2).unwrap();
        assert_eq!(a.nu(), 3);
        assert_eq!(a.k(), 2);
        assert_eq!(a.to_string(), "2^3,1^1");
        assert_eq!(a.sizes().parts(), &[2, 1]);
    }

    #[test]
    fn color_bounds_enforced() {
        // size 2, d = 2: three colors
        assert!(ColoredComposition::parse("2^3", 2).is_ok());
        assert!(ColoredComposition::parse("2^4", 2).is_err());
        assert!(ColoredComposition::parse("2^0", 2).is_err());
        assert!(ColoredComposition::parse("1^2", 5).is_err());
        assert!(ColoredComposition::parse("0^1", 1).is_err());
        assert!(ColoredComposition::parse("3", 1).is_err());
        assert!(ColoredComposition::parse("1^1", 0).is_err());
    }

    #[test]
    fn bound_values() {
        assert_eq!(color_bound(3, 2), Some(6));
        assert_eq!(color_bound(1, 9), Some(1));
        assert_eq!(color_bound(5, 1), Some(5));
        assert_eq!(color_bound(200, 60), None);
    }
}
