//! Lazy exhaustive enumeration: `p(d)`-color compositions, the restricted
//! families, and arbitrary `w`-color compositions.
//!
//! These streams are the brute-force ground truth every formula is checked
//! against. Each iterator holds only the current element.
//!
//! Order of [`enum_colored`]: ascending number of parts; for a fixed part
//! count, size tuples in descending lexicographic order; for fixed sizes,
//! color tuples ascending with the leftmost color most significant. For
//! `nu = 3, d = 2` this yields `3^1 … 3^6, 2^c 1^1, 1^1 2^c, 1^1 1^1 1^1`.

use num_traits::{ToPrimitive, Zero};

use crate::bellcore::WeightSeq;
use crate::closedform::FamilyId;
use crate::composition::{color_bound, ColoredComposition, ColoredPart, Composition};
use crate::error::{Error, Result};

/// Steps `colors` to the next tuple below `bounds` (rightmost fastest).
/// Returns `false` after the last tuple.
fn advance_colors(colors: &mut [u64], bounds: &[u64]) -> bool {
    for i in (0..colors.len()).rev() {
        if colors[i] < bounds[i] {
            colors[i] += 1;
            colors[i + 1..].iter_mut().for_each(|c| *c = 1);
            return true;
        }
    }
    false
}

/// Lexicographically largest composition of `nu` into `k` parts.
fn first_descending(nu: usize, k: usize) -> Vec<usize> {
    let mut sizes = vec![1; k];
    sizes[0] = nu - k + 1;
    sizes
}

/// Replaces `sizes` by its lexicographic predecessor among compositions with
/// the same sum and length.
fn previous_composition(sizes: &mut [usize]) -> bool {
    let k = sizes.len();
    if k < 2 {
        return false;
    }
    let Some(i) = (0..k - 1).rev().find(|&i| sizes[i] > 1) else {
        return false;
    };
    let tail: usize = sizes[i + 1..].iter().sum();
    sizes[i] -= 1;
    let rest = tail + 1;
    let len = k - i - 1;
    sizes[i + 1] = rest - (len - 1);
    sizes[i + 2..].iter_mut().for_each(|s| *s = 1);
    true
}

/// Stream of `p(d)`-color compositions; see [`enum_colored`].
#[derive(Debug, Clone)]
pub struct ColoredCompositions {
    nu: usize,
    d: usize,
    k: usize,
    k_last: usize,
    bound_by_size: Vec<u64>,
    sizes: Vec<usize>,
    colors: Vec<u64>,
    bounds: Vec<u64>,
    started: bool,
    done: bool,
}

impl ColoredCompositions {
    fn reset_sizes(&mut self) {
        self.colors = vec![1; self.sizes.len()];
        self.bounds = self.sizes.iter().map(|&s| self.bound_by_size[s]).collect();
    }

    fn current(&self) -> ColoredComposition {
        let parts = self
            .sizes
            .iter()
            .zip(&self.colors)
            .map(|(&size, &color)| ColoredPart { size, color })
            .collect();
        ColoredComposition::from_parts_unchecked(self.d, parts)
    }

    pub fn nu(&self) -> usize {
        self.nu
    }
}

impl Iterator for ColoredCompositions {
    type Item = ColoredComposition;

    fn next(&mut self) -> Option<ColoredComposition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.current());
        }
        if advance_colors(&mut self.colors, &self.bounds) {
            return Some(self.current());
        }
        if previous_composition(&mut self.sizes) {
            self.reset_sizes();
            return Some(self.current());
        }
        if self.k < self.k_last {
            self.k += 1;
            self.sizes = first_descending(self.nu, self.k);
            self.reset_sizes();
            return Some(self.current());
        }
        self.done = true;
        None
    }
}

/// All `p(d)`-color compositions of `nu`, or only those with `k` parts.
pub fn enum_colored(nu: usize, d: usize, k: Option<usize>) -> Result<ColoredCompositions> {
    if nu == 0 || d == 0 {
        return Err(Error::domain(format!(
            "need nu >= 1 and d >= 1, got nu={nu}, d={d}"
        )));
    }
    if let Some(k) = k {
        if k == 0 || k > nu {
            return Err(Error::domain(format!(
                "need 1 <= k <= nu, got k={k}, nu={nu}"
            )));
        }
    }
    let mut bound_by_size = vec![0u64; nu + 1];
    for (size, slot) in bound_by_size.iter_mut().enumerate().skip(1) {
        *slot = color_bound(size, d).ok_or_else(|| {
            Error::domain(format!(
                "colors for part size {size} at d={d} exceed 64 bits"
            ))
        })?;
    }
    let (k_first, k_last) = match k {
        Some(k) => (k, k),
        None => (1, nu),
    };
    let mut it = ColoredCompositions {
        nu,
        d,
        k: k_first,
        k_last,
        bound_by_size,
        sizes: first_descending(nu, k_first),
        colors: Vec::new(),
        bounds: Vec::new(),
        started: false,
        done: false,
    };
    it.reset_sizes();
    Ok(it)
}

/// Compositions of `n` whose parts all satisfy a membership table, in
/// ascending lexicographic order of part lists.
#[derive(Debug, Clone)]
pub struct RestrictedCompositions {
    allowed: Vec<bool>,
    feasible: Vec<bool>,
    stack: Vec<usize>,
    remaining: usize,
    started: bool,
    done: bool,
}

impl RestrictedCompositions {
    /// `allowed[p]` says whether part `p` may be used; `allowed.len() > n`.
    fn new(n: usize, allowed: Vec<bool>) -> Self {
        debug_assert!(allowed.len() > n);
        // feasible[r]: r can be written with allowed parts (r = 0 trivially)
        let mut feasible = vec![false; n + 1];
        feasible[0] = true;
        for r in 1..=n {
            feasible[r] = (1..=r).any(|p| allowed[p] && feasible[r - p]);
        }
        let done = !feasible[n];
        RestrictedCompositions {
            allowed,
            feasible,
            stack: Vec::new(),
            remaining: n,
            started: false,
            done,
        }
    }

    fn smallest_from(&self, lo: usize) -> Option<usize> {
        (lo..=self.remaining).find(|&q| self.allowed[q] && self.feasible[self.remaining - q])
    }

    fn fill(&mut self) {
        while self.remaining > 0 {
            let q = self
                .smallest_from(1)
                .expect("feasible remainder always admits a part");
            self.stack.push(q);
            self.remaining -= q;
        }
    }

    fn current(&self) -> Composition {
        Composition::from_parts_unchecked(self.stack.clone())
    }
}

impl Iterator for RestrictedCompositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill();
            return Some(self.current());
        }
        while let Some(p) = self.stack.pop() {
            self.remaining += p;
            if let Some(q) = self.smallest_from(p + 1) {
                self.stack.push(q);
                self.remaining -= q;
                self.fill();
                return Some(self.current());
            }
        }
        self.done = true;
        None
    }
}

/// Every composition of `n` in the family `f`, lexicographically.
pub fn enum_family(f: FamilyId, n: usize) -> Result<RestrictedCompositions> {
    if n == 0 {
        return Err(Error::domain("n must be at least 1"));
    }
    let allowed = (0..=n).map(|p| p > 0 && f.allows(p)).collect();
    Ok(RestrictedCompositions::new(n, allowed))
}

/// Stream of `w`-color compositions; see [`enum_weighted`].
#[derive(Debug, Clone)]
pub struct WeightedCompositions {
    shapes: RestrictedCompositions,
    weights: Vec<u64>,
    sizes: Vec<usize>,
    colors: Vec<u64>,
    bounds: Vec<u64>,
    primed: bool,
}

impl WeightedCompositions {
    fn load_shape(&mut self) -> bool {
        match self.shapes.next() {
            Some(c) => {
                self.sizes = c.into_parts();
                self.colors = vec![1; self.sizes.len()];
                self.bounds = self.sizes.iter().map(|&s| self.weights[s]).collect();
                true
            }
            None => false,
        }
    }

    fn current(&self) -> Vec<ColoredPart> {
        self.sizes
            .iter()
            .zip(&self.colors)
            .map(|(&size, &color)| ColoredPart { size, color })
            .collect()
    }
}

impl Iterator for WeightedCompositions {
    type Item = Vec<ColoredPart>;

    fn next(&mut self) -> Option<Vec<ColoredPart>> {
        if !self.primed {
            self.primed = true;
            return self.load_shape().then(|| self.current());
        }
        if self.sizes.is_empty() {
            return None;
        }
        if advance_colors(&mut self.colors, &self.bounds) || self.load_shape() {
            return Some(self.current());
        }
        self.sizes.clear();
        None
    }
}

/// Every `w`-color composition of `n`: size tuples lexicographically, then
/// colors `1..=w_size` per part, ascending.
pub fn enum_weighted(w: &WeightSeq, n: usize) -> Result<WeightedCompositions> {
    if n == 0 {
        return Err(Error::domain("n must be at least 1"));
    }
    if n > w.len() {
        return Err(Error::input(format!(
            "need weights up to w_{n}, only {} supplied",
            w.len()
        )));
    }
    let mut weights = vec![0u64; n + 1];
    for (size, slot) in weights.iter_mut().enumerate().skip(1) {
        let v = w.get(size)?;
        *slot = v
            .to_u64()
            .ok_or_else(|| Error::domain(format!("w_{size} = {v} is too large to enumerate")))?;
    }
    let allowed = (0..=n)
        .map(|s| s > 0 && !w.get(s).map_or(true, Zero::is_zero))
        .collect();
    Ok(WeightedCompositions {
        shapes: RestrictedCompositions::new(n, allowed),
        weights,
        sizes: Vec::new(),
        colors: Vec::new(),
        bounds: Vec::new(),
        primed: false,
    })
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    #[test]
    fn triangular_nu3_in_table_order() {
        let rows: Vec<String> = enum_colored(3, 2, None)
            .unwrap()
            .map(|a| a.to_string())
            .collect();
        assert_eq!(
            rows,
            [
                "3^1",
                "3^2",
                "3^3",
                "3^4",
                "3^5",
                "3^6",
                "2^1,1^1",
                "2^2,1^1",
                "2^3,1^1",
                "1^1,2^1",
                "1^1,2^2",
                "1^1,2^3",
                "1^1,1^1,1^1",
            ]
        );
    }

    #[test]
    fn fixed_part_count() {
        let rows: Vec<_> = enum_colored(3, 2, Some(3)).unwrap().collect();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].to_string(), "1^1,1^1,1^1");
        assert_eq!(enum_colored(4, 1, Some(2)).unwrap().count(), 10);
        assert!(enum_colored(3, 2, Some(4)).is_err());
        assert!(enum_colored(3, 2, Some(0)).is_err());
        assert!(enum_colored(0, 2, None).is_err());
    }

    #[test]
    fn single_unit_part() {
        let rows: Vec<_> = enum_colored(1, 1, None)
            .unwrap()
            .map(|a| a.to_string())
            .collect();
        assert_eq!(rows, ["1^1"]);
    }

    #[test]
    fn descending_size_order() {
        let mut sizes = first_descending(5, 3);
        let mut seen = vec![sizes.clone()];
        while previous_composition(&mut sizes) {
            seen.push(sizes.clone());
        }
        let mut expected = seen.clone();
        expected.sort_by(|a, b| b.cmp(a));
        assert_eq!(seen, expected);
        assert_eq!(seen.len(), 6);
    }

    #[test]
    fn ones_and_three_at_four() {
        let f = FamilyId::ones_and(3).unwrap();
        let rows: Vec<String> = enum_family(f, 4).unwrap().map(|c| c.to_string()).collect();
        assert_eq!(rows, ["1,1,1,1", "1,3", "3,1"]);
    }

    #[test]
    fn empty_family() {
        assert_eq!(
            enum_family(FamilyId::at_least(3).unwrap(), 2)
                .unwrap()
                .count(),
            0
        );
        assert!(enum_family(FamilyId::at_least(3).unwrap(), 0).is_err());
    }

    #[test]
    fn family_streams_are_lexicographic_and_distinct() {
        for f in [
            FamilyId::ones_and(3).unwrap(),
            FamilyId::one_mod(3).unwrap(),
            FamilyId::at_least(2).unwrap(),
        ] {
            let rows: Vec<Vec<usize>> = enum_family(f, 12)
                .unwrap()
                .map(|c| c.into_parts())
                .collect();
            assert!(rows.windows(2).all(|w| w[0] < w[1]), "{f}");
            for r in &rows {
                assert_eq!(r.iter().sum::<usize>(), 12);
                assert!(r.iter().all(|&p| f.allows(p)));
            }
        }
        assert_eq!(
            enum_family(FamilyId::one_mod(3).unwrap(), 9)
                .unwrap()
                .count(),
            13
        );
    }

    #[test]
    fn weighted_streams() {
        let fib = WeightSeq::indicator(5, |n| n <= 2).unwrap();
        assert_eq!(enum_weighted(&fib, 5).unwrap().count(), 8);
        let unit = WeightSeq::indicator(7, |n| n == 1).unwrap();
        for n in 1..=7 {
            assert_eq!(enum_weighted(&unit, n).unwrap().count(), 1);
        }
        let p2 = WeightSeq::polytopic(2, 3).unwrap();
        let all: Vec<_> = enum_weighted(&p2, 3).unwrap().collect();
        assert_eq!(all.len(), 13);
        assert_eq!(all.iter().collect::<HashSet<_>>().len(), 13);
        assert!(enum_weighted(&p2, 4).is_err());
    }

    #[test]
    fn weighted_stream_with_no_solutions() {
        let w = WeightSeq::indicator(3, |n| n == 2).unwrap();
        assert_eq!(enum_weighted(&w, 3).unwrap().count(), 0);
        assert_eq!(enum_weighted(&w, 2).unwrap().count(), 1);
    }
}
