//! Constructive bijections between `p(d)`-color compositions, binary words
//! and the three restricted composition families.
//!
//! * [`unrank_word`] / [`rank_word`]: ranks `1..=C(n, d)` ↔ words of length
//!   `n` with exactly `d` ones, via the combinatorial number system on
//!   `m - 1` (colex order).
//! * [`to_binary`] / [`from_binary`]: a colored composition of `nu` with `k`
//!   parts ↔ a word of length `nu + dk - 1` with `(d+1)k - 1` ones. Each part
//!   `n^c` becomes the length-`(n+d-1)` word of rank `c`; consecutive parts
//!   are joined by one extra `1`.
//! * [`FamilyMap`]: reads that word as a composition of `(d+1)nu - 1`,
//!   `(d+1)nu` or `(d+1)nu + d`.

use std::fmt;
use std::str::FromStr;

use crate::arith::binomial_u64;
use crate::closedform::{FamilyId, FamilyKind};
use crate::composition::{color_bound, ColoredComposition, ColoredPart, Composition};
use crate::error::{Error, Result};

/// A finite 0/1 word.
///
/// Characters are labelled right to left `0, 1, …, len-1`; the text form
/// writes label `len-1` first. Label `i` has place value `2^i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord {
    // bits[i] is the character labelled i
    bits: Vec<bool>,
}

impl BinaryWord {
    /// Word from characters in text order (leftmost first).
    pub fn from_text_bits(text: impl IntoIterator<Item = bool>) -> Self {
        let mut bits: Vec<bool> = text.into_iter().collect();
        bits.reverse();
        BinaryWord { bits }
    }

    /// Word of length `len` with ones exactly at the given labels.
    pub fn with_ones_at(len: usize, labels: impl IntoIterator<Item = usize>) -> Self {
        let mut bits = vec![false; len];
        for l in labels {
            bits[l] = true;
        }
        BinaryWord { bits }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Character at right-to-left label `label`.
    pub fn bit(&self, label: usize) -> bool {
        self.bits[label]
    }

    /// Characters in text order.
    pub fn text_bits(&self) -> impl DoubleEndedIterator<Item = bool> + ExactSizeIterator + '_ {
        self.bits.iter().rev().copied()
    }

    /// Labels of the ones, largest (leftmost) first.
    pub fn one_labels(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.bits.len()).rev().filter(|&i| self.bits[i])
    }

    /// Base-2 value, `None` past 128 bits.
    pub fn value(&self) -> Option<u128> {
        if self.bits.len() > 128 {
            return None;
        }
        Some(self.one_labels().fold(0u128, |acc, i| acc | (1u128 << i)))
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self
            .text_bits()
            .map(|b| if b { '1' } else { '0' })
            .collect();
        f.write_str(&s)
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::input("binary word must not be empty"));
        }
        let text = s
            .chars()
            .map(|ch| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::input(format!(
                    "invalid character {other:?} in binary word"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BinaryWord::from_text_bits(text))
    }
}

fn choose(n: usize, k: usize) -> Result<u64> {
    binomial_u64(n as u64, k as u64)
        .ok_or_else(|| Error::domain(format!("C({n},{k}) does not fit in 64 bits")))
}

/// The word of length `n` with `d` ones and rank `m` (1-based).
///
/// Writes `m - 1 = C(c_d, d) + … + C(c_1, 1)` with `c_d > … > c_1 ≥ 0`,
/// choosing each `c_j` greedily as large as possible, and sets the
/// characters labelled `c_1, …, c_d`.
pub fn unrank_word(m: u64, n: usize, d: usize) -> Result<BinaryWord> {
    if d == 0 || d > n {
        return Err(Error::domain(format!("need 1 <= d <= n, got n={n}, d={d}")));
    }
    let total = choose(n, d)?;
    if m == 0 || m > total {
        return Err(Error::domain(format!(
            "rank {m} outside 1..={total} for n={n}, d={d}"
        )));
    }
    let mut rest = m - 1;
    let mut labels = Vec::with_capacity(d);
    let mut ceiling = n;
    for j in (1..=d).rev() {
        // largest c < ceiling with C(c, j) <= rest; c = j - 1 always qualifies
        let mut c = ceiling - 1;
        loop {
            let v = choose(c, j)?;
            if v <= rest {
                rest -= v;
                break;
            }
            c -= 1;
        }
        labels.push(c);
        ceiling = c;
    }
    debug_assert_eq!(rest, 0);
    Ok(BinaryWord::with_ones_at(n, labels))
}

/// Rank of a word with exactly `d` ones: `1 + Σ_j C(p_j, d - j + 1)`, the
/// ones' labels `p_1 > … > p_d` read left to right.
pub fn rank_word(w: &BinaryWord, d: usize) -> Result<u64> {
    if d == 0 {
        return Err(Error::domain("d must be at least 1"));
    }
    let ones = w.count_ones();
    if ones != d {
        return Err(Error::input(format!(
            "word {w} has {ones} ones, expected {d}"
        )));
    }
    let mut m: u64 = 1;
    for (j, p) in w.one_labels().enumerate() {
        let term = choose(p, d - j)?;
        m = m
            .checked_add(term)
            .ok_or_else(|| Error::domain(format!("rank of {w} does not fit in 64 bits")))?;
    }
    Ok(m)
}

/// The binary word of a colored composition.
pub fn to_binary(alpha: &ColoredComposition) -> Result<BinaryWord> {
    let d = alpha.d();
    let mut text = Vec::with_capacity(alpha.nu() + d * alpha.k() - 1);
    for (i, part) in alpha.parts().iter().enumerate() {
        if i > 0 {
            text.push(true);
        }
        let bound = color_bound(part.size, d).unwrap_or(u64::MAX);
        if part.color == 0 || part.color > bound {
            return Err(Error::input(format!(
                "part {} ({part}) needs a color in 1..={bound} for d={d}",
                i + 1
            )));
        }
        let segment = unrank_word(part.color, part.size + d - 1, d)?;
        text.extend(segment.text_bits());
    }
    Ok(BinaryWord::from_text_bits(text))
}

/// Inverse of [`to_binary`].
///
/// Scanning left to right, each segment ends just before its `(d+1)`-th
/// one; that one is a separator and is dropped. Zeros after a segment's
/// `d`-th one stay with that segment. A segment of length `L` decodes to a
/// part of size `L - d + 1` whose color is the segment's rank.
pub fn from_binary(beta: &BinaryWord, d: usize) -> Result<ColoredComposition> {
    if d == 0 {
        return Err(Error::domain("d must be at least 1"));
    }
    let mut parts = Vec::new();
    let mut segment: Vec<bool> = Vec::new();
    let mut ones = 0usize;
    for bit in beta.text_bits() {
        if bit && ones == d {
            parts.push(decode_segment(&segment, d, parts.len())?);
            segment.clear();
            ones = 0;
            continue;
        }
        ones += usize::from(bit);
        segment.push(bit);
    }
    if segment.is_empty() {
        return Err(Error::Segment {
            segment: parts.len(),
            reason: "empty segment after final separator".into(),
        });
    }
    if ones != d {
        return Err(Error::Segment {
            segment: parts.len(),
            reason: format!("segment has {ones} ones, expected {d}"),
        });
    }
    parts.push(decode_segment(&segment, d, parts.len())?);
    Ok(ColoredComposition::from_parts_unchecked(d, parts))
}

fn decode_segment(text: &[bool], d: usize, index: usize) -> Result<ColoredPart> {
    let word = BinaryWord::from_text_bits(text.iter().copied());
    // at least d characters because the segment holds d ones
    let size = word.len() + 1 - d;
    let color = rank_word(&word, d).map_err(|e| Error::Segment {
        segment: index,
        reason: e.to_string(),
    })?;
    Ok(ColoredPart { size, color })
}

/// Which restricted family a colored composition is sent to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyMap {
    /// Into `C_{1,d+1}((d+1)nu - 1)`: each `1` is a part 1, each `0` a part `d+1`.
    Ones,
    /// Into `C_{≡1 (d+1)}((d+1)nu)`: a run of `j` zeros around the ones
    /// becomes a part `(d+1)j + 1`.
    Mod,
    /// Into `C_{≥d+1}((d+1)nu + d)`: a run of `j` ones around the zeros
    /// becomes a part `j + d + 1`.
    Ge,
}

impl FamilyMap {
    pub const ALL: [FamilyMap; 3] = [FamilyMap::Ones, FamilyMap::Mod, FamilyMap::Ge];

    pub fn tag(self) -> &'static str {
        match self {
            FamilyMap::Ones => "ones",
            FamilyMap::Mod => "mod",
            FamilyMap::Ge => "ge",
        }
    }

    /// Target family for dimension `d`.
    pub fn family(self, d: usize) -> FamilyId {
        let kind = match self {
            FamilyMap::Ones => FamilyKind::OnesAndM,
            FamilyMap::Mod => FamilyKind::OneModM,
            FamilyMap::Ge => FamilyKind::AtLeastM,
        };
        FamilyId::new(kind, d + 1).expect("d + 1 >= 2")
    }

    /// The integer the image compositions sum to.
    pub fn target_total(self, nu: usize, d: usize) -> usize {
        match self {
            FamilyMap::Ones => (d + 1) * nu - 1,
            FamilyMap::Mod => (d + 1) * nu,
            FamilyMap::Ge => (d + 1) * nu + d,
        }
    }

    /// `nu` from the image total, if the total is reachable at all.
    fn source_nu(self, total: usize, d: usize) -> Option<usize> {
        let m = d + 1;
        let shifted = match self {
            FamilyMap::Ones => total + 1,
            FamilyMap::Mod => total,
            FamilyMap::Ge => total.checked_sub(d)?,
        };
        (shifted % m == 0 && shifted >= m).then_some(shifted / m)
    }

    /// Image of a colored composition.
    pub fn apply(self, alpha: &ColoredComposition) -> Result<Composition> {
        let beta = to_binary(alpha)?;
        Ok(self.word_to_composition(&beta, alpha.d()))
    }

    /// Reads a binary word as a composition in the target family.
    pub fn word_to_composition(self, beta: &BinaryWord, d: usize) -> Composition {
        let m = d + 1;
        let parts = match self {
            FamilyMap::Ones => beta.text_bits().map(|b| if b { 1 } else { m }).collect(),
            FamilyMap::Mod => runs_between(beta, true)
                .into_iter()
                .map(|zeros| m * zeros + 1)
                .collect(),
            FamilyMap::Ge => runs_between(beta, false)
                .into_iter()
                .map(|ones| ones + m)
                .collect(),
        };
        Composition::from_parts_unchecked(parts)
    }

    /// Rebuilds the binary word from a composition in the target family.
    pub fn composition_to_word(self, c: &Composition, d: usize) -> Result<BinaryWord> {
        let m = d + 1;
        let total = c.total();
        let expected = self.family(d);
        if let Some(i) = c.parts().iter().position(|&p| !expected.allows(p)) {
            return Err(Error::input(format!(
                "part {} ({}) is not allowed in {expected}",
                i + 1,
                c.parts()[i]
            )));
        }
        if self.source_nu(total, d).is_none() {
            return Err(Error::input(format!(
                "total {total} is not of the form {} for d={d}",
                match self {
                    FamilyMap::Ones => "(d+1)nu - 1",
                    FamilyMap::Mod => "(d+1)nu",
                    FamilyMap::Ge => "(d+1)nu + d",
                }
            )));
        }
        let mut text = Vec::new();
        match self {
            FamilyMap::Ones => text.extend(c.parts().iter().map(|&p| p == 1)),
            FamilyMap::Mod => {
                for (i, &p) in c.parts().iter().enumerate() {
                    if i > 0 {
                        text.push(true);
                    }
                    text.extend(std::iter::repeat_n(false, (p - 1) / m));
                }
            }
            FamilyMap::Ge => {
                for (i, &p) in c.parts().iter().enumerate() {
                    if i > 0 {
                        text.push(false);
                    }
                    text.extend(std::iter::repeat_n(true, p - m));
                }
            }
        }
        if text.is_empty() {
            return Err(Error::input(format!("{c} encodes an empty binary word")));
        }
        Ok(BinaryWord::from_text_bits(text))
    }

    /// Preimage of a composition in the target family.
    pub fn invert(self, c: &Composition, d: usize) -> Result<ColoredComposition> {
        if d == 0 {
            return Err(Error::domain("d must be at least 1"));
        }
        let beta = self.composition_to_word(c, d)?;
        let alpha = from_binary(&beta, d)?;
        let nu = self.source_nu(c.total(), d);
        if nu != Some(alpha.nu()) {
            return Err(Error::Consistency(format!(
                "{c} decoded to {alpha}, which does not compose {nu:?}"
            )));
        }
        Ok(alpha)
    }
}

impl fmt::Display for FamilyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for FamilyMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ones" => Ok(FamilyMap::Ones),
            "mod" => Ok(FamilyMap::Mod),
            "ge" => Ok(FamilyMap::Ge),
            other => Err(Error::input(format!(
                "unknown map target {other:?}, expected ones, mod or ge"
            ))),
        }
    }
}

/// Lengths of the maximal runs of `!sep` delimited by the `sep` characters,
/// empty runs at both ends included; always `count(sep) + 1` entries.
fn runs_between(beta: &BinaryWord, sep: bool) -> Vec<usize> {
    let mut runs = vec![0];
    for b in beta.text_bits() {
        if b == sep {
            runs.push(0);
        } else {
            *runs.last_mut().expect("nonempty") += 1;
        }
    }
    runs
}

/// The run string for [`FamilyMap::Mod`]: a run of `j` zeros between
/// separators grows to `(d+1)j + 1` zeros; the separators are kept.
pub fn zeros_as_parts(beta: &BinaryWord, d: usize) -> String {
    expand_runs(beta, true, |j| (d + 1) * j + 1)
}

/// The run string for [`FamilyMap::Ge`]: a run of `j` ones between zero
/// separators grows to `j + d + 1` ones.
pub fn ones_as_parts(beta: &BinaryWord, d: usize) -> String {
    expand_runs(beta, false, |j| j + d + 1)
}

fn expand_runs(beta: &BinaryWord, sep: bool, grow: impl Fn(usize) -> usize) -> String {
    let (fill, sep_ch) = if sep { ('0', '1') } else { ('1', '0') };
    let mut out = String::new();
    for (i, run) in runs_between(beta, sep).into_iter().enumerate() {
        if i > 0 {
            out.push(sep_ch);
        }
        out.extend(std::iter::repeat_n(fill, grow(run)));
    }
    out
}
