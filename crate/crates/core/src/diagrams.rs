//! Weights, Young diagrams and the combinatorics built on them.
//!
//! A [`Weight`] is a weakly decreasing integer sequence of fixed length (a
//! dominant weight of `GL(k)`). A [`YoungDiagram`] is a weight with
//! nonnegative parts; two diagrams compare equal when they agree after
//! right-padding with zeros, so a diagram of length `k` is freely regarded as
//! one of any larger length.
//!
//! Besides the basic operations (transpose, inclusion, negation, twisting)
//! the module implements the bijection between binary words and the block
//! `Y_{h,w}`, the cyclic action on binary words together with its transport
//! `lambda -> lambda'`, and the staircase truncations `lambda^(i)` with their
//! box counts `nu_i`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A dominant `GL(k)` weight: a weakly decreasing integer sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    parts: Vec<i32>,
}

impl Weight {
    pub fn new(parts: Vec<i32>) -> Result<Self> {
        if parts.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::NotDominant(parts));
        }
        Ok(Weight { parts })
    }

    /// Builds a weight from parts that are known to be weakly decreasing.
    pub(crate) fn from_sorted(parts: Vec<i32>) -> Self {
        debug_assert!(parts.windows(2).all(|p| p[0] >= p[1]), "{parts:?}");
        Weight { parts }
    }

    pub fn zero(k: usize) -> Self {
        Weight { parts: vec![0; k] }
    }

    /// The weight `(t, t, ..., t)` of length `k`, i.e. `det^t`.
    pub fn constant(k: usize, t: i32) -> Self {
        Weight { parts: vec![t; k] }
    }

    pub fn parts(&self) -> &[i32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn first(&self) -> Option<i32> {
        self.parts.first().copied()
    }

    pub fn last(&self) -> Option<i32> {
        self.parts.last().copied()
    }

    /// `-lambda = (-lambda_k, ..., -lambda_1)`.
    pub fn negate(&self) -> Weight {
        Weight {
            parts: self.parts.iter().rev().map(|&p| -p).collect(),
        }
    }

    /// `lambda(t)`: adds `t` to every part.
    pub fn twist(&self, t: i32) -> Weight {
        Weight {
            parts: self.parts.iter().map(|&p| p + t).collect(),
        }
    }

    /// Componentwise `self <= other`, after zero-padding to a common length.
    pub fn subset_of(&self, other: &Weight) -> bool {
        let k = self.len().max(other.len());
        (0..k).all(|i| self.part(i) <= other.part(i))
    }

    /// The `i`-th part (0-based); zero beyond the stored length.
    pub fn part(&self, i: usize) -> i32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn is_diagram(&self) -> bool {
        self.parts.iter().all(|&p| p >= 0)
    }

    /// Sum of the parts.
    pub fn size(&self) -> i64 {
        self.parts.iter().map(|&p| p as i64).sum()
    }

    /// Concatenation `(alpha, beta)`. The result need not be dominant, so it
    /// is returned as a plain sequence.
    pub fn concat(&self, other: &Weight) -> Vec<i32> {
        let mut out = self.parts.clone();
        out.extend_from_slice(&other.parts);
        out
    }
}

/// `mu ⊆ lambda`: componentwise comparison after zero-padding.
pub fn includes(mu: &Weight, lambda: &Weight) -> bool {
    mu.subset_of(lambda)
}

fn format_parts(parts: &[i32], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if parts.is_empty() {
        return f.write_str("0");
    }
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

fn parse_parts(s: &str) -> Result<Vec<i32>> {
    let trimmed = s.trim();
    let trimmed = trimmed
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(trimmed);
    if trimmed.is_empty() {
        return Err(Error::Parse {
            input: s.to_string(),
            reason: "empty input".into(),
        });
    }
    trimmed
        .split(',')
        .map(|tok| {
            tok.trim().parse::<i32>().map_err(|e| Error::Parse {
                input: s.to_string(),
                reason: e.to_string(),
            })
        })
        .collect()
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_parts(&self.parts, f)
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Weight::new(parse_parts(s)?)
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A weight with nonnegative parts. Equality, hashing and ordering ignore
/// trailing zeros; the stored length is kept for callers that need it.
#[derive(Clone, Debug)]
pub struct YoungDiagram {
    weight: Weight,
}

impl YoungDiagram {
    pub fn new(parts: Vec<i32>) -> Result<Self> {
        let weight = Weight::new(parts)?;
        YoungDiagram::from_weight(weight)
    }

    pub fn from_weight(weight: Weight) -> Result<Self> {
        if !weight.is_diagram() {
            return Err(Error::NegativePart(weight.parts));
        }
        Ok(YoungDiagram { weight })
    }

    pub(crate) fn from_sorted(parts: Vec<i32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p >= 0));
        YoungDiagram {
            weight: Weight::from_sorted(parts),
        }
    }

    /// The zero diagram of length `k`.
    pub fn empty(k: usize) -> Self {
        YoungDiagram {
            weight: Weight::zero(k),
        }
    }

    /// The column `(1, ..., 1)` of height `i`.
    pub fn column(i: usize) -> Self {
        YoungDiagram::from_sorted(vec![1; i])
    }

    /// The rectangle with `h` rows of width `w`.
    pub fn rectangle(h: usize, w: usize) -> Self {
        YoungDiagram::from_sorted(vec![w as i32; h])
    }

    pub fn parts(&self) -> &[i32] {
        self.weight.parts()
    }

    /// Parts with trailing zeros removed.
    pub fn trimmed(&self) -> &[i32] {
        let parts = self.weight.parts();
        let end = parts.iter().rposition(|&p| p != 0).map_or(0, |i| i + 1);
        &parts[..end]
    }

    pub fn as_weight(&self) -> &Weight {
        &self.weight
    }

    pub fn into_weight(self) -> Weight {
        self.weight
    }

    /// Stored length `k`.
    pub fn len(&self) -> usize {
        self.weight.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trimmed().is_empty()
    }

    pub fn part(&self, i: usize) -> i32 {
        self.weight.part(i)
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.weight.size() as usize
    }

    /// Number of nonzero rows.
    pub fn height(&self) -> usize {
        self.trimmed().len()
    }

    /// Length of the first row.
    pub fn width(&self) -> usize {
        self.part(0) as usize
    }

    /// `(h(lambda), w(lambda), t(lambda))`: height, width, and the number of
    /// rows of maximal width (zero for the empty diagram).
    pub fn stats(&self) -> (usize, usize, usize) {
        let w = self.width();
        let t = if w == 0 {
            0
        } else {
            self.trimmed().iter().take_while(|&&p| p as usize == w).count()
        };
        (self.height(), w, t)
    }

    /// Same diagram stored with length `k`. Fails if it has more than `k`
    /// nonzero rows.
    pub fn padded(&self, k: usize) -> Result<YoungDiagram> {
        let trimmed = self.trimmed();
        if trimmed.len() > k {
            return Err(Error::LengthMismatch {
                weight: self.to_string(),
                expected: k,
                found: trimmed.len(),
            });
        }
        let mut parts = trimmed.to_vec();
        parts.resize(k, 0);
        Ok(YoungDiagram::from_sorted(parts))
    }

    /// `lambda^T`, stored with length `lambda_1`.
    pub fn transpose(&self) -> YoungDiagram {
        let trimmed = self.trimmed();
        let width = self.width();
        let parts = (1..=width as i32)
            .map(|i| trimmed.iter().take_while(|&&p| p >= i).count() as i32)
            .collect();
        YoungDiagram::from_sorted(parts)
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &YoungDiagram) -> bool {
        other.weight.subset_of(&self.weight)
    }

    pub fn fits_in(&self, h: usize, w: usize) -> bool {
        self.height() <= h && self.width() <= w
    }

    fn check_block(&self, h: usize, w: usize) -> Result<()> {
        if self.fits_in(h, w) {
            Ok(())
        } else {
            Err(Error::BlockMismatch {
                diagram: self.to_string(),
                h,
                w,
            })
        }
    }

    /// Adds `t >= -lambda_k` to every part. Stays inside diagrams only when
    /// the result is nonnegative; used by the twist trick.
    pub fn twist(&self, t: i32) -> Result<YoungDiagram> {
        YoungDiagram::from_weight(self.weight.twist(t))
    }
}

impl PartialEq for YoungDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for YoungDiagram {}

impl Hash for YoungDiagram {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.trimmed().hash(state);
    }
}

impl PartialOrd for YoungDiagram {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for YoungDiagram {
    fn cmp(&self, other: &Self) -> Ordering {
        self.trimmed().cmp(other.trimmed())
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_parts(self.trimmed(), f)
    }
}

impl FromStr for YoungDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        YoungDiagram::new(parse_parts(s)?)
    }
}

impl Serialize for YoungDiagram {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for YoungDiagram {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Orders diagrams by size, then lexicographically. A linear extension of
/// inclusion.
pub fn size_then_lex(a: &YoungDiagram, b: &YoungDiagram) -> Ordering {
    a.size().cmp(&b.size()).then_with(|| a.cmp(b))
}

pub fn transpose(lambda: &YoungDiagram) -> YoungDiagram {
    lambda.transpose()
}

pub fn negate(lambda: &Weight) -> Weight {
    lambda.negate()
}

pub fn twist(lambda: &Weight, t: i32) -> Weight {
    lambda.twist(t)
}

/// A word over `{0, 1}`. Positions are 1-based in the documentation, matching
/// `1 <= l_1 < l_2 < ...` for the positions of the zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryWord {
    bits: Vec<bool>,
}

impl BinaryWord {
    pub fn new(bits: Vec<bool>) -> Self {
        BinaryWord { bits }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn zeros(&self) -> usize {
        self.bits.iter().filter(|&&b| !b).count()
    }

    /// Every word of the given length, in lexicographic order.
    pub fn all(len: usize) -> impl Iterator<Item = BinaryWord> {
        (0u64..(1u64 << len)).map(move |mask| {
            BinaryWord::new((0..len).map(|i| mask >> (len - 1 - i) & 1 == 1).collect())
        })
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse {
                    input: s.to_string(),
                    reason: format!("unexpected character {c:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(BinaryWord::new)
    }
}

/// Maps a word with `h` zeros and `w` ones to the diagram
/// `(l_h - h, ..., l_2 - 2, l_1 - 1)` in `Y_{h,w}`, where `l_j` are the
/// 1-based positions of the zeros. Returns `(lambda, h, w)`.
pub fn word_to_diagram(word: &BinaryWord) -> (YoungDiagram, usize, usize) {
    let zeros: Vec<usize> = word
        .bits
        .iter()
        .enumerate()
        .filter(|(_, &b)| !b)
        .map(|(i, _)| i + 1)
        .collect();
    let h = zeros.len();
    let w = word.len() - h;
    let parts = zeros
        .iter()
        .enumerate()
        .rev()
        .map(|(j, &l)| (l - (j + 1)) as i32)
        .collect();
    (YoungDiagram::from_sorted(parts), h, w)
}

/// Inverse of [`word_to_diagram`].
pub fn diagram_to_word(lambda: &YoungDiagram, h: usize, w: usize) -> Result<BinaryWord> {
    lambda.check_block(h, w)?;
    let mut bits = vec![true; h + w];
    for j in 1..=h {
        // l_j = lambda_{h+1-j} + j
        let l = lambda.part(h - j) as usize + j;
        bits[l - 1] = false;
    }
    Ok(BinaryWord::new(bits))
}

/// The generator of the cyclic action: `a_0 a_1 ... a_n -> (1 - a_n) a_0 ... a_{n-1}`.
pub fn cyclic_step(word: &BinaryWord) -> BinaryWord {
    match word.bits.split_last() {
        None => word.clone(),
        Some((&last, rest)) => {
            let mut bits = Vec::with_capacity(word.len());
            bits.push(!last);
            bits.extend_from_slice(rest);
            BinaryWord::new(bits)
        }
    }
}

/// `lambda'` for `lambda` in `Y_{h,w}`, returned with its block shape:
/// `(lambda_1, ..., lambda_h, 0)` in `Y_{h+1,w-1}` when `lambda_1 < w`, and
/// `(lambda_2 + 1, ..., lambda_h + 1)` in `Y_{h-1,w+1}` when `lambda_1 = w`.
pub fn lambda_prime(lambda: &YoungDiagram, h: usize, w: usize) -> Result<(YoungDiagram, usize, usize)> {
    lambda.check_block(h, w)?;
    if h + w == 0 {
        return Err(Error::InvalidParameter("empty block has no cyclic action".into()));
    }
    if lambda.width() < w {
        let mut parts: Vec<i32> = (0..h).map(|i| lambda.part(i)).collect();
        parts.push(0);
        Ok((YoungDiagram::from_sorted(parts), h + 1, w - 1))
    } else {
        let parts = (1..h).map(|i| lambda.part(i) + 1).collect();
        Ok((YoungDiagram::from_sorted(parts), h - 1, w + 1))
    }
}

/// Staircase data for `lambda` in `Y_{h,w}` with `lambda_1 = w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StairData {
    pub lambda: YoungDiagram,
    pub h: usize,
    pub w: usize,
    pub lambda_prime: YoungDiagram,
    /// `lambda^(1), ..., lambda^(w)`, each of length `h`.
    pub truncations: Vec<YoungDiagram>,
    /// `nu_1 < ... < nu_w`, where `nu_i = |lambda| - |lambda^(i)|`.
    pub nus: Vec<usize>,
}

impl StairData {
    /// `lambda^(i)` for `0 <= i <= w`, with `lambda^(0) = lambda`.
    pub fn truncation(&self, i: usize) -> &YoungDiagram {
        if i == 0 {
            &self.lambda
        } else {
            &self.truncations[i - 1]
        }
    }

    /// `nu_i` for `0 <= i <= w`, with `nu_0 = 0`.
    pub fn nu(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.nus[i - 1]
        }
    }
}

/// For `0 < i <= w`, let `j` be the largest index with `lambda_j > w - i`;
/// then `lambda^(i) = (lambda_2 - 1, ..., lambda_j - 1, w - i, lambda_{j+1}, ..., lambda_h)`.
pub fn staircase_truncations(lambda: &YoungDiagram, h: usize, w: usize) -> Result<StairData> {
    lambda.check_block(h, w)?;
    if w == 0 || lambda.width() != w {
        return Err(Error::NotFullWidth {
            diagram: lambda.to_string(),
            w,
        });
    }
    let full: Vec<i32> = (0..h).map(|i| lambda.part(i)).collect();
    let size = lambda.size();
    let mut truncations = Vec::with_capacity(w);
    let mut nus = Vec::with_capacity(w);
    for i in 1..=w {
        let threshold = (w - i) as i32;
        // 1-based j; j >= 1 because lambda_1 = w > w - i.
        let j = full.iter().rposition(|&p| p > threshold).map(|x| x + 1).unwrap_or(1);
        let mut parts = Vec::with_capacity(h);
        parts.extend(full[1..j].iter().map(|&p| p - 1));
        parts.push(threshold);
        parts.extend_from_slice(&full[j..]);
        let trunc = YoungDiagram::from_sorted(parts);
        nus.push(size - trunc.size());
        truncations.push(trunc);
    }
    let (lambda_prime, _, _) = lambda_prime(lambda, h, w)?;
    Ok(StairData {
        lambda: YoungDiagram::from_sorted(full),
        h,
        w,
        lambda_prime,
        truncations,
        nus,
    })
}

/// All diagrams of `Y_{h,w}`, stored with length `h`, ordered by size and
/// then lexicographically.
pub fn enumerate_block(h: usize, w: usize) -> Vec<YoungDiagram> {
    fn rec(h: usize, max: i32, prefix: &mut Vec<i32>, out: &mut Vec<YoungDiagram>) {
        if prefix.len() == h {
            out.push(YoungDiagram::from_sorted(prefix.clone()));
            return;
        }
        for p in 0..=max {
            prefix.push(p);
            rec(h, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(h, w as i32, &mut Vec::with_capacity(h), &mut out);
    out.sort_by(size_then_lex);
    out
}

/// All dominant weights of length `k` with parts in `[lo, hi]`.
pub fn enumerate_weights(k: usize, lo: i32, hi: i32) -> Vec<Weight> {
    fn rec(k: usize, lo: i32, max: i32, prefix: &mut Vec<i32>, out: &mut Vec<Weight>) {
        if prefix.len() == k {
            out.push(Weight::from_sorted(prefix.clone()));
            return;
        }
        for p in lo..=max {
            prefix.push(p);
            rec(k, lo, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if lo <= hi {
        rec(k, lo, hi, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

pub fn diagram_stats(lambda: &YoungDiagram) -> (usize, usize, usize) {
    lambda.stats()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d(parts: &[i32]) -> YoungDiagram {
        YoungDiagram::new(parts.to_vec()).unwrap()
    }

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    /// Column-count oracle: the i-th part of the transpose is the number of
    /// boxes in column i, counted cell by cell.
    fn transpose_by_cells(lambda: &YoungDiagram) -> Vec<i32> {
        let mut cols = vec![0; lambda.width()];
        for &row in lambda.trimmed() {
            for c in cols.iter_mut().take(row as usize) {
                *c += 1;
            }
        }
        cols
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(transpose_by_cells(&d(&[3, 3, 1])), vec![3, 2, 2]);
        assert_eq!(d(&[3, 3, 1]).transpose(), d(&[3, 2, 2]));
        assert!(d(&[0]).transpose().parts().is_empty());
        assert_eq!(transpose_by_cells(&d(&[2, 1, 1])), vec![3, 1]);
        assert_eq!(d(&[2, 1, 1]).transpose(), d(&[3, 1]));
    }

    #[test]
    fn transpose_involution_and_block_bijection() {
        for h in 0..=8 {
            for w in 0..=(8 - h) {
                let block = enumerate_block(h, w);
                let mut image: Vec<_> = block.iter().map(|l| l.transpose()).collect();
                for (l, t) in block.iter().zip(&image) {
                    assert_eq!(&t.transpose(), l);
                    assert_eq!(t.parts(), transpose_by_cells(l).as_slice());
                    assert!(t.fits_in(w, h));
                }
                image.sort();
                image.dedup();
                assert_eq!(image.len(), enumerate_block(w, h).len());
            }
        }
    }

    #[test]
    fn inclusion_examples() {
        assert!(includes(&d(&[2, 1]).into_weight(), &d(&[3, 3, 1]).into_weight()));
        assert!(!includes(&d(&[2, 2]).into_weight(), &d(&[3, 1]).into_weight()));
        let l = d(&[4, 2, 2]).into_weight();
        assert!(includes(&l, &l));
    }

    #[test]
    fn negate_and_twist() {
        let l = Weight::new(vec![2, 0, -1]).unwrap();
        assert_eq!(l.negate().parts(), &[1, 0, -2]);
        assert_eq!(Weight::new(vec![2, 1]).unwrap().twist(3).parts(), &[5, 4]);
        for t in -3..=3 {
            assert_eq!(l.negate().twist(t), l.twist(-t).negate());
        }
    }

    #[test]
    fn diagram_equality_ignores_trailing_zeros() {
        assert_eq!(d(&[2, 1]), d(&[2, 1, 0, 0]));
        assert_eq!(d(&[0]), YoungDiagram::empty(0));
        assert_ne!(d(&[2, 1]), d(&[2, 1, 1]));
        assert_eq!(d(&[2, 1, 0]).to_string(), "2,1");
        assert_eq!(YoungDiagram::empty(3).to_string(), "0");
    }

    #[test]
    fn parse_and_reject() {
        assert_eq!("3,3,1".parse::<YoungDiagram>().unwrap(), d(&[3, 3, 1]));
        assert_eq!("0,0,-2,-4,-4".parse::<Weight>().unwrap().parts(), &[0, 0, -2, -4, -4]);
        assert!(matches!("1,2".parse::<Weight>(), Err(Error::NotDominant(_))));
        assert!(matches!("1,-1".parse::<YoungDiagram>(), Err(Error::NegativePart(_))));
        assert!(matches!("1,x".parse::<Weight>(), Err(Error::Parse { .. })));
        assert!(matches!("".parse::<Weight>(), Err(Error::Parse { .. })));
    }

    #[test]
    fn word_examples() {
        let w: BinaryWord = "1010".parse().unwrap();
        let (lambda, h, wid) = word_to_diagram(&w);
        assert_eq!((lambda, h, wid), (d(&[2, 1]), 2, 2));
        let (zero, h, _) = word_to_diagram(&"0000".parse().unwrap());
        assert_eq!(h, 4);
        assert!(zero.is_empty());
    }

    #[test]
    fn word_bijection_exhaustive() {
        for len in 1..=10 {
            for word in BinaryWord::all(len) {
                let (lambda, h, w) = word_to_diagram(&word);
                assert_eq!(h, word.zeros());
                assert!(lambda.fits_in(h, w));
                assert_eq!(diagram_to_word(&lambda, h, w).unwrap(), word);
            }
        }
        for h in 0..=5 {
            for w in 0..=5 {
                let block = enumerate_block(h, w);
                assert_eq!(block.len(), binom(h + w, h));
                for lambda in block {
                    let word = diagram_to_word(&lambda, h, w).unwrap();
                    assert_eq!(word_to_diagram(&word).0, lambda);
                }
            }
        }
    }

    #[test]
    fn cyclic_step_examples_and_order() {
        assert_eq!(cyclic_step(&"01".parse().unwrap()).to_string(), "00");
        assert_eq!(cyclic_step(&"11".parse().unwrap()).to_string(), "01");
        for len in 1..=8 {
            for word in BinaryWord::all(len) {
                let mut cur = word.clone();
                for _ in 0..2 * len {
                    cur = cyclic_step(&cur);
                }
                assert_eq!(cur, word);
            }
        }
    }

    #[test]
    fn lambda_prime_examples() {
        assert_eq!(lambda_prime(&d(&[3, 3, 1]), 3, 3).unwrap(), (d(&[4, 2]), 2, 4));
        let (lp, h, w) = lambda_prime(&d(&[2, 1]), 2, 3).unwrap();
        assert_eq!(lp.parts(), &[2, 1, 0]);
        assert_eq!((h, w), (3, 2));
        assert!(lambda_prime(&d(&[4]), 2, 3).is_err());
    }

    #[test]
    fn lambda_prime_transports_cyclic_step() {
        for len in 1..=8 {
            for h in 0..=len {
                let w = len - h;
                for lambda in enumerate_block(h, w) {
                    let (lp, h2, w2) = lambda_prime(&lambda, h, w).unwrap();
                    let word = cyclic_step(&diagram_to_word(&lambda, h, w).unwrap());
                    let (via_word, h3, w3) = word_to_diagram(&word);
                    assert_eq!((lp, h2, w2), (via_word, h3, w3), "lambda = {lambda} in Y_{h},{w}");
                }
            }
        }
    }

    #[test]
    fn staircase_truncations_worked_example() {
        let data = staircase_truncations(&d(&[3, 3, 1]), 3, 3).unwrap();
        assert_eq!(data.truncations, vec![d(&[2, 2, 1]), d(&[2, 1, 1]), d(&[2, 0, 0])]);
        assert_eq!(data.nus, vec![2, 3, 5]);
        assert_eq!(data.lambda_prime, d(&[4, 2]));
    }

    #[test]
    fn staircase_single_row() {
        for w in 1..=6 {
            let data = staircase_truncations(&d(&[w as i32]), 1, w).unwrap();
            for i in 1..=w {
                assert_eq!(data.truncation(i), &d(&[(w - i) as i32]));
                assert_eq!(data.nu(i), i);
            }
        }
    }

    #[test]
    fn staircase_rejects_short_first_row() {
        assert!(matches!(
            staircase_truncations(&d(&[2, 1]), 3, 3),
            Err(Error::NotFullWidth { .. })
        ));
        assert!(matches!(
            staircase_truncations(&d(&[4, 1]), 3, 3),
            Err(Error::BlockMismatch { .. })
        ));
    }

    #[test]
    fn staircase_invariants_exhaustive() {
        for len in 2..=8 {
            for w in 1..len {
                let h = len - w;
                for lambda in enumerate_block(h, w).into_iter().filter(|l| l.width() == w) {
                    let data = staircase_truncations(&lambda, h, w).unwrap();
                    let mut prev = &lambda;
                    for i in 1..=w {
                        let t = data.truncation(i);
                        assert!(prev.contains(t) && prev != t, "{lambda}: {prev} vs {t}");
                        assert_eq!(t.size() + data.nu(i), lambda.size());
                        assert_eq!(t.len(), h);
                        prev = t;
                    }
                    assert!(data.nus.windows(2).all(|p| p[0] < p[1]));
                }
            }
        }
    }

    #[test]
    fn stats_examples() {
        assert_eq!(diagram_stats(&d(&[3, 3, 1])), (3, 3, 2));
        assert_eq!(diagram_stats(&YoungDiagram::empty(4)), (0, 0, 0));
        assert_eq!(diagram_stats(&d(&[2, 2, 2])), (3, 2, 3));
        assert_eq!(enumerate_block(2, 2).len(), 6);
    }

    #[test]
    fn block_enumeration_is_a_linear_extension() {
        let block = enumerate_block(3, 3);
        for (i, a) in block.iter().enumerate() {
            for b in &block[..i] {
                assert!(!(a.contains(b) && a != b) || a.size() > b.size());
                assert!(!(b.contains(a) && a != b), "{b} listed before {a} but contains it");
            }
        }
    }
    proptest! {
        #[test]
        fn transpose_is_an_involution(v in proptest::collection::vec(0i32..=12, 0..=12)) {
            let mut v = v;
            v.sort_unstable_by(|a, b| b.cmp(a));
            let lambda = YoungDiagram::new(v).unwrap();
            let t = lambda.transpose();
            prop_assert_eq!(t.size(), lambda.size());
            prop_assert_eq!(t.height(), lambda.width());
            prop_assert_eq!(t.transpose(), lambda);
        }
    }
}
