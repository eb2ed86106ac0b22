//! Zippering of composition pairs into binary words and the tensors built from them.
//!
//! A zipper word is stored packed in a `u64`, bit `j` holding the `j`-th printed
//! symbol counted from the left.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::compositions::{binomial, p_set, q_set, Composition};
use crate::error::{Error, Result};
use crate::limits::{self, MAX_K};

/// Binary word of length 2k+1 with k+1 zeros and k ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZipperWord {
    bits: u64,
    k: u32,
}

impl ZipperWord {
    /// Builds a word from packed bits. Fails unless the weight is `k`.
    pub fn from_packed(bits: u64, k: u32) -> Result<Self> {
        limits::check(k, MAX_K)?;
        let len = 2 * k + 1;
        if bits >> len != 0 {
            return Err(Error::malformed(format!("bits set beyond length {len}")));
        }
        if bits.count_ones() != k {
            return Err(Error::malformed(format!(
                "weight {} but a word of length {len} needs {k} ones",
                bits.count_ones()
            )));
        }
        Ok(ZipperWord { bits, k })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        (2 * self.k + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn packed(&self) -> u64 {
        self.bits
    }

    /// Symbol at position `j` (true = 1).
    pub fn bit(&self, j: usize) -> bool {
        self.bits >> j & 1 == 1
    }

    pub fn symbols(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len()).map(move |j| self.bit(j))
    }

    /// True when the word is a 0 followed by a balanced Dyck word.
    ///
    /// Reading 0 as +1 and 1 as -1, every prefix after the first symbol must
    /// stay at height >= 1.
    pub fn is_tree_word(&self) -> bool {
        is_tree_bits(self.bits, self.len())
    }

    /// Run-length decoding into the (row, column) composition pair.
    pub fn unzip(&self) -> Result<(Composition, Composition)> {
        if self.bit(0) {
            return Err(Error::malformed(format!("{self} does not begin with 0")));
        }
        if !self.bit(self.len() - 1) {
            return Err(Error::malformed(format!("{self} does not end with 1")));
        }
        let mut zeros = Vec::new();
        let mut ones = Vec::new();
        let mut run = 0u32;
        let mut current = false;
        for s in self.symbols() {
            if s == current {
                run += 1;
            } else {
                if current {
                    ones.push(run);
                } else {
                    zeros.push(run);
                }
                current = s;
                run = 1;
            }
        }
        ones.push(run);
        Ok((Composition::new(zeros)?, Composition::new(ones)?))
    }
}

pub(crate) fn is_tree_bits(bits: u64, len: usize) -> bool {
    if bits & 1 == 1 {
        return false;
    }
    let mut height: i32 = 1;
    for j in 1..len {
        height += if bits >> j & 1 == 1 { -1 } else { 1 };
        if height < 1 {
            return false;
        }
    }
    height == 1
}

impl fmt::Display for ZipperWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.symbols() {
            f.write_str(if s { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Parses a 0/1 string into packed bits, returning (bits, length).
pub(crate) fn parse_bits(s: &str) -> Result<(u64, usize)> {
    let s = s.trim();
    if s.len() > 63 {
        return Err(Error::Capacity {
            k: s.len() / 2,
            limit: MAX_K as usize,
        });
    }
    let mut bits = 0u64;
    for (j, c) in s.chars().enumerate() {
        match c {
            '0' => {}
            '1' => bits |= 1 << j,
            other => {
                return Err(Error::parse(
                    format!("char {j}"),
                    format!("{other:?} is not a binary digit"),
                ))
            }
        }
    }
    Ok((bits, s.len()))
}

impl FromStr for ZipperWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (bits, len) = parse_bits(s)?;
        if len % 2 == 0 {
            return Err(Error::malformed(format!("length {len} is even")));
        }
        ZipperWord::from_packed(bits, (len / 2) as u32)
    }
}

fn check_pair(a: &Composition, b: &Composition) -> Result<u32> {
    if a.len() != b.len() {
        return Err(Error::domain(format!(
            "{a} has {} parts but {b} has {}",
            a.len(),
            b.len()
        )));
    }
    let k = b.sum();
    if a.sum() != k + 1 {
        return Err(Error::domain(format!(
            "row {a} must sum to {} (column {b} sums to {k})",
            k + 1
        )));
    }
    if a.first() < 2 {
        return Err(Error::domain(format!(
            "row {a} must start with a part >= 2"
        )));
    }
    Ok(k)
}

/// Interleaves `a` and `b` as `0^{a1} 1^{b1} ... 0^{ai} 1^{bi}`.
pub fn zipper(a: &Composition, b: &Composition) -> Result<ZipperWord> {
    let k = check_pair(a, b)?;
    limits::check(k, MAX_K)?;
    let mut bits = 0u64;
    let mut pos = 0u32;
    for (&za, &ob) in a.parts().iter().zip(b.parts()) {
        pos += za;
        bits |= ((1u64 << ob) - 1) << pos;
        pos += ob;
    }
    ZipperWord::from_packed(bits, k)
}

/// 1 iff every partial sum of `a_j - b_j` is positive.
pub fn tensor_entry(a: &Composition, b: &Composition) -> Result<bool> {
    check_pair(a, b)?;
    Ok(entry_unchecked(a, b))
}

fn entry_unchecked(a: &Composition, b: &Composition) -> bool {
    let mut partial: i64 = 0;
    for (&x, &y) in a.parts().iter().zip(b.parts()) {
        partial += i64::from(x) - i64::from(y);
        if partial <= 0 {
            return false;
        }
    }
    true
}

/// The square 0/1 matrix `T^k_i` with its composition headers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor {
    k: u32,
    i: u32,
    rows: Vec<Composition>,
    cols: Vec<Composition>,
    entries: Vec<bool>,
}

impl Tensor {
    /// Assembles a tensor from parts, checking shape and header families.
    pub fn from_parts(
        k: u32,
        i: u32,
        rows: Vec<Composition>,
        cols: Vec<Composition>,
        entries: Vec<bool>,
    ) -> Result<Self> {
        let expected_rows = p_set(k, i)?;
        let expected_cols = q_set(k, i)?;
        if rows != expected_rows {
            return Err(Error::domain(
                "row headers are not P(k, i) in descending lex order",
            ));
        }
        if cols != expected_cols {
            return Err(Error::domain(
                "column headers are not Q(k, i) in descending lex order",
            ));
        }
        let n = rows.len();
        if entries.len() != n * n {
            return Err(Error::domain(format!(
                "{} entries for a {n}x{n} tensor",
                entries.len()
            )));
        }
        Ok(Tensor {
            k,
            i,
            rows,
            cols,
            entries,
        })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn i(&self) -> u32 {
        self.i
    }

    pub fn side(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Composition] {
        &self.rows
    }

    pub fn cols(&self) -> &[Composition] {
        &self.cols
    }

    pub fn get(&self, p: usize, q: usize) -> bool {
        self.entries[p * self.side() + q]
    }

    pub fn entries(&self) -> &[bool] {
        &self.entries
    }

    pub fn row_bits(&self, p: usize) -> &[bool] {
        let n = self.side();
        &self.entries[p * n..(p + 1) * n]
    }

    pub fn unit_count(&self) -> usize {
        self.entries.iter().filter(|&&e| e).count()
    }

    /// Zero cells as zero-based (row, col) pairs.
    pub fn zero_cells(&self) -> BTreeSet<(usize, usize)> {
        let n = self.side();
        (0..n)
            .flat_map(|p| (0..n).map(move |q| (p, q)))
            .filter(|&(p, q)| !self.get(p, q))
            .collect()
    }

    /// Zipper words of the unit entries in row-major order.
    pub fn tree_words(&self) -> Vec<(usize, usize, ZipperWord)> {
        let n = self.side();
        let mut out = Vec::with_capacity(self.unit_count());
        for p in 0..n {
            for q in 0..n {
                if self.get(p, q) {
                    let w = zipper(&self.rows[p], &self.cols[q]).expect("headers are valid pairs");
                    out.push((p, q, w));
                }
            }
        }
        out
    }

    /// Same headers, entries replaced.
    pub(crate) fn with_entries(&self, k: u32, i: u32, entries: Vec<bool>) -> Result<Tensor> {
        Tensor::from_parts(k, i, p_set(k, i)?, q_set(k, i)?, entries)
    }
}

/// Builds `T^k_i`: rows `p_set(k, i)`, columns `q_set(k, i)`.
pub fn build_tensor(k: u32, i: u32) -> Result<Tensor> {
    limits::check(k, MAX_K)?;
    let rows = p_set(k, i)?;
    let cols = q_set(k, i)?;
    debug_assert_eq!(
        rows.len() as u64,
        binomial(u64::from(k - 1), u64::from(i - 1))
    );
    let entries: Vec<bool> = rows
        .par_iter()
        .flat_map_iter(|a| cols.iter().map(move |b| entry_unchecked(a, b)))
        .collect();
    Ok(Tensor {
        k,
        i,
        rows,
        cols,
        entries,
    })
}
