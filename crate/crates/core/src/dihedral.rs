//! Dihedral classes of middle-level words.
//!
//! The group acting on words of length 2k+1 is generated by the cyclic
//! translation and the complemented reversal (reverse, then flip every bit).
//! Each class holds exactly one tree word, which serves as its canonical
//! representative.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::compositions::rank_desc_lex;
use crate::error::{Error, Result};
use crate::limits::{self, Limits, MAX_K};
use crate::zipper::{is_tree_bits, parse_bits, ZipperWord};

/// Binary word of odd length 2k+1 and weight k or k+1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MiddleWord {
    bits: u64,
    len: u32,
}

impl MiddleWord {
    pub fn from_packed(bits: u64, len: u32) -> Result<Self> {
        if len.is_multiple_of(2) {
            return Err(Error::malformed(format!("length {len} is even")));
        }
        let k = len / 2;
        limits::check(k, MAX_K)?;
        if bits >> len != 0 {
            return Err(Error::malformed(format!("bits set beyond length {len}")));
        }
        let weight = bits.count_ones();
        if weight != k && weight != k + 1 {
            return Err(Error::malformed(format!(
                "weight {weight} is not a middle level of length {len}"
            )));
        }
        Ok(MiddleWord { bits, len })
    }

    pub fn k(&self) -> u32 {
        self.len / 2
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn packed(&self) -> u64 {
        self.bits
    }

    fn mask(&self) -> u64 {
        (1u64 << self.len) - 1
    }

    /// `output[j] = input[(j + t) mod (2k+1)]`.
    pub fn rotate(&self, t: i64) -> MiddleWord {
        let n = i64::from(self.len);
        let t = t.rem_euclid(n) as u32;
        if t == 0 {
            return *self;
        }
        let bits = ((self.bits >> t) | (self.bits << (self.len - t))) & self.mask();
        MiddleWord {
            bits,
            len: self.len,
        }
    }

    /// `output[j] = 1 - input[2k - j]`.
    pub fn comp_reverse(&self) -> MiddleWord {
        let reversed = self.bits.reverse_bits() >> (64 - self.len);
        MiddleWord {
            bits: !reversed & self.mask(),
            len: self.len,
        }
    }

    pub fn is_tree_word(&self) -> bool {
        is_tree_bits(self.bits, self.len())
    }
}

impl fmt::Display for MiddleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.len {
            f.write_str(if self.bits >> j & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for MiddleWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (bits, len) = parse_bits(s)?;
        MiddleWord::from_packed(bits, len as u32)
    }
}

impl From<ZipperWord> for MiddleWord {
    fn from(w: ZipperWord) -> Self {
        MiddleWord {
            bits: w.packed(),
            len: w.len() as u32,
        }
    }
}

/// Closure of `{w}` under translation and complemented reversal.
pub fn orbit(w: &MiddleWord) -> BTreeSet<MiddleWord> {
    let mut seen = BTreeSet::new();
    let mut frontier = vec![*w];
    while let Some(x) = frontier.pop() {
        if seen.insert(x) {
            frontier.push(x.rotate(1));
            frontier.push(x.comp_reverse());
        }
    }
    seen
}

/// The unique tree word in the class of `w`.
pub fn canonical_tree_word(w: &MiddleWord) -> Result<ZipperWord> {
    let members = orbit(w);
    let mut trees = members.iter().filter(|m| m.is_tree_word());
    match (trees.next(), trees.next()) {
        (Some(t), None) => ZipperWord::from_packed(t.bits, t.k()),
        (None, _) => Err(Error::StructureViolation(format!(
            "class of {w} contains no tree word"
        ))),
        (Some(a), Some(b)) => Err(Error::StructureViolation(format!(
            "class of {w} contains several tree words ({a}, {b}, ...)"
        ))),
    }
}

/// Position of a tree word in its tensor: (length i, zero-based row p, zero-based column q).
pub fn tensor_position(w: &ZipperWord) -> Result<(u32, usize, usize)> {
    let (a, b) = w.unzip()?;
    let k = w.k();
    Ok((
        a.len() as u32,
        rank_desc_lex(&a, k + 1)?,
        rank_desc_lex(&b, k)?,
    ))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitClass {
    pub canonical: ZipperWord,
    pub members: BTreeSet<MiddleWord>,
}

impl OrbitClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Words of length `len` and weight `weight`, increasing as packed integers.
fn words_of_weight(len: u32, weight: u32) -> Vec<u64> {
    let mut out = Vec::new();
    if weight == 0 {
        out.push(0);
        return out;
    }
    let limit = 1u64 << len;
    let mut x = (1u64 << weight) - 1;
    while x < limit {
        out.push(x);
        // next word with the same popcount
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    out
}

/// Partitions every middle-level word of length 2k+1 into dihedral classes.
pub fn enumerate_orbits(k: u32) -> Result<Vec<OrbitClass>> {
    enumerate_orbits_with(k, &Limits::default())
}

pub fn enumerate_orbits_with(k: u32, limits: &Limits) -> Result<Vec<OrbitClass>> {
    if k < 1 {
        return Err(Error::domain("k must be positive"));
    }
    limits.check_orbit(k)?;
    let len = 2 * k + 1;
    let mut words = words_of_weight(len, k);
    words.extend(words_of_weight(len, k + 1));

    let labelled: Vec<(ZipperWord, MiddleWord)> = words
        .par_iter()
        .map(|&bits| {
            let w = MiddleWord { bits, len };
            canonical_tree_word(&w).map(|c| (c, w))
        })
        .collect::<Result<_>>()?;

    let mut grouped: BTreeMap<ZipperWord, BTreeSet<MiddleWord>> = BTreeMap::new();
    for (c, w) in labelled {
        grouped.entry(c).or_default().insert(w);
    }
    let mut classes = Vec::with_capacity(grouped.len());
    for (canonical, members) in grouped {
        if members != orbit(&canonical.into()) {
            return Err(Error::StructureViolation(format!(
                "words labelled by {canonical} do not form a single class"
            )));
        }
        classes.push(OrbitClass { canonical, members });
    }
    let mut keyed = classes
        .into_iter()
        .map(|c| tensor_position(&c.canonical).map(|pos| (pos, c)))
        .collect::<Result<Vec<_>>>()?;
    keyed.sort_by_key(|(pos, _)| *pos);
    Ok(keyed.into_iter().map(|(_, c)| c).collect())
}

#[derive(Debug, Serialize)]
struct OrbitJson {
    canonical: String,
    size: usize,
}

#[derive(Debug, Serialize)]
struct OrbitsJson {
    k: u32,
    orbit_count: usize,
    orbits: Vec<OrbitJson>,
}

/// `{ "k", "orbit_count", "orbits": [{ "canonical", "size" }] }`
pub fn orbits_to_json(k: u32, classes: &[OrbitClass]) -> String {
    let doc = OrbitsJson {
        k,
        orbit_count: classes.len(),
        orbits: classes
            .iter()
            .map(|c| OrbitJson {
                canonical: c.canonical.to_string(),
                size: c.size(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> MiddleWord {
        s.parse().unwrap()
    }

    // index-arithmetic oracle on strings
    fn rotate_oracle(s: &str, t: usize) -> String {
        let n = s.len();
        (0..n).map(|j| s.as_bytes()[(j + t) % n] as char).collect()
    }

    #[test]
    fn rotate_examples() {
        assert_eq!(m("00101").rotate(0).to_string(), "00101");
        assert_eq!(m("00011").rotate(2).to_string(), "01100");
        assert_eq!(rotate_oracle("00011", 2), "01100");
        assert_eq!(m("00011").rotate(5).to_string(), "00011");
        assert_eq!(m("00011").rotate(-3).to_string(), rotate_oracle("00011", 2));
    }

    #[test]
    fn comp_reverse_examples() {
        assert_eq!(m("00011").comp_reverse().to_string(), "00111");
        assert_eq!(m("00101").comp_reverse().to_string(), "01011");
        let w = m("0010111");
        assert_eq!(w.comp_reverse().comp_reverse(), w);
        assert_eq!(w.weight() + w.comp_reverse().weight(), 7);
    }

    #[test]
    fn rejects_non_middle_words() {
        assert!("0000".parse::<MiddleWord>().is_err());
        assert!("00001".parse::<MiddleWord>().is_err());
        assert!("11101".parse::<MiddleWord>().is_err());
    }

    #[test]
    fn orbit_examples() {
        let o = orbit(&m("00011"));
        let mut expected = BTreeSet::new();
        for t in 0..5 {
            expected.insert(m("00011").rotate(t));
            expected.insert(m("00111").rotate(t));
        }
        assert_eq!(o, expected);
        let other = orbit(&m("00101"));
        assert_eq!(other.len(), 10);
        assert!(o.is_disjoint(&other));
        assert!(o.contains(&m("00011")));
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(
            canonical_tree_word(&m("11000")).unwrap().to_string(),
            "00011"
        );
        assert_eq!(
            canonical_tree_word(&m("0010101")).unwrap().to_string(),
            "0010101"
        );
        assert_eq!(
            canonical_tree_word(&m("00111")).unwrap().to_string(),
            "00011"
        );
    }

    #[test]
    fn enumerate_small() {
        let two = enumerate_orbits(2).unwrap();
        assert_eq!(two.len(), 2);
        assert!(two.iter().all(|c| c.size() == 10));
        let three: Vec<String> = enumerate_orbits(3)
            .unwrap()
            .iter()
            .map(|c| c.canonical.to_string())
            .collect();
        assert_eq!(
            three,
            ["0000111", "0001101", "0001011", "0010011", "0010101"]
        );
        assert_eq!(enumerate_orbits(4).unwrap().len(), 14);
        assert!(matches!(enumerate_orbits(10), Err(Error::Capacity { .. })));
        assert!(Limits::uniform(10).check_orbit(10).is_ok());
    }

    #[test]
    fn orbits_json_shape() {
        let classes = enumerate_orbits(2).unwrap();
        let v: serde_json::Value = serde_json::from_str(&orbits_to_json(2, &classes)).unwrap();
        assert_eq!(v["k"], 2);
        assert_eq!(v["orbit_count"], 2);
        assert_eq!(v["orbits"][0]["size"], 10);
        assert_eq!(v["orbits"][1]["canonical"], "00101");
    }

    #[test]
    fn weight_enumeration() {
        assert_eq!(words_of_weight(5, 2).len(), 10);
        assert_eq!(words_of_weight(7, 3).len(), 35);
    }
}
