//! Integer compositions and the row/column header families of the tensors.
//!
//! Every list produced here is in descending lexicographic order: parts are
//! compared left to right and the larger part comes first. The order is
//! produced directly by the generator, never by sorting afterwards.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An ordered list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Composition {
    parts: Vec<u32>,
    sum: u32,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::domain("a composition needs at least one part"));
        }
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::domain(format!("part {pos} is zero")));
        }
        let sum = parts.iter().sum();
        Ok(Composition { parts, sum })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn sum(&self) -> u32 {
        self.sum
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn first(&self) -> u32 {
        self.parts[0]
    }

    /// Number of trailing parts equal to 1.
    pub fn trailing_ones(&self) -> usize {
        self.parts.iter().rev().take_while(|&&p| p == 1).count()
    }

    /// True when the `count` parts just before the last one are all 1.
    pub fn penultimate_ones(&self, count: usize) -> bool {
        let n = self.parts.len();
        count < n && self.parts[n - 1 - count..n - 1].iter().all(|&p| p == 1)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.iter().all(|&p| p <= 9) {
            for p in &self.parts {
                write!(f, "{p}")?;
            }
            Ok(())
        } else {
            let joined: Vec<String> = self.parts.iter().map(u32::to_string).collect();
            f.write_str(&joined.join(","))
        }
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parts = if s.contains(',') {
            s.split(',')
                .enumerate()
                .map(|(i, tok)| {
                    tok.trim()
                        .parse::<u32>()
                        .map_err(|e| Error::parse(format!("part {i}"), e.to_string()))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .enumerate()
                .map(|(i, c)| {
                    c.to_digit(10).ok_or_else(|| {
                        Error::parse(format!("char {i}"), format!("{c:?} is not a digit"))
                    })
                })
                .collect::<Result<Vec<_>>>()?
        };
        Composition::new(parts)
    }
}

impl TryFrom<String> for Composition {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Composition> for String {
    fn from(c: Composition) -> String {
        c.to_string()
    }
}

/// Binomial coefficient C(n, r); zero when r > n.
pub fn binomial(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for j in 0..r {
        acc = acc * u128::from(n - j) / u128::from(j + 1);
    }
    acc as u64
}

fn generate(total: u32, parts: u32, first_min: u32) -> Vec<Composition> {
    fn rec(prefix: &mut Vec<u32>, rem: u32, left: u32, min: u32, out: &mut Vec<Composition>) {
        if left == 1 {
            if rem >= min {
                prefix.push(rem);
                out.push(Composition {
                    parts: prefix.clone(),
                    sum: prefix.iter().sum(),
                });
                prefix.pop();
            }
            return;
        }
        // leave at least one for each remaining part
        let max = rem - (left - 1);
        for a in (min..=max).rev() {
            prefix.push(a);
            rec(prefix, rem - a, left - 1, 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::with_capacity(binomial(u64::from(total - 1), u64::from(parts - 1)) as usize);
    if parts <= total {
        rec(
            &mut Vec::with_capacity(parts as usize),
            total,
            parts,
            first_min,
            &mut out,
        );
    }
    out
}

/// All compositions of `n` into exactly `parts` parts, descending lex.
pub fn compositions_desc_lex(n: u32, parts: u32) -> Result<Vec<Composition>> {
    if parts < 1 || parts > n {
        return Err(Error::domain(format!(
            "cannot split {n} into {parts} positive parts"
        )));
    }
    Ok(generate(n, parts, 1))
}

fn check_family(k: u32, i: u32) -> Result<()> {
    if k < 2 {
        return Err(Error::domain(format!("k = {k}; need k >= 2")));
    }
    if i < 1 || i > k {
        return Err(Error::domain(format!("length i = {i} outside 1..={k}")));
    }
    Ok(())
}

/// Column headers: compositions of `k` with `i` parts.
pub fn q_set(k: u32, i: u32) -> Result<Vec<Composition>> {
    check_family(k, i)?;
    compositions_desc_lex(k, i)
}

/// Row headers: compositions of `k + 1` with `i` parts whose first part is at least 2.
pub fn p_set(k: u32, i: u32) -> Result<Vec<Composition>> {
    check_family(k, i)?;
    Ok(generate(k + 1, i, 2))
}

/// Zero-based position of `c` within `compositions_desc_lex(n, c.len())`.
pub fn rank_desc_lex(c: &Composition, n: u32) -> Result<usize> {
    if c.sum() != n {
        return Err(Error::domain(format!("{c} sums to {}, not {n}", c.sum())));
    }
    let len = c.len();
    let mut rank: u64 = 0;
    let mut rem = n;
    for (j, &part) in c.parts().iter().enumerate() {
        let after = (len - j - 1) as u32;
        if after == 0 {
            break;
        }
        // every larger value at this position precedes c
        let max = rem - after;
        for v in part + 1..=max {
            rank += binomial(u64::from(rem - v - 1), u64::from(after - 1));
        }
        rem -= part;
    }
    Ok(rank as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strs(v: &[Composition]) -> Vec<String> {
        v.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn small_families() {
        assert_eq!(strs(&compositions_desc_lex(3, 2).unwrap()), ["21", "12"]);
        assert_eq!(
            strs(&compositions_desc_lex(5, 2).unwrap()),
            ["41", "32", "23", "14"]
        );
        assert_eq!(strs(&compositions_desc_lex(4, 4).unwrap()), ["1111"]);
        assert_eq!(strs(&q_set(3, 1).unwrap()), ["3"]);
        assert_eq!(strs(&p_set(3, 2).unwrap()), ["31", "22"]);
        assert_eq!(strs(&p_set(5, 1).unwrap()), ["6"]);
        assert_eq!(q_set(8, 4).unwrap()[0].to_string(), "5111");
        assert_eq!(p_set(8, 4).unwrap().last().unwrap().to_string(), "2115");
    }

    #[test]
    fn table_one_k5() {
        assert_eq!(
            strs(&p_set(5, 3).unwrap()),
            ["411", "321", "312", "231", "222", "213"]
        );
        assert_eq!(
            strs(&q_set(5, 3).unwrap()),
            ["311", "221", "212", "131", "122", "113"]
        );
        assert_eq!(
            strs(&q_set(5, 4).unwrap()),
            ["2111", "1211", "1121", "1112"]
        );
    }

    #[test]
    fn domain_errors() {
        assert!(compositions_desc_lex(3, 0).is_err());
        assert!(compositions_desc_lex(3, 4).is_err());
        assert!(q_set(1, 1).is_err());
        assert!(p_set(4, 5).is_err());
        assert!(Composition::new(vec![]).is_err());
        assert!(Composition::new(vec![2, 0, 1]).is_err());
        let c: Composition = "21".parse().unwrap();
        assert!(rank_desc_lex(&c, 4).is_err());
    }

    #[test]
    fn rank_examples() {
        let c = |s: &str| s.parse::<Composition>().unwrap();
        assert_eq!(rank_desc_lex(&c("21"), 3).unwrap(), 0);
        assert_eq!(rank_desc_lex(&c("12"), 3).unwrap(), 1);
        let pos = p_set(8, 4)
            .unwrap()
            .iter()
            .position(|x| x.to_string() == "3114")
            .unwrap();
        assert_eq!(rank_desc_lex(&c("3114"), 9).unwrap(), pos);
    }

    #[test]
    fn serialization() {
        let c: Composition = "2111".parse().unwrap();
        assert_eq!(c.parts(), &[2, 1, 1, 1]);
        let big = Composition::new(vec![12, 1, 3]).unwrap();
        assert_eq!(big.to_string(), "12,1,3");
        assert_eq!("12,1,3".parse::<Composition>().unwrap(), big);
        assert!("2a1".parse::<Composition>().is_err());
    }

    #[test]
    fn suffix_helpers() {
        let c: Composition = "3311".parse().unwrap();
        assert_eq!(c.trailing_ones(), 2);
        let r: Composition = "5112".parse().unwrap();
        assert!(r.penultimate_ones(2));
        assert!(!r.penultimate_ones(3));
        assert_eq!(binomial(10, 5), 252);
        assert_eq!(binomial(3, 5), 0);
    }
}
