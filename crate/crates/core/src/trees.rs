//! Ordered rooted plane trees and their tree words.
//!
//! A tree word `0 w` decodes by dropping the leading 0, which seats the root,
//! and walking `w`: 0 descends to a new rightmost child, 1 climbs back to the
//! parent.

use std::fmt::{self, Write as _};

use crate::compositions::binomial;
use crate::error::{Error, Result};
use crate::limits::{self, Limits, MAX_K};
use crate::zipper::{build_tensor, ZipperWord};

/// Plane tree stored as the child count of each vertex in depth-first preorder.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedTree {
    child_counts: Vec<u32>,
}

impl OrderedTree {
    /// Validates a preorder child-count sequence.
    pub fn new(child_counts: Vec<u32>) -> Result<Self> {
        if child_counts.is_empty() {
            return Err(Error::domain("a tree has at least its root"));
        }
        // Each vertex is owed once by its parent; the sequence is complete
        // exactly when the debt reaches zero at the last vertex.
        let mut open: i64 = 1;
        for (v, &c) in child_counts.iter().enumerate() {
            open += i64::from(c) - 1;
            if open == 0 && v + 1 != child_counts.len() {
                return Err(Error::domain(format!(
                    "preorder sequence closes early at vertex {v}"
                )));
            }
        }
        if open != 0 {
            return Err(Error::domain("preorder child counts do not form a tree"));
        }
        Ok(OrderedTree { child_counts })
    }

    pub fn child_counts(&self) -> &[u32] {
        &self.child_counts
    }

    pub fn edges(&self) -> usize {
        self.child_counts.len() - 1
    }

    pub fn vertices(&self) -> usize {
        self.child_counts.len()
    }

    pub fn leaves(&self) -> usize {
        self.child_counts.iter().filter(|&&c| c == 0).count()
    }

    /// Preorder walk as descend (false) / ascend (true) steps.
    fn steps(&self) -> Vec<bool> {
        let mut out = Vec::with_capacity(2 * self.edges());
        let mut next = 1;
        let mut remaining = vec![self.child_counts[0]];
        while let Some(top) = remaining.last_mut() {
            if *top > 0 {
                *top -= 1;
                out.push(false);
                remaining.push(self.child_counts[next]);
                next += 1;
            } else {
                remaining.pop();
                if !remaining.is_empty() {
                    out.push(true);
                }
            }
        }
        out
    }

    /// Balanced-parentheses serialization of length 2k.
    pub fn to_parens(&self) -> String {
        self.steps()
            .into_iter()
            .map(|up| if up { ')' } else { '(' })
            .collect()
    }

    pub fn from_parens(s: &str) -> Result<Self> {
        let mut word = String::with_capacity(s.len() + 1);
        word.push('0');
        for (j, ch) in s.trim().chars().enumerate() {
            match ch {
                '(' => word.push('0'),
                ')' => word.push('1'),
                other => {
                    return Err(Error::parse(
                        format!("char {j}"),
                        format!("unexpected {other:?}"),
                    ))
                }
            }
        }
        let w: ZipperWord = word.parse()?;
        decode(&w)
    }

    /// Maximal runs of consecutive descents in the preorder walk.
    pub fn descent_runs(&self) -> usize {
        let steps = self.steps();
        (0..steps.len())
            .filter(|&j| !steps[j] && (j == 0 || steps[j - 1]))
            .count()
    }

    /// DOT graph with parent -> child edges listed in preorder.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph tree {\n");
        let mut next = 1usize;
        let mut stack: Vec<(usize, u32)> = vec![(0, self.child_counts[0])];
        let _ = writeln!(out, "  0;");
        while let Some((v, left)) = stack.last_mut() {
            if *left > 0 {
                *left -= 1;
                let parent = *v;
                let child = next;
                next += 1;
                let _ = writeln!(out, "  {parent} -> {child};");
                stack.push((child, self.child_counts[child]));
            } else {
                stack.pop();
            }
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Display for OrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_parens())
    }
}

/// Reconstructs the ordered tree of a tree word.
pub fn decode(w: &ZipperWord) -> Result<OrderedTree> {
    if !w.is_tree_word() {
        return Err(Error::domain(format!("{w} is not a tree word")));
    }
    let mut counts = vec![0u32];
    let mut path = vec![0usize];
    for up in w.symbols().skip(1) {
        if up {
            path.pop();
        } else {
            let parent = *path.last().expect("tree words never climb above the root");
            counts[parent] += 1;
            path.push(counts.len());
            counts.push(0);
        }
    }
    debug_assert_eq!(path, [0]);
    Ok(OrderedTree {
        child_counts: counts,
    })
}

/// Inverse of [`decode`]: "0" followed by the preorder walk.
pub fn encode(t: &OrderedTree) -> Result<ZipperWord> {
    let k = t.edges() as u32;
    limits::check(k, MAX_K)?;
    let mut bits = 0u64;
    for (j, up) in t.steps().into_iter().enumerate() {
        if up {
            bits |= 1 << (j + 1);
        }
    }
    ZipperWord::from_packed(bits, k)
}

pub fn catalan(k: u64) -> u64 {
    binomial(2 * k, k) / (k + 1)
}

/// Dyck words of semilength `k` with `i` peaks.
pub fn narayana(k: u64, i: u64) -> u64 {
    if k == 0 || i == 0 || i > k {
        return 0;
    }
    binomial(k, i) * binomial(k, i - 1) / k
}

/// Total unit entries over `T^k_1 .. T^k_k`.
pub fn count_trees(k: u32) -> Result<u64> {
    count_trees_with(k, &Limits::default())
}

pub fn count_trees_with(k: u32, limits: &Limits) -> Result<u64> {
    if k < 2 {
        return Err(Error::domain(format!("k = {k}; need k >= 2")));
    }
    limits.check_tensor(k)?;
    (1..=k)
        .map(|i| count_trees_by_length_with(k, i, limits))
        .sum()
}

/// Unit entries of `T^k_i`.
pub fn count_trees_by_length(k: u32, i: u32) -> Result<u64> {
    count_trees_by_length_with(k, i, &Limits::default())
}

pub fn count_trees_by_length_with(k: u32, i: u32, limits: &Limits) -> Result<u64> {
    limits.check_tensor(k)?;
    Ok(build_tensor(k, i)?.unit_count() as u64)
}
