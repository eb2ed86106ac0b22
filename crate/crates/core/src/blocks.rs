//! Strip, block and staircase decomposition of the grid of `T^k_i`.
//!
//! A horizontal (vertical) q-strip is a maximal run of consecutive rows
//! (columns) whose headers agree on their first `i - q - 1` parts. A q-block is
//! the intersection of a horizontal and a vertical q-strip, and the staircase
//! of a block is its strictly lower triangle anchored at the lower-left corner.
//! The zero entries of the tensor are exactly the union of all staircases.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::compositions::{binomial, p_set, q_set, Composition};
use crate::error::{Error, Result};
use crate::zipper::Tensor;

pub type Cell = (usize, usize);

/// `sigma(p, q) = C(p + q - 1, q)`.
pub fn sigma(p: u64, q: u64) -> u64 {
    assert!(p >= 1, "sigma needs p >= 1");
    binomial(p + q - 1, q)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    Horizontal,
    Vertical,
}

/// Half-open index interval `[start, end)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }

    pub fn contains_span(&self, other: &Span) -> bool {
        self.start <= other.start && other.end <= self.end
    }

    pub fn contains(&self, x: usize) -> bool {
        self.start <= x && x < self.end
    }

    pub fn overlaps(&self, other: &Span) -> bool {
        self.start < other.end && other.start < self.end
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Strip {
    pub axis: Axis,
    pub level: u32,
    pub span: Span,
    /// Header parts shared by every row/column in the strip.
    pub prefix: Vec<u32>,
}

impl Strip {
    pub fn size(&self) -> usize {
        self.span.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Block {
    /// Coarsest level at which this exact sub-grid is a block.
    pub level: u32,
    pub rows: Span,
    pub cols: Span,
}

impl Block {
    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.cols.len()
    }

    pub fn same_extent(&self, other: &Block) -> bool {
        self.rows == other.rows && self.cols == other.cols
    }

    /// Geometric containment, equality excluded.
    pub fn strictly_contains(&self, other: &Block) -> bool {
        !self.same_extent(other)
            && self.rows.contains_span(&other.rows)
            && self.cols.contains_span(&other.cols)
    }

    pub fn overlaps(&self, other: &Block) -> bool {
        self.rows.overlaps(&other.rows) && self.cols.overlaps(&other.cols)
    }

    /// Whether `cell` lies in this block's staircase.
    pub fn staircase_contains(&self, (r, c): Cell) -> bool {
        self.rows.contains(r) && self.cols.contains(c) && r - self.rows.start > c - self.cols.start
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Staircase {
    pub block: Block,
    /// Side length, one less than the block height.
    pub side: usize,
    pub cells: Vec<Cell>,
}

impl Staircase {
    /// Row of the lower-left corner.
    pub fn bottom_row(&self) -> usize {
        self.block.rows.end - 1
    }

    pub fn left_col(&self) -> usize {
        self.block.cols.start
    }
}

fn check_grid(k: u32, i: u32) -> Result<()> {
    if k < 3 || i < 2 || i + 1 > k {
        return Err(Error::domain(format!(
            "grid (k={k}, i={i}) needs 2 <= i <= k-1"
        )));
    }
    Ok(())
}

fn split_strips(headers: &[Composition], axis: Axis, level: u32, shared: usize) -> Vec<Strip> {
    let mut out = Vec::new();
    let mut start = 0;
    for j in 1..=headers.len() {
        if j == headers.len() || headers[j].parts()[..shared] != headers[start].parts()[..shared] {
            out.push(Strip {
                axis,
                level,
                span: Span { start, end: j },
                prefix: headers[start].parts()[..shared].to_vec(),
            });
            start = j;
        }
    }
    out
}

/// q-strips of `G^k_i` along `axis`, in grid order.
pub fn strips(k: u32, i: u32, q: u32, axis: Axis) -> Result<Vec<Strip>> {
    check_grid(k, i)?;
    if q < 1 || q >= i {
        return Err(Error::domain(format!(
            "level q = {q} outside 1..={}",
            i - 1
        )));
    }
    let headers = match axis {
        Axis::Horizontal => p_set(k, i)?,
        Axis::Vertical => q_set(k, i)?,
    };
    Ok(split_strips(&headers, axis, q, (i - q - 1) as usize))
}

/// All q-blocks, row-major over (horizontal strip, vertical strip).
pub fn blocks(k: u32, i: u32, q: u32) -> Result<Vec<Block>> {
    let rows = strips(k, i, q, Axis::Horizontal)?;
    let cols = strips(k, i, q, Axis::Vertical)?;
    Ok(rows
        .iter()
        .flat_map(|r| {
            cols.iter().map(move |c| Block {
                level: q,
                rows: r.span,
                cols: c.span,
            })
        })
        .collect())
}

/// Strictly lower triangle of `b`, clipped to the block.
pub fn staircase(b: &Block) -> Staircase {
    let mut cells = Vec::new();
    for dr in 1..b.height() {
        for dc in 0..dr.min(b.width()) {
            cells.push((b.rows.start + dr, b.cols.start + dc));
        }
    }
    Staircase {
        block: *b,
        side: b.height().saturating_sub(1),
        cells,
    }
}

/// Every strip, block and staircase of one grid.
#[derive(Debug, Clone, Serialize)]
pub struct GridDecomposition {
    pub k: u32,
    pub i: u32,
    pub side: usize,
    /// `horizontal[q - 1]` holds the horizontal q-strips.
    pub horizontal: Vec<Vec<Strip>>,
    pub vertical: Vec<Vec<Strip>>,
    /// Distinct blocks over all levels; equal extents collapse to one entry.
    pub blocks: Vec<Block>,
    /// Retained staircases: pairwise disjoint, covering the zero set.
    pub staircases: Vec<Staircase>,
    #[serde(skip)]
    pub rows: Vec<Composition>,
    #[serde(skip)]
    pub cols: Vec<Composition>,
}

impl GridDecomposition {
    pub fn new(k: u32, i: u32) -> Result<Self> {
        let rows = p_set(k, i)?;
        let cols = q_set(k, i)?;
        let side = rows.len();
        if i == 1 || i == k {
            // one 1x1 block, empty staircase
            let block = Block {
                level: 0,
                rows: Span { start: 0, end: 1 },
                cols: Span { start: 0, end: 1 },
            };
            return Ok(GridDecomposition {
                k,
                i,
                side,
                horizontal: Vec::new(),
                vertical: Vec::new(),
                blocks: vec![block],
                staircases: Vec::new(),
                rows,
                cols,
            });
        }
        let levels = i - 1;
        let mut horizontal = Vec::with_capacity(levels as usize);
        let mut vertical = Vec::with_capacity(levels as usize);
        for q in 1..=levels {
            let shared = (i - q - 1) as usize;
            horizontal.push(split_strips(&rows, Axis::Horizontal, q, shared));
            vertical.push(split_strips(&cols, Axis::Vertical, q, shared));
        }

        // Coarsest level wins when the same sub-grid appears at several levels.
        let mut all: Vec<Block> = Vec::new();
        let mut extents = HashSet::new();
        for q in (1..=levels).rev() {
            let hs = &horizontal[(q - 1) as usize];
            let vs = &vertical[(q - 1) as usize];
            for h in hs {
                for v in vs {
                    let b = Block {
                        level: q,
                        rows: h.span,
                        cols: v.span,
                    };
                    if extents.insert((b.rows, b.cols)) {
                        all.push(b);
                    }
                }
            }
        }
        all.sort_by_key(|b| (b.level, b.rows, b.cols));

        let mut decomposition = GridDecomposition {
            k,
            i,
            side,
            horizontal,
            vertical,
            blocks: all,
            staircases: Vec::new(),
            rows,
            cols,
        };
        decomposition.staircases = decomposition.retained_staircases();
        Ok(decomposition)
    }

    fn strip_of(&self, axis: Axis, level: u32, index: usize) -> &Strip {
        let strips = match axis {
            Axis::Horizontal => &self.horizontal[(level - 1) as usize],
            Axis::Vertical => &self.vertical[(level - 1) as usize],
        };
        let pos = strips.partition_point(|s| s.span.end <= index);
        &strips[pos]
    }

    /// Blocks at coarser levels that strictly contain `b`.
    pub fn enclosing(&self, b: &Block) -> Vec<Block> {
        let mut out = Vec::new();
        for q in b.level + 1..self.i {
            let enclosing = Block {
                level: q,
                rows: self.strip_of(Axis::Horizontal, q, b.rows.start).span,
                cols: self.strip_of(Axis::Vertical, q, b.cols.start).span,
            };
            if enclosing.strictly_contains(b)
                && !out.iter().any(|x: &Block| x.same_extent(&enclosing))
            {
                out.push(enclosing);
            }
        }
        out
    }

    fn retained_staircases(&self) -> Vec<Staircase> {
        let mut kept = Vec::new();
        for b in &self.blocks {
            let st = staircase(b);
            if st.cells.is_empty() {
                continue;
            }
            let parents = self.enclosing(b);
            let covered = st
                .cells
                .iter()
                .all(|&cell| parents.iter().any(|p| p.staircase_contains(cell)));
            if !covered {
                kept.push(st);
            }
        }
        kept.sort_by_key(|s| (s.bottom_row(), s.left_col()));
        kept
    }

    /// Union of the staircases of all blocks.
    pub fn predicted_zeros(&self) -> BTreeSet<Cell> {
        self.blocks
            .iter()
            .flat_map(|b| staircase(b).cells)
            .collect()
    }

    /// Checks that the retained staircases are pairwise disjoint and cover
    /// the predicted zero set.
    pub fn check_disjoint_cover(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for st in &self.staircases {
            for &cell in &st.cells {
                if !seen.insert(cell) {
                    return Err(Error::StructureViolation(format!(
                        "G({}, {}): cell {cell:?} lies in two retained staircases",
                        self.k, self.i
                    )));
                }
            }
        }
        let predicted = self.predicted_zeros();
        if seen != predicted {
            let missing = predicted.difference(&seen).next();
            return Err(Error::StructureViolation(format!(
                "G({}, {}): retained staircases miss cell {missing:?}",
                self.k, self.i
            )));
        }
        Ok(())
    }

    /// First pair of blocks that overlap without nesting, if any.
    pub fn laminar_violation(&self) -> Option<(Block, Block)> {
        for (x, a) in self.blocks.iter().enumerate() {
            for b in &self.blocks[x + 1..] {
                if a.overlaps(b) && !a.strictly_contains(b) && !b.strictly_contains(a) {
                    return Some((*a, *b));
                }
            }
        }
        None
    }

    /// Strip sizes at level `q` along `axis`.
    pub fn strip_sizes(&self, q: u32, axis: Axis) -> Vec<usize> {
        let strips = match axis {
            Axis::Horizontal => &self.horizontal,
            Axis::Vertical => &self.vertical,
        };
        strips
            .get((q as usize).wrapping_sub(1))
            .map(|v| v.iter().map(Strip::size).collect())
            .unwrap_or_default()
    }

    /// Highest level `q` at which `index` starts a strip along `axis`; 0 if none.
    pub fn strip_start_level(&self, axis: Axis, index: usize) -> u32 {
        let strips = match axis {
            Axis::Horizontal => &self.horizontal,
            Axis::Vertical => &self.vertical,
        };
        strips
            .iter()
            .rev()
            .find(|level| level.iter().any(|s| s.span.start == index))
            .map(|level| level[0].level)
            .unwrap_or(0)
    }

    /// Highest level `q` at which `index` ends a strip along `axis`; 0 if none.
    pub fn strip_end_level(&self, axis: Axis, index: usize) -> u32 {
        let strips = match axis {
            Axis::Horizontal => &self.horizontal,
            Axis::Vertical => &self.vertical,
        };
        strips
            .iter()
            .rev()
            .find(|level| level.iter().any(|s| s.span.end == index + 1))
            .map(|level| level[0].level)
            .unwrap_or(0)
    }
}

/// Union of the staircases of every block of `G^k_i`; empty when i is 1 or k.
pub fn predicted_zeros(k: u32, i: u32) -> Result<BTreeSet<Cell>> {
    Ok(GridDecomposition::new(k, i)?.predicted_zeros())
}

/// Staircases not already covered by enclosing blocks' staircases.
pub fn disjoint_staircases(k: u32, i: u32) -> Result<Vec<Staircase>> {
    let d = GridDecomposition::new(k, i)?;
    d.check_disjoint_cover()?;
    Ok(d.staircases)
}

/// Reflection across the anti-diagonal of an n x n row-major matrix.
pub fn anti_transpose_bits(n: usize, entries: &[bool]) -> Vec<bool> {
    assert_eq!(entries.len(), n * n, "matrix is not {n}x{n}");
    let mut out = vec![false; n * n];
    for p in 0..n {
        for q in 0..n {
            out[p * n + q] = entries[(n - 1 - q) * n + (n - 1 - p)];
        }
    }
    out
}

/// Anti-transpose of `T^k_l`, labelled with the headers of `T^k_{k+1-l}`.
pub fn anti_transpose(t: &Tensor) -> Result<Tensor> {
    let bits = anti_transpose_bits(t.side(), t.entries());
    t.with_entries(t.k(), t.k() + 1 - t.i(), bits)
}

/// The n x n matrix with ones on and above the diagonal.
pub fn upper_unitriangular(n: usize) -> Vec<bool> {
    (0..n).flat_map(|p| (0..n).map(move |q| p <= q)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zipper::build_tensor;

    fn sizes(k: u32, i: u32, q: u32, axis: Axis) -> Vec<usize> {
        strips(k, i, q, axis)
            .unwrap()
            .iter()
            .map(Strip::size)
            .collect()
    }

    #[test]
    fn sigma_values() {
        assert_eq!(sigma(5, 6), 210);
        assert_eq!(sigma(6, 5), 252);
        for q in 0..10 {
            assert_eq!(sigma(1, q), 1);
        }
    }

    #[test]
    fn strip_widths_g8_4() {
        assert_eq!(sizes(8, 4, 2, Axis::Vertical), [1, 3, 6, 10, 15]);
        assert_eq!(
            sizes(8, 4, 1, Axis::Vertical),
            [1, 1, 2, 1, 2, 3, 1, 2, 3, 4, 1, 2, 3, 4, 5]
        );
        assert_eq!(sizes(8, 4, 3, Axis::Vertical), [35]);
        assert_eq!(sizes(8, 4, 2, Axis::Horizontal), [1, 3, 6, 10, 15]);
        assert!(strips(8, 4, 4, Axis::Vertical).is_err());
        assert!(strips(8, 8, 1, Axis::Vertical).is_err());
    }

    #[test]
    fn block_counts() {
        let b = blocks(5, 3, 1).unwrap();
        assert_eq!(b.len(), 9);
        let heights: Vec<usize> = b.iter().map(Block::height).collect();
        assert_eq!(heights, [1, 1, 1, 2, 2, 2, 3, 3, 3]);
        assert_eq!(blocks(8, 4, 2).unwrap().len(), 25);
        for (k, i) in [(5, 3), (8, 4), (7, 5)] {
            let whole = blocks(k, i, i - 1).unwrap();
            let n = binomial(u64::from(k - 1), u64::from(i - 1)) as usize;
            assert_eq!(whole.len(), 1);
            assert_eq!((whole[0].height(), whole[0].width()), (n, n));
        }
    }

    #[test]
    fn staircase_shapes() {
        let b = Block {
            level: 1,
            rows: Span { start: 2, end: 5 },
            cols: Span { start: 7, end: 8 },
        };
        let st = staircase(&b);
        assert_eq!(st.side, 2);
        // clipped to the single column
        assert_eq!(st.cells, [(3, 7), (4, 7)]);
        let one = Block {
            level: 1,
            rows: Span { start: 0, end: 1 },
            cols: Span { start: 0, end: 4 },
        };
        assert!(staircase(&one).cells.is_empty());
    }

    #[test]
    fn predicted_zero_examples() {
        let z = predicted_zeros(5, 3).unwrap();
        assert_eq!(z.len(), 16);
        assert!(z.contains(&(2, 3)));
        assert!((0..6).all(|p| (0..p).all(|q| z.contains(&(p, q)))));
        assert_eq!(predicted_zeros(3, 2).unwrap(), BTreeSet::from([(1, 0)]));
        assert_eq!(
            predicted_zeros(6, 3).unwrap(),
            build_tensor(6, 3).unwrap().zero_cells()
        );
        assert!(predicted_zeros(6, 1).unwrap().is_empty());
    }

    #[test]
    fn disjoint_examples() {
        let st = disjoint_staircases(5, 3).unwrap();
        assert_eq!(st.len(), 2);
        let mut sides: Vec<usize> = st.iter().map(|s| s.side).collect();
        sides.sort();
        assert_eq!(sides, [1, 5]);
        let small = st.iter().find(|s| s.side == 1).unwrap();
        assert_eq!(small.block.rows, Span { start: 1, end: 3 });
        assert_eq!(small.block.cols, Span { start: 3, end: 6 });
        assert_eq!(small.cells, [(2, 3)]);
        let st = disjoint_staircases(3, 2).unwrap();
        assert_eq!(st.len(), 1);
        assert_eq!(st[0].side, 1);
    }

    #[test]
    fn anti_transpose_examples() {
        let t36 = build_tensor(6, 3).unwrap();
        let t46 = build_tensor(6, 4).unwrap();
        assert_eq!(anti_transpose(&t36).unwrap(), t46);
        assert!(!t46.get(6, 7));
        assert_eq!(anti_transpose(&anti_transpose(&t36).unwrap()).unwrap(), t36);
    }

    #[test]
    fn unitriangular() {
        assert_eq!(upper_unitriangular(2), [true, true, false, true]);
        assert_eq!(upper_unitriangular(1), [true]);
        assert_eq!(
            upper_unitriangular(4),
            build_tensor(5, 2).unwrap().entries()
        );
    }

    #[test]
    fn degenerate_grid() {
        let d = GridDecomposition::new(6, 6).unwrap();
        assert_eq!(d.blocks.len(), 1);
        assert!(d.staircases.is_empty());
    }
}
