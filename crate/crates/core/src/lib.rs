//! Tensors that zipper pairs of integer compositions.
//!
//! For `k >= 2` and `1 <= i <= k`, the tensor `T^k_i` has rows indexed by the
//! compositions of `k + 1` into `i` parts with first part at least 2, and
//! columns indexed by the compositions of `k` into `i` parts, both in
//! descending lexicographic order. An entry is 1 exactly when the zippered
//! word of its row and column encodes an ordered tree with `k` edges.

pub mod blocks;
pub mod compositions;
pub mod dihedral;
pub mod error;
pub mod limits;
pub mod render;
pub mod trees;
pub mod verify;
pub mod zipper;

pub use blocks::{
    anti_transpose, blocks, disjoint_staircases, predicted_zeros, sigma, staircase, strips,
    upper_unitriangular, Axis, Block, GridDecomposition, Span, Staircase, Strip,
};
pub use compositions::{compositions_desc_lex, p_set, q_set, rank_desc_lex, Composition};
pub use dihedral::{canonical_tree_word, enumerate_orbits, orbit, MiddleWord, OrbitClass};
pub use error::{Error, Result};
pub use limits::Limits;
pub use render::{
    border_class, to_json, to_svg, to_text, BorderClass, Segment, SvgOptions, TextStyle,
};
pub use trees::{count_trees, count_trees_by_length, decode, encode, OrderedTree};
pub use verify::{run_checks, CheckId, CheckRecord, ConformanceReport, VerifyOptions};
pub use zipper::{build_tensor, tensor_entry, zipper, Tensor, ZipperWord};
