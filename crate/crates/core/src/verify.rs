//! Exhaustive conformance checks over small parameter ranges.
//!
//! Every check walks `(k, i)` in increasing order and reports the first
//! failure it meets, so counterexamples are minimal in that order.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::blocks::{anti_transpose, sigma, upper_unitriangular, Axis, GridDecomposition};
use crate::compositions::{binomial, p_set, q_set};
use crate::dihedral::enumerate_orbits_with;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::trees::{decode, encode, narayana};
use crate::zipper::{build_tensor, zipper, Tensor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckId {
    Counts,
    Catalan,
    Narayana,
    Zeros,
    Strips,
    Laminar,
    Antitranspose,
    Dihedral,
    Roundtrip,
    Obs3,
}

impl CheckId {
    pub const ALL: [CheckId; 10] = [
        CheckId::Counts,
        CheckId::Catalan,
        CheckId::Narayana,
        CheckId::Zeros,
        CheckId::Strips,
        CheckId::Laminar,
        CheckId::Antitranspose,
        CheckId::Dihedral,
        CheckId::Roundtrip,
        CheckId::Obs3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::Counts => "counts",
            CheckId::Catalan => "catalan",
            CheckId::Narayana => "narayana",
            CheckId::Zeros => "zeros",
            CheckId::Strips => "strips",
            CheckId::Laminar => "laminar",
            CheckId::Antitranspose => "antitranspose",
            CheckId::Dihedral => "dihedral",
            CheckId::Roundtrip => "roundtrip",
            CheckId::Obs3 => "obs3",
        }
    }

    /// Largest k each check covers when none is given.
    pub fn default_max_k(self) -> u32 {
        match self {
            CheckId::Counts | CheckId::Catalan | CheckId::Narayana => 12,
            CheckId::Dihedral => 9,
            _ => 10,
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let known: Vec<_> = CheckId::ALL.iter().map(|c| c.name()).collect();
                Error::domain(format!(
                    "unknown check {s:?}; expected one of {}",
                    known.join(", ")
                ))
            })
    }
}

/// Smallest failing instance of a check. Cells are zero-based (row, col).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub k: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cell: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub word: Option<String>,
    pub reason: String,
}

impl Counterexample {
    fn new(k: u32, i: Option<u32>, reason: impl Into<String>) -> Self {
        Counterexample {
            k,
            i,
            cell: None,
            word: None,
            reason: reason.into(),
        }
    }

    fn at(mut self, (r, c): (usize, usize)) -> Self {
        self.cell = Some([r, c]);
        self
    }

    fn word(mut self, w: impl fmt::Display) -> Self {
        self.word = Some(w.to_string());
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub range: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    pub details: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConformanceReport {
    pub tool_version: String,
    pub passed: bool,
    pub checks: Vec<CheckRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl ConformanceReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    /// Overrides every check's default range when set.
    pub max_k: Option<u32>,
    pub limits: Limits,
    /// Record wall-clock times (makes the report vary between runs).
    pub timing: bool,
}

pub fn run_checks(checks: &[CheckId], opts: &VerifyOptions) -> Result<ConformanceReport> {
    if let Some(k) = opts.max_k {
        if k < 3 {
            return Err(Error::domain(format!("max k = {k}; need at least 3")));
        }
    }
    let start = Instant::now();
    let mut records = Vec::with_capacity(checks.len());
    for &id in checks {
        let max_k = opts.max_k.unwrap_or_else(|| id.default_max_k());
        let t0 = Instant::now();
        let mut rec = run_check(id, max_k, &opts.limits)?;
        if opts.timing {
            rec.elapsed_ms = Some(t0.elapsed().as_millis() as u64);
        }
        records.push(rec);
    }
    Ok(ConformanceReport {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        passed: records.iter().all(|r| r.passed),
        checks: records,
        elapsed_ms: opts.timing.then(|| start.elapsed().as_millis() as u64),
    })
}

type Outcome = std::result::Result<Vec<String>, Counterexample>;

pub fn run_check(id: CheckId, max_k: u32, limits: &Limits) -> Result<CheckRecord> {
    if id == CheckId::Dihedral {
        limits.check_orbit(max_k)?;
    } else {
        limits.check_tensor(max_k)?;
    }
    let (range, outcome) = match id {
        CheckId::Counts => (format!("2 <= k <= {max_k}, 1 <= i <= k"), counts(max_k)?),
        CheckId::Catalan => (format!("2 <= k <= {max_k}"), catalan_totals(max_k)?),
        CheckId::Narayana => (
            format!("2 <= k <= {max_k}, 1 <= i <= k"),
            narayana_rows(max_k)?,
        ),
        CheckId::Zeros => (format!("3 <= k <= {max_k}, 2 <= i <= k-1"), zeros(max_k)?),
        CheckId::Strips => (
            format!("3 <= k <= {max_k}, 2 <= i <= k-1"),
            strip_laws(max_k)?,
        ),
        CheckId::Laminar => (format!("3 <= k <= {max_k}, 2 <= i <= k-1"), laminar(max_k)?),
        CheckId::Antitranspose => (
            format!("2 <= k <= {max_k}, 1 <= i <= k"),
            antitranspose(max_k)?,
        ),
        CheckId::Dihedral => (format!("1 <= k <= {max_k}"), dihedral(max_k, limits)?),
        CheckId::Roundtrip => (format!("2 <= k <= {max_k}, 1 <= i <= k"), roundtrip(max_k)?),
        CheckId::Obs3 => (format!("3 <= k <= {max_k}"), obs3(max_k)?),
    };
    let (passed, counterexample, details) = match outcome {
        Ok(details) => (true, None, details),
        Err(ce) => (false, Some(ce), Vec::new()),
    };
    Ok(CheckRecord {
        id: id.name().to_string(),
        range,
        passed,
        counterexample,
        details,
        elapsed_ms: None,
    })
}

/// All `(k, i)` with `lo_k <= k <= max_k` and `i` in the range `inner(k)`.
fn pairs(
    lo_k: u32,
    max_k: u32,
    inner: impl Fn(u32) -> std::ops::RangeInclusive<u32>,
) -> Vec<(u32, u32)> {
    (lo_k..=max_k)
        .flat_map(|k| inner(k).map(move |i| (k, i)))
        .collect()
}

fn full(k: u32) -> std::ops::RangeInclusive<u32> {
    1..=k
}

fn interior(k: u32) -> std::ops::RangeInclusive<u32> {
    2..=k - 1
}

/// Runs `f` on every item in parallel and returns the first failure in item order.
fn first_failure<T, F>(items: &[T], f: F) -> Result<Option<Counterexample>>
where
    T: Sync,
    F: Fn(&T) -> Result<Option<Counterexample>> + Sync + Send,
{
    let results: Vec<Result<Option<Counterexample>>> = items.par_iter().map(f).collect();
    for r in results {
        if let Some(ce) = r? {
            return Ok(Some(ce));
        }
    }
    Ok(None)
}

fn finish(failure: Option<Counterexample>, details: Vec<String>) -> Outcome {
    match failure {
        Some(ce) => Err(ce),
        None => Ok(details),
    }
}

/// Dyck words of semilength `k` by peak count, enumerated directly.
fn dyck_peaks(k: u32) -> Vec<u64> {
    fn walk(up: u32, down: u32, k: u32, last_up: bool, peaks: usize, out: &mut [u64]) {
        if up == k && down == k {
            out[peaks] += 1;
            return;
        }
        if up < k {
            walk(up + 1, down, k, true, peaks, out);
        }
        if down < up {
            walk(up, down + 1, k, false, peaks + usize::from(last_up), out);
        }
    }
    let mut out = vec![0u64; k as usize + 1];
    walk(0, 0, k, false, 0, &mut out);
    out
}

fn counts(max_k: u32) -> Result<Outcome> {
    let items = pairs(2, max_k, full);
    let failure = first_failure(&items, |&(k, i)| {
        let t = build_tensor(k, i)?;
        let expected = dyck_peaks(k)[i as usize];
        if t.unit_count() as u64 != expected {
            return Ok(Some(Counterexample::new(
                k,
                Some(i),
                format!(
                    "{} unit entries, {expected} Dyck words with {i} peaks",
                    t.unit_count()
                ),
            )));
        }
        for (p, q, w) in t.tree_words() {
            let tree = decode(&w)?;
            if tree.leaves() != i as usize || tree.descent_runs() != i as usize {
                return Ok(Some(
                    Counterexample::new(k, Some(i), format!("tree has {} leaves", tree.leaves()))
                        .at((p, q))
                        .word(w),
                ));
            }
        }
        Ok(None)
    })?;
    Ok(finish(failure, Vec::new()))
}

fn catalan_totals(max_k: u32) -> Result<Outcome> {
    // C(n+1) = sum C(j) C(n-j)
    let mut cat = vec![1u64];
    for n in 0..max_k as usize {
        cat.push((0..=n).map(|j| cat[j] * cat[n - j]).sum());
    }
    let ks: Vec<u32> = (2..=max_k).collect();
    let totals: Vec<Result<u64>> = ks
        .par_iter()
        .map(|&k| {
            (1..=k)
                .map(|i| build_tensor(k, i).map(|t| t.unit_count() as u64))
                .sum()
        })
        .collect();
    let mut details = Vec::new();
    for (&k, total) in ks.iter().zip(totals) {
        let total = total?;
        if total != cat[k as usize] {
            return Ok(Err(Counterexample::new(
                k,
                None,
                format!(
                    "{total} unit entries in total, Catalan number is {}",
                    cat[k as usize]
                ),
            )));
        }
        details.push(format!("k={k}: {total}"));
    }
    Ok(Ok(details))
}

fn narayana_rows(max_k: u32) -> Result<Outcome> {
    let items = pairs(2, max_k, full);
    let failure = first_failure(&items, |&(k, i)| {
        let units = build_tensor(k, i)?.unit_count() as u64;
        let expected = narayana(u64::from(k), u64::from(i));
        Ok((units != expected).then(|| {
            Counterexample::new(
                k,
                Some(i),
                format!("{units} unit entries, formula gives {expected}"),
            )
        }))
    })?;
    let details = (2..=max_k)
        .map(|k| {
            let row: Vec<String> = (1..=k)
                .map(|i| narayana(u64::from(k), u64::from(i)).to_string())
                .collect();
            format!("k={k}: {}", row.join(","))
        })
        .collect();
    Ok(finish(failure, details))
}

fn zeros(max_k: u32) -> Result<Outcome> {
    let items = pairs(3, max_k, interior);
    let failure = first_failure(&items, |&(k, i)| {
        let t = build_tensor(k, i)?;
        let d = GridDecomposition::new(k, i)?;
        let actual = t.zero_cells();
        let predicted = d.predicted_zeros();
        if let Some(&cell) = actual.symmetric_difference(&predicted).next() {
            let reason = if actual.contains(&cell) {
                "zero entry not covered by any staircase"
            } else {
                "staircase cell holds a unit entry"
            };
            return Ok(Some(Counterexample::new(k, Some(i), reason).at(cell)));
        }
        match d.check_disjoint_cover() {
            Ok(()) => Ok(None),
            Err(Error::StructureViolation(msg)) => Ok(Some(Counterexample::new(k, Some(i), msg))),
            Err(e) => Err(e),
        }
    })?;
    Ok(finish(failure, Vec::new()))
}

fn strip_laws(max_k: u32) -> Result<Outcome> {
    for q in 0..=12u64 {
        for p in 1..=12u64 {
            let sum: u64 = (1..=p).map(|l| sigma(l, q)).sum();
            if sum != sigma(p, q + 1) {
                return Ok(Err(Counterexample::new(
                    0,
                    None,
                    format!(
                        "hockey-stick fails at p={p}, q={q}: {sum} != {}",
                        sigma(p, q + 1)
                    ),
                )));
            }
        }
    }
    let items = pairs(3, max_k, interior);
    let failure = first_failure(&items, |&(k, i)| strip_laws_at(k, i))?;
    Ok(finish(
        failure,
        vec!["hockey-stick: p, q <= 12".to_string()],
    ))
}

fn strip_laws_at(k: u32, i: u32) -> Result<Option<Counterexample>> {
    let d = GridDecomposition::new(k, i)?;
    let fail = |msg: String| Ok(Some(Counterexample::new(k, Some(i), msg)));
    for q in 1..i {
        let h = d.strip_sizes(q, Axis::Horizontal);
        let v = d.strip_sizes(q, Axis::Vertical);
        if h != v {
            return fail(format!(
                "level {q}: row strips {h:?} differ from column strips {v:?}"
            ));
        }
    }
    // each (q+1)-strip of size sigma(t, q+1) splits into q-strips sigma(1..=t, q)
    for q in 1..i - 1 {
        for axis in [Axis::Horizontal, Axis::Vertical] {
            let outer = strips_at(&d, q + 1, axis);
            let inner = strips_at(&d, q, axis);
            for o in outer {
                let sizes: Vec<u64> = inner
                    .iter()
                    .filter(|s| o.contains_span(s))
                    .map(|s| s.len() as u64)
                    .collect();
                let size = o.len() as u64;
                let Some(t) = (1..=size).find(|&t| sigma(t, u64::from(q) + 1) == size) else {
                    return fail(format!(
                        "level {} strip of size {size} is no sigma value",
                        q + 1
                    ));
                };
                let expected: Vec<u64> = (1..=t).map(|j| sigma(j, u64::from(q))).collect();
                if sizes != expected {
                    return fail(format!(
                        "level {} strip {}..{} splits as {sizes:?}, expected {expected:?}",
                        q + 1,
                        o.start,
                        o.end
                    ));
                }
            }
        }
    }
    // first column of a q-strip ends in >= q ones; last row of one has q ones before its last part
    for (c, header) in d.cols.iter().enumerate().skip(1) {
        let by_header = (header.trailing_ones() as u32).min(i - 2);
        let level = d.strip_start_level(Axis::Vertical, c);
        if by_header != level {
            return Ok(Some(
                Counterexample::new(
                    k,
                    Some(i),
                    format!(
                        "column opens level {level} strips, header {header} predicts {by_header}"
                    ),
                )
                .at((0, c)),
            ));
        }
    }
    for (r, header) in d.rows.iter().enumerate().take(d.side - 1) {
        let by_header = (1..i - 1)
            .take_while(|&q| header.penultimate_ones(q as usize))
            .last()
            .unwrap_or(0);
        let level = d.strip_end_level(Axis::Horizontal, r);
        if by_header != level {
            return Ok(Some(
                Counterexample::new(
                    k,
                    Some(i),
                    format!(
                        "row closes level {level} strips, header {header} predicts {by_header}"
                    ),
                )
                .at((r, 0)),
            ));
        }
    }
    Ok(None)
}

fn strips_at(d: &GridDecomposition, q: u32, axis: Axis) -> Vec<crate::blocks::Span> {
    let levels = match axis {
        Axis::Horizontal => &d.horizontal,
        Axis::Vertical => &d.vertical,
    };
    levels[(q - 1) as usize].iter().map(|s| s.span).collect()
}

fn laminar(max_k: u32) -> Result<Outcome> {
    let items = pairs(3, max_k, interior);
    let failure = first_failure(&items, |&(k, i)| {
        let d = GridDecomposition::new(k, i)?;
        if let Some((a, b)) = d.laminar_violation() {
            return Ok(Some(
                Counterexample::new(
                    k,
                    Some(i),
                    format!("blocks {a:?} and {b:?} overlap without nesting"),
                )
                .at((b.rows.start, b.cols.start)),
            ));
        }
        for s in &d.staircases {
            if s.block.height() > s.block.width() {
                return Ok(Some(
                    Counterexample::new(
                        k,
                        Some(i),
                        format!("retained block is {}x{}", s.block.height(), s.block.width()),
                    )
                    .at((s.block.rows.start, s.block.cols.start)),
                ));
            }
        }
        Ok(None)
    })?;
    Ok(finish(failure, Vec::new()))
}

/// One-based zero positions above the diagonal of `t`, each paired with its
/// mirror in the anti-transposed partner.
pub fn anti_transpose_pairs(t: &Tensor) -> Vec<((usize, usize), (usize, usize))> {
    let n = t.side();
    t.zero_cells()
        .into_iter()
        .filter(|&(p, q)| p < q)
        .map(|(p, q)| ((p + 1, q + 1), (n - q, n - p)))
        .collect()
}

fn antitranspose(max_k: u32) -> Result<Outcome> {
    let items = pairs(2, max_k, full);
    let failure = first_failure(&items, |&(k, l)| {
        let t = build_tensor(k, l)?;
        let mirrored = anti_transpose(&t)?;
        let partner = build_tensor(k, k + 1 - l)?;
        let diff = (0..t.side())
            .flat_map(|p| (0..t.side()).map(move |q| (p, q)))
            .find(|&(p, q)| mirrored.get(p, q) != partner.get(p, q));
        Ok(diff.map(|cell| {
            let reason = if 2 * l == k + 1 {
                "tensor differs from its own anti-transpose"
            } else {
                "anti-transpose differs from the partner tensor"
            };
            Counterexample::new(k, Some(l), reason).at(cell)
        }))
    })?;
    let mut details = Vec::new();
    if max_k >= 6 {
        let pairs: Vec<String> = anti_transpose_pairs(&build_tensor(6, 3)?)
            .into_iter()
            .map(|(a, b)| format!("({},{})<->({},{})", a.0, a.1, b.0, b.1))
            .collect();
        details.push(format!("k=6, i=3 -> i=4: {}", pairs.join(" ")));
    }
    let selfs: Vec<String> = (2..=max_k)
        .filter(|k| k % 2 == 1)
        .map(|k| format!("({k},{})", k.div_ceil(2)))
        .collect();
    details.push(format!("self anti-transpose: {}", selfs.join(" ")));
    Ok(finish(failure, details))
}

fn dihedral(max_k: u32, limits: &Limits) -> Result<Outcome> {
    let mut details = Vec::new();
    for k in 1..=max_k {
        let classes = match enumerate_orbits_with(k, limits) {
            Ok(c) => c,
            Err(Error::StructureViolation(msg)) => {
                return Ok(Err(Counterexample::new(k, None, msg)))
            }
            Err(e) => return Err(e),
        };
        let expected_size = 2 * (2 * k as usize + 1);
        if let Some(c) = classes.iter().find(|c| c.size() != expected_size) {
            return Ok(Err(Counterexample::new(
                k,
                None,
                format!("class has {} members", c.size()),
            )
            .word(c.canonical)));
        }
        let cat = binomial(2 * u64::from(k), u64::from(k)) / (u64::from(k) + 1);
        if classes.len() as u64 != cat {
            return Ok(Err(Counterexample::new(
                k,
                None,
                format!("{} classes, Catalan number is {cat}", classes.len()),
            )));
        }
        for c in &classes {
            let trees = c.members.iter().filter(|m| m.is_tree_word()).count();
            if trees != 1 {
                return Ok(Err(Counterexample::new(
                    k,
                    None,
                    format!("class holds {trees} tree words"),
                )
                .word(c.canonical)));
            }
        }
        details.push(format!(
            "k={k}: {} classes of size {expected_size}",
            classes.len()
        ));
    }
    Ok(Ok(details))
}

fn roundtrip(max_k: u32) -> Result<Outcome> {
    let items = pairs(2, max_k, full);
    let failure = first_failure(&items, |&(k, i)| {
        let rows = p_set(k, i)?;
        let cols = q_set(k, i)?;
        for (p, a) in rows.iter().enumerate() {
            for (q, b) in cols.iter().enumerate() {
                let w = zipper(a, b)?;
                let (a2, b2) = w.unzip()?;
                if (&a2, &b2) != (a, b) {
                    return Ok(Some(
                        Counterexample::new(k, Some(i), format!("unzips to ({a2}, {b2})"))
                            .at((p, q))
                            .word(w),
                    ));
                }
                if w.is_tree_word() {
                    let back = encode(&decode(&w)?)?;
                    if back != w {
                        return Ok(Some(
                            Counterexample::new(k, Some(i), format!("tree re-encodes as {back}"))
                                .at((p, q))
                                .word(w),
                        ));
                    }
                }
            }
        }
        Ok(None)
    })?;
    Ok(finish(failure, Vec::new()))
}

fn obs3(max_k: u32) -> Result<Outcome> {
    let ks: Vec<u32> = (3..=max_k).collect();
    let failure = first_failure(&ks, |&k| {
        for i in [1, k] {
            let t = build_tensor(k, i)?;
            if t.entries() != [true] {
                return Ok(Some(Counterexample::new(
                    k,
                    Some(i),
                    "expected the 1x1 matrix [1]",
                )));
            }
        }
        for i in [2, k - 1] {
            let t = build_tensor(k, i)?;
            let m = upper_unitriangular(k as usize - 1);
            if let Some(j) = (0..m.len()).find(|&j| t.entries()[j] != m[j]) {
                return Ok(Some(
                    Counterexample::new(k, Some(i), "differs from the upper unitriangular matrix")
                        .at((j / t.side(), j % t.side())),
                ));
            }
        }
        Ok(None)
    })?;
    Ok(finish(failure, Vec::new()))
}

/// Cells where two tensors of the same shape disagree.
pub fn diff_cells(a: &Tensor, b: &Tensor) -> BTreeSet<(usize, usize)> {
    let n = a.side().min(b.side());
    (0..n)
        .flat_map(|p| (0..n).map(move |q| (p, q)))
        .filter(|&(p, q)| a.get(p, q) != b.get(p, q))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(id: CheckId, k: u32) -> CheckRecord {
        run_check(id, k, &Limits::default()).unwrap()
    }

    #[test]
    fn names_round_trip() {
        for id in CheckId::ALL {
            assert_eq!(id.name().parse::<CheckId>().unwrap(), id);
        }
        assert!("bogus".parse::<CheckId>().is_err());
    }

    #[test]
    fn small_ranges_pass() {
        for id in CheckId::ALL {
            let rec = run(id, 6);
            assert!(rec.passed, "{id}: {:?}", rec.counterexample);
        }
    }

    #[test]
    fn catalan_details() {
        let rec = run(CheckId::Catalan, 8);
        assert_eq!(
            rec.details,
            [
                "k=2: 2",
                "k=3: 5",
                "k=4: 14",
                "k=5: 42",
                "k=6: 132",
                "k=7: 429",
                "k=8: 1430"
            ]
        );
    }

    #[test]
    fn pairing_detail() {
        let rec = run(CheckId::Antitranspose, 6);
        assert!(
            rec.details[0].contains("(3,4)<->(7,8)"),
            "{:?}",
            rec.details
        );
    }

    #[test]
    fn dyck_peak_counts() {
        assert_eq!(dyck_peaks(5), [0, 1, 10, 20, 10, 1]);
    }

    #[test]
    fn capacity_is_enforced() {
        assert!(matches!(
            run_check(CheckId::Dihedral, 12, &Limits::default()),
            Err(Error::Capacity { .. })
        ));
        let opts = VerifyOptions {
            max_k: Some(2),
            ..Default::default()
        };
        assert!(run_checks(&[CheckId::Zeros], &opts).is_err());
    }

    #[test]
    fn report_is_stable_without_timing() {
        let opts = VerifyOptions {
            max_k: Some(5),
            ..Default::default()
        };
        let a = run_checks(&CheckId::ALL, &opts).unwrap().to_json();
        let b = run_checks(&CheckId::ALL, &opts).unwrap().to_json();
        assert_eq!(a, b);
        assert!(!a.contains("elapsed_ms"));
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["passed"], true);
        assert_eq!(v["checks"].as_array().unwrap().len(), 10);
    }
}
