//! Partitions, skew shapes and skew semistandard tableaux.
//!
//! Rows and columns are 1-based wherever a [`Cell`] is exposed. Tableaux are
//! drawn in the English convention: row 1 on top, rows weakly increasing from
//! left to right, columns strictly increasing downwards.

use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::TableauError;
use crate::word::Word;

/// A letter of the alphabet `{1, 2, ...}`.
pub type Letter = u32;

/// A box of a Young diagram, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A weakly decreasing sequence of nonnegative integers.
///
/// The declared length (including trailing zeros) is kept for serialisation,
/// but equality and hashing only look at the positive parts.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, TableauError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(TableauError::NotAPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The declared parts, trailing zeros included.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based); zero past the declared length.
    pub fn get(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of positive parts.
    pub fn length(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.length()).all(|i| other.get(i) <= self.get(i))
    }

    /// Positive parts only.
    pub fn trimmed(&self) -> Partition {
        Partition {
            parts: self.parts[..self.length()].to_vec(),
        }
    }

    /// Adds one box at the end of row `i` (0-based). Fails if the result is
    /// not a partition.
    pub fn with_box(&self, i: usize) -> Result<Partition, TableauError> {
        let mut parts = self.parts.clone();
        if parts.len() <= i {
            parts.resize(i + 1, 0);
        }
        parts[i] += 1;
        Partition::new(parts)
    }

    /// Removes the last box of row `i` (0-based).
    pub fn without_box(&self, i: usize) -> Result<Partition, TableauError> {
        let mut parts = self.parts.clone();
        match parts.get_mut(i) {
            Some(p) if *p > 0 => *p -= 1,
            _ => return Err(TableauError::NotAPartition(self.parts.clone())),
        }
        Partition::new(parts)
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of size at most `n`.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of).collect()
    }

    /// All partitions contained in `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn go(
            outer: &Partition,
            i: usize,
            max: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if i == outer.length() {
                out.push(Partition::from_parts_unchecked(cur.clone()).trimmed());
                return;
            }
            for p in 0..=outer.get(i).min(max) {
                cur.push(p);
                go(outer, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(self, 0, usize::MAX, &mut Vec::new(), &mut out);
        out
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }
}

impl PartialEq for Partition {
    fn eq(&self, other: &Self) -> bool {
        self.parts[..self.length()] == other.parts[..other.length()]
    }
}

impl Eq for Partition {}

impl Hash for Partition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.parts[..self.length()].hash(state);
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.parts[..self.length()].cmp(&other.parts[..other.length()])
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = TableauError;
    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Multiplicities of letters: `counts[i]` is the number of `i + 1`s.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Composition {
    pub counts: Vec<usize>,
}

impl Composition {
    pub fn count(&self, letter: Letter) -> usize {
        if letter == 0 {
            return 0;
        }
        self.counts.get(letter as usize - 1).copied().unwrap_or(0)
    }

    pub fn is_partition(&self) -> bool {
        self.counts.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn to_partition(&self) -> Option<Partition> {
        Partition::new(self.counts.clone()).ok()
    }
}

/// The difference `outer / inner` of two nested Young diagrams.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, TableauError> {
        if !outer.contains(&inner) {
            return Err(TableauError::InnerNotContained {
                outer: outer.parts().to_vec(),
                inner: inner.parts().to_vec(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn normal(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    /// Number of filled boxes.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Number of rows of the outer shape.
    pub fn num_rows(&self) -> usize {
        self.outer.length()
    }

    /// Row lengths of the filled part.
    pub fn row_lengths(&self) -> Vec<usize> {
        (0..self.num_rows())
            .map(|i| self.outer.get(i) - self.inner.get(i))
            .collect()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1
            && cell.col > self.inner.get(cell.row - 1)
            && cell.col <= self.outer.get(cell.row - 1)
    }

    /// All skew shapes `lambda / mu` with `|lambda| <= n`.
    pub fn all_up_to(n: usize) -> Vec<SkewShape> {
        let mut out = Vec::new();
        for outer in Partition::all_up_to(n) {
            for inner in outer.subpartitions() {
                out.push(SkewShape {
                    outer: outer.clone(),
                    inner,
                });
            }
        }
        out
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// A semistandard filling of a skew shape.
///
/// `rows[i]` holds the entries of row `i + 1` of the filled part, left to
/// right; blank inner cells are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewTableau {
    shape: SkewShape,
    rows: Vec<Vec<Letter>>,
}

impl SkewTableau {
    /// Builds and validates a tableau. Trailing rows of length zero in both
    /// borders may be omitted from `rows`.
    pub fn new(shape: SkewShape, mut rows: Vec<Vec<Letter>>) -> Result<Self, TableauError> {
        let n = shape.num_rows();
        while rows.len() > n && rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        if rows.len() > n {
            return Err(TableauError::RowCount {
                expected: n,
                found: rows.len(),
            });
        }
        rows.resize(n, Vec::new());
        for (i, row) in rows.iter().enumerate() {
            let expected = shape.outer.get(i) - shape.inner.get(i);
            if row.len() != expected {
                return Err(TableauError::RowLength {
                    row: i + 1,
                    expected,
                    found: row.len(),
                });
            }
        }
        let t = SkewTableau { shape, rows };
        t.validate()?;
        Ok(t)
    }

    /// Builds a tableau from its inner shape and filled rows; the outer shape
    /// is inferred.
    pub fn from_rows(inner: &[usize], rows: Vec<Vec<Letter>>) -> Result<Self, TableauError> {
        let n = rows.len().max(inner.len());
        let outer: Vec<usize> = (0..n)
            .map(|i| inner.get(i).copied().unwrap_or(0) + rows.get(i).map_or(0, Vec::len))
            .collect();
        let shape = SkewShape::new(Partition::new(outer)?, Partition::new(inner.to_vec())?)?;
        SkewTableau::new(shape, rows)
    }

    /// The empty tableau `mu / mu`.
    pub fn empty(mu: Partition) -> Self {
        let n = mu.length();
        SkewTableau {
            shape: SkewShape {
                outer: mu.clone(),
                inner: mu,
            },
            rows: vec![Vec::new(); n],
        }
    }

    pub(crate) fn from_parts_unchecked(shape: SkewShape, rows: Vec<Vec<Letter>>) -> Self {
        let t = SkewTableau { shape, rows };
        debug_assert!(t.validate().is_ok(), "invalid tableau {t:?}");
        t
    }

    fn validate(&self) -> Result<(), TableauError> {
        for (i, row) in self.rows.iter().enumerate() {
            for (k, &x) in row.iter().enumerate() {
                let cell = Cell::new(i + 1, self.shape.inner.get(i) + k + 1);
                if x == 0 {
                    return Err(TableauError::ZeroEntry(cell));
                }
                if k > 0 && row[k - 1] > x {
                    return Err(TableauError::RowNotWeak(cell));
                }
                if i > 0 {
                    if let Some(above) = self.entry(Cell::new(i, cell.col)) {
                        if above >= x {
                            return Err(TableauError::ColumnNotStrict(cell));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn inner(&self) -> &Partition {
        &self.shape.inner
    }

    pub fn outer(&self) -> &Partition {
        &self.shape.outer
    }

    /// Filled rows; `rows()[i]` is row `i + 1`.
    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    /// Filled entries of row `i` (1-based); empty past the last row.
    pub fn row(&self, i: usize) -> &[Letter] {
        self.rows.get(i.wrapping_sub(1)).map_or(&[], Vec::as_slice)
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Number of filled boxes.
    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn entry(&self, cell: Cell) -> Option<Letter> {
        if cell.row == 0 {
            return None;
        }
        let i = cell.row - 1;
        let start = self.shape.inner.get(i);
        if cell.col <= start {
            return None;
        }
        self.rows.get(i)?.get(cell.col - start - 1).copied()
    }

    /// Filled cells with their entries, row by row from the top.
    pub fn cells(&self) -> impl Iterator<Item = (Cell, Letter)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(i, row)| {
            let start = self.shape.inner.get(i);
            row.iter()
                .enumerate()
                .map(move |(k, &x)| (Cell::new(i + 1, start + k + 1), x))
        })
    }

    pub fn max_entry(&self) -> Letter {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Rows read left to right, bottom row first.
    pub fn reading_word(&self) -> Word {
        Word::from(
            self.rows
                .iter()
                .rev()
                .flatten()
                .copied()
                .collect::<Vec<_>>(),
        )
    }

    pub fn content(&self) -> Composition {
        self.reading_word().content()
    }

    pub fn is_ballot(&self) -> bool {
        self.reading_word().is_ballot()
    }

    pub fn is_standard(&self) -> bool {
        let mut seen: Vec<Letter> = self.rows.iter().flatten().copied().collect();
        seen.sort_unstable();
        seen.iter().enumerate().all(|(k, &x)| x as usize == k + 1)
    }

    /// Renumbers entries `1..=|U|`; among equal entries the one further left
    /// gets the smaller label.
    pub fn standardize(&self) -> SkewTableau {
        let mut order: Vec<(Letter, usize, usize)> =
            self.cells().map(|(c, x)| (x, c.col, c.row)).collect();
        order.sort_unstable();
        let mut rows = self.rows.clone();
        for (label, &(_, col, row)) in order.iter().enumerate() {
            let start = self.shape.inner.get(row - 1);
            rows[row - 1][col - start - 1] = label as Letter + 1;
        }
        SkewTableau::from_parts_unchecked(self.shape.clone(), rows)
    }

    /// Cells in standard order: the cell labelled `p` by [`standardize`]
    /// comes at index `p - 1`.
    ///
    /// [`standardize`]: SkewTableau::standardize
    pub fn standard_order(&self) -> Vec<(Cell, Letter)> {
        let mut cells: Vec<(Cell, Letter)> = self.cells().collect();
        cells.sort_by_key(|&(c, x)| (x, c.col, c.row));
        cells
    }

    /// The row indices of `1, 2, ..., |U|` in the standardisation, listed from
    /// the biggest label to the smallest.
    pub fn companion_word(&self) -> Word {
        Word::from(
            self.standard_order()
                .iter()
                .rev()
                .map(|(c, _)| c.row as Letter)
                .collect::<Vec<_>>(),
        )
    }

    /// The Yamanouchi tableau: normal shape `mu`, row `i` filled with `i`s.
    pub fn yamanouchi(mu: &Partition) -> SkewTableau {
        let rows = (0..mu.length())
            .map(|i| vec![i as Letter + 1; mu.get(i)])
            .collect();
        SkewTableau::from_parts_unchecked(SkewShape::normal(mu.trimmed()), rows)
    }

    /// Whether this tableau is the Yamanouchi tableau of its (normal) shape.
    pub fn is_yamanouchi(&self) -> bool {
        self.shape.inner.is_empty()
            && self
                .rows
                .iter()
                .enumerate()
                .all(|(i, r)| r.iter().all(|&x| x as usize == i + 1))
    }

    /// Splits across row `i`: returns `(rest, head)` where `head` is the first
    /// `i` rows and `rest` the remaining rows, re-indexed from 1.
    pub fn restrict_rows(&self, i: usize) -> Result<(SkewTableau, SkewTableau), TableauError> {
        let n = self.num_rows();
        if i > n {
            return Err(TableauError::RowOutOfRange { row: i, rows: n });
        }
        let slice = |p: &Partition, range: std::ops::Range<usize>| {
            Partition::from_parts_unchecked(range.map(|k| p.get(k)).collect())
        };
        let head = SkewTableau::from_parts_unchecked(
            SkewShape {
                outer: slice(&self.shape.outer, 0..i),
                inner: slice(&self.shape.inner, 0..i),
            },
            self.rows[..i].to_vec(),
        );
        let rest = SkewTableau::from_parts_unchecked(
            SkewShape {
                outer: slice(&self.shape.outer, i..n),
                inner: slice(&self.shape.inner, i..n),
            },
            self.rows[i..].to_vec(),
        );
        Ok((rest.normalized(), head.normalized()))
    }

    /// The first `i` rows (clamped to the number of rows).
    pub fn head(&self, i: usize) -> SkewTableau {
        self.restrict_rows(i.min(self.num_rows()))
            .expect("row index clamped")
            .1
    }

    /// Drops trailing rows that are empty in both borders.
    fn normalized(mut self) -> SkewTableau {
        let n = self.shape.outer.length();
        self.rows.truncate(n);
        self
    }

    /// Number of `i`s in row `i`, for every row.
    pub fn diagonal_counts(&self) -> Vec<usize> {
        self.rows
            .iter()
            .enumerate()
            .map(|(i, r)| r.iter().filter(|&&x| x as usize == i + 1).count())
            .collect()
    }

    // Mutation helpers used by the insertion and commutor modules. They keep
    // shape and rows consistent; semistandardness is checked by callers.

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<Letter>> {
        &mut self.rows
    }

    pub(crate) fn set_shape(&mut self, shape: SkewShape) {
        self.shape = shape;
        let n = self.shape.num_rows();
        self.rows.resize(n, Vec::new());
    }

    pub(crate) fn into_parts(self) -> (SkewShape, Vec<Vec<Letter>>) {
        (self.shape, self.rows)
    }

    pub(crate) fn checked(self) -> Result<SkewTableau, TableauError> {
        self.validate()?;
        Ok(self)
    }
}

/// All semistandard fillings of `shape` over `1..=max_letter`, ordered
/// lexicographically by reading word.
pub fn enumerate_ssyt(shape: &SkewShape, max_letter: Letter) -> Vec<SkewTableau> {
    let mut out = Vec::new();
    fill(shape, &mut |_, _, _| true, max_letter, &mut |t| out.push(t));
    sort_by_reading_word(&mut out);
    out
}

/// All ballot semistandard tableaux of the given shape and content, ordered
/// lexicographically by reading word.
pub fn enumerate_ballot(shape: &SkewShape, nu: &Partition) -> Vec<SkewTableau> {
    if shape.size() != nu.size() {
        return Vec::new();
    }
    let max_letter = nu.length() as Letter;
    let mut out = Vec::new();
    // Cells are filled in reverse reading order, so the running content is
    // the content of a suffix of the reading word.
    fill(
        shape,
        &mut |counts: &[usize], x: Letter, _| {
            let k = x as usize - 1;
            counts[k] < nu.get(k) && (k == 0 || counts[k] < counts[k - 1])
        },
        max_letter,
        &mut |t| out.push(t),
    );
    sort_by_reading_word(&mut out);
    out
}

fn sort_by_reading_word(ts: &mut [SkewTableau]) {
    ts.sort_by_cached_key(|t| t.reading_word().into_letters());
}

/// Backtracking filler: visits cells row by row from the top, each row right
/// to left. `admit(counts, x, cell)` may veto placing `x`.
fn fill(
    shape: &SkewShape,
    admit: &mut dyn FnMut(&[usize], Letter, Cell) -> bool,
    max_letter: Letter,
    emit: &mut dyn FnMut(SkewTableau),
) {
    let n = shape.num_rows();
    let mut rows: Vec<Vec<Letter>> = shape.row_lengths().iter().map(|&l| vec![0; l]).collect();
    let order: Vec<Cell> = (0..n)
        .flat_map(|i| {
            let start = shape.inner.get(i);
            (start + 1..=shape.outer.get(i))
                .rev()
                .map(move |c| Cell::new(i + 1, c))
        })
        .collect();
    let mut counts = vec![0usize; max_letter as usize];

    #[allow(clippy::too_many_arguments)]
    fn go(
        k: usize,
        order: &[Cell],
        shape: &SkewShape,
        rows: &mut Vec<Vec<Letter>>,
        counts: &mut Vec<usize>,
        max_letter: Letter,
        admit: &mut dyn FnMut(&[usize], Letter, Cell) -> bool,
        emit: &mut dyn FnMut(SkewTableau),
    ) {
        let Some(&cell) = order.get(k) else {
            emit(SkewTableau::from_parts_unchecked(
                shape.clone(),
                rows.clone(),
            ));
            return;
        };
        let i = cell.row - 1;
        let start = shape.inner.get(i);
        let idx = cell.col - start - 1;
        // Upper bound from the right neighbour (same row, already filled).
        let hi = rows[i].get(idx + 1).copied().unwrap_or(max_letter);
        // Lower bound from the cell above.
        let lo = if i > 0 && cell.col > shape.inner.get(i - 1) && cell.col <= shape.outer.get(i - 1)
        {
            rows[i - 1][cell.col - shape.inner.get(i - 1) - 1] + 1
        } else {
            1
        };
        for x in lo..=hi {
            if !admit(counts, x, cell) {
                continue;
            }
            rows[i][idx] = x;
            counts[x as usize - 1] += 1;
            go(k + 1, order, shape, rows, counts, max_letter, admit, emit);
            counts[x as usize - 1] -= 1;
        }
        rows[i][idx] = 0;
    }

    go(
        0,
        &order,
        shape,
        &mut rows,
        &mut counts,
        max_letter,
        admit,
        emit,
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(inner: &[usize], rows: Vec<Vec<Letter>>) -> SkewTableau {
        SkewTableau::from_rows(inner, rows).unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partition_equality_ignores_trailing_zeros() {
        assert_eq!(p(&[6, 4, 0, 0]), p(&[6, 4]));
        assert_eq!(p(&[6, 4, 0, 0]).parts().len(), 4);
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(p(&[2, 1]).subpartitions().len(), 5);
    }

    #[test]
    fn reading_word_examples() {
        let tab = t(&[2, 1, 0], vec![vec![1, 1], vec![1, 2], vec![2, 3]]);
        assert_eq!(tab.reading_word().to_string(), "231211");
        assert!(SkewTableau::empty(p(&[2, 1])).reading_word().is_empty());
        assert_eq!(t(&[], vec![vec![3, 5]]).reading_word().to_string(), "35");
    }

    #[test]
    fn ballot_examples() {
        let h = t(&[2, 1, 0], vec![vec![1, 2], vec![1, 3], vec![1, 2]]);
        assert_eq!(h.reading_word().to_string(), "121312");
        assert!(!h.is_ballot());
        assert!(t(&[2, 1, 0], vec![vec![1, 1], vec![1, 2], vec![2, 3]]).is_ballot());
    }

    #[test]
    fn standardize_and_companion_word() {
        let u = t(&[3, 2, 0], vec![vec![1, 3], vec![2, 4], vec![1, 2, 3]]);
        let v = t(&[3, 2, 0], vec![vec![4, 6], vec![5, 7], vec![4, 5, 6]]);
        let std = t(&[3, 2, 0], vec![vec![2, 6], vec![4, 7], vec![1, 3, 5]]);
        assert_eq!(u.standardize(), std);
        assert_eq!(v.standardize(), std);
        assert_eq!(std.standardize(), std);
        for x in [&u, &v, &std] {
            assert_eq!(x.companion_word().to_string(), "2132313");
        }
        assert_eq!(
            t(&[], vec![vec![1, 1]]).standardize(),
            t(&[], vec![vec![1, 2]])
        );
        assert_eq!(
            t(&[], vec![vec![1, 2, 3]]).companion_word().to_string(),
            "111"
        );
        assert!(SkewTableau::empty(p(&[3])).companion_word().is_empty());
    }

    #[test]
    fn yamanouchi_examples() {
        assert_eq!(
            SkewTableau::yamanouchi(&p(&[2, 1])),
            t(&[], vec![vec![1, 1], vec![2]])
        );
        assert!(SkewTableau::yamanouchi(&p(&[0])).is_empty());
        let y = SkewTableau::yamanouchi(&p(&[6, 4, 0, 0]));
        assert_eq!(y.rows(), &[vec![1; 6], vec![2; 4]]);
    }

    #[test]
    fn restrict_rows_splits() {
        let tab = t(
            &[6, 4, 0, 0],
            vec![
                vec![1, 1, 1],
                vec![1, 1, 2],
                vec![1, 2, 2, 2, 2, 3],
                vec![3, 3, 3, 3, 4],
            ],
        );
        let (rest, head) = tab.restrict_rows(3).unwrap();
        assert_eq!(rest.rows(), &[vec![3, 3, 3, 3, 4]]);
        assert_eq!(head.num_rows(), 3);
        assert_eq!(head.outer(), &p(&[9, 7, 6]));
        let (rest, head) = tab.restrict_rows(0).unwrap();
        assert_eq!(rest, tab);
        assert!(head.is_empty() && head.num_rows() == 0);
        let (rest, head) = tab.restrict_rows(4).unwrap();
        assert!(rest.is_empty());
        assert_eq!(head, tab);
        assert!(tab.restrict_rows(5).is_err());
    }

    #[test]
    fn enumerators_small() {
        let s = |o: &[usize], i: &[usize]| SkewShape::new(p(o), p(i)).unwrap();
        assert_eq!(enumerate_ssyt(&s(&[1], &[]), 3).len(), 3);
        let two: Vec<String> = enumerate_ssyt(&s(&[2], &[]), 2)
            .iter()
            .map(|t| t.reading_word().to_string())
            .collect();
        assert_eq!(two, vec!["11", "12", "22"]);
        assert_eq!(enumerate_ssyt(&s(&[2, 1], &[]), 2).len(), 2);

        let b = enumerate_ballot(&s(&[2, 1], &[]), &p(&[2, 1]));
        assert_eq!(b, vec![SkewTableau::yamanouchi(&p(&[2, 1]))]);
        assert_eq!(
            enumerate_ballot(&s(&[3, 2, 1], &[2, 1]), &p(&[2, 1])).len(),
            2
        );
        let tab = t(&[2, 1, 0], vec![vec![1, 1], vec![1, 2], vec![2, 3]]);
        assert!(enumerate_ballot(&s(&[4, 3, 2], &[2, 1]), &p(&[3, 2, 1])).contains(&tab));
    }

    #[test]
    fn invalid_tableaux_rejected() {
        assert!(matches!(
            SkewTableau::from_rows(&[], vec![vec![2, 1]]),
            Err(TableauError::RowNotWeak(_))
        ));
        assert!(matches!(
            SkewTableau::from_rows(&[], vec![vec![1, 2], vec![1]]),
            Err(TableauError::ColumnNotStrict(_))
        ));
        assert!(SkewTableau::from_rows(&[1, 2], vec![vec![1], vec![]]).is_err());
    }
}
