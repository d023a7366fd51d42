//! Internal row insertion on skew tableaux.
//!
//! `internal_insert(T, i)` vacates the first cell of row `i` of the filled
//! region, adds it to the inner shape, and Schensted-inserts the evicted entry
//! from row `i + 1` downwards; the route settles in one new outer box. When row
//! `i` has no filled cells the operation only adjoins a blank box to both
//! borders.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::InsertionError;
use crate::knuth::bump_in_row;
use crate::tableau::{Cell, Letter, Partition, SkewShape, SkewTableau};
use crate::word::Word;

/// Record of one internal insertion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InsertionTrace {
    /// Cell moved from the filled region into the inner border.
    pub vacated: Cell,
    /// Cells visited by the bumping route, starting at `vacated`; empty for a
    /// blank adjunction.
    pub route: Vec<Cell>,
    /// Box added to the outer border. Equal to `vacated` for a blank adjunction.
    pub created: Cell,
}

impl InsertionTrace {
    pub fn is_blank(&self) -> bool {
        self.route.is_empty()
    }

    /// Column of the route in row `row`, if it passes there.
    pub fn column_in_row(&self, row: usize) -> Option<usize> {
        self.route.iter().find(|c| c.row == row).map(|c| c.col)
    }
}

/// Rows (1-based) at which an internal insertion is defined: row 1, and every
/// row whose inner part is strictly shorter than the one above.
pub fn inner_corners(t: &SkewTableau) -> Vec<usize> {
    inner_corners_of(t.inner())
}

pub(crate) fn inner_corners_of(mu: &Partition) -> Vec<usize> {
    let mut out = vec![1];
    for i in 2..=mu.length() + 1 {
        if mu.get(i - 2) > mu.get(i - 1) {
            out.push(i);
        }
    }
    out
}

fn is_inner_corner(mu: &Partition, i: usize) -> bool {
    i == 1 || (i >= 2 && mu.get(i - 2) > mu.get(i - 1))
}

pub fn internal_insert(
    t: &SkewTableau,
    i: usize,
) -> Result<(SkewTableau, InsertionTrace), InsertionError> {
    let mu = t.inner();
    if !is_inner_corner(mu, i) {
        return Err(InsertionError::NotInnerCorner {
            row: i,
            available: inner_corners(t),
        });
    }
    let vacated = Cell::new(i, mu.get(i - 1) + 1);
    let (shape, mut rows) = t.clone().into_parts();
    let inner = shape.inner.with_box(i - 1)?;

    if rows.get(i - 1).is_none_or(Vec::is_empty) {
        let outer = shape.outer.with_box(i - 1)?;
        let mut out = SkewTableau::from_parts_unchecked(shape, rows);
        out.set_shape(SkewShape { outer, inner });
        let trace = InsertionTrace {
            vacated,
            route: Vec::new(),
            created: vacated,
        };
        return Ok((out, trace));
    }

    let mut x = rows[i - 1].remove(0);
    let mut route = vec![vacated];
    let mut r = i; // 0-based index of the row receiving `x`
    let created = loop {
        if r == rows.len() {
            rows.push(Vec::new());
        }
        let (k, bumped) = bump_in_row(&mut rows[r], x);
        let cell = Cell::new(r + 1, inner.get(r) + k + 1);
        route.push(cell);
        match bumped {
            Some(y) => {
                x = y;
                r += 1;
            }
            None => break cell,
        }
    };
    let outer = shape.outer.with_box(created.row - 1)?;
    let out = SkewTableau::from_parts_unchecked(SkewShape { outer, inner }, rows);
    Ok((
        out,
        InsertionTrace {
            vacated,
            route,
            created,
        },
    ))
}

/// `phi_u T`: the letters of `u` are applied right to left.
pub fn apply_order_word(t: &SkewTableau, u: &Word) -> Result<SkewTableau, InsertionError> {
    apply_order_word_traced(t, u).map(|(t, _)| t)
}

/// As [`apply_order_word`], also returning one trace per letter in
/// application order. Step numbers in errors are 1-based in that order.
pub fn apply_order_word_traced(
    t: &SkewTableau,
    u: &Word,
) -> Result<(SkewTableau, Vec<InsertionTrace>), InsertionError> {
    let mut cur = t.clone();
    let mut traces = Vec::with_capacity(u.len());
    for (step, &i) in u.letters().iter().rev().enumerate() {
        let (next, trace) =
            internal_insert(&cur, i as usize).map_err(|e| InsertionError::OrderWord {
                step: step + 1,
                source: Box::new(e),
            })?;
        cur = next;
        traces.push(trace);
    }
    Ok((cur, traces))
}

/// A Yamanouchi tableau glued to a skew tableau along its outer border.
///
/// The Yamanouchi factor is determined by the inner shape of `skew`, so only
/// the skew factor is stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GluedPair {
    skew: SkewTableau,
}

impl GluedPair {
    pub fn new(skew: SkewTableau) -> Self {
        GluedPair { skew }
    }

    /// Glues `yam` and `skew`, checking that `yam` is the Yamanouchi tableau
    /// of the inner shape of `skew`.
    pub fn from_parts(yam: &SkewTableau, skew: SkewTableau) -> Result<Self, InsertionError> {
        if !yam.is_yamanouchi() || yam.outer() != skew.inner() {
            return Err(InsertionError::BorderMismatch {
                left: yam.outer().parts().to_vec(),
                right: skew.inner().parts().to_vec(),
            });
        }
        Ok(GluedPair { skew })
    }

    pub fn empty() -> Self {
        GluedPair {
            skew: SkewTableau::empty(Partition::empty()),
        }
    }

    pub fn yam(&self) -> SkewTableau {
        SkewTableau::yamanouchi(self.skew.inner())
    }

    pub fn skew(&self) -> &SkewTableau {
        &self.skew
    }

    pub fn into_skew(self) -> SkewTableau {
        self.skew
    }

    /// Shape of the Yamanouchi factor.
    pub fn mu(&self) -> &Partition {
        self.skew.inner()
    }

    /// Shape of the union.
    pub fn lambda(&self) -> &Partition {
        self.skew.outer()
    }

    /// Content of the skew factor, when it is a partition.
    pub fn nu(&self) -> Option<Partition> {
        self.skew.content().to_partition()
    }

    /// Whether the skew factor is ballot.
    pub fn is_lr(&self) -> bool {
        self.skew.is_ballot()
    }

    /// Number of rows of the union.
    pub fn num_rows(&self) -> usize {
        self.skew.num_rows()
    }

    /// The first `i` rows of both factors.
    pub fn head(&self, i: usize) -> GluedPair {
        GluedPair {
            skew: self.skew.head(i),
        }
    }
}

/// Internal insertion at row `i` on the skew factor, with the Yamanouchi
/// factor gaining an `i` at the end of its row `i`.
pub fn extended_insert(p: &GluedPair, i: usize) -> Result<GluedPair, InsertionError> {
    extended_insert_traced(p, i).map(|(p, _)| p)
}

pub fn extended_insert_traced(
    p: &GluedPair,
    i: usize,
) -> Result<(GluedPair, InsertionTrace), InsertionError> {
    let n = p.num_rows();
    if n >= 1 && i == n + 1 && p.mu().get(n - 1) == 0 {
        return Err(InsertionError::ExtendedRow { row: i, prev: n });
    }
    let (skew, trace) = internal_insert(&p.skew, i)?;
    Ok((GluedPair { skew }, trace))
}

/// Skew RSK with empty matrix word: `(T, U) -> (P, Q)` where the entries of
/// `U`, taken in standard order, dictate the internal insertions into `T`, and
/// `Q` records each created box with the original `U` entry.
pub fn skew_rsk_forward(
    t: &SkewTableau,
    u: &SkewTableau,
) -> Result<(SkewTableau, SkewTableau), InsertionError> {
    if t.inner() != u.inner() {
        return Err(InsertionError::BorderMismatch {
            left: t.inner().parts().to_vec(),
            right: u.inner().parts().to_vec(),
        });
    }
    let mut p = t.clone();
    let mut recorded: BTreeMap<Cell, Letter> = BTreeMap::new();
    for (cell, value) in u.standard_order() {
        let (next, trace) = internal_insert(&p, cell.row)?;
        debug_assert_eq!(trace.vacated, cell);
        recorded.insert(trace.created, value);
        p = next;
    }
    let q = tableau_from_cells(p.outer().trimmed(), t.outer().trimmed(), &recorded)?;
    Ok((p, q))
}

/// Inverse of [`skew_rsk_forward`]: undoes the recorded insertions in reverse
/// standard order of `Q`, reverse-bumping from each recorded box.
pub fn skew_rsk_inverse(
    p: &SkewTableau,
    q: &SkewTableau,
) -> Result<(SkewTableau, SkewTableau), InsertionError> {
    if p.outer() != q.outer() {
        return Err(InsertionError::BorderMismatch {
            left: p.outer().parts().to_vec(),
            right: q.outer().parts().to_vec(),
        });
    }
    let beta = p.inner().trimmed();
    let (shape, mut rows) = p.clone().into_parts();
    let mut outer = shape.outer;
    let mut inner = shape.inner;
    let mut restored: BTreeMap<Cell, Letter> = BTreeMap::new();

    for (b, value) in q.standard_order().into_iter().rev() {
        let malformed = || InsertionError::MalformedReverse { cell: b };
        let r = b.row - 1;
        if b.col != outer.get(r) {
            return Err(malformed());
        }
        let vacated = if b.col <= inner.get(r) {
            // blank adjunction
            if inner.get(r) != outer.get(r) {
                return Err(malformed());
            }
            inner = inner.without_box(r).map_err(|_| malformed())?;
            outer = outer.without_box(r).map_err(|_| malformed())?;
            b
        } else {
            let mut x = rows[r].pop().ok_or_else(malformed)?;
            outer = outer.without_box(r).map_err(|_| malformed())?;
            let mut k = r;
            loop {
                if k == 0 {
                    return Err(malformed());
                }
                k -= 1;
                let row = &mut rows[k];
                let pos = row.partition_point(|&y| y < x);
                if pos > 0 {
                    x = std::mem::replace(&mut row[pos - 1], x);
                } else {
                    let col = inner.get(k);
                    if col == 0 {
                        return Err(malformed());
                    }
                    inner = inner.without_box(k).map_err(|_| malformed())?;
                    row.insert(0, x);
                    break Cell::new(k + 1, col);
                }
            }
        };
        restored.insert(vacated, value);
    }

    let n = outer.length();
    rows.truncate(n);
    let t = SkewTableau::new(SkewShape::new(outer, inner.clone())?, rows)?;
    let u = tableau_from_cells(beta, inner.trimmed(), &restored)?;
    Ok((t, u))
}

fn tableau_from_cells(
    outer: Partition,
    inner: Partition,
    cells: &BTreeMap<Cell, Letter>,
) -> Result<SkewTableau, InsertionError> {
    let shape = SkewShape::new(outer, inner)?;
    let mut rows = vec![Vec::new(); shape.num_rows()];
    for (&c, &x) in cells {
        if !shape.contains_cell(c) {
            return Err(InsertionError::MalformedReverse { cell: c });
        }
        rows[c.row - 1].push(x);
    }
    Ok(SkewTableau::new(shape, rows)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knuth::knuth_equivalent;
    use crate::tableau::enumerate_ssyt;

    fn t(inner: &[usize], rows: Vec<Vec<Letter>>) -> SkewTableau {
        SkewTableau::from_rows(inner, rows).unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn example_t() -> SkewTableau {
        t(&[1, 0], vec![vec![1, 3], vec![2, 3]])
    }

    #[test]
    fn inner_corner_examples() {
        let tab = example_t();
        let corners = inner_corners(&tab);
        assert_eq!(corners, vec![1, 2]);
        for i in 1..=4 {
            assert_eq!(
                internal_insert(&tab, i).is_ok(),
                corners.contains(&i),
                "row {i}"
            );
        }
        assert_eq!(
            inner_corners(&SkewTableau::empty(Partition::empty())),
            vec![1]
        );
        assert_eq!(inner_corners(&SkewTableau::empty(p(&[2]))), vec![1, 2]);
    }

    #[test]
    fn order_word_example() {
        let expected = SkewTableau::new(
            SkewShape::new(p(&[4, 3, 2, 1]), p(&[4, 2, 0, 0])).unwrap(),
            vec![vec![], vec![3], vec![1, 3], vec![2]],
        )
        .unwrap();
        assert_eq!(
            apply_order_word(&example_t(), &w("12121")).unwrap(),
            expected
        );
        assert_eq!(
            apply_order_word(&example_t(), &w("21121")).unwrap(),
            expected
        );
        assert_eq!(
            apply_order_word(&example_t(), &Word::new()).unwrap(),
            example_t()
        );
    }

    #[test]
    fn blank_adjunction() {
        let (e, trace) = internal_insert(&SkewTableau::empty(Partition::empty()), 1).unwrap();
        assert_eq!(e, SkewTableau::empty(p(&[1])));
        assert!(trace.is_blank());
        assert_eq!(trace.created, trace.vacated);
    }

    #[test]
    fn filled_insertion_trace() {
        let (out, trace) = internal_insert(&example_t(), 1).unwrap();
        assert_eq!(trace.vacated, Cell::new(1, 2));
        assert_eq!(
            trace.route,
            vec![Cell::new(1, 2), Cell::new(2, 1), Cell::new(3, 1)]
        );
        assert_eq!(trace.created, Cell::new(3, 1));
        assert_eq!(out.rows(), &[vec![3], vec![1, 3], vec![2]]);
    }

    #[test]
    fn order_word_reports_step() {
        // After phi_1 the inner shape is (2); row 3 is not a corner.
        let err = apply_order_word(&example_t(), &w("31")).unwrap_err();
        assert!(
            matches!(err, InsertionError::OrderWord { step: 2, .. }),
            "{err}"
        );
    }

    #[test]
    fn extended_insert_requires_nonempty_previous_row() {
        let pair = GluedPair::new(t(&[0, 0], vec![vec![1], vec![2]]));
        assert!(matches!(
            extended_insert(&pair, 3),
            Err(InsertionError::ExtendedRow { row: 3, prev: 2 })
        ));
        let pair = GluedPair::new(t(&[2], vec![vec![1, 1]]));
        let grown = extended_insert(&pair, 2).unwrap();
        assert_eq!(grown.mu(), &p(&[2, 1]));
        assert_eq!(grown.skew().reading_word(), w("11"));
    }

    #[test]
    fn forward_example_and_inverse() {
        let u = t(&[1, 0], vec![vec![1, 3, 5], vec![2, 4]]);
        assert_eq!(u.companion_word(), w("12121"));
        let (pp, q) = skew_rsk_forward(&example_t(), &u).unwrap();
        assert_eq!(pp, apply_order_word(&example_t(), &w("12121")).unwrap());
        assert_eq!(q.outer(), pp.outer());
        assert_eq!(q.inner(), example_t().outer());
        assert!(knuth_equivalent(&q.reading_word(), &u.reading_word()));
        let (t2, u2) = skew_rsk_inverse(&pp, &q).unwrap();
        assert_eq!(t2, example_t());
        assert_eq!(u2, u);
    }

    #[test]
    fn forward_with_empty_recording() {
        let e = SkewTableau::empty(p(&[1]));
        let (pp, q) = skew_rsk_forward(&example_t(), &e).unwrap();
        assert_eq!(pp, example_t());
        assert!(q.is_empty());
        assert_eq!(q.inner(), example_t().outer());
        let (t2, u2) = skew_rsk_inverse(&pp, &q).unwrap();
        assert_eq!((t2, u2), (example_t(), e));
        assert!(skew_rsk_forward(&example_t(), &SkewTableau::empty(p(&[2]))).is_err());
    }

    #[test]
    fn small_round_trip_sweep() {
        for mu in Partition::all_up_to(2) {
            let shapes: Vec<SkewShape> = Partition::all_up_to(4)
                .into_iter()
                .filter(|l| l.contains(&mu))
                .map(|l| SkewShape::new(l, mu.clone()).unwrap())
                .collect();
            for ts in &shapes {
                for us in &shapes {
                    for tt in enumerate_ssyt(ts, 2) {
                        for uu in enumerate_ssyt(us, 2) {
                            let (pp, q) = skew_rsk_forward(&tt, &uu).unwrap();
                            assert_eq!(skew_rsk_inverse(&pp, &q).unwrap(), (tt.clone(), uu));
                        }
                    }
                }
            }
        }
    }
}
