//! Schensted insertion, RSK and Knuth equivalence of words.

use std::collections::{HashSet, VecDeque};

use crate::error::KnuthError;
use crate::tableau::{Cell, Letter, Partition, SkewShape, SkewTableau};
use crate::word::Word;

/// Row-inserts `x` into one row of filled entries: replaces the leftmost
/// entry strictly greater than `x` and returns it with its index, or appends.
pub(crate) fn bump_in_row(row: &mut Vec<Letter>, x: Letter) -> (usize, Option<Letter>) {
    let k = row.partition_point(|&y| y <= x);
    if k == row.len() {
        row.push(x);
        (k, None)
    } else {
        (k, Some(std::mem::replace(&mut row[k], x)))
    }
}

/// Classical RSK output: insertion tableau and standard recording tableau.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RskPair {
    pub p: SkewTableau,
    pub q: SkewTableau,
}

/// Schensted row insertion of `x` into a normal-shape tableau. Returns the
/// new tableau and the created cell.
pub fn schensted_insert(p: &SkewTableau, x: Letter) -> (SkewTableau, Cell) {
    assert!(
        p.inner().is_empty(),
        "schensted_insert needs a normal shape"
    );
    let mut rows = p.rows().to_vec();
    let cell = insert_rows(&mut rows, x);
    let outer = Partition::from_parts_unchecked(rows.iter().map(Vec::len).collect());
    (
        SkewTableau::from_parts_unchecked(SkewShape::normal(outer), rows),
        cell,
    )
}

fn insert_rows(rows: &mut Vec<Vec<Letter>>, mut x: Letter) -> Cell {
    let mut i = 0;
    loop {
        if i == rows.len() {
            rows.push(Vec::new());
        }
        match bump_in_row(&mut rows[i], x) {
            (k, None) => return Cell::new(i + 1, k + 1),
            (_, Some(y)) => {
                x = y;
                i += 1;
            }
        }
    }
}

/// Left-to-right Schensted insertion with a standard recording tableau.
pub fn rsk(w: &Word) -> RskPair {
    let mut p: Vec<Vec<Letter>> = Vec::new();
    let mut q: Vec<Vec<Letter>> = Vec::new();
    for (step, &x) in w.letters().iter().enumerate() {
        let cell = insert_rows(&mut p, x);
        if q.len() < cell.row {
            q.push(Vec::new());
        }
        q[cell.row - 1].push(step as Letter + 1);
    }
    let shape = SkewShape::normal(Partition::from_parts_unchecked(
        p.iter().map(Vec::len).collect(),
    ));
    RskPair {
        p: SkewTableau::from_parts_unchecked(shape.clone(), p),
        q: SkewTableau::from_parts_unchecked(shape, q),
    }
}

/// The insertion tableau alone, as rows.
pub fn rectify_word(w: &Word) -> Vec<Vec<Letter>> {
    let mut p = Vec::new();
    for &x in w.letters() {
        insert_rows(&mut p, x);
    }
    p
}

pub fn knuth_equivalent(u: &Word, v: &Word) -> bool {
    u.len() == v.len() && rectify_word(u) == rectify_word(v)
}

/// Words obtained by one elementary Knuth move on an adjacent triple:
/// `x z y <-> z x y` for `x <= y < z`, and `y x z <-> y z x` for `x < y <= z`.
pub fn elementary_moves(w: &Word) -> Vec<Word> {
    let l = w.letters();
    let mut out = Vec::new();
    let mut push = |k: usize, a: Letter, b: Letter, c: Letter| {
        let mut v = l.to_vec();
        v[k] = a;
        v[k + 1] = b;
        v[k + 2] = c;
        out.push(Word::from(v));
    };
    for k in 0..l.len().saturating_sub(2) {
        let (a, b, c) = (l[k], l[k + 1], l[k + 2]);
        // a b c = x z y with x <= y < z  ->  z x y
        if a <= c && c < b {
            push(k, b, a, c);
        }
        // a b c = z x y with x <= y < z  ->  x z y
        if b <= c && c < a {
            push(k, b, a, c);
        }
        // a b c = y x z with x < y <= z  ->  y z x
        if b < a && a <= c {
            push(k, a, c, b);
        }
        // a b c = y z x with x < y <= z  ->  y x z
        if c < a && a <= b {
            push(k, a, c, b);
        }
    }
    out
}

/// Breadth-first closure of `w` under elementary moves, in discovery order.
pub fn knuth_class(w: &Word, cap: usize) -> Result<Vec<Word>, KnuthError> {
    let mut seen: HashSet<Word> = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(v) = queue.pop_front() {
        out.push(v.clone());
        if out.len() > cap {
            return Err(KnuthError::CapExceeded { cap });
        }
        for m in elementary_moves(&v) {
            if seen.insert(m.clone()) {
                queue.push_back(m);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn tab(rows: Vec<Vec<Letter>>) -> SkewTableau {
        SkewTableau::from_rows(&[], rows).unwrap()
    }

    #[test]
    fn schensted_examples() {
        let (p, c) = schensted_insert(&tab(vec![vec![1, 2], vec![2]]), 1);
        assert_eq!(p, tab(vec![vec![1, 1], vec![2, 2]]));
        assert_eq!(c, Cell::new(2, 2));
        let (p, c) = schensted_insert(&tab(vec![vec![1, 3], vec![2]]), 9);
        assert_eq!(p.row(1), &[1, 3, 9]);
        assert_eq!(c, Cell::new(1, 3));
        let (p, c) = schensted_insert(&SkewTableau::empty(Partition::empty()), 1);
        assert_eq!(p, tab(vec![vec![1]]));
        assert_eq!(c, Cell::new(1, 1));
    }

    #[test]
    fn rsk_examples() {
        let r = rsk(&Word::new());
        assert!(r.p.is_empty() && r.q.is_empty());
        assert_eq!(rsk(&w("1123")).p, tab(vec![vec![1, 1, 2, 3]]));
        let r = rsk(&w("2132313"));
        assert_eq!(r.p.outer(), r.q.outer());
        assert!(r.q.is_standard());
        for v in knuth_class(&w("2132313"), 1000).unwrap() {
            assert_eq!(rsk(&v).p, r.p);
        }
    }

    #[test]
    fn equivalence_examples() {
        assert!(knuth_equivalent(&w("12121"), &w("21121")));
        assert!(knuth_equivalent(&w("312"), &w("312")));
        assert!(!knuth_equivalent(&w("12"), &w("21")));
        assert_eq!(rectify_word(&w("12")), vec![vec![1, 2]]);
        assert_eq!(rectify_word(&w("21")), vec![vec![1], vec![2]]);
    }

    #[test]
    fn moves_examples() {
        assert!(elementary_moves(&w("12121")).contains(&w("21121")));
        assert!(elementary_moves(&w("12")).is_empty());
        assert_eq!(elementary_moves(&w("132")), vec![w("312")]);
        for m in elementary_moves(&w("2132313")) {
            assert!(knuth_equivalent(&m, &w("2132313")));
        }
    }

    #[test]
    fn class_examples() {
        assert!(knuth_class(&w("12121"), 100).unwrap().contains(&w("21121")));
        assert_eq!(knuth_class(&w("1"), 10).unwrap(), vec![w("1")]);
        assert_eq!(
            knuth_class(&w("321"), 10).unwrap(),
            vec![w("321")],
            "a column word is alone in its class"
        );
        assert!(matches!(
            knuth_class(&w("21345"), 3),
            Err(KnuthError::CapExceeded { cap: 3 })
        ));
    }

    fn all_words(len: usize, alphabet: Letter) -> Vec<Word> {
        let mut out = vec![Word::new()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (1..=alphabet).map(move |x| {
                        let mut v = v.clone();
                        v.push(x);
                        v
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn class_matches_rsk_criterion_exhaustively() {
        use std::collections::HashMap;
        for len in 0..=6 {
            let mut groups: HashMap<Vec<Vec<Letter>>, HashSet<Word>> = HashMap::new();
            let words = all_words(len, 4);
            for u in &words {
                groups.entry(rectify_word(u)).or_default().insert(u.clone());
            }
            for u in &words {
                let class: HashSet<Word> = knuth_class(u, 10_000).unwrap().into_iter().collect();
                assert_eq!(&class, &groups[&rectify_word(u)], "{u}");
            }
        }
    }

    #[test]
    fn ballot_words_rectify_to_yamanouchi() {
        for len in 0..=8 {
            for u in all_words(len, 4).into_iter().filter(Word::is_ballot) {
                let content = u.content().to_partition().unwrap();
                assert_eq!(rsk(&u).p, SkewTableau::yamanouchi(&content), "{u}");
            }
        }
    }
}
