//! JSON and plain-text forms of tableaux, glued pairs and two-colour frames.
//!
//! Text grids put one row per line, every line ending in a newline. Inner
//! blanks are `.`, entries are separated by single spaces. A glued pair
//! writes its Yamanouchi factor left of a `|`; a two-colour frame marks
//! letters of the outer (`V`) member with a trailing `*`.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::commutor::{Color, Entry, TwoColorTableau};
use crate::error::FormatError;
use crate::insertion::GluedPair;
use crate::tableau::{Letter, Partition, SkewShape, SkewTableau};

#[derive(Serialize, Deserialize)]
struct TableauJson {
    outer: Partition,
    inner: Partition,
    rows: Vec<Vec<Letter>>,
}

impl Serialize for SkewTableau {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        TableauJson {
            outer: self.outer().clone(),
            inner: self.inner().clone(),
            rows: self.rows().to_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SkewTableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = TableauJson::deserialize(d)?;
        let shape = SkewShape::new(j.outer, j.inner).map_err(D::Error::custom)?;
        SkewTableau::new(shape, j.rows).map_err(D::Error::custom)
    }
}

/// A glued pair serialises as its skew factor; the Yamanouchi factor is the
/// inner shape.
impl Serialize for GluedPair {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.skew().serialize(s)
    }
}

impl<'de> Deserialize<'de> for GluedPair {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        SkewTableau::deserialize(d).map(GluedPair::new)
    }
}

/// Frames serialise with string tokens, as in the text grid.
impl Serialize for TwoColorTableau {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct FrameJson<'a> {
            outer: &'a Partition,
            inner: &'a Partition,
            rows: Vec<Vec<String>>,
        }
        FrameJson {
            outer: &self.shape().outer,
            inner: &self.shape().inner,
            rows: self
                .rows()
                .iter()
                .map(|r| r.iter().map(entry_token).collect())
                .collect(),
        }
        .serialize(s)
    }
}

fn text_err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Text {
        line,
        msg: msg.into(),
    }
}

fn push_line(out: &mut String, tokens: impl IntoIterator<Item = String>) {
    let tokens: Vec<String> = tokens.into_iter().collect();
    out.push_str(&tokens.join(" "));
    out.push('\n');
}

/// Lines of a grid, ignoring trailing blank lines.
fn grid_lines(s: &str) -> Vec<&str> {
    let mut lines: Vec<&str> = s.lines().collect();
    while lines.last().is_some_and(|l| l.trim().is_empty()) {
        lines.pop();
    }
    lines
}

fn parse_letter(tok: &str, line: usize) -> Result<Letter, FormatError> {
    match tok.parse::<Letter>() {
        Ok(x) if x > 0 => Ok(x),
        _ => Err(text_err(line, format!("bad entry {tok:?}"))),
    }
}

/// Splits a row into its leading `.` count and the remaining tokens.
fn split_blanks(l: &str, line: usize) -> Result<(usize, Vec<&str>), FormatError> {
    let toks: Vec<&str> = l.split_whitespace().collect();
    let blanks = toks.iter().take_while(|t| **t == ".").count();
    if toks[blanks..].contains(&".") {
        return Err(text_err(line, "blank after a filled cell"));
    }
    Ok((blanks, toks[blanks..].to_vec()))
}

pub fn tableau_to_text(t: &SkewTableau) -> String {
    let mut out = String::new();
    for (i, row) in t.rows().iter().enumerate() {
        let blanks = (0..t.inner().get(i)).map(|_| ".".to_string());
        push_line(&mut out, blanks.chain(row.iter().map(|x| x.to_string())));
    }
    out
}

pub fn tableau_from_text(s: &str) -> Result<SkewTableau, FormatError> {
    let mut inner = Vec::new();
    let mut rows = Vec::new();
    for (k, l) in grid_lines(s).into_iter().enumerate() {
        let (blanks, toks) = split_blanks(l, k + 1)?;
        inner.push(blanks);
        rows.push(
            toks.into_iter()
                .map(|t| parse_letter(t, k + 1))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    Ok(SkewTableau::from_rows(&inner, rows)?)
}

pub fn pair_to_text(p: &GluedPair) -> String {
    let mut out = String::new();
    let mu = p.mu();
    for (i, row) in p.skew().rows().iter().enumerate() {
        let mut toks: Vec<String> = (0..mu.get(i)).map(|_| (i + 1).to_string()).collect();
        toks.push("|".into());
        toks.extend(row.iter().map(|x| x.to_string()));
        push_line(&mut out, toks);
    }
    out
}

/// Reads `yam | skew` rows; text without `|` is read as a tableau grid whose
/// inner blanks stand for the Yamanouchi factor.
pub fn pair_from_text(s: &str) -> Result<GluedPair, FormatError> {
    if !s.contains('|') {
        return tableau_from_text(s).map(GluedPair::new);
    }
    let mut inner = Vec::new();
    let mut rows = Vec::new();
    for (k, l) in grid_lines(s).into_iter().enumerate() {
        let (left, right) = l
            .split_once('|')
            .ok_or_else(|| text_err(k + 1, "missing '|'"))?;
        let mut count = 0;
        for tok in left.split_whitespace() {
            if parse_letter(tok, k + 1)? as usize != k + 1 {
                return Err(text_err(
                    k + 1,
                    format!("row {} of a Yamanouchi factor holds only {}", k + 1, k + 1),
                ));
            }
            count += 1;
        }
        inner.push(count);
        rows.push(
            right
                .split_whitespace()
                .map(|t| parse_letter(t, k + 1))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    Ok(GluedPair::new(SkewTableau::from_rows(&inner, rows)?))
}

fn entry_token(e: &Entry) -> String {
    match e.color {
        Color::U => e.value.to_string(),
        Color::V => format!("{}*", e.value),
    }
}

pub fn frame_to_text(f: &TwoColorTableau) -> String {
    let mut out = String::new();
    for (i, row) in f.rows().iter().enumerate() {
        let blanks = (0..f.shape().inner.get(i)).map(|_| ".".to_string());
        push_line(&mut out, blanks.chain(row.iter().map(entry_token)));
    }
    out
}

/// Reads a two-colour grid. The origin of each inner-member letter is taken
/// to be its value, which is its starting row when that member is Yamanouchi.
pub fn frame_from_text(s: &str) -> Result<TwoColorTableau, FormatError> {
    let mut inner = Vec::new();
    let mut rows = Vec::new();
    for (k, l) in grid_lines(s).into_iter().enumerate() {
        let (blanks, toks) = split_blanks(l, k + 1)?;
        inner.push(blanks);
        let mut row = Vec::with_capacity(toks.len());
        for tok in toks {
            let (digits, color) = match tok.strip_suffix('*') {
                Some(d) => (d, Color::V),
                None => (tok, Color::U),
            };
            let value = parse_letter(digits, k + 1)?;
            let origin = if color == Color::U { value as usize } else { 0 };
            row.push(Entry {
                value,
                color,
                origin,
            });
        }
        rows.push(row);
    }
    let inner = Partition::new(inner)?;
    TwoColorTableau::from_entries(inner, rows).map_err(|e| text_err(0, e.to_string()))
}

/// JSON when the input starts with `{`, a text grid otherwise.
pub fn parse_tableau(s: &str) -> Result<SkewTableau, FormatError> {
    if s.trim_start().starts_with('{') {
        Ok(serde_json::from_str(s)?)
    } else {
        tableau_from_text(s)
    }
}

pub fn parse_pair(s: &str) -> Result<GluedPair, FormatError> {
    if s.trim_start().starts_with('{') {
        Ok(serde_json::from_str(s)?)
    } else {
        pair_from_text(s)
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("values serialise")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(inner: &[usize], rows: Vec<Vec<Letter>>) -> SkewTableau {
        SkewTableau::from_rows(inner, rows).unwrap()
    }

    #[test]
    fn tableau_text_round_trip() {
        let x = t(&[2, 1, 0], vec![vec![1, 1], vec![1, 2], vec![2, 3]]);
        let s = tableau_to_text(&x);
        assert_eq!(s, ". . 1 1\n. 1 2\n2 3\n");
        assert_eq!(tableau_from_text(&s).unwrap(), x);
        assert_eq!(tableau_to_text(&tableau_from_text(&s).unwrap()), s);
        let e = SkewTableau::empty(Partition::new(vec![2, 1]).unwrap());
        assert_eq!(tableau_to_text(&e), ". .\n.\n");
        assert_eq!(tableau_from_text(". .\n.\n").unwrap(), e);
        assert_eq!(tableau_to_text(&SkewTableau::empty(Partition::empty())), "");
    }

    #[test]
    fn tableau_json_round_trip() {
        let x = t(
            &[6, 4, 0, 0],
            vec![
                vec![1, 1, 1],
                vec![1, 1, 2],
                vec![1, 2, 2, 2, 2, 3],
                vec![3, 3, 3, 3, 4],
            ],
        );
        let j = to_json(&x);
        assert_eq!(
            j,
            r#"{"outer":[9,7,6,5],"inner":[6,4,0,0],"rows":[[1,1,1],[1,1,2],[1,2,2,2,2,3],[3,3,3,3,4]]}"#
        );
        let back: SkewTableau = serde_json::from_str(&j).unwrap();
        assert_eq!(back, x);
        assert_eq!(to_json(&back), j);
        assert!(parse_tableau(r#"{"outer":[2],"inner":[],"rows":[[2,1]]}"#).is_err());
    }

    #[test]
    fn pair_text() {
        let p = GluedPair::new(t(&[2, 1, 0], vec![vec![1, 1], vec![1, 2], vec![2, 3]]));
        let s = pair_to_text(&p);
        assert_eq!(s, "1 1 | 1 1\n2 | 1 2\n| 2 3\n");
        assert_eq!(pair_from_text(&s).unwrap(), p);
        assert_eq!(pair_from_text(". . 1 1\n. 1 2\n2 3\n").unwrap(), p);
        assert!(pair_from_text("1 2 | 1\n").is_err());
        assert_eq!(pair_to_text(&GluedPair::empty()), "");
    }

    #[test]
    fn frame_text() {
        let s = "1 1 1 1*\n2 2 2\n1* 2* 2*\n";
        let f = frame_from_text(s).unwrap();
        assert_eq!(frame_to_text(&f), s);
        assert!(frame_from_text("2 1\n").is_err());
        assert!(frame_from_text("1 1*\n1 1*\n").is_err());
    }

    #[test]
    fn bad_text_reports_line() {
        match tableau_from_text("1 2\n. x\n") {
            Err(FormatError::Text { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(tableau_from_text("1 . 2\n").is_err());
    }
}
