//! Replays the worked examples stored under `fixtures/` and compares every
//! displayed frame byte for byte.

use serde_json::Value;

use crate::commutor::{
    glue_outer, gt_order_word, nu_hat, rho1_internal, rho1_internal_traced, rho1_scratch_frames,
    rho1_switching, staged_decomposition, switch_all, switch_path, Block, SwitchStrategy,
    TwoColorTableau,
};
use crate::format::{
    frame_from_text, frame_to_text, pair_from_text, pair_to_text, tableau_from_text,
    tableau_to_text,
};
use crate::insertion::{apply_order_word, extended_insert, GluedPair};
use crate::tableau::{Partition, SkewTableau};
use crate::word::Word;

const FIXTURES: &[(&str, &str)] = &[
    ("companion", include_str!("../fixtures/companion.json")),
    ("ballot", include_str!("../fixtures/ballot.json")),
    (
        "switch-sequence",
        include_str!("../fixtures/switch-sequence.json"),
    ),
    ("staged-a", include_str!("../fixtures/staged-a.json")),
    ("staged-b", include_str!("../fixtures/staged-b.json")),
    ("knuth-order", include_str!("../fixtures/knuth-order.json")),
    ("scratch", include_str!("../fixtures/scratch.json")),
    ("internal", include_str!("../fixtures/internal.json")),
    (
        "staged-final",
        include_str!("../fixtures/staged-final.json"),
    ),
];

/// Bound on the states explored when matching consecutive switch frames.
const PATH_LIMIT: usize = 200_000;

pub fn fixture_ids() -> Vec<&'static str> {
    FIXTURES.iter().map(|(id, _)| *id).collect()
}

pub fn fixture_text(id: &str) -> Option<&'static str> {
    FIXTURES.iter().find(|(k, _)| *k == id).map(|(_, t)| *t)
}

#[derive(Clone, Debug)]
pub struct GoldenOutcome {
    pub id: String,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl GoldenOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs the named examples, or all of them for an empty list.
pub fn run(ids: &[String]) -> Result<Vec<GoldenOutcome>, String> {
    let selected: Vec<&str> = if ids.is_empty() {
        fixture_ids()
    } else {
        ids.iter().map(String::as_str).collect()
    };
    selected
        .into_iter()
        .map(|id| {
            fixture_text(id)
                .map(|text| run_fixture(id, text))
                .ok_or_else(|| {
                    format!(
                        "unknown example {id:?}; known: {}",
                        fixture_ids().join(", ")
                    )
                })
        })
        .collect()
}

/// Replays one fixture given its JSON text.
pub fn run_fixture(id: &str, json: &str) -> GoldenOutcome {
    let mut c = Checker::default();
    match serde_json::from_str::<Value>(json) {
        Ok(v) => {
            if let Err(e) = replay(id, &v, &mut c) {
                c.fail(format!("fixture error: {e}"));
            }
        }
        Err(e) => c.fail(format!("fixture is not JSON: {e}")),
    }
    GoldenOutcome {
        id: id.to_string(),
        checks: c.checks,
        failures: c.failures,
    }
}

#[derive(Default)]
struct Checker {
    checks: usize,
    failures: Vec<String>,
}

impl Checker {
    fn fail(&mut self, msg: String) {
        self.failures.push(msg);
    }

    fn check(&mut self, label: &str, ok: bool) {
        self.checks += 1;
        if !ok {
            self.fail(format!("{label}: does not hold"));
        }
    }

    fn same(&mut self, label: &str, expected: &str, actual: &str) {
        self.checks += 1;
        if expected != actual {
            self.fail(format!("{label}:\n{}", frame_diff(expected, actual)));
        }
    }
}

/// Line-by-line diff, `-` for expected and `+` for actual.
pub fn frame_diff(expected: &str, actual: &str) -> String {
    let e: Vec<&str> = expected.lines().collect();
    let a: Vec<&str> = actual.lines().collect();
    let mut out = String::new();
    for k in 0..e.len().max(a.len()) {
        match (e.get(k), a.get(k)) {
            (Some(x), Some(y)) if x == y => out.push_str(&format!("    {x}\n")),
            (x, y) => {
                if let Some(x) = x {
                    out.push_str(&format!("  - {x}\n"));
                }
                if let Some(y) = y {
                    out.push_str(&format!("  + {y}\n"));
                }
            }
        }
    }
    out
}

type R<T> = Result<T, String>;

fn field<'a>(v: &'a Value, key: &str) -> R<&'a Value> {
    v.get(key).ok_or_else(|| format!("missing field {key:?}"))
}

fn grid(v: &Value, key: &str) -> R<String> {
    let lines = field(v, key)?
        .as_array()
        .ok_or_else(|| format!("{key:?} is not a list of lines"))?;
    let mut out = String::new();
    for l in lines {
        out.push_str(
            l.as_str()
                .ok_or_else(|| format!("{key:?} holds a non-string line"))?,
        );
        out.push('\n');
    }
    Ok(out)
}

fn string(v: &Value, key: &str) -> R<String> {
    field(v, key)?
        .as_str()
        .map(str::to_string)
        .ok_or_else(|| format!("{key:?} is not a string"))
}

fn word(v: &Value, key: &str) -> R<Word> {
    string(v, key)?.parse().map_err(|e| format!("{key:?}: {e}"))
}

fn number(v: &Value, key: &str) -> R<usize> {
    field(v, key)?
        .as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| format!("{key:?} is not a number"))
}

fn partition(v: &Value, key: &str) -> R<Partition> {
    serde_json::from_value(field(v, key)?.clone()).map_err(|e| format!("{key:?}: {e}"))
}

fn tableau(v: &Value, key: &str) -> R<SkewTableau> {
    tableau_from_text(&grid(v, key)?).map_err(|e| format!("{key:?}: {e}"))
}

fn pair(v: &Value, key: &str) -> R<GluedPair> {
    pair_from_text(&grid(v, key)?).map_err(|e| format!("{key:?}: {e}"))
}

fn frames(v: &Value, key: &str) -> R<Vec<String>> {
    let list = field(v, key)?
        .as_array()
        .ok_or_else(|| format!("{key:?} is not a list"))?;
    list.iter()
        .enumerate()
        .map(|(k, f)| {
            grid(&serde_json::json!({ "f": f }), "f").map_err(|e| format!("{key}[{k}]: {e}"))
        })
        .collect()
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> R<T> {
    r.map_err(|e| e.to_string())
}

fn replay(id: &str, v: &Value, c: &mut Checker) -> R<()> {
    match id {
        "companion" => companion(v, c),
        "ballot" => ballot(v, c),
        "switch-sequence" => switch_sequence(v, c),
        "staged-a" | "staged-b" => staged(id, v, c),
        "knuth-order" => knuth_order(v, c),
        "scratch" => scratch(v, c),
        "internal" => internal(v, c),
        "staged-final" => staged_final(v, c),
        _ => Err(format!("no replay for {id:?}")),
    }
}

fn companion(v: &Value, c: &mut Checker) -> R<()> {
    let expected_std = grid(v, "std")?;
    let w = string(v, "companion_word")?;
    for key in ["u", "v"] {
        let t = tableau(v, key)?;
        c.same(
            &format!("std {key}"),
            &expected_std,
            &tableau_to_text(&t.standardize()),
        );
        c.same(
            &format!("companion word of {key}"),
            &w,
            &t.companion_word().to_string(),
        );
    }
    let s = tableau(v, "std")?;
    c.same("companion word of std", &w, &s.companion_word().to_string());
    Ok(())
}

fn ballot(v: &Value, c: &mut Checker) -> R<()> {
    for t in field(v, "tableaux")?
        .as_array()
        .ok_or("tableaux is not a list")?
    {
        let name = string(t, "name")?;
        let tab = tableau(t, "grid")?;
        let w = string(t, "word")?;
        c.same(
            &format!("reading word of {name}"),
            &w,
            &tab.reading_word().to_string(),
        );
        let expected = field(t, "ballot")?
            .as_bool()
            .ok_or("ballot is not a boolean")?;
        c.same(
            &format!("ballot verdict for {name}"),
            &expected.to_string(),
            &tab.is_ballot().to_string(),
        );
    }
    Ok(())
}

/// Each displayed frame follows from the previous one by admissible
/// switches, and the last frame is the end of switching.
fn switch_sequence(v: &Value, c: &mut Checker) -> R<()> {
    let texts = frames(v, "frames")?;
    let parsed: Vec<TwoColorTableau> = texts
        .iter()
        .map(|t| ok(frame_from_text(t)))
        .collect::<R<_>>()?;
    for (t, f) in texts.iter().zip(&parsed) {
        c.same("frame round trip", t, &frame_to_text(f));
    }
    for k in 1..parsed.len() {
        c.check(
            &format!("frame {} reaches frame {} by switches", k, k + 1),
            switch_path(&parsed[k - 1], &parsed[k], None, PATH_LIMIT).is_some(),
        );
    }
    if let (Some(first), Some(last)) = (parsed.first(), texts.last()) {
        let end = switch_all(first, SwitchStrategy::Greedy);
        c.same("end of switching", last, &frame_to_text(end.last()));
    }
    Ok(())
}

fn staged(id: &str, v: &Value, c: &mut Checker) -> R<()> {
    let p = pair(v, "pair")?;
    let texts = frames(v, "frames")?;
    let start = ok(TwoColorTableau::new(&p.yam(), p.skew()))?;
    c.same("initial frame", &texts[0], &frame_to_text(&start));
    let st = ok(staged_decomposition(&p))?;
    let last = p.num_rows();
    let f: Word = p
        .skew()
        .row(last)
        .iter()
        .copied()
        .filter(|&x| (x as usize) < last)
        .collect::<Vec<_>>()
        .into();
    c.same("F", &string(v, "f")?, &f.to_string());
    c.same("d", &number(v, "d")?.to_string(), &st.d.to_string());
    let parsed: Vec<TwoColorTableau> = texts
        .iter()
        .map(|t| ok(frame_from_text(t)))
        .collect::<R<_>>()?;
    for k in 1..parsed.len() {
        c.check(
            &format!(
                "frame {} reaches frame {} by stage-{} switches",
                k,
                k + 1,
                st.d
            ),
            switch_path(&parsed[k - 1], &parsed[k], Some(st.d), PATH_LIMIT).is_some(),
        );
    }
    c.same(
        "stopped frame",
        texts.last().ok_or("no frames")?,
        &frame_to_text(&st.frame),
    );
    if id == "staged-a" {
        c.same("F hat", &string(v, "f_hat")?, &st.f_hat.to_string());
        c.same("D", &string(v, "d_word")?, &st.d_word.to_string());
        c.same(
            "content of the skew factor",
            &partition(v, "nu")?.to_string(),
            &p.nu().map(|n| n.to_string()).unwrap_or_default(),
        );
    } else {
        // The two-row prefix against the staged data of the full example.
        let g_hat = string(v, "g_hat")?;
        let x = string(v, "x")?;
        c.same("G hat", &g_hat, &st.f_hat.to_string());
        let full = ok(pair_from_text(&grid(
            &serde_json::from_str::<Value>(fixture_text("staged-a").unwrap()).unwrap(),
            "pair",
        )?))?;
        let sa = ok(staged_decomposition(&full))?;
        let g_from_s: Word =
            sa.s.row(3)
                .iter()
                .copied()
                .filter(|&y| y < 3)
                .collect::<Vec<_>>()
                .into();
        c.same("G hat in row 3 of S", &g_hat, &g_from_s.to_string());
        c.same("X", &x, &Word::from(sa.q.row(3).to_vec()).to_string());
        c.same(
            "D X",
            &format!("{}{}", sa.d_word, x),
            &st.d_word.to_string(),
        );
    }
    Ok(())
}

fn knuth_order(v: &Value, c: &mut Checker) -> R<()> {
    let t = tableau(v, "t")?;
    let expected = grid(v, "result")?;
    for (tab, key) in [("u", "word_u"), ("u_prime", "word_u_prime")] {
        let u = tableau(v, tab)?;
        let w = word(v, key)?;
        c.same(
            &format!("companion word of {tab}"),
            &w.to_string(),
            &u.companion_word().to_string(),
        );
        let out = ok(apply_order_word(&t, &w))?;
        c.same(&format!("phi_{w} T"), &expected, &tableau_to_text(&out));
    }
    Ok(())
}

fn scratch(v: &Value, c: &mut Checker) -> R<()> {
    let p = pair(v, "pair")?;
    let hat = ok(nu_hat(p.skew()))?;
    c.same(
        "nu hat",
        &partition(v, "nu_hat")?.to_string(),
        &hat.to_string(),
    );
    let gt = ok(gt_order_word(p.skew()))?;
    c.same("R(G_nu)", &string(v, "gt_word")?, &gt.to_string());
    let g = tableau(v, "gt_tableau")?;
    c.same(
        "companion word of G_nu",
        &gt.to_string(),
        &g.companion_word().to_string(),
    );
    let nu = partition(v, "nu")?;
    let empty = ok(apply_order_word(
        &SkewTableau::empty(Partition::empty()),
        &gt,
    ))?;
    c.same(
        "phi_R(G_nu) of the empty tableau",
        &tableau_to_text(&SkewTableau::empty(nu)),
        &tableau_to_text(&empty),
    );
    let (_, got) = ok(rho1_scratch_frames(&p))?;
    let texts = frames(v, "frames")?;
    c.same(
        "frame count",
        &texts.len().to_string(),
        &got.len().to_string(),
    );
    for (k, (e, a)) in texts.iter().zip(&got).enumerate() {
        c.same(&format!("frame {}", k + 1), e, &tableau_to_text(&a.tableau));
    }
    Ok(())
}

fn block_label(b: &Block) -> String {
    let (name, row, times) = match *b {
        Block::Insert { row, times } => ("phi", row, times),
        Block::Append { row, times } => ("chi", row, times),
    };
    if times == 1 {
        format!("{name}{row}")
    } else {
        format!("{name}{row}^{times}")
    }
}

fn internal(v: &Value, c: &mut Checker) -> R<()> {
    let p = pair(v, "pair")?;
    let (_, steps) = ok(rho1_internal_traced(&p))?;
    for level in field(v, "levels")?
        .as_array()
        .ok_or("levels is not a list")?
    {
        let k = number(level, "k")?;
        let switched = ok(rho1_switching(&p.head(k)))?;
        c.same(
            &format!("rho1 of the first {k} rows by switching"),
            &grid(level, "switched")?,
            &pair_to_text(&switched),
        );
        let mine: Vec<_> = steps.iter().filter(|s| s.level == k).collect();
        let want = field(level, "steps")?
            .as_array()
            .ok_or("steps is not a list")?;
        c.same(
            &format!("level {k} step count"),
            &want.len().to_string(),
            &mine.len().to_string(),
        );
        for (j, (w, s)) in want.iter().zip(&mine).enumerate() {
            c.same(
                &format!("level {k} step {} operator", j + 1),
                &string(w, "op")?,
                &block_label(&s.block),
            );
            c.same(
                &format!("level {k} step {} ({})", j + 1, block_label(&s.block)),
                &grid(w, "pair")?,
                &pair_to_text(&s.pair),
            );
        }
        if let Some(s) = mine.last() {
            c.same(
                &format!("level {k} agrees with switching"),
                &pair_to_text(&switched),
                &pair_to_text(&s.pair),
            );
        }
    }
    Ok(())
}

fn apply_rows(p: &GluedPair, rows: &[usize]) -> R<GluedPair> {
    rows.iter()
        .try_fold(p.clone(), |q, &i| ok(extended_insert(&q, i)))
}

fn staged_final(v: &Value, c: &mut Checker) -> R<()> {
    let p = pair(v, "pair")?;
    let st = ok(staged_decomposition(&p))?;
    let head_s = st.head_pair();
    let rho_head_s = ok(rho1_switching(&head_s))?;
    c.same(
        "rho1(Y' ∪ S)",
        &grid(v, "rho_head_s")?,
        &pair_to_text(&rho_head_s),
    );
    c.same(
        "rho1(Y' ∪ S) internally",
        &grid(v, "rho_head_s")?,
        &pair_to_text(&ok(rho1_internal(&head_s))?),
    );

    let rho = grid(v, "rho")?;
    c.same("rho1(Y ∪ T)", &rho, &pair_to_text(&ok(rho1_switching(&p))?));
    c.same(
        "rho1(Y' ∪ S) ∪ Q",
        &rho,
        &pair_to_text(&ok(glue_outer(&rho_head_s, &st.q))?),
    );

    let rho2 = ok(rho1_switching(&head_s.head(2)))?;
    c.same(
        "rho1 of the first two rows of Y' ∪ S",
        &grid(v, "rho_head_s_2")?,
        &pair_to_text(&rho2),
    );

    // G hat 3 * (Y' ∪ S)^(2): the prefix of the stopped state for the first three rows.
    let st3 = ok(staged_decomposition(&p.head(3)))?;
    let rho_g = ok(rho1_switching(&st3.head_pair()))?;
    c.same(
        "rho1(G hat 3 * (Y' ∪ S)^(2))",
        &grid(v, "rho_g_hat")?,
        &pair_to_text(&rho_g),
    );
    c.same(
        "phi_22 phi_3 on rho1 of two rows",
        &grid(v, "rho_g_hat")?,
        &pair_to_text(&apply_rows(&rho2, &[3, 2, 2])?),
    );
    c.same(
        "phi_3333 phi_4 on it",
        &grid(v, "rho_head_s")?,
        &pair_to_text(&apply_rows(&rho_g, &[4, 3, 3, 3, 3])?),
    );

    let rho3 = grid(v, "rho_3")?;
    c.same(
        "rho1((Y ∪ T)^(3))",
        &rho3,
        &pair_to_text(&ok(rho1_switching(&p.head(3)))?),
    );
    c.same(
        "with 2^3 * Q^(2) attached",
        &rho3,
        &pair_to_text(&ok(glue_outer(&rho_g, &st3.q))?),
    );
    let top = ok(rho1_switching(&p.head(3)))?;
    c.same(
        "phi_3333 phi_4 rho1((Y ∪ T)^(3))",
        &rho,
        &pair_to_text(&apply_rows(&top, &[4, 3, 3, 3, 3])?),
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_examples_pass() {
        for o in run(&[]).unwrap() {
            assert!(o.passed(), "{}: {:#?}", o.id, o.failures);
            assert!(o.checks > 0, "{}", o.id);
        }
    }

    #[test]
    fn corrupted_fixture_reports_diff() {
        let text = fixture_text("scratch")
            .unwrap()
            .replace(". 1 2 4\"", ". 1 2 3\"");
        let o = run_fixture("scratch", &text);
        assert!(!o.passed());
        assert!(
            o.failures
                .iter()
                .any(|f| f.contains("  - . 1 2 3") && f.contains("  + . 1 2 4")),
            "{:#?}",
            o.failures
        );
    }

    #[test]
    fn selection_and_unknown_ids() {
        let one = run(&["staged-a".to_string()]).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].id, "staged-a");
        assert!(run(&["nosuch".to_string()]).is_err());
    }
}
