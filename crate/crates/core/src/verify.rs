//! Exhaustive property sweeps over small instances.
//!
//! Every check enumerates its instances up front, runs them on the rayon
//! pool and merges the results in instance order, so reports do not depend
//! on scheduling.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::commutor::{
    glue_outer, rho1_internal, rho1_scratch, rho1_switching, rho1_switching_with,
    staged_decomposition, switching, SwitchStrategy,
};
use crate::format::{pair_to_text, tableau_to_text};
use crate::insertion::{
    inner_corners_of, internal_insert, skew_rsk_forward, skew_rsk_inverse, GluedPair,
    InsertionTrace,
};
use crate::knuth::{knuth_class, rectify_word};
use crate::schur::{schur_polynomial, schur_product, Polynomial};
use crate::tableau::{enumerate_ballot, enumerate_ssyt, Letter, Partition, SkewShape, SkewTableau};
use crate::word::Word;

pub const CHECKS: &[&str] = &[
    "involution",
    "coincidence",
    "confluence",
    "knuth-commutativity",
    "skew-rsk",
    "routes",
    "lr-rule",
    "staged",
];

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Bound on the number of boxes of the largest shape involved.
    pub max_size: usize,
    /// Smallest alphabet for free fillings; raised to the longest column of
    /// a shape when that is larger.
    pub alphabet: Letter,
    /// Longest insertion-order word in the commutativity sweep.
    pub word_len: usize,
    /// Number of seeded random switch orders in the confluence sweep.
    pub random_orders: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_size: 8,
            alphabet: 3,
            word_len: 5,
            random_orders: 20,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub check: String,
    pub instances: usize,
    pub failures: Vec<Failure>,
    #[serde(serialize_with = "as_secs")]
    pub wall: Duration,
}

fn as_secs<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {} instances, {} failures, {:.2}s",
            if self.passed() { "PASS" } else { "FAIL" },
            self.check,
            self.instances,
            self.failures.len(),
            self.wall.as_secs_f64()
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownCheck(pub String);

impl fmt::Display for UnknownCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown check {:?}; valid checks: {}",
            self.0,
            CHECKS.join(", ")
        )
    }
}

impl std::error::Error for UnknownCheck {}

pub fn run_checks(names: &[String], cfg: &VerifyConfig) -> Result<Vec<VerifyReport>, UnknownCheck> {
    if let Some(bad) = names.iter().find(|n| !CHECKS.contains(&n.as_str())) {
        return Err(UnknownCheck(bad.clone()));
    }
    Ok(names
        .iter()
        .map(|n| run_check(n, cfg).expect("name checked"))
        .collect())
}

pub fn run_check(name: &str, cfg: &VerifyConfig) -> Result<VerifyReport, UnknownCheck> {
    let start = Instant::now();
    let (instances, failures) = match name {
        "involution" => involution(cfg),
        "coincidence" => coincidence(cfg),
        "confluence" => confluence(cfg),
        "knuth-commutativity" => knuth_commutativity(cfg),
        "skew-rsk" => skew_rsk(cfg),
        "routes" => routes(cfg),
        "lr-rule" => lr_rule(cfg),
        "staged" => staged(cfg),
        _ => return Err(UnknownCheck(name.to_string())),
    };
    Ok(VerifyReport {
        check: name.to_string(),
        instances,
        failures,
        wall: start.elapsed(),
    })
}

/// Runs `f` on every item in parallel; each call returns its instance count
/// and failures. Results are concatenated in item order.
fn sweep<I: Sync>(
    items: &[I],
    f: impl Fn(&I) -> (usize, Vec<Failure>) + Sync + Send,
) -> (usize, Vec<Failure>) {
    let results: Vec<(usize, Vec<Failure>)> = items.par_iter().map(&f).collect();
    let mut n = 0;
    let mut failures = Vec::new();
    for (k, fs) in results {
        n += k;
        failures.extend(fs);
    }
    (n, failures)
}

fn fail(
    input: impl Into<String>,
    expected: impl Into<String>,
    actual: impl Into<String>,
) -> Failure {
    Failure {
        input: input.into(),
        expected: expected.into(),
        actual: actual.into(),
    }
}

fn shown<T, E: fmt::Display>(r: &Result<T, E>, f: impl Fn(&T) -> String) -> String {
    match r {
        Ok(x) => f(x),
        Err(e) => format!("error: {e}"),
    }
}

/// All pairs `mu ⊆ lambda` with `|lambda| <= n`.
fn skew_shapes(n: usize) -> Vec<SkewShape> {
    SkewShape::all_up_to(n)
}

fn longest_column(shape: &SkewShape) -> Letter {
    (1..=shape.outer.get(0))
        .map(|c| {
            (0..shape.num_rows())
                .filter(|&i| shape.inner.get(i) < c && c <= shape.outer.get(i))
                .count()
        })
        .max()
        .unwrap_or(0) as Letter
}

fn fillings(shape: &SkewShape, cfg: &VerifyConfig) -> Vec<SkewTableau> {
    enumerate_ssyt(shape, cfg.alphabet.max(longest_column(shape)).max(1))
}

/// Every LR pair `Y_mu ∪ T` with `|lambda| <= n`.
pub fn lr_pairs(n: usize) -> Vec<GluedPair> {
    let mut out = Vec::new();
    for shape in skew_shapes(n) {
        for nu in Partition::all_of(shape.size()) {
            out.extend(
                enumerate_ballot(&shape, &nu)
                    .into_iter()
                    .map(GluedPair::new),
            );
        }
    }
    out
}

fn involution(cfg: &VerifyConfig) -> (usize, Vec<Failure>) {
    let pairs = lr_pairs(cfg.max_size);
    type Rho = fn(&GluedPair) -> Result<GluedPair, crate::error::CommutorError>;
    let methods: [(&str, Rho); 2] = [("switching", rho1_switching), ("internal", rho1_internal)];
    sweep(&pairs, |p| {
        let mut fs = Vec::new();
        for (name, rho) in methods {
            let twice = rho(p).and_then(|q| rho(&q));
            if twice.as_ref() != Ok(p) {
                fs.push(fail(
                    format!("{name}\n{}", pair_to_text(p)),
                    pair_to_text(p),
                    shown(&twice, pair_to_text),
                ));
            }
        }
        (1, fs)
    })
}

fn coincidence(cfg: &VerifyConfig) -> (usize, Vec<Failure>) {
    let pairs = lr_pairs(cfg.max_size);
    sweep(&pairs, |p| {
        let a = rho1_switching(p);
        let mut fs = Vec::new();
        for (name, b) in [("internal", rho1_internal(p)), ("scratch", rho1_scratch(p))] {
            if a.is_err() || a != b {
                fs.push(fail(
                    format!("switching vs {name}\n{}", pair_to_text(p)),
                    shown(&a, pair_to_text),
                    shown(&b, pair_to_text),
                ));
            }
        }
        (1, fs)
    })
}

fn confluence(cfg: &VerifyConfig) -> (usize, Vec<Failure>) {
    let mut items = Vec::new();
    for gamma in Partition::all_up_to(cfg.max_size) {
        for lambda in gamma.subpartitions() {
            for mu in lambda.subpartitions() {
                let inner = SkewShape::new(lambda.clone(), mu).expect("contained");
                let outer = SkewShape::new(gamma.clone(), lambda.clone()).expect("contained");
                items.push((inner, outer));
            }
        }
    }
    let mut strategies = vec![SwitchStrategy::Infusion];
    strategies.extend(
        (0..cfg.random_orders as u64)
            .map(|k| SwitchStrategy::SeededRandom(cfg.seed.wrapping_add(k))),
    );
    sweep(&items, |(inner, outer)| {
        let us = fillings(inner, cfg);
        let vs = fillings(outer, cfg);
        let mut n = 0;
        let mut fs = Vec::new();
        for u in &us {
            for v in &vs {
                n += 1;
                let reference = switching(u, v, SwitchStrategy::Greedy);
                let show = |r: &Result<(SkewTableau, SkewTableau), _>| {
                    shown(r, |(s, h)| {
                        format!("{}--\n{}", tableau_to_text(s), tableau_to_text(h))
                    })
                };
                if let Ok((s, h)) = &reference {
                    // Switching keeps each member's Knuth class and the union shape.
                    let same = rectify_word(&s.reading_word()) == rectify_word(&v.reading_word())
                        && rectify_word(&h.reading_word()) == rectify_word(&u.reading_word())
                        && s.inner() == u.inner()
                        && h.outer() == v.outer()
                        && s.outer() == h.inner();
                    if !same {
                        fs.push(fail(
                            format!("{}--\n{}", tableau_to_text(u), tableau_to_text(v)),
                            "S ≡ V, H ≡ U, same union shape",
                            show(&reference),
                        ));
                    }
                }
                for &st in &strategies {
                    let other = switching(u, v, st);
                    if reference.is_err() || other != reference {
                        fs.push(fail(
                            format!("{st:?}\n{}--\n{}", tableau_to_text(u), tableau_to_text(v)),
                            show(&reference),
                            show(&other),
                        ));
                    }
                }
            }
        }
        (n, fs)
    })
}

/// Valid insertion-order words for inner shape `mu`, as a growth tree: node
/// `k` extends node `parent` by one insertion at `row`. The word of a node
/// lists rows from the last insertion to the first.
struct OrderWords {
    parent: Vec<usize>,
    row: Vec<usize>,
    word: Vec<Word>,
}

fn order_words(mu: &Partition, max_len: usize) -> OrderWords {
    let mut t = OrderWords {
        parent: vec![0],
        row: vec![0],
        word: vec![Word::new()],
    };
    let mut shapes = vec![mu.clone()];
    let mut frontier = vec![0];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for &k in &frontier {
            for i in inner_corners_of(&shapes[k]) {
                let mut w = Word::from(vec![i as Letter]);
                w.extend_from(&t.word[k]);
                t.parent.push(k);
                t.row.push(i);
                t.word.push(w);
                shapes.push(shapes[k].with_box(i - 1).expect("inner corner"));
                next.push(t.word.len() - 1);
            }
        }
        frontier = next;
    }
    t
}

fn knuth_commutativity(cfg: &VerifyConfig) -> (usize, Vec<Failure>) {
    let shapes = skew_shapes(cfg.max_size);
    let mut by_mu: HashMap<Partition, Vec<SkewShape>> = HashMap::new();
    for s in shapes {
        by_mu.entry(s.inner.trimmed()).or_default().push(s);
    }
    let mut mus: Vec<_> = by_mu.into_iter().collect();
    mus.sort_by(|a, b| a.0.cmp(&b.0));

    let mut n = 0;
    let mut failures = Vec::new();
    for (mu, shapes) in mus {
        let tree = order_words(&mu, cfg.word_len);
        let valid: HashSet<&Word> = tree.word.iter().collect();
        // Part (a): the Knuth class of a valid word consists of valid words.
        let mut class_of: HashMap<Vec<Vec<Letter>>, usize> = HashMap::new();
        let mut key = Vec::with_capacity(tree.word.len());
        for u in &tree.word {
            let rect = rectify_word(u);
            let next = class_of.len();
            let id = *class_of.entry(rect).or_insert(next);
            key.push(id);
        }
        let mut seen_class = HashSet::new();
        for (k, u) in tree.word.iter().enumerate() {
            if !seen_class.insert(key[k]) {
                continue;
            }
            match knuth_class(u, 100_000) {
                Ok(class) => {
                    for v in class.iter().filter(|v| !valid.contains(v)) {
                        failures.push(fail(
                            format!("inner shape {mu}, word {u}"),
                            "valid order word",
                            format!("{v} is not valid"),
                        ));
                    }
                }
                Err(e) => failures.push(fail(
                    format!("inner shape {mu}, word {u}"),
                    "Knuth class",
                    e.to_string(),
                )),
            }
        }
        // Part (b): phi_u T depends only on the class of u.
        let ts: Vec<SkewTableau> = shapes.iter().flat_map(|s| fillings(s, cfg)).collect();
        let (k, fs) = sweep(&ts, |t| {
            let mut out: Vec<Option<SkewTableau>> = Vec::with_capacity(tree.word.len());
            out.push(Some(t.clone()));
            for k in 1..tree.word.len() {
                let prev = out[tree.parent[k]].as_ref();
                out.push(prev.and_then(|p| internal_insert(p, tree.row[k]).ok().map(|(x, _)| x)));
            }
            let mut rep: HashMap<usize, usize> = HashMap::new();
            let mut fs = Vec::new();
            for k in 0..tree.word.len() {
                let r = *rep.entry(key[k]).or_insert(k);
                if out[k].is_none() || out[k] != out[r] {
                    let show = |x: &Option<SkewTableau>| {
                        x.as_ref().map_or("undefined".into(), tableau_to_text)
                    };
                    fs.push(fail(
                        format!(
                            "words {} and {}\n{}",
                            tree.word[r],
                            tree.word[k],
                            tableau_to_text(t)
                        ),
                        show(&out[r]),
                        show(&out[k]),
                    ));
                }
            }
            (tree.word.len(), fs)
        });
        n += k;
        failures.extend(fs);
    }
    (n, failures)
}

fn skew_rsk(cfg: &VerifyConfig) -> (usize, Vec<Failure>) {
    let mut items = Vec::new();
    for mu in Partition::all_up_to(cfg.max_size) {
        let outers: Vec<Partition> = Partition::all_up_to(cfg.max_size)
            .into_iter()
            .filter(|l| l.contains(&mu))
            .collect();
        for lambda in &outers {
            for beta in &outers {
                items.push((
                    SkewShape::new(lambda.clone(), mu.clone()).expect("contained"),
                    SkewShape::new(beta.clone(), mu.clone()).expect("contained"),
                ));
            }
        }
    }
    sweep(&items, |(ts, us)| {
        let tf = fillings(ts, cfg);
        let uf = fillings(us, cfg);
        let mut fs = Vec::new();
        for t in &tf {
            for u in &uf {
                let input = || format!("{}--\n{}", tableau_to_text(t), tableau_to_text(u));
                let (p, q) = match skew_rsk_forward(t, u) {
                    Ok(pq) => pq,
                    Err(e) => {
                        fs.push(fail(input(), "(P, Q)", format!("error: {e}")));
                        continue;
                    }
                };
                let back = skew_rsk_inverse(&p, &q);
                if back.as_ref() != Ok(&(t.clone(), u.clone())) {
                    fs.push(fail(
                        input(),
                        input(),
                        shown(&back, |(a, b)| {
                            format!("{}--\n{}", tableau_to_text(a), tableau_to_text(b))
                        }),
                    ));
                }
                let knuth_ok = rectify_word(&p.reading_word()) == rectify_word(&t.reading_word())
                    && rectify_word(&q.reading_word()) == rectify_word(&u.reading_word());
                let border_ok =
                    p.inner() == u.outer() && q.inner() == t.outer() && p.outer() == q.outer();
                if !knuth_ok || !border_ok {
                    fs.push(fail(
                        input(),
                        "P ≡ T and Q ≡ U with matching borders",
                        format!("{}--\n{}", tableau_to_text(&p), tableau_to_text(&q)),
                    ));
                }
            }
        }
        (tf.len() * uf.len(), fs)
    })
}

fn route_cols(tr: &InsertionTrace) -> impl Iterator<Item = (usize, usize)> + '_ {
    tr.route.iter().map(|c| (c.row, c.col))
}

/// Whether `a` lies left of `b` in every row both routes visit.
fn left_of(a: &InsertionTrace, b: &InsertionTrace, strict: bool) -> bool {
    route_cols(a).all(|(r, ca)| match b.column_in_row(r) {
        Some(cb) => {
            if strict {
                ca < cb
            } else {
                ca <= cb
            }
        }
        None => true,
    })
}

fn routes(cfg: &VerifyConfig) -> (usize, Vec<Failure>) {
    let ts: Vec<SkewTableau> = skew_shapes(cfg.max_size)
        .iter()
        .flat_map(|s| fillings(s, cfg))
        .collect();
    sweep(&ts, |t| {
        let n = t.num_rows();
        let mut count = 0;
        let mut fs = Vec::new();
        let two = |first: usize, second: usize| -> Option<(InsertionTrace, InsertionTrace)> {
            let (t1, a) = internal_insert(t, first).ok()?;
            let (_, b) = internal_insert(&t1, second).ok()?;
            (!a.is_blank() && !b.is_blank()).then_some((a, b))
        };
        for i in 1..=n {
            for j in i..=n {
                // (a): phi_j then phi_i.
                if let Some((rj, ri2)) = two(j, i) {
                    count += 1;
                    let (b, b2) = (rj.created, ri2.created);
                    if !(left_of(&rj, &ri2, true) && b.col < b2.col && b.row >= b2.row) {
                        fs.push(fail(
                            format!("phi_{i} phi_{j}\n{}", tableau_to_text(t)),
                            "first route strictly left; first box strictly left, weakly below",
                            format!("{:?} / {:?}", rj.route, ri2.route),
                        ));
                    }
                }
                // (b): phi_i then phi_j, for i < j.
                if i < j {
                    if let Some((ri, rj2)) = two(i, j) {
                        count += 1;
                        let (b, b2) = (ri.created, rj2.created);
                        if !(left_of(&rj2, &ri, false) && b2.col <= b.col && b2.row > b.row) {
                            fs.push(fail(
                                format!("phi_{j} phi_{i}\n{}", tableau_to_text(t)),
                                "second route weakly left; second box weakly left, strictly below",
                                format!("{:?} / {:?}", ri.route, rj2.route),
                            ));
                        }
                    }
                }
            }
        }
        (count, fs)
    })
}

fn lr_rule(cfg: &VerifyConfig) -> (usize, Vec<Failure>) {
    let n_max = cfg.max_size;
    let mut keys = Vec::new();
    for n in 1..=n_max {
        for lam in Partition::all_up_to(n) {
            keys.push((lam, n));
        }
    }
    let cache: HashMap<(Partition, usize), Polynomial> = keys
        .par_iter()
        .map(|(lam, n)| ((lam.clone(), *n), schur_polynomial(lam, *n)))
        .collect();
    let mut items = Vec::new();
    for total in 0..=n_max {
        for a in 0..=total {
            for mu in Partition::all_of(a) {
                for nu in Partition::all_of(total - a) {
                    items.push((mu.clone(), nu));
                }
            }
        }
    }
    sweep(&items, |(mu, nu)| {
        let n = (mu.size() + nu.size()).max(1);
        let mut fs = Vec::new();
        let input = format!("mu = {mu}, nu = {nu}");
        let e = schur_product(mu, nu, n);
        let lhs = &cache[&(mu.clone(), n)] * &cache[&(nu.clone(), n)];
        let rhs = e.terms.iter().fold(Polynomial::zero(n), |acc, (lam, &c)| {
            &acc + &cache[&(lam.clone(), n)].scale(&c.into())
        });
        if lhs != rhs {
            fs.push(fail(input.clone(), "s_mu s_nu", format!("expansion {e}")));
        }
        let swapped = schur_product(nu, mu, n);
        if swapped != e {
            fs.push(fail(input.clone(), e.to_string(), swapped.to_string()));
        }
        for (lam, &c) in &e.terms {
            let from = enumerate_ballot(
                &SkewShape::new(lam.clone(), mu.clone()).expect("contained"),
                nu,
            );
            let to: HashSet<SkewTableau> = enumerate_ballot(
                &SkewShape::new(lam.clone(), nu.clone()).expect("contained"),
                mu,
            )
            .into_iter()
            .collect();
            let image: Result<HashSet<SkewTableau>, _> = from
                .iter()
                .map(|t| rho1_switching(&GluedPair::new(t.clone())).map(GluedPair::into_skew))
                .collect();
            let ok = from.len() as u64 == c && to.len() as u64 == c && image.as_ref() == Ok(&to);
            if !ok {
                fs.push(fail(
                    format!("{input}, lambda = {lam}"),
                    format!("{c} witnesses each way"),
                    format!("{} and {}", from.len(), to.len()),
                ));
            }
        }
        (1, fs)
    })
}

fn staged(cfg: &VerifyConfig) -> (usize, Vec<Failure>) {
    let pairs: Vec<GluedPair> = lr_pairs(cfg.max_size)
        .into_iter()
        .filter(|p| {
            let rows = p.num_rows();
            rows >= 2
                && !p.mu().is_empty()
                && p.mu().get(rows - 1) == 0
                && p.skew().row(rows).iter().any(|&x| (x as usize) < rows)
        })
        .collect();
    sweep(&pairs, |p| {
        let input = pair_to_text(p);
        let st = match staged_decomposition(p) {
            Ok(st) => st,
            Err(e) => {
                return (
                    1,
                    vec![fail(input, "staged decomposition", format!("error: {e}"))],
                )
            }
        };
        let rows = p.num_rows();
        let f: Word = p
            .skew()
            .row(rows)
            .iter()
            .copied()
            .filter(|&x| (x as usize) < rows)
            .collect::<Vec<_>>()
            .into();
        let top = p
            .skew()
            .row(rows)
            .iter()
            .filter(|&&x| x as usize == rows)
            .count();
        let nu = p.nu().expect("ballot content").trimmed();
        let mu = p.mu();
        let d = st.d;
        let mut fs = Vec::new();
        let mut check = |what: &str, ok: bool, actual: String| {
            if !ok {
                fs.push(fail(input.clone(), what.to_string(), actual));
            }
        };
        check(
            "1 <= d <= n with mu_d > 0",
            d >= 1 && d < rows && mu.get(d - 1) > 0,
            format!("d = {d}"),
        );
        check(
            "D = d^|D|",
            st.d_word.letters().iter().all(|&x| x as usize == d),
            st.d_word.to_string(),
        );
        check(
            "|D| = |F| - |F hat| > 0",
            !st.d_word.is_empty() && st.d_word.len() + st.f_hat.len() == f.len(),
            format!(
                "|D| = {}, |F| = {}, |F hat| = {}",
                st.d_word.len(),
                f.len(),
                st.f_hat.len()
            ),
        );
        check(
            "F hat a strict subword of F",
            st.f_hat.is_subword_of(&f) && st.f_hat.len() < f.len(),
            format!("F = {f}, F hat = {}", st.f_hat),
        );
        let mut last = st.f_hat.letters().to_vec();
        last.extend(std::iter::repeat_n(rows as Letter, top));
        check(
            "last row of S = F hat (n+1)^nu_{n+1}",
            st.s.row(rows) == last.as_slice(),
            format!("{:?}", st.s.row(rows)),
        );
        check(
            "Q^(d-1) empty",
            (1..d).all(|r| st.q.row(r).is_empty()),
            tableau_to_text(&st.q),
        );
        let yam_nu = SkewTableau::yamanouchi(&nu).rows().to_vec();
        check(
            "S ≡ Y_nu",
            rectify_word(&st.s.reading_word()) == yam_nu,
            tableau_to_text(&st.s),
        );
        let yam_q: Vec<Vec<Letter>> = (d..=mu.length())
            .filter(|&r| mu.get(r - 1) > 0)
            .map(|r| vec![r as Letter; mu.get(r - 1)])
            .collect();
        check(
            "Q ≡ Y_(mu_d, ..., mu_n)",
            rectify_word(&st.q.reading_word()) == yam_q,
            tableau_to_text(&st.q),
        );
        let whole = rho1_switching(p);
        let parts = rho1_switching(&st.head_pair()).and_then(|h| glue_outer(&h, &st.q));
        check(
            "rho1(Y ∪ T) = rho1(Y' ∪ S) ∪ Q",
            whole.is_ok() && whole == parts,
            format!(
                "{} vs {}",
                shown(&whole, pair_to_text),
                shown(&parts, pair_to_text)
            ),
        );
        let infused = rho1_switching_with(p, SwitchStrategy::Infusion);
        check(
            "infusion agrees",
            infused == whole,
            shown(&infused, pair_to_text),
        );
        (1, fs)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig {
            max_size: 4,
            random_orders: 3,
            word_len: 3,
            ..VerifyConfig::default()
        }
    }

    #[test]
    fn every_check_passes_small() {
        let names: Vec<String> = CHECKS.iter().map(|s| s.to_string()).collect();
        for r in run_checks(&names, &small()).unwrap() {
            assert!(
                r.passed(),
                "{r}: {:#?}",
                &r.failures[..r.failures.len().min(3)]
            );
            assert!(r.instances > 0, "{r}");
        }
    }

    #[test]
    fn size_one_is_tiny() {
        let cfg = VerifyConfig {
            max_size: 1,
            ..small()
        };
        let r = run_check("involution", &cfg).unwrap();
        assert!(r.passed());
        assert_eq!(r.instances, 3);
    }

    #[test]
    fn unknown_check_named() {
        let e = run_checks(&["nosuch".to_string()], &small()).unwrap_err();
        assert!(e.to_string().contains("involution"));
    }

    #[test]
    fn order_words_are_companion_words() {
        let t = order_words(&Partition::empty(), 3);
        let words: Vec<String> = t.word.iter().map(Word::to_string).collect();
        assert_eq!(words, vec!["", "1", "11", "21", "111", "211", "121", "321"]);
    }
}
