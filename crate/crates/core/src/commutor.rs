//! The switching involution on tableau pairs and its realisation through
//! internal row insertion.
//!
//! A [`TwoColorTableau`] holds two tableaux glued along a border: the `U`
//! member starts inside and the `V` member outside. A switch interchanges a
//! `U` letter with a `V` letter immediately to its right or below, provided
//! both members still satisfy the filling conditions afterwards. Switching
//! until no switch is possible yields `S ∪ H`, with `S ≡ V` inside and
//! `H ≡ U` outside.

use std::collections::{BTreeMap, HashMap, VecDeque};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::CommutorError;
use crate::insertion::{
    apply_order_word_traced, extended_insert_traced, GluedPair, InsertionTrace,
};
use crate::tableau::{Cell, Letter, Partition, SkewShape, SkewTableau};
use crate::word::Word;

/// Which member of a glued pair a letter belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Color {
    /// The inner member.
    U,
    /// The outer member.
    V,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Entry {
    pub value: Letter,
    pub color: Color,
    /// Row of the `U` member the letter started in; `0` for `V` letters.
    pub origin: usize,
}

/// Two tableaux sharing a border, possibly mid-switch (each member may then
/// occupy a perforated region).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoColorTableau {
    shape: SkewShape,
    rows: Vec<Vec<Entry>>,
}

/// Adjacent cells holding a `U` letter and a `V` letter (right of or below it).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SwitchSite {
    pub cell_u: Cell,
    pub cell_v: Cell,
}

impl SwitchSite {
    pub fn is_horizontal(&self) -> bool {
        self.cell_u.row == self.cell_v.row
    }
}

/// Order in which admissible switches are taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SwitchStrategy {
    /// Jeu de taquin order: `U` letters leave in decreasing standard order,
    /// each sliding out through `V`.
    Infusion,
    /// First admissible site scanning `U` cells row by row, horizontal first.
    Greedy,
    /// Uniformly random admissible site at each step.
    SeededRandom(u64),
}

impl TwoColorTableau {
    /// Glues `u` (inside) and `v` (outside); `v` must extend `u`.
    pub fn new(u: &SkewTableau, v: &SkewTableau) -> Result<Self, CommutorError> {
        if u.outer() != v.inner() {
            return Err(CommutorError::NotExtending(format!(
                "outer border {} of the inner member differs from inner border {} of the outer member",
                u.outer(),
                v.inner()
            )));
        }
        let shape = SkewShape::new(v.outer().trimmed(), u.inner().trimmed())?;
        let mut rows = vec![Vec::new(); shape.num_rows()];
        for (c, x) in u.cells() {
            rows[c.row - 1].push(Entry {
                value: x,
                color: Color::U,
                origin: c.row,
            });
        }
        for (c, x) in v.cells() {
            rows[c.row - 1].push(Entry {
                value: x,
                color: Color::V,
                origin: 0,
            });
        }
        Ok(TwoColorTableau { shape, rows })
    }

    /// Builds from explicit entries, row by row (columns after the inner
    /// border). Checks each colour class against the filling conditions.
    pub fn from_entries(inner: Partition, rows: Vec<Vec<Entry>>) -> Result<Self, CommutorError> {
        let outer: Vec<usize> = (0..rows.len())
            .map(|i| inner.get(i) + rows[i].len())
            .collect();
        let shape = SkewShape::new(Partition::new(outer)?.trimmed(), inner.trimmed())?;
        let t = TwoColorTableau { shape, rows };
        for (c, _) in t.cells() {
            if !t.consistent_at(c, None) {
                return Err(CommutorError::Invariant(format!(
                    "filling conditions fail at {c}"
                )));
            }
        }
        Ok(t)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Entry>] {
        &self.rows
    }

    pub fn get(&self, c: Cell) -> Option<Entry> {
        if c.row == 0 {
            return None;
        }
        let start = self.shape.inner.get(c.row - 1);
        if c.col <= start {
            return None;
        }
        self.rows.get(c.row - 1)?.get(c.col - start - 1).copied()
    }

    fn get_mut(&mut self, c: Cell) -> &mut Entry {
        let start = self.shape.inner.get(c.row - 1);
        &mut self.rows[c.row - 1][c.col - start - 1]
    }

    pub fn cells(&self) -> impl Iterator<Item = (Cell, Entry)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(i, row)| {
            let start = self.shape.inner.get(i);
            row.iter()
                .enumerate()
                .map(move |(k, &e)| (Cell::new(i + 1, start + k + 1), e))
        })
    }

    /// Whether the letter at `c` satisfies the filling conditions against
    /// every other letter of its class. With `stage = Some(k)`, `U` letters
    /// of origin `k` form their own class, apart from other `U` letters.
    fn consistent_at(&self, c: Cell, stage: Option<usize>) -> bool {
        let Some(e) = self.get(c) else { return true };
        let same_class = |f: &Entry| {
            f.color == e.color
                && match (stage, e.color) {
                    (Some(k), Color::U) => (e.origin == k) == (f.origin == k),
                    _ => true,
                }
        };
        self.cells().all(|(d, f)| {
            if d == c || !same_class(&f) {
                return true;
            }
            if d.row <= c.row && d.col <= c.col {
                e.value > f.value || (e.value == f.value && d.col != c.col)
            } else if c.row <= d.row && c.col <= d.col {
                f.value > e.value || (f.value == e.value && d.col != c.col)
            } else {
                true
            }
        })
    }

    fn swap(&mut self, a: Cell, b: Cell) {
        let ea = self.get(a).expect("cell in shape");
        let eb = self.get(b).expect("cell in shape");
        *self.get_mut(a) = eb;
        *self.get_mut(b) = ea;
    }

    fn admissible(&mut self, s: SwitchSite, stage: Option<usize>) -> bool {
        let (Some(eu), Some(ev)) = (self.get(s.cell_u), self.get(s.cell_v)) else {
            return false;
        };
        let adjacent = (s.cell_u.row == s.cell_v.row && s.cell_u.col + 1 == s.cell_v.col)
            || (s.cell_u.col == s.cell_v.col && s.cell_u.row + 1 == s.cell_v.row);
        if !adjacent || eu.color != Color::U || ev.color != Color::V {
            return false;
        }
        if let Some(k) = stage {
            if eu.origin != k {
                return false;
            }
        }
        self.swap(s.cell_u, s.cell_v);
        let ok = self.consistent_at(s.cell_u, stage) && self.consistent_at(s.cell_v, stage);
        self.swap(s.cell_u, s.cell_v);
        ok
    }

    fn sites(&self, stage: Option<usize>) -> Vec<SwitchSite> {
        let mut scratch = self.clone();
        let mut out = Vec::new();
        for (c, e) in self.cells() {
            if e.color != Color::U {
                continue;
            }
            for next in [Cell::new(c.row, c.col + 1), Cell::new(c.row + 1, c.col)] {
                let site = SwitchSite {
                    cell_u: c,
                    cell_v: next,
                };
                if scratch.admissible(site, stage) {
                    out.push(site);
                }
            }
        }
        out
    }

    /// Splits a fully switched tableau into its inner (`V` letters) and outer
    /// (`U` letters) members.
    pub fn split(&self) -> Result<(SkewTableau, SkewTableau), CommutorError> {
        let n = self.shape.num_rows();
        let mut mid = Vec::with_capacity(n);
        let mut inner_rows = Vec::with_capacity(n);
        let mut outer_rows = Vec::with_capacity(n);
        for (i, row) in self.rows.iter().enumerate() {
            let k = row.iter().take_while(|e| e.color == Color::V).count();
            if row[k..].iter().any(|e| e.color == Color::V) {
                return Err(CommutorError::Invariant(format!(
                    "row {} is not split into an inner and an outer member",
                    i + 1
                )));
            }
            mid.push(self.shape.inner.get(i) + k);
            inner_rows.push(row[..k].iter().map(|e| e.value).collect());
            outer_rows.push(row[k..].iter().map(|e| e.value).collect());
        }
        let mid = Partition::new(mid).map_err(|e| CommutorError::Invariant(e.to_string()))?;
        let s = SkewTableau::new(
            SkewShape::new(mid.clone(), self.shape.inner.clone())?,
            inner_rows,
        )?;
        let h = SkewTableau::new(SkewShape::new(self.shape.outer.clone(), mid)?, outer_rows)?;
        Ok((s, h))
    }
}

/// All admissible switches of `t`, ordered by `U` cell (row-major), the
/// horizontal switch before the vertical one.
pub fn switch_sites(t: &TwoColorTableau) -> Vec<SwitchSite> {
    t.sites(None)
}

pub fn apply_switch(t: &TwoColorTableau, s: SwitchSite) -> Result<TwoColorTableau, CommutorError> {
    let mut out = t.clone();
    if !out.admissible(s, None) {
        return Err(CommutorError::InadmissibleSwitch(s.cell_u, s.cell_v));
    }
    out.swap(s.cell_u, s.cell_v);
    Ok(out)
}

/// Admissible switches moving only `U` letters that started in row `k`,
/// with those letters checked as a class of their own.
pub fn stage_switch_sites(t: &TwoColorTableau, k: usize) -> Vec<SwitchSite> {
    t.sites(Some(k))
}

/// Shortest sequence of admissible switches turning `from` into `to`, if one
/// exists within `limit` visited states.
pub fn switch_path(
    from: &TwoColorTableau,
    to: &TwoColorTableau,
    stage: Option<usize>,
    limit: usize,
) -> Option<Vec<SwitchSite>> {
    let mut parent: HashMap<TwoColorTableau, Option<(TwoColorTableau, SwitchSite)>> =
        HashMap::new();
    let mut queue = VecDeque::new();
    parent.insert(from.clone(), None);
    queue.push_back(from.clone());
    while let Some(cur) = queue.pop_front() {
        if &cur == to {
            let mut path = Vec::new();
            let mut at = cur;
            while let Some(Some((prev, s))) = parent.get(&at) {
                path.push(*s);
                at = prev.clone();
            }
            path.reverse();
            return Some(path);
        }
        for s in cur.sites(stage) {
            let mut next = cur.clone();
            next.swap(s.cell_u, s.cell_v);
            if !parent.contains_key(&next) {
                if parent.len() >= limit {
                    return None;
                }
                parent.insert(next.clone(), Some((cur.clone(), s)));
                queue.push_back(next);
            }
        }
    }
    None
}

/// Result of a switching run, with every intermediate frame.
#[derive(Clone, Debug)]
pub struct SwitchRun {
    pub frames: Vec<TwoColorTableau>,
    pub sites: Vec<SwitchSite>,
}

impl SwitchRun {
    pub fn last(&self) -> &TwoColorTableau {
        self.frames
            .last()
            .expect("a run has at least the initial frame")
    }
}

/// Switches until no switch is possible, recording each frame.
pub fn switch_all(start: &TwoColorTableau, strategy: SwitchStrategy) -> SwitchRun {
    let mut cur = start.clone();
    let mut run = SwitchRun {
        frames: vec![cur.clone()],
        sites: Vec::new(),
    };
    match strategy {
        SwitchStrategy::Greedy => {
            while let Some(&s) = cur.sites(None).first() {
                cur.swap(s.cell_u, s.cell_v);
                run.frames.push(cur.clone());
                run.sites.push(s);
            }
        }
        SwitchStrategy::SeededRandom(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            loop {
                let sites = cur.sites(None);
                let Some(&s) = sites.choose(&mut rng) else {
                    break;
                };
                cur.swap(s.cell_u, s.cell_v);
                run.frames.push(cur.clone());
                run.sites.push(s);
            }
        }
        SwitchStrategy::Infusion => infuse(&mut cur, &mut run),
    }
    run
}

/// Jeu de taquin: each `U` letter, largest standard label first, slides out
/// through the `V` letters. The slide picks the smaller of the right and lower
/// `V` neighbours, the lower one on ties.
fn infuse(cur: &mut TwoColorTableau, run: &mut SwitchRun) {
    let mut order: Vec<(Letter, usize, usize)> = cur
        .cells()
        .filter(|(_, e)| e.color == Color::U)
        .map(|(c, e)| (e.value, c.col, c.row))
        .collect();
    order.sort_unstable();
    for &(_, col, row) in order.iter().rev() {
        let mut hole = Cell::new(row, col);
        loop {
            let v_at = |c: Cell| cur.get(c).filter(|e| e.color == Color::V).map(|e| e.value);
            let right = Cell::new(hole.row, hole.col + 1);
            let below = Cell::new(hole.row + 1, hole.col);
            let next = match (v_at(right), v_at(below)) {
                (None, None) => break,
                (Some(_), None) => right,
                (None, Some(_)) => below,
                (Some(a), Some(b)) => {
                    if b <= a {
                        below
                    } else {
                        right
                    }
                }
            };
            cur.swap(hole, next);
            run.sites.push(SwitchSite {
                cell_u: hole,
                cell_v: next,
            });
            run.frames.push(cur.clone());
            hole = next;
        }
    }
}

/// Switches `v` through `u`; returns `(S, H)` with `S ≡ v` inside and `H ≡ u`
/// outside.
pub fn switching(
    u: &SkewTableau,
    v: &SkewTableau,
    strategy: SwitchStrategy,
) -> Result<(SkewTableau, SkewTableau), CommutorError> {
    let start = TwoColorTableau::new(u, v)?;
    switch_all(&start, strategy).last().split()
}

fn require_lr(p: &GluedPair) -> Result<Partition, CommutorError> {
    if !p.is_lr() {
        return Err(CommutorError::NotLrPair(format!(
            "reading word {} of the skew factor is not ballot",
            p.skew().reading_word()
        )));
    }
    p.nu()
        .ok_or_else(|| CommutorError::NotLrPair("content is not a partition".into()))
}

/// The switching map on an LR pair `Y_mu ∪ T`, giving `Y_nu ∪ H`.
pub fn rho1_switching(p: &GluedPair) -> Result<GluedPair, CommutorError> {
    rho1_switching_with(p, SwitchStrategy::Greedy)
}

pub fn rho1_switching_with(
    p: &GluedPair,
    strategy: SwitchStrategy,
) -> Result<GluedPair, CommutorError> {
    let nu = require_lr(p)?;
    let (s, h) = switching(&p.yam(), p.skew(), strategy)?;
    if s != SkewTableau::yamanouchi(&nu) {
        return Err(CommutorError::Invariant(format!(
            "switched inner member is not the Yamanouchi tableau of {nu}"
        )));
    }
    Ok(GluedPair::new(h))
}

/// Intermediate state of staged switching, stopped after the first stage
/// whose Yamanouchi row reaches the last row.
#[derive(Clone, Debug)]
pub struct StagedDecomposition {
    /// Row of the Yamanouchi factor whose stage reached the last row.
    pub d: usize,
    /// The switched skew factor, glued to `Y_(mu_1..mu_{d-1})`.
    pub s: SkewTableau,
    /// Letters below the last row index in the last row of `S`.
    pub f_hat: Word,
    /// The last row of `Q`.
    pub d_word: Word,
    /// Letters of `Y_(mu_d..mu_n)` after switching.
    pub q: SkewTableau,
    /// The whole two-colour state at the stop.
    pub frame: TwoColorTableau,
}

impl StagedDecomposition {
    /// `Y_(mu_1..mu_{d-1}) ∪ S`.
    pub fn head_pair(&self) -> GluedPair {
        GluedPair::new(self.s.clone())
    }
}

/// Switches the skew factor of `p` with the rows of its Yamanouchi factor one
/// at a time, bottom row first, and stops once a stage has moved a letter
/// into the last row.
pub fn staged_decomposition(p: &GluedPair) -> Result<StagedDecomposition, CommutorError> {
    require_lr(p)?;
    let rows = p.num_rows();
    let mu = p.mu();
    if rows < 2 || mu.is_empty() || mu.get(rows - 1) != 0 {
        return Err(CommutorError::Staged(format!(
            "need a nonzero Yamanouchi factor {mu} with an empty last row among {rows} rows"
        )));
    }
    let last = p.skew().row(rows);
    if !last.iter().any(|&x| (x as usize) < rows) {
        return Err(CommutorError::Staged(format!(
            "last row {:?} has no letter below {rows}",
            last
        )));
    }

    let mut cur = TwoColorTableau::new(&p.yam(), p.skew())?;
    let mut d = None;
    for k in (1..=mu.length()).rev() {
        while let Some(&s) = cur.sites(Some(k)).first() {
            cur.swap(s.cell_u, s.cell_v);
        }
        let reached = cur.rows[rows - 1]
            .iter()
            .any(|e| e.color == Color::U && e.origin == k);
        if reached {
            d = Some(k);
            break;
        }
    }
    let d = d.ok_or_else(|| CommutorError::Invariant("no stage reached the last row".into()))?;

    // Per row: untouched Yamanouchi rows above d, then S, then Q.
    let n = cur.shape.num_rows();
    let mut y_rows = Vec::with_capacity(n);
    let mut s_rows = Vec::with_capacity(n);
    let mut q_rows = Vec::with_capacity(n);
    for (i, row) in cur.rows.iter().enumerate() {
        let lead = cur.shape.inner.get(i);
        let y = row
            .iter()
            .take_while(|e| e.color == Color::U && e.origin < d)
            .count();
        let s = row[y..].iter().take_while(|e| e.color == Color::V).count();
        if row[y + s..]
            .iter()
            .any(|e| e.color == Color::V || e.origin < d)
        {
            return Err(CommutorError::Invariant(format!(
                "row {} is not split as Y ∪ S ∪ Q",
                i + 1
            )));
        }
        y_rows.push(lead + y);
        s_rows.push(row[y..y + s].iter().map(|e| e.value).collect::<Vec<_>>());
        q_rows.push(row[y + s..].iter().map(|e| e.value).collect::<Vec<_>>());
    }
    let y_shape = Partition::new(y_rows.clone())?;
    let s_outer = Partition::new(
        y_rows
            .iter()
            .zip(&s_rows)
            .map(|(y, s)| y + s.len())
            .collect(),
    )?;
    let s = SkewTableau::new(SkewShape::new(s_outer.clone(), y_shape)?, s_rows)?;
    let q = SkewTableau::new(SkewShape::new(cur.shape.outer.clone(), s_outer)?, q_rows)?;
    let f_hat = Word::from(
        s.row(rows)
            .iter()
            .copied()
            .filter(|&x| (x as usize) < rows)
            .collect::<Vec<_>>(),
    );
    let d_word = Word::from(q.row(rows).to_vec());
    Ok(StagedDecomposition {
        d,
        s,
        f_hat,
        d_word,
        q,
        frame: cur,
    })
}

/// `p ∪ q` for a tableau `q` whose inner border is the outer border of `p`.
pub fn glue_outer(p: &GluedPair, q: &SkewTableau) -> Result<GluedPair, CommutorError> {
    if q.inner() != p.lambda() {
        return Err(CommutorError::NotExtending(format!(
            "inner border {} differs from {}",
            q.inner(),
            p.lambda()
        )));
    }
    let n = p.num_rows().max(q.num_rows());
    let rows = (1..=n)
        .map(|i| {
            let mut r = p.skew().row(i).to_vec();
            r.extend_from_slice(q.row(i));
            r
        })
        .collect();
    Ok(GluedPair::new(SkewTableau::from_rows(
        p.mu().parts(),
        rows,
    )?))
}

/// Appends one `i` at the end of row `i` of the skew factor.
pub fn chi_append(p: &GluedPair, i: usize) -> Result<GluedPair, CommutorError> {
    append_letter(p.skew(), i).map(GluedPair::new)
}

/// Appends one `i` at the end of row `i` of a tableau.
pub fn append_letter(t: &SkewTableau, i: usize) -> Result<SkewTableau, CommutorError> {
    let err = || CommutorError::AppendInvalid {
        row: i,
        letter: i as Letter,
    };
    if i == 0 {
        return Err(err());
    }
    let outer = t.outer().with_box(i - 1).map_err(|_| err())?;
    let inner = t.inner().clone();
    let mut out = t.clone();
    out.set_shape(SkewShape { outer, inner });
    out.rows_mut()[i - 1].push(i as Letter);
    out.checked().map_err(|_| err())
}

/// `nu_hat_i`: the number of `i`s in row `i`.
pub fn nu_hat(t: &SkewTableau) -> Result<Partition, CommutorError> {
    Partition::new(t.diagonal_counts())
        .map_err(|e| CommutorError::NotLrPair(format!("diagonal counts: {e}")))
}

/// Row `i` restricted to letters below `i`.
fn below_diagonal(t: &SkewTableau, i: usize) -> Vec<Letter> {
    t.row(i)
        .iter()
        .copied()
        .filter(|&x| (x as usize) < i)
        .collect()
}

/// The insertion-order word `V_n n^{nu_hat_n} ... V_2 2^{nu_hat_2} 1^{nu_hat_1}`
/// read from a ballot tableau.
pub fn gt_order_word(t: &SkewTableau) -> Result<Word, CommutorError> {
    Ok(gt_segments(t)?
        .into_iter()
        .rev()
        .fold(Word::new(), |mut acc, s| {
            acc.extend_from(&s);
            acc
        }))
}

/// The segments `V_i i^{nu_hat_i}` for `i = 1..=n`.
fn gt_segments(t: &SkewTableau) -> Result<Vec<Word>, CommutorError> {
    if !t.is_ballot() {
        return Err(CommutorError::NotLrPair(format!(
            "reading word {} is not ballot",
            t.reading_word()
        )));
    }
    let hat = t.diagonal_counts();
    let mut out = Vec::with_capacity(t.num_rows());
    for i in 1..=t.num_rows() {
        let mut seg = Word::from(below_diagonal(t, i));
        if seg.len() + hat[i - 1] != t.row(i).len() {
            return Err(CommutorError::Invariant(format!(
                "row {i} has letters above {i}"
            )));
        }
        for _ in 0..hat[i - 1] {
            seg.push(i as Letter);
        }
        out.push(seg);
    }
    Ok(out)
}

/// One block of the internal-insertion construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Block {
    /// `phi_row` applied `times` times.
    Insert { row: usize, times: usize },
    /// `chi_row` applied `times` times.
    Append { row: usize, times: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct InternalStep {
    /// Recursion level (the row being attached).
    pub level: usize,
    pub block: Block,
    #[serde(skip)]
    pub pair: GluedPair,
    pub traces: Vec<InsertionTrace>,
}

/// The commutor by recursive internal insertion: strip the last row of `T`
/// into `V_n` and `nu_n` copies of `n`, compute the commutor of the first
/// `n - 1` rows, then apply the extended insertions `n^{nu_n}`, then `V_n`
/// (right to left), then append `mu_n` copies of `n`.
pub fn rho1_internal(p: &GluedPair) -> Result<GluedPair, CommutorError> {
    rho1_internal_traced(p).map(|(q, _)| q)
}

pub fn rho1_internal_traced(
    p: &GluedPair,
) -> Result<(GluedPair, Vec<InternalStep>), CommutorError> {
    require_lr(p)?;
    let mut steps = Vec::new();
    let out = rho1_level(p, p.num_rows(), &mut steps)?;
    Ok((out, steps))
}

fn rho1_level(
    p: &GluedPair,
    n: usize,
    steps: &mut Vec<InternalStep>,
) -> Result<GluedPair, CommutorError> {
    if n == 0 {
        return Ok(GluedPair::empty());
    }
    let mut cur = rho1_level(&p.head(n - 1), n - 1, steps)?;
    let t = p.skew();
    let row = t.row(n);
    let v_n = below_diagonal(t, n);
    let count_n = row.iter().filter(|&&x| x as usize == n).count();
    if v_n.len() + count_n != row.len() {
        return Err(CommutorError::NotLrPair(format!(
            "row {n} has letters above {n}"
        )));
    }
    let total_n = t.head(n).content().count(n as Letter);
    if total_n != count_n {
        return Err(CommutorError::Invariant(format!(
            "{total_n} letters {n} in the first {n} rows but {count_n} in row {n}"
        )));
    }

    if count_n > 0 {
        let mut traces = Vec::with_capacity(count_n);
        for _ in 0..count_n {
            let (next, tr) = extended_insert_traced(&cur, n)?;
            cur = next;
            traces.push(tr);
        }
        steps.push(InternalStep {
            level: n,
            block: Block::Insert {
                row: n,
                times: count_n,
            },
            pair: cur.clone(),
            traces,
        });
    }

    let mut v_traces = Vec::with_capacity(v_n.len());
    for &v in v_n.iter().rev() {
        let (next, tr) = extended_insert_traced(&cur, v as usize)?;
        cur = next;
        v_traces.push(tr.clone());
        steps.push(InternalStep {
            level: n,
            block: Block::Insert {
                row: v as usize,
                times: 1,
            },
            pair: cur.clone(),
            traces: vec![tr],
        });
    }
    check_routes_end_in_row(&v_traces, n)?;

    let mu_n = p.mu().get(n - 1);
    if mu_n > 0 {
        for _ in 0..mu_n {
            cur = chi_append(&cur, n)?;
        }
        steps.push(InternalStep {
            level: n,
            block: Block::Append {
                row: n,
                times: mu_n,
            },
            pair: cur.clone(),
            traces: Vec::new(),
        });
    }
    Ok(cur)
}

/// The bumping routes of one row's insertions are pairwise disjoint and all
/// settle in row `n`.
fn check_routes_end_in_row(traces: &[InsertionTrace], n: usize) -> Result<(), CommutorError> {
    let mut seen: BTreeMap<Cell, usize> = BTreeMap::new();
    for (k, tr) in traces.iter().enumerate() {
        if tr.is_blank() || tr.created.row != n {
            return Err(CommutorError::Invariant(format!(
                "insertion route {} from {} settles at {} instead of row {n}",
                k + 1,
                tr.vacated,
                tr.created
            )));
        }
        for &c in &tr.route {
            if let Some(j) = seen.insert(c, k) {
                return Err(CommutorError::Invariant(format!(
                    "insertion routes {} and {} share {c}",
                    j + 1,
                    k + 1
                )));
            }
        }
    }
    Ok(())
}

/// One block of the construction from the empty tableau.
#[derive(Clone, Debug)]
pub struct ScratchFrame {
    pub row: usize,
    pub order: Word,
    pub appended: usize,
    pub tableau: SkewTableau,
}

/// Builds `∅_nu ∪ H` from the empty tableau: for each row `i`, the order word
/// `V_i i^{nu_hat_i}` is applied by plain internal insertion and then `mu_i`
/// letters `i` are appended.
pub fn rho1_scratch(p: &GluedPair) -> Result<GluedPair, CommutorError> {
    rho1_scratch_frames(p).map(|(q, _)| q)
}

pub fn rho1_scratch_frames(p: &GluedPair) -> Result<(GluedPair, Vec<ScratchFrame>), CommutorError> {
    let nu = require_lr(p)?;
    let segments = gt_segments(p.skew())?;
    let mut cur = SkewTableau::empty(Partition::empty());
    let mut frames = Vec::with_capacity(segments.len());
    for (k, seg) in segments.into_iter().enumerate() {
        let i = k + 1;
        cur = apply_order_word_traced(&cur, &seg)?.0;
        let mu_i = p.mu().get(k);
        for _ in 0..mu_i {
            cur = append_letter(&cur, i)?;
        }
        frames.push(ScratchFrame {
            row: i,
            order: seg,
            appended: mu_i,
            tableau: cur.clone(),
        });
    }
    if cur.inner() != &nu {
        return Err(CommutorError::Invariant(format!(
            "inner border {} differs from the content {nu}",
            cur.inner()
        )));
    }
    Ok((GluedPair::new(cur), frames))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::insertion::apply_order_word;
    use crate::knuth::knuth_equivalent;

    fn t(inner: &[usize], rows: Vec<Vec<Letter>>) -> SkewTableau {
        SkewTableau::from_rows(inner, rows).unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn five_row_pair() -> GluedPair {
        GluedPair::new(t(
            &[4, 3, 2, 1, 0],
            vec![
                vec![1, 1],
                vec![1, 2],
                vec![1, 2, 3],
                vec![2, 3, 4],
                vec![2, 3, 4],
            ],
        ))
    }

    fn five_row_image() -> GluedPair {
        GluedPair::new(t(
            &[4, 4, 3, 2],
            vec![vec![1, 1], vec![2], vec![2, 3], vec![1, 3], vec![1, 2, 4]],
        ))
    }

    #[test]
    fn switch_sequence_example() {
        let u = SkewTableau::yamanouchi(&p(&[3, 3]));
        let v = t(&[3, 3, 0], vec![vec![1], vec![], vec![1, 2, 2]]);
        let (s, h) = switching(&u, &v, SwitchStrategy::Greedy).unwrap();
        assert_eq!(s, t(&[], vec![vec![1, 1, 2], vec![2]]));
        assert_eq!(h, t(&[3, 1, 0], vec![vec![1], vec![1, 1], vec![2, 2, 2]]));
        assert!(knuth_equivalent(&s.reading_word(), &v.reading_word()));
        assert!(knuth_equivalent(&h.reading_word(), &u.reading_word()));
    }

    #[test]
    fn sites_and_switch_errors() {
        let u = SkewTableau::yamanouchi(&p(&[2]));
        let alone = TwoColorTableau::new(&u, &SkewTableau::empty(p(&[2]))).unwrap();
        assert!(switch_sites(&alone).is_empty());
        let pair = TwoColorTableau::new(&u, &t(&[2], vec![vec![1]])).unwrap();
        let sites = switch_sites(&pair);
        assert_eq!(
            sites,
            vec![SwitchSite {
                cell_u: Cell::new(1, 2),
                cell_v: Cell::new(1, 3)
            }]
        );
        let once = apply_switch(&pair, sites[0]).unwrap();
        let back = SwitchSite {
            cell_u: Cell::new(1, 3),
            cell_v: Cell::new(1, 2),
        };
        assert!(apply_switch(&once, back).is_err());
        let mut undone = once.clone();
        undone.swap(back.cell_u, back.cell_v);
        assert_eq!(undone, pair);
    }

    #[test]
    fn rho1_base_case() {
        let pair = GluedPair::new(t(&[4], vec![vec![1, 1]]));
        let image = GluedPair::new(t(&[2], vec![vec![1, 1, 1, 1]]));
        assert_eq!(rho1_switching(&pair).unwrap(), image);
        assert_eq!(rho1_internal(&pair).unwrap(), image);
        assert_eq!(rho1_scratch(&pair).unwrap(), image);
    }

    #[test]
    fn rho1_empty_factors() {
        let y = GluedPair::new(SkewTableau::empty(p(&[3, 1])));
        let image = GluedPair::new(t(&[], vec![vec![1, 1, 1], vec![2]]));
        assert_eq!(rho1_switching(&y).unwrap(), image);
        assert_eq!(rho1_internal(&y).unwrap(), image);
        assert_eq!(rho1_scratch(&y).unwrap(), image);
        assert_eq!(rho1_switching(&image).unwrap(), y);
        let e = GluedPair::empty();
        assert_eq!(rho1_internal(&e).unwrap(), e);
    }

    #[test]
    fn five_row_pair_all_methods() {
        let pair = five_row_pair();
        assert_eq!(nu_hat(pair.skew()).unwrap(), p(&[2, 1, 1, 1, 0]));
        assert_eq!(gt_order_word(pair.skew()).unwrap(), w("2342341231211"));
        assert_eq!(
            apply_order_word(&SkewTableau::empty(Partition::empty()), &w("2342341231211")).unwrap(),
            SkewTableau::empty(p(&[4, 4, 3, 2]))
        );
        assert_eq!(rho1_switching(&pair).unwrap(), five_row_image());
        assert_eq!(rho1_internal(&pair).unwrap(), five_row_image());
        assert_eq!(rho1_scratch(&pair).unwrap(), five_row_image());
        for s in [SwitchStrategy::Infusion, SwitchStrategy::SeededRandom(7)] {
            assert_eq!(rho1_switching_with(&pair, s).unwrap(), five_row_image());
        }
    }

    #[test]
    fn not_lr_rejected() {
        let h = GluedPair::new(t(&[2, 1, 0], vec![vec![1, 2], vec![1, 3], vec![1, 2]]));
        assert!(matches!(
            rho1_switching(&h),
            Err(CommutorError::NotLrPair(_))
        ));
        assert!(matches!(
            rho1_internal(&h),
            Err(CommutorError::NotLrPair(_))
        ));
        assert!(gt_order_word(h.skew()).is_err());
    }

    fn staged_example() -> GluedPair {
        GluedPair::new(t(
            &[6, 4, 0, 0],
            vec![
                vec![1, 1, 1],
                vec![1, 1, 2],
                vec![1, 2, 2, 2, 2, 3],
                vec![3, 3, 3, 3, 4],
            ],
        ))
    }

    #[test]
    fn staged_example_a() {
        let st = staged_decomposition(&staged_example()).unwrap();
        assert_eq!(st.d, 2);
        assert_eq!(st.f_hat, w("33"));
        assert_eq!(st.d_word, w("22"));
        assert_eq!(
            st.s,
            t(
                &[6],
                vec![
                    vec![1, 1, 1],
                    vec![1, 1, 1, 2, 2, 2],
                    vec![2, 2, 3, 3, 3],
                    vec![3, 3, 4]
                ]
            )
        );
        assert_eq!(
            st.q,
            t(&[9, 6, 5, 3], vec![vec![], vec![2], vec![2], vec![2, 2]])
        );
    }

    #[test]
    fn staged_example_b() {
        let st = staged_decomposition(&staged_example().head(3)).unwrap();
        assert_eq!(st.d, 2);
        assert_eq!(st.f_hat, w("22"));
        assert_eq!(st.d_word, w("222"));
        assert_eq!(st.q.row(2), &[2]);
    }

    #[test]
    fn staged_preconditions() {
        assert!(staged_decomposition(&five_row_pair().head(4)).is_err());
        assert!(staged_decomposition(&five_row_pair()).is_ok());
        assert!(staged_decomposition(&GluedPair::new(t(&[0, 0], vec![vec![1], vec![2]]))).is_err());
    }

    #[test]
    fn chi_examples() {
        let one = chi_append(&GluedPair::empty(), 1).unwrap();
        assert_eq!(one.skew(), &t(&[], vec![vec![1]]));
        assert!(chi_append(&GluedPair::empty(), 2).is_err());
        let e2 = GluedPair::new(SkewTableau::empty(p(&[2])));
        let mut cur = e2;
        for _ in 0..4 {
            cur = chi_append(&cur, 1).unwrap();
        }
        assert_eq!(cur.skew(), &t(&[2], vec![vec![1, 1, 1, 1]]));
    }

    #[test]
    fn staged_example_image() {
        let image = GluedPair::new(t(
            &[6, 5, 5, 1],
            vec![vec![1, 1, 1], vec![1, 2], vec![2], vec![1, 1, 2, 2]],
        ));
        assert_eq!(rho1_switching(&staged_example()).unwrap(), image);
        assert_eq!(rho1_internal(&staged_example()).unwrap(), image);
        assert_eq!(rho1_scratch(&staged_example()).unwrap(), image);
    }
}
