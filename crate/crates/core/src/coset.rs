//! Todd–Coxeter coset enumeration.
//!
//! Two strategies share one table: HLT (relator scanning with definitions,
//! plus a lookahead pass when the coset limit is hit) and Felsch (fill the
//! first gap, then close all deductions). Coincidences are merged with
//! union-find and the queue is drained immediately. A completed table is
//! compressed and renumbered breadth first, so the result only depends on the
//! group, the subgroup generators, and their order.

use std::collections::VecDeque;
use std::fmt;

use crate::error::Result;
use crate::perm::Permutation;
use crate::presentation::Presentation;
use crate::word::{Letter, Word};

const NONE: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    HltLookahead,
    Felsch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumLimits {
    pub max_cosets: usize,
    pub strategy: Strategy,
}

impl Default for EnumLimits {
    fn default() -> Self {
        EnumLimits { max_cosets: 2_000_000, strategy: Strategy::HltLookahead }
    }
}

impl EnumLimits {
    pub fn with_strategy(self, strategy: Strategy) -> EnumLimits {
        EnumLimits { strategy, ..self }
    }

    pub fn with_max_cosets(self, max_cosets: usize) -> EnumLimits {
        EnumLimits { max_cosets: max_cosets.max(1), ..self }
    }
}

/// A completed, standardized coset table. Cosets are 0-based here; coset 0 is
/// the subgroup itself. Column `2(g−1)` holds the action of generator `g`,
/// column `2(g−1)+1` that of its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CosetTable {
    n_cosets: usize,
    n_gens: usize,
    action: Vec<u32>,
    subgroup_gens: Vec<Word>,
}

impl CosetTable {
    pub fn n_cosets(&self) -> usize {
        self.n_cosets
    }

    pub fn index(&self) -> usize {
        self.n_cosets
    }

    pub fn n_gens(&self) -> usize {
        self.n_gens
    }

    pub fn subgroup_gens(&self) -> &[Word] {
        &self.subgroup_gens
    }

    #[inline]
    pub fn act(&self, coset: usize, l: Letter) -> usize {
        self.action[coset * 2 * self.n_gens + l.column()] as usize
    }

    #[inline]
    pub fn act_column(&self, coset: usize, col: usize) -> usize {
        self.action[coset * 2 * self.n_gens + col] as usize
    }

    /// Right action of a word on a coset.
    pub fn trace(&self, coset: usize, w: &Word) -> usize {
        w.letters().iter().fold(coset, |c, &l| self.act(c, l))
    }

    /// Whether every relator fixes every coset and every subgroup generator fixes coset 0.
    pub fn validate(&self, p: &Presentation) -> bool {
        if p.num_generators() != self.n_gens {
            return false;
        }
        let consistent = (0..self.n_cosets).all(|c| {
            (0..self.n_gens).all(|g| {
                let d = self.act(c, Letter::pos(g + 1));
                self.act(d, Letter::neg(g + 1)) == c
            })
        });
        consistent
            && p.relators().iter().all(|r| (0..self.n_cosets).all(|c| self.trace(c, r) == c))
            && self.subgroup_gens.iter().all(|h| self.trace(0, h) == 0)
    }

    /// For each generator, the permutation `c ↦ c·g` on the cosets.
    pub fn permutation_representation(&self) -> Vec<Permutation> {
        (1..=self.n_gens)
            .map(|g| {
                Permutation::from_images(
                    (0..self.n_cosets).map(|c| self.act(c, Letter::pos(g)) as u32).collect(),
                )
            })
            .collect()
    }

    /// One line per coset: 1-based images under `g1 g1^-1 g2 g2^-1 …`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in 0..self.n_cosets {
            let row: Vec<String> = (0..2 * self.n_gens)
                .map(|col| (self.act_column(c, col) + 1).to_string())
                .collect();
            out.push_str(&format!("{}: {}\n", c + 1, row.join(" ")));
        }
        out
    }

}

impl fmt::Display for CosetTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EnumOutcome {
    Completed(CosetTable),
    /// Active coset count hit the limit; carries the number of cosets in use.
    ResourceExceeded(usize),
}

impl EnumOutcome {
    pub fn table(&self) -> Option<&CosetTable> {
        match self {
            EnumOutcome::Completed(t) => Some(t),
            EnumOutcome::ResourceExceeded(_) => None,
        }
    }

    pub fn into_table(self) -> Option<CosetTable> {
        match self {
            EnumOutcome::Completed(t) => Some(t),
            EnumOutcome::ResourceExceeded(_) => None,
        }
    }

    pub fn index(&self) -> Option<usize> {
        self.table().map(CosetTable::n_cosets)
    }
}

struct Full;

struct Enumerator {
    ncols: usize,
    table: Vec<u32>,
    /// parent[c] == c for live cosets.
    parent: Vec<u32>,
    active: usize,
    max_active: usize,
    queue: Vec<u32>,
    /// Felsch deduction stack; `None` under HLT.
    deductions: Option<Vec<(u32, u32)>>,
    relators: Vec<Vec<u32>>,
    /// Bumped on every deduction or merge; used to detect a quiet table.
    changes: u64,
}

#[inline]
fn inv_col(col: u32) -> u32 {
    col ^ 1
}

impl Enumerator {
    fn new(p: &Presentation, max_active: usize, felsch: bool) -> Enumerator {
        let ncols = 2 * p.num_generators();
        let relators = p.relators().iter().map(|r| word_columns(r)).collect();
        let mut e = Enumerator {
            ncols,
            table: Vec::new(),
            parent: Vec::new(),
            active: 0,
            max_active,
            queue: Vec::new(),
            deductions: felsch.then(Vec::new),
            relators,
            changes: 0,
        };
        e.new_coset();
        e
    }

    fn new_coset(&mut self) -> u32 {
        let c = self.parent.len() as u32;
        self.parent.push(c);
        self.table.extend(std::iter::repeat_n(NONE, self.ncols));
        self.active += 1;
        c
    }

    #[inline]
    fn get(&self, c: u32, col: u32) -> u32 {
        self.table[c as usize * self.ncols + col as usize]
    }

    #[inline]
    fn set(&mut self, c: u32, col: u32, d: u32) {
        self.table[c as usize * self.ncols + col as usize] = d;
    }

    #[inline]
    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn define(&mut self, c: u32, col: u32) -> std::result::Result<u32, Full> {
        if self.active >= self.max_active {
            return Err(Full);
        }
        let d = self.new_coset();
        self.set(c, col, d);
        self.set(d, inv_col(col), c);
        if let Some(ded) = &mut self.deductions {
            ded.push((c, col));
        }
        Ok(d)
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut x = c;
        while self.parent[x as usize] != root {
            let next = self.parent[x as usize];
            self.parent[x as usize] = root;
            x = next;
        }
        root
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.rep(a), self.rep(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi as usize] = lo;
            self.active -= 1;
            self.changes += 1;
            self.queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let dead = self.queue[i];
            i += 1;
            for col in 0..self.ncols as u32 {
                let d = self.get(dead, col);
                if d == NONE {
                    continue;
                }
                self.set(d, inv_col(col), NONE);
                let mu = self.rep(dead);
                let nu = self.rep(d);
                let mu_x = self.get(mu, col);
                if mu_x != NONE {
                    self.merge(nu, mu_x);
                    continue;
                }
                let nu_xi = self.get(nu, inv_col(col));
                if nu_xi != NONE {
                    self.merge(mu, nu_xi);
                    continue;
                }
                self.set(mu, col, nu);
                self.set(nu, inv_col(col), mu);
                if let Some(ded) = &mut self.deductions {
                    ded.push((mu, col));
                }
            }
        }
        self.queue.clear();
    }

    /// Scans `w` at `c`, defining cosets to close gaps.
    fn scan_and_fill(&mut self, c: u32, w: &[u32]) -> std::result::Result<(), Full> {
        let mut f = c;
        let mut b = c;
        let mut i: isize = 0;
        let mut j: isize = w.len() as isize - 1;
        loop {
            while i <= j && self.get(f, w[i as usize]) != NONE {
                f = self.get(f, w[i as usize]);
                i += 1;
            }
            if i > j {
                if f != c {
                    self.coincidence(f, c);
                }
                return Ok(());
            }
            while j >= i && self.get(b, inv_col(w[j as usize])) != NONE {
                b = self.get(b, inv_col(w[j as usize]));
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                self.deduce(f, w[i as usize], b);
                return Ok(());
            }
            self.define(f, w[i as usize])?;
        }
    }

    fn deduce(&mut self, f: u32, col: u32, b: u32) {
        self.set(f, col, b);
        self.set(b, inv_col(col), f);
        self.changes += 1;
        if let Some(ded) = &mut self.deductions {
            ded.push((f, col));
        }
    }

    /// Scans `w` at `c` without defining cosets: records a deduction when
    /// exactly one entry is missing and a coincidence when the ends disagree.
    fn scan_and_deduce(&mut self, c: u32, w: &[u32]) {
        let n = w.len();
        let mut f = c;
        let mut i = 0usize;
        while i < n && self.get(f, w[i]) != NONE {
            f = self.get(f, w[i]);
            i += 1;
        }
        if i == n {
            if f != c {
                self.coincidence(f, c);
            }
            return;
        }
        let mut b = c;
        let mut j = n;
        while j > i && self.get(b, inv_col(w[j - 1])) != NONE {
            b = self.get(b, inv_col(w[j - 1]));
            j -= 1;
        }
        if j == i {
            if f != b {
                self.coincidence(f, b);
            }
        } else if j == i + 1 {
            self.deduce(f, w[i], b);
        }
    }

    fn live_cosets_from(&self, start: u32) -> Option<u32> {
        (start as usize..self.parent.len()).find(|&c| self.parent[c] == c as u32).map(|c| c as u32)
    }

    /// Renumbers live cosets contiguously, preserving order. Returns the new
    /// number of `cursor`'s coset (or of the next live one after it).
    fn compact(&mut self, cursor: u32) -> u32 {
        let total = self.parent.len();
        let mut map = vec![NONE; total];
        let mut next = 0u32;
        for c in 0..total {
            if self.parent[c] == c as u32 {
                map[c] = next;
                next += 1;
            }
        }
        let mut table = Vec::with_capacity(next as usize * self.ncols);
        for c in 0..total {
            if map[c] == NONE {
                continue;
            }
            for col in 0..self.ncols {
                let d = self.table[c * self.ncols + col];
                table.push(if d == NONE { NONE } else { map[d as usize] });
            }
        }
        let new_cursor = (cursor as usize..total)
            .find(|&c| map[c] != NONE)
            .map_or(next, |c| map[c]);
        self.table = table;
        self.parent = (0..next).collect();
        new_cursor
    }

    fn maybe_compact(&mut self, cursor: u32) -> u32 {
        let total = self.parent.len();
        if total > 1024 && total >= 2 * self.active {
            self.compact(cursor)
        } else {
            cursor
        }
    }

    fn lookahead(&mut self) {
        let mut c = 0u32;
        while let Some(live) = self.live_cosets_from(c) {
            for r in 0..self.relators.len() {
                if !self.is_live(live) {
                    break;
                }
                let w = std::mem::take(&mut self.relators[r]);
                self.scan_and_deduce(live, &w);
                self.relators[r] = w;
            }
            c = live + 1;
        }
    }

    fn hlt(&mut self, subgroup: &[Vec<u32>]) -> bool {
        for h in subgroup {
            if !self.fill_with_lookahead(0, h) {
                return false;
            }
        }
        loop {
            if !self.hlt_pass() {
                return false;
            }
            if self.is_quiet(subgroup) {
                return true;
            }
        }
    }

    fn hlt_pass(&mut self) -> bool {
        let mut c = 0u32;
        loop {
            c = self.maybe_compact(c);
            let Some(live) = self.live_cosets_from(c) else { return true };
            c = live;
            for r in 0..self.relators.len() {
                if !self.is_live(c) {
                    break;
                }
                let w = std::mem::take(&mut self.relators[r]);
                let ok = self.fill_with_lookahead(c, &w);
                self.relators[r] = w;
                if !ok {
                    return false;
                }
            }
            for col in 0..self.ncols as u32 {
                if !self.is_live(c) {
                    break;
                }
                if self.get(c, col) == NONE && !self.define_with_lookahead(c, col) {
                    return false;
                }
            }
            c += 1;
        }
    }

    /// Rescans every relator at every coset and the subgroup generators at 0.
    /// True when nothing changed and the table has no gaps.
    fn is_quiet(&mut self, subgroup: &[Vec<u32>]) -> bool {
        let before = self.changes;
        for h in subgroup {
            self.scan_and_deduce(0, h);
        }
        self.lookahead();
        if let Some(ded) = &mut self.deductions {
            ded.clear();
        }
        self.changes == before
            && (0..self.parent.len() as u32)
                .filter(|&c| self.is_live(c))
                .all(|c| (0..self.ncols as u32).all(|col| self.get(c, col) != NONE))
    }

    fn fill_with_lookahead(&mut self, c: u32, w: &[u32]) -> bool {
        loop {
            match self.scan_and_fill(c, w) {
                Ok(()) => return true,
                Err(Full) => {
                    self.lookahead();
                    if self.active >= self.max_active {
                        return false;
                    }
                    if !self.is_live(c) {
                        return true;
                    }
                }
            }
        }
    }

    fn define_with_lookahead(&mut self, c: u32, col: u32) -> bool {
        if self.define(c, col).is_ok() {
            return true;
        }
        self.lookahead();
        if self.active >= self.max_active {
            return false;
        }
        if self.is_live(c) && self.get(c, col) == NONE {
            return self.define(c, col).is_ok();
        }
        true
    }

    fn process_deductions(&mut self, cyclic: &[Vec<Vec<u32>>]) {
        while let Some((c, col)) = self.deductions.as_mut().and_then(Vec::pop) {
            if !self.is_live(c) {
                continue;
            }
            for w in &cyclic[col as usize] {
                self.scan_and_deduce(c, w);
                if !self.is_live(c) {
                    break;
                }
            }
            let d = self.get(c, col);
            if d != NONE && self.is_live(d) {
                for w in &cyclic[inv_col(col) as usize] {
                    self.scan_and_deduce(d, w);
                    if !self.is_live(d) {
                        break;
                    }
                }
            }
        }
    }

    fn felsch(&mut self, subgroup: &[Vec<u32>]) -> bool {
        // Cyclic conjugates of every relator and its inverse, grouped by first column.
        let mut cyclic: Vec<Vec<Vec<u32>>> = vec![Vec::new(); self.ncols];
        for r in &self.relators {
            let inv: Vec<u32> = r.iter().rev().map(|&c| inv_col(c)).collect();
            for w in [r, &inv] {
                for k in 0..w.len() {
                    let rot: Vec<u32> = w[k..].iter().chain(&w[..k]).copied().collect();
                    let bucket = &mut cyclic[rot[0] as usize];
                    if !bucket.contains(&rot) {
                        bucket.push(rot);
                    }
                }
            }
        }
        for h in subgroup {
            if self.scan_and_fill(0, h).is_err() {
                return false;
            }
            self.process_deductions(&cyclic);
        }
        loop {
            if !self.felsch_pass(&cyclic) {
                return false;
            }
            if self.is_quiet(subgroup) {
                return true;
            }
        }
    }

    fn felsch_pass(&mut self, cyclic: &[Vec<Vec<u32>>]) -> bool {
        let mut c = 0u32;
        loop {
            c = self.maybe_compact(c);
            let Some(live) = self.live_cosets_from(c) else { return true };
            c = live;
            for col in 0..self.ncols as u32 {
                if !self.is_live(c) {
                    break;
                }
                if self.get(c, col) == NONE {
                    if self.define(c, col).is_err() {
                        return false;
                    }
                    self.process_deductions(cyclic);
                }
            }
            c += 1;
        }
    }

    /// Breadth-first renumbering from coset 0.
    fn standardize(&mut self) -> (usize, Vec<u32>) {
        let total = self.parent.len();
        let mut map = vec![NONE; total];
        let mut order = Vec::new();
        map[0] = 0;
        order.push(0u32);
        let mut queue = VecDeque::from([0u32]);
        while let Some(c) = queue.pop_front() {
            for col in 0..self.ncols as u32 {
                let d = self.get(c, col);
                debug_assert!(d != NONE, "incomplete table");
                if map[d as usize] == NONE {
                    map[d as usize] = order.len() as u32;
                    order.push(d);
                    queue.push_back(d);
                }
            }
        }
        let mut action = Vec::with_capacity(order.len() * self.ncols);
        for &c in &order {
            for col in 0..self.ncols as u32 {
                action.push(map[self.get(c, col) as usize]);
            }
        }
        (order.len(), action)
    }
}

fn word_columns(w: &Word) -> Vec<u32> {
    w.letters().iter().map(|l| l.column() as u32).collect()
}

/// Enumerates the cosets of `⟨subgroup_gens⟩` in the group presented by `p`.
pub fn enumerate(p: &Presentation, subgroup_gens: &[Word], limits: EnumLimits) -> Result<EnumOutcome> {
    for h in subgroup_gens {
        p.alphabet().check(h)?;
    }
    let subgroup: Vec<Vec<u32>> = subgroup_gens.iter().map(word_columns).collect();
    let felsch = limits.strategy == Strategy::Felsch;
    let mut e = Enumerator::new(p, limits.max_cosets.max(1), felsch);
    let done = if p.num_generators() == 0 {
        true
    } else if felsch {
        e.felsch(&subgroup)
    } else {
        e.hlt(&subgroup)
    };
    if !done {
        return Ok(EnumOutcome::ResourceExceeded(e.active));
    }
    let (n_cosets, action) = e.standardize();
    let table = CosetTable {
        n_cosets,
        n_gens: p.num_generators(),
        action,
        subgroup_gens: subgroup_gens.to_vec(),
    };
    assert!(table.validate(p), "coset enumeration produced an invalid table for {}", p.label());
    Ok(EnumOutcome::Completed(table))
}

/// Order of the group, `None` when the enumeration ran out of cosets.
pub fn group_order(p: &Presentation, limits: EnumLimits) -> Result<Option<usize>> {
    Ok(enumerate(p, &[], limits)?.index())
}

/// Index of the subgroup, `None` when inconclusive.
pub fn subgroup_index(p: &Presentation, gens: &[Word], limits: EnumLimits) -> Result<Option<usize>> {
    Ok(enumerate(p, gens, limits)?.index())
}
