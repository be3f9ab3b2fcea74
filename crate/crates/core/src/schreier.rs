//! Reidemeister–Schreier rewriting.
//!
//! Generators of the subgroup are the Schreier generators
//! `s(c, g) = rep(c) · g · rep(c·g)⁻¹` for every coset `c` and positive
//! generator `g`, minus those on transversal edges (which are trivial).
//! Relators are the rewrites of every relator traced from every coset.

use crate::coset::{enumerate, CosetTable, EnumLimits, EnumOutcome};
use crate::error::Result;
use crate::presentation::Presentation;
use crate::word::{Alphabet, Letter, Word};

/// Prefix-closed transversal from a breadth-first walk of the table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchreierTransversal {
    reps: Vec<Word>,
    /// `(coset, column)` of the tree edge entering each coset; `None` at coset 0.
    parent: Vec<Option<(usize, usize)>>,
}

impl SchreierTransversal {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn representative(&self, coset: usize) -> &Word {
        &self.reps[coset]
    }

    pub fn representatives(&self) -> &[Word] {
        &self.reps
    }

    pub fn parent(&self, coset: usize) -> Option<(usize, usize)> {
        self.parent[coset]
    }
}

pub fn schreier_transversal(t: &CosetTable) -> SchreierTransversal {
    let n = t.n_cosets();
    let mut reps: Vec<Option<Word>> = vec![None; n];
    let mut parent = vec![None; n];
    reps[0] = Some(Word::empty());
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        for col in 0..2 * t.n_gens() {
            let d = t.act_column(c, col);
            if reps[d].is_none() {
                let rep = reps[c].as_ref().unwrap().concat(&Word::letter(Letter::from_column(col)));
                reps[d] = Some(rep);
                parent[d] = Some((c, col));
                queue.push_back(d);
            }
        }
    }
    SchreierTransversal { reps: reps.into_iter().map(|r| r.expect("table not connected")).collect(), parent }
}

/// A subgroup presentation together with what is needed to read it back in
/// the ambient group.
#[derive(Clone, Debug)]
pub struct SubgroupPresentation {
    pub presentation: Presentation,
    /// `(coset, generator)` behind each surviving generator, 0-based coset, 1-based generator.
    pub labels: Vec<(usize, usize)>,
    /// Schreier generators before any simplification.
    pub raw_generator_count: usize,
    pub index: usize,
    pub transversal: SchreierTransversal,
}

impl SubgroupPresentation {
    /// Each surviving generator as a word in the ambient generators.
    pub fn generator_words(&self, table: &CosetTable) -> Vec<Word> {
        self.labels
            .iter()
            .map(|&(c, g)| schreier_word(table, &self.transversal, c, g))
            .collect()
    }
}

fn schreier_word(t: &CosetTable, tr: &SchreierTransversal, c: usize, g: usize) -> Word {
    let d = t.act(c, Letter::pos(g));
    tr.representative(c)
        .concat(&Word::gen(g))
        .concat(&tr.representative(d).inverse())
}

struct Rewriter<'a> {
    table: &'a CosetTable,
    /// Generator number for `(coset, gen)`, `0` for a tree edge.
    number: Vec<usize>,
}

impl Rewriter<'_> {
    fn slot(&self, c: usize, g: usize) -> usize {
        c * self.table.n_gens() + (g - 1)
    }

    fn rewrite(&self, start: usize, w: &Word) -> Word {
        let mut c = start;
        let mut out = Vec::new();
        for &l in w.letters() {
            let g = l.index();
            if l.is_positive() {
                let k = self.number[self.slot(c, g)];
                if k > 0 {
                    out.push(Letter::pos(k));
                }
                c = self.table.act(c, l);
            } else {
                let d = self.table.act(c, l);
                let k = self.number[self.slot(d, g)];
                if k > 0 {
                    out.push(Letter::neg(k));
                }
                c = d;
            }
        }
        Word::reduced(out)
    }
}

/// Rewrites `w`, read from coset `start`, as a word in the raw Schreier generators
/// (numbered in `(coset, generator)` order, skipping tree edges).
pub fn rewrite_word(t: &CosetTable, start: usize, w: &Word) -> Word {
    let tr = schreier_transversal(t);
    let (number, _) = numbering(t, &tr);
    Rewriter { table: t, number }.rewrite(start, w)
}

fn numbering(t: &CosetTable, tr: &SchreierTransversal) -> (Vec<usize>, Vec<(usize, usize)>) {
    let ng = t.n_gens();
    let mut tree = vec![false; t.n_cosets() * ng];
    for d in 0..t.n_cosets() {
        if let Some((c, col)) = tr.parent(d) {
            let l = Letter::from_column(col);
            // c·g = d marks (c, g); c·g⁻¹ = d marks (d, g).
            let from = if l.is_positive() { c } else { d };
            tree[from * ng + l.index() - 1] = true;
        }
    }
    let mut number = vec![0usize; t.n_cosets() * ng];
    let mut labels = Vec::new();
    for c in 0..t.n_cosets() {
        for g in 1..=ng {
            if !tree[c * ng + g - 1] {
                labels.push((c, g));
                number[c * ng + g - 1] = labels.len();
            }
        }
    }
    (number, labels)
}

/// Presentation of the subgroup whose coset table is `t`. With `simplify`,
/// generators forced trivial by a relator of length one are removed until none remain.
pub fn subgroup_presentation(p: &Presentation, t: &CosetTable, simplify: bool) -> Result<SubgroupPresentation> {
    let tr = schreier_transversal(t);
    let (number, mut labels) = numbering(t, &tr);
    let raw_generator_count = labels.len();
    let rw = Rewriter { table: t, number };
    let mut relators: Vec<Word> = Vec::with_capacity(t.n_cosets() * p.relators().len());
    for c in 0..t.n_cosets() {
        for r in p.relators() {
            let w = rw.rewrite(c, r).cyclically_reduced();
            if !w.is_empty() {
                relators.push(w);
            }
        }
    }
    if simplify {
        let (kept, rels) = drop_forced_generators(labels.len(), relators);
        labels = kept.iter().map(|&k| labels[k - 1]).collect();
        relators = rels;
    }
    let names = labels.iter().map(|&(c, g)| format!("y{}_{}", c + 1, g));
    let alphabet = Alphabet::new(names)?;
    let label = format!("RS({}, index {})", p.label(), t.n_cosets());
    let presentation = Presentation::new(alphabet, relators, label)?;
    Ok(SubgroupPresentation {
        presentation,
        labels,
        raw_generator_count,
        index: t.n_cosets(),
        transversal: tr,
    })
}

/// Removes generators equal to the identity by a length-one relator, to a
/// fixed point. Returns the surviving old generator numbers and renumbered relators.
fn drop_forced_generators(n_gens: usize, mut relators: Vec<Word>) -> (Vec<usize>, Vec<Word>) {
    let mut dead = vec![false; n_gens + 1];
    loop {
        let mut found = false;
        for r in &relators {
            if r.len() == 1 {
                dead[r.letters()[0].index()] = true;
                found = true;
            }
        }
        if !found {
            break;
        }
        relators = relators
            .iter()
            .map(|r| {
                r.letters()
                    .iter()
                    .copied()
                    .filter(|l| !dead[l.index()])
                    .collect::<Word>()
                    .cyclically_reduced()
            })
            .filter(|r| !r.is_empty())
            .collect();
    }
    let kept: Vec<usize> = (1..=n_gens).filter(|&g| !dead[g]).collect();
    let mut new_number = vec![0usize; n_gens + 1];
    for (k, &g) in kept.iter().enumerate() {
        new_number[g] = k + 1;
    }
    let relators = relators.iter().map(|r| r.relabel(|g| new_number[g])).collect();
    (kept, relators)
}

/// Enumerates the pure subgroup of a braid-family presentation and rewrites
/// it. `None` when the enumeration hits the coset limit.
pub fn pure_subgroup(p: &Presentation, limits: EnumLimits) -> Result<Option<(CosetTable, SubgroupPresentation)>> {
    let gens = p.pure_subgroup_generators()?;
    match enumerate(p, &gens, limits)? {
        EnumOutcome::Completed(t) => {
            let sp = subgroup_presentation(p, &t, true)?;
            Ok(Some((t, sp)))
        }
        EnumOutcome::ResourceExceeded(_) => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::abelian_invariants;
    use crate::presentation::{artin, sphere};

    fn table(p: &Presentation, gens: &[Word]) -> CosetTable {
        enumerate(p, gens, EnumLimits::default()).unwrap().into_table().unwrap()
    }

    #[test]
    fn transversal_of_sphere_two() {
        let p = sphere(2).unwrap();
        let t = table(&p, &[]);
        let tr = schreier_transversal(&t);
        assert_eq!(tr.representatives(), &[Word::empty(), Word::gen(1)]);
    }

    #[test]
    fn index_one_keeps_abelianization() {
        let p = sphere(4).unwrap();
        let t = table(&p, &[Word::gen(1), Word::gen(2), Word::gen(3)]);
        let sp = subgroup_presentation(&p, &t, false).unwrap();
        assert_eq!(sp.raw_generator_count, 3);
        assert_eq!(abelian_invariants(&sp.presentation), abelian_invariants(&p));
    }

    #[test]
    fn pure_braid_group_of_three_strands() {
        let p = artin(3).unwrap();
        let (t, sp) = pure_subgroup(&p, EnumLimits::default()).unwrap().unwrap();
        assert_eq!(t.n_cosets(), 6);
        assert_eq!(sp.raw_generator_count, 6 * 2 - 5);
        let ab = abelian_invariants(&sp.presentation);
        assert_eq!(ab.free_rank, 3);
        assert!(ab.torsion.is_empty());
    }

    #[test]
    fn relators_expand_to_conjugates() {
        let p = sphere(3).unwrap();
        let t = table(&p, &p.pure_subgroup_generators().unwrap());
        let sp = subgroup_presentation(&p, &t, false).unwrap();
        let words = sp.generator_words(&t);
        let mut k = 0;
        for c in 0..t.n_cosets() {
            for r in p.relators() {
                let rw = rewrite_word(&t, c, r);
                let expanded = rw.substitute(&words);
                let rep = sp.transversal.representative(c);
                assert_eq!(expanded, r.conjugate(rep));
                k += 1;
            }
        }
        assert_eq!(k, t.n_cosets() * p.relators().len());
    }
}
