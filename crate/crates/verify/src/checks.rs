//! Shared plumbing for claim checks: the run context, outcomes, and
//! helpers that turn a resource limit into an inconclusive result.

use std::fmt::Display;

use braidforge_core::abelian::{AbelianImage, Abelianization};
use braidforge_core::finite::FiniteGroupTable;
use braidforge_core::schreier::pure_subgroup;
use braidforge_core::{
    concretize, enumerate, evaluate_perm, family_presentation, named_word, AbelianInvariants, CosetTable,
    EnumLimits, EnumOutcome, Family, Named, Presentation, Surface, Word,
};
use serde::Serialize;

#[derive(Clone, Copy, Debug)]
pub struct Ctx {
    pub limits: EnumLimits,
    pub seed: u64,
}

impl Default for Ctx {
    fn default() -> Self {
        Ctx { limits: EnumLimits::default(), seed: DEFAULT_SEED }
    }
}

pub const DEFAULT_SEED: u64 = 0x5eed_b4a1_d000_0001;

/// How much a verified result establishes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strength {
    /// The statement itself was decided.
    Full,
    /// Only consequences of the statement were checked.
    Necessary,
}

impl Strength {
    pub fn and(self, other: Strength) -> Strength {
        self.max(other)
    }
}

/// A check that ran to completion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub pass: bool,
    pub observed: String,
    pub expected: String,
    pub strength: Strength,
    pub note: Option<String>,
}

impl Outcome {
    /// Passes when both sides print the same.
    pub fn compare(observed: impl Display, expected: impl Display, strength: Strength) -> Outcome {
        let (observed, expected) = (observed.to_string(), expected.to_string());
        Outcome { pass: observed == expected, observed, expected, strength, note: None }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Outcome {
        self.note = Some(note.into());
        self
    }
}

/// A check that stopped without deciding anything.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Halt {
    Inconclusive(String),
    Unsupported(String),
}

impl From<braidforge_core::Error> for Halt {
    fn from(e: braidforge_core::Error) -> Halt {
        Halt::Unsupported(e.to_string())
    }
}

pub type Checked = Result<Outcome, Halt>;

pub fn braid(surface: Surface, n: usize) -> Result<Presentation, Halt> {
    Ok(family_presentation(Family::Braid { surface, n })?)
}

pub fn mcg(surface: Surface, n: usize) -> Result<Presentation, Halt> {
    Ok(family_presentation(Family::MappingClass { surface, n })?)
}

pub fn word(surface: Surface, name: Named, n: usize) -> Result<Word, Halt> {
    Ok(named_word(surface, name, n)?)
}

pub fn table(p: &Presentation, gens: &[Word], ctx: &Ctx) -> Result<CosetTable, Halt> {
    match enumerate(p, gens, ctx.limits)? {
        EnumOutcome::Completed(t) => Ok(t),
        EnumOutcome::ResourceExceeded(used) => Err(Halt::Inconclusive(format!(
            "coset limit {} reached in {} ({used} cosets live)",
            ctx.limits.max_cosets,
            p.label()
        ))),
    }
}

pub fn index(p: &Presentation, gens: &[Word], ctx: &Ctx) -> Result<usize, Halt> {
    Ok(table(p, gens, ctx)?.n_cosets())
}

pub fn order(p: &Presentation, ctx: &Ctx) -> Result<usize, Halt> {
    index(p, &[], ctx)
}

pub fn quotient_order(p: &Presentation, words: &[Word], ctx: &Ctx) -> Result<usize, Halt> {
    order(&p.add_relators(words)?, ctx)
}

pub fn group(p: &Presentation, ctx: &Ctx) -> Result<FiniteGroupTable, Halt> {
    Ok(concretize(&table(p, &[], ctx)?)?)
}

/// Abelian invariants of the pure subgroup, through Reidemeister–Schreier.
pub fn pure_abelianization(p: &Presentation, ctx: &Ctx) -> Result<(usize, AbelianInvariants), Halt> {
    match pure_subgroup(p, ctx.limits)? {
        Some((t, sp)) => Ok((t.n_cosets(), braidforge_core::abelian_invariants(&sp.presentation))),
        None => Err(Halt::Inconclusive(format!("coset limit reached for the pure subgroup of {}", p.label()))),
    }
}

pub fn is_pure(p: &Presentation, w: &Word) -> Result<bool, Halt> {
    Ok(evaluate_perm(w, &p.permutation_images()?)?.is_identity())
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// The `k` in `0..order` with `k·g = x` in a finite cyclic abelianization.
pub fn multiple_of(ab: &Abelianization, g: &AbelianImage, x: &AbelianImage) -> Option<u64> {
    let order = ab.invariants().order()?;
    let mut acc = ab.image(&Word::empty());
    for k in 0..order {
        if &acc == x {
            return Some(k);
        }
        acc = ab.add(&acc, g);
    }
    None
}

/// Cheap probe for finiteness: the order if enumeration finishes under a small limit.
pub fn small_order(p: &Presentation) -> Option<usize> {
    let limits = EnumLimits::default().with_max_cosets(20_000);
    enumerate(p, &[], limits).ok()?.index()
}
