//! Two-sided bounds on G, NG, TG and NTG.
//!
//! Lower bounds come from the abelianization (a quotient needs no more
//! generators than the group) and from the non-abelian permutation quotient.
//! Upper bounds come from explicit sets checked by coset enumeration: index 1
//! for the whole group, index `n!` plus purity for a pure subgroup, and a
//! trivial quotient for normal generation.

use std::fmt;

use braidforge_core::abelian::Abelianization;
use braidforge_core::presentation::{full_twist, pure_generator, pure_generators, y_set};
use braidforge_core::{concretize, normal_form, AbelianInvariants, Named, Presentation, Surface, Word};

use crate::checks::{
    braid, factorial, index, is_pure, mcg, multiple_of, pure_abelianization, quotient_order, small_order, table,
    word, Checked, Ctx, Halt, Outcome, Strength,
};
use crate::table::{claimed, GroupFamily, Invariants};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Interval {
    lo: u64,
    hi: u64,
}

impl Interval {
    fn contains(self, v: u64) -> bool {
        self.lo <= v && v <= self.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

/// An element of a generating set, with its claimed order when it is torsion.
struct Generator {
    word: Word,
    order: Option<u64>,
    /// `k` with `wordᵏ = Δ²` already in the Artin group.
    twist_root: Option<u64>,
}

fn plain(word: Word) -> Generator {
    Generator { word, order: None, twist_root: None }
}

fn torsion(word: Word, order: u64, twist_root: Option<u64>) -> Generator {
    Generator { word, order: Some(order), twist_root }
}

/// `{A_{i,j} : 4 ≤ j ≤ n, 2 ≤ i < j}`.
fn sphere_pure_basis(n: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for j in 4..=n {
        for i in 2..j {
            out.push(pure_generator(i, j));
        }
    }
    out
}

fn generating_set(family: GroupFamily, n: usize) -> Result<Vec<Generator>, Halt> {
    use GroupFamily::*;
    use Surface::*;
    let m = n as u64;
    let rp2 = ProjectivePlane;
    Ok(match family {
        Braid(Disc) if n == 2 => vec![plain(Word::gen(1))],
        Braid(Disc) => vec![plain(Word::gen(1)), plain(word(Disc, Named::Alpha0, n)?)],
        Braid(Sphere) => vec![
            torsion(word(Sphere, Named::Alpha0, n)?, 2 * m, Some(m)),
            torsion(word(Sphere, Named::Alpha1, n)?, 2 * (m - 1), Some(m - 1)),
        ],
        Braid(ProjectivePlane) => {
            vec![torsion(word(rp2, Named::A, n)?, 4 * m, None), torsion(word(rp2, Named::B, n)?, 4 * (m - 1), None)]
        }
        Mcg(Disc) if n == 2 => vec![torsion(Word::gen(1), 2, Some(2))],
        Mcg(Disc) | Mcg(Sphere) => vec![
            torsion(word(Sphere, Named::Alpha0, n)?, m, Some(m)),
            torsion(word(Sphere, Named::Alpha1, n)?, m - 1, Some(m - 1)),
        ],
        Mcg(ProjectivePlane) => {
            vec![torsion(word(rp2, Named::A, n)?, 2 * m, None), torsion(word(rp2, Named::B, n)?, 2 * (m - 1), None)]
        }
        Pure(Disc) => pure_generators(n).into_iter().map(plain).collect(),
        Pure(Sphere) => {
            let mut gens: Vec<Generator> = sphere_pure_basis(n).into_iter().map(plain).collect();
            gens.push(torsion(full_twist(n), 2, Some(1)));
            gens
        }
        PureMcg(Disc) => pure_generators(n).into_iter().skip(1).map(plain).collect(),
        PureMcg(Sphere) => sphere_pure_basis(n).into_iter().map(plain).collect(),
        Pure(ProjectivePlane) => y_set(n)?.into_iter().map(|w| torsion(w, 4, None)).collect(),
        PureMcg(ProjectivePlane) => y_set(n)?.into_iter().map(|w| torsion(w, 2, None)).collect(),
    })
}

/// A single element whose normal closure is the whole group, when one is known.
fn normal_generator(family: GroupFamily) -> Option<Word> {
    use GroupFamily::*;
    match family {
        Braid(Surface::Disc) | Braid(Surface::Sphere) | Mcg(Surface::Disc) | Mcg(Surface::Sphere) => {
            Some(Word::gen(1))
        }
        _ => None,
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// A torsion element whose normal closure is the whole group, when one exists.
fn normal_torsion_generator(family: GroupFamily, n: usize) -> Result<Option<Generator>, Halt> {
    use GroupFamily::*;
    let m = n as u64;
    Ok(match family {
        Braid(Surface::Sphere) if n % 2 == 1 => {
            Some(torsion(word(Surface::Sphere, Named::Alpha1, n)?, 2 * (m - 1), Some(m - 1)))
        }
        Mcg(Surface::Sphere) if n % 2 == 1 => Some(torsion(word(Surface::Sphere, Named::Alpha1, n)?, m - 1, Some(m - 1))),
        Mcg(Surface::Disc) if n == 2 => Some(torsion(Word::gen(1), 2, Some(2))),
        _ => None,
    })
}

/// Representatives of the conjugacy classes of maximal torsion elements, for
/// the families where every torsion element is conjugate to a power of one.
fn torsion_representatives(family: GroupFamily, n: usize) -> Result<Vec<Word>, Halt> {
    use GroupFamily::*;
    Ok(match family {
        Braid(Surface::Sphere) | Mcg(Surface::Sphere) => vec![
            word(Surface::Sphere, Named::Alpha0, n)?,
            word(Surface::Sphere, Named::Alpha1, n)?,
            word(Surface::Sphere, Named::Alpha2, n)?,
        ],
        Mcg(Surface::Disc) if n >= 3 => {
            vec![word(Surface::Disc, Named::Alpha0, n)?, word(Surface::Disc, Named::Alpha1, n)?]
        }
        _ => Vec::new(),
    })
}

struct Evidence {
    strength: Strength,
    notes: Vec<String>,
}

impl Evidence {
    fn weaken(&mut self, why: impl Into<String>) {
        self.strength = Strength::Necessary;
        self.notes.push(why.into());
    }
}

/// Whether each generator has the claimed finite order, as exactly as the
/// ambient group allows.
fn check_torsion(
    family: GroupFamily,
    p: &Presentation,
    n: usize,
    gens: &[&Generator],
    ctx: &Ctx,
    ev: &mut Evidence,
) -> Result<bool, Halt> {
    if gens.iter().any(|g| g.order.is_none()) {
        return Ok(false);
    }
    if small_order(p).is_some() {
        let g = concretize(&table(p, &[], ctx)?)?;
        return Ok(gens.iter().all(|x| g.element_order(g.element(&x.word)) == x.order.unwrap()));
    }
    let mut ok = true;
    for x in gens {
        let k = x.order.unwrap();
        match (family.surface(), x.twist_root) {
            (Surface::ProjectivePlane, _) | (_, None) => {
                // Consequences only: the claimed power is pure and dies in the abelianization.
                let pk = x.word.power(k as i64);
                ok &= is_pure(p, &pk)? && Abelianization::new(p).image(&pk).is_zero();
                ev.weaken(format!("order {k} of {} checked through permutation and abelian images", p.format_word(&x.word)));
            }
            (_, Some(r)) => {
                let nf = normal_form(&x.word.power(r as i64), n)?;
                let twist_power = nf.factors().is_empty() && nf.inf() % 2 == 0 && nf.inf() != 0;
                ok &= twist_power;
                if !family.is_mapping_class() {
                    ev.weaken(format!(
                        "{}^{r} is a power of the full twist; the full twist having order 2 is assumed",
                        p.format_word(&x.word)
                    ));
                }
            }
        }
    }
    Ok(ok)
}

/// Lower and upper bounds for G, NG, TG and NTG, compared with the claimed values.
pub fn lower_and_upper_bound_check(family: GroupFamily, n: usize, ctx: &Ctx) -> Checked {
    let expected: Invariants =
        claimed(family, n).ok_or_else(|| Halt::Unsupported(format!("{family} is not tabulated at n = {n}")))?;
    let p = if family.is_mapping_class() { mcg(family.surface(), n)? } else { braid(family.surface(), n)? };
    let mut ev = Evidence { strength: Strength::Full, notes: Vec::new() };

    let ab: AbelianInvariants = if family.is_pure() {
        let (idx, ab) = pure_abelianization(&p, ctx)?;
        if idx != factorial(n) {
            return Ok(Outcome::compare(format!("pure index {idx}"), format!("pure index {}", factorial(n)), Strength::Full));
        }
        ab
    } else {
        braidforge_core::abelian_invariants(&p)
    };
    let ab_rank = ab.min_generators() as u64;
    // S_n is a non-abelian quotient for n ≥ 3, so the group is not cyclic.
    let g_lo = if !family.is_pure() && n >= 3 { ab_rank.max(2) } else { ab_rank };

    let gens = generating_set(family, n)?;
    let words: Vec<Word> = gens.iter().map(|g| g.word.clone()).collect();
    let generates = if family.is_pure() {
        let mut all_pure = true;
        for w in &words {
            all_pure &= is_pure(&p, w)?;
        }
        all_pure && index(&p, &words, ctx)? == factorial(n)
    } else {
        index(&p, &words, ctx)? == 1
    };
    let g_hi = if generates { gens.len() as u64 } else { u64::MAX };
    let g = Interval { lo: g_lo, hi: g_hi };

    let ng_hi = match normal_generator(family) {
        Some(w) if quotient_order(&p, std::slice::from_ref(&w), ctx)? == 1 => 1,
        _ => g_hi,
    };
    let ng = Interval { lo: ab_rank, hi: ng_hi };

    let mut tg = None;
    let mut ntg = None;
    if expected.tg.is_some() {
        let refs: Vec<&Generator> = gens.iter().collect();
        let torsion_ok = generates && check_torsion(family, &p, n, &refs, ctx, &mut ev)?;
        let tg_hi = if torsion_ok { gens.len() as u64 } else { u64::MAX };
        tg = Some(Interval { lo: g.lo, hi: tg_hi });

        let mut ntg_lo = ng.lo;
        let reps = torsion_representatives(family, n)?;
        if !reps.is_empty() && ntg_lo < 2 {
            let abz = Abelianization::new(&p);
            let one = abz.image(&Word::gen(1));
            let order = abz.invariants().order().unwrap_or(0);
            let mut none_generate = abz.invariants().is_cyclic() && order > 1;
            for r in &reps {
                match multiple_of(&abz, &one, &abz.image(r)) {
                    Some(k) => none_generate &= gcd(k, order) != 1,
                    None => none_generate = false,
                }
            }
            if none_generate {
                ntg_lo = 2;
                ev.weaken("every torsion element is taken to be conjugate to a power of a listed representative");
            }
        }
        let ntg_hi = match normal_torsion_generator(family, n)? {
            Some(x) => {
                let trivial = quotient_order(&p, &[x.word.clone()], ctx)? == 1;
                if trivial && check_torsion(family, &p, n, &[&x], ctx, &mut ev)? {
                    1
                } else {
                    tg_hi
                }
            }
            None => tg_hi,
        };
        ntg = Some(Interval { lo: ntg_lo, hi: ntg_hi });
    }

    let show = |iv: Option<Interval>| match iv {
        None => "-".to_string(),
        Some(Interval { hi: u64::MAX, lo }) => format!("{lo}..?"),
        Some(iv) => iv.to_string(),
    };
    let observed = format!("G={} NG={} TG={} NTG={}", show(Some(g)), show(Some(ng)), show(tg), show(ntg));
    let pairs = [(Some(g), expected.g), (Some(ng), expected.ng), (tg, expected.tg), (ntg, expected.ntg)];
    let mut decided = true;
    let mut consistent = true;
    for (iv, want) in pairs {
        if let (Some(iv), Some(v)) = (iv, want) {
            consistent &= iv.contains(v);
            decided &= iv.lo == iv.hi;
        }
    }
    if consistent && !decided {
        return Err(Halt::Inconclusive(format!("bounds do not meet: {observed}")));
    }
    let mut out = Outcome::compare(observed, expected, ev.strength);
    out.pass = consistent && decided;
    if !ev.notes.is_empty() {
        out.note = Some(ev.notes.join("; "));
    }
    Ok(out)
}
