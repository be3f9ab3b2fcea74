//! Every claim the suites know about, each bound to one check.

use std::fmt;
use std::str::FromStr;

use braidforge_core::abelian::Abelianization;
use braidforge_core::finite::{order4_pure_class_count, pure_elements, pure_order4_class_formula, Conjugation};
use braidforge_core::garside::artin_action_all;
use braidforge_core::presentation::{delta_root, full_twist, garside, pure_generator, y_set};
use braidforge_core::{abelian_invariants, identify, normal_form, GroupLabel, Named, Surface, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::lower_and_upper_bound_check;
use crate::checks::{
    braid, factorial, group, index, is_pure, mcg, multiple_of, pure_abelianization, quotient_order, word, Checked,
    Ctx, Halt, Outcome, Strength,
};
use crate::table::GroupFamily;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Disc,
    Sphere,
    Rp2,
    Mcg,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Disc => "disc",
            Suite::Sphere => "sphere",
            Suite::Rp2 => "rp2",
            Suite::Mcg => "mcg",
            Suite::All => "all",
        }
    }

    pub fn contains(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Suite, String> {
        match s.trim() {
            "disc" => Ok(Suite::Disc),
            "sphere" => Ok(Suite::Sphere),
            "rp2" => Ok(Suite::Rp2),
            "mcg" => Ok(Suite::Mcg),
            "all" => Ok(Suite::All),
            other => Err(format!("unknown suite {other:?}; expected disc, sphere, rp2, mcg or all")),
        }
    }
}

pub type CheckFn = fn(usize, &Ctx) -> Checked;

pub struct ClaimSpec {
    pub id: &'static str,
    pub suite: Suite,
    pub statement: &'static str,
    /// Smallest `n` the statement is about.
    pub min_n: usize,
    /// Largest `n` the statement is about; `None` for all `n ≥ min_n`.
    pub max_n: Option<usize>,
    /// Largest `n` checked; beyond it the claim reports unsupported.
    pub feasible_max: usize,
    pub check: CheckFn,
    /// Whether the check draws from the seeded generator.
    pub randomized: bool,
}

impl ClaimSpec {
    fn seeded(mut self) -> ClaimSpec {
        self.randomized = true;
        self
    }

    pub fn applies(&self, n: usize) -> bool {
        n >= self.min_n && self.max_n.map_or(true, |m| n <= m)
    }

    pub fn run(&self, n: usize, ctx: &Ctx) -> Checked {
        if n > self.feasible_max {
            return Err(Halt::Unsupported(format!("n = {n} is beyond the feasible range (n <= {})", self.feasible_max)));
        }
        (self.check)(n, ctx)
    }
}

const fn claim(
    id: &'static str,
    suite: Suite,
    statement: &'static str,
    min_n: usize,
    max_n: Option<usize>,
    feasible_max: usize,
    check: CheckFn,
) -> ClaimSpec {
    ClaimSpec { id, suite, statement, min_n, max_n, feasible_max, check, randomized: false }
}

pub fn registry() -> Vec<ClaimSpec> {
    use Suite::*;
    vec![
        // disc
        claim("disc-normal-closure-sigma1", Disc, "B_n / <<s1>> is trivial", 2, None, 12, disc_normal_closure),
        claim("disc-abelianization", Disc, "B_n^Ab = Z", 2, None, 16, disc_abelianization),
        claim("disc-delta-power", Disc, "(s1...s_{n-1})^n equals the square of the Garside element", 2, None, 10, disc_delta_power),
        claim("disc-alpha1-root", Disc, "alpha1^(n-1) = full twist in B_n", 2, None, 10, disc_alpha1_root),
        claim("disc-delta-conjugation", Disc, "delta^i s1 delta^-i = s_{i+1} for 1 <= i <= n-2", 3, None, 10, disc_delta_conjugation),
        claim("disc-full-twist-product", Disc, "full twist = prod_i (A_{i,i+1} ... A_{i,n})", 2, None, 8, disc_full_twist_product),
        claim("disc-full-twist-central", Disc, "the full twist commutes with every s_i", 2, None, 10, disc_full_twist_central),
        claim("disc-word-problem-oracle", Disc, "normal form equality agrees with the Artin action on 1000 seeded pairs", 2, None, 6, disc_oracle).seeded(),
        claim("disc-pure-abelianization", Disc, "P_n^Ab = Z^{n(n-1)/2}", 2, None, 7, disc_pure_abelianization),
        claim("invariants-B", Disc, "G, NG, TG, NTG of B_n", 2, None, 7, |n, c| bounds(GroupFamily::Braid(Surface::Disc), n, c)),
        claim("invariants-P", Disc, "G, NG, TG, NTG of P_n", 2, None, 7, |n, c| bounds(GroupFamily::Pure(Surface::Disc), n, c)),
        // sphere
        claim("sphere-finite-orders", Sphere, "|B_2(S2)| = 2 and B_3(S2) is dicyclic of order 12", 2, Some(3), 3, sphere_finite),
        claim("sphere-abelianization", Sphere, "B_n(S2)^Ab = Z_{2(n-1)}", 3, None, 16, sphere_abelianization),
        claim("sphere-abelian-images", Sphere, "alpha0, alpha1, alpha2 map to n-1, n, n-1 in Z_{2(n-1)}", 3, None, 16, sphere_abelian_images),
        claim("sphere-quotient-alpha0", Sphere, "B_n(S2) / <<alpha0>> = Z_{n-1}", 3, None, 9, sphere_quotient_alpha0),
        claim("sphere-quotient-alpha1", Sphere, "|B_n(S2) / <<alpha1>>| = gcd(n, 2)", 3, None, 9, sphere_quotient_alpha1),
        claim("sphere-quotient-alpha2", Sphere, "B_n(S2) / <<alpha2>> = Z_{n-1}", 4, None, 9, sphere_quotient_alpha2),
        claim("sphere-quotient-alpha2-three-strands", Sphere, "B_3(S2) / <<alpha2>> = S3", 3, Some(3), 3, sphere_quotient_alpha2_three),
        claim("sphere-generated-by-alpha0-alpha1", Sphere, "alpha0 and alpha1 generate B_n(S2)", 3, None, 8, sphere_generation),
        claim("sphere-alpha-orders", Sphere, "alpha0, alpha1, alpha2 have orders 2n, 2(n-1), 2(n-2) in B_3(S2)", 3, Some(3), 3, sphere_alpha_orders),
        claim("sphere-unique-involution", Sphere, "the full twist is the only involution of B_3(S2)", 3, Some(3), 3, sphere_unique_involution),
        claim("sphere-pure-abelianization", Sphere, "P_n(S2)^Ab = Z^{n(n-3)/2} + Z2", 3, None, 7, sphere_pure_abelianization),
        claim("sphere-pure-three-strands", Sphere, "|P_3(S2)| = 2", 3, Some(3), 3, sphere_pure_three),
        claim("invariants-BS2", Sphere, "G, NG, TG, NTG of B_n(S2)", 3, None, 7, |n, c| bounds(GroupFamily::Braid(Surface::Sphere), n, c)),
        claim("invariants-PS2", Sphere, "G, NG, TG, NTG of P_n(S2)", 3, None, 7, |n, c| bounds(GroupFamily::Pure(Surface::Sphere), n, c)),
        // projective plane
        claim("rp2-finite-orders", Rp2, "|B_1(RP2)| = 2 and B_2(RP2) = Q16", 1, Some(2), 2, rp2_finite),
        claim("rp2-pure-two-strands", Rp2, "P_2(RP2) = Q8", 2, Some(2), 2, rp2_pure_two),
        claim("rp2-abelianization", Rp2, "B_n(RP2)^Ab = Z2 + Z2", 2, None, 12, rp2_abelianization),
        claim("rp2-quotient-a", Rp2, "B_n(RP2) / <<a>> = Z2", 2, None, 6, |n, c| rp2_quotient(Named::A, false, n, c)),
        claim("rp2-quotient-b", Rp2, "B_n(RP2) / <<b>> = Z2", 2, None, 6, |n, c| rp2_quotient(Named::B, false, n, c)),
        claim("rp2-generated-by-a-b", Rp2, "a and b generate B_n(RP2)", 2, None, 6, rp2_generation),
        claim("rp2-torsion-generating-set", Rp2, "Y generates P_n(RP2): index n! and every element pure", 2, None, 7, rp2_y_set),
        claim("rp2-pure-abelianization", Rp2, "P_n(RP2)^Ab = Z2^n", 2, None, 7, rp2_pure_abelianization),
        claim("rp2-element-orders", Rp2, "a and b have orders 4n and 4(n-1)", 2, None, 6, rp2_element_orders),
        claim("rp2-centralizers", Rp2, "in B_2(RP2) the centralizers of a and b are <a> (order 8) and <b> (order 4)", 2, Some(2), 2, rp2_centralizers),
        claim("rp2-pure-order4-classes", Rp2, "P_n(RP2)-classes of order-4 pure elements number (n-2)!(2n-1)", 2, None, 2, |n, c| rp2_order4_classes(Conjugation::PureSubgroup, n, c)),
        claim("rp2-pure-order4-classes-whole-group", Rp2, "B_n(RP2)-classes of order-4 pure elements number (n-2)!(2n-1)", 2, None, 2, |n, c| rp2_order4_classes(Conjugation::WholeGroup, n, c)),
        claim("invariants-BP2", Rp2, "G, NG, TG, NTG of B_n(RP2)", 2, None, 6, |n, c| bounds(GroupFamily::Braid(Surface::ProjectivePlane), n, c)),
        claim("invariants-PP2", Rp2, "G, NG, TG, NTG of P_n(RP2)", 2, None, 7, |n, c| bounds(GroupFamily::Pure(Surface::ProjectivePlane), n, c)),
        // mapping class groups
        claim("mcg-disc-two-strands", Mcg, "MCG_2(D2) = Z2 with trivial pure part", 2, Some(2), 2, mcg_disc_two),
        claim("mcg-disc-abelianization", Mcg, "MCG_n(D2)^Ab = Z_{n(n-1)}", 2, None, 16, mcg_disc_abelianization),
        claim("mcg-disc-pure-abelianization", Mcg, "(P_n / <full twist>)^Ab has free rank n(n-1)/2 - 1", 3, None, 7, mcg_disc_pure_abelianization),
        claim("mcg-sphere-three-strands", Mcg, "MCG_3(S2) = S3 with alpha0, alpha1, alpha2 of orders 3, 2, 1", 3, Some(3), 3, mcg_sphere_three),
        claim("mcg-sphere-pure-abelianization", Mcg, "pure MCG_n(S2)^Ab = Z^{n(n-3)/2}", 4, None, 7, mcg_sphere_pure_abelianization),
        claim("mcg-rp2-quotient-a", Mcg, "MCG_n(RP2) / <<a>> = Z2", 2, None, 5, |n, c| rp2_quotient(Named::A, true, n, c)),
        claim("mcg-rp2-quotient-b", Mcg, "MCG_n(RP2) / <<b>> = Z2", 2, None, 5, |n, c| rp2_quotient(Named::B, true, n, c)),
        claim("mcg-rp2-element-orders", Mcg, "in MCG_2(RP2), a and b have orders 4 and 2", 2, Some(2), 2, mcg_rp2_orders),
        claim("invariants-MCG-D", Mcg, "G, NG, TG, NTG of MCG_n(D2)", 2, None, 7, |n, c| bounds(GroupFamily::Mcg(Surface::Disc), n, c)),
        claim("invariants-MCG-S2", Mcg, "G, NG, TG, NTG of MCG_n(S2)", 3, None, 7, |n, c| bounds(GroupFamily::Mcg(Surface::Sphere), n, c)),
        claim("invariants-MCG-P2", Mcg, "G, NG, TG, NTG of MCG_n(RP2)", 2, None, 5, |n, c| bounds(GroupFamily::Mcg(Surface::ProjectivePlane), n, c)),
        claim("invariants-PMCG-D", Mcg, "G, NG, TG, NTG of pure MCG_n(D2)", 2, None, 7, |n, c| bounds(GroupFamily::PureMcg(Surface::Disc), n, c)),
        claim("invariants-PMCG-S2", Mcg, "G, NG, TG, NTG of pure MCG_n(S2)", 3, None, 7, |n, c| bounds(GroupFamily::PureMcg(Surface::Sphere), n, c)),
        claim("invariants-PMCG-P2", Mcg, "G, NG, TG, NTG of pure MCG_n(RP2)", 2, None, 7, |n, c| bounds(GroupFamily::PureMcg(Surface::ProjectivePlane), n, c)),
    ]
}

fn bounds(family: GroupFamily, n: usize, ctx: &Ctx) -> Checked {
    lower_and_upper_bound_check(family, n, ctx)
}

fn full(observed: impl fmt::Display, expected: impl fmt::Display) -> Checked {
    Ok(Outcome::compare(observed, expected, Strength::Full))
}

fn braid_eq(u: &Word, v: &Word, n: usize) -> Result<bool, Halt> {
    Ok(normal_form(u, n)? == normal_form(v, n)?)
}

fn identities(pass: usize, total: usize) -> Checked {
    full(format!("{pass}/{total} identities hold"), format!("{total}/{total} identities hold"))
}

fn quotient_label(p: &braidforge_core::Presentation, words: &[Word], ctx: &Ctx) -> Result<GroupLabel, Halt> {
    Ok(identify(&group(&p.add_relators(words)?, ctx)?))
}

fn cyclic(k: usize) -> GroupLabel {
    if k == 1 {
        GroupLabel::Trivial
    } else {
        GroupLabel::Cyclic(k as u64)
    }
}

fn disc_normal_closure(n: usize, ctx: &Ctx) -> Checked {
    full(quotient_order(&braid(Surface::Disc, n)?, &[Word::gen(1)], ctx)?, 1)
}

fn disc_abelianization(n: usize, _: &Ctx) -> Checked {
    full(abelian_invariants(&braid(Surface::Disc, n)?), "Z")
}

fn disc_delta_power(n: usize, _: &Ctx) -> Checked {
    let ok = braid_eq(&delta_root(n).power(n as i64), &garside(n).power(2), n)?;
    identities(ok as usize, 1)
}

fn disc_alpha1_root(n: usize, _: &Ctx) -> Checked {
    let a1 = word(Surface::Disc, Named::Alpha1, n)?;
    identities(braid_eq(&a1.power(n as i64 - 1), &full_twist(n), n)? as usize, 1)
}

fn disc_delta_conjugation(n: usize, _: &Ctx) -> Checked {
    let d = delta_root(n);
    let mut pass = 0;
    for i in 1..=n - 2 {
        pass += braid_eq(&Word::gen(1).conjugate(&d.power(i as i64)), &Word::gen(i + 1), n)? as usize;
    }
    identities(pass, n - 2)
}

fn disc_full_twist_product(n: usize, _: &Ctx) -> Checked {
    let mut prod = Word::empty();
    for i in 1..n {
        for j in i + 1..=n {
            prod = prod.concat(&pure_generator(i, j));
        }
    }
    identities(braid_eq(&prod, &full_twist(n), n)? as usize, 1)
}

fn disc_full_twist_central(n: usize, _: &Ctx) -> Checked {
    let t = full_twist(n);
    let mut pass = 0;
    for i in 1..n {
        let s = Word::gen(i);
        pass += braid_eq(&t.concat(&s), &s.concat(&t), n)? as usize;
    }
    identities(pass, n - 1)
}

pub const ORACLE_PAIRS: usize = 1000;
pub const ORACLE_MAX_LEN: usize = 40;

/// A random word of length at most `max_len` in `σ₁^{±1}, …, σ_{n−1}^{±1}`.
pub fn random_braid_word(rng: &mut impl Rng, n: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::reduced((0..len).map(|_| {
        let g = rng.gen_range(1..n);
        if rng.gen_bool(0.5) {
            braidforge_core::Letter::pos(g)
        } else {
            braidforge_core::Letter::neg(g)
        }
    }))
}

/// Pairs mixing independent words, words differing by an inserted braid
/// relation (equal), and words differing in one letter (usually unequal).
pub fn oracle_pairs(n: usize, seed: u64, count: usize, max_len: usize) -> Vec<(Word, Word)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let p = braidforge_core::artin(n).expect("n >= 2");
    (0..count)
        .map(|k| {
            let u = random_braid_word(&mut rng, n, max_len);
            let v = match k % 3 {
                0 => random_braid_word(&mut rng, n, max_len),
                1 if !p.relators().is_empty() => {
                    let r = &p.relators()[rng.gen_range(0..p.relators().len())];
                    let cut = rng.gen_range(0..=u.len());
                    let (a, b) = u.letters().split_at(cut);
                    Word::reduced(a.iter().copied().chain(r.letters().iter().copied()).chain(b.iter().copied()))
                }
                _ => {
                    let mut letters = u.letters().to_vec();
                    if letters.is_empty() {
                        letters.push(braidforge_core::Letter::pos(1));
                    } else {
                        let at = rng.gen_range(0..letters.len());
                        letters[at] = letters[at].inverse();
                    }
                    Word::reduced(letters)
                }
            };
            (u, v)
        })
        .collect()
}

fn disc_oracle(n: usize, ctx: &Ctx) -> Checked {
    let pairs = oracle_pairs(n, ctx.seed, ORACLE_PAIRS, ORACLE_MAX_LEN);
    let mut agree = 0;
    let mut equal = 0;
    for (u, v) in &pairs {
        let nf = braid_eq(u, v, n)?;
        let action = artin_action_all(u, n)? == artin_action_all(v, n)?;
        agree += (nf == action) as usize;
        equal += nf as usize;
    }
    Ok(Outcome::compare(format!("{agree}/{} agree", pairs.len()), format!("{0}/{0} agree", pairs.len()), Strength::Full)
        .with_note(format!("{equal} pairs equal in B_{n}")))
}

fn disc_pure_abelianization(n: usize, ctx: &Ctx) -> Checked {
    let (_, ab) = pure_abelianization(&braid(Surface::Disc, n)?, ctx)?;
    full(ab, free_abelian(n * (n - 1) / 2))
}

fn free_abelian(rank: usize) -> braidforge_core::AbelianInvariants {
    braidforge_core::AbelianInvariants { torsion: Vec::new(), free_rank: rank }
}

fn sphere_finite(n: usize, ctx: &Ctx) -> Checked {
    let g = group(&braid(Surface::Sphere, n)?, ctx)?;
    let (obs, exp) = match n {
        2 => (g.order().to_string(), "2".to_string()),
        _ => (format!("order {} {}", g.order(), identify(&g)), "order 12 Dic12".to_string()),
    };
    full(obs, exp)
}

fn sphere_abelianization(n: usize, _: &Ctx) -> Checked {
    full(abelian_invariants(&braid(Surface::Sphere, n)?), cyclic_invariants(2 * (n - 1)))
}

fn cyclic_invariants(k: usize) -> braidforge_core::AbelianInvariants {
    braidforge_core::AbelianInvariants { torsion: if k > 1 { vec![k as u64] } else { Vec::new() }, free_rank: 0 }
}

fn sphere_abelian_images(n: usize, _: &Ctx) -> Checked {
    let p = braid(Surface::Sphere, n)?;
    let ab = Abelianization::new(&p);
    let one = ab.image(&Word::gen(1));
    let mut obs = Vec::new();
    for name in [Named::Alpha0, Named::Alpha1, Named::Alpha2] {
        let x = ab.image(&word(Surface::Sphere, name, n)?);
        obs.push(multiple_of(&ab, &one, &x).map_or("?".to_string(), |k| k.to_string()));
    }
    full(obs.join(","), format!("{},{},{}", n - 1, n % (2 * (n - 1)), n - 1))
}

fn sphere_quotient(name: Named, n: usize, ctx: &Ctx) -> Result<GroupLabel, Halt> {
    quotient_label(&braid(Surface::Sphere, n)?, &[word(Surface::Sphere, name, n)?], ctx)
}

fn sphere_quotient_alpha0(n: usize, ctx: &Ctx) -> Checked {
    full(sphere_quotient(Named::Alpha0, n, ctx)?, cyclic(n - 1))
}

fn sphere_quotient_alpha1(n: usize, ctx: &Ctx) -> Checked {
    let p = braid(Surface::Sphere, n)?;
    full(quotient_order(&p, &[word(Surface::Sphere, Named::Alpha1, n)?], ctx)?, if n % 2 == 0 { 2 } else { 1 })
}

fn sphere_quotient_alpha2(n: usize, ctx: &Ctx) -> Checked {
    full(sphere_quotient(Named::Alpha2, n, ctx)?, cyclic(n - 1))
}

fn sphere_quotient_alpha2_three(n: usize, ctx: &Ctx) -> Checked {
    full(sphere_quotient(Named::Alpha2, n, ctx)?, GroupLabel::S3)
}

fn sphere_generation(n: usize, ctx: &Ctx) -> Checked {
    let gens = [word(Surface::Sphere, Named::Alpha0, n)?, word(Surface::Sphere, Named::Alpha1, n)?];
    full(index(&braid(Surface::Sphere, n)?, &gens, ctx)?, 1)
}

fn sphere_alpha_orders(n: usize, ctx: &Ctx) -> Checked {
    let g = group(&braid(Surface::Sphere, n)?, ctx)?;
    let mut obs = Vec::new();
    for name in [Named::Alpha0, Named::Alpha1, Named::Alpha2] {
        obs.push(g.element_order(g.element(&word(Surface::Sphere, name, n)?)).to_string());
    }
    full(obs.join(","), format!("{},{},{}", 2 * n, 2 * (n - 1), 2 * (n - 2)))
}

fn sphere_unique_involution(n: usize, ctx: &Ctx) -> Checked {
    let g = group(&braid(Surface::Sphere, n)?, ctx)?;
    let involutions: Vec<usize> = g.elements().filter(|&x| g.element_order(x) == 2).collect();
    let twist = g.element(&full_twist(n));
    let obs = format!("{} involution(s), full twist among them: {}", involutions.len(), involutions.contains(&twist));
    full(obs, "1 involution(s), full twist among them: true")
}

fn sphere_pure_abelianization(n: usize, ctx: &Ctx) -> Checked {
    let (_, ab) = pure_abelianization(&braid(Surface::Sphere, n)?, ctx)?;
    let exp = braidforge_core::AbelianInvariants { torsion: vec![2], free_rank: n * (n - 3) / 2 };
    full(ab, exp)
}

fn sphere_pure_three(n: usize, ctx: &Ctx) -> Checked {
    let p = braid(Surface::Sphere, n)?;
    let g = group(&p, ctx)?;
    full(pure_elements(&g, &p)?.len(), 2)
}

fn rp2_finite(n: usize, ctx: &Ctx) -> Checked {
    let g = group(&braid(Surface::ProjectivePlane, n)?, ctx)?;
    match n {
        1 => full(g.order(), 2),
        _ => full(format!("order {} {}", g.order(), identify(&g)), "order 16 Q16"),
    }
}

fn rp2_pure_two(n: usize, ctx: &Ctx) -> Checked {
    let p = braid(Surface::ProjectivePlane, n)?;
    let g = group(&p, ctx)?;
    let pure = g.restrict(&pure_elements(&g, &p)?)?;
    full(identify(&pure), GroupLabel::Q8)
}

fn rp2_abelianization(n: usize, _: &Ctx) -> Checked {
    let exp = braidforge_core::AbelianInvariants { torsion: vec![2, 2], free_rank: 0 };
    full(abelian_invariants(&braid(Surface::ProjectivePlane, n)?), exp)
}

fn rp2_quotient(name: Named, mapping_class: bool, n: usize, ctx: &Ctx) -> Checked {
    let s = Surface::ProjectivePlane;
    let p = if mapping_class { mcg(s, n)? } else { braid(s, n)? };
    full(quotient_label(&p, &[word(s, name, n)?], ctx)?, GroupLabel::Cyclic(2))
}

fn rp2_generation(n: usize, ctx: &Ctx) -> Checked {
    let s = Surface::ProjectivePlane;
    full(index(&braid(s, n)?, &[word(s, Named::A, n)?, word(s, Named::B, n)?], ctx)?, 1)
}

fn rp2_y_set(n: usize, ctx: &Ctx) -> Checked {
    let p = braid(Surface::ProjectivePlane, n)?;
    let y = y_set(n)?;
    let mut impure = 0;
    for w in &y {
        impure += !is_pure(&p, w)? as usize;
    }
    let obs = format!("index {}, {} impure of {}", index(&p, &y, ctx)?, impure, y.len());
    full(obs, format!("index {}, 0 impure of {}", factorial(n), n))
}

fn rp2_pure_abelianization(n: usize, ctx: &Ctx) -> Checked {
    let (_, ab) = pure_abelianization(&braid(Surface::ProjectivePlane, n)?, ctx)?;
    full(ab, braidforge_core::AbelianInvariants { torsion: vec![2; n], free_rank: 0 })
}

/// Exact where the group is finite. Otherwise the claimed power must be pure
/// with trivial abelian image, and a multiple of the orders in the permutation
/// and abelian quotients.
fn rp2_element_orders(n: usize, ctx: &Ctx) -> Checked {
    let s = Surface::ProjectivePlane;
    let p = braid(s, n)?;
    let (a, b) = (word(s, Named::A, n)?, word(s, Named::B, n)?);
    let expected = format!("{},{}", 4 * n, 4 * (n - 1));
    if n == 2 {
        let g = group(&p, ctx)?;
        let obs = format!("{},{}", g.element_order(g.element(&a)), g.element_order(g.element(&b)));
        return full(obs, expected);
    }
    let ab = Abelianization::new(&p);
    let images = p.permutation_images()?;
    let mut obs = Vec::new();
    for (w, k) in [(&a, 4 * n), (&b, 4 * (n - 1))] {
        let killed = is_pure(&p, &w.power(k as i64))? && ab.image(&w.power(k as i64)).is_zero();
        let perm_order = braidforge_core::evaluate_perm(w, &images)?.order();
        let ab_order = ab.element_order(&ab.image(w)).unwrap_or(0);
        let divides = (k as u64) % perm_order == 0 && ab_order != 0 && (k as u64) % ab_order == 0;
        obs.push(if killed && divides { k.to_string() } else { format!("not {k}") });
    }
    Ok(Outcome::compare(obs.join(","), expected, Strength::Necessary)
        .with_note("infinite group: only permutation and abelian images of the claimed orders are checked"))
}

fn rp2_centralizers(n: usize, ctx: &Ctx) -> Checked {
    let s = Surface::ProjectivePlane;
    let g = group(&braid(s, n)?, ctx)?;
    let mut obs = Vec::new();
    for name in [Named::A, Named::B] {
        let x = g.element(&word(s, name, n)?);
        let mut c = g.centralizer(x);
        let mut cyc = g.subgroup(&[x]);
        c.sort_unstable();
        cyc.sort_unstable();
        obs.push(format!("|C| = {}, C = <x>: {}", c.len(), c == cyc));
    }
    full(obs.join("; "), "|C| = 8, C = <x>: true; |C| = 4, C = <x>: true")
}

fn rp2_order4_classes(conj: Conjugation, n: usize, ctx: &Ctx) -> Checked {
    let count = order4_pure_class_count(n, conj, ctx.limits)?;
    let formula = pure_order4_class_formula(n as u64).ok_or_else(|| Halt::Unsupported("formula overflow".into()))?;
    full(count, formula)
}

fn mcg_disc_two(n: usize, ctx: &Ctx) -> Checked {
    let p = mcg(Surface::Disc, n)?;
    let g = group(&p, ctx)?;
    full(format!("{}, pure part of order {}", identify(&g), pure_elements(&g, &p)?.len()), "Z2, pure part of order 1")
}

fn mcg_disc_abelianization(n: usize, _: &Ctx) -> Checked {
    full(abelian_invariants(&mcg(Surface::Disc, n)?), cyclic_invariants(n * (n - 1)))
}

fn mcg_disc_pure_abelianization(n: usize, ctx: &Ctx) -> Checked {
    let (_, ab) = pure_abelianization(&mcg(Surface::Disc, n)?, ctx)?;
    full(format!("free rank {}", ab.free_rank), format!("free rank {}", n * (n - 1) / 2 - 1))
}

fn mcg_sphere_three(n: usize, ctx: &Ctx) -> Checked {
    let g = group(&mcg(Surface::Sphere, n)?, ctx)?;
    let mut orders = Vec::new();
    for name in [Named::Alpha0, Named::Alpha1, Named::Alpha2] {
        orders.push(g.element_order(g.element(&word(Surface::Sphere, name, n)?)).to_string());
    }
    full(format!("order {} {}, orders {}", g.order(), identify(&g), orders.join(",")), "order 6 S3, orders 3,2,1")
}

fn mcg_sphere_pure_abelianization(n: usize, ctx: &Ctx) -> Checked {
    let (_, ab) = pure_abelianization(&mcg(Surface::Sphere, n)?, ctx)?;
    full(ab, free_abelian(n * (n - 3) / 2))
}

fn mcg_rp2_orders(n: usize, ctx: &Ctx) -> Checked {
    let s = Surface::ProjectivePlane;
    let g = group(&mcg(s, n)?, ctx)?;
    let a = g.element_order(g.element(&word(s, Named::A, n)?));
    let b = g.element_order(g.element(&word(s, Named::B, n)?));
    full(format!("{a},{b}"), "4,2")
}
