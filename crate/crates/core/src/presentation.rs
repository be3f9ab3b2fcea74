//! Braid group presentations and the named elements built from them.
//!
//! Generators are ordered with all `s1..s{n-1}` first, then `r1..rn` for the
//! projective plane. A relation `u = v` is stored as the cyclically reduced
//! relator `u v⁻¹`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::word::{Alphabet, Letter, Word};

/// Surface whose braid group a presentation describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Surface {
    Disc,
    Sphere,
    ProjectivePlane,
}

impl Surface {
    pub fn code(self) -> &'static str {
        match self {
            Surface::Disc => "D2",
            Surface::Sphere => "S2",
            Surface::ProjectivePlane => "RP2",
        }
    }
}

/// Which family a presentation belongs to, if any.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `B_n(M)`.
    Braid { surface: Surface, n: usize },
    /// `B_n(M) / ⟨Δ²⟩`.
    MappingClass { surface: Surface, n: usize },
}

impl Family {
    pub fn surface(self) -> Surface {
        match self {
            Family::Braid { surface, .. } | Family::MappingClass { surface, .. } => surface,
        }
    }

    pub fn strands(self) -> usize {
        match self {
            Family::Braid { n, .. } | Family::MappingClass { n, .. } => n,
        }
    }

    fn label(self) -> String {
        match self {
            Family::Braid { surface: Surface::Disc, n } => format!("B({n})"),
            Family::Braid { surface, n } => format!("B({},{n})", surface.code()),
            Family::MappingClass { surface, n } => format!("MCG({},{n})", surface.code()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    alphabet: Alphabet,
    relators: Vec<Word>,
    label: String,
    family: Option<Family>,
}

fn canonical_relator(w: &Word) -> Word {
    w.cyclically_reduced()
}

impl Presentation {
    /// A presentation from explicit data. Relators are cyclically reduced and
    /// empty relators dropped.
    pub fn new(alphabet: Alphabet, relators: Vec<Word>, label: impl Into<String>) -> Result<Presentation> {
        for r in &relators {
            alphabet.check(r)?;
        }
        let relators = relators.iter().map(canonical_relator).filter(|r| !r.is_empty()).collect();
        Ok(Presentation { alphabet, relators, label: label.into(), family: None })
    }

    /// Parses `gens: s1 s2 ; rels: s1 s2 s1 s2^-1 s1^-1 s2^-1 , s1^2`.
    pub fn parse(text: &str) -> Result<Presentation> {
        let (gens_part, rels_part) = text
            .split_once(';')
            .ok_or_else(|| Error::Parse("expected `gens: ... ; rels: ...`".into()))?;
        let gens = gens_part
            .trim()
            .strip_prefix("gens:")
            .ok_or_else(|| Error::Parse("missing `gens:`".into()))?;
        let rels = rels_part
            .trim()
            .strip_prefix("rels:")
            .ok_or_else(|| Error::Parse("missing `rels:`".into()))?;
        let alphabet = Alphabet::new(gens.split_whitespace())?;
        let mut relators = Vec::new();
        for r in rels.split(',') {
            if !r.trim().is_empty() {
                relators.push(alphabet.parse_word(r)?);
            }
        }
        Presentation::new(alphabet, relators, text.trim().to_string())
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn family(&self) -> Option<Family> {
        self.family
    }

    pub fn num_generators(&self) -> usize {
        self.alphabet.arity()
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        self.alphabet.parse_word(text)
    }

    pub fn format_word(&self, w: &Word) -> String {
        self.alphabet.format_word(w)
    }

    /// Quotient by the normal closure of `words`. The input is left untouched.
    pub fn add_relators(&self, words: &[Word]) -> Result<Presentation> {
        for w in words {
            self.alphabet.check(w)?;
        }
        if words.is_empty() {
            return Ok(self.clone());
        }
        let mut relators = self.relators.clone();
        relators.extend(words.iter().map(canonical_relator).filter(|r| !r.is_empty()));
        let added: Vec<String> = words.iter().map(|w| self.alphabet.format_word(w)).collect();
        Ok(Presentation {
            alphabet: self.alphabet.clone(),
            relators,
            label: format!("{}/<<{}>>", self.label, added.join(", ")),
            family: None,
        })
    }

    /// The mapping class group `B_n(M)/⟨Δ²⟩`.
    pub fn central_quotient(&self, n: usize) -> Result<Presentation> {
        let surface = match self.family {
            Some(Family::Braid { surface, n: m }) if m == n => surface,
            _ => {
                return Err(Error::WrongFamily(format!(
                    "central quotient needs a braid presentation on {n} strands, got {}",
                    self.label
                )))
            }
        };
        let mut p = self.add_relators(&[full_twist(n)])?;
        let family = Family::MappingClass { surface, n };
        p.family = Some(family);
        p.label = family.label();
        Ok(p)
    }

    /// Images of the generators under `B_n(M) → S_n`: `s_i ↦ (i i+1)`, `r_j ↦ 1`.
    pub fn permutation_images(&self) -> Result<Vec<Permutation>> {
        let f = self
            .family
            .ok_or_else(|| Error::WrongFamily(format!("{} is not a braid family", self.label)))?;
        let n = f.strands();
        let mut images: Vec<Permutation> =
            (1..n).map(|i| Permutation::transposition(n, i, i + 1)).collect();
        if f.surface() == Surface::ProjectivePlane {
            images.extend((0..n).map(|_| Permutation::identity(n)));
        }
        Ok(images)
    }

    /// Generators of the pure subgroup: all `A_{i,j}`, then `r1..rn` for RP².
    pub fn pure_subgroup_generators(&self) -> Result<Vec<Word>> {
        let f = self
            .family
            .ok_or_else(|| Error::WrongFamily(format!("{} is not a braid family", self.label)))?;
        let n = f.strands();
        let mut gens = pure_generators(n);
        if f.surface() == Surface::ProjectivePlane {
            gens.extend((1..=n).map(|k| Word::gen(n - 1 + k)));
        }
        Ok(gens)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.alphabet.format_word(r)).collect();
        write!(f, "gens: {} ; rels: {}", self.alphabet, rels.join(" , "))
    }
}

fn sigma_names(n: usize) -> impl Iterator<Item = String> {
    (1..n).map(|i| format!("s{i}"))
}

fn check_strands(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::InvalidParameter(format!("need n >= {min}, got {n}")));
    }
    Ok(())
}

fn s(i: usize) -> Letter {
    Letter::pos(i)
}

fn si(i: usize) -> Letter {
    Letter::neg(i)
}

fn artin_relators(n: usize) -> Vec<Word> {
    let mut rels = Vec::new();
    for i in 1..n {
        for j in i + 2..n {
            rels.push(Word::reduced([s(i), s(j), si(i), si(j)]));
        }
    }
    for i in 1..n.saturating_sub(1) {
        rels.push(Word::reduced([s(i), s(i + 1), s(i), si(i + 1), si(i), si(i + 1)]));
    }
    rels
}

/// `σ₁⋯σ_{n−2}σ²_{n−1}σ_{n−2}⋯σ₁`.
fn surface_word(n: usize) -> Word {
    let up: Vec<Letter> = (1..n).map(s).collect();
    let down: Vec<Letter> = (1..n).rev().map(s).collect();
    Word::reduced(up.into_iter().chain(down))
}

fn with_family(alphabet: Alphabet, relators: Vec<Word>, family: Family) -> Presentation {
    let relators = relators.iter().map(canonical_relator).filter(|r| !r.is_empty()).collect();
    Presentation { alphabet, relators, label: family.label(), family: Some(family) }
}

/// Artin presentation of `B_n`.
pub fn artin(n: usize) -> Result<Presentation> {
    check_strands(n, 2)?;
    let alphabet = Alphabet::new(sigma_names(n))?;
    Ok(with_family(alphabet, artin_relators(n), Family::Braid { surface: Surface::Disc, n }))
}

/// `B_n(S²)`: Artin relations plus the surface relation.
pub fn sphere(n: usize) -> Result<Presentation> {
    check_strands(n, 2)?;
    let alphabet = Alphabet::new(sigma_names(n))?;
    let mut rels = artin_relators(n);
    rels.push(surface_word(n));
    Ok(with_family(alphabet, rels, Family::Braid { surface: Surface::Sphere, n }))
}

/// `B_n(RP²)` on `s1..s{n-1}, r1..rn`.
pub fn projective_plane(n: usize) -> Result<Presentation> {
    check_strands(n, 1)?;
    let alphabet = Alphabet::new(sigma_names(n).chain((1..=n).map(|j| format!("r{j}"))))?;
    let r = |j: usize| Letter::pos(n - 1 + j);
    let ri = |j: usize| Letter::neg(n - 1 + j);
    let mut rels = artin_relators(n);
    // σ_i ρ_j = ρ_j σ_i for j ∉ {i, i+1}
    for i in 1..n {
        for j in 1..=n {
            if j != i && j != i + 1 {
                rels.push(Word::reduced([s(i), r(j), si(i), ri(j)]));
            }
        }
    }
    // ρ_{i+1} = σ_i⁻¹ ρ_i σ_i⁻¹
    for i in 1..n {
        rels.push(Word::reduced([r(i + 1), s(i), ri(i), s(i)]));
    }
    // ρ_{i+1}⁻¹ ρ_i⁻¹ ρ_{i+1} ρ_i = σ_i²
    for i in 1..n {
        rels.push(Word::reduced([ri(i + 1), ri(i), r(i + 1), r(i), si(i), si(i)]));
    }
    // ρ_1² = σ₁⋯σ_{n−2}σ²_{n−1}σ_{n−2}⋯σ₁
    let lhs = Word::reduced([r(1), r(1)]);
    rels.push(lhs.concat(&surface_word(n).inverse()));
    Ok(with_family(alphabet, rels, Family::Braid { surface: Surface::ProjectivePlane, n }))
}

/// Builds a family presentation from a `B:n`-style code.
pub fn family_presentation(family: Family) -> Result<Presentation> {
    match family {
        Family::Braid { surface: Surface::Disc, n } => artin(n),
        Family::Braid { surface: Surface::Sphere, n } => sphere(n),
        Family::Braid { surface: Surface::ProjectivePlane, n } => projective_plane(n),
        Family::MappingClass { surface, n } => {
            family_presentation(Family::Braid { surface, n })?.central_quotient(n)
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// `B:n`, `BS2:n`, `BP2:n`, `MCG-D:n`, `MCG-S2:n`, `MCG-P2:n`.
    fn from_str(s: &str) -> Result<Family> {
        let (code, n) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected FAMILY:n, got {s:?}")))?;
        let n: usize = n.trim().parse().map_err(|_| Error::Parse(format!("bad strand count in {s:?}")))?;
        let family = match code.trim() {
            "B" => Family::Braid { surface: Surface::Disc, n },
            "BS2" => Family::Braid { surface: Surface::Sphere, n },
            "BP2" => Family::Braid { surface: Surface::ProjectivePlane, n },
            "MCG-D" => Family::MappingClass { surface: Surface::Disc, n },
            "MCG-S2" => Family::MappingClass { surface: Surface::Sphere, n },
            "MCG-P2" => Family::MappingClass { surface: Surface::ProjectivePlane, n },
            other => return Err(Error::Parse(format!("unknown family {other:?}"))),
        };
        Ok(family)
    }
}

/// Elements with a fixed meaning in the braid families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Named {
    Alpha0,
    Alpha1,
    Alpha2,
    /// Half twist Δ.
    Garside,
    /// Δ² = (σ₁⋯σ_{n−1})ⁿ.
    FullTwist,
    /// `a = ρ_n σ_{n−1}⋯σ₁`.
    A,
    /// `b = ρ_{n−1} σ_{n−2}⋯σ₁`.
    B,
    /// `A = aⁿ`.
    ACap,
    /// `B = b^{n−1}`.
    BCap,
    /// Pure braid generator `A_{i,j}`.
    Aij(usize, usize),
    Rho(usize),
    /// `a^{−j} b^{n−1} a^{j}`, `0 ≤ j ≤ n−2`.
    Y(usize),
}

impl FromStr for Named {
    type Err = Error;

    fn from_str(s: &str) -> Result<Named> {
        let key = s.trim();
        let parse_args = |body: &str| -> Result<Vec<usize>> {
            body.split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad index in {s:?}"))))
                .collect()
        };
        let named = match key {
            "alpha0" => Named::Alpha0,
            "alpha1" => Named::Alpha1,
            "alpha2" => Named::Alpha2,
            "garside" | "delta" => Named::Garside,
            "full_twist" | "delta2" => Named::FullTwist,
            "a" => Named::A,
            "b" => Named::B,
            "A_cap" | "A" => Named::ACap,
            "B_cap" | "B" => Named::BCap,
            _ => {
                let (head, rest) = key
                    .split_once('(')
                    .ok_or_else(|| Error::Parse(format!("unknown element {s:?}")))?;
                let body = rest
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in {s:?}")))?;
                let args = parse_args(body)?;
                match (head, args.as_slice()) {
                    ("a_ij" | "A_ij", [i, j]) => Named::Aij(*i, *j),
                    ("rho", [k]) => Named::Rho(*k),
                    ("Y" | "y", [j]) => Named::Y(*j),
                    _ => return Err(Error::Parse(format!("unknown element {s:?}"))),
                }
            }
        };
        Ok(named)
    }
}

fn sigma_run(range: impl Iterator<Item = usize>) -> Word {
    Word::reduced(range.map(s))
}

/// `σ₁σ₂⋯σ_{n−1}`.
pub fn delta_root(n: usize) -> Word {
    sigma_run(1..n)
}

/// `Δ² = (σ₁⋯σ_{n−1})ⁿ`.
pub fn full_twist(n: usize) -> Word {
    delta_root(n).power(n as i64)
}

/// Half twist `(σ₁⋯σ_{n−1})(σ₁⋯σ_{n−2})⋯(σ₁σ₂)σ₁`.
pub fn garside(n: usize) -> Word {
    let mut letters = Vec::new();
    for k in (1..n).rev() {
        letters.extend((1..=k).map(s));
    }
    Word::reduced(letters)
}

/// Pure braid generator `(σ_{j−1}⋯σ_{i+1}) σ_i² (σ_{j−1}⋯σ_{i+1})⁻¹`.
pub fn pure_generator(i: usize, j: usize) -> Word {
    let c = sigma_run((i + 1..j).rev());
    Word::reduced([s(i), s(i)]).conjugate(&c)
}

/// All `A_{i,j}` for `1 ≤ i < j ≤ n`, ordered by `(i, j)`.
pub fn pure_generators(n: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for i in 1..n {
        for j in i + 1..=n {
            out.push(pure_generator(i, j));
        }
    }
    out
}

/// The word for `name` in the given surface's braid group on `n` strands.
pub fn named_word(surface: Surface, name: Named, n: usize) -> Result<Word> {
    let bad = |msg: String| Err(Error::InvalidParameter(msg));
    let rp2_only = |what: &str| -> Result<()> {
        if surface != Surface::ProjectivePlane {
            return Err(Error::WrongFamily(format!("{what} only exists in the projective plane family")));
        }
        Ok(())
    };
    let rho = |k: usize| Word::gen(n - 1 + k);
    match name {
        Named::Alpha0 => {
            check_strands(n, 2)?;
            Ok(delta_root(n))
        }
        Named::Alpha1 => {
            check_strands(n, 2)?;
            Ok(sigma_run(1..n).concat(&Word::gen(n - 1)))
        }
        Named::Alpha2 => {
            check_strands(n, 3)?;
            Ok(sigma_run(1..n - 1).concat(&Word::gen(n - 2)))
        }
        Named::Garside => {
            check_strands(n, 2)?;
            Ok(garside(n))
        }
        Named::FullTwist => {
            check_strands(n, 2)?;
            Ok(full_twist(n))
        }
        Named::A => {
            rp2_only("a")?;
            check_strands(n, 2)?;
            Ok(rho(n).concat(&sigma_run((1..n).rev())))
        }
        Named::B => {
            rp2_only("b")?;
            check_strands(n, 2)?;
            Ok(rho(n - 1).concat(&sigma_run((1..n - 1).rev())))
        }
        Named::ACap => Ok(named_word(surface, Named::A, n)?.power(n as i64)),
        Named::BCap => Ok(named_word(surface, Named::B, n)?.power(n as i64 - 1)),
        Named::Aij(i, j) => {
            if !(1 <= i && i < j && j <= n) {
                return bad(format!("A_{{{i},{j}}} needs 1 <= i < j <= {n}"));
            }
            Ok(pure_generator(i, j))
        }
        Named::Rho(k) => {
            rp2_only("rho")?;
            if !(1..=n).contains(&k) {
                return bad(format!("rho({k}) needs 1 <= k <= {n}"));
            }
            Ok(rho(k))
        }
        Named::Y(j) => {
            rp2_only("Y")?;
            check_strands(n, 2)?;
            if j > n - 2 {
                return bad(format!("Y({j}) needs 0 <= j <= {}", n - 2));
            }
            let a = named_word(surface, Named::A, n)?;
            let bcap = named_word(surface, Named::BCap, n)?;
            Ok(bcap.conjugate(&a.power(-(j as i64))))
        }
    }
}

/// The torsion generating set `{aⁿ, b^{n−1}, a⁻¹b^{n−1}a, …, a^{−(n−2)}b^{n−1}a^{n−2}}`.
pub fn y_set(n: usize) -> Result<Vec<Word>> {
    let mut out = vec![named_word(Surface::ProjectivePlane, Named::ACap, n)?];
    for j in 0..=n.saturating_sub(2) {
        out.push(named_word(Surface::ProjectivePlane, Named::Y(j), n)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::evaluate_perm;

    #[test]
    fn artin_shapes() {
        let p = artin(2).unwrap();
        assert_eq!(p.num_generators(), 1);
        assert!(p.relators().is_empty());
        let p = artin(3).unwrap();
        assert_eq!(p.relators(), &[Word::from_signed(&[1, 2, 1, -2, -1, -2])]);
        let p = artin(4).unwrap();
        assert_eq!(p.num_generators(), 3);
        assert_eq!(p.relators().len(), 3);
        assert!(artin(1).is_err());
    }

    #[test]
    fn sphere_relators() {
        assert_eq!(sphere(2).unwrap().relators(), &[Word::from_signed(&[1, 1])]);
        let p = sphere(3).unwrap();
        assert_eq!(p.relators().len(), 2);
        assert_eq!(p.relators()[1], Word::from_signed(&[1, 2, 2, 1]));
    }

    #[test]
    fn projective_plane_shapes() {
        let p = projective_plane(1).unwrap();
        assert_eq!(p.alphabet().names(), &["r1".to_string()]);
        assert_eq!(p.relators(), &[Word::from_signed(&[1, 1])]);
        // (i) 1 + (ii) 2 + (iii) 2 + (iv) 2 + (v) 1
        assert_eq!(projective_plane(3).unwrap().relators().len(), 8);
        assert_eq!(projective_plane(3).unwrap().num_generators(), 5);
    }

    #[test]
    fn named_word_examples() {
        let ab = sphere(4).unwrap();
        assert_eq!(ab.format_word(&named_word(Surface::Sphere, Named::Alpha0, 4).unwrap()), "s1 s2 s3");
        assert_eq!(named_word(Surface::Disc, Named::Garside, 3).unwrap(), Word::from_signed(&[1, 2, 1]));
        assert_eq!(
            named_word(Surface::Disc, Named::Aij(1, 3), 4).unwrap(),
            Word::from_signed(&[2, 1, 1, -2])
        );
        assert!(matches!(named_word(Surface::Sphere, Named::Rho(1), 3), Err(Error::WrongFamily(_))));
        assert!(named_word(Surface::Disc, Named::Aij(3, 3), 4).is_err());
        assert!(named_word(Surface::Sphere, Named::Alpha2, 2).is_err());
    }

    #[test]
    fn rp2_named_words() {
        let p = projective_plane(3).unwrap();
        let a = named_word(Surface::ProjectivePlane, Named::A, 3).unwrap();
        let b = named_word(Surface::ProjectivePlane, Named::B, 3).unwrap();
        assert_eq!(p.format_word(&a), "r3 s2 s1");
        assert_eq!(p.format_word(&b), "r2 s1");
        assert_eq!(y_set(3).unwrap().len(), 3);
    }

    #[test]
    fn full_twist_is_power_of_alpha0() {
        for n in 2..7 {
            let a0 = named_word(Surface::Disc, Named::Alpha0, n).unwrap();
            assert_eq!(named_word(Surface::Disc, Named::FullTwist, n).unwrap(), a0.power(n as i64));
        }
    }

    #[test]
    fn quotients_do_not_mutate() {
        let p = sphere(4).unwrap();
        let before = p.clone();
        let q = p.add_relators(&[Word::gen(1)]).unwrap();
        assert_eq!(p, before);
        assert_eq!(q.relators().len(), p.relators().len() + 1);
        assert_eq!(p.add_relators(&[]).unwrap(), p);
        assert!(p.add_relators(&[Word::gen(9)]).is_err());
        let m = artin(2).unwrap().central_quotient(2).unwrap();
        assert_eq!(m.relators(), &[Word::from_signed(&[1, 1])]);
        assert_eq!(m.label(), "MCG(D2,2)");
        assert!(q.central_quotient(4).is_err());
    }

    #[test]
    fn relators_are_pure() {
        for n in 2..7 {
            for p in [artin(n).unwrap(), sphere(n).unwrap(), projective_plane(n).unwrap()] {
                let images = p.permutation_images().unwrap();
                for r in p.relators() {
                    assert!(evaluate_perm(r, &images).unwrap().is_identity(), "{} in {}", p.format_word(r), p.label());
                }
            }
        }
    }

    #[test]
    fn parse_dsl() {
        let p = Presentation::parse("gens: s1 s2 ; rels: s1 s2 s1 s2^-1 s1^-1 s2^-1 , s1^2").unwrap();
        assert_eq!(p.num_generators(), 2);
        assert_eq!(p.relators().len(), 2);
        assert!(Presentation::parse("s1 s2").is_err());
        assert!(Presentation::parse("gens: a ; rels: b").is_err());
    }

    #[test]
    fn family_codes() {
        assert_eq!("BS2:5".parse::<Family>().unwrap(), Family::Braid { surface: Surface::Sphere, n: 5 });
        assert_eq!(
            "MCG-P2:3".parse::<Family>().unwrap(),
            Family::MappingClass { surface: Surface::ProjectivePlane, n: 3 }
        );
        assert!("X:3".parse::<Family>().is_err());
    }
}
