//! Finite groups from complete coset tables of the trivial subgroup.
//!
//! Elements are coset numbers, 0 is the identity, and products are table
//! lookups in the right regular representation.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use crate::abelian::AbelianInvariants;
use crate::coset::{enumerate, CosetTable, EnumLimits};
use crate::error::{Error, Result};
use crate::perm::evaluate_perm;
use crate::presentation::{named_word, projective_plane, Named, Presentation, Surface};
use crate::schreier::schreier_transversal;
use crate::word::{Letter, Word};

/// Groups above this order are not concretized; the table is quadratic.
pub const MAX_CONCRETE_ORDER: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupTable {
    order: usize,
    mult: Vec<u32>,
    inv: Vec<u32>,
    gen_images: Vec<usize>,
    words: Vec<Word>,
}

pub fn concretize(t: &CosetTable) -> Result<FiniteGroupTable> {
    if !t.subgroup_gens().iter().all(Word::is_empty) {
        return Err(Error::InvalidParameter("concretize needs the trivial-subgroup table".into()));
    }
    let order = t.n_cosets();
    if order > MAX_CONCRETE_ORDER {
        return Err(Error::Unsupported(format!("group of order {order} is too large to tabulate")));
    }
    let tr = schreier_transversal(t);
    let mut mult = vec![0u32; order * order];
    // Column b of the table: a ↦ a·b, built along the transversal tree.
    for a in 0..order {
        mult[a * order] = a as u32;
    }
    for b in 1..order {
        let (parent, col) = tr.parent(b).expect("tree edge");
        let l = Letter::from_column(col);
        for a in 0..order {
            let ap = mult[a * order + parent] as usize;
            mult[a * order + b] = t.act(ap, l) as u32;
        }
    }
    let mut inv = vec![0u32; order];
    for a in 0..order {
        let b = (0..order).find(|&b| mult[a * order + b] == 0).expect("inverse");
        inv[a] = b as u32;
    }
    let gen_images = (1..=t.n_gens()).map(|g| t.act(0, Letter::pos(g))).collect();
    Ok(FiniteGroupTable { order, mult, inv, gen_images, words: tr.representatives().to_vec() })
}

/// Enumerates and tabulates the group of `p`. `Ok(None)` when the coset limit is hit.
pub fn concretize_presentation(p: &Presentation, limits: EnumLimits) -> Result<Option<FiniteGroupTable>> {
    match enumerate(p, &[], limits)?.into_table() {
        Some(t) => concretize(&t).map(Some),
        None => Ok(None),
    }
}

impl FiniteGroupTable {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b] as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn generator(&self, g: usize) -> usize {
        self.gen_images[g - 1]
    }

    pub fn generators(&self) -> &[usize] {
        &self.gen_images
    }

    /// A word for the element, from the transversal.
    pub fn word(&self, a: usize) -> &Word {
        &self.words[a]
    }

    pub fn element(&self, w: &Word) -> usize {
        w.letters().iter().fold(0, |acc, l| {
            let g = self.generator(l.index());
            self.mul(acc, if l.is_positive() { g } else { self.inverse(g) })
        })
    }

    /// `x · a · x⁻¹`.
    pub fn conjugate(&self, a: usize, x: usize) -> usize {
        self.mul(self.mul(x, a), self.inverse(x))
    }

    pub fn element_order(&self, a: usize) -> u64 {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn is_abelian(&self) -> bool {
        self.gen_images
            .iter()
            .all(|&a| self.gen_images.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Orbits of `subset` under conjugation by `acting`. `subset` must be
    /// closed under that action. Classes come sorted by smallest element.
    pub fn classes_under(&self, subset: &[usize], acting: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        let mut out = Vec::new();
        for &a in &sorted {
            if seen[a] {
                continue;
            }
            let mut class: Vec<usize> = acting.iter().map(|&x| self.conjugate(a, x)).collect();
            class.sort_unstable();
            class.dedup();
            for &c in &class {
                seen[c] = true;
            }
            out.push(class);
        }
        out
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let all: Vec<usize> = self.elements().collect();
        self.classes_under(&all, &all)
    }

    pub fn centralizer(&self, a: usize) -> Vec<usize> {
        self.elements().filter(|&x| self.mul(a, x) == self.mul(x, a)).collect()
    }

    pub fn center(&self) -> Vec<usize> {
        self.elements()
            .filter(|&x| self.gen_images.iter().all(|&g| self.mul(g, x) == self.mul(x, g)))
            .collect()
    }

    /// The subgroup generated by `gens`, sorted.
    pub fn subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order];
        inside[0] = true;
        let mut stack = vec![0usize];
        while let Some(a) = stack.pop() {
            for &g in gens {
                let b = self.mul(a, g);
                if !inside[b] {
                    inside[b] = true;
                    stack.push(b);
                }
            }
        }
        self.elements().filter(|&a| inside[a]).collect()
    }

    /// The group on `elements` (which must form a subgroup), renumbered in
    /// the given order with `elements[0]` mapped to the identity slot.
    pub fn restrict(&self, elements: &[usize]) -> Result<FiniteGroupTable> {
        let mut sorted = elements.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.first() != Some(&0) {
            return Err(Error::InvalidParameter("subgroup must contain the identity".into()));
        }
        let mut index = vec![usize::MAX; self.order];
        for (k, &a) in sorted.iter().enumerate() {
            index[a] = k;
        }
        let m = sorted.len();
        let mut mult = vec![0u32; m * m];
        for (i, &a) in sorted.iter().enumerate() {
            for (j, &b) in sorted.iter().enumerate() {
                let c = index[self.mul(a, b)];
                if c == usize::MAX {
                    return Err(Error::InvalidParameter("elements are not closed under products".into()));
                }
                mult[i * m + j] = c as u32;
            }
        }
        let inv = sorted.iter().map(|&a| index[self.inverse(a)] as u32).collect();
        Ok(FiniteGroupTable {
            order: m,
            mult,
            inv,
            gen_images: (1..m).collect(),
            words: sorted.iter().map(|&a| self.words[a].clone()).collect(),
        })
    }

    /// Element order → number of elements of that order.
    pub fn order_census(&self) -> BTreeMap<u64, usize> {
        let mut census = BTreeMap::new();
        for a in self.elements() {
            *census.entry(self.element_order(a)).or_insert(0) += 1;
        }
        census
    }

    pub fn involution_count(&self) -> usize {
        self.elements().filter(|&a| a != 0 && self.mul(a, a) == 0).count()
    }

    /// The commutator subgroup.
    pub fn derived_subgroup(&self) -> Vec<usize> {
        let mut comms = Vec::new();
        for a in self.elements() {
            for b in self.elements() {
                let c = self.mul(self.mul(a, b), self.inverse(self.mul(b, a)));
                comms.push(c);
            }
        }
        comms.sort_unstable();
        comms.dedup();
        self.subgroup(&comms)
    }

    /// Invariants of `G/[G,G]`, from counting elements of prime-power order
    /// in the quotient.
    pub fn abelian_invariants(&self) -> AbelianInvariants {
        let derived = self.derived_subgroup();
        let mut in_derived = vec![false; self.order];
        for &d in &derived {
            in_derived[d] = true;
        }
        let quotient_order = (self.order / derived.len()) as u64;
        // Order of a·G' is the least k with a^k ∈ G'.
        let coset_orders: Vec<u64> = self
            .elements()
            .map(|a| {
                let mut k = 1;
                let mut x = a;
                while !in_derived[x] {
                    x = self.mul(x, a);
                    k += 1;
                }
                k
            })
            .collect();
        let mut factors: Vec<Vec<u64>> = Vec::new();
        for (p, e) in factorize(quotient_order) {
            // rank_k = number of cyclic factors of order ≥ p^k.
            let count = |k: u32| -> u64 {
                let pk = p.pow(k);
                coset_orders.iter().filter(|&&o| pk % o == 0).count() as u64 / derived.len() as u64
            };
            let mut exps = Vec::new();
            for k in 1..=e {
                let ratio = count(k) / count(k - 1);
                let rank = ratio.ilog(p);
                exps.push(rank);
            }
            // Number of factors with exponent exactly k is rank_k − rank_{k+1}.
            let mut powers = Vec::new();
            for k in 0..exps.len() {
                let next = exps.get(k + 1).copied().unwrap_or(0);
                for _ in 0..exps[k] - next {
                    powers.push(p.pow(k as u32 + 1));
                }
            }
            factors.push(powers);
        }
        // Invariant factors: multiply the largest prime powers together, then the next, …
        let width = factors.iter().map(Vec::len).max().unwrap_or(0);
        let mut torsion = vec![1u64; width];
        for mut powers in factors {
            powers.sort_unstable_by(|a, b| b.cmp(a));
            for (k, q) in powers.into_iter().enumerate() {
                torsion[width - 1 - k] *= q;
            }
        }
        AbelianInvariants { torsion, free_rank: 0 }
    }

    /// Finds a failure of `(ab)c = a(bc)` among `samples` random triples.
    pub fn associativity_counterexample<R: Rng>(&self, rng: &mut R, samples: usize) -> Option<(usize, usize, usize)> {
        (0..samples)
            .map(|_| (rng.gen_range(0..self.order), rng.gen_range(0..self.order), rng.gen_range(0..self.order)))
            .find(|&(a, b, c)| self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)))
    }

    /// Identity, inverses and closure of the generated subgroup.
    pub fn satisfies_axioms(&self) -> bool {
        self.elements().all(|a| self.mul(0, a) == a && self.mul(a, 0) == a)
            && self.elements().all(|a| self.mul(a, self.inverse(a)) == 0 && self.mul(self.inverse(a), a) == 0)
            && self.subgroup(&self.gen_images).len() == self.order
    }
}

fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupLabel {
    Trivial,
    Cyclic(u64),
    KleinFour,
    S3,
    Q8,
    Q16,
    Dic12,
    Other { order: usize, abelianization: AbelianInvariants, order_census: Vec<(u64, usize)> },
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupLabel::Trivial => write!(f, "trivial"),
            GroupLabel::Cyclic(k) => write!(f, "Z{k}"),
            GroupLabel::KleinFour => write!(f, "Z2xZ2"),
            GroupLabel::S3 => write!(f, "S3"),
            GroupLabel::Q8 => write!(f, "Q8"),
            GroupLabel::Q16 => write!(f, "Q16"),
            GroupLabel::Dic12 => write!(f, "Dic12"),
            GroupLabel::Other { order, abelianization, order_census } => {
                let census: Vec<String> = order_census.iter().map(|(o, c)| format!("{o}:{c}")).collect();
                write!(f, "other(order={order}, ab={abelianization}, orders={})", census.join(","))
            }
        }
    }
}

/// Identification by fingerprint. Only the small types that occur here are named.
pub fn identify(g: &FiniteGroupTable) -> GroupLabel {
    let order = g.order();
    let census = g.order_census();
    let abelian = g.is_abelian();
    let unique_involution = g.involution_count() == 1;
    let max_order = census.keys().copied().max().unwrap_or(1);
    match order {
        1 => return GroupLabel::Trivial,
        _ if max_order == order as u64 => return GroupLabel::Cyclic(max_order),
        4 if abelian => return GroupLabel::KleinFour,
        6 if !abelian => return GroupLabel::S3,
        8 if !abelian && unique_involution => return GroupLabel::Q8,
        // The non-cyclic 2-groups with one involution are the generalized quaternion groups.
        16 if !abelian && unique_involution => return GroupLabel::Q16,
        // Of the five groups of order 12 only Z12 and Dic12 have one involution.
        12 if !abelian && unique_involution => return GroupLabel::Dic12,
        _ => {}
    }
    GroupLabel::Other {
        order,
        abelianization: g.abelian_invariants(),
        order_census: census.into_iter().collect(),
    }
}

/// Which group conjugates when counting classes of pure order-4 elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conjugation {
    /// Classes of `B_2(RP²)`.
    WholeGroup,
    /// Classes of `P_2(RP²)`.
    PureSubgroup,
}

/// `(n−2)!(2n−1)`.
pub fn pure_order4_class_formula(n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    let fact = (1..=n - 2).try_fold(1u64, |acc, k| acc.checked_mul(k))?;
    fact.checked_mul(2 * n - 1)
}

/// The pure subgroup of a tabulated braid group: elements whose word maps to
/// the identity permutation.
pub fn pure_elements(g: &FiniteGroupTable, p: &Presentation) -> Result<Vec<usize>> {
    let images = p.permutation_images()?;
    let mut out = Vec::new();
    for a in g.elements() {
        if evaluate_perm(g.word(a), &images)?.is_identity() {
            out.push(a);
        }
    }
    Ok(out)
}

/// Conjugacy classes of order-4 elements of `P_2(RP²)`, by brute force in the
/// order-16 group. Other `n` give infinite groups and are unsupported.
pub fn order4_pure_class_count(n: usize, conj: Conjugation, limits: EnumLimits) -> Result<usize> {
    if n != 2 {
        return Err(Error::Unsupported(format!("B_{n}(RP2) is infinite; only n = 2 is decidable here")));
    }
    let p = projective_plane(2)?;
    let g = concretize_presentation(&p, limits)?
        .ok_or_else(|| Error::Unsupported("coset limit reached for B_2(RP2)".into()))?;
    let pure = pure_elements(&g, &p)?;
    let order4: Vec<usize> = pure.iter().copied().filter(|&a| g.element_order(a) == 4).collect();
    let acting: Vec<usize> = match conj {
        Conjugation::WholeGroup => g.elements().collect(),
        Conjugation::PureSubgroup => pure,
    };
    Ok(g.classes_under(&order4, &acting).len())
}

/// Element order of a named word in a tabulated group.
pub fn named_element_order(g: &FiniteGroupTable, surface: Surface, name: Named, n: usize) -> Result<u64> {
    Ok(g.element_order(g.element(&named_word(surface, name, n)?)))
}
