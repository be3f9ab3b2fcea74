//! Word problem in the Artin braid group via left-greedy normal form.
//!
//! A positive braid in which each pair of strands crosses at most once is a
//! permutation braid; it is stored as the permutation sending the starting
//! position of each strand to its finishing position. Every braid is written
//! uniquely as `Δ^inf · F₁ ⋯ F_k` with each `F_i` a proper, non-trivial
//! permutation braid and every pair `(F_i, F_{i+1})` left-weighted.
//!
//! [`artin_action`] is an independent check: the faithful action of `B_n` on
//! the free group of rank `n`.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::word::{Letter, Word};

/// A permutation braid on `n` strands. Position `i` is 0-based here; the
/// generator `σ_{i+1}` crosses positions `i` and `i+1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationBraid {
    perm: Vec<u8>,
}

impl PermutationBraid {
    pub fn identity(n: usize) -> PermutationBraid {
        PermutationBraid { perm: (0..n as u8).collect() }
    }

    pub fn delta(n: usize) -> PermutationBraid {
        PermutationBraid { perm: (0..n as u8).rev().collect() }
    }

    /// The generator `σ_i` (1-based).
    pub fn sigma(n: usize, i: usize) -> PermutationBraid {
        let mut perm: Vec<u8> = (0..n as u8).collect();
        perm.swap(i - 1, i);
        PermutationBraid { perm }
    }

    pub fn strands(&self) -> usize {
        self.perm.len()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| p as usize == i)
    }

    pub fn is_delta(&self) -> bool {
        let n = self.perm.len();
        self.perm.iter().enumerate().all(|(i, &p)| p as usize == n - 1 - i)
    }

    pub fn permutation(&self) -> Permutation {
        Permutation::from_images(self.perm.iter().map(|&x| u32::from(x)).collect())
    }

    fn inverse_perm(&self) -> Vec<u8> {
        let mut inv = vec![0u8; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p as usize] = i as u8;
        }
        inv
    }

    /// Crossing count, i.e. the number of inversions.
    pub fn length(&self) -> usize {
        let p = &self.perm;
        let mut count = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Generators `σ_{i+1}` that can start this braid (0-based `i`).
    pub fn starting_set(&self) -> Vec<bool> {
        (0..self.perm.len().saturating_sub(1)).map(|i| self.perm[i] > self.perm[i + 1]).collect()
    }

    /// Generators that can end this braid.
    pub fn finishing_set(&self) -> Vec<bool> {
        let inv = self.inverse_perm();
        (0..inv.len().saturating_sub(1)).map(|i| inv[i] > inv[i + 1]).collect()
    }

    /// `self · σ_{i+1}`; only meaningful when `i` is not in the finishing set.
    fn right_multiply(&mut self, i: usize) {
        let a = self.perm.iter().position(|&p| p as usize == i).unwrap();
        let b = self.perm.iter().position(|&p| p as usize == i + 1).unwrap();
        self.perm[a] = (i + 1) as u8;
        self.perm[b] = i as u8;
    }

    /// Strips `σ_{i+1}` from the left; `i` must be in the starting set.
    fn left_divide(&mut self, i: usize) {
        self.perm.swap(i, i + 1);
    }

    /// `Δ x Δ⁻¹`, which sends `σ_i` to `σ_{n−i}`.
    fn flip(&self) -> PermutationBraid {
        let n = self.perm.len();
        PermutationBraid { perm: (0..n).map(|i| (n - 1) as u8 - self.perm[n - 1 - i]).collect() }
    }

    /// The factor `X` with `X · self = Δ`.
    fn left_complement(&self) -> PermutationBraid {
        let n = self.perm.len();
        let inv = self.inverse_perm();
        PermutationBraid { perm: (0..n).map(|i| inv[n - 1 - i]).collect() }
    }

    /// A positive word for this factor, built greedily from the starting set.
    pub fn to_word(&self) -> Word {
        let mut rest = self.clone();
        let mut letters = Vec::new();
        while let Some(i) = rest.starting_set().iter().position(|&b| b) {
            letters.push(Letter::pos(i + 1));
            rest.left_divide(i);
        }
        Word::reduced(letters)
    }
}

impl fmt::Display for PermutationBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.permutation())
    }
}

/// `Δ^inf · factors[0] ⋯ factors[k−1]`, left-greedy.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalFormBraid {
    strands: usize,
    inf: i64,
    factors: Vec<PermutationBraid>,
}

impl NormalFormBraid {
    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn factors(&self) -> &[PermutationBraid] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    /// Whether every consecutive pair is left-weighted and no factor is `1` or `Δ`.
    pub fn is_left_greedy(&self) -> bool {
        let proper = self.factors.iter().all(|f| !f.is_identity() && !f.is_delta());
        let weighted = self.factors.windows(2).all(|w| {
            let fin = w[0].finishing_set();
            w[1].starting_set().iter().zip(fin).all(|(&s, f)| !s || f)
        });
        proper && weighted
    }

    /// A word for the same braid: `Δ^inf` followed by the factors.
    pub fn to_word(&self) -> Word {
        let delta = PermutationBraid::delta(self.strands).to_word();
        let mut w = delta.power(self.inf);
        for f in &self.factors {
            w = w.concat(&f.to_word());
        }
        w
    }
}

impl fmt::Display for NormalFormBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "inf {}", self.inf)?;
        for x in &self.factors {
            write!(f, " {x}")?;
        }
        Ok(())
    }
}

fn check_sigma_word(w: &Word, n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("need n >= 2, got {n}")));
    }
    if n > 255 {
        return Err(Error::InvalidParameter("at most 255 strands".into()));
    }
    if let Some(l) = w.letters().iter().find(|l| l.index() >= n) {
        return Err(Error::WrongFamily(format!(
            "generator {} is not a sigma generator of B_{n}",
            l.index()
        )));
    }
    Ok(())
}

/// Makes `(a, b)` left-weighted by moving letters from the front of `b` to
/// the end of `a`. Returns whether anything moved.
fn left_weight(a: &mut PermutationBraid, b: &mut PermutationBraid) -> bool {
    let mut changed = false;
    loop {
        let start = b.starting_set();
        let fin = a.finishing_set();
        match (0..start.len()).find(|&i| start[i] && !fin[i]) {
            Some(i) => {
                a.right_multiply(i);
                b.left_divide(i);
                changed = true;
            }
            None => return changed,
        }
    }
}

/// Left-greedy normal form of a word in the σ-generators of `B_n`.
pub fn normal_form(w: &Word, n: usize) -> Result<NormalFormBraid> {
    check_sigma_word(w, n)?;
    // First rewrite as Δ^inf times a product of permutation braids, pushing
    // each Δ⁻¹ coming from a negative letter to the far left.
    let mut inf: i64 = 0;
    let mut factors: Vec<PermutationBraid> = Vec::new();
    let mut flipped = false;
    for l in w.letters() {
        let simple = PermutationBraid::sigma(n, l.index());
        if l.is_positive() {
            factors.push(if flipped { simple.flip() } else { simple });
        } else {
            // σ⁻¹ = Δ⁻¹ · (Δσ⁻¹); moving Δ⁻¹ past the factors so far flips them.
            inf -= 1;
            flipped = !flipped;
            let c = simple.left_complement();
            factors.push(if flipped { c.flip() } else { c });
        }
    }
    // Factors recorded while `flipped` was set are stored pre-flipped so that
    // a single global flip (when the parity is odd) restores consistency.
    if flipped {
        factors = factors.iter().map(PermutationBraid::flip).collect();
    }

    let mut out = factors;
    let mut changed = true;
    while changed {
        changed = false;
        for j in (1..out.len()).rev() {
            let (left, right) = out.split_at_mut(j);
            changed |= left_weight(&mut left[j - 1], &mut right[0]);
        }
    }
    // Δ factors collect at the front and trivial ones at the back.
    let leading = out.iter().take_while(|f| f.is_delta()).count();
    inf += leading as i64;
    out.drain(..leading);
    while out.last().is_some_and(PermutationBraid::is_identity) {
        out.pop();
    }
    debug_assert!(out.iter().all(|f| !f.is_identity()));
    Ok(NormalFormBraid { strands: n, inf, factors: out })
}

pub fn equal_in_braid_group(u: &Word, v: &Word, n: usize) -> Result<bool> {
    Ok(normal_form(u, n)? == normal_form(v, n)?)
}

/// Image of the free generator `x_k` under the automorphism of `F_n` given by
/// `w`, where `σ_i: x_i ↦ x_i x_{i+1} x_i⁻¹, x_{i+1} ↦ x_i` and other
/// generators are fixed. Composition follows the word: `φ_{uv} = φ_u ∘ φ_v`.
pub fn artin_action(w: &Word, n: usize, k: usize) -> Result<Word> {
    check_sigma_word(w, n)?;
    if !(1..=n).contains(&k) {
        return Err(Error::InvalidParameter(format!("free generator {k} out of range 1..={n}")));
    }
    Ok(artin_action_all(w, n)?.swap_remove(k - 1))
}

/// Images of all free generators `x_1..x_n`.
pub fn artin_action_all(w: &Word, n: usize) -> Result<Vec<Word>> {
    check_sigma_word(w, n)?;
    let mut images: Vec<Word> = (1..=n).map(Word::gen).collect();
    // images[k] = φ_prefix(x_k); appending a letter l gives φ_prefix ∘ φ_l.
    for l in w.letters() {
        let i = l.index();
        let xi = images[i - 1].clone();
        let xj = images[i].clone();
        if l.is_positive() {
            images[i - 1] = xj.conjugate(&xi);
            images[i] = xi;
        } else {
            images[i] = xi.conjugate(&xj.inverse());
            images[i - 1] = xj;
        }
    }
    Ok(images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{full_twist, garside};

    #[test]
    fn trivial_and_delta_forms() {
        let nf = normal_form(&Word::from_signed(&[1, -1]), 3).unwrap();
        assert!(nf.is_identity());
        let nf = normal_form(&garside(3), 3).unwrap();
        assert_eq!((nf.inf(), nf.factors().len()), (1, 0));
        for n in 2..7 {
            let nf = normal_form(&full_twist(n), n).unwrap();
            assert_eq!((nf.inf(), nf.factors().len()), (2, 0));
        }
    }

    #[test]
    fn negative_letters() {
        let nf = normal_form(&Word::from_signed(&[-1]), 3).unwrap();
        assert_eq!(nf.inf(), -1);
        assert_eq!(nf.factors().len(), 1);
        assert!(nf.is_left_greedy());
        let back = normal_form(&nf.to_word(), 3).unwrap();
        assert_eq!(back, nf);
    }

    #[test]
    fn rejects_rho_letters() {
        assert!(matches!(normal_form(&Word::gen(3), 3), Err(Error::WrongFamily(_))));
        assert!(artin_action(&Word::empty(), 3, 4).is_err());
    }

    #[test]
    fn artin_action_basics() {
        assert_eq!(artin_action(&Word::empty(), 3, 2).unwrap(), Word::gen(2));
        assert_eq!(artin_action(&Word::gen(1), 2, 1).unwrap(), Word::from_signed(&[1, 2, -1]));
        assert_eq!(artin_action(&Word::gen(1), 2, 2).unwrap(), Word::gen(1));
        let w = Word::from_signed(&[1, -1, 2, 2, -2]);
        assert_eq!(artin_action_all(&w, 3).unwrap(), artin_action_all(&Word::gen(2), 3).unwrap());
    }

    #[test]
    fn braid_relation_in_normal_form() {
        let u = Word::from_signed(&[1, 2, 1]);
        let v = Word::from_signed(&[2, 1, 2]);
        assert!(equal_in_braid_group(&u, &v, 3).unwrap());
        assert!(!equal_in_braid_group(&Word::gen(1), &Word::gen(2), 3).unwrap());
        assert!(equal_in_braid_group(&Word::from_signed(&[1, 3]), &Word::from_signed(&[3, 1]), 4).unwrap());
    }
}
