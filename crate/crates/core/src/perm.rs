use std::fmt;

use crate::error::{Error, Result};
use crate::word::Word;

/// A permutation of `0..m`, printed on points `1..=m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(m: usize) -> Permutation {
        Permutation { images: (0..m as u32).collect() }
    }

    /// From 0-based images; panics if `images` is not a bijection.
    pub fn from_images(images: Vec<u32>) -> Permutation {
        Permutation::try_from_images(images).expect("not a permutation")
    }

    pub fn try_from_images(images: Vec<u32>) -> Result<Permutation> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let i = i as usize;
            if i >= images.len() || seen[i] {
                return Err(Error::InvalidParameter("images do not form a bijection".into()));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition of the 1-based points `a` and `b`.
    pub fn transposition(m: usize, a: usize, b: usize) -> Permutation {
        let mut images: Vec<u32> = (0..m as u32).collect();
        images.swap(a - 1, b - 1);
        Permutation { images }
    }

    /// The cycle `(c[0] c[1] ...)` on 1-based points.
    pub fn cycle(m: usize, c: &[usize]) -> Permutation {
        let mut images: Vec<u32> = (0..m as u32).collect();
        for i in 0..c.len() {
            images[c[i] - 1] = (c[(i + 1) % c.len()] - 1) as u32;
        }
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation { images: other.images.iter().map(|&x| self.images[x as usize]).collect() }
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .map(|c| c.len() as u64)
            .fold(1, num_integer::lcm)
    }

    /// Non-trivial cycles on 1-based points, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut c = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                c.push(x + 1);
                x = self.apply(x);
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// Evaluates `w` under generator images, as a homomorphism for composition:
/// `evaluate(uv) = evaluate(u) ∘ evaluate(v)`.
pub fn evaluate_perm(w: &Word, images: &[Permutation]) -> Result<Permutation> {
    let degree = images.first().map(Permutation::degree).unwrap_or(0);
    if images.iter().any(|p| p.degree() != degree) {
        return Err(Error::InvalidParameter("generator images on different point counts".into()));
    }
    let mut points: Vec<u32> = (0..degree as u32).collect();
    // Right to left: the last letter acts first.
    for l in w.letters().iter().rev() {
        let img = images
            .get(l.index() - 1)
            .ok_or_else(|| Error::MissingImage(l.index().to_string()))?;
        let p = if l.is_positive() { img.clone() } else { img.inverse() };
        for x in points.iter_mut() {
            *x = p.images[*x as usize];
        }
    }
    Ok(Permutation { images: points })
}
