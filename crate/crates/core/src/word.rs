//! Free-group words over a finite named alphabet.
//!
//! Letters are signed 1-based generator indices. Names only matter when a
//! word is parsed or printed, which is done through an [`Alphabet`].

use std::fmt;

use crate::error::{Error, Result};

/// A signed generator: `+i` is the i-th generator, `-i` its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(i32);

impl Letter {
    pub fn new(index: usize, positive: bool) -> Letter {
        assert!(index >= 1, "generator indices are 1-based");
        let i = index as i32;
        Letter(if positive { i } else { -i })
    }

    pub fn pos(index: usize) -> Letter {
        Letter::new(index, true)
    }

    pub fn neg(index: usize) -> Letter {
        Letter::new(index, false)
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    #[inline]
    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    #[inline]
    pub fn sign(self) -> i32 {
        self.0.signum()
    }

    #[inline]
    pub fn inverse(self) -> Letter {
        Letter(-self.0)
    }

    /// Column in a coset table: `2(i-1)` for the generator, `2(i-1)+1` for its inverse.
    #[inline]
    pub fn column(self) -> usize {
        2 * (self.index() - 1) + usize::from(!self.is_positive())
    }

    pub fn from_column(col: usize) -> Letter {
        Letter::new(col / 2 + 1, col % 2 == 0)
    }
}

/// A freely reduced word. Every constructor reduces eagerly, so two words are
/// equal in the free group iff they are equal as sequences.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Word {
        Word(vec![l])
    }

    pub fn gen(index: usize) -> Word {
        Word::letter(Letter::pos(index))
    }

    /// Free reduction of an arbitrary letter sequence.
    pub fn reduced<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Builds a word from signed integers (`3` is the third generator, `-3` its inverse).
    pub fn from_signed(ints: &[i32]) -> Word {
        Word::reduced(ints.iter().map(|&i| {
            assert!(i != 0, "0 is not a letter");
            Letter(i)
        }))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_index(&self) -> usize {
        self.0.iter().map(|l| l.index()).max().unwrap_or(0)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::reduced(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn power(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..k.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// `g · self · g⁻¹`.
    pub fn conjugate(&self, g: &Word) -> Word {
        g.concat(self).concat(&g.inverse())
    }

    /// Removes matching letter/inverse pairs from the two ends.
    pub fn cyclically_reduced(&self) -> Word {
        let s = &self.0;
        let (mut lo, mut hi) = (0usize, s.len());
        while hi - lo >= 2 && s[lo] == s[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        Word(s[lo..hi].to_vec())
    }

    /// Exponent sum of each generator `1..=arity`.
    pub fn exponent_sums(&self, arity: usize) -> Vec<i64> {
        let mut sums = vec![0i64; arity];
        for l in &self.0 {
            sums[l.index() - 1] += i64::from(l.sign());
        }
        sums
    }

    /// Substitutes each generator `i` by `images[i-1]`.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut letters = Vec::new();
        for l in &self.0 {
            let img = &images[l.index() - 1];
            if l.is_positive() {
                letters.extend_from_slice(&img.0);
            } else {
                letters.extend(img.0.iter().rev().map(|x| x.inverse()));
            }
        }
        Word::reduced(letters)
    }

    /// Applies an index map to each letter, keeping signs.
    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> Word {
        Word::reduced(self.0.iter().map(|l| Letter::new(map(l.index()), l.is_positive())))
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Word {
        Word::reduced(iter)
    }
}

/// Ordered list of distinct generator names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Alphabet> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::InvalidAlphabet("empty generator name".into()));
            }
            if name.contains(|c: char| c.is_whitespace() || c == '^' || c == ',' || c == ';') {
                return Err(Error::InvalidAlphabet(format!("bad generator name {name:?}")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidAlphabet(format!("duplicate generator {name:?}")));
            }
        }
        Ok(Alphabet { names })
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Name of the 1-based generator `index`.
    pub fn name(&self, index: usize) -> &str {
        &self.names[index - 1]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name).map(|i| i + 1)
    }

    /// Validates and freely reduces a raw letter sequence.
    pub fn free_reduce(&self, raw: &[Letter]) -> Result<Word> {
        if let Some(l) = raw.iter().find(|l| l.index() > self.arity()) {
            return Err(Error::MalformedWord(format!(
                "generator index {} out of range 1..={}",
                l.index(),
                self.arity()
            )));
        }
        Ok(Word::reduced(raw.iter().copied()))
    }

    pub fn check(&self, w: &Word) -> Result<()> {
        if w.max_index() > self.arity() {
            return Err(Error::AlphabetMismatch(format!(
                "word uses generator {} but the alphabet has {}",
                w.max_index(),
                self.arity()
            )));
        }
        Ok(())
    }

    /// Parses `s1 s2^2 s1^-1`.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let (name, exp) = match token.split_once('^') {
                Some((name, e)) => {
                    let k: i64 = e
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in {token:?}")))?;
                    (name, k)
                }
                None => (token, 1),
            };
            let idx = self
                .index_of(name)
                .ok_or_else(|| Error::Parse(format!("unknown generator {name:?}")))?;
            let l = Letter::new(idx, exp > 0);
            for _ in 0..exp.unsigned_abs() {
                letters.push(l);
            }
        }
        Ok(Word::reduced(letters))
    }

    /// Formats a word with run-length exponents; the empty word prints as `1`.
    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let mut parts = Vec::new();
        let letters = w.letters();
        let mut i = 0;
        while i < letters.len() {
            let l = letters[i];
            let mut j = i;
            while j < letters.len() && letters[j] == l {
                j += 1;
            }
            let k = (j - i) as i64 * i64::from(l.sign());
            let name = self.name(l.index());
            parts.push(if k == 1 { name.to_string() } else { format!("{name}^{k}") });
            i = j;
        }
        parts.join(" ")
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(" "))
    }
}
