use std::fmt;

use crate::error::{Error, Result};

/// A generator index raised to the power +1 or -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(gen: usize) -> Self {
        Letter { gen, inverse: false }
    }

    pub fn neg(gen: usize) -> Self {
        Letter { gen, inverse: true }
    }

    pub fn with_exp(gen: usize, exp: i32) -> Self {
        Letter { gen, inverse: exp < 0 }
    }

    pub fn inv(self) -> Self {
        Letter { gen: self.gen, inverse: !self.inverse }
    }

    pub fn exp(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.inverse != other.inverse
    }
}

/// A word in a free group. Powers are always stored expanded into letters of
/// exponent +1 or -1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn identity() -> Self {
        Word::default()
    }

    pub fn gen(gen: usize) -> Self {
        Word { letters: vec![Letter::pos(gen)] }
    }

    /// Builds a word from `(generator, exponent)` pairs, expanding powers.
    pub fn from_powers(powers: &[(usize, i32)]) -> Self {
        let mut letters = Vec::new();
        for &(g, e) in powers {
            for _ in 0..e.unsigned_abs() {
                letters.push(Letter::with_exp(g, e));
            }
        }
        Word { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| l.inv()).collect() }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn pow(&self, n: i32) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * n.unsigned_abs() as usize);
        for _ in 0..n.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Word { letters }
    }

    pub fn exponent_sum(&self, gen: usize) -> i64 {
        self.letters.iter().filter(|l| l.gen == gen).map(|l| l.exp()).sum()
    }

    pub fn occurrences(&self, gen: usize) -> usize {
        self.letters.iter().filter(|l| l.gen == gen).count()
    }

    pub fn mentions(&self, gen: usize) -> bool {
        self.letters.iter().any(|l| l.gen == gen)
    }

    /// Removes adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match out.last() {
                Some(&last) if last.cancels(l) => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        Word { letters: out }
    }

    /// Free reduction followed by stripping inverse pairs from the two ends.
    pub fn cyclic_reduce(&self) -> Word {
        let w = self.free_reduce();
        let n = w.letters.len();
        let mut lo = 0;
        let mut hi = n;
        while hi - lo >= 2 && w.letters[lo].cancels(w.letters[hi - 1]) {
            lo += 1;
            hi -= 1;
        }
        Word { letters: w.letters[lo..hi].to_vec() }
    }

    pub fn rotate(&self, k: usize) -> Word {
        if self.letters.is_empty() {
            return self.clone();
        }
        let mut letters = self.letters.clone();
        letters.rotate_left(k % self.letters.len());
        Word { letters }
    }

    /// Canonical representative of the relator class: the lexicographically
    /// least cyclic rotation of the cyclically reduced word or its inverse.
    pub fn canonical_relator(&self) -> Word {
        let w = self.cyclic_reduce();
        if w.is_empty() {
            return w;
        }
        let inv = w.inverse();
        (0..w.len()).flat_map(|k| [w.rotate(k), inv.rotate(k)]).min().expect("nonempty")
    }

    /// The alternating-exponent transforms of the letter sequence. The first
    /// word alternates starting with +1, the second starting with -1; the
    /// original exponents are discarded. Both are freely reduced.
    pub fn tilde_pair(&self) -> Result<(Word, Word)> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        let (first, second) = self.tilde_unreduced();
        Ok((first.free_reduce(), second.free_reduce()))
    }

    pub(crate) fn tilde_unreduced(&self) -> (Word, Word) {
        let first = self.letters.iter().enumerate().map(|(i, l)| Letter { gen: l.gen, inverse: i % 2 == 1 }).collect();
        let second = self.letters.iter().enumerate().map(|(i, l)| Letter { gen: l.gen, inverse: i % 2 == 0 }).collect();
        (Word { letters: first }, Word { letters: second })
    }

    /// Whether the cyclic word alternates exponents (+,-,+,-,...) up to
    /// rotation and inversion. Requires even length.
    pub fn is_alternating(&self) -> bool {
        let n = self.letters.len();
        n.is_multiple_of(2) && (0..n).all(|i| self.letters[i].inverse != self.letters[(i + 1) % n].inverse)
    }

    /// Applies a substitution `gen -> word` letterwise.
    pub fn substitute(&self, images: &dyn Fn(usize) -> Word) -> Word {
        let mut letters = Vec::new();
        for l in &self.letters {
            let img = images(l.gen);
            if l.inverse {
                letters.extend(img.inverse().letters);
            } else {
                letters.extend(img.letters);
            }
        }
        Word { letters }
    }

    pub fn map_gens(&self, f: impl Fn(usize) -> usize) -> Word {
        Word { letters: self.letters.iter().map(|l| Letter { gen: f(l.gen), inverse: l.inverse }).collect() }
    }

    /// Formats with the given generator names, collapsing runs into powers.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names }
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word { letters: iter.into_iter().collect() }
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        let letters = self.word.letters();
        let mut i = 0;
        let mut first = true;
        while i < letters.len() {
            let mut j = i;
            while j < letters.len() && letters[j] == letters[i] {
                j += 1;
            }
            let run = (j - i) as i64 * letters[i].exp();
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let name = self.names.get(letters[i].gen).cloned().unwrap_or_else(|| format!("#{}", letters[i].gen));
            if run == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{run}")?;
            }
            i = j;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(p: &[(usize, i32)]) -> Word {
        Word::from_powers(p)
    }

    #[test]
    fn free_reduce_examples() {
        assert!(w(&[(0, 1), (0, -1)]).free_reduce().is_empty());
        assert_eq!(w(&[(0, 1), (1, 1), (1, -1), (0, 1)]).free_reduce(), w(&[(0, 2)]));
        assert!(w(&[(0, 1), (0, -1), (1, 1), (1, -1)]).free_reduce().is_empty());
    }

    #[test]
    fn cyclic_reduce_examples() {
        assert_eq!(w(&[(0, 1), (1, 1), (0, -1)]).cyclic_reduce(), w(&[(1, 1)]));
        assert_eq!(w(&[(1, 1), (0, 2), (1, -1)]).cyclic_reduce(), w(&[(0, 2)]));
        // b a b^-1 a is already cyclically reduced
        let bab_a = w(&[(1, 1), (0, 1), (1, -1), (0, 1)]);
        assert_eq!(bab_a.cyclic_reduce(), bab_a);
        assert!(Word::identity().cyclic_reduce().is_empty());
    }

    #[test]
    fn tilde_examples() {
        let (a, b) = (0, 1);
        let r = w(&[(a, 1), (b, 1), (a, 1), (b, -1), (a, -1), (b, -1)]);
        let (t, tp) = r.tilde_pair().unwrap();
        assert_eq!(t, w(&[(a, 1), (b, -1)]).pow(3));
        assert_eq!(tp, w(&[(a, -1), (b, 1)]).pow(3));
        let (t, tp) = w(&[(a, 2), (b, -2)]).tilde_pair().unwrap();
        assert!(t.is_empty() && tp.is_empty());
        assert_eq!(Word::identity().tilde_pair(), Err(Error::EmptyWord));
    }

    #[test]
    fn alternating_detection() {
        assert!(w(&[(0, 1), (1, -1), (0, 1), (2, -1)]).is_alternating());
        assert!(w(&[(0, -1), (1, 1)]).is_alternating());
        assert!(!w(&[(0, 3)]).is_alternating());
        assert!(!w(&[(0, 1), (1, 1), (0, -1), (1, -1)]).is_alternating());
    }

    #[test]
    fn display_collapses_powers() {
        let names = vec!["a".to_string(), "b".to_string()];
        let r = w(&[(0, 2), (1, -1), (0, 1)]);
        assert_eq!(r.display_with(&names).to_string(), "a^2 b^-1 a");
        assert_eq!(Word::identity().display_with(&names).to_string(), "1");
    }
}
