//! Free-group words and finite presentations.
//!
//! Relators are stored freely and cyclically reduced; trivial relators are
//! kept so that builders can preserve a one-relator-per-crossing layout.
//! [`tietze_simplify`] and [`core_functor`] drop them.

mod builders;
mod text;
mod tietze;
mod word;

pub use builders::{alternating_core_presentation, braid_presentation, coxeter_presentation, CoxeterMatrix};
pub use tietze::tietze_simplify;
pub use word::{Letter, Word, WordDisplay};

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let mut seen = HashSet::new();
        for g in &generators {
            if g.is_empty() || g.contains(char::is_whitespace) || g.contains('^') {
                return Err(Error::InvalidArg(format!("bad generator symbol {g:?}")));
            }
            if !seen.insert(g.as_str()) {
                return Err(Error::InvalidArg(format!("duplicate generator {g}")));
            }
        }
        for r in &relators {
            if let Some(l) = r.letters().iter().find(|l| l.gen >= generators.len()) {
                return Err(Error::UnknownGenerator(format!("#{}", l.gen)));
            }
        }
        let relators = relators.iter().map(Word::cyclic_reduce).collect();
        Ok(Presentation { generators, relators })
    }

    /// Shorthand for building from string slices in tests and builders.
    pub fn from_names(generators: &[&str], relators: Vec<Word>) -> Result<Self> {
        Self::new(generators.iter().map(|s| s.to_string()).collect(), relators)
    }

    pub fn empty() -> Self {
        Presentation { generators: Vec::new(), relators: Vec::new() }
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Returns a copy with extra relators appended.
    pub fn with_relators(&self, extra: impl IntoIterator<Item = Word>) -> Result<Self> {
        let mut relators = self.relators.clone();
        relators.extend(extra);
        Presentation::new(self.generators.clone(), relators)
    }

    /// Parses a word such as `a b^-1 c^2` over this presentation's generators.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        text::parse_word(text, &self.generators)
    }

    pub fn parse(text: &str) -> Result<Self> {
        text::parse_presentation(text)
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn word_to_string(&self, w: &Word) -> String {
        w.display_with(&self.generators).to_string()
    }

    /// Relators with trivial ones removed and duplicates (up to rotation and
    /// inversion) collapsed, preserving first-occurrence order.
    pub fn dedup_relators(&self) -> Presentation {
        let mut seen = BTreeSet::new();
        let relators = self
            .relators
            .iter()
            .filter(|r| !r.is_empty())
            .filter(|r| seen.insert(r.canonical_relator()))
            .cloned()
            .collect();
        Presentation { generators: self.generators.clone(), relators }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gens: {}", self.generators.join(" "))?;
        for r in &self.relators {
            writeln!(f, "rel: {}", r.display_with(&self.generators))?;
        }
        Ok(())
    }
}

/// Homomorphism onto the two-element group; `true` marks the nontrivial image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parity {
    pub assignment: Vec<bool>,
}

/// Finds the parity sending every generator to the nontrivial element, which
/// exists exactly when every relator has even length.
pub fn parity_check(p: &Presentation) -> Result<Parity> {
    if let Some(r) = p.relators.iter().find(|r| r.len() % 2 == 1) {
        return Err(Error::OddRelator(p.word_to_string(r)));
    }
    Ok(Parity { assignment: vec![true; p.num_generators()] })
}

/// Presentation of the core group of `(G, S, rho)` with `S` the generators and
/// `rho` the all-nontrivial parity: each relator `r` is replaced by its two
/// alternating transforms.
pub fn core_functor(p: &Presentation) -> Result<Presentation> {
    parity_check(p)?;
    let mut relators = Vec::with_capacity(2 * p.relators.len());
    for r in p.relators.iter().filter(|r| !r.is_empty()) {
        let (t, tp) = r.tilde_pair()?;
        relators.push(t);
        relators.push(tp);
    }
    Ok(Presentation::new(p.generators.clone(), relators)?.dedup_relators())
}

/// Rewrites a presentation whose relators are all alternating
/// (`s1 s2^-1 ... s2k^-1`) over the generators `{s0} ∪ {s s0^-1}`. The new
/// relators never mention `s0`, exhibiting it as a free `Z` factor.
pub fn split_free_factor(p: &Presentation, s0: &str) -> Result<Presentation> {
    let base = p.generator_index(s0).ok_or_else(|| Error::UnknownGenerator(s0.to_string()))?;
    let mut names = Vec::with_capacity(p.num_generators());
    let mut taken: HashSet<String> = p.generators.iter().cloned().collect();
    for (i, g) in p.generators.iter().enumerate() {
        if i == base {
            names.push(g.clone());
        } else {
            let mut n = format!("{g}'");
            while taken.contains(&n) {
                n.push('\'');
            }
            taken.insert(n.clone());
            names.push(n);
        }
    }
    let mut relators = Vec::with_capacity(p.relators.len());
    for r in &p.relators {
        if !r.is_alternating() {
            return Err(Error::NotAlternating(p.word_to_string(r)));
        }
        // rotate so the word starts with a positive letter; s' = s s0^-1 then
        // gives s1 s2^-1 = s1' s2'^-1 and s0' = 1.
        let start = r.letters().iter().position(|l| !l.inverse).unwrap_or(0);
        let rotated = r.rotate(start);
        let rewritten: Word = rotated.letters().iter().copied().filter(|l| l.gen != base).collect();
        relators.push(rewritten);
    }
    Presentation::new(names, relators)
}

/// Free product with generator names of `p2` primed on clash.
pub fn free_product(p1: &Presentation, p2: &Presentation) -> Presentation {
    let mut names = p1.generators.clone();
    let mut taken: HashSet<String> = names.iter().cloned().collect();
    for g in &p2.generators {
        let mut n = g.clone();
        while taken.contains(&n) {
            n.push('\'');
        }
        taken.insert(n.clone());
        names.push(n);
    }
    let shift = p1.num_generators();
    let mut relators = p1.relators.clone();
    relators.extend(p2.relators.iter().map(|r| r.map_gens(|g| g + shift)));
    Presentation { generators: names, relators }
}
