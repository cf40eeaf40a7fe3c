use super::{Letter, Presentation, Word};
use crate::error::{Error, Result};

fn parse_token(tok: &str, gens: &[String]) -> std::result::Result<(usize, i32), String> {
    let (name, exp) = match tok.split_once('^') {
        Some((n, e)) => (n, e.parse::<i32>().map_err(|_| format!("bad exponent in {tok:?}"))?),
        None => (tok, 1),
    };
    let gen = gens.iter().position(|g| g == name).ok_or_else(|| format!("unknown generator {name:?}"))?;
    Ok((gen, exp))
}

pub(super) fn parse_word(text: &str, gens: &[String]) -> Result<Word> {
    let mut letters = Vec::new();
    for tok in text.split_whitespace() {
        if tok == "1" {
            continue;
        }
        let (gen, exp) = parse_token(tok, gens).map_err(Error::Parse)?;
        for _ in 0..exp.unsigned_abs() {
            letters.push(Letter::with_exp(gen, exp));
        }
    }
    Ok(Word::new(letters))
}

/// Line format: `gens: a b c` (may repeat) and `rel: a b^-1 a c^-1`.
pub(super) fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut gens: Vec<String> = Vec::new();
    let mut rels = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse(format!("line {}: {msg}", lineno + 1));
        if let Some(rest) = line.strip_prefix("gens:") {
            gens.extend(rest.split_whitespace().map(str::to_string));
        } else if let Some(rest) = line.strip_prefix("rel:") {
            let mut letters = Vec::new();
            for tok in rest.split_whitespace() {
                if tok == "1" {
                    continue;
                }
                let (gen, exp) = parse_token(tok, &gens).map_err(err)?;
                for _ in 0..exp.unsigned_abs() {
                    letters.push(Letter::with_exp(gen, exp));
                }
            }
            rels.push(Word::new(letters));
        } else {
            return Err(err(format!("expected `gens:` or `rel:`, got {line:?}")));
        }
    }
    Presentation::new(gens, rels)
}
