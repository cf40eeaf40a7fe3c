use std::fs;
use std::path::Path;

use serde::Deserialize;

use crate::diagram::{parse_diagram, Diagram};
use crate::error::{Error, Result};
use crate::groups::BoundaryWord;

/// Golden invariants for one diagram. Group fields are abelian groups in
/// `Z^2 + Z/3` notation; `*_model` fields are presentations whose
/// fingerprint the group must share.
#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectations {
    pub ac: Option<String>,
    pub rc: Option<String>,
    pub rrc: Option<String>,
    pub ac_model: Option<String>,
    pub rc_model: Option<String>,
    pub rrc_model: Option<String>,
    pub components: Option<usize>,
    pub pieces: Option<usize>,
    pub determinant: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramSpec {
    pub name: String,
    pub file: String,
    #[serde(default)]
    pub expected_fail: Vec<String>,
    #[serde(default)]
    pub expect: Expectations,
}

/// A move applied to a corpus diagram with its expected effect on the
/// regional groups: `[before, after]`.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MoveSpec {
    pub name: String,
    pub diagram: String,
    #[serde(rename = "move")]
    pub spec: String,
    /// Corpus diagram the move must produce, compared by file text.
    pub result: Option<String>,
    pub rc: Option<[String; 2]>,
    pub rrc: Option<[String; 2]>,
}

/// A diagram in a thickened surface with boundary words read along the
/// edges of a fundamental region.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceSpec {
    pub name: String,
    pub diagram: String,
    pub boundary: Vec<String>,
    pub base: Option<String>,
    pub rc0: Option<String>,
    pub dehn: Option<String>,
    pub rc0_model: Option<String>,
    pub dehn_model: Option<String>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct Manifest {
    #[serde(default)]
    diagram: Vec<DiagramSpec>,
    #[serde(default, rename = "move")]
    moves: Vec<MoveSpec>,
    #[serde(default)]
    surface: Vec<SurfaceSpec>,
}

#[derive(Debug, Clone)]
pub struct Entry {
    pub name: String,
    pub diagram: Diagram,
    pub spec: DiagramSpec,
}

impl Entry {
    pub fn expects_failure(&self, check: &str) -> bool {
        self.spec.expected_fail.iter().any(|c| c == check)
    }
}

#[derive(Debug, Clone, Default)]
pub struct Corpus {
    pub entries: Vec<Entry>,
    pub moves: Vec<MoveSpec>,
    pub surfaces: Vec<SurfaceSpec>,
}

impl Corpus {
    /// Reads `manifest.toml` in `dir` and every diagram it lists. Entries
    /// are sorted by name.
    pub fn load(dir: &Path) -> Result<Corpus> {
        let path = dir.join("manifest.toml");
        let text = fs::read_to_string(&path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        let manifest: Manifest = toml::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        let mut entries = Vec::with_capacity(manifest.diagram.len());
        for spec in manifest.diagram {
            let file = dir.join(&spec.file);
            let src = fs::read_to_string(&file).map_err(|e| Error::Io(format!("{}: {e}", file.display())))?;
            let diagram = parse_diagram(&src).map_err(|e| Error::Parse(format!("{}: {e}", file.display())))?;
            entries.push(Entry { name: spec.name.clone(), diagram, spec });
        }
        entries.sort_by(|a, b| a.name.cmp(&b.name));
        let corpus = Corpus { entries, moves: manifest.moves, surfaces: manifest.surface };
        for name in corpus.moves.iter().map(|m| &m.diagram).chain(corpus.moves.iter().filter_map(|m| m.result.as_ref()))
        {
            corpus.entry(name)?;
        }
        for s in &corpus.surfaces {
            corpus.entry(&s.diagram)?;
        }
        Ok(corpus)
    }

    /// A corpus of bare diagrams with no expectations.
    pub fn from_diagrams(diagrams: Vec<(String, Diagram)>) -> Corpus {
        let entries = diagrams
            .into_iter()
            .map(|(name, diagram)| {
                let spec = DiagramSpec {
                    name: name.clone(),
                    file: String::new(),
                    expected_fail: Vec::new(),
                    expect: Expectations::default(),
                };
                Entry { name, diagram, spec }
            })
            .collect();
        Corpus { entries, ..Corpus::default() }
    }

    pub fn entry(&self, name: &str) -> Result<&Entry> {
        self.entries
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| Error::InvalidArg(format!("no corpus diagram named {name:?}")))
    }
}

/// Parses `g2^-1 g1 g2 g3^-1` into boundary-word letters.
pub fn parse_boundary_word(text: &str) -> Result<BoundaryWord> {
    text.split_whitespace()
        .map(|tok| match tok.split_once('^') {
            None => Ok((tok.to_string(), 1)),
            Some((name, "1")) => Ok((name.to_string(), 1)),
            Some((name, "-1")) => Ok((name.to_string(), -1)),
            Some(_) => Err(Error::Parse(format!("boundary letter {tok:?} must have exponent 1 or -1"))),
        })
        .collect()
}
