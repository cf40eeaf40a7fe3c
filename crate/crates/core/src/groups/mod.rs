//! Presentations of the groups attached to a diagram, plus the Goeritz
//! matrix, checkerboard graphs and arc elements of a shaded diagram.

mod checker;

pub use checker::{
    arc_element, arc_element_map, checkerboard_graphs, goeritz_matrix, CheckerboardGraphs, GoeritzMatrix,
};

use crate::diagram::{classify_corners, rotate, trace_arcs, trace_faces, Diagram, Faces, RegionMode};
use crate::error::{Error, Result};
use crate::presentation::{core_functor, Letter, Presentation, Word};

/// The kinds of group a diagram presents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    Arc,
    Region,
    SecondRegion,
    RegionZero,
    Wirtinger,
    Dehn,
}

impl GroupKind {
    pub fn parse(s: &str) -> Option<GroupKind> {
        Some(match s {
            "ac" => GroupKind::Arc,
            "rc" => GroupKind::Region,
            "rrc" => GroupKind::SecondRegion,
            "rc0" => GroupKind::RegionZero,
            "wirtinger" => GroupKind::Wirtinger,
            "dehn" => GroupKind::Dehn,
            _ => return None,
        })
    }

    pub fn needs_base(self) -> bool {
        matches!(self, GroupKind::RegionZero | GroupKind::Dehn)
    }
}

/// Region used when a base region is not specified: the merged outer region
/// in classical mode, otherwise `R1`.
pub fn default_base(faces: &Faces) -> usize {
    faces.outer.unwrap_or(0)
}

/// Builds any of the presentations. `base` names a region for the kinds
/// that kill one region generator and defaults to [`default_base`].
pub fn build_group(d: &Diagram, kind: GroupKind, mode: RegionMode, base: Option<&str>) -> Result<Presentation> {
    match kind {
        GroupKind::Arc => Ok(arc_core(d)),
        GroupKind::Wirtinger => wirtinger(d),
        GroupKind::Region => region_core(d, mode),
        GroupKind::SecondRegion => second_region_core(d, mode),
        GroupKind::RegionZero | GroupKind::Dehn => {
            let faces = trace_faces(d, mode)?;
            let b = match base {
                Some(id) => faces.region_index(id)?,
                None => default_base(&faces),
            };
            if kind == GroupKind::Dehn {
                dehn_with_faces(d, &faces, b)
            } else {
                rc_zero_with_faces(d, &faces, b)
            }
        }
    }
}

fn names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// `g_{a1} g_{a2}^-1 g_{a1} g_{a3}^-1` with `a1` the over arc.
fn crossing_relator(a1: usize, a2: usize, a3: usize) -> Word {
    Word::new(vec![Letter::pos(a1), Letter::neg(a2), Letter::pos(a1), Letter::neg(a3)])
}

/// The arc core group: one generator `g<n>` per arc, one relator per
/// crossing.
pub fn arc_core(d: &Diagram) -> Presentation {
    let arcs = trace_arcs(d);
    let relators = (0..d.num_crossings())
        .map(|c| {
            let (o, u1, u2) = arcs.at_crossing(d, c);
            crossing_relator(o, u1, u2)
        })
        .collect();
    Presentation::new(names("g", arcs.len()), relators).expect("arc names are valid")
}

fn region_relators(d: &Diagram, faces: &Faces, dehn_order: bool) -> Vec<Word> {
    (0..d.num_crossings())
        .map(|c| {
            let l = classify_corners(d, c).expect("crossing exists");
            let [v, w, x, y] = [l.v, l.w, l.x, l.y].map(|k| faces.region_of_corner(k));
            let (third, fourth) = if dehn_order { (x, y) } else { (y, x) };
            Word::new(vec![Letter::pos(v), Letter::neg(w), Letter::pos(third), Letter::neg(fourth)])
        })
        .collect()
}

/// The first regional core group: `γ_V γ_W^-1 γ_Y γ_X^-1` per crossing.
pub fn region_core(d: &Diagram, mode: RegionMode) -> Result<Presentation> {
    let faces = trace_faces(d, mode)?;
    Ok(region_core_with_faces(d, &faces))
}

pub fn region_core_with_faces(d: &Diagram, faces: &Faces) -> Presentation {
    Presentation::new(names("R", faces.num_regions()), region_relators(d, faces, false))
        .expect("region names are valid")
}

/// The second regional core group: one relator per region, read along its
/// boundary starting from the lowest corner.
pub fn second_region_core(d: &Diagram, mode: RegionMode) -> Result<Presentation> {
    let faces = trace_faces(d, mode)?;
    Ok(second_region_core_with_faces(d, &faces))
}

pub fn second_region_core_with_faces(d: &Diagram, faces: &Faces) -> Presentation {
    let mut relators = Vec::new();
    for (r, region) in faces.regions.iter().enumerate() {
        let mut letters = Vec::new();
        for k in region.corners() {
            let q = faces.region_of_corner(rotate(k, 2));
            let pair = [Letter::neg(r), Letter::pos(q)];
            if d.corner_eta(k) == 1 {
                letters.extend(pair);
            } else {
                letters.extend([pair[1].inv(), pair[0].inv()]);
            }
        }
        let w = Word::new(letters).cyclic_reduce();
        if !w.is_empty() {
            relators.push(w);
        }
    }
    Presentation::new(names("R", faces.num_regions()), relators).expect("region names are valid")
}

/// The Wirtinger presentation of an oriented diagram, with generators
/// `x<n>` numbered like the arcs.
pub fn wirtinger(d: &Diagram) -> Result<Presentation> {
    let exit = d.orientation()?;
    let arcs = trace_arcs(d);
    let mut relators = Vec::new();
    for c in 0..d.num_crossings() {
        let p = d.over_parity(c);
        let o =
            if exit[crate::diagram::slot(c, p)] { crate::diagram::slot(c, p) } else { crate::diagram::slot(c, p + 2) };
        let a1 = arcs.arc_of_slot(o);
        let a2 = arcs.arc_of_slot(rotate(o, 3));
        let a3 = arcs.arc_of_slot(rotate(o, 1));
        relators.push(Word::new(vec![Letter::pos(a1), Letter::pos(a2), Letter::neg(a1), Letter::neg(a3)]));
    }
    Ok(Presentation::new(names("x", arcs.len()), relators).expect("valid"))
}

/// The Dehn presentation: `χ_V χ_W^-1 χ_X χ_Y^-1` per crossing and the base
/// region generator set to the identity.
pub fn dehn(d: &Diagram, mode: RegionMode, base: &str) -> Result<Presentation> {
    let faces = trace_faces(d, mode)?;
    let b = faces.region_index(base)?;
    dehn_with_faces(d, &faces, b)
}

pub fn dehn_with_faces(d: &Diagram, faces: &Faces, base: usize) -> Result<Presentation> {
    if base >= faces.num_regions() {
        return Err(Error::UnknownRegion(base.to_string()));
    }
    let mut relators = region_relators(d, faces, true);
    relators.push(Word::gen(base));
    Presentation::new(names("R", faces.num_regions()), relators)
}

/// The first regional core group with one region generator killed.
pub fn rc_zero(d: &Diagram, mode: RegionMode, base: &str) -> Result<Presentation> {
    let faces = trace_faces(d, mode)?;
    let b = faces.region_index(base)?;
    rc_zero_with_faces(d, &faces, b)
}

pub fn rc_zero_with_faces(d: &Diagram, faces: &Faces, base: usize) -> Result<Presentation> {
    if base >= faces.num_regions() {
        return Err(Error::UnknownRegion(base.to_string()));
    }
    region_core_with_faces(d, faces).with_relators([Word::gen(base)])
}

/// The core group of the Wirtinger group with its standard parity.
pub fn core_of_wirtinger(d: &Diagram) -> Result<Presentation> {
    core_functor(&wirtinger(d)?)
}

/// A word read along a boundary arc: `(generator name, ±1)` letters.
pub type BoundaryWord = Vec<(String, i32)>;

/// Adds the two alternating transforms of each boundary word's letter
/// sequence as relators.
pub fn boundary_quotient(p: &Presentation, words: &[BoundaryWord]) -> Result<Presentation> {
    let mut extra = Vec::new();
    for w in words {
        let mut letters = Vec::with_capacity(w.len());
        for (name, sign) in w {
            let g = p.generator_index(name).ok_or_else(|| Error::UnknownArc(name.clone()))?;
            letters.push(Letter::with_exp(g, *sign));
        }
        if letters.is_empty() {
            continue;
        }
        let (t, tp) = Word::new(letters).tilde_pair()?;
        extra.push(t);
        extra.push(tp);
    }
    p.with_relators(extra)
}
