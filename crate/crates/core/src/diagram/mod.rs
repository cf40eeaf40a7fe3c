//! Rotation-system encoding of classical and virtual link diagrams.
//!
//! A diagram stores its classical crossings only. Each crossing has four
//! slots numbered counterclockwise; slot `s` of crossing `c` has global index
//! `4c + s`, and every slot is matched with exactly one other slot by an
//! edge. A strand entering at slot `s` leaves at slot `s + 2`. Virtual
//! crossings are not represented, so detour moves act trivially.
//!
//! Corner `i` of a crossing lies between slots `i` and `i + 1`; corners have
//! global index `4c + i` as well.

mod arcs;
mod build;
mod color;
mod faces;
mod moves;
mod parse;

pub use arcs::{trace_arcs, Arc, Arcs};
pub use build::{build_torus2m, connected_sum, disjoint_union, kink, unknot};
pub use color::{checkerboard_color, Coloring, ColoringObstruction};
pub use faces::{classify_corners, trace_faces, CornerLabels, Face, Faces, Region, RegionMode};
pub use moves::{apply_move, legal_moves, Move};
pub use parse::parse_diagram;

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    pub id: String,
    /// Slots 0 and 2 carry the overpassing strand when true, 1 and 3 otherwise.
    pub over_even: bool,
}

impl Crossing {
    /// Parity of the over slots: 0 for even, 1 for odd.
    pub fn over_parity(&self) -> usize {
        usize::from(!self.over_even)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    mate: Vec<usize>,
    loops: Vec<String>,
    seeds: Vec<usize>,
    outer: Vec<usize>,
}

#[inline]
pub fn slot(c: usize, s: usize) -> usize {
    4 * c + s % 4
}

#[inline]
pub fn crossing_of(x: usize) -> usize {
    x / 4
}

#[inline]
pub fn position(x: usize) -> usize {
    x % 4
}

/// The slot across the crossing from `x` along the same strand.
#[inline]
pub fn transit(x: usize) -> usize {
    x ^ 2
}

/// The slot (or corner) `k` steps counterclockwise from `x` at the same crossing.
#[inline]
pub fn rotate(x: usize, k: usize) -> usize {
    slot(crossing_of(x), position(x) + k)
}

impl Diagram {
    /// Builds and validates a diagram. `mate` must be a fixed-point-free
    /// involution on `0..4 * crossings.len()`.
    pub fn new(crossings: Vec<Crossing>, mate: Vec<usize>, loops: Vec<String>) -> Result<Self> {
        let n = 4 * crossings.len();
        if mate.len() != n {
            return Err(Error::InvalidArg(format!("expected {n} slot mates, got {}", mate.len())));
        }
        for (x, &y) in mate.iter().enumerate() {
            if y >= n || y == x || mate[y] != x {
                return Err(Error::InvalidArg(format!("slot matching is not a perfect matching at slot {x}")));
            }
        }
        let mut ids = HashSet::new();
        for id in crossings.iter().map(|c| &c.id).chain(&loops) {
            if id.is_empty() || id.contains(char::is_whitespace) || id.contains('.') || !ids.insert(id.clone()) {
                return Err(Error::InvalidArg(format!("bad or duplicate id {id:?}")));
            }
        }
        Ok(Diagram { crossings, mate, loops, seeds: Vec::new(), outer: Vec::new() })
    }

    /// Sets orientation seeds: exit slots, at most one per strand component.
    pub fn with_seeds(mut self, seeds: Vec<usize>) -> Result<Self> {
        let comp = self.strand_component_of_slots();
        let mut seen = HashSet::new();
        for &x in &seeds {
            if x >= self.mate.len() {
                return Err(Error::InvalidArg(format!("seed slot {x} out of range")));
            }
            if !seen.insert(comp[x]) {
                return Err(Error::InvalidArg(format!("two seeds on one component (slot {x})")));
            }
        }
        self.seeds = seeds;
        Ok(self)
    }

    /// Sets outer-face markers (corner indices) used in classical mode.
    pub fn with_outer(mut self, outer: Vec<usize>) -> Result<Self> {
        if let Some(&x) = outer.iter().find(|&&x| x >= self.mate.len()) {
            return Err(Error::InvalidArg(format!("outer corner {x} out of range")));
        }
        self.outer = outer;
        Ok(self)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn num_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn loops(&self) -> &[String] {
        &self.loops
    }

    pub fn num_loops(&self) -> usize {
        self.loops.len()
    }

    pub fn num_slots(&self) -> usize {
        self.mate.len()
    }

    pub fn mate(&self, x: usize) -> usize {
        self.mate[x]
    }

    pub fn seeds(&self) -> &[usize] {
        &self.seeds
    }

    pub fn outer_markers(&self) -> &[usize] {
        &self.outer
    }

    pub fn over_parity(&self, c: usize) -> usize {
        self.crossings[c].over_parity()
    }

    pub fn is_over(&self, x: usize) -> bool {
        position(x) % 2 == self.over_parity(crossing_of(x))
    }

    pub fn crossing_index(&self, id: &str) -> Result<usize> {
        self.crossings.iter().position(|c| c.id == id).ok_or_else(|| Error::UnknownCrossing(id.to_string()))
    }

    pub fn slot_name(&self, x: usize) -> String {
        format!("{}.{}", self.crossings[crossing_of(x)].id, position(x))
    }

    /// Parses `id.k` into a global slot or corner index.
    pub fn parse_slot(&self, text: &str) -> Result<usize> {
        let (id, k) = text
            .rsplit_once('.')
            .ok_or_else(|| Error::InvalidArg(format!("expected <crossing>.<slot>, got {text:?}")))?;
        let k: usize =
            k.parse().ok().filter(|&k| k < 4).ok_or_else(|| Error::InvalidArg(format!("bad slot in {text:?}")))?;
        Ok(slot(self.crossing_index(id)?, k))
    }

    /// Edges as slot pairs `(x, y)` with `x < y`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.mate.len()).filter(|&x| x < self.mate[x]).map(|x| (x, self.mate[x])).collect()
    }

    /// Index into [`Diagram::edges`] for every slot.
    pub fn edge_of_slot(&self) -> Vec<usize> {
        let mut e = vec![0; self.mate.len()];
        for (i, (x, y)) in self.edges().into_iter().enumerate() {
            e[x] = i;
            e[y] = i;
        }
        e
    }

    /// Strand component of each slot; loops get the trailing indices.
    fn strand_component_of_slots(&self) -> Vec<usize> {
        let n = self.mate.len();
        let mut comp = vec![usize::MAX; n];
        let mut k = 0;
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut x = start;
            loop {
                comp[x] = k;
                comp[transit(x)] = k;
                x = self.mate[transit(x)];
                if comp[x] != usize::MAX {
                    break;
                }
            }
            k += 1;
        }
        comp
    }

    /// Number of link components (μ).
    pub fn num_link_components(&self) -> usize {
        let comp = self.strand_component_of_slots();
        comp.iter().max().map_or(0, |m| m + 1) + self.loops.len()
    }

    /// Connected components of the underlying 4-valent graph, as crossing
    /// index lists sorted by lowest crossing. Loops are not included.
    pub fn graph_components(&self) -> Vec<Vec<usize>> {
        let n = self.crossings.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![start];
            let mut members = Vec::new();
            comp[start] = id;
            while let Some(c) = stack.pop() {
                members.push(c);
                for s in 0..4 {
                    let d = crossing_of(self.mate[slot(c, s)]);
                    if comp[d] == usize::MAX {
                        comp[d] = id;
                        stack.push(d);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Number of split pieces (k): graph components plus loops.
    pub fn num_pieces(&self) -> usize {
        self.graph_components().len() + self.loops.len()
    }

    /// For every slot, whether the strand leaves the crossing through it.
    /// Requires one seed per strand component with crossings.
    pub fn orientation(&self) -> Result<Vec<bool>> {
        let n = self.mate.len();
        let mut exit: Vec<Option<bool>> = vec![None; n];
        for &s in &self.seeds {
            let mut x = s;
            while exit[x].is_none() {
                exit[x] = Some(true);
                exit[transit(x)] = Some(false);
                x = transit(self.mate[x]);
            }
        }
        exit.into_iter().map(|e| e.ok_or(Error::MissingOrientation)).collect()
    }

    /// Seeds for every strand component, keeping existing ones.
    pub fn with_default_orientation(&self) -> Diagram {
        let comp = self.strand_component_of_slots();
        let mut seeds = self.seeds.clone();
        let mut have: HashSet<usize> = seeds.iter().map(|&x| comp[x]).collect();
        for x in 0..self.mate.len() {
            if have.insert(comp[x]) {
                seeds.push(x);
            }
        }
        let mut d = self.clone();
        d.seeds = seeds;
        d
    }

    fn fresh_crossing_id(&self, taken: &HashSet<String>) -> String {
        let mut k = self.crossings.len() + self.loops.len() + 1;
        loop {
            let id = k.to_string();
            if !taken.contains(&id) {
                return id;
            }
            k += 1;
        }
    }

    fn ids(&self) -> HashSet<String> {
        self.crossings.iter().map(|c| c.id.clone()).chain(self.loops.iter().cloned()).collect()
    }
}

impl fmt::Display for Diagram {
    /// Writes the line format accepted by [`parse_diagram`]; edges are
    /// labeled `1, 2, ...` in order of their lowest slot.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edge = self.edge_of_slot();
        for (c, x) in self.crossings.iter().enumerate() {
            let labels: Vec<String> = (0..4).map(|s| (edge[slot(c, s)] + 1).to_string()).collect();
            let over = if x.over_even { "even" } else { "odd" };
            writeln!(f, "crossing {} {} over={over}", x.id, labels.join(" "))?;
        }
        for l in &self.loops {
            writeln!(f, "loop {l}")?;
        }
        for &s in &self.seeds {
            writeln!(f, "seed {}", self.slot_name(s))?;
        }
        for &o in &self.outer {
            writeln!(f, "outer {}", self.slot_name(o))?;
        }
        Ok(())
    }
}
