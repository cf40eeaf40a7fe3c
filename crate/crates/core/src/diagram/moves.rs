use std::collections::{HashMap, HashSet};

use super::{crossing_of, rotate, slot, transit, Crossing, Diagram};
use crate::error::{Error, Result};

/// A Reidemeister move at a site. Slots and corners are global indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Move {
    /// Adds a kink on the edge at `slot`; the kink points to the left or the
    /// right of the direction leaving `slot`.
    R1Add { slot: usize, left: bool, over_even: bool },
    /// Adds a kink to a crossingless loop.
    R1AddLoop { loop_index: usize, over_even: bool },
    /// Removes a crossing that has a monogon corner.
    R1Remove { crossing: usize },
    /// Pushes the edge leaving corner `a` across the edge leaving corner `b`
    /// of the same face, creating two crossings; `a_over` picks which strand
    /// passes over.
    R2Add { a: usize, b: usize, a_over: bool },
    /// Removes the bigon face containing `corner`.
    R2Remove { corner: usize },
    /// Slides a strand across the crossing opposite it in the triangle face
    /// containing `corner`.
    R3 { corner: usize },
}

impl Move {
    /// Parses a move description:
    /// `r1+ <c.s> left|right even|odd`, `r1+loop <loop> even|odd`,
    /// `r1- <c>`, `r2+ <c.k> <c.k> a|b`, `r2- <c.k>`, `r3 <c.k>`.
    pub fn parse(d: &Diagram, text: &str) -> Result<Move> {
        let f: Vec<&str> = text.split_whitespace().collect();
        let bad = || Error::InvalidArg(format!("cannot parse move {text:?}"));
        let flag = |s: &str, yes: &str, no: &str| match s {
            s if s == yes => Ok(true),
            s if s == no => Ok(false),
            _ => Err(bad()),
        };
        match f.as_slice() {
            ["r1+", s, side, over] => Ok(Move::R1Add {
                slot: d.parse_slot(s)?,
                left: flag(side, "left", "right")?,
                over_even: flag(over, "even", "odd")?,
            }),
            ["r1+loop", l, over] => {
                let loop_index =
                    d.loops().iter().position(|x| x == l).ok_or_else(|| Error::UnknownCrossing(l.to_string()))?;
                Ok(Move::R1AddLoop { loop_index, over_even: flag(over, "even", "odd")? })
            }
            ["r1-", c] => Ok(Move::R1Remove { crossing: d.crossing_index(c)? }),
            ["r2+", a, b, which] => {
                Ok(Move::R2Add { a: d.parse_slot(a)?, b: d.parse_slot(b)?, a_over: flag(which, "a", "b")? })
            }
            ["r2-", k] => Ok(Move::R2Remove { corner: d.parse_slot(k)? }),
            ["r3", k] => Ok(Move::R3 { corner: d.parse_slot(k)? }),
            _ => Err(bad()),
        }
    }

    /// Inverse of [`Move::parse`].
    pub fn describe(&self, d: &Diagram) -> String {
        let parity = |e: bool| if e { "even" } else { "odd" };
        match *self {
            Move::R1Add { slot, left, over_even } => {
                format!("r1+ {} {} {}", d.slot_name(slot), if left { "left" } else { "right" }, parity(over_even))
            }
            Move::R1AddLoop { loop_index, over_even } => {
                format!("r1+loop {} {}", d.loops()[loop_index], parity(over_even))
            }
            Move::R1Remove { crossing } => format!("r1- {}", d.crossings()[crossing].id),
            Move::R2Add { a, b, a_over } => {
                format!("r2+ {} {} {}", d.slot_name(a), d.slot_name(b), if a_over { "a" } else { "b" })
            }
            Move::R2Remove { corner } => format!("r2- {}", d.slot_name(corner)),
            Move::R3 { corner } => format!("r3 {}", d.slot_name(corner)),
        }
    }

    /// Reidemeister type: 1, 2 or 3.
    pub fn kind(&self) -> u8 {
        match self {
            Move::R1Add { .. } | Move::R1AddLoop { .. } | Move::R1Remove { .. } => 1,
            Move::R2Add { .. } | Move::R2Remove { .. } => 2,
            Move::R3 { .. } => 3,
        }
    }

    /// Change in the number of crossings.
    pub fn crossing_delta(&self) -> isize {
        match self {
            Move::R1Add { .. } | Move::R1AddLoop { .. } => 1,
            Move::R1Remove { .. } => -1,
            Move::R2Add { .. } => 2,
            Move::R2Remove { .. } => -2,
            Move::R3 { .. } => 0,
        }
    }
}

/// Working copy: old crossings followed by new ones, with some removed.
struct Draft<'a> {
    old: &'a Diagram,
    crossings: Vec<Crossing>,
    mate: Vec<usize>,
    removed: HashSet<usize>,
    dropped_loops: HashSet<usize>,
}

impl<'a> Draft<'a> {
    fn new(old: &'a Diagram) -> Self {
        Draft {
            old,
            crossings: old.crossings.clone(),
            mate: old.mate.clone(),
            removed: HashSet::new(),
            dropped_loops: HashSet::new(),
        }
    }

    fn add_crossing(&mut self, over_even: bool, taken: &mut HashSet<String>) -> usize {
        let id = self.old.fresh_crossing_id(taken);
        taken.insert(id.clone());
        self.crossings.push(Crossing { id, over_even });
        self.mate.extend([usize::MAX; 4]);
        self.crossings.len() - 1
    }

    fn join(&mut self, a: usize, b: usize) {
        self.mate[a] = b;
        self.mate[b] = a;
    }

    /// Deletes the removed crossings, letting strands pass straight through,
    /// and rebuilds orientation seeds and outer markers.
    fn finish(self) -> Result<Diagram> {
        let n = self.crossings.len();
        let keep: Vec<usize> = (0..n).filter(|c| !self.removed.contains(c)).collect();
        let mut new_index = vec![usize::MAX; n];
        for (i, &c) in keep.iter().enumerate() {
            new_index[c] = i;
        }
        let map = |x: usize| -> Option<usize> {
            let c = new_index[crossing_of(x)];
            (c != usize::MAX).then(|| slot(c, x % 4))
        };
        let mut mate = vec![usize::MAX; 4 * keep.len()];
        let mut visited = HashSet::new();
        for &c in &keep {
            for s in 0..4 {
                let x = slot(c, s);
                let mut y = self.mate[x];
                while map(y).is_none() {
                    visited.insert(y);
                    visited.insert(transit(y));
                    y = self.mate[transit(y)];
                }
                mate[map(x).unwrap()] = map(y).unwrap();
            }
        }
        let mut taken: HashSet<String> =
            self.crossings.iter().map(|c| c.id.clone()).chain(self.old.loops.iter().cloned()).collect();
        let mut loops: Vec<String> = self
            .old
            .loops
            .iter()
            .enumerate()
            .filter(|(i, _)| !self.dropped_loops.contains(i))
            .map(|(_, l)| l.clone())
            .collect();
        // strands lying entirely inside removed crossings become loops
        let mut removed: Vec<usize> = self.removed.iter().copied().collect();
        removed.sort_unstable();
        for &c in &removed {
            for s in 0..4 {
                let start = slot(c, s);
                if visited.contains(&start) {
                    continue;
                }
                let mut y = start;
                loop {
                    visited.insert(y);
                    visited.insert(transit(y));
                    y = self.mate[transit(y)];
                    if y == start || visited.contains(&y) {
                        break;
                    }
                }
                let id = self.old.fresh_crossing_id(&taken);
                taken.insert(id.clone());
                loops.push(id);
            }
        }
        let crossings = keep.iter().map(|&c| self.crossings[c].clone()).collect();
        let d = Diagram::new(crossings, mate, loops)?;

        // seeds: follow each old seed forward until a surviving exit slot
        let old = self.old;
        let mut seeds = Vec::new();
        for &s in &old.seeds {
            let mut x = s;
            loop {
                if let Some(y) = map(x) {
                    seeds.push(y);
                    break;
                }
                x = transit(old.mate[x]);
                if x == s {
                    break;
                }
            }
        }
        let outer = old.outer.iter().filter_map(|&x| map(x)).collect();
        let mut d = d.with_outer(outer)?;
        let comp = d.strand_component_of_slots();
        let mut seen = HashSet::new();
        seeds.retain(|&x| seen.insert(comp[x]));
        d.seeds = seeds;
        Ok(d)
    }
}

fn illegal(msg: impl Into<String>) -> Error {
    Error::IllegalSite(msg.into())
}

fn monogon_corner(d: &Diagram, c: usize) -> Option<usize> {
    (0..4).map(|i| slot(c, i)).find(|&x| d.mate(x) == rotate(x, 1))
}

/// Corners of the face containing `corner`, in walk order starting there.
fn face_walk(d: &Diagram, corner: usize) -> Vec<usize> {
    let mut out = vec![corner];
    let mut x = rotate(d.mate(corner), 3);
    while x != corner {
        out.push(x);
        x = rotate(d.mate(x), 3);
    }
    out
}

fn check_slot(d: &Diagram, x: usize) -> Result<()> {
    if x < d.num_slots() {
        Ok(())
    } else {
        Err(illegal(format!("no slot {x}")))
    }
}

/// Applies a move, returning the new diagram. Crossing ids of surviving
/// crossings are kept; new crossings and loops get fresh numeric ids.
pub fn apply_move(d: &Diagram, mv: &Move) -> Result<Diagram> {
    let mut draft = Draft::new(d);
    let mut taken = d.ids();
    match *mv {
        Move::R1Add { slot: a, left, over_even } => {
            check_slot(d, a)?;
            let b = d.mate(a);
            let c = draft.add_crossing(over_even, &mut taken);
            draft.join(a, slot(c, 0));
            if left {
                draft.join(slot(c, 2), slot(c, 3));
                draft.join(slot(c, 1), b);
            } else {
                draft.join(slot(c, 2), slot(c, 1));
                draft.join(slot(c, 3), b);
            }
        }
        Move::R1AddLoop { loop_index, over_even } => {
            if loop_index >= d.num_loops() {
                return Err(illegal(format!("no loop {loop_index}")));
            }
            draft.dropped_loops.insert(loop_index);
            let c = draft.add_crossing(over_even, &mut taken);
            draft.join(slot(c, 0), slot(c, 1));
            draft.join(slot(c, 2), slot(c, 3));
        }
        Move::R1Remove { crossing } => {
            if crossing >= d.num_crossings() {
                return Err(illegal(format!("no crossing {crossing}")));
            }
            if monogon_corner(d, crossing).is_none() {
                return Err(illegal(format!("crossing {} has no monogon", d.crossings[crossing].id)));
            }
            draft.removed.insert(crossing);
        }
        Move::R2Add { a, b, a_over } => {
            check_slot(d, a)?;
            check_slot(d, b)?;
            if !face_walk(d, a).contains(&b) {
                return Err(illegal("corners lie in different faces"));
            }
            if a == b || d.mate(a) == b {
                return Err(illegal("both corners leave along the same edge"));
            }
            let (x1, y1, x2, y2) = (a, d.mate(a), b, d.mate(b));
            let p = draft.add_crossing(!a_over, &mut taken);
            let q = draft.add_crossing(!a_over, &mut taken);
            draft.join(x1, slot(p, 3));
            draft.join(slot(p, 1), slot(q, 1));
            draft.join(slot(q, 3), y1);
            draft.join(x2, slot(q, 0));
            draft.join(slot(q, 2), slot(p, 0));
            draft.join(slot(p, 2), y2);
        }
        Move::R2Remove { corner } => {
            check_slot(d, corner)?;
            let walk = face_walk(d, corner);
            if walk.len() != 2 || crossing_of(walk[0]) == crossing_of(walk[1]) {
                return Err(illegal("corner is not in a bigon between two crossings"));
            }
            let (pi, qs) = (corner, d.mate(corner));
            let qj = walk[1];
            let strand1 = d.is_over(pi) && d.is_over(qs);
            let strand2 = d.is_over(rotate(pi, 1)) && d.is_over(qj);
            if !(strand1 || strand2) {
                return Err(illegal("no strand passes over at both bigon crossings"));
            }
            draft.removed.insert(crossing_of(pi));
            draft.removed.insert(crossing_of(qj));
        }
        Move::R3 { corner } => {
            check_slot(d, corner)?;
            let walk = face_walk(d, corner);
            let tri: Vec<usize> = walk.iter().map(|&k| crossing_of(k)).collect();
            if walk.len() != 3 || tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2] {
                return Err(illegal("corner is not in a triangle with three distinct crossings"));
            }
            // side i runs from walk[i] to walk[i+1]
            let sides: Vec<(usize, usize)> = (0..3).map(|i| (walk[i], d.mate(walk[i]))).collect();
            if !sides.iter().any(|&(t, a)| d.is_over(t) && d.is_over(a)) {
                return Err(illegal("no strand passes over at both of its triangle crossings"));
            }
            // each side's outer ends move: the start port (t + 2 at X) now
            // attaches at a, the end port (a + 2 at Y) at t
            let mut port = HashMap::new();
            for &(t, a) in &sides {
                port.insert(transit(t), a);
                port.insert(transit(a), t);
                draft.join(transit(a), transit(t));
            }
            for (&u, &new_u) in &port {
                let v = d.mate(u);
                draft.join(new_u, port.get(&v).copied().unwrap_or(v));
            }
        }
    }
    draft.finish()
}

/// Every legal move site of the diagram, in a deterministic order.
pub fn legal_moves(d: &Diagram) -> Vec<Move> {
    let mut out = Vec::new();
    for x in 0..d.num_slots() {
        for left in [false, true] {
            for over_even in [false, true] {
                out.push(Move::R1Add { slot: x, left, over_even });
            }
        }
    }
    for l in 0..d.num_loops() {
        for over_even in [false, true] {
            out.push(Move::R1AddLoop { loop_index: l, over_even });
        }
    }
    for c in 0..d.num_crossings() {
        if monogon_corner(d, c).is_some() {
            out.push(Move::R1Remove { crossing: c });
        }
    }
    let mut seen_faces = HashSet::new();
    let mut face_of: HashMap<usize, Vec<usize>> = HashMap::new();
    for x in 0..d.num_slots() {
        if seen_faces.contains(&x) {
            continue;
        }
        let walk = face_walk(d, x);
        seen_faces.extend(walk.iter().copied());
        face_of.insert(x, walk);
    }
    let mut starts: Vec<usize> = face_of.keys().copied().collect();
    starts.sort_unstable();
    for s in starts {
        let walk = &face_of[&s];
        for &a in walk {
            for &b in walk {
                if a != b && d.mate(a) != b {
                    for a_over in [false, true] {
                        out.push(Move::R2Add { a, b, a_over });
                    }
                }
            }
        }
        for &k in walk {
            for mv in [Move::R2Remove { corner: k }, Move::R3 { corner: k }] {
                if apply_move(d, &mv).is_ok() {
                    out.push(mv);
                }
            }
        }
    }
    out
}
