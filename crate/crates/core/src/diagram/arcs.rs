use super::{slot, transit, Diagram};
use crate::error::{Error, Result};

/// A maximal strand segment broken only where it passes under a crossing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    pub id: String,
    /// Edge indices (into [`Diagram::edges`]) in order along the strand.
    pub edges: Vec<usize>,
    /// The crossingless loop this arc is, if any.
    pub loop_index: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arcs {
    pub arcs: Vec<Arc>,
    arc_of_edge: Vec<usize>,
    edge_of_slot: Vec<usize>,
    loop_arcs: Vec<usize>,
}

impl Arcs {
    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn arc_of_edge(&self, e: usize) -> usize {
        self.arc_of_edge[e]
    }

    pub fn arc_of_slot(&self, x: usize) -> usize {
        self.arc_of_edge[self.edge_of_slot[x]]
    }

    pub fn loop_arc(&self, l: usize) -> usize {
        self.loop_arcs[l]
    }

    pub fn arc_index(&self, id: &str) -> Result<usize> {
        self.arcs.iter().position(|a| a.id == id).ok_or_else(|| Error::UnknownArc(id.to_string()))
    }

    /// `(over, under, under)` arcs at a crossing.
    pub fn at_crossing(&self, d: &Diagram, c: usize) -> (usize, usize, usize) {
        let p = d.over_parity(c);
        (self.arc_of_slot(slot(c, p)), self.arc_of_slot(slot(c, p + 1)), self.arc_of_slot(slot(c, p + 3)))
    }
}

/// Arcs numbered `g1, g2, ...` by lowest edge, crossingless loops last.
pub fn trace_arcs(d: &Diagram) -> Arcs {
    let edges = d.edges();
    let edge_of_slot = d.edge_of_slot();
    let mut arc_of_edge = vec![usize::MAX; edges.len()];
    let mut arcs = Vec::new();
    for e0 in 0..edges.len() {
        if arc_of_edge[e0] != usize::MAX {
            continue;
        }
        // walk backwards to the start of the arc (or around a closed one)
        let (mut x, _) = edges[e0];
        let mut start = x;
        loop {
            let t = transit(x);
            if !d.is_over(x) {
                break;
            }
            let back = d.mate(t);
            if edge_of_slot[back] == e0 {
                break;
            }
            start = back;
            x = back;
        }
        // start is the slot at the tail end of the arc; walk forward
        let id = arcs.len();
        let mut list = Vec::new();
        let mut x = start;
        loop {
            let e = edge_of_slot[x];
            if arc_of_edge[e] != usize::MAX {
                break;
            }
            arc_of_edge[e] = id;
            list.push(e);
            let y = d.mate(x);
            if !d.is_over(y) {
                break;
            }
            x = transit(y);
        }
        arcs.push(Arc { id: String::new(), edges: list, loop_index: None });
    }
    // number by lowest edge
    let mut order: Vec<usize> = (0..arcs.len()).collect();
    order.sort_by_key(|&a| arcs[a].edges.iter().min().copied());
    let mut renumber = vec![0; arcs.len()];
    for (new, &old) in order.iter().enumerate() {
        renumber[old] = new;
    }
    let mut sorted: Vec<Arc> = order.iter().map(|&a| arcs[a].clone()).collect();
    for a in arc_of_edge.iter_mut() {
        *a = renumber[*a];
    }
    let mut loop_arcs = Vec::new();
    for l in 0..d.num_loops() {
        loop_arcs.push(sorted.len());
        sorted.push(Arc { id: String::new(), edges: Vec::new(), loop_index: Some(l) });
    }
    for (i, a) in sorted.iter_mut().enumerate() {
        a.id = format!("g{}", i + 1);
    }
    Arcs { arcs: sorted, arc_of_edge, edge_of_slot, loop_arcs }
}
