use std::collections::HashSet;

use super::{slot, Crossing, Diagram};
use crate::error::{Error, Result};

/// The closed 2-braid diagram with `m` crossings (for `m = 3` the trefoil,
/// for `m = 2` the Hopf link), oriented as a closed braid.
pub fn build_torus2m(m: usize) -> Result<Diagram> {
    if m == 0 {
        return Err(Error::InvalidArg("torus(2,m) needs m >= 1".into()));
    }
    // slots: 0 = NE, 1 = NW, 2 = SW, 3 = SE
    let crossings = (1..=m).map(|i| Crossing { id: i.to_string(), over_even: true }).collect();
    let mut mate = vec![usize::MAX; 4 * m];
    for k in 0..m {
        let next = (k + 1) % m;
        let pairs = [(slot(k, 0), slot(next, 1)), (slot(k, 3), slot(next, 2))];
        for (a, b) in pairs {
            mate[a] = b;
            mate[b] = a;
        }
    }
    let mut seeds = vec![slot(0, 0)];
    if m.is_multiple_of(2) {
        seeds.push(slot(0, 3));
    }
    Diagram::new(crossings, mate, Vec::new())?.with_seeds(seeds)
}

/// One-crossing diagram of the unknot.
pub fn kink() -> Diagram {
    build_torus2m(1).expect("m = 1 is valid")
}

/// Crossingless unknot.
pub fn unknot() -> Diagram {
    Diagram::new(Vec::new(), Vec::new(), vec!["1".to_string()]).expect("valid")
}

fn unique_id(id: &str, taken: &mut HashSet<String>) -> String {
    let mut out = id.to_string();
    while taken.contains(&out) {
        out.push('\'');
    }
    taken.insert(out.clone());
    out
}

/// Places `d2` beside `d1`. Ids of `d2` that clash get primes appended.
/// In classical mode the two outer faces become one region.
pub fn disjoint_union(d1: &Diagram, d2: &Diagram) -> Diagram {
    let mut taken = d1.ids();
    let shift = d1.num_slots();
    let mut crossings = d1.crossings.clone();
    crossings
        .extend(d2.crossings.iter().map(|c| Crossing { id: unique_id(&c.id, &mut taken), over_even: c.over_even }));
    let mut mate = d1.mate.clone();
    mate.extend(d2.mate.iter().map(|&y| y + shift));
    let mut loops = d1.loops.clone();
    loops.extend(d2.loops.iter().map(|l| unique_id(l, &mut taken)));
    let mut seeds = d1.seeds.clone();
    seeds.extend(d2.seeds.iter().map(|&x| x + shift));
    let mut outer = d1.outer.clone();
    outer.extend(d2.outer.iter().map(|&x| x + shift));
    Diagram { crossings, mate, loops, seeds, outer }
}

/// Cuts the edge at slot `x1` of `d1` and the edge at slot `x2` of `d2` and
/// reconnects the ends crosswise, joining the two strands into one.
pub fn connected_sum(d1: &Diagram, x1: usize, d2: &Diagram, x2: usize) -> Result<Diagram> {
    if x1 >= d1.num_slots() || x2 >= d2.num_slots() {
        return Err(Error::InvalidArg("connected sum needs an edge slot on each diagram".into()));
    }
    let mut d = disjoint_union(d1, d2);
    let x2 = x2 + d1.num_slots();
    let (y1, y2) = (d.mate[x1], d.mate[x2]);
    d.mate[x1] = y2;
    d.mate[y2] = x1;
    d.mate[x2] = y1;
    d.mate[y1] = x2;
    // the two summed strands now form one component; keep its first seed
    let comp = d.strand_component_of_slots();
    let mut seen = HashSet::new();
    d.seeds.retain(|&x| seen.insert(comp[x]));
    // outer markers of the two summed pieces now share a component
    let pieces = d.graph_components();
    let piece_of = |x: usize| pieces.iter().position(|p| p.contains(&super::crossing_of(x)));
    let mut seen = HashSet::new();
    d.outer.retain(|&x| seen.insert(piece_of(x)));
    Ok(d)
}
