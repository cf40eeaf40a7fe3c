use std::collections::VecDeque;

use super::{rotate, Diagram, Faces};

/// A checkerboard shading: `shaded[r]` for each region index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub shaded: Vec<bool>,
}

impl Coloring {
    pub fn is_shaded(&self, region: usize) -> bool {
        self.shaded[region]
    }

    pub fn swapped(&self) -> Coloring {
        Coloring { shaded: self.shaded.iter().map(|s| !s).collect() }
    }

    pub fn unshaded_regions(&self) -> Vec<usize> {
        (0..self.shaded.len()).filter(|&r| !self.shaded[r]).collect()
    }

    pub fn shaded_regions(&self) -> Vec<usize> {
        (0..self.shaded.len()).filter(|&r| self.shaded[r]).collect()
    }

    /// Whether the two regions beside every edge get opposite shades.
    pub fn is_valid(&self, d: &Diagram, faces: &Faces) -> bool {
        adjacencies(d, faces).iter().all(|&(a, b, _)| self.shaded[a] != self.shaded[b])
    }
}

/// Why no checkerboard shading exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringObstruction {
    /// The edge at this slot has the same region on both sides.
    SameRegion { slot: usize, region: usize },
    /// An odd cycle of regions, consecutive ones sharing an edge.
    OddCycle { regions: Vec<usize> },
}

/// Region pairs across every edge, tagged with a slot of the edge
/// (`usize::MAX` for crossingless loops).
fn adjacencies(d: &Diagram, faces: &Faces) -> Vec<(usize, usize, usize)> {
    let mut out: Vec<(usize, usize, usize)> = d
        .edges()
        .into_iter()
        .map(|(x, _)| (faces.region_of_corner(x), faces.region_of_corner(rotate(x, 3)), x))
        .collect();
    for l in 0..d.num_loops() {
        let [a, b] = faces.loop_regions(l);
        out.push((a, b, usize::MAX));
    }
    out
}

/// Finds a shading, choosing the outer region (or else the lowest region of
/// each connected piece) unshaded; the other shading is [`Coloring::swapped`]
/// per piece.
pub fn checkerboard_color(d: &Diagram, faces: &Faces) -> Result<Coloring, ColoringObstruction> {
    let n = faces.num_regions();
    let adj_list = adjacencies(d, faces);
    let mut adj = vec![Vec::new(); n];
    for &(a, b, x) in &adj_list {
        if a == b {
            return Err(ColoringObstruction::SameRegion { slot: x, region: a });
        }
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let roots = faces.outer.into_iter().chain(0..n);
    for root in roots {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &v in &adj[u] {
                match color[v] {
                    None => {
                        color[v] = Some(!cu);
                        parent[v] = u;
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => return Err(odd_cycle(&parent, u, v)),
                    Some(_) => {}
                }
            }
        }
    }
    Ok(Coloring { shaded: color.into_iter().map(Option::unwrap).collect() })
}

fn odd_cycle(parent: &[usize], u: usize, v: usize) -> ColoringObstruction {
    let path = |mut x: usize| {
        let mut p = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            p.push(x);
        }
        p
    };
    let (pu, pv) = (path(u), path(v));
    let lca = *pu.iter().find(|x| pv.contains(x)).expect("same BFS tree");
    let mut regions: Vec<usize> = pu.iter().copied().take_while(|&x| x != lca).collect();
    regions.push(lca);
    let mut tail: Vec<usize> = pv.iter().copied().take_while(|&x| x != lca).collect();
    tail.reverse();
    regions.extend(tail);
    ColoringObstruction::OddCycle { regions }
}
