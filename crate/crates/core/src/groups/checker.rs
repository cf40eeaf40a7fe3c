use num_bigint::BigInt;
use petgraph::algo::connected_components;
use petgraph::graph::UnGraph;

use crate::abelian::IntMatrix;
use crate::diagram::{rotate, slot, trace_arcs, Coloring, Diagram, Faces, RegionMode};
use crate::error::{Error, Result};
use crate::presentation::{Letter, Word};

/// `γ_U γ_S^-1` for the unshaded and shaded regions beside the edge at `x`.
pub fn arc_element(faces: &Faces, coloring: &Coloring, x: usize) -> Word {
    let (a, b) = faces.flanking(x);
    let (u, s) = if coloring.is_shaded(b) { (a, b) } else { (b, a) };
    Word::new(vec![Letter::pos(u), Letter::neg(s)])
}

/// Image of each arc generator in the first regional core group, measured
/// at the arc's first edge (or across a crossingless loop).
pub fn arc_element_map(d: &Diagram, faces: &Faces, coloring: &Coloring) -> Result<Vec<Word>> {
    if !coloring.is_valid(d, faces) {
        return Err(Error::NotColorable);
    }
    let arcs = trace_arcs(d);
    let edges = d.edges();
    Ok(arcs
        .arcs
        .iter()
        .map(|a| match a.loop_index {
            Some(l) => {
                let [inside, outside] = faces.loop_regions(l);
                let (u, s) = if coloring.is_shaded(outside) { (inside, outside) } else { (outside, inside) };
                Word::new(vec![Letter::pos(u), Letter::neg(s)])
            }
            None => arc_element(faces, coloring, edges[a.edges[0]].0),
        })
        .collect())
}

/// The shaded and unshaded checkerboard graphs: vertices are the regions of
/// one shade, with one edge per crossing joining its two corners of that
/// shade. Vertex weights are region indices.
#[derive(Debug, Clone)]
pub struct CheckerboardGraphs {
    pub shaded: UnGraph<usize, usize>,
    pub unshaded: UnGraph<usize, usize>,
    pub beta_s: usize,
    pub beta_u: usize,
}

pub fn checkerboard_graphs(d: &Diagram, faces: &Faces, coloring: &Coloring) -> Result<CheckerboardGraphs> {
    if !coloring.is_valid(d, faces) {
        return Err(Error::NotColorable);
    }
    let build = |shade: bool| {
        let mut g = UnGraph::<usize, usize>::new_undirected();
        let mut node = vec![None; faces.num_regions()];
        for r in (0..faces.num_regions()).filter(|&r| coloring.is_shaded(r) == shade) {
            node[r] = Some(g.add_node(r));
        }
        for c in 0..d.num_crossings() {
            let k =
                (0..2).map(|i| slot(c, i)).find(|&k| coloring.is_shaded(faces.region_of_corner(k)) == shade).unwrap();
            let a = node[faces.region_of_corner(k)].unwrap();
            let b = node[faces.region_of_corner(rotate(k, 2))].unwrap();
            g.add_edge(a, b, c);
        }
        g
    };
    let shaded = build(true);
    let unshaded = build(false);
    let beta_s = connected_components(&shaded);
    let beta_u = connected_components(&unshaded);
    Ok(CheckerboardGraphs { shaded, unshaded, beta_s, beta_u })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoeritzMatrix {
    /// Unshaded region indices labeling rows and columns of `full`.
    pub regions: Vec<usize>,
    pub full: IntMatrix,
    /// Position in `regions` of the deleted region.
    pub deleted: usize,
    pub reduced: IntMatrix,
}

impl GoeritzMatrix {
    pub fn determinant(&self) -> BigInt {
        self.reduced.determinant()
    }
}

/// Goeritz matrix over the unshaded regions of a classical diagram:
/// off-diagonal entries `-Σ η` over crossings where the two regions are
/// diagonally opposite, diagonal entries making every row sum to zero.
/// `deleted` defaults to the outer region when it is unshaded, otherwise to
/// the lowest unshaded region.
pub fn goeritz_matrix(
    d: &Diagram,
    faces: &Faces,
    coloring: &Coloring,
    deleted: Option<usize>,
) -> Result<GoeritzMatrix> {
    if faces.mode != RegionMode::Classical {
        return Err(Error::NotClassical("goeritz matrix needs classical regions".into()));
    }
    if !coloring.is_valid(d, faces) {
        return Err(Error::NotColorable);
    }
    let regions = coloring.unshaded_regions();
    let index = |r: usize| regions.iter().position(|&x| x == r);
    let n = regions.len();
    let mut m = vec![vec![0i64; n]; n];
    for c in 0..d.num_crossings() {
        let k = (0..2).map(|i| slot(c, i)).find(|&k| !coloring.is_shaded(faces.region_of_corner(k))).unwrap();
        let a = index(faces.region_of_corner(k)).unwrap();
        let b = index(faces.region_of_corner(rotate(k, 2))).unwrap();
        if a != b {
            let eta = i64::from(d.corner_eta(k));
            m[a][b] -= eta;
            m[b][a] -= eta;
        }
    }
    for (i, row) in m.iter_mut().enumerate() {
        let off: i64 = row.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, v)| v).sum();
        row[i] = -off;
    }
    let full = IntMatrix::from_rows(&m);
    let deleted_region = match deleted {
        Some(r) => r,
        None => faces.outer.filter(|&o| !coloring.is_shaded(o)).unwrap_or(regions[0]),
    };
    let deleted = index(deleted_region)
        .ok_or_else(|| Error::UnknownRegion(format!("R{} is not unshaded", deleted_region + 1)))?;
    let reduced = full.minor(deleted, deleted);
    Ok(GoeritzMatrix { regions, full, deleted, reduced })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{build_torus2m, checkerboard_color, disjoint_union, kink, trace_faces};

    fn shade(d: &Diagram) -> (Faces, Coloring) {
        let f = trace_faces(d, RegionMode::Classical).unwrap();
        let c = checkerboard_color(d, &f).unwrap();
        (f, c)
    }

    #[test]
    fn betas() {
        for (d, k) in
            [(build_torus2m(3).unwrap(), 1), (kink(), 1), (disjoint_union(&build_torus2m(3).unwrap(), &kink()), 2)]
        {
            let (f, c) = shade(&d);
            let g = checkerboard_graphs(&d, &f, &c).unwrap();
            assert_eq!(g.beta_s + g.beta_u, k + 1);
            assert_eq!(g.shaded.edge_count(), d.num_crossings());
        }
    }

    #[test]
    fn goeritz_determinants() {
        for m in 1..8 {
            let d = build_torus2m(m).unwrap();
            let (f, c) = shade(&d);
            for col in [c.clone(), c.swapped()] {
                let g = goeritz_matrix(&d, &f, &col, None).unwrap();
                assert_eq!(g.determinant().magnitude().to_string(), m.to_string(), "m={m}");
            }
        }
    }
}
