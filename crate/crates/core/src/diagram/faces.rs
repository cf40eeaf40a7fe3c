use super::{crossing_of, position, rotate, slot, Diagram};
use crate::error::{Error, Result};

/// How regions are formed from the faces of the diagram's ribbon surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegionMode {
    /// Every face is a region (the faces of the abstract link diagram).
    Virtual,
    /// Planar pieces drawn side by side: the outer faces of all split pieces
    /// form a single region. Requires genus 0 everywhere.
    Classical,
}

impl RegionMode {
    /// Classical when every component is planar, virtual otherwise.
    pub fn natural(d: &Diagram) -> RegionMode {
        if trace_faces(d, RegionMode::Classical).is_ok() {
            RegionMode::Classical
        } else {
            RegionMode::Virtual
        }
    }
}

/// One boundary component of the ribbon surface: the corners met while
/// walking with the face on the left, or a side of a crossingless loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub corners: Vec<usize>,
    /// `(loop index, inside)` for the two faces of a crossingless loop.
    pub loop_side: Option<(usize, bool)>,
}

impl Face {
    fn sort_key(&self) -> (usize, usize, bool) {
        match self.loop_side {
            Some((l, inside)) => (usize::MAX, l, !inside),
            None => (self.corners[0], 0, false),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    pub id: String,
    /// Constituent faces; more than one only for a merged outer region.
    pub faces: Vec<Face>,
}

impl Region {
    /// All corners, face by face, each face starting at its lowest corner.
    pub fn corners(&self) -> impl Iterator<Item = usize> + '_ {
        self.faces.iter().flat_map(|f| f.corners.iter().copied())
    }

    pub fn num_corners(&self) -> usize {
        self.faces.iter().map(|f| f.corners.len()).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Faces {
    pub mode: RegionMode,
    pub regions: Vec<Region>,
    /// Genus of each graph component followed by a 0 for each loop.
    pub genus: Vec<usize>,
    /// The merged outer region in classical mode.
    pub outer: Option<usize>,
    corner_region: Vec<usize>,
    loop_regions: Vec<[usize; 2]>,
}

impl Faces {
    pub fn num_regions(&self) -> usize {
        self.regions.len()
    }

    pub fn region_of_corner(&self, corner: usize) -> usize {
        self.corner_region[corner]
    }

    /// `[inside, outside]` regions of loop `l`.
    pub fn loop_regions(&self, l: usize) -> [usize; 2] {
        self.loop_regions[l]
    }

    /// Regions to the left and right of the edge at slot `x`, looking out of
    /// the crossing along it.
    pub fn flanking(&self, x: usize) -> (usize, usize) {
        (self.corner_region[x], self.corner_region[rotate(x, 3)])
    }

    pub fn region_index(&self, id: &str) -> Result<usize> {
        self.regions.iter().position(|r| r.id == id).ok_or_else(|| Error::UnknownRegion(id.to_string()))
    }

    pub fn total_genus(&self) -> usize {
        self.genus.iter().sum()
    }
}

/// Traces the boundary walks of the rotation system and groups them into
/// regions. Regions are numbered `R1, R2, ...` by lowest corner, with
/// regions made only of loop faces last.
pub fn trace_faces(d: &Diagram, mode: RegionMode) -> Result<Faces> {
    let n = d.num_slots();
    let mut face_of = vec![usize::MAX; n];
    let mut faces: Vec<Face> = Vec::new();
    for start in 0..n {
        if face_of[start] != usize::MAX {
            continue;
        }
        let mut corners = Vec::new();
        let mut x = start;
        while face_of[x] == usize::MAX {
            face_of[x] = faces.len();
            corners.push(x);
            x = rotate(d.mate(x), 3);
        }
        faces.push(Face { corners, loop_side: None });
    }
    for l in 0..d.num_loops() {
        faces.push(Face { corners: Vec::new(), loop_side: Some((l, true)) });
        faces.push(Face { corners: Vec::new(), loop_side: Some((l, false)) });
    }

    let components = d.graph_components();
    let mut comp_of = vec![0; d.num_crossings()];
    for (k, members) in components.iter().enumerate() {
        for &c in members {
            comp_of[c] = k;
        }
    }
    let mut comp_faces: Vec<Vec<usize>> = vec![Vec::new(); components.len()];
    for (f, face) in faces.iter().enumerate() {
        if face.loop_side.is_none() {
            comp_faces[comp_of[crossing_of(face.corners[0])]].push(f);
        }
    }
    let mut genus = Vec::new();
    for (k, members) in components.iter().enumerate() {
        // V - E + F = 2 - 2g with E = 2V
        let v = members.len() as isize;
        let f = comp_faces[k].len() as isize;
        let twice = 2 + v - f;
        debug_assert!(twice >= 0 && twice % 2 == 0);
        genus.push((twice / 2) as usize);
    }
    genus.extend(std::iter::repeat_n(0, d.num_loops()));

    // group faces into regions
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut outer_group = None;
    match mode {
        RegionMode::Virtual => groups.extend((0..faces.len()).map(|f| vec![f])),
        RegionMode::Classical => {
            if let Some(k) = (0..components.len()).find(|&k| genus[k] > 0) {
                return Err(Error::NotClassical(d.crossings()[components[k][0]].id.clone()));
            }
            let mut outer = Vec::new();
            for (k, fs) in comp_faces.iter().enumerate() {
                let marked = d.outer_markers().iter().find(|&&o| comp_of[crossing_of(o)] == k).map(|&o| face_of[o]);
                let chosen = marked.unwrap_or_else(|| {
                    // largest face, ties to the lowest corner
                    *fs.iter()
                        .max_by_key(|&&f| (faces[f].corners.len(), std::cmp::Reverse(faces[f].corners[0])))
                        .unwrap()
                });
                outer.push(chosen);
            }
            for (f, face) in faces.iter().enumerate() {
                if face.loop_side.is_some_and(|(_, inside)| !inside) {
                    outer.push(f);
                }
            }
            outer.sort_by_key(|&f| faces[f].sort_key());
            for f in 0..faces.len() {
                if !outer.contains(&f) {
                    groups.push(vec![f]);
                }
            }
            if !outer.is_empty() {
                outer_group = Some(groups.len());
                groups.push(outer);
            }
        }
    }
    let mut order: Vec<usize> = (0..groups.len()).collect();
    order.sort_by_key(|&g| groups[g].iter().map(|&f| faces[f].sort_key()).min());

    let mut corner_region = vec![usize::MAX; n];
    let mut loop_regions = vec![[usize::MAX; 2]; d.num_loops()];
    let mut regions = Vec::with_capacity(groups.len());
    let mut outer = None;
    for (r, &g) in order.iter().enumerate() {
        if Some(g) == outer_group {
            outer = Some(r);
        }
        for &f in &groups[g] {
            for &x in &faces[f].corners {
                corner_region[x] = r;
            }
            if let Some((l, inside)) = faces[f].loop_side {
                loop_regions[l][usize::from(!inside)] = r;
            }
        }
        regions
            .push(Region { id: format!("R{}", r + 1), faces: groups[g].iter().map(|&f| faces[f].clone()).collect() });
    }
    Ok(Faces { mode, regions, genus, outer, corner_region, loop_regions })
}

/// The four corners at a crossing labeled as in the standard picture, with
/// `V` the corner following an over slot counterclockwise. `V, X` carry
/// crossing index -1 and `W, Y` carry +1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CornerLabels {
    pub v: usize,
    pub w: usize,
    pub x: usize,
    pub y: usize,
}

pub fn classify_corners(d: &Diagram, crossing: usize) -> Result<CornerLabels> {
    if crossing >= d.num_crossings() {
        return Err(Error::UnknownCrossing(crossing.to_string()));
    }
    let p = d.over_parity(crossing);
    Ok(CornerLabels {
        v: slot(crossing, p),
        y: slot(crossing, p + 1),
        x: slot(crossing, p + 2),
        w: slot(crossing, p + 3),
    })
}

impl Diagram {
    /// Crossing index of a corner: -1 when the corner follows an over slot.
    pub fn corner_eta(&self, corner: usize) -> i32 {
        if position(corner) % 2 == self.over_parity(crossing_of(corner)) {
            -1
        } else {
            1
        }
    }
}
