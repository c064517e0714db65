//! Three-coloured triangular-lattice tori and the folded prism decomposition.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{ConstructionError, GateFamily};
use crate::phasepoly::{Hyperedge, PhaseGateSet, SymmetrySpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
    Green,
}

impl Color {
    fn from_index(i: usize) -> Color {
        [Color::Red, Color::Blue, Color::Green][i % 3]
    }

    pub fn label(self) -> &'static str {
        match self {
            Color::Red => "X_R",
            Color::Blue => "X_B",
            Color::Green => "X_G",
        }
    }
}

/// Triangular lattice in axial coordinates with periods `lx`, `ly`.
///
/// Site `(x, y)` has index `y * lx + x`. Each rhombus `(x, y)` holds the
/// triangles `{(x,y), (x+1,y), (x,y+1)}` and `{(x+1,y), (x,y+1), (x+1,y+1)}`.
/// The colouring `(x - y) mod 3` is proper when both periods are multiples
/// of 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangularTorus {
    pub lx: usize,
    pub ly: usize,
}

impl TriangularTorus {
    pub fn new(lx: usize, ly: usize) -> Result<Self, ConstructionError> {
        if lx < 3 || ly < 3 || lx % 3 != 0 || ly % 3 != 0 {
            return Err(ConstructionError::Geometry(alloc::format!(
                "triangular torus {lx}x{ly}: both periods must be positive multiples of 3"
            )));
        }
        Ok(TriangularTorus { lx, ly })
    }

    pub fn n_sites(&self) -> usize {
        self.lx * self.ly
    }

    pub fn index(&self, x: isize, y: isize) -> usize {
        let x = x.rem_euclid(self.lx as isize) as usize;
        let y = y.rem_euclid(self.ly as isize) as usize;
        y * self.lx + x
    }

    pub fn coords(&self, i: usize) -> (usize, usize) {
        (i % self.lx, i / self.lx)
    }

    pub fn color(&self, i: usize) -> Color {
        let (x, y) = self.coords(i);
        Color::from_index(x + 3 * self.ly - y)
    }

    /// The two triangles of rhombus `(x, y)`.
    pub fn rhombus(&self, x: isize, y: isize) -> [Hyperedge; 2] {
        let p = |dx, dy| self.index(x + dx, y + dy);
        [Hyperedge::triple(p(0, 0), p(1, 0), p(0, 1)), Hyperedge::triple(p(1, 0), p(0, 1), p(1, 1))]
    }

    pub fn triangles(&self) -> Vec<Hyperedge> {
        let mut t = Vec::with_capacity(2 * self.n_sites());
        for y in 0..self.ly as isize {
            for x in 0..self.lx as isize {
                t.extend(self.rhombus(x, y));
            }
        }
        t
    }

    /// The six neighbours of a site in cyclic order; consecutive entries span
    /// a triangle with the site.
    pub fn link(&self, i: usize) -> [usize; 6] {
        let (x, y) = self.coords(i);
        let (x, y) = (x as isize, y as isize);
        [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)].map(|(dx, dy)| self.index(x + dx, y + dy))
    }

    pub fn entangler(&self) -> Result<PhaseGateSet, ConstructionError> {
        Ok(PhaseGateSet::from_edges(self.n_sites(), self.triangles())?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurfaceSite {
    pub x: usize,
    pub y: usize,
    /// Rows `0..L` are the top sheet, rows `L..2L` the folded-under one.
    pub top: bool,
    pub color: Color,
}

/// One box of the folded surface: a top rhombus, its mirror image and the
/// four side walls between them.
#[derive(Debug, Clone)]
pub struct Prism {
    pub cell: (usize, usize),
    pub faces: Vec<Hyperedge>,
}

/// An `L x 2L` triangular torus read as two `L x L` sheets glued along two
/// seams.
///
/// The fold `φ(x, y) = (x + y, -1 - y)` sends row `y` of the top sheet to row
/// `2L-1-y`, maps triangles to triangles and raises every colour by one. Each
/// top rhombus with `y ≤ L-2` becomes a prism of 12 faces; wall faces shared
/// by neighbouring prisms cancel, and the walls on rows `0` and `L-1` are
/// exactly the lattice triangles along the two seams.
#[derive(Debug, Clone)]
pub struct FoldedSurface {
    pub torus: TriangularTorus,
    pub sites: Vec<SurfaceSite>,
    pub prisms: Vec<Prism>,
}

impl FoldedSurface {
    /// `l` must be a multiple of 3; `l = 3` gives 18 sites, `l = 6` gives 72.
    pub fn new(l: usize) -> Result<Self, ConstructionError> {
        let torus = TriangularTorus::new(l, 2 * l)?;
        let sites = (0..torus.n_sites())
            .map(|i| {
                let (x, y) = torus.coords(i);
                SurfaceSite { x, y, top: y < l, color: torus.color(i) }
            })
            .collect();
        let mut s = FoldedSurface { torus, sites, prisms: Vec::new() };
        for y in 0..l - 1 {
            for x in 0..l {
                let faces = s.prism_faces(x as isize, y as isize);
                s.prisms.push(Prism { cell: (x, y), faces });
            }
        }
        Ok(s)
    }

    pub fn side(&self) -> usize {
        self.torus.lx
    }

    pub fn n_sites(&self) -> usize {
        self.torus.n_sites()
    }

    pub fn fold(&self, i: usize) -> usize {
        let (x, y) = self.torus.coords(i);
        self.torus.index(x as isize + y as isize, -1 - y as isize)
    }

    fn prism_faces(&self, x: isize, y: isize) -> Vec<Hyperedge> {
        let t = &self.torus;
        let [a, b, c, d] = [t.index(x, y), t.index(x + 1, y), t.index(x, y + 1), t.index(x + 1, y + 1)];
        let mut faces: Vec<Hyperedge> = t.rhombus(x, y).to_vec();
        for f in t.rhombus(x, y) {
            let q = f.qubits();
            faces.push(Hyperedge::triple(self.fold(q[0]), self.fold(q[1]), self.fold(q[2])));
        }
        for (p, q) in [(a, b), (a, c), (b, d), (c, d)] {
            // Split the wall p q φq φp along the diagonal that keeps both
            // triangles properly coloured.
            let (p, q) = if self.colour_step(p, q) { (p, q) } else { (q, p) };
            let (fp, fq) = (self.fold(p), self.fold(q));
            faces.push(Hyperedge::triple(p, q, fq));
            faces.push(Hyperedge::triple(p, fp, fq));
        }
        faces
    }

    fn colour_step(&self, p: usize, q: usize) -> bool {
        let c = |i| self.torus.color(i) as usize;
        c(q) == (c(p) + 1) % 3
    }

    pub fn symmetries(&self) -> [SymmetrySpec; 3] {
        color_symmetries(&self.torus)
    }

    pub fn family(&self) -> Result<GateFamily, ConstructionError> {
        Ok(GateFamily {
            label: alloc::format!("hypergraph-{}x{}x2", self.side(), self.side()),
            n_qubits: self.n_sites(),
            entangler: hypergraph_entangler(self)?,
            gates: w_gates_2d(self)?,
            symmetries: self.symmetries().to_vec(),
        })
    }
}

pub fn color_symmetries(t: &TriangularTorus) -> [SymmetrySpec; 3] {
    [Color::Red, Color::Blue, Color::Green]
        .map(|c| SymmetrySpec::new(c.label(), (0..t.n_sites()).filter(|&i| t.color(i) == c)))
}

/// One CCZ per triangle of the closed surface.
pub fn hypergraph_entangler(s: &FoldedSurface) -> Result<PhaseGateSet, ConstructionError> {
    s.torus.entangler()
}

/// `W_p` = the 12 faces of prism `p`.
pub fn w_gates_2d(s: &FoldedSurface) -> Result<Vec<PhaseGateSet>, ConstructionError> {
    s.prisms
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let distinct: BTreeSet<&Hyperedge> = p.faces.iter().collect();
            if p.faces.len() != 12 || distinct.len() != 12 {
                return Err(ConstructionError::PrismFaces { prism: i, faces: distinct.len() });
            }
            Ok(PhaseGateSet::from_edges(s.n_sites(), p.faces.iter().cloned())?)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coloring_is_proper() {
        let t = TriangularTorus::new(6, 9).unwrap();
        for tri in t.triangles() {
            let cs: BTreeSet<Color> = tri.qubits().iter().map(|&i| t.color(i)).collect();
            assert_eq!(cs.len(), 3);
        }
        assert!(TriangularTorus::new(4, 6).is_err());
    }

    #[test]
    fn fold_shifts_colour_and_swaps_sheets() {
        let s = FoldedSurface::new(6).unwrap();
        for i in 0..s.n_sites() {
            let f = s.fold(i);
            assert_eq!(s.torus.color(f) as usize, (s.torus.color(i) as usize + 1) % 3);
            assert_ne!(s.sites[i].top, s.sites[f].top);
        }
    }

    #[test]
    fn prism_faces_are_triangles_and_properly_coloured() {
        let s = FoldedSurface::new(3).unwrap();
        assert_eq!(s.prisms.len(), 6);
        for p in &s.prisms {
            assert_eq!(p.faces.len(), 12);
            let sites: BTreeSet<usize> = p.faces.iter().flat_map(|f| f.qubits().iter().copied()).collect();
            assert_eq!(sites.len(), 8);
            for f in &p.faces {
                let cs: BTreeSet<Color> = f.qubits().iter().map(|&i| s.torus.color(i)).collect();
                assert_eq!(cs.len(), 3);
            }
        }
    }

    #[test]
    fn link_spans_six_triangles() {
        let t = TriangularTorus::new(3, 3).unwrap();
        let tris: BTreeSet<Hyperedge> = t.triangles().into_iter().collect();
        for g in 0..t.n_sites() {
            let l = t.link(g);
            for j in 0..6 {
                assert!(tris.contains(&Hyperedge::triple(g, l[j], l[(j + 1) % 6])));
            }
        }
    }
}
