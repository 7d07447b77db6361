//! Lattice polytopes: exact hulls, facet descriptions, lattice points,
//! face lattices and unimodular equivalence.

mod faces;
mod hull;
mod points;
mod unimodular;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;

pub use faces::FVector;
pub use hull::{dot, Facet};
pub use unimodular::{
    unimodular_equivalent, unimodular_equivalent_with_budget, Equivalence,
    DEFAULT_SEARCH_BUDGET,
};

pub type Point = Vec<i64>;

/// Facet description `{x : ⟨a_F, x⟩ ≤ c_F}` with primitive normals, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HRep {
    pub facets: Vec<Facet>,
}

/// A lattice polytope with its irredundant, sorted vertex list.
#[derive(Clone, Debug)]
pub struct LatticePolytope {
    ambient_dim: usize,
    dim: usize,
    vertices: Vec<Point>,
    /// Inequalities in ambient coordinates; together with `equations` they
    /// cut out the polytope. For full-dimensional polytopes these are the
    /// facets.
    inequalities: Vec<Facet>,
    /// `⟨a, x⟩ = c` equations of the affine hull (empty when full-dimensional).
    equations: Vec<Facet>,
}

impl PartialEq for LatticePolytope {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.vertices == other.vertices
    }
}

impl Eq for LatticePolytope {}

/// Wire format `{"ambient_dim": m, "vertices": [[...], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PolytopeSpec {
    pub ambient_dim: usize,
    pub vertices: Vec<Point>,
}

impl LatticePolytope {
    /// Convex hull of a nonempty list of integer points.
    pub fn hull(points: &[Point]) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptyInput)?;
        let m = first.len();
        if let Some(bad) = points.iter().find(|p| p.len() != m) {
            return Err(Error::DimensionMismatch(m, bad.len()));
        }
        let mut pts: Vec<Point> = points.to_vec();
        pts.sort();
        pts.dedup();

        let basis = linalg::affine_basis(&pts)?;
        let dim = basis.len() - 1;
        if dim == 0 {
            let p = pts[0].clone();
            let equations = (0..m)
                .map(|i| {
                    let mut e = vec![0; m];
                    e[i] = 1;
                    Facet { normal: e, offset: p[i] }
                })
                .collect();
            return Ok(LatticePolytope {
                ambient_dim: m,
                dim: 0,
                vertices: vec![p],
                inequalities: Vec::new(),
                equations,
            });
        }
        if dim == m {
            let facets = hull::facets_full_dimensional(&pts)?;
            let vertices = hull::vertex_indices(&pts, &facets)
                .into_iter()
                .map(|k| pts[k].clone())
                .collect();
            return Ok(LatticePolytope {
                ambient_dim: m,
                dim,
                vertices,
                inequalities: facets,
                equations: Vec::new(),
            });
        }

        // Lower-dimensional: project onto coordinates on which the affine
        // hull projects injectively, hull there, and lift back.
        let origin = &pts[basis[0]];
        let diffs: Vec<Vec<i64>> = basis[1..]
            .iter()
            .map(|&k| pts[k].iter().zip(origin).map(|(a, b)| a - b).collect())
            .collect();
        let mut coords: Vec<usize> = Vec::with_capacity(dim);
        for c in 0..m {
            let mut trial = coords.clone();
            trial.push(c);
            let cols: Vec<Vec<i64>> = diffs
                .iter()
                .map(|r| trial.iter().map(|&j| r[j]).collect())
                .collect();
            if linalg::rank(&cols)? == trial.len() {
                coords = trial;
                if coords.len() == dim {
                    break;
                }
            }
        }
        let projected: Vec<Point> = pts
            .iter()
            .map(|p| coords.iter().map(|&j| p[j]).collect())
            .collect();
        let facets = hull::facets_full_dimensional(&projected)?;
        let vertices = hull::vertex_indices(&projected, &facets)
            .into_iter()
            .map(|k| pts[k].clone())
            .collect();
        let inequalities = facets
            .into_iter()
            .map(|f| {
                let mut normal = vec![0; m];
                for (k, &j) in coords.iter().enumerate() {
                    normal[j] = f.normal[k];
                }
                Facet { normal, offset: f.offset }
            })
            .collect();
        let equations = linalg::null_space_basis(&diffs, m)?
            .into_iter()
            .map(|a| {
                let offset = dot(&a, origin);
                Facet { normal: a, offset }
            })
            .collect();
        Ok(LatticePolytope {
            ambient_dim: m,
            dim,
            vertices,
            inequalities,
            equations,
        })
    }

    pub fn from_spec(spec: &PolytopeSpec) -> Result<Self> {
        if let Some(bad) = spec.vertices.iter().find(|v| v.len() != spec.ambient_dim) {
            return Err(Error::DimensionMismatch(spec.ambient_dim, bad.len()));
        }
        Self::hull(&spec.vertices)
    }

    pub fn to_spec(&self) -> PolytopeSpec {
        PolytopeSpec {
            ambient_dim: self.ambient_dim,
            vertices: self.vertices.clone(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.ambient_dim
    }

    pub(crate) fn require_full_dimensional(&self) -> Result<()> {
        if self.is_full_dimensional() {
            Ok(())
        } else {
            Err(Error::NotFullDimensional {
                dim: self.dim,
                ambient: self.ambient_dim,
            })
        }
    }

    /// Irredundant facets with primitive normals, sorted.
    pub fn h_representation(&self) -> Result<HRep> {
        self.require_full_dimensional()?;
        Ok(HRep {
            facets: self.inequalities.clone(),
        })
    }

    pub fn facets(&self) -> &[Facet] {
        &self.inequalities
    }

    pub fn facet_count(&self) -> usize {
        self.inequalities.len()
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.contains_dilated(x, 1)
    }

    /// `x ∈ nP`.
    pub fn contains_dilated(&self, x: &[i64], n: i64) -> bool {
        self.inequalities.iter().all(|f| dot(&f.normal, x) <= n * f.offset)
            && self.equations.iter().all(|f| dot(&f.normal, x) == n * f.offset)
    }

    /// Vertex indices lying on each facet.
    pub fn incidences(&self) -> Vec<FixedBitSet> {
        let n = self.vertices.len();
        self.inequalities
            .iter()
            .map(|f| {
                let mut set = FixedBitSet::with_capacity(n);
                for (k, v) in self.vertices.iter().enumerate() {
                    if f.slack(v) == 0 {
                        set.insert(k);
                    }
                }
                set
            })
            .collect()
    }

    /// `nP ∩ Z^m`, sorted.
    pub fn lattice_points(&self, n: u32) -> Vec<Point> {
        let mut out = Vec::new();
        points::enumerate(self, n, false, &mut |x| out.push(x.to_vec()));
        out
    }

    pub fn count_lattice_points(&self, n: u32) -> u64 {
        let mut count = 0u64;
        points::enumerate(self, n, false, &mut |_| count += 1);
        count
    }

    /// Integer points of `nP` with every facet inequality strict.
    pub fn interior_lattice_points(&self, n: u32) -> Result<Vec<Point>> {
        self.require_full_dimensional()?;
        let mut out = Vec::new();
        points::enumerate(self, n, true, &mut |x| out.push(x.to_vec()));
        Ok(out)
    }

    pub fn count_interior_lattice_points(&self, n: u32) -> Result<u64> {
        self.require_full_dimensional()?;
        let mut count = 0u64;
        points::enumerate(self, n, true, &mut |_| count += 1);
        Ok(count)
    }

    pub fn f_vector(&self) -> Result<FVector> {
        self.require_full_dimensional()?;
        Ok(faces::f_vector(self))
    }

    /// Image under `x ↦ U x + t`.
    pub fn transform(&self, matrix: &[Vec<i64>], translation: &[i64]) -> Result<Self> {
        let image: Vec<Point> = self
            .vertices
            .iter()
            .map(|v| {
                matrix
                    .iter()
                    .zip(translation)
                    .map(|(row, t)| dot(row, v) + t)
                    .collect()
            })
            .collect();
        Self::hull(&image)
    }

    /// `-P`.
    pub fn negate(&self) -> Self {
        let mut vertices: Vec<Point> = self
            .vertices
            .iter()
            .map(|v| v.iter().map(|x| -x).collect())
            .collect();
        vertices.sort();
        let flip = |f: &Facet| Facet {
            normal: f.normal.iter().map(|x| -x).collect(),
            offset: f.offset,
        };
        let mut inequalities: Vec<Facet> = self.inequalities.iter().map(flip).collect();
        inequalities.sort();
        LatticePolytope {
            ambient_dim: self.ambient_dim,
            dim: self.dim,
            vertices,
            inequalities,
            equations: self.equations.iter().map(flip).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square(r: i64) -> LatticePolytope {
        LatticePolytope::hull(&[vec![-r, -r], vec![-r, r], vec![r, -r], vec![r, r]]).unwrap()
    }

    fn brute_points(p: &LatticePolytope, n: u32, bound: i64) -> Vec<Point> {
        let m = p.ambient_dim();
        let mut out = Vec::new();
        let side = (2 * bound + 1) as usize;
        for code in 0..side.pow(m as u32) {
            let mut c = code;
            let x: Vec<i64> = (0..m)
                .map(|_| {
                    let v = (c % side) as i64 - bound;
                    c /= side;
                    v
                })
                .collect();
            if p.contains_dilated(&x, n as i64) {
                out.push(x);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn hull_removes_redundant_points() {
        let p = LatticePolytope::hull(&[
            vec![0, 0],
            vec![2, 0],
            vec![0, 2],
            vec![2, 2],
            vec![1, 1],
            vec![1, 0],
        ])
        .unwrap();
        assert_eq!(p.vertices(), &[vec![0, 0], vec![0, 2], vec![2, 0], vec![2, 2]]);
        let seg = LatticePolytope::hull(&[vec![0], vec![1], vec![2]]).unwrap();
        assert_eq!(seg.vertices(), &[vec![0], vec![2]]);
        assert_eq!(LatticePolytope::hull(&[] as &[Point]), Err(Error::EmptyInput));
    }

    #[test]
    fn h_representation_examples() {
        let h = square(1).h_representation().unwrap();
        let mut expected = vec![
            Facet { normal: vec![-1, 0], offset: 1 },
            Facet { normal: vec![0, -1], offset: 1 },
            Facet { normal: vec![0, 1], offset: 1 },
            Facet { normal: vec![1, 0], offset: 1 },
        ];
        expected.sort();
        assert_eq!(h.facets, expected);

        let tri = LatticePolytope::hull(&[vec![1, 0], vec![0, 1], vec![-1, -1]]).unwrap();
        let mut expected = vec![
            Facet { normal: vec![1, 1], offset: 1 },
            Facet { normal: vec![-2, 1], offset: 1 },
            Facet { normal: vec![1, -2], offset: 1 },
        ];
        expected.sort();
        assert_eq!(tri.h_representation().unwrap().facets, expected);
        for f in &expected {
            let tight = tri.vertices().iter().filter(|v| f.slack(v) == 0).count();
            assert_eq!(tight, 2);
        }

        let std_tri = LatticePolytope::hull(&[vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap();
        let mut expected = vec![
            Facet { normal: vec![-1, 0], offset: 0 },
            Facet { normal: vec![0, -1], offset: 0 },
            Facet { normal: vec![1, 1], offset: 1 },
        ];
        expected.sort();
        assert_eq!(std_tri.h_representation().unwrap().facets, expected);
    }

    #[test]
    fn lower_dimensional_hulls() {
        let seg = LatticePolytope::hull(&[vec![0, 0, 0], vec![1, 1, 1], vec![2, 2, 2]]).unwrap();
        assert_eq!(seg.dim(), 1);
        assert_eq!(seg.vertices(), &[vec![0, 0, 0], vec![2, 2, 2]]);
        assert_eq!(seg.count_lattice_points(1), 3);
        assert_eq!(seg.count_lattice_points(2), 5);
        assert!(matches!(
            seg.h_representation(),
            Err(Error::NotFullDimensional { dim: 1, ambient: 3 })
        ));
        let facet = LatticePolytope::hull(&[
            vec![0, 0, 1],
            vec![1, 0, 1],
            vec![0, 1, 1],
            vec![1, 1, 1],
        ])
        .unwrap();
        assert_eq!(facet.dim(), 2);
        assert_eq!(facet.count_lattice_points(2), 9);
        let point = LatticePolytope::hull(&[vec![3, 4]]).unwrap();
        assert_eq!(point.lattice_points(2), vec![vec![6, 8]]);
    }

    #[test]
    fn lattice_point_examples() {
        let unit = LatticePolytope::hull(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        assert_eq!(unit.count_lattice_points(2), 9);
        assert_eq!(unit.lattice_points(0), vec![vec![0, 0]]);
        let tri = LatticePolytope::hull(&[vec![1, 0], vec![0, 1], vec![-1, -1]]).unwrap();
        assert_eq!(tri.lattice_points(1), brute_points(&tri, 1, 3));
        assert_eq!(tri.count_lattice_points(1), 4);
        let cross =
            LatticePolytope::hull(&[vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]]).unwrap();
        assert_eq!(cross.count_lattice_points(1), 5);
        for n in 0..4 {
            assert_eq!(tri.lattice_points(n), brute_points(&tri, n, 3 * n as i64 + 1));
        }
    }

    #[test]
    fn interior_point_examples() {
        assert_eq!(square(1).interior_lattice_points(1).unwrap(), vec![vec![0, 0]]);
        let unit = LatticePolytope::hull(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        assert!(unit.interior_lattice_points(1).unwrap().is_empty());
        let tri = LatticePolytope::hull(&[vec![1, 0], vec![0, 1], vec![-1, -1]]).unwrap();
        assert_eq!(tri.count_interior_lattice_points(2).unwrap(), 4);
        assert_eq!(tri.count_interior_lattice_points(2).unwrap(), tri.count_lattice_points(1));
    }

    #[test]
    fn f_vector_examples() {
        assert_eq!(square(1).f_vector().unwrap().counts, vec![4, 4]);
        let cube: Vec<Point> = (0..8)
            .map(|c| (0..3).map(|i| (c >> i) & 1).collect())
            .collect();
        let cube = LatticePolytope::hull(&cube).unwrap();
        assert_eq!(cube.f_vector().unwrap().counts, vec![8, 12, 6]);
        let mut oct = Vec::new();
        for i in 0..3 {
            for s in [-1, 1] {
                let mut v = vec![0; 3];
                v[i] = s;
                oct.push(v);
            }
        }
        let oct = LatticePolytope::hull(&oct).unwrap();
        assert_eq!(oct.f_vector().unwrap().counts, vec![6, 12, 8]);
        assert!(oct.f_vector().unwrap().satisfies_euler());
    }

    #[test]
    fn hull_of_vertices_round_trips() {
        let tri = LatticePolytope::hull(&[vec![1, 0], vec![0, 1], vec![-1, -1], vec![0, 0]]).unwrap();
        let again = LatticePolytope::hull(tri.vertices()).unwrap();
        assert_eq!(again, tri);
        assert_eq!(again.h_representation(), tri.h_representation());
    }
}
