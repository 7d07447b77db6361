//! Unimodular equivalence by invariant screening followed by an explicit
//! search over images of an affinely independent vertex tuple.

use std::collections::HashSet;

use serde::Serialize;

use super::{dot, LatticePolytope, Point};
use crate::ehrhart;
use crate::error::{Error, Result};
use crate::linalg;
use crate::reflexive;

pub const DEFAULT_SEARCH_BUDGET: u64 = 10_000_000;

/// Outcome of an equivalence test. When `equivalent` holds, `matrix` and
/// `translation` give a witness `x ↦ U x + t` mapping `P` onto `Q`.
#[derive(Clone, Debug, Serialize)]
pub struct Equivalence {
    pub equivalent: bool,
    pub separated_by: Option<String>,
    pub matrix: Option<Vec<Vec<i64>>>,
    pub translation: Option<Vec<i64>>,
    pub evaluations: u64,
}

pub fn unimodular_equivalent(p: &LatticePolytope, q: &LatticePolytope) -> Result<bool> {
    Ok(unimodular_equivalent_with_budget(p, q, DEFAULT_SEARCH_BUDGET)?.equivalent)
}

pub fn unimodular_equivalent_with_budget(
    p: &LatticePolytope,
    q: &LatticePolytope,
    budget: u64,
) -> Result<Equivalence> {
    if p.ambient_dim() != q.ambient_dim() {
        return Err(Error::DimensionMismatch(p.ambient_dim(), q.ambient_dim()));
    }
    p.require_full_dimensional()?;
    q.require_full_dimensional()?;
    let separated = |why: &str| Equivalence {
        equivalent: false,
        separated_by: Some(why.to_string()),
        matrix: None,
        translation: None,
        evaluations: 0,
    };
    if p.vertices().len() != q.vertices().len() {
        return Ok(separated("vertex count"));
    }
    if p.facet_count() != q.facet_count() {
        return Ok(separated("facet count"));
    }
    if p.f_vector()? != q.f_vector()? {
        return Ok(separated("f-vector"));
    }
    let (ep, eq) = (ehrhart::ehrhart_polynomial(p)?, ehrhart::ehrhart_polynomial(q)?);
    if ep.normalized_volume() != eq.normalized_volume() {
        return Ok(separated("normalized volume"));
    }
    if ep != eq {
        return Ok(separated("Ehrhart polynomial"));
    }
    let linear = reflexive::is_reflexive(p)? && reflexive::is_reflexive(q)?;
    let mut search = Search::new(p, q, linear, budget)?;
    let found = search.run()?;
    Ok(Equivalence {
        equivalent: found.is_some(),
        separated_by: if found.is_some() { None } else { Some("exhaustive search".into()) },
        matrix: found.as_ref().map(|(u, _)| u.clone()),
        translation: found.map(|(_, t)| t),
        evaluations: search.evaluations,
    })
}

struct Search<'a> {
    p: &'a LatticePolytope,
    q: &'a LatticePolytope,
    /// Indices into P's vertices; in affine mode the first is the anchor.
    base: Vec<usize>,
    linear: bool,
    p_degree: Vec<usize>,
    q_degree: Vec<usize>,
    q_set: HashSet<Point>,
    /// `adj(V)` and `det(V)` for the difference matrix with columns `v_i - anchor`.
    adj: Vec<Vec<i128>>,
    det: i128,
    budget: u64,
    evaluations: u64,
}

fn facet_degrees(p: &LatticePolytope) -> Vec<usize> {
    p.vertices()
        .iter()
        .map(|v| p.facets().iter().filter(|f| f.slack(v) == 0).count())
        .collect()
}

impl<'a> Search<'a> {
    fn new(p: &'a LatticePolytope, q: &'a LatticePolytope, linear: bool, budget: u64) -> Result<Self> {
        let m = p.ambient_dim();
        let base = if linear {
            let mut chosen: Vec<usize> = Vec::new();
            let mut rows: Vec<Vec<i64>> = Vec::new();
            for (k, v) in p.vertices().iter().enumerate() {
                rows.push(v.clone());
                if linalg::rank(&rows)? == rows.len() {
                    chosen.push(k);
                    if chosen.len() == m {
                        break;
                    }
                } else {
                    rows.pop();
                }
            }
            chosen
        } else {
            linalg::affine_basis(p.vertices())?
        };
        let columns = Self::difference_columns(p.vertices(), &base, linear);
        // matrix with columns = difference vectors
        let v: Vec<Vec<i128>> = (0..m)
            .map(|i| columns.iter().map(|c| c[i] as i128).collect())
            .collect();
        let det = linalg::determinant(&v)?;
        let mut adj = vec![vec![0i128; m]; m];
        for i in 0..m {
            for j in 0..m {
                let minor: Vec<Vec<i128>> = v
                    .iter()
                    .enumerate()
                    .filter(|&(r, _)| r != j)
                    .map(|(_, row)| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != i)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let cof = linalg::determinant(&minor)?;
                adj[i][j] = if (i + j) % 2 == 0 { cof } else { -cof };
            }
        }
        Ok(Search {
            p,
            q,
            base,
            linear,
            p_degree: facet_degrees(p),
            q_degree: facet_degrees(q),
            q_set: q.vertices().iter().cloned().collect(),
            adj,
            det,
            budget,
            evaluations: 0,
        })
    }

    fn difference_columns(vertices: &[Point], base: &[usize], linear: bool) -> Vec<Vec<i64>> {
        if linear {
            base.iter().map(|&k| vertices[k].clone()).collect()
        } else {
            let anchor = &vertices[base[0]];
            base[1..]
                .iter()
                .map(|&k| vertices[k].iter().zip(anchor).map(|(a, b)| a - b).collect())
                .collect()
        }
    }

    fn run(&mut self) -> Result<Option<(Vec<Vec<i64>>, Vec<i64>)>> {
        let mut chosen = Vec::with_capacity(self.base.len());
        self.extend(&mut chosen)
    }

    fn extend(&mut self, chosen: &mut Vec<usize>) -> Result<Option<(Vec<Vec<i64>>, Vec<i64>)>> {
        if chosen.len() == self.base.len() {
            self.evaluations += 1;
            if self.evaluations > self.budget {
                return Err(Error::SearchBudgetExceeded { budget: self.budget });
            }
            return self.evaluate(chosen);
        }
        let want = self.p_degree[self.base[chosen.len()]];
        for w in 0..self.q.vertices().len() {
            if chosen.contains(&w) || self.q_degree[w] != want {
                continue;
            }
            chosen.push(w);
            let found = self.extend(chosen)?;
            chosen.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }

    fn evaluate(&self, chosen: &[usize]) -> Result<Option<(Vec<Vec<i64>>, Vec<i64>)>> {
        let m = self.p.ambient_dim();
        let columns = Self::difference_columns(self.q.vertices(), chosen, self.linear);
        // U = W adj(V) / det(V)
        let mut u = vec![vec![0i64; m]; m];
        for i in 0..m {
            for j in 0..m {
                let s: i128 = (0..m).map(|k| columns[k][i] as i128 * self.adj[k][j]).sum();
                if s % self.det != 0 {
                    return Ok(None);
                }
                u[i][j] = i64::try_from(s / self.det).map_err(|_| Error::Overflow)?;
            }
        }
        let as128: Vec<Vec<i128>> = u
            .iter()
            .map(|r| r.iter().map(|&x| x as i128).collect())
            .collect();
        if linalg::determinant(&as128)?.abs() != 1 {
            return Ok(None);
        }
        let translation: Vec<i64> = if self.linear {
            vec![0; m]
        } else {
            let anchor = &self.p.vertices()[self.base[0]];
            let target = &self.q.vertices()[chosen[0]];
            (0..m).map(|i| target[i] - dot(&u[i], anchor)).collect()
        };
        let all_mapped = self.p.vertices().iter().all(|v| {
            let image: Point = (0..m).map(|i| dot(&u[i], v) + translation[i]).collect();
            self.q_set.contains(&image)
        });
        Ok(all_mapped.then_some((u, translation)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(v: &[[i64; 2]]) -> LatticePolytope {
        LatticePolytope::hull(&v.iter().map(|p| p.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn shear_of_square_is_equivalent() {
        let sq = poly(&[[-1, -1], [-1, 1], [1, -1], [1, 1]]);
        let sheared = sq.transform(&[vec![1, 1], vec![0, 1]], &[0, 0]).unwrap();
        let eq = unimodular_equivalent_with_budget(&sq, &sheared, DEFAULT_SEARCH_BUDGET).unwrap();
        assert!(eq.equivalent);
        let u = eq.matrix.unwrap();
        let back = sq.transform(&u, &eq.translation.unwrap()).unwrap();
        assert_eq!(back, sheared);
    }

    #[test]
    fn volume_and_vertex_count_separate() {
        let sq = poly(&[[-1, -1], [-1, 1], [1, -1], [1, 1]]);
        let cross = poly(&[[1, 0], [-1, 0], [0, 1], [0, -1]]);
        let eq = unimodular_equivalent_with_budget(&sq, &cross, 100).unwrap();
        assert!(!eq.equivalent);
        assert_eq!(eq.separated_by.as_deref(), Some("normalized volume"));
        let tri = poly(&[[0, 0], [1, 0], [0, 1]]);
        let unit = poly(&[[0, 0], [1, 0], [0, 1], [1, 1]]);
        let eq = unimodular_equivalent_with_budget(&tri, &unit, 100).unwrap();
        assert_eq!(eq.separated_by.as_deref(), Some("vertex count"));
    }

    #[test]
    fn translated_simplices_are_equivalent() {
        let a = poly(&[[0, 0], [1, 0], [0, 1]]);
        let b = poly(&[[3, 5], [4, 5], [4, 6]]);
        assert!(unimodular_equivalent(&a, &b).unwrap());
        let c = poly(&[[0, 0], [2, 0], [0, 1]]);
        assert!(!unimodular_equivalent(&a, &c).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let sq = poly(&[[-1, -1], [-1, 1], [1, -1], [1, 1]]);
        let flipped = sq.transform(&[vec![0, 1], vec![1, 0]], &[0, 0]).unwrap();
        // the identity candidate is the first evaluation, so a zero budget must fail
        assert_eq!(
            unimodular_equivalent_with_budget(&sq, &flipped, 0).unwrap_err(),
            Error::SearchBudgetExceeded { budget: 0 }
        );
    }

    #[test]
    fn sheared_rectangle_is_equivalent() {
        let a = poly(&[[0, 0], [2, 0], [0, 1], [2, 1]]);
        let b = poly(&[[0, 0], [2, 0], [1, 1], [3, 1]]);
        let eq = unimodular_equivalent_with_budget(&a, &b, DEFAULT_SEARCH_BUDGET).unwrap();
        assert!(eq.equivalent, "shear (x,y) -> (x+y,y) maps a onto b");
    }
}
