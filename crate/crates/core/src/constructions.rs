//! Order and chain polytopes of a poset, and the two symmetric hull
//! constructions `Γ(P, Q) = conv(P ∪ −Q)` and
//! `Ω(P, Q) = conv(P × {1} ∪ −Q × {−1})`.
//!
//! The order polytope uses the convention `x_i ≥ x_j` whenever `p_i ≤ p_j`,
//! so its vertices are the indicator vectors of poset ideals.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polytope::{LatticePolytope, Point};
use crate::poset::{IndexSet, Poset};

/// Which poset polytope to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PosetPolytope {
    Order,
    Chain,
}

impl PosetPolytope {
    pub fn build(self, p: &Poset) -> LatticePolytope {
        match self {
            PosetPolytope::Order => order_polytope(p),
            PosetPolytope::Chain => chain_polytope(p),
        }
    }

    pub fn letter(self) -> char {
        match self {
            PosetPolytope::Order => 'O',
            PosetPolytope::Chain => 'C',
        }
    }
}

fn hull_of_indicators(d: usize, sets: &[IndexSet]) -> LatticePolytope {
    let points: Vec<Point> = sets.iter().map(|s| s.indicator(d)).collect();
    LatticePolytope::hull(&points).expect("indicator vectors are nonempty and equidimensional")
}

pub fn order_polytope(p: &Poset) -> LatticePolytope {
    hull_of_indicators(p.size(), &p.ideals())
}

pub fn chain_polytope(p: &Poset) -> LatticePolytope {
    hull_of_indicators(p.size(), &p.antichains())
}

fn check_pair(p: &LatticePolytope, q: &LatticePolytope) -> Result<()> {
    if p.ambient_dim() != q.ambient_dim() {
        return Err(Error::DimensionMismatch(p.ambient_dim(), q.ambient_dim()));
    }
    p.require_full_dimensional()?;
    q.require_full_dimensional()
}

/// `conv(P ∪ −Q)`.
pub fn gamma(p: &LatticePolytope, q: &LatticePolytope) -> Result<LatticePolytope> {
    check_pair(p, q)?;
    let mut points: Vec<Point> = p.vertices().to_vec();
    points.extend(q.vertices().iter().map(|v| v.iter().map(|x| -x).collect()));
    LatticePolytope::hull(&points)
}

/// `conv(P × {1} ∪ −Q × {−1})` in one dimension higher.
pub fn omega(p: &LatticePolytope, q: &LatticePolytope) -> Result<LatticePolytope> {
    check_pair(p, q)?;
    let mut points: Vec<Point> = p
        .vertices()
        .iter()
        .map(|v| v.iter().copied().chain(std::iter::once(1)).collect())
        .collect();
    points.extend(
        q.vertices()
            .iter()
            .map(|v| v.iter().map(|x| -x).chain(std::iter::once(-1)).collect()),
    );
    LatticePolytope::hull(&points)
}

/// `Ω(X_P, Y_Q)` for poset polytopes `X, Y`.
pub fn omega_of_posets(
    p: &Poset,
    p_kind: PosetPolytope,
    q: &Poset,
    q_kind: PosetPolytope,
) -> Result<LatticePolytope> {
    omega(&p_kind.build(p), &q_kind.build(q))
}

/// `Γ(X_P, Y_Q)` for poset polytopes `X, Y`.
pub fn gamma_of_posets(
    p: &Poset,
    p_kind: PosetPolytope,
    q: &Poset,
    q_kind: PosetPolytope,
) -> Result<LatticePolytope> {
    gamma(&p_kind.build(p), &q_kind.build(q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::Facet;

    fn pts(v: &[&[i64]]) -> Vec<Point> {
        let mut out: Vec<Point> = v.iter().map(|p| p.to_vec()).collect();
        out.sort();
        out
    }

    #[test]
    fn order_polytope_examples() {
        let sq = order_polytope(&Poset::antichain(2));
        assert_eq!(sq.vertices(), pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).as_slice());
        let c2 = order_polytope(&Poset::chain(2));
        assert_eq!(c2.vertices(), pts(&[&[0, 0], &[1, 0], &[1, 1]]).as_slice());
        let v = Poset::from_cover_relations(3, &[(1, 3), (2, 3)]).unwrap();
        assert_eq!(order_polytope(&v).vertices().len(), 5);
    }

    #[test]
    fn chain_polytope_examples() {
        let sq = chain_polytope(&Poset::antichain(2));
        assert_eq!(sq.vertices().len(), 4);
        let c2 = chain_polytope(&Poset::chain(2));
        assert_eq!(c2.vertices(), pts(&[&[0, 0], &[1, 0], &[0, 1]]).as_slice());
        let c3 = chain_polytope(&Poset::chain(3));
        assert_eq!(
            c3.vertices(),
            pts(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).as_slice()
        );
        assert!(c3
            .facets()
            .contains(&Facet { normal: vec![1, 1, 1], offset: 1 }));
    }

    #[test]
    fn gamma_examples() {
        let seg = LatticePolytope::hull(&[vec![0], vec![1]]).unwrap();
        assert_eq!(gamma(&seg, &seg).unwrap().vertices(), &[vec![-1], vec![1]]);
        let o = order_polytope(&Poset::chain(2));
        let g = gamma(&o, &o).unwrap();
        assert_eq!(
            g.vertices(),
            pts(&[&[1, 0], &[1, 1], &[-1, 0], &[-1, -1]]).as_slice()
        );
        let sq = order_polytope(&Poset::antichain(2));
        assert!(matches!(gamma(&seg, &sq), Err(Error::DimensionMismatch(1, 2))));
    }

    #[test]
    fn omega_examples() {
        let seg = LatticePolytope::hull(&[vec![0], vec![1]]).unwrap();
        let om = omega(&seg, &seg).unwrap();
        assert_eq!(
            om.vertices(),
            pts(&[&[0, 1], &[1, 1], &[0, -1], &[-1, -1]]).as_slice()
        );
        // P × {1} is the facet x_{d+1} ≤ 1
        assert!(om.facets().contains(&Facet { normal: vec![0, 1], offset: 1 }));
        assert!(om.facets().contains(&Facet { normal: vec![0, -1], offset: 1 }));

        let one = Poset::antichain(1);
        let left = omega(&order_polytope(&one), &order_polytope(&one)).unwrap();
        let b = one.adjoin_bottom().unwrap();
        let right = gamma(&order_polytope(&b), &order_polytope(&b)).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn order_polytope_inequalities_match_definition() {
        for d in 1..=4 {
            for p in crate::poset::all_labeled_posets(d) {
                let o = order_polytope(&p);
                let mut expected: Vec<Facet> = Vec::new();
                for i in 1..=d {
                    let mut e = vec![0; d];
                    e[i - 1] = 1;
                    // x_i ≤ 1 is a facet only for minimal elements, x_i ≥ 0 only for maximal
                    if p.down_set(i).len() == 1 {
                        expected.push(Facet { normal: e.clone(), offset: 1 });
                    }
                    if p.up_set(i).len() == 1 {
                        expected.push(Facet { normal: e.iter().map(|x| -x).collect(), offset: 0 });
                    }
                }
                for (i, j) in p.covers() {
                    let mut a = vec![0; d];
                    a[j - 1] = 1;
                    a[i - 1] = -1;
                    expected.push(Facet { normal: a, offset: 0 });
                }
                expected.sort();
                assert_eq!(o.facets(), expected.as_slice(), "poset {p:?}");
            }
        }
    }
}
