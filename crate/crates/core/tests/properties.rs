use proptest::prelude::*;

use poset_polytopes::constructions::{chain_polytope, gamma, omega, order_polytope};
use poset_polytopes::ehrhart;
use poset_polytopes::groebner::{self, Family};
use poset_polytopes::polytope::unimodular_equivalent;
use poset_polytopes::{Facet, LatticePolytope, Point, Poset};

/// Random poset: a random DAG on `1..=d` oriented along a random
/// permutation.
fn poset_strategy(max_d: usize) -> impl Strategy<Value = Poset> {
    (1..=max_d)
        .prop_flat_map(|d| {
            let perm = Just((1..=d).collect::<Vec<usize>>()).prop_shuffle();
            let edges = proptest::collection::vec(any::<bool>(), d * (d - 1) / 2);
            (Just(d), perm, edges)
        })
        .prop_map(|(d, perm, edges)| {
            let mut covers = Vec::new();
            let mut k = 0;
            for a in 0..d {
                for b in (a + 1)..d {
                    if edges[k] {
                        covers.push((perm[a], perm[b]));
                    }
                    k += 1;
                }
            }
            Poset::from_cover_relations(d, &covers).unwrap()
        })
}

fn points_strategy(dim: usize) -> impl Strategy<Value = Vec<Point>> {
    proptest::collection::vec(proptest::collection::vec(-2i64..=2, dim), (dim + 1)..(dim + 7))
}

fn full_dimensional(dim: usize) -> impl Strategy<Value = LatticePolytope> {
    points_strategy(dim)
        .prop_filter_map("full-dimensional hull", |pts| {
            LatticePolytope::hull(&pts).ok().filter(|p| p.is_full_dimensional())
        })
}

/// A unimodular matrix as a product of elementary shears and a sign flip.
fn unimodular_strategy(dim: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    proptest::collection::vec((0..dim, 0..dim, -2i64..=2), 0..6).prop_map(move |ops| {
        let mut m: Vec<Vec<i64>> = (0..dim).map(|i| (0..dim).map(|j| i64::from(i == j)).collect()).collect();
        for (i, j, c) in ops {
            if i != j {
                for k in 0..dim {
                    m[i][k] += c * m[j][k];
                }
            } else {
                m[i].iter_mut().for_each(|x| *x = -*x);
            }
        }
        m
    })
}

fn box_count(p: &LatticePolytope, n: i64) -> u64 {
    let dim = p.ambient_dim();
    let lo: Vec<i64> = (0..dim).map(|k| p.vertices().iter().map(|v| v[k]).min().unwrap() * n).collect();
    let hi: Vec<i64> = (0..dim).map(|k| p.vertices().iter().map(|v| v[k]).max().unwrap() * n).collect();
    let mut count = 0;
    let mut x = lo.clone();
    loop {
        if p.facets().iter().all(|f| f.normal.iter().zip(&x).map(|(a, b)| a * b).sum::<i64>() <= f.offset * n) {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == dim {
                return count;
            }
            if x[k] < hi[k] {
                x[k] += 1;
                break;
            }
            x[k] = lo[k];
            k += 1;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hull_facets_are_valid(p in full_dimensional(3)) {
        for f in p.facets() {
            let tight = p.vertices().iter().filter(|v| f.slack(v) == 0).count();
            prop_assert!(tight >= p.dim());
            prop_assert!(p.vertices().iter().all(|v| f.slack(v) >= 0));
        }
        prop_assert!(p.f_vector().unwrap().satisfies_euler());
    }

    #[test]
    fn lattice_points_match_box_scan(p in full_dimensional(3), n in 0i64..3) {
        prop_assert_eq!(p.count_lattice_points(n as u32), box_count(&p, n));
    }

    #[test]
    fn unimodular_images_share_invariants(
        p in full_dimensional(3),
        u in unimodular_strategy(3),
        t in proptest::collection::vec(-3i64..=3, 3),
    ) {
        let q = p.transform(&u, &t).unwrap();
        prop_assert_eq!(p.f_vector().unwrap(), q.f_vector().unwrap());
        prop_assert_eq!(ehrhart::ehrhart_polynomial(&p).unwrap(), ehrhart::ehrhart_polynomial(&q).unwrap());
        prop_assert!(unimodular_equivalent(&p, &q).unwrap());
    }

    #[test]
    fn omega_has_both_polytopes_as_facets(p in poset_strategy(4), q_seed in poset_strategy(4)) {
        let d = p.size();
        let q = if q_seed.size() == d { q_seed } else { Poset::antichain(d) };
        let om = omega(&order_polytope(&p), &chain_polytope(&q)).unwrap();
        let mut up = vec![0; d + 1];
        up[d] = 1;
        let down: Vec<i64> = up.iter().map(|x| -x).collect();
        let (top, bottom) = (Facet { normal: up, offset: 1 }, Facet { normal: down, offset: 1 });
        prop_assert!(om.facets().contains(&top));
        prop_assert!(om.facets().contains(&bottom));
        prop_assert_eq!(om.dim(), d + 1);
    }

    #[test]
    fn gamma_contains_both_sides(p in poset_strategy(4)) {
        let (o, c) = (order_polytope(&p), chain_polytope(&p));
        let g = gamma(&o, &c).unwrap();
        prop_assert!(o.vertices().iter().all(|v| g.contains(v)));
        prop_assert!(c.vertices().iter().all(|v| g.contains(&v.iter().map(|x| -x).collect::<Vec<_>>())));
    }

    #[test]
    fn order_and_chain_polytopes_share_ehrhart(p in poset_strategy(4)) {
        prop_assert_eq!(
            ehrhart::ehrhart_polynomial(&order_polytope(&p)).unwrap(),
            ehrhart::ehrhart_polynomial(&chain_polytope(&p)).unwrap()
        );
    }

    #[test]
    fn order_polytope_volume_is_linear_extensions(p in poset_strategy(5)) {
        let nv = ehrhart::normalized_volume(&order_polytope(&p)).unwrap();
        prop_assert_eq!(nv, p.linear_extension_count());
    }

    #[test]
    fn generators_lie_in_toric_ideal(p in poset_strategy(4), q_seed in poset_strategy(4)) {
        let d = p.size();
        let q = if q_seed.size() == d { q_seed } else { Poset::chain(d) };
        for family in Family::ALL {
            let sys = groebner::generate_family(family, &p, &q).unwrap();
            prop_assert!(sys.generators.iter().all(|g| sys.is_balanced(g)));
            prop_assert_eq!(
                groebner::standard_monomial_count(&sys, 1),
                (p.ideals().len() + q.ideals().len() + 1) as u64
            );
        }
    }

    #[test]
    fn ideals_are_closed_under_union_and_intersection(p in poset_strategy(6)) {
        let ideals = p.ideals();
        for &a in &ideals {
            prop_assert!(p.is_antichain(p.max_elements(a).unwrap()));
            prop_assert_eq!(p.ideal_generated_by(p.max_elements(a).unwrap()), a);
            for &b in &ideals {
                prop_assert!(p.is_ideal(a.union(b)) && p.is_ideal(a.intersection(b)));
            }
        }
    }
}
