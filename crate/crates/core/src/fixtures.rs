//! Named example posets and polytopes.

use crate::constructions::{chain_polytope, gamma, omega, order_polytope};
use crate::error::Result;
use crate::polytope::{LatticePolytope, Point};
use crate::poset::Poset;

fn poset(d: usize, covers: &[(usize, usize)]) -> Poset {
    Poset::from_cover_relations(d, covers).expect("fixture posets are acyclic")
}

/// Six elements in three levels `{1,2} < {3,4} < {5,6}`, every element
/// covering both elements of the level below.
pub fn p6() -> Poset {
    poset(6, &[(1, 3), (2, 3), (1, 4), (2, 4), (3, 5), (4, 5), (3, 6), (4, 6)])
}

/// `{7} ⊕ P6`.
pub fn p6_prime() -> Poset {
    p6().adjoin_bottom().expect("7 elements fit")
}

/// `{1,2} < 7 < {3,4} < {5,6}`.
pub fn p7_first() -> Poset {
    poset(7, &[(1, 7), (2, 7), (7, 3), (7, 4), (3, 5), (4, 5), (3, 6), (4, 6)])
}

/// `{1,2} < {3,4} < 7 < {5,6}`.
pub fn p7_second() -> Poset {
    poset(7, &[(1, 3), (2, 3), (1, 4), (2, 4), (3, 7), (4, 7), (7, 5), (7, 6)])
}

/// `P6 ⊕ {7}`.
pub fn p7_third() -> Poset {
    poset(7, &[(1, 3), (2, 3), (1, 4), (2, 4), (3, 5), (4, 5), (3, 6), (4, 6), (5, 7), (6, 7)])
}

fn e(d: usize, ones: &[usize]) -> Point {
    let mut v = vec![0; d];
    for &i in ones {
        v[i - 1] = 1;
    }
    v
}

/// A normal 0/1 polytope of dimension 9 with 15 vertices whose `Ω(P, P)`
/// is reflexive but not normal.
pub fn nonnormal_base() -> LatticePolytope {
    let supports: [&[usize]; 15] = [
        &[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5], &[1, 6], &[1, 7], &[2, 7],
        &[2, 8], &[3, 8], &[3, 9], &[4, 9], &[4], &[5], &[5, 6],
    ];
    let pts: Vec<Point> = supports.iter().map(|s| e(9, s)).collect();
    LatticePolytope::hull(&pts).expect("fixture vertices are valid")
}

/// `conv{e_1, …, e_d, −e_1 − ⋯ − e_d}`.
pub fn reflexive_simplex(d: usize) -> LatticePolytope {
    let mut pts: Vec<Point> = (1..=d).map(|i| e(d, &[i])).collect();
    pts.push(vec![-1; d]);
    LatticePolytope::hull(&pts).expect("simplex vertices are affinely independent")
}

/// The eleven seven-dimensional polytopes built from `P6` and its
/// seven-element relatives, with labels.
pub fn equi_ehrhart_family() -> Result<Vec<(String, LatticePolytope)>> {
    let p = p6();
    let pp = p6_prime();
    let (o, c) = (order_polytope(&p), chain_polytope(&p));
    let (op, cp) = (order_polytope(&pp), chain_polytope(&pp));
    let mut out = vec![
        ("Omega(O_P,O_P)".to_string(), omega(&o, &o)?),
        ("Omega(O_P,C_P)".to_string(), omega(&o, &c)?),
        ("Omega(C_P,C_P)".to_string(), omega(&c, &c)?),
        ("Gamma(O_P',C_P')".to_string(), gamma(&op, &cp)?),
        ("Gamma(C_P',C_P')".to_string(), gamma(&cp, &cp)?),
    ];
    let sevens = [p7_first(), p7_second(), p7_third()];
    for (k, q) in sevens.iter().enumerate() {
        let oq = order_polytope(q);
        out.push((format!("Gamma(O_P{},O_P{})", k + 1, k + 1), gamma(&oq, &oq)?));
    }
    for (k, q) in sevens.iter().enumerate() {
        out.push((
            format!("Gamma(O_P{},C_P{})", k + 1, k + 1),
            gamma(&order_polytope(q), &chain_polytope(q))?,
        ));
    }
    Ok(out)
}

/// Looks up a poset fixture by name.
pub fn named_poset(name: &str) -> Option<Poset> {
    match name {
        "p6" => Some(p6()),
        "p6-prime" => Some(p6_prime()),
        "p7-first" => Some(p7_first()),
        "p7-second" => Some(p7_second()),
        "p7-third" => Some(p7_third()),
        _ => {
            let (kind, d) = name.split_once('-')?;
            let d: usize = d.parse().ok()?;
            match kind {
                "chain" => Some(Poset::chain(d)),
                "antichain" => Some(Poset::antichain(d)),
                _ => None,
            }
        }
    }
}

/// Looks up a polytope fixture by name.
pub fn named_polytope(name: &str) -> Option<LatticePolytope> {
    match name {
        "nonnormal-base" => Some(nonnormal_base()),
        _ => {
            let d: usize = name.strip_prefix("simplex-")?.parse().ok()?;
            (d >= 1).then(|| reflexive_simplex(d))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transcriptions_share_chain_polytope_hull() {
        let reference = chain_polytope(&p6_prime());
        let g = gamma(&reference, &reference).unwrap();
        for q in [p7_first(), p7_second(), p7_third()] {
            let c = chain_polytope(&q);
            assert_eq!(gamma(&c, &c).unwrap(), g);
        }
    }

    #[test]
    fn fixture_shapes() {
        let p = p6();
        assert_eq!(p.ideals().len(), 1 + 2 + 1 + 2 + 1 + 2 + 1);
        assert_eq!(p.linear_extension_count(), 8u32.into());
        let base = nonnormal_base();
        assert_eq!(base.vertices().len(), 15);
        assert_eq!(base.dim(), 9);
        assert!(named_poset("chain-3").is_some());
        assert!(named_polytope("simplex-4").is_some());
        assert!(named_poset("nothing").is_none());
    }
}
