//! Exact double description over integer points.
//!
//! The cone over the homogenised points `(1, v)` is built incrementally from
//! an initial simplex; each added point splits the current facets into
//! positive, negative and zero sides and new facets come from adjacent
//! positive/negative pairs (combinatorial adjacency test on the tight sets).

use fixedbitset::FixedBitSet;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::linalg;

/// `⟨normal, x⟩ ≤ offset`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub offset: i64,
}

impl Facet {
    pub fn slack(&self, x: &[i64]) -> i64 {
        self.offset - dot(&self.normal, x)
    }
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

struct Working {
    normal: Vec<i128>,
    offset: i128,
    tight: FixedBitSet,
}

impl Working {
    fn slack(&self, x: &[i64]) -> i128 {
        self.offset
            - self
                .normal
                .iter()
                .zip(x)
                .map(|(a, &b)| a * b as i128)
                .sum::<i128>()
    }

    fn reduce(&mut self) {
        let g = self
            .normal
            .iter()
            .fold(self.offset.abs(), |g, &v| g.gcd(&v));
        if g > 1 {
            self.normal.iter_mut().for_each(|v| *v /= g);
            self.offset /= g;
        }
    }
}

/// Facets of the convex hull of `points`, which must be distinct and affinely
/// span their ambient space. Returns primitive facets in input coordinates.
pub(crate) fn facets_full_dimensional(points: &[Vec<i64>]) -> Result<Vec<Facet>> {
    let m = points[0].len();
    let n = points.len();
    let basis = linalg::affine_basis(points)?;
    if basis.len() != m + 1 {
        return Err(Error::NotFullDimensional {
            dim: basis.len() - 1,
            ambient: m,
        });
    }

    let mut facets: Vec<Working> = Vec::with_capacity(m + 1);
    for &omit in &basis {
        let rows: Vec<Vec<i128>> = basis
            .iter()
            .filter(|&&k| k != omit)
            .map(|&k| {
                std::iter::once(1i128)
                    .chain(points[k].iter().map(|&x| x as i128))
                    .collect()
            })
            .collect();
        let y = linalg::null_vector(&rows)?;
        // y0 + y'·x >= 0 on the omitted vertex
        let at_omit: i128 = y[0]
            + y[1..]
                .iter()
                .zip(&points[omit])
                .map(|(a, &b)| a * b as i128)
                .sum::<i128>();
        let sign = if at_omit > 0 { 1 } else { -1 };
        let mut tight = FixedBitSet::with_capacity(n);
        for &k in basis.iter().filter(|&&k| k != omit) {
            tight.insert(k);
        }
        let mut w = Working {
            normal: y[1..].iter().map(|&v| -sign * v).collect(),
            offset: sign * y[0],
            tight,
        };
        w.reduce();
        facets.push(w);
    }

    let in_basis: FixedBitSet = basis.iter().copied().collect();
    for k in (0..n).filter(|k| !in_basis.contains(*k)) {
        let slacks: Vec<i128> = facets.iter().map(|f| f.slack(&points[k])).collect();
        if slacks.iter().all(|&s| s >= 0) {
            for (f, &s) in facets.iter_mut().zip(&slacks) {
                if s == 0 {
                    f.tight.insert(k);
                }
            }
            continue;
        }
        let plus: Vec<usize> = (0..facets.len()).filter(|&i| slacks[i] > 0).collect();
        let minus: Vec<usize> = (0..facets.len()).filter(|&i| slacks[i] < 0).collect();
        let mut created = Vec::new();
        for &ip in &plus {
            for &im in &minus {
                let mut common = facets[ip].tight.clone();
                common.intersect_with(&facets[im].tight);
                if common.count_ones(..) + 1 < m {
                    continue;
                }
                let adjacent = facets.iter().enumerate().all(|(g, f)| {
                    g == ip || g == im || !common.is_subset(&f.tight)
                });
                if !adjacent {
                    continue;
                }
                let (sp, sm) = (slacks[ip], slacks[im]);
                let (fp, fm) = (&facets[ip], &facets[im]);
                let normal: Vec<i128> = fp
                    .normal
                    .iter()
                    .zip(&fm.normal)
                    .map(|(&a, &b)| sp * b - sm * a)
                    .collect();
                let offset = sp * fm.offset - sm * fp.offset;
                common.insert(k);
                let mut w = Working {
                    normal,
                    offset,
                    tight: common,
                };
                w.reduce();
                if w.normal.iter().any(|v| v.abs() > i64::MAX as i128) {
                    return Err(Error::Overflow);
                }
                created.push(w);
            }
        }
        let mut kept: Vec<Working> = Vec::with_capacity(facets.len() + created.len());
        for (f, &s) in facets.into_iter().zip(&slacks) {
            if s > 0 {
                kept.push(f);
            } else if s == 0 {
                let mut f = f;
                f.tight.insert(k);
                kept.push(f);
            }
        }
        kept.extend(created);
        facets = kept;
    }

    let mut out: Vec<Facet> = facets
        .into_iter()
        .map(|f| {
            let g = f.normal.iter().fold(0i128, |g, &v| g.gcd(&v));
            Facet {
                normal: f.normal.iter().map(|&v| (v / g) as i64).collect(),
                offset: (f.offset / g) as i64,
            }
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Indices of the points that are vertices, given the facets of their hull.
pub(crate) fn vertex_indices(points: &[Vec<i64>], facets: &[Facet]) -> Vec<usize> {
    let incidences: Vec<FixedBitSet> = facets
        .iter()
        .map(|f| {
            points
                .iter()
                .enumerate()
                .filter(|(_, p)| f.slack(p) == 0)
                .map(|(k, _)| k)
                .collect()
        })
        .collect();
    let n = points.len();
    (0..n)
        .filter(|&k| {
            let mut meet = FixedBitSet::with_capacity(n);
            meet.insert_range(..);
            let mut any = false;
            for inc in incidences.iter().filter(|inc| inc.contains(k)) {
                meet.intersect_with(inc);
                any = true;
            }
            any && meet.count_ones(..) == 1
        })
        .collect()
}
