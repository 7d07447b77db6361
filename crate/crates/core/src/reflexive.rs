//! Reflexivity and normality certificates, the census of reflexive polygons,
//! and the per-polytope analysis report.

use std::collections::{BTreeMap, HashSet};
use std::time::Instant;

use num_bigint::BigUint;
use num_integer::Integer;
use serde::Serialize;

use crate::ehrhart::{self, EhrhartPolynomial, Exact};
use crate::error::{Error, Result};
use crate::polytope::{
    unimodular_equivalent, Facet, FVector, LatticePolytope, Point,
};

/// `P` is reflexive iff the origin is its only interior lattice point and
/// every facet, with primitive normal, reads `⟨a_F, x⟩ ≤ 1`.
pub fn is_reflexive(p: &LatticePolytope) -> Result<bool> {
    p.require_full_dimensional()?;
    if p.facets().iter().any(|f| f.offset != 1) {
        return Ok(false);
    }
    let interior = p.interior_lattice_points(1)?;
    Ok(interior.len() == 1 && interior[0].iter().all(|&x| x == 0))
}

/// The dual `{x : ⟨x, y⟩ ≤ 1 ∀ y ∈ P}` of a reflexive polytope: the hull of
/// its facet normals.
pub fn dual(p: &LatticePolytope) -> Result<LatticePolytope> {
    if !is_reflexive(p)? {
        return Err(Error::Parse("dual requested for a non-reflexive polytope".into()));
    }
    let normals: Vec<Point> = p.facets().iter().map(|f| f.normal.clone()).collect();
    LatticePolytope::hull(&normals)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Normal,
    NotNormal,
    /// Levels below the completeness bound were not all checked.
    Inconclusive,
}

/// A point of `kP` that is not a sum of `k` lattice points of `P`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalityWitness {
    pub point: Point,
    pub level: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct NormalityCertificate {
    pub verdict: Verdict,
    pub checked_levels: Vec<u32>,
    /// Checking every level up to this bound decides normality.
    pub level_bound: u32,
    pub witness: Option<NormalityWitness>,
}

impl NormalityCertificate {
    pub fn is_normal(&self) -> bool {
        self.verdict == Verdict::Normal
    }
}

#[derive(Clone, Debug)]
pub struct NormalityOptions {
    /// Highest dilation to check; `None` means the completeness bound.
    pub max_level: Option<u32>,
    /// Cap on the size of any level set or sumset.
    pub point_budget: u64,
}

impl Default for NormalityOptions {
    fn default() -> Self {
        NormalityOptions {
            max_level: None,
            point_budget: 50_000_000,
        }
    }
}

/// Levels `2..=max(2, m-1)` decide normality: the Hilbert basis of the cone
/// over an `m`-dimensional lattice polytope lives in degrees `≤ m - 1`.
pub fn normality_level_bound(p: &LatticePolytope) -> u32 {
    (p.dim() as u32).saturating_sub(1).max(2)
}

pub fn is_normal(p: &LatticePolytope) -> Result<NormalityCertificate> {
    is_normal_with(p, &NormalityOptions::default())
}

pub fn is_normal_with(p: &LatticePolytope, opts: &NormalityOptions) -> Result<NormalityCertificate> {
    p.require_full_dimensional()?;
    let bound = normality_level_bound(p);
    let top = opts.max_level.unwrap_or(bound).min(bound);
    let base = p.lattice_points(1);
    let mut sumset: HashSet<Point> = base.iter().cloned().collect();
    let mut checked = Vec::new();
    for k in 2..=top {
        let mut next: HashSet<Point> = HashSet::with_capacity(sumset.len() * 4);
        for s in &sumset {
            for b in &base {
                next.insert(s.iter().zip(b).map(|(x, y)| x + y).collect());
            }
            if next.len() as u64 > opts.point_budget {
                return Err(Error::BudgetExceeded {
                    what: format!("sumset at level {k}"),
                    budget: opts.point_budget,
                });
            }
        }
        sumset = next;
        let level_count = p.count_lattice_points(k);
        if level_count > opts.point_budget {
            return Err(Error::BudgetExceeded {
                what: format!("lattice points at level {k}"),
                budget: opts.point_budget,
            });
        }
        checked.push(k);
        if level_count != sumset.len() as u64 {
            let point = p
                .lattice_points(k)
                .into_iter()
                .find(|z| !sumset.contains(z))
                .expect("sumset is contained in the dilate");
            return Ok(NormalityCertificate {
                verdict: Verdict::NotNormal,
                checked_levels: checked,
                level_bound: bound,
                witness: Some(NormalityWitness { point, level: k }),
            });
        }
    }
    let verdict = if top >= bound { Verdict::Normal } else { Verdict::Inconclusive };
    Ok(NormalityCertificate {
        verdict,
        checked_levels: checked,
        level_bound: bound,
        witness: None,
    })
}

/// Rechecks a witness by a memoised decomposition search that never builds
/// the sumset: true iff `z ∈ kP` and `z` is not a sum of `k` points of `P`.
pub fn verify_witness(p: &LatticePolytope, w: &NormalityWitness) -> bool {
    if !p.contains_dilated(&w.point, w.level as i64) {
        return false;
    }
    let base = p.lattice_points(1);
    let mut failed: HashSet<(Point, u32)> = HashSet::new();
    fn decomposes(
        p: &LatticePolytope,
        base: &[Point],
        z: &Point,
        k: u32,
        failed: &mut HashSet<(Point, u32)>,
    ) -> bool {
        if k == 1 {
            return p.contains(z);
        }
        if failed.contains(&(z.clone(), k)) {
            return false;
        }
        for a in base {
            let rest: Point = z.iter().zip(a).map(|(x, y)| x - y).collect();
            if p.contains_dilated(&rest, (k - 1) as i64) && decomposes(p, base, &rest, k - 1, failed) {
                return true;
            }
        }
        failed.insert((z.clone(), k));
        false
    }
    !decomposes(p, &base, &w.point, w.level, &mut failed)
}

/// One unimodular class of reflexive polygons.
#[derive(Clone, Debug, Serialize)]
pub struct PolygonClass {
    pub vertices: Vec<Point>,
    pub boundary_points: u64,
    pub ehrhart: EhrhartPolynomial,
    pub normal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Census {
    pub radius: i64,
    pub polygons_enumerated: usize,
    pub classes: Vec<PolygonClass>,
    /// Class counts keyed by boundary lattice point count.
    pub histogram: BTreeMap<u64, usize>,
}

fn cross(u: &[i64], v: &[i64]) -> i64 {
    u[0] * v[1] - u[1] * v[0]
}

fn half(v: &[i64]) -> u8 {
    if v[1] > 0 || (v[1] == 0 && v[0] > 0) {
        0
    } else {
        1
    }
}

/// Every lattice polygon with vertices in `[-radius, radius]^2` whose only
/// interior lattice point is the origin.
///
/// Vertices are primitive, listed counterclockwise starting from the one of
/// least angle; consecutive vertices `u, v` satisfy `det(u, v) = gcd(v - u)`,
/// which says the triangle `0uv` has no lattice points off the edge `uv`.
pub fn one_interior_point_polygons(radius: i64) -> Vec<Vec<Point>> {
    let mut cands: Vec<Point> = Vec::new();
    for x in -radius..=radius {
        for y in -radius..=radius {
            if x.gcd(&y) == 1 {
                cands.push(vec![x, y]);
            }
        }
    }
    cands.sort_by(|a, b| {
        half(a)
            .cmp(&half(b))
            .then_with(|| 0.cmp(&cross(a, b)))
    });
    let step_ok = |u: &Point, v: &Point| {
        let c = cross(u, v);
        let g = (v[0] - u[0]).gcd(&(v[1] - u[1]));
        c > 0 && c == g
    };
    let turn_ok = |u: &Point, v: &Point, w: &Point| {
        let a = [v[0] - u[0], v[1] - u[1]];
        let b = [w[0] - v[0], w[1] - v[1]];
        cross(&a, &b) > 0
    };
    let mut out = Vec::new();
    fn rec(
        cands: &[Point],
        chain: &mut Vec<usize>,
        out: &mut Vec<Vec<Point>>,
        step_ok: &dyn Fn(&Point, &Point) -> bool,
        turn_ok: &dyn Fn(&Point, &Point, &Point) -> bool,
    ) {
        let last = *chain.last().expect("nonempty chain");
        let first = chain[0];
        if chain.len() >= 3 {
            let n = chain.len();
            let (a, b) = (&cands[chain[n - 2]], &cands[last]);
            let (f, g) = (&cands[first], &cands[chain[1]]);
            if step_ok(b, f) && turn_ok(a, b, f) && turn_ok(b, f, g) {
                out.push(chain.iter().map(|&k| cands[k].clone()).collect());
            }
        }
        for next in (last + 1)..cands.len() {
            let v = &cands[next];
            if !step_ok(&cands[last], v) {
                continue;
            }
            if chain.len() >= 2 && !turn_ok(&cands[chain[chain.len() - 2]], &cands[last], v) {
                continue;
            }
            chain.push(next);
            rec(cands, chain, out, step_ok, turn_ok);
            chain.pop();
        }
    }
    for start in 0..cands.len() {
        let mut chain = vec![start];
        rec(&cands, &mut chain, &mut out, &step_ok, &turn_ok);
    }
    out
}

fn census_in_box(radius: i64) -> Result<(usize, Vec<(LatticePolytope, u64)>)> {
    let polygons = one_interior_point_polygons(radius);
    let mut reps: Vec<(LatticePolytope, u64)> = Vec::new();
    for verts in &polygons {
        let poly = LatticePolytope::hull(verts)?;
        let boundary = poly.count_lattice_points(1) - 1;
        let mut known = false;
        for (rep, b) in &reps {
            if *b == boundary
                && rep.vertices().len() == poly.vertices().len()
                && unimodular_equivalent(rep, &poly)?
            {
                known = true;
                break;
            }
        }
        if !known {
            reps.push((poly, boundary));
        }
    }
    Ok((polygons.len(), reps))
}

/// Reflexive polygons up to unimodular equivalence, enumerated in a box of
/// radius 4; the same enumeration at radius 5 must produce no new class.
pub fn classify_reflexive_2d() -> Result<Census> {
    classify_reflexive_2d_in_box(4)
}

pub fn classify_reflexive_2d_in_box(radius: i64) -> Result<Census> {
    let (enumerated, reps) = census_in_box(radius)?;
    let (_, wider) = census_in_box(radius + 1)?;
    for (poly, b) in &wider {
        let mut found = false;
        for (rep, rb) in &reps {
            if rb == b && unimodular_equivalent(rep, poly)? {
                found = true;
                break;
            }
        }
        if !found {
            return Err(Error::BudgetExceeded {
                what: format!("a reflexive polygon class escapes the radius-{radius} box"),
                budget: radius as u64,
            });
        }
    }
    let mut classes = Vec::with_capacity(reps.len());
    for (poly, boundary) in reps {
        if !is_reflexive(&poly)? {
            return Err(Error::Parse("census produced a non-reflexive polygon".into()));
        }
        classes.push(PolygonClass {
            vertices: poly.vertices().to_vec(),
            boundary_points: boundary,
            ehrhart: ehrhart::ehrhart_polynomial(&poly)?,
            normal: is_normal(&poly)?.is_normal(),
        });
    }
    classes.sort_by(|a, b| {
        a.boundary_points
            .cmp(&b.boundary_points)
            .then_with(|| a.vertices.len().cmp(&b.vertices.len()))
            .then_with(|| a.vertices.cmp(&b.vertices))
    });
    let mut histogram = BTreeMap::new();
    for c in &classes {
        *histogram.entry(c.boundary_points).or_insert(0) += 1;
    }
    Ok(Census {
        radius,
        polygons_enumerated: enumerated,
        classes,
        histogram,
    })
}

/// Which invariants to compute in a report.
#[derive(Clone, Debug)]
pub struct ReportOptions {
    pub reflexive: bool,
    pub normality: Option<NormalityOptions>,
    pub f_vector: bool,
    pub ehrhart: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            reflexive: true,
            normality: Some(NormalityOptions::default()),
            f_vector: true,
            ehrhart: true,
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Timings {
    pub reflexive_ms: Option<u128>,
    pub normality_ms: Option<u128>,
    pub f_vector_ms: Option<u128>,
    pub ehrhart_ms: Option<u128>,
}

/// All invariants of one polytope. Key order is stable.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub input: String,
    pub ambient_dim: usize,
    pub vertices: Vec<Point>,
    pub facets: Vec<Facet>,
    pub reflexive: Option<bool>,
    pub normal: Option<NormalityCertificate>,
    pub f_vector: Option<FVector>,
    pub ehrhart: Option<EhrhartPolynomial>,
    pub volume: Option<Exact>,
    pub normalized_volume: Option<String>,
    pub vertex_count: usize,
    pub facet_count: usize,
    pub timings: Timings,
}

fn timed<T>(f: impl FnOnce() -> Result<T>) -> Result<(T, u128)> {
    let start = Instant::now();
    let v = f()?;
    Ok((v, start.elapsed().as_millis()))
}

pub fn reflexivity_report(p: &LatticePolytope, input: &str) -> Result<AnalysisReport> {
    analysis_report(p, input, &ReportOptions::default())
}

pub fn analysis_report(
    p: &LatticePolytope,
    input: &str,
    opts: &ReportOptions,
) -> Result<AnalysisReport> {
    p.require_full_dimensional()?;
    let mut timings = Timings::default();
    let reflexive = if opts.reflexive {
        let (r, t) = timed(|| is_reflexive(p))?;
        timings.reflexive_ms = Some(t);
        Some(r)
    } else {
        None
    };
    let normal = match &opts.normality {
        Some(o) => {
            let (c, t) = timed(|| is_normal_with(p, o))?;
            timings.normality_ms = Some(t);
            Some(c)
        }
        None => None,
    };
    let f_vector = if opts.f_vector {
        let (f, t) = timed(|| p.f_vector())?;
        timings.f_vector_ms = Some(t);
        Some(f)
    } else {
        None
    };
    let ehrhart = if opts.ehrhart {
        let (e, t) = timed(|| ehrhart::ehrhart_polynomial(p))?;
        timings.ehrhart_ms = Some(t);
        Some(e)
    } else {
        None
    };
    let volume = ehrhart.as_ref().map(|e| Exact(e.leading().clone()));
    let normalized_volume = ehrhart
        .as_ref()
        .map(|e| BigUint::to_string(&e.normalized_volume()));
    Ok(AnalysisReport {
        input: input.to_string(),
        ambient_dim: p.ambient_dim(),
        vertices: p.vertices().to_vec(),
        facets: p.facets().to_vec(),
        reflexive,
        normal,
        f_vector,
        ehrhart,
        volume,
        normalized_volume,
        vertex_count: p.vertices().len(),
        facet_count: p.facet_count(),
        timings,
    })
}
