//! Replays the concrete examples: the non-normal `Ω`, the f-vector
//! separation, the eleven equi-Ehrhart polytopes, the simplex formula, the
//! reflexive polygon census and a volume spot check.

use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Value};

use crate::constructions::{chain_polytope, gamma, omega, order_polytope};
use crate::ehrhart::{self, EhrhartPolynomial, Exact};
use crate::error::Result;
use crate::fixtures;
use crate::polytope::{unimodular_equivalent_with_budget, LatticePolytope};
use crate::poset::Poset;
use crate::reflexive::{self, NormalityOptions, Verdict};

/// One checked claim.
#[derive(Clone, Debug, Serialize)]
pub struct Claim {
    pub name: String,
    pub pass: bool,
    pub detail: Value,
}

impl Claim {
    fn new(name: &str, pass: bool, detail: Value) -> Claim {
        Claim { name: name.to_string(), pass, detail }
    }
}

#[derive(Clone, Debug)]
pub struct ExampleOptions {
    /// Continue the non-normality witness search up to the completeness
    /// bound when levels 2 and 3 find nothing.
    pub deepen: bool,
    /// Budget for each pairwise equivalence search among the eleven.
    pub search_budget: u64,
}

impl Default for ExampleOptions {
    fn default() -> Self {
        ExampleOptions { deepen: true, search_budget: 200_000 }
    }
}

pub fn nonnormal_example(opts: &ExampleOptions) -> Result<Vec<Claim>> {
    let base = fixtures::nonnormal_base();
    let base_cert = reflexive::is_normal(&base)?;
    let om = omega(&base, &base)?;
    let reflexive = reflexive::is_reflexive(&om)?;
    let budget = 200_000_000;
    let mut cert = reflexive::is_normal_with(&om, &NormalityOptions { max_level: Some(3), point_budget: budget })?;
    if cert.witness.is_none() && opts.deepen {
        cert = reflexive::is_normal_with(&om, &NormalityOptions { max_level: None, point_budget: budget })?;
    }
    let rechecked = cert.witness.as_ref().is_some_and(|w| reflexive::verify_witness(&om, w));
    Ok(vec![
        Claim::new(
            "nonnormal/base_is_normal",
            base_cert.verdict == Verdict::Normal,
            json!({ "vertices": base.vertices().len(), "dim": base.dim(), "certificate": base_cert }),
        ),
        Claim::new(
            "nonnormal/omega_is_reflexive",
            reflexive,
            json!({ "vertices": om.vertices().len(), "facets": om.facet_count() }),
        ),
        Claim::new(
            "nonnormal/omega_is_not_normal",
            cert.verdict == Verdict::NotNormal && rechecked,
            json!({ "certificate": cert, "witness_rechecked": rechecked }),
        ),
    ])
}

pub fn transcription_check() -> Result<Claim> {
    let reference = chain_polytope(&fixtures::p6_prime());
    let g = gamma(&reference, &reference)?;
    let mut equal = Vec::new();
    for q in [fixtures::p7_first(), fixtures::p7_second(), fixtures::p7_third()] {
        let c = chain_polytope(&q);
        equal.push(gamma(&c, &c)? == g);
    }
    Ok(Claim::new(
        "transcription/gamma_chain_hulls_agree",
        equal.iter().all(|&b| b),
        json!({ "P1": equal[0], "P2": equal[1], "P3": equal[2] }),
    ))
}

pub fn f_vector_separation() -> Result<Claim> {
    let p = fixtures::p6();
    let c = chain_polytope(&p);
    let target = omega(&c, &c)?.f_vector()?;
    let sevens = [
        ("P'", fixtures::p6_prime()),
        ("P1", fixtures::p7_first()),
        ("P2", fixtures::p7_second()),
        ("P3", fixtures::p7_third()),
    ];
    let mut pass = true;
    let mut rows = Vec::new();
    for (name, q) in &sevens {
        let (oq, cq) = (order_polytope(q), chain_polytope(q));
        let fo = gamma(&oq, &oq)?.f_vector()?;
        let fc = gamma(&cq, &cq)?.f_vector()?;
        pass &= fo != target && fc != target;
        rows.push(json!({ "poset": name, "gamma_oo": fo.counts, "gamma_cc": fc.counts }));
    }
    Ok(Claim::new(
        "fvector/omega_cc_separated",
        pass,
        json!({ "omega_cc": target.counts, "compared": rows }),
    ))
}

/// Ehrhart equality of the eleven, plus pairwise distinguishing evidence.
pub fn equi_ehrhart(opts: &ExampleOptions) -> Result<Claim> {
    let family = fixtures::equi_ehrhart_family()?;
    let polys: Vec<LatticePolytope> = family.iter().map(|(_, p)| p.clone()).collect();
    let cmp = ehrhart::ehrhart_equal(&polys)?;
    let all_reflexive = polys
        .iter()
        .map(reflexive::is_reflexive)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .all(|b| b);
    let mut pairs = Vec::new();
    for i in 0..family.len() {
        for j in (i + 1)..family.len() {
            let verdict = match unimodular_equivalent_with_budget(&family[i].1, &family[j].1, opts.search_budget) {
                Ok(eq) if eq.equivalent => "equivalent".to_string(),
                Ok(eq) => format!("separated by {}", eq.separated_by.unwrap_or_default()),
                Err(crate::Error::SearchBudgetExceeded { .. }) => "not certified non-equivalent".to_string(),
                Err(e) => return Err(e),
            };
            pairs.push(json!({ "a": family[i].0, "b": family[j].0, "evidence": verdict }));
        }
    }
    let f_vectors: Vec<Value> = family
        .iter()
        .map(|(name, p)| Ok(json!({ "polytope": name, "f_vector": p.f_vector()?.counts })))
        .collect::<Result<_>>()?;
    Ok(Claim::new(
        "equi_ehrhart/eleven_share_polynomial",
        cmp.equal && all_reflexive && family.len() == 11,
        json!({
            "polynomial": cmp.polynomials.first(),
            "all_reflexive": all_reflexive,
            "f_vectors": f_vectors,
            "pairs": pairs,
        }),
    ))
}

/// `Σ_{i=0}^{d} C(n+d-i, d)`.
pub fn simplex_formula(d: usize) -> EhrhartPolynomial {
    (0..=d).fold(EhrhartPolynomial::from_integers(&[0]), |acc, i| {
        acc.add(&EhrhartPolynomial::binomial(d as i64 - i as i64, d))
    })
}

pub fn simplex_example() -> Result<Claim> {
    let mut pass = true;
    let mut rows = Vec::new();
    for d in 2..=4 {
        let got = ehrhart::ehrhart_polynomial(&fixtures::reflexive_simplex(d))?;
        let expected = simplex_formula(d);
        pass &= got == expected;
        rows.push(json!({ "d": d, "ehrhart": got, "formula": expected }));
    }
    Ok(Claim::new("simplex/ehrhart_formula", pass, Value::Array(rows)))
}

pub fn census_example() -> Result<Claim> {
    let census = reflexive::classify_reflexive_2d()?;
    let hist: Vec<usize> = (3..=9).map(|b| census.histogram.get(&b).copied().unwrap_or(0)).collect();
    Ok(Claim::new(
        "census/sixteen_reflexive_polygons",
        census.classes.len() == 16 && hist == [1, 3, 2, 4, 2, 3, 1],
        json!({ "classes": census.classes.len(), "histogram_b3_to_b9": hist }),
    ))
}

pub fn volume_spot_check() -> Result<Claim> {
    let a2 = Poset::antichain(2);
    let formula = ehrhart::volume_omega_formula(&a2, &a2, false)?;
    let om = omega(&order_polytope(&a2), &chain_polytope(&a2))?;
    let leading = ehrhart::volume(&om)?;
    Ok(Claim::new(
        "volume/two_antichain",
        formula == leading && formula.to_i64() == Some(2) && formula.is_integer(),
        json!({ "linext": Exact(formula), "ehrhart": Exact(leading) }),
    ))
}

pub fn all_claims(opts: &ExampleOptions) -> Result<Vec<Claim>> {
    let mut out = nonnormal_example(opts)?;
    out.push(transcription_check()?);
    out.push(f_vector_separation()?);
    out.push(equi_ehrhart(opts)?);
    out.push(simplex_example()?);
    out.push(census_example()?);
    out.push(volume_spot_check()?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_formula_values() {
        // d = 2: 1 + 3n(n+1)/2 lattice points in the n-th dilate
        let f = simplex_formula(2);
        for n in 0..5i64 {
            assert_eq!(f.eval(n), ehrhart::rational(1 + 3 * n * (n + 1) / 2, 1));
        }
    }

    #[test]
    fn cheap_claims_pass() {
        assert!(transcription_check().unwrap().pass);
        assert!(simplex_example().unwrap().pass);
        assert!(volume_spot_check().unwrap().pass);
    }
}
