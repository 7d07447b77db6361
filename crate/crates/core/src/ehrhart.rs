//! Ehrhart polynomials by exact interpolation of dilate counts, volumes, and
//! the linear-extension volume formula for `Ω(O_P, C_Q)`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polytope::LatticePolytope;
use crate::poset::{has_common_linear_extension, IndexSet, Poset};

/// Exact rational, serialised as `{"num": …, "den": …}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exact(pub BigRational);

fn json_int(v: &BigInt) -> serde_json::Value {
    match v.to_i64() {
        Some(x) => serde_json::Value::from(x),
        None => serde_json::Value::from(v.to_string()),
    }
}

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Rational", 2)?;
        st.serialize_field("num", &json_int(self.0.numer()))?;
        st.serialize_field("den", &json_int(self.0.denom()))?;
        st.end()
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `Σ c_k n^k` with exact rational coefficients, constant term first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EhrhartPolynomial {
    coeffs: Vec<BigRational>,
}

impl Serialize for EhrhartPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let exact: Vec<Exact> = self.coeffs.iter().cloned().map(Exact).collect();
        exact.serialize(s)
    }
}

impl EhrhartPolynomial {
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigRational::zero());
        }
        EhrhartPolynomial { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    /// Interpolates through `values[n] = f(n)` for `n = 0..values.len()`
    /// via forward differences in the binomial basis.
    pub fn interpolate(values: &[u64]) -> Self {
        let mut diffs: Vec<BigInt> = values.iter().map(|&v| BigInt::from(v)).collect();
        let mut leading = Vec::with_capacity(values.len());
        while !diffs.is_empty() {
            leading.push(diffs[0].clone());
            diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        let mut acc = Self::from_integers(&[0]);
        let mut binom = Self::from_integers(&[1]); // C(n, 0)
        for (k, delta) in leading.iter().enumerate() {
            acc = acc.add(&binom.scale(&BigRational::from_integer(delta.clone())));
            // C(n, k+1) = C(n, k) * (n - k) / (k + 1)
            let factor = Self::from_coeffs(vec![
                rational(-(k as i64), k as i64 + 1),
                rational(1, k as i64 + 1),
            ]);
            binom = binom.mul(&factor);
        }
        acc
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &BigRational {
        self.coeffs.last().expect("nonempty")
    }

    pub fn eval(&self, n: i64) -> BigRational {
        let x = BigRational::from_integer(n.into());
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &x + c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = BigRational::zero();
        Self::from_coeffs(
            (0..len)
                .map(|i| {
                    self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero)
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// `C(n + shift, k)` as a polynomial in `n`.
    pub fn binomial(shift: i64, k: usize) -> Self {
        (0..k).fold(Self::from_integers(&[1]), |acc, j| {
            let factor = Self::from_coeffs(vec![
                rational(shift - j as i64, j as i64 + 1),
                rational(1, j as i64 + 1),
            ]);
            acc.mul(&factor)
        })
    }

    /// `d! · leading coefficient`.
    pub fn normalized_volume(&self) -> BigUint {
        let fact: BigInt = (1..=self.degree() as u64).map(BigInt::from).product();
        let v = self.leading() * BigRational::from_integer(fact);
        debug_assert!(v.is_integer());
        v.to_integer().abs().to_biguint().expect("nonnegative")
    }
}

impl fmt::Display for EhrhartPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && self.coeffs.len() > 1 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})n")?,
                _ => write!(f, "({c})n^{k}")?,
            }
        }
        Ok(())
    }
}

/// `|nP ∩ Z^m|` for `n = 0..=max_n`, computed concurrently.
pub fn dilate_counts(p: &LatticePolytope, max_n: u32) -> Vec<u64> {
    (0..=max_n)
        .into_par_iter()
        .map(|n| p.count_lattice_points(n))
        .collect()
}

/// Interpolation through the counts at `n = 0..=dim`.
pub fn ehrhart_polynomial(p: &LatticePolytope) -> Result<EhrhartPolynomial> {
    p.require_full_dimensional()?;
    let counts = dilate_counts(p, p.dim() as u32);
    Ok(EhrhartPolynomial::interpolate(&counts))
}

pub fn volume(p: &LatticePolytope) -> Result<BigRational> {
    Ok(ehrhart_polynomial(p)?.leading().clone())
}

pub fn normalized_volume(p: &LatticePolytope) -> Result<BigUint> {
    Ok(ehrhart_polynomial(p)?.normalized_volume())
}

/// `Σ_{W ⊆ [d+1]} e(Δ_W(P', Q')) / (d+1)!` with `P' = {p_{d+1}} ⊕ P`.
///
/// This is the common volume of the three `Ω` polytopes when `P` and `Q`
/// share a linear extension. With `force` the sum is evaluated regardless,
/// and the result then carries no such meaning.
pub fn volume_omega_formula(p: &Poset, q: &Poset, force: bool) -> Result<BigRational> {
    if !force && !has_common_linear_extension(p, q)? {
        return Err(Error::NoCommonLinearExtension);
    }
    if p.size() != q.size() {
        return Err(Error::DimensionMismatch(p.size(), q.size()));
    }
    let (pb, qb) = (p.adjoin_bottom()?, q.adjoin_bottom()?);
    let n = pb.size();
    let total: BigUint = (0..(1u64 << n))
        .into_par_iter()
        .map(|bits| {
            Poset::delta_w(&pb, &qb, IndexSet::from_bits(bits))
                .map(|delta| delta.linear_extension_count())
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .sum();
    let fact: BigUint = (1..=n as u64).map(BigUint::from).product();
    Ok(BigRational::new(total.into(), fact.into()))
}

/// Coefficient-wise comparison of Ehrhart polynomials.
#[derive(Clone, Debug, Serialize)]
pub struct EhrhartComparison {
    pub equal: bool,
    pub polynomials: Vec<EhrhartPolynomial>,
}

pub fn ehrhart_equal(polytopes: &[LatticePolytope]) -> Result<EhrhartComparison> {
    if let Some(first) = polytopes.first() {
        for p in polytopes {
            if p.dim() != first.dim() || p.ambient_dim() != first.ambient_dim() {
                return Err(Error::DimensionMismatch(first.dim(), p.dim()));
            }
        }
    }
    let polynomials: Vec<EhrhartPolynomial> = polytopes
        .iter()
        .map(ehrhart_polynomial)
        .collect::<Result<_>>()?;
    let equal = polynomials.windows(2).all(|w| w[0] == w[1]);
    Ok(EhrhartComparison { equal, polynomials })
}

impl EhrhartPolynomial {
    pub fn is_one_at_zero(&self) -> bool {
        self.coeffs[0].is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{chain_polytope, omega, order_polytope};

    fn poly(v: &[&[i64]]) -> LatticePolytope {
        LatticePolytope::hull(&v.iter().map(|p| p.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn unit_square_is_n_plus_one_squared() {
        let sq = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(ehrhart_polynomial(&sq).unwrap(), EhrhartPolynomial::from_integers(&[1, 2, 1]));
    }

    #[test]
    fn reflexive_triangle() {
        let tri = poly(&[&[1, 0], &[0, 1], &[-1, -1]]);
        let expected = EhrhartPolynomial::from_coeffs(vec![
            rational(1, 1),
            rational(3, 2),
            rational(3, 2),
        ]);
        assert_eq!(ehrhart_polynomial(&tri).unwrap(), expected);
    }

    #[test]
    fn omega_of_unit_intervals() {
        let seg = poly(&[&[0], &[1]]);
        let om = omega(&seg, &seg).unwrap();
        assert_eq!(dilate_counts(&om, 2), vec![1, 5, 13]);
        assert_eq!(ehrhart_polynomial(&om).unwrap(), EhrhartPolynomial::from_integers(&[1, 2, 2]));
    }

    #[test]
    fn volumes() {
        let cube: Vec<Vec<i64>> = (0..8).map(|c| (0..3).map(|i| (c >> i) & 1).collect()).collect();
        let cube = LatticePolytope::hull(&cube).unwrap();
        assert_eq!(volume(&cube).unwrap(), rational(1, 1));
        assert_eq!(normalized_volume(&cube).unwrap(), BigUint::from(6u32));
        let o = order_polytope(&Poset::chain(2));
        assert_eq!(volume(&o).unwrap(), rational(1, 2));
        assert_eq!(normalized_volume(&o).unwrap(), BigUint::from(1u32));
        let sq = order_polytope(&Poset::antichain(2));
        let om = omega(&sq, &sq).unwrap();
        assert_eq!(volume(&om).unwrap(), rational(2, 1));
        assert_eq!(normalized_volume(&om).unwrap(), BigUint::from(12u32));
    }

    #[test]
    fn omega_volume_formula_examples() {
        let one = Poset::antichain(1);
        assert_eq!(volume_omega_formula(&one, &one, false).unwrap(), rational(2, 1));
        let a2 = Poset::antichain(2);
        assert_eq!(volume_omega_formula(&a2, &a2, false).unwrap(), rational(2, 1));
        // hand expansion: e-values over the eight W sum to 12
        let pb = a2.adjoin_bottom().unwrap();
        let terms: Vec<u64> = (0..8u64)
            .map(|b| {
                let e = Poset::delta_w(&pb, &pb, IndexSet::from_bits(b))
                    .unwrap()
                    .linear_extension_count();
                e.to_u64().unwrap()
            })
            .collect();
        assert_eq!(terms.iter().sum::<u64>(), 12);
        let up = Poset::from_cover_relations(2, &[(1, 2)]).unwrap();
        let down = Poset::from_cover_relations(2, &[(2, 1)]).unwrap();
        assert_eq!(
            volume_omega_formula(&up, &down, false),
            Err(Error::NoCommonLinearExtension)
        );
        assert!(volume_omega_formula(&up, &down, true).is_ok());
    }

    #[test]
    fn formula_matches_leading_coefficient() {
        let c2 = Poset::chain(2);
        let om = omega(&order_polytope(&c2), &chain_polytope(&c2)).unwrap();
        assert_eq!(volume_omega_formula(&c2, &c2, false).unwrap(), volume(&om).unwrap());
    }

    #[test]
    fn equality_reports() {
        let c2 = Poset::chain(2);
        let a = omega(&order_polytope(&c2), &order_polytope(&c2)).unwrap();
        let b = omega(&chain_polytope(&c2), &chain_polytope(&c2)).unwrap();
        let cmp = ehrhart_equal(&[a.clone(), b]).unwrap();
        assert!(cmp.equal);
        assert_eq!(cmp.polynomials.len(), 2);
        let sq = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let big = poly(&[&[-1, -1], &[1, -1], &[-1, 1], &[1, 1]]);
        assert!(!ehrhart_equal(&[sq.clone(), big]).unwrap().equal);
        assert!(ehrhart_equal(&[sq.clone()]).unwrap().equal);
        assert!(matches!(ehrhart_equal(&[sq, a]), Err(Error::DimensionMismatch(2, 3))));
    }

    #[test]
    fn binomial_polynomials() {
        let b = EhrhartPolynomial::binomial(2, 2); // C(n+2, 2)
        for n in 0..6 {
            assert_eq!(b.eval(n), rational((n + 2) * (n + 1) / 2, 1));
        }
    }

    #[test]
    fn interpolation_reproduces_nodes() {
        let values = [1u64, 7, 25, 63, 129];
        let p = EhrhartPolynomial::interpolate(&values);
        for (n, &v) in values.iter().enumerate() {
            assert_eq!(p.eval(n as i64), rational(v as i64, 1));
        }
    }
}
