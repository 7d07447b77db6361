//! Toric ideals of the `Ω` polytopes and the three explicit binomial
//! families `G_OO`, `G_OC`, `G_CC` with their reverse lexicographic orders.
//!
//! Variables of every family are indexed by poset ideals; the family only
//! changes the monomial map `π`. For the chain side, the ideal `J` stands for
//! the antichain `max(J)`.
//!
//! All checks here are degree-bounded: they verify a finite prefix of the
//! Hilbert function, never the statement for all degrees.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constructions::{chain_polytope, omega, order_polytope};
use crate::error::{Error, Result};
use crate::linalg;
use crate::polytope::LatticePolytope;
use crate::poset::{has_common_linear_extension, IndexSet, Poset};

/// Default for the highest degree checked by the Hilbert and injectivity
/// checks.
pub const DEFAULT_DEGREE: u32 = 4;
pub const DEFAULT_PAIR_BUDGET: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    OO,
    OC,
    CC,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::OO, Family::OC, Family::CC];

    pub fn name(self) -> &'static str {
        match self {
            Family::OO => "oo",
            Family::OC => "oc",
            Family::CC => "cc",
        }
    }

    fn x_is_chain(self) -> bool {
        self == Family::CC
    }

    fn y_is_chain(self) -> bool {
        self != Family::OO
    }

    /// `Ω(X_P, Y_Q)` for the two polytope kinds of this family.
    pub fn omega(self, p: &Poset, q: &Poset) -> Result<LatticePolytope> {
        let x = if self.x_is_chain() { chain_polytope(p) } else { order_polytope(p) };
        let y = if self.y_is_chain() { chain_polytope(q) } else { order_polytope(q) };
        omega(&x, &y)
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "oo" => Ok(Family::OO),
            "oc" => Ok(Family::OC),
            "cc" => Ok(Family::CC),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ToricVariable {
    X(IndexSet),
    Y(IndexSet),
    Z,
}

impl fmt::Display for ToricVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ToricVariable::X(i) => write!(f, "x{i}"),
            ToricVariable::Y(j) => write!(f, "y{j}"),
            ToricVariable::Z => write!(f, "z"),
        }
    }
}

/// Exponent vector indexed by variable rank (rank 0 is the smallest
/// variable).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, k: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.0[k] = 1;
        m
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |acc, (k, _)| acc | 1 << k)
    }
}

/// `first - second`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Binomial {
    pub first: Monomial,
    pub second: Monomial,
}

/// A total order on the variables (listed from smallest to largest) and the
/// degree reverse lexicographic order it induces.
#[derive(Clone, Debug, Serialize)]
pub struct MonomialOrder {
    pub variables: Vec<ToricVariable>,
}

impl MonomialOrder {
    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn rank(&self, v: ToricVariable) -> Option<usize> {
        self.variables.iter().position(|&w| w == v)
    }

    /// Degree first; on a tie the monomial with the larger exponent of the
    /// smallest variable where they differ is the smaller one.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        a.degree().cmp(&b.degree()).then_with(|| {
            match a.0.iter().zip(&b.0).find(|(x, y)| x != y) {
                Some((x, y)) => y.cmp(x),
                None => Ordering::Equal,
            }
        })
    }
}

/// Image of a monomial under `π`: `d + 1` lattice coordinates followed by
/// the degree in `s`.
pub type Image = Vec<i64>;

#[derive(Clone, Debug, Serialize)]
pub struct BinomialSystem {
    pub family: Family,
    pub p: Poset,
    pub q: Poset,
    pub order: MonomialOrder,
    /// `π` of each variable, by rank.
    pub images: Vec<Image>,
    pub generators: Vec<Binomial>,
}

/// Ideals sorted so that inclusion is respected: by cardinality, then by
/// characteristic vector `(χ_1, …, χ_d)` lexicographically.
fn ordered_ideals(p: &Poset) -> Vec<IndexSet> {
    let d = p.size();
    let mut ideals = p.ideals();
    ideals.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.indicator(d).cmp(&b.indicator(d)))
    });
    ideals
}

/// The variables of the family (smallest first) and their `π`-images.
pub fn toric_presentation(
    family: Family,
    p: &Poset,
    q: &Poset,
) -> Result<(Vec<ToricVariable>, Vec<Image>)> {
    let d = p.size();
    if q.size() != d {
        return Err(Error::DimensionMismatch(d, q.size()));
    }
    let mut vars = vec![ToricVariable::Z];
    let mut images = vec![{
        let mut z = vec![0; d + 2];
        z[d + 1] = 1;
        z
    }];
    let image = |set: IndexSet, sign: i64| -> Image {
        let mut v: Vec<i64> = set.indicator(d).into_iter().map(|x| sign * x).collect();
        v.push(sign);
        v.push(1);
        v
    };
    for j in ordered_ideals(q) {
        let set = if family.y_is_chain() { q.max_elements(j)? } else { j };
        vars.push(ToricVariable::Y(j));
        images.push(image(set, -1));
    }
    for i in ordered_ideals(p) {
        let set = if family.x_is_chain() { p.max_elements(i)? } else { i };
        vars.push(ToricVariable::X(i));
        images.push(image(set, 1));
    }
    Ok((vars, images))
}

fn image_of(images: &[Image], m: &Monomial) -> Image {
    let mut out = vec![0; images[0].len()];
    for (img, &e) in images.iter().zip(&m.0) {
        if e > 0 {
            for (o, x) in out.iter_mut().zip(img) {
                *o += e as i64 * x;
            }
        }
    }
    out
}

/// Unordered pairs of incomparable ideals, each once, in variable order.
fn incomparable_pairs(ideals: &[IndexSet]) -> Vec<(IndexSet, IndexSet)> {
    let mut out = Vec::new();
    for (k, &a) in ideals.iter().enumerate() {
        for &b in &ideals[k + 1..] {
            if !a.is_subset(b) && !b.is_subset(a) {
                out.push((a, b));
            }
        }
    }
    out
}

impl BinomialSystem {
    pub fn nvars(&self) -> usize {
        self.order.nvars()
    }

    pub fn image(&self, m: &Monomial) -> Image {
        image_of(&self.images, m)
    }

    pub fn is_balanced(&self, b: &Binomial) -> bool {
        self.image(&b.first) == self.image(&b.second)
    }

    /// A system with arbitrary generators over the family's variables. The
    /// generators are not required to lie in the toric ideal.
    pub fn with_generators(&self, generators: Vec<Binomial>) -> BinomialSystem {
        BinomialSystem { generators, ..self.clone() }
    }

    fn var(&self, v: ToricVariable) -> Monomial {
        let k = self.order.rank(v).expect("variable of this system");
        Monomial::var(self.nvars(), k)
    }

    /// Parses `"x{1}*y{}"`-style products, with `^k` for powers.
    pub fn monomial(&self, text: &str) -> Result<Monomial> {
        let mut m = Monomial::one(self.nvars());
        for factor in text.split('*').map(str::trim).filter(|s| !s.is_empty()) {
            let (name, power) = match factor.split_once('^') {
                Some((n, e)) => (n, e.parse::<u32>().map_err(|e| Error::Parse(e.to_string()))?),
                None => (factor, 1),
            };
            let k = self
                .order
                .variables
                .iter()
                .position(|v| v.to_string() == name)
                .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
            m.0[k] += power;
        }
        Ok(m)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .0
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| {
                let v = self.order.variables[k].to_string();
                if e == 1 { v } else { format!("{v}^{e}") }
            })
            .collect();
        if parts.is_empty() { "1".into() } else { parts.join("*") }
    }

    pub fn format_binomial(&self, b: &Binomial) -> String {
        format!("{} - {}", self.format_monomial(&b.first), self.format_monomial(&b.second))
    }
}

/// The explicit generators of the family. Panics if a generated binomial is
/// not `π`-balanced, which would be a bug in the construction.
pub fn generate_family(family: Family, p: &Poset, q: &Poset) -> Result<BinomialSystem> {
    let (variables, images) = toric_presentation(family, p, q)?;
    let mut sys = BinomialSystem {
        family,
        p: p.clone(),
        q: q.clone(),
        order: MonomialOrder { variables },
        images,
        generators: Vec::new(),
    };
    let x = |i: IndexSet| ToricVariable::X(i);
    let y = |j: IndexSet| ToricVariable::Y(j);
    let mut gens: Vec<(ToricVariable, ToricVariable, ToricVariable, ToricVariable)> = Vec::new();

    let ideals_p = ordered_ideals(p);
    let ideals_q = ordered_ideals(q);
    // (i), (v), (ix): x-x relations.
    for (a, b) in incomparable_pairs(&ideals_p) {
        let meet = if family.x_is_chain() { p.ideal_star(a, b)? } else { a.intersection(b) };
        gens.push((x(a), x(b), x(a.union(b)), x(meet)));
    }
    // (ii), (vi), (x): y-y relations.
    for (a, b) in incomparable_pairs(&ideals_q) {
        let meet = if family.y_is_chain() { q.ideal_star(a, b)? } else { a.intersection(b) };
        gens.push((y(a), y(b), y(a.union(b)), y(meet)));
    }
    // (iii), (vii), (xi): x_I y_J against the pair with a common index
    // removed from both sides, the index maximal on both.
    for &i in &ideals_p {
        let max_i = p.max_elements(i)?;
        for &j in &ideals_q {
            let max_j = q.max_elements(j)?;
            for k in max_i.intersection(max_j).iter() {
                let i2 = if family.x_is_chain() {
                    p.ideal_generated_by(max_i.without(k))
                } else {
                    i.without(k)
                };
                let j2 = if family.y_is_chain() {
                    q.ideal_generated_by(max_j.without(k))
                } else {
                    j.without(k)
                };
                gens.push((x(i), y(j), x(i2), y(j2)));
            }
        }
    }
    // (iv), (viii), (xii)
    gens.push((
        x(IndexSet::EMPTY),
        y(IndexSet::EMPTY),
        ToricVariable::Z,
        ToricVariable::Z,
    ));

    let generators: Vec<Binomial> = gens
        .into_iter()
        .map(|(a, b, c, e)| Binomial {
            first: sys.var(a).mul(&sys.var(b)),
            second: sys.var(c).mul(&sys.var(e)),
        })
        .collect();
    for g in &generators {
        assert!(
            sys.is_balanced(g),
            "generator {} is not in the toric ideal",
            sys.format_binomial(g)
        );
    }
    sys.generators = generators;
    Ok(sys)
}

/// Outcome of the Buchberger check.
#[derive(Clone, Debug, Serialize)]
pub struct SpairReport {
    /// Every generator lies in the toric ideal.
    pub balanced: bool,
    pub pairs_checked: usize,
    /// The first pair whose S-polynomial has a nonzero remainder.
    pub failure: Option<(usize, usize)>,
    pub ok: bool,
}

/// `(lead, trail)` of a binomial, or `None` for the zero binomial.
fn oriented(order: &MonomialOrder, a: Monomial, b: Monomial) -> Option<(Monomial, Monomial)> {
    match order.cmp(&a, &b) {
        Ordering::Greater => Some((a, b)),
        Ordering::Less => Some((b, a)),
        Ordering::Equal => None,
    }
}

/// Reduces `a - b` modulo the oriented generators; true iff it reaches zero.
fn reduces_to_zero(order: &MonomialOrder, gens: &[(Monomial, Monomial)], a: Monomial, b: Monomial) -> bool {
    let mut cur = oriented(order, a, b);
    while let Some((lead, trail)) = cur {
        let Some((u, v)) = gens.iter().find(|(u, _)| u.divides(&lead)) else {
            return false;
        };
        let replaced = u.quotient_of(&lead).mul(v);
        cur = oriented(order, replaced, trail);
    }
    true
}

fn oriented_generators(sys: &BinomialSystem) -> Vec<(Monomial, Monomial)> {
    sys.generators
        .iter()
        .filter_map(|g| oriented(&sys.order, g.first.clone(), g.second.clone()))
        .collect()
}

/// Reduces the S-polynomial of every generator pair, lowest degree first.
pub fn spair_report(sys: &BinomialSystem, max_pairs: usize) -> Result<SpairReport> {
    let gens = oriented_generators(sys);
    let n = gens.len();
    let total = n * n.saturating_sub(1) / 2;
    if total > max_pairs {
        return Err(Error::BudgetExceeded {
            what: "S-pairs".into(),
            budget: max_pairs as u64,
        });
    }
    let mut pairs: Vec<(u32, usize, usize)> = Vec::with_capacity(total);
    for i in 0..n {
        for j in (i + 1)..n {
            pairs.push((gens[i].0.lcm(&gens[j].0).degree(), i, j));
        }
    }
    pairs.sort();
    let failures: Vec<(usize, usize)> = pairs
        .par_iter()
        .filter_map(|&(_, i, j)| {
            let (ui, vi) = &gens[i];
            let (uj, vj) = &gens[j];
            let l = ui.lcm(uj);
            // S(f_i, f_j) = (l/u_j) v_j - (l/u_i) v_i
            let a = uj.quotient_of(&l).mul(vj);
            let b = ui.quotient_of(&l).mul(vi);
            (!reduces_to_zero(&sys.order, &gens, a, b)).then_some((i, j))
        })
        .collect();
    let balanced = sys.generators.iter().all(|g| sys.is_balanced(g));
    let failure = failures.into_iter().min();
    Ok(SpairReport {
        balanced,
        pairs_checked: total,
        failure,
        ok: balanced && failure.is_none(),
    })
}

/// True iff the generators lie in the toric ideal and form a Gröbner basis
/// of the ideal they generate.
pub fn spair_reduce_verify(sys: &BinomialSystem, max_pairs: usize) -> Result<bool> {
    Ok(spair_report(sys, max_pairs)?.ok)
}

/// Minimal generators of the ideal of leading monomials, sorted.
pub fn initial_ideal(sys: &BinomialSystem) -> Vec<Monomial> {
    let mut leads: Vec<Monomial> = oriented_generators(sys).into_iter().map(|(u, _)| u).collect();
    leads.sort();
    leads.dedup();
    let minimal: Vec<Monomial> = leads
        .iter()
        .filter(|m| !leads.iter().any(|o| o != *m && o.divides(m)))
        .cloned()
        .collect();
    minimal
}

pub fn is_squarefree(monomials: &[Monomial]) -> bool {
    monomials.iter().all(Monomial::is_squarefree)
}

/// Calls `visit` on every degree-`n` monomial divisible by no element of
/// `initial`.
fn for_each_standard(nvars: usize, initial: &[Monomial], n: u32, visit: &mut dyn FnMut(&Monomial)) {
    fn rec(
        k: usize,
        left: u32,
        cur: &mut Monomial,
        initial: &[Monomial],
        visit: &mut dyn FnMut(&Monomial),
    ) {
        if k == cur.0.len() {
            if left == 0 {
                visit(cur);
            }
            return;
        }
        if k + 1 == cur.0.len() {
            cur.0[k] = left;
            if !initial.iter().any(|m| m.divides(cur)) {
                visit(cur);
            }
            cur.0[k] = 0;
            return;
        }
        for e in 0..=left {
            cur.0[k] = e;
            if e > 0 && initial.iter().any(|m| m.divides(cur)) {
                break;
            }
            rec(k + 1, left - e, cur, initial, visit);
        }
        cur.0[k] = 0;
    }
    let mut cur = Monomial::one(nvars);
    rec(0, n, &mut cur, initial, visit);
}

/// Standard monomials of degree `n`, counted by direct enumeration.
pub fn standard_monomial_count(sys: &BinomialSystem, n: u32) -> u64 {
    count_standard_by_enumeration(sys.nvars(), &initial_ideal(sys), n)
}

pub fn count_standard_by_enumeration(nvars: usize, initial: &[Monomial], n: u32) -> u64 {
    let mut count = 0u64;
    for_each_standard(nvars, initial, n, &mut |_| count += 1);
    count
}

fn binomial_coefficient(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Standard monomial count through the Stanley-Reisner complex of a
/// squarefree initial ideal: a face `F` contributes `C(n-1, |F|-1)` monomials
/// of degree `n` with support exactly `F`. Returns `None` when the ideal is
/// not squarefree.
pub fn count_standard_by_faces(nvars: usize, initial: &[Monomial], n: u32) -> Option<u64> {
    if !is_squarefree(initial) {
        return None;
    }
    if n == 0 {
        return Some(1);
    }
    let supports: Vec<u64> = initial.iter().map(Monomial::support).collect();
    let mut by_size = vec![0u64; nvars + 1];
    fn rec(k: usize, nvars: usize, face: u64, size: usize, supports: &[u64], by_size: &mut [u64]) {
        if k == nvars {
            by_size[size] += 1;
            return;
        }
        rec(k + 1, nvars, face, size, supports, by_size);
        let grown = face | 1 << k;
        if !supports.iter().any(|&s| s & grown == s) {
            rec(k + 1, nvars, grown, size + 1, supports, by_size);
        }
    }
    rec(0, nvars, 0, 0, &supports, &mut by_size);
    Some(
        (1..=nvars)
            .map(|s| by_size[s] * binomial_coefficient(n as u64 - 1, s as u64 - 1))
            .sum(),
    )
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeCheck {
    pub degree: u32,
    pub standard_monomials: u64,
    pub lattice_points: u64,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct HilbertReport {
    pub degrees: Vec<DegreeCheck>,
    /// Index in `Z^{d+1}` of the lattice spanned by the degree-one images.
    pub lattice_index: Option<u128>,
    pub ok: bool,
}

/// Compares standard monomial counts with `|nΩ ∩ Z^{d+1}|` for
/// `n ≤ n_max`, and checks that the degree-one images span `Z^{d+1}`.
pub fn hilbert_report(sys: &BinomialSystem, n_max: u32) -> Result<HilbertReport> {
    let om = sys.family.omega(&sys.p, &sys.q)?;
    let initial = initial_ideal(sys);
    let degrees: Vec<DegreeCheck> = (0..=n_max)
        .map(|n| {
            let standard = count_standard_by_enumeration(sys.nvars(), &initial, n);
            let points = om.count_lattice_points(n);
            DegreeCheck {
                degree: n,
                standard_monomials: standard,
                lattice_points: points,
                ok: standard == points,
            }
        })
        .collect();
    let m = sys.p.size() + 1;
    let points: Vec<Vec<i64>> = sys.images.iter().map(|v| v[..m].to_vec()).collect();
    let lattice_index = linalg::lattice_index(&points, m)?;
    let ok = degrees.iter().all(|c| c.ok) && lattice_index == Some(1);
    Ok(HilbertReport { degrees, lattice_index, ok })
}

pub fn hilbert_match(sys: &BinomialSystem, n_max: u32) -> Result<bool> {
    Ok(hilbert_report(sys, n_max)?.ok)
}

/// For each degree `0..=n_max`, whether `π` is injective on the standard
/// monomials of that degree.
pub fn injectivity_by_degree(sys: &BinomialSystem, n_max: u32) -> Vec<bool> {
    let initial = initial_ideal(sys);
    (0..=n_max)
        .map(|n| {
            let mut seen: HashSet<Image> = HashSet::new();
            let mut injective = true;
            for_each_standard(sys.nvars(), &initial, n, &mut |m| {
                if !seen.insert(sys.image(m)) {
                    injective = false;
                }
            });
            injective
        })
        .collect()
}

pub fn injectivity_check(sys: &BinomialSystem, n_max: u32) -> bool {
    injectivity_by_degree(sys, n_max).into_iter().all(|b| b)
}

/// Number of distinct `π`-images of all degree-`n` monomials: the Hilbert
/// function of the toric ring itself.
pub fn distinct_image_count(sys: &BinomialSystem, n: u32) -> u64 {
    let mut seen: HashSet<Image> = HashSet::new();
    for_each_standard(sys.nvars(), &[], n, &mut |m| {
        seen.insert(sys.image(m));
    });
    seen.len() as u64
}

/// Everything the `groebner` subcommand reports for one system.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub family: Family,
    pub variable_count: usize,
    pub generator_count: usize,
    pub spair_ok: bool,
    pub pairs_checked: usize,
    pub initial_ideal_size: usize,
    pub squarefree: bool,
    pub hilbert: HilbertReport,
    pub injective: Vec<bool>,
    pub ok: bool,
}

pub fn verify_family(family: Family, p: &Poset, q: &Poset, n_max: u32) -> Result<VerificationReport> {
    let sys = generate_family(family, p, q)?;
    verify_system(&sys, n_max)
}

pub fn verify_system(sys: &BinomialSystem, n_max: u32) -> Result<VerificationReport> {
    let spair = spair_report(sys, DEFAULT_PAIR_BUDGET)?;
    let initial = initial_ideal(sys);
    let squarefree = is_squarefree(&initial);
    let hilbert = hilbert_report(sys, n_max)?;
    let injective = injectivity_by_degree(sys, n_max);
    let ok = spair.ok && squarefree && hilbert.ok && injective.iter().all(|&b| b);
    Ok(VerificationReport {
        family: sys.family,
        variable_count: sys.nvars(),
        generator_count: sys.generators.len(),
        spair_ok: spair.ok,
        pairs_checked: spair.pairs_checked,
        initial_ideal_size: initial.len(),
        squarefree,
        hilbert,
        injective,
        ok,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct IsomorphismReport {
    /// Standard monomial counts by degree for `OO`, or `None` when `P` and
    /// `Q` have no common linear extension.
    pub oo: Option<Vec<u64>>,
    pub oo_skipped: Option<String>,
    pub oc: Vec<u64>,
    pub cc: Vec<u64>,
    pub counts_agree: bool,
    /// `x_I ↦ x_{max(I)}`, `y_{max(J)} ↦ y_{max(J)}` carries the `OC`
    /// initial ideal onto the `CC` initial ideal.
    pub phi_maps_initial_ideals: bool,
}

/// Compares the three quotients by initial ideals degree by degree.
pub fn rings_isomorphism_check(p: &Poset, q: &Poset, n_max: u32) -> Result<IsomorphismReport> {
    let counts = |sys: &BinomialSystem| -> Vec<u64> {
        (0..=n_max).map(|n| standard_monomial_count(sys, n)).collect()
    };
    let oc = generate_family(Family::OC, p, q)?;
    let cc = generate_family(Family::CC, p, q)?;
    let (oo, oo_skipped) = if has_common_linear_extension(p, q)? {
        (Some(counts(&generate_family(Family::OO, p, q)?)), None)
    } else {
        (None, Some(Error::NoCommonLinearExtension.to_string()))
    };
    let oc_counts = counts(&oc);
    let cc_counts = counts(&cc);
    let counts_agree = oc_counts == cc_counts && oo.as_ref().map_or(true, |c| *c == oc_counts);

    // Both rings index variables by ideals, so φ acts on ranks through the
    // variable tags.
    let rank_in_cc: HashMap<ToricVariable, usize> =
        cc.order.variables.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let phi = |m: &Monomial| -> Monomial {
        let mut out = Monomial::one(cc.nvars());
        for (k, &e) in m.0.iter().enumerate() {
            out.0[rank_in_cc[&oc.order.variables[k]]] += e;
        }
        out
    };
    let mut mapped: Vec<Monomial> = initial_ideal(&oc).iter().map(phi).collect();
    mapped.sort();
    let phi_maps_initial_ideals = mapped == initial_ideal(&cc);
    Ok(IsomorphismReport {
        oo,
        oo_skipped,
        oc: oc_counts,
        cc: cc_counts,
        counts_agree,
        phi_maps_initial_ideals,
    })
}
