//! Footprint bounds, hyperbolic codes and the multivariate designs built on them.

use serde::Serialize;

use crate::affine::{build_code, subfield_subcode, ClassicalCode, DeltaSet, VarietySpec};
use crate::cyclo::{ordered_representatives, CyclotomicPartition};
use crate::error::{Error, Result};
use crate::linalg::gram;
use crate::oracle::Budget;
use crate::ortho::{monomials_orthogonal, Metric};
use crate::quantum::{certify_design, DistanceWitness, StabilizerParams};

/// `delta_a = prod_j (N_j - eps_j - a_j)` for `a` in the exponent box.
pub fn footprint(spec: &VarietySpec, a: &[u64]) -> u64 {
    (0..spec.m()).map(|j| spec.n_list()[j] - spec.epsilon(j) - a[j]).product()
}

/// Largest exponent `r(N)` of the Euclidean window.
pub fn r_window(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        (n - 1) / 2
    } else {
        ((n - 1) / 2).saturating_sub(1)
    }
}

/// Largest exponent `r_q(N)` of the Hermitian window.
pub fn r_q_window(n: u64, q: u64) -> u64 {
    let m = n - 1;
    if m.is_multiple_of(q + 1) {
        (m / (q + 1)).saturating_sub(1)
    } else {
        m / (q + 1)
    }
}

/// Maps a shifted exponent (range `eps_j..=N_j-1`) into the box, sending
/// `N_j - 1` to `0` on J.
pub fn to_box(spec: &VarietySpec, b: &[u64]) -> Vec<u64> {
    b.iter()
        .enumerate()
        .map(|(j, &x)| if spec.in_j(j) && x == spec.n_list()[j] - 1 { 0 } else { x })
        .collect()
}

/// Inverse of [`to_box`].
pub fn to_shifted(spec: &VarietySpec, a: &[u64]) -> Vec<u64> {
    a.iter()
        .enumerate()
        .map(|(j, &x)| if spec.in_j(j) && x == 0 { spec.n_list()[j] - 1 } else { x })
        .collect()
}

fn check_t(spec: &VarietySpec, t: u64) -> Result<()> {
    let max = spec.length() as u64;
    if t == 0 || t > max {
        return Err(Error::TOutOfRange { t, max });
    }
    Ok(())
}

fn shifted_tuples(spec: &VarietySpec) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for j in 0..spec.m() {
        let lo = spec.epsilon(j);
        let hi = spec.n_list()[j] - 1;
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (lo..=hi).map(move |x| {
                    let mut t = prefix.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

/// `N(J,t)` in shifted coordinates: `prod_j (b_j + 1 - eps_j) < t`.
pub fn n_set(spec: &VarietySpec, t: u64) -> Result<Vec<Vec<u64>>> {
    check_t(spec, t)?;
    Ok(shifted_tuples(spec)
        .into_iter()
        .filter(|b| {
            b.iter()
                .enumerate()
                .map(|(j, &x)| (x + 1 - spec.epsilon(j)) as u128)
                .product::<u128>()
                < t as u128
        })
        .collect())
}

/// `N(J,t)` mapped into the box, sorted.
pub fn n_set_box(spec: &VarietySpec, t: u64) -> Result<Vec<Vec<u64>>> {
    let mut v: Vec<Vec<u64>> = n_set(spec, t)?.iter().map(|b| to_box(spec, b)).collect();
    v.sort();
    Ok(v)
}

/// `M(J,t)`: box tuples with footprint at least `t`.
pub fn m_set(spec: &VarietySpec, t: u64) -> Result<Vec<Vec<u64>>> {
    check_t(spec, t)?;
    Ok(spec.box_tuples().into_iter().filter(|a| footprint(spec, a) >= t).collect())
}

fn code_or_zero(spec: &VarietySpec, tuples: &[Vec<u64>]) -> Result<ClassicalCode> {
    if tuples.is_empty() {
        return Ok(ClassicalCode::zero(spec.field().clone(), spec.length()));
    }
    build_code(spec, &DeltaSet::new(spec, tuples.to_vec())?)
}

/// Whether `p` divides every `N_j` off J.
pub fn divisible_off_j(spec: &VarietySpec) -> bool {
    let p = spec.field().characteristic();
    (0..spec.m()).all(|j| spec.in_j(j) || spec.n_list()[j].is_multiple_of(p))
}

/// `F(J,t)` spanned by `N(J,t)` and `E(J,t)` spanned by `M(J,t)`.
#[derive(Clone, Debug)]
pub struct HyperbolicPair {
    pub f: ClassicalCode,
    pub e: ClassicalCode,
    /// Outcome of the rank and cross-Gram test for `E(J,t) = F(J,t)^perp`,
    /// run when `p | N_j` off J.
    pub equality: Option<bool>,
}

pub fn hyperbolic_code(spec: &VarietySpec, t: u64) -> Result<HyperbolicPair> {
    let f = code_or_zero(spec, &n_set_box(spec, t)?)?;
    let e = code_or_zero(spec, &m_set(spec, t)?)?;
    let equality = divisible_off_j(spec).then(|| {
        let cross = gram(spec.field(), e.generator(), f.generator(), 1);
        e.dimension() + f.dimension() == spec.length() && cross.rows().iter().flatten().all(|x| x.is_zero())
    });
    if equality == Some(false) {
        return Err(Error::Certification {
            rule: "hyperbolic-equality".into(),
            detail: format!("E(J,{t}) differs from the dual of F(J,{t})"),
        });
    }
    Ok(HyperbolicPair { f, e, equality })
}

/// Multivariate design rules over the hyperbolic monomial set `N(J,t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MultiRule {
    /// Euclidean, `N(J,t)` inside the window `r(N_i)` on some axis.
    EuclideanWindow,
    /// Bivariate Euclidean bound on `t` in terms of `r(N_1)`, `r(N_2)`.
    EuclideanBivariate,
    /// Hermitian, `N(J,t)` inside the window `r_q(N_i)` on some axis.
    HermitianWindow,
    /// Bivariate Hermitian bound on `t` in terms of `r_q(N_1)`, `r_q(N_2)`.
    HermitianBivariate,
    /// Hermitian on `N = (q^2, q)` with J empty.
    HermitianSquareGrid,
    /// Pairwise orthogonality over `N(J,t)` without window tests.
    DirectCheck,
}

impl MultiRule {
    pub const ALL: [MultiRule; 6] = [
        MultiRule::EuclideanWindow,
        MultiRule::EuclideanBivariate,
        MultiRule::HermitianWindow,
        MultiRule::HermitianBivariate,
        MultiRule::HermitianSquareGrid,
        MultiRule::DirectCheck,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MultiRule::EuclideanWindow => "euclidean-window",
            MultiRule::EuclideanBivariate => "euclidean-bivariate",
            MultiRule::HermitianWindow => "hermitian-window",
            MultiRule::HermitianBivariate => "hermitian-bivariate",
            MultiRule::HermitianSquareGrid => "hermitian-square-grid",
            MultiRule::DirectCheck => "direct-check",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|r| r.name() == s)
    }
}

/// A certified multivariate design.
#[derive(Clone, Debug, Serialize)]
pub struct MultiDesign {
    /// Monomial exponents in shifted coordinates.
    pub monomials: Vec<Vec<u64>>,
    /// Exponents of the self-orthogonal code, in box coordinates.
    pub delta: Vec<Vec<u64>>,
    pub metric: Metric,
    pub params: StabilizerParams,
    pub hypotheses: Vec<String>,
    #[serde(skip)]
    pub code: ClassicalCode,
}

fn hyp(rule: &str, detail: impl Into<String>) -> Error {
    Error::Hypothesis { rule: rule.to_string(), detail: detail.into() }
}

/// `q` with `q^2 = Q`.
fn hermitian_q(spec: &VarietySpec) -> Result<u64> {
    let order = spec.field().order();
    let p = spec.field().characteristic();
    let e = spec.field().degree();
    if !e.is_multiple_of(2) {
        return Err(Error::NonSquareField(order));
    }
    Ok(p.pow(e / 2))
}

fn window_axis(spec: &VarietySpec, monomials: &[Vec<u64>], cap: impl Fn(u64) -> u64) -> Option<usize> {
    (0..spec.m()).find(|&i| {
        let c = cap(spec.n_list()[i]);
        monomials.iter().all(|b| b[i] <= c)
    })
}

fn require_divisible(spec: &VarietySpec, rule: &str) -> Result<()> {
    let p = spec.field().characteristic();
    for j in 0..spec.m() {
        if !spec.in_j(j) && !spec.n_list()[j].is_multiple_of(p) {
            return Err(hyp(rule, format!("p = {p} does not divide N_{} = {}", j + 1, spec.n_list()[j])));
        }
    }
    Ok(())
}

/// `t` bound of the bivariate corollaries, with `cap` either window.
fn bivariate_bound(spec: &VarietySpec, t: u64, cap: impl Fn(u64) -> u64, rule: &str) -> Result<String> {
    if spec.m() != 2 {
        return Err(hyp(rule, "needs exactly two coordinates"));
    }
    let (r1, r2) = (cap(spec.n_list()[0]), cap(spec.n_list()[1]));
    let (e1, e2) = match spec.j_set().as_slice() {
        [] => (2, 2),
        [1] => (1, 2),
        [1, 2] => (1, 1),
        _ => return Err(hyp(rule, "J = {2} is not covered; swap the coordinates")),
    };
    if t <= r1 + e1 || t <= r2 + e2 {
        Ok(format!("t = {t} <= max({r1} + {e1}, {r2} + {e2})"))
    } else {
        Err(hyp(rule, format!("t = {t} exceeds both {r1} + {e1} and {r2} + {e2}")))
    }
}

/// Self-orthogonal code from `N(J,t)` under the named rule; distance `>= t`.
pub fn design_multivariate(spec: &VarietySpec, t: u64, rule: MultiRule, metric: Metric) -> Result<MultiDesign> {
    design_multivariate_with_budget(spec, t, rule, metric, Budget::from_env())
}

pub fn design_multivariate_with_budget(
    spec: &VarietySpec,
    t: u64,
    rule: MultiRule,
    metric: Metric,
    budget: Budget,
) -> Result<MultiDesign> {
    let name = rule.name();
    let monomials = n_set(spec, t)?;
    let delta = n_set_box(spec, t)?;
    let order = spec.field().order();
    let mut hypotheses = Vec::new();

    let euclidean = matches!(rule, MultiRule::EuclideanWindow | MultiRule::EuclideanBivariate);
    let hermitian = matches!(
        rule,
        MultiRule::HermitianWindow | MultiRule::HermitianBivariate | MultiRule::HermitianSquareGrid
    );
    if euclidean && metric != Metric::Euclidean {
        return Err(hyp(name, "rule is stated for the euclidean product"));
    }
    let q = if hermitian {
        let q = hermitian_q(spec)?;
        if metric != (Metric::Hermitian { q }) {
            return Err(hyp(name, format!("rule needs the hermitian product with q = {q}")));
        }
        q
    } else {
        0
    };
    if euclidean || hermitian {
        require_divisible(spec, name)?;
        hypotheses.push("p divides N_j off J".into());
    }

    match rule {
        MultiRule::EuclideanWindow => {
            let i = window_axis(spec, &monomials, r_window)
                .ok_or_else(|| hyp(name, format!("N(J,{t}) fits no window r(N_i)")))?;
            hypotheses.push(format!("N(J,{t}) within r(N_{}) = {}", i + 1, r_window(spec.n_list()[i])));
        }
        MultiRule::HermitianWindow => {
            let i = window_axis(spec, &monomials, |n| r_q_window(n, q))
                .ok_or_else(|| hyp(name, format!("N(J,{t}) fits no window r_q(N_i)")))?;
            hypotheses.push(format!("N(J,{t}) within r_q(N_{}) = {}", i + 1, r_q_window(spec.n_list()[i], q)));
        }
        MultiRule::EuclideanBivariate => hypotheses.push(bivariate_bound(spec, t, r_window, name)?),
        MultiRule::HermitianBivariate => hypotheses.push(bivariate_bound(spec, t, |n| r_q_window(n, q), name)?),
        MultiRule::HermitianSquareGrid => {
            if spec.m() != 2 || !spec.j_set().is_empty() || spec.n_list() != [q * q, q] {
                return Err(hyp(name, format!("needs J empty and N = ({}, {q})", q * q)));
            }
            if 2 * t > q * q + q || t > 4 * q {
                return Err(hyp(name, format!("t = {t} not below min((q^2+q+1)/2, 4q+1)")));
            }
            hypotheses.push(format!("t = {t} < min({}/2, {})", q * q + q + 1, 4 * q + 1));
        }
        MultiRule::DirectCheck => {
            metric.check_alphabet(order)?;
            for (i, a) in delta.iter().enumerate() {
                for b in &delta[i..] {
                    if !monomials_orthogonal(spec, a, b, metric)? {
                        return Err(Error::DirectCheckRejected { t, a: a.clone(), b: b.clone() });
                    }
                }
            }
            hypotheses.push(format!("all pairs of N(J,{t}) orthogonal"));
        }
    }

    let code = code_or_zero(spec, &delta)?;
    let witness = if divisible_off_j(spec) { DistanceWitness::Footprint { bound: t } } else { DistanceWitness::None };
    let mut params = certify_design(&code, metric, t, name, witness, budget)?;
    params.chain.hypotheses = hypotheses.clone();
    Ok(MultiDesign { monomials, delta, metric, params, hypotheses, code })
}

/// Dual partner of a shifted exponent on coordinate `j` under conjugation `c`.
fn dual_partner(spec: &VarietySpec, j: usize, b: u64, c: u64) -> u64 {
    let m = spec.n_list()[j] - 1;
    if c == 1 {
        return m - b;
    }
    if !spec.in_j(j) && b == 0 {
        return m;
    }
    let cb = (c as u128 * b as u128 % m as u128) as u64;
    (m - cb) % m
}

/// Bivariate design from an explicit monomial set (shifted coordinates),
/// allowing `p` not to divide some `N_j` off J. The distance is the least
/// footprint over the box minus the dual partners of the set, and the
/// leading monomials of the binomial dual generators that appear when `p`
/// does not divide `N_j`.
pub fn design_general_monomials(spec: &VarietySpec, monomials: &[Vec<u64>], metric: Metric) -> Result<MultiDesign> {
    const RULE: &str = "general-monomials";
    if spec.m() != 2 {
        return Err(Error::NotAdmissible("needs exactly two coordinates".into()));
    }
    if monomials.is_empty() {
        return Err(Error::EmptyDelta);
    }
    metric.check_alphabet(spec.field().order())?;
    let p = spec.field().characteristic();
    let n = spec.n_list().to_vec();
    for b in monomials {
        if b.len() != 2 || (0..2).any(|j| b[j] < spec.epsilon(j) || b[j] > n[j] - 1) {
            return Err(Error::OutOfBox { tuple: b.clone(), bounds: n.iter().map(|x| x - 1).collect() });
        }
    }
    let cap = |j: usize| match metric {
        Metric::Hermitian { q } => r_q_window(n[j], q),
        _ => r_window(n[j]),
    };
    let inside = |i: usize| monomials.iter().all(|b| b[i] <= cap(i));
    let p_divides = |j: usize| n[j].is_multiple_of(p);
    let mut hypotheses = Vec::new();

    match spec.j_set().as_slice() {
        [1, 2] => {
            let i = (0..2).find(|&i| inside(i)).ok_or_else(|| Error::NotAdmissible("set fits no window".into()))?;
            hypotheses.push(format!("set within window of axis {}", i + 1));
        }
        [i1] => {
            let i = i1 - 1;
            let j = 1 - i;
            if !inside(i) {
                return Err(Error::NotAdmissible(format!("set leaves the window of axis {}", i + 1)));
            }
            if !p_divides(j) {
                mixed_pairs(monomials, i, j, n[j] - 1)?;
            }
            hypotheses.push(format!("set within window of axis {}", i + 1));
        }
        [] => {
            let j0 = (0..2)
                .find(|&j| p_divides(j) && inside(j))
                .ok_or_else(|| Error::NotAdmissible("no axis with p | N_j whose window holds the set".into()))?;
            let i = 1 - j0;
            if !p_divides(i) {
                for b in monomials.iter().filter(|b| b[i] == n[i] - 1) {
                    let mut partner = b.clone();
                    partner[i] = 0;
                    if !monomials.contains(&partner) {
                        return Err(Error::NotAdmissible(format!("{b:?} present without {partner:?}")));
                    }
                }
            }
            hypotheses.push(format!("set within window of axis {} with p | N_{}", j0 + 1, j0 + 1));
        }
        _ => unreachable!(),
    }

    let c = metric.conj_power();
    let mut excluded = std::collections::HashSet::new();
    let mut leading = Vec::new();
    for b in monomials {
        let partner: Vec<u64> = (0..2).map(|j| dual_partner(spec, j, b[j], c)).collect();
        for j in 0..2 {
            if !spec.in_j(j) && !p_divides(j) && (partner[j] == 0 || partner[j] == n[j] - 1) {
                let mut other = partner.clone();
                other[j] = if partner[j] == 0 { n[j] - 1 } else { 0 };
                excluded.insert(other);
                let mut lead = partner.clone();
                lead[j] = 0;
                leading.push(lead);
            }
        }
        excluded.insert(partner);
    }
    let delta_bound = spec
        .box_tuples()
        .into_iter()
        .filter(|a| !excluded.contains(a))
        .chain(leading)
        .map(|a| footprint(spec, &a))
        .min()
        .ok_or_else(|| Error::NotAdmissible("the dual exponent set is empty".into()))?;

    let mut delta: Vec<Vec<u64>> = monomials.iter().map(|b| to_box(spec, b)).collect();
    delta.sort();
    delta.dedup();
    let code = build_code(spec, &DeltaSet::new(spec, delta.clone())?)?;
    let mut params = certify_design(
        &code,
        metric,
        delta_bound,
        RULE,
        DistanceWitness::Footprint { bound: delta_bound },
        Budget::from_env(),
    )?;
    params.chain.hypotheses = hypotheses.clone();
    Ok(MultiDesign { monomials: monomials.to_vec(), delta, metric, params, hypotheses, code })
}

/// No `(b_i, 0)` together with `(b'_i, N_j - 1)` for `b_i != b'_i`.
fn mixed_pairs(monomials: &[Vec<u64>], i: usize, j: usize, top: u64) -> Result<()> {
    for a in monomials.iter().filter(|b| b[j] == 0) {
        for b in monomials.iter().filter(|b| b[j] == top) {
            if a[i] != b[i] {
                return Err(Error::NotAdmissible(format!("mixed pair {a:?} and {b:?}")));
            }
        }
    }
    Ok(())
}

/// Subfield variants of the hyperbolic designs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubfieldRule {
    /// Companion sets of the closure are disjoint from it.
    Companion,
    /// `t` bounded through the univariate representatives of the first axis.
    FirstAxis,
    /// Gram certification only; the distance must come from the oracle.
    Direct,
}

impl SubfieldRule {
    pub fn name(self) -> &'static str {
        match self {
            SubfieldRule::Companion => "subfield-companion",
            SubfieldRule::FirstAxis => "subfield-first-axis",
            SubfieldRule::Direct => "subfield-direct",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [SubfieldRule::Companion, SubfieldRule::FirstAxis, SubfieldRule::Direct]
            .into_iter()
            .find(|r| r.name() == s)
    }
}

/// `max{a : a representative mod p^R - 1, a < p^{R/2} - 1}` for even `R`,
/// `max{a <= p^{(R+1)/2} - p - 1}` for odd `R`.
pub fn first_axis_bound(p: u64, big_r: u32, base: u64) -> Result<u64> {
    let modulus = p.pow(big_r) - 1;
    let reps = ordered_representatives(modulus, base)?;
    let ok = |a: u64| {
        if big_r.is_multiple_of(2) {
            a + 1 < p.pow(big_r / 2)
        } else {
            a + p < p.pow(big_r.div_ceil(2))
        }
    };
    Ok(reps.into_iter().filter(|&a| ok(a)).max().unwrap_or(0))
}

/// Subfield-subcode over GF(p^sub_exp) of the code of the cyclotomic closure
/// of `N(J,t)` with respect to `p^sub_exp`.
pub fn design_subfield_multivariate(
    spec: &VarietySpec,
    t: u64,
    sub_exp: u32,
    metric: Metric,
    rule: SubfieldRule,
) -> Result<MultiDesign> {
    design_subfield_multivariate_with_budget(spec, t, sub_exp, metric, rule, Budget::from_env())
}

pub fn design_subfield_multivariate_with_budget(
    spec: &VarietySpec,
    t: u64,
    sub_exp: u32,
    metric: Metric,
    rule: SubfieldRule,
    budget: Budget,
) -> Result<MultiDesign> {
    let name = rule.name();
    let field = spec.field();
    let p = field.characteristic();
    if sub_exp == 0 || !field.degree().is_multiple_of(sub_exp) {
        return Err(Error::NotASubfield { sub: sub_exp, e: field.degree() });
    }
    let alphabet = p.pow(sub_exp);
    metric.check_alphabet(alphabet)?;
    let multiplier: i64 = match metric {
        Metric::Euclidean => -1,
        Metric::Hermitian { q } => -(q as i64),
        Metric::Twisted { .. } => return Err(hyp(name, "needs the euclidean or hermitian product")),
    };
    let monomials = n_set(spec, t)?;
    let boxed: Vec<Vec<u64>> = monomials.iter().map(|b| to_box(spec, b)).collect();
    let part = CyclotomicPartition::new(&spec.axes(), alphabet)?;
    let mut hypotheses = Vec::new();
    if rule != SubfieldRule::Direct {
        require_divisible(spec, name)?;
        hypotheses.push("p divides N_j off J".into());
    }

    let mut set_ids: Vec<usize> = boxed.iter().map(|a| part.index_of(a)).collect::<Result<_>>()?;
    set_ids.sort();
    set_ids.dedup();
    match rule {
        SubfieldRule::Companion => {
            for &i in &set_ids {
                let comp = part.companion(&part.sets()[i], multiplier)?;
                if let Some(&k) = set_ids.iter().find(|&&k| part.sets()[k] == *comp) {
                    return Err(Error::CompanionCollision {
                        a: part.sets()[k].representative().to_vec(),
                        b: part.sets()[i].representative().to_vec(),
                    });
                }
            }
            hypotheses.push("closure disjoint from its companion sets".into());
        }
        SubfieldRule::FirstAxis => {
            let n1 = spec.n_list()[0];
            let big_r = (1..64).find(|&r| p.checked_pow(r) == Some(n1)).ok_or_else(|| hyp(name, "N_1 is not a power of p"))?;
            for j in 1..spec.m() {
                if spec.in_j(j) && !(n1 - 1).is_multiple_of(spec.n_list()[j] - 1) {
                    return Err(hyp(name, format!("N_{} - 1 does not divide N_1 - 1", j + 1)));
                }
            }
            let a = first_axis_bound(p, big_r, alphabet)?;
            let relaxed = spec.m() == 2 && matches!(spec.j_set().as_slice(), [] | [2]);
            let limit = a + if relaxed { 2 } else { 1 };
            if t > limit {
                return Err(hyp(name, format!("t = {t} exceeds {limit} (largest admissible representative {a})")));
            }
            hypotheses.push(format!("t = {t} <= {limit} with first-axis representative {a}"));
        }
        SubfieldRule::Direct => {}
    }

    let closure = part.closure(boxed.iter())?;
    let witness = if rule != SubfieldRule::Direct && divisible_off_j(spec) {
        DistanceWitness::Footprint { bound: t }
    } else {
        DistanceWitness::None
    };
    let full = code_or_zero(spec, &closure)?;
    let code = subfield_subcode(&full, sub_exp)?;
    if code.dimension() != closure.len() {
        return Err(Error::Certification {
            rule: name.into(),
            detail: format!("subfield dimension {} differs from the closure size {}", code.dimension(), closure.len()),
        });
    }
    let mut params = certify_design(&code, metric, t, name, witness, budget)?;
    params.chain.hypotheses = hypotheses.clone();
    Ok(MultiDesign { monomials, delta: closure, metric, params, hypotheses, code })
}
