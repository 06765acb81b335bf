//! Univariate designs: unions of cyclotomic sets with a consecutive run of
//! exponents, certified self-orthogonal on the subfield-subcode.

use std::sync::Arc;

use serde::Serialize;

use crate::affine::{build_code, subfield_subcode, ClassicalCode, DeltaSet, VarietySpec};
use crate::cyclo::{gcd, Axis, CyclotomicPartition};
use crate::error::{Error, Result};
use crate::galois::{is_prime, make_field};
use crate::oracle::{no_word_below, Budget};
use crate::ortho::Metric;
use crate::quantum::{certify_design, check_gap, enlargement_params, Certified, DistanceWitness, StabilizerParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum UniRule {
    /// Euclidean, length `p^r - 1`, `a_t < p^{r/2} - 1`.
    HalfFieldEuclidean,
    /// Euclidean, `a_t` below every companion representative `N - 1 - a_i`.
    EuclideanCompanion,
    /// Hermitian, length `p^{2r} - 1`, `a_t < p^r - 1`.
    HalfFieldHermitian,
    /// Hermitian, `N - 1 | p^{4s} - 1`, `a_t < (N - 1)/(p^s + 1)`.
    HermitianQuarter,
    /// Hermitian, `a_t < (N - 1)/(p^{2(r/s - 1)s} + 1)`.
    HermitianBounded,
    /// Hermitian, `a_t` below every companion representative `N - 1 - p^s a_i`.
    HermitianCompanion,
}

impl UniRule {
    pub const ALL: [UniRule; 6] = [
        UniRule::HalfFieldEuclidean,
        UniRule::EuclideanCompanion,
        UniRule::HalfFieldHermitian,
        UniRule::HermitianQuarter,
        UniRule::HermitianBounded,
        UniRule::HermitianCompanion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            UniRule::HalfFieldEuclidean => "half-field-euclidean",
            UniRule::EuclideanCompanion => "euclidean-companion",
            UniRule::HalfFieldHermitian => "half-field-hermitian",
            UniRule::HermitianQuarter => "hermitian-quarter",
            UniRule::HermitianBounded => "hermitian-bounded",
            UniRule::HermitianCompanion => "hermitian-companion",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|r| r.name() == s)
    }

    pub fn hermitian(self) -> bool {
        !matches!(self, UniRule::HalfFieldEuclidean | UniRule::EuclideanCompanion)
    }
}

/// Input of [`design_univariate`]. `t` counts nonzero representatives;
/// `t2 < t` requests the enlarged code from the nested pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct UnivariateDesign {
    pub rule: UniRule,
    pub p: u64,
    pub r: u32,
    pub s: u32,
    pub n: u64,
    pub t: usize,
    pub t2: Option<usize>,
    /// Length `N` with the point 0 and the set `{0}` added (needs `p | N`).
    pub with_zero: bool,
    /// Allows `a_t = p^r - 1` for the half-field Hermitian rule when `r/s` is odd.
    pub strengthened: bool,
    /// On a failed gap, claim the largest distance the gap still allows
    /// instead of failing.
    pub relax_gap: bool,
}

impl UnivariateDesign {
    pub fn new(rule: UniRule, p: u64, r: u32, s: u32, n: u64, t: usize) -> Self {
        UnivariateDesign { rule, p, r, s, n, t, t2: None, with_zero: false, strengthened: false, relax_gap: false }
    }

    pub fn with_zero(mut self) -> Self {
        self.with_zero = true;
        self
    }

    pub fn enlarged(mut self, t2: usize) -> Self {
        self.t2 = Some(t2);
        self
    }

    pub fn relaxed(mut self) -> Self {
        self.relax_gap = true;
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct UnivariateOutcome {
    /// Nonzero representatives `a_1..a_t`.
    pub representatives: Vec<u64>,
    pub delta: Vec<u64>,
    pub inner_delta: Option<Vec<u64>>,
    pub params: StabilizerParams,
    pub hypotheses: Vec<String>,
    #[serde(skip)]
    pub code: ClassicalCode,
}

fn hyp(rule: UniRule, detail: impl Into<String>) -> Error {
    Error::Hypothesis { rule: rule.name().to_string(), detail: detail.into() }
}

fn pow(p: u64, e: u32) -> Result<u64> {
    p.checked_pow(e).ok_or(Error::FieldTooLarge { p, e, budget: u64::MAX })
}

/// Smallest `e` with `modulus | p^e - 1` and `step | e`.
fn field_exponent(p: u64, modulus: u64, step: u32) -> Result<u32> {
    if modulus == 0 || modulus.is_multiple_of(p) {
        return Err(Error::InvalidVariety(format!("N - 1 = {modulus} is not coprime to the characteristic {p}")));
    }
    let mut e = step;
    loop {
        let mut x = 1u128;
        for _ in 0..e {
            x = x * p as u128 % modulus as u128;
        }
        if x == 1 % modulus as u128 {
            return Ok(e);
        }
        e += step;
    }
}

/// The common data of one nested level of a design.
struct Level {
    delta: Vec<u64>,
    designed: u64,
    run: DistanceWitness,
}

struct Context {
    design: UnivariateDesign,
    spec: VarietySpec,
    part: CyclotomicPartition,
    reps: Vec<u64>,
    sub_exp: u32,
    metric: Metric,
    base: u64,
}

impl Context {
    fn new(design: UnivariateDesign) -> Result<Self> {
        let UnivariateDesign { rule, p, s, n, with_zero, .. } = design;
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if s == 0 || design.r == 0 {
            return Err(Error::ZeroExponent);
        }
        if n < 3 {
            return Err(Error::InvalidVariety(format!("N = {n} is too small")));
        }
        if with_zero && n % p != 0 {
            return Err(hyp(rule, format!("p = {p} does not divide N = {n}, so 0 cannot be added")));
        }
        let sub_exp = if rule.hermitian() { 2 * s } else { s };
        let base = pow(p, sub_exp)?;
        let modulus = n - 1;
        let field = Arc::new(make_field(p, field_exponent(p, modulus, sub_exp)?)?);
        let j: &[usize] = if with_zero { &[] } else { &[1] };
        let spec = VarietySpec::new(field, vec![n], j)?;
        let part = CyclotomicPartition::new(&[Axis::Cyclic(modulus)], base)?;
        let reps = part.sets().iter().map(|c| c.representative()[0]).collect();
        let metric = if rule.hermitian() { Metric::Hermitian { q: pow(p, s)? } } else { Metric::Euclidean };
        Ok(Context { design, spec, part, reps, sub_exp, metric, base })
    }

    fn rep(&self, i: usize) -> Result<u64> {
        self.reps.get(i).copied().ok_or(Error::LadderExhausted { index: i, count: self.reps.len() })
    }

    fn set_of(&self, x: u64) -> &[Vec<u64>] {
        &self.part.sets()[self.part.index_of(&[x]).expect("residue in range")].elements
    }

    /// Checks the rule's inequality for `a_1..a_t`.
    fn hypotheses(&self, t: usize) -> Result<Vec<String>> {
        let UnivariateDesign { rule, p, r, s, n, strengthened, .. } = self.design;
        let m = n - 1;
        let at = self.rep(t)?;
        let mut out = Vec::new();
        let divides = |big: u32| -> Result<bool> { Ok((pow(p, big)? - 1) % m == 0) };
        match rule {
            UniRule::HalfFieldEuclidean => {
                if n != pow(p, r)? {
                    return Err(hyp(rule, format!("N = {n} is not p^r = {}", pow(p, r)?)));
                }
                if r % 2 == 0 {
                    if (r / 2) % s != 0 {
                        return Err(hyp(rule, format!("s = {s} does not divide r/2 = {}", r / 2)));
                    }
                    let bound = pow(p, r / 2)? - 1;
                    if at >= bound {
                        return Err(hyp(rule, format!("a_t = {at} is not below p^(r/2) - 1 = {bound}")));
                    }
                    out.push(format!("a_t = {at} < p^(r/2) - 1 = {bound}"));
                } else {
                    if s != 1 {
                        return Err(hyp(rule, "odd r needs s = 1"));
                    }
                    let bound = pow(p, r.div_ceil(2))? - p - 1;
                    if at >= bound {
                        return Err(hyp(rule, format!("a_t = {at} is not below p^((r+1)/2) - p - 1 = {bound}")));
                    }
                    out.push(format!("a_t = {at} < p^((r+1)/2) - p - 1 = {bound}"));
                }
            }
            UniRule::EuclideanCompanion | UniRule::HermitianCompanion => {
                if r % s != 0 {
                    return Err(hyp(rule, format!("s = {s} does not divide r = {r}")));
                }
                let (big, mult) = if rule == UniRule::EuclideanCompanion { (r, 1) } else { (2 * r, pow(p, s)?) };
                if !divides(big)? {
                    return Err(hyp(rule, format!("N - 1 = {m} does not divide p^{big} - 1")));
                }
                let mut least = u64::MAX;
                for i in 1..=t {
                    let ai = self.rep(i)?;
                    let image = (m - (mult as u128 * ai as u128 % m as u128) as u64) % m;
                    least = least.min(self.set_of(image)[0][0]);
                }
                if t > 0 && at >= least {
                    return Err(hyp(rule, format!("a_t = {at} is not below the least companion representative {least}")));
                }
                out.push(format!("a_t = {at} < least companion representative {least}"));
            }
            UniRule::HalfFieldHermitian => {
                if r % s != 0 {
                    return Err(hyp(rule, format!("s = {s} does not divide r = {r}")));
                }
                if n != pow(p, 2 * r)? {
                    return Err(hyp(rule, format!("N = {n} is not p^(2r)")));
                }
                let bound = pow(p, r)? - 1;
                let odd = (r / s) % 2 == 1;
                if strengthened && !odd {
                    return Err(hyp(rule, "the strengthened bound needs r/s odd"));
                }
                let ok = if strengthened { at <= bound } else { at < bound };
                if !ok {
                    return Err(hyp(rule, format!("a_t = {at} exceeds the bound p^r - 1 = {bound}")));
                }
                let coarse = CyclotomicPartition::new(&[Axis::Cyclic(m)], pow(p, s)?)?;
                if coarse.set_containing(&[at])?.representative()[0] != at {
                    return Err(hyp(rule, format!("a_t = {at} is not a representative with respect to p^s")));
                }
                out.push(format!("a_t = {at} {} p^r - 1 = {bound}", if strengthened { "<=" } else { "<" }));
            }
            UniRule::HermitianQuarter => {
                if !divides(4 * s)? {
                    return Err(hyp(rule, format!("N - 1 = {m} does not divide p^(4s) - 1")));
                }
                let ps1 = pow(p, s)? + 1;
                if at * ps1 >= m {
                    return Err(hyp(rule, format!("a_t = {at} is not below (N-1)/(p^s+1) = {m}/{ps1}")));
                }
                out.push(format!("a_t = {at} < (N-1)/(p^s+1) = {m}/{ps1}"));
            }
            UniRule::HermitianBounded => {
                if r % s != 0 || r <= s {
                    return Err(hyp(rule, format!("needs s | r and r > s, got r = {r}, s = {s}")));
                }
                if !divides(2 * r)? {
                    return Err(hyp(rule, format!("N - 1 = {m} does not divide p^(2r) - 1")));
                }
                let denom = pow(p, 2 * (r / s - 1) * s)? + 1;
                if at as u128 * denom as u128 >= m as u128 {
                    return Err(hyp(rule, format!("a_t = {at} is not below (N-1)/{denom}")));
                }
                out.push(format!("a_t = {at} < (N-1)/{denom}"));
            }
        }
        Ok(out)
    }

    fn level(&self, t: usize) -> Result<Level> {
        let mut delta: Vec<u64> = (1..=t)
            .map(|i| self.rep(i))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flat_map(|a| self.set_of(a).iter().map(|e| e[0]).collect::<Vec<_>>())
            .collect();
        if self.design.with_zero {
            delta.push(0);
        }
        delta.sort();
        let next = self.rep(t + 1)?;
        let start = if self.design.with_zero { 0 } else { 1 };
        if (start..next).any(|x| delta.binary_search(&x).is_err()) {
            return Err(hyp(self.design.rule, format!("exponents {start}..{next} are not all in the set")));
        }
        let len = next - start;
        // A run of length L gives distance L + 1.
        Ok(Level { delta, designed: len + 1, run: DistanceWitness::ConsecutiveRun { start, len } })
    }

    fn code(&self, delta: &[u64]) -> Result<ClassicalCode> {
        let full = build_code(&self.spec, &DeltaSet::new(&self.spec, delta.iter().map(|&x| vec![x]))?)?;
        let sub = subfield_subcode(&full, self.sub_exp)?;
        if sub.dimension() != delta.len() {
            return Err(Error::Certification {
                rule: self.design.rule.name().into(),
                detail: format!("subfield dimension {} differs from |delta| = {}", sub.dimension(), delta.len()),
            });
        }
        Ok(sub)
    }

    fn rule_name(&self, enlarged: bool) -> String {
        let mut s = self.design.rule.name().to_string();
        if self.design.with_zero {
            s.push_str("+zero");
        }
        if enlarged {
            s.push_str("+enlargement");
        }
        s
    }
}

pub fn design_univariate(design: UnivariateDesign) -> Result<UnivariateOutcome> {
    design_univariate_with_budget(design, Budget::from_env())
}

pub fn design_univariate_with_budget(design: UnivariateDesign, budget: Budget) -> Result<UnivariateOutcome> {
    let ctx = Context::new(design)?;
    let t = design.t;
    if t == 0 && !design.with_zero {
        return Err(Error::TOutOfRange { t: 0, max: ctx.reps.len() as u64 - 1 });
    }
    let mut hypotheses = ctx.hypotheses(t)?;
    hypotheses.push(format!("cyclotomic sets modulo {} with respect to {}", design.n - 1, ctx.base));
    let outer = ctx.level(t)?;
    let code = ctx.code(&outer.delta)?;

    if design.rule == UniRule::HermitianQuarter {
        let nonzero = outer.delta.iter().filter(|&&x| x != 0).count() as u64;
        let m = design.n - 1;
        assert!(m - 2 * nonzero >= m - 4 * t as u64, "dimension inequality");
        if gcd(m, pow(design.p, design.s)? - 1) == 1 {
            assert_eq!(nonzero, 2 * t as u64, "sets of size two under the gcd condition");
        }
        hypotheses.push(format!("N - 1 - 2|delta| = {} >= N - 1 - 4t = {}", m - 2 * nonzero, m - 4 * t as u64));
    }

    let outer_params =
        certify_design(&code, ctx.metric, outer.designed, &ctx.rule_name(false), outer.run.clone(), budget)?;
    let representatives = (1..=t).map(|i| ctx.rep(i)).collect::<Result<Vec<_>>>()?;

    let Some(t2) = design.t2 else {
        let mut params = outer_params;
        params.chain.hypotheses = hypotheses.clone();
        return Ok(UnivariateOutcome { representatives, delta: outer.delta, inner_delta: None, params, hypotheses, code });
    };

    if t2 >= t {
        return Err(Error::Nesting { card1: t, card2: t2 });
    }
    let inner = ctx.level(t2)?;
    let inner_code = ctx.code(&inner.delta)?;
    let inner_params =
        certify_design(&inner_code, ctx.metric, inner.designed, &ctx.rule_name(false), inner.run.clone(), budget)?;
    let q = pow(design.p, design.s)?;
    let mut d1 = outer.designed;
    let mut d2 = inner.designed;
    let mut d2_confirmed = inner_params.certified == Certified::Yes;
    if check_gap(d1, d2, q).is_err() {
        // Raise the inner distance with the oracle until the gap closes.
        let mut w = d2 + 1;
        while check_gap(d1, w, q).is_err() {
            w += 1;
        }
        match no_word_below(inner_code.basis(), inner_code.field(), w as usize, budget) {
            Ok(true) => {
                hypotheses.push(format!("oracle: inner dual distance >= {w}"));
                d2 = w;
                d2_confirmed = true;
            }
            Ok(false) | Err(Error::BudgetExceeded { .. }) if design.relax_gap => {
                let lowered = ((q + 1) * d2).div_ceil(q);
                hypotheses.push(format!("gap fails for {d1}; claimed distance lowered to {lowered}"));
                d1 = lowered;
            }
            Ok(false) | Err(Error::BudgetExceeded { .. }) => return Err(Error::Gap { d1, d2, q }),
            Err(e) => return Err(e),
        }
    }
    check_gap(d1, d2, q)?;
    hypotheses.push(format!("gap {d1} <= ceil({} * {d2} / {q})", q + 1));
    let mut params =
        enlargement_params(code.length(), outer.delta.len(), inner.delta.len(), d1, q, &ctx.rule_name(true))?;
    params.certified = if outer_params.certified == Certified::Yes && d2_confirmed {
        Certified::Yes
    } else {
        Certified::UnverifiedDistance
    };
    params.chain.gram = outer_params.chain.gram.iter().chain(&inner_params.chain.gram).cloned().collect();
    params.chain.distance = outer_params.chain.distance.clone();
    params.chain.hypotheses = hypotheses.clone();
    Ok(UnivariateOutcome { representatives, delta: outer.delta, inner_delta: Some(inner.delta), params, hypotheses, code })
}
