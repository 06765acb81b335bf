//! Rebuilds every design behind the fixture tables, with its code, so that
//! tests can re-check them independently of the library's own certificates.
#![allow(dead_code)]

use std::sync::Arc;

use qvariety::affine::{ClassicalCode, VarietySpec};
use qvariety::designer::{design_univariate, UniRule, UnivariateDesign};
use qvariety::galois::{make_field, Elem, FieldSpec};
use qvariety::hyper::{design_multivariate, design_subfield_multivariate, MultiRule, SubfieldRule};
use qvariety::ortho::Metric;
use qvariety::quantum::StabilizerParams;

pub struct Built {
    pub fixture: &'static str,
    pub label: String,
    pub code: ClassicalCode,
    pub metric: Metric,
    /// Designed distance of the CSS code.
    pub d: u64,
    pub params: StabilizerParams,
    /// Exponents of the code in box coordinates.
    pub delta: Vec<Vec<u64>>,
    /// Axis moduli `N_j - 1` and the base of the subfield, for subfield designs.
    pub subfield: Option<(Vec<u64>, u64)>,
}

pub fn spec(p: u64, e: u32, n: &[u64], j: &[usize]) -> VarietySpec {
    VarietySpec::new(Arc::new(make_field(p, e).unwrap()), n.to_vec(), j).unwrap()
}

fn uni(fixture: &'static str, d: UnivariateDesign, ts: impl IntoIterator<Item = usize>, out: &mut Vec<Built>) {
    for t in ts {
        let o = design_univariate(UnivariateDesign { t, ..d }).unwrap();
        let metric = if d.rule.hermitian() { Metric::Hermitian { q: d.p.pow(d.s) } } else { Metric::Euclidean };
        out.push(Built {
            fixture,
            label: format!("{} t={t}", d.rule.name()),
            d: o.params.d_lower,
            code: o.code,
            metric,
            params: o.params,
            delta: o.delta.iter().map(|&x| vec![x]).collect(),
            subfield: Some((vec![d.n - 1], if d.rule.hermitian() { d.p.pow(2 * d.s) } else { d.p.pow(d.s) })),
        });
    }
}

fn multi(fixture: &'static str, s: &VarietySpec, ts: &[(u64, MultiRule)], metric: Metric, out: &mut Vec<Built>) {
    for &(t, rule) in ts {
        let m = design_multivariate(s, t, rule, metric).unwrap();
        out.push(Built {
            fixture,
            label: format!("{} t={t}", rule.name()),
            d: m.params.d_lower,
            code: m.code,
            metric,
            params: m.params,
            delta: m.delta,
            subfield: None,
        });
    }
}

fn sub(fixture: &'static str, s: &VarietySpec, ts: &[u64], sub_exp: u32, metric: Metric, rule: SubfieldRule, out: &mut Vec<Built>) {
    for &t in ts {
        let m = design_subfield_multivariate(s, t, sub_exp, metric, rule).unwrap();
        out.push(Built {
            fixture,
            label: format!("{} t={t}", rule.name()),
            d: m.params.d_lower,
            code: m.code,
            metric,
            params: m.params,
            delta: m.delta,
            subfield: Some((s.n_list().iter().map(|n| n - 1).collect(), s.field().characteristic().pow(sub_exp))),
        });
    }
}

fn ruled(ts: impl IntoIterator<Item = u64>, rule: MultiRule) -> Vec<(u64, MultiRule)> {
    ts.into_iter().map(|t| (t, rule)).collect()
}

/// Every self-orthogonal code used by the fixtures.
pub fn catalogue() -> Vec<Built> {
    let mut out = Vec::new();
    uni("len80_f3", UnivariateDesign::new(UniRule::HermitianQuarter, 3, 2, 1, 81, 1), 1..=16, &mut out);
    uni("len105_f5", UnivariateDesign::new(UniRule::HermitianQuarter, 5, 2, 1, 105, 0).with_zero(), 0..=16, &mut out);
    uni("len92_f4", UnivariateDesign::new(UniRule::HermitianCompanion, 2, 12, 2, 92, 1).with_zero(), 1..=5, &mut out);
    uni("len94_f4", UnivariateDesign::new(UniRule::EuclideanCompanion, 2, 10, 2, 94, 0).with_zero(), 0..=3, &mut out);

    let e = Metric::Euclidean;
    multi("len98_f7", &spec(7, 1, &[3, 7, 7], &[1]), &ruled(2..=4, MultiRule::EuclideanWindow), e, &mut out);
    let mut ts = ruled(2..=3, MultiRule::EuclideanWindow);
    ts.push((4, MultiRule::DirectCheck));
    multi("len72_f7", &spec(7, 1, &[7, 7, 3], &[1, 2, 3]), &ts, e, &mut out);

    let mut ts = ruled(4..=6, MultiRule::HermitianBivariate);
    ts.extend(ruled(7..=12, MultiRule::DirectCheck));
    multi("len144_f7", &spec(7, 2, &[49, 4], &[1, 2]), &ts, Metric::Hermitian { q: 7 }, &mut out);
    let mut ts = ruled([4], MultiRule::HermitianBivariate);
    ts.extend(ruled(5..=6, MultiRule::DirectCheck));
    multi("len96_f4", &spec(2, 4, &[16, 6], &[]), &ts, Metric::Hermitian { q: 4 }, &mut out);
    multi("len72_f5", &spec(5, 2, &[25, 4], &[1, 2]), &ruled([4], MultiRule::DirectCheck), Metric::Hermitian { q: 5 }, &mut out);
    let mut ts = ruled(2..=10, MultiRule::HermitianSquareGrid);
    ts.extend(ruled(11..=12, MultiRule::DirectCheck));
    multi("len64_f4", &spec(2, 4, &[16, 4], &[]), &ts, Metric::Hermitian { q: 4 }, &mut out);
    multi("len729_f9", &spec(3, 4, &[81, 9], &[]), &ruled(2..=21, MultiRule::HermitianSquareGrid), Metric::Hermitian { q: 9 }, &mut out);

    sub("len70_f5", &spec(5, 4, &[14, 5], &[]), &[3], 2, Metric::Hermitian { q: 5 }, SubfieldRule::Direct, &mut out);
    let ts: Vec<u64> = (2..=16).collect();
    sub("len512_f4", &spec(2, 8, &[256, 2], &[]), &ts, 4, Metric::Hermitian { q: 4 }, SubfieldRule::FirstAxis, &mut out);
    out
}

/// Plain inner product `sum x_i^c y_i`, one field operation at a time.
pub fn naive_product(f: &FieldSpec, x: &[Elem], y: &[Elem], c: u64) -> Elem {
    x.iter().zip(y).fold(f.zero(), |acc, (&a, &b)| f.add(acc, f.mul(f.pow(a, c), b)))
}

/// Every pair of generator rows has zero product.
pub fn naive_self_orthogonal(code: &ClassicalCode, metric: Metric) -> bool {
    let f = code.field();
    let rows = code.basis().rows();
    let c = metric.conj_power();
    rows.iter().all(|x| rows.iter().all(|y| naive_product(f, x, y, c).is_zero()))
}
