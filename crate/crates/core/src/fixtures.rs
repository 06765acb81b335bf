//! Named reproduction fixtures, CSV/JSON emission and golden comparison.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Deserialize;

use crate::affine::VarietySpec;
use crate::designer::{design_univariate_with_budget, UniRule, UnivariateDesign};
use crate::error::{Error, Result};
use crate::galois::make_field;
use crate::hyper::{
    design_multivariate_with_budget, design_subfield_multivariate_with_budget, MultiDesign, MultiRule, SubfieldRule,
};
use crate::oracle::Budget;
use crate::ortho::Metric;
use crate::quantum::{enlarge, Certified, StabilizerParams};

pub const HEADER: &str = "n,k,d_lower,q,rule,certified";

pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    run: fn(Budget) -> Result<Vec<StabilizerParams>>,
    golden: &'static str,
}

impl Fixture {
    pub fn run(&self, budget: Budget) -> Result<Vec<StabilizerParams>> {
        (self.run)(budget)
    }

    /// Reference rows `(n, k, d_lower, q)`.
    pub fn golden(&self) -> Result<Vec<GoldenRow>> {
        parse_golden(self.name, self.golden)
    }
}

macro_rules! golden {
    ($name:literal) => {
        include_str!(concat!("../golden/", $name, ".csv"))
    };
}

pub static FIXTURES: &[Fixture] = &[
    Fixture { name: "len80_f3", description: "hermitian-quarter ladder, length 80 over GF(3)", run: len80_f3, golden: golden!("len80_f3") },
    Fixture { name: "len105_f5", description: "hermitian-quarter ladder with zero, length 105 over GF(5)", run: len105_f5, golden: golden!("len105_f5") },
    Fixture { name: "len92_f4", description: "hermitian-companion with zero, length 92 over GF(4)", run: len92_f4, golden: golden!("len92_f4") },
    Fixture { name: "len94_f4", description: "enlarged euclidean-companion with zero, length 94 over GF(4)", run: len94_f4, golden: golden!("len94_f4") },
    Fixture { name: "len98_f7", description: "trivariate euclidean window, length 98 over GF(7)", run: len98_f7, golden: golden!("len98_f7") },
    Fixture { name: "len72_f7", description: "trivariate toric, length 72 over GF(7)", run: len72_f7, golden: golden!("len72_f7") },
    Fixture { name: "len144_f7", description: "hermitian bivariate, length 144 over GF(7)", run: len144_f7, golden: golden!("len144_f7") },
    Fixture { name: "len96_f4", description: "hermitian bivariate, length 96 over GF(4)", run: len96_f4, golden: golden!("len96_f4") },
    Fixture { name: "len72_f5", description: "hermitian direct check, length 72 over GF(5)", run: len72_f5, golden: golden!("len72_f5") },
    Fixture { name: "len64_f4", description: "hermitian square grid, length 64 over GF(4)", run: len64_f4, golden: golden!("len64_f4") },
    Fixture { name: "len729_f9", description: "hermitian square grid, length 729 over GF(9)", run: len729_f9, golden: golden!("len729_f9") },
    Fixture { name: "len70_f5", description: "subfield bivariate with N = (14, 5), length 70 over GF(5)", run: len70_f5, golden: golden!("len70_f5") },
    Fixture { name: "len512_f4", description: "subfield first-axis ladder, length 512 over GF(4)", run: len512_f4, golden: golden!("len512_f4") },
];

pub fn fixture(name: &str) -> Result<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name == name).ok_or_else(|| Error::UnknownFixture(name.to_string()))
}

pub fn run_fixture(name: &str, budget: Budget) -> Result<Vec<StabilizerParams>> {
    fixture(name)?.run(budget)
}

/// Runs every fixture in parallel; results keep registry order.
pub fn run_all(budget: Budget) -> Vec<(&'static str, Result<Vec<StabilizerParams>>)> {
    FIXTURES.par_iter().map(|f| (f.name, f.run(budget))).collect()
}

fn spec(p: u64, e: u32, n: &[u64], j: &[usize]) -> Result<VarietySpec> {
    VarietySpec::new(Arc::new(make_field(p, e)?), n.to_vec(), j)
}

fn uni_ladder(base: UnivariateDesign, ts: impl IntoIterator<Item = usize>, budget: Budget) -> Result<Vec<StabilizerParams>> {
    let ts: Vec<usize> = ts.into_iter().collect();
    ts.into_par_iter()
        .map(|t| Ok(design_univariate_with_budget(UnivariateDesign { t, ..base }, budget)?.params))
        .collect()
}

fn multi(spec: &VarietySpec, t: u64, rule: MultiRule, metric: Metric, budget: Budget) -> Result<MultiDesign> {
    design_multivariate_with_budget(spec, t, rule, metric, budget)
}

/// Enlargement of two certified multivariate designs with distances `t1 > t2`.
fn enlarge_multi(outer: &MultiDesign, inner: &MultiDesign, q: u64) -> Result<StabilizerParams> {
    let rule = format!("{}+enlargement", outer.params.rule);
    let mut params = enlarge(
        outer.code.length(),
        &outer.delta,
        outer.params.d_lower,
        &inner.delta,
        inner.params.d_lower,
        q,
        &rule,
    )?;
    params.certified = if outer.params.certified == Certified::Yes && inner.params.certified == Certified::Yes {
        Certified::Yes
    } else {
        Certified::UnverifiedDistance
    };
    Ok(params)
}

fn len80_f3(budget: Budget) -> Result<Vec<StabilizerParams>> {
    let base = UnivariateDesign::new(UniRule::HermitianQuarter, 3, 2, 1, 81, 1);
    let mut rows = uni_ladder(base, 1..=7, budget)?;
    rows.push(design_univariate_with_budget(UnivariateDesign { t: 8, ..base }.enlarged(7), budget)?.params);
    rows.extend(uni_ladder(base, 9..=16, budget)?);
    Ok(rows)
}

fn len105_f5(budget: Budget) -> Result<Vec<StabilizerParams>> {
    uni_ladder(UnivariateDesign::new(UniRule::HermitianQuarter, 5, 2, 1, 105, 0).with_zero(), 0..=16, budget)
}

fn len92_f4(budget: Budget) -> Result<Vec<StabilizerParams>> {
    uni_ladder(UnivariateDesign::new(UniRule::HermitianCompanion, 2, 12, 2, 92, 1).with_zero(), 1..=5, budget)
}

fn len94_f4(budget: Budget) -> Result<Vec<StabilizerParams>> {
    let base = UnivariateDesign::new(UniRule::EuclideanCompanion, 2, 10, 2, 94, 1).with_zero();
    [(1, 0), (2, 1), (3, 2)]
        .into_iter()
        .map(|(t, t2)| Ok(design_univariate_with_budget(UnivariateDesign { t, ..base }.enlarged(t2).relaxed(), budget)?.params))
        .collect()
}

fn len98_f7(budget: Budget) -> Result<Vec<StabilizerParams>> {
    let s = spec(7, 1, &[3, 7, 7], &[1])?;
    let d: Vec<MultiDesign> =
        (2..=4).map(|t| multi(&s, t, MultiRule::EuclideanWindow, Metric::Euclidean, budget)).collect::<Result<_>>()?;
    let mut rows: Vec<StabilizerParams> = d.iter().map(|x| x.params.clone()).collect();
    rows.push(enlarge_multi(&d[1], &d[0], 7)?);
    rows.push(enlarge_multi(&d[2], &d[1], 7)?);
    Ok(rows)
}

fn len72_f7(budget: Budget) -> Result<Vec<StabilizerParams>> {
    let s = spec(7, 1, &[7, 7, 3], &[1, 2, 3])?;
    let e = Metric::Euclidean;
    let d = [multi(&s, 2, MultiRule::EuclideanWindow, e, budget)?,
        multi(&s, 3, MultiRule::EuclideanWindow, e, budget)?,
        multi(&s, 4, MultiRule::DirectCheck, e, budget)?];
    let mut rows: Vec<StabilizerParams> = d.iter().map(|x| x.params.clone()).collect();
    rows.push(enlarge_multi(&d[1], &d[0], 7)?);
    rows.push(enlarge_multi(&d[2], &d[1], 7)?);
    Ok(rows)
}

fn hermitian_ladder(
    s: &VarietySpec,
    q: u64,
    ruled: impl IntoIterator<Item = u64>,
    rule: MultiRule,
    direct: impl IntoIterator<Item = u64>,
    budget: Budget,
) -> Result<Vec<StabilizerParams>> {
    let h = Metric::Hermitian { q };
    let ruled = ruled.into_iter().map(|t| (t, rule));
    let direct = direct.into_iter().map(|t| (t, MultiRule::DirectCheck));
    ruled.chain(direct).map(|(t, r)| Ok(multi(s, t, r, h, budget)?.params)).collect()
}

fn len144_f7(budget: Budget) -> Result<Vec<StabilizerParams>> {
    hermitian_ladder(&spec(7, 2, &[49, 4], &[1, 2])?, 7, 4..=6, MultiRule::HermitianBivariate, 7..=12, budget)
}

fn len96_f4(budget: Budget) -> Result<Vec<StabilizerParams>> {
    hermitian_ladder(&spec(2, 4, &[16, 6], &[])?, 4, [4], MultiRule::HermitianBivariate, 5..=6, budget)
}

fn len72_f5(budget: Budget) -> Result<Vec<StabilizerParams>> {
    hermitian_ladder(&spec(5, 2, &[25, 4], &[1, 2])?, 5, [], MultiRule::DirectCheck, [4], budget)
}

fn len64_f4(budget: Budget) -> Result<Vec<StabilizerParams>> {
    hermitian_ladder(&spec(2, 4, &[16, 4], &[])?, 4, 2..=10, MultiRule::HermitianSquareGrid, 11..=12, budget)
}

fn len729_f9(budget: Budget) -> Result<Vec<StabilizerParams>> {
    hermitian_ladder(&spec(3, 4, &[81, 9], &[])?, 9, 2..=21, MultiRule::HermitianSquareGrid, [], budget)
}

fn len70_f5(budget: Budget) -> Result<Vec<StabilizerParams>> {
    let s = spec(5, 4, &[14, 5], &[])?;
    let d = design_subfield_multivariate_with_budget(&s, 3, 2, Metric::Hermitian { q: 5 }, SubfieldRule::Direct, budget)?;
    Ok(vec![d.params])
}

fn len512_f4(budget: Budget) -> Result<Vec<StabilizerParams>> {
    let s = spec(2, 8, &[256, 2], &[])?;
    (2..=16)
        .map(|t| {
            let d = design_subfield_multivariate_with_budget(&s, t, 4, Metric::Hermitian { q: 4 }, SubfieldRule::FirstAxis, budget)?;
            Ok(d.params)
        })
        .collect()
}

pub fn to_csv(rows: &[StabilizerParams]) -> Result<String> {
    let mut w = csv::WriterBuilder::new().has_headers(false).terminator(csv::Terminator::Any(b'\n')).from_writer(vec![]);
    for r in rows {
        w.serialize(r).map_err(|e| Error::Io(e.to_string()))?;
    }
    let body = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    Ok(format!("{HEADER}\n{}", String::from_utf8(body).map_err(|e| Error::Io(e.to_string()))?))
}

pub fn from_csv(text: &str) -> Result<Vec<StabilizerParams>> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .map(|r| r.map_err(|e| Error::Io(e.to_string())))
        .collect()
}

pub fn to_json(rows: &[StabilizerParams]) -> Result<String> {
    let mut s = serde_json::to_string_pretty(rows).map_err(|e| Error::Io(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn from_json(text: &str) -> Result<Vec<StabilizerParams>> {
    serde_json::from_str(text).map_err(|e| Error::Io(e.to_string()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
pub struct GoldenRow {
    pub n: usize,
    pub k: usize,
    pub d_lower: u64,
    pub q: u64,
}

fn parse_golden(name: &str, text: &str) -> Result<Vec<GoldenRow>> {
    csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(text.as_bytes())
        .deserialize()
        .map(|r| r.map_err(|e| Error::GoldenMismatch { name: name.into(), detail: format!("unreadable golden file: {e}") }))
        .collect()
}

/// Compares `(n, k, d_lower, q)` row by row against the golden file.
pub fn compare_golden(name: &str, rows: &[StabilizerParams]) -> Result<()> {
    let golden = fixture(name)?.golden()?;
    let mut diffs = Vec::new();
    if golden.len() != rows.len() {
        diffs.push(format!("{} rows, expected {}", rows.len(), golden.len()));
    }
    for (i, (g, r)) in golden.iter().zip(rows).enumerate() {
        let got = GoldenRow { n: r.n, k: r.k, d_lower: r.d_lower, q: r.q };
        if got != *g {
            diffs.push(format!(
                "row {}: got [[{}, {}, >= {}]]_{}, expected [[{}, {}, >= {}]]_{}",
                i + 1,
                got.n,
                got.k,
                got.d_lower,
                got.q,
                g.n,
                g.k,
                g.d_lower,
                g.q
            ));
        }
    }
    if diffs.is_empty() {
        Ok(())
    } else {
        Err(Error::GoldenMismatch { name: name.into(), detail: diffs.join("; ") })
    }
}
