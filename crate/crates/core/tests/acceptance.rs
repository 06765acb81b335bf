//! Acceptance suite: one PASS/FAIL line per criterion.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::{catalogue, naive_product, naive_self_orthogonal, spec, Built};
use qvariety::affine::{build_code, subfield_subcode, DeltaSet, VarietySpec};
use qvariety::cyclo::{Axis, CyclotomicPartition};
use qvariety::fixtures::{compare_golden, run_fixture, FIXTURES};
use qvariety::hyper::{design_multivariate, hyperbolic_code, m_set, MultiRule};
use qvariety::oracle::{min_distance_exact, no_word_below, Budget, DESK_MAX_DISTANCE, DESK_MAX_LENGTH};
use qvariety::ortho::{delta_perp, dual_code, Metric};
use qvariety::designer::{design_univariate, UniRule, UnivariateDesign};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: Vec<String>, ok_detail: String) -> Outcome {
    if failures.is_empty() {
        Outcome { pass: true, detail: ok_detail }
    } else {
        Outcome { pass: false, detail: failures.join("; ") }
    }
}

/// `[[n,k,>=d]]_q` claims in the reference text, whitespace and `\geq` removed.
fn reference_claims() -> BTreeSet<(usize, usize, u64, u64)> {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../paper.md")).unwrap_or_default();
    let flat: String = text.replace("\\geq", "").chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = BTreeSet::new();
    for piece in flat.split("[[").skip(1) {
        let Some((inner, rest)) = piece.split_once("]]_") else { continue };
        let nums: Vec<&str> = inner.split(',').collect();
        let q: String = rest.chars().take_while(|c| c.is_ascii_digit()).collect();
        if let ([n, k, d], Ok(q)) = (nums.as_slice(), q.parse::<u64>()) {
            if let (Ok(n), Ok(k), Ok(d)) = (n.parse(), k.parse(), d.parse()) {
                out.insert((n, k, d, q));
            }
        }
    }
    out
}

fn table_reproduction() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let names = ["len80_f3", "len105_f5", "len144_f7", "len64_f4", "len729_f9", "len512_f4"];
    for name in names {
        match run_fixture(name, Budget::default()) {
            Ok(rows) => {
                if let Err(e) = compare_golden(name, &rows) {
                    failures.push(e.to_string());
                }
            }
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if secs > 120.0 {
        failures.push(format!("took {secs:.1}s"));
    }
    outcome(failures, format!("6 tables row-for-row in {secs:.1}s"))
}

fn example_reproduction() -> Outcome {
    let expected: &[(&str, &[(usize, usize, u64, u64)])] = &[
        ("len94_f4", &[(94, 87, 3, 4), (94, 77, 4, 4), (94, 67, 6, 4)]),
        ("len92_f4", &[(92, 84, 3, 4), (92, 78, 4, 4), (92, 72, 5, 4), (92, 66, 6, 4), (92, 60, 8, 4)]),
        ("len98_f7", &[(98, 93, 3, 7), (98, 88, 4, 7)]),
        ("len72_f7", &[(72, 67, 3, 7), (72, 62, 4, 7)]),
        ("len96_f4", &[(96, 86, 4, 4), (96, 80, 5, 4), (96, 76, 6, 4)]),
        ("len72_f5", &[(72, 62, 4, 5)]),
        ("len70_f5", &[(70, 62, 3, 5)]),
        ("len80_f3", &[(80, 50, 10, 3)]),
    ];
    let claims = reference_claims();
    let mut failures = Vec::new();
    let mut count = 0;
    for (name, codes) in expected {
        let rows = match run_fixture(name, Budget::default()) {
            Ok(r) => r,
            Err(e) => {
                failures.push(format!("{name}: {e}"));
                continue;
            }
        };
        for &code in *codes {
            count += 1;
            let (n, k, d, q) = code;
            if !claims.contains(&code) {
                failures.push(format!("[[{n},{k},>={d}]]_{q} not found in the reference text"));
            }
            if !rows.iter().any(|r| (r.n, r.k, r.d_lower, r.q) == code) {
                let near: Vec<String> =
                    rows.iter().filter(|r| r.k == k).map(|r| format!("[[{},{},>={}]]_{}", r.n, r.k, r.d_lower, r.q)).collect();
                failures.push(format!("[[{n},{k},>={d}]]_{q} not reproduced (got {})", near.join(", ")));
            }
        }
    }
    outcome(failures, format!("{count} example codes"))
}

fn self_orthogonality(built: &[Built]) -> Outcome {
    let mut failures: Vec<String> = FIXTURES
        .iter()
        .filter_map(|f| f.run(Budget::default()).err().map(|e| format!("{}: {e}", f.name)))
        .collect();
    for b in built {
        if !naive_self_orthogonal(&b.code, b.metric) {
            failures.push(format!("{} {}", b.fixture, b.label));
        }
    }
    outcome(failures, format!("{} designs across {} fixtures", built.len(), FIXTURES.len()))
}

/// Small specs whose duals are enumerable.
fn small_designs() -> Vec<(String, qvariety::affine::ClassicalCode, Metric, u64)> {
    let mut out = Vec::new();
    let cases: Vec<(VarietySpec, Metric, MultiRule)> = vec![
        (spec(2, 2, &[4, 4], &[1, 2]), Metric::Hermitian { q: 2 }, MultiRule::DirectCheck),
        (spec(3, 2, &[9], &[1]), Metric::Hermitian { q: 3 }, MultiRule::DirectCheck),
        (spec(2, 2, &[4, 2], &[]), Metric::Hermitian { q: 2 }, MultiRule::DirectCheck),
        (spec(7, 1, &[7, 3], &[1, 2]), Metric::Euclidean, MultiRule::EuclideanWindow),
        (spec(5, 1, &[5, 5], &[]), Metric::Euclidean, MultiRule::DirectCheck),
    ];
    for (s, metric, rule) in cases {
        for t in 2..=8 {
            if let Ok(d) = design_multivariate(&s, t, rule, metric) {
                out.push((format!("{:?} J={:?} t={t}", s.n_list(), s.j_set()), d.code, metric, t));
            }
        }
    }
    for t in 1..=2 {
        if let Ok(o) = design_univariate(UnivariateDesign::new(UniRule::HalfFieldEuclidean, 2, 4, 1, 16, t)) {
            out.push((format!("GF(16)/GF(2) t={t}"), o.code, Metric::Euclidean, o.params.d_lower));
        }
    }
    out
}

fn distance_soundness(built: &[Built]) -> Outcome {
    let budget = Budget::default();
    let mut failures = Vec::new();
    let mut desk = 0;
    for b in built.iter().filter(|b| b.d <= DESK_MAX_DISTANCE && b.code.length() <= DESK_MAX_LENGTH) {
        desk += 1;
        match no_word_below(b.code.basis(), b.code.field(), b.d as usize, budget) {
            Ok(true) => {}
            Ok(false) => failures.push(format!("{} {}: dual word below {}", b.fixture, b.label, b.d)),
            Err(e) => failures.push(format!("{} {}: {e}", b.fixture, b.label)),
        }
    }
    let mut exact = 0;
    for (label, code, metric, d) in small_designs() {
        let dual = match dual_code(&code, metric) {
            Ok(c) => c,
            Err(e) => {
                failures.push(format!("{label}: {e}"));
                continue;
            }
        };
        match min_distance_exact(&dual, budget) {
            Ok(Some(w)) if (w as u64) < d => failures.push(format!("{label}: dual distance {w} < {d}")),
            Ok(_) => exact += 1,
            Err(_) => {}
        }
    }
    if exact < 5 {
        failures.push(format!("only {exact} small specs enumerated"));
    }
    outcome(failures, format!("{desk} desk-scale designs by column search, {exact} small specs by enumeration"))
}

/// Orbit of `x` under multiplication by `base` with residues in `1..=m` for nonzero `x`.
fn orbit(x: u64, m: u64, base: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    if x == 0 {
        out.insert(0);
        return out;
    }
    let mut y = x;
    loop {
        let r = if y.is_multiple_of(m) { m } else { y % m };
        if !out.insert(r) {
            return out;
        }
        y = r * base % m;
    }
}

fn lemma_suite() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for (p, r) in [(2u64, 4u32), (2, 5), (2, 6), (3, 3), (3, 4), (3, 5), (5, 4)] {
        let m = p.pow(r) - 1;
        let divisors_of_half: Vec<u32> = if r % 2 == 0 { (1..=r / 2).filter(|s| (r / 2) % s == 0).collect() } else { vec![1] };
        let top = if r % 2 == 0 { p.pow(r / 2) - 1 } else { p.pow(r.div_ceil(2)) - p - 1 };
        for &s in &divisors_of_half {
            let base = p.pow(s);
            // The boundary value is the least element of its set.
            if orbit(top, m, base).iter().next() != Some(&top) {
                failures.push(format!("p={p} r={r} s={s}: {top} is not a representative"));
            }
            // Sets below the boundary have r/s elements.
            for a in 1..=top {
                if orbit(a, m, base).len() as u32 != r / s {
                    failures.push(format!("p={p} r={r} s={s}: |set of {a}| != {}", r / s));
                }
            }
            checked += 1;
        }
        // Scaled values below the boundary stay below p^r - p^{r/2} (even) or
        // p^r - p^{(r+1)/2} + p (odd).
        let (below, limit) = if r % 2 == 0 { (top, m + 1 - p.pow(r / 2)) } else { (top + 1, m + 1 - p.pow(r.div_ceil(2)) + p) };
        for b in 0..below {
            for j in 0..r {
                if (p.pow(j) * b) % m >= limit {
                    failures.push(format!("p={p} r={r}: p^{j}*{b} mod {m} >= {limit}"));
                }
            }
        }
    }
    // The boundary set holds its own complement, so it is not self-orthogonal.
    let mut negative = 0;
    for (p, r) in [(2u64, 4u32), (3, 4), (5, 4)] {
        let m = p.pow(r) - 1;
        let a = p.pow(r / 2) - 1;
        let set = orbit(a, m, p);
        if !set.contains(&(m - a)) {
            failures.push(format!("p={p} r={r}: {} missing from the set of {a}", m - a));
        }
        let s = spec(p, r, &[p.pow(r)], &[1]);
        let delta: Vec<Vec<u64>> = set.iter().map(|&x| vec![x % m]).collect();
        let code = subfield_subcode(&build_code(&s, &DeltaSet::new(&s, delta).unwrap()).unwrap(), 1).unwrap();
        if naive_self_orthogonal(&code, Metric::Euclidean) {
            failures.push(format!("p={p} r={r}: boundary set is self-orthogonal"));
        }
        // Just below the boundary every set is self-orthogonal.
        let below: Vec<Vec<u64>> = (1..a).flat_map(|b| orbit(b, m, p)).map(|x| vec![x % m]).collect::<BTreeSet<_>>().into_iter().collect();
        if !below.is_empty() {
            let code = subfield_subcode(&build_code(&s, &DeltaSet::new(&s, below).unwrap()).unwrap(), 1).unwrap();
            if !naive_self_orthogonal(&code, Metric::Euclidean) {
                failures.push(format!("p={p} r={r}: sets below the boundary are not self-orthogonal"));
            }
        }
        negative += 1;
    }
    outcome(failures, format!("{checked} (p,r,s) cases, {negative} boundary cases"))
}

fn hyperbolic_equality() -> Outcome {
    let specs = [
        spec(2, 2, &[4, 2], &[]),
        spec(2, 2, &[4, 4], &[1]),
        spec(3, 2, &[9, 3], &[]),
        spec(2, 3, &[8, 2], &[2]),
        spec(2, 4, &[16, 4], &[]),
        spec(7, 1, &[7, 7], &[1, 2]),
        spec(5, 2, &[5, 5], &[]),
    ];
    let mut failures = Vec::new();
    let mut cases = 0;
    for s in &specs {
        assert!(s.length() <= 100);
        for t in 1..=s.length() as u64 {
            let pair = match hyperbolic_code(s, t) {
                Ok(p) => p,
                Err(e) => {
                    failures.push(format!("{:?} t={t}: {e}", s.n_list()));
                    continue;
                }
            };
            let f = s.field();
            let dual = pair.f.dual();
            let cross_zero = pair.e.basis().rows().iter().all(|x| pair.f.basis().rows().iter().all(|y| naive_product(f, x, y, 1).is_zero()));
            let ranks = pair.e.dimension() + pair.f.dimension() == s.length();
            let same = pair.e.basis().same_row_space(dual.basis(), f);
            if !(cross_zero && ranks && same && pair.e.dimension() == m_set(s, t).unwrap().len()) {
                failures.push(format!("{:?} J={:?} t={t}", s.n_list(), s.j_set()));
            }
            cases += 1;
        }
    }
    outcome(failures, format!("{} specs, {cases} values of t", specs.len()))
}

fn duality_identity() -> Outcome {
    let specs: Vec<(VarietySpec, Vec<Metric>)> = vec![
        (spec(2, 2, &[4, 2], &[]), vec![Metric::Euclidean, Metric::Hermitian { q: 2 }]),
        (spec(2, 2, &[4, 4], &[1]), vec![Metric::Euclidean, Metric::Hermitian { q: 2 }]),
        (spec(3, 2, &[9, 3], &[1]), vec![Metric::Euclidean, Metric::Hermitian { q: 3 }]),
        (spec(2, 4, &[4, 2], &[]), vec![Metric::Euclidean, Metric::Hermitian { q: 4 }]),
        (spec(5, 2, &[5, 5], &[1, 2]), vec![Metric::Euclidean, Metric::Hermitian { q: 5 }]),
        (spec(3, 2, &[9], &[1]), vec![Metric::Euclidean, Metric::Hermitian { q: 3 }]),
    ];
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut failures = Vec::new();
    let mut count = 0;
    for (s, metrics) in &specs {
        // H': no coordinate off J equal to N_j - 1.
        let all: Vec<Vec<u64>> = s
            .box_tuples()
            .into_iter()
            .filter(|a| (0..s.m()).all(|j| s.in_j(j) || a[j] != s.n_list()[j] - 1))
            .collect();
        for &metric in metrics {
            for _ in 0..12 {
                let size = rng.gen_range(1..all.len());
                let mut delta: Vec<Vec<u64>> = all.clone();
                for i in 0..size {
                    let j = rng.gen_range(i..delta.len());
                    delta.swap(i, j);
                }
                delta.truncate(size);
                let perp = delta_perp(s, &delta, metric).unwrap();
                let e = build_code(s, &DeltaSet::new(s, delta.clone()).unwrap()).unwrap();
                let dim_perp = if perp.is_empty() { 0 } else { build_code(s, &DeltaSet::new(s, perp.clone()).unwrap()).unwrap().dimension() };
                let cross = perp.is_empty() || {
                    let ep = build_code(s, &DeltaSet::new(s, perp).unwrap()).unwrap();
                    let c = metric.conj_power();
                    e.basis().rows().iter().all(|x| ep.basis().rows().iter().all(|y| naive_product(s.field(), x, y, c).is_zero()))
                };
                if e.dimension() + dim_perp != s.length() || !cross {
                    failures.push(format!("{:?} J={:?} {} |delta|={}", s.n_list(), s.j_set(), metric.name(), delta.len()));
                }
                count += 1;
            }
        }
    }
    outcome(failures, format!("{count} random sets over {} specs", specs.len()))
}

fn subfield_dimension(built: &[Built]) -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    for b in built {
        let Some((moduli, base)) = &b.subfield else { continue };
        let mut orbits: BTreeSet<Vec<Vec<u64>>> = BTreeSet::new();
        for a in &b.delta {
            // Joint orbit: iterate the scaling on all coordinates together.
            let mut seen = BTreeSet::new();
            let mut cur = a.clone();
            loop {
                let norm: Vec<u64> = cur.iter().zip(moduli).map(|(&x, &m)| if x == 0 { 0 } else if x % m == 0 { m } else { x % m }).collect();
                if !seen.insert(norm.clone()) {
                    break;
                }
                cur = norm
                    .iter()
                    .zip(moduli)
                    .map(|(&x, &m)| match (x, x * base % m) {
                        (0, _) => 0,
                        (_, 0) => m,
                        (_, y) => y,
                    })
                    .collect();
            }
            orbits.insert(seen.into_iter().collect());
        }
        let total: usize = orbits.iter().map(|o| o.len()).sum();
        if total != b.code.dimension() || total != b.delta.len() {
            failures.push(format!("{} {}: rank {} vs sum {total}", b.fixture, b.label, b.code.dimension()));
        }
        count += 1;
    }
    // Closed sets drawn at random over a two-axis spec.
    let s = spec(2, 4, &[16, 4], &[1, 2]);
    let part = CyclotomicPartition::new(&[Axis::Cyclic(15), Axis::Cyclic(3)], 4).unwrap();
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..20 {
        let picks: Vec<Vec<u64>> = part.sets().iter().filter(|_| rng.gen_bool(0.3)).map(|c| c.representative().to_vec()).collect();
        if picks.is_empty() {
            continue;
        }
        let closure = part.closure(picks.iter()).unwrap();
        let expected: usize = picks.iter().map(|a| part.set_containing(a).unwrap().cardinality()).sum();
        let code = subfield_subcode(&build_code(&s, &DeltaSet::new(&s, closure).unwrap()).unwrap(), 2).unwrap();
        if code.basis().rank(s.field()) != expected {
            failures.push(format!("random closed set: rank {} vs {expected}", code.dimension()));
        }
        count += 1;
    }
    outcome(failures, format!("{count} closed sets"))
}

fn main() {
    let built = catalogue();
    let results = [
        ("1 table reproduction", table_reproduction()),
        ("2 example reproduction", example_reproduction()),
        ("3 self-orthogonality ground truth", self_orthogonality(&built)),
        ("4 distance soundness at desk scale", distance_soundness(&built)),
        ("5 cyclotomic lemma suite", lemma_suite()),
        ("6 hyperbolic code equality", hyperbolic_equality()),
        ("7 duality identity", duality_identity()),
        ("8 subfield dimension formula", subfield_dimension(&built)),
    ];
    let passed = results.iter().filter(|(_, o)| o.pass).count();
    for (name, o) in &results {
        println!("{} criterion {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("acceptance: {passed}/{} criteria pass", results.len());
}
