//! Orthogonality of monomial evaluations, dual exponent sets and exact
//! self-orthogonality certificates.

use serde::Serialize;

use crate::affine::{ClassicalCode, VarietySpec};
use crate::error::{Error, Result};
use crate::linalg::{gram, Matrix};

/// Inner product `x . y = sum x_i^c y_i` for a conjugation power `c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Metric {
    /// `c = 1`.
    Euclidean,
    /// `c = q` over GF(q^2).
    Hermitian { q: u64 },
    /// Any other power, e.g. `p^s`.
    Twisted { power: u64 },
}

impl Metric {
    pub fn conj_power(self) -> u64 {
        match self {
            Metric::Euclidean => 1,
            Metric::Hermitian { q } => q,
            Metric::Twisted { power } => power,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Metric::Euclidean => "euclidean",
            Metric::Hermitian { .. } => "hermitian",
            Metric::Twisted { .. } => "twisted",
        }
    }

    /// Hermitian products need an alphabet of square order `q^2`.
    pub fn check_alphabet(self, alphabet: u64) -> Result<()> {
        match self {
            Metric::Hermitian { q } if q.checked_mul(q) != Some(alphabet) => Err(Error::NonSquareField(alphabet)),
            _ => Ok(()),
        }
    }
}

/// Whether `sum_P (P^a)^c P^b` vanishes, decided per coordinate: on `J`
/// the exponent `c a_j + b_j` must be a multiple of `N_j - 1`; off `J`
/// either that with a positive exponent, or both zero with `p` not dividing `N_j`.
pub fn monomials_orthogonal(spec: &VarietySpec, a: &[u64], b: &[u64], metric: Metric) -> Result<bool> {
    spec.check_tuple(a)?;
    spec.check_tuple(b)?;
    let c = metric.conj_power();
    let p = spec.field().characteristic();
    for j in 0..spec.m() {
        if !coordinate_sum_nonzero(spec, j, a[j], b[j], c, p) {
            return Ok(true);
        }
    }
    Ok(false)
}

fn coordinate_sum_nonzero(spec: &VarietySpec, j: usize, a: u64, b: u64, c: u64, p: u64) -> bool {
    let m = spec.n_list()[j] - 1;
    let e = c as u128 * a as u128 + b as u128;
    if spec.in_j(j) || e > 0 {
        e.is_multiple_of(m as u128)
    } else {
        !spec.n_list()[j].is_multiple_of(p)
    }
}

/// Values `b_j` paired with `a_j` by the dual-set construction.
fn partner_values(spec: &VarietySpec, j: usize, a: u64, c: u64) -> Vec<u64> {
    let m = spec.n_list()[j] - 1;
    let neg = ((m as u128 - (a as u128 * c as u128) % m as u128) % m as u128) as u64;
    if spec.in_j(j) {
        vec![neg]
    } else if a == 0 {
        vec![m]
    } else if a == m {
        vec![0, m]
    } else if neg == 0 {
        vec![m]
    } else {
        vec![neg]
    }
}

/// The dual exponent set: the box minus the partners of every tuple in
/// `delta`, where a coordinate equal to `N_j - 1` off `J` has both partners
/// `0` and `N_j - 1` removed. Sorted; may be empty.
pub fn delta_perp(spec: &VarietySpec, delta: &[Vec<u64>], metric: Metric) -> Result<Vec<Vec<u64>>> {
    let c = metric.conj_power();
    let mut excluded = std::collections::HashSet::new();
    for a in delta {
        spec.check_tuple(a)?;
        let mut partners = vec![Vec::new()];
        for (j, &aj) in a.iter().enumerate() {
            let vals = partner_values(spec, j, aj, c);
            partners = partners
                .into_iter()
                .flat_map(|pre| {
                    vals.iter().map(move |&v| {
                        let mut t = pre.clone();
                        t.push(v);
                        t
                    })
                })
                .collect();
        }
        excluded.extend(partners);
    }
    Ok(spec.box_tuples().into_iter().filter(|t| !excluded.contains(t)).collect())
}

/// Outcome of an exact Gram computation.
#[derive(Clone, Debug, Serialize)]
pub struct OrthoCertificate {
    pub self_orthogonal: bool,
    /// Pairs of generator rows with a nonzero product.
    pub violations: Vec<(usize, usize)>,
    #[serde(skip)]
    pub gram: Matrix,
}

/// Computes `conj(G) G^T` exactly over the code's field.
pub fn certify_self_orthogonal(code: &ClassicalCode, metric: Metric) -> Result<OrthoCertificate> {
    metric.check_alphabet(code.alphabet())?;
    let g = code.generator();
    let gm = gram(code.field(), g, g, metric.conj_power());
    let violations: Vec<(usize, usize)> = gm
        .rows()
        .iter()
        .enumerate()
        .flat_map(|(i, r)| r.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(move |(j, _)| (i, j)))
        .collect();
    Ok(OrthoCertificate { self_orthogonal: violations.is_empty(), violations, gram: gm })
}

/// Whether every product between the two codes vanishes.
pub fn cross_orthogonal(a: &ClassicalCode, b: &ClassicalCode, metric: Metric) -> bool {
    let gm = gram(a.field(), a.generator(), b.generator(), metric.conj_power());
    gm.rows().iter().flatten().all(|x| x.is_zero())
}

/// Dual code under `metric`: `(C^(c))^perp`, over the code's field of linearity.
pub fn dual_code(code: &ClassicalCode, metric: Metric) -> Result<ClassicalCode> {
    metric.check_alphabet(code.alphabet())?;
    let c = metric.conj_power();
    if c == 1 {
        return Ok(code.dual());
    }
    let conj = code.basis().map_pow(code.field(), c);
    let rows = conj.null_space(code.field()).into_rows();
    Ok(ClassicalCode::from_rows(
        code.field().clone(),
        code.length(),
        rows,
        code.sub_exp(),
        Default::default(),
    ))
}
