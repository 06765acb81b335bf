//! Point sets of J-affine varieties, monomial evaluation codes and
//! subfield-subcodes.

use std::sync::Arc;

use crate::cyclo::Axis;
use crate::error::{Error, Result};
use crate::galois::{Elem, FieldSpec};
use crate::linalg::Matrix;

/// The variety `Z_J` in `GF(Q)^m`: coordinate `j` ranges over the roots of
/// `X^{N_j} - X`, or of `X^{N_j - 1} - 1` when `j` lies in `J`.
#[derive(Clone, Debug)]
pub struct VarietySpec {
    field: Arc<FieldSpec>,
    n: Vec<u64>,
    in_j: Vec<bool>,
}

impl VarietySpec {
    /// `j_set` holds 1-based coordinate indices.
    pub fn new(field: Arc<FieldSpec>, n: Vec<u64>, j_set: &[usize]) -> Result<Self> {
        if n.is_empty() {
            return Err(Error::InvalidVariety("no coordinates".into()));
        }
        let q1 = field.order() - 1;
        for (i, &nj) in n.iter().enumerate() {
            if nj < 2 {
                return Err(Error::InvalidVariety(format!("N_{} = {nj} must be at least 2", i + 1)));
            }
            if !q1.is_multiple_of(nj - 1) {
                return Err(Error::InvalidVariety(format!(
                    "N_{} - 1 = {} does not divide Q - 1 = {q1}",
                    i + 1,
                    nj - 1
                )));
            }
        }
        let mut in_j = vec![false; n.len()];
        for &j in j_set {
            if j == 0 || j > n.len() {
                return Err(Error::InvalidVariety(format!("J index {j} outside 1..={}", n.len())));
            }
            in_j[j - 1] = true;
        }
        for (j, &nj) in n.iter().enumerate() {
            if in_j[j] && nj < 2 {
                return Err(Error::InvalidVariety(format!("N_{} too small for J", j + 1)));
            }
        }
        Ok(VarietySpec { field, n, in_j })
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn m(&self) -> usize {
        self.n.len()
    }

    pub fn n_list(&self) -> &[u64] {
        &self.n
    }

    pub fn in_j(&self, j: usize) -> bool {
        self.in_j[j]
    }

    /// 1-based members of J.
    pub fn j_set(&self) -> Vec<usize> {
        (0..self.m()).filter(|&j| self.in_j[j]).map(|j| j + 1).collect()
    }

    /// `epsilon_j`: 1 on J, else 0.
    pub fn epsilon(&self, j: usize) -> u64 {
        self.in_j[j] as u64
    }

    /// Largest exponent `T_j` on coordinate `j`.
    pub fn cap(&self, j: usize) -> u64 {
        self.n[j] - 1 - self.epsilon(j)
    }

    /// Code length `n_J`.
    pub fn length(&self) -> usize {
        (0..self.m()).map(|j| (self.n[j] - self.epsilon(j)) as usize).product()
    }

    /// Orbit arithmetic per coordinate, modulo `N_j - 1`.
    pub fn axes(&self) -> Vec<Axis> {
        (0..self.m())
            .map(|j| if self.in_j[j] { Axis::Cyclic(self.n[j] - 1) } else { Axis::Affine(self.n[j] - 1) })
            .collect()
    }

    pub fn check_tuple(&self, a: &[u64]) -> Result<()> {
        if a.len() != self.m() || a.iter().enumerate().any(|(j, &x)| x > self.cap(j)) {
            return Err(Error::OutOfBox {
                tuple: a.to_vec(),
                bounds: (0..self.m()).map(|j| self.cap(j)).collect(),
            });
        }
        Ok(())
    }

    /// All exponent tuples of the box `H_J`, lexicographic.
    pub fn box_tuples(&self) -> Vec<Vec<u64>> {
        let mut out = vec![Vec::new()];
        for j in 0..self.m() {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..=self.cap(j)).map(move |x| {
                        let mut t = prefix.clone();
                        t.push(x);
                        t
                    })
                })
                .collect();
        }
        out
    }

    fn step(&self, j: usize) -> u64 {
        (self.field.order() - 1) / (self.n[j] - 1)
    }

    /// Per coordinate, the discrete-log exponent of each value, `None` for zero.
    fn coordinate_logs(&self, j: usize) -> Vec<Option<u64>> {
        let step = self.step(j);
        let mut v: Vec<Option<u64>> = (0..self.n[j] - 1).map(|i| Some(step * i)).collect();
        if !self.in_j[j] {
            v.push(None);
        }
        v
    }

    /// Points of `Z_J`, first coordinate varying slowest.
    pub fn point_set(&self) -> Vec<Vec<Elem>> {
        let per: Vec<Vec<Elem>> = (0..self.m())
            .map(|j| {
                self.coordinate_logs(j)
                    .into_iter()
                    .map(|l| l.map_or(Elem::ZERO, |l| self.field.gen_pow(l)))
                    .collect()
            })
            .collect();
        let mut out = vec![Vec::new()];
        for coord in per {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    coord.iter().map(move |&x| {
                        let mut p = prefix.clone();
                        p.push(x);
                        p
                    })
                })
                .collect();
        }
        out
    }

    /// `ev_J(X^a)`, with `0^0 = 1`.
    pub fn evaluate_monomial(&self, a: &[u64]) -> Result<Vec<Elem>> {
        self.check_tuple(a)?;
        let order = self.field.order() - 1;
        let mut logs: Vec<Option<u64>> = vec![Some(0)];
        for j in 0..self.m() {
            let coord: Vec<Option<u64>> = self
                .coordinate_logs(j)
                .into_iter()
                .map(|l| match l {
                    Some(l) => Some(l * a[j] % order),
                    None if a[j] == 0 => Some(0),
                    None => None,
                })
                .collect();
            logs = logs
                .into_iter()
                .flat_map(|acc| {
                    coord.iter().map(move |&c| match (acc, c) {
                        (Some(x), Some(y)) => Some((x + y) % order),
                        _ => None,
                    })
                })
                .collect();
        }
        Ok(logs
            .into_iter()
            .map(|l| l.map_or(Elem::ZERO, |l| self.field.gen_pow(l)))
            .collect())
    }
}

/// A non-empty set of exponent tuples inside the box of a variety.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaSet {
    tuples: Vec<Vec<u64>>,
}

impl DeltaSet {
    pub fn new(spec: &VarietySpec, tuples: impl IntoIterator<Item = Vec<u64>>) -> Result<Self> {
        let mut tuples: Vec<Vec<u64>> = tuples.into_iter().collect();
        if tuples.is_empty() {
            return Err(Error::EmptyDelta);
        }
        for t in &tuples {
            spec.check_tuple(t)?;
        }
        tuples.sort();
        tuples.dedup();
        Ok(DeltaSet { tuples })
    }

    pub fn tuples(&self) -> &[Vec<u64>] {
        &self.tuples
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn contains(&self, a: &[u64]) -> bool {
        self.tuples.binary_search_by(|t| t.as_slice().cmp(a)).is_ok()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Provenance {
    pub j_set: Vec<usize>,
    pub n_list: Vec<u64>,
    pub delta: Vec<Vec<u64>>,
}

/// A linear code given by generator rows over GF(Q). Codes built as
/// subfield-subcodes are linear only over GF(p^sub_exp), and their rows lie
/// in that subfield.
#[derive(Clone, Debug)]
pub struct ClassicalCode {
    field: Arc<FieldSpec>,
    length: usize,
    generator: Matrix,
    basis: Matrix,
    sub_exp: u32,
    provenance: Provenance,
}

impl ClassicalCode {
    pub fn from_rows(field: Arc<FieldSpec>, length: usize, rows: Vec<Vec<Elem>>, sub_exp: u32, provenance: Provenance) -> Self {
        let generator = Matrix::new(length, rows);
        let mut basis = generator.clone();
        basis.rref(&field);
        ClassicalCode { field, length, generator, basis, sub_exp, provenance }
    }

    pub fn zero(field: Arc<FieldSpec>, length: usize) -> Self {
        let e = field.degree();
        Self::from_rows(field, length, Vec::new(), e, Provenance::default())
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.basis.nrows()
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    /// Row-reduced basis.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// Exponent of the field over which the code is linear.
    pub fn sub_exp(&self) -> u32 {
        self.sub_exp
    }

    /// Order of the field over which the code is linear.
    pub fn alphabet(&self) -> u64 {
        self.field.characteristic().pow(self.sub_exp)
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// Euclidean dual, over the field of linearity.
    pub fn dual(&self) -> ClassicalCode {
        let rows = self.basis.null_space(&self.field).into_rows();
        Self::from_rows(self.field.clone(), self.length, rows, self.sub_exp, Provenance::default())
    }
}

/// `E_Delta^J`: the span of `ev_J(X^a)` for `a` in `delta`.
pub fn build_code(spec: &VarietySpec, delta: &DeltaSet) -> Result<ClassicalCode> {
    let rows = delta
        .tuples()
        .iter()
        .map(|a| spec.evaluate_monomial(a))
        .collect::<Result<Vec<_>>>()?;
    let provenance = Provenance { j_set: spec.j_set(), n_list: spec.n_list().to_vec(), delta: delta.tuples().to_vec() };
    Ok(ClassicalCode::from_rows(spec.field().clone(), spec.length(), rows, spec.field().degree(), provenance))
}

/// Codewords of `code` with every entry in GF(p^sub_exp).
///
/// Each message coefficient is expanded over the basis `1, g, .., g^{m-1}` of
/// GF(Q) over the subfield; requiring the non-constant coordinates of every
/// codeword entry to vanish gives a linear system over the subfield whose
/// kernel parametrizes the subcode.
pub fn subfield_subcode(code: &ClassicalCode, sub_exp: u32) -> Result<ClassicalCode> {
    let f = code.field().clone();
    let e = code.sub_exp();
    if sub_exp == 0 || !e.is_multiple_of(sub_exp) {
        return Err(Error::NotASubfield { sub: sub_exp, e });
    }
    if sub_exp == e {
        return Ok(code.clone());
    }
    // A code already restricted to GF(p^e') is treated through GF(Q) with the
    // expansion taken over GF(p^sub_exp) directly.
    let full = f.degree();
    if !full.is_multiple_of(sub_exp) {
        return Err(Error::NotASubfield { sub: sub_exp, e: full });
    }
    let deg = (full / sub_exp) as usize;
    let sub = f.subfield_elements(sub_exp)?;
    let beta: Vec<Elem> = (0..deg as u64).map(|l| f.gen_pow(l)).collect();

    // coords[y] = coefficients of y over beta.
    let mut coords = vec![Vec::new(); f.order() as usize];
    let mut counter = vec![0usize; deg];
    loop {
        let y = counter
            .iter()
            .zip(&beta)
            .fold(Elem::ZERO, |acc, (&c, &b)| f.add(acc, f.mul(sub[c], b)));
        coords[y.0 as usize] = counter.iter().map(|&c| sub[c]).collect::<Vec<Elem>>();
        let mut i = 0;
        while i < deg {
            counter[i] += 1;
            if counter[i] < sub.len() {
                break;
            }
            counter[i] = 0;
            i += 1;
        }
        if i == deg {
            break;
        }
    }

    let basis = code.basis();
    let k = basis.nrows();
    let n = code.length();
    let unknowns = k * deg;
    // scaled[i*deg + l] = beta_l * B_i
    let scaled: Vec<Vec<Elem>> = (0..k)
        .flat_map(|i| beta.iter().map(move |&b| (i, b)))
        .map(|(i, b)| basis.row(i).iter().map(|&x| f.mul(b, x)).collect())
        .collect();
    let mut system = Matrix::zero_rows(unknowns);
    for c in 0..n {
        for u in 1..deg {
            let row: Vec<Elem> = scaled.iter().map(|v| coords[v[c].0 as usize][u]).collect();
            if row.iter().any(|x| !x.is_zero()) {
                system.push_row(row);
            }
        }
    }
    let kernel = system.null_space(&f);
    let rows: Vec<Vec<Elem>> = kernel
        .rows()
        .iter()
        .map(|x| {
            let mut word = vec![Elem::ZERO; n];
            for (coef, v) in x.iter().zip(&scaled) {
                if !coef.is_zero() {
                    crate::linalg::axpy(&f, &mut word, *coef, v, 0);
                }
            }
            word
        })
        .collect();
    Ok(ClassicalCode::from_rows(f, n, rows, sub_exp, code.provenance().clone()))
}
