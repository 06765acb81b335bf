//! Exhaustive minimum-distance checks for small codes.

use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;

use crate::affine::ClassicalCode;
use crate::error::{Error, Result};
use crate::galois::{Elem, FieldSpec};
use crate::linalg::{axpy, Matrix};

/// Work limits; `QVARIETY_BUDGET` overrides both.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Codewords enumerated by [`min_distance_exact`].
    pub codewords: u128,
    /// Column subsets visited by [`no_word_below`].
    pub subsets: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { codewords: 1 << 24, subsets: 100_000_000 }
    }
}

impl Budget {
    pub fn from_env() -> Self {
        match std::env::var("QVARIETY_BUDGET").ok().and_then(|v| v.trim().parse::<u128>().ok()) {
            Some(b) => Budget { codewords: b, subsets: b },
            None => Budget::default(),
        }
    }
}

/// Minimum weight of a nonzero codeword, enumerating all words up to scalars.
/// Returns `None` for the zero code.
pub fn min_distance_exact(code: &ClassicalCode, budget: Budget) -> Result<Option<usize>> {
    let f = code.field();
    let k = code.dimension();
    if k == 0 {
        return Ok(None);
    }
    let scalars = f.subfield_elements(code.sub_exp())?;
    let q = scalars.len() as u128;
    let needed = q.checked_pow(k as u32 - 1).unwrap_or(u128::MAX);
    if needed > budget.codewords {
        return Err(Error::BudgetExceeded { needed, budget: budget.codewords });
    }
    let rows = code.basis().rows();
    // Normalize the leading coefficient to 1: word = B_lead + sum_{i > lead} c_i B_i.
    let best = (0..k)
        .into_par_iter()
        .map(|lead| {
            let mut word = rows[lead].clone();
            let mut best = usize::MAX;
            walk(f, rows, &scalars, lead + 1, &mut word, &mut best);
            best
        })
        .min()
        .unwrap();
    Ok(Some(best))
}

fn walk(f: &FieldSpec, rows: &[Vec<Elem>], scalars: &[Elem], i: usize, word: &mut Vec<Elem>, best: &mut usize) {
    if i == rows.len() {
        let w = word.iter().filter(|x| !x.is_zero()).count();
        *best = (*best).min(w);
        return;
    }
    walk(f, rows, scalars, i + 1, word, best);
    let saved = word.clone();
    for &c in &scalars[1..] {
        word.copy_from_slice(&saved);
        axpy(f, word, c, &rows[i], 0);
        walk(f, rows, scalars, i + 1, word, best);
    }
    word.copy_from_slice(&saved);
}

/// Whether every `w - 1` columns of `g` are linearly independent, i.e. the
/// code with parity-check matrix `g` has no nonzero word of weight below `w`.
///
/// Dependence is field-independent, so this also bounds subfield-subcodes
/// and Hermitian duals (conjugation does not change column dependence).
pub fn no_word_below(g: &Matrix, f: &FieldSpec, w: usize, budget: Budget) -> Result<bool> {
    let n = g.cols();
    if w <= 1 {
        return Ok(true);
    }
    let depth = w - 1;
    let needed = subset_count(n, depth);
    if needed > budget.subsets {
        return Err(Error::BudgetExceeded { needed, budget: budget.subsets });
    }
    let cols: Vec<Vec<Elem>> = g.transpose().into_rows();
    let found = AtomicBool::new(false);
    (0..n).into_par_iter().for_each(|first| {
        if found.load(Ordering::Relaxed) {
            return;
        }
        let mut ech = Echelon::default();
        if !ech.push(f, &cols[first]) || dependent_below(f, &cols, first + 1, depth - 1, &mut ech, &found) {
            found.store(true, Ordering::Relaxed);
        }
    });
    Ok(!found.load(Ordering::Relaxed))
}

fn dependent_below(f: &FieldSpec, cols: &[Vec<Elem>], from: usize, left: usize, ech: &mut Echelon, stop: &AtomicBool) -> bool {
    if left == 0 || stop.load(Ordering::Relaxed) {
        return false;
    }
    for c in from..cols.len() {
        if !ech.push(f, &cols[c]) {
            return true;
        }
        let hit = dependent_below(f, cols, c + 1, left - 1, ech, stop);
        ech.pop();
        if hit {
            return true;
        }
    }
    false
}

fn subset_count(n: usize, depth: usize) -> u128 {
    let mut total = 0u128;
    let mut binom = 1u128;
    for i in 1..=depth.min(n) {
        binom = binom * (n - i + 1) as u128 / i as u128;
        total = total.saturating_add(binom);
    }
    total
}

/// Incremental echelon basis with pivot-normalized rows.
#[derive(Default)]
struct Echelon {
    rows: Vec<(usize, Vec<Elem>)>,
}

impl Echelon {
    /// Adds `v` if independent of the current rows; returns false otherwise.
    fn push(&mut self, f: &FieldSpec, v: &[Elem]) -> bool {
        let mut v = v.to_vec();
        for (p, r) in &self.rows {
            let c = v[*p];
            if !c.is_zero() {
                axpy(f, &mut v, f.neg(c), r, 0);
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = f.inv(v[p]);
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        self.rows.push((p, v));
        true
    }

    fn pop(&mut self) {
        self.rows.pop();
    }
}

/// Codes longer than this are not searched for light words by default.
pub const DESK_MAX_LENGTH: usize = 200;
/// Largest designed distance checked by default.
pub const DESK_MAX_DISTANCE: u64 = 5;

/// Outcome of checking a designed distance against the column oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistanceCheck {
    Confirmed,
    /// Out of desk scale or over budget.
    Skipped,
}

/// Checks that no word of weight below `d` lies in the dual of the code
/// spanned by `g`, when the instance is small enough. A designed bound that
/// the oracle refutes is an error.
pub fn check_designed_distance(g: &Matrix, f: &FieldSpec, d: u64, budget: Budget) -> Result<DistanceCheck> {
    if g.cols() > DESK_MAX_LENGTH || d > DESK_MAX_DISTANCE {
        return Ok(DistanceCheck::Skipped);
    }
    match no_word_below(g, f, d as usize, budget) {
        Ok(true) => Ok(DistanceCheck::Confirmed),
        Ok(false) => Err(Error::Certification {
            rule: "distance".into(),
            detail: format!("a dual word of weight below the designed distance {d} exists"),
        }),
        Err(Error::BudgetExceeded { .. }) => Ok(DistanceCheck::Skipped),
        Err(e) => Err(e),
    }
}

/// Largest `w <= limit` with no dual word below `w`, scanning upward.
pub fn dual_distance_at_least(g: &Matrix, f: &FieldSpec, limit: usize, budget: Budget) -> Result<usize> {
    let mut w = 1;
    while w < limit && no_word_below(g, f, w + 1, budget)? {
        w += 1;
    }
    Ok(w)
}
