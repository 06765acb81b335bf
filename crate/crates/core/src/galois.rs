//! Arithmetic in GF(p^e).
//!
//! Elements are stored as packed coefficient vectors: the element
//! `c_0 + c_1 x + ... + c_{e-1} x^{e-1}` is the integer `sum c_i p^i`.
//! Fields up to `2^16` elements carry exp/log tables; larger ones multiply
//! polynomials and reduce by the modulus.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Largest field order accepted by [`make_field`].
pub const DEFAULT_FIELD_BUDGET: u64 = 1 << 20;

const LOG_TABLE_LIMIT: u64 = 1 << 16;
const ADD_TABLE_LIMIT: u64 = 1 << 10;

/// Marker stored in the log table for zero, which has no discrete log.
const NO_LOG: u32 = u32::MAX;

/// A field element in packed-coefficient form.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct LogTables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// A finite field GF(p^e) with a fixed modulus and primitive element.
pub struct FieldSpec {
    p: u32,
    e: u32,
    order: u32,
    modulus: Vec<u32>,
    generator: Elem,
    tables: Option<LogTables>,
    add_table: Option<Vec<u32>>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("e", &self.e)
            .field("modulus", &self.modulus)
            .field("generator", &self.generator)
            .finish()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p, self.e)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits a prime power `q = p^e` into `(p, e)`.
pub fn prime_power(q: u64) -> Result<(u64, u32)> {
    let f = prime_factors(q);
    if f.len() != 1 {
        return Err(Error::NotPrimePower(q));
    }
    let p = f[0];
    let mut e = 0;
    let mut m = q;
    while m > 1 {
        m /= p;
        e += 1;
    }
    Ok((p, e))
}

/// Builds GF(p^e) with the default size budget.
pub fn make_field(p: u64, e: u32) -> Result<FieldSpec> {
    make_field_with_budget(p, e, DEFAULT_FIELD_BUDGET)
}

/// Builds GF(p^e). The modulus is the smallest monic irreducible polynomial of
/// degree `e` and the generator the smallest primitive element, both under
/// lexicographic order of coefficient vectors read from the constant term up.
pub fn make_field_with_budget(p: u64, e: u32, budget: u64) -> Result<FieldSpec> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if e == 0 {
        return Err(Error::ZeroExponent);
    }
    let order = (p as u128).checked_pow(e).unwrap_or(u128::MAX);
    if order > budget as u128 || order > u32::MAX as u128 {
        return Err(Error::FieldTooLarge { p, e, budget });
    }
    let p32 = p as u32;
    let order = order as u32;

    let modulus = smallest_irreducible(p32, e);
    let mut field = FieldSpec {
        p: p32,
        e,
        order,
        modulus,
        generator: Elem::ONE,
        tables: None,
        add_table: None,
    };
    field.generator = field.smallest_primitive();
    if (order as u64) <= LOG_TABLE_LIMIT {
        field.tables = Some(field.build_tables());
    }
    if p32 != 2 && (order as u64) <= ADD_TABLE_LIMIT {
        let q = order as usize;
        let mut table = vec![0u32; q * q];
        for a in 0..q {
            for b in 0..q {
                table[a * q + b] = field.add_digits(a as u32, b as u32);
            }
        }
        field.add_table = Some(table);
    }
    Ok(field)
}

/// Index `i` in low-degree-first lexicographic order, as coefficient digits.
fn lex_digits(i: u32, p: u32, len: u32) -> Vec<u32> {
    let mut digits = vec![0u32; len as usize];
    let mut v = i;
    for k in (0..len as usize).rev() {
        digits[k] = v % p;
        v /= p;
    }
    digits
}

fn smallest_irreducible(p: u32, e: u32) -> Vec<u32> {
    let count = p.pow(e);
    for i in 0..count {
        let mut f = lex_digits(i, p, e);
        f.push(1);
        if poly::is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

impl FieldSpec {
    pub fn characteristic(&self) -> u64 {
        self.p as u64
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u64 {
        self.order as u64
    }

    /// Monic modulus, constant coefficient first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn generator(&self) -> Elem {
        self.generator
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.order).map(Elem)
    }

    /// Embeds an integer through the prime field.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn digits(&self, a: Elem) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.e as usize);
        let mut v = a.0;
        for _ in 0..self.e {
            out.push(v % self.p);
            v /= self.p;
        }
        out
    }

    fn pack(&self, digits: &[u32]) -> Elem {
        let mut v = 0u32;
        for &d in digits.iter().rev() {
            v = v * self.p + d;
        }
        Elem(v)
    }

    fn add_digits(&self, mut a: u32, mut b: u32) -> u32 {
        let p = self.p;
        let mut r = 0;
        let mut place = 1;
        for _ in 0..self.e {
            r += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        r
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        if let Some(t) = &self.add_table {
            return Elem(t[a.0 as usize * self.order as usize + b.0 as usize]);
        }
        Elem(self.add_digits(a.0, b.0))
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        if self.p == 2 || a.is_zero() {
            return a;
        }
        let p = self.p;
        let mut v = a.0;
        let mut r = 0;
        let mut place = 1;
        for _ in 0..self.e {
            r += ((p - v % p) % p) * place;
            v /= p;
            place *= p;
        }
        Elem(r)
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        match &self.tables {
            Some(t) => {
                let n = self.order - 1;
                let s = t.log[a.0 as usize] + t.log[b.0 as usize];
                Elem(t.exp[(if s >= n { s - n } else { s }) as usize])
            }
            None => self.mul_poly(a, b),
        }
    }

    fn mul_poly(&self, a: Elem, b: Elem) -> Elem {
        let prod = poly::mul_mod(&self.digits(a), &self.digits(b), &self.modulus, self.p);
        let mut digits = prod;
        digits.resize(self.e as usize, 0);
        self.pack(&digits)
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: Elem) -> Elem {
        assert!(!a.is_zero(), "inverse of zero");
        match &self.tables {
            Some(t) => {
                let n = self.order - 1;
                Elem(t.exp[((n - t.log[a.0 as usize]) % n) as usize])
            }
            None => self.pow(a, self.order as u64 - 2),
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Elem {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: Elem, n: u64) -> Elem {
        if n == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        if let Some(t) = &self.tables {
            let m = (self.order - 1) as u128;
            let idx = (t.log[a.0 as usize] as u128 * n as u128) % m;
            return Elem(t.exp[idx as usize]);
        }
        let mut base = a;
        let mut acc = Elem::ONE;
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul_poly(acc, base);
            }
            base = self.mul_poly(base, base);
            k >>= 1;
        }
        acc
    }

    /// `g^i` for the field generator `g`.
    pub fn gen_pow(&self, i: u64) -> Elem {
        match &self.tables {
            Some(t) => Elem(t.exp[(i % (self.order as u64 - 1)) as usize]),
            None => self.pow(self.generator, i % (self.order as u64 - 1)),
        }
    }

    /// Discrete logarithm to base `g`; `None` for zero.
    pub fn log(&self, a: Elem) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        if let Some(t) = &self.tables {
            let l = t.log[a.0 as usize];
            debug_assert_ne!(l, NO_LOG);
            return Some(l as u64);
        }
        Some(self.bsgs_log(a))
    }

    fn bsgs_log(&self, a: Elem) -> u64 {
        let n = self.order as u64 - 1;
        let m = (n as f64).sqrt().ceil() as u64;
        let mut baby = HashMap::with_capacity(m as usize);
        let mut cur = Elem::ONE;
        for j in 0..m {
            baby.entry(cur).or_insert(j);
            cur = self.mul_poly(cur, self.generator);
        }
        let factor = self.inv(self.pow(self.generator, m));
        let mut gamma = a;
        for i in 0..=m {
            if let Some(&j) = baby.get(&gamma) {
                return (i * m + j) % n;
            }
            gamma = self.mul_poly(gamma, factor);
        }
        unreachable!("generator is primitive")
    }

    /// `a^(p^k)`.
    pub fn frobenius(&self, a: Elem, k: u32) -> Elem {
        let mut x = a;
        for _ in 0..k {
            x = self.pow(x, self.p as u64);
        }
        x
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: Elem) -> u64 {
        assert!(!a.is_zero());
        let mut n = self.order as u64 - 1;
        for l in prime_factors(n) {
            while n.is_multiple_of(l) && self.pow(a, n / l) == Elem::ONE {
                n /= l;
            }
        }
        n
    }

    fn check_sub(&self, sub_exp: u32) -> Result<()> {
        if sub_exp == 0 || !self.e.is_multiple_of(sub_exp) {
            return Err(Error::NotASubfield { sub: sub_exp, e: self.e });
        }
        Ok(())
    }

    /// Whether `x` lies in the subfield GF(p^sub_exp).
    pub fn subfield_membership(&self, x: Elem, sub_exp: u32) -> Result<bool> {
        self.check_sub(sub_exp)?;
        Ok(self.frobenius(x, sub_exp) == x)
    }

    /// Trace from GF(p^e) down to GF(p^sub_exp).
    pub fn trace_to(&self, x: Elem, sub_exp: u32) -> Result<Elem> {
        self.check_sub(sub_exp)?;
        let mut acc = Elem::ZERO;
        let mut term = x;
        for _ in 0..self.e / sub_exp {
            acc = self.add(acc, term);
            term = self.frobenius(term, sub_exp);
        }
        Ok(acc)
    }

    /// Elements of GF(p^sub_exp), zero first, then powers of its generator.
    pub fn subfield_elements(&self, sub_exp: u32) -> Result<Vec<Elem>> {
        self.check_sub(sub_exp)?;
        let sub_order = (self.p as u64).pow(sub_exp);
        let step = (self.order as u64 - 1) / (sub_order - 1);
        let mut out = vec![Elem::ZERO];
        out.extend((0..sub_order - 1).map(|i| self.gen_pow(i * step)));
        Ok(out)
    }

    fn is_primitive(&self, a: Elem) -> bool {
        if a.is_zero() {
            return false;
        }
        let n = self.order as u64 - 1;
        prime_factors(n)
            .into_iter()
            .all(|l| self.pow(a, n / l) != Elem::ONE)
    }

    fn smallest_primitive(&self) -> Elem {
        for i in 1..self.order {
            let a = self.pack(&lex_digits(i, self.p, self.e));
            if self.is_primitive(a) {
                return a;
            }
        }
        // GF(2): the only nonzero element generates.
        Elem::ONE
    }

    fn build_tables(&self) -> LogTables {
        let n = self.order as usize - 1;
        let mut exp = vec![0u32; n.max(1)];
        let mut log = vec![NO_LOG; self.order as usize];
        let mut cur = Elem::ONE;
        for (i, slot) in exp.iter_mut().enumerate().take(n) {
            *slot = cur.0;
            log[cur.0 as usize] = i as u32;
            cur = self.mul_poly(cur, self.generator);
        }
        LogTables { exp, log }
    }
}

/// Dense polynomials over GF(p), constant coefficient first.
pub(crate) mod poly {
    fn trim(a: &mut Vec<u32>) {
        while a.len() > 1 && *a.last().unwrap() == 0 {
            a.pop();
        }
        if a.is_empty() {
            a.push(0);
        }
    }

    fn degree(a: &[u32]) -> Option<usize> {
        a.iter().rposition(|&c| c != 0)
    }

    fn inv_mod(a: u32, p: u32) -> u32 {
        let mut r = 1u64;
        let mut b = a as u64;
        let mut k = p as u64 - 2;
        while k > 0 {
            if k & 1 == 1 {
                r = r * b % p as u64;
            }
            b = b * b % p as u64;
            k >>= 1;
        }
        r as u32
    }

    pub fn rem(a: &[u32], f: &[u32], p: u32) -> Vec<u32> {
        let mut r = a.to_vec();
        let df = degree(f).expect("nonzero modulus");
        let lead_inv = inv_mod(f[df], p) as u64;
        while let Some(dr) = degree(&r) {
            if dr < df {
                break;
            }
            let c = r[dr] as u64 * lead_inv % p as u64;
            let shift = dr - df;
            for (i, &fi) in f.iter().enumerate().take(df + 1) {
                let sub = c * fi as u64 % p as u64;
                let v = &mut r[i + shift];
                *v = ((*v as u64 + p as u64 - sub) % p as u64) as u32;
            }
        }
        trim(&mut r);
        r
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut out = vec![0u64; a.len() + b.len()];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        let mut v: Vec<u32> = out.into_iter().map(|c| c as u32).collect();
        trim(&mut v);
        v
    }

    pub fn mul_mod(a: &[u32], b: &[u32], f: &[u32], p: u32) -> Vec<u32> {
        rem(&mul(a, b, p), f, p)
    }

    pub fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let n = a.len().max(b.len());
        let mut out: Vec<u32> = (0..n)
            .map(|i| {
                let x = *a.get(i).unwrap_or(&0);
                let y = *b.get(i).unwrap_or(&0);
                (x + p - y) % p
            })
            .collect();
        trim(&mut out);
        out
    }

    pub fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        while degree(&y).is_some() {
            let r = rem(&x, &y, p);
            x = y;
            y = r;
        }
        x
    }

    /// Irreducibility of a monic `f` of degree >= 1: no common factor with
    /// `X^(p^k) - X` for `k <= deg f / 2`.
    pub fn is_irreducible(f: &[u32], p: u32) -> bool {
        let e = degree(f).unwrap_or(0);
        if e == 0 {
            return false;
        }
        let x = vec![0, 1];
        let mut h = rem(&x, f, p);
        for _ in 0..e / 2 {
            let mut power = vec![1];
            let mut base = h.clone();
            let mut k = p;
            while k > 0 {
                if k & 1 == 1 {
                    power = mul_mod(&power, &base, f, p);
                }
                base = mul_mod(&base, &base, f, p);
                k >>= 1;
            }
            h = power;
            let g = gcd(f, &sub(&h, &x, p), p);
            if degree(&g).unwrap_or(0) > 0 {
                return false;
            }
        }
        true
    }
}
