//! Stabilizer code parameters from self-orthogonal classical codes.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::affine::ClassicalCode;
use crate::error::{Error, Result};
use crate::oracle::{check_designed_distance, Budget, DistanceCheck};
use crate::ortho::{certify_self_orthogonal, Metric, OrthoCertificate};

/// Status of a row's claims.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Certified {
    /// Gram-certified and distance checked by the oracle.
    Yes,
    /// Gram-certified; the distance rests on the construction's witness only.
    UnverifiedDistance,
    No,
}

impl Certified {
    pub fn as_str(self) -> &'static str {
        match self {
            Certified::Yes => "true",
            Certified::UnverifiedDistance => "unverified(distance)",
            Certified::No => "false",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "true" => Some(Certified::Yes),
            "unverified(distance)" => Some(Certified::UnverifiedDistance),
            "false" => Some(Certified::No),
            _ => None,
        }
    }
}

impl fmt::Display for Certified {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Certified {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Certified::Yes => s.serialize_bool(true),
            Certified::No => s.serialize_bool(false),
            Certified::UnverifiedDistance => s.serialize_str(self.as_str()),
        }
    }
}

impl<'de> Deserialize<'de> for Certified {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Bool(bool),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Bool(true) => Ok(Certified::Yes),
            Raw::Bool(false) => Ok(Certified::No),
            Raw::Str(s) => Certified::parse(&s).ok_or_else(|| serde::de::Error::custom(format!("bad certified value {s}"))),
        }
    }
}

/// Where the distance lower bound comes from.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DistanceWitness {
    /// No dual word of weight below `weight` (exhaustive column search).
    Oracle { weight: u64 },
    /// The exponent set holds the run `start..start+len`.
    ConsecutiveRun { start: u64, len: u64 },
    /// Footprint bound of a hyperbolic code.
    Footprint { bound: u64 },
    #[default]
    None,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CertificateChain {
    /// One entry per Gram product found to vanish.
    pub gram: Vec<String>,
    pub distance: Vec<DistanceWitness>,
    /// Free-form hypothesis trace.
    pub hypotheses: Vec<String>,
}

/// `[[n, k, >= d_lower]]_q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizerParams {
    pub n: usize,
    pub k: usize,
    pub d_lower: u64,
    pub q: u64,
    pub rule: String,
    pub certified: Certified,
    #[serde(skip)]
    pub chain: CertificateChain,
}

impl fmt::Display for StabilizerParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}, >= {}]]_{}", self.n, self.k, self.d_lower, self.q)
    }
}

/// Quantum alphabet for a code linear over GF(alphabet).
pub fn quantum_base(alphabet: u64, metric: Metric) -> u64 {
    match metric {
        Metric::Hermitian { q } => q,
        _ => alphabet,
    }
}

/// CSS-type parameters from a Gram-certified self-orthogonal code `D`:
/// the large code is `C = D^perp`, so `k = n - 2 dim D`.
pub fn css_params(
    self_orthogonal: &ClassicalCode,
    cert: &OrthoCertificate,
    certified_d: u64,
    metric: Metric,
    rule: &str,
) -> Result<StabilizerParams> {
    if !cert.self_orthogonal {
        return Err(Error::NotSelfOrthogonal);
    }
    metric.check_alphabet(self_orthogonal.alphabet())?;
    let n = self_orthogonal.length();
    let dim = self_orthogonal.dimension();
    Ok(StabilizerParams {
        n,
        k: n - 2 * dim,
        d_lower: certified_d.max(1),
        q: quantum_base(self_orthogonal.alphabet(), metric),
        rule: rule.to_string(),
        certified: Certified::UnverifiedDistance,
        chain: CertificateChain {
            gram: vec![format!("{dim}x{dim} {} Gram vanishes", metric.name())],
            ..Default::default()
        },
    })
}

/// Gram-certifies `code`, derives CSS parameters with designed distance `d`
/// and, at desk scale, confirms `d` with the column oracle. A distance with
/// neither a structural witness nor an oracle confirmation is refused.
pub fn certify_design(
    code: &ClassicalCode,
    metric: Metric,
    d: u64,
    rule: &str,
    witness: DistanceWitness,
    budget: Budget,
) -> Result<StabilizerParams> {
    let cert = certify_self_orthogonal(code, metric)?;
    if let Some(&(i, j)) = cert.violations.first() {
        return Err(Error::Certification {
            rule: rule.to_string(),
            detail: format!("generator rows {i} and {j} have a nonzero {} product", metric.name()),
        });
    }
    let mut params = css_params(code, &cert, d, metric, rule)?;
    let confirmed = check_designed_distance(code.basis(), code.field(), d, budget)? == DistanceCheck::Confirmed;
    if witness == DistanceWitness::None && !confirmed {
        return Err(Error::Hypothesis {
            rule: rule.to_string(),
            detail: format!("distance {d} has no structural witness and the oracle could not run"),
        });
    }
    if witness != DistanceWitness::None {
        params.chain.distance.push(witness);
    }
    if confirmed {
        params.certified = Certified::Yes;
        params.chain.distance.push(DistanceWitness::Oracle { weight: d });
    }
    Ok(params)
}

/// Enlargement from nested self-orthogonal codes of dimensions
/// `card2 <= card1`: `k = n - (card1 + card2)`.
pub fn enlargement_params(n: usize, card1: usize, card2: usize, d: u64, q: u64, rule: &str) -> Result<StabilizerParams> {
    if card2 > card1 {
        return Err(Error::Nesting { card1, card2 });
    }
    if card1 + card2 > n {
        return Err(Error::Nesting { card1, card2 });
    }
    Ok(StabilizerParams {
        n,
        k: n - card1 - card2,
        d_lower: d.max(1),
        q,
        rule: rule.to_string(),
        certified: Certified::UnverifiedDistance,
        chain: CertificateChain::default(),
    })
}

/// Enlargement from two exponent sets, `inner` nested in `outer`, with
/// designed distances `d1` (outer) and `d2` (inner).
pub fn enlarge(n: usize, outer: &[Vec<u64>], d1: u64, inner: &[Vec<u64>], d2: u64, q: u64, rule: &str) -> Result<StabilizerParams> {
    if inner.iter().any(|a| !outer.contains(a)) {
        return Err(Error::Nesting { card1: outer.len(), card2: inner.len() });
    }
    check_gap(d1, d2, q)?;
    enlargement_params(n, outer.len(), inner.len(), d1, q, rule)
}

/// The coset gap `d1 <= ceil((q+1) d2 / q)` needed for the enlarged distance.
pub fn check_gap(d1: u64, d2: u64, q: u64) -> Result<()> {
    if d1 * q < (q + 1) * d2 + q {
        Ok(())
    } else {
        Err(Error::Gap { d1, d2, q })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::make_field;
    use crate::linalg::Matrix;
    use std::sync::Arc;

    fn cert(ok: bool) -> OrthoCertificate {
        OrthoCertificate { self_orthogonal: ok, violations: vec![], gram: Matrix::zero_rows(0) }
    }

    #[test]
    fn self_dual_gives_zero() {
        let f = Arc::new(make_field(2, 1).unwrap());
        // [2,1] repetition code (1,1) is self-dual over GF(2).
        let code = ClassicalCode::from_rows(
            f.clone(),
            2,
            vec![vec![crate::galois::Elem::ONE; 2]],
            1,
            Default::default(),
        );
        let p = css_params(&code, &cert(true), 2, Metric::Euclidean, "x").unwrap();
        assert_eq!((p.n, p.k, p.q), (2, 0, 2));
        assert_eq!(css_params(&code, &cert(false), 2, Metric::Euclidean, "x"), Err(Error::NotSelfOrthogonal));
    }

    #[test]
    fn enlargement_examples() {
        let p = enlargement_params(94, 6, 1, 3, 4, "x").unwrap();
        assert_eq!((p.n, p.k, p.d_lower, p.q), (94, 87, 3, 4));
        let p = enlargement_params(98, 4, 1, 3, 7, "x").unwrap();
        assert_eq!(p.k, 93);
        assert_eq!(enlargement_params(50, 3, 3, 2, 2, "x").unwrap().k, 44);
        assert!(matches!(enlargement_params(10, 1, 2, 2, 2, "x"), Err(Error::Nesting { .. })));
    }

    #[test]
    fn gap_inequality() {
        assert!(check_gap(10, 8, 3).is_ok());
        assert!(check_gap(11, 8, 3).is_ok());
        assert!(check_gap(12, 8, 3).is_err());
        assert!(check_gap(6, 4, 4).is_err());
        assert!(check_gap(6, 5, 4).is_ok());
    }

    #[test]
    fn enlarge_requires_nesting() {
        let outer = vec![vec![1], vec![2], vec![3]];
        let p = enlarge(20, &outer, 4, &outer[..1], 3, 4, "x").unwrap();
        assert_eq!(p.k, 16);
        assert!(matches!(enlarge(20, &outer[..1], 4, &[vec![5]], 3, 4, "x"), Err(Error::Nesting { .. })));
        assert!(matches!(enlarge(20, &outer, 9, &outer[..1], 3, 4, "x"), Err(Error::Gap { .. })));
    }

    #[test]
    fn json_roundtrip() {
        let p = StabilizerParams {
            n: 80,
            k: 18,
            d_lower: 20,
            q: 3,
            rule: "r".into(),
            certified: Certified::UnverifiedDistance,
            chain: Default::default(),
        };
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"n":80,"k":18,"d_lower":20,"q":3,"rule":"r","certified":"unverified(distance)"}"#);
        let back: StabilizerParams = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        let yes = StabilizerParams { certified: Certified::Yes, ..p };
        assert!(serde_json::to_string(&yes).unwrap().ends_with(r#""certified":true}"#));
    }
}
