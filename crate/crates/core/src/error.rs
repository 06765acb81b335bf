use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("field exponent must be positive")]
    ZeroExponent,
    #[error("field of order {p}^{e} exceeds the budget of {budget} elements")]
    FieldTooLarge { p: u64, e: u32, budget: u64 },
    #[error("{sub} does not divide the field exponent {e}")]
    NotASubfield { sub: u32, e: u32 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("invalid variety: {0}")]
    InvalidVariety(String),
    #[error("exponent tuple {tuple:?} lies outside the exponent box {bounds:?}")]
    OutOfBox { tuple: Vec<u64>, bounds: Vec<u64> },
    #[error("the exponent set is empty")]
    EmptyDelta,
    #[error("empty list of moduli")]
    EmptyModuli,
    #[error("modulus mismatch: {0}")]
    ModulusMismatch(String),
    #[error("hermitian metric needs a square coefficient field, got order {0}")]
    NonSquareField(u64),
    #[error("hypothesis of rule {rule} fails: {detail}")]
    Hypothesis { rule: String, detail: String },
    #[error("self-orthogonality certification failed for {rule}: {detail}")]
    Certification { rule: String, detail: String },
    #[error("direct check rejects t = {t}: monomials {a:?} and {b:?} are not orthogonal")]
    DirectCheckRejected { t: u64, a: Vec<u64>, b: Vec<u64> },
    #[error("monomial set is not admissible: {0}")]
    NotAdmissible(String),
    #[error("companion collision between representatives {a:?} and {b:?}")]
    CompanionCollision { a: Vec<u64>, b: Vec<u64> },
    #[error("t = {t} is outside 1..={max}")]
    TOutOfRange { t: u64, max: u64 },
    #[error("index {index} has no successor among {count} cyclotomic representatives")]
    LadderExhausted { index: usize, count: usize },
    #[error("code is not certified self-orthogonal")]
    NotSelfOrthogonal,
    #[error("nested sets required: card2 = {card2} exceeds card1 = {card1}")]
    Nesting { card1: usize, card2: usize },
    #[error("enlargement gap fails: d1 = {d1} exceeds ceil((q+1)*{d2}/q) with q = {q}")]
    Gap { d1: u64, d2: u64, q: u64 },
    #[error("enumeration budget exceeded: {needed} > {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("unknown fixture {0}")]
    UnknownFixture(String),
    #[error("golden mismatch for {name}: {detail}")]
    GoldenMismatch { name: String, detail: String },
    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
