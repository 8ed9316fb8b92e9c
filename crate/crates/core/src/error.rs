use thiserror::Error;

/// Errors raised by constructors and operations across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("cyclotomic order must be at least 1")]
    ZeroCyclotomicOrder,
    #[error("extension degree must be at least 1")]
    ZeroExtensionDegree,
    #[error("field of size {p}^{e} is too large for this implementation")]
    FieldTooLarge { p: u64, e: u32 },
    #[error("elements from different field contexts cannot be combined")]
    ContextMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("q must be nonzero")]
    ZeroQ,
    #[error("q-binomial ({n} choose {m}) is undefined for m > n")]
    BinomialRange { n: u64, m: u64 },
    #[error("cannot parse scalar {input:?}: {reason}")]
    ScalarParse { input: String, reason: String },

    #[error("torsion order {0} is invalid (must be at least 2)")]
    InvalidTorsionOrder(u64),
    #[error("expected {expected} coordinates, got {got}")]
    CoordinateLength { expected: usize, got: usize },
    #[error("group is infinite")]
    InfiniteGroup,
    #[error("character image for generator {generator} is zero")]
    ZeroCharacterImage { generator: usize },
    #[error("character image for generator {generator} does not satisfy image^{order} = 1")]
    CharacterTorsion { generator: usize, order: u64 },
    #[error("field lacks a primitive {0}-th root of unity")]
    MissingRootOfUnity(u64),
    #[error("cocycle compatibility fails for generators {i} and {j}")]
    CocycleCompatibility { i: usize, j: usize },
    #[error("cocycle torsion consistency fails for generator {generator}")]
    CocycleTorsion { generator: usize },
    #[error("character has infinite order")]
    InfiniteCharacterOrder,
    #[error("characters are defined on different groups")]
    GroupMismatch,

    #[error("cocycle is attached to a different character than the commutation character")]
    CocycleCharacterMismatch,
    #[error("operation requires {expected}, found {found}")]
    CaseMismatch { expected: &'static str, found: String },
    #[error("ideal parameters violate a constraint: {0}")]
    IdealConstraint(String),
    #[error("structure data is not well defined on the quotient group: {0}")]
    QuotientDescent(String),
    #[error("a finite support sample is required for an infinite group")]
    SampleRequired,

    #[error("modules have different parents")]
    ParentMismatch,
    #[error("matrix dimension mismatch: {0}")]
    Dimension(String),
    #[error("module is not a weight module for the supplied candidate characters")]
    NotWeightModule,
    #[error("weight multiplicity {0} exceeds 1")]
    WeightMultiplicity(usize),
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("Verma quotient by the zero ideal is infinite dimensional")]
    InfiniteDimensional,
}

pub type Result<T> = std::result::Result<T, Error>;
