use thiserror::Error;

/// Errors raised across the library. Variant names are part of the public
/// contract: the CLI surfaces them verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("NonPrimeModulus: {0} is not prime")]
    NonPrimeModulus(u64),
    #[error("InvalidField: {0}")]
    InvalidField(String),
    #[error("MissingRootOfUnity: no primitive {n}-th root of unity in {field}")]
    MissingRootOfUnity { n: u64, field: String },
    #[error("CharacteristicDividesOrder: characteristic {characteristic} divides group order {order}")]
    CharacteristicDividesOrder { characteristic: u64, order: u64 },
    #[error("UnsupportedInfiniteGroup: invariant factor 0 (a copy of Z) is not supported")]
    UnsupportedInfiniteGroup,
    #[error("NotAssociative: (e{0} e{1}) e{2} != e{0} (e{1} e{2})")]
    NotAssociative(usize, usize, usize),
    #[error("NoUnit: {0}")]
    NoUnit(String),
    #[error("GradingViolation: e{0} e{1} has a nonzero e{2} component of the wrong degree")]
    GradingViolation(usize, usize, usize),
    #[error("WrongGroup: {0}")]
    WrongGroup(String),
    #[error("BadCharacteristic: {0}")]
    BadCharacteristic(String),
    #[error("AlgebraMismatch: {0}")]
    AlgebraMismatch(String),
    #[error("NotAutomorphism: {0}")]
    NotAutomorphism(String),
    #[error("InvalidModule: {0}")]
    InvalidModule(String),
    #[error("InvalidAction: {0}")]
    InvalidAction(String),
    #[error("IncompatiblePsi: {0}")]
    IncompatiblePsi(String),
    #[error("NotHomogeneous: {0}")]
    NotHomogeneous(String),
    #[error("NotNatural: {0}")]
    NotNatural(String),
    #[error("RightModuleNotProjective: {0}")]
    RightModuleNotProjective(String),
    #[error("CyclicQuiver: {0}")]
    CyclicQuiver(String),
    #[error("NoSuchVertex: {0}")]
    NoSuchVertex(String),
    #[error("NotHereditary: {0}")]
    NotHereditary(String),
    #[error("InvalidComplex: {0}")]
    InvalidComplex(String),
    #[error("DimensionMismatch: {0}")]
    DimensionMismatch(String),
    #[error("ParseError: {0}")]
    Parse(String),
}

impl Error {
    /// The bare variant name, e.g. `"GradingViolation"`.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NonPrimeModulus(_) => "NonPrimeModulus",
            Error::InvalidField(_) => "InvalidField",
            Error::MissingRootOfUnity { .. } => "MissingRootOfUnity",
            Error::CharacteristicDividesOrder { .. } => "CharacteristicDividesOrder",
            Error::UnsupportedInfiniteGroup => "UnsupportedInfiniteGroup",
            Error::NotAssociative(..) => "NotAssociative",
            Error::NoUnit(_) => "NoUnit",
            Error::GradingViolation(..) => "GradingViolation",
            Error::WrongGroup(_) => "WrongGroup",
            Error::BadCharacteristic(_) => "BadCharacteristic",
            Error::AlgebraMismatch(_) => "AlgebraMismatch",
            Error::NotAutomorphism(_) => "NotAutomorphism",
            Error::InvalidModule(_) => "InvalidModule",
            Error::InvalidAction(_) => "InvalidAction",
            Error::IncompatiblePsi(_) => "IncompatiblePsi",
            Error::NotHomogeneous(_) => "NotHomogeneous",
            Error::NotNatural(_) => "NotNatural",
            Error::RightModuleNotProjective(_) => "RightModuleNotProjective",
            Error::CyclicQuiver(_) => "CyclicQuiver",
            Error::NoSuchVertex(_) => "NoSuchVertex",
            Error::NotHereditary(_) => "NotHereditary",
            Error::InvalidComplex(_) => "InvalidComplex",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::Parse(_) => "ParseError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
