use alloc::string::String;

/// Everything that can go wrong inside the core crate.
///
/// Variants are grouped the way the command-line front end reports them:
/// cap violations map to one exit status, precondition failures to another.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoreError {
    #[error("{what} of size {size} exceeds the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: u128,
        cap: u128,
    },
    #[error("normal-subgroup lattice needs {classes} classes, cap is {cap}")]
    LatticeCapExceeded { classes: usize, cap: usize },
    #[error("centralizer algebra has {size} members, cap is {cap}")]
    AlgebraTooLarge { size: u128, cap: u128 },
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("invalid group spec: {0}")]
    InvalidSpec(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown element: {0}")]
    UnknownElement(String),
    #[error("index {index} out of range (length {len})")]
    OutOfRange { index: usize, len: usize },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("set is not a subgroup")]
    NotSubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("identification element is not central")]
    IdentificationNotCentral,
    #[error("identification does not embed every factor")]
    IdentificationNotIsomorphism,
    #[error("generator images do not define a homomorphism")]
    NotAHomomorphism,
    #[error("map is not bijective")]
    NotBijective,
    #[error("given elements do not generate the group")]
    GensDoNotGenerate,

    #[error("cycle type is an odd permutation")]
    OddParity,
    #[error("infeasible decomposition: {0}")]
    InfeasibleDecomposition(String),
    #[error("no fixed-point-free 1x1 block exists over F_2")]
    NoFixedPointFreeScalar,

    #[error("target is not a subgroup")]
    TargetNotSubgroup,
    #[error("modulus is not a normal subgroup")]
    ModuloNotNormal,
    #[error("group is not soluble")]
    NotSoluble,
    #[error("elements do not generate the group modulo its derived subgroup")]
    ImagesDoNotGenerateAbelianization,
    #[error("elements do not generate the group modulo its centre")]
    NotGeneratingModCenter,
    #[error("elements do not generate the group modulo the given subgroup")]
    NotGeneratingModSubgroup,
    #[error("subgroup is not acceptable: {0}")]
    NotAcceptable(String),
    #[error("group is not a central product of quasisimple groups: {0}")]
    NotQuasisemisimple(String),
    #[error("group carries no factor data")]
    FactorDataMissing,
    #[error("group is not nonabelian simple or quasisimple: {0}")]
    NotSimple(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("degree {0} repeated")]
    RepeatedDegree(u32),
    #[error("coordinate {0} cannot be enumerated")]
    NotEnumerable(usize),
}

impl CoreError {
    /// True for the errors caused by a size cap rather than by bad input.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            CoreError::CapExceeded { .. }
                | CoreError::LatticeCapExceeded { .. }
                | CoreError::AlgebraTooLarge { .. }
        )
    }
}

pub type Result<T, E = CoreError> = core::result::Result<T, E>;
