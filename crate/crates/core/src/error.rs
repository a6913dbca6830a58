use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("carrier size must be at least 1")]
    EmptyCarrier,
    #[error("operation `{symbol}` (#{position}): arity must be positive")]
    ZeroArity { symbol: String, position: usize },
    #[error("operation `{symbol}` (#{position}): table has {found} entries, expected {expected}")]
    TableLength {
        symbol: String,
        position: usize,
        expected: usize,
        found: usize,
    },
    #[error("operation `{symbol}`: entry {index} is {value}, outside carrier 0..{carrier}")]
    EntryOutOfRange {
        symbol: String,
        index: usize,
        value: u32,
        carrier: usize,
    },
    #[error("operation `{symbol}` (#{position}) is declared more than once")]
    DuplicateSymbol { symbol: String, position: usize },
    #[error("table of {carrier}^{arity} entries exceeds the size budget of {budget}")]
    TooLarge {
        carrier: usize,
        arity: usize,
        budget: usize,
    },
    #[error("function table has {found} entries, expected {expected}")]
    BadTable { expected: usize, found: usize },
    #[error("value {value} is outside carrier 0..{carrier}")]
    ValueOutOfRange { value: u32, carrier: usize },

    #[error("unknown operation symbol `{0}`")]
    UnknownSymbol(String),
    #[error("operation `{symbol}` expects {expected} arguments, got {found}")]
    ArityMismatch {
        symbol: String,
        expected: usize,
        found: usize,
    },
    #[error("variable x{index} exceeds context arity {arity}")]
    VariableOutOfRange { index: usize, arity: usize },
    #[error("constant #{value} is outside carrier 0..{carrier}")]
    ConstantOutOfRange { value: u32, carrier: usize },
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("not a permutation of {size} elements: {detail}")]
    NotPermutation { size: usize, detail: String },
    #[error("subset {subset:?} is not closed: `{symbol}`{args:?} = {value}")]
    NotClosed {
        subset: Vec<u32>,
        symbol: String,
        args: Vec<u32>,
        value: u32,
    },
    #[error("subset must be nonempty")]
    EmptySubset,

    #[error("variable set must be nonempty")]
    EmptyVariableSet,
    #[error("x{index} is not an essential variable of the term")]
    NotEssential { index: usize },
    #[error("clone enumeration exceeded the budget of {budget} members (reached {reached})")]
    CloneBudget { budget: usize, reached: usize },
}
