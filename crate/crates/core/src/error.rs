use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("alphabet size must be at least 2, got {0}")]
    AlphabetTooSmall(usize),
    #[error("symbol {symbol} is outside the alphabet of size {alphabet_size}")]
    SymbolOutOfRange { symbol: u32, alphabet_size: usize },
    #[error("empty codewords are not allowed")]
    EmptyCodeword,
    #[error("empty compositions are not allowed")]
    EmptyComposition,
    #[error("a composition multiset needs at least one codeword")]
    EmptyMultiset,
    #[error("multiplicities must be positive")]
    ZeroMultiplicity,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("pattern length {pattern} does not match word length {word}")]
    LengthMismatch { pattern: usize, word: usize },
    #[error("prefix of length {prefix} and suffix of length {suffix} overlap in a word of length {target}")]
    Overlap { prefix: usize, suffix: usize, target: usize },
    #[error("operation requires a binary alphabet, got size {0}")]
    NotBinary(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(String),
}
