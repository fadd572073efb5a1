use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("zero is not allowed as a polylogarithm argument")]
    ZeroArgument,
    #[error("word starts with the zero letter")]
    LeadingZero,
    #[error("level mismatch: {0} vs {1}")]
    LevelMismatch(u32, u32),
    #[error("level {from} does not divide level {to}")]
    BadEmbedding { from: u32, to: u32 },
    #[error("composition and argument lists differ in length ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("index entries must be positive")]
    ZeroIndex,
    #[error("residue {0} out of range for level {1}")]
    Residue(u32, u32),
    #[error("level must be positive")]
    ZeroLevel,
}
