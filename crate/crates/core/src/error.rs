use thiserror::Error;

/// Everything that can go wrong while building or analyzing a game.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GameError {
    #[error("empty population: at least one player is required")]
    EmptyPopulation,
    #[error("players[{player}]: sample count must be at least 1")]
    ZeroSamples { player: usize },
    #[error("mu_e must be a positive finite number, got {0}")]
    InvalidMuE(f64),
    #[error("sigma_sq must be a non-negative finite number, got {0}")]
    InvalidSigmaSq(f64),
    #[error("linreg.d must be at least 1")]
    InvalidDimension,
    #[error("linreg.sigma_bias_sq must be a non-negative finite number, got {0}")]
    InvalidBiasCoefficient(f64),
    #[error("players[{player}]: n must exceed d+1 (n = {n}, d = {d})")]
    TooFewSamples { player: usize, n: u64, d: usize },
    #[error("{what}: {requested} players exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },
    #[error("player index {player} is out of range for {players} players")]
    PlayerOutOfRange { player: usize, players: usize },
    #[error("player {player} is not a member of coalition {coalition}")]
    NotInCoalition { player: usize, coalition: String },
    #[error("invalid coalition: {0}")]
    InvalidCoalition(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("coarse weight {0} is outside [0, 1]")]
    InvalidWeight(f64),
    #[error("malformed fine weight row: {0}")]
    MalformedWeightRow(String),
    #[error("linear regression parameters are required for this operation")]
    MissingLinReg,
    #[error("scheme {scheme} cannot be used here: {reason}")]
    SchemeNotApplicable { scheme: String, reason: String },
    #[error("malformed two-size arrangement: {0}")]
    MalformedArrangement(String),
    #[error("invalid two-size game: {0}")]
    InvalidTwoSizeGame(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),
}

impl GameError {
    pub(crate) fn not_in(player: usize, coalition: &crate::model::Coalition) -> Self {
        GameError::NotInCoalition {
            player,
            coalition: coalition.to_string(),
        }
    }

    /// `true` for the errors that signal an enumeration or search cap.
    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self, GameError::CapExceeded { .. })
    }
}

pub type Result<T, E = GameError> = std::result::Result<T, E>;
