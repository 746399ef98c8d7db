//! Regime classification and constructive stable arrangements for
//! equal-size and two-size populations.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{GameError, Result};
use crate::model::{describe_arrangement, FederationScheme, ModelParams, Partition, Profile, TwoSizeGame};
use crate::scalar::{rational_from_decimal, Scalar};
use crate::stability::{Notion, Preference, ProfileAnalyzer, ProfileDeviation};

/// Where a sample count sits relative to the threshold `μ_e/σ²`.
///
/// Compared exactly; with `σ² = 0` the threshold is infinite.
pub fn compare_to_threshold(n: u64, params: &ModelParams) -> Ordering {
    if params.sigma_sq == 0.0 {
        return Ordering::Less;
    }
    let lhs = rational_from_decimal(params.sigma_sq) * crate::scalar::Rational::from_count(n);
    lhs.cmp(&rational_from_decimal(params.mu_e))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// Every player has at most `μ_e/σ²` samples (strictly fewer for equal sizes).
    AllSmall,
    /// Every player has more than `μ_e/σ²` samples.
    AllLarge,
    /// Some player sits exactly at `μ_e/σ²`.
    Boundary,
    /// Smalls below and larges above the threshold.
    Mixed,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::AllSmall => "all-small",
            Regime::AllLarge => "all-large",
            Regime::Boundary => "boundary",
            Regime::Mixed => "mixed",
        })
    }
}

/// A family of partitions that is stable under some notion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prescription {
    Grand,
    Singletons,
    /// Every partition.
    Any,
    /// Every partition in which each large player is alone.
    LargeAlone,
}

impl Prescription {
    /// Whether `p` belongs to the family; `large` marks large players.
    pub fn contains(&self, p: &Partition, large: impl Fn(usize) -> bool) -> bool {
        match self {
            Prescription::Grand => p.coalitions().len() == 1,
            Prescription::Singletons => p.coalitions().iter().all(|c| c.len() == 1),
            Prescription::Any => true,
            Prescription::LargeAlone => p
                .coalitions()
                .iter()
                .all(|c| c.len() == 1 || c.members().iter().all(|&i| !large(i))),
        }
    }
}

impl fmt::Display for Prescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Prescription::Grand => "grand coalition",
            Prescription::Singletons => "all singletons",
            Prescription::Any => "every partition",
            Prescription::LargeAlone => "every partition with each large player alone",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Claim {
    pub prescription: Prescription,
    pub notion: Notion,
    /// The prescribed family is exactly the stable set, not just inside it.
    pub unique: bool,
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.unique {
            write!(f, "{} is the unique {} stable partition", self.prescription, self.notion)
        } else {
            write!(f, "{} is {} stable", self.prescription, self.notion)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegimeClassification {
    pub regime: Regime,
    pub claims: Vec<Claim>,
}

impl RegimeClassification {
    /// Checks the claims against an exhaustive list of stable partitions.
    pub fn agrees_with(
        &self,
        notion: Notion,
        stable: &[Partition],
        all: &[Partition],
        large: impl Fn(usize) -> bool + Copy,
    ) -> bool {
        self.claims.iter().filter(|c| c.notion == notion).all(|claim| {
            let family: Vec<&Partition> = all.iter().filter(|p| claim.prescription.contains(p, large)).collect();
            let covered = family.iter().all(|p| stable.contains(p));
            covered && (!claim.unique || stable.len() == family.len())
        })
    }
}

fn require_mean(params: &ModelParams) -> Result<()> {
    params.validate()?;
    if params.linreg.is_some() {
        return Err(GameError::Precondition(
            "regime results are stated for mean estimation".into(),
        ));
    }
    Ok(())
}

/// Stable partitions of `m` players that all have `n` samples.
pub fn classify_equal_samples(
    n: u64,
    m: usize,
    params: &ModelParams,
    scheme: &FederationScheme,
) -> Result<RegimeClassification> {
    require_mean(params)?;
    if n == 0 {
        return Err(GameError::ZeroSamples { player: 0 });
    }
    if m == 0 {
        return Err(GameError::EmptyPopulation);
    }
    let regime = match compare_to_threshold(n, params) {
        Ordering::Less => Regime::AllSmall,
        Ordering::Equal => Regime::Boundary,
        Ordering::Greater => Regime::AllLarge,
    };
    let prescription = match scheme {
        FederationScheme::Uniform => match regime {
            Regime::AllSmall => Prescription::Grand,
            Regime::AllLarge => Prescription::Singletons,
            _ => Prescription::Any,
        },
        FederationScheme::CoarseOptimal => Prescription::Grand,
        other => {
            return Err(GameError::SchemeNotApplicable {
                scheme: other.name().into(),
                reason: "equal-size classification covers uniform and optimal coarse federation".into(),
            })
        }
    };
    Ok(RegimeClassification {
        regime,
        claims: vec![Claim {
            prescription,
            notion: Notion::Core,
            unique: true,
        }],
    })
}

/// Uniform-federation core results for a two-size population.
pub fn regime_predicates(game: &TwoSizeGame, params: &ModelParams) -> Result<RegimeClassification> {
    require_mean(params)?;
    game.validate()?;
    let small = compare_to_threshold(game.n_s, params);
    let large = compare_to_threshold(game.n_l, params);
    let core = |prescription, unique| Claim {
        prescription,
        notion: Notion::Core,
        unique,
    };
    Ok(match (small, large) {
        (_, Ordering::Less | Ordering::Equal) => RegimeClassification {
            regime: if large == Ordering::Equal {
                Regime::Boundary
            } else {
                Regime::AllSmall
            },
            claims: vec![core(Prescription::Grand, false)],
        },
        (Ordering::Greater, _) => RegimeClassification {
            regime: Regime::AllLarge,
            claims: vec![core(Prescription::Singletons, true)],
        },
        (Ordering::Equal, _) => RegimeClassification {
            regime: Regime::Boundary,
            claims: vec![core(Prescription::LargeAlone, false)],
        },
        (Ordering::Less, _) => RegimeClassification {
            regime: Regime::Mixed,
            claims: Vec::new(),
        },
    })
}

/// An individually stable arrangement under uniform federation, for
/// populations whose large players exceed the threshold.
///
/// `ℓ'` is the largest number of larges that can join all the smalls while
/// each large still weakly prefers that to being alone. The smalls keep the
/// `ℓ'` larges unless they strictly prefer being on their own.
pub fn individually_stable_uniform<T: Scalar, P: Preference<T>>(
    analyzer: &ProfileAnalyzer<T, P>,
) -> Result<Vec<Profile>> {
    let game = *analyzer.game();
    if game.small == 0 {
        return Err(GameError::Precondition("at least one small player is required".into()));
    }
    let alone = Profile::new(0, 1);
    let all_smalls = Profile::new(game.small, 0);
    let joined = (1..=game.large)
        .rev()
        .find(|&l| analyzer.weakly_prefers_large(Profile::new(game.small, l), alone))
        .unwrap_or(0);
    let kept = if joined > 0 && analyzer.prefers_small(all_smalls, Profile::new(game.small, joined)) {
        0
    } else {
        joined
    };
    let mut arrangement = vec![Profile::new(game.small, kept)];
    arrangement.extend(std::iter::repeat_n(alone, game.large - kept));
    Ok(arrangement)
}

pub fn construct_individually_stable_uniform(game: &TwoSizeGame, params: &ModelParams) -> Result<Vec<Profile>> {
    require_mean(params)?;
    if compare_to_threshold(game.n_l, params) != Ordering::Greater {
        return Err(GameError::Precondition(format!(
            "n_l = {} must exceed μ_e/σ² = {}",
            game.n_l,
            params.mu_e / params.sigma_sq
        )));
    }
    if compare_to_threshold(game.n_s, params) == Ordering::Greater {
        // Every player does best alone.
        let mut arrangement = vec![Profile::new(1, 0); game.small];
        arrangement.extend(std::iter::repeat_n(Profile::new(0, 1), game.large));
        return Ok(arrangement);
    }
    let analyzer = ProfileAnalyzer::float(*game, params, &FederationScheme::Uniform)?;
    individually_stable_uniform(&analyzer)
}

/// A strictly core stable arrangement under optimal coarse federation:
/// the smalls split off exactly when they strictly prefer being on their own.
pub fn strict_core_coarse<T: Scalar, P: Preference<T>>(analyzer: &ProfileAnalyzer<T, P>) -> Result<Vec<Profile>> {
    let game = *analyzer.game();
    if game.small == 0 || game.large == 0 {
        return Err(GameError::Precondition(
            "both small and large players are required".into(),
        ));
    }
    let all_smalls = Profile::new(game.small, 0);
    Ok(if analyzer.prefers_small(all_smalls, game.grand()) {
        vec![all_smalls, Profile::new(0, game.large)]
    } else {
        vec![game.grand()]
    })
}

pub fn construct_strict_core_coarse(game: &TwoSizeGame, params: &ModelParams) -> Result<Vec<Profile>> {
    params.validate()?;
    let analyzer = ProfileAnalyzer::float(*game, params, &FederationScheme::CoarseOptimal)?;
    strict_core_coarse(&analyzer)
}

/// Count-level stability facts about an arrangement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrangementReport {
    pub arrangement: Vec<Profile>,
    pub deviation: Option<ProfileDeviation>,
    pub blocking: Option<Profile>,
}

impl ArrangementReport {
    pub fn new<T: Scalar, P: Preference<T>>(analyzer: &ProfileAnalyzer<T, P>, arrangement: Vec<Profile>) -> Result<Self> {
        Ok(ArrangementReport {
            deviation: analyzer.individual_deviation(&arrangement, true)?,
            blocking: analyzer.blocking_profile(&arrangement)?,
            arrangement,
        })
    }
}

impl fmt::Display for ArrangementReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}; individually stable: ", describe_arrangement(&self.arrangement))?;
        match &self.deviation {
            None => f.write_str("yes")?,
            Some(d) => write!(f, "no ({d})")?,
        }
        f.write_str("; core stable: ")?;
        match &self.blocking {
            None => f.write_str("yes"),
            Some(b) => write!(f, "no (blocked by {b})"),
        }
    }
}
