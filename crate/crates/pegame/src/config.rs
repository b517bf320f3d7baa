//! TOML run configuration. Section and field names follow the parameter
//! tables: `mu`, `d_c`, `p`, `s_r`, `r_p`, `r_e`, `f_0`.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use pegame_core::orbit::{ReferenceOrbit, RelState, MU_EARTH};
use pegame_core::riccati::GameWeights;
use pegame_core::sim::{
    DisturbanceSpec, GameConfig, Strategy, DEFAULT_CAPTURE_RADIUS, DEFAULT_DECIMATION, DEFAULT_MAX_STEPS,
    DEFAULT_ORACLE_STEPS, DEFAULT_STEP,
};
use serde::{Deserialize, Serialize};

use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum StrategyName {
    Th,
    Numerical,
    Cw,
    Defense,
}

impl StrategyName {
    pub fn to_strategy(self, oracle_steps: usize) -> Strategy {
        match self {
            StrategyName::Th => Strategy::ThAnalytical,
            StrategyName::Numerical => Strategy::Numerical { oracle_steps },
            StrategyName::Cw => Strategy::CwBaseline,
            StrategyName::Defense => Strategy::Defense,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
pub enum ScenarioId {
    #[value(name = "I", alias = "i", alias = "1")]
    I,
    #[value(name = "II", alias = "ii", alias = "2")]
    II,
}

impl fmt::Display for ScenarioId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScenarioId::I => "I",
            ScenarioId::II => "II",
        })
    }
}

impl FromStr for ScenarioId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "I" | "i" | "1" => Ok(ScenarioId::I),
            "II" | "ii" | "2" => Ok(ScenarioId::II),
            _ => Err(Error::Usage(format!("unknown scenario {s:?} (expected I or II)"))),
        }
    }
}

/// The three reference-orbit eccentricities of the preset cases.
pub const PRESET_ECCENTRICITIES: [f64; 3] = [0.2, 1.0, 1.5];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameSection {
    #[serde(default = "default_mu")]
    pub mu: f64,
    #[serde(default = "default_d_c")]
    pub d_c: f64,
    #[serde(default = "default_h_f")]
    pub h_f: f64,
    #[serde(default = "default_strategy")]
    pub strategy: StrategyName,
    #[serde(default = "default_oracle_steps")]
    pub oracle_steps: usize,
    #[serde(default = "default_max_steps")]
    pub max_steps: usize,
    #[serde(default = "default_decimation")]
    pub decimation: usize,
    #[serde(default = "default_refresh")]
    pub refresh_every: usize,
    #[serde(default = "default_true")]
    pub stop_when_receding: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub p: f64,
    pub e: f64,
    #[serde(default)]
    pub strict_eccentricity: bool,
    pub s_r: f64,
    pub r_p: f64,
    pub r_e: f64,
    pub pursuer_position: [f64; 3],
    pub pursuer_velocity: [f64; 3],
    #[serde(default)]
    pub evader_position: [f64; 3],
    #[serde(default)]
    pub evader_velocity: [f64; 3],
    #[serde(default)]
    pub f_0: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DisturbanceSection {
    pub seed: u64,
    /// m/rad²
    pub bound: f64,
    #[serde(default)]
    pub resample_each_step: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub game: GameSection,
    pub scenario: ScenarioSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub disturbance: Option<DisturbanceSection>,
}

fn default_mu() -> f64 {
    MU_EARTH
}
fn default_d_c() -> f64 {
    DEFAULT_CAPTURE_RADIUS
}
fn default_h_f() -> f64 {
    DEFAULT_STEP
}
fn default_strategy() -> StrategyName {
    StrategyName::Th
}
fn default_oracle_steps() -> usize {
    DEFAULT_ORACLE_STEPS
}
fn default_max_steps() -> usize {
    DEFAULT_MAX_STEPS
}
fn default_decimation() -> usize {
    DEFAULT_DECIMATION
}
fn default_refresh() -> usize {
    1
}
fn default_true() -> bool {
    true
}

impl Default for GameSection {
    fn default() -> Self {
        Self {
            mu: default_mu(),
            d_c: default_d_c(),
            h_f: default_h_f(),
            strategy: default_strategy(),
            oracle_steps: default_oracle_steps(),
            max_steps: default_max_steps(),
            decimation: default_decimation(),
            refresh_every: default_refresh(),
            stop_when_receding: true,
        }
    }
}

impl ScenarioSection {
    pub fn preset(id: ScenarioId, e: f64) -> Self {
        let (p, s_r, r_e, pos, vel) = match id {
            ScenarioId::I => (4.2241e7, 0.1, 1.1e6, [1500.0, 500.0, 0.0], [-10000.0, 0.0, 1000.0]),
            ScenarioId::II => (1.8339e7, 1.0, 1.5e6, [1500.0, 0.0, -2500.0], [-5000.0, 0.0, 10000.0]),
        };
        Self {
            name: Some(format!("Scenario {id}, e = {e}")),
            p,
            e,
            strict_eccentricity: false,
            s_r,
            r_p: 1e6,
            r_e,
            pursuer_position: pos,
            pursuer_velocity: vel,
            evader_position: [0.0; 3],
            evader_velocity: [0.0; 3],
            f_0: 0.0,
        }
    }
}

impl RunConfig {
    pub fn preset(id: ScenarioId, e: f64, strategy: StrategyName) -> Self {
        Self {
            game: GameSection { strategy, ..GameSection::default() },
            scenario: ScenarioSection::preset(id, e),
            disturbance: None,
        }
    }

    pub fn from_toml(text: &str) -> Result<Self, Error> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string_pretty(self).expect("config types always serialize")
    }

    pub fn load(path: &Path) -> Result<Self, Error> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(path.display().to_string(), e))?;
        Self::from_toml(&text).map_err(|e| match e {
            Error::Config(msg) => Error::Config(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    pub fn strategy(&self) -> Strategy {
        self.game.strategy.to_strategy(self.game.oracle_steps)
    }

    pub fn seed(&self) -> Option<u64> {
        self.disturbance.map(|d| d.seed)
    }

    /// Builds and validates the core game configuration.
    pub fn game_config(&self) -> Result<GameConfig, Error> {
        let s = &self.scenario;
        let g = &self.game;
        let orbit = if s.strict_eccentricity {
            ReferenceOrbit::new_strict(s.p, s.e, g.mu)?
        } else {
            ReferenceOrbit::new(s.p, s.e, g.mu)?
        };
        let weights = GameWeights::new(s.s_r, s.r_p, s.r_e)?;
        let mut cfg = GameConfig::new(
            orbit,
            weights,
            RelState::new(s.pursuer_position, s.pursuer_velocity),
            RelState::new(s.evader_position, s.evader_velocity),
            self.strategy(),
        );
        cfg.f0 = s.f_0;
        cfg.h_f = g.h_f;
        cfg.capture_radius = g.d_c;
        cfg.max_steps = g.max_steps;
        cfg.decimation = g.decimation;
        cfg.refresh_every = g.refresh_every;
        cfg.stop_when_receding = g.stop_when_receding;
        cfg.disturbance = self.disturbance.map(|d| DisturbanceSpec {
            seed: d.seed,
            bound: d.bound,
            resample_each_step: d.resample_each_step,
        });
        cfg.validate()?;
        Ok(cfg)
    }
}
