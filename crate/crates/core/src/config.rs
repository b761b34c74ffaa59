//! Structured configuration: root-system data, expected censuses, thresholds, recipes and the
//! quote anchors every expected value is tied to. The default file is embedded at build time.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::compalg::Flavor;
use crate::exactnum::{parse_rational, AffineForm, ExactError, Rational};
use crate::rootsys::{Multiplicity, Parabolic, RootError, RootSystem, Vector, WeylWord};

pub const DEFAULT_CONFIG: &str = include_str!("../../../config/default.toml");
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed config: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("unsupported schema version {0}")]
    Schema(u32),
    #[error("unknown {kind} {id:?}")]
    Unknown { kind: &'static str, id: String },
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Root(#[from] RootError),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Config {
    pub schema_version: u32,
    #[serde(default)]
    pub system: Vec<SystemCfg>,
    #[serde(default)]
    pub absolute: Vec<AbsoluteCfg>,
    #[serde(default)]
    pub coset: Vec<CosetCfg>,
    #[serde(default)]
    pub trace: Vec<TraceCfg>,
    #[serde(default)]
    pub pairing: Vec<PairingCfg>,
    #[serde(default)]
    pub cfunction: Vec<CFunctionCfg>,
    #[serde(default)]
    pub gk: Vec<GkCfg>,
    #[serde(default)]
    pub modulus: Vec<ModulusCfg>,
    #[serde(default)]
    pub case: Vec<CaseCfg>,
    #[serde(default)]
    pub threshold: Vec<ThresholdCfg>,
    #[serde(default)]
    pub arch: Vec<ArchCfg>,
    #[serde(default)]
    pub arch_claim: Vec<ArchClaimCfg>,
    #[serde(default)]
    pub arch_gamma: Vec<ArchGammaCfg>,
    #[serde(default)]
    pub algebra: AlgebraCfg,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LengthEntry {
    pub lengthsq: String,
    pub value: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RuleCfg {
    pub lengthsq: String,
    pub kind: String,
    pub scale: String,
    pub shift: String,
}

/// A rational root system together with its inducing data.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SystemCfg {
    pub id: String,
    #[serde(default)]
    pub aliases: Vec<String>,
    pub description: String,
    pub simple: Vec<Vec<String>>,
    /// Empty means every root has multiplicity one.
    #[serde(default)]
    pub multiplicity: Vec<LengthEntry>,
    /// Factor applied to coroot pairings when displaying a step; default 1.
    #[serde(default)]
    pub display_scale: Vec<LengthEntry>,
    pub nu: Vec<String>,
    /// Coefficient of `nu` in `lambda_s`; default `s`.
    #[serde(default)]
    pub nu_coeff: Option<String>,
    pub parabolics: BTreeMap<String, Vec<usize>>,
    #[serde(default)]
    pub rules: Vec<RuleCfg>,
    pub quote: String,
}

/// Absolute root system given by Cartan type, with a Tits index for lifting rational words.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AbsoluteCfg {
    pub id: String,
    /// `D<n>`, `E6`, `E7` or `E8`.
    pub cartan_type: String,
    /// Weight `w` in `lambda = coeff * w - rho`.
    pub weight: Vec<String>,
    pub coeff: String,
    /// Simple roots spanning the parabolic whose longest coset representative is used.
    pub parabolic: Vec<usize>,
    #[serde(default)]
    pub kernel: Vec<usize>,
    /// Absolute node lifting rational node `i + 1`.
    #[serde(default)]
    pub nodes: Vec<usize>,
}

/// A Weyl element given either as a word or by the images of the coordinate vectors.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementSpec {
    Word(Vec<usize>),
    Images { images: Vec<Vec<String>> },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CosetCfg {
    pub system: String,
    pub left: String,
    pub right: String,
    pub elements: Vec<ElementSpec>,
    /// Associated simple roots per word, where printed.
    #[serde(default)]
    pub assoc: Vec<Vec<usize>>,
    pub quote: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TraceCfg {
    pub system: String,
    pub word: Vec<usize>,
    /// Display-scaled step pairings in application order.
    pub pairings: Vec<String>,
    #[serde(default)]
    pub result: Vec<String>,
    /// `w(lambda_s) + rho` after the full word.
    #[serde(default)]
    pub shifted: Vec<String>,
    pub quote: String,
}

/// `<w(lambda_s) + rho, scale * beta^vee>`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairingCfg {
    pub system: String,
    pub word: Vec<usize>,
    pub root: usize,
    pub scale: String,
    pub expected: String,
    /// Pair `w(lambda)` itself instead of `w(lambda) + rho`.
    #[serde(default)]
    pub unshifted: bool,
    pub quote: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CFunctionCfg {
    pub id: String,
    pub system: String,
    pub word: Vec<usize>,
    /// Zeta-product grammar; compared after theta expansion.
    #[serde(default)]
    pub expected: Option<String>,
    /// Least numerator zeta argument after theta expansion, the quantity that decides convergence.
    #[serde(default)]
    pub min_numerator: Option<String>,
    /// Archimedean factors quoted alongside, multiplied in for order checks.
    #[serde(default)]
    pub arch: Option<String>,
    #[serde(default)]
    pub s0: Option<String>,
    #[serde(default)]
    pub order: Option<i64>,
    /// `regular` when only regularity is claimed.
    #[serde(default)]
    pub claim: Option<String>,
    pub quote: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GkCfg {
    pub id: String,
    pub absolute: String,
    /// Rational word to lift; absent means the longest representative of the absolute parabolic.
    #[serde(default)]
    pub word: Option<Vec<usize>>,
    pub expected: String,
    pub quote: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModulusCfg {
    pub system: String,
    pub parabolic: String,
    pub expected: String,
    pub quote: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RowCfg {
    pub element: ElementSpec,
    pub expected: String,
    pub quote: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CaseCfg {
    pub id: String,
    pub system: String,
    /// Parabolic the series is induced from.
    pub source: String,
    /// Parabolic whose constant term is taken.
    pub target: String,
    pub s0: String,
    /// `value`: evaluation at a convergent point; `residue`: contribution to a residue.
    pub mode: String,
    pub quote: String,
    pub rows: Vec<RowCfg>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ThresholdCfg {
    pub case: String,
    pub root: usize,
    /// Restrict to rows whose associated simple roots are exactly this set.
    #[serde(default)]
    pub delta: Option<Vec<usize>>,
    pub scale: String,
    pub value: String,
    /// `printed` or `derived`.
    pub source: String,
    pub quote: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArchCfg {
    pub system: String,
    pub word: Vec<usize>,
    pub name: String,
    /// Tokens `A1`, `A1^-1`, `d(..)^k`, `e3` and references `v[..]` to earlier entries.
    pub recipe: String,
    pub s0: String,
    pub value: String,
    #[serde(default)]
    pub derivative: Option<String>,
    /// Vector entering the first `A1^-1` factor at `s0`, and its image.
    #[serde(default)]
    pub witness_in: Option<Vec<String>>,
    #[serde(default)]
    pub witness_out: Option<Vec<String>>,
    pub quote: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArchClaimCfg {
    pub system: String,
    pub word: Vec<usize>,
    /// Claimed vanishing order at the evaluation point.
    pub order_at_least: i64,
    pub quote: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArchGammaCfg {
    pub case: String,
    pub word: Vec<usize>,
    pub product: String,
    pub quote: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EtaleCfg {
    pub kind: String,
    #[serde(default)]
    pub d: Option<i64>,
    #[serde(default)]
    pub a: Option<i64>,
    #[serde(default)]
    pub b: Option<i64>,
    #[serde(default)]
    pub min_poly: Option<[i64; 3]>,
    #[serde(default)]
    pub matrix: Option<[[i64; 3]; 3]>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(default)]
pub struct AlgebraCfg {
    pub definite_doubling: [i64; 3],
    pub split_doubling: [i64; 3],
    pub count: usize,
    pub height: i64,
    pub etale: Vec<EtaleCfg>,
    pub primes: Vec<u64>,
    pub quotes: BTreeMap<String, String>,
}

impl Default for AlgebraCfg {
    fn default() -> Self {
        AlgebraCfg {
            definite_doubling: Flavor::Definite.doubling(),
            split_doubling: Flavor::Split.doubling(),
            count: 1000,
            height: 3,
            etale: Vec::new(),
            primes: vec![7, 11],
            quotes: BTreeMap::new(),
        }
    }
}

fn rats(v: &[String]) -> Result<Vector, ConfigError> {
    v.iter().map(|x| parse_rational(x).map_err(ConfigError::from)).collect()
}

pub fn rat_of(x: &str) -> Result<Rational, ConfigError> {
    Ok(parse_rational(x)?)
}

pub fn affine_of(x: &str) -> Result<AffineForm, ConfigError> {
    Ok(AffineForm::parse(x)?)
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let cfg: Config = toml::from_str(text)?;
        if cfg.schema_version != SCHEMA_VERSION {
            return Err(ConfigError::Schema(cfg.schema_version));
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| ConfigError::Io { path: path.display().to_string(), source })?;
        Self::parse(&text)
    }

    pub fn builtin() -> Self {
        Self::parse(DEFAULT_CONFIG).expect("embedded default config is valid")
    }

    /// Lookup by id or alias.
    pub fn system(&self, id: &str) -> Result<&SystemCfg, ConfigError> {
        self.system
            .iter()
            .find(|s| s.id == id || s.aliases.iter().any(|a| a == id))
            .ok_or(ConfigError::Unknown { kind: "system", id: id.into() })
    }

    pub fn absolute(&self, id: &str) -> Result<&AbsoluteCfg, ConfigError> {
        self.absolute.iter().find(|s| s.id == id).ok_or(ConfigError::Unknown { kind: "absolute system", id: id.into() })
    }

    pub fn case(&self, id: &str) -> Result<&CaseCfg, ConfigError> {
        self.case.iter().find(|c| c.id == id).ok_or(ConfigError::Unknown { kind: "case", id: id.into() })
    }
}

impl SystemCfg {
    pub fn root_system(&self) -> Result<RootSystem, ConfigError> {
        let simple = self.simple.iter().map(|v| rats(v)).collect::<Result<Vec<_>, _>>()?;
        let table = self
            .multiplicity
            .iter()
            .map(|e| Ok((rat_of(&e.lengthsq)?, e.value.parse::<u32>().map_err(|_| ExactError::Parse { input: e.value.clone(), reason: "multiplicity".into() })?)))
            .collect::<Result<Vec<_>, ConfigError>>()?;
        Ok(RootSystem::generate(&self.id, simple, Multiplicity { table })?)
    }

    pub fn nu(&self) -> Result<Vector, ConfigError> {
        rats(&self.nu)
    }

    pub fn nu_coeff(&self) -> Result<AffineForm, ConfigError> {
        match &self.nu_coeff {
            Some(c) => affine_of(c),
            None => Ok(AffineForm::s()),
        }
    }

    /// Named parabolic; `B` is the minimal one and `G` the whole group. `P<j>` aliases `M<j>`.
    pub fn parabolic(&self, label: &str, rank: usize) -> Result<Parabolic, ConfigError> {
        let label = self.canonical_label(label);
        match label.as_str() {
            "B" => Ok(Parabolic::minimal(rank)),
            "G" | "full" => Ok(Parabolic::full()),
            _ => self
                .parabolics
                .get(&label)
                .map(|r| Parabolic::from_radical(r.iter().copied()))
                .ok_or(ConfigError::Unknown { kind: "parabolic", id: format!("{}:{label}", self.id) }),
        }
    }

    pub fn canonical_label(&self, label: &str) -> String {
        match label {
            "full" => "G".into(),
            l if !self.parabolics.contains_key(l) && l.starts_with('P') && self.parabolics.contains_key(&format!("M{}", &l[1..])) => {
                format!("M{}", &l[1..])
            }
            l => l.into(),
        }
    }

    pub fn display_scale(&self, lengthsq: &Rational) -> Result<Rational, ConfigError> {
        for e in &self.display_scale {
            if rat_of(&e.lengthsq)? == *lengthsq {
                return rat_of(&e.value);
            }
        }
        Ok(crate::exactnum::int(1))
    }

    pub fn rules(&self) -> Result<Vec<crate::eiscalc::StepRule>, ConfigError> {
        use crate::eiscalc::{Etale, FactorKind, StepRule};
        self.rules
            .iter()
            .map(|r| {
                let kind = match r.kind.as_str() {
                    "zeta" => FactorKind::Zeta,
                    "zetaTheta" => FactorKind::ZetaTheta,
                    "zetaE_split" => FactorKind::ZetaE(Etale::Split),
                    "zetaE_qxf" => FactorKind::ZetaE(Etale::QxF),
                    "zetaE_field" => FactorKind::ZetaE(Etale::Field),
                    "zetaF" => FactorKind::ZetaF,
                    other => return Err(ConfigError::Unknown { kind: "factor kind", id: other.into() }),
                };
                Ok(StepRule { lengthsq: rat_of(&r.lengthsq)?, kind, scale: rat_of(&r.scale)?, shift: rat_of(&r.shift)? })
            })
            .collect()
    }
}

pub fn word(w: &[usize]) -> WeylWord {
    WeylWord(w.to_vec())
}
