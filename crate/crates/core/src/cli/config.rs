use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bilayer::{k_to_kappa, KappaBranch};
use crate::error::{Error, Result};
use crate::numerics::Grid;
use crate::potentials::{Family, PotentialModel};
use crate::susy::gauge::eta_constant;
use crate::susy::{SusyTransform, TransformKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum TransformName {
    #[default]
    Consecutive,
    Confluent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

/// "min,max,N" triple used for both the x grid and k sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Range3 {
    pub min: f64,
    pub max: f64,
    pub n: usize,
}

impl FromStr for Range3 {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(format!("expected \"min,max,N\", got {s:?}"));
        }
        let min = parts[0].parse::<f64>().map_err(|e| format!("bad min {:?}: {e}", parts[0]))?;
        let max = parts[1].parse::<f64>().map_err(|e| format!("bad max {:?}: {e}", parts[1]))?;
        let n = parts[2].parse::<usize>().map_err(|e| format!("bad N {:?}: {e}", parts[2]))?;
        Ok(Self { min, max, n })
    }
}

impl fmt::Display for Range3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?},{:?},{}", self.min, self.max, self.n)
    }
}

/// Everything a run needs. Missing model parameters take per-family defaults
/// (ω = 1, κ = 1; D = 4, α = 1, κ = −7; D = 8, α = 1, κ = 1).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields, default)]
pub struct RunConfig {
    pub family: Option<Family>,
    pub omega: Option<f64>,
    #[serde(rename = "D")]
    pub d: Option<f64>,
    pub alpha: Option<f64>,
    pub kappa: Option<f64>,
    pub k: Option<f64>,
    pub transform: Option<TransformName>,
    pub j: Option<usize>,
    pub w0: Option<f64>,
    pub n: Option<usize>,
    pub nmax: Option<usize>,
    pub grid: Option<Range3>,
    pub ksweep: Option<Range3>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub tol: Option<f64>,
}

impl RunConfig {
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("cannot read config {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| Error::InvalidArgument(format!("config {}: {e}", path.display())))
    }

    /// Field-wise override by `flags`. k and κ form one setting: if the flags name either,
    /// both file values are replaced.
    pub fn overridden_by(mut self, flags: &RunConfig) -> Self {
        macro_rules! take {
            ($($f:ident),*) => { $( if flags.$f.is_some() { self.$f = flags.$f.clone(); } )* };
        }
        take!(family, omega, d, alpha, transform, j, w0, n, nmax, grid, ksweep, format, out, tol);
        if flags.k.is_some() || flags.kappa.is_some() {
            self.k = flags.k;
            self.kappa = flags.kappa;
        }
        self
    }

    /// Fills every defaulted field so the echo is complete.
    pub fn resolve(&self) -> Result<Resolved> {
        let family = self.family.unwrap_or(Family::ShiftedHo);
        let mut cfg = self.clone();
        cfg.family = Some(family);
        let (omega, d, alpha, kappa0) = match family {
            Family::ShiftedHo => (cfg.omega.unwrap_or(1.0), 0.0, 0.0, 1.0),
            Family::TrigRm => (0.0, cfg.d.unwrap_or(4.0), cfg.alpha.unwrap_or(1.0), -7.0),
            Family::HypRm => (0.0, cfg.d.unwrap_or(8.0), cfg.alpha.unwrap_or(1.0), 1.0),
        };
        match family {
            Family::ShiftedHo => {
                if cfg.d.is_some() || cfg.alpha.is_some() {
                    return Err(Error::InvalidArgument("D and alpha do not apply to shifted-ho".into()));
                }
                cfg.omega = Some(omega);
            }
            _ => {
                if cfg.omega.is_some() {
                    return Err(Error::InvalidArgument(format!("omega does not apply to {}", family.name())));
                }
                cfg.d = Some(d);
                cfg.alpha = Some(alpha);
            }
        }
        let transform = cfg.transform.unwrap_or_default();
        cfg.transform = Some(transform);
        let j = cfg.j.unwrap_or(match transform {
            TransformName::Consecutive => 1,
            TransformName::Confluent => 0,
        });
        cfg.j = Some(j);
        let kind = match transform {
            TransformName::Consecutive => {
                if cfg.w0.is_some() {
                    return Err(Error::InvalidArgument("w0 only applies to the confluent transform".into()));
                }
                TransformKind::Consecutive { j }
            }
            TransformName::Confluent => {
                let w0 = cfg.w0.unwrap_or(-1.0);
                cfg.w0 = Some(w0);
                TransformKind::Confluent { j, w0 }
            }
        };
        cfg.nmax = Some(cfg.nmax.unwrap_or(6));
        cfg.format = Some(cfg.format.unwrap_or_default());
        if let Some(t) = cfg.tol {
            if !(t > 0.0 && t.is_finite()) {
                return Err(Error::InvalidArgument(format!("tol must be positive, got {t}")));
            }
        }

        // κ ↔ k: exactly one of them when related; κ (default) plus a free k otherwise.
        let probe = PotentialModel::new(family, omega, d, alpha, self.kappa.unwrap_or(kappa0))?;
        SusyTransform::new(probe, kind)?;
        let related = !matches!(eta_constant(&probe, kind), Err(Error::Unrelated));
        let mut branches = Vec::new();
        let kappa = match (related, self.kappa, self.k) {
            (true, Some(_), Some(_)) => {
                return Err(Error::InvalidArgument("give exactly one of k and kappa: they are linked for this transform".into()))
            }
            (true, None, Some(k)) => {
                branches = k_to_kappa(&probe, kind, k)?;
                pick_branch(&branches).kappa
            }
            (_, kappa, _) => kappa.unwrap_or(kappa0),
        };
        let model = PotentialModel::new(family, omega, d, alpha, kappa)?;
        let transform_obj = SusyTransform::new(model, kind)?;
        let k = if related { 0.5 * eta_constant(&model, kind)? } else { self.k.unwrap_or(0.0) };
        cfg.kappa = Some(kappa);
        cfg.k = Some(k);
        let grid = match cfg.grid {
            Some(r) => Grid::new(r.min, r.max, r.n)?,
            None => model.default_grid(),
        };
        let (lo, hi) = model.domain();
        if !(grid.x_min() > lo && grid.x_max() < hi) {
            return Err(Error::InvalidArgument(format!(
                "grid [{}, {}] leaves the open domain ({lo}, {hi}) of {}",
                grid.x_min(),
                grid.x_max(),
                family.name()
            )));
        }
        cfg.grid = Some(Range3 { min: grid.x_min(), max: grid.x_max(), n: grid.len() });
        Ok(Resolved { config: cfg, transform: transform_obj, grid, related, branches })
    }
}

/// Prefers physical branches, then the smallest |κ|.
fn pick_branch(b: &[KappaBranch]) -> KappaBranch {
    *b.iter().min_by(|x, y| (!x.physical, x.kappa.abs()).partial_cmp(&(!y.physical, y.kappa.abs())).unwrap()).expect("k_to_kappa returns at least one branch")
}

/// A validated configuration with its model objects.
#[derive(Debug, Clone)]
pub struct Resolved {
    /// Fully populated echo of the run.
    pub config: RunConfig,
    pub transform: SusyTransform,
    pub grid: Grid,
    /// Whether κ fixes k for this transform.
    pub related: bool,
    /// κ branches when the run was specified by k.
    pub branches: Vec<KappaBranch>,
}

impl Resolved {
    pub fn k(&self) -> f64 {
        self.config.k.unwrap_or(0.0)
    }
    pub fn format(&self) -> Format {
        self.config.format.unwrap_or_default()
    }
}
