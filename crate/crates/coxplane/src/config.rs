//! Run configuration read from a TOML file.
//!
//! ```toml
//! [svg]
//! size = 800            # width and height in pixels
//! margin = 0.05         # fraction of the data extent added on each side
//! point_radius = 0.006  # fraction of the larger data extent
//! fill = "#1b1b1b"
//! stroke = "none"
//! stroke_width = 0.0
//! background = "#ffffff"
//!
//! [limits]
//! max_box = 1073741824  # cap on integer points scanned by `strip`
//! ```

use std::path::Path;

use anyhow::{Context, Result};
use coxplane_core::quasilattice::DEFAULT_MAX_BOX;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SvgStyle {
    pub size: u32,
    pub margin: f64,
    pub point_radius: f64,
    pub fill: String,
    pub stroke: String,
    pub stroke_width: f64,
    pub background: String,
}

impl Default for SvgStyle {
    fn default() -> Self {
        SvgStyle {
            size: 800,
            margin: 0.05,
            point_radius: 0.006,
            fill: "#1b1b1b".into(),
            stroke: "none".into(),
            stroke_width: 0.0,
            background: "#ffffff".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Limits {
    pub max_box: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_box: DEFAULT_MAX_BOX as u64 }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub svg: SvgStyle,
    pub limits: Limits,
}

impl Config {
    pub fn parse(text: &str) -> Result<Config> {
        Ok(toml::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Config> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
        Config::parse(&text).with_context(|| format!("parsing config {}", path.display()))
    }
}
