//! Text forms of exact values used on the command line.

use anyhow::{anyhow, bail, Context, Result};
use coxplane_core::{GoldenRational, Rational};

pub fn rational(s: &str) -> Result<Rational> {
    s.trim().parse::<Rational>().map_err(|e| anyhow!("invalid rational {s:?}: {e}"))
}

/// `"a,b"` meaning `a + bτ`, each part an integer or `p/q`.
pub fn golden(s: &str) -> Result<GoldenRational> {
    let parts: Vec<&str> = s.split(',').collect();
    match parts.as_slice() {
        [a] => Ok(GoldenRational::from_rational(rational(a)?)),
        [a, b] => Ok(GoldenRational::new(rational(a)?, rational(b)?)),
        _ => bail!("expected a,b for a + bτ, got {s:?}"),
    }
}

pub fn rationals(s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(rational).collect::<Result<_>>().with_context(|| format!("in list {s:?}"))
}

pub fn integers(s: &str) -> Result<Vec<i64>> {
    s.split(',').map(|p| p.trim().parse::<i64>().map_err(|e| anyhow!("invalid integer {p:?}: {e}"))).collect()
}
