use clap::{Args, ValueEnum};

use sasaki_core::exact::{parse_rational, pow2_inv};
use sasaki_core::{contact_invariants, Bundle, JoinParams, Rational, WeightVector};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

/// A comma pair such as `12,1`.
pub fn parse_pair(s: &str) -> Result<(u64, u64), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected a comma pair like 12,1, got {s:?}"))?;
    let num = |t: &str| {
        t.trim()
            .parse::<u64>()
            .map_err(|_| format!("{t:?} is not a non-negative integer"))
    };
    Ok((num(a)?, num(b)?))
}

pub fn parse_bundle(s: &str) -> Result<Bundle, String> {
    s.parse()
}

/// Selects a join either by its Kähler data `(k, m, bundle)` or directly by `(l, w)`.
#[derive(Debug, Clone, Args)]
pub struct JoinArgs {
    /// Genus of the base Riemann surface (g ≥ 1)
    #[arg(long)]
    pub g: u64,
    /// Index of the contact structure D_k
    #[arg(long)]
    pub k: Option<u64>,
    /// Kähler class index, 0 ≤ m < k
    #[arg(long)]
    pub m: Option<u64>,
    /// trivial or nontrivial
    #[arg(long, value_parser = parse_bundle)]
    pub bundle: Option<Bundle>,
    /// Join parameter l
    #[arg(long)]
    pub l: Option<u64>,
    /// Weight vector of the 3-sphere, as w1,w2
    #[arg(long, value_parser = parse_pair)]
    pub w: Option<(u64, u64)>,
}

/// The join plus the `(k, m, bundle)` it realizes.
#[derive(Debug, Clone, Copy)]
pub struct Join {
    pub params: JoinParams,
    pub k: u64,
    pub m: u64,
    pub bundle: Bundle,
}

impl JoinArgs {
    pub fn resolve(&self) -> Result<Join, CliError> {
        let km = self.k.is_some() || self.m.is_some() || self.bundle.is_some();
        let lw = self.l.is_some() || self.w.is_some();
        let params = match (km, lw) {
            (true, true) => {
                return Err(CliError::Usage(
                    "give either --k/--m/--bundle or --l/--w, not both".into(),
                ))
            }
            (false, false) => {
                return Err(CliError::Usage("a join needs --k --m --bundle or --l --w".into()))
            }
            (true, false) => {
                let (Some(k), Some(m), Some(bundle)) = (self.k, self.m, self.bundle) else {
                    return Err(CliError::Usage("--k, --m and --bundle must be given together".into()));
                };
                JoinParams::from_km(self.g, k, m, bundle)?
            }
            (false, true) => {
                let (Some(l), Some((w1, w2))) = (self.l, self.w) else {
                    return Err(CliError::Usage("--l and --w must be given together".into()));
                };
                JoinParams::new(self.g, l, w1, w2)?
            }
        };
        let inv = contact_invariants(&params);
        Ok(Join { params, k: inv.k, m: inv.m, bundle: inv.bundle_type })
    }
}

/// A Reeb ray, as a weight `v` or a slope `c = v2/v1`.
#[derive(Debug, Clone, Args)]
pub struct RayArgs {
    /// Reeb weight, as v1,v2
    #[arg(long, value_parser = parse_pair, conflicts_with = "c")]
    pub v: Option<(u64, u64)>,
    /// Ray slope c = v2/v1, as p/q
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
}

impl RayArgs {
    pub fn resolve(&self) -> Result<Option<WeightVector>, CliError> {
        if let Some((v1, v2)) = self.v {
            return Ok(Some(WeightVector::new(v1, v2)?));
        }
        match &self.c {
            Some(text) => Ok(Some(WeightVector::from_slope(&parse_rational(text)?)?)),
            None => Ok(None),
        }
    }
}

/// The isolation width from `SASAKI_ISOLATION_WIDTH`: `1/2^k`, or any positive `p/q`.
pub fn isolation_width(value: Option<&str>) -> Result<Option<Rational>, CliError> {
    let Some(text) = value else { return Ok(None) };
    let bad = || {
        CliError::Usage(format!(
            "SASAKI_ISOLATION_WIDTH={text:?}: expected 1/2^k with 1 ≤ k ≤ 4096, or a positive p/q"
        ))
    };
    let text = text.trim();
    if let Some(exp) = text.strip_prefix("1/2^") {
        let k: u32 = exp.parse().map_err(|_| bad())?;
        if !(1..=4096).contains(&k) {
            return Err(bad());
        }
        return Ok(Some(pow2_inv(k)));
    }
    let width = parse_rational(text).map_err(|_| bad())?;
    if width <= Rational::from_integer(0.into()) {
        return Err(bad());
    }
    Ok(Some(width))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs() {
        assert_eq!(parse_pair("12,1"), Ok((12, 1)));
        assert_eq!(parse_pair(" 3, 2"), Ok((3, 2)));
        assert!(parse_pair("12").is_err());
        assert!(parse_pair("a,1").is_err());
        assert!(parse_pair("-1,1").is_err());
    }

    #[test]
    fn widths() {
        assert_eq!(isolation_width(None).unwrap(), None);
        assert_eq!(isolation_width(Some("1/2^20")).unwrap(), Some(pow2_inv(20)));
        assert_eq!(
            isolation_width(Some("1/1000")).unwrap(),
            Some(Rational::new(1.into(), 1000.into()))
        );
        for bad in ["0", "-1/2", "1/2^0", "1/2^x", "half"] {
            assert!(isolation_width(Some(bad)).is_err(), "{bad}");
        }
    }

    #[test]
    fn join_selection() {
        let a = JoinArgs { g: 2, k: Some(4), m: Some(1), bundle: Some(Bundle::Trivial), l: None, w: None };
        let j = a.resolve().unwrap();
        assert_eq!((j.params.l, j.params.w1, j.params.w2), (1, 5, 3));
        let b = JoinArgs { g: 2, k: None, m: None, bundle: None, l: Some(1), w: Some((5, 3)) };
        let j = b.resolve().unwrap();
        assert_eq!((j.k, j.m, j.bundle), (4, 1, Bundle::Trivial));
        let both = JoinArgs { l: Some(1), ..a.clone() };
        assert!(matches!(both.resolve(), Err(CliError::Usage(_))));
        let partial = JoinArgs { bundle: None, ..a };
        assert!(matches!(partial.resolve(), Err(CliError::Usage(_))));
    }
}
