use std::path::Path;

use anyhow::{bail, Context, Result};
use lozenge::DentedHexParams;
use serde::{Deserialize, Serialize};

/// JSON form of a dented hexagon. `t` defaults to the number of dents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegionSpec {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<u32>,
    #[serde(default)]
    pub u: Vec<u32>,
    #[serde(default)]
    pub v: Vec<u32>,
}

impl RegionSpec {
    pub fn from_params(p: &DentedHexParams) -> Self {
        RegionSpec { a: p.a(), b: p.b(), c: p.c(), t: Some(p.t()), u: p.u().to_vec(), v: p.v().to_vec() }
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = if path.as_os_str() == "-" {
            std::io::read_to_string(std::io::stdin()).context("reading spec from stdin")?
        } else {
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
        };
        serde_json::from_str(&text).with_context(|| format!("parsing region spec {}", path.display()))
    }

    pub fn params(&self) -> Result<DentedHexParams> {
        let t = self.t.unwrap_or((self.u.len() + self.v.len()) as u32);
        Ok(DentedHexParams::new(self.a, self.b, self.c, t, self.u.clone(), self.v.clone())?)
    }
}

/// Parses `b=2,c=2,m=2,n=2,a=3`; missing keys keep their defaults.
pub fn parse_bounds(s: &str) -> Result<lozenge::verify::Bounds> {
    let mut bounds = lozenge::verify::Bounds::default();
    for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
        let (k, v) = item.split_once('=').with_context(|| format!("expected key=value, got {item:?}"))?;
        let v: u32 = v.trim().parse().with_context(|| format!("bad value in {item:?}"))?;
        match k.trim() {
            "b" => bounds.max_b = v,
            "c" => bounds.max_c = v,
            "m" => bounds.max_m = v,
            "n" => bounds.max_n = v,
            "a" => bounds.a_max = v,
            other => bail!("unknown bound {other:?}; expected one of b, c, m, n, a"),
        }
    }
    Ok(bounds)
}

/// Parses `3`, `1..4` or `1..=4` as an inclusive range.
pub fn parse_range(s: &str) -> Result<(u32, u32)> {
    let s = s.trim();
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo.parse()?, hi.trim_start_matches('=').parse()?),
        None => {
            let x = s.parse()?;
            (x, x)
        }
    };
    if lo > hi {
        bail!("empty range {s:?}");
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_and_ranges() {
        let b = parse_bounds("b=3, a=1").unwrap();
        assert_eq!((b.max_b, b.max_c, b.a_max), (3, 2, 1));
        assert!(parse_bounds("q=1").is_err());
        assert_eq!(parse_range("2").unwrap(), (2, 2));
        assert_eq!(parse_range("1..4").unwrap(), (1, 4));
        assert_eq!(parse_range("1..=4").unwrap(), (1, 4));
        assert!(parse_range("4..1").is_err());
    }

    #[test]
    fn spec_defaults_t() {
        let s: RegionSpec = serde_json::from_str(r#"{"a":1,"b":2,"c":2,"u":[2],"v":[1]}"#).unwrap();
        assert_eq!(s.params().unwrap().t(), 2);
        assert!(serde_json::from_str::<RegionSpec>(r#"{"a":1,"b":2,"c":2,"w":[]}"#).is_err());
    }
}
