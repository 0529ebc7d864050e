//! Parsing of command-line values and input files.

use std::fs;
use std::path::Path;

use biquat::fields::{CatalogName, EmField, Event, FieldSpec};
use biquat::Bq;

/// A problem with the invocation itself; exits with status 2.
#[derive(Debug)]
pub struct ConfigError(pub String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<biquat::Error> for ConfigError {
    fn from(e: biquat::Error) -> Self {
        ConfigError(format!("{}: {e}", e.kind()))
    }
}

pub type ConfigResult<T> = Result<T, ConfigError>;

/// Inline JSON, or the contents of the file it names.
fn json_text(arg: &str) -> ConfigResult<String> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(arg.to_string());
    }
    let path = arg.strip_prefix('@').unwrap_or(arg);
    fs::read_to_string(Path::new(path)).map_err(|e| ConfigError(format!("cannot read `{path}`: {e}")))
}

/// A catalog name (`coulomb`), a field-spec file, or inline field-spec JSON.
pub fn field_spec(arg: &str) -> ConfigResult<FieldSpec> {
    if let Ok(name) = CatalogName::parse(arg) {
        return Ok(name.default_spec());
    }
    let looks_like_json = arg.trim_start().starts_with('{');
    if !looks_like_json && !Path::new(arg.strip_prefix('@').unwrap_or(arg)).exists() {
        let names: Vec<&str> = CatalogName::ALL.iter().map(|n| n.as_str()).collect();
        return Err(ConfigError(format!(
            "unknown field `{arg}`: not a catalog name ({}), a file, or JSON",
            names.join(", ")
        )));
    }
    let text = json_text(arg)?;
    serde_json::from_str(&text).map_err(|e| ConfigError(format!("invalid field spec: {e}")))
}

pub fn field(arg: &str) -> ConfigResult<Box<dyn EmField>> {
    Ok(field_spec(arg)?.build()?)
}

/// `[[t, x1, x2, x3], ...]`, inline or from a file.
pub fn events(arg: &str) -> ConfigResult<Vec<Event>> {
    let text = json_text(arg)?;
    let events: Vec<Event> = serde_json::from_str(&text).map_err(|e| ConfigError(format!("invalid events: {e}")))?;
    if let Some(bad) = events.iter().find(|e| !e.is_finite()) {
        return Err(ConfigError(format!("non-finite event {bad:?}")));
    }
    Ok(events)
}

/// `{"w":[re,im],"x":[re,im],"y":[re,im],"z":[re,im]}`, inline or from a file.
pub fn biquaternion(arg: &str) -> ConfigResult<Bq> {
    let text = json_text(arg)?;
    let q: Bq = serde_json::from_str(&text).map_err(|e| ConfigError(format!("invalid biquaternion: {e}")))?;
    if !q.is_finite() {
        return Err(ConfigError("biquaternion has non-finite components".into()));
    }
    Ok(q)
}

/// Comma-separated reals, e.g. `0.3,-0.2,1`.
pub fn reals(arg: &str) -> ConfigResult<Vec<f64>> {
    arg.split(',')
        .map(|s| {
            let v: f64 = s.trim().parse().map_err(|_| ConfigError(format!("`{s}` is not a number")))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(ConfigError(format!("`{s}` is not finite")))
            }
        })
        .collect()
}

pub fn vector3(arg: &str) -> ConfigResult<[f64; 3]> {
    let v = reals(arg)?;
    v.try_into().map_err(|v: Vec<f64>| ConfigError(format!("expected 3 components, got {}", v.len())))
}

/// `e1`, `-e3`, or a comma-separated real vector (normalised).
pub fn axis(arg: &str) -> ConfigResult<Bq> {
    let (sign, name) = match arg.strip_prefix('-') {
        Some(rest) if rest.starts_with('e') => (-1.0, rest),
        _ => (1.0, arg.strip_prefix('+').unwrap_or(arg)),
    };
    let v = match name {
        "e1" => [1.0, 0.0, 0.0],
        "e2" => [0.0, 1.0, 0.0],
        "e3" => [0.0, 0.0, 1.0],
        _ => vector3(arg)?,
    };
    let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    if n == 0.0 {
        return Err(ConfigError("axis must be non-zero".into()));
    }
    Ok(Bq::real_vector(v.map(|c| sign * c / n)))
}

/// A straight segment along one coordinate, `AXIS:START:END` with AXIS in
/// `t`, `x1`, `x2`, `x3`; other coordinates are zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ray {
    pub coord: usize,
    pub start: f64,
    pub end: f64,
}

impl Ray {
    pub fn parse(arg: &str) -> ConfigResult<Self> {
        let parts: Vec<&str> = arg.split(':').collect();
        let [axis, start, end] = parts[..] else {
            return Err(ConfigError(format!("ray must be AXIS:START:END, got `{arg}`")));
        };
        let coord = match axis {
            "t" => 0,
            "x1" => 1,
            "x2" => 2,
            "x3" => 3,
            _ => return Err(ConfigError(format!("unknown ray axis `{axis}`"))),
        };
        let num = |s: &str| -> ConfigResult<f64> {
            s.parse::<f64>().ok().filter(|v| v.is_finite()).ok_or_else(|| ConfigError(format!("`{s}` is not a number")))
        };
        Ok(Self { coord, start: num(start)?, end: num(end)? })
    }

    pub fn events(&self, samples: usize) -> Vec<Event> {
        let n = samples.max(2);
        (0..samples)
            .map(|k| {
                let s = self.start + (self.end - self.start) * k as f64 / (n - 1) as f64;
                Event::default().with_coord(self.coord, s)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axes() {
        assert_eq!(axis("e3").unwrap(), Bq::e3());
        assert_eq!(axis("-e1").unwrap(), -Bq::e1());
        assert!((axis("3,0,4").unwrap() - Bq::real_vector([0.6, 0.0, 0.8])).norm() < 1e-15);
        assert!(axis("0,0,0").is_err());
        assert!(axis("e4").is_err());
    }

    #[test]
    fn rays() {
        let r = Ray::parse("x1:0.5:2").unwrap();
        let ev = r.events(4);
        assert_eq!(ev[0], Event::new(0.0, 0.5, 0.0, 0.0));
        assert_eq!(ev[3], Event::new(0.0, 2.0, 0.0, 0.0));
        assert!(Ray::parse("y:0:1").is_err());
        assert!(Ray::parse("x1:0").is_err());
    }

    #[test]
    fn fields_by_name_and_json() {
        assert!(field("coulomb").is_ok());
        assert!(field(r#"{"name":"coulomb","params":{"q":2}}"#).is_ok());
        assert!(field("nonsense").is_err());
        assert!(field(r#"{"name":"nonsense","params":{}}"#).is_err());
    }

    #[test]
    fn event_lists() {
        let ev = events("[[0,1,2,3],[0.5,-1,0,0]]").unwrap();
        assert_eq!(ev.len(), 2);
        assert_eq!(ev[0].x, [1.0, 2.0, 3.0]);
        assert!(events("[[0,1,2]]").is_err());
    }

    #[test]
    fn biquaternion_json() {
        let q = biquaternion(r#"{"w":[0,0],"x":[1,0],"y":[0,1],"z":[0,0]}"#).unwrap();
        assert_eq!(q, Bq::e1() + Bq::i() * Bq::e2());
    }
}
