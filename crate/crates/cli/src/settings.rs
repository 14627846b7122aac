//! Parameter resolution: command-line flag, then configuration file, then
//! built-in default. Every resolved value is recorded for the output header.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use cliquefactor::rational::{format_ratio, parse_ratio, Rational};

use crate::error::{CliError, CliResult};

#[derive(Debug, Default)]
pub struct Settings {
    file: BTreeMap<String, String>,
    resolved: BTreeMap<String, String>,
}

impl Settings {
    /// Reads a flat TOML table; nested tables are rejected.
    pub fn load(path: Option<&Path>) -> CliResult<Self> {
        let Some(path) = path else { return Ok(Settings::default()) };
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        Settings::from_toml(&text)
    }

    pub fn from_toml(text: &str) -> CliResult<Self> {
        let table: toml::Table = text.parse().map_err(|e| CliError::Input(format!("config: {e}")))?;
        let mut file = BTreeMap::new();
        for (key, value) in table {
            let v = match value {
                toml::Value::String(s) => s,
                toml::Value::Integer(i) => i.to_string(),
                toml::Value::Float(f) => f.to_string(),
                toml::Value::Boolean(b) => b.to_string(),
                toml::Value::Array(items) => items
                    .iter()
                    .map(|i| match i {
                        toml::Value::String(s) => s.clone(),
                        other => other.to_string(),
                    })
                    .collect::<Vec<_>>()
                    .join(","),
                _ => return Err(CliError::Input(format!("config key '{key}' must be a plain value"))),
            };
            file.insert(key.replace('_', "-"), v);
        }
        Ok(Settings { file, resolved: BTreeMap::new() })
    }

    pub fn get<T: FromStr + fmt::Display>(&mut self, key: &str, flag: Option<T>, default: T) -> CliResult<T>
    where
        T::Err: fmt::Display,
    {
        Ok(self.opt(key, flag)?.unwrap_or_else(|| {
            self.resolved.insert(key.to_string(), default.to_string());
            default
        }))
    }

    pub fn opt<T: FromStr + fmt::Display>(&mut self, key: &str, flag: Option<T>) -> CliResult<Option<T>>
    where
        T::Err: fmt::Display,
    {
        let value = match flag {
            Some(v) => Some(v),
            None => match self.file.get(key) {
                Some(raw) => Some(raw.parse::<T>().map_err(|e| CliError::Input(format!("config key '{key}': {e}")))?),
                None => None,
            },
        };
        if let Some(v) = &value {
            self.resolved.insert(key.to_string(), v.to_string());
        }
        Ok(value)
    }

    pub fn require<T: FromStr + fmt::Display>(&mut self, key: &str, flag: Option<T>) -> CliResult<T>
    where
        T::Err: fmt::Display,
    {
        self.opt(key, flag)?.ok_or_else(|| CliError::Input(format!("missing --{key} (flag or config key)")))
    }

    pub fn resolved(&self) -> &BTreeMap<String, String> {
        &self.resolved
    }
}

/// Exact rational flag value: `p/q`, an integer or a finite decimal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ratio(pub Rational);

impl FromStr for Ratio {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        parse_ratio(s).map(Ratio).ok_or_else(|| format!("'{s}' is not a rational number"))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_ratio(&self.0))
    }
}

/// Comma-separated list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct List<T>(pub Vec<T>);

impl<T: FromStr> FromStr for List<T>
where
    T::Err: fmt::Display,
{
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        s.split(',')
            .map(str::trim)
            .filter(|x| !x.is_empty())
            .map(|x| x.parse::<T>().map_err(|e| format!("'{x}': {e}")))
            .collect::<Result<Vec<_>, _>>()
            .map(List)
    }
}

impl<T: fmt::Display> fmt::Display for List<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_beat_file_beat_defaults() {
        let mut s = Settings::from_toml("r = 5\np = \"0.9\"\nn = [12, 16]\n").unwrap();
        assert_eq!(s.get("r", Some(3usize), 4).unwrap(), 3);
        assert_eq!(s.get("r", None::<usize>, 4).unwrap(), 5);
        assert_eq!(s.get("seed", None::<u64>, 7).unwrap(), 7);
        assert_eq!(s.require::<Ratio>("p", None).unwrap().0, Rational::new(9, 10));
        assert_eq!(s.require::<List<usize>>("n", None).unwrap().0, vec![12, 16]);
        assert!(s.require::<usize>("missing", None).is_err());
        assert_eq!(s.resolved().get("p").map(String::as_str), Some("9/10"));
    }

    #[test]
    fn nested_tables_are_rejected() {
        assert!(Settings::from_toml("[section]\nx = 1\n").is_err());
    }
}
