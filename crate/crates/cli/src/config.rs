//! Flat `key = value` config files. Command-line flags take precedence.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Config {
    values: BTreeMap<String, String>,
}

impl Config {
    /// Parses config text; `#` starts a comment, blank lines are skipped.
    /// Keys must come from `known`.
    pub fn parse(text: &str, known: &[&str]) -> CliResult<Self> {
        let mut values = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| CliError::Config(format!("line {}: expected key = value", i + 1)))?;
            let k = k.trim().replace('_', "-");
            if !known.contains(&k.as_str()) {
                return Err(CliError::Config(format!("line {}: unknown key `{k}`", i + 1)));
            }
            if values.insert(k.clone(), v.trim().to_string()).is_some() {
                return Err(CliError::Config(format!("line {}: key `{k}` repeated", i + 1)));
            }
        }
        Ok(Config { values })
    }

    pub fn load(path: &Path, known: &[&str]) -> CliResult<Self> {
        let text =
            std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_path_buf(), source })?;
        Self::parse(&text, known)
    }

    /// The flag value if given, else the config value, else `None`.
    pub fn pick<T: FromStr>(&self, flag: Option<T>, key: &str) -> CliResult<Option<T>> {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.values.get(key) {
            Some(v) => {
                v.parse::<T>().map(Some).map_err(|_| CliError::Config(format!("`{key} = {v}` has the wrong type")))
            }
            None => Ok(None),
        }
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.values.keys().map(String::as_str)
    }
}
