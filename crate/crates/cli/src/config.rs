//! `key = value` configuration files and flag/file/default merging.

use std::collections::HashMap;
use std::path::Path;
use std::str::FromStr;

/// Keys a config file may set. Flags with the same name take precedence.
pub const KEYS: &[&str] = &[
    "x",
    "mode",
    "rigor",
    "zeros",
    "zeros-compute",
    "zeros-accuracy",
    "c",
    "epsilon",
    "a",
    "alpha",
    "budget",
    "threads",
    "json",
];

#[derive(Debug, Default)]
pub struct FileConfig {
    values: HashMap<String, String>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        let mut values = HashMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| format!("config line {}: expected key = value", i + 1))?;
            let k = k.trim().replace('_', "-");
            if !KEYS.contains(&k.as_str()) {
                return Err(format!("config line {}: unknown key {k:?}", i + 1));
            }
            values.insert(k, v.trim().trim_matches('"').to_string());
        }
        Ok(Self { values })
    }

    /// The flag value if given, else the file value, else `None`.
    pub fn pick<T: FromStr>(&self, flag: Option<T>, key: &str) -> Result<Option<T>, String>
    where
        T::Err: std::fmt::Display,
    {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.values.get(key) {
            None => Ok(None),
            Some(v) => v
                .parse::<T>()
                .map(Some)
                .map_err(|e| format!("config value for {key} ({v:?}): {e}")),
        }
    }

    pub fn flag(&self, flag: bool, key: &str) -> Result<bool, String> {
        if flag {
            return Ok(true);
        }
        Ok(self.pick::<bool>(None, key)?.unwrap_or(false))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let f = FileConfig::parse("# comment\nx = 1000\nmode = rh\nepsilon=1e-3 # trailing\n").unwrap();
        assert_eq!(f.pick::<u64>(None, "x").unwrap(), Some(1000));
        assert_eq!(f.pick::<u64>(Some(5), "x").unwrap(), Some(5));
        assert_eq!(f.pick::<f64>(None, "epsilon").unwrap(), Some(1e-3));
        assert_eq!(f.pick::<f64>(None, "c").unwrap(), None);
        assert!(FileConfig::parse("bogus = 1").is_err());
        assert!(FileConfig::parse("x 5").is_err());
        assert!(f.pick::<u64>(None, "mode").is_err());
    }
}
