//! Optional key=value config file: one `key=value` per line, `#` comments.
//! Keys mirror the long flag names; explicit flags win over file values.

use std::collections::HashMap;
use std::path::Path;

use anyhow::{bail, Context, Result};

pub struct FileConfig {
    map: HashMap<String, String>,
}

impl FileConfig {
    pub fn empty() -> Self {
        FileConfig { map: HashMap::new() }
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read config {}", path.display()))?;
        let mut map = HashMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                bail!("config line {} is not key=value: {raw:?}", lineno + 1);
            };
            map.insert(k.trim().to_string(), v.trim().to_string());
        }
        Ok(FileConfig { map })
    }

    pub fn fill<T: std::str::FromStr>(&self, slot: &mut Option<T>, key: &str) -> Result<()>
    where
        T::Err: std::fmt::Display,
    {
        if slot.is_none() {
            if let Some(v) = self.map.get(key) {
                match v.parse() {
                    Ok(parsed) => *slot = Some(parsed),
                    Err(e) => bail!("config key {key}={v}: {e}"),
                }
            }
        }
        Ok(())
    }

    pub fn fill_string(&self, slot: &mut Option<String>, key: &str) {
        if slot.is_none() {
            if let Some(v) = self.map.get(key) {
                *slot = Some(v.clone());
            }
        }
    }
}
