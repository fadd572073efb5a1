use std::fmt::Write as _;
use std::path::Path;

use mpl_relations::{all_families, parse_families, Family, FamilySet};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub level: u32,
    pub max_weight: usize,
    pub max_depth: usize,
    pub families: FamilySet,
    pub digits: usize,
    /// worker threads; `None` uses the default pool
    pub threads: Option<usize>,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config { level: 1, max_weight: 10, max_depth: 4, families: all_families(), digits: 30, threads: None, seed: 0 }
    }
}

fn families_string(f: &FamilySet) -> String {
    f.iter().map(Family::name).collect::<Vec<_>>().join(",")
}

impl Config {
    /// Reads `key = value` lines; `#` starts a comment.
    pub fn load(path: &Path) -> Result<Config, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        let mut c = Config::default();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| CliError::Config(format!("line {}: expected key = value", i + 1)))?;
            c.set(k.trim(), v.trim()).map_err(|e| CliError::Config(format!("line {}: {e}", i + 1)))?;
        }
        c.validate()?;
        Ok(c)
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        let num = |v: &str| v.parse::<u64>().map_err(|_| format!("`{v}` is not a non-negative integer"));
        match key {
            "level" => self.level = num(value)? as u32,
            "max_weight" => self.max_weight = num(value)? as usize,
            "max_depth" => self.max_depth = num(value)? as usize,
            "digits" => self.digits = num(value)? as usize,
            "seed" => self.seed = num(value)?,
            "threads" => self.threads = Some(num(value)? as usize),
            "families" => self.families = parse_families(value).map_err(|e| e.to_string())?,
            _ => return Err(format!("unknown key `{key}`")),
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.level == 0 {
            return Err(CliError::Config("level must be positive".into()));
        }
        if self.max_weight == 0 || self.max_depth == 0 {
            return Err(CliError::Config("max_weight and max_depth must be positive".into()));
        }
        if !(5..=2000).contains(&self.digits) {
            return Err(CliError::Config(format!("digits {} outside 5..=2000", self.digits)));
        }
        if self.threads == Some(0) {
            return Err(CliError::Config("threads must be positive".into()));
        }
        Ok(())
    }

    /// The canonical `key=value` rendering, one per line in key order.
    pub fn canonical(&self) -> String {
        let mut s = String::new();
        let threads = self.threads.map_or("default".to_string(), |t| t.to_string());
        for (k, v) in [
            ("digits", self.digits.to_string()),
            ("families", families_string(&self.families)),
            ("level", self.level.to_string()),
            ("max_depth", self.max_depth.to_string()),
            ("max_weight", self.max_weight.to_string()),
            ("seed", self.seed.to_string()),
            ("threads", threads),
        ] {
            let _ = writeln!(s, "{k}={v}");
        }
        s
    }

    /// Threads do not change results, so they are left out of the hash.
    pub fn hash(&self) -> String {
        let canon: String = self.canonical().lines().filter(|l| !l.starts_with("threads=")).collect::<Vec<_>>().join("\n");
        let d = Sha256::digest(canon.as_bytes());
        d.iter().take(8).map(|b| format!("{b:02x}")).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "digits": self.digits,
            "families": families_string(&self.families),
            "level": self.level,
            "max_depth": self.max_depth,
            "max_weight": self.max_weight,
            "seed": self.seed,
        })
    }
}
