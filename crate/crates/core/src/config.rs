//! Run configuration: every tunable with its default, read from TOML.
//!
//! A config file is layered over a base configuration key by key, so keys it
//! leaves out keep the base value.

use serde::{Deserialize, Serialize};

use crate::cvd::CvdOptions;
use crate::dhvd::DhvdOptions;
use crate::error::{Error, Result};
use crate::lp::LpOptions;
use crate::pmfd::PmfdOptions;
use crate::separators::SeparatorOptions;

/// Size limits of the brute-force oracles.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OracleOptions {
    pub max_n: usize,
    pub max_n_pmfd: usize,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            max_n: 16,
            max_n_pmfd: 14,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    /// Fail when a safety net fires or an internal check degrades.
    pub strict: bool,
    /// Worker threads for bench suites.
    pub jobs: usize,
    pub lp: LpOptions,
    pub separator: SeparatorOptions,
    pub cvd: CvdOptions,
    pub dhvd: DhvdOptions,
    pub pmfd: PmfdOptions,
    pub oracle: OracleOptions,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            strict: false,
            jobs: 1,
            lp: LpOptions::default(),
            separator: SeparatorOptions::default(),
            cvd: CvdOptions::default(),
            dhvd: DhvdOptions::default(),
            pmfd: PmfdOptions::default(),
            oracle: OracleOptions::default(),
        }
    }
}

fn merge(base: &mut toml::Value, over: toml::Value) {
    match (base, over) {
        (toml::Value::Table(b), toml::Value::Table(o)) => {
            for (k, v) in o {
                match b.get_mut(&k) {
                    Some(slot) => merge(slot, v),
                    None => {
                        b.insert(k, v);
                    }
                }
            }
        }
        (slot, v) => *slot = v,
    }
}

impl Config {
    pub fn validate(&self) -> Result<()> {
        if self.jobs == 0 {
            return Err(Error::Input("jobs must be at least 1".into()));
        }
        if self.lp.rows_per_round == 0 {
            return Err(Error::Input("lp.rows_per_round must be positive".into()));
        }
        if self.separator.flow_samples == 0 {
            return Err(Error::Input("separator.flow_samples must be positive".into()));
        }
        self.cvd.validate()?;
        self.dhvd.validate()?;
        self.pmfd.validate()?;
        if self.oracle.max_n > 24 || self.oracle.max_n_pmfd > 24 {
            return Err(Error::Input("oracle limits above 24 vertices are not supported".into()));
        }
        Ok(())
    }

    pub fn from_toml_str(text: &str) -> Result<Config> {
        Config::default().layered(text)
    }

    /// `self` with the keys set in `text` replaced.
    pub fn layered(&self, text: &str) -> Result<Config> {
        let over: toml::Value =
            toml::from_str(text).map_err(|e| Error::Input(format!("config: {e}")))?;
        let mut base = toml::Value::try_from(self).map_err(|e| Error::Internal(e.to_string()))?;
        merge(&mut base, over);
        let cfg: Config = base
            .try_into()
            .map_err(|e: toml::de::Error| Error::Input(format!("config: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn to_toml_string(&self) -> String {
        toml::to_string(self).expect("plain data")
    }
}

/// Description of every key, in file order.
const DOCS: &[(&str, &str)] = &[
    ("strict", "Exit with status 3 when a repair fires, a check fails or a bound is missed."),
    ("jobs", "Worker threads for bench suites. Output does not depend on it."),
    ("lp.row_budget", "Cutting-plane row limit; 0 means max(10n, 256)."),
    ("lp.rows_per_round", "Violated rows added per separation round."),
    ("separator.exact_threshold", "Graphs up to this size get an exhaustive balanced separator."),
    ("separator.flow_samples", "Vertex pairs tried with min-cut in the separator heuristic."),
    ("separator.swap_iters", "Local improvement moves per separator candidate."),
    ("separator.seed", "Seed for separator sampling."),
    ("cvd.short_hole_len", "Holes up to this length are hit up front (at least 4)."),
    ("cvd.c", "Low-value threshold is 1/(c log n)."),
    ("cvd.n_floor", "Floor on n inside logarithms."),
    ("cvd.exact_below", "Clique+chordal instances below this size are solved exactly."),
    ("cvd.exact_budget", "Node budget of the exact search."),
    ("cvd.d", "Certificate constant D in D log^2 n."),
    ("cvd.q", "Recursion depth limit is q log n."),
    ("dhvd.obstruction_size", "Obstructions up to this size are hit up front (at least 6)."),
    ("dhvd.c", "Low-value threshold is 1/(c log n); must give at most 1/12."),
    ("dhvd.n_floor", "Floor on n inside logarithms."),
    ("dhvd.exact_below", "Biclique+DH instances below this size are solved exactly."),
    ("dhvd.exact_budget", "Node budget of the exact search."),
    ("dhvd.d", "Certificate constant D' in D' log^3 n."),
    ("dhvd.q", "Recursion depth limit is q log n."),
    ("pmfd.candidate_budget", "Sets of at most c+1 vertices tried for the special case."),
    ("pmfd.separator_candidates", "Sets tried by the bounded-set separator."),
    ("pmfd.exact_budget", "Node budget of the exact special-case search."),
    ("pmfd.d", "Certificate constant d in d log^2 n."),
    ("pmfd.n_floor", "Floor on n inside logarithms."),
    ("oracle.max_n", "Largest instance given to the brute-force oracle."),
    ("oracle.max_n_pmfd", "Largest minor-deletion instance given to the brute-force oracle."),
];

fn flatten(prefix: &str, v: &toml::Value, out: &mut Vec<(String, String)>) {
    match v {
        toml::Value::Table(t) => {
            for (k, v) in t {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, v, out);
            }
        }
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

/// Keys of the default configuration with their values.
pub fn default_keys() -> Vec<(String, String)> {
    let v = toml::Value::try_from(Config::default()).expect("plain data");
    let mut out = Vec::new();
    flatten("", &v, &mut out);
    out
}

/// Markdown reference of all keys and defaults.
pub fn config_doc() -> String {
    let defaults = default_keys();
    let mut s = String::from(
        "# Configuration\n\nAll keys are optional. Precedence: config file, then command-line flags, then defaults.\n\n| key | default | meaning |\n|---|---|---|\n",
    );
    for (key, doc) in DOCS {
        let val = defaults
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
            .unwrap_or("");
        s.push_str(&format!("| `{key}` | `{val}` | {doc} |\n"));
    }
    s.push_str("\nDefault file:\n\n```toml\n");
    s.push_str(&Config::default().to_toml_string());
    s.push_str("```\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_round_trip() {
        let c = Config::default();
        c.validate().unwrap();
        assert_eq!(Config::from_toml_str(&c.to_toml_string()).unwrap(), c);
        assert_eq!(Config::from_toml_str("").unwrap(), c);
    }

    #[test]
    fn layering_and_rejection() {
        let base = Config {
            strict: true,
            ..Default::default()
        };
        let c = base.layered("[cvd]\nshort_hole_len = 10\n").unwrap();
        assert!(c.strict);
        assert_eq!(c.cvd.short_hole_len, 10);
        assert_eq!(c.cvd.d, 48);
        assert!(Config::from_toml_str("[cvd]\nshort_hole_len = 3\n").is_err());
        assert!(Config::from_toml_str("[dhvd]\nobstruction_size = 5\n").is_err());
        assert!(Config::from_toml_str("bogus = 1\n").is_err());
        assert!(Config::from_toml_str("[cvd]\nnope = 1\n").is_err());
    }

    #[test]
    fn every_key_documented() {
        let keys: Vec<String> = default_keys().into_iter().map(|(k, _)| k).collect();
        let docs: Vec<&str> = DOCS.iter().map(|(k, _)| *k).collect();
        for k in &keys {
            assert!(docs.contains(&k.as_str()), "undocumented key {k}");
        }
        assert_eq!(keys.len(), docs.len());
        assert!(config_doc().contains("`cvd.short_hole_len` | `12`"));
    }
}
