//! Defaults for every bound, precision, and grid, loadable from one TOML
//! file and overridable by flags.
//!
//! Precedence, lowest to highest: built-in defaults, config file,
//! MAJORDER_MAX_PRECISION (precision cap only), command-line flags.

use std::path::Path;

use serde::Deserialize;

use crate::UsageError;

pub const ENV_MAX_PRECISION: &str = "MAJORDER_MAX_PRECISION";

/// Mirrors majorder.toml field for field; every field is optional there.
#[derive(Debug, Clone, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    /// Worker threads for verification sweeps.
    pub threads: usize,
    /// First precision tried when intervals escalate.
    pub start_precision_bits: u32,
    /// Escalation cap.
    pub max_precision_bits: u32,
    /// Default bound for `solve` on sequence-shaped equations and for
    /// `enumerate`.
    pub solve_max_sum: u64,
    /// Default grid bound for `solve` on rectangular equations.
    pub solve_grid_max: u64,
    /// Pair-sweep bound for the poset-axioms suite.
    pub axioms_max_sum: u64,
    /// Pair-sweep bound for the product-inequality suite.
    pub product_sweep_max_sum: u64,
    /// Pair-sweep bound for the sum-inequality suite.
    pub sum_sweep_max_sum: u64,
    /// Precision cap for the sum-inequality pair sweep; the suite asserts
    /// every distinct pair separates within this budget.
    pub sum_sweep_cap_bits: u32,
    /// Certificate range for the difference profiles.
    pub diff_x_max: u64,
    /// Index bound for the Fibonacci inequality sweep.
    pub fib_n_max: u64,
    /// Uniqueness search defaults.
    pub uniqueness_max_index: u64,
    pub uniqueness_max_tuple_len: usize,
    /// Named evaluation points for the Gamma-bounds suite; decimal,
    /// fraction, or the letter e.
    pub gamma_grid: Vec<String>,
    /// Points where the logarithmic sandwich bounds are checked.
    pub gamma_sandwich_points: Vec<String>,
    /// Count and seed for the random rational sample in (1, 50].
    pub gamma_random_samples: u32,
    pub gamma_random_seed: u64,
    /// Working precision for the `gamma` evaluation command.
    pub gamma_eval_precision_bits: u32,
}

impl Default for Config {
    fn default() -> Config {
        Config {
            threads: 1,
            start_precision_bits: 128,
            max_precision_bits: majorder_core::DEFAULT_MAX_PRECISION,
            solve_max_sum: 10,
            solve_grid_max: 6,
            axioms_max_sum: 9,
            product_sweep_max_sum: 12,
            sum_sweep_max_sum: 8,
            sum_sweep_cap_bits: 1024,
            diff_x_max: 30,
            fib_n_max: 200,
            uniqueness_max_index: 10,
            uniqueness_max_tuple_len: 3,
            gamma_grid: ["1.1", "1.5", "2", "e", "5", "10", "50"]
                .map(String::from)
                .to_vec(),
            gamma_sandwich_points: ["2", "5", "10", "20"].map(String::from).to_vec(),
            gamma_random_samples: 100,
            gamma_random_seed: 0x51ed_270b,
            gamma_eval_precision_bits: 128,
        }
    }
}

impl Config {
    /// Loads an explicit path (must exist) or ./majorder.toml when present;
    /// otherwise the built-in defaults.
    pub fn load(explicit: Option<&Path>) -> Result<Config, UsageError> {
        let path = match explicit {
            Some(p) => p.to_path_buf(),
            None => {
                let fallback = Path::new("majorder.toml");
                if !fallback.exists() {
                    return Ok(Config::default());
                }
                fallback.to_path_buf()
            }
        };
        let text = std::fs::read_to_string(&path)
            .map_err(|e| UsageError(format!("cannot read config {}: {e}", path.display())))?;
        toml::from_str(&text)
            .map_err(|e| UsageError(format!("invalid config {}: {e}", path.display())))
    }

    /// Applies MAJORDER_MAX_PRECISION on top of the file value.
    pub fn apply_env(&mut self) -> Result<(), UsageError> {
        if let Ok(raw) = std::env::var(ENV_MAX_PRECISION) {
            let bits: u32 = raw.parse().map_err(|_| {
                UsageError(format!(
                    "{ENV_MAX_PRECISION} must be a positive integer, got {raw:?}"
                ))
            })?;
            if bits == 0 {
                return Err(UsageError(format!("{ENV_MAX_PRECISION} must be positive")));
            }
            self.max_precision_bits = bits;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_round_trip_through_toml() {
        let cfg: Config = toml::from_str("").unwrap();
        assert_eq!(cfg.threads, 1);
        assert_eq!(cfg.max_precision_bits, 8192);
        assert_eq!(cfg.gamma_grid.len(), 7);
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let err = toml::from_str::<Config>("max_presicion_bits = 4096");
        assert!(err.is_err(), "typoed keys must not be silently dropped");
    }

    #[test]
    fn partial_files_keep_remaining_defaults() {
        let cfg: Config = toml::from_str("solve_max_sum = 5").unwrap();
        assert_eq!(cfg.solve_max_sum, 5);
        assert_eq!(cfg.sum_sweep_cap_bits, 1024);
    }
}
