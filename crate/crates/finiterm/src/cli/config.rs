use serde::Serialize;

use super::CliError;
use crate::numkernel::ToleranceConfig;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub tol: ToleranceConfig,
    pub seed: u64,
    pub kmax: usize,
    pub assume_small: bool,
    pub format: OutputFormat,
    pub threads: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            tol: ToleranceConfig::default(),
            seed: 42,
            kmax: 8,
            assume_small: false,
            format: OutputFormat::Text,
            threads: 1,
        }
    }
}

impl RunConfig {
    /// Clamps tolerances to the 1e-13 floor and bounds kmax.
    pub fn validated(mut self) -> Result<Self, CliError> {
        for t in [
            &mut self.tol.root,
            &mut self.tol.ode,
            &mut self.tol.cluster,
            &mut self.tol.rank,
        ] {
            if !t.is_finite() || *t <= 0.0 {
                return Err(CliError::BadConfig(format!("tolerance {t} must be positive")));
            }
            *t = t.max(1e-13);
        }
        if self.kmax == 0 || self.kmax > 32 {
            return Err(CliError::BadConfig(format!(
                "kmax {} outside 1..=32",
                self.kmax
            )));
        }
        Ok(self)
    }
}
