use matroidal_core::field::FieldChoice;
use matroidal_core::matroid::ENUMERATION_MAX_N;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    pub field: FieldChoice,
    pub max_n: usize,
    pub max_d: usize,
    pub certify: bool,
    pub format: OutputFormat,
}

impl Default for Config {
    fn default() -> Self {
        Config { field: FieldChoice::Rationals, max_n: 5, max_d: 3, certify: true, format: OutputFormat::Text }
    }
}

impl Config {
    pub fn validate(&self) -> Result<(), CliError> {
        self.field.validate().map_err(|e| CliError::Usage(e.to_string()))?;
        if self.max_n == 0 || self.max_n > ENUMERATION_MAX_N {
            return Err(CliError::Usage(format!("--max-n must lie in 1..={ENUMERATION_MAX_N}")));
        }
        if self.max_d == 0 {
            return Err(CliError::Usage("--max-d must be positive".into()));
        }
        Ok(())
    }
}
