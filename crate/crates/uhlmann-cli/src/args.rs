//! Minimal flag parsing: `--name value` pairs, boolean switches, and
//! fraction-aware numbers so targets like `1/6` stay exact to the last ulp.

use std::collections::{BTreeMap, BTreeSet};

use crate::CliError;

#[derive(Debug, Default)]
pub struct Args {
    values: BTreeMap<String, String>,
    switches: BTreeSet<String>,
}

impl Args {
    /// Parse `rest` against the declared value flags and switches; anything
    /// else is a usage error.
    pub fn parse(
        rest: &[String],
        value_flags: &[&str],
        switch_flags: &[&str],
    ) -> Result<Self, CliError> {
        let mut args = Args::default();
        let mut it = rest.iter();
        while let Some(token) = it.next() {
            let name = token
                .strip_prefix("--")
                .ok_or_else(|| CliError::Usage(format!("unexpected argument '{token}'")))?;
            if switch_flags.contains(&name) {
                args.switches.insert(name.to_string());
            } else if value_flags.contains(&name) {
                let value = it
                    .next()
                    .ok_or_else(|| CliError::Usage(format!("--{name} needs a value")))?;
                if args
                    .values
                    .insert(name.to_string(), value.clone())
                    .is_some()
                {
                    return Err(CliError::Usage(format!("--{name} given twice")));
                }
            } else {
                return Err(CliError::Usage(format!("unknown flag --{name}")));
            }
        }
        Ok(args)
    }

    pub fn get(&self, name: &str) -> Option<&str> {
        self.values.get(name).map(String::as_str)
    }

    pub fn require(&self, name: &str) -> Result<&str, CliError> {
        self.get(name)
            .ok_or_else(|| CliError::Usage(format!("--{name} is required")))
    }

    pub fn switch(&self, name: &str) -> bool {
        self.switches.contains(name)
    }
}

/// Parse a real number, accepting simple fractions like `1/6` or `2/5`.
pub fn number(text: &str) -> Result<f64, CliError> {
    if let Some((num, den)) = text.split_once('/') {
        let n: f64 = num
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("'{text}' is not a number")))?;
        let d: f64 = den
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("'{text}' is not a number")))?;
        if d == 0.0 {
            return Err(CliError::Usage(format!("'{text}' divides by zero")));
        }
        return Ok(n / d);
    }
    text.parse()
        .map_err(|_| CliError::Usage(format!("'{text}' is not a number")))
}

pub fn unsigned(text: &str) -> Result<usize, CliError> {
    text.parse()
        .map_err(|_| CliError::Usage(format!("'{text}' is not a nonnegative integer")))
}

pub fn seed(text: &str) -> Result<u64, CliError> {
    text.parse()
        .map_err(|_| CliError::Usage(format!("'{text}' is not a valid seed")))
}
