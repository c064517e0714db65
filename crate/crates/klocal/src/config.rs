//! Flat `key=value` configuration files.
//!
//! Entries become `--key=value` flags placed right after the subcommand, so
//! any flag given on the command line overrides the file.

use std::ffi::OsString;
use std::path::Path;

use crate::CliError;

pub const SUBCOMMANDS: [&str; 7] =
    ["verify-1d", "verify-2d", "verify-sspt", "verify-one-to-all", "qca-verify", "qca-index", "monitored-sweep"];

/// Parse file contents into flags. Keys may be written `p_grid`, `p-grid` or
/// `--p-grid`.
pub fn parse_config(text: &str) -> Result<Vec<OsString>, CliError> {
    let mut flags = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("config line {}: expected key=value, got {line:?}", i + 1)))?;
        let key = key.trim().trim_start_matches('-').replace('_', "-");
        let value = value.trim();
        if key.is_empty() {
            return Err(CliError::Usage(format!("config line {}: empty key", i + 1)));
        }
        if key == "config" {
            return Err(CliError::Usage(format!("config line {}: config files cannot include other files", i + 1)));
        }
        flags.push(OsString::from(format!("--{key}={value}")));
    }
    Ok(flags)
}

fn config_path(args: &[OsString]) -> Result<Option<OsString>, CliError> {
    let mut found = None;
    let mut it = args.iter().skip(1);
    while let Some(a) = it.next() {
        let s = a.to_string_lossy();
        if s == "--" {
            break;
        }
        if s == "--config" {
            let v = it.next().ok_or_else(|| CliError::Usage("--config needs a file".into()))?;
            found = Some(v.clone());
        } else if let Some(v) = s.strip_prefix("--config=") {
            found = Some(OsString::from(v));
        }
    }
    Ok(found)
}

/// Splice the flags of the `--config` file, if any, in front of the
/// command-line flags of the subcommand.
pub fn expand_args(args: Vec<OsString>) -> Result<Vec<OsString>, CliError> {
    let Some(path) = config_path(&args)? else {
        return Ok(args);
    };
    let text = std::fs::read_to_string(Path::new(&path))
        .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", Path::new(&path).display())))?;
    let flags = parse_config(&text)?;
    let Some(sub) = args.iter().position(|a| SUBCOMMANDS.iter().any(|s| a == s)) else {
        return Ok(args);
    };
    let mut out = args[..=sub].to_vec();
    out.extend(flags);
    out.extend_from_slice(&args[sub + 1..]);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strs(v: &[OsString]) -> Vec<String> {
        v.iter().map(|s| s.to_string_lossy().into_owned()).collect()
    }

    #[test]
    fn keys_are_normalised() {
        let f = parse_config("# sweep\np_grid = 0,0.1\n\n--seed=3\nsizes=24\n").unwrap();
        assert_eq!(strs(&f), ["--p-grid=0,0.1", "--seed=3", "--sizes=24"]);
    }

    #[test]
    fn malformed_lines_are_rejected() {
        assert!(parse_config("seed 3").is_err());
        assert!(parse_config("=3").is_err());
        assert!(parse_config("config=x").is_err());
    }
}
