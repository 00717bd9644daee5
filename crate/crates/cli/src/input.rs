use std::io::Read;

use cdm_core::crystal::Tableau;
use cdm_core::positroid::GrassmannNecklace;
use cdm_core::KSubset;
use serde::de::DeserializeOwned;

use crate::CliError;

/// Comma-separated integers, e.g. `2,5,4,7`.
pub fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| p.parse().map_err(|_| format!("{p:?} is not a valid integer")))
        .collect()
}

pub fn subset(n: usize, s: &str) -> Result<KSubset, CliError> {
    let elems: Vec<usize> = parse_list(s).map_err(CliError::Usage)?;
    Ok(KSubset::new(n, elems)?)
}

/// Rows separated by `/`, entries by `,`: `1,1,3/2,3,4`.
pub fn tableau_rows(n: usize, s: &str) -> Result<Tableau, CliError> {
    let rows = s
        .split('/')
        .map(|r| parse_list(r).map_err(CliError::Usage))
        .collect::<Result<Vec<Vec<usize>>, _>>()?;
    Ok(Tableau::from_rows(n, &rows)?)
}

/// Compact necklace notation `13,23,13,14`, one digit per element.
pub fn necklace_compact(n: usize, s: &str) -> Result<GrassmannNecklace, CliError> {
    let mut subsets = Vec::new();
    for part in s.split(',').map(str::trim) {
        let elems = part
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as usize))
            .collect::<Option<Vec<usize>>>()
            .ok_or_else(|| CliError::Usage(format!("{part:?} is not a digit string")))?;
        subsets.push(KSubset::new(n, elems)?);
    }
    let k = subsets.first().map_or(0, KSubset::k);
    Ok(GrassmannNecklace::new(n, k, subsets)?)
}

/// Inline JSON when the argument starts with `[` or `{`, stdin for `-`,
/// otherwise a file path.
pub fn read_payload(arg: &str) -> Result<String, CliError> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('[') || trimmed.starts_with('{') {
        return Ok(arg.to_string());
    }
    if arg == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Usage(format!("reading stdin: {e}")))?;
        return Ok(buf);
    }
    std::fs::read_to_string(arg).map_err(|e| CliError::Usage(format!("reading {arg}: {e}")))
}

/// Parse a payload. Syntax errors are usage errors with a position;
/// well-formed JSON that breaks an invariant is a domain error.
pub fn parse_json<T: DeserializeOwned>(arg: &str) -> Result<T, CliError> {
    let text = read_payload(arg)?;
    serde_json::from_str(&text).map_err(|e| {
        use serde_json::error::Category;
        match e.classify() {
            Category::Data => CliError::Domain(e.to_string()),
            _ => CliError::Usage(format!(
                "malformed JSON at line {}, column {}: {e}",
                e.line(),
                e.column()
            )),
        }
    })
}
