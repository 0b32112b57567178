//! Ideal files: a `vars:` header followed by one generator per line.
//!
//! ```text
//! # the tropical line
//! vars: x,y
//! x+y+1
//! ```

use trop_core::poly::{parse_in, Variables};
use trop_core::{IdealSpec, Polynomial};

/// Parses the file contents; errors carry the 1-based line number.
pub fn parse_ideal_file(text: &str) -> Result<IdealSpec, String> {
    let mut vars: Option<Variables> = None;
    let mut gens: Vec<Polynomial> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let lineno = i + 1;
        match &vars {
            None => {
                let rest = line
                    .strip_prefix("vars:")
                    .ok_or_else(|| format!("line {lineno}: expected `vars: ...` header"))?;
                let names: Vec<&str> = rest.split(',').map(str::trim).collect();
                vars = Some(Variables::new(&names).map_err(|e| format!("line {lineno}: {e}"))?);
            }
            Some(v) => gens.push(parse_in(line, v).map_err(|e| format!("line {lineno}: {e}"))?),
        }
    }
    let vars = vars.ok_or("missing `vars:` header")?;
    if gens.is_empty() {
        return Err("no generators".into());
    }
    IdealSpec::new(vars, gens).map_err(|e| e.to_string())
}
