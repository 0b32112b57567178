//! Text rendering in the style of an interactive algebra session.

use std::fmt::Write;

use trop_core::linalg::IntVec;
use trop_core::WeightedFan;

/// Matrix whose columns are `vectors`, with right-aligned entries.
/// An empty matrix prints as `0`.
pub fn column_matrix(rows: usize, vectors: &[IntVec]) -> String {
    if vectors.is_empty() || rows == 0 {
        return "0\n".into();
    }
    let cells: Vec<Vec<String>> = vectors.iter().map(|v| v.iter().map(|x| x.to_string()).collect()).collect();
    let widths: Vec<usize> = cells.iter().map(|c| c.iter().map(String::len).max().unwrap_or(1)).collect();
    let mut out = String::new();
    for i in 0..rows {
        out.push('|');
        for (col, w) in cells.iter().zip(&widths) {
            write!(out, " {:>w$}", col[i], w = w).unwrap();
        }
        out.push_str(" |\n");
    }
    out
}

fn brace_list<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Rays, lineality, cones, weights, dimension and purity, plus the
/// balancing verdict when one is given.
pub fn weighted_fan(wf: &WeightedFan, multiplicities: bool, balanced: Option<bool>) -> String {
    let n = wf.ambient_dim();
    let mut out = String::new();
    out.push_str("rays:\n");
    out.push_str(&column_matrix(n, wf.fan().rays()));
    out.push_str("lineality:\n");
    out.push_str(&column_matrix(n, wf.fan().lineality()));
    let cones = wf.max_cones().iter().map(|c| brace_list(c.iter()));
    writeln!(out, "maxCones: {}", brace_list(cones)).unwrap();
    if multiplicities {
        writeln!(out, "multiplicities: {}", brace_list(wf.multiplicities().iter())).unwrap();
    }
    writeln!(out, "dim: {}", wf.dim()).unwrap();
    writeln!(out, "pure: {}", wf.is_pure()).unwrap();
    if let Some(b) = balanced {
        writeln!(out, "balanced: {b}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use trop_core::Int;

    fn iv(v: &[i64]) -> IntVec {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn columns_are_aligned() {
        let m = column_matrix(2, &[iv(&[-1, -1]), iv(&[1, 0]), iv(&[0, 10])]);
        assert_eq!(m, "| -1 1  0 |\n| -1 0 10 |\n");
        assert_eq!(column_matrix(3, &[]), "0\n");
    }
}
