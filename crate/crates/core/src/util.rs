use crate::error::{Error, Result};

pub(crate) fn schema_tag() -> String {
    crate::SCHEMA.to_string()
}

/// Validate an `n x n` index table and flatten it row-major.
pub(crate) fn flatten_table(rows: &[Vec<usize>], n: usize, what: &str) -> Result<Vec<usize>> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidTable(format!("{what} table must be {n}x{n}")));
    }
    let flat: Vec<usize> = rows.iter().flatten().copied().collect();
    if let Some(bad) = flat.iter().find(|&&v| v >= n) {
        return Err(Error::InvalidTable(format!("{what} entry {bad} out of range")));
    }
    Ok(flat)
}

pub(crate) fn unflatten_table(flat: &[usize], n: usize) -> Vec<Vec<usize>> {
    flat.chunks(n).map(|c| c.to_vec()).collect()
}
