//! Plain-text cache of the memoized Bernoulli and Euler number tables.
//!
//! One value per line: `B <n> <p/q>` or `E <n> <p/q>` (even `n` only).
//! Indices must be contiguous from 0.

use std::fs;
use std::io;
use std::path::Path;

use crate::exact::Rational;
use crate::sequences::numbers::{bernoulli_table, euler_even_table, preload_bernoulli, preload_euler_even};

pub const CACHE_ENV: &str = "HANKEL_CACHE_DIR";
const FILE: &str = "numbers.txt";

fn invalid(msg: String) -> io::Error {
    io::Error::new(io::ErrorKind::InvalidData, msg)
}

/// Loads `numbers.txt` from `dir` if it exists.
pub fn load_cache(dir: &Path) -> io::Result<()> {
    let path = dir.join(FILE);
    if !path.exists() {
        return Ok(());
    }
    let text = fs::read_to_string(path)?;
    let mut b = Vec::new();
    let mut e = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = || invalid(format!("line {}: `{line}`", lineno + 1));
        let mut parts = line.split_whitespace();
        let (Some(kind), Some(n), Some(v), None) = (parts.next(), parts.next(), parts.next(), parts.next()) else {
            return Err(bad());
        };
        let n: usize = n.parse().map_err(|_| bad())?;
        let v: Rational = v.parse().map_err(|_| bad())?;
        let (table, idx) = match kind {
            "B" => (&mut b, n),
            "E" if n.is_multiple_of(2) => (&mut e, n / 2),
            _ => return Err(bad()),
        };
        if idx != table.len() {
            return Err(invalid(format!("line {}: index {n} out of sequence", lineno + 1)));
        }
        table.push(v);
    }
    preload_bernoulli(b);
    preload_euler_even(e);
    Ok(())
}

/// Writes the current memo tables to `dir/numbers.txt`.
pub fn save_cache(dir: &Path) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    let mut text = String::new();
    for (n, v) in bernoulli_table().iter().enumerate() {
        text.push_str(&format!("B {n} {v}\n"));
    }
    for (k, v) in euler_even_table().iter().enumerate() {
        text.push_str(&format!("E {} {v}\n", 2 * k));
    }
    fs::write(dir.join(FILE), text)
}
