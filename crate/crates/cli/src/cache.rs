//! On-disk cache of I(F).
//!
//! One file per Frobenius number, `irreducible-<F>.txt`: a header line
//! `F=<F> count=<k>` followed by `k` bit strings, one per line.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use nsgp_core::{GapVector, NumericalSemigroup};

pub fn cache_path(dir: &Path, frobenius: u32) -> PathBuf {
    dir.join(format!("irreducible-{frobenius}.txt"))
}

/// Cached I(F), or `None` when the file is missing or fails validation.
pub fn read(dir: &Path, frobenius: u32) -> Option<Vec<NumericalSemigroup>> {
    let text = fs::read_to_string(cache_path(dir, frobenius)).ok()?;
    parse(&text, frobenius)
}

fn parse(text: &str, frobenius: u32) -> Option<Vec<NumericalSemigroup>> {
    let mut lines = text.lines();
    let header = lines.next()?;
    let (f_part, count_part) = header.split_once(' ')?;
    if f_part.strip_prefix("F=")?.parse::<u32>().ok()? != frobenius {
        return None;
    }
    let count: usize = count_part.strip_prefix("count=")?.parse().ok()?;

    let mut out = Vec::with_capacity(count);
    for line in lines.filter(|l| !l.is_empty()) {
        let v: GapVector = line.parse().ok()?;
        if v.len() != frobenius {
            return None;
        }
        out.push(NumericalSemigroup::from_vector(v).ok()?);
    }
    (out.len() == count).then_some(out)
}

pub fn render(frobenius: u32, semigroups: &[NumericalSemigroup]) -> String {
    let mut out = format!("F={frobenius} count={}\n", semigroups.len());
    for s in semigroups {
        out.push_str(&s.gap_vector().to_string());
        out.push('\n');
    }
    out
}

pub fn write(dir: &Path, frobenius: u32, semigroups: &[NumericalSemigroup]) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    let path = cache_path(dir, frobenius);
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, render(frobenius, semigroups))?;
    fs::rename(tmp, path)
}
