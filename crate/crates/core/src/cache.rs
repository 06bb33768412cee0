//! Plain-text orbit cache.
//!
//! ```text
//! # gsatlas orbit cache v1 canon=1 n=5
//! <representative graph6> <lc size> <member graph6> <member graph6> ...
//! ```
//!
//! Members are stored canonically labeled, so a file written under a
//! different canonical-form version is stale and gets recomputed.

use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::graph::{from_graph6, to_graph6, CanonicalForm, CANON_VERSION};
use crate::lc::{enumerate_orbits, OrbitRecord};

pub const CACHE_FORMAT_VERSION: u32 = 1;

pub fn header(n: usize) -> String {
    format!("# gsatlas orbit cache v{CACHE_FORMAT_VERSION} canon={CANON_VERSION} n={n}")
}

pub fn cache_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("orbits-n{n}.txt"))
}

pub fn write_orbits<W: Write>(mut out: W, n: usize, orbits: &[OrbitRecord]) -> Result<()> {
    writeln!(out, "{}", header(n))?;
    for o in orbits {
        write!(out, "{} {}", to_graph6(&o.representative), o.lc_size())?;
        for m in &o.members {
            write!(out, " {}", to_graph6(&m.to_graph()))?;
        }
        writeln!(out)?;
    }
    Ok(())
}

/// Parses a cache file; `Ok(None)` when the header does not match the
/// current versions.
pub fn read_orbits<R: BufRead>(input: R, n: usize) -> Result<Option<Vec<OrbitRecord>>> {
    let mut lines = input.lines();
    let first = lines.next().transpose()?;
    if first.as_deref().map(str::trim_end) != Some(header(n).as_str()) {
        return Ok(None);
    }
    let mut orbits = Vec::new();
    for (i, line) in lines.enumerate() {
        let line = line?;
        let bad = |what: &str| Error::Cache(format!("line {}: {what}", i + 2));
        let mut fields = line.split_ascii_whitespace();
        let rep = from_graph6(fields.next().ok_or_else(|| bad("empty record"))?)?;
        let size: usize = fields
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| bad("missing orbit size"))?;
        let members = fields
            .map(|s| Ok(CanonicalForm::of_labeled(&from_graph6(s)?)))
            .collect::<Result<Vec<_>>>()?;
        if members.len() != size {
            return Err(bad("member count does not match orbit size"));
        }
        if members.iter().any(|m| m.n() != n) {
            return Err(bad("member has the wrong vertex count"));
        }
        let record = OrbitRecord::from_members(members);
        if record.representative != rep || record.lc_size() != size {
            return Err(bad("stored representative or members are not canonical"));
        }
        orbits.push(record);
    }
    Ok(Some(orbits))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheStatus {
    Hit,
    /// No file, or a file from another version; recomputed and written.
    Miss,
}

/// Orbits for `n` from `dir`, computing and storing them if needed.
pub fn load_or_compute(dir: &Path, n: usize) -> Result<(Vec<OrbitRecord>, CacheStatus)> {
    let path = cache_path(dir, n);
    if let Ok(file) = fs::File::open(&path) {
        if let Some(orbits) = read_orbits(BufReader::new(file), n)? {
            return Ok((orbits, CacheStatus::Hit));
        }
    }
    let orbits = enumerate_orbits(n)?;
    fs::create_dir_all(dir)?;
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    {
        let mut w = BufWriter::new(fs::File::create(&tmp)?);
        write_orbits(&mut w, n, &orbits)?;
        w.flush()?;
    }
    fs::rename(&tmp, &path)?;
    Ok((orbits, CacheStatus::Miss))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let orbits = enumerate_orbits(5).unwrap();
        let mut buf = Vec::new();
        write_orbits(&mut buf, 5, &orbits).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("# gsatlas orbit cache v1 canon=1 n=5\n"));
        assert_eq!(read_orbits(&buf[..], 5).unwrap().unwrap(), orbits);
    }

    #[test]
    fn stale_header_is_ignored() {
        let text = "# gsatlas orbit cache v1 canon=0 n=3\nBw 2 Bg Bw\n";
        assert_eq!(read_orbits(text.as_bytes(), 3).unwrap(), None);
    }

    #[test]
    fn corrupt_record_is_an_error() {
        let text = format!("{}\nBw 3 Bg Bw\n", header(3));
        assert!(matches!(
            read_orbits(text.as_bytes(), 3),
            Err(Error::Cache(_))
        ));
    }

    #[test]
    fn load_then_hit() {
        let dir = tempfile::tempdir().unwrap();
        let (cold, s1) = load_or_compute(dir.path(), 4).unwrap();
        let (warm, s2) = load_or_compute(dir.path(), 4).unwrap();
        assert_eq!((s1, s2), (CacheStatus::Miss, CacheStatus::Hit));
        assert_eq!(cold, warm);
    }
}
