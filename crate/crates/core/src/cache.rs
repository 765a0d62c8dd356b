//! Persistent orbit cache.
//!
//! One file per (system, canonical seed), stored under
//! `<dir>/<system_key>/<seed-hex>.orb`. The format is versioned and
//! self-describing:
//!
//! ```text
//! magic   4 bytes  "ORBC"
//! version u16 le   currently 1
//! key_len u16 le
//! key     UTF-8 system key, e.g. "C3"
//! seed    32 bytes little-endian bit set
//! count   u64 le
//! members count * 32 bytes, ascending
//! ```
//!
//! Unreadable or mismatched files are treated as cache misses and
//! overwritten; the cache never changes results, only timing.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use crate::error::Result;
use crate::rootset::RootSet;

const MAGIC: &[u8; 4] = b"ORBC";
const VERSION: u16 = 1;

fn seed_hex(seed: &RootSet) -> String {
    seed.to_bytes().iter().map(|b| format!("{b:02x}")).collect()
}

fn orbit_path(dir: &Path, system_key: &str, seed: &RootSet) -> PathBuf {
    dir.join(system_key).join(format!("{}.orb", seed_hex(seed)))
}

pub fn write_orbit(
    dir: &Path,
    system_key: &str,
    seed: &RootSet,
    members: &[RootSet],
) -> Result<()> {
    let path = orbit_path(dir, system_key, seed);
    fs::create_dir_all(path.parent().unwrap())?;
    let mut buf = Vec::with_capacity(48 + members.len() * 32);
    buf.extend_from_slice(MAGIC);
    buf.extend_from_slice(&VERSION.to_le_bytes());
    let key = system_key.as_bytes();
    buf.extend_from_slice(&(key.len() as u16).to_le_bytes());
    buf.extend_from_slice(key);
    buf.extend_from_slice(&seed.to_bytes());
    buf.extend_from_slice(&(members.len() as u64).to_le_bytes());
    for m in members {
        buf.extend_from_slice(&m.to_bytes());
    }
    // write-then-rename so a concurrent reader never sees a partial file;
    // the temp name is unique per writer so parallel workers composing the
    // same orbit do not clobber each other's staging file
    static COUNTER: std::sync::atomic::AtomicU64 = std::sync::atomic::AtomicU64::new(0);
    let tmp = path.with_extension(format!(
        "tmp.{}.{}",
        std::process::id(),
        COUNTER.fetch_add(1, std::sync::atomic::Ordering::Relaxed)
    ));
    let mut f = fs::File::create(&tmp)?;
    f.write_all(&buf)?;
    f.sync_all()?;
    fs::rename(&tmp, &path)?;
    Ok(())
}

pub fn read_orbit(dir: &Path, system_key: &str, seed: &RootSet) -> Result<Option<Vec<RootSet>>> {
    let path = orbit_path(dir, system_key, seed);
    let mut file = match fs::File::open(&path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let mut buf = Vec::new();
    file.read_to_end(&mut buf)?;

    let mut pos = 0usize;
    let take = |pos: &mut usize, n: usize| -> Option<&[u8]> {
        let slice = buf.get(*pos..*pos + n)?;
        *pos += n;
        Some(slice)
    };
    let parse = (|| -> Option<Vec<RootSet>> {
        if take(&mut pos, 4)? != MAGIC {
            return None;
        }
        let version = u16::from_le_bytes(take(&mut pos, 2)?.try_into().unwrap());
        if version != VERSION {
            return None;
        }
        let key_len = u16::from_le_bytes(take(&mut pos, 2)?.try_into().unwrap()) as usize;
        if take(&mut pos, key_len)? != system_key.as_bytes() {
            return None;
        }
        let stored_seed = RootSet::from_bytes(take(&mut pos, 32)?.try_into().unwrap());
        if stored_seed != *seed {
            return None;
        }
        let count = u64::from_le_bytes(take(&mut pos, 8)?.try_into().unwrap()) as usize;
        if buf.len() != pos + count * 32 {
            return None;
        }
        let mut members = Vec::with_capacity(count);
        for _ in 0..count {
            members.push(RootSet::from_bytes(take(&mut pos, 32)?.try_into().unwrap()));
        }
        Some(members)
    })();
    Ok(parse)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let seed = RootSet::from_indices([1, 5, 9]);
        let members = vec![
            RootSet::from_indices([1, 5, 9]),
            RootSet::from_indices([2, 6, 10]),
        ];
        write_orbit(dir.path(), "A2", &seed, &members).unwrap();
        let back = read_orbit(dir.path(), "A2", &seed).unwrap().unwrap();
        assert_eq!(back, members);
        // wrong system key is a miss
        assert!(read_orbit(dir.path(), "G2", &seed).unwrap().is_none());
        // truncated file is a miss, not an error
        let path = dir.path().join("A2").join(format!(
            "{}.orb",
            seed.to_bytes().iter().map(|b| format!("{b:02x}")).collect::<String>()
        ));
        let bytes = std::fs::read(&path).unwrap();
        std::fs::write(&path, &bytes[..bytes.len() - 7]).unwrap();
        assert!(read_orbit(dir.path(), "A2", &seed).unwrap().is_none());
    }
}
