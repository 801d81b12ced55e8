//! On-disk element stores.
//!
//! Layout, little endian: magic `COXS`, `u32` format version, `u32` length
//! and UTF-8 bytes of the type spec, `u32` rank, `rank²` `u32` Coxeter
//! matrix entries, `u64` group order, `u32` number of positive roots, one
//! `u16` root image per (element, positive root), and a trailing CRC-32 of
//! everything before it.

use crate::error::{CliError, Result};
use coxsolomon_core::{CoxeterSystem, CoxeterType};
use std::fs;
use std::path::{Path, PathBuf};

pub const MAGIC: &[u8; 4] = b"COXS";
pub const VERSION: u32 = 1;

pub fn file_name(t: &CoxeterType) -> String {
    format!("{t}.coxs")
}

pub fn path_for(dir: &Path, t: &CoxeterType) -> PathBuf {
    dir.join(file_name(t))
}

pub fn encode(sys: &CoxeterSystem) -> Vec<u8> {
    let spec = sys.label().as_bytes();
    let images = sys.all_images();
    let rank = sys.rank();
    let mut out = Vec::with_capacity(32 + spec.len() + 4 * rank * rank + 2 * images.len());
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&VERSION.to_le_bytes());
    out.extend_from_slice(&(spec.len() as u32).to_le_bytes());
    out.extend_from_slice(spec);
    out.extend_from_slice(&(rank as u32).to_le_bytes());
    let m = sys.coxeter_matrix();
    for i in 0..rank {
        for j in 0..rank {
            out.extend_from_slice(&m.get(i, j).to_le_bytes());
        }
    }
    out.extend_from_slice(&(sys.order() as u64).to_le_bytes());
    out.extend_from_slice(&(sys.n_positive_roots() as u32).to_le_bytes());
    for &r in images {
        out.extend_from_slice(&r.to_le_bytes());
    }
    let crc = crc32fast::hash(&out);
    out.extend_from_slice(&crc.to_le_bytes());
    out
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize) -> std::result::Result<&'a [u8], String> {
        let end = self.pos.checked_add(n).filter(|&e| e <= self.bytes.len());
        let end = end.ok_or_else(|| format!("truncated at byte {}", self.pos))?;
        let s = &self.bytes[self.pos..end];
        self.pos = end;
        Ok(s)
    }

    fn u32(&mut self) -> std::result::Result<u32, String> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn u64(&mut self) -> std::result::Result<u64, String> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }
}

/// Decode and fully re-validate a store. `expected`, when given, must match
/// the stored type.
pub fn decode(
    bytes: &[u8],
    expected: Option<&CoxeterType>,
) -> std::result::Result<CoxeterSystem, String> {
    let mut r = Reader { bytes, pos: 0 };
    if r.take(4)? != MAGIC {
        return Err("bad magic number".into());
    }
    let version = r.u32()?;
    if version != VERSION {
        return Err(format!(
            "format version {version} is not supported (this build reads version {VERSION}); rewrite it with `cache write`"
        ));
    }
    if bytes.len() < 4 {
        return Err("truncated".into());
    }
    let (payload, tail) = bytes.split_at(bytes.len() - 4);
    let spec_len = r.u32()? as usize;
    let spec =
        std::str::from_utf8(r.take(spec_len)?).map_err(|_| "type spec is not UTF-8".to_string())?;
    let t: CoxeterType = spec.parse().map_err(|e| format!("{e}"))?;
    if let Some(e) = expected {
        if e != &t {
            return Err(format!("file holds type {t}, expected {e}"));
        }
    }
    let rank = r.u32()? as usize;
    if rank != t.rank() {
        return Err(format!("rank {rank} does not match type {t}"));
    }
    let m = t.coxeter_matrix();
    for i in 0..rank {
        for j in 0..rank {
            if r.u32()? != m.get(i, j) {
                return Err(format!(
                    "Coxeter matrix entry ({i},{j}) does not match type {t}"
                ));
            }
        }
    }
    let order = r.u64()?;
    if Some(order as u128) != t.order() {
        return Err(format!("stored order {order} is wrong for type {t}"));
    }
    let n_pos = r.u32()? as usize;
    let count = (order as usize)
        .checked_mul(n_pos)
        .ok_or_else(|| "image table size overflows".to_string())?;
    let raw = r.take(
        count
            .checked_mul(2)
            .ok_or_else(|| "image table size overflows".to_string())?,
    )?;
    if r.pos != payload.len() {
        return Err(format!(
            "{} unexpected bytes before the checksum",
            payload.len().saturating_sub(r.pos)
        ));
    }
    if crc32fast::hash(payload) != u32::from_le_bytes(tail.try_into().unwrap()) {
        return Err("checksum mismatch".into());
    }
    let images = raw
        .chunks_exact(2)
        .map(|c| u16::from_le_bytes([c[0], c[1]]))
        .collect();
    CoxeterSystem::from_element_images(&t, images).map_err(|e| e.to_string())
}

pub fn write(dir: &Path, sys: &CoxeterSystem) -> Result<PathBuf> {
    let t: CoxeterType = sys.label().parse()?;
    fs::create_dir_all(dir).map_err(|source| CliError::Io {
        path: dir.to_path_buf(),
        source,
    })?;
    let path = path_for(dir, &t);
    fs::write(&path, encode(sys)).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })?;
    Ok(path)
}

pub fn read(path: &Path, expected: Option<&CoxeterType>) -> Result<CoxeterSystem> {
    let bytes = fs::read(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    decode(&bytes, expected).map_err(|reason| CliError::CorruptCache {
        path: path.to_path_buf(),
        reason,
    })
}

/// The cached store for `t`, if the file exists.
pub fn load(dir: &Path, t: &CoxeterType) -> Result<Option<CoxeterSystem>> {
    let path = path_for(dir, t);
    if !path.exists() {
        return Ok(None);
    }
    read(&path, Some(t)).map(Some)
}
