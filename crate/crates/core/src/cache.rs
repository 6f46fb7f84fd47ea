//! On-disk stratification cache.
//!
//! Layout (all integers little-endian):
//!
//! | offset | size | field |
//! |---|---|---|
//! | 0 | 8 | magic `BINRANK\0` |
//! | 8 | 2 | format version (`1`) |
//! | 10 | 1 | `n` |
//! | 11 | 1 | semiring tag (`0` gf2, `1` bool, `2` nat) |
//! | 12 | 1 | maximum rank `R` |
//! | 13 | 1 | bytes per code `w = max(1, 2^n / 8)` |
//! | 14 | 2 | reserved, zero |
//! | 16 | 4 (R+1) | stratum sizes, `u32` |
//! | … | w · 2^(2^n) | codes, stratum by stratum, ascending |
//! | end − 32 | 32 | SHA-256 of every preceding byte |

use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::array::Shape;
use crate::error::{Error, Result};
use crate::semiring::Semiring;
use crate::stratify::RankTable;

pub const FORMAT_VERSION: u16 = 1;
const MAGIC: &[u8; 8] = b"BINRANK\0";
const HEADER_LEN: usize = 16;
const DIGEST_LEN: usize = 32;

fn code_width(shape: Shape) -> usize {
    (shape.cells() / 8).max(1)
}

pub fn encode(t: &RankTable) -> Vec<u8> {
    let shape = t.shape();
    let width = code_width(shape);
    let mut out = Vec::with_capacity(
        HEADER_LEN + 4 * t.strata().len() + width * t.total() as usize + DIGEST_LEN,
    );
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&FORMAT_VERSION.to_le_bytes());
    out.push(shape.n());
    out.push(t.semiring().byte());
    out.push(t.max_rank() as u8);
    out.push(width as u8);
    out.extend_from_slice(&[0, 0]);
    for s in t.strata() {
        out.extend_from_slice(&(s.len() as u32).to_le_bytes());
    }
    for s in t.strata() {
        for &c in s {
            out.extend_from_slice(&c.to_le_bytes()[..width]);
        }
    }
    let digest = Sha256::digest(&out);
    out.extend_from_slice(&digest);
    out
}

pub fn decode(bytes: &[u8]) -> Result<RankTable> {
    let corrupt = |msg: &str| Error::CorruptCache(msg.to_string());
    if bytes.len() < HEADER_LEN + DIGEST_LEN {
        return Err(corrupt("file too short"));
    }
    let (body, digest) = bytes.split_at(bytes.len() - DIGEST_LEN);
    if Sha256::digest(body).as_slice() != digest {
        return Err(corrupt("checksum mismatch"));
    }
    if &body[..8] != MAGIC {
        return Err(corrupt("bad magic"));
    }
    let version = u16::from_le_bytes([body[8], body[9]]);
    if version != FORMAT_VERSION {
        return Err(Error::CorruptCache(format!(
            "unsupported format version {version}"
        )));
    }
    let shape = Shape::new(body[10])?;
    let semiring = Semiring::from_byte(body[11]).ok_or_else(|| corrupt("bad semiring tag"))?;
    let strata_count = body[12] as usize + 1;
    let width = body[13] as usize;
    if width != code_width(shape) {
        return Err(corrupt("code width does not match n"));
    }
    let mut rest = &body[HEADER_LEN..];
    if rest.len() < 4 * strata_count {
        return Err(corrupt("truncated stratum sizes"));
    }
    let sizes: Vec<usize> = rest[..4 * strata_count]
        .chunks_exact(4)
        .map(|c| u32::from_le_bytes(c.try_into().unwrap()) as usize)
        .collect();
    rest = &rest[4 * strata_count..];
    let total: usize = sizes.iter().sum();
    if rest.len() != total * width {
        return Err(corrupt("code section length does not match stratum sizes"));
    }
    let mut codes = rest.chunks_exact(width).map(|c| {
        let mut buf = [0u8; 8];
        buf[..width].copy_from_slice(c);
        u64::from_le_bytes(buf)
    });
    let strata = sizes
        .iter()
        .map(|&len| codes.by_ref().take(len).collect())
        .collect();
    RankTable::from_strata(shape, semiring, strata)
}

pub fn file_name(shape: Shape, semiring: Semiring) -> String {
    format!(
        "strata-v{FORMAT_VERSION}-n{}-{}.bin",
        shape.n(),
        semiring.tag()
    )
}

pub fn save(t: &RankTable, dir: &Path) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = dir.join(file_name(t.shape(), t.semiring()));
    let tmp = path.with_extension("bin.tmp");
    fs::write(&tmp, encode(t))?;
    fs::rename(&tmp, &path)?;
    Ok(path)
}

/// `Ok(None)` when no cache file exists. A file that exists but does not
/// decode, or holds a different shape or semiring, is an error.
pub fn load(dir: &Path, shape: Shape, semiring: Semiring) -> Result<Option<RankTable>> {
    let path = dir.join(file_name(shape, semiring));
    let bytes = match fs::read(&path) {
        Ok(b) => b,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let t = decode(&bytes)?;
    if t.shape() != shape || t.semiring() != semiring {
        return Err(Error::CorruptCache(format!(
            "{} holds n = {} {}",
            path.display(),
            t.shape().n(),
            t.semiring().tag()
        )));
    }
    Ok(Some(t))
}

#[derive(Serialize)]
struct Export<'a> {
    format_version: u16,
    n: u8,
    semiring: Semiring,
    max_rank: usize,
    strata: &'a [Vec<u64>],
}

/// The cache content as pretty-printed JSON.
pub fn export_json(t: &RankTable) -> String {
    let export = Export {
        format_version: FORMAT_VERSION,
        n: t.shape().n(),
        semiring: t.semiring(),
        max_rank: t.max_rank(),
        strata: t.strata(),
    };
    serde_json::to_string_pretty(&export).expect("serializable")
}
