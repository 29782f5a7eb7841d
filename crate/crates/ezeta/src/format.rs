//! Binary file format for [`ErrorTermTable`].
//!
//! All integers and floats are little-endian.
//!
//! | bytes | field |
//! |------:|-------|
//! | 8 | magic `EZTABLE\0` |
//! | 4 | format version (u32), currently 1 |
//! | 8 | `x_max` (f64) |
//! | 8 | `step` (f64) |
//! | 8 | quadrature tolerance (f64) |
//! | 8 | `em_cutoff` (f64) |
//! | 4 | Riemann–Siegel correction terms (u32) |
//! | 8 | `target_abs_err` (f64) |
//! | 4 + s | method version: length (u32) then UTF-8 bytes |
//! | 8 | row count `n` (u64) |
//! | 5 × 8n | columns `t`, `e`, `cum_e`, `cum_psi`, `zeta_sq`, each `n` f64 |
//! | 32 | SHA-256 of every preceding byte |

use ezeta_core::mean_square::{ErrorTermTable, TableColumns};
use ezeta_core::zeta::ZetaEvalConfig;
use sha2::{Digest, Sha256};

pub const TABLE_MAGIC: &[u8; 8] = b"EZTABLE\0";
pub const TABLE_FORMAT_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum FormatError {
    #[error("not a table file (bad magic)")]
    Magic,
    #[error("unsupported table format version {0}")]
    Version(u32),
    #[error("table file truncated")]
    Truncated,
    #[error("table checksum mismatch")]
    Checksum,
    #[error("trailing bytes after table")]
    Trailing,
    #[error("method version is not UTF-8")]
    Utf8,
    #[error("table contents rejected: {0}")]
    Invalid(#[from] ezeta_core::Error),
}

pub fn encode_table(table: &ErrorTermTable) -> Vec<u8> {
    let cols = table.columns();
    let n = cols.t.len();
    let mut out = Vec::with_capacity(96 + table.method_version.len() + 40 * n);
    out.extend_from_slice(TABLE_MAGIC);
    out.extend_from_slice(&TABLE_FORMAT_VERSION.to_le_bytes());
    for v in [table.x_max, table.step, table.tolerance, table.cfg.em_cutoff] {
        out.extend_from_slice(&v.to_le_bytes());
    }
    out.extend_from_slice(&(table.cfg.rs_correction_terms as u32).to_le_bytes());
    out.extend_from_slice(&table.cfg.target_abs_err.to_le_bytes());
    out.extend_from_slice(&(table.method_version.len() as u32).to_le_bytes());
    out.extend_from_slice(table.method_version.as_bytes());
    out.extend_from_slice(&(n as u64).to_le_bytes());
    for col in [&cols.t, &cols.e, &cols.cum_e, &cols.cum_psi, &cols.zeta_sq] {
        for v in col {
            out.extend_from_slice(&v.to_le_bytes());
        }
    }
    let sum = Sha256::digest(&out);
    out.extend_from_slice(&sum);
    out
}

struct Reader<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8], FormatError> {
        let end = self.pos.checked_add(n).ok_or(FormatError::Truncated)?;
        let s = self.buf.get(self.pos..end).ok_or(FormatError::Truncated)?;
        self.pos = end;
        Ok(s)
    }
    fn u32(&mut self) -> Result<u32, FormatError> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }
    fn u64(&mut self) -> Result<u64, FormatError> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }
    fn f64(&mut self) -> Result<f64, FormatError> {
        Ok(f64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }
    fn column(&mut self, n: usize) -> Result<Vec<f64>, FormatError> {
        let bytes = self.take(n.checked_mul(8).ok_or(FormatError::Truncated)?)?;
        Ok(bytes.chunks_exact(8).map(|c| f64::from_le_bytes(c.try_into().unwrap())).collect())
    }
}

pub fn decode_table(bytes: &[u8]) -> Result<ErrorTermTable, FormatError> {
    if bytes.len() < 8 || &bytes[..8] != TABLE_MAGIC {
        return Err(FormatError::Magic);
    }
    if bytes.len() < 12 + 32 {
        return Err(FormatError::Truncated);
    }
    let (body, sum) = bytes.split_at(bytes.len() - 32);
    let mut r = Reader { buf: body, pos: 8 };
    let version = r.u32()?;
    if version != TABLE_FORMAT_VERSION {
        return Err(FormatError::Version(version));
    }
    if Sha256::digest(body).as_slice() != sum {
        return Err(FormatError::Checksum);
    }
    let x_max = r.f64()?;
    let step = r.f64()?;
    let tolerance = r.f64()?;
    let em_cutoff = r.f64()?;
    let rs_correction_terms = r.u32()? as usize;
    let target_abs_err = r.f64()?;
    let len = r.u32()? as usize;
    let method_version = std::str::from_utf8(r.take(len)?).map_err(|_| FormatError::Utf8)?.to_owned();
    let n = usize::try_from(r.u64()?).map_err(|_| FormatError::Truncated)?;
    let cols = TableColumns {
        t: r.column(n)?,
        e: r.column(n)?,
        cum_e: r.column(n)?,
        cum_psi: r.column(n)?,
        zeta_sq: r.column(n)?,
    };
    if r.pos != body.len() {
        return Err(FormatError::Trailing);
    }
    let cfg = ZetaEvalConfig {
        em_cutoff,
        rs_correction_terms,
        target_abs_err,
    };
    cfg.validate()?;
    Ok(ErrorTermTable::from_columns(x_max, step, tolerance, method_version, cfg, cols)?)
}
