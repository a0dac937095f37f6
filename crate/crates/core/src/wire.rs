//! Little-endian binary primitives shared by the on-disk formats: magic
//! headers, LEB128 varints, and length checks.

use std::io::{self, Read, Write};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum WireError {
    #[error("unexpected end of input")]
    UnexpectedEof,
    #[error("bad magic: expected {expected:?}")]
    BadMagic { expected: [u8; 4] },
    #[error("unsupported version {found} (expected {expected})")]
    UnsupportedVersion { expected: u32, found: u32 },
    #[error("corrupt payload: {0}")]
    Corrupt(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

pub fn write_magic<W: Write>(w: &mut W, magic: &[u8; 4], version: u32) -> Result<(), WireError> {
    w.write_all(magic)?;
    w.write_all(&version.to_le_bytes())?;
    Ok(())
}

pub fn read_magic<R: Read>(r: &mut R, magic: &[u8; 4], version: u32) -> Result<(), WireError> {
    let mut buf = [0u8; 4];
    r.read_exact(&mut buf).map_err(eof)?;
    if &buf != magic {
        return Err(WireError::BadMagic { expected: *magic });
    }
    r.read_exact(&mut buf).map_err(eof)?;
    let found = u32::from_le_bytes(buf);
    if found != version {
        return Err(WireError::UnsupportedVersion {
            expected: version,
            found,
        });
    }
    Ok(())
}

pub fn write_varint<W: Write>(w: &mut W, mut value: u64) -> Result<(), WireError> {
    loop {
        let byte = (value & 0x7f) as u8;
        value >>= 7;
        if value == 0 {
            w.write_all(&[byte])?;
            return Ok(());
        }
        w.write_all(&[byte | 0x80])?;
    }
}

pub fn read_varint<R: Read>(r: &mut R) -> Result<u64, WireError> {
    let mut value = 0u64;
    let mut shift = 0;
    loop {
        let mut buf = [0u8; 1];
        r.read_exact(&mut buf).map_err(eof)?;
        if shift >= 64 || (shift == 63 && buf[0] > 1) {
            return Err(WireError::Corrupt("varint overflows u64".into()));
        }
        value |= u64::from(buf[0] & 0x7f) << shift;
        if buf[0] & 0x80 == 0 {
            return Ok(value);
        }
        shift += 7;
    }
}

pub fn write_u64<W: Write>(w: &mut W, value: u64) -> Result<(), WireError> {
    w.write_all(&value.to_le_bytes())?;
    Ok(())
}

pub fn read_u64<R: Read>(r: &mut R) -> Result<u64, WireError> {
    let mut buf = [0u8; 8];
    r.read_exact(&mut buf).map_err(eof)?;
    Ok(u64::from_le_bytes(buf))
}

pub fn write_str<W: Write>(w: &mut W, s: &str) -> Result<(), WireError> {
    write_varint(w, s.len() as u64)?;
    w.write_all(s.as_bytes())?;
    Ok(())
}

pub fn read_str<R: Read>(r: &mut R, max_len: u64) -> Result<String, WireError> {
    let len = read_varint(r)?;
    if len > max_len {
        return Err(WireError::Corrupt(format!("string of {len} bytes")));
    }
    let mut buf = vec![0u8; len as usize];
    r.read_exact(&mut buf).map_err(eof)?;
    String::from_utf8(buf).map_err(|_| WireError::Corrupt("invalid utf-8".into()))
}

fn eof(e: io::Error) -> WireError {
    if e.kind() == io::ErrorKind::UnexpectedEof {
        WireError::UnexpectedEof
    } else {
        WireError::Io(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn varint_round_trip() {
        for v in [0u64, 1, 127, 128, 300, u32::MAX as u64, u64::MAX] {
            let mut buf = Vec::new();
            write_varint(&mut buf, v).unwrap();
            assert_eq!(read_varint(&mut buf.as_slice()).unwrap(), v);
        }
    }

    #[test]
    fn magic_mismatch_is_detected() {
        let mut buf = Vec::new();
        write_magic(&mut buf, b"ABCD", 1).unwrap();
        assert!(read_magic(&mut buf.as_slice(), b"ABCE", 1).is_err());
        assert!(read_magic(&mut buf.as_slice(), b"ABCD", 2).is_err());
        assert!(read_magic(&mut buf.as_slice(), b"ABCD", 1).is_ok());
    }
}
