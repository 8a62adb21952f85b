//! On-disk bit vector formats.
//!
//! `ascii` stores one `'0'`/`'1'` byte per bit; line breaks are ignored when
//! reading. `packed` stores the bit count as an unsigned 64-bit little-endian
//! header followed by the bits, most significant bit first, with the final
//! byte zero-padded.

use clap::ValueEnum;
use mcdm::BitVector;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Ascii,
    Packed,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("invalid byte 0x{byte:02x} at offset {offset} in ascii bit file")]
    InvalidByte { byte: u8, offset: usize },
    #[error("packed bit file is shorter than its 8-byte header")]
    MissingHeader,
    #[error("packed bit file declares {bits} bits but carries {bytes} payload bytes")]
    PayloadSize { bits: u64, bytes: usize },
    #[error("packed bit file has non-zero padding bits")]
    Padding,
}

pub fn read(data: &[u8], format: Format) -> Result<BitVector, FormatError> {
    match format {
        Format::Ascii => read_ascii(data),
        Format::Packed => read_packed(data),
    }
}

pub fn write(bits: &BitVector, format: Format) -> Vec<u8> {
    match format {
        Format::Ascii => bits.iter().map(|b| if b { b'1' } else { b'0' }).collect(),
        Format::Packed => write_packed(bits),
    }
}

fn read_ascii(data: &[u8]) -> Result<BitVector, FormatError> {
    let mut bits = BitVector::with_capacity(data.len());
    for (offset, &byte) in data.iter().enumerate() {
        match byte {
            b'0' => bits.push(false),
            b'1' => bits.push(true),
            b'\n' | b'\r' => {}
            _ => return Err(FormatError::InvalidByte { byte, offset }),
        }
    }
    Ok(bits)
}

fn read_packed(data: &[u8]) -> Result<BitVector, FormatError> {
    let (header, payload) = data.split_first_chunk::<8>().ok_or(FormatError::MissingHeader)?;
    let bits = u64::from_le_bytes(*header);
    let expected = bits.div_ceil(8);
    if expected != payload.len() as u64 {
        return Err(FormatError::PayloadSize {
            bits,
            bytes: payload.len(),
        });
    }
    let len = bits as usize;
    if !len.is_multiple_of(8) {
        let last = payload[payload.len() - 1];
        if last & (0xff >> (len % 8)) != 0 {
            return Err(FormatError::Padding);
        }
    }
    Ok((0..len)
        .map(|i| payload[i / 8] & (0x80 >> (i % 8)) != 0)
        .collect())
}

fn write_packed(bits: &BitVector) -> Vec<u8> {
    let mut out = Vec::with_capacity(8 + bits.len().div_ceil(8));
    out.extend_from_slice(&(bits.len() as u64).to_le_bytes());
    for chunk in bits.as_slice().chunks(8) {
        let byte = chunk
            .iter()
            .enumerate()
            .fold(0u8, |acc, (i, &b)| acc | (u8::from(b) << (7 - i)));
        out.push(byte);
    }
    out
}
