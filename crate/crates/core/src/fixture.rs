//! Binary-exact storage for reference arrays.
//!
//! Layout (little-endian): the magic `RFTFIX01`, a `u32` header length, a
//! UTF-8 header of `key=value` lines, a `u64` sample count, then the samples
//! as `(re, im)` pairs of `f64`.

use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::Path;

use num_complex::Complex64;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::spectral::{Domain, DualGrid, SpectralSignal};

const MAGIC: &[u8; 8] = b"RFTFIX01";

#[derive(Debug, Clone, PartialEq)]
pub struct Fixture {
    pub header: BTreeMap<String, String>,
    pub values: Vec<Complex64>,
}

/// Hex SHA-256 of a canonical description string.
pub fn spec_hash(description: &str) -> String {
    hex(&Sha256::digest(description.as_bytes()))
}

pub(crate) fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

impl Fixture {
    /// Fixture for a frequency-domain signal, tagged with its grid and a hash
    /// of whatever configuration produced it.
    pub fn from_signal(signal: &SpectralSignal, label: &str, description: &str) -> Self {
        let g = signal.grid();
        let mut header = BTreeMap::new();
        header.insert("label".into(), label.into());
        header.insert("n_samples".into(), g.n_samples().to_string());
        header.insert("dt".into(), format!("{:?}", g.dt()));
        header.insert("domain".into(), signal.domain().to_string());
        header.insert("spec_hash".into(), spec_hash(description));
        Self {
            header,
            values: signal.values().to_vec(),
        }
    }

    pub fn to_signal(&self) -> Result<SpectralSignal> {
        let field = |k: &str| {
            self.header
                .get(k)
                .ok_or_else(|| Error::Parse(format!("fixture header lacks `{k}`")))
        };
        let n: usize = field("n_samples")?
            .parse()
            .map_err(|_| Error::Parse("bad n_samples".into()))?;
        let dt: f64 = field("dt")?.parse().map_err(|_| Error::Parse("bad dt".into()))?;
        let domain = match field("domain")?.as_str() {
            "time" => Domain::Time,
            "frequency" => Domain::Frequency,
            other => return Err(Error::Parse(format!("unknown domain `{other}`"))),
        };
        SpectralSignal::new(DualGrid::new(n, dt)?, domain, self.values.clone())
    }

    pub fn write_to(&self, mut w: impl Write) -> Result<()> {
        let header: String = self.header.iter().map(|(k, v)| format!("{k}={v}\n")).collect();
        w.write_all(MAGIC)?;
        w.write_all(&(header.len() as u32).to_le_bytes())?;
        w.write_all(header.as_bytes())?;
        w.write_all(&(self.values.len() as u64).to_le_bytes())?;
        for v in &self.values {
            w.write_all(&v.re.to_le_bytes())?;
            w.write_all(&v.im.to_le_bytes())?;
        }
        Ok(())
    }

    pub fn read_from(mut r: impl Read) -> Result<Self> {
        let mut magic = [0u8; 8];
        r.read_exact(&mut magic)?;
        if &magic != MAGIC {
            return Err(Error::Parse("not a fixture file".into()));
        }
        let mut u32buf = [0u8; 4];
        r.read_exact(&mut u32buf)?;
        let mut text = vec![0u8; u32::from_le_bytes(u32buf) as usize];
        r.read_exact(&mut text)?;
        let text = String::from_utf8(text).map_err(|_| Error::Parse("fixture header is not UTF-8".into()))?;
        let mut header = BTreeMap::new();
        for line in text.lines() {
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad fixture header line `{line}`")))?;
            header.insert(k.to_string(), v.to_string());
        }
        let mut u64buf = [0u8; 8];
        r.read_exact(&mut u64buf)?;
        let count = u64::from_le_bytes(u64buf) as usize;
        let mut values = Vec::with_capacity(count);
        let mut f = [0u8; 8];
        for _ in 0..count {
            r.read_exact(&mut f)?;
            let re = f64::from_le_bytes(f);
            r.read_exact(&mut f)?;
            values.push(Complex64::new(re, f64::from_le_bytes(f)));
        }
        Ok(Self { header, values })
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let mut buf = Vec::new();
        self.write_to(&mut buf)?;
        std::fs::write(path, buf)?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::read_from(std::fs::File::open(path)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_bit_exact() {
        let g = DualGrid::new(16, 0.3).unwrap();
        let s = SpectralSignal::from_fn(g, Domain::Frequency, |w| {
            Complex64::new(w.sin() / 3.0, std::f64::consts::PI * w)
        })
        .unwrap();
        let f = Fixture::from_signal(&s, "test", "grid 16");
        let mut buf = Vec::new();
        f.write_to(&mut buf).unwrap();
        let back = Fixture::read_from(buf.as_slice()).unwrap();
        assert_eq!(back, f);
        let sig = back.to_signal().unwrap();
        for (a, b) in sig.values().iter().zip(s.values()) {
            assert_eq!(a.re.to_bits(), b.re.to_bits());
            assert_eq!(a.im.to_bits(), b.im.to_bits());
        }
        assert_eq!(sig.grid(), s.grid());
    }

    #[test]
    fn rejects_foreign_bytes() {
        assert!(Fixture::read_from(&b"NOTAFIXTURE....."[..]).is_err());
    }
}
