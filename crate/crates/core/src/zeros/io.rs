//! Text and binary zero-table formats.
//!
//! Text: one decimal ordinate per line, ascending. Lines starting with `#` carry
//! metadata as `key = value`; `accuracy` and `height` are recognized.
//!
//! Binary: `ZETZ1`, a little-endian `u64` count, that many little-endian `f64`
//! ordinates, then `height` and `accuracy` as `f64`.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use super::{ZeroList, ZeroSource};
use crate::error::{Error, Result};

const MAGIC: &[u8; 5] = b"ZETZ1";

fn parse_meta(line: &str) -> Option<(String, String)> {
    let body = line.trim_start_matches('#').trim();
    let (k, v) = body
        .split_once('=')
        .or_else(|| body.split_once(':'))
        .or_else(|| body.split_once(char::is_whitespace))?;
    Some((k.trim().to_ascii_lowercase(), v.trim().to_string()))
}

/// Reads a text table. `accuracy` overrides any `# accuracy` line; one of the two is required.
pub fn load_text(path: impl AsRef<Path>, accuracy: Option<f64>) -> Result<ZeroList> {
    let reader = BufReader::new(File::open(path)?);
    let mut gammas = Vec::new();
    let mut meta_acc = None;
    let mut meta_height = None;
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        if t.starts_with('#') {
            if let Some((k, v)) = parse_meta(t) {
                let parsed = || {
                    v.parse::<f64>().map_err(|e| Error::Parse {
                        line: i + 1,
                        msg: format!("bad {k} value: {e}"),
                    })
                };
                match k.as_str() {
                    "accuracy" => meta_acc = Some(parsed()?),
                    "height" => meta_height = Some(parsed()?),
                    _ => {}
                }
            }
            continue;
        }
        let g = t.parse::<f64>().map_err(|e| Error::Parse {
            line: i + 1,
            msg: format!("{e}: {t:?}"),
        })?;
        gammas.push(g);
    }
    if gammas.is_empty() {
        return Err(Error::ZeroTable("no ordinates in file".into()));
    }
    let accuracy = accuracy
        .or(meta_acc)
        .ok_or_else(|| Error::ZeroTable("accuracy not declared".into()))?;
    let height = meta_height.unwrap_or(*gammas.last().unwrap());
    ZeroList::new(gammas, height, accuracy, ZeroSource::File)
}

pub fn save_text(zl: &ZeroList, path: impl AsRef<Path>) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "# accuracy = {:e}", zl.accuracy())?;
    writeln!(w, "# height = {}", zl.height())?;
    for g in zl.gammas() {
        writeln!(w, "{g}")?;
    }
    w.flush()?;
    Ok(())
}

pub fn save_binary(zl: &ZeroList, path: impl AsRef<Path>) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    w.write_all(MAGIC)?;
    w.write_all(&(zl.count() as u64).to_le_bytes())?;
    for g in zl.gammas() {
        w.write_all(&g.to_le_bytes())?;
    }
    w.write_all(&zl.height().to_le_bytes())?;
    w.write_all(&zl.accuracy().to_le_bytes())?;
    w.flush()?;
    Ok(())
}

fn read_f64(r: &mut impl Read) -> Result<f64> {
    let mut b = [0u8; 8];
    r.read_exact(&mut b)?;
    Ok(f64::from_le_bytes(b))
}

pub fn load_binary(path: impl AsRef<Path>) -> Result<ZeroList> {
    let mut r = BufReader::new(File::open(path)?);
    let mut magic = [0u8; 5];
    r.read_exact(&mut magic)?;
    if &magic != MAGIC {
        return Err(Error::ZeroTable("missing ZETZ1 header".into()));
    }
    let mut cnt = [0u8; 8];
    r.read_exact(&mut cnt)?;
    let n = u64::from_le_bytes(cnt) as usize;
    let mut gammas = Vec::with_capacity(n.min(1 << 28));
    for _ in 0..n {
        gammas.push(read_f64(&mut r)?);
    }
    let height = read_f64(&mut r)?;
    let accuracy = read_f64(&mut r)?;
    ZeroList::new(gammas, height, accuracy, ZeroSource::File)
}

/// Loads either format, detected by the header. A given `accuracy` replaces the stored one.
pub fn load_zeros(path: impl AsRef<Path>, accuracy: Option<f64>) -> Result<ZeroList> {
    let path = path.as_ref();
    let mut head = [0u8; 5];
    let is_binary = {
        let mut f = File::open(path)?;
        f.read(&mut head)? == 5 && &head == MAGIC
    };
    if is_binary {
        let zl = load_binary(path)?;
        match accuracy {
            Some(a) => ZeroList::new(zl.gammas, zl.height, a, ZeroSource::File),
            None => Ok(zl),
        }
    } else {
        load_text(path, accuracy)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_parsing() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("z.txt");
        std::fs::write(&p, "14.134725142\n21.022039639\n25.010857580\n").unwrap();
        let zl = load_text(&p, Some(1e-9)).unwrap();
        assert_eq!(zl.count(), 3);
        assert_eq!(zl.height(), 25.010857580);
        assert!(load_text(&p, None).is_err());

        std::fs::write(&p, "# accuracy = 1e-9\n# height: 26\n14.134725142\n\n21.022039639\n").unwrap();
        let zl = load_text(&p, None).unwrap();
        assert_eq!((zl.count(), zl.height(), zl.accuracy()), (2, 26.0, 1e-9));

        std::fs::write(&p, "").unwrap();
        assert!(load_text(&p, Some(1e-9)).is_err());
        std::fs::write(&p, "21.0\n14.5\n").unwrap();
        assert!(load_text(&p, Some(1e-9)).is_err());
        std::fs::write(&p, "14.5\nabc\n").unwrap();
        assert!(matches!(load_text(&p, Some(1e-9)), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn round_trips_are_bit_exact() {
        let dir = tempfile::tempdir().unwrap();
        let zl = ZeroList::builtin(500.0).unwrap();
        let b = dir.path().join("z.bin");
        save_binary(&zl, &b).unwrap();
        let back = load_zeros(&b, None).unwrap();
        assert_eq!(back.gammas(), zl.gammas());
        assert_eq!(back.height().to_bits(), zl.height().to_bits());
        assert_eq!(back.accuracy().to_bits(), zl.accuracy().to_bits());
        let t = dir.path().join("z.txt");
        save_text(&back, &t).unwrap();
        let again = load_zeros(&t, None).unwrap();
        assert!(again.gammas().iter().zip(zl.gammas()).all(|(a, b)| a.to_bits() == b.to_bits()));
        assert_eq!(again.height(), 500.0);
    }
}
