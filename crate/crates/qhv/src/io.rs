//! Reader and writer for the plain-text front format used by hypervolume
//! benchmark archives: whitespace-separated coordinates, one point per
//! line, with `#` lines separating fronts. The `#` works both as a
//! separator and as a trailing terminator; blank lines are ignored.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::geometry::Front;

/// One front as read from disk: raw coordinate rows, not yet tied to a
/// frame or orientation.
pub type RawFront = Vec<Vec<f64>>;

/// Parses every front in `reader`. All points within one front must share a
/// dimension; coordinates must be finite numbers.
pub fn read_fronts<R: Read>(reader: R) -> Result<Vec<RawFront>> {
    let mut fronts = Vec::new();
    let mut current: RawFront = Vec::new();
    for (idx, line) in BufReader::new(reader).lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim_start();
        if trimmed.starts_with('#') {
            if !current.is_empty() {
                fronts.push(std::mem::take(&mut current));
            }
            continue;
        }
        if trimmed.trim_end().is_empty() {
            continue;
        }
        let mut coords = Vec::new();
        for token in trimmed.split_whitespace() {
            let value: f64 = token.parse().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("invalid number {token:?}"),
            })?;
            if !value.is_finite() {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("non-finite coordinate {token:?}"),
                });
            }
            coords.push(value);
        }
        if let Some(first) = current.first() {
            if coords.len() != first.len() {
                return Err(Error::Format {
                    line: lineno,
                    msg: format!(
                        "point has {} coordinates but the front started with {}",
                        coords.len(),
                        first.len()
                    ),
                });
            }
        }
        current.push(coords);
    }
    if !current.is_empty() {
        fronts.push(current);
    }
    Ok(fronts)
}

pub fn read_fronts_path<P: AsRef<Path>>(path: P) -> Result<Vec<RawFront>> {
    read_fronts(File::open(path)?)
}

/// Writes the front's points with 17 significant digits (round-trip exact
/// for doubles) followed by a terminating `#` line.
pub fn write_front<W: Write>(front: &Front, writer: &mut W) -> Result<()> {
    for p in front.points() {
        let row: Vec<String> = p.coords().iter().map(|c| format!("{c:.16e}")).collect();
        writeln!(writer, "{}", row.join(" "))?;
    }
    writeln!(writer, "#")?;
    Ok(())
}

pub fn write_front_path<P: AsRef<Path>>(front: &Front, path: P) -> Result<()> {
    let mut writer = BufWriter::new(File::create(path)?);
    write_front(front, &mut writer)?;
    writer.flush()?;
    Ok(())
}
