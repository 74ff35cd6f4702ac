use std::io::{Read, Write};

use super::{Interpolation, SampledPath};
use crate::error::{Error, Result};

/// Read a path from CSV with header `t,value`.
pub fn read_csv<R: Read>(reader: R, mode: Interpolation) -> Result<SampledPath> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(reader);
    let headers = rdr.headers().map_err(csv_error)?.clone();
    if headers.len() != 2 || &headers[0] != "t" || &headers[1] != "value" {
        return Err(Error::Csv(format!(
            "expected header `t,value`, found `{}`",
            headers.iter().collect::<Vec<_>>().join(",")
        )));
    }
    let mut times = Vec::new();
    let mut values = Vec::new();
    for (row, record) in rdr.records().enumerate() {
        let record = record.map_err(csv_error)?;
        let parse = |i: usize| -> Result<f64> {
            record[i]
                .parse::<f64>()
                .map_err(|e| Error::Csv(format!("row {}: {e}", row + 1)))
        };
        times.push(parse(0)?);
        values.push(parse(1)?);
    }
    SampledPath::new(times, values, mode)
}

pub fn write_csv<W: Write>(writer: W, path: &SampledPath) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(writer);
    wtr.write_record(["t", "value"]).map_err(csv_error)?;
    for (t, v) in path.times().iter().zip(path.values()) {
        wtr.write_record([t.to_string(), v.to_string()])
            .map_err(csv_error)?;
    }
    wtr.flush()?;
    Ok(())
}

fn csv_error(e: csv::Error) -> Error {
    if e.is_io_error() {
        match e.into_kind() {
            csv::ErrorKind::Io(io) => Error::Io(io),
            other => Error::Csv(format!("{other:?}")),
        }
    } else {
        Error::Csv(e.to_string())
    }
}
