//! CSV form of a degree sweep, six decimals per real column.

use std::io::{Read, Write};

use ratbez_core::Verdict;

use crate::error::{Error, Result};
use crate::experiments::Table1Row;

pub const HEADER: [&str; 8] =
    ["n", "max_deriv", "t", "conjecture", "elevation_bound", "e", "runtime_s", "verdict"];

fn fixed6(x: f64) -> String {
    format!("{x:.6}")
}

pub fn write_table<W: Write>(rows: &[Table1Row], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(HEADER)?;
    for r in rows {
        w.write_record([
            r.degree.to_string(),
            fixed6(r.max_first_derivative),
            fixed6(r.argmax_t),
            fixed6(r.conjectured_bound),
            fixed6(r.elevation_bound),
            r.elevation_steps.to_string(),
            fixed6(r.runtime_seconds),
            r.verdict.to_string(),
        ])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn table_to_string(rows: &[Table1Row]) -> String {
    let mut buf = Vec::new();
    write_table(rows, &mut buf).expect("writing to memory cannot fail");
    String::from_utf8(buf).expect("CSV output is ASCII")
}

fn bad(message: String) -> Error {
    Error::Table(message)
}

/// Parses a table written by [`write_table`]. The header must match exactly.
pub fn read_table<R: Read>(input: R) -> Result<Vec<Table1Row>> {
    let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(input);
    let header = reader.headers()?.clone();
    if header.iter().ne(HEADER) {
        return Err(bad(format!(
            "unexpected table header `{}`",
            header.iter().collect::<Vec<_>>().join(",")
        )));
    }
    let mut rows = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let record = record?;
        let field = |k: usize| record.get(k).unwrap_or_default().trim();
        let real = |k: usize| {
            field(k).parse::<f64>().map_err(|_| {
                bad(format!("row {}: column `{}` is not a number", line + 1, HEADER[k]))
            })
        };
        let int = |k: usize| {
            field(k).parse::<usize>().map_err(|_| {
                bad(format!("row {}: column `{}` is not an integer", line + 1, HEADER[k]))
            })
        };
        rows.push(Table1Row {
            degree: int(0)?,
            max_first_derivative: real(1)?,
            argmax_t: real(2)?,
            conjectured_bound: real(3)?,
            elevation_bound: real(4)?,
            elevation_steps: int(5)?,
            runtime_seconds: real(6)?,
            verdict: field(7)
                .parse::<Verdict>()
                .map_err(|e| bad(format!("row {}: {e}", line + 1)))?,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Vec<Table1Row> {
        vec![
            Table1Row {
                degree: 2,
                max_first_derivative: 2.666_666_666_7,
                argmax_t: 0.5,
                conjectured_bound: 4.0,
                elevation_bound: 2.669_326_238_8,
                elevation_steps: 1000,
                runtime_seconds: 0.001_234_6,
                verdict: Verdict::Holds,
            },
            Table1Row {
                degree: 11,
                max_first_derivative: 22.152_423_323_8,
                argmax_t: 0.888_645_1,
                conjectured_bound: 22.0,
                elevation_bound: 22.285_016_461_1,
                elevation_steps: 1000,
                runtime_seconds: 0.02,
                verdict: Verdict::Violated,
            },
        ]
    }

    #[test]
    fn exact_layout() {
        let text = table_to_string(&sample());
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "n,max_deriv,t,conjecture,elevation_bound,e,runtime_s,verdict");
        assert_eq!(lines[1], "2,2.666667,0.500000,4.000000,2.669326,1000,0.001235,holds");
        assert_eq!(lines[2], "11,22.152423,0.888645,22.000000,22.285016,1000,0.020000,violated");
    }

    #[test]
    fn reads_back_rounded_values() {
        let rows = read_table(table_to_string(&sample()).as_bytes()).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[1].degree, 11);
        assert_eq!(rows[1].max_first_derivative, 22.152423);
        assert_eq!(rows[1].verdict, Verdict::Violated);
    }

    #[test]
    fn rejects_foreign_input() {
        assert!(read_table(r#"{"degree": 1}"#.as_bytes()).is_err());
        assert!(read_table("n,max_deriv\n2,3\n".as_bytes()).is_err());
        let bad_value =
            "n,max_deriv,t,conjecture,elevation_bound,e,runtime_s,verdict\n2,x,0,0,0,0,0,holds\n";
        assert!(read_table(bad_value.as_bytes()).is_err());
    }
}
