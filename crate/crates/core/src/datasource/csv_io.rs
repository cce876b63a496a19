//! CSV layout: one header line `# source=...,self_dual=...,normalization=unitary,X=...,
//! omega_trivial=...,skipped=p1;p2`, then rows `p,a_re,a_im[,a_raw]`.

use std::fs;
use std::io::Write;
use std::path::Path;

use num_complex::Complex64;

use super::{Dataset, DatasetHeader, EigenvalueRecord};
use crate::error::{Error, Result};

fn csv_err(line: u64, reason: impl Into<String>) -> Error {
    Error::Csv { line, reason: reason.into() }
}

fn format_header(h: &DatasetHeader) -> Result<String> {
    if h.source.contains([',', '=', '\n']) {
        return Err(Error::InvalidArgument(format!("source `{}` may not contain ',', '=' or newlines", h.source)));
    }
    let skipped: Vec<String> = h.skipped.iter().map(u64::to_string).collect();
    Ok(format!(
        "# source={},self_dual={},normalization=unitary,X={},omega_trivial={},skipped={}",
        h.source,
        h.self_dual,
        h.x,
        h.omega_trivial,
        skipped.join(";")
    ))
}

fn parse_header(line: &str) -> Result<DatasetHeader> {
    let body = line.strip_prefix('#').ok_or_else(|| csv_err(1, "missing `# key=value,...` header"))?;
    let mut h = DatasetHeader { source: String::new(), self_dual: true, x: 0, omega_trivial: true, skipped: Vec::new() };
    let mut seen_x = false;
    for field in body.trim().split(',') {
        let (key, value) = field.split_once('=').ok_or_else(|| csv_err(1, format!("bad header field `{field}`")))?;
        let bool_value = |v: &str| v.parse::<bool>().map_err(|_| csv_err(1, format!("`{key}` must be true or false")));
        match key.trim() {
            "source" => h.source = value.to_string(),
            "self_dual" => h.self_dual = bool_value(value)?,
            "omega_trivial" => h.omega_trivial = bool_value(value)?,
            "normalization" if value == "unitary" => {}
            "normalization" => return Err(csv_err(1, format!("unsupported normalization `{value}`"))),
            "X" => {
                h.x = value.parse().map_err(|_| csv_err(1, format!("bad X `{value}`")))?;
                seen_x = true;
            }
            "skipped" => {
                h.skipped = value
                    .split(';')
                    .filter(|s| !s.is_empty())
                    .map(|s| s.parse().map_err(|_| csv_err(1, format!("bad skipped prime `{s}`"))))
                    .collect::<Result<_>>()?;
            }
            other => return Err(csv_err(1, format!("unknown header key `{other}`"))),
        }
    }
    if !seen_x {
        return Err(csv_err(1, "header lacks X"));
    }
    Ok(h)
}

pub fn write_csv_to<W: Write>(out: W, ds: &Dataset) -> Result<()> {
    let mut out = out;
    writeln!(out, "{}", format_header(&ds.header)?)?;
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(out);
    for r in &ds.records {
        let mut row = vec![r.p.to_string(), r.a.re.to_string(), r.a.im.to_string()];
        if let Some(raw) = r.raw {
            row.push(raw.to_string());
        }
        w.write_record(&row).map_err(|e| Error::Io(std::io::Error::other(e)))?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_csv(path: impl AsRef<Path>, ds: &Dataset) -> Result<()> {
    let file = fs::File::create(path)?;
    write_csv_to(std::io::BufWriter::new(file), ds)
}

pub fn read_csv_from(text: &str) -> Result<Dataset> {
    let (first, rest) = text.split_once('\n').unwrap_or((text, ""));
    let header = parse_header(first.trim_end_matches('\r'))?;
    let mut reader = csv::ReaderBuilder::new().has_headers(false).flexible(true).from_reader(rest.as_bytes());
    let mut records: Vec<EigenvalueRecord> = Vec::new();
    for row in reader.records() {
        let row = row.map_err(|e| csv_err(e.position().map_or(0, |p| p.line() + 1), e.to_string()))?;
        let line = row.position().map_or(0, |p| p.line() + 1);
        if !(3..=4).contains(&row.len()) {
            return Err(csv_err(line, format!("expected 3 or 4 fields, found {}", row.len())));
        }
        let p: u64 = row[0].trim().parse().map_err(|_| csv_err(line, format!("bad prime `{}`", &row[0])))?;
        if !super::is_prime(p) {
            return Err(csv_err(line, format!("{p} is not prime")));
        }
        if records.last().is_some_and(|prev| prev.p >= p) {
            return Err(csv_err(line, format!("primes must be strictly increasing (got {p})")));
        }
        if p > header.x {
            return Err(csv_err(line, format!("p = {p} exceeds X = {}", header.x)));
        }
        let num = |i: usize| -> Result<f64> {
            row[i].trim().parse().map_err(|_| csv_err(line, format!("bad number `{}`", &row[i])))
        };
        let mut rec = EigenvalueRecord::new(p, Complex64::new(num(1)?, num(2)?));
        if row.len() == 4 {
            rec.raw = Some(row[3].trim().parse().map_err(|_| csv_err(line, format!("bad raw value `{}`", &row[3])))?);
        }
        records.push(rec);
    }
    Dataset::new(header, records)
}

pub fn read_csv(path: impl AsRef<Path>) -> Result<Dataset> {
    read_csv_from(&fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn header() -> DatasetHeader {
        DatasetHeader { source: "ec(0 -1 1 -10 -20)".into(), self_dual: true, x: 100, omega_trivial: true, skipped: vec![11] }
    }

    fn roundtrip(ds: &Dataset) -> Dataset {
        let mut buf = Vec::new();
        write_csv_to(&mut buf, ds).unwrap();
        read_csv_from(std::str::from_utf8(&buf).unwrap()).unwrap()
    }

    #[test]
    fn empty_roundtrip() {
        let ds = Dataset::new(header(), vec![]).unwrap();
        assert_eq!(roundtrip(&ds), ds);
    }

    #[test]
    fn parses_plain_row() {
        let ds = read_csv_from("# source=x,self_dual=true,X=10\n5,0.447213,0.0\n").unwrap();
        assert_eq!(ds.records, vec![EigenvalueRecord::real(5, 0.447213)]);
    }

    #[test]
    fn rejects_non_prime_with_line_number() {
        let err = read_csv_from("# source=x,self_dual=true,X=10\n5,0.1,0\n9,0.2,0\n").unwrap_err();
        match err {
            Error::Csv { line, reason } => {
                assert_eq!(line, 3);
                assert!(reason.contains("not prime"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn malformed_rows() {
        for body in ["5,abc,0\n", "5,0.1\n", "7,0,0\n5,0,0\n", "11,0,0\n"] {
            let text = format!("# source=x,self_dual=true,X=10\n{body}");
            assert!(matches!(read_csv_from(&text), Err(Error::Csv { .. })), "{body}");
        }
        assert!(read_csv_from("5,0.1,0\n").is_err());
    }

    #[test]
    fn header_with_comma_in_source_is_refused() {
        let mut h = header();
        h.source = "a,b".into();
        let ds = Dataset { header: h, records: vec![] };
        assert!(write_csv_to(Vec::new(), &ds).is_err());
    }

    proptest! {
        #[test]
        fn roundtrip_is_identity(values in proptest::collection::vec((-2.0f64..2.0, -2.0f64..2.0, proptest::option::of(-1000i128..1000)), 0..25)) {
            let primes = crate::datasource::first_primes(values.len());
            let records = primes.iter().zip(&values).map(|(&p, &(re, im, raw))| {
                EigenvalueRecord { p, a: Complex64::new(re, im), omega_p: None, raw }
            }).collect();
            let ds = Dataset::new(header(), records).unwrap();
            prop_assert_eq!(roundtrip(&ds), ds);
        }
    }
}
