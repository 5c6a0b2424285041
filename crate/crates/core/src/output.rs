//! Structured output records and the table / JSON-lines / CSV writers.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use serde_json::{Map, Value as Json};

use crate::boundary::DRow;
use crate::numtheory::Triple;
use crate::shapes::{Discrepancy, ShapeCandidate, SideLen, TableRow, Verdict};
use crate::tiler::{PlacedTile, SearchResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RecordKind {
    Triple,
    Candidate,
    TableRow,
    SearchSummary,
    Discrepancy,
}

impl RecordKind {
    pub const ALL: [RecordKind; 5] = [
        RecordKind::Triple,
        RecordKind::Candidate,
        RecordKind::TableRow,
        RecordKind::SearchSummary,
        RecordKind::Discrepancy,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            RecordKind::Triple => "triple",
            RecordKind::Candidate => "candidate",
            RecordKind::TableRow => "table_row",
            RecordKind::SearchSummary => "search_summary",
            RecordKind::Discrepancy => "discrepancy",
        }
    }
}

impl FromStr for RecordKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RecordKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown record kind '{s}'"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Int(i64),
    Str(String),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Str(s) => f.write_str(s),
        }
    }
}

/// One output record: a kind plus an ordered flat payload.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OutputRecord {
    pub kind: RecordKind,
    pub payload: Vec<(String, Value)>,
}

impl OutputRecord {
    pub fn new(kind: RecordKind) -> Self {
        OutputRecord { kind, payload: Vec::new() }
    }

    pub fn int(mut self, key: &str, v: impl TryInto<i64>) -> Self {
        let v = v.try_into().unwrap_or(i64::MAX);
        self.payload.push((key.to_string(), Value::Int(v)));
        self
    }

    pub fn str(mut self, key: &str, v: impl Into<String>) -> Self {
        self.payload.push((key.to_string(), Value::Str(v.into())));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.payload.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn keys(&self) -> Vec<&str> {
        self.payload.iter().map(|(k, _)| k.as_str()).collect()
    }

    /// `{"kind": ..., "payload": {...}}` on one line.
    pub fn to_json(&self) -> String {
        let mut payload = Map::new();
        for (k, v) in &self.payload {
            let j = match v {
                Value::Int(i) => Json::from(*i),
                Value::Str(s) => Json::from(s.as_str()),
            };
            payload.insert(k.clone(), j);
        }
        let mut m = Map::new();
        m.insert("kind".into(), Json::from(self.kind.name()));
        m.insert("payload".into(), Json::Object(payload));
        Json::Object(m).to_string()
    }

    pub fn from_json(line: &str) -> Result<Self, String> {
        let j: Json = serde_json::from_str(line).map_err(|e| e.to_string())?;
        let kind = j
            .get("kind")
            .and_then(Json::as_str)
            .ok_or("missing kind")?
            .parse()?;
        let obj = j.get("payload").and_then(Json::as_object).ok_or("missing payload")?;
        let mut payload = Vec::with_capacity(obj.len());
        for (k, v) in obj {
            let v = match v {
                Json::String(s) => Value::Str(s.clone()),
                Json::Number(n) => Value::Int(n.as_i64().ok_or("non-integer number")?),
                _ => return Err(format!("unsupported value for '{k}'")),
            };
            payload.push((k.clone(), v));
        }
        Ok(OutputRecord { kind, payload })
    }
}

/// `p/q`, or plain `p` when integral.
pub fn side_text(s: &SideLen) -> String {
    if s.is_integer() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

fn side_record(r: OutputRecord, key: &str, s: &SideLen) -> OutputRecord {
    if s.is_integer() {
        r.int(key, *s.numer())
    } else {
        r.str(key, side_text(s))
    }
}

pub fn triple_record(t: &Triple) -> OutputRecord {
    OutputRecord::new(RecordKind::Triple).int("a", t.a).int("b", t.b).int("c", t.c)
}

pub fn candidate_record(c: &ShapeCandidate) -> OutputRecord {
    let t = c.oriented_tile();
    let (verdict, reason) = match &c.verdict {
        Verdict::Accept => ("accept", String::new()),
        Verdict::Reject(r) => ("reject", r.to_string()),
    };
    let r = OutputRecord::new(RecordKind::Candidate)
        .str("shape", c.shape.name())
        .int("a", t.a)
        .int("b", t.b)
        .int("c", t.c)
        .int("k", c.k)
        .int("n", c.n);
    let r = side_record(r, "x", &c.x);
    let r = side_record(r, "y", &c.y);
    let r = side_record(r, "z", &c.z);
    r.str("verdict", verdict).str("reason", reason)
}

pub fn equilateral_row_record(row: &TableRow) -> OutputRecord {
    let t = row.tile;
    OutputRecord::new(RecordKind::TableRow)
        .int("a", t.a)
        .int("b", t.b)
        .int("c", t.c)
        .int("four_d", row.four_d)
}

pub fn drow_record(len: u64, row: &DRow) -> OutputRecord {
    OutputRecord::new(RecordKind::TableRow)
        .int("length", len)
        .int("p", row.p)
        .int("d", row.d)
        .int("e", row.e)
}

pub fn discrepancy_record(d: &Discrepancy) -> OutputRecord {
    OutputRecord::new(RecordKind::Discrepancy)
        .str("topic", d.topic.clone())
        .str("stated", d.stated.clone())
        .str("computed", d.computed.clone())
}

pub fn search_summary_record(
    shape: &str,
    t: &Triple,
    k: u64,
    n: u64,
    res: &SearchResult,
    elapsed_ms: u128,
) -> OutputRecord {
    OutputRecord::new(RecordKind::SearchSummary)
        .str("shape", shape)
        .int("a", t.a)
        .int("b", t.b)
        .int("c", t.c)
        .int("k", k)
        .int("n", n)
        .str("status", res.status.to_string())
        .int("tilings", res.tilings.len())
        .int("nodes", res.nodes)
        .int("max_depth", res.max_depth)
        .int("elapsed_ms", elapsed_ms.min(i64::MAX as u128) as i64)
}

/// One placed tile of tiling `which`, with exact coordinates of its γ vertex.
pub fn tile_record(which: usize, idx: usize, p: &PlacedTile) -> OutputRecord {
    OutputRecord::new(RecordKind::TableRow)
        .int("tiling", which)
        .int("tile", idx)
        .str("gamma_x", p.anchor.x.to_string())
        .str("gamma_y", p.anchor.y.to_string())
        .int("dir_m", p.dir.m)
        .int("dir_n", p.dir.n)
        .int("mirrored", p.mirrored as i64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    JsonLines,
    Csv,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table" => Ok(Format::Table),
            "json-lines" => Ok(Format::JsonLines),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format '{other}' (expected table|json-lines|csv)")),
        }
    }
}

/// Writes records in `format`. Table and CSV output start a new header
/// whenever the kind or key set changes.
pub fn write_records<W: Write + ?Sized>(out: &mut W, format: Format, recs: &[OutputRecord]) -> io::Result<()> {
    match format {
        Format::JsonLines => {
            for r in recs {
                writeln!(out, "{}", r.to_json())?;
            }
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().flexible(true).from_writer(out);
            let mut last: Option<(RecordKind, Vec<&str>)> = None;
            for r in recs {
                let head = (r.kind, r.keys());
                if last.as_ref() != Some(&head) {
                    w.write_record(std::iter::once("kind").chain(head.1.iter().copied()))?;
                    last = Some(head);
                }
                let vals = r.payload.iter().map(|(_, v)| v.to_string());
                w.write_record(std::iter::once(r.kind.name().to_string()).chain(vals))?;
            }
            w.flush()?;
        }
        Format::Table => {
            let mut i = 0;
            while i < recs.len() {
                let head = (recs[i].kind, recs[i].keys());
                let mut j = i;
                while j < recs.len() && (recs[j].kind, recs[j].keys()) == head {
                    j += 1;
                }
                write_block(out, &recs[i..j])?;
                i = j;
            }
        }
    }
    Ok(())
}

fn write_block<W: Write + ?Sized>(out: &mut W, block: &[OutputRecord]) -> io::Result<()> {
    let keys = block[0].keys();
    let cells: Vec<Vec<String>> =
        block.iter().map(|r| r.payload.iter().map(|(_, v)| v.to_string()).collect()).collect();
    let widths: Vec<usize> = keys
        .iter()
        .enumerate()
        .map(|(c, k)| cells.iter().map(|row| row[c].chars().count()).chain([k.len()]).max().unwrap_or(0))
        .collect();
    let line = |row: Vec<&str>| {
        let padded: Vec<String> =
            row.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect();
        padded.join("  ").trim_end().to_string()
    };
    writeln!(out, "# {}", block[0].kind.name())?;
    writeln!(out, "{}", line(keys.clone()))?;
    for row in &cells {
        writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_roundtrip() {
        let r = OutputRecord::new(RecordKind::Candidate).int("n", 96).str("x", "15/2");
        let line = r.to_json();
        assert_eq!(line, r#"{"kind":"candidate","payload":{"n":96,"x":"15/2"}}"#);
        assert_eq!(OutputRecord::from_json(&line).unwrap(), r);
    }

    #[test]
    fn csv_headers_per_block() {
        let recs = vec![
            OutputRecord::new(RecordKind::Triple).int("a", 3),
            OutputRecord::new(RecordKind::Triple).int("a", 5),
            OutputRecord::new(RecordKind::Discrepancy).str("topic", "x, y"),
        ];
        let mut buf = Vec::new();
        write_records(&mut buf, Format::Csv, &recs).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "kind,a\ntriple,3\ntriple,5\nkind,topic\ndiscrepancy,\"x, y\"\n");
    }
}
