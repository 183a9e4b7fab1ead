//! CSV layouts for labelings and orderings.
//!
//! Vertices are written in their `(i,j,k)` text form, which the CSV writer
//! quotes because of the embedded commas.
//!
//! * labeling: header `vertex,label`, rows sorted by label;
//! * ordering: header `position,vertex`, positions from 1. In the blocked
//!   layout every block is preceded by a comment line `# A(k)`.

use std::io::{Read, Write};
use std::str::FromStr;

use crate::construction::MatrixBlock;
use crate::error::{Error, Result};
use crate::graph::{HammingGraph, Vertex};
use crate::labeling::{Ordering, RadioLabeling};

fn csv_error(what: &'static str, e: impl std::fmt::Display) -> Error {
    Error::Parse {
        what,
        input: String::new(),
        reason: e.to_string(),
    }
}

pub fn read_labeling_csv<R: Read>(graph: &HammingGraph, reader: R) -> Result<RadioLabeling> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(reader);
    let headers = rdr.headers().map_err(|e| csv_error("labeling", e))?.clone();
    if headers.iter().collect::<Vec<_>>() != ["vertex", "label"] {
        return Err(Error::Parse {
            what: "labeling",
            input: headers.iter().collect::<Vec<_>>().join(","),
            reason: "expected header \"vertex,label\"".into(),
        });
    }
    let mut pairs = Vec::new();
    for record in rdr.records() {
        let record = record.map_err(|e| csv_error("labeling", e))?;
        let (Some(vertex), Some(label)) = (record.get(0), record.get(1)) else {
            return Err(csv_error("labeling", "row needs two fields"));
        };
        let vertex = Vertex::from_str(vertex)?;
        let label = label.parse::<i64>().map_err(|e| Error::Parse {
            what: "label",
            input: label.to_string(),
            reason: e.to_string(),
        })?;
        pairs.push((vertex, label));
    }
    RadioLabeling::from_pairs(graph, pairs)
}

pub fn write_labeling_csv<W: Write>(f: &RadioLabeling, writer: W) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(writer);
    let io = |e: csv::Error| csv_error("labeling", e);
    wtr.write_record(["vertex", "label"]).map_err(io)?;
    for (v, label) in f.by_label() {
        wtr.write_record([v.to_string(), label.to_string()])
            .map_err(io)?;
    }
    wtr.flush().map_err(|e| csv_error("labeling", e))
}

pub fn write_ordering_csv<W: Write>(ordering: &Ordering, writer: W) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(writer);
    let io = |e: csv::Error| csv_error("ordering", e);
    wtr.write_record(["position", "vertex"]).map_err(io)?;
    for (i, v) in ordering.iter().enumerate() {
        wtr.write_record([(i + 1).to_string(), v.to_string()])
            .map_err(io)?;
    }
    wtr.flush().map_err(|e| csv_error("ordering", e))
}

pub fn write_blocks_csv<W: Write>(blocks: &[MatrixBlock], mut writer: W) -> Result<()> {
    let io = |e: std::io::Error| csv_error("ordering", e);
    writeln!(writer, "position,vertex").map_err(io)?;
    let mut position = 1;
    for block in blocks {
        writeln!(writer, "# A({})", block.index).map_err(io)?;
        for v in block.rows() {
            writeln!(writer, "{position},\"{v}\"").map_err(io)?;
            position += 1;
        }
    }
    writer.flush().map_err(io)
}

pub fn read_ordering_csv<R: Read>(reader: R) -> Result<Ordering> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(reader);
    let mut vertices = Vec::new();
    for record in rdr.records() {
        let record = record.map_err(|e| csv_error("ordering", e))?;
        let v = record
            .get(1)
            .ok_or_else(|| csv_error("ordering", "row needs two fields"))?;
        vertices.push(Vertex::from_str(v)?);
    }
    Ok(Ordering::new(vertices))
}

/// A graph argument such as `"3x6x3"`, with its factors also sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphSpec {
    pub original: HammingGraph,
    pub sorted: HammingGraph,
    /// `permutation[i]` is the original axis that became sorted axis `i`.
    pub permutation: Vec<usize>,
}

impl GraphSpec {
    pub fn is_reordered(&self) -> bool {
        self.permutation.iter().enumerate().any(|(i, &p)| i != p)
    }

    /// Maps a vertex of the sorted graph back to the original factor order.
    pub fn unsort_vertex(&self, v: &Vertex) -> Vertex {
        let mut coords = vec![0; v.coords().len()];
        for (i, &axis) in self.permutation.iter().enumerate() {
            coords[axis] = v.coords()[i];
        }
        Vertex::new(coords)
    }
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let original: HammingGraph = s.parse()?;
        let mut permutation: Vec<usize> = (0..original.dimension()).collect();
        permutation.sort_by_key(|&a| original.factors()[a]);
        let sorted =
            HammingGraph::new(permutation.iter().map(|&a| original.factors()[a]).collect())?;
        Ok(Self {
            original,
            sorted,
            permutation,
        })
    }
}
