//! File formats and text grammars.
//!
//! * arrangement files: `{"rows": n, "cols": d, "entries": [["-8", "3/2", ..], ..]}`
//! * complex reports: the enumerated cells plus per-dimension counts
//! * types: `({2},{1,2},{1},{1,3})`, columns left to right, rows one-based
//! * partitions: `({1,3}|{2})`, blocks left to right
//! * points: `0,-3/2,7`

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use tropical_complex::{Arrangement, BoolMatrix, FacePoset, OrderedSetPartition, Point, Scalar};

use crate::CliError;

/// On-disk form of an arrangement. Entries are strings so that rationals
/// never pass through floating point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementFile {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl ArrangementFile {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(format!("arrangement file: {e}")))
    }

    pub fn to_arrangement(&self) -> Result<Arrangement, CliError> {
        if self.entries.len() != self.rows {
            return Err(CliError::Parse(format!(
                "arrangement file declares {} rows but has {}",
                self.rows,
                self.entries.len()
            )));
        }
        let mut rows = Vec::with_capacity(self.rows);
        for (i, row) in self.entries.iter().enumerate() {
            if row.len() != self.cols {
                return Err(CliError::Parse(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    self.cols
                )));
            }
            let parsed = row
                .iter()
                .map(|v| {
                    v.parse::<Scalar>()
                        .map_err(|_| CliError::Parse(format!("entry {v:?} is not a rational")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(parsed);
        }
        Arrangement::from_rows(rows).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn from_arrangement(m: &Arrangement) -> Self {
        ArrangementFile {
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows())
                .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellRecord {
    /// Columns of the type as one-based row lists.
    #[serde(rename = "type")]
    pub ty: Vec<Vec<usize>>,
    pub dimension: usize,
    pub bounded: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexReport {
    pub rows: usize,
    pub cols: usize,
    pub cells: Vec<CellRecord>,
    /// Cell count per dimension, keyed by the dimension in decimal.
    pub summary: BTreeMap<String, usize>,
}

impl ComplexReport {
    pub fn from_poset(poset: &FacePoset) -> Self {
        let cells = poset
            .cells()
            .iter()
            .map(|c| CellRecord {
                ty: columns_one_based(c.type_matrix()),
                dimension: c.dimension(),
                bounded: c.is_bounded(),
            })
            .collect();
        let summary = poset
            .counts_by_dimension()
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect();
        ComplexReport {
            rows: poset.rows(),
            cols: poset.cols(),
            cells,
            summary,
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    /// Rebuilds the type matrices of the listed cells.
    pub fn types(&self) -> Result<Vec<BoolMatrix>, CliError> {
        self.cells
            .iter()
            .map(|c| {
                let cols: Vec<Vec<usize>> =
                    c.ty.iter()
                        .map(|col| col.iter().map(|i| i - 1).collect())
                        .collect();
                let refs: Vec<&[usize]> = cols.iter().map(Vec::as_slice).collect();
                BoolMatrix::from_columns(self.rows, &refs)
                    .map_err(|e| CliError::Parse(e.to_string()))
            })
            .collect()
    }
}

fn columns_one_based(t: &BoolMatrix) -> Vec<Vec<usize>> {
    (0..t.cols())
        .map(|j| {
            (0..t.rows())
                .filter(|&i| t.get(i, j))
                .map(|i| i + 1)
                .collect()
        })
        .collect()
}

/// Splits `( {..} SEP {..} SEP .. )` into one-based index lists.
fn parse_set_list(text: &str, separator: char, what: &str) -> Result<Vec<Vec<usize>>, CliError> {
    let err = |msg: &str| CliError::Parse(format!("{what} {text:?}: {msg}"));
    let body = text
        .trim()
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| err("expected surrounding parentheses"))?;
    let mut sets = Vec::new();
    let mut rest = body.trim_start();
    loop {
        let inner_start = rest.strip_prefix('{').ok_or_else(|| err("expected '{'"))?;
        let close = inner_start
            .find('}')
            .ok_or_else(|| err("unterminated '{'"))?;
        let inner = &inner_start[..close];
        let mut set = Vec::new();
        if !inner.trim().is_empty() {
            for item in inner.split(',') {
                let v: usize = item
                    .trim()
                    .parse()
                    .map_err(|_| err(&format!("{:?} is not an index", item.trim())))?;
                if v == 0 {
                    return Err(err("indices are one-based"));
                }
                set.push(v);
            }
        }
        sets.push(set);
        rest = inner_start[close + 1..].trim_start();
        if rest.is_empty() {
            break;
        }
        rest = rest
            .strip_prefix(separator)
            .ok_or_else(|| err(&format!("expected '{separator}' between sets")))?
            .trim_start();
    }
    Ok(sets)
}

/// Parses a type in column form over `n` rows.
pub fn parse_type(text: &str, n: usize) -> Result<BoolMatrix, CliError> {
    let sets = parse_set_list(text, ',', "type")?;
    let zero: Vec<Vec<usize>> = sets
        .iter()
        .map(|s| s.iter().map(|i| i - 1).collect())
        .collect();
    let refs: Vec<&[usize]> = zero.iter().map(Vec::as_slice).collect();
    BoolMatrix::from_columns(n, &refs).map_err(|e| CliError::Parse(format!("type {text:?}: {e}")))
}

/// Parses an ordered set partition of `[n]`.
pub fn parse_partition(text: &str, n: usize) -> Result<OrderedSetPartition, CliError> {
    let sets = parse_set_list(text, '|', "partition")?;
    let zero: Vec<Vec<usize>> = sets
        .iter()
        .map(|s| s.iter().map(|i| i - 1).collect())
        .collect();
    let refs: Vec<&[usize]> = zero.iter().map(Vec::as_slice).collect();
    OrderedSetPartition::from_blocks(n, &refs)
        .map_err(|e| CliError::Parse(format!("partition {text:?}: {e}")))
}

/// Parses comma-separated rational coordinates.
pub fn parse_point(text: &str) -> Result<Point, CliError> {
    let coords = text
        .split(',')
        .map(|c| {
            c.parse::<Scalar>().map_err(|_| {
                CliError::Parse(format!("point coordinate {:?} is not a rational", c.trim()))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Point::new(coords))
}
