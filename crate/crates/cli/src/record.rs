//! The per-graph report shared by `compute`, `scan` and the cache.

use std::fmt;
use std::str::FromStr;

use anyhow::{bail, Result};
use icpart::coalition::{coalition_number, ic_number};
use icpart::graph6::encode_graph6;
use icpart::invariants::InvariantReport;
use icpart::Graph;
use serde::{Deserialize, Serialize};

/// Fixed CSV header; JSON-lines records use the same field names.
pub const CSV_HEADER: [&str; 12] = [
    "graph6",
    "n",
    "edges",
    "connected",
    "triangle_free",
    "girth",
    "alpha",
    "gamma_i",
    "chi",
    "idomatic",
    "ic",
    "coalition",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Marker {
    None,
    Skipped,
}

/// A solver result: a number, `"none"` when no partition exists, or
/// `"skipped"` above the order bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Count {
    Value(usize),
    Word(Marker),
}

impl Count {
    pub const NONE: Count = Count::Word(Marker::None);
    pub const SKIPPED: Count = Count::Word(Marker::Skipped);

    fn from_option(v: Option<usize>) -> Count {
        v.map_or(Count::NONE, Count::Value)
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Value(k) => write!(f, "{k}"),
            Count::Word(Marker::None) => f.write_str("none"),
            Count::Word(Marker::Skipped) => f.write_str("skipped"),
        }
    }
}

impl FromStr for Count {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Count> {
        match s {
            "none" => Ok(Count::NONE),
            "skipped" => Ok(Count::SKIPPED),
            _ => match s.parse() {
                Ok(k) => Ok(Count::Value(k)),
                Err(_) => bail!("expected a count, \"none\" or \"skipped\", got {s:?}"),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
    pub connected: bool,
    pub triangle_free: bool,
    pub girth: Option<usize>,
    pub alpha: usize,
    pub gamma_i: Option<usize>,
    pub chi: usize,
    pub idomatic: Option<usize>,
    pub ic: Count,
    pub coalition: Count,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Orders above which the exhaustive solvers are not attempted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub ic: usize,
    pub coalition: usize,
}

impl Default for Bounds {
    fn default() -> Bounds {
        Bounds {
            ic: 12,
            coalition: 10,
        }
    }
}

impl ScanRecord {
    pub fn compute(g: &Graph, bounds: Bounds) -> ScanRecord {
        let n = g.order();
        let inv = InvariantReport::of(g);
        let (ic, witness) = if n > bounds.ic {
            (Count::SKIPPED, None)
        } else {
            let result = ic_number(g).expect("order checked against the solver bound");
            (
                Count::from_option(result.value()),
                result.witness().map(|w| w.to_string()),
            )
        };
        let coalition = if n > bounds.coalition {
            Count::SKIPPED
        } else {
            Count::from_option(coalition_number(g).expect("order checked against the solver bound"))
        };
        ScanRecord {
            graph6: encode_graph6(g),
            n,
            edges: g.edge_count(),
            connected: g.is_connected(),
            triangle_free: g.is_triangle_free(),
            girth: inv.girth,
            alpha: inv.alpha,
            gamma_i: inv.gamma_i,
            chi: inv.chi,
            idomatic: inv.idomatic,
            ic,
            coalition,
            witness,
        }
    }

    pub fn has_skipped(&self) -> bool {
        self.ic == Count::SKIPPED || self.coalition == Count::SKIPPED
    }

    /// Masks solver fields above `bounds`, so output depends only on the
    /// options and not on what the cache happened to hold.
    pub fn within(mut self, bounds: Bounds) -> ScanRecord {
        if self.n > bounds.ic {
            self.ic = Count::SKIPPED;
            self.witness = None;
        }
        if self.n > bounds.coalition {
            self.coalition = Count::SKIPPED;
        }
        self
    }

    pub fn csv_fields(&self) -> [String; 12] {
        let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        [
            self.graph6.clone(),
            self.n.to_string(),
            self.edges.to_string(),
            self.connected.to_string(),
            self.triangle_free.to_string(),
            opt(self.girth),
            self.alpha.to_string(),
            opt(self.gamma_i),
            self.chi.to_string(),
            opt(self.idomatic),
            self.ic.to_string(),
            self.coalition.to_string(),
        ]
    }

    /// Inverse of [`ScanRecord::csv_fields`]; the witness is not a CSV column.
    #[cfg(test)]
    pub fn from_csv_fields(fields: &[&str]) -> Result<ScanRecord> {
        let [graph6, n, edges, connected, triangle_free, girth, alpha, gamma_i, chi, idomatic, ic, coalition] =
            fields
        else {
            bail!("expected {} fields, got {}", CSV_HEADER.len(), fields.len());
        };
        let opt = |s: &str| -> Result<Option<usize>> {
            Ok(if s.is_empty() { None } else { Some(s.parse()?) })
        };
        Ok(ScanRecord {
            graph6: graph6.to_string(),
            n: n.parse()?,
            edges: edges.parse()?,
            connected: connected.parse()?,
            triangle_free: triangle_free.parse()?,
            girth: opt(girth)?,
            alpha: alpha.parse()?,
            gamma_i: opt(gamma_i)?,
            chi: chi.parse()?,
            idomatic: opt(idomatic)?,
            ic: ic.parse()?,
            coalition: coalition.parse()?,
            witness: None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use icpart::graph6::parse_graph6;

    #[test]
    fn count_serialization() {
        assert_eq!(serde_json::to_string(&Count::Value(3)).unwrap(), "3");
        assert_eq!(serde_json::to_string(&Count::NONE).unwrap(), "\"none\"");
        assert_eq!(
            serde_json::from_str::<Count>("\"skipped\"").unwrap(),
            Count::SKIPPED
        );
        assert_eq!("7".parse::<Count>().unwrap(), Count::Value(7));
        assert!("seven".parse::<Count>().is_err());
    }

    #[test]
    fn k2_record() {
        let r = ScanRecord::compute(&parse_graph6("A_").unwrap(), Bounds::default());
        assert_eq!(
            (r.n, r.edges, r.ic, r.coalition),
            (2, 1, Count::Value(2), Count::Value(2))
        );
        let fields = r.csv_fields();
        let back =
            ScanRecord::from_csv_fields(&fields.iter().map(String::as_str).collect::<Vec<_>>())
                .unwrap();
        assert_eq!(back, ScanRecord { witness: None, ..r });
    }

    #[test]
    fn bounds_mask_solver_fields() {
        let g = parse_graph6("Bw").unwrap();
        let tight = Bounds {
            ic: 2,
            coalition: 2,
        };
        let r = ScanRecord::compute(&g, tight);
        assert!(r.has_skipped() && r.witness.is_none());
        let full = ScanRecord::compute(&g, Bounds::default());
        assert_eq!(full.clone().within(tight), r);
    }
}
