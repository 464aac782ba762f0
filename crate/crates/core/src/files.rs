//! File formats for colored graphs.
//!
//! JSON: `{"construction":..., "offsets":[...], "palette":[...],
//! "cells":[[payload..., colorId], ...]}` with an optional `"types"` list for
//! the rook layout. Cells are in vertex (row-major) order. CSV: one
//! `x,y[,z],color` line per vertex after a header.
//!
//! Reading a JSON file rebuilds the graph from its construction and checks
//! that the cells cover it exactly.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::colorings::{ColoredGraph, ConstructionSpec, VertexType};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct ColoredGraphFile {
    construction: ConstructionSpec,
    offsets: Vec<i64>,
    palette: Vec<String>,
    cells: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    types: Option<Vec<VertexType>>,
}

impl ColoredGraph {
    pub fn to_json(&self) -> Result<Value> {
        let construction = self.construction().cloned().ok_or_else(|| {
            Error::InvalidParameter("only constructed colorings can be written".into())
        })?;
        let g = self.graph();
        let cells = (0..g.vertex_count())
            .map(|v| {
                let mut row = g.payload(v).to_vec();
                row.push(self.color(v) as i64);
                row
            })
            .collect();
        let file = ColoredGraphFile {
            offsets: construction.offsets.clone(),
            construction,
            palette: self.palette().to_vec(),
            cells,
            types: self.types().map(|t| t.to_vec()),
        };
        Ok(serde_json::to_value(file).expect("colored graph serializes"))
    }

    pub fn to_json_string(&self) -> Result<String> {
        Ok(serde_json::to_string(&self.to_json()?).expect("json value prints"))
    }

    pub fn from_json_str(text: &str) -> Result<ColoredGraph> {
        let file: ColoredGraphFile = serde_json::from_str(text)
            .map_err(|e| Error::ColoringMismatch(format!("malformed coloring file: {e}")))?;
        let graph = file.construction.build_graph()?;
        let n = graph.vertex_count();
        if file.cells.len() != n {
            return Err(Error::ColoringMismatch(format!(
                "{} cells for a graph of {n} vertices",
                file.cells.len()
            )));
        }
        let mut colors = vec![u32::MAX; n];
        for cell in &file.cells {
            let (&c, payload) = cell
                .split_last()
                .ok_or_else(|| Error::ColoringMismatch("empty cell".into()))?;
            let v = graph
                .vertex_of(payload)
                .ok_or_else(|| Error::UnknownPoint(payload.to_vec()))?;
            if colors[v] != u32::MAX {
                return Err(Error::ColoringMismatch(format!(
                    "cell {payload:?} repeated"
                )));
            }
            if c < 0 {
                return Err(Error::ColoringMismatch(format!(
                    "negative color at {payload:?}"
                )));
            }
            colors[v] = c as u32;
        }
        let mut cg = ColoredGraph::new(graph, colors, file.palette)?;
        if let Some(types) = file.types {
            cg = cg.with_types(types)?;
        }
        Ok(cg.with_construction(file.construction))
    }

    /// `x,y[,z],color` rows (`i,j,color` for boards) after a header line.
    pub fn to_csv(&self) -> String {
        let g = self.graph();
        let names: &[&str] = if self.construction().is_some_and(|s| s.kind.is_lattice()) {
            &["x", "y", "z", "w"]
        } else {
            &["i", "j", "k", "l"]
        };
        let mut header: Vec<String> = (0..g.dim())
            .map(|i| names.get(i).map_or(format!("x{i}"), |s| s.to_string()))
            .collect();
        header.push("color".into());
        let mut out = header.join(",");
        out.push('\n');
        for v in 0..g.vertex_count() {
            for x in g.payload(v) {
                out.push_str(&x.to_string());
                out.push(',');
            }
            out.push_str(&self.color(v).to_string());
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use crate::colorings::{color, color_rook, ColoredGraph, ConstructionKind, ConstructionSpec};

    #[test]
    fn json_round_trip() {
        let spec = ConstructionSpec::lattice(ConstructionKind::Grid12, "0:3,0:3".parse().unwrap());
        let cg = color(&spec).unwrap();
        let text = cg.to_json_string().unwrap();
        assert!(text.starts_with(r#"{"construction":{"kind":"grid12","region""#));
        assert!(text.contains(r#""offsets":[1,0],"palette":["#));
        let back = ColoredGraph::from_json_str(&text).unwrap();
        assert_eq!(back, cg);

        let rook = color_rook(4).unwrap();
        let back = ColoredGraph::from_json_str(&rook.to_json_string().unwrap()).unwrap();
        assert_eq!(back, rook);
    }

    #[test]
    fn rejects_bad_files() {
        let spec =
            ConstructionSpec::lattice(ConstructionKind::Diagonal, "0:1,0:1".parse().unwrap());
        let text = color(&spec).unwrap().to_json_string().unwrap();
        let missing = text.replace("[1,1,", "[1,7,");
        assert!(ColoredGraph::from_json_str(&missing).is_err());
        assert!(ColoredGraph::from_json_str("{").is_err());
    }

    #[test]
    fn csv_rows() {
        let spec =
            ConstructionSpec::lattice(ConstructionKind::Cart3d28, "0:1,0:1,0:1".parse().unwrap());
        let csv = color(&spec).unwrap().to_csv();
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines[0], "x,y,z,color");
        assert_eq!(lines.len(), 9);
        assert!(color_rook(4)
            .unwrap()
            .to_csv()
            .starts_with("i,j,color\n0,0,0\n"));
    }
}
