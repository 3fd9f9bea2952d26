//! Plain-text, Graphviz and JSON serialisations of labelled graphs.
//!
//! All formats list vertices by their 0-based index into the legend, emit
//! edges as `u < v` in sorted order and end with a newline.

use std::fmt::Display;
use std::io::Write;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    /// `# legend: idx label` header lines, then one `u v` line per edge.
    Edges,
    /// `graph G { ... }` with labelled nodes.
    Dot,
    /// `{"n":..,"vertices":[..],"edges":[[u,v],..]}`.
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edges" => Ok(Format::Edges),
            "dot" => Ok(Format::Dot),
            "json" => Ok(Format::Json),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Serialize)]
struct JsonGraph {
    n: usize,
    vertices: Vec<String>,
    edges: Vec<[usize; 2]>,
}

pub fn export<L: Display, W: Write>(g: &Graph<L>, format: Format, mut sink: W) -> Result<()> {
    match format {
        Format::Edges => {
            for (v, label) in g.legend().iter().enumerate() {
                writeln!(sink, "# legend: {v} {label}")?;
            }
            for (u, v) in g.edges() {
                writeln!(sink, "{u} {v}")?;
            }
        }
        Format::Dot => {
            writeln!(sink, "graph G {{")?;
            for (v, label) in g.legend().iter().enumerate() {
                writeln!(sink, "  {v} [label=\"{}\"];", escape(&label.to_string()))?;
            }
            for (u, v) in g.edges() {
                writeln!(sink, "  {u} -- {v};")?;
            }
            writeln!(sink, "}}")?;
        }
        Format::Json => {
            let doc = JsonGraph {
                n: g.n(),
                vertices: g.legend().iter().map(ToString::to_string).collect(),
                edges: g.edges().map(|(u, v)| [u, v]).collect(),
            };
            serde_json::to_writer(&mut sink, &doc)?;
            writeln!(sink)?;
        }
    }
    sink.flush()?;
    Ok(())
}

pub fn export_to_string<L: Display>(g: &Graph<L>, format: Format) -> Result<String> {
    let mut buf = Vec::new();
    export(g, format, &mut buf)?;
    Ok(String::from_utf8(buf).expect("exports are UTF-8"))
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
