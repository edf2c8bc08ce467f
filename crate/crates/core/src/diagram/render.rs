use std::collections::BTreeMap;
use std::fmt::Write;
use std::str::FromStr;

use serde::Serialize;

use super::{Cell, Diagram, DiagramSource};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Json,
}

impl FromStr for RenderFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ascii" => Ok(Self::Ascii),
            "json" => Ok(Self::Json),
            other => Err(Error::InvalidParameter(format!("unknown render format {other:?}"))),
        }
    }
}

#[derive(Serialize)]
struct DiagramJson<'a> {
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    modulus: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed_set: Option<&'a [u64]>,
    steps: &'a [u64],
    weights: &'a [u64],
    points: &'a [Cell],
}

pub(crate) fn json_value(d: &Diagram) -> serde_json::Value {
    let doc = match &d.source {
        DiagramSource::Digraph { modulus, steps, weights } => DiagramJson {
            kind: "mdd",
            modulus: Some(*modulus),
            closed_set: None,
            steps,
            weights,
            points: &d.cells,
        },
        DiagramSource::ClosedSet { generators, elements } => DiagramJson {
            kind: "lshape",
            modulus: None,
            closed_set: Some(elements),
            steps: generators,
            weights: generators,
            points: &d.cells,
        },
    };
    serde_json::to_value(doc).expect("diagram serializes")
}

pub(crate) fn json(d: &Diagram) -> String {
    json_value(d).to_string()
}

/// One text grid per slice: `x` grows to the right, `y` grows upwards, and
/// each cell shows its class label.
pub(crate) fn ascii(d: &Diagram) -> Result<String> {
    let k = d.dimension;
    if !(1..=3).contains(&k) {
        return Err(Error::UnsupportedRender(k));
    }
    let width = d.cells.iter().map(|c| c.class.to_string().len()).max().unwrap_or(1);
    let coord = |c: &Cell, i: usize| c.coords.coords().get(i).copied().unwrap_or(0);
    let mut slices: BTreeMap<u32, BTreeMap<(u32, u32), u64>> = BTreeMap::new();
    for c in &d.cells {
        slices.entry(coord(c, 2)).or_default().insert((coord(c, 0), coord(c, 1)), c.class);
    }
    let mut out = String::new();
    for (z, grid) in &slices {
        if k == 3 {
            writeln!(out, "z = {z}").unwrap();
        }
        let max_x = grid.keys().map(|&(x, _)| x).max().unwrap_or(0);
        let max_y = grid.keys().map(|&(_, y)| y).max().unwrap_or(0);
        for y in (0..=max_y).rev() {
            let row: Vec<String> = (0..=max_x)
                .map(|x| match grid.get(&(x, y)) {
                    Some(label) => format!("{label:>width$}"),
                    None => " ".repeat(width),
                })
                .collect();
            writeln!(out, "{}", row.join(" ").trim_end()).unwrap();
        }
    }
    Ok(out)
}
