//! CSV form of a traced set: one row per maximizer, sorted by component and
//! radius.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tracer::MaxModSet;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceRow {
    pub component_id: usize,
    pub r: f64,
    pub theta: f64,
    pub x: f64,
    pub y: f64,
    pub modulus_value: f64,
    pub censored_inner: bool,
    pub censored_outer: bool,
    pub is_singleton: bool,
}

pub fn rows(set: &MaxModSet) -> Vec<TraceRow> {
    set.components
        .iter()
        .enumerate()
        .flat_map(|(id, c)| {
            c.points.iter().map(move |p| TraceRow {
                component_id: id,
                r: p.r,
                theta: p.theta,
                x: p.x(),
                y: p.y(),
                modulus_value: p.value,
                censored_inner: c.censored_inner,
                censored_outer: c.censored_outer,
                is_singleton: c.is_singleton,
            })
        })
        .collect()
}

pub fn write_csv<W: Write>(set: &MaxModSet, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows(set) {
        w.serialize(row).map_err(csv_error)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<TraceRow>> {
    csv::Reader::from_reader(input)
        .deserialize()
        .map(|r| r.map_err(csv_error))
        .collect()
}

fn csv_error(e: csv::Error) -> Error {
    if e.is_io_error() {
        match e.into_kind() {
            csv::ErrorKind::Io(io) => Error::Io(io),
            other => Error::Parse(format!("{other:?}")),
        }
    } else {
        Error::Parse(e.to_string())
    }
}
