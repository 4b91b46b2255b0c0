//! Rainbow file formats.
//!
//! JSON: `{"order": n, "rank": r, "colors": [[..], ..]}`, written with a fixed key order,
//! one matrix row per line and a trailing LF. Text: a header line `n r` followed by `n`
//! lines of `n` space-separated color ids.

use std::fmt::Write as _;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::rainbow::Rainbow;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RainbowFile {
    order: usize,
    rank: usize,
    colors: Vec<Vec<i64>>,
}

/// A parsed rainbow plus whether its color ids had to be renumbered.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub rainbow: Rainbow,
    pub renumbered: bool,
}

fn finish(order: usize, rank: usize, colors: Vec<Vec<i64>>) -> Result<Loaded> {
    if colors.len() != order {
        return Err(Error::Parse(format!(
            "declared order {order} but {} rows present",
            colors.len()
        )));
    }
    let rainbow = Rainbow::from_colors(&colors)?;
    if rainbow.rank() != rank {
        return Err(Error::Parse(format!(
            "declared rank {rank} but the matrix has {} colors",
            rainbow.rank()
        )));
    }
    let renumbered = rainbow
        .cells()
        .iter()
        .zip(colors.iter().flatten())
        .any(|(&c, &v)| i64::from(c) != v);
    Ok(Loaded {
        rainbow,
        renumbered,
    })
}

pub fn parse_json(input: &str) -> Result<Loaded> {
    let file: RainbowFile =
        serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))?;
    finish(file.order, file.rank, file.colors)
}

pub fn parse_text(input: &str) -> Result<Loaded> {
    let mut lines = input.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input".into()))?;
    let nums = |line: &str| -> Result<Vec<i64>> {
        line.split_whitespace()
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|e| Error::Parse(format!("bad integer {t:?}: {e}")))
            })
            .collect()
    };
    let head = nums(header)?;
    let [order, rank] = head[..] else {
        return Err(Error::Parse("header must be \"n r\"".into()));
    };
    if order < 0 || rank < 0 {
        return Err(Error::Parse("negative order or rank".into()));
    }
    let colors = lines.map(nums).collect::<Result<Vec<_>>>()?;
    finish(order as usize, rank as usize, colors)
}

/// Parses either format, choosing JSON when the first non-blank character is `{`.
pub fn parse_auto(input: &str) -> Result<Loaded> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}

fn row_list(row: &[usize]) -> String {
    row.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// JSON object text without the trailing newline, indented by `indent` spaces.
pub(crate) fn json_object(x: &Rainbow, indent: usize) -> String {
    let pad = " ".repeat(indent);
    let mut out = String::new();
    let _ = writeln!(out, "{{");
    let _ = writeln!(out, "{pad}  \"order\": {},", x.order());
    let _ = writeln!(out, "{pad}  \"rank\": {},", x.rank());
    let rows = x.color_rows();
    if rows.is_empty() {
        let _ = writeln!(out, "{pad}  \"colors\": []");
    } else {
        let _ = writeln!(out, "{pad}  \"colors\": [");
        for (i, row) in rows.iter().enumerate() {
            let sep = if i + 1 == rows.len() { "" } else { "," };
            let _ = writeln!(out, "{pad}    [{}]{sep}", row_list(row));
        }
        let _ = writeln!(out, "{pad}  ]");
    }
    let _ = write!(out, "{pad}}}");
    out
}

pub fn to_json(x: &Rainbow) -> String {
    let mut s = json_object(x, 0);
    s.push('\n');
    s
}

pub fn to_text(x: &Rainbow) -> String {
    let mut out = format!("{} {}\n", x.order(), x.rank());
    for row in x.color_rows() {
        let line: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
