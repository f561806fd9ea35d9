//! Plain-text and JSON file formats for quadruples.
//!
//! Text: four lines `a`, `b`, `c`, `d` over `+`, `-` (and `0` for ternary
//! data). Several records may follow each other, separated by blank lines.
//! Lines starting with `#` are comments.
//!
//! JSON: a single `{"a": "++", "b": "+-", "c": "+", "d": "+"}` object, an
//! array of such objects, or one object per line.

use thiserror::Error;

use crate::seq::{QuadRecord, Seq, SeqError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {source}")]
    Line { line: usize, source: SeqError },
    #[error("found {count} sequence lines, expected a multiple of four")]
    RecordSize { count: usize },
    #[error("no quadruple found")]
    Empty,
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("record {record}: {source}")]
    Record { record: usize, source: SeqError },
}

fn parse_json(text: &str) -> Result<Vec<QuadRecord>, ParseError> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') {
        return serde_json::from_str(trimmed).map_err(|e| ParseError::Json(e.to_string()));
    }
    serde_json::Deserializer::from_str(trimmed)
        .into_iter::<QuadRecord>()
        .map(|r| r.map_err(|e| ParseError::Json(e.to_string())))
        .collect()
}

/// Parses every quadruple in `text`.
pub fn parse_quads(text: &str) -> Result<Vec<[Seq; 4]>, ParseError> {
    let trimmed = text.trim_start();
    let quads = if trimmed.starts_with('{') || trimmed.starts_with('[') {
        parse_json(text)?
            .iter()
            .enumerate()
            .map(|(record, r)| r.to_seqs().map_err(|source| ParseError::Record { record, source }))
            .collect::<Result<Vec<_>, _>>()?
    } else {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .map(|(line, l)| l.parse::<Seq>().map_err(|source| ParseError::Line { line, source }))
            .collect::<Result<Vec<_>, _>>()?;
        if lines.len() % 4 != 0 {
            return Err(ParseError::RecordSize { count: lines.len() });
        }
        lines
            .chunks_exact(4)
            .map(|c| [c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()])
            .collect()
    };
    if quads.is_empty() {
        return Err(ParseError::Empty);
    }
    Ok(quads)
}

/// Parses exactly the first quadruple in `text`.
pub fn parse_first_quad(text: &str) -> Result<[Seq; 4], ParseError> {
    Ok(parse_quads(text)?.swap_remove(0))
}

pub fn render_quad_text(seqs: [&Seq; 4]) -> String {
    seqs.iter().map(|s| format!("{s}\n")).collect()
}

/// Records separated by blank lines.
pub fn render_quads_text<'a>(quads: impl IntoIterator<Item = [&'a Seq; 4]>) -> String {
    quads
        .into_iter()
        .map(render_quad_text)
        .collect::<Vec<_>>()
        .join("\n")
}

/// One JSON object per line.
pub fn render_quads_jsonl<'a>(quads: impl IntoIterator<Item = [&'a Seq; 4]>) -> String {
    quads
        .into_iter()
        .map(|q| {
            serde_json::to_string(&QuadRecord::from_seqs(q)).expect("records serialize") + "\n"
        })
        .collect()
}
