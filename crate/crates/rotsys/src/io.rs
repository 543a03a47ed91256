//! Bit-exact readers and writers for embedding catalogs.
//!
//! Three formats are supported:
//!
//! - surftri ascii: one embedding per line, order followed by
//!   comma-separated alphabetic cyclic adjacency lists, e.g.
//!   `4 bcd,adc,abd,acb` ('a' is vertex 1).
//! - planar_code: optional `>>planar_code<<` header, then per embedding an
//!   order byte and, for each vertex, its neighbors as 1-based bytes
//!   terminated by 0.
//! - embedding text: first line `order genus`, then one line per vertex
//!   `v: cyclic neighbor list` with 0-based labels. The genus field is
//!   redundant and revalidated on parse.
//!
//! Parsers reject asymmetric adjacency and duplicate neighbors with
//! positioned errors; nothing is silently repaired.

use crate::embedding::{Embedding, EmbeddingError};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IoError {
    #[error("line {line}, column {column}: {message}")]
    Text { line: usize, column: usize, message: String },
    #[error("byte offset {offset}: {message}")]
    Binary { offset: usize, message: String },
    #[error("embedding of order {0} cannot be written with alphabetic labels (max 26)")]
    OrderTooLargeForAlphabet(usize),
    #[error("line {line}: {source}")]
    Embedding { line: usize, source: EmbeddingError },
}

fn text_err(line: usize, column: usize, message: impl Into<String>) -> IoError {
    IoError::Text { line, column, message: message.into() }
}

fn bin_err(offset: usize, message: impl Into<String>) -> IoError {
    IoError::Binary { offset, message: message.into() }
}

/// Parses one surftri line such as `4 bcd,adc,abd,acb`.
pub fn parse_surftri_line(text: &str) -> Result<Embedding, IoError> {
    parse_surftri_line_at(text, 1)
}

fn parse_surftri_line_at(text: &str, line: usize) -> Result<Embedding, IoError> {
    let text = text.trim_end_matches(['\r', '\n']);
    let space = text
        .find(' ')
        .ok_or_else(|| text_err(line, 1, "expected `<order> <adjacency lists>`"))?;
    let order: usize = text[..space]
        .parse()
        .map_err(|_| text_err(line, 1, format!("invalid order `{}`", &text[..space])))?;
    if order == 0 {
        return Err(text_err(line, 1, "order must be at least 1"));
    }
    if order > 26 {
        return Err(text_err(line, 1, format!("order {order} exceeds alphabetic range 26")));
    }
    let lists_at = space + 1;
    let lists: Vec<&str> = text[lists_at..].split(',').collect();
    if lists.len() != order {
        return Err(text_err(
            line,
            lists_at + 1,
            format!("expected {order} adjacency lists, found {}", lists.len()),
        ));
    }
    let mut rotation: Vec<Vec<usize>> = Vec::with_capacity(order);
    let mut column = lists_at + 1;
    for (v, list) in lists.iter().enumerate() {
        let mut row = Vec::with_capacity(list.len());
        for (k, ch) in list.chars().enumerate() {
            let col = column + k;
            if !ch.is_ascii_lowercase() {
                return Err(text_err(line, col, format!("invalid label `{ch}`")));
            }
            let w = (ch as u8 - b'a') as usize;
            if w >= order {
                return Err(text_err(
                    line,
                    col,
                    format!("label `{ch}` is out of range for order {order}"),
                ));
            }
            if w == v {
                return Err(text_err(line, col, format!("vertex {} lists itself", v + 1)));
            }
            if row.contains(&w) {
                return Err(text_err(
                    line,
                    col,
                    format!("vertex {} lists `{ch}` twice", v + 1),
                ));
            }
            row.push(w);
        }
        rotation.push(row);
        column += list.len() + 1;
    }
    Embedding::from_rotations(rotation).map_err(|source| IoError::Embedding { line, source })
}

/// Writes one surftri line; exact inverse of [`parse_surftri_line`].
pub fn write_surftri_line(e: &Embedding) -> Result<String, IoError> {
    let order = e.order();
    if order > 26 {
        return Err(IoError::OrderTooLargeForAlphabet(order));
    }
    let mut out = format!("{order} ");
    for v in 0..order {
        if v > 0 {
            out.push(',');
        }
        for &w in e.rotation(v) {
            out.push((b'a' + w as u8) as char);
        }
    }
    Ok(out)
}

/// Parses a whole surftri catalog, one embedding per nonempty line.
pub fn parse_surftri(text: &str) -> Result<Vec<Embedding>, IoError> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        out.push(parse_surftri_line_at(line, idx + 1)?);
    }
    Ok(out)
}

pub fn write_surftri(embeddings: &[Embedding]) -> Result<String, IoError> {
    let mut out = String::new();
    for e in embeddings {
        out.push_str(&write_surftri_line(e)?);
        out.push('\n');
    }
    Ok(out)
}

pub const PLANAR_CODE_HEADER: &[u8] = b">>planar_code<<";

/// Parses a planar_code stream (header optional) into embeddings in file
/// order.
pub fn parse_planar_code(bytes: &[u8]) -> Result<Vec<Embedding>, IoError> {
    let mut at = 0usize;
    if bytes.starts_with(b">>") {
        if !bytes.starts_with(PLANAR_CODE_HEADER) {
            return Err(bin_err(0, "unrecognized header"));
        }
        at = PLANAR_CODE_HEADER.len();
    }
    let mut out = Vec::new();
    while at < bytes.len() {
        let record_at = at;
        let order = bytes[at] as usize;
        if order == 0 {
            return Err(bin_err(at, "order byte is zero"));
        }
        if order > crate::graph::MAX_ORDER {
            return Err(bin_err(at, format!("order {order} exceeds supported maximum 64")));
        }
        at += 1;
        let mut rotation: Vec<Vec<usize>> = Vec::with_capacity(order);
        for v in 0..order {
            let mut row = Vec::new();
            loop {
                let b = *bytes
                    .get(at)
                    .ok_or_else(|| bin_err(at, "truncated record: expected neighbor byte"))?;
                at += 1;
                if b == 0 {
                    break;
                }
                let w = (b - 1) as usize;
                if w >= order {
                    return Err(bin_err(
                        at - 1,
                        format!("neighbor {b} out of range for order {order}"),
                    ));
                }
                if w == v {
                    return Err(bin_err(at - 1, format!("vertex {} lists itself", v + 1)));
                }
                if row.contains(&w) {
                    return Err(bin_err(
                        at - 1,
                        format!("vertex {} lists neighbor {b} twice", v + 1),
                    ));
                }
                row.push(w);
            }
            rotation.push(row);
        }
        let e = Embedding::from_rotations(rotation)
            .map_err(|source| bin_err(record_at, format!("invalid record: {source}")))?;
        out.push(e);
    }
    Ok(out)
}

/// Writes embeddings as a planar_code stream with header.
pub fn write_planar_code(embeddings: &[Embedding]) -> Vec<u8> {
    let mut out = PLANAR_CODE_HEADER.to_vec();
    for e in embeddings {
        out.push(e.order() as u8);
        for v in 0..e.order() {
            for &w in e.rotation(v) {
                out.push(w as u8 + 1);
            }
            out.push(0);
        }
    }
    out
}

/// Writes the plain text format: `order genus` then one `v: neighbors` line
/// per vertex. Requires a connected embedding since the genus checksum is
/// part of the format.
pub fn write_embedding_text(e: &Embedding) -> Result<String, IoError> {
    let genus = e
        .genus()
        .map_err(|source| IoError::Embedding { line: 1, source })?;
    let mut out = format!("{} {genus}\n", e.order());
    for v in 0..e.order() {
        let row: Vec<String> = e.rotation(v).iter().map(|w| w.to_string()).collect();
        out.push_str(&format!("{v}: {}\n", row.join(" ")));
    }
    Ok(out)
}

/// Parses the plain text format, revalidating the genus field.
pub fn parse_embedding_text(text: &str) -> Result<Embedding, IoError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| text_err(1, 1, "empty input"))?;
    let mut parts = header.split_whitespace();
    let order: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| text_err(1, 1, "expected `<order> <genus>`"))?;
    let genus: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| text_err(1, 1, "expected `<order> <genus>`"))?;
    if parts.next().is_some() {
        return Err(text_err(1, 1, "trailing tokens after `<order> <genus>`"));
    }
    let mut rotation: Vec<Vec<usize>> = Vec::with_capacity(order);
    for v in 0..order {
        let (idx, line) = lines
            .next()
            .ok_or_else(|| text_err(v + 2, 1, format!("missing line for vertex {v}")))?;
        let line_no = idx + 1;
        let colon = line
            .find(':')
            .ok_or_else(|| text_err(line_no, 1, "expected `v: neighbors`"))?;
        let label: usize = line[..colon]
            .trim()
            .parse()
            .map_err(|_| text_err(line_no, 1, format!("invalid vertex label `{}`", &line[..colon])))?;
        if label != v {
            return Err(text_err(line_no, 1, format!("expected vertex {v}, found {label}")));
        }
        let mut row = Vec::new();
        for tok in line[colon + 1..].split_whitespace() {
            let w: usize = tok
                .parse()
                .map_err(|_| text_err(line_no, colon + 2, format!("invalid neighbor `{tok}`")))?;
            if w >= order {
                return Err(text_err(
                    line_no,
                    colon + 2,
                    format!("neighbor {w} out of range for order {order}"),
                ));
            }
            if w == v {
                return Err(text_err(line_no, colon + 2, format!("vertex {v} lists itself")));
            }
            if row.contains(&w) {
                return Err(text_err(
                    line_no,
                    colon + 2,
                    format!("vertex {v} lists {w} twice"),
                ));
            }
            row.push(w);
        }
        rotation.push(row);
    }
    if let Some((idx, line)) = lines.next() {
        if !line.trim().is_empty() {
            return Err(text_err(idx + 1, 1, "trailing content after last vertex line"));
        }
    }
    let e = Embedding::from_rotations(rotation)
        .map_err(|source| IoError::Embedding { line: 1, source })?;
    let actual = e
        .genus()
        .map_err(|source| IoError::Embedding { line: 1, source })?;
    if actual != genus {
        return Err(text_err(
            1,
            1,
            format!("genus field says {genus} but the embedding has genus {actual}"),
        ));
    }
    Ok(e)
}
