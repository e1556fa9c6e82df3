//! Text formats for matrices, graphs, matroids, Gram matrices and vectors.
//!
//! Every format is line based, whitespace separated, and treats `#` as the
//! start of a comment. A matrix is a `rows cols` line followed by its rows.
//! A matroid is a `matroid r m` line, a line of `m` labels, then a matrix.
//! A Gram matrix is a `gram s` line followed by an `s × s` matrix. A graph is
//! one `tail head` pair per line, optionally after a `graph` line.

use std::path::Path;

use num_bigint::BigInt;

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::gram::GramMatrix;
use crate::lattice::FlowVector;
use crate::linalg::IntMatrix;
use crate::matroid::{from_graph, RegularMatroid};

/// Non-empty lines with comments removed, as `(line number, tokens)`.
fn content(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn integer(line: usize, tok: &str) -> Result<BigInt> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected an integer, found {tok:?}")))
}

fn count(line: usize, tok: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected a size, found {tok:?}")))
}

fn last_line(text: &str) -> usize {
    text.lines().count().max(1)
}

type Lines<'a> = std::iter::Peekable<Box<dyn Iterator<Item = (usize, Vec<&'a str>)> + 'a>>;

fn lines(text: &str) -> Lines<'_> {
    let it: Box<dyn Iterator<Item = (usize, Vec<&str>)>> = Box::new(content(text));
    it.peekable()
}

fn matrix_from(lines: &mut Lines<'_>, end: usize) -> Result<IntMatrix> {
    let (line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(end, "missing \"rows cols\" line"))?;
    let [r, c] = header.as_slice() else {
        return Err(Error::parse(line, "expected \"rows cols\""));
    };
    let (rows, cols) = (count(line, r)?, count(line, c)?);
    let mut data = Vec::with_capacity(rows * cols);
    for k in 0..rows {
        let (line, toks) = lines
            .next()
            .ok_or_else(|| Error::parse(end, format!("expected {rows} rows, found {k}")))?;
        if toks.len() != cols {
            return Err(Error::parse(line, format!("expected {cols} entries, found {}", toks.len())));
        }
        for t in toks {
            data.push(integer(line, t)?);
        }
    }
    IntMatrix::new(rows, cols, data)
}

fn expect_end(lines: &mut Lines<'_>) -> Result<()> {
    match lines.next() {
        Some((line, _)) => Err(Error::parse(line, "unexpected trailing content")),
        None => Ok(()),
    }
}

pub fn parse_matrix(text: &str) -> Result<IntMatrix> {
    let mut it = lines(text);
    let m = matrix_from(&mut it, last_line(text))?;
    expect_end(&mut it)?;
    Ok(m)
}

pub fn parse_graph(text: &str) -> Result<Vec<(i64, i64)>> {
    let mut edges = Vec::new();
    for (line, toks) in content(text) {
        match toks.as_slice() {
            ["graph"] if edges.is_empty() => {}
            [t, h] => {
                let v = |s: &str| {
                    s.parse::<i64>()
                        .map_err(|_| Error::parse(line, format!("expected a vertex id, found {s:?}")))
                };
                edges.push((v(t)?, v(h)?));
            }
            _ => return Err(Error::parse(line, "expected \"tail head\"")),
        }
    }
    Ok(edges)
}

pub fn parse_matroid(text: &str, bounds: Bounds) -> Result<RegularMatroid> {
    let end = last_line(text);
    let mut it = lines(text);
    let (line, header) = it.next().ok_or_else(|| Error::parse(end, "empty input"))?;
    let ["matroid", r, m] = header.as_slice() else {
        return Err(Error::parse(line, "expected \"matroid r m\""));
    };
    let (r, m) = (count(line, r)?, count(line, m)?);
    let labels: Vec<String> = if m == 0 {
        Vec::new()
    } else {
        let (line, toks) = it.next().ok_or_else(|| Error::parse(end, "missing label line"))?;
        if toks.len() != m {
            return Err(Error::parse(line, format!("expected {m} labels, found {}", toks.len())));
        }
        toks.iter().map(|s| s.to_string()).collect()
    };
    let rep = matrix_from(&mut it, end)?;
    expect_end(&mut it)?;
    if (rep.rows(), rep.cols()) != (r, m) {
        return Err(Error::Dimension(format!(
            "header says {r}x{m}, matrix is {}x{}",
            rep.rows(),
            rep.cols()
        )));
    }
    RegularMatroid::new(labels, rep, bounds)
}

pub fn parse_gram(text: &str) -> Result<GramMatrix> {
    let end = last_line(text);
    let mut it = lines(text);
    let (line, header) = it.next().ok_or_else(|| Error::parse(end, "empty input"))?;
    let ["gram", s] = header.as_slice() else {
        return Err(Error::parse(line, "expected \"gram s\""));
    };
    let s = count(line, s)?;
    let m = matrix_from(&mut it, end)?;
    expect_end(&mut it)?;
    if (m.rows(), m.cols()) != (s, s) {
        return Err(Error::Dimension(format!("header says order {s}, matrix is {}x{}", m.rows(), m.cols())));
    }
    GramMatrix::new(m)
}

pub fn parse_vector(text: &str) -> Result<FlowVector> {
    let mut it = content(text);
    let (line, toks) = it.next().ok_or_else(|| Error::parse(1, "empty vector"))?;
    if let Some((line, _)) = it.next() {
        return Err(Error::parse(line, "a vector is a single line"));
    }
    let coords = toks.iter().map(|t| integer(line, t)).collect::<Result<_>>()?;
    Ok(FlowVector::new(coords))
}

/// Reads any matroid description: a `matroid` file, a graph (a `.graph`
/// file or one starting with a `graph` line), or a bare matrix.
pub fn read_matroid(name: &Path, text: &str, bounds: Bounds) -> Result<RegularMatroid> {
    let first = content(text).next().map(|(_, t)| t[0]);
    let is_graph = name.extension().is_some_and(|e| e == "graph") || first == Some("graph");
    match first {
        Some("matroid") => parse_matroid(text, bounds),
        _ if is_graph => from_graph(&parse_graph(text)?),
        _ => RegularMatroid::from_matrix(parse_matrix(text)?, bounds),
    }
}

/// `rows cols` followed by the rows, right aligned.
pub fn format_matrix(m: &IntMatrix) -> String {
    format!("{} {}\n{m}", m.rows(), m.cols())
}

pub fn format_gram(a: &GramMatrix) -> String {
    format!("gram {}\n{}", a.order(), format_matrix(a.matrix()))
}

pub fn format_matroid(m: &RegularMatroid) -> String {
    let mut out = format!("matroid {} {}\n", m.rank(), m.len());
    if !m.is_empty() {
        out.push_str(&m.ground().join(" "));
        out.push('\n');
    }
    out.push_str(&format_matrix(&m.rep().clone().unlabeled()));
    out
}
