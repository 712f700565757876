//! Text formats for parity-check matrices.
//!
//! * dense: first line `r n`, then `r` lines of `n` whitespace-separated 0/1.
//! * alist: `n r`, `max_col_deg max_row_deg`, the `n` column degrees, the `r`
//!   row degrees, then one line per column listing its rows and one line per
//!   row listing its columns. Indices are 1-based; `0` entries are padding.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use super::ParityCheckMatrix;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MatrixFormat {
    #[default]
    Dense,
    Alist,
}

impl FromStr for MatrixFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dense" => Ok(MatrixFormat::Dense),
            "alist" => Ok(MatrixFormat::Alist),
            other => Err(Error::Parse(format!("unknown matrix format {other:?}"))),
        }
    }
}

pub fn parse(text: &str, format: MatrixFormat) -> Result<ParityCheckMatrix> {
    match format {
        MatrixFormat::Dense => parse_dense(text),
        MatrixFormat::Alist => parse_alist(text),
    }
}

pub fn read(path: &Path, format: MatrixFormat) -> Result<ParityCheckMatrix> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    parse(&text, format)
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::Parse(format!("line {line}: expected a count, got {tok:?}")))
}

fn pair(line: &str, ln: usize) -> Result<(usize, usize)> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(Error::Parse(format!(
            "line {ln}: expected two integers, got {line:?}"
        )));
    }
    Ok((parse_usize(toks[0], ln)?, parse_usize(toks[1], ln)?))
}

pub fn parse_dense(text: &str) -> Result<ParityCheckMatrix> {
    let mut lines = content_lines(text);
    let (ln, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty matrix file".into()))?;
    let (r, n) = pair(header, ln)?;
    let mut bits = Vec::with_capacity(r * n);
    for row in 0..r {
        let (ln, l) = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("expected {r} rows, found {row}")))?;
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != n {
            return Err(Error::Parse(format!(
                "line {ln}: expected {n} entries, got {}",
                toks.len()
            )));
        }
        for t in toks {
            match t {
                "0" => bits.push(0),
                "1" => bits.push(1),
                other => {
                    return Err(Error::Parse(format!(
                        "line {ln}: non-binary entry {other:?}"
                    )))
                }
            }
        }
    }
    if let Some((ln, _)) = lines.next() {
        return Err(Error::Parse(format!("line {ln}: trailing content")));
    }
    ParityCheckMatrix::new(r, n, bits).map_err(|e| Error::Parse(e.to_string()))
}

fn index_list(line: &str, ln: usize, bound: usize) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for t in line.split_whitespace() {
        let v = parse_usize(t, ln)?;
        if v == 0 {
            continue;
        }
        if v > bound {
            return Err(Error::Parse(format!(
                "line {ln}: index {v} out of range 1..={bound}"
            )));
        }
        if out.contains(&(v - 1)) {
            return Err(Error::Parse(format!(
                "line {ln}: repeated index {v} (non-binary entry)"
            )));
        }
        out.push(v - 1);
    }
    Ok(out)
}

pub fn parse_alist(text: &str) -> Result<ParityCheckMatrix> {
    let mut lines = content_lines(text);
    let mut next = |what: &str| {
        lines
            .next()
            .ok_or_else(|| Error::Parse(format!("alist truncated: missing {what}")))
    };
    let (ln, l) = next("header")?;
    let (n, r) = pair(l, ln)?;
    let (ln, l) = next("max degrees")?;
    let (max_col, max_row) = pair(l, ln)?;

    let degrees = |l: &str, ln: usize, count: usize, max: usize| -> Result<Vec<usize>> {
        let d: Vec<usize> = l
            .split_whitespace()
            .map(|t| parse_usize(t, ln))
            .collect::<Result<_>>()?;
        if d.len() != count {
            return Err(Error::Parse(format!(
                "line {ln}: expected {count} degrees, got {}",
                d.len()
            )));
        }
        if d.iter().any(|&x| x > max) {
            return Err(Error::Parse(format!(
                "line {ln}: degree exceeds declared maximum {max}"
            )));
        }
        Ok(d)
    };
    let (ln, l) = next("column degrees")?;
    let col_deg = degrees(l, ln, n, max_col)?;
    let (ln, l) = next("row degrees")?;
    let row_deg = degrees(l, ln, r, max_row)?;

    let mut bits = vec![0u8; r * n];
    for (i, &deg) in col_deg.iter().enumerate() {
        let (ln, l) = next("column list")?;
        let rows = index_list(l, ln, r)?;
        if rows.len() != deg {
            return Err(Error::Parse(format!(
                "line {ln}: column {} lists {} rows, degree says {deg}",
                i + 1,
                rows.len()
            )));
        }
        for j in rows {
            bits[j * n + i] = 1;
        }
    }
    for (j, &deg) in row_deg.iter().enumerate() {
        let (ln, l) = next("row list")?;
        let mut cols = index_list(l, ln, n)?;
        if cols.len() != deg {
            return Err(Error::Parse(format!(
                "line {ln}: row {} lists {} columns, degree says {deg}",
                j + 1,
                cols.len()
            )));
        }
        cols.sort_unstable();
        let from_columns: Vec<usize> = (0..n).filter(|&i| bits[j * n + i] == 1).collect();
        if cols != from_columns {
            return Err(Error::Parse(format!(
                "line {ln}: row {} disagrees with the column lists",
                j + 1
            )));
        }
    }
    if let Ok((ln, _)) = next("nothing") {
        return Err(Error::Parse(format!("line {ln}: trailing content")));
    }
    ParityCheckMatrix::new(r, n, bits).map_err(|e| Error::Parse(e.to_string()))
}

pub fn to_dense(h: &ParityCheckMatrix) -> String {
    let mut s = format!("{} {}\n", h.r(), h.n());
    for j in 0..h.r() {
        let row: Vec<&str> = h
            .row(j)
            .iter()
            .map(|&b| if b == 1 { "1" } else { "0" })
            .collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

pub fn to_alist(h: &ParityCheckMatrix) -> String {
    let g = h.tanner_graph();
    let col_deg: Vec<usize> = (0..h.n()).map(|x| g.var_degree(x)).collect();
    let row_deg: Vec<usize> = (0..h.r()).map(|u| g.check_degree(u)).collect();
    let join = |v: &[usize]| {
        if v.is_empty() {
            return "0".to_string();
        }
        v.iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut s = String::new();
    let _ = writeln!(s, "{} {}", h.n(), h.r());
    let _ = writeln!(
        s,
        "{} {}",
        col_deg.iter().max().copied().unwrap_or(0),
        row_deg.iter().max().copied().unwrap_or(0)
    );
    let _ = writeln!(s, "{}", join(&col_deg));
    let _ = writeln!(s, "{}", join(&row_deg));
    for x in 0..h.n() {
        let idx: Vec<usize> = g.var_neighbors(x).iter().map(|u| u + 1).collect();
        let _ = writeln!(s, "{}", join(&idx));
    }
    for u in 0..h.r() {
        let idx: Vec<usize> = g.check_neighbors(u).iter().map(|x| x + 1).collect();
        let _ = writeln!(s, "{}", join(&idx));
    }
    s
}
