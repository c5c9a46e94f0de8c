//! Plain-text algebra files.
//!
//! ```text
//! # basis a, a^2 with a·a = a^2, a·a^2 = a^2
//! field Q
//! dim 2
//! e1 e1 = 1*e2
//! e1 e2 = 1*e2
//! ```
//!
//! The field line is `field Q` or `field GF <p>`. Product lines use 1-based
//! indices and list `<coeff>*e<k>` terms joined by `+`; coefficients are
//! integers or `num/den`, and products that are not listed are zero.

use std::fmt::Write as _;

use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// Canonical text of `a`: one line per nonzero basis product, in `(i, j)`
/// order, terms in increasing `k`.
pub fn print_algebra(a: &LeibnizAlgebra) -> String {
    let mut out = String::new();
    match a.field() {
        FieldSpec::Rationals => out.push_str("field Q\n"),
        FieldSpec::Prime(p) => writeln!(out, "field GF {p}").unwrap(),
    }
    writeln!(out, "dim {}", a.dim()).unwrap();
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let terms: Vec<String> = a
                .basis_product(i, j)
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| format!("{c}*e{}", k + 1))
                .collect();
            if !terms.is_empty() {
                writeln!(out, "e{} e{} = {}", i + 1, j + 1, terms.join(" + ")).unwrap();
            }
        }
    }
    out
}

/// Accepts `Q`, `GF3`, `GF(3)` and `GF 3`.
pub fn parse_field(text: &str) -> Result<FieldSpec> {
    let t = text.trim();
    if t == "Q" {
        return Ok(FieldSpec::Rationals);
    }
    let rest = t
        .strip_prefix("GF")
        .ok_or_else(|| syntax(1, 1, format!("unknown field `{t}`")))?;
    let digits = rest.trim().trim_start_matches('(').trim_end_matches(')').trim();
    let p: u64 = digits
        .parse()
        .map_err(|_| syntax(1, 1, format!("invalid modulus `{digits}`")))?;
    FieldSpec::prime(p)
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

/// Splits on whitespace and isolates `=` and `+`. Columns are 1-based
/// character positions.
fn tokenize(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    let chars: Vec<(usize, char)> = line.char_indices().collect();
    for (col, &(byte, ch)) in chars.iter().enumerate() {
        let separator = ch.is_whitespace() || ch == '=' || ch == '+';
        if separator {
            if let Some((b, c)) = start.take() {
                out.push(Token {
                    text: &line[b..byte],
                    column: c + 1,
                });
            }
            if ch == '=' || ch == '+' {
                out.push(Token {
                    text: &line[byte..byte + 1],
                    column: col + 1,
                });
            }
        } else if start.is_none() {
            start = Some((byte, col));
        }
    }
    if let Some((b, c)) = start {
        out.push(Token {
            text: &line[b..],
            column: c + 1,
        });
    }
    out
}

fn parse_index(tok: &Token<'_>, line: usize, dim: usize) -> Result<usize> {
    let digits = tok.text.strip_prefix('e').ok_or_else(|| {
        syntax(
            line,
            tok.column,
            format!("expected basis element, found `{}`", tok.text),
        )
    })?;
    let i: usize = digits
        .parse()
        .map_err(|_| syntax(line, tok.column, format!("invalid basis index `{}`", tok.text)))?;
    if i == 0 || i > dim {
        return Err(syntax(line, tok.column, format!("index {i} outside 1..={dim}")));
    }
    Ok(i - 1)
}

/// Parses an algebra file. With `check`, the Leibniz identity is verified
/// and a violation is reported with its basis triple.
pub fn parse_algebra(text: &str, check: bool) -> Result<LeibnizAlgebra> {
    let mut field: Option<FieldSpec> = None;
    let mut dim: Option<usize> = None;
    let mut sc: Vec<Scalar> = Vec::new();
    let mut seen: Vec<bool> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let toks = tokenize(content);
        if toks.is_empty() {
            continue;
        }
        let head = &toks[0];
        match (field, dim) {
            (None, _) => {
                if head.text != "field" || toks.len() < 2 {
                    return Err(syntax(line_no, head.column, "expected `field Q` or `field GF <p>`"));
                }
                let spec: Vec<&str> = toks[1..].iter().map(|t| t.text).collect();
                let parsed = match spec.as_slice() {
                    ["Q"] => Ok(FieldSpec::Rationals),
                    ["GF", p] => p
                        .parse::<u64>()
                        .map_err(|_| syntax(line_no, toks[2].column, format!("invalid modulus `{p}`")))
                        .and_then(FieldSpec::prime),
                    _ => Err(syntax(line_no, toks[1].column, "expected `Q` or `GF <p>`")),
                };
                field = Some(parsed?);
            }
            (Some(f), None) => {
                if head.text != "dim" || toks.len() != 2 {
                    return Err(syntax(line_no, head.column, "expected `dim <n>`"));
                }
                let n: usize = toks[1]
                    .text
                    .parse()
                    .map_err(|_| syntax(line_no, toks[1].column, format!("invalid dimension `{}`", toks[1].text)))?;
                dim = Some(n);
                sc = vec![f.zero(); n * n * n];
                seen = vec![false; n * n];
            }
            (Some(f), Some(n)) => {
                if toks.len() < 4 || toks[2].text != "=" {
                    return Err(syntax(line_no, head.column, "expected `e<i> e<j> = <terms>`"));
                }
                let i = parse_index(&toks[0], line_no, n)?;
                let j = parse_index(&toks[1], line_no, n)?;
                if seen[i * n + j] {
                    return Err(syntax(
                        line_no,
                        head.column,
                        format!("product e{} e{} given twice", i + 1, j + 1),
                    ));
                }
                seen[i * n + j] = true;
                let mut rest = &toks[3..];
                let mut used = vec![false; n];
                loop {
                    let term = rest
                        .first()
                        .ok_or_else(|| syntax(line_no, content.chars().count() + 1, "missing term"))?;
                    let (coeff, basis) = match term.text.rsplit_once('*') {
                        Some((c, b)) => (f.parse_scalar(c).map_err(|m| syntax(line_no, term.column, m))?, b),
                        None => (f.one(), term.text),
                    };
                    let basis_col = term.column + term.text.len() - basis.len();
                    let k = parse_index(
                        &Token {
                            text: basis,
                            column: basis_col,
                        },
                        line_no,
                        n,
                    )?;
                    if used[k] {
                        return Err(syntax(line_no, basis_col, format!("e{} repeated", k + 1)));
                    }
                    used[k] = true;
                    sc[(i * n + j) * n + k] = coeff;
                    match rest.get(1) {
                        None => break,
                        Some(t) if t.text == "+" => rest = &rest[2..],
                        Some(t) => return Err(syntax(line_no, t.column, format!("expected `+`, found `{}`", t.text))),
                    }
                }
            }
        }
    }

    let field = field.ok_or_else(|| syntax(1, 1, "missing `field` line"))?;
    let dim = dim.ok_or_else(|| syntax(text.lines().count().max(1), 1, "missing `dim` line"))?;
    if check {
        LeibnizAlgebra::new(field, dim, sc)
    } else {
        LeibnizAlgebra::new_unchecked(field, dim, sc)
    }
}
