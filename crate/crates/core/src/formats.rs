//! Line-oriented input formats. `#` starts a comment everywhere.
//!
//! Module files:
//!
//! ```text
//! [module]
//! degree0.generators = 2
//! degree0.relations = X-1, X-1 ; 0, X+1
//! degree1.generators = 0
//! ```
//!
//! Endomorphism files:
//!
//! ```text
//! [endo]
//! parity = 0
//! degree0 = 1, 0 ; 0, X
//! ```
//!
//! Fixed-point files, one component per line:
//!
//! ```text
//! euler=1 characters: X^2:1, X^-2:3
//! ```

use num_bigint::BigInt;

use crate::equivariant::{FixedComponent, FixedPointData};
use crate::error::ParseError;
use crate::laurent::LaurentPoly;
use crate::localize::{GradedModuleMap, Parity};
use crate::matrix::{IntMatrix, Matrix, PolyMatrix};
use crate::module::{GradedModule, PresentedModule};
use crate::parse::parse_poly;
use crate::ring::Ring;

type ParseResult<T> = Result<T, ParseError>;

fn char_offset(line: &str, byte: usize) -> usize {
    line[..byte].chars().count()
}

/// Non-empty lines with comments removed, as `(line number, full line, content)`.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let content = line.split('#').next().unwrap_or("");
        (!content.trim().is_empty()).then_some((i + 1, line, content))
    })
}

/// Splits `text` (starting at char column `base`) on `sep`, keeping each piece's column.
fn split_cols(text: &str, sep: char, base: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in text.char_indices() {
        if c == sep {
            out.push((base + char_offset(text, start), &text[start..i]));
            start = i + c.len_utf8();
        }
    }
    out.push((base + char_offset(text, start), &text[start..]));
    out
}

fn parse_matrix_with<T: Ring>(
    text: &str,
    base: usize,
    entry: impl Fn(&str) -> ParseResult<T>,
) -> ParseResult<Matrix<T>> {
    if text.trim().is_empty() {
        return Ok(Matrix::zeros(0, 0));
    }
    let mut rows = Vec::new();
    let mut width = None;
    for (row_col, row) in split_cols(text, ';', base) {
        let mut entries = Vec::new();
        for (col, piece) in split_cols(row, ',', row_col) {
            let value = entry(piece).map_err(|e| e.offset(col))?;
            entries.push(value);
        }
        match width {
            None => width = Some(entries.len()),
            Some(w) if w != entries.len() => {
                return Err(ParseError::new(row_col + 1, format!("row has {} entries, expected {w}", entries.len())));
            }
            _ => {}
        }
        rows.push(entries);
    }
    Ok(Matrix::from_rows(rows, width.unwrap_or(0)).expect("widths checked"))
}

/// Matrix of Laurent polynomials, rows separated by `;` and entries by `,`.
pub fn parse_poly_matrix(text: &str) -> ParseResult<PolyMatrix> {
    parse_matrix_with(text, 0, parse_poly)
}

/// Integer matrix such as `1,1;1,0`.
pub fn parse_int_matrix(text: &str) -> ParseResult<IntMatrix> {
    parse_matrix_with(text, 0, |s| {
        let t = s.trim();
        let lead = s.len() - s.trim_start().len();
        t.parse::<BigInt>().map_err(|_| ParseError::new(lead + 1, format!("'{t}' is not an integer")))
    })
}

fn key_value<'a>(lineno: usize, line: &'a str, content: &'a str) -> ParseResult<(&'a str, &'a str, usize)> {
    let Some(eq) = content.find('=') else {
        return Err(ParseError::new(1, "expected 'key = value'").at_line(lineno));
    };
    let value_col = char_offset(line, eq + 1);
    Ok((content[..eq].trim(), &content[eq + 1..], value_col))
}

fn expect_header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str, &'a str)>, header: &str) -> ParseResult<()> {
    match lines.next() {
        Some((_, _, c)) if c.trim() == header => Ok(()),
        Some((n, _, c)) => Err(ParseError::new(1, format!("expected '{header}', found '{}'", c.trim())).at_line(n)),
        None => Err(ParseError::new(1, format!("expected '{header}' header")).at_line(1)),
    }
}

/// Parses a `[module]` file into a graded module.
pub fn parse_module_file(text: &str) -> ParseResult<GradedModule> {
    let mut lines = content_lines(text);
    expect_header(&mut lines, "[module]")?;
    let mut generators: [Option<usize>; 2] = [None, None];
    let mut relations: [Option<(usize, PolyMatrix)>; 2] = [None, None];
    for (n, line, content) in lines {
        let (key, value, col) = key_value(n, line, content)?;
        let (degree, field) = match key.split_once('.') {
            Some(("degree0", f)) => (0, f),
            Some(("degree1", f)) => (1, f),
            _ => return Err(ParseError::new(1, format!("unknown key '{key}'")).at_line(n)),
        };
        match field {
            "generators" => {
                let g = value
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| ParseError::new(col + 1, "generator count must be a nonnegative integer").at_line(n))?;
                generators[degree] = Some(g);
            }
            "relations" => {
                let m = parse_matrix_with(value, col, parse_poly).map_err(|e| e.at_line(n))?;
                relations[degree] = Some((n, m));
            }
            _ => return Err(ParseError::new(1, format!("unknown key '{key}'")).at_line(n)),
        }
    }
    let mut degrees = Vec::new();
    for d in 0..2 {
        let g = generators[d].unwrap_or(0);
        let module = match relations[d].take() {
            None => PresentedModule::free(g),
            Some((n, m)) => PresentedModule::new(g, m).map_err(|e| ParseError::new(1, e.to_string()).at_line(n))?,
        };
        degrees.push(module);
    }
    let degree1 = degrees.pop().expect("two degrees");
    let degree0 = degrees.pop().expect("two degrees");
    Ok(GradedModule::new(degree0, degree1))
}

/// An `[endo]` file before its shapes are checked against a module.
#[derive(Clone, Debug, PartialEq)]
pub struct EndoSpec {
    pub parity: Parity,
    pub degree0: Option<PolyMatrix>,
    pub degree1: Option<PolyMatrix>,
}

impl EndoSpec {
    /// Omitted blocks become zero maps of the right shape.
    pub fn to_map(&self, m: &GradedModule) -> GradedModuleMap {
        let g = [m.degree0.generators(), m.degree1.generators()];
        let shape = |d: usize| match self.parity {
            Parity::Even => (g[d], g[d]),
            Parity::Odd => (g[1 - d], g[d]),
        };
        let block = |d: usize, b: &Option<PolyMatrix>| {
            b.clone().unwrap_or_else(|| {
                let (r, c) = shape(d);
                PolyMatrix::zeros(r, c)
            })
        };
        GradedModuleMap { parity: self.parity, blocks: [block(0, &self.degree0), block(1, &self.degree1)] }
    }
}

pub fn parse_endo_file(text: &str) -> ParseResult<EndoSpec> {
    let mut lines = content_lines(text);
    expect_header(&mut lines, "[endo]")?;
    let mut spec = EndoSpec { parity: Parity::Even, degree0: None, degree1: None };
    for (n, line, content) in lines {
        let (key, value, col) = key_value(n, line, content)?;
        match key {
            "parity" => {
                spec.parity = value
                    .trim()
                    .parse::<u8>()
                    .ok()
                    .and_then(Parity::from_int)
                    .ok_or_else(|| ParseError::new(col + 1, "parity must be 0 or 1").at_line(n))?;
            }
            "degree0" => spec.degree0 = Some(parse_matrix_with(value, col, parse_poly).map_err(|e| e.at_line(n))?),
            "degree1" => spec.degree1 = Some(parse_matrix_with(value, col, parse_poly).map_err(|e| e.at_line(n))?),
            _ => return Err(ParseError::new(1, format!("unknown key '{key}'")).at_line(n)),
        }
    }
    Ok(spec)
}

/// Parses `euler=<int> characters: X^a:m, X^b:m, ...` lines.
pub fn parse_fixed_point_file(text: &str) -> ParseResult<FixedPointData> {
    let mut components = Vec::new();
    for (n, line, content) in content_lines(text) {
        let err = |col: usize, msg: &str| ParseError::new(col, msg.to_string()).at_line(n);
        let Some(split) = content.find("characters:") else {
            return Err(err(1, "expected 'characters:'"));
        };
        let head = content[..split].trim();
        let euler = head
            .strip_prefix("euler")
            .map(str::trim_start)
            .and_then(|s| s.strip_prefix('='))
            .and_then(|s| s.trim().parse::<i64>().ok())
            .ok_or_else(|| err(1, "expected 'euler=<int>'"))?;
        let body_start = split + "characters:".len();
        let body = &content[body_start..];
        let mut characters = Vec::new();
        if !body.trim().is_empty() {
            for (col, piece) in split_cols(body, ',', char_offset(line, body_start)) {
                let Some((mono, mult)) = piece.rsplit_once(':') else {
                    return Err(err(col + 1, "expected '<character>:<multiplicity>'"));
                };
                let poly: LaurentPoly = parse_poly(mono).map_err(|e| e.offset(col).at_line(n))?;
                let exp = match poly.terms().next() {
                    Some((e, c)) if poly.num_terms() == 1 && num_traits::One::is_one(c) => e,
                    _ => return Err(err(col + 1, "character must be a monomial X^e")),
                };
                let mult = mult.trim().parse::<u64>().map_err(|_| err(col + 1, "multiplicity must be a nonnegative integer"))?;
                characters.push((exp, mult));
            }
        }
        components.push(FixedComponent { euler, characters });
    }
    Ok(FixedPointData::new(components))
}
