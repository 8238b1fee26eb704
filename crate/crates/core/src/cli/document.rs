use std::cmp::Ordering;
use std::fmt;

use crate::complexcore::{
    complex_of_ideal, polarize, stanley_reisner_ideal, MonomialIdeal, Multidegree,
    SimplicialComplex, VertexSet,
};
use crate::error::{Error, Result};
use crate::ginlab::{parse_terms, Polynomial};
use crate::homology::PrimeField;

/// A generator with integer coefficients, like terms combined, sorted in
/// degrevlex-descending order. Positions are kept for error messages only.
#[derive(Debug, Clone)]
pub struct Generator {
    pub terms: Vec<(i128, Multidegree)>,
    pub line: usize,
    pub column: usize,
}

impl PartialEq for Generator {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for Generator {}

impl Generator {
    /// The exponent vector, if this is a single term with nonzero coefficient.
    pub fn as_monomial(&self) -> Option<&Multidegree> {
        match self.terms.as_slice() {
            [(_, m)] => Some(m),
            _ => None,
        }
    }

    pub fn to_polynomial(&self, n: usize, field: &PrimeField) -> Polynomial {
        let p = i128::from(field.characteristic());
        Polynomial::from_terms(
            field,
            n,
            self.terms
                .iter()
                .map(|(c, m)| (c.rem_euclid(p) as i64, m.clone()))
                .collect::<Vec<_>>(),
        )
    }
}

/// `3*x0^2*x1 - x2^3`; the zero generator prints as `0`.
impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (c, m)) in self.terms.iter().enumerate() {
            let magnitude = c.unsigned_abs();
            match (k, *c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.total() == 0 {
                write!(f, "{magnitude}")?;
            } else if magnitude == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Body {
    Facets(SimplicialComplex),
    Gens(Vec<Generator>),
}

/// The text input format:
///
/// ```text
/// # the pentagon
/// n: 5
/// facets: 0 1, 1 2, 2 3, 3 4, 0 4
/// char: 32003
/// ```
///
/// or a `gens:` line of comma-separated polynomials such as
/// `x0*x2, 3*x1^2 - x0*x3`. A line that does not start with a key continues
/// the preceding `facets:` or `gens:` block. `#` starts a comment. `n` may be
/// omitted, in which case it is one more than the largest vertex or variable
/// index. In `facets:`, `{}` denotes the empty face and an empty list the void
/// complex; an empty `gens:` is the zero ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputDocument {
    pub n: usize,
    pub body: Body,
    pub characteristic: Option<u32>,
    pub seed: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Key {
    N,
    Facets,
    Gens,
    Char,
    Seed,
}

impl Key {
    fn name(self) -> &'static str {
        match self {
            Key::N => "n",
            Key::Facets => "facets",
            Key::Gens => "gens",
            Key::Char => "char",
            Key::Seed => "seed",
        }
    }
}

/// A piece of value text and its 1-based position in the document.
struct Span<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

/// Splits on `sep`, keeping the column of each piece.
fn split_spans<'a>(span: &Span<'a>, sep: char) -> Vec<Span<'a>> {
    let mut out = Vec::new();
    let mut start_byte = 0;
    let mut start_col = span.column;
    for (col, (byte, c)) in span.text.char_indices().enumerate() {
        if c == sep {
            out.push(Span {
                text: &span.text[start_byte..byte],
                line: span.line,
                column: start_col,
            });
            start_byte = byte + c.len_utf8();
            start_col = span.column + col + 1;
        }
    }
    out.push(Span {
        text: &span.text[start_byte..],
        line: span.line,
        column: start_col,
    });
    out
}

/// Whitespace-separated tokens with their columns.
fn tokens<'a>(span: &Span<'a>) -> Vec<Span<'a>> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    let chars: Vec<(usize, char)> = span.text.char_indices().collect();
    for (col, &(byte, c)) in chars.iter().enumerate() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some((byte, col)),
            (true, Some((b, k))) => {
                out.push(Span {
                    text: &span.text[b..byte],
                    line: span.line,
                    column: span.column + k,
                });
                start = None;
            }
            _ => {}
        }
    }
    if let Some((b, k)) = start {
        out.push(Span {
            text: &span.text[b..],
            line: span.line,
            column: span.column + k,
        });
    }
    out
}

/// Comma-separated pieces across the lines of a block. An empty piece is
/// allowed only after a trailing comma at the end of a line, or as the whole
/// (empty) block.
fn block_items<'a>(lines: &[Span<'a>], what: &str) -> Result<Vec<Span<'a>>> {
    let mut out = Vec::new();
    for line in lines {
        let pieces = split_spans(line, ',');
        let last = pieces.len() - 1;
        for (k, piece) in pieces.into_iter().enumerate() {
            if piece.text.trim().is_empty() {
                if k == last {
                    continue;
                }
                return Err(Error::parse(
                    piece.line,
                    piece.column,
                    format!("empty {what}"),
                ));
            }
            out.push(piece);
        }
    }
    Ok(out)
}

type PlacedVertex = (usize, usize, usize);

fn parse_facets(lines: &[Span<'_>]) -> Result<Vec<Vec<PlacedVertex>>> {
    let mut faces = Vec::new();
    for item in block_items(lines, "face; write {} for the empty face")? {
        let toks = tokens(&item);
        if toks.len() == 1 && toks[0].text == "{}" {
            faces.push(Vec::new());
            continue;
        }
        let mut face = Vec::new();
        for t in toks {
            let v: usize = t.text.parse().map_err(|_| {
                Error::parse(
                    t.line,
                    t.column,
                    format!("expected a vertex index, found `{}`", t.text),
                )
            })?;
            face.push((v, t.line, t.column));
        }
        faces.push(face);
    }
    Ok(faces)
}

struct RawGenerator {
    terms: Vec<crate::ginlab::ParsedTerm>,
    line: usize,
    column: usize,
}

fn parse_gens(lines: &[Span<'_>]) -> Result<Vec<RawGenerator>> {
    block_items(lines, "generator")?
        .into_iter()
        .map(|item| {
            let lead_ws = item.text.chars().take_while(|c| c.is_whitespace()).count();
            Ok(RawGenerator {
                terms: parse_terms(item.text, item.line, item.column)?,
                line: item.line,
                column: item.column + lead_ws,
            })
        })
        .collect()
}

fn build_generator(raw: &RawGenerator, n: usize) -> Result<Generator> {
    let mut terms: Vec<(i128, Multidegree)> = Vec::new();
    for t in &raw.terms {
        let mut e = vec![0u32; n];
        for &(var, exp, column) in &t.factors {
            if var >= n {
                return Err(Error::parse(
                    raw.line,
                    column,
                    format!("variable x{var} out of range for n={n}"),
                ));
            }
            e[var] = e[var]
                .checked_add(exp)
                .ok_or_else(|| Error::parse(raw.line, column, "exponent too large"))?;
        }
        terms.push((t.coeff, Multidegree::new(e)));
    }
    terms.sort_by(|a, b| b.1.degrevlex_cmp(&a.1));
    let mut merged: Vec<(i128, Multidegree)> = Vec::new();
    for (c, m) in terms {
        match merged.last_mut() {
            Some((acc, last)) if last.degrevlex_cmp(&m) == Ordering::Equal => {
                *acc = acc
                    .checked_add(c)
                    .ok_or_else(|| Error::parse(raw.line, raw.column, "coefficient too large"))?;
            }
            _ => merged.push((c, m)),
        }
    }
    merged.retain(|(c, _)| *c != 0);
    Ok(Generator {
        terms: merged,
        line: raw.line,
        column: raw.column,
    })
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<InputDocument> {
        let mut n: Option<(usize, usize, usize)> = None;
        let mut characteristic = None;
        let mut seed = None;
        let mut body_key: Option<Key> = None;
        let mut body_lines: Vec<Span<'_>> = Vec::new();
        let mut current: Option<Key> = None;

        for (idx, raw_line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let content = match raw_line.find('#') {
                Some(k) => &raw_line[..k],
                None => raw_line,
            };
            if content.trim().is_empty() {
                continue;
            }
            let indent = content.chars().take_while(|c| c.is_whitespace()).count();
            let rest = content.trim_start();
            let ident_len = rest
                .chars()
                .take_while(|c| c.is_ascii_alphanumeric() || *c == '_')
                .count();
            let after = rest.chars().skip(ident_len).collect::<String>();
            let is_key_line = ident_len > 0
                && after.trim_start().starts_with(':')
                && !rest.starts_with(|c: char| c.is_ascii_digit());
            if !is_key_line {
                match current {
                    Some(Key::Facets | Key::Gens) => {
                        body_lines.push(Span {
                            text: content,
                            line: line_no,
                            column: 1,
                        });
                        continue;
                    }
                    _ => {
                        return Err(Error::parse(line_no, indent + 1, "expected `key: value`"));
                    }
                }
            }
            let name: String = rest.chars().take(ident_len).collect();
            let key_col = indent + 1;
            let key = match name.as_str() {
                "n" => Key::N,
                "facets" => Key::Facets,
                "gens" => Key::Gens,
                "char" => Key::Char,
                "seed" => Key::Seed,
                other => {
                    return Err(Error::parse(
                        line_no,
                        key_col,
                        format!("unknown key `{other}`"),
                    ))
                }
            };
            // value starts right after the colon
            let colon_chars = indent + ident_len + after.chars().take_while(|c| *c != ':').count();
            let value_byte = content
                .char_indices()
                .nth(colon_chars + 1)
                .map_or(content.len(), |(b, _)| b);
            let value = Span {
                text: &content[value_byte..],
                line: line_no,
                column: colon_chars + 2,
            };
            let duplicate = match key {
                Key::N => n.is_some(),
                Key::Char => characteristic.is_some(),
                Key::Seed => seed.is_some(),
                Key::Facets | Key::Gens => body_key.is_some(),
            };
            if duplicate {
                let msg = match (key, body_key) {
                    (Key::Facets | Key::Gens, Some(b)) if b != key => {
                        "a document has either `facets:` or `gens:`, not both".to_string()
                    }
                    _ => format!("duplicate key `{}`", key.name()),
                };
                return Err(Error::parse(line_no, key_col, msg));
            }
            current = Some(key);
            match key {
                Key::Facets | Key::Gens => {
                    body_key = Some(key);
                    body_lines.push(value);
                }
                Key::N | Key::Char | Key::Seed => {
                    let toks = tokens(&value);
                    let tok = match toks.as_slice() {
                        [t] => t,
                        [] => {
                            return Err(Error::parse(
                                line_no,
                                value.column,
                                format!("missing value for `{}`", key.name()),
                            ))
                        }
                        [_, t, ..] => {
                            return Err(Error::parse(
                                t.line,
                                t.column,
                                "unexpected text after value",
                            ))
                        }
                    };
                    let bad = || {
                        Error::parse(
                            tok.line,
                            tok.column,
                            format!("invalid value `{}` for `{}`", tok.text, key.name()),
                        )
                    };
                    match key {
                        Key::N => {
                            n = Some((tok.text.parse().map_err(|_| bad())?, tok.line, tok.column))
                        }
                        Key::Seed => seed = Some(tok.text.parse::<u64>().map_err(|_| bad())?),
                        _ => {
                            let p: u64 = tok.text.parse().map_err(|_| bad())?;
                            let field = PrimeField::new(p)
                                .map_err(|e| Error::parse(tok.line, tok.column, e.to_string()))?;
                            characteristic = Some(field.characteristic());
                        }
                    }
                }
            }
        }

        let Some(kind) = body_key else {
            return Err(Error::parse(
                text.lines().count().max(1),
                1,
                "missing `facets:` or `gens:`",
            ));
        };
        let body = match kind {
            Key::Facets => {
                let faces = parse_facets(&body_lines)?;
                let inferred = faces.iter().flatten().map(|v| v.0 + 1).max().unwrap_or(0);
                let size = check_size(n, inferred)?;
                if let Some(&(v, l, c)) = faces.iter().flatten().find(|v| v.0 >= size) {
                    return Err(Error::parse(
                        l,
                        c,
                        format!("vertex {v} out of range for n={size}"),
                    ));
                }
                let sets = faces
                    .iter()
                    .map(|f| VertexSet::from_vertices(f.iter().map(|v| v.0)));
                (
                    size,
                    Body::Facets(SimplicialComplex::from_faces(size, sets)?),
                )
            }
            _ => {
                let raw = parse_gens(&body_lines)?;
                let inferred = raw
                    .iter()
                    .flat_map(|g| g.terms.iter().filter_map(|t| t.max_variable()))
                    .map(|v| v + 1)
                    .max()
                    .unwrap_or(0);
                let size = check_size(n, inferred)?;
                let gens = raw
                    .iter()
                    .map(|g| build_generator(g, size))
                    .collect::<Result<_>>()?;
                (size, Body::Gens(gens))
            }
        };
        Ok(InputDocument {
            n: body.0,
            body: body.1,
            characteristic,
            seed,
        })
    }

    pub fn from_complex(x: &SimplicialComplex) -> Self {
        InputDocument {
            n: x.n(),
            body: Body::Facets(x.clone()),
            characteristic: None,
            seed: None,
        }
    }

    pub fn from_ideal(ideal: &MonomialIdeal) -> Self {
        InputDocument {
            n: ideal.n(),
            body: Body::Gens(
                ideal
                    .gens()
                    .iter()
                    .map(|g| Generator {
                        terms: vec![(1, g.clone())],
                        line: 0,
                        column: 0,
                    })
                    .collect(),
            ),
            characteristic: None,
            seed: None,
        }
    }

    /// The characteristic: `overrides` if given, else the document's, else
    /// the default.
    pub fn field(&self, overrides: Option<u64>) -> Result<PrimeField> {
        match (overrides, self.characteristic) {
            (Some(p), _) => PrimeField::new(p),
            (None, Some(p)) => PrimeField::new(u64::from(p)),
            (None, None) => Ok(PrimeField::default()),
        }
    }

    /// The `facets:` or `gens:` line alone.
    pub fn body_line(&self) -> String {
        match &self.body {
            Body::Facets(x) => x.canonical(),
            Body::Gens(gens) if gens.is_empty() => "gens:".to_string(),
            Body::Gens(gens) => {
                let shown: Vec<String> = gens.iter().map(ToString::to_string).collect();
                format!("gens: {}", shown.join(", "))
            }
        }
    }

    /// The monomial ideal described by the document: the generators, or the
    /// Stanley–Reisner ideal (the unit ideal for the void complex).
    pub fn monomial_ideal(&self) -> Result<MonomialIdeal> {
        match &self.body {
            Body::Facets(x) if x.is_void() => Ok(MonomialIdeal::unit(self.n)),
            Body::Facets(x) => stanley_reisner_ideal(x),
            Body::Gens(gens) => {
                let mut monos = Vec::with_capacity(gens.len());
                for g in gens {
                    if g.terms.is_empty() {
                        continue;
                    }
                    let m = g.as_monomial().ok_or_else(|| {
                        Error::parse(g.line, g.column, "generator is not a monomial")
                    })?;
                    monos.push(m.clone());
                }
                MonomialIdeal::new(self.n, monos)
            }
        }
    }

    /// The complex described by the document. Non-square-free generators are
    /// polarized when `polarize` is set and rejected otherwise.
    pub fn complex(&self, polarize_gens: bool) -> Result<SimplicialComplex> {
        match &self.body {
            Body::Facets(x) => Ok(x.clone()),
            Body::Gens(_) => {
                let ideal = self.monomial_ideal()?;
                if ideal.is_square_free() {
                    complex_of_ideal(&ideal)
                } else if polarize_gens {
                    complex_of_ideal(&polarize(&ideal)?)
                } else {
                    Err(Error::NotSquareFree)
                }
            }
        }
    }

    /// The generators as polynomials over `field`.
    pub fn polynomials(&self, field: &PrimeField) -> Result<Vec<Polynomial>> {
        match &self.body {
            Body::Gens(gens) => Ok(gens
                .iter()
                .map(|g| g.to_polynomial(self.n, field))
                .collect()),
            Body::Facets(_) => {
                let ideal = self.monomial_ideal()?;
                Ok(ideal
                    .gens()
                    .iter()
                    .map(|g| Polynomial::monomial(field, 1, g.clone()))
                    .collect())
            }
        }
    }
}

fn check_size(declared: Option<(usize, usize, usize)>, inferred: usize) -> Result<usize> {
    match declared {
        Some((n, line, column)) if n > crate::complexcore::MAX_VERTICES => Err(Error::parse(
            line,
            column,
            format!("n = {n} exceeds the supported maximum of 64"),
        )),
        Some((n, _, _)) => Ok(n),
        None if inferred > crate::complexcore::MAX_VERTICES => {
            Err(Error::TooManyVertices { n: inferred })
        }
        None => Ok(inferred),
    }
}

/// `n: …`, the body line, then `char:` and `seed:` when set.
impl fmt::Display for InputDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n: {}", self.n)?;
        writeln!(f, "{}", self.body_line())?;
        if let Some(p) = self.characteristic {
            writeln!(f, "char: {p}")?;
        }
        if let Some(s) = self.seed {
            writeln!(f, "seed: {s}")?;
        }
        Ok(())
    }
}
