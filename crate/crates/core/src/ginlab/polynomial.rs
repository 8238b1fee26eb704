use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complexcore::Multidegree;
use crate::error::{Error, Result};
use crate::homology::PrimeField;

/// Degree reverse lexicographic order with `x0 > x1 > …`.
pub fn degrevlex_compare(a: &Multidegree, b: &Multidegree) -> Ordering {
    a.degrevlex_cmp(b)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Term {
    /// Nonzero, in `[1, p)`.
    pub coeff: u32,
    pub mono: Multidegree,
}

impl Term {
    pub fn degree(&self) -> u32 {
        self.mono.total()
    }
}

/// A polynomial over `GF(p)` with terms strictly decreasing in degrevlex
/// and no zero coefficients. The zero polynomial has no terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Polynomial {
    n: usize,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial {
            n,
            terms: Vec::new(),
        }
    }

    /// `coeff · x^mono`, zero if `coeff ≡ 0`.
    pub fn monomial(field: &PrimeField, coeff: i64, mono: Multidegree) -> Self {
        Polynomial::from_terms(field, mono.n(), [(coeff, mono)])
    }

    /// Collects like terms, reduces coefficients and sorts.
    pub fn from_terms<I>(field: &PrimeField, n: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Multidegree)>,
    {
        let mut acc: HashMap<Multidegree, u32> = HashMap::new();
        for (c, m) in terms {
            debug_assert_eq!(m.n(), n);
            let e = acc.entry(m).or_insert(0);
            *e = field.add(*e, field.reduce(c));
        }
        Self::from_map(n, acc)
    }

    fn from_map(n: usize, acc: HashMap<Multidegree, u32>) -> Self {
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(mono, coeff)| Term { coeff, mono })
            .collect();
        terms.sort_by(|a, b| b.mono.degrevlex_cmp(&a.mono));
        Polynomial { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<&Multidegree> {
        self.terms.first().map(|t| &t.mono)
    }

    /// Total degree of the leading term.
    pub fn degree(&self) -> Option<u32> {
        self.lead().map(Term::degree)
    }

    /// True for the zero polynomial and for polynomials whose terms share one
    /// total degree.
    pub fn is_homogeneous(&self) -> bool {
        match self.degree() {
            None => true,
            Some(d) => self.terms.iter().all(|t| t.degree() == d),
        }
    }

    pub fn scale(&self, field: &PrimeField, c: u32) -> Polynomial {
        if c == 0 {
            return Polynomial::zero(self.n);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: field.mul(t.coeff, c),
                mono: t.mono.clone(),
            })
            .collect();
        Polynomial { n: self.n, terms }
    }

    /// Divides by the leading coefficient.
    pub fn make_monic(&self, field: &PrimeField) -> Polynomial {
        match self.lead() {
            None => self.clone(),
            Some(t) if t.coeff == 1 => self.clone(),
            Some(t) => self.scale(field, field.inv(t.coeff)),
        }
    }

    /// `c · x^m · self`; monomial multiplication preserves the term order.
    pub fn mul_term(&self, field: &PrimeField, c: u32, m: &Multidegree) -> Polynomial {
        if c == 0 {
            return Polynomial::zero(self.n);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: field.mul(t.coeff, c),
                mono: t.mono.mul(m),
            })
            .collect();
        Polynomial { n: self.n, terms }
    }

    /// `self + c · other`, merging the two sorted term lists.
    pub fn add_scaled(&self, field: &PrimeField, c: u32, other: &Polynomial) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), other.terms.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(t)) => {
                    let coeff = field.mul(c, t.coeff);
                    if coeff != 0 {
                        out.push(Term {
                            coeff,
                            mono: t.mono.clone(),
                        });
                    }
                    b.next();
                }
                (Some(s), Some(t)) => match s.mono.degrevlex_cmp(&t.mono) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => {
                        let coeff = field.mul(c, t.coeff);
                        if coeff != 0 {
                            out.push(Term {
                                coeff,
                                mono: t.mono.clone(),
                            });
                        }
                        b.next();
                    }
                    Ordering::Equal => {
                        let coeff = field.add(s.coeff, field.mul(c, t.coeff));
                        if coeff != 0 {
                            out.push(Term {
                                coeff,
                                mono: s.mono.clone(),
                            });
                        }
                        a.next();
                        b.next();
                    }
                },
            }
        }
        Polynomial {
            n: self.n,
            terms: out,
        }
    }

    pub fn add(&self, field: &PrimeField, other: &Polynomial) -> Polynomial {
        self.add_scaled(field, 1, other)
    }

    pub fn sub(&self, field: &PrimeField, other: &Polynomial) -> Polynomial {
        self.add_scaled(field, field.neg(1), other)
    }

    pub fn mul(&self, field: &PrimeField, other: &Polynomial) -> Polynomial {
        let mut acc: HashMap<Multidegree, u32> = HashMap::new();
        for s in &self.terms {
            for t in &other.terms {
                let e = acc.entry(s.mono.mul(&t.mono)).or_insert(0);
                *e = field.add(*e, field.mul(s.coeff, t.coeff));
            }
        }
        Self::from_map(self.n, acc)
    }

    /// Parses `3*x0^2*x1 + x2^3 - x1`. Variables are `x<i>`; the bare letters
    /// `x`, `y`, `z`, `w` stand for `x0 … x3`. Juxtaposition multiplies.
    pub fn parse(text: &str, n: usize, field: &PrimeField) -> Result<Polynomial> {
        let terms = parse_terms(text, 1, 1)?;
        Polynomial::from_parsed(&terms, n, field, 1)
    }

    /// Builds a polynomial in `n` variables from parsed terms.
    pub fn from_parsed(
        terms: &[ParsedTerm],
        n: usize,
        field: &PrimeField,
        line: usize,
    ) -> Result<Polynomial> {
        let mut out = Vec::with_capacity(terms.len());
        for t in terms {
            let mut exps = vec![0u32; n];
            for &(var, e, column) in &t.factors {
                if var >= n {
                    return Err(Error::parse(
                        line,
                        column,
                        format!("variable x{var} out of range for n={n}"),
                    ));
                }
                exps[var] += e;
            }
            let c = t.coeff.rem_euclid(i128::from(field.characteristic())) as i64;
            out.push((c, Multidegree::new(exps)));
        }
        Ok(Polynomial::from_terms(field, n, out))
    }
}

/// `3*x0^2*x1 + x2^3` with coefficients as stored residues; see
/// [`Polynomial::render`] for signed output.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            let c = t.coeff;
            if k > 0 {
                f.write_str(" + ")?;
            }
            let is_one = t.mono.total() == 0;
            match (c, is_one) {
                (1, false) => write!(f, "{}", t.mono)?,
                (_, false) => write!(f, "{c}*{}", t.mono)?,
                (_, true) => write!(f, "{c}")?,
            }
        }
        Ok(())
    }
}

impl Polynomial {
    /// Like `Display`, but prints coefficients `c > p/2` as `- (p - c)`.
    pub fn render(&self, field: &PrimeField) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let p = field.characteristic();
        let mut s = String::new();
        for (k, t) in self.terms.iter().enumerate() {
            let negative = t.coeff > p / 2;
            let mag = if negative { p - t.coeff } else { t.coeff };
            match (k, negative) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let constant = t.mono.total() == 0;
            if constant {
                s.push_str(&mag.to_string());
            } else if mag == 1 {
                s.push_str(&t.mono.to_string());
            } else {
                s.push_str(&format!("{mag}*{}", t.mono));
            }
        }
        s
    }
}

/// A term as read from text: signed coefficient and `(variable, exponent,
/// column)` factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedTerm {
    pub coeff: i128,
    pub factors: Vec<(usize, u32, usize)>,
}

impl ParsedTerm {
    pub fn max_variable(&self) -> Option<usize> {
        self.factors.iter().map(|f| f.0).max()
    }
}

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    line: usize,
    column: usize,
    _text: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str, line: usize, column: usize) -> Self {
        Cursor {
            chars: text.chars().enumerate().collect(),
            pos: 0,
            line,
            column,
            _text: text,
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn col(&self) -> usize {
        self.column + self.chars.get(self.pos).map_or(self.chars.len(), |c| c.0)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::parse(self.line, self.col(), message)
    }

    fn number(&mut self) -> Result<u128> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let s: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        s.parse::<u128>().map_err(|_| {
            Error::parse(
                self.line,
                self.column + self.chars[start].0,
                "number too large",
            )
        })
    }
}

/// Splits a polynomial expression into terms. `line` and `column` locate
/// the text inside a larger document for error messages.
pub fn parse_terms(text: &str, line: usize, column: usize) -> Result<Vec<ParsedTerm>> {
    let mut cur = Cursor::new(text, line, column);
    let mut terms = Vec::new();
    cur.skip_ws();
    if cur.peek().is_none() {
        return Err(cur.error("empty expression"));
    }
    let mut first = true;
    loop {
        cur.skip_ws();
        let mut sign: i128 = 1;
        match cur.peek() {
            Some('+') => {
                cur.pos += 1;
            }
            Some('-') => {
                sign = -1;
                cur.pos += 1;
            }
            None => break,
            Some(_) if first => {}
            Some(c) => return Err(cur.error(format!("expected `+` or `-`, found `{c}`"))),
        }
        first = false;
        cur.skip_ws();
        terms.push(parse_term(&mut cur, sign)?);
    }
    Ok(terms)
}

fn parse_term(cur: &mut Cursor<'_>, sign: i128) -> Result<ParsedTerm> {
    let mut coeff: i128 = sign;
    let mut factors = Vec::new();
    let mut expect_factor = true;
    let mut saw_anything = false;
    loop {
        cur.skip_ws();
        match cur.peek() {
            Some(c) if c.is_ascii_digit() && expect_factor => {
                let v = cur.number()?;
                coeff = coeff
                    .checked_mul(v as i128)
                    .ok_or_else(|| cur.error("coefficient too large"))?;
            }
            Some(c @ ('x' | 'y' | 'z' | 'w')) => {
                let column = cur.col();
                cur.pos += 1;
                let var = if c == 'x' && cur.peek().is_some_and(|d| d.is_ascii_digit()) {
                    let v = cur.number()?;
                    usize::try_from(v).map_err(|_| cur.error("variable index too large"))?
                } else {
                    match c {
                        'x' => 0,
                        'y' => 1,
                        'z' => 2,
                        _ => 3,
                    }
                };
                let mut e = 1u32;
                cur.skip_ws();
                if cur.peek() == Some('^') {
                    cur.pos += 1;
                    cur.skip_ws();
                    let v = cur.number()?;
                    e = u32::try_from(v).map_err(|_| cur.error("exponent too large"))?;
                }
                factors.push((var, e, column));
            }
            Some(c) if !expect_factor && (c.is_ascii_digit()) => {
                return Err(cur.error("expected `*` before a number"));
            }
            Some(c) if c.is_alphabetic() => {
                return Err(cur.error(format!("unknown variable `{c}`")));
            }
            _ => {
                if !saw_anything {
                    return Err(cur.error("expected a term"));
                }
                if expect_factor && saw_anything {
                    return Err(cur.error("expected a factor after `*`"));
                }
                return Ok(ParsedTerm { coeff, factors });
            }
        }
        saw_anything = true;
        cur.skip_ws();
        expect_factor = if cur.peek() == Some('*') {
            cur.pos += 1;
            true
        } else {
            // juxtaposition such as `xy` is allowed for variables
            cur.peek()
                .is_some_and(|c| matches!(c, 'x' | 'y' | 'z' | 'w'))
        };
        if !expect_factor {
            return Ok(ParsedTerm { coeff, factors });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn md(v: &[u32]) -> Multidegree {
        Multidegree::new(v.to_vec())
    }

    fn k() -> PrimeField {
        PrimeField::default()
    }

    #[test]
    fn degrevlex_examples() {
        assert_eq!(
            degrevlex_compare(&md(&[2, 0]), &md(&[1, 1])),
            Ordering::Greater
        );
        assert_eq!(
            degrevlex_compare(&md(&[1, 1]), &md(&[0, 2])),
            Ordering::Greater
        );
        // y² > xz in k[x,y,z]
        assert_eq!(
            degrevlex_compare(&md(&[0, 2, 0]), &md(&[1, 0, 1])),
            Ordering::Greater
        );
        assert_eq!(
            degrevlex_compare(&md(&[0, 0, 1]), &md(&[1, 1, 0])),
            Ordering::Less
        );
    }

    #[test]
    fn parse_and_render() {
        let f = Polynomial::parse("3*x0^2*x1 + x2^3", 3, &k()).unwrap();
        assert_eq!(f.to_string(), "3*x0^2*x1 + x2^3");
        assert!(f.is_homogeneous());
        let g = Polynomial::parse("x^2 - y^2", 2, &k()).unwrap();
        assert_eq!(g.render(&k()), "x0^2 - x1^2");
        assert_eq!(g.terms()[1].coeff, 32002);
        let h = Polynomial::parse("xy", 2, &k()).unwrap();
        assert_eq!(h.lead_monomial(), Some(&md(&[1, 1])));
        let i = Polynomial::parse("x1 x0 + 2 x0^2 - x0*x1", 2, &k()).unwrap();
        assert_eq!(i.render(&k()), "2*x0^2");
        assert!(Polynomial::parse("x0 + x1^2", 2, &k()).unwrap().degree() == Some(2));
        assert!(!Polynomial::parse("x0 + x1^2", 2, &k())
            .unwrap()
            .is_homogeneous());
    }

    #[test]
    fn coefficients_reduce_mod_p() {
        let f = Polynomial::parse("32003*x0 + 32004*x1", 2, &k()).unwrap();
        assert_eq!(f.to_string(), "x1");
        assert!(Polynomial::parse("x0 - x0", 1, &k()).unwrap().is_zero());
        assert_eq!(Polynomial::parse("5", 1, &k()).unwrap().to_string(), "5");
    }

    #[test]
    fn parse_errors_have_columns() {
        match parse_terms("x0 + + x1", 3, 10) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (3, 15)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_terms("x0 * ", 1, 1),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_terms("q", 1, 1),
            Err(Error::Parse { column: 1, .. })
        ));
        assert!(matches!(
            Polynomial::parse("x5", 2, &k()),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(parse_terms("", 1, 1), Err(Error::Parse { .. })));
    }

    #[test]
    fn arithmetic() {
        let f = k();
        let a = Polynomial::parse("x0 + x1", 2, &f).unwrap();
        let b = Polynomial::parse("x0 - x1", 2, &f).unwrap();
        assert_eq!(a.mul(&f, &b).render(&f), "x0^2 - x1^2");
        assert!(a.sub(&f, &a).is_zero());
        assert_eq!(a.add(&f, &b).render(&f), "2*x0");
        let m = a.mul_term(&f, 2, &md(&[0, 1]));
        assert_eq!(m.render(&f), "2*x0*x1 + 2*x1^2");
        assert_eq!(
            Polynomial::parse("3*x0 + x1", 2, &f)
                .unwrap()
                .make_monic(&f)
                .lead()
                .unwrap()
                .coeff,
            1
        );
    }
}
