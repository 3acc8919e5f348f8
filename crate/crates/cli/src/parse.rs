//! Ideal files: a `vars:` header followed by one homogeneous generator per
//! line. `#` starts a comment; blank lines are ignored.
//!
//! ```text
//! vars: x1 x2 x3 x4
//! x1*x3^2 + x2^2*x4
//! -1/2 x1^3 + 3*x2^3
//! ```

use std::fmt;

use gins_core::{Coeff, Monomial, Polynomial, TermOrder};
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    MissingHeader,
    DuplicateVariable(String),
    UnknownVariable(String),
    Syntax(String),
    Inhomogeneous(u32, u32),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: ", self.line, self.column)?;
        match &self.kind {
            ParseErrorKind::MissingHeader => write!(f, "expected a `vars:` header"),
            ParseErrorKind::DuplicateVariable(v) => write!(f, "variable `{v}` declared twice"),
            ParseErrorKind::UnknownVariable(v) => write!(f, "unknown variable `{v}`"),
            ParseErrorKind::Syntax(s) => write!(f, "{s}"),
            ParseErrorKind::Inhomogeneous(a, b) => {
                write!(f, "generator is not homogeneous: terms of degrees {a} and {b}")
            }
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFile {
    pub vars: Vec<String>,
    pub gens: Vec<Polynomial>,
}

impl IdealFile {
    pub fn n(&self) -> usize {
        self.vars.len()
    }

    /// Default variable names `x1 .. xn`.
    pub fn standard(n: usize, gens: Vec<Polynomial>) -> Self {
        IdealFile { vars: (1..=n).map(|i| format!("x{i}")).collect(), gens }
    }
}

pub fn parse_ideal(text: &str) -> Result<IdealFile, ParseError> {
    let mut vars: Option<Vec<String>> = None;
    let mut gens = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        match &vars {
            None => vars = Some(parse_header(content, line_no)?),
            Some(v) => {
                let f = LineParser { chars: content.char_indices().collect(), pos: 0, line: line_no, vars: v }
                    .polynomial()?;
                if !f.is_zero() {
                    gens.push(f);
                }
            }
        }
    }
    let vars = vars.ok_or(ParseError { line: 1, column: 1, kind: ParseErrorKind::MissingHeader })?;
    Ok(IdealFile { vars, gens })
}

fn parse_header(content: &str, line: usize) -> Result<Vec<String>, ParseError> {
    let indent = content.len() - content.trim_start().len();
    let rest = content.trim_start().strip_prefix("vars:").ok_or(ParseError {
        line,
        column: indent + 1,
        kind: ParseErrorKind::MissingHeader,
    })?;
    let mut vars: Vec<String> = Vec::new();
    for name in rest.split_whitespace() {
        let column = content.find(name).unwrap_or(0) + 1;
        if !name.chars().next().is_some_and(char::is_alphabetic)
            || !name.chars().all(|c| c.is_alphanumeric() || c == '_')
        {
            return Err(ParseError {
                line,
                column,
                kind: ParseErrorKind::Syntax(format!("bad variable name `{name}`")),
            });
        }
        if vars.iter().any(|v| v == name) {
            return Err(ParseError { line, column, kind: ParseErrorKind::DuplicateVariable(name.into()) });
        }
        vars.push(name.into());
    }
    if vars.is_empty() {
        return Err(ParseError {
            line,
            column: indent + 6,
            kind: ParseErrorKind::Syntax("no variables declared".into()),
        });
    }
    Ok(vars)
}

struct LineParser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    line: usize,
    vars: &'a [String],
}

impl LineParser<'_> {
    fn column(&self) -> usize {
        self.chars.get(self.pos).map_or_else(|| self.chars.last().map_or(1, |c| c.0 + 2), |c| c.0 + 1)
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { line: self.line, column: self.column(), kind }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.1.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn number(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.1.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().map(|c| c.1).collect::<String>())
    }

    fn identifier(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        if !self.chars.get(self.pos).is_some_and(|c| c.1.is_alphabetic()) {
            return None;
        }
        while self.chars.get(self.pos).is_some_and(|c| c.1.is_alphanumeric() || c.1 == '_') {
            self.pos += 1;
        }
        Some(self.chars[start..self.pos].iter().map(|c| c.1).collect())
    }

    fn polynomial(mut self) -> Result<Polynomial, ParseError> {
        let mut terms: Vec<(Coeff, Monomial, usize)> = Vec::new();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                None if !first => break,
                None => return Err(self.err(ParseErrorKind::Syntax("empty generator".into()))),
                Some('+') => {
                    self.pos += 1;
                    Coeff::one()
                }
                Some('-') => {
                    self.pos += 1;
                    -Coeff::one()
                }
                Some(_) if first => Coeff::one(),
                Some(c) => return Err(self.err(ParseErrorKind::Syntax(format!("expected `+` or `-`, found `{c}`")))),
            };
            first = false;
            self.skip_ws();
            let column = self.column();
            let (c, m) = self.term()?;
            terms.push((sign * c, m, column));
        }
        let d0 = terms[0].1.degree();
        if let Some((_, m, column)) = terms.iter().find(|t| t.1.degree() != d0) {
            return Err(ParseError {
                line: self.line,
                column: *column,
                kind: ParseErrorKind::Inhomogeneous(d0, m.degree()),
            });
        }
        Ok(Polynomial::from_terms(self.vars.len(), TermOrder::Lex, terms.into_iter().map(|(c, m, _)| (c, m))))
    }

    fn term(&mut self) -> Result<(Coeff, Monomial), ParseError> {
        let n = self.vars.len();
        let mut coeff = Coeff::one();
        let mut exps = vec![0u32; n];
        if let Some(num) = self.number() {
            let mut c = parse_int(&num);
            if self.peek() == Some('/') {
                self.pos += 1;
                let den =
                    self.number().ok_or_else(|| self.err(ParseErrorKind::Syntax("expected a denominator".into())))?;
                let den = parse_int(&den);
                if den.is_zero() {
                    return Err(self.err(ParseErrorKind::Syntax("zero denominator".into())));
                }
                c /= den;
            }
            coeff = c;
            match self.peek() {
                Some('*') => self.pos += 1,
                Some(ch) if ch.is_alphabetic() => {}
                _ => return Ok((coeff, Monomial::new(exps))),
            }
        }
        loop {
            let column = self.column();
            let Some(name) = self.identifier() else {
                let what = self.peek().map_or("end of line".to_string(), |c| format!("`{c}`"));
                return Err(self.err(ParseErrorKind::Syntax(format!("expected a variable, found {what}"))));
            };
            let Some(k) = self.vars.iter().position(|v| *v == name) else {
                return Err(ParseError { line: self.line, column, kind: ParseErrorKind::UnknownVariable(name) });
            };
            let mut e = 1;
            if self.peek() == Some('^') {
                self.pos += 1;
                let digits =
                    self.number().ok_or_else(|| self.err(ParseErrorKind::Syntax("expected an exponent".into())))?;
                e = digits.parse().map_err(|_| self.err(ParseErrorKind::Syntax("exponent too large".into())))?;
            }
            exps[k] += e;
            if self.peek() == Some('*') {
                self.pos += 1;
                continue;
            }
            if self.peek().is_some_and(char::is_alphabetic) {
                continue;
            }
            break;
        }
        Ok((coeff, Monomial::new(exps)))
    }
}

fn parse_int(digits: &str) -> Coeff {
    digits.parse().expect("ASCII digits")
}

/// Render a polynomial with the given variable names, largest term first
/// under lex.
pub fn format_polynomial(f: &Polynomial, vars: &[String]) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let lex = f.with_order(&TermOrder::Lex);
    let mut out = String::new();
    for (k, t) in lex.terms().iter().enumerate() {
        let negative = t.coeff < Coeff::zero();
        let abs = if negative { -t.coeff.clone() } else { t.coeff.clone() };
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let powers: Vec<String> = t
            .mono
            .exps()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { vars[i].clone() } else { format!("{}^{e}", vars[i]) })
            .collect();
        match (abs.is_one(), powers.is_empty()) {
            (true, true) => out.push('1'),
            (true, false) => out.push_str(&powers.join("*")),
            (false, true) => out.push_str(&abs.to_string()),
            (false, false) => out.push_str(&format!("{abs}*{}", powers.join("*"))),
        }
    }
    out
}

pub fn format_ideal(file: &IdealFile) -> String {
    let mut out = format!("vars: {}\n", file.vars.join(" "));
    for g in &file.gens {
        out.push_str(&format_polynomial(g, &file.vars));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use gins_core::monomial::mono;

    #[test]
    fn monomial_line() {
        let f = parse_ideal("vars: x1 x2 x3\nx1^2\n").unwrap();
        assert_eq!(f.gens, vec![Polynomial::from_monomial(mono(3, &[(1, 2)]), TermOrder::Lex)]);
    }

    #[test]
    fn binomial_and_coefficients() {
        let f = parse_ideal("# comment\nvars: x1 x2 x3 x4\n\nx1*x3^2 + x2^2*x4  # f\n-1/2 x1^3 + 3*x2^3\n").unwrap();
        assert_eq!(f.gens.len(), 2);
        assert_eq!(format_polynomial(&f.gens[0], &f.vars), "x1*x3^2 + x2^2*x4");
        assert_eq!(format_polynomial(&f.gens[1], &f.vars), "-1/2*x1^3 + 3*x2^3");
    }

    #[test]
    fn inhomogeneous_rejected_with_degrees() {
        let e = parse_ideal("vars: x1 x2\nx1 + x2^2\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Inhomogeneous(1, 2));
        assert_eq!((e.line, e.column), (2, 6));
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_ideal("vars: x y\nx*z\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownVariable("z".into()));
        assert_eq!((e.line, e.column), (2, 3));
        assert_eq!(parse_ideal("x1^2\n").unwrap_err().kind, ParseErrorKind::MissingHeader);
        assert!(matches!(parse_ideal("vars: x\nx^\n").unwrap_err().kind, ParseErrorKind::Syntax(_)));
        assert!(matches!(parse_ideal("vars: x\nx x + \n").unwrap_err().kind, ParseErrorKind::Syntax(_)));
        assert!(matches!(parse_ideal("vars: x x\n").unwrap_err().kind, ParseErrorKind::DuplicateVariable(_)));
    }

    #[test]
    fn juxtaposed_variables_multiply() {
        let f = parse_ideal("vars: a b\n2 a b - b^2\n").unwrap();
        assert_eq!(format_polynomial(&f.gens[0], &f.vars), "2*a*b - b^2");
    }

    #[test]
    fn round_trip() {
        let text = "vars: x1 x2 x3\nx1^2 - 7/3*x2*x3\nx3^3\n";
        let f = parse_ideal(text).unwrap();
        assert_eq!(format_ideal(&f), text);
        assert_eq!(parse_ideal(&format_ideal(&f)).unwrap(), f);
    }
}
