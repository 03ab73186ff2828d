//! Text and JSON formats for monomial ideals.
//!
//! Text grammar, whitespace insignificant:
//!
//! ```text
//! input     := [ "n" "=" INT ";" ] [ generator { "," generator } ]
//! generator := "1" | factor { "*" factor }
//! factor    := "x" INT [ "^" INT ]
//! ```

use std::fmt;

use matroidal_core::{Monomial, MonomialIdeal};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    X,
    Int(u64),
    Caret,
    Star,
    Comma,
    Eq,
    Semi,
    N,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::X => f.write_str("'x'"),
            Tok::Int(v) => write!(f, "integer {v}"),
            Tok::Caret => f.write_str("'^'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Comma => f.write_str("','"),
            Tok::Eq => f.write_str("'='"),
            Tok::Semi => f.write_str("';'"),
            Tok::N => f.write_str("'n'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let err = |message: String| ParseError { line: l, column: col, message };
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let mut value: u64 = 0;
            while let Some(&d) = chars.peek() {
                let Some(digit) = d.to_digit(10) else { break };
                value = value
                    .checked_mul(10)
                    .and_then(|v| v.checked_add(digit as u64))
                    .ok_or_else(|| err("integer literal too large".into()))?;
                chars.next();
                column += 1;
            }
            out.push(Spanned { tok: Tok::Int(value), line: l, column: col });
            continue;
        } else {
            match c {
                'x' | 'X' => Tok::X,
                'n' | 'N' => Tok::N,
                '^' => Tok::Caret,
                '*' => Tok::Star,
                ',' => Tok::Comma,
                '=' => Tok::Eq,
                ';' => Tok::Semi,
                other => return Err(err(format!("unexpected character '{other}'"))),
            }
        };
        chars.next();
        column += 1;
        out.push(Spanned { tok, line: l, column: col });
    }
    out.push(Spanned { tok: Tok::End, line, column });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Spanned {
        self.toks[self.pos]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos];
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, at: Spanned, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { line: at.line, column: at.column, message: message.into() })
    }

    fn expect(&mut self, want: Tok) -> Result<Spanned, ParseError> {
        let t = self.bump();
        if t.tok == want {
            Ok(t)
        } else {
            self.fail(t, format!("expected {want}, found {}", t.tok))
        }
    }

    fn int(&mut self, what: &str) -> Result<(u64, Spanned), ParseError> {
        let t = self.bump();
        match t.tok {
            Tok::Int(v) => Ok((v, t)),
            other => self.fail(t, format!("expected {what}, found {other}")),
        }
    }

    /// Sparse exponent list `(index, exponent)` of one generator.
    fn generator(&mut self) -> Result<Vec<(usize, u32, Spanned)>, ParseError> {
        if let Tok::Int(1) = self.peek().tok {
            self.bump();
            return Ok(Vec::new());
        }
        let mut factors = Vec::new();
        loop {
            let start = self.peek();
            if start.tok != Tok::X {
                return self.fail(start, format!("expected a variable 'x<index>', found {}", start.tok));
            }
            self.bump();
            let (index, at) = self.int("variable index")?;
            if index == 0 {
                return self.fail(at, "variable indices start at 1");
            }
            let index = usize::try_from(index).or_else(|_| self.fail(at, "variable index too large"))?;
            let mut exp = 1u32;
            if self.peek().tok == Tok::Caret {
                self.bump();
                let (e, at) = self.int("exponent")?;
                if e == 0 {
                    return self.fail(at, "exponents must be positive");
                }
                exp = u32::try_from(e).or_else(|_| self.fail(at, "exponent overflow"))?;
            }
            factors.push((index, exp, start));
            match self.peek().tok {
                Tok::Star => {
                    self.bump();
                }
                Tok::Comma | Tok::End => return Ok(factors),
                Tok::X => {
                    let t = self.peek();
                    return self.fail(t, "factors must be joined by '*'");
                }
                other => {
                    let t = self.peek();
                    return self.fail(t, format!("expected '*', ',' or end of input, found {other}"));
                }
            }
        }
    }
}

/// Parses the text format. The ring has the declared `n` variables, or as
/// many as the largest index used.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let mut declared = None;
    if p.peek().tok == Tok::N {
        p.bump();
        p.expect(Tok::Eq)?;
        let (n, at) = p.int("variable count")?;
        let n = usize::try_from(n).or_else(|_| p.fail(at, "variable count too large"))?;
        if n > 64 {
            return p.fail(at, "at most 64 variables are supported");
        }
        declared = Some((n, at));
        p.expect(Tok::Semi)?;
    }

    let mut sparse = Vec::new();
    if p.peek().tok != Tok::End {
        loop {
            sparse.push(p.generator()?);
            let t = p.bump();
            match t.tok {
                Tok::Comma => continue,
                Tok::End => break,
                other => return p.fail(t, format!("expected ',' or end of input, found {other}")),
            }
        }
    }

    let used = sparse.iter().flatten().map(|(i, _, _)| *i).max().unwrap_or(0);
    let n = match declared {
        Some((n, _)) => {
            if let Some((i, _, at)) = sparse.iter().flatten().find(|(i, _, _)| *i > n) {
                return p.fail(*at, format!("variable x{i} exceeds declared n = {n}"));
            }
            n
        }
        None if used == 0 => {
            let t = p.peek();
            return p.fail(t, "cannot infer the number of variables; add a header 'n=<int>;'");
        }
        None => used,
    };
    if n > 64 {
        let t = p.peek();
        return p.fail(t, "at most 64 variables are supported");
    }

    let mut gens = Vec::with_capacity(sparse.len());
    for factors in sparse {
        let mut exps = vec![0u32; n];
        for (i, e, at) in factors {
            exps[i - 1] = exps[i - 1].checked_add(e).map_or_else(|| p.fail(at, "exponent overflow"), Ok)?;
        }
        gens.push(Monomial::new(exps));
    }
    MonomialIdeal::new(n, gens).map_err(|e| ParseError { line: 1, column: 1, message: e.to_string() })
}

/// `{"n": 4, "gens": [[1,0,1,0], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub n: usize,
    pub gens: Vec<Vec<u32>>,
}

impl From<&MonomialIdeal> for IdealJson {
    fn from(ideal: &MonomialIdeal) -> Self {
        IdealJson { n: ideal.nvars(), gens: ideal.gens().iter().map(|g| g.exponents().to_vec()).collect() }
    }
}

impl IdealJson {
    pub fn to_ideal(&self) -> Result<MonomialIdeal, String> {
        if self.n > 64 {
            return Err("at most 64 variables are supported".into());
        }
        for (k, g) in self.gens.iter().enumerate() {
            if g.len() != self.n {
                return Err(format!("generator {k} has {} exponents, expected {}", g.len(), self.n));
            }
        }
        MonomialIdeal::new(self.n, self.gens.iter().map(|g| Monomial::new(g.clone()))).map_err(|e| e.to_string())
    }
}

pub fn parse_json(text: &str) -> Result<MonomialIdeal, ParseError> {
    let raw: IdealJson = serde_json::from_str(text)
        .map_err(|e| ParseError { line: e.line(), column: e.column(), message: e.to_string() })?;
    raw.to_ideal().map_err(|message| ParseError { line: 1, column: 1, message })
}

/// JSON if the first non-blank character is `{`, text otherwise.
pub fn parse_input(text: &str) -> Result<MonomialIdeal, ParseError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_ideal(text)
    }
}

/// Text form accepted by [`parse_ideal`].
pub fn render_ideal(ideal: &MonomialIdeal) -> String {
    let gens: Vec<String> = ideal.gens().iter().map(|g| g.to_string()).collect();
    format!("n={}; {}", ideal.nvars(), gens.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use matroidal_core::VarSet;

    fn sq(n: usize, sets: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::from_varsets(n, sets.iter().map(|s| VarSet::from_indices(s.iter().copied()))).unwrap()
    }

    #[test]
    fn header_and_products() {
        let i = parse_ideal("n=4; x1*x3, x1*x4, x2*x3, x2*x4").unwrap();
        assert_eq!(i, sq(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]));
    }

    #[test]
    fn inferred_variable_count() {
        let i = parse_ideal("x1^2*x2, x1^2*x3").unwrap();
        assert_eq!(i.nvars(), 3);
        assert_eq!(i.gens(), &[Monomial::new(vec![2, 1, 0]), Monomial::new(vec![2, 0, 1])]);
    }

    #[test]
    fn header_without_generators_is_zero() {
        let i = parse_ideal("n=2;").unwrap();
        assert!(i.is_zero());
        assert_eq!(i.nvars(), 2);
    }

    #[test]
    fn whitespace_and_newlines_are_ignored() {
        let a = parse_ideal(" n = 3 ;\n x1 * x2 ,\n\tx3 ^ 2 ").unwrap();
        assert_eq!(a, parse_ideal("n=3;x1*x2,x3^2").unwrap());
    }

    #[test]
    fn repeated_factors_multiply() {
        assert_eq!(parse_ideal("x1*x1^2").unwrap().gens()[0], Monomial::new(vec![3]));
    }

    #[test]
    fn minimalizes() {
        let i = parse_ideal("x1, x1*x2, x2^3, x2^2").unwrap();
        assert_eq!(i.mu(), 2);
    }

    #[test]
    fn unit_generator() {
        assert!(parse_ideal("n=2; 1, x1").unwrap().is_unit());
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_ideal("x1x2").unwrap_err();
        assert_eq!((e.line, e.column), (1, 3));
        assert!(e.message.contains("'*'"));

        let e = parse_ideal("n=3;\nx1, x0").unwrap_err();
        assert_eq!((e.line, e.column), (2, 6));

        let e = parse_ideal("x1^4294967296").unwrap_err();
        assert!(e.message.contains("overflow"), "{e}");

        let e = parse_ideal("x1^4294967295*x1").unwrap_err();
        assert!(e.message.contains("overflow"), "{e}");

        let e = parse_ideal("n=2; x3").unwrap_err();
        assert_eq!((e.line, e.column), (1, 6));

        assert!(parse_ideal("x1,").is_err());
        assert!(parse_ideal("x1 x2").is_err());
        assert!(parse_ideal("x1 + x2").is_err());
        assert!(parse_ideal("").is_err());
        assert!(parse_ideal("x1^0").is_err());
    }

    #[test]
    fn json_round_trip() {
        let i = sq(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
        let text = serde_json::to_string(&IdealJson::from(&i)).unwrap();
        assert_eq!(parse_input(&text).unwrap(), i);
        assert_eq!(parse_input(&render_ideal(&i)).unwrap(), i);
    }

    #[test]
    fn json_rejects_ragged_vectors() {
        assert!(parse_json(r#"{"n": 2, "gens": [[1]]}"#).is_err());
        let e = parse_json("{\"n\": 2,\n \"gens\": [[1, ]]}").unwrap_err();
        assert_eq!(e.line, 2);
    }
}
