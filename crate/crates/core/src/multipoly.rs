//! Sparse multivariate polynomials over [`Rational`] with exact arithmetic,
//! denominator-clearing substitution, evaluation, and a small expression
//! parser.
//!
//! The representation is canonical: a fixed global variable order
//! (a, b, c, x, y, z, t, then anything else alphabetically), no zero
//! coefficients, and no unused variables. Two polynomials are equal iff their
//! variable lists and term maps are equal.

use crate::rational::Rational;
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("clear_power {clear_power} is below the degree {degree} of {var}; denominator not cleared")]
    ClearPowerTooSmall {
        var: String,
        degree: u32,
        clear_power: u32,
    },
    #[error("no value assigned for variable {0}")]
    MissingVariable(String),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

fn parse_err(offset: usize, message: impl Into<String>) -> PolyError {
    PolyError::Parse {
        offset,
        message: message.into(),
    }
}

/// Rank used to order variables: the seven names the domain uses constantly
/// come first, anything else follows alphabetically.
fn var_rank(name: &str) -> (u8, &str) {
    match name {
        "a" => (0, name),
        "b" => (1, name),
        "c" => (2, name),
        "x" => (3, name),
        "y" => (4, name),
        "z" => (5, name),
        "t" => (6, name),
        _ => (7, name),
    }
}

fn var_cmp(lhs: &str, rhs: &str) -> Ordering {
    var_rank(lhs).cmp(&var_rank(rhs))
}

/// A sparse multivariate polynomial in canonical form.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    /// Variable names, sorted by the global order.
    vars: Vec<String>,
    /// Exponent vector (parallel to `vars`) to nonzero coefficient.
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly {
            vars: Vec::new(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(value: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(Vec::new(), value);
        }
        MultiPoly {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1], Rational::one());
        MultiPoly {
            vars: vec![name.to_string()],
            terms,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// The polynomial's degree in one variable (0 when absent).
    pub fn degree_in(&self, var: &str) -> u32 {
        match self.vars.iter().position(|v| v == var) {
            None => 0,
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap_or(0),
        }
    }

    /// Coefficient of a monomial given as `(var, exponent)` pairs; variables
    /// omitted from the list are taken to the zero power.
    pub fn coefficient(&self, monomial: &[(&str, u32)]) -> Rational {
        let mut exps = vec![0u32; self.vars.len()];
        for (name, e) in monomial {
            match self.vars.iter().position(|v| v == name) {
                Some(i) => exps[i] = *e,
                None if *e == 0 => {}
                None => return Rational::zero(),
            }
        }
        self.terms.get(&exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Remove variables that no longer occur and drop zero coefficients.
    fn canonicalize(mut self) -> Self {
        self.terms.retain(|_, coef| !coef.is_zero());
        let used: Vec<bool> = (0..self.vars.len())
            .map(|i| self.terms.keys().any(|e| e[i] > 0))
            .collect();
        if used.iter().all(|&u| u) {
            return self;
        }
        let vars: Vec<String> = self
            .vars
            .iter()
            .zip(&used)
            .filter(|(_, &u)| u)
            .map(|(v, _)| v.clone())
            .collect();
        let terms = self
            .terms
            .into_iter()
            .map(|(exps, coef)| {
                let exps = exps
                    .iter()
                    .zip(&used)
                    .filter(|(_, &u)| u)
                    .map(|(&e, _)| e)
                    .collect();
                (exps, coef)
            })
            .collect();
        MultiPoly { vars, terms }
    }

    /// Rewrite both polynomials over the union of their variable lists.
    fn align(&self, other: &Self) -> (Vec<String>, Vec<usize>, Vec<usize>) {
        let mut union: BTreeSet<&str> = BTreeSet::new();
        union.extend(self.vars.iter().map(String::as_str));
        union.extend(other.vars.iter().map(String::as_str));
        let mut vars: Vec<String> = union.into_iter().map(String::from).collect();
        vars.sort_by(|l, r| var_cmp(l, r));
        let index = |own: &[String]| -> Vec<usize> {
            own.iter()
                .map(|v| vars.iter().position(|u| u == v).unwrap())
                .collect()
        };
        (vars.clone(), index(&self.vars), index(&other.vars))
    }

    fn embed(exps: &[u32], positions: &[usize], width: usize) -> Vec<u32> {
        let mut out = vec![0u32; width];
        for (e, &p) in exps.iter().zip(positions) {
            out[p] = *e;
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let (vars, lpos, rpos) = self.align(other);
        let mut terms: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (exps, coef) in &self.terms {
            let key = Self::embed(exps, &lpos, vars.len());
            let entry = terms.entry(key).or_insert_with(Rational::zero);
            *entry = &*entry + coef;
        }
        for (exps, coef) in &other.terms {
            let key = Self::embed(exps, &rpos, vars.len());
            let entry = terms.entry(key).or_insert_with(Rational::zero);
            *entry = &*entry + coef;
        }
        MultiPoly { vars, terms }.canonicalize()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (vars, lpos, rpos) = self.align(other);
        let mut terms: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (le, lc) in &self.terms {
            let lkey = Self::embed(le, &lpos, vars.len());
            for (re, rc) in &other.terms {
                let mut key = lkey.clone();
                for (e, &p) in re.iter().zip(&rpos) {
                    key[p] += *e;
                }
                let entry = terms.entry(key).or_insert_with(Rational::zero);
                *entry = &*entry + &(lc * rc);
            }
        }
        MultiPoly { vars, terms }.canonicalize()
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * factor))
                .collect(),
        }
        .canonicalize()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = MultiPoly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitute `var := num/den` and clear denominators: returns
    /// `den^clear_power * p(..., var = num/den, ...)`, which is a polynomial
    /// whenever `clear_power` is at least the degree of `p` in `var`.
    pub fn substitute_ratio(
        &self,
        var: &str,
        num: &MultiPoly,
        den: &MultiPoly,
        clear_power: u32,
    ) -> Result<MultiPoly, PolyError> {
        let degree = self.degree_in(var);
        if clear_power < degree {
            return Err(PolyError::ClearPowerTooSmall {
                var: var.to_string(),
                degree,
                clear_power,
            });
        }
        let pos = self.vars.iter().position(|v| v == var);
        let mut acc = MultiPoly::zero();
        for (exps, coef) in &self.terms {
            let e = pos.map(|i| exps[i]).unwrap_or(0);
            let mut rest_exps = exps.clone();
            if let Some(i) = pos {
                rest_exps[i] = 0;
            }
            let rest = MultiPoly {
                vars: self.vars.clone(),
                terms: BTreeMap::from([(rest_exps, coef.clone())]),
            }
            .canonicalize();
            let piece = rest.mul(&num.pow(e)).mul(&den.pow(clear_power - e));
            acc = acc.add(&piece);
        }
        Ok(acc)
    }

    /// Evaluate at a full assignment of the polynomial's variables.
    pub fn eval(&self, assignment: &BTreeMap<String, Rational>) -> Result<Rational, PolyError> {
        let values: Vec<&Rational> = self
            .vars
            .iter()
            .map(|v| {
                assignment
                    .get(v)
                    .ok_or_else(|| PolyError::MissingVariable(v.clone()))
            })
            .collect::<Result<_, _>>()?;
        let mut total = Rational::zero();
        for (exps, coef) in &self.terms {
            let mut term = coef.clone();
            for (e, v) in exps.iter().zip(&values) {
                if *e > 0 {
                    term = &term * &v.pow(*e);
                }
            }
            total = &total + &term;
        }
        Ok(total)
    }

    /// Convenience evaluation from `(name, value)` pairs.
    pub fn eval_pairs(&self, pairs: &[(&str, &Rational)]) -> Result<Rational, PolyError> {
        let map = pairs
            .iter()
            .map(|(k, v)| (k.to_string(), (*v).clone()))
            .collect();
        self.eval(&map)
    }

    /// Parse an expression over `allowed_vars`.
    ///
    /// Grammar: `expr := ['-'] term (('+'|'-') term)*`,
    /// `term := factor ('*' factor)*`, `factor := base ('^' uint)?`,
    /// `base := integer | integer '/' integer | symbol | '(' expr ')'`.
    /// Whitespace is ignored; there is no implicit multiplication.
    pub fn parse(text: &str, allowed_vars: &[&str]) -> Result<MultiPoly, PolyError> {
        let tokens = lex(text)?;
        let mut parser = Parser {
            tokens,
            pos: 0,
            allowed_vars,
            input_len: text.len(),
        };
        let poly = parser.expr()?;
        match parser.peek() {
            None => Ok(poly),
            Some(tok) => Err(parse_err(tok.offset, format!("unexpected {}", tok.kind))),
        }
    }
}

impl fmt::Display for MultiPoly {
    /// Canonical rendering; `MultiPoly::parse` of the output reproduces the
    /// polynomial (over the same variable set).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Highest-degree terms first reads more naturally than map order.
        let mut first = true;
        for (exps, coef) in self.terms.iter().rev() {
            let negative = coef.is_negative();
            let mag = coef.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut pieces: Vec<String> = Vec::new();
            if mag != Rational::one() || exps.iter().all(|&e| e == 0) {
                pieces.push(if mag.is_integer() {
                    mag.to_string()
                } else {
                    format!("{}/{}", mag.numer(), mag.denom())
                });
            }
            for (e, v) in exps.iter().zip(&self.vars) {
                match e {
                    0 => {}
                    1 => pieces.push(v.clone()),
                    _ => pieces.push(format!("{v}^{e}")),
                }
            }
            write!(f, "{}", pieces.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Debug, Clone, PartialEq)]
enum TokenKind {
    Integer(num_bigint::BigInt),
    Symbol(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Integer(n) => write!(f, "integer {n}"),
            TokenKind::Symbol(s) => write!(f, "symbol {s}"),
            TokenKind::Plus => write!(f, "'+'"),
            TokenKind::Minus => write!(f, "'-'"),
            TokenKind::Star => write!(f, "'*'"),
            TokenKind::Caret => write!(f, "'^'"),
            TokenKind::Slash => write!(f, "'/'"),
            TokenKind::LParen => write!(f, "'('"),
            TokenKind::RParen => write!(f, "')'"),
        }
    }
}

struct Token {
    kind: TokenKind,
    offset: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, PolyError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let start = i;
        let b = bytes[i];
        let kind = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => TokenKind::Plus,
            b'-' => TokenKind::Minus,
            b'*' => TokenKind::Star,
            b'^' => TokenKind::Caret,
            b'/' => TokenKind::Slash,
            b'(' => TokenKind::LParen,
            b')' => TokenKind::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                tokens.push(Token {
                    kind: TokenKind::Integer(digits.parse().unwrap()),
                    offset: start,
                });
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                tokens.push(Token {
                    kind: TokenKind::Symbol(text[start..i].to_string()),
                    offset: start,
                });
                continue;
            }
            other => {
                return Err(parse_err(
                    start,
                    format!("unexpected character {:?}", other as char),
                ))
            }
        };
        tokens.push(Token { kind, offset: start });
        i += 1;
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    allowed_vars: &'a [&'a str],
    input_len: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next_offset(&self) -> usize {
        self.peek().map(|t| t.offset).unwrap_or(self.input_len)
    }

    fn eat(&mut self, kind: &TokenKind) -> bool {
        if self.peek().map(|t| &t.kind) == Some(kind) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultiPoly, PolyError> {
        let negated = self.eat(&TokenKind::Minus);
        let mut acc = self.term()?;
        if negated {
            acc = acc.neg();
        }
        loop {
            if self.eat(&TokenKind::Plus) {
                let rhs = self.term()?;
                acc = acc.add(&rhs);
            } else if self.eat(&TokenKind::Minus) {
                let rhs = self.term()?;
                acc = acc.sub(&rhs);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.factor()?;
        while self.eat(&TokenKind::Star) {
            let rhs = self.factor()?;
            acc = acc.mul(&rhs);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly, PolyError> {
        let base = self.base()?;
        if self.eat(&TokenKind::Caret) {
            let offset = self.next_offset();
            match self.peek().map(|t| &t.kind) {
                Some(TokenKind::Integer(n)) => {
                    let exp = u32::try_from(n.clone())
                        .map_err(|_| parse_err(offset, "exponent out of range"))?;
                    self.pos += 1;
                    Ok(base.pow(exp))
                }
                _ => Err(parse_err(offset, "expected an unsigned integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<MultiPoly, PolyError> {
        let offset = self.next_offset();
        let Some(token) = self.peek() else {
            return Err(parse_err(offset, "unexpected end of input"));
        };
        match token.kind.clone() {
            TokenKind::Integer(num) => {
                self.pos += 1;
                if self.eat(&TokenKind::Slash) {
                    let den_offset = self.next_offset();
                    match self.peek().map(|t| &t.kind) {
                        Some(TokenKind::Integer(den)) => {
                            if num_traits::Zero::is_zero(den) {
                                return Err(parse_err(den_offset, "zero denominator"));
                            }
                            let value = Rational::normalize(num, den.clone()).unwrap();
                            self.pos += 1;
                            Ok(MultiPoly::constant(value))
                        }
                        _ => Err(parse_err(den_offset, "expected a denominator integer")),
                    }
                } else {
                    Ok(MultiPoly::constant(Rational::from_integer(num)))
                }
            }
            TokenKind::Symbol(name) => {
                if !self.allowed_vars.contains(&name.as_str()) {
                    return Err(parse_err(offset, format!("unknown symbol {name:?}")));
                }
                self.pos += 1;
                Ok(MultiPoly::var(&name))
            }
            TokenKind::LParen => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.eat(&TokenKind::RParen) {
                    Ok(inner)
                } else {
                    Err(parse_err(self.next_offset(), "unbalanced parenthesis"))
                }
            }
            other => Err(parse_err(offset, format!("unexpected {other}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn p(text: &str) -> MultiPoly {
        MultiPoly::parse(text, &["a", "b", "c", "x", "y", "z", "t"]).unwrap()
    }

    #[test]
    fn square_of_difference() {
        let got = p("y - z").mul(&p("y - z"));
        assert_eq!(got, p("y^2 - 2*y*z + z^2"));
    }

    #[test]
    fn sub_self_is_zero() {
        let q = p("a*y^2 + b*y + c");
        assert!(q.sub(&q).is_zero());
        assert_eq!(q.sub(&q), MultiPoly::zero());
    }

    #[test]
    fn quadratic_product_leading_coefficient() {
        let prod = p("a*y^2 + b*y + c").mul(&p("a*z^2 + b*z + c"));
        assert_eq!(prod.term_count(), 9);
        assert_eq!(
            prod.coefficient(&[("a", 2), ("y", 2), ("z", 2)]),
            Rational::one()
        );
    }

    #[test]
    fn substitution_clears_denominators() {
        let x2 = p("x^2");
        let got = x2
            .substitute_ratio("x", &p("z^2"), &p("y"), 2)
            .unwrap();
        assert_eq!(got, p("z^4"));

        let x = p("x");
        let got = x
            .substitute_ratio("x", &p("y*z"), &p("2*y - z"), 1)
            .unwrap();
        assert_eq!(got, p("y*z"));

        let err = x2.substitute_ratio("x", &p("z"), &p("y"), 1).unwrap_err();
        assert!(matches!(err, PolyError::ClearPowerTooSmall { .. }));
    }

    #[test]
    fn eval_examples() {
        let c1 = p("a*b*y*z^2 + a*c*y^2 + 2*a*c*y*z + a*c*z^2 + b*c*y");
        let one = Rational::one();
        let two = r("2");
        let val = c1
            .eval_pairs(&[("a", &one), ("b", &one), ("c", &one), ("y", &two), ("z", &one)])
            .unwrap();
        assert_eq!(val, r("13"));

        let missing = c1.eval_pairs(&[("a", &one)]).unwrap_err();
        assert!(matches!(missing, PolyError::MissingVariable(_)));

        let c4 = p("3*a^2*y^2*z + 2*a*b*y^2 + 2*a*b*y*z - a*b*z^2 - 2*a*c*y + a*c*z + 2*b^2*y - b^2*z");
        let three = r("3");
        let val = c4
            .eval_pairs(&[("a", &one), ("b", &one), ("c", &one), ("y", &two), ("z", &three)])
            .unwrap();
        assert_eq!(val, r("47"));
    }

    #[test]
    fn eval_at_zero_gives_constant_term() {
        let q = p("x^2 + 3*x - 7/2");
        let zero = Rational::zero();
        assert_eq!(q.eval_pairs(&[("x", &zero)]).unwrap(), r("-7/2"));
    }

    #[test]
    fn parse_families() {
        let g1 = p("x*y - z^2");
        assert_eq!(g1.coefficient(&[("x", 1), ("y", 1)]), Rational::one());
        assert_eq!(g1.coefficient(&[("z", 2)]), r("-1"));

        let g2 = p("(x + y)*z - 2*x*y");
        assert_eq!(g2, p("x*z + y*z - 2*x*y"));

        let f = p("x^2 + x + 2");
        assert_eq!(f.degree_in("x"), 2);
        assert_eq!(f.coefficient(&[]), r("2"));
    }

    #[test]
    fn parse_rational_coefficients_and_unary_minus() {
        let f = MultiPoly::parse("1/2*t^2 + 1/2*t", &["t"]).unwrap();
        let two = r("2");
        assert_eq!(f.eval_pairs(&[("t", &two)]).unwrap(), r("3"));
        let neg = MultiPoly::parse("-t^2 + t", &["t"]).unwrap();
        assert_eq!(neg.eval_pairs(&[("t", &two)]).unwrap(), r("-2"));
        let nested = MultiPoly::parse("t*(-t + 1)", &["t"]).unwrap();
        assert_eq!(nested, neg);
    }

    #[test]
    fn parse_errors_carry_offsets() {
        let err = MultiPoly::parse("x + q", &["x"]).unwrap_err();
        assert_eq!(err, parse_err(4, "unknown symbol \"q\""));
        let err = MultiPoly::parse("(x + 1", &["x"]).unwrap_err();
        assert!(matches!(err, PolyError::Parse { offset: 6, .. }));
        let err = MultiPoly::parse("x ^ y", &["x", "y"]).unwrap_err();
        assert!(matches!(err, PolyError::Parse { offset: 4, .. }));
        let err = MultiPoly::parse("x + ", &["x"]).unwrap_err();
        assert!(matches!(err, PolyError::Parse { offset: 4, .. }));
        let err = MultiPoly::parse("1/0", &["x"]).unwrap_err();
        assert!(matches!(err, PolyError::Parse { offset: 2, .. }));
        let err = MultiPoly::parse("x x", &["x"]).unwrap_err();
        assert!(matches!(err, PolyError::Parse { offset: 2, .. }));
    }

    #[test]
    fn display_parse_round_trip() {
        for text in [
            "x*y - z^2",
            "a*y^2 + b*y + c",
            "-3*x^2 + 1/2*x - 7",
            "0",
            "42",
        ] {
            let q = p(text);
            assert_eq!(p(&q.to_string()), q);
        }
    }

    #[test]
    fn unused_variables_do_not_affect_equality() {
        // x*y - x*y mentions x and y but collapses to zero.
        let q = p("x*y - x*y + 3");
        assert_eq!(q, MultiPoly::constant(r("3")));
        assert!(q.variables().is_empty());
    }
}
