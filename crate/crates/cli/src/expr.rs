//! The graph expression language.
//!
//! ```text
//! expr := atom | "lex(" expr "," expr ")" | "join(" expr ("," expr)+ ")"
//!       | "union(" expr ("," expr)+ ")" | "comp(" expr ")"
//! atom := "K" int | "P" int | "C" int | "E" int | "S" int | "F" int
//!       | "B(" int "," int ")"
//! ```
//!
//! `S n` is the star `K_{1,n}`, `E n` the edgeless graph on `n` vertices and
//! `B(m,n)` the biclique `K_{m,n}`. Whitespace is ignored everywhere.

use std::fmt;

use domlex::{Graph, MAX_ORDER};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GraphExpr {
    Complete(usize),
    Path(usize),
    Cycle(usize),
    Empty(usize),
    Star(usize),
    Friendship(usize),
    Biclique(usize, usize),
    Lex(Box<GraphExpr>, Box<GraphExpr>),
    Join(Vec<GraphExpr>),
    Union(Vec<GraphExpr>),
    Comp(Box<GraphExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot build {expr}: {source}")]
pub struct EvalError {
    pub expr: String,
    #[source]
    pub source: domlex::Error,
}

impl GraphExpr {
    pub fn parse(text: &str) -> Result<GraphExpr, ParseError> {
        let mut parser = Parser {
            text: text.as_bytes(),
            pos: 0,
        };
        let expr = parser.expr()?;
        parser.skip_ws();
        if parser.pos != text.len() {
            return parser.fail("unexpected trailing input");
        }
        Ok(expr)
    }

    /// Builds the graph bottom-up. Failures name the smallest subexpression
    /// that could not be built.
    pub fn eval(&self) -> Result<Graph, EvalError> {
        let wrap = |source| EvalError {
            expr: self.to_string(),
            source,
        };
        match self {
            GraphExpr::Complete(n) => Graph::complete(*n).map_err(wrap),
            GraphExpr::Path(n) => Graph::path(*n).map_err(wrap),
            GraphExpr::Cycle(n) => Graph::cycle(*n).map_err(wrap),
            GraphExpr::Empty(n) => Graph::empty(*n).map_err(wrap),
            GraphExpr::Star(n) => Graph::star(*n).map_err(wrap),
            GraphExpr::Friendship(n) => Graph::friendship(*n).map_err(wrap),
            GraphExpr::Biclique(m, n) => Graph::biclique(*m, *n).map_err(wrap),
            GraphExpr::Lex(a, b) => a.eval()?.lexicographic(&b.eval()?).map_err(wrap),
            GraphExpr::Comp(a) => Ok(a.eval()?.complement()),
            GraphExpr::Join(parts) | GraphExpr::Union(parts) => {
                let is_join = matches!(self, GraphExpr::Join(_));
                let mut acc = parts[0].eval()?;
                for part in &parts[1..] {
                    let next = part.eval()?;
                    acc = if is_join {
                        acc.join(&next)
                    } else {
                        acc.union(&next)
                    }
                    .map_err(wrap)?;
                }
                Ok(acc)
            }
        }
    }
}

impl fmt::Display for GraphExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |f: &mut fmt::Formatter<'_>, name: &str, parts: &[GraphExpr]| {
            write!(f, "{name}(")?;
            for (i, p) in parts.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")
        };
        match self {
            GraphExpr::Complete(n) => write!(f, "K{n}"),
            GraphExpr::Path(n) => write!(f, "P{n}"),
            GraphExpr::Cycle(n) => write!(f, "C{n}"),
            GraphExpr::Empty(n) => write!(f, "E{n}"),
            GraphExpr::Star(n) => write!(f, "S{n}"),
            GraphExpr::Friendship(n) => write!(f, "F{n}"),
            GraphExpr::Biclique(m, n) => write!(f, "B({m},{n})"),
            GraphExpr::Lex(a, b) => write!(f, "lex({a},{b})"),
            GraphExpr::Comp(a) => write!(f, "comp({a})"),
            GraphExpr::Join(parts) => list(f, "join", parts),
            GraphExpr::Union(parts) => list(f, "union", parts),
        }
    }
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn fail<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        self.fail_at(self.pos, message)
    }

    fn fail_at<T>(&self, offset: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            offset,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.text.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn expect(&mut self, byte: u8) -> Result<(), ParseError> {
        match self.peek() {
            Some(b) if b == byte => {
                self.pos += 1;
                Ok(())
            }
            Some(b) => self.fail(format!(
                "expected '{}', found '{}'",
                byte as char, b as char
            )),
            None => self.fail(format!("expected '{}', found end of input", byte as char)),
        }
    }

    fn int(&mut self) -> Result<(usize, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.text.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail("expected an integer");
        }
        let digits = std::str::from_utf8(&self.text[start..self.pos]).unwrap();
        match digits.parse() {
            Ok(v) => Ok((v, start)),
            Err(_) => self.fail_at(start, format!("integer {digits} is too large")),
        }
    }

    fn word(&mut self) -> (String, usize) {
        self.skip_ws();
        let start = self.pos;
        while self.text.get(self.pos).is_some_and(u8::is_ascii_alphabetic) {
            self.pos += 1;
        }
        let w = String::from_utf8_lossy(&self.text[start..self.pos]).into_owned();
        (w, start)
    }

    fn operands(&mut self) -> Result<Vec<GraphExpr>, ParseError> {
        self.expect(b'(')?;
        let mut parts = vec![self.expr()?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            parts.push(self.expr()?);
        }
        self.expect(b')')?;
        Ok(parts)
    }

    fn expr(&mut self) -> Result<GraphExpr, ParseError> {
        let (word, start) = self.word();
        let arity_error = |p: &Self, expected: &str, found: usize| {
            p.fail_at(
                start,
                format!("{word} takes {expected} operands, found {found}"),
            )
        };
        match word.as_str() {
            "lex" | "comp" | "join" | "union" => {
                let mut parts = self.operands()?;
                match (word.as_str(), parts.len()) {
                    ("lex", 2) => {
                        let b = parts.pop().unwrap();
                        let a = parts.pop().unwrap();
                        Ok(GraphExpr::Lex(Box::new(a), Box::new(b)))
                    }
                    ("lex", n) => arity_error(self, "exactly 2", n),
                    ("comp", 1) => Ok(GraphExpr::Comp(Box::new(parts.pop().unwrap()))),
                    ("comp", n) => arity_error(self, "exactly 1", n),
                    (_, 1) => arity_error(self, "at least 2", 1),
                    ("join", _) => Ok(GraphExpr::Join(parts)),
                    _ => Ok(GraphExpr::Union(parts)),
                }
            }
            "B" => {
                self.expect(b'(')?;
                let (m, _) = self.int()?;
                self.expect(b',')?;
                let (n, _) = self.int()?;
                self.expect(b')')?;
                if m < 1 || n < 1 || m + n > MAX_ORDER {
                    return self
                        .fail_at(start, format!("B({m},{n}) needs m, n >= 1 and m + n <= 64"));
                }
                Ok(GraphExpr::Biclique(m, n))
            }
            "K" | "P" | "C" | "E" | "S" | "F" => {
                let (n, _) = self.int()?;
                let (lo, hi, build): (usize, usize, fn(usize) -> GraphExpr) = match word.as_str() {
                    "K" => (0, MAX_ORDER, GraphExpr::Complete),
                    "P" => (0, MAX_ORDER, GraphExpr::Path),
                    "E" => (0, MAX_ORDER, GraphExpr::Empty),
                    "C" => (3, MAX_ORDER, GraphExpr::Cycle),
                    "S" => (1, MAX_ORDER - 1, GraphExpr::Star),
                    _ => (1, (MAX_ORDER - 1) / 2, GraphExpr::Friendship),
                };
                if n < lo || n > hi {
                    return self.fail_at(
                        start,
                        format!("{word}{n}: parameter must be in {lo}..={hi}"),
                    );
                }
                Ok(build(n))
            }
            "" => match self.peek() {
                Some(b) => self.fail(format!("unexpected '{}'", b as char)),
                None => self.fail("unexpected end of input"),
            },
            other => self.fail_at(start, format!("unknown name {other:?}")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use domlex::graph::is_isomorphic;

    fn parse(s: &str) -> GraphExpr {
        GraphExpr::parse(s).unwrap()
    }

    #[test]
    fn parses_products() {
        assert_eq!(
            parse("lex(P6,P4)"),
            GraphExpr::Lex(Box::new(GraphExpr::Path(6)), Box::new(GraphExpr::Path(4)))
        );
        assert_eq!(parse(" lex ( P6 , P4 ) "), parse("lex(P6,P4)"));
        let f2 = parse("join(K1,union(K2,K2))").eval().unwrap();
        assert_eq!(f2, Graph::friendship(2).unwrap());
        assert_eq!(parse("B( 2 ,3)"), GraphExpr::Biclique(2, 3));
        assert_eq!(
            parse("union(K1,K1,K1)").eval().unwrap(),
            Graph::empty(3).unwrap()
        );
    }

    #[test]
    fn reports_errors_with_offsets() {
        let err = GraphExpr::parse("C2").unwrap_err();
        assert_eq!(err.offset, 0);
        let err = GraphExpr::parse("lex(K2, C1)").unwrap_err();
        assert_eq!(err.offset, 8);
        for bad in [
            "",
            "k3",
            "lex(K2)",
            "lex(K1,K2,K3)",
            "join(K1)",
            "comp(K1,K2)",
            "K",
            "K3)",
            "lex(K2,K3",
            "S0",
            "F32",
            "B(0,2)",
            "X5",
            "K99999999999999999999999",
            "K65",
            "union()",
        ] {
            assert!(GraphExpr::parse(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn evaluation() {
        assert_eq!(parse("S3").eval().unwrap(), Graph::star(3).unwrap());
        let k22 = parse("lex(K2,E2)").eval().unwrap();
        assert!(is_isomorphic(&k22, &Graph::biclique(2, 2).unwrap()).unwrap());
        assert_eq!(parse("lex(E1,P4)").eval().unwrap(), Graph::path(4).unwrap());
        let err = parse("lex(K9,K8)").eval().unwrap_err();
        assert_eq!(err.expr, "lex(K9,K8)");
        let err = parse("comp(union(lex(K8,K8),K1))").eval().unwrap_err();
        assert_eq!(err.expr, "union(lex(K8,K8),K1)");
    }

    #[test]
    fn renders_canonically() {
        for s in [
            "lex(P6,P4)",
            "join(K1,union(K2,K2))",
            "comp(B(2,3))",
            "union(S3,F2,C5,E0)",
        ] {
            assert_eq!(parse(s).to_string(), s);
        }
    }
}
