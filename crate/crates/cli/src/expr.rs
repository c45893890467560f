//! Poset expressions.
//!
//! ```text
//! EXPR := TERM { '*' TERM }
//! TERM := ATOM { '[' INT ']' }
//! ATOM := 'B(' INT ')' | 'T(' INT ')' | 'I(' INT ')' | 'I(' INT ',' INT ')'
//!       | 'ex1' | 'ex2' | 'load("' PATH '")' | '(' EXPR ')'
//! ```
//!
//! `[k]` binds tighter than `*`, and `*` is left-associative.

use std::fmt;

use posetlab_core::FamilySpec;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Family(FamilySpec),
    Load(String),
    Chain(Box<Expr>, usize),
    Prod(Box<Expr>, Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Family(spec) => write!(f, "{spec}"),
            Expr::Load(path) => write!(f, "load(\"{path}\")"),
            Expr::Chain(child, k) => match **child {
                Expr::Prod(..) => write!(f, "({child})[{k}]"),
                _ => write!(f, "{child}[{k}]"),
            },
            Expr::Prod(l, r) => match **r {
                Expr::Prod(..) => write!(f, "{l} * ({r})"),
                _ => write!(f, "{l} * {r}"),
            },
        }
    }
}

pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { src: input.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { offset: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut left = self.term()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let right = self.term()?;
            left = Expr::Prod(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.atom()?;
        while self.peek() == Some(b'[') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let k = self.int()?;
            if k == 0 {
                return Err(ParseError { offset: at, message: "chain length must be at least 1".into() });
            }
            self.expect(b']')?;
            e = Expr::Chain(Box::new(e), k);
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let word = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match word {
                    "ex1" => Ok(Expr::Family(FamilySpec::ExampleSym)),
                    "ex2" => Ok(Expr::Family(FamilySpec::ExampleUni)),
                    "B" => Ok(Expr::Family(FamilySpec::Boolean { n: self.single_arg()? })),
                    "T" => Ok(Expr::Family(FamilySpec::Total { k: self.single_arg()? })),
                    "I" => {
                        self.expect(b'(')?;
                        let n = self.int()?;
                        let spec = if self.peek() == Some(b',') {
                            self.pos += 1;
                            self.skip_ws();
                            let at = self.pos;
                            let m = self.int()?;
                            if m == 0 {
                                return Err(ParseError {
                                    offset: at,
                                    message: "number of mark classes must be at least 1".into(),
                                });
                            }
                            FamilySpec::IsotropicGeneral { n, m }
                        } else {
                            FamilySpec::Isotropic { n }
                        };
                        self.expect(b')')?;
                        Ok(Expr::Family(spec))
                    }
                    "load" => {
                        self.expect(b'(')?;
                        let path = self.string()?;
                        self.expect(b')')?;
                        Ok(Expr::Load(path))
                    }
                    _ => Err(ParseError { offset: start, message: format!("unknown name `{word}`") }),
                }
            }
            Some(_) => Err(self.error("expected a poset")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn single_arg(&mut self) -> Result<usize, ParseError> {
        self.expect(b'(')?;
        let v = self.int()?;
        self.expect(b')')?;
        Ok(v)
    }

    fn int(&mut self) -> Result<usize, ParseError> {
        match self.peek() {
            Some(b'-') => return Err(self.error("parameters must be nonnegative")),
            Some(c) if c.is_ascii_digit() => {}
            _ => return Err(self.error("expected an integer")),
        }
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        text.parse()
            .map_err(|_| ParseError { offset: start, message: format!("integer `{text}` is too large") })
    }

    fn string(&mut self) -> Result<String, ParseError> {
        self.expect(b'"')?;
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos] != b'"' {
            self.pos += 1;
        }
        if self.pos == self.src.len() {
            return Err(ParseError { offset: start - 1, message: "unterminated string".into() });
        }
        let s = String::from_utf8(self.src[start..self.pos].to_vec())
            .map_err(|_| ParseError { offset: start, message: "path is not valid UTF-8".into() })?;
        self.pos += 1;
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(spec: FamilySpec) -> Box<Expr> {
        Box::new(Expr::Family(spec))
    }

    #[test]
    fn postfix_chain() {
        assert_eq!(parse("B(3)[2]").unwrap(), Expr::Chain(fam(FamilySpec::Boolean { n: 3 }), 2));
        assert_eq!(
            parse("B(1)[2][3]").unwrap(),
            Expr::Chain(Box::new(Expr::Chain(fam(FamilySpec::Boolean { n: 1 }), 2)), 3)
        );
    }

    #[test]
    fn parenthesized_product() {
        let t1 = || fam(FamilySpec::Total { k: 1 });
        assert_eq!(parse("(T(1)*T(1))[2]").unwrap(), Expr::Chain(Box::new(Expr::Prod(t1(), t1())), 2));
    }

    #[test]
    fn precedence_and_associativity() {
        let a = || fam(FamilySpec::ExampleSym);
        let b = || fam(FamilySpec::ExampleUni);
        assert_eq!(parse("ex1*ex2[2]").unwrap(), Expr::Prod(a(), Box::new(Expr::Chain(b(), 2))));
        assert_eq!(parse("(ex1*ex2)[2]").unwrap(), Expr::Chain(Box::new(Expr::Prod(a(), b())), 2));
        assert_eq!(
            parse("ex1 * ex2 * ex1").unwrap(),
            Expr::Prod(Box::new(Expr::Prod(a(), b())), a())
        );
    }

    #[test]
    fn whitespace_and_families() {
        assert_eq!(
            parse("  I ( 2 , 3 ) [ 1 ] ").unwrap(),
            Expr::Chain(fam(FamilySpec::IsotropicGeneral { n: 2, m: 3 }), 1)
        );
        assert_eq!(parse("I(2)").unwrap(), Expr::Family(FamilySpec::Isotropic { n: 2 }));
        assert_eq!(parse("load(\"a b.json\")").unwrap(), Expr::Load("a b.json".into()));
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(parse("B(").unwrap_err().offset, 2);
        assert_eq!(parse("B(3)[0]").unwrap_err().offset, 5);
        assert_eq!(parse("T(-1)").unwrap_err().offset, 2);
        assert_eq!(parse("I(1,0)").unwrap_err().offset, 4);
        assert_eq!(parse("Q(1)").unwrap_err().offset, 0);
        assert_eq!(parse("ex1 ex2").unwrap_err().offset, 4);
        assert_eq!(parse("").unwrap_err().offset, 0);
        assert_eq!(parse("load(\"x").unwrap_err().offset, 5);
        assert!(parse("T(99999999999999999999999)").is_err());
    }

    #[test]
    fn printing() {
        for s in ["B(3)[2]", "(T(1) * T(1))[2]", "ex1 * (ex2 * ex1)", "I(2,3)[3]", "load(\"p.json\") * I(1)"] {
            assert_eq!(parse(s).unwrap().to_string(), s);
        }
    }
}
