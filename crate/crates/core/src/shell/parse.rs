//! Expression syntax.
//!
//! ```text
//! combo   := ['-'] summand (('+' | '-') summand)*
//! summand := [coeff ['*']] product
//! coeff   := INT ['/' INT]
//! product := circ ('*' circ)*          left-associated
//! circ    := atom ['@' atom]           a@b@c needs parentheses
//! atom    := NAME | 'e' | '(' product ')'
//! ```

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linear::{Coeff, Combo};
use crate::term::{Alphabet, Op, Term};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Name(String),
    Int(BigInt),
    At,
    Star,
    Plus,
    Minus,
    Slash,
    Open,
    Close,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Name(n) => format!("`{n}`"),
        Tok::Int(i) => format!("`{i}`"),
        Tok::At => "`@`".into(),
        Tok::Star => "`*`".into(),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Open => "`(`".into(),
        Tok::Close => "`)`".into(),
        Tok::End => "end of input".into(),
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((pos, Tok::Name(chars[start..i].iter().collect())));
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((pos, Tok::Int(digits.parse().expect("ascii digits"))));
            continue;
        }
        let tok = match c {
            '@' => Tok::At,
            '*' => Tok::Star,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '/' => Tok::Slash,
            '(' => Tok::Open,
            ')' => Tok::Close,
            _ => {
                return Err(Error::Parse {
                    position: pos,
                    message: format!("unexpected character `{c}`"),
                    expected: vec![],
                })
            }
        };
        out.push((pos, tok));
        i += 1;
    }
    out.push((chars.len() + 1, Tok::End));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    alphabet: &'a Alphabet,
}

const ATOM: &[&str] = &["generator", "`e`", "`(`"];

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T> {
        Err(Error::Parse {
            position: self.pos(),
            message: format!("unexpected {}", describe(self.peek())),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        })
    }

    fn atom(&mut self) -> Result<Term> {
        match self.peek().clone() {
            Tok::Name(n) => {
                let Some(l) = self.alphabet.letter(&n) else {
                    return Err(Error::Parse {
                        position: self.pos(),
                        message: format!("unknown generator `{n}`"),
                        expected: ATOM.iter().map(|s| s.to_string()).collect(),
                    });
                };
                self.bump();
                Ok(Term::leaf(l))
            }
            Tok::Open => {
                self.bump();
                let t = self.product()?;
                if *self.peek() != Tok::Close {
                    return self.fail(&["`@`", "`*`", "`)`"]);
                }
                self.bump();
                Ok(t)
            }
            _ => self.fail(ATOM),
        }
    }

    fn circ(&mut self) -> Result<Term> {
        let left = self.atom()?;
        if *self.peek() != Tok::At {
            return Ok(left);
        }
        self.bump();
        let right = self.atom()?;
        if *self.peek() == Tok::At {
            return Err(Error::Parse {
                position: self.pos(),
                message: "`@` chains need parentheses".into(),
                expected: vec!["`*`".into(), "`)`".into(), "end of input".into()],
            });
        }
        Ok(Term::circ(left, right))
    }

    fn product(&mut self) -> Result<Term> {
        let mut t = self.circ()?;
        while *self.peek() == Tok::Star {
            self.bump();
            let r = self.circ()?;
            t = Term::node(Op::Dot, t, r);
        }
        Ok(t)
    }

    fn coefficient(&mut self) -> Result<Option<Coeff>> {
        let Tok::Int(n) = self.peek().clone() else {
            return Ok(None);
        };
        self.bump();
        let mut c = Coeff::from_integer(n);
        if *self.peek() == Tok::Slash {
            self.bump();
            let Tok::Int(d) = self.peek().clone() else {
                return self.fail(&["integer"]);
            };
            if d == BigInt::from(0) {
                return Err(Error::Parse {
                    position: self.pos(),
                    message: "zero denominator".into(),
                    expected: vec![],
                });
            }
            self.bump();
            c /= Coeff::from_integer(d);
        }
        if *self.peek() == Tok::Star {
            self.bump();
        }
        Ok(Some(c))
    }

    fn combo(&mut self) -> Result<Combo<Term>> {
        let mut out = Combo::zero();
        let mut negative = false;
        if *self.peek() == Tok::Minus {
            self.bump();
            negative = true;
        }
        loop {
            let c = self.coefficient()?.unwrap_or_else(|| Coeff::from_integer(1.into()));
            let t = self.product()?;
            out.add_term(t, if negative { -c } else { c });
            match self.peek() {
                Tok::Plus => negative = false,
                Tok::Minus => negative = true,
                _ => break,
            }
            self.bump();
        }
        Ok(out)
    }

    fn finish(&self, expected: &[&str]) -> Result<()> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            self.fail(expected)
        }
    }
}

/// Parses a single term.
pub fn parse_term(src: &str, alphabet: &Alphabet) -> Result<Term> {
    let mut p = Parser {
        toks: lex(src)?,
        at: 0,
        alphabet,
    };
    let t = p.product()?;
    p.finish(&["`@`", "`*`", "end of input"])?;
    Ok(t)
}

/// Parses a rational linear combination of terms such as `a@b - 3/2 b@a`.
pub fn parse_combo(src: &str, alphabet: &Alphabet) -> Result<Combo<Term>> {
    let mut p = Parser {
        toks: lex(src)?,
        at: 0,
        alphabet,
    };
    let c = p.combo()?;
    p.finish(&["`@`", "`*`", "`+`", "`-`", "end of input"])?;
    Ok(c)
}

/// Relations, one combination per line; `#` starts a comment.
pub fn parse_relations(text: &str, alphabet: &Alphabet) -> Result<Vec<Combo<Term>>> {
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let c = parse_combo(body, alphabet).map_err(|e| match e {
            Error::Parse {
                position,
                message,
                expected,
            } => Error::Parse {
                position,
                message: format!("line {}: {message}", n + 1),
                expected,
            },
            other => other,
        })?;
        out.push(c);
    }
    Ok(out)
}
