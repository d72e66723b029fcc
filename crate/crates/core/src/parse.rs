//! Text input for scalars, algebra elements and tensors.
//!
//! Grammar (juxtaposition multiplies, `⊗` or `@` separates tensor factors):
//!
//! ```text
//! sum    := ['+'|'-'] tensor (('+'|'-') tensor)*
//! tensor := prod (('⊗'|'@') prod)*
//! prod   := unary (['*'|'/'] unary)*
//! unary  := '-' unary | atom ['^' exp]
//! atom   := integer | 't' | 'a'..'d' | '(' sum ')'
//! exp    := ['-'] integer | '{' ['-'] integer '}'
//! ```

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ncring::{AlgebraElement, Letter, RewriteSystem};
use crate::scalar::{Rational, Scalar};
use crate::tensor::TensorElement;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    T,
    Gen(Letter),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Otimes,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        match ch {
            c if c.is_whitespace() || c == '·' => {}
            '0'..='9' => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                out.push(Tok::Num(digits.parse().expect("digits")));
            }
            't' => out.push(Tok::T),
            '+' => out.push(Tok::Plus),
            '-' | '−' => out.push(Tok::Minus),
            '*' => out.push(Tok::Star),
            '/' => out.push(Tok::Slash),
            '^' => out.push(Tok::Caret),
            '(' => out.push(Tok::LParen),
            ')' => out.push(Tok::RParen),
            '{' => out.push(Tok::LBrace),
            '}' => out.push(Tok::RBrace),
            '⊗' | '@' => out.push(Tok::Otimes),
            c => match Letter::from_char(c) {
                Some(x) => out.push(Tok::Gen(x)),
                None => return Err(Error::Parse(format!("unexpected character '{c}' at {i}"))),
            },
        }
        i += 1;
    }
    Ok(out)
}

#[derive(Clone, Debug)]
enum Expr {
    Num(BigInt),
    T,
    Gen(Letter),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Otimes(Box<Expr>, Box<Expr>),
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        match self.next() {
            Some(t) if t == tok => Ok(()),
            other => Err(Error::Parse(format!("expected {tok:?}, found {other:?}"))),
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut lhs = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Expr::Neg(Box::new(self.tensor()?))
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.tensor()?
            }
            _ => self.tensor()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.tensor()?));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.tensor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn tensor(&mut self) -> Result<Expr> {
        let mut lhs = self.prod()?;
        while self.peek() == Some(&Tok::Otimes) {
            self.pos += 1;
            lhs = Expr::Otimes(Box::new(lhs), Box::new(self.prod()?));
        }
        Ok(lhs)
    }

    fn prod(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Tok::Num(_) | Tok::T | Tok::Gen(_) | Tok::LParen) => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let e = self.exponent()?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64> {
        let braced = self.peek() == Some(&Tok::LBrace);
        if braced {
            self.pos += 1;
        }
        let neg = self.peek() == Some(&Tok::Minus);
        if neg {
            self.pos += 1;
        }
        let n = match self.next() {
            Some(Tok::Num(n)) => i64::try_from(n).map_err(|_| Error::Parse("exponent too large".into()))?,
            other => return Err(Error::Parse(format!("expected exponent, found {other:?}"))),
        };
        if braced {
            self.expect(Tok::RBrace)?;
        }
        Ok(if neg { -n } else { n })
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(Expr::Num(n)),
            Some(Tok::T) => Ok(Expr::T),
            Some(Tok::Gen(x)) => Ok(Expr::Gen(x)),
            Some(Tok::LParen) => {
                let e = self.sum()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            None => Err(Error::Parse("unexpected end of input".into())),
            Some(other) => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

fn parse_expr(s: &str) -> Result<Expr> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let e = p.sum()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(e)
}

#[derive(Clone, Debug)]
enum Value {
    Scalar(Scalar),
    Alg(AlgebraElement),
    Tensor(TensorElement),
}

impl Value {
    fn into_tensor(self) -> TensorElement {
        match self {
            Value::Scalar(c) => TensorElement::single(AlgebraElement::constant(c)),
            Value::Alg(x) => TensorElement::single(x),
            Value::Tensor(t) => t,
        }
    }

    fn into_alg(self) -> Result<AlgebraElement> {
        match self {
            Value::Scalar(c) => Ok(AlgebraElement::constant(c)),
            Value::Alg(x) => Ok(x),
            Value::Tensor(t) if t.n() == 1 => Ok(t.slot_element()),
            Value::Tensor(_) => Err(Error::Parse("expected an algebra element, found a tensor".into())),
        }
    }
}

struct Eval<'a> {
    ring: Option<&'a RewriteSystem>,
}

impl Eval<'_> {
    fn ring(&self) -> Result<&RewriteSystem> {
        self.ring.ok_or_else(|| Error::Parse("generators are not allowed in a scalar".into()))
    }

    fn eval(&self, e: &Expr) -> Result<Value> {
        Ok(match e {
            Expr::Num(n) => Value::Scalar(Scalar::from_rational(Rational::from_integer(n.clone()))),
            Expr::T => Value::Scalar(Scalar::t()),
            Expr::Gen(x) => {
                self.ring()?;
                Value::Alg(AlgebraElement::letter(*x))
            }
            Expr::Neg(x) => self.scale(self.eval(x)?, &Scalar::from_int(-1)),
            Expr::Add(x, y) => self.add(self.eval(x)?, self.eval(y)?, false)?,
            Expr::Sub(x, y) => self.add(self.eval(x)?, self.eval(y)?, true)?,
            Expr::Mul(x, y) => self.mul(self.eval(x)?, self.eval(y)?)?,
            Expr::Div(x, y) => match self.eval(y)? {
                Value::Scalar(d) => self.scale(self.eval(x)?, &d.inv()?),
                _ => return Err(Error::Parse("can only divide by a scalar".into())),
            },
            Expr::Pow(x, k) => match self.eval(x)? {
                Value::Scalar(c) => Value::Scalar(c.pow(*k)?),
                Value::Alg(a) => {
                    if *k < 0 {
                        return Err(Error::Parse("negative power of an algebra element".into()));
                    }
                    Value::Alg(self.ring()?.pow(&a, *k as usize))
                }
                Value::Tensor(_) => return Err(Error::Parse("power of a tensor".into())),
            },
            Expr::Otimes(x, y) => {
                let lhs = self.eval(x)?.into_tensor();
                let rhs = self.eval(y)?.into_tensor();
                Value::Tensor(lhs.otimes(&rhs))
            }
        })
    }

    fn scale(&self, v: Value, c: &Scalar) -> Value {
        match v {
            Value::Scalar(x) => Value::Scalar(&x * c),
            Value::Alg(x) => Value::Alg(x.scale(c)),
            Value::Tensor(x) => Value::Tensor(x.scale(c)),
        }
    }

    fn add(&self, x: Value, y: Value, subtract: bool) -> Result<Value> {
        let y = if subtract { self.scale(y, &Scalar::from_int(-1)) } else { y };
        Ok(match (x, y) {
            (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(&a + &b),
            (Value::Tensor(a), b) | (b, Value::Tensor(a)) => {
                let b = b.into_tensor();
                Value::Tensor(a.try_add(&b)?)
            }
            (a, b) => Value::Alg(&a.into_alg()? + &b.into_alg()?),
        })
    }

    fn mul(&self, x: Value, y: Value) -> Result<Value> {
        Ok(match (x, y) {
            (Value::Scalar(a), v) | (v, Value::Scalar(a)) => self.scale(v, &a),
            (Value::Alg(a), Value::Alg(b)) => Value::Alg(self.ring()?.mul(&a, &b)),
            _ => return Err(Error::Parse("tensors can only be multiplied by scalars in text input".into())),
        })
    }
}

/// Parses an element of Q(t), e.g. `1 - t^-1` or `(t^2 - 1)/(t + 2)`.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    match (Eval { ring: None }).eval(&parse_expr(s)?)? {
        Value::Scalar(c) => Ok(c),
        _ => Err(Error::Parse("expected a scalar".into())),
    }
}

/// Parses an algebra element and brings it to normal form in `ring`.
pub fn parse_element(s: &str, ring: &RewriteSystem) -> Result<AlgebraElement> {
    (Eval { ring: Some(ring) }).eval(&parse_expr(s)?)?.into_alg()
}

/// Parses a tensor such as `a ⊗ b - t * c ⊗ d` (also `a @ b`). A plain
/// algebra element parses as a one-factor tensor.
pub fn parse_tensor(s: &str, ring: &RewriteSystem) -> Result<TensorElement> {
    Ok((Eval { ring: Some(ring) }).eval(&parse_expr(s)?)?.into_tensor())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncring::parse_normal_word;

    #[test]
    fn scalars() {
        let s = parse_scalar("1 - t^-1").unwrap();
        assert_eq!(s, Scalar::one() - Scalar::t_pow(-1));
        assert_eq!(parse_scalar("t^{-2}").unwrap(), Scalar::t_pow(-2));
        assert_eq!(parse_scalar("(t^2 - 1)/(t - 1)").unwrap(), Scalar::t() + Scalar::one());
        assert_eq!(parse_scalar("3/2").unwrap(), Scalar::ratio(3, 2));
        assert!(parse_scalar("1/(t - t)").is_err());
        assert!(parse_scalar("a").is_err());
        assert!(parse_scalar("1 +").is_err());
    }

    #[test]
    fn scalar_display_round_trip() {
        for s in ["1 - t^-1", "(3/2)*t^2", "5 + 2*t^-3", "t - t^-1", "0", "-t^-1"] {
            assert_eq!(parse_scalar(s).unwrap().to_string(), s);
        }
        let r = parse_scalar("t/(t - 1)").unwrap();
        assert_eq!(parse_scalar(&r.to_string()).unwrap(), r);
    }

    #[test]
    fn elements_normalize() {
        let rs = RewriteSystem::bsl2();
        let x = parse_element("a d", &rs).unwrap();
        assert_eq!(x.to_string(), "1 + t * c b");
        let y = parse_element("a*d - t c b", &rs).unwrap();
        assert_eq!(y, AlgebraElement::one());
        let z = parse_element("t^-1 * b a", &rs).unwrap();
        assert_eq!(z, AlgebraElement::monomial(parse_normal_word("b a").unwrap(), Scalar::t_pow(-1)));
        let round = parse_element(&x.to_string(), &rs).unwrap();
        assert_eq!(round, x);
    }

    #[test]
    fn tensors() {
        let rs = RewriteSystem::bsl2();
        let x = parse_tensor("a ⊗ b - t * c @ d", &rs).unwrap();
        assert_eq!(x.n(), 2);
        assert_eq!(x.len(), 2);
        assert!(parse_tensor("a ⊗ b + c", &rs).is_err());
    }
}
