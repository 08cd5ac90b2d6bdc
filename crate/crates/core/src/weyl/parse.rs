//! Text input for Weyl elements, accepting the renderer's output.
//!
//! Grammar: sums and differences of products, `^` with natural exponents,
//! parentheses, rational literals, the generators `x y z dx dy dz` (or their
//! dual spellings `xi_x`, `dxi_x`, ...) and, in the parametric ring, the
//! symbols `l1 l2`. Products are taken in textual order, so `dx*x` parses to
//! `x*dx + 1`.

use num_traits::Zero;

use super::{Kill, ModuleMonomial, ModuleVector, QuotientSignature, WeylElement, WeylMonomial, POSITIONS};
use crate::exact::{Coeff, Rational};
use crate::Error;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(num_bigint::BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>, Error> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Tok::Num(s[start..i].parse().unwrap())));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(s[start..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(Error::Parse {
                offset: i,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    len: usize,
}

impl<'a> Parser<'a> {
    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.len, |t| t.0)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, Error> {
        Err(Error::Parse {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn peek_op(&self, c: char) -> bool {
        matches!(self.toks.get(self.pos), Some((_, Tok::Op(d))) if *d == c)
    }

    fn expr<C: Coeff>(&mut self) -> Result<WeylElement<C>, Error> {
        let mut acc = self.term()?;
        loop {
            if self.peek_op('+') {
                self.pos += 1;
                acc = &acc + &self.term()?;
            } else if self.peek_op('-') {
                self.pos += 1;
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<C: Coeff>(&mut self) -> Result<WeylElement<C>, Error> {
        let mut acc = self.unary()?;
        loop {
            if self.peek_op('*') {
                self.pos += 1;
                acc = acc.mul(&self.unary()?);
            } else if self.peek_op('/') {
                self.pos += 1;
                let at = self.offset();
                let d: WeylElement<C> = self.unary()?;
                let r = constant_rational(&d).filter(|r| !r.is_zero());
                match r {
                    Some(r) => acc = acc.scale_rational(&(Rational::from_integer(1.into()) / r)),
                    None => {
                        return Err(Error::Parse {
                            offset: at,
                            message: "division only by nonzero rational constants".into(),
                        })
                    }
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary<C: Coeff>(&mut self) -> Result<WeylElement<C>, Error> {
        if self.peek_op('-') {
            self.pos += 1;
            return Ok(-&self.unary()?);
        }
        if self.peek_op('+') {
            self.pos += 1;
            return self.unary();
        }
        self.power()
    }

    fn power<C: Coeff>(&mut self) -> Result<WeylElement<C>, Error> {
        let base = self.atom()?;
        if !self.peek_op('^') {
            return Ok(base);
        }
        self.pos += 1;
        match self.toks.get(self.pos) {
            Some((_, Tok::Num(n))) => {
                let e = u32::try_from(n).or_else(|_| self.err("exponent too large"))?;
                self.pos += 1;
                Ok(base.pow(e))
            }
            _ => self.err("expected a natural exponent"),
        }
    }

    fn atom<C: Coeff>(&mut self) -> Result<WeylElement<C>, Error> {
        let Some((at, tok)) = self.toks.get(self.pos).cloned() else {
            return self.err("unexpected end of input");
        };
        self.pos += 1;
        match tok {
            Tok::Num(n) => Ok(WeylElement::constant(C::from_rational(Rational::from_integer(n)))),
            Tok::Op('(') => {
                let e = self.expr()?;
                if !self.peek_op(')') {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(e)
            }
            Tok::Op(c) => Err(Error::Parse {
                offset: at,
                message: format!("unexpected `{c}`"),
            }),
            Tok::Ident(name) => generator(&name).ok_or(Error::UnknownName(name)),
        }
    }
}

fn constant_rational<C: Coeff>(e: &WeylElement<C>) -> Option<Rational> {
    if e.is_zero() {
        return Some(Rational::zero());
    }
    if e.len() != 1 {
        return None;
    }
    let (m, c) = e.terms().next()?;
    if !m.is_one() {
        return None;
    }
    c.as_rational()
}

fn generator<C: Coeff>(name: &str) -> Option<WeylElement<C>> {
    let pos_of = |s: &str| ["x", "y", "z"].iter().position(|p| *p == s);
    if let Some(i) = pos_of(name) {
        return Some(WeylElement::coordinate(i));
    }
    if let Some(rest) = name.strip_prefix("dxi_") {
        return pos_of(rest).map(WeylElement::derivative);
    }
    if let Some(rest) = name.strip_prefix("xi_") {
        return pos_of(rest).map(WeylElement::coordinate);
    }
    if let Some(rest) = name.strip_prefix('d') {
        return pos_of(rest).map(WeylElement::derivative);
    }
    match name {
        "l1" => C::symbol(0).map(WeylElement::constant),
        "l2" => C::symbol(1).map(WeylElement::constant),
        _ => None,
    }
}

/// Parses a Weyl element over the coefficient ring `C`.
pub fn parse_element<C: Coeff>(s: &str) -> Result<WeylElement<C>, Error> {
    let toks = tokenize(s)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        len: s.len(),
    };
    let e = p.expr()?;
    if p.pos != toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Parses a vector of the realization `A/I` written in its surviving
/// variables.
pub fn parse_vector<C: Coeff>(s: &str, sig: QuotientSignature) -> Result<ModuleVector<C>, Error> {
    let e: WeylElement<C> = parse_element(s)?;
    let mut v = ModuleVector::zero(sig);
    for (m, c) in e.terms() {
        v.add_term(surviving_exponents(m, sig, s)?, c.clone());
    }
    Ok(v)
}

fn surviving_exponents(m: &WeylMonomial, sig: QuotientSignature, src: &str) -> Result<ModuleMonomial, Error> {
    let mut exps = [0; 3];
    for i in POSITIONS {
        let (keep, drop) = match sig.kills[i] {
            Kill::Coordinate => (m.deriv[i], m.coord[i]),
            Kill::Derivative => (m.coord[i], m.deriv[i]),
        };
        if drop != 0 {
            return Err(Error::Parse {
                offset: 0,
                message: format!("`{src}` uses a generator of the ideal {sig}"),
            });
        }
        exps[i] = keep;
    }
    Ok(ModuleMonomial(exps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, ParamPoly};

    type W = WeylElement<Rational>;

    #[test]
    fn products_follow_text_order() {
        let e: W = parse_element("dx*x").unwrap();
        assert_eq!(e, &W::x().mul(&W::dx()) + &W::one());
        let f: W = parse_element("x^2*dx + (z - 1/2*x*y)*dy").unwrap();
        assert_eq!(f.coefficient(&WeylMonomial::new([1, 1, 0], [0, 1, 0])), rat(-1, 2));
        assert_eq!(f.len(), 3);
    }

    #[test]
    fn division_by_constants() {
        let e: W = parse_element("x/4 - 3*y/2").unwrap();
        assert_eq!(e.coefficient(&WeylMonomial::coordinate(0)), rat(1, 4));
        assert!(parse_element::<Rational>("x/y").is_err());
        assert!(parse_element::<Rational>("x/0").is_err());
    }

    #[test]
    fn symbols_need_the_parametric_ring() {
        assert!(matches!(parse_element::<Rational>("l1*x"), Err(Error::UnknownName(_))));
        let e: WeylElement<ParamPoly> = parse_element("(l1 + 1)*x").unwrap();
        assert_eq!(e.coefficient(&WeylMonomial::coordinate(0)), &ParamPoly::l1() + &ParamPoly::constant(int(1)));
    }

    #[test]
    fn dual_names_share_positions() {
        let a: W = parse_element("-dxi_x*xi_x").unwrap();
        let b: W = parse_element("-dx*x").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn vectors_reject_ideal_generators() {
        let v: ModuleVector<Rational> = parse_vector("x*dz - 2*dy", QuotientSignature::S1).unwrap();
        assert_eq!(v.len(), 2);
        assert!(parse_vector::<Rational>("dx", QuotientSignature::S1).is_err());
    }

    #[test]
    fn malformed_inputs() {
        for s in ["", "x +", "(x", "x^y", "x $ y", "w"] {
            assert!(parse_element::<Rational>(s).is_err(), "{s}");
        }
    }
}
