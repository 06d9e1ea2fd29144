//! Expressions over `x`, `y`, `h`, `Q = x²`, `D = y²`.
//!
//! ```text
//! expr   := ['-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' nat)?
//! base   := 'x' | 'y' | 'h' | 'Q' | 'D' | rational | '(' expr ')' | '[' expr ',' expr ']'
//! ```
//!
//! A rational is `digits` or `digits/digits`. Whitespace is ignored between
//! tokens.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{AlgebraElement, Gen};
use crate::{Error, Result, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Gen(Gen),
    /// `Q`, read as `x²`.
    Q,
    /// `D`, read as `y²`.
    D,
    Num(Scalar),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Bracket(Box<Expr>, Box<Expr>),
}

impl Expr {
    /// Normal form of the expression. Brackets are super-commutators and
    /// fail with [`Error::MixedParity`] on arguments of mixed parity.
    pub fn eval(&self) -> Result<AlgebraElement> {
        Ok(match self {
            Expr::Gen(g) => AlgebraElement::gen(*g),
            Expr::Q => AlgebraElement::x().pow(2),
            Expr::D => AlgebraElement::y().pow(2),
            Expr::Num(q) => AlgebraElement::constant(q.clone()),
            Expr::Neg(a) => -a.eval()?,
            Expr::Add(a, b) => &a.eval()? + &b.eval()?,
            Expr::Sub(a, b) => &a.eval()? - &b.eval()?,
            Expr::Mul(a, b) => a.eval()?.multiply(&b.eval()?),
            Expr::Pow(a, e) => a.eval()?.pow(*e),
            Expr::Bracket(a, b) => a.eval()?.super_commutator(&b.eval()?)?,
        })
    }
}

impl fmt::Display for Expr {
    /// Fully parenthesized; reparses to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Gen(g) => write!(f, "{}", g.symbol()),
            Expr::Q => write!(f, "Q"),
            Expr::D => write!(f, "D"),
            Expr::Num(q) => write!(f, "{q}"),
            Expr::Neg(a) => write!(f, "(-{a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a}*{b})"),
            Expr::Pow(a, e) => write!(f, "({a})^{e}"),
            Expr::Bracket(a, b) => write!(f, "[{a}, {b}]"),
        }
    }
}

/// Parses `text` into an [`Expr`]. Error positions are character offsets.
pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(p.error(format!("unexpected '{c}'")));
    }
    Ok(e)
}

/// Parses and evaluates in one step.
pub fn normal_form(text: &str) -> Result<AlgebraElement> {
    parse(text)?.eval()
}

/// Canonical text of an element; [`parse`] reads it back to the same element.
pub fn format_element(a: &AlgebraElement) -> String {
    a.to_string()
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            return Ok(());
        }
        match self.peek() {
            Some(found) => Err(self.error(format!("expected '{c}', found '{found}'"))),
            None => Err(self.error(format!("expected '{c}', found end of input"))),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = if self.eat('-') {
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        while self.eat('*') {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.base()?;
        if !self.eat('^') {
            return Ok(base);
        }
        self.skip_ws();
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.error("exponent must be a nonnegative integer"));
        }
        let e = digits
            .parse::<u32>()
            .map_err(|_| self.error(format!("exponent {digits} is too large")))?;
        Ok(Expr::Pow(Box::new(base), e))
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn base(&mut self) -> Result<Expr> {
        let Some(c) = self.peek() else {
            return Err(self.error("unexpected end of input"));
        };
        let simple = match c {
            'x' => Some(Expr::Gen(Gen::X)),
            'y' => Some(Expr::Gen(Gen::Y)),
            'h' => Some(Expr::Gen(Gen::H)),
            'Q' => Some(Expr::Q),
            'D' => Some(Expr::D),
            _ => None,
        };
        if let Some(e) = simple {
            self.pos += 1;
            return Ok(e);
        }
        match c {
            '(' => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            '[' => {
                self.pos += 1;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(']')?;
                Ok(Expr::Bracket(Box::new(a), Box::new(b)))
            }
            c if c.is_ascii_digit() => self.rational(),
            c => Err(self.error(format!("unexpected '{c}'"))),
        }
    }

    fn rational(&mut self) -> Result<Expr> {
        let start = self.pos;
        let num: BigInt = self.digits().parse().expect("digits");
        let save = self.pos;
        if self.eat('/') {
            self.skip_ws();
            let den = self.digits();
            if den.is_empty() {
                return Err(self.error("expected a denominator"));
            }
            let den: BigInt = den.parse().expect("digits");
            if den.is_zero() {
                self.pos = start;
                return Err(self.error("zero denominator"));
            }
            return Ok(Expr::Num(Scalar::new(num, den)));
        }
        self.pos = save;
        Ok(Expr::Num(Scalar::from_integer(num)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Monomial;
    use proptest::prelude::*;

    fn nf(s: &str) -> String {
        normal_form(s).unwrap().to_string()
    }

    #[test]
    fn examples() {
        assert_eq!(nf("x*y + y*x"), "2*h");
        assert_eq!(nf("[Q,y]"), "-2*x");
        assert_eq!(nf("[x, y]"), "2*h");
        assert_eq!(nf("y^3*x^3"), "-x^3*y^3 + 2*x^2*y^2*h - 4*x*y*h + 8*h^2 + 8*h");
        assert_eq!(nf("-x*y + 2*h"), "-x*y + 2*h");
        assert_eq!(nf("x - x"), "0");
        assert_eq!(nf("1/2*(x*y - y*x)"), "x*y - h");
        assert_eq!(nf("[h, D]"), "-2*y^2");
        assert_eq!(nf("(x+y)^0"), "1");
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(parse("x^-1"), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse("x +"), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse("[x, y"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("x y"), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse("1/0"), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(parse("z"), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(parse(""), Err(Error::Syntax { .. })));
    }

    #[test]
    fn mixed_parity_bracket() {
        assert_eq!(normal_form("[x + h, y]"), Err(Error::MixedParity));
    }

    fn element() -> impl Strategy<Value = AlgebraElement> {
        prop::collection::vec((0u32..4, 0u32..4, 0u32..4, -20i64..20, 1i64..6), 0..6).prop_map(|terms| {
            let mut a = AlgebraElement::zero();
            for (x, y, h, n, d) in terms {
                let m = AlgebraElement::monomial(Monomial::new(x, y, h), Scalar::new(n.into(), d.into()));
                a = &a + &m;
            }
            a
        })
    }

    fn tree() -> impl Strategy<Value = Expr> {
        let leaf = prop_oneof![
            Just(Expr::Gen(Gen::X)),
            Just(Expr::Gen(Gen::Y)),
            Just(Expr::Gen(Gen::H)),
            Just(Expr::Q),
            Just(Expr::D),
            (0i64..9, 1i64..4).prop_map(|(n, d)| Expr::Num(Scalar::new(n.into(), d.into()))),
        ];
        leaf.prop_recursive(3, 12, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(|a| Expr::Neg(Box::new(a))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
                (inner.clone(), 0u32..3).prop_map(|(a, e)| Expr::Pow(Box::new(a), e)),
                (inner.clone(), inner).prop_map(|(a, b)| Expr::Bracket(Box::new(a), Box::new(b))),
            ]
        })
    }

    proptest! {
        #[test]
        fn format_round_trip(a in element()) {
            prop_assert_eq!(normal_form(&format_element(&a)).unwrap(), a);
        }

        #[test]
        fn tree_round_trip(e in tree()) {
            let text = e.to_string();
            let back = parse(&text).unwrap();
            prop_assert_eq!(back.eval(), e.eval());
        }
    }
}
