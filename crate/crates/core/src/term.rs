//! Terms and polynomials, their prefix concrete syntax, and the syntactic
//! maps used by the analyses: evaluations, variable renamings and constant
//! remappings.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! term     := variable | constant | symbol '(' term (',' term)* ')'
//! variable := 'x' digits        (1-based)
//! constant := '#' digits        (a carrier value)
//! symbol   := identifier | single punctuation glyph
//! ```

use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::Signature;
use crate::error::{Error, Result};
use crate::table::Evaluation;

/// A term of the term algebra, or a polynomial when it contains constants.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    /// `x_i`, 1-based.
    Var(usize),
    /// A constant symbol for a carrier value.
    Const(u32),
    Apply(String, Vec<Term>),
}

impl Term {
    pub fn var(index: usize) -> Term {
        Term::Var(index)
    }

    pub fn apply(symbol: impl Into<String>, args: Vec<Term>) -> Term {
        Term::Apply(symbol.into(), args)
    }

    /// True when the value is a term rather than a proper polynomial.
    pub fn is_pure_term(&self) -> bool {
        match self {
            Term::Var(_) => true,
            Term::Const(_) => false,
            Term::Apply(_, args) => args.iter().all(Term::is_pure_term),
        }
    }

    /// `var(t)`.
    pub fn variables(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        self.visit(&mut |t| {
            if let Term::Var(i) = t {
                out.insert(*i);
            }
        });
        out
    }

    /// Largest variable index, 0 for a ground polynomial.
    pub fn max_var(&self) -> usize {
        let mut max = 0;
        self.visit(&mut |t| {
            if let Term::Var(i) = t {
                max = max.max(*i);
            }
        });
        max
    }

    /// Pre-order traversal.
    pub fn visit<'a>(&'a self, f: &mut impl FnMut(&'a Term)) {
        f(self);
        if let Term::Apply(_, args) = self {
            for a in args {
                a.visit(f);
            }
        }
    }

    fn map_leaves(&self, f: &impl Fn(&Term) -> Term) -> Term {
        match self {
            Term::Apply(s, args) => {
                Term::Apply(s.clone(), args.iter().map(|a| a.map_leaves(f)).collect())
            }
            leaf => f(leaf),
        }
    }

    /// `h(p)` for the evaluation `h`: assigned variables become constants.
    pub fn apply_evaluation(&self, ev: &Evaluation) -> Term {
        self.map_leaves(&|leaf| match leaf {
            Term::Var(i) => match ev.get(*i) {
                Some(c) => Term::Const(c),
                None => Term::Var(*i),
            },
            other => other.clone(),
        })
    }

    /// `f_sigma(t)`, where `sigma[i - 1]` is the image of `x_i`.
    pub fn rename_variables(&self, sigma: &[usize]) -> Result<Term> {
        check_variable_permutation(sigma)?;
        let n = sigma.len();
        if let Some(&index) = self.variables().iter().find(|&&i| i > n) {
            return Err(Error::VariableOutOfRange { index, arity: n });
        }
        Ok(self.map_leaves(&|leaf| match leaf {
            Term::Var(i) => Term::Var(sigma[*i - 1]),
            other => other.clone(),
        }))
    }

    /// Replaces every occurrence of `x_from` by `x_to`.
    pub fn substitute_variable(&self, from: usize, to: usize) -> Term {
        self.map_leaves(&|leaf| match leaf {
            Term::Var(i) if *i == from => Term::Var(to),
            other => other.clone(),
        })
    }

    /// `f_g(p)`: constants are mapped through `g`, variables are untouched.
    pub fn map_constants(&self, g: impl Fn(u32) -> u32) -> Term {
        self.map_leaves(&|leaf| match leaf {
            Term::Const(c) => Term::Const(g(*c)),
            other => other.clone(),
        })
    }
}

pub(crate) fn check_variable_permutation(sigma: &[usize]) -> Result<()> {
    let n = sigma.len();
    let mut hit = vec![false; n];
    for &image in sigma {
        if image == 0 || image > n {
            return Err(Error::NotPermutation {
                size: n,
                detail: format!("image x{image} out of range"),
            });
        }
        if std::mem::replace(&mut hit[image - 1], true) {
            return Err(Error::NotPermutation {
                size: n,
                detail: format!("x{image} is hit twice"),
            });
        }
    }
    Ok(())
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(i) => write!(f, "x{i}"),
            Term::Const(c) => write!(f, "#{c}"),
            Term::Apply(s, args) => {
                write!(f, "{s}(")?;
                for (n, a) in args.iter().enumerate() {
                    if n > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// Parses a term in prefix syntax, checking symbols and arities against `sig`.
pub fn parse(text: &str, sig: &Signature) -> Result<Term> {
    let mut parser = Parser {
        text,
        pos: 0,
        sig,
    };
    let term = parser.term()?;
    parser.skip_ws();
    if parser.pos < text.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(term)
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    sig: &'a Signature,
}

fn is_reserved(c: char) -> bool {
    matches!(c, '(' | ')' | ',' | '#') || c.is_whitespace()
}

impl<'a> Parser<'a> {
    fn error_at(&self, position: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        self.error_at(self.pos, message)
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if !pred(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.text[start..self.pos]
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected `{want}`, found `{c}`"))),
            None => Err(self.error(format!("expected `{want}`, found end of input"))),
        }
    }

    fn term(&mut self) -> Result<Term> {
        self.skip_ws();
        let start = self.pos;
        let c = self
            .peek()
            .ok_or_else(|| self.error("expected a term, found end of input"))?;
        if c == '#' {
            self.pos += 1;
            let digits = self.take_while(|c| c.is_ascii_digit());
            if digits.is_empty() {
                return Err(self.error_at(start, "constant `#` must be followed by digits"));
            }
            let value: u32 = digits
                .parse()
                .map_err(|_| self.error_at(start, format!("constant #{digits} is too large")))?;
            if value as usize >= self.sig.carrier() {
                return Err(self.error_at(
                    start,
                    format!(
                        "constant #{value} is outside carrier 0..{}",
                        self.sig.carrier()
                    ),
                ));
            }
            return Ok(Term::Const(value));
        }
        if is_reserved(c) {
            return Err(self.error(format!("expected a term, found `{c}`")));
        }
        let symbol = if c.is_alphabetic() || c == '_' {
            self.take_while(|c| c.is_alphanumeric() || c == '_')
        } else {
            self.pos += c.len_utf8();
            &self.text[start..self.pos]
        };
        if let Some(digits) = symbol.strip_prefix('x') {
            if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
                let index: usize = digits
                    .parse()
                    .map_err(|_| self.error_at(start, format!("variable {symbol} is too large")))?;
                if index == 0 {
                    return Err(self.error_at(start, "variables are numbered from x1"));
                }
                return Ok(Term::Var(index));
            }
        }
        let expected = self
            .sig
            .arity_of(symbol)
            .ok_or_else(|| self.error_at(start, format!("unknown operation symbol `{symbol}`")))?;
        self.expect('(')?;
        let mut args = vec![self.term()?];
        loop {
            self.skip_ws();
            match self.peek() {
                Some(',') => {
                    self.pos += 1;
                    args.push(self.term()?);
                }
                Some(')') => {
                    self.pos += 1;
                    break;
                }
                Some(c) => return Err(self.error(format!("expected `,` or `)`, found `{c}`"))),
                None => return Err(self.error("unclosed argument list")),
            }
        }
        if args.len() != expected {
            return Err(self.error_at(
                start,
                format!(
                    "operation `{symbol}` expects {expected} arguments, got {}",
                    args.len()
                ),
            ));
        }
        Ok(Term::Apply(symbol.to_string(), args))
    }
}
