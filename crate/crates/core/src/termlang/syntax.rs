use std::collections::BTreeSet;
use std::fmt;

use crate::profile::{parse_color_prefix, Color, Permutation};

/// The permutation of an [`Term::Act`] node.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PermExpr {
    /// `τ^k`, read modulo the arity of the argument.
    Tau(i64),
    /// A one-line permutation of `[0, n]`.
    Literal(Permutation),
}

/// A word in the generators `∘ᵢʲ`, `σ*` and `id_c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Id(Color),
    Compose {
        left: Box<Term>,
        i: usize,
        j: usize,
        right: Box<Term>,
    },
    Act {
        perm: PermExpr,
        term: Box<Term>,
    },
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    pub fn compose(left: Term, i: usize, j: usize, right: Term) -> Term {
        Term::Compose {
            left: Box::new(left),
            i,
            j,
            right: Box::new(right),
        }
    }

    pub fn tau(k: i64, term: Term) -> Term {
        Term::Act {
            perm: PermExpr::Tau(k),
            term: Box::new(term),
        }
    }

    pub fn act(sigma: Permutation, term: Term) -> Term {
        Term::Act {
            perm: PermExpr::Literal(sigma),
            term: Box::new(term),
        }
    }

    /// Variables occurring in the term.
    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(name) => {
                out.insert(name.clone());
            }
            Term::Id(_) => {}
            Term::Compose { left, right, .. } => {
                left.collect_vars(out);
                right.collect_vars(out);
            }
            Term::Act { term, .. } => term.collect_vars(out),
        }
    }

    /// Number of generators used.
    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) | Term::Id(_) => 1,
            Term::Compose { left, right, .. } => 1 + left.size() + right.size(),
            Term::Act { term, .. } => 1 + term.size(),
        }
    }
}

impl fmt::Display for PermExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermExpr::Tau(1) => f.write_str("tau"),
            PermExpr::Tau(k) => write!(f, "tau^{k}"),
            PermExpr::Literal(sigma) => write!(f, "{sigma}"),
        }
    }
}

/// The canonical, fully parenthesized form.
impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(name) => f.write_str(name),
            Term::Id(c) => write!(f, "id_{c}"),
            Term::Compose { left, i, j, right } => write!(f, "({left} o[{i},{j}] {right})"),
            Term::Act { perm, term } => write!(f, "({perm} * {term})"),
        }
    }
}

pub fn print_term(t: &Term) -> String {
    t.to_string()
}

/// A syntax error: the byte offset and what was expected there.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("at byte {pos}: expected {expected}")]
pub struct ParseError {
    pub pos: usize,
    pub expected: String,
}

/// Parses `term := VAR | "id_" COLOR | "(" term "o[" INT "," INT "]" term ")"
/// | "(" perm "*" term ")"` with `perm := "tau" ["^" INT] | "[" INT {" " INT} "]"`.
pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let mut p = Parser { src: text, pos: 0 };
    let t = p.term()?;
    p.ws();
    if p.pos != text.len() {
        return Err(p.error("end of input"));
    }
    Ok(t)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

fn is_ident_start(ch: char) -> bool {
    ch.is_alphabetic() || ch == '_'
}

fn is_ident_char(ch: char) -> bool {
    ch.is_alphanumeric() || ch == '_' || ch == '\''
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn error(&self, expected: &str) -> ParseError {
        ParseError {
            pos: self.pos,
            expected: expected.to_string(),
        }
    }

    fn ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        self.ws();
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&format!("`{token}`")))
        }
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        let len = self.rest().chars().take_while(char::is_ascii_digit).count();
        self.pos += len;
        &self.src[start..self.pos]
    }

    fn index(&mut self) -> Result<usize, ParseError> {
        self.ws();
        let at = self.pos;
        let digits = self.digits();
        digits.parse().map_err(|_| ParseError {
            pos: at,
            expected: "an index".into(),
        })
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.ws();
        let at = self.pos;
        let negative = self.eat("-");
        let digits = self.digits();
        let value: i64 = digits.parse().map_err(|_| ParseError {
            pos: at,
            expected: "an integer".into(),
        })?;
        Ok(if negative { -value } else { value })
    }

    fn ident(&mut self) -> Option<&str> {
        let start = self.pos;
        let mut chars = self.rest().chars();
        if !chars.next().is_some_and(is_ident_start) {
            return None;
        }
        let len: usize = self
            .rest()
            .chars()
            .take_while(|&ch| is_ident_char(ch))
            .map(char::len_utf8)
            .sum();
        self.pos += len;
        Some(&self.src[start..self.pos])
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        self.ws();
        if self.eat("(") {
            if let Some(perm) = self.try_perm()? {
                let term = self.term()?;
                self.expect(")")?;
                return Ok(Term::Act {
                    perm,
                    term: Box::new(term),
                });
            }
            let left = self.term()?;
            self.expect("o[")?;
            let i = self.index()?;
            self.expect(",")?;
            let j = self.index()?;
            self.expect("]")?;
            let right = self.term()?;
            self.expect(")")?;
            return Ok(Term::compose(left, i, j, right));
        }
        if self.rest().starts_with("id_") {
            let at = self.pos;
            self.pos += 3;
            let (color, used) = parse_color_prefix(self.rest()).ok_or(ParseError {
                pos: at + 3,
                expected: "a color".into(),
            })?;
            self.pos += used;
            return Ok(Term::Id(color));
        }
        match self.ident() {
            Some(name) => Ok(Term::Var(name.to_string())),
            None => Err(self.error("a term")),
        }
    }

    /// A permutation followed by `*`, or nothing (with the position
    /// restored) when the parenthesis opens a composition.
    fn try_perm(&mut self) -> Result<Option<PermExpr>, ParseError> {
        self.ws();
        let start = self.pos;
        if self.eat("[") {
            let mut images = Vec::new();
            loop {
                self.ws();
                if self.eat("]") {
                    break;
                }
                images.push(self.index()?);
            }
            let sigma = Permutation::new(images).map_err(|_| ParseError {
                pos: start,
                expected: "a permutation in one-line notation".into(),
            })?;
            self.expect("*")?;
            return Ok(Some(PermExpr::Literal(sigma)));
        }
        if self.ident() == Some("tau") {
            let mut k = 1;
            self.ws();
            if self.eat("^") {
                k = self.integer()?;
            }
            self.ws();
            if self.eat("*") {
                return Ok(Some(PermExpr::Tau(k)));
            }
        }
        self.pos = start;
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_three_shapes() {
        assert_eq!(
            parse_term("(x o[1,3] y)").unwrap(),
            Term::compose(Term::var("x"), 1, 3, Term::var("y"))
        );
        assert_eq!(
            parse_term("(tau^2 * (x o[1,3] y))").unwrap(),
            Term::tau(2, Term::compose(Term::var("x"), 1, 3, Term::var("y")))
        );
        let sigma = Permutation::new(vec![2, 0, 1]).unwrap();
        assert_eq!(parse_term("([2 0 1] * x)").unwrap(), Term::act(sigma, Term::var("x")));
    }

    #[test]
    fn prints_canonically() {
        for text in ["(x o[1,3] y)", "(tau^2 * (x o[1,3] y))", "([2 0 1] * x)", "id_c", "(tau * id_a^1)"] {
            assert_eq!(print_term(&parse_term(text).unwrap()), text);
        }
        let t = parse_term("  ( tau ^ -1 *(x   o[ 0 , 2 ]id_(a,b)) ) ").unwrap();
        assert_eq!(t.to_string(), "(tau^-1 * (x o[0,2] id_(a,b)))");
    }

    #[test]
    fn a_variable_named_tau_is_still_a_variable() {
        assert_eq!(
            parse_term("(tau o[0,0] y)").unwrap(),
            Term::compose(Term::var("tau"), 0, 0, Term::var("y"))
        );
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_term("(x o[1,] y)").unwrap_err();
        assert_eq!(e.pos, 7);
        let e = parse_term("([0 0] * x)").unwrap_err();
        assert_eq!(e.pos, 1);
        assert!(parse_term("(x y)").is_err());
        assert!(parse_term("x y").is_err());
    }
}
