//! Term syntax over the C-algebra signature (optionally with `down`) and a
//! decision procedure for identities and quasi-identities by exhaustive
//! valuation in the three-element algebra.
//!
//! The procedure is sound and complete for the respective varieties: the
//! three-element algebra generates both, and (quasi-)identities transfer to
//! subalgebras of its powers, which is every algebra in sight. Valuations
//! are swept in a fixed mixed-radix order (variable 0 most significant,
//! digits `T < F < U`) with early exit, so the reported counterexample is
//! deterministic.
//!
//! The textual form is a prefix s-expression, e.g.
//! `(or (var 0) (not (var 1)))` or `(down (var 0))`; the constants are the
//! bare atoms `T`, `F`, `U`.

use std::fmt;

use crate::error::{Error, Result};
use crate::trit::Trit;
use crate::vector::TritVec;

/// Abstract syntax for one term.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(usize),
    Const(Trit),
    Not(Box<Term>),
    And(Box<Term>, Box<Term>),
    Or(Box<Term>, Box<Term>),
    Down(Box<Term>),
}

/// Which equational theory to decide against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// The `(or, and, not)` signature; `down` is rejected.
    CAlgebra,
    /// The ada signature including `down`.
    Ada,
}

/// Valuation sweeps are capped at `3^VARIABLE_LIMIT` cases.
pub const VARIABLE_LIMIT: usize = 12;

impl Term {
    pub fn var(index: usize) -> Term {
        Term::Var(index)
    }

    pub fn constant(value: Trit) -> Term {
        Term::Const(value)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(t: Term) -> Term {
        Term::Not(Box::new(t))
    }

    pub fn and(lhs: Term, rhs: Term) -> Term {
        Term::And(Box::new(lhs), Box::new(rhs))
    }

    pub fn or(lhs: Term, rhs: Term) -> Term {
        Term::Or(Box::new(lhs), Box::new(rhs))
    }

    pub fn down(t: Term) -> Term {
        Term::Down(Box::new(t))
    }

    /// Number of variables, i.e. one past the largest index used.
    pub fn num_vars(&self) -> usize {
        match self {
            Term::Var(i) => i + 1,
            Term::Const(_) => 0,
            Term::Not(t) | Term::Down(t) => t.num_vars(),
            Term::And(a, b) | Term::Or(a, b) => a.num_vars().max(b.num_vars()),
        }
    }

    pub fn contains_down(&self) -> bool {
        match self {
            Term::Var(_) | Term::Const(_) => false,
            Term::Down(_) => true,
            Term::Not(t) => t.contains_down(),
            Term::And(a, b) | Term::Or(a, b) => a.contains_down() || b.contains_down(),
        }
    }

    /// Bottom-up evaluation under a scalar valuation.
    pub fn eval(&self, valuation: &[Trit]) -> Result<Trit> {
        Ok(match self {
            Term::Var(i) => *valuation.get(*i).ok_or(Error::UnboundVariable(*i))?,
            Term::Const(c) => *c,
            Term::Not(t) => t.eval(valuation)?.not(),
            Term::And(a, b) => a.eval(valuation)?.and(b.eval(valuation)?),
            Term::Or(a, b) => a.eval(valuation)?.or(b.eval(valuation)?),
            Term::Down(t) => t.eval(valuation)?.down(),
        })
    }

    /// Evaluation with variables ranging over elements of a power.
    pub fn eval_vec(&self, width: usize, valuation: &[TritVec]) -> Result<TritVec> {
        Ok(match self {
            Term::Var(i) => *valuation.get(*i).ok_or(Error::UnboundVariable(*i))?,
            Term::Const(c) => match c {
                Trit::T => TritVec::truth(width)?,
                Trit::F => TritVec::falsity(width)?,
                Trit::U => TritVec::undefined(width)?,
            },
            Term::Not(t) => t.eval_vec(width, valuation)?.not(),
            Term::And(a, b) => a.eval_vec(width, valuation)?.and(&b.eval_vec(width, valuation)?),
            Term::Or(a, b) => a.eval_vec(width, valuation)?.or(&b.eval_vec(width, valuation)?),
            Term::Down(t) => t.eval_vec(width, valuation)?.down(),
        })
    }

    /// Parses the prefix s-expression grammar.
    pub fn parse(input: &str) -> Result<Term> {
        let tokens = tokenize(input)?;
        let mut parser = Parser { tokens, pos: 0 };
        let term = parser.term()?;
        if parser.pos != parser.tokens.len() {
            let (pos, _) = parser.tokens[parser.pos];
            return Err(Error::TermParse {
                pos,
                message: "trailing input after term".to_string(),
            });
        }
        Ok(term)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(i) => write!(f, "(var {i})"),
            Term::Const(c) => write!(f, "{c}"),
            Term::Not(t) => write!(f, "(not {t})"),
            Term::And(a, b) => write!(f, "(and {a} {b})"),
            Term::Or(a, b) => write!(f, "(or {a} {b})"),
            Term::Down(t) => write!(f, "(down {t})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Open,
    Close,
    Atom(String),
}

fn tokenize(input: &str) -> Result<Vec<(usize, Token)>> {
    let mut tokens = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            '(' => {
                tokens.push((i, Token::Open));
                i += 1;
            }
            ')' => {
                tokens.push((i, Token::Close));
                i += 1;
            }
            c if c.is_whitespace() => i += 1,
            c if c.is_ascii_alphanumeric() => {
                let start = i;
                while i < bytes.len() && (bytes[i] as char).is_ascii_alphanumeric() {
                    i += 1;
                }
                tokens.push((start, Token::Atom(input[start..i].to_string())));
            }
            other => {
                return Err(Error::TermParse {
                    pos: i,
                    message: format!("unexpected character {other:?}"),
                })
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Result<&(usize, Token)> {
        self.tokens.get(self.pos).ok_or(Error::TermParse {
            pos: self.tokens.last().map(|(p, _)| *p).unwrap_or(0),
            message: "unexpected end of input".to_string(),
        })
    }

    fn next(&mut self) -> Result<(usize, Token)> {
        let tok = self.peek()?.clone();
        self.pos += 1;
        Ok(tok)
    }

    fn expect_close(&mut self) -> Result<()> {
        match self.next()? {
            (_, Token::Close) => Ok(()),
            (pos, _) => Err(Error::TermParse {
                pos,
                message: "expected ')'".to_string(),
            }),
        }
    }

    fn term(&mut self) -> Result<Term> {
        match self.next()? {
            (pos, Token::Atom(a)) => match a.as_str() {
                "T" => Ok(Term::Const(Trit::T)),
                "F" => Ok(Term::Const(Trit::F)),
                "U" => Ok(Term::Const(Trit::U)),
                other => Err(Error::TermParse {
                    pos,
                    message: format!("unknown constant {other:?} (expected T, F or U)"),
                }),
            },
            (_, Token::Open) => {
                let (head_pos, head) = self.next()?;
                let name = match head {
                    Token::Atom(name) => name,
                    _ => {
                        return Err(Error::TermParse {
                            pos: head_pos,
                            message: "expected an operator name after '('".to_string(),
                        })
                    }
                };
                let term = match name.as_str() {
                    "var" => match self.next()? {
                        (_, Token::Atom(digits)) => {
                            let index =
                                digits.parse::<usize>().map_err(|_| Error::TermParse {
                                    pos: head_pos,
                                    message: format!("invalid variable index {digits:?}"),
                                })?;
                            Term::Var(index)
                        }
                        (p, _) => {
                            return Err(Error::TermParse {
                                pos: p,
                                message: "expected a variable index".to_string(),
                            })
                        }
                    },
                    "not" => Term::not(self.term()?),
                    "down" => Term::down(self.term()?),
                    "and" => {
                        let lhs = self.term()?;
                        Term::and(lhs, self.term()?)
                    }
                    "or" => {
                        let lhs = self.term()?;
                        Term::or(lhs, self.term()?)
                    }
                    other => {
                        return Err(Error::TermParse {
                            pos: head_pos,
                            message: format!("unknown operator {other:?}"),
                        })
                    }
                };
                self.expect_close()?;
                Ok(term)
            }
            (pos, Token::Close) => Err(Error::TermParse {
                pos,
                message: "unexpected ')'".to_string(),
            }),
        }
    }
}

/// One equation between terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    pub lhs: Term,
    pub rhs: Term,
}

impl Equation {
    pub fn new(lhs: Term, rhs: Term) -> Self {
        Equation { lhs, rhs }
    }

    fn num_vars(&self) -> usize {
        self.lhs.num_vars().max(self.rhs.num_vars())
    }

    fn contains_down(&self) -> bool {
        self.lhs.contains_down() || self.rhs.contains_down()
    }

    fn holds_under(&self, valuation: &[Trit]) -> Result<bool> {
        Ok(self.lhs.eval(valuation)? == self.rhs.eval(valuation)?)
    }
}

/// Verdict of a decision run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    /// Falsifying valuation (values of variables `0..n`), when refuted.
    pub counterexample: Option<Vec<Trit>>,
}

/// Does `lhs = rhs` hold in the variety (of C-algebras or of adas)?
pub fn decide_identity(lhs: &Term, rhs: &Term, mode: Mode) -> Result<Verdict> {
    decide_quasi_identity(&[], &Equation::new(lhs.clone(), rhs.clone()), mode)
}

/// Does `premises ⟹ conclusion` hold in the variety? Quasi-identities also
/// transfer from the three-element generator to all of its subpowers.
pub fn decide_quasi_identity(
    premises: &[Equation],
    conclusion: &Equation,
    mode: Mode,
) -> Result<Verdict> {
    if mode == Mode::CAlgebra
        && (conclusion.contains_down() || premises.iter().any(Equation::contains_down))
    {
        return Err(Error::DownInCAlgebraMode);
    }
    let vars = premises
        .iter()
        .map(Equation::num_vars)
        .chain([conclusion.num_vars()])
        .max()
        .unwrap_or(0);
    if vars > VARIABLE_LIMIT {
        return Err(Error::TooManyVariables {
            vars,
            limit: VARIABLE_LIMIT,
        });
    }

    let total = 3u64.pow(vars as u32);
    let mut valuation = vec![Trit::T; vars];
    for idx in 0..total {
        let mut rem = idx;
        // Variable 0 is the most significant digit, so counterexamples are
        // reported smallest-first in the T < F < U coding.
        for slot in (0..vars).rev() {
            valuation[slot] = Trit::ALL[(rem % 3) as usize];
            rem /= 3;
        }
        let applicable = premises
            .iter()
            .map(|p| p.holds_under(&valuation))
            .collect::<Result<Vec<bool>>>()?
            .into_iter()
            .all(|ok| ok);
        if applicable && !conclusion.holds_under(&valuation)? {
            return Ok(Verdict {
                holds: false,
                counterexample: Some(valuation),
            });
        }
    }
    Ok(Verdict {
        holds: true,
        counterexample: None,
    })
}

/// The seven C-algebra identities as term equations, for reuse in tests
/// and the command-line interface.
pub fn c_axiom_equations() -> Vec<(&'static str, Equation)> {
    let a = || Term::var(0);
    let b = || Term::var(1);
    let c = || Term::var(2);
    vec![
        ("C1", Equation::new(Term::not(Term::not(a())), a())),
        (
            "C2",
            Equation::new(
                Term::not(Term::and(a(), b())),
                Term::or(Term::not(a()), Term::not(b())),
            ),
        ),
        (
            "C3",
            Equation::new(
                Term::and(Term::and(a(), b()), c()),
                Term::and(a(), Term::and(b(), c())),
            ),
        ),
        (
            "C4",
            Equation::new(
                Term::and(a(), Term::or(b(), c())),
                Term::or(Term::and(a(), b()), Term::and(a(), c())),
            ),
        ),
        (
            "C5",
            Equation::new(
                Term::and(Term::or(a(), b()), c()),
                Term::or(
                    Term::and(a(), c()),
                    Term::and(Term::not(a()), Term::and(b(), c())),
                ),
            ),
        ),
        (
            "C6",
            Equation::new(Term::or(a(), Term::and(a(), b())), a()),
        ),
        (
            "C7",
            Equation::new(
                Term::or(Term::and(a(), b()), Term::and(b(), a())),
                Term::or(Term::and(b(), a()), Term::and(a(), b())),
            ),
        ),
    ]
}

/// The six ada identities as term equations.
pub fn ada_axiom_equations() -> Vec<(&'static str, Equation)> {
    let a = || Term::var(0);
    let b = || Term::var(1);
    vec![
        (
            "A1",
            Equation::new(Term::down(Term::constant(Trit::F)), Term::constant(Trit::F)),
        ),
        (
            "A2",
            Equation::new(Term::down(Term::constant(Trit::U)), Term::constant(Trit::F)),
        ),
        (
            "A3",
            Equation::new(Term::down(Term::constant(Trit::T)), Term::constant(Trit::T)),
        ),
        (
            "A4",
            Equation::new(
                Term::and(a(), Term::down(b())),
                Term::and(a(), Term::down(Term::and(a(), b()))),
            ),
        ),
        (
            "A5",
            Equation::new(
                Term::or(Term::down(a()), Term::not(Term::down(a()))),
                Term::constant(Trit::T),
            ),
        ),
        ("A6", Equation::new(Term::or(Term::down(a()), a()), a())),
    ]
}
