//! The sum-of-squares polynomial whose integer zeros are exactly the
//! counterexamples to membership of a tuple.
//!
//! For a tuple `t` the polynomial in `a, b, y_1..y_n` is
//!
//! ```text
//! (a(t_1 - y_1) - (2b - 1)(3b - 1))^2
//!   + sum over units i        (y_i - 1)^2
//!   + sum over adds (i,j,k)   (y_i + y_j - y_k)^2
//!   + sum over muls (i,j,k)   (y_i * y_j - y_k)^2
//! ```
//!
//! `(2b - 1)(3b - 1)` is never zero, so a zero forces `y_1 != t_1`; conversely
//! every nonzero difference `t_1 - y_1` is hit by some `(a, b)`.
//!
//! Binary terms run over canonical triples with `i <= j`. Summing over all
//! ordered triples would only duplicate squared terms, which vanish together,
//! so the zero set is the same but the term count is smaller.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::crt::lemma_pair;
use crate::error::{Error, Result};
use crate::relations::{extract, first_violation, RelationSystem};
use crate::tuple::{Assignment, IntTuple, Var};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DPolynomial {
    base: IntTuple,
    system: RelationSystem,
}

pub fn build_d(t: &IntTuple) -> DPolynomial {
    DPolynomial {
        base: t.clone(),
        system: extract(t),
    }
}

impl DPolynomial {
    pub fn arity(&self) -> usize {
        self.base.arity()
    }

    pub fn base_tuple(&self) -> &IntTuple {
        &self.base
    }

    /// The relation system the squared terms are built from.
    pub fn system(&self) -> &RelationSystem {
        &self.system
    }

    /// Number of squared addends, the leading term included.
    pub fn term_count(&self) -> usize {
        1 + self.system.len()
    }

    /// The polynomial as an expression tree, addends in the order leading,
    /// units, additions, products.
    pub fn to_expr(&self) -> Expr {
        let y = |i: usize| Expr::Var(Var::Y(i));
        let lin = |c: i64| {
            // c*b - 1
            Expr::Sub(
                Box::new(Expr::Mul(vec![Expr::Int(c.into()), Expr::Var(Var::B)])),
                Box::new(Expr::Int(BigInt::one())),
            )
        };
        let leading = Expr::Sub(
            Box::new(Expr::Mul(vec![
                Expr::Var(Var::A),
                Expr::Sub(Box::new(Expr::Int(self.base.get(1).clone())), Box::new(y(1))),
            ])),
            Box::new(Expr::Mul(vec![lin(2), lin(3)])),
        );
        let mut terms = vec![Expr::Square(Box::new(leading))];
        for &i in self.system.units() {
            terms.push(Expr::Square(Box::new(Expr::Sub(
                Box::new(y(i)),
                Box::new(Expr::Int(BigInt::one())),
            ))));
        }
        for &(i, j, k) in self.system.adds() {
            terms.push(Expr::Square(Box::new(Expr::Sub(
                Box::new(Expr::Add(vec![y(i), y(j)])),
                Box::new(y(k)),
            ))));
        }
        for &(i, j, k) in self.system.muls() {
            terms.push(Expr::Square(Box::new(Expr::Sub(
                Box::new(Expr::Mul(vec![y(i), y(j)])),
                Box::new(y(k)),
            ))));
        }
        if terms.len() == 1 {
            terms.pop().expect("one term")
        } else {
            Expr::Add(terms)
        }
    }
}

/// Exact value of the polynomial at `s`, which must bind `a`, `b` and every `y_i`.
pub fn evaluate_d(p: &DPolynomial, s: &Assignment) -> Result<BigInt> {
    let a = s.require(Var::A)?;
    let b = s.require(Var::B)?;
    let n = p.arity();
    let y = s.y_tuple(n)?;
    let y = y.entries();
    let sq = |v: BigInt| &v * &v;

    let gadget = (b * 2 - 1) * (b * 3 - 1);
    let mut total = sq(a * (p.base.get(1) - &y[0]) - gadget);
    for &i in p.system.units() {
        total += sq(&y[i - 1] - 1);
    }
    for &(i, j, k) in p.system.adds() {
        total += sq(&y[i - 1] + &y[j - 1] - &y[k - 1]);
    }
    for &(i, j, k) in p.system.muls() {
        total += sq(&y[i - 1] * &y[j - 1] - &y[k - 1]);
    }
    Ok(total)
}

/// Turn a counterexample `y` against `t` into a zero of `build_d(t)`.
pub fn witness_to_solution(t: &IntTuple, y: &IntTuple) -> Result<Assignment> {
    if let Some(rel) = first_violation(y, &extract(t))? {
        return Err(Error::Precondition(format!(
            "witness violates relation `{rel}` of the base tuple"
        )));
    }
    let diff = t.get(1) - y.get(1);
    if diff.is_zero() {
        return Err(Error::Precondition(
            "witness agrees with the base tuple in coordinate 1 (y_1 = t_1)".into(),
        ));
    }
    let cert = lemma_pair(&diff)?;
    let mut s = y.to_assignment();
    s.bind(Var::A, cert.a)?;
    s.bind(Var::B, cert.b)?;
    Ok(s)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmitFormat {
    /// Prefix expression over `+ - * ^`.
    Sexpr,
    /// SMT-LIB2 script in `QF_NIA`.
    Smt2,
}

pub fn emit_text(p: &DPolynomial, format: EmitFormat) -> String {
    let expr = p.to_expr();
    match format {
        EmitFormat::Sexpr => {
            let mut out = String::new();
            expr.write_sexpr(&mut out);
            out
        }
        EmitFormat::Smt2 => {
            let mut out = String::from("(set-logic QF_NIA)\n");
            out.push_str("(declare-fun a () Int)\n(declare-fun b () Int)\n");
            for i in 1..=p.arity() {
                let _ = writeln!(out, "(declare-fun y{i} () Int)");
            }
            out.push_str("(assert (= ");
            expr.write_smt(&mut out);
            out.push_str(" 0))\n(check-sat)\n");
            out
        }
    }
}

/// Integer polynomial expression in the variables `a`, `b`, `y<k>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Var(Var),
    Int(BigInt),
    Add(Vec<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Mul(Vec<Expr>),
    Square(Box<Expr>),
}

impl Expr {
    pub fn eval(&self, s: &Assignment) -> Result<BigInt> {
        Ok(match self {
            Expr::Var(v) => s.require(*v)?.clone(),
            Expr::Int(c) => c.clone(),
            Expr::Add(xs) => {
                let mut acc = BigInt::zero();
                for x in xs {
                    acc += x.eval(s)?;
                }
                acc
            }
            Expr::Sub(l, r) => l.eval(s)? - r.eval(s)?,
            Expr::Neg(x) => -x.eval(s)?,
            Expr::Mul(xs) => {
                let mut acc = BigInt::one();
                for x in xs {
                    acc *= x.eval(s)?;
                }
                acc
            }
            Expr::Square(x) => {
                let v = x.eval(s)?;
                &v * &v
            }
        })
    }

    fn write_sexpr(&self, out: &mut String) {
        match self {
            Expr::Var(v) => {
                let _ = write!(out, "{v}");
            }
            Expr::Int(c) => {
                let _ = write!(out, "{c}");
            }
            Expr::Add(xs) => write_list(out, "+", xs, Self::write_sexpr),
            Expr::Mul(xs) => write_list(out, "*", xs, Self::write_sexpr),
            Expr::Sub(l, r) => {
                out.push_str("(- ");
                l.write_sexpr(out);
                out.push(' ');
                r.write_sexpr(out);
                out.push(')');
            }
            Expr::Neg(x) => {
                // not in the prefix grammar; encode as 0 - x
                out.push_str("(- 0 ");
                x.write_sexpr(out);
                out.push(')');
            }
            Expr::Square(x) => {
                out.push_str("(^ ");
                x.write_sexpr(out);
                out.push_str(" 2)");
            }
        }
    }

    fn write_smt(&self, out: &mut String) {
        match self {
            Expr::Var(v) => {
                let _ = write!(out, "{v}");
            }
            Expr::Int(c) if c.sign() == num_bigint::Sign::Minus => {
                let _ = write!(out, "(- {})", -c);
            }
            Expr::Int(c) => {
                let _ = write!(out, "{c}");
            }
            Expr::Add(xs) => write_list(out, "+", xs, Self::write_smt),
            Expr::Mul(xs) => write_list(out, "*", xs, Self::write_smt),
            Expr::Sub(l, r) => {
                out.push_str("(- ");
                l.write_smt(out);
                out.push(' ');
                r.write_smt(out);
                out.push(')');
            }
            Expr::Neg(x) => {
                out.push_str("(- ");
                x.write_smt(out);
                out.push(')');
            }
            Expr::Square(x) => {
                out.push_str("(* ");
                x.write_smt(out);
                out.push(' ');
                x.write_smt(out);
                out.push(')');
            }
        }
    }
}

fn write_list(out: &mut String, op: &str, xs: &[Expr], each: fn(&Expr, &mut String)) {
    out.push('(');
    out.push_str(op);
    for x in xs {
        out.push(' ');
        each(x, out);
    }
    out.push(')');
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum SExp {
    Atom(String),
    List(Vec<SExp>),
}

fn read_sexps(text: &str) -> Result<Vec<SExp>> {
    let mut stack: Vec<Vec<SExp>> = vec![Vec::new()];
    let mut atom = String::new();
    let flush = |atom: &mut String, stack: &mut Vec<Vec<SExp>>| {
        if !atom.is_empty() {
            stack
                .last_mut()
                .expect("stack never empty")
                .push(SExp::Atom(std::mem::take(atom)));
        }
    };
    for line in text.lines() {
        let line = line.split(';').next().unwrap_or("");
        for ch in line.chars() {
            match ch {
                '(' => {
                    flush(&mut atom, &mut stack);
                    stack.push(Vec::new());
                }
                ')' => {
                    flush(&mut atom, &mut stack);
                    let done = stack.pop().expect("stack never empty");
                    match stack.last_mut() {
                        Some(parent) => parent.push(SExp::List(done)),
                        None => return Err(Error::Expr("unbalanced `)`".into())),
                    }
                }
                c if c.is_whitespace() => flush(&mut atom, &mut stack),
                c => atom.push(c),
            }
        }
        flush(&mut atom, &mut stack);
    }
    if stack.len() != 1 {
        return Err(Error::Expr("unclosed `(`".into()));
    }
    Ok(stack.pop().expect("top level"))
}

fn atom_expr(a: &str) -> Result<Expr> {
    match a {
        "a" => return Ok(Expr::Var(Var::A)),
        "b" => return Ok(Expr::Var(Var::B)),
        _ => {}
    }
    if let Some(idx) = a.strip_prefix('y') {
        if let Ok(i) = idx.parse::<usize>() {
            if i >= 1 {
                return Ok(Expr::Var(Var::Y(i)));
            }
        }
    }
    a.parse::<BigInt>()
        .map(Expr::Int)
        .map_err(|_| Error::Expr(format!("unknown atom `{a}`")))
}

fn to_expr(s: &SExp) -> Result<Expr> {
    let items = match s {
        SExp::Atom(a) => return atom_expr(a),
        SExp::List(items) => items,
    };
    let Some((SExp::Atom(op), args)) = items.split_first() else {
        return Err(Error::Expr("expected an operator".into()));
    };
    let args = args.iter().map(to_expr).collect::<Result<Vec<_>>>()?;
    match (op.as_str(), args.len()) {
        ("+", n) if n >= 2 => Ok(Expr::Add(args)),
        ("*", n) if n >= 2 => Ok(Expr::Mul(args)),
        ("-", 1) => Ok(Expr::Neg(Box::new(args.into_iter().next().expect("one")))),
        ("-", 2) => {
            let mut it = args.into_iter();
            let l = it.next().expect("two");
            let r = it.next().expect("two");
            Ok(Expr::Sub(Box::new(l), Box::new(r)))
        }
        ("^", 2) => match &args[1] {
            Expr::Int(e) if *e == BigInt::from(2) => {
                Ok(Expr::Square(Box::new(args.into_iter().next().expect("two"))))
            }
            _ => Err(Error::Expr("only `(^ e 2)` is supported".into())),
        },
        (op, n) => Err(Error::Expr(format!("`{op}` with {n} arguments"))),
    }
}

/// Parse a prefix expression as produced by [`emit_text`] with [`EmitFormat::Sexpr`].
pub fn parse_sexpr(text: &str) -> Result<Expr> {
    match read_sexps(text)?.as_slice() {
        [one] => to_expr(one),
        _ => Err(Error::Expr("expected exactly one expression".into())),
    }
}

/// Extract the polynomial from an `(assert (= P 0))` line of an SMT2 script.
pub fn parse_smt2_assertion(script: &str) -> Result<Expr> {
    for form in read_sexps(script)? {
        if let SExp::List(items) = &form {
            if let [SExp::Atom(head), SExp::List(eq)] = items.as_slice() {
                if head == "assert" {
                    if let [SExp::Atom(op), lhs, SExp::Atom(zero)] = eq.as_slice() {
                        if op == "=" && zero == "0" {
                            return to_expr(lhs);
                        }
                    }
                }
            }
        }
    }
    Err(Error::Expr("no `(assert (= P 0))` found".into()))
}
