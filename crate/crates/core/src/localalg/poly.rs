use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::AlgError;

pub type Exponents = Vec<u32>;

/// Polynomial over the rationals in a fixed number of variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Exponents, BigRational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, BigRational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Poly::monomial(nvars, i, 1)
    }

    /// `x_i^k`.
    pub fn monomial(nvars: usize, i: usize, k: u32) -> Self {
        let mut e = vec![0; nvars];
        e[i] = k;
        let mut p = Poly::zero(nvars);
        p.add_term(e, BigRational::one());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponents, BigRational)>) -> Self {
        let mut p = Poly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, e: Exponents, c: BigRational) {
        let entry = self.terms.entry(e.clone()).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn constant_term(&self) -> BigRational {
        self.terms.get(&vec![0; self.nvars]).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Lowest total degree of a term.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        self.scale(&-BigRational::one())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e = a.iter().zip(b).map(|(i, j)| i + j).collect();
                out.add_term(e, x * y);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut out = Poly::one(self.nvars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Parses expressions such as `Z^2 - X^3`, `2*X*Y + (X - Y)^2` or `1/2*X`.
    pub fn parse(names: &[&str], s: &str) -> Result<Poly, AlgError> {
        let tokens = tokenize(s)?;
        let mut parser = Parser { names, tokens, pos: 0, src: s };
        let p = parser.expr()?;
        if parser.pos != parser.tokens.len() {
            return Err(parser.error());
        }
        Ok(p)
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Poly,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        // lowest degree first, matching how local relations are read
        let mut terms: Vec<_> = self.poly.terms.iter().collect();
        terms.sort_by_key(|(e, _)| (e.iter().sum::<u32>(), std::cmp::Reverse((*e).clone())));
        for (i, (e, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, k)| **k > 0)
                .map(|(j, k)| if *k == 1 { self.names[j].clone() } else { format!("{}^{}", self.names[j], k) })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(BigInt),
    Name(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Token>, AlgError> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Token::Num(digits.parse().expect("digits")));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Name(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(AlgError::Parse(s.to_string()));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    names: &'a [&'a str],
    tokens: Vec<Token>,
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn error(&self) -> AlgError {
        AlgError::Parse(self.src.to_string())
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly, AlgError> {
        let n = self.names.len();
        let mut acc = if self.eat('-') { self.term()?.neg() } else { self.term()? };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                debug_assert_eq!(acc.nvars(), n);
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, AlgError> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.power()?);
            } else if self.eat('/') {
                match self.tokens.get(self.pos).cloned() {
                    Some(Token::Num(d)) if !d.is_zero() => {
                        self.pos += 1;
                        acc = acc.scale(&BigRational::new(BigInt::one(), d));
                    }
                    _ => return Err(self.error()),
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Poly, AlgError> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.tokens.get(self.pos).cloned() {
                Some(Token::Num(k)) => {
                    self.pos += 1;
                    let k: u32 = k.try_into().map_err(|_| self.error())?;
                    Ok(base.pow(k))
                }
                _ => Err(self.error()),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly, AlgError> {
        let n = self.names.len();
        match self.tokens.get(self.pos).cloned() {
            Some(Token::Num(v)) => {
                self.pos += 1;
                Ok(Poly::constant(n, BigRational::from_integer(v)))
            }
            Some(Token::Name(name)) => {
                self.pos += 1;
                let i = self.names.iter().position(|x| *x == name).ok_or_else(|| AlgError::UnknownGenerator(name.clone()))?;
                Ok(Poly::var(n, i))
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error());
                }
                Ok(inner)
            }
            _ => Err(self.error()),
        }
    }
}

/// All monomials of total degree at most `degree`, indexed by increasing degree.
#[derive(Clone, Debug)]
pub struct Monomials {
    nvars: usize,
    degree: u32,
    exps: Vec<Exponents>,
    index: HashMap<Exponents, usize>,
}

impl Monomials {
    pub fn new(nvars: usize, degree: u32) -> Self {
        let mut exps = vec![vec![0; nvars]];
        let mut layer = exps.clone();
        for _ in 0..degree {
            if nvars == 0 {
                break;
            }
            // extend each monomial only at or after its last nonzero variable to avoid repeats
            let mut next = Vec::new();
            for e in &layer {
                let last = e.iter().rposition(|k| *k > 0).unwrap_or(0);
                for i in last..nvars {
                    let mut f = e.clone();
                    f[i] += 1;
                    next.push(f);
                }
            }
            next.sort_by(|a, b| b.cmp(a));
            exps.extend(next.iter().cloned());
            layer = next;
        }
        let index = exps.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        Monomials { nvars, degree, exps, index }
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exps(&self, i: usize) -> &Exponents {
        &self.exps[i]
    }

    pub fn total_degree(&self, i: usize) -> u32 {
        self.exps[i].iter().sum()
    }

    pub fn index(&self, e: &Exponents) -> Option<usize> {
        self.index.get(e).copied()
    }

    /// Index of the product, or `None` when it is truncated away.
    pub fn product(&self, i: usize, j: usize) -> Option<usize> {
        let e: Exponents = self.exps[i].iter().zip(&self.exps[j]).map(|(a, b)| a + b).collect();
        self.index(&e)
    }
}
