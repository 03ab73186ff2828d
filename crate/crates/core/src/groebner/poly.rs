use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::Monomial;

/// The monomial order used by the engine. Only degree reverse lexicographic
/// order with `x1 > x2 > ... > xn` is supported; an auxiliary variable
/// appended at the end is therefore the smallest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MonomialOrder {
    #[default]
    DegRevLex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

/// A polynomial with coefficients in `F`, terms sorted by decreasing
/// degrevlex order with no zero coefficients.
#[derive(Clone, PartialEq)]
pub struct Polynomial<F: Field> {
    nvars: usize,
    field: F,
    terms: Vec<(Monomial, F::Elem)>,
}

const ORDER: MonomialOrder = MonomialOrder::DegRevLex;

impl<F: Field> Polynomial<F> {
    pub fn zero(field: F, nvars: usize) -> Self {
        Polynomial { nvars, field, terms: Vec::new() }
    }

    pub fn constant(field: F, nvars: usize, c: F::Elem) -> Self {
        Self::from_terms(field, nvars, [(Monomial::one(nvars), c)])
    }

    pub fn monomial(field: F, m: Monomial) -> Self {
        let one = field.one();
        let nvars = m.nvars();
        Self::from_terms(field, nvars, [(m, one)])
    }

    /// Sum of monomials with coefficient 1.
    pub fn sum_of<'a>(field: F, nvars: usize, monomials: impl IntoIterator<Item = &'a Monomial>) -> Self {
        let one = field.one();
        let terms: Vec<_> = monomials.into_iter().map(|m| (m.clone(), one.clone())).collect();
        Self::from_terms(field, nvars, terms)
    }

    /// Collects like terms and drops zeros. Panics if a monomial has the wrong
    /// variable count.
    pub fn from_terms(field: F, nvars: usize, terms: impl IntoIterator<Item = (Monomial, F::Elem)>) -> Self {
        let mut terms: Vec<(Monomial, F::Elem)> = terms.into_iter().collect();
        assert!(terms.iter().all(|(m, _)| m.nvars() == nvars), "term outside the polynomial ring");
        terms.sort_by(|a, b| ORDER.cmp(&b.0, &a.0));
        let mut merged: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match merged.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
                _ => merged.push((m, c)),
            }
        }
        merged.retain(|(_, c)| !field.is_zero(c));
        Polynomial { nvars, field, terms: merged }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, F::Elem)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, F::Elem)> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    pub fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::MixedFields);
        }
        if self.nvars != other.nvars {
            return Err(Error::AmbientMismatch { expected: self.nvars, found: other.nvars });
        }
        Ok(())
    }

    /// `self + scale * mono * other`, merging sorted term lists.
    pub fn add_scaled(&self, other: &Self, scale: &F::Elem, mono: &Monomial) -> Self {
        let f = &self.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let shifted = other.terms.iter().map(|(m, c)| {
            let m = m.try_mul(mono).expect("exponent overflow in polynomial arithmetic");
            (m, f.mul(c, scale))
        });
        let mut a = self.terms.iter().cloned().peekable();
        let mut b = shifted.peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => ORDER.cmp(&x.0, &y.0),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap()),
                Ordering::Less => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let (m, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    let s = f.add(&x, &y);
                    if !f.is_zero(&s) {
                        out.push((m, s));
                    }
                }
            }
        }
        Polynomial { nvars: self.nvars, field: self.field.clone(), terms: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(other, &self.field.one(), &Monomial::one(self.nvars))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(other, &self.field.neg(&self.field.one()), &Monomial::one(self.nvars))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut acc = Polynomial::zero(self.field.clone(), self.nvars);
        for (m, c) in &other.terms {
            acc = acc.add_scaled(self, c, m);
        }
        acc
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        if f.is_zero(c) {
            return Polynomial::zero(f.clone(), self.nvars);
        }
        let terms = self.terms.iter().map(|(m, x)| (m.clone(), f.mul(x, c))).collect();
        Polynomial { nvars: self.nvars, field: f.clone(), terms }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, lc)) if self.field.is_one(lc) => self.clone(),
            Some((_, lc)) => self.scale(&self.field.inv(lc)),
        }
    }

    /// Embeds into a ring with `extra` additional (smallest) variables.
    pub fn extend(&self, extra: usize) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (m.extend(extra), c.clone())).collect();
        Polynomial { nvars: self.nvars + extra, field: self.field.clone(), terms }
    }

    /// The same support and integer-valued coefficients in another field.
    pub fn map_field<G: Field>(&self, target: G) -> Option<Polynomial<G>>
    where
        F: Field<Elem = num_rational::BigRational>,
    {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| Some((m.clone(), target.from_rational(c)?)))
            .collect::<Option<Vec<_>>>()?;
        Some(Polynomial::from_terms(target.clone(), self.nvars, terms))
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    /// Terms in decreasing degrevlex order; unit coefficients are omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let one = self.field.one();
        let minus_one = self.field.neg(&one);
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (negative, coeff) = if *c == minus_one && !self.field.is_one(c) {
                (true, None)
            } else if self.field.is_one(c) {
                (false, None)
            } else {
                let text = self.field.render(c);
                match text.strip_prefix('-') {
                    Some(rest) => (true, Some(rest.to_string())),
                    None => (false, Some(text)),
                }
            };
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match (coeff, m.is_one()) {
                (Some(c), true) => write!(f, "{c}")?,
                (Some(c), false) => write!(f, "{c}*{m}")?,
                (None, _) => write!(f, "{m}")?,
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
