use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::Monomial;

use super::poly::{MonomialOrder, Polynomial};

/// Pairs processed before [`buchberger`] gives up.
pub const PAIR_BUDGET: usize = 1_000_000;

/// A reduced Gröbner basis: monic generators, no leading monomial divides
/// another term of a different generator, sorted by decreasing leading term.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis<F: Field> {
    pub generators: Vec<Polynomial<F>>,
    pub order: MonomialOrder,
    pub nvars: usize,
}

impl<F: Field> GroebnerBasis<F> {
    /// The basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_unit()
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(normal_form(f, self)?.is_zero())
    }
}

/// Remainder of `f` under multivariate division by `basis` (every term is
/// reduced, not only the leading one).
pub fn reduce<F: Field>(f: &Polynomial<F>, basis: &[Polynomial<F>]) -> Polynomial<F> {
    let field = f.field().clone();
    let nvars = f.nvars();
    let mut p = f.clone();
    let mut remainder: Vec<(Monomial, F::Elem)> = Vec::new();
    while let Some((lm, lc)) = p.leading_term().cloned() {
        let divisor = basis.iter().find_map(|g| {
            let (gm, gc) = g.leading_term()?;
            lm.checked_div(gm).map(|q| (g, q, gc))
        });
        match divisor {
            Some((g, quotient, gc)) => {
                let factor = field.neg(&field.mul(&lc, &field.inv(gc)));
                p = p.add_scaled(g, &factor, &quotient);
            }
            None => {
                p.pop_leading();
                remainder.push((lm, lc));
            }
        }
    }
    Polynomial::from_terms(field, nvars, remainder)
}

pub fn normal_form<F: Field>(f: &Polynomial<F>, basis: &GroebnerBasis<F>) -> Result<Polynomial<F>> {
    if let Some(g) = basis.generators.first() {
        f.check_compatible(g)?;
    }
    Ok(reduce(f, &basis.generators))
}

fn s_polynomial<F: Field>(a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
    // a and b are monic
    let (am, _) = a.leading_term().expect("nonzero");
    let (bm, _) = b.leading_term().expect("nonzero");
    let lcm = am.lcm(bm);
    let field = a.field();
    let left = Polynomial::zero(field.clone(), a.nvars()).add_scaled(a, &field.one(), &lcm.checked_div(am).unwrap());
    left.add_scaled(b, &field.neg(&field.one()), &lcm.checked_div(bm).unwrap())
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// Pairs are taken by lowest lcm degree; pairs with coprime leading
/// monomials are skipped. Stops early with `{1}` once a constant appears.
pub fn buchberger<F: Field>(gens: &[Polynomial<F>], order: MonomialOrder) -> Result<GroebnerBasis<F>> {
    let Some(first) = gens.first() else {
        return Err(Error::domain("Buchberger needs at least one polynomial to fix the ring"));
    };
    for g in gens {
        first.check_compatible(g)?;
    }
    let nvars = first.nvars();
    let mut basis: Vec<Polynomial<F>> = Vec::new();
    for g in gens {
        let h = reduce(g, &basis);
        if !h.is_zero() {
            basis.push(h.monic());
        }
    }
    if let Some(unit) = basis.iter().find(|g| g.is_unit()) {
        let one = unit.monic();
        return Ok(GroebnerBasis { generators: vec![one], order, nvars });
    }

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let lcm_degree = |basis: &[Polynomial<F>], (i, j): (usize, usize)| {
        let a = basis[i].leading_monomial().unwrap();
        let b = basis[j].leading_monomial().unwrap();
        a.lcm(b).degree()
    };

    let mut processed = 0usize;
    while !pairs.is_empty() {
        processed += 1;
        if processed > PAIR_BUDGET {
            return Err(Error::PairBudget(PAIR_BUDGET));
        }
        let best = (0..pairs.len())
            .min_by_key(|&k| (lcm_degree(&basis, pairs[k]), pairs[k]))
            .unwrap();
        let (i, j) = pairs.swap_remove(best);
        let (a, b) = (&basis[i], &basis[j]);
        if a.leading_monomial().unwrap().is_coprime(b.leading_monomial().unwrap()) {
            continue;
        }
        let h = reduce(&s_polynomial(a, b), &basis);
        if h.is_zero() {
            continue;
        }
        let h = h.monic();
        if h.is_unit() {
            return Ok(GroebnerBasis { generators: vec![h], order, nvars });
        }
        let k = basis.len();
        basis.push(h);
        pairs.extend((0..k).map(|i| (i, k)));
    }

    Ok(GroebnerBasis { generators: interreduce(basis), order, nvars })
}

/// Minimalizes and fully inter-reduces a Gröbner basis.
fn interreduce<F: Field>(basis: Vec<Polynomial<F>>) -> Vec<Polynomial<F>> {
    let mut minimal: Vec<Polynomial<F>> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let lm = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(l, h)| {
            let hm = h.leading_monomial().unwrap();
            l != k && hm.divides(lm) && (hm != lm || l < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Polynomial<F>> = minimal
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != k)
            .map(|(_, p)| p.clone())
            .collect();
        reduced.push(reduce(&minimal[k], &others).monic());
    }
    let order = MonomialOrder::DegRevLex;
    reduced.sort_by(|a, b| order.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    reduced
}

/// `f ∈ √(gens)`, decided by whether `1 ∈ (gens, 1 - t f)` with a new
/// smallest variable `t`.
pub fn radical_membership<F: Field>(f: &Polynomial<F>, gens: &[Polynomial<F>]) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::domain("radical membership of the zero polynomial"));
    }
    for g in gens {
        f.check_compatible(g)?;
    }
    let field = f.field().clone();
    let n = f.nvars();
    let mut t_exps = vec![0; n + 1];
    t_exps[n] = 1;
    let t = Monomial::new(t_exps);
    let one = Polynomial::constant(field.clone(), n + 1, field.one());
    let rabinowitsch = one.add_scaled(&f.extend(1), &field.neg(&field.one()), &t);

    let mut system: Vec<Polynomial<F>> = gens.iter().map(|g| g.extend(1)).collect();
    system.push(rabinowitsch);
    Ok(buchberger(&system, MonomialOrder::DegRevLex)?.is_unit())
}
