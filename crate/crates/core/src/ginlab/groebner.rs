use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::polynomial::{Polynomial, Term};
use crate::complexcore::{MonomialIdeal, Multidegree};
use crate::error::{Error, Result};
use crate::homology::PrimeField;

/// A reduced degrevlex Gröbner basis: monic elements sorted by increasing
/// leading monomial, no term of any element divisible by another element's
/// leading monomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerBasis {
    n: usize,
    field: PrimeField,
    basis: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    /// The ideal generated by the leading monomials.
    pub fn leading_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(
            self.n,
            self.basis.iter().filter_map(|g| g.lead_monomial().cloned()),
        )
        .expect("leading monomials have arity n")
    }

    /// Fully reduced remainder of `f` modulo the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, &self.basis, &self.field)
    }

    /// Ideal membership.
    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Every S-polynomial reduces to zero and the basis is reduced and monic.
    pub fn verify(&self) -> bool {
        let k = &self.field;
        for (a, f) in self.basis.iter().enumerate() {
            if f.lead().map(|t| t.coeff) != Some(1) {
                return false;
            }
            for (b, g) in self.basis.iter().enumerate() {
                if a == b {
                    continue;
                }
                let lm = g.lead_monomial().expect("nonzero");
                if f.terms().iter().any(|t| lm.divides(&t.mono)) {
                    return false;
                }
                if a < b && !normal_form(&s_polynomial(f, g, k), &self.basis, k).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

fn find_reducer<'a>(m: &Multidegree, basis: &'a [Polynomial]) -> Option<&'a Polynomial> {
    basis
        .iter()
        .find(|g| g.lead_monomial().is_some_and(|lm| lm.divides(m)))
}

/// Remainder of `f` on division by `basis`, reducing every term.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], field: &PrimeField) -> Polynomial {
    let mut p = f.clone();
    let mut remainder: Vec<Term> = Vec::new();
    while let Some(lead) = p.lead().cloned() {
        match find_reducer(&lead.mono, basis) {
            Some(g) => {
                let lg = g.lead().expect("nonzero reducer");
                let c = field.mul(lead.coeff, field.inv(lg.coeff));
                let q = lead.mono.checked_div(&lg.mono).expect("divides");
                p = p.add_scaled(field, field.neg(1), &g.mul_term(field, c, &q));
            }
            None => {
                remainder.push(lead.clone());
                p = p.add_scaled(
                    field,
                    field.neg(1),
                    &Polynomial::from_terms(field, p.n(), [(i64::from(lead.coeff), lead.mono)]),
                );
            }
        }
    }
    // terms leave `p` in decreasing order, so `remainder` is already sorted
    Polynomial::from_terms(
        field,
        f.n(),
        remainder.into_iter().map(|t| (i64::from(t.coeff), t.mono)),
    )
}

/// `lcm/lt(f) · f / lc(f) - lcm/lt(g) · g / lc(g)`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, field: &PrimeField) -> Polynomial {
    let (lf, lg) = (f.lead().expect("nonzero"), g.lead().expect("nonzero"));
    let l = lf.mono.join(&lg.mono);
    let a = f.mul_term(
        field,
        field.inv(lf.coeff),
        &l.checked_div(&lf.mono).expect("divides"),
    );
    let b = g.mul_term(
        field,
        field.inv(lg.coeff),
        &l.checked_div(&lg.mono).expect("divides"),
    );
    a.sub(field, &b)
}

fn coprime(a: &Multidegree, b: &Multidegree) -> bool {
    a.exps()
        .iter()
        .zip(b.exps())
        .all(|(x, y)| *x == 0 || *y == 0)
}

/// Rejects inhomogeneous input and mismatched arity; drops zeros.
pub(crate) fn prepare(
    gens: &[Polynomial],
    n: usize,
    field: &PrimeField,
) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    for g in gens {
        if g.n() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                found: g.n(),
            });
        }
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous(g.render(field)));
        }
        if !g.is_zero() {
            out.push(g.make_monic(field));
        }
    }
    Ok(out)
}

/// Reduced degrevlex Gröbner basis of the ideal generated by `gens` in `n`
/// variables.
///
/// Pairs are processed by smallest lcm (the normal strategy). A pair is
/// skipped when its leading monomials are coprime, or when some third
/// element's leading monomial divides the lcm and both of its pairs with the
/// current two are already gone. Zero generators are ignored; inhomogeneous
/// ones are rejected.
pub fn buchberger(gens: &[Polynomial], n: usize, field: &PrimeField) -> Result<GroebnerBasis> {
    let input = prepare(gens, n, field)?;
    let mut g: Vec<Polynomial> = Vec::new();
    // pending pairs keyed by (lcm, i, j) so iteration order is the normal strategy
    let mut pairs: BTreeSet<(Multidegree, usize, usize)> = BTreeSet::new();
    let add = |g: &mut Vec<Polynomial>,
               pairs: &mut BTreeSet<(Multidegree, usize, usize)>,
               f: Polynomial| {
        let j = g.len();
        let lj = f.lead_monomial().expect("nonzero").clone();
        for (i, h) in g.iter().enumerate() {
            let li = h.lead_monomial().expect("nonzero");
            pairs.insert((li.join(&lj), i, j));
        }
        g.push(f);
    };
    for f in input {
        let r = normal_form(&f, &g, field);
        if !r.is_zero() {
            add(&mut g, &mut pairs, r.make_monic(field));
        }
    }
    while let Some(first) = pairs.iter().next().cloned() {
        let (lcm, i, j) = first.clone();
        let li = g[i].lead_monomial().expect("nonzero").clone();
        let lj = g[j].lead_monomial().expect("nonzero").clone();
        let skip = coprime(&li, &lj) || chain_criterion(&g, &pairs, &lcm, i, j);
        if !skip {
            let s = s_polynomial(&g[i], &g[j], field);
            let r = normal_form(&s, &g, field);
            if !r.is_zero() {
                add(&mut g, &mut pairs, r.make_monic(field));
            }
        }
        pairs.remove(&first);
    }
    Ok(GroebnerBasis {
        n,
        field: *field,
        basis: reduce(g, field),
    })
}

fn pair_pending(
    pairs: &BTreeSet<(Multidegree, usize, usize)>,
    g: &[Polynomial],
    a: usize,
    b: usize,
) -> bool {
    let (i, j) = if a < b { (a, b) } else { (b, a) };
    let lcm = g[i]
        .lead_monomial()
        .expect("nonzero")
        .join(g[j].lead_monomial().expect("nonzero"));
    pairs.contains(&(lcm, i, j))
}

fn chain_criterion(
    g: &[Polynomial],
    pairs: &BTreeSet<(Multidegree, usize, usize)>,
    lcm: &Multidegree,
    i: usize,
    j: usize,
) -> bool {
    (0..g.len()).any(|k| {
        k != i
            && k != j
            && g[k].lead_monomial().expect("nonzero").divides(lcm)
            && !pair_pending(pairs, g, i, k)
            && !pair_pending(pairs, g, j, k)
    })
}

/// Minimalizes, interreduces and sorts a Gröbner basis.
fn reduce(g: Vec<Polynomial>, field: &PrimeField) -> Vec<Polynomial> {
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (a, f) in g.iter().enumerate() {
        let lf = f.lead_monomial().expect("nonzero");
        let redundant = g.iter().enumerate().any(|(b, h)| {
            let lh = h.lead_monomial().expect("nonzero");
            b != a && lh.divides(lf) && (lh != lf || b < a)
        });
        if !redundant {
            minimal.push(f.clone());
        }
    }
    let mut reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|a| {
            let f = &minimal[a];
            let lead = f.lead().expect("nonzero").clone();
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|(b, _)| *b != a)
                .map(|(_, h)| h.clone())
                .collect();
            let tail = Polynomial::from_terms(
                field,
                f.n(),
                f.terms()[1..]
                    .iter()
                    .map(|t| (i64::from(t.coeff), t.mono.clone())),
            );
            let head = Polynomial::from_terms(field, f.n(), [(i64::from(lead.coeff), lead.mono)]);
            head.add(field, &normal_form(&tail, &others, field))
                .make_monic(field)
        })
        .collect();
    reduced.sort_by(|a, b| {
        a.lead_monomial()
            .expect("nonzero")
            .degrevlex_cmp(b.lead_monomial().expect("nonzero"))
    });
    reduced
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k() -> PrimeField {
        PrimeField::default()
    }

    fn polys(texts: &[&str], n: usize) -> Vec<Polynomial> {
        texts
            .iter()
            .map(|t| Polynomial::parse(t, n, &k()).unwrap())
            .collect()
    }

    #[test]
    fn single_monomial() {
        let gb = buchberger(&polys(&["xy"], 2), 2, &k()).unwrap();
        assert_eq!(gb.basis().len(), 1);
        assert_eq!(gb.basis()[0].to_string(), "x0*x1");
        assert!(gb.verify());
    }

    #[test]
    fn quadrics_x2_plus_y2_and_xy() {
        // S(x²+y², xy) = y·(x²+y²) - x·(xy) = y³
        let gb = buchberger(&polys(&["x^2 + y^2", "xy"], 2), 2, &k()).unwrap();
        let shown: Vec<String> = gb.basis().iter().map(|g| g.render(&k())).collect();
        assert_eq!(shown, vec!["x0*x1", "x0^2 + x1^2", "x1^3"]);
        assert_eq!(gb.leading_ideal().to_string(), "x0^2, x0*x1, x1^3");
        assert!(gb.verify());
    }

    #[test]
    fn rejects_inhomogeneous() {
        assert!(matches!(
            buchberger(&polys(&["x - y^2"], 2), 2, &k()),
            Err(Error::NotHomogeneous(_))
        ));
        assert!(matches!(
            buchberger(&polys(&["x"], 1), 2, &k()),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn zero_generators_are_dropped() {
        let gb = buchberger(&[Polynomial::zero(2)], 2, &k()).unwrap();
        assert!(gb.basis().is_empty());
        assert!(gb.leading_ideal().is_zero());
    }

    #[test]
    fn twisted_cubic() {
        // 2x2 minors of [[x0,x1,x2],[x1,x2,x3]]
        let gb = buchberger(
            &polys(&["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"], 4),
            4,
            &k(),
        )
        .unwrap();
        assert!(gb.verify());
        assert_eq!(gb.leading_ideal().to_string(), "x1^2, x1*x2, x2^2");
    }

    #[test]
    fn normal_form_is_linear_and_idempotent() {
        let f = k();
        let gb = buchberger(&polys(&["x^2 + y^2", "xy"], 2), 2, &f).unwrap();
        let a = Polynomial::parse("x^3 + 2*x^2*y + y^3", 2, &f).unwrap();
        let b = Polynomial::parse("5*x*y^2 - x^3", 2, &f).unwrap();
        let na = gb.normal_form(&a);
        assert_eq!(gb.normal_form(&na), na);
        let lhs = gb.normal_form(&a.add_scaled(&f, 7, &b));
        let rhs = na.add_scaled(&f, 7, &gb.normal_form(&b));
        assert_eq!(lhs, rhs);
        assert!(gb.contains(&Polynomial::parse("x^3 + x*y^2", 2, &f).unwrap()));
    }

    #[test]
    fn redundant_generators() {
        let gb = buchberger(&polys(&["x^2", "x^2 + 0*y^2", "x^3", "2*x^2"], 2), 2, &k()).unwrap();
        assert_eq!(gb.basis().len(), 1);
    }
}
