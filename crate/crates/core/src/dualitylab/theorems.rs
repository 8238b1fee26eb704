use rayon::prelude::*;

use super::report::{Check, VerificationReport, Witness};
use crate::complexcore::{
    link, restrict_to, star, ComplexKind, Multidegree, SimplicialComplex, VertexSet,
};
use crate::error::{Error, Result};
use crate::homology::{reduced_homology_ranks, relative_homology_ranks, HomologyRanks, PrimeField};
use crate::resolutions::{
    dual_betti_via_links, hochster_betti, is_multigraded_extremal, BettiTable,
};

/// Square-free ideal-convention entries as dense arrays `cols[i][bits]`.
struct Grid {
    cols: Vec<Vec<u64>>,
}

impl Grid {
    fn new(table: &BettiTable, n: usize) -> Self {
        let mut cols = vec![vec![0u64; 1 << n]; n + 2];
        for (i, b, v) in table.iter() {
            debug_assert!(b.is_square_free());
            cols[i][b.support().bits() as usize] += v;
        }
        Grid { cols }
    }

    fn get(&self, i: i64, bits: usize) -> u64 {
        if i < 0 {
            return 0;
        }
        self.cols.get(i as usize).map_or(0, |c| c[bits])
    }

    /// `sums[i][b] = Σ_{c ⊇ b} cols[i][c]`.
    fn superset_sums(&self, n: usize) -> Vec<Vec<u64>> {
        self.cols
            .iter()
            .map(|col| {
                let mut s = col.clone();
                for bit in 0..n {
                    for mask in 0..(1usize << n) {
                        if mask & (1 << bit) == 0 {
                            s[mask] += s[mask | (1 << bit)];
                        }
                    }
                }
                s
            })
            .collect()
    }

    /// `coarse[i][m] = Σ_{|b| = m} cols[i][b]`.
    fn coarse(&self, n: usize) -> Vec<Vec<u64>> {
        self.cols
            .iter()
            .map(|col| {
                let mut c = vec![0u64; n + 1];
                for (bits, v) in col.iter().enumerate() {
                    c[bits.count_ones() as usize] += v;
                }
                c
            })
            .collect()
    }
}

/// The Betti tables of `I_X` and `I_{X^∨}` (ideal convention) computed
/// independently: restrictions of `X` for the first, links in `X` for the
/// second.
struct DualPair {
    n: usize,
    instance: String,
    p: u32,
    primal: BettiTable,
    dual: BettiTable,
    primal_grid: Grid,
    dual_grid: Grid,
}

impl DualPair {
    fn new(x: &SimplicialComplex, field: &PrimeField) -> Result<Self> {
        match x.kind() {
            ComplexKind::Void => return Err(Error::UnitIdeal),
            _ if x.facets() == [VertexSet::full(x.n())] => {
                return Err(Error::InvalidArgument(
                    "the full simplex has the zero ideal and a unit dual".into(),
                ))
            }
            _ => {}
        }
        let n = x.n();
        let primal = hochster_betti(x, field)?.to_ideal();
        let dual = dual_betti_via_links(x, field)?;
        Ok(DualPair {
            n,
            instance: x.canonical(),
            p: field.characteristic(),
            primal_grid: Grid::new(&primal, n),
            dual_grid: Grid::new(&dual, n),
            primal,
            dual,
        })
    }

    fn report(&self, check: Check, checked: usize, witness: Option<Witness>) -> VerificationReport {
        match witness {
            None => VerificationReport::pass(check, &self.instance, self.p, checked),
            Some(w) => VerificationReport::fail(check, &self.instance, self.p, checked, w),
        }
    }

    fn dual_sum_bound(&self) -> VerificationReport {
        let n = self.n;
        let sums = self.dual_grid.superset_sums(n);
        let mut checked = 0;
        for i in 0..n {
            for bits in 0..(1usize << n) {
                checked += 1;
                let lhs = self.primal_grid.get(i as i64, bits);
                let j = bits.count_ones() as i64 - i as i64 - 1;
                let rhs = if j >= 0 {
                    sums.get(j as usize).map_or(0, |s| s[bits])
                } else {
                    0
                };
                if lhs > rhs {
                    let w = Witness::new(lhs as i64, rhs as i64, "left<=right")
                        .at_i(i as i64)
                        .at_b(Multidegree::from_vertex_set(
                            VertexSet::from_bits(bits as u64),
                            n,
                        ));
                    return self.report(Check::DualSumBound, checked, Some(w));
                }
            }
        }
        self.report(Check::DualSumBound, checked, None)
    }

    fn binomial_bound(&self) -> VerificationReport {
        let n = self.n;
        let primal = self.primal_grid.coarse(n);
        let dual = self.dual_grid.coarse(n);
        let coarse = |t: &Vec<Vec<u64>>, i: i64, m: usize| -> u128 {
            if i < 0 {
                0
            } else {
                t.get(i as usize).map_or(0, |c| u128::from(c[m]))
            }
        };
        let mut checked = 0;
        for i in 0..n {
            for m in (i + 1)..=n {
                checked += 1;
                let lhs = coarse(&primal, i as i64, m);
                let j = m as i64 - i as i64 - 1;
                let rhs: u128 = (0..=(n - m))
                    .map(|k| binomial(m + k, k) * coarse(&dual, j, m + k))
                    .sum();
                if lhs > rhs {
                    let w = Witness::new(saturate(lhs), saturate(rhs), "left<=right")
                        .at_i(i as i64)
                        .at_j(m as i64);
                    return self.report(Check::BinomialBound, checked, Some(w));
                }
            }
        }
        self.report(Check::BinomialBound, checked, None)
    }

    /// Runs the flip with `dual` in the role of `I_{X^∨}` and `primal` in
    /// the role of `I_X`.
    fn flip(
        n: usize,
        dual: &BettiTable,
        dual_grid: &Grid,
        primal_grid: &Grid,
        direction: &str,
    ) -> (usize, Option<Witness>) {
        let sums = dual_grid.superset_sums(n);
        let mut checked = 0;
        for i in 0..=n {
            for bits in 0..(1usize << n) {
                let here = dual_grid.get(i as i64, bits);
                if sums[i][bits] != here {
                    continue;
                }
                checked += 1;
                let j = bits.count_ones() as i64 - i as i64 - 1;
                let there = primal_grid.get(j, bits);
                let b = Multidegree::from_vertex_set(VertexSet::from_bits(bits as u64), n);
                if here < there {
                    let w = Witness::new(here as i64, there as i64, "left>=right")
                        .at_i(i as i64)
                        .at_b(b)
                        .with_note(format!("{direction}, i-extremal"));
                    return (checked, Some(w));
                }
                if here > 0 && here != there && is_multigraded_extremal(dual, i, &b) {
                    let w = Witness::new(here as i64, there as i64, "left==right")
                        .at_i(i as i64)
                        .at_b(b)
                        .with_note(format!("{direction}, extremal"));
                    return (checked, Some(w));
                }
            }
        }
        (checked, None)
    }

    fn extremal_flip(&self) -> VerificationReport {
        let n = self.n;
        let (c1, w1) = Self::flip(
            n,
            &self.dual,
            &self.dual_grid,
            &self.primal_grid,
            "dual into primal",
        );
        if w1.is_some() {
            return self.report(Check::ExtremalFlip, c1, w1);
        }
        let (c2, w2) = Self::flip(
            n,
            &self.primal,
            &self.primal_grid,
            &self.dual_grid,
            "primal into dual",
        );
        self.report(Check::ExtremalFlip, c1 + c2, w2)
    }

    fn terai(&self) -> VerificationReport {
        let reg = self
            .primal
            .iter()
            .map(|(i, b, _)| i64::from(b.total()) - i as i64)
            .max();
        let pd = self.dual.projective_dimension().map(|j| j as i64 + 1);
        match (reg, pd) {
            (Some(r), Some(p)) if r == p => self.report(Check::Terai, 1, None),
            (r, p) => {
                let w = Witness::new(r.unwrap_or(i64::MIN), p.unwrap_or(i64::MIN), "left==right")
                    .with_note("left=reg(I_X), right=pd(S/I_dual)");
                self.report(Check::Terai, 1, Some(w))
            }
        }
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, t| acc * (n - t) as u128 / (t + 1) as u128)
}

fn saturate(v: u128) -> i64 {
    i64::try_from(v).unwrap_or(i64::MAX)
}

/// Checks `β_{i,b}(I_X) ≤ Σ_{b ⪯ c ⪯ [n]} β_{|b|-i-1,c}(I_{X^∨})` for every
/// `0 <= i < n` and square-free `b`.
///
/// Errors on the void complex and the full simplex, whose ideals are the
/// unit and zero ideal.
pub fn check_dual_sum_bound(
    x: &SimplicialComplex,
    field: &PrimeField,
) -> Result<VerificationReport> {
    Ok(DualPair::new(x, field)?.dual_sum_bound())
}

/// Checks `β_{i,m} ≤ Σ_{k=0}^{n-m} C(m+k, k) β^∨_{m-i-1,m+k}` on single-graded
/// ideal-convention tables, for `0 <= i < n` and `m > i`.
pub fn check_binomial_bound(
    x: &SimplicialComplex,
    field: &PrimeField,
) -> Result<VerificationReport> {
    Ok(DualPair::new(x, field)?.binomial_bound())
}

/// For each i-extremal position `(i, b)` of the dual table checks
/// `β^∨_{i,b} >= β_{|b|-i-1,b}`, with equality at extremal positions; then
/// repeats with the roles of `X` and `X^∨` exchanged.
pub fn check_extremal_flip(
    x: &SimplicialComplex,
    field: &PrimeField,
) -> Result<VerificationReport> {
    Ok(DualPair::new(x, field)?.extremal_flip())
}

/// `reg(I_X) = pd(S/I_{X^∨})`, both read off independently computed tables.
pub fn check_terai(x: &SimplicialComplex, field: &PrimeField) -> Result<VerificationReport> {
    Ok(DualPair::new(x, field)?.terai())
}

struct PairHomology {
    link: HomologyRanks,
    big: HomologyRanks,
    relative: HomologyRanks,
    /// `lk(v, X_{b+v}) = star(v, X_{b+v}) ∩ X_b` as face sets.
    link_is_star_meet: bool,
}

fn pair_homology(
    x: &SimplicialComplex,
    small: &SimplicialComplex,
    b: VertexSet,
    v: usize,
    field: &PrimeField,
) -> PairHomology {
    let n = x.n();
    let big = restrict_to(x, b.with(v));
    let vs = VertexSet::singleton(v);
    let (lk, link_is_star_meet) = if big.contains(vs) {
        let lk = link(vs, &big).expect("vertex of X_{b+v}");
        let st = star(vs, &big).expect("vertex of X_{b+v}");
        let meet: Vec<VertexSet> = st
            .faces()
            .into_iter()
            .filter(|f| small.contains(*f))
            .collect();
        let same = meet == lk.faces();
        (lk, same)
    } else {
        (SimplicialComplex::void(n), true)
    };
    PairHomology {
        link: reduced_homology_ranks(&lk, field),
        relative: relative_homology_ranks(&big, small, field).expect("X_b ⊆ X_{b+v}"),
        big: reduced_homology_ranks(&big, field),
        link_is_star_meet,
    }
}

/// The three consequences of exactness checked for one `(b, v)`.
fn exact_sequence_witness(
    n: usize,
    b: VertexSet,
    v: usize,
    small: &HomologyRanks,
    pair: &PairHomology,
) -> Option<Witness> {
    let bd = Multidegree::from_vertex_set(b, n);
    if !pair.link_is_star_meet {
        return Some(
            Witness::new(0, 0, "lk=star∩restriction")
                .at_b(bd)
                .at_v(v)
                .with_note("link differs from star meet restriction"),
        );
    }
    let top = n as isize;
    let mut alternating = 0i64;
    for i in -1..=top {
        let (a, big, l) = (small.get(i), pair.big.get(i), pair.link.get(i));
        if a > l + big {
            return Some(
                Witness::new(a as i64, (l + big) as i64, "left<=right")
                    .at_i(i as i64)
                    .at_b(bd)
                    .at_v(v)
                    .with_note("h(X_b) vs h(lk)+h(X_b+v)"),
            );
        }
        let rel = pair.relative.get(i);
        let shifted = pair.link.get(i - 1);
        if rel != shifted {
            return Some(
                Witness::new(rel as i64, shifted as i64, "left==right")
                    .at_i(i as i64)
                    .at_b(bd)
                    .at_v(v)
                    .with_note("relative homology vs shifted link homology"),
            );
        }
        let term = a as i64 - big as i64 + shifted as i64;
        alternating += if i.rem_euclid(2) == 0 { term } else { -term };
    }
    if alternating != 0 {
        return Some(
            Witness::new(alternating, 0, "left==right")
                .at_b(bd)
                .at_v(v)
                .with_note("alternating sum"),
        );
    }
    None
}

fn require_pair(x: &SimplicialComplex, b: VertexSet, v: usize) -> Result<()> {
    let n = x.n();
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    if let Some(w) = b.max_vertex().filter(|&w| w >= n) {
        return Err(Error::VertexOutOfRange { vertex: w, n });
    }
    if b.contains(v) {
        return Err(Error::InvalidArgument(format!(
            "vertex {v} lies in the support of b"
        )));
    }
    Ok(())
}

/// Verifies, for one square-free `b` and vertex `v ∉ b`, the consequences of
/// the long exact sequence
/// `H̃_i(X_b) → H̃_i(X_{b+v}) → H̃_{i-1}(lk(v, X_{b+v})) → H̃_{i-1}(X_b)`:
/// the inequality `h_i(X_b) ≤ h_i(lk) + h_i(X_{b+v})`, the identification
/// `H_i(X_{b+v}, X_b) ≅ H̃_{i-1}(lk)` and the vanishing alternating sum.
///
/// When `{v}` is not a face the link is taken to be void.
pub fn check_exact_sequence(
    x: &SimplicialComplex,
    b: VertexSet,
    v: usize,
    field: &PrimeField,
) -> Result<VerificationReport> {
    require_pair(x, b, v)?;
    let small = restrict_to(x, b);
    let hs = reduced_homology_ranks(&small, field);
    let pair = pair_homology(x, &small, b, v, field);
    let instance = x.canonical();
    let p = field.characteristic();
    Ok(match exact_sequence_witness(x.n(), b, v, &hs, &pair) {
        None => VerificationReport::pass(Check::ExactSequence, instance, p, 1),
        Some(w) => VerificationReport::fail(Check::ExactSequence, instance, p, 1, w),
    })
}

/// [`check_exact_sequence`] over every `b ⊆ [n]` and `v ∉ b`; reports the
/// first failure in enumeration order.
pub fn check_exact_sequence_all(
    x: &SimplicialComplex,
    field: &PrimeField,
) -> Result<VerificationReport> {
    let n = x.n();
    if n > crate::resolutions::EXHAUSTIVE_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: crate::resolutions::EXHAUSTIVE_LIMIT,
        });
    }
    let restrictions: Vec<(SimplicialComplex, HomologyRanks)> = (0..(1u64 << n))
        .into_par_iter()
        .map(|bits| {
            let r = restrict_to(x, VertexSet::from_bits(bits));
            let h = reduced_homology_ranks(&r, field);
            (r, h)
        })
        .collect();
    let pairs: Vec<(VertexSet, usize)> = (0..(1u64 << n))
        .flat_map(|bits| {
            let b = VertexSet::from_bits(bits);
            (0..n).filter(move |&v| !b.contains(v)).map(move |v| (b, v))
        })
        .collect();
    let first_failure = pairs
        .par_iter()
        .map(|&(b, v)| {
            let (small, hs) = &restrictions[b.bits() as usize];
            let pair = pair_homology(x, small, b, v, field);
            exact_sequence_witness(n, b, v, hs, &pair)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .next();
    let instance = x.canonical();
    let p = field.characteristic();
    Ok(match first_failure {
        None => VerificationReport::pass(Check::ExactSequence, instance, p, pairs.len()),
        Some(w) => VerificationReport::fail(Check::ExactSequence, instance, p, pairs.len(), w),
    })
}

/// Terai, dual-sum, binomial-sum, extremal-flip and exact-sequence checks,
/// sharing one pair of Betti tables.
pub fn run_theorem_suite(
    x: &SimplicialComplex,
    field: &PrimeField,
) -> Result<Vec<VerificationReport>> {
    let pair = DualPair::new(x, field)?;
    Ok(vec![
        pair.terai(),
        pair.dual_sum_bound(),
        pair.binomial_bound(),
        pair.extremal_flip(),
        check_exact_sequence_all(x, field)?,
    ])
}
