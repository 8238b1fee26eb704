use serde::Serialize;

use super::gin::gin;
use super::groebner::buchberger;
use super::polynomial::Polynomial;
use super::tor::betti_via_tor_gb;
use crate::complexcore::MonomialIdeal;
use crate::dualitylab::{Check, VerificationReport, Witness};
use crate::error::Result;
use crate::homology::PrimeField;
use crate::resolutions::{betti_via_koszul, BettiDiagram, Corner};

/// Both coarse tables behind a corner comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GinComparison {
    pub n: usize,
    pub gin: MonomialIdeal,
    /// Table of `S/I` from the Koszul complex, up to `degree_bound`.
    #[serde(skip)]
    pub original: BettiDiagram,
    /// Table of `S/gin(I)` from the lcm lattice.
    #[serde(skip)]
    pub generic: BettiDiagram,
    pub degree_bound: u32,
    /// `S/I` has an entry at the degree bound.
    pub truncated: bool,
}

impl GinComparison {
    pub fn original_corners(&self) -> Vec<Corner> {
        self.original.corners()
    }

    pub fn generic_corners(&self) -> Vec<Corner> {
        self.generic.corners()
    }

    /// `n - pd` of each side.
    pub fn depths(&self) -> (i64, i64) {
        let depth = |t: &BettiDiagram| self.n as i64 - t.projective_dimension().unwrap_or(0) as i64;
        (depth(&self.original), depth(&self.generic))
    }

    /// First disagreement in l-regularity, corner positions or corner values.
    pub fn corner_witness(&self) -> Option<Witness> {
        if self.truncated {
            return Some(
                Witness::new(
                    i64::from(self.degree_bound),
                    i64::from(self.degree_bound) - 1,
                    "left<=right",
                )
                .with_note("table of S/I reaches the degree bound"),
            );
        }
        let show = |r: Option<i64>| r.map_or("none".to_string(), |m| m.to_string());
        for l in 0..=self.n {
            let (a, b) = (self.original.l_regularity(l), self.generic.l_regularity(l));
            if a != b {
                return Some(
                    Witness::new(a.unwrap_or(-1), b.unwrap_or(-1), "left==right")
                        .at_i(l as i64)
                        .with_note(format!("l-regularity {} vs {}", show(a), show(b))),
                );
            }
        }
        let (a, b) = (self.original_corners(), self.generic_corners());
        for (x, y) in a.iter().zip(&b) {
            if x != y {
                return Some(
                    Witness::new(x.value as i64, y.value as i64, "left==right")
                        .at_i(x.l as i64)
                        .at_j(x.l as i64 + x.m)
                        .with_note(format!("corner {x} vs {y}")),
                );
            }
        }
        if a.len() != b.len() {
            return Some(
                Witness::new(a.len() as i64, b.len() as i64, "left==right")
                    .with_note("number of corners"),
            );
        }
        None
    }
}

fn instance_label(gens: &[Polynomial], field: &PrimeField) -> String {
    let shown: Vec<String> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.render(field))
        .collect();
    if shown.is_empty() {
        "gens:".to_string()
    } else {
        format!("gens: {}", shown.join(", "))
    }
}

/// Computes `gin(I)`, the table of `S/gin(I)` and the table of `S/I` up to one
/// degree past the largest degree in the former.
pub fn gin_comparison(
    gens: &[Polynomial],
    n: usize,
    field: &PrimeField,
    seed: u64,
) -> Result<GinComparison> {
    let g = gin(gens, n, seed, field)?;
    let generic = betti_via_koszul(&g, field).to_quotient().coarse();
    let degree_bound = generic.max_degree().unwrap_or(0) + 1;
    let gb = buchberger(gens, n, field)?;
    let original = betti_via_tor_gb(&gb, field, degree_bound)?;
    let truncated = original.iter().any(|(_, j, _)| j >= degree_bound);
    Ok(GinComparison {
        n,
        gin: g,
        original,
        generic,
        degree_bound,
        truncated,
    })
}

/// l-regularity for every `l`, corner positions and corner values agree
/// between `S/I` and `S/gin(I)`.
pub fn compare_corners(
    gens: &[Polynomial],
    n: usize,
    field: &PrimeField,
    seed: u64,
) -> Result<VerificationReport> {
    let cmp = gin_comparison(gens, n, field, seed)?;
    Ok(corner_report(
        &cmp,
        instance_label(gens, field),
        field,
        seed,
    ))
}

pub fn corner_report(
    cmp: &GinComparison,
    instance: String,
    field: &PrimeField,
    seed: u64,
) -> VerificationReport {
    let p = field.characteristic();
    let checked = cmp.n + 1 + cmp.original_corners().len();
    match cmp.corner_witness() {
        None => VerificationReport::pass(Check::GinCorners, instance, p, checked),
        Some(w) => VerificationReport::fail(Check::GinCorners, instance, p, checked, w),
    }
    .with_seed(seed)
}

/// `depth S/I = depth S/gin(I)`, each computed as `n - pd`.
pub fn depth_preservation_check(
    gens: &[Polynomial],
    n: usize,
    field: &PrimeField,
    seed: u64,
) -> Result<VerificationReport> {
    let cmp = gin_comparison(gens, n, field, seed)?;
    Ok(depth_report(&cmp, instance_label(gens, field), field, seed))
}

pub fn depth_report(
    cmp: &GinComparison,
    instance: String,
    field: &PrimeField,
    seed: u64,
) -> VerificationReport {
    let p = field.characteristic();
    let (a, b) = cmp.depths();
    if a == b && !cmp.truncated {
        VerificationReport::pass(Check::GinDepth, instance, p, 1)
    } else {
        let mut w = Witness::new(a, b, "left==right");
        if cmp.truncated {
            w = w.with_note("table of S/I reaches the degree bound");
        }
        VerificationReport::fail(Check::GinDepth, instance, p, 1, w)
    }
    .with_seed(seed)
}
