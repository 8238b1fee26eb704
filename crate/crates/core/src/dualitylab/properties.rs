use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::report::{Check, VerificationReport, Witness};
use crate::complexcore::{core, link, restrict_to, Multidegree, SimplicialComplex, VertexSet};
use crate::error::Result;
use crate::homology::{reduced_homology_ranks, PrimeField};
use crate::resolutions::{
    dual_betti_via_links, has_linear_resolution, hochster_betti, multigraded_extremal,
};

/// A face whose link has homology where the criterion forbids it.
#[derive(Debug, Clone, PartialEq, Eq)]
struct LinkObstruction {
    face: VertexSet,
    dimension: isize,
    rank: usize,
    expected: usize,
}

/// First face (in face order) whose link violates `ok(i, dim lk, rank)`.
fn link_obstruction<F>(
    x: &SimplicialComplex,
    field: &PrimeField,
    expected: F,
) -> Option<LinkObstruction>
where
    F: Fn(isize, isize) -> usize + Sync,
{
    let faces = x.faces();
    faces
        .par_iter()
        .map(|&face| {
            let lk = link(face, x).expect("face of x");
            let d = lk.dim().expect("link of a face is not void");
            let h = reduced_homology_ranks(&lk, field);
            (-1..=d + 1).find_map(|i| {
                let e = expected(i, d);
                let r = h.get(i);
                (r != e).then_some(LinkObstruction {
                    face,
                    dimension: i,
                    rank: r,
                    expected: e,
                })
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .next()
}

fn reisner_obstruction(x: &SimplicialComplex, field: &PrimeField) -> Option<LinkObstruction> {
    // only dimensions below dim lk are constrained; report them as expected 0
    let faces = x.faces();
    faces
        .par_iter()
        .map(|&face| {
            let lk = link(face, x).expect("face of x");
            let d = lk.dim().expect("link of a face is not void");
            let h = reduced_homology_ranks(&lk, field);
            (-1..d).find_map(|i| {
                let r = h.get(i);
                (r != 0).then_some(LinkObstruction {
                    face,
                    dimension: i,
                    rank: r,
                    expected: 0,
                })
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .next()
}

/// Reisner's criterion: `H̃_i(lk(F, X); k) = 0` for all faces `F` and all
/// `i < dim lk(F, X)`. The void complex is not Cohen–Macaulay.
pub fn cm_by_reisner(x: &SimplicialComplex, field: &PrimeField) -> bool {
    !x.is_void() && reisner_obstruction(x, field).is_none()
}

/// `pd(S/I_X) = n - dim X - 1`, with `pd` read off the Hochster table.
pub fn cm_by_projective_dimension(x: &SimplicialComplex, field: &PrimeField) -> Result<bool> {
    let Some(dim) = x.dim() else {
        return Ok(false);
    };
    let pd = hochster_betti(x, field)?
        .projective_dimension()
        .unwrap_or(0) as isize;
    Ok(pd == x.n() as isize - dim - 1)
}

pub fn is_cohen_macaulay(x: &SimplicialComplex, field: &PrimeField) -> bool {
    cm_by_reisner(x, field)
}

/// Passes when `X` is Cohen–Macaulay by both routes. A disagreement between
/// the routes is reported with the note `criteria disagree`.
pub fn check_cohen_macaulay(
    x: &SimplicialComplex,
    field: &PrimeField,
) -> Result<VerificationReport> {
    let by_links = cm_by_reisner(x, field);
    let by_pd = cm_by_projective_dimension(x, field)?;
    let instance = x.canonical();
    let p = field.characteristic();
    let checked = x.faces().len();
    if by_links && by_pd {
        return Ok(VerificationReport::pass(
            Check::CohenMacaulay,
            instance,
            p,
            checked,
        ));
    }
    let n = x.n();
    let pd = if x.is_void() {
        -1
    } else {
        hochster_betti(x, field)?
            .projective_dimension()
            .unwrap_or(0) as i64
    };
    let codim = x.dim().map_or(-1, |d| n as i64 - d as i64 - 1);
    let mut w = Witness::new(pd, codim, "left==right");
    let mut note = format!("reisner={by_links} pd=codim={by_pd}");
    if by_links != by_pd {
        note.push_str("; criteria disagree");
    }
    if let Some(o) = reisner_obstruction(x, field) {
        w = w
            .at_i(o.dimension as i64)
            .at_b(Multidegree::from_vertex_set(o.face, n));
        note.push_str(&format!(
            "; H_{}(lk {}) has rank {}",
            o.dimension, o.face, o.rank
        ));
    }
    Ok(VerificationReport::fail(
        Check::CohenMacaulay,
        instance,
        p,
        checked,
        w.with_note(note),
    ))
}

fn sphere_obstruction(x: &SimplicialComplex, field: &PrimeField) -> Option<LinkObstruction> {
    let c = core(x);
    link_obstruction(&c, field, |i, d| usize::from(i == d))
}

/// Links in `core(X)` have the homology of spheres of their own dimension.
/// The void complex is not Gorenstein.
pub fn gorenstein_by_links(x: &SimplicialComplex, field: &PrimeField) -> bool {
    !x.is_void() && sphere_obstruction(x, field).is_none()
}

struct GorensteinTableData {
    dual_linear: bool,
    corners: Vec<crate::resolutions::Corner>,
    last_total: u64,
}

fn gorenstein_table_data(x: &SimplicialComplex, field: &PrimeField) -> Result<GorensteinTableData> {
    let q = hochster_betti(x, field)?.coarse();
    let dual = dual_betti_via_links(x, field)?;
    Ok(GorensteinTableData {
        dual_linear: has_linear_resolution(&dual),
        corners: q.corners(),
        last_total: q.totals().last().copied().unwrap_or(0),
    })
}

/// Table route: the dual ideal has a linear resolution (so `X` is
/// Cohen–Macaulay), `S/I_X` has a single corner of value one and the last
/// column of its Betti diagram sums to one.
pub fn gorenstein_by_betti_table(x: &SimplicialComplex, field: &PrimeField) -> Result<bool> {
    if x.is_void() {
        return Ok(false);
    }
    let d = gorenstein_table_data(x, field)?;
    Ok(d.dual_linear && matches!(d.corners.as_slice(), [c] if c.value == 1) && d.last_total == 1)
}

pub fn is_gorenstein(x: &SimplicialComplex, field: &PrimeField) -> bool {
    gorenstein_by_links(x, field)
}

/// Passes when `X` is Gorenstein by both routes. Failures list the corners
/// of `S/I_X` in the witness.
pub fn check_gorenstein(x: &SimplicialComplex, field: &PrimeField) -> Result<VerificationReport> {
    let by_links = gorenstein_by_links(x, field);
    let by_table = gorenstein_by_betti_table(x, field)?;
    let instance = x.canonical();
    let p = field.characteristic();
    let checked = core(x).faces().len();
    if by_links && by_table {
        return Ok(VerificationReport::pass(
            Check::Gorenstein,
            instance,
            p,
            checked,
        ));
    }
    let mut note = format!("links={by_links} table={by_table}");
    if by_links != by_table {
        note.push_str("; criteria disagree");
    }
    let mut w = Witness::new(0, 1, "left==right");
    if !x.is_void() {
        let d = gorenstein_table_data(x, field)?;
        let corners: Vec<String> = d.corners.iter().map(|c| c.to_string()).collect();
        w = Witness::new(d.corners.len() as i64, 1, "left==right");
        note.push_str(&format!(
            "; corners {}; last column total {}; dual linear {}",
            corners.join(" "),
            d.last_total,
            d.dual_linear
        ));
    }
    if let Some(o) = sphere_obstruction(x, field) {
        if w.left == w.right {
            w = Witness::new(o.rank as i64, o.expected as i64, "left==right");
        }
        w = w
            .at_i(o.dimension as i64)
            .at_b(Multidegree::from_vertex_set(o.face, x.n()));
        note.push_str(&format!(
            "; H_{}(lk {}) has rank {}, sphere needs {}",
            o.dimension, o.face, o.rank, o.expected
        ));
    }
    Ok(VerificationReport::fail(
        Check::Gorenstein,
        instance,
        p,
        checked,
        w.with_note(note),
    ))
}

/// Outcome of the doubly Cohen–Macaulay test together with the properties
/// it implies for the dual ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoublyCmReport {
    pub doubly_cm: bool,
    pub cohen_macaulay: bool,
    /// A vertex whose deletion is not Cohen–Macaulay of the same dimension.
    pub failing_vertex: Option<usize>,
    /// `I_{X^∨}` has a linear resolution.
    pub dual_linear: bool,
    /// The only multigraded extremal position of `I_{X^∨}` is
    /// `(dim X + 1, (1, …, 1))`.
    pub unique_extremal_at_top: bool,
}

/// `X` is Cohen–Macaulay and every `X_{[n] - v}`, `v` a vertex of `X`, is
/// Cohen–Macaulay of the same dimension.
pub fn doubly_cm_report(x: &SimplicialComplex, field: &PrimeField) -> Result<DoublyCmReport> {
    let n = x.n();
    let Some(dim) = x.dim() else {
        return Ok(DoublyCmReport {
            doubly_cm: false,
            cohen_macaulay: false,
            failing_vertex: None,
            dual_linear: false,
            unique_extremal_at_top: false,
        });
    };
    let cohen_macaulay = cm_by_reisner(x, field);
    let failing_vertex = if cohen_macaulay {
        x.vertices().iter().find(|&v| {
            let y = restrict_to(x, VertexSet::full(n).without(v));
            y.dim() != Some(dim) || !cm_by_reisner(&y, field)
        })
    } else {
        None
    };
    let dual = dual_betti_via_links(x, field)?;
    let top = (
        (dim + 1) as usize,
        Multidegree::from_vertex_set(VertexSet::full(n), n),
    );
    let extremal = multigraded_extremal(&dual);
    Ok(DoublyCmReport {
        doubly_cm: cohen_macaulay && failing_vertex.is_none(),
        cohen_macaulay,
        failing_vertex,
        dual_linear: has_linear_resolution(&dual),
        unique_extremal_at_top: extremal.len() == 1 && extremal.contains(&top),
    })
}

pub fn is_doubly_cohen_macaulay(x: &SimplicialComplex, field: &PrimeField) -> Result<bool> {
    Ok(doubly_cm_report(x, field)?.doubly_cm)
}

/// Passes when `X` is doubly Cohen–Macaulay and the dual ideal has a linear
/// resolution with its unique extremal Betti number at `(dim X + 1, [n])`.
pub fn check_doubly_cohen_macaulay(
    x: &SimplicialComplex,
    field: &PrimeField,
) -> Result<VerificationReport> {
    let r = doubly_cm_report(x, field)?;
    let instance = x.canonical();
    let p = field.characteristic();
    let checked = x.vertices().len() + 1;
    if r.doubly_cm && r.dual_linear && r.unique_extremal_at_top {
        return Ok(VerificationReport::pass(
            Check::DoublyCohenMacaulay,
            instance,
            p,
            checked,
        ));
    }
    let note = if r.doubly_cm {
        format!(
            "doubly CM but dual linear={} unique top extremal={}",
            r.dual_linear, r.unique_extremal_at_top
        )
    } else if !r.cohen_macaulay {
        "not Cohen-Macaulay".to_string()
    } else {
        "vertex deletion is not Cohen-Macaulay of the same dimension".to_string()
    };
    let mut w = Witness::new(i64::from(r.doubly_cm), 1, "left==right").with_note(note);
    if let Some(v) = r.failing_vertex {
        w = w.at_v(v);
    }
    Ok(VerificationReport::fail(
        Check::DoublyCohenMacaulay,
        instance,
        p,
        checked,
        w,
    ))
}
