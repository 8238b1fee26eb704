use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::vertex_set::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// An exponent vector in `N^n`.
///
/// Multidegrees sort by total degree and then by degree reverse
/// lexicographic order, largest first, so `x0^2 < x0*x1 < x1^2` in this
/// `Ord`. This is the canonical order for generator lists and Betti tables.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Multidegree(Vec<u32>);

impl Multidegree {
    pub fn new(exps: Vec<u32>) -> Self {
        Multidegree(exps)
    }

    pub fn zero(n: usize) -> Self {
        Multidegree(vec![0; n])
    }

    /// The characteristic vector of a face.
    pub fn from_vertex_set(set: VertexSet, n: usize) -> Self {
        Multidegree((0..n).map(|v| u32::from(set.contains(v))).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, j: usize) -> u32 {
        self.0[j]
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_square_free(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Variables with a positive exponent.
    pub fn support(&self) -> VertexSet {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(j, _)| j)
            .collect()
    }

    /// Componentwise `self ⪯ other`, i.e. `x^self` divides `x^other`.
    pub fn divides(&self, other: &Multidegree) -> bool {
        debug_assert_eq!(self.n(), other.n());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise maximum (lcm of monomials).
    pub fn join(&self, other: &Multidegree) -> Multidegree {
        Multidegree(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Multidegree) -> Multidegree {
        Multidegree(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Multidegree) -> Multidegree {
        Multidegree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other`, when `other` divides `self`.
    pub fn checked_div(&self, other: &Multidegree) -> Option<Multidegree> {
        if other.divides(self) {
            Some(Multidegree(
                self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
            ))
        } else {
            None
        }
    }

    /// `self - F` for a face `F` contained in the support.
    pub fn minus_face(&self, face: VertexSet) -> Option<Multidegree> {
        let mut out = self.0.clone();
        for v in face.iter() {
            if v >= out.len() || out[v] == 0 {
                return None;
            }
            out[v] -= 1;
        }
        Some(Multidegree(out))
    }

    pub fn with_increment(&self, j: usize) -> Multidegree {
        let mut out = self.0.clone();
        out[j] += 1;
        Multidegree(out)
    }

    /// Degree reverse lexicographic comparison with `x0 > x1 > …`.
    ///
    /// Higher total degree wins; on a tie the monomial whose last nonzero
    /// entry of `self - other` is negative is the larger one.
    pub fn degrevlex_cmp(&self, other: &Multidegree) -> Ordering {
        debug_assert_eq!(self.n(), other.n());
        match self.total().cmp(&other.total()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.0.iter().zip(&other.0).rev() {
            match a.cmp(b) {
                Ordering::Equal => continue,
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

impl Ord for Multidegree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| other.degrevlex_cmp(self))
            .then_with(|| self.0.len().cmp(&other.0.len()))
    }
}

impl PartialOrd for Multidegree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Monomial notation: `x0*x2^3`, with `1` for the zero vector.
impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{j}")?;
            } else {
                write!(f, "x{j}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// A monomial ideal given by its minimal generators.
///
/// The unit ideal is the ideal generated by the zero exponent vector; the
/// zero ideal has no generators.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Multidegree>,
}

impl MonomialIdeal {
    /// Builds the ideal, discarding redundant generators.
    pub fn new<I: IntoIterator<Item = Multidegree>>(n: usize, gens: I) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n });
        }
        let mut all: Vec<Multidegree> = gens.into_iter().collect();
        for g in &all {
            if g.n() != n {
                return Err(Error::ArityMismatch {
                    expected: n,
                    found: g.n(),
                });
            }
        }
        all.sort();
        all.dedup();
        let mut minimal: Vec<Multidegree> = Vec::with_capacity(all.len());
        for g in all {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        Ok(MonomialIdeal { n, gens: minimal })
    }

    /// Square-free ideal from generator supports.
    pub fn from_faces<I: IntoIterator<Item = VertexSet>>(n: usize, faces: I) -> Result<Self> {
        let gens: Vec<Multidegree> = faces
            .into_iter()
            .map(|f| match f.max_vertex() {
                Some(v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
                _ => Ok(Multidegree::from_vertex_set(f, n)),
            })
            .collect::<Result<_>>()?;
        MonomialIdeal::new(n, gens)
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: Vec::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Multidegree::zero(n)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Multidegree] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.total() == 0)
    }

    pub fn is_square_free(&self) -> bool {
        self.gens.iter().all(Multidegree::is_square_free)
    }

    /// Membership of the monomial `x^m`.
    pub fn contains(&self, m: &Multidegree) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn max_generator_degree(&self) -> Option<u32> {
        self.gens.iter().map(Multidegree::total).max()
    }

    /// Generator supports, for square-free ideals.
    pub fn generator_faces(&self) -> Result<Vec<VertexSet>> {
        if !self.is_square_free() {
            return Err(Error::NotSquareFree);
        }
        Ok(self.gens.iter().map(Multidegree::support).collect())
    }

    /// True when every variable has a pure power among the generators, i.e.
    /// `S/I` has finite length. The unit ideal is not counted.
    pub fn is_artinian(&self) -> bool {
        (0..self.n).all(|j| {
            self.gens
                .iter()
                .any(|g| g.get(j) > 0 && g.support() == VertexSet::singleton(j))
        })
    }

    /// `gens: x0*x2, x1*x3`.
    pub fn canonical(&self) -> String {
        if self.gens.is_empty() {
            "gens:".to_string()
        } else {
            format!("gens: {self}")
        }
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal(n={}, {})", self.n, self)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("0");
        }
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Variable `(original index, copy index)` for each polarized variable, in
/// the order they are numbered.
pub fn polarization_map(ideal: &MonomialIdeal) -> Vec<(usize, u32)> {
    (0..ideal.n())
        .flat_map(|j| {
            let copies = ideal
                .gens()
                .iter()
                .map(|g| g.get(j))
                .max()
                .unwrap_or(0)
                .max(1);
            (0..copies).map(move |c| (j, c))
        })
        .collect()
}

/// Standard polarization: `x_j^e` becomes `x_{j,0} ⋯ x_{j,e-1}`.
///
/// Every original variable keeps at least one copy, so a square-free ideal
/// is returned unchanged.
pub fn polarize(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let map = polarization_map(ideal);
    let n = map.len();
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n });
    }
    let mut offsets = vec![0usize; ideal.n()];
    for (k, &(j, c)) in map.iter().enumerate() {
        if c == 0 {
            offsets[j] = k;
        }
    }
    let gens = ideal.gens().iter().map(|g| {
        let mut exps = vec![0u32; n];
        for (j, &e) in g.exps().iter().enumerate() {
            for c in 0..e as usize {
                exps[offsets[j] + c] = 1;
            }
        }
        Multidegree::new(exps)
    });
    MonomialIdeal::new(n, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn md(v: &[u32]) -> Multidegree {
        Multidegree::new(v.to_vec())
    }

    #[test]
    fn generators_are_minimalized() {
        let i =
            MonomialIdeal::new(2, [md(&[2, 1]), md(&[1, 0]), md(&[1, 0]), md(&[0, 3])]).unwrap();
        assert_eq!(i.gens(), &[md(&[1, 0]), md(&[0, 3])]);
    }

    #[test]
    fn arity_is_checked() {
        assert!(matches!(
            MonomialIdeal::new(3, [md(&[1, 0])]),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn canonical_order_is_degree_then_degrevlex() {
        let i = MonomialIdeal::new(2, [md(&[0, 3]), md(&[1, 1]), md(&[2, 0])]).unwrap();
        assert_eq!(i.to_string(), "x0^2, x0*x1, x1^3");
        assert_eq!(MonomialIdeal::zero(3).canonical(), "gens:");
        assert_eq!(MonomialIdeal::unit(2).to_string(), "1");
    }

    #[test]
    fn degrevlex_examples() {
        // x^2 > xy > y^2 ; y^2 > xz
        assert_eq!(md(&[2, 0]).degrevlex_cmp(&md(&[1, 1])), Ordering::Greater);
        assert_eq!(md(&[1, 1]).degrevlex_cmp(&md(&[0, 2])), Ordering::Greater);
        assert_eq!(
            md(&[0, 2, 0]).degrevlex_cmp(&md(&[1, 0, 1])),
            Ordering::Greater
        );
    }

    #[test]
    fn polarize_square_free_is_identity() {
        let i = MonomialIdeal::from_faces(
            4,
            [
                VertexSet::from_vertices([0, 2]),
                VertexSet::from_vertices([1, 3]),
            ],
        )
        .unwrap();
        assert_eq!(polarize(&i).unwrap(), i);
    }

    #[test]
    fn polarize_pure_square() {
        let i = MonomialIdeal::new(1, [md(&[2])]).unwrap();
        let p = polarize(&i).unwrap();
        assert_eq!(p.n(), 2);
        assert_eq!(p.gens(), &[md(&[1, 1])]);
    }

    #[test]
    fn polarize_mixed() {
        // (x^2, xy) -> (x00*x01, x00*y00) on variables x00, x01, y00
        let i = MonomialIdeal::new(2, [md(&[2, 0]), md(&[1, 1])]).unwrap();
        assert_eq!(polarization_map(&i), vec![(0, 0), (0, 1), (1, 0)]);
        let p = polarize(&i).unwrap();
        assert_eq!(p.n(), 3);
        let mut gens = p.gens().to_vec();
        gens.sort_by(|a, b| a.exps().cmp(b.exps()));
        assert_eq!(gens, vec![md(&[1, 0, 1]), md(&[1, 1, 0])]);
    }

    #[test]
    fn artinian_detection() {
        let a = MonomialIdeal::new(2, [md(&[2, 0]), md(&[0, 2])]).unwrap();
        assert!(a.is_artinian());
        let b = MonomialIdeal::new(2, [md(&[2, 0]), md(&[1, 1])]).unwrap();
        assert!(!b.is_artinian());
    }
}
