use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complexcore::Multidegree;

/// Which module a table resolves.
///
/// For a monomial ideal `I`, `β^{S/I}_{i+1,b} = β^{I}_{i,b}` and the quotient
/// table additionally carries `β_{0,0} = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    Quotient,
    Ideal,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Quotient => "quotient",
            Convention::Ideal => "ideal",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub b: Vec<u32>,
    pub value: u64,
}

/// Multigraded Betti numbers `β_{i,b}`; only nonzero entries are stored.
///
/// Iteration order is `(i, |b|, b)` with `b` in the canonical multidegree
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    n: usize,
    convention: Convention,
    entries: BTreeMap<(usize, Multidegree), u64>,
}

impl BettiTable {
    pub fn new(n: usize, convention: Convention) -> Self {
        BettiTable {
            n,
            convention,
            entries: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    /// Adds `value` to `β_{i,b}`.
    pub fn add(&mut self, i: usize, b: Multidegree, value: u64) {
        debug_assert_eq!(b.n(), self.n);
        if value > 0 {
            *self.entries.entry((i, b)).or_insert(0) += value;
        }
    }

    pub fn get(&self, i: usize, b: &Multidegree) -> u64 {
        // BTreeMap lookup needs an owned key
        self.entries.get(&(i, b.clone())).copied().unwrap_or(0)
    }

    /// Like [`BettiTable::get`] but with a signed index; negative is zero.
    pub fn get_signed(&self, i: i64, b: &Multidegree) -> u64 {
        if i < 0 {
            0
        } else {
            self.get(i as usize, b)
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Multidegree, u64)> + '_ {
        self.entries.iter().map(|((i, b), v)| (*i, b, *v))
    }

    pub fn column(&self, i: usize) -> impl Iterator<Item = (&Multidegree, u64)> + '_ {
        self.iter()
            .filter(move |(j, _, _)| *j == i)
            .map(|(_, b, v)| (b, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> Vec<BettiEntry> {
        self.iter()
            .map(|(i, b, value)| BettiEntry {
                i,
                b: b.exps().to_vec(),
                value,
            })
            .collect()
    }

    fn is_unit_ideal_table(&self) -> bool {
        self.entries.keys().any(|(i, b)| *i == 0 && b.total() == 0)
    }

    /// Quotient-convention version of this table.
    pub fn to_quotient(&self) -> BettiTable {
        match self.convention {
            Convention::Quotient => self.clone(),
            Convention::Ideal => {
                let mut out = BettiTable::new(self.n, Convention::Quotient);
                // S/S = 0 has an empty resolution
                if self.is_unit_ideal_table() {
                    return out;
                }
                out.add(0, Multidegree::zero(self.n), 1);
                for (i, b, v) in self.iter() {
                    out.add(i + 1, b.clone(), v);
                }
                out
            }
        }
    }

    /// Ideal-convention version of this table.
    pub fn to_ideal(&self) -> BettiTable {
        match self.convention {
            Convention::Ideal => self.clone(),
            Convention::Quotient => {
                let mut out = BettiTable::new(self.n, Convention::Ideal);
                if self.is_empty() {
                    out.add(0, Multidegree::zero(self.n), 1);
                    return out;
                }
                for (i, b, v) in self.iter() {
                    if i > 0 {
                        out.add(i - 1, b.clone(), v);
                    }
                }
                out
            }
        }
    }

    pub fn with_convention(&self, convention: Convention) -> BettiTable {
        match convention {
            Convention::Quotient => self.to_quotient(),
            Convention::Ideal => self.to_ideal(),
        }
    }

    /// Sums entries by total degree.
    pub fn coarse(&self) -> BettiDiagram {
        let mut d = BettiDiagram::new(self.convention);
        for (i, b, v) in self.iter() {
            d.add(i, b.total(), v);
        }
        d
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }
}

/// `(l, m)` with `m = l-reg > (l+1)-reg`; `value = β_{l, l+m}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Corner {
    pub l: usize,
    pub m: i64,
    pub value: u64,
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}):{}", self.l, self.m, self.value)
    }
}

/// Coarse graded Betti numbers `β_{i,j}`, drawn with column `i` and row
/// `j - i` as in Macaulay's `betti` output.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiDiagram {
    convention: Option<Convention>,
    entries: BTreeMap<(usize, u32), u64>,
}

impl BettiDiagram {
    pub fn new(convention: Convention) -> Self {
        BettiDiagram {
            convention: Some(convention),
            entries: BTreeMap::new(),
        }
    }

    pub fn convention(&self) -> Option<Convention> {
        self.convention
    }

    pub fn add(&mut self, i: usize, j: u32, value: u64) {
        if value > 0 {
            *self.entries.entry((i, j)).or_insert(0) += value;
        }
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero `(i, j, β_{i,j})`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u32, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Column sums for `i = 0 ..= pd`.
    pub fn totals(&self) -> Vec<u64> {
        let Some(pd) = self.projective_dimension() else {
            return Vec::new();
        };
        let mut t = vec![0; pd + 1];
        for (i, _, v) in self.iter() {
            t[i] += v;
        }
        t
    }

    /// Largest homological index with a nonzero entry.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.entries.keys().map(|(_, j)| *j).max()
    }

    /// `max_{j >= l} (deg - j)` over nonzero entries; `None` stands for -∞,
    /// returned once `l` exceeds the projective dimension.
    pub fn l_regularity(&self, l: usize) -> Option<i64> {
        self.iter()
            .filter(|(i, _, _)| *i >= l)
            .map(|(i, j, _)| i64::from(j) - i as i64)
            .max()
    }

    pub fn regularity(&self) -> Option<i64> {
        self.l_regularity(0)
    }

    /// `(l, l-reg)` for `l = 0 ..= pd`.
    pub fn regularity_profile(&self) -> Vec<(usize, i64)> {
        let Some(pd) = self.projective_dimension() else {
            return Vec::new();
        };
        (0..=pd)
            .filter_map(|l| self.l_regularity(l).map(|m| (l, m)))
            .collect()
    }

    /// Positions where the `l`-regularity strictly exceeds the
    /// `(l+1)`-regularity, in increasing `l`.
    pub fn corners(&self) -> Vec<Corner> {
        let Some(pd) = self.projective_dimension() else {
            return Vec::new();
        };
        let mut out = Vec::new();
        for l in 0..=pd {
            let here = self.l_regularity(l);
            let next = self.l_regularity(l + 1);
            if let Some(m) = here {
                if here > next {
                    let j = m + l as i64;
                    let value = u32::try_from(j).map_or(0, |j| self.get(l, j));
                    out.push(Corner { l, m, value });
                }
            }
        }
        out
    }

    /// True when `β_{i,j} ≠ 0` and every `β_{l,r}` with `l >= i`, `r > j`
    /// and `r - l >= j - i` vanishes.
    pub fn is_extremal(&self, i: usize, j: u32) -> bool {
        if self.get(i, j) == 0 {
            return false;
        }
        let row = i64::from(j) - i as i64;
        !self
            .iter()
            .any(|(l, r, _)| l >= i && r > j && i64::from(r) - l as i64 >= row)
    }

    /// Macaulay-style text: a `total:` header then one line per row, with
    /// `.` for zero entries.
    pub fn render(&self) -> String {
        let pd = match self.projective_dimension() {
            None => return "total:\n".to_string(),
            Some(pd) => pd,
        };
        let rows: Vec<i64> = self
            .iter()
            .map(|(i, j, _)| i64::from(j) - i as i64)
            .collect();
        let (min_row, max_row) = (
            *rows.iter().min().expect("nonempty"),
            *rows.iter().max().expect("nonempty"),
        );
        let totals = self.totals();
        let cell = |i: usize, r: i64| -> String {
            let j = r + i as i64;
            match u32::try_from(j).map(|j| self.get(i, j)) {
                Ok(v) if v > 0 => v.to_string(),
                _ => ".".to_string(),
            }
        };
        let widths: Vec<usize> = (0..=pd)
            .map(|i| {
                (min_row..=max_row)
                    .map(|r| cell(i, r).len())
                    .chain(std::iter::once(totals[i].to_string().len()))
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        let label_width = "total:"
            .len()
            .max(format!("{min_row}:").len())
            .max(format!("{max_row}:").len());

        let mut out = String::new();
        let mut line = format!("{:>label_width$}", "total:");
        for (i, t) in totals.iter().enumerate() {
            line.push_str(&format!(" {:>w$}", t, w = widths[i]));
        }
        out.push_str(&line);
        out.push('\n');
        for r in min_row..=max_row {
            let mut line = format!("{:>label_width$}", format!("{r}:"));
            for (i, w) in widths.iter().enumerate() {
                line.push_str(&format!(" {:>w$}", cell(i, r), w = w));
            }
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for BettiDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
