use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::complexcore::Multidegree;
use crate::error::Error;

/// The statements that can be verified on a complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// Long exact sequence of restrictions and a vertex link.
    ExactSequence,
    /// `β_{i,b} ≤ Σ_{c ⪰ b} β^∨_{|b|-i-1,c}`.
    DualSumBound,
    /// The single-graded version of the dual-sum bound.
    BinomialBound,
    /// i-extremal dual entries bound, and extremal ones equal, primal entries.
    ExtremalFlip,
    /// `reg(I_X) = pd(S/I_{X^∨})`.
    Terai,
    CohenMacaulay,
    Gorenstein,
    DoublyCohenMacaulay,
    /// Corner and l-regularity preservation under generic initial ideals.
    GinCorners,
    /// Depth preservation under generic initial ideals.
    GinDepth,
}

impl Check {
    /// The complex-level checks run by `check all`, in output order.
    pub const ALL_COMPLEX: [Check; 8] = [
        Check::Terai,
        Check::CohenMacaulay,
        Check::Gorenstein,
        Check::DoublyCohenMacaulay,
        Check::DualSumBound,
        Check::BinomialBound,
        Check::ExtremalFlip,
        Check::ExactSequence,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Check::ExactSequence => "exact-sequence",
            Check::DualSumBound => "dual-sum",
            Check::BinomialBound => "binomial-sum",
            Check::ExtremalFlip => "extremal-flip",
            Check::Terai => "terai",
            Check::CohenMacaulay => "cm",
            Check::Gorenstein => "gorenstein",
            Check::DoublyCohenMacaulay => "dcm",
            Check::GinCorners => "gin-corners",
            Check::GinDepth => "gin-depth",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Accepts the ids above plus the short aliases `thmE`, `corF`, `corG` and
/// `thmG` (case-insensitive).
impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let check = match s.to_ascii_lowercase().as_str() {
            "exact-sequence" | "thme" => Check::ExactSequence,
            "dual-sum" | "corf" => Check::DualSumBound,
            "binomial-sum" | "corg" => Check::BinomialBound,
            "extremal-flip" | "thmg" => Check::ExtremalFlip,
            "terai" => Check::Terai,
            "cm" => Check::CohenMacaulay,
            "gorenstein" => Check::Gorenstein,
            "dcm" => Check::DoublyCohenMacaulay,
            "gin-corners" => Check::GinCorners,
            "gin-depth" => Check::GinDepth,
            _ => return Err(Error::InvalidArgument(format!("unknown check `{s}`"))),
        };
        Ok(check)
    }
}

/// The position at which a check failed and the two sides compared there.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<Multidegree>,
    /// Single-graded total degree, for coarse checks.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v: Option<usize>,
    pub left: i64,
    pub right: i64,
    /// The relation that should have held, e.g. `left<=right`.
    pub expected: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Witness {
    pub fn new(left: i64, right: i64, expected: impl Into<String>) -> Self {
        Witness {
            left,
            right,
            expected: expected.into(),
            ..Witness::default()
        }
    }

    pub fn at_i(mut self, i: i64) -> Self {
        self.i = Some(i);
        self
    }

    pub fn at_b(mut self, b: Multidegree) -> Self {
        self.b = Some(b);
        self
    }

    pub fn at_j(mut self, j: i64) -> Self {
        self.j = Some(j);
        self
    }

    pub fn at_v(mut self, v: usize) -> Self {
        self.v = Some(v);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// `i=2,b=x0*x1,left=3,right=2,expected=left<=right`
impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(i) = self.i {
            write!(f, "i={i},")?;
        }
        if let Some(b) = &self.b {
            write!(f, "b={b},")?;
        }
        if let Some(j) = self.j {
            write!(f, "j={j},")?;
        }
        if let Some(v) = self.v {
            write!(f, "v={v},")?;
        }
        write!(
            f,
            "left={},right={},expected={}",
            self.left, self.right, self.expected
        )?;
        if let Some(note) = &self.note {
            write!(f, ",note=\"{note}\"")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: Check,
    /// Canonical form of the instance (`facets: …` or `gens: …`).
    pub instance: String,
    pub characteristic: u32,
    pub passed: bool,
    /// Number of positions compared.
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl VerificationReport {
    pub fn pass(
        check: Check,
        instance: impl Into<String>,
        characteristic: u32,
        checked: usize,
    ) -> Self {
        VerificationReport {
            check,
            instance: instance.into(),
            characteristic,
            passed: true,
            checked,
            witness: None,
            seed: None,
        }
    }

    pub fn fail(
        check: Check,
        instance: impl Into<String>,
        characteristic: u32,
        checked: usize,
        witness: Witness,
    ) -> Self {
        VerificationReport {
            check,
            instance: instance.into(),
            characteristic,
            passed: false,
            checked,
            witness: Some(witness),
            seed: None,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// `TERAI instance="facets: 0 1, 1 2" PASS char=32003`
impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} instance=\"{}\" {}",
            self.check.id().to_ascii_uppercase(),
            self.instance,
            if self.passed { "PASS" } else { "FAIL" }
        )?;
        if let Some(w) = &self.witness {
            write!(f, " witness={w}")?;
        }
        write!(f, " char={}", self.characteristic)?;
        if let Some(seed) = self.seed {
            write!(f, " seed={seed}")?;
        }
        Ok(())
    }
}
