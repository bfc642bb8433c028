//! Witness-carrying reports produced by the structural checks. A failed
//! check is data, not an error: each violation records where the identity
//! broke and the two values that disagree.

use std::fmt;

use crate::scalar::ExactScalar;
use crate::tensor::DenseTensor;

/// One failing basis 5-tuple of the fundamental identity.
///
/// `tuple` holds `(u, v, x, y, z)` with `u < v` and `x < y < z`: the outer
/// bracket pair and the inner triple. `lhs` and `rhs` are the two sides of
/// the identity on the named output component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalIdentityViolation {
    pub tuple: [usize; 5],
    pub component: usize,
    pub lhs: ExactScalar,
    pub rhs: ExactScalar,
}

impl fmt::Display for FundamentalIdentityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [u, v, x, y, z] = self.tuple;
        write!(
            f,
            "5-tuple (e{u},e{v} | e{x},e{y},e{z}) component e{}: lhs {}, rhs {}",
            self.component, self.lhs, self.rhs
        )
    }
}

/// A basis index whose co-Jacobi defect tensor is nonzero, with the
/// surviving entries as witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoJacobiViolation {
    pub index: usize,
    pub defect: Vec<([usize; 5], ExactScalar)>,
}

impl fmt::Display for CoJacobiViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "basis e{}: {} nonzero defect entries", self.index, self.defect.len())?;
        for (key, value) in self.defect.iter().take(4) {
            write!(f, "; {:?} -> {}", key, value)?;
        }
        if self.defect.len() > 4 {
            write!(f, "; ...")?;
        }
        Ok(())
    }
}

/// A basis triple where the two sides of the cocycle condition differ,
/// with both sides as raw order-3 tensors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibilityViolation {
    pub triple: [usize; 3],
    pub lhs: DenseTensor<3>,
    pub rhs: DenseTensor<3>,
}

impl fmt::Display for CompatibilityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [i, j, k] = self.triple;
        write!(f, "triple (e{i},e{j},e{k}): lhs {:?}, rhs {:?}", self.lhs, self.rhs)
    }
}

/// A wedge coefficient where the constants-level compatibility identities
/// disagree on a basis triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlattenedViolation {
    pub triple: [usize; 3],
    pub wedge: [usize; 3],
    pub lhs: ExactScalar,
    pub rhs: ExactScalar,
}

impl fmt::Display for FlattenedViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [i, j, k] = self.triple;
        let [r, s, t] = self.wedge;
        write!(
            f,
            "triple (e{i},e{j},e{k}) wedge e{r}^e{s}^e{t}: lhs {}, rhs {}",
            self.lhs, self.rhs
        )
    }
}

/// Outcome of a structural check: pass, or a list of witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport<V> {
    pub violations: Vec<V>,
}

impl<V> CheckReport<V> {
    pub fn pass() -> Self {
        CheckReport { violations: Vec::new() }
    }

    pub fn is_pass(&self) -> bool {
        self.violations.is_empty()
    }
}

impl<V: fmt::Display> fmt::Display for CheckReport<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_pass() {
            write!(f, "pass")
        } else {
            writeln!(f, "fail ({} violations)", self.violations.len())?;
            for v in &self.violations {
                writeln!(f, "  {v}")?;
            }
            Ok(())
        }
    }
}

pub type FundamentalIdentityReport = CheckReport<FundamentalIdentityViolation>;
pub type CoJacobiReport = CheckReport<CoJacobiViolation>;
pub type CompatibilityReport = CheckReport<CompatibilityViolation>;
pub type FlattenedReport = CheckReport<FlattenedViolation>;

/// Combined verdict of the three axiom checks on an algebra/coalgebra pair.
#[derive(Clone, Debug)]
pub struct BialgebraReport {
    pub fundamental_identity: FundamentalIdentityReport,
    pub co_jacobi: CoJacobiReport,
    pub compatibility: CompatibilityReport,
}

impl BialgebraReport {
    pub fn is_pass(&self) -> bool {
        self.fundamental_identity.is_pass()
            && self.co_jacobi.is_pass()
            && self.compatibility.is_pass()
    }

    pub fn failing_checks(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.fundamental_identity.is_pass() {
            out.push("fundamental-identity");
        }
        if !self.co_jacobi.is_pass() {
            out.push("co-jacobi");
        }
        if !self.compatibility.is_pass() {
            out.push("compatibility");
        }
        out
    }
}
