//! Sparse-by-key dense-order tensors over a finite basis, alternating
//! trivectors in canonical form, the five-factor permutation operators used
//! by the structural identities, and the dual pairing.
//!
//! Conventions, fixed once and used everywhere:
//!
//! * basis indices are 1-based;
//! * a wedge `e_i ^ e_j ^ e_k` expands to the signed sum over all six slot
//!   orderings with no `1/6` normalization, so pairing a wedge against the
//!   matching ordered tensor `e_i (x) e_j (x) e_k` (with `i < j < k`) gives 1;
//! * the factor-permutation operators move slot *contents*: selector 1 sends
//!   slot pattern `(1,2,3,4,5)` to `(3,4,1,2,5)`, selector 2 to
//!   `(4,5,1,2,3)`, selector 3 to `(5,3,1,2,4)`. Their adjoints under the
//!   pairing (the action induced on the dual space) are the inverse
//!   permutations, exposed separately.

use std::collections::BTreeMap;

use crate::linalg::Vector;
use crate::scalar::ExactScalar;
use crate::Error;

/// Slot patterns for the three permutation operators on 5-tensors: output
/// slot `i` receives input slot `PATTERN[i]`.
const OMEGA_PATTERNS: [[usize; 5]; 3] = [
    [3, 4, 1, 2, 5],
    [4, 5, 1, 2, 3],
    [5, 3, 1, 2, 4],
];

/// Inverse slot patterns; these give the transpose action under the pairing.
const OMEGA_INVERSE_PATTERNS: [[usize; 5]; 3] = [
    [3, 4, 1, 2, 5],
    [3, 4, 5, 1, 2],
    [3, 4, 2, 5, 1],
];

/// A tensor of order `K` over a `dim`-dimensional space, stored as a sparse
/// map from index tuples (entries 1..=dim) to nonzero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct DenseTensor<const K: usize> {
    dim: usize,
    entries: BTreeMap<[usize; K], ExactScalar>,
}

impl<const K: usize> DenseTensor<K> {
    pub fn zero(dim: usize) -> Self {
        DenseTensor {
            dim,
            entries: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        K
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn coefficient(&self, key: &[usize; K]) -> ExactScalar {
        self.entries.get(key).cloned().unwrap_or_else(ExactScalar::zero)
    }

    /// Adds `value` to the entry at `key`, dropping the entry if it cancels.
    pub fn add_entry(&mut self, key: [usize; K], value: ExactScalar) {
        assert!(
            key.iter().all(|&i| i >= 1 && i <= self.dim),
            "tensor index out of range"
        );
        if value.is_zero() {
            return;
        }
        match self.entries.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &value;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn basis(dim: usize, key: [usize; K]) -> Self {
        let mut t = DenseTensor::zero(dim);
        t.add_entry(key, ExactScalar::one());
        t
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[usize; K], &ExactScalar)> {
        self.entries.iter()
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.dim, other.dim, "tensor dimension mismatch");
        for (k, v) in other.iter() {
            self.add_entry(*k, v.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        assert_eq!(self.dim, other.dim, "tensor dimension mismatch");
        for (k, v) in other.iter() {
            self.add_entry(*k, -v);
        }
    }

    pub fn scaled(&self, scale: &ExactScalar) -> Self {
        let mut out = DenseTensor::zero(self.dim);
        if scale.is_zero() {
            return out;
        }
        for (k, v) in self.iter() {
            out.entries.insert(*k, scale * v);
        }
        out
    }

    fn permuted(&self, pattern: &[usize; 5]) -> Self
    where
        [usize; K]: Sized,
    {
        assert_eq!(K, 5, "factor permutation is defined on order-5 tensors");
        let mut out = DenseTensor::zero(self.dim);
        for (k, v) in self.iter() {
            let mut new_key = *k;
            for (slot, &src) in pattern.iter().enumerate() {
                new_key[slot] = k[src - 1];
            }
            out.add_entry(new_key, v.clone());
        }
        out
    }
}

/// The factor-permutation operator `selector` (1, 2, or 3) as printed in the
/// axioms, acting on order-5 tensors by moving slot contents.
pub fn apply_omega(selector: usize, t: &DenseTensor<5>) -> Result<DenseTensor<5>, Error> {
    let pattern = OMEGA_PATTERNS
        .get(selector.wrapping_sub(1))
        .ok_or(Error::InvalidOmegaSelector(selector))?;
    Ok(t.permuted(pattern))
}

/// The transpose of [`apply_omega`] under the dual pairing: the action the
/// operator induces on cotensors. This is the inverse slot permutation.
pub fn apply_omega_adjoint(selector: usize, t: &DenseTensor<5>) -> Result<DenseTensor<5>, Error> {
    let pattern = OMEGA_INVERSE_PATTERNS
        .get(selector.wrapping_sub(1))
        .ok_or(Error::InvalidOmegaSelector(selector))?;
    Ok(t.permuted(pattern))
}

/// Factor-wise dual pairing of two tensors of equal order and dimension.
/// Basis cotensors pair with basis tensors by the product of Kronecker
/// deltas, extended bilinearly.
pub fn pairing<const K: usize>(
    cotensor: &DenseTensor<K>,
    tensor: &DenseTensor<K>,
) -> Result<ExactScalar, Error> {
    if cotensor.dim != tensor.dim {
        return Err(Error::DimensionMismatch {
            expected: cotensor.dim,
            found: tensor.dim,
        });
    }
    let mut acc = ExactScalar::zero();
    let (small, large) = if cotensor.len() <= tensor.len() {
        (cotensor, tensor)
    } else {
        (tensor, cotensor)
    };
    for (k, v) in small.iter() {
        if let Some(w) = large.entries.get(k) {
            acc += &(v * w);
        }
    }
    Ok(acc)
}

/// An element of the third exterior power, stored canonically on strictly
/// increasing index triples with no zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct AlternatingTrivector {
    dim: usize,
    coeffs: BTreeMap<[usize; 3], ExactScalar>,
}

/// Sorts a triple into increasing order, returning the permutation sign.
/// `None` when two indices coincide.
pub fn sort_triple(i: usize, j: usize, k: usize) -> Option<([usize; 3], bool)> {
    if i == j || j == k || i == k {
        return None;
    }
    let mut t = [i, j, k];
    let mut negative = false;
    if t[0] > t[1] {
        t.swap(0, 1);
        negative = !negative;
    }
    if t[1] > t[2] {
        t.swap(1, 2);
        negative = !negative;
    }
    if t[0] > t[1] {
        t.swap(0, 1);
        negative = !negative;
    }
    Some((t, negative))
}

impl AlternatingTrivector {
    pub fn zero(dim: usize) -> Self {
        AlternatingTrivector {
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c * e_i ^ e_j ^ e_k`, canonicalizing the index order and
    /// absorbing the permutation sign into the coefficient. A repeated index
    /// contributes nothing.
    pub fn add_wedge(
        &mut self,
        i: usize,
        j: usize,
        k: usize,
        c: ExactScalar,
    ) -> Result<(), Error> {
        for idx in [i, j, k] {
            if idx < 1 || idx > self.dim {
                return Err(Error::IndexOutOfRange {
                    index: idx,
                    dim: self.dim,
                });
            }
        }
        let Some((key, negative)) = sort_triple(i, j, k) else {
            return Ok(());
        };
        let value = if negative { -c } else { c };
        if value.is_zero() {
            return Ok(());
        }
        match self.coeffs.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &value;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
        Ok(())
    }

    /// Coefficient on the canonical triple `i < j < k`.
    pub fn coefficient(&self, key: &[usize; 3]) -> ExactScalar {
        self.coeffs.get(key).cloned().unwrap_or_else(ExactScalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[usize; 3], &ExactScalar)> {
        self.coeffs.iter()
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.dim, other.dim, "trivector dimension mismatch");
        for (k, v) in other.iter() {
            self.add_wedge(k[0], k[1], k[2], v.clone())
                .expect("canonical keys are in range");
        }
    }

    pub fn add_scaled(&mut self, scale: &ExactScalar, other: &Self) {
        assert_eq!(self.dim, other.dim, "trivector dimension mismatch");
        if scale.is_zero() {
            return;
        }
        for (k, v) in other.iter() {
            self.add_wedge(k[0], k[1], k[2], scale * v)
                .expect("canonical keys are in range");
        }
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for v in out.coeffs.values_mut() {
            *v = -v.clone();
        }
        out
    }

    pub fn scaled(&self, scale: &ExactScalar) -> Self {
        let mut out = AlternatingTrivector::zero(self.dim);
        out.add_scaled(scale, self);
        out
    }
}

impl std::fmt::Debug for AlternatingTrivector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (k, v)) in self.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*e{}^e{}^e{}", v, k[0], k[1], k[2])?;
        }
        Ok(())
    }
}

impl<const K: usize> std::fmt::Debug for DenseTensor<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (k, v)) in self.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*{:?}", v, k)?;
        }
        Ok(())
    }
}

/// `c * e_i ^ e_j ^ e_k` as a canonical trivector. The zero trivector when
/// two indices coincide.
pub fn canonical_wedge(
    dim: usize,
    i: usize,
    j: usize,
    k: usize,
    c: ExactScalar,
) -> Result<AlternatingTrivector, Error> {
    let mut t = AlternatingTrivector::zero(dim);
    t.add_wedge(i, j, k, c)?;
    Ok(t)
}

/// All six signed slot orderings of `(i, j, k)`: `(ordering, negative)`.
fn six_orderings(i: usize, j: usize, k: usize) -> [([usize; 3], bool); 6] {
    [
        ([i, j, k], false),
        ([i, k, j], true),
        ([j, i, k], true),
        ([j, k, i], false),
        ([k, i, j], false),
        ([k, j, i], true),
    ]
}

/// Expands a canonical trivector into a raw order-3 tensor: each wedge term
/// becomes the signed sum over all six slot orderings.
pub fn expand_wedge(t: &AlternatingTrivector) -> DenseTensor<3> {
    let mut out = DenseTensor::zero(t.dim());
    for (key, c) in t.iter() {
        for (ordering, negative) in six_orderings(key[0], key[1], key[2]) {
            out.add_entry(ordering, if negative { -c } else { c.clone() });
        }
    }
    out
}

/// All strictly increasing index triples over `1..=dim`, lexicographic.
pub fn canonical_triples(dim: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for i in 1..=dim {
        for j in (i + 1)..=dim {
            for k in (j + 1)..=dim {
                out.push([i, j, k]);
            }
        }
    }
    out
}

/// The wedge of three coordinate vectors, computed from the 3x3 minors of
/// the column matrix they span.
pub fn wedge_of_vectors(x: &Vector, y: &Vector, z: &Vector) -> AlternatingTrivector {
    let dim = x.len();
    assert!(y.len() == dim && z.len() == dim, "vector length mismatch");
    let mut out = AlternatingTrivector::zero(dim);
    for i in 0..dim {
        for j in (i + 1)..dim {
            for k in (j + 1)..dim {
                let minor = &x[i] * &(&y[j] * &z[k] - &y[k] * &z[j])
                    - &y[i] * &(&x[j] * &z[k] - &x[k] * &z[j])
                    + &z[i] * &(&x[j] * &y[k] - &x[k] * &y[j]);
                out.add_wedge(i + 1, j + 1, k + 1, minor)
                    .expect("indices in range");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::unit_vector;

    fn s(n: i64) -> ExactScalar {
        ExactScalar::int(n)
    }

    #[test]
    fn canonical_wedge_sorts_and_signs() {
        let t = canonical_wedge(4, 2, 3, 4, s(1)).unwrap();
        assert_eq!(t.coefficient(&[2, 3, 4]), s(1));

        let t = canonical_wedge(3, 1, 3, 2, s(1)).unwrap();
        assert_eq!(t.coefficient(&[1, 2, 3]), s(-1));

        let t = canonical_wedge(3, 1, 1, 3, s(5)).unwrap();
        assert!(t.is_zero());

        assert!(canonical_wedge(3, 0, 1, 2, s(1)).is_err());
        assert!(canonical_wedge(3, 1, 2, 4, s(1)).is_err());
    }

    #[test]
    fn canonical_wedge_argwise_antisymmetry_exhaustive() {
        // all six argument orders of (1,2,3) against the sorted form
        let base = canonical_wedge(4, 1, 2, 3, s(7)).unwrap();
        let perms: [([usize; 3], i64); 6] = [
            ([1, 2, 3], 1),
            ([1, 3, 2], -1),
            ([2, 1, 3], -1),
            ([2, 3, 1], 1),
            ([3, 1, 2], 1),
            ([3, 2, 1], -1),
        ];
        for (p, sign) in perms {
            let t = canonical_wedge(4, p[0], p[1], p[2], s(7)).unwrap();
            assert_eq!(t.coefficient(&[1, 2, 3]), &s(sign) * &base.coefficient(&[1, 2, 3]));
        }
    }

    #[test]
    fn expand_wedge_six_signed_terms() {
        let t = canonical_wedge(3, 1, 2, 3, s(1)).unwrap();
        let raw = expand_wedge(&t);
        assert_eq!(raw.len(), 6);
        assert_eq!(raw.coefficient(&[1, 2, 3]), s(1));
        assert_eq!(raw.coefficient(&[1, 3, 2]), s(-1));
        assert_eq!(raw.coefficient(&[2, 1, 3]), s(-1));
        assert_eq!(raw.coefficient(&[2, 3, 1]), s(1));
        assert_eq!(raw.coefficient(&[3, 1, 2]), s(1));
        assert_eq!(raw.coefficient(&[3, 2, 1]), s(-1));

        assert!(expand_wedge(&AlternatingTrivector::zero(3)).is_zero());

        let t = canonical_wedge(4, 2, 3, 4, s(2)).unwrap();
        let raw = expand_wedge(&t);
        assert_eq!(raw.len(), 6);
        for (_, v) in raw.iter() {
            assert!(v == &s(2) || v == &s(-2));
        }
    }

    #[test]
    fn omega_on_basis_tensors() {
        let t = DenseTensor::<5>::basis(5, [1, 2, 3, 4, 5]);
        let w1 = apply_omega(1, &t).unwrap();
        assert_eq!(w1.coefficient(&[3, 4, 1, 2, 5]), s(1));
        assert_eq!(w1.len(), 1);

        let w2 = apply_omega(2, &t).unwrap();
        assert_eq!(w2.coefficient(&[4, 5, 1, 2, 3]), s(1));

        let w3 = apply_omega(3, &t).unwrap();
        assert_eq!(w3.coefficient(&[5, 3, 1, 2, 4]), s(1));

        assert!(apply_omega(0, &t).is_err());
        assert!(apply_omega(4, &t).is_err());
    }

    #[test]
    fn omega_adjoint_matches_pairing_transpose() {
        // <adj(omega) u, w> == <u, omega w> on a spread of basis tensors
        let dim = 3;
        let keys = [
            [1, 2, 3, 1, 2],
            [2, 3, 1, 2, 3],
            [3, 1, 2, 3, 1],
            [1, 1, 2, 3, 2],
        ];
        for sel in 1..=3 {
            for u_key in keys {
                let u = DenseTensor::<5>::basis(dim, u_key);
                for w_key in keys {
                    let w = DenseTensor::<5>::basis(dim, w_key);
                    let lhs = pairing(&apply_omega_adjoint(sel, &u).unwrap(), &w).unwrap();
                    let rhs = pairing(&u, &apply_omega(sel, &w).unwrap()).unwrap();
                    assert_eq!(lhs, rhs, "selector {sel}");
                }
            }
        }
    }

    #[test]
    fn omega_is_bijective_and_preserves_coefficients() {
        let mut t = DenseTensor::<5>::zero(4);
        t.add_entry([1, 2, 3, 4, 1], s(3));
        t.add_entry([2, 2, 2, 1, 4], s(-5));
        t.add_entry([4, 3, 2, 1, 1], ExactScalar::ratio(1, 2));
        for sel in 1..=3 {
            let w = apply_omega(sel, &t).unwrap();
            assert_eq!(w.len(), t.len());
            let mut back = apply_omega_adjoint(sel, &w).unwrap();
            back.sub_assign(&t);
            assert!(back.is_zero());
        }
    }

    #[test]
    fn pairing_kronecker_and_alternation() {
        let a = DenseTensor::<3>::basis(3, [1, 2, 3]);
        assert_eq!(pairing(&a, &a).unwrap(), s(1));
        let b = DenseTensor::<3>::basis(3, [2, 1, 3]);
        assert_eq!(pairing(&a, &b).unwrap(), s(0));

        let w = expand_wedge(&canonical_wedge(3, 1, 2, 3, s(1)).unwrap());
        assert_eq!(pairing(&w, &w).unwrap(), s(6));

        let mismatched = DenseTensor::<3>::zero(4);
        assert!(pairing(&a, &mismatched).is_err());
    }

    #[test]
    fn wedge_of_unit_vectors_matches_canonical() {
        let x = unit_vector(4, 2);
        let y = unit_vector(4, 4);
        let z = unit_vector(4, 3);
        let w = wedge_of_vectors(&x, &y, &z);
        assert_eq!(w, canonical_wedge(4, 2, 4, 3, s(1)).unwrap());
        assert_eq!(w.coefficient(&[2, 3, 4]), s(-1));
    }
}
