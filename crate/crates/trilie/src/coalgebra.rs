//! Finite-dimensional 3-Lie coalgebras: cobracket storage in canonical
//! wedge form, linear cobracket evaluation, the co-Jacobi identity check,
//! and rank fingerprints.
//!
//! The co-Jacobi check builds the raw order-5 tensor obtained by applying
//! the cobracket to the last factor of its own expansion, then applies
//! `1 - w1 - w2 - w3` through the transpose action of the three factor
//! permutations (see `tensor::apply_omega_adjoint`). The transpose action is
//! the one the permutation operators induce on the dual side of the pairing;
//! it is forced by the requirement that a coalgebra is exactly the dual of a
//! 3-Lie algebra, and on structure constants it reproduces the four-term
//! quadratic identity obtained by expanding the coordinate-free axiom on
//! basis elements.

use std::collections::BTreeMap;

use crate::linalg::{self, Vector};
use crate::report::{CoJacobiReport, CoJacobiViolation};
use crate::scalar::ExactScalar;
use crate::tensor::{apply_omega_adjoint, expand_wedge, AlternatingTrivector, DenseTensor};
use crate::Error;

/// A cobracket `L -> L ^ L ^ L` on an `m`-dimensional space, stored as a map
/// from basis index `l` to the canonical trivector it is sent to. Indices
/// with zero cobracket are omitted.
#[derive(Clone, PartialEq, Eq)]
pub struct ThreeLieCoalgebra {
    dim: usize,
    cobrackets: BTreeMap<usize, AlternatingTrivector>,
}

impl ThreeLieCoalgebra {
    /// The zero (trivial) coalgebra.
    pub fn zero(dim: usize) -> Self {
        assert!(dim >= 1, "dimension must be positive");
        ThreeLieCoalgebra {
            dim,
            cobrackets: BTreeMap::new(),
        }
    }

    /// Builds a coalgebra from `(index, trivector)` pairs. Unlisted basis
    /// vectors map to zero. A duplicated index is accepted only when the
    /// values agree.
    pub fn from_cobrackets(
        dim: usize,
        cobrackets: &[(usize, AlternatingTrivector)],
    ) -> Result<Self, Error> {
        assert!(dim >= 1, "dimension must be positive");
        let mut map: BTreeMap<usize, AlternatingTrivector> = BTreeMap::new();
        for (l, value) in cobrackets {
            if *l < 1 || *l > dim {
                return Err(Error::IndexOutOfRange { index: *l, dim });
            }
            if value.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: value.dim(),
                });
            }
            match map.get(l) {
                Some(existing) => {
                    if existing != value {
                        return Err(Error::InconsistentCobracket { index: *l });
                    }
                }
                None => {
                    if !value.is_zero() {
                        map.insert(*l, value.clone());
                    }
                }
            }
        }
        Ok(ThreeLieCoalgebra {
            dim,
            cobrackets: map,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.cobrackets.is_empty()
    }

    /// Stored cobrackets, zero entries omitted.
    pub fn cobrackets(&self) -> impl Iterator<Item = (&usize, &AlternatingTrivector)> {
        self.cobrackets.iter()
    }

    /// The cobracket of basis vector `e_l`.
    pub fn cobracket_basis(&self, l: usize) -> AlternatingTrivector {
        assert!((1..=self.dim).contains(&l), "basis index out of range");
        self.cobrackets
            .get(&l)
            .cloned()
            .unwrap_or_else(|| AlternatingTrivector::zero(self.dim))
    }

    /// Cobracket constant: the coefficient of the canonical wedge
    /// `e_r ^ e_s ^ e_t` (`r < s < t`) in the cobracket of `e_l`.
    pub fn constant(&self, r: usize, s: usize, t: usize, l: usize) -> ExactScalar {
        match self.cobrackets.get(&l) {
            Some(v) => v.coefficient(&[r, s, t]),
            None => ExactScalar::zero(),
        }
    }

    /// Linear extension of the cobracket to coordinate vectors.
    pub fn cobracket(&self, x: &Vector) -> Result<AlternatingTrivector, Error> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.len(),
            });
        }
        let mut out = AlternatingTrivector::zero(self.dim);
        for (l, value) in &self.cobrackets {
            out.add_scaled(&x[l - 1], value);
        }
        Ok(out)
    }

    /// The raw order-5 tensor obtained by expanding the cobracket of `e_l`
    /// and applying the cobracket again to the last tensor factor.
    pub fn iterated_cobracket_tensor(&self, l: usize) -> DenseTensor<5> {
        let mut out = DenseTensor::zero(self.dim);
        let first = expand_wedge(&self.cobracket_basis(l));
        for (key, c) in first.iter() {
            let Some(inner) = self.cobrackets.get(&key[2]) else {
                continue;
            };
            for (ikey, d) in expand_wedge(inner).iter() {
                out.add_entry([key[0], key[1], ikey[0], ikey[1], ikey[2]], c * d);
            }
        }
        out
    }

    /// Checks the co-Jacobi identity on every basis vector. For each index
    /// the defect `(1 - w1 - w2 - w3)` of the iterated cobracket tensor is
    /// computed with the permutations acting by transpose; any nonzero
    /// defect is reported entry by entry.
    pub fn check_co_jacobi(&self) -> CoJacobiReport {
        let mut violations = Vec::new();
        for l in 1..=self.dim {
            let tensor = self.iterated_cobracket_tensor(l);
            if tensor.is_zero() {
                continue;
            }
            let mut defect = tensor.clone();
            for selector in 1..=3 {
                let term = apply_omega_adjoint(selector, &tensor)
                    .expect("selector in range");
                defect.sub_assign(&term);
            }
            if !defect.is_zero() {
                violations.push(CoJacobiViolation {
                    index: l,
                    defect: defect.iter().map(|(k, v)| (*k, v.clone())).collect(),
                });
            }
        }
        CoJacobiReport { violations }
    }

    /// `(support_dim, image_dim)`: the rank of the cobracket as a linear map
    /// (codimension of its kernel) and the dimension of the span of the
    /// basis cobrackets inside the wedge space. Both are invariant under
    /// pushforward along invertible maps.
    pub fn fingerprint(&self) -> (usize, usize) {
        let rows: Vec<Vector> = self.cobrackets.values().map(trivector_coordinates).collect();
        let image_dim = linalg::rank(&rows);
        // kernel of Delta = kernel of the coefficient matrix with columns
        // indexed by basis vectors; its rank equals image_dim
        let support_dim = image_dim;
        (support_dim, image_dim)
    }

    /// Basis cobracket images as coordinate vectors in the
    /// `C(dim, 3)`-dimensional wedge space.
    pub fn image_coordinates(&self) -> Vec<Vector> {
        self.cobrackets.values().map(trivector_coordinates).collect()
    }
}

/// Coordinates of a trivector in the canonical wedge basis, triples in
/// lexicographic order.
pub fn trivector_coordinates(t: &AlternatingTrivector) -> Vector {
    let dim = t.dim();
    let mut out = Vec::new();
    for i in 1..=dim {
        for j in (i + 1)..=dim {
            for k in (j + 1)..=dim {
                out.push(t.coefficient(&[i, j, k]));
            }
        }
    }
    out
}

impl std::fmt::Debug for ThreeLieCoalgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ThreeLieCoalgebra(dim {}", self.dim)?;
        for (l, value) in &self.cobrackets {
            write!(f, ", e{} -> {:?}", l, value)?;
        }
        write!(f, ")")
    }
}

/// Catalog/test helper: cobrackets as `(l, [(coefficient, (i, j, k))])`
/// with integer data, wedge triples in any index order.
#[allow(clippy::type_complexity)]
pub fn coalgebra_from_int_cobrackets(
    dim: usize,
    entries: &[(usize, &[(i64, (usize, usize, usize))])],
) -> ThreeLieCoalgebra {
    let list: Vec<(usize, AlternatingTrivector)> = entries
        .iter()
        .map(|(l, terms)| {
            let mut t = AlternatingTrivector::zero(dim);
            for (c, (i, j, k)) in terms.iter() {
                t.add_wedge(*i, *j, *k, ExactScalar::int(*c))
                    .expect("static cobracket table is well-formed");
            }
            (*l, t)
        })
        .collect();
    ThreeLieCoalgebra::from_cobrackets(dim, &list).expect("static cobracket table is well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::unit_vector;
    use crate::tensor::canonical_wedge;

    fn s(n: i64) -> ExactScalar {
        ExactScalar::int(n)
    }

    /// dim 3, e1 -> e1^e2^e3
    fn c_b() -> ThreeLieCoalgebra {
        coalgebra_from_int_cobrackets(3, &[(1, &[(1, (1, 2, 3))])])
    }

    #[test]
    fn construction_canonicalizes() {
        let c = coalgebra_from_int_cobrackets(4, &[(2, &[(1, (3, 1, 4))])]);
        assert_eq!(c.constant(1, 3, 4, 2), s(-1));

        let empty = ThreeLieCoalgebra::from_cobrackets(4, &[]).unwrap();
        assert!(empty.is_zero());
        assert!(empty.check_co_jacobi().is_pass());

        let err = ThreeLieCoalgebra::from_cobrackets(
            3,
            &[(5, AlternatingTrivector::zero(3))],
        );
        assert!(matches!(err, Err(Error::IndexOutOfRange { .. })));

        let err = ThreeLieCoalgebra::from_cobrackets(
            3,
            &[
                (1, canonical_wedge(3, 1, 2, 3, s(1)).unwrap()),
                (1, canonical_wedge(3, 1, 2, 3, s(2)).unwrap()),
            ],
        );
        assert!(matches!(err, Err(Error::InconsistentCobracket { .. })));
    }

    #[test]
    fn cobracket_linear_extension() {
        let c = c_b();
        let d1 = c.cobracket(&unit_vector(3, 1)).unwrap();
        assert_eq!(d1, canonical_wedge(3, 1, 2, 3, s(1)).unwrap());
        assert!(c.cobracket(&unit_vector(3, 2)).unwrap().is_zero());

        let x = vec![s(2), s(5), s(0)];
        assert_eq!(c.cobracket(&x).unwrap(), canonical_wedge(3, 1, 2, 3, s(2)).unwrap());

        assert!(c.cobracket(&unit_vector(4, 1)).is_err());
    }

    #[test]
    fn co_jacobi_on_small_catalog() {
        assert!(c_b().check_co_jacobi().is_pass());
        assert!(ThreeLieCoalgebra::zero(4).check_co_jacobi().is_pass());

        // dim 4, e1 -> e2^e3^e4, e2 -> e1^e3^e4
        let c_c1 = coalgebra_from_int_cobrackets(
            4,
            &[(1, &[(1, (2, 3, 4))]), (2, &[(1, (1, 3, 4))])],
        );
        assert!(c_c1.check_co_jacobi().is_pass());
    }

    #[test]
    fn co_jacobi_failure_carries_witnesses() {
        // dim 5, e1 -> e2^e3^e4, e4 -> e1^e2^e5: the dual bracket violates
        // the fundamental identity, so this must fail
        let c = coalgebra_from_int_cobrackets(
            5,
            &[(1, &[(1, (2, 3, 4))]), (4, &[(1, (1, 2, 5))])],
        );
        let report = c.check_co_jacobi();
        assert!(!report.is_pass());
        assert!(report.violations.iter().all(|v| !v.defect.is_empty()));
    }

    #[test]
    fn fingerprints() {
        assert_eq!(ThreeLieCoalgebra::zero(4).fingerprint(), (0, 0));
        assert_eq!(c_b().fingerprint(), (1, 1));

        // dim 4 with three independent images
        let c_d = coalgebra_from_int_cobrackets(
            4,
            &[
                (1, &[(1, (2, 3, 4))]),
                (2, &[(1, (1, 3, 4))]),
                (3, &[(1, (1, 2, 4))]),
            ],
        );
        assert_eq!(c_d.fingerprint(), (3, 3));
    }
}
