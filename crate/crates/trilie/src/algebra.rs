//! Finite-dimensional 3-Lie algebras given by structure constants: bracket
//! evaluation, the fundamental (Jacobi) identity check, and the two
//! isomorphism-invariant dimensions used for fingerprinting.

use std::collections::BTreeMap;

use crate::linalg::{self, vector_add_scaled, vector_is_zero, zero_vector, Vector};
use crate::report::{FundamentalIdentityReport, FundamentalIdentityViolation};
use crate::scalar::ExactScalar;
use crate::tensor::sort_triple;
use crate::Error;

/// A trilinear fully antisymmetric bracket on an `m`-dimensional space,
/// stored as a map from increasing basis triples `i < j < k` to the
/// coefficient vector of the bracket value. Skew-symmetry is a storage
/// invariant: constants on non-canonical index orders exist only through the
/// sign rule.
#[derive(Clone, PartialEq, Eq)]
pub struct ThreeLieAlgebra {
    dim: usize,
    constants: BTreeMap<[usize; 3], Vector>,
}

impl ThreeLieAlgebra {
    /// The abelian algebra: every bracket is zero.
    pub fn abelian(dim: usize) -> Self {
        assert!(dim >= 1, "dimension must be positive");
        ThreeLieAlgebra {
            dim,
            constants: BTreeMap::new(),
        }
    }

    /// Builds an algebra from a list of brackets `((i, j, k), value)`.
    ///
    /// Triples are stored on their sorted form with the permutation sign
    /// absorbed into the value. A triple with a repeated index must map to
    /// zero. The same unordered triple may appear more than once only if all
    /// occurrences agree after sign normalization.
    pub fn from_brackets(
        dim: usize,
        brackets: &[((usize, usize, usize), Vector)],
    ) -> Result<Self, Error> {
        assert!(dim >= 1, "dimension must be positive");
        let mut constants: BTreeMap<[usize; 3], Vector> = BTreeMap::new();
        for ((i, j, k), value) in brackets {
            for idx in [*i, *j, *k] {
                if idx < 1 || idx > dim {
                    return Err(Error::IndexOutOfRange { index: idx, dim });
                }
            }
            if value.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: value.len(),
                });
            }
            let Some((key, negative)) = sort_triple(*i, *j, *k) else {
                if vector_is_zero(value) {
                    continue;
                }
                return Err(Error::RepeatedIndexBracket {
                    triple: (*i, *j, *k),
                });
            };
            let signed = if negative {
                linalg::vector_neg(value)
            } else {
                value.clone()
            };
            match constants.get(&key) {
                Some(existing) => {
                    if existing != &signed {
                        return Err(Error::InconsistentBracket {
                            triple: (key[0], key[1], key[2]),
                        });
                    }
                }
                None => {
                    if !vector_is_zero(&signed) {
                        constants.insert(key, signed);
                    }
                }
            }
        }
        Ok(ThreeLieAlgebra { dim, constants })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_abelian(&self) -> bool {
        self.constants.is_empty()
    }

    /// Stored brackets on canonical triples, zero values omitted.
    pub fn brackets(&self) -> impl Iterator<Item = (&[usize; 3], &Vector)> {
        self.constants.iter()
    }

    /// Structure constant `c^l_{ijk}` for arbitrary index order.
    pub fn constant(&self, i: usize, j: usize, k: usize, l: usize) -> ExactScalar {
        self.bracket_component(i, j, k, |v| v[l - 1].clone())
            .unwrap_or_else(ExactScalar::zero)
    }

    fn bracket_component<T>(
        &self,
        i: usize,
        j: usize,
        k: usize,
        f: impl FnOnce(&Vector) -> T,
    ) -> Option<T> {
        let (key, negative) = sort_triple(i, j, k)?;
        let value = self.constants.get(&key)?;
        if negative {
            Some(f(&linalg::vector_neg(value)))
        } else {
            Some(f(value))
        }
    }

    /// Bracket of three basis vectors, any index order.
    pub fn bracket_basis(&self, i: usize, j: usize, k: usize) -> Vector {
        assert!(
            [i, j, k].iter().all(|&x| x >= 1 && x <= self.dim),
            "basis index out of range"
        );
        self.bracket_component(i, j, k, Clone::clone)
            .unwrap_or_else(|| zero_vector(self.dim))
    }

    /// Trilinear, fully antisymmetric evaluation on coordinate vectors.
    pub fn bracket(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector, Error> {
        for v in [x, y, z] {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: v.len(),
                });
            }
        }
        let mut out = zero_vector(self.dim);
        for (key, value) in &self.constants {
            let [i, j, k] = [key[0] - 1, key[1] - 1, key[2] - 1];
            // coefficient of e_i ^ e_j ^ e_k in x ^ y ^ z
            let minor = &x[i] * &(&y[j] * &z[k] - &y[k] * &z[j])
                - &y[i] * &(&x[j] * &z[k] - &x[k] * &z[j])
                + &z[i] * &(&x[j] * &y[k] - &x[k] * &y[j]);
            vector_add_scaled(&mut out, &minor, value);
        }
        Ok(out)
    }

    /// Checks the fundamental identity on every basis 5-tuple
    /// `(u, v, x, y, z)` with `u < v` and `x < y < z`, which is sufficient by
    /// multilinearity and antisymmetry. Reports each failing tuple and
    /// output component with both sides.
    pub fn check_fundamental_identity(&self) -> FundamentalIdentityReport {
        let mut violations = Vec::new();
        let m = self.dim;
        for u in 1..=m {
            for v in (u + 1)..=m {
                for x in 1..=m {
                    for y in (x + 1)..=m {
                        for z in (y + 1)..=m {
                            let lhs = self.nested_bracket(u, v, x, y, z);
                            let mut rhs = self.nested_bracket(x, y, u, v, z);
                            let t = self.nested_bracket(y, z, u, v, x);
                            linalg::vector_add_assign(&mut rhs, &t);
                            let t = self.nested_bracket(z, x, u, v, y);
                            linalg::vector_add_assign(&mut rhs, &t);
                            if lhs != rhs {
                                for l in 1..=m {
                                    if lhs[l - 1] != rhs[l - 1] {
                                        violations.push(FundamentalIdentityViolation {
                                            tuple: [u, v, x, y, z],
                                            component: l,
                                            lhs: lhs[l - 1].clone(),
                                            rhs: rhs[l - 1].clone(),
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        FundamentalIdentityReport { violations }
    }

    /// `bracket(e_a, e_b, bracket(e_c, e_d, e_e))` on basis indices.
    fn nested_bracket(&self, a: usize, b: usize, c: usize, d: usize, e: usize) -> Vector {
        let inner = self.bracket_basis(c, d, e);
        let mut out = zero_vector(self.dim);
        for (t, coeff) in inner.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let outer = self.bracket_basis(a, b, t + 1);
            linalg::vector_add_scaled(&mut out, coeff, &outer);
        }
        out
    }

    /// Dimension of the span of all basis brackets.
    pub fn derived_dim(&self) -> usize {
        let vectors: Vec<Vector> = self.constants.values().cloned().collect();
        linalg::rank(&vectors)
    }

    /// Dimension of `{x : bracket(x, e_j, e_k) = 0 for all basis j, k}`,
    /// computed as the kernel dimension of the induced linear map.
    pub fn center_dim(&self) -> usize {
        // rows of the map x -> (bracket(x, e_j, e_k))_{j<k}; column i holds
        // the image of e_i
        let m = self.dim;
        let mut columns: Vec<Vector> = Vec::with_capacity(m);
        for i in 1..=m {
            let mut col = Vec::new();
            for j in 1..=m {
                for k in (j + 1)..=m {
                    col.extend(self.bracket_basis(i, j, k));
                }
            }
            columns.push(col);
        }
        m - linalg::rank(&columns)
    }

    /// Basis of the derived subalgebra as coordinate vectors.
    pub fn derived_subalgebra_basis(&self) -> Vec<Vector> {
        let mut basis: Vec<Vector> = Vec::new();
        for value in self.constants.values() {
            let mut candidate = basis.clone();
            candidate.push(value.clone());
            if linalg::rank(&candidate) > basis.len() {
                basis.push(value.clone());
            }
        }
        basis
    }
}

impl std::fmt::Debug for ThreeLieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ThreeLieAlgebra(dim {}", self.dim)?;
        for (key, value) in &self.constants {
            let terms: Vec<String> = value
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(l, c)| format!("{}*e{}", c, l + 1))
                .collect();
            write!(f, ", [{},{},{}] -> {}", key[0], key[1], key[2], terms.join(" + "))?;
        }
        write!(f, ")")
    }
}

/// Convenience constructor used heavily by the catalog and tests: brackets
/// given as `((i, j, k), [(coefficient, component)])` with integer data.
#[allow(clippy::type_complexity)]
pub fn algebra_from_int_brackets(
    dim: usize,
    brackets: &[((usize, usize, usize), &[(i64, usize)])],
) -> ThreeLieAlgebra {
    let list: Vec<((usize, usize, usize), Vector)> = brackets
        .iter()
        .map(|(triple, terms)| {
            let mut v = zero_vector(dim);
            for (c, l) in terms.iter() {
                v[l - 1] += &ExactScalar::int(*c);
            }
            (*triple, v)
        })
        .collect();
    ThreeLieAlgebra::from_brackets(dim, &list).expect("static bracket table is well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::unit_vector;

    fn s(n: i64) -> ExactScalar {
        ExactScalar::int(n)
    }

    /// dim 3, bracket(e1,e2,e3) = e1
    fn l_b() -> ThreeLieAlgebra {
        algebra_from_int_brackets(3, &[((1, 2, 3), &[(1, 1)])])
    }

    /// dim 4, bracket(e2,e3,e4) = e1, bracket(e1,e3,e4) = e2
    fn l_c1() -> ThreeLieAlgebra {
        algebra_from_int_brackets(4, &[((2, 3, 4), &[(1, 1)]), ((1, 3, 4), &[(1, 2)])])
    }

    #[test]
    fn from_brackets_normalizes_sign() {
        let a = ThreeLieAlgebra::from_brackets(4, &[((3, 2, 4), unit_vector(4, 1))]).unwrap();
        assert_eq!(a.bracket_basis(2, 3, 4), linalg::vector_neg(&unit_vector(4, 1)));
        assert_eq!(a.constant(2, 3, 4, 1), s(-1));
        assert_eq!(a.constant(3, 2, 4, 1), s(1));
    }

    #[test]
    fn from_brackets_rejects_bad_input() {
        let err = ThreeLieAlgebra::from_brackets(4, &[((1, 1, 2), unit_vector(4, 3))]);
        assert!(matches!(err, Err(Error::RepeatedIndexBracket { .. })));

        // zero on a repeated triple is fine
        assert!(ThreeLieAlgebra::from_brackets(4, &[((1, 1, 2), zero_vector(4))]).is_ok());

        let err = ThreeLieAlgebra::from_brackets(
            3,
            &[
                ((1, 2, 3), unit_vector(3, 1)),
                ((2, 1, 3), unit_vector(3, 1)),
            ],
        );
        assert!(matches!(err, Err(Error::InconsistentBracket { .. })));

        // consistent duplicate is accepted
        let ok = ThreeLieAlgebra::from_brackets(
            3,
            &[
                ((1, 2, 3), unit_vector(3, 1)),
                ((2, 1, 3), linalg::vector_neg(&unit_vector(3, 1))),
            ],
        );
        assert!(ok.is_ok());

        let err = ThreeLieAlgebra::from_brackets(3, &[((1, 2, 4), unit_vector(3, 1))]);
        assert!(matches!(err, Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn bracket_evaluation() {
        let a = l_c1();
        assert_eq!(a.bracket_basis(2, 3, 4), unit_vector(4, 1));

        // antisymmetry kills repeated arguments
        let x = vec![s(1), s(2), s(-1), s(3)];
        let y = vec![s(0), s(1), s(1), s(0)];
        assert!(vector_is_zero(&a.bracket(&x, &x, &y).unwrap()));

        // trilinear expansion on L_b
        let b = l_b();
        let u = vec![s(2), s(1), s(0)];
        let out = b
            .bracket(&u, &unit_vector(3, 2), &unit_vector(3, 3))
            .unwrap();
        assert_eq!(out, vec![s(2), s(0), s(0)]);

        assert!(b.bracket(&x, &y, &y).is_err());
    }

    #[test]
    fn fundamental_identity_catalog_and_counterexample() {
        assert!(l_b().check_fundamental_identity().is_pass());
        assert!(l_c1().check_fundamental_identity().is_pass());
        assert!(ThreeLieAlgebra::abelian(4).check_fundamental_identity().is_pass());

        // L_c1 with an extra bracket (1,2,3) -> e1 breaks the identity
        let bad = algebra_from_int_brackets(
            4,
            &[
                ((2, 3, 4), &[(1, 1)]),
                ((1, 3, 4), &[(1, 2)]),
                ((1, 2, 3), &[(1, 1)]),
            ],
        );
        let report = bad.check_fundamental_identity();
        assert!(!report.is_pass());
        let witness = &report.violations[0];
        assert_ne!(witness.lhs, witness.rhs);
    }

    #[test]
    fn derived_and_center_dimensions() {
        let abelian = ThreeLieAlgebra::abelian(4);
        assert_eq!(abelian.derived_dim(), 0);
        assert_eq!(abelian.center_dim(), 4);

        let b = l_b();
        assert_eq!(b.derived_dim(), 1);
        assert_eq!(b.center_dim(), 0);

        // dim 4 algebra with all four brackets spans everything
        let e = algebra_from_int_brackets(
            4,
            &[
                ((2, 3, 4), &[(1, 1)]),
                ((1, 3, 4), &[(1, 2)]),
                ((1, 2, 4), &[(1, 3)]),
                ((1, 2, 3), &[(1, 4)]),
            ],
        );
        assert_eq!(e.derived_dim(), 4);
    }
}
