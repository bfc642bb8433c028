//! Dualization between 3-Lie algebras and 3-Lie coalgebras.
//!
//! With the unnormalized wedge convention the dual of either structure is
//! obtained by transposing constants literally: the bracket constants of an
//! algebra become the cobracket constants of the dual coalgebra on the dual
//! basis, and vice versa. Dualizing twice is the identity.

use crate::algebra::ThreeLieAlgebra;
use crate::coalgebra::ThreeLieCoalgebra;
use crate::linalg::zero_vector;
use crate::tensor::AlternatingTrivector;

/// The dual coalgebra on the dual basis: the cobracket of `e^l` is the sum
/// of `c^l_{ijk} e^i ^ e^j ^ e^k` over canonical triples.
///
/// The input need not satisfy the fundamental identity; the output satisfies
/// co-Jacobi exactly when it does.
pub fn dual_of_algebra(algebra: &ThreeLieAlgebra) -> ThreeLieCoalgebra {
    let dim = algebra.dim();
    let mut cobrackets: Vec<(usize, AlternatingTrivector)> = Vec::new();
    for l in 1..=dim {
        let mut t = AlternatingTrivector::zero(dim);
        for (key, value) in algebra.brackets() {
            t.add_wedge(key[0], key[1], key[2], value[l - 1].clone())
                .expect("stored keys are in range");
        }
        if !t.is_zero() {
            cobrackets.push((l, t));
        }
    }
    ThreeLieCoalgebra::from_cobrackets(dim, &cobrackets).expect("transposed constants are valid")
}

/// The dual algebra on the dual basis: the bracket of `(e^i, e^j, e^k)` has
/// `e^l`-coefficient equal to the coefficient of `e_i ^ e_j ^ e_k` in the
/// cobracket of `e_l`.
pub fn dual_of_coalgebra(coalgebra: &ThreeLieCoalgebra) -> ThreeLieAlgebra {
    let dim = coalgebra.dim();
    let mut brackets: Vec<((usize, usize, usize), Vec<_>)> = Vec::new();
    for i in 1..=dim {
        for j in (i + 1)..=dim {
            for k in (j + 1)..=dim {
                let mut value = zero_vector(dim);
                let mut nonzero = false;
                for l in 1..=dim {
                    let c = coalgebra.constant(i, j, k, l);
                    if !c.is_zero() {
                        nonzero = true;
                    }
                    value[l - 1] = c;
                }
                if nonzero {
                    brackets.push(((i, j, k), value));
                }
            }
        }
    }
    ThreeLieAlgebra::from_brackets(dim, &brackets).expect("transposed constants are valid")
}

/// Dualizes twice, identifying the double dual with the original space on
/// the given basis. Always returns the input algebra unchanged.
pub fn double_dual_roundtrip(algebra: &ThreeLieAlgebra) -> ThreeLieAlgebra {
    dual_of_coalgebra(&dual_of_algebra(algebra))
}

/// Coalgebra counterpart of [`double_dual_roundtrip`].
pub fn double_dual_roundtrip_coalgebra(coalgebra: &ThreeLieCoalgebra) -> ThreeLieCoalgebra {
    dual_of_algebra(&dual_of_coalgebra(coalgebra))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::algebra_from_int_brackets;
    use crate::coalgebra::coalgebra_from_int_cobrackets;
    use crate::scalar::ExactScalar;

    fn s(n: i64) -> ExactScalar {
        ExactScalar::int(n)
    }

    #[test]
    fn dual_of_single_bracket_algebra() {
        // dim 3, [e1,e2,e3] = e1 dualizes to e1 -> e1^e2^e3
        let a = algebra_from_int_brackets(3, &[((1, 2, 3), &[(1, 1)])]);
        let c = dual_of_algebra(&a);
        assert_eq!(c.constant(1, 2, 3, 1), s(1));
        assert_eq!(c.constant(1, 2, 3, 2), s(0));
    }

    #[test]
    fn dual_of_dim5_example() {
        // brackets (2,3,4)->e1, (3,4,5)->e3+2e2, (2,4,5)->e3, (1,4,5)->e1
        let a = algebra_from_int_brackets(
            5,
            &[
                ((2, 3, 4), &[(1, 1)]),
                ((3, 4, 5), &[(1, 3), (2, 2)]),
                ((2, 4, 5), &[(1, 3)]),
                ((1, 4, 5), &[(1, 1)]),
            ],
        );
        let c = dual_of_algebra(&a);
        // e1 -> e2^e3^e4 + e1^e4^e5
        assert_eq!(c.constant(2, 3, 4, 1), s(1));
        assert_eq!(c.constant(1, 4, 5, 1), s(1));
        // e2 -> 2 e3^e4^e5 (the coefficient is forced, not a free parameter)
        assert_eq!(c.constant(3, 4, 5, 2), s(2));
        // e3 -> e3^e4^e5 + e2^e4^e5
        assert_eq!(c.constant(3, 4, 5, 3), s(1));
        assert_eq!(c.constant(2, 4, 5, 3), s(1));
    }

    #[test]
    fn dual_of_coalgebra_transposes() {
        // e2 -> a e3^e1^e4, e3 -> e3^e1^e4 + e2^e1^e4 at a = 1
        let c = coalgebra_from_int_cobrackets(
            4,
            &[
                (2, &[(1, (3, 1, 4))]),
                (3, &[(1, (3, 1, 4)), (1, (2, 1, 4))]),
            ],
        );
        let a = dual_of_coalgebra(&c);
        // bracket(e3, e1, e4) = a e2 + e3 and bracket(e2, e1, e4) = e3
        let v = a.bracket_basis(3, 1, 4);
        assert_eq!(v, vec![s(0), s(1), s(1), s(0)]);
        let v = a.bracket_basis(2, 1, 4);
        assert_eq!(v, vec![s(0), s(0), s(1), s(0)]);

        let zero = ThreeLieCoalgebra::zero(4);
        assert!(dual_of_coalgebra(&zero).is_abelian());
    }

    #[test]
    fn double_dual_is_identity() {
        let a = algebra_from_int_brackets(
            4,
            &[((2, 3, 4), &[(1, 1)]), ((1, 3, 4), &[(1, 2)])],
        );
        assert_eq!(double_dual_roundtrip(&a), a);

        let c = coalgebra_from_int_cobrackets(4, &[(1, &[(3, (2, 3, 4))])]);
        assert_eq!(double_dual_roundtrip_coalgebra(&c), c);
    }
}
