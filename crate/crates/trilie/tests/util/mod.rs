//! Shared helpers for the integration suites: independent oracles for the
//! structural identities and deterministic random generators.
//!
//! The oracles here deliberately avoid the code paths of the checks they
//! validate. The bracket identity oracle works through raw order-5 tensors
//! and the printed factor permutations; the cobracket identity oracle pairs
//! the iterated cobracket tensor against permuted basis tensors, so the
//! permutations act through the pairing rather than through the transpose
//! action the implementation uses.

#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::Rng;

use trilie::algebra::ThreeLieAlgebra;
use trilie::coalgebra::ThreeLieCoalgebra;
use trilie::equivalence::LinearIso;
use trilie::linalg::{zero_vector, Matrix, Vector};
use trilie::scalar::ExactScalar;
use trilie::tensor::{
    apply_omega, canonical_triples, expand_wedge, pairing, DenseTensor,
};

pub fn s(n: i64) -> ExactScalar {
    ExactScalar::int(n)
}

/// All order-5 index tuples over `1..=dim`.
pub fn all_keys5(dim: usize) -> Vec<[usize; 5]> {
    let mut out = Vec::with_capacity(dim.pow(5));
    let mut key = [1usize; 5];
    loop {
        out.push(key);
        let mut slot = 5;
        loop {
            if slot == 0 {
                return out;
            }
            slot -= 1;
            key[slot] += 1;
            if key[slot] <= dim {
                break;
            }
            key[slot] = 1;
        }
    }
}

/// Literal expansion of the coordinate-free bracket identity: for every
/// basis 5-tuple, apply `1 - w1 - w2 - w3` to the basis tensor, contract the
/// last three factors with the bracket, then the remaining three. Zero
/// everywhere iff the identity holds.
pub fn fundamental_identity_oracle(algebra: &ThreeLieAlgebra) -> bool {
    let m = algebra.dim();
    for key in all_keys5(m) {
        let basis = DenseTensor::<5>::basis(m, key);
        let mut tensor = basis.clone();
        for selector in 1..=3 {
            tensor.sub_assign(&apply_omega(selector, &basis).expect("valid selector"));
        }
        if !contract_bracket_twice(algebra, &tensor).iter().all(ExactScalar::is_zero) {
            return false;
        }
    }
    true
}

/// `bracket(x1, x2, bracket(x3, x4, x5))` summed over the entries of an
/// order-5 tensor.
fn contract_bracket_twice(algebra: &ThreeLieAlgebra, tensor: &DenseTensor<5>) -> Vector {
    let m = algebra.dim();
    let mut out = zero_vector(m);
    for (key, coeff) in tensor.iter() {
        let inner = algebra.bracket_basis(key[2], key[3], key[4]);
        for (l, c) in inner.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let outer = algebra.bracket_basis(key[0], key[1], l + 1);
            for (slot, v) in out.iter_mut().enumerate() {
                *v += &(&(coeff * c) * &outer[slot]);
            }
        }
    }
    out
}

/// The iterated cobracket of each basis vector, built by literal map
/// composition on raw tensors: expand the cobracket, apply the cobracket to
/// the third factor of every term, expand again.
pub fn iterated_cobracket_by_composition(
    coalgebra: &ThreeLieCoalgebra,
    l: usize,
) -> DenseTensor<5> {
    let m = coalgebra.dim();
    let mut out = DenseTensor::zero(m);
    let first = expand_wedge(&coalgebra.cobracket_basis(l));
    for (key, c) in first.iter() {
        let inner = expand_wedge(&coalgebra.cobracket_basis(key[2]));
        for (ikey, d) in inner.iter() {
            out.add_entry([key[0], key[1], ikey[0], ikey[1], ikey[2]], c * d);
        }
    }
    out
}

/// Pairing-route oracle for the cobracket identity: the defect of the
/// iterated cobracket tensor must pair to zero against `(1 - w1 - w2 - w3)`
/// of every basis tensor, with the permutations acting on the plain-tensor
/// side through [`apply_omega`].
pub fn co_jacobi_pairing_oracle(coalgebra: &ThreeLieCoalgebra) -> bool {
    let m = coalgebra.dim();
    let keys = all_keys5(m);
    for l in 1..=m {
        let iterated = iterated_cobracket_by_composition(coalgebra, l);
        if iterated.is_zero() {
            continue;
        }
        for key in &keys {
            let basis = DenseTensor::<5>::basis(m, *key);
            let mut acc = pairing(&iterated, &basis).expect("same shape");
            for selector in 1..=3 {
                let permuted = apply_omega(selector, &basis).expect("valid selector");
                acc -= &pairing(&iterated, &permuted).expect("same shape");
            }
            if !acc.is_zero() {
                return false;
            }
        }
    }
    true
}

pub fn random_scalar(rng: &mut StdRng) -> ExactScalar {
    let numer = rng.gen_range(-3i64..=3);
    if rng.gen_bool(0.25) {
        ExactScalar::ratio(numer, 2)
    } else {
        ExactScalar::int(numer)
    }
}

fn random_sparse_vector(rng: &mut StdRng, dim: usize) -> Vector {
    let mut v = zero_vector(dim);
    for slot in v.iter_mut() {
        if rng.gen_bool(0.4) {
            *slot = random_scalar(rng);
        }
    }
    v
}

/// A random antisymmetric bracket table; no identity is imposed beyond the
/// storage invariant.
pub fn random_algebra(rng: &mut StdRng, dim: usize) -> ThreeLieAlgebra {
    let mut brackets = Vec::new();
    for key in canonical_triples(dim) {
        if rng.gen_bool(0.6) {
            brackets.push(((key[0], key[1], key[2]), random_sparse_vector(rng, dim)));
        }
    }
    ThreeLieAlgebra::from_brackets(dim, &brackets).expect("canonical input")
}

/// A random cobracket table in canonical form.
pub fn random_coalgebra(rng: &mut StdRng, dim: usize) -> ThreeLieCoalgebra {
    let mut cobrackets = Vec::new();
    for l in 1..=dim {
        if !rng.gen_bool(0.6) {
            continue;
        }
        let mut t = trilie::tensor::AlternatingTrivector::zero(dim);
        for key in canonical_triples(dim) {
            if rng.gen_bool(0.4) {
                t.add_wedge(key[0], key[1], key[2], random_scalar(rng))
                    .expect("in range");
            }
        }
        if !t.is_zero() {
            cobrackets.push((l, t));
        }
    }
    ThreeLieCoalgebra::from_cobrackets(dim, &cobrackets).expect("canonical input")
}

/// A uniformly random invertible map with small integer entries.
pub fn random_invertible(rng: &mut StdRng, dim: usize) -> LinearIso {
    loop {
        let rows: Vec<Vec<ExactScalar>> = (0..dim)
            .map(|_| (0..dim).map(|_| s(rng.gen_range(-2i64..=2))).collect())
            .collect();
        let m = Matrix::from_rows(rows).expect("square");
        if let Ok(iso) = LinearIso::new(m) {
            return iso;
        }
    }
}

/// A random signed permutation map.
pub fn random_signed_permutation(rng: &mut StdRng, dim: usize) -> LinearIso {
    let mut rows: Vec<usize> = (0..dim).collect();
    for i in (1..dim).rev() {
        let j = rng.gen_range(0..=i);
        rows.swap(i, j);
    }
    let mut m = Matrix::zero(dim);
    for (col, &row) in rows.iter().enumerate() {
        *m.at_mut(row, col) = if rng.gen_bool(0.5) { s(1) } else { s(-1) };
    }
    LinearIso::new(m).expect("signed permutations are invertible")
}

/// A random algebra that satisfies the bracket identity: a catalog algebra
/// of the requested dimension pushed through a random invertible map.
pub fn random_identity_preserving_algebra(rng: &mut StdRng, dim: usize) -> ThreeLieAlgebra {
    let base: ThreeLieAlgebra = match dim {
        1 | 2 => ThreeLieAlgebra::abelian(dim),
        3 => {
            let names = ["abelian", "L_b"];
            catalog_algebra(names[rng.gen_range(0..names.len())])
        }
        4 => {
            let names = ["L_a4", "L_b1", "L_b2", "L_c1", "L_c3", "L_d", "L_e"];
            catalog_algebra(names[rng.gen_range(0..names.len())])
        }
        _ => panic!("unsupported dimension {dim}"),
    };
    let f = random_invertible(rng, dim);
    trilie::equivalence::push_algebra(&f, &base).expect("dims agree")
}

pub fn catalog_algebra(name: &str) -> ThreeLieAlgebra {
    match trilie::catalog::get(name, None).expect("known name").object {
        trilie::catalog::CatalogObject::Algebra(a) => a,
        _ => panic!("{name} is not an algebra"),
    }
}

pub fn catalog_coalgebra(name: &str) -> ThreeLieCoalgebra {
    match trilie::catalog::get(name, None).expect("known name").object {
        trilie::catalog::CatalogObject::Coalgebra(c) => c,
        _ => panic!("{name} is not a coalgebra"),
    }
}

pub fn catalog_bialgebra(name: &str) -> trilie::bialgebra::ThreeLieBialgebra {
    match trilie::catalog::get(name, None).expect("known name").object {
        trilie::catalog::CatalogObject::Bialgebra(b) => b,
        _ => panic!("{name} is not a bialgebra"),
    }
}

pub fn catalog_iso(name: &str) -> LinearIso {
    match trilie::catalog::get(name, None).expect("known name").object {
        trilie::catalog::CatalogObject::Iso(f) => f,
        _ => panic!("{name} is not a map"),
    }
}
