//! Isomorphisms and equivalences: pushforward of algebras and coalgebras
//! along invertible linear maps, verification against supplied maps, dual
//! maps, invariant fingerprints, and bounded witness search over signed
//! permutations and small coefficient grids.
//!
//! Search never decides inequivalence. The verdict of [`decide_equivalence`]
//! distinguishes `Equivalent` (witness in hand), `Inequivalent` (an
//! invariant fingerprint component differs), and `Unknown` (no witness in
//! the searched family); the last is evidence, not proof.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::algebra::ThreeLieAlgebra;
use crate::bialgebra::ThreeLieBialgebra;
use crate::coalgebra::{trivector_coordinates, ThreeLieCoalgebra};
use crate::linalg::{self, Matrix, Vector};
use crate::scalar::ExactScalar;
use crate::tensor::{canonical_triples, wedge_of_vectors, AlternatingTrivector};
use crate::Error;

/// An invertible linear map stored by its matrix: column `j` holds the image
/// of `e_{j+1}`. Invertibility is checked at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearIso {
    matrix: Matrix,
}

impl LinearIso {
    pub fn new(matrix: Matrix) -> Result<Self, Error> {
        if matrix.determinant().is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(LinearIso { matrix })
    }

    /// Builds a map from the images of the basis vectors.
    pub fn from_images(images: &[Vector]) -> Result<Self, Error> {
        LinearIso::new(Matrix::from_columns(images)?)
    }

    pub fn identity(dim: usize) -> Self {
        LinearIso {
            matrix: Matrix::identity(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        self.matrix.mul_vector(v)
    }

    pub fn inverse(&self) -> LinearIso {
        LinearIso {
            matrix: self.matrix.inverse().expect("constructed invertible"),
        }
    }

    /// `self` after `other`: the composite `x -> self(other(x))`.
    pub fn compose(&self, other: &LinearIso) -> LinearIso {
        LinearIso {
            matrix: self.matrix.mul_matrix(&other.matrix),
        }
    }
}

/// The dual map on dual bases: the transpose matrix. When `f` is a
/// coalgebra isomorphism `C1 -> C2`, the dual map is an algebra isomorphism
/// `dual(C2) -> dual(C1)`.
pub fn dual_iso(f: &LinearIso) -> LinearIso {
    LinearIso {
        matrix: f.matrix().transpose(),
    }
}

/// The unique algebra making `f` an algebra isomorphism out of `algebra`:
/// brackets are conjugated through `f`.
pub fn push_algebra(f: &LinearIso, algebra: &ThreeLieAlgebra) -> Result<ThreeLieAlgebra, Error> {
    let dim = algebra.dim();
    if f.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: f.dim(),
        });
    }
    let inv = f.inverse();
    let mut brackets = Vec::new();
    for key in canonical_triples(dim) {
        let gi = inv.matrix().column(key[0] - 1);
        let gj = inv.matrix().column(key[1] - 1);
        let gk = inv.matrix().column(key[2] - 1);
        let value = f.apply(&algebra.bracket(&gi, &gj, &gk)?);
        if !linalg::vector_is_zero(&value) {
            brackets.push(((key[0], key[1], key[2]), value));
        }
    }
    ThreeLieAlgebra::from_brackets(dim, &brackets)
}

/// The unique coalgebra making `f` a coalgebra isomorphism out of
/// `coalgebra`: cobrackets are conjugated through `f`, with the triple
/// tensor power of `f` acting on wedges.
pub fn push_coalgebra(
    f: &LinearIso,
    coalgebra: &ThreeLieCoalgebra,
) -> Result<ThreeLieCoalgebra, Error> {
    let dim = coalgebra.dim();
    if f.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: f.dim(),
        });
    }
    let inv = f.inverse();
    // (f (x) f (x) f) applied to each basis cobracket
    let mut pushed_images: Vec<AlternatingTrivector> = Vec::with_capacity(dim);
    for p in 1..=dim {
        let mut acc = AlternatingTrivector::zero(dim);
        for (key, c) in coalgebra.cobracket_basis(p).iter() {
            let w = wedge_of_vectors(
                &f.matrix().column(key[0] - 1),
                &f.matrix().column(key[1] - 1),
                &f.matrix().column(key[2] - 1),
            );
            acc.add_scaled(c, &w);
        }
        pushed_images.push(acc);
    }
    let mut cobrackets = Vec::new();
    for l in 1..=dim {
        let x = inv.matrix().column(l - 1);
        let mut acc = AlternatingTrivector::zero(dim);
        for (p, image) in pushed_images.iter().enumerate() {
            acc.add_scaled(&x[p], image);
        }
        if !acc.is_zero() {
            cobrackets.push((l, acc));
        }
    }
    ThreeLieCoalgebra::from_cobrackets(dim, &cobrackets)
}

/// True iff `f` is an algebra isomorphism from `a1` onto `a2`.
pub fn verify_algebra_iso(
    f: &LinearIso,
    a1: &ThreeLieAlgebra,
    a2: &ThreeLieAlgebra,
) -> Result<bool, Error> {
    Ok(&push_algebra(f, a1)? == a2)
}

/// True iff `f` is a coalgebra isomorphism from `c1` onto `c2`.
pub fn verify_coalgebra_iso(
    f: &LinearIso,
    c1: &ThreeLieCoalgebra,
    c2: &ThreeLieCoalgebra,
) -> Result<bool, Error> {
    Ok(&push_coalgebra(f, c1)? == c2)
}

/// True iff `f` is simultaneously an algebra and a coalgebra isomorphism
/// from `b1` onto `b2`.
pub fn verify_equivalence(
    f: &LinearIso,
    b1: &ThreeLieBialgebra,
    b2: &ThreeLieBialgebra,
) -> Result<bool, Error> {
    if b1.dim() != b2.dim() {
        return Err(Error::DimensionMismatch {
            expected: b1.dim(),
            found: b2.dim(),
        });
    }
    Ok(verify_algebra_iso(f, b1.algebra(), b2.algebra())?
        && verify_coalgebra_iso(f, b1.coalgebra(), b2.coalgebra())?)
}

/// Invariant fingerprint of a bialgebra. Equal fingerprints are necessary
/// (not sufficient) for equivalence.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Fingerprint {
    pub derived_dim: usize,
    pub center_dim: usize,
    pub support_dim: usize,
    pub image_dim: usize,
    /// Dimension of the intersection of the cobracket image with the third
    /// wedge power of the derived subalgebra.
    pub image_in_derived_wedge_dim: usize,
}

impl Fingerprint {
    pub fn components(&self) -> [(&'static str, usize); 5] {
        [
            ("derived_dim", self.derived_dim),
            ("center_dim", self.center_dim),
            ("support_dim", self.support_dim),
            ("image_dim", self.image_dim),
            ("image_in_derived_wedge_dim", self.image_in_derived_wedge_dim),
        ]
    }

    /// First differing component between two fingerprints, if any.
    pub fn first_mismatch(&self, other: &Fingerprint) -> Option<(&'static str, usize, usize)> {
        self.components()
            .iter()
            .zip(other.components())
            .find(|(a, b)| a.1 != b.1)
            .map(|(a, b)| (a.0, a.1, b.1))
    }
}

impl std::fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({}, {}, {}, {}, {})",
            self.derived_dim,
            self.center_dim,
            self.support_dim,
            self.image_dim,
            self.image_in_derived_wedge_dim
        )
    }
}

pub fn fingerprint(b: &ThreeLieBialgebra) -> Fingerprint {
    let (support_dim, image_dim) = b.coalgebra().fingerprint();
    let derived = b.algebra().derived_subalgebra_basis();
    let image_in_derived_wedge_dim = if derived.len() < 3 {
        0
    } else {
        let mut wedges: Vec<Vector> = Vec::new();
        for i in 0..derived.len() {
            for j in (i + 1)..derived.len() {
                for k in (j + 1)..derived.len() {
                    let w = wedge_of_vectors(&derived[i], &derived[j], &derived[k]);
                    wedges.push(trivector_coordinates(&w));
                }
            }
        }
        linalg::intersection_dim(&b.coalgebra().image_coordinates(), &wedges)
    };
    Fingerprint {
        derived_dim: b.algebra().derived_dim(),
        center_dim: b.algebra().center_dim(),
        support_dim,
        image_dim,
        image_in_derived_wedge_dim,
    }
}

/// Fingerprint of a bare algebra: `(derived_dim, center_dim)`.
pub fn algebra_fingerprint(a: &ThreeLieAlgebra) -> [(&'static str, usize); 2] {
    [
        ("derived_dim", a.derived_dim()),
        ("center_dim", a.center_dim()),
    ]
}

/// Fingerprint of a bare coalgebra: `(support_dim, image_dim)`.
pub fn coalgebra_fingerprint(c: &ThreeLieCoalgebra) -> [(&'static str, usize); 2] {
    let (support_dim, image_dim) = c.fingerprint();
    [("support_dim", support_dim), ("image_dim", image_dim)]
}

/// Families of candidate matrices for bounded witness search.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SearchFamily {
    /// Matrices with exactly one entry of -1 or 1 in every row and column.
    SignedPermutations,
    /// All matrices with entries in {-1, 0, 1}.
    GridSmall,
    /// All matrices with entries in {-2, -1, 0, 1, 2}.
    GridWide,
}

impl SearchFamily {
    fn grid_values(&self) -> Option<&'static [i64]> {
        match self {
            SearchFamily::SignedPermutations => None,
            SearchFamily::GridSmall => Some(&[-1, 0, 1]),
            SearchFamily::GridWide => Some(&[-2, -1, 0, 1, 2]),
        }
    }

    /// Number of candidates at the given dimension.
    fn candidate_count(&self, dim: usize) -> u128 {
        match self.grid_values() {
            Some(values) => (values.len() as u128).pow((dim * dim) as u32),
            None => {
                let fact: u128 = (1..=dim as u128).product();
                fact << dim
            }
        }
    }

    /// Decodes candidate `index` into a row-major integer matrix.
    /// Iteration order is lexicographic: for grids, over matrix entries read
    /// row-major with values in the listed ascending order; for signed
    /// permutations, over permutation words and then sign masks (bit `j`
    /// set negates column `j`).
    fn candidate(&self, dim: usize, index: u128, out: &mut [i64]) {
        out.fill(0);
        match self.grid_values() {
            Some(values) => {
                let base = values.len() as u128;
                let mut rem = index;
                for slot in (0..dim * dim).rev() {
                    out[slot] = values[(rem % base) as usize];
                    rem /= base;
                }
            }
            None => {
                let mask = (index & ((1u128 << dim) - 1)) as u64;
                let mut perm_index = index >> dim;
                // factorial number system gives the lexicographic word
                let mut available: Vec<usize> = (0..dim).collect();
                for col in 0..dim {
                    let fact: u128 = (1..=(dim - 1 - col) as u128).product();
                    let digit = (perm_index / fact) as usize;
                    perm_index %= fact;
                    let row = available.remove(digit);
                    let sign = if mask & (1 << col) != 0 { -1 } else { 1 };
                    out[row * dim + col] = sign;
                }
            }
        }
    }
}

/// What a candidate map must carry onto what.
enum PairData<'a> {
    Algebras(&'a ThreeLieAlgebra, &'a ThreeLieAlgebra),
    Coalgebras(&'a ThreeLieCoalgebra, &'a ThreeLieCoalgebra),
    Bialgebras(&'a ThreeLieBialgebra, &'a ThreeLieBialgebra),
}

impl<'a> PairData<'a> {
    fn dims(&self) -> (usize, usize) {
        match self {
            PairData::Algebras(a, b) => (a.dim(), b.dim()),
            PairData::Coalgebras(a, b) => (a.dim(), b.dim()),
            PairData::Bialgebras(a, b) => (a.dim(), b.dim()),
        }
    }

    fn algebras(&self) -> Option<(&ThreeLieAlgebra, &ThreeLieAlgebra)> {
        match self {
            PairData::Algebras(a, b) => Some((a, b)),
            PairData::Bialgebras(a, b) => Some((a.algebra(), b.algebra())),
            PairData::Coalgebras(..) => None,
        }
    }

    fn coalgebras(&self) -> Option<(&ThreeLieCoalgebra, &ThreeLieCoalgebra)> {
        match self {
            PairData::Coalgebras(a, b) => Some((a, b)),
            PairData::Bialgebras(a, b) => Some((a.coalgebra(), b.coalgebra())),
            PairData::Algebras(..) => None,
        }
    }
}

/// Integer-scaled copy of a pair of objects for the fast candidate
/// rejection loop. All structure constants are multiplied by their least
/// common denominator, which preserves every morphism equation.
#[allow(clippy::type_complexity)]
struct IntPair {
    dim: usize,
    triples: Vec<[usize; 3]>,
    /// bracket value vectors per canonical triple (dense, len = dim)
    alg: Option<(Vec<Vec<i128>>, Vec<Vec<i128>>)>,
    /// wedge coordinate vectors per basis index (dense, len = #triples)
    coalg: Option<(Vec<Vec<i128>>, Vec<Vec<i128>>)>,
    /// integer row-echelon basis of the derived subalgebra of the target
    /// algebra, used as a cheap necessary-condition prefilter when it is a
    /// proper subspace
    target_derived_rref: Option<Vec<Vec<i128>>>,
}

fn scalar_to_scaled_i128(x: &ExactScalar, scale: &BigInt) -> Option<i128> {
    let scaled = x.numerator() * (scale / x.denominator());
    scaled.to_i128()
}

fn common_denominator<'a>(scalars: impl Iterator<Item = &'a ExactScalar>) -> BigInt {
    let mut lcm = BigInt::one();
    for s in scalars {
        lcm = lcm.lcm(s.denominator());
    }
    lcm.abs()
}

impl IntPair {
    fn try_new(pair: &PairData<'_>) -> Option<IntPair> {
        let dim = pair.dims().0;
        let triples = canonical_triples(dim);
        let mut all_scalars: Vec<ExactScalar> = Vec::new();
        if let Some((a1, a2)) = pair.algebras() {
            for (_, v) in a1.brackets().chain(a2.brackets()) {
                all_scalars.extend(v.iter().cloned());
            }
        }
        if let Some((c1, c2)) = pair.coalgebras() {
            for (_, t) in c1.cobrackets().chain(c2.cobrackets()) {
                all_scalars.extend(t.iter().map(|(_, c)| c.clone()));
            }
        }
        let scale = common_denominator(all_scalars.iter());

        let scaled_algebra = |a: &ThreeLieAlgebra| -> Option<Vec<Vec<i128>>> {
            let mut out = vec![vec![0i128; dim]; triples.len()];
            for (ti, key) in triples.iter().enumerate() {
                for l in 1..=dim {
                    let c = a.constant(key[0], key[1], key[2], l);
                    out[ti][l - 1] = scalar_to_scaled_i128(&c, &scale)?;
                }
            }
            Some(out)
        };
        let scaled_coalgebra = |c: &ThreeLieCoalgebra| -> Option<Vec<Vec<i128>>> {
            let mut out = vec![vec![0i128; triples.len()]; dim];
            for l in 1..=dim {
                for (ti, key) in triples.iter().enumerate() {
                    let v = c.constant(key[0], key[1], key[2], l);
                    out[l - 1][ti] = scalar_to_scaled_i128(&v, &scale)?;
                }
            }
            Some(out)
        };

        let alg = match pair.algebras() {
            Some((a1, a2)) => Some((scaled_algebra(a1)?, scaled_algebra(a2)?)),
            None => None,
        };
        let coalg = match pair.coalgebras() {
            Some((c1, c2)) => Some((scaled_coalgebra(c1)?, scaled_coalgebra(c2)?)),
            None => None,
        };

        let target_derived_rref = pair.algebras().and_then(|(_, a2)| {
            let basis = a2.derived_subalgebra_basis();
            if basis.is_empty() || basis.len() >= dim {
                return None;
            }
            let mut rows: Vec<Vec<i128>> = Vec::new();
            for v in &basis {
                let denom = common_denominator(v.iter());
                let row: Option<Vec<i128>> =
                    v.iter().map(|x| scalar_to_scaled_i128(x, &denom)).collect();
                rows.push(row?);
            }
            Some(integer_row_echelon(rows))
        });

        Some(IntPair {
            dim,
            triples,
            alg,
            coalg,
            target_derived_rref,
        })
    }

    /// Full candidate check: morphism conditions on both structures plus
    /// invertibility. `f` is row-major, entry `(r, c)` at `f[r * dim + c]`.
    fn candidate_ok(&self, f: &[i64], scratch: &mut IntScratch) -> bool {
        let m = self.dim;
        if let Some((alg1, alg2)) = &self.alg {
            // prefilter: images of source bracket values must stay inside
            // the derived subalgebra of the target
            if let Some(rref) = &self.target_derived_rref {
                for v in alg1.iter().filter(|v| v.iter().any(|&x| x != 0)) {
                    for (r, slot) in scratch.vec_a.iter_mut().enumerate() {
                        *slot = (0..m).map(|a| f[r * m + a] as i128 * v[a]).sum();
                    }
                    if !in_integer_row_span(rref, &mut scratch.vec_a) {
                        return false;
                    }
                }
            }
            for (ti, key) in self.triples.iter().enumerate() {
                let v1 = &alg1[ti];
                // lhs = f applied to the source bracket of (e_i, e_j, e_k)
                for (r, slot) in scratch.vec_a.iter_mut().enumerate() {
                    *slot = (0..m).map(|a| f[r * m + a] as i128 * v1[a]).sum();
                }
                // rhs = target bracket of (f e_i, f e_j, f e_k)
                scratch.vec_b.fill(0);
                let cols = [key[0] - 1, key[1] - 1, key[2] - 1];
                for (tj, tkey) in self.triples.iter().enumerate() {
                    let v2 = &alg2[tj];
                    if v2.iter().all(|&x| x == 0) {
                        continue;
                    }
                    let rows = [tkey[0] - 1, tkey[1] - 1, tkey[2] - 1];
                    let minor = minor3(f, m, rows, cols);
                    if minor == 0 {
                        continue;
                    }
                    for (slot, &x) in scratch.vec_b.iter_mut().zip(v2.iter()) {
                        *slot += minor * x;
                    }
                }
                if scratch.vec_a != scratch.vec_b {
                    return false;
                }
            }
        }
        if let Some((co1, co2)) = &self.coalg {
            for l in 0..m {
                // lhs = (f (x) f (x) f) applied to the source cobracket of
                // e_{l+1}, in wedge coordinates
                for (ti, key) in self.triples.iter().enumerate() {
                    let rows = [key[0] - 1, key[1] - 1, key[2] - 1];
                    let mut acc: i128 = 0;
                    for (tj, tkey) in self.triples.iter().enumerate() {
                        let a = co1[l][tj];
                        if a == 0 {
                            continue;
                        }
                        let cols = [tkey[0] - 1, tkey[1] - 1, tkey[2] - 1];
                        acc += a * minor3(f, m, rows, cols);
                    }
                    scratch.wedge_a[ti] = acc;
                }
                // rhs = target cobracket of f e_{l+1}
                for (ti, slot) in scratch.wedge_b.iter_mut().enumerate() {
                    *slot = (0..m).map(|p| f[p * m + l] as i128 * co2[p][ti]).sum();
                }
                if scratch.wedge_a != scratch.wedge_b {
                    return false;
                }
            }
        }
        integer_determinant_nonzero(f, m)
    }
}

struct IntScratch {
    vec_a: Vec<i128>,
    vec_b: Vec<i128>,
    wedge_a: Vec<i128>,
    wedge_b: Vec<i128>,
}

impl IntScratch {
    fn new(dim: usize, triple_count: usize) -> Self {
        IntScratch {
            vec_a: vec![0; dim],
            vec_b: vec![0; dim],
            wedge_a: vec![0; triple_count],
            wedge_b: vec![0; triple_count],
        }
    }
}

/// 3x3 minor of the row-major `dim x dim` matrix `f` on the given rows and
/// columns (0-based).
#[inline]
fn minor3(f: &[i64], dim: usize, rows: [usize; 3], cols: [usize; 3]) -> i128 {
    let e = |r: usize, c: usize| f[rows[r] * dim + cols[c]] as i128;
    e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1))
        - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
        + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0))
}

/// Fraction-free row echelon form over the integers.
#[allow(clippy::needless_range_loop)] // two rows are indexed at once
fn integer_row_echelon(mut rows: Vec<Vec<i128>>) -> Vec<Vec<i128>> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        for i in 0..rows.len() {
            if i == rank || rows[i][c] == 0 {
                continue;
            }
            let (a, b) = (rows[rank][c], rows[i][c]);
            let g = gcd_i128(a, b);
            let (fa, fb) = (b / g, a / g);
            for j in 0..cols {
                rows[i][j] = rows[i][j] * fb - rows[rank][j] * fa;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    rows
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    if a == 0 {
        1
    } else {
        a
    }
}

/// Destructively reduces `v` against the echelon rows; true iff it lands in
/// their span.
fn in_integer_row_span(rref: &[Vec<i128>], v: &mut [i128]) -> bool {
    for row in rref {
        let Some(pivot_col) = row.iter().position(|&x| x != 0) else {
            continue;
        };
        if v[pivot_col] == 0 {
            continue;
        }
        let (a, b) = (row[pivot_col], v[pivot_col]);
        let g = gcd_i128(a, b);
        let (fa, fb) = (b / g, a / g);
        for (slot, &r) in v.iter_mut().zip(row.iter()) {
            *slot = *slot * fb - r * fa;
        }
    }
    v.iter().all(|&x| x == 0)
}

/// Nonzero-determinant test by fraction-free elimination.
#[allow(clippy::needless_range_loop)] // two rows are indexed at once
fn integer_determinant_nonzero(f: &[i64], dim: usize) -> bool {
    let mut rows: Vec<Vec<i128>> = (0..dim)
        .map(|r| (0..dim).map(|c| f[r * dim + c] as i128).collect())
        .collect();
    for c in 0..dim {
        let Some(pivot) = (c..dim).find(|&i| rows[i][c] != 0) else {
            return false;
        };
        rows.swap(c, pivot);
        for i in (c + 1)..dim {
            if rows[i][c] == 0 {
                continue;
            }
            let (a, b) = (rows[c][c], rows[i][c]);
            let g = gcd_i128(a, b);
            let (fa, fb) = (b / g, a / g);
            for j in c..dim {
                rows[i][j] = rows[i][j] * fb - rows[c][j] * fa;
            }
        }
    }
    true
}

fn jobs_from_env() -> usize {
    match std::env::var("TRILIE_JOBS") {
        Ok(v) => v.trim().parse::<usize>().ok().filter(|&n| n >= 1).unwrap_or(1),
        Err(_) => std::thread::available_parallelism().map_or(1, |n| n.get()),
    }
    .min(64)
}

/// Scans the family in lexicographic order and returns the first accepted
/// candidate. Parallel workers claim contiguous blocks; the lowest accepted
/// index wins, so the result is deterministic regardless of scheduling.
fn scan_family_int(pair: &IntPair, family: SearchFamily) -> Option<Vec<i64>> {
    let dim = pair.dim;
    let count = family.candidate_count(dim);
    let jobs = jobs_from_env();
    const BLOCK: u128 = 1 << 14;

    if count <= BLOCK || jobs == 1 {
        let mut scratch = IntScratch::new(dim, pair.triples.len());
        let mut f = vec![0i64; dim * dim];
        for index in 0..count {
            family.candidate(dim, index, &mut f);
            if pair.candidate_ok(&f, &mut scratch) {
                return Some(f);
            }
        }
        return None;
    }

    let next_block = AtomicU64::new(0);
    let best: Mutex<Option<u128>> = Mutex::new(None);
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| {
                let mut scratch = IntScratch::new(dim, pair.triples.len());
                let mut f = vec![0i64; dim * dim];
                loop {
                    let block = next_block.fetch_add(1, Ordering::Relaxed) as u128;
                    let start = block * BLOCK;
                    if start >= count {
                        break;
                    }
                    if let Some(b) = *best.lock().unwrap() {
                        if b < start {
                            break;
                        }
                    }
                    let end = (start + BLOCK).min(count);
                    for index in start..end {
                        family.candidate(dim, index, &mut f);
                        if pair.candidate_ok(&f, &mut scratch) {
                            let mut guard = best.lock().unwrap();
                            if guard.is_none_or(|b| index < b) {
                                *guard = Some(index);
                            }
                            break;
                        }
                    }
                }
            });
        }
    });
    let found = (*best.lock().unwrap())?;
    let mut f = vec![0i64; dim * dim];
    family.candidate(dim, found, &mut f);
    Some(f)
}

fn int_matrix_to_iso(f: &[i64], dim: usize) -> LinearIso {
    let rows: Vec<Vec<ExactScalar>> = (0..dim)
        .map(|r| (0..dim).map(|c| ExactScalar::int(f[r * dim + c])).collect())
        .collect();
    LinearIso::new(Matrix::from_rows(rows).expect("square")).expect("search checked determinant")
}

/// Exact candidate check on the slow rational route; also used to replay
/// witnesses produced by the integer fast path.
#[doc(hidden)]
pub fn rational_candidate_ok(
    f: &Matrix,
    pair_alg: Option<(&ThreeLieAlgebra, &ThreeLieAlgebra)>,
    pair_coalg: Option<(&ThreeLieCoalgebra, &ThreeLieCoalgebra)>,
) -> bool {
    if f.determinant().is_zero() {
        return false;
    }
    let iso = LinearIso::new(f.clone()).expect("nonzero determinant");
    if let Some((a1, a2)) = pair_alg {
        if !matches!(verify_algebra_iso(&iso, a1, a2), Ok(true)) {
            return false;
        }
    }
    if let Some((c1, c2)) = pair_coalg {
        if !matches!(verify_coalgebra_iso(&iso, c1, c2), Ok(true)) {
            return false;
        }
    }
    true
}

fn scan_family_rational(pair: &PairData<'_>, family: SearchFamily) -> Option<LinearIso> {
    let dim = pair.dims().0;
    let count = family.candidate_count(dim);
    let mut f = vec![0i64; dim * dim];
    for index in 0..count {
        family.candidate(dim, index, &mut f);
        let rows: Vec<Vec<ExactScalar>> = (0..dim)
            .map(|r| (0..dim).map(|c| ExactScalar::int(f[r * dim + c])).collect())
            .collect();
        let m = Matrix::from_rows(rows).expect("square");
        if rational_candidate_ok(&m, pair.algebras(), pair.coalgebras()) {
            return Some(LinearIso::new(m).expect("nonzero determinant"));
        }
    }
    None
}

fn search_pair(pair: PairData<'_>, family: SearchFamily) -> Result<Option<LinearIso>, Error> {
    let (d1, d2) = pair.dims();
    if d1 != d2 {
        return Err(Error::DimensionMismatch {
            expected: d1,
            found: d2,
        });
    }
    match IntPair::try_new(&pair) {
        Some(int_pair) => {
            let Some(f) = scan_family_int(&int_pair, family) else {
                return Ok(None);
            };
            let iso = int_matrix_to_iso(&f, d1);
            // defense against fast-path drift: replay the witness on the
            // rational route
            assert!(
                rational_candidate_ok(iso.matrix(), pair.algebras(), pair.coalgebras()),
                "integer search produced a candidate the exact check rejects"
            );
            Ok(Some(iso))
        }
        None => Ok(scan_family_rational(&pair, family)),
    }
}

/// Searches the family for a witness making the two bialgebras equivalent.
/// `None` means no witness in the family; it is not a proof of
/// inequivalence.
pub fn search_equivalence(
    b1: &ThreeLieBialgebra,
    b2: &ThreeLieBialgebra,
    family: SearchFamily,
) -> Result<Option<LinearIso>, Error> {
    search_pair(PairData::Bialgebras(b1, b2), family)
}

/// Witness search for an algebra isomorphism.
pub fn search_algebra_iso(
    a1: &ThreeLieAlgebra,
    a2: &ThreeLieAlgebra,
    family: SearchFamily,
) -> Result<Option<LinearIso>, Error> {
    search_pair(PairData::Algebras(a1, a2), family)
}

/// Witness search for a coalgebra isomorphism.
pub fn search_coalgebra_iso(
    c1: &ThreeLieCoalgebra,
    c2: &ThreeLieCoalgebra,
    family: SearchFamily,
) -> Result<Option<LinearIso>, Error> {
    search_pair(PairData::Coalgebras(c1, c2), family)
}

/// Verdict of the equivalence decision procedure.
#[derive(Clone, Debug)]
pub enum Verdict {
    /// A witness map was found.
    Equivalent(LinearIso),
    /// An invariant separates the two objects; the named fingerprint
    /// component differs.
    Inequivalent {
        component: &'static str,
        left: usize,
        right: usize,
    },
    /// Fingerprints agree but no witness exists in the searched family.
    Unknown,
}

/// Decides equivalence of two bialgebras as far as fingerprints and the
/// given search family allow.
pub fn decide_equivalence(
    b1: &ThreeLieBialgebra,
    b2: &ThreeLieBialgebra,
    family: SearchFamily,
) -> Result<Verdict, Error> {
    if b1.dim() != b2.dim() {
        return Err(Error::DimensionMismatch {
            expected: b1.dim(),
            found: b2.dim(),
        });
    }
    let (fp1, fp2) = (fingerprint(b1), fingerprint(b2));
    if let Some((component, left, right)) = fp1.first_mismatch(&fp2) {
        return Ok(Verdict::Inequivalent {
            component,
            left,
            right,
        });
    }
    Ok(match search_equivalence(b1, b2, family)? {
        Some(iso) => Verdict::Equivalent(iso),
        None => Verdict::Unknown,
    })
}
