//! The matrix semiring `M_k(S)` over a finite semiring table.
//!
//! Matrices are value types hashed by their entries. Every matrix also has
//! a stable vertex id used by the graph layer and the exports: the entries
//! read in row-major order are the digits of a base-`|S|` integer, most
//! significant digit first. [`MatrixSemiring::encode`] and
//! [`MatrixSemiring::decode`] implement that contract.
//!
//! Unit enumeration has two interchangeable routes:
//!
//! - [`matrix_units_decomposition`]: over a commutative zero-sum-free
//!   semiring, the invertible matrices are exactly the products `D * M`
//!   where `D` is a diagonal of units and `M` sums the parts of an
//!   orthogonal decomposition of `1` over distinct permutation matrices.
//!   When the semiring is entire, only the one-part decomposition `{1}`
//!   exists and the units collapse to `diagonal * permutation`.
//! - [`matrix_units_brute_force`]: a guarded scan over all matrix pairs.
//!
//! Both routes verify `U*V == V*U == I` for every stored inverse pair, and
//! the test suite checks they agree elementwise wherever both apply.

use crate::semiring::SemiringTable;
use crate::Guards;
use itertools::Itertools;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("brute-force guard exceeded: |S|^(k*k) = {needed} > {guard}")]
    GuardExceeded { needed: u128, guard: u64 },
    #[error("the decomposition route needs a commutative zero-sum-free semiring; {name} is not")]
    NotCommutativeAntiring { name: String },
}

/// A permutation of `{0, ..., k-1}` stored as its image vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Permutation {
            images: (0..k).collect(),
        }
    }

    /// Builds from an image vector, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &i in &images {
            if i >= k || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Permutation { images })
    }

    /// The transposition swapping `i` and `j`.
    pub fn transposition(k: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (0..k).collect();
        images.swap(i, j);
        Permutation { images }
    }

    /// The full cycle `0 -> 1 -> ... -> k-1 -> 0`.
    pub fn full_cycle(k: usize) -> Self {
        Permutation {
            images: (0..k).map(|i| (i + 1) % k).collect(),
        }
    }

    /// `l`-th power of the full cycle: `i -> (i + l) mod k`.
    pub fn full_cycle_power(k: usize, l: usize) -> Self {
        Permutation {
            images: (0..k).map(|i| (i + l) % k).collect(),
        }
    }

    pub fn k(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation { images }
    }

    /// All `k!` permutations in lexicographic image order.
    pub fn all(k: usize) -> Vec<Permutation> {
        (0..k)
            .permutations(k)
            .map(|images| Permutation { images })
            .collect()
    }
}

/// A `k x k` matrix of element indices over some fixed table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    k: usize,
    entries: Vec<usize>,
}

impl Matrix {
    pub fn new(k: usize, entries: Vec<usize>) -> Self {
        assert_eq!(entries.len(), k * k, "entry count must be k*k");
        Matrix { k, entries }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[i * self.k + j]
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// True if some row is entirely `zero`.
    pub fn has_zero_row(&self, zero: usize) -> bool {
        (0..self.k).any(|i| (0..self.k).all(|j| self.get(i, j) == zero))
    }

    /// True if some column is entirely `zero`.
    pub fn has_zero_col(&self, zero: usize) -> bool {
        (0..self.k).any(|j| (0..self.k).all(|i| self.get(i, j) == zero))
    }
}

/// Arithmetic context: a base table plus a fixed dimension.
///
/// All operations panic if handed a matrix of a different dimension.
#[derive(Debug, Clone, Copy)]
pub struct MatrixSemiring<'a> {
    s: &'a SemiringTable,
    k: usize,
}

impl<'a> MatrixSemiring<'a> {
    pub fn new(s: &'a SemiringTable, k: usize) -> Self {
        assert!(k >= 1, "matrix dimension must be at least 1");
        MatrixSemiring { s, k }
    }

    pub fn table(&self) -> &'a SemiringTable {
        self.s
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Total number of `k x k` matrices, `|S|^(k*k)`.
    pub fn count(&self) -> u128 {
        let n = self.s.order() as u128;
        let mut out: u128 = 1;
        for _ in 0..self.k * self.k {
            out = out.checked_mul(n).expect("matrix count overflows u128");
        }
        out
    }

    pub fn zero(&self) -> Matrix {
        Matrix::new(self.k, vec![self.s.zero(); self.k * self.k])
    }

    pub fn identity(&self) -> Matrix {
        self.diag(&vec![self.s.one(); self.k])
    }

    /// `E_ij`: one at `(i, j)`, zero elsewhere.
    pub fn e(&self, i: usize, j: usize) -> Matrix {
        let mut m = self.zero();
        m.entries[i * self.k + j] = self.s.one();
        m
    }

    /// Diagonal matrix from `k` element indices.
    pub fn diag(&self, d: &[usize]) -> Matrix {
        assert_eq!(d.len(), self.k, "diagonal length must equal k");
        let mut m = self.zero();
        for (i, &v) in d.iter().enumerate() {
            m.entries[i * self.k + i] = v;
        }
        m
    }

    /// `c * I`: the scalar `c` along the diagonal.
    pub fn scalar(&self, c: usize) -> Matrix {
        self.diag(&vec![c; self.k])
    }

    /// Every entry equal to `c`.
    pub fn constant(&self, c: usize) -> Matrix {
        Matrix::new(self.k, vec![c; self.k * self.k])
    }

    /// Permutation matrix: entry `(i, sigma(i))` is one.
    pub fn perm_matrix(&self, sigma: &Permutation) -> Matrix {
        assert_eq!(sigma.k(), self.k, "permutation degree must equal k");
        let mut m = self.zero();
        for i in 0..self.k {
            m.entries[i * self.k + sigma.apply(i)] = self.s.one();
        }
        m
    }

    pub fn add(&self, a: &Matrix, b: &Matrix) -> Matrix {
        assert_eq!(a.k, self.k);
        assert_eq!(b.k, self.k);
        let entries = a
            .entries
            .iter()
            .zip(&b.entries)
            .map(|(&x, &y)| self.s.add(x, y))
            .collect();
        Matrix::new(self.k, entries)
    }

    pub fn mul(&self, a: &Matrix, b: &Matrix) -> Matrix {
        assert_eq!(a.k, self.k);
        assert_eq!(b.k, self.k);
        let k = self.k;
        let mut entries = vec![self.s.zero(); k * k];
        for i in 0..k {
            for j in 0..k {
                let mut acc = self.s.zero();
                for l in 0..k {
                    acc = self.s.add(acc, self.s.mul(a.get(i, l), b.get(l, j)));
                }
                entries[i * k + j] = acc;
            }
        }
        Matrix::new(k, entries)
    }

    pub fn transpose(&self, a: &Matrix) -> Matrix {
        assert_eq!(a.k, self.k);
        let k = self.k;
        let mut entries = vec![0; k * k];
        for i in 0..k {
            for j in 0..k {
                entries[j * k + i] = a.get(i, j);
            }
        }
        Matrix::new(k, entries)
    }

    /// Entrywise scalar product `c * A`.
    pub fn scale(&self, c: usize, a: &Matrix) -> Matrix {
        assert_eq!(a.k, self.k);
        let entries = a.entries.iter().map(|&x| self.s.mul(c, x)).collect();
        Matrix::new(self.k, entries)
    }

    /// Stable vertex id: row-major entries as base-`|S|` digits, most
    /// significant first.
    pub fn encode(&self, a: &Matrix) -> u64 {
        assert_eq!(a.k, self.k);
        let n = self.s.order() as u128;
        let mut id: u128 = 0;
        for &e in &a.entries {
            id = id * n + e as u128;
        }
        u64::try_from(id).expect("vertex id exceeds u64; guard the size first")
    }

    pub fn decode(&self, mut id: u64) -> Matrix {
        let n = self.s.order() as u64;
        let kk = self.k * self.k;
        let mut entries = vec![0usize; kk];
        for p in (0..kk).rev() {
            entries[p] = (id % n) as usize;
            id /= n;
        }
        debug_assert_eq!(id, 0, "id out of range for this dimension");
        Matrix::new(self.k, entries)
    }

    /// Display form using element names: `[[0 1],[1 0]]`.
    pub fn render(&self, a: &Matrix) -> String {
        let rows: Vec<String> = (0..self.k)
            .map(|i| {
                let row: Vec<&str> = (0..self.k).map(|j| self.s.elem_name(a.get(i, j))).collect();
                format!("[{}]", row.join(" "))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }
}

/// An orthogonal decomposition of `1`: nonzero parts with pairwise products
/// zero summing to `1`. Parts are stored as a sorted multiset.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct OrthDecomposition {
    parts: Vec<usize>,
}

impl OrthDecomposition {
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// All orthogonal decompositions of `1` with exactly `r` parts, in
/// lexicographic order of the sorted part indices. Parts may repeat when
/// the repeated element squares to zero.
pub fn orth_decompositions(s: &SemiringTable, r: usize) -> Vec<OrthDecomposition> {
    assert!(r >= 1, "decomposition size must be at least 1");
    let mut out = Vec::new();
    let mut parts = Vec::with_capacity(r);
    search_decompositions(s, r, s.zero(), &mut parts, &mut out);
    out
}

fn search_decompositions(
    s: &SemiringTable,
    r: usize,
    min_next: usize,
    parts: &mut Vec<usize>,
    out: &mut Vec<OrthDecomposition>,
) {
    if parts.len() == r {
        if s.sum(parts.iter().copied()) == s.one() {
            out.push(OrthDecomposition {
                parts: parts.clone(),
            });
        }
        return;
    }
    for c in min_next..s.order() {
        if c == s.zero() {
            continue;
        }
        let orthogonal = parts
            .iter()
            .all(|&p| s.mul(p, c) == s.zero() && s.mul(c, p) == s.zero());
        if !orthogonal {
            continue;
        }
        parts.push(c);
        search_decompositions(s, r, c, parts, out);
        parts.pop();
    }
}

/// How a unit set was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Diagonal-times-weighted-permutation construction.
    Decomposition,
    /// Exhaustive pair scan.
    BruteForce,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Decomposition => "decomposition",
            Provenance::BruteForce => "brute_force",
        }
    }
}

/// The group of invertible `k x k` matrices with a verified inverse for
/// every member. Members are sorted by vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixUnitSet {
    k: usize,
    ids: Vec<u64>,
    elements: Vec<Matrix>,
    inverses: Vec<Matrix>,
    provenance: Provenance,
}

impl MatrixUnitSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn ids(&self) -> &[u64] {
        &self.ids
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn contains_id(&self, id: u64) -> bool {
        self.ids.binary_search(&id).is_ok()
    }

    pub fn inverse_by_id(&self, id: u64) -> Option<&Matrix> {
        self.ids
            .binary_search(&id)
            .ok()
            .map(|pos| &self.inverses[pos])
    }

    pub fn iter_pairs(&self) -> impl Iterator<Item = (&Matrix, &Matrix)> {
        self.elements.iter().zip(self.inverses.iter())
    }

    /// Same members and inverses, ignoring provenance.
    pub fn same_elements(&self, other: &MatrixUnitSet) -> bool {
        self.ids == other.ids && self.inverses == other.inverses
    }
}

fn unit_set_from_map(
    k: usize,
    map: BTreeMap<u64, (Matrix, Matrix)>,
    provenance: Provenance,
) -> MatrixUnitSet {
    let mut ids = Vec::with_capacity(map.len());
    let mut elements = Vec::with_capacity(map.len());
    let mut inverses = Vec::with_capacity(map.len());
    for (id, (u, v)) in map {
        ids.push(id);
        elements.push(u);
        inverses.push(v);
    }
    MatrixUnitSet {
        k,
        ids,
        elements,
        inverses,
        provenance,
    }
}

/// Enumerates the units of `M_k(S)` by the structural route.
///
/// Requires `S` commutative and zero-sum-free. Every unit is `D * M` with
/// `D` an invertible diagonal and `M` a sum of orthogonal-decomposition
/// parts over distinct permutation matrices; when `S` is entire only the
/// single-part decomposition `{1}` survives and `M` is a bare permutation
/// matrix. Every emitted pair is verified by multiplication.
pub fn matrix_units_decomposition(
    s: &SemiringTable,
    k: usize,
) -> Result<MatrixUnitSet, MatrixError> {
    let profile = s.profile();
    if !profile.commutative || !profile.antinegative {
        return Err(MatrixError::NotCommutativeAntiring {
            name: s.name().into(),
        });
    }
    let ms = MatrixSemiring::new(s, k);
    if s.order() == 1 {
        // One-element semiring: zero equals one, so no orthogonal
        // decomposition of 1 exists, yet the unique matrix is the identity
        // and inverts itself.
        let identity = ms.identity();
        let mut found = BTreeMap::new();
        found.insert(ms.encode(&identity), (identity.clone(), identity));
        return Ok(unit_set_from_map(k, found, Provenance::Decomposition));
    }
    let units = s.units();
    let perms = Permutation::all(k);
    let kfact = perms.len();
    let identity = ms.identity();

    let mut decomps: Vec<OrthDecomposition> = Vec::new();
    if profile.entire {
        // No two nonzero elements multiply to zero, so r = 1 is the only
        // decomposition size.
        decomps.extend(orth_decompositions(s, 1));
    } else {
        for r in 1..=kfact {
            decomps.extend(orth_decompositions(s, r));
        }
    }

    // Every diagonal of units.
    let diagonals: Vec<Vec<usize>> = (0..k)
        .map(|_| units.members().to_vec())
        .multi_cartesian_product()
        .collect();

    let mut found: BTreeMap<u64, (Matrix, Matrix)> = BTreeMap::new();
    for dec in &decomps {
        let r = dec.len();
        for sigma_tuple in perms.iter().permutations(r) {
            // Sum the parts over this choice of distinct permutations.
            let mut m = ms.zero();
            for (part, sigma) in dec.parts().iter().zip(&sigma_tuple) {
                m = ms.add(&m, &ms.scale(*part, &ms.perm_matrix(sigma)));
            }
            let m_t = ms.transpose(&m);
            for d in &diagonals {
                let u = ms.mul(&ms.diag(d), &m);
                let id = ms.encode(&u);
                if found.contains_key(&id) {
                    continue;
                }
                let d_inv: Vec<usize> = d
                    .iter()
                    .map(|&x| units.inverse(x).expect("diagonal entries are units"))
                    .collect();
                let v = ms.mul(&m_t, &ms.diag(&d_inv));
                assert_eq!(ms.mul(&u, &v), identity, "inverse verification failed");
                assert_eq!(ms.mul(&v, &u), identity, "inverse verification failed");
                found.insert(id, (u, v));
            }
        }
    }
    Ok(unit_set_from_map(k, found, Provenance::Decomposition))
}

/// Enumerates the units of `M_k(S)` by scanning all pairs, guarded by
/// `guards.max_bruteforce` on the matrix count.
pub fn matrix_units_brute_force(
    s: &SemiringTable,
    k: usize,
    guards: &Guards,
) -> Result<MatrixUnitSet, MatrixError> {
    let ms = MatrixSemiring::new(s, k);
    let count = ms.count();
    if count > guards.max_bruteforce as u128 {
        return Err(MatrixError::GuardExceeded {
            needed: count,
            guard: guards.max_bruteforce,
        });
    }
    let count = count as u64;
    let zero = s.zero();
    // A matrix with a zero row or column cannot be invertible, unless zero
    // and one coincide.
    let filter_zeros = s.order() > 1;
    let candidates: Vec<Matrix> = (0..count)
        .map(|id| ms.decode(id))
        .filter(|m| !filter_zeros || (!m.has_zero_row(zero) && !m.has_zero_col(zero)))
        .collect();
    let identity = ms.identity();
    let mut found: BTreeMap<u64, (Matrix, Matrix)> = BTreeMap::new();
    for a in &candidates {
        for b in &candidates {
            if ms.mul(a, b) == identity && ms.mul(b, a) == identity {
                found.insert(ms.encode(a), (a.clone(), b.clone()));
                break;
            }
        }
    }
    Ok(unit_set_from_map(k, found, Provenance::BruteForce))
}

/// Enumerates the units of `M_k(S)`, picking the structural route when the
/// table is commutative and zero-sum-free and the guarded scan otherwise.
pub fn matrix_units(
    s: &SemiringTable,
    k: usize,
    guards: &Guards,
) -> Result<MatrixUnitSet, MatrixError> {
    let profile = s.profile();
    if profile.commutative && profile.antinegative {
        matrix_units_decomposition(s, k)
    } else {
        matrix_units_brute_force(s, k, guards)
    }
}

/// Inverts a single matrix if possible; the result agrees with membership
/// in [`matrix_units`].
pub fn invert(
    s: &SemiringTable,
    a: &Matrix,
    guards: &Guards,
) -> Result<Option<Matrix>, MatrixError> {
    let k = a.k();
    let ms = MatrixSemiring::new(s, k);
    let profile = s.profile();
    if profile.commutative && profile.antinegative {
        let units = matrix_units_decomposition(s, k)?;
        return Ok(units.inverse_by_id(ms.encode(a)).cloned());
    }
    let count = ms.count();
    if count > guards.max_bruteforce as u128 {
        return Err(MatrixError::GuardExceeded {
            needed: count,
            guard: guards.max_bruteforce,
        });
    }
    let zero = s.zero();
    if s.order() > 1 && (a.has_zero_row(zero) || a.has_zero_col(zero)) {
        return Ok(None);
    }
    let identity = ms.identity();
    for id in 0..count as u64 {
        let b = ms.decode(id);
        if ms.mul(a, &b) == identity && ms.mul(&b, a) == identity {
            return Ok(Some(b));
        }
    }
    Ok(None)
}

pub fn is_invertible(s: &SemiringTable, a: &Matrix, guards: &Guards) -> Result<bool, MatrixError> {
    invert(s, a, guards).map(|o| o.is_some())
}
