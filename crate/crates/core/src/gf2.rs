//! Bit-packed linear algebra over GF(2).
//!
//! Vectors are packed into `u64` words; addition is XOR and the dot product
//! is the parity of a bitwise AND. On top of the raw vectors this module
//! provides row reduction with a membership solver, quadratic-form
//! evaluation, symplectic Gram-Schmidt (hyperbolic bases) and the radical /
//! form-type analysis used by the classification pipeline.

use serde::Serialize;

const WORD_BITS: usize = 64;

/// A fixed-length vector over GF(2), packed into 64-bit words.
///
/// Trailing padding bits are kept at zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector {
            len,
            words: vec![0; len.div_ceil(WORD_BITS)],
        }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = BitVector::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Parses a string of `0`/`1` characters, most significant position first.
    pub fn from_bit_str(s: &str) -> Option<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => return None,
            }
        }
        Some(BitVector::from_bits(&bits))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &BitVector) {
        debug_assert_eq!(self.len, other.len);
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w ^= o;
        }
    }

    pub fn xor(&self, other: &BitVector) -> BitVector {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Parity of the bitwise AND with `other`.
    #[inline]
    pub fn dot(&self, other: &BitVector) -> bool {
        debug_assert_eq!(self.len, other.len);
        let mut acc = 0u64;
        for (w, o) in self.words.iter().zip(&other.words) {
            acc ^= w & o;
        }
        acc.count_ones() % 2 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Index of the lowest set bit, if any.
    pub fn lowest_set_bit(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Copies `len` bits starting at `start` into a fresh vector.
    pub fn extract(&self, start: usize, len: usize) -> BitVector {
        debug_assert!(start + len <= self.len);
        let mut out = BitVector::zeros(len);
        let shift = start % WORD_BITS;
        let base = start / WORD_BITS;
        for wi in 0..out.words.len() {
            let lo = self.words.get(base + wi).copied().unwrap_or(0) >> shift;
            let hi = if shift == 0 {
                0
            } else {
                self.words.get(base + wi + 1).copied().unwrap_or(0) << (WORD_BITS - shift)
            };
            out.words[wi] = lo | hi;
        }
        out.clear_padding();
        out
    }

    /// Word at an arbitrary bit offset (little-endian across words).
    #[inline]
    fn word_at(&self, bitpos: usize) -> u64 {
        let sh = bitpos % WORD_BITS;
        let base = bitpos / WORD_BITS;
        let lo = self.words.get(base).copied().unwrap_or(0) >> sh;
        let hi = if sh == 0 {
            0
        } else {
            self.words.get(base + 1).copied().unwrap_or(0) << (WORD_BITS - sh)
        };
        lo | hi
    }

    /// Parity of `sum_i self[self_start+i] & other[other_start+i]` over
    /// `i < len`, without materializing the slices.
    pub fn dot_range(&self, other: &BitVector, self_start: usize, other_start: usize, len: usize) -> bool {
        debug_assert!(self_start + len <= self.len);
        debug_assert!(other_start + len <= other.len);
        let mut acc = 0u64;
        let mut done = 0;
        while done < len {
            let take = (len - done).min(WORD_BITS);
            let mut w = self.word_at(self_start + done) & other.word_at(other_start + done);
            if take < WORD_BITS {
                w &= (1u64 << take) - 1;
            }
            acc ^= w;
            done += take;
        }
        acc.count_ones() % 2 == 1
    }

    fn clear_padding(&mut self) {
        let tail = self.len % WORD_BITS;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }

    /// Extends the vector with zero bits up to `new_len` (no-op if shorter).
    pub fn grow(&mut self, new_len: usize) {
        if new_len > self.len {
            self.len = new_len;
            self.words.resize(new_len.div_ceil(WORD_BITS), 0);
        }
    }

    pub fn iter_bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Support as a list of set-bit indices.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i)).collect()
    }
}

impl std::fmt::Debug for BitVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl Serialize for BitVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{self:?}"))
    }
}

/// Row echelon form with combination tracking.
///
/// Rows are kept reduced with deterministic pivots (lowest set bit first);
/// each row carries the combination of input vectors that produced it, so
/// membership queries can also report coordinates over the inputs.
#[derive(Clone)]
pub struct Echelon {
    dim: usize,
    rows: Vec<BitVector>,
    pivots: Vec<usize>,
    combos: Vec<BitVector>,
    inputs: usize,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
            combos: Vec::new(),
            inputs: 0,
        }
    }

    pub fn from_vectors(dim: usize, vectors: &[BitVector]) -> Self {
        let mut e = Echelon::new(dim);
        for v in vectors {
            e.add(v);
        }
        e
    }

    /// Adds one input vector; returns true when it enlarged the span.
    pub fn add(&mut self, v: &BitVector) -> bool {
        debug_assert_eq!(v.len(), self.dim);
        let idx = self.inputs;
        self.inputs += 1;
        let mut r = v.clone();
        let mut combo = BitVector::zeros(idx + 1);
        combo.set(idx, true);
        self.grow_combos(idx + 1);
        for (row, c) in self.rows.iter().zip(&self.combos) {
            let p = row.lowest_set_bit().unwrap();
            if r.get(p) {
                r.xor_assign(row);
                combo.xor_assign(c);
            }
        }
        match r.lowest_set_bit() {
            None => false,
            Some(p) => {
                // keep rows sorted by pivot
                let pos = self.pivots.partition_point(|&q| q < p);
                self.rows.insert(pos, r);
                self.pivots.insert(pos, p);
                self.combos.insert(pos, combo);
                true
            }
        }
    }

    fn grow_combos(&mut self, n: usize) {
        for c in &mut self.combos {
            c.grow(n);
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[BitVector] {
        &self.rows
    }

    /// Residual of `v` after reduction by the echelon rows.
    pub fn reduce(&self, v: &BitVector) -> BitVector {
        let mut r = v.clone();
        for row in &self.rows {
            let p = row.lowest_set_bit().unwrap();
            if r.get(p) {
                r.xor_assign(row);
            }
        }
        r
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates of `v` over the input vectors, when `v` is in the span.
    pub fn coordinates(&self, v: &BitVector) -> Option<BitVector> {
        let mut r = v.clone();
        let mut combo = BitVector::zeros(self.inputs.max(1));
        for (row, c) in self.rows.iter().zip(&self.combos) {
            let p = row.lowest_set_bit().unwrap();
            if r.get(p) {
                r.xor_assign(row);
                for i in c.support() {
                    let cur = combo.get(i);
                    combo.set(i, !cur);
                }
            }
        }
        if r.is_zero() {
            Some(combo)
        } else {
            None
        }
    }
}

/// Reduces a list of vectors, dropping zeros and dependent entries.
///
/// Returns the indices of the kept (independent) vectors in input order.
pub fn independent_subset(dim: usize, vectors: &[BitVector]) -> Vec<usize> {
    let mut e = Echelon::new(dim);
    let mut kept = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        if e.add(v) {
            kept.push(i);
        }
    }
    kept
}

pub fn rank(dim: usize, vectors: &[BitVector]) -> usize {
    Echelon::from_vectors(dim, vectors).rank()
}

/// A quadratic form context: evaluates `Q` and its polar form `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuadSpace {
    /// The (2n+1)-dimensional Pauli space with coordinates `(a | b | r)`:
    /// `Q(v) = sum_j a_j b_j + r` and
    /// `f(u, v) = sum_j (a_uj b_vj + b_uj a_vj)`.
    Pauli { n: usize },
    /// A coordinate space made of `hyper` hyperbolic pairs followed by
    /// `elliptic` elliptic pairs, laid out consecutively.
    Split { hyper: usize, elliptic: usize },
}

impl QuadSpace {
    pub fn dim(&self) -> usize {
        match self {
            QuadSpace::Pauli { n } => 2 * n + 1,
            QuadSpace::Split { hyper, elliptic } => 2 * (hyper + elliptic),
        }
    }

    pub fn q(&self, v: &BitVector) -> bool {
        debug_assert_eq!(v.len(), self.dim());
        match self {
            QuadSpace::Pauli { n } => v.dot_range(v, 0, *n, *n) ^ v.get(2 * n),
            QuadSpace::Split { hyper, elliptic } => {
                let mut acc = false;
                for p in 0..hyper + elliptic {
                    let (x, y) = (v.get(2 * p), v.get(2 * p + 1));
                    acc ^= x & y;
                    if p >= *hyper {
                        acc ^= x ^ y;
                    }
                }
                acc
            }
        }
    }

    pub fn f(&self, u: &BitVector, v: &BitVector) -> bool {
        debug_assert_eq!(u.len(), self.dim());
        debug_assert_eq!(v.len(), self.dim());
        match self {
            QuadSpace::Pauli { n } => u.dot_range(v, 0, *n, *n) ^ u.dot_range(v, *n, 0, *n),
            QuadSpace::Split { .. } => {
                // polarization: f(u,v) = Q(u+v) + Q(u) + Q(v)
                self.q(&u.xor(v)) ^ self.q(u) ^ self.q(v)
            }
        }
    }
}

/// Q-values of a hyperbolic pair `(v, w)`: on `v`, `w` and `v + w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PairQ {
    pub q_v: bool,
    pub q_w: bool,
    pub q_sum: bool,
}

impl PairQ {
    /// The 2-space is elliptic when all three nonzero vectors are non-isotropic.
    pub fn is_elliptic(&self) -> bool {
        self.q_v && self.q_w && self.q_sum
    }
}

/// Output of symplectic Gram-Schmidt: `f`-paired vectors plus a basis of the
/// radical of `f` restricted to the span, with Q recorded everywhere.
#[derive(Clone, Debug)]
pub struct HyperbolicBasis {
    pub pairs: Vec<(BitVector, BitVector)>,
    pub radical: Vec<BitVector>,
    pub pair_q: Vec<PairQ>,
    pub radical_q: Vec<bool>,
}

impl HyperbolicBasis {
    pub fn span_dim(&self) -> usize {
        2 * self.pairs.len() + self.radical.len()
    }

    pub fn basis_vectors(&self) -> Vec<BitVector> {
        let mut out = Vec::with_capacity(self.span_dim());
        for (v, w) in &self.pairs {
            out.push(v.clone());
            out.push(w.clone());
        }
        out.extend(self.radical.iter().cloned());
        out
    }
}

/// Symplectic Gram-Schmidt with deterministic tie-breaking.
///
/// The first unpaired vector (in input order) is paired with the first later
/// vector of nonzero `f`, and both are eliminated from the rest; vectors with
/// no partner end up in the radical of `f` restricted to the span.
pub fn symplectic_gram_schmidt(vectors: &[BitVector], space: &QuadSpace) -> HyperbolicBasis {
    let dim = space.dim();
    let kept = independent_subset(dim, vectors);
    let mut work: Vec<BitVector> = kept.iter().map(|&i| vectors[i].clone()).collect();

    let mut pairs = Vec::new();
    let mut radical = Vec::new();
    while !work.is_empty() {
        let v = work.remove(0);
        match (0..work.len()).find(|&j| space.f(&v, &work[j])) {
            None => radical.push(v),
            Some(j) => {
                let w = work.remove(j);
                for u in &mut work {
                    if space.f(u, &w) {
                        u.xor_assign(&v);
                    }
                    if space.f(u, &v) {
                        u.xor_assign(&w);
                    }
                }
                pairs.push((v, w));
            }
        }
    }

    let pair_q = pairs
        .iter()
        .map(|(v, w)| PairQ {
            q_v: space.q(v),
            q_w: space.q(w),
            q_sum: space.q(&v.xor(w)),
        })
        .collect();
    let radical_q = radical.iter().map(|r| space.q(r)).collect();
    HyperbolicBasis {
        pairs,
        radical,
        pair_q,
        radical_q,
    }
}

/// Radical analysis of a hyperbolic basis.
#[derive(Clone, Debug)]
pub struct RadicalInfo {
    /// Dimension of the radical of `f` on the span.
    pub rad_f_dim: usize,
    /// Dimension of the isotropic radical of `Q` (the `Q = 0` part).
    pub rad_q_dim: usize,
    /// Whether the radical contains a non-isotropic vector.
    pub anisotropic: bool,
    /// Re-based radical: when anisotropic, exactly one vector has `Q = 1`
    /// (listed first) and the rest have `Q = 0`.
    pub rebased: Vec<BitVector>,
    pub rebased_q: Vec<bool>,
}

/// Q is linear on the radical of `f`, so a single non-isotropic vector can
/// absorb all others.
pub fn analyze_radical(basis: &HyperbolicBasis) -> RadicalInfo {
    let l = basis.radical.len();
    let first_aniso = basis.radical_q.iter().position(|&q| q);
    match first_aniso {
        None => RadicalInfo {
            rad_f_dim: l,
            rad_q_dim: l,
            anisotropic: false,
            rebased: basis.radical.clone(),
            rebased_q: basis.radical_q.clone(),
        },
        Some(pivot) => {
            let aniso = basis.radical[pivot].clone();
            let mut rebased = vec![aniso.clone()];
            let mut rebased_q = vec![true];
            for (i, r) in basis.radical.iter().enumerate() {
                if i == pivot {
                    continue;
                }
                if basis.radical_q[i] {
                    rebased.push(r.xor(&aniso));
                } else {
                    rebased.push(r.clone());
                }
                rebased_q.push(false);
            }
            RadicalInfo {
                rad_f_dim: l,
                rad_q_dim: l - 1,
                anisotropic: true,
                rebased,
                rebased_q,
            }
        }
    }
}

/// The +/- type of an even-dimensional form, from its hyperbolic pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FormType {
    Plus,
    Minus,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum Gf2Error {
    #[error("form type is undefined: the radical contains a non-isotropic vector")]
    AnisotropicRadical,
}

/// Product of the pair types: `Minus` iff the number of elliptic pairs is odd.
pub fn space_type(basis: &HyperbolicBasis) -> Result<FormType, Gf2Error> {
    if basis.radical_q.iter().any(|&q| q) {
        return Err(Gf2Error::AnisotropicRadical);
    }
    let elliptic = basis.pair_q.iter().filter(|p| p.is_elliptic()).count();
    if elliptic % 2 == 1 {
        Ok(FormType::Minus)
    } else {
        Ok(FormType::Plus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(s: &str) -> BitVector {
        BitVector::from_bit_str(s).unwrap()
    }

    #[test]
    fn reduce_rank_and_membership() {
        // {(1|0|1),(0|1|1),(1|1|0)} has rank 2; the third is the sum of the first two
        let vs = [bv("101"), bv("011"), bv("110")];
        let e = Echelon::from_vectors(3, &vs);
        assert_eq!(e.rank(), 2);

        let e2 = Echelon::from_vectors(3, &vs[..2]);
        let coords = e2.coordinates(&bv("110")).expect("member");
        assert_eq!(coords.support(), vec![0, 1]);
        assert!(!e2.contains(&bv("100")));
    }

    #[test]
    fn empty_input_rank_zero() {
        let e = Echelon::new(5);
        assert_eq!(e.rank(), 0);
        assert!(e.contains(&BitVector::zeros(5)));
    }

    #[test]
    fn pauli_space_forms() {
        let s = QuadSpace::Pauli { n: 1 };
        let ix = bv("101"); // v_{iX}
        let iz = bv("011"); // v_{iZ}
        assert!(s.q(&ix));
        assert!(s.q(&iz));
        assert!(s.f(&ix, &iz));
        // Q((1|1|0)) = 1
        assert!(s.q(&bv("110")));
        // n=2: X1 vs Z2 commute
        let s2 = QuadSpace::Pauli { n: 2 };
        let x1 = bv("10001"); // layout (a|b|r): a=10, b=00, r=1
        let z2 = bv("00011");
        assert!(!s2.f(&x1, &z2));
    }

    #[test]
    fn quadratic_axiom() {
        let s = QuadSpace::Pauli { n: 2 };
        let u = bv("11010");
        let v = bv("01101");
        assert_eq!(s.q(&u.xor(&v)), s.q(&u) ^ s.q(&v) ^ s.f(&u, &v));
    }

    #[test]
    fn sgs_single_elliptic_pair() {
        let s = QuadSpace::Pauli { n: 1 };
        let h = symplectic_gram_schmidt(&[bv("101"), bv("011")], &s);
        assert_eq!(h.pairs.len(), 1);
        assert!(h.radical.is_empty());
        assert!(h.pair_q[0].is_elliptic());
        assert_eq!(space_type(&h), Ok(FormType::Minus));
    }

    #[test]
    fn sgs_two_pairs_n2() {
        let s = QuadSpace::Pauli { n: 2 };
        let vs = [bv("10001"), bv("00101"), bv("01001"), bv("00011")];
        let h = symplectic_gram_schmidt(&vs, &s);
        assert_eq!(h.pairs.len(), 2);
        assert!(h.radical.is_empty());
    }

    #[test]
    fn sgs_with_radical_point() {
        let s = QuadSpace::Pauli { n: 1 };
        let h = symplectic_gram_schmidt(&[bv("101"), bv("011"), bv("001")], &s);
        assert_eq!(h.pairs.len(), 1);
        assert_eq!(h.radical.len(), 1);
        assert!(h.radical_q[0]);
        let info = analyze_radical(&h);
        assert_eq!((info.rad_f_dim, info.rad_q_dim, info.anisotropic), (1, 0, true));
        assert_eq!(space_type(&h), Err(Gf2Error::AnisotropicRadical));
    }

    #[test]
    fn radical_rebase() {
        // two radical vectors with Q = (1,1) rebase to (1,0)
        let basis = HyperbolicBasis {
            pairs: vec![],
            radical: vec![bv("001"), bv("111")],
            pair_q: vec![],
            radical_q: vec![true, true],
        };
        let info = analyze_radical(&basis);
        assert_eq!((info.rad_f_dim, info.rad_q_dim, info.anisotropic), (2, 1, true));
        assert_eq!(info.rebased_q, vec![true, false]);
        assert_eq!(info.rebased[1], bv("001").xor(&bv("111")));
    }

    #[test]
    fn split_space_types() {
        // one elliptic pair -> Minus, two -> Plus, elliptic+hyperbolic -> Minus
        let one = QuadSpace::Split { hyper: 0, elliptic: 1 };
        let v0 = bv("10");
        let v1 = bv("01");
        assert!(one.q(&v0) && one.q(&v1) && one.q(&v0.xor(&v1)));
        let h = symplectic_gram_schmidt(&[v0, v1], &one);
        assert_eq!(space_type(&h), Ok(FormType::Minus));

        let two = QuadSpace::Split { hyper: 0, elliptic: 2 };
        let basis: Vec<BitVector> = (0..4)
            .map(|i| {
                let mut v = BitVector::zeros(4);
                v.set(i, true);
                v
            })
            .collect();
        let h = symplectic_gram_schmidt(&basis, &two);
        assert_eq!(space_type(&h), Ok(FormType::Plus));

        let mixed = QuadSpace::Split { hyper: 1, elliptic: 1 };
        let basis: Vec<BitVector> = (0..4)
            .map(|i| {
                let mut v = BitVector::zeros(4);
                v.set(i, true);
                v
            })
            .collect();
        let h = symplectic_gram_schmidt(&basis, &mixed);
        assert_eq!(space_type(&h), Ok(FormType::Minus));
    }

    #[test]
    fn extract_across_words() {
        let mut v = BitVector::zeros(130);
        v.set(0, true);
        v.set(63, true);
        v.set(64, true);
        v.set(129, true);
        let mid = v.extract(63, 67);
        assert!(mid.get(0) && mid.get(1) && mid.get(66));
        assert_eq!(mid.count_ones(), 3);
    }
}
