//! Exact arithmetic in the Pauli group and its image in the GF(2) space.
//!
//! A Pauli string is stored as `i^c · ⊗_j X^{a_j} Z^{b_j}` with `c` mod 4;
//! the letter Y at position j is `a_j = b_j = 1` with `c` bumped by one
//! (Y = iXZ). Dropping `c` to `c mod 2` gives the (2n+1)-bit vector on which
//! the quadratic form lives; two strings commute exactly when the polar form
//! of their vectors vanishes.

use crate::gf2::{BitVector, QuadSpace};

/// An element of the Pauli group on `n` qubits: `i^c · ⊗ X^{a_j} Z^{b_j}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    n: usize,
    a: BitVector,
    b: BitVector,
    c: u8,
}

/// The (2n+1)-bit image of a Pauli string, laid out `(a | b | r)` with
/// `r = c mod 2`. Phase information beyond the sign of the square is gone.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliVector {
    n: usize,
    coords: BitVector,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PauliError {
    #[error("unknown character {0:?} in Pauli token")]
    UnknownLetter(char),
    #[error("token has {got} letters but n = {n}")]
    TooManyLetters { got: usize, n: usize },
    #[error("empty Pauli word")]
    EmptyWord,
    #[error("mismatched qubit counts: {0} vs {1}")]
    MismatchedN(usize, usize),
    #[error("generator is a phase of the identity, not a Lie-algebra element")]
    IdentityGenerator,
    #[error("generator {0:?} is Hermitian (squares to +1); pass its i-multiple")]
    HermitianGenerator(String),
}

impl PauliString {
    pub fn new(n: usize, a: BitVector, b: BitVector, c: u8) -> Self {
        assert_eq!(a.len(), n);
        assert_eq!(b.len(), n);
        PauliString { n, a, b, c: c % 4 }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> &BitVector {
        &self.a
    }

    pub fn b(&self) -> &BitVector {
        &self.b
    }

    pub fn c(&self) -> u8 {
        self.c
    }

    pub fn identity(n: usize) -> Self {
        PauliString::new(n, BitVector::zeros(n), BitVector::zeros(n), 0)
    }

    /// Parses an optional phase prefix (`+`, `-`, `i`, `+i`, `-i`) followed
    /// by letters in `I X Y Z` (`.` is accepted as an alias for `I`).
    /// With `n` given, shorter words are right-padded with identities.
    pub fn parse(text: &str, n: Option<usize>) -> Result<Self, PauliError> {
        let text = text.trim();
        let mut c: u8 = 0;
        let mut rest = text;
        for (prefix, phase) in [("-i", 3), ("+i", 1), ("-", 2), ("+", 0), ("i", 1)] {
            if let Some(tail) = rest.strip_prefix(prefix) {
                c = phase;
                rest = tail;
                break;
            }
        }
        if rest.is_empty() {
            return Err(PauliError::EmptyWord);
        }
        let mut letters = Vec::new();
        for ch in rest.chars() {
            match ch {
                'I' | '.' => letters.push((false, false)),
                'X' => letters.push((true, false)),
                'Z' => letters.push((false, true)),
                'Y' => {
                    letters.push((true, true));
                    c = (c + 1) % 4;
                }
                other => return Err(PauliError::UnknownLetter(other)),
            }
        }
        let n = match n {
            None => letters.len(),
            Some(n) => {
                if letters.len() > n {
                    return Err(PauliError::TooManyLetters {
                        got: letters.len(),
                        n,
                    });
                }
                n
            }
        };
        let mut a = BitVector::zeros(n);
        let mut b = BitVector::zeros(n);
        for (j, &(aj, bj)) in letters.iter().enumerate() {
            a.set(j, aj);
            b.set(j, bj);
        }
        Ok(PauliString::new(n, a, b, c))
    }

    /// Canonical token: Y is re-extracted wherever `a_j = b_j = 1`, and the
    /// displayed phase prefix is adjusted accordingly (each XZ → Y removes a
    /// factor of i, i.e. adds 3 to the exponent).
    pub fn render(&self) -> String {
        let mut y_count: u8 = 0;
        let mut word = String::with_capacity(self.n);
        for j in 0..self.n {
            match (self.a.get(j), self.b.get(j)) {
                (false, false) => word.push('I'),
                (true, false) => word.push('X'),
                (false, true) => word.push('Z'),
                (true, true) => {
                    word.push('Y');
                    y_count = (y_count + 1) % 4;
                }
            }
        }
        let shown = (self.c + 3 * y_count) % 4;
        let prefix = ["", "i", "-", "-i"][shown as usize];
        format!("{prefix}{word}")
    }

    pub fn multiply(&self, q: &PauliString) -> Result<PauliString, PauliError> {
        if self.n != q.n {
            return Err(PauliError::MismatchedN(self.n, q.n));
        }
        // moving Z^{b_p} past X^{a_q} costs (-1)^{b_p·a_q}
        let swap = if self.b.dot(&q.a) { 2 } else { 0 };
        Ok(PauliString::new(
            self.n,
            self.a.xor(&q.a),
            self.b.xor(&q.b),
            (self.c + q.c + swap) % 4,
        ))
    }

    /// `[p, q]` under the half-normalized bracket: equals `pq` when the two
    /// anticommute, and vanishes (None) when they commute.
    pub fn commutator(&self, q: &PauliString) -> Result<Option<PauliString>, PauliError> {
        if self.n != q.n {
            return Err(PauliError::MismatchedN(self.n, q.n));
        }
        if self.b.dot(&q.a) ^ q.b.dot(&self.a) {
            Ok(Some(self.multiply(q)?))
        } else {
            Ok(None)
        }
    }

    /// Sign of the square: `p² = (−1)^{(a·b + c) mod 2} · I`.
    pub fn square_is_minus_identity(&self) -> bool {
        self.a.dot(&self.b) ^ (self.c % 2 == 1)
    }

    pub fn to_vector(&self) -> PauliVector {
        let mut coords = BitVector::zeros(2 * self.n + 1);
        for j in 0..self.n {
            coords.set(j, self.a.get(j));
            coords.set(self.n + j, self.b.get(j));
        }
        coords.set(2 * self.n, self.c % 2 == 1);
        PauliVector {
            n: self.n,
            coords,
        }
    }
}

impl std::fmt::Debug for PauliString {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl PauliVector {
    pub fn new(n: usize, coords: BitVector) -> Self {
        assert_eq!(coords.len(), 2 * n + 1);
        PauliVector { n, coords }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &BitVector {
        &self.coords
    }

    pub fn space(n: usize) -> QuadSpace {
        QuadSpace::Pauli { n }
    }

    pub fn q(&self) -> bool {
        Self::space(self.n).q(&self.coords)
    }

    pub fn f(&self, other: &PauliVector) -> bool {
        debug_assert_eq!(self.n, other.n);
        Self::space(self.n).f(&self.coords, &other.coords)
    }

    pub fn add(&self, other: &PauliVector) -> PauliVector {
        debug_assert_eq!(self.n, other.n);
        PauliVector {
            n: self.n,
            coords: self.coords.xor(&other.coords),
        }
    }

    /// The distinguished radical point `(0 | 0 | 1)`, the image of ±i·I.
    pub fn radical_point(n: usize) -> PauliVector {
        let mut coords = BitVector::zeros(2 * n + 1);
        coords.set(2 * n, true);
        PauliVector { n, coords }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }

    /// The representative Pauli string with phase exponent in {0, 1}.
    pub fn to_string_rep(&self) -> PauliString {
        let a = self.coords.extract(0, self.n);
        let b = self.coords.extract(self.n, self.n);
        let c = if self.coords.get(2 * self.n) { 1 } else { 0 };
        PauliString::new(self.n, a, b, c)
    }
}

impl std::fmt::Debug for PauliVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_string_rep().render())
    }
}

/// Evaluates `f(u, v)`, `Q(u)` and `Q(v)` in one call.
pub fn eval_forms(u: &PauliVector, v: &PauliVector) -> Result<(bool, bool, bool), PauliError> {
    if u.n != v.n {
        return Err(PauliError::MismatchedN(u.n, v.n));
    }
    Ok((u.f(v), u.q(), v.q()))
}

/// A parsed generator set ready for classification.
pub struct PreparedGenerators {
    pub vectors: Vec<PauliVector>,
    /// Indices (into the input) of generators that were Hermitian and were
    /// replaced by their i-multiple.
    pub lifted: Vec<usize>,
    /// Indices dropped as duplicates (same vector as an earlier generator).
    pub dropped: Vec<usize>,
}

/// Vectorizes generators: rejects phases of the identity, lifts Hermitian
/// inputs to their anti-Hermitian i-multiple (or rejects them when `strict`),
/// and deduplicates by vector keeping first occurrences.
pub fn prepare_generators(
    gens: &[PauliString],
    strict: bool,
) -> Result<PreparedGenerators, PauliError> {
    let mut vectors: Vec<PauliVector> = Vec::new();
    let mut lifted = Vec::new();
    let mut dropped = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if g.a.is_zero() && g.b.is_zero() {
            return Err(PauliError::IdentityGenerator);
        }
        let mut v = g.to_vector();
        if !v.q() {
            if strict {
                return Err(PauliError::HermitianGenerator(g.render()));
            }
            let mut coords = v.coords.clone();
            coords.set(2 * g.n, !coords.get(2 * g.n));
            v = PauliVector::new(g.n, coords);
            lifted.push(i);
        }
        if vectors.contains(&v) {
            dropped.push(i);
        } else {
            vectors.push(v);
        }
    }
    Ok(PreparedGenerators {
        vectors,
        lifted,
        dropped,
    })
}
