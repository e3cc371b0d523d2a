//! Brute-force reference semantics, independent of the classifier.
//!
//! Everything here works by explicit enumeration: geometric closure under
//! elliptic lines (the set of Pauli strings spanning the generated algebra),
//! the commutator graph on all non-isotropic points, Cartan splits checked
//! pair by pair, and the catalog of forbidden 6-vertex graphs obtained by
//! enumerating spanning sextuples of a minus-type 6-space.

use std::collections::{HashMap, HashSet};

use crate::gf2::{BitVector, Echelon, QuadSpace};
use crate::graphs::{connected_components, iso_small, recognize_root, Graph};
use crate::pauli::PauliVector;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("closure exceeded the cap of {cap} points")]
    CapExceeded { cap: usize },
    #[error("generator is isotropic or the central radical point")]
    InvalidGenerator,
    #[error("n = {0} too large for exhaustive enumeration (max {1})")]
    TooLarge(usize, usize),
    #[error("tree closure has {got} points, expected {expected}")]
    TreeSize { expected: usize, got: usize },
}

/// A set of non-isotropic points closed under elliptic lines.
#[derive(Clone, Debug)]
pub struct ClosureSet {
    pub n: usize,
    /// Sorted, deduplicated points.
    pub points: Vec<PauliVector>,
}

impl ClosureSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &PauliVector) -> bool {
        self.points.binary_search(p).is_ok()
    }
}

/// Least fixpoint of `u, v anticommuting → u + v`, by breadth-first
/// saturation. Every generator must be a point: `Q = 1` and not the image of
/// `±i·identity`.
pub fn closure(gens: &[PauliVector], cap: usize) -> Result<ClosureSet, OracleError> {
    let n = match gens.first() {
        None => return Ok(ClosureSet { n: 0, points: Vec::new() }),
        Some(g) => g.n(),
    };
    let radical = PauliVector::radical_point(n);
    let mut seen: HashSet<PauliVector> = HashSet::new();
    let mut members: Vec<PauliVector> = Vec::new();
    let mut queue: Vec<PauliVector> = Vec::new();
    for g in gens {
        if !g.q() || *g == radical {
            return Err(OracleError::InvalidGenerator);
        }
        if seen.insert(g.clone()) {
            queue.push(g.clone());
        }
    }
    let mut next = 0;
    while next < queue.len() {
        let p = queue[next].clone();
        next += 1;
        for m in &members {
            if p.f(m) {
                let s = p.add(m);
                if seen.insert(s.clone()) {
                    queue.push(s.clone());
                    if seen.len() > cap {
                        return Err(OracleError::CapExceeded { cap });
                    }
                }
            }
        }
        members.push(p);
    }
    members.sort();
    Ok(ClosureSet { n, points: members })
}

/// Closure of spanning-tree edge vectors, asserted to have exactly
/// `k(k-1)/2` points (the point count of the pair geometry on `k` symbols).
pub fn enumerate_t(tree_gens: &[PauliVector], k: usize, cap: usize) -> Result<ClosureSet, OracleError> {
    let s = closure(tree_gens, cap)?;
    let expected = k * (k - 1) / 2;
    if s.len() != expected {
        return Err(OracleError::TreeSize { expected, got: s.len() });
    }
    Ok(s)
}

/// Result of checking a claimed classification against the closure oracle.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub pass: bool,
    pub closure_size: usize,
    pub claimed_dim: Option<u128>,
    /// Per component: (claimed copies, observed equivalence-class size).
    pub component_copies: Vec<(u128, usize)>,
    pub failures: Vec<String>,
}

/// Checks a claimed classification against brute-force closure: the closure
/// size must equal the claimed total dimension, every generator must be a
/// closure member, and within each component the equivalence classes of the
/// closed point set must all have size equal to the claimed copy count.
pub fn verify_classification(
    c: &crate::classifier::Classification,
    cap: usize,
) -> Result<VerifyReport, OracleError> {
    let full = closure(&c.vectors, cap)?;
    let mut failures = Vec::new();
    if c.total_dim != Some(full.len() as u128) {
        failures.push(format!(
            "closure has {} points but claimed dimension is {:?}",
            full.len(),
            c.total_dim
        ));
    }
    for g in &c.vectors {
        if !full.contains(g) {
            failures.push(format!("generator {g:?} missing from closure"));
        }
    }
    let mut component_copies = Vec::new();
    for comp in &c.components {
        let gens: Vec<PauliVector> = comp
            .generator_indices
            .iter()
            .map(|&i| c.vectors[i].clone())
            .collect();
        let s = closure(&gens, cap)?;
        let classes = crate::classifier::equiv_classes(&s.points);
        let sizes: Vec<usize> = classes.iter().map(|cl| cl.len()).collect();
        let copies = comp.summand.copies().unwrap_or(0);
        let class_size = sizes.first().copied().unwrap_or(0);
        component_copies.push((copies, class_size));
        if sizes.iter().any(|&s| s != class_size) {
            failures.push("equivalence classes of unequal size".to_string());
        } else if copies != class_size as u128 {
            failures.push(format!(
                "component claims {copies} copies but class size is {class_size}"
            ));
        }
    }
    Ok(VerifyReport {
        pass: failures.is_empty(),
        closure_size: full.len(),
        claimed_dim: c.total_dim,
        component_copies,
        failures,
    })
}

/// All vectors with `Q = 1` in a coordinate space (no radical filtering).
pub fn enumerate_q1(space: &QuadSpace) -> Vec<BitVector> {
    let dim = space.dim();
    assert!(dim <= 24, "enumeration space too large");
    let mut out = Vec::new();
    for code in 0u32..(1 << dim) {
        let mut v = BitVector::zeros(dim);
        for i in 0..dim {
            if (code >> i) & 1 == 1 {
                v.set(i, true);
            }
        }
        if space.q(&v) {
            out.push(v);
        }
    }
    out
}

/// Connected components of the commutator graph: vertices are all `Q = 1`
/// vectors except the central radical point; `p ~ p + g` whenever `p`
/// anticommutes with the generator `g`. Only feasible for small `n`.
pub fn commutator_graph(gens: &[PauliVector], n: usize) -> Result<Vec<Vec<PauliVector>>, OracleError> {
    const MAX_N: usize = 6;
    if n > MAX_N {
        return Err(OracleError::TooLarge(n, MAX_N));
    }
    let space = QuadSpace::Pauli { n };
    let radical = PauliVector::radical_point(n);
    let verts: Vec<PauliVector> = enumerate_q1(&space)
        .into_iter()
        .map(|c| PauliVector::new(n, c))
        .filter(|p| *p != radical)
        .collect();
    let index: HashMap<&PauliVector, usize> = verts.iter().zip(0..).collect();

    // union-find
    let mut parent: Vec<usize> = (0..verts.len()).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (i, p) in verts.iter().enumerate() {
        for g in gens {
            if p.f(g) {
                let q = p.add(g);
                let j = index[&q];
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut comps: HashMap<usize, Vec<PauliVector>> = HashMap::new();
    for (i, p) in verts.iter().enumerate() {
        let r = find(&mut parent, i);
        comps.entry(r).or_default().push(p.clone());
    }
    let mut out: Vec<Vec<PauliVector>> = comps.into_values().collect();
    for c in &mut out {
        c.sort();
    }
    out.sort();
    Ok(out)
}

/// A point set split by a hyperplane functional, with the bracket-membership
/// check done pair by pair.
#[derive(Clone, Debug)]
pub struct CartanSplit {
    pub functional: BitVector,
    pub l_part: Vec<PauliVector>,
    pub m_part: Vec<PauliVector>,
    pub verified: bool,
    /// Set when the hyperplane misses the point set entirely.
    pub l_empty_warning: bool,
}

/// Splits points by the functional value (kernel side first) and verifies by
/// exhaustion that anticommuting pairs land on the correct side: same-side
/// pairs produce kernel-side points, mixed pairs produce the other side.
pub fn cartan_split(points: &ClosureSet, functional: &BitVector) -> CartanSplit {
    let mut l_part = Vec::new();
    let mut m_part = Vec::new();
    for p in &points.points {
        if functional.dot(p.coords()) {
            m_part.push(p.clone());
        } else {
            l_part.push(p.clone());
        }
    }
    let mut verified = true;
    for (i, p) in points.points.iter().enumerate() {
        for q in &points.points[i + 1..] {
            if !p.f(q) {
                continue;
            }
            let s = p.add(q);
            let side_p = functional.dot(p.coords());
            let side_q = functional.dot(q.coords());
            let side_s = functional.dot(s.coords());
            if side_s != (side_p ^ side_q) {
                verified = false;
            }
        }
    }
    CartanSplit {
        functional: functional.clone(),
        l_empty_warning: l_part.is_empty() && !points.is_empty(),
        l_part,
        m_part,
        verified,
    }
}

/// One isomorphism class of forbidden graphs, with a realizing sextuple of
/// vectors in the minus-type 6-space.
#[derive(Clone, Debug)]
pub struct ForbiddenGraph {
    pub graph: Graph,
    pub sextuple: Vec<BitVector>,
}

/// Enumerates all spanning sextuples of a nondegenerate minus-type 6-space,
/// collects their anticommutation (Gram) graphs, and deduplicates the
/// connected ones up to isomorphism. The result is asserted to be exactly 32
/// classes of connected 6-vertex graphs.
pub fn catalog_forbidden() -> Vec<ForbiddenGraph> {
    let space = QuadSpace::Split { hyper: 0, elliptic: 3 };
    let points = enumerate_q1(&space);
    assert_eq!(points.len(), 36, "minus-type 6-space must have 36 points");

    let mut reps: Vec<ForbiddenGraph> = Vec::new();
    // cheap invariant → candidate rep indices, to keep iso tests rare
    let mut buckets: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();

    let mut chosen: Vec<usize> = Vec::new();
    let mut stack: Vec<Echelon> = vec![Echelon::new(6)];
    // iterative depth-first enumeration of independent 6-subsets
    fn descend(
        points: &[BitVector],
        space: &QuadSpace,
        chosen: &mut Vec<usize>,
        stack: &mut Vec<Echelon>,
        start: usize,
        reps: &mut Vec<ForbiddenGraph>,
        buckets: &mut HashMap<Vec<usize>, Vec<usize>>,
    ) {
        if chosen.len() == 6 {
            // independent by construction, hence spanning
            let sextuple: Vec<BitVector> = chosen.iter().map(|&i| points[i].clone()).collect();
            let mut g = Graph::new(6);
            for i in 0..6 {
                for j in i + 1..6 {
                    if space.f(&sextuple[i], &sextuple[j]) {
                        g.add_edge(i, j);
                    }
                }
            }
            if connected_components(&g).len() != 1 {
                return;
            }
            let mut inv: Vec<usize> = (0..6).map(|v| g.degree(v)).collect();
            inv.sort();
            inv.push(g.edge_count());
            let bucket = buckets.entry(inv).or_default();
            if bucket.iter().any(|&r| iso_small(&reps[r].graph, &g)) {
                return;
            }
            bucket.push(reps.len());
            reps.push(ForbiddenGraph { graph: g, sextuple });
            return;
        }
        let need = 6 - chosen.len();
        for i in start..points.len() {
            if points.len() - i < need {
                break;
            }
            let mut e = stack.last().unwrap().clone();
            if !e.add(&points[i]) {
                continue;
            }
            chosen.push(i);
            stack.push(e);
            descend(points, space, chosen, stack, i + 1, reps, buckets);
            stack.pop();
            chosen.pop();
        }
    }
    descend(&points, &space, &mut chosen, &mut stack, 0, &mut reps, &mut buckets);

    assert_eq!(reps.len(), 32, "forbidden catalog must have 32 classes");
    for r in &reps {
        assert!(recognize_root(&r.graph).is_none(), "catalog graph has a root");
    }
    reps
}

/// Linear isometry from the minus-type 6-space into the 3-qubit space:
/// the i-th elliptic pair `(e_{2i}, e_{2i+1})` maps to
/// `(x_i + r, z_i + r)` where `r` is the central radical point.
pub fn realize_in_pauli(w: &BitVector) -> PauliVector {
    assert_eq!(w.len(), 6);
    let n = 3;
    let mut coords = BitVector::zeros(2 * n + 1);
    for i in 0..3 {
        if w.get(2 * i) {
            // x_i + r
            coords.set(i, !coords.get(i));
            coords.set(2 * n, !coords.get(2 * n));
        }
        if w.get(2 * i + 1) {
            // z_i + r
            coords.set(n + i, !coords.get(n + i));
            coords.set(2 * n, !coords.get(2 * n));
        }
    }
    PauliVector::new(n, coords)
}
