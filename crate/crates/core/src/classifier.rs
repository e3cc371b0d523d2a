//! The classification pipeline: from a generator set to the direct-sum
//! decomposition of the Lie algebra it generates.
//!
//! Each connected component of the frustration graph is dispatched to one of
//! two branches. When the component is the line graph of a multigraph on k
//! vertices, the component contributes copies of so(k) ("line" branch); the
//! copy count is `2^{dim W - dim W₀}` up to a boundary case resolved below.
//! Otherwise the quadratic space spanned by the component decides between
//! su, so(2^k) and sp(2^{k-1}) ("natural" branch). Exceptional low-rank
//! coincidences (so(3) ≅ su(2) etc.) are rewritten by `canonicalize`.

use serde::Serialize;

use crate::gf2::{
    analyze_radical, space_type, symplectic_gram_schmidt, BitVector, Echelon, FormType, QuadSpace,
};
use crate::graphs::{connected_components, frustration_graph, recognize_root, RootCertificate};
use crate::oracle;
use crate::pauli::{prepare_generators, PauliError, PauliString, PauliVector};

/// Default point cap for closure-based resolution of the boundary case.
pub const DEFAULT_CLOSURE_CAP: usize = 1_000_000;

#[derive(Debug, thiserror::Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Pauli(#[from] PauliError),
    #[error("no generators given")]
    EmptyInput,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum SummandKind {
    /// su(2^k), dimension 4^k - 1.
    Su,
    /// so(2^k), dimension 2^{k-1}(2^k - 1).
    SoPow2,
    /// sp(2^{k-1}), dimension 2^{k-1}(2^k + 1).
    Sp,
    /// so(k), dimension k(k-1)/2.
    SoN,
}

/// One summand shape: `2^log2_copies` copies of the algebra named by
/// `(kind, k)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Summand {
    pub kind: SummandKind,
    pub k: usize,
    pub log2_copies: u32,
}

impl Summand {
    /// Dimension of one copy; None on overflow.
    pub fn dim_per_copy(&self) -> Option<u128> {
        let k = self.k as u32;
        match self.kind {
            SummandKind::Su => 1u128.checked_shl(2 * k)?.checked_sub(1),
            SummandKind::SoPow2 => {
                let h = 1u128.checked_shl(k.checked_sub(1)?)?;
                let f = 1u128.checked_shl(k)?.checked_sub(1)?;
                h.checked_mul(f)
            }
            SummandKind::Sp => {
                let h = 1u128.checked_shl(k.checked_sub(1)?)?;
                let f = 1u128.checked_shl(k)?.checked_add(1)?;
                h.checked_mul(f)
            }
            SummandKind::SoN => Some(self.k as u128 * (self.k as u128 - 1) / 2),
        }
    }

    pub fn copies(&self) -> Option<u128> {
        1u128.checked_shl(self.log2_copies)
    }

    pub fn total_dim(&self) -> Option<u128> {
        self.dim_per_copy()?.checked_mul(self.copies()?)
    }

    /// Algebra name for one copy, e.g. "su(8)", "sp(4)", "so(6)". Powers too
    /// large to print numerically fall back to exponent notation. With
    /// `alias_u1`, the 1-dimensional so(2) is shown as "u(1)".
    pub fn label_with_alias(&self, alias_u1: bool) -> String {
        fn pow2(e: u32) -> String {
            if e < 64 {
                format!("{}", 1u64 << e)
            } else {
                format!("2^{e}")
            }
        }
        match self.kind {
            SummandKind::Su => format!("su({})", pow2(self.k as u32)),
            SummandKind::SoPow2 => format!("so({})", pow2(self.k as u32)),
            SummandKind::Sp => format!("sp({})", pow2(self.k as u32 - 1)),
            SummandKind::SoN if self.k == 2 && alias_u1 => "u(1)".to_string(),
            SummandKind::SoN => format!("so({})", self.k),
        }
    }

    pub fn label(&self) -> String {
        self.label_with_alias(false)
    }

    /// Rewrites the exceptional low-rank coincidences:
    /// so(3) → su(2); so(5) → sp(2); so(6) → su(4); so(4) → su(2) ⊕ su(2)
    /// (one extra doubling); sp(2^0) → su(2). Idempotent and
    /// dimension-preserving.
    pub fn canonical(&self) -> Summand {
        let r = self.log2_copies;
        match (self.kind, self.k) {
            (SummandKind::SoN, 3) => Summand { kind: SummandKind::Su, k: 1, log2_copies: r },
            (SummandKind::SoN, 4) => Summand { kind: SummandKind::Su, k: 1, log2_copies: r + 1 },
            (SummandKind::SoN, 5) => Summand { kind: SummandKind::Sp, k: 2, log2_copies: r },
            (SummandKind::SoN, 6) => Summand { kind: SummandKind::Su, k: 2, log2_copies: r },
            (SummandKind::Sp, 1) => Summand { kind: SummandKind::Su, k: 1, log2_copies: r },
            _ => *self,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Branch {
    Line,
    Natural,
    Isolated,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum ResolvedBy {
    Formula,
    Closure,
}

/// Branch-specific measurements backing a component's summand.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Diagnostics {
    pub omega_size: Option<usize>,
    pub omega_prime_size: Option<u32>,
    pub dim_w: Option<usize>,
    pub dim_w0: Option<usize>,
    pub rad_f_dim: Option<usize>,
    pub rad_q_dim: Option<usize>,
    pub form_type: Option<FormType>,
    pub resolved_by: Option<ResolvedBy>,
}

#[derive(Clone, Debug)]
pub struct ComponentReport {
    /// Indices into the deduplicated generator vector list.
    pub generator_indices: Vec<usize>,
    pub branch: Branch,
    pub summand: Summand,
    pub diagnostics: Diagnostics,
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub n: usize,
    /// Deduplicated, anti-Hermitian generator vectors in input order.
    pub vectors: Vec<PauliVector>,
    pub components: Vec<ComponentReport>,
    /// None when the dimension overflows 128 bits.
    pub total_dim: Option<u128>,
    /// Input indices lifted from Hermitian to anti-Hermitian.
    pub lifted: Vec<usize>,
    /// Input indices dropped as duplicates.
    pub dropped: Vec<usize>,
}

impl Classification {
    pub fn summands(&self) -> Vec<Summand> {
        self.components.iter().map(|c| c.summand).collect()
    }

    pub fn canonical_summands(&self) -> Vec<Summand> {
        self.components.iter().map(|c| c.summand.canonical()).collect()
    }

    pub fn decomposition_string(&self) -> String {
        render_sum(&self.summands(), false)
    }

    pub fn canonical_string(&self) -> String {
        render_sum(&self.canonical_summands(), true)
    }
}

/// Renders a direct sum, expanding copy counts (up to 64 terms; beyond that
/// a multiplier prefix is used).
fn render_sum(summands: &[Summand], alias_u1: bool) -> String {
    let mut parts = Vec::new();
    for s in summands {
        let label = s.label_with_alias(alias_u1);
        if s.log2_copies <= 6 {
            for _ in 0..(1u64 << s.log2_copies) {
                parts.push(label.clone());
            }
        } else {
            parts.push(format!("2^{}·{}", s.log2_copies, label));
        }
    }
    parts.join(" ⊕ ")
}

#[derive(Clone, Copy, Debug)]
pub struct ClassifyOptions {
    /// Reject Hermitian generators instead of lifting them.
    pub strict: bool,
    /// Point budget for closure-based resolution of the boundary case.
    pub closure_cap: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            strict: false,
            closure_cap: DEFAULT_CLOSURE_CAP,
        }
    }
}

pub fn classify(gens: &[PauliString]) -> Result<Classification, ClassifyError> {
    classify_opts(gens, &ClassifyOptions::default())
}

pub fn classify_opts(
    gens: &[PauliString],
    opts: &ClassifyOptions,
) -> Result<Classification, ClassifyError> {
    let n = gens.first().ok_or(ClassifyError::EmptyInput)?.n();
    for g in gens {
        if g.n() != n {
            return Err(PauliError::MismatchedN(n, g.n()).into());
        }
    }
    let prep = prepare_generators(gens, opts.strict)?;
    let vectors = prep.vectors;
    let graph = frustration_graph(&vectors);
    let comps = connected_components(&graph);

    let mut components = Vec::new();
    for comp in comps {
        let vecs: Vec<PauliVector> = comp.iter().map(|&i| vectors[i].clone()).collect();
        let report = if comp.len() == 1 {
            ComponentReport {
                generator_indices: comp,
                branch: Branch::Isolated,
                summand: Summand {
                    kind: SummandKind::SoN,
                    k: 2,
                    log2_copies: 0,
                },
                diagnostics: Diagnostics {
                    omega_size: Some(2),
                    omega_prime_size: Some(0),
                    dim_w: Some(1),
                    dim_w0: Some(1),
                    ..Default::default()
                },
            }
        } else {
            let sub = graph.induced(&comp);
            match recognize_root(&sub) {
                Some(cert) => classify_line_component(&vecs, comp, &cert, opts.closure_cap),
                None => classify_natural_component(&vecs, comp),
            }
        };
        components.push(report);
    }

    let total_dim = components
        .iter()
        .try_fold(0u128, |acc, c| acc.checked_add(c.summand.total_dim()?));
    Ok(Classification {
        n,
        vectors,
        components,
        total_dim,
        lifted: prep.lifted,
        dropped: prep.dropped,
    })
}

fn union_find_root(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Line branch: the component is the line graph of a k-vertex root. The
/// summand is so(k) with `2^ω'` copies where ω' = dim W − dim W₀ except in
/// the boundary case 4 | k with independent tree vectors; there ω' can also
/// be one higher, decided exactly by closure when affordable and otherwise
/// by testing whether some generator lands in the shifted tree geometry.
fn classify_line_component(
    vecs: &[PauliVector],
    indices: Vec<usize>,
    cert: &RootCertificate,
    cap: usize,
) -> ComponentReport {
    let n = vecs[0].n();
    let space = QuadSpace::Pauli { n };
    let dim = space.dim();
    let k = cert.root.vertex_count();
    debug_assert_ne!(k, 4);

    // spanning tree of the root, taking lowest generator indices first
    let mut parent: Vec<usize> = (0..k).collect();
    let mut tree: Vec<usize> = Vec::new();
    for (i, &(u, v)) in cert.vertex_to_edge.iter().enumerate() {
        let (a, b) = (union_find_root(&mut parent, u), union_find_root(&mut parent, v));
        if a != b {
            parent[a] = b;
            tree.push(i);
        }
    }
    debug_assert_eq!(tree.len(), k - 1);

    let mut ech_w = Echelon::new(dim);
    for v in vecs {
        ech_w.add(v.coords());
    }
    let dim_w = ech_w.rank();
    let mut ech_w0 = Echelon::new(dim);
    for &i in &tree {
        ech_w0.add(vecs[i].coords());
    }
    let dim_w0 = ech_w0.rank();
    let d = (dim_w - dim_w0) as u32;

    let boundary = k % 4 == 0 && dim_w0 == k - 1;
    let (omega_prime, resolved_by) = if !boundary {
        (d, ResolvedBy::Formula)
    } else {
        resolve_boundary(vecs, &tree, &ech_w0, cert, &space, d, k, cap)
    };

    ComponentReport {
        generator_indices: indices,
        branch: Branch::Line,
        summand: Summand {
            kind: SummandKind::SoN,
            k,
            log2_copies: omega_prime,
        },
        diagnostics: Diagnostics {
            omega_size: Some(k),
            omega_prime_size: Some(omega_prime),
            dim_w: Some(dim_w),
            dim_w0: Some(dim_w0),
            resolved_by: Some(resolved_by),
            ..Default::default()
        },
    }
}

#[allow(clippy::too_many_arguments)]
fn resolve_boundary(
    vecs: &[PauliVector],
    tree: &[usize],
    ech_w0: &Echelon,
    cert: &RootCertificate,
    space: &QuadSpace,
    d: u32,
    k: usize,
    cap: usize,
) -> (u32, ResolvedBy) {
    let per_copy = (k as u128) * (k as u128 - 1) / 2;
    let predicted = per_copy.checked_shl(d + 1);
    if let Some(p) = predicted {
        if p <= cap as u128 {
            if let Ok(s) = oracle::closure(vecs, cap) {
                let size = s.len() as u128;
                debug_assert_eq!(size % per_copy, 0);
                let ratio = size / per_copy;
                debug_assert!(ratio.is_power_of_two());
                return (ratio.trailing_zeros(), ResolvedBy::Closure);
            }
        }
    }
    (
        if generator_in_shifted_tree(vecs, tree, ech_w0, cert, space) {
            d + 1
        } else {
            d
        },
        ResolvedBy::Formula,
    )
}

/// True when some generator vector lies in `r₀ + S₀`, where S₀ is the point
/// set generated by the tree vectors and r₀ spans the isotropic radical of Q
/// on their span. Membership in S₀ is decided without enumeration: a vector
/// is a tree point exactly when its tree coordinates select the edge set of
/// a path in the root's spanning tree.
fn generator_in_shifted_tree(
    vecs: &[PauliVector],
    tree: &[usize],
    ech_w0: &Echelon,
    cert: &RootCertificate,
    space: &QuadSpace,
) -> bool {
    let tree_vecs: Vec<BitVector> = tree.iter().map(|&i| vecs[i].coords().clone()).collect();
    let h = symplectic_gram_schmidt(&tree_vecs, space);
    let info = analyze_radical(&h);
    let iso: Vec<BitVector> = info
        .rebased
        .iter()
        .zip(&info.rebased_q)
        .filter(|(_, &q)| !q)
        .map(|(r, _)| r.clone())
        .collect();
    // enumerate nonzero vectors of the isotropic radical (tiny in practice)
    if iso.len() > 16 {
        return false;
    }
    for code in 1u32..(1 << iso.len()) {
        let mut r0 = BitVector::zeros(space.dim());
        for (i, r) in iso.iter().enumerate() {
            if (code >> i) & 1 == 1 {
                r0.xor_assign(r);
            }
        }
        for v in vecs {
            let w = v.coords().xor(&r0);
            if let Some(coords) = ech_w0.coordinates(&w) {
                let subset = coords.support();
                if !subset.is_empty() && is_tree_path(cert, tree, &subset) {
                    return true;
                }
            }
        }
    }
    false
}

/// Whether the selected tree edges form a single simple path.
fn is_tree_path(cert: &RootCertificate, tree: &[usize], subset: &[usize]) -> bool {
    use std::collections::HashMap;
    let mut deg: HashMap<usize, usize> = HashMap::new();
    for &pos in subset {
        let (u, v) = cert.vertex_to_edge[tree[pos]];
        *deg.entry(u).or_default() += 1;
        *deg.entry(v).or_default() += 1;
    }
    let leaves = deg.values().filter(|&&d| d == 1).count();
    deg.values().all(|&d| d <= 2) && leaves == 2 && subset.len() == deg.len() - 1
}

/// Natural branch: the span W decides everything. An anisotropic radical
/// gives su(2^k); otherwise the form type gives so(2^k) or sp(2^{k-1}); the
/// copy count is 2^l with l the dimension of the isotropic radical.
fn classify_natural_component(vecs: &[PauliVector], indices: Vec<usize>) -> ComponentReport {
    let n = vecs[0].n();
    let space = QuadSpace::Pauli { n };
    let coords: Vec<BitVector> = vecs.iter().map(|v| v.coords().clone()).collect();
    let h = symplectic_gram_schmidt(&coords, &space);
    let k = h.pairs.len();
    let info = analyze_radical(&h);

    let (summand, form) = if info.anisotropic {
        (
            Summand {
                kind: SummandKind::Su,
                k,
                log2_copies: info.rad_q_dim as u32,
            },
            None,
        )
    } else {
        let t = space_type(&h).expect("radical is isotropic");
        let kind = match t {
            FormType::Plus => SummandKind::SoPow2,
            FormType::Minus => SummandKind::Sp,
        };
        (
            Summand {
                kind,
                k,
                log2_copies: info.rad_q_dim as u32,
            },
            Some(t),
        )
    };

    ComponentReport {
        generator_indices: indices,
        branch: Branch::Natural,
        summand,
        diagnostics: Diagnostics {
            dim_w: Some(h.span_dim()),
            rad_f_dim: Some(info.rad_f_dim),
            rad_q_dim: Some(info.rad_q_dim),
            form_type: form,
            ..Default::default()
        },
    }
}

/// Rewrites every component summand through the exceptional isomorphisms.
/// Idempotent; the total dimension is unchanged.
pub fn canonicalize(c: &Classification) -> Classification {
    let mut out = c.clone();
    for comp in &mut out.components {
        comp.summand = comp.summand.canonical();
    }
    out
}

/// Lexicographically first 6-subset spanning a 6-dimensional subspace on
/// which the polar form is nondegenerate and the form type is minus.
pub fn forbidden_witness(vecs: &[PauliVector]) -> Option<Vec<usize>> {
    let n = vecs.first()?.n();
    let space = QuadSpace::Pauli { n };
    let dim = space.dim();

    fn rec(
        vecs: &[PauliVector],
        space: &QuadSpace,
        start: usize,
        chosen: &mut Vec<usize>,
        ech: &Echelon,
    ) -> Option<Vec<usize>> {
        if chosen.len() == 6 {
            let sub: Vec<BitVector> = chosen.iter().map(|&i| vecs[i].coords().clone()).collect();
            let h = symplectic_gram_schmidt(&sub, space);
            if h.pairs.len() == 3
                && h.radical.is_empty()
                && space_type(&h) == Ok(FormType::Minus)
            {
                return Some(chosen.clone());
            }
            return None;
        }
        let need = 6 - chosen.len();
        for i in start..vecs.len() {
            if vecs.len() - i < need {
                break;
            }
            let mut e = ech.clone();
            if !e.add(vecs[i].coords()) {
                continue;
            }
            chosen.push(i);
            if let Some(w) = rec(vecs, space, i + 1, chosen, &e) {
                return Some(w);
            }
            chosen.pop();
        }
        None
    }
    rec(vecs, &space, 0, &mut Vec::new(), &Echelon::new(dim))
}

/// Partition of points by the radical of Q on their span: two points are
/// equivalent when their sum lies in it. Classes come out in order of first
/// occurrence.
pub fn equiv_classes(points: &[PauliVector]) -> Vec<Vec<usize>> {
    let Some(first) = points.first() else {
        return Vec::new();
    };
    let n = first.n();
    let space = QuadSpace::Pauli { n };
    let coords: Vec<BitVector> = points.iter().map(|p| p.coords().clone()).collect();
    let h = symplectic_gram_schmidt(&coords, &space);
    let info = analyze_radical(&h);
    let radq: Vec<BitVector> = info
        .rebased
        .iter()
        .zip(&info.rebased_q)
        .filter(|(_, &q)| !q)
        .map(|(r, _)| r.clone())
        .collect();
    let ech = Echelon::from_vectors(space.dim(), &radq);

    let mut keys: Vec<BitVector> = Vec::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, p) in points.iter().enumerate() {
        let key = ech.reduce(p.coords());
        match keys.iter().position(|k| *k == key) {
            Some(c) => classes[c].push(i),
            None => {
                keys.push(key);
                classes.push(vec![i]);
            }
        }
    }
    classes
}

/// Full-generation check with the three structural criteria reported.
#[derive(Clone, Debug)]
pub struct FullGenerationReport {
    pub full: bool,
    pub connected: bool,
    pub spans: bool,
    pub witness: Option<Vec<usize>>,
}

/// True exactly when the canonical classification is a single copy of
/// su(2^n).
pub fn check_generates_full(
    gens: &[PauliString],
    n: usize,
) -> Result<FullGenerationReport, ClassifyError> {
    let c = classify(gens)?;
    let full = c.components.len() == 1 && {
        let s = c.components[0].summand.canonical();
        s.kind == SummandKind::Su && s.k == n && s.log2_copies == 0
    };
    let connected = c.components.len() == 1;
    let spans = {
        let mut e = Echelon::new(2 * n + 1);
        for v in &c.vectors {
            e.add(v.coords());
        }
        e.rank() == 2 * n + 1
    };
    let witness = forbidden_witness(&c.vectors);
    Ok(FullGenerationReport {
        full,
        connected,
        spans,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(tokens: &[&str], n: usize) -> Vec<PauliString> {
        tokens
            .iter()
            .map(|t| PauliString::parse(t, Some(n)).unwrap())
            .collect()
    }

    fn qaoa_path(n: usize) -> Vec<PauliString> {
        let mut toks = Vec::new();
        for i in 0..n {
            let mut s = vec!['I'; n];
            s[i] = 'X';
            toks.push(s.into_iter().collect::<String>());
        }
        for i in 0..n - 1 {
            let mut s = vec!['I'; n];
            s[i] = 'Z';
            s[i + 1] = 'Z';
            toks.push(s.into_iter().collect::<String>());
        }
        toks.iter()
            .map(|t| PauliString::parse(t, Some(n)).unwrap())
            .collect()
    }

    fn qaoa_cycle(n: usize) -> Vec<PauliString> {
        let mut gens = qaoa_path(n);
        let mut s = vec!['I'; n];
        s[0] = 'Z';
        s[n - 1] = 'Z';
        gens.push(PauliString::parse(&s.into_iter().collect::<String>(), Some(n)).unwrap());
        gens
    }

    #[test]
    fn path_n3_is_so6() {
        let c = classify(&qaoa_path(3)).unwrap();
        assert_eq!(c.components.len(), 1);
        let s = c.components[0].summand;
        assert_eq!((s.kind, s.k, s.log2_copies), (SummandKind::SoN, 6, 0));
        assert_eq!(c.total_dim, Some(15));
        assert_eq!(c.decomposition_string(), "so(6)");
        assert_eq!(c.canonical_string(), "su(4)");
    }

    #[test]
    fn cycle_n3_is_two_so6() {
        let c = classify(&qaoa_cycle(3)).unwrap();
        let s = c.components[0].summand;
        assert_eq!((s.kind, s.k, s.log2_copies), (SummandKind::SoN, 6, 1));
        assert_eq!(c.total_dim, Some(30));
        assert_eq!(c.decomposition_string(), "so(6) ⊕ so(6)");
    }

    #[test]
    fn path_n4_boundary_single() {
        // k = 8, standard embedding: a single copy of so(8)
        let c = classify(&qaoa_path(4)).unwrap();
        let s = c.components[0].summand;
        assert_eq!((s.kind, s.k, s.log2_copies), (SummandKind::SoN, 8, 0));
        assert_eq!(c.total_dim, Some(28));
    }

    #[test]
    fn cycle_n4_boundary_double() {
        let c = classify(&qaoa_cycle(4)).unwrap();
        let s = c.components[0].summand;
        assert_eq!((s.kind, s.k, s.log2_copies), (SummandKind::SoN, 8, 1));
        assert_eq!(c.total_dim, Some(56));
        assert_eq!(c.components[0].diagnostics.resolved_by, Some(ResolvedBy::Closure));
    }

    #[test]
    fn boundary_formula_path_matches_closure() {
        // force the membership-test path with a tiny closure cap
        let opts = ClassifyOptions { strict: false, closure_cap: 4 };
        let c = classify_opts(&qaoa_cycle(4), &opts).unwrap();
        let s = c.components[0].summand;
        assert_eq!((s.kind, s.k, s.log2_copies), (SummandKind::SoN, 8, 1));
        assert_eq!(c.components[0].diagnostics.resolved_by, Some(ResolvedBy::Formula));

        let c = classify_opts(&qaoa_path(4), &opts).unwrap();
        let s = c.components[0].summand;
        assert_eq!((s.kind, s.k, s.log2_copies), (SummandKind::SoN, 8, 0));
    }

    #[test]
    fn commuting_pair_is_two_u1() {
        let c = classify(&parse(&["iX.", "i.Z"], 2)).unwrap();
        assert_eq!(c.components.len(), 2);
        assert_eq!(c.total_dim, Some(2));
        assert_eq!(c.decomposition_string(), "so(2) ⊕ so(2)");
        assert_eq!(c.canonical_string(), "u(1) ⊕ u(1)");
    }

    #[test]
    fn so3_variants() {
        // two anticommuting generators
        let c = classify(&parse(&["iX", "iZ"], 1)).unwrap();
        let s = c.components[0].summand;
        assert_eq!((s.kind, s.k, s.log2_copies), (SummandKind::SoN, 3, 0));
        assert_eq!(c.total_dim, Some(3));

        // dependent triangle
        let c = classify(&parse(&["iX", "iY", "iZ"], 1)).unwrap();
        assert_eq!(c.total_dim, Some(3));
        assert_eq!(c.components[0].summand.k, 3);

        // independent triangle: two copies
        let c = classify(&parse(&["iX.", "iZ.", "iYX"], 2)).unwrap();
        let s = c.components[0].summand;
        assert_eq!((s.kind, s.k, s.log2_copies), (SummandKind::SoN, 3, 1));
        assert_eq!(c.total_dim, Some(6));
    }

    #[test]
    fn so5_instance() {
        let c = classify(&parse(&["iX.", "iZ.", "iXX", "i.Z"], 2)).unwrap();
        let s = c.components[0].summand;
        assert_eq!((s.kind, s.k, s.log2_copies), (SummandKind::SoN, 5, 0));
        assert_eq!(c.total_dim, Some(10));
        assert_eq!(c.canonical_string(), "sp(2)");
    }

    #[test]
    fn sp4_from_minus_sextuple() {
        // i-lifted single-qubit X and Z on three qubits plus iYYY: spans the
        // 6-dimensional minus-type space with a connected graph
        let c = classify(&parse(&["X..", ".X.", "..X", "Z..", ".Z.", "..Z", "iYYY"], 3)).unwrap();
        assert_eq!(c.components.len(), 1);
        let s = c.components[0].summand;
        assert_eq!((s.kind, s.k, s.log2_copies), (SummandKind::Sp, 3, 0));
        assert_eq!(c.components[0].branch, Branch::Natural);
        assert_eq!(c.total_dim, Some(36));
        assert_eq!(c.canonical_string(), "sp(4)");
    }

    #[test]
    fn su8_full_generation() {
        let gens = parse(
            &["X..", ".X.", "..X", "Z..", ".Z.", "..Z", "iYYY", "XX."],
            3,
        );
        let c = classify(&gens).unwrap();
        let s = c.components[0].summand;
        assert_eq!((s.kind, s.k, s.log2_copies), (SummandKind::Su, 3, 0));
        assert_eq!(c.total_dim, Some(63));
        let rep = check_generates_full(&gens, 3).unwrap();
        assert!(rep.full && rep.connected && rep.spans && rep.witness.is_some());
    }

    #[test]
    fn double_star_full_on_two_qubits() {
        let gens = parse(&["X.", "Z.", ".X", ".Z", "YY"], 2);
        let c = classify(&gens).unwrap();
        let s = c.components[0].summand;
        assert_eq!((s.kind, s.k, s.log2_copies), (SummandKind::SoN, 6, 0));
        assert_eq!(c.total_dim, Some(15));
        let rep = check_generates_full(&gens, 2).unwrap();
        assert!(rep.full);
        assert!(rep.witness.is_none(), "five generators admit no sextuple");
    }

    #[test]
    fn canonicalize_is_idempotent_and_dim_preserving() {
        for gens in [
            parse(&["iX", "iZ"], 1),
            qaoa_path(3),
            qaoa_cycle(3),
            parse(&["X..", ".X.", "..X", "Z..", ".Z.", "..Z", "iYYY"], 3),
        ] {
            let c = classify(&gens).unwrap();
            let c1 = canonicalize(&c);
            let c2 = canonicalize(&c1);
            assert_eq!(c1.total_dim, c.total_dim);
            assert_eq!(c1.summands(), c2.summands());
        }
    }

    #[test]
    fn witness_examples() {
        // fewer than six generators: no witness possible
        assert!(forbidden_witness(&classify(&qaoa_path(3)).unwrap().vectors).is_none());
        // the minus sextuple is its own witness
        let c = classify(&parse(&["X..", ".X.", "..X", "Z..", ".Z.", "..Z", "iYYY"], 3)).unwrap();
        let w = forbidden_witness(&c.vectors).unwrap();
        assert_eq!(w.len(), 6);
    }

    #[test]
    fn equiv_classes_examples() {
        // so(3) ⊕ so(3): closure has 6 points in 3 classes of 2
        let c = classify(&parse(&["iX.", "iZ.", "iYX"], 2)).unwrap();
        let s = oracle::closure(&c.vectors, 100).unwrap();
        let classes = equiv_classes(&s.points);
        assert_eq!(classes.len(), 3);
        assert!(classes.iter().all(|cl| cl.len() == 2));

        // simple su case: all singletons
        let c = classify(&parse(&["X..", ".X.", "..X", "Z..", ".Z.", "..Z", "iYYY", "XX."], 3))
            .unwrap();
        let s = oracle::closure(&c.vectors, 100).unwrap();
        assert!(equiv_classes(&s.points).iter().all(|cl| cl.len() == 1));
    }

    #[test]
    fn commuting_set_not_full() {
        let rep = check_generates_full(&parse(&["iX.", "i.X"], 2), 2).unwrap();
        assert!(!rep.full);
    }

    #[test]
    fn empty_input_rejected() {
        assert!(matches!(classify(&[]), Err(ClassifyError::EmptyInput)));
    }
}
